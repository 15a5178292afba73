//! Ring-road building blocks and the closed base embeddings derived from
//! them.
//!
//! A block `B(n)` is a rectangle `abcd` with handles, carrying an embedded
//! graph whose vertices are
//!
//! - `n - 1` points `π_1 .. π_{n-1}` on `cd` (listed from `c` to `d` as
//!   `π_{n-1}, ..., π_1`), the point `π_i` labelled by the value `pi[i]`;
//! - `n - 1` points `π'_1 .. π'_{n-1}` on `ab` (from `a` to `b`), labelled
//!   `pi[i] - 1`;
//! - `v_w` and `v_b` on `da`, in the order `d, v_w, v_b, a`.
//!
//! Interior edges are `π'_j v_b` for the point labelled 0, `v_w π_i` for
//! every `i`, and `π'_i π_j` whenever both are labelled `k`,
//! `1 <= k <= n-2`. The block genus is computed by capping the boundary
//! rectangle with a disc and face-tracing the resulting closed map.
//!
//! Identifying `ab` with `dc` and capping the two holes turns the block
//! into a closed surface of the same genus carrying a dipole `M_1(n)`,
//! whose edge `e_k` (`k >= 1`) is the lane path starting with `v_w π_i`,
//! `pi[i] = k`, and `e_0` is the boundary edge `v_w v_b`.

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddedGraph;
use crate::error::{domain, internal, Result};

/// A rotation system on an arbitrary (not necessarily bipartite) graph.
/// Dart `2e` runs along edge `e` from its first to its second endpoint,
/// dart `2e + 1` the other way.
#[derive(Debug, Clone)]
pub struct DartMap {
    ends: Vec<(usize, usize)>,
    rotations: Vec<Vec<usize>>,
}

impl DartMap {
    /// Builds a map from edge endpoints and per-vertex cyclic dart orders.
    pub fn new(ends: Vec<(usize, usize)>, rotations: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; 2 * ends.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                let (a, b) = ends[d / 2];
                let origin = if d % 2 == 0 { a } else { b };
                if origin != v || std::mem::replace(&mut seen[d], true) {
                    return internal(format!("dart {d} misplaced at vertex {v}"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return internal("rotation system misses a dart");
        }
        Ok(DartMap { ends, rotations })
    }

    /// Face boundaries as dart sequences.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let nd = 2 * self.ends.len();
        let mut next_at = vec![0usize; nd];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                next_at[d] = rot[(i + 1) % rot.len()];
            }
        }
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = next_at[d ^ 1];
            }
            faces.push(face);
        }
        faces
    }

    /// Orientable genus of the closed map.
    pub fn genus(&self) -> Result<u64> {
        crate::embedding::genus_from_counts(
            self.rotations.len(),
            self.ends.len(),
            self.faces().len(),
        )
    }
}

/// One point of a block, as named in rotation listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockPoint {
    /// `π_i` on segment `cd` (1-based index).
    Pi(usize),
    /// `π'_i` on segment `ab` (1-based index).
    PiPrime(usize),
    /// The white point.
    Vw,
    /// The black point.
    Vb,
}

/// A ring-road block: the permutations `π`, `π'`, the interior rotation
/// listings and the genus of the block surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingBlock {
    /// Number of motorways n.
    pub n: u64,
    /// `π_1 .. π_{n-1}`, a permutation of `1..n-1`.
    pub pi: Vec<u64>,
    /// `π'_1 .. π'_{n-1}` with `π'_i = π_i - 1`.
    pub pi_prime: Vec<u64>,
    /// Interior neighbours of each point, listed from the boundary
    /// successor side to the boundary predecessor side.
    pub rotations: Vec<(BlockPoint, Vec<BlockPoint>)>,
    /// Genus of the block surface.
    pub genus: u64,
}

impl RingBlock {
    fn listing(&self, p: BlockPoint) -> &[BlockPoint] {
        self.rotations
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, l)| l.as_slice())
            .unwrap_or(&[])
    }

    /// Index `i` of the point `π_i` carrying value `k`.
    fn pi_index(&self, k: u64) -> usize {
        self.pi.iter().position(|&x| x == k).expect("value present") + 1
    }

    /// Whether the lane group at value `k` is listed with `v_w` first
    /// at its `π` point.
    fn vw_first(&self, k: u64) -> bool {
        self.listing(BlockPoint::Pi(self.pi_index(k))).first() == Some(&BlockPoint::Vw)
    }

    /// The edge labels around `v_w` after closing the block, starting at
    /// `e_0`.
    pub fn white_rotation(&self) -> Vec<usize> {
        let mut r = vec![0];
        for p in self.listing(BlockPoint::Vw) {
            if let BlockPoint::Pi(i) = p {
                r.push(self.pi[i - 1] as usize);
            }
        }
        r
    }

    /// The edge labels around `v_b` after closing the block: lanes joined
    /// from the right are prepended, lanes joined from the left appended,
    /// starting from the last lane and ending with `e_0`.
    pub fn black_rotation(&self) -> Vec<usize> {
        let n = self.n as usize;
        let mut lanes = std::collections::VecDeque::from([n - 1]);
        for k in (1..n - 1).rev() {
            if self.vw_first(k as u64) {
                lanes.push_front(k);
            } else {
                lanes.push_back(k);
            }
        }
        let mut r: Vec<usize> = lanes.into_iter().collect();
        r.push(0);
        r
    }

    /// The closed block map (boundary capped by a disc).
    pub fn closed_map(&self) -> Result<DartMap> {
        block_map(self)
    }
}

/// `π` for the given `n`: blocks of four `4t+1, 4t+4, 4t+3, 4t+2`, plus a
/// final `n - 1` when `n ≡ 2 (mod 4)`.
pub fn ring_permutation(n: u64) -> Vec<u64> {
    let mut pi = Vec::with_capacity(n as usize - 1);
    for t in 0..n / 4 {
        pi.extend([4 * t + 1, 4 * t + 4, 4 * t + 3, 4 * t + 2]);
    }
    if n % 4 == 2 {
        pi.push(n - 1);
    }
    pi
}

/// Order of the `π` points around `v_w` (1-based indices).
fn vw_listing(n: u64) -> Vec<usize> {
    match n {
        5 => vec![3, 2, 4, 1],
        6 => vec![3, 2, 5, 4, 1],
        _ => {
            let mut l = vec![3, 2];
            l.extend(vw_listing(n - 4).into_iter().map(|i| i + 4));
            l.extend([4, 1]);
            l
        }
    }
}

/// Builds the block `B(n)` for `n ≥ 5`, `n ≡ 1, 2 (mod 4)`.
pub fn ring_block(n: u64) -> Result<RingBlock> {
    if n < 5 || !matches!(n % 4, 1 | 2) {
        return domain(format!(
            "ring blocks exist for n >= 5 with n ≡ 1, 2 (mod 4), got {n}"
        ));
    }
    use BlockPoint::*;
    let pi = ring_permutation(n);
    let pi_prime: Vec<u64> = pi.iter().map(|&x| x - 1).collect();
    let groups = (n as usize - 1) / 4;
    let mut rotations = Vec::new();
    for t in 0..groups {
        let b = 4 * t;
        let last = t + 1 == groups;
        rotations.push((Pi(b + 1), vec![Vw, PiPrime(b + 4)]));
        if n % 4 == 1 && last {
            rotations.push((Pi(b + 2), vec![Vw]));
        } else {
            rotations.push((Pi(b + 2), vec![PiPrime(b + 5), Vw]));
        }
        rotations.push((Pi(b + 3), vec![Vw, PiPrime(b + 2)]));
        rotations.push((Pi(b + 4), vec![PiPrime(b + 3), Vw]));
        rotations.push((PiPrime(b + 2), vec![Pi(b + 3)]));
        rotations.push((PiPrime(b + 3), vec![Pi(b + 4)]));
        rotations.push((PiPrime(b + 4), vec![Pi(b + 1)]));
        if !(n % 4 == 1 && last) {
            rotations.push((PiPrime(b + 5), vec![Pi(b + 2)]));
        }
    }
    rotations.push((PiPrime(1), vec![Vb]));
    if n % 4 == 2 {
        rotations.push((Pi(n as usize - 1), vec![Vw]));
    }
    rotations.push((Vw, vw_listing(n).into_iter().map(Pi).collect()));
    rotations.push((Vb, vec![PiPrime(1)]));
    let mut block = RingBlock {
        n,
        pi,
        pi_prime,
        rotations,
        genus: 0,
    };
    check_block_consistency(&block)?;
    block.genus = block.closed_map()?.genus()?;
    Ok(block)
}

/// Every interior edge must be listed at both of its endpoints and join
/// points whose labels match.
fn check_block_consistency(b: &RingBlock) -> Result<()> {
    use BlockPoint::*;
    for (p, list) in &b.rotations {
        for q in list {
            if !b.listing(*q).contains(p) {
                return internal(format!("block edge {p:?}-{q:?} listed only at one end"));
            }
            if let (PiPrime(i), Pi(j)) = (p, q) {
                if b.pi_prime[i - 1] != b.pi[j - 1] {
                    return internal(format!(
                        "ring edge joins labels {} and {}",
                        b.pi_prime[i - 1],
                        b.pi[j - 1]
                    ));
                }
            }
        }
    }
    Ok(())
}

fn block_map(b: &RingBlock) -> Result<DartMap> {
    use BlockPoint::*;
    let m = b.n as usize - 1;
    // Vertex ids: a, b, c, d, then π'_1..π'_m, π_1..π_m, v_w, v_b.
    let (va, vb_corner, vc, vd) = (0usize, 1usize, 2usize, 3usize);
    let id = |p: BlockPoint| match p {
        PiPrime(i) => 3 + i,
        Pi(i) => 3 + m + i,
        Vw => 4 + 2 * m,
        Vb => 5 + 2 * m,
    };
    let nv = 6 + 2 * m;
    let mut boundary = vec![va];
    boundary.extend((1..=m).map(|i| id(PiPrime(i))));
    boundary.extend([vb_corner, vc]);
    boundary.extend((1..=m).rev().map(|i| id(Pi(i))));
    boundary.extend([vd, id(Vw), id(Vb)]);

    let mut ends: Vec<(usize, usize)> = Vec::new();
    let mut succ_dart = vec![usize::MAX; nv];
    let mut pred_dart = vec![usize::MAX; nv];
    for (i, &x) in boundary.iter().enumerate() {
        let y = boundary[(i + 1) % boundary.len()];
        let e = ends.len();
        ends.push((x, y));
        succ_dart[x] = 2 * e;
        pred_dart[y] = 2 * e + 1;
    }
    let mut interior: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut edge_of = std::collections::HashMap::new();
    for (p, list) in &b.rotations {
        for q in list {
            let (x, y) = (id(*p), id(*q));
            let key = (x.min(y), x.max(y));
            let e = *edge_of.entry(key).or_insert_with(|| {
                ends.push(key);
                ends.len() - 1
            });
            let dart = if ends[e].0 == x { 2 * e } else { 2 * e + 1 };
            interior[x].push(dart);
        }
    }
    let rotations = (0..nv)
        .map(|v| {
            let mut r = vec![succ_dart[v]];
            r.extend(&interior[v]);
            r.push(pred_dart[v]);
            r
        })
        .collect();
    DartMap::new(ends, rotations)
}

/// The closed dipole `M_1(n)` obtained from the block `B(n)`; edge `e_k`
/// has id `k`.
pub fn m1_embedding(n: u64) -> Result<(EmbeddedGraph, RingBlock)> {
    let block = ring_block(n)?;
    let emb = EmbeddedGraph::dipole(&block.white_rotation(), &block.black_rotation())?;
    let g = emb.euler_genus()?;
    if g != block.genus {
        return internal(format!(
            "closed dipole genus {g} differs from block genus {} at n={n}",
            block.genus
        ));
    }
    Ok((emb, block))
}
