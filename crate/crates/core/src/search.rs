//! Exhaustive search over embedded voltage dipoles D_n with edge `e_i`
//! carrying voltage `i`: the independent ground truth for small n.
//!
//! Every cyclically symmetric K_{n,n} embedding arises from such a dipole,
//! so the search ranges over all pairs of cyclic rotations `(ρ_w, ρ_b)`.
//!
//! # Symmetry reduction
//!
//! The following maps on rotation pairs preserve the derived embedding up
//! to isomorphism (hence its genus and its Hamiltonian faces):
//!
//! - relabelling `x ↦ u·x + c` with `u` a unit of Z_n (a group
//!   automorphism followed by a shift of the black fibre);
//! - reversing both rotations (mirror image);
//! - swapping colours, `(ρ_w, ρ_b) ↦ (-ρ_b, -ρ_w)`.
//!
//! With reduction on, the white rotation ranges over one representative
//! per orbit of the affine and mirror maps, and the black rotation over
//! everything; every pair is equivalent to one examined pair. Work is split
//! into disjoint partitions `(white representative, second entry of ρ_b)`
//! processed in parallel and merged by a deterministic minimum.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddedGraph;
use crate::error::{domain, Result};
use crate::voltage::{lift_is_hamiltonian, VoltageGraph};
use crate::zn::gcd;

/// Largest n accepted by the search.
pub const MAX_N: u64 = 9;

/// A rotation pair, each a cyclic order of `0..n` starting with 0.
pub type RotationPair = (Vec<usize>, Vec<usize>);

/// Result of [`enumerate_min_genus`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Order n.
    pub n: u64,
    /// Minimum derived genus, `None` if no pair qualified.
    pub min_genus: Option<u64>,
    /// Lexicographically first pair `(ρ_w, ρ_b)` attaining the minimum.
    pub witness: Option<RotationPair>,
    /// Number of rotation pairs evaluated.
    pub counted: u64,
    /// Whether a Hamiltonian face was required.
    pub require_ham: bool,
    /// Whether symmetry reduction was used.
    pub symmetry_reduction: bool,
}

impl SearchResult {
    /// The witness as an embedded voltage graph.
    pub fn witness_voltage_graph(&self) -> Option<VoltageGraph> {
        let (w, b) = self.witness.as_ref()?;
        let base = EmbeddedGraph::dipole(w, b).ok()?;
        VoltageGraph::new(base, self.n, &(0..self.n as i64).collect::<Vec<_>>()).ok()
    }
}

/// All cyclic orders of `0..n`, each written starting with 0, in
/// lexicographic order.
pub fn cyclic_orders(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut v = vec![0];
        v.extend(&rest);
        out.push(v);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

/// Advances to the next lexicographic permutation; false at the last.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Rotates a cyclic sequence to start at 0.
fn normalise(seq: &[usize]) -> Vec<usize> {
    let i = seq.iter().position(|&x| x == 0).unwrap_or(0);
    seq[i..].iter().chain(&seq[..i]).copied().collect()
}

/// One element of the symmetry group acting on rotation pairs.
#[derive(Debug, Clone, Copy)]
struct Symmetry {
    unit: usize,
    shift: usize,
    mirror: bool,
    swap: bool,
}

fn symmetries(n: usize, with_swap: bool) -> Vec<Symmetry> {
    let mut out = Vec::new();
    for unit in (1..n.max(2)).filter(|&u| gcd(u as u64, n as u64) == 1 || n == 1) {
        for shift in 0..n {
            for mirror in [false, true] {
                for swap in if with_swap {
                    vec![false, true]
                } else {
                    vec![false]
                } {
                    out.push(Symmetry {
                        unit,
                        shift,
                        mirror,
                        swap,
                    });
                }
            }
        }
    }
    out
}

fn apply_seq(n: usize, seq: &[usize], s: Symmetry, negate: bool) -> Vec<usize> {
    let mut v: Vec<usize> = seq
        .iter()
        .map(|&x| {
            let y = if negate { (n - x) % n } else { x };
            (s.unit * y + s.shift) % n
        })
        .collect();
    if s.mirror {
        v.reverse();
    }
    normalise(&v)
}

fn apply(n: usize, (w, b): (&[usize], &[usize]), s: Symmetry) -> RotationPair {
    if s.swap {
        (apply_seq(n, b, s, true), apply_seq(n, w, s, true))
    } else {
        (apply_seq(n, w, s, false), apply_seq(n, b, s, false))
    }
}

/// Canonical representative of a rotation pair under relabelling by
/// `x ↦ u·x + c`, mirroring and colour swap: the lexicographically
/// smallest image.
pub fn canonical_reduce(n: usize, rho_w: &[usize], rho_b: &[usize]) -> RotationPair {
    symmetries(n, true)
        .into_iter()
        .map(|s| apply(n, (rho_w, rho_b), s))
        .min()
        .unwrap_or_else(|| (normalise(rho_w), normalise(rho_b)))
}

/// White rotations to enumerate: one per orbit of the affine and mirror
/// maps when reducing, all of them otherwise.
pub fn white_representatives(n: usize, reduce: bool) -> Vec<Vec<usize>> {
    let all = cyclic_orders(n);
    if !reduce {
        return all;
    }
    let syms = symmetries(n, false);
    all.into_iter()
        .filter(|w| syms.iter().all(|&s| apply_seq(n, w, s, false) >= *w))
        .collect()
}

/// Genus of the derived embedding and whether it has a Hamiltonian face,
/// for the dipole with rotations `rho_w`, `rho_b` and `α(e_i) = i`.
pub fn evaluate(rho_w: &[usize], rho_b: &[usize]) -> (u64, bool) {
    let n = rho_w.len();
    let mut succ_w = [0usize; 64];
    let mut succ_b = [0usize; 64];
    for i in 0..n {
        succ_w[rho_w[i]] = rho_w[(i + 1) % n];
        succ_b[rho_b[i]] = rho_b[(i + 1) % n];
    }
    let alpha: Vec<u64> = (0..n as u64).collect();
    let mut visited = [[false; 2]; 64];
    let mut derived_faces = 0u64;
    let mut ham = false;
    let mut steps: Vec<(usize, i8)> = Vec::with_capacity(2 * n);
    for e0 in 0..n {
        for (slot, d0) in [(0usize, 1i8), (1, -1)] {
            if visited[e0][slot] {
                continue;
            }
            steps.clear();
            let mut net: i64 = 0;
            let (mut e, mut d) = (e0, d0);
            loop {
                visited[e][if d > 0 { 0 } else { 1 }] = true;
                steps.push((e, d));
                net += d as i64 * e as i64;
                if d > 0 {
                    e = succ_b[e];
                    d = -1;
                } else {
                    e = succ_w[e];
                    d = 1;
                }
                if e == e0 && d == d0 {
                    break;
                }
            }
            let g = net.rem_euclid(n as i64) as u64;
            let cosets = gcd(g, n as u64);
            derived_faces += cosets;
            if !ham && steps.len() as u64 == 2 * cosets {
                ham = lift_is_hamiltonian(&steps, &alpha, n as u64);
            }
        }
    }
    let defect = 2 + (n * n) as i64 - 2 * n as i64 - derived_faces as i64;
    ((defect / 2) as u64, ham)
}

/// One unit of parallel work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    /// Index into [`white_representatives`].
    pub white: usize,
    /// Second entry of the black rotation (the first is 0).
    pub second: usize,
}

/// Result of one partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    /// The partition.
    pub partition: Partition,
    /// Best `(genus, ρ_w, ρ_b)` found, lexicographically smallest.
    pub best: Option<(u64, Vec<usize>, Vec<usize>)>,
    /// Pairs evaluated.
    pub counted: u64,
}

/// Disjoint, exhaustive list of partitions.
pub fn partitions(n: usize, reduce: bool) -> Vec<Partition> {
    let whites = white_representatives(n, reduce).len();
    (0..whites)
        .flat_map(|white| (1..n).map(move |second| Partition { white, second }))
        .collect()
}

/// Evaluates every black rotation with the given second entry against
/// the given white rotation.
pub fn search_partition(
    n: usize,
    whites: &[Vec<usize>],
    p: Partition,
    require_ham: bool,
) -> PartitionResult {
    let rho_w = &whites[p.white];
    let mut rest: Vec<usize> = (1..n).filter(|&x| x != p.second).collect();
    let mut best: Option<(u64, Vec<usize>, Vec<usize>)> = None;
    let mut counted = 0;
    let mut rho_b = vec![0; n];
    loop {
        rho_b[0] = 0;
        rho_b[1] = p.second;
        rho_b[2..].copy_from_slice(&rest);
        counted += 1;
        let (genus, ham) = evaluate(rho_w, &rho_b);
        if (ham || !require_ham) && best.as_ref().is_none_or(|b| genus < b.0) {
            best = Some((genus, rho_w.clone(), rho_b.clone()));
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    PartitionResult {
        partition: p,
        best,
        counted,
    }
}

/// Merges partition results deterministically.
pub fn merge(n: u64, require_ham: bool, reduce: bool, results: &[PartitionResult]) -> SearchResult {
    let best = results.iter().filter_map(|r| r.best.clone()).min();
    SearchResult {
        n,
        min_genus: best.as_ref().map(|b| b.0),
        witness: best.map(|(_, w, b)| (w, b)),
        counted: results.iter().map(|r| r.counted).sum(),
        require_ham,
        symmetry_reduction: reduce,
    }
}

fn check_range(n: u64) -> Result<()> {
    if !(3..=MAX_N).contains(&n) {
        return domain(format!(
            "exhaustive search supports 3 <= n <= {MAX_N}, got {n}"
        ));
    }
    Ok(())
}

/// Minimum derived genus over all rotation pairs of D_n (optionally only
/// those whose derived embedding has a Hamiltonian face).
pub fn enumerate_min_genus(
    n: u64,
    require_ham: bool,
    symmetry_reduction: bool,
) -> Result<SearchResult> {
    check_range(n)?;
    let nu = n as usize;
    let whites = white_representatives(nu, symmetry_reduction);
    let results: Vec<PartitionResult> = partitions(nu, symmetry_reduction)
        .into_par_iter()
        .map(|p| search_partition(nu, &whites, p, require_ham))
        .collect();
    Ok(merge(n, require_ham, symmetry_reduction, &results))
}

/// Number of canonical classes per genus, over classes whose derived
/// embedding qualifies (has a Hamiltonian face when `require_ham`).
pub fn histogram(n: u64, require_ham: bool) -> Result<BTreeMap<u64, u64>> {
    check_range(n)?;
    let nu = n as usize;
    let whites = white_representatives(nu, true);
    let classes: BTreeSet<(u64, RotationPair)> = whites
        .par_iter()
        .flat_map_iter(|w| {
            cyclic_orders(nu).into_iter().filter_map(move |b| {
                let (genus, ham) = evaluate(w, &b);
                (ham || !require_ham).then(|| (genus, canonical_reduce(nu, w, &b)))
            })
        })
        .collect();
    let mut hist = BTreeMap::new();
    for (g, _) in classes {
        *hist.entry(g).or_insert(0) += 1;
    }
    Ok(hist)
}
