//! Independent oracles shared by the integration tests and the
//! acceptance harness.
//!
//! Nothing here calls the library's face tracer: faces are recomputed as
//! orbits of the dart permutation `rotation ∘ flip`, and closed forms are
//! evaluated case by case from their definitions.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symgenus::bounds::{aggregate_excess, face_excess};
use symgenus::search::evaluate;
use symgenus::{EmbeddedGraph, End, TransitionGraph, VoltageGraph};

/// Face data recomputed from dart orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFaces {
    /// Boundary length of every face, sorted.
    pub sizes: Vec<usize>,
    /// Number of faces whose corners visit every vertex exactly once.
    pub hamiltonian: usize,
}

/// Dart `2e` is the tail end of edge `e`, dart `2e + 1` its head end.
fn dart(edge: usize, end: End) -> usize {
    2 * edge + if end == End::Head { 1 } else { 0 }
}

/// Faces as orbits of `φ = ρ ∘ θ`, where `θ` flips a dart to the other end
/// of its edge and `ρ` moves to the next dart in the rotation.
pub fn oracle_faces(emb: &EmbeddedGraph) -> OracleFaces {
    let g = emb.graph();
    let darts = 2 * g.edge_count();
    let mut rho = vec![usize::MAX; darts];
    let mut vertex = vec![usize::MAX; darts];
    for (v, rot) in emb.rotations().iter().enumerate() {
        for (i, ee) in rot.iter().enumerate() {
            let next = rot[(i + 1) % rot.len()];
            rho[dart(ee.edge, ee.end)] = dart(next.edge, next.end);
            vertex[dart(ee.edge, ee.end)] = v;
        }
    }
    let nv = g.vertex_count();
    let mut seen = vec![false; darts];
    let mut sizes = Vec::new();
    let mut hamiltonian = 0;
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        let mut corners = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            corners.push(vertex[d]);
            d = rho[d ^ 1];
        }
        // Each corner is one boundary vertex; a face of length k has k corners.
        let mut hit = vec![false; nv];
        if corners.len() == nv
            && corners
                .iter()
                .all(|&v| !std::mem::replace(&mut hit[v], true))
        {
            hamiltonian += 1;
        }
        sizes.push(corners.len());
    }
    sizes.sort_unstable();
    OracleFaces { sizes, hamiltonian }
}

/// `2 - V + E - F`, the Euler defect (twice the genus when connected).
pub fn euler_defect(emb: &EmbeddedGraph, faces: usize) -> i64 {
    let g = emb.graph();
    2 - g.vertex_count() as i64 + g.edge_count() as i64 - faces as i64
}

/// Smallest prime divisor by trial division.
pub fn p1(n: u64) -> u64 {
    (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2")
}

/// Combinatorial bound, written out from the five cases.
pub fn oracle_l_c(n: u64) -> u64 {
    let q = n * (n - 1) / 4;
    if n.is_multiple_of(2) {
        return n * (n - 2) / 4;
    }
    let p = p1(n);
    match n % 4 {
        3 if p == n || n.is_multiple_of(p * p) => q + 1 - (n / p).div_ceil(2),
        3 => q + 1 - (p + n / p) / 2,
        _ if n.is_multiple_of(3) && !n.is_multiple_of(9) => q - 1,
        _ => q,
    }
}

/// Rotational bound (formula value) from the four residues.
pub fn oracle_l_c_star(n: u64) -> u64 {
    match n % 4 {
        0 => n * n / 4 - 1,
        1 => n * (n - 1) / 4,
        2 => n * (n - 2) / 4,
        _ => n * (n + 1) / 4 - 1,
    }
}

/// Smallest attainable genus in the rotational model.
pub fn oracle_l_c_star_attainable(n: u64) -> u64 {
    if n == 4 {
        4
    } else {
        oracle_l_c_star(n)
    }
}

/// Fixed-point-free bound from the four residues.
pub fn oracle_l_c_star_tilde(n: u64) -> u64 {
    match n % 4 {
        0 => (n - 2) * (n - 2) / 4,
        1 => n * (n - 1) / 4,
        2 => n * (n - 2) / 4,
        _ => (n * n - 3 * n + 4) / 4,
    }
}

/// A uniformly random cyclic order of `0..n`, written from a random start.
pub fn random_order(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Runs every structural identity on `trials` random rotation pairs of
/// D_n with voltages `α(e_i) = i`, returning a description of each
/// violation.
pub fn property_violations(n: usize, trials: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
    let nn = n as u64;
    let mut bad = Vec::new();
    for trial in 0..trials {
        let (w, b) = (random_order(&mut rng, n), random_order(&mut rng, n));
        let mut fail =
            |what: &str| bad.push(format!("n={n} trial={trial} w={w:?} b={b:?}: {what}"));
        let base = EmbeddedGraph::dipole(&w, &b).expect("random rotations are valid");
        let vg = VoltageGraph::new(base.clone(), nn, &(0..n as i64).collect::<Vec<_>>()).unwrap();
        let base_faces = base.trace_faces();
        let base_oracle = oracle_faces(&base);

        // Face-trace closure and agreement with the dart-orbit oracle.
        let mut sizes: Vec<usize> = base_faces.iter().map(|f| f.size()).collect();
        sizes.sort_unstable();
        if sizes != base_oracle.sizes {
            fail("base face sizes differ from the dart-orbit oracle");
        }
        if sizes.iter().sum::<usize>() != 2 * n {
            fail("base face sizes do not sum to 2n");
        }
        // Parity.
        if sizes.iter().any(|s| s % 2 != 0) {
            fail("odd base face");
        }
        // Euler integrality and genus range.
        let defect = euler_defect(&base, sizes.len());
        if defect % 2 != 0 || defect < 0 {
            fail("base Euler defect is odd or negative");
        }
        let g_base = base.euler_genus().unwrap();
        if g_base as i64 != defect / 2 || g_base > (nn - 1) / 2 {
            fail("base genus out of range");
        }
        // Kirchhoff identities.
        let nets: Vec<u64> = base_faces.iter().map(|f| vg.net_voltage(f).value).collect();
        if nets.iter().sum::<u64>() % nn != 0 {
            fail("net voltages do not sum to 0 mod n");
        }

        // Derived embedding against the oracle.
        let derived = vg.derive_embedding().unwrap();
        let d_oracle = oracle_faces(&derived);
        if d_oracle.sizes.iter().sum::<usize>() != 2 * n * n {
            fail("derived face sizes do not sum to 2E");
        }
        if d_oracle.sizes.iter().any(|s| s % 2 != 0) {
            fail("odd derived face");
        }
        let d_defect = euler_defect(&derived, d_oracle.sizes.len());
        if d_defect % 2 != 0 {
            fail("derived Euler defect is odd");
        }
        let genus = derived.euler_genus().unwrap();
        if genus as i64 != d_defect / 2 {
            fail("derived genus differs from the oracle");
        }
        if vg.total_derived_faces() as usize != d_oracle.sizes.len() {
            fail("face counting from net voltages differs from traced faces");
        }
        // Predicted derived face sizes, from (n/|g|) faces of size k|g|.
        let mut predicted: Vec<usize> = Vec::new();
        for (f, &g) in base_faces.iter().zip(&nets) {
            let ord = nn / gcd(g, nn);
            predicted.extend(std::iter::repeat_n(
                f.size() * ord as usize,
                (nn / ord) as usize,
            ));
        }
        predicted.sort_unstable();
        if predicted != d_oracle.sizes {
            fail("derived face profile differs from traced faces");
        }
        if derived.hamiltonian_faces().len() != d_oracle.hamiltonian {
            fail("Hamiltonian face count differs from the oracle");
        }
        if evaluate(&w, &b) != (genus, d_oracle.hamiltonian > 0) {
            fail("search evaluator disagrees with the oracle");
        }

        // Alternating cycles of the transition graph.
        let tg = TransitionGraph::from_voltage(&vg).unwrap();
        if tg.genus_from_cycles().unwrap() != genus {
            fail("alternating-cycle genus differs from face-traced genus");
        }
        let mut cyc: Vec<(usize, u64)> = tg
            .alternating_cycles()
            .iter()
            .map(|c| (c.vertices.len(), c.net.order()))
            .collect();
        let mut fac: Vec<(usize, u64)> = base_faces
            .iter()
            .zip(&nets)
            .map(|(f, &g)| (f.size(), nn / gcd(g, nn)))
            .collect();
        cyc.sort_unstable();
        fac.sort_unstable();
        if cyc != fac {
            fail("alternating cycles do not match base faces");
        }

        // Aggregate excess.
        let ex: i64 = base_faces
            .iter()
            .map(|f| face_excess(f.size() as u64, vg.net_voltage(f)))
            .sum();
        let ex_oracle: i64 = d_oracle.sizes.iter().map(|&s| s as i64 - 4).sum();
        let closed = 8 * genus as i64 - 2 * (nn * nn) as i64 + 8 * nn as i64 - 8;
        if ex != ex_oracle || ex != closed || aggregate_excess(nn, genus) != closed {
            fail("excess identity violated");
        }
    }
    bad
}
