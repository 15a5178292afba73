//! Cut systems realising the minimum genus of n-fold rotationally
//! symmetric complete interchanges whose rotation axis meets the surface.
//!
//! | `n mod 4` | base                               | arcs |
//! |-----------|------------------------------------|------|
//! | 1, 2      | closed block dipole `M_1(n)`       | 1    |
//! | 3         | `M_1(n-1)` plus an edge `e_{-1}`   | 2    |
//! | 0         | `M_1(n-2)` with `e_{-1}, e_{-2}` added and `e_2` rerouted | 2 |
//!
//! plus explicit planar systems for `n = 2, 3` and the stored exception
//! for `n = 4` (see [`crate::exception`]).
//!
//! Edge ids are chosen so that edge `i` always receives voltage `i`.

use crate::bounds::l_c_star;
use crate::cut::{rh_genus, CutSystem};
use crate::embedding::EmbeddedGraph;
use crate::error::{domain, internal, Result};
use crate::ring::m1_embedding;

/// The closed block dipole `M_1(k)` (`k ≡ 1, 2 mod 4`, `k >= 5`) with
/// one cut arc crossed `j` times by edge `e_j`, over Z_modulus.
pub fn block_system(k: u64, modulus: u64) -> Result<CutSystem> {
    let (base, _) = m1_embedding(k)?;
    let crossings = (0..k as i64).map(|j| vec![j]).collect();
    CutSystem::from_crossings(base, modulus, crossings)
}

/// `M_1(n)` with its single cut arc, for `n ≡ 2 (mod 4)`, `n >= 6`.
pub fn base_m1(n: u64) -> Result<CutSystem> {
    if n % 4 != 2 || n < 6 {
        return domain(format!("base_m1 needs n ≡ 2 (mod 4), n >= 6, got {n}"));
    }
    block_system(n, n)
}

fn insert_after(seq: &mut Vec<usize>, anchor: usize, x: usize) {
    let i = seq
        .iter()
        .position(|&y| y == anchor)
        .expect("anchor present");
    seq.insert(i + 1, x);
}

fn insert_before(seq: &mut Vec<usize>, anchor: usize, x: usize) {
    let i = seq
        .iter()
        .position(|&y| y == anchor)
        .expect("anchor present");
    seq.insert(i, x);
}

/// A cut system for `n >= 2`, `n != 4` with bijective voltages whose
/// symmetric surface has genus `L_C*(n)`. For `n = 4` the stored
/// exception of genus 4 is returned.
pub fn construct_3d(n: u64) -> Result<CutSystem> {
    let cs = match n {
        0 | 1 => return domain(format!("construct_3d needs n >= 2, got {n}")),
        2 => CutSystem::from_crossings(
            EmbeddedGraph::dipole(&[0, 1], &[1, 0])?,
            2,
            vec![vec![0], vec![1]],
        )?,
        3 => CutSystem::from_crossings(
            EmbeddedGraph::dipole(&[0, 1, 2], &[2, 1, 0])?,
            3,
            vec![vec![0, -1], vec![1, 0], vec![0, 0]],
        )?,
        4 => crate::exception::n4_witness(),
        _ if matches!(n % 4, 1 | 2) => block_system(n, n)?,
        _ if n % 4 == 3 => {
            let (m1, _) = m1_embedding(n - 1)?;
            let e_minus1 = n as usize - 1;
            let mut rho_w = m1.rotation_edges(0);
            let mut rho_b = m1.rotation_edges(1);
            insert_after(&mut rho_w, 0, e_minus1);
            insert_before(&mut rho_b, 0, e_minus1);
            let mut crossings: Vec<Vec<i64>> = (0..n as i64 - 1).map(|k| vec![k, 0]).collect();
            crossings.push(vec![0, -1]);
            CutSystem::from_crossings(EmbeddedGraph::dipole(&rho_w, &rho_b)?, n, crossings)?
        }
        _ => {
            let (m1, _) = m1_embedding(n - 2)?;
            let (e_m1, e_m2, e_2p) = (n as usize - 1, n as usize - 2, 2usize);
            let mut rho_w: Vec<usize> = m1
                .rotation_edges(0)
                .into_iter()
                .filter(|&e| e != 2)
                .collect();
            let mut rho_b: Vec<usize> = m1
                .rotation_edges(1)
                .into_iter()
                .filter(|&e| e != 2)
                .collect();
            insert_after(&mut rho_w, 0, e_m1);
            insert_after(&mut rho_w, e_m1, e_m2);
            insert_after(&mut rho_w, e_m2, e_2p);
            insert_before(&mut rho_b, 0, e_m1);
            insert_after(&mut rho_b, 3, e_2p);
            insert_after(&mut rho_b, 1, e_m2);
            let mut crossings: Vec<Vec<i64>> = (0..n as i64).map(|k| vec![k, 0]).collect();
            crossings[e_2p] = vec![3, -1];
            crossings[e_m2] = vec![-1, -1];
            crossings[e_m1] = vec![0, -1];
            CutSystem::from_crossings(EmbeddedGraph::dipole(&rho_w, &rho_b)?, n, crossings)?
        }
    };
    let rep = cs.validate()?;
    let want = l_c_star(n)?.attainable;
    let got = rh_genus(rep.base_genus, n, rep.arcs as u64)?;
    if !rep.bijective || got != want {
        return internal(format!(
            "3d construction for n={n}: bijective={} genus {got}, expected {want}",
            rep.bijective
        ));
    }
    Ok(cs)
}
