//! Transition graphs: a compact encoding of an embedded voltage dipole
//! D_n whose edge `e_i` carries voltage `i`.
//!
//! A transition graph of order n consists of two directed Hamiltonian
//! cycles on Z_n, the *solid* cycle C1 and the *dotted* cycle C2. The
//! solid successor of `i` is the successor of `e_i` in the rotation at the
//! black vertex; the dotted successor is the successor in the rotation at
//! the white vertex. Alternating cycles (solid, dotted, solid, ...) are
//! then exactly the base faces, and the net transition
//! `-v_1 + v_2 - v_3 + ... + v_k` of a cycle is the negated net voltage of
//! its face. Only the order of the net enters face counts, so the sign is
//! immaterial for genus.

use serde::{Deserialize, Serialize};

use crate::embedding::{genus_from_counts, EmbeddedGraph};
use crate::error::{validation, Result};
use crate::voltage::VoltageGraph;
use crate::zn::{reduce, CyclicElement};

/// Two directed Hamiltonian cycles on Z_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TransitionRepr", into = "TransitionRepr")]
pub struct TransitionGraph {
    n: u64,
    solid: Vec<u64>,
    dotted: Vec<u64>,
    solid_next: Vec<u64>,
    dotted_next: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct TransitionRepr {
    n: u64,
    solid: Vec<i64>,
    dotted: Vec<i64>,
}

impl TryFrom<TransitionRepr> for TransitionGraph {
    type Error = crate::Error;
    fn try_from(r: TransitionRepr) -> Result<Self> {
        TransitionGraph::new(r.n, &r.solid, &r.dotted)
    }
}

impl From<TransitionGraph> for TransitionRepr {
    fn from(t: TransitionGraph) -> Self {
        TransitionRepr {
            n: t.n,
            solid: t.solid.iter().map(|&x| x as i64).collect(),
            dotted: t.dotted.iter().map(|&x| x as i64).collect(),
        }
    }
}

/// An alternating cycle of a transition graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    /// `v_1, v_2, ...`: `v_1 => v_2` is solid, `v_2 -> v_3` dotted, etc.
    pub vertices: Vec<u64>,
    /// Net transition `-v_1 + v_2 - v_3 + ... + v_k`.
    pub net: CyclicElement,
}

fn successor_table(n: u64, cycle: &[u64], what: &str) -> Result<Vec<u64>> {
    if cycle.len() as u64 != n {
        return validation(format!(
            "{what} cycle has length {}, expected {n}",
            cycle.len()
        ));
    }
    let mut next = vec![u64::MAX; n as usize];
    for (i, &v) in cycle.iter().enumerate() {
        if next[v as usize] != u64::MAX {
            return validation(format!("{what} cycle visits {v} twice"));
        }
        next[v as usize] = cycle[(i + 1) % cycle.len()];
    }
    Ok(next)
}

impl TransitionGraph {
    /// Builds a transition graph from the two cycles, given as sequences of
    /// (possibly negative) integers that are reduced mod `n`.
    pub fn new(n: u64, solid: &[i64], dotted: &[i64]) -> Result<Self> {
        if n == 0 {
            return validation("transition graph order must be positive");
        }
        let solid: Vec<u64> = solid.iter().map(|&x| reduce(x, n)).collect();
        let dotted: Vec<u64> = dotted.iter().map(|&x| reduce(x, n)).collect();
        let solid_next = successor_table(n, &solid, "solid")?;
        let dotted_next = successor_table(n, &dotted, "dotted")?;
        Ok(TransitionGraph {
            n,
            solid,
            dotted,
            solid_next,
            dotted_next,
        })
    }

    /// The order n.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The solid cycle C1 as stored.
    pub fn solid(&self) -> &[u64] {
        &self.solid
    }

    /// The dotted cycle C2 as stored.
    pub fn dotted(&self) -> &[u64] {
        &self.dotted
    }

    /// Solid successor of `v`.
    pub fn solid_next(&self, v: u64) -> u64 {
        self.solid_next[v as usize]
    }

    /// Dotted successor of `v`.
    pub fn dotted_next(&self, v: u64) -> u64 {
        self.dotted_next[v as usize]
    }

    /// Decomposes the edge set into alternating cycles. Each cycle starts at
    /// the smallest-labelled solid tail not yet covered.
    pub fn alternating_cycles(&self) -> Vec<AlternatingCycle> {
        let n = self.n as usize;
        let mut used = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if used[start] {
                continue;
            }
            let mut vertices = Vec::new();
            let mut net: i64 = 0;
            let mut v = start as u64;
            loop {
                used[v as usize] = true;
                let w = self.solid_next(v);
                vertices.push(v);
                vertices.push(w);
                net += w as i64 - v as i64;
                v = self.dotted_next(w);
                if v as usize == start {
                    break;
                }
            }
            out.push(AlternatingCycle {
                vertices,
                net: CyclicElement::new(net, self.n),
            });
        }
        out
    }

    /// Sorted multiset of `(length, net)` over all alternating cycles; two
    /// transition graphs with equal profiles have equally structured faces.
    pub fn cycle_profile(&self) -> Vec<(usize, u64)> {
        let mut p: Vec<_> = self
            .alternating_cycles()
            .iter()
            .map(|c| (c.vertices.len(), c.net.value))
            .collect();
        p.sort_unstable();
        p
    }

    /// Sorted multiset of `(length, order of net)`; invariant under
    /// relabelling by units of Z_n and under sign conventions.
    pub fn order_profile(&self) -> Vec<(usize, u64)> {
        let mut p: Vec<_> = self
            .alternating_cycles()
            .iter()
            .map(|c| (c.vertices.len(), c.net.order()))
            .collect();
        p.sort_unstable();
        p
    }

    /// Genus of the derived K_{n,n} embedding computed from the alternating
    /// cycles alone: each cycle with net of order `o` yields `n / o` faces.
    pub fn genus_from_cycles(&self) -> Result<u64> {
        let f: u64 = self
            .alternating_cycles()
            .iter()
            .map(|c| self.n / c.net.order())
            .sum();
        let n = self.n as usize;
        genus_from_counts(2 * n, n * n, f as usize)
    }

    /// The embedded voltage dipole this graph encodes: base D_n, voltage
    /// `alpha(e_i) = i`, black rotation C1 and white rotation C2.
    pub fn to_voltage(&self) -> VoltageGraph {
        let rho_b: Vec<usize> = self.solid.iter().map(|&x| x as usize).collect();
        let rho_w: Vec<usize> = self.dotted.iter().map(|&x| x as usize).collect();
        let base =
            EmbeddedGraph::dipole(&rho_w, &rho_b).expect("transition cycles are permutations");
        let alpha: Vec<i64> = (0..self.n as i64).collect();
        VoltageGraph::new(base, self.n, &alpha).expect("dipole base with n voltages")
    }

    /// Inverse of [`TransitionGraph::to_voltage`] for a dipole whose edge
    /// `e_i` carries voltage `i`.
    pub fn from_voltage(vg: &VoltageGraph) -> Result<Self> {
        let n = vg.modulus();
        if vg.alpha().iter().enumerate().any(|(i, &a)| a != i as u64)
            || vg.alpha().len() as u64 != n
        {
            return validation("transition graphs encode dipoles with alpha(e_i) = i");
        }
        let conv = |v: Vec<usize>| v.into_iter().map(|x| x as i64).collect::<Vec<_>>();
        TransitionGraph::new(
            n,
            &conv(vg.base().rotation_edges(1)),
            &conv(vg.base().rotation_edges(0)),
        )
    }
}
