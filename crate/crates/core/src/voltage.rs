//! Voltage assignments over Z_n on an embedded dipole, and the derived
//! graphs and embeddings they generate.
//!
//! Derived vertices are named `w_a` (id `a`) and `b_a` (id `n + a`) for
//! `a` in Z_n. The lift of base edge `e` at `a` runs from `w_a` to
//! `b_{a + alpha(e)}` and has id `a * m + e`. Rotations lift fibrewise:
//! `w_a` sees the lifts at `a` in the white rotation order, and `b_c` sees,
//! in the black rotation order, the lifts arriving at `c`.

use crate::embedding::{EdgeEnd, EmbeddedGraph, End, Face, Multigraph};
use crate::error::{validation, Result};
use crate::zn::{gcd, reduce, zn_order, CyclicElement};

/// An embedded dipole together with a voltage on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageGraph {
    base: EmbeddedGraph,
    modulus: u64,
    alpha: Vec<u64>,
}

/// Summary of one base face: its size `k` and net voltage `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceSummary {
    /// Boundary length of the base face.
    pub size: usize,
    /// Net voltage of the base face.
    pub net: CyclicElement,
}

impl FaceSummary {
    /// `(number of derived faces, size of each)` generated by this face.
    pub fn derived_profile(&self) -> (u64, u64) {
        let ord = self.net.order();
        (self.net.modulus / ord, self.size as u64 * ord)
    }
}

impl VoltageGraph {
    /// Builds a voltage graph on a dipole base. Voltages are reduced mod `n`.
    pub fn new(base: EmbeddedGraph, modulus: u64, alpha: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return validation("modulus must be positive");
        }
        let g = base.graph();
        if g.white_count() != 1 || g.black_count() != 1 {
            return validation("the base of a voltage graph must be a dipole");
        }
        if alpha.len() != g.edge_count() {
            return validation(format!(
                "expected {} voltages, got {}",
                g.edge_count(),
                alpha.len()
            ));
        }
        let alpha = alpha.iter().map(|&a| reduce(a, modulus)).collect();
        Ok(VoltageGraph {
            base,
            modulus,
            alpha,
        })
    }

    /// The base embedding.
    pub fn base(&self) -> &EmbeddedGraph {
        &self.base
    }

    /// The voltage group order n.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduced voltages indexed by base edge id.
    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    /// Voltage of one base edge.
    pub fn voltage(&self, edge: usize) -> CyclicElement {
        CyclicElement {
            value: self.alpha[edge],
            modulus: self.modulus,
        }
    }

    /// Whether the voltages are a bijection from the edges onto Z_n.
    pub fn is_bijective(&self) -> bool {
        let n = self.modulus as usize;
        if self.alpha.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        self.alpha
            .iter()
            .all(|&a| !std::mem::replace(&mut seen[a as usize], true))
    }

    /// Signed sum of voltages along a base face boundary.
    pub fn net_voltage(&self, face: &Face) -> CyclicElement {
        let sum: i64 = face
            .boundary
            .iter()
            .map(|&(e, d)| d as i64 * self.alpha[e] as i64)
            .sum();
        CyclicElement::new(sum, self.modulus)
    }

    /// `(n / |g|, k * |g|)` for a base face of size `k` and net voltage `g`.
    pub fn derived_face_profile(&self, face: &Face) -> (u64, u64) {
        FaceSummary {
            size: face.size(),
            net: self.net_voltage(face),
        }
        .derived_profile()
    }

    /// Size and net voltage of every base face, in face-tracing order.
    pub fn face_summaries(&self) -> Vec<FaceSummary> {
        self.base
            .trace_faces()
            .iter()
            .map(|f| FaceSummary {
                size: f.size(),
                net: self.net_voltage(f),
            })
            .collect()
    }

    /// Number of faces of the derived embedding, computed from base faces.
    pub fn total_derived_faces(&self) -> u64 {
        self.face_summaries()
            .iter()
            .map(|s| s.derived_profile().0)
            .sum()
    }

    /// Genus of the derived embedding computed from the face counts alone.
    pub fn derived_genus_from_profile(&self) -> Result<u64> {
        let n = self.modulus as usize;
        let m = self.base.graph().edge_count();
        crate::embedding::genus_from_counts(2 * n, n * m, self.total_derived_faces() as usize)
    }

    /// Whether the faces generated by `face` are Hamiltonian cycles of the
    /// derived graph.
    pub fn lifts_to_hamiltonian(&self, face: &Face) -> bool {
        let steps: Vec<(usize, i8)> = face.boundary.clone();
        lift_is_hamiltonian(&steps, &self.alpha, self.modulus)
    }

    /// The derived multigraph.
    pub fn derive_graph(&self) -> Multigraph {
        let n = self.modulus as usize;
        let m = self.base.graph().edge_count();
        let mut ends = Vec::with_capacity(n * m);
        for a in 0..n {
            for e in 0..m {
                ends.push((a, n + (a + self.alpha[e] as usize) % n));
            }
        }
        Multigraph::new(n, n, &ends).unwrap_or_else(|_| disconnected_lift(n, ends))
    }

    /// The derived embedding, with rotations lifted fibrewise.
    pub fn derive_embedding(&self) -> Result<EmbeddedGraph> {
        let n = self.modulus as usize;
        let m = self.base.graph().edge_count();
        let graph = self.derive_graph();
        let rho_w = self.base.rotation_edges(0);
        let rho_b = self.base.rotation_edges(1);
        let mut rotations = Vec::with_capacity(2 * n);
        for a in 0..n {
            rotations.push(
                rho_w
                    .iter()
                    .map(|&e| EdgeEnd {
                        edge: a * m + e,
                        end: End::Tail,
                    })
                    .collect(),
            );
        }
        for c in 0..n {
            rotations.push(
                rho_b
                    .iter()
                    .map(|&e| {
                        let a = (c + n - self.alpha[e] as usize) % n;
                        EdgeEnd {
                            edge: a * m + e,
                            end: End::Head,
                        }
                    })
                    .collect(),
            );
        }
        EmbeddedGraph::new(graph, rotations)
    }
}

/// A derived graph of a dipole may be disconnected (e.g. all voltages in a
/// proper subgroup). It is still a well-defined multigraph; we bypass the
/// connectivity requirement of [`Multigraph::new`] only for this purpose.
fn disconnected_lift(n: usize, ends: Vec<(usize, usize)>) -> Multigraph {
    crate::embedding::multigraph_unchecked(n, n, &ends)
}

/// Whether the lift of a base dipole face, given by its boundary steps,
/// consists of Hamiltonian cycles of the derived graph.
///
/// Starting at `w_0`, the walk visits white vertices at the running
/// voltage offsets before each forward step, and black vertices before
/// each backward step. Going once around adds the net voltage `g`, so the
/// whole derived face visits those offsets shifted by the subgroup
/// generated by `g`. It is Hamiltonian exactly when both colour classes
/// contribute one offset per coset of that subgroup.
pub fn lift_is_hamiltonian(steps: &[(usize, i8)], alpha: &[u64], n: u64) -> bool {
    let mut white = Vec::new();
    let mut black = Vec::new();
    let mut cur: i64 = 0;
    for &(e, d) in steps {
        if d > 0 {
            white.push(cur);
        } else {
            black.push(cur);
        }
        cur += d as i64 * alpha[e] as i64;
    }
    let g = reduce(cur, n);
    let cosets = gcd(g, n); // gcd(0, n) = n
    let distinct = |offs: &[i64]| {
        if offs.len() as u64 != cosets {
            return false;
        }
        let mut seen = vec![false; cosets as usize];
        offs.iter()
            .all(|&o| !std::mem::replace(&mut seen[reduce(o, cosets) as usize], true))
    };
    debug_assert_eq!(n / zn_order(g as i64, n), cosets);
    distinct(&white) && distinct(&black)
}
