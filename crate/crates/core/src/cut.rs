//! Crossing-signature model of n-fold rotational symmetry.
//!
//! A [`CutSystem`] is an embedded dipole (the quotient surface) together
//! with cut curves, recorded only by the faces containing their endpoints
//! and by the signed number of times each edge crosses each curve. The
//! voltage of an edge is its total signed crossing number mod n, and the
//! symmetric surface has genus `n·g + (n-1)(t-1)` for a base of genus `g`
//! with `t` cut arcs.
//!
//! # Consistency rule
//!
//! Going once around a face boundary, the signed crossings with a curve
//! add up to the number of that curve's endpoints inside the face, counted
//! `-1` for the start and `+1` for the end. For a 2-face bounded by `e1`
//! and `e2` this says `σ(e1, c) = σ(e2, c)` when `c` has no endpoint in the
//! face and `|σ(e1, c) - σ(e2, c)| = 1` when it has exactly one.

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddedGraph;
use crate::error::{validation, Error, Result};
use crate::voltage::VoltageGraph;
use crate::zn::reduce;

/// A cut curve: an arc with endpoints in two (possibly equal) base faces,
/// or a closed loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CutCurve {
    /// An arc from a point in face `endpoints[0]` to a point in face
    /// `endpoints[1]` (face ids in face-tracing order).
    Arc {
        /// Start and end faces.
        endpoints: [usize; 2],
    },
    /// A closed curve.
    Loop,
}

/// A base dipole embedding with cut curves and signed crossing counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSystem {
    /// Quotient embedding (a dipole).
    pub base: EmbeddedGraph,
    /// Order n of the rotation.
    pub modulus: u64,
    /// Cut curves.
    pub curves: Vec<CutCurve>,
    /// `crossings[e][c]` is the signed crossing number `σ(e, c)`.
    pub crossings: Vec<Vec<i64>>,
}

/// Outcome of [`CutSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Number of arcs t.
    pub arcs: usize,
    /// Genus of the base embedding.
    pub base_genus: u64,
    /// Voltage of every edge.
    pub alpha: Vec<u64>,
    /// Whether the voltages are a bijection onto Z_n.
    pub bijective: bool,
    /// `n·g + (n-1)(t-1)`.
    pub rh_genus: i64,
    /// Note on what could and could not be checked.
    pub note: String,
}

/// `n·g + (n-1)(t-1)`; an error when negative (only possible for a
/// sphere with no arcs, which admits no such symmetric surface).
pub fn rh_genus(base_genus: u64, n: u64, t: u64) -> Result<u64> {
    let v = n as i64 * base_genus as i64 + (n as i64 - 1) * (t as i64 - 1);
    if v < 0 {
        return Err(Error::Infeasible(format!(
            "negative genus {v} for g={base_genus}, n={n}, t={t}"
        )));
    }
    Ok(v as u64)
}

impl CutSystem {
    /// Number of arcs t.
    pub fn arc_count(&self) -> usize {
        self.curves
            .iter()
            .filter(|c| matches!(c, CutCurve::Arc { .. }))
            .count()
    }

    /// Expected boundary sum of curve `c` around face `f`.
    fn endpoint_signature(&self, c: usize, f: usize) -> i64 {
        match self.curves[c] {
            CutCurve::Loop => 0,
            CutCurve::Arc { endpoints: [s, e] } => (f == e) as i64 - (f == s) as i64,
        }
    }

    /// Checks the shape of the data and the consistency rule for every
    /// face and curve.
    pub fn validate(&self) -> Result<ValidationReport> {
        let m = self.base.graph().edge_count();
        if self.modulus < 1 {
            return validation("modulus must be positive");
        }
        if self.crossings.len() != m || self.crossings.iter().any(|r| r.len() != self.curves.len())
        {
            return validation(format!(
                "crossing table must be {m} edges x {} curves",
                self.curves.len()
            ));
        }
        let faces = self.base.trace_faces();
        for (ci, c) in self.curves.iter().enumerate() {
            if let CutCurve::Arc { endpoints } = c {
                if endpoints.iter().any(|&f| f >= faces.len()) {
                    return validation(format!("curve {ci} has an endpoint in nonexistent face"));
                }
            }
        }
        for (fi, face) in faces.iter().enumerate() {
            for ci in 0..self.curves.len() {
                let sum: i64 = face
                    .boundary
                    .iter()
                    .map(|&(e, d)| d as i64 * self.crossings[e][ci])
                    .sum();
                let want = self.endpoint_signature(ci, fi);
                if sum != want {
                    let what = if face.size() == 2 {
                        "2-region rule"
                    } else {
                        "face crossing rule"
                    };
                    let edges: Vec<usize> = face.boundary.iter().map(|s| s.0).collect();
                    return validation(format!(
                        "{what} violated: face {fi} (edges {edges:?}) crosses curve {ci} with net {sum}, \
                         but its endpoints there require {want}"
                    ));
                }
            }
        }
        let alpha = self.alpha_unchecked();
        let vg = VoltageGraph::new(
            self.base.clone(),
            self.modulus,
            &alpha.iter().map(|&a| a as i64).collect::<Vec<_>>(),
        )?;
        let base_genus = self.base.euler_genus()?;
        let t = self.arc_count();
        let rh =
            self.modulus as i64 * base_genus as i64 + (self.modulus as i64 - 1) * (t as i64 - 1);
        Ok(ValidationReport {
            arcs: t,
            base_genus,
            alpha,
            bijective: vg.is_bijective(),
            rh_genus: rh,
            note: "crossing data checked against the face rule; curve geometry is not represented"
                .into(),
        })
    }

    fn alpha_unchecked(&self) -> Vec<u64> {
        self.crossings
            .iter()
            .map(|row| reduce(row.iter().sum(), self.modulus))
            .collect()
    }

    /// Voltage `Σ_c σ(e, c) mod n` of each edge, after validation.
    pub fn cut_voltage(&self) -> Result<Vec<u64>> {
        self.validate()?;
        Ok(self.alpha_unchecked())
    }

    /// The voltage graph on the base embedding with the cut voltages.
    pub fn voltage_graph(&self) -> Result<VoltageGraph> {
        let alpha: Vec<i64> = self.cut_voltage()?.into_iter().map(|a| a as i64).collect();
        VoltageGraph::new(self.base.clone(), self.modulus, &alpha)
    }

    /// Builds a system from crossing data alone, placing arc endpoints
    /// where the face sums demand. Fails if some face sum is not in
    /// `{-1, 0, 1}` or a curve does not have exactly one start and one
    /// end face.
    pub fn from_crossings(
        base: EmbeddedGraph,
        modulus: u64,
        crossings: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let curves_n = crossings.first().map_or(0, |r| r.len());
        let faces = base.trace_faces();
        let mut curves = Vec::with_capacity(curves_n);
        #[allow(clippy::needless_range_loop)]
        for ci in 0..curves_n {
            let mut start = Vec::new();
            let mut end = Vec::new();
            for (fi, face) in faces.iter().enumerate() {
                match face
                    .boundary
                    .iter()
                    .map(|&(e, d)| d as i64 * crossings[e][ci])
                    .sum::<i64>()
                {
                    0 => {}
                    -1 => start.push(fi),
                    1 => end.push(fi),
                    s => return validation(format!("curve {ci} has net {s} around face {fi}")),
                }
            }
            curves.push(match (start.as_slice(), end.as_slice()) {
                ([], []) => CutCurve::Loop,
                ([s], [e]) => CutCurve::Arc {
                    endpoints: [*s, *e],
                },
                _ => return validation(format!("curve {ci} does not have exactly two endpoints")),
            });
        }
        let cs = CutSystem {
            base,
            modulus,
            curves,
            crossings,
        };
        cs.validate()?;
        Ok(cs)
    }
}

/// Result of the counting obstruction for a cut system or for bare
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    /// Order n.
    pub n: u64,
    /// Base genus g.
    pub base_genus: u64,
    /// Number of arcs t.
    pub arcs: u64,
    /// Number of 2-faces k of the base (absent for parameter-only checks).
    pub two_faces: Option<usize>,
    /// `n - 4g`, a lower bound on k for any dipole embedding of genus g.
    pub min_two_faces: i64,
    /// 2-faces that contain no arc endpoint (each forces equal voltages on
    /// its two edges).
    pub two_faces_without_endpoint: Option<usize>,
    /// Whether `2t >= n - 4g`.
    pub parameters_feasible: bool,
    /// Whether `2t >= k` (absent for parameter-only checks).
    pub counting_feasible: Option<bool>,
    /// Whether the system's voltages are bijective (absent for
    /// parameter-only checks).
    pub bijective: Option<bool>,
    /// True when the report proves no bijective voltage exists for this
    /// shape.
    pub certified_infeasible: bool,
}

/// Counting obstruction from parameters alone: every 2-face must contain
/// an arc endpoint for the voltages to be injective, a dipole embedding of
/// genus g has at least `n - 4g` 2-faces, and there are `2t` endpoints.
pub fn parameter_obstruction(n: u64, base_genus: u64, t: u64) -> ObstructionReport {
    let min_two = n as i64 - 4 * base_genus as i64;
    let feasible = 2 * t as i64 >= min_two;
    ObstructionReport {
        n,
        base_genus,
        arcs: t,
        two_faces: None,
        min_two_faces: min_two,
        two_faces_without_endpoint: None,
        parameters_feasible: feasible,
        counting_feasible: None,
        bijective: None,
        certified_infeasible: !feasible,
    }
}

/// Counting obstruction for a concrete cut system.
pub fn validate_lower_bound_obstruction(cs: &CutSystem) -> Result<ObstructionReport> {
    let rep = cs.validate()?;
    let faces = cs.base.trace_faces();
    let t = rep.arcs as u64;
    let mut with_endpoint = vec![false; faces.len()];
    for c in &cs.curves {
        if let CutCurve::Arc { endpoints } = c {
            for &f in endpoints {
                with_endpoint[f] = true;
            }
        }
    }
    let two: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].size() == 2).collect();
    let bare = two.iter().filter(|&&f| !with_endpoint[f]).count();
    let mut out = parameter_obstruction(cs.modulus, rep.base_genus, t);
    out.two_faces = Some(two.len());
    out.two_faces_without_endpoint = Some(bare);
    let counting = 2 * t as usize >= two.len();
    out.counting_feasible = Some(counting);
    out.bijective = Some(rep.bijective);
    out.certified_infeasible = !out.parameters_feasible || !counting || bare > 0;
    Ok(out)
}
