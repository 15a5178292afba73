//! Two-coloured directed multigraphs, rotation systems and face tracing.
//!
//! Vertices are numbered densely: white vertices are `0..white_count`,
//! black vertices are `white_count..white_count + black_count`. Every edge
//! is directed from a white vertex (its *tail*) to a black vertex (its
//! *head*).
//!
//! # Face-tracing convention
//!
//! A face boundary is a cyclic sequence of steps `(edge, dir)` where
//! `dir = +1` means the edge is traversed white → black and `dir = -1`
//! means black → white. After traversing `e` forwards we arrive at the
//! head end of `e`; the next step leaves along the edge whose end follows
//! that head end in the black vertex's rotation, traversed backwards. The
//! rule at white vertices is symmetric. The opposite convention only
//! mirrors every face, so genus and face sizes do not depend on it.

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Result};

/// Which end of a directed edge a rotation entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    /// The white endpoint.
    Tail,
    /// The black endpoint.
    Head,
}

/// An edge end, the unit entry of a rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    /// Edge id.
    pub edge: usize,
    /// Which end of the edge.
    pub end: End,
}

/// A directed edge from a white vertex to a black vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Dense edge id.
    pub id: usize,
    /// White endpoint (vertex id).
    pub tail: usize,
    /// Black endpoint (vertex id).
    pub head: usize,
}

/// A connected two-coloured directed multigraph with all edges white → black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    white_count: usize,
    black_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds and validates a multigraph. Edge `i` of `ends` gets id `i`.
    pub fn new(white_count: usize, black_count: usize, ends: &[(usize, usize)]) -> Result<Self> {
        let edges = ends
            .iter()
            .enumerate()
            .map(|(id, &(tail, head))| Edge { id, tail, head })
            .collect();
        Self::from_edges(white_count, black_count, edges)
    }

    /// Builds a multigraph from explicit edges, which may be listed in any
    /// order but whose ids must be exactly `0..E`.
    pub fn from_edges(
        white_count: usize,
        black_count: usize,
        mut edges: Vec<Edge>,
    ) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        for (i, e) in edges.iter().enumerate() {
            if e.id != i {
                return validation(format!(
                    "edge ids must be dense 0..E, missing or duplicate id near {i}"
                ));
            }
            if e.tail >= white_count {
                return validation(format!(
                    "edge {} tail {} is not a white vertex",
                    e.id, e.tail
                ));
            }
            if e.head < white_count || e.head >= white_count + black_count {
                return validation(format!(
                    "edge {} head {} is not a black vertex",
                    e.id, e.head
                ));
            }
        }
        let g = Multigraph {
            white_count,
            black_count,
            edges,
        };
        if !g.is_connected() {
            return validation("graph is not connected");
        }
        Ok(g)
    }

    /// The dipole D_m: one white vertex (id 0), one black vertex (id 1) and
    /// `m` parallel edges `e_0..e_{m-1}`.
    pub fn dipole(m: usize) -> Self {
        let edges = (0..m)
            .map(|id| Edge {
                id,
                tail: 0,
                head: 1,
            })
            .collect();
        Multigraph {
            white_count: 1,
            black_count: 1,
            edges,
        }
    }

    /// Number of white vertices.
    pub fn white_count(&self) -> usize {
        self.white_count
    }

    /// Number of black vertices.
    pub fn black_count(&self) -> usize {
        self.black_count
    }

    /// Total number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.white_count + self.black_count
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The vertex an edge end sits at.
    pub fn vertex_of(&self, end: EdgeEnd) -> usize {
        let e = &self.edges[end.edge];
        match end.end {
            End::Tail => e.tail,
            End::Head => e.head,
        }
    }

    fn is_connected(&self) -> bool {
        let v = self.vertex_count();
        if v == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); v];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        let mut seen = vec![false; v];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Per-vertex cyclic orders of incident edge ends, indexed by vertex id.
pub type RotationSystem = Vec<Vec<EdgeEnd>>;

/// One step of a face boundary: an edge and the direction it is traversed
/// (`+1` white → black, `-1` black → white).
pub type FaceStep = (usize, i8);

/// A face: the closed boundary walk of one region of the embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    /// Boundary steps, starting at an arbitrary position.
    pub boundary: Vec<FaceStep>,
}

impl Face {
    /// Number of steps on the boundary.
    pub fn size(&self) -> usize {
        self.boundary.len()
    }
}

/// A multigraph together with a rotation system: a 2-cell embedding in an
/// orientable surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: Multigraph,
    rotations: RotationSystem,
    /// For edge `e`, the edge following `e`'s tail end in the rotation at
    /// its white vertex.
    succ_tail: Vec<usize>,
    /// For edge `e`, the edge following `e`'s head end at its black vertex.
    succ_head: Vec<usize>,
}

impl EmbeddedGraph {
    /// Validates `rotations` against `graph` and builds the embedding.
    pub fn new(graph: Multigraph, rotations: RotationSystem) -> Result<Self> {
        let v = graph.vertex_count();
        if rotations.len() != v {
            return validation(format!(
                "expected rotations for {v} vertices, got {}",
                rotations.len()
            ));
        }
        let m = graph.edge_count();
        let mut seen = vec![[false; 2]; m];
        let mut succ_tail = vec![usize::MAX; m];
        let mut succ_head = vec![usize::MAX; m];
        for (vertex, rot) in rotations.iter().enumerate() {
            for (i, &ee) in rot.iter().enumerate() {
                if ee.edge >= m {
                    return validation(format!(
                        "rotation at vertex {vertex} names unknown edge {}",
                        ee.edge
                    ));
                }
                if graph.vertex_of(ee) != vertex {
                    return validation(format!(
                        "rotation at vertex {vertex} lists edge end {:?} of edge {} that is not incident to it",
                        ee.end, ee.edge
                    ));
                }
                let slot = &mut seen[ee.edge][ee.end as usize];
                if *slot {
                    return validation(format!(
                        "edge end {:?} of edge {} appears twice",
                        ee.end, ee.edge
                    ));
                }
                *slot = true;
                let next = rot[(i + 1) % rot.len()].edge;
                match ee.end {
                    End::Tail => succ_tail[ee.edge] = next,
                    End::Head => succ_head[ee.edge] = next,
                }
            }
        }
        for (e, s) in seen.iter().enumerate() {
            if !s[0] || !s[1] {
                return validation(format!("edge {e} is missing an end in the rotation system"));
            }
        }
        Ok(EmbeddedGraph {
            graph,
            rotations,
            succ_tail,
            succ_head,
        })
    }

    /// A dipole D_m with white rotation `rho_w` and black rotation `rho_b`,
    /// both given as cyclic sequences of edge ids.
    pub fn dipole(rho_w: &[usize], rho_b: &[usize]) -> Result<Self> {
        let m = rho_w.len();
        let rotations = vec![
            rho_w
                .iter()
                .map(|&edge| EdgeEnd {
                    edge,
                    end: End::Tail,
                })
                .collect(),
            rho_b
                .iter()
                .map(|&edge| EdgeEnd {
                    edge,
                    end: End::Head,
                })
                .collect(),
        ];
        Self::new(Multigraph::dipole(m), rotations)
    }

    /// The underlying multigraph.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// The rotation system, indexed by vertex id.
    pub fn rotations(&self) -> &RotationSystem {
        &self.rotations
    }

    /// Edge ids in rotation order at `vertex`.
    pub fn rotation_edges(&self, vertex: usize) -> Vec<usize> {
        self.rotations[vertex].iter().map(|ee| ee.edge).collect()
    }

    /// Successor of a boundary step under the face-tracing rule.
    pub fn next_step(&self, (e, dir): FaceStep) -> FaceStep {
        if dir > 0 {
            (self.succ_head[e], -1)
        } else {
            (self.succ_tail[e], 1)
        }
    }

    /// Vertex at which a step starts.
    pub fn step_start(&self, (e, dir): FaceStep) -> usize {
        let edge = &self.graph.edges[e];
        if dir > 0 {
            edge.tail
        } else {
            edge.head
        }
    }

    /// Traces all faces. Faces are discovered by scanning `(e, +1)`,
    /// `(e, -1)` for `e = 0, 1, ...` and starting a new face at the first
    /// unvisited step, so the output order is deterministic.
    pub fn trace_faces(&self) -> Vec<Face> {
        let m = self.graph.edge_count();
        let mut visited = vec![[false; 2]; m];
        let mut faces = Vec::new();
        for e in 0..m {
            for (slot, dir) in [(0usize, 1i8), (1, -1)] {
                if visited[e][slot] {
                    continue;
                }
                let start = (e, dir);
                let mut boundary = Vec::new();
                let mut cur = start;
                loop {
                    visited[cur.0][if cur.1 > 0 { 0 } else { 1 }] = true;
                    boundary.push(cur);
                    cur = self.next_step(cur);
                    if cur == start {
                        break;
                    }
                }
                faces.push(Face { boundary });
            }
        }
        faces
    }

    /// Number of faces.
    pub fn face_count(&self) -> usize {
        self.trace_faces().len()
    }

    /// Orientable genus `(2 - V + E - F) / 2`.
    pub fn euler_genus(&self) -> Result<u64> {
        genus_from_counts(
            self.graph.vertex_count(),
            self.graph.edge_count(),
            self.face_count(),
        )
    }

    /// Vertex sequence visited by a face boundary.
    pub fn face_vertices(&self, face: &Face) -> Vec<usize> {
        face.boundary.iter().map(|&s| self.step_start(s)).collect()
    }

    /// Whether a face boundary is a Hamiltonian cycle: it visits every
    /// vertex of the graph exactly once.
    pub fn is_hamiltonian_face(&self, face: &Face) -> bool {
        let v = self.graph.vertex_count();
        if face.size() != v {
            return false;
        }
        let mut seen = vec![false; v];
        for x in self.face_vertices(face) {
            if std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        true
    }

    /// All faces whose boundary is a Hamiltonian cycle.
    pub fn hamiltonian_faces(&self) -> Vec<Face> {
        self.trace_faces()
            .into_iter()
            .filter(|f| self.is_hamiltonian_face(f))
            .collect()
    }
}

/// Genus from vertex, edge and face counts of a connected orientable
/// 2-cell embedding. Fails if the Euler defect is odd or negative, which
/// can only result from a face-tracing bug.
pub fn genus_from_counts(v: usize, e: usize, f: usize) -> Result<u64> {
    let defect = 2 + e as i64 - v as i64 - f as i64;
    if defect < 0 || defect % 2 != 0 {
        return internal(format!("invalid Euler characteristic: V={v} E={e} F={f}"));
    }
    Ok((defect / 2) as u64)
}

/// Builds a multigraph without the connectivity check (derived graphs of
/// degenerate voltage assignments may be disconnected).
pub(crate) fn multigraph_unchecked(
    white_count: usize,
    black_count: usize,
    ends: &[(usize, usize)],
) -> Multigraph {
    let edges = ends
        .iter()
        .enumerate()
        .map(|(id, &(tail, head))| Edge { id, tail, head })
        .collect();
    Multigraph {
        white_count,
        black_count,
        edges,
    }
}

/// Whether `g` is the simple complete bipartite graph K_{n,n}: `n` white
/// and `n` black vertices and exactly one edge per white/black pair.
pub fn is_simple_complete_bipartite(g: &Multigraph, n: usize) -> bool {
    if g.white_count != n || g.black_count != n || g.edges.len() != n * n {
        return false;
    }
    let mut seen = vec![false; n * n];
    for e in &g.edges {
        let idx = e.tail * n + (e.head - n);
        if std::mem::replace(&mut seen[idx], true) {
            return false;
        }
    }
    true
}
