//! The flag complex of a graph (truncated at dimension 3), its first
//! integral homology, and a certified three-valued decision of simple
//! connectivity.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::IntMatrix;
use crate::presentation::{simplify_traced, GrowthPolicy, Letter, Presentation, TietzeMove};
use num::ToPrimitive;
use serde::Serialize;
use std::collections::VecDeque;

pub const DEFAULT_TIETZE_BUDGET: usize = 1000;

/// Cliques of size 1 to 4 and the integral boundary maps `∂1`, `∂2`.
///
/// The oriented simplex `[v0, ..., vk]` always lists vertices increasingly;
/// `∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk]`.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    tetrahedra: Vec<[usize; 4]>,
    boundary_1: IntMatrix,
    boundary_2: IntMatrix,
    connected: bool,
}

impl FlagComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn tetrahedra(&self) -> &[[usize; 4]] {
        &self.tetrahedra
    }

    /// `∂1`: rows indexed by vertices, columns by edges.
    pub fn boundary_1(&self) -> &IntMatrix {
        &self.boundary_1
    }

    /// `∂2`: rows indexed by edges, columns by triangles.
    pub fn boundary_2(&self) -> &IntMatrix {
        &self.boundary_2
    }

    /// Face counts `(f0, f1, f2, f3)`.
    pub fn f_vector(&self) -> [usize; 4] {
        [self.vertex_count, self.edges.len(), self.triangles.len(), self.tetrahedra.len()]
    }

    pub fn cliques(&self, size: usize) -> Vec<VertexSet> {
        match size {
            1 => (0..self.vertex_count).map(|v| VertexSet::new([v])).collect(),
            2 => self.edges.iter().map(|c| VertexSet::new(*c)).collect(),
            3 => self.triangles.iter().map(|c| VertexSet::new(*c)).collect(),
            4 => self.tetrahedra.iter().map(|c| VertexSet::new(*c)).collect(),
            _ => Vec::new(),
        }
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        self.edges.binary_search(&[u, v]).expect("face of a stored clique")
    }
}

pub fn flag_complex(g: &Graph) -> FlagComplex {
    let n = g.n();
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    let triangles = g.triangles();
    let tetrahedra: Vec<[usize; 4]> = triangles
        .iter()
        .flat_map(|&[a, b, c]| {
            (c + 1..n)
                .filter(move |&d| g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d))
                .map(move |d| [a, b, c, d])
        })
        .collect();
    let mut boundary_1 = IntMatrix::zeros(n, edges.len());
    for (j, &[u, v]) in edges.iter().enumerate() {
        boundary_1.set(u, j, -1);
        boundary_1.set(v, j, 1);
    }
    let mut c = FlagComplex {
        vertex_count: n,
        boundary_2: IntMatrix::zeros(edges.len(), triangles.len()),
        edges,
        triangles,
        tetrahedra,
        boundary_1,
        connected: g.is_connected(),
    };
    for j in 0..c.triangles.len() {
        let [u, v, w] = c.triangles[j];
        let (vw, uw, uv) = (c.edge_index(v, w), c.edge_index(u, w), c.edge_index(u, v));
        c.boundary_2.set(vw, j, 1);
        c.boundary_2.set(uw, j, -1);
        c.boundary_2.set(uv, j, 1);
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1 {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl H1 {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// `H1(Δ; Z) = ker ∂1 / im ∂2`, read off the Smith normal forms.
pub fn homology_h1(c: &FlagComplex) -> Result<H1> {
    if !c.connected {
        return Err(Error::Disconnected);
    }
    let rank_1 = c.boundary_1.rank();
    let factors = c.boundary_2.invariant_factors();
    Ok(H1 {
        betti: c.edges.len() - rank_1 - factors.len(),
        torsion: factors.iter().filter_map(|d| d.to_u64()).filter(|&d| d > 1).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum YesCertificate {
    /// The graph is a tree, so the complex is a contractible 1-complex.
    Contractible,
    /// `Γ = Γ1 * Γ2` with `Γ1` connected and `Γ2` nonempty; the join of a
    /// connected complex with a nonempty one is simply connected.
    #[serde(rename_all = "camelCase")]
    Join { connected_factor: Vec<String>, other_factor: Vec<String> },
    /// Tietze moves reducing the edge-path presentation (generators: edges
    /// off a BFS spanning tree; relators: triangles) to the trivial one.
    #[serde(rename_all = "camelCase")]
    Trivialized { edge_path_presentation: String, moves: Vec<TietzeMove> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum NoCertificate {
    Disconnected { components: usize },
    NonzeroH1 { betti: usize, torsion: Vec<u64> },
}

impl NoCertificate {
    pub fn describe(&self) -> String {
        match self {
            NoCertificate::Disconnected { components } => format!("{components} connected components"),
            NoCertificate::NonzeroH1 { betti, torsion } => {
                let mut parts = Vec::new();
                if *betti > 0 {
                    parts.push(if *betti == 1 { "Z".to_string() } else { format!("Z^{betti}") });
                }
                parts.extend(torsion.iter().map(|t| format!("Z/{t}")));
                format!("H1 = {}", parts.join(" + "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "certificate")]
pub enum ConnectivityVerdict {
    Yes(YesCertificate),
    No(NoCertificate),
    Unknown { reason: String },
}

impl ConnectivityVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, ConnectivityVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, ConnectivityVerdict::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            ConnectivityVerdict::Yes(_) => "Yes",
            ConnectivityVerdict::No(_) => "No",
            ConnectivityVerdict::Unknown { .. } => "Unknown",
        }
    }
}

pub fn simple_connectivity(g: &Graph) -> ConnectivityVerdict {
    simple_connectivity_with_budget(g, DEFAULT_TIETZE_BUDGET)
}

/// Decides `π1(Δ_Γ) = 0`, first hit wins: tree, join criterion, nonzero
/// `H1` or disconnected, bounded Tietze trivialization, else unknown.
pub fn simple_connectivity_with_budget(g: &Graph, budget: usize) -> ConnectivityVerdict {
    if g.is_tree() {
        return ConnectivityVerdict::Yes(YesCertificate::Contractible);
    }
    if let Some((a, b)) = join_split(g) {
        return ConnectivityVerdict::Yes(YesCertificate::Join {
            connected_factor: a.labels(g).iter().map(|s| s.to_string()).collect(),
            other_factor: b.labels(g).iter().map(|s| s.to_string()).collect(),
        });
    }
    let components = g.components().len();
    if components > 1 {
        return ConnectivityVerdict::No(NoCertificate::Disconnected { components });
    }
    let h1 = homology_h1(&flag_complex(g)).expect("connected");
    if !h1.is_zero() {
        return ConnectivityVerdict::No(NoCertificate::NonzeroH1 { betti: h1.betti, torsion: h1.torsion });
    }
    let p = edge_path_presentation(g);
    let cap = (10 * p.relator_length()).max(10_000);
    let (reduced, moves) = simplify_traced(&p, budget, GrowthPolicy::Capped(cap));
    if reduced.generators().is_empty() {
        ConnectivityVerdict::Yes(YesCertificate::Trivialized { edge_path_presentation: p.to_string(), moves })
    } else {
        ConnectivityVerdict::Unknown {
            reason: format!(
                "Tietze search stopped with {} generators after {} moves (budget {budget})",
                reduced.generators().len(),
                moves.len()
            ),
        }
    }
}

/// A split `Γ = Γ1 * Γ2` with `Γ1` connected and `Γ2` nonempty, if any.
fn join_split(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let factors = g.join_factors();
    if factors.len() < 2 {
        return None;
    }
    let union = |sets: &[VertexSet]| VertexSet::new(sets.iter().flat_map(|s| s.vertices().to_vec()));
    if factors.len() >= 3 {
        // any join of two nonempty graphs is connected
        return Some((union(&factors[..2]), union(&factors[2..])));
    }
    for (i, f) in factors.iter().enumerate() {
        if g.induced_subgraph(f).expect("nonempty").is_connected() {
            return Some((f.clone(), factors[1 - i].clone()));
        }
    }
    None
}

/// Presentation of the edge-path group of the 2-skeleton, based at the
/// first vertex: generators are the edges off a BFS spanning tree, and each
/// triangle `u < v < w` gives the relator `[uv][vw][uw]^-1`.
pub fn edge_path_presentation(g: &Graph) -> Presentation {
    let n = g.n();
    let mut in_tree = vec![false; g.edge_count()];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                in_tree[g.edge_index(u, w).expect("edge")] = true;
                queue.push_back(w);
            }
        }
    }
    let mut generator_of = vec![None; g.edge_count()];
    let mut generators = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !in_tree[i] {
            generator_of[i] = Some(generators.len());
            generators.push(crate::presentation::edge_generator_name(g, u, v));
        }
    }
    let letter = |u: usize, v: usize, inverse: bool| {
        generator_of[g.edge_index(u, v).expect("edge")].map(|generator| Letter { generator, inverse })
    };
    let relators = g
        .triangles()
        .into_iter()
        .map(|[u, v, w]| [letter(u, v, false), letter(v, w, false), letter(u, w, true)].into_iter().flatten().collect())
        .collect();
    Presentation::new(generators, relators).expect("generators declared")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g(s: &str) -> Graph {
        parse_graph(s).unwrap()
    }

    #[test]
    fn f_vectors() {
        assert_eq!(flag_complex(&g("K(3)")).f_vector(), [3, 3, 1, 0]);
        assert_eq!(flag_complex(&g("cycle(4)")).f_vector(), [4, 4, 0, 0]);
        assert_eq!(flag_complex(&g("Km(2,2,2)")).f_vector(), [6, 12, 8, 0]);
        assert_eq!(flag_complex(&g("K(5)")).f_vector(), [5, 10, 10, 5]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for s in ["K(5)", "Km(2,2,2)", "Km(1,2,3)", "cycle(6)"] {
            let c = flag_complex(&g(s));
            assert!(c.boundary_1().mul(c.boundary_2()).is_zero(), "{s}");
        }
    }

    #[test]
    fn first_homology() {
        assert_eq!(homology_h1(&flag_complex(&g("cycle(4)"))).unwrap(), H1 { betti: 1, torsion: vec![] });
        assert!(homology_h1(&flag_complex(&g("path(5)"))).unwrap().is_zero());
        assert!(homology_h1(&flag_complex(&g("Km(2,2,2)"))).unwrap().is_zero());
        assert_eq!(homology_h1(&flag_complex(&g("Km(2,2,2,2)"))).unwrap().betti, 0);
        assert_eq!(homology_h1(&flag_complex(&g("Kbar(2)"))), Err(Error::Disconnected));
    }

    #[test]
    fn verdict_ladder() {
        assert_eq!(simple_connectivity(&g("path(6)")), ConnectivityVerdict::Yes(YesCertificate::Contractible));
        assert_eq!(
            simple_connectivity(&g("cycle(4)")),
            ConnectivityVerdict::No(NoCertificate::NonzeroH1 { betti: 1, torsion: vec![] })
        );
        match simple_connectivity(&g("Km(2,2,2)")) {
            ConnectivityVerdict::Yes(YesCertificate::Join { connected_factor, other_factor }) => {
                assert_eq!(connected_factor.len(), 4);
                assert_eq!(other_factor.len(), 2);
            }
            v => panic!("unexpected {v:?}"),
        }
        assert_eq!(
            simple_connectivity(&g("Kbar(3)")),
            ConnectivityVerdict::No(NoCertificate::Disconnected { components: 3 })
        );
        assert!(simple_connectivity(&g("Km(2,2)")).is_no());
        assert!(simple_connectivity(&g("join(K(1),cycle(5))")).is_yes());
    }

    #[test]
    fn triangle_strip_is_trivialized_by_tietze() {
        // four triangles (i, i+1, i+2) glued in a strip: no join split, H1 = 0
        let strip = Graph::on_numbered_vertices(6, (0..5).map(|i| (i, i + 1)).chain((0..4).map(|i| (i, i + 2)))).unwrap();
        assert_eq!(strip.join_factors().len(), 1);
        let p = edge_path_presentation(&strip);
        assert_eq!((p.generators().len(), p.relators().len()), (4, 4));
        match simple_connectivity(&strip) {
            ConnectivityVerdict::Yes(YesCertificate::Trivialized { moves, .. }) => assert_eq!(moves.len(), 4),
            v => panic!("unexpected {v:?}"),
        }
        assert!(matches!(simple_connectivity_with_budget(&strip, 0), ConnectivityVerdict::Unknown { .. }));
    }
}
