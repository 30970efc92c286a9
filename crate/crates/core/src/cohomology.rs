//! Low-degree cohomology rings over `Q`.
//!
//! For `G_Γ` this is the exterior Stanley–Reisner ring of the flag complex:
//! `H^k` has one basis element per `k`-clique, the product of its starred
//! vertices in increasing order. For `N_Γ` (flag complex simply connected)
//! degrees `≤ 2` are modelled by `H*(G_Γ) / ν·H*(G_Γ)`.

use crate::complex::{simple_connectivity, ConnectivityVerdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{format_q, q, QMatrix, Q};
use num::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Ambient {
    #[serde(rename = "RAAG")]
    Raag,
    #[serde(rename = "BB")]
    Bb,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::Raag => "RAAG",
            Ambient::Bb => "BB",
        }
    }
}

/// A homogeneous class given by exact coordinates in a ring's degree basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub degree: usize,
    pub coords: Vec<Q>,
}

impl Cocycle {
    pub fn new(degree: usize, coords: Vec<Q>) -> Self {
        Cocycle { degree, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Cocycle {
        Cocycle::new(self.degree, self.coords.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.degree, other.degree);
        Cocycle::new(self.degree, self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }
}

/// Structure constants `e_i · e_j = Σ_k c_ijk e_k` for one pair of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    pub left_degree: usize,
    pub right_degree: usize,
    /// Sparse `(i, j, k, c)` with `c ≠ 0`.
    pub entries: Vec<(usize, usize, usize, Q)>,
}

/// Extra data carried by the Bestvina–Brady ring.
#[derive(Clone, Debug)]
pub struct KernelData {
    /// The ambient RAAG ring.
    pub raag: CohomologyRing,
    /// `ι*: H^1(G) → H^1(N)`, shape `(n-1) × n`.
    pub iota: QMatrix,
    /// Section of `ι*` sending the class of `v*` back to `v*`, shape `n × (n-1)`.
    pub section: QMatrix,
    /// `H^2(G) → H^2(G)/νH^1(G)`, shape `dim H^2(N) × |E|`.
    pub projection: QMatrix,
    /// Rank of `ν·: H^1(G) → H^2(G)`.
    pub nu_rank: usize,
}

#[derive(Clone, Debug)]
pub struct CohomologyRing {
    ambient: Ambient,
    /// Degree-`k` basis. RAAG: the `k`-cliques. BB: in degree 1 the vertices
    /// other than the last (classes of `v*`), in degree 2 the edges chosen as
    /// coset representatives.
    bases: Vec<Vec<VertexSet>>,
    tables: BTreeMap<(usize, usize), ProductTable>,
    kernel: Option<Box<KernelData>>,
}

impl CohomologyRing {
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.bases.get(degree).map_or(0, Vec::len)
    }

    pub fn basis(&self, degree: usize) -> &[VertexSet] {
        self.bases.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn table(&self, left: usize, right: usize) -> Option<&ProductTable> {
        self.tables.get(&(left, right))
    }

    pub fn kernel_data(&self) -> Option<&KernelData> {
        self.kernel.as_deref()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// The `i`-th basis element of degree `degree`.
    pub fn basis_class(&self, degree: usize, i: usize) -> Cocycle {
        let mut coords = vec![Q::zero(); self.dim(degree)];
        coords[i] = Q::one();
        Cocycle::new(degree, coords)
    }

    pub fn zero(&self, degree: usize) -> Cocycle {
        Cocycle::new(degree, vec![Q::zero(); self.dim(degree)])
    }

    /// Cup product; fails when the product degree is not stored.
    pub fn cup(&self, x: &Cocycle, y: &Cocycle) -> Result<Cocycle> {
        for c in [x, y] {
            if c.coords.len() != self.dim(c.degree) {
                return Err(Error::invalid(format!(
                    "cocycle has {} coordinates, degree-{} basis has {}",
                    c.coords.len(),
                    c.degree,
                    self.dim(c.degree)
                )));
            }
        }
        let table = self.table(x.degree, y.degree).ok_or_else(|| {
            Error::invalid(format!(
                "degree {} + {} exceeds the stored range (top degree {})",
                x.degree,
                y.degree,
                self.top_degree()
            ))
        })?;
        let mut out = self.zero(x.degree + y.degree);
        for (i, j, k, c) in &table.entries {
            let (a, b) = (&x.coords[*i], &y.coords[*j]);
            if !a.is_zero() && !b.is_zero() {
                out.coords[*k] += a * b * c;
            }
        }
        Ok(out)
    }

    /// Matrix of `x ↦ x ∪ a` on degree `source`; column `i` is the image of
    /// the `i`-th basis element.
    pub fn right_multiplication(&self, source: usize, a: &Cocycle) -> Result<QMatrix> {
        let target = source + a.degree;
        let columns = (0..self.dim(source))
            .map(|i| Ok(self.cup(&self.basis_class(source, i), a)?.coords))
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::from_columns(&columns, self.dim(target)))
    }

    /// JSON-ready dump of bases and structure constants.
    pub fn dump(&self, g: &Graph) -> RingDump {
        RingDump {
            ambient: self.ambient,
            betti: self.betti(),
            bases: self
                .bases
                .iter()
                .map(|b| b.iter().map(|s| if s.is_empty() { "1".to_string() } else { s.labels(g).join(",") }).collect())
                .collect(),
            products: self
                .tables
                .values()
                .map(|t| ProductDump {
                    left_degree: t.left_degree,
                    right_degree: t.right_degree,
                    entries: t.entries.iter().map(|(i, j, k, c)| (*i, *j, *k, format_q(c))).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductDump {
    pub left_degree: usize,
    pub right_degree: usize,
    pub entries: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingDump {
    pub ambient: Ambient,
    pub betti: Vec<usize>,
    pub bases: Vec<Vec<String>>,
    pub products: Vec<ProductDump>,
}

/// Sign of the permutation sorting the concatenation `a ++ b` of two sorted
/// disjoint lists.
fn shuffle_sign(a: &[usize], b: &[usize]) -> i64 {
    let inversions: usize = a.iter().map(|x| b.iter().filter(|y| *y < x).count()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `H^{≤3}(G_Γ; Q)` with full multiplication tables.
pub fn raag_ring(g: &Graph) -> CohomologyRing {
    let mut bases = vec![vec![VertexSet::default()]];
    bases.push((0..g.n()).map(|v| VertexSet::new([v])).collect());
    bases.push(g.edges().iter().map(|&(u, v)| VertexSet::new([u, v])).collect());
    bases.push(g.triangles().iter().map(|t| VertexSet::new(*t)).collect());
    let index: Vec<BTreeMap<&VertexSet, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let mut tables = BTreeMap::new();
    for p in 0..=3 {
        for r in 0..=3 - p {
            let mut entries = Vec::new();
            for (i, a) in bases[p].iter().enumerate() {
                for (j, b) in bases[r].iter().enumerate() {
                    if a.vertices().iter().any(|v| b.contains(*v)) {
                        continue;
                    }
                    let union = VertexSet::new(a.vertices().iter().chain(b.vertices()).copied());
                    if let Some(&k) = index[p + r].get(&union) {
                        entries.push((i, j, k, q(shuffle_sign(a.vertices(), b.vertices()))));
                    }
                }
            }
            tables.insert((p, r), ProductTable { left_degree: p, right_degree: r, entries });
        }
    }
    CohomologyRing { ambient: Ambient::Raag, bases, tables, kernel: None }
}

/// `ν = Σ v*`, the all-ones degree-1 vector.
pub fn nu_class(g: &Graph) -> Cocycle {
    Cocycle::new(1, vec![Q::one(); g.n()])
}

/// `H^{≤2}(N_Γ; Q) ≅ H^{≤2}(G_Γ)/ν·H^{≤1}(G_Γ)`, refusing unless the graph is
/// connected with simply connected flag complex.
pub fn bb_ring(g: &Graph) -> Result<CohomologyRing> {
    match simple_connectivity(g) {
        ConnectivityVerdict::Yes(_) => Ok(bb_ring_unchecked(g)),
        ConnectivityVerdict::No(c) => Err(Error::refused(format!(
            "flag complex is not simply connected ({}); the quotient ring does not model H*(N)",
            c.describe()
        ))),
        ConnectivityVerdict::Unknown { reason } => {
            Err(Error::refused(format!("simple connectivity of the flag complex is undecided ({reason})")))
        }
    }
}

fn bb_ring_unchecked(g: &Graph) -> CohomologyRing {
    let raag = raag_ring(g);
    let n = g.n();
    let m = g.edge_count();
    let nu = nu_class(g);

    // ι*: v* ↦ e_v for v < last, last* ↦ -Σ e_v
    let mut iota = QMatrix::zeros(n - 1, n);
    let mut section = QMatrix::zeros(n, n - 1);
    for v in 0..n - 1 {
        iota.set(v, v, Q::one());
        iota.set(v, n - 1, -Q::one());
        section.set(v, v, Q::one());
    }

    // image of ν· in H^2(G), reduced with leftmost pivots
    let image_rows: Vec<Vec<Q>> =
        (0..n).map(|v| raag.cup(&nu, &raag.basis_class(1, v)).expect("degree 2 stored").coords).collect();
    let (echelon, pivots) = QMatrix::from_rows_with_cols(&image_rows, m).rref();
    let representatives: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let mut projection = QMatrix::zeros(representatives.len(), m);
    for e in 0..m {
        let mut x = vec![Q::zero(); m];
        x[e] = Q::one();
        if let Some(i) = pivots.iter().position(|&p| p == e) {
            for (c, val) in echelon.row(i).iter().enumerate() {
                x[c] -= val;
            }
        }
        for (r, &c) in representatives.iter().enumerate() {
            projection.set(r, e, x[c].clone());
        }
    }

    let bases = vec![
        vec![VertexSet::default()],
        (0..n - 1).map(|v| VertexSet::new([v])).collect(),
        representatives.iter().map(|&e| raag.basis(2)[e].clone()).collect::<Vec<_>>(),
    ];
    let d1 = n - 1;
    let d2 = representatives.len();
    let mut tables = BTreeMap::new();
    let unit = |d: usize| (0..d).map(|i| (0, i, i, Q::one())).collect::<Vec<_>>();
    let unit_right = |d: usize| (0..d).map(|i| (i, 0, i, Q::one())).collect::<Vec<_>>();
    tables.insert((0, 0), ProductTable { left_degree: 0, right_degree: 0, entries: unit(1) });
    tables.insert((0, 1), ProductTable { left_degree: 0, right_degree: 1, entries: unit(d1) });
    tables.insert((1, 0), ProductTable { left_degree: 1, right_degree: 0, entries: unit_right(d1) });
    tables.insert((0, 2), ProductTable { left_degree: 0, right_degree: 2, entries: unit(d2) });
    tables.insert((2, 0), ProductTable { left_degree: 2, right_degree: 0, entries: unit_right(d2) });
    let mut entries = Vec::new();
    for i in 0..d1 {
        for j in 0..d1 {
            let prod = raag.cup(&raag.basis_class(1, i), &raag.basis_class(1, j)).expect("stored").coords;
            let image = projection.apply(&prod);
            for (k, c) in image.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    tables.insert((1, 1), ProductTable { left_degree: 1, right_degree: 1, entries });

    CohomologyRing {
        ambient: Ambient::Bb,
        bases,
        tables,
        kernel: Some(Box::new(KernelData { raag, iota, section, projection, nu_rank: pivots.len() })),
    }
}

impl KernelData {
    /// `ι*` applied to a degree-1 class of `G_Γ`.
    pub fn restrict(&self, x: &Cocycle) -> Cocycle {
        assert_eq!(x.degree, 1);
        Cocycle::new(1, self.iota.apply(&x.coords))
    }

    /// Image of a degree-2 class of `G_Γ` in `H^2(N_Γ)`.
    pub fn project(&self, x: &Cocycle) -> Cocycle {
        assert_eq!(x.degree, 2);
        Cocycle::new(2, self.projection.apply(&x.coords))
    }
}

impl CohomologyRing {
    /// Checks `∪_N ∘ (ι* ∧ ι*) = proj ∘ ∪_G` on all pairs of degree-1 basis
    /// classes of `G_Γ`. Always false for a RAAG ring.
    pub fn diagram_commutes(&self) -> bool {
        let Some(k) = self.kernel_data() else { return false };
        let n = k.raag.dim(1);
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (x, y) = (k.raag.basis_class(1, a), k.raag.basis_class(1, b));
                let down = k.project(&k.raag.cup(&x, &y).expect("stored"));
                let across = self.cup(&k.restrict(&x), &k.restrict(&y)).expect("stored");
                down == across
            })
        })
    }

    /// Rank of `∧²ι*: ∧²H^1(G) → ∧²H^1(N)`; `None` for a RAAG ring.
    pub fn wedge_iota_rank(&self) -> Option<usize> {
        let k = self.kernel_data()?;
        let n = k.raag.dim(1);
        let d = self.dim(1);
        let columns: Vec<Vec<Q>> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .map(|(a, b)| {
                let (x, y) = (k.iota.column(a), k.iota.column(b));
                (0..d)
                    .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
                    .map(|(i, j)| &x[i] * &y[j] - &x[j] * &y[i])
                    .collect()
            })
            .collect();
        let rows = d * d.saturating_sub(1) / 2;
        Some(QMatrix::from_columns(&columns, rows).rank())
    }
}

/// Betti numbers: RAAG in degrees 0..3 (clique counts), BB in degrees 0..2.
pub fn betti(g: &Graph, ambient: Ambient) -> Result<Vec<usize>> {
    match ambient {
        Ambient::Raag => Ok(raag_ring(g).betti()),
        Ambient::Bb => Ok(bb_ring(g)?.betti()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g(s: &str) -> Graph {
        parse_graph(s).unwrap()
    }

    fn e(ring: &CohomologyRing, i: usize) -> Cocycle {
        ring.basis_class(1, i)
    }

    #[test]
    fn path_products() {
        let r = raag_ring(&g("path(3)"));
        assert_eq!(r.cup(&e(&r, 0), &e(&r, 1)).unwrap(), r.basis_class(2, 0));
        assert!(r.cup(&e(&r, 0), &e(&r, 2)).unwrap().is_zero());
        assert_eq!(r.cup(&e(&r, 1), &e(&r, 0)).unwrap(), r.basis_class(2, 0).scale(&q(-1)));
    }

    #[test]
    fn triangle_top_class() {
        let r = raag_ring(&g("K(3)"));
        let v12 = r.cup(&e(&r, 0), &e(&r, 1)).unwrap();
        assert_eq!(r.cup(&v12, &e(&r, 2)).unwrap(), r.basis_class(3, 0));
        let v13 = r.cup(&e(&r, 0), &e(&r, 2)).unwrap();
        assert_eq!(r.cup(&v13, &e(&r, 1)).unwrap(), r.basis_class(3, 0).scale(&q(-1)));
    }

    #[test]
    fn discrete_products_vanish() {
        let r = raag_ring(&g("Kbar(4)"));
        assert!(r.table(1, 1).unwrap().entries.is_empty());
        assert_eq!(r.betti(), vec![1, 4, 0, 0]);
    }

    #[test]
    fn squares_vanish_and_degree_overflow() {
        let r = raag_ring(&g("K(4)"));
        let x = Cocycle::new(1, vec![q(1), q(-2), q(3), q(5)]);
        assert!(r.cup(&x, &x).unwrap().is_zero());
        let top = r.basis_class(3, 0);
        assert!(matches!(r.cup(&top, &x), Err(Error::InvalidArgument(_))));
        assert!(r.cup(&Cocycle::new(1, vec![q(1)]), &x).is_err());
    }

    #[test]
    fn nu_vectors() {
        assert_eq!(nu_class(&g("K(3)")).coords, vec![q(1), q(1), q(1)]);
        assert_eq!(nu_class(&g("K(1)")).coords, vec![q(1)]);
        assert_eq!(nu_class(&g("Km(2,2,2)")).coords.len(), 6);
    }

    #[test]
    fn kernel_ring_dimensions() {
        let r = bb_ring(&g("K(3)")).unwrap();
        assert_eq!((r.dim(1), r.dim(2)), (2, 1));
        let r = bb_ring(&g("Km(2,2,2)")).unwrap();
        assert_eq!((r.dim(1), r.dim(2)), (5, 7));
        assert_eq!(r.kernel_data().unwrap().nu_rank, 5);
        let r = bb_ring(&g("path(4)")).unwrap();
        assert_eq!((r.dim(1), r.dim(2)), (3, 0));
        let r = bb_ring(&g("K(1)")).unwrap();
        assert_eq!(r.betti(), vec![1, 0, 0]);
        assert!(bb_ring(&g("cycle(4)")).unwrap_err().is_refusal());
    }

    #[test]
    fn kernel_ring_diagram() {
        for s in ["K(3)", "K(4)", "Km(2,2,2)", "Km(1,2,3)", "path(4)"] {
            let r = bb_ring(&g(s)).unwrap();
            assert!(r.diagram_commutes(), "{s}");
            let d = r.dim(1);
            assert_eq!(r.wedge_iota_rank(), Some(d * (d.saturating_sub(1)) / 2), "{s}");
        }
        assert!(!raag_ring(&g("K(3)")).diagram_commutes());
    }

    #[test]
    fn same_part_products_vanish_in_kernel() {
        let gr = g("Km(2,2,2)");
        let r = bb_ring(&gr).unwrap();
        let k = r.kernel_data().unwrap();
        let raag = &k.raag;
        let (u, v) = (k.restrict(&raag.basis_class(1, 0)), k.restrict(&raag.basis_class(1, 1)));
        assert!(r.cup(&u, &v).unwrap().is_zero());
        let w = k.restrict(&raag.basis_class(1, 2));
        assert!(!r.cup(&u, &w).unwrap().is_zero());
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(betti(&g("K(4)"), Ambient::Raag).unwrap(), vec![1, 4, 6, 4]);
        assert_eq!(betti(&g("Km(2,2,2)"), Ambient::Bb).unwrap(), vec![1, 5, 7]);
        assert_eq!(betti(&g("Kbar(3)"), Ambient::Raag).unwrap(), vec![1, 3, 0, 0]);
        assert!(betti(&g("Kbar(3)"), Ambient::Bb).is_err());
    }
}
