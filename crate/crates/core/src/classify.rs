//! Decision procedures: which Bestvina–Brady groups `N_Γ` (and which
//! right-angled Artin groups `G_Γ`) are quasi-Kähler, Kähler, and
//! realizable by aspherical quasi-projective varieties, with certificates.

use crate::complex::simple_connectivity;
use crate::graph::Graph;
use crate::resonance::{bb_resonance, obstruction_check, ObstructionMode, ObstructionVerdict, ENUMERATION_LIMIT};
use serde::Serialize;

/// The four disjoint classes of quasi-Kähler Bestvina–Brady groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class")]
pub enum GroupClass {
    /// `Z^r`, `r ≥ 0`.
    B1 { rank: usize },
    /// `Π F_{n_i}`, all `n_i > 1`.
    B2 { sizes: Vec<usize> },
    /// `Z^r × Π F_{n_i}`, `r > 0`, all `n_i > 1`.
    B3 { rank: usize, sizes: Vec<usize> },
    /// `N_{K_{n_1,...,n_r}}`, all `n_i ≥ 2`, `r ≥ 3`.
    B4 { parts: Vec<usize> },
    NotQuasiKahler,
}

impl GroupClass {
    pub fn label(&self) -> &'static str {
        match self {
            GroupClass::B1 { .. } => "B1",
            GroupClass::B2 { .. } => "B2",
            GroupClass::B3 { .. } => "B3",
            GroupClass::B4 { .. } => "B4",
            GroupClass::NotQuasiKahler => "NotQuasiKahler",
        }
    }

    /// Class of `Z^rank × Π F_{n}` over `free_ranks` (`n > 1`).
    fn of_product(rank: usize, free_ranks: Vec<usize>) -> GroupClass {
        match (rank, free_ranks.is_empty()) {
            (r, true) => GroupClass::B1 { rank: r },
            (0, false) => GroupClass::B2 { sizes: free_ranks },
            (r, false) => GroupClass::B3 { rank: r, sizes: free_ranks },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kollar {
    /// Fundamental group of an aspherical smooth quasi-projective variety.
    AsphericalQP,
    /// Not commensurable up to finite kernels to any such group.
    NotCommensurable,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Certificate {
    Tree { vertices: usize },
    #[serde(rename_all = "camelCase")]
    Multipartite { sizes: Vec<usize>, parts: Vec<Vec<String>> },
    /// `Γ = K_n`, `n` odd, so `N_Γ = Z^{n-1}` is the fundamental group of a
    /// complex torus.
    CompleteOdd { n: usize },
    NotKahler { reason: String },
    NoConditionMatched { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CrossChecks {
    pub quasi_kahler: ObstructionVerdict,
    pub kahler: ObstructionVerdict,
    /// Every decision above agrees with the resonance obstruction.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub quasi_kahler: bool,
    pub quasi_projective: bool,
    pub kahler: bool,
    pub projective: bool,
    pub group_class: GroupClass,
    pub structure: String,
    pub kollar: Kollar,
    pub certificates: Vec<Certificate>,
    pub cross_checks: Option<CrossChecks>,
    /// Why cross checks were skipped, when they were.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_checks_skipped: Option<String>,
    /// Facts from the literature that the report relies on but does not
    /// compute.
    pub notes: Vec<String>,
}

fn power(base: &str, r: usize) -> String {
    match r {
        1 => base.to_string(),
        r => format!("{base}^{r}"),
    }
}

/// `Z^r × F_{n_1} × ...`, free ranks `> 1`.
pub fn product_structure(rank: usize, free_ranks: &[usize]) -> String {
    let mut factors = Vec::new();
    if rank > 0 || free_ranks.is_empty() {
        factors.push(power("Z", rank));
    }
    factors.extend(free_ranks.iter().map(|n| format!("F_{n}")));
    factors.join(" x ")
}

pub fn multipartite_name(sizes: &[usize]) -> String {
    let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("K_{{{}}}", s.join(","))
}

/// Class and structure of `G_{K_{sizes}} = Π F_{n_i}` (with `F_1 = Z`).
fn raag_of_multipartite(sizes: &[usize]) -> (GroupClass, String) {
    let rank = sizes.iter().filter(|&&s| s == 1).count();
    let free: Vec<usize> = sizes.iter().copied().filter(|&s| s > 1).collect();
    (GroupClass::of_product(rank, free.clone()), product_structure(rank, &free))
}

/// Induced path `a - b - c` in the complement (`ac` an edge, `ab`, `bc` not),
/// certifying that a graph is not complete multipartite.
fn complement_p3(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    for b in 0..n {
        for a in 0..n {
            for c in a + 1..n {
                if a != b && c != b && !g.adjacent(a, b) && !g.adjacent(b, c) && g.adjacent(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn classify_bb(g: &Graph) -> ClassificationReport {
    let n = g.n();
    let parts = g.multipartite_parts();
    let mut certificates = Vec::new();
    let mut notes = Vec::new();

    let (group_class, structure) = if g.is_tree() {
        certificates.push(Certificate::Tree { vertices: n });
        // N = F_{n-1}
        let class = if n <= 2 { GroupClass::B1 { rank: n - 1 } } else { GroupClass::B2 { sizes: vec![n - 1] } };
        let structure = if n <= 2 { power("Z", n - 1) } else { format!("F_{}", n - 1) };
        (class, structure)
    } else if let Some(p) = parts.as_ref().filter(|p| qualifies(&p.sizes)) {
        certificates.push(Certificate::Multipartite {
            sizes: p.sizes.clone(),
            parts: p.parts.iter().map(|w| w.labels(g).iter().map(|s| s.to_string()).collect()).collect(),
        });
        if p.sizes[0] == 1 {
            // peel one K_1 factor: N_{K_1 * Γ'} = G_{Γ'}
            raag_of_multipartite(&p.sizes[1..])
        } else {
            (GroupClass::B4 { parts: p.sizes.clone() }, format!("N({})", multipartite_name(&p.sizes)))
        }
    } else {
        let reason = match (&parts, g.is_connected()) {
            (Some(p), _) if p.count() == 1 => format!(
                "discrete graph on {} vertices: not a tree, and a single part of size {} ≥ 2",
                n, p.sizes[0]
            ),
            (Some(p), _) => format!(
                "complete multipartite {} with all parts ≥ 2 but only r = {} < 3 parts; not a tree",
                multipartite_name(&p.sizes),
                p.count()
            ),
            (None, false) => format!("graph is disconnected ({} components): not a tree, not complete multipartite", g.components().len()),
            (None, true) => {
                let [a, b, c] = complement_p3(g).expect("non-multipartite graphs have an induced P3 in the complement");
                format!(
                    "not a tree ({} edges on {} vertices) and not complete multipartite: {}{} is an edge but {}{}, {}{} are not",
                    g.edge_count(),
                    n,
                    g.label(a),
                    g.label(c),
                    g.label(a),
                    g.label(b),
                    g.label(b),
                    g.label(c)
                )
            }
        };
        certificates.push(Certificate::NoConditionMatched { reason });
        (GroupClass::NotQuasiKahler, "N_Γ (not quasi-Kähler)".to_string())
    };

    let quasi_kahler = group_class != GroupClass::NotQuasiKahler;
    let kahler = g.is_complete() && n % 2 == 1;
    if kahler {
        certificates.push(Certificate::CompleteOdd { n });
    } else if quasi_kahler {
        let reason = if g.is_complete() {
            format!("b1(N) = {} is odd, but odd Betti numbers of compact Kähler manifolds are even", n - 1)
        } else if let GroupClass::B4 { .. } = group_class {
            "the 1-isotropic condition fails: every resonance component is 0-isotropic".to_string()
        } else {
            "N = F_n x N' with n ≥ 2, which is not a Kähler group (Johnson-Rees)".to_string()
        };
        certificates.push(Certificate::NotKahler { reason });
    }

    let kollar = match group_class {
        GroupClass::NotQuasiKahler => Kollar::NotApplicable,
        GroupClass::B4 { .. } => Kollar::NotCommensurable,
        _ => Kollar::AsphericalQP,
    };

    match &group_class {
        GroupClass::B4 { .. } => {
            notes.push("N is not of type FP_infinity (Bestvina-Brady); in particular it has no K(N,1) with finite skeleta".into());
            notes.push("FP_infinity passes to and from finite-index subgroups (Brown, Prop. VIII.5.1) and extensions by finite groups (Bieri, Prop. 2.7), so N is not commensurable up to finite kernels to the fundamental group of any aspherical quasi-projective variety".into());
        }
        GroupClass::NotQuasiKahler if !g.is_connected() => {
            notes.push("the kernel of a disconnected graph is not finitely generated".into());
        }
        GroupClass::B1 { .. } | GroupClass::B2 { .. } | GroupClass::B3 { .. } => {
            notes.push("N is the fundamental group of a product of punctured complex lines, an aspherical smooth quasi-projective variety".into());
        }
        _ => {}
    }

    let (cross_checks, cross_checks_skipped) = cross_check(g, quasi_kahler, kahler, &group_class);
    ClassificationReport {
        quasi_kahler,
        quasi_projective: quasi_kahler,
        kahler,
        projective: kahler,
        group_class,
        structure,
        kollar,
        certificates,
        cross_checks,
        cross_checks_skipped,
        notes,
    }
}

/// Either some part is a singleton, or all parts have size ≥ 2 and there are
/// at least three.
fn qualifies(sizes: &[usize]) -> bool {
    sizes.contains(&1) || sizes.len() >= 3
}

fn cross_check(g: &Graph, quasi_kahler: bool, kahler: bool, class: &GroupClass) -> (Option<CrossChecks>, Option<String>) {
    if g.n() <= 1 {
        return (None, Some("trivial kernel".into()));
    }
    if g.n() > ENUMERATION_LIMIT {
        return (None, Some(format!("more than {ENUMERATION_LIMIT} vertices")));
    }
    if !simple_connectivity(g).is_yes() {
        return (None, Some("flag complex not certified simply connected".into()));
    }
    let components = match bb_resonance(g) {
        Ok(c) => c,
        Err(e) => return (None, Some(e.to_string())),
    };
    let qk = obstruction_check(&components, ObstructionMode::QuasiKahler);
    let k = obstruction_check(&components, ObstructionMode::Kahler);
    let is_b4 = matches!(class, GroupClass::B4 { .. });
    let consistent = (!quasi_kahler || qk.pass) && (!kahler || k.pass) && (!is_b4 || !k.pass);
    (Some(CrossChecks { quasi_kahler: qk, kahler: k, consistent }), None)
}

impl ClassificationReport {
    /// Certificate chain in prose.
    pub fn explanation(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.certificates {
            out.push(match c {
                Certificate::Tree { vertices } => {
                    format!("Γ is a tree on {vertices} vertices, so N_Γ = F_{}", vertices - 1)
                }
                Certificate::Multipartite { sizes, .. } => {
                    let mut s = format!("Γ = {} is complete multipartite", multipartite_name(sizes));
                    if sizes[0] == 1 {
                        s.push_str(&format!(
                            " with a singleton part; Γ = K_1 * {} so N_Γ = G of the remaining join",
                            multipartite_name(&sizes[1..])
                        ));
                    } else {
                        s.push_str(&format!(" with all parts ≥ 2 and r = {} ≥ 3", sizes.len()));
                    }
                    s
                }
                Certificate::CompleteOdd { n } => format!("Γ = K_{n} with n odd: N_Γ = Z^{} is a complex torus group", n - 1),
                Certificate::NotKahler { reason } => format!("not Kähler: {reason}"),
                Certificate::NoConditionMatched { reason } => format!("no condition matched: {reason}"),
            });
        }
        out.push(format!("class {}: {}", self.group_class.label(), self.structure));
        if let Some(x) = &self.cross_checks {
            out.push(format!(
                "resonance obstruction: quasi-Kähler {}, Kähler {}; consistent: {}",
                if x.quasi_kahler.pass { "passes" } else { "fails" },
                if x.kahler.pass { "passes" } else { "fails" },
                x.consistent
            ));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RaagReport {
    pub quasi_kahler: bool,
    pub quasi_projective: bool,
    pub structure: Option<String>,
    pub parts: Option<Vec<usize>>,
}

/// `G_Γ` is quasi-Kähler iff Γ is complete multipartite, in which case it
/// is the product `Π F_{n_i}`.
pub fn classify_raag(g: &Graph) -> RaagReport {
    match g.multipartite_parts() {
        Some(p) => RaagReport {
            quasi_kahler: true,
            quasi_projective: true,
            structure: Some(raag_of_multipartite(&p.sizes).1),
            parts: Some(p.sizes),
        },
        None => RaagReport { quasi_kahler: false, quasi_projective: false, structure: None, parts: None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn c(s: &str) -> ClassificationReport {
        classify_bb(&parse_graph(s).unwrap())
    }

    #[test]
    fn octahedron() {
        let r = c("Km(2,2,2)");
        assert!(r.quasi_kahler && !r.kahler);
        assert_eq!(r.group_class, GroupClass::B4 { parts: vec![2, 2, 2] });
        assert_eq!(r.kollar, Kollar::NotCommensurable);
        assert_eq!(r.structure, "N(K_{2,2,2})");
        assert!(r.cross_checks.unwrap().consistent);
    }

    #[test]
    fn complete_graphs() {
        let r = c("K(5)");
        assert_eq!(r.group_class, GroupClass::B1 { rank: 4 });
        assert_eq!(r.structure, "Z^4");
        assert!(r.kahler);
        let r = c("K(4)");
        assert!(r.quasi_kahler && !r.kahler);
        let r = c("K(1)");
        assert_eq!(r.group_class, GroupClass::B1 { rank: 0 });
        assert!(r.kahler);
        assert_eq!(r.structure, "Z^0");
    }

    #[test]
    fn failing_graphs() {
        for s in ["Km(2,2)", "Km(2,3)", "cycle(5)", "Kbar(3)", "join(Kbar(2),path(4))"] {
            let r = c(s);
            assert_eq!(r.group_class, GroupClass::NotQuasiKahler, "{s}");
            assert_eq!(r.kollar, Kollar::NotApplicable);
            assert!(matches!(r.certificates[0], Certificate::NoConditionMatched { .. }));
        }
        assert!(!c("Kbar(2)").notes.is_empty());
    }

    #[test]
    fn trees_and_cones() {
        let r = c("path(4)");
        assert_eq!(r.group_class, GroupClass::B2 { sizes: vec![3] });
        assert_eq!(r.structure, "F_3");
        assert_eq!(r.kollar, Kollar::AsphericalQP);
        let r = c("Km(1,2,2)");
        assert_eq!(r.group_class, GroupClass::B2 { sizes: vec![2, 2] });
        assert_eq!(r.structure, "F_2 x F_2");
        let r = c("Km(1,1,1,3)");
        assert_eq!(r.group_class, GroupClass::B3 { rank: 2, sizes: vec![3] });
        assert_eq!(r.structure, "Z^2 x F_3");
        assert_eq!(c("K(2)").structure, "Z");
    }

    #[test]
    fn raag_decisions() {
        let r = classify_raag(&parse_graph("Km(2,3)").unwrap());
        assert!(r.quasi_kahler);
        assert_eq!(r.structure.as_deref(), Some("F_2 x F_3"));
        assert!(!classify_raag(&parse_graph("path(4)").unwrap()).quasi_kahler);
        assert_eq!(classify_raag(&parse_graph("K(3)").unwrap()).structure.as_deref(), Some("Z^3"));
    }
}
