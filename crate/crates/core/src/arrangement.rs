//! Product hyperplane arrangements realizing quasi-Kähler kernels: punctured
//! line products for the aspherical classes, Milnor fibers
//! `F_{e,t} = f_e^{-1}(t)` for the `K_{n_1,...,n_r}` kernels.

use crate::classify::{classify_bb, multipartite_name, GroupClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num::integer::Integer;
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealizationKind {
    PuncturedLineProduct,
    MilnorFiberOfProduct,
}

/// The affine hyperplane `x_var = shift` (variables numbered from 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub var: usize,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ArrangementRealization {
    pub kind: RealizationKind,
    pub ambient_dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub exponents: Vec<u64>,
    pub degree: u64,
    pub nu_images: Vec<u64>,
    /// `f_e` written out.
    pub polynomial: String,
    /// The realizing variety.
    pub variety: String,
    /// Fundamental group of the variety, in the notation of the
    /// classification structure.
    pub fundamental_group: String,
}

impl ArrangementRealization {
    /// Number of hyperplanes on each coordinate axis.
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.ambient_dim];
        for h in &self.hyperplanes {
            sizes[h.var - 1] += 1;
        }
        sizes
    }
}

/// The product arrangement `{x_i = j : 1 ≤ j ≤ n_i}` in `C^r`.
fn product_hyperplanes(sizes: &[usize]) -> Vec<Hyperplane> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| (1..=n as i64).map(move |j| Hyperplane { var: i + 1, shift: j }))
        .collect()
}

pub fn polynomial(hyperplanes: &[Hyperplane], exponents: &[u64]) -> String {
    if hyperplanes.is_empty() {
        return "1".into();
    }
    let mut s = String::new();
    for (h, &e) in hyperplanes.iter().zip(exponents) {
        write!(s, "(x{} - {})", h.var, h.shift).unwrap();
        if e != 1 {
            write!(s, "^{e}").unwrap();
        }
    }
    s
}

fn punctured_line_product(sizes: &[usize]) -> String {
    if sizes.is_empty() {
        return "C^0".into();
    }
    let factors: Vec<String> = sizes
        .iter()
        .map(|&n| match n {
            1 => "C*".to_string(),
            n => format!("C \\ {{{n} points}}"),
        })
        .collect();
    factors.join(" x ")
}

pub fn realize(g: &Graph) -> Result<ArrangementRealization> {
    let report = classify_bb(g);
    let (kind, sizes) = match &report.group_class {
        GroupClass::NotQuasiKahler => return Err(Error::refused("NotQuasiKahler: N is not quasi-Kähler, so there is nothing to realize")),
        GroupClass::B4 { parts } => (RealizationKind::MilnorFiberOfProduct, parts.clone()),
        GroupClass::B1 { rank } => (RealizationKind::PuncturedLineProduct, vec![1; *rank]),
        GroupClass::B2 { sizes } => (RealizationKind::PuncturedLineProduct, sizes.clone()),
        GroupClass::B3 { rank, sizes: free } => {
            let mut s = vec![1; *rank];
            s.extend(free);
            (RealizationKind::PuncturedLineProduct, s)
        }
    };
    let hyperplanes = product_hyperplanes(&sizes);
    let exponents = vec![1; hyperplanes.len()];
    let polynomial = polynomial(&hyperplanes, &exponents);
    let variety = match kind {
        RealizationKind::PuncturedLineProduct => punctured_line_product(&sizes),
        RealizationKind::MilnorFiberOfProduct => format!("F_{{e,1}} = {{{polynomial} = 1}}"),
    };
    Ok(ArrangementRealization {
        kind,
        ambient_dim: sizes.len(),
        degree: exponents.iter().sum(),
        nu_images: exponents.clone(),
        hyperplanes,
        exponents,
        polynomial,
        variety,
        fundamental_group: report.structure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MilnorReport {
    pub exponents: Vec<u64>,
    pub degree: u64,
    pub polynomial: String,
    pub nu_images: Vec<u64>,
    pub exact_sequence: String,
    /// `π_1` of the arrangement complement `M`, identified for product
    /// arrangements with the right-angled Artin group of `K_{n_1,...,n_r}`.
    pub complement_group: String,
    /// Rank of the kernel of `ν_e` on `H_1(M) = Z^d`.
    pub kernel_rank: usize,
    pub essential: bool,
}

/// The exact sequence `1 → π_1(F_{e,t}) → π_1(M) → Z → 0` for exponents `e`.
pub fn milnor_data(a: &ArrangementRealization, e: &[i64]) -> Result<MilnorReport> {
    if let Some(x) = e.iter().find(|&&x| x <= 0) {
        return Err(Error::invalid(format!("exponents must be positive, found {x}")));
    }
    let gcd = e.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if gcd != 1 {
        return Err(Error::invalid(format!("exponents must have gcd 1, found gcd {gcd}")));
    }
    let d = a.hyperplanes.len();
    if e.len() != d {
        return Err(Error::invalid(format!("expected {d} exponents, one per hyperplane, found {}", e.len())));
    }
    if a.ambient_dim < 3 {
        return Err(Error::refused(format!(
            "the exact sequence needs an ambient dimension n ≥ 3, but this arrangement lives in C^{}",
            a.ambient_dim
        )));
    }
    let exponents: Vec<u64> = e.iter().map(|&x| x as u64).collect();
    let sizes = a.part_sizes();
    let complement_group = format!("G({})", multipartite_name(&sizes));
    let imgs: Vec<String> = exponents.iter().map(u64::to_string).collect();
    let exact_sequence = format!(
        "1 -> pi_1(F_{{e,t}}) -> {complement_group} -> Z -> 0, nu_e = ({})",
        imgs.join(",")
    );
    Ok(MilnorReport {
        degree: exponents.iter().sum(),
        polynomial: polynomial(&a.hyperplanes, &exponents),
        nu_images: exponents.clone(),
        exponents,
        exact_sequence,
        complement_group,
        // ν_e is a nonzero map Z^d → Z
        kernel_rank: d - 1,
        essential: sizes.iter().all(|&n| n > 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn r(s: &str) -> Result<ArrangementRealization> {
        realize(&parse_graph(s).unwrap())
    }

    #[test]
    fn octahedron() {
        let a = r("Km(2,2,2)").unwrap();
        assert_eq!(a.kind, RealizationKind::MilnorFiberOfProduct);
        assert_eq!(a.ambient_dim, 3);
        assert_eq!(a.hyperplanes.len(), 6);
        assert_eq!(a.degree, 6);
        assert_eq!(a.nu_images, vec![1; 6]);
        assert_eq!(a.polynomial, "(x1 - 1)(x1 - 2)(x2 - 1)(x2 - 2)(x3 - 1)(x3 - 2)");
        let m = milnor_data(&a, &[1; 6]).unwrap();
        assert_eq!(m.degree, 6);
        assert_eq!(m.kernel_rank, 5);
        assert!(milnor_data(&a, &[2, 2]).unwrap_err().to_string().contains("gcd"));
        let m = milnor_data(&a, &[1, 2, 1, 1, 1, 1]).unwrap();
        assert_eq!(m.nu_images, vec![1, 2, 1, 1, 1, 1]);
        assert_eq!(m.degree, 7);
        assert!(milnor_data(&a, &[1, 0, 1, 1, 1, 1]).is_err());
        assert!(milnor_data(&a, &[1, 1]).is_err());
    }

    #[test]
    fn punctured_lines() {
        let a = r("path(4)").unwrap();
        assert_eq!(a.kind, RealizationKind::PuncturedLineProduct);
        assert_eq!(a.variety, "C \\ {3 points}");
        assert_eq!(a.fundamental_group, "F_3");
        let a = r("K(1)").unwrap();
        assert_eq!(a.ambient_dim, 0);
        assert_eq!(a.variety, "C^0");
        let a = r("Km(1,1,3)").unwrap();
        assert_eq!(a.variety, "C* x C \\ {3 points}");
        let err = milnor_data(&a, &[1, 1, 1, 1]).unwrap_err();
        assert!(err.is_refusal());
    }

    #[test]
    fn refuses_non_quasi_kahler() {
        assert!(r("Km(2,2)").unwrap_err().is_refusal());
    }
}
