//! First resonance varieties of `G_Γ` and `N_Γ`.
//!
//! Two routes are provided: a pointwise membership test computed straight
//! from the cohomology ring, and the component description indexed by the
//! maximal vertex sets `W` with `Γ_W` disconnected. Components are labelled
//! by the isotropicity type of the restricted cup product, which feeds the
//! quasi-Kähler obstruction.

use crate::cohomology::{bb_ring, raag_ring, Ambient, Cocycle, CohomologyRing};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{format_q, rank_of, QMatrix, Q};
use num::Zero;
use serde::Serialize;

/// Largest vertex count enumerated without an explicit override.
pub const ENUMERATION_LIMIT: usize = 16;
/// Hard ceiling imposed by the 64-bit subset masks.
pub const MASK_LIMIT: usize = 63;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SizeGuard {
    #[default]
    Bounded,
    AllowLarge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Isotropicity {
    Zero,
    One,
    Neither,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceComponent {
    pub ambient: Ambient,
    pub w: VertexSet,
    pub dimension: usize,
    pub basis: Vec<Cocycle>,
    pub isotropicity: Isotropicity,
}

impl ResonanceComponent {
    /// Whether `a` lies in the span of the basis.
    pub fn contains(&self, a: &Cocycle) -> bool {
        let mut rows: Vec<Vec<Q>> = self.basis.iter().map(|b| b.coords.clone()).collect();
        rows.push(a.coords.clone());
        rank_of(&rows) == self.dimension
    }

    pub fn report(&self, g: &Graph) -> ComponentReport {
        ComponentReport {
            ambient: self.ambient,
            w: self.w.labels(g).iter().map(|s| s.to_string()).collect(),
            dim: self.dimension,
            isotropicity: self.isotropicity,
            basis_matrix: self.basis.iter().map(|b| b.coords.iter().map(format_q).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentReport {
    pub ambient: Ambient,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    pub dim: usize,
    pub isotropicity: Isotropicity,
    pub basis_matrix: Vec<Vec<String>>,
}

/// `H^1(A, ·a) ≠ 0`: the kernel of `·a: A^1 → A^2` is larger than the line
/// spanned by `a`.
pub fn resonance_membership(r: &CohomologyRing, a: &Cocycle) -> Result<bool> {
    if a.degree != 1 {
        return Err(Error::invalid("resonance is tested on degree-1 classes"));
    }
    if a.coords.len() != r.dim(1) {
        return Err(Error::invalid(format!("expected {} coordinates, got {}", r.dim(1), a.coords.len())));
    }
    if a.is_zero() {
        return Err(Error::invalid("the zero class is excluded from membership queries"));
    }
    let m = r.right_multiplication(1, a)?;
    let kernel = r.dim(1) - m.rank();
    Ok(kernel > 1)
}

fn check_size(g: &Graph, guard: SizeGuard) -> Result<()> {
    let limit = match guard {
        SizeGuard::Bounded => ENUMERATION_LIMIT,
        SizeGuard::AllowLarge => MASK_LIMIT,
    };
    if g.n() > limit {
        return Err(Error::TooLarge { vertices: g.n(), limit });
    }
    Ok(())
}

fn mask_components(nbrs: &[u64], mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let grown = comp | comp_neighbors(nbrs, comp) & mask;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

fn comp_neighbors(nbrs: &[u64], set: u64) -> u64 {
    let mut out = 0;
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        out |= nbrs[v];
        s &= s - 1;
    }
    out
}

/// The subsets `W` maximal among those with `Γ_W` disconnected, sorted.
///
/// `W` is maximal exactly when every outside vertex touches every component
/// of `Γ_W`.
pub fn maximal_disconnected_sets(g: &Graph, guard: SizeGuard) -> Result<Vec<VertexSet>> {
    check_size(g, guard)?;
    let n = g.n();
    let nbrs = g.neighbor_masks();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    for w in 1..=full {
        if w.count_ones() < 2 {
            continue;
        }
        let comps = mask_components(&nbrs, w);
        if comps.len() < 2 {
            continue;
        }
        let maximal = (0..n)
            .filter(|v| w >> v & 1 == 0)
            .all(|v| comps.iter().all(|&c| nbrs[v] & c != 0));
        if maximal {
            out.push(VertexSet::from_mask(w));
        }
    }
    out.sort();
    Ok(out)
}

/// Isotropicity type of the span of `basis` inside the degree-1 part of `r`.
fn isotropicity_of(basis: &[Cocycle], r: &CohomologyRing) -> Isotropicity {
    let k = basis.len();
    if k <= 1 {
        return Isotropicity::NotApplicable;
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let products: Vec<Vec<Q>> = pairs
        .iter()
        .map(|&(i, j)| r.cup(&basis[i], &basis[j]).expect("degree 2 stored").coords)
        .collect();
    match rank_of(&products) {
        0 => Isotropicity::Zero,
        1 => {
            // express every product as ω_ij · w for a single spanning w
            let w = products.iter().find(|p| p.iter().any(|x| !x.is_zero())).expect("rank 1");
            let pivot = w.iter().position(|x| !x.is_zero()).expect("nonzero");
            let mut form = QMatrix::zeros(k, k);
            for (&(i, j), p) in pairs.iter().zip(&products) {
                let c = &p[pivot] / &w[pivot];
                form.set(j, i, -c.clone());
                form.set(i, j, c);
            }
            if form.rank() == k {
                Isotropicity::One
            } else {
                Isotropicity::Neither
            }
        }
        _ => Isotropicity::Neither,
    }
}

/// Isotropicity label of a component relative to the ring its basis lives in.
pub fn classify_isotropicity(c: &ResonanceComponent, r: &CohomologyRing) -> Isotropicity {
    isotropicity_of(&c.basis, r)
}

fn coordinate_component(r: &CohomologyRing, w: VertexSet) -> ResonanceComponent {
    let basis: Vec<Cocycle> = w.vertices().iter().map(|&v| r.basis_class(1, v)).collect();
    ResonanceComponent {
        ambient: Ambient::Raag,
        dimension: basis.len(),
        isotropicity: isotropicity_of(&basis, r),
        w,
        basis,
    }
}

/// Components `H_W` of `R_1(G_Γ)`, one per maximal `W` with `Γ_W`
/// disconnected.
pub fn raag_resonance(g: &Graph) -> Result<Vec<ResonanceComponent>> {
    raag_resonance_with(g, SizeGuard::Bounded)
}

pub fn raag_resonance_with(g: &Graph, guard: SizeGuard) -> Result<Vec<ResonanceComponent>> {
    let sets = maximal_disconnected_sets(g, guard)?;
    let r = raag_ring(g);
    Ok(sets.into_iter().map(|w| coordinate_component(&r, w)).collect())
}

/// Components of `R_1(N_Γ)`, given the kernel ring.
///
/// With connectivity 1 the variety is all of `H^1(N)` (recorded with
/// `W = V`); with connectivity above 1 the components are `ι*(H_W)` over the
/// same maximal sets as for `G_Γ`. A one-dimensional `H^1(N)` (Γ = K_2,
/// `N = Z`) has no resonant nonzero classes, so no component is emitted.
pub fn bb_resonance_in(g: &Graph, ring: &CohomologyRing, guard: SizeGuard) -> Result<Vec<ResonanceComponent>> {
    let kernel = ring
        .kernel_data()
        .ok_or_else(|| Error::invalid("bb_resonance needs the Bestvina-Brady ring"))?;
    if g.n() <= 1 {
        return Err(Error::refused("the kernel of a one-vertex graph is trivial"));
    }
    check_size(g, guard)?;
    let build = |w: VertexSet| {
        let basis: Vec<Cocycle> =
            w.vertices().iter().map(|&v| kernel.restrict(&kernel.raag.basis_class(1, v))).collect();
        let dimension = rank_of(&basis.iter().map(|b| b.coords.clone()).collect::<Vec<_>>());
        let basis = if dimension == basis.len() {
            basis
        } else {
            // W = V: ι*(H_V) is all of H^1(N); use the standard basis
            (0..ring.dim(1)).map(|i| ring.basis_class(1, i)).collect()
        };
        ResonanceComponent {
            ambient: Ambient::Bb,
            dimension: basis.len(),
            isotropicity: isotropicity_of(&basis, ring),
            w,
            basis,
        }
    };
    if g.connectivity() == 1 {
        if ring.dim(1) <= 1 {
            return Ok(Vec::new());
        }
        return Ok(vec![build(g.all_vertices())]);
    }
    Ok(maximal_disconnected_sets(g, guard)?.into_iter().map(build).collect())
}

/// Components of `R_1(N_Γ)`; refuses unless the flag complex is certified
/// simply connected and `|V| > 1`.
pub fn bb_resonance(g: &Graph) -> Result<Vec<ResonanceComponent>> {
    bb_resonance_with(g, SizeGuard::Bounded)
}

pub fn bb_resonance_with(g: &Graph, guard: SizeGuard) -> Result<Vec<ResonanceComponent>> {
    if g.n() <= 1 {
        return Err(Error::refused("the kernel of a one-vertex graph is trivial"));
    }
    check_size(g, guard)?;
    let ring = bb_ring(g)?;
    bb_resonance_in(g, &ring, guard)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ObstructionMode {
    QuasiKahler,
    Kahler,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    /// Index into the checked component list.
    pub component: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub pass: bool,
    pub mode: ObstructionMode,
    pub witness: Option<ObstructionWitness>,
}

/// Isotropicity obstruction for a 1-formal (quasi-)Kähler fundamental group:
/// every positive-dimensional component must be 0-isotropic of dimension at
/// least 2 or 1-isotropic of dimension at least 4; in Kähler mode only the
/// 1-isotropic kind is allowed.
pub fn obstruction_check(components: &[ResonanceComponent], mode: ObstructionMode) -> ObstructionVerdict {
    for (i, c) in components.iter().enumerate() {
        if c.dimension == 0 {
            continue;
        }
        let failure = match (c.isotropicity, mode) {
            (Isotropicity::Zero, ObstructionMode::QuasiKahler) if c.dimension >= 2 => None,
            (Isotropicity::Zero, ObstructionMode::Kahler) => {
                Some(format!("0-isotropic component of dimension {}; only 1-isotropic components are allowed", c.dimension))
            }
            (Isotropicity::One, _) if c.dimension >= 4 => None,
            (Isotropicity::One, _) => Some(format!("1-isotropic component of dimension {} < 4", c.dimension)),
            (Isotropicity::Zero, _) => Some(format!("0-isotropic component of dimension {} < 2", c.dimension)),
            (Isotropicity::Neither, _) => {
                Some(format!("component of dimension {} is neither 0- nor 1-isotropic", c.dimension))
            }
            (Isotropicity::NotApplicable, _) => {
                Some(format!("component of dimension {} has no isotropic structure", c.dimension))
            }
        };
        if let Some(reason) = failure {
            return ObstructionVerdict { pass: false, mode, witness: Some(ObstructionWitness { component: i, reason }) };
        }
    }
    ObstructionVerdict { pass: true, mode, witness: None }
}
