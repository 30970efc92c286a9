//! Right-angled Artin groups `G_Γ`, their Bestvina–Brady kernels
//! `N_Γ = ker(ν: G_Γ → Z)`, and the decision of which of these groups are
//! fundamental groups of quasi-projective, Kähler or projective varieties.
//!
//! The pipeline runs graph → flag complex → presentation → cohomology ring
//! → resonance variety → classification → arrangement realization, all in
//! exact rational or integer arithmetic.
//!
//! ```
//! use artin_kernels::{classify_bb, parse_graph, GroupClass};
//!
//! let octahedron = parse_graph("Km(2,2,2)").unwrap();
//! let report = classify_bb(&octahedron);
//! assert!(report.quasi_projective && !report.kahler);
//! assert_eq!(report.group_class, GroupClass::B4 { parts: vec![2, 2, 2] });
//! ```

pub mod arrangement;
pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod presentation;
pub mod resonance;

pub use arrangement::{milnor_data, realize, ArrangementRealization, MilnorReport, RealizationKind};
pub use classify::{classify_bb, classify_raag, ClassificationReport, GroupClass, Kollar};
pub use cohomology::{bb_ring, betti, raag_ring, Ambient, Cocycle, CohomologyRing};
pub use complex::{flag_complex, homology_h1, simple_connectivity, ConnectivityVerdict, FlagComplex};
pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, VertexSet};
pub use presentation::{abelianization, dicks_leary, raag_presentation, simplify, Presentation};
pub use resonance::{
    bb_resonance, obstruction_check, raag_resonance, resonance_membership, Isotropicity, ObstructionMode,
    ResonanceComponent,
};
