//! First resonance varieties of G_Γ and N_Γ, with pointwise membership
//! queries and the isotropicity obstruction.

use artin_kernels::linalg::q;
use artin_kernels::resonance::ObstructionMode;
use artin_kernels::{
    bb_resonance, bb_ring, obstruction_check, parse_graph, raag_resonance, raag_ring, resonance_membership, Cocycle,
};

fn main() -> artin_kernels::Result<()> {
    let g = parse_graph("path(4)")?;
    let ring = raag_ring(&g);
    println!("R_1(G) for path(4):");
    for c in raag_resonance(&g)? {
        println!("  W = {:?}", c.w.labels(&g));
    }
    for coords in [[1, 0, 1, 0], [1, 0, 0, 1], [1, 1, 1, 1]] {
        let a = Cocycle::new(1, coords.iter().map(|&x| q(x)).collect());
        println!("  {coords:?} resonant: {}", resonance_membership(&ring, &a)?);
    }

    let bowtie = "a b\na c\nb c\nc d\nc e\nd e\n";
    for s in ["Km(2,2,2)", "join(K(1),Km(2,2))", "path(4)", bowtie] {
        let g = parse_graph(s)?;
        let comps = bb_resonance(&g)?;
        let name = if s == bowtie { "the bowtie" } else { s };
        println!("\nR_1(N) for {name}, connectivity {}: b1 = {}", g.connectivity(), bb_ring(&g)?.dim(1));
        for c in &comps {
            println!("  W = {:?}: dim {}, {:?}", c.w.labels(&g), c.dimension, c.isotropicity);
        }
        for mode in [ObstructionMode::QuasiKahler, ObstructionMode::Kahler] {
            let v = obstruction_check(&comps, mode);
            let why = v.witness.map(|w| w.reason).unwrap_or_default();
            println!("  {mode:?}: {} {why}", if v.pass { "pass" } else { "fail" });
        }
    }
    Ok(())
}
