//! The octahedron K_{2,2,2}: its kernel is finitely presented, quasi-projective,
//! not of type FP_3, and realized as a Milnor fiber of a product arrangement.

use artin_kernels::arrangement::{milnor_data, realize};
use artin_kernels::{bb_resonance, bb_ring, classify_bb, dicks_leary, parse_graph, simplify};

fn main() -> artin_kernels::Result<()> {
    let g = parse_graph("Km(2,2,2)")?;

    let report = classify_bb(&g);
    println!("class {} ({})", report.group_class.label(), report.structure);
    println!("quasi-projective: {}, Kähler: {}, Kollár: {:?}", report.quasi_projective, report.kahler, report.kollar);
    for note in &report.notes {
        println!("  {note}");
    }

    let p = simplify(&dicks_leary(&g)?, 1000);
    println!("\npresentation after Tietze moves: {} generators, {} relators", p.generators().len(), p.relators().len());

    let ring = bb_ring(&g)?;
    println!("Betti numbers of N up to degree 2: {:?}", ring.betti());

    println!("\nresonance components:");
    for c in bb_resonance(&g)? {
        println!("  W = {:?}: dim {}, {:?}", c.w.labels(&g), c.dimension, c.isotropicity);
    }

    let a = realize(&g)?;
    println!("\nf = {}", a.polynomial);
    let m = milnor_data(&a, &[1; 6])?;
    println!("{}", m.exact_sequence);
    Ok(())
}
