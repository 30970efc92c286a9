//! Presentations of G_Γ and N_Γ and their Tietze simplification.

use artin_kernels::presentation::{simplify_traced, GrowthPolicy};
use artin_kernels::{abelianization, dicks_leary, parse_graph, raag_presentation, simplify};

fn main() -> artin_kernels::Result<()> {
    let g = parse_graph("K(3)")?;
    print!("G for K(3):\n{}", raag_presentation(&g));

    let p = dicks_leary(&g)?;
    print!("\nN for K(3):\n{p}");
    let (s, moves) = simplify_traced(&p, 1000, GrowthPolicy::NonIncreasing);
    for m in &moves {
        println!("  eliminate {} via {}: {} = {}", m.generator, m.relator, m.generator, m.substitution);
    }
    print!("simplified:\n{s}");

    let tree = parse_graph("path(5)")?;
    let p = dicks_leary(&tree)?;
    println!("\nN for path(5): free = {}, rank {}", p.is_free(), p.generators().len());

    let oct = dicks_leary(&parse_graph("Km(2,2,2)")?)?;
    let small = simplify(&oct, 1000);
    let ab = abelianization(&small);
    println!(
        "\nN for K_{{2,2,2}}: {} -> {} generators, abelianization Z^{} with torsion {:?}",
        oct.generators().len(),
        small.generators().len(),
        ab.rank,
        ab.torsion
    );

    match dicks_leary(&parse_graph("cycle(4)")?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\ncycle(4): {e}"),
    }
    Ok(())
}
