//! Which Bestvina-Brady kernels are quasi-Kähler, Kähler, or aspherical
//! quasi-projective, over a handful of small graphs.

use artin_kernels::{classify_bb, classify_raag, parse_graph};

fn main() -> artin_kernels::Result<()> {
    let graphs = [
        "K(1)", "K(2)", "K(3)", "K(4)", "K(5)", "path(4)", "Km(1,3)", "Km(1,2,2)", "Km(1,1,3)",
        "Km(2,2)", "Km(2,3)", "Km(2,2,2)", "Km(2,2,3)", "cycle(4)", "cycle(5)", "Kbar(3)",
    ];
    println!("{:<12} {:<16} {:<15} {:<6} {:<7} {:<18} {}", "graph", "class", "structure", "qK", "Kähler", "Kollár", "G qK");
    for s in graphs {
        let g = parse_graph(s)?;
        let r = classify_bb(&g);
        let raag = classify_raag(&g);
        println!(
            "{:<12} {:<16} {:<15} {:<6} {:<7} {:<18} {}",
            s,
            r.group_class.label(),
            if r.quasi_kahler { r.structure.as_str() } else { "-" },
            r.quasi_kahler,
            r.kahler,
            format!("{:?}", r.kollar),
            raag.quasi_kahler
        );
    }

    let explained = classify_bb(&parse_graph("cycle(5)")?);
    println!("\nwhy C_5 fails:");
    for line in explained.explanation() {
        println!("  {line}");
    }
    Ok(())
}
