//! Explicit quasi-projective realizations: punctured line products and
//! Milnor fibers of product arrangements.

use artin_kernels::arrangement::{milnor_data, realize};
use artin_kernels::parse_graph;

fn main() -> artin_kernels::Result<()> {
    for s in ["K(1)", "K(3)", "path(4)", "Km(1,2,3)", "Km(2,2,2)", "Km(2,2,2,3)"] {
        let a = realize(&parse_graph(s)?)?;
        println!("{s:<12} {:?}: {}  (π_1 = {})", a.kind, a.variety, a.fundamental_group);
    }

    let oct = realize(&parse_graph("Km(2,2,2)")?)?;
    for e in [&[1, 1, 1, 1, 1, 1][..], &[1, 2, 1, 1, 1, 1], &[2, 2, 2, 2, 2, 2]] {
        match milnor_data(&oct, e) {
            Ok(m) => println!("\ne = {e:?}: f_e = {}, d_e = {}\n  {}", m.polynomial, m.degree, m.exact_sequence),
            Err(err) => println!("\ne = {e:?}: {err}"),
        }
    }

    let cone = realize(&parse_graph("Km(1,2,2)")?)?;
    println!("\n{}", milnor_data(&cone, &[1; 4]).unwrap_err());
    match realize(&parse_graph("Km(2,2)")?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
