//! Flag complexes, their first homology, and certified simple connectivity.

use artin_kernels::complex::simple_connectivity_with_budget;
use artin_kernels::{flag_complex, homology_h1, parse_graph, simple_connectivity, ConnectivityVerdict, Graph};

fn main() -> artin_kernels::Result<()> {
    for s in ["K(4)", "cycle(4)", "Km(2,2,2)", "join(K(1),cycle(5))", "Kbar(2)"] {
        let g = parse_graph(s)?;
        let c = flag_complex(&g);
        let h1 = match homology_h1(&c) {
            Ok(h) => format!("b1 = {}, torsion {:?}", h.betti, h.torsion),
            Err(e) => e.to_string(),
        };
        println!("{s:<20} f = {:?}  {h1}", c.f_vector());
        match simple_connectivity(&g) {
            ConnectivityVerdict::Yes(cert) => println!("  simply connected: {cert:?}"),
            ConnectivityVerdict::No(why) => println!("  not simply connected: {}", why.describe()),
            ConnectivityVerdict::Unknown { reason } => println!("  undecided: {reason}"),
        }
    }

    // a strip of triangles has no join splitting; Tietze moves decide it
    let strip = Graph::on_numbered_vertices(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (1, 3), (2, 4), (3, 5)])?;
    if let ConnectivityVerdict::Yes(cert) = simple_connectivity(&strip) {
        println!("\ntriangle strip: {}", serde_json::to_string_pretty(&cert).expect("certificate serializes"));
    }
    println!("with no moves allowed: {:?}", simple_connectivity_with_budget(&strip, 0));
    Ok(())
}
