//! Exterior Stanley-Reisner rings H^*(G_Γ) and the quotient H^{≤2}(N_Γ).

use artin_kernels::linalg::format_q;
use artin_kernels::{bb_ring, parse_graph, raag_ring};

fn main() -> artin_kernels::Result<()> {
    let g = parse_graph("Km(2,2,2)")?;
    let raag = raag_ring(&g);
    println!("H^*(G) Betti numbers: {:?}", raag.betti());

    let n = bb_ring(&g)?;
    println!("H^*(N) Betti numbers: {:?}", n.betti());
    println!("H^1(N) basis: {:?}", n.basis(1).iter().map(|w| w.labels(&g).join(",")).collect::<Vec<_>>());
    println!("H^2(N) basis: {:?}", n.basis(2).iter().map(|w| w.labels(&g).join(",")).collect::<Vec<_>>());

    let (a, b) = (n.basis_class(1, 0), n.basis_class(1, 2));
    let ab = n.cup(&a, &b)?;
    println!("v1 ∪ v3 = {:?}", ab.coords.iter().map(format_q).collect::<Vec<_>>());
    let (a, b) = (n.basis_class(1, 0), n.basis_class(1, 1));
    println!("v1 ∪ v2 = 0: {}", n.cup(&a, &b)?.is_zero());

    let k = n.kernel_data().expect("kernel ring");
    println!("rank of multiplication by ν: {}", k.nu_rank);
    println!("restriction commutes with cup products: {}", n.diagram_commutes());

    let dump = n.dump(&g);
    let constants: usize = dump.products.iter().map(|t| t.entries.len()).sum();
    println!("ring dump: {constants} nonzero structure constants in {} tables", dump.products.len());
    Ok(())
}
