//! Positive roots, row decomposition and Weyl group data of a classical system.
//!
//! cargo run --example root_systems -- C 3

use hessenpave::rootcore::{LieType, RootSystem};

fn main() -> hessenpave::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lie_type: LieType = args.first().map_or("C", String::as_str).parse()?;
    let rank: usize = args.get(1).map_or(Ok(3), |s| s.parse()).unwrap_or(3);
    let rs = RootSystem::new(lie_type, rank)?;

    println!(
        "{lie_type}{rank}: {} positive roots, Weyl group of order {}",
        rs.num_positive(),
        rs.enumerate_weyl().len()
    );
    println!("Cartan matrix {:?}", rs.cartan_matrix());

    for (i, row) in rs.rows().rows().iter().enumerate() {
        let roots: Vec<String> = row.iter().map(|r| r.to_text()).collect();
        println!("row {}: {}", i + 1, roots.join("  "));
    }

    let w0 = rs.longest_element();
    println!("longest element {} of length {}", w0.word_text(), w0.length());
    let inversions = rs.inversion_set(&w0);
    assert_eq!(inversions.len(), rs.num_positive());
    Ok(())
}
