//! Builds the matrix realization, inspects a few structure constants and the
//! operator `ψ_1(N)`, then runs the randomized identity checks.

use hessenpave::liealg::{verify_lemmata, ChevalleyRealization, NilpotentElement};
use hessenpave::rootcore::{LieType, RootSystem};

fn main() -> hessenpave::Result<()> {
    let c3 = RootSystem::new(LieType::C, 3)?;
    let real = ChevalleyRealization::new(&c3)?;
    let (a1, a2, a3) = (c3.simple_root(1), c3.simple_root(2), c3.simple_root(3));
    println!("m(α1, α2) = {}, m(α2, α3) = {}", real.m(a1, a2), real.m(a2, a3));

    let n = NilpotentElement::sum_of_simple(&c3);
    println!("ψ_1(N) = {:?}", real.psi_matrix(&n, 1)?);

    for (t, rank) in [(LieType::C, 3), (LieType::D, 4)] {
        let rs = RootSystem::new(t, rank)?;
        let real = ChevalleyRealization::new(&rs)?;
        let report = verify_lemmata(&real, 25, 1);
        println!("{t}{rank}:");
        for check in &report.checks {
            println!("  {:<15} {:?}  {}", check.name, check.status, check.detail);
        }
        report.into_result()?;
    }
    Ok(())
}
