//! Cells of the paving, their dimensions and the resulting Betti numbers.

use hessenpave::hessenberg::HessenbergSpace;
use hessenpave::paving::{compute_paving, poincare_polynomial};
use hessenpave::rootcore::{LieType, RootSystem};

fn main() -> hessenpave::Result<()> {
    let a2 = RootSystem::new(LieType::A, 2)?;
    let peterson = HessenbergSpace::from_function(&a2, &[2, 3, 3])?;
    for cell in compute_paving(&peterson) {
        match (cell.dim, cell.row_profile) {
            (Some(d), Some(p)) => println!("w = {:<6} dim {d}  rows {p:?}", cell.w.word_text()),
            _ => println!("w = {:<6} empty", cell.w.word_text()),
        }
    }
    println!("A2 Peterson: {:?}", poincare_polynomial(&peterson).coefficients());

    for (t, n) in [(LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
        let rs = RootSystem::new(t, n)?;
        let betti = poincare_polynomial(&HessenbergSpace::peterson(&rs));
        println!("{t}{n} Peterson: {:?} ({} cells)", betti.coefficients(), betti.total());
    }
    Ok(())
}
