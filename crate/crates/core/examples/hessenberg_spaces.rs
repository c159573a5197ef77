//! Enumerates the Hessenberg spaces of a root system and shows the three
//! named ones.

use hessenpave::hessenberg::{enumerate_hessenberg, HessenbergSpace};
use hessenpave::rootcore::{LieType, RootSystem};

fn main() -> hessenpave::Result<()> {
    let a3 = RootSystem::new(LieType::A, 3)?;
    for h in enumerate_hessenberg(&a3) {
        println!("{:?}  {}", h.to_function().unwrap_or_default(), h.to_text());
    }

    let b3 = RootSystem::new(LieType::B, 3)?;
    let spaces = enumerate_hessenberg(&b3);
    println!("B3 has {} Hessenberg spaces", spaces.len());
    for name in ["borel", "peterson", "full"] {
        let h = HessenbergSpace::parse(&b3, name)?;
        println!("{name:>8}: {} negative roots", h.negative_count());
    }

    // A non-closed set of negative roots is rejected.
    let bad = HessenbergSpace::parse(&b3, "neg=-1,1,0");
    println!("neg=-1,1,0 -> {}", bad.unwrap_err());
    Ok(())
}
