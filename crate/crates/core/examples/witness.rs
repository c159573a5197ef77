//! Solves for an explicit point `u ∈ U_w` with `Ad u(N) ∈ Ad w(H)` in every
//! nonempty cell of a paving, for a regular `N` that is not a sum of simple
//! root vectors.

use hessenpave::hessenberg::HessenbergSpace;
use hessenpave::liealg::{find_witness, ChevalleyRealization, NilpotentElement, WitnessRecord};
use hessenpave::linalg::rat;
use hessenpave::paving::cell_nonempty;
use hessenpave::rootcore::{LieType, RootSystem};

fn main() -> hessenpave::Result<()> {
    let rs = RootSystem::new(LieType::C, 3)?;
    let h = HessenbergSpace::peterson(&rs);
    let real = ChevalleyRealization::new(&rs)?;
    // Regular, with a nonzero coefficient on every positive root.
    let n = NilpotentElement::from_coeffs(vec![rat(1); rs.num_positive()]);

    let mut solved = 0;
    let mut shown = false;
    for w in rs.enumerate_weyl().iter().filter(|w| cell_nonempty(w, &h)) {
        let result = find_witness(&real, w, &h, &n)?;
        assert!(result.verified);
        solved += 1;
        // The first cell where N itself is not already in Ad w(H).
        if !shown && result.stage_solutions.iter().any(|x| !x.is_zero()) {
            let record = WitnessRecord::new(&rs, w, &h, &result);
            println!("{}", serde_json::to_string_pretty(&record)?);
            shown = true;
        }
    }
    println!("C3 Peterson: {solved} nonempty cells, all witnesses verified");
    Ok(())
}
