//! Pavings of every Hessenberg space for all classical systems of rank at
//! most three, summarized per system.

use std::collections::BTreeMap;

use hessenpave::cli::sweep;

fn main() -> hessenpave::Result<()> {
    let records = sweep(None, None, 3)?;
    let mut summary: BTreeMap<String, (usize, u64)> = BTreeMap::new();
    for r in &records {
        let entry = summary.entry(format!("{}{}", r.lie_type, r.rank)).or_default();
        entry.0 += 1;
        entry.1 = entry.1.max(r.betti.iter().sum());
    }
    for (system, (spaces, cells)) in summary {
        println!("{system}: {spaces} Hessenberg spaces, at most {cells} nonempty cells");
    }
    Ok(())
}
