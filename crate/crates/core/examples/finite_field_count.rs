//! Counts `F_q`-points of type-A Hessenberg varieties by brute force and
//! compares them with the predicted cell dimensions.

use hessenpave::fforacle::count_points;

fn main() -> hessenpave::Result<()> {
    for (n, q, h) in [(3, 2, vec![2, 3, 3]), (3, 2, vec![2, 2, 3]), (4, 3, vec![2, 3, 4, 4])] {
        let counts = count_points(n, q, &h)?;
        let cells: Vec<String> = counts
            .cells
            .iter()
            .filter(|c| c.count > 0)
            .map(|c| format!("{}:{}", c.perm, c.count))
            .collect();
        println!(
            "n = {n}, q = {q}, h = {h:?}: total {} = Betti evaluation {}",
            counts.total, counts.betti_eval
        );
        println!("  {}", cells.join(" "));
    }
    Ok(())
}
