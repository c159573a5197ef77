//! Partition of the positive roots into rows.
//!
//! Row `i` collects the positive roots whose expansion starts at `α_i`
//! (no `α_j` with `j < i` occurs). In types A, B and C the closed forms below
//! reproduce this exactly. In type D the closed forms put `α_n` next to
//! `α_{n-1}` in row `n - 1` and leave row `n` empty; that grouping is the one
//! the type-D sub-partition `Φ_i^0 ⊔ Φ_i^1 ⊔ Φ_i^2` is built on, so it is the
//! canonical one here and the definitional rows are compared after merging
//! their last two entries.

use std::collections::BTreeSet;

use super::root::{LieType, Root};
use super::system::RootSystem;
use crate::error::{Error, Result};

/// Rows `Φ_1..Φ_n` of the positive roots, each listed from highest to lowest
/// root (ties in type D in descending coefficient order).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowDecomposition {
    rows: Vec<Vec<Root>>,
    gammas: Vec<Option<Root>>,
    d_parts: Option<Vec<[Vec<Root>; 3]>>,
    row_of: Vec<usize>,
}

impl RowDecomposition {
    /// Builds the rows from the definition and from the closed forms and
    /// checks that the two agree.
    pub fn compute(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let t = rs.lie_type();

        let mut definitional: Vec<BTreeSet<Vec<i32>>> = vec![BTreeSet::new(); n];
        for r in rs.positive_roots() {
            let first = r.coeffs().iter().position(|&c| c != 0).expect("nonzero root");
            definitional[first].insert(r.coeffs().to_vec());
        }
        if t == LieType::D {
            let last = std::mem::take(&mut definitional[n - 1]);
            definitional[n - 2].extend(last);
        }

        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            let closed: BTreeSet<Vec<i32>> = closed_form_row(t, n, i).into_iter().collect();
            if closed != definitional[i - 1] || closed.iter().any(|c| !rs.is_root(c)) {
                return Err(Error::RowsDisagree { row: i });
            }
            let mut row: Vec<Root> = closed.into_iter().map(Root::from_coeffs).collect();
            row.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| b.0.cmp(&a.0)));
            rows.push(row);
        }

        let mut row_of = vec![usize::MAX; rs.num_positive()];
        for (i, row) in rows.iter().enumerate() {
            for r in row {
                row_of[rs.index(r)] = i + 1;
            }
        }

        let gammas = (1..=n)
            .map(|i| {
                (t == LieType::C && i < n).then(|| {
                    let mut c = vec![0; n];
                    for slot in c.iter_mut().take(n - 1).skip(i - 1) {
                        *slot = 2;
                    }
                    c[n - 1] = 1;
                    Root::from_coeffs(c)
                })
            })
            .collect();

        let d_parts = (t == LieType::D).then(|| {
            rows.iter()
                .enumerate()
                .map(|(k, row)| d_partition(rs, k + 1, row))
                .collect()
        });

        Ok(RowDecomposition {
            rows,
            gammas,
            d_parts,
            row_of,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `Φ_i`, 1-based. Indices outside `1..=n` give the empty row.
    pub fn row(&self, i: usize) -> &[Root] {
        if i == 0 || i > self.rows.len() {
            &[]
        } else {
            &self.rows[i - 1]
        }
    }

    pub fn rows(&self) -> &[Vec<Root>] {
        &self.rows
    }

    /// The row containing positive root with the given index.
    pub fn row_of_index(&self, idx: usize) -> usize {
        self.row_of[idx]
    }

    /// Type C: the long root `γ_i = 2Σ_{j=i}^{n-1} α_j + α_n` of row `i < n`.
    pub fn gamma(&self, i: usize) -> Option<&Root> {
        self.gammas.get(i.wrapping_sub(1)).and_then(Option::as_ref)
    }

    /// Type D: `Φ_i^part` for `part ∈ {0, 1, 2}`. Out-of-range rows and other
    /// types give the empty set.
    pub fn d_part(&self, i: usize, part: usize) -> &[Root] {
        match &self.d_parts {
            Some(parts) if i >= 1 && i <= parts.len() => &parts[i - 1][part],
            _ => &[],
        }
    }

    pub fn is_type_d(&self) -> bool {
        self.d_parts.is_some()
    }
}

/// Table of row closed forms, 1-based indices. Sums `Σ_{j=a}^{b}` with
/// `a > b` are empty.
fn closed_form_row(t: LieType, n: usize, i: usize) -> Vec<Vec<i32>> {
    let span = |a: usize, b: usize| -> Vec<i32> {
        let mut v = vec![0; n];
        for j in a..=b {
            if j >= 1 && j <= n {
                v[j - 1] += 1;
            }
        }
        v
    };
    let add = |x: Vec<i32>, y: Vec<i32>| -> Vec<i32> { x.iter().zip(&y).map(|(a, b)| a + b).collect() };
    let mut out = Vec::new();
    match t {
        LieType::A => {
            for k in i..=n {
                out.push(span(i, k));
            }
        }
        LieType::B => {
            for k in i..=n {
                out.push(span(i, k));
            }
            for k in i + 1..=n {
                out.push(add(span(k, n), span(i, n)));
            }
        }
        LieType::C => {
            for k in i..=n {
                out.push(span(i, k));
            }
            for k in i..n {
                out.push(add(span(k, n - 1), span(i, n)));
            }
        }
        LieType::D => {
            for k in i..n {
                out.push(span(i, k));
            }
            for k in i + 1..=n {
                let mut v = add(span(i, n - 2), span(k, n - 1));
                v[n - 1] += 1;
                out.push(v);
            }
        }
    }
    out
}

fn d_partition(rs: &RootSystem, i: usize, row: &[Root]) -> [Vec<Root>; 3] {
    let n = rs.rank();
    let mut parts: [Vec<Root>; 3] = Default::default();
    if row.is_empty() {
        return parts;
    }
    let prefix = |upto: usize| -> Vec<i32> {
        let mut v = vec![0; n];
        for slot in v.iter_mut().take(upto).skip(i - 1) {
            *slot = 1;
        }
        v
    };
    // Σ_{j=i}^{n-2} α_j (possibly empty) and Σ_{j=i}^{n} α_j.
    let low = prefix(n - 2);
    let full = prefix(n);
    let low_root = rs.root(&low).ok();
    let full_root = rs.root(&full).ok();
    let one_a = prefix(n - 1);
    let mut one_b = low.clone();
    one_b[n - 1] += 1;
    // Definition order: Σ_{j=i}^{n-1} α_j first, then the α_n variant.
    for c in [one_a, one_b] {
        if let Some(r) = row.iter().find(|r| r.coeffs() == c.as_slice()) {
            parts[1].push(r.clone());
        }
    }
    for r in row {
        if parts[1].contains(r) {
            continue;
        }
        if let Some(lr) = &low_root {
            if rs.dominance_leq(r, lr) {
                parts[0].push(r.clone());
                continue;
            }
        }
        if let Some(fr) = &full_root {
            if rs.dominance_leq(fr, r) {
                parts[2].push(r.clone());
            }
        }
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(rs: &[Root]) -> Vec<String> {
        rs.iter().map(Root::to_text).collect()
    }

    #[test]
    fn a2_rows() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let rows = rs.rows();
        assert_eq!(texts(rows.row(1)), vec!["1,1", "1,0"]);
        assert_eq!(texts(rows.row(2)), vec!["0,1"]);
    }

    #[test]
    fn b2_rows() {
        let rs = RootSystem::new(LieType::B, 2).unwrap();
        assert_eq!(texts(rs.rows().row(1)), vec!["1,2", "1,1", "1,0"]);
        assert_eq!(texts(rs.rows().row(2)), vec!["0,1"]);
    }

    #[test]
    fn c3_gammas() {
        let rs = RootSystem::new(LieType::C, 3).unwrap();
        assert_eq!(rs.rows().gamma(1).unwrap().to_text(), "2,2,1");
        assert_eq!(rs.rows().gamma(2).unwrap().to_text(), "0,2,1");
        assert!(rs.rows().gamma(3).is_none());
    }

    #[test]
    fn d4_row_one_and_parts() {
        let rs = RootSystem::new(LieType::D, 4).unwrap();
        let rows = rs.rows();
        let mut r1 = texts(rows.row(1));
        r1.sort();
        let mut expected = vec!["1,0,0,0", "1,1,0,0", "1,1,1,0", "1,1,0,1", "1,1,1,1", "1,2,1,1"];
        expected.sort();
        assert_eq!(r1, expected);
        assert_eq!(texts(rows.d_part(1, 0)), vec!["1,1,0,0", "1,0,0,0"]);
        assert_eq!(texts(rows.d_part(1, 1)), vec!["1,1,1,0", "1,1,0,1"]);
        assert_eq!(texts(rows.d_part(1, 2)), vec!["1,2,1,1", "1,1,1,1"]);
        assert_eq!(texts(rows.d_part(3, 1)), vec!["0,0,1,0", "0,0,0,1"]);
        assert!(rows.row(4).is_empty());
    }

    #[test]
    fn d_parts_count_fork_summands() {
        for n in 3..=6 {
            let rs = RootSystem::new(LieType::D, n).unwrap();
            let rows = rs.rows();
            for i in 1..=n {
                let mut union: Vec<Root> = Vec::new();
                for part in 0..3 {
                    for r in rows.d_part(i, part) {
                        let k = (r.coeff(n - 1) > 0) as usize + (r.coeff(n) > 0) as usize;
                        assert_eq!(k, part, "D{n} row {i} root {r}");
                        union.push(r.clone());
                    }
                }
                union.sort();
                let mut row = rows.row(i).to_vec();
                row.sort();
                assert_eq!(union, row);
            }
        }
    }

    #[test]
    fn rows_partition_positive_roots() {
        for t in LieType::ALL {
            for n in t.min_rank()..=6 {
                let rs = RootSystem::new(t, n).unwrap();
                let mut all: Vec<Root> = rs.rows().rows().iter().flatten().cloned().collect();
                assert_eq!(all.len(), rs.num_positive());
                all.sort();
                all.dedup();
                assert_eq!(all.len(), rs.num_positive(), "{t}{n}");
            }
        }
    }

    #[test]
    fn abc_rows_are_chains_of_simple_steps() {
        for t in [LieType::A, LieType::B, LieType::C] {
            for n in t.min_rank()..=6 {
                let rs = RootSystem::new(t, n).unwrap();
                for row in rs.rows().rows() {
                    for pair in row.windows(2) {
                        assert_eq!(pair[0].height(), pair[1].height() + 1);
                        let diff = pair[0].minus(&pair[1]);
                        assert_eq!(diff.iter().filter(|&&c| c == 1).count(), 1);
                        assert!(diff.iter().all(|&c| c == 0 || c == 1));
                    }
                }
            }
        }
    }
}
