//! Brute-force point counts of type-A Hessenberg varieties over `F_q`.
//!
//! Every complete flag in `F_q^n` is enumerated once, cell by cell, in Bruhat
//! normal form. A flag passes when `N V_i ⊆ V_{h(i)}` for the single Jordan
//! block `N`. A paving by affine cells forces `q^dim` points in each nonempty
//! cell, which gives an oracle for the combinatorial cell data that is
//! independent of the root-system computation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::paving::{cell_dimension, cell_nonempty, poincare_polynomial};
use crate::rootcore::{LieType, RootSystem, WeylElement};

pub const MAX_N: usize = 5;
pub const PRIMES: [u32; 3] = [2, 3, 5];

/// Dense matrix over the prime field `F_q`, entries kept in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    q: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PrimeFieldMatrix {
    /// Zero matrix; `q` must be a prime at most 7.
    pub fn zeros(q: u32, rows: usize, cols: usize) -> Self {
        assert!(matches!(q, 2 | 3 | 5 | 7), "unsupported field size {q}");
        PrimeFieldMatrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.q;
    }

    /// The single nilpotent Jordan block: ones on the superdiagonal.
    pub fn jordan_block(q: u32, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for r in 0..n.saturating_sub(1) {
            m.set(r, r + 1, 1);
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.q, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s: u32 = (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum();
                out.set(r, c, s);
            }
        }
        out
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> Self {
        let mut out = Self::zeros(self.q, self.rows, k);
        for r in 0..self.rows {
            for c in 0..k {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.q, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let q = self.q;
        let mut a = self.data.clone();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..self.rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            let inv = inverse_mod(a[rank * cols + c], q);
            for r in 0..self.rows {
                let f = a[r * cols + c];
                if r == rank || f == 0 {
                    continue;
                }
                let f = f * inv % q;
                for j in 0..cols {
                    a[r * cols + j] = (a[r * cols + j] + (q - f) * a[rank * cols + j]) % q;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn inverse_mod(a: u32, q: u32) -> u32 {
    (1..q)
        .find(|&b| a * b % q == 1)
        .expect("nonzero element of a prime field")
}

/// A flag in the Bruhat cell of `perm`, stored as the full-rank matrix whose
/// leading column spans are `V_1 ⊂ … ⊂ V_n`. Column `j` has a one in row
/// `perm[j]` and free entries above it in rows not used by earlier columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatFlag {
    pub perm: Vec<usize>,
    pub matrix: PrimeFieldMatrix,
}

impl BruhatFlag {
    pub fn subspace(&self, i: usize) -> PrimeFieldMatrix {
        self.matrix.leading_columns(i)
    }
}

/// Free positions `(row, column)` of the normal form, one per inversion.
fn free_positions(perm: &[usize]) -> Vec<(usize, usize)> {
    let n = perm.len();
    let mut out = Vec::new();
    for j in 0..n {
        for r in 0..perm[j] {
            if !perm[..j].contains(&r) {
                out.push((r, j));
            }
        }
    }
    out
}

/// One-line notation, 1-based, e.g. `"213"`.
pub fn perm_text(perm: &[usize]) -> String {
    perm.iter().map(|p| (p + 1).to_string()).collect()
}

/// Permutation of `{0..n-1}` of a type-A Weyl element, `s_i = (i-1 i)`.
pub fn weyl_permutation(w: &WeylElement, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for &i in w.word().iter().rev() {
        for p in perm.iter_mut() {
            if *p == i - 1 {
                *p = i;
            } else if *p == i {
                *p = i - 1;
            }
        }
    }
    perm
}

fn check_bounds(n: usize, q: u32) -> Result<()> {
    if !(2..=MAX_N).contains(&n) || !PRIMES.contains(&q) {
        return Err(Error::OracleBounds { n, q });
    }
    Ok(())
}

/// All `q^{ℓ(w)}` flags of the Bruhat cell of `perm`.
pub fn enumerate_cell_flags(n: usize, q: u32, perm: &[usize]) -> Result<impl Iterator<Item = BruhatFlag>> {
    check_bounds(n, q)?;
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if perm.len() != n || sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Parse(format!("not a permutation of 1..{n}: {perm:?}")));
    }
    let free = free_positions(perm);
    let total = (q as u64).pow(free.len() as u32);
    let perm = perm.to_vec();
    Ok((0..total).map(move |mut code| {
        let mut m = PrimeFieldMatrix::zeros(q, n, n);
        for (j, &p) in perm.iter().enumerate() {
            m.set(p, j, 1);
        }
        for &(r, c) in &free {
            m.set(r, c, (code % q as u64) as u32);
            code /= q as u64;
        }
        BruhatFlag {
            perm: perm.clone(),
            matrix: m,
        }
    }))
}

/// `N V_i ⊆ V_{h(i)}` for every `i`, with `h` 1-based as a Hessenberg function.
pub fn hessenberg_check(flag: &BruhatFlag, nilpotent: &PrimeFieldMatrix, h: &[usize]) -> bool {
    let image = nilpotent.matmul(&flag.matrix);
    h.iter().enumerate().all(|(k, &hi)| {
        let target = flag.subspace(hi);
        target.hstack(&image.leading_columns(k + 1)).rank() == hi
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCount {
    pub perm: String,
    pub count: u64,
    pub predicted: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCount {
    pub n: usize,
    pub q: u32,
    pub h: Vec<usize>,
    pub cells: Vec<CellCount>,
    pub total: u64,
    pub betti_eval: u64,
}

impl PointCount {
    /// Per-cell counts against the prediction, then the total against the
    /// Betti evaluation.
    pub fn check(&self) -> Result<()> {
        for c in &self.cells {
            if c.count != c.predicted {
                return Err(Error::CountMismatch {
                    perm: c.perm.clone(),
                    count: c.count,
                    predicted: c.predicted,
                });
            }
        }
        if self.total != self.betti_eval {
            return Err(Error::CountMismatch {
                perm: "total".into(),
                count: self.total,
                predicted: self.betti_eval,
            });
        }
        Ok(())
    }
}

/// Counts `F_q`-points of `Hess(N, h)` cell by cell without checking them.
pub fn tally_points(n: usize, q: u32, h: &[usize]) -> Result<PointCount> {
    check_bounds(n, q)?;
    let rs = RootSystem::new(LieType::A, n - 1)?;
    let space = HessenbergSpace::from_function(&rs, h)?;
    let nilpotent = PrimeFieldMatrix::jordan_block(q, n);
    let mut cells = Vec::new();
    for w in rs.enumerate_weyl() {
        let perm = weyl_permutation(&w, n);
        let count = enumerate_cell_flags(n, q, &perm)?
            .filter(|f| hessenberg_check(f, &nilpotent, h))
            .count() as u64;
        let predicted = if cell_nonempty(&w, &space) {
            (q as u64).pow(cell_dimension(&w, &space)? as u32)
        } else {
            0
        };
        cells.push(CellCount {
            perm: perm_text(&perm),
            count,
            predicted,
        });
    }
    Ok(PointCount {
        n,
        q,
        h: h.to_vec(),
        total: cells.iter().map(|c| c.count).sum(),
        betti_eval: poincare_polynomial(&space).evaluate(q as u64),
        cells,
    })
}

/// [`tally_points`] followed by [`PointCount::check`].
pub fn count_points(n: usize, q: u32, h: &[usize]) -> Result<PointCount> {
    let counts = tally_points(n, q, h)?;
    counts.check()?;
    Ok(counts)
}
