//! Brackets, adjoint exponentials and the row operators `ψ_i(N)`, `θ_i(N)`.
//!
//! Two evaluation routes exist. The matrix route works with the realization's
//! matrices and expands results back into the root-vector basis. The table
//! route works on coefficient vectors over `Φ⁺` using the structure constants
//! and is much faster; it drives the witness solver.

use num_traits::Zero;

use super::element::{LieElement, NilpotentElement};
use super::realization::ChevalleyRealization;
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};

/// `exp` of a nilpotent matrix (the series terminates).
pub fn nilpotent_exp(x: &Matrix<Rational>) -> Matrix<Rational> {
    let d = x.rows();
    let mut acc = Matrix::<Rational>::identity(d);
    let mut term = acc.clone();
    for k in 1..=d {
        term = term.matmul(x).scale(&Rational::new(1, k as i128));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

impl ChevalleyRealization<'_> {
    pub fn bracket(&self, a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
        a.commutator(b)
    }

    pub fn bracket_elements(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.expand(&self.bracket(&self.to_matrix(x), &self.to_matrix(y)))
    }

    /// `Ad(exp X)(Y) = Σ_k ad^k(X)(Y) / k!` on matrices, re-expanded.
    pub fn ad_exp(&self, x: &NilpotentElement, y: &LieElement) -> Result<LieElement> {
        self.expand(&self.ad_exp_matrix(&self.nilpotent_matrix(x), &self.to_matrix(y)))
    }

    pub fn ad_exp_matrix(&self, x: &Matrix<Rational>, y: &Matrix<Rational>) -> Matrix<Rational> {
        let mut acc = y.clone();
        let mut term = y.clone();
        let mut k = 1i128;
        loop {
            term = x.commutator(&term).scale(&Rational::new(1, k));
            if term.is_zero() {
                return acc;
            }
            acc = acc.add(&term);
            k += 1;
        }
    }

    /// `exp(X) Y exp(-X)`, the group-level adjoint action.
    pub fn conjugate_by_exp(&self, x: &Matrix<Rational>, y: &Matrix<Rational>) -> Matrix<Rational> {
        let minus = x.scale(&rat(-1));
        nilpotent_exp(x).matmul(y).matmul(&nilpotent_exp(&minus))
    }

    /// `[X, Y]` for `X, Y ∈ n` on coefficient vectors over `Φ⁺`.
    pub fn bracket_n(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); x.len()];
        for &(a, b, c, m) in self.constants().positive_triples() {
            let (xa, yb) = (x[a], y[b]);
            if !xa.is_zero() && !yb.is_zero() {
                out[c] += xa * yb * rat(m);
            }
        }
        out
    }

    /// `Ad(exp X)(Y)` for `X, Y ∈ n` on coefficient vectors.
    pub fn ad_exp_n(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut acc = y.to_vec();
        if x.iter().all(Zero::is_zero) {
            return acc;
        }
        let mut term = y.to_vec();
        let mut k = 1i128;
        loop {
            term = self.bracket_n(x, &term);
            if term.iter().all(Zero::is_zero) {
                return acc;
            }
            let inv = Rational::new(1, k);
            for (a, t) in acc.iter_mut().zip(term.iter_mut()) {
                *t *= inv;
                *a += *t;
            }
            k += 1;
        }
    }

    /// `ψ_i(N)` from the structure constants: entry `(α, β)` is
    /// `m_{α-β,β} n_{α-β}` when `α - β ∈ Φ⁺`. Rows and columns follow the row
    /// order (highest root first).
    pub fn psi_formula(&self, n: &NilpotentElement, i: usize) -> Matrix<Rational> {
        let rs = self.root_system();
        let row = rs.rows().row(i);
        Matrix::from_fn(row.len(), row.len(), |r, c| {
            let diff = row[r].minus(&row[c]);
            match rs.index_of_coeffs(&diff) {
                Some(d) if d < rs.num_positive() => rat(self.constants().get(d, rs.index(&row[c]))) * n.coeff(d),
                _ => Rational::zero(),
            }
        })
    }

    /// `ψ_i(N) = ρ_i ∘ ad N` restricted to `n_i`, computed from matrix brackets
    /// and checked against [`Self::psi_formula`].
    pub fn psi_matrix(&self, n: &NilpotentElement, i: usize) -> Result<Matrix<Rational>> {
        let rs = self.root_system();
        let row = rs.rows().row(i);
        let nm = self.nilpotent_matrix(n);
        let mut out = Matrix::<Rational>::zeros(row.len(), row.len());
        for (c, beta) in row.iter().enumerate() {
            let e = self.root_vector(beta).map(|&v| rat(v));
            let image = self.expand(&nm.commutator(&e))?;
            for (r, alpha) in row.iter().enumerate() {
                out.set(r, c, image.coeff(rs.index(alpha)));
            }
        }
        let formula = self.psi_formula(n, i);
        for r in 0..row.len() {
            for c in 0..row.len() {
                if out.get(r, c) != formula.get(r, c) {
                    return Err(Error::PsiMismatch {
                        row: i,
                        alpha: row[r].to_text(),
                        beta: row[c].to_text(),
                    });
                }
            }
        }
        Ok(out)
    }

    /// `θ_i(N)(X) = ρ_i Ad(exp X)(N)` for `X` supported on a single row; the
    /// result is listed in row order.
    pub fn theta_row(&self, n: &NilpotentElement, x: &NilpotentElement, i: usize) -> Result<Vec<Rational>> {
        let rs = self.root_system();
        x.single_row(rs)?;
        let image = self.ad_exp(x, &LieElement::from_nilpotent(rs, n))?;
        Ok(rs.rows().row(i).iter().map(|a| image.coeff(rs.index(a))).collect())
    }
}
