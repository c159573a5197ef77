use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::rootcore::{Root, RootSystem};

/// An element `Σ n_α E_α` of the nilradical `n`, stored as one coefficient per
/// positive root (in the root system's positive-root order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NilpotentElement {
    coeffs: Vec<Rational>,
}

impl NilpotentElement {
    pub fn zero(rs: &RootSystem) -> Self {
        NilpotentElement {
            coeffs: vec![Rational::zero(); rs.num_positive()],
        }
    }

    /// `E_{α_1} + ⋯ + E_{α_n}`.
    pub fn sum_of_simple(rs: &RootSystem) -> Self {
        let mut n = Self::zero(rs);
        for a in rs.simple_roots() {
            n.coeffs[rs.index(a)] = rat(1);
        }
        n
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        NilpotentElement { coeffs }
    }

    /// Builds an element from `(root, coefficient)` pairs; every root must be
    /// a positive root of `rs`.
    pub fn from_pairs(rs: &RootSystem, pairs: &[(Root, Rational)]) -> Result<Self> {
        let mut n = Self::zero(rs);
        for (r, c) in pairs {
            let idx = rs
                .index_of_coeffs(r.coeffs())
                .filter(|&i| i < rs.num_positive())
                .ok_or_else(|| Error::NotARoot(r.coeffs().to_vec()))?;
            n.coeffs[idx] += *c;
        }
        Ok(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Rational] {
        &mut self.coeffs
    }

    pub fn coeff(&self, idx: usize) -> Rational {
        self.coeffs[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero `(root index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, *c))
    }

    /// Regular iff every simple root coefficient is nonzero.
    pub fn check_regular(&self, rs: &RootSystem) -> Result<()> {
        for (i, a) in rs.simple_roots().iter().enumerate() {
            if self.coeffs[rs.index(a)].is_zero() {
                return Err(Error::NotRegular(i + 1));
            }
        }
        Ok(())
    }

    pub fn is_regular(&self, rs: &RootSystem) -> bool {
        self.check_regular(rs).is_ok()
    }

    /// The single row containing the support, `None` for the zero element.
    pub fn single_row(&self, rs: &RootSystem) -> Result<Option<usize>> {
        let mut row = None;
        for (i, _) in self.support() {
            let r = rs.rows().row_of_index(i);
            match row {
                None => row = Some(r),
                Some(prev) if prev != r => return Err(Error::NotSingleRow),
                _ => {}
            }
        }
        Ok(row)
    }

    pub fn to_pairs(&self, rs: &RootSystem) -> Vec<(Root, Rational)> {
        self.support().map(|(i, c)| (rs.root_at(i), c)).collect()
    }
}

/// A general element `Σ h_i H_i + Σ_α c_α E_α` of the Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub cartan: Vec<Rational>,
    /// Indexed by root index (positives, then negatives).
    pub roots: Vec<Rational>,
}

impl LieElement {
    pub fn zero(rs: &RootSystem) -> Self {
        LieElement {
            cartan: vec![Rational::zero(); rs.rank()],
            roots: vec![Rational::zero(); rs.num_roots()],
        }
    }

    pub fn from_nilpotent(rs: &RootSystem, n: &NilpotentElement) -> Self {
        let mut e = Self::zero(rs);
        e.roots[..n.coeffs.len()].copy_from_slice(&n.coeffs);
        e
    }

    pub fn coeff(&self, idx: usize) -> Rational {
        self.roots[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().chain(&self.roots).all(Zero::is_zero)
    }

    /// The `n` component, if the element lies in `n`.
    pub fn to_nilpotent(&self, rs: &RootSystem) -> Option<NilpotentElement> {
        let p = rs.num_positive();
        let in_n = self.cartan.iter().chain(&self.roots[p..]).all(Zero::is_zero);
        in_n.then(|| NilpotentElement::from_coeffs(self.roots[..p].to_vec()))
    }
}
