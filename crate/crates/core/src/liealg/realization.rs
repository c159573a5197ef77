//! Matrix realizations of the classical Lie algebras.
//!
//! Type `A_n` lives in `gl_{n+1}`. Types B, C and D are the algebras
//! `{X : XᵀJ + JX = 0}` for an antidiagonal form `J` (symmetric for B and D,
//! alternating for C), so that `b` is upper triangular. The basis positions
//! carry weights `ε_1, …, ε_n` followed (in type B after a zero weight) by
//! `-ε_n, …, -ε_1`.

use num_traits::Zero;

use super::element::{LieElement, NilpotentElement};
use crate::error::{Error, Result};
use crate::linalg::{rat, solve_affine, Matrix, Rational};
use crate::rootcore::{LieType, Root, RootSystem};

/// Structure constants `[E_α, E_β] = m_{α,β} E_{α+β}`, indexed by root index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantTable {
    size: usize,
    entries: Vec<i64>,
    sums: Vec<Option<usize>>,
    /// `(a, b, a + b, m)` over positive `a`, `b` with `m ≠ 0`.
    positive_triples: Vec<(usize, usize, usize, i64)>,
}

impl StructureConstantTable {
    /// `m_{α,β}` by root index; zero when `α + β` is not a root.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.entries[a * self.size + b]
    }

    /// Index of `α + β` when it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.size + b]
    }

    pub fn positive_triples(&self) -> &[(usize, usize, usize, i64)] {
        &self.positive_triples
    }
}

/// Root vectors `E_α` as integer matrices with their structure constants.
#[derive(Clone, Debug)]
pub struct ChevalleyRealization<'rs> {
    rs: &'rs RootSystem,
    dim_rep: usize,
    root_vectors: Vec<Matrix<i64>>,
    pivots: Vec<(usize, usize)>,
    cartan_basis: Vec<Matrix<i64>>,
    constants: StructureConstantTable,
    normalized: bool,
}

fn weights(rs: &RootSystem) -> Vec<Vec<i32>> {
    let n = rs.rank();
    let unit = |k: usize, sign: i32, dim: usize| {
        let mut v = vec![0; dim];
        v[k] = sign;
        v
    };
    match rs.lie_type() {
        LieType::A => (0..=n).map(|k| unit(k, 1, n + 1)).collect(),
        LieType::B => {
            let mut w: Vec<Vec<i32>> = (0..n).map(|k| unit(k, 1, n)).collect();
            w.push(vec![0; n]);
            w.extend((0..n).rev().map(|k| unit(k, -1, n)));
            w
        }
        LieType::C | LieType::D => {
            let mut w: Vec<Vec<i32>> = (0..n).map(|k| unit(k, 1, n)).collect();
            w.extend((0..n).rev().map(|k| unit(k, -1, n)));
            w
        }
    }
}

fn form(rs: &RootSystem, d: usize) -> Option<Matrix<i64>> {
    let n = rs.rank();
    match rs.lie_type() {
        LieType::A => None,
        LieType::B | LieType::D => Some(Matrix::from_fn(d, d, |r, c| (r + c == d - 1) as i64)),
        LieType::C => Some(Matrix::from_fn(d, d, |r, c| {
            if r + c != d - 1 {
                0
            } else if r < n {
                1
            } else {
                -1
            }
        })),
    }
}

impl<'rs> ChevalleyRealization<'rs> {
    /// Builds the realization and checks every bracket relation.
    pub fn new(rs: &'rs RootSystem) -> Result<Self> {
        let w = weights(rs);
        let d = w.len();
        let j = form(rs, d);
        // J⁻¹ = J for the symmetric forms and -J for the alternating one.
        let j_inv = j.as_ref().map(|j| {
            if rs.lie_type() == LieType::C {
                j.scale(&-1)
            } else {
                j.clone()
            }
        });
        let mut root_vectors = Vec::with_capacity(rs.num_roots());
        for idx in 0..rs.num_roots() {
            let eps = rs.epsilon(&rs.root_at(idx));
            let (a, b) = (0..d)
                .flat_map(|a| (0..d).map(move |b| (a, b)))
                .find(|&(a, b)| a != b && w[a].iter().zip(&w[b]).zip(&eps).all(|((x, y), e)| x - y == *e))
                .ok_or_else(|| Error::Realization(format!("no matrix unit for root {}", rs.root_at(idx))))?;
            let mut x = Matrix::<i64>::zeros(d, d);
            x.set(a, b, 1);
            let e = match (&j, &j_inv) {
                (Some(j), Some(j_inv)) => {
                    let y = j_inv.matmul(&x.transpose()).matmul(j).scale(&-1);
                    if y == x {
                        x
                    } else {
                        x.add(&y)
                    }
                }
                _ => x,
            };
            root_vectors.push(e);
        }
        Self::assemble(rs, root_vectors, false)
    }

    fn assemble(rs: &'rs RootSystem, root_vectors: Vec<Matrix<i64>>, normalized: bool) -> Result<Self> {
        let d = root_vectors[0].rows();
        let p = rs.num_positive();
        let pivots: Vec<(usize, usize)> = root_vectors
            .iter()
            .map(|e| {
                e.first_nonzero()
                    .ok_or_else(|| Error::Realization("zero root vector".into()))
            })
            .collect::<Result<_>>()?;
        for (idx, e) in root_vectors.iter().enumerate() {
            let upper = (0..d).all(|r| (0..=r).all(|c| e.get(r, c).is_zero()));
            let lower = (0..d).all(|r| (r..d).all(|c| e.get(r, c).is_zero()));
            if (idx < p && !upper) || (idx >= p && !lower) {
                return Err(Error::Realization(format!(
                    "E_{} is not strictly {} triangular",
                    rs.root_at(idx),
                    if idx < p { "upper" } else { "lower" }
                )));
            }
        }
        let cartan_basis: Vec<Matrix<i64>> = rs
            .simple_roots()
            .iter()
            .map(|a| {
                let i = rs.index(a);
                root_vectors[i].commutator(&root_vectors[rs.neg_index(i)])
            })
            .collect();
        let diag = Matrix::from_fn(d, cartan_basis.len(), |r, c| rat(*cartan_basis[c].get(r, r)));
        if cartan_basis.iter().any(|h| !h.is_diagonal()) || crate::linalg::rank(&diag) != rs.rank() {
            return Err(Error::Realization(
                "Cartan basis is not a basis of diagonal matrices".into(),
            ));
        }

        let size = rs.num_roots();
        let mut entries = vec![0i64; size * size];
        let mut sums = vec![None; size * size];
        let mut positive_triples = Vec::new();
        for a in 0..size {
            let ra = rs.root_at(a);
            for b in 0..size {
                let rb = rs.root_at(b);
                let br = root_vectors[a].commutator(&root_vectors[b]);
                let sum = rs.sum_index(&ra, &rb);
                match sum {
                    Some(c) => {
                        let (pr, pc) = pivots[c];
                        let num = *br.get(pr, pc);
                        let den = *root_vectors[c].get(pr, pc);
                        if num % den != 0 || br != root_vectors[c].scale(&(num / den)) || num == 0 {
                            return Err(Error::Realization(format!(
                                "[E_{ra}, E_{rb}] is not a nonzero integer multiple of E_{}",
                                rs.root_at(c)
                            )));
                        }
                        let m = num / den;
                        entries[a * size + b] = m;
                        sums[a * size + b] = Some(c);
                        if a < p && b < p {
                            positive_triples.push((a, b, c, m));
                        }
                    }
                    None if b == rs.neg_index(a) => {
                        if !br.is_diagonal() || br.is_zero() {
                            return Err(Error::Realization(format!(
                                "[E_{ra}, E_{rb}] is not a nonzero Cartan element"
                            )));
                        }
                    }
                    None => {
                        if !br.is_zero() {
                            return Err(Error::Realization(format!("[E_{ra}, E_{rb}] should vanish")));
                        }
                    }
                }
            }
        }
        Ok(ChevalleyRealization {
            rs,
            dim_rep: d,
            root_vectors,
            pivots,
            cartan_basis,
            constants: StructureConstantTable {
                size,
                entries,
                sums,
                positive_triples,
            },
            normalized,
        })
    }

    pub fn root_system(&self) -> &'rs RootSystem {
        self.rs
    }

    /// Size of the defining matrices.
    pub fn dim_rep(&self) -> usize {
        self.dim_rep
    }

    pub fn root_vector(&self, root: &Root) -> &Matrix<i64> {
        &self.root_vectors[self.rs.index(root)]
    }

    pub fn root_vector_at(&self, idx: usize) -> &Matrix<i64> {
        &self.root_vectors[idx]
    }

    /// `H_i = [E_{α_i}, E_{-α_i}]`.
    pub fn cartan_basis(&self) -> &[Matrix<i64>] {
        &self.cartan_basis
    }

    pub fn constants(&self) -> &StructureConstantTable {
        &self.constants
    }

    /// `m_{α,β}`; zero when `α + β` is not a root.
    pub fn m(&self, alpha: &Root, beta: &Root) -> i64 {
        self.constants.get(self.rs.index(alpha), self.rs.index(beta))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn to_matrix(&self, x: &LieElement) -> Matrix<Rational> {
        let d = self.dim_rep;
        let mut m = Matrix::<Rational>::zeros(d, d);
        for (c, h) in x.cartan.iter().zip(&self.cartan_basis) {
            if !c.is_zero() {
                m.add_scaled(c, &h.map(|&v| rat(v)));
            }
        }
        for (idx, c) in x.roots.iter().enumerate() {
            if !c.is_zero() {
                add_scaled_int(&mut m, c, &self.root_vectors[idx]);
            }
        }
        m
    }

    pub fn nilpotent_matrix(&self, x: &NilpotentElement) -> Matrix<Rational> {
        let d = self.dim_rep;
        let mut m = Matrix::<Rational>::zeros(d, d);
        for (idx, c) in x.support() {
            add_scaled_int(&mut m, &c, &self.root_vectors[idx]);
        }
        m
    }

    /// Basis vector expansion of a matrix in the root vectors and `H_i`.
    pub fn expand(&self, m: &Matrix<Rational>) -> Result<LieElement> {
        let d = self.dim_rep;
        if m.rows() != d || m.cols() != d {
            return Err(Error::NotInAlgebra);
        }
        let mut out = LieElement::zero(self.rs);
        let mut residual = m.clone();
        for (idx, &(r, c)) in self.pivots.iter().enumerate() {
            let v = *m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let coeff = v / rat(*self.root_vectors[idx].get(r, c));
            add_scaled_int(&mut residual, &-coeff, &self.root_vectors[idx]);
            out.roots[idx] = coeff;
        }
        if !residual.is_diagonal() {
            return Err(Error::NotInAlgebra);
        }
        let n = self.rs.rank();
        let a = Matrix::from_fn(d, n, |r, c| rat(*self.cartan_basis[c].get(r, r)));
        let b: Vec<Rational> = (0..d).map(|r| *residual.get(r, r)).collect();
        let (h, _) = solve_affine(&a, &b).ok_or(Error::NotInAlgebra)?;
        out.cartan = h;
        Ok(out)
    }

    /// Type D: rescales root vectors by signs so that, for every `i`,
    ///
    /// `m_{Σ_i^{n-2}, α_{n-1}} = m_{Σ_i^{n-2}, α_n} = m_{α_i, Σ_{i+1}^{n-1}}
    ///  = m_{α_i, α_n + Σ_{i+1}^{n-2}} = m_{Σ_{i+1}^{n-1}, α_n}
    ///  = m_{α_n + Σ_{i+1}^{n-2}, α_{n-1}} = 1`
    ///
    /// whenever both arguments and their sum are roots. `E_{-α}` is rescaled
    /// with `E_α`, so the Cartan basis does not change. Normalizing an
    /// already normalized realization returns it unchanged.
    pub fn normalize_type_d(&self) -> Result<Self> {
        let rs = self.rs;
        if rs.lie_type() != LieType::D {
            return Err(Error::WrongType {
                expected: "D".into(),
                actual: rs.lie_type(),
            });
        }
        let pairs = normalization_pairs(rs);
        let p = rs.num_positive();
        // Sign flips s_α = (-1)^{x_α}: m changes by s_α s_β s_{α+β}.
        let mut rows: Vec<(Vec<bool>, bool)> = Vec::new();
        for (a, b) in &pairs {
            let (ia, ib) = (rs.index(a), rs.index(b));
            let ic = self
                .constants
                .sum(ia, ib)
                .ok_or_else(|| Error::NormalizationFailed(format!("{a} + {b} is not a root")))?;
            let m = self.constants.get(ia, ib);
            if m.abs() != 1 {
                return Err(Error::NormalizationFailed(format!("m({a}, {b}) = {m}")));
            }
            let mut row = vec![false; p];
            for k in [ia, ib, ic] {
                row[k] ^= true;
            }
            rows.push((row, m == -1));
        }
        let flips =
            solve_gf2(rows, p).ok_or_else(|| Error::NormalizationFailed("inconsistent sign conditions".into()))?;
        let mut vectors = self.root_vectors.clone();
        for (k, &flip) in flips.iter().enumerate() {
            if flip {
                vectors[k] = vectors[k].scale(&-1);
                vectors[k + p] = vectors[k + p].scale(&-1);
            }
        }
        let out = Self::assemble(rs, vectors, true)?;
        for (a, b) in &pairs {
            if out.m(a, b) != 1 {
                return Err(Error::NormalizationFailed(format!("m({a}, {b}) = {}", out.m(a, b))));
            }
        }
        Ok(out)
    }
}

fn add_scaled_int(m: &mut Matrix<Rational>, s: &Rational, e: &Matrix<i64>) {
    let d = e.rows();
    for r in 0..d {
        for c in 0..d {
            let v = *e.get(r, c);
            if v != 0 {
                let cur = *m.get(r, c);
                m.set(r, c, cur + *s * rat(v));
            }
        }
    }
}

/// The argument pairs of the normalized type-D constants.
pub(crate) fn normalization_pairs(rs: &RootSystem) -> Vec<(Root, Root)> {
    let n = rs.rank();
    let span = |a: usize, b: usize, extra_n: bool| -> Vec<i32> {
        let mut v = vec![0; n];
        for j in a..=b {
            if j >= 1 && j <= n {
                v[j - 1] += 1;
            }
        }
        if extra_n {
            v[n - 1] += 1;
        }
        v
    };
    let mut out = Vec::new();
    for i in 1..=n - 2 {
        let cands = [
            (span(i, n - 2, false), span(n - 1, n - 1, false)),
            (span(i, n - 2, false), span(n, n, false)),
            (span(i, i, false), span(i + 1, n - 1, false)),
            (span(i, i, false), span(i + 1, n - 2, true)),
            (span(i + 1, n - 1, false), span(n, n, false)),
            (span(i + 1, n - 2, true), span(n - 1, n - 1, false)),
        ];
        for (a, b) in cands {
            let s: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            if rs.is_root(&a) && rs.is_root(&b) && rs.is_root(&s) {
                let pair = (rs.root(&a).expect("root"), rs.root(&b).expect("root"));
                if !out.contains(&pair) {
                    out.push(pair);
                }
            }
        }
    }
    out
}

/// Solves `Σ_k row[k] x_k = rhs` over GF(2) with free variables set to 0.
fn solve_gf2(mut rows: Vec<(Vec<bool>, bool)>, vars: usize) -> Option<Vec<bool>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&k| rows[k].0[c]) else {
            continue;
        };
        rows.swap(p, r);
        let (prow, prhs) = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row.0[c] {
                for (x, y) in row.0.iter_mut().zip(&prow) {
                    *x ^= *y;
                }
                row.1 ^= prhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let mut x = vec![false; vars];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rows[k].1;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(t: LieType, n: usize) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    #[test]
    fn a1_root_vector() {
        let rs = build(LieType::A, 1);
        let real = ChevalleyRealization::new(&rs).unwrap();
        assert_eq!(real.dim_rep(), 2);
        let e = real.root_vector(rs.simple_root(1));
        assert_eq!(e, &Matrix::from_rows(vec![vec![0, 1], vec![0, 0]]));
    }

    #[test]
    fn a2_constant() {
        let rs = build(LieType::A, 2);
        let real = ChevalleyRealization::new(&rs).unwrap();
        let (a1, a2) = (rs.simple_root(1), rs.simple_root(2));
        assert_eq!(real.m(a1, a2), 1);
        assert_eq!(real.m(a2, a1), -1);
        let sum = rs.parse_root("1,1").unwrap();
        assert_eq!(
            real.root_vector(a1).commutator(real.root_vector(a2)),
            real.root_vector(&sum).clone()
        );
    }

    #[test]
    fn matrix_sizes_and_long_roots() {
        for (t, n, d) in [
            (LieType::B, 3, 7),
            (LieType::C, 2, 4),
            (LieType::C, 3, 6),
            (LieType::D, 4, 8),
        ] {
            let rs = build(t, n);
            let real = ChevalleyRealization::new(&rs).unwrap();
            assert_eq!(real.dim_rep(), d);
        }
        let rs = build(LieType::C, 2);
        let real = ChevalleyRealization::new(&rs).unwrap();
        let gamma = rs.parse_root("2,1").unwrap();
        assert!(!real.root_vector(&gamma).is_zero());
    }

    #[test]
    fn constants_antisymmetric_and_nonzero_exactly_on_sums() {
        for t in LieType::ALL {
            for n in t.min_rank()..=4 {
                let rs = build(t, n);
                let real = ChevalleyRealization::new(&rs).unwrap();
                let tab = real.constants();
                for a in 0..rs.num_roots() {
                    for b in 0..rs.num_roots() {
                        assert_eq!(tab.get(a, b), -tab.get(b, a));
                        assert_eq!(tab.get(a, b) != 0, tab.sum(a, b).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_round_trip() {
        let rs = build(LieType::B, 3);
        let real = ChevalleyRealization::new(&rs).unwrap();
        let mut x = LieElement::zero(&rs);
        for (k, c) in x.roots.iter_mut().enumerate() {
            *c = rat(k as i64 % 5 - 2);
        }
        x.cartan = vec![rat(1), rat(-3), rat(2)];
        assert_eq!(real.expand(&real.to_matrix(&x)).unwrap(), x);
        let mut bad = Matrix::<Rational>::zeros(7, 7);
        bad.set(0, 6, rat(1));
        assert!(matches!(real.expand(&bad), Err(Error::NotInAlgebra)));
    }

    #[test]
    fn type_d_normalization() {
        for n in 3..=6 {
            let rs = build(LieType::D, n);
            let raw = ChevalleyRealization::new(&rs).unwrap();
            let once = raw.normalize_type_d().unwrap();
            let twice = once.normalize_type_d().unwrap();
            assert_eq!(once.root_vectors, twice.root_vectors);
            for (a, b) in normalization_pairs(&rs) {
                assert_eq!(once.m(&a, &b), 1);
            }
        }
        let rs = build(LieType::D, 4);
        let real = ChevalleyRealization::new(&rs).unwrap().normalize_type_d().unwrap();
        let r = |s: &str| rs.parse_root(s).unwrap();
        assert_eq!(real.m(&r("1,1,0,0"), &r("0,0,1,0")), 1);
        assert_eq!(real.m(&r("0,1,1,0"), &r("0,0,0,1")), 1);
        let a3 = build(LieType::A, 3);
        assert!(ChevalleyRealization::new(&a3).unwrap().normalize_type_d().is_err());
    }
}
