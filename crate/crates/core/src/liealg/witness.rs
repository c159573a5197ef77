//! Constructive points of the cells `P_w`.
//!
//! For a nonempty cell the solver builds `u ∈ U_w` with `Ad u(N) ∈ Ad w(H)`
//! one row at a time, from the last row to the first. Each stage fixes the
//! coefficients of one row (in type D, a pair of partial rows) by solving a
//! polynomial system of degree at most two exactly; all free parameters are
//! set to zero. The final element is checked again with matrix exponentials.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::element::NilpotentElement;
use super::realization::ChevalleyRealization;
use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::linalg::{rat, solve_affine, Matrix, Rational};
use crate::paving::cell_nonempty;
use crate::rootcore::{LieType, Root, RootSystem, WeylElement};

/// Output of [`find_witness`]. Vectors are indexed like the row profile: by
/// row `i - 1` in types A, B, C and by stage `k = 0..n` in type D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    /// Per stage, the element `X_i` (type D: `X_k^0 + Y_{k+1}`) that was used.
    pub stage_solutions: Vec<NilpotentElement>,
    pub stage_kernel_dims: Vec<usize>,
    /// `Ad u(N)` for the assembled `u`.
    pub image: NilpotentElement,
    pub verified: bool,
}

struct Stage {
    x_vars: Vec<usize>,
    y_vars: Vec<usize>,
    constraints: Vec<usize>,
}

fn stages(rs: &RootSystem, w: &WeylElement, h: &HessenbergSpace<'_>) -> Vec<Stage> {
    let rows = rs.rows();
    let in_w = |r: &Root| Root::from_coeffs(w.act_inverse(r.coeffs())).is_negative();
    let outside = |r: &Root| !h.contains_coeffs(&w.act_inverse(r.coeffs()));
    let idx = |v: Vec<&Root>| -> Vec<usize> { v.into_iter().map(|r| rs.index(r)).collect() };
    let n = rs.rank();
    if rs.lie_type() != LieType::D {
        return (1..=n)
            .map(|i| Stage {
                x_vars: idx(rows.row(i).iter().filter(|r| in_w(r)).collect()),
                y_vars: Vec::new(),
                constraints: idx(rows.row(i).iter().filter(|r| outside(r)).collect()),
            })
            .collect();
    }
    (0..n)
        .map(|k| {
            let x: Vec<&Root> = rows.d_part(k, 0).iter().filter(|r| in_w(r)).collect();
            let y: Vec<&Root> = rows
                .d_part(k + 1, 1)
                .iter()
                .chain(rows.d_part(k + 1, 2))
                .filter(|r| in_w(r))
                .collect();
            let cons: Vec<&Root> = rows
                .d_part(k, 0)
                .iter()
                .chain(rows.d_part(k, 1))
                .chain(rows.d_part(k + 1, 2))
                .filter(|r| outside(r))
                .collect();
            Stage {
                x_vars: idx(x),
                y_vars: idx(y),
                constraints: idx(cons),
            }
        })
        .collect()
}

/// Degree-two polynomial in `k` variables, one per constraint.
pub(crate) struct Quadratic {
    pub(crate) constant: Rational,
    pub(crate) linear: Vec<Rational>,
    /// `quad[a][b]` for `a ≤ b`.
    pub(crate) quad: Vec<Vec<Rational>>,
}

impl Quadratic {
    pub(crate) fn eval(&self, x: &[Rational]) -> Rational {
        let mut v = self.constant;
        for (a, xa) in x.iter().enumerate() {
            v += self.linear[a] * xa;
            for (b, xb) in x.iter().enumerate().skip(a) {
                v += self.quad[a][b] * xa * xb;
            }
        }
        v
    }

    fn is_affine(&self) -> bool {
        self.quad.iter().flatten().all(Zero::is_zero)
    }
}

/// Interpolates `f` (assumed of degree ≤ 2) from its values at `0`, `e_a`,
/// `2e_a` and `e_a + e_b`, then checks the fit at the all-ones point.
pub(crate) fn interpolate(
    k: usize,
    outputs: usize,
    f: &dyn Fn(&[Rational]) -> Vec<Rational>,
) -> Option<Vec<Quadratic>> {
    let zero = vec![Rational::zero(); k];
    let unit = |a: usize, s: i64| {
        let mut v = zero.clone();
        v[a] = rat(s);
        v
    };
    let f0 = f(&zero);
    let f1: Vec<Vec<Rational>> = (0..k).map(|a| f(&unit(a, 1))).collect();
    let f2: Vec<Vec<Rational>> = (0..k).map(|a| f(&unit(a, 2))).collect();
    let mut polys: Vec<Quadratic> = (0..outputs)
        .map(|r| Quadratic {
            constant: f0[r],
            linear: vec![Rational::zero(); k],
            quad: vec![vec![Rational::zero(); k]; k],
        })
        .collect();
    let half = Rational::new(1, 2);
    for a in 0..k {
        for (r, p) in polys.iter_mut().enumerate() {
            let q = (f2[a][r] - f1[a][r] * rat(2) + f0[r]) * half;
            p.quad[a][a] = q;
            p.linear[a] = f1[a][r] - f0[r] - q;
        }
        for b in a + 1..k {
            let mut pt = unit(a, 1);
            pt[b] = rat(1);
            let fab = f(&pt);
            for (r, p) in polys.iter_mut().enumerate() {
                p.quad[a][b] = fab[r] - f1[a][r] - f1[b][r] + f0[r];
            }
        }
    }
    if k > 0 {
        let ones = vec![rat(1); k];
        let check = f(&ones);
        if polys.iter().zip(&check).any(|(p, v)| p.eval(&ones) != *v) {
            return None;
        }
    }
    Some(polys)
}

/// Solves `f(x) = 0` for a stage; returns the point and the dimension of the
/// solution space.
fn solve_stage(
    stage: usize,
    k: usize,
    outputs: usize,
    f: &dyn Fn(&[Rational]) -> Vec<Rational>,
) -> Result<(Vec<Rational>, usize)> {
    let infeasible = |reason: String| Error::StageInfeasible { stage, reason };
    if outputs == 0 {
        return Ok((vec![Rational::zero(); k], k));
    }
    let polys = interpolate(k, outputs, f).ok_or_else(|| infeasible("map is not of degree two".into()))?;
    let (affine, quadratic): (Vec<&Quadratic>, Vec<&Quadratic>) = polys.iter().partition(|p| p.is_affine());

    // Each quadratic constraint is solved for a variable that no affine
    // constraint involves and that the constraint itself involves linearly.
    let in_affine: Vec<bool> = (0..k).map(|a| affine.iter().any(|p| !p.linear[a].is_zero())).collect();
    let mut reserved: Vec<usize> = Vec::new();
    for q in &quadratic {
        let v = (0..k)
            .find(|&v| {
                !in_affine[v]
                    && !reserved.contains(&v)
                    && q.quad[v][v].is_zero()
                    && (!q.linear[v].is_zero() || (0..k).any(|b| !q.quad[v.min(b)][v.max(b)].is_zero()))
            })
            .ok_or_else(|| infeasible("no variable to absorb a quadratic constraint".into()))?;
        reserved.push(v);
    }

    let a = Matrix::from_fn(affine.len(), k, |r, c| affine[r].linear[c]);
    let b: Vec<Rational> = affine.iter().map(|p| -p.constant).collect();
    let (mut x, rank) = solve_affine(&a, &b).ok_or_else(|| infeasible("inconsistent affine constraints".into()))?;

    for (q, &v) in quadratic.iter().zip(&reserved) {
        x[v] = Rational::zero();
        let mut slope = q.linear[v];
        for (bidx, xb) in x.iter().enumerate() {
            if bidx != v {
                slope += q.quad[v.min(bidx)][v.max(bidx)] * xb;
            }
        }
        if slope.is_zero() {
            return Err(infeasible("quadratic constraint is degenerate".into()));
        }
        x[v] = -q.eval(&x) / slope;
    }
    if polys.iter().any(|p| !p.eval(&x).is_zero()) {
        return Err(infeasible("solution does not satisfy the constraints".into()));
    }
    let dim = k
        .checked_sub(rank + quadratic.len())
        .ok_or_else(|| infeasible("more independent constraints than unknowns".into()))?;
    Ok((x, dim))
}

/// Finds `u ∈ U_w` with `Ad u(N) ∈ Ad w(H)` stage by stage.
pub fn find_witness(
    real: &ChevalleyRealization<'_>,
    w: &WeylElement,
    h: &HessenbergSpace<'_>,
    n: &NilpotentElement,
) -> Result<WitnessResult> {
    let rs = real.root_system();
    for id in [w.system(), h.root_system().id()] {
        if id != rs.id() {
            return Err(Error::MixedSystems {
                left: rs.id().to_string(),
                right: id.to_string(),
            });
        }
    }
    n.check_regular(rs)?;
    if !cell_nonempty(w, h) {
        return Err(Error::EmptyCell { word: w.word_text() });
    }
    let p = rs.num_positive();
    let stages = stages(rs, w, h);
    let mut cur: Vec<Rational> = n.coeffs().to_vec();
    let mut solutions = vec![NilpotentElement::zero(rs); stages.len()];
    let mut dims = vec![0; stages.len()];
    let mut factors: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();

    for (s, st) in stages.iter().enumerate().rev() {
        let kx = st.x_vars.len();
        let k = kx + st.y_vars.len();
        let split = |vals: &[Rational]| -> (Vec<Rational>, Vec<Rational>) {
            let mut x = vec![Rational::zero(); p];
            let mut y = vec![Rational::zero(); p];
            for (j, &v) in st.x_vars.iter().enumerate() {
                x[v] = vals[j];
            }
            for (j, &v) in st.y_vars.iter().enumerate() {
                y[v] = vals[kx + j];
            }
            (x, y)
        };
        let apply = |vals: &[Rational]| -> Vec<Rational> {
            let (x, y) = split(vals);
            real.ad_exp_n(&x, &real.ad_exp_n(&y, &cur))
        };
        let constraints = |vals: &[Rational]| -> Vec<Rational> {
            let img = apply(vals);
            st.constraints.iter().map(|&c| img[c]).collect()
        };
        let (vals, dim) = solve_stage(s, k, st.constraints.len(), &constraints)?;
        let (x, y) = split(&vals);
        cur = apply(&vals);
        let mut combined = x.clone();
        for (c, v) in combined.iter_mut().zip(&y) {
            *c += v;
        }
        solutions[s] = NilpotentElement::from_coeffs(combined);
        dims[s] = dim;
        factors.push((x, y));
    }

    // Independent check with group-level conjugation.
    let mut m = real.nilpotent_matrix(n);
    for (x, y) in &factors {
        let ym = real.nilpotent_matrix(&NilpotentElement::from_coeffs(y.clone()));
        let xm = real.nilpotent_matrix(&NilpotentElement::from_coeffs(x.clone()));
        m = real.conjugate_by_exp(&xm, &real.conjugate_by_exp(&ym, &m));
    }
    let fail = |root: String| Error::WitnessVerification {
        word: w.word_text(),
        root,
    };
    let image = real.expand(&m)?;
    let image_n = image.to_nilpotent(rs).ok_or_else(|| fail("(outside n)".into()))?;
    if image_n.coeffs() != cur.as_slice() {
        return Err(fail("(table and matrix routes disagree)".into()));
    }
    for (idx, _) in image_n.support() {
        let r = rs.root_at(idx);
        if !h.contains_coeffs(&w.act_inverse(r.coeffs())) {
            return Err(fail(r.to_text()));
        }
    }
    Ok(WitnessResult {
        stage_solutions: solutions,
        stage_kernel_dims: dims,
        image: image_n,
        verified: true,
    })
}

/// Serializable summary of a witness, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub word: String,
    pub hessenberg: crate::paving::HessenbergRecord,
    pub stages: Vec<StageRecord>,
    pub image: BTreeMap<String, String>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: usize,
    pub kernel_dim: usize,
    /// Root (text form) to coefficient (`p` or `p/q`).
    pub solution: BTreeMap<String, String>,
}

fn coeff_map(rs: &RootSystem, x: &NilpotentElement) -> BTreeMap<String, String> {
    x.to_pairs(rs)
        .into_iter()
        .map(|(r, c)| (r.to_text(), c.to_string()))
        .collect()
}

impl WitnessRecord {
    pub fn new(rs: &RootSystem, w: &WeylElement, h: &HessenbergSpace<'_>, result: &WitnessResult) -> Self {
        let offset = usize::from(rs.lie_type() != LieType::D);
        WitnessRecord {
            lie_type: rs.lie_type(),
            rank: rs.rank(),
            word: w.word_text(),
            hessenberg: crate::paving::HessenbergRecord {
                neg: h.negative_part().iter().map(Root::to_text).collect(),
            },
            stages: result
                .stage_solutions
                .iter()
                .zip(&result.stage_kernel_dims)
                .enumerate()
                .map(|(s, (x, &d))| StageRecord {
                    stage: s + offset,
                    kernel_dim: d,
                    solution: coeff_map(rs, x),
                })
                .collect(),
            image: coeff_map(rs, &result.image),
            verified: result.verified,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_hessenberg;
    use crate::paving::row_dimension_profile;

    #[test]
    fn identity_cell() {
        for (t, n) in [(LieType::A, 3), (LieType::C, 2), (LieType::D, 4)] {
            let rs = RootSystem::new(t, n).unwrap();
            let real = ChevalleyRealization::new(&rs).unwrap();
            let nn = NilpotentElement::sum_of_simple(&rs);
            for h in enumerate_hessenberg(&rs) {
                let res = find_witness(&real, &rs.identity(), &h, &nn).unwrap();
                assert!(res.verified);
                assert!(res.stage_solutions.iter().all(NilpotentElement::is_zero));
                assert!(res.stage_kernel_dims.iter().all(|&d| d == 0));
            }
        }
    }

    #[test]
    fn a2_peterson_longest() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        let h = HessenbergSpace::peterson(&rs);
        let res = find_witness(&real, &rs.longest_element(), &h, &NilpotentElement::sum_of_simple(&rs)).unwrap();
        assert!(res.verified);
        assert_eq!(res.stage_kernel_dims, vec![1, 1]);
    }

    #[test]
    fn c2_full_longest() {
        let rs = RootSystem::new(LieType::C, 2).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        let h = HessenbergSpace::full(&rs);
        let mut n = NilpotentElement::sum_of_simple(&rs);
        n.coeffs_mut()[2] = rat(-3);
        let res = find_witness(&real, &rs.longest_element(), &h, &n).unwrap();
        assert!(res.verified);
        assert_eq!(res.stage_kernel_dims, vec![3, 1]);
    }

    #[test]
    fn kernel_dims_match_profiles_rank_three() {
        for (t, n) in [(LieType::B, 2), (LieType::C, 3), (LieType::D, 3)] {
            let rs = RootSystem::new(t, n).unwrap();
            let real = ChevalleyRealization::new(&rs).unwrap();
            let nn = NilpotentElement::sum_of_simple(&rs);
            for h in enumerate_hessenberg(&rs) {
                for w in rs.enumerate_weyl() {
                    if !cell_nonempty(&w, &h) {
                        assert!(matches!(find_witness(&real, &w, &h, &nn), Err(Error::EmptyCell { .. })));
                        continue;
                    }
                    let res = find_witness(&real, &w, &h, &nn).unwrap();
                    assert_eq!(
                        res.stage_kernel_dims,
                        row_dimension_profile(&w, &h).unwrap(),
                        "{t}{n} {}",
                        w.word_text()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_irregular_n() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        let h = HessenbergSpace::full(&rs);
        let n = NilpotentElement::zero(&rs);
        assert!(matches!(
            find_witness(&real, &rs.identity(), &h, &n),
            Err(Error::NotRegular(1))
        ));
    }
}
