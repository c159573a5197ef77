//! Cells `P_w = H(N, H) ∩ BwB/B` of the paving and the resulting Betti numbers.
//!
//! `N` is always the sum of the simple root vectors; the cell data below does
//! not depend on which regular nilpotent of `b` is used.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::rootcore::{LieType, Root, RootSystem, WeylElement};

/// One Bruhat cell intersected with the Hessenberg variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PavingCell {
    pub w: WeylElement,
    pub nonempty: bool,
    /// Present iff the cell is nonempty.
    pub dim: Option<usize>,
    /// Present iff the cell is nonempty; see [`row_dimension_profile`].
    pub row_profile: Option<Vec<usize>>,
}

/// Betti numbers `b_0, b_1, ...`, where `b_k` counts nonempty cells of complex
/// dimension `k` (the rank of `H^{2k}`; odd cohomology vanishes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    coefficients: Vec<u64>,
}

impl BettiTable {
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Number of nonempty cells.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Poincaré polynomial in `q = t²` evaluated at `q`.
    pub fn evaluate(&self, q: u64) -> u64 {
        self.coefficients.iter().rev().fold(0, |acc, &b| acc * q + b)
    }
}

fn check_same(w: &WeylElement, h: &HessenbergSpace<'_>) -> Result<()> {
    let id = h.root_system().id();
    if w.system() != id {
        return Err(Error::MixedSystems {
            left: w.system().to_string(),
            right: id.to_string(),
        });
    }
    Ok(())
}

/// `w⁻¹ α_i ∈ Φ_H` for every simple root.
pub fn cell_nonempty(w: &WeylElement, h: &HessenbergSpace<'_>) -> bool {
    if check_same(w, h).is_err() {
        return false;
    }
    h.root_system()
        .simple_roots()
        .iter()
        .all(|a| h.contains_coeffs(&w.act_inverse(a.coeffs())))
}

fn require_nonempty(w: &WeylElement, h: &HessenbergSpace<'_>) -> Result<()> {
    check_same(w, h)?;
    if cell_nonempty(w, h) {
        Ok(())
    } else {
        Err(Error::EmptyCell { word: w.word_text() })
    }
}

/// Whether the positive root `α` lies in `Φ_w`.
fn in_inversion_set(w: &WeylElement, alpha: &Root) -> bool {
    Root::from_coeffs(w.act_inverse(alpha.coeffs())).is_negative()
}

/// Whether the root `α` lies in `wΦ_H`.
fn in_translate(w: &WeylElement, h: &HessenbergSpace<'_>, alpha: &Root) -> bool {
    h.contains_coeffs(&w.act_inverse(alpha.coeffs()))
}

/// `|Φ_w ∩ wΦ_H|`.
pub fn cell_dimension(w: &WeylElement, h: &HessenbergSpace<'_>) -> Result<usize> {
    require_nonempty(w, h)?;
    Ok(h.root_system()
        .positive_roots()
        .iter()
        .filter(|a| in_inversion_set(w, a) && in_translate(w, h, a))
        .count())
}

/// `dim(b ∩ Ad w(b⁻ ∩ H)) - rank`, evaluated on roots: the negative roots of
/// `Φ_H` that `w` sends positive (the Cartan summand contributes exactly the
/// rank, which cancels).
pub fn cell_dimension_lie(w: &WeylElement, h: &HessenbergSpace<'_>) -> Result<usize> {
    require_nonempty(w, h)?;
    Ok(h.negative_part()
        .iter()
        .filter(|b| Root::from_coeffs(w.act(b.coeffs())).is_positive())
        .count())
}

/// Per-stage fiber dimensions of the iterated bundle over `P_w`.
///
/// Types A, B, C: entry `i - 1` is `|Φ_w ∩ Φ_i ∩ wΦ_H|` for row `i`.
///
/// Type D: entry `k` (for `k = 0..n`) is the paired stage
/// `|Φ_w ∩ (Φ_k^0 ∪ Φ_{k+1}^1 ∪ Φ_{k+1}^2)| - |(Φ_k^0 ∪ Φ_k^1 ∪ Φ_{k+1}^2) ∩ wΦ_H^c|`
/// with `Φ_0` and rows past `n` empty. Stage 0 picks up `Φ_1^1 ∪ Φ_1^2`.
///
/// The entries sum to [`cell_dimension`].
pub fn row_dimension_profile(w: &WeylElement, h: &HessenbergSpace<'_>) -> Result<Vec<usize>> {
    require_nonempty(w, h)?;
    let rs = h.root_system();
    let rows = rs.rows();
    let n = rs.rank();
    if rs.lie_type() != LieType::D {
        return Ok((1..=n)
            .map(|i| {
                rows.row(i)
                    .iter()
                    .filter(|a| in_inversion_set(w, a) && in_translate(w, h, a))
                    .count()
            })
            .collect());
    }
    let mut profile = Vec::with_capacity(n);
    for k in 0..n {
        let (cols, rows_c) = d_stage_sets(rs, k);
        let unknowns = cols.iter().filter(|a| in_inversion_set(w, a)).count();
        let constraints = rows_c.iter().filter(|a| !in_translate(w, h, a)).count();
        let dim = unknowns
            .checked_sub(constraints)
            .ok_or_else(|| Error::StageInfeasible {
                stage: k,
                reason: format!("{constraints} constraints on {unknowns} unknowns"),
            })?;
        profile.push(dim);
    }
    Ok(profile)
}

/// Type-D stage `k`: the domain roots `Φ_k^0 ∪ Φ_{k+1}^1 ∪ Φ_{k+1}^2` and the
/// constrained roots `Φ_k^0 ∪ Φ_k^1 ∪ Φ_{k+1}^2`.
pub(crate) fn d_stage_sets(rs: &RootSystem, k: usize) -> (Vec<Root>, Vec<Root>) {
    let rows = rs.rows();
    let mut cols: Vec<Root> = rows.d_part(k, 0).to_vec();
    cols.extend_from_slice(rows.d_part(k + 1, 1));
    cols.extend_from_slice(rows.d_part(k + 1, 2));
    let mut cons: Vec<Root> = rows.d_part(k + 1, 2).to_vec();
    cons.extend_from_slice(rows.d_part(k, 1));
    cons.extend_from_slice(rows.d_part(k, 0));
    (cols, cons)
}

/// One cell per Weyl element, in length order (ties by canonical word).
pub fn compute_paving(h: &HessenbergSpace<'_>) -> Vec<PavingCell> {
    h.root_system()
        .enumerate_weyl()
        .into_iter()
        .map(|w| cell_for(w, h))
        .collect()
}

pub(crate) fn cell_for(w: WeylElement, h: &HessenbergSpace<'_>) -> PavingCell {
    if cell_nonempty(&w, h) {
        let dim = cell_dimension(&w, h).expect("nonempty cell");
        let profile = row_dimension_profile(&w, h).expect("nonempty cell");
        PavingCell {
            w,
            nonempty: true,
            dim: Some(dim),
            row_profile: Some(profile),
        }
    } else {
        PavingCell {
            w,
            nonempty: false,
            dim: None,
            row_profile: None,
        }
    }
}

pub fn betti_from_cells(cells: &[PavingCell]) -> BettiTable {
    let top = cells.iter().filter_map(|c| c.dim).max().unwrap_or(0);
    let mut coefficients = vec![0u64; top + 1];
    for d in cells.iter().filter_map(|c| c.dim) {
        coefficients[d] += 1;
    }
    BettiTable { coefficients }
}

pub fn poincare_polynomial(h: &HessenbergSpace<'_>) -> BettiTable {
    betti_from_cells(&compute_paving(h))
}

/// Serializable form of a paving, the record emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PavingRecord {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub hessenberg: HessenbergRecord,
    pub cells: Vec<CellRecord>,
    pub betti: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessenbergRecord {
    pub neg: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub word: String,
    pub length: usize,
    pub nonempty: bool,
    pub dim: Option<usize>,
    pub row_profile: Option<Vec<usize>>,
}

impl PavingRecord {
    pub fn new(rs: &RootSystem, h: &HessenbergSpace<'_>, cells: &[PavingCell]) -> Self {
        PavingRecord {
            lie_type: rs.lie_type(),
            rank: rs.rank(),
            hessenberg: HessenbergRecord {
                neg: h.negative_part().iter().map(Root::to_text).collect(),
            },
            cells: cells
                .iter()
                .map(|c| CellRecord {
                    word: c.w.word_text(),
                    length: c.w.length(),
                    nonempty: c.nonempty,
                    dim: c.dim,
                    row_profile: c.row_profile.clone(),
                })
                .collect(),
            betti: betti_from_cells(cells).coefficients,
        }
    }

    pub fn compute(h: &HessenbergSpace<'_>) -> Self {
        let cells = compute_paving(h);
        Self::new(h.root_system(), h, &cells)
    }
}
