//! Hessenberg spaces as root subsets.
//!
//! A Hessenberg space `H ⊇ b` with `[H, b] ⊆ H` is a sum of root spaces plus
//! the Cartan subalgebra, so it is determined by `Φ_H ⊇ Φ⁺`. Only the negative
//! part `Φ_H ∩ Φ⁻` carries information and that is what is stored. Closure
//! under `b` becomes: `β ∈ Φ_H` and `β + α_i ∈ Φ` imply `β + α_i ∈ Φ_H`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootcore::{parse_coeffs, LieType, Root, RootSystem};

/// Hessenberg space over a borrowed root system.
///
/// `negative[k]` is true when `-Φ⁺[k] ∈ Φ_H`.
#[derive(Clone)]
pub struct HessenbergSpace<'rs> {
    rs: &'rs RootSystem,
    negative: Vec<bool>,
}

impl fmt::Debug for HessenbergSpace<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HessenbergSpace")
            .field("system", &self.rs.id().to_string())
            .field("neg", &self.to_text())
            .finish()
    }
}

impl PartialEq for HessenbergSpace<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.rs.id() == other.rs.id() && self.negative == other.negative
    }
}

impl Eq for HessenbergSpace<'_> {}

/// `Φ_H^c = Φ⁻ ∖ Φ_H`, the roots of the complementary ad-nilpotent ideal of
/// `b⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementIdeal {
    roots: Vec<Root>,
}

impl ComplementIdeal {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Downward closure: `β ∈ Φ_H^c`, `α > 0`, `β - α ∈ Φ` imply `β - α ∈ Φ_H^c`.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        self.roots.iter().all(|b| {
            rs.positive_roots().iter().all(|a| {
                let d = b.minus(a);
                !rs.is_root(&d) || self.roots.iter().any(|r| r.coeffs() == d.as_slice())
            })
        })
    }
}

impl<'rs> HessenbergSpace<'rs> {
    fn from_mask(rs: &'rs RootSystem, negative: Vec<bool>) -> Result<Self> {
        let h = HessenbergSpace { rs, negative };
        h.check_closure()?;
        Ok(h)
    }

    /// `Φ_H = Φ⁺ ∪ S` for a set `S` of negative roots.
    pub fn from_negative_roots(rs: &'rs RootSystem, roots: &[Root]) -> Result<Self> {
        let p = rs.num_positive();
        let mut negative = vec![false; p];
        for r in roots {
            let idx = rs
                .index_of_coeffs(r.coeffs())
                .ok_or_else(|| Error::NotARoot(r.coeffs().to_vec()))?;
            if idx < p {
                return Err(Error::NotNegative(r.to_text()));
            }
            negative[idx - p] = true;
        }
        Self::from_mask(rs, negative)
    }

    /// `H = b`.
    pub fn borel(rs: &'rs RootSystem) -> Self {
        HessenbergSpace {
            rs,
            negative: vec![false; rs.num_positive()],
        }
    }

    /// `H = g`.
    pub fn full(rs: &'rs RootSystem) -> Self {
        HessenbergSpace {
            rs,
            negative: vec![true; rs.num_positive()],
        }
    }

    /// `b` together with the negative simple root spaces.
    pub fn peterson(rs: &'rs RootSystem) -> Self {
        let negative = rs.positive_roots().iter().map(|r| r.height() == 1).collect();
        HessenbergSpace { rs, negative }
    }

    /// Type A: the space of `n × n` matrices vanishing at `(i, j)` whenever
    /// `i > h(j)`, with `rs = A_{n-1}` and `n = h.len()`.
    pub fn from_function(rs: &'rs RootSystem, h: &[usize]) -> Result<Self> {
        let n = h.len();
        let invalid = |reason: &str| Error::InvalidHessenbergFunction {
            h: h.to_vec(),
            reason: reason.to_string(),
        };
        if rs.lie_type() != LieType::A || rs.rank() + 1 != n {
            return Err(Error::WrongType {
                expected: format!("A{}", n.saturating_sub(1)),
                actual: rs.lie_type(),
            });
        }
        for (i, &v) in h.iter().enumerate() {
            if v < i + 1 {
                return Err(invalid("h(i) < i"));
            }
            if v > n {
                return Err(invalid("h(i) > n"));
            }
            if i > 0 && v < h[i - 1] {
                return Err(invalid("not nondecreasing"));
            }
        }
        let p = rs.num_positive();
        let mut negative = vec![false; p];
        // Position (i, j) with i > j is the negative root -(α_j + ... + α_{i-1}).
        for j in 1..=n {
            for i in j + 1..=h[j - 1] {
                let mut c = vec![0; n - 1];
                for slot in c.iter_mut().take(i - 1).skip(j - 1) {
                    *slot = 1;
                }
                let idx = rs.index_of_coeffs(&c).expect("type A root");
                negative[idx] = true;
            }
        }
        Self::from_mask(rs, negative)
    }

    /// Reads back the Hessenberg function of a type-A space.
    pub fn to_function(&self) -> Option<Vec<usize>> {
        if self.rs.lie_type() != LieType::A {
            return None;
        }
        let n = self.rs.rank() + 1;
        let h = (1..=n)
            .map(|j| {
                let mut top = j;
                for i in j + 1..=n {
                    let mut c = vec![0; n - 1];
                    for slot in c.iter_mut().take(i - 1).skip(j - 1) {
                        *slot = -1;
                    }
                    if self.contains_coeffs(&c) {
                        top = i;
                    }
                }
                top
            })
            .collect();
        Some(h)
    }

    /// Parses `full`, `borel`, `peterson`, `h=2,3,3` or `neg=-1,0;0,-1`.
    pub fn parse(rs: &'rs RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "full" => return Ok(Self::full(rs)),
            "borel" => return Ok(Self::borel(rs)),
            "peterson" => return Ok(Self::peterson(rs)),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("h=") {
            let h = rest
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad Hessenberg function entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::from_function(rs, &h);
        }
        if let Some(rest) = s.strip_prefix("neg=") {
            let roots = rest
                .split(';')
                .filter(|t| !t.trim().is_empty())
                .map(|t| rs.root(&parse_coeffs(t)?))
                .collect::<Result<Vec<_>>>()?;
            return Self::from_negative_roots(rs, &roots);
        }
        Err(Error::Parse(format!(
            "expected full, borel, peterson, h=... or neg=..., got {s:?}"
        )))
    }

    pub fn root_system(&self) -> &'rs RootSystem {
        self.rs
    }

    /// Membership mask over positive-root indices for the negative part.
    pub fn negative_mask(&self) -> &[bool] {
        &self.negative
    }

    /// `Φ_H ∩ Φ⁻`, ordered like the positive roots they negate.
    pub fn negative_part(&self) -> Vec<Root> {
        self.rs
            .positive_roots()
            .iter()
            .zip(&self.negative)
            .filter(|(_, &m)| m)
            .map(|(r, _)| r.negate())
            .collect()
    }

    /// `|Φ_H ∩ Φ⁻|`.
    pub fn negative_count(&self) -> usize {
        self.negative.iter().filter(|&&m| m).count()
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        let p = self.rs.num_positive();
        idx < p || self.negative[idx - p]
    }

    pub fn contains_coeffs(&self, coeffs: &[i32]) -> bool {
        self.rs
            .index_of_coeffs(coeffs)
            .is_some_and(|idx| self.contains_index(idx))
    }

    /// `α ∈ Φ_H`.
    pub fn contains(&self, root: &Root) -> bool {
        self.contains_coeffs(root.coeffs())
    }

    pub fn complement_ideal(&self) -> ComplementIdeal {
        let roots = self
            .rs
            .positive_roots()
            .iter()
            .zip(&self.negative)
            .filter(|(_, &m)| !m)
            .map(|(r, _)| r.negate())
            .collect();
        ComplementIdeal { roots }
    }

    fn check_closure(&self) -> Result<()> {
        for beta in self.negative_part() {
            for (i, a) in self.rs.simple_roots().iter().enumerate() {
                let sum = beta.plus(a);
                if self.rs.is_root(&sum) && !self.contains_coeffs(&sum) {
                    return Err(Error::ClosureViolation {
                        beta: beta.to_text(),
                        simple: i + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Closure against every positive root, not just the simple ones.
    pub fn is_closed_under_positive_roots(&self) -> bool {
        self.negative_part().iter().all(|beta| {
            self.rs.positive_roots().iter().all(|a| {
                let sum = beta.plus(a);
                !self.rs.is_root(&sum) || self.contains_coeffs(&sum)
            })
        })
    }

    /// `Φ_H ⊆ Φ_H'`.
    pub fn is_subspace_of(&self, other: &HessenbergSpace<'_>) -> bool {
        self.rs.id() == other.rs.id() && self.negative.iter().zip(&other.negative).all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, other: &HessenbergSpace<'_>) -> Result<Self> {
        let mask = self
            .negative
            .iter()
            .zip(&other.negative)
            .map(|(&a, &b)| a && b)
            .collect();
        Self::from_mask(self.rs, mask)
    }

    pub fn union(&self, other: &HessenbergSpace<'_>) -> Result<Self> {
        let mask = self
            .negative
            .iter()
            .zip(&other.negative)
            .map(|(&a, &b)| a || b)
            .collect();
        Self::from_mask(self.rs, mask)
    }

    /// `neg=` text form; the roots are separated by `;`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.negative_part().iter().map(Root::to_text).collect();
        format!("neg={}", parts.join(";"))
    }

    fn sort_key(&self) -> Vec<usize> {
        self.negative
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(k, _)| k)
            .collect()
    }
}

fn enumeration_order(a: &HessenbergSpace<'_>, b: &HessenbergSpace<'_>) -> Ordering {
    a.negative_count()
        .cmp(&b.negative_count())
        .then_with(|| a.sort_key().cmp(&b.sort_key()))
}

/// All Hessenberg spaces, ordered by `|Φ_H ∩ Φ⁻|` and then lexicographically on
/// the positive-root indices of the negated roots.
///
/// Negating the negative part gives an order ideal of the positive-root poset;
/// those are built root by root in height order, admitting a root only when
/// every `α - α_i` that is a positive root has already been admitted.
pub fn enumerate_hessenberg(rs: &RootSystem) -> Vec<HessenbergSpace<'_>> {
    let p = rs.num_positive();
    let lower_covers: Vec<Vec<usize>> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            rs.simple_roots()
                .iter()
                .filter_map(|s| rs.index_of_coeffs(&r.minus(s)).filter(|&k| k < p))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut mask = vec![false; p];
    fn extend(k: usize, mask: &mut Vec<bool>, lower: &[Vec<usize>], out: &mut Vec<Vec<bool>>) {
        if k == mask.len() {
            out.push(mask.clone());
            return;
        }
        extend(k + 1, mask, lower, out);
        if lower[k].iter().all(|&j| mask[j]) {
            mask[k] = true;
            extend(k + 1, mask, lower, out);
            mask[k] = false;
        }
    }
    let mut masks = Vec::new();
    extend(0, &mut mask, &lower_covers, &mut masks);
    for m in masks {
        out.push(HessenbergSpace { rs, negative: m });
    }
    out.sort_by(enumeration_order);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::new(LieType::A, 2).unwrap()
    }

    #[test]
    fn borel_and_peterson() {
        let rs = a2();
        let b = HessenbergSpace::from_negative_roots(&rs, &[]).unwrap();
        assert_eq!(b, HessenbergSpace::borel(&rs));
        let roots = [rs.root(&[-1, 0]).unwrap(), rs.root(&[0, -1]).unwrap()];
        let p = HessenbergSpace::from_negative_roots(&rs, &roots).unwrap();
        assert_eq!(p, HessenbergSpace::peterson(&rs));
    }

    #[test]
    fn closure_violation_reported() {
        let rs = a2();
        let err = HessenbergSpace::from_negative_roots(&rs, &[rs.root(&[-1, -1]).unwrap()]).unwrap_err();
        match err {
            Error::ClosureViolation { beta, simple } => {
                assert_eq!(beta, "-1,-1");
                assert_eq!(simple, 1);
            }
            e => panic!("unexpected {e:?}"),
        }
        let pos = HessenbergSpace::from_negative_roots(&rs, &[rs.root(&[1, 0]).unwrap()]);
        assert!(matches!(pos, Err(Error::NotNegative(_))));
    }

    #[test]
    fn enumeration_counts() {
        let rs = a2();
        assert_eq!(enumerate_hessenberg(&rs).len(), 5);
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        assert_eq!(enumerate_hessenberg(&b2).len(), 6);
        let a3 = RootSystem::new(LieType::A, 3).unwrap();
        let all = enumerate_hessenberg(&a3);
        assert_eq!(all.len(), 14);
        assert_eq!(all[0], HessenbergSpace::borel(&a3));
        assert_eq!(all[13], HessenbergSpace::full(&a3));
    }

    #[test]
    fn functions() {
        let rs = a2();
        assert_eq!(
            HessenbergSpace::from_function(&rs, &[1, 2, 3]).unwrap(),
            HessenbergSpace::borel(&rs)
        );
        assert_eq!(
            HessenbergSpace::from_function(&rs, &[3, 3, 3]).unwrap(),
            HessenbergSpace::full(&rs)
        );
        let h = HessenbergSpace::from_function(&rs, &[2, 3, 3]).unwrap();
        assert_eq!(h.negative_part().len(), 2);
        assert!(!h.contains(&rs.root(&[-1, -1]).unwrap()));
        assert_eq!(h, HessenbergSpace::peterson(&rs));
        assert!(HessenbergSpace::from_function(&rs, &[2, 1, 3]).is_err());
        assert!(HessenbergSpace::from_function(&rs, &[1, 1, 3]).is_err());
        assert!(HessenbergSpace::from_function(&rs, &[1, 2]).is_err());
        assert_eq!(h.to_function().unwrap(), vec![2, 3, 3]);
    }

    #[test]
    fn complements() {
        let rs = a2();
        assert!(HessenbergSpace::full(&rs).complement_ideal().roots().is_empty());
        assert_eq!(HessenbergSpace::borel(&rs).complement_ideal().roots().len(), 3);
        let c = HessenbergSpace::peterson(&rs).complement_ideal();
        assert_eq!(c.roots(), &[rs.root(&[-1, -1]).unwrap()]);
        assert!(c.is_closed(&rs));
    }

    #[test]
    fn text_forms() {
        let rs = a2();
        let p = HessenbergSpace::peterson(&rs);
        assert_eq!(p.to_text(), "neg=-1,0;0,-1");
        assert_eq!(HessenbergSpace::parse(&rs, &p.to_text()).unwrap(), p);
        assert_eq!(HessenbergSpace::parse(&rs, "h=2,3,3").unwrap(), p);
        assert_eq!(
            HessenbergSpace::parse(&rs, "neg=").unwrap(),
            HessenbergSpace::borel(&rs)
        );
        assert!(HessenbergSpace::parse(&rs, "nope").is_err());
    }
}
