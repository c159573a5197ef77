use std::collections::HashSet;

use super::root::{parse_word, word_to_text, Root};
use super::system::{RootSystem, SystemId};
use crate::error::{Error, Result};

/// A Weyl group element, stored as its integer matrix on simple-root
/// coordinates (column `j` is the image of `α_j`) together with the inverse
/// matrix and a canonical reduced word.
///
/// The canonical word is the lexicographically smallest reduced word; it is
/// produced by repeatedly peeling off the smallest left descent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    system: SystemId,
    matrix: Vec<i32>,
    inverse: Vec<i32>,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn system(&self) -> SystemId {
        self.system
    }

    /// Row-major `n × n` matrix.
    pub fn matrix(&self) -> &[i32] {
        &self.matrix
    }

    /// Canonical reduced word, 1-based reflection indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn word_text(&self) -> String {
        word_to_text(&self.word)
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    fn rank(&self) -> usize {
        self.system.rank
    }

    /// `w(α)` on a raw coefficient vector.
    pub fn act(&self, coeffs: &[i32]) -> Vec<i32> {
        mat_vec(&self.matrix, coeffs, self.rank())
    }

    /// `w⁻¹(α)` on a raw coefficient vector.
    pub fn act_inverse(&self, coeffs: &[i32]) -> Vec<i32> {
        mat_vec(&self.inverse, coeffs, self.rank())
    }
}

fn mat_vec(m: &[i32], v: &[i32], n: usize) -> Vec<i32> {
    (0..n).map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum()).collect()
}

fn mat_mul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<i32> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl RootSystem {
    fn reflection_matrix(&self, i: usize) -> Vec<i32> {
        let n = self.rank();
        let a = self.cartan_matrix();
        let mut m = identity_matrix(n);
        // s_i(α_j) = α_j - a[j][i] α_i: only row i changes.
        for j in 0..n {
            m[(i - 1) * n + j] -= a[j][i - 1];
        }
        m
    }

    fn check_system(&self, w: &WeylElement) -> Result<()> {
        if w.system != self.id() {
            return Err(Error::MixedSystems {
                left: self.id().to_string(),
                right: w.system.to_string(),
            });
        }
        Ok(())
    }

    /// Builds an element from its matrices, recomputing the canonical word.
    fn element_from_matrices(&self, matrix: Vec<i32>, inverse: Vec<i32>) -> WeylElement {
        let n = self.rank();
        let mut word = Vec::new();
        let mut inv = inverse.clone();
        loop {
            // Left descent i: w⁻¹(α_i) < 0, i.e. column i of w⁻¹ is negative.
            let descent = (0..n).find(|&i| (0..n).any(|r| inv[r * n + i] < 0));
            match descent {
                Some(i) => {
                    word.push(i + 1);
                    // (s_i w)⁻¹ = w⁻¹ s_i
                    inv = mat_mul(&inv, &self.reflection_matrix(i + 1), n);
                }
                None => break,
            }
        }
        WeylElement {
            system: self.id(),
            matrix,
            inverse,
            word,
        }
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        WeylElement {
            system: self.id(),
            matrix: identity_matrix(n),
            inverse: identity_matrix(n),
            word: Vec::new(),
        }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::ReflectionIndex {
                index: i,
                rank: self.rank(),
            });
        }
        let m = self.reflection_matrix(i);
        Ok(WeylElement {
            system: self.id(),
            matrix: m.clone(),
            inverse: m,
            word: vec![i],
        })
    }

    /// Product `s_{i_1} ⋯ s_{i_k}` of a (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.rank();
        let mut m = identity_matrix(n);
        let mut inv = identity_matrix(n);
        for &i in word {
            if i == 0 || i > n {
                return Err(Error::ReflectionIndex { index: i, rank: n });
            }
            let s = self.reflection_matrix(i);
            m = mat_mul(&m, &s, n);
            inv = mat_mul(&s, &inv, n);
        }
        Ok(self.element_from_matrices(m, inv))
    }

    /// Parses the space-separated word format (`""` is the identity).
    pub fn parse_weyl(&self, s: &str) -> Result<WeylElement> {
        self.from_word(&parse_word(s)?)
    }

    /// `w1 ∘ w2`.
    pub fn compose(&self, w1: &WeylElement, w2: &WeylElement) -> Result<WeylElement> {
        self.check_system(w1)?;
        self.check_system(w2)?;
        let n = self.rank();
        Ok(self.element_from_matrices(mat_mul(&w1.matrix, &w2.matrix, n), mat_mul(&w2.inverse, &w1.inverse, n)))
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check_system(w)?;
        Ok(self.element_from_matrices(w.inverse.clone(), w.matrix.clone()))
    }

    pub fn apply(&self, w: &WeylElement, root: &Root) -> Result<Root> {
        self.check_system(w)?;
        self.root(&w.act(root.coeffs()))
    }

    /// All elements, by length and then by canonical word.
    pub fn enumerate_weyl(&self) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = (1..=self.rank())
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let id = self.identity();
        seen.insert(id.matrix.clone());
        let mut all = vec![id];
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for s in &gens {
                    let n = self.rank();
                    let m = mat_mul(&w.matrix, &s.matrix, n);
                    if seen.contains(&m) {
                        continue;
                    }
                    seen.insert(m.clone());
                    let inv = mat_mul(&s.inverse, &w.inverse, n);
                    next.push(self.element_from_matrices(m, inv));
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
        all
    }

    /// `Φ_w = {α ∈ Φ⁺ : w⁻¹α < 0}`, in positive-root order.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<Root> {
        self.positive_roots()
            .iter()
            .filter(|a| Root::from_coeffs(w.act_inverse(a.coeffs())).is_negative())
            .cloned()
            .collect()
    }

    /// Longest element `w_0`.
    pub fn longest_element(&self) -> WeylElement {
        self.enumerate_weyl().pop().expect("nonempty group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootcore::LieType;

    #[test]
    fn simple_reflection_examples() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        let s1 = a2.simple_reflection(1).unwrap();
        assert_eq!(a2.apply(&s1, a2.simple_root(1)).unwrap().to_text(), "-1,0");
        assert_eq!(a2.apply(&s1, a2.simple_root(2)).unwrap().to_text(), "1,1");
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        let s2 = b2.simple_reflection(2).unwrap();
        assert_eq!(b2.apply(&s2, b2.simple_root(1)).unwrap().to_text(), "1,2");
        assert!(a2.simple_reflection(3).is_err());
        assert!(a2.simple_reflection(0).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        let s1 = a2.simple_reflection(1).unwrap();
        let e = a2.compose(&s1, &a2.inverse(&s1).unwrap()).unwrap();
        assert!(e.is_identity());
        let s1s2 = a2.from_word(&[1, 2]).unwrap();
        let inv = a2.inverse(&s1s2).unwrap();
        assert_eq!(a2.apply(&inv, a2.simple_root(1)).unwrap().to_text(), "-1,-1");
        for r in a2.all_roots() {
            assert_eq!(a2.apply(&a2.identity(), &r).unwrap(), r);
        }
    }

    #[test]
    fn mixed_systems_rejected() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        let s = b2.simple_reflection(1).unwrap();
        assert!(matches!(
            a2.compose(&a2.identity(), &s),
            Err(Error::MixedSystems { .. })
        ));
    }

    #[test]
    fn a2_enumeration() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        let w = a2.enumerate_weyl();
        let lengths: Vec<usize> = w.iter().map(WeylElement::length).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(w[5].word(), &[1, 2, 1]);
        assert_eq!(w[3].word(), &[1, 2]);
    }

    #[test]
    fn group_orders() {
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        let w = b2.enumerate_weyl();
        assert_eq!(w.len(), 8);
        assert_eq!(w.last().unwrap().length(), 4);
        let d4 = RootSystem::new(LieType::D, 4).unwrap();
        assert_eq!(d4.enumerate_weyl().len(), 192);
    }

    #[test]
    fn inversion_sets() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        assert!(a2.inversion_set(&a2.identity()).is_empty());
        let s1 = a2.simple_reflection(1).unwrap();
        assert_eq!(a2.inversion_set(&s1), vec![a2.simple_root(1).clone()]);
        let w0 = a2.longest_element();
        assert_eq!(a2.inversion_set(&w0).len(), 3);
    }

    #[test]
    fn non_reduced_words_collapse() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        assert!(a2.from_word(&[1, 1]).unwrap().is_identity());
        assert_eq!(a2.parse_weyl("2 1 2").unwrap().word(), &[1, 2, 1]);
        assert!(a2.parse_weyl("").unwrap().is_identity());
    }
}
