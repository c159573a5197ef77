use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::root::{parse_coeffs, LieType, Root};
use super::rows::RowDecomposition;
use crate::error::{Error, Result};

/// Identifies an ambient system; two values built from the same identifier
/// are interchangeable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemId {
    pub lie_type: LieType,
    pub rank: usize,
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self.rank)
    }
}

/// A classical root system with the simple roots labelled as in the usual
/// Dynkin diagrams: the double edge sits at `α_{n-1}–α_n` in types B and C,
/// and `α_{n-2}` forks into `α_{n-1}`, `α_n` in type D.
///
/// Positive roots are listed by height, ties broken by descending coefficient
/// vector. Root indices `0..p` are the positive roots in that order and
/// `p + k` is the negative of positive root `k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    rank: usize,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    cartan: Vec<Vec<i32>>,
    simple_epsilon: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    rows: RowDecomposition,
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        if rank < lie_type.min_rank() || rank > 12 {
            return Err(Error::RankOutOfRange { lie_type, rank });
        }
        let simple_epsilon = simple_roots_epsilon(lie_type, rank);
        let dot = |a: &[i32], b: &[i32]| -> i32 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        // a[i][j] = 2(α_i, α_j) / (α_j, α_j)
        let cartan: Vec<Vec<i32>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let num = 2 * dot(&simple_epsilon[i], &simple_epsilon[j]);
                        let den = dot(&simple_epsilon[j], &simple_epsilon[j]);
                        debug_assert_eq!(num % den, 0);
                        num / den
                    })
                    .collect()
            })
            .collect();

        let simple_roots: Vec<Root> = (0..rank)
            .map(|i| {
                let mut c = vec![0; rank];
                c[i] = 1;
                Root::from_coeffs(c)
            })
            .collect();

        // Closure of the simple roots under simple reflections.
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for r in &simple_roots {
            seen.insert(r.0.clone());
            queue.push_back(r.0.clone());
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i32 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen
            .into_iter()
            .map(Root::from_coeffs)
            .filter(Root::is_positive)
            .collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        if positive_roots.len() != lie_type.positive_root_count(rank) {
            return Err(Error::Realization(format!(
                "reflection closure produced {} positive roots for {lie_type}{rank}",
                positive_roots.len()
            )));
        }

        let p = positive_roots.len();
        let mut index = HashMap::with_capacity(2 * p);
        for (k, r) in positive_roots.iter().enumerate() {
            index.insert(r.0.clone(), k);
            index.insert(r.negate().0, p + k);
        }

        let mut rs = RootSystem {
            lie_type,
            rank,
            simple_roots,
            positive_roots,
            cartan,
            simple_epsilon,
            index,
            rows: RowDecomposition::default(),
        };
        rs.rows = RowDecomposition::compute(&rs)?;
        Ok(rs)
    }

    pub fn id(&self) -> SystemId {
        SystemId {
            lie_type: self.lie_type,
            rank: self.rank,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// Simple root `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple_roots[i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn negative_roots(&self) -> Vec<Root> {
        self.positive_roots.iter().map(Root::negate).collect()
    }

    /// Positive roots followed by their negatives, in index order.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut all = self.positive_roots.clone();
        all.extend(self.negative_roots());
        all
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// Cartan integers with `a[i][j] = 2(α_i, α_j) / (α_j, α_j)`, so that
    /// `s_i(α_j) = α_j - a[j][i] α_i`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// Validating constructor for roots of this system.
    pub fn root(&self, coeffs: &[i32]) -> Result<Root> {
        if coeffs.len() == self.rank && self.is_root(coeffs) {
            Ok(Root::from_coeffs(coeffs.to_vec()))
        } else {
            Err(Error::NotARoot(coeffs.to_vec()))
        }
    }

    pub fn parse_root(&self, s: &str) -> Result<Root> {
        self.root(&parse_coeffs(s)?)
    }

    pub fn index_of_coeffs(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of a root of this system; panics on foreign vectors.
    pub fn index(&self, root: &Root) -> usize {
        self.index[&root.0]
    }

    pub fn root_at(&self, idx: usize) -> Root {
        let p = self.num_positive();
        if idx < p {
            self.positive_roots[idx].clone()
        } else {
            self.positive_roots[idx - p].negate()
        }
    }

    /// Index of the negated root.
    pub fn neg_index(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    /// Index of `α + β` when it is a root.
    pub fn sum_index(&self, a: &Root, b: &Root) -> Option<usize> {
        self.index_of_coeffs(&a.plus(b))
    }

    /// Coordinates of a root in the standard `ε` basis of the ambient
    /// Euclidean space (dimension `n + 1` in type A, `n` otherwise).
    pub fn epsilon(&self, root: &Root) -> Vec<i32> {
        let dim = self.simple_epsilon[0].len();
        let mut v = vec![0; dim];
        for (c, e) in root.0.iter().zip(&self.simple_epsilon) {
            for (slot, x) in v.iter_mut().zip(e) {
                *slot += c * x;
            }
        }
        v
    }

    pub fn epsilon_dim(&self) -> usize {
        self.simple_epsilon[0].len()
    }

    /// `β ≤ α`: equal, or `α - β` a nonzero nonnegative combination of simple
    /// roots.
    pub fn dominance_leq(&self, beta: &Root, alpha: &Root) -> bool {
        beta.0.iter().zip(&alpha.0).all(|(b, a)| a >= b)
    }

    pub fn rows(&self) -> &RowDecomposition {
        &self.rows
    }
}

fn simple_roots_epsilon(lie_type: LieType, n: usize) -> Vec<Vec<i32>> {
    let dim = if lie_type == LieType::A { n + 1 } else { n };
    let unit_diff = |i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v[i + 1] = -1;
        v
    };
    let mut simple: Vec<Vec<i32>> = (0..n - 1).map(unit_diff).collect();
    let last = match lie_type {
        LieType::A => unit_diff(n - 1),
        LieType::B => {
            let mut v = vec![0; dim];
            v[n - 1] = 1;
            v
        }
        LieType::C => {
            let mut v = vec![0; dim];
            v[n - 1] = 2;
            v
        }
        LieType::D => {
            let mut v = vec![0; dim];
            v[n - 2] = 1;
            v[n - 1] = 1;
            v
        }
    };
    simple.push(last);
    simple
}
