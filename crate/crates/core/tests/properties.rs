use std::collections::BTreeSet;

use proptest::prelude::*;

use hessenpave::fforacle::tally_points;
use hessenpave::hessenberg::{enumerate_hessenberg, HessenbergSpace};
use hessenpave::liealg::{ChevalleyRealization, NilpotentElement};
use hessenpave::linalg::{rat, Rational};
use hessenpave::paving::{cell_dimension, compute_paving, poincare_polynomial};
use hessenpave::rootcore::{LieType, Root, RootSystem};

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..=5).prop_map(|n| (LieType::A, n)),
        (2usize..=4).prop_map(|n| (LieType::B, n)),
        (2usize..=4).prop_map(|n| (LieType::C, n)),
        (3usize..=5).prop_map(|n| (LieType::D, n)),
    ]
    .prop_map(|(t, n)| RootSystem::new(t, n).unwrap())
}

fn small_systems() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for t in LieType::ALL {
        for r in t.min_rank()..=4 {
            out.push(RootSystem::new(t, r).unwrap());
        }
    }
    out
}

/// Hessenberg functions on `1..=n`, built directly.
fn hessenberg_functions(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            prefix.push(v);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

fn nonzero(v: i64) -> Rational {
    rat(if v >= 0 { v + 1 } else { v })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inversion_set_accumulates_along_reduced_word(rs in system(), word in prop::collection::vec(1usize..=5, 0..12)) {
        let word: Vec<usize> = word.into_iter().map(|i| (i - 1) % rs.rank() + 1).collect();
        let w = rs.from_word(&word).unwrap();
        let reduced = w.word().to_vec();
        prop_assert_eq!(reduced.len(), w.length());
        let mut prefix = rs.identity();
        let mut accumulated = BTreeSet::new();
        for &i in &reduced {
            accumulated.insert(rs.apply(&prefix, rs.simple_root(i)).unwrap());
            prefix = rs.compose(&prefix, &rs.simple_reflection(i).unwrap()).unwrap();
        }
        let direct: BTreeSet<Root> = rs.inversion_set(&w).into_iter().collect();
        prop_assert_eq!(direct, accumulated);
    }

    #[test]
    fn rows_partition_positive_roots(rs in system()) {
        let mut seen = BTreeSet::new();
        for row in rs.rows().rows() {
            for r in row {
                prop_assert!(seen.insert(r.clone()), "{} appears twice", r);
            }
        }
        prop_assert_eq!(seen.len(), rs.num_positive());
    }

    #[test]
    fn psi_is_regular_nilpotent_in_abc(
        t in prop::sample::select(vec![LieType::A, LieType::B, LieType::C]),
        rank in 2usize..=4,
        coeffs in prop::collection::vec(-4i64..4, 16),
    ) {
        let rs = RootSystem::new(t, rank).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        let p = rs.num_positive();
        let n = NilpotentElement::from_coeffs(
            (0..p).map(|k| if rs.root_at(k).height() == 1 { nonzero(coeffs[k % 16]) } else { rat(coeffs[k % 16]) }).collect(),
        );
        for i in 1..=rank {
            let psi = real.psi_matrix(&n, i).unwrap();
            for r in 0..psi.rows() {
                for c in 0..=r {
                    prop_assert_eq!(*psi.get(r, c), rat(0));
                }
                if r + 1 < psi.cols() {
                    prop_assert_ne!(*psi.get(r, r + 1), rat(0));
                }
            }
        }
    }

    #[test]
    fn adjoint_action_preserves_regularity(rs in system(), xs in prop::collection::vec(-3i64..=3, 30), ns in prop::collection::vec(-3i64..3, 30)) {
        prop_assume!(rs.rank() <= 4);
        let real = ChevalleyRealization::new(&rs).unwrap();
        let p = rs.num_positive();
        let x: Vec<Rational> = (0..p).map(|k| rat(xs[k % 30])).collect();
        let n: Vec<Rational> = (0..p)
            .map(|k| if rs.root_at(k).height() == 1 { nonzero(ns[k % 30]) } else { rat(ns[k % 30]) })
            .collect();
        let moved = NilpotentElement::from_coeffs(real.ad_exp_n(&x, &n));
        prop_assert!(moved.is_regular(&rs));
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for rs in small_systems() {
        let roots = rs.positive_roots();
        for a in roots {
            assert!(rs.dominance_leq(a, a));
            for b in roots {
                if a != b && rs.dominance_leq(a, b) {
                    assert!(!rs.dominance_leq(b, a));
                }
                for c in roots {
                    if rs.dominance_leq(a, b) && rs.dominance_leq(b, c) {
                        assert!(rs.dominance_leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn hessenberg_functions_round_trip_and_count() {
    for n in 2..=6 {
        let rs = RootSystem::new(LieType::A, n - 1).unwrap();
        let direct = hessenberg_functions(n);
        assert_eq!(enumerate_hessenberg(&rs).len(), direct.len(), "n = {n}");
        if n <= 5 {
            for h in &direct {
                let space = HessenbergSpace::from_function(&rs, h).unwrap();
                assert_eq!(space.to_function().as_ref(), Some(h));
            }
        }
    }
}

#[test]
fn hessenberg_spaces_are_closed_and_form_a_lattice() {
    for rs in small_systems() {
        let spaces = enumerate_hessenberg(&rs);
        for h in &spaces {
            assert!(h.is_closed_under_positive_roots(), "{}", h.to_text());
        }
        for a in &spaces {
            for b in &spaces {
                for m in [a.intersection(b).unwrap(), a.union(b).unwrap()] {
                    assert!(spaces.contains(&m));
                }
            }
        }
    }
}

#[test]
fn paving_extremes_and_bounds() {
    for rs in small_systems() {
        let borel: Vec<_> = compute_paving(&HessenbergSpace::borel(&rs))
            .into_iter()
            .filter(|c| c.nonempty)
            .collect();
        assert_eq!(borel.len(), 1);
        assert_eq!(borel[0].dim, Some(0));
        for c in compute_paving(&HessenbergSpace::full(&rs)) {
            assert_eq!(c.dim, Some(c.w.length()));
        }
        let w0 = rs.longest_element();
        for h in enumerate_hessenberg(&rs) {
            let cells = compute_paving(&h);
            let top = cells.iter().filter_map(|c| c.dim).max().unwrap();
            assert!(top <= h.negative_count());
            if let Some(c) = cells.iter().find(|c| c.w == w0 && c.nonempty) {
                assert_eq!(c.dim, Some(h.negative_count()));
                assert_eq!(cell_dimension(&w0, &h).unwrap(), top);
            }
            assert_eq!(poincare_polynomial(&h).coefficients()[0], 1);
        }
    }
}

#[test]
fn point_count_exponents_agree_across_primes() {
    for n in 2..=4 {
        for h in hessenberg_functions(n) {
            let (two, three) = (tally_points(n, 2, &h).unwrap(), tally_points(n, 3, &h).unwrap());
            for (a, b) in two.cells.iter().zip(&three.cells) {
                assert_eq!(a.perm, b.perm);
                assert_eq!(a.count == 0, b.count == 0);
                if a.count > 0 {
                    let e = a.count.trailing_zeros();
                    assert_eq!(a.count, 1 << e, "{h:?} {}", a.perm);
                    assert_eq!(b.count, 3u64.pow(e), "{h:?} {}", a.perm);
                }
            }
        }
    }
}
