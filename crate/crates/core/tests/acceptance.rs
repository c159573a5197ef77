//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hessenpave::fforacle::count_points;
use hessenpave::hessenberg::{enumerate_hessenberg, HessenbergSpace};
use hessenpave::liealg::{find_witness, verify_lemmata, CheckStatus, ChevalleyRealization, NilpotentElement};
use hessenpave::linalg::rat;
use hessenpave::paving::{
    cell_dimension, cell_dimension_lie, cell_nonempty, poincare_polynomial, row_dimension_profile,
};
use hessenpave::rootcore::{LieType, RootSystem};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for t in LieType::ALL {
        for r in t.min_rank()..=max_rank {
            out.push(RootSystem::new(t, r).unwrap());
        }
    }
    out
}

fn sweep_systems() -> Vec<RootSystem> {
    let mut out = systems(4);
    out.push(RootSystem::new(LieType::A, 5).unwrap());
    out
}

fn name(rs: &RootSystem) -> String {
    format!("{}{}", rs.lie_type(), rs.rank())
}

fn dimension_formulas() -> Outcome {
    let mut cells = 0;
    for rs in sweep_systems() {
        let group = rs.enumerate_weyl();
        for h in enumerate_hessenberg(&rs) {
            for w in &group {
                if !cell_nonempty(w, &h) {
                    continue;
                }
                let (a, b) = (cell_dimension(w, &h).unwrap(), cell_dimension_lie(w, &h).unwrap());
                if a != b {
                    return Err(format!(
                        "{} w = {} {}: {a} vs {b}",
                        name(&rs),
                        w.word_text(),
                        h.to_text()
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} nonempty cells agree"))
}

fn profile_telescoping() -> Outcome {
    let mut cells = 0;
    for rs in sweep_systems() {
        let group = rs.enumerate_weyl();
        for h in enumerate_hessenberg(&rs) {
            for w in &group {
                if !cell_nonempty(w, &h) {
                    continue;
                }
                let profile = row_dimension_profile(w, &h).unwrap();
                let dim = cell_dimension(w, &h).unwrap();
                if profile.iter().sum::<usize>() != dim {
                    return Err(format!(
                        "{} w = {} {}: {profile:?} vs {dim}",
                        name(&rs),
                        w.word_text(),
                        h.to_text()
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} profiles sum to the cell dimension"))
}

fn finite_field_oracle() -> Outcome {
    let mut runs = 0;
    for (n, expected) in [(3, 5), (4, 14)] {
        let rs = RootSystem::new(LieType::A, n - 1).unwrap();
        let functions: Vec<Vec<usize>> = enumerate_hessenberg(&rs)
            .iter()
            .filter_map(|h| h.to_function())
            .collect();
        if functions.len() != expected {
            return Err(format!(
                "n = {n}: {} Hessenberg functions, expected {expected}",
                functions.len()
            ));
        }
        for q in [2, 3] {
            for h in &functions {
                count_points(n, q, h).map_err(|e| format!("n = {n}, q = {q}, h = {h:?}: {e}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} (n, q, h) runs match cell by cell"))
}

fn golden_specializations() -> Outcome {
    for rs in systems(4) {
        let borel = poincare_polynomial(&HessenbergSpace::borel(&rs));
        if borel.coefficients() != [1] {
            return Err(format!("{} borel: {:?}", name(&rs), borel.coefficients()));
        }
        let mut by_length = vec![0u64; rs.longest_element().length() + 1];
        for w in rs.enumerate_weyl() {
            by_length[w.length()] += 1;
        }
        let full = poincare_polynomial(&HessenbergSpace::full(&rs));
        if full.coefficients() != by_length.as_slice() {
            return Err(format!(
                "{} full: {:?} vs {by_length:?}",
                name(&rs),
                full.coefficients()
            ));
        }
    }
    let a2 = RootSystem::new(LieType::A, 2).unwrap();
    let peterson = poincare_polynomial(&HessenbergSpace::peterson(&a2));
    if peterson.coefficients() != [1, 2, 1] || peterson.coefficients().len() - 1 != a2.rank() {
        return Err(format!("A2 peterson: {:?}", peterson.coefficients()));
    }
    Ok("borel, full and Peterson specializations hold".into())
}

fn lemma_suite() -> Outcome {
    let mut lines = Vec::new();
    for (t, n) in [(LieType::A, 3), (LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
        let rs = RootSystem::new(t, n).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        let report = verify_lemmata(&real, 200, 0x5eed);
        let skipped: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Skip)
            .map(|c| c.name.as_str())
            .collect();
        if t == LieType::D && !skipped.is_empty() {
            return Err(format!("D4 skipped {skipped:?}"));
        }
        if let Err(e) = report.into_result() {
            return Err(format!("{}: {e}", name(&rs)));
        }
        lines.push(name(&rs));
    }
    Ok(format!("all checks pass with 200 trials for {}", lines.join(", ")))
}

fn witnesses() -> Outcome {
    let mut cells = 0;
    for (t, n) in [(LieType::A, 3), (LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
        let rs = RootSystem::new(t, n).unwrap();
        let real = ChevalleyRealization::new(&rs).unwrap();
        // The sum of simple root vectors, and a regular element supported on
        // every positive root.
        let full = NilpotentElement::from_coeffs(
            (0..rs.num_positive())
                .map(|k| {
                    rat(if k % 2 == 0 {
                        k as i64 % 5 + 1
                    } else {
                        -(k as i64 % 3) - 1
                    })
                })
                .collect(),
        );
        let nilpotents = [NilpotentElement::sum_of_simple(&rs), full];
        let group = rs.enumerate_weyl();
        for h in enumerate_hessenberg(&rs) {
            for w in &group {
                if !cell_nonempty(w, &h) {
                    continue;
                }
                let profile = row_dimension_profile(w, &h).unwrap();
                for (k, nil) in nilpotents.iter().enumerate() {
                    let ctx = || format!("{} w = {} {} N #{k}", name(&rs), w.word_text(), h.to_text());
                    let result = find_witness(&real, w, &h, nil).map_err(|e| format!("{}: {e}", ctx()))?;
                    if !result.verified {
                        return Err(format!("{}: not verified", ctx()));
                    }
                    if result.stage_kernel_dims != profile {
                        return Err(format!(
                            "{}: kernels {:?} vs profile {profile:?}",
                            ctx(),
                            result.stage_kernel_dims
                        ));
                    }
                }
                cells += 1;
            }
        }
    }
    Ok(format!(
        "{cells} cells, two regular nilpotents each, verified with matching kernel dimensions"
    ))
}

fn monotonicity() -> Outcome {
    let mut pairs = 0u64;
    for rs in systems(4) {
        let group = rs.enumerate_weyl();
        let spaces = enumerate_hessenberg(&rs);
        let dims: Vec<Vec<Option<usize>>> = spaces
            .iter()
            .map(|h| {
                group
                    .iter()
                    .map(|w| cell_nonempty(w, h).then(|| cell_dimension(w, h).unwrap()))
                    .collect()
            })
            .collect();
        for (a, h) in spaces.iter().enumerate() {
            for (k, w) in group.iter().enumerate() {
                if let Some(d) = dims[a][k] {
                    if d > w.length().min(h.negative_count()) {
                        return Err(format!(
                            "{} w = {} {}: dim {d} too large",
                            name(&rs),
                            w.word_text(),
                            h.to_text()
                        ));
                    }
                }
            }
            for (b, h2) in spaces.iter().enumerate() {
                if !h.is_subspace_of(h2) {
                    continue;
                }
                pairs += 1;
                for (k, w) in group.iter().enumerate() {
                    let ok = match (dims[a][k], dims[b][k]) {
                        (None, _) => true,
                        (Some(_), None) => false,
                        (Some(d), Some(d2)) => d <= d2,
                    };
                    if !ok {
                        return Err(format!(
                            "{} w = {}: {} ⊆ {} breaks monotonicity",
                            name(&rs),
                            w.word_text(),
                            h.to_text(),
                            h2.to_text()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} nested pairs checked"))
}

fn determinism() -> Outcome {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_hessenpave"))
            .args(args)
            .env_remove("HESSENPAVE_SEED")
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{args:?} exited with {}", out.status));
        }
        Ok(out.stdout)
    };
    let sweep = ["sweep", "--seed", "17", "--format", "json"];
    let (a, b) = (run(&sweep)?, run(&sweep)?);
    if a != b {
        return Err("sweep output differs between runs".into());
    }
    let lemmata = [
        "verify-lemmata",
        "--type",
        "B",
        "--rank",
        "3",
        "--trials",
        "20",
        "--seed",
        "17",
    ];
    if run(&lemmata)? != run(&lemmata)? {
        return Err("verify-lemmata output differs between runs".into());
    }
    Ok(format!(
        "sweep JSON ({} bytes) and lemma reports are byte-identical",
        a.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "dimension formula agreement",
            dimension_formulas,
            Duration::from_secs(30),
        ),
        ("row-profile telescoping", profile_telescoping, Duration::from_secs(30)),
        ("finite-field oracle", finite_field_oracle, Duration::from_secs(60)),
        ("golden specializations", golden_specializations, Duration::MAX),
        ("lemma verification suite", lemma_suite, Duration::from_secs(120)),
        ("constructive witnesses", witnesses, Duration::from_secs(300)),
        ("monotonicity and bounds", monotonicity, Duration::MAX),
        ("determinism", determinism, Duration::MAX),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (label, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > *budget => Err(format!("took {elapsed:.1?}, budget {budget:.0?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {}: PASS {label}: {detail} ({elapsed:.2?})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {label}: {detail} ({elapsed:.2?})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
