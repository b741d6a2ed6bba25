//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use proptest::prelude::any;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::SeedableRng;

use symprod_core::coeffs::{int, YPolynomial, YRationalFunction};
use symprod_core::pontrjagin::{scalar_class, symmetric_class_series};
use symprod_core::random::{random_class, random_model_from};
use symprod_core::spaces::{
    flip_y, hirzebruch_class_pn, p1_hirzebruch_base, p1_model, perturb, point_model, structure_constants,
};
use symprod_core::verify::{
    check_chi_y_p1, check_macdonald, check_oracle, check_p1_chern, check_p1_hirzebruch, check_p1_l, check_p1_todd,
    check_zagier_grid, compare_with, Check,
};

const N: usize = 6;
const RANDOM_MODELS: u64 = 12;
const PROPERTY_CASES: u32 = 100;

type Outcome = Result<String, String>;
type Property = fn(u64) -> Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_checks(checks: Vec<Check>, summary: &str) -> Outcome {
    match checks.into_iter().find(|c| !c.passed()) {
        Some(c) => Err(c.to_string()),
        None => Ok(summary.to_string()),
    }
}

fn p1() -> Outcome {
    from_checks(
        vec![check_p1_hirzebruch(N).map_err(|e| e.to_string())?],
        "T_(-y)(P^n) for n <= 6",
    )
}

fn p2() -> Outcome {
    let err = |e: symprod_core::Error| e.to_string();
    let point = Arc::new(point_model(N));
    let g = YRationalFunction::from_poly(YPolynomial::from_i64s(&[1, -2, 3]));
    let mut checks = vec![
        check_oracle("point", &point, &scalar_class(point.module(1), 0, g).map_err(err)?).map_err(err)?,
        check_oracle("P1", &Arc::new(p1_model(N)), &p1_hirzebruch_base()).map_err(err)?,
    ];
    for seed in 0..RANDOM_MODELS {
        let mut rng = StdRng::seed_from_u64(seed);
        let model = Arc::new(random_model_from(&mut rng, N));
        let base = random_class(&mut rng, model.module(1));
        checks.push(check_oracle(&format!("random model {seed}"), &model, &base).map_err(err)?);
    }
    from_checks(checks, &format!("point, P1 and {RANDOM_MODELS} random models, n <= 6"))
}

fn p3() -> Outcome {
    from_checks(
        vec![check_p1_todd(N).map_err(|e| e.to_string())?],
        "y = 0, direct Todd series, td(P^n), (1-t)^-1",
    )
}

fn p4() -> Outcome {
    from_checks(
        vec![check_p1_chern(N).map_err(|e| e.to_string())?],
        "limit y -> 1, direct Chern series, c(P^n), Macdonald(2)",
    )
}

fn p5() -> Outcome {
    from_checks(
        vec![check_p1_l(N).map_err(|e| e.to_string())?],
        "Psi_2 of T_1, l_series(Ichi = 2), L(P^n), 1,0,1,0,...",
    )
}

fn p6() -> Outcome {
    from_checks(
        [1, 2, 3, 5].into_iter().map(|chi| check_macdonald(chi, 12)).collect(),
        "chi in {1, 2, 3, 5}, N = 12",
    )
}

fn p7() -> Outcome {
    from_checks(
        vec![check_zagier_grid(6, 12).map_err(|e| e.to_string())?],
        "|sigma|, |chi| <= 6, N = 12",
    )
}

fn p8() -> Outcome {
    from_checks(vec![check_chi_y_p1(10)], "N = 10")
}

fn p9() -> Outcome {
    let properties: [(&str, Property); 4] = [
        ("ring axioms", common::ring_axioms),
        ("exp/log round trip", common::exp_log_round_trip),
        ("Psi_r Psi_s = Psi_rs", common::adams_composition),
        ("Psi_k d^r = d^r Psi_k", common::adams_push_forward),
    ];
    for (name, property) in properties {
        let config = Config {
            cases: PROPERTY_CASES,
            failure_persistence: None,
            ..Config::default()
        };
        let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
        runner
            .run(&any::<u64>(), |seed| property(seed).map_err(TestCaseError::fail))
            .map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("4 property families x {PROPERTY_CASES} cases"))
}

/// Every single-constant perturbation of the ℙ¹ model must make P1 fail:
/// either the model is rejected on validation or the series differs.
fn p10() -> Outcome {
    let model = p1_model(N);
    let (mut rejected, mut differing) = (0, 0);
    for which in structure_constants(&model) {
        let bad = Arc::new(perturb(&model, which, &int(1)));
        if bad.validate().is_err() {
            rejected += 1;
            continue;
        }
        let series = symmetric_class_series(&bad, &p1_hirzebruch_base()).map_err(|e| e.to_string())?;
        match compare_with(&series, |n| flip_y(&hirzebruch_class_pn(n))).map_err(|e| e.to_string())? {
            Some(_) => differing += 1,
            None => return Err(format!("perturbing {which} leaves P1 passing")),
        }
    }
    Ok(format!(
        "{} perturbations: {rejected} rejected by validation, {differing} change the series",
        rejected + differing
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("P1", p1),
        ("P2", p2),
        ("P3", p3),
        ("P4", p4),
        ("P5", p5),
        ("P6", p6),
        ("P7", p7),
        ("P8", p8),
        ("P9", p9),
        ("P10", p10),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("{id} PASS ({secs:.2}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL ({secs:.2}s) {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
