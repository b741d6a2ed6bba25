//! Named verification suites: each check is an exact identity reported as
//! PASS or FAIL with the first discrepancy.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::coeffs::{binomial, int, Rational, YPolynomial, YRationalFunction};
use crate::error::{Error, Result};
use crate::genera::{
    arithmetic_genus_series, chi_series, degree_series, zagier_closed_form, zagier_exp_form, ScalarSeries,
};
use crate::graded::{class_from_ints, scale_degrees, specialize_y, GradedClass, SpecializeMode};
use crate::pipelines::{
    chern_limit_series, chern_series_direct, first_discrepancy, l_series, todd_series_direct, verify_specialization,
    Target,
};
use crate::pontrjagin::{partition_sum_series, scalar_class, symmetric_class_series, PontSeries, SpaceModel};
use crate::random::{random_class, random_hirzebruch_like_class, random_model_from};
use crate::spaces::{flip_y, genus_class_pn, hirzebruch_class_pn, p1_hirzebruch_base, p1_model, point_model, Genus};

/// Seeds used for random models when none is given.
pub const DEFAULT_SEEDS: std::ops::Range<u64> = 0..10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(d) => write!(f, "FAIL {}: {d}", self.name),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    P1,
    Oracle,
    Genera,
    Specializations,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "p1" => Suite::P1,
            "oracle" => Suite::Oracle,
            "genera" => Suite::Genera,
            "specializations" => Suite::Specializations,
            "all" => Suite::All,
            other => return Err(Error::InvalidInput(format!("unknown suite '{other}'"))),
        })
    }
}

/// Runs a suite at truncation `n_max`. With a seed, the random parts use one
/// model drawn from it; otherwise one model per seed in [`DEFAULT_SEEDS`].
pub fn run_suite(suite: Suite, n_max: usize, seed: Option<u64>) -> Result<Vec<Check>> {
    match suite {
        Suite::P1 => p1_suite(n_max),
        Suite::Oracle => oracle_suite(n_max, seed),
        Suite::Genera => Ok(genera_suite(n_max)),
        Suite::Specializations => specializations_suite(n_max, seed),
        Suite::All => {
            let mut out = p1_suite(n_max)?;
            out.extend(oracle_suite(n_max, seed)?);
            out.extend(genera_suite(n_max));
            out.extend(specializations_suite(n_max, seed)?);
            Ok(out)
        }
    }
}

fn seeds(seed: Option<u64>) -> Vec<u64> {
    match seed {
        Some(s) => vec![s],
        None => DEFAULT_SEEDS.collect(),
    }
}

/// First `n` where a series term differs from `expected(n)`.
pub fn compare_with(series: &PontSeries, mut expected: impl FnMut(usize) -> GradedClass) -> Result<Option<String>> {
    for n in 0..=series.truncation() {
        let term = series.term(n);
        let want = expected(n).rebind(term.module())?;
        if let Some(i) = (0..term.module().rank()).find(|&i| term.coeff(i) != want.coeff(i)) {
            return Ok(Some(format!(
                "t^{n} [{}]: {} vs {}",
                term.module().label(i),
                term.coeff(i),
                want.coeff(i)
            )));
        }
    }
    Ok(None)
}

fn compare_series(a: &PontSeries, b: &PontSeries) -> Option<String> {
    first_discrepancy(a, b).map(|d| d.to_string())
}

fn compare_scalars(a: &ScalarSeries, b: &ScalarSeries) -> Option<String> {
    let n_max = a.truncation().min(b.truncation());
    (0..=n_max)
        .find(|&n| a.coeff(n) != b.coeff(n))
        .map(|n| format!("t^{n}: {} vs {}", a.coeff(n), b.coeff(n)))
}

fn first_failure(parts: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    parts.into_iter().flatten().next()
}

fn ones_and_zeros(n_max: usize, period_two: bool) -> ScalarSeries {
    ScalarSeries::from_rationals((0..=n_max).map(|n| int(if period_two && n % 2 == 1 { 0 } else { 1 })))
}

/// Hirzebruch series of ℙ¹ against the classes of ℙⁿ.
pub fn check_p1_hirzebruch(n_max: usize) -> Result<Check> {
    let model = Arc::new(p1_model(n_max));
    let series = symmetric_class_series(&model, &p1_hirzebruch_base())?;
    let failure = compare_with(&series, |n| flip_y(&hirzebruch_class_pn(n)))?;
    Ok(Check::new("hirzebruch series of P1 = T_(-y)(P^n)", failure))
}

pub fn check_p1_todd(n_max: usize) -> Result<Check> {
    let model = Arc::new(p1_model(n_max));
    let zero = Rational::zero();
    let specialized = symmetric_class_series(&model, &p1_hirzebruch_base())?
        .try_map_terms(|_, c| specialize_y(c, &zero, SpecializeMode::Evaluate))?;
    let direct = todd_series_direct(&model, &genus_class_pn(1, Genus::Todd))?;
    let failure = first_failure([
        compare_series(&specialized, &direct),
        compare_with(&direct, |n| genus_class_pn(n, Genus::Todd))?,
        compare_scalars(&degree_series(&direct), &arithmetic_genus_series(1, n_max)),
    ]);
    Ok(Check::new(
        "todd: y = 0 of P1 series = direct = td(P^n), degree 0 = (1-t)^-1",
        failure,
    ))
}

pub fn check_p1_chern(n_max: usize) -> Result<Check> {
    let model = Arc::new(p1_model(n_max));
    let limit = chern_limit_series(&model, &p1_hirzebruch_base())?;
    let c = class_from_ints(model.module(1).clone(), &[(1, 1), (0, 2)])?;
    let direct = chern_series_direct(&model, &c)?;
    let failure = first_failure([
        compare_series(&limit, &direct),
        compare_with(&direct, |n| genus_class_pn(n, Genus::Chern))?,
        compare_scalars(
            &degree_series(&direct),
            &chi_series(&YPolynomial::constant(int(2)), n_max),
        ),
    ]);
    Ok(Check::new(
        "chern: limit y -> 1 = direct = c(P^n), degree 0 = Macdonald(2)",
        failure,
    ))
}

pub fn check_p1_l(n_max: usize) -> Result<Check> {
    let model = Arc::new(p1_model(n_max));
    let minus_one = int(-1);
    let specialized = symmetric_class_series(&model, &p1_hirzebruch_base())?.try_map_terms(|_, c| {
        Ok(scale_degrees(
            2,
            &specialize_y(c, &minus_one, SpecializeMode::Evaluate)?,
        ))
    })?;
    let direct = l_series(&model, &genus_class_pn(1, Genus::L), 2)?;
    let failure = first_failure([
        compare_series(&specialized, &direct),
        compare_with(&direct, |n| genus_class_pn(n, Genus::L))?,
        compare_scalars(&degree_series(&direct), &ones_and_zeros(n_max, true)),
    ]);
    Ok(Check::new(
        "l: Psi_2 of T_1 of P1 series = l_series = L(P^n), degree 0 = 1,0,1,0,...",
        failure,
    ))
}

fn p1_suite(n_max: usize) -> Result<Vec<Check>> {
    Ok(vec![
        check_p1_hirzebruch(n_max)?,
        check_p1_todd(n_max)?,
        check_p1_chern(n_max)?,
        check_p1_l(n_max)?,
    ])
}

/// `partition_sum_series = symmetric_class_series` for one model and base.
pub fn check_oracle(name: &str, model: &Arc<SpaceModel>, base: &GradedClass) -> Result<Check> {
    let failure = compare_series(
        &partition_sum_series(model, base)?,
        &symmetric_class_series(model, base)?,
    );
    Ok(Check::new(
        format!("oracle: cycle-type sum = exp form on {name}"),
        failure,
    ))
}

fn oracle_suite(n_max: usize, seed: Option<u64>) -> Result<Vec<Check>> {
    let point = Arc::new(point_model(n_max));
    let g = YRationalFunction::from_poly(YPolynomial::from_i64s(&[2, -1, 3]));
    let mut out = vec![
        check_oracle("point", &point, &scalar_class(point.module(1), 0, g)?)?,
        check_oracle("P1", &Arc::new(p1_model(n_max)), &p1_hirzebruch_base())?,
    ];
    for s in seeds(seed) {
        let mut rng = StdRng::seed_from_u64(s);
        let model = Arc::new(random_model_from(&mut rng, n_max));
        let base = random_class(&mut rng, model.module(1));
        out.push(check_oracle(&format!("random model (seed {s})"), &model, &base)?);
    }
    Ok(out)
}

pub fn check_macdonald(chi: u64, n_max: usize) -> Check {
    let s = chi_series(&YPolynomial::constant(int(chi as i64)), n_max);
    let expected =
        ScalarSeries::from_rationals((0..=n_max as u64).map(|n| Rational::from_integer(binomial(n + chi - 1, n))));
    Check::new(format!("macdonald: chi = {chi}"), compare_scalars(&s, &expected))
}

/// Closed form against exp form on every admissible `|σ|, |χ| ≤ bound`.
pub fn check_zagier_grid(bound: i64, n_max: usize) -> Result<Check> {
    for sigma in -bound..=bound {
        for chi in -bound..=bound {
            if (sigma - chi).rem_euclid(2) != 0 {
                continue;
            }
            let closed = zagier_closed_form(sigma, chi, n_max)?;
            let via_exp = zagier_exp_form(sigma, chi, n_max)?;
            if let Some(d) = compare_scalars(&closed, &via_exp) {
                return Ok(Check::new(
                    "zagier grid",
                    Some(format!("(sigma, chi) = ({sigma}, {chi}), {d}")),
                ));
            }
        }
    }
    Ok(Check::new(
        format!("zagier: closed form = exp form, |sigma|, |chi| <= {bound}"),
        None,
    ))
}

pub fn check_chi_y_p1(n_max: usize) -> Check {
    let s = chi_series(&YPolynomial::from_i64s(&[1, 1]), n_max);
    let expected = ScalarSeries::new(
        (0..=n_max)
            .map(|n| YRationalFunction::from_poly(YPolynomial::from_i64s(&vec![1; n + 1])))
            .collect(),
    );
    Check::new("chi_y of Sym^n P1 = 1 + y + ... + y^n", compare_scalars(&s, &expected))
}

fn genera_suite(n_max: usize) -> Vec<Check> {
    let mut out: Vec<Check> = [1, 2, 3, 5]
        .into_iter()
        .map(|chi| check_macdonald(chi, n_max))
        .collect();
    out.push(check_zagier_grid(6, n_max).expect("parity is respected"));
    out.push(check_chi_y_p1(n_max));
    out
}

fn specialization_checks(name: &str, model: &Arc<SpaceModel>, base: &GradedClass) -> Result<Vec<Check>> {
    [Target::Todd, Target::Chern, Target::L]
        .into_iter()
        .map(|t| {
            let report = verify_specialization(model, base, t)?;
            let failure = (!report.passed()).then(|| report.to_string());
            Ok(Check::new(format!("specialization {t} on {name}"), failure))
        })
        .collect()
}

fn specializations_suite(n_max: usize, seed: Option<u64>) -> Result<Vec<Check>> {
    let point = Arc::new(point_model(n_max));
    let base = scalar_class(
        point.module(1),
        0,
        YRationalFunction::from_poly(YPolynomial::from_i64s(&[1, 1])),
    )?;
    let mut out = specialization_checks("point", &point, &base)?;
    out.extend(specialization_checks(
        "P1",
        &Arc::new(p1_model(n_max)),
        &p1_hirzebruch_base(),
    )?);
    for s in seeds(seed) {
        let mut rng = StdRng::seed_from_u64(s);
        let model = Arc::new(random_model_from(&mut rng, n_max));
        let base = random_hirzebruch_like_class(&mut rng, model.module(1));
        out.extend(specialization_checks(
            &format!("random model (seed {s})"),
            &model,
            &base,
        )?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for suite in [Suite::P1, Suite::Oracle, Suite::Genera, Suite::Specializations] {
            let checks = run_suite(suite, 5, None).unwrap();
            assert!(!checks.is_empty());
            for c in checks {
                assert!(c.passed(), "{c}");
            }
        }
    }

    #[test]
    fn seeded_oracle() {
        let checks = run_suite(Suite::Oracle, 5, Some(7)).unwrap();
        assert_eq!(checks.len(), 3);
        assert!(checks.iter().all(Check::passed));
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
