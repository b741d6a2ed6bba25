//! Todd, Chern and L-class generating series computed directly, and the
//! specializations of the Hirzebruch series that recover them.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeffs::{int, Rational, YRationalFunction};
use crate::error::Result;
use crate::genera::binomial_series;
use crate::graded::{normalize, push_forward, scale_degrees, specialize_y, GradedClass, Sign, SpecializeMode};
use crate::pontrjagin::{exp_of_power_sums, symmetric_class_series, PontSeries, SpaceModel};

/// `exp(Σ_r Ψ_r(d^r_* td) t^r / r)` for a y-free class, where Ψ_r reduces
/// to degree scaling.
pub fn todd_series_direct(model: &Arc<SpaceModel>, td: &GradedClass) -> Result<PontSeries> {
    td.require_y_free()?;
    let td = model.level_one_class(td)?;
    exp_of_power_sums(model, |r| {
        Ok(Some(scale_degrees(r, &push_forward(model.diagonal(r), &td)?)))
    })
}

/// `exp(Σ_r d^r_*(c) t^r / r)`; no Adams operation in the exponent.
pub fn chern_series_direct(model: &Arc<SpaceModel>, c: &GradedClass) -> Result<PontSeries> {
    c.require_y_free()?;
    let c = model.level_one_class(c)?;
    exp_of_power_sums(model, |r| Ok(Some(push_forward(model.diagonal(r), &c)?)))
}

/// `lim_{y→1} Ψ_(1-y)` applied to every coefficient of the Hirzebruch series.
pub fn chern_limit_series(model: &Arc<SpaceModel>, base: &GradedClass) -> Result<PontSeries> {
    let series = symmetric_class_series(model, base)?;
    series.try_map_terms(|_, c| specialize_y(&normalize(c, Sign::Minus), &Rational::one(), SpecializeMode::Limit))
}

/// The Chern class hidden in a `T_{(-y)}` base: `lim_{y→1} Ψ_(1-y)(base)`.
pub fn chern_of_base(base: &GradedClass) -> Result<GradedClass> {
    specialize_y(&normalize(base, Sign::Minus), &Rational::one(), SpecializeMode::Limit)
}

/// `(1 - t²)^{-Ichi/2} · exp(Σ_{r odd} Ψ_r(d^r_* L) t^r / r)`, where the scalar
/// factor multiplies the point class in each degree.
pub fn l_series(model: &Arc<SpaceModel>, l: &GradedClass, ichi: i64) -> Result<PontSeries> {
    l_series_rational(model, l, &int(ichi))
}

/// [`l_series`] with a rational `Ichi`.
pub fn l_series_rational(model: &Arc<SpaceModel>, l: &GradedClass, ichi: &Rational) -> Result<PontSeries> {
    l.require_y_free()?;
    let l = model.level_one_class(l)?;
    let odd = exp_of_power_sums(model, |r| {
        if r % 2 == 0 {
            return Ok(None);
        }
        Ok(Some(scale_degrees(r, &push_forward(model.diagonal(r), &l)?)))
    })?;
    let n_max = model.truncation();
    let even = binomial_series(&(-ichi / int(2)), -1, 2, n_max);
    let mut terms = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let c = even.coeff(n);
        terms.push(if c.is_zero() {
            GradedClass::zero(model.module(n).clone())
        } else {
            model.point_class(n)?.scale(c)
        });
    }
    PontSeries::from_terms(model.clone(), terms)?.mul(&odd)
}

/// Which specialization [`verify_specialization`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Todd,
    Chern,
    L,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Todd => "todd",
            Target::Chern => "chern",
            Target::L => "l",
        })
    }
}

/// First coefficient where two series differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    pub label: String,
    pub left: YRationalFunction,
    pub right: YRationalFunction,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} [{}]: {} vs {}", self.n, self.label, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch(Discrepancy),
    InvalidModel(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationReport {
    pub target: Target,
    pub outcome: Outcome,
}

impl SpecializationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for SpecializationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.target),
            Outcome::Mismatch(d) => write!(f, "FAIL {}: {d}", self.target),
            Outcome::InvalidModel(msg) => write!(f, "FAIL {}: invalid model: {msg}", self.target),
        }
    }
}

/// Coefficientwise comparison in basis order, up to the shorter truncation.
pub fn first_discrepancy(left: &PontSeries, right: &PontSeries) -> Option<Discrepancy> {
    let n_max = left.truncation().min(right.truncation());
    for n in 0..=n_max {
        let (a, b) = (left.term(n), right.term(n));
        let module = a.module();
        for i in 0..module.rank() {
            let (x, y) = (a.coeff(i), b.coeff(i));
            if x != y {
                return Some(Discrepancy {
                    n,
                    label: module.label(i).to_string(),
                    left: x,
                    right: y,
                });
            }
        }
    }
    None
}

/// Compares a specialization of `symmetric_class_series(model, base)` with
/// the matching direct pipeline. The model is validated first, so a
/// corrupted structure constant is reported with its location.
pub fn verify_specialization(
    model: &Arc<SpaceModel>,
    base: &GradedClass,
    target: Target,
) -> Result<SpecializationReport> {
    if let Err(e) = model.validate() {
        return Ok(SpecializationReport {
            target,
            outcome: Outcome::InvalidModel(e.to_string()),
        });
    }
    let (left, right) = specialization_pair(model, base, target)?;
    let outcome = match first_discrepancy(&left, &right) {
        None => Outcome::Pass,
        Some(d) => Outcome::Mismatch(d),
    };
    Ok(SpecializationReport { target, outcome })
}

/// The two series [`verify_specialization`] compares.
pub fn specialization_pair(
    model: &Arc<SpaceModel>,
    base: &GradedClass,
    target: Target,
) -> Result<(PontSeries, PontSeries)> {
    match target {
        Target::Todd => {
            let zero = Rational::zero();
            let left = symmetric_class_series(model, base)?
                .try_map_terms(|_, c| specialize_y(c, &zero, SpecializeMode::Evaluate))?;
            let right = todd_series_direct(model, &specialize_y(base, &zero, SpecializeMode::Evaluate)?)?;
            Ok((left, right))
        }
        Target::Chern => Ok((
            chern_limit_series(model, base)?,
            chern_series_direct(model, &chern_of_base(base)?)?,
        )),
        Target::L => {
            let (at_one, at_minus_one) = (int(1), int(-1));
            let left = symmetric_class_series(model, base)?.try_map_terms(|_, c| {
                Ok(scale_degrees(
                    2,
                    &specialize_y(c, &at_minus_one, SpecializeMode::Evaluate)?,
                ))
            })?;
            let l = scale_degrees(2, &specialize_y(base, &at_minus_one, SpecializeMode::Evaluate)?);
            let ichi = specialize_y(base, &at_one, SpecializeMode::Evaluate)?.degree_zero_part();
            let ichi = ichi.as_constant().expect("specialized classes are y-free");
            let right = l_series_rational(model, &l, &ichi)?;
            Ok((left, right))
        }
    }
}
