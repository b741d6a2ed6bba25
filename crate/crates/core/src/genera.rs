//! Degree-zero generating series: Hodge polynomials, Euler characteristics,
//! arithmetic genera and signatures of symmetric products.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffs::{int, Rational, YPolynomial, YRationalFunction};
use crate::error::{Error, Result};
use crate::pontrjagin::PontSeries;

/// `Σ_{n ≤ N} c_n t^n` with coefficients in ℚ(y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarSeries {
    coeffs: Vec<YRationalFunction>,
}

impl ScalarSeries {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<YRationalFunction>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the t^0 coefficient");
        Self { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::new(coeffs.into_iter().map(YRationalFunction::constant).collect())
    }

    pub fn one(n_max: usize) -> Self {
        let mut coeffs = vec![YRationalFunction::zero(); n_max + 1];
        coeffs[0] = YRationalFunction::one();
        Self { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &YRationalFunction {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[YRationalFunction] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n_max = self.truncation().min(other.truncation());
        let mut out = vec![YRationalFunction::zero(); n_max + 1];
        for (i, a) in self.coeffs[..=n_max].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n_max - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    /// `exp` of a series with zero constant term, via `n c_n = Σ k a_k c_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = vec![YRationalFunction::one()];
        for n in 1..=self.truncation() {
            let mut acc = YRationalFunction::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &out[n - k]).scale(&int(k as i64));
                }
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
        }
        Ok(Self { coeffs: out })
    }

    /// Evaluates every coefficient at `y0`.
    pub fn evaluate(&self, y0: &Rational) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.evaluate(y0).map(YRationalFunction::constant))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }
}

impl fmt::Display for ScalarSeries {
    /// One `n<TAB>coefficient` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}\t{c}")?;
        }
        Ok(())
    }
}

/// Generalized binomial coefficient `C(e, n)` for rational `e`.
pub fn generalized_binomial(e: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc = acc * (e - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// `(1 + s·t^step)^e` truncated at `n_max`.
pub fn binomial_series(e: &Rational, s: i64, step: usize, n_max: usize) -> ScalarSeries {
    assert!(step >= 1);
    let mut coeffs = vec![Rational::zero(); n_max + 1];
    let s = int(s);
    let mut s_pow = Rational::one();
    for k in 0..=n_max / step {
        coeffs[k * step] = generalized_binomial(e, k) * &s_pow;
        s_pow *= &s;
    }
    ScalarSeries::from_rationals(coeffs)
}

/// `Σ_n χ_{-y}(X^(n), M^(n)) t^n = exp(Σ_r g(y^r) t^r / r)` with
/// `g = χ_{-y}(X, M)`.
pub fn chi_series(g: &YPolynomial, n_max: usize) -> ScalarSeries {
    let mut inner = vec![YRationalFunction::zero(); n_max + 1];
    for (r, slot) in inner.iter_mut().enumerate().skip(1) {
        *slot =
            YRationalFunction::from_poly(g.substitute_power(r)).scale(&Rational::new(BigInt::one(), BigInt::from(r)));
    }
    ScalarSeries::new(inner).exp().expect("constant term is zero")
}

fn check_parity(sigma: i64, chi: i64) -> Result<()> {
    if (sigma - chi).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch { sigma, chi });
    }
    Ok(())
}

/// `(1+t)^{(σ-χ)/2} / (1-t)^{(σ+χ)/2}` expanded by the binomial theorem.
pub fn zagier_closed_form(sigma: i64, chi: i64, n_max: usize) -> Result<ScalarSeries> {
    check_parity(sigma, chi)?;
    let plus = binomial_series(&int((sigma - chi) / 2), 1, 1, n_max);
    let minus = binomial_series(&int(-(sigma + chi) / 2), -1, 1, n_max);
    Ok(plus.mul(&minus))
}

/// `exp(Σ_r c_r t^r / r)` with `c_r = σ` for odd `r` and `χ` for even `r`.
pub fn zagier_exp_form(sigma: i64, chi: i64, n_max: usize) -> Result<ScalarSeries> {
    check_parity(sigma, chi)?;
    let mut inner = vec![YRationalFunction::zero(); n_max + 1];
    for (r, slot) in inner.iter_mut().enumerate().skip(1) {
        let c = if r % 2 == 1 { sigma } else { chi };
        *slot = YRationalFunction::constant(Rational::new(c.into(), (r as i64).into()));
    }
    ScalarSeries::new(inner).exp()
}

/// Signatures of symmetric products from `σ` and the Euler characteristic.
/// The closed form is cross-checked against the exp form before returning.
pub fn zagier_signature_series(sigma: i64, chi: i64, n_max: usize) -> Result<ScalarSeries> {
    let closed = zagier_closed_form(sigma, chi, n_max)?;
    let via_exp = zagier_exp_form(sigma, chi, n_max)?;
    if closed != via_exp {
        let n = (0..=n_max).find(|&n| closed.coeff(n) != via_exp.coeff(n)).unwrap_or(0);
        return Err(Error::invariant(
            "signature series",
            format!(
                "closed form and exp form differ at t^{n}: {} vs {}",
                closed.coeff(n),
                via_exp.coeff(n)
            ),
        ));
    }
    Ok(closed)
}

/// `(1 - t)^{-χ_a}`.
pub fn arithmetic_genus_series(chi_a: i64, n_max: usize) -> ScalarSeries {
    binomial_series(&int(-chi_a), -1, 1, n_max)
}

/// Degree of the zero-dimensional part of every term of a Pontrjagin series.
pub fn degree_series(s: &PontSeries) -> ScalarSeries {
    ScalarSeries::new(s.terms().iter().map(|t| t.degree_zero_part()).collect())
}
