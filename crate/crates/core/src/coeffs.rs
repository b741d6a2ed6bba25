//! Exact coefficient arithmetic: arbitrary-precision rationals, polynomials
//! in `y` over ℚ, and the field ℚ(y) of rational functions in canonical form.
//!
//! A [`YRationalFunction`] is always stored with `gcd(num, den) = 1` and a
//! monic denominator, so two equal functions compare equal structurally.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}`: zero denominator")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(BigInt::from_str(s).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?),
    };
    Ok(parsed)
}

/// Canonical `"p/q"` text, `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Polynomial in `y` with rational coefficients, dense in ascending order
/// and without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YPolynomial {
    coeffs: Vec<Rational>,
}

impl YPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `y`.
    pub fn y() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, y0: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * y0 + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `f(y) ↦ f(y^r)`.
    pub fn substitute_power(&self, r: usize) -> Self {
        assert!(r >= 1, "substitution exponent must be positive");
        if r == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * r + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * r] = c.clone();
        }
        Self { coeffs }
    }

    /// `f(y) ↦ f(c·y)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.make_monic(), b.make_monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.make_monic();
        }
        a
    }

    /// Divides out every factor `(y - y0)`, returning the quotient and the
    /// multiplicity removed.
    pub fn strip_root(&self, y0: &Rational) -> (Self, usize) {
        let mut p = self.clone();
        let mut mult = 0;
        while !p.is_zero() && p.eval(y0).is_zero() {
            // synthetic division by (y - y0)
            let n = p.coeffs.len();
            let mut q = vec![Rational::zero(); n - 1];
            let mut carry = Rational::zero();
            for i in (1..n).rev() {
                carry = &p.coeffs[i] + &carry * y0;
                q[i - 1] = carry.clone();
            }
            p = Self::from_coeffs(q);
            mult += 1;
        }
        (p, mult)
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn add(self, rhs: &YPolynomial) -> YPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        YPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &YPolynomial {
    type Output = YPolynomial;
    fn neg(self) -> YPolynomial {
        YPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn sub(self, rhs: &YPolynomial) -> YPolynomial {
        self + &(-rhs)
    }
}

impl Mul<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return YPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        YPolynomial::from_coeffs(coeffs)
    }
}

/// Arithmetic operation selector for [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Element of ℚ(y) in canonical form: reduced, with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YRationalFunction {
    num: YPolynomial,
    den: YPolynomial,
}

impl Default for YRationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl YRationalFunction {
    pub fn zero() -> Self {
        Self {
            num: YPolynomial::zero(),
            den: YPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn y() -> Self {
        Self::from_poly(YPolynomial::y())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(YPolynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn from_poly(num: YPolynomial) -> Self {
        Self {
            num,
            den: YPolynomial::one(),
        }
    }

    /// Reduces `num/den` to canonical form.
    pub fn new(num: YPolynomial, den: YPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: YPolynomial, den: YPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = YPolynomial::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &YPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &YPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number if `self` does not depend on `y`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact value at `y0`.
    pub fn evaluate(&self, y0: &Rational) -> Result<Rational> {
        let d = self.den.eval(y0);
        if d.is_zero() {
            return Err(Error::Pole { at: y0.clone() });
        }
        Ok(self.num.eval(y0) / d)
    }

    /// Limit as `y → y0`: every common factor `(y - y0)` is cancelled
    /// before evaluating.
    pub fn limit(&self, y0: &Rational) -> Result<Rational> {
        let (num, zn) = self.num.strip_root(y0);
        let (den, zd) = self.den.strip_root(y0);
        if zd > zn {
            return Err(Error::Pole { at: y0.clone() });
        }
        if zn > zd {
            return Ok(Rational::zero());
        }
        Ok(num.eval(y0) / den.eval(y0))
    }

    /// `f(y) ↦ f(y^r)`.
    pub fn substitute_power(&self, r: usize) -> Self {
        if r == 1 {
            return self.clone();
        }
        // y ↦ y^r is an injective ring map, so coprimality and monicity survive
        Self {
            num: self.num.substitute_power(r),
            den: self.den.substitute_power(r),
        }
    }

    /// `f(y) ↦ f(c·y)` for nonzero `c`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        assert!(!c.is_zero());
        Self::reduce(self.num.substitute_scaled(c), self.den.substitute_scaled(c))
    }
}

/// Field operations on ℚ(y); only division can fail.
pub fn rf_arith(a: &YRationalFunction, b: &YRationalFunction, op: ArithOp) -> Result<YRationalFunction> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl From<Rational> for YRationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<YPolynomial> for YRationalFunction {
    fn from(p: YPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for YRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &YPolynomial| {
            if p.terms().count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add<&YRationalFunction> for &YRationalFunction {
    type Output = YRationalFunction;
    fn add(self, rhs: &YRationalFunction) -> YRationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return YRationalFunction::from_poly(num);
            }
            return YRationalFunction::reduce(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        YRationalFunction::reduce(num, &self.den * &rhs.den)
    }
}

impl Add for YRationalFunction {
    type Output = YRationalFunction;
    fn add(self, rhs: YRationalFunction) -> YRationalFunction {
        &self + &rhs
    }
}

impl AddAssign<&YRationalFunction> for YRationalFunction {
    fn add_assign(&mut self, rhs: &YRationalFunction) {
        *self = &*self + rhs;
    }
}

impl Neg for &YRationalFunction {
    type Output = YRationalFunction;
    fn neg(self) -> YRationalFunction {
        YRationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for YRationalFunction {
    type Output = YRationalFunction;
    fn neg(self) -> YRationalFunction {
        -&self
    }
}

impl Sub<&YRationalFunction> for &YRationalFunction {
    type Output = YRationalFunction;
    fn sub(self, rhs: &YRationalFunction) -> YRationalFunction {
        self + &(-rhs)
    }
}

impl Sub for YRationalFunction {
    type Output = YRationalFunction;
    fn sub(self, rhs: YRationalFunction) -> YRationalFunction {
        &self - &rhs
    }
}

impl Mul<&YRationalFunction> for &YRationalFunction {
    type Output = YRationalFunction;
    fn mul(self, rhs: &YRationalFunction) -> YRationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return YRationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return YRationalFunction::from_poly(&self.num * &rhs.num);
        }
        YRationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for YRationalFunction {
    type Output = YRationalFunction;
    fn mul(self, rhs: YRationalFunction) -> YRationalFunction {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalFunctionDoc {
    num: Vec<(usize, String)>,
    den: Vec<(usize, String)>,
}

fn poly_to_doc(p: &YPolynomial) -> Vec<(usize, String)> {
    p.terms().map(|(e, c)| (e, format_rational(c))).collect()
}

fn poly_from_doc(terms: &[(usize, String)]) -> Result<YPolynomial> {
    let mut parsed = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        parsed.push((*e, parse_rational(c)?));
    }
    Ok(YPolynomial::from_terms(parsed))
}

impl Serialize for YRationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFunctionDoc {
            num: poly_to_doc(&self.num),
            den: poly_to_doc(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for YRationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = RationalFunctionDoc::deserialize(deserializer)?;
        let num = poly_from_doc(&doc.num).map_err(D::Error::custom)?;
        let den = poly_from_doc(&doc.den).map_err(D::Error::custom)?;
        YRationalFunction::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> YPolynomial {
        YPolynomial::from_i64s(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> YRationalFunction {
        YRationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn arith_examples() {
        let one_minus_y = rf(&[1, -1], &[1]);
        let one_plus_y = rf(&[1, 1], &[1]);
        assert_eq!(&one_minus_y * &one_plus_y, rf(&[1, 0, -1], &[1]));
        assert_eq!(rf(&[1, 0, -1], &[1]).checked_div(&one_minus_y).unwrap(), one_plus_y);
        let sum = &rf(&[1], &[1, 1]) + &rf(&[0, 1], &[1, 1]);
        assert!(sum.is_one());
        assert!(matches!(
            one_plus_y.checked_div(&YRationalFunction::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = rf(&[2, 2], &[4, -4]);
        assert_eq!(f.denominator(), &poly(&[-1, 1]));
        assert_eq!(f.numerator(), &YPolynomial::from_coeffs(vec![rat(-1, 2), rat(-1, 2)]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(rf(&[1, -1], &[1]).evaluate(&int(0)).unwrap(), int(1));
        assert_eq!(rf(&[1, 2, 1], &[1]).evaluate(&int(-1)).unwrap(), int(0));
        assert!(matches!(rf(&[1], &[1, 1]).evaluate(&int(-1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn limit_examples() {
        // build (1 - y^2)/(1 - y) without reduction to exercise cancellation
        let raw = YRationalFunction {
            num: poly(&[1, 0, -1]),
            den: poly(&[1, -1]),
        };
        assert_eq!(raw.limit(&int(1)).unwrap(), int(2));
        assert_eq!(rf(&[1, 0, -1], &[1, -1]).limit(&int(1)).unwrap(), int(2));
        assert!(matches!(
            rf(&[1, -1], &[1, -2, 1]).limit(&int(1)),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(rf(&[1, -1], &[1]).substitute_power(3), rf(&[1, 0, 0, -1], &[1]));
        assert_eq!(rf(&[1], &[1, 1]).substitute_power(2), rf(&[1], &[1, 0, 1]));
        let f = rf(&[3, 0, 1], &[2, 5]);
        assert_eq!(f.substitute_power(1), f);
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1, -1], &[1]).to_string(), "1 - y");
        assert_eq!(rf(&[0, 0, -3], &[1]).to_string(), "-3*y^2");
        assert_eq!(rf(&[1], &[1, 1]).to_string(), "1/(1 + y)");
        assert_eq!(YRationalFunction::zero().to_string(), "0");
    }

    #[test]
    fn serde_round_trip_and_reduction() {
        let f = rf(&[1, 0, -1], &[2, 3]);
        let text = serde_json::to_string(&f).unwrap();
        let back: YRationalFunction = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let unreduced: YRationalFunction =
            serde_json::from_str(r#"{"num": [[0, "1"], [2, "-1"]], "den": [[0, "2"], [1, "-2"]]}"#).unwrap();
        assert_eq!(unreduced, rf(&[1, 1], &[2]));
        assert!(serde_json::from_str::<YRationalFunction>(r#"{"num": [[0, "1"]], "den": []}"#).is_err());
        assert!(serde_json::from_str::<YRationalFunction>(r#"{"num": [], "den": [[0, "1"]], "x": 1}"#).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("y").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = YPolynomial> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| YPolynomial::from_i64s(&c))
    }

    fn arb_rf() -> impl Strategy<Value = YRationalFunction> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| YRationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_form_is_unique(a in arb_rf(), k in arb_poly()) {
            prop_assume!(!k.is_zero());
            let expanded = YRationalFunction::new(a.numerator() * &k, a.denominator() * &k).unwrap();
            prop_assert_eq!(expanded, a);
        }

        #[test]
        fn limit_agrees_with_evaluate(a in arb_rf(), y0 in -3i64..=3) {
            let y0 = int(y0);
            if let Ok(v) = a.evaluate(&y0) {
                prop_assert_eq!(a.limit(&y0).unwrap(), v);
            }
        }

        #[test]
        fn substitution_composes(a in arb_rf(), r in 1usize..4, s in 1usize..4) {
            prop_assert_eq!(a.substitute_power(r).substitute_power(s), a.substitute_power(r * s));
        }
    }
}
