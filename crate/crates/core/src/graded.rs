//! Even-graded homology modules and their classes.
//!
//! Degrees are stored as half-degrees: a basis element with `half_degree = k`
//! lives in homological degree `2k`. Classes carry coefficients in ℚ(y).
//!
//! Classes handed to the series machinery are in the `T_{(-y)}` convention:
//! the Hirzebruch parameter has already been replaced by `-y`. None of the
//! operations here change convention; [`normalize`] with [`Sign::Minus`] is
//! the normalization that matches it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeffs::{int, Rational, YPolynomial, YRationalFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub half_degree: u32,
}

/// Ordered basis of one graded module, with unique labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedModuleSpec {
    basis: Vec<BasisElement>,
}

impl GradedModuleSpec {
    pub fn new(basis: Vec<BasisElement>) -> Result<Self> {
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].iter().any(|o| o.label == b.label) {
                return Err(Error::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(Self { basis })
    }

    /// Convenience constructor from `(label, half_degree)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        Self::new(
            pairs
                .into_iter()
                .map(|(label, half_degree)| BasisElement {
                    label: label.into(),
                    half_degree,
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn half_degree(&self, index: usize) -> u32 {
        self.basis[index].half_degree
    }

    pub fn label(&self, index: usize) -> &str {
        &self.basis[index].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                rank: self.rank(),
            })
        }
    }
}

pub(crate) fn same_module(a: &Arc<GradedModuleSpec>, b: &Arc<GradedModuleSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A homology class: ℚ(y)-coefficients over the basis of a module.
#[derive(Debug, Clone)]
pub struct GradedClass {
    module: Arc<GradedModuleSpec>,
    coeffs: BTreeMap<usize, YRationalFunction>,
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        same_module(&self.module, &other.module) && self.coeffs == other.coeffs
    }
}

impl Eq for GradedClass {}

impl GradedClass {
    pub fn zero(module: Arc<GradedModuleSpec>) -> Self {
        Self {
            module,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(module: Arc<GradedModuleSpec>, index: usize) -> Result<Self> {
        Self::from_coeffs(module, [(index, YRationalFunction::one())])
    }

    /// Repeated indices are summed.
    pub fn from_coeffs(
        module: Arc<GradedModuleSpec>,
        coeffs: impl IntoIterator<Item = (usize, YRationalFunction)>,
    ) -> Result<Self> {
        let mut class = Self::zero(module);
        for (i, c) in coeffs {
            class.module.check_index(i)?;
            class.add_term(i, &c);
        }
        Ok(class)
    }

    /// Coefficients given by label.
    pub fn from_labels<'a>(
        module: Arc<GradedModuleSpec>,
        coeffs: impl IntoIterator<Item = (&'a str, YRationalFunction)>,
    ) -> Result<Self> {
        let mut indexed = Vec::new();
        for (label, c) in coeffs {
            let i = module
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            indexed.push((i, c));
        }
        Self::from_coeffs(module, indexed)
    }

    pub fn module(&self) -> &Arc<GradedModuleSpec> {
        &self.module
    }

    pub fn coeff(&self, index: usize) -> YRationalFunction {
        self.coeffs.get(&index).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, index: usize) -> Option<&YRationalFunction> {
        self.coeffs.get(&index)
    }

    /// Nonzero coefficients in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &YRationalFunction)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_y_free(&self) -> bool {
        self.first_y_dependent().is_none()
    }

    pub(crate) fn first_y_dependent(&self) -> Option<usize> {
        self.iter().find(|(_, c)| c.as_constant().is_none()).map(|(i, _)| i)
    }

    /// Errors with [`Error::NotYFree`] if any coefficient involves `y`.
    pub fn require_y_free(&self) -> Result<()> {
        match self.first_y_dependent() {
            None => Ok(()),
            Some(i) => Err(Error::NotYFree {
                label: self.module.label(i).to_string(),
            }),
        }
    }

    pub(crate) fn add_term(&mut self, index: usize, c: &YRationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&index) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.coeffs.remove(&index);
                }
            }
            None => {
                self.coeffs.insert(index, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_module(&self.module, &other.module) {
            return Err(Error::ModuleMismatch);
        }
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&YRationalFunction::from_int(-1)))
    }

    pub fn scale(&self, c: &YRationalFunction) -> Self {
        self.map_coeffs(|_, a| a * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map_coeffs(|_, a| a.scale(c))
    }

    /// Applies `f(index, coeff)` to every nonzero coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &YRationalFunction) -> YRationalFunction) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, c)| (i, f(i, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self {
            module: self.module.clone(),
            coeffs,
        }
    }

    /// Like [`map_coeffs`](Self::map_coeffs), for fallible maps.
    pub fn try_map_coeffs(
        &self,
        mut f: impl FnMut(usize, &YRationalFunction) -> Result<YRationalFunction>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (&i, c) in &self.coeffs {
            let v = f(i, c)?;
            if !v.is_zero() {
                coeffs.insert(i, v);
            }
        }
        Ok(Self {
            module: self.module.clone(),
            coeffs,
        })
    }

    /// Sum of the coefficients of the half-degree-0 basis elements.
    pub fn degree_zero_part(&self) -> YRationalFunction {
        self.iter()
            .filter(|(i, _)| self.module.half_degree(*i) == 0)
            .fold(YRationalFunction::zero(), |acc, (_, c)| &acc + c)
    }

    /// Replaces the module by a structurally equal one.
    pub fn rebind(&self, module: &Arc<GradedModuleSpec>) -> Result<Self> {
        if !same_module(&self.module, module) {
            return Err(Error::ModuleMismatch);
        }
        Ok(Self {
            module: module.clone(),
            coeffs: self.coeffs.clone(),
        })
    }
}

fn rational_pow(base: u64, exp: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(base).pow(exp))
}

impl fmt::Display for GradedClass {
    /// `c0*label0 + c1*label1 + ...` over nonzero coefficients in basis order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let label = self.module.label(i);
            let text = c.to_string();
            if c.is_one() {
                f.write_str(label)?;
            } else if text.contains(' ') {
                write!(f, "({text})*{label}")?;
            } else {
                write!(f, "{text}*{label}")?;
            }
        }
        Ok(())
    }
}

/// Homological Adams operation Ψ_r: half-degree `k` is multiplied by
/// `r^{-k}` and `y ↦ y^r`.
pub fn adams(r: usize, c: &GradedClass) -> GradedClass {
    assert!(r >= 1, "Adams operations are indexed by r >= 1");
    if r == 1 {
        return c.clone();
    }
    let module = c.module.clone();
    c.map_coeffs(|i, a| {
        let k = module.half_degree(i);
        a.substitute_power(r).scale(&rational_pow(r as u64, k).recip())
    })
}

/// Degree part of Ψ_r alone: half-degree `k` is multiplied by `r^{-k}`,
/// `y` is left untouched. Agrees with [`adams`] on y-free classes.
pub fn scale_degrees(r: usize, c: &GradedClass) -> GradedClass {
    assert!(r >= 1);
    let module = c.module.clone();
    c.map_coeffs(|i, a| a.scale(&rational_pow(r as u64, module.half_degree(i)).recip()))
}

/// Selects the normalization functor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// Ψ_(1+y): half-degree `k` multiplied by `(1+y)^{-k}`.
    Plus,
    /// Ψ_(1-y): half-degree `k` multiplied by `(1-y)^{-k}`; use on classes
    /// in the `T_{(-y)}` convention.
    Minus,
}

fn normalization_factor(sign: Sign) -> YRationalFunction {
    let s = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    YRationalFunction::from_poly(YPolynomial::from_i64s(&[1, s]))
}

fn normalize_with_exponent(c: &GradedClass, sign: Sign, direction: i32) -> GradedClass {
    let factor = normalization_factor(sign);
    let module = c.module.clone();
    c.map_coeffs(|i, a| {
        let k = module.half_degree(i) as i32;
        if k == 0 {
            return a.clone();
        }
        a * &factor.pow(-direction * k).expect("1 ± y is nonzero")
    })
}

pub fn normalize(c: &GradedClass, sign: Sign) -> GradedClass {
    normalize_with_exponent(c, sign, 1)
}

/// Inverse of [`normalize`].
pub fn denormalize(c: &GradedClass, sign: Sign) -> GradedClass {
    normalize_with_exponent(c, sign, -1)
}

/// How [`specialize_y`] treats each coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializeMode {
    Evaluate,
    Limit,
}

/// Substitutes `y = y0` in every coefficient; the result is y-free.
pub fn specialize_y(c: &GradedClass, y0: &Rational, mode: SpecializeMode) -> Result<GradedClass> {
    let module = c.module.clone();
    c.try_map_coeffs(|i, a| {
        let v = match mode {
            SpecializeMode::Evaluate => a.evaluate(y0),
            SpecializeMode::Limit => a.limit(y0),
        };
        v.map(YRationalFunction::constant).map_err(|_| Error::ClassPole {
            label: module.label(i).to_string(),
            at: y0.clone(),
        })
    })
}

/// Degree-preserving linear map between graded modules, with rational
/// entries stored per source basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeMap {
    source: Arc<GradedModuleSpec>,
    target: Arc<GradedModuleSpec>,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl DegreeMap {
    /// `entries` are `(source index, target index, value)`; zero values are
    /// dropped and repeated pairs summed.
    pub fn new(
        source: Arc<GradedModuleSpec>,
        target: Arc<GradedModuleSpec>,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut map = Self::new_unchecked(source, target, entries)?;
        map.columns.iter_mut().for_each(|col| col.retain(|(_, v)| !v.is_zero()));
        map.check_degrees()?;
        Ok(map)
    }

    /// Skips the degree check; indices are still range-checked.
    pub fn new_unchecked(
        source: Arc<GradedModuleSpec>,
        target: Arc<GradedModuleSpec>,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); source.rank()];
        for (s, t, v) in entries {
            source.check_index(s)?;
            target.check_index(t)?;
            match columns[s].iter_mut().find(|(tt, _)| *tt == t) {
                Some((_, existing)) => *existing += v,
                None => columns[s].push((t, v)),
            }
        }
        columns.iter_mut().for_each(|col| col.sort_by_key(|(t, _)| *t));
        Ok(Self {
            source,
            target,
            columns,
        })
    }

    pub fn identity(module: Arc<GradedModuleSpec>) -> Self {
        let columns = (0..module.rank()).map(|i| vec![(i, Rational::one())]).collect();
        Self {
            source: module.clone(),
            target: module,
            columns,
        }
    }

    pub fn zero(source: Arc<GradedModuleSpec>, target: Arc<GradedModuleSpec>) -> Self {
        let columns = vec![Vec::new(); source.rank()];
        Self {
            source,
            target,
            columns,
        }
    }

    pub fn check_degrees(&self) -> Result<()> {
        for (s, col) in self.columns.iter().enumerate() {
            for (t, v) in col {
                let (ds, dt) = (self.source.half_degree(s), self.target.half_degree(*t));
                if !v.is_zero() && ds != dt {
                    return Err(Error::DegreeMismatch {
                        src: s,
                        dst: *t,
                        src_degree: ds,
                        dst_degree: dt,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        same_module(&self.source, &self.target)
            && self.columns.iter().enumerate().all(|(s, col)| {
                let nonzero: Vec<_> = col.iter().filter(|(_, v)| !v.is_zero()).collect();
                nonzero.len() == 1 && nonzero[0].0 == s && nonzero[0].1.is_one()
            })
    }

    pub fn source(&self) -> &Arc<GradedModuleSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedModuleSpec> {
        &self.target
    }

    /// Nonzero `(source, target, value)` entries in source order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(s, col)| col.iter().map(move |(t, v)| (s, *t, v)))
            .filter(|(_, _, v)| !v.is_zero())
    }

    pub(crate) fn entries_mut(&mut self) -> impl Iterator<Item = &mut Rational> {
        self.columns.iter_mut().flatten().map(|(_, v)| v)
    }
}

/// Push-forward along a degree map; ℚ(y)-linear.
pub fn push_forward(m: &DegreeMap, c: &GradedClass) -> Result<GradedClass> {
    if !same_module(&m.source, &c.module) {
        return Err(Error::ModuleMismatch);
    }
    let mut out = GradedClass::zero(m.target.clone());
    for (s, a) in c.iter() {
        for (t, v) in &m.columns[s] {
            out.add_term(*t, &a.scale(v));
        }
    }
    Ok(out)
}

/// Integer-valued class shorthand used by tests and builtin data.
pub fn class_from_ints(module: Arc<GradedModuleSpec>, coeffs: &[(usize, i64)]) -> Result<GradedClass> {
    GradedClass::from_coeffs(
        module,
        coeffs.iter().map(|&(i, c)| (i, YRationalFunction::constant(int(c)))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use proptest::prelude::*;

    fn p1_module() -> Arc<GradedModuleSpec> {
        Arc::new(GradedModuleSpec::from_pairs([("b0", 0), ("b1", 1)]).unwrap())
    }

    fn poly(c: &[i64]) -> YRationalFunction {
        YRationalFunction::from_poly(YPolynomial::from_i64s(c))
    }

    /// T_y*(P^1) = (1+y) b1 + (1-y) b0.
    fn hirzebruch_p1(module: &Arc<GradedModuleSpec>) -> GradedClass {
        GradedClass::from_coeffs(module.clone(), [(1, poly(&[1, 1])), (0, poly(&[1, -1]))]).unwrap()
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            GradedModuleSpec::from_pairs([("a", 0), ("a", 1)]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn adams_examples() {
        let m = p1_module();
        let c = hirzebruch_p1(&m);
        assert_eq!(adams(1, &c), c);

        let y_beta1 = GradedClass::from_coeffs(m.clone(), [(1, poly(&[0, 1]))]).unwrap();
        let expected = GradedClass::from_coeffs(
            m.clone(),
            [(1, YRationalFunction::from_poly(YPolynomial::monomial(rat(1, 2), 2)))],
        )
        .unwrap();
        assert_eq!(adams(2, &y_beta1), expected);

        let deg0 = GradedClass::from_coeffs(m.clone(), [(0, poly(&[1, -1]))]).unwrap();
        let expected = GradedClass::from_coeffs(m, [(0, poly(&[1, 0, 0, -1]))]).unwrap();
        assert_eq!(adams(3, &deg0), expected);
    }

    #[test]
    fn normalize_examples() {
        let m = p1_module();
        let c = hirzebruch_p1(&m);
        let expected =
            GradedClass::from_coeffs(m.clone(), [(1, YRationalFunction::one()), (0, poly(&[1, -1]))]).unwrap();
        assert_eq!(normalize(&c, Sign::Plus), expected);

        let deg0 = GradedClass::from_coeffs(m.clone(), [(0, poly(&[2, 5]))]).unwrap();
        assert_eq!(normalize(&deg0, Sign::Plus), deg0);

        for sign in [Sign::Plus, Sign::Minus] {
            assert_eq!(denormalize(&normalize(&c, sign), sign), c);
        }
    }

    #[test]
    fn push_forward_examples() {
        let m = p1_module();
        let c = hirzebruch_p1(&m);
        assert!(push_forward(&DegreeMap::zero(m.clone(), m.clone()), &c)
            .unwrap()
            .is_zero());
        assert_eq!(push_forward(&DegreeMap::identity(m.clone()), &c).unwrap(), c);

        let d2 = DegreeMap::new(m.clone(), m.clone(), [(0, 0, int(1)), (1, 1, int(2))]).unwrap();
        let expected = GradedClass::from_coeffs(m.clone(), [(1, poly(&[2, 2])), (0, poly(&[1, -1]))]).unwrap();
        assert_eq!(push_forward(&d2, &c).unwrap(), expected);

        let other = Arc::new(GradedModuleSpec::from_pairs([("pt", 0)]).unwrap());
        assert!(matches!(
            push_forward(&DegreeMap::identity(other), &c),
            Err(Error::ModuleMismatch)
        ));
    }

    #[test]
    fn degree_map_rejects_degree_change() {
        let m = p1_module();
        assert!(matches!(
            DegreeMap::new(m.clone(), m, [(0, 1, int(1))]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn specialize_examples() {
        let m = p1_module();
        let c = hirzebruch_p1(&m);
        let todd = specialize_y(&c, &int(0), SpecializeMode::Evaluate).unwrap();
        assert_eq!(todd, class_from_ints(m.clone(), &[(1, 1), (0, 1)]).unwrap());

        let chern = specialize_y(&normalize(&c, Sign::Plus), &int(-1), SpecializeMode::Evaluate).unwrap();
        assert_eq!(chern, class_from_ints(m.clone(), &[(1, 1), (0, 2)]).unwrap());

        let pole =
            GradedClass::from_coeffs(m, [(1, YRationalFunction::one().checked_div(&poly(&[-1, 1])).unwrap())]).unwrap();
        match specialize_y(&pole, &int(1), SpecializeMode::Limit) {
            Err(Error::ClassPole { label, .. }) => assert_eq!(label, "b1"),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    fn arb_class() -> impl Strategy<Value = GradedClass> {
        let m = Arc::new(GradedModuleSpec::from_pairs([("a", 0), ("b", 1), ("c", 1), ("d", 3)]).unwrap());
        prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), 4).prop_map(move |cs| {
            GradedClass::from_coeffs(m.clone(), cs.iter().enumerate().map(|(i, c)| (i, poly(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn adams_composes(c in arb_class(), r in 1usize..5, s in 1usize..5) {
            prop_assert_eq!(adams(r, &adams(s, &c)), adams(r * s, &c));
        }

        #[test]
        fn adams_commutes_with_push_forward(c in arb_class(), r in 1usize..5, w in prop::collection::vec(-2i64..=2, 4)) {
            let m = c.module().clone();
            // b,c share half-degree 1: mix them; scale a and d
            let map = DegreeMap::new(m.clone(), m.clone(), [
                (0, 0, int(w[0])), (1, 1, int(w[1])), (1, 2, int(w[2])), (2, 1, int(1)), (3, 3, int(w[3])),
            ]).unwrap();
            prop_assert_eq!(
                adams(r, &push_forward(&map, &c).unwrap()),
                push_forward(&map, &adams(r, &c)).unwrap()
            );
        }

        #[test]
        fn specialization_folds_into_adams(c in arb_class(), r in 1usize..4, y0 in -2i64..=2) {
            let y0 = int(y0);
            let y0r = num_traits::pow(y0.clone(), r);
            let lhs = specialize_y(&adams(r, &c), &y0, SpecializeMode::Evaluate).unwrap();
            let rhs = scale_degrees(r, &specialize_y(&c, &y0r, SpecializeMode::Evaluate).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
