//! Builtin space models and direct characteristic-class calculators for
//! projective spaces.
//!
//! The ℙ¹ model realizes `Sym^n ℙ¹ = ℙⁿ`. Its basis element `b{a}` in module
//! `n` is the class of a linear `ℙ^a ⊂ ℙⁿ`, so the Pontrjagin product is
//! `b_a ⊙ b_b = C(a+b, a) b_{a+b}` and the diagonal `ℙ¹ → ℙ^r` (a rational
//! normal curve of degree `r`) pushes `b1` to `r·b1`.
//!
//! Classes of ℙⁿ are computed from the Euler sequence: `Tℙⁿ ⊕ 1 = (n+1)·O(1)`,
//! so a multiplicative class with power series `Q` is `Q(h)^{n+1} / Q(0)`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffs::{binomial, factorial, int, Rational, YPolynomial, YRationalFunction};
use crate::error::Result;
use crate::graded::{DegreeMap, GradedClass, GradedModuleSpec};
use crate::io;
use crate::pontrjagin::{PontTensor, SpaceModel};

/// Power series `Σ c_k α^k` truncated mod `α^{D+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedAlphaSeries {
    coeffs: Vec<YRationalFunction>,
}

impl TruncatedAlphaSeries {
    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn new(order: usize, mut coeffs: Vec<YRationalFunction>) -> Self {
        coeffs.resize(order + 1, YRationalFunction::zero());
        Self { coeffs }
    }

    pub fn from_rationals(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::new(
            order,
            coeffs
                .into_iter()
                .take(order + 1)
                .map(YRationalFunction::constant)
                .collect(),
        )
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![YRationalFunction::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &YRationalFunction {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[YRationalFunction] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.order().min(other.order());
        let mut out = vec![YRationalFunction::zero(); d + 1];
        for (i, a) in self.coeffs[..=d].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &YRationalFunction) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.order().min(other.order());
        Self {
            coeffs: (0..=d).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inv()?;
        let mut out: Vec<YRationalFunction> = vec![a0_inv.clone()];
        for n in 1..=self.order() {
            let mut acc = YRationalFunction::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(-(&acc * &a0_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// `α ↦ c·α`.
    pub fn scale_argument(&self, c: &YRationalFunction) -> Self {
        let mut power = YRationalFunction::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Self { coeffs }
    }

    /// `exp(c·α)`.
    pub fn exp_linear(order: usize, c: &YRationalFunction) -> Self {
        let unit = Self::from_rationals(
            order,
            (0..=order).map(|k| Rational::from_integer(factorial(k as u64)).recip()),
        );
        unit.scale_argument(c)
    }
}

/// `(1 - e^{-α}) / α = Σ (-1)^k α^k / (k+1)!`.
fn one_minus_exp_over_alpha(order: usize) -> TruncatedAlphaSeries {
    TruncatedAlphaSeries::from_rationals(
        order,
        (0..=order).map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), factorial(k as u64 + 1))
        }),
    )
}

/// Todd power series `α / (1 - e^{-α})`.
pub fn todd_series(order: usize) -> TruncatedAlphaSeries {
    one_minus_exp_over_alpha(order).inverse().expect("constant term is one")
}

/// `α / tanh α = cosh α · (sinh α / α)^{-1}`.
pub fn l_series_kernel(order: usize) -> TruncatedAlphaSeries {
    let even = |shift: u64| {
        TruncatedAlphaSeries::from_rationals(
            order,
            (0..=order).map(move |k| {
                if k % 2 == 0 {
                    Rational::from_integer(factorial(k as u64 + shift)).recip()
                } else {
                    Rational::zero()
                }
            }),
        )
    };
    let cosh = even(0);
    let sinh_over = even(1);
    cosh.mul(&sinh_over.inverse().expect("constant term is one"))
}

/// `Q_y(α) = α(1 + y e^{-α}) / (1 - e^{-α})`, or with `normalized` the
/// series `Q_y(α(1+y)) / (1+y)`.
pub fn q_series(order: usize, normalized: bool) -> TruncatedAlphaSeries {
    let y = YRationalFunction::y();
    let e_minus = TruncatedAlphaSeries::exp_linear(order, &YRationalFunction::from_int(-1));
    let one_plus_y_e = TruncatedAlphaSeries::one(order).add(&e_minus.scale(&y));
    let q = todd_series(order).mul(&one_plus_y_e);
    if !normalized {
        return q;
    }
    let one_plus_y = YRationalFunction::from_poly(YPolynomial::from_i64s(&[1, 1]));
    q.scale_argument(&one_plus_y)
        .scale(&one_plus_y.inv().expect("1 + y is nonzero"))
}

/// Module of ℙⁿ: `b0..bn` with `b_a` in half-degree `a`.
pub fn pn_module(n: usize) -> Arc<GradedModuleSpec> {
    Arc::new(GradedModuleSpec::from_pairs((0..=n).map(|a| (format!("b{a}"), a as u32))).expect("labels are distinct"))
}

/// Caps a cohomology polynomial `Σ c_k h^k` with `[ℙⁿ]`: `h^k ↦ b_{n-k}`.
fn cap_with_fundamental_class(n: usize, series: &TruncatedAlphaSeries) -> GradedClass {
    GradedClass::from_coeffs(pn_module(n), (0..=n).map(|k| (n - k, series.coeff(k).clone())))
        .expect("indices are in range")
}

/// `T_y*(ℙⁿ) = Q_y(h)^{n+1} / (1+y) ∩ [ℙⁿ]`, in the `T_y` convention.
pub fn hirzebruch_class_pn(n: usize) -> GradedClass {
    let q = q_series(n, false).pow(n + 1);
    let one_plus_y = YRationalFunction::from_poly(YPolynomial::from_i64s(&[1, 1]));
    cap_with_fundamental_class(n, &q.scale(&one_plus_y.inv().expect("1 + y is nonzero")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Genus {
    Todd,
    L,
    Chern,
}

/// Todd, L- or Chern class of ℙⁿ with rational coefficients.
pub fn genus_class_pn(n: usize, genus: Genus) -> GradedClass {
    let kernel = match genus {
        Genus::Todd => todd_series(n),
        Genus::L => l_series_kernel(n),
        Genus::Chern => TruncatedAlphaSeries::from_rationals(n, [int(1), int(1)]),
    };
    cap_with_fundamental_class(n, &kernel.pow(n + 1))
}

/// `y ↦ -y` on every coefficient: converts between the `T_y` and
/// `T_{(-y)}` conventions.
pub fn flip_y(c: &GradedClass) -> GradedClass {
    c.map_coeffs(|_, a| a.substitute_scaled(&int(-1)))
}

/// `T_{(-y)*}(ℙ¹) = (1 - y) b1 + (1 + y) b0`.
pub fn p1_hirzebruch_base() -> GradedClass {
    flip_y(&hirzebruch_class_pn(1))
}

/// Module of a point: one basis element `pt` in half-degree 0.
pub fn point_module() -> Arc<GradedModuleSpec> {
    Arc::new(GradedModuleSpec::from_pairs([("pt", 0)]).expect("single label"))
}

/// The point: every module is `ℚ·pt`, all tensors and diagonals are 1.
pub fn point_model(n_max: usize) -> SpaceModel {
    let module = point_module();
    let modules = vec![module.clone(); n_max + 1];
    let mut tensors = BTreeMap::new();
    for n in 0..=n_max {
        for m in 0..=n_max - n {
            tensors.insert((n, m), PontTensor::from_entries([(0, 0, 0, int(1))]));
        }
    }
    let diagonals = (1..=n_max).map(|_| DegreeMap::identity(module.clone())).collect();
    SpaceModel::new_unchecked(modules, tensors, diagonals).expect("point model is well-formed")
}

/// ℙ¹ with `Sym^n ℙ¹ = ℙⁿ`, truncated at `n_max`.
pub fn p1_model(n_max: usize) -> SpaceModel {
    let modules: Vec<_> = (0..=n_max).map(pn_module).collect();
    let mut tensors = BTreeMap::new();
    for n in 0..=n_max {
        for m in 0..=n_max - n {
            let entries = (0..=n).flat_map(|a| {
                (0..=m).map(move |b| (a, b, a + b, Rational::from_integer(binomial((a + b) as u64, a as u64))))
            });
            tensors.insert((n, m), PontTensor::from_entries(entries));
        }
    }
    let diagonals = (1..=n_max)
        .map(|r| {
            DegreeMap::new(
                modules[1].clone(),
                modules[r].clone(),
                [(0, 0, int(1)), (1, 1, int(r as i64))],
            )
            .expect("diagonal preserves degree")
        })
        .collect();
    SpaceModel::new_unchecked(modules, tensors, diagonals).expect("P1 model is well-formed")
}

/// Reads and validates a model file.
pub fn load_model(path: impl AsRef<Path>) -> Result<SpaceModel> {
    let text = read_text(path.as_ref())?;
    io::model_from_json(&text)
}

/// Reads a class file against `model`.
pub fn load_class(path: impl AsRef<Path>, model: &SpaceModel) -> Result<(usize, GradedClass)> {
    let text = read_text(path.as_ref())?;
    io::class_from_json(&text, model)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())).into())
}

/// Every structure constant of a model that can be perturbed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureConstant {
    Tensor { n: usize, m: usize, index: usize },
    Diagonal { r: usize, index: usize },
}

/// Lists the nonzero tensor and diagonal entries of `model`.
pub fn structure_constants(model: &SpaceModel) -> Vec<StructureConstant> {
    let mut out = Vec::new();
    for (&(n, m), t) in model.tensors() {
        out.extend((0..t.entries().count()).map(|index| StructureConstant::Tensor { n, m, index }));
    }
    for (idx, d) in model.diagonals().iter().enumerate() {
        out.extend((0..d.entries().count()).map(|index| StructureConstant::Diagonal { r: idx + 1, index }));
    }
    out
}

/// Adds `delta` to one structure constant, skipping all validation.
pub fn perturb(model: &SpaceModel, which: StructureConstant, delta: &Rational) -> SpaceModel {
    let mut out = model.clone();
    match which {
        StructureConstant::Tensor { n, m, index } => {
            let tensor = out.tensors_mut().get_mut(&(n, m)).expect("tensor exists");
            *tensor.entries_mut().nth(index).expect("entry exists") += delta;
        }
        StructureConstant::Diagonal { r, index } => {
            let d = &mut out.diagonals_mut()[r - 1];
            *d.entries_mut()
                .filter(|v| !v.is_zero())
                .nth(index)
                .expect("entry exists") += delta;
        }
    }
    out
}

impl std::fmt::Display for StructureConstant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureConstant::Tensor { n, m, index } => write!(f, "tensor ({n}, {m}) entry #{index}"),
            StructureConstant::Diagonal { r, index } => write!(f, "diagonal d^{r} entry #{index}"),
        }
    }
}
