//! Pontrjagin rings of symmetric products, modeled by explicit structure
//! tensors, and the generating series of classes of symmetric powers.
//!
//! A [`SpaceModel`] fixes a truncation `N` and, for every `n ≤ N`, a graded
//! module standing for the even Borel–Moore homology of the `n`-th symmetric
//! product. The product `⊙` of degree-`n` and degree-`m` classes is given by
//! a bilinear tensor into degree `n + m`, and the diagonal push-forwards
//! `d^r` map degree 1 into degree `r`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffs::{factorial, int, Rational, YRationalFunction};
use crate::error::{Error, Result};
use crate::graded::{adams, push_forward, same_module, DegreeMap, GradedClass, GradedModuleSpec};

/// Structure constants of `⊙` on `modules[n] × modules[m] → modules[n+m]`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PontTensor {
    entries: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl PontTensor {
    /// Builds from `(i, j, k, value)` entries; repeated triples are summed.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Self {
        let mut tensor = Self::default();
        for (i, j, k, v) in entries {
            let row = tensor.entries.entry((i, j)).or_default();
            match row.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, existing)) => *existing += v,
                None => row.push((k, v)),
            }
        }
        for row in tensor.entries.values_mut() {
            row.retain(|(_, v)| !v.is_zero());
            row.sort_by_key(|(k, _)| *k);
        }
        tensor.entries.retain(|_, row| !row.is_empty());
        tensor
    }

    /// `e_i ⊙ e_j` as `(k, value)` pairs.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.entries.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All nonzero `(i, j, k, value)` entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.entries
            .iter()
            .flat_map(|(&(i, j), row)| row.iter().map(move |(k, v)| (i, j, *k, v)))
    }

    pub(crate) fn entries_mut(&mut self) -> impl Iterator<Item = &mut Rational> {
        self.entries.values_mut().flatten().map(|(_, v)| v)
    }
}

/// Truncated family of homology modules of symmetric products with their
/// Pontrjagin tensors and diagonal push-forwards.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceModel {
    modules: Vec<Arc<GradedModuleSpec>>,
    tensors: BTreeMap<(usize, usize), PontTensor>,
    diagonals: Vec<DegreeMap>,
}

type SparseVec = BTreeMap<usize, Rational>;

fn add_into(out: &mut SparseVec, k: usize, v: Rational) {
    let slot = out.entry(k).or_insert_with(Rational::zero);
    *slot += v;
    if slot.is_zero() {
        out.remove(&k);
    }
}

fn unit_vec(i: usize) -> SparseVec {
    BTreeMap::from([(i, Rational::one())])
}

fn fmt_vec(module: &GradedModuleSpec, v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(k, c)| format!("{c}*{}", module.label(*k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl SpaceModel {
    /// Builds and validates a model. `modules` covers `n = 0..=N`; missing
    /// tensors are zero; `diagonals[r - 1]` is `d^r` for `r = 1..=N`.
    pub fn new(
        modules: Vec<Arc<GradedModuleSpec>>,
        tensors: BTreeMap<(usize, usize), PontTensor>,
        diagonals: Vec<DegreeMap>,
    ) -> Result<Self> {
        let model = Self::new_unchecked(modules, tensors, diagonals)?;
        model.validate()?;
        Ok(model)
    }

    /// Builds without checking the algebraic invariants. Shapes are still
    /// checked, since every operation relies on them.
    pub fn new_unchecked(
        modules: Vec<Arc<GradedModuleSpec>>,
        tensors: BTreeMap<(usize, usize), PontTensor>,
        diagonals: Vec<DegreeMap>,
    ) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::invariant("shape", "a model needs at least the n = 0 module"));
        }
        let n_max = modules.len() - 1;
        for (&(n, m), tensor) in &tensors {
            if n + m > n_max {
                return Err(Error::invariant(
                    "shape",
                    format!("tensor ({n}, {m}) exceeds truncation {n_max}"),
                ));
            }
            for (i, j, k, _) in tensor.entries() {
                modules[n].check_index(i)?;
                modules[m].check_index(j)?;
                modules[n + m].check_index(k)?;
            }
        }
        if diagonals.len() != n_max {
            return Err(Error::invariant(
                "shape",
                format!("expected {n_max} diagonal maps, found {}", diagonals.len()),
            ));
        }
        for (idx, d) in diagonals.iter().enumerate() {
            let r = idx + 1;
            if !same_module(d.source(), &modules[1]) || !same_module(d.target(), &modules[r]) {
                return Err(Error::invariant(
                    "shape",
                    format!("diagonal d^{r} must map module 1 to module {r}"),
                ));
            }
        }
        Ok(Self {
            modules,
            tensors,
            diagonals,
        })
    }

    /// Checks unit, degree, commutativity, associativity and diagonal
    /// invariants, reporting the first violation with its indices.
    pub fn validate(&self) -> Result<()> {
        let n_max = self.truncation();
        let unit_module = &self.modules[0];
        if unit_module.rank() != 1 || unit_module.half_degree(0) != 0 {
            return Err(Error::invariant(
                "unit module",
                "module 0 must be rank one in half-degree 0",
            ));
        }
        for (&(n, m), tensor) in &self.tensors {
            for (i, j, k, _) in tensor.entries() {
                let (di, dj, dk) = (
                    self.modules[n].half_degree(i),
                    self.modules[m].half_degree(j),
                    self.modules[n + m].half_degree(k),
                );
                if di + dj != dk {
                    return Err(Error::invariant(
                        "degree preservation",
                        format!("tensor ({n}, {m}) entry ({i}, {j}) -> {k} has half-degrees {di} + {dj} != {dk}"),
                    ));
                }
            }
        }
        for m in 0..=n_max {
            for j in 0..self.modules[m].rank() {
                let expected = unit_vec(j);
                if self.basis_product(0, 0, m, j) != expected {
                    return Err(Error::invariant(
                        "unit law",
                        format!("1 ⊙ e_{j} != e_{j} in module {m}"),
                    ));
                }
                if self.basis_product(m, j, 0, 0) != expected {
                    return Err(Error::invariant(
                        "unit law",
                        format!("e_{j} ⊙ 1 != e_{j} in module {m}"),
                    ));
                }
            }
        }
        for n in 1..=n_max {
            for m in 1..=n_max - n {
                for i in 0..self.modules[n].rank() {
                    for j in 0..self.modules[m].rank() {
                        if self.basis_product(n, i, m, j) != self.basis_product(m, j, n, i) {
                            return Err(Error::invariant(
                                "commutativity",
                                format!("(n, m, i, j) = ({n}, {m}, {i}, {j})"),
                            ));
                        }
                    }
                }
            }
        }
        for n in 1..=n_max {
            for m in 1..=n_max - n {
                for l in 1..=n_max - n - m {
                    for i in 0..self.modules[n].rank() {
                        for j in 0..self.modules[m].rank() {
                            let ij = self.basis_product(n, i, m, j);
                            for k in 0..self.modules[l].rank() {
                                let left = self.vec_product(n + m, &ij, l, &unit_vec(k));
                                let jk = self.basis_product(m, j, l, k);
                                let right = self.vec_product(n, &unit_vec(i), m + l, &jk);
                                if left != right {
                                    return Err(Error::invariant(
                                        "associativity",
                                        format!(
                                            "(n, m, l) = ({n}, {m}, {l}), basis ({i}, {j}, {k}): {} != {}",
                                            fmt_vec(&self.modules[n + m + l], &left),
                                            fmt_vec(&self.modules[n + m + l], &right)
                                        ),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        for (idx, d) in self.diagonals.iter().enumerate() {
            let r = idx + 1;
            d.check_degrees().map_err(|e| match e {
                Error::DegreeMismatch {
                    src,
                    dst,
                    src_degree,
                    dst_degree,
                } => Error::invariant(
                    "degree preservation",
                    format!("diagonal d^{r} entry {src} -> {dst} has half-degrees {src_degree} != {dst_degree}"),
                ),
                other => other,
            })?;
        }
        if let Some(d1) = self.diagonals.first() {
            if !d1.is_identity() {
                return Err(Error::invariant("diagonal d^1", "d^1 must be the identity map"));
            }
        }
        Ok(())
    }

    pub fn truncation(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, n: usize) -> &Arc<GradedModuleSpec> {
        &self.modules[n]
    }

    pub fn modules(&self) -> &[Arc<GradedModuleSpec>] {
        &self.modules
    }

    pub fn tensor(&self, n: usize, m: usize) -> Option<&PontTensor> {
        self.tensors.get(&(n, m))
    }

    pub fn tensors(&self) -> &BTreeMap<(usize, usize), PontTensor> {
        &self.tensors
    }

    /// `d^r` for `1 ≤ r ≤ N`.
    pub fn diagonal(&self, r: usize) -> &DegreeMap {
        &self.diagonals[r - 1]
    }

    pub fn diagonals(&self) -> &[DegreeMap] {
        &self.diagonals
    }

    pub(crate) fn tensors_mut(&mut self) -> &mut BTreeMap<(usize, usize), PontTensor> {
        &mut self.tensors
    }

    pub(crate) fn diagonals_mut(&mut self) -> &mut [DegreeMap] {
        &mut self.diagonals
    }

    /// The unit `1 ∈ modules[0]`.
    pub fn unit(&self) -> GradedClass {
        GradedClass::basis_element(self.modules[0].clone(), 0).expect("module 0 has rank one")
    }

    fn basis_product(&self, n: usize, i: usize, m: usize, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        if let Some(t) = self.tensors.get(&(n, m)) {
            for (k, v) in t.product(i, j) {
                add_into(&mut out, *k, v.clone());
            }
        }
        out
    }

    fn vec_product(&self, n: usize, a: &SparseVec, m: usize, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        let Some(t) = self.tensors.get(&(n, m)) else {
            return out;
        };
        for (i, x) in a {
            for (j, y) in b {
                for (k, v) in t.product(*i, *j) {
                    add_into(&mut out, *k, x * y * v);
                }
            }
        }
        out
    }

    /// `a ⊙ b` for `a ∈ modules[n]`, `b ∈ modules[m]`, `n + m ≤ N`.
    pub fn multiply(&self, n: usize, a: &GradedClass, m: usize, b: &GradedClass) -> Result<GradedClass> {
        if n + m > self.truncation() {
            return Err(Error::InvalidInput(format!(
                "product of degrees {n} and {m} exceeds truncation {}",
                self.truncation()
            )));
        }
        if !same_module(a.module(), &self.modules[n]) || !same_module(b.module(), &self.modules[m]) {
            return Err(Error::ModuleMismatch);
        }
        let mut out = GradedClass::zero(self.modules[n + m].clone());
        let Some(t) = self.tensors.get(&(n, m)) else {
            return Ok(out);
        };
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let row = t.product(i, j);
                if row.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, v) in row {
                    out.add_term(*k, &xy.scale(v));
                }
            }
        }
        Ok(out)
    }

    /// The point class of `modules[n]`: the n-th power of the first
    /// half-degree-0 basis element of `modules[1]` (the unit for `n = 0`).
    /// Assumes the space of the model is connected.
    pub fn point_class(&self, n: usize) -> Result<GradedClass> {
        if n == 0 {
            return Ok(self.unit());
        }
        let m1 = &self.modules[1];
        let idx = (0..m1.rank())
            .find(|&i| m1.half_degree(i) == 0)
            .ok_or_else(|| Error::InvalidInput("module 1 has no half-degree-0 basis element".into()))?;
        let p1 = GradedClass::basis_element(m1.clone(), idx)?;
        let mut acc = p1.clone();
        for k in 1..n {
            acc = self.multiply(k, &acc, 1, &p1)?;
        }
        Ok(acc)
    }

    /// Checks that `base` lives in `modules[1]` and rebinds it to it.
    pub(crate) fn level_one_class(&self, base: &GradedClass) -> Result<GradedClass> {
        if self.truncation() == 0 {
            return Ok(base.clone());
        }
        base.rebind(&self.modules[1])
    }
}

fn same_model(a: &Arc<SpaceModel>, b: &Arc<SpaceModel>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Truncated series `Σ_{n ≤ N} a_n t^n` in the Pontrjagin ring of a model.
#[derive(Debug, Clone)]
pub struct PontSeries {
    model: Arc<SpaceModel>,
    terms: Vec<GradedClass>,
}

impl PartialEq for PontSeries {
    fn eq(&self, other: &Self) -> bool {
        same_model(&self.model, &other.model) && self.terms == other.terms
    }
}

impl PontSeries {
    pub fn zero(model: Arc<SpaceModel>) -> Self {
        let terms = model.modules.iter().map(|m| GradedClass::zero(m.clone())).collect();
        Self { model, terms }
    }

    pub fn unit(model: Arc<SpaceModel>) -> Self {
        let mut s = Self::zero(model);
        s.terms[0] = s.model.unit();
        s
    }

    /// `terms[n]` must belong to `modules[n]`; missing trailing terms are zero.
    pub fn from_terms(model: Arc<SpaceModel>, terms: Vec<GradedClass>) -> Result<Self> {
        if terms.len() > model.modules.len() {
            return Err(Error::InvalidInput(format!(
                "{} terms for truncation {}",
                terms.len(),
                model.truncation()
            )));
        }
        let mut s = Self::zero(model);
        for (n, t) in terms.into_iter().enumerate() {
            s.terms[n] = t.rebind(&s.model.modules[n])?;
        }
        Ok(s)
    }

    /// The series `c · t^n`.
    pub fn monomial(model: Arc<SpaceModel>, n: usize, c: GradedClass) -> Result<Self> {
        let mut s = Self::zero(model);
        if n > s.truncation() {
            return Err(Error::InvalidInput(format!("degree {n} exceeds truncation")));
        }
        s.terms[n] = c.rebind(&s.model.modules[n])?;
        Ok(s)
    }

    pub fn model(&self) -> &Arc<SpaceModel> {
        &self.model
    }

    pub fn truncation(&self) -> usize {
        self.model.truncation()
    }

    pub fn term(&self, n: usize) -> &GradedClass {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[GradedClass] {
        &self.terms
    }

    fn check_model(&self, other: &Self) -> Result<()> {
        if same_model(&self.model, &other.model) {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        let terms = self
            .terms
            .iter()
            .zip(&other.terms)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Self {
            model: self.model.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_rational(&int(-1)))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map_terms(|_, t| t.scale_rational(c))
    }

    /// Applies `f(n, a_n)` to every term; `f` must stay in `modules[n]`.
    pub fn map_terms(&self, mut f: impl FnMut(usize, &GradedClass) -> GradedClass) -> Self {
        Self {
            model: self.model.clone(),
            terms: self.terms.iter().enumerate().map(|(n, t)| f(n, t)).collect(),
        }
    }

    pub fn try_map_terms(&self, mut f: impl FnMut(usize, &GradedClass) -> Result<GradedClass>) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (n, t) in self.terms.iter().enumerate() {
            terms.push(f(n, t)?.rebind(&self.model.modules[n])?);
        }
        Ok(Self {
            model: self.model.clone(),
            terms,
        })
    }

    /// Cauchy product `c_n = Σ_{i+j=n} a_i ⊙ b_j`, truncated at `N`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        let n_max = self.truncation();
        let mut out = Self::zero(self.model.clone());
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.terms[..=n_max - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = self.model.multiply(i, a, j, b)?;
                out.terms[i + j] = out.terms[i + j].add(&prod)?;
            }
        }
        Ok(out)
    }

    /// `Σ_k a^{⊙k} / k!` for `a_0 = 0`.
    ///
    /// Powers are formed by splitting, `a^k = a^{⌈k/2⌉} ⊙ a^{⌊k/2⌋}`, so
    /// higher powers multiply classes of large half-degree with each other.
    pub fn exp(&self) -> Result<Self> {
        if !self.terms[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n_max = self.truncation();
        let mut powers: Vec<Self> = Vec::with_capacity(n_max + 1);
        powers.push(Self::unit(self.model.clone()));
        if n_max >= 1 {
            powers.push(self.clone());
        }
        for k in 2..=n_max {
            let next = powers[k - k / 2].mul(&powers[k / 2])?;
            powers.push(next);
        }
        let mut out = Self::zero(self.model.clone());
        for (k, p) in powers.iter().enumerate() {
            let inv = Rational::from_integer(factorial(k as u64)).recip();
            out = out.add(&p.scale_rational(&inv))?;
        }
        Ok(out)
    }

    /// `log(u) = Σ_{k≥1} (-1)^{k+1} (u - 1)^k / k` for `u_0 = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.terms[0] != self.model.unit() {
            return Err(Error::NonUnitConstantTerm);
        }
        let v = self.sub(&Self::unit(self.model.clone()))?;
        let mut out = Self::zero(self.model.clone());
        let mut power = v.clone();
        for k in 1..=self.truncation() {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rational(&Rational::new(BigInt::from(sign), BigInt::from(k))))?;
            power = power.mul(&v)?;
        }
        Ok(out)
    }
}

pub fn pont_mul(a: &PontSeries, b: &PontSeries) -> Result<PontSeries> {
    a.mul(b)
}

pub fn pont_exp(a: &PontSeries) -> Result<PontSeries> {
    a.exp()
}

pub fn pont_log(u: &PontSeries) -> Result<PontSeries> {
    u.log()
}

/// `exp(Σ_r class(r) · t^r / r)`, with `class(r) ∈ modules[r]`.
pub(crate) fn exp_of_power_sums(
    model: &Arc<SpaceModel>,
    mut class: impl FnMut(usize) -> Result<Option<GradedClass>>,
) -> Result<PontSeries> {
    let mut inner = PontSeries::zero(model.clone());
    for r in 1..=model.truncation() {
        if let Some(c) = class(r)? {
            inner.terms[r] = c
                .scale_rational(&Rational::new(BigInt::one(), BigInt::from(r)))
                .rebind(&model.modules[r])?;
        }
    }
    inner.exp()
}

/// `Σ_n T(M^(n)) t^n = exp(Σ_r Ψ_r(d^r_* base) t^r / r)` for a base class
/// in the `T_{(-y)}` convention on the degree-1 space.
pub fn symmetric_class_series(model: &Arc<SpaceModel>, base: &GradedClass) -> Result<PontSeries> {
    let base = model.level_one_class(base)?;
    exp_of_power_sums(model, |r| Ok(Some(adams(r, &push_forward(model.diagonal(r), &base)?))))
}

/// Cycle type of a permutation in Σ_n: `multiplicities[r - 1]` is the
/// number of `r`-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub n: usize,
    pub multiplicities: Vec<usize>,
}

impl CycleType {
    /// Number of cycles of length `r`.
    pub fn k(&self, r: usize) -> usize {
        self.multiplicities.get(r - 1).copied().unwrap_or(0)
    }

    /// `N_Π / n! = 1 / Π_r (k_r! r^{k_r})`.
    pub fn weight(&self) -> Rational {
        let denom = self
            .multiplicities
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (idx, &k)| {
                acc * factorial(k as u64) * BigInt::from(idx + 1).pow(k as u32)
            });
        Rational::new(BigInt::one(), denom)
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        let w = self.weight();
        (Rational::from_integer(factorial(self.n as u64)) * w).to_integer()
    }
}

/// All cycle types of Σ_n with their class sizes, in descending
/// lexicographic order of `(k_1, …, k_n)`.
pub fn enumerate_cycle_types(n: usize) -> Vec<(CycleType, BigInt)> {
    fn rec(r: usize, n: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if r > n {
            if remaining == 0 {
                out.push(CycleType {
                    n,
                    multiplicities: current.clone(),
                });
            }
            return;
        }
        for k in (0..=remaining / r).rev() {
            current.push(k);
            rec(r + 1, n, remaining - k * r, current, out);
            current.pop();
        }
    }
    let mut types = Vec::new();
    rec(1, n, n, &mut Vec::with_capacity(n), &mut types);
    types
        .into_iter()
        .map(|t| {
            let size = t.class_size();
            (t, size)
        })
        .collect()
}

/// Independent evaluation of the symmetric-power series as a sum over
/// cycle types: `a_n = Σ_{Π ⊢ n} (N_Π / n!) Π_r (d^r_* Ψ_r base)^{⊙ k_r}`.
pub fn partition_sum_series(model: &Arc<SpaceModel>, base: &GradedClass) -> Result<PontSeries> {
    let base = model.level_one_class(base)?;
    let n_max = model.truncation();
    let mut series = PontSeries::unit(model.clone());
    if n_max == 0 {
        return Ok(series);
    }
    let per_cycle: Vec<GradedClass> = (1..=n_max)
        .map(|r| push_forward(model.diagonal(r), &adams(r, &base)))
        .collect::<Result<_>>()?;

    // (r, k) -> (d^r Ψ_r base)^{⊙k} in modules[r k]
    let mut powers: HashMap<(usize, usize), GradedClass> = HashMap::new();
    let mut power = |r: usize, k: usize| -> Result<GradedClass> {
        if let Some(p) = powers.get(&(r, k)) {
            return Ok(p.clone());
        }
        let mut acc = per_cycle[r - 1].clone();
        for j in 1..k {
            acc = model.multiply(j * r, &acc, r, &per_cycle[r - 1])?;
        }
        powers.insert((r, k), acc.clone());
        Ok(acc)
    };

    for n in 1..=n_max {
        let mut total = GradedClass::zero(model.module(n).clone());
        for (cycle_type, _) in enumerate_cycle_types(n) {
            let mut acc = model.unit();
            let mut degree = 0;
            for (idx, &k) in cycle_type.multiplicities.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let r = idx + 1;
                let p = power(r, k)?;
                acc = model.multiply(degree, &acc, r * k, &p)?;
                degree += r * k;
            }
            total = total.add(&acc.scale_rational(&cycle_type.weight()))?;
        }
        series.terms[n] = total;
    }
    Ok(series)
}

/// Coefficient-wise `y`-free check on a series.
pub fn series_is_y_free(s: &PontSeries) -> bool {
    s.terms().iter().all(GradedClass::is_y_free)
}

/// Scalar multiple of a unit-valued coefficient, for tests and builders.
pub fn scalar_class(module: &Arc<GradedModuleSpec>, index: usize, c: YRationalFunction) -> Result<GradedClass> {
    GradedClass::from_coeffs(module.clone(), [(index, c)])
}
