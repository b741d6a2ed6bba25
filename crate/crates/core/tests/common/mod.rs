//! Seed-driven property checks shared by the property tests and the
//! acceptance harness. Each returns `Err` with a description on failure.

#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symprod_core::graded::{adams, push_forward, GradedClass};
use symprod_core::pontrjagin::{PontSeries, SpaceModel};
use symprod_core::random::{random_class, random_model_from};
use symprod_core::spaces::p1_model;

/// A random model (every fourth seed: the ℙ¹ model) with truncation ≤ `max_n`.
pub fn model_for(seed: u64, max_n: usize) -> (Arc<SpaceModel>, StdRng) {
    let mut rng = StdRng::seed_from_u64(seed);
    let n_max = rng.gen_range(1..=max_n);
    let model = if seed.is_multiple_of(4) {
        p1_model(n_max)
    } else {
        random_model_from(&mut rng, n_max)
    };
    (Arc::new(model), rng)
}

fn class_in(rng: &mut StdRng, model: &SpaceModel, n: usize) -> GradedClass {
    random_class(rng, model.module(n))
}

/// Random series with zero constant term.
pub fn random_series(rng: &mut StdRng, model: &Arc<SpaceModel>) -> PontSeries {
    let mut terms = vec![GradedClass::zero(model.module(0).clone())];
    for n in 1..=model.truncation() {
        terms.push(if rng.gen_bool(0.7) {
            class_in(rng, model, n)
        } else {
            GradedClass::zero(model.module(n).clone())
        });
    }
    PontSeries::from_terms(model.clone(), terms).expect("terms match the model")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Unit, commutativity, associativity and distributivity on random classes.
pub fn ring_axioms(seed: u64) -> Result<(), String> {
    let (model, mut rng) = model_for(seed, 4);
    let n_max = model.truncation();
    let n = rng.gen_range(0..=n_max);
    let m = rng.gen_range(0..=n_max - n);
    let k = rng.gen_range(0..=n_max - n - m);
    let (a, b, b2, c) = (
        class_in(&mut rng, &model, n),
        class_in(&mut rng, &model, m),
        class_in(&mut rng, &model, m),
        class_in(&mut rng, &model, k),
    );
    let mul = |i, x: &GradedClass, j, y: &GradedClass| model.multiply(i, x, j, y).map_err(|e| e.to_string());

    ensure(mul(0, &model.unit(), n, &a)? == a, || format!("unit law, seed {seed}"))?;
    ensure(mul(n, &a, m, &b)? == mul(m, &b, n, &a)?, || {
        format!("commutativity ({n}, {m}), seed {seed}")
    })?;
    let left = mul(n + m, &mul(n, &a, m, &b)?, k, &c)?;
    let right = mul(n, &a, m + k, &mul(m, &b, k, &c)?)?;
    ensure(left == right, || format!("associativity ({n}, {m}, {k}), seed {seed}"))?;
    let sum = b.add(&b2).map_err(|e| e.to_string())?;
    let split = mul(n, &a, m, &b)?
        .add(&mul(n, &a, m, &b2)?)
        .map_err(|e| e.to_string())?;
    ensure(mul(n, &a, m, &sum)? == split, || format!("distributivity, seed {seed}"))
}

/// `log ∘ exp = id`, `exp ∘ log = id` and `exp(a + b) = exp(a) exp(b)`.
pub fn exp_log_round_trip(seed: u64) -> Result<(), String> {
    let (model, mut rng) = model_for(seed, 4);
    let a = random_series(&mut rng, &model);
    let b = random_series(&mut rng, &model);
    let err = |e: symprod_core::Error| e.to_string();
    let ea = a.exp().map_err(err)?;
    ensure(ea.log().map_err(err)? == a, || format!("log(exp(a)) != a, seed {seed}"))?;
    let u = a.add(&PontSeries::unit(model.clone())).map_err(err)?;
    ensure(u.log().map_err(err)?.exp().map_err(err)? == u, || {
        format!("exp(log(u)) != u, seed {seed}")
    })?;
    let lhs = a.add(&b).map_err(err)?.exp().map_err(err)?;
    let rhs = ea.mul(&b.exp().map_err(err)?).map_err(err)?;
    ensure(lhs == rhs, || format!("exp(a + b) != exp(a) exp(b), seed {seed}"))
}

/// `Ψ_r ∘ Ψ_s = Ψ_{rs}` on a random class.
pub fn adams_composition(seed: u64) -> Result<(), String> {
    let (model, mut rng) = model_for(seed, 4);
    let n = rng.gen_range(0..=model.truncation());
    let c = class_in(&mut rng, &model, n);
    let (r, s) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    ensure(adams(r, &adams(s, &c)) == adams(r * s, &c), || {
        format!("Psi_{r} Psi_{s} != Psi_{}, seed {seed}", r * s)
    })
}

/// `Ψ_k ∘ d^r_* = d^r_* ∘ Ψ_k`, and `Ψ_k` is multiplicative.
pub fn adams_push_forward(seed: u64) -> Result<(), String> {
    let (model, mut rng) = model_for(seed, 4);
    let n_max = model.truncation();
    let r = rng.gen_range(1..=n_max);
    let k = rng.gen_range(1..=5);
    let c = class_in(&mut rng, &model, 1);
    let d = model.diagonal(r);
    let err = |e: symprod_core::Error| e.to_string();
    let lhs = adams(k, &push_forward(d, &c).map_err(err)?);
    let rhs = push_forward(d, &adams(k, &c)).map_err(err)?;
    ensure(lhs == rhs, || format!("Psi_{k} d^{r} != d^{r} Psi_{k}, seed {seed}"))?;

    let n = rng.gen_range(0..=n_max);
    let m = rng.gen_range(0..=n_max - n);
    let (a, b) = (class_in(&mut rng, &model, n), class_in(&mut rng, &model, m));
    let lhs = adams(k, &model.multiply(n, &a, m, &b).map_err(err)?);
    let rhs = model.multiply(n, &adams(k, &a), m, &adams(k, &b)).map_err(err)?;
    ensure(lhs == rhs, || format!("Psi_{k} not multiplicative, seed {seed}"))
}
