//! Seeded random abstract models and classes for oracle suites.
//!
//! A model is a divided-power monomial algebra on weight-1 generators `p`
//! (half-degree 0) and `x`, optionally a weight-2 generator `w`, truncated
//! above a half-degree bound, then disguised by a random invertible change
//! of basis inside every (weight, half-degree) block. The point `p` stays
//! the first basis element of module 1 and `d^r_*` sends it to `p^r`, as
//! for any connected space.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coeffs::{binomial, factorial, int, rat, Rational, YPolynomial, YRationalFunction};
use crate::graded::{DegreeMap, GradedClass, GradedModuleSpec};
use crate::pontrjagin::{PontTensor, SpaceModel};

/// Largest rank of any module of a random model.
pub const MAX_RANK: usize = 3;
/// Largest half-degree of any basis element of a random model.
pub const MAX_HALF_DEGREE: u32 = 3;

#[derive(Debug, Clone, Copy)]
struct Generator {
    weight: usize,
    half_degree: u32,
}

type Monomial = Vec<usize>;

fn monomials(gens: &[Generator], n: usize, bound: u32) -> Vec<Monomial> {
    fn go(gens: &[Generator], n: usize, bound: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        let Some((g, rest)) = gens.split_first() else {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        };
        for e in 0..=n / g.weight {
            let h = g.half_degree * e as u32;
            if h > bound {
                break;
            }
            prefix.push(e);
            go(rest, n - e * g.weight, bound - h, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, n, bound, &mut Vec::new(), &mut out);
    out
}

fn half_degree(gens: &[Generator], m: &Monomial) -> u32 {
    gens.iter().zip(m).map(|(g, &e)| g.half_degree * e as u32).sum()
}

/// Generators and bound, redrawn until every module has rank ≤ [`MAX_RANK`].
fn draw_shape(rng: &mut StdRng, n_max: usize) -> (Vec<Generator>, u32) {
    for _ in 0..64 {
        let mut gens = vec![
            Generator {
                weight: 1,
                half_degree: 0,
            },
            Generator {
                weight: 1,
                half_degree: rng.gen_range(1..=MAX_HALF_DEGREE),
            },
        ];
        if rng.gen_bool(0.5) {
            gens.push(Generator {
                weight: 2,
                half_degree: rng.gen_range(1..=MAX_HALF_DEGREE),
            });
        }
        let bound = rng.gen_range(1..=MAX_HALF_DEGREE);
        if (0..=n_max).all(|n| monomials(&gens, n, bound).len() <= MAX_RANK) {
            return (gens, bound);
        }
    }
    (
        vec![
            Generator {
                weight: 1,
                half_degree: 0,
            },
            Generator {
                weight: 1,
                half_degree: 1,
            },
        ],
        2,
    )
}

fn small_nonzero(rng: &mut StdRng) -> Rational {
    let choices = [rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2), rat(-1, 3)];
    choices[rng.gen_range(0..choices.len())].clone()
}

fn small_int(rng: &mut StdRng, max: i64) -> Rational {
    int(rng.gen_range(-max..=max))
}

/// Block-diagonal `G = U·D` over the half-degree blocks of `degrees`;
/// row `i` expresses the new basis element `i` in the monomial basis.
fn random_change_of_basis(rng: &mut StdRng, degrees: &[u32], keep_first: bool) -> Vec<Vec<Rational>> {
    let r = degrees.len();
    let mut g = vec![vec![Rational::zero(); r]; r];
    for i in 0..r {
        let d = if keep_first && i == 0 {
            Rational::one()
        } else {
            small_nonzero(rng)
        };
        for j in i..r {
            if degrees[j] != degrees[i] {
                continue;
            }
            g[i][j] = if i == j { d.clone() } else { small_int(rng, 2) * &d };
        }
    }
    g
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let r = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..r).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r).find(|&i| !a[i][col].is_zero()).expect("matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        a[col].iter_mut().for_each(|v| *v /= &p);
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[col].clone();
                a[i].iter_mut().zip(&pivot_row).for_each(|(v, p)| *v -= &f * p);
            }
        }
    }
    a.into_iter().map(|row| row[r..].to_vec()).collect()
}

/// A validated random model with truncation `n_max`, determined by `seed`.
pub fn random_model(seed: u64, n_max: usize) -> SpaceModel {
    random_model_from(&mut StdRng::seed_from_u64(seed), n_max)
}

#[allow(clippy::needless_range_loop)]
pub fn random_model_from(rng: &mut StdRng, n_max: usize) -> SpaceModel {
    let (gens, bound) = draw_shape(rng, n_max);
    let mut mons: Vec<Vec<Monomial>> = Vec::with_capacity(n_max + 1);
    let mut modules = Vec::with_capacity(n_max + 1);
    let mut change = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut ms = monomials(&gens, n, bound);
        ms.sort_by_key(|m| half_degree(&gens, m));
        let degrees: Vec<u32> = ms.iter().map(|m| half_degree(&gens, m)).collect();
        let labels = degrees.iter().enumerate().map(|(i, &h)| (format!("g{i}"), h));
        modules.push(Arc::new(
            GradedModuleSpec::from_pairs(labels).expect("labels are distinct"),
        ));
        let g = if n == 0 {
            vec![vec![Rational::one()]]
        } else {
            random_change_of_basis(rng, &degrees, n == 1)
        };
        change.push((g.clone(), invert(&g)));
        mons.push(ms);
    }

    let index: Vec<BTreeMap<&Monomial, usize>> = mons
        .iter()
        .map(|ms| ms.iter().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();
    let mut tensors = BTreeMap::new();
    for n in 0..=n_max {
        for m in 0..=n_max - n {
            // products of monomial basis elements, as rows over the target monomials
            let target = &index[n + m];
            let mono_product = |a: &Monomial, b: &Monomial| -> Option<(usize, Rational)> {
                let sum: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let k = *target.get(&sum)?;
                let c = a.iter().zip(b).fold(Rational::one(), |acc, (&x, &y)| {
                    acc * Rational::from_integer(binomial((x + y) as u64, x as u64))
                });
                Some((k, c))
            };
            let (gn, gm, ginv) = (&change[n].0, &change[m].0, &change[n + m].1);
            let mut entries = Vec::new();
            for i in 0..mons[n].len() {
                for j in 0..mons[m].len() {
                    let mut in_monomials = vec![Rational::zero(); mons[n + m].len()];
                    for (a, ma) in mons[n].iter().enumerate() {
                        if gn[i][a].is_zero() {
                            continue;
                        }
                        for (b, mb) in mons[m].iter().enumerate() {
                            if gm[j][b].is_zero() {
                                continue;
                            }
                            if let Some((k, c)) = mono_product(ma, mb) {
                                in_monomials[k] += &gn[i][a] * &gm[j][b] * c;
                            }
                        }
                    }
                    for (l, _) in mons[n + m].iter().enumerate() {
                        let v: Rational = in_monomials.iter().zip(ginv).map(|(c, row)| c * &row[l]).sum();
                        if !v.is_zero() {
                            entries.push((i, j, l, v));
                        }
                    }
                }
            }
            tensors.insert((n, m), PontTensor::from_entries(entries));
        }
    }

    let mut diagonals = Vec::with_capacity(n_max);
    for r in 1..=n_max {
        if r == 1 {
            diagonals.push(DegreeMap::identity(modules[1].clone()));
            continue;
        }
        let (src, dst) = (&modules[1], &modules[r]);
        let mut point_power = vec![0; gens.len()];
        point_power[0] = r;
        let k = index[r][&point_power];
        let r_factorial = Rational::from_integer(factorial(r as u64));
        let mut entries: Vec<_> = (0..dst.rank())
            .map(|l| (0, l, &r_factorial * &change[r].1[k][l]))
            .collect();
        for s in 1..src.rank() {
            for t in 0..dst.rank() {
                if src.half_degree(s) == dst.half_degree(t) {
                    entries.push((s, t, small_int(rng, 2)));
                }
            }
        }
        diagonals.push(DegreeMap::new(src.clone(), dst.clone(), entries).expect("entries preserve degree"));
    }
    SpaceModel::new(modules, tensors, diagonals).expect("random models satisfy the ring axioms")
}

/// Random polynomial in `y` of degree ≤ `degree` with small integer coefficients.
pub fn random_poly(rng: &mut StdRng, degree: usize) -> YPolynomial {
    YPolynomial::from_i64s(&(0..=degree).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())
}

/// Random class on `module` with polynomial coefficients of degree ≤ 2.
pub fn random_class(rng: &mut StdRng, module: &Arc<GradedModuleSpec>) -> GradedClass {
    let coeffs = (0..module.rank()).map(|i| (i, YRationalFunction::from_poly(random_poly(rng, 2))));
    GradedClass::from_coeffs(module.clone(), coeffs.collect::<Vec<_>>()).expect("indices in range")
}

/// Random class whose half-degree-`k` coefficient is divisible by `(1-y)^k`,
/// as for Hirzebruch classes in the `T_{(-y)}` convention.
pub fn random_hirzebruch_like_class(rng: &mut StdRng, module: &Arc<GradedModuleSpec>) -> GradedClass {
    let one_minus_y = YPolynomial::from_i64s(&[1, -1]);
    let coeffs = (0..module.rank()).map(|i| {
        let p = &random_poly(rng, 1) * &one_minus_y.pow(module.half_degree(i));
        (i, YRationalFunction::from_poly(p))
    });
    GradedClass::from_coeffs(module.clone(), coeffs.collect::<Vec<_>>()).expect("indices in range")
}
