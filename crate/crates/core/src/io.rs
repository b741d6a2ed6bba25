//! JSON documents for models, classes and series.
//!
//! Every number is an exact string (`"p/q"` or `"p"`), unknown keys are
//! rejected, and class coefficients are keyed by basis label.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeffs::{format_rational, parse_rational, YRationalFunction};
use crate::error::{Error, Result};
use crate::genera::ScalarSeries;
use crate::graded::{DegreeMap, GradedClass, GradedModuleSpec};
use crate::pontrjagin::{PontSeries, PontTensor, SpaceModel};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    #[serde(rename = "N")]
    pub n: usize,
    pub modules: Vec<Vec<(String, u32)>>,
    pub tensors: Vec<TensorDoc>,
    pub diagonals: Vec<DiagonalDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<(usize, usize, usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagonalDoc {
    pub r: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub module: usize,
    pub coeffs: Vec<(String, YRationalFunction)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<ClassDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarSeriesDoc {
    #[serde(rename = "N")]
    pub n: usize,
    pub coeffs: Vec<YRationalFunction>,
}

pub fn model_to_doc(model: &SpaceModel) -> ModelDoc {
    ModelDoc {
        n: model.truncation(),
        modules: model
            .modules()
            .iter()
            .map(|m| m.basis().iter().map(|b| (b.label.clone(), b.half_degree)).collect())
            .collect(),
        tensors: model
            .tensors()
            .iter()
            .map(|(&(n, m), t)| TensorDoc {
                n,
                m,
                entries: t.entries().map(|(i, j, k, v)| (i, j, k, format_rational(v))).collect(),
            })
            .collect(),
        diagonals: model
            .diagonals()
            .iter()
            .enumerate()
            .map(|(idx, d)| DiagonalDoc {
                r: idx + 1,
                entries: d.entries().map(|(s, t, v)| (s, t, format_rational(v))).collect(),
            })
            .collect(),
    }
}

pub fn model_to_json(model: &SpaceModel) -> String {
    serde_json::to_string_pretty(&model_to_doc(model)).expect("model documents serialize")
}

/// Builds a model from its document. Shape problems are parse errors;
/// algebraic violations come back as invariant errors.
pub fn model_from_doc(doc: ModelDoc) -> Result<SpaceModel> {
    if doc.modules.len() != doc.n + 1 {
        return Err(Error::Parse(format!(
            "N = {} needs {} modules, found {}",
            doc.n,
            doc.n + 1,
            doc.modules.len()
        )));
    }
    let modules: Vec<Arc<GradedModuleSpec>> = doc
        .modules
        .into_iter()
        .map(|basis| GradedModuleSpec::from_pairs(basis).map(Arc::new))
        .collect::<Result<_>>()?;

    let mut tensors = BTreeMap::new();
    for t in doc.tensors {
        if t.n + t.m > doc.n {
            return Err(Error::Parse(format!("tensor ({}, {}) exceeds N = {}", t.n, t.m, doc.n)));
        }
        let mut entries = Vec::with_capacity(t.entries.len());
        for (i, j, k, v) in t.entries {
            entries.push((i, j, k, parse_rational(&v)?));
        }
        if tensors.insert((t.n, t.m), PontTensor::from_entries(entries)).is_some() {
            return Err(Error::Parse(format!("duplicate tensor ({}, {})", t.n, t.m)));
        }
    }

    let mut by_r: BTreeMap<usize, DegreeMap> = BTreeMap::new();
    for d in doc.diagonals {
        if d.r == 0 || d.r > doc.n {
            return Err(Error::Parse(format!("diagonal r = {} outside 1..={}", d.r, doc.n)));
        }
        let mut entries = Vec::with_capacity(d.entries.len());
        for (s, t, v) in d.entries {
            entries.push((s, t, parse_rational(&v)?));
        }
        let map = DegreeMap::new_unchecked(modules[1].clone(), modules[d.r].clone(), entries)?;
        if by_r.insert(d.r, map).is_some() {
            return Err(Error::Parse(format!("duplicate diagonal r = {}", d.r)));
        }
    }
    if by_r.len() != doc.n {
        return Err(Error::Parse(format!(
            "expected diagonals for r = 1..={}, found {}",
            doc.n,
            by_r.len()
        )));
    }
    SpaceModel::new(modules, tensors, by_r.into_values().collect())
}

pub fn model_from_json(text: &str) -> Result<SpaceModel> {
    model_from_doc(serde_json::from_str(text)?)
}

pub fn class_to_doc(n: usize, class: &GradedClass) -> ClassDoc {
    ClassDoc {
        module: n,
        coeffs: class
            .iter()
            .map(|(i, c)| (class.module().label(i).to_string(), c.clone()))
            .collect(),
    }
}

/// Resolves a class document against `model`, returning its degree `n`.
pub fn class_from_doc(doc: ClassDoc, model: &SpaceModel) -> Result<(usize, GradedClass)> {
    if doc.module > model.truncation() {
        return Err(Error::Parse(format!(
            "class refers to module {} beyond N = {}",
            doc.module,
            model.truncation()
        )));
    }
    let module = model.module(doc.module).clone();
    let mut coeffs = Vec::with_capacity(doc.coeffs.len());
    for (label, c) in doc.coeffs {
        let i = module
            .index_of(&label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label `{label}` in module {}", doc.module)))?;
        coeffs.push((i, c));
    }
    Ok((doc.module, GradedClass::from_coeffs(module, coeffs)?))
}

pub fn class_from_json(text: &str, model: &SpaceModel) -> Result<(usize, GradedClass)> {
    class_from_doc(serde_json::from_str(text)?, model)
}

pub fn class_to_json(n: usize, class: &GradedClass) -> String {
    serde_json::to_string_pretty(&class_to_doc(n, class)).expect("class documents serialize")
}

pub fn series_to_doc(series: &PontSeries) -> SeriesDoc {
    SeriesDoc {
        n: series.truncation(),
        terms: series
            .terms()
            .iter()
            .enumerate()
            .map(|(n, t)| class_to_doc(n, t))
            .collect(),
    }
}

pub fn series_to_json(series: &PontSeries) -> String {
    serde_json::to_string_pretty(&series_to_doc(series)).expect("series documents serialize")
}

pub fn series_from_json(text: &str, model: &Arc<SpaceModel>) -> Result<PontSeries> {
    let doc: SeriesDoc = serde_json::from_str(text)?;
    if doc.n != model.truncation() {
        return Err(Error::Parse(format!(
            "series truncation {} does not match model truncation {}",
            doc.n,
            model.truncation()
        )));
    }
    let mut terms = vec![None; doc.n + 1];
    for t in doc.terms {
        let (n, class) = class_from_doc(t, model)?;
        if terms[n].replace(class).is_some() {
            return Err(Error::Parse(format!("duplicate term for t^{n}")));
        }
    }
    let terms = terms
        .into_iter()
        .enumerate()
        .map(|(n, t)| t.unwrap_or_else(|| GradedClass::zero(model.module(n).clone())))
        .collect();
    PontSeries::from_terms(model.clone(), terms)
}

pub fn scalar_series_to_json(s: &ScalarSeries) -> String {
    let doc = ScalarSeriesDoc {
        n: s.truncation(),
        coeffs: s.coeffs().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("scalar series documents serialize")
}

pub fn scalar_series_from_json(text: &str) -> Result<ScalarSeries> {
    let doc: ScalarSeriesDoc = serde_json::from_str(text)?;
    if doc.coeffs.len() != doc.n + 1 {
        return Err(Error::Parse(format!(
            "N = {} needs {} coefficients, found {}",
            doc.n,
            doc.n + 1,
            doc.coeffs.len()
        )));
    }
    Ok(ScalarSeries::new(doc.coeffs))
}
