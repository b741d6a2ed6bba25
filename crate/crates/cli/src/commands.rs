use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::sync::Arc;

use symprod_core::coeffs::{int, parse_rational, YPolynomial, YRationalFunction};
use symprod_core::genera::{arithmetic_genus_series, chi_series, zagier_signature_series, ScalarSeries};
use symprod_core::graded::{class_from_ints, specialize_y, GradedClass, SpecializeMode};
use symprod_core::io::{scalar_series_to_json, series_to_json};
use symprod_core::pipelines::{chern_limit_series, chern_series_direct, l_series, todd_series_direct};
use symprod_core::pontrjagin::{symmetric_class_series, PontSeries, SpaceModel};
use symprod_core::spaces::{genus_class_pn, load_class, load_model, p1_hirzebruch_base, p1_model, point_model, Genus};
use symprod_core::verify::{run_suite, Suite};
use symprod_core::{Error, ErrorKind};

use crate::poly::parse_poly;
use crate::{Format, Pipeline};

pub const DEFAULT_MAX_N: usize = 64;
pub const MAX_N_VAR: &str = "SYMPROD_MAX_N";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Io | ErrorKind::Parse => 3,
                ErrorKind::Invariant => 4,
                ErrorKind::Pole => 5,
                ErrorKind::Parity => 6,
            },
        }
    }
}

#[derive(Debug, Clone)]
pub enum ModelSpec {
    Point,
    P1,
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub enum BaseSpec {
    Hirzebruch,
    Todd,
    Chern,
    L,
    Chi(i64),
    Poly(YPolynomial),
    File(PathBuf),
}

pub fn parse_model(s: &str) -> Result<ModelSpec, String> {
    match s {
        "point" => Ok(ModelSpec::Point),
        "p1" => Ok(ModelSpec::P1),
        _ => match s.strip_prefix("file:") {
            Some(path) if !path.is_empty() => Ok(ModelSpec::File(path.into())),
            _ => Err("expected point, p1 or file:PATH".into()),
        },
    }
}

pub fn parse_base(s: &str) -> Result<BaseSpec, String> {
    match s {
        "hirzebruch" => return Ok(BaseSpec::Hirzebruch),
        "todd" => return Ok(BaseSpec::Todd),
        "chern" => return Ok(BaseSpec::Chern),
        "l" => return Ok(BaseSpec::L),
        _ => {}
    }
    if let Some(v) = s.strip_prefix("chi=") {
        return v
            .trim()
            .parse()
            .map(BaseSpec::Chi)
            .map_err(|_| format!("`{v}` is not an integer"));
    }
    if let Some(v) = s.strip_prefix("poly=") {
        return parse_poly(v).map(BaseSpec::Poly);
    }
    match s.strip_prefix("file:") {
        Some(path) if !path.is_empty() => Ok(BaseSpec::File(path.into())),
        _ => Err("expected hirzebruch, todd, chern, l, chi=INT, poly=EXPR or file:PATH".into()),
    }
}

/// Validates `--N` against zero and the `SYMPROD_MAX_N` cap.
pub fn truncation(n: i64) -> Result<usize, CliError> {
    let cap = match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR} must be a nonnegative integer, got `{v}`")))?,
        Err(_) => DEFAULT_MAX_N,
    };
    if n < 0 {
        return Err(CliError::Usage(format!("--N must be nonnegative, got {n}")));
    }
    let n = n as usize;
    if n > cap {
        return Err(CliError::Usage(format!(
            "--N {n} exceeds the cap {cap} set by {MAX_N_VAR}"
        )));
    }
    Ok(n)
}

fn load_space(spec: &ModelSpec, n: usize) -> Result<Arc<SpaceModel>, CliError> {
    Ok(Arc::new(match spec {
        ModelSpec::Point => point_model(n),
        ModelSpec::P1 => p1_model(n),
        ModelSpec::File(path) => {
            let model = load_model(path)?;
            if model.truncation() < n {
                return Err(CliError::Usage(format!(
                    "model file is truncated at N = {}, below the requested {n}",
                    model.truncation()
                )));
            }
            model
        }
    }))
}

/// The requested series is computed at the file's own truncation and cut
/// down afterwards, so no module beyond `N` is needed.
fn cut(series: &PontSeries, n: usize) -> Vec<GradedClass> {
    series.terms()[..=n].to_vec()
}

fn builtin_base(model: &ModelSpec, base: &BaseSpec) -> Option<GradedClass> {
    match model {
        ModelSpec::Point => Some(match base {
            BaseSpec::Hirzebruch | BaseSpec::Todd | BaseSpec::Chern | BaseSpec::L => {
                class_from_ints(symprod_core::spaces::point_module(), &[(0, 1)]).expect("rank one")
            }
            _ => return None,
        }),
        ModelSpec::P1 => Some(match base {
            BaseSpec::Hirzebruch => p1_hirzebruch_base(),
            BaseSpec::Todd => genus_class_pn(1, Genus::Todd),
            BaseSpec::Chern => genus_class_pn(1, Genus::Chern),
            BaseSpec::L => genus_class_pn(1, Genus::L),
            _ => return None,
        }),
        ModelSpec::File(_) => None,
    }
}

fn resolve_base(spec: &ModelSpec, base: &BaseSpec, model: &Arc<SpaceModel>) -> Result<GradedClass, CliError> {
    if model.truncation() == 0 {
        return Err(CliError::Usage("--N must be at least 1 to carry a base class".into()));
    }
    let module = model.module(1);
    let scaled_point = |c: YRationalFunction| -> Result<GradedClass, CliError> { Ok(model.point_class(1)?.scale(&c)) };
    let class = match base {
        BaseSpec::Chi(chi) => scaled_point(YRationalFunction::constant(int(*chi)))?,
        BaseSpec::Poly(p) => scaled_point(YRationalFunction::from_poly(p.clone()))?,
        BaseSpec::File(path) => {
            let (n, class) = load_class(path, model)?;
            if n != 1 {
                return Err(CliError::Usage(format!(
                    "base class must live on module 1, the file gives module {n}"
                )));
            }
            class
        }
        _ => builtin_base(spec, base).ok_or_else(|| {
            CliError::Usage("builtin bases are defined for the point and p1 models; use chi=, poly= or file:".into())
        })?,
    };
    Ok(class.rebind(module)?)
}

pub fn classes(
    model_spec: &ModelSpec,
    base_spec: &BaseSpec,
    pipeline: Pipeline,
    n: usize,
    format: Format,
    y_eval: Option<&str>,
    ichi: Option<i64>,
) -> Result<String, CliError> {
    let y0 = y_eval
        .map(|v| parse_rational(v).map_err(|e| CliError::Usage(format!("--y-eval: {e}"))))
        .transpose()?;
    if matches!(pipeline, Pipeline::L) && ichi.is_none() {
        return Err(CliError::Usage("--pipeline l requires --ichi".into()));
    }
    let model = load_space(model_spec, n)?;
    let base = resolve_base(model_spec, base_spec, &model)?;
    let series = match pipeline {
        Pipeline::Hirzebruch => symmetric_class_series(&model, &base)?,
        Pipeline::Todd => todd_series_direct(&model, &base)?,
        Pipeline::Chern => chern_series_direct(&model, &base)?,
        Pipeline::ChernLimit => chern_limit_series(&model, &base)?,
        Pipeline::L => l_series(&model, &base, ichi.expect("checked above"))?,
    };
    let mut terms = cut(&series, n);
    if let Some(y0) = &y0 {
        terms = terms
            .iter()
            .map(|c| specialize_y(c, y0, SpecializeMode::Evaluate))
            .collect::<Result<_, _>>()?;
    }
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (k, c) in terms.iter().enumerate() {
                writeln!(out, "{k}\t{c}").expect("writing to a string");
            }
            out
        }
        Format::TableDoc => {
            let truncated = Arc::new(truncate_model(&model, n)?);
            let rebound = terms
                .iter()
                .enumerate()
                .map(|(k, c)| c.rebind(truncated.module(k)))
                .collect::<Result<_, _>>()?;
            let mut doc = series_to_json(&PontSeries::from_terms(truncated, rebound)?);
            doc.push('\n');
            doc
        }
    })
}

fn truncate_model(model: &Arc<SpaceModel>, n: usize) -> Result<SpaceModel, CliError> {
    if model.truncation() == n {
        return Ok((**model).clone());
    }
    let modules = model.modules()[..=n].to_vec();
    let tensors = model
        .tensors()
        .iter()
        .filter(|((a, b), _)| a + b <= n)
        .map(|(k, t)| (*k, t.clone()))
        .collect();
    let diagonals = model.diagonals()[..n].to_vec();
    Ok(SpaceModel::new_unchecked(modules, tensors, diagonals)?)
}

pub fn verify(suite: &str, n: usize, seed: Option<u64>) -> Result<(String, bool), CliError> {
    let suite: Suite = suite.parse()?;
    let checks = run_suite(suite, n, seed)?;
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut out = String::new();
    for c in &checks {
        writeln!(out, "{c}").expect("writing to a string");
    }
    writeln!(out, "{} checks, {failed} failed", checks.len()).expect("writing to a string");
    Ok((out, failed == 0))
}

pub enum GeneraInput {
    ChiY(String),
    Signature(i64, i64),
    ArithmeticGenus(i64),
}

pub fn genera(input: GeneraInput, n: usize, format: Format) -> Result<String, CliError> {
    let series: ScalarSeries = match input {
        GeneraInput::ChiY(text) => chi_series(
            &parse_poly(&text).map_err(|e| CliError::Usage(format!("--chi-y: {e}")))?,
            n,
        ),
        GeneraInput::Signature(sigma, chi) => zagier_signature_series(sigma, chi, n)?,
        GeneraInput::ArithmeticGenus(a) => arithmetic_genus_series(a, n),
    };
    Ok(match format {
        Format::Text => series.to_string(),
        Format::TableDoc => scalar_series_to_json(&series) + "\n",
    })
}
