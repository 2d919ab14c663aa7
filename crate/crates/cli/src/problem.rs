use std::collections::BTreeMap;
use std::path::Path;

use logdiv::poly::parse_rat;
use logdiv::theorems::Options;
use logdiv::{DivisorOnPn, Matrix, ProblemSpec, Rat, Vars, VectorFieldPn};
use serde::Deserialize;

use crate::CliError;

/// On-disk problem description. Polynomials and rationals are strings.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub n: usize,
    /// Homogeneous coordinate names; `x0..xn` when absent.
    pub variables: Option<Vec<String>>,
    pub divisors: Vec<DivisorEntry>,
    pub decomposition: Option<[String; 2]>,
    pub total: Option<String>,
    pub vector_field: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub singular_points: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub options: OptionsEntry,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorEntry {
    pub name: String,
    pub poly: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsEntry {
    pub chart: Option<usize>,
    pub chart_form: Option<Vec<String>>,
    #[serde(default)]
    pub probes: bool,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        if is_json {
            serde_json::from_str(&text).map_err(|e| CliError::Format(e.to_string()))
        } else {
            toml::from_str(&text).map_err(|e| CliError::Format(e.to_string()))
        }
    }

    pub fn into_spec(self) -> Result<ProblemSpec, CliError> {
        let names = match self.variables {
            Some(v) => v,
            None => (0..=self.n).map(|i| format!("x{i}")).collect(),
        };
        if names.len() != self.n + 1 {
            return Err(logdiv::Error::DimensionMismatch {
                left: self.n + 1,
                right: names.len(),
            }
            .into());
        }
        let vars = Vars::new(names);
        let divisors = self
            .divisors
            .iter()
            .map(|d| DivisorOnPn::parse(&d.name, &d.poly, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        let mut spec = ProblemSpec::new(vars.clone(), divisors)?;
        spec.decomposition = self.decomposition.map(|[a, b]| (a, b));
        spec.total = self.total;
        if let Some(rows) = self.vector_field {
            let rows = rows.iter().map(|r| rationals(r)).collect::<Result<Vec<_>, _>>()?;
            spec.field = Some(VectorFieldPn::new(Matrix::from_rows(rows)?, &vars)?);
        }
        for (key, pts) in self.singular_points {
            let pts = pts.iter().map(|p| rationals(p)).collect::<Result<Vec<_>, _>>()?;
            spec.singular_points.insert(key, pts);
        }
        spec.options = Options {
            chart: self.options.chart,
            chart_form: self.options.chart_form.as_deref().map(rationals).transpose()?,
            probes: self.options.probes,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn rationals(items: &[String]) -> Result<Vec<Rat>, logdiv::Error> {
    items.iter().map(|s| parse_rat(s)).collect()
}

/// Reads a problem file and applies the command-line overrides.
pub fn load_spec(path: &Path, chart: Option<usize>, probes: bool) -> Result<ProblemSpec, CliError> {
    let mut spec = ProblemFile::load(path)?.into_spec()?;
    if let Some(k) = chart {
        spec.options.chart = Some(k);
        spec.options.chart_form = None;
    }
    spec.options.probes |= probes;
    spec.validate()?;
    Ok(spec)
}
