use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigUint;
use qudit_surface::distance::Side;
use qudit_surface::hypermap::EquivalenceCertificate;
use qudit_surface::io::ComplexDocument;
use qudit_surface::Distance;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// An exact integer written as a bare JSON number of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Big(pub BigUint);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawValue::from_string(self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

/// A distance, `"no_logicals"`, or `"budget_exceeded"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceField {
    Value(usize),
    NoLogicals,
    BudgetExceeded,
}

impl From<Distance> for DistanceField {
    fn from(d: Distance) -> Self {
        match d {
            Distance::Value(w) => DistanceField::Value(w),
            Distance::NoLogicals => DistanceField::NoLogicals,
        }
    }
}

impl Serialize for DistanceField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DistanceField::Value(w) => s.serialize_u64(*w as u64),
            DistanceField::NoLogicals => s.serialize_str("no_logicals"),
            DistanceField::BudgetExceeded => s.serialize_str("budget_exceeded"),
        }
    }
}

impl std::fmt::Display for DistanceField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceField::Value(w) => write!(f, "{w}"),
            DistanceField::NoLogicals => f.write_str("no_logicals"),
            DistanceField::BudgetExceeded => f.write_str("budget_exceeded"),
        }
    }
}

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Text => self.text(),
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn flag(v: Option<bool>) -> String {
    v.map_or_else(|| "unknown".to_string(), |b| b.to_string())
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub kind: &'static str,
    pub violations: Vec<String>,
}

impl Render for ValidateReport {
    fn text(&self) -> String {
        if self.valid {
            return format!("ok ({})\n", self.kind);
        }
        self.violations.iter().map(|v| format!("{v}\n")).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub residual: Option<f64>,
    pub detail: String,
}

impl Check {
    pub fn new(
        name: &'static str,
        passed: bool,
        residual: Option<f64>,
        detail: impl Into<String>,
    ) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Check {
            name,
            status,
            residual,
            detail: detail.into(),
        }
    }

    pub fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skipped,
            residual: None,
            detail: detail.into(),
        }
    }

    fn line(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let residual = self
            .residual
            .map_or_else(|| "-".to_string(), |r| format!("{r:.3e}"));
        format!(
            "{:<30} {:<8} residual={:<10} {}\n",
            self.name, status, residual, self.detail
        )
    }
}

#[derive(Serialize)]
pub struct CodeReport {
    pub modulus: u64,
    pub qudits: usize,
    pub stabilizer_size: Big,
    pub code_dimension: Big,
    pub distance: DistanceField,
    pub face_generators: usize,
    pub vertex_generators: usize,
    pub face_weights: Vec<usize>,
    pub vertex_weights: Vec<usize>,
    pub orientable_mod_d: Option<bool>,
    pub orientable_over_integers: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

impl Render for CodeReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "modulus D:         {}", self.modulus);
        let _ = writeln!(out, "qudits n:          {}", self.qudits);
        let _ = writeln!(out, "|S|:               {}", self.stabilizer_size.0);
        let _ = writeln!(out, "K:                 {}", self.code_dimension.0);
        let _ = writeln!(out, "distance:          {}", self.distance);
        let generators = |count: usize, weights: &[usize]| match count {
            0 => "0".to_string(),
            _ => format!("{count} (weights {})", join(weights)),
        };
        let _ = writeln!(
            out,
            "face generators:   {}",
            generators(self.face_generators, &self.face_weights)
        );
        let _ = writeln!(
            out,
            "vertex generators: {}",
            generators(self.vertex_generators, &self.vertex_weights)
        );
        let _ = writeln!(out, "orientable mod D:  {}", flag(self.orientable_mod_d));
        let _ = writeln!(
            out,
            "orientable over Z: {}",
            flag(self.orientable_over_integers)
        );
        for c in self.checks.iter().flatten() {
            out.push_str(&c.line());
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessField {
    pub side: Side,
    pub weight: usize,
    pub vector: Vec<u64>,
}

#[derive(Serialize)]
pub struct RouteField {
    pub method: &'static str,
    pub distance: DistanceField,
    pub witness: Option<WitnessField>,
    pub examined: u64,
}

#[derive(Serialize)]
pub struct DistanceOutput {
    pub modulus: u64,
    pub qudits: usize,
    pub code_dimension: Big,
    pub distance: DistanceField,
    pub witness: Option<WitnessField>,
    pub routes_agree: bool,
    pub routes: Vec<RouteField>,
}

impl Render for DistanceOutput {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "modulus D:    {}", self.modulus);
        let _ = writeln!(out, "qudits n:     {}", self.qudits);
        let _ = writeln!(out, "K:            {}", self.code_dimension.0);
        let _ = writeln!(out, "distance:     {}", self.distance);
        if let Some(w) = &self.witness {
            let side = match w.side {
                Side::Cycle => "cycle (Z-type)",
                Side::Cocycle => "cocycle (X-type)",
            };
            let _ = writeln!(out, "witness:      {side} [{}]", join(&w.vector));
        }
        let _ = writeln!(out, "routes agree: {}", self.routes_agree);
        for r in &self.routes {
            let _ = writeln!(
                out,
                "  {:<12} d={} examined={}",
                r.method, r.distance, r.examined
            );
        }
        out
    }
}

#[derive(Serialize)]
pub struct ConvertOutput {
    pub certificate: EquivalenceCertificate,
    pub holds: bool,
    pub special_darts: Vec<usize>,
    pub code_dimension_hypermap: Big,
    pub code_dimension_complex: Big,
    pub complex: ComplexDocument,
}

impl Render for ConvertOutput {
    fn text(&self) -> String {
        let c = &self.certificate;
        let mut out = String::new();
        let _ = writeln!(out, "equivalence holds:       {}", self.holds);
        let _ = writeln!(out, "boundary1 matches:       {}", c.boundary1_matches);
        let _ = writeln!(out, "boundary2 matches:       {}", c.boundary2_matches);
        let _ = writeln!(out, "chain identities:        {}", c.chain_identities);
        let _ = writeln!(out, "complex valid:           {}", c.complex_valid);
        let _ = writeln!(out, "orientable mod D:        {}", c.orientable_mod_d);
        let _ = writeln!(
            out,
            "orientable over Z:       {}",
            c.orientable_over_integers
        );
        let _ = writeln!(
            out,
            "special darts:           {}",
            join(&self.special_darts)
        );
        let _ = writeln!(
            out,
            "K (hypermap / complex):  {} / {}",
            self.code_dimension_hypermap.0, self.code_dimension_complex.0
        );
        out.push_str(&self.complex.to_json());
        out.push('\n');
        out
    }
}

#[derive(Serialize)]
pub struct VerifyOutput {
    pub level: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Render for VerifyOutput {
    fn text(&self) -> String {
        let mut out: String = self.checks.iter().map(Check::line).collect();
        let _ = writeln!(
            out,
            "{} ({} level)",
            if self.passed {
                "all checks passed"
            } else {
                "FAILED"
            },
            self.level
        );
        out
    }
}
