use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;
use qudit_surface::io::{ComplexDocument, HypermapDocument};
use qudit_surface::{
    ChainComplexData, Hypermap, Modulus, SpecialDarts, StabilizerSpec, TwoComplex,
};

use crate::failure::{CliResult, Failure};

/// Modulus used for built-in fixtures when `--modulus` is absent.
pub const BUILTIN_MODULUS: u64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Rp2,
    Torus,
    TorusGrid(usize, usize),
}

impl FromStr for Builtin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rp2" => return Ok(Builtin::Rp2),
            "torus" => return Ok(Builtin::Torus),
            _ => {}
        }
        let shape = s.strip_prefix("torus-grid:").ok_or_else(|| {
            format!("unknown builtin {s:?}; expected rp2, torus or torus-grid:KxL")
        })?;
        let (k, l) = shape
            .split_once('x')
            .ok_or_else(|| format!("grid shape {shape:?} is not of the form KxL"))?;
        let parse = |t: &str| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(format!("grid side {t:?} must be a positive integer")),
        };
        Ok(Builtin::TorusGrid(parse(k)?, parse(l)?))
    }
}

impl Builtin {
    pub fn complex(self) -> TwoComplex {
        match self {
            Builtin::Rp2 => TwoComplex::rp2(),
            Builtin::Torus => TwoComplex::torus(),
            Builtin::TorusGrid(k, l) => TwoComplex::torus_grid(k, l).expect("sides are positive"),
        }
    }
}

#[derive(Args, Clone, Debug)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["path", "builtin"]))]
pub struct InputArgs {
    /// Complex or hypermap JSON document, or a plain-text check matrix.
    pub path: Option<PathBuf>,

    /// Built-in fixture: rp2, torus or torus-grid:KxL.
    #[arg(long)]
    pub builtin: Option<Builtin>,

    /// Override the document's modulus.
    #[arg(long, value_name = "D")]
    pub modulus: Option<u64>,
}

pub enum Document {
    Complex(ComplexDocument),
    Hypermap(HypermapDocument),
    CheckMatrix(String),
}

impl InputArgs {
    /// Reads and shape-checks the input without interpreting it.
    pub fn document(&self) -> CliResult<Document> {
        if let Some(b) = self.builtin {
            let m = Modulus::new(BUILTIN_MODULUS).expect("valid modulus");
            return Ok(Document::Complex(ComplexDocument::from_complex(
                &b.complex(),
                m,
            )));
        }
        let path = self
            .path
            .as_ref()
            .expect("clap requires a path or a builtin");
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        if !text.trim_start().starts_with('{') {
            return Ok(Document::CheckMatrix(text));
        }
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Failure::Parse(e.to_string()))?;
        let is_hypermap = value.get("alpha").is_some();
        let shape = |e: serde_json::Error| Failure::Parse(e.to_string());
        Ok(if is_hypermap {
            Document::Hypermap(serde_json::from_value(value).map_err(shape)?)
        } else {
            Document::Complex(serde_json::from_value(value).map_err(shape)?)
        })
    }

    fn override_modulus(&self) -> CliResult<Option<Modulus>> {
        self.modulus
            .map(|d| Modulus::new(d).map_err(|e| Failure::invalid(e.to_string())))
            .transpose()
    }

    pub fn load(&self) -> CliResult<Instance> {
        let modulus_override = self.override_modulus()?;
        match self.document()? {
            Document::Complex(doc) => {
                let (complex, modulus) = doc.to_complex()?;
                Instance::from_complex(complex, modulus_override.unwrap_or(modulus))
            }
            Document::Hypermap(doc) => {
                let (hypermap, specials, modulus) = doc.to_hypermap()?;
                Instance::from_hypermap(hypermap, specials, modulus_override.unwrap_or(modulus))
            }
            Document::CheckMatrix(text) => {
                let spec = StabilizerSpec::from_check_matrix(&text)?;
                if let Some(m) = modulus_override {
                    if m != spec.modulus() {
                        return Err(Failure::invalid(format!(
                            "--modulus {} conflicts with check-matrix modulus {}",
                            m.get(),
                            spec.modulus().get()
                        )));
                    }
                }
                Ok(Instance::from_spec(spec))
            }
        }
    }
}

pub enum Origin {
    Complex,
    Hypermap {
        hypermap: Hypermap,
        specials: SpecialDarts,
    },
    CheckMatrix,
}

/// Everything the commands need about one code.
pub struct Instance {
    pub modulus: Modulus,
    pub origin: Origin,
    pub spec: StabilizerSpec,
    /// Absent for a check matrix whose generators do not commute.
    pub chain: Option<ChainComplexData>,
    /// The 2-complex, either read directly or built from a hypermap.
    pub complex: Option<TwoComplex>,
}

impl Instance {
    pub fn from_complex(complex: TwoComplex, modulus: Modulus) -> CliResult<Self> {
        let chain = complex.chain_complex(modulus)?;
        Ok(Instance {
            modulus,
            origin: Origin::Complex,
            spec: StabilizerSpec::from_chain(&chain),
            chain: Some(chain),
            complex: Some(complex),
        })
    }

    /// The hypermap code uses the `Delta` matrices; the converted complex is
    /// kept alongside for cross-checks.
    pub fn from_hypermap(
        hypermap: Hypermap,
        specials: SpecialDarts,
        modulus: Modulus,
    ) -> CliResult<Self> {
        let chain = hypermap
            .delta_matrices(&specials, modulus)?
            .chain_complex()?;
        let complex = hypermap.to_two_complex(&specials);
        Ok(Instance {
            modulus,
            spec: StabilizerSpec::from_chain(&chain),
            chain: Some(chain),
            complex: Some(complex),
            origin: Origin::Hypermap { hypermap, specials },
        })
    }

    /// Face rows are `d_2^T` and vertex rows `d_1`, so a commuting check
    /// matrix is itself a chain complex.
    pub fn from_spec(spec: StabilizerSpec) -> Self {
        let chain =
            ChainComplexData::new(spec.vertex_rows().clone(), spec.face_rows().transpose()).ok();
        Instance {
            modulus: spec.modulus(),
            origin: Origin::CheckMatrix,
            spec,
            chain,
            complex: None,
        }
    }
}
