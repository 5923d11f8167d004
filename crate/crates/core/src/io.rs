//! JSON documents for 2-complexes and hypermaps.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex2::{ClosedWalk, Edge, Face, Sign, SignedEdge, TwoComplex, Violation};
use crate::error::{Error, Result};
use crate::hypermap::{Hypermap, Permutation, SpecialDarts};
use crate::zmod::Modulus;

/// Suffix marking a reversed edge in a walk.
pub const INVERSE_SUFFIX: char = '~';

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub name: String,
    pub walk: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub modulus: u64,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
    pub faces: Vec<FaceEntry>,
}

fn duplicates<'a>(
    kind: &'static str,
    names: impl Iterator<Item = &'a String>,
    out: &mut Vec<Violation>,
) {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name) {
            out.push(Violation::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_complex(complex: &TwoComplex, modulus: Modulus) -> Self {
        let vertex = |i: usize| complex.vertices()[i].clone();
        ComplexDocument {
            modulus: modulus.get(),
            vertices: complex.vertices().to_vec(),
            edges: complex
                .edges()
                .iter()
                .map(|e| EdgeEntry {
                    name: e.name.clone(),
                    source: vertex(e.source),
                    target: vertex(e.target),
                })
                .collect(),
            faces: complex
                .faces()
                .iter()
                .map(|f| FaceEntry {
                    name: f.name.clone(),
                    walk: f
                        .walk
                        .steps()
                        .iter()
                        .map(|s| {
                            let name = &complex.edges()[s.edge].name;
                            match s.sign {
                                Sign::Plus => name.clone(),
                                Sign::Minus => format!("{name}{INVERSE_SUFFIX}"),
                            }
                        })
                        .collect(),
                    degenerate: f.degenerate,
                })
                .collect(),
        }
    }

    /// Resolves names and validates the result. Duplicate or unknown names
    /// and walk breaks come back together as `InvalidComplex`.
    pub fn to_complex(&self) -> Result<(TwoComplex, Modulus)> {
        let modulus = Modulus::new(self.modulus).map_err(|e| Error::Schema(e.to_string()))?;
        if let Some(e) = self.edges.iter().find(|e| e.name.ends_with(INVERSE_SUFFIX)) {
            return Err(Error::Schema(format!(
                "edge name {:?} may not end with {INVERSE_SUFFIX:?}",
                e.name
            )));
        }

        let mut violations = Vec::new();
        duplicates("vertex", self.vertices.iter(), &mut violations);
        duplicates("edge", self.edges.iter().map(|e| &e.name), &mut violations);
        duplicates("face", self.faces.iter().map(|f| &f.name), &mut violations);

        let vertex_index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let edge_index: HashMap<&str, usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.as_str(), i))
            .collect();

        let resolve_vertex = |edge: &str, name: &str, violations: &mut Vec<Violation>| {
            vertex_index.get(name).copied().unwrap_or_else(|| {
                violations.push(Violation::UnknownName {
                    context: format!("edge {edge}"),
                    name: name.to_string(),
                });
                0
            })
        };
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                name: e.name.clone(),
                source: resolve_vertex(&e.name, &e.source, &mut violations),
                target: resolve_vertex(&e.name, &e.target, &mut violations),
            })
            .collect();

        let mut faces = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let mut steps = Vec::with_capacity(f.walk.len());
            for token in &f.walk {
                let (name, sign) = match token.strip_suffix(INVERSE_SUFFIX) {
                    Some(base) => (base, Sign::Minus),
                    None => (token.as_str(), Sign::Plus),
                };
                match edge_index.get(name) {
                    Some(&edge) => steps.push(SignedEdge { edge, sign }),
                    None => violations.push(Violation::UnknownName {
                        context: format!("face {}", f.name),
                        name: token.clone(),
                    }),
                }
            }
            faces.push(Face {
                name: f.name.clone(),
                walk: ClosedWalk::new(steps),
                degenerate: f.degenerate,
            });
        }
        if !violations.is_empty() {
            return Err(Error::InvalidComplex(violations));
        }

        let complex = TwoComplex::new(self.vertices.clone(), edges, faces);
        let violations = complex.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidComplex(violations));
        }
        Ok((complex, modulus))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypermapDocument {
    pub modulus: u64,
    pub n: usize,
    pub alpha: Vec<Vec<usize>>,
    pub sigma: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_darts: Option<Vec<usize>>,
}

impl HypermapDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_hypermap(h: &Hypermap, specials: Option<&SpecialDarts>, modulus: Modulus) -> Self {
        HypermapDocument {
            modulus: modulus.get(),
            n: h.num_darts(),
            alpha: h.alpha().to_cycles(),
            sigma: h.sigma().to_cycles(),
            special_darts: specials.map(|s| s.darts().iter().map(|d| d + 1).collect()),
        }
    }

    /// The hypermap and its special darts (the default choice when absent).
    pub fn to_hypermap(&self) -> Result<(Hypermap, SpecialDarts, Modulus)> {
        let modulus = Modulus::new(self.modulus).map_err(|e| Error::Schema(e.to_string()))?;
        let alpha = Permutation::from_cycles(self.n, &self.alpha)?;
        let sigma = Permutation::from_cycles(self.n, &self.sigma)?;
        let h = Hypermap::new(alpha, sigma)?;
        let specials = match &self.special_darts {
            None => h.default_special_darts(),
            Some(darts) => {
                let zero_based = darts
                    .iter()
                    .map(|&d| {
                        d.checked_sub(1)
                            .ok_or_else(|| Error::InvalidSpecialDarts("darts are 1-based".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                h.special_darts(&zero_based)?
            }
        };
        Ok((h, specials, modulus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RP2: &str = r#"{
        "modulus": 2,
        "vertices": ["v"],
        "edges": [{"name": "e", "source": "v", "target": "v"}],
        "faces": [{"name": "f", "walk": ["e", "e"]}]
    }"#;

    #[test]
    fn parses_rp2() {
        let doc = ComplexDocument::parse(RP2).unwrap();
        let (c, d) = doc.to_complex().unwrap();
        assert_eq!(d.get(), 2);
        assert_eq!(c, TwoComplex::rp2());
    }

    #[test]
    fn round_trips_builders() {
        let d = Modulus::new(3).unwrap();
        for c in [TwoComplex::torus(), TwoComplex::torus_grid(2, 3).unwrap()] {
            let doc = ComplexDocument::from_complex(&c, d);
            let again = ComplexDocument::parse(&doc.to_json()).unwrap();
            assert_eq!(again.to_complex().unwrap().0, c);
        }
    }

    #[test]
    fn rejects_unknown_fields_and_bad_json() {
        let extra = RP2.replace("\"modulus\": 2,", "\"modulus\": 2, \"colour\": 1,");
        assert!(matches!(
            ComplexDocument::parse(&extra),
            Err(Error::Parse(_))
        ));
        assert!(matches!(ComplexDocument::parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn reports_name_problems() {
        let dup = RP2.replace("[\"v\"]", "[\"v\", \"v\"]");
        let err = ComplexDocument::parse(&dup)
            .unwrap()
            .to_complex()
            .unwrap_err();
        assert!(matches!(err, Error::InvalidComplex(ref v) if v.len() == 1));

        let unknown = RP2.replace("[\"e\", \"e\"]", "[\"e\", \"x~\"]");
        let err = ComplexDocument::parse(&unknown)
            .unwrap()
            .to_complex()
            .unwrap_err();
        match err {
            Error::InvalidComplex(v) => assert_eq!(
                v,
                vec![Violation::UnknownName {
                    context: "face f".into(),
                    name: "x~".into()
                }]
            ),
            other => panic!("unexpected {other:?}"),
        }

        let small = RP2.replace("\"modulus\": 2", "\"modulus\": 1");
        assert!(matches!(
            ComplexDocument::parse(&small).unwrap().to_complex(),
            Err(Error::Schema(_))
        ));
    }

    #[test]
    fn hypermap_document() {
        let doc = HypermapDocument::parse(
            r#"{"modulus": 3, "n": 2, "alpha": [[1, 2]], "sigma": [[1, 2]]}"#,
        )
        .unwrap();
        let (h, s, d) = doc.to_hypermap().unwrap();
        assert_eq!((h.num_darts(), s.darts(), d.get()), (2, &[0][..], 3));
        let back = HypermapDocument::from_hypermap(&h, Some(&s), d);
        assert_eq!(back.special_darts, Some(vec![1]));

        let bad = r#"{"modulus": 3, "n": 2, "alpha": [[1, 2], [2]], "sigma": []}"#;
        assert!(matches!(
            HypermapDocument::parse(bad).unwrap().to_hypermap(),
            Err(Error::InvalidPermutation(_))
        ));
        let zero = r#"{"modulus": 3, "n": 2, "alpha": [], "sigma": [], "special_darts": [0, 2]}"#;
        assert!(HypermapDocument::parse(zero)
            .unwrap()
            .to_hypermap()
            .is_err());
    }
}
