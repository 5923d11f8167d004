use num_bigint::BigUint;
use qudit_surface::distance::{
    distance_css, distance_homological, distance_homological_chain, normalizer_by_submodules,
    normalizer_by_syndrome,
};
use qudit_surface::io::ComplexDocument;
use qudit_surface::oracle::{
    verify_complement_lemma, verify_logical_action, verify_projector, DEFAULT_DENSE_CAP,
    DEFAULT_EXHAUSTIVE_CAP,
};
use qudit_surface::pauli::DEFAULT_ENUMERATION_CAP;
use qudit_surface::{DistanceReport, Error, PauliProduct};

use crate::failure::{CliResult, Failure};
use crate::input::{Document, InputArgs, Instance, Origin};
use crate::report::{
    Big, Check, CodeReport, ConvertOutput, DistanceField, DistanceOutput, Format, Render,
    RouteField, Status, ValidateReport, VerifyOutput, WitnessField,
};

/// Exit code when two routes that must agree do not.
pub const MISMATCH_EXIT: i32 = 5;

/// What a command prints and the exit code it finishes with.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn new(report: &impl Render, format: Format, code: i32) -> Self {
        Outcome {
            stdout: report.render(format),
            code,
        }
    }
}

fn fits(size: &BigUint, cap: usize) -> bool {
    *size <= BigUint::from(cap)
}

fn kind(doc: &Document) -> &'static str {
    match doc {
        Document::Complex(_) => "complex",
        Document::Hypermap(_) => "hypermap",
        Document::CheckMatrix(_) => "check_matrix",
    }
}

pub fn validate(input: &InputArgs, format: Format) -> CliResult<Outcome> {
    let kind = kind(&input.document()?);
    let violations = match input.load() {
        Ok(instance) => match instance.spec.first_noncommuting_pair() {
            Some((f, v)) => vec![format!(
                "face generator {f} does not commute with vertex generator {v}"
            )],
            None => Vec::new(),
        },
        Err(Failure::Invalid(lines)) => lines,
        Err(other) => return Err(other),
    };
    let valid = violations.is_empty();
    let report = ValidateReport {
        valid,
        kind,
        violations,
    };
    Ok(Outcome::new(&report, format, if valid { 0 } else { 2 }))
}

fn distance_field(result: &Result<DistanceReport, Error>) -> CliResult<DistanceField> {
    match result {
        Ok(r) => Ok(r.distance.into()),
        Err(Error::BudgetExceeded(_)) => Ok(DistanceField::BudgetExceeded),
        Err(e) => Err(Failure::invalid(e.to_string())),
    }
}

fn code_report(instance: &Instance, budget: u64) -> CliResult<CodeReport> {
    let spec = &instance.spec;
    let k = spec.code_dimension()?;
    let s = spec.stabilizer_cardinality()?;
    let orientable = |f: &dyn Fn(&qudit_surface::TwoComplex) -> qudit_surface::Result<bool>| {
        instance.complex.as_ref().map(f).transpose()
    };
    Ok(CodeReport {
        modulus: instance.modulus.get(),
        qudits: spec.num_qudits(),
        stabilizer_size: Big(s),
        code_dimension: Big(k),
        distance: distance_field(&distance_css(spec, budget))?,
        face_generators: spec.num_faces(),
        vertex_generators: spec.num_vertices(),
        face_weights: (0..spec.num_faces())
            .map(|f| spec.face_operator(f).map(|p| p.weight()))
            .collect::<Result<_, _>>()?,
        vertex_weights: (0..spec.num_vertices())
            .map(|v| spec.vertex_operator(v).map(|p| p.weight()))
            .collect::<Result<_, _>>()?,
        orientable_mod_d: orientable(&|c| c.is_orientable(instance.modulus))?,
        orientable_over_integers: orientable(&|c| c.is_orientable_over_integers())?,
        checks: None,
    })
}

fn homology_check(instance: &Instance) -> CliResult<Check> {
    const NAME: &str = "span_vs_homology";
    let Some(chain) = &instance.chain else {
        return Ok(Check::skipped(NAME, "no chain complex"));
    };
    let k = instance.spec.code_dimension()?;
    let h = chain.homology_cardinality();
    Ok(Check::new(
        NAME,
        k == h,
        None,
        format!("K = {k}, |H1| = {h}"),
    ))
}

fn projector_check(instance: &Instance, cap: usize) -> CliResult<Check> {
    const NAME: &str = "projector_trace";
    let size = instance.modulus.power(instance.spec.num_qudits());
    if !fits(&size, cap) {
        return Ok(Check::skipped(NAME, format!("D^n = {size} exceeds {cap}")));
    }
    let check = verify_projector(&instance.spec, cap)?;
    let residual = check
        .idempotence_residual
        .max(check.hermiticity_residual)
        .max(check.integrality_residual);
    let detail = match &check.expected_dimension {
        Some(k) => format!("Tr P = {}, K = {k}", check.rounded_trace()),
        None => format!("Tr P = {}, zero code space", check.rounded_trace()),
    };
    Ok(Check::new(NAME, check.passed, Some(residual), detail))
}

fn enumeration_check(instance: &Instance, cap: usize) -> CliResult<Check> {
    const NAME: &str = "group_enumeration";
    let spec = &instance.spec;
    let predicted = spec.face_span().cardinality() * spec.vertex_span().cardinality();
    if !fits(&predicted, cap) {
        return Ok(Check::skipped(
            NAME,
            format!("|r(A)| |r(B)| = {predicted} exceeds {cap}"),
        ));
    }
    // A scalar in the group can make the closure larger than predicted.
    let group = match qudit_surface::pauli::enumerate_group(
        spec.modulus(),
        spec.num_qudits(),
        &spec.generators(),
        cap,
    ) {
        Ok(g) => g,
        Err(Error::CapExceeded { .. }) => {
            return Ok(Check::new(
                NAME,
                false,
                None,
                "closure outgrows |r(A)| |r(B)|",
            ))
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(s) = &group.scalar_violation {
        return Ok(Check::new(
            NAME,
            false,
            None,
            format!("group holds the scalar w^{} I", s.phase()),
        ));
    }
    let size = BigUint::from(group.size);
    Ok(Check::new(
        NAME,
        size == predicted,
        None,
        format!("|S| = {size}, span product {predicted}"),
    ))
}

/// Runs both distance routes and compares distance and witness.
fn both_routes(instance: &Instance, budget: u64) -> CliResult<(DistanceReport, DistanceReport)> {
    let css = distance_css(&instance.spec, budget)?;
    let homological = match (&instance.complex, &instance.chain) {
        (Some(c), _) => distance_homological(c, instance.modulus, budget)?,
        (None, Some(chain)) => distance_homological_chain(chain, budget)?,
        (None, None) => return Err(Error::ScalarViolation.into()),
    };
    Ok((css, homological))
}

fn witness_field(r: &DistanceReport) -> Option<WitnessField> {
    r.witness.as_ref().map(|w| WitnessField {
        side: w.side,
        weight: w.weight(),
        vector: w.vector.clone(),
    })
}

fn route_field(method: &'static str, r: &DistanceReport) -> RouteField {
    RouteField {
        method,
        distance: r.distance.into(),
        witness: witness_field(r),
        examined: r.examined,
    }
}

pub fn params(input: &InputArgs, format: Format, budget: u64, verify: bool) -> CliResult<Outcome> {
    let instance = input.load()?;
    let mut report = code_report(&instance, budget)?;
    let mut code = 0;
    if verify {
        let checks = vec![
            homology_check(&instance)?,
            projector_check(&instance, DEFAULT_DENSE_CAP)?,
            enumeration_check(&instance, DEFAULT_ENUMERATION_CAP)?,
        ];
        if checks.iter().any(|c| c.status == Status::Fail) {
            code = MISMATCH_EXIT;
        }
        report.checks = Some(checks);
    }
    Ok(Outcome::new(&report, format, code))
}

pub fn distance(input: &InputArgs, format: Format, budget: u64) -> CliResult<Outcome> {
    let instance = input.load()?;
    let k = instance.spec.code_dimension()?;
    let (css, homological) = both_routes(&instance, budget)?;
    let routes_agree = css.distance == homological.distance && css.witness == homological.witness;
    let output = DistanceOutput {
        modulus: instance.modulus.get(),
        qudits: instance.spec.num_qudits(),
        code_dimension: Big(k),
        distance: css.distance.into(),
        witness: witness_field(&css),
        routes_agree,
        routes: vec![
            route_field("css", &css),
            route_field("homological", &homological),
        ],
    };
    Ok(Outcome::new(
        &output,
        format,
        if routes_agree { 0 } else { MISMATCH_EXIT },
    ))
}

pub fn convert(input: &InputArgs, format: Format) -> CliResult<Outcome> {
    if !matches!(input.document()?, Document::Hypermap(_)) {
        return Err(Failure::invalid("convert expects a hypermap document"));
    }
    let instance = input.load()?;
    let Origin::Hypermap { hypermap, specials } = &instance.origin else {
        unreachable!("hypermap documents load as hypermap instances");
    };
    let m = instance.modulus;
    let certificate = hypermap.verify_equivalence(specials, m)?;
    let complex = instance
        .complex
        .as_ref()
        .expect("hypermap instances carry their complex");
    let k_hypermap = instance.spec.code_dimension()?;
    let k_complex = complex.chain_complex(m)?.homology_cardinality();
    let holds = certificate.holds() && k_hypermap == k_complex;
    let output = ConvertOutput {
        holds,
        certificate,
        special_darts: specials.darts().iter().map(|d| d + 1).collect(),
        code_dimension_hypermap: Big(k_hypermap),
        code_dimension_complex: Big(k_complex),
        complex: ComplexDocument::from_complex(complex, m),
    };
    Ok(Outcome::new(
        &output,
        format,
        if holds { 0 } else { MISMATCH_EXIT },
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

struct Caps {
    dense: usize,
    exhaustive: usize,
    enumeration: usize,
}

impl Level {
    fn caps(self) -> Caps {
        match self {
            Level::Quick => Caps {
                dense: 256,
                exhaustive: 4096,
                enumeration: 10_000,
            },
            Level::Full => Caps {
                dense: DEFAULT_DENSE_CAP,
                exhaustive: DEFAULT_EXHAUSTIVE_CAP,
                enumeration: DEFAULT_ENUMERATION_CAP,
            },
        }
    }

    fn name(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }
}

fn normalizer_check(instance: &Instance, cap: usize) -> CliResult<Check> {
    const NAME: &str = "normalizer_characterizations";
    let spec = &instance.spec;
    let n = spec.num_qudits();
    let size = instance.modulus.power(2 * n);
    if !fits(&size, cap) {
        return Ok(Check::skipped(NAME, format!("D^2n = {size} exceeds {cap}")));
    }
    let d = instance.modulus.get();
    let total = d.pow(2 * n as u32);
    let mut disagreements = 0u64;
    for code in 0..total {
        let mut rest = code;
        let mut digits = vec![0u64; 2 * n];
        for slot in digits.iter_mut() {
            *slot = rest % d;
            rest /= d;
        }
        let (x, z) = digits.split_at(n);
        let p = PauliProduct::from_residues(instance.modulus, 0, x.to_vec(), z.to_vec())?;
        if normalizer_by_syndrome(&p, spec)? != normalizer_by_submodules(&p, spec)? {
            disagreements += 1;
        }
    }
    Ok(Check::new(
        NAME,
        disagreements == 0,
        None,
        format!("{total} Pauli products, {disagreements} disagreements"),
    ))
}

fn complement_check(
    name: &'static str,
    span: &qudit_surface::SubmoduleSpan,
    cap: usize,
) -> CliResult<Check> {
    match verify_complement_lemma(span, cap) {
        Ok(c) => Ok(Check::new(
            name,
            c.passed,
            Some(c.character_residual),
            format!("|E| = {}, |E^perp| = {}", c.span_size, c.complement_size),
        )),
        Err(Error::CapExceeded { size, cap }) => {
            Ok(Check::skipped(name, format!("D^n = {size} exceeds {cap}")))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn verify(input: &InputArgs, format: Format, budget: u64, level: Level) -> CliResult<Outcome> {
    let instance = input.load()?;
    let caps = level.caps();
    let spec = &instance.spec;
    let scalar = spec.first_noncommuting_pair();
    let mut checks = Vec::new();

    checks.push(match scalar {
        None => Check::new(
            "generators_commute",
            true,
            None,
            "every face/vertex pair commutes",
        ),
        Some((f, v)) => Check::new(
            "generators_commute",
            false,
            None,
            format!("face {f} and vertex {v} do not commute"),
        ),
    });
    if scalar.is_none() {
        checks.push(homology_check(&instance)?);
    }
    checks.push(enumeration_check(&instance, caps.enumeration)?);
    checks.push(projector_check(&instance, caps.dense)?);

    let mut witness = None;
    if scalar.is_none() {
        checks.push(match both_routes(&instance, budget) {
            Ok((css, hom)) => {
                let agree = css.distance == hom.distance && css.witness == hom.witness;
                let field: DistanceField = css.distance.into();
                witness = css.witness.clone();
                Check::new(
                    "distance_routes",
                    agree,
                    None,
                    format!("d = {field} on both routes"),
                )
            }
            Err(Failure::Budget(m)) => Check::skipped("distance_routes", m),
            Err(e) => return Err(e),
        });
    }
    checks.push(normalizer_check(&instance, caps.exhaustive)?);
    checks.push(complement_check(
        "complement_lemma_faces",
        &spec.face_span(),
        caps.exhaustive,
    )?);
    checks.push(complement_check(
        "complement_lemma_vertices",
        &spec.vertex_span(),
        caps.exhaustive,
    )?);

    if level == Level::Full && scalar.is_none() {
        const NAME: &str = "logical_action";
        let size = instance.modulus.power(spec.num_qudits());
        checks.push(match &witness {
            None => Check::skipped(NAME, "no logical witness"),
            Some(_) if !fits(&size, caps.dense) => Check::skipped(NAME, format!("D^n = {size} exceeds {}", caps.dense)),
            Some(w) => {
                let c = verify_logical_action(&w.to_pauli(instance.modulus), spec, caps.dense)?;
                Check::new(
                    NAME,
                    c.nonscalar,
                    None,
                    format!(
                        "witness deviates from every scalar by {:.3e} on a {}-dimensional code space",
                        c.deviation_from_scalar, c.code_dimension
                    ),
                )
            }
        });
    }

    if let Origin::Hypermap { hypermap, specials } = &instance.origin {
        let cert = hypermap.verify_equivalence(specials, instance.modulus)?;
        checks.push(Check::new(
            "hypermap_equivalence",
            cert.holds(),
            None,
            format!(
                "boundary1 {}, boundary2 {}, orientable {}",
                cert.boundary1_matches, cert.boundary2_matches, cert.orientable_over_integers
            ),
        ));
    }

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    let code = match (passed, scalar) {
        (true, _) => 0,
        (false, Some(_)) => 2,
        (false, None) => MISMATCH_EXIT,
    };
    let output = VerifyOutput {
        level: level.name(),
        passed,
        checks,
    };
    Ok(Outcome::new(&output, format, code))
}
