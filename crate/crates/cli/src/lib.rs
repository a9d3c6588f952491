//! Command implementations behind the `g2oct` binary.
//!
//! Every command returns an [`Outcome`] carrying its output and exit code, so
//! the binary only parses arguments and prints.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use g2_core::apartment::{vertices_in_region, VertexType};
use g2_core::arith::{parse_rational, Prime, Rational};
use g2_core::automorphisms::{parse_word, RootLabel};
use g2_core::chevalley::{
    check_relations, compare_with_reference, emit_all_tables, extract_constants, reference_table,
    CommutatorSpec, TableEntry,
};
use g2_core::derivations::chevalley_basis_check;
use g2_core::lattices::{
    check_algebra_valuation, classify_vertex_order, intermediate_fn, jumps, order_at,
    sequence_table, standard_intermediate_fns, valuation_of, ExponentLattice,
};
use g2_core::octonion::{parse_octonion, Octonion};
use g2_core::properties;
use serde::Serialize;

pub mod svg;

/// Exit code for a passing run.
pub const EXIT_OK: i32 = 0;
/// Exit code for a domain or verification failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for a parse or usage error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl From<g2_core::Error> for CliError {
    fn from(e: g2_core::Error) -> Self {
        match e {
            g2_core::Error::Parse(_) | g2_core::Error::Config(_) => CliError::Usage(e.to_string()),
            g2_core::Error::Domain(_) | g2_core::Error::Verification(_) => {
                CliError::Failure(e.to_string())
            }
        }
    }
}

/// Output of a command and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "g2oct",
    version,
    about = "Exact computations with the split octonions and G2"
)]
pub struct Cli {
    /// Odd prime used for valuations and the uniformizer `p`.
    #[arg(long, env = "G2_PRIME", default_value_t = 5, global = true)]
    pub prime: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Derivations,
    Lattices,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chevalley commutator constants, checked against the published tables.
    Tables {
        /// Restrict to one pair of root labels.
        #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"])]
        pair: Option<Vec<String>>,
    },
    /// Product of two octonions.
    Mult {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Norm and trace of an octonion.
    Norm {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Valuation of an octonion under a named intermediate function.
    Val {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long = "fn", value_name = "NAME")]
        func: String,
    },
    /// Dual of an exponent lattice under the trace form.
    Dual { lattice: String },
    /// Vertex-order type of an exponent lattice.
    Classify { lattice: String },
    /// Jumps and lattices of the sequence of a named intermediate function.
    Sequence {
        #[arg(long = "fn", value_name = "NAME")]
        func: String,
    },
    /// Runs verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random cases per property suite.
        #[arg(long, default_value_t = properties::DEFAULT_CASES)]
        cases: usize,
    },
    /// Derivation algebra dimension, Chevalley-basis axioms and exponentials.
    Derivations,
    /// Special points of the standard apartment in a rectangle of (δ∨, γ∨) coordinates.
    Apartment {
        #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["X0", "Y0", "X1", "Y1"])]
        region: Vec<String>,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Applies an automorphism word to an octonion.
    Apply {
        word: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let p = Prime::new(cli.prime)?;
    let json = cli.json;
    match &cli.command {
        Command::Tables { pair } => cmd_tables(pair.as_deref(), json),
        Command::Mult { x, y } => {
            let (x, y) = (read_octonion(x)?, read_octonion(y)?);
            Ok(Outcome::ok(render_octonion(&(&x * &y), json)))
        }
        Command::Norm { x } => cmd_norm(&read_octonion(x)?, json),
        Command::Val { x, func } => cmd_val(&read_octonion(x)?, func, p, json),
        Command::Dual { lattice } => {
            let l = read_lattice(lattice)?;
            Ok(Outcome::ok(render_value(&l.dual().to_string(), json)))
        }
        Command::Classify { lattice } => {
            let l = read_lattice(lattice)?;
            Ok(Outcome::ok(render_value(
                &classify_vertex_order(&l).to_string(),
                json,
            )))
        }
        Command::Sequence { func } => cmd_sequence(func, json),
        Command::Verify { suite, seed, cases } => cmd_verify(*suite, *seed, *cases, p, json),
        Command::Derivations => cmd_derivations(json),
        Command::Apartment { region, svg } => cmd_apartment(region, svg.as_ref(), json),
        Command::Apply { word, x } => {
            let w = parse_word(word, p)?;
            Ok(Outcome::ok(render_octonion(
                &w.apply(&read_octonion(x)?),
                json,
            )))
        }
    }
}

/// Reads an octonion as eight comma-separated rationals or a JSON array of eight strings.
pub fn read_octonion(s: &str) -> Result<Octonion<Rational>, CliError> {
    let s = s.trim();
    if s.starts_with('[') {
        let parts: Vec<String> = serde_json::from_str(s)
            .map_err(|e| CliError::Usage(format!("invalid octonion JSON: {e}")))?;
        return Ok(parse_octonion(&parts.join(","))?);
    }
    Ok(parse_octonion(s)?)
}

fn read_lattice(s: &str) -> Result<ExponentLattice, CliError> {
    Ok(s.parse::<ExponentLattice>()?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output") + "\n"
}

fn render_value(s: &str, json: bool) -> String {
    if json {
        to_json(&s)
    } else {
        format!("{s}\n")
    }
}

fn render_octonion(x: &Octonion<Rational>, json: bool) -> String {
    if json {
        let parts: Vec<String> = x.coords().iter().map(ToString::to_string).collect();
        to_json(&parts)
    } else {
        format!("{x}\n")
    }
}

fn cmd_norm(x: &Octonion<Rational>, json: bool) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct NormOut {
        norm: String,
        trace: String,
    }
    let out = NormOut {
        norm: x.norm().to_string(),
        trace: x.trace().to_string(),
    };
    Ok(Outcome::ok(if json {
        to_json(&out)
    } else {
        format!("{}\n", out.norm)
    }))
}

fn cmd_val(x: &Octonion<Rational>, func: &str, p: Prime, json: bool) -> Result<Outcome, CliError> {
    let v = intermediate_fn(func)?;
    Ok(Outcome::ok(render_value(
        &valuation_of(x, &v, p).to_string(),
        json,
    )))
}

fn format_entry(entry: &TableEntry, published: Option<&TableEntry>) -> String {
    let parts: Vec<String> = entry
        .constants
        .iter()
        .map(|c| {
            let known =
                published.is_none_or(|r| r.constants.iter().any(|e| (e.i, e.j) == (c.i, c.j)));
            format!(
                "N{}{}={}{}",
                c.i,
                c.j,
                c.constant,
                if known { "" } else { "*" }
            )
        })
        .collect();
    parts.join(" ")
}

fn cmd_tables(pair: Option<&[String]>, json: bool) -> Result<Outcome, CliError> {
    let reference = reference_table();
    let computed = match pair {
        Some([a, b]) => {
            let spec = CommutatorSpec::new(a.parse::<RootLabel>()?, b.parse::<RootLabel>()?);
            vec![TableEntry {
                alpha: spec.alpha,
                beta: spec.beta,
                constants: extract_constants(spec)?,
            }]
        }
        Some(_) => return Err(CliError::Usage("--pair takes two root labels".into())),
        None => emit_all_tables()?,
    };
    let relevant: Vec<TableEntry> = reference
        .iter()
        .filter(|r| {
            computed
                .iter()
                .any(|c| c.alpha == r.alpha && c.beta == r.beta)
        })
        .cloned()
        .collect();
    let report = compare_with_reference(&computed, &relevant);
    let mut stdout = String::new();
    if json {
        stdout = match pair {
            Some(_) => to_json(&computed[0]),
            None => to_json(&computed),
        };
    } else if pair.is_some() {
        let e = &computed[0];
        writeln!(
            stdout,
            "{}: {}",
            CommutatorSpec::new(e.alpha, e.beta),
            format_entry(e, relevant.first())
        )
        .unwrap();
    } else {
        let mut alphas: Vec<RootLabel> = Vec::new();
        for r in &reference {
            if !alphas.contains(&r.alpha) {
                alphas.push(r.alpha);
            }
        }
        for alpha in alphas {
            writeln!(stdout, "[-, {alpha}(s)]").unwrap();
            for r in reference.iter().filter(|r| r.alpha == alpha) {
                if let Some(c) = computed
                    .iter()
                    .find(|c| c.alpha == r.alpha && c.beta == r.beta)
                {
                    writeln!(
                        stdout,
                        "  {:<10} {}",
                        format!("{}(t)", r.beta),
                        format_entry(c, Some(r))
                    )
                    .unwrap();
                }
            }
        }
        writeln!(
            stdout,
            "{} published constants reproduced; {} computed constants not in the published tables (marked *)",
            report.matched,
            report.unpublished.len()
        )
        .unwrap();
    }
    let mut stderr = String::new();
    for m in report.mismatched.iter().chain(&report.missing_pairs) {
        writeln!(stderr, "mismatch: {m}").unwrap();
    }
    let code = if report.published_agree() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}

#[derive(Serialize)]
struct SequenceOut {
    function: String,
    jumps: Vec<String>,
    lattices: Vec<SequenceRow>,
}

#[derive(Serialize)]
struct SequenceRow {
    r: String,
    lattice: String,
}

fn cmd_sequence(func: &str, json: bool) -> Result<Outcome, CliError> {
    let v = intermediate_fn(func)?;
    let out = SequenceOut {
        function: func.to_string(),
        jumps: jumps(&v).iter().map(ToString::to_string).collect(),
        lattices: sequence_table(&v)
            .into_iter()
            .map(|(r, l)| SequenceRow {
                r: r.to_string(),
                lattice: l.to_string(),
            })
            .collect(),
    };
    if json {
        return Ok(Outcome::ok(to_json(&out)));
    }
    let mut s = format!("jumps: {}\n", out.jumps.join(", "));
    for row in &out.lattices {
        writeln!(s, "r = {:<4} {}", row.r, row.lattice).unwrap();
    }
    Ok(Outcome::ok(s))
}

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &str, name: &str, passed: bool, detail: String) -> Check {
    Check {
        suite: suite.into(),
        name: name.into(),
        passed,
        detail,
    }
}

fn suite_check(suite: &str, r: properties::SuiteResult) -> Check {
    let detail = match r.failures.first() {
        None => format!("{} cases", r.cases),
        Some(f) => format!("{}/{} cases failed, first: {f}", r.failures.len(), r.cases),
    };
    check(suite, &r.name, r.passed(), detail)
}

pub fn relation_checks() -> Result<Vec<Check>, CliError> {
    let r = check_relations()?;
    let fmt = |v: &[RootLabel]| {
        let mut s = format!("{}/{} labels", r.checked - v.len(), r.checked);
        if !v.is_empty() {
            let names: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(s, "; failing: {}", names.join(", ")).unwrap();
        }
        s
    };
    Ok(vec![
        check(
            "relations",
            "additivity e(s)e(t) = e(s+t)",
            r.additive_failures.is_empty(),
            fmt(&r.additive_failures),
        ),
        check(
            "relations",
            "torus h(s)h(t) = h(st)",
            r.torus_failures.is_empty(),
            fmt(&r.torus_failures),
        ),
    ])
}

pub fn derivation_checks() -> Result<Vec<Check>, CliError> {
    let r = chevalley_basis_check()?;
    let n = r.nilpotency.len();
    let exp_ok = r
        .nilpotency
        .iter()
        .filter(|x| x.exp_matches_generator)
        .count();
    let der_ok = r.nilpotency.iter().filter(|x| x.is_derivation).count();
    let indices: Vec<String> = r
        .nilpotency
        .iter()
        .map(|x| format!("{}:{}/{}", x.label, opt(x.matrix_index), opt(x.ad_index)))
        .collect();
    Ok(vec![
        check(
            "derivations",
            "dimension",
            r.dimension == 14 && r.spans_algebra,
            format!("{}", r.dimension),
        ),
        check(
            "derivations",
            "root vectors are derivations",
            der_ok == n,
            format!("{der_ok}/{n}"),
        ),
        check(
            "derivations",
            "exp(tE) equals generator",
            exp_ok == n,
            format!("{exp_ok}/{n}"),
        ),
        check("derivations", "axiom (a)", r.axiom_a, String::new()),
        check(
            "derivations",
            "axiom (b)",
            r.axiom_b_failures.is_empty(),
            r.axiom_b_failures.join(", "),
        ),
        check(
            "derivations",
            "axiom (c)",
            r.axiom_c_failures.is_empty(),
            r.axiom_c_failures.join(", "),
        ),
        check(
            "derivations",
            "axiom (d)",
            r.axiom_d_failures.is_empty(),
            r.axiom_d_failures.join(", "),
        ),
        check(
            "derivations",
            "axiom (e) magnitudes r+1",
            r.axiom_e_ok(),
            format!(
                "{}/{}",
                r.axiom_e.iter().filter(|e| e.magnitude_ok).count(),
                r.axiom_e.len()
            ),
        ),
        check(
            "derivations",
            "nilpotency indices E/ad (info)",
            true,
            indices.join(" "),
        ),
    ])
}

fn opt(k: Option<usize>) -> String {
    k.map_or("-".into(), |k| k.to_string())
}

pub fn lattice_checks(seed: u64, cases: usize, p: Prime) -> Vec<Check> {
    let mut out: Vec<Check> = standard_intermediate_fns()
        .into_iter()
        .map(|(name, v)| {
            let r = check_algebra_valuation(&v, p, seed, 300);
            check(
                "lattices",
                &format!("{name} is an algebra valuation"),
                r.passed(),
                format!("{} random pairs", r.samples),
            )
        })
        .collect();
    out.push(suite_check(
        "lattices",
        properties::dual_involution(seed, cases),
    ));
    out.push(suite_check(
        "lattices",
        properties::valuation_round_trip(seed, cases, p),
    ));
    out
}

pub fn octonion_checks(seed: u64, cases: usize, p: Prime) -> Vec<Check> {
    [
        properties::norm_multiplicativity(seed, cases, p),
        properties::characteristic_identity(seed, cases, p),
        properties::conjugation_anti_homomorphism(seed, cases, p),
        properties::automorphism_preservation(seed, cases, p),
    ]
    .into_iter()
    .map(|r| suite_check("octonions", r))
    .collect()
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    cases: usize,
    p: Prime,
    json: bool,
) -> Result<Outcome, CliError> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Relations | Suite::All) {
        checks.extend(relation_checks()?);
    }
    if matches!(suite, Suite::Derivations | Suite::All) {
        checks.extend(derivation_checks()?);
    }
    if matches!(suite, Suite::Lattices | Suite::All) {
        checks.extend(lattice_checks(seed, cases, p));
    }
    if suite == Suite::All {
        checks.extend(octonion_checks(seed, cases, p));
    }
    let passed = checks.iter().all(|c| c.passed);
    let stdout = if json {
        to_json(&checks)
    } else {
        let mut s = String::new();
        for c in &checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{mark}  {:<12} {}  {}", c.suite, c.name, c.detail).unwrap();
        }
        s
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn cmd_derivations(json: bool) -> Result<Outcome, CliError> {
    let report = chevalley_basis_check()?;
    let ok = report.dimension == 14
        && report.axioms_ok()
        && report
            .nilpotency
            .iter()
            .all(|n| n.is_derivation && n.exp_matches_generator);
    let stdout = if json {
        to_json(&report)
    } else {
        let checks = derivation_checks()?;
        checks
            .iter()
            .map(|c| {
                format!(
                    "{}  {}  {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
            })
            .collect()
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

/// A special point of the apartment with its order.
#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub x: String,
    pub y: String,
    #[serde(rename = "type")]
    pub vertex_type: VertexType,
    pub order: ExponentLattice,
    /// `"standard"` for the standard order, otherwise absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

pub fn apartment_vertices(
    x0: &Rational,
    y0: &Rational,
    x1: &Rational,
    y1: &Rational,
) -> Vec<VertexRecord> {
    vertices_in_region(x0, y0, x1, y1)
        .into_iter()
        .map(|(pt, t)| {
            let order = order_at(&pt);
            let name = (order == ExponentLattice::standard()).then(|| "standard".to_string());
            VertexRecord {
                x: pt.x.to_string(),
                y: pt.y.to_string(),
                vertex_type: t,
                order,
                name,
            }
        })
        .collect()
}

fn cmd_apartment(
    region: &[String],
    svg_path: Option<&PathBuf>,
    json: bool,
) -> Result<Outcome, CliError> {
    let bounds: Vec<Rational> = region
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    let [x0, y0, x1, y1] = <[Rational; 4]>::try_from(bounds)
        .map_err(|_| CliError::Usage("--region takes four rationals".into()))?;
    let vertices = apartment_vertices(&x0, &y0, &x1, &y1);
    if let Some(path) = svg_path {
        let drawing = svg::render(&x0, &y0, &x1, &y1, &vertices);
        std::fs::write(path, drawing)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))?;
    }
    let stdout = if json {
        to_json(&vertices)
    } else {
        vertices
            .iter()
            .map(|v| {
                let label = v.name.clone().unwrap_or_else(|| v.order.to_string());
                format!("({}, {})  {}  {}\n", v.x, v.y, v.vertex_type, label)
            })
            .collect()
    };
    Ok(Outcome::ok(stdout))
}
