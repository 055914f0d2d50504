//! Command-line front end. [`run`] parses arguments, emits one report on `out` and
//! returns the exit status: 2 for unreadable or invalid input, 1 for a failed
//! verdict, 0 otherwise.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use linkspec_algebra::rational::{format_rational, frac};
use linkspec_algebra::{int, rat, Rational};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::infinity::{euler_identity, infinity_bounds, spectrum_at_infinity, validate_model, InfinityModel};
use crate::report;
use crate::seifert::{
    analyze, interval_counts, spectrum_from_h, stabilize, torus_seifert, tristram_levine_with, validate_infinity,
    validate_local, Analysis, SeifertMatrix, SignatureProfile, SpectrumData,
};
use crate::semicont::{AngleChoice, Scenario};
use crate::splice::{boundary_char_poly, certify, check_hypotheses, linking_data, multiplicities, SpliceDiagram};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "linkspec", version, about = "Spectra and signatures of links, splice diagrams and semicontinuity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Also write a CSV table to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,

    /// `auto` or a comma separated list of fractions `a/b` in [0, 1].
    #[arg(long, global = true, default_value = "auto")]
    pub angles: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Validator {
    Local,
    Infinity,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full analysis of a Seifert matrix.
    SeifertAnalyze {
        /// Seifert matrix JSON file.
        input: PathBuf,
        /// Recompute the spectrum from the H-numbers and compare.
        #[arg(long)]
        oracle: bool,
        /// Fail when the H-numbers violate these constraints.
        #[arg(long, value_enum)]
        validate: Option<Validator>,
    },
    /// Tristram–Levine signatures at the requested angles.
    SeifertSignature {
        /// Seifert matrix JSON file.
        input: PathBuf,
    },
    /// The Seifert matrix of the torus link T(p, q) and its spectrum.
    SeifertTorus {
        /// First torus parameter, at least 2.
        p: usize,
        /// Second torus parameter, at least 2.
        q: usize,
        /// Apply this many random stabilizations before analysing.
        #[arg(long, default_value_t = 0)]
        stabilize: usize,
        /// Seed for the stabilization moves.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Linking data, multiplicities and hypotheses of a splice diagram.
    SpliceAnalyze {
        /// Splice diagram JSON file.
        input: PathBuf,
    },
    /// Reduction certificate for the linking form.
    SpliceCertify {
        /// Splice diagram JSON file.
        input: PathBuf,
    },
    /// Spectrum at infinity with model checks and bounds.
    InfinitySpectrum {
        /// Model JSON file.
        input: PathBuf,
    },
    /// Evaluate a semicontinuity scenario.
    SemiCheck {
        /// Scenario JSON file.
        input: PathBuf,
    },
}

/// The result of one verb before formatting.
struct Outcome {
    kind: &'static str,
    body: Value,
    passed: bool,
    csv: Option<Vec<Vec<String>>>,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Invalid(_) | Error::Algebra(_) => 2,
        Error::Hypothesis(_) | Error::Inconsistent(_) | Error::Unresolved(_) => 1,
    }
}

/// Runs one invocation. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let angles = match AngleChoice::parse(&cli.angles) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return 2;
        }
    };
    let outcome = match execute(&cli.command, &angles) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return exit_code(&e);
        }
    };
    if let Some(path) = &cli.csv {
        let Some(rows) = &outcome.csv else {
            let _ = writeln!(err, "--csv is not available for {}", outcome.kind);
            return 2;
        };
        if let Err(e) = write_csv(path, rows) {
            let _ = writeln!(err, "{}: {e}", path.display());
            return 2;
        }
    }
    let mut body = outcome.body;
    if let Value::Object(o) = &mut body {
        o.insert("passed".into(), json!(outcome.passed));
    }
    let doc = report::document(outcome.kind, body);
    let written = match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable")),
        Format::Text => {
            let mut lines = Vec::new();
            text_lines(&doc, "", &mut lines);
            writeln!(out, "{}", lines.join("\n"))
        }
    };
    if written.is_err() {
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}

fn write_csv(path: &Path, rows: &[Vec<String>]) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::Writer::from_path(path)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Flattens a document into `path: value` lines.
fn text_lines(v: &Value, prefix: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(x, &p, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar_text).collect();
            out.push(format!("{prefix}: [{}]", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                text_lines(x, &format!("{prefix}[{i}]"), out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar_text(v))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn execute(cmd: &Command, angles: &AngleChoice) -> Result<Outcome, Error> {
    match cmd {
        Command::SeifertAnalyze {
            input,
            oracle,
            validate,
        } => seifert_analyze(&SeifertMatrix::from_json(&read(input)?)?, *oracle, *validate),
        Command::SeifertSignature { input } => seifert_signature(&SeifertMatrix::from_json(&read(input)?)?, angles),
        Command::SeifertTorus { p, q, stabilize, seed } => seifert_torus(*p, *q, *stabilize, *seed),
        Command::SpliceAnalyze { input } => splice_analyze(&SpliceDiagram::from_json(&read(input)?)?),
        Command::SpliceCertify { input } => splice_certify(&SpliceDiagram::from_json(&read(input)?)?),
        Command::InfinitySpectrum { input } => infinity_spectrum(&InfinityModel::from_json(&read(input)?)?, angles),
        Command::SemiCheck { input } => semi_check(&Scenario::from_json(&read(input)?)?, angles),
    }
}

fn analysis_value(s: &SeifertMatrix, a: &Analysis) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("name".into(), json!(s.name));
    o.insert("size".into(), json!(s.matrix.rows()));
    o.insert("components".into(), json!(s.components));
    o.insert("irr".into(), json!(a.irr()));
    o.insert("reduction_moves".into(), json!(a.keef.reduction_moves));
    o.insert("nondegenerate_size".into(), json!(a.hvs.n));
    o.insert("alexander_h".into(), report::poly(&a.cpd.delta_h));
    o.insert(
        "factors".into(),
        Value::Array(
            a.cpd
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "poly": f.poly.to_string(),
                        "multiplicity": f.multiplicity,
                        "kind": format!("{:?}", f.kind).to_lowercase(),
                        "unit_circle_roots": f.upper_roots.iter().map(report::angle).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        ),
    );
    o.insert("profile".into(), report::profile(&a.profile));
    o.insert("spectrum".into(), report::spectrum(&a.spectrum));
    o.insert(
        "h_numbers".into(),
        match &a.h_numbers {
            Ok(h) => report::h_numbers(h),
            Err(e) => json!({"error": e}),
        },
    );
    if !a.cpd.diagnostics.is_empty() {
        o.insert("diagnostics".into(), json!(a.cpd.diagnostics));
    }
    o
}

/// Rows `(x_lo, x_hi, sigma, nullity)`: one per plateau and one per jump point.
fn profile_csv(p: &SignatureProfile) -> Vec<Vec<String>> {
    let coord = |a: &crate::seifert::Angle| match a.exact() {
        Some(x) => format_rational(x),
        None => format!("{:.12}", a.approx()),
    };
    let mut rows = vec![vec!["x_lo".into(), "x_hi".into(), "sigma".into(), "nullity".into()]];
    let mut lo = "0".to_string();
    for (i, j) in p.jumps.iter().enumerate() {
        let x = coord(&j.angle);
        rows.push(vec![lo.clone(), x.clone(), p.plateaus[i].to_string(), p.irr.to_string()]);
        rows.push(vec![x.clone(), x.clone(), j.sigma.to_string(), j.nullity.to_string()]);
        lo = x;
    }
    rows.push(vec![lo, "1".into(), p.plateaus[p.jumps.len()].to_string(), p.irr.to_string()]);
    rows
}

fn seifert_analyze(s: &SeifertMatrix, oracle: bool, validate: Option<Validator>) -> Result<Outcome, Error> {
    let a = analyze(&s.matrix)?;
    let mut body = analysis_value(s, &a);
    let mut passed = true;
    if let Ok(h) = &a.h_numbers {
        let local = validate_local(h);
        let inf = validate_infinity(h);
        match validate {
            Some(Validator::Local) => passed &= local.passed,
            Some(Validator::Infinity) => passed &= inf.passed,
            None => {}
        }
        body.insert(
            "validation".into(),
            json!({"local": report::validation(&local), "infinity": report::validation(&inf)}),
        );
    } else if validate.is_some() {
        return Err(Error::Unresolved("H-numbers are not available for validation".into()));
    }
    if oracle {
        let value = match a.h_numbers.as_ref().map_err(|e| Error::Unresolved(e.clone())).and_then(spectrum_from_h) {
            Ok(sp) => {
                let agrees = sp == a.spectrum;
                passed &= agrees;
                json!({"status": if agrees { "agree" } else { "differ" }, "h_route": report::spectrum(&sp)})
            }
            Err(e) => json!({"status": "unresolved", "reason": e.to_string()}),
        };
        body.insert("oracle".into(), value);
    }
    Ok(Outcome {
        kind: "seifert-analyze",
        csv: Some(profile_csv(&a.profile)),
        body: Value::Object(body),
        passed,
    })
}

/// Exact jump angles plus midpoints of the gaps between them.
fn auto_signature_angles(a: &Analysis) -> Vec<Rational> {
    let mut pts = vec![Rational::zero()];
    pts.extend(a.profile.jumps.iter().filter_map(|j| j.angle.exact().cloned()));
    pts.push(int(1));
    pts.sort();
    pts.dedup();
    let mut out = Vec::new();
    for w in pts.windows(2) {
        out.push(w[0].clone());
        out.push((&w[0] + &w[1]) / int(2));
    }
    out.push(int(1));
    out
}

fn seifert_signature(s: &SeifertMatrix, angles: &AngleChoice) -> Result<Outcome, Error> {
    let a = analyze(&s.matrix)?;
    let xs = match angles {
        AngleChoice::Auto => auto_signature_angles(&a),
        AngleChoice::List(xs) => xs.clone(),
    };
    let deg = a.cpd.delta_h.deg() as i64;
    let mut records = Vec::new();
    let mut passed = true;
    for x in &xs {
        let (sigma, n, nt) = tristram_levine_with(&s.matrix, x, &a.cpd);
        let (inside, outside, boundary) = interval_counts(&a.spectrum, x);
        let admissible = !frac(x).is_zero() && a.profile.jump_index(&crate::seifert::Angle::from_rational(x)).is_none();
        let mut r = json!({
            "x": report::q(x),
            "sigma": sigma,
            "nullity": n,
            "reduced_nullity": nt,
            "inside": inside,
            "outside": outside,
            "boundary": boundary,
        });
        if admissible && !a.cpd.has_off_circle_roots() {
            let ok = 2 * inside as i64 == deg - sigma && 2 * outside as i64 == deg + sigma;
            passed &= ok;
            r["count_formula"] = json!(ok);
        }
        records.push(r);
    }
    Ok(Outcome {
        kind: "seifert-signature",
        csv: Some(profile_csv(&a.profile)),
        body: json!({
            "name": s.name,
            "alexander_h_degree": deg,
            "irr": a.irr(),
            "profile": report::profile(&a.profile),
            "angles": records,
        }),
        passed,
    })
}

/// `{i/p + j/q : 0 < i < p, 0 < j < q}`.
pub fn torus_formula(p: usize, q: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 1..p {
        for j in 1..q {
            out.push(rat(i as i64, p as i64) + rat(j as i64, q as i64));
        }
    }
    out.sort();
    out
}

fn seifert_torus(p: usize, q: usize, stab: usize, seed: u64) -> Result<Outcome, Error> {
    use rand::SeedableRng;
    if p < 2 || q < 2 {
        return Err(Error::Invalid("torus links need p, q ≥ 2".into()));
    }
    let mut m = torus_seifert(p, q)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    for _ in 0..stab {
        m = stabilize(&m, &mut rng);
    }
    let mut s = SeifertMatrix::named(&format!("T({p},{q})"), m);
    s.components = Some(num_integer::gcd(p, q));
    let a = analyze(&s.matrix)?;
    let expected = torus_formula(p, q);
    let agrees = a.spectrum.rationals().as_ref() == Some(&expected);
    let mut body = analysis_value(&s, &a);
    body.insert("matrix".into(), report::matrix(&s.matrix));
    body.insert("stabilizations".into(), json!(stab));
    body.insert(
        "expected_spectrum".into(),
        Value::Array(expected.iter().map(report::q).collect()),
    );
    body.insert("formula_agrees".into(), json!(agrees));
    Ok(Outcome {
        kind: "seifert-torus",
        csv: Some(profile_csv(&a.profile)),
        body: Value::Object(body),
        passed: agrees,
    })
}

fn splice_summary(d: &SpliceDiagram) -> Result<Map<String, Value>, Error> {
    let ld = linking_data(d)?;
    let hyp = check_hypotheses(d);
    let m = multiplicities(d);
    let id = |v: usize| d.vertices[v].id.clone();
    let mut o = Map::new();
    o.insert("vertices".into(), json!(d.len()));
    o.insert("arrowheads".into(), json!(ld.arrowheads.iter().map(|&a| id(a)).collect::<Vec<_>>()));
    o.insert("n".into(), json!(ld.n));
    o.insert("linking".into(), report::matrix(&ld.per_component));
    o.insert("weighted_linking".into(), report::matrix(&ld.weighted));
    o.insert("l".into(), Value::Array(ld.l.iter().map(report::q).collect()));
    o.insert("n_prime".into(), json!(ld.n_prime));
    o.insert("components".into(), json!(ld.components()));
    o.insert(
        "multiplicities".into(),
        Value::Object((0..d.len()).map(|v| (id(v), report::q(&m[v]))).collect()),
    );
    o.insert("boundary_polynomial".into(), report::poly(&boundary_char_poly(&ld.n_prime)?));
    o.insert("hypotheses".into(), hyp.to_value());
    Ok(o)
}

fn splice_analyze(d: &SpliceDiagram) -> Result<Outcome, Error> {
    let mut body = splice_summary(d)?;
    let mut passed = true;
    let verdict = match certify(d) {
        Ok(c) => {
            passed = c.predicted == c.inertia;
            json!({
                "negative_semidefinite": c.negative_semidefinite,
                "null_dimension": c.null_dimension,
                "inertia": report::inertia(&c.inertia),
                "weak": c.weak,
            })
        }
        Err(Error::Hypothesis(why)) => json!({"skipped": why}),
        Err(e) => return Err(e),
    };
    body.insert("verdict".into(), verdict);
    Ok(Outcome {
        kind: "splice-analyze",
        body: Value::Object(body),
        passed,
        csv: None,
    })
}

fn splice_certify(d: &SpliceDiagram) -> Result<Outcome, Error> {
    let c = certify(d)?;
    let passed = c.predicted == c.inertia && c.negative_semidefinite && (c.weak || c.null_dimension == 1);
    let mut body = match c.to_value() {
        Value::Object(o) => o,
        _ => Map::new(),
    };
    body.insert("diagram".into(), d.to_value());
    Ok(Outcome {
        kind: "splice-certify",
        body: Value::Object(body),
        passed,
        csv: None,
    })
}

fn infinity_spectrum(m: &InfinityModel, angles: &AngleChoice) -> Result<Outcome, Error> {
    let checks = validate_model(m);
    let inf = spectrum_at_infinity(m)?;
    let mut passed = checks.passed();
    let mut body = Map::new();
    body.insert("nu".into(), json!(m.nu));
    body.insert("n_prime".into(), json!(m.n_prime));
    body.insert("irr".into(), json!(m.irr()));
    body.insert("spectrum_hvs".into(), report::spectrum(&m.hvs_spectrum()));
    body.insert("spectrum_infinity".into(), report::spectrum(&inf));
    body.insert("checks".into(), checks.to_value());
    if m.chi.is_some() {
        let e = euler_identity(m)?;
        passed &= e.ok;
        body.insert("euler".into(), e.to_value());
    }
    let xs = match angles {
        AngleChoice::Auto => crate::semicont::admissible_midpoints(&[&m.hvs_spectrum(), &inf], &[]),
        AngleChoice::List(xs) => xs.clone(),
    };
    let mut rows = vec![vec![
        "x".to_string(),
        "window".into(),
        "hvs".into(),
        "infinity".into(),
        "hvs_plus_irr".into(),
        "ok".into(),
    ]];
    let mut bounds = Vec::new();
    for x in &xs {
        for s in infinity_bounds(m, x)? {
            passed &= s.ok();
            rows.push(vec![
                format_rational(x),
                s.window.into(),
                s.hvs.to_string(),
                s.infinity.to_string(),
                (s.hvs + s.irr).to_string(),
                s.ok().to_string(),
            ]);
            let mut v = s.to_value();
            v["x"] = report::q(x);
            bounds.push(v);
        }
    }
    body.insert("bounds".into(), Value::Array(bounds));
    Ok(Outcome {
        kind: "infinity-spectrum",
        body: Value::Object(body),
        passed,
        csv: Some(rows),
    })
}

fn semi_check(s: &Scenario, angles: &AngleChoice) -> Result<Outcome, Error> {
    // an explicit command-line list overrides the scenario file
    let choice = match angles {
        AngleChoice::Auto => None,
        list => Some(list),
    };
    let r = s.run(choice)?;
    let mut rows = vec![vec![
        "x".to_string(),
        "inequality".into(),
        "lhs".into(),
        "rhs".into(),
        "ok".into(),
    ]];
    for rec in &r.records {
        rows.push(vec![
            format_rational(&rec.x),
            rec.inequality.clone(),
            rec.lhs.to_string(),
            rec.rhs.to_string(),
            rec.ok().to_string(),
        ]);
    }
    Ok(Outcome {
        kind: "semi-check",
        passed: r.passed(),
        body: r.to_value(),
        csv: Some(rows),
    })
}

/// Quiet accessor used by tests that want the parsed spectrum of a report.
pub fn spectrum_of_report(doc: &Value) -> Result<SpectrumData, Error> {
    let sp = doc
        .get("spectrum")
        .and_then(|s| s.get("sp"))
        .ok_or_else(|| Error::Parse("report has no spectrum".into()))?;
    crate::infinity::parse_spectrum(sp)
}
