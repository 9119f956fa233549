//! Command-line driver: argument model, group presets and report rendering.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::burnside::BurnsideRing;
use crate::geometry::{self, cases::PencilAnalysis, GeometryError, PencilCase, QuadExt};
use crate::nodal::{parse_sigma_spec, verify, verify_all, NodalError, TableRow, VerificationReport};
use crate::permgroup::{subgroup_classes, PermError, PermGroup, Permutation};

/// Largest group handled.
pub const MAX_GROUP_ORDER: usize = 48;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<NodalError> for CliError {
    fn from(e: NodalError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Parse { .. } => CliError::Invalid(e.to_string()),
            _ => CliError::OutOfScope(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nodal-conics", version, about = "Burnside-ring counts of nodal conics in invariant pencils")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Check every four-point configuration of a group.
    VerifyAll {
        #[arg(long)]
        group: String,
    },
    /// Check one configuration.
    Verify {
        #[arg(long)]
        group: String,
        /// Orbit types, e.g. "2*+[G]" or "[G/<(12)>] + *".
        #[arg(long)]
        sigma: String,
    },
    /// Reproduce one of the geometric counterexamples.
    Counterexample {
        #[command(subcommand)]
        which: CounterexampleArgs,
    },
    /// Print the table of marks.
    Marks {
        #[arg(long)]
        group: String,
    },
    /// Every subgroup class of S4, every configuration.
    TheoremSweep,
}

#[derive(Debug, Subcommand)]
pub enum CounterexampleArgs {
    /// Klein four-group acting on the orbit of [1:2:3].
    Klein,
    /// Dihedral group of order 8 and its nine candidate pencils.
    D8 {
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        a: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        b: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        c: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        d: String,
        #[arg(long = "case", default_value_t = 8)]
        case: usize,
    },
}

/// A validated command.
#[derive(Clone, Debug)]
pub enum Command {
    VerifyAll { group: PermGroup },
    Verify { group: PermGroup, sigma: String },
    Klein,
    D8 { a: i64, b: i64, c: QuadExt, d: QuadExt, case: usize },
    Marks { group: PermGroup },
    TheoremSweep,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<QuadExt, CliError> {
    BigRational::from_str(s.trim())
        .map(QuadExt::rational)
        .map_err(|_| CliError::Invalid(format!("not a rational number: {s:?}")))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let command = match cli.command {
            CommandArgs::VerifyAll { group } => Command::VerifyAll {
                group: parse_group_spec(&group)?,
            },
            CommandArgs::Verify { group, sigma } => Command::Verify {
                group: parse_group_spec(&group)?,
                sigma,
            },
            CommandArgs::Marks { group } => Command::Marks {
                group: parse_group_spec(&group)?,
            },
            CommandArgs::TheoremSweep => Command::TheoremSweep,
            CommandArgs::Counterexample { which } => match which {
                CounterexampleArgs::Klein => Command::Klein,
                CounterexampleArgs::D8 { a, b, c, d, case } => {
                    if a.abs() != 1 || b.abs() != 1 {
                        return Err(CliError::Invalid(format!("--a and --b must be 1 or -1, got {a} and {b}")));
                    }
                    if !(1..=9).contains(&case) {
                        return Err(CliError::Invalid(format!("--case must be between 1 and 9, got {case}")));
                    }
                    let (c, d) = (parse_rational(&c)?, parse_rational(&d)?);
                    if c.is_zero() || d.is_zero() {
                        return Err(CliError::Invalid("--c and --d must be nonzero".into()));
                    }
                    Command::D8 { a, b, c, d, case }
                }
            },
        };
        Ok(RunConfig {
            command,
            format: cli.format,
            output: cli.output,
        })
    }
}

/// Named subgroups of S4, one per conjugacy class.
pub const PRESETS: [(&str, &[&str]); 11] = [
    ("trivial", &[]),
    ("Z2", &["(12)"]),
    ("Z2d", &["(12)(34)"]),
    ("Z3", &["(123)"]),
    ("Z4", &["(1234)"]),
    ("Z2xZ2", &["(12)(34)", "(13)(24)"]),
    ("V'", &["(12)", "(34)"]),
    ("S3", &["(123)", "(12)"]),
    ("D8", &["(1234)", "(13)"]),
    ("A4", &["(123)", "(12)(34)"]),
    ("S4", &["(1234)", "(12)"]),
];

pub fn group_preset(name: &str) -> Option<PermGroup> {
    let name = if name == "A3" { "Z3" } else { name };
    let (_, gens) = PRESETS.iter().find(|(n, _)| n.eq_ignore_ascii_case(name))?;
    let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::parse(g, 4).expect("valid preset")).collect();
    Some(PermGroup::generate(&gens, 4).expect("degree 4"))
}

/// A preset name or a generator list such as `"<(12),(34)>"`.
pub fn parse_group_spec(spec: &str) -> Result<PermGroup, CliError> {
    let spec = spec.trim();
    if let Some(g) = group_preset(spec) {
        return Ok(g);
    }
    if !spec.starts_with('<') {
        let names: Vec<&str> = PRESETS.iter().map(|(n, _)| *n).collect();
        return Err(CliError::Invalid(format!(
            "unknown group {spec:?}; use one of {} or a generator list like \"<(12),(34)>\"",
            names.join(", ")
        )));
    }
    let degree = spec
        .chars()
        .filter_map(|c| c.to_digit(10))
        .max()
        .unwrap_or(4)
        .max(4) as usize;
    if degree > 8 {
        return Err(CliError::OutOfScope(format!("groups act on at most 8 points, got {spec:?}")));
    }
    // the group's own degree, so that point labels above 4 are accepted
    let group = PermGroup::parse_generators(spec, degree)?;
    if group.order() > MAX_GROUP_ORDER {
        return Err(CliError::OutOfScope(format!(
            "group of order {} exceeds the supported {MAX_GROUP_ORDER}",
            group.order()
        )));
    }
    Ok(group)
}

/// Result of a run: the exit code and the rendered report.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

fn render_table(rows: &[TableRow]) -> String {
    let mut s = String::from("K | LHS^K | RHS^K\n");
    for r in rows {
        let _ = writeln!(s, "{} | {} | {}", r.class, r.lhs, r.rhs);
    }
    s
}

/// Text form of a verification report.
pub fn render_report(report: &VerificationReport, per_subgroup: bool) -> String {
    let mut s = String::new();
    let g = report.group();
    let _ = writeln!(s, "group: {} ({}, order {})", g.name(), g.abstract_type(), g.order());
    let _ = writeln!(s, "sigma: {}", report.sigma.decomposition());
    for o in &report.nodal_orbits {
        let orbit: Vec<String> = o.orbit.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            s,
            "nodal orbit {{{}}}: stabilizer {}, branches {}, weight {}",
            orbit.join(", "),
            report.sigma.ring().subgroup_label(&o.stabilizer),
            o.branch_set,
            o.weight
        );
    }
    let _ = writeln!(s, "equal: {}, lhs = {}, rhs = {}", report.equal, report.lhs, report.rhs);
    if per_subgroup {
        s.push_str(&render_table(&report.subgroup_table()));
    } else {
        s.push_str(&render_table(&report.table));
    }
    s
}

fn geometry_json(case: &PencilCase, a: &PencilAnalysis) -> Value {
    json!({
        "f": case.f.to_string(),
        "g": case.g.to_string(),
        "invariant": case.is_invariant(),
        "field": field_name(a.locus.field.radicand()),
        "points": a.base.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "no_three_collinear": true,
        "nodal_members": a.nodal.iter().map(|(m, p)| json!({
            "parameter": m.parameter_string(),
            "conic": m.conic.to_string(),
            "pairing": p.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn field_name(m: i64) -> String {
    if m == 1 {
        "Q".into()
    } else {
        format!("Q(sqrt({m}))")
    }
}

fn geometry_text(case: &PencilCase, a: &PencilAnalysis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pencil: mu*({}) + lambda*({})", case.f, case.g);
    let _ = writeln!(s, "invariant: {}", case.is_invariant());
    let _ = writeln!(s, "field: {}", field_name(a.locus.field.radicand()));
    for (i, p) in a.base.iter().enumerate() {
        let _ = writeln!(s, "b{} = {}", i + 1, p);
    }
    let _ = writeln!(s, "no three collinear: true");
    for (m, p) in &a.nodal {
        let _ = writeln!(s, "nodal member {}: {} <-> {}", m.parameter_string(), m.conic, p);
    }
    s
}

/// One group of the sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepGroup {
    pub name: String,
    pub abstract_type: String,
    pub order: usize,
    /// `"pass"` when every configuration is expected to satisfy the
    /// identity, `"some-fail"` when at least one is expected to fail,
    /// `"none"` when nothing is asserted.
    pub expectation: String,
    pub configs: Vec<SweepCell>,
    pub as_expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepCell {
    pub sigma: String,
    pub equal: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Runs every configuration of every preset.
pub fn theorem_sweep() -> Result<Vec<SweepGroup>, NodalError> {
    let s4 = PermGroup::symmetric(4);
    let classes = subgroup_classes(&s4);
    let mut out = Vec::new();
    for class in &classes {
        let (name, group) = PRESETS
            .iter()
            .map(|(n, _)| (*n, group_preset(n).unwrap()))
            .find(|(_, g)| class.contains(g))
            .expect("every class of S4 has a preset");
        let ring = BurnsideRing::new(group.clone());
        let reports = verify_all(&ring)?;
        let abstract_type = group.abstract_type();
        let expectation = match name {
            "Z2xZ2" | "D8" => "some-fail",
            _ if abstract_type == "Z2xZ2" || abstract_type == "D8" => "none",
            _ => "pass",
        };
        let configs: Vec<SweepCell> = reports
            .iter()
            .map(|r| SweepCell {
                sigma: r.sigma.decomposition().to_string(),
                equal: r.equal,
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
            })
            .collect();
        let as_expected = match expectation {
            "pass" => configs.iter().all(|c| c.equal),
            "some-fail" => configs.iter().any(|c| !c.equal),
            _ => true,
        };
        out.push(SweepGroup {
            name: name.to_string(),
            abstract_type,
            order: group.order(),
            expectation: expectation.to_string(),
            configs,
            as_expected,
        });
    }
    Ok(out)
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Executes a validated command and renders its report.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let json = config.format == Format::Json;
    let (code, output) = match &config.command {
        Command::Verify { group, sigma } => {
            let ring = BurnsideRing::new(group.clone());
            let sigma = parse_sigma_spec(&ring, sigma)?;
            let report = verify(&sigma)?;
            let code = if report.equal { EXIT_OK } else { EXIT_UNEXPECTED };
            let out = if json {
                json_string(&report.to_json_value())
            } else {
                render_report(&report, false)
            };
            (code, out)
        }
        Command::VerifyAll { group } => {
            let ring = BurnsideRing::new(group.clone());
            let reports = verify_all(&ring)?;
            let all = reports.iter().all(|r| r.equal);
            let out = if json {
                json_string(&json!({
                    "group": group.name(),
                    "all_equal": all,
                    "configs": reports.iter().map(|r| r.to_json_value()).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = String::new();
                for r in &reports {
                    s.push_str(&render_report(r, false));
                    s.push('\n');
                }
                let _ = writeln!(s, "all equal: {all}");
                s
            };
            (if all { EXIT_OK } else { EXIT_UNEXPECTED }, out)
        }
        Command::Marks { group } => {
            let ring = BurnsideRing::new(group.clone());
            let labels: Vec<String> = (0..ring.rank()).map(|i| ring.class_label(i)).collect();
            let out = if json {
                json_string(&json!({
                    "group": group.name(),
                    "classes": labels,
                    "marks": ring.table_of_marks().rows(),
                }))
            } else {
                let mut s = format!("table of marks of {} (row H, column K: |(G/H)^K|)\n", group.name());
                let _ = writeln!(s, "H \\ K | {}", labels.join(" | "));
                for (label, row) in labels.iter().zip(ring.table_of_marks().rows()) {
                    let cells: Vec<String> = row.iter().map(|m| m.to_string()).collect();
                    let _ = writeln!(s, "{label} | {}", cells.join(" | "));
                }
                s
            };
            (EXIT_OK, out)
        }
        Command::Klein => {
            let case = geometry::klein_counterexample()?;
            let analysis = case.analyze()?;
            let report = &analysis.report;
            let code = if report.equal { EXIT_UNEXPECTED } else { EXIT_OK };
            let out = if json {
                json_string(&json!({
                    "geometry": geometry_json(&case, &analysis),
                    "report": report.to_json_value(),
                    "subgroup_table": report.subgroup_table(),
                    "expected_inequality_observed": !report.equal,
                }))
            } else {
                let mut s = geometry_text(&case, &analysis);
                s.push_str(&render_report(report, true));
                let _ = writeln!(s, "expected inequality observed: {}", !report.equal);
                s
            };
            (code, out)
        }
        Command::D8 { a, b, c, d, case } => {
            let suite = geometry::d8_case_suite(*a, *b, c, d)?;
            let pencil = &suite[case - 1];
            let header = json!({"case": case, "a": a, "b": b, "c": c.to_string(), "d": d.to_string()});
            match pencil.analyze() {
                Err(GeometryError::NotGeneral(reason)) => {
                    // cases 1 to 7 are expected to be degenerate
                    let code = if *case <= 7 { EXIT_OK } else { EXIT_UNEXPECTED };
                    let out = if json {
                        json_string(&json!({
                            "parameters": header,
                            "f": pencil.f.to_string(),
                            "g": pencil.g.to_string(),
                            "invariant": pencil.is_invariant(),
                            "general": false,
                            "reason": reason.to_string(),
                        }))
                    } else {
                        format!(
                            "case {case}: pencil mu*({}) + lambda*({})\ninvariant: {}\ngeneral: false ({reason})\n",
                            pencil.f,
                            pencil.g,
                            pencil.is_invariant()
                        )
                    };
                    (code, out)
                }
                Err(e) => return Err(e.into()),
                Ok(analysis) => {
                    let report = &analysis.report;
                    let code = if *case >= 8 && !report.equal {
                        EXIT_OK
                    } else {
                        EXIT_UNEXPECTED
                    };
                    let out = if json {
                        json_string(&json!({
                            "parameters": header,
                            "general": true,
                            "geometry": geometry_json(pencil, &analysis),
                            "report": report.to_json_value(),
                            "subgroup_table": report.subgroup_table(),
                            "expected_inequality_observed": !report.equal,
                        }))
                    } else {
                        let mut s = format!("case {case}\n");
                        s.push_str(&geometry_text(pencil, &analysis));
                        s.push_str("general: true\n");
                        s.push_str(&render_report(report, true));
                        let _ = writeln!(s, "expected inequality observed: {}", !report.equal);
                        s
                    };
                    (code, out)
                }
            }
        }
        Command::TheoremSweep => {
            let groups = theorem_sweep()?;
            let ok = groups.iter().all(|g| g.as_expected);
            let out = if json {
                json_string(&json!({ "groups": groups, "all_as_expected": ok }))
            } else {
                let mut s = String::from("group | type | order | config | equal\n");
                for g in &groups {
                    for c in &g.configs {
                        let _ = writeln!(s, "{} | {} | {} | {} | {}", g.name, g.abstract_type, g.order, c.sigma, c.equal);
                    }
                }
                s.push_str("\ngroup | expectation | passed | failed | as expected\n");
                for g in &groups {
                    let passed = g.configs.iter().filter(|c| c.equal).count();
                    let _ = writeln!(
                        s,
                        "{} | {} | {} | {} | {}",
                        g.name,
                        g.expectation,
                        passed,
                        g.configs.len() - passed,
                        g.as_expected
                    );
                }
                let _ = writeln!(s, "all as expected: {ok}");
                s
            };
            (if ok { EXIT_OK } else { EXIT_UNEXPECTED }, out)
        }
    };
    Ok(Outcome { code, output })
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.output {
            Some(path) => std::fs::write(path, &outcome.output)?,
            None => print!("{}", outcome.output),
        }
        Ok(outcome.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

/// Ring for a preset, for callers that only know the name.
pub fn preset_ring(name: &str) -> Option<Arc<BurnsideRing>> {
    group_preset(name).map(BurnsideRing::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("nodal-conics").chain(args.iter().copied())).unwrap();
        run(&RunConfig::from_cli(cli)?)
    }

    #[test]
    fn presets_cover_every_class_of_s4() {
        let s4 = PermGroup::symmetric(4);
        let classes = subgroup_classes(&s4);
        let mut hit = vec![false; classes.len()];
        for (name, _) in PRESETS {
            let g = group_preset(name).unwrap();
            let i = classes.iter().position(|c| c.contains(&g)).unwrap();
            assert!(!hit[i], "{name} duplicates a class");
            hit[i] = true;
        }
        assert!(hit.iter().all(|&h| h));
        assert_eq!(group_preset("A3"), group_preset("Z3"));
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("<(12),(34)>").unwrap().order(), 4);
        assert_eq!(parse_group_spec("s3").unwrap().order(), 6);
        assert!(matches!(parse_group_spec("Q8"), Err(CliError::Invalid(_))));
        assert!(matches!(parse_group_spec("<(12),(345"), Err(CliError::Invalid(_))));
        assert!(matches!(parse_group_spec("<(12345),(12)>"), Err(CliError::OutOfScope(_))));
    }

    #[test]
    fn trivial_verify() {
        let out = run_args(&["verify", "--group", "trivial", "--sigma", "4*"]).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.output.contains("equal: true, lhs = 3*[G/G]"), "{}", out.output);
    }

    #[test]
    fn bad_sigma_is_invalid_input() {
        let err = run_args(&["verify", "--group", "Z2", "--sigma", "3*"]).unwrap_err();
        assert!(matches!(err, CliError::Invalid(_)));
    }

    #[test]
    fn d8_parameters_validated() {
        let cli = Cli::try_parse_from(["x", "counterexample", "d8", "--a", "2"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_err());
        let cli = Cli::try_parse_from(["x", "counterexample", "d8", "--case", "10"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_err());
        let cli = Cli::try_parse_from(["x", "counterexample", "d8", "--c", "0"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_err());
        let cli = Cli::try_parse_from(["x", "counterexample", "d8", "--c", "1/2", "--b", "-1"]).unwrap();
        assert!(RunConfig::from_cli(cli).is_ok());
    }

    #[test]
    fn degenerate_d8_case_reports_reason() {
        let out = run_args(&["counterexample", "d8", "--case", "1"]).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.output.contains("general: false (common component)"), "{}", out.output);
    }
}
