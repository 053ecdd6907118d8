//! The `weylseries` command line tool.
//!
//! Thin synchronous driver over the library: parse a descriptor, obtain a
//! census (computed or loaded), run the requested series, and emit the
//! payload in plain text, LaTeX, or JSON. The payload goes to stdout (or
//! `--out`); provenance and diagnostics go to stderr so payloads diff
//! cleanly. Exit code 0 means every computation and every diagnostic
//! passed, 1 means a diagnostic or fixture comparison failed, 2 means the
//! request itself could not be carried out.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::census::{
    census_for_descriptor, load_census, save_census, validate_census, CensusSource,
    CharPolyCensus,
};
use crate::groups::GroupDescriptor;
use crate::oracle;
use crate::series::{self, SeriesPayload, SeriesReport};
use crate::{Config, Error, Int, IntBiPoly, IntPoly, Result};

/// JSON schema version carried in every [`OutputDocument`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "weylseries",
    version,
    about = "Exact Poincaré and Hilbert–Poincaré series of commuting-tuple spaces \
             in compact connected Lie groups, computed from Weyl group data"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Largest Weyl group order the census builder will enumerate
    /// (overrides WEYLSERIES_ENUM_LIMIT)
    #[arg(long, global = true, value_name = "N")]
    enum_limit: Option<u64>,

    /// Guard band width above the degree bound; default is twice the
    /// largest characteristic degree (overrides WEYLSERIES_MARGIN)
    #[arg(long, global = true, value_name = "K")]
    margin: Option<usize>,

    /// Cap on tuple lengths and summand degrees (overrides WEYLSERIES_NCAP)
    #[arg(long, global = true, value_name = "K")]
    ncap: Option<usize>,

    /// Read the census from this file instead of computing it
    #[arg(long, global = true, value_name = "FILE")]
    census_file: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Group descriptor: simple factors and circle factors joined by `x`,
    /// e.g. "A2", "SU(4)", "G2", "A1xG2xT2", "U(3)"
    #[arg(long)]
    group: String,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the payload to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// One-variable Poincaré polynomial of the space of commuting n-tuples
    Hom {
        #[command(flatten)]
        common: SeriesArgs,
        /// Tuple length
        #[arg(long)]
        n: usize,
    },
    /// Two-variable refinement: q grades the flag-manifold directions,
    /// s the torus directions
    Hilbert {
        #[command(flatten)]
        common: SeriesArgs,
        /// Tuple length
        #[arg(long)]
        n: usize,
    },
    /// Reduced two-variable series of the degree-m stable wedge summand
    Homhat {
        #[command(flatten)]
        common: SeriesArgs,
        /// Summand degree
        #[arg(long)]
        m: usize,
    },
    /// Deformation coefficients t^0..t^tmax of the three-variable series
    Comm {
        #[command(flatten)]
        common: SeriesArgs,
        /// Largest deformation degree
        #[arg(long)]
        tmax: usize,
        /// Ask through the nilpotent-tuple interface of this class (>= 2);
        /// the payload is identical for every class
        #[arg(long)]
        nilpotency: Option<usize>,
    },
    /// Build (or load) a census, validate it, and optionally save it
    Census {
        /// Group descriptor
        #[arg(long)]
        group: String,
        /// Save the census here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Load the census from here instead of computing it
        #[arg(long, value_name = "FILE")]
        load: Option<PathBuf>,
    },
    /// Run the structural diagnostics for a group and tuple length
    Check {
        /// Group descriptor
        #[arg(long)]
        group: String,
        /// Tuple length
        #[arg(long)]
        n: usize,
    },
    /// Recompute the worked examples and compare against built-in fixtures
    Examples,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

/// Runs the tool on the given argument list and returns the process exit
/// code: 0 all good, 1 diagnostics or fixtures failed, 2 the request could
/// not be carried out.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn resolve_config(cli: &Cli) -> Result<Config> {
    let mut cfg = Config::from_env()?;
    if let Some(v) = cli.enum_limit {
        cfg.enum_limit = v;
    }
    if let Some(v) = cli.margin {
        cfg.margin = Some(v);
    }
    if let Some(v) = cli.ncap {
        cfg.n_cap = v;
    }
    Ok(cfg)
}

fn obtain_census(
    desc: &GroupDescriptor,
    file: Option<&Path>,
    config: &Config,
) -> Result<(CharPolyCensus, CensusSource)> {
    match file {
        Some(path) => {
            let (census, header) = load_census(path)?;
            header.require_match(desc)?;
            let v = validate_census(&census, desc, None)?;
            if !v.passed() {
                return Err(Error::CensusMismatch {
                    reason: format!("{} failed validation:\n{v}", path.display()),
                });
            }
            Ok((census, CensusSource::File))
        }
        None => census_for_descriptor(desc, config),
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    let config = resolve_config(&cli)?;
    let census_file = cli.census_file.as_deref();
    match cli.command {
        Cmd::Hom { common, n } => {
            let desc = GroupDescriptor::parse(&common.group)?;
            let (census, source) = obtain_census(&desc, census_file, &config)?;
            let report = series::report_hom(&desc, n, &census, source, &config)?;
            emit_report(&report, "hom", &common)
        }
        Cmd::Hilbert { common, n } => {
            let desc = GroupDescriptor::parse(&common.group)?;
            let (census, source) = obtain_census(&desc, census_file, &config)?;
            let report = series::report_hilbert(&desc, n, &census, source, &config)?;
            emit_report(&report, "hilbert", &common)
        }
        Cmd::Homhat { common, m } => {
            let desc = GroupDescriptor::parse(&common.group)?;
            let (census, source) = obtain_census(&desc, census_file, &config)?;
            let report = series::report_homhat(&desc, m, &census, source, &config)?;
            emit_report(&report, "homhat", &common)
        }
        Cmd::Comm {
            common,
            tmax,
            nilpotency,
        } => {
            let desc = GroupDescriptor::parse(&common.group)?;
            let (census, source) = obtain_census(&desc, census_file, &config)?;
            let report = series::report_comm(&desc, tmax, nilpotency, &census, source, &config)?;
            emit_report(&report, "comm", &common)
        }
        Cmd::Census { group, out, load } => run_census(&group, out, load, census_file, &config),
        Cmd::Check { group, n } => run_check(&group, n, census_file, &config),
        Cmd::Examples => Ok(run_examples()),
    }
}

fn emit_report(report: &SeriesReport, command: &str, common: &SeriesArgs) -> Result<bool> {
    let text = match common.format {
        Format::Text => render_payload(report, false),
        Format::Latex => render_payload(report, true),
        Format::Json => {
            let doc = OutputDocument::from_report(report, command);
            serde_json::to_string_pretty(&doc)?
        }
    };
    match &common.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    if common.format != Format::Json {
        print_provenance(report);
    }
    Ok(report.all_passed())
}

fn index_string(report: &SeriesReport) -> String {
    if let Some(n) = report.n {
        return format!("n = {n}");
    }
    if let Some(m) = report.m {
        return format!("m = {m}");
    }
    let mut s = format!("tmax = {}", report.t_max.unwrap_or(0));
    if let Some(c) = report.nilpotency {
        s.push_str(&format!(", nilpotency class {c}"));
    }
    s
}

fn print_provenance(report: &SeriesReport) {
    eprintln!(
        "# {} | {} | census: {} | {} ms",
        report.descriptor,
        index_string(report),
        report.census_source,
        report.elapsed.as_millis()
    );
    for d in &report.diagnostics {
        eprintln!(
            "# {} {}: expected {}, found {}",
            if d.passed { "[ok]  " } else { "[FAIL]" },
            d.name,
            d.expected,
            d.found
        );
    }
}

fn render_payload(report: &SeriesReport, latex: bool) -> String {
    match &report.payload {
        SeriesPayload::Poincare(p) => {
            if latex {
                p.display_latex("q")
            } else {
                p.display("q")
            }
        }
        SeriesPayload::Hilbert(h) | SeriesPayload::ReducedHat(h) => {
            if latex {
                h.display_latex("q", "s")
            } else {
                h.display("q", "s")
            }
        }
        SeriesPayload::Comm(coeffs) => coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if latex {
                    format!("t^{{{m}}}: {}", c.display_latex("q", "s"))
                } else {
                    format!("t^{m}: {}", c.display("q", "s"))
                }
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn run_census(
    group: &str,
    out: Option<PathBuf>,
    load: Option<PathBuf>,
    census_file: Option<&Path>,
    config: &Config,
) -> Result<bool> {
    let desc = GroupDescriptor::parse(group)?;
    let (census, source) = match load.as_deref().or(census_file) {
        Some(path) => {
            let (c, header) = load_census(path)?;
            header.require_match(&desc)?;
            (c, CensusSource::File)
        }
        None => census_for_descriptor(&desc, config)?,
    };
    let v = validate_census(&census, &desc, None)?;
    println!(
        "census for {}: |W| = {}, {} classes, source: {}",
        desc.canonical(),
        census.total(),
        census.classes(),
        source
    );
    for (chi, count) in census.entries() {
        println!("  {count} × {}", chi.display("t"));
    }
    println!("{v}");
    if let Some(path) = out {
        save_census(&census, &desc, &path)?;
        println!("saved to {}", path.display());
    }
    Ok(v.passed())
}

fn run_check(group: &str, n: usize, census_file: Option<&Path>, config: &Config) -> Result<bool> {
    let desc = GroupDescriptor::parse(group)?;
    let (census, source) = obtain_census(&desc, census_file, config)?;
    let report = series::report_hom(&desc, n, &census, source, config)?;
    println!(
        "diagnostics for {}, {} (census: {})",
        report.descriptor,
        index_string(&report),
        report.census_source
    );
    for d in &report.diagnostics {
        println!(
            "{} {}: expected {}, found {}",
            if d.passed { "[ok]  " } else { "[FAIL]" },
            d.name,
            d.expected,
            d.found
        );
    }
    let verdict = if report.all_passed() {
        "all checks passed"
    } else {
        "CHECKS FAILED"
    };
    println!("{verdict}");
    Ok(report.all_passed())
}

struct Fixture {
    group: &'static str,
    n: usize,
    coeffs: &'static [i64],
}

/// The worked examples: commuting pairs, triples, and quadruples in the
/// rank-two and rank-three unitary groups, and tuples in the exceptional
/// group of rank two.
const FIXTURES: &[Fixture] = &[
    Fixture { group: "U(2)", n: 2, coeffs: &[1, 2, 2, 4, 5, 2] },
    Fixture { group: "U(2)", n: 3, coeffs: &[1, 3, 6, 13, 18, 13, 6, 3, 1] },
    Fixture { group: "U(2)", n: 4, coeffs: &[1, 4, 12, 32, 54, 56, 44, 32, 17, 4] },
    Fixture { group: "U(3)", n: 2, coeffs: &[1, 2, 2, 4, 7, 10, 11, 8, 8, 8, 3] },
    Fixture {
        group: "U(3)",
        n: 3,
        coeffs: &[1, 3, 6, 14, 30, 54, 73, 75, 75, 73, 54, 30, 14, 6, 3, 1],
    },
    Fixture {
        group: "U(3)",
        n: 4,
        coeffs: &[1, 4, 12, 36, 96, 212, 357, 472, 555, 604, 574, 468, 330, 204, 113, 48, 10],
    },
    Fixture { group: "G2", n: 1, coeffs: &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1] },
    Fixture { group: "G2", n: 2, coeffs: &[1, 0, 1, 2, 1, 2, 1, 0, 0, 0, 1, 2, 0, 2, 3] },
    Fixture {
        group: "G2",
        n: 3,
        coeffs: &[1, 0, 3, 3, 6, 9, 3, 3, 3, 2, 3, 3, 3, 9, 6, 3, 3, 0, 1],
    },
];

fn run_examples() -> bool {
    let config = Config::default();
    let mut all_ok = true;
    let mut cached: Option<(String, CharPolyCensus)> = None;
    for f in FIXTURES {
        let desc = GroupDescriptor::parse(f.group).expect("fixture descriptor parses");
        if cached.as_ref().map(|(g, _)| g.as_str()) != Some(f.group) {
            let (c, _) = census_for_descriptor(&desc, &config).expect("fixture census builds");
            cached = Some((f.group.to_string(), c));
        }
        let census = &cached.as_ref().unwrap().1;
        let expected = IntPoly::from_ints(f.coeffs);
        match series::poincare_hom(&desc, f.n, census, &config) {
            Ok(p) if p == expected => {
                println!("[ok]   {} n = {}: {}", f.group, f.n, p.display("q"));
            }
            Ok(p) => {
                all_ok = false;
                println!(
                    "[FAIL] {} n = {}: expected {}, found {}",
                    f.group,
                    f.n,
                    expected.display("q"),
                    p.display("q")
                );
            }
            Err(e) => {
                all_ok = false;
                println!("[FAIL] {} n = {}: {e}", f.group, f.n);
            }
        }
    }

    // the rank-one closed form ½((1+q)^n(1+q²) + (1−q)^n(1−q²))
    let desc = GroupDescriptor::parse("SU(2)").unwrap();
    let census = census_for_descriptor(&desc, &config).unwrap().0;
    for n in 1..=8 {
        let expected = oracle::su2_reference(n);
        match series::poincare_hom(&desc, n, &census, &config) {
            Ok(p) if p == expected => {
                println!("[ok]   SU(2) n = {n}: {}", p.display("q"));
            }
            Ok(p) => {
                all_ok = false;
                println!(
                    "[FAIL] SU(2) n = {n}: expected {}, found {}",
                    expected.display("q"),
                    p.display("q")
                );
            }
            Err(e) => {
                all_ok = false;
                println!("[FAIL] SU(2) n = {n}: {e}");
            }
        }
    }

    println!(
        "{}",
        if all_ok {
            "all examples reproduced"
        } else {
            "EXAMPLES FAILED"
        }
    );
    all_ok
}

/// Everything a `--format json` invocation prints: a stable, versioned
/// document whose payload parses back to the exact in-memory polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub descriptor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<usize>,
    pub census_source: String,
    pub payload: JsonPayload,
    pub diagnostics: Vec<JsonDiagnostic>,
    pub all_passed: bool,
    pub elapsed_ms: u128,
}

/// Exact polynomial payloads with coefficients as decimal strings (they
/// need not fit in any machine integer).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JsonPayload {
    /// `coefficients[k]` is the coefficient of `q^k`.
    Poincare { coefficients: Vec<String> },
    /// `rows[i][j]` is the coefficient of `q^i s^j`.
    Hilbert { rows: Vec<Vec<String>> },
    /// `rows[i][j]` is the coefficient of `q^i s^j`.
    ReducedHat { rows: Vec<Vec<String>> },
    /// `coefficients[m][i][j]` is the coefficient of `t^m q^i s^j`.
    Comm { coefficients: Vec<Vec<Vec<String>>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonDiagnostic {
    pub name: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

fn poly_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn bipoly_strings(p: &IntBiPoly) -> Vec<Vec<String>> {
    p.rows()
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn int_from_str(s: &str) -> Result<Int> {
    Int::from_str(s).map_err(|_| {
        Error::Inconsistent(format!("payload coefficient {s:?} is not a decimal integer"))
    })
}

/// Rebuilds a one-variable polynomial from its JSON coefficient list.
pub fn poly_from_strings(coefficients: &[String]) -> Result<IntPoly> {
    let mut coeffs = Vec::with_capacity(coefficients.len());
    for s in coefficients {
        coeffs.push(int_from_str(s)?);
    }
    Ok(IntPoly::new(coeffs))
}

/// Rebuilds a two-variable polynomial from its JSON row table.
pub fn bipoly_from_strings(rows: &[Vec<String>]) -> Result<IntBiPoly> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for s in row {
            r.push(int_from_str(s)?);
        }
        out.push(r);
    }
    Ok(IntBiPoly::from_rows(out))
}

impl OutputDocument {
    pub fn from_report(report: &SeriesReport, command: &str) -> Self {
        let payload = match &report.payload {
            SeriesPayload::Poincare(p) => JsonPayload::Poincare {
                coefficients: poly_strings(p),
            },
            SeriesPayload::Hilbert(h) => JsonPayload::Hilbert {
                rows: bipoly_strings(h),
            },
            SeriesPayload::ReducedHat(h) => JsonPayload::ReducedHat {
                rows: bipoly_strings(h),
            },
            SeriesPayload::Comm(coeffs) => JsonPayload::Comm {
                coefficients: coeffs.iter().map(bipoly_strings).collect(),
            },
        };
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            tool: "weylseries".to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            descriptor: report.descriptor.clone(),
            n: report.n,
            m: report.m,
            t_max: report.t_max,
            nilpotency: report.nilpotency,
            census_source: report.census_source.to_string(),
            payload,
            diagnostics: report
                .diagnostics
                .iter()
                .map(|d| JsonDiagnostic {
                    name: d.name.clone(),
                    expected: d.expected.clone(),
                    found: d.found.clone(),
                    passed: d.passed,
                })
                .collect(),
            all_passed: report.all_passed(),
            elapsed_ms: report.elapsed.as_millis(),
        }
    }

    /// The one-variable payload, parsed back to exact integers.
    pub fn payload_poly(&self) -> Result<IntPoly> {
        match &self.payload {
            JsonPayload::Poincare { coefficients } => poly_from_strings(coefficients),
            other => Err(Error::Inconsistent(format!(
                "expected a one-variable payload, found {other:?}"
            ))),
        }
    }

    /// The two-variable payload, parsed back to exact integers.
    pub fn payload_bipoly(&self) -> Result<IntBiPoly> {
        match &self.payload {
            JsonPayload::Hilbert { rows } | JsonPayload::ReducedHat { rows } => {
                bipoly_from_strings(rows)
            }
            other => Err(Error::Inconsistent(format!(
                "expected a two-variable payload, found {other:?}"
            ))),
        }
    }

    /// The deformation coefficients, parsed back to exact integers.
    pub fn payload_comm(&self) -> Result<Vec<IntBiPoly>> {
        match &self.payload {
            JsonPayload::Comm { coefficients } => coefficients
                .iter()
                .map(|rows| bipoly_from_strings(rows))
                .collect(),
            other => Err(Error::Inconsistent(format!(
                "expected deformation coefficients, found {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{report_comm, report_hilbert, report_hom};

    fn setup(group: &str) -> (GroupDescriptor, CharPolyCensus, CensusSource) {
        let desc = GroupDescriptor::parse(group).unwrap();
        let (census, source) = census_for_descriptor(&desc, &Config::default()).unwrap();
        (desc, census, source)
    }

    #[test]
    fn examples_all_reproduce() {
        assert!(run_examples());
    }

    #[test]
    fn text_payload_matches_display_conventions() {
        let (desc, census, source) = setup("U(2)");
        let report = report_hom(&desc, 3, &census, source, &Config::default()).unwrap();
        assert_eq!(
            render_payload(&report, false),
            "1 + 3q + 6q^2 + 13q^3 + 18q^4 + 13q^5 + 6q^6 + 3q^7 + q^8"
        );
        assert_eq!(
            render_payload(&report, true),
            "1 + 3q + 6q^{2} + 13q^{3} + 18q^{4} + 13q^{5} + 6q^{6} + 3q^{7} + q^{8}"
        );
    }

    #[test]
    fn json_documents_round_trip() {
        let cfg = Config::default();
        let (desc, census, source) = setup("G2");

        let report = report_hom(&desc, 2, &census, source, &cfg).unwrap();
        let doc = OutputDocument::from_report(&report, "hom");
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: OutputDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        match &report.payload {
            SeriesPayload::Poincare(p) => assert_eq!(&back.payload_poly().unwrap(), p),
            _ => unreachable!(),
        }
        assert_eq!(back.schema_version, SCHEMA_VERSION);
        assert_eq!(back.command, "hom");
        assert_eq!(back.descriptor, "G2");
        assert_eq!(back.n, Some(2));
        assert!(back.all_passed);

        let report = report_hilbert(&desc, 2, &census, source, &cfg).unwrap();
        let doc = OutputDocument::from_report(&report, "hilbert");
        let back: OutputDocument =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        match &report.payload {
            SeriesPayload::Hilbert(h) => assert_eq!(&back.payload_bipoly().unwrap(), h),
            _ => unreachable!(),
        }

        let report = report_comm(&desc, 2, Some(4), &census, source, &cfg).unwrap();
        let doc = OutputDocument::from_report(&report, "comm");
        let back: OutputDocument =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.nilpotency, Some(4));
        match &report.payload {
            SeriesPayload::Comm(v) => assert_eq!(&back.payload_comm().unwrap(), v),
            _ => unreachable!(),
        }
    }

    #[test]
    fn payload_kind_mismatches_are_refused() {
        let (desc, census, source) = setup("A1");
        let report = report_hom(&desc, 1, &census, source, &Config::default()).unwrap();
        let doc = OutputDocument::from_report(&report, "hom");
        assert!(doc.payload_bipoly().is_err());
        assert!(doc.payload_comm().is_err());
        assert!(doc.payload_poly().is_ok());
    }

    #[test]
    fn flags_override_environment_and_defaults() {
        let cli = Cli::try_parse_from([
            "weylseries",
            "hom",
            "--group",
            "A1",
            "--n",
            "1",
            "--enum-limit",
            "99",
            "--margin",
            "7",
            "--ncap",
            "3",
        ])
        .unwrap();
        let cfg = resolve_config(&cli).unwrap();
        assert_eq!(cfg.enum_limit, 99);
        assert_eq!(cfg.margin, Some(7));
        assert_eq!(cfg.n_cap, 3);

        let cli = Cli::try_parse_from(["weylseries", "hom", "--group", "A1", "--n", "1"]).unwrap();
        let cfg = resolve_config(&cli).unwrap();
        assert_eq!(cfg, Config::default());
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("payload.json");
        let code = run([
            "weylseries",
            "hom",
            "--group",
            "U(2)",
            "--n",
            "3",
            "--format",
            "json",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let doc: OutputDocument =
            serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(
            doc.payload_poly().unwrap(),
            IntPoly::from_ints(&[1, 3, 6, 13, 18, 13, 6, 3, 1])
        );

        // unknown descriptor
        assert_eq!(run(["weylseries", "hom", "--group", "Q5", "--n", "1"]), 2);
        // census too large to enumerate
        assert_eq!(run(["weylseries", "hom", "--group", "E8", "--n", "2"]), 2);
        // malformed flags are clap's domain
        assert_eq!(run(["weylseries", "hom", "--group"]), 2);
    }

    #[test]
    fn check_and_census_commands() {
        assert_eq!(run(["weylseries", "check", "--group", "G2", "--n", "2"]), 0);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b3.censusjsonl");
        assert_eq!(
            run([
                "weylseries",
                "census",
                "--group",
                "B3",
                "--out",
                path.to_str().unwrap(),
            ]),
            0
        );
        assert_eq!(
            run([
                "weylseries",
                "census",
                "--group",
                "B3",
                "--load",
                path.to_str().unwrap(),
            ]),
            0
        );
        // a census file for the wrong group is rejected
        assert_eq!(
            run([
                "weylseries",
                "census",
                "--group",
                "A3",
                "--load",
                path.to_str().unwrap(),
            ]),
            2
        );
        // and series commands can consume the file
        assert_eq!(
            run([
                "weylseries",
                "hom",
                "--group",
                "B3",
                "--n",
                "2",
                "--census-file",
                path.to_str().unwrap(),
            ]),
            0
        );
    }
}
