//! `qtoric`: classify quasitoric manifolds over `Δⁿ × Δᵐ` from the command line.
//!
//! Every command reads characteristic data as JSON
//! (`{"n": 2, "m": 1, "a": [2], "b": [1, 0]}`) from a file path, an inline
//! JSON argument, or `-` for stdin, and prints one JSON document or TSV rows.
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 singular
//! characteristic data, 4 the closed-form classifier and a brute-force
//! oracle disagree.

use std::fmt::Display;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtoric::classify::{canonical_class, count_nonbott, enumerate_classes, homeomorphic, HomeoClass, Verdict};
use qtoric::oracle::{builtin_witness, ring_iso_search, witness_check, IsoVerdict, WitnessFamily};
use qtoric::quasitoric::{
    cohomology_presentation, graded_ranks, h_vector, kernel_lattice, normalize, subtorus_weights, validate,
    validate_bruteforce, GradedRanks, Presentation, Shape,
};
use qtoric::{CharPair, IntMatrix};
use serde::Serialize;

const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

#[derive(Parser)]
#[command(name = "qtoric", version, about = "Homeomorphism classification of quasitoric manifolds over a product of two simplices")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Entry bound for enumeration and the ring-isomorphism search.
    #[arg(long, global = true, default_value_t = 3)]
    bound: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Check non-singularity by the closed form and by the vertex check.
    Validate { input: String },
    /// Normal form and homeomorphism class.
    Classify { input: String },
    /// Decide whether two manifolds are homeomorphic.
    Compare {
        left: String,
        right: String,
        /// Also run the ring-isomorphism search and exit 4 if it disagrees.
        #[arg(long)]
        oracle: bool,
    },
    /// List the homeomorphism classes over `Δⁿ × Δᵐ`.
    Enumerate(Dims),
    /// Count non-Bott classes, for one `(n, m)` or a table up to `--max`.
    Count {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Tabulate every `1 <= m <= n <= max`.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Cohomology ring presentation and graded ranks.
    Cohomology { input: String },
    /// Subtorus weights and the kernel lattice of the characteristic map.
    Kernel { input: String },
    /// Search for a graded ring isomorphism and compare with the classifier.
    OracleIso { left: String, right: String },
    /// Check a built-in equivariant homeomorphism witness.
    Witness {
        #[command(subcommand)]
        family: WitnessCmd,
    },
}

#[derive(Args)]
struct Dims {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// `b = (b, 0, ..., 0)` to `b = (b, ..., b)` over `Δⁿ × Δ¹`, `a * b = 2`.
    Spread {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// `r` ones to `n + 1 - r` ones, `s` twos fixed.
    FoldOnes(Fold),
    /// `s` twos to `m + 1 - s` twos, `r` ones fixed.
    FoldTwos(Fold),
}

#[derive(Args)]
struct Fold {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    r: usize,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }

    fn invalid(message: impl Display) -> Self {
        Failure { code: EXIT_INVALID, message: message.to_string() }
    }
}

/// Command output: rendered text plus the exit code to report.
struct Report {
    text: String,
    code: u8,
}

fn read_input(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::usage(format!("reading {arg}: {e}")))
}

fn parse_pair(arg: &str) -> Result<CharPair, Failure> {
    let text = read_input(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("malformed characteristic data: {e}")))
}

fn parse_valid_pair(arg: &str) -> Result<CharPair, Failure> {
    let cp = parse_pair(arg)?;
    cp.ensure_valid().map_err(Failure::invalid)?;
    Ok(cp)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

/// `key<TAB>value` lines, values as compact JSON.
fn tsv_fields(fields: &[(&str, String)]) -> String {
    fields.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
}

fn ok(text: String) -> Result<Report, Failure> {
    Ok(Report { text, code: 0 })
}

#[derive(Serialize)]
struct ValidateReport {
    input: CharPair,
    valid: bool,
    oracle_valid: bool,
    agreement: bool,
}

fn cmd_validate(input: &str, format: Format) -> Result<Report, Failure> {
    let cp = parse_pair(input)?;
    let valid = validate(&cp);
    let oracle_valid = validate_bruteforce(&cp);
    let r = ValidateReport { input: cp, valid, oracle_valid, agreement: valid == oracle_valid };
    let text = match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("input", compact(&r.input)),
            ("valid", r.valid.to_string()),
            ("oracle_valid", r.oracle_valid.to_string()),
            ("agreement", r.agreement.to_string()),
        ]),
    };
    Ok(Report { text, code: if r.agreement { 0 } else { EXIT_DISAGREE } })
}

#[derive(Serialize)]
struct ClassifyReport {
    input: CharPair,
    normal_form: CharPair,
    shape: Shape,
    swap_applied: bool,
    class: HomeoClass,
}

fn cmd_classify(input: &str, format: Format) -> Result<Report, Failure> {
    let cp = parse_valid_pair(input)?;
    let nf = normalize(&cp).map_err(Failure::invalid)?;
    let class = canonical_class(&cp).map_err(Failure::invalid)?;
    let r = ClassifyReport { input: cp, normal_form: nf.pair, shape: nf.shape, swap_applied: nf.swap_applied, class };
    ok(match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("input", compact(&r.input)),
            ("normal_form", compact(&r.normal_form)),
            ("shape", compact(&r.shape)),
            ("swap_applied", r.swap_applied.to_string()),
            ("class", r.class.to_string()),
        ]),
    })
}

#[derive(Serialize)]
struct OracleReport {
    bound: u32,
    result: IsoVerdict,
    agreement: bool,
}

#[derive(Serialize)]
struct CompareReport {
    left: HomeoClass,
    right: HomeoClass,
    #[serde(flatten)]
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

fn run_oracle(left: &CharPair, right: &CharPair, homeo: bool, bound: u32) -> Result<Option<OracleReport>, Failure> {
    let p = cohomology_presentation(left).map_err(Failure::invalid)?;
    let q = cohomology_presentation(right).map_err(Failure::invalid)?;
    if (p.n.max(p.m), p.n.min(p.m)) != (q.n.max(q.m), q.n.min(q.m)) {
        // different polytopes: the generator degrees already differ
        return Ok(None);
    }
    let (p, q) = if (p.n, p.m) == (q.n, q.m) { (p, q) } else { (swap_presentation(&p), q) };
    let result = ring_iso_search(&p, &q, bound).map_err(Failure::usage)?;
    let agreement = result.is_found() == homeo;
    Ok(Some(OracleReport { bound, result, agreement }))
}

/// The same ring with `x1` and `x2` exchanged.
fn swap_presentation(p: &Presentation) -> Presentation {
    Presentation { n: p.m, m: p.n, gen1: p.gen2.swap_variables(), gen2: p.gen1.swap_variables() }
}

fn cmd_compare(left: &str, right: &str, with_oracle: bool, bound: u32, format: Format) -> Result<Report, Failure> {
    let c1 = parse_valid_pair(left)?;
    let c2 = parse_valid_pair(right)?;
    let verdict = homeomorphic(&c1, &c2).map_err(Failure::invalid)?;
    let oracle = if with_oracle { run_oracle(&c1, &c2, verdict.homeomorphic, bound)? } else { None };
    let r = CompareReport {
        left: canonical_class(&c1).map_err(Failure::invalid)?,
        right: canonical_class(&c2).map_err(Failure::invalid)?,
        verdict,
        oracle,
    };
    let code = match &r.oracle {
        Some(o) if !o.agreement => EXIT_DISAGREE,
        _ => 0,
    };
    let text = match format {
        Format::Json => json(&r),
        Format::Tsv => {
            let mut fields = vec![
                ("homeomorphic", r.verdict.homeomorphic.to_string()),
                ("rule", r.verdict.rule.to_string()),
                ("detail", r.verdict.detail.clone()),
                ("left", r.left.to_string()),
                ("right", r.right.to_string()),
            ];
            if let Some(o) = &r.oracle {
                fields.push(("oracle", compact(&o.result)));
                fields.push(("agreement", o.agreement.to_string()));
            }
            tsv_fields(&fields)
        }
    };
    Ok(Report { text, code })
}

fn class_params(c: &HomeoClass) -> String {
    match c {
        HomeoClass::BottBaseN { a, .. } => format!("a={a:?}"),
        HomeoClass::BottBaseM { b, .. } => format!("b={b:?}"),
        HomeoClass::NonBott { s, r, twos, .. } => format!("s={s},r={r},twos={}", compact(twos).trim_matches('"')),
        _ => String::new(),
    }
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    m: usize,
    bound: u32,
    count: usize,
    classes: Vec<HomeoClass>,
}

fn cmd_enumerate(dims: &Dims, bound: u32, format: Format) -> Result<Report, Failure> {
    if dims.n == 0 || dims.m == 0 {
        return Err(Failure::usage("--n and --m must be at least 1"));
    }
    let classes = enumerate_classes(dims.n, dims.m, bound);
    let (n, m) = (dims.n.max(dims.m), dims.n.min(dims.m));
    let r = EnumerateReport { n, m, bound, count: classes.len(), classes };
    ok(match format {
        Format::Json => json(&r),
        Format::Tsv => {
            let mut s = String::from("family\tn\tm\tparams\trepresentative\n");
            for c in &r.classes {
                let (n, m) = c.dims();
                s.push_str(&format!("{}\t{n}\t{m}\t{}\t{}\n", c.family(), class_params(c), compact(&c.representative())));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    m: usize,
    nonbott_classes: usize,
}

fn cmd_count(n: Option<usize>, m: Option<usize>, max: Option<usize>, format: Format) -> Result<Report, Failure> {
    let rows: Vec<CountRow> = match (n, m, max) {
        (Some(n), Some(m), None) if n >= 1 && m >= 1 => vec![CountRow { n, m, nonbott_classes: count_nonbott(n, m) }],
        (None, None, Some(max)) if max >= 1 => (1..=max)
            .flat_map(|n| (1..=n).map(move |m| CountRow { n, m, nonbott_classes: count_nonbott(n, m) }))
            .collect(),
        _ => return Err(Failure::usage("give either --n and --m (both at least 1) or --max")),
    };
    ok(match format {
        Format::Json if rows.len() == 1 => json(&rows[0]),
        Format::Json => json(&rows),
        Format::Tsv => {
            let mut s = String::from("n\tm\tnonbott_classes\n");
            for r in &rows {
                s.push_str(&format!("{}\t{}\t{}\n", r.n, r.m, r.nonbott_classes));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct CohomologyReport {
    input: CharPair,
    presentation: Presentation,
    graded_ranks: GradedRanks,
    expected_ranks: Vec<usize>,
}

fn cmd_cohomology(input: &str, format: Format) -> Result<Report, Failure> {
    let cp = parse_valid_pair(input)?;
    let presentation = cohomology_presentation(&cp).map_err(Failure::invalid)?;
    let ranks = graded_ranks(&presentation);
    let expected = h_vector(cp.n, cp.m);
    let code = if ranks.ranks == expected && ranks.is_torsion_free() { 0 } else { EXIT_DISAGREE };
    let r = CohomologyReport { input: cp, presentation, graded_ranks: ranks, expected_ranks: expected };
    let text = match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("gen1", compact(&r.presentation.gen1)),
            ("gen2", compact(&r.presentation.gen2)),
            ("ranks", compact(&r.graded_ranks.ranks)),
            ("expected_ranks", compact(&r.expected_ranks)),
        ]),
    };
    Ok(Report { text, code })
}

#[derive(Serialize)]
struct KernelReport {
    input: CharPair,
    subtorus_weights: IntMatrix,
    kernel_basis: IntMatrix,
}

fn cmd_kernel(input: &str, format: Format) -> Result<Report, Failure> {
    let cp = parse_valid_pair(input)?;
    let weights = subtorus_weights(&cp);
    let kernel = kernel_lattice(&cp).map_err(Failure::invalid)?;
    let r = KernelReport { input: cp, subtorus_weights: weights, kernel_basis: kernel.basis().clone() };
    ok(match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("subtorus_weights", compact(&r.subtorus_weights)),
            ("kernel_basis", compact(&r.kernel_basis)),
        ]),
    })
}

#[derive(Serialize)]
struct OracleIsoReport {
    homeomorphic: bool,
    rule: String,
    bound: u32,
    result: IsoVerdict,
    agreement: bool,
}

fn cmd_oracle_iso(left: &str, right: &str, bound: u32, format: Format) -> Result<Report, Failure> {
    let c1 = parse_valid_pair(left)?;
    let c2 = parse_valid_pair(right)?;
    let verdict = homeomorphic(&c1, &c2).map_err(Failure::invalid)?;
    let Some(o) = run_oracle(&c1, &c2, verdict.homeomorphic, bound)? else {
        return Err(Failure::usage("the two inputs live over different polytopes"));
    };
    let r = OracleIsoReport {
        homeomorphic: verdict.homeomorphic,
        rule: verdict.rule.to_string(),
        bound,
        result: o.result,
        agreement: o.agreement,
    };
    let text = match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("homeomorphic", r.homeomorphic.to_string()),
            ("rule", r.rule.clone()),
            ("oracle", compact(&r.result)),
            ("agreement", r.agreement.to_string()),
        ]),
    };
    Ok(Report { text, code: if r.agreement { 0 } else { EXIT_DISAGREE } })
}

#[derive(Serialize)]
struct WitnessReport {
    #[serde(flatten)]
    triple: qtoric::oracle::WitnessTriple,
    passes: bool,
    homeomorphic: bool,
}

fn cmd_witness(family: &WitnessCmd, format: Format) -> Result<Report, Failure> {
    let family = match family {
        WitnessCmd::Spread { n, a, b } => WitnessFamily::Spread { n: *n, a: *a, b: *b },
        WitnessCmd::FoldOnes(f) => WitnessFamily::FoldOnes { n: f.n, m: f.m, s: f.s, r: f.r },
        WitnessCmd::FoldTwos(f) => WitnessFamily::FoldTwos { n: f.n, m: f.m, s: f.s, r: f.r },
    };
    let triple = builtin_witness(family).map_err(Failure::usage)?;
    let passes = witness_check(&triple.u, &triple.u_prime, &triple.witness).map_err(Failure::usage)?;
    let homeo = homeomorphic(&triple.source, &triple.target).map_err(Failure::invalid)?.homeomorphic;
    let r = WitnessReport { triple, passes, homeomorphic: homeo };
    let text = match format {
        Format::Json => json(&r),
        Format::Tsv => tsv_fields(&[
            ("source", compact(&r.triple.source)),
            ("target", compact(&r.triple.target)),
            ("passes", r.passes.to_string()),
            ("homeomorphic", r.homeomorphic.to_string()),
        ]),
    };
    Ok(Report { text, code: if passes && homeo { 0 } else { EXIT_DISAGREE } })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let (f, bound) = (cli.format, cli.bound);
    match &cli.command {
        Command::Validate { input } => cmd_validate(input, f),
        Command::Classify { input } => cmd_classify(input, f),
        Command::Compare { left, right, oracle } => cmd_compare(left, right, *oracle, bound, f),
        Command::Enumerate(dims) => cmd_enumerate(dims, bound, f),
        Command::Count { n, m, max } => cmd_count(*n, *m, *max, f),
        Command::Cohomology { input } => cmd_cohomology(input, f),
        Command::Kernel { input } => cmd_kernel(input, f),
        Command::OracleIso { left, right } => cmd_oracle_iso(left, right, bound, f),
        Command::Witness { family } => cmd_witness(family, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if out.write_all(report.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
