//! `rees-check`: verify grade and linear-type criteria for determinantal
//! ideals on concrete matrices read from JSON files.

mod spec;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc::{self, RecvTimeoutError, Sender};
use std::thread;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rees_core::detideal::{grade_profile, GradeProfile};
use rees_core::groebner::Ideal;
use rees_core::koszul::{
    buchsbaum_eisenbud_acyclic, koszul_strand, power_resolution, AcyclicityCertificate,
    GradedComplex,
};
use rees_core::poly::{make_ring, MonomialOrder, RingExt};
use rees_core::theorems::{
    grade_linear_forms, rees_equals_symmetric, rees_ideal, soundness_sweep, symmetric_ideal,
    theorem_11_report, theorem_12_report, TheoremReport, Verdict,
};
use serde_json::{json, Value};

use spec::{load_matrix_spec, InputError, LoadedMatrix};
use table::Table;

const DEFAULT_SEED: u64 = 20_261_015;

#[derive(Parser, Debug)]
#[command(name = "rees-check", version, about = "Grade and linear-type checks for determinantal ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the JSON report instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for independent sub-computations.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Abort after this many seconds with a partial report (exit 3).
    #[arg(long, global = true, value_name = "SECONDS")]
    timeout: Option<f64>,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Matrix specification (JSON).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Grades of I_k(M) for k = 1..m.
    GradeProfile(InputArgs),
    /// Grade equivalence: minor-ideal bounds versus grade (f_1..f_m)S = m.
    CheckThm1(InputArgs),
    /// Linear type of I_m(M) for an m x (m+1) matrix.
    CheckThm2(InputArgs),
    /// Defining ideal of the Rees algebra of I_m(M) (n = m+1).
    ReesIdeal(InputArgs),
    /// Matrices of the degree-L strand of the Koszul complex on f_1..f_m.
    KoszulStrand {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "L")]
        degree: usize,
    },
    /// Strand resolving the R-th power of I_m(M), with its certificate.
    ResolvePower {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "r", value_name = "R")]
        power: usize,
    },
    /// Reduced Gröbner basis of the ideal generated by --gens.
    Gb {
        /// Comma-separated generators.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
        /// Comma-separated variable names.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, default_value_t = 32003)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Randomized soundness sweep; the seed comes from REES_CHECK_SEED.
    Selftest {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OrderArg {
    Lex,
    Grevlex,
}

/// A finished report.
struct Output {
    json: Value,
    text: String,
    code: u8,
}

/// An intermediate result, kept for partial reports on timeout.
struct Stage {
    name: String,
    json: Value,
}

enum Message {
    Stage(Stage),
    Done(Result<Output, InputError>),
}

struct Progress {
    tx: Sender<Message>,
}

impl Progress {
    fn stage(&self, name: &str, json: Value) {
        let _ = self.tx.send(Message::Stage(Stage {
            name: name.to_string(),
            json,
        }));
    }
}

fn describe(loaded: &LoadedMatrix) -> String {
    let field = match loaded.ring.characteristic() {
        0 => "QQ".to_string(),
        p => format!("GF({p})"),
    };
    let vars: Vec<String> = loaded
        .ring
        .base_vars()
        .into_iter()
        .map(|i| loaded.ring.var_names()[i].clone())
        .collect();
    format!(
        "{}: {}x{} matrix over {field}[{}]\n",
        loaded.label,
        loaded.matrix.rows(),
        loaded.matrix.cols(),
        vars.join(", ")
    )
}

fn matrix_json(loaded: &LoadedMatrix) -> Value {
    let m = &loaded.matrix;
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    json!({ "label": loaded.label, "rows": m.rows(), "cols": m.cols(), "matrix": rows })
}

fn profile_table(profile: &GradeProfile, rows: usize, offset: usize) -> String {
    let mut t = Table::new(["k", "grade I_k(M)", "bound"]);
    for (k, g) in &profile.0 {
        t.row([k.to_string(), g.to_string(), format!(">= {}", rows - k + offset)]);
    }
    t.render()
}

fn report_text(report: &TheoremReport) -> String {
    let mut t = Table::new(["side", "condition", "expected", "computed", "pass"]);
    for c in &report.conditions {
        t.row([
            c.side.to_string(),
            c.label.clone(),
            c.expected.to_string(),
            c.computed.to_string(),
            if c.pass { "yes" } else { "no" }.to_string(),
        ]);
    }
    format!("{}\ntheorem {}: {}\n", t.render(), report.theorem, report.verdict)
}

fn verdict_code(report: &TheoremReport) -> u8 {
    if report.verdict == Verdict::Violation {
        1
    } else {
        0
    }
}

fn complex_text(c: &GradedComplex) -> String {
    let mut out = format!("ranks (F_0 first): {:?}\n", c.ranks());
    for k in 1..=c.length() {
        let a = c.map(k);
        out.push_str(&format!("\nA_{k}: F_{k} -> F_{} ({}x{})\n", k - 1, a.rows(), a.cols()));
        if a.rows() == 0 || a.cols() == 0 {
            continue;
        }
        let mut t = Table::new(std::iter::once(String::new()).chain(c.labels(k).iter().cloned()));
        for i in 0..a.rows() {
            let cells = (0..a.cols()).map(|j| a.get(i, j).to_string());
            t.row(std::iter::once(c.labels(k - 1)[i].clone()).chain(cells));
        }
        out.push_str(&t.render());
    }
    if let Some(eps) = c.augmentation() {
        out.push_str("\naugmentation F_0 -> R:\n");
        let mut t = Table::new(["basis", "image"]);
        for (label, p) in c.labels(0).iter().zip(eps.entries()) {
            t.row([label.clone(), p.to_string()]);
        }
        out.push_str(&t.render());
    }
    out
}

fn certificate_text(cert: &AcyclicityCertificate) -> String {
    let mut t = Table::new(["position", "expected rank", "rank", "grade", "needed", "pass"]);
    for p in &cert.positions {
        t.row([
            p.position.to_string(),
            p.expected_rank.to_string(),
            p.computed_rank.to_string(),
            p.grade.to_string(),
            format!(">= {}", p.position),
            if p.pass { "yes" } else { "no" }.to_string(),
        ]);
    }
    format!(
        "\nacyclicity certificate:\n{}certificate: {}\n",
        t.render(),
        if cert.pass { "PASS" } else { "FAIL" }
    )
}

fn require_rees_shape(loaded: &LoadedMatrix) -> Result<(), InputError> {
    let m = &loaded.matrix;
    if m.cols() != m.rows() + 1 {
        return Err(InputError(format!(
            "this command needs an m x (m+1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn execute(command: &Command, progress: &Progress) -> Result<Output, InputError> {
    match command {
        Command::GradeProfile(args) => {
            let loaded = load_matrix_spec(&args.input)?;
            let profile = grade_profile(&loaded.matrix)?;
            let rows = loaded.matrix.rows();
            Ok(Output {
                text: format!("{}\n{}", describe(&loaded), profile_table(&profile, rows, 1)),
                json: json!({
                    "command": "grade-profile",
                    "input": matrix_json(&loaded),
                    "profile": profile,
                }),
                code: 0,
            })
        }
        Command::CheckThm1(args) => {
            let loaded = load_matrix_spec(&args.input)?;
            let m = &loaded.matrix;
            let profile = grade_profile(m)?;
            progress.stage("grade profile", json!(profile));
            let forms = grade_linear_forms(m)?;
            progress.stage("grade of (f)S", json!(forms));
            let report = theorem_11_report(m.rows(), &profile, forms);
            Ok(Output {
                text: format!("{}\n{}", describe(&loaded), report_text(&report)),
                code: verdict_code(&report),
                json: json!({
                    "command": "check-thm1",
                    "input": matrix_json(&loaded),
                    "report": report,
                }),
            })
        }
        Command::CheckThm2(args) => {
            let loaded = load_matrix_spec(&args.input)?;
            require_rees_shape(&loaded)?;
            let m = &loaded.matrix;
            let profile = grade_profile(m)?;
            progress.stage("grade profile", json!(profile));
            let forms = grade_linear_forms(m)?;
            progress.stage("grade of (f)S", json!(forms));
            let kernel = rees_equals_symmetric(m)?;
            progress.stage("Rees kernel = (f)S", json!(kernel));
            let report = theorem_12_report(m.rows(), &profile, forms, kernel);
            Ok(Output {
                text: format!("{}\n{}", describe(&loaded), report_text(&report)),
                code: verdict_code(&report),
                json: json!({
                    "command": "check-thm2",
                    "input": matrix_json(&loaded),
                    "report": report,
                }),
            })
        }
        Command::ReesIdeal(args) => {
            let loaded = load_matrix_spec(&args.input)?;
            require_rees_shape(&loaded)?;
            let m = &loaded.matrix;
            let rees = rees_ideal(m)?;
            let gb: Vec<String> = rees.groebner_basis().iter().map(|p| p.to_string()).collect();
            progress.stage("Rees ideal", json!(gb));
            let equal = rees.equals(&symmetric_ideal(m)?)?;
            let mut text = describe(&loaded);
            text.push_str("\nreduced Gröbner basis (grevlex) of the Rees ideal:\n");
            for g in &gb {
                text.push_str(&format!("  {g}\n"));
            }
            text.push_str(&format!("\nequal to (f_1..f_m)S: {}\n", if equal { "yes" } else { "no" }));
            Ok(Output {
                text,
                json: json!({
                    "command": "rees-ideal",
                    "input": matrix_json(&loaded),
                    "groebner_basis": gb,
                    "equals_symmetric": equal,
                }),
                code: 0,
            })
        }
        Command::KoszulStrand { input, degree } => {
            let loaded = load_matrix_spec(&input.input)?;
            let strand = koszul_strand(&loaded.matrix, *degree)?;
            let report = strand.to_report(Some(*degree));
            progress.stage("strand", json!(report));
            let cert = buchsbaum_eisenbud_acyclic(&strand);
            Ok(Output {
                text: format!(
                    "{}degree {degree} strand\n{}{}",
                    describe(&loaded),
                    complex_text(&strand),
                    certificate_text(&cert)
                ),
                json: json!({
                    "command": "koszul-strand",
                    "input": matrix_json(&loaded),
                    "strand": report,
                    "certificate": cert,
                }),
                code: 0,
            })
        }
        Command::ResolvePower { input, power } => {
            let loaded = load_matrix_spec(&input.input)?;
            require_rees_shape(&loaded)?;
            let complex = power_resolution(&loaded.matrix, *power)?;
            let report = complex.to_report(Some(*power));
            progress.stage("complex", json!(report));
            let cert = buchsbaum_eisenbud_acyclic(&complex);
            Ok(Output {
                text: format!(
                    "{}resolution candidate for I^{power}\n{}{}",
                    describe(&loaded),
                    complex_text(&complex),
                    certificate_text(&cert)
                ),
                json: json!({
                    "command": "resolve-power",
                    "input": matrix_json(&loaded),
                    "power": power,
                    "complex": report,
                    "certificate": cert,
                }),
                code: 0,
            })
        }
        Command::Gb {
            gens,
            vars,
            characteristic,
            order,
        } => {
            let order = match order {
                OrderArg::Lex => MonomialOrder::Lex,
                OrderArg::Grevlex => MonomialOrder::Grevlex,
            };
            let ring = make_ring(*characteristic, vars, 0, order.clone())?;
            let polys = gens
                .iter()
                .map(|g| ring.parse(g).map_err(|e| InputError(format!("generator \"{g}\": {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = Ideal::new(&ring, polys)?;
            let gb: Vec<String> = ideal.groebner_basis().iter().map(|p| p.to_string()).collect();
            let mut text = format!("reduced Gröbner basis ({}):\n", order.name());
            for g in &gb {
                text.push_str(&format!("  {g}\n"));
            }
            Ok(Output {
                text,
                json: json!({
                    "command": "gb",
                    "characteristic": characteristic,
                    "vars": vars,
                    "order": order.name(),
                    "groebner_basis": gb,
                }),
                code: 0,
            })
        }
        Command::Selftest { count } => {
            let seed = match std::env::var("REES_CHECK_SEED") {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| InputError(format!("REES_CHECK_SEED is not an integer: {s:?}")))?,
                Err(_) => DEFAULT_SEED,
            };
            let summary = soundness_sweep(seed, *count)?;
            let mut t = Table::new(["check", "EQUIV_BOTH_TRUE", "EQUIV_BOTH_FALSE"]);
            t.row([
                "grade equivalence".to_string(),
                summary.theorem_11_both_true.to_string(),
                summary.theorem_11_both_false.to_string(),
            ]);
            t.row([
                "linear type".to_string(),
                summary.theorem_12_both_true.to_string(),
                summary.theorem_12_both_false.to_string(),
            ]);
            let mut text = format!(
                "seed {seed}: {} matrices, {} elementary operations\n\n{}",
                summary.matrices,
                summary.ops_checked,
                t.render()
            );
            for f in &summary.failures {
                text.push_str(&format!("FAILURE: {f}\n"));
            }
            text.push_str(if summary.pass() { "selftest: PASS\n" } else { "selftest: FAIL\n" });
            Ok(Output {
                text,
                code: if summary.pass() { 0 } else { 1 },
                json: json!({ "command": "selftest", "summary": summary }),
            })
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::GradeProfile(_) => "grade-profile",
        Command::CheckThm1(_) => "check-thm1",
        Command::CheckThm2(_) => "check-thm2",
        Command::ReesIdeal(_) => "rees-ideal",
        Command::KoszulStrand { .. } => "koszul-strand",
        Command::ResolvePower { .. } => "resolve-power",
        Command::Gb { .. } => "gb",
        Command::Selftest { .. } => "selftest",
    }
}

fn write_out(cli: &Cli, json: &Value) -> Result<(), InputError> {
    if let Some(path) = &cli.out {
        let text = serde_json::to_string_pretty(json).expect("JSON values serialize");
        std::fs::write(path, text + "\n")
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit(cli: &Cli, output: Output) -> ExitCode {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&output.json).expect("JSON values serialize"));
    } else {
        print!("{}", output.text);
    }
    if let Err(e) = write_out(cli, &output.json) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(output.code)
}

fn emit_timeout(cli: &Cli, seconds: f64, stages: &[Stage]) -> ExitCode {
    let json = json!({
        "command": command_name(&cli.command),
        "status": "timeout",
        "timeout_seconds": seconds,
        "completed_stages": stages
            .iter()
            .map(|s| json!({ "stage": s.name, "result": s.json }))
            .collect::<Vec<_>>(),
    });
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&json).expect("JSON values serialize"));
    } else {
        println!("timed out after {seconds} s; completed stages:");
        for s in stages {
            println!("  {}: {}", s.name, s.json);
        }
        if stages.is_empty() {
            println!("  (none)");
        }
    }
    let _ = write_out(cli, &json);
    eprintln!("error: computation exceeded --timeout {seconds}");
    ExitCode::from(3)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.timeout {
        if !(t.is_finite() && t > 0.0) {
            eprintln!("error: --timeout must be a positive number of seconds");
            return ExitCode::from(2);
        }
    }
    let pool = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(p) => Some(p),
            Err(e) => {
                eprintln!("error: cannot start {n} worker threads: {e}");
                return ExitCode::from(2);
            }
        },
        None => None,
    };

    let (tx, rx) = mpsc::channel();
    let command = cli.command.clone();
    thread::spawn(move || {
        let progress = Progress { tx: tx.clone() };
        let result = match &pool {
            Some(p) => p.install(|| execute(&command, &progress)),
            None => execute(&command, &progress),
        };
        let _ = tx.send(Message::Done(result));
    });

    let deadline = cli.timeout.map(|s| (s, Instant::now() + Duration::from_secs_f64(s)));
    let mut stages = Vec::new();
    loop {
        let message = match deadline {
            Some((seconds, at)) => match rx.recv_timeout(at.saturating_duration_since(Instant::now())) {
                Ok(m) => m,
                Err(RecvTimeoutError::Timeout) => return emit_timeout(&cli, seconds, &stages),
                Err(RecvTimeoutError::Disconnected) => break,
            },
            None => match rx.recv() {
                Ok(m) => m,
                Err(_) => break,
            },
        };
        match message {
            Message::Stage(s) => stages.push(s),
            Message::Done(Ok(output)) => return emit(&cli, output),
            Message::Done(Err(e)) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    eprintln!("error: internal failure in {}", command_name(&cli.command));
    ExitCode::from(1)
}
