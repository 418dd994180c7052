use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polarfol::classify::{
    classify_join, closed_form, compute_moduli, cross_check_detail, grid_preset, scan_codim1, scan_irreducible,
    table1, ClassificationRecord, ScanRow, GRID_PRESETS,
};
use polarfol::clifford::{build_clifford_system, verify_clifford, verify_commutant};
use polarfol::export::{matrix_to_json, render, table1_to_csv, table1_to_json, Format};
use polarfol::fkm::{verify_munzner, verify_munzner_symbolic, FkmFoliation, MunznerReport};
use polarfol::liealg::{
    brute_force_j, in_su2, j_moduli, weights_of, AutAction, CartanElement, Family, FkmParams, Membership,
    RepDescriptor,
};
use polarfol::quat::{preserves_fkm, realize_witness, verify_triple, MatrixModel, PreservationMode};
use polarfol::rational::{from_text, one};
use polarfol::Error;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CATALOG: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "polarfol", version, about = "Quaternionic structures preserving polar foliations of spheres")]
struct Cli {
    /// Worker threads for parallel checks; falls back to POLARFOL_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moduli counts and structures for one entry.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Raw and canonical complex structures in the torus.
    #[command(subcommand)]
    Bruteforce(BruteCmd),
    /// Compare closed forms with the exhaustive search over a grid.
    Crosscheck {
        #[arg(long, value_parser = GRID_PRESETS)]
        grid: String,
        #[arg(long)]
        json: bool,
    },
    /// Build or verify a symmetric Clifford system.
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Identities of the Cartan-Münzner quartic.
    #[command(subcommand)]
    Fkm(FkmCmd),
    /// Realize a structure as matrices and verify it.
    #[command(subcommand)]
    Quat(QuatCmd),
    /// Per-n existence of inhomogeneous foliations on HP^n.
    Scan {
        kind: ScanKind,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Classical rows of the summary table.
    Table1 {
        #[arg(long)]
        max_p: usize,
        #[arg(long)]
        max_q: usize,
        #[command(flatten)]
        out: OutputFlags,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanKind {
    Codim1,
    Irreducible,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Source {
    /// Exhaustive search where available, closed form otherwise.
    #[default]
    Auto,
    Closed,
    Computed,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct OutputFlags {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

impl OutputFlags {
    fn format(&self) -> Option<Format> {
        if self.json {
            Some(Format::Json)
        } else if self.csv {
            Some(Format::Csv)
        } else {
            None
        }
    }
}

#[derive(Args, Debug, Clone)]
struct SpaceArgs {
    /// Family tag such as AIII, or a full descriptor such as 'AIII(2,3)'.
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct FkmArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, conflicts_with_all = ["kplus", "kminus"], required_unless_present_all = ["kplus", "kminus"])]
    k: Option<usize>,
    #[arg(long, requires = "kminus")]
    kplus: Option<usize>,
    #[arg(long, requires = "kplus")]
    kminus: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum ClassifyCmd {
    Space {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t)]
        source: Source,
        #[command(flatten)]
        out: OutputFlags,
    },
    Fkm {
        #[command(flatten)]
        fkm: FkmArgs,
        #[arg(long, value_enum, default_value_t)]
        source: Source,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Summands separated by '*', e.g. 'S(4)*AIII(2,2)'.
    Join {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        source: Source,
        #[command(flatten)]
        out: OutputFlags,
    },
}

#[derive(Subcommand, Debug)]
enum BruteCmd {
    JModuli {
        #[command(flatten)]
        space: SpaceArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CliffordCmd {
    Build {
        #[command(flatten)]
        fkm: FkmArgs,
        /// Write the matrices as JSON to this file instead of a summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[command(flatten)]
        fkm: FkmArgs,
    },
}

#[derive(Subcommand, Debug)]
enum FkmCmd {
    CheckPde {
        #[command(flatten)]
        fkm: FkmArgs,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Required unless --symbolic is given.
        #[arg(long, required_unless_present = "symbolic")]
        seed: Option<u64>,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum QuatCmd {
    Verify {
        /// Family tag or descriptor; use FKM with --m and --k/--kplus/--kminus.
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        kplus: Option<usize>,
        #[arg(long)]
        kminus: Option<usize>,
        /// Torus coordinates of H, comma separated, e.g. '0,0,-1,-1'.
        #[arg(long, allow_hyphen_values = true)]
        witness: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Needed when the module is too large for the symbolic check.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Outcome of a command: text for stdout and whether verification passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Parse(_) | Error::NotUnitQuaternion(_) | Error::DimensionMismatch(_) => EXIT_USAGE,
        Error::Io(_) => EXIT_FAILURE,
        _ => EXIT_CATALOG,
    }
}

fn space_rep(a: &SpaceArgs) -> Result<RepDescriptor, Error> {
    if a.family.contains('(') {
        if a.p.is_some() || a.q.is_some() {
            return Err(Error::Usage("give parameters either inside the descriptor or as --p/--q".into()));
        }
        return RepDescriptor::parse(&a.family);
    }
    let params: Vec<usize> = [a.p, a.q].into_iter().flatten().collect();
    RepDescriptor::new(Family::from_parts(&a.family, &params)?)
}

fn fkm_params(m: usize, k: Option<usize>, kplus: Option<usize>, kminus: Option<usize>) -> Result<FkmParams, Error> {
    let p = match (k, kplus, kminus) {
        (Some(k), None, None) => FkmParams::single(m, k),
        (None, Some(a), Some(b)) => FkmParams::split(m, a, b),
        _ => return Err(Error::Usage("give either --k or both --kplus and --kminus".into())),
    };
    p.validate()?;
    Ok(p)
}

fn fkm_args(a: &FkmArgs) -> Result<FkmParams, Error> {
    fkm_params(a.m, a.k, a.kplus, a.kminus)
}

fn record(rep: &RepDescriptor, source: Source) -> Result<ClassificationRecord, Error> {
    match source {
        Source::Closed => closed_form(rep),
        Source::Computed => compute_moduli(rep),
        Source::Auto if rep.tabulated_only => closed_form(rep),
        Source::Auto => compute_moduli(rep),
    }
}

fn record_text(r: &ClassificationRecord) -> String {
    let mut s = String::new();
    let n = r.n.map_or("-".to_string(), |n| n.to_string());
    let prov = serde_json::to_value(r.provenance).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    let _ = writeln!(s, "{}  dim={} rank={} n={}  N_J={} N_S={}  provenance={}", r.descriptor, r.dim, r.rank, n, r.n_j, r.n_s, prov);
    for (i, e) in r.structures.iter().enumerate() {
        let h = e.h.as_ref().map_or("-".to_string(), |h| format!("({})", h.join(", ")));
        let _ = writeln!(s, "  [{}] H={} witness={} homogeneous={}", i + 1, h, e.witness, e.homogeneous);
    }
    let _ = writeln!(s, "  group: {}", r.group);
    s
}

fn emit_records(recs: &[ClassificationRecord], out: OutputFlags) -> Result<Outcome, Error> {
    Ok(Outcome::ok(match out.format() {
        Some(f) => render(recs, f)?,
        None => recs.iter().map(record_text).collect(),
    }))
}

fn run_classify(cmd: &ClassifyCmd) -> Result<Outcome, Error> {
    match cmd {
        ClassifyCmd::Space { space, source, out } => emit_records(&[record(&space_rep(space)?, *source)?], *out),
        ClassifyCmd::Fkm { fkm, source, out } => {
            let rep = RepDescriptor::new(Family::Fkm(fkm_args(fkm)?))?;
            emit_records(&[record(&rep, *source)?], *out)
        }
        ClassifyCmd::Join { spec, source, out } => {
            let computed = !matches!(source, Source::Closed);
            emit_records(&[classify_join(spec, computed)?], *out)
        }
    }
}

fn h_text(h: &CartanElement) -> String {
    format!("({})", h.to_text().join(", "))
}

fn run_brute(cmd: &BruteCmd) -> Result<Outcome, Error> {
    let BruteCmd::JModuli { space } = cmd;
    let rep = space_rep(space)?;
    let raw = brute_force_j(&rep)?;
    let classes = j_moduli(&rep)?;
    let mut s = String::new();
    let _ = writeln!(s, "{}  torus={} raw={} classes={}", rep.family, rep.torus_dim(), raw.len(), classes.len());
    for (i, h) in classes.iter().enumerate() {
        let verdict = match in_su2(h, &rep) {
            Membership::Member(w) => format!("member {}", polarfol::classify::record::witness_summary(&w)),
            Membership::NotMember(r) => format!("not-member {r}"),
            Membership::Unknown => "unknown".into(),
        };
        let _ = writeln!(s, "  [{}] H={} {}", i + 1, h_text(h), verdict);
    }
    let _ = writeln!(s, "  group: {}", AutAction::of(&rep).describe());
    Ok(Outcome::ok(s))
}

fn run_crosscheck(grid: &str, json: bool) -> Result<Outcome, Error> {
    let reps = grid_preset(grid)?;
    let checks = reps.iter().map(cross_check_detail).collect::<Result<Vec<_>, _>>()?;
    let passed = checks.iter().all(|c| c.agrees());
    let text = if json {
        let rows: Vec<serde_json::Value> = checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "descriptor": c.descriptor,
                    "closed": {"N_J": c.closed.0, "N_S": c.closed.1},
                    "computed": {"N_J": c.computed.0, "N_S": c.computed.1},
                    "agrees": c.agrees(),
                })
            })
            .collect();
        serde_json::to_string_pretty(&rows).map_err(|e| Error::Io(e.to_string()))? + "\n"
    } else {
        let mut s = String::new();
        for c in &checks {
            let _ = writeln!(
                s,
                "{:<14} closed=({},{}) computed=({},{}) {}",
                c.descriptor,
                c.closed.0,
                c.closed.1,
                c.computed.0,
                c.computed.1,
                if c.agrees() { "ok" } else { "MISMATCH" }
            );
        }
        let bad = checks.iter().filter(|c| !c.agrees()).count();
        let _ = writeln!(s, "{} entries, {} mismatches", checks.len(), bad);
        s
    };
    Ok(Outcome { text, passed })
}

fn run_clifford(cmd: &CliffordCmd) -> Result<Outcome, Error> {
    match cmd {
        CliffordCmd::Build { fkm, out } => {
            let p = fkm_args(fkm)?;
            let sys = build_clifford_system(p)?;
            let mut s = String::new();
            let _ = writeln!(s, "{p}  order={} delta={} matrices={} commutant={:?}", sys.order(), sys.delta(), sys.matrices.len(), sys.commutant_type);
            if let Some(path) = out {
                let body: Vec<String> = sys.matrices.iter().map(matrix_to_json).collect();
                let text = format!("{{\"m\":{},\"order\":{},\"P\":[{}]}}\n", sys.m, sys.order(), body.join(","));
                std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let _ = writeln!(s, "wrote {}", path.display());
            }
            Ok(Outcome::ok(s))
        }
        CliffordCmd::Verify { fkm } => {
            let p = fkm_args(fkm)?;
            let sys = build_clifford_system(p)?;
            let rel = verify_clifford(&sys);
            let com = verify_commutant(&sys);
            let mut s = String::new();
            let _ = writeln!(s, "{p}  order={} relations checked={} failures={}", sys.order(), rel.checked, rel.failures.len());
            let _ = writeln!(s, "commutant generators checked={} failures={}", com.checked, com.failures.len());
            for f in rel.failures.iter().chain(&com.failures) {
                let _ = writeln!(s, "  FAIL {f}");
            }
            Ok(Outcome { text: s, passed: rel.passed() && com.passed() })
        }
    }
}

fn munzner_text(r: &MunznerReport) -> String {
    let mut s = String::new();
    let seed = r.seed.map_or("-".to_string(), |x| x.to_string());
    let _ = writeln!(
        s,
        "{}  order={} m+={} m-={} laplacian=8(m- - m+)={} seed={}",
        r.foliation, r.order, r.m_plus, r.m_minus, r.laplacian_coefficient, seed
    );
    for c in &r.checks {
        let _ = writeln!(
            s,
            "  {:<40} {:?} trials={} {}",
            c.identity,
            c.mode,
            c.trials,
            if c.passed { "pass" } else { "FAIL" }
        );
    }
    s
}

fn run_fkm(cmd: &FkmCmd) -> Result<Outcome, Error> {
    let FkmCmd::CheckPde { fkm, trials, seed, symbolic, json } = cmd;
    let f = FkmFoliation::new(fkm_args(fkm)?)?;
    let report = if *symbolic {
        verify_munzner_symbolic(&f)?
    } else {
        let seed = seed.ok_or_else(|| Error::Usage("--seed is required for sampled checks".into()))?;
        verify_munzner(&f, *trials, seed)?
    };
    let text = if *json {
        serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))? + "\n"
    } else {
        munzner_text(&report)
    };
    Ok(Outcome { text, passed: report.passed() })
}

fn parse_h(s: &str) -> Result<CartanElement, Error> {
    s.split(',')
        .map(|t| from_text(t.trim()).ok_or_else(|| Error::Parse(format!("bad rational '{t}' in witness"))))
        .collect::<Result<Vec<_>, _>>()
        .map(CartanElement)
}

fn run_quat(cmd: &QuatCmd) -> Result<Outcome, Error> {
    let QuatCmd::Verify { family, p, q, m, k, kplus, kminus, witness, trials, seed } = cmd;
    let rep = if family.eq_ignore_ascii_case("fkm") {
        let m = m.ok_or_else(|| Error::Usage("FKM needs --m".into()))?;
        RepDescriptor::new(Family::Fkm(fkm_params(m, *k, *kplus, *kminus)?))?
    } else {
        space_rep(&SpaceArgs { family: family.clone(), p: *p, q: *q })?
    };
    let h = parse_h(witness)?;
    if h.len() != rep.torus_dim() {
        return Err(Error::DimensionMismatch(format!("{} needs {} torus coordinates, got {}", rep.family, rep.torus_dim(), h.len())));
    }
    let mut s = String::new();
    let mut passed = true;
    let weights = weights_of(&rep)?;
    let complex = weights.iter().all(|w| {
        let v = w.eval(&h);
        v == one() || -v == one()
    });
    let _ = writeln!(s, "{}  H={}", rep.family, h_text(&h));
    let _ = writeln!(s, "  complex structure (all weights +-1): {}", complex);
    passed &= complex;
    let w = match in_su2(&h, &rep) {
        Membership::Member(w) => w,
        Membership::NotMember(r) => {
            let _ = writeln!(s, "  su2 membership: rejected ({r})");
            return Ok(Outcome { text: s, passed: false });
        }
        Membership::Unknown => {
            return Err(Error::UnknownMembership { descriptor: rep.family.to_string(), element: h_text(&h) })
        }
    };
    let _ = writeln!(s, "  su2 membership: {}", polarfol::classify::record::witness_summary(&w));
    let model = match rep.fkm() {
        Some(p) => MatrixModel::Fkm(Box::new(FkmFoliation::new(p)?)),
        None => MatrixModel::Classical(rep.clone()),
    };
    let triple = realize_witness(&w, &model)?;
    let tr = verify_triple(&triple);
    let _ = writeln!(s, "  triple order={} relations: {}", triple.order(), if tr.passed() { "pass" } else { "FAIL" });
    for c in tr.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(s, "    FAIL {}", c.name);
    }
    passed &= tr.passed();
    if let MatrixModel::Fkm(f) = &model {
        let mode = match (PreservationMode::auto(f.dim(), *trials, 0), seed) {
            (PreservationMode::Symbolic, _) => PreservationMode::Symbolic,
            (PreservationMode::Sampled { .. }, Some(seed)) => PreservationMode::Sampled { trials: *trials, seed: *seed },
            (PreservationMode::Sampled { .. }, None) => {
                return Err(Error::Usage(format!("order {} needs sampling; pass --seed", f.dim())))
            }
        };
        let pr = preserves_fkm(f, &triple, mode)?;
        let flags: Vec<&str> = pr.generators.iter().map(|&b| if b { "pass" } else { "FAIL" }).collect();
        let _ = writeln!(s, "  <grad F, J_i x> = 0 ({mode:?}): {}", flags.join(" "));
        passed &= pr.passed();
    }
    Ok(Outcome { text: s, passed })
}

fn scan_text(kind: ScanKind, rows: &[ScanRow], out: OutputFlags) -> Result<String, Error> {
    if rows.is_empty() {
        return Err(Error::Usage("--max-n must be at least 1".into()));
    }
    Ok(match out.format() {
        Some(Format::Json) => serde_json::to_string_pretty(rows).map_err(|e| Error::Io(e.to_string()))? + "\n",
        Some(Format::Csv) => {
            let mut s = String::from("n,exists,undecided,witness\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{}", r.n, r.exists, r.undecided, r.witness.as_deref().unwrap_or(""));
            }
            s
        }
        None => {
            let name = match kind {
                ScanKind::Codim1 => "codim1",
                ScanKind::Irreducible => "irreducible",
            };
            let mut s = String::new();
            for r in rows {
                let mark = if r.undecided { " UNDECIDED" } else { "" };
                let wit = r.witness.as_deref().map_or(String::new(), |w| format!(" via {w}"));
                let _ = writeln!(s, "{name} n={} {}{}{}", r.n, r.exists, mark, wit);
            }
            let trues: Vec<String> = rows.iter().filter(|r| r.exists).map(|r| r.n.to_string()).collect();
            let _ = writeln!(s, "true at: {}", trues.join(","));
            s
        }
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Classify(c) => run_classify(c),
        Command::Bruteforce(c) => run_brute(c),
        Command::Crosscheck { grid, json } => run_crosscheck(grid, *json),
        Command::Clifford(c) => run_clifford(c),
        Command::Fkm(c) => run_fkm(c),
        Command::Quat(c) => run_quat(c),
        Command::Scan { kind, max_n, out } => {
            let rows = match kind {
                ScanKind::Codim1 => scan_codim1(*max_n),
                ScanKind::Irreducible => scan_irreducible(*max_n),
            };
            Ok(Outcome::ok(scan_text(*kind, &rows, *out)?))
        }
        Command::Table1 { max_p, max_q, out } => {
            let rows = table1(*max_p, *max_q)?;
            let text = match out.format() {
                Some(Format::Json) => table1_to_json(&rows)?,
                Some(Format::Csv) => table1_to_csv(&rows)?,
                None => {
                    if rows.is_empty() {
                        return Err(Error::Usage("no table rows in range".into()));
                    }
                    let mut s = String::new();
                    for e in &rows {
                        let _ = writeln!(s, "{:<24} {:<12} N_S={}  ({})", e.space, e.descriptor, e.closed, e.condition);
                    }
                    s
                }
            };
            let passed = rows.iter().all(|e| e.agrees());
            Ok(Outcome { text, passed })
        }
    }
}

fn threads(cli: &Cli) -> Result<Option<usize>, Error> {
    if let Some(n) = cli.threads {
        return Ok(Some(n));
    }
    match std::env::var("POLARFOL_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Usage(format!("POLARFOL_THREADS must be a non-negative integer, got '{v}'"))),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let n_threads = match threads(&cli) {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(n) = n_threads.filter(|&n| n > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    eprintln!("config: polarfol {} threads={}", args.join(" "), rayon::current_num_threads());
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.text);
            if o.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
