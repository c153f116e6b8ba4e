//! Command-line surface for the Boolean function class toolkit.
//!
//! Exit codes: 0 on success / verified, 1 on verification failure, 2 on
//! usage or parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use clonoid::{
    classify, closure_oracle, enumerate_descriptors, gfp, left_stable, parse_fn, print_fn,
    print_table, right_stable, sig_table, verify_table3, BoolFn, ClassDescriptor, CloneId, FnClass,
    Verdict, ALL_CLONES,
};
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::process::ExitCode;

const ENV_CAP: &str = "CLONOID_ARITY_CAP";

#[derive(Parser)]
#[command(
    name = "clonoid",
    version,
    about = "Boolean function classes: invariants, closures, stability"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants and clone memberships of functions
    Analyze(AnalyzeArgs),
    /// Name the stable closure of a generator set
    Classify(ClassifyArgs),
    /// Classify a closure and optionally cross-check with the brute-force oracle
    Closure(ClosureArgs),
    /// Run a single right/left stability check of a class against a clone
    Stability(StabilityArgs),
    /// Verify the full stability table at bounded arity
    Table3(Table3Args),
    /// Analyze and classify operations over GF(p)
    Gfp(GfpArgs),
    /// Emit the lattice of class descriptors (optionally as DOT)
    Lattice(LatticeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Function literals: "x1*x2 + x3 + 1", "tt:0b01101001", "tt:0x69@3"
    #[arg(required = true)]
    functions: Vec<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Function literals; an empty list classifies to Empty
    functions: Vec<String>,
}

#[derive(Args)]
struct ClosureArgs {
    functions: Vec<String>,
    /// Arity cap for the closure oracle (default from CLONOID_ARITY_CAP or 4)
    #[arg(long)]
    max_arity: Option<usize>,
    /// Also run the brute-force oracle and report agreement
    #[arg(long)]
    check: bool,
    /// Additionally check this many seeded random generator sets
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Seed for --random
    #[arg(long, default_value_t = 0x5eed_0001)]
    seed: u64,
}

#[derive(Args)]
struct StabilityArgs {
    /// Class name, e.g. "Omega", "Dk:2", "D:3&X:1&B01", "D0&C0"
    #[arg(long)]
    class: String,
    /// Clone name, e.g. "Lc", "Lambda_c", "T0"
    #[arg(long)]
    clone: String,
    /// Side: right (K C ⊆ K) or left (C K ⊆ K); both when omitted
    #[arg(long)]
    side: Option<SideArg>,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Args)]
struct Table3Args {
    #[arg(long)]
    cap: Option<usize>,
    /// Largest parameter value for the k and i > j rows. The default (1) is
    /// the largest value whose non-inclusion witnesses all fit within the
    /// default cap; larger values report boundary rows whose witnesses need
    /// arities beyond the cap.
    #[arg(long, default_value_t = 1)]
    params: u32,
    /// Negative control: swap one prescribed clone and expect failure
    #[arg(long)]
    inject_fault: bool,
}

#[derive(Args)]
struct GfpArgs {
    /// GF(p) literals: "gfp:p=3 poly:x1^2 + 2*x2", "gfp:p=3 vt:0,1,1@1"
    #[arg(required = true)]
    functions: Vec<String>,
    /// Run the bounded linear-stable closure oracle
    #[arg(long)]
    closure: bool,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long, default_value_t = 1)]
    deg_bound: u32,
    #[arg(long, default_value_t = 1)]
    char_bound: u32,
    /// Emit a DOT document of the Hasse diagram
    #[arg(long)]
    dot: bool,
}

fn env_cap() -> usize {
    std::env::var(ENV_CAP)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(clonoid::DEFAULT_ARITY_CAP)
        .min(clonoid::HARD_ARITY_CAP)
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, clonoid::Error> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args, json),
        Command::Classify(args) => cmd_classify(&args, json),
        Command::Closure(args) => cmd_closure(&args, json),
        Command::Stability(args) => cmd_stability(&args, json),
        Command::Table3(args) => cmd_table3(&args, json),
        Command::Gfp(args) => cmd_gfp(&args, json),
        Command::Lattice(args) => cmd_lattice(&args, json),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    input: String,
    arity: usize,
    table: String,
    anf: String,
    degree: u32,
    charrank: u32,
    parity: u8,
    profile: [u8; 2],
    clones: Vec<String>,
}

fn analyze_one(input: &str) -> Result<AnalyzeReport, clonoid::Error> {
    let f = parse_fn(input)?;
    let sig = f.signature();
    let clones: Vec<String> = ALL_CLONES
        .iter()
        .filter(|c| c.member(&f))
        .map(|c| c.name().to_string())
        .collect();
    Ok(AnalyzeReport {
        input: input.to_string(),
        arity: f.arity(),
        table: print_table(&f),
        anf: print_fn(&f),
        degree: sig.degree,
        charrank: sig.charrank,
        parity: sig.parity as u8,
        profile: [sig.c0 as u8, sig.c1 as u8],
        clones,
    })
}

fn cmd_analyze(args: &AnalyzeArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let reports: Vec<AnalyzeReport> = args
        .functions
        .iter()
        .map(|s| analyze_one(s))
        .collect::<Result<_, _>>()?;
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            println!("{}", r.input);
            println!("  arity     {}", r.arity);
            println!("  table     {}", r.table);
            println!("  anf       {}", r.anf);
            println!("  degree    {}", r.degree);
            println!("  charrank  {}", r.charrank);
            println!("  parity    {}", if r.parity == 1 { "odd" } else { "even" });
            println!("  profile   ({}, {})", r.profile[0], r.profile[1]);
            println!("  clones    {}", r.clones.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_all(lits: &[String]) -> Result<Vec<BoolFn>, clonoid::Error> {
    lits.iter().map(|s| parse_fn(s)).collect()
}

#[derive(Serialize)]
struct ClassifyReport {
    class: String,
    grammar: String,
}

fn descriptor_grammar(d: &ClassDescriptor) -> String {
    use clonoid::{Block, Cap};
    match d {
        ClassDescriptor::Empty => "Empty".into(),
        ClassDescriptor::Const0 => "D0&C0".into(),
        ClassDescriptor::Const1 => "D0&C1".into(),
        ClassDescriptor::AllConst => "D0".into(),
        ClassDescriptor::Graded { deg, xrk, block } => {
            let mut parts = Vec::new();
            if let Cap::Finite(d) = deg {
                parts.push(format!("D:{d}"));
            }
            if let Cap::Finite(x) = xrk {
                if matches!(deg, Cap::Infinite) || Cap::Finite(*x) < *deg {
                    parts.push(format!("X:{x}"));
                }
            }
            if *block != Block::ALL {
                parts.push(block.name().to_string());
            }
            if parts.is_empty() {
                "Omega".into()
            } else {
                parts.join("&")
            }
        }
    }
}

fn cmd_classify(args: &ClassifyArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let gens = parse_all(&args.functions)?;
    let d = classify(&gens);
    if json {
        let r = ClassifyReport {
            class: d.canonical_name(),
            grammar: descriptor_grammar(&d),
        };
        println!("{}", serde_json::to_string_pretty(&r).unwrap());
    } else {
        println!("{}", d.canonical_name());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClosureReport {
    class: String,
    checked: bool,
    cap: usize,
    cardinalities: Vec<usize>,
    agreement: Option<bool>,
    random_checked: usize,
    random_agreement: Option<bool>,
}

fn oracle_agrees(gens: &[BoolFn], cap: usize) -> Result<(Vec<usize>, bool), clonoid::Error> {
    let d = classify(gens);
    let family = closure_oracle(gens, cap)?;
    let mut cards = Vec::new();
    let mut ok = true;
    for n in 1..=cap.min(clonoid::closure::SIG_MEMO_CAP) {
        let slice = family.slice(n);
        cards.push(slice.len());
        let sigs = sig_table(n);
        let want: Vec<u64> = (0..sigs.len() as u64)
            .filter(|&raw| d.member_sig(&sigs[raw as usize]))
            .collect();
        ok &= slice == &want[..];
    }
    Ok((cards, ok))
}

fn cmd_closure(args: &ClosureArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let cap = args.max_arity.unwrap_or_else(env_cap);
    let gens = parse_all(&args.functions)?;
    let d = classify(&gens);
    let mut report = ClosureReport {
        class: d.canonical_name(),
        checked: args.check,
        cap,
        cardinalities: Vec::new(),
        agreement: None,
        random_checked: 0,
        random_agreement: None,
    };
    if args.check {
        let (cards, ok) = oracle_agrees(&gens, cap)?;
        report.cardinalities = cards;
        report.agreement = Some(ok);
    }
    if let Some(count) = args.random {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
        let mut all_ok = true;
        for _ in 0..count {
            let gens = random_generators(&mut rng);
            let (_, ok) = oracle_agrees(&gens, cap)?;
            all_ok &= ok;
        }
        report.random_checked = count;
        report.random_agreement = Some(all_ok);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("class: {}", report.class);
        if args.check {
            println!(
                "oracle cardinalities (arity 1..{}): {:?}",
                report.cap, report.cardinalities
            );
            println!(
                "agreement: {}",
                if report.agreement == Some(true) {
                    "OK"
                } else {
                    "MISMATCH"
                }
            );
        }
        if let Some(ok) = report.random_agreement {
            println!(
                "random sets checked: {} -> {}",
                report.random_checked,
                if ok { "OK" } else { "MISMATCH" }
            );
        }
    }
    let failed = report.agreement == Some(false) || report.random_agreement == Some(false);
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn random_generators(rng: &mut impl Rng) -> Vec<BoolFn> {
    let count = 1 + (rng.gen::<u32>() % 2) as usize;
    (0..count)
        .map(|_| {
            let arity = 1 + (rng.gen::<u32>() % 3) as usize;
            let raw = rng.gen::<u64>();
            BoolFn::from_raw_table(arity, raw).unwrap()
        })
        .collect()
}

#[derive(Serialize)]
struct StabilityReport {
    class: String,
    clone: String,
    side: String,
    cap: usize,
    verdict: Verdict,
}

fn cmd_stability(args: &StabilityArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let cap = args.cap.unwrap_or_else(env_cap).min(4);
    let d = ClassDescriptor::parse(&args.class)?;
    let clone = CloneId::from_name(&args.clone).ok_or_else(|| clonoid::Error::Parse {
        pos: 0,
        msg: format!("unknown clone '{}'", args.clone),
    })?;
    let class = FnClass::from_descriptor(&d, cap)?;
    let sides: Vec<(String, Verdict)> = match args.side {
        Some(SideArg::Right) => vec![("right".into(), right_stable(&class, clone))],
        Some(SideArg::Left) => vec![("left".into(), left_stable(&class, clone))],
        None => vec![
            ("right".into(), right_stable(&class, clone)),
            ("left".into(), left_stable(&class, clone)),
        ],
    };
    let reports: Vec<StabilityReport> = sides
        .into_iter()
        .map(|(side, verdict)| StabilityReport {
            class: d.canonical_name(),
            clone: clone.name().into(),
            side,
            cap,
            verdict,
        })
        .collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            match &r.verdict {
                Verdict::HoldsUpToCap { cap } => {
                    println!(
                        "{} / {} ({}): holds up to arity {cap}",
                        r.class, r.clone, r.side
                    )
                }
                Verdict::Fails { witness } => {
                    println!("{} / {} ({}): FAILS: {witness}", r.class, r.clone, r.side)
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table3(args: &Table3Args, json: bool) -> Result<ExitCode, clonoid::Error> {
    let cap = args.cap.unwrap_or_else(env_cap).min(4);
    let report = verify_table3(args.params, cap, args.inject_fault)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!(
            "stability table: {} rows instantiated with parameters <= {}, cap {}",
            report.rows, report.max_param, report.cap
        );
        let mut holds = 0;
        let mut fails = 0;
        for r in &report.records {
            if r.verdict.holds() {
                holds += 1;
            } else {
                fails += 1;
            }
            if !r.matches {
                let status = if r.expected_holds {
                    "expected to hold but FAILS"
                } else {
                    "expected to fail but holds up to cap (witness beyond cap)"
                };
                println!("  {} | {} | {:?}: {}", r.class, r.clone, r.side, status);
                if let Verdict::Fails { witness } = &r.verdict {
                    println!("      witness: {witness}");
                }
            }
        }
        println!(
            "records: {} ({} hold, {} fail), mismatches: {}",
            report.records.len(),
            holds,
            fails,
            report.records.iter().filter(|r| !r.matches).count()
        );
        println!("verdict: {}", if report.ok { "PASS" } else { "FAIL" });
    }
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

#[derive(Serialize)]
struct GfpReport {
    input: String,
    prime: u32,
    arity: usize,
    polynomial: String,
    degree: u32,
    class: String,
    closure_cardinalities: Option<Vec<usize>>,
}

fn cmd_gfp(args: &GfpArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let fns: Vec<gfp::GFpFn> = args
        .functions
        .iter()
        .map(|s| gfp::parse_gfp_fn(s))
        .collect::<Result<_, _>>()?;
    let class = clonoid::gfp_classify(&fns)?;
    let mut reports = Vec::new();
    for (input, f) in args.functions.iter().zip(&fns) {
        reports.push(GfpReport {
            input: input.clone(),
            prime: f.prime(),
            arity: f.arity(),
            polynomial: gfp::print_gfp_fn(f),
            degree: f.degree(),
            class: class.canonical_name(),
            closure_cardinalities: None,
        });
    }
    let mut cards = None;
    if args.closure {
        let cap = args.cap.unwrap_or_else(env_cap);
        let family = clonoid::gfp_closure_oracle(&fns, cap)?;
        cards = Some((1..=cap).map(|m| family.slice(m).len()).collect::<Vec<_>>());
    }
    if json {
        #[derive(Serialize)]
        struct Full {
            functions: Vec<GfpReport>,
            class: String,
            closure_cardinalities: Option<Vec<usize>>,
        }
        let full = Full {
            class: class.canonical_name(),
            functions: reports,
            closure_cardinalities: cards,
        };
        println!("{}", serde_json::to_string_pretty(&full).unwrap());
    } else {
        for r in &reports {
            println!("{}", r.input);
            println!("  polynomial  {}", r.polynomial);
            println!("  degree      {}", r.degree);
        }
        println!("class: {}", class.canonical_name());
        if let Some(c) = &cards {
            println!("closure cardinalities: {c:?}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lattice(args: &LatticeArgs, json: bool) -> Result<ExitCode, clonoid::Error> {
    let nodes = enumerate_descriptors(args.deg_bound, args.char_bound);
    // Hasse edges: leq minus transitive closure
    let n = nodes.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = i != j && nodes[i].leq(&nodes[j]);
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if leq[i][j] && !(0..n).any(|k| leq[i][k] && leq[k][j]) {
                edges.push((i, j));
            }
        }
    }
    if args.dot {
        println!("digraph class_lattice {{");
        println!("  rankdir=BT;");
        for (i, d) in nodes.iter().enumerate() {
            println!("  n{i} [label=\"{}\"];", d.canonical_name());
        }
        for (i, j) in &edges {
            println!("  n{i} -> n{j};");
        }
        println!("}}");
    } else if json {
        #[derive(Serialize)]
        struct Lattice {
            nodes: Vec<String>,
            cover_edges: Vec<(usize, usize)>,
        }
        let l = Lattice {
            nodes: nodes.iter().map(|d| d.canonical_name()).collect(),
            cover_edges: edges,
        };
        println!("{}", serde_json::to_string_pretty(&l).unwrap());
    } else {
        println!("{} classes, {} cover edges", n, edges.len());
        for (i, j) in &edges {
            println!(
                "  {}  <  {}",
                nodes[*i].canonical_name(),
                nodes[*j].canonical_name()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
