use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pic_kernel::generate::{generate, Model, Params};
use pic_kernel::kernel::{bcd_reduce, reduce, reduce_bcc, Reduction};
use pic_kernel::obstructions::{bcc_certificate, pic_certificate, Obstruction, ObstructionKind};
use pic_kernel::recognition::{is_biclique_chain, umbrella_ordering};
use pic_kernel::solver::{branch_solve, oracle_opt, verify_solution, Problem};
use pic_kernel::{EdgeSet, Graph};

const EXIT_CODES: &str = "Exit codes:
  0  success (reduced instance, feasible, verified)
  1  usage or I/O error
  2  rejected or infeasible instance
  3  verification failure";

#[derive(Parser)]
#[command(
    name = "pickernel",
    version,
    about = "Kernels and exact solvers for proper interval completion, bi-clique chain completion and bipartite chain deletion",
    after_help = EXIT_CODES
)]
struct Cli {
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize an instance.
    Reduce(ReduceArgs),
    /// Solve an instance exactly.
    Solve(SolveArgs),
    /// Check class membership or a proposed solution.
    Verify(VerifyArgs),
    /// Generate a graph.
    Gen(GenArgs),
    /// Run built-in consistency checks.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    /// Proper interval completion.
    Pic,
    /// Bi-clique chain completion.
    Bcc,
    /// Bipartite chain deletion.
    Bcd,
}

impl ProblemArg {
    /// The completion problem solved on the working graph.
    fn base(self) -> Problem {
        match self {
            ProblemArg::Pic => Problem::Pic,
            ProblemArg::Bcc | ProblemArg::Bcd => Problem::Bcc,
        }
    }

    /// Deletion on `g` is completion on its complement.
    fn working(self, g: &Graph) -> Graph {
        match self {
            ProblemArg::Bcd => g.complement(),
            _ => g.clone(),
        }
    }

    fn reduce(self, g: &Graph, k: usize) -> Reduction {
        match self {
            ProblemArg::Pic => reduce(g, k),
            ProblemArg::Bcc => reduce_bcc(g, k),
            ProblemArg::Bcd => bcd_reduce(g, k),
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph in edge-list format; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "pic")]
    problem: ProblemArg,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    k: usize,
    /// Where to write the reduced graph.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Where to write the JSON reduction trace.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: Input,
    /// Budget; without it the optimum up to --max-k is searched.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 10)]
    max_k: usize,
    /// Kernelize before solving.
    #[arg(long)]
    kernelize: bool,
    /// Where to write the solution pairs.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    /// File of vertex pairs to add (to delete, for bcd).
    #[arg(long)]
    completion: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// gnp, planted-pic, planted-bcc, path, cycle or star.
    #[arg(long)]
    model: String,
    #[arg(long)]
    n: usize,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Edges removed from a planted graph.
    #[arg(long, default_value_t = 0)]
    edits: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances in the safety sweep.
    #[arg(long, default_value_t = 100)]
    count: u64,
}

struct Failure(String);

type Outcome = Result<u8, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(msg.into())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn pair_lines(pairs: &EdgeSet) -> String {
    pairs.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

fn load_pairs(path: &Path) -> Result<EdgeSet, Failure> {
    let text = read_text(path)?;
    let mut out = EdgeSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("{}:{}: malformed pair", path.display(), i + 1)))?;
        match f.as_slice() {
            [u, v] if u != v => {
                out.insert((*u.min(v), *u.max(v)));
            }
            _ => return Err(usage(format!("{}:{}: expected two distinct ids", path.display(), i + 1))),
        }
    }
    Ok(out)
}

fn cmd_reduce(a: &ReduceArgs) -> Outcome {
    let g = load_graph(&a.input.input)?;
    let red = a.input.problem.reduce(&g, a.k);
    if let Some(path) = &a.output {
        let ids: Vec<String> = red.graph.vertices().map(|v| v.to_string()).collect();
        let text = format!("# original ids: {}\n{}", ids.join(" "), red.graph.to_edge_list());
        write_text(path, &text)?;
    }
    if let Some(path) = &a.trace {
        write_text(path, &(red.trace.to_json() + "\n"))?;
    }
    println!(
        "{} {} {} {}",
        red.graph.vertex_count(),
        red.graph.edge_count(),
        red.k,
        red.status.as_str()
    );
    Ok(if red.status.is_rejected() { 2 } else { 0 })
}

/// A solution of size at most `k`, in the ids of `g`.
fn decide(g: &Graph, problem: ProblemArg, k: usize, kernelize: bool) -> Option<EdgeSet> {
    if !kernelize {
        let s = branch_solve(&problem.working(g), problem.base(), k);
        return s.feasible.then_some(s.completion);
    }
    let red = problem.reduce(g, k);
    if red.status.is_rejected() {
        return None;
    }
    let s = branch_solve(&problem.working(&red.graph), problem.base(), red.k);
    if !s.feasible {
        return None;
    }
    let mut all = red.forced;
    all.extend(s.completion);
    Some(all)
}

fn cmd_solve(a: &SolveArgs) -> Outcome {
    let g = load_graph(&a.input.input)?;
    let p = a.input.problem;
    let found = match a.k {
        Some(k) => decide(&g, p, k, a.kernelize),
        None => (0..=a.max_k).find_map(|k| decide(&g, p, k, a.kernelize)),
    };
    let Some(sol) = found else {
        match a.k {
            Some(k) => println!("infeasible at k={k}"),
            None => println!("infeasible up to k={}", a.max_k),
        }
        return Ok(2);
    };
    if let Some(path) = &a.output {
        write_text(path, &pair_lines(&sol))?;
    }
    match a.k {
        Some(_) => println!("feasible {}", sol.len()),
        None => println!("optimum {}", sol.len()),
    }
    Ok(0)
}

fn certificate_line(ob: &Obstruction, deletion: bool) -> String {
    let name = match (ob.kind, deletion) {
        (ObstructionKind::ThreeK1, true) => "k3",
        (ObstructionKind::C4, true) => "2k2",
        (ObstructionKind::Claw, _) => "claw",
        (ObstructionKind::Hole, _) => "hole",
        (ObstructionKind::Net, _) => "net",
        (ObstructionKind::ThreeSun, _) => "3-sun",
        (ObstructionKind::C4, _) => "c4",
        (ObstructionKind::C5, _) => "c5",
        (ObstructionKind::ThreeK1, _) => "3k1",
    };
    let vs: Vec<String> = ob.vertices.iter().map(|v| v.to_string()).collect();
    format!("certificate {name} {}", vs.join(" "))
}

/// Prints a membership witness or an obstruction; returns membership.
fn report_membership(h: &Graph, problem: ProblemArg) -> bool {
    let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    match problem {
        ProblemArg::Pic => match umbrella_ordering(h) {
            Some(o) => {
                println!("ordering {}", join(o.as_slice()));
                true
            }
            None => {
                println!("{}", certificate_line(&pic_certificate(h).expect("certificate"), false));
                false
            }
        },
        ProblemArg::Bcc | ProblemArg::Bcd => {
            let w = problem.working(h);
            match is_biclique_chain(&w) {
                Some(c) => {
                    println!("parts {} | {}", join(c.first_clique()), join(c.second_clique()));
                    true
                }
                None => {
                    let ob = bcc_certificate(&w).expect("certificate");
                    println!("{}", certificate_line(&ob, problem == ProblemArg::Bcd));
                    false
                }
            }
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let g = load_graph(&a.input.input)?;
    let p = a.input.problem;
    let Some(path) = &a.completion else {
        return Ok(if report_membership(&g, p) { 0 } else { 3 });
    };
    let f = load_pairs(path)?;
    let mut h = g.clone();
    for &(u, v) in &f {
        let ok = u < g.capacity() && v < g.capacity() && (p == ProblemArg::Bcd) == g.has_edge(u, v);
        if !ok {
            let what = if p == ProblemArg::Bcd { "an edge" } else { "a non-edge" };
            return Err(usage(format!("pair {u} {v} is not {what} of the input")));
        }
        if p == ProblemArg::Bcd {
            h.remove_edge(u, v);
        } else {
            h.add_edge(u, v);
        }
    }
    let accepted = verify_solution(&p.working(&g), p.base(), &f).map_err(|e| usage(e.to_string()))?;
    if accepted {
        println!("accepted {}", f.len());
        Ok(0)
    } else {
        println!("rejected");
        report_membership(&h, p);
        Ok(3)
    }
}

fn cmd_gen(a: &GenArgs) -> Outcome {
    let model: Model = a.model.parse().map_err(|e: pic_kernel::Error| usage(e.to_string()))?;
    let g = generate(
        model,
        &Params {
            n: a.n,
            p: a.p,
            edits: a.edits,
            seed: a.seed,
        },
    );
    let text = g.to_edge_list();
    match &a.output {
        Some(path) => {
            write_text(path, &text)?;
            println!("{} {}", g.vertex_count(), g.edge_count());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn sample(seed: u64) -> Graph {
    let params = Params {
        n: 5 + (seed % 6) as usize,
        p: 0.2 + 0.1 * (seed % 7) as f64,
        edits: 0,
        seed,
    };
    generate(Model::Gnp, &params)
}

fn cmd_selftest(a: &SelftestArgs) -> Outcome {
    let mut failures = 0;
    let mut line = |ok: bool, what: &str| {
        println!("{} {what}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    let net = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("net");
    let golden = [
        (Graph::star(3), 1),
        (Graph::cycle(4), 1),
        (Graph::cycle(5), 2),
        (net, 2),
    ];
    let ok = golden.iter().all(|(g, v)| oracle_opt(g, Problem::Pic, 3) == Some(*v));
    line(ok, "golden optima");

    let mut mismatches = 0;
    let mut traces = String::new();
    for s in 0..a.count {
        let g = sample(a.seed.wrapping_add(s));
        for p in [ProblemArg::Pic, ProblemArg::Bcc, ProblemArg::Bcd] {
            for k in 0..=2 {
                let direct = oracle_opt(&p.working(&g), p.base(), k).is_some();
                let red = p.reduce(&g, k);
                let kept = !red.status.is_rejected() && oracle_opt(&p.working(&red.graph), p.base(), red.k).is_some();
                if direct != kept {
                    mismatches += 1;
                }
                let _ = writeln!(traces, "{}", red.trace.to_json());
            }
        }
    }
    line(mismatches == 0, &format!("answers kept by reduction ({mismatches} mismatches)"));

    let mut again = String::new();
    for s in 0..a.count {
        let g = sample(a.seed.wrapping_add(s));
        for p in [ProblemArg::Pic, ProblemArg::Bcc, ProblemArg::Bcd] {
            for k in 0..=2 {
                let _ = writeln!(again, "{}", p.reduce(&g, k).trace.to_json());
            }
        }
    }
    line(traces == again, "deterministic traces");
    Ok(if failures == 0 { 0 } else { 3 })
}

fn run(cli: &Cli) -> Outcome {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Reduce(a) => cmd_reduce(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Selftest(a) => cmd_selftest(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
