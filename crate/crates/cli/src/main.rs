use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use permfunc_core::engine::{
    check_dominance, check_singular_bound, det_cauchy_binet_sum, det_linear_sum, det_s_closed, gmf_block, gmf_linear_sum,
    gmf_naive, gmf_s_matrix, per_linear_sum, singular_values, tensor_oracle, term_counts, TermCounts,
};
use permfunc_core::matrix::{block_matrix, linear_sum, perm_matrix, psd_classify, s_matrix};
use permfunc_core::perm::XSetIter;
use permfunc_core::scalar::{format_rational, parse_rational};
use permfunc_core::{
    BlockSpec, CharacterSpec, Error, GaussianRational, GmfResult, GroupSpec, Method, Permutation, PsdClassification,
};
use serde_json::json;

/// Exact generalized matrix functions of sums of permutation matrices.
#[derive(Parser)]
#[command(name = "permfunc", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the naive summation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Coefficient of P_theta, e.g. 2, -1/2, 1+2i, -1i.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Coefficient of P_tau.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// theta in cycle notation, e.g. "(1 5 3)(2 6)" or "id".
    #[arg(long)]
    theta: String,
    /// tau in cycle notation.
    #[arg(long)]
    tau: String,
    /// Degree of the permutations.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct GroupArgs {
    /// Subgroup: S6, A6, cyclic:(1 2 3), stab:1,3@6, gens:(1 2),(1 2 3) (default S<n>).
    #[arg(long)]
    group: Option<String>,
    /// Character: trivial, sign, irr:[3,1], table:<file>, linear:<k>:<cycle>.
    #[arg(long)]
    character: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Naive,
    Formula,
    Closed,
    CauchyBinet,
    Block,
}

#[derive(Subcommand)]
enum Command {
    /// List X(theta, tau): permutations agreeing pointwise with theta or tau.
    Xset {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        n: usize,
    },
    /// d(a P_theta + b P_tau) for a subgroup and character.
    Gmf {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: Route,
    },
    /// det(a P_theta + b P_tau).
    Det {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: Route,
    },
    /// per(a P_theta + b P_tau).
    Per {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: Route,
    },
    /// d(M) for a block matrix described by a JSON file.
    BlockGmf {
        #[arg(long)]
        spec: PathBuf,
        /// Character of the group on [mn].
        #[arg(long)]
        character: String,
        /// Subgroup of S_mn (default S_mn).
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value = "block")]
        method: Route,
    },
    /// d(S_theta); det(S_theta) by default.
    SDet {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value = "sign")]
        character: String,
        #[arg(long, value_enum, default_value = "closed")]
        method: Route,
    },
    /// Structural positive semidefiniteness verdict.
    Psd {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Singular values of a P_theta + b P_tau.
    Singvals {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// d(N) / chi(id) <= per(N) for N = k I + m P_pi over S_n.
    Dominance {
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        /// An involution in cycle notation.
        #[arg(long)]
        pi: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        character: String,
    },
    /// Singular value bound for a linear character.
    Bound {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Compare the tensor symmetrizer inner product with |G| d(A).
    TensorCheck {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Time every determinant route and report term counts.
    Bench {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

/// A check that ran to completion and came out false.
#[derive(Debug)]
struct CheckFailed(String);

impl fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check failed: {}", self.0)
    }
}

impl std::error::Error for CheckFailed {}

struct Pair {
    a: GaussianRational,
    b: GaussianRational,
    theta: Permutation,
    tau: Permutation,
    n: usize,
}

impl PairArgs {
    fn parse(&self) -> Result<Pair> {
        Ok(Pair {
            a: self.a.parse().context("--a")?,
            b: self.b.parse().context("--b")?,
            theta: Permutation::parse(&self.theta, self.n).context("--theta")?,
            tau: Permutation::parse(&self.tau, self.n).context("--tau")?,
            n: self.n,
        })
    }
}

fn parse_group(text: Option<&str>, n: usize) -> Result<GroupSpec> {
    let g = match text {
        Some(t) => GroupSpec::parse(t, Some(n)).context("--group")?,
        None => GroupSpec::symmetric(n),
    };
    if g.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: g.degree() }).context("--group");
    }
    Ok(g)
}

impl GroupArgs {
    fn parse(&self, n: usize) -> Result<(GroupSpec, CharacterSpec)> {
        let group = parse_group(self.group.as_deref(), n)?;
        let chi = CharacterSpec::parse(&self.character, n).context("--character")?;
        Ok((group, chi))
    }
}

fn unsupported(route: Route, what: &str) -> anyhow::Error {
    let name = route.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    anyhow!(Error::Precondition(format!("method {name} is not available for {what}")))
}

fn is_symmetric(g: &GroupSpec) -> bool {
    matches!(g.variant(), permfunc_core::GroupVariant::Symmetric)
}

fn evaluate_pair(p: &Pair, group: &GroupSpec, chi: &CharacterSpec, route: Route) -> Result<GmfResult> {
    let det_like = is_symmetric(group) && *chi == CharacterSpec::Sign;
    let per_like = is_symmetric(group) && *chi == CharacterSpec::Trivial;
    Ok(match route {
        Route::Naive => gmf_naive(&linear_sum(&p.a, &p.b, &p.theta, &p.tau)?, group, chi)?,
        Route::Formula => gmf_linear_sum(&p.a, &p.b, &p.theta, &p.tau, group, chi)?,
        Route::Closed if det_like => det_linear_sum(&p.a, &p.b, &p.theta, &p.tau)?,
        Route::Closed if per_like => per_linear_sum(&p.a, &p.b, &p.theta, &p.tau)?,
        Route::CauchyBinet if det_like => {
            det_cauchy_binet_sum(&perm_matrix(&p.theta).scale(&p.a), &perm_matrix(&p.tau).scale(&p.b))?
        }
        other => return Err(unsupported(other, &format!("{chi} on {group}"))),
    })
}

fn print_result(r: &GmfResult, as_json: bool) -> Result<()> {
    if as_json {
        println!("{}", serde_json::to_string(r)?);
    } else {
        println!("{}", r.value);
    }
    Ok(())
}

fn print_json(v: serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string(&v)?);
    Ok(())
}

fn real_arg(text: &str, flag: &str) -> Result<num_rational::BigRational> {
    let z: GaussianRational = text.parse().with_context(|| flag.to_string())?;
    z.as_real()
        .cloned()
        .ok_or_else(|| anyhow!(Error::Precondition(format!("{flag} must be real, got {z}"))))
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

fn run(cli: Cli) -> Result<()> {
    let as_json = cli.json;
    match cli.command {
        Command::Xset { theta, tau, n } => {
            let theta = Permutation::parse(&theta, n).context("--theta")?;
            let tau = Permutation::parse(&tau, n).context("--tau")?;
            let elements: Vec<_> = XSetIter::new(&theta, &tau)?.collect();
            if as_json {
                let rows: Vec<_> = elements
                    .iter()
                    .map(|e| json!({"sigma": e.sigma.to_string(), "cycles": e.chosen(), "t": e.t_sigma}))
                    .collect();
                print_json(json!(rows))?;
            } else {
                for e in &elements {
                    println!("{}", e.sigma);
                }
            }
        }
        Command::Gmf { pair, group, method } => {
            let p = pair.parse()?;
            let (g, chi) = group.parse(p.n)?;
            print_result(&evaluate_pair(&p, &g, &chi, method)?, as_json)?;
        }
        Command::Det { pair, method } => {
            let p = pair.parse()?;
            print_result(&evaluate_pair(&p, &GroupSpec::symmetric(p.n), &CharacterSpec::Sign, method)?, as_json)?;
        }
        Command::Per { pair, method } => {
            if method == Route::CauchyBinet {
                return Err(unsupported(method, "the permanent"));
            }
            let p = pair.parse()?;
            print_result(&evaluate_pair(&p, &GroupSpec::symmetric(p.n), &CharacterSpec::Trivial, method)?, as_json)?;
        }
        Command::BlockGmf { spec, character, group, method } => {
            let text = std::fs::read_to_string(&spec)
                .map_err(|e| Error::Io(format!("{}: {e}", spec.display())))?;
            let spec = BlockSpec::from_json(&text)?;
            let size = spec.m * spec.n;
            let g = parse_group(group.as_deref(), size)?;
            let chi = CharacterSpec::parse(&character, size).context("--character")?;
            let r = match method {
                Route::Block | Route::Formula => gmf_block(&spec, &g, &chi)?,
                Route::Naive => gmf_naive(&block_matrix(&spec)?, &g, &chi)?,
                other => return Err(unsupported(other, "block matrices")),
            };
            print_result(&r, as_json)?;
        }
        Command::SDet { theta, n, group, character, method } => {
            let theta = Permutation::parse(&theta, n).context("--theta")?;
            let g = parse_group(group.as_deref(), n)?;
            let chi = CharacterSpec::parse(&character, n).context("--character")?;
            let r = match method {
                Route::Closed if is_symmetric(&g) && chi == CharacterSpec::Sign => GmfResult {
                    value: det_s_closed(&theta),
                    method: Method::ClosedForm,
                    term_count: theta.disjoint_cycles().r(),
                },
                Route::Formula => gmf_s_matrix(&theta, &g, &chi)?,
                Route::Naive => gmf_naive(&s_matrix(&theta), &g, &chi)?,
                other => return Err(unsupported(other, &format!("{chi} on {g}"))),
            };
            print_result(&r, as_json)?;
        }
        Command::Psd { pair } => {
            let p = pair.parse()?;
            let verdict = psd_classify(&p.a, &p.b, &p.theta, &p.tau)?;
            match (&verdict, as_json) {
                (PsdClassification::Psd { k, m, pi, condition }, true) => print_json(json!({
                    "psd": true, "k": format_rational(k), "m": format_rational(m), "pi": pi.to_string(), "condition": condition
                }))?,
                (PsdClassification::Psd { k, m, pi, condition }, false) => println!(
                    "PSD: {} I + {} P_{} (condition {condition})",
                    format_rational(k),
                    format_rational(m),
                    pi
                ),
                (PsdClassification::NotPsd, true) => print_json(json!({"psd": false}))?,
                (PsdClassification::NotPsd, false) => println!("not PSD"),
            }
        }
        Command::Singvals { pair } => {
            let p = pair.parse()?;
            let s = singular_values(&p.a, &p.b, &p.theta, &p.tau)?;
            if as_json {
                print_json(json!({"values": s.values}))?;
            } else {
                for v in &s.values {
                    println!("{v}");
                }
            }
        }
        Command::Dominance { k, m, pi, n, character } => {
            let k = parse_rational(&k).context("--k")?;
            let m = parse_rational(&m).context("--m")?;
            let pi = Permutation::parse(&pi, n).context("--pi")?;
            let chi = CharacterSpec::parse(&character, n).context("--character")?;
            let r = check_dominance(&k, &m, &pi, n, &chi)?;
            if as_json {
                print_json(json!({"lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}))?;
            } else {
                println!("lhs = {}\nrhs = {}\nholds = {}", r.lhs, r.rhs, r.holds);
            }
            if !r.holds {
                bail!(CheckFailed(format!("{} > {}", r.lhs, r.rhs)));
            }
        }
        Command::Bound { pair, group } => {
            let p = pair.parse()?;
            let (g, chi) = group.parse(p.n)?;
            let r = check_singular_bound(&p.a, &p.b, &p.theta, &p.tau, &g, &chi)?;
            if as_json {
                print_json(json!({"lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}))?;
            } else {
                println!("lhs = {}\nrhs = {}\nholds = {}", r.lhs, r.rhs, r.holds);
            }
            if !r.holds {
                bail!(CheckFailed(format!("{} > {}", r.lhs, r.rhs)));
            }
        }
        Command::TensorCheck { pair, group } => {
            let a = real_arg(&pair.a, "--a")?;
            let b = real_arg(&pair.b, "--b")?;
            let p = pair.parse()?;
            let (g, chi) = group.parse(p.n)?;
            let order = GaussianRational::from_integer(g.enumerate_default()?.order as i64);
            let inner = &tensor_oracle(&a, &b, &p.theta, &p.tau, &g, &chi)? * &order;
            let scaled = &order * &gmf_linear_sum(&p.a, &p.b, &p.theta, &p.tau, &g, &chi)?.value;
            let holds = inner == scaled;
            if as_json {
                print_json(json!({"inner_product": inner, "scaled_value": scaled, "holds": holds}))?;
            } else {
                println!("<Tx,Ty> = {inner}\n|G| d   = {scaled}\nholds = {holds}");
            }
            if !holds {
                bail!(CheckFailed(format!("<Tx,Ty> = {inner} but |G| d = {scaled}")));
            }
        }
        Command::Bench { pair, reps } => bench(&pair.parse()?, reps.max(1), as_json)?,
    }
    Ok(())
}

fn bench(p: &Pair, reps: usize, as_json: bool) -> Result<()> {
    let group = GroupSpec::symmetric(p.n);
    let expected: TermCounts = term_counts(&p.theta, &p.tau, &group)?;
    let routes = [Route::Naive, Route::Formula, Route::Closed, Route::CauchyBinet];
    let mut rows = Vec::new();
    for route in routes {
        let mut times = Vec::with_capacity(reps);
        let mut last = None;
        for _ in 0..reps {
            let start = Instant::now();
            last = Some(evaluate_pair(p, &group, &CharacterSpec::Sign, route)?);
            times.push(start.elapsed());
        }
        rows.push((last.expect("reps >= 1"), median(times)));
    }
    let value = rows[0].0.value.clone();
    if let Some((r, _)) = rows.iter().find(|(r, _)| r.value != value) {
        bail!(CheckFailed(format!("{} gave {} but naive gave {value}", r.method, r.value)));
    }
    for (r, _) in &rows {
        let want = match r.method {
            Method::Naive => Some(expected.naive.clone()),
            Method::Formula => Some(expected.formula.into()),
            Method::CauchyBinet => Some(expected.cauchy_binet.clone()),
            _ => None,
        };
        if let Some(want) = want {
            if want != r.term_count.into() {
                bail!(CheckFailed(format!("{} accumulated {} terms, expected {want}", r.method, r.term_count)));
            }
        }
    }
    if as_json {
        let table: Vec<_> = rows
            .iter()
            .map(|(r, t)| json!({"method": r.method, "terms": r.term_count, "median_ns": t.as_nanos() as u64, "value": r.value}))
            .collect();
        print_json(json!({"rows": table}))?;
    } else {
        println!("{:<14}{:>8}{:>14}  value", "method", "terms", "median");
        for (r, t) in &rows {
            println!("{:<14}{:>8}{:>14}  {}", r.method.to_string(), r.term_count, format!("{t:.2?}"), r.value);
        }
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<CheckFailed>().is_some() {
        return 4;
    }
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_parse() => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
