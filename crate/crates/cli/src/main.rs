use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jpl_core::genus::{genus_table, genus_table_json, GenusRow};
use jpl_core::jacobi::{classify, dim_cusp};
use jpl_core::paramod::{
    abelianization, characters, generators, identity_suite, kernel_table, plus_abelianization, subgroup_lattice,
    IdentityStatus,
};
use jpl_core::verify::{run_suite, CheckStatus, Suite};
use jpl_core::{lift, parse_block, Error};

/// Exact Jacobi forms, lifts and paramodular group checks.
#[derive(Parser)]
#[command(name = "jpl", version)]
struct Cli {
    /// q-precision in 1/24 units
    #[arg(long, global = true, default_value_t = 96)]
    prec: i64,
    /// emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the expansion of a theta-block expression
    Expand {
        expr: String,
        /// text output (the default unless --json is given)
        #[arg(long, conflicts_with = "json")]
        text: bool,
    },
    /// Dimension of the space of Jacobi cusp forms
    Dim {
        #[arg(long)]
        weight: i64,
        #[arg(long)]
        index: i64,
    },
    /// Lift a Jacobi cusp form to a paramodular form
    Lift(LiftArgs),
    /// Paramodular group data for level t
    Group(GroupArgs),
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
    },
    /// Weight-3 seeds for the exceptional polarizations
    GenusTable,
}

#[derive(Args)]
struct LiftArgs {
    expr: String,
    #[arg(long = "Q", alias = "q")]
    q: i64,
    /// residue class of the Fourier-Jacobi indices
    #[arg(long, default_value_t = 1)]
    class: i64,
    #[arg(long, default_value_t = 3)]
    m_max: i64,
    /// also compare A(n,l,m) with its V_t image
    #[arg(long)]
    symmetry: bool,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    t: i64,
    #[arg(long, value_enum, default_value = "summary")]
    show: GroupView,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupView {
    Summary,
    Generators,
    Identities,
    Characters,
    Subgroups,
    Kernels,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Blocks,
    Jacobi,
    Lift,
    Group,
    Dims,
    Genus,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Blocks => Suite::Blocks,
            SuiteArg::Jacobi => Suite::Jacobi,
            SuiteArg::Lift => Suite::Lift,
            SuiteArg::Group => Suite::Group,
            SuiteArg::Dims => Suite::Dims,
            SuiteArg::Genus => Suite::Genus,
        }
    }
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn expand(cli: &Cli, expr: &str) -> anyhow::Result<Outcome> {
    let f = parse_block(expr, cli.prec)?;
    let c = classify(&f);
    if cli.json {
        let mut v = f.to_json();
        v["class"] = json!(c.class);
        print_json(&v);
    } else {
        println!("{}", f.label);
        println!(
            "weight {}, index {}, v_eta^{}, v_H^{}, {:?} to q^{}/24",
            f.weight_str(),
            f.index_str(),
            f.eta_exp,
            f.h_exp,
            c.class,
            c.prec24
        );
        println!("{}", f.series);
    }
    Ok(Outcome::Ok)
}

fn lift_cmd(cli: &Cli, a: &LiftArgs) -> anyhow::Result<Outcome> {
    // layer m needs the seed to m times the output precision
    let phi = parse_block(&a.expr, cli.prec * a.m_max)?;
    let f = lift(&phi, a.q, a.class, a.m_max, cli.prec)?;
    let sym = if a.symmetry {
        Some(f.maass_symmetry_check()?)
    } else {
        None
    };
    if cli.json {
        let mut v = f.to_json();
        if let Some(r) = &sym {
            v["symmetry"] = json!(r);
        }
        print_json(&v);
    } else {
        println!(
            "t = {}, weight {}/2, Q = {}, class {} mod {}",
            f.t, f.weight2, f.q, f.class_residue, f.q
        );
        for (m, s) in &f.fj {
            println!("fj({m}) [index {}/2]: {s}", f.layer_index2(*m));
        }
        if let Some(r) = &sym {
            println!(
                "symmetry: {} pairs checked, {} violations",
                r.pairs_checked,
                r.violations.len()
            );
        }
    }
    Ok(match sym {
        Some(r) if !r.holds() => Outcome::CheckFailed,
        _ => Outcome::Ok,
    })
}

fn group_cmd(cli: &Cli, a: &GroupArgs) -> anyhow::Result<Outcome> {
    if a.t < 1 {
        return Err(Error::InvalidArgument(format!("level {} must be positive", a.t)).into());
    }
    let t = a.t;
    let (t1, t2) = abelianization(t);
    let mut outcome = Outcome::Ok;
    let v = match a.show {
        GroupView::Summary => json!({
            "t": t,
            "abelianization": [t1, t2],
            "plusAbelianization": plus_abelianization(t),
            "characters": characters(t).len(),
        }),
        GroupView::Generators => {
            let g = generators(t);
            let named: serde_json::Map<String, Value> = g
                .named()
                .into_iter()
                .map(|(n, m)| (n.to_string(), m.to_json()))
                .collect();
            Value::Object(named)
        }
        GroupView::Identities => {
            let r = identity_suite(t)?;
            if !r.passes() {
                outcome = Outcome::CheckFailed;
            }
            r.to_json()
        }
        GroupView::Characters => json!(characters(t)
            .iter()
            .map(|c| json!({"a": c.a, "b": c.b, "order": c.order()}))
            .collect::<Vec<_>>()),
        GroupView::Subgroups => json!(subgroup_lattice(t1, t2)),
        GroupView::Kernels => json!(kernel_table(t)),
    };
    if cli.json {
        print_json(&v);
        return Ok(outcome);
    }
    match a.show {
        GroupView::Summary => {
            println!("Gamma_{t}: abelianization Z/{t1} x Z/{t2}");
            let (p1, p2) = plus_abelianization(t);
            println!("Gamma_{t}^+: abelianization Z/{p1} x Z/{p2}");
            println!("{} characters chi_(a,b)", characters(t).len());
        }
        GroupView::Generators => {
            for (n, m) in generators(t).named() {
                println!("{n} = {m}");
            }
        }
        GroupView::Identities => {
            for i in identity_suite(t)?.items {
                let s = match i.status {
                    IdentityStatus::Holds => "holds",
                    IdentityStatus::Fails => "FAILS",
                    IdentityStatus::Erratum => "erratum",
                };
                println!("{:<28} {s:<8} {}", i.id, i.detail);
            }
        }
        GroupView::Characters => {
            for c in characters(t) {
                println!("{c} order {}", c.order());
            }
        }
        GroupView::Subgroups => {
            for s in subgroup_lattice(t1, t2).subgroups {
                println!("{s} order {}", s.order());
            }
        }
        GroupView::Kernels => {
            for r in kernel_table(t) {
                let chis: Vec<String> = r.characters.iter().map(|c| c.to_string()).collect();
                println!(
                    "{:<16} order {:<3} kernel of {}",
                    r.subgroup.to_string(),
                    r.char_order,
                    chis.join(", ")
                );
            }
        }
    }
    Ok(outcome)
}

fn verify_cmd(cli: &Cli, suite: SuiteArg) -> anyhow::Result<Outcome> {
    let r = run_suite(suite.into(), cli.prec)?;
    if cli.json {
        print_json(&r.to_json());
    } else {
        for c in &r.checks {
            let s = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Erratum => "erratum",
            };
            println!("{s:<8} {:<44} {}", c.id, c.detail);
        }
        println!(
            "{} passed, {} failed, {} errata",
            r.count(CheckStatus::Pass),
            r.count(CheckStatus::Fail),
            r.count(CheckStatus::Erratum)
        );
    }
    for f in r.failures() {
        eprintln!("failed: {}", f.id);
    }
    Ok(if r.ok() { Outcome::Ok } else { Outcome::CheckFailed })
}

fn print_genus_row(r: &GenusRow) {
    if let Some(a) = r.annotation {
        println!("t = {:>2}: {a}", r.t);
    }
    for s in &r.seeds {
        let status = if s.ok() { "ok" } else { "FAIL" };
        println!("t = {:>2}: Q = {} {:<48} {status}", r.t, s.char_order, s.expr);
    }
    for f in &r.extra_failures {
        println!("t = {:>2}: FAIL {f}", r.t);
    }
}

fn genus_cmd(cli: &Cli) -> anyhow::Result<Outcome> {
    let rows = genus_table(cli.prec)?;
    if cli.json {
        print_json(&genus_table_json(&rows));
    } else {
        rows.iter().for_each(print_genus_row);
    }
    Ok(if rows.iter().all(GenusRow::ok) {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if cli.prec < 1 {
        return Err(Error::InvalidArgument("--prec must be positive".into()).into());
    }
    match &cli.cmd {
        Cmd::Expand { expr, .. } => expand(cli, expr),
        Cmd::Dim { weight, index } => {
            if *index < 1 {
                return Err(Error::InvalidArgument("--index must be positive".into()).into());
            }
            let d = dim_cusp(*weight, *index);
            if cli.json {
                print_json(&json!({"weight": weight, "index": index, "dim": d}));
            } else {
                println!("{d}");
            }
            Ok(Outcome::Ok)
        }
        Cmd::Lift(a) => lift_cmd(cli, a),
        Cmd::Group(a) => group_cmd(cli, a),
        Cmd::Verify { suite } => verify_cmd(cli, *suite),
        Cmd::GenusTable => genus_cmd(cli),
    }
}

/// Input errors map to the usage exit code.
fn is_usage_error(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(Error::Parse { .. } | Error::UnknownAtom(_) | Error::InvalidArgument(_))
    )
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (`jpl ... | head`) instead of panicking in println!
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
