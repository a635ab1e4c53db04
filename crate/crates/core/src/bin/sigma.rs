//! `sigma`: covering numbers from the command line.
//!
//! Exit codes: 0 when the covering number is proven, 2 when only an interval is, 1 on error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use covering::cert::{check_file, render_group, render_mcl, Verdict};
use covering::cover::{sigma, SigmaOptions};
use covering::data::{load_group_file, GroupData};
use covering::files::read_text;
use covering::mcl::{mcl_sigma, TabulatedGroup};
use covering::perm::analyze;
use covering::subgroups::{pair_by_shared_classes, sibling_sets, IncidenceMatrices};
use covering::witt::{build_mclaughlin_graph, independent_set};

type BoxError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "sigma",
    version,
    about = "Covering numbers of finite groups, with replayable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Time budget per integer program, in seconds.
    #[arg(long, global = true, default_value_t = 3600.0)]
    budget: f64,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores). Affects wall time only.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Also write every covering program as a standalone file.
    #[arg(long, global = true)]
    emit_ilp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes, centralizer orders and principal flags.
    Analyze {
        /// A group file, or a directory holding `group.txt`.
        group: PathBuf,
    },
    /// Incidence matrices A and B plus the fusion report.
    Incidence { dir: PathBuf },
    /// Full pipeline; writes `<group>.cert`.
    Sigma {
        dir: PathBuf,
        /// Print solver progress every N nodes.
        #[arg(long, default_value_t = 0)]
        progress: usize,
    },
    /// McLaughlin-group certificate from tabulated data.
    Mcl {
        #[arg(default_value = "data/mcl/tables.txt")]
        tables: PathBuf,
        /// Independence number used by the lower bound (default: the tabulated fact).
        #[arg(long)]
        alpha: Option<u64>,
    },
    /// Replays a certificate against its data files.
    Check { certificate: PathBuf },
}

fn main() -> ExitCode {
    // Usage errors exit 1: status 2 is reserved for interval verdicts.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if cli.common.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    v.exit_code() as u8
}

fn write_out(dir: &Path, name: &str, text: &str) -> Result<PathBuf, BoxError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, text)?;
    Ok(path)
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect::<String>()
        .trim_matches('_')
        .to_string()
}

fn run(cli: Cli) -> Result<u8, BoxError> {
    let c = &cli.common;
    if c.budget.is_nan() || c.budget <= 0.0 {
        return Err("--budget must be positive".into());
    }
    let budget = Duration::from_secs_f64(c.budget);
    match &cli.command {
        Command::Analyze { group } => {
            let path = if group.is_dir() {
                group.join("group.txt")
            } else {
                group.clone()
            };
            let (_, g, _) = load_group_file(&path)?;
            let classes = analyze(&g);
            let mut tsv = String::from("class\torder\tcentralizer\tsize\tprincipal\n");
            for k in classes.iter() {
                writeln!(
                    tsv,
                    "{}\t{}\t{}\t{}\t{}",
                    k.id, k.element_order, k.centralizer_order, k.size, k.principal
                )?;
            }
            println!(
                "{} order {} degree {} classes {}",
                g.name(),
                g.order(),
                g.degree(),
                classes.len()
            );
            print!("{tsv}");
            let p = write_out(&c.out, &format!("{}_classes.tsv", file_stem(g.name())), &tsv)?;
            eprintln!("wrote {}", p.display());
            Ok(0)
        }
        Command::Incidence { dir } => {
            let data = GroupData::load(dir)?;
            let mats = data.incidence()?;
            let report = fusion_report(&mats);
            print!("{}", mats.a_fused_tsv());
            print!("{report}");
            for (name, text) in [("A.tsv", mats.a_tsv()), ("B.tsv", mats.b_tsv()), ("fusion.txt", report)] {
                let p = write_out(&c.out, name, &text)?;
                eprintln!("wrote {}", p.display());
            }
            Ok(0)
        }
        Command::Sigma { dir, progress } => {
            let data = GroupData::load(dir)?;
            let opts = SigmaOptions {
                budget,
                progress_every: *progress,
            };
            let cert = sigma(&data.group, &data.classes, &data.subgroups, &opts)?;
            let text = render_group(&data, &dir.display().to_string(), &cert)?;
            let stem = file_stem(data.group.name());
            if c.emit_ilp {
                write_out(&c.out, &format!("{stem}_class.ilp"), &cert.class_bound.program.render())?;
                if let Some(r) = &cert.residual {
                    write_out(&c.out, &format!("{stem}_residual.ilp"), &r.instance.program.render())?;
                }
            }
            let p = write_out(&c.out, &format!("{stem}.cert"), &text)?;
            let verdict = Verdict::new(cert.lower, cert.upper_size());
            println!("{}: {verdict}", data.group.name());
            eprintln!("wrote {}", p.display());
            Ok(verdict_code(verdict))
        }
        Command::Mcl { tables, alpha } => {
            let text = read_text(tables)?;
            let t = TabulatedGroup::parse(&text)?;
            let alpha = match alpha {
                Some(a) => *a,
                None => t.alpha()?,
            };
            let graph = build_mclaughlin_graph()?;
            let iset = independent_set(&graph, t.alpha()? as usize, c.seed, 64)?;
            let mc = mcl_sigma(&t, &graph, &iset, alpha)?;
            let cert = render_mcl(&t, &text, &tables.display().to_string(), alpha, &mc)?;
            if c.emit_ilp {
                for r in mc.lower.rows.iter().chain([&mc.lower.weak]) {
                    write_out(&c.out, &format!("mcl_{}.ilp", r.row), &r.program.render())?;
                }
            }
            let p = write_out(&c.out, "mcl.cert", &cert)?;
            let verdict = Verdict::new(mc.lower.total, mc.upper.total);
            println!("{}: {verdict}", t.name);
            eprintln!("wrote {}", p.display());
            Ok(verdict_code(verdict))
        }
        Command::Check { certificate } => {
            let report = check_file(certificate)?;
            for s in &report.steps {
                println!("ok  {s}");
            }
            println!("{}: {}", report.group, report.verdict);
            Ok(verdict_code(report.verdict))
        }
    }
}

/// Fused principal classes, and the correspondence between same-order subgroup classes.
fn fusion_report(mats: &IncidenceMatrices) -> String {
    let mut s = String::new();
    for fg in mats.fused_groups() {
        let members: Vec<&str> = fg.classes.iter().map(|&k| mats.class_labels[k].as_str()).collect();
        writeln!(s, "fused {} = {}", fg.label, members.join(" ")).unwrap();
    }
    let sets = sibling_sets(mats);
    for set in &sets {
        let labels: Vec<&str> = set.iter().map(|&m| mats.subgroup_labels[m].as_str()).collect();
        writeln!(
            s,
            "same-order {} (order {})",
            labels.join(" "),
            mats.subgroup_orders[set[0]]
        )
        .unwrap();
    }
    for (i, left) in sets.iter().enumerate() {
        for right in &sets[i + 1..] {
            for (l, r, k) in pair_by_shared_classes(mats, left, right) {
                writeln!(
                    s,
                    "paired {} with {} via {}",
                    mats.subgroup_labels[l], mats.subgroup_labels[r], mats.class_labels[k]
                )
                .unwrap();
            }
        }
    }
    s
}
