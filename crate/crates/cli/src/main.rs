use std::fmt::Write as _;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bordered_core::bimodule::{
    box_tensor, cancel_da, cancel_dd, cancellable_pairs_da, cancellable_pairs_dd, from_json, to_dot, to_json, Bimodule,
};
use bordered_core::paper_data::{build, check_names, grade_table, run_check, verify_suite};
use bordered_core::Report;

/// Verify and inspect the singular-crossing bimodules over B(n) and B!(n).
#[derive(Parser)]
#[command(name = "bordered", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite or one named check.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(2..=8))]
        nmax: u8,
        #[arg(long = "check", value_name = "NAME")]
        check: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a bimodule. ID `-` reads the JSON form from stdin.
    Show {
        id: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cancel cancellable pairs until none remain.
    Simplify {
        id: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Box tensor product of a DA and a DD bimodule.
    Tensor {
        #[arg(long)]
        da: String,
        #[arg(long)]
        dd: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Degree table of the generators.
    Grade { id: String },
}

enum Exit {
    Fail(String),
    Usage(String),
}

fn load(id: &str) -> Result<Bimodule, Exit> {
    if id == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Exit::Usage(e.to_string()))?;
        return from_json(&s).map_err(|e| Exit::Usage(format!("stdin: {e}")));
    }
    build(id).map_err(|e| Exit::Usage(e.to_string()))
}

fn render(b: &Bimodule, format: Format) -> String {
    match format {
        Format::Json => to_json(b),
        Format::Dot => to_dot(b),
    }
}

fn simplify(b: Bimodule) -> Result<Bimodule, Exit> {
    let fail = |e: bordered_core::bimodule::BimoduleError| Exit::Fail(e.to_string());
    Ok(match b {
        Bimodule::DD(mut g) => {
            while let Some(&(x, y)) = cancellable_pairs_dd(&g).first() {
                g = cancel_dd(&g, x, y).map_err(fail)?.graph;
            }
            Bimodule::DD(g)
        }
        Bimodule::DA(mut g) => {
            while let Some(&(x, y)) = cancellable_pairs_da(&g).first() {
                g = cancel_da(&g, x, y).map_err(fail)?;
            }
            Bimodule::DA(g)
        }
    })
}

fn verify(nmax: u8, check: Option<String>, json: bool, out: &mut String) -> Result<bool, Exit> {
    let reports: Vec<Report> = match check {
        Some(name) => vec![run_check(&name, nmax)
            .ok_or_else(|| Exit::Usage(format!("unknown check `{name}`; known: {}", check_names().join(", "))))?],
        None => verify_suite(nmax),
    };
    let passed = reports.iter().all(|r| r.passed);
    if json {
        let doc = serde_json::json!({ "nmax": nmax, "passed": passed, "reports": reports });
        out.push_str(&serde_json::to_string_pretty(&doc).expect("serializable"));
        out.push('\n');
    } else {
        for r in &reports {
            let _ = write!(out, "{r}");
        }
        let checked: usize = reports.iter().map(|r| r.checked).sum();
        let _ = writeln!(out, "{} ({checked} checks, nmax = {nmax})", if passed { "ALL PASS" } else { "FAILED" });
    }
    Ok(passed)
}

fn grade(b: &Bimodule) -> String {
    let mut out = String::new();
    let rows = grade_table(b);
    let w = rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
    let _ = writeln!(
        out,
        "{:<w$}  {:<10} {:<10} {:>6}  {:<24} {:<16} Alex",
        "name", "idem1", "idem2", "maslov", "deg", "refined"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<w$}  {:<10} {:<10} {:>6}  {:<24} {:<16} {}",
            r.name,
            r.idem1,
            r.idem2,
            r.maslov,
            r.alexander,
            format!("({})", r.refined.join(", ")),
            r.single
        );
    }
    out
}

fn run(cli: Cli, out: &mut String) -> Result<bool, Exit> {
    match cli.command {
        Command::Verify { nmax, check, json } => return verify(nmax, check, json, out),
        Command::Show { id, format } => *out = render(&load(&id)?, format),
        Command::Simplify { id, format } => *out = render(&simplify(load(&id)?)?, format),
        Command::Tensor { da, dd, format } => {
            let Bimodule::DA(x) = load(&da)? else { return Err(Exit::Usage(format!("`{da}` is not a DA bimodule"))) };
            let Bimodule::DD(k) = load(&dd)? else { return Err(Exit::Usage(format!("`{dd}` is not a DD bimodule"))) };
            *out = render(&Bimodule::DD(box_tensor(&x, &k).map_err(|e| Exit::Fail(e.to_string()))?), format);
        }
        Command::Grade { id } => *out = grade(&load(&id)?),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let mut out = String::new();
    let result = run(Cli::parse(), &mut out);
    // A closed pipe downstream is not an error here.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Exit::Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Exit::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
