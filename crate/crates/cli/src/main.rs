use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use iafn::checks::{self, CheckReport};
use iafn::Word;

#[derive(Parser)]
#[command(name = "iafn", version, about = "Exact checks on free Lie algebras and the Johnson filtration of IA(F_n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Highest degree (weight) to check.
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    /// Truncation degree of Magnus expansions.
    #[arg(long, global = true)]
    truncation: Option<usize>,

    /// Rank of the free group.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    parallel: Option<usize>,

    /// Allow the expensive degree-6 quotient computation.
    #[arg(long, global = true)]
    opt_in_heavy: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Ranks and torsion of L^c / J^c for the free Lie algebra of rank 6.
    Theorem1,
    /// Leading Lie terms of r1..r9 against the degree-2 generators of J.
    RTerms,
    /// McCool relators evaluate to the identity.
    VerifyMccool,
    /// Graded ranks of H and Inn(F_3) and directness of their sum.
    Pr4,
    /// Lower and upper bounds on the graded ranks of M_3.
    Bounds,
    /// Weight-c commutator ranks in H = <chi21, chi12, chi23>.
    Re3,
    /// Witt ranks against brute-force Lyndon counts.
    Witt,
    /// Johnson depths of basic automorphisms and of inner automorphisms.
    JohnsonDepth {
        /// Word g, e.g. "x1 x2 x1^-1 x2^-1"; checks the depth of conjugation by g.
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

fn run(cli: &Cli) -> Result<CheckReport, String> {
    let res = match &cli.command {
        Command::Theorem1 => checks::cmd_theorem1(cli.max_degree.unwrap_or(5), cli.opt_in_heavy),
        Command::RTerms => checks::cmd_r_leading_terms(),
        Command::VerifyMccool => checks::cmd_verify_mccool(cli.n.unwrap_or(3), cli.truncation.unwrap_or(8)),
        Command::Pr4 => checks::cmd_pr4(cli.max_degree.unwrap_or(4), cli.truncation),
        Command::Bounds => checks::cmd_bounds(cli.max_degree.unwrap_or(4), cli.truncation),
        Command::Re3 => checks::cmd_re3(cli.max_degree.unwrap_or(4)),
        Command::Witt => checks::cmd_witt(cli.n.unwrap_or(6), cli.max_degree.unwrap_or(8)),
        Command::JohnsonDepth { word } => {
            let g: Option<Word> = word.as_deref().map(str::parse).transpose().map_err(|e| format!("{e}"))?;
            let n = cli.n.unwrap_or_else(|| g.as_ref().map_or(3, |w| w.max_letter().max(3)));
            checks::cmd_johnson_depth(n, cli.truncation.unwrap_or(6), g.as_ref())
        }
    };
    res.map_err(|e| e.to_string())
}

fn cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_table(out: &mut impl Write, rep: &CheckReport) -> io::Result<()> {
    writeln!(out, "{} ({} ms)", rep.check, rep.elapsed_ms)?;
    let cells: Vec<[String; 6]> = rep
        .rows
        .iter()
        .map(|r| {
            [
                r.degree.to_string(),
                r.label.clone(),
                cell(&r.computed),
                cell(&r.expected),
                serde_json::to_value(r.provenance).unwrap().as_str().unwrap().to_string(),
                if r.pass { "ok".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let header = ["deg", "check", "computed", "expected", "source", "result"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    for row in std::iter::once(&header).chain(&cells) {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "  {}", line.join("  ").trim_end())?;
    }
    for note in &rep.notes {
        writeln!(out, "  note: {note}")?;
    }
    let failed = rep.rows.iter().filter(|r| !r.pass).count();
    writeln!(out, "{} rows, {} failed", rep.rows.len(), failed)
}

fn write_csv(out: impl Write, rep: &CheckReport) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check", "degree", "label", "computed", "expected", "provenance", "pass"])?;
    for r in &rep.rows {
        w.write_record([
            rep.check.clone(),
            r.degree.to_string(),
            r.label.clone(),
            cell(&r.computed),
            cell(&r.expected),
            serde_json::to_value(r.provenance).unwrap().as_str().unwrap().to_string(),
            r.pass.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.parallel {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let rep = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !matches!(cli.format, Format::Table) {
        for note in &rep.notes {
            eprintln!("note: {note}");
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match cli.format {
        Format::Table => write_table(&mut out, &rep).map_err(|e| e.to_string()),
        Format::Json => serde_json::to_writer_pretty(&mut out, &rep)
            .map_err(|e| e.to_string())
            .and_then(|_| writeln!(out).map_err(|e| e.to_string())),
        Format::Csv => write_csv(&mut out, &rep).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
