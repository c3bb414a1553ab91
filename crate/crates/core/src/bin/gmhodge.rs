use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gmhodge::cli::{batch, render_text, run, Command, Request};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "gmhodge", version, about = "Brieskorn modules, Gauss-Manin connections and mixed Hodge bases of tame polynomials")]
struct Cli {
    /// Comma-separated variable names.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Vec<String>,
    /// Comma-separated positive weights (default: all 1).
    #[arg(long, global = true, value_delimiter = ',')]
    weights: Vec<u32>,
    /// The polynomial, with explicit `*` and `^`.
    #[arg(long, global = true)]
    poly: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Treat t as a generic value (dbeta, imk, changebase, muldf).
    #[arg(long, global = true)]
    generic: bool,
    /// The polynomial S(t) used by the connection.
    #[arg(long, global = true)]
    s: Option<String>,
    /// Form argument: `P` for P dx, or `c0; ...; cn` for linearp.
    #[arg(long, global = true)]
    form: Option<String>,
    /// Number of times to apply the connection (nabla).
    #[arg(long, global = true)]
    iterate: Option<usize>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    Okbase,
    Abeta,
    S,
    SqfreeS,
    Linear,
    Linearp,
    Nabla,
    Nablamat,
    Dbeta,
    Imk,
    Changebase,
    Pfeq,
    Muldf,
    /// Newline-delimited JSON requests from a file, or `-` for stdin.
    Batch { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match &cli.command {
        Sub::Batch { file } => return run_batch(file),
        Sub::Okbase => Command::Okbase,
        Sub::Abeta => Command::Abeta,
        Sub::S => Command::S,
        Sub::SqfreeS => Command::SqfreeS,
        Sub::Linear => Command::Linear,
        Sub::Linearp => Command::Linearp,
        Sub::Nabla => Command::Nabla,
        Sub::Nablamat => Command::Nablamat,
        Sub::Dbeta => Command::Dbeta,
        Sub::Imk => Command::Imk,
        Sub::Changebase => Command::Changebase,
        Sub::Pfeq => Command::Pfeq,
        Sub::Muldf => Command::Muldf,
    };
    let Some(poly) = cli.poly.clone() else {
        eprintln!("error: --poly is required");
        return ExitCode::from(2);
    };
    let req = Request {
        poly,
        vars: cli.vars.clone(),
        weights: (!cli.weights.is_empty()).then(|| cli.weights.clone()),
        command,
        form: cli.form.clone(),
        s: cli.s.clone(),
        generic: cli.generic,
        iterate: cli.iterate,
    };
    let resp = run(&req);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&resp).expect("serializable")),
        Format::Text if resp.ok => print!("{}", render_text(&resp)),
        Format::Text => eprint!("{}", render_text(&resp)),
    }
    ExitCode::from(resp.exit_code() as u8)
}

fn run_batch(file: &str) -> ExitCode {
    let mut input = String::new();
    let read = if file == "-" {
        std::io::stdin().read_to_string(&mut input).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|s| input = s)
    };
    if let Err(e) = read {
        eprintln!("error: cannot read {file}: {e}");
        return ExitCode::from(2);
    }
    let out = batch(&input);
    for r in &out {
        println!("{}", serde_json::to_string(r).expect("serializable"));
    }
    ExitCode::from(out.iter().map(|r| r.exit_code()).max().unwrap_or(0) as u8)
}
