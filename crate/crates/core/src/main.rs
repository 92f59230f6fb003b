//! Command-line front end: verify identities, solve identity spaces,
//! evaluate on the `x^i*y` basis, linearize, normal-order words, and re-run
//! the built-in verification table.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weylpi::catalog::{named, Name};
use weylpi::freealg::{parse, FreePoly, MultiDegree};
use weylpi::idsolve::solve;
use weylpi::linearize::{lin, Composition};
use weylpi::repro;
use weylpi::scalar::Char;
use weylpi::weyl::{normal_form, parse_word};
use weylpi::witt::{eval_concrete, is_identity, BasisIndex};

#[derive(Parser)]
#[command(
    name = "weylpi",
    version,
    about = "Exact polynomial identities of the x^i*y subspace of the Weyl algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args)]
struct ExprInput {
    /// Polynomial expression, e.g. "St3(x1,x2,x3)*x1" or "[x1,[x2,x3]]".
    #[arg(long, conflicts_with = "named", required_unless_present = "named")]
    expr: Option<String>,

    /// Catalog element, e.g. phi22, psi211, gamma, st3_left_2 (case-insensitive).
    #[arg(long)]
    named: Option<String>,
}

impl ExprInput {
    fn build(&self, ch: Char) -> Result<FreePoly, String> {
        if let Some(name) = &self.named {
            let name: Name = name.parse().map_err(|e| format!("{e}"))?;
            return Ok(named(name, ch));
        }
        let text = self.expr.as_deref().expect("clap enforces one of the two");
        parse(text, ch).map_err(|e| format!("{e}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the polynomial is an identity for the subspace.
    /// Exits 0 for Identity, 1 for NotIdentity (with a witness printed).
    Verify {
        #[command(flatten)]
        input: ExprInput,
        /// Field characteristic: 0 or a prime.
        #[arg(long, default_value = "0")]
        char: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },

    /// Compute the full identity space of one multidegree.
    Solve {
        /// Multidegree, e.g. 2,1,1.
        #[arg(long)]
        mdeg: String,
        #[arg(long, default_value = "0")]
        char: String,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },

    /// Evaluate the polynomial at basis elements c_i = x^i*y.
    Eval {
        #[command(flatten)]
        input: ExprInput,
        /// Basis indices, one per variable, e.g. 1,2.
        #[arg(long)]
        at: String,
        #[arg(long, default_value = "0")]
        char: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },

    /// Partial linearization of one variable.
    Linearize {
        #[command(flatten)]
        input: ExprInput,
        /// Variable to split (1-based).
        #[arg(long)]
        var: u32,
        /// Composition parts, e.g. 1,1.
        #[arg(long)]
        parts: String,
        #[arg(long, default_value = "0")]
        char: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },

    /// Normal-order a word in the generators x, y.
    NormalForm {
        /// Word over the alphabet {x, y}, e.g. yxxy.
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "0")]
        char: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },

    /// Run the built-in verification table; exits nonzero on any mismatch.
    Repro,
}

fn parse_char(s: &str) -> Result<Char, String> {
    s.parse::<Char>()
        .map_err(|_| format!("--char must be 0 or a prime, got `{s}`"))
}

fn parse_u32_list(s: &str, what: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|part| {
            part.trim().parse::<u32>().map_err(|_| {
                format!("{what} must be a comma-separated list of integers, got `{s}`")
            })
        })
        .collect()
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            input,
            char: ch,
            output,
        } => {
            let ch = parse_char(&ch)?;
            let f = input.build(ch)?;
            let report = is_identity(&f);
            match output {
                Output::Text => println!("{}", report.render_text()),
                Output::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                ),
            }
            Ok(if report.is_identity() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Solve {
            mdeg,
            char: ch,
            output,
        } => {
            let ch = parse_char(&ch)?;
            let entries = parse_u32_list(&mdeg, "--mdeg")?;
            let d = MultiDegree::new(entries);
            if d.total() == 0 {
                return Err("--mdeg must have positive total degree".into());
            }
            let report = solve(&d, ch);
            match output {
                Output::Text => print!("{}", report.render_text()),
                Output::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            input,
            at,
            char: ch,
            output,
        } => {
            let ch = parse_char(&ch)?;
            let f = input.build(ch)?;
            let point: Vec<BasisIndex> = parse_u32_list(&at, "--at")?
                .into_iter()
                .map(BasisIndex)
                .collect();
            let value = eval_concrete(&f, &point).map_err(|e| format!("{e}"))?;
            match output {
                Output::Text => println!("{value}"),
                Output::Json => println!("{}", serde_json::json!({ "value": value.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Linearize {
            input,
            var,
            parts,
            char: ch,
            output,
        } => {
            let ch = parse_char(&ch)?;
            let f = input.build(ch)?;
            let parts = parse_u32_list(&parts, "--parts")?;
            let gamma = Composition::new(parts).map_err(|e| format!("{e}"))?;
            let result = lin(&f, var, &gamma).map_err(|e| format!("{e}"))?;
            match output {
                Output::Text => println!("{result}"),
                Output::Json => println!(
                    "{}",
                    serde_json::json!({ "linearization": result.to_string() })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::NormalForm {
            word,
            char: ch,
            output,
        } => {
            let ch = parse_char(&ch)?;
            let letters = parse_word(&word).map_err(|e| format!("{e}"))?;
            let value = normal_form(&letters, ch);
            match output {
                Output::Text => println!("{value}"),
                Output::Json => println!("{}", serde_json::json!({ "value": value.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Repro => {
            let results = repro::run_all();
            let mut all_passed = true;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {} - {}", r.name, r.detail);
                all_passed &= r.passed;
            }
            Ok(if all_passed {
                println!("repro: all {} criteria passed", results.len());
                ExitCode::SUCCESS
            } else {
                println!("repro: MISMATCH detected");
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
