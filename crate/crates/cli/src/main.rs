//! `tableau`: row/column insertion, commutation checks, exhaustive sweeps,
//! RSK and rendering from the command line.
//!
//! Exit status: 0 on success, 1 when a commutation check or sweep fails, 2 on
//! invalid input.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tableau_trails::format::{commutation_records, side_by_side};
use tableau_trails::{
    column_insert, commute_check, parse_tableau, render, render_annotated, row_insert, rsk,
    run_sweep, Annotate, Convention, IntersectionReport, Label, OutputFormat, RenderOptions,
    SweepOptions, Tableau,
};

#[derive(Parser)]
#[command(
    name = "tableau",
    version,
    about = "Schensted insertion with explicit trails"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Row,
    Col,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    French,
    English,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnnotateArg {
    None,
    Trails,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Output {
    Text,
    Kv,
}

#[derive(clap::Args)]
struct Input {
    /// Tableau file (one row per line, first row first); standard input if omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(clap::Args)]
struct Look {
    #[arg(long, value_enum, default_value = "french")]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value = "ascii")]
    format: FormatArg,
}

impl Look {
    fn options(&self, annotate: Annotate) -> RenderOptions {
        RenderOptions {
            convention: match self.convention {
                ConventionArg::French => Convention::French,
                ConventionArg::English => Convention::English,
            },
            format: match self.format {
                FormatArg::Ascii => OutputFormat::Ascii,
                FormatArg::Latex => OutputFormat::Latex,
            },
            annotate,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Insert one value by row (T <- v) or by column (v -> T).
    Insert {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        value: Label,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        look: Look,
    },
    /// Compare (x -> T) <- y, x -> (T <- y) and the fused two-trail insertion.
    Commute {
        /// Value inserted by column.
        #[arg(long)]
        x: Label,
        /// Value inserted by row.
        #[arg(long)]
        y: Label,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        look: Look,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Exhaustively check every case with |T| <= max-n.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value_t = tableau_trails::modify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Insertion and recording tableaux of a word of distinct labels.
    Rsk {
        #[arg(required = false)]
        word: Vec<Label>,
        #[command(flatten)]
        look: Look,
    },
    /// Draw a tableau, optionally marking the trails of x -> T and T <- y.
    Render {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        look: Look,
        #[arg(long, value_enum, default_value = "none")]
        annotate: AnnotateArg,
        /// Column-inserted value whose trail is marked.
        #[arg(long)]
        x: Option<Label>,
        /// Row-inserted value whose trail is marked.
        #[arg(long)]
        y: Option<Label>,
    },
}

/// Failure that maps to exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_tableau(input: &Input) -> Result<Tableau, InputError> {
    let text = match &input.file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_tableau(&text)?)
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Insert {
            mode,
            value,
            input,
            look,
        } => {
            let t = read_tableau(&input)?;
            let (out, trail) = match mode {
                Mode::Row => row_insert(&t, value)?,
                Mode::Col => column_insert(value, &t)?,
            };
            print!("{}", render(&out, &look.options(Annotate::None)));
            println!("trail:");
            print!("{trail}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Commute {
            x,
            y,
            input,
            look,
            output,
        } => {
            let t = read_tableau(&input)?;
            let report = commute_check(&t, x, y)?;
            match output {
                Output::Kv => print!("{}", commutation_records(&report)),
                Output::Text => {
                    let opts = look.options(Annotate::None);
                    let blocks = [
                        ("(x->T)<-y", render(&report.left, &opts)),
                        ("x->(T<-y)", render(&report.right, &opts)),
                        ("fused", render(&report.fused, &opts)),
                    ];
                    print!("{}", side_by_side(&blocks, 4));
                    println!("intersection: {}", report.intersection);
                    let competing = match &report.intersection {
                        IntersectionReport::SharedEmptyBox { a, i, .. } => Some((*a, *i)),
                        IntersectionReport::Strong(st) => Some((st.a, st.i)),
                        IntersectionReport::Disjoint => None,
                    };
                    if let Some((a, i)) = competing {
                        println!("conflict: {}", if i < a { "i < a" } else { "i > a" });
                    }
                    println!("{}", if report.all_equal { "EQUAL" } else { "UNEQUAL" });
                }
            }
            Ok(if report.all_equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            max_n,
            workers,
            seed,
            output,
        } => {
            let summary = run_sweep(&SweepOptions {
                max_n,
                workers,
                seed,
            });
            match output {
                Output::Text => println!("{summary}"),
                Output::Kv => print!("{}", summary.records()),
            }
            Ok(if summary.failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Rsk { word, look } => {
            let (p, q) = rsk(&word)?;
            let opts = look.options(Annotate::None);
            println!("P:");
            print!("{}", render(&p, &opts));
            println!("Q:");
            print!("{}", render(&q, &opts));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            input,
            look,
            annotate,
            x,
            y,
        } => {
            let t = read_tableau(&input)?;
            let annotate = match annotate {
                AnnotateArg::None => Annotate::None,
                AnnotateArg::Trails => Annotate::Trails,
            };
            if annotate == Annotate::Trails && x.is_none() && y.is_none() {
                return Err(InputError("--annotate trails needs --x and/or --y".into()));
            }
            let row_trail = y
                .map(|y| row_insert(&t, y))
                .transpose()?
                .map(|(_, trail)| trail);
            let col_trail = x
                .map(|x| column_insert(x, &t))
                .transpose()?
                .map(|(_, trail)| trail);
            print!(
                "{}",
                render_annotated(
                    &t,
                    &look.options(annotate),
                    row_trail.as_ref(),
                    col_trail.as_ref()
                )
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
