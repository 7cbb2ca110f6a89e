use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxeter_rh_cli::{parse_input, run, CliError, Command, Format, InputDocument};

#[derive(Parser)]
#[command(name = "coxeter-rh", version, about = "Hyperbolicity questions for Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Input file, or `-` for standard input
    #[arg(global = true)]
    input: Option<PathBuf>,

    /// Named family instead of an input file, e.g. chain4:7 or Dt:5
    #[arg(long, global = true, conflicts_with = "input")]
    family: Option<String>,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto, global = true)]
    format: InputFormat,

    /// Emit a JSON report
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Json,
    Txt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a subset (default: all generators) and list distinguished subsets
    Classify {
        /// Comma-separated generators
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, default_value_t = 1)]
        min_rank: usize,
    },
    /// Generators commuting with every member of a subset
    Perp {
        #[arg(long)]
        subset: String,
    },
    /// Gromov hyperbolicity
    Moussong,
    /// Check RH1 and RH2 for a family of types
    RelhypVerify {
        /// JSON list of generator lists
        #[arg(long)]
        types: String,
    },
    /// The finest family satisfying RH1 and RH2
    RelhypMinimal,
    /// Hyperbolic, relatively hyperbolic or neither
    Decide,
    /// The family of maximal parabolics avoiding a generator
    Maxparab {
        #[arg(long)]
        s0: String,
    },
    /// Isolated flats and the equivalent conditions
    IsolatedFlats,
    /// Graph form of the isolated flats condition and join sets
    Racg {
        #[arg(long, default_value_t = 2)]
        min_pairs: usize,
    },
    /// Coxeter diagram in DOT format
    Dot,
}

impl Cmd {
    fn into_command(self) -> Command {
        match self {
            Cmd::Classify { subset, min_rank } => Command::Classify { subset, min_rank },
            Cmd::Perp { subset } => Command::Perp { subset },
            Cmd::Moussong => Command::Moussong,
            Cmd::RelhypVerify { types } => Command::RelhypVerify { types },
            Cmd::RelhypMinimal => Command::RelhypMinimal,
            Cmd::Decide => Command::Decide,
            Cmd::Maxparab { s0 } => Command::Maxparab { s0 },
            Cmd::IsolatedFlats => Command::IsolatedFlats,
            Cmd::Racg { min_pairs } => Command::Racg { min_pairs },
            Cmd::Dot => Command::Dot,
        }
    }
}

fn read_document(cli: &Cli) -> Result<InputDocument, CliError> {
    if let Some(family) = &cli.family {
        return Ok(InputDocument::Family {
            family: family.clone(),
            n: None,
        });
    }
    let bytes = match cli.input.as_deref() {
        None => return Err(CliError::Usage("no input: give a file, `-` or --family".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            buf
        }
        Some(p) => std::fs::read(p)?,
    };
    let format = match cli.format {
        InputFormat::Auto => Format::sniff(&bytes),
        InputFormat::Json => Format::Json,
        InputFormat::Txt => Format::Txt,
    };
    Ok(parse_input(&bytes, format)?)
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let command = std::mem::replace(&mut cli.command, Cmd::Dot).into_command();
    match read_document(&cli).and_then(|doc| run(&command, &doc)) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render(cli.json).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("coxeter-rh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
