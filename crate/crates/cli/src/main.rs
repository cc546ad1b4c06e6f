use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ptg_core::campaign::{run_fuzz, CampaignConfig};
use ptg_core::generate::{Family, GenSpec};
use ptg_core::instance::{
    format_chordal, format_perfect, format_unknown, parse_certificates, parse_instance, serialize_instance,
};
use ptg_core::{
    decompose, is_chordal, is_perfect, is_perfect_w5free, validate, verify_certificate, DecideError,
    NearTriangulation, DEFAULT_BUDGET,
};

const INPUT_ERROR: u8 = 2;
const BUDGET_EXHAUSTED: u8 = 4;

#[derive(Parser)]
#[command(name = "ptg", version, about = "Chordality and perfection of plane near triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a plane near triangulation.
    Validate { file: String },
    /// Print e, f, t, n_e, n_i and the counting identities.
    Stats { file: String },
    /// Print the separator decomposition tree.
    Decompose { file: String },
    CheckChordal {
        file: String,
        /// Exit with status 1 on a negative verdict.
        #[arg(long)]
        fail_on_negative: bool,
    },
    CheckPerfect {
        file: String,
        /// Use the purely local test; inputs with an induced W5 are reported as not-w5-free.
        #[arg(long)]
        w5_free_only: bool,
        /// Node budget for exhaustive search on leaves containing a W5.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        fail_on_negative: bool,
    },
    /// Write a generated instance: wheel K | fan T | apollonian N | random-near T N_I FLIPS | w-delta DX DY DZ.
    Generate {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Check every CERT line of a report against an instance.
    VerifyCert { instance: String, certificates: String },
    /// Differential campaign: deciders against exhaustive search.
    Fuzz {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads; defaults to one per core.
        #[arg(long)]
        threads: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: INPUT_ERROR, message: message.to_string() }
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| input_error(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<NearTriangulation, Failure> {
    let g = parse_instance(&read_text(path)?).map_err(|e| input_error(format!("{path}: {e}")))?;
    validate(g).map_err(|e| input_error(format!("{path}: {e}")))
}

fn decide_failure(e: DecideError) -> Failure {
    match e {
        DecideError::Triangulation(e) => input_error(e),
        other => Failure { code: 3, message: other.to_string() },
    }
}

fn family(name: &str, p: &[usize]) -> Result<Family, Failure> {
    let arity = |n: usize| {
        if p.len() == n {
            Ok(())
        } else {
            Err(input_error(format!("{name} takes {n} parameter(s), got {}", p.len())))
        }
    };
    match name {
        "wheel" => arity(1).map(|_| Family::Wheel { k: p[0] }),
        "fan" => arity(1).map(|_| Family::Fan { t: p[0] }),
        "apollonian" => arity(1).map(|_| Family::Apollonian { n: p[0] }),
        "random-near" => arity(3).map(|_| Family::RandomNear { t: p[0], n_i: p[1], flips: p[2] }),
        "w-delta" => arity(3).map(|_| Family::WDelta { dx: p[0], dy: p[1], dz: p[2] }),
        _ => Err(input_error(format!("unknown family {name:?}"))),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let mut emit = |s: &str| out.write_all(s.as_bytes()).map_err(|e| input_error(format!("stdout: {e}")));
    match cli.command {
        Command::Validate { file } => {
            let t = load(&file)?;
            let s = t.stats();
            emit(&format!("valid n={} {s}\n", s.n()))?;
        }
        Command::Stats { file } => {
            let s = load(&file)?.stats();
            emit(&format!(
                "n {}\ne {}\nf {}\nt {}\nn_e {}\nn_i {}\n3f=2e-t {}\nf_odd_iff_t_odd {}\ne=2n_e+3n_i-3 {}\n",
                s.n(),
                s.e,
                s.f,
                s.t,
                s.n_e,
                s.n_i,
                s.edge_face_identity(),
                s.parity_identity(),
                s.edge_count_identity()
            ))?;
        }
        Command::Decompose { file } => {
            let tree = decompose(&load(&file)?).map_err(input_error)?;
            emit(&tree.to_string())?;
        }
        Command::CheckChordal { file, fail_on_negative } => {
            let v = is_chordal(&load(&file)?).map_err(decide_failure)?;
            emit(&format_chordal(&v))?;
            if fail_on_negative && !v.is_chordal() {
                return Ok(1);
            }
        }
        Command::CheckPerfect { file, w5_free_only, budget, fail_on_negative } => {
            let t = load(&file)?;
            let v = if w5_free_only { is_perfect_w5free(&t) } else { is_perfect(&t, budget) };
            match v {
                Ok(v) => {
                    emit(&format_perfect(&v))?;
                    if fail_on_negative && !v.is_perfect() {
                        return Ok(1);
                    }
                }
                Err(DecideError::OracleBudgetExceeded { .. }) => {
                    emit(&format_unknown())?;
                    return Ok(BUDGET_EXHAUSTED);
                }
                Err(e) => return Err(decide_failure(e)),
            }
        }
        Command::Generate { family: name, params, seed, output } => {
            let spec = GenSpec { family: family(&name, &params)?, seed };
            let t = spec.generate().map_err(input_error)?;
            let text = serialize_instance(t.graph());
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| input_error(format!("{path}: {e}")))?,
                None => emit(&text)?,
            }
        }
        Command::VerifyCert { instance, certificates } => {
            let t = load(&instance)?;
            let certs = parse_certificates(&read_text(&certificates)?)
                .map_err(|e| input_error(format!("{certificates}: {e}")))?;
            if certs.is_empty() {
                return Err(input_error(format!("{certificates}: no CERT lines")));
            }
            let mut all_ok = true;
            for c in &certs {
                match verify_certificate(t.adjacency(), c) {
                    Ok(()) => emit(&format!("valid {c}\n"))?,
                    Err(flaw) => {
                        all_ok = false;
                        emit(&format!("invalid {c}: {flaw}\n"))?;
                    }
                }
            }
            if !all_ok {
                return Ok(1);
            }
        }
        Command::Fuzz { max_n, instances, seed, budget, threads } => {
            if max_n < 4 {
                return Err(input_error("--max-n must be at least 4"));
            }
            let config = CampaignConfig { max_n, instances, seed, budget };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(k) = threads {
                pool = pool.num_threads(k);
            }
            let pool = pool.build().map_err(input_error)?;
            let report = pool.install(|| run_fuzz(&config));
            emit(&format!("{config}\n{report}"))?;
            return Ok(report.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
