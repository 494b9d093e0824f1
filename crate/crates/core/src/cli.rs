//! Command-line front end. Output goes to `out`, diagnostics to `err`.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::ai::{ai_variable_names, ch_ai_integral, check_rank, SoWeight};
use crate::error::Error;
use crate::gl::{ch_gl, gl_variable_names};
use crate::graph::CrystalGraph;
use crate::kmatrix::enumerate_sst_ai;
use crate::partition::Partition;
use crate::rsai::{branch, rs_ai_transcript};
use crate::tableau::{enumerate_ssyt, rs, Tableau, Word};
use crate::verify::{self, Limits, Suite};

#[derive(Parser, Debug)]
#[command(name = "aicrystal", version, about = "AI-crystal tableau model for SO_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List SST_n(λ), or SST_n^AI(λ) with --ai.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        ai: bool,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// The gl (directed) or, with --ai, AI (undirected) crystal graph of SST_n(λ).
    Graph {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        ai: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// ch_gl of SST_n(λ), or ch_AI with --ai.
    Char {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        ai: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Robinson-Schensted transcript. `--n` defaults to the largest letter.
    Rs {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// RS^AI transcript.
    Rsai {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Branching multiplicities [λ : ρ] from gl_n to so_n.
    Branch {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run exhaustive self-checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification) => 1,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn format_or(format: Option<Format>, default: Format, allowed: &[Format]) -> std::result::Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(Failure::Usage(format!("format {f:?} is not supported here").to_lowercase()));
    }
    Ok(f)
}

fn parse_shape(s: &str) -> std::result::Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn parse_letters(s: &str) -> std::result::Result<Vec<u32>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| Failure::Usage(format!("bad letter {t:?}: {e}"))))
        .collect()
}

fn check_n(n: u32) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    Ok(())
}

fn elements(n: u32, shape: &Partition, ai: bool) -> std::result::Result<Vec<Tableau>, Failure> {
    check_n(n)?;
    if ai {
        check_rank(n)?;
        Ok(enumerate_sst_ai(n, shape)?)
    } else {
        Ok(enumerate_ssyt(n, shape))
    }
}

/// `SST_n(λ)`, which carries both structures.
fn crystal(n: u32, shape: &Partition, ai: bool) -> std::result::Result<Vec<Tableau>, Failure> {
    check_n(n)?;
    if ai {
        check_rank(n)?;
    }
    Ok(enumerate_ssyt(n, shape))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Outcome {
    let s = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Enumerate { n, shape, ai, count, format } => {
            let fmt = format_or(format, Format::Json, &[Format::Json, Format::Text])?;
            let all = elements(n, &parse_shape(&shape)?, ai)?;
            if count {
                writeln!(out, "{}", all.len())?;
            } else if fmt == Format::Json {
                json_line(out, &all)?;
            } else {
                for t in &all {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Command::Graph { n, shape, ai, format } => {
            let fmt = format_or(format, Format::Dot, &[Format::Dot, Format::Json])?;
            let all = crystal(n, &parse_shape(&shape)?, ai)?;
            let g = if ai { CrystalGraph::ai(&all) } else { CrystalGraph::gl(&all) };
            match fmt {
                Format::Dot => write!(out, "{}", g.to_dot())?,
                _ => writeln!(out, "{}", g.to_json())?,
            }
        }
        Command::Char { n, shape, ai, format } => {
            let fmt = format_or(format, Format::Text, &[Format::Text, Format::Json])?;
            let shape = parse_shape(&shape)?;
            let all = crystal(n, &shape, ai)?;
            let (ch, names) = if ai {
                (ch_ai_integral(n, &all)?, ai_variable_names(n))
            } else {
                (ch_gl(n, &all), gl_variable_names(n))
            };
            let text = ch.display_with(&names).to_string();
            if fmt == Format::Json {
                let terms: Vec<_> = ch
                    .to_integer_coeffs()
                    .unwrap_or_default()
                    .into_iter()
                    .map(|(e, c)| json!({"exponents": e, "coeff": c}))
                    .collect();
                json_line(
                    out,
                    &json!({"n": n, "shape": shape, "ai": ai, "variables": names, "text": text, "terms": terms}),
                )?;
            } else {
                writeln!(out, "{text}")?;
            }
        }
        Command::Rs { n, word, format } => {
            let fmt = format_or(format, Format::Text, &[Format::Text, Format::Json])?;
            let letters = parse_letters(&word)?;
            let n = n.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(1));
            check_n(n)?;
            let w = Word::new(n, letters)?;
            let steps: Vec<(Tableau, Tableau)> = (0..=w.len()).map(|k| rs(&w.prefix(k))).collect();
            if fmt == Format::Json {
                let rows: Vec<_> =
                    steps.iter().enumerate().map(|(k, (p, q))| json!({"k": k, "p": p, "q": q})).collect();
                let (p, q) = steps.last().expect("step 0");
                json_line(out, &json!({"word": w, "steps": rows, "p": p, "q": q}))?;
            } else {
                for (k, (p, q)) in steps.iter().enumerate().skip(1) {
                    writeln!(out, "{k}\t{}\tP={p}\tQ={q}", w.letters()[k - 1])?;
                }
                let (p, q) = steps.last().expect("step 0");
                writeln!(out, "P = {p}")?;
                writeln!(out, "Q = {q}")?;
            }
        }
        Command::Rsai { n, word, format } => {
            let fmt = format_or(format, Format::Text, &[Format::Text, Format::Json])?;
            check_rank(n)?;
            let w = Word::new(n, parse_letters(&word)?)?;
            let steps = rs_ai_transcript(&w)?;
            let last = steps.last().expect("step 0");
            let ot = crate::rsai::q_ai(&w)?.1;
            if fmt == Format::Json {
                json_line(
                    out,
                    &json!({"word": w, "steps": steps, "p_ai": last.p_ai, "q_ai": last.q, "oscillating": ot}),
                )?;
            } else {
                for s in steps.iter().skip(1) {
                    let sign = match s.sign {
                        crate::Sign::Zero => String::new(),
                        sign => sign.to_string(),
                    };
                    writeln!(
                        out,
                        "{}\t{}\tP={}\tP^AI={}\tshape={}{sign}\tQ={}",
                        s.k,
                        s.letter,
                        s.p,
                        s.p_ai,
                        s.p_ai.shape(),
                        s.q
                    )?;
                }
                writeln!(out, "P^AI = {}", last.p_ai)?;
                writeln!(out, "Q^AI = {}", last.q)?;
                writeln!(out, "oscillating = {ot}")?;
            }
        }
        Command::Branch { n, shape, format } => {
            let fmt = format_or(format, Format::Text, &[Format::Text, Format::Json])?;
            let lm = parse_shape(&shape)?;
            let mult = branch(n, &lm)?;
            let total = enumerate_ssyt(n, &lm).len();
            let mut rows = Vec::new();
            let mut sum = 0;
            // largest shapes first
            for (rho, &k) in mult.iter().rev() {
                let dim = enumerate_sst_ai(n, rho)?.len();
                sum += k * dim;
                rows.push((rho.clone(), SoWeight::from_shape(n, rho)?, k, dim));
            }
            if fmt == Format::Json {
                let entries: Vec<_> = rows
                    .iter()
                    .map(|(rho, nu, k, dim)| json!({"shape": rho, "weights": nu, "multiplicity": k, "dim": dim}))
                    .collect();
                json_line(out, &json!({"n": n, "lambda": lm, "multiplicities": entries, "dim": total}))?;
            } else {
                for (rho, nu, k, dim) in &rows {
                    let nu: Vec<String> = nu.iter().map(ToString::to_string).collect();
                    writeln!(out, "{rho}\t{}\t{k}\t{dim}", nu.join("+"))?;
                }
                writeln!(out, "sum [λ:ρ]·|SST^AI(ρ)| = {sum}, |SST_{n}{lm}| = {total}")?;
            }
            if sum != total {
                return Err(Failure::Verification);
            }
        }
        Command::Verify { suite, max_n, max_size, max_len, format } => {
            let fmt = format_or(format, Format::Text, &[Format::Text, Format::Json])?;
            if max_n < 3 {
                return Err(Failure::Usage("--max-n must be at least 3".into()));
            }
            let report = verify::run(suite, &Limits { max_n, max_size, max_len });
            if fmt == Format::Json {
                json_line(out, &json!({"passed": report.passed(), "checks": report.checks}))?;
            } else {
                for c in &report.checks {
                    writeln!(out, "{c}")?;
                }
                let ok = report.checks.iter().filter(|c| c.passed()).count();
                writeln!(out, "{ok}/{} checks passed", report.checks.len())?;
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
