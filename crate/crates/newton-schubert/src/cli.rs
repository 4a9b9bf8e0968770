//! Command-line front end: a small parser for Schubert-cycle monomials,
//! subcommands for every evaluator, machine-readable output and the
//! benchmark harness.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use thiserror::Error;

use crate::derivations::{integral_of_word, Factor, OperatorWord};
use crate::enumerate;
use crate::exterior::{IndexTuple, Shape};
use crate::newton::{integrate_reduced, reduce_word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BALANCE: i32 = 3;

/// One parsed cycle: a special cycle sigma_i or a Schur cycle sigma_I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cycle {
    Special(u32),
    Schur(Vec<u32>),
}

/// A monomial in Schubert cycles, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleExpression {
    pub factors: Vec<(Cycle, u32)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        message: message.into(),
    }
}

/// Parses the grammar
/// ```text
/// expr    := factor (("*" | whitespace) factor)*
/// factor  := cycle ("^" uint)?
/// cycle   := "s" uint | "s[" uint ("," uint)* "]"
/// ```
/// Schur indices must be strictly increasing.
pub fn parse_cycle(text: &str) -> Result<CycleExpression, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut factors = Vec::new();

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn parse_uint(bytes: &[u8], pos: &mut usize) -> Result<u32, ParseError> {
        let start = *pos;
        let mut value: u64 = 0;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            value = value * 10 + (bytes[*pos] - b'0') as u64;
            if value > u32::MAX as u64 {
                return Err(err(start, "integer overflow"));
            }
            *pos += 1;
        }
        if *pos == start {
            return Err(err(start, "expected an unsigned integer"));
        }
        Ok(value as u32)
    }

    skip_ws(bytes, &mut pos);
    if pos == bytes.len() {
        return Err(err(0, "empty input"));
    }
    loop {
        if pos >= bytes.len() || bytes[pos] != b's' {
            return Err(err(pos, "expected a cycle starting with 's'"));
        }
        pos += 1;
        let cycle = if pos < bytes.len() && bytes[pos] == b'[' {
            pos += 1;
            let mut indices = Vec::new();
            loop {
                skip_ws(bytes, &mut pos);
                let at = pos;
                let v = parse_uint(bytes, &mut pos)?;
                if let Some(&last) = indices.last() {
                    if v <= last {
                        return Err(err(at, "Schur indices must be strictly increasing"));
                    }
                }
                indices.push(v);
                skip_ws(bytes, &mut pos);
                if pos < bytes.len() && bytes[pos] == b',' {
                    pos += 1;
                    continue;
                }
                if pos < bytes.len() && bytes[pos] == b']' {
                    pos += 1;
                    break;
                }
                return Err(err(pos, "expected ',' or ']'"));
            }
            if indices.iter().any(|&i| i == 0) {
                return Err(err(pos, "Schur indices must be positive"));
            }
            Cycle::Schur(indices)
        } else {
            Cycle::Special(parse_uint(bytes, &mut pos)?)
        };
        let mut exp = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            exp = parse_uint(bytes, &mut pos)?;
        }
        factors.push((cycle, exp));
        // separator: '*' (optionally spaced) or bare whitespace
        let before = pos;
        skip_ws(bytes, &mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] == b'*' {
            pos += 1;
            skip_ws(bytes, &mut pos);
            if pos == bytes.len() {
                return Err(err(pos, "trailing '*'"));
            }
        } else if before == pos {
            return Err(err(pos, "expected '*' or whitespace between factors"));
        }
    }
    Ok(CycleExpression { factors })
}

impl fmt::Display for CycleExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, (cycle, exp)) in self.factors.iter().enumerate() {
            if pos > 0 {
                write!(f, "*")?;
            }
            match cycle {
                Cycle::Special(i) => write!(f, "s{i}")?,
                Cycle::Schur(indices) => {
                    write!(f, "s[")?;
                    for (p, i) in indices.iter().enumerate() {
                        if p > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{i}")?;
                    }
                    write!(f, "]")?;
                }
            }
            if *exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl CycleExpression {
    /// Translates the expression to an operator word for the given shape.
    /// Schur indices must fit the shape (length k, entries <= n).
    pub fn to_word(&self, shape: Shape) -> Result<OperatorWord, String> {
        let mut factors = Vec::new();
        for (cycle, exp) in &self.factors {
            match cycle {
                Cycle::Special(i) => factors.push(Factor::D { h: *i, exp: *exp }),
                Cycle::Schur(indices) => {
                    if indices.len() != shape.k as usize {
                        return Err(format!(
                            "Schur index length {} does not match k = {}",
                            indices.len(),
                            shape.k
                        ));
                    }
                    if indices.iter().any(|&i| i > shape.n) {
                        return Err(format!("Schur index exceeds n = {}", shape.n));
                    }
                    factors.push(Factor::Schur {
                        tuple: IndexTuple::new(indices.clone(), shape),
                        exp: *exp,
                    });
                }
            }
        }
        Ok(OperatorWord::new(factors))
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "newton-schubert",
    about = "Exact Schubert calculus on Grassmannians via exterior-algebra derivations",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON (values as decimal strings)
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON record to this path
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<std::path::PathBuf>,
    /// Worker threads for parallel sums (default: available parallelism;
    /// NEWTON_SCHUBERT_WORKERS overrides)
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree of a Schubert variety in the Pluecker embedding
    Degree {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Comma-separated indices, e.g. 1,3
        #[arg(long)]
        index: String,
    },
    /// Integral of a Schubert-cycle monomial over G(k,n)
    Intersect {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Cycle expression, e.g. "s1^3 * s[1,3,5]"
        expr: String,
        /// Evaluate by direct Leibniz iteration instead of reduction
        #[arg(long)]
        oracle: bool,
        /// Run both paths and insist they agree
        #[arg(long)]
        both: bool,
    },
    /// Pencils with prescribed ramification (Scherbak's formula)
    Pencils {
        #[arg(long)]
        n: u32,
        /// Comma-separated ramification weights q1,...,qh
        #[arg(long)]
        ram: String,
    },
    /// Plane rational curves with a flexes, b hyperflexes, c cusps, d tacnodes
    Nets(AbcdArgs),
    /// Space rational curves with a stalls, b hyperstalls, c flexes, d cusps
    Webs(AbcdArgs),
    /// HS_n: space rational curves with 2n hyperstalls
    Hyperstalls {
        #[arg(long)]
        n: u32,
        /// Print the whole table HS_0..HS_n
        #[arg(long)]
        upto: bool,
    },
    /// Space rational curves with 2n flexes (Ranestad's number)
    Ranestad {
        #[arg(long)]
        n: u32,
    },
    /// Compare closed form, Newton reduction and naive Leibniz iteration
    Bench {
        #[arg(long, value_enum)]
        suite: BenchSuite,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Args, Debug)]
struct AbcdArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    c: u32,
    #[arg(long)]
    d: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BenchSuite {
    Hyperstalls,
    Intersect,
}

fn parse_index_list(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad index {p:?}: {e}"))
        })
        .collect()
}

struct Output {
    json: bool,
    json_out: Option<std::path::PathBuf>,
}

impl Output {
    fn emit_value(&self, value: &BigInt, shape: Shape, input: &str) -> i32 {
        if self.json || self.json_out.is_some() {
            let record = serde_json::json!({
                "value": value.to_string(),
                "shape": {"k": shape.k, "n": shape.n},
                "input": input,
            });
            if let Some(path) = &self.json_out {
                if let Err(e) = std::fs::write(path, format!("{record}\n")) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            if self.json {
                println!("{record}");
                return EXIT_OK;
            }
        }
        println!("{value}");
        EXIT_OK
    }
}

fn balance_error(kind: &str, got: u64, expected: u64) -> i32 {
    eprintln!("balance violation: {kind} total weight is {got}, expected {expected}");
    EXIT_BALANCE
}

fn effective_workers(flag: Option<usize>) -> usize {
    if let Ok(v) = std::env::var("NEWTON_SCHUBERT_WORKERS") {
        if let Ok(w) = v.parse::<usize>() {
            if w >= 1 {
                return w;
            }
        }
    }
    flag.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|v| v.get())
            .unwrap_or(1)
    })
}

/// Entry point shared by the binary and the tests.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let out = Output {
        json: cli.json,
        json_out: cli.json_out.clone(),
    };
    let workers = effective_workers(cli.workers);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot build worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    pool.install(|| dispatch(cli.command, &out))
}

fn dispatch(command: Command, out: &Output) -> i32 {
    match command {
        Command::Degree { k, n, index } => {
            if k < 1 || k > n {
                eprintln!("need 1 <= k <= n, got k={k} n={n}");
                return EXIT_USAGE;
            }
            let indices = match parse_index_list(&index) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            if indices.len() != k as usize {
                eprintln!("index has {} entries, expected k = {k}", indices.len());
                return EXIT_USAGE;
            }
            let shape = Shape::new(k, n);
            let value = enumerate::schubert_degree(&indices, shape);
            let input = format!(
                "degree {}",
                indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out.emit_value(&value, shape, &input)
        }
        Command::Intersect {
            k,
            n,
            expr,
            oracle,
            both,
        } => {
            if k < 1 || k > n {
                eprintln!("need 1 <= k <= n, got k={k} n={n}");
                return EXIT_USAGE;
            }
            let shape = Shape::new(k, n);
            let parsed = match parse_cycle(&expr) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            let word = match parsed.to_word(shape) {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            if word.degree() as u64 != shape.top_weight() as u64 {
                return balance_error(
                    "cycle monomial",
                    word.degree() as u64,
                    shape.top_weight() as u64,
                );
            }
            let reduce = || {
                integrate_reduced(&reduce_word(&word, &IndexTuple::fundamental(shape), shape))
            };
            let value = if both {
                let a = reduce();
                let b = integral_of_word(shape, &word);
                if a != b {
                    eprintln!("reduction/oracle mismatch: {a} vs {b}");
                    return EXIT_USAGE;
                }
                a
            } else if oracle {
                integral_of_word(shape, &word)
            } else {
                reduce()
            };
            out.emit_value(&value, shape, &parsed.to_string())
        }
        Command::Pencils { n, ram } => {
            let q = match parse_index_list(&ram) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            let total: u64 = q.iter().map(|&x| x as u64).sum();
            if total != 2 * n as u64 {
                return balance_error("pencil ramification", total, 2 * n as u64);
            }
            let shape = Shape::new(2, n + 2);
            let value = enumerate::scherbak(&q, n);
            let input = format!(
                "pencils q={}",
                q.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            );
            out.emit_value(&value, shape, &input)
        }
        Command::Nets(args) => {
            let AbcdArgs { n, a, b, c, d } = args;
            let total = (a + 2 * b + 2 * c + 3 * d) as u64;
            if total != 3 * n as u64 {
                return balance_error("net ramification", total, 3 * n as u64);
            }
            let shape = Shape::new(3, n + 3);
            let value = enumerate::count_nets(a, b, c, d, n);
            out.emit_value(&value, shape, &format!("nets a={a} b={b} c={c} d={d}"))
        }
        Command::Webs(args) => {
            let AbcdArgs { n, a, b, c, d } = args;
            let total = (a + 2 * b + 2 * c + 3 * d) as u64;
            if total != 4 * n as u64 {
                return balance_error("web ramification", total, 4 * n as u64);
            }
            let shape = Shape::new(4, n + 4);
            let value = enumerate::count_webs(a, b, c, d, n);
            out.emit_value(&value, shape, &format!("webs a={a} b={b} c={c} d={d}"))
        }
        Command::Hyperstalls { n, upto } => {
            let shape = Shape::new(4, n + 4);
            if upto {
                let values: Vec<String> =
                    (0..=n).map(|m| enumerate::hyperstalls(m).to_string()).collect();
                if out.json || out.json_out.is_some() {
                    let record = serde_json::json!({
                        "values": values,
                        "shape": {"k": shape.k, "n": shape.n},
                        "input": format!("hyperstalls upto n={n}"),
                    });
                    if let Some(path) = &out.json_out {
                        if let Err(e) = std::fs::write(path, format!("{record}\n")) {
                            eprintln!("cannot write {}: {e}", path.display());
                            return EXIT_USAGE;
                        }
                    }
                    if out.json {
                        println!("{record}");
                        return EXIT_OK;
                    }
                }
                for (m, v) in values.iter().enumerate() {
                    println!("HS_{m} = {v}");
                }
                EXIT_OK
            } else {
                let value = enumerate::hyperstalls(n);
                out.emit_value(&value, shape, &format!("hyperstalls n={n}"))
            }
        }
        Command::Ranestad { n } => {
            let shape = Shape::new(4, n + 4);
            let value = enumerate::ranestad(n);
            out.emit_value(&value, shape, &format!("ranestad n={n}"))
        }
        Command::Bench { suite, n } => run_bench(suite, n),
    }
}

fn median_of_3<F: FnMut() -> BigInt>(mut f: F) -> (BigInt, f64) {
    let mut times = Vec::with_capacity(3);
    let mut value = BigInt::from(0);
    for _ in 0..3 {
        let start = Instant::now();
        value = f();
        times.push(start.elapsed().as_secs_f64() * 1000.0);
    }
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (value, times[1])
}

fn run_bench(suite: BenchSuite, n: u32) -> i32 {
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match suite {
        BenchSuite::Hyperstalls => {
            let shape = Shape::new(4, n + 4);
            let word = OperatorWord::d_power(2, 2 * n);
            let g = IndexTuple::fundamental(shape);
            let (closed, t_closed) = median_of_3(|| enumerate::hyperstalls(n));
            let form = reduce_word(&word, &g, shape);
            let (reduced, t_reduced) =
                median_of_3(|| integrate_reduced(&reduce_word(&word, &g, shape)));
            let (naive, t_naive) = median_of_3(|| integral_of_word(shape, &word));
            assert_eq!(closed, reduced);
            assert_eq!(closed, naive);
            writeln!(w, "suite: hyperstalls, n = {n}, value = {closed}").unwrap();
            writeln!(
                w,
                "closed form       {t_closed:>12.3} ms  (median of 3)"
            )
            .unwrap();
            writeln!(
                w,
                "newton reduction  {t_reduced:>12.3} ms  ({} normal-form terms)",
                form.num_terms()
            )
            .unwrap();
            writeln!(w, "naive leibniz     {t_naive:>12.3} ms").unwrap();
            writeln!(
                w,
                "speedup closed vs naive: {:.1}x",
                t_naive / t_closed.max(1e-9)
            )
            .unwrap();
        }
        BenchSuite::Intersect => {
            let shape = Shape::new(2, n + 2);
            let word = OperatorWord::d_power(1, 2 * n);
            let g = IndexTuple::fundamental(shape);
            let q: Vec<u32> = vec![1; 2 * n as usize];
            let (closed, t_closed) = median_of_3(|| enumerate::scherbak(&q, n));
            let form = reduce_word(&word, &g, shape);
            let (reduced, t_reduced) =
                median_of_3(|| integrate_reduced(&reduce_word(&word, &g, shape)));
            let (naive, t_naive) = median_of_3(|| integral_of_word(shape, &word));
            assert_eq!(closed, reduced);
            assert_eq!(closed, naive);
            writeln!(w, "suite: intersect, n = {n}, value = {closed}").unwrap();
            writeln!(w, "closed form       {t_closed:>12.3} ms  (median of 3)").unwrap();
            writeln!(
                w,
                "newton reduction  {t_reduced:>12.3} ms  ({} normal-form terms)",
                form.num_terms()
            )
            .unwrap();
            writeln!(w, "naive leibniz     {t_naive:>12.3} ms").unwrap();
            writeln!(
                w,
                "speedup closed vs naive: {:.1}x",
                t_naive / t_closed.max(1e-9)
            )
            .unwrap();
        }
    }
    EXIT_OK
}
