//! `yangbaxter <command> <type> <rank> [WORDS...]`
//!
//! Exit codes: 0 success, 1 a verified identity failed, 2 invalid
//! configuration, 3 Weyl group larger than the cap.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use serde_json::{json, Map, Value};
use yangbaxter::hecke::{recurrence_p, recurrence_ptilde, Side};
use yangbaxter::rootdata::DEFAULT_CAP;
use yangbaxter::{verify, CartanType, Casselman, CoeffTable, Error, HeckeAlgebra, RootDatum, Scalar, WeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Transition tables p, ptilde (or a, b with --specialize).
    Table,
    /// Every identity suite; exit 1 if any fails.
    Verify,
    /// Factorization scan for m and mtilde.
    Conjecture,
    /// Whittaker sum for one w and mu.
    Whittaker,
    /// A single coefficient.
    Eval,
    /// Cartan matrix, roots and elements.
    DatumDump,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    P,
    Ptilde,
    A,
    B,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::P => "p",
            Which::Ptilde => "ptilde",
            Which::A => "a",
            Which::B => "b",
        }
    }

    fn specialized(self) -> bool {
        matches!(self, Which::A | Which::B)
    }
}

#[derive(Parser, Debug)]
#[command(name = "yangbaxter", version, about = "Yang-Baxter bases of Hecke algebras and Casselman's problem")]
#[command(group(ArgGroup::new("which").args(["p", "ptilde", "a", "b"])))]
struct Cli {
    command: Command,
    /// Cartan type: A, B, C, D or G.
    #[arg(value_name = "TYPE")]
    cartan_type: String,
    rank: usize,
    /// Weyl group words (`s1s2`, `s1.s2`, `e`); `eval` reads `w v` from here.
    words: Vec<String>,
    /// Specialize to t1 = -q^{-1}, t2 = 1.
    #[arg(long)]
    specialize: bool,
    /// Evaluate at the exact rational q = NUM/DEN.
    #[arg(long, value_name = "NUM/DEN")]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_name = "WORD")]
    w: Option<String>,
    #[arg(long, value_name = "WORD")]
    v: Option<String>,
    /// Weight in fundamental-weight coordinates, `c1,..,cr`.
    #[arg(long, value_name = "c1,..,cr", allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long)]
    p: bool,
    #[arg(long)]
    ptilde: bool,
    #[arg(long)]
    a: bool,
    #[arg(long)]
    b: bool,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest Weyl group accepted.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Rendered output plus the exit code it should produce.
struct Output {
    body: String,
    code: u8,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.body).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", out.body);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(out.code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(Failure::config("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::config(e.to_string()))?;
    }
    let ty: CartanType = cli.cartan_type.parse()?;
    let q = cli.q.as_deref().map(parse_q).transpose()?;
    let datum = RootDatum::build_with_cap(ty, cli.rank, cli.cap)?;
    match cli.command {
        Command::Table => cmd_table(cli, &datum, q),
        Command::Verify => cmd_verify(cli, &datum),
        Command::Conjecture => cmd_conjecture(cli, &datum),
        Command::Whittaker => cmd_whittaker(cli, &datum, q),
        Command::Eval => cmd_eval(cli, &datum, q),
        Command::DatumDump => cmd_datum_dump(cli, &datum),
    }
}

/// `NUM/DEN` (or an integer) with both parts nonzero.
fn parse_q(text: &str) -> CliResult<(i128, i128)> {
    let bad = || Failure::config(format!("--q expects NUM/DEN with nonzero integers, got {text:?}"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
        None => (text.trim().parse().map_err(|_| bad())?, 1),
    };
    if n == 0 || d == 0 {
        return Err(bad());
    }
    Ok((n, d))
}

fn parse_mu(text: &str, rank: usize) -> CliResult<Vec<i32>> {
    let mu: Vec<i32> = text
        .split(',')
        .map(|c| c.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::config(format!("--mu expects comma-separated integers, got {text:?}")))?;
    if mu.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, got: mu.len() }.into());
    }
    Ok(mu)
}

/// Parses a word, noting on stderr when it is not reduced.
fn parse_element(datum: &RootDatum, text: &str) -> CliResult<WeylElt> {
    let (w, reduced) = datum.parse_word(text)?;
    if !reduced {
        eprintln!("note: {text} is not reduced; using {}", datum.word_string(w));
    }
    Ok(w)
}

fn selection(cli: &Cli) -> Option<Which> {
    [(cli.p, Which::P), (cli.ptilde, Which::Ptilde), (cli.a, Which::A), (cli.b, Which::B)]
        .into_iter()
        .find_map(|(set, which)| set.then_some(which))
}

/// `u = 1/q`, so `q = n/d` substitutes `u = d/n`.
fn evaluate(x: &Scalar, q: Option<(i128, i128)>) -> CliResult<Scalar> {
    match q {
        Some((n, d)) => Ok(x.evaluate_u(d, n)?),
        None => Ok(x.clone()),
    }
}

fn json_document(fields: Vec<(&str, Value)>) -> String {
    let mut map = Map::new();
    map.insert("schema".to_string(), json!(1));
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
    s.push('\n');
    s
}

fn cmd_table(cli: &Cli, datum: &RootDatum, q: Option<(i128, i128)>) -> CliResult<Output> {
    let chosen = selection(cli);
    let specialize = cli.specialize || chosen.is_some_and(Which::specialized);
    if cli.specialize && chosen.is_some_and(|w| !w.specialized()) {
        return Err(Failure::config("--p/--ptilde select generic tables; drop --specialize or use --a/--b"));
    }
    if q.is_some() && !specialize {
        return Err(Failure::config("--q evaluates q = u^{-1}, which only appears after --specialize"));
    }
    let wanted: Vec<Which> = match chosen {
        Some(w) => vec![w],
        None if specialize => vec![Which::A, Which::B],
        None => vec![Which::P, Which::Ptilde],
    };
    let w_filter = cli.w.as_deref().map(|t| parse_element(datum, t)).transpose()?;
    let v_filter = cli.v.as_deref().map(|t| parse_element(datum, t)).transpose()?;

    let tables = HeckeAlgebra::new(datum).transition_tables();
    let mut rendered: Vec<(Which, CoeffTable)> = Vec::new();
    for which in wanted {
        let source = match which {
            Which::P | Which::B => &tables.p,
            Which::Ptilde | Which::A => &tables.ptilde,
        };
        let mut out = CoeffTable::new(source.size());
        for (w, v, x) in source.entries() {
            if w_filter.is_some_and(|f| f != w) || v_filter.is_some_and(|f| f != v) {
                continue;
            }
            let x = if which.specialized() { evaluate(&x.specialize_q()?, q)? } else { x.clone() };
            out.set(w, v, x);
        }
        rendered.push((which, out));
    }

    let body = match cli.format {
        Format::Json => {
            let mut map = Map::new();
            for (which, t) in &rendered {
                map.insert(which.name().to_string(), t.to_json(datum));
            }
            let mut fields = vec![("datum", json!(datum.label())), ("tables", Value::Object(map))];
            if let Some((n, d)) = q {
                fields.push(("q", json!(format!("{n}/{d}"))));
            }
            json_document(fields)
        }
        Format::Latex => rendered.iter().map(|(w, t)| t.to_latex(datum, w.name())).collect::<Vec<_>>().join("\n"),
        Format::Text => rendered.iter().map(|(w, t)| t.to_text(datum, w.name())).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output::ok(body))
}

fn cmd_verify(cli: &Cli, datum: &RootDatum) -> CliResult<Output> {
    let report = verify(datum)?;
    let passed = report.passed();
    for c in report.failed_checks() {
        eprintln!("failed: {} {}", c.datum, c.name);
    }
    let body = match cli.format {
        Format::Json => json_document(vec![
            ("datum", json!(report.datum)),
            ("order", json!(report.order)),
            ("checks", serde_json::to_value(&report.checks).expect("serializable")),
            ("passed", json!(passed)),
        ]),
        _ => format!("{report}\n"),
    };
    Ok(Output { body, code: if passed { 0 } else { 1 } })
}

fn cmd_conjecture(cli: &Cli, datum: &RootDatum) -> CliResult<Output> {
    let tables = HeckeAlgebra::new(datum).transition_tables();
    let report = Casselman::new(datum, &tables)?.conjecture_check();
    let body = match cli.format {
        Format::Json => json_document(vec![
            ("datum", json!(report.datum)),
            ("simply_laced", json!(report.simply_laced)),
            ("pairs_scanned", json!(report.pairs_scanned)),
            ("failures", json!(report.failures())),
            ("bridge_failures", json!(report.bridge_failures)),
            ("entries", serde_json::to_value(&report.entries).expect("serializable")),
        ]),
        _ => {
            let mut s = format!("{}\n", report.summary());
            for e in &report.entries {
                let tag = if e.pass { "PASS" } else { "FAIL" };
                let kind = serde_json::to_value(e.kind).expect("serializable");
                let _ = writeln!(
                    s,
                    "[{tag}] {} w={} v={} |S|={} length difference={}",
                    kind.as_str().unwrap_or_default(),
                    e.w,
                    e.v,
                    e.set_size,
                    e.length_difference
                );
                if !e.pass {
                    let _ = writeln!(s, "    lhs = {}\n    rhs = {}", e.lhs, e.rhs);
                }
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn cmd_whittaker(cli: &Cli, datum: &RootDatum, q: Option<(i128, i128)>) -> CliResult<Output> {
    let mu_text = cli.mu.as_deref().ok_or_else(|| Failure::config("whittaker requires --mu c1,..,cr"))?;
    let mu = parse_mu(mu_text, datum.rank())?;
    let w_text = cli.w.as_deref().or(cli.words.first().map(String::as_str)).unwrap_or("e");
    let w = parse_element(datum, w_text)?;
    let tables = HeckeAlgebra::new(datum).transition_tables();
    let value = Casselman::new(datum, &tables)?.whittaker_sum(w, &mu)?;
    let polynomial = value.is_laurent_polynomial();
    let evaluated = q.map(|q| evaluate(&value, Some(q))).transpose()?;
    let body = match cli.format {
        Format::Json => {
            let mut fields = vec![
                ("datum", json!(datum.label())),
                ("w", json!(datum.word_string(w))),
                ("mu", json!(mu)),
                ("value", json!(value.to_string())),
                ("polynomial", json!(polynomial)),
            ];
            if let (Some(x), Some((n, d))) = (&evaluated, q) {
                fields.push(("q", json!(format!("{n}/{d}"))));
                fields.push(("evaluated", json!(x.to_string())));
            }
            json_document(fields)
        }
        Format::Latex => format!("{}\n", evaluated.as_ref().unwrap_or(&value).to_latex()),
        Format::Text => {
            let mut s = format!("W({}, mu={mu_text}) = {value}\npolynomial: {polynomial}\n", datum.word_string(w));
            if let Some(x) = &evaluated {
                let _ = writeln!(s, "at q = {}: {x}", cli.q.as_deref().unwrap_or_default());
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn cmd_eval(cli: &Cli, datum: &RootDatum, q: Option<(i128, i128)>) -> CliResult<Output> {
    let which = selection(cli).ok_or_else(|| Failure::config("eval requires one of --p, --ptilde, --a, --b"))?;
    let mut positional = cli.words.iter().map(String::as_str);
    let w_text = cli.w.as_deref().or_else(|| positional.next());
    let v_text = cli.v.as_deref().or_else(|| positional.next());
    let (Some(w_text), Some(v_text)) = (w_text, v_text) else {
        return Err(Failure::config("eval requires two words w v (or --w and --v)"));
    };
    if q.is_some() && !which.specialized() {
        return Err(Failure::config("--q evaluates q = u^{-1}, which only appears in --a/--b"));
    }
    let w = parse_element(datum, w_text)?;
    let v = parse_element(datum, v_text)?;
    let generic = match which {
        Which::P | Which::B => recurrence_p(datum, w, v, Side::Left),
        Which::Ptilde | Which::A => recurrence_ptilde(datum, w, v, Side::Left),
    };
    let value = if which.specialized() { evaluate(&generic.specialize_q()?, q)? } else { generic };
    let (ws, vs) = (datum.word_string(w), datum.word_string(v));
    let body = match cli.format {
        Format::Json => {
            let mut fields = vec![
                ("datum", json!(datum.label())),
                ("table", json!(which.name())),
                ("w", json!(ws)),
                ("v", json!(vs)),
                ("value", json!(value.to_string())),
            ];
            if let Some((n, d)) = q {
                fields.push(("q", json!(format!("{n}/{d}"))));
            }
            json_document(fields)
        }
        Format::Latex => format!("{}\n", value.to_latex()),
        Format::Text => format!("{}({ws}, {vs}) = {value}\n", which.name()),
    };
    Ok(Output::ok(body))
}

fn cmd_datum_dump(cli: &Cli, datum: &RootDatum) -> CliResult<Output> {
    let body = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&datum.to_json()).expect("serializable");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("{} (|W| = {}, {} positive roots)\ncartan:\n", datum.label(), datum.order(), datum.positive_roots().len());
            for row in datum.cartan() {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                let _ = writeln!(s, "  {}", cells.join(""));
            }
            s.push_str("positive roots (simple-root coordinates | weight coordinates):\n");
            for r in datum.positive_roots() {
                let _ = writeln!(s, "  {:?} | {:?}", r.simple_coords, r.weight);
            }
            let _ = writeln!(s, "longest element: {}", datum.word_string(datum.longest()));
            s
        }
    };
    Ok(Output::ok(body))
}
