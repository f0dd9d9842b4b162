//! The `iqg` command line: argument parsing, table caching, subcommands and
//! text/JSON output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use iqg_core::bases::{self, good_lyndon_set, lyndon_basis_element, transition_l_to_g, LyndonCoords};
use iqg_core::canonical::{canonical_basis, check_ic, CanonicalElement};
use iqg_core::freealg::{bracket, FreeElement, Nu, PresetMode, RelationPreset};
use iqg_core::rootdata::{format_root, longest_reduced_word, ReducedWord, ReducedWordPreset, RootDatum};
use iqg_core::straighten::{build_table, StraightenTable};
use iqg_core::words::{parse_word, Word};
use iqg_core::Error;

/// Version of the JSON output, shared with the cache format.
pub const OUTPUT_VERSION: u32 = iqg_core::straighten::CACHE_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IC: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "iqg", version, about = "Good-word, Lyndon, PBW and canonical bases of split iquantum groups")]
struct Cli {
    /// Cartan type, e.g. A2, B2, G2.
    #[arg(long = "type", global = true, default_value = "A2")]
    ty: String,
    /// Relation parameters. Defaults to pbw for `pbw`, canonical otherwise.
    #[arg(long, global = true, value_enum)]
    xi: Option<Xi>,
    /// Longest word length the table may use; defaults to twice the
    /// maximal root height (plus two for `pbw`).
    #[arg(long = "max-length", global = true)]
    max_length: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Table cache directory; falls back to $IQG_CACHE, then .iqg-cache/.
    #[arg(long = "cache-dir", global = true)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the table cache.
    #[arg(long = "no-cache", global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Xi {
    Canonical,
    Pbw,
    Graded,
}

impl Xi {
    fn mode(self) -> PresetMode {
        match self {
            Xi::Canonical => PresetMode::Canonical,
            Xi::Pbw => PresetMode::Pbw,
            Xi::Graded => PresetMode::Graded,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The good Lyndon word of every positive root, lex order.
    GoodLyndon,
    /// Good words of a given length, lex order.
    GoodWords { length: usize },
    /// Expansion of a word in the good-word basis.
    NormalForm { word: String },
    /// The q^-1-bracketing of a word in the free algebra.
    Bracket {
        word: String,
        /// Use the q-bracketing instead.
        #[arg(long)]
        q: bool,
    },
    /// B_[g] in the good-word basis.
    LyndonBasis { word: String },
    /// PBW root vectors B_beta in the good-word basis, with kappa.
    Pbw {
        /// Only this position of the root sequence (1-based).
        index: Option<usize>,
        /// lyndon, greedy, type-a, or a comma-separated index list.
        #[arg(long = "reduced-word", default_value = "lyndon")]
        reduced_word: String,
    },
    /// Transition between the Lyndon and good-word bases below a word.
    Transition { word: String },
    /// The integrality condition on the pair set X.
    CheckIc,
    /// Canonical basis elements for all good words up to a word.
    Canonical { word: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::GoodLyndon => "good-lyndon",
            Command::GoodWords { .. } => "good-words",
            Command::NormalForm { .. } => "normal-form",
            Command::Bracket { .. } => "bracket",
            Command::LyndonBasis { .. } => "lyndon-basis",
            Command::Pbw { .. } => "pbw",
            Command::Transition { .. } => "transition",
            Command::CheckIc => "check-ic",
            Command::Canonical { .. } => "canonical",
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Contract(_) | Error::UnsupportedPreset { .. } => EXIT_INVALID,
            Error::IcViolation { .. } => EXIT_IC,
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::Internal(_) => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

struct Ctx {
    datum: RootDatum,
    table: StraightenTable,
    cache_path: Option<PathBuf>,
    json: bool,
}

impl Ctx {
    fn word(&self, s: &str) -> Result<Word, Failure> {
        let w = parse_word(s, self.datum.rank)?;
        if w.is_empty() {
            return Err(invalid("a nonempty word is required"));
        }
        Ok(w)
    }

    fn envelope(&self, command: &str, result: Value) -> Value {
        json!({
            "version": OUTPUT_VERSION,
            "command": command,
            "type": self.datum.to_string(),
            "preset": self.table.preset().mode.name(),
            "max_len": self.table.max_len(),
            "result": result,
        })
    }

    fn save_cache(&self, err: &mut dyn Write) {
        if let Some(p) = &self.cache_path {
            if let Err(e) = self.table.save_cache_file(p) {
                let _ = writeln!(err, "warning: could not write cache: {e}");
            }
        }
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn default_mode(cmd: &Command) -> PresetMode {
    match cmd {
        Command::Pbw { .. } => PresetMode::Pbw,
        _ => PresetMode::Canonical,
    }
}

fn setup(cli: &Cli, err: &mut dyn Write) -> Result<Ctx, Failure> {
    let datum: RootDatum = cli.ty.parse()?;
    let mode = cli.xi.map(Xi::mode).unwrap_or_else(|| default_mode(&cli.command));
    match (&cli.command, mode) {
        (Command::Pbw { .. }, m) if m != PresetMode::Pbw => {
            return Err(invalid("the pbw subcommand needs --xi pbw"));
        }
        (Command::Canonical { .. }, m) if m != PresetMode::Canonical => {
            return Err(invalid("the canonical subcommand needs --xi canonical"));
        }
        _ => {}
    }
    let preset = RelationPreset::from_mode(&datum, mode)?;
    let height = datum.max_root_height();
    let default_len = match cli.command {
        Command::Pbw { .. } => 2 * height + 2,
        _ => 2 * height,
    };
    let max_len = cli.max_length.unwrap_or(default_len);
    if max_len < 1 {
        return Err(invalid("--max-length must be at least 1"));
    }
    let table = build_table(&datum, &preset, max_len)?;
    let cache_path = if cli.no_cache {
        None
    } else {
        let dir = cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("IQG_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".iqg-cache"));
        table.cache_file_name().map(|n| dir.join(n))
    };
    if let Some(p) = &cache_path {
        if p.exists() {
            if let Err(e) = table.load_cache_file(p) {
                let _ = writeln!(err, "warning: ignoring cache {}: {e}", p.display());
            }
        }
    }
    Ok(Ctx { datum, table, cache_path, json: cli.json })
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let ctx = setup(cli, err)?;
    let before = ctx.table.stats();
    let result = dispatch(&ctx, &cli.command, out);
    if ctx.table.stats() != before {
        ctx.save_cache(err);
    }
    result
}

fn emit(ctx: &Ctx, out: &mut dyn Write, command: &str, text: &str, value: Value) -> Result<(), Failure> {
    let r = if ctx.json {
        let v = ctx.envelope(command, value);
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"))
    } else {
        write!(out, "{text}")
    };
    r.map_err(|e| Failure { code: EXIT_INTERNAL, message: format!("write failed: {e}") })
}

fn element_json(x: &FreeElement) -> Value {
    serde_json::to_value(x.to_json().terms).expect("terms serialize")
}

fn lyndon_text(x: &FreeElement) -> String {
    x.format_with(|w| format!("[{w}]"))
}

fn parse_reduced_word(ctx: &Ctx, spec: &str) -> Result<ReducedWord, Failure> {
    let rw = match spec {
        "lyndon" => bases::lyndon_reduced_word(&ctx.table)?,
        "greedy" => longest_reduced_word(&ctx.datum, &ReducedWordPreset::Greedy)?,
        "type-a" => longest_reduced_word(&ctx.datum, &ReducedWordPreset::TypeAChain)?,
        list => {
            let v = list
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad reduced word {list:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            longest_reduced_word(&ctx.datum, &ReducedWordPreset::User(v))?
        }
    };
    Ok(rw)
}

fn dispatch(ctx: &Ctx, cmd: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let name = cmd.name();
    let table = &ctx.table;
    match cmd {
        Command::GoodLyndon => {
            let gl = good_lyndon_set(table)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for w in &gl.words {
                let root = gl.by_root.iter().find(|(_, l)| *l == w).map(|(r, _)| r.clone()).unwrap_or_default();
                text.push_str(&format!("{w}\n"));
                items.push(json!({ "word": w.to_string(), "root": root }));
            }
            emit(ctx, out, name, &text, Value::Array(items))?;
        }
        Command::GoodWords { length } => {
            if *length == 0 {
                return Err(invalid("length must be positive"));
            }
            let words = table.good_words_of_len(*length)?;
            let text: String = words.iter().map(|w| format!("{w}\n")).collect();
            let items: Vec<Value> = words.iter().map(|w| json!(w.to_string())).collect();
            emit(ctx, out, name, &text, Value::Array(items))?;
        }
        Command::NormalForm { word } => {
            let w = ctx.word(word)?;
            let nf = table.normal_form_word(&w)?;
            let v = json!({ "input": w.to_string(), "expansion": element_json(&nf) });
            emit(ctx, out, name, &format!("{nf}\n"), v)?;
        }
        Command::Bracket { word, q } => {
            let w = ctx.word(word)?;
            let nu = if *q { Nu::Q } else { Nu::QInv };
            let b = bracket(&w, nu, &ctx.datum);
            let v = json!({ "input": w.to_string(), "nu": if *q { "q" } else { "q^-1" }, "expansion": element_json(&b) });
            emit(ctx, out, name, &format!("{b}\n"), v)?;
        }
        Command::LyndonBasis { word } => {
            let w = ctx.word(word)?;
            let e = lyndon_basis_element(table, &w)?;
            let v = json!({ "label": w.to_string(), "expansion": element_json(&e.expansion) });
            emit(ctx, out, name, &format!("{}\n", e.expansion), v)?;
        }
        Command::Pbw { index, reduced_word } => {
            let rw = parse_reduced_word(ctx, reduced_word)?;
            let betas = iqg_core::rootdata::beta_sequence(&ctx.datum, &rw)?;
            let range: Vec<usize> = match index {
                Some(j) if *j == 0 || *j > betas.len() => {
                    return Err(invalid(format!("index {j} out of range 1..={}", betas.len())));
                }
                Some(j) => vec![*j],
                None => (1..=betas.len()).collect(),
            };
            let mut text = format!("reduced word {}\n", rw.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let mut items = Vec::new();
            for j in range {
                let beta = &betas[j - 1];
                let b = bases::pbw_vector(table, &rw, j)?;
                let k = bases::kappa_check(table, &rw, beta)?;
                text.push_str(&format!(
                    "{j} ({}) l={} kappa={} remainder_len={}: {}\n",
                    format_root(beta),
                    k.lyndon,
                    k.kappa,
                    k.remainder_max_len,
                    b.expansion
                ));
                items.push(json!({
                    "index": j,
                    "root": beta,
                    "lyndon": k.lyndon.to_string(),
                    "kappa": k.kappa.to_string(),
                    "remainder_max_len": k.remainder_max_len,
                    "expansion": element_json(&b.expansion),
                }));
            }
            let v = json!({ "reduced_word": rw.0, "vectors": items });
            emit(ctx, out, name, &text, v)?;
        }
        Command::Transition { word } => {
            let w = ctx.word(word)?;
            if !table.is_good(&w)? {
                return Err(invalid(format!("{w} is not a good word")));
            }
            let down = LyndonCoords::new(table).downset(std::slice::from_ref(&w))?;
            let tr = transition_l_to_g(table, &down)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for g in &tr.labels {
                let lg = &tr.l_in_g[g];
                let gl = &tr.g_in_l[g];
                text.push_str(&format!("[{g}] = {lg}\n{g} = {}\n", lyndon_text(gl)));
                items.push(json!({ "label": g.to_string(), "lyndon_in_good": element_json(lg), "good_in_lyndon": element_json(gl) }));
            }
            emit(ctx, out, name, &text, Value::Array(items))?;
        }
        Command::CheckIc => {
            let rep = check_ic(table)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for p in &rep.pairs {
                let prod = p.l1.concat(&p.l2);
                match &p.witness {
                    None => text.push_str(&format!("({}, {}) integral: {} = {}\n", p.l1, p.l2, prod, p.normal_form)),
                    Some((w, c)) => text.push_str(&format!(
                        "({}, {}) NOT integral: coefficient {} at {} in {} = {}\n",
                        p.l1, p.l2, c, w, prod, p.normal_form
                    )),
                }
                items.push(json!({
                    "l1": p.l1.to_string(),
                    "l2": p.l2.to_string(),
                    "integral": p.integral,
                    "witness": p.witness.as_ref().map(|(w, c)| json!({ "word": w.to_string(), "coeff": c.to_string() })),
                    "normal_form": element_json(&p.normal_form),
                }));
            }
            text.push_str(if rep.holds { "IC holds\n" } else { "IC fails\n" });
            emit(ctx, out, name, &text, json!({ "holds": rep.holds, "pairs": items }))?;
            if !rep.holds {
                return Ok(EXIT_IC);
            }
        }
        Command::Canonical { word } => {
            let w = ctx.word(word)?;
            let els = canonical_basis(table, &w)?;
            let text: String = els.iter().map(canonical_text).collect();
            let items: Vec<Value> = els.iter().map(canonical_json).collect();
            emit(ctx, out, name, &text, Value::Array(items))?;
        }
    }
    Ok(EXIT_OK)
}

fn canonical_text(e: &CanonicalElement) -> String {
    let rank = e.g_coords.rank();
    format!("C_{} = {} = {}\n", e.label, lyndon_text(&e.l_element(rank)), e.g_coords)
}

fn canonical_json(e: &CanonicalElement) -> Value {
    let l: Vec<Value> = e
        .l_element(e.g_coords.rank())
        .to_json()
        .terms
        .into_iter()
        .map(|t| json!({ "word": t.word, "coeff": t.coeff }))
        .collect();
    json!({ "label": e.label.to_string(), "L_coords": l, "G_coords": element_json(&e.g_coords) })
}
