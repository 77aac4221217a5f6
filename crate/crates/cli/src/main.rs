use std::io::{Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use mixcode::polynomial::factor_xn_minus_lambda;
use mixcode::quantum::{css_with_cap, search_dual_containing, Distance, DISTANCE_CAP};
use mixcode::reproduce::{self, Target};
use mixcode::spec_io::{
    self, enumerator_to_json, parse_kind, parse_word, poly_to_spec, word_from_spec, CodeSpec,
    LinearCodeSpec, WordSpec,
};
use mixcode::weight_enum::{
    complete_enumerator, hamming_enumerator, hamming_transform, lee_enumerator, lee_transform,
    macwilliams_complete_check, symbol_at, symmetrized_enumerator, symmetrized_transform,
};
use mixcode::{
    AdditiveCode, ChainElement, Enumerator, EnumeratorKind, Error, FieldElement, GrayContext,
    LinearCode, Prime,
};
use serde_json::{json, Value};

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_MALFORMED: u8 = 65;

/// Additive constacyclic codes over Z_p x Z_p[u]/<u^2> x Z_p[u]/<u^3>.
///
/// Code arguments are a path, `-` for stdin, or inline JSON.
#[derive(Parser)]
#[command(name = "mixcode", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for distance and search.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Log informational messages to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible factors of x^n - lambda over Z_p.
    Factor {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
    },
    /// Builds a code and lists a Z_p basis.
    Build { code: Option<String> },
    /// The dual code.
    Dual { code: Option<String> },
    /// Tests a word, or a second code, for membership.
    Contains {
        code: Option<String>,
        /// A word such as (1,0;0,u;1+u^2,0) or a JSON triple of blocks.
        #[arg(long, conflicts_with = "other", required_unless_present = "other")]
        word: Option<String>,
        /// Another code; tests whether it is a subcode.
        #[arg(long)]
        other: Option<String>,
    },
    /// The Gray image as a linear code over Z_p.
    Gray { code: Option<String> },
    /// Minimum distance of a linear code or of a Gray image.
    Distance {
        code: Option<String>,
        /// Largest column subset examined; exact when omitted.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// A weight enumerator.
    Wenum {
        code: Option<String>,
        #[arg(long, default_value = "hamming")]
        kind: String,
    },
    /// Checks the MacWilliams identity between a code and its dual.
    Macwilliams {
        code: Option<String>,
        #[arg(long, default_value = "hamming")]
        kind: String,
    },
    /// CSS parameters of a dual-containing linear code or Gray image.
    Css {
        code: Option<String>,
        #[arg(long, default_value_t = DISTANCE_CAP)]
        cap: usize,
    },
    /// Dual-containing Gray images of cyclic codes of length s over R.
    CssSearch {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        s: usize,
    },
    /// Compares against the stored examples and table.
    Reproduce {
        #[arg(long, value_parser = target_parser)]
        target: Option<Target>,
    },
}

fn target_parser(s: &str) -> Result<Target, String> {
    s.parse::<Target>().map_err(|e| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_input(arg: Option<&str>) -> Result<String, Failure> {
    match arg {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(text)
        }
        Some(t) if t.trim_start().starts_with('{') => Ok(t.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}"))),
    }
}

fn load_code(arg: Option<&str>) -> Result<AdditiveCode, Failure> {
    Ok(CodeSpec::from_json(&read_input(arg)?)?.build()?)
}

/// A linear code spec has `rows`; anything else is a mixed code whose Gray
/// image is taken.
fn load_linear(arg: Option<&str>) -> Result<LinearCode, Failure> {
    let text = read_input(arg)?;
    let value: Value = spec_io::from_json(&text)?;
    if value.get("rows").is_some() {
        Ok(LinearCodeSpec::from_json(&text)?.build()?)
    } else {
        let code = CodeSpec::from_json(&text)?.build()?;
        Ok(GrayContext::new(code.profile().p())?.gray_image(&code)?)
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn code_report(code: &AdditiveCode, json: bool) -> String {
    if json {
        return CodeSpec::from_code(code).to_json();
    }
    let prof = code.profile();
    let mut out = format!(
        "code over Z_{} with (q, r, s) = ({}, {}, {}), rank {}\n",
        prof.p(),
        prof.q(),
        prof.r(),
        prof.s(),
        code.rank()
    );
    for w in code.basis_words() {
        out.push_str(&format!("{w}\n"));
    }
    out
}

fn linear_report(c: &LinearCode, json: bool) -> String {
    if json {
        return pretty(&serde_json::to_value(LinearCodeSpec::from_code(c)).expect("serializable"));
    }
    let mut out = format!("[{}, {}] over Z_{}\n", c.length(), c.dimension(), c.prime());
    for row in c.generator() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&format!("{}\n", cells.join(" ")));
    }
    out
}

fn symbol_label(p: Prime, idx: usize) -> String {
    let f = symbol_at(p, idx);
    let r = ChainElement::new(p, &f[1..3]).expect("residues");
    let s = ChainElement::new(p, &f[3..6]).expect("residues");
    format!("({}; {r}; {s})", f[0])
}

fn enumerator_of(code: &AdditiveCode, kind: EnumeratorKind) -> mixcode::Result<Enumerator> {
    match kind {
        EnumeratorKind::Complete => complete_enumerator(code),
        EnumeratorKind::Hamming => hamming_enumerator(code),
        EnumeratorKind::Symmetrized => symmetrized_enumerator(code),
        EnumeratorKind::Lee => lee_enumerator(code),
    }
}

fn enumerator_report(w: &Enumerator, p: Prime, json: bool) -> String {
    if json {
        return pretty(&enumerator_to_json(w));
    }
    let mut out = format!("{w}\n");
    if w.kind() == EnumeratorKind::Complete {
        let used: std::collections::BTreeSet<usize> =
            w.terms().keys().flat_map(|m| m.iter().map(|&(i, _)| i)).collect();
        for i in used {
            out.push_str(&format!("  x_{} = {}\n", i + 1, symbol_label(p, i)));
        }
    }
    out
}

fn distance_json(d: Distance) -> Value {
    json!({"d": d.value(), "exact": d.is_exact()})
}

fn factor(p: u32, n: usize, lambda: u32, json: bool) -> Outcome {
    let p = Prime::new(p)?;
    let factors = factor_xn_minus_lambda(p, n, FieldElement::from_prime(lambda as u64, p))?;
    if json {
        let list: Vec<Value> = factors.iter().map(|f| json!(f.residues())).collect();
        return Ok((pretty(&json!({"p": p.get(), "n": n, "lambda": lambda % p.get(), "factors": list})), true));
    }
    let mut out = String::new();
    for f in &factors {
        out.push_str(&format!("{f}\n"));
    }
    Ok((out, true))
}

fn contains(code: Option<&str>, word: Option<&str>, other: Option<&str>, json: bool) -> Outcome {
    let c = load_code(code)?;
    let answer = match (word, other) {
        (Some(w), _) => {
            let w = if w.trim_start().starts_with('[') {
                let spec: WordSpec = spec_io::from_json(w)?;
                word_from_spec(c.profile(), &spec)?
            } else {
                parse_word(c.profile(), w)?
            };
            c.contains(&w)?
        }
        (None, Some(o)) => c.contains_code(&load_code(Some(o))?)?,
        (None, None) => unreachable!("clap requires one of --word and --other"),
    };
    let out = if json {
        pretty(&json!({"contains": answer}))
    } else {
        format!("{answer}\n")
    };
    Ok((out, true))
}

fn distance(code: Option<&str>, cap: Option<usize>, json: bool) -> Outcome {
    let c = load_linear(code)?;
    let (n, k) = (c.length(), c.dimension());
    let d = match c.min_distance(cap.unwrap_or(n)) {
        Ok(d) => Distance::Exact(d),
        Err(Error::NotDetermined { lower_bound }) => Distance::AtLeast(lower_bound),
        Err(e) => return Err(e.into()),
    };
    let out = if json {
        let mut v = json!({"n": n, "k": k});
        v.as_object_mut().unwrap().extend(distance_json(d).as_object().unwrap().clone());
        pretty(&v)
    } else {
        format!("[{n}, {k}, {d}]\n")
    };
    Ok((out, true))
}

fn macwilliams(code: Option<&str>, kind: &str, json: bool) -> Outcome {
    let c = load_code(code)?;
    let kind = parse_kind(kind)?;
    let p = c.profile().p();
    if kind == EnumeratorKind::Complete {
        let holds = macwilliams_complete_check(&c)?;
        let out = if json {
            pretty(&json!({"kind": "complete", "holds": holds}))
        } else {
            format!("complete MacWilliams identity {}\n", if holds { "holds" } else { "fails" })
        };
        return Ok((out, holds));
    }
    let size = c.size().ok_or(Error::Overflow)? as i128;
    let w = enumerator_of(&c, kind)?;
    let dual = enumerator_of(&c.dual(), kind)?;
    let predicted = match kind {
        EnumeratorKind::Hamming => hamming_transform(&w, size, p)?,
        EnumeratorKind::Symmetrized => symmetrized_transform(&w, size, p)?,
        _ => lee_transform(&w, size, p)?,
    };
    let holds = predicted == dual;
    let out = if json {
        pretty(&json!({
            "kind": enumerator_to_json(&w)["kind"],
            "code": enumerator_to_json(&w),
            "transform": enumerator_to_json(&predicted),
            "dual": enumerator_to_json(&dual),
            "holds": holds,
        }))
    } else {
        format!(
            "code:      {w}\ntransform: {predicted}\ndual:      {dual}\nidentity {}\n",
            if holds { "holds" } else { "fails" }
        )
    };
    Ok((out, holds))
}

fn css(code: Option<&str>, cap: usize, json: bool) -> Outcome {
    let c = load_linear(code)?;
    let q = css_with_cap(&c, cap)?;
    let out = if json {
        let mut v = json!({"p": q.p.get(), "n": q.n, "k": q.k});
        v.as_object_mut().unwrap().extend(distance_json(q.d).as_object().unwrap().clone());
        pretty(&v)
    } else {
        format!("{q}\n")
    };
    Ok((out, true))
}

fn css_search(p: u32, s: usize, json: bool) -> Outcome {
    let p = Prime::new(p)?;
    let hits = search_dual_containing(p, s)?;
    if json {
        let rows: Vec<Value> = hits
            .iter()
            .map(|h| {
                let fa = &h.assignment;
                let mut q = json!({"n": h.params.n, "k": h.params.k});
                q.as_object_mut().unwrap().extend(distance_json(h.params.d).as_object().unwrap().clone());
                json!({
                    "p": p.get(),
                    "s": s,
                    "g0": poly_to_spec(&fa.hat_f0()),
                    "g1": poly_to_spec(&fa.hat_f1()),
                    "slots": fa.slots(),
                    "gray": [2 * s, h.gray_dimension, h.params.d.value()],
                    "quantum": q,
                })
            })
            .collect();
        return Ok((pretty(&Value::Array(rows)), true));
    }
    let mut out = String::from("p\ts\tg0\tg1\tGray\tquantum\n");
    for h in &hits {
        let fa = &h.assignment;
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t[{}, {}, {}]\t{}\n",
            p,
            s,
            fa.hat_f0(),
            fa.hat_f1(),
            2 * s,
            h.gray_dimension,
            h.params.d,
            h.params
        ));
    }
    Ok((out, true))
}

fn reproduce_cmd(target: Option<Target>, json: bool) -> Outcome {
    let targets: Vec<Target> = target.map_or_else(|| Target::ALL.to_vec(), |t| vec![t]);
    let mut all_pass = true;
    let mut text = String::new();
    let mut items = Vec::new();
    for t in targets {
        let checks = reproduce::run(t)?;
        let pass = checks.iter().all(|c| c.pass);
        all_pass &= pass;
        for c in &checks {
            text.push_str(&format!("{c}\n"));
            items.push(json!({"target": t.name(), "item": c.item, "pass": c.pass, "detail": c.detail}));
        }
        text.push_str(&format!("{} {}\n", if pass { "PASS" } else { "FAIL" }, t.name()));
    }
    let out = if json {
        pretty(&json!({"pass": all_pass, "checks": items}))
    } else {
        text
    };
    Ok((out, all_pass))
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Factor { p, n, lambda } => factor(*p, *n, *lambda, json),
        Command::Build { code } => Ok((code_report(&load_code(code.as_deref())?, json), true)),
        Command::Dual { code } => Ok((code_report(&load_code(code.as_deref())?.dual(), json), true)),
        Command::Contains { code, word, other } => {
            contains(code.as_deref(), word.as_deref(), other.as_deref(), json)
        }
        Command::Gray { code } => {
            let c = load_code(code.as_deref())?;
            let image = GrayContext::new(c.profile().p())?.gray_image(&c)?;
            Ok((linear_report(&image, json), true))
        }
        Command::Distance { code, cap } => distance(code.as_deref(), *cap, json),
        Command::Wenum { code, kind } => {
            let c = load_code(code.as_deref())?;
            let w = enumerator_of(&c, parse_kind(kind)?)?;
            Ok((enumerator_report(&w, c.profile().p(), json), true))
        }
        Command::Macwilliams { code, kind } => macwilliams(code.as_deref(), kind, json),
        Command::Css { code, cap } => css(code.as_deref(), *cap, json),
        Command::CssSearch { p, s } => css_search(*p, *s, json),
        Command::Reproduce { target } => reproduce_cmd(*target, json),
    }
}

fn report_error(code: &str, message: &str, json: bool) {
    if json {
        eprintln!("{}", json!({"error": {"code": code, "message": message}}));
    } else {
        eprintln!("error[{code}]: {message}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => EXIT_USAGE,
                _ => EXIT_PRECONDITION,
            };
            let _ = e.print();
            return ExitCode::from(status);
        }
    };
    env_logger::Builder::new()
        .filter_level(if cli.verbose { log::LevelFilter::Info } else { log::LevelFilter::Warn })
        .init();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            report_error("jobs", &e.to_string(), cli.json);
            return ExitCode::from(EXIT_PRECONDITION);
        }
    }
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe downstream is not an error of ours.
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED_CHECK)
            }
        }
        Err(Failure::Io(msg)) => {
            report_error("io", &msg, cli.json);
            ExitCode::from(EXIT_PRECONDITION)
        }
        Err(Failure::Lib(e)) => {
            report_error(e.code(), &e.to_string(), cli.json);
            match e {
                Error::MalformedJson(_) => ExitCode::from(EXIT_MALFORMED),
                _ => ExitCode::from(EXIT_PRECONDITION),
            }
        }
    }
}
