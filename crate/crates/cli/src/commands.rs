use std::fs;
use std::io::{self, Read, Write};
use std::time::Instant;

use nedlib::compose::{check_chain, compose, compose_bare, ChainChecks};
use nedlib::edit_model::parse_bare;
use nedlib::metrics::CedSearchConfig;
use nedlib::propcheck::{self, FuzzConfig, PropertyReport};
use nedlib::{DistanceResult, EditPath, Error, Metric, Witness, Word};
use serde::{Deserialize, Serialize};

use crate::cli::{AlignArgs, BenchArgs, CheckArgs, Command, ComposeArgs, DistArgs, Format};

pub const EXIT_PROPERTY: u8 = 1;
pub const EXIT_LIMIT: u8 = 2;
pub const EXIT_UNDEFINED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

pub const CED_LEN_ENV: &str = "NEDLIB_MAX_CED_LEN";

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WordTooLong { .. } | Error::SearchBudgetExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_LIMIT,
            Error::Undefined { .. } | Error::InvalidPath { .. } | Error::BlankInPath { .. } => EXIT_UNDEFINED,
            Error::OverlappingAlphabets { .. } | Error::Parse(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

pub fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Dist(args) => dist(args),
        Command::Path(mut args) => {
            args.witness = true;
            dist(args)
        }
        Command::Align(args) => align(args),
        Command::Compose(args) => compose_cmd(args),
        Command::Check(args) => check(args),
        Command::Bench(args) => bench(args),
    }
}

fn ced_config() -> Result<CedSearchConfig, Failure> {
    let cfg = CedSearchConfig::default();
    match std::env::var(CED_LEN_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|n| cfg.with_max_word_len(n))
            .map_err(|_| Failure::usage(format!("{CED_LEN_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(cfg),
    }
}

fn word(s: &str, pad: char) -> Result<Word, Failure> {
    if s.contains(pad) {
        return Err(Failure::usage(format!(
            "word {s:?} contains the padding glyph {pad:?}; pick another with --pad"
        )));
    }
    Ok(Word::from(s))
}

fn metric(s: &str) -> Result<Metric, Failure> {
    s.parse().map_err(|e: Error| Failure::usage(e.to_string()))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(value).map_err(|e| Failure::usage(e.to_string()))?;
    println!("{s}");
    Ok(())
}

// ---------------------------------------------------------------------------
// dist / path

#[derive(Debug, Serialize, Deserialize)]
pub struct DistRecord {
    pub a: Word,
    pub b: Word,
    #[serde(flatten)]
    pub result: DistanceResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alignment: Option<[String; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Batch {
    pub results: Vec<DistRecord>,
}

fn dist_record(m: Metric, a: Word, b: Word, witness: bool, pad: char, cfg: &CedSearchConfig) -> Result<DistRecord, Failure> {
    let result = if witness {
        m.compute(&a, &b, cfg)?
    } else {
        DistanceResult {
            metric: m,
            value: m.value(&a, &b, cfg)?,
            witness: None,
        }
    };
    let alignment = match result.path() {
        Some(p) => {
            let (top, bottom) = p.render_alignment(&a)?.rows(pad);
            Some([top, bottom])
        }
        None => None,
    };
    Ok(DistRecord { a, b, result, alignment })
}

fn read_pairs(path: &std::path::Path, pad: char) -> Result<Vec<(Word, Word)>, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    let mut pairs = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (a, b) = match line.split_once('\t') {
            Some(pair) => pair,
            None => {
                let mut parts = line.split_whitespace();
                let a = parts.next().unwrap_or("");
                let b = parts.next().unwrap_or("");
                if parts.next().is_some() {
                    return Err(Failure::usage(format!("line {}: expected two words", n + 1)));
                }
                (a, b)
            }
        };
        pairs.push((word(a, pad)?, word(b, pad)?));
    }
    Ok(pairs)
}

fn human_value(r: &DistanceResult) -> String {
    format!("{} ({})", r.value, r.value.decimal())
}

fn print_human(rec: &DistRecord) {
    println!("{}", human_value(&rec.result));
    match &rec.result.witness {
        Some(Witness::Path(p)) => {
            println!("path: {p}");
            println!("bare: {}", p.bare());
        }
        Some(Witness::Chain(chain)) => {
            let shown: Vec<String> = chain.iter().map(|w| format!("{w:?}")).collect();
            println!("chain: {}", shown.join(" -> "));
        }
        None => {}
    }
    if let Some([top, bottom]) = &rec.alignment {
        println!("{top}");
        println!("{bottom}");
    }
}

fn write_csv(records: &[DistRecord]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(io::stdout());
    let err = |e: csv::Error| Failure::usage(e.to_string());
    w.write_record(["metric", "a", "b", "num", "den", "decimal"]).map_err(err)?;
    for r in records {
        let v = r.result.value;
        w.write_record([
            r.result.metric.id().to_string(),
            r.a.to_string(),
            r.b.to_string(),
            v.numer().to_string(),
            v.denom().to_string(),
            v.decimal(),
        ])
        .map_err(err)?;
    }
    w.flush()?;
    Ok(())
}

fn dist(args: DistArgs) -> Outcome {
    let m = metric(&args.metric)?;
    let cfg = ced_config()?;
    let pad = args.out.pad;
    if let Some(path) = &args.file {
        let pairs = read_pairs(path, pad)?;
        let records = pairs
            .into_iter()
            .map(|(a, b)| dist_record(m, a, b, args.witness, pad, &cfg))
            .collect::<Result<Vec<_>, _>>()?;
        match args.out.format(Format::Csv) {
            Format::Csv => write_csv(&records)?,
            Format::Json => print_json(&Batch { results: records })?,
            Format::Human => records.iter().for_each(|r| println!("{}\t{}\t{}", r.a, r.b, human_value(&r.result))),
        }
        return Ok(0);
    }
    let (Some(a), Some(b)) = (&args.a, &args.b) else {
        return Err(Failure::usage("dist needs two words or --file"));
    };
    let rec = dist_record(m, word(a, pad)?, word(b, pad)?, args.witness, pad, &cfg)?;
    match args.out.format(Format::Human) {
        Format::Human => print_human(&rec),
        Format::Json => print_json(&rec)?,
        Format::Csv => write_csv(std::slice::from_ref(&rec))?,
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// align

#[derive(Serialize)]
struct AlignRecord {
    a: Word,
    b: Word,
    path: String,
    bare: String,
    wgt: usize,
    len: usize,
    top: String,
    bottom: String,
    marks: String,
}

fn parse_path(s: &str, from: &Word, to: &Word) -> Result<EditPath, Failure> {
    let path = if s.contains('(') || s == "B" {
        s.parse::<EditPath>()?
    } else {
        nedlib::edit_model::infer_subscripts(&parse_bare(s)?, from, to)?
    };
    Ok(path)
}

fn align(args: AlignArgs) -> Outcome {
    let pad = args.out.pad;
    let (a, b) = (word(&args.a, pad)?, word(&args.b, pad)?);
    let path = match &args.path {
        Some(p) => parse_path(p, &a, &b)?,
        None => {
            let m = metric(&args.metric)?;
            let r = m.compute(&a, &b, &ced_config()?)?;
            match r.path() {
                Some(p) => p.clone(),
                None => return Err(Failure::usage(format!("{m} has no edit-path witness"))),
            }
        }
    };
    let reached = path.apply(&a)?;
    if reached != b {
        return Err(Failure {
            code: EXIT_UNDEFINED,
            message: format!("path {path} takes {a:?} to {reached:?}, not {b:?}"),
        });
    }
    let alignment = path.render_alignment(&a)?;
    let (top, bottom) = alignment.rows(pad);
    let marks: String = alignment
        .top
        .iter()
        .zip(&alignment.bottom)
        .map(|(x, y)| if x == y { ' ' } else { '^' })
        .collect();
    let rec = AlignRecord {
        path: path.to_string(),
        bare: path.bare(),
        wgt: path.wgt(),
        len: path.len(),
        a,
        b,
        top,
        bottom,
        marks,
    };
    match args.out.format(Format::Human) {
        Format::Json => print_json(&rec)?,
        _ => {
            println!("{}", rec.top);
            println!("{}", rec.bottom);
            println!("{}", rec.marks.trim_end());
            println!("{}  wgt {} len {}", rec.path, rec.wgt, rec.len);
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// compose

#[derive(Serialize)]
struct ComposeRecord {
    p12: String,
    p23: String,
    raw: String,
    raw_bare: String,
    projected: String,
    projected_bare: String,
    wgt_p12: usize,
    len_p12: usize,
    wgt_p23: usize,
    len_p23: usize,
    wgt_p13: usize,
    len_p13: usize,
    wgt_projected: usize,
    len_projected: usize,
    cost_projected: nedlib::Rational,
    checks: ChainChecks,
}

fn compose_cmd(args: ComposeArgs) -> Outcome {
    let pad = args.out.pad;
    let s1 = word(&args.s1, pad)?;
    let subscripted = |s: &str| s.contains('(');
    let (p12, p23, out) = if subscripted(&args.p12) && subscripted(&args.p23) {
        let p12: EditPath = args.p12.parse()?;
        let p23: EditPath = args.p23.parse()?;
        let out = compose(&p12, &p23)?;
        (p12, p23, out)
    } else {
        let (Some(s2), Some(s3)) = (&args.s2, &args.s3) else {
            return Err(Failure::usage("bare paths need --s2 and --s3 to infer subscripts"));
        };
        compose_bare(&parse_bare(&args.p12)?, &parse_bare(&args.p23)?, &s1, &word(s2, pad)?, &word(s3, pad)?)?
    };
    // the chain must be valid: p12 reaches s2 from s1 and p23 continues from there
    let s2 = p12.apply(&s1)?;
    let s3 = p23.apply(&s2)?;
    if let Some(given) = &args.s2 {
        if word(given, pad)? != s2 {
            return Err(Failure {
                code: EXIT_UNDEFINED,
                message: format!("p12 takes {s1:?} to {s2:?}, not {given:?}"),
            });
        }
    }
    let checks = check_chain(&out, &p12, &p23, &s1, &s3);
    let rec = ComposeRecord {
        p12: p12.to_string(),
        p23: p23.to_string(),
        raw: out.raw.to_string(),
        raw_bare: out.raw.bare(),
        projected: out.projected.to_string(),
        projected_bare: out.projected.bare(),
        wgt_p12: p12.wgt(),
        len_p12: p12.len(),
        wgt_p23: p23.wgt(),
        len_p23: p23.len(),
        wgt_p13: out.wgt_raw,
        len_p13: out.len_raw,
        wgt_projected: out.wgt_proj,
        len_projected: out.len_proj,
        cost_projected: out.cost_proj(),
        checks,
    };
    match args.out.format(Format::Human) {
        Format::Json => print_json(&rec)?,
        _ => {
            println!("raw:        {}  ({})", rec.raw, rec.raw_bare);
            println!("projected:  {}  ({})", rec.projected, rec.projected_bare);
            println!("p12:        wgt {} len {}", rec.wgt_p12, rec.len_p12);
            println!("p23:        wgt {} len {}", rec.wgt_p23, rec.len_p23);
            println!("p13:        wgt {} len {}", rec.wgt_p13, rec.len_p13);
            println!(
                "cost:       {} <= {} + {}",
                rec.cost_projected,
                p12.cost(),
                p23.cost()
            );
            println!("apply_correct: {}", checks.apply_correct);
            println!("weight_bound:  {}", checks.weight_bound);
            println!("length_bound:  {}", checks.length_bound);
        }
    }
    Ok(if checks.all() { 0 } else { EXIT_UNDEFINED })
}

// ---------------------------------------------------------------------------
// check

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckOutput {
    pub config: FuzzConfig,
    pub passed: bool,
    pub reports: Vec<PropertyReport>,
}

fn selected(args: &CheckArgs) -> Result<Vec<&'static str>, Failure> {
    let mut ids = Vec::new();
    for part in args.property.split(',').map(str::trim) {
        if part == "all" {
            ids.extend(propcheck::PROPERTY_IDS);
            if args.oracle {
                ids.extend(propcheck::ORACLE_PROPERTY_IDS);
            }
            continue;
        }
        let known = propcheck::PROPERTY_IDS
            .iter()
            .chain(propcheck::ORACLE_PROPERTY_IDS)
            .find(|id| **id == part)
            .ok_or_else(|| Failure::usage(format!("unknown property {part:?}")))?;
        ids.push(*known);
    }
    Ok(ids)
}

fn print_report(r: &PropertyReport) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} {:<20} {:>8} trials  {:>6} ms",
        r.property_id,
        r.trials_run,
        r.elapsed.as_millis()
    );
    for note in &r.notes {
        println!("     {note}");
    }
    if let Some(c) = r.counterexample() {
        let words: Vec<String> = c.words.iter().map(|w| format!("{w:?}")).collect();
        println!("     counterexample: [{}]", words.join(", "));
        for p in &c.paths {
            println!("     path: {p}");
        }
        if let (Some(seed), Some(trial)) = (c.seed, c.trial) {
            println!("     seed {seed}, trial {trial}");
        }
        println!("     {}", c.detail);
    }
}

fn check(args: CheckArgs) -> Outcome {
    let cfg = FuzzConfig {
        seed: args.seed,
        trials: args.trials,
        alphabet_size: args.alphabet,
        max_word_len: args.max_len,
    };
    cfg.validate()?;
    let ids = selected(&args)?;
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        let r = propcheck::run_property(id, &cfg)?;
        if !args.json {
            print_report(&r);
            io::stdout().flush()?;
        }
        reports.push(r);
    }
    let passed = reports.iter().all(PropertyReport::passed);
    if args.json {
        print_json(&CheckOutput {
            config: cfg,
            passed,
            reports,
        })?;
    }
    Ok(if passed { 0 } else { EXIT_PROPERTY })
}

// ---------------------------------------------------------------------------
// bench

fn bench(args: BenchArgs) -> Outcome {
    let cfg = ced_config()?;
    let metrics = args
        .metrics
        .split(',')
        .map(|m| metric(m.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let fuzz = FuzzConfig {
        seed: args.seed,
        trials: args.pairs as u64,
        alphabet_size: args.alphabet,
        max_word_len: args.max_len,
    };
    fuzz.validate()?;
    let pairs = propcheck::random_bench_pairs(&fuzz);
    for m in metrics {
        let start = Instant::now();
        for (a, b) in &pairs {
            m.value(a, b, &cfg)?;
        }
        let total = start.elapsed();
        println!(
            "{:<9} {:>6} pairs  {:>10.3} ms total  {:>10.1} us/pair",
            m.id(),
            pairs.len(),
            total.as_secs_f64() * 1e3,
            total.as_secs_f64() * 1e6 / pairs.len().max(1) as f64
        );
    }
    Ok(0)
}
