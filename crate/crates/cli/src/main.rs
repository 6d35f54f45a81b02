use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cyclext::context::{ContextFile, TOrder, VIContext, DEFAULT_INNER_SEARCH_BOUND};
use cyclext::delta::{conjugates_in_window, delta_reduce, scan_window};
use cyclext::element::ExtElement;
use cyclext::normal_form::{are_conjugate_with, normal_form_with, SearchOptions, DEFAULT_SLACK};
use cyclext::oracle::{brute_force_conjugacy, brute_force_shift_conjugacy};
use cyclext::presets::{artin, involution};
use cyclext::shift::{shift_are_conjugate, shift_normal_form, ShiftElement};
use cyclext::text::{format_element, parse_element, parse_word, Syntax};
use cyclext::word::{cyclically_reduce, Alphabet, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CTX_ENV: &str = "CYCLEXT_CTX";

/// Conjugacy normal forms in cyclic extensions of free groups.
#[derive(Parser)]
#[command(name = "cyclext", version)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// JSON context file.
    #[arg(long, global = true, env = CTX_ENV, value_name = "FILE")]
    ctx: Option<PathBuf>,
    /// Built-in group: `artin:<k>`, `involution:<rank>` or `shift`.
    #[arg(long, global = true, value_name = "SPEC")]
    group: Option<String>,
    /// Emit one JSON object with `result`, `certificate` and `diagnostics`.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Extra length allowed while searching twisted classes.
    #[arg(long, global = true, default_value_t = DEFAULT_SLACK)]
    slack: usize,
    /// Largest power tried when a context file omits `m` and `delta`.
    #[arg(long, global = true, default_value_t = DEFAULT_INNER_SEARCH_BOUND)]
    inner_bound: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Free reduction of an element.
    Reduce { elem: String },
    /// Cyclic reduction `V = S core S^-1` of a word.
    CyclicReduce { word: String },
    /// Shortest conjugate of a word by a power of the witness.
    DeltaReduce {
        word: String,
        /// Witness to use instead of the context's.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Conjugacy normal form and certificate.
    Nf { elem: String },
    /// Decide conjugacy; exit 0 if conjugate, 1 if not.
    Conj { first: String, second: String },
    /// Normal form in the shift extension, whatever the group.
    ShiftNf { elem: String },
    /// Conjugacy in the shift extension; exit 0 if conjugate, 1 if not.
    ShiftConj { first: String, second: String },
    /// Bounded exhaustive conjugator search; exit 0 if found, 1 if not.
    Oracle {
        /// Largest conjugator word length.
        #[arg(long, default_value_t = 4)]
        len: usize,
        /// Largest |a| for the t-part of the conjugator.
        #[arg(long, default_value_t = 2)]
        toff: i64,
        first: String,
        second: String,
    },
    /// Check the context invariants; exit 0 if valid, 1 if not.
    VerifyCtx {
        /// Random words on which the inner power is spot-checked.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

enum Group {
    Vi { ctx: VIContext, name: String },
    Shift,
}

impl Group {
    fn syntax(&self) -> Syntax {
        match self {
            Group::Vi { ctx, .. } => ctx.syntax(),
            Group::Shift => Syntax::new(Alphabet::Integers),
        }
    }

    fn name(&self) -> &str {
        match self {
            Group::Vi { name, .. } => name,
            Group::Shift => "shift",
        }
    }
}

/// What a subcommand produced.
struct Report {
    code: u8,
    lines: Vec<String>,
    json: Value,
}

impl Report {
    fn new(
        code: u8,
        lines: Vec<String>,
        result: Value,
        certificate: Value,
        diagnostics: Value,
    ) -> Self {
        let json =
            json!({ "result": result, "certificate": certificate, "diagnostics": diagnostics });
        Self { code, lines, json }
    }
}

fn preset(spec: &str) -> Result<Group> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let number = || -> Result<u32> {
        arg.parse()
            .with_context(|| format!("`{spec}`: expected a number after `{kind}:`"))
    };
    let ctx = match kind {
        "shift" if arg.is_empty() => return Ok(Group::Shift),
        "artin" => artin(number()?)?,
        "involution" => involution(number()?)?,
        _ => bail!("unknown group `{spec}` (expected artin:<k>, involution:<rank> or shift)"),
    };
    Ok(Group::Vi {
        ctx,
        name: spec.to_string(),
    })
}

fn read_context_file(path: &PathBuf) -> Result<ContextFile> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(ContextFile::from_json(&text)?)
}

fn resolve_group(opts: &GlobalOpts) -> Result<Group> {
    if let Some(spec) = &opts.group {
        return preset(spec);
    }
    let path = opts
        .ctx
        .as_ref()
        .ok_or_else(|| anyhow!("no group: pass --group, --ctx or set {CTX_ENV}"))?;
    let ctx = read_context_file(path)?.into_context(opts.inner_bound)?;
    Ok(Group::Vi {
        ctx,
        name: path.display().to_string(),
    })
}

fn parse(text: &str, syntax: Syntax) -> Result<(i64, Word)> {
    parse_element(text, syntax).with_context(|| format!("parsing `{text}`"))
}

fn shift_elem(text: &str) -> Result<ShiftElement> {
    let (t, w) = parse(text, Syntax::new(Alphabet::Integers))?;
    Ok(ShiftElement::new(t, w))
}

fn t_order_text(o: TOrder) -> String {
    match o {
        TOrder::Infinite => "inf".into(),
        TOrder::Finite(w) => w.to_string(),
    }
}

fn diagnostics(group: &Group) -> Value {
    match group {
        Group::Vi { ctx, name } => json!({
            "group": name,
            "rank": ctx.rank(),
            "t_order": t_order_text(ctx.t_order()),
            "m": ctx.m(),
            "delta": ctx.delta().to_string(),
            "warnings": ctx.warnings(),
        }),
        Group::Shift => json!({ "group": "shift" }),
    }
}

fn reduce(group: &Group, elem: &str) -> Result<Report> {
    let (t, w) = parse(elem, group.syntax())?;
    let t = match group {
        Group::Vi { ctx, .. } => ctx.canonical_t(t),
        Group::Shift => t,
    };
    let out = format_element(t, &w);
    Ok(Report::new(
        0,
        vec![out.clone()],
        json!(out),
        Value::Null,
        diagnostics(group),
    ))
}

fn cyclic_reduce(group: &Group, word: &str) -> Result<Report> {
    let w = parse_word(word, group.syntax())?;
    let (core, s) = cyclically_reduce(&w);
    Ok(Report::new(
        0,
        vec![core.to_string(), format!("conjugator: {s}")],
        json!(core.to_string()),
        json!(s.to_string()),
        diagnostics(group),
    ))
}

fn delta_reduce_cmd(group: &Group, word: &str, delta: Option<&str>) -> Result<Report> {
    let syntax = group.syntax();
    let v = parse_word(word, syntax)?;
    let delta = match (delta, group) {
        (Some(d), _) => parse_word(d, syntax)?,
        (None, Group::Vi { ctx, .. }) => ctx.delta().clone(),
        (None, Group::Shift) => bail!("the shift group has no witness; pass --delta"),
    };
    let r = delta_reduce(&delta, &v);
    let window = scan_window(&delta, &v);
    let profile: Vec<(i64, usize)> = conjugates_in_window(&delta, &v, window)
        .into_iter()
        .map(|(k, w)| (k, w.len()))
        .collect();
    let profile_text: Vec<String> = profile.iter().map(|(k, n)| format!("{k}:{n}")).collect();
    let mut diag = diagnostics(group);
    diag["delta_used"] = json!(delta.to_string());
    diag["window"] = json!(window);
    diag["profile"] = json!(profile);
    Ok(Report::new(
        0,
        vec![
            r.word.to_string(),
            format!("k: {}", r.exponent),
            format!("profile: {}", profile_text.join(" ")),
        ],
        json!(r.word.to_string()),
        json!(r.exponent),
        diag,
    ))
}

fn nf_report(
    element: String,
    certificate: String,
    dbar_size: Option<usize>,
    diag: Value,
) -> Report {
    let mut lines = vec![element.clone(), format!("certificate: {certificate}")];
    if let Some(n) = dbar_size {
        lines.push(format!("dbar size: {n}"));
    }
    let mut r = Report::new(0, lines, json!(element), json!(certificate), diag);
    r.json["normal_form"] = json!(element);
    r.json["dbar_size"] = json!(dbar_size);
    r
}

fn shift_nf(elem: &str, diag: Value) -> Result<Report> {
    let v = shift_elem(elem)?;
    let nf = shift_normal_form(&v);
    Ok(nf_report(
        nf.element.to_string(),
        nf.certificate.conjugator.to_string(),
        None,
        diag,
    ))
}

fn nf(group: &Group, opts: SearchOptions, elem: &str) -> Result<Report> {
    let ctx = match group {
        Group::Shift => return shift_nf(elem, diagnostics(group)),
        Group::Vi { ctx, .. } => ctx,
    };
    let (t, w) = parse(elem, group.syntax())?;
    let nf = normal_form_with(opts, ctx, &ExtElement::new(t, w));
    Ok(nf_report(
        nf.element.to_string(),
        nf.certificate.conjugator.to_string(),
        Some(nf.dbar_size),
        diagnostics(group),
    ))
}

fn decision_report(conjugate: bool, certificate: Option<String>, diag: Value) -> Report {
    let mut lines = vec![if conjugate {
        "conjugate"
    } else {
        "not conjugate"
    }
    .to_string()];
    if let Some(c) = &certificate {
        lines.push(format!("certificate: {c}"));
    }
    Report::new(
        u8::from(!conjugate),
        lines,
        json!(conjugate),
        json!(certificate),
        diag,
    )
}

fn shift_conj(first: &str, second: &str, diag: Value) -> Result<Report> {
    let (u, v) = (shift_elem(first)?, shift_elem(second)?);
    let d = shift_are_conjugate(&u, &v);
    Ok(decision_report(
        d.conjugate,
        d.certificate.map(|c| c.conjugator.to_string()),
        diag,
    ))
}

fn conj(group: &Group, opts: SearchOptions, first: &str, second: &str) -> Result<Report> {
    let ctx = match group {
        Group::Shift => return shift_conj(first, second, diagnostics(group)),
        Group::Vi { ctx, .. } => ctx,
    };
    let (a, u) = parse(first, group.syntax())?;
    let (b, v) = parse(second, group.syntax())?;
    let d = are_conjugate_with(opts, ctx, &ExtElement::new(a, u), &ExtElement::new(b, v));
    Ok(decision_report(
        d.conjugate,
        d.certificate.map(|c| c.conjugator.to_string()),
        diagnostics(group),
    ))
}

fn index_span(words: &[&Word]) -> (i32, i32) {
    let idx = words
        .iter()
        .flat_map(|w| w.letters().iter().map(|l| l.index()));
    let (lo, hi) = idx.fold((i32::MAX, i32::MIN), |(lo, hi), i| (lo.min(i), hi.max(i)));
    if lo > hi {
        (0, 0)
    } else {
        (lo, hi)
    }
}

fn oracle(group: &Group, len: usize, toff: i64, first: &str, second: &str) -> Result<Report> {
    let mut diag = diagnostics(group);
    diag["len"] = json!(len);
    diag["toff"] = json!(toff);
    let found = match group {
        Group::Vi { ctx, .. } => {
            let (a, u) = parse(first, group.syntax())?;
            let (b, v) = parse(second, group.syntax())?;
            brute_force_conjugacy(
                ctx,
                &ExtElement::new(a, u),
                &ExtElement::new(b, v),
                len,
                toff,
            )
            .map(|c| c.conjugator.to_string())
        }
        Group::Shift => {
            let (u, v) = (shift_elem(first)?, shift_elem(second)?);
            // conjugators may use indices shifted by up to `toff` from the inputs
            let (lo, hi) = index_span(&[&u.word, &v.word]);
            let pad = toff.unsigned_abs().min(i32::MAX as u64) as i32;
            let indices = lo.saturating_sub(pad)..=hi.saturating_add(pad);
            diag["indices"] = json!([indices.start(), indices.end()]);
            brute_force_shift_conjugacy(&u, &v, indices, len, toff)
                .map(|c| c.conjugator.to_string())
        }
    };
    let lines = match &found {
        Some(c) => vec!["found".to_string(), format!("certificate: {c}")],
        None => vec!["none within bounds".to_string()],
    };
    Ok(Report::new(
        u8::from(found.is_none()),
        lines,
        json!(found.is_some()),
        json!(found),
        diag,
    ))
}

fn random_word(rng: &mut ChaCha8Rng, rank: u32, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::from_letters((0..n).map(|_| Letter::new(rng.gen_range(1..=rank as i32), rng.gen())))
}

/// Spot-checks `phi^m(w) = delta^-1 w delta` by direct iteration on random
/// words.
fn sample_failures(ctx: &VIContext, samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = ctx.phi();
    (0..samples)
        .filter(|_| {
            let w = random_word(&mut rng, ctx.rank(), 8);
            let iterated = (0..ctx.m()).fold(w.clone(), |x, _| phi.apply_unchecked(&x));
            iterated != w.conjugate_by(ctx.delta())
        })
        .count()
}

fn verify_ctx(opts: &GlobalOpts, samples: usize) -> Result<Report> {
    let (ctx, failures, name) = match &opts.group {
        Some(spec) => match preset(spec)? {
            Group::Vi { ctx, name } => (ctx, Vec::new(), name),
            Group::Shift => bail!("the shift group has no context to verify"),
        },
        None => {
            let path = opts
                .ctx
                .as_ref()
                .ok_or_else(|| anyhow!("no context: pass --ctx or set {CTX_ENV}"))?;
            let (ctx, report) = read_context_file(path)?.inspect(opts.inner_bound)?;
            let failures: Vec<String> = report.failures.iter().map(|f| f.to_string()).collect();
            (ctx, failures, path.display().to_string())
        }
    };
    let bad_samples = sample_failures(&ctx, samples, opts.seed);
    let valid = failures.is_empty() && bad_samples == 0;
    let group = Group::Vi { ctx, name };
    let mut diag = diagnostics(&group);
    diag["failures"] = json!(failures);
    diag["samples"] = json!(samples);
    diag["sample_failures"] = json!(bad_samples);
    diag["seed"] = json!(opts.seed);
    let Group::Vi { ctx, .. } = &group else {
        unreachable!()
    };
    let mut lines = vec![
        if valid { "valid" } else { "invalid" }.to_string(),
        format!(
            "rank {}, t order {}, m {}, delta {}",
            ctx.rank(),
            t_order_text(ctx.t_order()),
            ctx.m(),
            ctx.delta()
        ),
        format!(
            "spot checks: {}/{samples} passed (seed {})",
            samples - bad_samples,
            opts.seed
        ),
    ];
    lines.extend(failures.iter().map(|f| format!("failure: {f}")));
    lines.extend(ctx.warnings().into_iter().map(|w| format!("warning: {w}")));
    Ok(Report::new(
        u8::from(!valid),
        lines,
        json!(valid),
        Value::Null,
        diag,
    ))
}

fn run(cli: &Cli) -> Result<Report> {
    let opts = &cli.opts;
    let search = SearchOptions {
        slack: opts.slack,
        ..SearchOptions::default()
    };
    match &cli.cmd {
        Cmd::ShiftNf { elem } => shift_nf(elem, json!({ "group": "shift" })),
        Cmd::ShiftConj { first, second } => shift_conj(first, second, json!({ "group": "shift" })),
        Cmd::VerifyCtx { samples } => verify_ctx(opts, *samples),
        cmd => {
            let group = resolve_group(opts)?;
            match cmd {
                Cmd::Reduce { elem } => reduce(&group, elem),
                Cmd::CyclicReduce { word } => cyclic_reduce(&group, word),
                Cmd::DeltaReduce { word, delta } => {
                    delta_reduce_cmd(&group, word, delta.as_deref())
                }
                Cmd::Nf { elem } => nf(&group, search, elem),
                Cmd::Conj { first, second } => conj(&group, search, first, second),
                Cmd::Oracle {
                    len,
                    toff,
                    first,
                    second,
                } => oracle(&group, *len, *toff, first, second),
                _ => unreachable!("handled above: {}", group.name()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("valid JSON")
                );
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
