use std::fs;
use std::path::Path;

use brandt_core::constructions::parse_builtin;
use brandt_core::rewrite::{cell_decompose, derive_bounded, eliminate_single_occurrences, star_word, DeriveBounds};
use brandt_core::structure::{classify, separate_regular_pair, StructureClass, StructureError};
use brandt_core::words::{
    abelian_corollary_basis, abelian_positive_basis, identity_holds, is_repeated, ln_identity,
    parse_identity, parse_word, theorem_basis, trahtman_basis, CheckError, Counterexample,
    Identity, PositiveBasis, Verdict, Word,
};
use brandt_core::{parse_table_file, write_table_file, Builtin, FiniteSemigroup, RewriteTrace};
use serde_json::{json, Value};

use crate::cli::Format;

pub const HOLDS: u8 = 0;
pub const FAILS: u8 = 1;
pub const INVALID: u8 = 3;
pub const BUDGET: u8 = 4;

/// A failure that ends the run with a nonzero exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: INVALID,
        message: message.to_string(),
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::BudgetExceeded { .. } => Failure {
                code: BUDGET,
                message: e.to_string(),
            },
            CheckError::UnassignedVariable(_) => invalid(e),
        }
    }
}

/// Stdout writes that end the process quietly once the reader hangs up.
macro_rules! out {
    ($($arg:tt)*) => { write_stdout(format_args!($($arg)*)) };
}

macro_rules! outln {
    ($($arg:tt)*) => { write_stdout(format_args!("{}\n", format_args!($($arg)*))) };
}

fn write_stdout(args: std::fmt::Arguments) {
    use std::io::{ErrorKind, Write};
    if let Err(e) = std::io::stdout().lock().write_fmt(args) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

type Outcome = Result<u8, Failure>;

pub struct Ctx {
    pub format: Format,
    pub budget: Option<u64>,
}

impl Ctx {
    /// First line of plain output; the caller prints detail lines after it.
    fn emit(&self, plain: &str, json: Value) {
        match self.format {
            Format::Plain => outln!("{plain}"),
            Format::JsonLines => outln!("{json}"),
        }
    }

    fn detail(&self, line: &str) {
        if self.format == Format::Plain {
            outln!("{line}");
        }
    }

    fn check(&self, s: &FiniteSemigroup, id: &Identity) -> Result<Verdict, Failure> {
        Ok(identity_holds(s, id, self.budget)?)
    }
}

fn load(source: &str) -> Result<Builtin, Failure> {
    match source.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?;
            let s = parse_table_file(&text).map_err(|e| invalid(format!("{path}: {e}")))?;
            Ok(Builtin::Semigroup(s))
        }
        None => parse_builtin(source).map_err(|e| invalid(format!("`{source}`: {e}"))),
    }
}

fn identity(text: &str) -> Result<Identity, Failure> {
    parse_identity(text).map_err(|e| invalid(format!("`{text}`: {e}")))
}

fn word(text: &str) -> Result<Word, Failure> {
    parse_word(text).map_err(|e| invalid(format!("`{text}`: {e}")))
}

fn counterexample_json(s: &FiniteSemigroup, ce: &Counterexample) -> Value {
    let assignment: serde_json::Map<String, Value> = ce
        .evaluation
        .iter()
        .map(|(v, x)| (v.to_string(), Value::from(s.label(x).into_owned())))
        .collect();
    json!({
        "assignment": assignment,
        "lhs": s.label(ce.lhs_value),
        "rhs": s.label(ce.rhs_value),
    })
}

fn verdict_line(s: &FiniteSemigroup, v: &Verdict) -> String {
    match &v.counterexample {
        None => "HOLDS".to_string(),
        Some(ce) => format!("FAILS {}", ce.evaluation.describe(s)),
    }
}

fn verdict_json(s: &FiniteSemigroup, id: &Identity, v: &Verdict) -> Value {
    json!({
        "verdict": if v.holds { "holds" } else { "fails" },
        "identity": id.to_string(),
        "counterexample": v.counterexample.as_ref().map(|ce| counterexample_json(s, ce)),
        "evaluations": v.evaluations_checked,
    })
}

fn report_verdict(ctx: &Ctx, s: &FiniteSemigroup, id: &Identity, v: &Verdict) -> u8 {
    ctx.emit(&verdict_line(s, v), verdict_json(s, id, v));
    ctx.detail(&format!("identity {id}"));
    if let Some(ce) = &v.counterexample {
        ctx.detail(&format!("lhs={} rhs={}", s.label(ce.lhs_value), s.label(ce.rhs_value)));
    }
    ctx.detail(&format!("evaluations={}", v.evaluations_checked));
    if v.holds {
        HOLDS
    } else {
        FAILS
    }
}

pub fn check(ctx: &Ctx, source: &str, id_text: &str) -> Outcome {
    let s = load(source)?.into_semigroup();
    let id = identity(id_text)?;
    let v = ctx.check(&s, &id)?;
    Ok(report_verdict(ctx, &s, &id, &v))
}

fn read_positive_basis(source: &str, n: usize) -> Result<PositiveBasis, Failure> {
    if source == "abelian" {
        if n < 2 {
            return Err(invalid("the abelian positive basis needs n >= 2"));
        }
        return Ok(abelian_positive_basis(n));
    }
    let text = fs::read_to_string(source).map_err(|e| invalid(format!("{source}: {e}")))?;
    PositiveBasis::parse(&text).map_err(|e| invalid(format!("{source}: {e}")))
}

pub fn basis_verify(ctx: &Ctx, source: &str, n: usize, positive: &str, abelian: bool) -> Outcome {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let s = load(source)?.into_semigroup();
    let basis = if abelian {
        abelian_corollary_basis(n)
    } else {
        theorem_basis(n, &read_positive_basis(positive, n)?)
    };
    let verdicts = basis
        .iter()
        .map(|id| ctx.check(&s, id))
        .collect::<Result<Vec<_>, _>>()?;
    let first_failure = basis.iter().zip(&verdicts).find(|(_, v)| !v.holds);
    let head = match first_failure {
        None => "HOLDS".to_string(),
        Some((id, v)) => format!("FAILS {id} at {}", verdict_line(&s, v).trim_start_matches("FAILS ")),
    };
    ctx.emit(
        &head,
        json!({"verdict": if first_failure.is_none() { "holds" } else { "fails" }, "identities": basis.len()}),
    );
    for (id, v) in basis.iter().zip(&verdicts) {
        match ctx.format {
            Format::Plain => outln!("{} {id}", if v.holds { "holds" } else { "fails" }),
            Format::JsonLines => outln!("{}", verdict_json(&s, id, v)),
        }
    }
    Ok(if first_failure.is_none() { HOLDS } else { FAILS })
}

fn trace_json(trace: &RewriteTrace) -> Value {
    Value::from(trace.to_string().lines().map(str::to_string).collect::<Vec<_>>())
}

/// Cell form of a repeated word, after removing single occurrences.
fn cells_of(text: &str, n: usize) -> Result<(brandt_core::CellForm, RewriteTrace), Failure> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let w = word(text)?;
    if let (false, Some(v)) = is_repeated(&w) {
        return Err(invalid(format!("{w} is not repeated: {v} lies in no factor of the form zpz")));
    }
    let (w2, mut trace) = eliminate_single_occurrences(&w, n).map_err(invalid)?;
    let (cf, more) = cell_decompose(&w2, n).map_err(invalid)?;
    trace.extend(more);
    Ok((cf, trace))
}

pub fn decompose(ctx: &Ctx, text: &str, n: usize) -> Outcome {
    let (cf, trace) = cells_of(text, n)?;
    let flat = cf.flatten();
    let cells: Vec<Value> = cf
        .cells()
        .iter()
        .map(|(y, p)| json!([y.to_string(), p.iter().map(|v| v.to_string()).collect::<String>()]))
        .collect();
    ctx.emit(
        &format!("CELLFORM {flat}"),
        json!({"cell_form": flat.to_string(), "cells": cells, "trace": trace_json(&trace)}),
    );
    for (y, p) in cf.cells() {
        let body: String = p.iter().map(|v| v.to_string()).collect();
        ctx.detail(&format!("cell {y} {}", if body.is_empty() { "-" } else { &body }));
    }
    if ctx.format == Format::Plain {
        out!("{trace}");
    }
    Ok(HOLDS)
}

pub fn star(ctx: &Ctx, text: &str, n: usize) -> Outcome {
    let (cf, _) = cells_of(text, n)?;
    let h = star_word(&cf).map_err(invalid)?;
    ctx.emit(&format!("STAR {h}"), json!({"star": h.to_string(), "cell_form": cf.flatten().to_string()}));
    ctx.detail(&format!("cell form {}", cf.flatten()));
    Ok(HOLDS)
}

fn element(s: &FiniteSemigroup, text: &str) -> Result<usize, Failure> {
    s.element_by_label(text)
        .ok_or_else(|| invalid(format!("no element `{text}`")))
}

fn class_json(c: &StructureClass) -> Value {
    json!({
        "kind": c.kind.to_string(),
        "q_order": c.q_order(),
        "index_size": c.index_size,
    })
}

pub fn separate(ctx: &Ctx, source: &str, a: &str, b: &str, n: usize) -> Outcome {
    let s = load(source)?.into_semigroup();
    let (a, b) = (element(&s, a)?, element(&s, b)?);
    let r = match separate_regular_pair(&s, a, b, n) {
        Ok(r) => r,
        Err(StructureError::SeparationFailed(reason)) => {
            ctx.emit(&format!("FAILS {reason}"), json!({"verdict": "fails", "reason": reason}));
            return Ok(FAILS);
        }
        Err(StructureError::Check(e)) => return Err(e.into()),
        Err(e) => return Err(invalid(e)),
    };
    let mut record = class_json(&r.quotient_class);
    record["verdict"] = json!("separated");
    record["chosen_z"] = json!(s.label(r.chosen_z));
    ctx.emit(
        &format!("SEPARATED z={} {}", s.label(r.chosen_z), r.quotient_class),
        record,
    );
    let t = r.hom.target();
    for x in s.elements() {
        ctx.detail(&format!("{} -> {}", s.label(x), t.label(r.hom.apply(x))));
    }
    Ok(HOLDS)
}

pub fn classify_cmd(ctx: &Ctx, source: &str, verbose: bool) -> Outcome {
    let s = load(source)?.into_semigroup();
    let c = classify(&s);
    ctx.emit(&format!("KIND={}", c.kind), class_json(&c));
    ctx.detail(&c.to_string());
    if let (true, Some(w)) = (verbose, &c.witness) {
        for x in s.elements() {
            ctx.detail(&format!("{} -> {}", s.label(x), w.target().label(w.apply(x))));
        }
    }
    Ok(HOLDS)
}

pub fn build(ctx: &Ctx, source: &str, output: Option<&Path>) -> Outcome {
    let built = load(source)?;
    let s = built.semigroup();
    let text = write_table_file(s);
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            ctx.emit(
                &format!("BUILT {} {}", s.size(), path.display()),
                json!({"size": s.size(), "output": path.display().to_string()}),
            );
        }
        None => match ctx.format {
            Format::Plain => out!("{text}"),
            Format::JsonLines => outln!("{}", json!({"size": s.size(), "table": s.rows()})),
        },
    }
    Ok(HOLDS)
}

fn read_basis(source: &str) -> Result<Vec<Identity>, Failure> {
    if source == "trahtman" {
        return Ok(trahtman_basis());
    }
    let text = fs::read_to_string(source).map_err(|e| invalid(format!("{source}: {e}")))?;
    let basis = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(identity)
        .collect::<Result<Vec<_>, _>>()?;
    if basis.is_empty() {
        return Err(invalid(format!("{source}: no identities")));
    }
    Ok(basis)
}

pub fn derive(ctx: &Ctx, id_text: &str, basis: &str, bounds: DeriveBounds) -> Outcome {
    let id = identity(id_text)?;
    let basis = read_basis(basis)?;
    match derive_bounded(&id, &basis, bounds) {
        Some(trace) => {
            ctx.emit(
                &format!("DERIVED {} steps", trace.len()),
                json!({"verdict": "derived", "steps": trace.len(), "trace": trace_json(&trace)}),
            );
            if ctx.format == Format::Plain {
                out!("{trace}");
            }
            Ok(HOLDS)
        }
        None => {
            ctx.emit("NOT FOUND within bounds", json!({"verdict": "not_found"}));
            Ok(FAILS)
        }
    }
}

pub fn ln(ctx: &Ctx, n: usize, source: Option<&str>) -> Outcome {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let id = ln_identity(n);
    match source {
        None => {
            ctx.emit(&format!("L{n}: {id}"), json!({"identity": id.to_string()}));
            Ok(HOLDS)
        }
        Some(source) => {
            let s = load(source)?.into_semigroup();
            let v = ctx.check(&s, &id)?;
            Ok(report_verdict(ctx, &s, &id, &v))
        }
    }
}
