//! Session-file front end: parsing, command dispatch, and report emission.
//!
//! A session is a line-oriented document: a ring header, named ideal and
//! module definitions, and commands executed in order. `#` starts a comment.
//!
//! ```text
//! ring p=32003 vars=[x,y,z]
//! ideal I = [x^2*y, x*y^2*z, z^3]
//! ideal N = [x^2, y, z^2]
//! witnesses I N
//! resolve I --module N --steps 8 --emit minors
//! verify duality I --n N
//! ```
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a FALSIFIED report was
//! emitted, 3 a resource cap was hit. Output is deterministic: the same
//! session and seed produce byte-identical JSON.

use crate::analysis::{
    check_twist1_conditions, display_mod, fuzz, periodicity_report, verify_big1, verify_big2,
    verify_dual2, verify_dualpos, Conclusion, FuzzConfig, Report,
};
use crate::burch::{
    burch_chain, burch_ideal, burch_index, duality_check, realization_witnesses,
    realized_witnesses, realizes,
};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::resolution::{
    entry_ideal, resolve, FreeModule, GradedMatrix, PresentedModule, QuotientRing, ResolveOptions,
};
use crate::Ring;
use serde::Serialize;
use serde_json::json;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub enum Definition {
    Ideal { name: String, gens: Vec<String> },
    Module { name: String, rows: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyKind {
    Big1,
    Big2,
    Dual2,
    DualPos,
    Twist1,
    Duality,
    Periodicity,
}

impl VerifyKind {
    fn parse(word: &str) -> Option<VerifyKind> {
        Some(match word {
            "big1" => VerifyKind::Big1,
            "big2" => VerifyKind::Big2,
            "dual2" => VerifyKind::Dual2,
            "dualpos" => VerifyKind::DualPos,
            "twist1" => VerifyKind::Twist1,
            "duality" => VerifyKind::Duality,
            "periodicity" => VerifyKind::Periodicity,
            _ => return None,
        })
    }

    fn word(&self) -> &'static str {
        match self {
            VerifyKind::Big1 => "big1",
            VerifyKind::Big2 => "big2",
            VerifyKind::Dual2 => "dual2",
            VerifyKind::DualPos => "dualpos",
            VerifyKind::Twist1 => "twist1",
            VerifyKind::Duality => "duality",
            VerifyKind::Periodicity => "periodicity",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    BurchIndex {
        ideal: String,
        n: Option<String>,
    },
    BurchChain {
        ideal: String,
        max_iter: usize,
    },
    BiN {
        ideal: String,
        n: String,
    },
    Witnesses {
        ideal: String,
        n: String,
    },
    Resolve {
        ideal: String,
        module: String,
        steps: usize,
        emit_minors: bool,
        emit_matrices: bool,
    },
    Minors {
        ideal: String,
        module: String,
        steps: usize,
    },
    Verify {
        kind: VerifyKind,
        ideal: String,
        module: Option<String>,
        n: Option<String>,
        step: Option<usize>,
        col: Option<usize>,
        steps: usize,
        window: usize,
    },
    Fuzz {
        seed: u64,
        count: usize,
        vars: usize,
        max_deg: u16,
        gens: usize,
        steps: usize,
        binomials: bool,
    },
}

/// A parsed and name-checked session.
#[derive(Clone, Debug, PartialEq)]
pub struct SessionSpec {
    pub prime: u64,
    pub variables: Vec<String>,
    pub definitions: Vec<Definition>,
    pub commands: Vec<Command>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 0,
        msg: msg.into(),
    }
}

fn split_bracket_list(s: &str, line: usize) -> Result<Vec<String>> {
    let s = s.trim();
    if !s.starts_with('[') || !s.ends_with(']') {
        return Err(parse_err(line, "expected a [...] list"));
    }
    let inner = &s[1..s.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|p| p.trim().to_string()).collect())
}

fn split_nested_rows(s: &str, line: usize) -> Result<Vec<Vec<String>>> {
    let s = s.trim();
    if !s.starts_with("[[") || !s.ends_with("]]") {
        return Err(parse_err(line, "expected [[...],[...]] rows"));
    }
    let inner = &s[1..s.len() - 1];
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 {
                    current.clear();
                    continue;
                }
            }
            ']' => {
                if depth == 0 {
                    return Err(parse_err(line, "unbalanced brackets"));
                }
                depth -= 1;
                if depth == 0 {
                    rows.push(
                        current
                            .split(',')
                            .map(|p| p.trim().to_string())
                            .filter(|p| !p.is_empty())
                            .collect(),
                    );
                    continue;
                }
            }
            _ => {}
        }
        if depth >= 1 {
            current.push(ch);
        }
    }
    if depth != 0 {
        return Err(parse_err(line, "unbalanced brackets"));
    }
    Ok(rows)
}

struct FlagParser<'a> {
    words: &'a [String],
    idx: usize,
    line: usize,
}

impl<'a> FlagParser<'a> {
    fn new(words: &'a [String], idx: usize, line: usize) -> Self {
        FlagParser { words, idx, line }
    }

    fn next_positional(&mut self) -> Result<String> {
        match self.words.get(self.idx) {
            Some(w) if !w.starts_with("--") => {
                self.idx += 1;
                Ok(w.clone())
            }
            _ => Err(parse_err(self.line, "expected a name argument")),
        }
    }

    fn opt_positional(&mut self) -> Option<String> {
        match self.words.get(self.idx) {
            Some(w) if !w.starts_with("--") => {
                self.idx += 1;
                Some(w.clone())
            }
            _ => None,
        }
    }

    /// Collect `--flag value` pairs and bare `--flag` switches.
    fn flags(&mut self) -> Result<Vec<(String, Option<String>)>> {
        let mut out = Vec::new();
        while let Some(w) = self.words.get(self.idx) {
            if let Some(name) = w.strip_prefix("--") {
                self.idx += 1;
                let value = match self.words.get(self.idx) {
                    Some(v) if !v.starts_with("--") => {
                        self.idx += 1;
                        Some(v.clone())
                    }
                    _ => None,
                };
                out.push((name.to_string(), value));
            } else {
                return Err(parse_err(self.line, format!("unexpected argument `{w}`")));
            }
        }
        Ok(out)
    }
}

fn flag_usize(flags: &[(String, Option<String>)], name: &str, default: usize, line: usize) -> Result<usize> {
    for (k, v) in flags {
        if k == name {
            let v = v
                .as_ref()
                .ok_or_else(|| parse_err(line, format!("--{name} needs a value")))?;
            return v
                .parse()
                .map_err(|_| parse_err(line, format!("--{name} expects an integer")));
        }
    }
    Ok(default)
}

fn flag_u64(flags: &[(String, Option<String>)], name: &str, default: u64, line: usize) -> Result<u64> {
    Ok(flag_usize(flags, name, default as usize, line)? as u64)
}

fn flag_present(flags: &[(String, Option<String>)], name: &str) -> bool {
    flags.iter().any(|(k, _)| k == name)
}

fn known_flags(flags: &[(String, Option<String>)], allowed: &[&str], line: usize) -> Result<()> {
    for (k, _) in flags {
        if !allowed.contains(&k.as_str()) {
            return Err(parse_err(line, format!("unknown flag --{k}")));
        }
    }
    Ok(())
}

/// Parse a session document; validates the ring header, every definition
/// (names unique and defined, generators homogeneous) and every command.
pub fn parse_session(text: &str) -> Result<SessionSpec> {
    let mut prime: Option<u64> = None;
    let mut variables: Vec<String> = Vec::new();
    let mut definitions: Vec<Definition> = Vec::new();
    let mut commands: Vec<Command> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            continue;
        }
        let words: Vec<String> = trimmed.split_whitespace().map(|s| s.to_string()).collect();
        match words[0].as_str() {
            "ring" => {
                if prime.is_some() {
                    return Err(parse_err(line, "duplicate ring header"));
                }
                let rest = trimmed["ring".len()..].trim();
                let mut p = None;
                let mut vars = None;
                for part in rest.split_whitespace() {
                    if let Some(v) = part.strip_prefix("p=") {
                        p = Some(
                            v.parse::<u64>()
                                .map_err(|_| parse_err(line, "p= expects an integer"))?,
                        );
                    } else if let Some(v) = part.strip_prefix("vars=") {
                        vars = Some(split_bracket_list(v, line)?);
                    } else {
                        return Err(parse_err(line, format!("unexpected `{part}` in ring header")));
                    }
                }
                let p = p.ok_or_else(|| parse_err(line, "ring header needs p=<prime>"))?;
                let vars = vars.ok_or_else(|| parse_err(line, "ring header needs vars=[...]"))?;
                Ring::new(p, vars.clone()).map_err(|e| parse_err(line, e.to_string()))?;
                prime = Some(p);
                variables = vars;
            }
            "ideal" => {
                let rest = trimmed["ideal".len()..].trim();
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line, "expected `ideal NAME = [...]`"))?;
                let name = name.trim().to_string();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(parse_err(line, "bad ideal name"));
                }
                let gens = split_bracket_list(body, line)?;
                definitions.push(Definition::Ideal { name, gens });
            }
            "module" => {
                let rest = trimmed["module".len()..].trim();
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line, "expected `module NAME = coker [[...]]`"))?;
                let name = name.trim().to_string();
                let body = body.trim();
                let rows_src = body
                    .strip_prefix("coker")
                    .ok_or_else(|| parse_err(line, "modules are declared as `coker [[...]]`"))?;
                let rows = split_nested_rows(rows_src, line)?;
                definitions.push(Definition::Module { name, rows });
            }
            "burch-index" => {
                let mut fp = FlagParser::new(&words, 1, line);
                let ideal = fp.next_positional()?;
                let n = fp.opt_positional();
                known_flags(&fp.flags()?, &[], line)?;
                commands.push(Command::BurchIndex { ideal, n });
            }
            "burch-chain" => {
                let mut fp = FlagParser::new(&words, 1, line);
                let ideal = fp.next_positional()?;
                let flags = fp.flags()?;
                known_flags(&flags, &["max-iter"], line)?;
                let max_iter = flag_usize(&flags, "max-iter", 50, line)?;
                commands.push(Command::BurchChain { ideal, max_iter });
            }
            "bi-n" => {
                let mut fp = FlagParser::new(&words, 1, line);
                let ideal = fp.next_positional()?;
                let n = fp.next_positional()?;
                known_flags(&fp.flags()?, &[], line)?;
                commands.push(Command::BiN { ideal, n });
            }
            "witnesses" => {
                let mut fp = FlagParser::new(&words, 1, line);
                let ideal = fp.next_positional()?;
                let n = fp.next_positional()?;
                known_flags(&fp.flags()?, &[], line)?;
                commands.push(Command::Witnesses { ideal, n });
            }
            "resolve" | "minors" => {
                let is_minors = words[0] == "minors";
                let mut fp = FlagParser::new(&words, 1, line);
                let ideal = fp.next_positional()?;
                let flags = fp.flags()?;
                known_flags(&flags, &["module", "steps", "emit"], line)?;
                let module = flags
                    .iter()
                    .find(|(k, _)| k == "module")
                    .and_then(|(_, v)| v.clone())
                    .ok_or_else(|| parse_err(line, "--module NAME is required"))?;
                let steps = flag_usize(&flags, "steps", 8, line)?;
                if is_minors {
                    commands.push(Command::Minors {
                        ideal,
                        module,
                        steps,
                    });
                } else {
                    let emit = flags
                        .iter()
                        .find(|(k, _)| k == "emit")
                        .and_then(|(_, v)| v.clone())
                        .unwrap_or_default();
                    let kinds: Vec<&str> = emit.split(',').filter(|s| !s.is_empty()).collect();
                    for k in &kinds {
                        if !["minors", "matrices"].contains(k) {
                            return Err(parse_err(line, format!("unknown emit kind `{k}`")));
                        }
                    }
                    commands.push(Command::Resolve {
                        ideal,
                        module,
                        steps,
                        emit_minors: kinds.contains(&"minors"),
                        emit_matrices: kinds.contains(&"matrices"),
                    });
                }
            }
            "verify" => {
                let kind_word = words
                    .get(1)
                    .ok_or_else(|| parse_err(line, "verify needs a check name"))?;
                let kind = VerifyKind::parse(kind_word)
                    .ok_or_else(|| parse_err(line, format!("unknown check `{kind_word}`")))?;
                let mut fp = FlagParser::new(&words, 2, line);
                let ideal = fp.next_positional()?;
                let flags = fp.flags()?;
                known_flags(&flags, &["module", "n", "step", "col", "steps", "window"], line)?;
                let get_name = |k: &str| {
                    flags
                        .iter()
                        .find(|(key, _)| key == k)
                        .and_then(|(_, v)| v.clone())
                };
                let step = match get_name("step") {
                    Some(s) => Some(
                        s.parse::<usize>()
                            .map_err(|_| parse_err(line, "--step expects an integer"))?,
                    ),
                    None => None,
                };
                let col = match get_name("col") {
                    Some(s) => Some(
                        s.parse::<usize>()
                            .map_err(|_| parse_err(line, "--col expects an integer"))?,
                    ),
                    None => None,
                };
                commands.push(Command::Verify {
                    kind,
                    ideal,
                    module: get_name("module"),
                    n: get_name("n"),
                    step,
                    col,
                    steps: flag_usize(&flags, "steps", 8, line)?,
                    window: flag_usize(&flags, "window", 4, line)?,
                });
            }
            "fuzz" => {
                let mut fp = FlagParser::new(&words, 1, line);
                let flags = fp.flags()?;
                known_flags(
                    &flags,
                    &["seed", "count", "vars", "max-deg", "gens", "steps", "binomials"],
                    line,
                )?;
                commands.push(Command::Fuzz {
                    seed: flag_u64(&flags, "seed", 1, line)?,
                    count: flag_usize(&flags, "count", 100, line)?,
                    vars: flag_usize(&flags, "vars", 3, line)?,
                    max_deg: flag_usize(&flags, "max-deg", 3, line)? as u16,
                    gens: flag_usize(&flags, "gens", 5, line)?,
                    steps: flag_usize(&flags, "steps", 0, line)?,
                    binomials: flag_present(&flags, "binomials"),
                });
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let prime = prime.ok_or_else(|| parse_err(0, "missing ring header"))?;
    let spec = SessionSpec {
        prime,
        variables,
        definitions,
        commands,
    };
    validate(&spec)?;
    Ok(spec)
}

/// Name resolution and generator validation for a parsed spec.
fn validate(spec: &SessionSpec) -> Result<()> {
    let ring = spec.ring()?;
    let mut names = std::collections::BTreeSet::new();
    for def in &spec.definitions {
        let name = match def {
            Definition::Ideal { name, gens } => {
                for g in gens {
                    let f = ring.parse_polynomial(g)?;
                    f.require_homogeneous()?;
                }
                name
            }
            Definition::Module { name, rows } => {
                for row in rows {
                    for e in row {
                        ring.parse_polynomial(e)?.require_homogeneous()?;
                    }
                }
                name
            }
        };
        if !names.insert(name.clone()) {
            return Err(Error::Invalid(format!("duplicate definition `{name}`")));
        }
    }
    let check = |n: &str| -> Result<()> {
        if names.contains(n) {
            Ok(())
        } else {
            Err(Error::UnknownName(n.to_string()))
        }
    };
    for c in &spec.commands {
        match c {
            Command::BurchIndex { ideal, n } => {
                check(ideal)?;
                if let Some(n) = n {
                    check(n)?;
                }
            }
            Command::BurchChain { ideal, .. } => check(ideal)?,
            Command::BiN { ideal, n } | Command::Witnesses { ideal, n } => {
                check(ideal)?;
                check(n)?;
            }
            Command::Resolve { ideal, module, .. } | Command::Minors { ideal, module, .. } => {
                check(ideal)?;
                check(module)?;
            }
            Command::Verify {
                ideal, module, n, ..
            } => {
                check(ideal)?;
                if let Some(m) = module {
                    check(m)?;
                }
                if let Some(n) = n {
                    check(n)?;
                }
            }
            Command::Fuzz { .. } => {}
        }
    }
    Ok(())
}

impl SessionSpec {
    pub fn ring(&self) -> Result<Ring> {
        Ring::new(self.prime, self.variables.clone())
    }

    fn lookup_ideal(&self, ring: &Ring, name: &str) -> Result<Ideal> {
        for def in &self.definitions {
            if let Definition::Ideal { name: n, gens } = def {
                if n == name {
                    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
                    return Ideal::parse(ring, &refs);
                }
            }
        }
        Err(Error::UnknownName(name.to_string()))
    }

    fn lookup_module(&self, ring: &Ring, quotient: &QuotientRing, name: &str) -> Result<PresentedModule> {
        for def in &self.definitions {
            match def {
                Definition::Ideal { name: n, .. } if n == name => {
                    return Ok(PresentedModule::Ideal(self.lookup_ideal(ring, name)?));
                }
                Definition::Module { name: n, rows } if n == name => {
                    let entries: Vec<Vec<crate::Polynomial>> = rows
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|e| Ok(quotient.reduce(&ring.parse_polynomial(e)?)))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let rows_n = entries.len();
                    let cols_n = entries.first().map_or(0, |r| r.len());
                    if entries.iter().any(|r| r.len() != cols_n) {
                        return Err(Error::Invalid("ragged module rows".into()));
                    }
                    // infer twists: target r gets 0 for the first row, then
                    // offsets that keep each entry homogeneous
                    let (src, tgt) = infer_twists(&entries, rows_n, cols_n)?;
                    let mat = GradedMatrix::new(
                        ring,
                        FreeModule::new(src),
                        FreeModule::new(tgt),
                        entries,
                    )?;
                    return Ok(PresentedModule::Cokernel(mat));
                }
                _ => {}
            }
        }
        Err(Error::UnknownName(name.to_string()))
    }

    /// Canonical text form; `parse_session(to_text())` round-trips.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ring p={} vars=[{}]\n",
            self.prime,
            self.variables.join(",")
        ));
        for def in &self.definitions {
            match def {
                Definition::Ideal { name, gens } => {
                    out.push_str(&format!("ideal {name} = [{}]\n", gens.join(", ")));
                }
                Definition::Module { name, rows } => {
                    let body: Vec<String> =
                        rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                    out.push_str(&format!("module {name} = coker [{}]\n", body.join(", ")));
                }
            }
        }
        for c in &self.commands {
            out.push_str(&command_text(c));
            out.push('\n');
        }
        out
    }
}

/// Infer graded twists for a cokernel presentation, row by row.
fn infer_twists(
    entries: &[Vec<crate::Polynomial>],
    rows: usize,
    cols: usize,
) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut tgt: Vec<Option<i64>> = vec![None; rows];
    let mut src: Vec<Option<i64>> = vec![None; cols];
    if rows > 0 {
        tgt[0] = Some(0);
    }
    // propagate constraints deg(e) = src[c] - tgt[r] until stable
    for _ in 0..rows + cols + 1 {
        let mut progress = false;
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let d = e.degree() as i64;
                match (tgt[r], src[c]) {
                    (Some(t), None) => {
                        src[c] = Some(t + d);
                        progress = true;
                    }
                    (None, Some(s)) => {
                        tgt[r] = Some(s - d);
                        progress = true;
                    }
                    _ => {}
                }
            }
        }
        if !progress {
            break;
        }
    }
    let tgt: Vec<i64> = tgt.into_iter().map(|t| t.unwrap_or(0)).collect();
    let src: Vec<i64> = src.into_iter().map(|s| s.unwrap_or(0)).collect();
    Ok((src, tgt))
}

fn command_text(c: &Command) -> String {
    match c {
        Command::BurchIndex { ideal, n } => match n {
            Some(n) => format!("burch-index {ideal} {n}"),
            None => format!("burch-index {ideal}"),
        },
        Command::BurchChain { ideal, max_iter } => {
            format!("burch-chain {ideal} --max-iter {max_iter}")
        }
        Command::BiN { ideal, n } => format!("bi-n {ideal} {n}"),
        Command::Witnesses { ideal, n } => format!("witnesses {ideal} {n}"),
        Command::Resolve {
            ideal,
            module,
            steps,
            emit_minors,
            emit_matrices,
        } => {
            let mut s = format!("resolve {ideal} --module {module} --steps {steps}");
            let mut kinds = Vec::new();
            if *emit_minors {
                kinds.push("minors");
            }
            if *emit_matrices {
                kinds.push("matrices");
            }
            if !kinds.is_empty() {
                s.push_str(&format!(" --emit {}", kinds.join(",")));
            }
            s
        }
        Command::Minors {
            ideal,
            module,
            steps,
        } => format!("minors {ideal} --module {module} --steps {steps}"),
        Command::Verify {
            kind,
            ideal,
            module,
            n,
            step,
            col,
            steps,
            window,
        } => {
            let mut s = format!("verify {} {ideal}", kind.word());
            if let Some(m) = module {
                s.push_str(&format!(" --module {m}"));
            }
            if let Some(n) = n {
                s.push_str(&format!(" --n {n}"));
            }
            if let Some(v) = step {
                s.push_str(&format!(" --step {v}"));
            }
            if let Some(v) = col {
                s.push_str(&format!(" --col {v}"));
            }
            s.push_str(&format!(" --steps {steps} --window {window}"));
            s
        }
        Command::Fuzz {
            seed,
            count,
            vars,
            max_deg,
            gens,
            steps,
            binomials,
        } => {
            let mut s = format!(
                "fuzz --seed {seed} --count {count} --vars {vars} --max-deg {max_deg} --gens {gens} --steps {steps}"
            );
            if *binomials {
                s.push_str(" --binomials");
            }
            s
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    pub data: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionOutput {
    pub schema_version: u32,
    pub session: String,
    pub results: Vec<CommandResult>,
}

/// Run every command in order; returns the process exit code and the output.
pub fn run(spec: &SessionSpec, session_name: &str) -> (i32, SessionOutput) {
    let mut results = Vec::new();
    let mut exit = 0i32;
    for command in &spec.commands {
        let text = command_text(command);
        match run_command(spec, command) {
            Ok(result) => {
                if let Some(report) = &result.report {
                    if report.conclusion == Conclusion::Falsified {
                        exit = 2;
                    }
                }
                if result.status == "falsified" {
                    exit = 2;
                }
                if result.status == "capped" && exit == 0 {
                    exit = 3;
                }
                results.push(result);
            }
            Err(e) => {
                if exit == 0 {
                    exit = 1;
                }
                results.push(CommandResult {
                    command: text,
                    status: "error".into(),
                    report: None,
                    data: json!({ "error": e.to_string() }),
                });
            }
        }
    }
    (
        exit,
        SessionOutput {
            schema_version: SCHEMA_VERSION,
            session: session_name.to_string(),
            results,
        },
    )
}

fn run_command(spec: &SessionSpec, command: &Command) -> Result<CommandResult> {
    let ring = spec.ring()?;
    let text = command_text(command);
    let ok = |data: serde_json::Value| CommandResult {
        command: text.clone(),
        status: "ok".into(),
        report: None,
        data,
    };
    match command {
        Command::BurchIndex { ideal, n } => {
            let i = spec.lookup_ideal(&ring, ideal)?;
            let n_ideal = match n {
                Some(name) => spec.lookup_ideal(&ring, name)?,
                None => Ideal::maximal(&ring),
            };
            let value = burch_index(&i, &n_ideal)?;
            Ok(ok(json!({ "ideal": ideal, "n": n, "burch_index": value })))
        }
        Command::BurchChain { ideal, max_iter } => {
            let i = spec.lookup_ideal(&ring, ideal)?;
            let quotient = QuotientRing::new(&ring, i.clone())?;
            let chain = burch_chain(&i, *max_iter)?;
            let steps: Vec<serde_json::Value> = chain
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "j": s.index,
                        "burch_ideal": s.burch_ideal.to_string(),
                        "burch_ideal_mod": display_mod(&s.burch_ideal, &quotient),
                        "colon_ideal": s.colon_ideal.to_string(),
                        "burch_index": s.value,
                    })
                })
                .collect();
            Ok(ok(json!({
                "ideal": ideal,
                "steps": steps,
                "first_zero": chain.first_zero,
                "gb": chain.gb,
                "bd": chain.bd,
                "status": chain.status,
                "positive_depth": chain.positive_depth,
            })))
        }
        Command::BiN { ideal, n } => {
            let i = spec.lookup_ideal(&ring, ideal)?;
            let quotient = QuotientRing::new(&ring, i.clone())?;
            let n_ideal = spec.lookup_ideal(&ring, n)?;
            let bi = burch_ideal(&i, &n_ideal)?;
            Ok(ok(json!({
                "ideal": ideal,
                "n": n,
                "burch_ideal": bi.to_string(),
                "burch_ideal_mod": display_mod(&bi, &quotient),
            })))
        }
        Command::Witnesses { ideal, n } => {
            let i = spec.lookup_ideal(&ring, ideal)?;
            let n_ideal = spec.lookup_ideal(&ring, n)?;
            let realization = realization_witnesses(&i, &n_ideal)?;
            let realized = realized_witnesses(&i, &n_ideal)?;
            let mut pairs = Vec::new();
            for x_star in &realization.elements {
                for x in &realized.elements {
                    if realizes(&i, x_star, x)? {
                        pairs.push(json!({
                            "witness": x_star.to_string(),
                            "realized": x.to_string(),
                        }));
                    }
                }
            }
            Ok(ok(json!({
                "ideal": ideal,
                "n": n,
                "realization": realization.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "realized": realized.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "pairs": pairs,
            })))
        }
        Command::Resolve {
            ideal,
            module,
            steps,
            ..
        }
        | Command::Minors {
            ideal,
            module,
            steps,
        } => {
            let (emit_minors, emit_matrices) = match command {
                Command::Resolve {
                    emit_minors,
                    emit_matrices,
                    ..
                } => (*emit_minors, *emit_matrices),
                _ => (true, false),
            };
            let i = spec.lookup_ideal(&ring, ideal)?;
            let quotient = QuotientRing::new(&ring, i)?;
            let m = spec.lookup_module(&ring, &quotient, module)?;
            let res = resolve(&quotient, &m, *steps, &ResolveOptions::default())?;
            let mut data = json!({
                "ideal": ideal,
                "module": module,
                "start_index": res.start_index(),
                "betti_ranks": res.betti_ranks(),
                "betti_twists": res.betti_twists(),
                "complete": res.is_complete(),
                "capped": res.is_capped(),
                "minimal": res.is_minimal(),
            });
            if emit_minors {
                let minors: Vec<serde_json::Value> = (res.start_index()..=res.last_index())
                    .map(|j| {
                        let e = entry_ideal(&quotient, res.matrix(j).expect("in range"));
                        json!({ "step": j, "entry_ideal": display_mod(&e, &quotient) })
                    })
                    .collect();
                data["minors"] = json!(minors);
            }
            if emit_matrices {
                data["resolution"] = res.to_json();
            }
            let status = if res.is_capped() { "capped" } else { "ok" };
            Ok(CommandResult {
                command: text,
                status: status.into(),
                report: None,
                data,
            })
        }
        Command::Verify {
            kind,
            ideal,
            module,
            n,
            step,
            col,
            steps,
            window,
        } => {
            let i = spec.lookup_ideal(&ring, ideal)?;
            let quotient = QuotientRing::new(&ring, i.clone())?;
            let need_module = |m: &Option<String>| -> Result<PresentedModule> {
                let name = m
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("--module NAME is required".into()))?;
                spec.lookup_module(&ring, &quotient, name)
            };
            let need_n = |n: &Option<String>| -> Result<Ideal> {
                let name = n
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("--n NAME is required".into()))?;
                spec.lookup_ideal(&ring, name)
            };
            let report = match kind {
                VerifyKind::Big1 => verify_big1(&quotient, &need_module(module)?, *steps)?,
                VerifyKind::Big2 => verify_big2(&quotient, &need_module(module)?, *steps)?,
                VerifyKind::Dual2 => {
                    let res = resolve(
                        &quotient,
                        &need_module(module)?,
                        *steps,
                        &ResolveOptions::default(),
                    )?;
                    let m = step.ok_or_else(|| Error::Invalid("--step is required".into()))?;
                    let c = col.ok_or_else(|| Error::Invalid("--col is required".into()))?;
                    verify_dual2(&res, &need_n(n)?, m, c)?
                }
                VerifyKind::DualPos => {
                    let res = resolve(
                        &quotient,
                        &need_module(module)?,
                        *steps,
                        &ResolveOptions::default(),
                    )?;
                    verify_dualpos(&res)?
                }
                VerifyKind::Twist1 => check_twist1_conditions(&quotient, &need_n(n)?, *steps)?,
                VerifyKind::Duality => duality_check(&i, &need_n(n)?)?,
                VerifyKind::Periodicity => {
                    let res = resolve(
                        &quotient,
                        &need_module(module)?,
                        *steps,
                        &ResolveOptions::default(),
                    )?;
                    periodicity_report(&res, *window)?
                }
            };
            Ok(CommandResult {
                command: text,
                status: "ok".into(),
                report: Some(report),
                data: serde_json::Value::Null,
            })
        }
        Command::Fuzz {
            seed,
            count,
            vars,
            max_deg,
            gens,
            steps,
            binomials,
        } => {
            let config = FuzzConfig {
                seed: *seed,
                cases: *count,
                nvars: *vars,
                max_degree: *max_deg,
                max_gens: *gens,
                binomials: *binomials,
                resolve_steps: *steps,
            };
            let summary = fuzz(&config)?;
            let status = if summary.clean() { "ok" } else { "falsified" };
            Ok(CommandResult {
                command: text,
                status: status.into(),
                report: None,
                data: serde_json::to_value(&summary).expect("serializable"),
            })
        }
    }
}

/// Text rendering of the same data the JSON output carries.
pub fn render_text(output: &SessionOutput) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "session {} (schema {})\n",
        output.session, output.schema_version
    ));
    for r in &output.results {
        out.push_str(&format!("\n$ {}\n", r.command));
        out.push_str(&format!("  status: {}\n", r.status));
        if let Some(report) = &r.report {
            out.push_str(&format!(
                "  report: {:?} -> {:?}\n",
                report.subject, report.conclusion
            ));
            for p in &report.preconditions {
                out.push_str(&format!(
                    "    [{}] {}: {}\n",
                    if p.met { "x" } else { " " },
                    p.name,
                    p.witness
                ));
            }
            out.push_str(&format!(
                "    data: {}\n",
                serde_json::to_string(&report.data).expect("serializable")
            ));
        }
        if !r.data.is_null() {
            out.push_str(&format!(
                "  data: {}\n",
                serde_json::to_string(&r.data).expect("serializable")
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SESSION: &str = "\
# realization example
ring p=32003 vars=[x,y,z]
ideal I = [x^2*y, x*y^2*z, z^3]
ideal N = [x^2, y, z^2]
witnesses I N
verify duality I --n N
";

    #[test]
    fn parses_and_runs_a_session() {
        let spec = parse_session(SESSION).unwrap();
        assert_eq!(spec.prime, 32003);
        assert_eq!(spec.commands.len(), 2);
        let (exit, output) = run(&spec, "test");
        assert_eq!(exit, 0);
        assert_eq!(output.results.len(), 2);
        assert_eq!(output.results[0].status, "ok");
        let report = output.results[1].report.as_ref().unwrap();
        assert_eq!(report.conclusion, Conclusion::Verified);
    }

    #[test]
    fn round_trip_is_stable() {
        let spec = parse_session(SESSION).unwrap();
        let text = spec.to_text();
        let again = parse_session(&text).unwrap();
        assert_eq!(spec, again);
        assert_eq!(text, again.to_text());
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let bad = "ring p=32003 vars=[x,y]\nideal I = [x^2 + y^3]\n";
        match parse_session(bad) {
            Err(Error::Inhomogeneous { found, expected, .. }) => {
                assert_eq!((found.min(expected), found.max(expected)), (2, 3));
            }
            other => panic!("expected inhomogeneity rejection, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_prime_and_unknown_names() {
        assert!(parse_session("ring p=32004 vars=[x]\n").is_err());
        let bad = "ring p=7 vars=[x,y]\nburch-chain J\n";
        assert!(matches!(parse_session(bad), Err(Error::UnknownName(_))));
    }

    #[test]
    fn parses_negative_coefficients_in_definitions() {
        let text = "\
ring p=32003 vars=[x1,x2,x3]
ideal I = [x2*x3 + 28*x3^2, x2^2 - 30*x3^2, x1*x3^2, x1^3*x3]
burch-chain I --max-iter 10
";
        let spec = parse_session(text).unwrap();
        let ring = spec.ring().unwrap();
        let i = spec.lookup_ideal(&ring, "I").unwrap();
        let g2 = &i.generators()[1];
        assert_eq!(g2.terms()[1].coeff, 32003 - 30);
    }

    #[test]
    fn determinism_of_json_output() {
        let text = "\
ring p=32003 vars=[x,y]
ideal I = [x^2, x*y]
burch-chain I --max-iter 10
fuzz --seed 7 --count 5 --vars 2 --max-deg 3
";
        let spec = parse_session(text).unwrap();
        let (e1, o1) = run(&spec, "s");
        let (e2, o2) = run(&spec, "s");
        assert_eq!(e1, e2);
        assert_eq!(
            serde_json::to_string(&o1).unwrap(),
            serde_json::to_string(&o2).unwrap()
        );
    }

    #[test]
    fn chain_command_reports_family_classification() {
        let text = "\
ring p=32003 vars=[x1,x2,y]
ideal I = [x1*y, x2*y, y^3]
burch-chain I --max-iter 20
";
        let spec = parse_session(text).unwrap();
        let (exit, output) = run(&spec, "s");
        assert_eq!(exit, 0);
        let data = &output.results[0].data;
        assert_eq!(data["gb"], json!(3));
        assert_eq!(data["first_zero"], json!(3));
        assert_eq!(data["steps"][0]["burch_ideal_mod"], "(x2, x1, y^2)");
        assert_eq!(data["steps"][1]["burch_index"], json!(3));
    }

    #[test]
    fn minors_command_emits_entry_ideal_table() {
        let text = "\
ring p=32003 vars=[x,y,z]
ideal I = [x^2*y, y^2*z, z^2*x]
ideal N = [x^2, y^2, z^2]
resolve I --module N --steps 4 --emit minors,matrices
";
        let spec = parse_session(text).unwrap();
        let (exit, output) = run(&spec, "s");
        assert_eq!(exit, 0);
        let data = &output.results[0].data;
        let minors = data["minors"].as_array().unwrap();
        assert_eq!(minors.len(), 5);
        for row in &minors[1..] {
            assert_eq!(row["entry_ideal"], "(z, y, x)");
        }
        assert_eq!(data["resolution"]["ring"]["p"], json!(32003));
        // round-trip of the emit flags through canonical text
        let again = parse_session(&spec.to_text()).unwrap();
        assert_eq!(spec, again);
    }

    #[test]
    fn module_definitions_resolve_as_cokernels() {
        let text = "\
ring p=32003 vars=[a,b]
ideal I = [a^2, a*b^2, b^4]
module M = coker [[a, b^2]]
resolve I --module M --steps 4
";
        let spec = parse_session(text).unwrap();
        let (exit, output) = run(&spec, "s");
        assert_eq!(exit, 0, "{:?}", output.results);
        assert_eq!(output.results[0].data["betti_ranks"], json!([1, 2, 4, 8, 16]));
    }
}
