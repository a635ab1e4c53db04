//! Certificate files and their replay.
//!
//! A certificate is a line-oriented text file with a header, then `begin NAME` / `end NAME`
//! sections (UPPER, LOWER, VERDICT). Embedded programs and ILP certificates sit between
//! `X-begin` / `X-end` marker lines. The checker trusts nothing in the file beyond the data
//! path and the choices it records (cover members, independent set, alpha): every number is
//! recomputed from the data files and compared.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::cover::{
    class_program, refined_rows, residual_instance, residual_setup, verify_cover, Cover, CoverError, SigmaCertificate,
};
use crate::data::{DataError, GroupData};
use crate::files::{digest, read_text, FileError};
use crate::ilp::{certify, check_certificate, IlpError};
use crate::mcl::{mcl_sigma, McCertificate, McLError, TabulatedGroup};
use crate::subgroups::{forced_subgroups, SubgroupError};
use crate::witt::build_mclaughlin_graph;

#[derive(Debug, Error)]
pub enum CertError {
    #[error("{0}")]
    File(#[from] FileError),
    #[error("{0}")]
    Data(#[from] DataError),
    #[error("{0}")]
    Cover(#[from] CoverError),
    #[error("{0}")]
    Subgroup(#[from] SubgroupError),
    #[error("{0}")]
    McL(#[from] McLError),
    #[error("{0}")]
    Ilp(#[from] IlpError),
    #[error("malformed certificate: {0}")]
    Syntax(String),
    #[error("check failed at {step}: {reason}")]
    Failed { step: String, reason: String },
}

fn failed(step: &str, reason: impl Into<String>) -> CertError {
    CertError::Failed {
        step: step.to_string(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Exact(u64),
    Interval(u64, u64),
}

impl Verdict {
    pub fn new(lower: u64, upper: u64) -> Verdict {
        if lower == upper {
            Verdict::Exact(lower)
        } else {
            Verdict::Interval(lower, upper)
        }
    }

    /// 0 for a proven value, 2 for an interval.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Exact(_) => 0,
            Verdict::Interval(..) => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Exact(n) => write!(f, "sigma = {n}"),
            Verdict::Interval(l, u) => write!(f, "sigma in [{l}, {u}]"),
        }
    }
}

fn parse_verdict(line: &str) -> Option<Verdict> {
    if let Some(n) = line.strip_prefix("sigma = ") {
        return n.trim().parse().ok().map(Verdict::Exact);
    }
    let inner = line.strip_prefix("sigma in [")?.strip_suffix(']')?;
    let (l, u) = inner.split_once(',')?;
    Some(Verdict::Interval(l.trim().parse().ok()?, u.trim().parse().ok()?))
}

fn block(out: &mut String, name: &str, body: &str) {
    writeln!(out, "{name}-begin").unwrap();
    out.push_str(body);
    if !body.ends_with('\n') && !body.is_empty() {
        out.push('\n');
    }
    writeln!(out, "{name}-end").unwrap();
}

/// Certificate for a group given by a data directory. `data` is written verbatim.
pub fn render_group(data: &GroupData, data_path: &str, cert: &SigmaCertificate) -> Result<String, CertError> {
    let mut out = String::new();
    writeln!(out, "certificate covering-number").unwrap();
    writeln!(out, "kind group").unwrap();
    writeln!(out, "group {}", cert.group).unwrap();
    writeln!(out, "data {data_path}").unwrap();
    for (name, sha) in &data.digests {
        writeln!(out, "input {name} {sha}").unwrap();
    }

    writeln!(out, "begin UPPER").unwrap();
    for (label, i) in &cert.upper.selection {
        writeln!(out, "take {label} {i}").unwrap();
    }
    writeln!(out, "size {}", cert.upper_size()).unwrap();
    writeln!(out, "end UPPER").unwrap();

    writeln!(out, "begin LOWER").unwrap();
    for f in &cert.forced {
        writeln!(
            out,
            "forced {} by {}",
            data.subgroups[f.subgroup].id, data.classes.classes[f.reason].id
        )
        .unwrap();
    }
    let cb = &cert.class_bound;
    block(&mut out, "class-program", &cb.program.render());
    block(&mut out, "class-certificate", &certify(&cb.program, &cb.result)?);
    if let Some(r) = &cert.residual {
        let labels = |v: &[usize], f: &dyn Fn(usize) -> String| v.iter().map(|&i| f(i)).collect::<Vec<_>>().join(",");
        writeln!(
            out,
            "residual pool {} targets {} rows {} columns {} kept {}",
            labels(&r.pool, &|m| data.subgroups[m].id.clone()),
            labels(&r.targets, &|k| data.classes.classes[k].id.clone()),
            r.full_rows,
            r.full_cols,
            r.instance.program.n_cols()
        )
        .unwrap();
        block(&mut out, "residual-program", &r.instance.program.render());
        block(
            &mut out,
            "residual-certificate",
            &certify(&r.instance.program, &r.result)?,
        );
    }
    writeln!(out, "lower {}", cert.lower).unwrap();
    writeln!(out, "end LOWER").unwrap();

    writeln!(out, "begin VERDICT").unwrap();
    writeln!(out, "{}", Verdict::new(cert.lower, cert.upper_size())).unwrap();
    writeln!(out, "end VERDICT").unwrap();
    Ok(out)
}

/// Certificate for the McLaughlin group from tabulated data.
pub fn render_mcl(
    t: &TabulatedGroup,
    tables_text: &str,
    data_path: &str,
    alpha: u64,
    c: &McCertificate,
) -> Result<String, CertError> {
    let mut out = String::new();
    writeln!(out, "certificate covering-number").unwrap();
    writeln!(out, "kind tabulated").unwrap();
    writeln!(out, "group {}", t.name).unwrap();
    writeln!(out, "data {data_path}").unwrap();
    writeln!(out, "input tables {}", digest(tables_text)).unwrap();
    writeln!(out, "alpha {alpha}").unwrap();
    writeln!(out, "begin DERIVATION").unwrap();
    out.push_str(&c.render(t)?);
    writeln!(out, "end DERIVATION").unwrap();
    writeln!(out, "begin VERDICT").unwrap();
    writeln!(out, "{}", Verdict::new(c.lower.total, c.upper.total)).unwrap();
    writeln!(out, "end VERDICT").unwrap();
    Ok(out)
}

/// Parsed certificate: header lines and raw section bodies.
struct Parsed {
    header: Vec<(String, String)>,
    sections: BTreeMap<String, Vec<String>>,
}

impl Parsed {
    fn parse(text: &str) -> Result<Parsed, CertError> {
        let mut lines = text.lines();
        if lines.next() != Some("certificate covering-number") {
            return Err(CertError::Syntax("missing certificate header".into()));
        }
        let mut header = Vec::new();
        let mut sections = BTreeMap::new();
        let mut current: Option<(String, Vec<String>)> = None;
        for line in lines {
            match &mut current {
                None => {
                    if line.trim().is_empty() {
                        continue;
                    }
                    if let Some(name) = line.strip_prefix("begin ") {
                        current = Some((name.to_string(), Vec::new()));
                        continue;
                    }
                    let (k, v) = line.split_once(' ').unwrap_or((line, ""));
                    header.push((k.to_string(), v.to_string()));
                }
                Some((name, body)) => {
                    if line == format!("end {name}") {
                        let (name, body) = current.take().unwrap();
                        if sections.insert(name.clone(), body).is_some() {
                            return Err(CertError::Syntax(format!("section {name} repeated")));
                        }
                    } else {
                        body.push(line.to_string());
                    }
                }
            }
        }
        if let Some((name, _)) = current {
            return Err(CertError::Syntax(format!("section {name} not closed")));
        }
        Ok(Parsed { header, sections })
    }

    fn one(&self, key: &str) -> Result<&str, CertError> {
        let mut it = self.header.iter().filter(|(k, _)| k == key);
        match (it.next(), it.next()) {
            (Some((_, v)), None) => Ok(v),
            _ => Err(CertError::Syntax(format!("header needs exactly one `{key}` line"))),
        }
    }

    fn all(&self, key: &str) -> Vec<&str> {
        self.header
            .iter()
            .filter(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .collect()
    }

    fn section(&self, name: &str) -> Result<&[String], CertError> {
        self.sections
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| CertError::Syntax(format!("missing section {name}")))
    }

    fn verdict(&self) -> Result<Verdict, CertError> {
        let body = self.section("VERDICT")?;
        match body {
            [line] => parse_verdict(line).ok_or_else(|| CertError::Syntax(format!("bad verdict `{line}`"))),
            _ => Err(CertError::Syntax("VERDICT must hold one line".into())),
        }
    }
}

/// Text between `name-begin` and `name-end` in a section body.
fn extract(body: &[String], name: &str) -> Result<Option<String>, CertError> {
    let begin = format!("{name}-begin");
    let end = format!("{name}-end");
    let Some(start) = body.iter().position(|l| *l == begin) else {
        return Ok(None);
    };
    let stop = body[start..]
        .iter()
        .position(|l| *l == end)
        .ok_or_else(|| CertError::Syntax(format!("{name} block not closed")))?;
    let mut s = String::new();
    for l in &body[start + 1..start + stop] {
        s.push_str(l);
        s.push('\n');
    }
    Ok(Some(s))
}

/// Text between `kind-begin label` and `kind-end label`.
fn named_block(body: &[String], kind: &str, label: &str) -> Option<String> {
    let begin = format!("{kind}-begin {label}");
    let end = format!("{kind}-end {label}");
    let start = body.iter().position(|l| *l == begin)?;
    let stop = body[start..].iter().position(|l| *l == end)?;
    Some(body[start + 1..start + stop].iter().map(|l| format!("{l}\n")).collect())
}

/// Lines of a section body outside every `X-begin` / `X-end` block.
fn plain_lines(body: &[String]) -> Vec<&str> {
    let mut out = Vec::new();
    let mut inside: Option<String> = None;
    for l in body {
        match &inside {
            Some(name) => {
                if *l == format!("{name}-end") {
                    inside = None;
                }
            }
            None => {
                if let Some(name) = l.strip_suffix("-begin") {
                    inside = Some(name.to_string());
                } else {
                    out.push(l.as_str());
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub group: String,
    pub verdict: Verdict,
    /// One line per replayed step.
    pub steps: Vec<String>,
}

/// Resolves a recorded data path: as given if it exists, else relative to the certificate.
fn resolve(recorded: &str, cert_dir: Option<&Path>) -> PathBuf {
    let p = PathBuf::from(recorded);
    if p.is_absolute() || p.exists() {
        return p;
    }
    match cert_dir {
        Some(d) => d.join(&p),
        None => p,
    }
}

pub fn check_file(path: &Path) -> Result<CheckReport, CertError> {
    let text = read_text(path)?;
    check_text(&text, path.parent())
}

pub fn check_text(text: &str, cert_dir: Option<&Path>) -> Result<CheckReport, CertError> {
    let parsed = Parsed::parse(text)?;
    match parsed.one("kind")? {
        "group" => check_group(&parsed, cert_dir),
        "tabulated" => check_tabulated(&parsed, cert_dir),
        other => Err(CertError::Syntax(format!("unknown kind `{other}`"))),
    }
}

fn check_group(c: &Parsed, cert_dir: Option<&Path>) -> Result<CheckReport, CertError> {
    let mut steps = Vec::new();
    let dir = resolve(c.one("data")?, cert_dir);
    let data = GroupData::load(&dir)?;
    let recorded: Vec<&str> = c.all("input");
    let actual: Vec<String> = data.digests.iter().map(|(n, d)| format!("{n} {d}")).collect();
    if recorded != actual {
        return Err(failed(
            "input digests",
            "data files differ from those the certificate was made from",
        ));
    }
    if c.one("group")? != data.group.name() {
        return Err(failed("group name", format!("data holds {}", data.group.name())));
    }
    steps.push(format!("inputs: {} files match", actual.len()));

    // Upper bound: an explicit list of conjugates, verified on every principal element.
    let upper_body = c.section("UPPER")?;
    let mut selection = Vec::new();
    let mut stated_size = None;
    for line in upper_body {
        let w: Vec<&str> = line.split_whitespace().collect();
        match w.as_slice() {
            ["take", label, i] => {
                let i = i
                    .parse()
                    .map_err(|_| CertError::Syntax(format!("bad conjugate in `{line}`")))?;
                selection.push((label.to_string(), i));
            }
            ["size", n] => stated_size = n.parse::<u64>().ok(),
            _ => return Err(CertError::Syntax(format!("unexpected UPPER line `{line}`"))),
        }
    }
    let cover = Cover { selection };
    if let Some(u) = verify_cover(&data.group, &data.classes, &data.subgroups, &cover)? {
        return Err(failed(
            "upper cover",
            format!("element {} of class {} is not covered", u.element, u.class),
        ));
    }
    let upper = cover.size() as u64;
    if stated_size != Some(upper) {
        return Err(failed("upper size", format!("cover has {upper} members")));
    }
    steps.push(format!("upper: {upper} subgroups cover every principal element"));

    // Lower bound: rebuild each program from the data and replay the embedded certificate.
    let lower_body = c.section("LOWER")?;
    let mats = data.incidence()?;
    let forced = forced_subgroups(&mats)?;
    let forced_lines: Vec<String> = forced
        .iter()
        .map(|f| {
            format!(
                "forced {} by {}",
                data.subgroups[f.subgroup].id, data.classes.classes[f.reason].id
            )
        })
        .collect();
    let plain = plain_lines(lower_body);
    let stated_forced: Vec<&str> = plain.iter().copied().filter(|l| l.starts_with("forced ")).collect();
    if stated_forced != forced_lines.iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(failed("forced classes", forced_lines.join("; ")));
    }
    let refined = refined_rows(&mats, &data.classes, &data.subgroups)?;
    let program = class_program(&mats, &refined, &forced);
    let embedded = extract(lower_body, "class-program")?.ok_or_else(|| CertError::Syntax("no class program".into()))?;
    if embedded != program.render() {
        return Err(failed(
            "class program",
            "embedded program differs from the one rebuilt from data",
        ));
    }
    let ccert =
        extract(lower_body, "class-certificate")?.ok_or_else(|| CertError::Syntax("no class certificate".into()))?;
    let (class_lower, _) =
        check_certificate(&program, &ccert).map_err(|e| failed("class certificate", e.to_string()))?;
    steps.push(format!("class program: lower bound {class_lower}"));
    let mut lower = class_lower;

    if let Some(rprog) = extract(lower_body, "residual-program")? {
        let (targets, pool) = residual_setup(&mats, &forced);
        let full = residual_instance(&data.group, &data.classes, &data.subgroups, &pool, &targets)?;
        let (reduced, _) = full.reduce_dominated();
        if rprog != reduced.program.render() {
            return Err(failed(
                "residual program",
                "embedded program differs from the one rebuilt from data",
            ));
        }
        let rcert = extract(lower_body, "residual-certificate")?
            .ok_or_else(|| CertError::Syntax("no residual certificate".into()))?;
        let (rl, _) =
            check_certificate(&reduced.program, &rcert).map_err(|e| failed("residual certificate", e.to_string()))?;
        let forced_size: u64 = forced.iter().map(|f| mats.orbit_sizes[f.subgroup]).sum();
        steps.push(format!(
            "residual program: {} rows, {} columns, lower bound {rl} plus {forced_size} forced",
            reduced.program.n_rows(),
            reduced.program.n_cols()
        ));
        lower = lower.max(forced_size + rl);
    }
    let stated_lower = plain
        .iter()
        .find_map(|l| l.strip_prefix("lower "))
        .and_then(|n| n.parse::<u64>().ok());
    if stated_lower != Some(lower) {
        return Err(failed("lower bound", format!("replay gives {lower}")));
    }
    if lower > upper {
        return Err(failed("bounds", format!("lower {lower} exceeds upper {upper}")));
    }
    let verdict = Verdict::new(lower, upper);
    if c.verdict()? != verdict {
        return Err(failed("verdict", format!("replay gives `{verdict}`")));
    }
    steps.push(format!("verdict: {verdict}"));
    Ok(CheckReport {
        group: data.group.name().to_string(),
        verdict,
        steps,
    })
}

fn check_tabulated(c: &Parsed, cert_dir: Option<&Path>) -> Result<CheckReport, CertError> {
    let mut steps = Vec::new();
    let path = resolve(c.one("data")?, cert_dir);
    let text = read_text(&path)?;
    if c.one("input")? != format!("tables {}", digest(&text)) {
        return Err(failed(
            "input digest",
            "tables differ from those the certificate was made from",
        ));
    }
    let t = TabulatedGroup::parse(&text)?;
    if c.one("group")? != t.name {
        return Err(failed("group name", format!("tables hold {}", t.name)));
    }
    steps.push("inputs: tables match".to_string());
    let alpha: u64 = c
        .one("alpha")?
        .parse()
        .map_err(|_| CertError::Syntax("bad alpha".into()))?;
    if alpha != t.alpha()? {
        steps.push(format!("note: alpha {alpha} differs from the tabulated {}", t.alpha()?));
    }
    let body = c.section("DERIVATION")?;
    let independent: Vec<usize> = plain_lines(body)
        .iter()
        .find_map(|l| l.strip_prefix("independent "))
        .ok_or_else(|| CertError::Syntax("no independent set".into()))?
        .split_whitespace()
        .map(|v| v.parse().map_err(|_| CertError::Syntax(format!("bad vertex `{v}`"))))
        .collect::<Result<_, _>>()?;
    let graph = build_mclaughlin_graph().map_err(|e| failed("graph", e.to_string()))?;
    steps.push(format!(
        "graph: {} vertices, {} edges, parameters checked",
        graph.n,
        graph.edge_count()
    ));
    let mc = mcl_sigma(&t, &graph, &independent, alpha)?;
    let mut replay = String::new();
    for l in body {
        replay.push_str(l);
        replay.push('\n');
    }
    if replay != mc.render(&t)? {
        return Err(failed("derivation", "embedded derivation differs from the replay"));
    }
    for r in mc.lower.rows.iter().chain([&mc.lower.weak]) {
        let cert = named_block(body, "ilp-certificate", &r.row)
            .ok_or_else(|| CertError::Syntax(format!("no certificate for row {}", r.row)))?;
        let (l, _) =
            check_certificate(&r.program, &cert).map_err(|e| failed(&format!("row {}", r.row), e.to_string()))?;
        steps.push(format!("row {}: certificate replayed, bound {l}", r.row));
    }
    steps.push(format!(
        "graph row {}: bound {}",
        mc.lower.graph.row, mc.lower.graph.bound
    ));
    steps.push(format!(
        "upper: {} ({} vertex stabilizers)",
        mc.upper.total, mc.upper.stabilizers
    ));
    let verdict = Verdict::new(mc.lower.total, mc.upper.total);
    if c.verdict()? != verdict {
        return Err(failed("verdict", format!("replay gives `{verdict}`")));
    }
    steps.push(format!("verdict: {verdict}"));
    Ok(CheckReport {
        group: t.name.clone(),
        verdict,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_round_trip() {
        for v in [Verdict::Exact(64), Verdict::Interval(24552, 24553)] {
            assert_eq!(parse_verdict(&v.to_string()), Some(v));
        }
        assert_eq!(Verdict::new(3, 3).exit_code(), 0);
        assert_eq!(Verdict::new(2, 3).exit_code(), 2);
    }

    #[test]
    fn sections_and_blocks() {
        let text = "certificate covering-number\nkind group\nbegin A\nx\np-begin\nend A?\np-end\ny\nend A\n";
        let p = Parsed::parse(text).unwrap();
        let body = p.section("A").unwrap();
        assert_eq!(plain_lines(body), vec!["x", "y"]);
        assert_eq!(extract(body, "p").unwrap().unwrap(), "end A?\n");
        assert!(Parsed::parse("certificate covering-number\nbegin B\n").is_err());
    }
}
