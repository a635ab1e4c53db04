//! The McLaughlin group from tabulated class data: lower bound from three disjoint row
//! arguments (one of them through the McLaughlin graph), upper bound from an explicit cover
//! description, all replayed in exact integer arithmetic.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use thiserror::Error;

use crate::files::{content_lines, read_text, FileError};
use crate::ilp::{certify, solve_integer, CoveringProgram, IlpError, SolveOptions, SolveResult};
use crate::witt::SrGraph;

#[derive(Debug, Error)]
pub enum McLError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("class {label}: size {size} times centralizer {centralizer} is not the group order")]
    ClassEquation { label: String, size: u64, centralizer: u64 },
    #[error("class sizes sum to {0}, not the group order")]
    ClassSum(u64),
    #[error("maximal class {0}: order times index is not the group order")]
    MaximalIndex(String),
    #[error("b for ({row}, {col}) = {a}*{size}/{index} is not an integer")]
    NonIntegral {
        row: String,
        col: String,
        a: u64,
        size: u64,
        index: u64,
    },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("principal classes and incidence rows disagree on `{0}`")]
    PrincipalMismatch(String),
    #[error("missing assumption `fact {0}`")]
    MissingFact(String),
    #[error("graph check: {0}")]
    Graph(String),
    #[error("rows {0} and {1} share a column, so their bounds cannot be added")]
    Overlap(String, String),
    #[error("rows {} are not covered by the chosen classes or the vertex-stabilizer argument", .0.join(", "))]
    Uncovered(Vec<String>),
    #[error(transparent)]
    Ilp(#[from] IlpError),
}

fn syntax(line: usize, msg: impl Into<String>) -> McLError {
    McLError::Syntax { line, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabClass {
    pub label: String,
    pub centralizer: u64,
    pub size: u64,
    pub principal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabMaximal {
    pub label: String,
    pub order: u64,
    pub index: u64,
    pub structure: String,
}

/// One row of the incidence matrix A, possibly covering several fused classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabRow {
    pub label: String,
    pub classes: Vec<String>,
    pub a: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub key: String,
    pub args: Vec<String>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedGroup {
    pub name: String,
    pub order: u64,
    pub classes: Vec<TabClass>,
    pub maximals: Vec<TabMaximal>,
    pub rows: Vec<TabRow>,
    pub facts: Vec<Fact>,
    /// Logged corrections of transcribed values.
    pub corrections: Vec<String>,
}

fn split_quoted(l: &str, line: usize) -> Result<(Vec<&str>, Option<String>), McLError> {
    match l.find('"') {
        None => Ok((l.split_whitespace().collect(), None)),
        Some(p) => {
            let end = l[p + 1..].find('"').ok_or_else(|| syntax(line, "unterminated quote"))?;
            Ok((
                l[..p].split_whitespace().collect(),
                Some(l[p + 1..p + 1 + end].to_string()),
            ))
        }
    }
}

fn num(t: &str, line: usize) -> Result<u64, McLError> {
    t.parse().map_err(|_| syntax(line, format!("bad number `{t}`")))
}

impl TabulatedGroup {
    pub fn load(path: &Path) -> Result<TabulatedGroup, McLError> {
        TabulatedGroup::parse(&read_text(path)?)
    }

    /// Parses and validates; a class size inconsistent with its centralizer is corrected
    /// from the centralizer and recorded in `corrections`.
    pub fn parse(text: &str) -> Result<TabulatedGroup, McLError> {
        let mut t = TabulatedGroup {
            name: String::new(),
            order: 0,
            classes: Vec::new(),
            maximals: Vec::new(),
            rows: Vec::new(),
            facts: Vec::new(),
            corrections: Vec::new(),
        };
        for (line, l) in content_lines(text) {
            let (toks, quoted) = split_quoted(l, line)?;
            match toks.as_slice() {
                ["group", name, "order", o] => {
                    t.name = name.to_string();
                    t.order = num(o, line)?;
                }
                ["class", label, "centralizer", c, "size", s, "principal", p] => t.classes.push(TabClass {
                    label: label.to_string(),
                    centralizer: num(c, line)?,
                    size: num(s, line)?,
                    principal: match *p {
                        "yes" => true,
                        "no" => false,
                        _ => return Err(syntax(line, "principal must be yes or no")),
                    },
                }),
                ["maximal", label, "order", o, "index", i, "structure"] => t.maximals.push(TabMaximal {
                    label: label.to_string(),
                    order: num(o, line)?,
                    index: num(i, line)?,
                    structure: quoted.clone().ok_or_else(|| syntax(line, "structure must be quoted"))?,
                }),
                ["amatrix", label, "classes", cls, values @ ..] => t.rows.push(TabRow {
                    label: label.to_string(),
                    classes: cls.split(',').map(str::to_string).collect(),
                    a: values.iter().map(|v| num(v, line)).collect::<Result<_, _>>()?,
                }),
                ["fact", key, args @ ..] => {
                    let (args, source) = match args.split_last() {
                        Some((&"source", rest)) => (rest, quoted.clone().unwrap_or_default()),
                        _ => return Err(syntax(line, "fact needs a quoted `source`")),
                    };
                    t.facts.push(Fact {
                        key: key.to_string(),
                        args: args.iter().map(|s| s.to_string()).collect(),
                        source,
                    });
                }
                _ => return Err(syntax(line, format!("unrecognised record `{l}`"))),
            }
        }
        if t.order == 0 {
            return Err(syntax(0, "missing `group` header"));
        }
        t.validate()?;
        Ok(t)
    }

    fn validate(&mut self) -> Result<(), McLError> {
        for c in &mut self.classes {
            if c.centralizer == 0 || !self.order.is_multiple_of(c.centralizer) {
                return Err(McLError::ClassEquation {
                    label: c.label.clone(),
                    size: c.size,
                    centralizer: c.centralizer,
                });
            }
            let want = self.order / c.centralizer;
            if c.size != want {
                self.corrections.push(format!(
                    "class {}: size {} corrected to {} = {} / {}",
                    c.label, c.size, want, self.order, c.centralizer
                ));
                c.size = want;
            }
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return Err(McLError::ClassSum(total));
        }
        for m in &self.maximals {
            if m.order * m.index != self.order {
                return Err(McLError::MaximalIndex(m.label.clone()));
            }
        }
        let mut in_rows: Vec<&str> = Vec::new();
        for r in &self.rows {
            if r.a.len() != self.maximals.len() {
                return Err(syntax(0, format!("row {} has {} entries", r.label, r.a.len())));
            }
            for c in &r.classes {
                let k = self.class(c)?;
                if !k.principal {
                    return Err(McLError::PrincipalMismatch(c.clone()));
                }
                in_rows.push(c);
            }
        }
        if let Some(c) = self
            .classes
            .iter()
            .find(|c| c.principal && !in_rows.contains(&c.label.as_str()))
        {
            return Err(McLError::PrincipalMismatch(c.label.clone()));
        }
        for r in 0..self.rows.len() {
            for m in 0..self.maximals.len() {
                self.b(r, m)?;
            }
        }
        Ok(())
    }

    pub fn class(&self, label: &str) -> Result<&TabClass, McLError> {
        self.classes
            .iter()
            .find(|c| c.label == label)
            .ok_or_else(|| McLError::UnknownLabel(label.into()))
    }

    pub fn maximal(&self, label: &str) -> Result<usize, McLError> {
        self.maximals
            .iter()
            .position(|m| m.label == label)
            .ok_or_else(|| McLError::UnknownLabel(label.into()))
    }

    pub fn row(&self, label: &str) -> Result<usize, McLError> {
        self.rows
            .iter()
            .position(|r| r.label == label)
            .ok_or_else(|| McLError::UnknownLabel(label.into()))
    }

    /// Total size of the classes of row `r`.
    pub fn row_size(&self, r: usize) -> u64 {
        self.rows[r]
            .classes
            .iter()
            .map(|c| self.class(c).map(|k| k.size).unwrap_or(0))
            .sum()
    }

    /// Element order of the classes of row `r`, from the leading digits of the label.
    pub fn row_element_order(&self, r: usize) -> u64 {
        let l = &self.rows[r].label;
        l[..l.find(|c: char| !c.is_ascii_digit()).unwrap_or(l.len())]
            .parse()
            .unwrap_or(0)
    }

    /// `b = a |K| / |M|`, required integral.
    pub fn b(&self, r: usize, m: usize) -> Result<u64, McLError> {
        let a = self.rows[r].a[m];
        let size = self.row_size(r);
        let index = self.maximals[m].index;
        let num = a as u128 * size as u128;
        if !num.is_multiple_of(index as u128) {
            return Err(McLError::NonIntegral {
                row: self.rows[r].label.clone(),
                col: self.maximals[m].label.clone(),
                a,
                size,
                index,
            });
        }
        Ok((num / index as u128) as u64)
    }

    pub fn fact(&self, key: &str) -> Result<&Fact, McLError> {
        self.facts
            .iter()
            .find(|f| f.key == key)
            .ok_or_else(|| McLError::MissingFact(key.into()))
    }

    fn fact_maximal(&self, key: &str) -> Result<usize, McLError> {
        let f = self.fact(key)?;
        let label = f.args.first().ok_or_else(|| McLError::MissingFact(key.into()))?;
        self.maximal(label)
    }

    pub fn alpha(&self) -> Result<u64, McLError> {
        let f = self.fact("independence-number")?;
        f.args
            .first()
            .and_then(|a| a.parse().ok())
            .ok_or_else(|| McLError::MissingFact("independence-number".into()))
    }

    pub fn support(&self, r: usize) -> Vec<usize> {
        (0..self.maximals.len()).filter(|&m| self.rows[r].a[m] > 0).collect()
    }
}

/// The covering program of a single row over its support columns.
#[derive(Debug, Clone)]
pub struct RowBound {
    pub row: String,
    pub columns: Vec<usize>,
    pub program: CoveringProgram,
    pub result: SolveResult,
}

impl RowBound {
    pub fn bound(&self) -> u64 {
        self.result.lower_bound
    }
}

pub fn row_program(t: &TabulatedGroup, r: usize) -> Result<CoveringProgram, McLError> {
    let mut p = CoveringProgram::new();
    let cols = t.support(r);
    for &m in &cols {
        p.add_col(t.maximals[m].label.clone(), 0, t.maximals[m].index);
    }
    let entries = cols
        .iter()
        .enumerate()
        .map(|(i, &m)| t.b(r, m).map(|b| (i, b)))
        .collect::<Result<Vec<_>, _>>()?;
    p.add_row(t.rows[r].label.clone(), t.row_size(r), entries);
    Ok(p)
}

pub fn row_bound(t: &TabulatedGroup, label: &str) -> Result<RowBound, McLError> {
    let r = t.row(label)?;
    let program = row_program(t, r)?;
    let result = solve_integer(
        &program,
        &SolveOptions {
            budget: Duration::from_secs(60),
            ..SolveOptions::default()
        },
    )?;
    Ok(RowBound {
        row: label.to_string(),
        columns: t.support(r),
        program,
        result,
    })
}

/// The order-9 style argument through the graph on which the vertex stabilizers act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBound {
    pub row: String,
    pub vertex_class: usize,
    pub edge_class: usize,
    pub vertices: u64,
    pub alpha: u64,
    /// Elements of the row inside one edge stabilizer.
    pub per_edge: u64,
    /// Largest number of row elements inside one subgroup of another support class.
    pub per_other: u64,
    /// Columns summed by the bound.
    pub columns: Vec<usize>,
    pub bound: u64,
}

/// Checks the graph against the tabulated stabilizer indices.
pub fn check_graph_against_tables(t: &TabulatedGroup, g: &SrGraph) -> Result<(), McLError> {
    let f = t.fact("graph")?;
    let params: Vec<usize> = f.args.iter().skip(1).filter_map(|a| a.parse().ok()).collect();
    if f.args.first().map(String::as_str) != Some("srg") || params.len() != 4 {
        return Err(McLError::MissingFact("graph srg n k lambda mu".into()));
    }
    g.check_srg((params[0], params[1], params[2], params[3]))
        .map_err(|e| McLError::Graph(e.to_string()))?;
    let n = g.n as u64;
    let edges = g.edge_count() as u64;
    let checks = [
        ("vertex-stabilizer", n),
        ("edge-stabilizer", edges),
        ("nonedge-stabilizer", n * (n - 1) / 2 - edges),
    ];
    for (key, count) in checks {
        let m = t.fact_maximal(key)?;
        if t.maximals[m].index != count {
            return Err(McLError::Graph(format!(
                "{key} {} has index {}, the graph has {count}",
                t.maximals[m].label, t.maximals[m].index
            )));
        }
    }
    Ok(())
}

/// Lower bound for the columns meeting `row` from the graph. Each element of the row fixes
/// exactly `a(vertex)` = 2 vertices, `a(edge)` = 1 edge and `a(nonedge)` = 0 nonedges; being
/// of odd order it fixes both ends of its edge, so its fixed vertices are adjacent. If `W`
/// is the set of vertices whose stabilizers are not chosen, the uncovered elements are those
/// fixing an edge inside `W`, `per_edge` per edge, and `W` spans at least `|W| - alpha`
/// edges.
pub fn graph_bound(t: &TabulatedGroup, row: &str, alpha: u64) -> Result<GraphBound, McLError> {
    let r = t.row(row)?;
    let v = t.fact_maximal("vertex-stabilizer")?;
    let e = t.fact_maximal("edge-stabilizer")?;
    let ne = t.fact_maximal("nonedge-stabilizer")?;
    let a = &t.rows[r].a;
    let order = t.row_element_order(r);
    if a[v] != 2 || a[e] != 1 || a[ne] != 0 || order.is_multiple_of(2) {
        return Err(McLError::Graph(format!(
            "row {row} does not fix exactly one edge (a = {}, {}, {}; element order {order})",
            a[v], a[e], a[ne]
        )));
    }
    let per_edge = t.b(r, e)?;
    let columns = t.support(r);
    let per_other = columns
        .iter()
        .filter(|&&m| m != v)
        .map(|&m| t.b(r, m))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let vertices = t.maximals[v].index;
    // Minimise x_v + ceil(per_edge * (|W| - alpha) / per_other) over x_v, |W| = vertices - x_v.
    let bound = (0..=vertices)
        .map(|xv| {
            let w = vertices - xv;
            let uncovered = per_edge as u128 * w.saturating_sub(alpha) as u128;
            let others = if uncovered == 0 {
                0
            } else if per_other == 0 {
                u128::MAX / 2
            } else {
                uncovered.div_ceil(per_other as u128)
            };
            xv as u128 + others
        })
        .min()
        .unwrap_or(0) as u64;
    Ok(GraphBound {
        row: row.to_string(),
        vertex_class: v,
        edge_class: e,
        vertices,
        alpha,
        per_edge,
        per_other,
        columns,
        bound,
    })
}

#[derive(Debug, Clone)]
pub struct McLowerBound {
    pub rows: Vec<RowBound>,
    pub graph: GraphBound,
    /// The plain row bound the graph argument replaces.
    pub weak: RowBound,
    pub total: u64,
}

/// Row programs for `rows`, plus the graph argument for `graph_row`; the column sets must
/// be pairwise disjoint so the bounds add.
pub fn mcl_lower_bound(
    t: &TabulatedGroup,
    rows: &[&str],
    graph_row: &str,
    alpha: u64,
) -> Result<McLowerBound, McLError> {
    let bounds = rows.iter().map(|r| row_bound(t, r)).collect::<Result<Vec<_>, _>>()?;
    let graph = graph_bound(t, graph_row, alpha)?;
    let weak = row_bound(t, graph_row)?;
    let mut sets: Vec<(&str, &[usize])> = bounds.iter().map(|b| (b.row.as_str(), b.columns.as_slice())).collect();
    sets.push((graph_row, &graph.columns));
    for (i, (ri, ci)) in sets.iter().enumerate() {
        for (rj, cj) in &sets[i + 1..] {
            if ci.iter().any(|c| cj.contains(c)) {
                return Err(McLError::Overlap(ri.to_string(), rj.to_string()));
            }
        }
    }
    let total = bounds.iter().map(RowBound::bound).sum::<u64>() + graph.bound;
    Ok(McLowerBound {
        rows: bounds,
        graph,
        weak,
        total,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McUpperBound {
    pub full_classes: Vec<usize>,
    pub independent: Vec<usize>,
    /// Vertex stabilizers of vertices outside the independent set.
    pub stabilizers: u64,
    /// Rows left to the vertex stabilizers.
    pub graph_rows: Vec<String>,
    pub total: u64,
}

/// The cover: all conjugates of `full` plus the stabilizers of the vertices outside an
/// independent set. Every row must meet a full class, or be a one-fixed-edge row whose
/// elements then lie in the stabilizer of an endpoint outside the independent set.
pub fn mcl_upper_bound(
    t: &TabulatedGroup,
    g: &SrGraph,
    independent: &[usize],
    full: &[&str],
) -> Result<McUpperBound, McLError> {
    g.check_independent(independent)
        .map_err(|e| McLError::Graph(e.to_string()))?;
    let full_classes = full.iter().map(|l| t.maximal(l)).collect::<Result<Vec<_>, _>>()?;
    let mut graph_rows = Vec::new();
    let mut uncovered = Vec::new();
    for r in 0..t.rows.len() {
        if full_classes.iter().any(|&m| t.rows[r].a[m] > 0) {
            continue;
        }
        let label = t.rows[r].label.clone();
        match graph_bound(t, &label, independent.len() as u64) {
            Ok(_) => graph_rows.push(label),
            Err(_) => uncovered.push(label),
        }
    }
    if !uncovered.is_empty() {
        return Err(McLError::Uncovered(uncovered));
    }
    let vertices = g.n as u64;
    let stabilizers = if graph_rows.is_empty() {
        0
    } else {
        vertices - independent.len() as u64
    };
    let total = stabilizers + full_classes.iter().map(|&m| t.maximals[m].index).sum::<u64>();
    Ok(McUpperBound {
        full_classes,
        independent: independent.to_vec(),
        stabilizers,
        graph_rows,
        total,
    })
}

#[derive(Debug, Clone)]
pub struct McCertificate {
    pub lower: McLowerBound,
    pub upper: McUpperBound,
    pub sigma: Option<u64>,
}

pub const DEFAULT_ROWS: [&str; 2] = ["11AB", "14AB"];
pub const DEFAULT_GRAPH_ROW: &str = "9AB";
pub const DEFAULT_FULL: [&str; 2] = ["M2", "M8"];

pub fn mcl_sigma(
    t: &TabulatedGroup,
    g: &SrGraph,
    independent: &[usize],
    alpha: u64,
) -> Result<McCertificate, McLError> {
    check_graph_against_tables(t, g)?;
    let lower = mcl_lower_bound(t, &DEFAULT_ROWS, DEFAULT_GRAPH_ROW, alpha)?;
    let upper = mcl_upper_bound(t, g, independent, &DEFAULT_FULL)?;
    let sigma = (lower.total == upper.total).then_some(lower.total);
    Ok(McCertificate { lower, upper, sigma })
}

impl McCertificate {
    /// Human-readable derivation, followed by the embedded row programs and certificates.
    pub fn render(&self, t: &TabulatedGroup) -> Result<String, McLError> {
        let mut out = String::new();
        let label = |m: usize| t.maximals[m].label.as_str();
        let cols = |c: &[usize]| c.iter().map(|&m| label(m)).collect::<Vec<_>>().join("+");
        for c in &t.corrections {
            writeln!(out, "correction {c}").unwrap();
        }
        for b in &self.lower.rows {
            writeln!(out, "row {} columns {} bound {}", b.row, cols(&b.columns), b.bound()).unwrap();
        }
        let gb = &self.lower.graph;
        writeln!(
            out,
            "graph-row {} columns {} vertices {} alpha {} per-edge {} per-other {} bound {}",
            gb.row,
            cols(&gb.columns),
            gb.vertices,
            gb.alpha,
            gb.per_edge,
            gb.per_other,
            gb.bound
        )
        .unwrap();
        writeln!(
            out,
            "weak-row {} bound {} dominated-by {}",
            self.lower.weak.row,
            self.lower.weak.bound(),
            gb.bound
        )
        .unwrap();
        writeln!(out, "lower {}", self.lower.total).unwrap();
        let iset: Vec<String> = self.upper.independent.iter().map(|v| v.to_string()).collect();
        writeln!(out, "independent {}", iset.join(" ")).unwrap();
        writeln!(
            out,
            "upper full {} stabilizers {} graph-rows {} total {}",
            cols(&self.upper.full_classes),
            self.upper.stabilizers,
            self.upper.graph_rows.join(","),
            self.upper.total
        )
        .unwrap();
        for b in self.lower.rows.iter().chain([&self.lower.weak]) {
            writeln!(out, "program-begin {}", b.row).unwrap();
            out.push_str(&b.program.render());
            writeln!(out, "program-end {}", b.row).unwrap();
            writeln!(out, "ilp-certificate-begin {}", b.row).unwrap();
            out.push_str(&certify(&b.program, &b.result)?);
            writeln!(out, "ilp-certificate-end {}", b.row).unwrap();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "group T order 6\n\
        class 1A centralizer 6 size 1 principal no\n\
        class 2A centralizer 2 size 3 principal yes\n\
        class 3A centralizer 3 size 3 principal yes\n\
        maximal M1 order 3 index 2 structure \"C3\"\n\
        maximal M2 order 2 index 3 structure \"C2\"\n\
        amatrix 2A classes 2A 0 1\n\
        amatrix 3A classes 3A 1 0\n";

    #[test]
    fn parse_and_correct() {
        let t = TabulatedGroup::parse(SMALL).unwrap();
        assert_eq!(t.corrections.len(), 1);
        assert_eq!(t.class("3A").unwrap().size, 2);
        assert_eq!(t.b(t.row("2A").unwrap(), 1).unwrap(), 1);
        assert!(matches!(t.fact("graph"), Err(McLError::MissingFact(_))));
    }

    #[test]
    fn non_integral_b_rejected() {
        let bad = SMALL.replace("amatrix 2A classes 2A 0 1", "amatrix 2A classes 2A 1 1");
        assert!(matches!(TabulatedGroup::parse(&bad), Err(McLError::NonIntegral { .. })));
        let missing = SMALL.replace("amatrix 3A classes 3A 1 0\n", "");
        assert!(matches!(
            TabulatedGroup::parse(&missing),
            Err(McLError::PrincipalMismatch(_))
        ));
    }
}
