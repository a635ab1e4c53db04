//! Bounded covering integer programs: minimise `sum x_j` subject to `C x >= r`,
//! `l <= x <= u`, `x` integral, with `C`, `r`, `l`, `u` nonnegative integers.
//!
//! Program file format:
//!
//! ```text
//! rows 2 cols 2
//! col M1 ub 28
//! col M3 ub 63 lb 0
//! row 12AB demand 1008
//! row 4C demand 378
//! entry 12AB M1 36
//! entry 12AB M3 16
//! ```

mod bnb;
mod proof;
pub mod simplex;
mod symmetry;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::files::content_lines;
pub use bnb::{solve_integer, LogEntry, SolveOptions, SolveResult, Status};
pub use proof::{certify, check_certificate, dual_bound, CheckedProof, Dual, ProofNode, ProofTree};
use simplex::{DenseLp, LpOutcome};
pub use symmetry::{close_column_group, verify_automorphism};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IlpError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown {kind} label `{label}`")]
    UnknownLabel { kind: &'static str, label: String },
    #[error("duplicate {kind} label `{label}`")]
    DuplicateLabel { kind: &'static str, label: String },
    #[error("header declares {declared} {kind}, found {found}")]
    CountMismatch {
        kind: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("column `{0}` has lower bound above upper bound")]
    BadBounds(String),
    #[error("row `{0}` cannot be satisfied even with every column at its upper bound")]
    Infeasible(String),
    #[error("solution violates row `{0}`")]
    Violated(String),
    #[error("solution value {0} is out of bounds for column `{1}`")]
    OutOfBounds(u64, String),
    #[error("symmetry: {0}")]
    Symmetry(String),
    #[error("certificate: {0}")]
    Certificate(String),
}

/// A covering program with labelled rows and columns. Rows are stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoveringProgram {
    pub col_labels: Vec<String>,
    pub lower: Vec<u64>,
    pub upper: Vec<u64>,
    pub row_labels: Vec<String>,
    pub demand: Vec<u64>,
    /// `rows[r]` lists `(column, coefficient)` with positive coefficients, sorted by column.
    pub rows: Vec<Vec<(u32, u64)>>,
}

impl CoveringProgram {
    pub fn new() -> CoveringProgram {
        CoveringProgram::default()
    }

    pub fn n_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn n_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn add_col(&mut self, label: impl Into<String>, lower: u64, upper: u64) -> usize {
        self.col_labels.push(label.into());
        self.lower.push(lower);
        self.upper.push(upper);
        self.col_labels.len() - 1
    }

    /// Adds a row; zero coefficients are dropped and repeated columns summed.
    pub fn add_row(
        &mut self,
        label: impl Into<String>,
        demand: u64,
        entries: impl IntoIterator<Item = (usize, u64)>,
    ) -> usize {
        let mut row: Vec<(u32, u64)> = Vec::new();
        let mut sorted: Vec<(usize, u64)> = entries.into_iter().filter(|e| e.1 > 0).collect();
        sorted.sort_unstable();
        for (c, v) in sorted {
            match row.last_mut() {
                Some((lc, lv)) if *lc as usize == c => *lv += v,
                _ => row.push((c as u32, v)),
            }
        }
        self.row_labels.push(label.into());
        self.demand.push(demand);
        self.rows.push(row);
        self.row_labels.len() - 1
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.col_labels.iter().position(|l| l == label)
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    /// Coefficient `C[r][c]`.
    pub fn coeff(&self, r: usize, c: usize) -> u64 {
        self.rows[r]
            .binary_search_by_key(&(c as u32), |e| e.0)
            .map(|i| self.rows[r][i].1)
            .unwrap_or(0)
    }

    /// Row activity `C[r] . x` in 128-bit arithmetic.
    pub fn activity(&self, r: usize, x: &[u64]) -> u128 {
        self.rows[r]
            .iter()
            .map(|&(c, v)| v as u128 * x[c as usize] as u128)
            .sum()
    }

    /// Bounds are consistent and every row can be met at the upper bounds.
    pub fn check_feasible(&self) -> Result<(), IlpError> {
        for j in 0..self.n_cols() {
            if self.lower[j] > self.upper[j] {
                return Err(IlpError::BadBounds(self.col_labels[j].clone()));
            }
        }
        for r in 0..self.n_rows() {
            if self.activity(r, &self.upper) < self.demand[r] as u128 {
                return Err(IlpError::Infeasible(self.row_labels[r].clone()));
            }
        }
        Ok(())
    }

    /// Checks an integer point against bounds and rows.
    pub fn check_point(&self, x: &[u64]) -> Result<(), IlpError> {
        if x.len() != self.n_cols() {
            return Err(IlpError::Certificate(format!(
                "point has {} entries for {} columns",
                x.len(),
                self.n_cols()
            )));
        }
        for (j, &v) in x.iter().enumerate() {
            if v < self.lower[j] || v > self.upper[j] {
                return Err(IlpError::OutOfBounds(v, self.col_labels[j].clone()));
            }
        }
        for r in 0..self.n_rows() {
            if self.activity(r, x) < self.demand[r] as u128 {
                return Err(IlpError::Violated(self.row_labels[r].clone()));
            }
        }
        Ok(())
    }

    pub fn to_dense(&self) -> DenseLp {
        let n = self.n_cols();
        DenseLp {
            cost: vec![1; n],
            lower: self.lower.clone(),
            upper: self.upper.clone(),
            demand: self.demand.clone(),
            coeffs: self
                .rows
                .iter()
                .map(|row| {
                    let mut d = vec![0; n];
                    for &(c, v) in row {
                        d[c as usize] = v;
                    }
                    d
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<CoveringProgram, IlpError> {
        let syntax = |line: usize, msg: &str| IlpError::Syntax {
            line,
            msg: msg.to_string(),
        };
        let num = |line: usize, t: &str| -> Result<u64, IlpError> {
            t.parse().map_err(|_| syntax(line, &format!("bad number `{t}`")))
        };
        let mut p = CoveringProgram::new();
        let mut header: Option<(usize, usize)> = None;
        let mut col_ix: HashMap<String, usize> = HashMap::new();
        let mut row_ix: HashMap<String, usize> = HashMap::new();
        let mut entries: Vec<Vec<(usize, u64)>> = Vec::new();
        for (line, l) in content_lines(text) {
            let t: Vec<&str> = l.split_whitespace().collect();
            match t[0] {
                "rows" => {
                    if t.len() != 4 || t[2] != "cols" {
                        return Err(syntax(line, "expected `rows <m> cols <n>`"));
                    }
                    header = Some((num(line, t[1])? as usize, num(line, t[3])? as usize));
                }
                "col" => {
                    if t.len() != 4 && t.len() != 6 || t[2] != "ub" || t.len() == 6 && t[4] != "lb" {
                        return Err(syntax(line, "expected `col <label> ub <u> [lb <l>]`"));
                    }
                    let ub = num(line, t[3])?;
                    let lb = if t.len() == 6 { num(line, t[5])? } else { 0 };
                    if col_ix.insert(t[1].to_string(), p.n_cols()).is_some() {
                        return Err(IlpError::DuplicateLabel {
                            kind: "column",
                            label: t[1].to_string(),
                        });
                    }
                    p.add_col(t[1], lb, ub);
                }
                "row" => {
                    if t.len() != 4 || t[2] != "demand" {
                        return Err(syntax(line, "expected `row <label> demand <r>`"));
                    }
                    if row_ix.insert(t[1].to_string(), p.row_labels.len()).is_some() {
                        return Err(IlpError::DuplicateLabel {
                            kind: "row",
                            label: t[1].to_string(),
                        });
                    }
                    p.row_labels.push(t[1].to_string());
                    p.demand.push(num(line, t[3])?);
                    entries.push(Vec::new());
                }
                "entry" => {
                    if t.len() != 4 {
                        return Err(syntax(line, "expected `entry <row> <col> <coeff>`"));
                    }
                    let r = *row_ix.get(t[1]).ok_or_else(|| IlpError::UnknownLabel {
                        kind: "row",
                        label: t[1].to_string(),
                    })?;
                    let c = *col_ix.get(t[2]).ok_or_else(|| IlpError::UnknownLabel {
                        kind: "column",
                        label: t[2].to_string(),
                    })?;
                    entries[r].push((c, num(line, t[3])?));
                }
                other => return Err(syntax(line, &format!("unknown record `{other}`"))),
            }
        }
        let (m, n) = header.ok_or_else(|| syntax(0, "missing `rows <m> cols <n>` header"))?;
        if m != p.n_rows() {
            return Err(IlpError::CountMismatch {
                kind: "rows",
                declared: m,
                found: p.n_rows(),
            });
        }
        if n != p.n_cols() {
            return Err(IlpError::CountMismatch {
                kind: "columns",
                declared: n,
                found: p.n_cols(),
            });
        }
        let labels = std::mem::take(&mut p.row_labels);
        let demands = std::mem::take(&mut p.demand);
        for ((label, d), e) in labels.into_iter().zip(demands).zip(entries) {
            p.add_row(label, d, e);
        }
        Ok(p)
    }

    pub fn render(&self) -> String {
        let mut s = format!("rows {} cols {}\n", self.n_rows(), self.n_cols());
        for j in 0..self.n_cols() {
            s.push_str(&format!("col {} ub {}", self.col_labels[j], self.upper[j]));
            if self.lower[j] > 0 {
                s.push_str(&format!(" lb {}", self.lower[j]));
            }
            s.push('\n');
        }
        for r in 0..self.n_rows() {
            s.push_str(&format!("row {} demand {}\n", self.row_labels[r], self.demand[r]));
        }
        for r in 0..self.n_rows() {
            for &(c, v) in &self.rows[r] {
                s.push_str(&format!(
                    "entry {} {} {}\n",
                    self.row_labels[r], self.col_labels[c as usize], v
                ));
            }
        }
        s
    }
}

/// Exact optimum of the continuous relaxation.
#[derive(Debug, Clone, PartialEq)]
pub struct LpRelaxation {
    pub value: BigRational,
    /// `ceil(value)`, a lower bound for the integer program.
    pub ceil: u64,
    pub point: Vec<BigRational>,
    pub duals: Vec<BigRational>,
}

/// Solves the relaxation over exact rationals with Bland's rule.
pub fn lp_relax(p: &CoveringProgram) -> Result<LpRelaxation, IlpError> {
    p.check_feasible()?;
    match simplex::solve_exact(&p.to_dense()) {
        LpOutcome::Optimal { value, point, duals } => {
            let c: BigInt = value.ceil().to_integer();
            Ok(LpRelaxation {
                ceil: c.try_into().expect("bound fits u64"),
                value,
                point,
                duals,
            })
        }
        LpOutcome::Infeasible { row } => Err(IlpError::Infeasible(p.row_labels[row].clone())),
        LpOutcome::IterationLimit => unreachable!("exact simplex with Bland's rule terminates"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn sample() -> CoveringProgram {
        let mut p = CoveringProgram::new();
        let a = p.add_col("M1", 0, 28);
        let b = p.add_col("M3", 0, 63);
        p.add_row("12AB", 1008, [(a, 36), (b, 16)]);
        p
    }

    #[test]
    fn render_parse_round_trip() {
        let p = sample();
        assert_eq!(CoveringProgram::parse(&p.render()).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            CoveringProgram::parse("rows 1 cols 1\ncol a ub 1\nrow r demand 1\nentry r b 1\n"),
            Err(IlpError::UnknownLabel { kind: "column", .. })
        ));
        assert!(matches!(
            CoveringProgram::parse("rows 2 cols 1\ncol a ub 1\nrow r demand 1\n"),
            Err(IlpError::CountMismatch { kind: "rows", .. })
        ));
        assert!(matches!(
            CoveringProgram::parse("rows 0 cols 1\ncol a ub x\n"),
            Err(IlpError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn relaxation_of_sample() {
        let r = lp_relax(&sample()).unwrap();
        assert_eq!(r.value, BigRational::from_u64(28).unwrap());
        assert_eq!(r.ceil, 28);
    }

    #[test]
    fn one_variable_relaxation() {
        let mut p = CoveringProgram::new();
        let x = p.add_col("x", 0, 5);
        p.add_row("r", 3, [(x, 2)]);
        let r = lp_relax(&p).unwrap();
        assert_eq!(r.value, BigRational::new(3.into(), 2.into()));
        assert_eq!(r.ceil, 2);
    }

    #[test]
    fn infeasible_program_rejected() {
        let mut p = CoveringProgram::new();
        let x = p.add_col("x", 0, 1);
        p.add_row("r", 3, [(x, 2)]);
        assert_eq!(lp_relax(&p), Err(IlpError::Infeasible("r".into())));
    }
}
