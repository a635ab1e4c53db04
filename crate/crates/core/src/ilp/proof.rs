//! Branch-and-bound proof trees and their independent replay.
//!
//! Every node's bounds follow from the root bounds and the splits on the path to it. A leaf
//! is closed either by an infeasible row or by a nonnegative row multiplier vector `y`:
//! for any integer `x` within the node's bounds satisfying the rows,
//!
//! ```text
//! sum x_j >= sum_r y_r d_r + sum_j min(l_j c_j, u_j c_j),   c = 1 - C^T y,
//! ```
//!
//! so the ceiling of the right-hand side bounds the node's optimum. An orbit split is only
//! valid under a verified column symmetry; the checker recomputes the node stabilizer and
//! its orbits from the closed symmetry group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::symmetry::{close_column_group, node_stabilizer, orbit_of, verify_automorphism};
use super::{CoveringProgram, IlpError, SolveResult, Status};
use crate::files::{content_lines, digest};

/// Row multipliers `y_r = num_r / den` (rows of the original program; absent rows are zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub den: BigInt,
    pub num: Vec<(u32, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofNode {
    /// Children get `x_col <= at` and `x_col >= at + 1`.
    SplitVar {
        col: u32,
        at: u64,
        down: usize,
        up: usize,
    },
    /// Children get `x_rep = 1` and `x_j = 0` for every `j` in `orbit`.
    SplitOrbit {
        rep: u32,
        orbit: Vec<u32>,
        one: usize,
        zero: usize,
    },
    Bound(Dual),
    Infeasible {
        row: u32,
    },
}

/// Node 0 is the root.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofTree {
    pub nodes: Vec<ProofNode>,
    /// Column permutations (0-based images) used by orbit splits.
    pub symmetry: Vec<Vec<u32>>,
}

fn to_i128(b: &BigInt) -> Option<i128> {
    b.to_i128()
}

/// Exact value of the dual bound for a node with the given bounds.
pub fn dual_bound(p: &CoveringProgram, lower: &[u64], upper: &[u64], d: &Dual) -> BigRational {
    if let Some(v) = dual_bound_i128(p, lower, upper, d) {
        return BigRational::new(BigInt::from(v), d.den.clone());
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); p.n_cols()];
    let mut total = BigInt::zero();
    for (r, y) in &d.num {
        let r = *r as usize;
        total += y * BigInt::from(p.demand[r]);
        for &(c, v) in &p.rows[r] {
            acc[c as usize] += y * BigInt::from(v);
        }
    }
    for (j, a) in acc.into_iter().enumerate() {
        let c = &d.den - a;
        let lo = &c * BigInt::from(lower[j]);
        let hi = &c * BigInt::from(upper[j]);
        total += if lo < hi { lo } else { hi };
    }
    BigRational::new(total, d.den.clone())
}

fn dual_bound_i128(p: &CoveringProgram, lower: &[u64], upper: &[u64], d: &Dual) -> Option<i128> {
    let den = to_i128(&d.den)?;
    let mut acc = vec![0i128; p.n_cols()];
    let mut total: i128 = 0;
    for (r, y) in &d.num {
        let r = *r as usize;
        let y = to_i128(y)?;
        total = total.checked_add(y.checked_mul(p.demand[r] as i128)?)?;
        for &(c, v) in &p.rows[r] {
            acc[c as usize] = acc[c as usize].checked_add(y.checked_mul(v as i128)?)?;
        }
    }
    for (j, a) in acc.into_iter().enumerate() {
        let c = den.checked_sub(a)?;
        let lo = c.checked_mul(lower[j] as i128)?;
        let hi = c.checked_mul(upper[j] as i128)?;
        total = total.checked_add(lo.min(hi))?;
    }
    Some(total)
}

/// `ceil` of a bound, clamped below at zero.
pub(crate) fn ceil_u64(r: &BigRational) -> u64 {
    if r.is_negative() {
        return 0;
    }
    let (q, rem) = r.numer().div_rem(r.denom());
    let q = if rem.is_zero() { q } else { q + 1 };
    q.to_u64().unwrap_or(u64::MAX)
}

/// Outcome of replaying a proof tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedProof {
    /// Minimum over leaves of the leaf bound (`u64::MAX` when every leaf is infeasible).
    pub lower_bound: u64,
    pub nodes: usize,
    pub leaves: usize,
}

impl ProofTree {
    /// Replays the tree against the program: every node reachable exactly once, every split
    /// well-formed, every leaf bound recomputed exactly.
    pub fn check(&self, p: &CoveringProgram) -> Result<CheckedProof, IlpError> {
        let fail = |m: String| IlpError::Certificate(m);
        if self.nodes.is_empty() {
            return Err(fail("empty proof tree".into()));
        }
        let group = if self.symmetry.is_empty() {
            None
        } else {
            for (i, s) in self.symmetry.iter().enumerate() {
                verify_automorphism(p, s).map_err(|e| fail(format!("symmetry generator {i}: {e}")))?;
            }
            Some(
                close_column_group(&self.symmetry, super::symmetry::GROUP_CAP)
                    .ok_or_else(|| fail("symmetry group too large".into()))?,
            )
        };
        let n = p.n_cols();
        let mut seen = vec![false; self.nodes.len()];
        let mut lower_bound = u64::MAX;
        let mut leaves = 0;
        // (node, lower, upper, stabilizer element indices)
        let all: Vec<u32> = group
            .as_ref()
            .map(|g| (0..g.len() as u32).collect())
            .unwrap_or_default();
        let mut stack = vec![(0usize, p.lower.clone(), p.upper.clone(), all)];
        while let Some((id, lo, up, stab)) = stack.pop() {
            if id >= self.nodes.len() || std::mem::replace(&mut seen[id], true) {
                return Err(fail(format!("node {id} missing or reached twice")));
            }
            match &self.nodes[id] {
                ProofNode::Infeasible { row } => {
                    let r = *row as usize;
                    if r >= p.n_rows() || p.activity(r, &up) >= p.demand[r] as u128 {
                        return Err(fail(format!("node {id}: row {r} is not infeasible")));
                    }
                    leaves += 1;
                }
                ProofNode::Bound(d) => {
                    if !d.den.is_positive() || d.num.iter().any(|(r, y)| *r as usize >= p.n_rows() || y.is_negative()) {
                        return Err(fail(format!("node {id}: malformed multipliers")));
                    }
                    let b = ceil_u64(&dual_bound(p, &lo, &up, d));
                    lower_bound = lower_bound.min(b);
                    leaves += 1;
                }
                ProofNode::SplitVar { col, at, down, up: upc } => {
                    let c = *col as usize;
                    if c >= n || *at < lo[c] || *at >= up[c] {
                        return Err(fail(format!("node {id}: split outside bounds")));
                    }
                    let mut d_up = up.clone();
                    d_up[c] = *at;
                    let mut u_lo = lo.clone();
                    u_lo[c] = at + 1;
                    stack.push((*down, lo.clone(), d_up, stab.clone()));
                    stack.push((*upc, u_lo, up, stab));
                }
                ProofNode::SplitOrbit { rep, orbit, one, zero } => {
                    let g = group
                        .as_ref()
                        .ok_or_else(|| fail(format!("node {id}: orbit split without symmetry")))?;
                    if (0..n).any(|j| lo[j] > 1 || up[j] > 1) {
                        return Err(fail(format!("node {id}: orbit split on non-binary node")));
                    }
                    let stab = node_stabilizer(g, &stab, &lo, &up);
                    let expected = orbit_of(g, &stab, *rep as usize);
                    let r = *rep as usize;
                    if r >= n || lo[r] != 0 || up[r] != 1 || expected != *orbit {
                        return Err(fail(format!("node {id}: claimed orbit is not an orbit")));
                    }
                    let mut one_lo = lo.clone();
                    one_lo[r] = 1;
                    let mut zero_up = up.clone();
                    for &j in orbit {
                        zero_up[j as usize] = 0;
                    }
                    stack.push((*zero, lo, zero_up, stab.clone()));
                    stack.push((*one, one_lo, up, stab));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(fail(format!("node {i} unreachable")));
        }
        Ok(CheckedProof {
            lower_bound,
            nodes: self.nodes.len(),
            leaves,
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for g in &self.symmetry {
            let imgs: Vec<String> = g.iter().map(|&x| (x + 1).to_string()).collect();
            s.push_str(&format!("sym {}\n", imgs.join(" ")));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            match node {
                ProofNode::SplitVar { col, at, down, up } => {
                    s.push_str(&format!("node {i} split-var {col} {at} {down} {up}\n"))
                }
                ProofNode::SplitOrbit { rep, orbit, one, zero } => {
                    let o: Vec<String> = orbit.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!("node {i} split-orbit {rep} {one} {zero} {}\n", o.join(",")))
                }
                ProofNode::Bound(d) => {
                    s.push_str(&format!("node {i} dual {}", d.den));
                    for (r, y) in &d.num {
                        s.push_str(&format!(" {r}:{y}"));
                    }
                    s.push('\n');
                }
                ProofNode::Infeasible { row } => s.push_str(&format!("node {i} infeasible {row}\n")),
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<ProofTree, IlpError> {
        let bad = |line: usize, m: &str| IlpError::Syntax {
            line,
            msg: m.to_string(),
        };
        let mut tree = ProofTree::default();
        for (line, l) in content_lines(text) {
            let t: Vec<&str> = l.split_whitespace().collect();
            let int = |s: &str| -> Result<u64, IlpError> { s.parse().map_err(|_| bad(line, "bad integer")) };
            match t[0] {
                "sym" => {
                    let g = t[1..]
                        .iter()
                        .map(|s| int(s).and_then(|v| v.checked_sub(1).ok_or(bad(line, "0 image"))))
                        .map(|v| v.map(|v| v as u32))
                        .collect::<Result<Vec<u32>, _>>()?;
                    tree.symmetry.push(g);
                }
                "node" => {
                    if t.len() < 3 || int(t[1])? as usize != tree.nodes.len() {
                        return Err(bad(line, "nodes must be numbered consecutively"));
                    }
                    let node = match (t[2], t.len()) {
                        ("split-var", 7) => ProofNode::SplitVar {
                            col: int(t[3])? as u32,
                            at: int(t[4])?,
                            down: int(t[5])? as usize,
                            up: int(t[6])? as usize,
                        },
                        ("split-orbit", 7) => ProofNode::SplitOrbit {
                            rep: int(t[3])? as u32,
                            one: int(t[4])? as usize,
                            zero: int(t[5])? as usize,
                            orbit: t[6]
                                .split(',')
                                .map(|x| int(x).map(|v| v as u32))
                                .collect::<Result<_, _>>()?,
                        },
                        ("infeasible", 4) => ProofNode::Infeasible { row: int(t[3])? as u32 },
                        ("dual", k) if k >= 4 => {
                            let den: BigInt = t[3].parse().map_err(|_| bad(line, "bad denominator"))?;
                            let mut num = Vec::new();
                            for e in &t[4..] {
                                let (r, y) = e.split_once(':').ok_or(bad(line, "expected row:num"))?;
                                let y: BigInt = y.parse().map_err(|_| bad(line, "bad numerator"))?;
                                num.push((int(r)? as u32, y));
                            }
                            ProofNode::Bound(Dual { den, num })
                        }
                        _ => return Err(bad(line, "unknown node record")),
                    };
                    tree.nodes.push(node);
                }
                _ => return Err(bad(line, "unknown proof record")),
            }
        }
        Ok(tree)
    }
}

/// Re-checks a solve result and renders a self-contained certificate:
/// program digest, claimed optimum and solution, and the proof tree.
pub fn certify(p: &CoveringProgram, res: &SolveResult) -> Result<String, IlpError> {
    p.check_point(&res.solution)?;
    let value: u64 = res.solution.iter().sum();
    if value != res.optimum {
        return Err(IlpError::Certificate(format!(
            "solution sums to {value}, claimed optimum {}",
            res.optimum
        )));
    }
    let checked = res.proof.check(p)?;
    let lower = checked.lower_bound.min(res.optimum);
    if res.status == Status::Optimal && lower < res.optimum {
        return Err(IlpError::Certificate(format!(
            "proof gives lower bound {lower} < optimum {}",
            res.optimum
        )));
    }
    let mut s = format!("program-sha256 {}\n", digest(&p.render()));
    s.push_str(&res.render(p));
    s.push_str(&res.proof.render());
    Ok(s)
}

/// Replays a certificate produced by [`certify`]. Returns `(lower bound, incumbent)`.
pub fn check_certificate(p: &CoveringProgram, text: &str) -> Result<(u64, u64), IlpError> {
    let fail = |m: &str| IlpError::Certificate(m.to_string());
    let mut proof_text = String::new();
    let mut result_text = String::new();
    let mut program_digest = None;
    for line in text.lines() {
        let first = line.split_whitespace().next().unwrap_or("");
        match first {
            "program-sha256" => program_digest = line.split_whitespace().nth(1).map(str::to_string),
            "sym" | "node" => {
                proof_text.push_str(line);
                proof_text.push('\n');
            }
            _ => {
                result_text.push_str(line);
                result_text.push('\n');
            }
        }
    }
    if program_digest.as_deref() != Some(digest(&p.render()).as_str()) {
        return Err(fail("program digest does not match"));
    }
    let res = SolveResult::parse(p, &result_text)?;
    p.check_point(&res.solution)?;
    let value: u64 = res.solution.iter().sum();
    if value != res.optimum {
        return Err(fail("solution does not sum to the claimed optimum"));
    }
    let proof = ProofTree::parse(&proof_text)?;
    let checked = proof.check(p)?;
    let lower = checked.lower_bound.min(value);
    if res.status == Status::Optimal && lower < value {
        return Err(fail("proof does not reach the claimed optimum"));
    }
    Ok((lower, value))
}
