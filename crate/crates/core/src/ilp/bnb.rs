//! Depth-first branch-and-bound with LP bounds, periodic best-bound restarts and optional
//! orbital branching under a verified column symmetry group.

use std::rc::Rc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rustc_hash::FxHashMap;

use super::proof::{ceil_u64, dual_bound, Dual, ProofNode, ProofTree};
use super::simplex::{self, DenseLp, LpOutcome};
use super::symmetry::{close_column_group, node_stabilizer, orbit_of, verify_automorphism, ColumnGroup, GROUP_CAP};
use super::{CoveringProgram, IlpError};
use crate::files::content_lines;

/// Node LPs with at most this many matrix cells are solved exactly.
const EXACT_CELLS: usize = 1_500;
/// Exact fallback is attempted up to this size when the float duals lose a prune.
const EXACT_FALLBACK_CELLS: usize = 60_000;
const FLOAT_ITERS: usize = 200_000;
const FRAC_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub budget: Duration,
    /// Generators of a column symmetry group of a 0/1 program, as 0-based column images.
    pub symmetry: Vec<Vec<u32>>,
    /// Nodes between best-bound restarts of the depth-first search.
    pub restart_every: usize,
    /// Report search progress on stderr every this many nodes (0 = silent).
    pub progress_every: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Duration::from_secs(3600),
            symmetry: Vec::new(),
            restart_every: 1000,
            progress_every: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    /// The budget ran out; `lower_bound <= optimum` is all that is proven.
    BoundOnly,
}

/// Global lower bound and incumbent after a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogEntry {
    pub node: usize,
    pub bound: u64,
    pub incumbent: u64,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: Status,
    /// Value of the best solution found.
    pub optimum: u64,
    pub lower_bound: u64,
    pub solution: Vec<u64>,
    pub bound_log: Vec<LogEntry>,
    pub proof: ProofTree,
    pub nodes: usize,
    /// `ceil` of the root relaxation.
    pub root_bound: u64,
}

impl SolveResult {
    pub fn render(&self, p: &CoveringProgram) -> String {
        let status = match self.status {
            Status::Optimal => "optimal",
            Status::BoundOnly => "bound-only",
        };
        let mut s = format!(
            "status {status}\noptimum {}\nlower {}\nnodes {}\n",
            self.optimum, self.lower_bound, self.nodes
        );
        for (j, &v) in self.solution.iter().enumerate() {
            if v > 0 {
                s.push_str(&format!("set {} {v}\n", p.col_labels[j]));
            }
        }
        for e in &self.bound_log {
            s.push_str(&format!("log {} {} {}\n", e.node, e.bound, e.incumbent));
        }
        s
    }

    /// Parses the result part of a rendered result (proof records are ignored).
    pub fn parse(p: &CoveringProgram, text: &str) -> Result<SolveResult, IlpError> {
        let bad = |line: usize, m: &str| IlpError::Syntax {
            line,
            msg: m.to_string(),
        };
        let mut res = SolveResult {
            status: Status::BoundOnly,
            optimum: 0,
            lower_bound: 0,
            solution: vec![0; p.n_cols()],
            bound_log: Vec::new(),
            proof: ProofTree::default(),
            nodes: 0,
            root_bound: 0,
        };
        let mut have_status = false;
        for (line, l) in content_lines(text) {
            let t: Vec<&str> = l.split_whitespace().collect();
            let int = |s: &str| -> Result<u64, IlpError> { s.parse().map_err(|_| bad(line, "bad integer")) };
            match (t[0], t.len()) {
                ("status", 2) => {
                    res.status = match t[1] {
                        "optimal" => Status::Optimal,
                        "bound-only" => Status::BoundOnly,
                        _ => return Err(bad(line, "unknown status")),
                    };
                    have_status = true;
                }
                ("optimum", 2) => res.optimum = int(t[1])?,
                ("lower", 2) => res.lower_bound = int(t[1])?,
                ("nodes", 2) => res.nodes = int(t[1])? as usize,
                ("set", 3) => {
                    let j = p.col_index(t[1]).ok_or_else(|| IlpError::UnknownLabel {
                        kind: "column",
                        label: t[1].to_string(),
                    })?;
                    res.solution[j] = int(t[2])?;
                }
                ("log", 4) => res.bound_log.push(LogEntry {
                    node: int(t[1])? as usize,
                    bound: int(t[2])?,
                    incumbent: int(t[3])?,
                }),
                ("sym", _) | ("node", _) => {}
                _ => return Err(bad(line, "unknown result record")),
            }
        }
        if !have_status {
            return Err(bad(0, "missing status"));
        }
        Ok(res)
    }
}

struct NodeLp {
    value: f64,
    point: Vec<f64>,
    dual: Dual,
    exact: bool,
}

enum NodeOutcome {
    Infeasible(usize),
    Lp(NodeLp),
}

/// Continued-fraction approximation `h/k` of `x` with `k <= max_den`.
fn small_rational(x: f64, max_den: i64) -> Option<(i64, i64)> {
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
        let frac = v - a as f64;
        if frac < 1e-16 {
            break;
        }
        v = 1.0 / frac;
    }
    (k1 > 0 && (x - h1 as f64 / k1 as f64).abs() <= 1e-11 * x.abs().max(1e-3)).then_some((h1, k1))
}

/// Turns float row multipliers into exact nonnegative rationals over a common denominator.
fn rationalise(rows: &[usize], y: &[f64]) -> Dual {
    let mut parts: Vec<(u32, i64, i64)> = Vec::new();
    let mut lcm: i128 = 1;
    let mut ok = true;
    for (&r, &v) in rows.iter().zip(y) {
        if v <= 1e-13 {
            continue;
        }
        match small_rational(v, 10_000_000) {
            Some((h, k)) if h > 0 => {
                lcm = lcm.lcm(&(k as i128));
                if lcm > 1_000_000_000_000_000_000 {
                    ok = false;
                    break;
                }
                parts.push((r as u32, h, k));
            }
            Some(_) => {}
            None => {
                ok = false;
                break;
            }
        }
    }
    if ok {
        let num = parts
            .iter()
            .map(|&(r, h, k)| (r, BigInt::from(h as i128 * (lcm / k as i128))))
            .collect();
        return Dual {
            den: BigInt::from(lcm),
            num,
        };
    }
    // Dyadic rounding down: always a valid (if slightly weaker) multiplier vector.
    let scale = (1u64 << 40) as f64;
    let mut num = Vec::new();
    for (&r, &v) in rows.iter().zip(y) {
        let s = (v * scale).floor();
        if s >= 1.0 {
            num.push((r as u32, BigInt::from(s as i128)));
        }
    }
    Dual {
        den: BigInt::from(1u64 << 40),
        num,
    }
}

fn exact_dual(rows: &[usize], y: &[BigRational]) -> Dual {
    let mut den = BigInt::from(1);
    for v in y {
        if v.is_positive() {
            den = den.lcm(v.denom());
        }
    }
    let num = rows
        .iter()
        .zip(y)
        .filter(|(_, v)| v.is_positive())
        .map(|(&r, v)| (r as u32, v.numer() * (&den / v.denom())))
        .collect();
    Dual { den, num }
}

fn solve_node(
    p: &CoveringProgram,
    work: &[usize],
    lo: &[u64],
    up: &[u64],
    force_exact: bool,
) -> Result<NodeOutcome, ()> {
    let n = p.n_cols();
    let free: Vec<usize> = (0..n).filter(|&j| lo[j] < up[j]).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &j) in free.iter().enumerate() {
        local[j] = i;
    }
    let mut rows = Vec::new();
    let mut demand = Vec::new();
    for &r in work {
        if p.activity(r, up) < p.demand[r] as u128 {
            return Ok(NodeOutcome::Infeasible(r));
        }
        let fixed: u128 = p.rows[r]
            .iter()
            .filter(|&&(c, _)| local[c as usize] == usize::MAX)
            .map(|&(c, v)| v as u128 * lo[c as usize] as u128)
            .sum();
        if fixed < p.demand[r] as u128 {
            rows.push(r);
            demand.push((p.demand[r] as u128 - fixed) as u64);
        }
    }
    let mut point: Vec<f64> = lo.iter().map(|&v| v as f64).collect();
    if rows.is_empty() {
        let value = point.iter().sum();
        return Ok(NodeOutcome::Lp(NodeLp {
            value,
            point,
            dual: Dual {
                den: BigInt::from(1),
                num: Vec::new(),
            },
            exact: true,
        }));
    }
    let lp = DenseLp {
        cost: vec![1; free.len()],
        lower: free.iter().map(|&j| lo[j]).collect(),
        upper: free.iter().map(|&j| up[j]).collect(),
        demand,
        coeffs: rows
            .iter()
            .map(|&r| {
                let mut d = vec![0; free.len()];
                for &(c, v) in &p.rows[r] {
                    if local[c as usize] != usize::MAX {
                        d[local[c as usize]] = v;
                    }
                }
                d
            })
            .collect(),
    };
    let fixed_value: f64 = (0..n).filter(|&j| lo[j] == up[j]).map(|j| lo[j] as f64).sum();
    let cells = rows.len() * free.len();
    if force_exact || cells <= EXACT_CELLS {
        if cells > EXACT_FALLBACK_CELLS.max(EXACT_CELLS) {
            return Err(());
        }
        match simplex::solve_exact(&lp) {
            LpOutcome::Optimal { value, point: x, duals } => {
                for (i, &j) in free.iter().enumerate() {
                    point[j] = x[i].to_f64().unwrap_or(f64::NAN);
                }
                Ok(NodeOutcome::Lp(NodeLp {
                    value: value.to_f64().unwrap_or(f64::NAN) + fixed_value,
                    point,
                    dual: exact_dual(&rows, &duals),
                    exact: true,
                }))
            }
            LpOutcome::Infeasible { row } => Ok(NodeOutcome::Infeasible(rows[row])),
            LpOutcome::IterationLimit => Err(()),
        }
    } else {
        match simplex::solve_best::<f64>(&lp, FLOAT_ITERS) {
            LpOutcome::Optimal { value, point: x, duals } => {
                for (i, &j) in free.iter().enumerate() {
                    point[j] = x[i];
                }
                Ok(NodeOutcome::Lp(NodeLp {
                    value: value + fixed_value,
                    point,
                    dual: rationalise(&rows, &duals),
                    exact: false,
                }))
            }
            LpOutcome::Infeasible { row } => Ok(NodeOutcome::Infeasible(rows[row])),
            LpOutcome::IterationLimit => match simplex::solve::<f64>(&lp, FLOAT_ITERS) {
                LpOutcome::Optimal { value, point: x, duals } => {
                    for (i, &j) in free.iter().enumerate() {
                        point[j] = x[i];
                    }
                    Ok(NodeOutcome::Lp(NodeLp {
                        value: value + fixed_value,
                        point,
                        dual: rationalise(&rows, &duals),
                        exact: false,
                    }))
                }
                _ => solve_node(p, work, lo, up, true),
            },
        }
    }
}

/// Lowers each coordinate, in reverse column order, as far as the rows allow.
fn trim(p: &CoveringProgram, by_col: &[Vec<(usize, u64)>], x: &mut [u64]) {
    let mut slack: Vec<i128> = (0..p.n_rows())
        .map(|r| p.activity(r, x) as i128 - p.demand[r] as i128)
        .collect();
    for j in (0..p.n_cols()).rev() {
        let mut dec = (x[j] - p.lower[j]) as i128;
        for &(r, v) in &by_col[j] {
            dec = dec.min(slack[r].max(0) / v as i128);
        }
        if dec > 0 {
            x[j] -= dec as u64;
            for &(r, v) in &by_col[j] {
                slack[r] -= dec * v as i128;
            }
        }
    }
}

/// Greedy: repeatedly raise the column covering the most residual demand per unit.
fn greedy(p: &CoveringProgram, by_col: &[Vec<(usize, u64)>], lo: &[u64], up: &[u64]) -> Vec<u64> {
    let mut x = lo.to_vec();
    let mut resid: Vec<i128> = (0..p.n_rows())
        .map(|r| p.demand[r] as i128 - p.activity(r, &x) as i128)
        .collect();
    loop {
        let mut best: Option<(i128, usize)> = None;
        for j in 0..p.n_cols() {
            if x[j] >= up[j] {
                continue;
            }
            let gain: i128 = by_col[j].iter().map(|&(r, v)| (v as i128).min(resid[r].max(0))).sum();
            if gain > 0 && best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, j));
            }
        }
        let Some((_, j)) = best else { break };
        // Gain per unit stays constant until some touched row is met.
        let mut step = (up[j] - x[j]) as i128;
        for &(r, v) in &by_col[j] {
            if resid[r] > 0 {
                step = step.min((resid[r] / v as i128).max(1));
            }
        }
        x[j] += step as u64;
        for &(r, v) in &by_col[j] {
            resid[r] -= step * v as i128;
        }
    }
    x
}

struct Open {
    id: usize,
    lo: Vec<u64>,
    up: Vec<u64>,
    hint: u64,
    parent_dual: Option<Rc<Dual>>,
    cand: Rc<Vec<u32>>,
}

/// Solves the program exactly, or to a proven bound when the budget runs out.
pub fn solve_integer(p: &CoveringProgram, opts: &SolveOptions) -> Result<SolveResult, IlpError> {
    p.check_feasible()?;
    let start = Instant::now();
    let n = p.n_cols();

    let mut group: Option<ColumnGroup> = None;
    let mut proof_symmetry = Vec::new();
    if !opts.symmetry.is_empty() {
        if (0..n).any(|j| p.lower[j] != 0 || p.upper[j] > 1) {
            return Err(IlpError::Symmetry("orbital branching needs a 0/1 program".into()));
        }
        for (i, s) in opts.symmetry.iter().enumerate() {
            verify_automorphism(p, s).map_err(|e| IlpError::Symmetry(format!("generator {i} {e}")))?;
        }
        group = close_column_group(&opts.symmetry, GROUP_CAP);
        if group.is_some() {
            proof_symmetry = opts.symmetry.clone();
        }
    }

    // Identical rows keep only the largest demand; zero-demand rows are dropped.
    let mut by_support: FxHashMap<&[(u32, u64)], usize> = FxHashMap::default();
    for r in 0..p.n_rows() {
        if p.demand[r] == 0 {
            continue;
        }
        let e = by_support.entry(&p.rows[r]).or_insert(r);
        if p.demand[r] > p.demand[*e] {
            *e = r;
        }
    }
    let mut work: Vec<usize> = by_support.into_values().collect();
    work.sort_unstable();

    let mut by_col: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for r in 0..p.n_rows() {
        for &(c, v) in &p.rows[r] {
            by_col[c as usize].push((r, v));
        }
    }

    let mut best = greedy(p, &by_col, &p.lower, &p.upper);
    trim(p, &by_col, &mut best);
    let mut incumbent: u64 = best.iter().sum();

    let all: Vec<u32> = group
        .as_ref()
        .map(|g| (0..g.len() as u32).collect())
        .unwrap_or_default();
    let mut stack = vec![Open {
        id: 0,
        lo: p.lower.clone(),
        up: p.upper.clone(),
        hint: 0,
        parent_dual: None,
        cand: Rc::new(all),
    }];
    let mut proof: Vec<Option<ProofNode>> = vec![None];
    let mut processed = 0usize;
    let mut timed_out_bound: Option<u64> = None;
    let mut bound_log: Vec<LogEntry> = Vec::new();
    let mut running_lower = 0u64;
    let mut root_bound = 0u64;

    while let Some(node) = stack.pop() {
        if processed > 0 && start.elapsed() > opts.budget {
            let hint = node.hint;
            let dual = node
                .parent_dual
                .as_deref()
                .cloned()
                .expect("non-root node has a parent");
            proof[node.id] = Some(ProofNode::Bound(dual));
            timed_out_bound = Some(timed_out_bound.map_or(hint, |b| b.min(hint)));
            continue;
        }
        processed += 1;
        let outcome = solve_node(p, &work, &node.lo, &node.up, false)
            .map_err(|_| IlpError::Certificate("node relaxation too large to solve exactly".into()))?;
        let mut lp = match outcome {
            NodeOutcome::Infeasible(r) => {
                proof[node.id] = Some(ProofNode::Infeasible { row: r as u32 });
                continue;
            }
            NodeOutcome::Lp(lp) => lp,
        };
        let mut bound = ceil_u64(&dual_bound(p, &node.lo, &node.up, &lp.dual));

        // Rounding heuristic: round the relaxation up, then trim.
        let mut cand: Vec<u64> = (0..n)
            .map(|j| {
                (lp.point[j] - FRAC_TOL)
                    .ceil()
                    .clamp(node.lo[j] as f64, node.up[j] as f64) as u64
            })
            .collect();
        if p.check_point(&cand).is_ok() {
            trim(p, &by_col, &mut cand);
            let v: u64 = cand.iter().sum();
            if v < incumbent {
                incumbent = v;
                best = cand;
            }
        }

        if bound < incumbent && !lp.exact && (lp.value - 1e-7).ceil() as u64 >= incumbent {
            if let Ok(NodeOutcome::Lp(e)) = solve_node(p, &work, &node.lo, &node.up, true) {
                lp = e;
                bound = ceil_u64(&dual_bound(p, &node.lo, &node.up, &lp.dual));
            }
        }
        if node.id == 0 {
            root_bound = bound;
        }
        if bound >= incumbent {
            proof[node.id] = Some(ProofNode::Bound(lp.dual));
        } else {
            let free: Vec<usize> = (0..n).filter(|&j| node.lo[j] < node.up[j]).collect();
            let frac = |j: usize| {
                let f = lp.point[j] - lp.point[j].floor();
                (f - 0.5).abs()
            };
            let branch_col = free
                .iter()
                .copied()
                .filter(|&j| {
                    let f = lp.point[j] - lp.point[j].floor();
                    f > FRAC_TOL && f < 1.0 - FRAC_TOL
                })
                .min_by(|&a, &b| frac(a).partial_cmp(&frac(b)).unwrap().then(a.cmp(&b)))
                .or_else(|| free.first().copied())
                .expect("a node below the incumbent has a free column");
            let dual = Rc::new(lp.dual);
            let x = lp.point[branch_col];
            let ids = [proof.len(), proof.len() + 1];
            proof.push(None);
            proof.push(None);
            match &group {
                Some(g) => {
                    let stab = Rc::new(node_stabilizer(g, &node.cand, &node.lo, &node.up));
                    let orbit = orbit_of(g, &stab, branch_col);
                    let mut zero_up = node.up.clone();
                    for &j in &orbit {
                        zero_up[j as usize] = 0;
                    }
                    let mut one_lo = node.lo.clone();
                    one_lo[branch_col] = 1;
                    proof[node.id] = Some(ProofNode::SplitOrbit {
                        rep: branch_col as u32,
                        orbit,
                        one: ids[0],
                        zero: ids[1],
                    });
                    stack.push(Open {
                        id: ids[1],
                        lo: node.lo.clone(),
                        up: zero_up,
                        hint: bound,
                        parent_dual: Some(dual.clone()),
                        cand: stab.clone(),
                    });
                    stack.push(Open {
                        id: ids[0],
                        lo: one_lo,
                        up: node.up,
                        hint: bound,
                        parent_dual: Some(dual),
                        cand: stab,
                    });
                }
                None => {
                    let at = (x.floor() as u64).clamp(node.lo[branch_col], node.up[branch_col] - 1);
                    let mut down_up = node.up.clone();
                    down_up[branch_col] = at;
                    let mut up_lo = node.lo.clone();
                    up_lo[branch_col] = at + 1;
                    proof[node.id] = Some(ProofNode::SplitVar {
                        col: branch_col as u32,
                        at,
                        down: ids[0],
                        up: ids[1],
                    });
                    stack.push(Open {
                        id: ids[0],
                        lo: node.lo.clone(),
                        up: down_up,
                        hint: bound,
                        parent_dual: Some(dual.clone()),
                        cand: node.cand.clone(),
                    });
                    stack.push(Open {
                        id: ids[1],
                        lo: up_lo,
                        up: node.up,
                        hint: bound,
                        parent_dual: Some(dual),
                        cand: node.cand,
                    });
                }
            }
        }

        if opts.restart_every > 0 && processed.is_multiple_of(opts.restart_every) && stack.len() > 1 {
            let (i, _) = stack
                .iter()
                .enumerate()
                .min_by_key(|(i, o)| (o.hint, std::cmp::Reverse(*i)))
                .unwrap();
            let o = stack.remove(i);
            stack.push(o);
        }
        if opts.progress_every > 0 && processed.is_multiple_of(opts.progress_every) {
            eprintln!(
                "node {processed} open {} incumbent {incumbent} lower {running_lower} last bound {bound} {:.1?}",
                stack.len(),
                start.elapsed()
            );
        }
        let open_min = stack.iter().map(|o| o.hint).min().unwrap_or(u64::MAX);
        let lower_now = incumbent.min(open_min).min(timed_out_bound.unwrap_or(u64::MAX));
        let improved = lower_now > running_lower || bound_log.last().is_none_or(|e| e.incumbent != incumbent);
        running_lower = running_lower.max(lower_now);
        if improved {
            bound_log.push(LogEntry {
                node: processed,
                bound: running_lower,
                incumbent,
            });
        }
    }

    let proof = ProofTree {
        nodes: proof.into_iter().map(|n| n.expect("every node decided")).collect(),
        symmetry: proof_symmetry,
    };
    let lower_bound = incumbent.min(timed_out_bound.unwrap_or(u64::MAX));
    if bound_log
        .last()
        .is_none_or(|e| e.bound != lower_bound || e.incumbent != incumbent)
    {
        bound_log.push(LogEntry {
            node: processed,
            bound: lower_bound,
            incumbent,
        });
    }
    Ok(SolveResult {
        status: if timed_out_bound.is_some() {
            Status::BoundOnly
        } else {
            Status::Optimal
        },
        optimum: incumbent,
        lower_bound,
        solution: best,
        bound_log,
        proof,
        nodes: processed,
        root_bound: root_bound.min(incumbent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: &CoveringProgram) -> Option<u64> {
        let n = p.n_cols();
        let mut x = p.lower.clone();
        let mut best = None;
        loop {
            if p.check_point(&x).is_ok() {
                let v: u64 = x.iter().sum();
                best = Some(best.map_or(v, |b: u64| b.min(v)));
            }
            let mut j = 0;
            loop {
                if j == n {
                    return best;
                }
                if x[j] < p.upper[j] {
                    x[j] += 1;
                    break;
                }
                x[j] = p.lower[j];
                j += 1;
            }
        }
    }

    #[test]
    fn small_rational_recovers_fractions() {
        assert_eq!(small_rational(1.0 / 80640.0, 10_000_000), Some((1, 80640)));
        assert_eq!(small_rational(2.0 / 3.0, 1000), Some((2, 3)));
        assert_eq!(small_rational(0.5, 10), Some((1, 2)));
    }

    #[test]
    fn zero_demands() {
        let mut p = CoveringProgram::new();
        let x = p.add_col("x", 0, 3);
        p.add_row("r", 0, [(x, 1)]);
        let r = solve_integer(&p, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.status, Status::Optimal);
        assert!(r.solution.iter().all(|&v| v == 0));
    }

    #[test]
    fn odd_cycle_cover() {
        // Edges of a 5-cycle covered by vertices: optimum 3, LP 5/2.
        let mut p = CoveringProgram::new();
        for i in 0..5 {
            p.add_col(format!("v{i}"), 0, 1);
        }
        for i in 0..5 {
            p.add_row(format!("e{i}"), 1, [(i, 1), ((i + 1) % 5, 1)]);
        }
        let r = solve_integer(&p, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 3);
        assert_eq!(r.proof.check(&p).unwrap().lower_bound, 3);
        let rot: Vec<u32> = (0..5).map(|i| (i + 1) % 5).collect();
        let refl: Vec<u32> = (0..5).map(|i| (5 - i) % 5).collect();
        let opts = SolveOptions {
            symmetry: vec![rot, refl],
            ..SolveOptions::default()
        };
        let r = solve_integer(&p, &opts).unwrap();
        assert_eq!(r.optimum, 3);
        assert!(r.proof.check(&p).unwrap().lower_bound >= 3);
    }

    #[test]
    fn general_integers_match_brute_force() {
        let mut p = CoveringProgram::new();
        let a = p.add_col("a", 0, 4);
        let b = p.add_col("b", 1, 5);
        let c = p.add_col("c", 0, 3);
        p.add_row("r1", 11, [(a, 3), (b, 2)]);
        p.add_row("r2", 7, [(b, 1), (c, 3)]);
        p.add_row("r3", 5, [(a, 2), (c, 1)]);
        let r = solve_integer(&p, &SolveOptions::default()).unwrap();
        assert_eq!(Some(r.optimum), brute(&p));
        let cert = super::super::certify(&p, &r).unwrap();
        let (lo, val) = super::super::check_certificate(&p, &cert).unwrap();
        assert_eq!(lo, val);
    }

    #[test]
    fn budget_gives_bound_only_or_optimal() {
        let mut p = CoveringProgram::new();
        for i in 0..7 {
            p.add_col(format!("v{i}"), 0, 1);
        }
        for i in 0..7 {
            p.add_row(format!("e{i}"), 1, [(i, 1), ((i + 1) % 7, 1)]);
        }
        let r = solve_integer(
            &p,
            &SolveOptions {
                budget: Duration::ZERO,
                ..SolveOptions::default()
            },
        )
        .unwrap();
        assert!(r.lower_bound <= 4 && r.optimum >= 4);
        assert!(r.proof.check(&p).unwrap().lower_bound.min(r.optimum) >= r.lower_bound);
        for e in &r.bound_log {
            assert!(e.bound <= 4);
        }
    }
}
