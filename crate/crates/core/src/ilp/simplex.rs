//! Bounded-variable primal simplex on a dense tableau, generic over the scalar type.
//!
//! Solves `min c.x` subject to `A x >= d`, `l <= x <= u` for nonnegative `A`, `c`. Each
//! row gets a surplus variable `s_i >= 0` with `A_i x - s_i = d_i`. Starting with every
//! structural variable at its upper bound and the surplus variables basic gives a feasible
//! basis whenever the program is feasible, so no phase one is needed.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait LpScalar: Clone + Debug + PartialOrd {
    fn zero() -> Self;
    fn from_u64(v: u64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn is_zero(&self) -> bool {
        !self.is_pos() && !self.is_neg()
    }
    fn to_f64(&self) -> f64;
    /// Small deterministic offset added to the dual right-hand side against degenerate
    /// cycling; zero for exact scalars. Any nonnegative dual still certifies a valid bound.
    fn perturbation(_j: usize) -> Self {
        Self::zero()
    }
    /// Whether ties and entering choices must follow Bland's rule from the first pivot.
    const EXACT: bool;
}

const EPS: f64 = 1e-9;

impl LpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_u64(v: u64) -> Self {
        v as f64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_pos(&self) -> bool {
        *self > EPS
    }
    fn is_neg(&self) -> bool {
        *self < -EPS
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn perturbation(j: usize) -> Self {
        let h = (j as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 11;
        1e-7 * (1.0 + (h as f64) / (1u64 << 53) as f64)
    }
    const EXACT: bool = false;
}

impl LpScalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    const EXACT: bool = true;
}

/// A dense covering LP: `min sum(cost_j x_j)`, `rows[i].x >= demand[i]`, `lower <= x <= upper`.
#[derive(Debug, Clone)]
pub struct DenseLp {
    pub cost: Vec<u64>,
    pub lower: Vec<u64>,
    pub upper: Vec<u64>,
    pub demand: Vec<u64>,
    /// Row-major `m x n` coefficient matrix.
    pub coeffs: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal {
        value: T,
        point: Vec<T>,
        /// Row duals (nonnegative at optimality).
        duals: Vec<T>,
    },
    Infeasible {
        row: usize,
    },
    IterationLimit,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum At {
    Lower,
    Upper,
    Basic,
}

pub fn solve<T: LpScalar>(lp: &DenseLp, max_iters: usize) -> LpOutcome<T> {
    let m = lp.demand.len();
    let n = lp.cost.len();
    let total = n + m;

    for (i, row) in lp.coeffs.iter().enumerate() {
        let cap: u128 = row.iter().zip(&lp.upper).map(|(&a, &u)| a as u128 * u as u128).sum();
        if cap < lp.demand[i] as u128 {
            return LpOutcome::Infeasible { row: i };
        }
    }

    // tableau[i] = B^-1 [A | -I], initially [-A | I] for B = -I.
    let mut tab: Vec<Vec<T>> = lp
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<T> = row.iter().map(|&a| T::zero().sub(&T::from_u64(a))).collect();
            r.extend((0..m).map(|k| if k == i { T::from_u64(1) } else { T::zero() }));
            r
        })
        .collect();
    let lower: Vec<T> = lp
        .lower
        .iter()
        .map(|&v| T::from_u64(v))
        .chain((0..m).map(|_| T::zero()))
        .collect();
    let upper: Vec<Option<T>> = lp
        .upper
        .iter()
        .map(|&v| Some(T::from_u64(v)))
        .chain((0..m).map(|_| None))
        .collect();
    let mut value: Vec<T> = lp.upper.iter().map(|&v| T::from_u64(v)).collect();
    for i in 0..m {
        let act = lp.coeffs[i]
            .iter()
            .zip(&lp.upper)
            .fold(T::zero(), |acc, (&a, &u)| acc.add(&T::from_u64(a).mul(&T::from_u64(u))));
        value.push(act.sub(&T::from_u64(lp.demand[i])));
    }
    let mut state: Vec<At> = (0..n).map(|_| At::Upper).chain((0..m).map(|_| At::Basic)).collect();
    let mut basis: Vec<usize> = (n..total).collect();
    let mut rc: Vec<T> = lp
        .cost
        .iter()
        .map(|&c| T::from_u64(c))
        .chain((0..m).map(|_| T::zero()))
        .collect();

    let mut degenerate_run = 0usize;
    for _ in 0..max_iters {
        let bland = T::EXACT || degenerate_run > 50;
        // Entering variable.
        let mut entering: Option<(usize, f64)> = None;
        for j in 0..total {
            let improving = match state[j] {
                At::Basic => false,
                At::Lower => rc[j].is_neg() && upper[j].as_ref().is_none_or(|u| lower[j] < *u),
                At::Upper => rc[j].is_pos() && lower[j] < value[j],
            };
            if !improving {
                continue;
            }
            let score = rc[j].to_f64().abs();
            if bland {
                entering = Some((j, score));
                break;
            }
            if entering.is_none_or(|(_, s)| score > s) {
                entering = Some((j, score));
            }
        }
        let Some((q, _)) = entering else {
            let obj = (0..n).fold(T::zero(), |acc, j| acc.add(&T::from_u64(lp.cost[j]).mul(&value[j])));
            return LpOutcome::Optimal {
                value: obj,
                point: value[..n].to_vec(),
                duals: rc[n..].to_vec(),
            };
        };
        let increasing = state[q] == At::Lower;

        // Ratio test. Basic variable in row i moves by delta_i * t.
        let mut best_t: Option<T> = match &upper[q] {
            Some(u) => Some(u.sub(&lower[q])),
            None => None,
        };
        let mut leave: Option<(usize, bool)> = None; // (row, hits upper)
        for (i, row) in tab.iter().enumerate() {
            let tq = &row[q];
            if tq.is_zero() {
                continue;
            }
            let delta = if increasing { T::zero().sub(tq) } else { tq.clone() };
            let b = basis[i];
            let (limit, hits_upper) = if delta.is_neg() {
                (value[b].sub(&lower[b]).div(&T::zero().sub(&delta)), false)
            } else {
                match &upper[b] {
                    Some(u) => (u.sub(&value[b]).div(&delta), true),
                    None => continue,
                }
            };
            let limit = if limit.is_neg() { T::zero() } else { limit };
            let better = match &best_t {
                None => true,
                Some(t) => {
                    let diff = limit.sub(t);
                    diff.is_neg()
                        || (diff.is_zero()
                            && match leave {
                                // Bland: smallest leaving index among ties; a bound flip
                                // (no leaving row yet) is kept.
                                Some((r, _)) => basis[i] < basis[r],
                                None => false,
                            })
                }
            };
            if better {
                best_t = Some(limit);
                leave = Some((i, hits_upper));
            }
        }
        let Some(t) = best_t else {
            // Unbounded below cannot happen for nonnegative costs.
            return LpOutcome::IterationLimit;
        };
        degenerate_run = if t.is_zero() { degenerate_run + 1 } else { 0 };

        // Move values.
        let signed_t = if increasing { t.clone() } else { T::zero().sub(&t) };
        for (i, row) in tab.iter().enumerate() {
            let b = basis[i];
            let d = T::zero().sub(&row[q]).mul(&signed_t);
            value[b] = value[b].add(&d);
        }
        value[q] = value[q].add(&signed_t);

        match leave {
            None => {
                // Bound flip.
                state[q] = if increasing { At::Upper } else { At::Lower };
                value[q] = if increasing {
                    upper[q].clone().expect("flip needs finite upper")
                } else {
                    lower[q].clone()
                };
            }
            Some((r, hits_upper)) => {
                let out = basis[r];
                state[out] = if hits_upper { At::Upper } else { At::Lower };
                value[out] = if hits_upper {
                    upper[out].clone().unwrap()
                } else {
                    lower[out].clone()
                };
                let piv = tab[r][q].clone();
                for x in tab[r].iter_mut() {
                    *x = x.div(&piv);
                }
                let pivot_row = tab[r].clone();
                for (i, row) in tab.iter_mut().enumerate() {
                    if i == r || row[q].is_zero() {
                        continue;
                    }
                    let f = row[q].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        if !p.is_zero() {
                            *x = x.sub(&f.mul(p));
                        }
                    }
                }
                let f = rc[q].clone();
                for (x, p) in rc.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.sub(&f.mul(p));
                    }
                }
                basis[r] = q;
                state[q] = At::Basic;
            }
        }
    }
    LpOutcome::IterationLimit
}

/// Solves the same LP through its packing dual, which is cheaper when rows outnumber
/// columns: with `x = l + x'` and `d' = max(0, d - A l)`, the dual is
/// `max d'.y - u'.z` subject to `A^T y - z <= c`, `y, z >= 0`, whose slack basis is feasible.
/// The primal point is read off the slack reduced costs.
pub fn solve_dual<T: LpScalar>(lp: &DenseLp, max_iters: usize) -> LpOutcome<T> {
    let m = lp.demand.len();
    let n = lp.cost.len();
    for (i, row) in lp.coeffs.iter().enumerate() {
        let cap: u128 = row.iter().zip(&lp.upper).map(|(&a, &u)| a as u128 * u as u128).sum();
        if cap < lp.demand[i] as u128 {
            return LpOutcome::Infeasible { row: i };
        }
    }
    let demand: Vec<u64> = lp
        .coeffs
        .iter()
        .zip(&lp.demand)
        .map(|(row, &d)| {
            let act: u128 = row.iter().zip(&lp.lower).map(|(&a, &l)| a as u128 * l as u128).sum();
            (d as u128).saturating_sub(act) as u64
        })
        .collect();
    let active: Vec<usize> = (0..m).filter(|&i| demand[i] > 0).collect();
    let ma = active.len();
    // Columns: y (ma), z (n), s (n), then the right-hand side.
    let width = ma + 2 * n;
    let mut tab: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let mut r = vec![T::zero(); width + 1];
            for (k, &i) in active.iter().enumerate() {
                let a = lp.coeffs[i][j];
                if a != 0 {
                    r[k] = T::from_u64(a);
                }
            }
            r[ma + j] = T::from_u64(0).sub(&T::from_u64(1));
            r[ma + n + j] = T::from_u64(1);
            r[width] = T::from_u64(lp.cost[j]).add(&T::perturbation(j));
            r
        })
        .collect();
    let mut rc: Vec<T> = active
        .iter()
        .map(|&i| T::from_u64(demand[i]))
        .chain((0..n).map(|j| T::zero().sub(&T::from_u64(lp.upper[j] - lp.lower[j]))))
        .chain((0..n).map(|_| T::zero()))
        .collect();
    let mut basis: Vec<usize> = (ma + n..width).collect();
    let mut degenerate_run = 0usize;
    for _ in 0..max_iters {
        let bland = T::EXACT || degenerate_run > 50;
        let mut entering: Option<(usize, f64)> = None;
        for (k, r) in rc.iter().enumerate() {
            if !r.is_pos() {
                continue;
            }
            let score = r.to_f64();
            if bland {
                entering = Some((k, score));
                break;
            }
            if entering.is_none_or(|(_, s)| score > s) {
                entering = Some((k, score));
            }
        }
        let Some((q, _)) = entering else {
            let xs: Vec<T> = (0..n).map(|j| T::from_u64(lp.lower[j]).sub(&rc[ma + n + j])).collect();
            let value = (0..n).fold(T::zero(), |acc, j| acc.add(&T::from_u64(lp.cost[j]).mul(&xs[j])));
            let mut duals = vec![T::zero(); m];
            for (r, &b) in basis.iter().enumerate() {
                if b < ma {
                    duals[active[b]] = tab[r][width].clone();
                }
            }
            return LpOutcome::Optimal {
                value,
                point: xs,
                duals,
            };
        };
        let mut leave: Option<(usize, T)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[q].is_pos() {
                continue;
            }
            let ratio = row[width].div(&row[q]);
            let better = match &leave {
                None => true,
                Some((l, t)) => {
                    let diff = ratio.sub(t);
                    diff.is_neg() || (diff.is_zero() && basis[r] < basis[*l])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((r, t)) = leave else {
            // The primal is feasible, so the dual is bounded.
            return LpOutcome::IterationLimit;
        };
        degenerate_run = if t.is_zero() { degenerate_run + 1 } else { 0 };
        let piv = tab[r][q].clone();
        for x in tab[r].iter_mut() {
            if !x.is_zero() {
                *x = x.div(&piv);
            }
        }
        let pivot_row = tab[r].clone();
        let nz: Vec<usize> = (0..=width).filter(|&k| !pivot_row[k].is_zero()).collect();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[q].is_zero() {
                continue;
            }
            let f = row[q].clone();
            for &k in &nz {
                row[k] = row[k].sub(&f.mul(&pivot_row[k]));
            }
        }
        let f = rc[q].clone();
        for &k in nz.iter().filter(|&&k| k < width) {
            rc[k] = rc[k].sub(&f.mul(&pivot_row[k]));
        }
        basis[r] = q;
    }
    LpOutcome::IterationLimit
}

/// Exact solve with rationals and Bland's rule.
pub fn solve_exact(lp: &DenseLp) -> LpOutcome<BigRational> {
    solve_best::<BigRational>(lp, usize::MAX)
}

/// Primal tableau for wide programs, packing dual for tall ones.
pub fn solve_best<T: LpScalar>(lp: &DenseLp, max_iters: usize) -> LpOutcome<T> {
    if lp.demand.len() > lp.cost.len() {
        solve_dual(lp, max_iters)
    } else {
        solve(lp, max_iters)
    }
}

pub fn ratio_ceil(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

pub fn ratio_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(cost: &[u64], upper: &[u64], demand: &[u64], coeffs: &[&[u64]]) -> DenseLp {
        DenseLp {
            cost: cost.to_vec(),
            lower: vec![0; cost.len()],
            upper: upper.to_vec(),
            demand: demand.to_vec(),
            coeffs: coeffs.iter().map(|r| r.to_vec()).collect(),
        }
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_row() {
        let p = lp(&[1], &[5], &[3], &[&[2]]);
        match solve_exact(&p) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(3, 2)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn prefers_cheaper_coverage() {
        // 36 x1 + 16 x3 >= 1008, x1 <= 28
        let p = lp(&[1, 1], &[28, 63], &[1008], &[&[36, 16]]);
        match solve_exact(&p) {
            LpOutcome::Optimal { value, point, duals } => {
                assert_eq!(value, rat(28, 1));
                assert_eq!(point, vec![rat(28, 1), rat(0, 1)]);
                // Degenerate vertex: any multiplier in [1/36, 1/16] certifies 28.
                assert!(duals[0] >= rat(1, 36) && duals[0] <= rat(1, 16));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn float_and_exact_agree() {
        let p = lp(
            &[1, 1, 1],
            &[4, 4, 4],
            &[3, 3, 3],
            &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]],
        );
        let exact = match solve_exact(&p) {
            LpOutcome::Optimal { value, .. } => value,
            o => panic!("{o:?}"),
        };
        assert_eq!(exact, rat(9, 2));
        match solve::<f64>(&p, 10_000) {
            LpOutcome::Optimal { value, .. } => assert!((value - 4.5).abs() < 1e-9),
            o => panic!("{o:?}"),
        }
        match solve_dual::<BigRational>(&p, usize::MAX) {
            LpOutcome::Optimal { value, point, duals } => {
                assert_eq!(value, exact);
                assert_eq!(point.iter().fold(rat(0, 1), |a, x| a + x), exact);
                assert_eq!(duals.iter().fold(rat(0, 1), |a, y| a + y * rat(3, 1)), exact);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let p = lp(&[1], &[1], &[3], &[&[2]]);
        assert_eq!(solve_exact(&p), LpOutcome::Infeasible { row: 0 });
    }

    #[test]
    fn lower_bounds_respected() {
        let mut p = lp(&[1, 1], &[5, 5], &[2], &[&[1, 1]]);
        p.lower = vec![3, 0];
        match solve_exact(&p) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(3, 1)),
            o => panic!("{o:?}"),
        }
    }
}
