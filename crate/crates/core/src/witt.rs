//! PG(2,4), the Steiner system S(3,6,22), and the McLaughlin graph on its points, hexads
//! and one class of heptads.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WittError {
    #[error("{name}: points {points:?} lie in {found} blocks, expected {expected}")]
    DesignCheck {
        name: String,
        points: Vec<usize>,
        found: usize,
        expected: usize,
    },
    #[error("no hyperoval class extends PG(2,4) to S(3,6,22)")]
    NoExtension,
    #[error("expected {expected} heptads, found {found}")]
    Heptads { expected: usize, found: usize },
    #[error("graph is not srg{expected:?}: {detail}")]
    NotStronglyRegular {
        expected: (usize, usize, usize, usize),
        detail: String,
    },
    #[error("no independent set of size {size} found within {tries} restarts")]
    SearchExhausted { size: usize, tries: usize },
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {0} out of range")]
    VertexRange(usize),
}

/// A block design with its claimed `t`-(v, k, λ) parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    pub name: String,
    pub points: usize,
    /// Sorted point lists.
    pub blocks: Vec<Vec<usize>>,
    pub t: usize,
    pub k: usize,
    pub lambda: usize,
}

impl Design {
    fn masks(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .map(|b| b.iter().fold(0, |m, &p| m | 1 << p))
            .collect()
    }

    /// Exhaustive check that every `t`-subset lies in exactly `lambda` blocks.
    pub fn check(&self) -> Result<(), WittError> {
        assert!(self.points <= 32);
        let masks = self.masks();
        let mut subset: Vec<usize> = (0..self.t).collect();
        loop {
            let m: u32 = subset.iter().fold(0, |m, &p| m | 1 << p);
            let found = masks.iter().filter(|&&b| b & m == m).count();
            if found != self.lambda {
                return Err(WittError::DesignCheck {
                    name: self.name.clone(),
                    points: subset,
                    found,
                    expected: self.lambda,
                });
            }
            // Next t-subset in lexicographic order.
            let Some(i) = (0..self.t).rev().find(|&i| subset[i] < self.points - self.t + i) else {
                return Ok(());
            };
            subset[i] += 1;
            for j in i + 1..self.t {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    pub fn replication(&self, p: usize) -> usize {
        self.blocks.iter().filter(|b| b.contains(&p)).count()
    }
}

// GF(4) = {0, 1, w, w^2} coded 0..3, addition is xor.
fn gf4_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    let log = [0, 0, 1, 2];
    let exp = [1, 2, 3];
    exp[(log[a as usize] + log[b as usize]) % 3]
}

fn pg24_points() -> Vec<[u8; 3]> {
    // Normalized so the first nonzero coordinate is 1.
    let mut pts = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// The projective plane of order 4: 21 points, 21 lines of 5 points.
pub fn build_pg24() -> Design {
    let pts = pg24_points();
    let blocks = pts
        .iter()
        .map(|l| {
            (0..pts.len())
                .filter(|&i| {
                    let p = pts[i];
                    (0..3).fold(0, |s, k| s ^ gf4_mul(l[k], p[k])) == 0
                })
                .collect()
        })
        .collect();
    Design {
        name: "PG(2,4)".into(),
        points: 21,
        blocks,
        t: 2,
        k: 5,
        lambda: 1,
    }
}

/// The 168 hyperovals of PG(2,4): 6-sets with no three points collinear.
pub fn hyperovals(plane: &Design) -> Vec<Vec<usize>> {
    let lines: Vec<u32> = plane.masks();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, cur: &mut Vec<usize>, lines: &[u32], out: &mut Vec<Vec<usize>>) {
        if cur.len() == 6 {
            out.push(cur.clone());
            return;
        }
        for p in start..21 {
            let m = cur.iter().fold(1u32 << p, |m, &q| m | 1 << q);
            if lines.iter().all(|&l| (l & m).count_ones() <= 2) {
                cur.push(p);
                rec(p + 1, cur, lines, out);
                cur.pop();
            }
        }
    }
    rec(0, &mut cur, &lines, &mut out);
    out
}

/// Splits hyperovals into classes under "meet in an even number of points", which are the
/// three orbits of the plane's special collineation group.
pub fn hyperoval_classes(ovals: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let masks: Vec<u32> = ovals.iter().map(|o| o.iter().fold(0, |m, &p| m | 1 << p)).collect();
    let mut class = vec![usize::MAX; ovals.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..ovals.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..ovals.len())
            .filter(|&j| (masks[i] & masks[j]).count_ones().is_multiple_of(2))
            .collect();
        for &j in &members {
            class[j] = out.len();
        }
        out.push(members);
    }
    out
}

/// S(3,6,22): PG(2,4) plus a point at infinity (22), lines extended by it, and one class
/// of 56 hyperovals. Each class is tried in turn; the first to pass the triple check wins.
pub fn build_s3622() -> Result<Design, WittError> {
    let plane = build_pg24();
    let ovals = hyperovals(&plane);
    for class in hyperoval_classes(&ovals) {
        let mut blocks: Vec<Vec<usize>> = plane
            .blocks
            .iter()
            .map(|l| {
                let mut b = l.clone();
                b.push(21);
                b
            })
            .collect();
        blocks.extend(class.iter().map(|&i| ovals[i].clone()));
        let d = Design {
            name: "S(3,6,22)".into(),
            points: 22,
            blocks,
            t: 3,
            k: 6,
            lambda: 1,
        };
        if d.blocks.len() == 77 && d.check().is_ok() {
            return Ok(d);
        }
    }
    Err(WittError::NoExtension)
}

/// The 352 seven-point sets meeting every hexad in 1 or 3 points, split into the two
/// classes of 176 (same class: meet in 1 or 3; different classes: 0, 2 or 4). Returns the
/// class containing the lexicographically first such set.
pub fn heptads(s: &Design) -> Result<Vec<Vec<usize>>, WittError> {
    let hexads = s.masks();
    let mut all: Vec<u32> = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, cur: &mut Vec<usize>, hexads: &[u32], all: &mut Vec<u32>) {
        let m: u32 = cur.iter().fold(0, |m, &p| m | 1 << p);
        // Partial sets may not already meet a hexad in more than 3 points.
        if hexads.iter().any(|&h| (h & m).count_ones() > 3) {
            return;
        }
        if cur.len() == 7 {
            if hexads.iter().all(|&h| matches!((h & m).count_ones(), 1 | 3)) {
                all.push(m);
            }
            return;
        }
        for p in start..22 {
            cur.push(p);
            rec(p + 1, cur, hexads, all);
            cur.pop();
        }
    }
    rec(0, &mut cur, &hexads, &mut all);
    let first = *all.first().ok_or(WittError::Heptads {
        expected: 176,
        found: 0,
    })?;
    let class: Vec<Vec<usize>> = all
        .iter()
        .filter(|&&m| (m & first).count_ones() % 2 == 1)
        .map(|&m| (0..22).filter(|&p| m >> p & 1 == 1).collect())
        .collect();
    if class.len() != 176 || all.len() != 352 {
        return Err(WittError::Heptads {
            expected: 176,
            found: class.len(),
        });
    }
    Ok(class)
}

const WORDS: usize = 5;

/// An undirected graph on at most 320 vertices stored as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrGraph {
    pub n: usize,
    adj: Vec<[u64; WORDS]>,
    pub labels: Vec<String>,
}

/// Strongly regular parameters `(n, k, λ, μ)`.
pub type SrgParams = (usize, usize, usize, usize);

fn popcount(a: &[u64; WORDS], b: &[u64; WORDS]) -> usize {
    (0..WORDS).map(|w| (a[w] & b[w]).count_ones() as usize).sum()
}

impl SrGraph {
    pub fn new(n: usize, labels: Vec<String>) -> SrGraph {
        assert!(n <= WORDS * 64);
        SrGraph {
            n,
            adj: vec![[0; WORDS]; n],
            labels,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u][v / 64] |= 1 << (v % 64);
        self.adj[v][u / 64] |= 1 << (u % 64);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adjacent(v, u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        popcount(&self.adj[u], &self.adj[v])
    }

    /// Exhaustive check over all vertices and pairs.
    pub fn check_srg(&self, expected: SrgParams) -> Result<(), WittError> {
        let fail = |detail: String| WittError::NotStronglyRegular { expected, detail };
        let (n, k, lambda, mu) = expected;
        if self.n != n {
            return Err(fail(format!("{} vertices", self.n)));
        }
        if let Some(v) = (0..n).find(|&v| self.degree(v) != k) {
            return Err(fail(format!("vertex {v} has degree {}", self.degree(v))));
        }
        for u in 0..n {
            for v in u + 1..n {
                let c = self.common_neighbors(u, v);
                let want = if self.adjacent(u, v) { lambda } else { mu };
                if c != want {
                    return Err(fail(format!(
                        "pair ({u},{v}) has {c} common neighbours, expected {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn dense(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.adjacent(u, v) as i64).collect())
            .collect()
    }

    /// Checks `(A - rI)(A - sI) = c J` with integer matrix arithmetic.
    pub fn check_eigen_identity(&self, r: i64, s: i64, c: i64) -> bool {
        let a = self.dense();
        let n = self.n;
        let shift = |x: i64| -> Vec<Vec<i64>> {
            (0..n)
                .map(|i| (0..n).map(|j| a[i][j] - if i == j { x } else { 0 }).collect())
                .collect()
        };
        let p = shift(r);
        let q = shift(s);
        (0..n).all(|i| (0..n).all(|j| (0..n).map(|k| p[i][k] * q[k][j]).sum::<i64>() == c))
    }

    pub fn check_independent(&self, set: &[usize]) -> Result<(), WittError> {
        for (i, &u) in set.iter().enumerate() {
            if u >= self.n {
                return Err(WittError::VertexRange(u));
            }
            for &v in &set[i + 1..] {
                if u == v || self.adjacent(u, v) {
                    return Err(WittError::NotIndependent(u, v));
                }
            }
        }
        Ok(())
    }

    /// Adjacency list text, one `v <i>: <neighbours>` line per vertex (0-based).
    pub fn render_adjacency(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            let ns: Vec<String> = self.neighbors(v).iter().map(|u| u.to_string()).collect();
            writeln!(out, "v {v}: {}", ns.join(" ")).unwrap();
        }
        out
    }

    pub fn parse_adjacency(text: &str) -> Result<SrGraph, String> {
        let mut lists: Vec<Vec<usize>> = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let rest = line
                .strip_prefix(&format!("v {i}:"))
                .ok_or_else(|| format!("line {}: expected `v {i}:`", i + 1))?;
            let ns = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| format!("line {}: bad vertex `{t}`", i + 1))
                })
                .collect::<Result<Vec<_>, _>>()?;
            lists.push(ns);
        }
        let n = lists.len();
        if n > WORDS * 64 {
            return Err(format!("{n} vertices is too many"));
        }
        let mut g = SrGraph::new(n, (0..n).map(|v| v.to_string()).collect());
        for (v, ns) in lists.iter().enumerate() {
            for &u in ns {
                if u >= n || u == v {
                    return Err(format!("vertex {v}: bad neighbour {u}"));
                }
                g.add_edge(v, u);
            }
        }
        if (0..n).any(|v| g.degree(v) != lists[v].len()) {
            return Err("adjacency lists are not symmetric".into());
        }
        Ok(g)
    }
}

pub const MCLAUGHLIN_PARAMS: SrgParams = (275, 112, 30, 56);

/// Vertices 0..22 are points, 22..99 hexads, 99..275 heptads. Points are pairwise
/// non-adjacent; a point is adjacent to the hexads missing it and the heptads containing
/// it; hexads are adjacent when disjoint; a hexad and a heptad when they share 3 points;
/// heptads when they share 1 point.
pub fn build_mclaughlin_graph() -> Result<SrGraph, WittError> {
    let s = build_s3622()?;
    let hep = heptads(&s)?;
    let mask = |b: &[usize]| b.iter().fold(0u32, |m, &p| m | 1 << p);
    let hexads: Vec<u32> = s.blocks.iter().map(|b| mask(b)).collect();
    let heps: Vec<u32> = hep.iter().map(|b| mask(b)).collect();
    let mut labels: Vec<String> = (0..22).map(|p| format!("p{p}")).collect();
    labels.extend((0..hexads.len()).map(|i| format!("hexad{i}")));
    labels.extend((0..heps.len()).map(|i| format!("heptad{i}")));
    let mut g = SrGraph::new(22 + hexads.len() + heps.len(), labels);
    let bx = 22;
    let hx = 22 + hexads.len();
    for p in 0..22 {
        for (i, &b) in hexads.iter().enumerate() {
            if b >> p & 1 == 0 {
                g.add_edge(p, bx + i);
            }
        }
        for (i, &h) in heps.iter().enumerate() {
            if h >> p & 1 == 1 {
                g.add_edge(p, hx + i);
            }
        }
    }
    for (i, &b) in hexads.iter().enumerate() {
        for (j, &c) in hexads.iter().enumerate().skip(i + 1) {
            if b & c == 0 {
                g.add_edge(bx + i, bx + j);
            }
        }
        for (j, &h) in heps.iter().enumerate() {
            if (b & h).count_ones() == 3 {
                g.add_edge(bx + i, hx + j);
            }
        }
    }
    for (i, &h) in heps.iter().enumerate() {
        for (j, &k) in heps.iter().enumerate().skip(i + 1) {
            if (h & k).count_ones() == 1 {
                g.add_edge(hx + i, hx + j);
            }
        }
    }
    g.check_srg(MCLAUGHLIN_PARAMS)?;
    Ok(g)
}

/// Searches for an independent set of `size` vertices: randomized greedy construction
/// followed by swap-based local search, restarted up to `restarts` times.
pub fn independent_set(g: &SrGraph, size: usize, seed: u64, restarts: usize) -> Result<Vec<usize>, WittError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n;
    for _ in 0..restarts.max(1) {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        // conflicts[v] = number of set members adjacent to v.
        let mut in_set = vec![false; n];
        let mut conflicts = vec![0usize; n];
        let mut set: Vec<usize> = Vec::new();
        let insert = |v: usize, in_set: &mut Vec<bool>, conflicts: &mut Vec<usize>, set: &mut Vec<usize>| {
            in_set[v] = true;
            set.push(v);
            for u in g.neighbors(v) {
                conflicts[u] += 1;
            }
        };
        let remove = |v: usize, in_set: &mut Vec<bool>, conflicts: &mut Vec<usize>, set: &mut Vec<usize>| {
            in_set[v] = false;
            set.retain(|&x| x != v);
            for u in g.neighbors(v) {
                conflicts[u] -= 1;
            }
        };
        for &v in &order {
            if conflicts[v] == 0 && !in_set[v] {
                insert(v, &mut in_set, &mut conflicts, &mut set);
            }
        }
        let mut tabu = vec![0usize; n];
        for step in 1..20_000usize {
            if set.len() >= size {
                set.truncate(size);
                set.sort_unstable();
                g.check_independent(&set)?;
                return Ok(set);
            }
            // Free vertices first; otherwise a (1,1)-swap through a one-conflict vertex,
            // and occasionally a random perturbation.
            let free: Vec<usize> = (0..n).filter(|&v| !in_set[v] && conflicts[v] == 0).collect();
            if let Some(&v) = free.choose(&mut rng) {
                insert(v, &mut in_set, &mut conflicts, &mut set);
                continue;
            }
            let ones: Vec<usize> = (0..n)
                .filter(|&v| !in_set[v] && conflicts[v] == 1 && tabu[v] <= step)
                .collect();
            let v = if !ones.is_empty() && rng.gen_bool(0.95) {
                *ones.choose(&mut rng).unwrap()
            } else {
                rng.gen_range(0..n)
            };
            if in_set[v] {
                continue;
            }
            let clash: Vec<usize> = set.iter().copied().filter(|&u| g.adjacent(u, v)).collect();
            for u in clash {
                remove(u, &mut in_set, &mut conflicts, &mut set);
                tabu[u] = step + 7;
            }
            insert(v, &mut in_set, &mut conflicts, &mut set);
        }
    }
    Err(WittError::SearchExhausted { size, tries: restarts })
}

/// Outcome of the induced-subgraph edge bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBound {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub alpha: usize,
}

impl EdgeBound {
    /// `edges >= |W| - alpha`: one vertex per component is independent, so there are at
    /// most `alpha` components, and a graph with `c` components has at least `|W| - c` edges.
    pub fn holds(&self) -> bool {
        self.components <= self.alpha
            && self.edges + self.components >= self.vertices
            && self.edges + self.alpha >= self.vertices
    }
}

pub fn induced_edge_bound(g: &SrGraph, w: &[usize], alpha: usize) -> EdgeBound {
    let mut inside = vec![false; g.n];
    for &v in w {
        inside[v] = true;
    }
    let mut edges = 0;
    for (i, &u) in w.iter().enumerate() {
        edges += w[i + 1..].iter().filter(|&&v| g.adjacent(u, v)).count();
    }
    let mut seen = vec![false; g.n];
    let mut reps = Vec::new();
    for &s in w {
        if seen[s] {
            continue;
        }
        reps.push(s);
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if inside[v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    debug_assert!(g.check_independent(&reps).is_ok());
    EdgeBound {
        vertices: w.len(),
        edges,
        components: reps.len(),
        alpha,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_and_extension() {
        let p = build_pg24();
        p.check().unwrap();
        assert_eq!((p.points, p.blocks.len()), (21, 21));
        assert!((0..21).all(|x| p.replication(x) == 5));
        let ovals = hyperovals(&p);
        assert_eq!(ovals.len(), 168);
        let classes = hyperoval_classes(&ovals);
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), vec![56, 56, 56]);
        let s = build_s3622().unwrap();
        assert_eq!(s.blocks.len(), 77);
        assert!((0..22).all(|x| s.replication(x) == 21));
    }

    #[test]
    fn broken_design_rejected() {
        let mut s = build_s3622().unwrap();
        s.blocks.pop();
        assert!(matches!(s.check(), Err(WittError::DesignCheck { found: 0, .. })));
    }

    #[test]
    fn small_srg() {
        // The pentagon is srg(5,2,0,1).
        let mut g = SrGraph::new(5, vec![String::new(); 5]);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
        }
        g.check_srg((5, 2, 0, 1)).unwrap();
        assert!(g.check_srg((5, 2, 1, 1)).is_err());
        assert_eq!(SrGraph::parse_adjacency(&g.render_adjacency()).unwrap().edge_count(), 5);
        let b = induced_edge_bound(&g, &[0, 1, 2, 3, 4], 2);
        assert_eq!((b.edges, b.components), (5, 1));
        assert!(b.holds());
        assert_eq!(independent_set(&g, 2, 0, 5).unwrap().len(), 2);
        assert!(independent_set(&g, 3, 0, 2).is_err());
    }
}
