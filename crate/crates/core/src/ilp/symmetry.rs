//! Column permutations that preserve a covering program, closed into an explicit group.

use rustc_hash::{FxHashMap, FxHashSet};

use super::CoveringProgram;

/// Largest symmetry group enumerated explicitly.
pub(crate) const GROUP_CAP: usize = 250_000;

/// An explicit permutation group on columns, stored flat.
#[derive(Debug, Clone)]
pub struct ColumnGroup {
    n: usize,
    elems: Vec<u16>,
}

impl ColumnGroup {
    pub fn len(&self) -> usize {
        self.elems.len() / self.n.max(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn image(&self, e: u32, j: usize) -> usize {
        self.elems[e as usize * self.n + j] as usize
    }
}

fn row_key(p: &CoveringProgram, r: usize, perm: Option<&[u32]>) -> (u64, Vec<(u32, u64)>) {
    let mut row: Vec<(u32, u64)> = match perm {
        Some(s) => p.rows[r].iter().map(|&(c, v)| (s[c as usize], v)).collect(),
        None => p.rows[r].clone(),
    };
    row.sort_unstable();
    (p.demand[r], row)
}

/// Checks that `perm` permutes columns, preserves bounds and maps the multiset of rows onto
/// itself.
pub fn verify_automorphism(p: &CoveringProgram, perm: &[u32]) -> Result<(), String> {
    let n = p.n_cols();
    if perm.len() != n {
        return Err(format!("has {} images for {n} columns", perm.len()));
    }
    let mut hit = vec![false; n];
    for &j in perm {
        if j as usize >= n || std::mem::replace(&mut hit[j as usize], true) {
            return Err("is not a permutation".into());
        }
    }
    for (j, &k) in perm.iter().enumerate() {
        let k = k as usize;
        if p.lower[j] != p.lower[k] || p.upper[j] != p.upper[k] {
            return Err(format!("moves column {j} to {k} with different bounds"));
        }
    }
    let mut counts: FxHashMap<(u64, Vec<(u32, u64)>), i64> = FxHashMap::default();
    for r in 0..p.n_rows() {
        *counts.entry(row_key(p, r, None)).or_default() += 1;
        *counts.entry(row_key(p, r, Some(perm))).or_default() -= 1;
    }
    if counts.values().any(|&c| c != 0) {
        return Err("does not map rows to rows".into());
    }
    Ok(())
}

/// Enumerates the group generated by `gens`; `None` when it exceeds `cap` elements or the
/// columns do not fit 16-bit images.
pub fn close_column_group(gens: &[Vec<u32>], cap: usize) -> Option<ColumnGroup> {
    let n = gens.first().map_or(0, |g| g.len());
    if n > u16::MAX as usize {
        return None;
    }
    let identity: Vec<u16> = (0..n as u16).collect();
    let gens16: Vec<Vec<u16>> = gens.iter().map(|g| g.iter().map(|&x| x as u16).collect()).collect();
    let mut seen: FxHashSet<Vec<u16>> = FxHashSet::default();
    seen.insert(identity.clone());
    let mut elems: Vec<u16> = identity;
    let mut head = 0;
    while head * n < elems.len() {
        for s in &gens16 {
            let e = &elems[head * n..(head + 1) * n];
            let prod: Vec<u16> = e.iter().map(|&x| s[x as usize]).collect();
            if seen.insert(prod.clone()) {
                if seen.len() > cap {
                    return None;
                }
                elems.extend_from_slice(&prod);
            }
        }
        head += 1;
        if n == 0 {
            break;
        }
    }
    Some(ColumnGroup { n, elems })
}

/// Members of `candidates` that preserve the node's bound vectors.
pub(crate) fn node_stabilizer(g: &ColumnGroup, candidates: &[u32], lo: &[u64], up: &[u64]) -> Vec<u32> {
    candidates
        .iter()
        .copied()
        .filter(|&e| {
            (0..lo.len()).all(|j| {
                let k = g.image(e, j);
                lo[k] == lo[j] && up[k] == up[j]
            })
        })
        .collect()
}

/// Orbit of `rep` under a subgroup given by its full element list, sorted.
pub(crate) fn orbit_of(g: &ColumnGroup, stab: &[u32], rep: usize) -> Vec<u32> {
    let mut o: Vec<u32> = stab.iter().map(|&e| g.image(e, rep) as u32).collect();
    o.sort_unstable();
    o.dedup();
    if o.is_empty() {
        o.push(rep as u32);
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> CoveringProgram {
        let mut p = CoveringProgram::new();
        for i in 0..3 {
            p.add_col(format!("c{i}"), 0, 1);
        }
        p.add_row("a", 1, [(0, 1), (1, 1)]);
        p.add_row("b", 1, [(1, 1), (2, 1)]);
        p.add_row("c", 1, [(2, 1), (0, 1)]);
        p
    }

    #[test]
    fn rotation_is_automorphism() {
        let p = triangle();
        assert!(verify_automorphism(&p, &[1, 2, 0]).is_ok());
        assert!(verify_automorphism(&p, &[1, 0, 2]).is_ok());
        let g = close_column_group(&[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
        assert_eq!(g.len(), 6);
        let all: Vec<u32> = (0..6).collect();
        assert_eq!(orbit_of(&g, &all, 0), vec![0, 1, 2]);
        let stab = node_stabilizer(&g, &all, &[1, 0, 0], &[1, 1, 1]);
        assert_eq!(stab.len(), 2);
        assert_eq!(orbit_of(&g, &stab, 1), vec![1, 2]);
    }

    #[test]
    fn non_automorphism_rejected() {
        let mut p = triangle();
        p.add_row("d", 1, [(0, 1)]);
        assert!(verify_automorphism(&p, &[1, 2, 0]).is_err());
        assert!(verify_automorphism(&p, &[0, 0, 1]).is_err());
    }

    #[test]
    fn cap_respected() {
        let gens = vec![vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
        assert!(close_column_group(&gens, 50).is_none());
        assert_eq!(close_column_group(&gens, 200).unwrap().len(), 120);
    }
}
