//! Covers by maximal subgroups, their verification, and the lower-bound arguments that
//! combine into a covering number.
//!
//! The pipeline in [`sigma`]:
//!
//! 1. forced classes: principal classes met by a single subgroup class force that whole class;
//! 2. the class-level program over the `b` counts, plus one directly counted row per fused
//!    group of principal classes, with forced columns fixed at their orbit size;
//! 3. the cheapest union of whole subgroup classes that covers, checked element by element;
//! 4. if the two bounds differ, an element-level residual: the principal classes missed by the
//!    forced classes, covered by the remaining conjugates, solved with orbital branching under
//!    the conjugation action.

use std::time::Duration;

use rustc_hash::{FxHashMap, FxHashSet};
use thiserror::Error;

use crate::ilp::{solve_integer, CoveringProgram, IlpError, SolveOptions, SolveResult, Status};
use crate::perm::{analyze, ClassTable, GroupTable};
use crate::subgroups::{
    fingerprint, forced_subgroups, incidence_matrix_a, Forced, IncidenceMatrices, SubgroupClass, SubgroupError,
};

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("unknown subgroup class `{0}`")]
    UnknownClass(String),
    #[error("conjugate {conj} out of range for class {class}")]
    BadConjugate { class: String, conj: usize },
    #[error("the group is cyclic: no cover exists")]
    Cyclic,
    #[error("group of order {0} is too large for lattice enumeration")]
    TooLarge(usize),
    #[error("residual: {0} target rows but an empty pool")]
    EmptyPool(usize),
    #[error("replacement: {0}")]
    Replacement(String),
    #[error("fused row {row}: direct count {direct} disagrees with summed b {summed} for {subgroup}")]
    FusedCount {
        row: String,
        subgroup: String,
        direct: u64,
        summed: u64,
    },
    #[error(transparent)]
    Ilp(#[from] IlpError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

/// A selection of conjugates, named by subgroup class label and conjugate position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cover {
    pub selection: Vec<(String, usize)>,
}

impl Cover {
    pub fn size(&self) -> usize {
        self.selection.len()
    }
}

fn class_by_label<'a>(subgroups: &'a [SubgroupClass], label: &str) -> Result<(usize, &'a SubgroupClass), CoverError> {
    subgroups
        .iter()
        .enumerate()
        .find(|(_, s)| s.id == label)
        .ok_or_else(|| CoverError::UnknownClass(label.to_string()))
}

/// Every conjugate of every named class.
pub fn union_cover(subgroups: &[SubgroupClass], labels: &[&str]) -> Result<Cover, CoverError> {
    let mut selection = Vec::new();
    for l in labels {
        let (_, s) = class_by_label(subgroups, l)?;
        selection.extend((0..s.orbit.len()).map(|i| (s.id.clone(), i)));
    }
    Ok(Cover { selection })
}

/// An element missed by a selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uncovered {
    pub element: u32,
    pub class: String,
}

fn covered_mask(g: &GroupTable, subgroups: &[SubgroupClass], cover: &Cover) -> Result<Vec<bool>, CoverError> {
    let mut covered = vec![false; g.order()];
    let mut seen = FxHashSet::default();
    for (label, conj) in &cover.selection {
        let (ci, s) = class_by_label(subgroups, label)?;
        if *conj >= s.orbit.len() {
            return Err(CoverError::BadConjugate {
                class: label.clone(),
                conj: *conj,
            });
        }
        if !seen.insert((ci, *conj)) {
            continue;
        }
        for &x in &s.orbit[*conj] {
            covered[x as usize] = true;
        }
    }
    Ok(covered)
}

/// Checks that every principal element lies in a selected conjugate, which suffices because
/// every element is a power of a principal one.
pub fn verify_cover(
    g: &GroupTable,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    cover: &Cover,
) -> Result<Option<Uncovered>, CoverError> {
    let covered = covered_mask(g, subgroups, cover)?;
    for c in classes.iter().filter(|c| c.principal) {
        if let Some(&x) = c.members.iter().find(|&&x| !covered[x as usize]) {
            return Ok(Some(Uncovered {
                element: x,
                class: c.id.clone(),
            }));
        }
    }
    Ok(None)
}

/// Checks every element of the group, not only the principal ones.
pub fn verify_cover_all_elements(
    g: &GroupTable,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    cover: &Cover,
) -> Result<Option<Uncovered>, CoverError> {
    let covered = covered_mask(g, subgroups, cover)?;
    Ok((0..g.order() as u32)
        .find(|&x| !covered[x as usize])
        .map(|x| Uncovered {
            element: x,
            class: classes[classes.class_of(x)].id.clone(),
        }))
}

/// A constraint over subgroup classes for a whole fused group of principal classes, with
/// coefficients counted directly in each representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedRow {
    pub label: String,
    pub classes: Vec<usize>,
    /// Elements of the fused classes inside the representative of each subgroup class.
    pub coeffs: Vec<u64>,
    pub demand: u64,
}

/// One refined row per fused group, cross-checked against the summed `b` entries.
pub fn refined_rows(
    mats: &IncidenceMatrices,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
) -> Result<Vec<RefinedRow>, CoverError> {
    let mut out = Vec::new();
    for fg in mats.fused_groups() {
        let mut coeffs = Vec::with_capacity(subgroups.len());
        for (m, s) in subgroups.iter().enumerate() {
            let direct = s
                .rep_elements
                .iter()
                .filter(|&&x| fg.classes.contains(&classes.class_of(x)))
                .count() as u64;
            let summed: u64 = fg.classes.iter().map(|&k| mats.b[k][m]).sum();
            if direct != summed {
                return Err(CoverError::FusedCount {
                    row: fg.label.clone(),
                    subgroup: s.id.clone(),
                    direct,
                    summed,
                });
            }
            coeffs.push(direct);
        }
        out.push(RefinedRow {
            label: fg.label.clone(),
            demand: fg.classes.iter().map(|&k| mats.class_sizes[k]).sum(),
            classes: fg.classes,
            coeffs,
        });
    }
    Ok(out)
}

/// The class-level covering program: one column per subgroup class bounded by its orbit
/// size (fixed at it when forced), one row per principal class and one per refined row.
pub fn class_program(mats: &IncidenceMatrices, refined: &[RefinedRow], forced: &[Forced]) -> CoveringProgram {
    let mut p = CoveringProgram::new();
    for (m, label) in mats.subgroup_labels.iter().enumerate() {
        let size = mats.orbit_sizes[m];
        let lb = if forced.iter().any(|f| f.subgroup == m) {
            size
        } else {
            0
        };
        p.add_col(label.clone(), lb, size);
    }
    for k in mats.principal_rows() {
        p.add_row(
            mats.class_labels[k].clone(),
            mats.class_sizes[k],
            mats.b[k].iter().copied().enumerate(),
        );
    }
    for r in refined {
        p.add_row(
            format!("fused-{}", r.label),
            r.demand,
            r.coeffs.iter().copied().enumerate(),
        );
    }
    p
}

#[derive(Debug, Clone)]
pub struct ClassBound {
    pub program: CoveringProgram,
    pub result: SolveResult,
}

impl ClassBound {
    pub fn bound(&self) -> u64 {
        self.result.lower_bound
    }
}

pub fn class_lower_bound(
    mats: &IncidenceMatrices,
    refined: &[RefinedRow],
    forced: &[Forced],
    budget: Duration,
) -> Result<ClassBound, CoverError> {
    let program = class_program(mats, refined, forced);
    let result = solve_integer(
        &program,
        &SolveOptions {
            budget,
            ..SolveOptions::default()
        },
    )?;
    Ok(ClassBound { program, result })
}

/// Element-level covering instance: rows are the cyclic subgroups generated by elements of
/// the target classes, columns are conjugates of the pool classes.
#[derive(Debug, Clone)]
pub struct ResidualInstance {
    pub program: CoveringProgram,
    /// `(subgroup class index, conjugate)` per column.
    pub columns: Vec<(usize, usize)>,
    /// Sorted element sets of the row subgroups.
    pub rows: Vec<Vec<u32>>,
    /// Column permutations induced by the group generators.
    pub symmetry: Vec<Vec<u32>>,
}

pub fn residual_instance(
    g: &GroupTable,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    pool: &[usize],
    targets: &[usize],
) -> Result<ResidualInstance, CoverError> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    let mut row_gen: Vec<u32> = Vec::new();
    for &k in targets {
        for &x in &classes[k].members {
            let mut cyc = g.powers(x);
            cyc.sort_unstable();
            if seen.insert(fingerprint(&cyc)) {
                rows.push(cyc);
                row_gen.push(x);
            }
        }
    }
    if pool.is_empty() && !rows.is_empty() {
        return Err(CoverError::EmptyPool(rows.len()));
    }
    let mut columns = Vec::new();
    let mut col_of: FxHashMap<(usize, usize), u32> = FxHashMap::default();
    for &m in pool {
        for i in 0..subgroups[m].orbit.len() {
            col_of.insert((m, i), columns.len() as u32);
            columns.push((m, i));
        }
    }
    let mut program = CoveringProgram::new();
    for &(m, i) in &columns {
        program.add_col(format!("{}.{}", subgroups[m].id, i), 0, 1);
    }
    for (r, &x) in row_gen.iter().enumerate() {
        // A conjugate contains <x> iff it contains x.
        let entries: Vec<(usize, u64)> = columns
            .iter()
            .enumerate()
            .filter(|(_, &(m, i))| subgroups[m].conjugate_contains(i, x))
            .map(|(c, _)| (c, 1))
            .collect();
        program.add_row(format!("c{}", r + 1), 1, entries);
    }
    let symmetry = (0..g.generators().len())
        .map(|gi| {
            columns
                .iter()
                .map(|&(m, i)| col_of[&(m, subgroups[m].gen_action[gi][i] as usize)])
                .collect()
        })
        .collect();
    Ok(ResidualInstance {
        program,
        columns,
        rows,
        symmetry,
    })
}

impl ResidualInstance {
    /// Removes columns whose row support is empty, strictly contained in another column's,
    /// or equal to that of a column from an earlier pool class. The removed set is invariant
    /// under the conjugation action, so the symmetry survives. The optimum is unchanged: a
    /// removed column can always be swapped for the column dominating it.
    pub fn reduce_dominated(&self) -> (ResidualInstance, Vec<(usize, usize)>) {
        let n = self.columns.len();
        let mut support: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (r, row) in self.program.rows.iter().enumerate() {
            for &(c, _) in row {
                support[c as usize].push(r as u32);
            }
        }
        let mut by_row: Vec<Vec<u32>> = vec![Vec::new(); self.program.n_rows()];
        for (c, s) in support.iter().enumerate() {
            for &r in s {
                by_row[r as usize].push(c as u32);
            }
        }
        let dominated = |c: usize| -> bool {
            let s = &support[c];
            let Some(&r0) = s.first() else { return true };
            by_row[r0 as usize].iter().any(|&d| {
                let d = d as usize;
                if d == c || support[d].len() < s.len() {
                    return false;
                }
                let contains = s.iter().all(|r| support[d].binary_search(r).is_ok());
                contains && (support[d].len() > s.len() || self.columns[d].0 < self.columns[c].0)
            })
        };
        let keep: Vec<bool> = (0..n).map(|c| !dominated(c)).collect();
        let mut new_index = vec![u32::MAX; n];
        let mut columns = Vec::new();
        let mut program = CoveringProgram::new();
        for c in 0..n {
            if keep[c] {
                new_index[c] = columns.len() as u32;
                columns.push(self.columns[c]);
                program.add_col(self.program.col_labels[c].clone(), 0, 1);
            }
        }
        for (r, row) in self.program.rows.iter().enumerate() {
            let entries = row
                .iter()
                .filter(|&&(c, _)| keep[c as usize])
                .map(|&(c, v)| (new_index[c as usize] as usize, v));
            program.add_row(self.program.row_labels[r].clone(), self.program.demand[r], entries);
        }
        let symmetry = self
            .symmetry
            .iter()
            .map(|s| (0..n).filter(|&c| keep[c]).map(|c| new_index[s[c] as usize]).collect())
            .collect();
        let removed = (0..n).filter(|&c| !keep[c]).map(|c| self.columns[c]).collect();
        (
            ResidualInstance {
                program,
                columns,
                rows: self.rows.clone(),
                symmetry,
            },
            removed,
        )
    }

    /// Column weights and row weights, as sorted distinct values.
    pub fn weights(&self) -> (Vec<usize>, Vec<usize>) {
        let mut col = vec![0usize; self.program.n_cols()];
        let mut rows: Vec<usize> = Vec::new();
        for row in &self.program.rows {
            rows.push(row.len());
            for &(c, _) in row {
                col[c as usize] += 1;
            }
        }
        col.sort_unstable();
        col.dedup();
        rows.sort_unstable();
        rows.dedup();
        (col, rows)
    }
}

/// Result of checking that members of one subgroup class can be traded for members of
/// another through a shared Sylow subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    /// For each conjugate of the source class, the target-class conjugates containing its
    /// Sylow subgroup.
    pub candidates: Vec<Vec<usize>>,
    /// Common number of candidates per source conjugate.
    pub per_member: usize,
    /// Distinct Sylow subgroups of the source class inside one target-class member.
    pub sylows_per_target: usize,
    /// Every candidate contains all target-class elements of the member it replaces.
    pub preserves_targets: bool,
}

/// Sylow `p`-subgroup of a subgroup given as a sorted element set, when it is unique
/// (its `p`-elements then form a subgroup of the full `p`-part order).
fn unique_sylow(g: &GroupTable, elements: &[u32], p: u32) -> Option<Vec<u32>> {
    let is_p_power = |mut o: u32| {
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    };
    let set: Vec<u32> = elements
        .iter()
        .copied()
        .filter(|&x| is_p_power(g.element_order(x)))
        .collect();
    let mut part = 1;
    let mut n = elements.len();
    while n.is_multiple_of(p as usize) {
        n /= p as usize;
        part *= p as usize;
    }
    (set.len() == part && part > 1).then_some(set)
}

pub fn replacement_argument(
    g: &GroupTable,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    from: usize,
    to: usize,
    p: u32,
    targets: &[usize],
) -> Result<Replacement, CoverError> {
    let src = &subgroups[from];
    let dst = &subgroups[to];
    let mut candidates = Vec::with_capacity(src.orbit.len());
    let mut sylows: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut preserves = true;
    for (i, h) in src.orbit.iter().enumerate() {
        let sylow = unique_sylow(g, h, p).ok_or_else(|| {
            CoverError::Replacement(format!("{} conjugate {i} has no unique Sylow {p}-subgroup", src.id))
        })?;
        let cands: Vec<usize> = (0..dst.orbit.len())
            .filter(|&j| sylow.iter().all(|&x| dst.conjugate_contains(j, x)))
            .collect();
        if cands.is_empty() {
            return Err(CoverError::Replacement(format!(
                "{} conjugate {i}: no member of {} contains its Sylow subgroup",
                src.id, dst.id
            )));
        }
        let target_elems: Vec<u32> = h
            .iter()
            .copied()
            .filter(|&x| targets.contains(&classes.class_of(x)))
            .collect();
        preserves &= cands
            .iter()
            .all(|&j| target_elems.iter().all(|&x| dst.conjugate_contains(j, x)));
        sylows.insert(sylow);
        candidates.push(cands);
    }
    let per_member = candidates[0].len();
    if candidates.iter().any(|c| c.len() != per_member) {
        return Err(CoverError::Replacement(
            "candidate counts differ between members".into(),
        ));
    }
    let sylows_per_target = sylows
        .iter()
        .filter(|s| s.iter().all(|&x| dst.conjugate_contains(0, x)))
        .count();
    Ok(Replacement {
        candidates,
        per_member,
        sylows_per_target,
        preserves_targets: preserves,
    })
}

/// Cheapest union of whole subgroup classes covering every principal class, by exhaustive
/// search over class subsets. Ties go to the lexicographically first subset.
pub fn best_union_cover(mats: &IncidenceMatrices) -> Option<Vec<usize>> {
    let n = mats.subgroup_labels.len();
    assert!(n < 24, "exhaustive subset search over {n} classes");
    let rows = mats.principal_rows();
    let mut best: Option<(u64, Vec<usize>)> = None;
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&m| mask >> m & 1 == 1).collect();
        if !rows.iter().all(|&k| set.iter().any(|&m| mats.a[k][m] > 0)) {
            continue;
        }
        let cost: u64 = set.iter().map(|&m| mats.orbit_sizes[m]).sum();
        if best.as_ref().is_none_or(|(c, s)| cost < *c || cost == *c && set < *s) {
            best = Some((cost, set));
        }
    }
    best.map(|(_, s)| s)
}

/// Target classes (principal classes missed by every forced class) and the pool of
/// non-forced subgroup classes meeting them.
pub fn residual_setup(mats: &IncidenceMatrices, forced: &[Forced]) -> (Vec<usize>, Vec<usize>) {
    let forced_cols: Vec<usize> = forced.iter().map(|f| f.subgroup).collect();
    let targets: Vec<usize> = mats
        .principal_rows()
        .into_iter()
        .filter(|&k| forced_cols.iter().all(|&m| mats.a[k][m] == 0))
        .collect();
    let pool: Vec<usize> = (0..mats.subgroup_labels.len())
        .filter(|m| !forced_cols.contains(m))
        .filter(|&m| targets.iter().any(|&k| mats.a[k][m] > 0))
        .collect();
    (targets, pool)
}

#[derive(Debug, Clone)]
pub struct SigmaOptions {
    pub budget: Duration,
    /// Forwarded to the residual solve.
    pub progress_every: usize,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            budget: Duration::from_secs(3600),
            progress_every: 0,
        }
    }
}

/// Element-level part of the lower bound.
#[derive(Debug, Clone)]
pub struct ResidualBound {
    pub pool: Vec<usize>,
    pub targets: Vec<usize>,
    /// Instance before dominance reduction.
    pub full_rows: usize,
    pub full_cols: usize,
    pub removed: Vec<(usize, usize)>,
    pub instance: ResidualInstance,
    pub result: SolveResult,
}

#[derive(Debug, Clone)]
pub struct SigmaCertificate {
    pub group: String,
    pub upper: Cover,
    pub forced: Vec<Forced>,
    pub refined: Vec<RefinedRow>,
    pub class_bound: ClassBound,
    pub residual: Option<ResidualBound>,
    pub lower: u64,
    /// Set only when the verified upper cover meets the lower bound.
    pub sigma: Option<u64>,
}

impl SigmaCertificate {
    pub fn upper_size(&self) -> u64 {
        self.upper.size() as u64
    }
}

pub fn sigma(
    g: &GroupTable,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    opts: &SigmaOptions,
) -> Result<SigmaCertificate, CoverError> {
    let mats = incidence_matrix_a(classes, subgroups)?;
    mats.check_identity()?;
    let forced = forced_subgroups(&mats)?;
    let refined = refined_rows(&mats, classes, subgroups)?;
    let class_bound = class_lower_bound(&mats, &refined, &forced, opts.budget)?;
    let mut lower = class_bound.bound();

    let labels = |set: &[usize]| -> Vec<&str> { set.iter().map(|&m| subgroups[m].id.as_str()).collect() };
    let union = best_union_cover(&mats).ok_or_else(|| SubgroupError::UncoverableClass {
        class: "some principal class".into(),
    })?;
    let mut upper = union_cover(subgroups, &labels(&union))?;

    let mut residual = None;
    if lower < upper.size() as u64 {
        let forced_cols: Vec<usize> = forced.iter().map(|f| f.subgroup).collect();
        let (targets, pool) = residual_setup(&mats, &forced);
        let full = residual_instance(g, classes, subgroups, &pool, &targets)?;
        let (reduced, removed) = full.reduce_dominated();
        let result = solve_integer(
            &reduced.program,
            &SolveOptions {
                budget: opts.budget,
                symmetry: reduced.symmetry.clone(),
                progress_every: opts.progress_every,
                ..SolveOptions::default()
            },
        )?;
        let forced_size: u64 = forced_cols.iter().map(|&m| mats.orbit_sizes[m]).sum();
        lower = lower.max(forced_size + result.lower_bound);
        let mut selection = union_cover(subgroups, &labels(&forced_cols))?.selection;
        for (c, &v) in result.solution.iter().enumerate() {
            if v > 0 {
                let (m, i) = reduced.columns[c];
                selection.push((subgroups[m].id.clone(), i));
            }
        }
        let candidate = Cover { selection };
        if candidate.size() < upper.size() && verify_cover(g, classes, subgroups, &candidate)?.is_none() {
            upper = candidate;
        }
        residual = Some(ResidualBound {
            pool,
            targets,
            full_rows: full.program.n_rows(),
            full_cols: full.program.n_cols(),
            removed,
            instance: reduced,
            result,
        });
    }
    if let Some(u) = verify_cover(g, classes, subgroups, &upper)? {
        return Err(CoverError::Replacement(format!(
            "upper cover misses element {} of class {}",
            u.element, u.class
        )));
    }
    let sigma = (lower == upper.size() as u64).then_some(lower);
    Ok(SigmaCertificate {
        group: g.name().to_string(),
        upper,
        forced,
        refined,
        class_bound,
        residual,
        lower,
        sigma,
    })
}

/// A subgroup found by lattice enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSubgroup {
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
}

/// Every subgroup of a small group: cyclic subgroups, then joins with cyclic subgroups
/// until nothing new appears. Any subgroup `<x1, .., xk>` is reached by `k - 1` such joins.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<LatticeSubgroup>, CoverError> {
    if g.order() > 2000 {
        return Err(CoverError::TooLarge(g.order()));
    }
    let mut found: Vec<LatticeSubgroup> = Vec::new();
    let mut index: FxHashSet<u128> = FxHashSet::default();
    for x in 0..g.order() as u32 {
        let mut e = g.powers(x);
        e.sort_unstable();
        if index.insert(fingerprint(&e)) {
            found.push(LatticeSubgroup {
                elements: e,
                generators: vec![x],
            });
        }
    }
    let cyclic = found.len();
    let mut start = 0;
    while start < found.len() {
        let end = found.len();
        for i in start..end {
            for c in 0..cyclic {
                let x = found[c].generators[0];
                if found[i].elements.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = found[i].generators.clone();
                gens.push(x);
                let e = g.subgroup_closure(&gens, g.order()).expect("closure within group");
                if index.insert(fingerprint(&e)) {
                    found.push(LatticeSubgroup {
                        elements: e,
                        generators: gens,
                    });
                }
            }
        }
        start = end;
    }
    found.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then(a.elements.cmp(&b.elements))
    });
    Ok(found)
}

/// Maximal proper subgroups from the full lattice.
pub fn maximal_subgroups(g: &GroupTable) -> Result<Vec<LatticeSubgroup>, CoverError> {
    let all = all_subgroups(g)?;
    let proper: Vec<&LatticeSubgroup> = all.iter().filter(|s| s.elements.len() < g.order()).collect();
    Ok(proper
        .iter()
        .filter(|s| {
            !proper.iter().any(|t| {
                t.elements.len() > s.elements.len() && s.elements.iter().all(|x| t.elements.binary_search(x).is_ok())
            })
        })
        .map(|s| (*s).clone())
        .collect())
}

/// Maximal subgroups grouped into conjugacy classes labelled `M1, M2, ..` by decreasing
/// order, with orbits computed.
pub fn maximal_subgroup_classes(g: &GroupTable) -> Result<Vec<SubgroupClass>, CoverError> {
    let mut maxes = maximal_subgroups(g)?;
    maxes.sort_by(|a, b| {
        b.elements
            .len()
            .cmp(&a.elements.len())
            .then(a.elements.cmp(&b.elements))
    });
    let mut out: Vec<SubgroupClass> = Vec::new();
    for m in maxes {
        if out.iter().any(|c| c.position(&m.elements).is_some()) {
            continue;
        }
        let mut c = SubgroupClass::from_elements(g, &format!("M{}", out.len() + 1), m.elements);
        c.rep_generators = m.generators.iter().map(|&x| g.element(x)).collect();
        c.conjugate_orbit(g, true)?;
        out.push(c);
    }
    Ok(out)
}

/// Covering number by brute force: all maximal subgroups, exact cover of principal elements.
pub fn brute_sigma(g: &GroupTable) -> Result<u64, CoverError> {
    let classes = analyze(g);
    let maxes = maximal_subgroups(g)?;
    // A cyclic group has a single maximal cyclic subgroup: the whole group.
    if (0..g.order() as u32).any(|x| g.element_order(x) as usize == g.order()) {
        return Err(CoverError::Cyclic);
    }
    let mut p = CoveringProgram::new();
    for i in 0..maxes.len() {
        p.add_col(format!("H{i}"), 0, 1);
    }
    for c in classes.iter().filter(|c| c.principal) {
        for &x in &c.members {
            let entries = maxes
                .iter()
                .enumerate()
                .filter(|(_, h)| h.elements.binary_search(&x).is_ok())
                .map(|(i, _)| (i, 1));
            p.add_row(format!("e{x}"), 1, entries);
        }
    }
    let r = solve_integer(&p, &SolveOptions::default())?;
    debug_assert_eq!(r.status, Status::Optimal);
    Ok(r.optimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn group(name: &str, degree: usize, gens: &[&str]) -> GroupTable {
        let gens = gens.iter().map(|t| parse_permutation(t, degree).unwrap()).collect();
        GroupTable::close(name, gens, 10_000).unwrap()
    }

    #[test]
    fn small_oracles() {
        let v4 = group("V4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(brute_sigma(&v4).unwrap(), 3);
        let s3 = group("S3", 3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(brute_sigma(&s3).unwrap(), 4);
        let q8 = group("Q8", 8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]);
        assert_eq!(q8.order(), 8);
        assert_eq!(brute_sigma(&q8).unwrap(), 3);
        let c6 = group("C6", 6, &["(1,2,3,4,5,6)"]);
        assert!(matches!(brute_sigma(&c6), Err(CoverError::Cyclic)));
    }

    #[test]
    fn lattice_of_s3() {
        let s3 = group("S3", 3, &["(1,2)", "(1,2,3)"]);
        let all = all_subgroups(&s3).unwrap();
        assert_eq!(all.len(), 6);
        let classes = maximal_subgroup_classes(&s3).unwrap();
        let orbits: Vec<usize> = classes.iter().map(|c| c.orbit.len()).collect();
        assert_eq!(orbits, vec![1, 3]);
    }

    #[test]
    fn pipeline_matches_oracle_on_small_groups() {
        for (name, deg, gens) in [
            ("S3", 3, vec!["(1,2)", "(1,2,3)"]),
            ("Q8", 8, vec!["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]),
            ("D10", 5, vec!["(1,2,3,4,5)", "(2,5)(3,4)"]),
        ] {
            let g = group(name, deg, &gens);
            let classes = analyze(&g);
            let subs = maximal_subgroup_classes(&g).unwrap();
            let cert = sigma(&g, &classes, &subs, &SigmaOptions::default()).unwrap();
            assert_eq!(cert.sigma, Some(brute_sigma(&g).unwrap()), "{name}");
        }
    }

    #[test]
    fn empty_union_and_unknown_label() {
        let s3 = group("S3", 3, &["(1,2)", "(1,2,3)"]);
        let subs = maximal_subgroup_classes(&s3).unwrap();
        assert_eq!(union_cover(&subs, &[]).unwrap().size(), 0);
        assert!(matches!(union_cover(&subs, &["M9"]), Err(CoverError::UnknownClass(_))));
        let classes = analyze(&s3);
        let missing = verify_cover(&s3, &classes, &subs, &union_cover(&subs, &["M2"]).unwrap()).unwrap();
        assert_eq!(missing.unwrap().class, "3A");
    }
}
