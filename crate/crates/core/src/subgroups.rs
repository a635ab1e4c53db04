//! Maximal-subgroup class representatives, their conjugate orbits, and the class-level
//! incidence matrices between principal classes and subgroup classes.
//!
//! For a principal class `K` and a subgroup class `M`, `a[K][M]` counts the members of `M`
//! containing a fixed element of `K` and `b[K][M]` counts the elements of `K` inside a
//! fixed member of `M`. Counting incident pairs both ways gives `a * |K| = b * |M|`.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::files::SubgroupFile;
use crate::perm::{ClassTable, GroupTable, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("{label}: generator {index} is not an element of {group}")]
    GeneratorNotInGroup { label: String, index: usize, group: String },
    #[error("{label}: file is for group {found}, expected {expected}")]
    WrongGroup {
        label: String,
        expected: String,
        found: String,
    },
    #[error("{label}: generators close to order {found}, declared {declared}")]
    OrderMismatch {
        label: String,
        declared: usize,
        found: String,
    },
    #[error("{label}: not a proper subgroup")]
    NotProper { label: String },
    #[error("{label}: conjugate orbit has length {found}, expected index {index}")]
    OrbitLength { label: String, found: usize, index: usize },
    #[error("incidence identity not integral for class {class} and subgroup class {subgroup}")]
    NonIntegral { class: String, subgroup: String },
    #[error("a-count not constant on class {class} for subgroup class {subgroup}")]
    NotClassInvariant { class: String, subgroup: String },
    #[error("principal class {class} lies in no maximal subgroup class")]
    UncoverableClass { class: String },
}

/// 128-bit fingerprint of a sorted element-ID set.
pub fn fingerprint(ids: &[u32]) -> u128 {
    let mut h1: u64 = 0x243f_6a88_85a3_08d3;
    let mut h2: u64 = 0x1319_8a2e_0370_7344 ^ ids.len() as u64;
    for &x in ids {
        let v = x as u64;
        h1 = (h1 ^ v).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(31);
        h2 = (h2 ^ v.wrapping_mul(0xff51_afd7_ed55_8ccd)).wrapping_mul(0xc4ce_b9fe_1a85_ec53);
        h2 ^= h2 >> 29;
    }
    ((h1 as u128) << 64) | h2 as u128
}

/// A conjugacy class of (maximal) subgroups, with its full orbit of conjugates.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub id: String,
    pub structure: String,
    pub rep_generators: Vec<Permutation>,
    /// Sorted element IDs of the representative.
    pub rep_elements: Vec<u32>,
    pub order: usize,
    pub index: usize,
    /// Conjugates as sorted element-ID sets; conjugate 0 is the representative.
    pub orbit: Vec<Vec<u32>>,
    /// `gen_action[g][i]` is the position of conjugate `i` conjugated by generator `g`.
    pub gen_action: Vec<Vec<u32>>,
    lookup: FxHashMap<u128, u32>,
}

impl SubgroupClass {
    /// Closes the representative's generators inside `g` and checks order and properness.
    pub fn load(g: &GroupTable, file: &SubgroupFile) -> Result<SubgroupClass, SubgroupError> {
        if file.group != g.name() {
            return Err(SubgroupError::WrongGroup {
                label: file.label.clone(),
                expected: g.name().to_string(),
                found: file.group.clone(),
            });
        }
        let mut gen_ids = Vec::with_capacity(file.generators.len());
        for (i, p) in file.generators.iter().enumerate() {
            let id = (p.degree() == g.degree())
                .then(|| g.id_of(p))
                .flatten()
                .ok_or_else(|| SubgroupError::GeneratorNotInGroup {
                    label: file.label.clone(),
                    index: i + 1,
                    group: g.name().to_string(),
                })?;
            gen_ids.push(id);
        }
        let elements = g
            .subgroup_closure(&gen_ids, file.order)
            .ok_or_else(|| SubgroupError::OrderMismatch {
                label: file.label.clone(),
                declared: file.order,
                found: format!("> {}", file.order),
            })?;
        if elements.len() != file.order {
            return Err(SubgroupError::OrderMismatch {
                label: file.label.clone(),
                declared: file.order,
                found: elements.len().to_string(),
            });
        }
        if elements.len() >= g.order() {
            return Err(SubgroupError::NotProper {
                label: file.label.clone(),
            });
        }
        Ok(SubgroupClass {
            id: file.label.clone(),
            structure: file.structure.clone(),
            rep_generators: file.generators.clone(),
            index: g.order() / elements.len(),
            order: elements.len(),
            rep_elements: elements,
            orbit: Vec::new(),
            gen_action: Vec::new(),
            lookup: FxHashMap::default(),
        })
    }

    /// Builds a class directly from an element set (used for internally generated fixtures).
    pub fn from_elements(g: &GroupTable, id: &str, elements: Vec<u32>) -> SubgroupClass {
        let mut elements = elements;
        elements.sort_unstable();
        SubgroupClass {
            id: id.to_string(),
            structure: String::new(),
            rep_generators: Vec::new(),
            index: g.order() / elements.len(),
            order: elements.len(),
            rep_elements: elements,
            orbit: Vec::new(),
            gen_action: Vec::new(),
            lookup: FxHashMap::default(),
        }
    }

    /// Fills the conjugate orbit by breadth-first conjugation with the group generators.
    /// With `require_index`, the orbit length must equal the index (self-normalizing) or be 1
    /// (normal, as for the index-2 maximal subgroups of a solvable group).
    pub fn conjugate_orbit(&mut self, g: &GroupTable, require_index: bool) -> Result<(), SubgroupError> {
        let ngen = g.generators().len();
        let mut orbit = vec![self.rep_elements.clone()];
        let mut lookup = FxHashMap::default();
        lookup.insert(fingerprint(&self.rep_elements), 0u32);
        let mut action: Vec<Vec<u32>> = vec![Vec::new(); ngen];
        let mut head = 0;
        while head < orbit.len() {
            for (gi, act) in action.iter_mut().enumerate() {
                let table = g.conj_table(gi);
                let mut img: Vec<u32> = orbit[head].iter().map(|&x| table[x as usize]).collect();
                img.sort_unstable();
                let fp = fingerprint(&img);
                let pos = match lookup.get(&fp) {
                    Some(&p) => {
                        assert_eq!(orbit[p as usize], img, "fingerprint collision");
                        p
                    }
                    None => {
                        let p = orbit.len() as u32;
                        lookup.insert(fp, p);
                        orbit.push(img);
                        p
                    }
                };
                act.push(pos);
            }
            head += 1;
        }
        if require_index && orbit.len() != self.index && orbit.len() != 1 {
            return Err(SubgroupError::OrbitLength {
                label: self.id.clone(),
                found: orbit.len(),
                index: self.index,
            });
        }
        self.orbit = orbit;
        self.gen_action = action;
        self.lookup = lookup;
        Ok(())
    }

    /// Position of a conjugate given as a sorted element-ID set.
    pub fn position(&self, set: &[u32]) -> Option<usize> {
        self.lookup
            .get(&fingerprint(set))
            .map(|&p| p as usize)
            .filter(|&p| self.orbit[p] == set)
    }

    pub fn conjugate_contains(&self, conj: usize, x: u32) -> bool {
        self.orbit[conj].binary_search(&x).is_ok()
    }

    /// Number of conjugates containing `x`.
    pub fn count_containing(&self, x: u32) -> usize {
        self.orbit.iter().filter(|h| h.binary_search(&x).is_ok()).count()
    }

    /// Positions of the conjugates containing `x`.
    pub fn containing(&self, x: u32) -> Vec<usize> {
        (0..self.orbit.len())
            .filter(|&i| self.conjugate_contains(i, x))
            .collect()
    }
}

/// Loads and orbits every subgroup class, requiring self-normalizing orbits.
pub fn load_classes(g: &GroupTable, files: &[SubgroupFile]) -> Result<Vec<SubgroupClass>, SubgroupError> {
    files
        .iter()
        .map(|f| {
            let mut s = SubgroupClass::load(g, f)?;
            s.conjugate_orbit(g, true)?;
            Ok(s)
        })
        .collect()
}

/// Class-level incidence between element classes and subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrices {
    /// Labels of every element class (rows of the full matrices).
    pub class_labels: Vec<String>,
    pub element_orders: Vec<u32>,
    pub principal: Vec<bool>,
    pub subgroup_labels: Vec<String>,
    pub subgroup_orders: Vec<u64>,
    /// `a[class][subgroup class]`.
    pub a: Vec<Vec<u64>>,
    /// `b[class][subgroup class]`.
    pub b: Vec<Vec<u64>>,
    pub class_sizes: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
}

/// Classes with identical element order, size and incidence row, reported as e.g. `7AB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusedGroup {
    pub label: String,
    pub classes: Vec<usize>,
}

impl IncidenceMatrices {
    /// Indices of the principal rows.
    pub fn principal_rows(&self) -> Vec<usize> {
        (0..self.class_labels.len()).filter(|&k| self.principal[k]).collect()
    }

    pub fn subgroup_index(&self, label: &str) -> Option<usize> {
        self.subgroup_labels.iter().position(|l| l == label)
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.class_labels.iter().position(|l| l == label)
    }

    /// Exact entrywise check of `a * |K| = b * |M|`.
    pub fn check_identity(&self) -> Result<(), SubgroupError> {
        for k in 0..self.class_labels.len() {
            for m in 0..self.subgroup_labels.len() {
                let lhs = self.a[k][m] as u128 * self.class_sizes[k] as u128;
                let rhs = self.b[k][m] as u128 * self.orbit_sizes[m] as u128;
                if lhs != rhs {
                    return Err(SubgroupError::NonIntegral {
                        class: self.class_labels[k].clone(),
                        subgroup: self.subgroup_labels[m].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Fuses principal classes that agree in element order, size and `a`-row.
    pub fn fused_groups(&self) -> Vec<FusedGroup> {
        let mut groups: Vec<FusedGroup> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for k in self.principal_rows() {
            let found = members.iter().position(|ms| {
                let r = ms[0];
                self.element_orders[r] == self.element_orders[k]
                    && self.class_sizes[r] == self.class_sizes[k]
                    && self.a[r] == self.a[k]
            });
            match found {
                Some(i) => members[i].push(k),
                None => members.push(vec![k]),
            }
        }
        for ms in members {
            let order = self.element_orders[ms[0]].to_string();
            let letters: String = ms
                .iter()
                .map(|&k| self.class_labels[k][order.len()..].to_string())
                .collect();
            groups.push(FusedGroup {
                label: format!("{order}{letters}"),
                classes: ms,
            });
        }
        groups
    }

    fn tsv(&self, m: &[Vec<u64>], fused: bool, sum_fused: bool) -> String {
        let mut s = String::from("class");
        for l in &self.subgroup_labels {
            s.push('\t');
            s.push_str(l);
        }
        s.push('\n');
        if fused {
            for fg in self.fused_groups() {
                s.push_str(&fg.label);
                for (j, &first) in m[fg.classes[0]].iter().enumerate() {
                    let v: u64 = if sum_fused {
                        fg.classes.iter().map(|&k| m[k][j]).sum()
                    } else {
                        first
                    };
                    s.push_str(&format!("\t{v}"));
                }
                s.push('\n');
            }
        } else {
            for k in self.principal_rows() {
                s.push_str(&self.class_labels[k]);
                for v in &m[k] {
                    s.push_str(&format!("\t{v}"));
                }
                s.push('\n');
            }
        }
        s
    }

    /// Matrix A over principal classes as TSV.
    pub fn a_tsv(&self) -> String {
        self.tsv(&self.a, false, false)
    }

    /// Matrix B over principal classes as TSV.
    pub fn b_tsv(&self) -> String {
        self.tsv(&self.b, false, false)
    }

    /// Matrix A with fused rows (one row per fused group).
    pub fn a_fused_tsv(&self) -> String {
        self.tsv(&self.a, true, false)
    }

    /// Matrix B with fused rows; entries are summed over the fused classes.
    pub fn b_fused_tsv(&self) -> String {
        self.tsv(&self.b, true, true)
    }
}

/// Computes `a` by counting conjugates containing each class representative (spot-checked
/// on three further members) and derives `b` from the edge-count identity.
pub fn incidence_matrix_a(
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
) -> Result<IncidenceMatrices, SubgroupError> {
    use rayon::prelude::*;
    let rows: Vec<Result<Vec<u64>, SubgroupError>> = classes
        .classes
        .par_iter()
        .map(|c| {
            let probes = [
                c.rep,
                c.members[c.size / 3],
                c.members[(2 * c.size) / 3],
                c.members[c.size - 1],
            ];
            subgroups
                .iter()
                .map(|s| {
                    let a = s.count_containing(c.rep);
                    for &x in &probes[1..] {
                        if s.count_containing(x) != a {
                            return Err(SubgroupError::NotClassInvariant {
                                class: c.id.clone(),
                                subgroup: s.id.clone(),
                            });
                        }
                    }
                    Ok(a as u64)
                })
                .collect()
        })
        .collect();
    let a: Vec<Vec<u64>> = rows.into_iter().collect::<Result<_, _>>()?;
    let class_sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();
    let orbit_sizes: Vec<u64> = subgroups.iter().map(|s| s.orbit.len() as u64).collect();
    let mut b = vec![vec![0u64; subgroups.len()]; classes.len()];
    for (k, c) in classes.iter().enumerate() {
        for (m, s) in subgroups.iter().enumerate() {
            let num = a[k][m] * class_sizes[k];
            if !num.is_multiple_of(orbit_sizes[m]) {
                return Err(SubgroupError::NonIntegral {
                    class: c.id.clone(),
                    subgroup: s.id.clone(),
                });
            }
            b[k][m] = num / orbit_sizes[m];
        }
    }
    Ok(IncidenceMatrices {
        class_labels: classes.iter().map(|c| c.id.clone()).collect(),
        element_orders: classes.iter().map(|c| c.element_order).collect(),
        principal: classes.iter().map(|c| c.principal).collect(),
        subgroup_labels: subgroups.iter().map(|s| s.id.clone()).collect(),
        subgroup_orders: subgroups.iter().map(|s| s.order as u64).collect(),
        a,
        b,
        class_sizes,
        orbit_sizes,
    })
}

/// `|K ∩ H|` counted directly in the representative of a subgroup class.
pub fn direct_intersection(classes: &ClassTable, class: usize, s: &SubgroupClass) -> u64 {
    s.rep_elements.iter().filter(|&&x| classes.class_of(x) == class).count() as u64
}

/// Permutation character of the action on right cosets of `H`, evaluated at `x`:
/// the number of cosets `Hy` with `Hyx = Hy`, i.e. `|{y : y x y^-1 ∈ H}| / |H|`.
pub fn permutation_character(g: &GroupTable, h: &SubgroupClass, x: u32) -> u64 {
    use rayon::prelude::*;
    let hits = (0..g.order() as u32)
        .into_par_iter()
        .filter(|&y| {
            let c = g.mul(g.mul(y, x), g.inv(y));
            h.rep_elements.binary_search(&c).is_ok()
        })
        .count();
    (hits / h.order) as u64
}

/// Tabulated permutation-character values: subgroup label -> class label -> value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ThetaTable {
    pub values: BTreeMap<String, BTreeMap<String, u64>>,
}

impl ThetaTable {
    /// TSV with a header of subgroup labels and one row per class label.
    pub fn parse_tsv(text: &str) -> Result<ThetaTable, String> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header: Vec<&str> = lines.next().ok_or("empty theta table")?.split('\t').collect();
        let mut values: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
        for line in lines {
            let cells: Vec<&str> = line.split('\t').collect();
            if cells.len() != header.len() {
                return Err(format!("row `{}` has wrong width", cells[0]));
            }
            for (j, cell) in cells.iter().enumerate().skip(1) {
                let v: u64 = cell.parse().map_err(|_| format!("bad value `{cell}`"))?;
                values
                    .entry(header[j].to_string())
                    .or_default()
                    .insert(cells[0].to_string(), v);
            }
        }
        Ok(ThetaTable { values })
    }
}

/// One disagreement found by [`check_prop_char`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMismatch {
    pub class: String,
    pub subgroup: String,
    pub expected: u64,
    pub found: u64,
    pub what: &'static str,
}

/// Checks `a[K][M] = θ_M(K)` for every principal class present in `theta` and
/// `|K ∩ H| = b[K][M]` by direct count in the representative.
pub fn check_prop_char(
    mats: &IncidenceMatrices,
    classes: &ClassTable,
    subgroups: &[SubgroupClass],
    theta: &ThetaTable,
) -> Vec<CharMismatch> {
    let mut out = Vec::new();
    for k in mats.principal_rows() {
        for (m, s) in subgroups.iter().enumerate() {
            if let Some(&t) = theta.values.get(&s.id).and_then(|row| row.get(&mats.class_labels[k])) {
                if t != mats.a[k][m] {
                    out.push(CharMismatch {
                        class: mats.class_labels[k].clone(),
                        subgroup: s.id.clone(),
                        expected: t,
                        found: mats.a[k][m],
                        what: "theta",
                    });
                }
            }
            let direct = direct_intersection(classes, k, s);
            if direct != mats.b[k][m] {
                out.push(CharMismatch {
                    class: mats.class_labels[k].clone(),
                    subgroup: s.id.clone(),
                    expected: mats.b[k][m],
                    found: direct,
                    what: "direct count",
                });
            }
        }
    }
    out
}

/// A subgroup class every cover by maximal subgroups must contain entirely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forced {
    pub subgroup: usize,
    /// The principal class whose only incident subgroup class is `subgroup`.
    pub reason: usize,
}

/// Subgroup classes forced by principal classes whose `a`-row has a single nonzero entry,
/// equal to 1.
pub fn forced_subgroups(mats: &IncidenceMatrices) -> Result<Vec<Forced>, SubgroupError> {
    let mut forced: BTreeMap<usize, usize> = BTreeMap::new();
    for k in mats.principal_rows() {
        let support: Vec<usize> = (0..mats.subgroup_labels.len()).filter(|&m| mats.a[k][m] > 0).collect();
        match support.len() {
            0 => {
                return Err(SubgroupError::UncoverableClass {
                    class: mats.class_labels[k].clone(),
                })
            }
            // With a = 1 each element of K lies in exactly one conjugate, and every conjugate
            // holds some of them, so every conjugate is needed.
            1 if mats.a[k][support[0]] == 1 => {
                forced.entry(support[0]).or_insert(k);
            }
            _ => {}
        }
    }
    Ok(forced
        .into_iter()
        .map(|(subgroup, reason)| Forced { subgroup, reason })
        .collect())
}

/// Pairs subgroup classes from two sibling sets through principal classes that meet exactly
/// one member of each set. Returns `(left, right, class)` triples.
pub fn pair_by_shared_classes(mats: &IncidenceMatrices, left: &[usize], right: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in mats.principal_rows() {
        let l: Vec<usize> = left.iter().copied().filter(|&m| mats.a[k][m] > 0).collect();
        let r: Vec<usize> = right.iter().copied().filter(|&m| mats.a[k][m] > 0).collect();
        if l.len() == 1 && r.len() == 1 && !out.iter().any(|&(a, _, _)| a == l[0]) {
            out.push((l[0], r[0], k));
        }
    }
    out
}

/// Groups of subgroup classes sharing an order, for label-correspondence reports.
pub fn sibling_sets(mats: &IncidenceMatrices) -> Vec<Vec<usize>> {
    let mut by_order: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (m, &o) in mats.subgroup_orders.iter().enumerate() {
        by_order.entry(o).or_default().push(m);
    }
    by_order.into_values().filter(|v| v.len() > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{analyze, parse_permutation};

    /// D8 acting on a square: rotations r and reflection s.
    fn d8() -> GroupTable {
        let gens = vec![
            parse_permutation("(1,2,3,4)", 4).unwrap(),
            parse_permutation("(2,4)", 4).unwrap(),
        ];
        GroupTable::close("D8", gens, 100).unwrap()
    }

    fn sub(g: &GroupTable, label: &str, order: usize, gens: &[&str]) -> SubgroupFile {
        SubgroupFile {
            label: label.into(),
            group: g.name().into(),
            order,
            structure: String::new(),
            generators: gens.iter().map(|t| parse_permutation(t, g.degree()).unwrap()).collect(),
        }
    }

    #[test]
    fn normal_subgroup_orbit_length_one() {
        let g = d8();
        let mut s = SubgroupClass::load(&g, &sub(&g, "C4", 4, &["(1,2,3,4)"])).unwrap();
        s.conjugate_orbit(&g, false).unwrap();
        assert_eq!(s.orbit.len(), 1);
        assert_eq!(s.index, 2);
    }

    #[test]
    fn non_normal_orbit_and_index_check() {
        let g = d8();
        let mut s = SubgroupClass::load(&g, &sub(&g, "R", 2, &["(2,4)"])).unwrap();
        s.conjugate_orbit(&g, false).unwrap();
        assert_eq!(s.orbit.len(), 2);
        let err = s.conjugate_orbit(&g, true).unwrap_err();
        assert!(matches!(err, SubgroupError::OrbitLength { found: 2, index: 4, .. }));
    }

    #[test]
    fn load_errors() {
        let g = d8();
        let whole = sub(&g, "G", 8, &["(1,2,3,4)", "(2,4)"]);
        assert_eq!(
            SubgroupClass::load(&g, &whole).unwrap_err(),
            SubgroupError::NotProper { label: "G".into() }
        );
        let wrong = sub(&g, "X", 2, &["(1,2,3,4)"]);
        assert!(matches!(
            SubgroupClass::load(&g, &wrong).unwrap_err(),
            SubgroupError::OrderMismatch { .. }
        ));
        let outside = sub(&g, "Y", 2, &["(1,2)"]);
        assert!(matches!(
            SubgroupClass::load(&g, &outside).unwrap_err(),
            SubgroupError::GeneratorNotInGroup { .. }
        ));
        let mut other = sub(&g, "Z", 4, &["(1,2,3,4)"]);
        other.group = "S4".into();
        assert!(matches!(
            SubgroupClass::load(&g, &other).unwrap_err(),
            SubgroupError::WrongGroup { .. }
        ));
    }

    #[test]
    fn d8_incidence_identity_and_forced() {
        let g = d8();
        let classes = analyze(&g);
        let files = [
            sub(&g, "C4", 4, &["(1,2,3,4)"]),
            sub(&g, "V1", 4, &["(2,4)", "(1,3)"]),
            sub(&g, "V2", 4, &["(1,2)(3,4)", "(1,4)(2,3)"]),
        ];
        let mut subs = Vec::new();
        for f in &files {
            let mut s = SubgroupClass::load(&g, f).unwrap();
            s.conjugate_orbit(&g, false).unwrap();
            subs.push(s);
        }
        let mats = incidence_matrix_a(&classes, &subs).unwrap();
        mats.check_identity().unwrap();
        // Every principal class (order 4 and the reflections) meets exactly one class.
        let forced = forced_subgroups(&mats).unwrap();
        assert_eq!(forced.len(), 3);
        for k in mats.principal_rows() {
            for (m, s) in subs.iter().enumerate() {
                assert_eq!(direct_intersection(&classes, k, s), mats.b[k][m]);
            }
        }
    }

    #[test]
    fn permutation_character_matches_a_and_degree() {
        let d = d8();
        let mut c4 = SubgroupClass::load(&d, &sub(&d, "C4", 4, &["(1,2,3,4)"])).unwrap();
        c4.conjugate_orbit(&d, false).unwrap();
        assert_eq!(permutation_character(&d, &c4, 0), c4.index as u64);
        // C4 is normal, so its elements fix both cosets while lying in one conjugate.
        let r = d.id_of(&parse_permutation("(1,2,3,4)", 4).unwrap()).unwrap();
        assert_eq!(permutation_character(&d, &c4, r), 2);

        // Self-normalizing: the character value is the a-count.
        let g = GroupTable::close(
            "S3",
            vec![
                parse_permutation("(1,2)", 3).unwrap(),
                parse_permutation("(1,2,3)", 3).unwrap(),
            ],
            10,
        )
        .unwrap();
        let classes = analyze(&g);
        let mut s = SubgroupClass::load(&g, &sub(&g, "C2", 2, &["(1,2)"])).unwrap();
        s.conjugate_orbit(&g, true).unwrap();
        for c in classes.iter() {
            assert_eq!(permutation_character(&g, &s, c.rep), s.count_containing(c.rep) as u64);
        }
    }

    #[test]
    fn uncoverable_class_is_fatal() {
        let mats = IncidenceMatrices {
            class_labels: vec!["2A".into()],
            element_orders: vec![2],
            principal: vec![true],
            subgroup_labels: vec!["M1".into()],
            subgroup_orders: vec![2],
            a: vec![vec![0]],
            b: vec![vec![0]],
            class_sizes: vec![3],
            orbit_sizes: vec![3],
        };
        assert_eq!(
            forced_subgroups(&mats).unwrap_err(),
            SubgroupError::UncoverableClass { class: "2A".into() }
        );
    }

    #[test]
    fn theta_table_parses() {
        let t = ThetaTable::parse_tsv("class\tM1\tM2\n8A\t2\t0\n").unwrap();
        assert_eq!(t.values["M1"]["8A"], 2);
        assert_eq!(t.values["M2"]["8A"], 0);
    }

    #[test]
    fn fingerprint_distinguishes_sets() {
        assert_ne!(fingerprint(&[1, 2, 3]), fingerprint(&[1, 2, 4]));
        assert_ne!(fingerprint(&[1, 2]), fingerprint(&[1, 2, 0]));
    }
}
