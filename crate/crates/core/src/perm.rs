//! Permutation arithmetic and explicit enumeration of small permutation groups.
//!
//! Permutations act on the right: `x * g` applies `x` first, then `g`.
//! Points are stored 0-based; text input and output are 1-based.

use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

/// Largest group order [`GroupTable::close`] will enumerate by default.
pub const DEFAULT_ORDER_CAP: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed permutation text: {0}")]
    Malformed(String),
    #[error("point {point} repeated in permutation")]
    RepeatedPoint { point: usize },
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
}

/// A bijection of `{0, .., degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &p in &images {
            if p >= degree {
                return Err(PermError::OutOfRange { point: p + 1, degree });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(PermError::RepeatedPoint { point: p + 1 });
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u16).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::OutOfRange { point: p + 1, degree });
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(PermError::RepeatedPoint { point: p + 1 });
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u16;
        }
        Permutation { images }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        result
    }

    /// Disjoint cycles of length > 1, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

/// Parses 1-based cycle notation `(1,2,3)(4,5)` or a space-separated 1-based image list.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(PermError::Malformed("empty".into()));
    }
    if text.starts_with('(') {
        parse_cycles(text, degree)
    } else {
        let mut images = Vec::with_capacity(degree);
        for tok in text.split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| PermError::Malformed(format!("bad image `{tok}`")))?;
            if p == 0 || p > degree {
                return Err(PermError::OutOfRange { point: p, degree });
            }
            images.push(p - 1);
        }
        if images.len() != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: images.len(),
            });
        }
        Permutation::from_images(images)
    }
}

fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Malformed(format!("expected `(` at `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Malformed("unclosed cycle".into()))?;
        let inner = body[..close].trim();
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let p: usize = tok
                .parse()
                .map_err(|_| PermError::Malformed(format!("bad point `{tok}`")))?;
            if p == 0 || p > degree {
                return Err(PermError::OutOfRange { point: p, degree });
            }
            cycle.push(p - 1);
        }
        cycles.push(cycle);
    }
    Permutation::from_cycles(degree, &cycles)
}

/// A fully enumerated permutation group. Element IDs are positions in BFS discovery order
/// from the identity, right-multiplying by the generators in the given order.
pub struct GroupTable {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    data: Vec<u16>,
    index: FxHashMap<Box<[u16]>, u32>,
    right: Vec<Vec<u32>>,
    conj: Vec<Vec<u32>>,
    orders: Vec<u32>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl GroupTable {
    /// Breadth-first closure of `generators`.
    pub fn close(name: impl Into<String>, generators: Vec<Permutation>, cap: usize) -> Result<GroupTable, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let ngen = generators.len();
        let mut data: Vec<u16> = Permutation::identity(degree).images;
        let mut index = FxHashMap::default();
        index.insert(data.clone().into_boxed_slice(), 0u32);
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); ngen];
        let mut head = 0usize;
        let mut buf = vec![0u16; degree];
        while head * degree < data.len() {
            for (gi, g) in generators.iter().enumerate() {
                let x = &data[head * degree..(head + 1) * degree];
                for (b, &p) in buf.iter_mut().zip(x) {
                    *b = g.images[p as usize];
                }
                let id = match index.get(buf.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = (data.len() / degree) as u32;
                        if id as usize >= cap {
                            return Err(PermError::CapExceeded { cap });
                        }
                        data.extend_from_slice(&buf);
                        index.insert(buf.clone().into_boxed_slice(), id);
                        id
                    }
                };
                right[gi].push(id);
            }
            head += 1;
        }
        let mut table = GroupTable {
            name: name.into(),
            degree,
            generators,
            data,
            index,
            right,
            conj: Vec::new(),
            orders: Vec::new(),
        };
        table.conj = table.build_conjugation_tables();
        table.orders = table.compute_orders();
        Ok(table)
    }

    fn build_conjugation_tables(&self) -> Vec<Vec<u32>> {
        use rayon::prelude::*;
        self.generators
            .iter()
            .map(|g| {
                let ginv = g.inverse();
                (0..self.order() as u32)
                    .into_par_iter()
                    .map(|id| {
                        let x = self.element_slice(id);
                        // (g^-1 x g)(i) = g(x(g^-1(i)))
                        let img: Vec<u16> = (0..self.degree)
                            .map(|i| g.images[x[ginv.images[i] as usize] as usize])
                            .collect();
                        self.index[img.as_slice()]
                    })
                    .collect()
            })
            .collect()
    }

    fn compute_orders(&self) -> Vec<u32> {
        use rayon::prelude::*;
        (0..self.order() as u32)
            .into_par_iter()
            .map(|id| self.element(id).order() as u32)
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.data.len() / self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element_slice(&self, id: u32) -> &[u16] {
        let d = self.degree;
        &self.data[id as usize * d..(id as usize + 1) * d]
    }

    pub fn element(&self, id: u32) -> Permutation {
        Permutation::from_raw(self.element_slice(id).to_vec())
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.images.as_slice()).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.id_of(p).is_some()
    }

    /// ID of `x * y`.
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let xs = self.element_slice(x);
        let ys = self.element_slice(y);
        let img: Vec<u16> = xs.iter().map(|&p| ys[p as usize]).collect();
        self.index[img.as_slice()]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.id_of(&self.element(x).inverse())
            .expect("group closed under inverses")
    }

    /// ID of `x * generator[gen]`.
    pub fn mul_gen(&self, x: u32, gen: usize) -> u32 {
        self.right[gen][x as usize]
    }

    /// ID of `generator[gen]^-1 * x * generator[gen]`.
    pub fn conj_gen(&self, x: u32, gen: usize) -> u32 {
        self.conj[gen][x as usize]
    }

    /// Conjugation table for one generator, indexed by element ID.
    pub fn conj_table(&self, gen: usize) -> &[u32] {
        &self.conj[gen]
    }

    /// ID of `g^-1 x g`.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, id: u32) -> u32 {
        self.orders[id as usize]
    }

    /// IDs of `x^0, x^1, .., x^(n-1)` where `n` is the order of `x`.
    pub fn powers(&self, x: u32) -> Vec<u32> {
        let n = self.orders[x as usize] as usize;
        let mut out = Vec::with_capacity(n);
        out.push(0);
        let mut cur = 0u32;
        for _ in 1..n {
            cur = self.mul(cur, x);
            out.push(cur);
        }
        out
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let n = self.orders[x as usize] as i64;
        let e = k.rem_euclid(n) as u64;
        self.id_of(&self.element(x).pow(e)).expect("group closed under powers")
    }

    /// Closes `gens` inside this group, returning sorted element IDs, or `None` if the
    /// closure grows past `cap`.
    pub fn subgroup_closure(&self, gens: &[u32], cap: usize) -> Option<Vec<u32>> {
        let mut seen = rustc_hash::FxHashSet::default();
        seen.insert(0u32);
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        Some(queue)
    }
}

/// A conjugacy class of a [`GroupTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub id: String,
    pub rep: u32,
    pub size: usize,
    pub element_order: u32,
    pub centralizer_order: usize,
    pub principal: bool,
    /// Sorted element IDs.
    pub members: Vec<u32>,
}

impl ConjClass {
    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// The conjugacy classes of a group together with the element-to-class map.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    /// For each non-principal class, an element `y` with the class rep a proper power of `y`.
    pub witnesses: Vec<Option<u32>>,
}

impl ClassTable {
    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.id == label)
    }

    pub fn principal_indices(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].principal).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ConjClass> {
        self.classes.iter()
    }
}

impl std::ops::Index<usize> for ClassTable {
    type Output = ConjClass;
    fn index(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }
}

/// Letter suffix for the `i`-th class of a given order: A, B, .., Z, AA, AB, ..
pub fn class_letter(i: usize) -> String {
    if i < 26 {
        ((b'A' + i as u8) as char).to_string()
    } else {
        format!("{}{}", class_letter(i / 26 - 1), class_letter(i % 26))
    }
}

/// Conjugation orbits, seeded from the least unassigned element and expanded by
/// conjugating with the generators. Classes are sorted by (element order, size, least
/// member) and labelled `<order><letter>`. Principal flags are left `false`; see
/// [`principal_classes`].
pub fn conjugacy_classes(g: &GroupTable) -> ClassTable {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<Vec<u32>> = Vec::new();
    for seed in 0..n as u32 {
        if class_of[seed as usize] != u32::MAX {
            continue;
        }
        let ci = raw.len() as u32;
        class_of[seed as usize] = ci;
        let mut members = vec![seed];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for gi in 0..g.generators().len() {
                let y = g.conj_gen(x, gi);
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = ci;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        raw.push(members);
    }
    raw.sort_by_key(|m| (g.element_order(m[0]), m.len(), m[0]));
    let mut classes = Vec::with_capacity(raw.len());
    let mut last_order = 0;
    let mut letter = 0;
    for members in raw {
        let order = g.element_order(members[0]);
        if order != last_order {
            last_order = order;
            letter = 0;
        }
        let size = members.len();
        classes.push(ConjClass {
            id: format!("{}{}", order, class_letter(letter)),
            rep: members[0],
            size,
            element_order: order,
            centralizer_order: n / size,
            principal: false,
            members,
        });
        letter += 1;
    }
    for (ci, c) in classes.iter().enumerate() {
        for &x in &c.members {
            class_of[x as usize] = ci as u32;
        }
    }
    let witnesses = vec![None; classes.len()];
    ClassTable {
        classes,
        class_of,
        witnesses,
    }
}

/// Maps each class to the class of the `k`-th power of its representative.
pub fn power_map(g: &GroupTable, classes: &ClassTable, k: i64) -> Vec<usize> {
    classes.iter().map(|c| classes.class_of(g.pow(c.rep, k))).collect()
}

fn is_coprime(a: usize, b: usize) -> bool {
    num_integer::gcd(a, b) == 1
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Canonical key of the cyclic subgroup generated by `powers[step]`, where `powers` lists
/// the powers of an element of order `powers.len()`: the least ID among its generators.
fn cyclic_key(powers: &[u32], step: usize) -> u32 {
    let n = powers.len();
    let m = n / num_integer::gcd(n, step);
    (1..=m.max(1))
        .filter(|&k| is_coprime(k, m))
        .map(|k| powers[(step * k) % n])
        .min()
        .unwrap_or(0)
}

/// Sets the principal flag on every class: `x` is principal iff `<x>` is a maximal cyclic
/// subgroup. Every element `y` marks `<y^p>` dominated for each prime `p` dividing its
/// order; principality must come out constant on classes.
pub fn principal_classes(g: &GroupTable, classes: &mut ClassTable) {
    use rayon::prelude::*;
    let n = g.order();
    let per_element: Vec<(u32, Vec<(u32, u32)>)> = (0..n as u32)
        .into_par_iter()
        .map(|y| {
            let powers = g.powers(y);
            let own = cyclic_key(&powers, 1);
            let dominated = prime_divisors(powers.len())
                .into_iter()
                .map(|p| (cyclic_key(&powers, p), y))
                .collect();
            (own, dominated)
        })
        .collect();
    let mut dominated_by: FxHashMap<u32, u32> = FxHashMap::default();
    for (_, dom) in &per_element {
        for &(key, y) in dom {
            dominated_by.entry(key).or_insert(y);
        }
    }
    let mut witnesses = vec![None; classes.len()];
    for (ci, class) in classes.classes.iter_mut().enumerate() {
        let flags: Vec<bool> = class
            .members
            .iter()
            .map(|&x| !dominated_by.contains_key(&per_element[x as usize].0))
            .collect();
        assert!(
            flags.iter().all(|&f| f == flags[0]),
            "principality not constant on class {}",
            class.id
        );
        class.principal = flags[0];
        if !class.principal {
            witnesses[ci] = dominated_by.get(&per_element[class.rep as usize].0).copied();
        }
    }
    classes.witnesses = witnesses;
}

/// Conjugacy classes with principal flags set.
pub fn analyze(g: &GroupTable) -> ClassTable {
    let mut classes = conjugacy_classes(g);
    principal_classes(g, &mut classes);
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        let gens = vec![
            parse_permutation("(1,2)", 3).unwrap(),
            parse_permutation("(1,2,3)", 3).unwrap(),
        ];
        GroupTable::close("S3", gens, 100).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_permutation("(1,2)", 3).unwrap().images(), &[1, 0, 2]);
        assert!(parse_permutation("1 2 3", 3).unwrap().is_identity());
        let p = parse_permutation("(1,2,3)(4,5)", 5).unwrap();
        let mut q = p.clone();
        let mut k = 1;
        while !q.is_identity() {
            q = q.compose(&p);
            k += 1;
        }
        assert_eq!(k, 6);
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_permutation("(1,2", 3), Err(PermError::Malformed(_))));
        assert_eq!(
            parse_permutation("(1,2,1)", 3),
            Err(PermError::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            parse_permutation("(1,4)", 3),
            Err(PermError::OutOfRange { point: 4, degree: 3 })
        );
        assert!(parse_permutation("1 1 2", 3).is_err());
        assert!(parse_permutation("(a,b)", 3).is_err());
    }

    #[test]
    fn cycle_string_roundtrip() {
        let p = parse_permutation("(1,5,2)(3,4)", 6).unwrap();
        assert_eq!(p.to_cycle_string(), "(1,5,2)(3,4)");
        assert_eq!(parse_permutation(&p.to_cycle_string(), 6).unwrap(), p);
        assert_eq!(Permutation::identity(4).to_cycle_string(), "()");
    }

    #[test]
    fn s3_closure_and_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        let classes = analyze(&g);
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let labels: Vec<&str> = classes.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(labels, vec!["1A", "2A", "3A"]);
        let principal: Vec<bool> = classes.iter().map(|c| c.principal).collect();
        assert_eq!(principal, vec![false, true, true]);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![parse_permutation("(1,2,3,4,5,6,7)", 7).unwrap()];
        assert_eq!(
            GroupTable::close("C7", gens, 5).unwrap_err(),
            PermError::CapExceeded { cap: 5 }
        );
    }

    #[test]
    fn cyclic_group_has_single_principal_class_order() {
        let gens = vec![parse_permutation("(1,2,3,4,5,6)", 6).unwrap()];
        let g = GroupTable::close("C6", gens, 100).unwrap();
        let classes = analyze(&g);
        for c in classes.iter() {
            assert_eq!(c.principal, c.element_order == 6, "{}", c.id);
        }
        for (ci, c) in classes.iter().enumerate() {
            if !c.principal {
                let y = classes.witnesses[ci].unwrap();
                assert!(g.powers(y).contains(&c.rep));
                assert!(g.element_order(y) > c.element_order);
            }
        }
    }

    #[test]
    fn power_map_identity_exponent() {
        let g = s3();
        let classes = analyze(&g);
        let pm = power_map(&g, &classes, 1);
        assert_eq!(pm, (0..classes.len()).collect::<Vec<_>>());
        let sq = power_map(&g, &classes, 2);
        assert_eq!(sq, vec![0, 0, 2]);
    }

    #[test]
    fn class_letters() {
        assert_eq!(class_letter(0), "A");
        assert_eq!(class_letter(25), "Z");
        assert_eq!(class_letter(26), "AA");
    }
}
