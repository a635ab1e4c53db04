//! Permutation generators for the projective special unitary groups U3(q), built from the
//! Hermitian form `x1 y1^q + x2 y2^q + x3 y3^q` over GF(q^2), and a deterministic search for
//! subgroup representatives of prescribed order inside an enumerated group.
//!
//! This is how the vendored group and subgroup files under `data/` were produced.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::files::GroupFile;
use crate::perm::{GroupTable, Permutation};
use crate::subgroups::SubgroupClass;

/// GF(p^k) with elements encoded as base-`p` digit vectors of polynomial coefficients.
#[derive(Debug, Clone)]
pub struct SmallField {
    pub p: usize,
    pub k: usize,
    pub size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl SmallField {
    pub fn new(p: usize, k: usize) -> SmallField {
        let size = p.pow(k as u32);
        // Monic modulus x^k + c(x), tried in increasing order of c until a field results.
        for c in 0..size {
            let modulus: Vec<usize> = (0..k).map(|i| (c / p.pow(i as u32)) % p).collect();
            if let Some(f) = SmallField::try_build(p, k, &modulus) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    fn try_build(p: usize, k: usize, modulus: &[usize]) -> Option<SmallField> {
        let size = p.pow(k as u32);
        let digits = |a: usize| -> Vec<usize> { (0..k).map(|i| (a / p.pow(i as u32)) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let da = digits(a);
            for b in 0..size {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * size + b] = encode(&s);
                let mut prod = vec![0usize; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^k = -modulus(x)
                for d in (k..2 * k).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for (i, &m) in modulus.iter().enumerate() {
                            prod[d - k + i] = (prod[d - k + i] + p * p - c * m % p) % p;
                        }
                    }
                }
                mul[a * size + b] = encode(&prod[..k]);
            }
        }
        let mut inv = vec![0; size];
        for a in 1..size {
            inv[a] = (1..size).find(|&b| mul[a * size + b] == 1)?;
        }
        Some(SmallField {
            p,
            k,
            size,
            add,
            mul,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0);
        self.inv[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
}

/// The unitary geometry of PG(2, q^2) used to realise U3(q).
pub struct UnitarySpace {
    pub q: usize,
    pub field: SmallField,
    /// Normalised representatives of the isotropic points.
    pub points: Vec<[usize; 3]>,
}

fn prime_power(q: usize) -> (usize, usize) {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        assert_eq!(r % p, 0, "{q} is not a prime power");
        r /= p;
        e += 1;
    }
    (p, e)
}

impl UnitarySpace {
    pub fn new(q: usize) -> UnitarySpace {
        let (p, e) = prime_power(q);
        let field = SmallField::new(p, 2 * e);
        let mut space = UnitarySpace {
            q,
            field,
            points: Vec::new(),
        };
        let n = space.field.size;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = [a, b, c];
                    if v == [0, 0, 0] || space.normalise(v) != v {
                        continue;
                    }
                    if space.form(v, v) == 0 {
                        space.points.push(v);
                    }
                }
            }
        }
        space
    }

    pub fn conj(&self, a: usize) -> usize {
        self.field.pow(a, self.q)
    }

    pub fn form(&self, u: [usize; 3], v: [usize; 3]) -> usize {
        (0..3).fold(0, |acc, i| self.field.add(acc, self.field.mul(u[i], self.conj(v[i]))))
    }

    /// Scales so that the first nonzero coordinate is 1.
    pub fn normalise(&self, v: [usize; 3]) -> [usize; 3] {
        let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
        let s = self.field.inv(lead);
        v.map(|x| self.field.mul(s, x))
    }

    fn apply(&self, m: &[[usize; 3]; 3], v: [usize; 3]) -> [usize; 3] {
        let f = &self.field;
        let mut out = [0; 3];
        for (i, row) in m.iter().enumerate() {
            out[i] = (0..3).fold(0, |acc, j| f.add(acc, f.mul(row[j], v[j])));
        }
        out
    }

    fn det(&self, m: &[[usize; 3]; 3]) -> usize {
        let f = &self.field;
        let term = |a: usize, b: usize, c: usize| f.mul(f.mul(a, b), c);
        let pos = f.add(
            f.add(term(m[0][0], m[1][1], m[2][2]), term(m[0][1], m[1][2], m[2][0])),
            term(m[0][2], m[1][0], m[2][1]),
        );
        let neg = f.add(
            f.add(term(m[0][2], m[1][1], m[2][0]), term(m[0][0], m[1][2], m[2][1])),
            term(m[0][1], m[1][0], m[2][2]),
        );
        f.add(pos, f.neg(neg))
    }

    /// A random matrix of determinant 1 preserving the form: columns form an orthonormal basis.
    pub fn random_special_unitary(&self, rng: &mut impl Rng) -> [[usize; 3]; 3] {
        let n = self.field.size;
        'outer: loop {
            let mut cols: Vec<[usize; 3]> = Vec::new();
            for _ in 0..3 {
                let mut found = None;
                for _ in 0..10_000 {
                    let v = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
                    if self.form(v, v) == 1 && cols.iter().all(|&c| self.form(v, c) == 0) {
                        found = Some(v);
                        break;
                    }
                }
                match found {
                    Some(v) => cols.push(v),
                    None => continue 'outer,
                }
            }
            let mut m = [[0; 3]; 3];
            for (j, c) in cols.iter().enumerate() {
                for i in 0..3 {
                    m[i][j] = c[i];
                }
            }
            let d = self.det(&m);
            let s = self.field.inv(d);
            for row in m.iter_mut() {
                row[0] = self.field.mul(row[0], s);
            }
            debug_assert_eq!(self.det(&m), 1);
            return m;
        }
    }

    /// Action of a matrix on the isotropic points.
    pub fn point_permutation(&self, m: &[[usize; 3]; 3]) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|&v| {
                let w = self.normalise(self.apply(m, v));
                self.points.binary_search(&w).expect("isotropic points are permuted")
            })
            .collect();
        Permutation::from_images(images).expect("bijection")
    }
}

/// `|U3(q)| = q^3 (q^3 + 1)(q^2 - 1) / gcd(3, q + 1)`.
pub fn u3_order(q: usize) -> usize {
    q.pow(3) * (q.pow(3) + 1) * (q * q - 1) / num_integer::gcd(3, q + 1)
}

/// Two random special unitary matrices generating U3(q) on its `q^3 + 1` isotropic points.
pub fn u3_group_file(q: usize, seed: u64) -> GroupFile {
    let space = UnitarySpace::new(q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = u3_order(q);
    loop {
        let gens: Vec<Permutation> = (0..2)
            .map(|_| space.point_permutation(&space.random_special_unitary(&mut rng)))
            .collect();
        if let Ok(t) = GroupTable::close("probe", gens.clone(), order + 1) {
            if t.order() == order {
                return GroupFile {
                    name: format!("U3({q})"),
                    degree: space.points.len(),
                    order,
                    generators: gens,
                };
            }
        }
    }
}

/// A subgroup found by [`find_subgroup_classes`]: two generating element IDs and its class.
pub struct FoundSubgroup {
    pub generators: [u32; 2],
    pub class: SubgroupClass,
}

/// Finds up to `want` pairwise non-conjugate subgroups of order `target`, each generated by
/// an element of order `seed_order` and an element of order `partner_order` (any order when
/// `None`), scanning elements in ID order.
pub fn find_subgroup_classes(
    g: &GroupTable,
    target: usize,
    seed_order: u32,
    partner_order: Option<u32>,
    want: usize,
) -> Vec<FoundSubgroup> {
    let mut found: Vec<FoundSubgroup> = Vec::new();
    let n = g.order() as u32;
    let seeds: Vec<u32> = (0..n).filter(|&x| g.element_order(x) == seed_order).take(4).collect();
    for &x in &seeds {
        for y in 1..n {
            if found.len() >= want {
                return found;
            }
            if partner_order.is_some_and(|o| g.element_order(y) != o) {
                continue;
            }
            let Some(set) = g.subgroup_closure(&[x, y], target) else {
                continue;
            };
            if set.len() != target || found.iter().any(|f| f.class.position(&set).is_some()) {
                continue;
            }
            let mut class = SubgroupClass::from_elements(g, "", set);
            class.conjugate_orbit(g, false).expect("orbit without index check");
            found.push(FoundSubgroup {
                generators: [x, y],
                class,
            });
        }
    }
    found
}

/// Permutation induced by element `h` on the conjugates of `s` (`H_i -> h^-1 H_i h`).
pub fn action_on_conjugates(g: &GroupTable, s: &SubgroupClass, h: u32) -> Permutation {
    let images = s
        .orbit
        .iter()
        .map(|set| {
            let mut img: Vec<u32> = set.iter().map(|&x| g.conjugate(x, h)).collect();
            img.sort_unstable();
            s.position(&img).expect("orbit closed under conjugation")
        })
        .collect();
    Permutation::from_images(images).expect("bijection")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_are_fields() {
        for (p, k) in [(2, 2), (3, 2), (2, 4), (5, 2)] {
            let f = SmallField::new(p, k);
            for a in 1..f.size {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.pow(a, f.size - 1), 1);
            }
        }
    }

    #[test]
    fn isotropic_point_counts() {
        for q in [2, 3, 4] {
            assert_eq!(UnitarySpace::new(q).points.len(), q * q * q + 1);
        }
    }

    #[test]
    fn u3_2_generators_close_to_order_72() {
        let f = u3_group_file(2, 1);
        assert_eq!(f.degree, 9);
        let t = GroupTable::close("U3(2)", f.generators, 100).unwrap();
        assert_eq!(t.order(), 72);
    }

    #[test]
    fn orders() {
        assert_eq!(u3_order(2), 72);
        assert_eq!(u3_order(3), 6048);
        assert_eq!(u3_order(4), 62400);
        assert_eq!(u3_order(5), 126000);
    }
}
