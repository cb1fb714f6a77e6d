//! Finite groups, their conjugacy classes and character tables, and the
//! class-function functionals built on them (Fourier coefficients, the
//! `lambda_{j,k}` norms, `S_t`, induction, Frobenius-Schur indicators).

pub mod classfn;
pub mod explicit;
pub mod induce;
pub mod io;
pub mod symmetric;
pub mod table;

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
pub use classfn::{ClassFunction, StResult};
pub use explicit::MultTable;
pub use induce::SubgroupEmbedding;
pub use table::{character_table, CharacterTable};

/// Supported group families.
#[derive(Debug, Clone)]
pub enum GroupKind {
    /// Cyclic group of order n.
    Cyclic(u64),
    /// Direct product of cyclic groups with the given factor orders.
    Abelian(Vec<u64>),
    /// Dihedral group of order 2n, n odd >= 3.
    Dihedral(u64),
    /// Affine group of F_p (x -> cx + d), p an odd prime; order p(p-1).
    Affine(u64),
    /// Symmetric group S_n.
    Symmetric(u32),
    /// Arbitrary group given by a multiplication table.
    Explicit(Arc<MultTable>),
}

/// A group element in the symbolic per-kind model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// Exponent vector for cyclic/abelian kinds.
    Tuple(Vec<u64>),
    /// rot = sigma^r, flip = whether a reflection tau precedes it.
    Dihedral { flip: bool, rot: u64 },
    /// The map x -> c x + d over F_p, c != 0.
    Affine { c: u64, d: u64 },
    /// Permutation as image list (0-based).
    Perm(Vec<u8>),
    /// Index into an explicit multiplication table.
    Idx(usize),
}

/// A conjugacy class: canonical representative, size, display label.
#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: Element,
    pub size: u64,
    pub label: String,
}

/// A finite group with precomputed conjugacy classes and power map.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub kind: GroupKind,
    order: u64,
    classes: Vec<ConjClass>,
    /// class index -> class index of squares of its elements
    power_map: Vec<usize>,
}

/// Largest group order for which full element enumeration is offered.
pub const MAX_ENUMERABLE_ORDER: u64 = 50_000;

impl FiniteGroup {
    pub fn cyclic(n: u64) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::UnsupportedGroupKind("cyclic(0)".into()));
        }
        Self::abelian_kind(GroupKind::Cyclic(n), vec![n])
    }

    pub fn abelian(factors: Vec<u64>) -> Result<Arc<Self>> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::UnsupportedGroupKind(format!(
                "abelian({factors:?})"
            )));
        }
        Self::abelian_kind(GroupKind::Abelian(factors.clone()), factors)
    }

    fn abelian_kind(kind: GroupKind, factors: Vec<u64>) -> Result<Arc<Self>> {
        let order: u64 = factors.iter().product();
        let mut classes = Vec::with_capacity(order as usize);
        let mut tuple = vec![0u64; factors.len()];
        loop {
            classes.push(ConjClass {
                rep: Element::Tuple(tuple.clone()),
                size: 1,
                label: format!(
                    "({})",
                    tuple.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                ),
            });
            // mixed-radix increment (last coordinate fastest)
            let mut i = factors.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < factors[i] {
                    break;
                }
                tuple[i] = 0;
            }
            if tuple.iter().all(|&e| e == 0) {
                break;
            }
        }
        let mut g = FiniteGroup { kind, order, classes, power_map: Vec::new() };
        g.power_map = g.compute_power_map();
        Ok(Arc::new(g))
    }

    pub fn dihedral(n: u64) -> Result<Arc<Self>> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::UnsupportedGroupKind(format!(
                "dihedral({n}) requires odd n >= 3"
            )));
        }
        let mut classes = vec![ConjClass {
            rep: Element::Dihedral { flip: false, rot: 0 },
            size: 1,
            label: "e".into(),
        }];
        for j in 1..=(n - 1) / 2 {
            classes.push(ConjClass {
                rep: Element::Dihedral { flip: false, rot: j },
                size: 2,
                label: format!("rot{j}"),
            });
        }
        classes.push(ConjClass {
            rep: Element::Dihedral { flip: true, rot: 0 },
            size: n,
            label: "refl".into(),
        });
        let mut g = FiniteGroup {
            kind: GroupKind::Dihedral(n),
            order: 2 * n,
            classes,
            power_map: Vec::new(),
        };
        g.power_map = g.compute_power_map();
        Ok(Arc::new(g))
    }

    pub fn affine(p: u64) -> Result<Arc<Self>> {
        if p < 3 || !is_prime_u64(p) {
            return Err(Error::UnsupportedGroupKind(format!(
                "affine({p}) requires an odd prime"
            )));
        }
        let mut classes = vec![
            ConjClass { rep: Element::Affine { c: 1, d: 0 }, size: 1, label: "Id".into() },
            ConjClass {
                rep: Element::Affine { c: 1, d: 1 },
                size: p - 1,
                label: "U".into(),
            },
        ];
        for c in 2..p {
            classes.push(ConjClass {
                rep: Element::Affine { c, d: 0 },
                size: p,
                label: format!("T{c}"),
            });
        }
        let mut g = FiniteGroup {
            kind: GroupKind::Affine(p),
            order: p * (p - 1),
            classes,
            power_map: Vec::new(),
        };
        g.power_map = g.compute_power_map();
        Ok(Arc::new(g))
    }

    pub fn symmetric(n: u32) -> Result<Arc<Self>> {
        if n == 0 || n > symmetric::MAX_SYMMETRIC_N {
            return Err(Error::UnsupportedGroupKind(format!(
                "symmetric({n}) outside supported range 1..={}",
                symmetric::MAX_SYMMETRIC_N
            )));
        }
        let parts = symmetric::partitions(n);
        let nfact = factorial(n as u64);
        let classes = parts
            .iter()
            .map(|lam| ConjClass {
                rep: Element::Perm(symmetric::canonical_perm(lam, n)),
                size: nfact / symmetric::centralizer_order(lam),
                label: format!(
                    "[{}]",
                    lam.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                ),
            })
            .collect();
        let mut g = FiniteGroup {
            kind: GroupKind::Symmetric(n),
            order: nfact,
            classes,
            power_map: Vec::new(),
        };
        g.power_map = g.compute_power_map();
        Ok(Arc::new(g))
    }

    pub fn explicit(table: MultTable) -> Result<Arc<Self>> {
        table.validate()?;
        let order = table.order() as u64;
        let classes = table.conjugacy_classes();
        let table = Arc::new(table);
        let mut g = FiniteGroup {
            kind: GroupKind::Explicit(table),
            order,
            classes,
            power_map: Vec::new(),
        };
        g.power_map = g.compute_power_map();
        Ok(Arc::new(g))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn identity(&self) -> Element {
        match &self.kind {
            GroupKind::Cyclic(_) | GroupKind::Abelian(_) => {
                if let Element::Tuple(t) = &self.classes[0].rep {
                    Element::Tuple(vec![0; t.len()])
                } else {
                    unreachable!()
                }
            }
            GroupKind::Dihedral(_) => Element::Dihedral { flip: false, rot: 0 },
            GroupKind::Affine(_) => Element::Affine { c: 1, d: 0 },
            GroupKind::Symmetric(n) => Element::Perm((0..*n as u8).collect()),
            GroupKind::Explicit(t) => Element::Idx(t.identity()),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (&self.kind, a, b) {
            (GroupKind::Cyclic(_) | GroupKind::Abelian(_), Element::Tuple(x), Element::Tuple(y)) => {
                let f = self.abelian_factors();
                Element::Tuple(
                    x.iter().zip(y).zip(f).map(|((&a, &b), &d)| (a + b) % d).collect(),
                )
            }
            (GroupKind::Dihedral(n), a, b) => {
                // tau^s sigma^r with relation sigma tau = tau sigma^{-1}
                let (s1, r1) = dihedral_parts(a);
                let (s2, r2) = dihedral_parts(b);
                // (tau^s1 sigma^r1)(tau^s2 sigma^r2) = tau^{s1+s2} sigma^{r2 + (-1)^{s2} r1}
                let flip = s1 ^ s2;
                let r1s = if s2 { (n - r1 % n) % n } else { r1 };
                Element::Dihedral { flip, rot: (r1s + r2) % n }
            }
            (GroupKind::Affine(p), Element::Affine { c: c1, d: d1 }, Element::Affine { c: c2, d: d2 }) => {
                // composition (c1,d1) after (c2,d2): x -> c1(c2 x + d2) + d1
                Element::Affine { c: (c1 * c2) % p, d: (c1 * d2 + d1) % p }
            }
            (GroupKind::Symmetric(_), Element::Perm(x), Element::Perm(y)) => {
                // (x*y)(i) = x(y(i))
                Element::Perm(y.iter().map(|&i| x[i as usize]).collect())
            }
            (GroupKind::Explicit(t), Element::Idx(i), Element::Idx(j)) => {
                Element::Idx(t.mul(*i, *j))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn inv(&self, a: &Element) -> Element {
        match (&self.kind, a) {
            (GroupKind::Cyclic(_) | GroupKind::Abelian(_), Element::Tuple(x)) => {
                let f = self.abelian_factors();
                Element::Tuple(x.iter().zip(f).map(|(&a, &d)| (d - a % d) % d).collect())
            }
            (GroupKind::Dihedral(n), a) => {
                let (s, r) = dihedral_parts(a);
                if s {
                    // reflections are involutions
                    Element::Dihedral { flip: true, rot: r }
                } else {
                    Element::Dihedral { flip: false, rot: (n - r % n) % n }
                }
            }
            (GroupKind::Affine(p), Element::Affine { c, d }) => {
                let ci = mod_inverse(*c, *p);
                Element::Affine { c: ci, d: (ci * (p - d % p)) % p }
            }
            (GroupKind::Symmetric(_), Element::Perm(x)) => {
                let mut inv = vec![0u8; x.len()];
                for (i, &xi) in x.iter().enumerate() {
                    inv[xi as usize] = i as u8;
                }
                Element::Perm(inv)
            }
            (GroupKind::Explicit(t), Element::Idx(i)) => Element::Idx(t.inv(*i)),
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn pow(&self, a: &Element, m: u64) -> Element {
        let mut acc = self.identity();
        let mut base = a.clone();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            m >>= 1;
        }
        acc
    }

    pub fn class_of(&self, a: &Element) -> usize {
        match (&self.kind, a) {
            (GroupKind::Cyclic(_) | GroupKind::Abelian(_), Element::Tuple(x)) => {
                let f = self.abelian_factors();
                let mut idx = 0u64;
                for (&e, &d) in x.iter().zip(f) {
                    idx = idx * d + e % d;
                }
                idx as usize
            }
            (GroupKind::Dihedral(n), a) => {
                let (s, r) = dihedral_parts(a);
                if s {
                    ((n - 1) / 2 + 1) as usize
                } else {
                    let r = r % n;
                    (r.min(n - r)) as usize
                }
            }
            (GroupKind::Affine(_), Element::Affine { c, d }) => match (c, d) {
                (1, 0) => 0,
                (1, _) => 1,
                (c, _) => *c as usize,
            },
            (GroupKind::Symmetric(_), Element::Perm(x)) => {
                let lam = symmetric::cycle_type(x);
                symmetric::partition_index(&lam, x.len() as u32)
            }
            (GroupKind::Explicit(t), Element::Idx(i)) => t.class_of(*i),
            _ => panic!("element kind does not match group kind"),
        }
    }

    /// Class of g^m for any g in the given class (well-defined: conjugation
    /// commutes with taking powers).
    pub fn class_power(&self, class: usize, m: u64) -> usize {
        let rep = &self.classes[class].rep;
        self.class_of(&self.pow(rep, m))
    }

    /// class index -> class of squares (Frobenius-Schur plumbing).
    pub fn power_map(&self) -> &[usize] {
        &self.power_map
    }

    fn compute_power_map(&self) -> Vec<usize> {
        (0..self.classes.len()).map(|c| self.class_power(c, 2)).collect()
    }

    fn abelian_factors(&self) -> &[u64] {
        match &self.kind {
            GroupKind::Cyclic(n) => std::slice::from_ref(n),
            GroupKind::Abelian(f) => f,
            _ => unreachable!(),
        }
    }

    /// Full element enumeration, in a deterministic order (used by
    /// ramification filtrations, explicit induction, and brute-force
    /// oracles). Errors for groups beyond `MAX_ENUMERABLE_ORDER`.
    pub fn elements(&self) -> Result<Vec<Element>> {
        if self.order > MAX_ENUMERABLE_ORDER {
            return Err(Error::CostGuard(format!(
                "element enumeration for |G| = {} exceeds cap {}",
                self.order, MAX_ENUMERABLE_ORDER
            )));
        }
        Ok(match &self.kind {
            GroupKind::Cyclic(_) | GroupKind::Abelian(_) => {
                self.classes.iter().map(|c| c.rep.clone()).collect()
            }
            GroupKind::Dihedral(n) => {
                let mut v = Vec::with_capacity((2 * n) as usize);
                for flip in [false, true] {
                    for rot in 0..*n {
                        v.push(Element::Dihedral { flip, rot });
                    }
                }
                v
            }
            GroupKind::Affine(p) => {
                let mut v = Vec::with_capacity((p * (p - 1)) as usize);
                for c in 1..*p {
                    for d in 0..*p {
                        v.push(Element::Affine { c, d });
                    }
                }
                v
            }
            GroupKind::Symmetric(n) => {
                let mut v = Vec::new();
                let mut perm: Vec<u8> = (0..*n as u8).collect();
                loop {
                    v.push(Element::Perm(perm.clone()));
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
                v
            }
            GroupKind::Explicit(t) => (0..t.order()).map(Element::Idx).collect(),
        })
    }

    /// Kind name and parameters for display / file headers.
    pub fn kind_string(&self) -> String {
        match &self.kind {
            GroupKind::Cyclic(n) => format!("cyclic {n}"),
            GroupKind::Abelian(f) => format!(
                "abelian {}",
                f.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
            ),
            GroupKind::Dihedral(n) => format!("dihedral {n}"),
            GroupKind::Affine(p) => format!("affine {p}"),
            GroupKind::Symmetric(n) => format!("symmetric {n}"),
            GroupKind::Explicit(t) => format!("explicit {}", t.order()),
        }
    }
}

fn dihedral_parts(a: &Element) -> (bool, u64) {
    match a {
        Element::Dihedral { flip, rot } => (*flip, *rot),
        _ => panic!("expected dihedral element"),
    }
}

/// Lexicographic next permutation; false when wrapped around.
fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.sort_unstable();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {m}");
    t.rem_euclid(m as i64) as u64
}

/// e(x) = exp(2 pi i x)
pub(crate) fn unit_root(x: f64) -> Complex64 {
    let th = 2.0 * std::f64::consts::PI * x;
    Complex64::new(th.cos(), th.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_class_structure() {
        for n in [3u64, 5, 7, 11] {
            let g = FiniteGroup::dihedral(n).unwrap();
            assert_eq!(g.class_count() as u64, (n + 3) / 2);
            assert_eq!(g.classes().iter().map(|c| c.size).sum::<u64>(), 2 * n);
        }
    }

    #[test]
    fn affine_class_structure() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = FiniteGroup::affine(p).unwrap();
            assert_eq!(g.class_count() as u64, p);
            assert_eq!(g.classes().iter().map(|c| c.size).sum::<u64>(), p * (p - 1));
        }
    }

    #[test]
    fn brute_force_classes_match_closed_form() {
        // conjugacy closure: for each element pair, h g h^-1 is in class_of(g)
        for g in [
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::affine(5).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            let els = g.elements().unwrap();
            assert_eq!(els.len() as u64, g.order());
            // class sizes by brute force
            let mut counts = vec![0u64; g.class_count()];
            for e in &els {
                counts[g.class_of(e)] += 1;
            }
            for (i, c) in g.classes().iter().enumerate() {
                assert_eq!(counts[i], c.size, "class {} of {}", i, g.kind_string());
            }
            for e in &els {
                let ce = g.class_of(e);
                for h in &els {
                    let conj = g.mul(&g.mul(h, e), &g.inv(h));
                    assert_eq!(g.class_of(&conj), ce);
                }
            }
        }
    }

    #[test]
    fn group_axioms_spot_check() {
        for g in [
            FiniteGroup::dihedral(7).unwrap(),
            FiniteGroup::affine(7).unwrap(),
            FiniteGroup::abelian(vec![2, 4]).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            let els = g.elements().unwrap();
            let e = g.identity();
            for a in &els {
                assert_eq!(g.mul(a, &e), *a);
                assert_eq!(g.mul(&g.inv(a), a), e);
                for b in &els {
                    for c in els.iter().take(5) {
                        assert_eq!(
                            g.mul(&g.mul(a, b), c),
                            g.mul(a, &g.mul(b, c)),
                            "associativity in {}",
                            g.kind_string()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn class_power_well_defined() {
        let g = FiniteGroup::affine(7).unwrap();
        // T_c^m lands in T_{c^m} unless c^m = 1 where it collapses to Id
        for c in 2..7u64 {
            for m in 1..10u64 {
                let cm = c.pow(m as u32) % 7;
                let expect = if cm == 1 { 0 } else { cm as usize };
                assert_eq!(g.class_power(c as usize, m), expect, "c={c} m={m}");
            }
        }
        // U^m: U if 7 does not divide m, Id otherwise
        assert_eq!(g.class_power(1, 3), 1);
        assert_eq!(g.class_power(1, 7), 0);
    }

    #[test]
    fn power_map_squares() {
        let g = FiniteGroup::dihedral(5).unwrap();
        // reflections square to e; sigma^1 squares to sigma^2 class
        let refl_class = g.class_count() - 1;
        assert_eq!(g.power_map()[refl_class], 0);
        assert_eq!(g.power_map()[1], 2);
        // sigma^2 squares to sigma^4 ~ sigma^1 class
        assert_eq!(g.power_map()[2], 1);
    }
}
