//! Finite groups as Cayley tables, class functions valued in cyclotomic
//! fields, induction and restriction, and symbolic Euler factors.
//!
//! Groups here are tiny (Galois groups of desk-scale cyclotomic extensions),
//! so every structural check is exhaustive: associativity, two-sided
//! identity and inverses, subgroup closure, and the homomorphism law of
//! matrix representations.

use std::sync::{Arc, OnceLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::numtheory::gcd;
use crate::exact::{Cyclotomic, CycloMatrix, CycloPoly, Integer, Rational};

/// A finite group given by its full multiplication table over element
/// indices `0..size`. Optional labels attach external names (unit-group
/// residues) to indices.
#[derive(Debug)]
pub struct FiniteGroup {
    size: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<u64>>,
    classes: OnceLock<Vec<Vec<usize>>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.identity == other.identity
            && self.table == other.table
            && self.labels == other.labels
    }
}

impl FiniteGroup {
    /// Validate a Cayley table and wrap it. Associativity is checked
    /// exhaustively up to size 64 and on a deterministic sample beyond.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Arc<Self>> {
        Self::with_labels(table, identity, None)
    }

    pub fn with_labels(
        table: Vec<Vec<usize>>,
        identity: usize,
        labels: Option<Vec<u64>>,
    ) -> Result<Arc<Self>> {
        let size = table.len();
        if size == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::NotAGroup(format!(
                    "row {g} has length {} in a table of size {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::NotAGroup(format!(
                    "row {g} contains out-of-range element {bad}"
                )));
            }
        }
        if identity >= size {
            return Err(Error::NotAGroup(format!("identity {identity} out of range")));
        }
        for g in 0..size {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(Error::NotAGroup(format!(
                    "element {identity} is not a two-sided identity at {g}"
                )));
            }
        }
        let mut inverse = vec![usize::MAX; size];
        for g in 0..size {
            match (0..size).find(|&h| table[g][h] == identity && table[h][g] == identity) {
                Some(h) => inverse[g] = h,
                None => {
                    return Err(Error::NotAGroup(format!(
                        "element {g} has no two-sided inverse"
                    )))
                }
            }
        }
        if size <= 64 {
            for a in 0..size {
                for b in 0..size {
                    for c in 0..size {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // deterministic splitmix sample
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..262_144 {
                let a = (next() % size as u64) as usize;
                let b = (next() % size as u64) as usize;
                let c = (next() % size as u64) as usize;
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != size {
                return Err(Error::NotAGroup(format!(
                    "label vector length {} does not match size {size}",
                    ls.len()
                )));
            }
        }
        Ok(Arc::new(FiniteGroup {
            size,
            table,
            identity,
            inverse,
            labels,
            classes: OnceLock::new(),
        }))
    }

    pub fn trivial() -> Arc<Self> {
        FiniteGroup::from_table(vec![vec![0]], 0).expect("one-element table is a group")
    }

    /// Cyclic group of order n with generator 1 (addition mod n).
    pub fn cyclic(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table, 0).expect("cyclic table is a group")
    }

    /// Symmetric group on `n` letters as a Cayley table (permutations in
    /// lexicographic order, index 0 the identity). Intended for small `n`.
    pub fn symmetric(n: usize) -> Arc<Self> {
        assert!((1..=5).contains(&n), "factorial table only at desk scale");
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(current.clone());
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
            q.iter().map(|&x| p[x]).collect()
        };
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = compose(p, q);
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table, 0).expect("permutation composition is a group")
    }

    /// Direct product, elements indexed as `a * |B| + b`.
    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<Self> {
        let n = a.size * b.size;
        let mut table = vec![vec![0usize; n]; n];
        for xa in 0..a.size {
            for xb in 0..b.size {
                for ya in 0..a.size {
                    for yb in 0..b.size {
                        let x = xa * b.size + xb;
                        let y = ya * b.size + yb;
                        table[x][y] = a.mul(xa, ya) * b.size + b.mul(xb, yb);
                    }
                }
            }
        }
        FiniteGroup::from_table(table, a.identity * b.size + b.identity)
            .expect("product of groups is a group")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn order_of(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (a..self.size).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> Option<u64> {
        self.labels.as_ref().map(|ls| ls[g])
    }

    /// Index of an element by its external label.
    pub fn index_of_label(&self, label: u64) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|&l| l == label))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let mut seen = vec![false; self.size];
            let mut classes = Vec::new();
            for g in 0..self.size {
                if seen[g] {
                    continue;
                }
                let mut class: Vec<usize> = (0..self.size)
                    .map(|x| self.mul(self.mul(x, g), self.inv(x)))
                    .collect();
                class.sort_unstable();
                class.dedup();
                for &c in &class {
                    seen[c] = true;
                }
                classes.push(class);
            }
            classes
        })
    }

    /// Validate a list of element indices as a subgroup and re-index it as a
    /// group in its own right.
    pub fn subgroup(self: &Arc<Self>, elements: &[usize]) -> Result<Subgroup> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() || elems.iter().any(|&g| g >= self.size) {
            return Err(Error::NotAGroup(
                "subgroup elements empty or out of range".into(),
            ));
        }
        let mut member = vec![false; self.size];
        for &g in &elems {
            member[g] = true;
        }
        for &a in &elems {
            for &b in &elems {
                if !member[self.mul(a, b)] {
                    return Err(Error::NotASubgroup { a, b });
                }
            }
        }
        if !member[self.identity] {
            // unreachable for a nonempty closed subset of a finite group
            return Err(Error::NotAGroup("subgroup misses the identity".into()));
        }
        let pos = |g: usize| elems.iter().position(|&x| x == g).unwrap();
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let labels = elems.iter().map(|&g| g as u64).collect();
        let group = FiniteGroup::with_labels(table, pos(self.identity), Some(labels))?;
        Ok(Subgroup {
            parent: Arc::clone(self),
            elements: elems,
            group,
        })
    }

    /// Every subgroup, found by closing joins of cyclic subgroups; intended
    /// for groups of order at most ~16.
    pub fn all_subgroups(self: &Arc<Self>) -> Vec<Vec<usize>> {
        let closure = |seed: &[usize]| -> Vec<usize> {
            let mut member = vec![false; self.size];
            member[self.identity] = true;
            for &s in seed {
                member[s] = true;
            }
            loop {
                let current: Vec<usize> = (0..self.size).filter(|&g| member[g]).collect();
                let mut grew = false;
                for &a in &current {
                    for &b in &current {
                        let p = self.mul(a, b);
                        if !member[p] {
                            member[p] = true;
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            (0..self.size).filter(|&g| member[g]).collect()
        };
        let mut subgroups: Vec<Vec<usize>> = vec![vec![self.identity]];
        let push_new = |set: Vec<usize>, subs: &mut Vec<Vec<usize>>| {
            if !subs.contains(&set) {
                subs.push(set);
            }
        };
        for g in 0..self.size {
            push_new(closure(&[g]), &mut subgroups);
        }
        loop {
            let snapshot = subgroups.clone();
            let before = subgroups.len();
            for a in &snapshot {
                for b in &snapshot {
                    let mut seed = a.clone();
                    seed.extend_from_slice(b);
                    push_new(closure(&seed), &mut subgroups);
                }
            }
            if subgroups.len() == before {
                break;
            }
        }
        subgroups.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
        subgroups
    }
}

/// The multiplicative group of residues coprime to N, with residues as
/// element labels (ascending). For N = 1 the single residue is 0.
pub fn unit_group(n: u64) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    assert!(n < 1 << 32, "residue products must not overflow");
    let residues: Vec<u64> = if n == 1 {
        vec![0]
    } else {
        (1..n).filter(|&a| gcd(a, n) == 1).collect()
    };
    let index = |r: u64| residues.iter().position(|&x| x == r).unwrap();
    let table: Vec<Vec<usize>> = residues
        .iter()
        .map(|&a| residues.iter().map(|&b| index(a * b % n)).collect())
        .collect();
    let identity = if n == 1 { 0 } else { index(1) };
    FiniteGroup::with_labels(table, identity, Some(residues))
        .expect("residue multiplication mod n is a group")
}

/// A validated subgroup: the sorted parent indices plus the re-indexed
/// group structure (whose labels are the parent indices).
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    group: Arc<FiniteGroup>,
}

impl Subgroup {
    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of a parent element inside the subgroup.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }
}

/// A class function on a finite group with values in cyclotomic fields,
/// stored per element. Genuine characters have a nonnegative integer value
/// at the identity; virtual characters (differences) are permitted anywhere
/// a degree is not read off.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.size() {
            return Err(Error::DimensionMismatch(format!(
                "character needs {} values, got {}",
                group.size(),
                values.len()
            )));
        }
        for class in group.conjugacy_classes() {
            let first = class[0];
            for &g in &class[1..] {
                if values[g] != values[first] {
                    return Err(Error::NotClassConstant { g: first, h: g });
                }
            }
        }
        if values[group.identity()].as_integer().is_none() {
            return Err(Error::NonIntegralDegree);
        }
        Ok(Character { group, values })
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let values = vec![Cyclotomic::one(1); group.size()];
        Character { group, values }
    }

    /// The character of the regular representation: |G| at the identity,
    /// zero elsewhere.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let mut values = vec![Cyclotomic::zero(1); group.size()];
        values[group.identity()] = Cyclotomic::from_integer(group.size() as i64);
        Character { group, values }
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let values = vec![Cyclotomic::zero(1); group.size()];
        Character { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &Cyclotomic {
        &self.values[g]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// The value at the identity as an integer (genuine or virtual degree).
    pub fn degree_integer(&self) -> Integer {
        self.values[self.group.identity()]
            .as_integer()
            .expect("validated on construction")
    }

    /// Degree of a genuine character; errors when the identity value is
    /// negative (virtual input).
    pub fn degree(&self) -> Result<u64> {
        let d = self.degree_integer();
        if d.is_negative() {
            return Err(Error::NonIntegralInvariants {
                value: d.to_string(),
            });
        }
        Ok(u64::try_from(d).expect("nonnegative"))
    }

    fn check_same_group(&self, other: &Character) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `(1/|G|) sum_g chi(g) psi(g^{-1})`, exact. For genuine characters
    /// this is a nonnegative rational integer.
    pub fn inner_product(&self, other: &Character) -> Result<Cyclotomic> {
        self.check_same_group(other)?;
        let g_order = self.group.size();
        let mut acc = Cyclotomic::zero(1);
        for g in 0..g_order {
            let term = self.values[g].mul(&other.values[self.group.inv(g)]);
            acc = acc.add(&term);
        }
        Ok(acc.scale(&Rational::new(1.into(), (g_order as i64).into())))
    }

    /// Pointwise product (character of the tensor product).
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        self.check_same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.mul(b))
            .collect();
        Character::new(Arc::clone(&self.group), values)
    }

    /// Pointwise sum (virtual characters allowed).
    pub fn plus(&self, other: &Character) -> Result<Character> {
        self.check_same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Character::new(Arc::clone(&self.group), values)
    }

    /// Pointwise difference (virtual characters allowed).
    pub fn minus(&self, other: &Character) -> Result<Character> {
        self.check_same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.sub(b))
            .collect();
        Character::new(Arc::clone(&self.group), values)
    }

    /// Multiplicity of the trivial character: the dimension of the invariant
    /// subspace. Errors when the inner product is not a nonnegative rational
    /// integer, which signals an invalid input character.
    pub fn dim_invariants(&self) -> Result<u64> {
        let ip = self.inner_product(&Character::trivial(Arc::clone(&self.group)))?;
        match ip.as_integer() {
            Some(n) if !n.is_negative() => Ok(u64::try_from(n).expect("nonnegative")),
            _ => Err(Error::NonIntegralInvariants {
                value: ip.to_string(),
            }),
        }
    }
}

/// Induced character: `(Ind psi)(g) = (1/|H|) sum_{x in G, x^{-1} g x in H}
/// psi(x^{-1} g x)`, with `psi` given on the subgroup's own group structure.
pub fn induce(sub: &Subgroup, psi: &Character) -> Result<Character> {
    if !(Arc::ptr_eq(psi.group(), sub.group()) || psi.group() == sub.group()) {
        return Err(Error::GroupMismatch);
    }
    let g_group = sub.parent();
    let n = g_group.size();
    let mut values = Vec::with_capacity(n);
    let h_order = Rational::new(1.into(), (sub.order() as i64).into());
    for g in 0..n {
        let mut acc = Cyclotomic::zero(1);
        for x in 0..n {
            let conj = g_group.mul(g_group.mul(g_group.inv(x), g), x);
            if let Some(pos) = sub.position(conj) {
                acc = acc.add(psi.value(pos));
            }
        }
        values.push(acc.scale(&h_order));
    }
    Character::new(Arc::clone(g_group), values)
}

/// Restriction of a character to a subgroup (values copied on H).
pub fn restrict(chi: &Character, sub: &Subgroup) -> Result<Character> {
    if !(Arc::ptr_eq(chi.group(), sub.parent()) || chi.group() == sub.parent()) {
        return Err(Error::GroupMismatch);
    }
    let values = sub.elements().iter().map(|&g| chi.value(g).clone()).collect();
    Character::new(Arc::clone(sub.group()), values)
}

/// A matrix representation: one invertible cyclotomic matrix per element,
/// validated as a homomorphism (exhaustively for |G| <= 24, sampled above).
#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    images: Vec<CycloMatrix>,
}

impl MatrixRep {
    pub fn new(group: Arc<FiniteGroup>, images: Vec<CycloMatrix>) -> Result<Self> {
        if images.len() != group.size() {
            return Err(Error::DimensionMismatch(format!(
                "representation needs {} images, got {}",
                group.size(),
                images.len()
            )));
        }
        let dim = images[0].rows();
        for m in &images {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::DimensionMismatch(
                    "representation images must be square of equal size".into(),
                ));
            }
        }
        if images[group.identity()] != CycloMatrix::identity(dim) {
            return Err(Error::InvalidArgument(
                "identity element must map to the identity matrix".into(),
            ));
        }
        let n = group.size();
        let check = |a: usize, b: usize, images: &[CycloMatrix]| -> Result<()> {
            let prod = images[a].mul(&images[b])?;
            if prod != images[group.mul(a, b)] {
                return Err(Error::InvalidArgument(format!(
                    "images violate the homomorphism law at ({a}, {b})"
                )));
            }
            Ok(())
        };
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    check(a, b, &images)?;
                }
            }
        } else {
            let mut state = 0x243f6a8885a308d3u64;
            let mut next = move || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..1024 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                check(a, b, &images)?;
            }
        }
        Ok(MatrixRep { group, dim, images })
    }

    /// One-dimensional representation from a character whose values are
    /// roots of unity (or any nonzero scalars).
    pub fn from_linear_character(chi: &Character) -> Result<Self> {
        let images = chi
            .values()
            .iter()
            .map(|v| CycloMatrix::new(1, 1, vec![v.clone()]))
            .collect::<Result<Vec<_>>>()?;
        MatrixRep::new(Arc::clone(chi.group()), images)
    }

    /// The regular representation: permutation matrices of right
    /// multiplication on the group itself.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.size();
        let mut images = Vec::with_capacity(n);
        for g in 0..n {
            let mut m = CycloMatrix::zeros(n, n);
            for s in 0..n {
                *m.at_mut(s, group.mul(s, g)) = Cyclotomic::one(1);
            }
            images.push(m);
        }
        MatrixRep::new(Arc::clone(group), images).expect("regular representation is a homomorphism")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, g: usize) -> &CycloMatrix {
        &self.images[g]
    }

    /// The character of the representation (traces of the images).
    pub fn character(&self) -> Result<Character> {
        let values = self
            .images
            .iter()
            .map(|m| m.trace())
            .collect::<Result<Vec<_>>>()?;
        Character::new(Arc::clone(&self.group), values)
    }

    /// Conjugated copy `Q rho Q^{-1}`; used to build test representations
    /// whose invariant structure is not visible by inspection.
    pub fn conjugated(&self, q: &CycloMatrix) -> Result<MatrixRep> {
        let q_inv = invert_matrix(q)?;
        let images = self
            .images
            .iter()
            .map(|m| q.mul(m)?.mul(&q_inv))
            .collect::<Result<Vec<_>>>()?;
        MatrixRep::new(Arc::clone(&self.group), images)
    }

    /// Symbolic local factor `det(I - T * rho(frob) | V^inertia)`.
    ///
    /// `inertia` must be a subgroup and `frob` must normalize it; the result
    /// depends only on the coset of `frob` modulo the inertia subgroup.
    /// Degree equals `dim V^inertia`; the constant polynomial 1 is returned
    /// when the fixed space is zero.
    pub fn euler_factor(&self, inertia: &[usize], frob: usize) -> Result<CycloPoly> {
        let sub = self.group.subgroup(inertia)?;
        if frob >= self.group.size() {
            return Err(Error::InvalidArgument(format!(
                "frobenius index {frob} out of range"
            )));
        }
        let frob_inv = self.group.inv(frob);
        for &h in sub.elements() {
            let conj = self.group.mul(self.group.mul(frob, h), frob_inv);
            if !sub.contains(conj) {
                return Err(Error::FrobeniusDoesNotNormalize { frob, h });
            }
        }
        let mats: Vec<CycloMatrix> = sub
            .elements()
            .iter()
            .map(|&h| self.images[h].clone())
            .collect();
        let basis = CycloMatrix::fixed_subspace(&mats)?;
        if basis.cols() == 0 {
            return Ok(CycloPoly::one());
        }
        // frob normalizes the inertia subgroup, so its image preserves the
        // fixed space; restrict it to the basis
        let mapped = self.images[frob].mul(&basis)?;
        let restricted = basis.solve_exact(&mapped)?;
        restricted.det_id_minus_t()
    }
}

fn invert_matrix(q: &CycloMatrix) -> Result<CycloMatrix> {
    if !q.is_square() {
        return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
    }
    let n = q.rows();
    let x = q.solve_exact(&CycloMatrix::identity(n))?;
    Ok(x)
}
