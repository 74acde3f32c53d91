//! Finite abelian groups of the form (Z/n)^k: elements, homomorphisms,
//! enumerated subgroups, quotients and characters.
//!
//! The group law is written additively throughout; a product `ab` of group
//! elements in multiplicative notation corresponds to `a + b` here and `a^2`
//! to `2a`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::rank_mod_prime;

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// An element of (Z/n)^k with coordinates reduced into `[0, n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupVector {
    modulus: u32,
    coords: Vec<u32>,
}

impl GroupVector {
    pub fn new(modulus: u32, coords: &[i64]) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let coords = coords
            .iter()
            .map(|&c| c.rem_euclid(modulus as i64) as u32)
            .collect();
        GroupVector { modulus, coords }
    }

    pub fn zero(modulus: u32, dim: usize) -> Self {
        GroupVector {
            modulus,
            coords: vec![0; dim],
        }
    }

    pub fn unit(modulus: u32, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(modulus, dim);
        v.coords[i] = 1 % modulus;
        v
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &GroupVector) -> Result<()> {
        if self.modulus != other.modulus || self.dim() != other.dim() {
            return Err(Error::dim(
                format!("(Z/{})^{}", self.modulus, self.dim()),
                format!("(Z/{})^{}", other.modulus, other.dim()),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GroupVector) -> Result<GroupVector> {
        self.check_same(other)?;
        Ok(self.add(other))
    }

    /// Coordinatewise sum; panics on mismatched ambients.
    pub fn add(&self, other: &GroupVector) -> GroupVector {
        assert!(
            self.modulus == other.modulus && self.dim() == other.dim(),
            "adding elements of different groups"
        );
        let n = self.modulus;
        GroupVector {
            modulus: n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (a + b) % n)
                .collect(),
        }
    }

    pub fn neg(&self) -> GroupVector {
        let n = self.modulus;
        GroupVector {
            modulus: n,
            coords: self.coords.iter().map(|&a| (n - a) % n).collect(),
        }
    }

    pub fn sub(&self, other: &GroupVector) -> GroupVector {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> GroupVector {
        let n = self.modulus as i64;
        GroupVector {
            modulus: self.modulus,
            coords: self
                .coords
                .iter()
                .map(|&a| (a as i64 * k.rem_euclid(n)).rem_euclid(n) as u32)
                .collect(),
        }
    }

    /// Additive order of the element.
    pub fn order(&self) -> u32 {
        let n = self.modulus;
        self.coords
            .iter()
            .map(|&a| n / gcd(a, n))
            .fold(1, lcm)
    }

    /// Concatenation (direct sum) of two vectors with the same modulus.
    pub fn concat(&self, other: &GroupVector) -> GroupVector {
        assert_eq!(self.modulus, other.modulus);
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        GroupVector {
            modulus: self.modulus,
            coords,
        }
    }

    /// All elements of (Z/n)^k in lexicographic order.
    pub fn all(modulus: u32, dim: usize) -> Vec<GroupVector> {
        let total = (modulus as usize).pow(dim as u32);
        (0..total)
            .map(|mut idx| {
                let mut coords = vec![0u32; dim];
                for c in coords.iter_mut().rev() {
                    *c = (idx % modulus as usize) as u32;
                    idx /= modulus as usize;
                }
                GroupVector { modulus, coords }
            })
            .collect()
    }
}

impl fmt::Debug for GroupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for GroupVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// A homomorphism (Z/n)^k -> (Z/n)^k' given by a k'×k matrix acting on
/// column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    modulus: u32,
    source_dim: usize,
    matrix: Vec<Vec<u32>>,
}

impl GroupHom {
    pub fn new(modulus: u32, source_dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut matrix = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != source_dim {
                return Err(Error::dim(source_dim, r.len()));
            }
            matrix.push(
                r.iter()
                    .map(|&x| x.rem_euclid(modulus as i64) as u32)
                    .collect(),
            );
        }
        Ok(GroupHom {
            modulus,
            source_dim,
            matrix,
        })
    }

    /// The homomorphism whose columns are the given images of the unit vectors.
    pub fn from_columns(columns: &[GroupVector]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::Config("homomorphism needs at least one column".into()))?;
        let (n, target) = (first.modulus(), first.dim());
        for c in columns {
            if c.modulus() != n || c.dim() != target {
                return Err(Error::dim(format!("(Z/{n})^{target}"), c));
            }
        }
        let rows = (0..target)
            .map(|i| columns.iter().map(|c| c.coords()[i] as i64).collect())
            .collect::<Vec<Vec<i64>>>();
        GroupHom::new(n, columns.len(), &rows)
    }

    pub fn zero(modulus: u32, source_dim: usize, target_dim: usize) -> Self {
        GroupHom {
            modulus,
            source_dim,
            matrix: vec![vec![0; source_dim]; target_dim],
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> GroupVector {
        let coords: Vec<i64> = self.matrix.iter().map(|r| r[j] as i64).collect();
        GroupVector::new(self.modulus, &coords)
    }

    pub fn apply(&self, v: &GroupVector) -> Result<GroupVector> {
        if v.modulus() != self.modulus || v.dim() != self.source_dim {
            return Err(Error::dim(
                format!("(Z/{})^{}", self.modulus, self.source_dim),
                format!("(Z/{})^{}", v.modulus(), v.dim()),
            ));
        }
        let n = self.modulus as u64;
        let coords: Vec<i64> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.coords())
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    .rem_euclid(n) as i64
            })
            .collect();
        Ok(GroupVector::new(self.modulus, &coords))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target_dim() != self.source_dim || inner.modulus != self.modulus {
            return Err(Error::dim(self.source_dim, inner.target_dim()));
        }
        let columns: Vec<GroupVector> = (0..inner.source_dim)
            .map(|j| self.apply(&inner.column(j)))
            .collect::<Result<_>>()?;
        if columns.is_empty() {
            return Ok(GroupHom::zero(self.modulus, 0, self.target_dim()));
        }
        GroupHom::from_columns(&columns)
    }

    pub fn image(&self) -> Subgroup {
        let cols: Vec<GroupVector> = (0..self.source_dim).map(|j| self.column(j)).collect();
        Subgroup::span(self.modulus, self.target_dim(), &cols).expect("columns share the ambient")
    }
}

/// Rank of the matrix over the field Z/n; `n` must be prime.
pub fn matrix_rank_mod_n(h: &GroupHom) -> Result<usize> {
    if !is_prime(h.modulus) {
        return Err(Error::UnsupportedModulus(h.modulus));
    }
    Ok(rank_mod_prime(&h.matrix, h.source_dim, h.modulus))
}

/// A subgroup of (Z/n)^k with all of its elements enumerated.
#[derive(Clone, Debug)]
pub struct Subgroup {
    modulus: u32,
    dim: usize,
    generators: Vec<GroupVector>,
    basis: Vec<GroupVector>,
    elements: Vec<GroupVector>,
    members: HashSet<GroupVector>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.dim == other.dim && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

fn close_under(members: &mut HashSet<GroupVector>, gens: &[GroupVector]) {
    let mut queue: VecDeque<GroupVector> = members.iter().cloned().collect();
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let s = e.add(g);
            if members.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
}

impl Subgroup {
    /// Smallest subgroup containing `generators`.
    pub fn span(modulus: u32, dim: usize, generators: &[GroupVector]) -> Result<Self> {
        for g in generators {
            if g.modulus() != modulus || g.dim() != dim {
                return Err(Error::dim(format!("(Z/{modulus})^{dim}"), g));
            }
        }
        let mut members = HashSet::new();
        members.insert(GroupVector::zero(modulus, dim));
        let mut basis = Vec::new();
        for g in generators {
            if !members.contains(g) {
                basis.push(g.clone());
                close_under(&mut members, &basis);
            }
        }
        let mut elements: Vec<GroupVector> = members.iter().cloned().collect();
        elements.sort();
        Ok(Subgroup {
            modulus,
            dim,
            generators: generators.to_vec(),
            basis,
            elements,
            members,
        })
    }

    pub fn trivial(modulus: u32, dim: usize) -> Self {
        Self::span(modulus, dim, &[]).expect("empty generator list")
    }

    pub fn whole(modulus: u32, dim: usize) -> Self {
        let units: Vec<GroupVector> = (0..dim).map(|i| GroupVector::unit(modulus, dim, i)).collect();
        Self::span(modulus, dim, &units).expect("unit vectors share the ambient")
    }

    /// Subgroup from an already enumerated, closed element set.
    fn from_elements(modulus: u32, dim: usize, elements: Vec<GroupVector>) -> Self {
        let mut s = Self::span(modulus, dim, &elements).expect("elements share the ambient");
        s.generators = s.basis.clone();
        s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupVector] {
        &self.generators
    }

    /// Irredundant generating list: each entry lies outside the span of the
    /// previous ones.
    pub fn basis(&self) -> &[GroupVector] {
        &self.basis
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[GroupVector] {
        &self.elements
    }

    pub fn contains(&self, v: &GroupVector) -> bool {
        self.members.contains(v)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.modulus == other.modulus
            && self.dim == other.dim
            && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.modulus != other.modulus || self.dim != other.dim {
            return Err(Error::dim(self.dim, other.dim));
        }
        let common = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Ok(Subgroup::from_elements(self.modulus, self.dim, common))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subgroup::span(self.modulus, self.dim, &gens)
    }
}

/// `Ker(h) ∩ s`.
pub fn kernel_image_intersect(h: &GroupHom, s: &Subgroup) -> Result<Subgroup> {
    if h.modulus() != s.modulus() || h.source_dim() != s.dim() {
        return Err(Error::dim(h.source_dim(), s.dim()));
    }
    let mut kernel = Vec::new();
    for e in s.elements() {
        if h.apply(e)?.is_zero() {
            kernel.push(e.clone());
        }
    }
    Ok(Subgroup::from_elements(s.modulus(), s.dim(), kernel))
}

/// The quotient `ambient / sub` with coordinates in a chosen basis. Requires a
/// prime modulus.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    ambient: Subgroup,
    sub: Subgroup,
    basis: Vec<GroupVector>,
    coords: HashMap<GroupVector, GroupVector>,
}

impl QuotientGroup {
    pub fn new(ambient: &Subgroup, sub: &Subgroup) -> Result<Self> {
        Self::with_preferred_basis(ambient, sub, &[])
    }

    /// Chooses quotient basis lifts greedily from `preferred`, then the
    /// ambient's generators, then its elements.
    pub fn with_preferred_basis(
        ambient: &Subgroup,
        sub: &Subgroup,
        preferred: &[GroupVector],
    ) -> Result<Self> {
        let n = ambient.modulus();
        if !is_prime(n) {
            return Err(Error::UnsupportedModulus(n));
        }
        if !sub.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup);
        }
        let mut basis: Vec<GroupVector> = Vec::new();
        let mut reached = sub.clone();
        let candidates = preferred
            .iter()
            .chain(ambient.generators())
            .chain(ambient.elements());
        for c in candidates {
            if reached.order() == ambient.order() {
                break;
            }
            if !ambient.contains(c) {
                return Err(Error::NotMember(c.to_string()));
            }
            if !reached.contains(c) {
                basis.push(c.clone());
                let mut gens = sub.basis().to_vec();
                gens.extend(basis.iter().cloned());
                reached = Subgroup::span(n, ambient.dim(), &gens)?;
            }
        }
        let j = basis.len();
        let mut coords = HashMap::with_capacity(ambient.order());
        for c in GroupVector::all(n, j) {
            let mut lift = GroupVector::zero(n, ambient.dim());
            for (k, b) in c.coords().iter().zip(&basis) {
                lift = lift.add(&b.scale(*k as i64));
            }
            for h in sub.elements() {
                coords.insert(lift.add(h), c.clone());
            }
        }
        debug_assert_eq!(coords.len(), ambient.order());
        Ok(QuotientGroup {
            ambient: ambient.clone(),
            sub: sub.clone(),
            basis,
            coords,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> usize {
        self.ambient.order() / self.sub.order()
    }

    pub fn basis_lifts(&self) -> &[GroupVector] {
        &self.basis
    }

    /// Class of `v` as a vector in (Z/n)^rank.
    pub fn class_of(&self, v: &GroupVector) -> Result<GroupVector> {
        self.coords
            .get(v)
            .cloned()
            .ok_or_else(|| Error::NotMember(v.to_string()))
    }

    pub fn classes(&self, probes: &[GroupVector]) -> Result<Vec<GroupVector>> {
        probes.iter().map(|p| self.class_of(p)).collect()
    }
}

/// Canonical coset representatives of `probes` in `ambient / h`.
pub fn quotient_classes(
    ambient: &Subgroup,
    h: &Subgroup,
    probes: &[GroupVector],
) -> Result<Vec<GroupVector>> {
    QuotientGroup::new(ambient, h)?.classes(probes)
}

/// A character of (Z/n)^k, paired with group elements by the mod-n dot product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Character {
    coords: GroupVector,
}

impl Character {
    pub fn new(coords: GroupVector) -> Self {
        Character { coords }
    }

    pub fn trivial(modulus: u32, dim: usize) -> Self {
        Character {
            coords: GroupVector::zero(modulus, dim),
        }
    }

    pub fn coords(&self) -> &GroupVector {
        &self.coords
    }

    pub fn order(&self) -> u32 {
        self.coords.order()
    }

    pub fn inverse(&self) -> Character {
        Character {
            coords: self.coords.neg(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.is_zero()
    }

    /// `⟨χ, g⟩ ∈ Z/n`.
    pub fn pair(&self, g: &GroupVector) -> u32 {
        assert_eq!(self.coords.dim(), g.dim(), "pairing across ambients");
        let n = self.coords.modulus() as u64;
        (self
            .coords
            .coords()
            .iter()
            .zip(g.coords())
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum::<u64>()
            % n) as u32
    }

    /// The pairing read as a residue modulo the order `m` of `g`: the unique
    /// `j ∈ Z/m` with `e^{2πi⟨χ,g⟩/n} = e^{2πij/m}`.
    pub fn value_mod_order(&self, g: &GroupVector) -> (u32, u32) {
        let n = self.coords.modulus();
        let m = g.order();
        let v = self.pair(g);
        ((v as u64 * m as u64 / n as u64) as u32 % m, m)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.coords, f)
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// One representative character for each character of `group`, taken as the
/// lexicographically smallest dual vector restricting to it.
pub fn characters_of(group: &Subgroup) -> Vec<Character> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for v in GroupVector::all(group.modulus(), group.dim()) {
        let chi = Character::new(v);
        let key: Vec<u32> = group.basis().iter().map(|b| chi.pair(b)).collect();
        if seen.insert(key) {
            out.push(chi);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v3(c: &[i64]) -> GroupVector {
        GroupVector::new(3, c)
    }

    #[test]
    fn vector_arithmetic() {
        let a = v3(&[1, 2, 0]);
        let b = v3(&[2, 2, 1]);
        assert_eq!(a.add(&b), v3(&[0, 1, 1]));
        assert_eq!(a.neg(), v3(&[2, 1, 0]));
        assert_eq!(a.scale(2), v3(&[2, 1, 0]));
        assert_eq!(a.order(), 3);
        assert_eq!(GroupVector::zero(3, 3).order(), 1);
        assert_eq!(GroupVector::new(6, &[2, 3]).order(), 6);
        assert!(a.try_add(&GroupVector::zero(3, 2)).is_err());
        assert_eq!(GroupVector::new(3, &[-1, 4]), v3(&[2, 1]));
    }

    #[test]
    fn span_edge_cases() {
        let t = Subgroup::span(3, 2, &[]).unwrap();
        assert_eq!(t.order(), 1);
        let s = Subgroup::span(3, 2, &[v3(&[1, 1]), v3(&[2, 2])]).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.basis().len(), 1);
        assert!(Subgroup::span(3, 2, &[v3(&[1, 1, 1])]).is_err());
        assert_eq!(Subgroup::whole(3, 2).order(), 9);
        let z4 = Subgroup::span(4, 1, &[GroupVector::new(4, &[2])]).unwrap();
        assert_eq!(z4.order(), 2);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let s = Subgroup::span(3, 2, &[v3(&[1, 2])]).unwrap();
        let zero = GroupHom::zero(3, 2, 4);
        assert_eq!(kernel_image_intersect(&zero, &s).unwrap(), s);
    }

    #[test]
    fn rank_requires_prime_modulus() {
        let h = GroupHom::new(4, 2, &[vec![1, 0], vec![0, 2]]).unwrap();
        assert_eq!(matrix_rank_mod_n(&h), Err(Error::UnsupportedModulus(4)));
        assert_eq!(matrix_rank_mod_n(&GroupHom::zero(3, 3, 2)).unwrap(), 0);
    }

    #[test]
    fn composition_is_matrix_product() {
        let a = GroupHom::new(3, 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        let b = GroupHom::new(3, 2, &[vec![2, 1], vec![1, 1]]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, GroupHom::new(3, 2, &[vec![4, 3], vec![1, 1]]).unwrap());
        for x in GroupVector::all(3, 2) {
            assert_eq!(ab.apply(&x).unwrap(), a.apply(&b.apply(&x).unwrap()).unwrap());
        }
    }

    #[test]
    fn quotient_probes_in_subgroup_are_trivial() {
        let whole = Subgroup::whole(3, 3);
        let h = Subgroup::span(3, 3, &[v3(&[1, 1, 0]), v3(&[0, 0, 1])]).unwrap();
        let classes = quotient_classes(&whole, &h, h.elements()).unwrap();
        assert!(classes.iter().all(|c| c.is_zero()));
        assert_eq!(classes[0].dim(), 1);
        let outside = Subgroup::span(3, 3, &[v3(&[1, 0, 0])]).unwrap();
        assert!(quotient_classes(&outside, &h, &[]).is_err());
        let q = QuotientGroup::new(&h, &Subgroup::trivial(3, 3)).unwrap();
        assert!(q.class_of(&v3(&[1, 0, 0])).is_err());
    }

    #[test]
    fn characters_of_a_proper_subgroup() {
        let s = Subgroup::span(3, 3, &[v3(&[1, 0, 0]), v3(&[0, 1, 0])]).unwrap();
        let chars = characters_of(&s);
        assert_eq!(chars.len(), 9);
        assert!(chars[0].is_trivial());
        assert_eq!(characters_of(&Subgroup::whole(3, 2)).len(), 9);
    }

    #[test]
    fn value_mod_order_rescales() {
        let chi = Character::new(GroupVector::new(6, &[1]));
        // g = 2 has order 3; <chi, g> = 2 in Z/6 is 1 in Z/3
        assert_eq!(chi.value_mod_order(&GroupVector::new(6, &[2])), (1, 3));
        assert_eq!(chi.value_mod_order(&GroupVector::new(6, &[0])), (0, 1));
    }
}
