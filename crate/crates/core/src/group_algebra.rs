//! The group algebra of an elementary abelian 3-group, subgroup sums and
//! ideal membership by exact row reduction.
//!
//! The group G¹ is (Z/3)^5 on the basis `w1, w2, w3, xi1, xi2`, with
//! `xi3 = (xi1·xi2)⁻¹`.

use std::collections::HashSet;
use std::hash::Hash;

use serde::Serialize;

use crate::abelian::{GroupVector, Subgroup};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::scalar::Field;

pub const G1_MODULUS: u32 = 3;
pub const G1_DIM: usize = 5;

/// Dense coefficient vector indexed by the elements of `(Z/n)^k`, with
/// element `v` stored at `Σ vᵢ·n^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement<F> {
    modulus: u32,
    dim: usize,
    coeffs: Vec<F>,
}

fn group_order(modulus: u32, dim: usize) -> usize {
    (modulus as usize).pow(dim as u32)
}

pub fn element_index(v: &GroupVector) -> usize {
    let n = v.modulus() as usize;
    v.coords()
        .iter()
        .rev()
        .fold(0, |acc, &c| acc * n + c as usize)
}

pub fn element_at(modulus: u32, dim: usize, mut idx: usize) -> GroupVector {
    let n = modulus as usize;
    let mut coords = Vec::with_capacity(dim);
    for _ in 0..dim {
        coords.push((idx % n) as i64);
        idx /= n;
    }
    GroupVector::new(modulus, &coords)
}

impl<F: Field> GroupAlgebraElement<F> {
    pub fn zero(modulus: u32, dim: usize) -> Self {
        GroupAlgebraElement {
            modulus,
            dim,
            coeffs: vec![F::zero(); group_order(modulus, dim)],
        }
    }

    pub fn one(modulus: u32, dim: usize) -> Self {
        Self::basis(&GroupVector::zero(modulus, dim))
    }

    /// The group element `g` as an algebra element.
    pub fn basis(g: &GroupVector) -> Self {
        let mut e = Self::zero(g.modulus(), g.dim());
        e.coeffs[element_index(g)] = F::one();
        e
    }

    pub fn from_terms(modulus: u32, dim: usize, terms: &[(GroupVector, F)]) -> Result<Self> {
        let mut e = Self::zero(modulus, dim);
        for (g, c) in terms {
            if g.modulus() != modulus || g.dim() != dim {
                return Err(Error::dim(dim, g.dim()));
            }
            let i = element_index(g);
            e.coeffs[i] = e.coeffs[i].clone() + c.clone();
        }
        Ok(e)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coefficient(&self, g: &GroupVector) -> F {
        self.coeffs[element_index(g)].clone()
    }

    pub fn support(&self) -> Vec<GroupVector> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| element_at(self.modulus, self.dim, i))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.modulus != o.modulus || self.dim != o.dim {
            return Err(Error::dim(
                format!("(Z/{})^{}", self.modulus, self.dim),
                format!("(Z/{})^{}", o.modulus, o.dim),
            ));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            ..self.clone()
        }
    }

    /// `self · g`, a relabelling of the coefficients.
    pub fn shift(&self, g: &GroupVector) -> Self {
        let mut out = Self::zero(self.modulus, self.dim);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let h = element_at(self.modulus, self.dim, i).add(g);
            out.coeffs[element_index(&h)] = c.clone();
        }
        out
    }

    /// Convolution product.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = Self::zero(self.modulus, self.dim);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let g = element_at(self.modulus, self.dim, i);
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let h = element_at(self.modulus, self.dim, j);
                let k = element_index(&g.add(&h));
                out.coeffs[k] = out.coeffs[k].clone() + a.clone() * b.clone();
            }
        }
        Ok(out)
    }
}

/// `z(H) = Σ_{h∈H} h` together with `H`.
#[derive(Clone, Debug)]
pub struct SubgroupSum<F> {
    pub subgroup: Subgroup,
    pub element: GroupAlgebraElement<F>,
}

pub fn z<F: Field>(modulus: u32, dim: usize, generators: &[GroupVector]) -> Result<SubgroupSum<F>> {
    let subgroup = Subgroup::span(modulus, dim, generators)?;
    let mut element = GroupAlgebraElement::zero(modulus, dim);
    for h in subgroup.elements() {
        element.coeffs[element_index(h)] = F::one();
    }
    Ok(SubgroupSum { subgroup, element })
}

fn g1(coords: [i64; 5]) -> GroupVector {
    GroupVector::new(G1_MODULUS, &coords)
}

/// `w_i` for `i ∈ {1, 2, 3}`.
pub fn w(i: usize) -> GroupVector {
    let mut c = [0; 5];
    c[i - 1] = 1;
    g1(c)
}

/// `xi_i` for `i ∈ {1, 2, 3}`.
pub fn xi(i: usize) -> GroupVector {
    match i {
        1 => g1([0, 0, 0, 1, 0]),
        2 => g1([0, 0, 0, 0, 1]),
        3 => g1([0, 0, 0, 2, 2]),
        _ => panic!("xi index {i} out of range"),
    }
}

pub fn g1_group() -> Subgroup {
    Subgroup::whole(G1_MODULUS, G1_DIM)
}

/// Generators of G²: `xi_i·w_i`.
pub fn g2_generators() -> Vec<GroupVector> {
    (1..=3).map(|i| xi(i).add(&w(i))).collect()
}

/// The six families `(w_i, xi_n^l w_j, xi_n^m w_k)` with `n ∈ {i, i−1}`.
pub fn bloch_families() -> Vec<[GroupVector; 3]> {
    let cyc = |i: usize| (i - 1) % 3 + 1;
    let mut out = Vec::with_capacity(54);
    for i in 1..=3 {
        let (j, k) = (cyc(i + 1), cyc(i + 2));
        let mut ns = [i, cyc(i + 2)];
        ns.sort();
        for n in ns {
            for l in 0..3 {
                for m in 0..3 {
                    out.push([
                        w(i),
                        xi(n).scale(l).add(&w(j)),
                        xi(n).scale(m).add(&w(k)),
                    ]);
                }
            }
        }
    }
    out
}

/// The extra triple `(xi3·w1, xi2·w2, xi2·w3)`.
pub fn bloch_extra() -> [GroupVector; 3] {
    [xi(3).add(&w(1)), xi(2).add(&w(2)), xi(2).add(&w(3))]
}

pub fn bloch_subgroup_list() -> Vec<[GroupVector; 3]> {
    let mut out = bloch_families();
    out.push(bloch_extra());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// Rank of the span of all `g·b`.
    pub rank: usize,
    pub generators: usize,
}

/// Whether `target` lies in the ideal generated by `gens`. The ideal is the
/// linear span of the products `g·b` over generators `g` and group elements `b`.
pub fn ideal_membership<F: Field + Hash + Eq>(
    target: &GroupAlgebraElement<F>,
    gens: &[GroupAlgebraElement<F>],
) -> Result<Membership> {
    let width = target.coeffs.len();
    let mut space = RowSpace::<F>::new(width);
    let mut seen: HashSet<Vec<F>> = HashSet::new();
    for g in gens {
        target.check_same(g)?;
        for b in 0..width {
            let shifted = g.shift(&element_at(target.modulus, target.dim, b));
            if !seen.insert(shifted.coeffs.clone()) {
                continue;
            }
            space.insert(RowSpace::sparse(&shifted.coeffs));
            if space.rank() == width {
                break;
            }
        }
    }
    let member = space.contains(RowSpace::sparse(&target.coeffs));
    Ok(Membership {
        member,
        rank: space.rank(),
        generators: gens.len(),
    })
}

/// Parses a product such as `xi2^2*w3` into an element of G¹.
pub fn parse_g1_element(text: &str) -> Result<GroupVector> {
    let mut total = GroupVector::zero(G1_MODULUS, G1_DIM);
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(total);
    }
    let mut offset = 0;
    for factor in trimmed.split('*') {
        let err = |msg: String| Error::Parse { pos: offset, msg };
        let f = factor.trim();
        let (name, exp) = match f.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| err(format!("bad exponent in '{f}'")))?,
            ),
            None => (f, 1),
        };
        let base = match name {
            "w1" => w(1),
            "w2" => w(2),
            "w3" => w(3),
            "xi1" => xi(1),
            "xi2" => xi(2),
            "xi3" => xi(3),
            _ => return Err(err(format!("unknown generator '{name}'"))),
        };
        total = total.add(&base.scale(exp));
        offset += factor.len() + 1;
    }
    Ok(total)
}

/// Parses triples written as `w1, xi1*w2, xi1^2*w3; w2, ...`.
pub fn parse_triples(text: &str) -> Result<Vec<Vec<GroupVector>>> {
    text.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_matches(|c| c == '[' || c == ']')
                .split(',')
                .map(parse_g1_element)
                .collect()
        })
        .collect()
}

/// Writes an element of G¹ in the product syntax, using `xi1` and `xi2` only.
pub fn format_g1_element(v: &GroupVector) -> String {
    let names = ["w1", "w2", "w3", "xi1", "xi2"];
    let parts: Vec<String> = v
        .coords()
        .iter()
        .zip(names)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, n)| if c == 1 { n.to_string() } else { format!("{n}^{c}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn indexing_round_trips() {
        for i in [0, 1, 17, 242] {
            assert_eq!(element_index(&element_at(3, 5, i)), i);
        }
    }

    #[test]
    fn identity_and_z_of_nothing() {
        let one = GroupAlgebraElement::<Q>::one(3, 5);
        let zs = z::<Q>(3, 5, &[]).unwrap();
        assert_eq!(zs.element, one);
        let x = GroupAlgebraElement::<Q>::basis(&xi(1)).add(&GroupAlgebraElement::basis(&w(2))).unwrap();
        assert_eq!(x.mul(&one).unwrap(), x);
    }

    #[test]
    fn z_of_g2() {
        let zg2 = z::<Q>(3, 5, &g2_generators()).unwrap();
        assert_eq!(zg2.subgroup.order(), 27);
        assert_eq!(zg2.element.support().len(), 27);
        assert!(zg2.element.coeffs().iter().all(|c| c.is_zero() || c.is_one()));
        let sq = zg2.element.mul(&zg2.element).unwrap();
        assert_eq!(sq, zg2.element.scale(&q(27)));
    }

    #[test]
    fn triple_product_form() {
        // (1 + a + a²)(1 + b + b²)(1 + c + c²)
        let gens = [w(1), xi(1).add(&w(2)), xi(1).scale(2).add(&w(3))];
        let factor = |g: &GroupVector| {
            GroupAlgebraElement::<Q>::one(3, 5)
                .add(&GroupAlgebraElement::basis(g))
                .unwrap()
                .add(&GroupAlgebraElement::basis(&g.scale(2)))
                .unwrap()
        };
        let prod = factor(&gens[0])
            .mul(&factor(&gens[1]))
            .unwrap()
            .mul(&factor(&gens[2]))
            .unwrap();
        assert_eq!(prod, z::<Q>(3, 5, &gens).unwrap().element);
    }

    #[test]
    fn list_shape() {
        let list = bloch_subgroup_list();
        assert_eq!(list.len(), 55);
        for t in &list {
            assert_eq!(Subgroup::span(3, 5, t).unwrap().order(), 27);
        }
        let extra = parse_triples("[xi3*w1,xi2*w2,xi2*w3]").unwrap();
        assert_eq!(extra[0], list[54].to_vec());
    }

    #[test]
    fn xi_relation() {
        assert!(xi(1).add(&xi(2)).add(&xi(3)).is_zero());
        assert_eq!(parse_g1_element("xi1*xi2*xi3").unwrap(), GroupVector::zero(3, 5));
        assert_eq!(parse_g1_element("xi3^2*w2").unwrap(), xi(3).scale(2).add(&w(2)));
        assert!(parse_g1_element("xi4").is_err());
        assert!(parse_g1_element("w1^x").is_err());
        let v = parse_g1_element("xi2^2*w3").unwrap();
        assert_eq!(parse_g1_element(&format_g1_element(&v)).unwrap(), v);
    }

    #[test]
    fn z_g1_in_any_single_ideal() {
        let zg1 = z::<Q>(3, 5, g1_group().basis()).unwrap().element;
        let h = z::<Q>(3, 5, &bloch_subgroup_list()[7]).unwrap().element;
        let m = ideal_membership(&zg1, &[h]).unwrap();
        assert!(m.member);
        assert_eq!(m.rank, 9);
    }

    #[test]
    fn empty_ideal() {
        let zg2 = z::<Q>(3, 5, &g2_generators()).unwrap().element;
        assert!(!ideal_membership(&zg2, &[]).unwrap().member);
        let zero = GroupAlgebraElement::<Q>::zero(3, 5);
        assert!(ideal_membership(&zero, &[]).unwrap().member);
    }

    #[test]
    fn small_group_by_hand() {
        // In Q[Z/3], the ideal of 1 + g + g² is one-dimensional.
        let g = GroupVector::new(3, &[1]);
        let zg = z::<Q>(3, 1, std::slice::from_ref(&g)).unwrap().element;
        let m = ideal_membership(&GroupAlgebraElement::basis(&g), std::slice::from_ref(&zg)).unwrap();
        assert!(!m.member);
        assert_eq!(m.rank, 1);
        assert!(ideal_membership(&zg.scale(&q(5)), &[zg]).unwrap().member);
    }
}
