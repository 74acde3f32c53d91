//! Exact arithmetic in Z[ω] and affine maps of C³ with diagonal linear part
//! in the powers of ω, acting on E³ for E = C / Z[ω].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Common denominator of every translation.
pub const SCALE: i64 = 3;

/// `a + b·ω` with `ω² = −1 − ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { a: 0, b: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { a: 1, b: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    pub fn scale(self, k: i64) -> Self {
        EisensteinInt::new(self.a * k, self.b * k)
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::ONE,
            1 => Self::OMEGA,
            _ => EisensteinInt::new(-1, -1),
        }
    }

    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisensteinInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisensteinInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(−1 − ω)
        EisensteinInt::new(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a}-{}ω", -b),
            (a, b) => write!(f, "{a}+{b}ω"),
        }
    }
}

/// `(a + b·ω) / 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinScaled {
    num: EisensteinInt,
}

impl EisensteinScaled {
    pub const ZERO: EisensteinScaled = EisensteinScaled {
        num: EisensteinInt::ZERO,
    };

    /// The value `(a + bω)/3`.
    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinScaled {
            num: EisensteinInt::new(a, b),
        }
    }

    pub fn from_int(z: EisensteinInt) -> Self {
        EisensteinScaled {
            num: z.scale(SCALE),
        }
    }

    /// The 3-torsion point `(2 + ω)/3`.
    pub fn eta() -> Self {
        EisensteinScaled::new(2, 1)
    }

    /// The representative `(1 + 2ω)/3` of `2η`.
    pub fn two_eta() -> Self {
        EisensteinScaled::new(1, 2)
    }

    pub fn numerator(&self) -> EisensteinInt {
        self.num
    }

    pub fn mul_int(self, z: EisensteinInt) -> Self {
        EisensteinScaled {
            num: self.num.mul(z),
        }
    }

    pub fn in_lattice(&self) -> bool {
        self.num.a % SCALE == 0 && self.num.b % SCALE == 0
    }

    /// Canonical representative with numerator coordinates in `[0, 3)`.
    pub fn reduce(self) -> Self {
        EisensteinScaled::new(self.num.a.rem_euclid(SCALE), self.num.b.rem_euclid(SCALE))
    }

    pub fn eq_mod_lattice(&self, o: &Self) -> bool {
        self.sub(*o).in_lattice()
    }

    /// The nine classes of `⅓Z[ω] / Z[ω]`.
    pub fn third_lattice_residues() -> Vec<EisensteinScaled> {
        let mut out = Vec::with_capacity(9);
        for a in 0..SCALE {
            for b in 0..SCALE {
                out.push(EisensteinScaled::new(a, b));
            }
        }
        out
    }
}

impl Add for EisensteinScaled {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisensteinScaled { num: self.num + o.num }
    }
}

impl Sub for EisensteinScaled {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisensteinScaled { num: self.num - o.num }
    }
}

impl Neg for EisensteinScaled {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinScaled { num: -self.num }
    }
}

impl fmt::Display for EisensteinScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.in_lattice() {
            write!(f, "{}", EisensteinInt::new(self.num.a / SCALE, self.num.b / SCALE))
        } else {
            write!(f, "({})/{SCALE}", self.num)
        }
    }
}

impl Serialize for EisensteinScaled {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub type Point = [EisensteinScaled; 3];

/// `z ↦ diag(ω^r₁, ω^r₂, ω^r₃)·z + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinAffineMap {
    rot: [u8; 3],
    trans: Point,
}

impl EisensteinAffineMap {
    pub fn new(rot: [i64; 3], trans: Point) -> Self {
        EisensteinAffineMap {
            rot: rot.map(|r| r.rem_euclid(3) as u8),
            trans,
        }
    }

    pub fn identity() -> Self {
        Self::new([0; 3], [EisensteinScaled::ZERO; 3])
    }

    pub fn translation(trans: Point) -> Self {
        Self::new([0; 3], trans)
    }

    pub fn rotation_exponents(&self) -> [u8; 3] {
        self.rot
    }

    pub fn translation_part(&self) -> &Point {
        &self.trans
    }

    pub fn is_translation(&self) -> bool {
        self.rot == [0; 3]
    }

    fn linear(&self, i: usize) -> EisensteinInt {
        EisensteinInt::omega_pow(self.rot[i] as i64)
    }

    pub fn apply(&self, z: &Point) -> Point {
        std::array::from_fn(|i| z[i].mul_int(self.linear(i)).add(self.trans[i]))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let rot = std::array::from_fn(|i| self.rot[i] as i64 + inner.rot[i] as i64);
        let trans = std::array::from_fn(|i| inner.trans[i].mul_int(self.linear(i)).add(self.trans[i]));
        Self::new(rot, trans)
    }

    pub fn inverse(&self) -> Self {
        let rot = self.rot.map(|r| -(r as i64));
        let trans = std::array::from_fn(|i| {
            self.trans[i]
                .neg()
                .mul_int(EisensteinInt::omega_pow(-(self.rot[i] as i64)))
        });
        Self::new(rot, trans)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { *self };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Same action on E³: equal linear parts and translations differing by
    /// lattice vectors.
    pub fn eq_mod_lattice(&self, o: &Self) -> bool {
        self.rot == o.rot && (0..3).all(|i| self.trans[i].eq_mod_lattice(&o.trans[i]))
    }

    /// Canonical representative of the class mod lattice translations.
    pub fn reduce(&self) -> Self {
        Self {
            rot: self.rot,
            trans: self.trans.map(|t| t.reduce()),
        }
    }

    pub fn fixes_mod_lattice(&self, z: &Point) -> bool {
        let w = self.apply(z);
        (0..3).all(|i| w[i].eq_mod_lattice(&z[i]))
    }
}

impl fmt::Display for EisensteinAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z ↦ (ω^{}·z1 + {}, ω^{}·z2 + {}, ω^{}·z3 + {})",
            self.rot[0], self.trans[0], self.rot[1], self.trans[1], self.rot[2], self.trans[2]
        )
    }
}

/// The nine generators of Γ.
#[derive(Clone, Debug)]
pub struct Generators {
    pub gamma: [EisensteinAffineMap; 3],
    pub t: [EisensteinAffineMap; 3],
    pub tp: [EisensteinAffineMap; 3],
}

impl Generators {
    pub fn get(&self, letter: Letter) -> EisensteinAffineMap {
        match letter {
            Letter::Gamma(i) => self.gamma[i],
            Letter::T(i) => self.t[i],
            Letter::Tp(i) => self.tp[i],
        }
    }

    /// Evaluates a word; juxtaposition is composition, leftmost letter outermost.
    pub fn eval(&self, word: &Word) -> EisensteinAffineMap {
        word.syllables()
            .iter()
            .fold(EisensteinAffineMap::identity(), |acc, &(l, k)| {
                acc.compose(&self.get(l).pow(k))
            })
    }
}

fn unit_point(i: usize, v: EisensteinScaled) -> Point {
    let mut p = [EisensteinScaled::ZERO; 3];
    p[i] = v;
    p
}

pub fn make_generators() -> Generators {
    let eta = EisensteinScaled::eta();
    let two_eta = EisensteinScaled::two_eta();
    let zero = EisensteinScaled::ZERO;
    // γᵢ rotates coordinate i+1, translates it by 2η and translates
    // coordinate i+2 by η.
    let gamma = std::array::from_fn(|i| {
        let mut rot = [0i64; 3];
        let mut trans = [zero; 3];
        rot[(i + 1) % 3] = 1;
        trans[(i + 1) % 3] = two_eta;
        trans[(i + 2) % 3] = eta;
        EisensteinAffineMap::new(rot, trans)
    });
    let e = EisensteinScaled::from_int(EisensteinInt::ONE);
    let e_prime = EisensteinScaled::from_int(EisensteinInt::OMEGA);
    Generators {
        gamma,
        t: std::array::from_fn(|i| EisensteinAffineMap::translation(unit_point(i, e))),
        tp: std::array::from_fn(|i| EisensteinAffineMap::translation(unit_point(i, e_prime))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareMode {
    /// Equality as maps of C³.
    Strict,
    /// Equality as maps of E³.
    ModLattice,
}

pub fn verify_relation(lhs: &str, rhs: &str, mode: CompareMode) -> Result<bool> {
    let gens = make_generators();
    let l = gens.eval(&Word::parse(lhs)?);
    let r = gens.eval(&Word::parse(rhs)?);
    Ok(match mode {
        CompareMode::Strict => l == r,
        CompareMode::ModLattice => l.eq_mod_lattice(&r),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixedLocus {
    /// The map acts trivially on E³.
    Everything,
    Empty,
    /// `count` is `None` when some coordinate is fixed pointwise.
    Points { count: Option<u64>, witness: Point },
}

impl FixedLocus {
    pub fn is_empty(&self) -> bool {
        matches!(self, FixedLocus::Empty)
    }
}

pub fn fixed_locus(m: &EisensteinAffineMap) -> Result<FixedLocus> {
    let mut count: Option<u64> = Some(1);
    let mut witness = [EisensteinScaled::ZERO; 3];
    let mut all_trivial = true;
    for (i, slot) in witness.iter_mut().enumerate() {
        let b = m.trans[i];
        if m.rot[i] == 0 {
            if !b.in_lattice() {
                return Ok(FixedLocus::Empty);
            }
            count = None;
            continue;
        }
        all_trivial = false;
        let solutions: Vec<EisensteinScaled> = EisensteinScaled::third_lattice_residues()
            .into_iter()
            .filter(|z| {
                z.mul_int(m.linear(i))
                    .add(b)
                    .eq_mod_lattice(z)
            })
            .collect();
        if solutions.is_empty() {
            return Err(Error::Precondition(format!(
                "translation {b} in coordinate {} is not 3-torsion compatible",
                i + 1
            )));
        }
        *slot = solutions[0];
        count = count.map(|c| c * solutions.len() as u64);
    }
    if all_trivial {
        return Ok(FixedLocus::Everything);
    }
    Ok(FixedLocus::Points { count, witness })
}

/// Elements of `group` fixing `point` on E³.
pub fn stabilizer<'a>(point: &Point, group: &'a [EisensteinAffineMap]) -> Vec<&'a EisensteinAffineMap> {
    group.iter().filter(|g| g.fixes_mod_lattice(point)).collect()
}

/// One element of G² as `γ₁^a γ₂^b γ₃^c`.
#[derive(Clone, Debug, Serialize)]
pub struct G2Element {
    pub exponents: [u8; 3],
    #[serde(skip)]
    pub map: EisensteinAffineMap,
}

impl G2Element {
    pub fn word(&self) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("g{}", i + 1)
                } else {
                    format!("g{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// The 27 products `γ₁^a γ₂^b γ₃^c`, `0 ≤ a, b, c < 3`.
pub fn g2_elements() -> Vec<G2Element> {
    let gens = make_generators();
    let mut out = Vec::with_capacity(27);
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                let map = gens.gamma[0]
                    .pow(a as i64)
                    .compose(&gens.gamma[1].pow(b as i64))
                    .compose(&gens.gamma[2].pow(c as i64));
                out.push(G2Element {
                    exponents: [a, b, c],
                    map,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub element: String,
    pub exponents: [u8; 3],
    pub fixed: FixedLocus,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeActionCensus {
    pub classes: usize,
    pub distinct_mod_lattice: bool,
    pub closed_mod_lattice: bool,
    /// Nontrivial classes with a fixed point on E³.
    pub exceptional: Vec<CensusEntry>,
    pub origin_stabilizer: Vec<String>,
}

pub fn free_action_census() -> Result<FreeActionCensus> {
    let elems = g2_elements();
    let maps: Vec<EisensteinAffineMap> = elems.iter().map(|e| e.map).collect();
    let distinct = (0..maps.len())
        .all(|i| (i + 1..maps.len()).all(|j| !maps[i].eq_mod_lattice(&maps[j])));
    let closed = maps.iter().all(|x| {
        maps.iter()
            .all(|y| maps.iter().any(|z| z.eq_mod_lattice(&x.compose(y))))
    });
    let mut exceptional = Vec::new();
    for e in elems.iter().filter(|e| e.exponents != [0; 3]) {
        let fixed = fixed_locus(&e.map)?;
        if !fixed.is_empty() {
            exceptional.push(CensusEntry {
                element: e.word(),
                exponents: e.exponents,
                fixed,
            });
        }
    }
    let origin = [EisensteinScaled::ZERO; 3];
    let origin_stabilizer = elems
        .iter()
        .filter(|e| e.map.fixes_mod_lattice(&origin))
        .map(|e| e.word())
        .collect();
    Ok(FreeActionCensus {
        classes: elems.len(),
        distinct_mod_lattice: distinct,
        closed_mod_lattice: closed,
        exceptional,
        origin_stabilizer,
    })
}

/// `γᵢ·s·γᵢ⁻¹` for each γ and each translation generator `s`, as a word in
/// translations, checked as an exact affine identity.
#[derive(Clone, Debug, Serialize)]
pub struct Conjugation {
    pub gamma: usize,
    pub translation: String,
    pub result: String,
}

pub fn conjugation_table() -> Result<Vec<Conjugation>> {
    let gens = make_generators();
    let mut out = Vec::new();
    for i in 0..3 {
        let g = gens.gamma[i];
        for (name, s) in (0..3)
            .map(|j| (format!("t{}", j + 1), gens.t[j]))
            .chain((0..3).map(|j| (format!("tp{}", j + 1), gens.tp[j])))
        {
            let conj = g.compose(&s).compose(&g.inverse());
            let result = translation_word(&conj).ok_or_else(|| {
                Error::Internal(format!("g{} {name} g{}^-1 is not a lattice translation", i + 1, i + 1))
            })?;
            if gens.eval(&Word::parse(&result)?) != conj {
                return Err(Error::RelatorFailed(format!(
                    "g{} {name} g{}^-1 = {result}",
                    i + 1,
                    i + 1
                )));
            }
            out.push(Conjugation {
                gamma: i + 1,
                translation: name,
                result,
            });
        }
    }
    Ok(out)
}

/// Writes a lattice translation as a word in the `t` and `tp` generators.
pub fn translation_word(m: &EisensteinAffineMap) -> Option<String> {
    if !m.is_translation() || !m.trans.iter().all(|t| t.in_lattice()) {
        return None;
    }
    let mut parts = Vec::new();
    for (i, t) in m.trans.iter().enumerate() {
        let n = t.numerator();
        for (name, k) in [("t", n.a / SCALE), ("tp", n.b / SCALE)] {
            match k {
                0 => {}
                1 => parts.push(format!("{name}{}", i + 1)),
                k => parts.push(format!("{name}{}^{k}", i + 1)),
            }
        }
    }
    Some(if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// The γ commutation relations, the γ–translation relations and the cube
/// relations, each checked as an exact identity of maps on C³.
pub fn relation_suite() -> Result<Vec<RelationCheck>> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    for i in 1..=3 {
        let j = i % 3 + 1;
        let k = j % 3 + 1;
        pairs.push((format!("g{i} g{j}"), format!("t{k} g{j} g{i}")));
        pairs.push((format!("g{i} g{j}"), format!("g{j} g{i} (t{k} tp{k})^-1")));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            if j == i % 3 + 1 {
                pairs.push((format!("g{i} t{j}"), format!("(t{j} g{i}) t{j}^2 tp{j}")));
                pairs.push((format!("g{i} t{j}"), format!("tp{j} t{j}^-1 (t{j} g{i})")));
            } else {
                pairs.push((format!("g{i} t{j}"), format!("t{j} g{i}")));
            }
        }
    }
    for i in 1..=3 {
        let k = (i + 1) % 3 + 1;
        pairs.push((format!("g{i}^3"), format!("t{k}^2 tp{k}")));
    }
    pairs
        .into_iter()
        .map(|(lhs, rhs)| {
            let holds = verify_relation(&lhs, &rhs, CompareMode::Strict)?;
            Ok(RelationCheck { lhs, rhs, holds })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_arithmetic() {
        let w = EisensteinInt::OMEGA;
        assert_eq!(w.mul(w).mul(w), EisensteinInt::ONE);
        assert_eq!(
            EisensteinInt::ONE.add(w).add(w.mul(w)),
            EisensteinInt::ZERO
        );
        assert_eq!(EisensteinInt::new(1, -1).norm(), 3);
    }

    #[test]
    fn eta_is_rotation_fixed() {
        for t in [EisensteinScaled::eta(), EisensteinScaled::two_eta()] {
            assert!(!t.in_lattice());
            assert!(t.mul_int(EisensteinInt::OMEGA).eq_mod_lattice(&t));
        }
        assert!(EisensteinScaled::eta()
            .mul_int(EisensteinInt::ONE.sub(EisensteinInt::OMEGA))
            .eq_mod_lattice(&EisensteinScaled::ZERO));
        assert!(EisensteinScaled::eta()
            .add(EisensteinScaled::eta())
            .eq_mod_lattice(&EisensteinScaled::two_eta()));
    }

    #[test]
    fn generator_shapes() {
        let g = make_generators();
        assert_eq!(g.gamma[0].rotation_exponents(), [0, 1, 0]);
        assert_eq!(
            g.gamma[0].translation_part(),
            &[
                EisensteinScaled::ZERO,
                EisensteinScaled::two_eta(),
                EisensteinScaled::eta()
            ]
        );
        assert_eq!(g.gamma[2].rotation_exponents(), [1, 0, 0]);
        assert_eq!(
            g.gamma[2].translation_part(),
            &[
                EisensteinScaled::two_eta(),
                EisensteinScaled::eta(),
                EisensteinScaled::ZERO
            ]
        );
    }

    #[test]
    fn inverse_and_composition() {
        let g = make_generators();
        for m in g.gamma.iter().chain(&g.t).chain(&g.tp) {
            assert_eq!(m.compose(&m.inverse()), EisensteinAffineMap::identity());
            assert_eq!(m.inverse().compose(m), EisensteinAffineMap::identity());
        }
        let p = [
            EisensteinScaled::new(1, 2),
            EisensteinScaled::new(-4, 0),
            EisensteinScaled::new(5, 7),
        ];
        let ab = g.gamma[0].compose(&g.gamma[1]);
        assert_eq!(ab.apply(&p), g.gamma[0].apply(&g.gamma[1].apply(&p)));
    }

    #[test]
    fn relations() {
        use CompareMode::Strict;
        assert!(verify_relation("t1 tp1", "tp1 t1", Strict).unwrap());
        assert!(verify_relation("g1 g2", "t3 g2 g1", Strict).unwrap());
        assert!(verify_relation("g1 g2", "g2 g1 (t3 tp3)^-1", Strict).unwrap());
        assert!(verify_relation("g1 t1", "t1 g1", Strict).unwrap());
        assert!(verify_relation("g1 t2", "t2 g1 t2^2 tp2", Strict).unwrap());
        assert!(verify_relation("g1 t2", "tp2 t2^-1 t2 g1", Strict).unwrap());
        for i in 1..=3 {
            let j = (i + 1) % 3 + 1;
            assert!(verify_relation(&format!("g{i}^3"), &format!("t{j}^2 tp{j}"), Strict).unwrap());
        }
        assert!(!verify_relation("g1 g2", "g2 g1", Strict).unwrap());
        assert!(verify_relation("g1 g2", "g2 g1", CompareMode::ModLattice).unwrap());
        assert!(matches!(
            verify_relation("g1 q2", "g1", Strict),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn fixed_loci() {
        let g = make_generators();
        assert_eq!(fixed_locus(&g.gamma[0]).unwrap(), FixedLocus::Empty);
        let prod = g.gamma[0].compose(&g.gamma[1]).compose(&g.gamma[2]);
        match fixed_locus(&prod).unwrap() {
            FixedLocus::Points { count, witness } => {
                assert_eq!(count, Some(27));
                assert!(prod.fixes_mod_lattice(&witness));
                assert!(prod.fixes_mod_lattice(&[EisensteinScaled::ZERO; 3]));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            fixed_locus(&EisensteinAffineMap::identity()).unwrap(),
            FixedLocus::Everything
        );
        assert_eq!(fixed_locus(&g.t[0]).unwrap(), FixedLocus::Everything);
    }

    #[test]
    fn stabilizers() {
        let group: Vec<EisensteinAffineMap> = g2_elements().iter().map(|e| e.map).collect();
        let origin = [EisensteinScaled::ZERO; 3];
        assert_eq!(stabilizer(&origin, &group).len(), 3);
        // η is a rotation-fixed point, so this point shares the origin's stabilizer.
        let p = [EisensteinScaled::ZERO, EisensteinScaled::ZERO, EisensteinScaled::eta()];
        assert_eq!(stabilizer(&p, &group).len(), 3);
        let p = [EisensteinScaled::new(1, 0), EisensteinScaled::ZERO, EisensteinScaled::ZERO];
        assert_eq!(stabilizer(&p, &group).len(), 1);
        let trivial = [EisensteinAffineMap::identity()];
        assert_eq!(stabilizer(&p, &trivial).len(), 1);
    }

    #[test]
    fn suite_holds() {
        let suite = relation_suite().unwrap();
        assert_eq!(suite.len(), 6 + 12 + 3);
        for r in &suite {
            assert!(r.holds, "{} = {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn conjugations() {
        let table = conjugation_table().unwrap();
        assert_eq!(table.len(), 18);
        let find = |g: usize, t: &str| {
            table
                .iter()
                .find(|c| c.gamma == g && c.translation == t)
                .unwrap()
                .result
                .clone()
        };
        assert_eq!(find(1, "t2"), "tp2");
        assert_eq!(find(1, "tp2"), "t2^-1 tp2^-1");
        assert_eq!(find(1, "t3"), "t3");
    }
}
