//! Divisor classes on the plane blown up in `r` general points.
//!
//! A class is stored as its signed coefficient vector on the basis
//! `H, E1, ..., Er`, so `2H - E2 - E3` on the r = 3 lattice is `[2, 0, -1, -1]`.
//! The intersection form is `H² = 1`, `Ei·Ej = -δij`, `H·Ei = 0`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of blown-up points for which the (-1)-curve list below
/// generates the effective cone.
pub const MAX_REDUCTION_POINTS: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a class needs at least the H coefficient");
        DivisorClass { coeffs }
    }

    pub fn zero(r: usize) -> Self {
        DivisorClass {
            coeffs: vec![0; r + 1],
        }
    }

    pub fn hyperplane(r: usize) -> Self {
        let mut d = Self::zero(r);
        d.coeffs[0] = 1;
        d
    }

    /// Exceptional class `Ei`, 1-based.
    pub fn exceptional(r: usize, i: usize) -> Self {
        assert!((1..=r).contains(&i), "exceptional index out of range");
        let mut d = Self::zero(r);
        d.coeffs[i] = 1;
        d
    }

    /// `K = -3H + ΣEi`.
    pub fn canonical(r: usize) -> Self {
        let mut coeffs = vec![1; r + 1];
        coeffs[0] = -3;
        DivisorClass { coeffs }
    }

    pub fn r(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &DivisorClass) -> Result<()> {
        if self.r() != other.r() {
            return Err(Error::dim(
                format!("lattice with r = {}", self.r()),
                format!("lattice with r = {}", other.r()),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.r(), other.r(), "adding classes from different lattices");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DivisorClass {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Pullback to a lattice with more exceptional curves.
    pub fn pullback(&self, r: usize) -> DivisorClass {
        assert!(r >= self.r());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(r + 1, 0);
        DivisorClass { coeffs }
    }

    /// Divides every coefficient by `n`, if possible.
    pub fn divide_exact(&self, n: i64) -> Option<DivisorClass> {
        if self.coeffs.iter().all(|c| c % n == 0) {
            Some(DivisorClass {
                coeffs: self.coeffs.iter().map(|c| c / n).collect(),
            })
        } else {
            None
        }
    }

    /// `d` and the multiplicities `mi` in `dH - Σ mi Ei`.
    pub fn degree_and_multiplicities(&self) -> (i64, Vec<i64>) {
        (self.coeffs[0], self.coeffs[1..].iter().map(|c| -c).collect())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let name = if i == 0 { "H".to_string() } else { format!("E{i}") };
                terms.push((c, name));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, name)) in terms.iter().enumerate() {
            let mag = c.abs();
            let body = if mag == 1 { name.clone() } else { format!("{mag}{name}") };
            match (k, *c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} {:?}", self.coeffs)
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    a.check_same(b)?;
    Ok(a.coeffs[0] * b.coeffs[0]
        - a.coeffs[1..]
            .iter()
            .zip(&b.coeffs[1..])
            .map(|(x, y)| x * y)
            .sum::<i64>())
}

fn dot(a: &DivisorClass, b: &DivisorClass) -> i64 {
    intersect(a, b).expect("classes on the same lattice")
}

/// Riemann–Roch on a rational surface: `χ(D) = 1 + D·(D - K)/2`.
pub fn chi_line_bundle(d: &DivisorClass) -> i64 {
    let k = DivisorClass::canonical(d.r());
    1 + dot(d, &d.sub(&k)) / 2
}

/// The lattice of the plane blown up at `r` general points, with the
/// (-1)-curves used for fixed-part reduction.
#[derive(Clone, Debug)]
pub struct PicLattice {
    r: usize,
    negative_curves: Vec<DivisorClass>,
}

impl PicLattice {
    pub fn new(r: usize) -> Self {
        let mut curves = Vec::new();
        for i in 1..=r {
            curves.push(DivisorClass::exceptional(r, i));
        }
        for i in 1..=r {
            for j in i + 1..=r {
                curves.push(
                    DivisorClass::hyperplane(r)
                        .sub(&DivisorClass::exceptional(r, i))
                        .sub(&DivisorClass::exceptional(r, j)),
                );
            }
        }
        // conics through five of the points
        let conic = |omit: Option<usize>| {
            (1..=r)
                .filter(|&i| Some(i) != omit)
                .fold(DivisorClass::hyperplane(r).scale(2), |c, i| {
                    c.sub(&DivisorClass::exceptional(r, i))
                })
        };
        match r {
            5 => curves.push(conic(None)),
            6 => curves.extend((1..=6).map(|i| conic(Some(i)))),
            _ => {}
        }
        PicLattice {
            r,
            negative_curves: curves,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn canonical(&self) -> DivisorClass {
        DivisorClass::canonical(self.r)
    }

    pub fn negative_curves(&self) -> &[DivisorClass] {
        &self.negative_curves
    }

    fn check(&self, d: &DivisorClass) -> Result<()> {
        if d.r() != self.r {
            return Err(Error::dim(
                format!("lattice with r = {}", self.r),
                format!("lattice with r = {}", d.r()),
            ));
        }
        Ok(())
    }

    /// Strips fixed (-1)-curves until the class is nef, or proves it is not
    /// effective.
    pub fn reduce(&self, d: &DivisorClass) -> Result<Reduction> {
        self.check(d)?;
        if self.r > MAX_REDUCTION_POINTS {
            return Err(Error::Precondition(format!(
                "fixed-part reduction needs r <= {MAX_REDUCTION_POINTS}, got {}",
                self.r
            )));
        }
        let anti = self.canonical().neg();
        let bound = 10 * dot(d, &anti).unsigned_abs() + 10;
        let mut current = d.clone();
        let mut fixed = Vec::new();
        let mut steps = 0u64;
        loop {
            if current.is_zero() {
                return Ok(Reduction::nef(current, fixed));
            }
            if dot(&current, &anti) < 0 || self.fails_nef_test(&current) {
                return Ok(Reduction {
                    nef_part: None,
                    fixed,
                });
            }
            let hit = self
                .negative_curves
                .iter()
                .find(|c| dot(&current, c) < 0);
            match hit {
                None => return Ok(Reduction::nef(current, fixed)),
                Some(c) => {
                    let mult = -dot(&current, c);
                    current = current.sub(&c.scale(mult));
                    fixed.push((c.clone(), mult));
                    steps += 1;
                    if steps > bound {
                        return Err(Error::NonTermination(d.to_string()));
                    }
                }
            }
        }
    }

    // On the one-point blow-up the ruling H - E1 is nef but is not a sum of
    // (-1)-curves.
    fn fails_nef_test(&self, d: &DivisorClass) -> bool {
        self.r == 1 && dot(d, &DivisorClass::new(vec![1, -1])) < 0
    }

    pub fn h0(&self, d: &DivisorClass) -> Result<u64> {
        match self.reduce(d)?.nef_part {
            None => Ok(0),
            Some(p) => {
                let chi = chi_line_bundle(&p);
                if chi < 0 {
                    return Err(Error::Internal(format!(
                        "nef class {p} has negative Euler characteristic"
                    )));
                }
                Ok(chi as u64)
            }
        }
    }

    pub fn h2(&self, d: &DivisorClass) -> Result<u64> {
        self.h0(&self.canonical().sub(d))
    }

    pub fn h1(&self, d: &DivisorClass) -> Result<u64> {
        let total = self.h0(d)? as i64 + self.h2(d)? as i64 - chi_line_bundle(d);
        if total < 0 {
            return Err(Error::Internal(format!("negative h1 for {d}")));
        }
        Ok(total as u64)
    }

    /// Euler characteristic of `Ω_Y(log D1 + ... + Dk)(A)` for disjoint or
    /// transversal smooth rational curves `Di`, via the residue sequence.
    pub fn chi_log_rank2(&self, a: &DivisorClass, components: &[DivisorClass]) -> Result<i64> {
        self.check(a)?;
        let mut total = self.chi_cotangent_twist(a)?;
        for c in components {
            self.check(c)?;
            total += 1 + dot(a, c);
        }
        Ok(total)
    }

    /// `χ(Ω_Y(A))` by rank-2 Riemann–Roch with `c1 = K + 2A` and
    /// `c2 = e(Y) + K·A + A²`.
    pub fn chi_cotangent_twist(&self, a: &DivisorClass) -> Result<i64> {
        self.check(a)?;
        let k = self.canonical();
        let c1 = k.add(&a.scale(2));
        let euler = 3 + self.r as i64;
        let c2 = euler + dot(&k, a) + dot(a, a);
        let twice = dot(&c1, &c1.sub(&k));
        debug_assert!(twice % 2 == 0);
        Ok(2 + twice / 2 - c2)
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// `None` when the class was shown not to be effective.
    pub nef_part: Option<DivisorClass>,
    /// Fixed curves removed, with multiplicities.
    pub fixed: Vec<(DivisorClass, i64)>,
}

impl Reduction {
    fn nef(p: DivisorClass, fixed: Vec<(DivisorClass, i64)>) -> Self {
        Reduction {
            nef_part: Some(p),
            fixed,
        }
    }
}
