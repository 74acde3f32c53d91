//! Abelian covers of blown-up planes branched along curve configurations.
//!
//! A [`CoverSpec`] records the branch components with their divisor classes
//! and their images in (Z/n)^k, plus the points where components meet. The
//! cover group is the span of the component images.

mod config;
mod tables;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::abelian::{characters_of, Character, GroupVector, QuotientGroup, Subgroup};
use crate::error::{Error, Result};
use crate::picard::{chi_line_bundle, DivisorClass, PicLattice};

pub use config::{ComponentConfig, CoverConfig, ExpectedInvariants, IncidenceConfig};
pub use tables::{BicanonicalAnalysis, EigensheafRow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchComponent {
    pub name: String,
    pub class: DivisorClass,
    pub phi: GroupVector,
}

impl BranchComponent {
    /// Components with trivial image are not part of the branch locus.
    pub fn is_ramified(&self) -> bool {
        !self.phi.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidencePoint {
    pub name: String,
    pub components: Vec<String>,
    pub on_exceptional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmoothnessReason {
    /// Fewer than two branch components pass through the point.
    Unbranched { branch_components: usize },
    /// Exactly two branch components whose images span a direct sum.
    Transversal,
    TripleOrMore { branch_components: usize },
    DirectSumFailure { span_order: usize, expected: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointVerdict {
    pub point: String,
    pub smooth: bool,
    pub reason: SmoothnessReason,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "K2")]
    pub k2: i64,
    pub chi: i64,
    pub pg: u64,
    pub q: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    modulus: u32,
    dim: usize,
    lattice: usize,
    components: Vec<BranchComponent>,
    incidences: Vec<IncidencePoint>,
    resolved: Vec<String>,
}

impl CoverSpec {
    pub fn new(
        modulus: u32,
        dim: usize,
        r: usize,
        components: Vec<BranchComponent>,
        incidences: Vec<IncidencePoint>,
    ) -> Result<Self> {
        let spec = CoverSpec {
            modulus,
            dim,
            lattice: r,
            components,
            incidences,
            resolved: Vec::new(),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let mut names = HashSet::new();
        for c in &self.components {
            if !names.insert(c.name.as_str()) {
                return Err(Error::Config(format!("duplicate component {}", c.name)));
            }
            if c.class.r() != self.lattice {
                return Err(Error::Config(format!(
                    "component {} has a class on r = {}, expected r = {}",
                    c.name,
                    c.class.r(),
                    self.lattice
                )));
            }
            if c.phi.modulus() != self.modulus || c.phi.dim() != self.dim {
                return Err(Error::Config(format!(
                    "component {} has image {} outside (Z/{})^{}",
                    c.name, c.phi, self.modulus, self.dim
                )));
            }
        }
        let mut points = HashSet::new();
        for p in &self.incidences {
            if !points.insert(p.name.as_str()) {
                return Err(Error::Config(format!("duplicate point {}", p.name)));
            }
            if p.components.len() < 2 {
                return Err(Error::Config(format!(
                    "point {} needs at least two incident components",
                    p.name
                )));
            }
            for c in &p.components {
                if !names.contains(c.as_str()) {
                    return Err(Error::Config(format!(
                        "point {} references unknown component {c}",
                        p.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> PicLattice {
        PicLattice::new(self.lattice)
    }

    pub fn r(&self) -> usize {
        self.lattice
    }

    pub fn components(&self) -> &[BranchComponent] {
        &self.components
    }

    pub fn incidences(&self) -> &[IncidencePoint] {
        &self.incidences
    }

    pub fn resolved_points(&self) -> &[String] {
        &self.resolved
    }

    pub fn component(&self, name: &str) -> Result<&BranchComponent> {
        self.components
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Config(format!("unknown component {name}")))
    }

    pub fn ramified(&self) -> impl Iterator<Item = &BranchComponent> {
        self.components.iter().filter(|c| c.is_ramified())
    }

    /// The cover group: span of all component images.
    pub fn group(&self) -> Subgroup {
        let images: Vec<GroupVector> = self.components.iter().map(|c| c.phi.clone()).collect();
        Subgroup::span(self.modulus, self.dim, &images).expect("validated ambient")
    }

    /// Total branch class Δ (unramified components excluded).
    pub fn branch_class(&self) -> DivisorClass {
        self.ramified()
            .fold(DivisorClass::zero(self.lattice), |acc, c| acc.add(&c.class))
    }

    /// Components with image `g`, i.e. the curve Δ_g. Empty for `g = 0`.
    pub fn delta_g(&self, g: &GroupVector) -> Vec<&BranchComponent> {
        if g.is_zero() {
            return Vec::new();
        }
        self.components.iter().filter(|c| &c.phi == g).collect()
    }

    pub fn smoothness_report(&self) -> Result<Vec<PointVerdict>> {
        let mut out = Vec::with_capacity(self.incidences.len());
        for p in &self.incidences {
            let mut branch = Vec::new();
            for name in &p.components {
                let c = self.component(name)?;
                if c.is_ramified() {
                    branch.push(c.phi.clone());
                }
            }
            let (smooth, reason) = match branch.len() {
                0 | 1 => (
                    true,
                    SmoothnessReason::Unbranched {
                        branch_components: branch.len(),
                    },
                ),
                2 => {
                    let span = Subgroup::span(self.modulus, self.dim, &branch)?.order();
                    let expected = (branch[0].order() * branch[1].order()) as usize;
                    if span == expected {
                        (true, SmoothnessReason::Transversal)
                    } else {
                        (
                            false,
                            SmoothnessReason::DirectSumFailure {
                                span_order: span,
                                expected,
                            },
                        )
                    }
                }
                k => (
                    false,
                    SmoothnessReason::TripleOrMore {
                        branch_components: k,
                    },
                ),
            };
            out.push(PointVerdict {
                point: p.name.clone(),
                smooth,
                reason,
            });
        }
        Ok(out)
    }

    pub fn singular_points(&self) -> Result<Vec<String>> {
        Ok(self
            .smoothness_report()?
            .into_iter()
            .filter(|v| !v.smooth)
            .map(|v| v.point)
            .collect())
    }

    pub fn is_smooth(&self) -> Result<bool> {
        Ok(self.singular_points()?.is_empty())
    }

    /// Blows up `point`, naming the new exceptional curve `E{r+1}`.
    pub fn blowup_extend(&self, point: &str) -> Result<CoverSpec> {
        self.blowup_named(point, &format!("E{}", self.lattice + 1))
    }

    /// Blows up `point`: incident classes drop by the new exceptional class
    /// and the exceptional curve maps to the sum of the incident images.
    pub fn blowup_named(&self, point: &str, exceptional: &str) -> Result<CoverSpec> {
        if self.resolved.iter().any(|p| p == point) {
            return Err(Error::Config(format!("point {point} was already blown up")));
        }
        let idx = self
            .incidences
            .iter()
            .position(|p| p.name == point)
            .ok_or_else(|| Error::Config(format!("unknown point {point}")))?;
        if self.components.iter().any(|c| c.name == exceptional) {
            return Err(Error::Config(format!("component {exceptional} already exists")));
        }
        let r = self.lattice + 1;
        let e = DivisorClass::exceptional(r, r);
        let incident = self.incidences[idx].components.clone();

        let mut phi_e = GroupVector::zero(self.modulus, self.dim);
        let mut components = Vec::with_capacity(self.components.len() + 1);
        for c in &self.components {
            let mut class = c.class.pullback(r);
            if incident.contains(&c.name) {
                class = class.sub(&e);
                phi_e = phi_e.add(&c.phi);
            }
            components.push(BranchComponent {
                name: c.name.clone(),
                class,
                phi: c.phi.clone(),
            });
        }
        components.push(BranchComponent {
            name: exceptional.to_string(),
            class: e,
            phi: phi_e,
        });

        let mut incidences: Vec<IncidencePoint> = self
            .incidences
            .iter()
            .filter(|p| p.name != point)
            .cloned()
            .collect();
        for c in &incident {
            incidences.push(IncidencePoint {
                name: format!("{exceptional}.{c}"),
                components: vec![exceptional.to_string(), c.clone()],
                on_exceptional: true,
            });
        }
        let mut resolved = self.resolved.clone();
        resolved.push(point.to_string());
        let spec = CoverSpec {
            modulus: self.modulus,
            dim: self.dim,
            lattice: r,
            components,
            incidences,
            resolved,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn characters(&self) -> Vec<Character> {
        characters_of(&self.group())
    }

    /// The class `L_χ` with `n·L_χ = Σ ⟨χ, Φ(Δi)⟩ Δi`, pairings lifted to [0, n).
    pub fn eigensheaf(&self, chi: &Character) -> Result<DivisorClass> {
        if chi.coords().dim() != self.dim || chi.coords().modulus() != self.modulus {
            return Err(Error::dim(self.dim, chi.coords().dim()));
        }
        let mut total = DivisorClass::zero(self.lattice);
        for c in self.ramified() {
            total = total.add(&c.class.scale(chi.pair(&c.phi) as i64));
        }
        total.divide_exact(self.modulus as i64).ok_or_else(|| {
            Error::InconsistentCover(format!(
                "{}·L is {total}, not divisible for character {chi}",
                self.modulus
            ))
        })
    }

    /// `(K_Y + Σ (1 - 1/di) Δi)²` times the group order, evaluated exactly.
    /// This is K² of the cover when the cover is smooth.
    pub fn ramification_k2(&self) -> BigRational {
        let r = self.lattice;
        let mut coeffs: Vec<BigRational> = DivisorClass::canonical(r)
            .coeffs()
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        for c in self.ramified() {
            let d = c.phi.order() as i64;
            let weight = BigRational::new(BigInt::from(d - 1), BigInt::from(d));
            for (acc, &x) in coeffs.iter_mut().zip(c.class.coeffs()) {
                *acc += weight.clone() * BigRational::from_integer(x.into());
            }
        }
        let mut square = coeffs[0].clone() * coeffs[0].clone();
        for x in &coeffs[1..] {
            square -= x.clone() * x.clone();
        }
        square * BigRational::from_integer(BigInt::from(self.group().order()))
    }

    pub fn invariants(&self) -> Result<SurfaceInvariants> {
        let singular = self.singular_points()?;
        if !singular.is_empty() {
            return Err(Error::Precondition(format!(
                "cover is singular over {}",
                singular.join(", ")
            )));
        }
        let k2 = self.ramification_k2();
        if !k2.is_integer() {
            return Err(Error::Internal(format!("K² = {k2} is not an integer")));
        }
        let k2: i64 = k2
            .to_integer()
            .try_into()
            .map_err(|_| Error::Internal("K² out of range".into()))?;

        let y = self.lattice();
        let k = y.canonical();
        let (mut chi, mut pg, mut q) = (0i64, 0u64, 0u64);
        for character in self.characters() {
            let l = self.eigensheaf(&character)?;
            chi += chi_line_bundle(&l.neg());
            let twisted = k.add(&l);
            pg += y.h0(&twisted)?;
            q += y.h1(&twisted)?;
        }
        Ok(SurfaceInvariants { k2, chi, pg, q })
    }

    /// Replaces the cover group `G` by `G / h`, with quotient coordinates
    /// taken in a basis chosen greedily from `preferred`.
    pub fn quotient_branch_data(&self, h: &Subgroup, preferred: &[GroupVector]) -> Result<CoverSpec> {
        let g = self.group();
        if h.modulus() != self.modulus || h.dim() != self.dim || !h.is_subgroup_of(&g) {
            return Err(Error::NotSubgroup);
        }
        let quotient = QuotientGroup::with_preferred_basis(&g, h, preferred)?;
        let dim = quotient.rank();
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(BranchComponent {
                    name: c.name.clone(),
                    class: c.class.clone(),
                    phi: quotient.class_of(&c.phi)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverSpec {
            modulus: self.modulus,
            dim,
            lattice: self.lattice,
            components,
            incidences: self.incidences.clone(),
            resolved: self.resolved.clone(),
        })
    }
}

/// `K²` change from blowing up a point: if the incident components have
/// orders `di` and the exceptional curve gets order `dE`, the class
/// `K + Σ(1-1/d)Δ` changes by `c·E` with `c = 1 - Σ(1-1/di) + (1-1/dE)`, so
/// the ramification value drops by `|G|·c²`.
pub fn blowup_k2_drop(spec: &CoverSpec, point: &str) -> Result<BigRational> {
    let p = spec
        .incidences()
        .iter()
        .find(|p| p.name == point)
        .ok_or_else(|| Error::Config(format!("unknown point {point}")))?;
    let weight = |v: &GroupVector| {
        let d = v.order() as i64;
        BigRational::new(BigInt::from(d - 1), BigInt::from(d))
    };
    let mut c = BigRational::one();
    let mut phi_e = GroupVector::zero(spec.modulus(), spec.dim());
    for name in &p.components {
        let comp = spec.component(name)?;
        c -= weight(&comp.phi);
        phi_e = phi_e.add(&comp.phi);
    }
    c += weight(&phi_e);
    let order = BigRational::from_integer(BigInt::from(spec.group().order()));
    let drop = order * c.clone() * c;
    debug_assert!(drop >= BigRational::zero());
    Ok(drop)
}
