use serde::{Deserialize, Serialize};

use super::{BranchComponent, CoverSpec, IncidencePoint, SurfaceInvariants};
use crate::abelian::GroupVector;
use crate::error::{Error, Result};
use crate::picard::DivisorClass;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentConfig {
    pub name: String,
    /// Coefficients on (H, E1, ..., Er).
    pub class: Vec<i64>,
    pub phi: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceConfig {
    pub name: String,
    pub components: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ExpectedInvariants {
    #[serde(rename = "K2")]
    pub k2: Option<i64>,
    pub chi: Option<i64>,
    pub pg: Option<u64>,
    pub q: Option<u64>,
}

impl ExpectedInvariants {
    /// Field-by-field comparison; unset fields are skipped.
    pub fn compare(&self, got: &SurfaceInvariants) -> Vec<(String, i64, i64, bool)> {
        let mut out = Vec::new();
        let mut push = |name: &str, want: Option<i64>, have: i64| {
            if let Some(w) = want {
                out.push((name.to_string(), w, have, w == have));
            }
        };
        push("K2", self.k2, got.k2);
        push("chi", self.chi, got.chi);
        push("pg", self.pg.map(|v| v as i64), got.pg as i64);
        push("q", self.q.map(|v| v as i64), got.q as i64);
        out
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CoverConfig {
    pub name: String,
    pub modulus: u32,
    pub dimension: usize,
    /// Number of points already blown up in the base lattice.
    #[serde(default)]
    pub lattice_r: usize,
    pub components: Vec<ComponentConfig>,
    #[serde(default)]
    pub incidences: Vec<IncidenceConfig>,
    /// Points to blow up, in order.
    #[serde(default)]
    pub blow_up: Vec<String>,
    #[serde(default)]
    pub expected: Option<ExpectedInvariants>,
    /// Points expected to stay singular after the listed blow-ups.
    #[serde(default)]
    pub expected_singular: Option<Vec<String>>,
}

impl CoverConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// The configuration before any blow-ups.
    pub fn base_spec(&self) -> Result<CoverSpec> {
        if self.modulus < 2 {
            return Err(Error::UnsupportedModulus(self.modulus));
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                if c.class.len() != self.lattice_r + 1 {
                    return Err(Error::Config(format!(
                        "component {} has {} class coefficients, expected {}",
                        c.name,
                        c.class.len(),
                        self.lattice_r + 1
                    )));
                }
                if c.phi.len() != self.dimension {
                    return Err(Error::Config(format!(
                        "component {} has an image of length {}, expected {}",
                        c.name,
                        c.phi.len(),
                        self.dimension
                    )));
                }
                Ok(BranchComponent {
                    name: c.name.clone(),
                    class: DivisorClass::new(c.class.clone()),
                    phi: GroupVector::new(self.modulus, &c.phi),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let incidences = self
            .incidences
            .iter()
            .map(|p| IncidencePoint {
                name: p.name.clone(),
                components: p.components.clone(),
                on_exceptional: false,
            })
            .collect();
        CoverSpec::new(
            self.modulus,
            self.dimension,
            self.lattice_r,
            components,
            incidences,
        )
    }

    /// The configuration after the listed blow-ups.
    pub fn spec(&self) -> Result<CoverSpec> {
        let mut spec = self.base_spec()?;
        for p in &self.blow_up {
            spec = spec.blowup_extend(p)?;
        }
        Ok(spec)
    }
}
