use std::collections::BTreeMap;

use serde::Serialize;

use super::CoverSpec;
use crate::abelian::{Character, GroupVector, Subgroup};
use crate::error::Result;
use crate::picard::DivisorClass;

/// One eigensheaf summand, as a row of the tangent or bicanonical table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigensheafRow {
    pub character: Character,
    #[serde(rename = "L")]
    pub l: DivisorClass,
    /// `K_Y + L`. In a bicanonical row this is built from the inverse character.
    #[serde(rename = "A")]
    pub a: DivisorClass,
    pub s_set: Vec<GroupVector>,
    /// `Δ_g` for every `g` in the S set with `Δ_g ≠ 0`, keyed by the display form of `g`.
    pub delta_classes: BTreeMap<String, DivisorClass>,
    /// Names of the components making up the Δ set, in configuration order.
    pub delta_components: Vec<String>,
    pub delta_sum: DivisorClass,
    /// Tangent rows: `A`. Bicanonical rows: `2K_Y + Σ Δ_g + L_{χ⁻¹}`.
    pub class: DivisorClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_log: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicanonicalAnalysis {
    pub characters_with_sections: Vec<Character>,
    pub generates: bool,
    pub h0_total: u64,
    /// `χ(𝒪_X) + K_X²`, which equals `h⁰(2K_X)` for a surface of general type.
    pub chi_2k: i64,
}

impl CoverSpec {
    /// `S_χ`: nonzero `g` in the cover group whose pairing, read modulo the
    /// order `m` of `g`, is not `m - 1`.
    pub fn s_set(&self, chi: &Character) -> Vec<GroupVector> {
        self.group()
            .elements()
            .iter()
            .filter(|g| !g.is_zero())
            .filter(|g| {
                let (j, m) = chi.value_mod_order(g);
                j != m - 1
            })
            .cloned()
            .collect()
    }

    fn delta_data(&self, s: &[GroupVector]) -> (BTreeMap<String, DivisorClass>, Vec<String>, DivisorClass) {
        let mut classes = BTreeMap::new();
        let mut names = Vec::new();
        let mut sum = DivisorClass::zero(self.r());
        for c in self.ramified() {
            if s.contains(&c.phi) {
                names.push(c.name.clone());
                sum = sum.add(&c.class);
            }
        }
        for g in s {
            let comps = self.delta_g(g);
            if comps.is_empty() {
                continue;
            }
            let class = comps
                .iter()
                .fold(DivisorClass::zero(self.r()), |acc, c| acc.add(&c.class));
            classes.insert(g.to_string(), class);
        }
        (classes, names, sum)
    }

    pub fn tangent_table(&self) -> Result<Vec<EigensheafRow>> {
        self.require_smooth()?;
        let y = self.lattice();
        let k = y.canonical();
        let mut rows = Vec::new();
        for chi in self.characters() {
            let l = self.eigensheaf(&chi)?;
            let a = k.add(&l);
            let s = self.s_set(&chi);
            let (delta_classes, delta_components, delta_sum) = self.delta_data(&s);
            let parts: Vec<DivisorClass> = delta_components
                .iter()
                .map(|n| self.component(n).map(|c| c.class.clone()))
                .collect::<Result<_>>()?;
            let chi_log = y.chi_log_rank2(&a, &parts)?;
            rows.push(EigensheafRow {
                character: chi,
                l,
                a: a.clone(),
                s_set: s,
                delta_classes,
                delta_components,
                delta_sum,
                class: a,
                chi_log: Some(chi_log),
                h0: None,
            });
        }
        Ok(rows)
    }

    pub fn bicanonical_table(&self) -> Result<Vec<EigensheafRow>> {
        self.require_smooth()?;
        let y = self.lattice();
        let k = y.canonical();
        let mut rows = Vec::new();
        for chi in self.characters() {
            let inv = self.normalize(&chi.inverse());
            let l = self.eigensheaf(&inv)?;
            let s = self.s_set(&inv);
            let (delta_classes, delta_components, delta_sum) = self.delta_data(&s);
            let class = k.scale(2).add(&delta_sum).add(&l);
            let h0 = y.h0(&class)?;
            rows.push(EigensheafRow {
                character: chi,
                a: k.add(&l),
                l,
                s_set: s,
                delta_classes,
                delta_components,
                delta_sum,
                class,
                chi_log: None,
                h0: Some(h0),
            });
        }
        Ok(rows)
    }

    pub fn bicanonical_analysis(&self) -> Result<BicanonicalAnalysis> {
        let rows = self.bicanonical_table()?;
        let with_sections: Vec<Character> = rows
            .iter()
            .filter(|r| r.h0.unwrap_or(0) > 0)
            .map(|r| r.character.clone())
            .collect();
        let h0_total = rows.iter().map(|r| r.h0.unwrap_or(0)).sum();

        // Characters of G are detected by their values on a basis of G; they
        // generate iff those value vectors span all of (Z/n)^basis.
        let g = self.group();
        let basis = g.basis().to_vec();
        let keys: Vec<GroupVector> = with_sections
            .iter()
            .map(|c| {
                let vals: Vec<i64> = basis.iter().map(|b| c.pair(b) as i64).collect();
                GroupVector::new(self.modulus(), &vals)
            })
            .collect();
        let span = Subgroup::span(self.modulus(), basis.len(), &keys)?;
        let generates = span.order() == self.characters().len();

        let inv = self.invariants()?;
        Ok(BicanonicalAnalysis {
            characters_with_sections: with_sections,
            generates,
            h0_total,
            chi_2k: inv.chi + inv.k2,
        })
    }

    /// The listed representative for the character that agrees with `chi` on G.
    fn normalize(&self, chi: &Character) -> Character {
        let g = self.group();
        let key = |c: &Character| -> Vec<u32> { g.basis().iter().map(|b| c.pair(b)).collect() };
        let target = key(chi);
        self.characters()
            .into_iter()
            .find(|c| key(c) == target)
            .unwrap_or_else(|| chi.clone())
    }

    fn require_smooth(&self) -> Result<()> {
        let singular = self.singular_points()?;
        if singular.is_empty() {
            Ok(())
        } else {
            Err(crate::error::Error::Precondition(format!(
                "cover is singular over {}",
                singular.join(", ")
            )))
        }
    }
}
