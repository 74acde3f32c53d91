//! Finite presentations, abelianization, coset tables from maps to Z/n, and
//! Reidemeister–Schreier rewriting.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::eisenstein::{conjugation_table, make_generators, EisensteinAffineMap};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Matrix};
use crate::words::{Letter, Word, GENERATOR_COUNT};

/// A word as a sequence of `(generator index, ±1)`.
pub type Relator = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Relator>) -> Result<Self> {
        for r in &relators {
            for &(g, e) in r {
                if g >= generators.len() || e.abs() != 1 {
                    return Err(Error::Config(format!(
                        "relator letter ({g}, {e}) is invalid for {} generators",
                        generators.len()
                    )));
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    /// One row per relator, one column per generator, entries are exponent sums.
    pub fn relation_matrix(&self) -> Matrix<BigInt> {
        let cols = self.generators.len();
        let rows = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![BigInt::zero(); cols];
                for &(g, e) in r {
                    row[g] += e;
                }
                row
            })
            .collect();
        Matrix::from_rows(rows, cols)
    }

    pub fn relator_string(&self, r: &Relator) -> String {
        if r.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<(usize, i64)> = Vec::new();
        for &(g, e) in r {
            match parts.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => parts.push((g, e)),
            }
        }
        parts
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|&(g, e)| {
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{e}", self.generators[g])
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            generators: &'a [String],
            relators: Vec<String>,
        }
        Repr {
            generators: &self.generators,
            relators: self.relators.iter().map(|r| self.relator_string(r)).collect(),
        }
        .serialize(s)
    }
}

fn word_to_relator(w: &Word) -> Relator {
    w.letters().into_iter().map(|(l, e)| (l.index(), e)).collect()
}

fn eval_relator(r: &Relator) -> EisensteinAffineMap {
    let gens = make_generators();
    r.iter().fold(EisensteinAffineMap::identity(), |acc, &(g, e)| {
        let letter = Letter::from_index(g).expect("generator index");
        acc.compose(&gens.get(letter).pow(e))
    })
}

/// Named relator families of Γ, each as `lhs = rhs`.
fn gamma_relations() -> Result<Vec<(String, Word)>> {
    let mut out = Vec::new();
    let translations: Vec<Word> = (3..GENERATOR_COUNT)
        .map(|i| Word::letter(Letter::from_index(i).unwrap()))
        .collect();
    for i in 0..translations.len() {
        for j in i + 1..translations.len() {
            let (a, b) = (&translations[i], &translations[j]);
            let w = a.mul(b).mul(&a.inverse()).mul(&b.inverse());
            out.push((format!("[{a}, {b}]"), w));
        }
    }
    for c in conjugation_table()? {
        let lhs = Word::parse(&format!("g{} {} g{}^-1", c.gamma, c.translation, c.gamma))?;
        let rhs = Word::parse(&c.result)?;
        out.push((format!("{lhs} = {rhs}"), lhs.mul(&rhs.inverse())));
    }
    for i in 1..=3 {
        let j = i % 3 + 1;
        let k = j % 3 + 1;
        let lhs = Word::parse(&format!("g{i} g{j}"))?;
        let rhs = Word::parse(&format!("t{k} g{j} g{i}"))?;
        out.push((format!("{lhs} = {rhs}"), lhs.mul(&rhs.inverse())));
    }
    for i in 1..=3 {
        let k = (i + 1) % 3 + 1;
        let lhs = Word::parse(&format!("g{i}^3"))?;
        let rhs = Word::parse(&format!("t{k}^2 tp{k}"))?;
        out.push((format!("{lhs} = {rhs}"), lhs.mul(&rhs.inverse())));
    }
    Ok(out)
}

/// The presentation of Γ on `g1..g3, t1..t3, tp1..tp3`. Every relator is
/// evaluated as an affine map and must be the identity.
pub fn gamma_presentation() -> Result<Presentation> {
    let generators = Letter::all().iter().map(|l| l.to_string()).collect();
    let mut relators = Vec::new();
    for (name, w) in gamma_relations()? {
        let r = word_to_relator(&w);
        if eval_relator(&r) != EisensteinAffineMap::identity() {
            return Err(Error::RelatorFailed(name));
        }
        relators.push(r);
    }
    Presentation::new(generators, relators)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<u64>,
}

pub fn abelianization(p: &Presentation) -> Result<Abelianization> {
    let m = p.relation_matrix();
    let (free_rank, torsion) = if m.rows() == 0 {
        (p.generators().len(), Vec::new())
    } else {
        let snf = smith_normal_form(&m);
        (snf.cokernel_free_rank(), snf.torsion())
    };
    let torsion = torsion
        .iter()
        .map(|d| {
            d.abs()
                .to_u64()
                .ok_or_else(|| Error::Internal(format!("invariant factor {d} too large")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Abelianization { free_rank, torsion })
}

/// Cosets `0..m` with a right action of each generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    /// `action[g][c]` is the coset `c·g`.
    action: Vec<Vec<usize>>,
    /// Value of the defining map on each coset, or the coset index.
    labels: Vec<u32>,
    /// Modulus and generator values of the defining map, if any.
    hom: Option<(u32, Vec<u32>)>,
}

impl CosetTable {
    pub fn new(action: Vec<Vec<usize>>) -> Result<Self> {
        let m = action.first().map_or(1, |a| a.len());
        let t = CosetTable {
            labels: (0..m as u32).collect(),
            action,
            hom: None,
        };
        t.check_complete()?;
        Ok(t)
    }

    pub fn cosets(&self) -> usize {
        self.labels.len()
    }

    pub fn act(&self, coset: usize, g: usize, e: i64) -> usize {
        if e > 0 {
            self.action[g][coset]
        } else {
            self.action[g]
                .iter()
                .position(|&d| d == coset)
                .expect("permutation")
        }
    }

    pub fn check_complete(&self) -> Result<()> {
        let m = self.cosets();
        for (g, row) in self.action.iter().enumerate() {
            if row.len() != m {
                return Err(Error::Precondition(format!(
                    "generator {g} acts on {} cosets, expected {m}",
                    row.len()
                )));
            }
            let mut seen = vec![false; m];
            for &c in row {
                if c >= m || seen[c] {
                    return Err(Error::Precondition(format!(
                        "generator {g} does not permute the cosets"
                    )));
                }
                seen[c] = true;
            }
        }
        Ok(())
    }

    pub fn is_permutation_table(&self) -> bool {
        self.check_complete().is_ok()
    }

    /// Tracing each relator from each coset returns to that coset.
    pub fn consistent_with(&self, p: &Presentation) -> bool {
        (0..self.cosets()).all(|c| {
            p.relators()
                .iter()
                .all(|r| r.iter().fold(c, |d, &(g, e)| self.act(d, g, e)) == c)
        })
    }

    pub fn trace(&self, start: usize, w: &Relator) -> usize {
        w.iter().fold(start, |d, &(g, e)| self.act(d, g, e))
    }
}

/// The table of `Ker φ` for `φ` sending generator `i` to `values[i]` in Z/n.
/// Cosets are indexed by the φ-values of the image, in increasing order.
pub fn coset_table_from_hom(p: &Presentation, modulus: u32, values: &[u32]) -> Result<CosetTable> {
    if values.len() != p.generators().len() {
        return Err(Error::dim(p.generators().len(), values.len()));
    }
    let n = modulus as i64;
    for r in p.relators() {
        let total: i64 = r.iter().map(|&(g, e)| e * values[g] as i64).sum();
        if total.rem_euclid(n) != 0 {
            return Err(Error::NotHomomorphism(p.relator_string(r)));
        }
    }
    let mut image = vec![false; modulus as usize];
    image[0] = true;
    let mut frontier = vec![0u32];
    while let Some(v) = frontier.pop() {
        for &x in values {
            let w = ((v + x) % modulus) as usize;
            if !image[w] {
                image[w] = true;
                frontier.push(w as u32);
            }
        }
    }
    let labels: Vec<u32> = (0..modulus).filter(|&v| image[v as usize]).collect();
    let index_of: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let action = values
        .iter()
        .map(|&x| labels.iter().map(|&v| index_of[&((v + x) % modulus)]).collect())
        .collect();
    let table = CosetTable {
        action,
        labels,
        hom: Some((modulus, values.to_vec())),
    };
    table.check_complete()?;
    Ok(table)
}

#[derive(Clone, Debug, Serialize)]
pub struct SchreierData {
    pub presentation: Presentation,
    /// Transversal words as relators in the parent's generators.
    pub transversal: Vec<Relator>,
    /// For each subgroup generator: `(coset, parent generator)`.
    pub schreier_generators: Vec<(usize, usize)>,
    pub tree_edges: usize,
}

impl SchreierData {
    /// The Schreier generator `rep(c)·x·rep(c·x)⁻¹` as a parent word.
    pub fn schreier_word(&self, table: &CosetTable, k: usize) -> Relator {
        let (c, x) = self.schreier_generators[k];
        let d = table.act(c, x, 1);
        let mut w = self.transversal[c].clone();
        w.push((x, 1));
        w.extend(invert(&self.transversal[d]));
        w
    }
}

fn invert(w: &Relator) -> Relator {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

fn free_reduce(w: &Relator) -> Relator {
    let mut out: Relator = Vec::with_capacity(w.len());
    for &l in w {
        if let Some(&last) = out.last() {
            if last.0 == l.0 && last.1 == -l.1 {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    out
}

/// Coset representatives: powers of a distinguished generator when one acts
/// transitively, else a breadth-first spanning tree over positive generators.
fn transversal(table: &CosetTable) -> Result<Vec<Relator>> {
    let m = table.cosets();
    let gens = table.action.len();
    for g in 0..gens {
        let mut reps: Vec<Option<Relator>> = vec![None; m];
        let mut c = 0;
        let mut word = Vec::new();
        for _ in 0..m {
            if reps[c].is_some() {
                break;
            }
            reps[c] = Some(word.clone());
            word.push((g, 1));
            c = table.act(c, g, 1);
        }
        if reps.iter().all(|r| r.is_some()) {
            return Ok(reps.into_iter().map(|r| r.unwrap()).collect());
        }
    }
    let mut reps: Vec<Option<Relator>> = vec![None; m];
    reps[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..gens {
            let d = table.act(c, g, 1);
            if reps[d].is_none() {
                let mut w = reps[c].clone().unwrap();
                w.push((g, 1));
                reps[d] = Some(w);
                queue.push_back(d);
            }
        }
    }
    reps.into_iter()
        .map(|r| r.ok_or_else(|| Error::Precondition("coset table is not transitive".into())))
        .collect()
}

pub fn reidemeister_schreier(p: &Presentation, table: &CosetTable) -> Result<SchreierData> {
    table.check_complete()?;
    if table.action.len() != p.generators().len() {
        return Err(Error::dim(p.generators().len(), table.action.len()));
    }
    if !table.consistent_with(p) {
        return Err(Error::Precondition("coset table violates a relator".into()));
    }
    let m = table.cosets();
    let reps = transversal(table)?;

    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut generators = Vec::new();
    let mut schreier_generators = Vec::new();
    let mut tree_edges = 0;
    for c in 0..m {
        for x in 0..p.generators().len() {
            let d = table.act(c, x, 1);
            let mut w = reps[c].clone();
            w.push((x, 1));
            if free_reduce(&w) == reps[d] {
                tree_edges += 1;
                continue;
            }
            index.insert((c, x), generators.len());
            generators.push(if m == 1 {
                p.generators()[x].clone()
            } else {
                format!("{}_{c}", p.generators()[x])
            });
            schreier_generators.push((c, x));
        }
    }

    let mut relators = Vec::new();
    for c in 0..m {
        for r in p.relators() {
            let mut out = Vec::new();
            let mut cur = c;
            for &(x, e) in r {
                if e > 0 {
                    if let Some(&k) = index.get(&(cur, x)) {
                        out.push((k, 1));
                    }
                    cur = table.act(cur, x, 1);
                } else {
                    let prev = table.act(cur, x, -1);
                    if let Some(&k) = index.get(&(prev, x)) {
                        out.push((k, -1));
                    }
                    cur = prev;
                }
            }
            debug_assert_eq!(cur, c);
            relators.push(free_reduce(&out));
        }
    }
    Ok(SchreierData {
        presentation: Presentation::new(generators, relators)?,
        transversal: reps,
        schreier_generators,
        tree_edges,
    })
}

/// Checks that `x·s·x⁻¹` lies in the kernel for every Schreier generator `s`
/// and every parent generator `x`, using the map the table was built from.
pub fn kernel_is_normal(table: &CosetTable, data: &SchreierData) -> Result<bool> {
    let (n, values) = table
        .hom
        .as_ref()
        .ok_or_else(|| Error::Precondition("table was not built from a homomorphism".into()))?;
    let phi = |w: &Relator| -> u32 {
        let s: i64 = w.iter().map(|&(g, e)| e * values[g] as i64).sum();
        s.rem_euclid(*n as i64) as u32
    };
    for k in 0..data.schreier_generators.len() {
        let s = data.schreier_word(table, k);
        if phi(&s) != 0 {
            return Ok(false);
        }
        for x in 0..values.len() {
            let mut w = vec![(x, 1)];
            w.extend(s.iter().copied());
            w.push((x, -1));
            if phi(&w) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the parent word lies in the subgroup described by the table.
pub fn in_subgroup(table: &CosetTable, w: &Relator) -> bool {
    table.trace(0, w) == 0
}

/// The map to Z/3 sending the given γ to 1 and every other generator to 0.
pub fn sigma_hom(distinguished_gamma: usize) -> Vec<u32> {
    let mut v = vec![0; GENERATOR_COUNT];
    v[distinguished_gamma] = 1;
    v
}

/// The index-3 subgroup `Σᵢ`: `Σ₁` is the kernel of `γ₃ ↦ 1`, `Σ₂` of
/// `γ₁ ↦ 1`, `Σ₃` of `γ₂ ↦ 1`.
pub fn sigma_table(p: &Presentation, i: usize) -> Result<CosetTable> {
    if !(1..=3).contains(&i) {
        return Err(Error::Config(format!("no subgroup sigma{i}")));
    }
    let gamma = (i + 1) % 3;
    coset_table_from_hom(p, 3, &sigma_hom(gamma))
}

pub fn word_relator(text: &str) -> Result<Relator> {
    Ok(word_to_relator(&Word::parse(text)?))
}
