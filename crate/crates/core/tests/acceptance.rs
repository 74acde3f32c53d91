//! One test per acceptance criterion, each printing a PASS/FAIL line.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use kulikov_core::abelian::{matrix_rank_mod_n, Character, GroupVector, Subgroup};
use kulikov_core::cover::SurfaceInvariants;
use kulikov_core::datasets;
use kulikov_core::eisenstein::{free_action_census, relation_suite};
use kulikov_core::group_algebra::{
    g2_generators, ideal_membership, bloch_families, bloch_subgroup_list, z,
};
use kulikov_core::kulikov;
use kulikov_core::linalg::{determinant, smith_normal_form, Matrix};
use kulikov_core::picard::{chi_line_bundle, DivisorClass, PicLattice};
use kulikov_core::presentation::{
    abelianization, gamma_presentation, reidemeister_schreier, sigma_table, Abelianization,
};
use kulikov_core::report::{self, Options};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

fn verdict(n: u32, title: &str, ok: bool, detail: &str) {
    let mark = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance criterion {n:>2} [{mark}] {title}: {detail}");
}

#[test]
fn criterion_01_kulikov_invariants() {
    let text = datasets::KULIKOV;
    let report = report::cmd_invariants("kulikov", text, Options::default()).unwrap();
    let inv = report.results["invariants"].clone();
    let want = json!({"K2": 6, "chi": 1, "pg": 0, "q": 0});
    let ok = inv == want && report.all_pass();
    verdict(1, "Kulikov invariants", ok, &inv.to_string());
    assert!(ok, "{inv}");
}

#[test]
fn criterion_02_maximal_cover_invariants() {
    let start = Instant::now();
    let spec = datasets::maximal_cover().spec().unwrap();
    let characters = spec.characters().len();
    let inv = spec.invariants().unwrap();
    let secs = start.elapsed().as_secs_f64();
    let want = SurfaceInvariants {
        k2: 162,
        chi: 27,
        pg: 29,
        q: 3,
    };
    let ok = inv == want && characters == 243 && secs < 5.0;
    verdict(
        2,
        "maximal cover invariants",
        ok,
        &format!("{inv:?} over {characters} characters in {secs:.2}s"),
    );
    assert!(ok);
}

fn tangent_triples_json(rows: &[(Vec<i64>, Vec<i64>, Vec<String>)]) -> String {
    let v: Vec<_> = rows
        .iter()
        .map(|(c, a, s)| json!({"character": c, "A": a, "delta_set": s}))
        .collect();
    serde_json::to_string(&v).unwrap()
}

#[test]
fn criterion_03_tangent_table() {
    let spec = datasets::kulikov().spec().unwrap();
    let rows = spec.tangent_table().unwrap();
    let fixture = datasets::tangent_fixture();
    let expected: Vec<_> = fixture
        .rows
        .iter()
        .map(|r| (r.character.clone(), r.a.clone(), r.delta_set.clone()))
        .collect();
    let actual: Vec<_> = fixture
        .rows
        .iter()
        .map(|want| {
            let chi = GroupVector::new(3, &want.character);
            let row = rows
                .iter()
                .find(|r| r.character.coords() == &chi)
                .expect("character present");
            let coords = row.character.coords().coords().iter().map(|&c| c as i64).collect();
            (coords, row.a.coeffs().to_vec(), row.delta_components.clone())
        })
        .collect();
    let bytes_match = tangent_triples_json(&expected) == tangent_triples_json(&actual);
    let sum: i64 = rows.iter().map(|r| r.chi_log.unwrap()).sum();
    let h2: i64 = fixture.rows.iter().map(|r| r.h2 as i64).sum();
    let h1 = h2 - sum;
    let ok = bytes_match && rows.len() == 9 && sum == 2 && h1 == 1;
    verdict(
        3,
        "tangent eigensheaf table",
        ok,
        &format!("rows match: {bytes_match}, chi_log sum {sum}, h1 {h1}"),
    );
    assert!(ok);
}

#[test]
fn criterion_04_bicanonical_table() {
    let spec = datasets::kulikov().spec().unwrap();
    let rows = spec.bicanonical_table().unwrap();
    let fixture = datasets::bicanonical_fixture();
    let mut mismatches = Vec::new();
    for want in &fixture.rows {
        let chi = GroupVector::new(3, &want.character);
        let row = rows.iter().find(|r| r.character.coords() == &chi).unwrap();
        if row.class.to_string() != DivisorClass::new(want.class.clone()).to_string() {
            mismatches.push(format!("{:?}", want.character));
        }
    }
    let worked = rows
        .iter()
        .find(|r| r.character.coords() == &GroupVector::new(3, &[2, 2]))
        .map(|r| r.class.to_string());
    let analysis = spec.bicanonical_analysis().unwrap();
    let got: BTreeSet<Vec<u32>> = analysis
        .characters_with_sections
        .iter()
        .map(|c: &Character| c.coords().coords().to_vec())
        .collect();
    let want: BTreeSet<Vec<u32>> = [[0, 0], [0, 2], [2, 2], [2, 0], [2, 1]]
        .iter()
        .map(|v| v.to_vec())
        .collect();
    let inv = spec.invariants().unwrap();
    let ok = mismatches.is_empty()
        && worked.as_deref() == Some("H - E1 - E3")
        && got == want
        && analysis.generates
        && analysis.h0_total == 7
        && inv.chi + inv.k2 == 7;
    verdict(
        4,
        "bicanonical eigensheaf table",
        ok,
        &format!(
            "mismatched rows {mismatches:?}, row (2,2) = {}, generate: {}, h0(2K) = {}",
            worked.unwrap_or_default(),
            analysis.generates,
            analysis.h0_total
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_05_group_identities() {
    // Brute force: image of Φ over all 729 inputs, filtered by Ψ̃ = 0.
    let phi = kulikov::phi();
    let psi_t = kulikov::psi_tilde();
    let mut brute: BTreeSet<GroupVector> = BTreeSet::new();
    for v in GroupVector::all(3, 6) {
        let image = phi.apply(&v).unwrap();
        if psi_t.apply(&image).unwrap().is_zero() {
            brute.insert(image);
        }
    }
    let span: BTreeSet<GroupVector> = kulikov::g2_group().elements().iter().cloned().collect();
    let module: BTreeSet<GroupVector> = kulikov::g2_as_kernel().elements().iter().cloned().collect();
    let rank = matrix_rank_mod_n(&phi).unwrap();
    let xi1 = kulikov::xi(1) == GroupVector::new(3, &[2, 1, 1, 2, 0, 0]);
    let gi = (1..=3).all(|i| kulikov::g(i) == kulikov::xi(i + 1).add(&kulikov::omega(i + 1)));
    let ok = brute == span && module == span && span.len() == 27 && rank == 5 && xi1 && gi;
    verdict(
        5,
        "group identities",
        ok,
        &format!("|G2| = {}, rank = {rank}, xi1 ok: {xi1}, g_i ok: {gi}", span.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_06_fundamental_group_homology() {
    let p = gamma_presentation().unwrap();
    let gamma = abelianization(&p).unwrap();
    let mut sigmas = Vec::new();
    for i in 1..=3 {
        let t = sigma_table(&p, i).unwrap();
        let rs = reidemeister_schreier(&p, &t).unwrap();
        sigmas.push(abelianization(&rs.presentation).unwrap());
    }
    let want_sigma = Abelianization {
        free_rank: 2,
        torsion: vec![3, 3],
    };
    let ok = gamma
        == Abelianization {
            free_rank: 0,
            torsion: vec![3, 3, 3],
        }
        && sigmas.iter().all(|s| s == &want_sigma);
    verdict(
        6,
        "fundamental group homology",
        ok,
        &format!("gamma {gamma:?}, sigma {sigmas:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_07_affine_relations_and_free_action() {
    let suite = relation_suite().unwrap();
    let relations_ok = suite.iter().all(|r| r.holds);
    let census = free_action_census().unwrap();
    let exceptional: Vec<String> = census.exceptional.iter().map(|e| e.element.clone()).collect();
    let expected = vec!["g1 g2 g3".to_string(), "g1^2 g2^2 g3^2".to_string()];
    let stabilizer = census.origin_stabilizer.len();
    let ok = relations_ok
        && census.distinct_mod_lattice
        && census.closed_mod_lattice
        && exceptional == expected
        && stabilizer == 3;
    verdict(
        7,
        "affine relations and free-action census",
        ok,
        &format!(
            "{} relations hold: {relations_ok}, origin stabilizer order {stabilizer}, \
             classes with fixed points: {} {exceptional:?}",
            suite.len(),
            exceptional.len()
        ),
    );
    assert!(relations_ok && stabilizer == 3);
    assert_eq!(exceptional, expected, "nontrivial classes with fixed points on E^3");
}

#[test]
fn criterion_08_ideal_membership() {
    type Q = BigRational;
    let start = Instant::now();
    let target = z::<Q>(3, 5, &g2_generators()).unwrap().element;
    let full: Vec<_> = bloch_subgroup_list()
        .iter()
        .map(|t| z::<Q>(3, 5, t).unwrap().element)
        .collect();
    let reduced: Vec<_> = bloch_families()
        .iter()
        .map(|t| z::<Q>(3, 5, t).unwrap().element)
        .collect();
    let with = ideal_membership(&target, &full).unwrap();
    let without = ideal_membership(&target, &reduced).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let ok = with.member && !without.member && full.len() == 55 && secs < 20.0;
    verdict(
        8,
        "ideal membership",
        ok,
        &format!(
            "55 generators: {} (rank {}), 54 generators: {} (rank {}), {secs:.2}s",
            with.member, with.rank, without.member, without.rank
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_09_quotient_branch_data() {
    use kulikov::{delta, omega, xi};
    let h = Subgroup::span(
        3,
        6,
        &[omega(1), xi(3).scale(2).add(&omega(2)), xi(3).add(&omega(3))],
    )
    .unwrap();
    let base = datasets::maximal_cover().base_spec().unwrap();
    let q = base.quotient_branch_data(&h, &[delta(1), omega(3)]).unwrap();
    let val = |n: &str| q.component(n).unwrap().phi.clone();
    let (d1, w3) = (val("D1"), val("D6"));
    let classes_ok = val("D2") == w3.scale(2)
        && val("D3") == d1.scale(2).add(&w3)
        && val("D4").is_zero()
        && val("D5") == w3.scale(2);
    let spec = q
        .blowup_named("P2", "E2")
        .and_then(|s| s.blowup_named("P3", "E3"))
        .and_then(|s| s.blowup_named("Q56", "E"))
        .unwrap();
    let e2 = spec.component("E2").unwrap().is_ramified();
    let e = spec.component("E").unwrap().is_ramified();
    let ok = classes_ok && !e2 && !e;
    verdict(
        9,
        "quotient branch data",
        ok,
        &format!("induced values ok: {classes_ok}, E2 ramified: {e2}, E ramified: {e}"),
    );
    assert!(ok);
}

fn random_matrix(rng: &mut StdRng) -> Matrix<BigInt> {
    let rows = rng.gen_range(1..=12);
    let cols = rng.gen_range(1..=12);
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect())
        .collect();
    Matrix::from_rows(data, cols)
}

fn is_diagonal_chain(m: &Matrix<BigInt>) -> bool {
    let mut prev: Option<BigInt> = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j && !m[(i, j)].is_zero() {
                return false;
            }
        }
        if i < m.cols() {
            let d = m[(i, i)].clone();
            if d.is_negative() {
                return false;
            }
            if let Some(p) = &prev {
                if p.is_zero() && !d.is_zero() {
                    return false;
                }
                if !p.is_zero() && !(d.clone() % p).is_zero() {
                    return false;
                }
            }
            prev = Some(d);
        }
    }
    true
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = StdRng::seed_from_u64(0x5eed);

    let mut snf_ok = true;
    for _ in 0..200 {
        let m = random_matrix(&mut rng);
        let s = smith_normal_form(&m);
        let d = s.u.mul(&m).mul(&s.v);
        let unimodular = determinant(&s.u).abs().is_one() && determinant(&s.v).abs().is_one();
        let diag_matches = (0..d.rows().min(d.cols())).all(|i| d[(i, i)] == s.diagonal[i]);
        snf_ok &= unimodular && is_diagonal_chain(&d) && diag_matches;
    }

    let mut classes: Vec<DivisorClass> = Vec::new();
    let kul = datasets::kulikov().spec().unwrap();
    for r in kul.tangent_table().unwrap() {
        classes.extend([r.l.clone(), r.a.clone(), r.delta_sum.clone()]);
    }
    for r in kul.bicanonical_table().unwrap() {
        classes.extend([r.l.clone(), r.class.clone(), r.delta_sum.clone()]);
    }
    let y = PicLattice::new(3);
    let serre_ok = classes.iter().all(|c| {
        let (h0, h1, h2) = (y.h0(c).unwrap(), y.h1(c).unwrap(), y.h2(c).unwrap());
        h0 as i64 - h1 as i64 + h2 as i64 == chi_line_bundle(c)
    });

    let zh_ok = bloch_subgroup_list().iter().all(|t| {
        let s = z::<BigRational>(3, 5, t).unwrap();
        let k = BigRational::from_integer(BigInt::from(s.subgroup.order()));
        s.element.mul(&s.element).unwrap() == s.element.scale(&k)
    });

    let mut pairing_ok = true;
    let rand_vec = |rng: &mut StdRng, k: usize| {
        let c: Vec<i64> = (0..k).map(|_| rng.gen_range(0..3)).collect();
        GroupVector::new(3, &c)
    };
    for _ in 0..500 {
        let k = rng.gen_range(1..=6);
        let (a, b) = (rand_vec(&mut rng, k), rand_vec(&mut rng, k));
        let (g, h) = (rand_vec(&mut rng, k), rand_vec(&mut rng, k));
        let chi = |v: &GroupVector| Character::new(v.clone());
        let lhs = chi(&a.add(&b)).pair(&g);
        let rhs = (chi(&a).pair(&g) + chi(&b).pair(&g)) % 3;
        let lhs2 = chi(&a).pair(&g.add(&h));
        let rhs2 = (chi(&a).pair(&g) + chi(&a).pair(&h)) % 3;
        pairing_ok &= lhs == rhs && lhs2 == rhs2;
    }

    let ok = snf_ok && serre_ok && zh_ok && pairing_ok;
    verdict(
        10,
        "property suites",
        ok,
        &format!(
            "SNF x200: {snf_ok}, Serre duality on {} classes: {serre_ok}, z(H)^2 = 27 z(H) x55: {zh_ok}, \
             pairing x500: {pairing_ok}",
            classes.len()
        ),
    );
    assert!(ok);
}
