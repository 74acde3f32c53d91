use kulikov_core::presentation::{abelianization, gamma_presentation, Presentation, Relator};
use kulikov_core::report::{self, HomologyTarget, Options, TableKind};
use kulikov_core::datasets;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn permute_generators(p: &Presentation, perm: &[usize]) -> Presentation {
    let mut names = vec![String::new(); perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        names[new] = p.generators()[old].clone();
    }
    let relators: Vec<Relator> = p
        .relators()
        .iter()
        .map(|r| r.iter().map(|&(g, e)| (perm[g], e)).collect())
        .collect();
    Presentation::new(names, relators).unwrap()
}

#[test]
fn abelianization_ignores_relator_and_generator_order() {
    let p = gamma_presentation().unwrap();
    let base = abelianization(&p).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let mut perm: Vec<usize> = (0..p.generators().len()).collect();
        perm.shuffle(&mut rng);
        let q = permute_generators(&p, &perm);
        let mut relators = q.relators().to_vec();
        relators.shuffle(&mut rng);
        let q = Presentation::new(q.generators().to_vec(), relators).unwrap();
        assert_eq!(abelianization(&q).unwrap(), base);
    }
}

#[test]
fn reports_are_deterministic() {
    let runs = |f: &dyn Fn() -> report::RunReport| (f().results_json(), f().results_json());
    let (a, b) = runs(&|| report::cmd_homology(HomologyTarget::Sigma(2), Options::default()).unwrap());
    assert_eq!(a, b);
    let (a, b) = runs(&|| {
        report::cmd_tables("kulikov", datasets::KULIKOV, TableKind::Bicanonical, None, Options::default())
            .unwrap()
    });
    assert_eq!(a, b);
    let (a, b) = runs(&|| report::cmd_free_action(Options::default()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn inputs_are_hashed() {
    let r = report::cmd_invariants("kulikov", datasets::KULIKOV, Options::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let digest = v["inputs"]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
}
