use kulikov_core::abelian::{GroupVector, Subgroup};
use kulikov_core::cover::{blowup_k2_drop, CoverSpec};
use kulikov_core::datasets;
use kulikov_core::kulikov::{delta, g2_group, omega, xi};

fn worked_example_subgroup() -> Subgroup {
    let gens = [
        omega(1),
        xi(3).scale(2).add(&omega(2)),
        xi(3).add(&omega(3)),
    ];
    Subgroup::span(3, 6, &gens).unwrap()
}

fn phi_of(spec: &CoverSpec, name: &str) -> GroupVector {
    spec.component(name).unwrap().phi.clone()
}

#[test]
fn worked_example_induced_values() {
    let base = datasets::maximal_cover().base_spec().unwrap();
    let q = base
        .quotient_branch_data(&worked_example_subgroup(), &[delta(1), omega(3)])
        .unwrap();
    assert_eq!(q.dim(), 2);
    assert_eq!(q.group().order(), 9);
    let d1 = phi_of(&q, "D1");
    let w3 = phi_of(&q, "D6");
    assert_eq!(d1, GroupVector::new(3, &[1, 0]));
    assert_eq!(w3, GroupVector::new(3, &[0, 1]));
    assert_eq!(phi_of(&q, "D2"), w3.scale(2));
    assert_eq!(phi_of(&q, "D3"), d1.scale(2).add(&w3));
    assert!(phi_of(&q, "D4").is_zero());
    assert!(!q.component("D4").unwrap().is_ramified());
    assert_eq!(phi_of(&q, "D5"), w3.scale(2));
}

#[test]
fn worked_example_blowups() {
    let base = datasets::maximal_cover().base_spec().unwrap();
    let q = base
        .quotient_branch_data(&worked_example_subgroup(), &[delta(1), omega(3)])
        .unwrap();
    let singular = q.singular_points().unwrap();
    for p in ["P2", "P3", "Q56"] {
        assert!(singular.contains(&p.to_string()), "{p} in {singular:?}");
    }
    assert!(!singular.contains(&"P1".to_string()));

    let mut spec = q.clone();
    for (p, e) in [("P2", "E2"), ("P3", "E3"), ("Q56", "E")] {
        let drop = blowup_k2_drop(&spec, p).unwrap();
        let next = spec.blowup_named(p, e).unwrap();
        assert_eq!(spec.ramification_k2() - next.ramification_k2(), drop);
        spec = next;
    }
    assert!(!spec.component("E2").unwrap().is_ramified());
    assert!(!spec.component("E").unwrap().is_ramified());
    assert!(spec.component("E3").unwrap().is_ramified());
}

#[test]
fn quotient_by_g2_reproduces_psi_kernels() {
    let maximal = datasets::maximal_cover().spec().unwrap();
    let q = maximal.quotient_branch_data(&g2_group(), &[]).unwrap();
    let kulikov = datasets::kulikov().spec().unwrap();
    assert_eq!(q.group().order(), 9);
    let names: Vec<String> = kulikov.components().iter().map(|c| c.name.clone()).collect();
    let a: Vec<GroupVector> = names.iter().map(|n| phi_of(&q, n)).collect();
    let b: Vec<GroupVector> = names.iter().map(|n| phi_of(&kulikov, n)).collect();
    for c in GroupVector::all(3, names.len()) {
        let combo = |vals: &[GroupVector]| {
            vals.iter()
                .zip(c.coords())
                .fold(GroupVector::zero(3, vals[0].dim()), |acc, (v, &k)| {
                    acc.add(&v.scale(k as i64))
                })
        };
        assert_eq!(combo(&a).is_zero(), combo(&b).is_zero(), "{c}");
    }
}

#[test]
fn worked_example_singular_points() {
    let q = datasets::maximal_cover()
        .base_spec()
        .unwrap()
        .quotient_branch_data(&worked_example_subgroup(), &[delta(1), omega(3)])
        .unwrap();
    let singular = q.singular_points().unwrap();
    // D2 and D5 have the same image, so Q25 fails the direct-sum test too.
    assert_eq!(phi_of(&q, "D2"), phi_of(&q, "D5"));
    assert_eq!(singular, ["P2", "P3", "Q25", "Q56"]);
}
