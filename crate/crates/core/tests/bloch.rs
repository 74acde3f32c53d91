use std::collections::BTreeSet;
use std::time::Instant;

use kulikov_core::abelian::{characters_of, GroupVector, Subgroup};
use kulikov_core::group_algebra::*;
use kulikov_core::F1000003;
use num_rational::BigRational;

/// Characters of G¹ trivial on the subgroup, as coordinate vectors.
fn annihilator(h: &Subgroup) -> BTreeSet<Vec<u32>> {
    characters_of(&g1_group())
        .into_iter()
        .filter(|c| h.basis().iter().all(|b| c.pair(b) == 0))
        .map(|c| c.coords().coords().to_vec())
        .collect()
}

/// After a Fourier transform z(H) is a multiple of the indicator of H^⊥, so
/// the ideal is spanned by the characters in the union of the H^⊥.
fn fourier_oracle(target: &Subgroup, list: &[[GroupVector; 3]]) -> (bool, usize) {
    let mut union = BTreeSet::new();
    for t in list {
        union.extend(annihilator(&Subgroup::span(3, 5, t).unwrap()));
    }
    let member = annihilator(target).is_subset(&union);
    (member, union.len())
}

fn ideal<F>(list: &[[GroupVector; 3]]) -> (GroupAlgebraElement<F>, Vec<GroupAlgebraElement<F>>)
where
    F: kulikov_core::scalar::Field,
{
    let target = z::<F>(3, 5, &g2_generators()).unwrap().element;
    let gens = list.iter().map(|t| z::<F>(3, 5, t).unwrap().element).collect();
    (target, gens)
}

#[test]
fn full_list_contains_z_g2() {
    let list = bloch_subgroup_list();
    let start = Instant::now();
    let (target, gens) = ideal::<BigRational>(&list);
    let m = ideal_membership(&target, &gens).unwrap();
    assert!(start.elapsed().as_secs_f64() < 20.0);
    let g2 = Subgroup::span(3, 5, &g2_generators()).unwrap();
    let (oracle_member, oracle_rank) = fourier_oracle(&g2, &list);
    assert!(m.member);
    assert_eq!(m.member, oracle_member);
    assert_eq!(m.rank, oracle_rank);
    assert_eq!(m.generators, 55);
}

#[test]
fn extra_triple_is_needed() {
    let list = bloch_families();
    let (target, gens) = ideal::<BigRational>(&list);
    let m = ideal_membership(&target, &gens).unwrap();
    let g2 = Subgroup::span(3, 5, &g2_generators()).unwrap();
    let (oracle_member, oracle_rank) = fourier_oracle(&g2, &list);
    assert!(!m.member);
    assert_eq!(m.member, oracle_member);
    assert_eq!(m.rank, oracle_rank);
}

#[test]
fn prime_field_agrees() {
    for list in [bloch_subgroup_list(), bloch_families()] {
        let (tq, gq) = ideal::<BigRational>(&list);
        let (tp, gp) = ideal::<F1000003>(&list);
        let a = ideal_membership(&tq, &gq).unwrap();
        let b = ideal_membership(&tp, &gp).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn adding_generators_keeps_membership() {
    let list = bloch_subgroup_list();
    let (target, mut gens) = ideal::<BigRational>(&list);
    assert!(ideal_membership(&target, &gens).unwrap().member);
    gens.push(z::<BigRational>(3, 5, &[xi(1)]).unwrap().element);
    assert!(ideal_membership(&target, &gens).unwrap().member);
}

#[test]
fn products_of_subgroup_sums() {
    let list = bloch_subgroup_list();
    for pair in list.windows(2).step_by(5) {
        let a = z::<BigRational>(3, 5, &pair[0]).unwrap();
        let b = z::<BigRational>(3, 5, &pair[1]).unwrap();
        let meet = a.subgroup.intersect(&b.subgroup).unwrap();
        let join = a.subgroup.join(&b.subgroup).unwrap();
        let zj = z::<BigRational>(3, 5, join.basis()).unwrap().element;
        let k = BigRational::from_integer((meet.order() as i64).into());
        assert_eq!(a.element.mul(&b.element).unwrap(), zj.scale(&k));
    }
}
