use hopfcyc::crossed::{adjoint, coadjoint, trivial};
use hopfcyc::cyclic::{homology_of, sbi_check, Method};
use hopfcyc::{FiniteGroup, HopfAlgebra, Q};
use proptest::prelude::*;

fn group() -> impl Strategy<Value = FiniteGroup> {
  prop_oneof![
    (1usize..6).prop_map(FiniteGroup::cyclic),
    ((2usize..4), (2usize..4)).prop_map(|(a, b)| FiniteGroup::cyclic(a).product(&FiniteGroup::cyclic(b))),
    Just(FiniteGroup::symmetric3()),
    Just(FiniteGroup::dihedral4()),
  ]
}

fn abelian_by_table(g: &FiniteGroup) -> bool { (0..g.order()).all(|a| (0..g.order()).all(|b| g.table[a][b] == g.table[b][a])) }

#[test]
fn builtin_hopf_algebras_verify() {
  for name in ["z2", "z3", "z4", "z2xz2", "s3", "d4", "sweedler"] {
    let h = HopfAlgebra::<Q>::builtin(name).unwrap();
    let rep = h.verify();
    assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
  }
  assert!(HopfAlgebra::<Q>::builtin("z5").is_none());
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(24))]

  #[test]
  fn group_algebras_satisfy_the_axioms(g in group()) {
    let h = HopfAlgebra::<Q>::group_algebra(&g);
    prop_assert!(h.verify().all_passed());
    prop_assert_eq!(h.is_cocommutative(), true);
    prop_assert_eq!(h.is_commutative(), abelian_by_table(&g));
    for m in [adjoint(&h), coadjoint(&h), trivial(&h)] {
      prop_assert!(m.verify_all().all_passed(), "{}", m.name());
    }
  }

  #[test]
  fn cyclic_groups_have_n_classes_in_even_degrees(n in 1usize..6) {
    let h = HopfAlgebra::<Q>::group_algebra(&FiniteGroup::cyclic(n));
    let rep = homology_of(&adjoint(&h), 3, true, true, Method::Lambda).unwrap();
    let (hh, hc) = (rep.hh.unwrap(), rep.hc.unwrap());
    prop_assert_eq!(&hc, &vec![n, 0, n, 0]);
    prop_assert_eq!(&hh, &vec![n, 0, 0, 0]);
    prop_assert!(sbi_check(&hh, &hc).unwrap().all_passed());
  }
}
