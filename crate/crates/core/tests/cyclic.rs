use hopfcyc::crossed::{adjoint, coadjoint, modular_pair_module, one_dimensional, sign, trivial, CrossedModule};
use hopfcyc::cyclic::{
  build_aux_cyclic, build_cyclic, build_cyclic_unchecked, homology_of, sbi_check, tor_oracle, CyclicError, HopfCyclicSpec, Method,
  Operators,
};
use hopfcyc::linalg::{SparseMatrix, SparseVec};
use hopfcyc::{Field, Fp, HopfAlgebra, Q};

fn alg(name: &str) -> HopfAlgebra<Q> { HopfAlgebra::builtin(name).unwrap() }

#[test]
fn aux_object_values() {
  for name in ["z2", "z3"] {
    let z = build_aux_cyclic(&alg(name), 5);
    assert!(z.identity_report().all_passed(), "{name}");
    assert_eq!(z.hochschild(0..=4).unwrap(), vec![1, 0, 0, 0, 0]);
    assert_eq!(z.hc_connes(0..=4).unwrap(), vec![1, 0, 1, 0, 1]);
    assert_eq!(z.hc_bicomplex(0..=4).unwrap(), vec![1, 0, 1, 0, 1]);
    assert_eq!(z.b_prime_homology(0..=4).unwrap(), vec![0; 5]);
  }
}

#[test]
fn aux_rotation_and_extra_degeneracy() {
  let h = alg("z2");
  let z = build_aux_cyclic(&h, 3);
  // t_1(g⊗h) = (h, g) on basis index a·2 + b.
  for a in 0..2 {
    for b in 0..2 {
      assert_eq!(z.tau(1).col(a * 2 + b), &SparseVec::unit(b * 2 + a));
    }
  }
  // d_{n+1}(1⊗x) = x − (1⊗d_n x).
  for n in 1..3 {
    let dn = z.b(n);
    let dn1 = z.b(n + 1);
    let d = z.dim(n);
    for x in 0..d {
      let lhs = dn1.col(x).clone();
      let shifted = SparseVec::from_pairs(dn.col(x).iter().map(|(i, c)| (i, c.clone())).collect());
      let rhs = SparseVec::unit(x).sub(&shifted);
      assert_eq!(lhs, rhs, "n = {n}, x = {x}");
    }
  }
}

#[test]
fn carrier_dimensions_and_tau0() {
  let h = alg("s3");
  let m = adjoint(&h);
  let z = build_cyclic(&m, 2).unwrap();
  assert_eq!(z.dims(), &[6, 36, 216]);
  assert_eq!(z.tau(0), &SparseMatrix::identity(6));
}

#[test]
fn s3_adjoint_identity_suite_to_degree_4() {
  let h = alg("s3");
  let z = build_cyclic(&adjoint(&h), 4).unwrap();
  let rep = z.identity_report();
  assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn non_modular_sign_is_refused_and_fails_suite() {
  let h = alg("z2");
  let g = SparseVec::unit(1);
  let m = one_dimensional(&h, &[Q::from_i64(1), Q::from_i64(-1)], &g).unwrap();
  assert!(build_cyclic(&m, 3).is_err());
  let z = build_cyclic_unchecked(&m, 3, Operators::All);
  assert!(!z.identity_report().all_passed());
  let wd = HopfCyclicSpec::new(&m, 3).well_definedness(3, 64);
  let order_fails = !z.identity_report().passed("cyclic_order");
  assert!(order_fails || !wd.all_passed());
}

#[test]
fn z2_adjoint_homology() {
  let m = adjoint(&alg("z2"));
  let r = homology_of(&m, 4, true, true, Method::Both).unwrap();
  assert_eq!(r.hh, Some(vec![2, 0, 0, 0, 0]));
  assert_eq!(r.hc, Some(vec![2, 0, 2, 0, 2]));
  assert_eq!(r.agree, Some(true));
}

#[test]
fn z3_trivial_cyclic_homology() {
  let m = trivial(&alg("z3"));
  let r = homology_of(&m, 3, true, true, Method::Both).unwrap();
  assert_eq!(r.hc, Some(vec![1, 0, 1, 0]));
  assert_eq!(r.agree, Some(true));
}

#[test]
fn hochschild_vanishes_for_semisimple_group_algebras() {
  for name in ["z2", "z3", "s3"] {
    let h = alg(name);
    for m in [adjoint(&h), coadjoint(&h), trivial(&h)] {
      let hh = homology_of(&m, 3, true, false, Method::Lambda).unwrap().hh.unwrap();
      assert!(hh[1..].iter().all(|&v| v == 0), "{name} {}: {hh:?}", m.name());
      assert_eq!(hh[0], tor_oracle(&h, m.action_matrices(), 0..=0).unwrap()[0]);
    }
  }
}

#[test]
fn oracle_equivalence_small() {
  for (name, m) in [("z2", adjoint(&alg("z2"))), ("z4", adjoint(&alg("z4"))), ("z2sign", sign(&alg("z2")).unwrap())] {
    let hh = homology_of(&m, 4, true, false, Method::Lambda).unwrap().hh.unwrap();
    assert_eq!(hh, tor_oracle(m.base(), m.action_matrices(), 0..=4).unwrap(), "{name}");
  }
}

#[test]
fn sweedler_modular_pair_object() {
  let h = HopfAlgebra::<Q>::sweedler();
  let g = SparseVec::unit(1);
  let (m, rep) = modular_pair_module(&h, &g, h.counit_vec()).unwrap();
  assert!(rep.sayd && rep.involution);
  let z = build_cyclic(&m, 3).unwrap();
  assert!(z.identity_report().all_passed());
  let r = z.homology(2, true, true, Method::Both).unwrap();
  assert_eq!(r.agree, Some(true));
  assert!(sbi_check(r.hh.as_ref().unwrap(), r.hc.as_ref().unwrap()).unwrap().all_passed());
}

#[test]
fn positive_characteristic_refuses_cyclic_homology() {
  let h = HopfAlgebra::<Fp<2>>::builtin("z2").unwrap();
  let m: CrossedModule<Fp<2>> = trivial(&h);
  let z = build_cyclic(&m, 3).unwrap();
  assert!(matches!(z.hc_connes(0..=2), Err(CyclicError::PositiveCharacteristic(2))));
  assert_eq!(z.hochschild(0..=2).unwrap(), vec![1, 1, 1]);
}

#[test]
fn truncation_is_reported() {
  let z = build_aux_cyclic(&alg("z2"), 3);
  assert!(z.hochschild(0..=3).is_err());
  assert!(z.hc_bicomplex(0..=3).is_err());
}
