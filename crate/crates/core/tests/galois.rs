use hopfcyc::crossed::adjoint;
use hopfcyc::cyclic::{burghelea_finite, sbi_check};
use hopfcyc::galois::{
  burghelea_graded, galois_check, hc_both_ways, lambda_iso, relative_cyclic, separability_element, separable_base_change, trace_map,
  Algebra, Bimodule, ComoduleAlgebra, GaloisError, GaloisExtension,
};
use hopfcyc::hopf::permutation_sign;
use hopfcyc::linalg::{SparseMatrix, SparseVec, Subspace};
use hopfcyc::cyclic::Operators;
use hopfcyc::{Field, FiniteGroup, HopfAlgebra, Q};

fn s3_by_sign() -> ComoduleAlgebra<Q> {
  let g = FiniteGroup::symmetric3();
  let phi: Vec<usize> = g.elements.iter().map(|l| usize::from(permutation_sign(l) < 0)).collect();
  ComoduleAlgebra::group_algebra_graded(&g, &FiniteGroup::cyclic(2), &phi).unwrap()
}

fn s3_over_a3() -> GaloisExtension<Q> { galois_check(&s3_by_sign()).unwrap() }

fn twisted_klein() -> ComoduleAlgebra<Q> {
  let g = FiniteGroup::builtin("z2xz2").unwrap();
  ComoduleAlgebra::twisted_group_algebra(&g, |x, y| if (x % 2) * (y / 2) == 1 { -Q::from_i64(1) } else { Q::from_i64(1) }).unwrap()
}

fn span_units(d: usize, idx: &[usize]) -> Subspace<Q> {
  Subspace::span(d, &idx.iter().map(|&i| SparseVec::unit(i)).collect::<Vec<_>>())
}

#[test]
fn s3_coinvariants_are_a3() {
  let ca = s3_by_sign();
  let b = ca.coinvariants();
  assert_eq!(b.dim(), 3);
  let g = FiniteGroup::symmetric3();
  for (i, l) in g.elements.iter().enumerate() {
    assert_eq!(b.contains(&SparseVec::unit(i)), permutation_sign(l) > 0, "{l}");
  }
  assert_eq!(ca.is_strongly_graded(), Some(true));
}

#[test]
fn s3_over_a3_relations() {
  let ext = s3_over_a3();
  assert_eq!(ext.aa.dim(), 12);
  let rep = ext.relations_report();
  for name in ["tau1", "tau2", "tau3", "tau4", "tau5", "kappa_unit", "kappa_antimorphism", "ab_modular"] {
    assert!(rep.passed(name), "{name}: {:?}", rep.get(name));
  }
  let beta = ext.beta_n_report(2);
  assert!(beta.all_passed(), "{:?}", beta.failures().collect::<Vec<_>>());
}

#[test]
fn group_algebra_kappa_is_inverse_split() {
  let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
  let g = h.group().unwrap().clone();
  let ext = galois_check(&ComoduleAlgebra::regular(&h)).unwrap();
  for x in 0..6 {
    let want = ext.aa.project(&SparseVec::unit(g.inverse(x) * 6 + x));
    assert_eq!(ext.kappa[x], want);
  }
}

#[test]
fn ab_crossed_module_dimensions() {
  let ext = s3_over_a3();
  let ab = ext.ab_crossed_module().unwrap();
  assert_eq!(ab.module.dim(), 4);
  assert!(ab.module.verify_all().all_passed());
  let degrees = ext.ca.degrees.clone().unwrap();
  let by_degree: Vec<usize> =
    (0..2).map(|x| ab.quotient.representatives().iter().filter(|&&r| degrees[r] == x).count()).collect();
  assert_eq!(by_degree, vec![3, 1]);

  // A = H, B = k: A_B is the adjoint crossed module.
  let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
  let reg = galois_check(&ComoduleAlgebra::regular(&h)).unwrap().ab_crossed_module().unwrap();
  let ad = adjoint(&h);
  assert_eq!(reg.module.action_matrices(), ad.action_matrices());
  assert_eq!(reg.module.coaction_matrix(), ad.coaction_matrix());
}

#[test]
fn um_actions_over_trivial_base() {
  let h = HopfAlgebra::<Q>::builtin("z3").unwrap();
  let ext = galois_check(&ComoduleAlgebra::regular(&h)).unwrap();
  let m = Bimodule::regular(ext.algebra());
  let um = ext.um_actions(&m);
  assert!(um.report.all_passed());
  assert_eq!(um.coinvariants.dim(), 3);
  assert_eq!(um.invariants.dim(), 3);
  let id = SparseMatrix::identity(3);
  assert!(ext.um_naturality(&m, &m, &id).unwrap().all_passed());
}

#[test]
fn relative_dimensions_and_rotation() {
  let ext = s3_over_a3();
  let a = ext.algebra();
  let rel = relative_cyclic(a, &ext.b, &Bimodule::regular(a), 3, Operators::All).unwrap();
  assert_eq!(rel.dims(), &[4, 8, 16, 32]);
  assert!(rel.object.identity_report().all_passed());
  assert_eq!(rel.object.tau(2).pow(3), SparseMatrix::identity(16));

  // Over B = k the relative object is the cyclic object of the algebra.
  let k = span_units(6, &[0]);
  let plain = relative_cyclic(a, &k, &Bimodule::regular(a), 2, Operators::All).unwrap();
  assert_eq!(plain.dims(), &[6, 36, 216]);
}

#[test]
fn lambda_suite_s3_over_a3() {
  let ext = s3_over_a3();
  let iso = lambda_iso(&ext, &Bimodule::regular(ext.algebra()), 3).unwrap();
  assert!(iso.report.all_passed());
  assert_eq!(iso.lambda[0].shape(), (4, 4));
  let cmp = hc_both_ways(&ext, 3).unwrap();
  assert!(cmp.agree(), "{cmp:?}");
  assert_eq!(cmp.get("HC").unwrap().left, vec![3, 0, 3, 0]);
  let hh = &cmp.get("HH").unwrap().left;
  assert!(sbi_check(hh, &cmp.get("HC").unwrap().left).unwrap().all_passed());
}

#[test]
fn lambda_for_a_non_regular_bimodule() {
  // M = A ⊕ A with A acting diagonally: λ is still a simplicial isomorphism.
  let ext = s3_over_a3();
  let a = ext.algebra();
  let reg = Bimodule::regular(a);
  let dbl = |ms: &[SparseMatrix<Q>]| ms.iter().map(|x| SparseMatrix::block_diag(&[x.clone(), x.clone()])).collect::<Vec<_>>();
  let labels = (0..12).map(|i| format!("m{i}")).collect();
  let m = Bimodule::new(a, "A+A", labels, dbl(&reg.left), dbl(&reg.right)).unwrap();
  let iso = lambda_iso(&ext, &m, 2).unwrap();
  assert!(iso.report.passed("commutes_with_faces"));
  assert!(iso.report.passed("commutes_with_degeneracies"));
  assert_eq!(iso.target.dim(), 8);
}

#[test]
fn separable_base_change_z4() {
  let h = HopfAlgebra::<Q>::builtin("z4").unwrap();
  let a = Algebra::of_hopf(&h);
  let b = span_units(4, &[0, 2]);
  let k = span_units(4, &[0]);
  assert!(separability_element(&a, &b, &k).is_ok());
  let rep = separable_base_change(&a, &b, &k, &Bimodule::regular(&a), 3).unwrap();
  assert!(rep.is_quasi_iso(), "{rep:?}");
  assert_eq!(rep.hh_over_c, rep.hh_over_b);
  assert_eq!(rep.hc_over_c, rep.hc_over_b);
  assert_eq!(rep.hc_over_c, Some(vec![4, 0, 4, 0]));
  assert!(rep.sbi_passed);

  // B = C gives the identity map.
  let same = separable_base_change(&a, &b, &b, &Bimodule::regular(&a), 2).unwrap();
  assert!(same.is_quasi_iso());

  // k×k over itself.
  let kk = Algebra::<Q>::diagonal(2);
  let whole = span_units(2, &[0, 1]);
  assert!(separable_base_change(&kk, &whole, &whole, &Bimodule::regular(&kk), 2).unwrap().is_quasi_iso());
}

#[test]
fn non_separable_base_is_refused() {
  let h = HopfAlgebra::<hopfcyc::Fp<2>>::builtin("z2").unwrap();
  let a = Algebra::of_hopf(&h);
  let k = Subspace::span(2, &[SparseVec::unit(0)]);
  let whole = Subspace::span(2, &[SparseVec::unit(0), SparseVec::unit(1)]);
  assert!(matches!(separability_element(&a, &whole, &k), Err(GaloisError::NotSeparable)));
}

#[test]
fn twisted_klein_is_galois() {
  let ca = twisted_klein();
  let ext = galois_check(&ca).unwrap();
  assert_eq!(ext.beta.shape(), (16, 16));
  assert!(ext.relations_report().all_passed());
  let gb = burghelea_graded(&ext, 3).unwrap();
  assert!(gb.agree(), "{gb:?}");
  assert_eq!(gb.relative, vec![1, 0, 1, 0]);
}

#[test]
fn graded_burghelea_s3() {
  let ext = s3_over_a3();
  let gb = burghelea_graded(&ext, 3).unwrap();
  assert!(gb.agree());
  assert_eq!(gb.components, vec![3, 1]);
  assert_eq!(gb.relative, vec![3, 0, 3, 0]);
  let identity = &gb.burghelea.classes[0];
  assert_eq!(identity.component_dim, 3);
  assert_eq!(identity.group_homology[0], 2);
}

#[test]
fn graded_burghelea_specializes_to_group_algebras() {
  let h = HopfAlgebra::<Q>::builtin("z3").unwrap();
  let ext = galois_check(&ComoduleAlgebra::regular(&h)).unwrap();
  let gb = burghelea_graded(&ext, 3).unwrap();
  assert_eq!(gb.burghelea, burghelea_finite(&adjoint(&h), 3).unwrap());
  assert!(gb.agree());
}

#[test]
fn trace_map_identity_on_group_algebra() {
  let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
  let ca = ComoduleAlgebra::regular(&h);
  let m = adjoint(&h);
  let t = trace_map(&ca, &m, &SparseMatrix::identity(6), 2).unwrap();
  assert!(t.report.all_passed(), "{:?}", t.report.failures().collect::<Vec<_>>());

  let zero = trace_map(&ca, &m, &SparseMatrix::zero(6, 6), 2).unwrap();
  assert!(zero.report.all_passed());
  assert!(zero.gamma.iter().all(SparseMatrix::is_zero));
}

#[test]
fn trace_map_is_lambda_for_galois_over_k() {
  let h = HopfAlgebra::<Q>::builtin("z3").unwrap();
  let ca = ComoduleAlgebra::regular(&h);
  let ext = galois_check(&ca).unwrap();
  let ab = ext.ab_crossed_module().unwrap();
  let t = trace_map(&ca, &ab.module, &ab.quotient.projection_matrix(), 3).unwrap();
  let iso = lambda_iso(&ext, &Bimodule::regular(ext.algebra()), 3).unwrap();
  assert_eq!(t.gamma, iso.lambda);
}

#[test]
fn invalid_trace_is_refused() {
  let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
  let ca = ComoduleAlgebra::regular(&h);
  let m = adjoint(&h);
  let swap = SparseMatrix::from_fn(6, 6, |i| SparseVec::unit((i + 1) % 6));
  assert!(matches!(trace_map(&ca, &m, &swap, 1), Err(GaloisError::TraceAxiom(_))));
}
