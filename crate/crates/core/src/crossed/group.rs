use super::constructors::induce_with_quotient;
use super::{CrossedError, CrossedModule};
use crate::field::Field;
use crate::hopf::HopfSubalgebra;
use crate::linalg::{rank, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// One summand `Ind_{kG_g}^{kG} M_g` of the group-algebra decomposition.
#[derive(Clone, Debug)]
pub struct GroupSummand<F> {
  /// Class representative `g ∈ t(G)`.
  pub representative: usize,
  /// `M_g` as a crossed module over `kG_g`.
  pub piece:          CrossedModule<F>,
  /// `kG_g ⊆ kG`.
  pub centralizer:    HopfSubalgebra<F>,
  /// `Ind_{kG_g}^{kG} M_g`.
  pub induced:        CrossedModule<F>,
}

/// `M ≅ ⊕_{g∈t(G)} Ind_{kG_g}^{kG} M_g` with all the data needed to check it.
#[derive(Clone, Debug)]
pub struct GroupDecomposition<F> {
  /// `M_x = {m : ρ(m) = m⊗x}` for every `x ∈ G`.
  pub components:  Vec<Subspace<F>>,
  pub summands:    Vec<GroupSummand<F>>,
  /// Direct sum of the induced summands.
  pub sum:         CrossedModule<F>,
  /// `⊕ Ind M_g → M`, `x⊗m ↦ xm`.
  pub iso:         SparseMatrix<F>,
  pub report:      Report,
}

impl<F: Field> GroupDecomposition<F> {
  pub fn component_dims(&self) -> Vec<usize> { self.components.iter().map(|s| s.dim()).collect() }

  /// Dimensions of `M_g` for the class representatives, in class order.
  pub fn summand_dims(&self) -> Vec<usize> { self.summands.iter().map(|s| s.piece.dim()).collect() }

  /// `dim M_x` summed over each conjugacy class.
  pub fn class_dims(&self) -> Vec<usize> {
    self.summands.iter().map(|s| s.induced.dim()).collect()
  }
}

/// Splits a crossed module over `kG` along the conjugacy classes of `G`.
pub fn decompose_group_case<F: Field>(m: &CrossedModule<F>) -> Result<GroupDecomposition<F>, CrossedError> {
  let h = m.base();
  let g = h.group().ok_or(CrossedError::NotGroupAlgebra)?.clone();
  let n = m.dim();
  let d = h.dim();
  let mut report = Report::new();

  // Projections onto M_x read off from ρ.
  let mut proj = vec![Vec::new(); d];
  for j in 0..n {
    for (m0, x, c) in m.coact_basis(j) {
      proj[x].push((m0, j, c.clone()));
    }
  }
  let proj: Vec<SparseMatrix<F>> = proj.into_iter().map(|t| SparseMatrix::from_triplets(n, n, t)).collect();
  let components: Vec<Subspace<F>> = proj.iter().map(Subspace::column_space).collect();
  let total: usize = components.iter().map(|s| s.dim()).sum();
  if total != n {
    return Err(CrossedError::Degenerate(format!("components M_x have total dimension {total}, expected {n}")));
  }

  let shift = (0..d).flat_map(|a| (0..d).map(move |x| (a, x))).find_map(|(a, x)| {
    let target = &components[g.conjugate(a, x)];
    components[x].basis().iter().any(|v| !target.contains(&m.action_matrix(a).apply(v))).then(|| format!("{}·M_{}", g.elements[a], g.elements[x]))
  });
  report.push(Check::from_witness("conjugation_shifts_components", shift));

  let modular = m.verify_modular().all_passed();
  let fixed = (0..d).find(|&x| components[x].basis().iter().any(|v| m.action_matrix(x).apply(v) != *v));
  report.push(Check::from_witness(
    "modular_iff_components_fixed",
    (modular != fixed.is_none()).then(|| format!("modular = {modular}, first non-fixed component {:?}", fixed.map(|x| &g.elements[x]))),
  ));

  let mut summands = Vec::new();
  for class in g.conjugacy_data() {
    let rep = class.representative;
    let mut cent = class.centralizer.clone();
    cent.sort();
    let k = HopfSubalgebra::subgroup(h, &cent)?;
    let comp = &components[rep];
    let basis = comp.basis().to_vec();
    let kd = cent.len();
    let rep_in_k = cent.iter().position(|&e| e == rep).expect("x ∈ G_x");
    let labels: Vec<String> = (0..basis.len()).map(|i| format!("{}_{i}", g.elements[rep])).collect();
    let act = |t: usize, i: usize| -> SparseVec<F> {
      comp.coordinates(&m.action_matrix(cent[t]).apply(&basis[i])).expect("G_x preserves M_x")
    };
    let piece = CrossedModule::from_fns(k.algebra(), format!("M_{}", g.elements[rep]), labels, act, |i| SparseVec::unit(i * kd + rep_in_k))?;
    let (induced, quo) = induce_with_quotient(&k, &piece)?;
    let expected = class.class.len() * piece.dim();
    report.push(Check::from_witness(
      format!("induced_dim[{}]", g.elements[rep]),
      (induced.dim() != expected).then(|| format!("{} ≠ |[x]|·dim M_x = {expected}", induced.dim())),
    ));
    summands.push((GroupSummand { representative: rep, piece, centralizer: k, induced }, quo));
  }

  let parts: Vec<CrossedModule<F>> = summands.iter().map(|(s, _)| s.induced.clone()).collect();
  let sum = CrossedModule::direct_sum(&parts, "⊕Ind")?;
  let mut cols = Vec::with_capacity(sum.dim());
  for (s, quo) in &summands {
    let dn = s.piece.dim();
    let basis = components[s.representative].basis();
    for &r in quo.representatives() {
      let (a, j) = (r / dn, r % dn);
      cols.push(m.action_matrix(a).apply(&basis[j]));
    }
  }
  let iso = SparseMatrix::from_columns(n, cols);
  report.push(Check::from_witness("iso_bijective", (iso.cols() != n || rank(&iso) != n).then(|| format!("rank {} of {}x{}", rank(&iso), n, iso.cols()))));
  report.push(Check::from_witness("iso_is_morphism", (!sum.is_morphism(m, &iso)).then(|| "not H-linear and colinear".to_string())));
  Ok(GroupDecomposition { components, summands: summands.into_iter().map(|(s, _)| s).collect(), sum, iso, report })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::crossed::{adjoint, trivial};
  use crate::field::Q;
  use crate::hopf::HopfAlgebra;

  #[test]
  fn adjoint_s3_splits_by_class() {
    let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
    let dec = decompose_group_case(&adjoint(&h)).unwrap();
    assert!(dec.report.all_passed(), "{:?}", dec.report);
    let mut dims = dec.class_dims();
    dims.sort();
    assert_eq!(dims, vec![1, 2, 3]);
    assert!(dec.summand_dims().iter().all(|&d| d == 1));
  }

  #[test]
  fn trivial_coaction_is_one_piece() {
    let h = HopfAlgebra::<Q>::builtin("z3").unwrap();
    let dec = decompose_group_case(&trivial(&h)).unwrap();
    assert_eq!(dec.component_dims(), vec![1, 0, 0]);
    assert!(dec.report.all_passed());
  }

  #[test]
  fn adjoint_z4_four_pieces() {
    let h = HopfAlgebra::<Q>::builtin("z4").unwrap();
    let dec = decompose_group_case(&adjoint(&h)).unwrap();
    assert_eq!(dec.summands.len(), 4);
    assert_eq!(dec.component_dims(), vec![1, 1, 1, 1]);
    assert!(dec.report.all_passed());
  }

  #[test]
  fn non_modular_module_is_detected_consistently() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let m = crate::crossed::one_dimensional(&h, &[Q::from_i64(1), Q::from_i64(-1)], &SparseVec::unit(1)).unwrap();
    let dec = decompose_group_case(&m).unwrap();
    assert!(dec.report.passed("modular_iff_components_fixed"));
  }
}
