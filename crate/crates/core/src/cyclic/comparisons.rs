use serde::Serialize;

use super::bar::{group_homology, tor_oracle};
use super::hopf::build_cyclic_for_homology;
use super::object::{HomologyReport, Method};
use super::CyclicError;
use crate::crossed::{associated_graded, coinvariants_filtration, decompose_group_case, induce, CrossedModule};
use crate::field::Field;
use crate::hopf::{quotient_by_normal, HopfAlgebra, HopfSubalgebra, QuotientHopf};
use crate::linalg::{solve, Quotient, SparseMatrix, SparseVec};
use crate::report::{Check, Report};

/// `HH` and/or `HC` of `Z_*(H,M)` in degrees `0..=max`, building one extra degree.
pub fn homology_of<F: Field>(
  m: &CrossedModule<F>,
  max: usize,
  want_hh: bool,
  want_hc: bool,
  method: Method,
) -> Result<HomologyReport, CyclicError> {
  if want_hc && F::CHARACTERISTIC != 0 {
    return Err(CyclicError::PositiveCharacteristic(F::CHARACTERISTIC));
  }
  let z = build_cyclic_for_homology(m, max + 1)?;
  z.homology(max, want_hh, want_hc, method)
}

fn hh_of<F: Field>(m: &CrossedModule<F>, max: usize) -> Result<Vec<usize>, CyclicError> {
  Ok(homology_of(m, max, true, false, Method::Lambda)?.hh.unwrap_or_default())
}

fn hc_of<F: Field>(m: &CrossedModule<F>, max: usize) -> Result<Vec<usize>, CyclicError> {
  Ok(homology_of(m, max, false, true, Method::Lambda)?.hc.unwrap_or_default())
}

/// Exactness constraint of `⋯→HH_n→HC_n→HC_{n−2}→HH_{n−1}→⋯→HH_0→HC_0→0`.
///
/// Reading the sequence from the right as `X_{3k} = HC_k`, `X_{3k+1} = HH_k`,
/// `X_{3k+2} = HC_{k−1}`, the rank of `X_{j+1} → X_j` is forced to be
/// `r_j = dim X_j − r_{j−1}`; every `r_j` must lie in `[0, dim X_{j+1}]`.
pub fn sbi_check(hh: &[usize], hc: &[usize]) -> Result<Report, CyclicError> {
  if hh.len() != hc.len() {
    return Err(CyclicError::Hypothesis(format!("HH has {} degrees but HC has {}", hh.len(), hc.len())));
  }
  let len = hh.len();
  let x = |j: usize| -> Option<(i64, String)> {
    let k = j / 3;
    match j % 3 {
      0 => hc.get(k).map(|&v| (v as i64, format!("HC_{k}"))),
      1 => hh.get(k).map(|&v| (v as i64, format!("HH_{k}"))),
      _ if k == 0 => Some((0, "HC_-1".into())),
      _ => hc.get(k - 1).map(|&v| (v as i64, format!("HC_{}", k - 1))),
    }
  };
  let mut rep = Report::new();
  let mut witness = None;
  let mut r_prev = 0i64;
  let mut windows = 0;
  let mut j = 0;
  while let (Some((xj, _)), Some((xn, name))) = (x(j), x(j + 1)) {
    let r = xj - r_prev;
    if r < 0 || r > xn {
      witness = Some(format!("forced rank {r} into position {j} is outside [0, dim {name} = {xn}]"));
      break;
    }
    r_prev = r;
    windows += 1;
    j += 1;
  }
  if len == 0 {
    rep.push(Check::fail("sbi_exactness", "no degrees supplied"));
  } else {
    rep.push(Check::from_witness("sbi_exactness", witness));
  }
  rep.push(Check::pass(format!("windows_checked={windows}")));
  Ok(rep)
}

/// `out_n = Σ_{i≥0} v_{n−2i}`.
pub fn fold_even(v: &[usize]) -> Vec<usize> {
  (0..v.len()).map(|n| (0..=n / 2).map(|i| v[n - 2 * i]).sum()).collect()
}

/// One degreewise comparison of two independently computed sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
  pub quantity: String,
  pub left:     Vec<usize>,
  pub right:    Vec<usize>,
}

impl Comparison {
  pub fn new(quantity: impl Into<String>, left: Vec<usize>, right: Vec<usize>) -> Self {
    Comparison { quantity: quantity.into(), left, right }
  }

  pub fn agree(&self) -> bool { self.left == self.right }
}

/// A titled set of comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
  pub title:       String,
  pub comparisons: Vec<Comparison>,
}

impl ComparisonReport {
  pub fn agree(&self) -> bool { self.comparisons.iter().all(Comparison::agree) }

  pub fn get(&self, quantity: &str) -> Option<&Comparison> { self.comparisons.iter().find(|c| c.quantity == quantity) }

  pub fn to_report(&self) -> Report {
    Report {
      checks: self
        .comparisons
        .iter()
        .map(|c| Check::from_witness(c.quantity.clone(), (!c.agree()).then(|| format!("{:?} vs {:?}", c.left, c.right))))
        .collect(),
    }
  }
}

fn require_char_zero<F: Field>() -> Result<(), CyclicError> {
  if F::CHARACTERISTIC != 0 {
    return Err(CyclicError::PositiveCharacteristic(F::CHARACTERISTIC));
  }
  Ok(())
}

/// For cocommutative `H` and trivial coaction: `HC_n(H,M) = ⊕_i Tor^H_{n−2i}(k,M)`.
pub fn tor_fold_check<F: Field>(m: &CrossedModule<F>, max: usize) -> Result<ComparisonReport, CyclicError> {
  require_char_zero::<F>()?;
  let h = m.base();
  if !h.is_cocommutative() {
    return Err(CyclicError::Hypothesis(format!("{} is not cocommutative", h.name())));
  }
  if !m.has_trivial_coaction() {
    return Err(CyclicError::Hypothesis(format!("{} does not have trivial coaction", m.name())));
  }
  let direct = hc_of(m, max)?;
  let tor = tor_oracle(h, m.action_matrices(), 0..=max)?;
  Ok(ComparisonReport {
    title:       format!("HC({}, {}) against folded Tor", h.name(), m.name()),
    comparisons: vec![Comparison::new("HC", direct, fold_even(&tor))],
  })
}

/// `HH_*(H, Ind_K^H N) ≅ HH_*(K, N)` and likewise for `HC` (char 0 only).
pub fn shapiro_check<F: Field>(k: &HopfSubalgebra<F>, n: &CrossedModule<F>, max: usize) -> Result<ComparisonReport, CyclicError> {
  if !k.parent_is_free() {
    return Err(CyclicError::Hypothesis(format!("{} is not free over the subalgebra", k.parent().name())));
  }
  let ind = induce(k, n)?;
  let mut comparisons = vec![Comparison::new("HH", hh_of(&ind, max)?, hh_of(n, max)?)];
  if F::CHARACTERISTIC == 0 {
    comparisons.push(Comparison::new("HC", hc_of(&ind, max)?, hc_of(n, max)?));
  }
  Ok(ComparisonReport { title: format!("{} induced from {} to {}", n.name(), k.algebra().name(), k.parent().name()), comparisons })
}

/// A separability idempotent `e ∈ K⊗K`: `μ(e) = 1` and `(a⊗1)e = e(1⊗a)`.
pub fn is_separable<F: Field>(k: &HopfAlgebra<F>) -> Option<SparseVec<F>> {
  let d = k.dim();
  let rows = d + d * d * d;
  let m = SparseMatrix::from_fn(rows, d * d, |col| {
    let (i, j) = (col / d, col % d);
    let mut pairs: Vec<(usize, F)> = k.mul_basis(i, j).iter().map(|(p, c)| (p, c.clone())).collect();
    for a in 0..d {
      let base = d + a * d * d;
      for (p, c) in k.mul_basis(a, i).iter() {
        pairs.push((base + p * d + j, c.clone()));
      }
      for (q, c) in k.mul_basis(j, a).iter() {
        pairs.push((base + i * d + q, -c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  });
  solve(&m, k.unit())
}

/// `M̄ = M/K_+M` over `H̄ = H/K_+H`.
#[derive(Clone, Debug)]
pub struct ReducedModule<F> {
  pub base:       QuotientHopf<F>,
  pub module:     CrossedModule<F>,
  pub projection: Quotient<F>,
}

/// Action through lifts, coaction `(id⊗π)ρ`.
pub fn reduce_by_normal<F: Field>(k: &HopfSubalgebra<F>, m: &CrossedModule<F>) -> Result<ReducedModule<F>, CyclicError> {
  let qh = quotient_by_normal(k)?;
  let hbar = &qh.algebra;
  let dm = m.dim();
  let db = hbar.dim();
  let mut relators = Vec::new();
  for v in k.augmentation_basis() {
    for j in 0..dm {
      relators.push(m.act(&v, &SparseVec::unit(j)));
    }
  }
  let mq = Quotient::by_relators(dm, &relators);
  let action: Vec<SparseMatrix<F>> = (0..db)
    .map(|i| {
      let lift = qh.quotient.lift(i);
      mq.induced(&mq, |r| m.act(&lift, &SparseVec::unit(r)))
    })
    .collect();
  let n = mq.dim();
  let dh = m.base().dim();
  let coaction = SparseMatrix::from_fn(n * db, n, |c| {
    let w = m.coaction_matrix().col(mq.representatives()[c]);
    let mut pairs = Vec::new();
    for (idx, x) in w.iter() {
      let (m0, h) = (idx / dh, idx % dh);
      let pm = mq.project(&SparseVec::unit(m0));
      for (hb, y) in qh.projection.col(h).iter() {
        for (mb, z) in pm.iter() {
          pairs.push((mb * db + hb, x.clone() * y.clone() * z.clone()));
        }
      }
    }
    SparseVec::from_pairs(pairs)
  });
  let labels = mq.representatives().iter().map(|&r| format!("[{}]", m.label(r))).collect();
  let module = CrossedModule::new(hbar, format!("{}/K+", m.name()), labels, action, coaction)?;
  // The coaction must descend: (id⊗π)ρ(K_+M) ⊆ K_+M ⊗ H̄.
  for r in &relators {
    let w = m.coact(r);
    let mut pairs = Vec::new();
    for (idx, x) in w.iter() {
      let (m0, h) = (idx / dh, idx % dh);
      for (hb, y) in qh.projection.col(h).iter() {
        for (mb, z) in mq.project(&SparseVec::unit(m0)).iter() {
          pairs.push((mb * db + hb, x.clone() * y.clone() * z.clone()));
        }
      }
    }
    if !SparseVec::from_pairs(pairs).is_zero() {
      return Err(CyclicError::Hypothesis("the coaction does not descend to M/K+M".into()));
    }
  }
  Ok(ReducedModule { base: qh, module, projection: mq })
}

/// `HH_*(H,M) ≅ HH_*(H̄,M̄)` (and `HC`) for a normal separable `K`; when `H̄`
/// is cocommutative and `M̄` has trivial coaction, also
/// `HC_*(H,M) = ⊕_i Tor^{H̄}_{*−2i}(k,M̄)`.
pub fn semisimple_reduction<F: Field>(k: &HopfSubalgebra<F>, m: &CrossedModule<F>, max: usize) -> Result<ComparisonReport, CyclicError> {
  k.is_normal().map_err(|e| CyclicError::Hypothesis(format!("K is not normal: {e}")))?;
  if is_separable(k.algebra()).is_none() {
    return Err(CyclicError::Hypothesis("K admits no separability idempotent".into()));
  }
  let red = reduce_by_normal(k, m)?;
  let mut comparisons = vec![Comparison::new("HH", hh_of(m, max)?, hh_of(&red.module, max)?)];
  if F::CHARACTERISTIC == 0 {
    let hc = hc_of(m, max)?;
    comparisons.push(Comparison::new("HC", hc.clone(), hc_of(&red.module, max)?));
    if red.base.algebra.is_cocommutative() && red.module.has_trivial_coaction() {
      let tor = tor_oracle(&red.base.algebra, red.module.action_matrices(), 0..=max)?;
      comparisons.push(Comparison::new("HC_folded_tor", hc, fold_even(&tor)));
    }
  }
  Ok(ComparisonReport { title: format!("{} over {} reduced by {}", m.name(), m.base().name(), k.algebra().name()), comparisons })
}

/// One class term `⊕_i H_{*−2i}(Ḡ_x, M_x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurghelaeTerm {
  pub representative:  String,
  pub centralizer:     usize,
  pub quotient:        usize,
  pub component_dim:   usize,
  pub group_homology:  Vec<usize>,
}

/// Both sides of the finite-group decomposition of cyclic homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurghelaeReport {
  pub classes: Vec<BurghelaeTerm>,
  pub formula: Vec<usize>,
  pub direct:  Vec<usize>,
}

impl BurghelaeReport {
  pub fn agree(&self) -> bool { self.formula == self.direct }
}

/// `HC_n(kG,M) = ⊕_{x∈t(G)} ⊕_i H_{n−2i}(G_x/⟨x⟩, M_x)` against the Connes complex.
pub fn burghelea_finite<F: Field>(m: &CrossedModule<F>, max: usize) -> Result<BurghelaeReport, CyclicError> {
  require_char_zero::<F>()?;
  let h = m.base();
  let g = h.group().ok_or(CyclicError::Crossed(crate::crossed::CrossedError::NotGroupAlgebra))?;
  m.require_modular()?;
  let dec = decompose_group_case(m)?;
  let mut classes = Vec::new();
  let mut formula = vec![0; max + 1];
  for data in g.conjugacy_data() {
    let x = data.representative;
    let comp = &dec.components[x];
    let dim = comp.dim();
    let action: Vec<SparseMatrix<F>> = (0..data.quotient.order())
      .map(|q| {
        let lift = data.centralizer[data.quotient_map.iter().position(|&c| c == q).expect("every coset has a lift")];
        SparseMatrix::from_fn(dim, dim, |j| {
          let image = m.action_matrix(lift).apply(&comp.basis()[j]);
          comp.coordinates(&image).expect("centralizer preserves M_x")
        })
      })
      .collect();
    let hom = if dim == 0 { vec![0; max + 1] } else { group_homology(&data.quotient, &action, 0..=max)? };
    for (f, v) in formula.iter_mut().zip(fold_even(&hom)) {
      *f += v;
    }
    classes.push(BurghelaeTerm {
      representative: g.elements[x].clone(),
      centralizer:    data.centralizer.len(),
      quotient:       data.quotient.order(),
      component_dim:  dim,
      group_homology: hom,
    });
  }
  let direct = hc_of(m, max)?;
  Ok(BurghelaeReport { classes, formula, direct })
}

/// One column `E¹_{p,*} = HC_{p+*}(gr_p M)` of the filtration spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Column {
  pub dim:        usize,
  pub hc:         Vec<usize>,
  /// `⊕_i Tor_{*−2i}(k, gr_p M)`, present when the base is cocommutative.
  pub folded_tor: Option<Vec<usize>>,
}

/// The `E¹` page of the coinvariants filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Page {
  pub filtration: Vec<usize>,
  pub exhaustive: bool,
  pub columns:    Vec<E1Column>,
}

impl E1Page {
  /// Every column with a folded-Tor value matches it.
  pub fn consistent(&self) -> bool { self.columns.iter().all(|c| c.folded_tor.as_ref().is_none_or(|t| *t == c.hc)) }
}

/// `HC` of every graded piece of the coinvariants filtration.
pub fn e1_page_report<F: Field>(m: &CrossedModule<F>, max: usize) -> Result<E1Page, CyclicError> {
  require_char_zero::<F>()?;
  let f = coinvariants_filtration(m);
  let graded = associated_graded(m, &f)?;
  let h = m.base();
  let columns = graded
    .iter()
    .map(|gr| {
      let hc = hc_of(gr, max)?;
      let folded_tor = if h.is_cocommutative() { Some(fold_even(&tor_oracle(h, gr.action_matrices(), 0..=max)?)) } else { None };
      Ok(E1Column { dim: gr.dim(), hc, folded_tor })
    })
    .collect::<Result<_, CyclicError>>()?;
  Ok(E1Page { filtration: f.dims(), exhaustive: f.exhaustive, columns })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::crossed::{adjoint, sign, trivial};
  use crate::field::Q;
  use crate::hopf::FiniteGroup;

  #[test]
  fn sbi_examples() {
    assert!(sbi_check(&[2, 0, 0, 0], &[2, 0, 2, 0]).unwrap().all_passed());
    assert!(sbi_check(&[1, 0, 0, 0, 0], &[1, 0, 1, 0, 1]).unwrap().all_passed());
    assert!(!sbi_check(&[2, 0, 0, 0], &[2, 1, 2, 0]).unwrap().passed("sbi_exactness"));
    assert!(sbi_check(&[1, 0], &[1]).is_err());
  }

  #[test]
  fn folding() {
    assert_eq!(fold_even(&[1, 0, 0, 0]), vec![1, 0, 1, 0]);
    assert_eq!(fold_even(&[1, 1, 1]), vec![1, 1, 2]);
  }

  #[test]
  fn tor_fold_small() {
    let z2 = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let r = tor_fold_check(&sign(&z2).unwrap(), 4).unwrap();
    assert!(r.agree());
    assert_eq!(r.comparisons[0].left, vec![0; 5]);
    let z3 = HopfAlgebra::<Q>::builtin("z3").unwrap();
    let r = tor_fold_check(&trivial(&z3), 3).unwrap();
    assert_eq!(r.comparisons[0].left, vec![1, 0, 1, 0]);
    assert!(r.agree());
    assert!(matches!(tor_fold_check(&adjoint(&z3), 2), Err(CyclicError::Hypothesis(_))));
  }

  #[test]
  fn separability() {
    assert!(is_separable(&HopfAlgebra::<Q>::builtin("s3").unwrap()).is_some());
    assert!(is_separable(&HopfAlgebra::<Q>::sweedler()).is_none());
    let z2 = HopfAlgebra::<crate::field::Fp<2>>::group_algebra(&FiniteGroup::cyclic(2));
    assert!(is_separable(&z2).is_none());
  }

  #[test]
  fn burghelea_z2() {
    let z2 = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let r = burghelea_finite(&adjoint(&z2), 3).unwrap();
    assert_eq!(r.formula, vec![2, 0, 2, 0]);
    assert!(r.agree());
  }
}
