use super::{CrossedError, CrossedModule};
use crate::field::Field;
use crate::linalg::{kernel, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// Increasing filtration `F_0 ⊆ F_1 ⊆ …` with
/// `F_0 = M^{coH}` and `F_{p+1}/F_p = (M/F_p)^{coH}`.
#[derive(Clone, Debug)]
pub struct Filtration<F> {
  /// Distinct terms up to stabilization.
  pub terms:      Vec<Subspace<F>>,
  /// The stable term equals `M`.
  pub exhaustive: bool,
}

impl<F: Field> Filtration<F> {
  pub fn dims(&self) -> Vec<usize> { self.terms.iter().map(|t| t.dim()).collect() }

  pub fn inclusions(&self) -> Vec<SparseMatrix<F>> { self.terms.iter().map(|t| t.inclusion()).collect() }
}

/// `{m : ρ(m) − m⊗1 ∈ F⊗H}`.
fn next_term<F: Field>(m: &CrossedModule<F>, prev: &Subspace<F>) -> Subspace<F> {
  let h = m.base();
  let d = h.dim();
  let n = m.dim();
  let quo = Quotient::new(prev.clone());
  let q = quo.dim();
  let map = SparseMatrix::from_fn(q * d, n, |j| {
    let mut w = m.coaction_matrix().col(j).clone();
    let one = SparseVec::from_pairs(h.unit().iter().map(|(u, c)| (j * d + u, c.clone())).collect());
    w = w.sub(&one);
    let mut pairs = Vec::new();
    for (x, part) in m.split_by_base(&w) {
      for (k, c) in quo.project(&part).iter() {
        pairs.push((k * d + x, c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  });
  Subspace::span(n, &kernel(&map))
}

/// Builds the filtration until it stabilizes (at most `dim M + 1` steps).
pub fn coinvariants_filtration<F: Field>(m: &CrossedModule<F>) -> Filtration<F> {
  let n = m.dim();
  let mut terms = vec![next_term(m, &Subspace::zero(n))];
  loop {
    let last = terms.last().expect("nonempty");
    let next = next_term(m, last);
    if next.dim() == last.dim() {
      break;
    }
    terms.push(next);
  }
  let exhaustive = terms.last().is_some_and(|t| t.dim() == n);
  Filtration { terms, exhaustive }
}

/// Structural checks: each term is an `H`-submodule and each graded piece
/// has trivial induced coaction.
pub fn filtration_report<F: Field>(m: &CrossedModule<F>, f: &Filtration<F>) -> Report {
  let d = m.base().dim();
  let mut rep = Report::new();
  let bad = f.terms.iter().enumerate().find_map(|(p, t)| {
    (0..d).find(|&i| t.basis().iter().any(|v| !t.contains(&m.action_matrix(i).apply(v)))).map(|i| format!("F_{p} under {}", m.base().label(i)))
  });
  rep.push(Check::from_witness("terms_are_submodules", bad));
  let graded = associated_graded(m, f);
  let nontrivial = match graded {
    Ok(parts) => parts.iter().position(|g| !g.has_trivial_coaction()).map(|p| format!("gr_{p}")),
    Err(e) => Some(e.to_string()),
  };
  rep.push(Check::from_witness("graded_trivial_coaction", nontrivial));
  rep.push(if f.exhaustive { Check::pass("exhaustive") } else { Check::fail("exhaustive", format!("stabilizes at dim {}", f.terms.last().map_or(0, |t| t.dim()))) });
  rep
}

/// `gr_p M = F_p / F_{p−1}` as crossed modules with trivial coaction.
pub fn associated_graded<F: Field>(m: &CrossedModule<F>, f: &Filtration<F>) -> Result<Vec<CrossedModule<F>>, CrossedError> {
  let mut out = Vec::with_capacity(f.terms.len());
  let mut prev = Subspace::zero(m.dim());
  for (p, t) in f.terms.iter().enumerate() {
    let (sub, _) = m.submodule(t, format!("F_{p}"))?;
    let inner: Vec<SparseVec<F>> =
      prev.basis().iter().map(|v| t.coordinates(v).ok_or_else(|| CrossedError::Degenerate("filtration is not increasing".into()))).collect::<Result<_, _>>()?;
    let (gr, _) = sub.quotient(Subspace::span(t.dim(), &inner), format!("gr_{p}"))?;
    out.push(gr);
    prev = t.clone();
  }
  Ok(out)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::crossed::{adjoint, coadjoint, trivial};
  use crate::field::Q;
  use crate::hopf::HopfAlgebra;

  #[test]
  fn trivial_coaction_is_exhaustive_at_once() {
    let h = HopfAlgebra::<Q>::builtin("z3").unwrap();
    for m in [trivial(&h), coadjoint(&h)] {
      let f = coinvariants_filtration(&m);
      assert_eq!(f.dims(), vec![m.dim()]);
      assert!(f.exhaustive);
      assert!(filtration_report(&m, &f).all_passed());
    }
  }

  #[test]
  fn adjoint_z2_is_not_exhaustive() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let m = adjoint(&h);
    let f = coinvariants_filtration(&m);
    assert_eq!(f.dims(), vec![1]);
    assert!(!f.exhaustive);
    let rep = filtration_report(&m, &f);
    assert!(rep.passed("terms_are_submodules") && rep.passed("graded_trivial_coaction"));
    assert!(!rep.passed("exhaustive"));
  }

  #[test]
  fn sweedler_adjoint_filtration() {
    let h = HopfAlgebra::<Q>::sweedler();
    let m = adjoint(&h);
    let f = coinvariants_filtration(&m);
    // Coinvariants of a non-cocommutative base need not be a submodule.
    assert!(!filtration_report(&m, &f).passed("terms_are_submodules"));
    assert!(matches!(associated_graded(&m, &f), Err(CrossedError::NotStable(_))));
  }
}
