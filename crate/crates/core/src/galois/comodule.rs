use super::algebra::Algebra;
use super::GaloisError;
use crate::field::Field;
use crate::hopf::{FiniteGroup, HopfAlgebra};
use crate::linalg::{kernel, rank, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// A right `H`-comodule algebra `ρ : A → A⊗H`, flattened as `a·dim H + h`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra<F> {
  pub algebra:  Algebra<F>,
  pub base:     HopfAlgebra<F>,
  pub coaction: SparseMatrix<F>,
  /// Group-element degree of each basis vector when the coaction comes from a grading.
  pub degrees:  Option<Vec<usize>>,
}

fn tensor2<F: Field>(u: &SparseVec<F>, v: &SparseVec<F>, d2: usize) -> SparseVec<F> {
  let mut pairs = Vec::with_capacity(u.nnz() * v.nnz());
  for (i, a) in u.iter() {
    for (j, b) in v.iter() {
      pairs.push((i * d2 + j, a.clone() * b.clone()));
    }
  }
  SparseVec::from_pairs(pairs)
}

impl<F: Field> ComoduleAlgebra<F> {
  /// Assembles and verifies a comodule algebra.
  pub fn new(algebra: Algebra<F>, base: HopfAlgebra<F>, coaction: SparseMatrix<F>) -> Result<Self, GaloisError> {
    let ca = ComoduleAlgebra { algebra, base, coaction, degrees: None };
    ca.require_valid()?;
    Ok(ca)
  }

  fn require_valid(&self) -> Result<(), GaloisError> {
    if self.coaction.shape() != (self.algebra.dim() * self.base.dim(), self.algebra.dim()) {
      return Err(GaloisError::Dimension(format!("coaction of shape {:?}", self.coaction.shape())));
    }
    let rep = self.verify();
    let failure = rep.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
    failure.map_or(Ok(()), |w| Err(GaloisError::NotComoduleAlgebra(w)))
  }

  /// `H` coacting on itself through `Δ`.
  pub fn regular(h: &HopfAlgebra<F>) -> Self {
    let d = h.dim();
    let coaction = SparseMatrix::from_fn(d * d, d, |i| SparseVec::from_pairs(h.coproduct(i).iter().map(|(a, b, c)| (a * d + b, c.clone())).collect()));
    let degrees = h.group().map(|_| (0..d).collect());
    ComoduleAlgebra { algebra: Algebra::of_hopf(h), base: h.clone(), coaction, degrees }
  }

  /// `ρ(a) = a⊗1`.
  pub fn trivial(a: &Algebra<F>, h: &HopfAlgebra<F>) -> Self {
    let dh = h.dim();
    let coaction = SparseMatrix::from_fn(a.dim() * dh, a.dim(), |i| tensor2(&SparseVec::unit(i), h.unit(), dh));
    ComoduleAlgebra { algebra: a.clone(), base: h.clone(), coaction, degrees: None }
  }

  /// A `Γ`-grading given by coordinate blocks `(group element, basis indices)`;
  /// the coaction `a ↦ a⊗deg(a)` over `kΓ` is synthesized.
  pub fn graded(a: &Algebra<F>, group: &FiniteGroup, blocks: &[(usize, Vec<usize>)]) -> Result<Self, GaloisError> {
    let mut degrees = vec![None; a.dim()];
    for (x, idx) in blocks {
      if *x >= group.order() {
        return Err(GaloisError::Grading(format!("degree {x} outside the group")));
      }
      for &i in idx {
        match degrees.get_mut(i) {
          Some(slot @ None) => *slot = Some(*x),
          Some(Some(_)) => return Err(GaloisError::Grading(format!("basis vector {} appears in two blocks", a.label(i)))),
          None => return Err(GaloisError::Grading(format!("basis index {i} out of range"))),
        }
      }
    }
    let degrees: Vec<usize> = degrees
      .into_iter()
      .enumerate()
      .map(|(i, d)| d.ok_or_else(|| GaloisError::Grading(format!("basis vector {} has no degree", a.label(i)))))
      .collect::<Result<_, _>>()?;
    Self::from_degrees(a, group, degrees)
  }

  fn from_degrees(a: &Algebra<F>, group: &FiniteGroup, degrees: Vec<usize>) -> Result<Self, GaloisError> {
    let d = a.dim();
    for i in 0..d {
      for j in 0..d {
        let want = group.mul(degrees[i], degrees[j]);
        if let Some((k, _)) = a.mul_basis(i, j).iter().find(|(k, _)| degrees[*k] != want) {
          return Err(GaloisError::Grading(format!("{}·{} has a component {} outside degree {}", a.label(i), a.label(j), a.label(k), group.elements[want])));
        }
      }
    }
    let h = HopfAlgebra::group_algebra(group);
    let dh = h.dim();
    let coaction = SparseMatrix::from_fn(d * dh, d, |i| SparseVec::unit(i * dh + degrees[i]));
    let ca = ComoduleAlgebra { algebra: a.clone(), base: h, coaction, degrees: Some(degrees) };
    ca.require_valid()?;
    Ok(ca)
  }

  /// `kG` graded through a homomorphism `φ : G → Γ`.
  pub fn group_algebra_graded(g: &FiniteGroup, gamma: &FiniteGroup, phi: &[usize]) -> Result<Self, GaloisError> {
    if phi.len() != g.order() {
      return Err(GaloisError::Grading(format!("φ has {} values for a group of order {}", phi.len(), g.order())));
    }
    for x in 0..g.order() {
      for y in 0..g.order() {
        if phi[g.mul(x, y)] != gamma.mul(phi[x], phi[y]) {
          return Err(GaloisError::Grading(format!("φ is not a homomorphism at ({}, {})", g.elements[x], g.elements[y])));
        }
      }
    }
    let a = Algebra::of_hopf(&HopfAlgebra::group_algebra(g));
    Self::from_degrees(&a, gamma, phi.to_vec())
  }

  /// The crossed product `B #_ω kΓ` with basis `b_i e_x` at index `x·dim B + i`,
  /// `e_x b = (x.b) e_x` and `e_x e_y = ω(x,y) e_{xy}`.
  pub fn crossed_product(
    b: &Algebra<F>,
    group: &FiniteGroup,
    action: &[SparseMatrix<F>],
    omega: impl Fn(usize, usize) -> SparseVec<F>,
  ) -> Result<Self, GaloisError> {
    let db = b.dim();
    let n = group.order();
    if action.len() != n || action.iter().any(|m| m.shape() != (db, db)) {
      return Err(GaloisError::Dimension(format!("crossed product needs {n} action matrices of size {db}x{db}")));
    }
    let om: Vec<SparseVec<F>> = (0..n * n).map(|k| omega(k / n, k % n)).collect();
    let d = db * n;
    let mult: Vec<SparseVec<F>> = (0..d * d)
      .map(|k| {
        let (p, q) = (k / d, k % d);
        let (x, i) = (p / db, p % db);
        let (y, j) = (q / db, q % db);
        let xb = action[x].apply(&SparseVec::unit(j));
        let prod = b.mul(&b.mul(&SparseVec::unit(i), &xb), &om[x * n + y]);
        let xy = group.mul(x, y);
        prod.remap(|t| Some(xy * db + t))
      })
      .collect();
    let e = group.identity();
    let unit = b.unit().remap(|t| Some(e * db + t));
    let labels = (0..d).map(|k| format!("{}·e_{}", b.label(k % db), group.elements[k / db])).collect();
    let alg = Algebra::new(format!("{}#{}", b.name(), group_name(group)), labels, mult, unit)?;
    let rep = alg.verify();
    if let Some(c) = rep.failures().next() {
      return Err(GaloisError::NotAssociative(format!("crossed product {}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Self::from_degrees(&alg, group, (0..d).map(|k| k / db).collect())
  }

  /// `k_ω Γ` with `e_x e_y = ω(x,y) e_{xy}`; the 2-cocycle condition is checked first.
  pub fn twisted_group_algebra(group: &FiniteGroup, omega: impl Fn(usize, usize) -> F) -> Result<Self, GaloisError> {
    let n = group.order();
    for x in 0..n {
      for y in 0..n {
        if omega(x, y).is_zero() {
          return Err(GaloisError::Cocycle(format!("ω({}, {}) = 0", group.elements[x], group.elements[y])));
        }
        for z in 0..n {
          let lhs = omega(x, y) * omega(group.mul(x, y), z);
          let rhs = omega(y, z) * omega(x, group.mul(y, z));
          if lhs != rhs {
            return Err(GaloisError::Cocycle(format!(
              "({}, {}, {})",
              group.elements[x], group.elements[y], group.elements[z]
            )));
          }
        }
      }
    }
    let k = Algebra::diagonal(1).named("k");
    let id = vec![SparseMatrix::identity(1); n];
    Self::crossed_product(&k, group, &id, |x, y| SparseVec::single(0, omega(x, y)))
  }

  pub fn dim(&self) -> usize { self.algebra.dim() }

  pub fn coact(&self, a: &SparseVec<F>) -> SparseVec<F> { self.coaction.apply(a) }

  /// `ρ` of basis vector `a` as `(a₀, h, c)` triples.
  pub fn coact_basis(&self, a: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
    let dh = self.base.dim();
    self.coaction.col(a).iter().map(move |(k, c)| (k / dh, k % dh, c))
  }

  /// Comodule axioms and multiplicativity of `ρ`.
  pub fn verify(&self) -> Report {
    let a = &self.algebra;
    let h = &self.base;
    let (d, dh) = (a.dim(), h.dim());
    let mut rep = Report::new();
    // (ρ⊗id)ρ = (id⊗Δ)ρ
    let coassoc = (0..d).find(|&i| {
      let mut lhs = Vec::new();
      let mut rhs = Vec::new();
      for (a0, x, c) in self.coact_basis(i) {
        for (a00, y, c2) in self.coact_basis(a0) {
          lhs.push(((a00 * dh + y) * dh + x, c.clone() * c2.clone()));
        }
        for (y, z, c2) in h.coproduct(x) {
          rhs.push(((a0 * dh + y) * dh + z, c.clone() * c2.clone()));
        }
      }
      SparseVec::from_pairs(lhs) != SparseVec::from_pairs(rhs)
    });
    rep.push(Check::from_witness("coassociative", coassoc.map(|i| a.label(i).to_string())));
    let counital = (0..d).find(|&i| {
      let v = SparseVec::from_pairs(self.coact_basis(i).map(|(a0, x, c)| (a0, c.clone() * h.counit(x).clone())).collect());
      v != SparseVec::unit(i)
    });
    rep.push(Check::from_witness("counital", counital.map(|i| a.label(i).to_string())));
    let unit_ok = self.coact(a.unit()) == tensor2(a.unit(), h.unit(), dh);
    rep.push(if unit_ok { Check::pass("unit_preserved") } else { Check::fail("unit_preserved", "ρ(1) ≠ 1⊗1") });
    let mut mult = None;
    'outer: for i in 0..d {
      for j in 0..d {
        let lhs = self.coact(a.mul_basis(i, j));
        let mut rhs = Vec::new();
        for (x, p, c) in self.coact_basis(i) {
          for (y, q, c2) in self.coact_basis(j) {
            let cc = c.clone() * c2.clone();
            let hv = h.mul_basis(p, q);
            for (k, v) in a.mul_basis(x, y).iter() {
              for (r, w) in hv.iter() {
                rhs.push((k * dh + r, cc.clone() * v.clone() * w.clone()));
              }
            }
          }
        }
        if lhs != SparseVec::from_pairs(rhs) {
          mult = Some(format!("({}, {})", a.label(i), a.label(j)));
          break 'outer;
        }
      }
    }
    rep.push(Check::from_witness("multiplicative", mult));
    rep
  }

  /// `B = {a : ρ(a) = a⊗1}`.
  pub fn coinvariants(&self) -> Subspace<F> {
    let d = self.dim();
    let dh = self.base.dim();
    let one = self.base.unit();
    let diff = SparseMatrix::from_fn(d * dh, d, |i| self.coaction.col(i).sub(&tensor2(&SparseVec::unit(i), one, dh)));
    Subspace::span(d, &kernel(&diff))
  }

  /// For gradings: `A_x A_y = A_{xy}` for all `x, y`, compared by rank.
  pub fn is_strongly_graded(&self) -> Option<bool> {
    let degrees = self.degrees.as_ref()?;
    let g = self.base.group()?;
    let a = &self.algebra;
    let block = |x: usize| (0..a.dim()).filter(|&i| degrees[i] == x).collect::<Vec<_>>();
    let ok = (0..g.order()).all(|x| {
      (0..g.order()).all(|y| {
        let prods: Vec<SparseVec<F>> =
          block(x).iter().flat_map(|&i| block(y).into_iter().map(move |j| a.mul_basis(i, j).clone())).collect();
        let target = block(g.mul(x, y)).len();
        prods.is_empty() && target == 0 || rank(&SparseMatrix::from_columns(a.dim(), prods)) == target
      })
    });
    Some(ok)
  }

  /// `ρ` iterated to `legs` Hopf legs: terms `(a₀, [h¹,…,h^legs], c)`.
  pub fn iterated_coaction(&self, a: usize, legs: usize) -> Vec<(usize, Vec<usize>, F)> {
    let mut terms = vec![(a, Vec::new(), F::one())];
    for _ in 0..legs {
      let mut next = Vec::new();
      for (x, hs, c) in terms {
        for (x0, h, c2) in self.coact_basis(x) {
          let mut hs2 = Vec::with_capacity(hs.len() + 1);
          hs2.push(h);
          hs2.extend_from_slice(&hs);
          next.push((x0, hs2, c.clone() * c2.clone()));
        }
      }
      terms = next;
    }
    terms
  }
}

fn group_name(g: &FiniteGroup) -> String { format!("G{}", g.order()) }

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;

  fn z2xz2() -> FiniteGroup { FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)) }

  #[test]
  fn regular_coinvariants_are_scalars() {
    let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
    let ca = ComoduleAlgebra::regular(&h);
    assert!(ca.verify().all_passed());
    let b = ca.coinvariants();
    assert_eq!(b.dim(), 1);
    assert!(b.contains(h.unit()));
  }

  #[test]
  fn trivial_coaction_has_everything_coinvariant() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let a = Algebra::diagonal(3);
    let ca = ComoduleAlgebra::trivial(&a, &h);
    assert!(ca.verify().all_passed());
    assert_eq!(ca.coinvariants().dim(), 3);
  }

  #[test]
  fn twisted_group_algebra_is_noncommutative_and_strongly_graded() {
    let g = z2xz2();
    let ca = ComoduleAlgebra::<Q>::twisted_group_algebra(&g, |x, y| {
      if (x % 2) * (y / 2) == 1 { -Q::from_i64(1) } else { Q::from_i64(1) }
    })
    .unwrap();
    assert_eq!(ca.dim(), 4);
    assert!(!ca.algebra.is_commutative());
    assert_eq!(ca.is_strongly_graded(), Some(true));
    assert_eq!(ca.coinvariants().dim(), 1);
  }

  #[test]
  fn bad_cocycle_is_rejected() {
    let g = FiniteGroup::cyclic(2);
    let r = ComoduleAlgebra::<Q>::twisted_group_algebra(&g, |x, y| if x == 1 && y == 0 { Q::from_i64(2) } else { Q::from_i64(1) });
    assert!(matches!(r, Err(GaloisError::Cocycle(_))));
  }

  #[test]
  fn inconsistent_grading_is_rejected() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let a = Algebra::of_hopf(&h);
    let r = ComoduleAlgebra::graded(&a, &FiniteGroup::cyclic(2), &[(1, vec![0]), (0, vec![1])]);
    assert!(matches!(r, Err(GaloisError::Grading(_))));
  }

  #[test]
  fn non_strong_grading_detected() {
    // k×k graded by Z/2 with both idempotents in degree 0 is trivially graded: A_g = 0.
    let a = Algebra::<Q>::diagonal(2);
    let ca = ComoduleAlgebra::graded(&a, &FiniteGroup::cyclic(2), &[(0, vec![0, 1])]).unwrap();
    assert_eq!(ca.is_strongly_graded(), Some(false));
  }
}
