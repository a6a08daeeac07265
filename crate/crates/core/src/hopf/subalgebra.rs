use super::algebra::HopfAlgebra;
use super::HopfError;
use crate::field::Field;
use crate::linalg::{Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// A Hopf subalgebra `K ⊆ H`, with its own structure constants in the
/// echelon basis of the subspace.
#[derive(Clone, Debug)]
pub struct HopfSubalgebra<F> {
  parent:    HopfAlgebra<F>,
  space:     Subspace<F>,
  algebra:   HopfAlgebra<F>,
}

impl<F: Field> HopfSubalgebra<F> {
  /// Verifies that `span(generators)` contains 1 and is closed under
  /// multiplication, comultiplication and the antipode.
  pub fn new(parent: &HopfAlgebra<F>, spanning: &[SparseVec<F>]) -> Result<Self, HopfError> {
    let d = parent.dim();
    let space = Subspace::span(d, spanning);
    let basis = space.basis().to_vec();
    let piv = space.pivot_columns().to_vec();
    let show = |v: &SparseVec<F>| format!("{v:?}");
    if !space.contains(parent.unit()) {
      return Err(HopfError::NotSubalgebra("does not contain the unit".into()));
    }
    for a in &basis {
      for b in &basis {
        if !space.contains(&parent.mul(a, b)) {
          return Err(HopfError::NotSubalgebra(format!("product of {} and {} leaves the span", show(a), show(b))));
        }
      }
      if !space.contains(&parent.antipode_of(a)) {
        return Err(HopfError::NotSubalgebra(format!("antipode of {} leaves the span", show(a))));
      }
    }
    // K⊗K inside H⊗H.
    let kk: Vec<SparseVec<F>> = basis
      .iter()
      .flat_map(|a| {
        basis.iter().map(move |b| {
          SparseVec::from_pairs(a.iter().flat_map(|(i, x)| b.iter().map(move |(j, y)| (i * d + j, x.clone() * y.clone()))).collect())
        })
      })
      .collect();
    let kk_space = Subspace::span(d * d, &kk);
    let delta = |v: &SparseVec<F>| -> SparseVec<F> {
      SparseVec::from_pairs(
        v.iter()
          .flat_map(|(i, c)| parent.coproduct(i).iter().map(move |(a, b, x)| (a * d + b, c.clone() * x.clone())))
          .collect(),
      )
    };
    for b in &basis {
      if !kk_space.contains(&delta(b)) {
        return Err(HopfError::NotSubalgebra(format!("coproduct of {} leaves K⊗K", show(b))));
      }
    }
    // Structure constants in the echelon basis: coordinate k is the entry at pivot k.
    let m = basis.len();
    let coord = |v: &SparseVec<F>| -> Vec<(usize, F)> {
      piv.iter().enumerate().map(|(k, &p)| (k, v.get(p))).filter(|(_, c)| !c.is_zero()).collect()
    };
    let mut mult = Vec::new();
    for i in 0..m {
      for j in 0..m {
        for (k, c) in coord(&parent.mul(&basis[i], &basis[j])) {
          mult.push((i, j, k, c));
        }
      }
    }
    let mut comult = Vec::new();
    for (i, b) in basis.iter().enumerate() {
      let db = delta(b);
      for (a, pa) in piv.iter().enumerate() {
        for (c, pc) in piv.iter().enumerate() {
          let v = db.get(pa * d + pc);
          if !v.is_zero() {
            comult.push((i, a, c, v));
          }
        }
      }
    }
    let unit = SparseVec::from_pairs(coord(parent.unit()));
    let counit = basis.iter().map(|b| parent.counit_of(b)).collect();
    let antipode = SparseMatrix::from_columns(m, basis.iter().map(|b| SparseVec::from_pairs(coord(&parent.antipode_of(b)))).collect());
    let labels = basis
      .iter()
      .enumerate()
      .map(|(k, b)| match b.entries() {
        [(i, c)] if c.is_one() => parent.label(*i).to_string(),
        _ => format!("k{k}"),
      })
      .collect();
    let algebra = HopfAlgebra::from_parts(format!("{}-sub", parent.name()), labels, &mult, unit, &comult, counit, antipode)?;
    Ok(HopfSubalgebra { parent: parent.clone(), space, algebra })
  }

  /// The group algebra of a subgroup, given by element indices.
  pub fn subgroup(parent: &HopfAlgebra<F>, elements: &[usize]) -> Result<Self, HopfError> {
    let g = parent.group().ok_or_else(|| HopfError::NotSubalgebra("parent is not a group algebra".into()))?;
    if !g.is_subgroup(elements) {
      return Err(HopfError::NotSubalgebra("elements do not form a subgroup".into()));
    }
    let mut sorted = elements.to_vec();
    sorted.sort();
    let mut k = Self::new(parent, &sorted.iter().map(|&e| SparseVec::unit(e)).collect::<Vec<_>>())?;
    // Sorted unit vectors come back in the same order, so the subgroup table applies.
    let sub_table = sorted
      .iter()
      .map(|&a| sorted.iter().map(|&b| sorted.iter().position(|&c| c == g.mul(a, b)).unwrap()).collect())
      .collect();
    let sub_group = super::group::FiniteGroup::new(sorted.iter().map(|&e| g.elements[e].clone()).collect(), sub_table)?;
    let mut alg = HopfAlgebra::group_algebra(&sub_group).named(format!("{}-sub", parent.name()));
    if alg.dim() != k.algebra.dim() {
      return Err(HopfError::NotSubalgebra("subgroup algebra has unexpected dimension".into()));
    }
    std::mem::swap(&mut alg, &mut k.algebra);
    Ok(k)
  }

  pub fn whole(parent: &HopfAlgebra<F>) -> Self {
    Self::new(parent, &(0..parent.dim()).map(SparseVec::unit).collect::<Vec<_>>()).expect("H is a Hopf subalgebra of itself")
  }

  pub fn trivial(parent: &HopfAlgebra<F>) -> Self {
    Self::new(parent, std::slice::from_ref(parent.unit())).expect("k·1 is a Hopf subalgebra")
  }

  pub fn parent(&self) -> &HopfAlgebra<F> { &self.parent }

  /// `K` as a Hopf algebra in its own right.
  pub fn algebra(&self) -> &HopfAlgebra<F> { &self.algebra }

  pub fn dim(&self) -> usize { self.space.dim() }

  /// Inclusion `K → H`; column `k` is the `k`-th basis vector of `K`.
  pub fn inclusion(&self) -> SparseMatrix<F> { self.space.inclusion() }

  pub fn include(&self, v: &SparseVec<F>) -> SparseVec<F> { self.inclusion().apply(v) }

  pub fn space(&self) -> &Subspace<F> { &self.space }

  /// Coordinates in `K` of an element of `H` lying in `K`.
  pub fn coordinates(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> { self.space.coordinates(v) }

  /// Basis `b − ε(b)1` of the augmentation ideal `K_+`.
  pub fn augmentation_basis(&self) -> Vec<SparseVec<F>> {
    let one = self.parent.unit();
    let v: Vec<SparseVec<F>> =
      self.space.basis().iter().map(|b| b.add_scaled(one, &-self.parent.counit_of(b))).filter(|v| !v.is_zero()).collect();
    Subspace::span(self.parent.dim(), &v).basis().to_vec()
  }

  /// `K_+H` and `HK_+` as subspaces of `H`.
  pub fn augmentation_ideals(&self) -> (Subspace<F>, Subspace<F>) {
    let d = self.parent.dim();
    let kp = self.augmentation_basis();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in &kp {
      for j in 0..d {
        left.push(self.parent.mul(x, &SparseVec::unit(j)));
        right.push(self.parent.mul(&SparseVec::unit(j), x));
      }
    }
    (Subspace::span(d, &left), Subspace::span(d, &right))
  }

  /// Normality: `dim K_+H = dim HK_+ = dim(K_+H + HK_+)`.
  pub fn is_normal(&self) -> Result<(), HopfError> {
    let (l, r) = self.augmentation_ideals();
    let s = l.sum(&r);
    if l.dim() == r.dim() && s.dim() == l.dim() {
      return Ok(());
    }
    let witness = l
      .basis()
      .iter()
      .find(|v| !r.contains(v))
      .or_else(|| r.basis().iter().find(|v| !l.contains(v)))
      .map(|v| format!("{v:?}"))
      .unwrap_or_default();
    Err(HopfError::NotNormal(format!(
      "dim K+H = {}, dim HK+ = {}, dim of sum = {}; witness {witness}",
      l.dim(),
      r.dim(),
      s.dim()
    )))
  }

  /// Whether `H` is free as a right `K`-module, tested by rank: the map
  /// `H ⊗ K → H` restricted to a candidate coset basis is bijective.
  pub fn parent_is_free(&self) -> bool {
    let d = self.parent.dim();
    let m = self.dim();
    if d % m != 0 {
      return false;
    }
    // Greedily choose x_1..x_r with x_i K independent.
    let basis = self.space.basis().to_vec();
    let mut acc: Vec<SparseVec<F>> = Vec::new();
    let mut span = Subspace::zero(d);
    for j in 0..d {
      let block: Vec<SparseVec<F>> = basis.iter().map(|b| self.parent.mul(&SparseVec::unit(j), b)).collect();
      let mut trial = acc.clone();
      trial.extend(block.iter().cloned());
      let t = Subspace::span(d, &trial);
      if t.dim() == span.dim() + m {
        acc = trial;
        span = t;
      }
    }
    span.dim() == d
  }
}

/// The quotient Hopf algebra `H̄ = H/K_+H` with its projection.
#[derive(Clone, Debug)]
pub struct QuotientHopf<F> {
  pub algebra:    HopfAlgebra<F>,
  /// `π : H → H̄`.
  pub projection: SparseMatrix<F>,
  pub quotient:   Quotient<F>,
}

/// `H/K_+H` for a normal Hopf subalgebra `K`.
pub fn quotient_by_normal<F: Field>(k: &HopfSubalgebra<F>) -> Result<QuotientHopf<F>, HopfError> {
  k.is_normal()?;
  let h = k.parent();
  let (ideal, _) = k.augmentation_ideals();
  let quo = Quotient::new(ideal);
  let m = quo.dim();
  let reps = quo.representatives().to_vec();
  let pi = |v: &SparseVec<F>| quo.project(v);
  let mut mult = Vec::new();
  for a in 0..m {
    for b in 0..m {
      for (c, x) in pi(h.mul_basis(reps[a], reps[b])).iter() {
        mult.push((a, b, c, x.clone()));
      }
    }
  }
  let mut comult = Vec::new();
  for (a, &r) in reps.iter().enumerate() {
    for (x, y, c) in h.coproduct(r) {
      for (p, u) in pi(&SparseVec::unit(*x)).iter() {
        for (q, v) in pi(&SparseVec::unit(*y)).iter() {
          comult.push((a, p, q, c.clone() * u.clone() * v.clone()));
        }
      }
    }
  }
  let counit = reps.iter().map(|&r| h.counit(r).clone()).collect();
  let antipode = SparseMatrix::from_columns(m, reps.iter().map(|&r| pi(&h.antipode_of(&SparseVec::unit(r)))).collect());
  let labels = reps.iter().map(|&r| format!("[{}]", h.label(r))).collect();
  let algebra = HopfAlgebra::from_parts(format!("{}/K", h.name()), labels, &mult, pi(h.unit()), &comult, counit, antipode)?
    .verified()?;
  let projection = quo.projection_matrix();
  let rep = check_hopf_map(h, &algebra, &projection);
  if let Some(c) = rep.failures().next() {
    return Err(HopfError::Axiom(format!("projection is not a Hopf map: {} at {:?}", c.name, c.witness)));
  }
  Ok(QuotientHopf { algebra, projection, quotient: quo })
}

/// Checks that `f : H → H'` preserves product, unit, coproduct, counit and antipode.
pub fn check_hopf_map<F: Field>(src: &HopfAlgebra<F>, dst: &HopfAlgebra<F>, f: &SparseMatrix<F>) -> Report {
  let d = src.dim();
  let e = dst.dim();
  let lab = |i: usize| src.label(i).to_string();
  let fe = |i: usize| f.col(i).clone();
  let mult = (0..d)
    .flat_map(|i| (0..d).map(move |j| (i, j)))
    .find(|&(i, j)| f.apply(src.mul_basis(i, j)) != dst.mul(&fe(i), &fe(j)))
    .map(|(i, j)| format!("({}, {})", lab(i), lab(j)));
  let unit = (f.apply(src.unit()) != *dst.unit()).then(|| "unit".to_string());
  let tensor = |terms: Vec<(usize, usize, F)>| SparseVec::from_pairs(terms.into_iter().map(|(a, b, c)| (a * e + b, c)).collect());
  let comult = (0..d)
    .find(|&i| {
      let mut lhs = Vec::new();
      for (a, b, c) in src.coproduct(i) {
        for (p, u) in f.col(*a).iter() {
          for (q, v) in f.col(*b).iter() {
            lhs.push((p, q, c.clone() * u.clone() * v.clone()));
          }
        }
      }
      let mut rhs = Vec::new();
      for (k, x) in f.col(i).iter() {
        for (a, b, c) in dst.coproduct(k) {
          rhs.push((*a, *b, x.clone() * c.clone()));
        }
      }
      tensor(lhs) != tensor(rhs)
    })
    .map(lab);
  let counit = (0..d).find(|&i| dst.counit_of(&fe(i)) != *src.counit(i)).map(lab);
  let antipode = (0..d).find(|&i| f.apply(&src.antipode_of(&SparseVec::unit(i))) != dst.antipode_of(&fe(i))).map(lab);
  Report {
    checks: vec![
      Check::from_witness("preserves_product", mult),
      Check::from_witness("preserves_unit", unit),
      Check::from_witness("preserves_coproduct", comult),
      Check::from_witness("preserves_counit", counit),
      Check::from_witness("preserves_antipode", antipode),
    ],
  }
}
