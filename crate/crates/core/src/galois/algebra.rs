use std::fmt;

use super::GaloisError;
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// A finite-dimensional unital associative algebra given by structure constants.
#[derive(Clone)]
pub struct Algebra<F> {
  name:   String,
  labels: Vec<String>,
  /// `mult[i * dim + j] = e_i e_j`.
  mult:   Vec<SparseVec<F>>,
  unit:   SparseVec<F>,
}

impl<F> fmt::Debug for Algebra<F> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.debug_struct("Algebra").field("name", &self.name).field("basis", &self.labels).finish()
  }
}

impl<F: Field> Algebra<F> {
  /// Assembles an algebra; only shapes are checked.
  pub fn new(name: impl Into<String>, labels: Vec<String>, mult: Vec<SparseVec<F>>, unit: SparseVec<F>) -> Result<Self, GaloisError> {
    let d = labels.len();
    if d == 0 || mult.len() != d * d {
      return Err(GaloisError::Dimension(format!("{} products for a {d}-dimensional algebra", mult.len())));
    }
    if mult.iter().chain(std::iter::once(&unit)).any(|v| v.max_index().is_some_and(|i| i >= d)) {
      return Err(GaloisError::Dimension("structure constant outside the basis".into()));
    }
    Ok(Algebra { name: name.into(), labels, mult, unit })
  }

  /// Assembles and checks associativity and unitality.
  pub fn verified(name: impl Into<String>, labels: Vec<String>, mult: Vec<SparseVec<F>>, unit: SparseVec<F>) -> Result<Self, GaloisError> {
    let a = Self::new(name, labels, mult, unit)?;
    let rep = a.verify();
    if let Some(c) = rep.failures().next() {
      return Err(GaloisError::NotAssociative(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(a)
  }

  /// The underlying algebra of a Hopf algebra.
  pub fn of_hopf(h: &HopfAlgebra<F>) -> Self {
    let d = h.dim();
    let mult = (0..d * d).map(|k| h.mul_basis(k / d, k % d).clone()).collect();
    Algebra { name: h.name().to_string(), labels: h.labels().to_vec(), mult, unit: h.unit().clone() }
  }

  /// `k^n` with orthogonal idempotents.
  pub fn diagonal(n: usize) -> Self {
    let mult = (0..n * n).map(|k| if k / n == k % n { SparseVec::unit(k % n) } else { SparseVec::zero() }).collect();
    let unit = SparseVec::from_pairs((0..n).map(|i| (i, F::one())).collect());
    Algebra { name: format!("k^{n}"), labels: (0..n).map(|i| format!("e{i}")).collect(), mult, unit }
  }

  pub fn named(mut self, name: impl Into<String>) -> Self {
    self.name = name.into();
    self
  }

  pub fn name(&self) -> &str { &self.name }

  pub fn dim(&self) -> usize { self.labels.len() }

  pub fn labels(&self) -> &[String] { &self.labels }

  pub fn label(&self, i: usize) -> &str { &self.labels[i] }

  pub fn unit(&self) -> &SparseVec<F> { &self.unit }

  pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> { &self.mult[i * self.dim() + j] }

  pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
    let mut acc = Vec::new();
    for (i, x) in a.iter() {
      for (j, y) in b.iter() {
        let xy = x.clone() * y.clone();
        for (k, z) in self.mul_basis(i, j).iter() {
          acc.push((k, xy.clone() * z.clone()));
        }
      }
    }
    SparseVec::from_pairs(acc)
  }

  /// Product of a sequence of basis elements.
  pub fn product(&self, factors: &[usize]) -> SparseVec<F> {
    factors.iter().fold(self.unit.clone(), |acc, &f| self.mul(&acc, &SparseVec::unit(f)))
  }

  pub fn left_mul_matrix(&self, a: &SparseVec<F>) -> SparseMatrix<F> {
    SparseMatrix::from_fn(self.dim(), self.dim(), |j| self.mul(a, &SparseVec::unit(j)))
  }

  pub fn right_mul_matrix(&self, a: &SparseVec<F>) -> SparseMatrix<F> {
    SparseMatrix::from_fn(self.dim(), self.dim(), |j| self.mul(&SparseVec::unit(j), a))
  }

  pub fn verify(&self) -> Report {
    let d = self.dim();
    let mut assoc = None;
    'outer: for i in 0..d {
      for j in 0..d {
        let ij = self.mul_basis(i, j);
        for k in 0..d {
          let kk = SparseVec::unit(k);
          if self.mul(ij, &kk) != self.mul(&SparseVec::unit(i), self.mul_basis(j, k)) {
            assoc = Some(format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]));
            break 'outer;
          }
        }
      }
    }
    let unital = (0..d).find(|&i| {
      let e = SparseVec::unit(i);
      self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
    });
    Report {
      checks: vec![
        Check::from_witness("associative", assoc),
        Check::from_witness("unital", unital.map(|i| self.labels[i].clone())),
      ],
    }
  }

  /// Whether `sub` contains the unit and is closed under multiplication.
  pub fn is_subalgebra(&self, sub: &Subspace<F>) -> bool {
    sub.contains(&self.unit) && sub.basis().iter().all(|x| sub.basis().iter().all(|y| sub.contains(&self.mul(x, y))))
  }

  /// The subalgebra `sub` as an algebra in its own basis.
  pub fn restrict(&self, sub: &Subspace<F>, name: impl Into<String>) -> Result<Self, GaloisError> {
    if !self.is_subalgebra(sub) {
      return Err(GaloisError::NotSubalgebra);
    }
    let basis = sub.basis();
    let n = basis.len();
    let coords = |v: &SparseVec<F>| sub.coordinates(v).expect("closed under products");
    let mult = (0..n * n).map(|k| coords(&self.mul(&basis[k / n], &basis[k % n]))).collect();
    let labels = (0..n).map(|i| format!("b{i}")).collect();
    Algebra::new(name, labels, mult, coords(&self.unit))
  }

  /// `[A, S]` for a subspace `S`: the span of `as − sa`.
  pub fn commutator_span(&self, s: &Subspace<F>) -> Subspace<F> {
    let mut v = Vec::new();
    for i in 0..self.dim() {
      let e = SparseVec::unit(i);
      for b in s.basis() {
        v.push(self.mul(&e, b).sub(&self.mul(b, &e)));
      }
    }
    Subspace::span(self.dim(), &v)
  }

  pub fn is_commutative(&self) -> bool {
    let d = self.dim();
    (0..d).all(|i| (0..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
  }
}

/// An `(A, A)`-bimodule: `left[a]` is `m ↦ e_a m`, `right[a]` is `m ↦ m e_a`.
#[derive(Clone, Debug)]
pub struct Bimodule<F> {
  pub name:    String,
  pub labels:  Vec<String>,
  pub left:    Vec<SparseMatrix<F>>,
  pub right:   Vec<SparseMatrix<F>>,
  /// `M = A` with multiplication on both sides.
  pub regular: bool,
}

impl<F: Field> Bimodule<F> {
  pub fn regular(a: &Algebra<F>) -> Self {
    let d = a.dim();
    Bimodule {
      name:    a.name().to_string(),
      labels:  a.labels().to_vec(),
      left:    (0..d).map(|i| a.left_mul_matrix(&SparseVec::unit(i))).collect(),
      right:   (0..d).map(|i| a.right_mul_matrix(&SparseVec::unit(i))).collect(),
      regular: true,
    }
  }

  /// A bimodule from explicit action matrices; checked with [`Bimodule::verify`].
  pub fn new(
    a: &Algebra<F>,
    name: impl Into<String>,
    labels: Vec<String>,
    left: Vec<SparseMatrix<F>>,
    right: Vec<SparseMatrix<F>>,
  ) -> Result<Self, GaloisError> {
    let n = labels.len();
    if left.len() != a.dim() || right.len() != a.dim() || left.iter().chain(&right).any(|m| m.shape() != (n, n)) {
      return Err(GaloisError::Dimension(format!("bimodule matrices must be {} matrices of size {n}x{n}", a.dim())));
    }
    let m = Bimodule { name: name.into(), labels, left, right, regular: false };
    let rep = m.verify(a);
    if let Some(c) = rep.failures().next() {
      return Err(GaloisError::NotBimodule(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(m)
  }

  pub fn dim(&self) -> usize { self.labels.len() }

  pub fn act_left(&self, a: &SparseVec<F>, m: &SparseVec<F>) -> SparseVec<F> {
    let mut acc = SparseVec::zero();
    for (i, c) in a.iter() {
      acc = acc.add_scaled(&self.left[i].apply(m), c);
    }
    acc
  }

  pub fn act_right(&self, m: &SparseVec<F>, a: &SparseVec<F>) -> SparseVec<F> {
    let mut acc = SparseVec::zero();
    for (i, c) in a.iter() {
      acc = acc.add_scaled(&self.right[i].apply(m), c);
    }
    acc
  }

  fn matrix_of(ms: &[SparseMatrix<F>], v: &SparseVec<F>, n: usize) -> SparseMatrix<F> {
    let mut acc = SparseMatrix::zero(n, n);
    for (i, c) in v.iter() {
      acc = acc.add(&ms[i].scale(c));
    }
    acc
  }

  /// Left and right module axioms and commutation of the two actions.
  pub fn verify(&self, a: &Algebra<F>) -> Report {
    let d = a.dim();
    let n = self.dim();
    let mut rep = Report::new();
    let pairs = || (0..d).flat_map(|i| (0..d).map(move |j| (i, j)));
    let left = pairs().find(|&(i, j)| self.left[i].mul(&self.left[j]) != Self::matrix_of(&self.left, a.mul_basis(i, j), n));
    rep.push(Check::from_witness("left_module", left.map(|(i, j)| format!("({}, {})", a.label(i), a.label(j)))));
    let right = pairs().find(|&(i, j)| self.right[j].mul(&self.right[i]) != Self::matrix_of(&self.right, a.mul_basis(i, j), n));
    rep.push(Check::from_witness("right_module", right.map(|(i, j)| format!("({}, {})", a.label(i), a.label(j)))));
    let unit_ok = Self::matrix_of(&self.left, a.unit(), n) == SparseMatrix::identity(n)
      && Self::matrix_of(&self.right, a.unit(), n) == SparseMatrix::identity(n);
    rep.push(if unit_ok { Check::pass("unital") } else { Check::fail("unital", "1 does not act as the identity") });
    let commute = pairs().find(|&(i, j)| self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]));
    rep.push(Check::from_witness("actions_commute", commute.map(|(i, j)| format!("({}, {})", a.label(i), a.label(j)))));
    rep
  }

  /// Whether `f : self → other` commutes with both actions.
  pub fn is_morphism(&self, other: &Self, f: &SparseMatrix<F>) -> bool {
    f.shape() == (other.dim(), self.dim())
      && (0..self.left.len()).all(|i| f.mul(&self.left[i]) == other.left[i].mul(f) && f.mul(&self.right[i]) == other.right[i].mul(f))
  }
}
