use std::fmt;

use super::CrossedError;
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// A left `H`-module and right `H`-comodule `M`, finite-dimensional.
///
/// `action[i]` is the matrix of `e_i` acting on `M`. The coaction is a
/// `dim(M)·dim(H) × dim(M)` matrix whose column `m` is `ρ(e_m)` in `M⊗H`,
/// flattened as `m₀ · dim(H) + h`.
#[derive(Clone)]
pub struct CrossedModule<F> {
  base:     HopfAlgebra<F>,
  name:     String,
  labels:   Vec<String>,
  action:   Vec<SparseMatrix<F>>,
  coaction: SparseMatrix<F>,
}

impl<F> fmt::Debug for CrossedModule<F> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.debug_struct("CrossedModule").field("name", &self.name).field("basis", &self.labels).finish()
  }
}

impl<F: Field> CrossedModule<F> {
  /// Assembles a module/comodule pair; only shapes are checked.
  pub fn new(
    base: &HopfAlgebra<F>,
    name: impl Into<String>,
    labels: Vec<String>,
    action: Vec<SparseMatrix<F>>,
    coaction: SparseMatrix<F>,
  ) -> Result<Self, CrossedError> {
    let n = labels.len();
    let d = base.dim();
    if action.len() != d {
      return Err(CrossedError::Dimension(format!("{} action matrices for a {d}-dimensional Hopf algebra", action.len())));
    }
    if let Some(a) = action.iter().find(|a| a.shape() != (n, n)) {
      return Err(CrossedError::Dimension(format!("action matrix of shape {:?}, expected {n}x{n}", a.shape())));
    }
    if coaction.shape() != (n * d, n) {
      return Err(CrossedError::Dimension(format!("coaction of shape {:?}, expected {}x{n}", coaction.shape(), n * d)));
    }
    Ok(CrossedModule { base: base.clone(), name: name.into(), labels, action, coaction })
  }

  /// Builds the action and coaction from functions on basis vectors.
  pub fn from_fns(
    base: &HopfAlgebra<F>,
    name: impl Into<String>,
    labels: Vec<String>,
    act: impl Fn(usize, usize) -> SparseVec<F> + Send + Sync,
    coact: impl Fn(usize) -> SparseVec<F> + Send + Sync,
  ) -> Result<Self, CrossedError> {
    let n = labels.len();
    let d = base.dim();
    let action = (0..d).map(|i| SparseMatrix::from_fn(n, n, |m| act(i, m))).collect();
    let coaction = SparseMatrix::from_fn(n * d, n, coact);
    Self::new(base, name, labels, action, coaction)
  }

  pub fn base(&self) -> &HopfAlgebra<F> { &self.base }

  pub fn name(&self) -> &str { &self.name }

  pub fn named(mut self, name: impl Into<String>) -> Self {
    self.name = name.into();
    self
  }

  pub fn dim(&self) -> usize { self.labels.len() }

  pub fn labels(&self) -> &[String] { &self.labels }

  pub fn label(&self, i: usize) -> &str { &self.labels[i] }

  pub fn action_matrix(&self, i: usize) -> &SparseMatrix<F> { &self.action[i] }

  pub fn action_matrices(&self) -> &[SparseMatrix<F>] { &self.action }

  pub fn coaction_matrix(&self) -> &SparseMatrix<F> { &self.coaction }

  /// `e_i · e_m`.
  pub fn act_basis(&self, i: usize, m: usize) -> &SparseVec<F> { self.action[i].col(m) }

  pub fn act(&self, h: &SparseVec<F>, m: &SparseVec<F>) -> SparseVec<F> {
    let mut pairs = Vec::new();
    for (i, x) in h.iter() {
      for (j, y) in m.iter() {
        for (k, z) in self.act_basis(i, j).iter() {
          pairs.push((k, x.clone() * y.clone() * z.clone()));
        }
      }
    }
    SparseVec::from_pairs(pairs)
  }

  /// Matrix of the action of an arbitrary element of `H`.
  pub fn action_of(&self, h: &SparseVec<F>) -> SparseMatrix<F> {
    let n = self.dim();
    let mut acc = SparseMatrix::zero(n, n);
    for (i, c) in h.iter() {
      acc = acc.add(&self.action[i].scale(c));
    }
    acc
  }

  /// `ρ(e_m)` as `(m₀, h, coefficient)` triples.
  pub fn coact_basis(&self, m: usize) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
    let d = self.base.dim();
    self.coaction.col(m).iter().map(move |(k, c)| (k / d, k % d, c))
  }

  pub fn coact(&self, v: &SparseVec<F>) -> SparseVec<F> { self.coaction.apply(v) }

  /// `u_M(m) = Σ m_(1) m_(0)`.
  pub fn u_map(&self) -> SparseMatrix<F> {
    let n = self.dim();
    SparseMatrix::from_fn(n, n, |m| {
      let mut acc = SparseVec::zero();
      for (m0, h, c) in self.coact_basis(m) {
        acc = acc.add_scaled(self.act_basis(h, m0), c);
      }
      acc
    })
  }

  /// Module and comodule axioms plus the crossed condition
  /// `ρ(hm) = Σ h_(2)m_(0) ⊗ h_(3)m_(1)S(h_(1))`.
  pub fn verify_crossed(&self) -> Report {
    let h = &self.base;
    let d = h.dim();
    let n = self.dim();
    let hl = |i: usize| h.label(i).to_string();
    let ml = |j: usize| self.labels[j].clone();
    let mut rep = Report::new();

    let unit = (0..n).find(|&m| self.act(h.unit(), &SparseVec::unit(m)) != SparseVec::unit(m));
    rep.push(Check::from_witness("module_unit", unit.map(ml)));

    let assoc = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).find(|&(a, b)| {
      self.action[a].mul(&self.action[b]) != self.action_of(h.mul_basis(a, b))
    });
    rep.push(Check::from_witness("module_associativity", assoc.map(|(a, b)| format!("({}, {})", hl(a), hl(b)))));

    let coassoc = (0..n).find(|&m| {
      let mut left = Vec::new();
      let mut right = Vec::new();
      for (m0, x, c) in self.coact_basis(m) {
        for (m00, y, c2) in self.coact_basis(m0) {
          left.push(((m00 * d + y) * d + x, c.clone() * c2.clone()));
        }
        for (a, b, c2) in h.coproduct(x) {
          right.push(((m0 * d + a) * d + b, c.clone() * c2.clone()));
        }
      }
      SparseVec::from_pairs(left) != SparseVec::from_pairs(right)
    });
    rep.push(Check::from_witness("comodule_coassociativity", coassoc.map(ml)));

    let counit = (0..n).find(|&m| {
      let v = SparseVec::from_pairs(self.coact_basis(m).map(|(m0, x, c)| (m0, c.clone() * h.counit(x).clone())).collect());
      v != SparseVec::unit(m)
    });
    rep.push(Check::from_witness("comodule_counit", counit.map(ml)));

    let crossed = (0..d).flat_map(|i| (0..n).map(move |m| (i, m))).find(|&(i, m)| {
      let lhs = self.coact(self.act_basis(i, m));
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(i, 3) {
        let s1 = h.antipode_of(&SparseVec::unit(legs[0]));
        for (m0, x, c2) in self.coact_basis(m) {
          let left = self.act_basis(legs[1], m0);
          let right = h.mul(&h.mul(&SparseVec::unit(legs[2]), &SparseVec::unit(x)), &s1);
          let cc = c.clone() * c2.clone();
          for (p, u) in left.iter() {
            for (q, v) in right.iter() {
              pairs.push((p * d + q, cc.clone() * u.clone() * v.clone()));
            }
          }
        }
      }
      lhs != SparseVec::from_pairs(pairs)
    });
    rep.push(Check::from_witness("crossed_condition", crossed.map(|(i, m)| format!("({}, {})", hl(i), ml(m)))));
    rep
  }

  /// `Σ m_(1) m_(0) = m`.
  pub fn verify_modular(&self) -> Report {
    let u = self.u_map();
    let bad = (0..self.dim()).find(|&m| *u.col(m) != SparseVec::unit(m));
    Report { checks: vec![Check::from_witness("modular", bad.map(|m| self.labels[m].clone()))] }
  }

  /// Both reports together.
  pub fn verify_all(&self) -> Report {
    let mut r = self.verify_crossed();
    r.extend(self.verify_modular());
    r
  }

  /// Errors with the first failing axiom unless `M` is a modular crossed module.
  pub fn require_modular(&self) -> Result<(), CrossedError> {
    let rep = self.verify_all();
    let first = rep.failures().next().map(|c| (c.name.clone(), c.witness.clone().unwrap_or_default()));
    match first {
      None => Ok(()),
      Some((name, w)) if name == "modular" => Err(CrossedError::NotModular(format!("{}: Σ m_(1)m_(0) ≠ m at {w}", self.name))),
      Some((name, w)) => Err(CrossedError::NotCrossed(format!("{}: {name} fails at {w}", self.name))),
    }
  }

  /// Whether the coaction is `m ↦ m ⊗ 1`.
  pub fn has_trivial_coaction(&self) -> bool {
    let d = self.base.dim();
    (0..self.dim()).all(|m| {
      *self.coaction.col(m) == SparseVec::from_pairs(self.base.unit().iter().map(|(u, c)| (m * d + u, c.clone())).collect())
    })
  }

  /// Splits `w ∈ M⊗H` into its components `w_h ∈ M`, one per basis element of `H`.
  pub fn split_by_base(&self, w: &SparseVec<F>) -> Vec<(usize, SparseVec<F>)> {
    let d = self.base.dim();
    let mut parts: Vec<Vec<(usize, F)>> = vec![Vec::new(); d];
    for (k, c) in w.iter() {
      parts[k % d].push((k / d, c.clone()));
    }
    parts.into_iter().enumerate().filter(|(_, p)| !p.is_empty()).map(|(h, p)| (h, SparseVec::from_pairs(p))).collect()
  }

  /// Restriction to a subspace stable under the action and coaction, in the
  /// echelon basis of the subspace. Returns the module and its inclusion.
  pub fn submodule(&self, sub: &Subspace<F>, name: impl Into<String>) -> Result<(Self, SparseMatrix<F>), CrossedError> {
    let d = self.base.dim();
    let basis = sub.basis().to_vec();
    let k = basis.len();
    let coords = |v: &SparseVec<F>, what: &str| -> Result<SparseVec<F>, CrossedError> {
      sub.coordinates(v).ok_or_else(|| CrossedError::NotStable(format!("subspace is not stable under the {what}")))
    };
    let mut action = Vec::with_capacity(d);
    for i in 0..d {
      let cols = basis.iter().map(|b| coords(&self.action[i].apply(b), "action")).collect::<Result<Vec<_>, _>>()?;
      action.push(SparseMatrix::from_columns(k, cols));
    }
    let mut co_cols = Vec::with_capacity(k);
    for b in &basis {
      let mut pairs = Vec::new();
      for (h, w) in self.split_by_base(&self.coact(b)) {
        for (j, c) in coords(&w, "coaction")?.iter() {
          pairs.push((j * d + h, c.clone()));
        }
      }
      co_cols.push(SparseVec::from_pairs(pairs));
    }
    let labels = basis
      .iter()
      .enumerate()
      .map(|(j, b)| match b.entries() {
        [(i, c)] if c.is_one() => self.labels[*i].clone(),
        _ => format!("v{j}"),
      })
      .collect();
    let m = Self::new(&self.base, name, labels, action, SparseMatrix::from_columns(k * d, co_cols))?;
    Ok((m, sub.inclusion()))
  }

  /// Quotient by a subspace stable under the action and coaction.
  /// Returns the module and the quotient data (projection/section).
  pub fn quotient(&self, sub: Subspace<F>, name: impl Into<String>) -> Result<(Self, Quotient<F>), CrossedError> {
    let d = self.base.dim();
    for r in sub.basis() {
      for i in 0..d {
        if !sub.contains(&self.action[i].apply(r)) {
          return Err(CrossedError::NotStable(format!("relator span is not stable under the action of {}", self.base.label(i))));
        }
      }
      for (h, w) in self.split_by_base(&self.coact(r)) {
        if !sub.contains(&w) {
          return Err(CrossedError::NotStable(format!(
            "coaction is ill-defined on the quotient (component {})",
            self.base.label(h)
          )));
        }
      }
    }
    let quo = Quotient::new(sub);
    let reps = quo.representatives().to_vec();
    let k = reps.len();
    let action = (0..d)
      .map(|i| SparseMatrix::from_columns(k, reps.iter().map(|&r| quo.project(self.act_basis(i, r))).collect()))
      .collect();
    let co_cols = reps
      .iter()
      .map(|&r| {
        let mut pairs = Vec::new();
        for (h, w) in self.split_by_base(self.coaction.col(r)) {
          for (j, c) in quo.project(&w).iter() {
            pairs.push((j * d + h, c.clone()));
          }
        }
        SparseVec::from_pairs(pairs)
      })
      .collect();
    let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
    let m = Self::new(&self.base, name, labels, action, SparseMatrix::from_columns(k * d, co_cols))?;
    Ok((m, quo))
  }

  /// Checks that `f : self → other` is `H`-linear and `H`-colinear.
  pub fn is_morphism(&self, other: &Self, f: &SparseMatrix<F>) -> bool {
    let d = self.base.dim();
    let lifted = |w: &SparseVec<F>| -> SparseVec<F> {
      let mut pairs = Vec::new();
      for (k, c) in w.iter() {
        for (j, x) in f.col(k / d).iter() {
          pairs.push((j * d + k % d, c.clone() * x.clone()));
        }
      }
      SparseVec::from_pairs(pairs)
    };
    f.shape() == (other.dim(), self.dim())
      && (0..d).all(|i| f.mul(&self.action[i]) == other.action[i].mul(f))
      && (0..self.dim()).all(|m| other.coact(f.col(m)) == lifted(self.coaction.col(m)))
  }

  /// Direct sum of crossed modules over the same base.
  pub fn direct_sum(parts: &[Self], name: impl Into<String>) -> Result<Self, CrossedError> {
    let base = &parts.first().ok_or_else(|| CrossedError::Dimension("empty direct sum".into()))?.base;
    let d = base.dim();
    let n: usize = parts.iter().map(|p| p.dim()).sum();
    let mut labels = Vec::new();
    let mut offs = Vec::new();
    let mut acc = 0;
    for p in parts {
      offs.push(acc);
      acc += p.dim();
      labels.extend(p.labels.iter().cloned());
    }
    let action = (0..d).map(|i| SparseMatrix::block_diag(&parts.iter().map(|p| p.action[i].clone()).collect::<Vec<_>>())).collect();
    let mut co_cols = Vec::with_capacity(n);
    for (p, &off) in parts.iter().zip(&offs) {
      for m in 0..p.dim() {
        co_cols.push(SparseVec::from_pairs(p.coact_basis(m).map(|(m0, h, c)| ((m0 + off) * d + h, c.clone())).collect()));
      }
    }
    Self::new(base, name, labels, action, SparseMatrix::from_columns(n * d, co_cols))
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::crossed::{adjoint, coadjoint, one_dimensional, trivial};
  use crate::field::Q;

  #[test]
  fn standard_modules_are_modular() {
    for name in ["z2", "z3", "s3", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      for m in [adjoint(&h), coadjoint(&h)] {
        let rep = m.verify_all();
        assert!(rep.all_passed(), "{name} {}: {rep:?}", m.name());
      }
    }
    for name in ["z2", "s3"] {
      assert!(trivial(&HopfAlgebra::<Q>::builtin(name).unwrap()).verify_all().all_passed());
    }
    // S² ≠ Id: (1, ε) is not a modular pair in involution for Sweedler's algebra.
    let rep = trivial(&HopfAlgebra::<Q>::sweedler()).verify_all();
    assert_eq!(rep.failures().next().map(|c| c.name.as_str()), Some("crossed_condition"));
  }

  #[test]
  fn sign_with_group_like_coaction_is_crossed_not_modular() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let m = one_dimensional(&h, &[Q::from_i64(1), Q::from_i64(-1)], &SparseVec::unit(1)).unwrap();
    assert!(m.verify_crossed().all_passed());
    assert!(!m.verify_modular().all_passed());
    assert!(matches!(m.require_modular(), Err(CrossedError::NotModular(_))));
  }

  #[test]
  fn adjoint_of_z2_has_trivial_action() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let m = adjoint(&h);
    for i in 0..2 {
      assert_eq!(*m.action_matrix(i), SparseMatrix::identity(2));
    }
    let co: Vec<_> = m.coact_basis(1).map(|(a, b, c)| (a, b, c.clone())).collect();
    assert_eq!(co, vec![(1, 1, Q::from_i64(1))]);
    // Coadjoint of Z/3: trivial coaction on group-likes.
    let h3 = HopfAlgebra::<Q>::builtin("z3").unwrap();
    assert!(coadjoint(&h3).has_trivial_coaction());
  }
}
