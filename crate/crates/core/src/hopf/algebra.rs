use std::fmt;

use super::group::{permutation_sign, FiniteGroup};
use super::HopfError;
use crate::field::Field;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::report::{Check, Report};

/// A combination of pure tensors of basis elements (not normalized).
pub type Tensor<F> = Vec<(Vec<usize>, F)>;

/// A finite-dimensional Hopf algebra given by structure constants.
#[derive(Clone)]
pub struct HopfAlgebra<F> {
  name:     String,
  labels:   Vec<String>,
  /// `mult[i * dim + j] = e_i e_j`.
  mult:     Vec<SparseVec<F>>,
  unit:     SparseVec<F>,
  /// `comult[i] = Δ(e_i)` as `(a, b, c)` meaning `c · e_a ⊗ e_b`.
  comult:   Vec<Vec<(usize, usize, F)>>,
  counit:   Vec<F>,
  antipode: SparseMatrix<F>,
  group:    Option<FiniteGroup>,
}

impl<F> fmt::Debug for HopfAlgebra<F> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.debug_struct("HopfAlgebra").field("name", &self.name).field("basis", &self.labels).finish()
  }
}

impl<F: Field> HopfAlgebra<F> {
  /// Assembles a Hopf algebra from structure constants. Only shapes are
  /// checked here; run [`HopfAlgebra::verify`] for the axioms.
  #[allow(clippy::too_many_arguments)]
  pub fn from_parts(
    name: impl Into<String>,
    labels: Vec<String>,
    mult: &[(usize, usize, usize, F)],
    unit: SparseVec<F>,
    comult: &[(usize, usize, usize, F)],
    counit: Vec<F>,
    antipode: SparseMatrix<F>,
  ) -> Result<Self, HopfError> {
    let d = labels.len();
    if d == 0 {
      return Err(HopfError::Dimension("a Hopf algebra needs a nonempty basis".into()));
    }
    let bad = |what: &str| Err(HopfError::Dimension(format!("{what} refers to an index outside the basis of size {d}")));
    if mult.iter().any(|&(i, j, k, _)| i >= d || j >= d || k >= d) {
      return bad("multiplication");
    }
    if comult.iter().any(|&(i, a, b, _)| i >= d || a >= d || b >= d) {
      return bad("comultiplication");
    }
    if unit.max_index().is_some_and(|m| m >= d) {
      return bad("unit");
    }
    if counit.len() != d {
      return Err(HopfError::Dimension(format!("counit has length {}, expected {d}", counit.len())));
    }
    if antipode.shape() != (d, d) {
      return Err(HopfError::Dimension(format!("antipode has shape {:?}, expected {d}x{d}", antipode.shape())));
    }
    let mut table: Vec<Vec<(usize, F)>> = vec![Vec::new(); d * d];
    for (i, j, k, c) in mult {
      table[i * d + j].push((*k, c.clone()));
    }
    let mut co: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); d];
    for (i, a, b, c) in comult {
      co[*i].push((*a, *b, c.clone()));
    }
    let co = co
      .into_iter()
      .map(|terms| {
        let v = SparseVec::from_pairs(terms.into_iter().map(|(a, b, c)| (a * d + b, c)).collect());
        v.iter().map(|(k, c)| (k / d, k % d, c.clone())).collect()
      })
      .collect();
    Ok(HopfAlgebra {
      name: name.into(),
      labels,
      mult: table.into_iter().map(SparseVec::from_pairs).collect(),
      unit,
      comult: co,
      counit,
      antipode,
      group: None,
    })
  }

  /// The group algebra `kG`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
  pub fn group_algebra(g: &FiniteGroup) -> Self {
    let n = g.order();
    let mult: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, g.mul(a, b), F::one()))).collect();
    let comult: Vec<_> = (0..n).map(|a| (a, a, a, F::one())).collect();
    let antipode = SparseMatrix::from_columns(n, (0..n).map(|a| SparseVec::unit(g.inverse(a))).collect());
    let mut h = Self::from_parts(
      format!("k[{}]", n),
      g.elements.clone(),
      &mult,
      SparseVec::unit(g.identity()),
      &comult,
      vec![F::one(); n],
      antipode,
    )
    .expect("group tables give consistent shapes");
    h.group = Some(g.clone());
    h
  }

  /// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
  /// `g² = 1`, `x² = 0`, `xg = −gx`, `g` group-like and `Δx = x⊗1 + g⊗x`.
  pub fn sweedler() -> Self {
    let o = F::one;
    let m = || -F::one();
    let mult = vec![
      (0, 0, 0, o()),
      (0, 1, 1, o()),
      (0, 2, 2, o()),
      (0, 3, 3, o()),
      (1, 0, 1, o()),
      (1, 1, 0, o()),
      (1, 2, 3, o()),
      (1, 3, 2, o()),
      (2, 0, 2, o()),
      (2, 1, 3, m()),
      (3, 0, 3, o()),
      (3, 1, 2, m()),
    ];
    let comult = vec![
      (0, 0, 0, o()),
      (1, 1, 1, o()),
      (2, 2, 0, o()),
      (2, 1, 2, o()),
      (3, 3, 1, o()),
      (3, 0, 3, o()),
    ];
    let antipode = SparseMatrix::from_columns(
      4,
      vec![SparseVec::unit(0), SparseVec::unit(1), SparseVec::single(3, m()), SparseVec::unit(2)],
    );
    Self::from_parts(
      "sweedler",
      vec!["1".into(), "g".into(), "x".into(), "gx".into()],
      &mult,
      SparseVec::unit(0),
      &comult,
      vec![o(), o(), F::zero(), F::zero()],
      antipode,
    )
    .expect("fixed structure constants")
  }

  /// Named Hopf algebras: the group algebras of [`FiniteGroup::builtin`] and `sweedler`.
  pub fn builtin(name: &str) -> Option<Self> {
    if name == "sweedler" {
      return Some(Self::sweedler());
    }
    let key = name.strip_prefix('k').unwrap_or(name);
    FiniteGroup::builtin(key).map(|g| Self::group_algebra(&g).named(key))
  }

  pub fn named(mut self, name: impl Into<String>) -> Self {
    self.name = name.into();
    self
  }

  pub fn name(&self) -> &str { &self.name }

  pub fn dim(&self) -> usize { self.labels.len() }

  pub fn labels(&self) -> &[String] { &self.labels }

  pub fn label(&self, i: usize) -> &str { &self.labels[i] }

  /// The underlying group when this is a group algebra.
  pub fn group(&self) -> Option<&FiniteGroup> { self.group.as_ref() }

  pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> { &self.mult[i * self.dim() + j] }

  pub fn mul(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
    let mut pairs = Vec::new();
    for (i, x) in a.iter() {
      for (j, y) in b.iter() {
        for (k, z) in self.mul_basis(i, j).iter() {
          pairs.push((k, x.clone() * y.clone() * z.clone()));
        }
      }
    }
    SparseVec::from_pairs(pairs)
  }

  pub fn unit(&self) -> &SparseVec<F> { &self.unit }

  /// Index of the unit when it is a basis vector.
  pub fn unit_index(&self) -> Option<usize> {
    match self.unit.entries() {
      [(i, c)] if c.is_one() => Some(*i),
      _ => None,
    }
  }

  pub fn coproduct(&self, i: usize) -> &[(usize, usize, F)] { &self.comult[i] }

  pub fn counit(&self, i: usize) -> &F { &self.counit[i] }

  pub fn counit_vec(&self) -> &[F] { &self.counit }

  pub fn counit_of(&self, v: &SparseVec<F>) -> F {
    v.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * self.counit[i].clone())
  }

  pub fn antipode(&self) -> &SparseMatrix<F> { &self.antipode }

  pub fn antipode_of(&self, v: &SparseVec<F>) -> SparseVec<F> { self.antipode.apply(v) }

  /// Left multiplication by `e_i` as a matrix.
  pub fn left_mul_matrix(&self, a: &SparseVec<F>) -> SparseMatrix<F> {
    SparseMatrix::from_columns(self.dim(), (0..self.dim()).map(|j| self.mul(a, &SparseVec::unit(j))).collect())
  }

  /// Iterated coproduct of `e_i` into `legs` tensor factors (left-nested).
  pub fn iterated_coproduct(&self, i: usize, legs: usize) -> Tensor<F> {
    assert!(legs >= 1);
    let mut terms: Tensor<F> = vec![(vec![i], F::one())];
    for _ in 1..legs {
      let mut next = Vec::new();
      for (idx, c) in terms {
        for (a, b, x) in self.coproduct(idx[0]) {
          let mut v = Vec::with_capacity(idx.len() + 1);
          v.push(*a);
          v.push(*b);
          v.extend_from_slice(&idx[1..]);
          next.push((v, c.clone() * x.clone()));
        }
      }
      terms = normalize(next);
    }
    terms
  }

  /// Iterated coproduct of a vector.
  pub fn iterated_coproduct_vec(&self, v: &SparseVec<F>, legs: usize) -> Tensor<F> {
    let mut out = Vec::new();
    for (i, c) in v.iter() {
      for (idx, x) in self.iterated_coproduct(i, legs) {
        out.push((idx, c.clone() * x));
      }
    }
    normalize(out)
  }

  /// Slotwise product `(a_1 b_1) ⊗ … ⊗ (a_k b_k)` of two pure tensors.
  pub fn slotwise_mul(&self, a: &[usize], b: &[usize]) -> Tensor<F> {
    assert_eq!(a.len(), b.len());
    expand(&a.iter().zip(b).map(|(&x, &y)| self.mul_basis(x, y).clone()).collect::<Vec<_>>())
  }

  pub fn is_cocommutative(&self) -> bool {
    (0..self.dim()).all(|i| {
      let d = self.dim();
      let v = SparseVec::from_pairs(self.coproduct(i).iter().map(|(a, b, c)| (a * d + b, c.clone())).collect());
      let w = SparseVec::from_pairs(self.coproduct(i).iter().map(|(a, b, c)| (b * d + a, c.clone())).collect());
      v == w
    })
  }

  pub fn is_commutative(&self) -> bool {
    (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
  }

  /// `Δσ = σ⊗σ` and `ε(σ) = 1`.
  pub fn is_group_like(&self, v: &SparseVec<F>) -> bool {
    if v.is_zero() {
      return false;
    }
    let d = self.dim();
    let lhs = SparseVec::from_pairs(
      v.iter()
        .flat_map(|(i, c)| self.coproduct(i).iter().map(move |(a, b, x)| (a * d + b, c.clone() * x.clone())))
        .collect(),
    );
    let mut rhs = Vec::new();
    for (i, x) in v.iter() {
      for (j, y) in v.iter() {
        rhs.push((i * d + j, x.clone() * y.clone()));
      }
    }
    lhs == SparseVec::from_pairs(rhs)
  }

  /// Opposite algebra and coalgebra structure, same antipode.
  pub fn op_cop(&self) -> Self {
    let d = self.dim();
    let mut mult = Vec::new();
    for i in 0..d {
      for j in 0..d {
        for (k, c) in self.mul_basis(j, i).iter() {
          mult.push((i, j, k, c.clone()));
        }
      }
    }
    let comult: Vec<_> =
      (0..d).flat_map(|i| self.coproduct(i).iter().map(move |(a, b, c)| (i, *b, *a, c.clone()))).collect();
    let mut h = Self::from_parts(
      format!("{}^opcop", self.name),
      self.labels.clone(),
      &mult,
      self.unit.clone(),
      &comult,
      self.counit.clone(),
      self.antipode.clone(),
    )
    .expect("same shapes");
    if let Some(g) = &self.group {
      if g.is_abelian() {
        h.group = Some(g.clone());
      }
    }
    h
  }

  fn tensor2(&self, terms: impl IntoIterator<Item = (usize, usize, F)>) -> SparseVec<F> {
    let d = self.dim();
    SparseVec::from_pairs(terms.into_iter().map(|(a, b, c)| (a * d + b, c)).collect())
  }

  fn tensor3(&self, terms: impl IntoIterator<Item = (usize, usize, usize, F)>) -> SparseVec<F> {
    let d = self.dim();
    SparseVec::from_pairs(terms.into_iter().map(|(a, b, c, x)| ((a * d + b) * d + c, x)).collect())
  }

  fn coproduct_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
    self.tensor2(v.iter().flat_map(|(i, c)| self.coproduct(i).iter().map(move |(a, b, x)| (*a, *b, c.clone() * x.clone()))))
  }

  /// Checks the seven Hopf algebra axioms; each failing check names a witness.
  pub fn verify(&self) -> Report {
    let d = self.dim();
    let lab = |i: usize| self.labels[i].clone();
    let mut rep = Report::new();

    let assoc = (0..d).flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k)))).find(|&(i, j, k)| {
      let lhs = self.mul(self.mul_basis(i, j), &SparseVec::unit(k));
      let rhs = self.mul(&SparseVec::unit(i), self.mul_basis(j, k));
      lhs != rhs
    });
    rep.push(Check::from_witness("associativity", assoc.map(|(i, j, k)| format!("({}, {}, {})", lab(i), lab(j), lab(k)))));

    let unital = (0..d).find(|&i| {
      let e = SparseVec::unit(i);
      self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
    });
    rep.push(Check::from_witness("unitality", unital.map(lab)));

    let coassoc = (0..d).find(|&i| {
      let left = self.tensor3(
        self.coproduct(i).iter().flat_map(|(a, b, c)| {
          self.coproduct(*a).iter().map(move |(x, y, z)| (*x, *y, *b, c.clone() * z.clone()))
        }),
      );
      let right = self.tensor3(
        self.coproduct(i).iter().flat_map(|(a, b, c)| {
          self.coproduct(*b).iter().map(move |(x, y, z)| (*a, *x, *y, c.clone() * z.clone()))
        }),
      );
      left != right
    });
    rep.push(Check::from_witness("coassociativity", coassoc.map(lab)));

    let counital = (0..d).find(|&i| {
      let left = SparseVec::from_pairs(
        self.coproduct(i).iter().map(|(a, b, c)| (*b, self.counit[*a].clone() * c.clone())).collect(),
      );
      let right = SparseVec::from_pairs(
        self.coproduct(i).iter().map(|(a, b, c)| (*a, self.counit[*b].clone() * c.clone())).collect(),
      );
      left != SparseVec::unit(i) || right != SparseVec::unit(i)
    });
    rep.push(Check::from_witness("counitality", counital.map(lab)));

    let delta_unit = self.coproduct_vec(&self.unit);
    let unit_unit = self.tensor2(
      self.unit.iter().flat_map(|(a, x)| self.unit.iter().map(move |(b, y)| (a, b, x.clone() * y.clone()))),
    );
    let comult_mult = if delta_unit != unit_unit {
      Some("unit".to_string())
    } else {
      (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).find(|&(i, j)| {
        let lhs = self.coproduct_vec(self.mul_basis(i, j));
        let mut pairs = Vec::new();
        for (a, b, x) in self.coproduct(i) {
          for (c, e, y) in self.coproduct(j) {
            let xy = x.clone() * y.clone();
            for (p, u) in self.mul_basis(*a, *c).iter() {
              for (q, v) in self.mul_basis(*b, *e).iter() {
                pairs.push((p * d + q, xy.clone() * u.clone() * v.clone()));
              }
            }
          }
        }
        lhs != SparseVec::from_pairs(pairs)
      })
      .map(|(i, j)| format!("({}, {})", lab(i), lab(j)))
    };
    rep.push(Check::from_witness("comultiplication_multiplicative", comult_mult));

    let counit_mult = if !self.counit_of(&self.unit).is_one() {
      Some("unit".to_string())
    } else {
      (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| self.counit_of(self.mul_basis(i, j)) != self.counit[i].clone() * self.counit[j].clone())
        .map(|(i, j)| format!("({}, {})", lab(i), lab(j)))
    };
    rep.push(Check::from_witness("counit_multiplicative", counit_mult));

    let antipode = (0..d).find(|&i| {
      let target = self.unit.scale(&self.counit[i]);
      let mut left = SparseVec::zero();
      let mut right = SparseVec::zero();
      for (a, b, c) in self.coproduct(i) {
        let sa = self.antipode_of(&SparseVec::unit(*a));
        let sb = self.antipode_of(&SparseVec::unit(*b));
        left = left.add_scaled(&self.mul(&sa, &SparseVec::unit(*b)), c);
        right = right.add_scaled(&self.mul(&SparseVec::unit(*a), &sb), c);
      }
      left != target || right != target
    });
    rep.push(Check::from_witness("antipode", antipode.map(lab)));
    rep
  }

  /// Fails with the first violated axiom.
  pub fn verified(self) -> Result<Self, HopfError> {
    let failure = self.verify().failures().next().map(|c| format!("{} fails at {}", c.name, c.witness.clone().unwrap_or_default()));
    match failure {
      None => Ok(self),
      Some(msg) => Err(HopfError::Axiom(msg)),
    }
  }

  /// The sign character of a permutation group algebra (`None` otherwise).
  pub fn sign_character(&self) -> Option<Vec<F>> {
    let g = self.group.as_ref()?;
    Some(g.elements.iter().map(|l| F::from_i64(permutation_sign(l))).collect())
  }

  /// Checks that `chi` (values on the basis) is an algebra map `H → k`.
  pub fn is_character(&self, chi: &[F]) -> bool {
    let eval = |v: &SparseVec<F>| v.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * chi[i].clone());
    chi.len() == self.dim()
      && eval(&self.unit).is_one()
      && (0..self.dim()).all(|i| (0..self.dim()).all(|j| eval(self.mul_basis(i, j)) == chi[i].clone() * chi[j].clone()))
  }

  pub fn dim_pow(&self, n: usize) -> usize { self.dim().pow(n as u32) }
}

/// Merges equal index tuples and drops zero coefficients.
pub fn normalize<F: Field>(mut t: Tensor<F>) -> Tensor<F> {
  t.sort_by(|a, b| a.0.cmp(&b.0));
  let mut out: Tensor<F> = Vec::with_capacity(t.len());
  for (idx, c) in t {
    match out.last_mut() {
      Some((j, acc)) if *j == idx => *acc = acc.clone() + c,
      _ => out.push((idx, c)),
    }
  }
  out.retain(|(_, c)| !c.is_zero());
  out
}

/// Cartesian expansion of a tensor product of vectors.
pub fn expand<F: Field>(factors: &[SparseVec<F>]) -> Tensor<F> {
  let mut terms: Tensor<F> = vec![(Vec::with_capacity(factors.len()), F::one())];
  for f in factors {
    let mut next = Vec::with_capacity(terms.len() * f.nnz());
    for (idx, c) in &terms {
      for (i, x) in f.iter() {
        let mut v = idx.clone();
        v.push(i);
        next.push((v, c.clone() * x.clone()));
      }
    }
    terms = next;
  }
  terms
}

/// Row-major flat index of a multi-index with the given factor dimensions.
pub fn flat_index(idx: &[usize], dims: &[usize]) -> usize {
  debug_assert_eq!(idx.len(), dims.len());
  idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub fn multi_index(mut k: usize, dims: &[usize]) -> Vec<usize> {
  let mut out = vec![0; dims.len()];
  for (slot, &d) in dims.iter().enumerate().rev() {
    out[slot] = k % d;
    k /= d;
  }
  out
}

/// Flattens a tensor into a sparse vector with the given factor dimensions.
pub fn tensor_to_vec<F: Field>(t: &Tensor<F>, dims: &[usize]) -> SparseVec<F> {
  SparseVec::from_pairs(t.iter().map(|(idx, c)| (flat_index(idx, dims), c.clone())).collect())
}

pub fn vec_to_tensor<F: Field>(v: &SparseVec<F>, dims: &[usize]) -> Tensor<F> {
  v.iter().map(|(k, c)| (multi_index(k, dims), c.clone())).collect()
}

/// Right action of `H` on `H^{⊗(n+1)}` through the iterated coproduct.
#[derive(Clone, Debug)]
pub struct DiagonalAction<F> {
  pub factors: usize,
  /// `action[i]` is right multiplication by `e_i`.
  pub action:  Vec<SparseMatrix<F>>,
}

impl<F: Field> HopfAlgebra<F> {
  /// `(h¹,…,h^{n+1})·h = Σ(h¹h_(1),…,h^{n+1}h_(n+1))`.
  pub fn diagonal_power(&self, n: usize) -> DiagonalAction<F> {
    let k = n + 1;
    let dims = vec![self.dim(); k];
    let size = self.dim_pow(k);
    let action = (0..self.dim())
      .map(|i| {
        let legs = self.iterated_coproduct(i, k);
        SparseMatrix::from_fn(size, size, |col| {
          let u = multi_index(col, &dims);
          let mut out = Vec::new();
          for (leg, c) in &legs {
            for (idx, x) in self.slotwise_mul(&u, leg) {
              out.push((flat_index(&idx, &dims), c.clone() * x));
            }
          }
          SparseVec::from_pairs(out)
        })
      })
      .collect();
    DiagonalAction { factors: k, action }
  }

  /// `φ_n((h¹,…,hⁿ)⊗h) = Σ(h¹h_(1),…,hⁿh_(n),h_(n+1))` and its inverse
  /// `(h¹,…,h^{n+1}) ↦ Σ(h¹S(h^{n+1}_(n)),…,hⁿS(h^{n+1}_(1)))⊗h^{n+1}_(n+1)`.
  pub fn hopf_module_phi(&self, n: usize) -> (SparseMatrix<F>, SparseMatrix<F>) {
    assert!(n >= 1);
    let k = n + 1;
    let dims = vec![self.dim(); k];
    let size = self.dim_pow(k);
    let phi = SparseMatrix::from_fn(size, size, |col| {
      let u = multi_index(col, &dims);
      let mut out = Vec::new();
      for (leg, c) in self.iterated_coproduct(u[n], k) {
        let mut factors: Vec<SparseVec<F>> = (0..n).map(|j| self.mul_basis(u[j], leg[j]).clone()).collect();
        factors.push(SparseVec::unit(leg[n]));
        for (idx, x) in expand(&factors) {
          out.push((flat_index(&idx, &dims), c.clone() * x));
        }
      }
      SparseVec::from_pairs(out)
    });
    let phi_inv = SparseMatrix::from_fn(size, size, |col| {
      let u = multi_index(col, &dims);
      let mut out = Vec::new();
      for (leg, c) in self.iterated_coproduct(u[n], k) {
        let mut factors: Vec<SparseVec<F>> =
          (0..n).map(|j| self.mul(&SparseVec::unit(u[j]), &self.antipode_of(&SparseVec::unit(leg[n - 1 - j])))).collect();
        factors.push(SparseVec::unit(leg[n]));
        for (idx, x) in expand(&factors) {
          out.push((flat_index(&idx, &dims), c.clone() * x));
        }
      }
      SparseVec::from_pairs(out)
    });
    (phi, phi_inv)
  }
}

impl<F: Field> DiagonalAction<F> {
  /// Right-module axioms: `(u·a)·b = u·(ab)` and the unit acts as the identity.
  pub fn verify(&self, h: &HopfAlgebra<F>) -> Report {
    let size = self.action.first().map_or(0, |m| m.rows());
    let act = |v: &SparseVec<F>| -> SparseMatrix<F> {
      let mut acc = SparseMatrix::zero(size, size);
      for (i, c) in v.iter() {
        acc = acc.add(&self.action[i].scale(c));
      }
      acc
    };
    let unit = Check::from_witness(
      "unit_acts_trivially",
      (act(h.unit()) != SparseMatrix::identity(size)).then(|| "unit".to_string()),
    );
    let d = h.dim();
    let assoc = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).find(|&(a, b)| {
      self.action[b].mul(&self.action[a]) != act(h.mul_basis(a, b))
    });
    let assoc = Check::from_witness(
      "action_associative",
      assoc.map(|(a, b)| format!("({}, {})", h.label(a), h.label(b))),
    );
    Report { checks: vec![unit, assoc] }
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;

  #[test]
  fn builtin_algebras_pass_axioms() {
    for name in ["z2", "z3", "z4", "z2xz2", "s3", "d4", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      let rep = h.verify();
      assert!(rep.all_passed(), "{name}: {rep:?}");
      assert!(h.op_cop().verify().all_passed(), "{name} op_cop");
    }
  }

  #[test]
  fn broken_comultiplication_is_caught() {
    let g = FiniteGroup::symmetric3();
    let h = HopfAlgebra::<Q>::group_algebra(&g);
    let t = g.find("(12)").unwrap();
    let e = g.identity();
    let mut mult = Vec::new();
    for a in 0..6 {
      for b in 0..6 {
        for (k, c) in h.mul_basis(a, b).iter() {
          mult.push((a, b, k, c.clone()));
        }
      }
    }
    let comult: Vec<_> = (0..6).map(|a| if a == t { (a, a, e, Q::from_i64(1)) } else { (a, a, a, Q::from_i64(1)) }).collect();
    let bad = HopfAlgebra::from_parts("bad", g.elements.clone(), &mult, h.unit().clone(), &comult, vec![Q::from_i64(1); 6], h.antipode().clone()).unwrap();
    let rep = bad.verify();
    let c = rep.get("counitality").unwrap();
    assert!(!c.passed);
    assert_eq!(c.witness.as_deref(), Some("(12)"));
  }

  #[test]
  fn antipode_and_cocommutativity() {
    let z3 = HopfAlgebra::<Q>::builtin("z3").unwrap();
    assert_eq!(z3.antipode_of(&SparseVec::unit(1)), SparseVec::unit(2));
    let z2 = HopfAlgebra::<Q>::builtin("z2").unwrap();
    assert_eq!(*z2.antipode(), SparseMatrix::identity(2));
    assert!(HopfAlgebra::<Q>::builtin("s3").unwrap().is_cocommutative());
    assert!(!HopfAlgebra::<Q>::builtin("s3").unwrap().is_commutative());
    assert!(!HopfAlgebra::<Q>::sweedler().is_cocommutative());
  }

  #[test]
  fn diagonal_action_on_z2_squared() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let act = h.diagonal_power(1);
    assert!(act.verify(&h).all_passed());
    // (1,1)↔(g,g), (1,g)↔(g,1): flat indices 0↔3, 1↔2.
    let expected = SparseMatrix::from_columns(4, vec![SparseVec::unit(3), SparseVec::unit(2), SparseVec::unit(1), SparseVec::unit(0)]);
    assert_eq!(act.action[1], expected);
    let act0 = h.diagonal_power(0);
    assert_eq!(act0.action[1], h.left_mul_matrix(&SparseVec::unit(1)));
  }

  #[test]
  fn phi_is_invertible() {
    for name in ["s3", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      for n in 1..=2 {
        let (phi, inv) = h.hopf_module_phi(n);
        let id = SparseMatrix::identity(phi.rows());
        assert_eq!(phi.mul(&inv), id, "{name} n={n}");
        assert_eq!(inv.mul(&phi), id, "{name} n={n}");
      }
    }
  }
}
