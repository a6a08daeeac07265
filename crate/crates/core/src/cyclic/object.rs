use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::CyclicError;
use crate::field::Field;
use crate::linalg::{Bicomplex, ChainComplex, LinalgError, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// Operators of a cyclic object on basis vectors, degree by degree.
pub trait CyclicSpec<F>: Sync {
  fn dim(&self, n: usize) -> usize;
  /// `δ_i : C_n → C_{n-1}` on basis vector `x`.
  fn face(&self, n: usize, i: usize, x: usize) -> SparseVec<F>;
  /// `σ_i : C_n → C_{n+1}` on basis vector `x`.
  fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec<F>;
  /// `τ_n : C_n → C_n` on basis vector `x`.
  fn cyclic(&self, n: usize, x: usize) -> SparseVec<F>;
}

/// A cyclic object truncated at degree `N`: carriers `C_0..C_N`, faces in
/// degrees `1..=N`, degeneracies out of degrees `0..N`, cyclic operators in
/// degrees `0..=N`.
#[derive(Clone, Debug)]
pub struct CyclicObject<F> {
  pub name:     String,
  dims:         Vec<usize>,
  faces:        Vec<Vec<SparseMatrix<F>>>,
  degeneracies: Vec<Vec<SparseMatrix<F>>>,
  cyclic:       Vec<SparseMatrix<F>>,
}

/// Which operators to materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operators {
  All,
  /// Faces and cyclic operators only (enough for every homology).
  Homology,
}

impl<F: Field> CyclicObject<F> {
  pub fn build(name: impl Into<String>, spec: &impl CyclicSpec<F>, max_degree: usize, ops: Operators) -> Self {
    let dims: Vec<usize> = (0..=max_degree).map(|n| spec.dim(n)).collect();
    let faces = (0..=max_degree)
      .into_par_iter()
      .map(|n| {
        if n == 0 {
          return Vec::new();
        }
        (0..=n).into_par_iter().map(|i| SparseMatrix::from_fn(dims[n - 1], dims[n], |x| spec.face(n, i, x))).collect()
      })
      .collect();
    let degeneracies = match ops {
      Operators::All => (0..max_degree)
        .into_par_iter()
        .map(|n| (0..=n).into_par_iter().map(|i| SparseMatrix::from_fn(dims[n + 1], dims[n], |x| spec.degeneracy(n, i, x))).collect())
        .collect(),
      Operators::Homology => Vec::new(),
    };
    let cyclic = (0..=max_degree).into_par_iter().map(|n| SparseMatrix::from_fn(dims[n], dims[n], |x| spec.cyclic(n, x))).collect();
    CyclicObject { name: name.into(), dims, faces, degeneracies, cyclic }
  }

  pub fn max_degree(&self) -> usize { self.dims.len() - 1 }

  pub fn dims(&self) -> &[usize] { &self.dims }

  pub fn dim(&self, n: usize) -> usize { self.dims[n] }

  pub fn face(&self, n: usize, i: usize) -> &SparseMatrix<F> { &self.faces[n][i] }

  pub fn degeneracy(&self, n: usize, i: usize) -> Option<&SparseMatrix<F>> { self.degeneracies.get(n).map(|v| &v[i]) }

  pub fn tau(&self, n: usize) -> &SparseMatrix<F> { &self.cyclic[n] }

  pub fn has_degeneracies(&self) -> bool { !self.degeneracies.is_empty() }

  /// `b = Σ_{i=0}^{n} (−1)^i δ_i`.
  pub fn b(&self, n: usize) -> SparseMatrix<F> { self.alternating(n, n) }

  /// `b' = Σ_{i=0}^{n-1} (−1)^i δ_i`.
  pub fn b_prime(&self, n: usize) -> SparseMatrix<F> { self.alternating(n, n - 1) }

  fn alternating(&self, n: usize, last: usize) -> SparseMatrix<F> {
    let mut triplets = Vec::new();
    for i in 0..=last {
      let sign = if i % 2 == 0 { F::one() } else { -F::one() };
      for (x, col) in self.faces[n][i].columns().iter().enumerate() {
        for (y, c) in col.iter() {
          triplets.push((y, x, sign.clone() * c.clone()));
        }
      }
    }
    SparseMatrix::from_triplets(self.dims[n - 1], self.dims[n], triplets)
  }

  /// `t_n = (−1)^n τ_n`.
  pub fn t(&self, n: usize) -> SparseMatrix<F> {
    if n % 2 == 0 {
      self.cyclic[n].clone()
    } else {
      self.cyclic[n].neg()
    }
  }

  /// `N = Σ_{j=0}^{n} t_n^j`.
  pub fn norm(&self, n: usize) -> SparseMatrix<F> {
    let t = self.t(n);
    let mut acc = SparseMatrix::identity(self.dims[n]);
    let mut power = SparseMatrix::identity(self.dims[n]);
    for _ in 0..n {
      power = t.mul(&power);
      acc = acc.add(&power);
    }
    acc
  }

  /// The Hochschild complex `(C_*, b)` in degrees `0..=N`.
  pub fn hochschild_complex(&self) -> Result<ChainComplex<F>, LinalgError> {
    let diffs = (1..=self.max_degree()).into_par_iter().map(|n| self.b(n)).collect();
    ChainComplex::new(self.dims.clone(), diffs)
  }

  /// The `b'` complex in degrees `0..=N`.
  pub fn bar_prime_complex(&self) -> Result<ChainComplex<F>, LinalgError> {
    let diffs = (1..=self.max_degree()).into_par_iter().map(|n| self.b_prime(n)).collect();
    ChainComplex::new(self.dims.clone(), diffs)
  }

  /// `HH_n` for `n` in `range`.
  pub fn hochschild(&self, range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
    self.check_truncation(*range.end())?;
    Ok(self.hochschild_complex()?.homology_dims(range)?)
  }

  fn check_truncation(&self, hi: usize) -> Result<(), CyclicError> {
    if hi + 1 > self.max_degree() {
      return Err(LinalgError::InsufficientTruncation { requested: hi, available: self.max_degree().checked_sub(1) }.into());
    }
    Ok(())
  }

  /// Connes complex `C^λ_n = C_n / Im(1 − t_n)` with the induced `b`.
  pub fn connes_complex(&self) -> Result<ChainComplex<F>, CyclicError> {
    if F::CHARACTERISTIC != 0 {
      return Err(CyclicError::PositiveCharacteristic(F::CHARACTERISTIC));
    }
    let quotients: Vec<Quotient<F>> = (0..=self.max_degree())
      .into_par_iter()
      .map(|n| {
        let rel = SparseMatrix::identity(self.dims[n]).sub(&self.t(n));
        Quotient::new(Subspace::column_space(&rel))
      })
      .collect();
    let diffs: Vec<SparseMatrix<F>> = (1..=self.max_degree())
      .into_par_iter()
      .map(|n| {
        let b = self.b(n);
        quotients[n].induced(&quotients[n - 1], |r| b.col(r).clone())
      })
      .collect();
    Ok(ChainComplex::new(quotients.iter().map(|q| q.dim()).collect(), diffs)?)
  }

  /// `HC_n` through the Connes complex.
  pub fn hc_connes(&self, range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
    self.check_truncation(*range.end())?;
    Ok(self.connes_complex()?.homology_dims(range)?)
  }

  /// Tsygan bicomplex with cells `(p, q)`, `p + q ≤ N`: even columns `(C, b)`,
  /// odd columns `(C, −b')`, horizontal maps `1 − t` out of odd columns and
  /// `N` out of even columns.
  pub fn tsygan_bicomplex(&self) -> Bicomplex<F> {
    let top = self.max_degree();
    let mut bc = Bicomplex::new();
    let b: Vec<Option<SparseMatrix<F>>> = (0..=top).map(|q| (q >= 1).then(|| self.b(q))).collect();
    let bp: Vec<Option<SparseMatrix<F>>> = (0..=top).map(|q| (q >= 1).then(|| self.b_prime(q).neg())).collect();
    let one_minus_t: Vec<SparseMatrix<F>> = (0..=top).map(|q| SparseMatrix::identity(self.dims[q]).sub(&self.t(q))).collect();
    let norm: Vec<SparseMatrix<F>> = (0..=top).map(|q| self.norm(q)).collect();
    for p in 0..=top {
      for q in 0..=top - p {
        bc.cells.insert((p, q), self.dims[q]);
        if q >= 1 {
          let v = if p % 2 == 0 { b[q].clone() } else { bp[q].clone() };
          bc.vertical.insert((p, q), v.expect("q ≥ 1"));
        }
        if p >= 1 {
          let h = if p % 2 == 1 { one_minus_t[q].clone() } else { norm[q].clone() };
          bc.horizontal.insert((p, q), h);
        }
      }
    }
    bc
  }

  /// `HC_n` as the homology of the total complex of the Tsygan bicomplex.
  pub fn hc_bicomplex(&self, range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
    self.check_truncation(*range.end())?;
    let bc = self.tsygan_bicomplex();
    bc.verify()?;
    Ok(bc.total_complex(*range.end())?.homology_dims(range)?)
  }

  /// Homology of the `b'` columns (expected to vanish).
  pub fn b_prime_homology(&self, range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
    self.check_truncation(*range.end())?;
    Ok(self.bar_prime_complex()?.homology_dims(range)?)
  }

  /// The simplicial and cyclic identities on every degree where all terms
  /// are available, and `τ_n^{n+1} = Id`.
  pub fn identity_report(&self) -> Report {
    let top = self.max_degree();
    let mut rep = Report::new();
    let first = |cases: Vec<(String, bool)>| cases.into_iter().find(|(_, ok)| !ok).map(|(w, _)| w);
    let pairs = |n: usize| (0..=n).flat_map(move |j| (0..=n).map(move |i| (i, j))).collect::<Vec<_>>();

    let ff: Vec<(String, bool)> = (2..=top)
      .into_par_iter()
      .flat_map_iter(|n| {
        pairs(n).into_iter().filter(|(i, j)| i < j).map(move |(i, j)| {
          let ok = self.faces[n - 1][i].mul(&self.faces[n][j]) == self.faces[n - 1][j - 1].mul(&self.faces[n][i]);
          (format!("δ_{i}δ_{j} on C_{n}"), ok)
        })
      })
      .collect();
    rep.push(Check::from_witness("face_face", first(ff)));

    if self.has_degeneracies() {
      let ss: Vec<(String, bool)> = (0..top.saturating_sub(1))
        .into_par_iter()
        .flat_map_iter(|n| {
          pairs(n).into_iter().filter(|(i, j)| i <= j).map(move |(i, j)| {
            let ok = self.degeneracies[n + 1][i].mul(&self.degeneracies[n][j])
              == self.degeneracies[n + 1][j + 1].mul(&self.degeneracies[n][i]);
            (format!("σ_{i}σ_{j} on C_{n}"), ok)
          })
        })
        .collect();
      rep.push(Check::from_witness("degeneracy_degeneracy", first(ss)));

      let fs: Vec<(String, bool)> = (0..top)
        .into_par_iter()
        .flat_map_iter(|n| {
          (0..=n).flat_map(move |j| (0..=n + 1).map(move |i| (i, j))).filter_map(move |(i, j)| {
            let lhs = self.faces[n + 1][i].mul(&self.degeneracies[n][j]);
            let rhs = if i < j {
              if n == 0 {
                return None;
              }
              self.degeneracies[n - 1][j - 1].mul(&self.faces[n][i])
            } else if i == j || i == j + 1 {
              SparseMatrix::identity(self.dims[n])
            } else {
              self.degeneracies[n - 1][j].mul(&self.faces[n][i - 1])
            };
            Some((format!("δ_{i}σ_{j} on C_{n}"), lhs == rhs))
          })
        })
        .collect();
      rep.push(Check::from_witness("face_degeneracy", first(fs)));
    }

    let fc: Vec<(String, bool)> = (1..=top)
      .into_par_iter()
      .flat_map_iter(|n| {
        (0..=n).map(move |i| {
          let lhs = self.faces[n][i].mul(&self.cyclic[n]);
          let rhs = if i == 0 { self.faces[n][n].clone() } else { self.cyclic[n - 1].mul(&self.faces[n][i - 1]) };
          (format!("δ_{i}τ_{n}"), lhs == rhs)
        })
      })
      .collect();
    rep.push(Check::from_witness("face_cyclic", first(fc)));

    if self.has_degeneracies() {
      let sc: Vec<(String, bool)> = (0..top)
        .into_par_iter()
        .flat_map_iter(|n| {
          (0..=n).map(move |i| {
            let lhs = self.degeneracies[n][i].mul(&self.cyclic[n]);
            let rhs = if i == 0 {
              self.cyclic[n + 1].mul(&self.cyclic[n + 1]).mul(&self.degeneracies[n][n])
            } else {
              self.cyclic[n + 1].mul(&self.degeneracies[n][i - 1])
            };
            (format!("σ_{i}τ_{n}"), lhs == rhs)
          })
        })
        .collect();
      rep.push(Check::from_witness("degeneracy_cyclic", first(sc)));
    }

    let order: Vec<(String, bool)> = (0..=top)
      .into_par_iter()
      .map(|n| (format!("τ_{n}^{}", n + 1), self.cyclic[n].pow(n + 1) == SparseMatrix::identity(self.dims[n])))
      .collect();
    rep.push(Check::from_witness("cyclic_order", first(order)));
    rep
  }
}

/// Which complex produced the cyclic homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
  Lambda,
  Bicomplex,
  Both,
}

/// Hochschild and cyclic homology dimensions of one cyclic object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
  pub hh:         Option<Vec<usize>>,
  pub hc:         Option<Vec<usize>>,
  pub method:     Method,
  /// Highest carrier degree that was built.
  pub truncation: usize,
  /// Present when `method = both`: whether the two HC computations agree.
  #[serde(skip_serializing_if = "Option::is_none")]
  pub agree:      Option<bool>,
}

impl<F: Field> CyclicObject<F> {
  /// `HH` and/or `HC` in degrees `0..=max`.
  pub fn homology(&self, max: usize, want_hh: bool, want_hc: bool, method: Method) -> Result<HomologyReport, CyclicError> {
    let hh = if want_hh { Some(self.hochschild(0..=max)?) } else { None };
    let (hc, agree) = if want_hc {
      match method {
        Method::Lambda => (Some(self.hc_connes(0..=max)?), None),
        Method::Bicomplex => (Some(self.hc_bicomplex(0..=max)?), None),
        Method::Both => {
          let a = self.hc_connes(0..=max)?;
          let b = self.hc_bicomplex(0..=max)?;
          let ok = a == b;
          (Some(a), Some(ok))
        },
      }
    } else {
      (None, None)
    };
    Ok(HomologyReport { hh, hc, method, truncation: self.max_degree(), agree })
  }
}
