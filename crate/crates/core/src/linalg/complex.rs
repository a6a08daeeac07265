use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::echelon::{kernel, modular_rank, rank, Subspace};
use super::sparse::SparseMatrix;
use super::LinalgError;
use crate::field::Field;

/// A bounded chain complex `C_0 ← C_1 ← … ← C_N`.
///
/// `diffs[n]` is `∂_n : C_n → C_{n-1}` for `n ≥ 1`; `diffs[0]` is the zero map to 0.
#[derive(Clone, Debug)]
pub struct ChainComplex<F> {
  dims:  Vec<usize>,
  diffs: Vec<SparseMatrix<F>>,
}

impl<F: Field> ChainComplex<F> {
  /// Builds and verifies `∂∂ = 0`. `diffs[k]` is `∂_{k+1}`.
  pub fn new(dims: Vec<usize>, diffs: Vec<SparseMatrix<F>>) -> Result<Self, LinalgError> {
    let c = Self::new_unchecked(dims, diffs)?;
    c.verify()?;
    Ok(c)
  }

  /// Builds without the `∂∂ = 0` check; shapes are still validated.
  pub fn new_unchecked(dims: Vec<usize>, diffs: Vec<SparseMatrix<F>>) -> Result<Self, LinalgError> {
    if dims.is_empty() || diffs.len() + 1 != dims.len() {
      return Err(LinalgError::DimensionMismatch(format!(
        "{} dimensions need {} differentials, got {}",
        dims.len(),
        dims.len().saturating_sub(1),
        diffs.len()
      )));
    }
    for (k, d) in diffs.iter().enumerate() {
      if d.shape() != (dims[k], dims[k + 1]) {
        return Err(LinalgError::DimensionMismatch(format!(
          "differential from degree {} has shape {:?}, expected {:?}",
          k + 1,
          d.shape(),
          (dims[k], dims[k + 1])
        )));
      }
    }
    let mut all = vec![SparseMatrix::zero(0, dims[0])];
    all.extend(diffs);
    Ok(ChainComplex { dims, diffs: all })
  }

  pub fn verify(&self) -> Result<(), LinalgError> {
    let bad = (2..self.dims.len()).into_par_iter().find_first(|&n| !self.diffs[n - 1].mul(&self.diffs[n]).is_zero());
    match bad {
      Some(n) => Err(LinalgError::NotAComplex { degree: n }),
      None => Ok(()),
    }
  }

  /// Highest degree with a carrier.
  pub fn top(&self) -> usize { self.dims.len() - 1 }

  pub fn dims(&self) -> &[usize] { &self.dims }

  pub fn dim(&self, n: usize) -> usize { self.dims[n] }

  /// `∂_n`; `n = 0` gives the zero map.
  pub fn differential(&self, n: usize) -> &SparseMatrix<F> { &self.diffs[n] }

  /// Highest degree whose homology is determined (`∂_{n+1}` must exist).
  pub fn homology_top(&self) -> Option<usize> { self.top().checked_sub(1) }

  fn check_range(&self, range: &RangeInclusive<usize>) -> Result<(), LinalgError> {
    let hi = *range.end();
    if hi + 1 > self.top() {
      return Err(LinalgError::InsufficientTruncation { requested: hi, available: self.homology_top() });
    }
    Ok(())
  }

  /// Ranks of `∂_lo ..= ∂_hi`, computed in parallel.
  pub fn ranks(&self, lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).into_par_iter().map(|n| if n == 0 { 0 } else { rank(&self.diffs[n]) }).collect()
  }

  /// Exact ranks of `∂_lo ..= ∂_hi` in characteristic 0. Each rank is
  /// bracketed by its mod-`p` rank from below and by
  /// `min(dim C_{k−1} − rank ∂_{k−1}, dim C_k − rank ∂_{k+1})` from above;
  /// exact elimination runs only when the bracket is open.
  pub fn certified_ranks(&self, lo: usize, hi: usize) -> Vec<usize> {
    let a = lo.saturating_sub(1).max(1);
    let b = (hi + 1).min(self.top());
    let lower: BTreeMap<usize, Option<usize>> = (a..=b).into_par_iter().map(|k| (k, modular_rank(&self.diffs[k]))).collect();
    let mut exact: BTreeMap<usize, usize> = BTreeMap::from([(0, 0)]);
    for k in lo.max(1)..=hi {
      let d = &self.diffs[k];
      let mut upper = d.rows().min(d.cols());
      if let Some(r) = exact.get(&(k - 1)).copied().or_else(|| lower.get(&(k - 1)).copied().flatten()) {
        upper = upper.min(self.dims[k - 1] - r);
      }
      if let Some(Some(l)) = lower.get(&(k + 1)) {
        upper = upper.min(self.dims[k] - l);
      }
      let r = match lower.get(&k) {
        Some(Some(l)) if *l == upper => *l,
        _ => rank(d),
      };
      exact.insert(k, r);
    }
    (lo..=hi).map(|k| exact[&k]).collect()
  }

  /// `dim H_n = dim C_n − rank ∂_n − rank ∂_{n+1}` for `n` in `range`.
  pub fn homology_dims(&self, range: RangeInclusive<usize>) -> Result<Vec<usize>, LinalgError> {
    self.check_range(&range)?;
    let (lo, hi) = (*range.start(), *range.end());
    if lo > hi {
      return Ok(Vec::new());
    }
    let r = if F::CHARACTERISTIC == 0 { self.certified_ranks(lo, hi + 1) } else { self.ranks(lo, hi + 1) };
    Ok((lo..=hi).map(|n| self.dims[n] - r[n - lo] - r[n - lo + 1]).collect())
  }

  /// The complex truncated to degrees `0..=top`.
  pub fn truncate(&self, top: usize) -> Self {
    let top = top.min(self.top());
    ChainComplex { dims: self.dims[..=top].to_vec(), diffs: self.diffs[..=top].to_vec() }
  }
}

/// A chain map `f_n : C_n → D_n`.
#[derive(Clone, Debug)]
pub struct ChainMap<F> {
  pub components: Vec<SparseMatrix<F>>,
}

/// Per-degree outcome of a quasi-isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct QuasiIsoDegree {
  pub degree:      usize,
  pub source_dim:  usize,
  pub target_dim:  usize,
  pub injective:   bool,
  pub surjective:  bool,
}

impl QuasiIsoDegree {
  pub fn is_iso(&self) -> bool { self.injective && self.surjective }
}

/// Checks the chain-map condition, then reports whether `H_n(f)` is bijective.
pub fn quasi_iso_check<F: Field>(
  f: &ChainMap<F>,
  source: &ChainComplex<F>,
  target: &ChainComplex<F>,
  range: RangeInclusive<usize>,
) -> Result<Vec<QuasiIsoDegree>, LinalgError> {
  source.check_range(&range)?;
  target.check_range(&range)?;
  let hi = *range.end();
  if f.components.len() < hi + 2 {
    return Err(LinalgError::InsufficientTruncation { requested: hi, available: f.components.len().checked_sub(2) });
  }
  for n in 0..=hi + 1 {
    let fc = &f.components[n];
    if fc.shape() != (target.dim(n), source.dim(n)) {
      return Err(LinalgError::DimensionMismatch(format!("chain map component {n} has shape {:?}", fc.shape())));
    }
    if n >= 1 {
      let lhs = target.differential(n).mul(fc);
      let rhs = f.components[n - 1].mul(source.differential(n));
      if lhs != rhs {
        return Err(LinalgError::NotAChainMap { degree: n });
      }
    }
  }
  range
    .into_par_iter()
    .map(|n| {
      let cycles = kernel(source.differential(n));
      let z_target = Subspace::span(target.dim(n), &kernel(target.differential(n)));
      let b_target = Subspace::column_space(target.differential(n + 1));
      let b_source = rank(source.differential(n + 1));
      let h_source = cycles.len() - b_source;
      let h_target = z_target.dim() - b_target.dim();
      let images: Vec<_> = cycles.iter().map(|z| f.components[n].apply(z)).collect();
      let img = Subspace::span(target.dim(n), &images).sum(&b_target);
      Ok(QuasiIsoDegree {
        degree:     n,
        source_dim: h_source,
        target_dim: h_target,
        injective:  img.dim() - b_target.dim() == h_source,
        surjective: img.dim() == z_target.dim(),
      })
    })
    .collect()
}

/// A first-quadrant double complex with anticommuting squares.
///
/// `horizontal[(p,q)] : (p,q) → (p-1,q)`, `vertical[(p,q)] : (p,q) → (p,q-1)`.
#[derive(Clone, Debug, Default)]
pub struct Bicomplex<F> {
  pub cells:      BTreeMap<(usize, usize), usize>,
  pub horizontal: BTreeMap<(usize, usize), SparseMatrix<F>>,
  pub vertical:   BTreeMap<(usize, usize), SparseMatrix<F>>,
}

impl<F: Field> Bicomplex<F> {
  pub fn new() -> Self { Bicomplex { cells: BTreeMap::new(), horizontal: BTreeMap::new(), vertical: BTreeMap::new() } }

  fn h(&self, p: usize, q: usize) -> SparseMatrix<F> {
    self.horizontal.get(&(p, q)).cloned().unwrap_or_else(|| {
      let src = self.cells[&(p, q)];
      let dst = if p == 0 { 0 } else { self.cells.get(&(p - 1, q)).copied().unwrap_or(0) };
      SparseMatrix::zero(dst, src)
    })
  }

  fn v(&self, p: usize, q: usize) -> SparseMatrix<F> {
    self.vertical.get(&(p, q)).cloned().unwrap_or_else(|| {
      let src = self.cells[&(p, q)];
      let dst = if q == 0 { 0 } else { self.cells.get(&(p, q - 1)).copied().unwrap_or(0) };
      SparseMatrix::zero(dst, src)
    })
  }

  /// Checks `h² = 0`, `v² = 0` and `hv + vh = 0` on every populated cell.
  pub fn verify(&self) -> Result<(), LinalgError> {
    let keys: Vec<(usize, usize)> = self.cells.keys().copied().collect();
    let bad = keys.par_iter().find_first(|&&(p, q)| {
      let hh = p >= 2 && self.cells.contains_key(&(p - 1, q)) && !self.h(p - 1, q).mul(&self.h(p, q)).is_zero();
      let vv = q >= 2 && self.cells.contains_key(&(p, q - 1)) && !self.v(p, q - 1).mul(&self.v(p, q)).is_zero();
      let hv = p >= 1
        && q >= 1
        && self.cells.contains_key(&(p - 1, q))
        && self.cells.contains_key(&(p, q - 1))
        && !self.h(p, q - 1).mul(&self.v(p, q)).add(&self.v(p - 1, q).mul(&self.h(p, q))).is_zero();
      hh || vv || hv
    });
    match bad {
      Some(&(p, q)) => Err(LinalgError::NotAComplex { degree: p + q }),
      None => Ok(()),
    }
  }

  /// Total complex in degrees `0..=max_total+1`, so homology through `max_total` is available.
  pub fn total_complex(&self, max_total: usize) -> Result<ChainComplex<F>, LinalgError> {
    let top = max_total + 1;
    for n in 0..=top {
      for p in 0..=n {
        if !self.cells.contains_key(&(p, n - p)) {
          return Err(LinalgError::InsufficientTruncation { requested: max_total, available: n.checked_sub(2) });
        }
      }
    }
    // Offsets of each cell inside Tot_n, ordered by p.
    let offsets = |n: usize| -> (Vec<usize>, usize) {
      let mut off = Vec::with_capacity(n + 1);
      let mut acc = 0;
      for p in 0..=n {
        off.push(acc);
        acc += self.cells[&(p, n - p)];
      }
      (off, acc)
    };
    let dims: Vec<usize> = (0..=top).map(|n| offsets(n).1).collect();
    let diffs: Vec<SparseMatrix<F>> = (1..=top)
      .into_par_iter()
      .map(|n| {
        let (src_off, _) = offsets(n);
        let (dst_off, _) = offsets(n - 1);
        let mut triplets = Vec::new();
        for p in 0..=n {
          let q = n - p;
          if p >= 1 {
            let m = self.h(p, q);
            for (j, col) in m.columns().iter().enumerate() {
              for (i, v) in col.iter() {
                triplets.push((dst_off[p - 1] + i, src_off[p] + j, v.clone()));
              }
            }
          }
          if q >= 1 {
            let m = self.v(p, q);
            for (j, col) in m.columns().iter().enumerate() {
              for (i, v) in col.iter() {
                triplets.push((dst_off[p] + i, src_off[p] + j, v.clone()));
              }
            }
          }
        }
        SparseMatrix::from_triplets(dims[n - 1], dims[n], triplets)
      })
      .collect();
    ChainComplex::new(dims, diffs)
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;

  #[test]
  fn tiny_complexes() {
    let c = ChainComplex::<Q>::new(vec![1, 1, 0], vec![SparseMatrix::identity(1), SparseMatrix::zero(1, 0)]).unwrap();
    assert_eq!(c.homology_dims(0..=1).unwrap(), vec![0, 0]);
    let c = ChainComplex::<Q>::new(vec![1, 0], vec![SparseMatrix::zero(1, 0)]).unwrap();
    assert_eq!(c.homology_dims(0..=0).unwrap(), vec![1]);
    assert!(matches!(c.homology_dims(0..=1), Err(LinalgError::InsufficientTruncation { .. })));
  }

  #[test]
  fn rejects_non_complex() {
    let d = SparseMatrix::<Q>::identity(1);
    let r = ChainComplex::new(vec![1, 1, 1], vec![d.clone(), d]);
    assert!(matches!(r, Err(LinalgError::NotAComplex { degree: 2 })));
  }

  #[test]
  fn square_of_identities_is_acyclic() {
    // k at (0,0),(1,0),(0,1),(1,1); h = id, v = id on the left column, -id on the right.
    let mut b = Bicomplex::<Q>::new();
    for p in 0..3 {
      for q in 0..3 {
        let inside = p <= 1 && q <= 1;
        b.cells.insert((p, q), usize::from(inside));
      }
    }
    b.horizontal.insert((1, 0), SparseMatrix::identity(1));
    b.horizontal.insert((1, 1), SparseMatrix::identity(1));
    b.vertical.insert((0, 1), SparseMatrix::identity(1));
    b.vertical.insert((1, 1), SparseMatrix::identity(1).neg());
    b.verify().unwrap();
    let tot = b.total_complex(1).unwrap();
    assert_eq!(tot.homology_dims(0..=1).unwrap(), vec![0, 0]);
  }

  #[test]
  fn identity_is_quasi_iso() {
    let c = ChainComplex::<Q>::new(
      vec![2, 1, 0],
      vec![SparseMatrix::from_i64(&[vec![1], vec![0]]), SparseMatrix::zero(1, 0)],
    )
    .unwrap();
    let f = ChainMap { components: (0..3).map(|n| SparseMatrix::identity(c.dim(n))).collect() };
    let rep = quasi_iso_check(&f, &c, &c, 0..=1).unwrap();
    assert!(rep.iter().all(|d| d.is_iso()));
    assert_eq!(rep[0].source_dim, 1);
  }
}
