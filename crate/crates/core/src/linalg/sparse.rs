use std::fmt;

use rayon::prelude::*;

use crate::field::Field;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec<F> {
  entries: Vec<(usize, F)>,
}

impl<F: fmt::Debug> fmt::Debug for SparseVec<F> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.debug_map().entries(self.entries.iter().map(|(i, v)| (i, v))).finish()
  }
}

impl<F: Field> SparseVec<F> {
  pub fn zero() -> Self { SparseVec { entries: Vec::new() } }

  pub fn unit(i: usize) -> Self { SparseVec { entries: vec![(i, F::one())] } }

  pub fn single(i: usize, v: F) -> Self {
    if v.is_zero() {
      Self::zero()
    } else {
      SparseVec { entries: vec![(i, v)] }
    }
  }

  /// Builds from arbitrary (index, value) pairs, summing duplicates.
  pub fn from_pairs(mut pairs: Vec<(usize, F)>) -> Self {
    pairs.sort_by_key(|(i, _)| *i);
    let mut entries: Vec<(usize, F)> = Vec::with_capacity(pairs.len());
    for (i, v) in pairs {
      match entries.last_mut() {
        Some((j, acc)) if *j == i => *acc = acc.clone() + v,
        _ => {
          if let Some((_, acc)) = entries.last() {
            if acc.is_zero() {
              entries.pop();
            }
          }
          entries.push((i, v));
        },
      }
    }
    if let Some((_, acc)) = entries.last() {
      if acc.is_zero() {
        entries.pop();
      }
    }
    SparseVec { entries }
  }

  /// Builds from already sorted, zero-free entries.
  pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, F)>) -> Self {
    debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
    debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
    SparseVec { entries }
  }

  pub fn from_dense(values: &[F]) -> Self {
    SparseVec {
      entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
    }
  }

  pub fn to_dense(&self, len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, v) in &self.entries {
      out[*i] = v.clone();
    }
    out
  }

  pub fn is_zero(&self) -> bool { self.entries.is_empty() }

  pub fn nnz(&self) -> usize { self.entries.len() }

  pub fn entries(&self) -> &[(usize, F)] { &self.entries }

  pub fn into_entries(self) -> Vec<(usize, F)> { self.entries }

  pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> { self.entries.iter().map(|(i, v)| (*i, v)) }

  pub fn get(&self, i: usize) -> F {
    match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
      Ok(pos) => self.entries[pos].1.clone(),
      Err(_) => F::zero(),
    }
  }

  pub fn first_index(&self) -> Option<usize> { self.entries.first().map(|(i, _)| *i) }

  pub fn max_index(&self) -> Option<usize> { self.entries.last().map(|(i, _)| *i) }

  pub fn scale(&self, c: &F) -> Self {
    if c.is_zero() {
      return Self::zero();
    }
    SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v.clone() * c.clone())).collect() }
  }

  /// `self + c * other`.
  pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
    if c.is_zero() || other.is_zero() {
      return self.clone();
    }
    let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
    let (mut a, mut b) = (0, 0);
    let (x, y) = (&self.entries, &other.entries);
    while a < x.len() || b < y.len() {
      if b == y.len() || (a < x.len() && x[a].0 < y[b].0) {
        out.push(x[a].clone());
        a += 1;
      } else if a == x.len() || y[b].0 < x[a].0 {
        out.push((y[b].0, y[b].1.clone() * c.clone()));
        b += 1;
      } else {
        let v = x[a].1.clone() + y[b].1.clone() * c.clone();
        if !v.is_zero() {
          out.push((x[a].0, v));
        }
        a += 1;
        b += 1;
      }
    }
    SparseVec { entries: out }
  }

  pub fn add(&self, other: &Self) -> Self { self.add_scaled(other, &F::one()) }

  pub fn sub(&self, other: &Self) -> Self { self.add_scaled(other, &-F::one()) }

  pub fn neg(&self) -> Self { self.scale(&-F::one()) }

  pub fn dot(&self, other: &Self) -> F {
    let mut acc = F::zero();
    let (mut a, mut b) = (0, 0);
    while a < self.entries.len() && b < other.entries.len() {
      let (i, j) = (self.entries[a].0, other.entries[b].0);
      if i < j {
        a += 1;
      } else if j < i {
        b += 1;
      } else {
        acc = acc + self.entries[a].1.clone() * other.entries[b].1.clone();
        a += 1;
        b += 1;
      }
    }
    acc
  }

  /// Re-indexes through `map`; entries mapped to `None` are dropped.
  pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Self {
    Self::from_pairs(self.entries.iter().filter_map(|(i, v)| map(*i).map(|j| (j, v.clone()))).collect())
  }
}

/// Column-major sparse matrix: `cols[j]` is the image of the j-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix<F> {
  rows: usize,
  cols: Vec<SparseVec<F>>,
}

impl<F: fmt::Debug> fmt::Debug for SparseMatrix<F> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "SparseMatrix {}x{} ", self.rows, self.cols.len())?;
    f.debug_list().entries(self.cols.iter()).finish()
  }
}

impl<F: Field> SparseMatrix<F> {
  pub fn zero(rows: usize, cols: usize) -> Self { SparseMatrix { rows, cols: vec![SparseVec::zero(); cols] } }

  pub fn identity(n: usize) -> Self { SparseMatrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() } }

  pub fn scalar(n: usize, c: F) -> Self { SparseMatrix { rows: n, cols: (0..n).map(|i| SparseVec::single(i, c.clone())).collect() } }

  /// Panics if a column has an index out of range.
  pub fn from_columns(rows: usize, cols: Vec<SparseVec<F>>) -> Self {
    for c in &cols {
      if let Some(m) = c.max_index() {
        assert!(m < rows, "column entry {m} out of range for {rows} rows");
      }
    }
    SparseMatrix { rows, cols }
  }

  pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
    let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); cols];
    for (i, j, v) in triplets {
      assert!(i < rows && j < cols, "triplet ({i},{j}) out of range {rows}x{cols}");
      buckets[j].push((i, v));
    }
    SparseMatrix { rows, cols: buckets.into_iter().map(SparseVec::from_pairs).collect() }
  }

  pub fn from_dense(rows: &[Vec<F>]) -> Self {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    Self::from_triplets(
      r,
      c,
      rows.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))),
    )
  }

  pub fn from_i64(rows: &[Vec<i64>]) -> Self {
    let dense: Vec<Vec<F>> = rows.iter().map(|r| r.iter().map(|v| F::from_i64(*v)).collect()).collect();
    Self::from_dense(&dense)
  }

  /// Matrix of a linear map given by its action on basis vectors, evaluated in parallel.
  pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec<F> + Send + Sync) -> Self {
    let cols: Vec<SparseVec<F>> = (0..cols).into_par_iter().map(f).collect();
    Self::from_columns(rows, cols)
  }

  pub fn rows(&self) -> usize { self.rows }

  pub fn cols(&self) -> usize { self.cols.len() }

  pub fn shape(&self) -> (usize, usize) { (self.rows, self.cols.len()) }

  pub fn col(&self, j: usize) -> &SparseVec<F> { &self.cols[j] }

  pub fn columns(&self) -> &[SparseVec<F>] { &self.cols }

  pub fn into_columns(self) -> Vec<SparseVec<F>> { self.cols }

  pub fn get(&self, i: usize, j: usize) -> F { self.cols[j].get(i) }

  pub fn nnz(&self) -> usize { self.cols.iter().map(|c| c.nnz()).sum() }

  pub fn is_zero(&self) -> bool { self.cols.iter().all(|c| c.is_zero()) }

  pub fn is_square(&self) -> bool { self.rows == self.cols.len() }

  pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
    assert!(v.max_index().is_none_or(|m| m < self.cols.len()), "vector length exceeds matrix columns");
    let mut pairs = Vec::new();
    for (j, c) in v.iter() {
      for (i, a) in self.cols[j].iter() {
        pairs.push((i, a.clone() * c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  }

  /// `self * other`.
  pub fn mul(&self, other: &Self) -> Self {
    assert_eq!(self.cols.len(), other.rows, "dimension mismatch in product");
    let cols = other.cols.par_iter().map(|c| self.apply(c)).collect();
    SparseMatrix { rows: self.rows, cols }
  }

  pub fn add(&self, other: &Self) -> Self {
    assert_eq!(self.shape(), other.shape(), "dimension mismatch in sum");
    SparseMatrix { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect() }
  }

  pub fn sub(&self, other: &Self) -> Self {
    assert_eq!(self.shape(), other.shape(), "dimension mismatch in difference");
    SparseMatrix { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect() }
  }

  pub fn scale(&self, c: &F) -> Self { SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() } }

  pub fn neg(&self) -> Self { self.scale(&-F::one()) }

  pub fn transpose(&self) -> Self {
    let mut buckets: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.rows];
    for (j, c) in self.cols.iter().enumerate() {
      for (i, v) in c.iter() {
        buckets[i].push((j, v.clone()));
      }
    }
    SparseMatrix {
      rows: self.cols.len(),
      cols: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
    }
  }

  /// Kronecker product, with row-major multi-index order (`self` index is the slow one).
  pub fn kron(&self, other: &Self) -> Self {
    let (r2, c2) = other.shape();
    let mut cols = Vec::with_capacity(self.cols.len() * c2);
    for a in &self.cols {
      for b in &other.cols {
        let mut pairs = Vec::with_capacity(a.nnz() * b.nnz());
        for (i, x) in a.iter() {
          for (k, y) in b.iter() {
            pairs.push((i * r2 + k, x.clone() * y.clone()));
          }
        }
        cols.push(SparseVec::from_sorted_unchecked(pairs));
      }
    }
    SparseMatrix { rows: self.rows * r2, cols }
  }

  pub fn pow(&self, e: usize) -> Self {
    assert!(self.is_square());
    let mut acc = Self::identity(self.rows);
    for _ in 0..e {
      acc = self.mul(&acc);
    }
    acc
  }

  /// Horizontal concatenation `[self | other]`.
  pub fn hstack(&self, other: &Self) -> Self {
    assert_eq!(self.rows, other.rows);
    let mut cols = self.cols.clone();
    cols.extend(other.cols.iter().cloned());
    SparseMatrix { rows: self.rows, cols }
  }

  /// Vertical concatenation.
  pub fn vstack(&self, other: &Self) -> Self {
    assert_eq!(self.cols.len(), other.cols.len());
    let off = self.rows;
    let cols = self
      .cols
      .iter()
      .zip(&other.cols)
      .map(|(a, b)| {
        let mut e = a.entries().to_vec();
        e.extend(b.iter().map(|(i, v)| (i + off, v.clone())));
        SparseVec::from_sorted_unchecked(e)
      })
      .collect();
    SparseMatrix { rows: self.rows + other.rows, cols }
  }

  pub fn block_diag(blocks: &[Self]) -> Self {
    let rows: usize = blocks.iter().map(|b| b.rows).sum();
    let mut cols = Vec::new();
    let mut off = 0;
    for b in blocks {
      for c in &b.cols {
        cols.push(SparseVec::from_sorted_unchecked(c.iter().map(|(i, v)| (i + off, v.clone())).collect()));
      }
      off += b.rows;
    }
    SparseMatrix { rows, cols }
  }

  pub fn select_columns(&self, idx: &[usize]) -> Self {
    SparseMatrix { rows: self.rows, cols: idx.iter().map(|&j| self.cols[j].clone()).collect() }
  }

  /// Row `i` as a sparse vector over column indices.
  pub fn row(&self, i: usize) -> SparseVec<F> {
    SparseVec::from_sorted_unchecked(
      self.cols.iter().enumerate().filter_map(|(j, c)| { let v = c.get(i); (!v.is_zero()).then_some((j, v)) }).collect(),
    )
  }

  /// First column where the two matrices differ, if any.
  pub fn first_difference(&self, other: &Self) -> Option<usize> {
    assert_eq!(self.shape(), other.shape());
    (0..self.cols.len()).find(|&j| self.cols[j] != other.cols[j])
  }

  pub fn to_dense(&self) -> Vec<Vec<F>> {
    (0..self.rows).map(|i| (0..self.cols.len()).map(|j| self.get(i, j)).collect()).collect()
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;

  fn q(v: i64) -> Q { Q::from_i64(v) }

  #[test]
  fn from_pairs_merges_and_drops_zeros() {
    let v = SparseVec::from_pairs(vec![(3, q(1)), (1, q(2)), (3, q(-1)), (0, q(0)), (1, q(1))]);
    assert_eq!(v.entries(), &[(1, q(3))]);
  }

  #[test]
  fn product_transpose_and_kron() {
    let a = SparseMatrix::<Q>::from_i64(&[vec![1, 2], vec![0, 1]]);
    let b = SparseMatrix::<Q>::from_i64(&[vec![0, 1], vec![1, 0]]);
    assert_eq!(a.mul(&b), SparseMatrix::from_i64(&[vec![2, 1], vec![1, 0]]));
    assert_eq!(a.transpose(), SparseMatrix::from_i64(&[vec![1, 0], vec![2, 1]]));
    let k = a.kron(&b);
    assert_eq!(k.shape(), (4, 4));
    assert_eq!(k.get(0, 3), q(2));
    assert_eq!(k.get(3, 2), q(1));
    assert_eq!(a.pow(3), SparseMatrix::from_i64(&[vec![1, 6], vec![0, 1]]));
  }
}
