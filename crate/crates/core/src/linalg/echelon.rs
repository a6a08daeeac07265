use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::sparse::{SparseMatrix, SparseVec};
use crate::field::{Field, Fp};

/// Incremental sparse Gaussian elimination.
///
/// Pivot rows are normalized (pivot entry 1) and each is zero at the pivot
/// columns of all rows inserted before it. [`Echelon::finalize`] back-substitutes
/// so every row is zero at every other pivot column, which is what the
/// projection and coordinate queries rely on.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
  ambient:  usize,
  rows:     Vec<SparseVec<F>>,
  pivots:   Vec<usize>,
  of_col:   HashMap<usize, usize>,
  weights:  Option<Vec<u32>>,
  reduced:  bool,
}

impl<F: Field> Echelon<F> {
  pub fn new(ambient: usize) -> Self {
    Echelon { ambient, rows: Vec::new(), pivots: Vec::new(), of_col: HashMap::new(), weights: None, reduced: true }
  }

  /// Column weights steer pivot choice toward rarely used columns.
  pub fn with_weights(ambient: usize, weights: Vec<u32>) -> Self {
    assert_eq!(weights.len(), ambient);
    Echelon { weights: Some(weights), ..Self::new(ambient) }
  }

  pub fn ambient(&self) -> usize { self.ambient }

  pub fn rank(&self) -> usize { self.rows.len() }

  pub fn pivot_columns(&self) -> &[usize] { &self.pivots }

  pub fn rows(&self) -> &[SparseVec<F>] { &self.rows }

  pub fn is_reduced(&self) -> bool { self.reduced }

  /// Residual of `v` modulo the span. Zero iff `v` lies in the span.
  pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
    let mut v = v.clone();
    let mut heap: BinaryHeap<Reverse<usize>> =
      v.iter().filter_map(|(c, _)| self.of_col.get(&c).map(|&k| Reverse(k))).collect();
    let mut last = None;
    while let Some(Reverse(k)) = heap.pop() {
      if last == Some(k) {
        continue;
      }
      last = Some(k);
      let c = v.get(self.pivots[k]);
      if c.is_zero() {
        continue;
      }
      let row = &self.rows[k];
      if !self.reduced {
        for (j, _) in row.iter() {
          if let Some(&kj) = self.of_col.get(&j) {
            if kj > k {
              heap.push(Reverse(kj));
            }
          }
        }
      }
      v = v.add_scaled(row, &-c);
    }
    v
  }

  pub fn contains(&self, v: &SparseVec<F>) -> bool { self.reduce(v).is_zero() }

  /// Adds `v` to the span. Returns `true` if the rank grew.
  pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
    let r = self.reduce(v);
    if r.is_zero() {
      return false;
    }
    let col = self.choose_pivot(&r);
    let inv = r.get(col).inv().expect("pivot entry is nonzero");
    let r = r.scale(&inv);
    self.of_col.insert(col, self.rows.len());
    self.pivots.push(col);
    self.rows.push(r);
    self.reduced = self.rows.len() <= 1 && self.reduced;
    true
  }

  fn choose_pivot(&self, r: &SparseVec<F>) -> usize {
    let unit = |v: &F| *v == F::one() || *v == -F::one();
    let key = |(c, v): (usize, &F)| {
      let w = self.weights.as_ref().map_or(0, |w| w[c]);
      (!unit(v), w, c)
    };
    r.iter().min_by_key(|e| key(*e)).map(|(c, _)| c).expect("nonzero residual")
  }

  /// Back-substitution to reduced row echelon form.
  pub fn finalize(&mut self) {
    if self.reduced {
      return;
    }
    for k in (0..self.rows.len()).rev() {
      let mut row = self.rows[k].clone();
      let later: Vec<(usize, F)> = row
        .iter()
        .filter_map(|(j, v)| self.of_col.get(&j).filter(|&&kj| kj > k).map(|&kj| (kj, v.clone())))
        .collect();
      for (kj, v) in later {
        row = row.add_scaled(&self.rows[kj], &-v);
      }
      self.rows[k] = row;
    }
    self.reduced = true;
  }

  /// Coordinates of `v` against the (reduced) rows, or `None` if outside the span.
  pub fn coordinates(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
    assert!(self.reduced, "coordinates need a finalized echelon form");
    if !self.contains(v) {
      return None;
    }
    Some(SparseVec::from_pairs(
      self.pivots.iter().enumerate().map(|(k, &c)| (k, v.get(c))).collect(),
    ))
  }

  /// Basis of the orthogonal solution space `{x : <row, x> = 0 for all rows}`.
  /// With rows of a matrix inserted this is the kernel of that matrix.
  pub fn null_space(&self) -> Vec<SparseVec<F>> {
    assert!(self.reduced, "null space needs a finalized echelon form");
    let mut free_entries: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
    for (k, row) in self.rows.iter().enumerate() {
      for (j, v) in row.iter() {
        if !self.of_col.contains_key(&j) {
          free_entries.entry(j).or_default().push((self.pivots[k], -v.clone()));
        }
      }
    }
    (0..self.ambient)
      .filter(|c| !self.of_col.contains_key(c))
      .map(|f| {
        let mut pairs = free_entries.remove(&f).unwrap_or_default();
        pairs.push((f, F::one()));
        SparseVec::from_pairs(pairs)
      })
      .collect()
  }
}

/// Per-column occurrence counts, used as pivot weights.
fn occurrence_weights<F: Field>(vectors: &[SparseVec<F>], ambient: usize) -> Vec<u32> {
  let mut w = vec![0u32; ambient];
  for v in vectors {
    for (i, _) in v.iter() {
      w[i] += 1;
    }
  }
  w
}

/// Echelon form of the span of `vectors`, inserting sparsest first.
pub fn echelon_of<F: Field>(ambient: usize, vectors: &[SparseVec<F>], stop_at: Option<usize>) -> Echelon<F> {
  let mut order: Vec<usize> = (0..vectors.len()).filter(|&i| !vectors[i].is_zero()).collect();
  order.sort_by_key(|&i| (vectors[i].nnz(), i));
  let mut e = Echelon::with_weights(ambient, occurrence_weights(vectors, ambient));
  for i in order {
    e.insert(&vectors[i]);
    if Some(e.rank()) == stop_at {
      break;
    }
  }
  e
}

/// Exact rank. Eliminates along whichever side has fewer vectors.
pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
  let (r, c) = m.shape();
  if r == 0 || c == 0 || m.is_zero() {
    return 0;
  }
  let full = r.min(c);
  if c <= r {
    echelon_of(r, m.columns(), Some(full)).rank()
  } else {
    let t = m.transpose();
    echelon_of(c, t.columns(), Some(full)).rank()
  }
}

/// Prime used for modular rank bounds.
pub const CERTIFICATE_PRIME: u64 = 2_147_483_647;

/// Rank over `Z/p` of the reduction of a characteristic-0 matrix, a lower
/// bound for its rank. `None` if some denominator vanishes mod `p`.
pub fn modular_rank<F: Field>(m: &SparseMatrix<F>) -> Option<usize> {
  type P = Fp<CERTIFICATE_PRIME>;
  let cols = m
    .columns()
    .iter()
    .map(|c| c.iter().map(|(i, v)| v.residue(CERTIFICATE_PRIME).map(|r| (i, P::new(r as i64)))).collect::<Option<Vec<_>>>().map(SparseVec::from_pairs))
    .collect::<Option<Vec<_>>>()?;
  Some(rank(&SparseMatrix::from_columns(m.rows(), cols)))
}

/// Rank together with a kernel basis (vectors in the column space of `m`).
pub fn rank_kernel<F: Field>(m: &SparseMatrix<F>) -> (usize, Vec<SparseVec<F>>) {
  let t = m.transpose();
  let mut e = echelon_of(m.cols(), t.columns(), None);
  e.finalize();
  (e.rank(), e.null_space())
}

pub fn kernel<F: Field>(m: &SparseMatrix<F>) -> Vec<SparseVec<F>> { rank_kernel(m).1 }

/// A subspace of `F^ambient` in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
  ech: Echelon<F>,
}

impl<F: Field> Subspace<F> {
  pub fn span(ambient: usize, vectors: &[SparseVec<F>]) -> Self {
    let mut ech = echelon_of(ambient, vectors, Some(ambient));
    ech.finalize();
    Subspace { ech }
  }

  pub fn column_space(m: &SparseMatrix<F>) -> Self { Self::span(m.rows(), m.columns()) }

  pub fn zero(ambient: usize) -> Self { Subspace { ech: Echelon::new(ambient) } }

  pub fn whole(ambient: usize) -> Self {
    Self::span(ambient, &(0..ambient).map(SparseVec::unit).collect::<Vec<_>>())
  }

  pub fn ambient(&self) -> usize { self.ech.ambient() }

  pub fn dim(&self) -> usize { self.ech.rank() }

  pub fn contains(&self, v: &SparseVec<F>) -> bool { self.ech.contains(v) }

  pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> { self.ech.reduce(v) }

  pub fn coordinates(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> { self.ech.coordinates(v) }

  pub fn basis(&self) -> &[SparseVec<F>] { self.ech.rows() }

  /// Inclusion `F^dim → F^ambient` with the echelon basis as columns.
  pub fn inclusion(&self) -> SparseMatrix<F> { SparseMatrix::from_columns(self.ambient(), self.basis().to_vec()) }

  pub fn contains_subspace(&self, other: &Self) -> bool { other.basis().iter().all(|v| self.contains(v)) }

  pub fn sum(&self, other: &Self) -> Self {
    let mut all = self.basis().to_vec();
    all.extend_from_slice(other.basis());
    Self::span(self.ambient(), &all)
  }

  /// Intersection via the kernel of `[A | -B]`.
  pub fn intersection(&self, other: &Self) -> Self {
    let a = self.inclusion();
    let b = other.inclusion();
    let ker = kernel(&a.hstack(&b.neg()));
    let da = a.cols();
    let vecs: Vec<SparseVec<F>> =
      ker.iter().map(|k| a.apply(&k.remap(|i| (i < da).then_some(i)))).collect();
    Self::span(self.ambient(), &vecs)
  }

  pub fn image(&self, m: &SparseMatrix<F>) -> Self {
    Self::span(m.rows(), &self.basis().iter().map(|v| m.apply(v)).collect::<Vec<_>>())
  }

  pub fn pivot_columns(&self) -> &[usize] { self.ech.pivot_columns() }
}

/// The quotient `F^ambient / U`, realized with the non-pivot coordinates as a basis.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
  sub:   Subspace<F>,
  free:  Vec<usize>,
  index: HashMap<usize, usize>,
}

impl<F: Field> Quotient<F> {
  pub fn new(sub: Subspace<F>) -> Self {
    let pivots: std::collections::HashSet<usize> = sub.pivot_columns().iter().copied().collect();
    let free: Vec<usize> = (0..sub.ambient()).filter(|c| !pivots.contains(c)).collect();
    let index = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    Quotient { sub, free, index }
  }

  pub fn by_relators(ambient: usize, relators: &[SparseVec<F>]) -> Self { Self::new(Subspace::span(ambient, relators)) }

  pub fn ambient(&self) -> usize { self.sub.ambient() }

  pub fn dim(&self) -> usize { self.free.len() }

  pub fn relators(&self) -> &Subspace<F> { &self.sub }

  /// Ambient coordinates of the representatives chosen for the quotient basis.
  pub fn representatives(&self) -> &[usize] { &self.free }

  pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
    let r = self.sub.reduce(v);
    SparseVec::from_sorted_unchecked(r.iter().map(|(c, x)| (self.index[&c], x.clone())).collect())
  }

  pub fn lift(&self, i: usize) -> SparseVec<F> { SparseVec::unit(self.free[i]) }

  pub fn lift_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
    SparseVec::from_sorted_unchecked(v.iter().map(|(i, x)| (self.free[i], x.clone())).collect())
  }

  pub fn projection_matrix(&self) -> SparseMatrix<F> {
    SparseMatrix::from_fn(self.dim(), self.ambient(), |c| self.project(&SparseVec::unit(c)))
  }

  pub fn section_matrix(&self) -> SparseMatrix<F> {
    SparseMatrix::from_columns(self.ambient(), (0..self.dim()).map(|i| self.lift(i)).collect())
  }

  /// Matrix of the map induced by `f` on quotients. `f` is given on ambient
  /// basis vectors; `target` is the quotient of its codomain.
  pub fn induced(&self, target: &Quotient<F>, f: impl Fn(usize) -> SparseVec<F> + Send + Sync) -> SparseMatrix<F> {
    SparseMatrix::from_fn(target.dim(), self.dim(), |i| target.project(&f(self.free[i])))
  }
}

/// Solves `m x = b`; `None` if inconsistent.
pub fn solve<F: Field>(m: &SparseMatrix<F>, b: &SparseVec<F>) -> Option<SparseVec<F>> {
  // Eliminate on the rows of [m | b]; a pivot on the last column means no solution.
  let n = m.cols();
  let t = m.transpose();
  let rows: Vec<SparseVec<F>> = t
    .columns()
    .iter()
    .enumerate()
    .map(|(i, r)| {
      let bi = b.get(i);
      let mut e = r.entries().to_vec();
      if !bi.is_zero() {
        e.push((n, bi));
      }
      SparseVec::from_sorted_unchecked(e)
    })
    .collect();
  let mut e = Echelon::new(n + 1);
  let mut order: Vec<usize> = (0..rows.len()).collect();
  order.sort_by_key(|&i| rows[i].nnz());
  for i in order {
    let r = e.reduce(&rows[i]);
    if r.is_zero() {
      continue;
    }
    // Force a pivot away from the augmented column whenever possible.
    if r.iter().all(|(c, _)| c == n) {
      return None;
    }
    let (col, val) = r.iter().filter(|(c, _)| *c != n).min_by_key(|(c, _)| *c).map(|(c, v)| (c, v.clone())).unwrap();
    let r = r.scale(&val.inv().unwrap());
    e.of_col.insert(col, e.rows.len());
    e.pivots.push(col);
    e.rows.push(r);
    e.reduced = false;
  }
  e.finalize();
  Some(SparseVec::from_pairs(
    e.pivots.iter().zip(e.rows.iter()).map(|(&c, r)| (c, r.get(n))).collect(),
  ))
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse<F: Field>(m: &SparseMatrix<F>) -> Option<SparseMatrix<F>> {
  if !m.is_square() {
    return None;
  }
  let n = m.rows();
  if rank(m) != n {
    return None;
  }
  let t = m.transpose();
  // Rows of [m | I] reduced to [I | m^-1].
  let rows: Vec<SparseVec<F>> = t
    .columns()
    .iter()
    .enumerate()
    .map(|(i, r)| {
      let mut e = r.entries().to_vec();
      e.push((n + i, F::one()));
      SparseVec::from_sorted_unchecked(e)
    })
    .collect();
  let mut e = Echelon::new(2 * n);
  for r in &rows {
    let r = e.reduce(r);
    let (col, val) = r.iter().filter(|(c, _)| *c < n).min_by_key(|(c, _)| *c).map(|(c, v)| (c, v.clone()))?;
    let r = r.scale(&val.inv().unwrap());
    e.of_col.insert(col, e.rows.len());
    e.pivots.push(col);
    e.rows.push(r);
    e.reduced = false;
  }
  e.finalize();
  // Row with pivot column j is row j of the inverse.
  let mut triplets = Vec::new();
  for (&j, r) in e.pivots.iter().zip(e.rows.iter()) {
    for (c, v) in r.iter() {
      if c >= n {
        triplets.push((j, c - n, v.clone()));
      }
    }
  }
  Some(SparseMatrix::from_triplets(n, n, triplets))
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::{Fp, Q};

  fn q(v: i64) -> Q { Q::from_i64(v) }

  #[test]
  fn rank_and_kernel_small() {
    let id = SparseMatrix::<Q>::identity(3);
    assert_eq!(rank_kernel(&id), (3, vec![]));
    let z = SparseMatrix::<Q>::zero(2, 5);
    let (r, k) = rank_kernel(&z);
    assert_eq!((r, k.len()), (0, 5));
    let m = SparseMatrix::<Q>::from_i64(&[vec![1, 2], vec![2, 4]]);
    let (r, k) = rank_kernel(&m);
    assert_eq!(r, 1);
    assert_eq!(k.len(), 1);
    assert!(m.apply(&k[0]).is_zero());
    // Proportional to (2, -1).
    assert_eq!(k[0].get(0) * q(-1), k[0].get(1) * q(2));
  }

  #[test]
  fn solve_and_inverse() {
    let m = SparseMatrix::<Q>::from_i64(&[vec![2, 1, 0], vec![0, 1, 1], vec![1, 0, 3]]);
    let inv = inverse(&m).unwrap();
    assert_eq!(m.mul(&inv), SparseMatrix::identity(3));
    let b = SparseVec::from_dense(&[q(1), q(2), q(3)]);
    let x = solve(&m, &b).unwrap();
    assert_eq!(m.apply(&x), b);
    let sing = SparseMatrix::<Q>::from_i64(&[vec![1, 1], vec![1, 1]]);
    assert!(inverse(&sing).is_none());
    assert!(solve(&sing, &SparseVec::from_dense(&[q(1), q(0)])).is_none());
  }

  #[test]
  fn quotient_projection() {
    // F^3 / span(e0 - e1)
    let rel = vec![SparseVec::from_pairs(vec![(0, q(1)), (1, q(-1))])];
    let quo = Quotient::by_relators(3, &rel);
    assert_eq!(quo.dim(), 2);
    assert_eq!(quo.project(&SparseVec::unit(0)), quo.project(&SparseVec::unit(1)));
    assert!(quo.project(&rel[0]).is_zero());
  }

  #[test]
  fn rank_over_prime_field_differs() {
    let m = SparseMatrix::<Fp<2>>::from_i64(&[vec![1, 1], vec![1, -1]]);
    assert_eq!(rank(&m), 1);
    let m = SparseMatrix::<Q>::from_i64(&[vec![1, 1], vec![1, -1]]);
    assert_eq!(rank(&m), 2);
  }

  #[test]
  fn subspace_intersection() {
    let a = Subspace::<Q>::span(3, &[SparseVec::unit(0), SparseVec::unit(1)]);
    let b = Subspace::<Q>::span(3, &[SparseVec::unit(1), SparseVec::unit(2)]);
    let i = a.intersection(&b);
    assert_eq!(i.dim(), 1);
    assert!(i.contains(&SparseVec::unit(1)));
    assert_eq!(a.sum(&b).dim(), 3);
  }
}
