use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::CyclicError;
use crate::field::Field;
use crate::hopf::{FiniteGroup, HopfAlgebra};
use crate::linalg::{ChainComplex, SparseMatrix, SparseVec};

/// Two-sided bar complex `B_n = H^{⊗n} ⊗ M` computing `Tor^H_*(k, M)`:
/// `d(h¹,…,hⁿ⊗m) = ε(h¹)(h²,…,hⁿ)⊗m + Σ_{i=1}^{n−1}(−1)^i(…,h^i h^{i+1},…)⊗m + (−1)^n(h¹,…,h^{n−1})⊗hⁿm`.
pub fn bar_complex<F: Field>(h: &HopfAlgebra<F>, action: &[SparseMatrix<F>], max_degree: usize) -> Result<ChainComplex<F>, CyclicError> {
  let d = h.dim();
  let dm = action.first().map_or(0, |a| a.cols());
  if action.len() != d {
    return Err(CyclicError::Hypothesis(format!("{} action matrices for a {d}-dimensional algebra", action.len())));
  }
  let dims: Vec<usize> = (0..=max_degree).map(|n| h.dim_pow(n) * dm).collect();
  let diffs = (1..=max_degree)
    .into_par_iter()
    .map(|n| {
      SparseMatrix::from_fn(dims[n - 1], dims[n], |x| {
        let (mut k, m) = (x / dm, x % dm);
        let mut slots = vec![0; n];
        for s in slots.iter_mut().rev() {
          *s = k % d;
          k /= d;
        }
        let enc = |s: &[usize]| s.iter().fold(0, |acc, &v| acc * d + v) * dm;
        let mut pairs = Vec::new();
        let e = h.counit(slots[0]);
        if !e.is_zero() {
          pairs.push((enc(&slots[1..]) + m, e.clone()));
        }
        for i in 1..n {
          let sign = if i % 2 == 0 { F::one() } else { -F::one() };
          for (p, c) in h.mul_basis(slots[i - 1], slots[i]).iter() {
            let mut t = Vec::with_capacity(n - 1);
            t.extend_from_slice(&slots[..i - 1]);
            t.push(p);
            t.extend_from_slice(&slots[i + 1..]);
            pairs.push((enc(&t) + m, sign.clone() * c.clone()));
          }
        }
        let sign = if n % 2 == 0 { F::one() } else { -F::one() };
        let base = enc(&slots[..n - 1]);
        for (mj, c) in action[slots[n - 1]].col(m).iter() {
          pairs.push((base + mj, sign.clone() * c.clone()));
        }
        SparseVec::from_pairs(pairs)
      })
    })
    .collect();
  Ok(ChainComplex::new(dims, diffs)?)
}

/// `dim Tor^H_n(k, M)` for `n` in `range`, by the bar complex.
pub fn tor_oracle<F: Field>(h: &HopfAlgebra<F>, action: &[SparseMatrix<F>], range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
  Ok(bar_complex(h, action, range.end() + 1)?.homology_dims(range)?)
}

/// `dim H_n(G, V)` for a representation given by one matrix per group element.
pub fn group_homology<F: Field>(g: &FiniteGroup, action: &[SparseMatrix<F>], range: RangeInclusive<usize>) -> Result<Vec<usize>, CyclicError> {
  tor_oracle(&HopfAlgebra::group_algebra(g), action, range)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;

  #[test]
  fn group_homology_small_cases() {
    let z2 = FiniteGroup::cyclic(2);
    let triv = vec![SparseMatrix::<Q>::identity(1); 2];
    assert_eq!(group_homology(&z2, &triv, 0..=3).unwrap(), vec![1, 0, 0, 0]);
    let sign = vec![SparseMatrix::identity(1), SparseMatrix::scalar(1, Q::from_i64(-1))];
    assert_eq!(group_homology(&z2, &sign, 0..=3).unwrap(), vec![0, 0, 0, 0]);
    let h = HopfAlgebra::<Q>::group_algebra(&FiniteGroup::cyclic(3));
    let regular: Vec<_> = (0..3).map(|i| h.left_mul_matrix(&SparseVec::unit(i))).collect();
    assert_eq!(group_homology(&FiniteGroup::cyclic(3), &regular, 0..=2).unwrap(), vec![1, 0, 0]);
  }

  #[test]
  fn positive_characteristic_sees_group_homology() {
    use crate::field::Fp;
    let z2 = FiniteGroup::cyclic(2);
    let triv = vec![SparseMatrix::<Fp<2>>::identity(1); 2];
    assert_eq!(group_homology(&z2, &triv, 0..=3).unwrap(), vec![1, 1, 1, 1]);
  }
}
