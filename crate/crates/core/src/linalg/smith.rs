use super::LinalgError;

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// Smith normal form `U m V = D` with `d_1 | d_2 | …` and `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
  pub u: IntMatrix,
  pub d: IntMatrix,
  pub v: IntMatrix,
}

impl SmithForm {
  /// Nonzero diagonal entries.
  pub fn invariants(&self) -> Vec<i64> {
    (0..self.d.len().min(self.d.first().map_or(0, |r| r.len()))).map(|i| self.d[i][i]).filter(|&x| x != 0).collect()
  }
}

pub fn identity(n: usize) -> IntMatrix { (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect() }

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, LinalgError> {
  let n = a.len();
  let k = b.len();
  let m = b.first().map_or(0, |r| r.len());
  let mut out = vec![vec![0i64; m]; n];
  for i in 0..n {
    assert_eq!(a[i].len(), k, "dimension mismatch in integer product");
    for j in 0..m {
      let mut acc: i64 = 0;
      for t in 0..k {
        acc = a[i][t].checked_mul(b[t][j]).and_then(|x| acc.checked_add(x)).ok_or(LinalgError::Overflow)?;
      }
      out[i][j] = acc;
    }
  }
  Ok(out)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn int_det(m: &IntMatrix) -> Result<i64, LinalgError> {
  let n = m.len();
  let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
  let mut sign = 1i128;
  let mut prev = 1i128;
  for k in 0..n {
    if a[k][k] == 0 {
      match (k + 1..n).find(|&i| a[i][k] != 0) {
        Some(i) => {
          a.swap(i, k);
          sign = -sign;
        },
        None => return Ok(0),
      }
    }
    for i in k + 1..n {
      for j in k + 1..n {
        let num = a[i][j].checked_mul(a[k][k]).zip(a[i][k].checked_mul(a[k][j])).and_then(|(x, y)| x.checked_sub(y));
        a[i][j] = num.ok_or(LinalgError::Overflow)? / prev;
      }
    }
    prev = a[k][k];
  }
  let d = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
  i64::try_from(d).map_err(|_| LinalgError::Overflow)
}

fn row_op(m: &mut IntMatrix, dst: usize, src: usize, c: i64) -> Result<(), LinalgError> {
  // m[dst] += c * m[src]
  for j in 0..m[dst].len() {
    let add = m[src][j].checked_mul(c).ok_or(LinalgError::Overflow)?;
    m[dst][j] = m[dst][j].checked_add(add).ok_or(LinalgError::Overflow)?;
  }
  Ok(())
}

fn col_op(m: &mut IntMatrix, dst: usize, src: usize, c: i64) -> Result<(), LinalgError> {
  for row in m.iter_mut() {
    let add = row[src].checked_mul(c).ok_or(LinalgError::Overflow)?;
    row[dst] = row[dst].checked_add(add).ok_or(LinalgError::Overflow)?;
  }
  Ok(())
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
  for row in m.iter_mut() {
    row.swap(a, b);
  }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
  for x in m[r].iter_mut() {
    *x = -*x;
  }
}

/// Smith normal form with transforms; fails only on `i64` overflow.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm, LinalgError> {
  let rows = m.len();
  let cols = m.first().map_or(0, |r| r.len());
  let mut d = m.clone();
  let mut u = identity(rows);
  let mut v = identity(cols);
  let mut t = 0;
  while t < rows.min(cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    let pivot = (t..rows)
      .flat_map(|i| (t..cols).map(move |j| (i, j)))
      .filter(|&(i, j)| d[i][j] != 0)
      .min_by_key(|&(i, j)| d[i][j].unsigned_abs());
    let Some((pi, pj)) = pivot else { break };
    d.swap(t, pi);
    u.swap(t, pi);
    swap_cols(&mut d, t, pj);
    swap_cols(&mut v, t, pj);
    let mut clean = true;
    for i in t + 1..rows {
      let q = d[i][t].div_euclid(d[t][t]);
      if q != 0 {
        row_op(&mut d, i, t, -q)?;
        row_op(&mut u, i, t, -q)?;
      }
      clean &= d[i][t] == 0;
    }
    for j in t + 1..cols {
      let q = d[t][j].div_euclid(d[t][t]);
      if q != 0 {
        col_op(&mut d, j, t, -q)?;
        col_op(&mut v, j, t, -q)?;
      }
      clean &= d[t][j] == 0;
    }
    if !clean {
      continue;
    }
    // Enforce divisibility of the trailing block by the pivot.
    let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| d[i][j] % d[t][t] != 0);
    if let Some((i, _)) = bad {
      row_op(&mut d, t, i, 1)?;
      row_op(&mut u, t, i, 1)?;
      continue;
    }
    if d[t][t] < 0 {
      negate_row(&mut d, t);
      negate_row(&mut u, t);
    }
    t += 1;
  }
  Ok(SmithForm { u, d, v })
}

#[cfg(test)]
mod tests {
  use super::*;

  fn check(m: &IntMatrix) -> SmithForm {
    let s = smith_normal_form(m).unwrap();
    assert_eq!(int_mul(&int_mul(&s.u, m).unwrap(), &s.v).unwrap(), s.d);
    assert_eq!(int_det(&s.u).unwrap().abs(), 1);
    assert_eq!(int_det(&s.v).unwrap().abs(), 1);
    let inv = s.invariants();
    for w in inv.windows(2) {
      assert_eq!(w[1] % w[0], 0);
    }
    s
  }

  #[test]
  fn small_cases() {
    assert_eq!(check(&vec![vec![2, 0], vec![0, 3]]).invariants(), vec![1, 6]);
    assert_eq!(check(&identity(3)).d, identity(3));
    assert_eq!(check(&vec![vec![0, 1], vec![-1, 0]]).d, identity(2));
    assert_eq!(check(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).invariants(), vec![2, 6, 12]);
    assert_eq!(check(&vec![vec![0, 0], vec![0, 0]]).invariants(), Vec::<i64>::new());
    assert_eq!(check(&vec![vec![3, 6, 9]]).invariants(), vec![3]);
  }

  #[test]
  fn determinant() {
    assert_eq!(int_det(&vec![vec![2, 1], vec![7, 4]]).unwrap(), 1);
    assert_eq!(int_det(&vec![vec![0, 1], vec![1, 0]]).unwrap(), -1);
    assert_eq!(int_det(&vec![vec![1, 2], vec![2, 4]]).unwrap(), 0);
  }
}
