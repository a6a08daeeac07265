//! Closed-form homology of quantum tori `x_i x_j = q^{a_ij} x_j x_i`.
//!
//! `HH_n` carries one copy of `Λ^n k^r` per point of the lattice
//! `X_λ = {x ∈ Z^r : λ(x, −) = 1}`, and `HC_n = ⊕_{i≥0} Λ^{n−2i} k^r` plus one copy
//! of `Λ^n k^{r−1}` per nonzero point of `X_λ`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{smith_normal_form, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
  #[error("rank must be at least 1")]
  ZeroRank,
  #[error("exponent matrix must be {0}x{0}")]
  Shape(usize),
  #[error("exponent matrix is not antisymmetric at ({0}, {1})")]
  NotAntisymmetric(usize, usize),
  #[error("order of q must be positive")]
  ZeroOrder,
  #[error(transparent)]
  Linalg(#[from] LinalgError),
}

/// Order of the deformation parameter `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QOrder {
  Finite(u64),
  #[serde(with = "infinite_tag")]
  Infinite,
}

mod infinite_tag {
  use serde::{de::Error, Deserialize, Deserializer, Serializer};

  pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> { s.serialize_str("infinite") }

  pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
    let s = String::deserialize(d)?;
    if s == "infinite" {
      Ok(())
    } else {
      Err(D::Error::custom(format!("expected an integer or \"infinite\", found {s:?}")))
    }
  }
}

/// `λ(x, y) = q^{xᵀ a y}` with `a` antisymmetric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCocycle {
  pub r:       usize,
  pub a:       IntMatrix,
  pub q_order: QOrder,
}

impl TorusCocycle {
  pub fn new(r: usize, a: IntMatrix, q_order: QOrder) -> Result<Self, TorusError> {
    let c = TorusCocycle { r, a, q_order };
    c.validate()?;
    Ok(c)
  }

  /// Commutative torus of rank `r`.
  pub fn trivial(r: usize) -> Self { TorusCocycle { r, a: vec![vec![0; r]; r], q_order: QOrder::Infinite } }

  pub fn validate(&self) -> Result<(), TorusError> {
    if self.r == 0 {
      return Err(TorusError::ZeroRank);
    }
    if self.a.len() != self.r || self.a.iter().any(|row| row.len() != self.r) {
      return Err(TorusError::Shape(self.r));
    }
    for i in 0..self.r {
      for j in 0..self.r {
        if self.a[i][j] != -self.a[j][i] {
          return Err(TorusError::NotAntisymmetric(i, j));
        }
      }
    }
    if self.q_order == QOrder::Finite(0) {
      return Err(TorusError::ZeroOrder);
    }
    Ok(())
  }

  /// Whether `λ(x, −)` is trivial, straight from the defining congruences.
  pub fn annihilates(&self, x: &[i64]) -> bool {
    (0..self.r).all(|i| {
      let s: i64 = (0..self.r).map(|j| self.a[i][j] * x[j]).sum();
      match self.q_order {
        QOrder::Infinite => s == 0,
        QOrder::Finite(m) => s.rem_euclid(m as i64) == 0,
      }
    })
  }
}

/// A subgroup of `Z^r` spanned by independent columns `V e_i · k_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSubgroup {
  pub r:       usize,
  /// Basis vectors of the subgroup.
  pub basis:   Vec<Vec<i64>>,
  #[serde(skip)]
  v:           IntMatrix,
  #[serde(skip)]
  steps:       Vec<i64>,
  /// `None` for `q` of infinite order.
  pub modulus: Option<u64>,
}

impl LatticeSubgroup {
  pub fn rank(&self) -> usize { self.basis.len() }

  pub fn is_zero(&self) -> bool { self.basis.is_empty() }

  /// Membership through the Smith coordinates `y = V⁻¹x`: `y_i ∈ k_i Z` (with `k_i = 0` meaning `y_i = 0`).
  pub fn contains(&self, x: &[i64]) -> bool {
    match solve_unimodular(&self.v, x) {
      Some(y) => y.iter().zip(&self.steps).all(|(&yi, &k)| if k == 0 { yi == 0 } else { yi % k == 0 }),
      None => false,
    }
  }

  /// Readable description, e.g. `3Z ⊕ 3Z` in Smith coordinates or `{0}`.
  pub fn describe(&self) -> String {
    if self.is_zero() {
      return "{0}".into();
    }
    let parts: Vec<String> = self.steps.iter().filter(|&&k| k != 0).map(|&k| if k == 1 { "Z".into() } else { format!("{k}Z") }).collect();
    parts.join(" ⊕ ")
  }
}

/// Solves `V y = x` for unimodular `V` by exact rational elimination on `i128`.
fn solve_unimodular(v: &IntMatrix, x: &[i64]) -> Option<Vec<i64>> {
  let n = v.len();
  let mut m: Vec<Vec<i128>> = (0..n).map(|i| v[i].iter().map(|&e| e as i128).chain(std::iter::once(x[i] as i128)).collect()).collect();
  // Fraction-free Gauss–Jordan; unimodularity keeps the final pivots at ±det.
  for c in 0..n {
    let p = (c..n).find(|&r| m[r][c] != 0)?;
    m.swap(c, p);
    for r in 0..n {
      if r != c && m[r][c] != 0 {
        let (a, b) = (m[c][c], m[r][c]);
        for k in 0..=n {
          m[r][k] = a * m[r][k] - b * m[c][k];
        }
        let g = m[r].iter().fold(0i128, |g, &e| gcd(g, e));
        if g > 1 {
          m[r].iter_mut().for_each(|e| *e /= g);
        }
      }
    }
  }
  (0..n)
    .map(|i| {
      let (num, den) = (m[i][n], m[i][i]);
      (num % den == 0).then(|| i64::try_from(num / den).ok()).flatten()
    })
    .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
  let (mut a, mut b) = (a.abs(), b.abs());
  while b != 0 {
    (a, b) = (b, a % b);
  }
  a
}

fn gcd_u(a: u64, b: u64) -> u64 { if b == 0 { a } else { gcd_u(b, a % b) } }

/// `X_λ = {x : a x ≡ 0}` (mod the order of `q`, or over `Z`) via `U a V = D`.
pub fn x_lambda(c: &TorusCocycle) -> Result<LatticeSubgroup, TorusError> {
  c.validate()?;
  let snf = smith_normal_form(&c.a)?;
  let r = c.r;
  let steps: Vec<i64> = (0..r)
    .map(|i| {
      let d = snf.d[i][i].unsigned_abs();
      match (c.q_order, d) {
        (_, 0) => 1,
        (QOrder::Infinite, _) => 0,
        (QOrder::Finite(m), d) => (m / gcd_u(d, m)) as i64,
      }
    })
    .collect();
  let basis = (0..r)
    .filter(|&i| steps[i] != 0)
    .map(|i| (0..r).map(|row| snf.v[row][i] * steps[i]).collect())
    .collect();
  let modulus = match c.q_order {
    QOrder::Finite(m) => Some(m),
    QOrder::Infinite => None,
  };
  Ok(LatticeSubgroup { r, basis, v: snf.v, steps, modulus })
}

/// Compares lattice membership with the defining congruences on `[−bound, bound]^r`.
/// Returns the first disagreement.
pub fn box_oracle(c: &TorusCocycle, lattice: &LatticeSubgroup, bound: i64) -> Option<Vec<i64>> {
  let r = c.r;
  let side = (2 * bound + 1) as usize;
  let total = side.checked_pow(r as u32)?;
  (0..total).find_map(|mut k| {
    let x: Vec<i64> = (0..r)
      .map(|_| {
        let v = (k % side) as i64 - bound;
        k /= side;
        v
      })
      .collect();
    (lattice.contains(&x) != c.annihilates(&x)).then_some(x)
  })
}

pub fn binomial(n: usize, k: usize) -> usize {
  if k > n {
    return 0;
  }
  (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti data of one degree. Totals are present only when `X_λ = {0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBetti {
  pub degree:             usize,
  /// `dim Λ^n k^r`, one copy per point of `X_λ`.
  pub hh_per_point:       usize,
  /// `Σ_{i≥0} dim Λ^{n−2i} k^r`.
  pub hc_constant:        usize,
  /// `dim Λ^n k^{r−1}`, one copy per nonzero point of `X_λ`.
  pub hc_per_nonzero:     usize,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub hh_total:           Option<usize>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub hc_total:           Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBettiReport {
  pub cocycle:  TorusCocycle,
  pub lattice:  LatticeSubgroup,
  pub lattice_description: String,
  pub degrees:  Vec<DegreeBetti>,
}

impl GradedBettiReport {
  /// `HH` dimensions, when finite in every degree.
  pub fn hh_dims(&self) -> Option<Vec<usize>> { self.degrees.iter().map(|d| d.hh_total).collect() }

  pub fn hc_dims(&self) -> Option<Vec<usize>> { self.degrees.iter().map(|d| d.hc_total).collect() }
}

pub fn torus_homology(c: &TorusCocycle, max_degree: usize) -> Result<GradedBettiReport, TorusError> {
  let lattice = x_lambda(c)?;
  let r = c.r;
  let finite = lattice.is_zero();
  let degrees = (0..=max_degree)
    .map(|n| {
      let hh_per_point = binomial(r, n);
      let hc_constant = (0..=n / 2).map(|i| binomial(r, n - 2 * i)).sum();
      let hc_per_nonzero = binomial(r - 1, n);
      DegreeBetti {
        degree: n,
        hh_per_point,
        hc_constant,
        hc_per_nonzero,
        hh_total: finite.then_some(hh_per_point),
        hc_total: finite.then_some(hc_constant),
      }
    })
    .collect();
  Ok(GradedBettiReport { cocycle: c.clone(), lattice_description: lattice.describe(), lattice, degrees })
}

#[cfg(test)]
mod tests {
  use super::*;

  fn rank2(a12: i64, q: QOrder) -> TorusCocycle { TorusCocycle::new(2, vec![vec![0, a12], vec![-a12, 0]], q).unwrap() }

  #[test]
  fn generic_rank_two() {
    let c = rank2(1, QOrder::Infinite);
    let rep = torus_homology(&c, 4).unwrap();
    assert!(rep.lattice.is_zero());
    assert_eq!(rep.hh_dims().unwrap(), vec![1, 2, 1, 0, 0]);
    assert_eq!(rep.hc_dims().unwrap(), vec![1, 2, 2, 2, 2]);
  }

  #[test]
  fn rank_one_is_laurent() {
    let rep = torus_homology(&TorusCocycle::trivial(1), 3).unwrap();
    assert_eq!(rep.lattice.rank(), 1);
    assert_eq!(rep.hh_dims(), None);
    let per_point: Vec<usize> = rep.degrees.iter().map(|d| d.hh_per_point).collect();
    assert_eq!(per_point, vec![1, 1, 0, 0]);
  }

  #[test]
  fn roots_of_unity() {
    for d in [2u64, 3, 5] {
      let c = rank2(1, QOrder::Finite(d));
      let l = x_lambda(&c).unwrap();
      assert_eq!(l.rank(), 2);
      assert_eq!(box_oracle(&c, &l, 2 * d as i64), None);
      assert!(l.contains(&[d as i64, 0]) && l.contains(&[0, d as i64]));
      assert!(!l.contains(&[1, 0]));
      let rep = torus_homology(&c, 2).unwrap();
      assert_eq!(rep.degrees[0].hc_per_nonzero, 1);
      assert_eq!(rep.degrees[1].hc_per_nonzero, 1);
      assert_eq!(rep.degrees[2].hc_per_nonzero, 0);
    }
  }

  #[test]
  fn rejects_bad_input() {
    assert_eq!(TorusCocycle::new(2, vec![vec![0, 1], vec![1, 0]], QOrder::Infinite), Err(TorusError::NotAntisymmetric(0, 1)));
    assert_eq!(TorusCocycle::new(0, vec![], QOrder::Infinite), Err(TorusError::ZeroRank));
    assert_eq!(TorusCocycle::new(1, vec![vec![0]], QOrder::Finite(0)), Err(TorusError::ZeroOrder));
  }

  #[test]
  fn json_round_trip() {
    let c: TorusCocycle = serde_json::from_str(r#"{"r":2,"a":[[0,1],[-1,0]],"q_order":"infinite"}"#).unwrap();
    assert_eq!(c.q_order, QOrder::Infinite);
    let c: TorusCocycle = serde_json::from_str(r#"{"r":2,"a":[[0,1],[-1,0]],"q_order":3}"#).unwrap();
    assert_eq!(c.q_order, QOrder::Finite(3));
  }
}
