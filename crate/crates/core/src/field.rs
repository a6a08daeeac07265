//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Q`]) and prime fields
//! ([`Fp`]) with the characteristic fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// An exact field. Arithmetic never rounds; division is only available
/// through [`Field::inv`], which fails on zero.
pub trait Field:
  Clone
  + Debug
  + Display
  + PartialEq
  + Eq
  + Hash
  + Zero
  + One
  + Add<Output = Self>
  + Sub<Output = Self>
  + Mul<Output = Self>
  + Neg<Output = Self>
  + Send
  + Sync
  + 'static
{
  /// 0 for the rationals, `p` for `F_p`.
  const CHARACTERISTIC: u64;

  fn from_i64(v: i64) -> Self;

  /// Multiplicative inverse; `None` for zero.
  fn inv(&self) -> Option<Self>;

  /// Parses `"n"` or `"n/d"`. Fails on malformed text or a zero denominator.
  fn parse(text: &str) -> Option<Self> {
    let text = text.trim();
    match text.split_once('/') {
      None => text.parse::<i64>().ok().map(Self::from_i64),
      Some((n, d)) => {
        let n = n.trim().parse::<i64>().ok()?;
        let d = Self::from_i64(d.trim().parse::<i64>().ok()?);
        Some(Self::from_i64(n) * d.inv()?)
      },
    }
  }

  fn checked_div(&self, rhs: &Self) -> Option<Self> { rhs.inv().map(|r| self.clone() * r) }

  /// Image in `Z/p` for characteristic-0 fields; `None` when `p` divides
  /// the denominator or the field has positive characteristic.
  fn residue(&self, _p: u64) -> Option<u64> { None }

  /// A short name used in reports (`"Q"`, `"F5"`).
  fn name() -> String {
    if Self::CHARACTERISTIC == 0 {
      "Q".to_string()
    } else {
      format!("F{}", Self::CHARACTERISTIC)
    }
  }
}

/// The rational numbers with arbitrary-precision numerator and denominator.
pub type Q = BigRational;

impl Field for BigRational {
  const CHARACTERISTIC: u64 = 0;

  fn from_i64(v: i64) -> Self { BigRational::from_integer(BigInt::from(v)) }

  fn residue(&self, p: u64) -> Option<u64> {
    let p = BigInt::from(p);
    let n = self.numer().mod_floor(&p).to_u64()?;
    let d = self.denom().mod_floor(&p).to_u64()?;
    let pm = p.to_u64()?;
    if d == 0 {
      return None;
    }
    let inv = pow_mod(d, pm - 2, pm);
    Some((n as u128 * inv as u128 % pm as u128) as u64)
  }

  fn inv(&self) -> Option<Self> {
    if self.is_zero() {
      None
    } else {
      Some(self.recip())
    }
  }

  fn parse(text: &str) -> Option<Self> {
    let text = text.trim();
    match text.split_once('/') {
      None => BigInt::from_str(text).ok().map(BigRational::from_integer),
      Some((n, d)) => {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
          None
        } else {
          Some(BigRational::new(n, d))
        }
      },
    }
  }
}

/// Renders a rational the way input documents spell it (`"3"`, `"-1/2"`).
pub fn format_rational(q: &Q) -> String {
  if q.is_integer() {
    q.numer().to_string()
  } else {
    format!("{}/{}", q.numer(), q.denom())
  }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
  let mut base = b as u128;
  let mut acc: u128 = 1;
  let p = p as u128;
  while e > 0 {
    if e & 1 == 1 {
      acc = acc * base % p;
    }
    base = base * base % p;
    e >>= 1;
  }
  acc as u64
}

/// The prime field `Z/P`. `P` must be prime; see [`Fp::is_prime_modulus`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
  pub fn new(v: i64) -> Self { Fp(v.rem_euclid(P as i64) as u64) }

  pub fn value(self) -> u64 { self.0 }

  pub fn is_prime_modulus() -> bool {
    if P < 2 {
      return false;
    }
    let mut d = 2;
    while d * d <= P {
      if P % d == 0 {
        return false;
      }
      d += 1;
    }
    true
  }

  fn pow(self, e: u64) -> Self { Fp(pow_mod(self.0, e, P)) }

}

impl<const P: u64> Debug for Fp<P> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{} (mod {})", self.0, P) }
}

impl<const P: u64> Display for Fp<P> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{}", self.0) }
}

impl<const P: u64> Zero for Fp<P> {
  fn zero() -> Self { Fp(0) }

  fn is_zero(&self) -> bool { self.0 == 0 }
}

impl<const P: u64> One for Fp<P> {
  fn one() -> Self { Fp(1 % P) }
}

impl<const P: u64> Add for Fp<P> {
  type Output = Self;

  fn add(self, rhs: Self) -> Self {
    let s = self.0 + rhs.0;
    Fp(if s >= P { s - P } else { s })
  }
}

impl<const P: u64> Sub for Fp<P> {
  type Output = Self;

  fn sub(self, rhs: Self) -> Self { Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 }) }
}

impl<const P: u64> Mul for Fp<P> {
  type Output = Self;

  fn mul(self, rhs: Self) -> Self {
    if P <= u32::MAX as u64 {
      Fp(self.0 * rhs.0 % P)
    } else {
      Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
  }
}

impl<const P: u64> Neg for Fp<P> {
  type Output = Self;

  fn neg(self) -> Self { if self.0 == 0 { self } else { Fp(P - self.0) } }
}

impl<const P: u64> Field for Fp<P> {
  const CHARACTERISTIC: u64 = P;

  fn from_i64(v: i64) -> Self { Fp::new(v) }

  fn inv(&self) -> Option<Self> {
    if self.0 == 0 {
      None
    } else {
      // Fermat; P is prime.
      Some(self.pow(P - 2))
    }
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  type F5 = Fp<5>;

  #[test]
  fn rational_parse_and_inverse() {
    let a = Q::parse("-3/6").unwrap();
    assert_eq!(a, Q::from_i64(-1) * Q::from_i64(2).inv().unwrap());
    assert_eq!(format_rational(&a), "-1/2");
    assert!(Q::parse("1/0").is_none());
    assert!(Q::zero().inv().is_none());
    assert!(Q::from_i64(3).checked_div(&Q::zero()).is_none());
  }

  #[test]
  fn prime_field_arithmetic() {
    assert!(F5::is_prime_modulus());
    assert!(!Fp::<6>::is_prime_modulus());
    let two = F5::from_i64(2);
    assert_eq!(two.inv().unwrap(), F5::from_i64(3));
    assert_eq!(F5::from_i64(-1), F5::from_i64(4));
    assert_eq!(F5::parse("1/2").unwrap(), F5::from_i64(3));
    assert_eq!(F5::name(), "F5");
    assert_eq!(Q::name(), "Q");
    for v in 1..5 {
      let x = F5::from_i64(v);
      assert_eq!(x * x.inv().unwrap(), F5::one());
    }
  }
}
