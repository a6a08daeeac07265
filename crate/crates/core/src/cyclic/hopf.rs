use super::object::{CyclicObject, CyclicSpec, Operators};
use super::CyclicError;
use crate::crossed::CrossedModule;
use crate::field::Field;
use crate::hopf::{expand, HopfAlgebra, Tensor};
use crate::linalg::SparseVec;
use crate::report::{Check, Report};

/// Cached iterated coproducts `Δ_{legs-1}(e_i)`.
struct Coproducts<F> {
  table: Vec<Vec<Tensor<F>>>,
}

impl<F: Field> Coproducts<F> {
  fn new(h: &HopfAlgebra<F>, max_legs: usize) -> Self {
    let table = (0..h.dim()).map(|i| (0..=max_legs).map(|l| if l == 0 { Vec::new() } else { h.iterated_coproduct(i, l) }).collect()).collect();
    Coproducts { table }
  }

  fn get(&self, i: usize, legs: usize) -> &Tensor<F> { &self.table[i][legs] }
}

fn encode(slots: &[usize], d: usize) -> usize { slots.iter().fold(0, |acc, &s| acc * d + s) }

fn decode(mut k: usize, d: usize, n: usize) -> Vec<usize> {
  let mut out = vec![0; n];
  for s in out.iter_mut().rev() {
    *s = k % d;
    k /= d;
  }
  out
}

/// `Z̃_n(H) = H^{⊗(n+1)}` with `∂_i = ε` on slot `i`, `μ_i = Δ` on slot `i`,
/// `t_n(h⁰,…,hⁿ) = (hⁿ,h⁰,…,h^{n−1})`.
pub struct AuxSpec<'a, F> {
  h:  &'a HopfAlgebra<F>,
  co: Vec<Vec<(usize, usize, F)>>,
}

impl<'a, F: Field> AuxSpec<'a, F> {
  pub fn new(h: &'a HopfAlgebra<F>) -> Self { AuxSpec { h, co: (0..h.dim()).map(|i| h.coproduct(i).to_vec()).collect() } }
}

impl<F: Field> CyclicSpec<F> for AuxSpec<'_, F> {
  fn dim(&self, n: usize) -> usize { self.h.dim_pow(n + 1) }

  fn face(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let d = self.h.dim();
    let mut s = decode(x, d, n + 1);
    let e = self.h.counit(s.remove(i)).clone();
    SparseVec::single(encode(&s, d), e)
  }

  fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let d = self.h.dim();
    let s = decode(x, d, n + 1);
    SparseVec::from_pairs(
      self.co[s[i]]
        .iter()
        .map(|(a, b, c)| {
          let mut t = Vec::with_capacity(n + 2);
          t.extend_from_slice(&s[..i]);
          t.push(*a);
          t.push(*b);
          t.extend_from_slice(&s[i + 1..]);
          (encode(&t, d), c.clone())
        })
        .collect(),
    )
  }

  fn cyclic(&self, n: usize, x: usize) -> SparseVec<F> {
    let d = self.h.dim();
    let mut s = decode(x, d, n + 1);
    s.rotate_right(1);
    SparseVec::unit(encode(&s, d))
  }
}

/// `Z̃_*(H)` in degrees `0..=max_degree`.
pub fn build_aux_cyclic<F: Field>(h: &HopfAlgebra<F>, max_degree: usize) -> CyclicObject<F> {
  CyclicObject::build(format!("Z~({})", h.name()), &AuxSpec::new(h), max_degree, Operators::All)
}

/// `Z_n(H,M) = H^{⊗(n+1)} ⊗_H M`, realized on `H^{⊗n} ⊗ M` through the section
/// `(h¹,…,hⁿ)⊗m ↦ (h¹,…,hⁿ,1)⊗_H m` and the normal form
/// `ν((h¹,…,h^{n+1})⊗m) = Σ(h¹S(h^{n+1}_(n)),…,hⁿS(h^{n+1}_(1)))⊗h^{n+1}_(n+1)m`.
pub struct HopfCyclicSpec<'a, F> {
  h:      &'a HopfAlgebra<F>,
  m:      &'a CrossedModule<F>,
  co:     Coproducts<F>,
  /// `e_a S(e_l)`.
  mul_s:  Vec<Vec<SparseVec<F>>>,
  unit:   Vec<(usize, F)>,
}

impl<'a, F: Field> HopfCyclicSpec<'a, F> {
  pub fn new(m: &'a CrossedModule<F>, max_degree: usize) -> Self {
    let h = m.base();
    let d = h.dim();
    let mul_s = (0..d).map(|a| (0..d).map(|l| h.mul(&SparseVec::unit(a), &h.antipode_of(&SparseVec::unit(l)))).collect()).collect();
    HopfCyclicSpec {
      h,
      m,
      co: Coproducts::new(h, max_degree + 2),
      mul_s,
      unit: h.unit().iter().map(|(i, c)| (i, c.clone())).collect(),
    }
  }

  fn enc(&self, slots: &[usize], m: usize) -> usize { encode(slots, self.h.dim()) * self.m.dim() + m }

  fn dec(&self, x: usize, n: usize) -> (Vec<usize>, usize) {
    let dm = self.m.dim();
    (decode(x / dm, self.h.dim(), n), x % dm)
  }

  /// `ν` on a pure tensor with `slots.len() = n + 1`, landing in degree `n`.
  pub fn normal_form(&self, slots: &[usize], m: usize) -> SparseVec<F> {
    let n = slots.len() - 1;
    let mut pairs = Vec::new();
    for (legs, c) in self.co.get(slots[n], n + 1) {
      let factors: Vec<SparseVec<F>> = (1..=n).map(|i| self.mul_s[slots[i - 1]][legs[n - i]].clone()).collect();
      let mv = self.m.act_basis(legs[n], m);
      if mv.is_zero() {
        continue;
      }
      for (idx, x) in expand(&factors) {
        let base = encode(&idx, self.h.dim()) * self.m.dim();
        let cx = c.clone() * x;
        for (mj, y) in mv.iter() {
          pairs.push((base + mj, cx.clone() * y.clone()));
        }
      }
    }
    SparseVec::from_pairs(pairs)
  }

  fn normal_form_vec(&self, t: &[(Vec<usize>, usize, F)]) -> SparseVec<F> {
    let mut acc = Vec::new();
    for (slots, m, c) in t {
      for (k, v) in self.normal_form(slots, *m).iter() {
        acc.push((k, c.clone() * v.clone()));
      }
    }
    SparseVec::from_pairs(acc)
  }

  /// `τ` on an arbitrary representative `(h⁰,…,hⁿ)⊗m` of `H^{⊗(n+1)}⊗M`.
  fn tau_lift(&self, slots: &[usize], m: usize) -> SparseVec<F> {
    let n = slots.len() - 1;
    let mut terms = Vec::new();
    for (m0, x, c) in self.m.coact_basis(m) {
      for (p, v) in self.h.mul_basis(slots[n], x).iter() {
        let mut s = Vec::with_capacity(n + 1);
        s.push(p);
        s.extend_from_slice(&slots[..n]);
        terms.push((s, m0, c.clone() * v.clone()));
      }
    }
    self.normal_form_vec(&terms)
  }

  /// Balancing checks on basis representatives in degrees `0..=max`:
  /// `ν(u·h ⊗ m) = ν(u ⊗ hm)` and the same for the lifted `τ`.
  pub fn well_definedness(&self, max: usize, sample_cap: usize) -> Report {
    let h = self.h;
    let d = h.dim();
    let mut nu_bad = None;
    let mut tau_bad = None;
    'outer: for n in 0..=max {
      let count = d.pow(n as u32 + 1) * self.m.dim();
      let step = (count / sample_cap.max(1)).max(1);
      for x in (0..count).step_by(step) {
        let (slots, m) = {
          let dm = self.m.dim();
          (decode(x / dm, d, n + 1), x % dm)
        };
        for e in 0..d {
          // u·e = Σ (s^0 e_(1), …, s^n e_(n+1)).
          let mut moved: Vec<(Vec<usize>, usize, F)> = Vec::new();
          for (legs, c) in self.co.get(e, n + 1) {
            for (idx, v) in h.slotwise_mul(&slots, legs) {
              moved.push((idx, m, c.clone() * v));
            }
          }
          let acted: Vec<(Vec<usize>, usize, F)> = self.m.act_basis(e, m).iter().map(|(mj, c)| (slots.clone(), mj, c.clone())).collect();
          if nu_bad.is_none() && self.normal_form_vec(&moved) != self.normal_form_vec(&acted) {
            nu_bad = Some(format!("degree {n}, basis {x}, e = {}", h.label(e)));
          }
          let tau = |t: &[(Vec<usize>, usize, F)]| {
            let mut acc = SparseVec::zero();
            for (s, mm, c) in t {
              acc = acc.add_scaled(&self.tau_lift(s, *mm), c);
            }
            acc
          };
          if tau_bad.is_none() && tau(&moved) != tau(&acted) {
            tau_bad = Some(format!("degree {n}, basis {x}, e = {}", h.label(e)));
          }
          if nu_bad.is_some() && tau_bad.is_some() {
            break 'outer;
          }
        }
      }
    }
    Report { checks: vec![Check::from_witness("normal_form_balanced", nu_bad), Check::from_witness("tau_well_defined", tau_bad)] }
  }
}

impl<F: Field> CyclicSpec<F> for HopfCyclicSpec<'_, F> {
  fn dim(&self, n: usize) -> usize { self.h.dim_pow(n) * self.m.dim() }

  fn face(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let (mut k, m) = self.dec(x, n);
    if i < n {
      let e = self.h.counit(k.remove(i)).clone();
      SparseVec::single(self.enc(&k, m), e)
    } else {
      self.normal_form(&k, m)
    }
  }

  fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let (k, m) = self.dec(x, n);
    let mut pairs = Vec::new();
    if i < n {
      for (a, b, c) in self.h.coproduct(k[i]) {
        let mut t = Vec::with_capacity(n + 1);
        t.extend_from_slice(&k[..i]);
        t.push(*a);
        t.push(*b);
        t.extend_from_slice(&k[i + 1..]);
        pairs.push((self.enc(&t, m), c.clone()));
      }
    } else {
      let mut t = k.clone();
      t.push(0);
      for (u, c) in &self.unit {
        t[n] = *u;
        pairs.push((self.enc(&t, m), c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  }

  fn cyclic(&self, n: usize, x: usize) -> SparseVec<F> {
    let (k, m) = self.dec(x, n);
    let mut terms = Vec::new();
    for (m0, y, c) in self.m.coact_basis(m) {
      let mut s = Vec::with_capacity(n + 1);
      s.push(y);
      s.extend_from_slice(&k);
      terms.push((s, m0, c.clone()));
    }
    self.normal_form_vec(&terms)
  }
}

/// `Z_*(H,M)` for a modular crossed module `M`. Refuses non-modular input.
pub fn build_cyclic<F: Field>(m: &CrossedModule<F>, max_degree: usize) -> Result<CyclicObject<F>, CyclicError> {
  m.require_modular()?;
  Ok(build_cyclic_unchecked(m, max_degree, Operators::All))
}

/// [`build_cyclic`] restricted to faces and `τ`, enough for homology.
pub fn build_cyclic_for_homology<F: Field>(m: &CrossedModule<F>, max_degree: usize) -> Result<CyclicObject<F>, CyclicError> {
  m.require_modular()?;
  Ok(build_cyclic_unchecked(m, max_degree, Operators::Homology))
}

/// Builds all operators without checking modularity, so that the identity
/// suite can be run against modules that violate the hypotheses.
pub fn build_cyclic_unchecked<F: Field>(m: &CrossedModule<F>, max_degree: usize, ops: Operators) -> CyclicObject<F> {
  let spec = HopfCyclicSpec::new(m, max_degree);
  CyclicObject::build(format!("Z({}, {})", m.base().name(), m.name()), &spec, max_degree, ops)
}
