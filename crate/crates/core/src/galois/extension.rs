use super::algebra::{Algebra, Bimodule};
use super::comodule::ComoduleAlgebra;
use super::GaloisError;
use crate::crossed::CrossedModule;
use crate::field::Field;
use crate::linalg::{inverse, rank, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// A verified Hopf–Galois extension `B = A^{co H} ⊆ A`.
#[derive(Clone, Debug)]
pub struct GaloisExtension<F> {
  pub ca:       ComoduleAlgebra<F>,
  /// Coinvariants, as a subspace of `A`.
  pub b:        Subspace<F>,
  /// `A⊗_B A` as a quotient of `A⊗A` (index `i·dim A + j`).
  pub aa:       Quotient<F>,
  /// `β(x⊗_B y) = Σ x y₀ ⊗ y₁`, from `A⊗_B A` to `A⊗H`.
  pub beta:     SparseMatrix<F>,
  pub beta_inv: SparseMatrix<F>,
  /// `κ(h) = β⁻¹(1⊗h)` in `A⊗_B A` coordinates, one per basis vector of `H`.
  pub kappa:    Vec<SparseVec<F>>,
}

impl<F: Field> GaloisExtension<F> {
  pub fn algebra(&self) -> &Algebra<F> { &self.ca.algebra }

  pub fn hopf_dim(&self) -> usize { self.ca.base.dim() }

  /// `κ(h) = Σ κ¹(h) ⊗ κ²(h)` lifted to `A⊗A` as `(κ¹, κ², c)` triples.
  pub fn kappa_terms(&self, h: usize) -> Vec<(usize, usize, F)> {
    let d = self.ca.dim();
    self.aa.lift_vec(&self.kappa[h]).iter().map(|(k, c)| (k / d, k % d, c.clone())).collect()
  }

  /// `Σ κ(h)` weighted by the coefficients of `v ∈ H`.
  fn kappa_of(&self, v: &SparseVec<F>) -> Vec<(usize, usize, F)> {
    v.iter().flat_map(|(h, c)| self.kappa_terms(h).into_iter().map(move |(x, y, k)| (x, y, c.clone() * k))).collect()
  }

  /// Projection of `Σ (x⊗y)⊗h` from `A⊗A⊗H` to `(A⊗_B A)⊗H`.
  fn project_aah(&self, terms: Vec<(usize, usize, usize, F)>) -> SparseVec<F> {
    let d = self.ca.dim();
    let dh = self.hopf_dim();
    let mut per_h: Vec<Vec<(usize, F)>> = vec![Vec::new(); dh];
    for (x, y, h, c) in terms {
      per_h[h].push((x * d + y, c));
    }
    let mut out = Vec::new();
    for (h, v) in per_h.into_iter().enumerate() {
      for (k, c) in self.aa.project(&SparseVec::from_pairs(v)).iter() {
        out.push((k * dh + h, c.clone()));
      }
    }
    SparseVec::from_pairs(out)
  }

  /// `κ` relations, unit and anti-multiplicativity of `κ`, plus the crossed and
  /// trace-type relations on `A_B`.
  pub fn relations_report(&self) -> Report {
    let ca = &self.ca;
    let h = &ca.base;
    let a = &ca.algebra;
    let dh = h.dim();
    let mut rep = Report::new();
    let lab = |i: usize| h.label(i).to_string();

    // Σκ¹(h₁)⊗κ²(h₁)⊗h₂ = Σκ¹(h)⊗κ²(h)₀⊗κ²(h)₁
    let tau1 = (0..dh).find(|&x| {
      let mut lhs = Vec::new();
      for (p, q, c) in h.coproduct(x) {
        for (k1, k2, c2) in self.kappa_terms(*p) {
          lhs.push((k1, k2, *q, c.clone() * c2));
        }
      }
      let mut rhs = Vec::new();
      for (k1, k2, c) in self.kappa_terms(x) {
        for (y0, y1, c2) in ca.coact_basis(k2) {
          rhs.push((k1, y0, y1, c.clone() * c2.clone()));
        }
      }
      self.project_aah(lhs) != self.project_aah(rhs)
    });
    rep.push(Check::from_witness("tau1", tau1.map(lab)));

    // Σκ¹(h₂)⊗κ²(h₂)⊗S(h₁) = Σκ¹(h)₀⊗κ²(h)⊗κ¹(h)₁
    let tau2 = (0..dh).find(|&x| {
      let mut lhs = Vec::new();
      for (p, q, c) in h.coproduct(x) {
        let s = h.antipode_of(&SparseVec::unit(*p));
        for (k1, k2, c2) in self.kappa_terms(*q) {
          for (t, c3) in s.iter() {
            lhs.push((k1, k2, t, c.clone() * c2.clone() * c3.clone()));
          }
        }
      }
      let mut rhs = Vec::new();
      for (k1, k2, c) in self.kappa_terms(x) {
        for (y0, y1, c2) in ca.coact_basis(k1) {
          rhs.push((y0, k2, y1, c.clone() * c2.clone()));
        }
      }
      self.project_aah(lhs) != self.project_aah(rhs)
    });
    rep.push(Check::from_witness("tau2", tau2.map(lab)));

    // Σκ¹(h)κ²(h) = ε(h)1
    let tau3 = (0..dh).find(|&x| {
      let mut acc = SparseVec::zero();
      for (k1, k2, c) in self.kappa_terms(x) {
        acc = acc.add_scaled(a.mul_basis(k1, k2), &c);
      }
      acc != a.unit().scale(h.counit(x))
    });
    rep.push(Check::from_witness("tau3", tau3.map(lab)));

    // κ(1) = 1⊗1 and κ(xy) = Σκ¹(y)κ¹(x)⊗κ²(x)κ²(y)
    let unit_terms = self.kappa_of(h.unit());
    let d = a.dim();
    let pack = |terms: Vec<(SparseVec<F>, SparseVec<F>, F)>| {
      let mut pairs = Vec::new();
      for (u, v, c) in terms {
        for (i, p) in u.iter() {
          for (j, q) in v.iter() {
            pairs.push((i * d + j, c.clone() * p.clone() * q.clone()));
          }
        }
      }
      self.aa.project(&SparseVec::from_pairs(pairs))
    };
    let unit_lhs = pack(unit_terms.into_iter().map(|(x, y, c)| (SparseVec::unit(x), SparseVec::unit(y), c)).collect());
    let unit_rhs = pack(vec![(a.unit().clone(), a.unit().clone(), F::one())]);
    rep.push(if unit_lhs == unit_rhs { Check::pass("kappa_unit") } else { Check::fail("kappa_unit", "κ(1) ≠ 1⊗1") });

    let mut anti = None;
    'outer: for x in 0..dh {
      for y in 0..dh {
        let lhs = pack(
          self.kappa_of(h.mul_basis(x, y)).into_iter().map(|(p, q, c)| (SparseVec::unit(p), SparseVec::unit(q), c)).collect(),
        );
        let mut terms = Vec::new();
        for (x1, x2, c) in self.kappa_terms(x) {
          for (y1, y2, c2) in self.kappa_terms(y) {
            terms.push((a.mul_basis(y1, x1).clone(), a.mul_basis(x2, y2).clone(), c.clone() * c2));
          }
        }
        if lhs != pack(terms) {
          anti = Some(format!("({}, {})", h.label(x), h.label(y)));
          break 'outer;
        }
      }
    }
    rep.push(Check::from_witness("kappa_antimorphism", anti));

    match self.ab_crossed_module() {
      Ok(ab) => {
        rep.push(ab.tau4.clone());
        let crossed = ab.module.verify_crossed();
        let witness = crossed.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
        rep.push(Check::from_witness("tau5", witness));
        let modular = ab.module.verify_modular();
        let witness = modular.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
        rep.push(Check::from_witness("ab_modular", witness));
      },
      Err(e) => {
        rep.push(Check::fail("tau4", e.to_string()));
        rep.push(Check::fail("tau5", e.to_string()));
      },
    }
    rep
  }

  /// Ulbrich–Miyashita actions: `h·m̄ = Σ(κ²(h) m κ¹(h))‾` on `M_B = M/[M,B]` and
  /// `m·h = Σ κ¹(h) m κ²(h)` on `M^B`.
  pub fn um_actions(&self, m: &Bimodule<F>) -> UmActions<F> {
    let h = &self.ca.base;
    let dh = h.dim();
    let n = m.dim();
    let b = &self.b;
    let mut commutators = Vec::new();
    for bv in b.basis() {
      for j in 0..n {
        let e = SparseVec::unit(j);
        commutators.push(m.act_right(&e, bv).sub(&m.act_left(bv, &e)));
      }
    }
    let quotient = Quotient::by_relators(n, &commutators);
    let kmap = |x: usize, right: bool| {
      SparseMatrix::from_fn(n, n, |j| {
        let e = SparseVec::unit(j);
        let mut acc = SparseVec::zero();
        for (k1, k2, c) in self.kappa_terms(x) {
          let (l, r) = if right { (k1, k2) } else { (k2, k1) };
          let v = m.act_right(&m.act_left(&SparseVec::unit(l), &e), &SparseVec::unit(r));
          acc = acc.add_scaled(&v, &c);
        }
        acc
      })
    };
    let mut rep = Report::new();
    let left_full: Vec<SparseMatrix<F>> = (0..dh).map(|x| kmap(x, false)).collect();
    let wd = (0..dh).find(|&x| quotient.relators().basis().iter().any(|r| !quotient.project(&left_full[x].apply(r)).is_zero()));
    rep.push(Check::from_witness("left_well_defined", wd.map(|x| h.label(x).to_string())));
    let left: Vec<SparseMatrix<F>> = left_full.iter().map(|l| quotient.induced(&quotient, |c| l.apply(&SparseVec::unit(c)))).collect();

    let comm = SparseMatrix::from_columns(n, commutators).transpose();
    let invariants = Subspace::span(n, &crate::linalg::kernel(&comm));
    let right_full: Vec<SparseMatrix<F>> = (0..dh).map(|x| kmap(x, true)).collect();
    let lands = (0..dh).find(|&x| invariants.basis().iter().any(|v| !invariants.contains(&right_full[x].apply(v))));
    rep.push(Check::from_witness("right_lands_in_invariants", lands.map(|x| h.label(x).to_string())));
    let k = invariants.dim();
    let right: Vec<SparseMatrix<F>> = if lands.is_none() {
      right_full
        .iter()
        .map(|r| SparseMatrix::from_fn(k, k, |j| invariants.coordinates(&r.apply(&invariants.basis()[j])).expect("lands in M^B")))
        .collect()
    } else {
      vec![SparseMatrix::zero(k, k); dh]
    };

    let combo = |ms: &[SparseMatrix<F>], v: &SparseVec<F>, size: usize| {
      v.iter().fold(SparseMatrix::zero(size, size), |acc, (i, c)| acc.add(&ms[i].scale(c)))
    };
    let q = quotient.dim();
    let pairs = || (0..dh).flat_map(|x| (0..dh).map(move |y| (x, y)));
    let lm = pairs().find(|&(x, y)| combo(&left, h.mul_basis(x, y), q) != left[x].mul(&left[y]));
    let lu = combo(&left, h.unit(), q) != SparseMatrix::identity(q);
    rep.push(Check::from_witness(
      "left_module",
      lm.map(|(x, y)| format!("({}, {})", h.label(x), h.label(y))).or(lu.then(|| "unit".to_string())),
    ));
    let rm = pairs().find(|&(x, y)| combo(&right, h.mul_basis(x, y), k) != right[y].mul(&right[x]));
    let ru = combo(&right, h.unit(), k) != SparseMatrix::identity(k);
    rep.push(Check::from_witness(
      "right_module",
      rm.map(|(x, y)| format!("({}, {})", h.label(x), h.label(y))).or(ru.then(|| "unit".to_string())),
    ));
    UmActions { coinvariants: quotient, left, invariants, right, report: rep }
  }

  /// Naturality of both actions along a bimodule map `f : M → N`.
  pub fn um_naturality(&self, m: &Bimodule<F>, n: &Bimodule<F>, f: &SparseMatrix<F>) -> Result<Report, GaloisError> {
    if !m.is_morphism(n, f) {
      return Err(GaloisError::NotBimodule("map does not commute with the bimodule actions".into()));
    }
    let um = self.um_actions(m);
    let un = self.um_actions(n);
    let fb = um.coinvariants.induced(&un.coinvariants, |c| f.col(c).clone());
    let k = um.invariants.dim();
    let fi = SparseMatrix::from_fn(un.invariants.dim(), k, |j| {
      un.invariants.coordinates(&f.apply(&um.invariants.basis()[j])).expect("bimodule maps preserve invariants")
    });
    let dh = self.hopf_dim();
    let l = (0..dh).find(|&x| fb.mul(&um.left[x]) != un.left[x].mul(&fb));
    let r = (0..dh).find(|&x| fi.mul(&um.right[x]) != un.right[x].mul(&fi));
    let lab = |x: usize| self.ca.base.label(x).to_string();
    Ok(Report { checks: vec![Check::from_witness("left_natural", l.map(lab)), Check::from_witness("right_natural", r.map(lab))] })
  }

  /// `A_B = A/[A,B]` with the Ulbrich–Miyashita action and the coaction induced by `ρ`.
  pub fn ab_crossed_module(&self) -> Result<AbModule<F>, GaloisError> {
    let a = &self.ca.algebra;
    let reg = Bimodule::regular(a);
    let um = self.um_actions(&reg);
    if let Some(c) = um.report.failures().next() {
      return Err(GaloisError::Internal(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let q = um.coinvariants;
    let dh = self.hopf_dim();
    let coact_proj = |v: &SparseVec<F>| {
      let mut per_h: Vec<Vec<(usize, F)>> = vec![Vec::new(); dh];
      for (k, c) in self.ca.coact(v).iter() {
        per_h[k % dh].push((k / dh, c.clone()));
      }
      let mut out = Vec::new();
      for (h, terms) in per_h.into_iter().enumerate() {
        for (i, c) in q.project(&SparseVec::from_pairs(terms)).iter() {
          out.push((i * dh + h, c.clone()));
        }
      }
      SparseVec::from_pairs(out)
    };
    if let Some(r) = q.relators().basis().iter().find(|r| !coact_proj(r).is_zero()) {
      return Err(GaloisError::CoactionNotInduced(format!("{r:?}")));
    }
    let n = q.dim();
    let coaction = SparseMatrix::from_fn(n * dh, n, |i| coact_proj(&q.lift(i)));
    let labels = q.representatives().iter().map(|&r| format!("[{}]", a.label(r))).collect();
    let module = CrossedModule::new(&self.ca.base, format!("{}_B", a.name()), labels, um.left.clone(), coaction)?;

    // Σ a₁·(m a₀)‾ = (a m)‾
    let d = a.dim();
    let mut tau4 = None;
    'outer: for x in 0..d {
      for y in 0..d {
        let mut lhs = SparseVec::zero();
        for (x0, h, c) in self.ca.coact_basis(x) {
          let v = q.project(a.mul_basis(y, x0));
          lhs = lhs.add_scaled(&module.act(&SparseVec::unit(h), &v), c);
        }
        if lhs != q.project(a.mul_basis(x, y)) {
          tau4 = Some(format!("(a, m) = ({}, {})", a.label(x), a.label(y)));
          break 'outer;
        }
      }
    }
    Ok(AbModule { module, quotient: q, tau4: Check::from_witness("tau4", tau4) })
  }

  /// `β_n(1⊗a¹⊗…⊗aⁿ) ∈ A⊗H^{⊗n}` built inductively from `β`, as `(x, [h¹,…,hⁿ], c)` terms.
  pub fn beta_tail(&self, slots: &[usize]) -> Vec<(usize, Vec<usize>, F)> {
    beta_tail(&self.ca, slots)
  }

  /// `β_n : A^{⊗_B(n+1)} → A⊗H^{⊗n}` on the ambient `A^{⊗(n+1)}`.
  pub fn beta_n_ambient(&self, n: usize) -> SparseMatrix<F> {
    let a = &self.ca.algebra;
    let d = a.dim();
    let dh = self.hopf_dim();
    let rows = d * dh.pow(n as u32);
    SparseMatrix::from_fn(rows, d.pow(n as u32 + 1), |k| {
      let slots = decode(k, d, n + 1);
      let mut pairs = Vec::new();
      for (y, hs, c) in beta_tail(&self.ca, &slots[1..]) {
        for (z, c2) in a.mul_basis(slots[0], y).iter() {
          pairs.push((z * dh.pow(n as u32) + encode(&hs, dh), c.clone() * c2.clone()));
        }
      }
      SparseVec::from_pairs(pairs)
    })
  }

  /// `β_n` descends to `A^{⊗_B(n+1)}`, agrees with `β` for `n = 1`, is invertible, and
  /// its inverse matches `m⊗h¹⊗…⊗hⁿ ↦ Σ m κ¹(h¹)⊗κ²(h¹)κ¹(h²)⊗…⊗κ²(hⁿ)`.
  pub fn beta_n_report(&self, max: usize) -> Report {
    let a = &self.ca.algebra;
    let d = a.dim();
    let dh = self.hopf_dim();
    let mut rep = Report::new();
    for n in 1..=max {
      let q = tensor_power_quotient(a, &self.b, n + 1);
      let amb = self.beta_n_ambient(n);
      let wd = q.relators().basis().iter().any(|r| !amb.apply(r).is_zero());
      rep.push(if wd { Check::fail(format!("beta_{n}_well_defined"), "relator not killed") } else { Check::pass(format!("beta_{n}_well_defined")) });
      let bn = SparseMatrix::from_fn(amb.rows(), q.dim(), |i| amb.col(q.representatives()[i]).clone());
      if n == 1 {
        let same = bn == self.beta;
        rep.push(if same { Check::pass("beta_1_is_beta") } else { Check::fail("beta_1_is_beta", "β_1 ≠ β") });
      }
      let inv = inverse(&bn);
      rep.push(match &inv {
        Some(_) => Check::pass(format!("beta_{n}_invertible")),
        None => Check::fail(format!("beta_{n}_invertible"), format!("rank {} of {}", rank(&bn), amb.rows())),
      });
      if let Some(inv) = inv {
        // Spot-check the closed inverse on every x⊗h¹⊗…⊗hⁿ with x a basis vector.
        let bad = (0..amb.rows()).find(|&k| {
          let x = k / dh.pow(n as u32);
          let hs = decode(k % dh.pow(n as u32), dh, n);
          let mut terms: Vec<(Vec<SparseVec<F>>, F)> = vec![(vec![SparseVec::unit(x)], F::one())];
          for &hj in &hs {
            let mut next = Vec::new();
            for (fs, c) in &terms {
              for (k1, k2, c2) in self.kappa_terms(hj) {
                let mut fs2 = fs.clone();
                let last = fs2.pop().expect("nonempty");
                fs2.push(a.mul(&last, &SparseVec::unit(k1)));
                fs2.push(SparseVec::unit(k2));
                next.push((fs2, c.clone() * c2));
              }
            }
            terms = next;
          }
          let mut acc = SparseVec::zero();
          for (fs, c) in terms {
            acc = acc.add_scaled(&expand_flat(&fs, d), &c);
          }
          q.project(&acc) != inv.col(k).clone()
        });
        rep.push(Check::from_witness(format!("beta_{n}_inverse_formula"), bad.map(|k| format!("column {k}"))));
      }
    }
    rep
  }
}

/// Result of [`GaloisExtension::um_actions`].
#[derive(Clone, Debug)]
pub struct UmActions<F> {
  /// `M_B` as a quotient of `M`.
  pub coinvariants: Quotient<F>,
  /// Left action of each basis vector of `H` on `M_B`.
  pub left:         Vec<SparseMatrix<F>>,
  /// `M^B` as a subspace of `M`.
  pub invariants:   Subspace<F>,
  /// Right action of each basis vector of `H` on `M^B`, in its basis.
  pub right:        Vec<SparseMatrix<F>>,
  pub report:       Report,
}

/// `A_B` as a modular crossed module.
#[derive(Clone, Debug)]
pub struct AbModule<F> {
  pub module:   CrossedModule<F>,
  pub quotient: Quotient<F>,
  pub tau4:     Check,
}

pub(crate) fn encode(slots: &[usize], d: usize) -> usize { slots.iter().fold(0, |acc, &s| acc * d + s) }

pub(crate) fn decode(mut k: usize, d: usize, n: usize) -> Vec<usize> {
  let mut out = vec![0; n];
  for s in out.iter_mut().rev() {
    *s = k % d;
    k /= d;
  }
  out
}

fn expand_flat<F: Field>(factors: &[SparseVec<F>], d: usize) -> SparseVec<F> {
  let mut terms: Vec<(usize, F)> = vec![(0, F::one())];
  for f in factors {
    let mut next = Vec::new();
    for (k, c) in &terms {
      for (i, v) in f.iter() {
        next.push((k * d + i, c.clone() * v.clone()));
      }
    }
    terms = next;
  }
  SparseVec::from_pairs(terms)
}

pub(crate) fn beta_tail<F: Field>(ca: &ComoduleAlgebra<F>, slots: &[usize]) -> Vec<(usize, Vec<usize>, F)> {
  let a = &ca.algebra;
  let Some((&first, rest)) = slots.split_first() else {
    return a.unit().iter().map(|(i, c)| (i, Vec::new(), c.clone())).collect();
  };
  let mut out = Vec::new();
  for (y, hs, c) in beta_tail(ca, rest) {
    for (z, c2) in a.mul_basis(first, y).iter() {
      for (z0, z1, c3) in ca.coact_basis(z) {
        let mut hs2 = Vec::with_capacity(hs.len() + 1);
        hs2.push(z1);
        hs2.extend_from_slice(&hs);
        out.push((z0, hs2, c.clone() * c2.clone() * c3.clone()));
      }
    }
  }
  out
}

/// `A^{⊗_B k}` as a quotient of `A^{⊗k}` by the internal balancing relators.
pub(crate) fn tensor_power_quotient<F: Field>(a: &Algebra<F>, b: &Subspace<F>, k: usize) -> Quotient<F> {
  let d = a.dim();
  let amb = d.pow(k as u32);
  let mut rels = Vec::new();
  for pos in 0..k.saturating_sub(1) {
    for bv in b.basis() {
      let rb: Vec<SparseVec<F>> = (0..d).map(|i| a.mul(&SparseVec::unit(i), bv)).collect();
      let lb: Vec<SparseVec<F>> = (0..d).map(|i| a.mul(bv, &SparseVec::unit(i))).collect();
      for x in 0..amb {
        let s = decode(x, d, k);
        let mut pairs = Vec::new();
        let mut t = s.clone();
        for (z, c) in rb[s[pos]].iter() {
          t[pos] = z;
          pairs.push((encode(&t, d), c.clone()));
        }
        t[pos] = s[pos];
        for (z, c) in lb[s[pos + 1]].iter() {
          t[pos + 1] = z;
          pairs.push((encode(&t, d), -c.clone()));
        }
        let v = SparseVec::from_pairs(pairs);
        if !v.is_zero() {
          rels.push(v);
        }
      }
    }
  }
  Quotient::by_relators(amb, &rels)
}

/// Builds `A⊗_B A`, `β`, checks bijectivity and extracts `κ`.
pub fn galois_check<F: Field>(ca: &ComoduleAlgebra<F>) -> Result<GaloisExtension<F>, GaloisError> {
  let a = &ca.algebra;
  let d = a.dim();
  let dh = ca.base.dim();
  let b = ca.coinvariants();
  if !a.is_subalgebra(&b) {
    return Err(GaloisError::Internal("coinvariants are not a subalgebra".into()));
  }
  let aa = tensor_power_quotient(a, &b, 2);
  let beta_amb = |k: usize| {
    let (x, y) = (k / d, k % d);
    let mut pairs = Vec::new();
    for (y0, y1, c) in ca.coact_basis(y) {
      for (z, c2) in a.mul_basis(x, y0).iter() {
        pairs.push((z * dh + y1, c.clone() * c2.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  };
  if let Some(r) = aa.relators().basis().iter().find(|r| {
    let mut acc = SparseVec::zero();
    for (k, c) in r.iter() {
      acc = acc.add_scaled(&beta_amb(k), c);
    }
    !acc.is_zero()
  }) {
    return Err(GaloisError::Internal(format!("β does not descend to A⊗_B A: {r:?}")));
  }
  let beta = SparseMatrix::from_fn(d * dh, aa.dim(), |i| beta_amb(aa.representatives()[i]));
  let r = rank(&beta);
  if r != d * dh || aa.dim() != d * dh {
    return Err(GaloisError::NotGalois { rank: r, domain: aa.dim(), codomain: d * dh });
  }
  let beta_inv = inverse(&beta).ok_or(GaloisError::NotGalois { rank: r, domain: aa.dim(), codomain: d * dh })?;
  let kappa = (0..dh)
    .map(|h| {
      let mut v = SparseVec::zero();
      for (u, c) in a.unit().iter() {
        v = v.add_scaled(beta_inv.col(u * dh + h), c);
      }
      v
    })
    .collect();
  Ok(GaloisExtension { ca: ca.clone(), b, aa, beta, beta_inv, kappa })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;
  use crate::hopf::HopfAlgebra;

  #[test]
  fn regular_extension_kappa_is_antipode_split() {
    for name in ["z3", "s3", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      let ext = galois_check(&ComoduleAlgebra::regular(&h)).unwrap();
      let d = h.dim();
      for x in 0..d {
        let mut want = Vec::new();
        for (p, q, c) in h.coproduct(x) {
          for (s, c2) in h.antipode_of(&SparseVec::unit(*p)).iter() {
            want.push((s * d + q, c.clone() * c2.clone()));
          }
        }
        assert_eq!(ext.aa.project(&SparseVec::from_pairs(want)), ext.kappa[x], "{name} {x}");
      }
      let rep = ext.relations_report();
      assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
    }
  }

  #[test]
  fn trivial_coaction_is_not_galois() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let ca = ComoduleAlgebra::trivial(&Algebra::diagonal(2), &h);
    assert!(matches!(galois_check(&ca), Err(GaloisError::NotGalois { rank: 2, domain: 2, codomain: 4 })));
  }

  #[test]
  fn beta_n_for_regular_s3() {
    let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
    let ext = galois_check(&ComoduleAlgebra::regular(&h)).unwrap();
    let rep = ext.beta_n_report(2);
    assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
  }
}
