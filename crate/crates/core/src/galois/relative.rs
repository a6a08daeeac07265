use serde::Serialize;

use super::algebra::{Algebra, Bimodule};
use super::comodule::ComoduleAlgebra;
use super::extension::{beta_tail, decode, encode, tensor_power_quotient, GaloisExtension};
use super::GaloisError;
use crate::crossed::CrossedModule;
use crate::cyclic::{
  build_cyclic, build_cyclic_unchecked, burghelea_finite, homology_of, sbi_check, BurghelaeReport, Comparison, ComparisonReport,
  CyclicObject, CyclicSpec, Method, Operators,
};
use crate::field::Field;
use crate::linalg::{quasi_iso_check, rank, solve, ChainMap, QuasiIsoDegree, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

/// `Z_*(A/B, M)`: carriers `M⊗̂_B A^{⊗_B n}` realized as quotients of `M⊗A^{⊗n}`
/// (index `m·(dim A)^n + flat(a¹,…,aⁿ)`).
#[derive(Clone, Debug)]
pub struct RelativeCyclic<F> {
  pub carriers:     Vec<Quotient<F>>,
  pub object:       CyclicObject<F>,
  /// `M = A` as a bimodule, so the cyclic operators exist.
  pub regular:      bool,
  pub well_defined: Report,
}

struct RelSpec<'a, F> {
  a:        &'a Algebra<F>,
  m:        &'a Bimodule<F>,
  carriers: &'a [Quotient<F>],
  regular:  bool,
}

impl<F: Field> RelSpec<'_, F> {
  fn da(&self) -> usize { self.a.dim() }

  fn enc(&self, m: usize, slots: &[usize]) -> usize { m * self.da().pow(slots.len() as u32) + encode(slots, self.da()) }

  fn dec(&self, x: usize, n: usize) -> (usize, Vec<usize>) {
    let p = self.da().pow(n as u32);
    (x / p, decode(x % p, self.da(), n))
  }

  fn amb_face(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let (m, s) = self.dec(x, n);
    let mut pairs = Vec::new();
    if i == 0 {
      for (m2, c) in self.m.right[s[0]].col(m).iter() {
        pairs.push((self.enc(m2, &s[1..]), c.clone()));
      }
    } else if i < n {
      let mut t = s.clone();
      t.remove(i);
      for (z, c) in self.a.mul_basis(s[i - 1], s[i]).iter() {
        t[i - 1] = z;
        pairs.push((self.enc(m, &t), c.clone()));
      }
    } else {
      for (m2, c) in self.m.left[s[n - 1]].col(m).iter() {
        pairs.push((self.enc(m2, &s[..n - 1]), c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  }

  fn amb_degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    let (m, s) = self.dec(x, n);
    let mut pairs = Vec::new();
    for (u, c) in self.a.unit().iter() {
      let mut t = s.clone();
      t.insert(i, u);
      pairs.push((self.enc(m, &t), c.clone()));
    }
    SparseVec::from_pairs(pairs)
  }

  fn amb_cyclic(&self, n: usize, x: usize) -> SparseVec<F> {
    if !self.regular {
      return SparseVec::zero();
    }
    let (m, s) = self.dec(x, n);
    if n == 0 {
      return SparseVec::unit(x);
    }
    let mut t = Vec::with_capacity(n);
    t.push(m);
    t.extend_from_slice(&s[..n - 1]);
    SparseVec::unit(self.enc(s[n - 1], &t))
  }

  fn linear(&self, v: &SparseVec<F>, op: impl Fn(usize) -> SparseVec<F>) -> SparseVec<F> {
    v.iter().fold(SparseVec::zero(), |acc, (k, c)| acc.add_scaled(&op(k), c))
  }
}

impl<F: Field> CyclicSpec<F> for RelSpec<'_, F> {
  fn dim(&self, n: usize) -> usize { self.carriers[n].dim() }

  fn face(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    self.carriers[n - 1].project(&self.amb_face(n, i, self.carriers[n].representatives()[x]))
  }

  fn degeneracy(&self, n: usize, i: usize, x: usize) -> SparseVec<F> {
    self.carriers[n + 1].project(&self.amb_degeneracy(n, i, self.carriers[n].representatives()[x]))
  }

  fn cyclic(&self, n: usize, x: usize) -> SparseVec<F> {
    self.carriers[n].project(&self.amb_cyclic(n, self.carriers[n].representatives()[x]))
  }
}

/// Internal balancing and outer commutator relators of `M⊗̂_B A^{⊗_B n}`.
fn relative_carrier<F: Field>(a: &Algebra<F>, b: &Subspace<F>, m: &Bimodule<F>, n: usize) -> Quotient<F> {
  let da = a.dim();
  let p = da.pow(n as u32);
  let amb = m.dim() * p;
  let enc = |mi: usize, s: &[usize]| mi * p + encode(s, da);
  let mut rels = Vec::new();
  for bv in b.basis() {
    let mb: Vec<SparseVec<F>> = (0..m.dim()).map(|j| m.act_right(&SparseVec::unit(j), bv)).collect();
    let bm: Vec<SparseVec<F>> = (0..m.dim()).map(|j| m.act_left(bv, &SparseVec::unit(j))).collect();
    let ab: Vec<SparseVec<F>> = (0..da).map(|i| a.mul(&SparseVec::unit(i), bv)).collect();
    let ba: Vec<SparseVec<F>> = (0..da).map(|i| a.mul(bv, &SparseVec::unit(i))).collect();
    for x in 0..amb {
      let (mi, s) = (x / p, decode(x % p, da, n));
      for pos in 0..=n {
        let mut pairs = Vec::new();
        if pos < n {
          // (s_pos b) ⊗ s_{pos+1} − s_pos ⊗ (b s_{pos+1}), slot 0 being M
          if pos == 0 {
            for (z, c) in mb[mi].iter() {
              pairs.push((enc(z, &s), c.clone()));
            }
          } else {
            let mut t = s.clone();
            for (z, c) in ab[s[pos - 1]].iter() {
              t[pos - 1] = z;
              pairs.push((enc(mi, &t), c.clone()));
            }
          }
          let mut t = s.clone();
          for (z, c) in ba[s[pos]].iter() {
            t[pos] = z;
            pairs.push((enc(mi, &t), -c.clone()));
          }
        } else {
          // b m ⊗ … ⊗ aⁿ − m ⊗ … ⊗ aⁿ b
          for (z, c) in bm[mi].iter() {
            pairs.push((enc(z, &s), c.clone()));
          }
          if n == 0 {
            for (z, c) in mb[mi].iter() {
              pairs.push((enc(z, &s), -c.clone()));
            }
          } else {
            let mut t = s.clone();
            for (z, c) in ab[s[n - 1]].iter() {
              t[n - 1] = z;
              pairs.push((enc(mi, &t), -c.clone()));
            }
          }
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

/// Builds `Z_*(A/B, M)` in degrees `0..=max`. Every operator is evaluated on
/// representatives and checked to send relators to relators.
pub fn relative_cyclic<F: Field>(
  a: &Algebra<F>,
  b: &Subspace<F>,
  m: &Bimodule<F>,
  max: usize,
  ops: Operators,
) -> Result<RelativeCyclic<F>, GaloisError> {
  if !a.is_subalgebra(b) {
    return Err(GaloisError::NotSubalgebra);
  }
  let carriers: Vec<Quotient<F>> = (0..=max).map(|n| relative_carrier(a, b, m, n)).collect();
  let spec = RelSpec { a, m, carriers: &carriers, regular: m.regular };
  let mut face_bad = None;
  let mut degen_bad = None;
  let mut cyc_bad = None;
  for n in 0..=max {
    for r in carriers[n].relators().basis() {
      if n >= 1 && face_bad.is_none() {
        face_bad = (0..=n)
          .find(|&i| !carriers[n - 1].project(&spec.linear(r, |k| spec.amb_face(n, i, k))).is_zero())
          .map(|i| format!("δ_{i} on C_{n}"));
      }
      if n < max && ops == Operators::All && degen_bad.is_none() {
        degen_bad = (0..=n)
          .find(|&i| !carriers[n + 1].project(&spec.linear(r, |k| spec.amb_degeneracy(n, i, k))).is_zero())
          .map(|i| format!("σ_{i} on C_{n}"));
      }
      if m.regular && cyc_bad.is_none() && !carriers[n].project(&spec.linear(r, |k| spec.amb_cyclic(n, k))).is_zero() {
        cyc_bad = Some(format!("τ_{n}"));
      }
    }
  }
  let mut rep = Report::new();
  rep.push(Check::from_witness("faces_preserve_relators", face_bad));
  if ops == Operators::All {
    rep.push(Check::from_witness("degeneracies_preserve_relators", degen_bad));
  }
  if m.regular {
    rep.push(Check::from_witness("cyclic_preserves_relators", cyc_bad));
  }
  if let Some(c) = rep.failures().next() {
    return Err(GaloisError::Internal(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
  }
  let object = CyclicObject::build(format!("Z({}/B, {})", a.name(), m.name), &spec, max, ops);
  Ok(RelativeCyclic { carriers, object, regular: m.regular, well_defined: rep })
}

impl<F: Field> RelativeCyclic<F> {
  pub fn dims(&self) -> &[usize] { self.object.dims() }

  /// Simplicial identities only (the cyclic ones need `M = A`).
  pub fn simplicial_report(&self) -> Report {
    let keep = ["face_face", "degeneracy_degeneracy", "face_degeneracy"];
    self.object.identity_report().checks.into_iter().filter(|c| keep.contains(&c.name.as_str())).collect()
  }
}

/// The `λ_*` comparison between `Z_*(A/B, M)` and `Z_*(H, M_B)`.
#[derive(Clone, Debug)]
pub struct LambdaIso<F> {
  pub relative: RelativeCyclic<F>,
  pub hopf:     CyclicObject<F>,
  /// `M_B` with the Ulbrich–Miyashita action (and the induced coaction when `M = A`).
  pub target:   CrossedModule<F>,
  pub lambda:   Vec<SparseMatrix<F>>,
  pub report:   Report,
}

fn ambient_transport<'a, F: Field>(
  ca: &'a ComoduleAlgebra<F>,
  n: usize,
  target_dim: usize,
  f: impl Fn(usize, usize) -> SparseVec<F> + Sync + 'a,
) -> impl Fn(usize) -> SparseVec<F> + Sync + 'a {
  let da = ca.dim();
  let dh = ca.base.dim();
  let p = da.pow(n as u32);
  move |x: usize| {
    let (m, s) = (x / p, decode(x % p, da, n));
    let mut pairs = Vec::new();
    for (y, hs, c) in beta_tail(ca, &s) {
      let base = encode(&hs, dh) * target_dim;
      for (t, c2) in f(m, y).iter() {
        pairs.push((base + t, c.clone() * c2.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  }
}

/// Compares two families of operators intertwined by `maps`.
fn commutation_report<F: Field>(
  src: &CyclicObject<F>,
  dst: &CyclicObject<F>,
  maps: &[SparseMatrix<F>],
  max: usize,
  cyclic: bool,
) -> Report {
  let mut rep = Report::new();
  let faces = (1..=max).flat_map(|n| (0..=n).map(move |i| (n, i))).find(|&(n, i)| maps[n - 1].mul(src.face(n, i)) != dst.face(n, i).mul(&maps[n]));
  rep.push(Check::from_witness("commutes_with_faces", faces.map(|(n, i)| format!("δ_{i} in degree {n}"))));
  if src.has_degeneracies() && dst.has_degeneracies() {
    let deg = (0..max).flat_map(|n| (0..=n).map(move |i| (n, i))).find(|&(n, i)| {
      maps[n + 1].mul(src.degeneracy(n, i).expect("built")) != dst.degeneracy(n, i).expect("built").mul(&maps[n])
    });
    rep.push(Check::from_witness("commutes_with_degeneracies", deg.map(|(n, i)| format!("σ_{i} in degree {n}"))));
  }
  if cyclic {
    let cyc = (0..=max).find(|&n| maps[n].mul(src.tau(n)) != dst.tau(n).mul(&maps[n]));
    rep.push(Check::from_witness("commutes_with_cyclic", cyc.map(|n| format!("τ_{n}"))));
  }
  rep
}

fn first_failure(rep: &Report) -> Option<String> {
  rep.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

/// `λ_n(m⊗a¹⊗…⊗aⁿ) = Σ (P_1,…,P_n) ⊗ (m a¹₀⋯aⁿ₀)‾` with `P_j = Π_{i≥j} a^i_{(j)}`,
/// obtained from `β_n` built inductively. Cyclic operators are compared when `M = A`.
pub fn lambda_iso<F: Field>(ext: &GaloisExtension<F>, m: &Bimodule<F>, max: usize) -> Result<LambdaIso<F>, GaloisError> {
  let ca = &ext.ca;
  let h = &ca.base;
  let (target, quotient) = if m.regular {
    let ab = ext.ab_crossed_module()?;
    (ab.module, ab.quotient)
  } else {
    let um = ext.um_actions(m);
    if let Some(w) = first_failure(&um.report) {
      return Err(GaloisError::Internal(w));
    }
    let q = um.coinvariants;
    let labels = q.representatives().iter().map(|&r| format!("[{}]", m.labels[r])).collect();
    let n = q.dim();
    let module = CrossedModule::new(h, format!("{}_B", m.name), labels, um.left, SparseMatrix::zero(n * h.dim(), n))?;
    (module, q)
  };
  let relative = relative_cyclic(&ca.algebra, &ext.b, m, max, Operators::All)?;
  let hopf = build_cyclic_unchecked(&target, max, Operators::All);
  let tdim = target.dim();
  let mut wd = None;
  let mut lambda = Vec::with_capacity(max + 1);
  for n in 0..=max {
    let amb = ambient_transport(ca, n, tdim, |mi, y| quotient.project(m.right[y].col(mi)));
    let car = &relative.carriers[n];
    if wd.is_none() {
      wd = car.relators().basis().iter().find(|r| !r.iter().fold(SparseVec::zero(), |acc, (k, c)| acc.add_scaled(&amb(k), c)).is_zero()).map(|_| format!("degree {n}"));
    }
    lambda.push(SparseMatrix::from_fn(hopf.dim(n), car.dim(), |i| amb(car.representatives()[i])));
  }
  let mut report = Report::new();
  report.push(Check::from_witness("well_defined", wd));
  let singular = (0..=max).find(|&n| !lambda[n].is_square() || rank(&lambda[n]) != lambda[n].rows());
  report.push(Check::from_witness(
    "invertible",
    singular.map(|n| format!("degree {n}: {:?}, rank {}", lambda[n].shape(), rank(&lambda[n]))),
  ));
  report.extend(commutation_report(&relative.object, &hopf, &lambda, max, m.regular));
  if let Some(w) = first_failure(&report) {
    return Err(GaloisError::Commutation(w));
  }
  Ok(LambdaIso { relative, hopf, target, lambda, report })
}

/// `HH` and `HC` of `A/B` computed from `Z_*(A/B)` and from `Z_*(H, A_B)`.
pub fn hc_both_ways<F: Field>(ext: &GaloisExtension<F>, max: usize) -> Result<ComparisonReport, GaloisError> {
  let a = &ext.ca.algebra;
  let rel = relative_cyclic(a, &ext.b, &Bimodule::regular(a), max + 1, Operators::Homology)?;
  let ab = ext.ab_crossed_module()?;
  let char0 = F::CHARACTERISTIC == 0;
  let direct = rel.object.homology(max, true, char0, Method::Lambda)?;
  let via = homology_of(&ab.module, max, true, char0, Method::Lambda)?;
  let mut comparisons = vec![Comparison::new("HH", direct.hh.unwrap_or_default(), via.hh.unwrap_or_default())];
  if let (Some(x), Some(y)) = (direct.hc, via.hc) {
    comparisons.push(Comparison::new("HC_bicomplex", x.clone(), rel.object.hc_bicomplex(0..=max)?));
    comparisons.push(Comparison::new("HC", x, y));
  }
  Ok(ComparisonReport { title: format!("{} over its coinvariants", a.name()), comparisons })
}

/// Separability of `B` over `C`: an element `e ∈ B⊗_C B` with `μ(e) = 1` and `be = eb`,
/// in the coordinates of `B⊗_C B` over the basis of `B`.
pub fn separability_element<F: Field>(a: &Algebra<F>, b: &Subspace<F>, c: &Subspace<F>) -> Result<SparseVec<F>, GaloisError> {
  if !b.contains_subspace(c) {
    return Err(GaloisError::NotSubalgebra);
  }
  let bb = a.restrict(b, "B")?;
  let cc = Subspace::span(bb.dim(), &c.basis().iter().map(|v| b.coordinates(v).expect("C ⊆ B")).collect::<Vec<_>>());
  let q = tensor_power_quotient(&bb, &cc, 2);
  let db = bb.dim();
  let qd = q.dim();
  let column = |j: usize| {
    let (x, y) = (q.representatives()[j] / db, q.representatives()[j] % db);
    let mut pairs: Vec<(usize, F)> = bb.mul_basis(x, y).iter().map(|(k, c)| (k, c.clone())).collect();
    for i in 0..db {
      let left: Vec<(usize, F)> = bb.mul_basis(i, x).iter().map(|(k, c)| (k * db + y, c.clone())).collect();
      let right: Vec<(usize, F)> = bb.mul_basis(y, i).iter().map(|(k, c)| (x * db + k, -c.clone())).collect();
      let mut v = left;
      v.extend(right);
      for (k, c) in q.project(&SparseVec::from_pairs(v)).iter() {
        pairs.push((db + i * qd + k, c.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  };
  let mat = SparseMatrix::from_fn(db + db * qd, qd, column);
  solve(&mat, bb.unit()).ok_or(GaloisError::NotSeparable)
}

/// Outcome of [`separable_base_change`].
#[derive(Clone, Debug, Serialize)]
pub struct SeparableReport {
  pub quasi_iso:  Vec<QuasiIsoDegree>,
  pub hh_over_c:  Vec<usize>,
  pub hh_over_b:  Vec<usize>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub hc_over_c:  Option<Vec<usize>>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub hc_over_b:  Option<Vec<usize>>,
  pub sbi_passed: bool,
}

impl SeparableReport {
  pub fn is_quasi_iso(&self) -> bool { self.quasi_iso.iter().all(QuasiIsoDegree::is_iso) }
}

/// The canonical projection `C_*(A/C, M) → C_*(A/B, M)` for `C ⊆ B ⊆ A` with `B/C` separable.
pub fn separable_base_change<F: Field>(
  a: &Algebra<F>,
  b: &Subspace<F>,
  c: &Subspace<F>,
  m: &Bimodule<F>,
  max: usize,
) -> Result<SeparableReport, GaloisError> {
  if !a.is_subalgebra(c) {
    return Err(GaloisError::NotSubalgebra);
  }
  separability_element(a, b, c)?;
  let over_c = relative_cyclic(a, c, m, max + 1, Operators::Homology)?;
  let over_b = relative_cyclic(a, b, m, max + 1, Operators::Homology)?;
  let components = (0..=max + 1).map(|n| over_c.carriers[n].induced(&over_b.carriers[n], SparseVec::unit)).collect();
  let src = over_c.object.hochschild_complex()?;
  let dst = over_b.object.hochschild_complex()?;
  let quasi_iso = quasi_iso_check(&ChainMap { components }, &src, &dst, 0..=max)?;
  let hh_over_c = over_c.object.hochschild(0..=max)?;
  let hh_over_b = over_b.object.hochschild(0..=max)?;
  let (hc_over_c, hc_over_b, sbi_passed) = if m.regular && F::CHARACTERISTIC == 0 {
    let x = over_c.object.hc_connes(0..=max)?;
    let y = over_b.object.hc_connes(0..=max)?;
    let ok = sbi_check(&hh_over_c, &x)?.all_passed() && sbi_check(&hh_over_b, &y)?.all_passed();
    (Some(x), Some(y), ok)
  } else {
    (None, None, true)
  };
  Ok(SeparableReport { quasi_iso, hh_over_c, hh_over_b, hc_over_c, hc_over_b, sbi_passed })
}

/// Graded-case decomposition: the finite-group formula on `A_B` against the direct `HC(A/B)`.
#[derive(Clone, Debug, Serialize)]
pub struct GradedBurghelea {
  pub burghelea: BurghelaeReport,
  /// `HC(A/B)` from the relative cyclic object.
  pub relative:  Vec<usize>,
  /// Dimensions of `Ā_x = A_x/[A_x, B]`, indexed by group element.
  pub components: Vec<usize>,
}

impl GradedBurghelea {
  pub fn agree(&self) -> bool { self.burghelea.agree() && self.burghelea.formula == self.relative }
}

pub fn burghelea_graded<F: Field>(ext: &GaloisExtension<F>, max: usize) -> Result<GradedBurghelea, GaloisError> {
  if F::CHARACTERISTIC != 0 {
    return Err(GaloisError::Cyclic(crate::cyclic::CyclicError::PositiveCharacteristic(F::CHARACTERISTIC)));
  }
  let degrees = ext.ca.degrees.as_ref().ok_or_else(|| GaloisError::Grading("extension is not graded".into()))?;
  let g = ext.ca.base.group().ok_or_else(|| GaloisError::Grading("base is not a group algebra".into()))?;
  let ab = ext.ab_crossed_module()?;
  let burghelea = burghelea_finite(&ab.module, max)?;
  let a = &ext.ca.algebra;
  let rel = relative_cyclic(a, &ext.b, &Bimodule::regular(a), max + 1, Operators::Homology)?;
  let relative = rel.object.hc_connes(0..=max)?;
  let components = (0..g.order())
    .map(|x| ab.quotient.representatives().iter().filter(|&&r| degrees[r] == x).count())
    .collect();
  Ok(GradedBurghelea { burghelea, relative, components })
}

/// `γ_*: Z_*(A) → Z_*(H, M)` for an `H`-coinvariant `M`-trace `tr : A → M`.
#[derive(Clone, Debug)]
pub struct TraceMap<F> {
  pub gamma:  Vec<SparseMatrix<F>>,
  pub report: Report,
}

/// Colinearity of `tr` and `tr(ax) = Σ a₁·tr(x a₀)`.
pub fn trace_axioms<F: Field>(ca: &ComoduleAlgebra<F>, m: &CrossedModule<F>, tr: &SparseMatrix<F>) -> Result<(), GaloisError> {
  let a = &ca.algebra;
  let d = a.dim();
  let dh = ca.base.dim();
  if tr.shape() != (m.dim(), d) {
    return Err(GaloisError::Dimension(format!("trace of shape {:?}", tr.shape())));
  }
  for x in 0..d {
    let lhs = m.coact(tr.col(x));
    let mut rhs = Vec::new();
    for (x0, h, c) in ca.coact_basis(x) {
      for (t, c2) in tr.col(x0).iter() {
        rhs.push((t * dh + h, c.clone() * c2.clone()));
      }
    }
    if lhs != SparseVec::from_pairs(rhs) {
      return Err(GaloisError::TraceAxiom(format!("not colinear at {}", a.label(x))));
    }
  }
  for x in 0..d {
    for y in 0..d {
      let lhs = tr.apply(a.mul_basis(x, y));
      let mut rhs = SparseVec::zero();
      for (x0, h, c) in ca.coact_basis(x) {
        rhs = rhs.add_scaled(&m.act(&SparseVec::unit(h), &tr.apply(a.mul_basis(y, x0))), c);
      }
      if lhs != rhs {
        return Err(GaloisError::TraceAxiom(format!("(a, x) = ({}, {})", a.label(x), a.label(y))));
      }
    }
  }
  Ok(())
}

/// `γ_n(a⁰⊗…⊗aⁿ) = Σ (P_1,…,P_n) ⊗ tr(a⁰ a¹₀⋯aⁿ₀)`, checked against every operator.
pub fn trace_map<F: Field>(ca: &ComoduleAlgebra<F>, m: &CrossedModule<F>, tr: &SparseMatrix<F>, max: usize) -> Result<TraceMap<F>, GaloisError> {
  trace_axioms(ca, m, tr)?;
  let a = &ca.algebra;
  let k = Subspace::span(a.dim(), std::slice::from_ref(a.unit()));
  let src = relative_cyclic(a, &k, &Bimodule::regular(a), max, Operators::All)?;
  let dst = build_cyclic(m, max)?;
  let gamma: Vec<SparseMatrix<F>> = (0..=max)
    .map(|n| {
      let amb = ambient_transport(ca, n, m.dim(), |x, y| tr.apply(a.mul_basis(x, y)));
      let car = &src.carriers[n];
      SparseMatrix::from_fn(dst.dim(n), car.dim(), |i| amb(car.representatives()[i]))
    })
    .collect();
  let report = commutation_report(&src.object, &dst, &gamma, max, true);
  Ok(TraceMap { gamma, report })
}
