use super::{CrossedError, CrossedModule};
use crate::field::Field;
use crate::hopf::{HopfAlgebra, HopfSubalgebra};
use crate::linalg::{kernel, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, Report};

fn unit_coaction<F: Field>(h: &HopfAlgebra<F>, m: usize) -> SparseVec<F> {
  let d = h.dim();
  SparseVec::from_pairs(h.unit().iter().map(|(u, c)| (m * d + u, c.clone())).collect())
}

/// `_ad H`: `h·x = Σ h_(2) x S(h_(1))`, coaction `Δ`.
pub fn adjoint<F: Field>(h: &HopfAlgebra<F>) -> CrossedModule<F> {
  let d = h.dim();
  CrossedModule::from_fns(
    h,
    format!("ad({})", h.name()),
    h.labels().to_vec(),
    |i, x| {
      let mut acc = SparseVec::zero();
      for (legs, c) in h.iterated_coproduct(i, 2) {
        let v = h.mul(&h.mul(&SparseVec::unit(legs[1]), &SparseVec::unit(x)), &h.antipode_of(&SparseVec::unit(legs[0])));
        acc = acc.add_scaled(&v, &c);
      }
      acc
    },
    |x| SparseVec::from_pairs(h.coproduct(x).iter().map(|(a, b, c)| (a * d + b, c.clone())).collect()),
  )
  .expect("shapes are consistent")
}

/// `H^ad`: action by multiplication, `ρ(h) = Σ h_(2) ⊗ h_(3) S(h_(1))`.
pub fn coadjoint<F: Field>(h: &HopfAlgebra<F>) -> CrossedModule<F> {
  let d = h.dim();
  CrossedModule::from_fns(
    h,
    format!("coad({})", h.name()),
    h.labels().to_vec(),
    |i, x| h.mul_basis(i, x).clone(),
    |x| {
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(x, 3) {
        let right = h.mul(&SparseVec::unit(legs[2]), &h.antipode_of(&SparseVec::unit(legs[0])));
        for (q, v) in right.iter() {
          pairs.push((legs[1] * d + q, c.clone() * v.clone()));
        }
      }
      SparseVec::from_pairs(pairs)
    },
  )
  .expect("shapes are consistent")
}

/// `_ε k`: trivial action and coaction.
pub fn trivial<F: Field>(h: &HopfAlgebra<F>) -> CrossedModule<F> {
  CrossedModule::from_fns(h, "trivial", vec!["1".into()], |i, _| SparseVec::single(0, h.counit(i).clone()), |m| unit_coaction(h, m))
    .expect("shapes are consistent")
}

/// One-dimensional module with action through the character `chi` and
/// coaction `m ↦ m ⊗ σ`.
pub fn one_dimensional<F: Field>(h: &HopfAlgebra<F>, chi: &[F], sigma: &SparseVec<F>) -> Result<CrossedModule<F>, CrossedError> {
  if !h.is_character(chi) {
    return Err(CrossedError::NotCharacter);
  }
  if !h.is_group_like(sigma) {
    return Err(CrossedError::NotGroupLike);
  }
  let d = h.dim();
  CrossedModule::from_fns(
    h,
    "one-dimensional",
    vec!["1".into()],
    |i, _| SparseVec::single(0, chi[i].clone()),
    |_| SparseVec::from_pairs(sigma.iter().map(|(s, c)| (s, c.clone())).collect()).remap(|s| (s < d).then_some(s)),
  )
}

/// First nontrivial `±1`-valued character of a group algebra, scanning
/// sign patterns in increasing binary order.
pub fn sign_character<F: Field>(h: &HopfAlgebra<F>) -> Option<Vec<F>> {
  let g = h.group()?;
  let n = g.order();
  if n > 20 {
    return None;
  }
  (1u32..(1 << n)).find_map(|mask| {
    let val = |i: usize| if mask >> i & 1 == 1 { -1i64 } else { 1 };
    let ok = (0..n).all(|a| (0..n).all(|b| val(g.mul(a, b)) == val(a) * val(b)));
    ok.then(|| (0..n).map(|i| F::from_i64(val(i))).collect())
  })
}

/// `k_sign`: a nontrivial sign character with trivial coaction.
pub fn sign<F: Field>(h: &HopfAlgebra<F>) -> Result<CrossedModule<F>, CrossedError> {
  let chi = sign_character(h).ok_or(CrossedError::NotGroupAlgebra)?;
  Ok(one_dimensional(h, &chi, h.unit())?.named("sign"))
}

/// Outcome of the modular-pair construction.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ModularPairReport {
  /// `_δ k^σ` is a modular crossed module over `H^{op cop}`.
  pub sayd:        bool,
  /// `(L_{σ⁻¹} S_δ)² = Id`.
  pub involution:  bool,
}

impl ModularPairReport {
  pub fn consistent(&self) -> bool { self.sayd == self.involution }
}

/// `_δ k^σ` over `H^{op cop}` together with both sides of the involution criterion.
pub fn modular_pair_module<F: Field>(
  h: &HopfAlgebra<F>,
  sigma: &SparseVec<F>,
  delta: &[F],
) -> Result<(CrossedModule<F>, ModularPairReport), CrossedError> {
  if !h.is_group_like(sigma) {
    return Err(CrossedError::NotGroupLike);
  }
  if !h.is_character(delta) {
    return Err(CrossedError::NotCharacter);
  }
  let eval = |v: &SparseVec<F>| v.iter().fold(F::zero(), |acc, (i, c)| acc + c.clone() * delta[i].clone());
  if !eval(sigma).is_one() {
    return Err(CrossedError::Hypothesis("δ(σ) ≠ 1".into()));
  }
  let hoc = h.op_cop();
  let module = one_dimensional(&hoc, delta, sigma)?.named("modular-pair");
  let sayd = module.verify_all().all_passed();
  let d = h.dim();
  let sigma_inv = h.antipode_of(sigma);
  let twisted = SparseMatrix::from_fn(d, d, |i| {
    let mut acc = SparseVec::zero();
    for (a, b, c) in h.coproduct(i) {
      acc = acc.add_scaled(&h.antipode_of(&SparseVec::unit(*b)), &(c.clone() * delta[*a].clone()));
    }
    h.mul(&sigma_inv, &acc)
  });
  let involution = twisted.mul(&twisted) == SparseMatrix::identity(d);
  Ok((module, ModularPairReport { sayd, involution }))
}

/// A left Yetter–Drinfeld module: left action and left coaction
/// `λ(m) = Σ m_(-1) ⊗ m_(0)`, flattened as `h · dim(M) + m₀`.
#[derive(Clone, Debug)]
pub struct YetterDrinfeld<F> {
  pub labels:   Vec<String>,
  pub action:   Vec<SparseMatrix<F>>,
  pub coaction: SparseMatrix<F>,
}

fn check_involutive<F: Field>(h: &HopfAlgebra<F>) -> Result<(), CrossedError> {
  if h.antipode().mul(h.antipode()) != SparseMatrix::identity(h.dim()) {
    return Err(CrossedError::NotInvolutive);
  }
  Ok(())
}

/// `ρ'(m) = Σ m_(0) ⊗ S m_(-1)`, after checking `S² = Id` and
/// `λ(hm) = Σ h_(1)m_(-1)S(h_(3)) ⊗ h_(2)m_(0)`.
pub fn from_yetter_drinfeld<F: Field>(h: &HopfAlgebra<F>, yd: &YetterDrinfeld<F>) -> Result<CrossedModule<F>, CrossedError> {
  check_involutive(h)?;
  let n = yd.labels.len();
  let d = h.dim();
  if yd.action.len() != d || yd.coaction.shape() != (d * n, n) {
    return Err(CrossedError::Dimension("Yetter–Drinfeld data has inconsistent shapes".into()));
  }
  let lam = |v: &SparseVec<F>| yd.coaction.apply(v);
  for i in 0..d {
    for m in 0..n {
      let lhs = lam(yd.action[i].col(m));
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(i, 3) {
        let s3 = h.antipode_of(&SparseVec::unit(legs[2]));
        for (k, c2) in yd.coaction.col(m).iter() {
          let (x, m0) = (k / n, k % n);
          let left = h.mul(&h.mul(&SparseVec::unit(legs[0]), &SparseVec::unit(x)), &s3);
          let right = yd.action[legs[1]].col(m0);
          for (p, u) in left.iter() {
            for (q, v) in right.iter() {
              pairs.push((p * n + q, c.clone() * c2.clone() * u.clone() * v.clone()));
            }
          }
        }
      }
      if lhs != SparseVec::from_pairs(pairs) {
        return Err(CrossedError::NotCrossed(format!(
          "Yetter–Drinfeld condition fails at ({}, {})",
          h.label(i),
          yd.labels[m]
        )));
      }
    }
  }
  let coaction = SparseMatrix::from_fn(n * d, n, |m| {
    let mut pairs = Vec::new();
    for (k, c) in yd.coaction.col(m).iter() {
      let (x, m0) = (k / n, k % n);
      for (s, v) in h.antipode_of(&SparseVec::unit(x)).iter() {
        pairs.push((m0 * d + s, c.clone() * v.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  });
  CrossedModule::new(h, "from-yd", yd.labels.clone(), yd.action.clone(), coaction)
}

/// Inverse of [`from_yetter_drinfeld`] (needs `S² = Id`).
pub fn to_yetter_drinfeld<F: Field>(m: &CrossedModule<F>) -> Result<YetterDrinfeld<F>, CrossedError> {
  let h = m.base();
  check_involutive(h)?;
  let n = m.dim();
  let d = h.dim();
  let coaction = SparseMatrix::from_fn(d * n, n, |j| {
    let mut pairs = Vec::new();
    for (m0, x, c) in m.coact_basis(j) {
      for (s, v) in h.antipode_of(&SparseVec::unit(x)).iter() {
        pairs.push((s * n + m0, c.clone() * v.clone()));
      }
    }
    SparseVec::from_pairs(pairs)
  });
  Ok(YetterDrinfeld { labels: m.labels().to_vec(), action: m.action_matrices().to_vec(), coaction })
}

/// `Ind_K^H N = H ⊗_K N`, with `ρ(h⊗n) = Σ (h_(2)⊗n_(0)) ⊗ h_(3) n_(1) S(h_(1))`.
/// The carrier is the quotient of `H⊗N` by `hk⊗n − h⊗kn`.
pub fn induce<F: Field>(k: &HopfSubalgebra<F>, n: &CrossedModule<F>) -> Result<CrossedModule<F>, CrossedError> {
  Ok(induce_with_quotient(k, n)?.0)
}

/// [`induce`] together with the quotient data of `H⊗N → H⊗_K N`
/// (ambient index `h · dim(N) + n`).
pub fn induce_with_quotient<F: Field>(
  k: &HopfSubalgebra<F>,
  n: &CrossedModule<F>,
) -> Result<(CrossedModule<F>, Quotient<F>), CrossedError> {
  let h = k.parent();
  let d = h.dim();
  let dn = n.dim();
  if n.base().dim() != k.dim() {
    return Err(CrossedError::Dimension("module is not over the given subalgebra".into()));
  }
  let incl = k.inclusion();
  let labels: Vec<String> = (0..d).flat_map(|a| (0..dn).map(move |j| (a, j))).map(|(a, j)| format!("{}⊗{}", h.label(a), n.label(j))).collect();
  let ambient = CrossedModule::from_fns(
    h,
    "H⊗N",
    labels,
    |i, x| {
      let (a, j) = (x / dn, x % dn);
      SparseVec::from_pairs(h.mul_basis(i, a).iter().map(|(b, c)| (b * dn + j, c.clone())).collect())
    },
    |x| {
      let (a, j) = (x / dn, x % dn);
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(a, 3) {
        let s1 = h.antipode_of(&SparseVec::unit(legs[0]));
        for (j0, t, c2) in n.coact_basis(j) {
          let right = h.mul(&h.mul(&SparseVec::unit(legs[2]), incl.col(t)), &s1);
          for (q, v) in right.iter() {
            pairs.push(((legs[1] * dn + j0) * d + q, c.clone() * c2.clone() * v.clone()));
          }
        }
      }
      SparseVec::from_pairs(pairs)
    },
  )?;
  let mut relators = Vec::new();
  for a in 0..d {
    for t in 0..k.dim() {
      let hk = h.mul(&SparseVec::unit(a), incl.col(t));
      for j in 0..dn {
        let left = SparseVec::from_pairs(hk.iter().map(|(b, c)| (b * dn + j, c.clone())).collect());
        let right = SparseVec::from_pairs(n.act_basis(t, j).iter().map(|(q, c)| (a * dn + q, c.clone())).collect());
        relators.push(left.sub(&right));
      }
    }
  }
  let sub = Subspace::span(d * dn, &relators);
  let free_dim = d / k.dim() * dn;
  let (m, quo) = ambient.quotient(sub, format!("Ind({})", n.name()))?;
  if k.parent_is_free() && m.dim() != free_dim {
    return Err(CrossedError::Degenerate(format!("H⊗_K N has dimension {}, expected {free_dim}", m.dim())));
  }
  Ok((m, quo))
}

/// `Res_K^H M = M □_H K`, the kernel of `ρ_M ⊗ K − M ⊗ Δ` inside `M⊗K`,
/// with `k·(Σ m_i□x_i) = Σ k_(2)m_i □ k_(3) x_i S(k_(1))`.
pub fn restrict<F: Field>(k: &HopfSubalgebra<F>, m: &CrossedModule<F>) -> Result<CrossedModule<F>, CrossedError> {
  let h = k.parent();
  let ka = k.algebra();
  let d = h.dim();
  let dk = ka.dim();
  let n = m.dim();
  let incl = k.inclusion();
  // Cotensor condition in M⊗H⊗H.
  let cond = SparseMatrix::from_fn(n * d * d, n * dk, |x| {
    let (j, t) = (x / dk, x % dk);
    let mut pairs = Vec::new();
    for (m0, y, c) in m.coact_basis(j) {
      for (s, v) in incl.col(t).iter() {
        pairs.push(((m0 * d + y) * d + s, c.clone() * v.clone()));
      }
    }
    for (s, v) in incl.col(t).iter() {
      for (a, b, c) in h.coproduct(s) {
        pairs.push(((j * d + a) * d + b, -(c.clone() * v.clone())));
      }
    }
    SparseVec::from_pairs(pairs)
  });
  let sub = Subspace::span(n * dk, &kernel(&cond));
  let labels: Vec<String> = (0..n).flat_map(|j| (0..dk).map(move |t| (j, t))).map(|(j, t)| format!("{}□{}", m.label(j), ka.label(t))).collect();
  let ambient = CrossedModule::from_fns(
    ka,
    "M⊗K",
    labels,
    |s, x| {
      let (j, t) = (x / dk, x % dk);
      let mut pairs = Vec::new();
      for (legs, c) in ka.iterated_coproduct(s, 3) {
        let left = m.act(incl.col(legs[1]), &SparseVec::unit(j));
        let right = ka.mul(&ka.mul(&SparseVec::unit(legs[2]), &SparseVec::unit(t)), &ka.antipode_of(&SparseVec::unit(legs[0])));
        for (p, u) in left.iter() {
          for (q, v) in right.iter() {
            pairs.push((p * dk + q, c.clone() * u.clone() * v.clone()));
          }
        }
      }
      SparseVec::from_pairs(pairs)
    },
    |x| {
      let (j, t) = (x / dk, x % dk);
      SparseVec::from_pairs(ka.coproduct(t).iter().map(|(a, b, c)| ((j * dk + a) * dk + b, c.clone())).collect())
    },
  )?;
  let (r, _) = ambient.submodule(&sub, format!("Res({})", m.name()))?;
  Ok(r)
}

/// `G'(N) = N⊗H` with `h(n⊗x) = Σ h_(2)n ⊗ h_(3) x S(h_(1))` and coaction `N⊗Δ`.
pub fn cofree<F: Field>(h: &HopfAlgebra<F>, labels: &[String], action: &[SparseMatrix<F>]) -> Result<CrossedModule<F>, CrossedError> {
  let d = h.dim();
  let n = labels.len();
  if action.len() != d || action.iter().any(|a| a.shape() != (n, n)) {
    return Err(CrossedError::Dimension("module action has inconsistent shapes".into()));
  }
  let names: Vec<String> = (0..n).flat_map(|j| (0..d).map(move |x| (j, x))).map(|(j, x)| format!("{}⊗{}", labels[j], h.label(x))).collect();
  CrossedModule::from_fns(
    h,
    "N⊗H",
    names,
    |i, z| {
      let (j, x) = (z / d, z % d);
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(i, 3) {
        let right = h.mul(&h.mul(&SparseVec::unit(legs[2]), &SparseVec::unit(x)), &h.antipode_of(&SparseVec::unit(legs[0])));
        for (p, u) in action[legs[1]].col(j).iter() {
          for (q, v) in right.iter() {
            pairs.push((p * d + q, c.clone() * u.clone() * v.clone()));
          }
        }
      }
      SparseVec::from_pairs(pairs)
    },
    |z| {
      let (j, x) = (z / d, z % d);
      SparseVec::from_pairs(h.coproduct(x).iter().map(|(a, b, c)| ((j * d + a) * d + b, c.clone())).collect())
    },
  )
}

/// `_HG(N) = Ker(u − Id)` on `G'(N)`, with its inclusion into `N⊗H`.
pub fn hg<F: Field>(h: &HopfAlgebra<F>, labels: &[String], action: &[SparseMatrix<F>]) -> Result<(CrossedModule<F>, SparseMatrix<F>), CrossedError> {
  let g = cofree(h, labels, action)?;
  let u = g.u_map();
  let sub = Subspace::span(g.dim(), &kernel(&u.sub(&SparseMatrix::identity(g.dim()))));
  g.submodule(&sub, "HG")
}

/// `H⊗N` with left multiplication and `ρ(x⊗m) = Σ (x_(2)⊗m_(0)) ⊗ x_(3) m_(1) S(x_(1))`.
pub fn free<F: Field>(h: &HopfAlgebra<F>, labels: &[String], coaction: &SparseMatrix<F>) -> Result<CrossedModule<F>, CrossedError> {
  let d = h.dim();
  let n = labels.len();
  if coaction.shape() != (n * d, n) {
    return Err(CrossedError::Dimension("comodule coaction has inconsistent shape".into()));
  }
  let names: Vec<String> = (0..d).flat_map(|x| (0..n).map(move |j| (x, j))).map(|(x, j)| format!("{}⊗{}", h.label(x), labels[j])).collect();
  CrossedModule::from_fns(
    h,
    "H⊗N",
    names,
    |i, z| {
      let (x, j) = (z / n, z % n);
      SparseVec::from_pairs(h.mul_basis(i, x).iter().map(|(b, c)| (b * n + j, c.clone())).collect())
    },
    |z| {
      let (x, j) = (z / n, z % n);
      let mut pairs = Vec::new();
      for (legs, c) in h.iterated_coproduct(x, 3) {
        let s1 = h.antipode_of(&SparseVec::unit(legs[0]));
        for (k, c2) in coaction.col(j).iter() {
          let (j0, y) = (k / d, k % d);
          let right = h.mul(&h.mul(&SparseVec::unit(legs[2]), &SparseVec::unit(y)), &s1);
          for (q, v) in right.iter() {
            pairs.push(((legs[1] * n + j0) * d + q, c.clone() * c2.clone() * v.clone()));
          }
        }
      }
      SparseVec::from_pairs(pairs)
    },
  )
}

/// `G^H(N) = Coker(u − Id)` on `H⊗N`.
pub fn gh<F: Field>(h: &HopfAlgebra<F>, labels: &[String], coaction: &SparseMatrix<F>) -> Result<CrossedModule<F>, CrossedError> {
  let f = free(h, labels, coaction)?;
  let u = f.u_map().sub(&SparseMatrix::identity(f.dim()));
  let (q, _) = f.quotient(Subspace::column_space(&u), "GH")?;
  Ok(q)
}

/// Checks on the adjunction unit `σ_M : M → _HG(M)` (corestriction of `ρ`).
pub fn adjunction_unit_report<F: Field>(m: &CrossedModule<F>) -> Result<Report, CrossedError> {
  let (g, incl) = hg(m.base(), m.labels(), m.action_matrices())?;
  let space = Subspace::column_space(&incl);
  let rho = m.coaction_matrix();
  let inside = (0..m.dim()).find(|&j| !space.contains(rho.col(j)));
  let rank = crate::linalg::rank(rho);
  let mut rep = Report::new();
  rep.push(Check::from_witness("unit_lands_in_HG", inside.map(|j| m.label(j).to_string())));
  rep.push(Check::from_witness("unit_injective", (rank != m.dim()).then(|| format!("rank {rank} < {}", m.dim()))));
  rep.push(Check::from_witness("HG_modular", g.verify_all().failures().next().map(|c| c.name.clone())));
  Ok(rep)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::field::Q;
  use crate::hopf::FiniteGroup;

  fn q(v: i64) -> Q { Q::from_i64(v) }

  #[test]
  fn modular_pairs_on_abelian_groups() {
    for (name, s) in [("z2", 1), ("z3", 1), ("z2", 0)] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      let eps = h.counit_vec().to_vec();
      let (m, rep) = modular_pair_module(&h, &SparseVec::unit(s), &eps).unwrap();
      assert!(rep.sayd && rep.involution, "{name}");
      assert_eq!(m.dim(), 1);
    }
  }

  #[test]
  fn modular_pair_equivalence_on_sweedler() {
    let h = HopfAlgebra::<Q>::sweedler();
    // Characters of H4: x ↦ 0, g ↦ ±1. Group-likes: 1, g.
    for s in 0..2 {
      for sg in [1, -1] {
        let delta = vec![q(1), q(sg), q(0), q(0)];
        match modular_pair_module(&h, &SparseVec::unit(s), &delta) {
          Ok((_, rep)) => assert!(rep.consistent(), "σ={s}, δ(g)={sg}: {rep:?}"),
          Err(e) => assert!(s == 1 && sg == -1, "{e}"),
        }
      }
    }
    assert!(modular_pair_module(&h, &SparseVec::unit(2), h.counit_vec()).is_err());
  }

  #[test]
  fn yetter_drinfeld_round_trip() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    // M = k, g acts by -1, left coaction m ↦ g ⊗ m.
    let yd = YetterDrinfeld {
      labels:   vec!["m".into()],
      action:   vec![SparseMatrix::identity(1), SparseMatrix::scalar(1, q(-1))],
      coaction: SparseMatrix::from_columns(2, vec![SparseVec::unit(1)]),
    };
    let m = from_yetter_drinfeld(&h, &yd).unwrap();
    assert!(m.verify_crossed().all_passed());
    assert_eq!(*m.coaction_matrix().col(0), SparseVec::unit(1));
    let back = to_yetter_drinfeld(&m).unwrap();
    assert_eq!(back.coaction, yd.coaction);
    assert!(matches!(from_yetter_drinfeld(&HopfAlgebra::<Q>::sweedler(), &yd), Err(CrossedError::NotInvolutive)));
  }

  #[test]
  fn induce_and_restrict_extremes() {
    let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
    let ad = adjoint(&h);
    let whole = HopfSubalgebra::whole(&h);
    let ind = induce(&whole, &restrict(&whole, &ad).unwrap()).unwrap();
    assert_eq!(ind.dim(), 6);
    assert!(ind.verify_all().all_passed());
    let triv = HopfSubalgebra::trivial(&h);
    let t = trivial(triv.algebra());
    let ind = induce(&triv, &t).unwrap();
    assert_eq!(ind.dim(), 6);
    assert!(ind.verify_all().all_passed());
    let z2 = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let res = restrict(&HopfSubalgebra::trivial(&z2), &adjoint(&z2)).unwrap();
    assert_eq!(res.dim(), 1);
  }

  #[test]
  fn hg_of_trivial_is_adjoint() {
    for name in ["s3", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      let t = trivial(&h);
      let (g, incl) = hg(&h, t.labels(), t.action_matrices()).unwrap();
      assert_eq!(g.dim(), h.dim());
      assert!(g.verify_all().all_passed());
      // N⊗H = k⊗H = H, so the inclusion is an isomorphism onto _ad H.
      let ad = adjoint(&h);
      let to_ad = incl.clone();
      assert!(g.is_morphism(&ad, &to_ad), "{name}");
      assert!(adjunction_unit_report(&ad).unwrap().all_passed());
    }
  }

  #[test]
  fn gh_of_trivial_comodule() {
    let h = HopfAlgebra::<Q>::builtin("z2").unwrap();
    let co = SparseMatrix::from_columns(2, vec![SparseVec::unit(0)]);
    let g = gh(&h, &["n".to_string()], &co).unwrap();
    assert_eq!(g.dim(), 2);
    assert!(g.verify_all().all_passed());
    let _ = FiniteGroup::cyclic(2);
  }
}
