//! Input documents.
//!
//! Documents are plain serde types; any serde format can carry them. Scalars
//! are integers or strings such as `"-1/2"`, parsed into the target field.
//! Objects may be given inline or by builtin name.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossed::{adjoint, coadjoint, modular_pair_module, sign, trivial, CrossedError, CrossedModule};
use crate::field::Field;
use crate::galois::{Algebra, ComoduleAlgebra, GaloisError};
use crate::hopf::{FiniteGroup, HopfAlgebra, HopfError};
use crate::linalg::{SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
  #[error("unknown builtin {kind} {name:?}")]
  UnknownBuiltin { kind: &'static str, name: String },
  #[error("malformed scalar {0:?}")]
  Scalar(String),
  #[error("{0}: index {1} out of range")]
  Index(&'static str, usize),
  #[error("unknown basis label {0:?}")]
  Label(String),
  #[error("{0}")]
  Shape(String),
  #[error(transparent)]
  Hopf(#[from] HopfError),
  #[error(transparent)]
  Crossed(#[from] CrossedError),
  #[error(transparent)]
  Galois(#[from] GaloisError),
}

/// An exact scalar: an integer or a string `"n"` / `"n/d"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
  Int(i64),
  Text(String),
}

impl Scalar {
  pub fn parse<F: Field>(&self) -> Result<F, DocError> {
    match self {
      Scalar::Int(v) => Ok(F::from_i64(*v)),
      Scalar::Text(t) => F::parse(t).ok_or_else(|| DocError::Scalar(t.clone())),
    }
  }

  pub fn of<F: Field>(v: &F) -> Self {
    let text = v.to_string();
    text.parse::<i64>().map(Scalar::Int).unwrap_or(Scalar::Text(text))
  }
}

fn scalars<F: Field>(v: &[Scalar]) -> Result<Vec<F>, DocError> { v.iter().map(Scalar::parse).collect() }

fn dense<F: Field>(rows: &[Vec<Scalar>]) -> Result<Vec<Vec<F>>, DocError> { rows.iter().map(|r| scalars(r)).collect() }

/// A basis element, by index or by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
  Index(usize),
  Label(String),
}

impl Element {
  fn resolve(&self, labels: &[String]) -> Result<usize, DocError> {
    match self {
      Element::Index(i) if *i < labels.len() => Ok(*i),
      Element::Index(i) => Err(DocError::Index("element", *i)),
      Element::Label(l) => labels.iter().position(|x| x == l).ok_or_else(|| DocError::Label(l.clone())),
    }
  }
}

fn check_index(what: &'static str, i: usize, d: usize) -> Result<usize, DocError> {
  if i < d {
    Ok(i)
  } else {
    Err(DocError::Index(what, i))
  }
}

/// `{elements, table}` with `table[a][b]` the index of `ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
  pub elements: Vec<String>,
  pub table:    Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
  Builtin(String),
  Inline(GroupDoc),
}

impl GroupRef {
  pub fn build(&self) -> Result<FiniteGroup, DocError> {
    match self {
      GroupRef::Builtin(n) => FiniteGroup::builtin(n).ok_or_else(|| DocError::UnknownBuiltin { kind: "group", name: n.clone() }),
      GroupRef::Inline(g) => Ok(FiniteGroup::new(g.elements.clone(), g.table.clone())?),
    }
  }
}

/// Structure constants of a Hopf algebra.
///
/// `mult` holds `[i, j, k, c]` for `e_i e_j ∋ c e_k`, `comult` holds
/// `[i, a, b, c]` for `Δ(e_i) ∋ c e_a⊗e_b`, and `antipode[i][j]` is the
/// coefficient of `e_i` in `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfDoc {
  #[serde(default)]
  pub name:     Option<String>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub dim:      Option<usize>,
  pub basis:    Vec<String>,
  pub mult:     Vec<(usize, usize, usize, Scalar)>,
  pub unit:     Vec<Scalar>,
  pub comult:   Vec<(usize, usize, usize, Scalar)>,
  pub counit:   Vec<Scalar>,
  pub antipode: Vec<Vec<Scalar>>,
}

/// A Hopf algebra: builtin name, group algebra of a group, or explicit constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
  Builtin(String),
  Group { group: GroupRef },
  Inline(Box<HopfDoc>),
}

impl HopfDoc {
  pub fn of<F: Field>(h: &HopfAlgebra<F>) -> Self {
    let d = h.dim();
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    for i in 0..d {
      for j in 0..d {
        mult.extend(h.mul_basis(i, j).iter().map(|(k, c)| (i, j, k, Scalar::of(c))));
      }
      comult.extend(h.coproduct(i).iter().map(|(a, b, c)| (i, *a, *b, Scalar::of(c))));
    }
    HopfDoc {
      name: Some(h.name().to_string()),
      dim: Some(d),
      basis: h.labels().to_vec(),
      mult,
      unit: h.unit().to_dense(d).iter().map(Scalar::of).collect(),
      comult,
      counit: h.counit_vec().iter().map(Scalar::of).collect(),
      antipode: h.antipode().to_dense().iter().map(|r| r.iter().map(Scalar::of).collect()).collect(),
    }
  }

  /// Assembles the algebra without checking the axioms.
  pub fn build<F: Field>(&self) -> Result<HopfAlgebra<F>, DocError> {
    let d = self.basis.len();
    if let Some(n) = self.dim.filter(|&n| n != d) {
      return Err(DocError::Shape(format!("dim is {n} but the basis has {d} elements")));
    }
    let triples = |v: &[(usize, usize, usize, Scalar)]| -> Result<Vec<(usize, usize, usize, F)>, DocError> {
      v.iter().map(|(a, b, c, s)| Ok((*a, *b, *c, s.parse()?))).collect()
    };
    if self.unit.len() != d || self.antipode.len() != d || self.antipode.iter().any(|r| r.len() != d) {
      return Err(DocError::Shape(format!("unit and antipode must have size {d}")));
    }
    Ok(HopfAlgebra::from_parts(
      self.name.clone().unwrap_or_else(|| "H".into()),
      self.basis.clone(),
      &triples(&self.mult)?,
      SparseVec::from_dense(&scalars::<F>(&self.unit)?),
      &triples(&self.comult)?,
      scalars(&self.counit)?,
      SparseMatrix::from_dense(&dense(&self.antipode)?),
    )?)
  }
}

impl HopfRef {
  pub fn build<F: Field>(&self) -> Result<HopfAlgebra<F>, DocError> {
    match self {
      HopfRef::Builtin(n) => HopfAlgebra::builtin(n).ok_or_else(|| DocError::UnknownBuiltin { kind: "Hopf algebra", name: n.clone() }),
      HopfRef::Group { group } => Ok(HopfAlgebra::group_algebra(&group.build()?)),
      HopfRef::Inline(doc) => doc.build(),
    }
  }
}

/// Named modules over any base: `adjoint`, `coadjoint`, `trivial`, `sign`.
pub fn builtin_module<F: Field>(h: &HopfAlgebra<F>, name: &str) -> Result<CrossedModule<F>, DocError> {
  match name {
    "adjoint" | "ad" => Ok(adjoint(h)),
    "coadjoint" => Ok(coadjoint(h)),
    "trivial" => Ok(trivial(h)),
    "sign" => Ok(sign(h)?),
    _ => Err(DocError::UnknownBuiltin { kind: "module", name: name.into() }),
  }
}

/// A module/comodule over `base`.
///
/// `action` holds `[h, m, m', c]` for `e_h · m ∋ c m'`; `coaction` holds
/// `[m, m', h, c]` for `ρ(m) ∋ c m'⊗e_h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CrossedDoc {
  Builtin {
    #[serde(default)]
    base:    Option<HopfRef>,
    builtin: String,
  },
  ModularPair {
    #[serde(default)]
    base:         Option<HopfRef>,
    modular_pair: ModularPairDoc,
  },
  Inline {
    #[serde(default)]
    base:     Option<HopfRef>,
    #[serde(default)]
    name:     Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim:      Option<usize>,
    basis:    Vec<String>,
    action:   Vec<(usize, usize, usize, Scalar)>,
    coaction: Vec<(usize, usize, usize, Scalar)>,
  },
}

/// `σ` as coordinates of a group-like element, `δ` as character values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularPairDoc {
  pub sigma: Vec<Scalar>,
  pub delta: Vec<Scalar>,
}

impl CrossedDoc {
  pub fn base(&self) -> Option<&HopfRef> {
    match self {
      CrossedDoc::Builtin { base, .. } | CrossedDoc::ModularPair { base, .. } | CrossedDoc::Inline { base, .. } => base.as_ref(),
    }
  }

  pub fn of<F: Field>(m: &CrossedModule<F>) -> Self {
    let h = m.base();
    let mut action = Vec::new();
    for i in 0..h.dim() {
      for x in 0..m.dim() {
        action.extend(m.act_basis(i, x).iter().map(|(y, c)| (i, x, y, Scalar::of(c))));
      }
    }
    let coaction = (0..m.dim()).flat_map(|x| m.coact_basis(x).map(move |(y, k, c)| (x, y, k, Scalar::of(c)))).collect();
    CrossedDoc::Inline {
      base: Some(HopfRef::Inline(Box::new(HopfDoc::of(h)))),
      name: Some(m.name().to_string()),
      dim: Some(m.dim()),
      basis: m.labels().to_vec(),
      action,
      coaction,
    }
  }

  /// Builds the module over its own base, or over `fallback` when none is given.
  pub fn build<F: Field>(&self, fallback: Option<&HopfAlgebra<F>>) -> Result<CrossedModule<F>, DocError> {
    let h = match (self.base(), fallback) {
      (Some(b), _) => b.build()?,
      (None, Some(h)) => h.clone(),
      (None, None) => return Err(DocError::Shape("module document has no base".into())),
    };
    match self {
      CrossedDoc::Builtin { builtin, .. } => builtin_module(&h, builtin),
      CrossedDoc::ModularPair { modular_pair, .. } => {
        let sigma = SparseVec::from_dense(&scalars::<F>(&modular_pair.sigma)?);
        Ok(modular_pair_module(&h, &sigma, &scalars::<F>(&modular_pair.delta)?)?.0)
      },
      CrossedDoc::Inline { name, dim, basis, action, coaction, .. } => {
        let (n, d) = (basis.len(), h.dim());
        if let Some(k) = dim.filter(|&k| k != n) {
          return Err(DocError::Shape(format!("dim is {k} but the basis has {n} elements")));
        }
        let mut acts = vec![Vec::new(); d];
        for (i, x, y, c) in action {
          acts[check_index("action", *i, d)?].push((check_index("action", *y, n)?, check_index("action", *x, n)?, c.parse()?));
        }
        let mut co = Vec::new();
        for (x, y, k, c) in coaction {
          co.push((check_index("coaction", *y, n)? * d + check_index("coaction", *k, d)?, check_index("coaction", *x, n)?, c.parse()?));
        }
        let action = acts.into_iter().map(|t| SparseMatrix::from_triplets(n, n, t)).collect();
        let name = name.clone().unwrap_or_else(|| "M".into());
        Ok(CrossedModule::new(&h, name, basis.clone(), action, SparseMatrix::from_triplets(n * d, n, co))?)
      },
    }
  }
}

/// A finite-dimensional algebra: a Hopf algebra reference or `{basis, mult, unit}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
  Inline {
    #[serde(default)]
    name:  Option<String>,
    basis: Vec<String>,
    mult:  Vec<(usize, usize, usize, Scalar)>,
    unit:  Vec<Scalar>,
  },
  Hopf(HopfRef),
}

impl AlgebraRef {
  pub fn build<F: Field>(&self) -> Result<Algebra<F>, DocError> {
    match self {
      AlgebraRef::Hopf(h) => Ok(Algebra::of_hopf(&h.build()?)),
      AlgebraRef::Inline { name, basis, mult, unit } => {
        let d = basis.len();
        let mut table = vec![Vec::new(); d * d];
        for (i, j, k, c) in mult {
          let (i, j) = (check_index("mult", *i, d)?, check_index("mult", *j, d)?);
          table[i * d + j].push((check_index("mult", *k, d)?, c.parse()?));
        }
        if unit.len() != d {
          return Err(DocError::Shape(format!("unit must have size {d}")));
        }
        Ok(Algebra::new(
          name.clone().unwrap_or_else(|| "A".into()),
          basis.clone(),
          table.into_iter().map(SparseVec::from_pairs).collect(),
          SparseVec::from_dense(&scalars::<F>(unit)?),
        )?)
      },
    }
  }
}

/// `Γ`-grading of an algebra by basis blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingDoc {
  pub group:  GroupRef,
  /// `[degree, [basis elements]]` pairs.
  pub blocks: Vec<(Element, Vec<Element>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedProductDoc {
  pub base:     AlgebraRef,
  pub group:    GroupRef,
  /// One matrix per group element, acting on the base: `action[g][i][j]` is the coefficient of `b_i` in `g·b_j`.
  pub action:   Vec<Vec<Vec<Scalar>>>,
  /// `[x, y, coordinates of ω(x,y) in the base]`; missing pairs default to 1.
  #[serde(default)]
  pub cocycle:  Vec<(Element, Element, Vec<Scalar>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedDoc {
  pub group:   GroupRef,
  /// `[x, y, ω(x,y)]`; missing pairs default to 1.
  #[serde(default)]
  pub cocycle: Vec<(Element, Element, Scalar)>,
}

/// A comodule algebra given by a grading, a crossed product, or a twisted group algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComoduleDoc {
  Graded { algebra: AlgebraRef, grading: GradingDoc },
  CrossedProduct { crossed_product: CrossedProductDoc },
  Twisted { twisted_group_algebra: TwistedDoc },
}

impl ComoduleDoc {
  pub fn build<F: Field>(&self) -> Result<ComoduleAlgebra<F>, DocError> {
    match self {
      ComoduleDoc::Graded { algebra, grading } => {
        let a = algebra.build::<F>()?;
        let g = grading.group.build()?;
        let blocks = grading
          .blocks
          .iter()
          .map(|(x, idx)| Ok((x.resolve(&g.elements)?, idx.iter().map(|i| i.resolve(a.labels())).collect::<Result<Vec<_>, _>>()?)))
          .collect::<Result<Vec<_>, DocError>>()?;
        Ok(ComoduleAlgebra::graded(&a, &g, &blocks)?)
      },
      ComoduleDoc::CrossedProduct { crossed_product: cp } => {
        let b = cp.base.build::<F>()?;
        let g = cp.group.build()?;
        if cp.action.len() != g.order() {
          return Err(DocError::Shape(format!("{} action matrices for a group of order {}", cp.action.len(), g.order())));
        }
        let action = cp.action.iter().map(|m| dense::<F>(m).map(|m| SparseMatrix::from_dense(&m))).collect::<Result<Vec<_>, _>>()?;
        let n = g.order();
        let mut omega = vec![b.unit().clone(); n * n];
        for (x, y, v) in &cp.cocycle {
          omega[x.resolve(&g.elements)? * n + y.resolve(&g.elements)?] = SparseVec::from_dense(&scalars::<F>(v)?);
        }
        Ok(ComoduleAlgebra::crossed_product(&b, &g, &action, |x, y| omega[x * n + y].clone())?)
      },
      ComoduleDoc::Twisted { twisted_group_algebra: t } => {
        let g = t.group.build()?;
        let n = g.order();
        let mut omega = vec![F::one(); n * n];
        for (x, y, c) in &t.cocycle {
          omega[x.resolve(&g.elements)? * n + y.resolve(&g.elements)?] = c.parse()?;
        }
        Ok(ComoduleAlgebra::twisted_group_algebra(&g, |x, y| omega[x * n + y].clone())?)
      },
    }
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::Q;

  #[test]
  fn hopf_round_trip() {
    for name in ["z2", "s3", "sweedler"] {
      let h = HopfAlgebra::<Q>::builtin(name).unwrap();
      let doc = HopfDoc::of(&h);
      let text = serde_json::to_string(&HopfRef::Inline(Box::new(doc))).unwrap();
      let back: HopfRef = serde_json::from_str(&text).unwrap();
      let h2 = back.build::<Q>().unwrap();
      assert_eq!(HopfDoc::of(&h2), HopfDoc::of(&h));
      assert!(h2.verify().all_passed());
    }
  }

  #[test]
  fn crossed_round_trip() {
    let h = HopfAlgebra::<Q>::builtin("s3").unwrap();
    let m = coadjoint(&h);
    let text = serde_json::to_string(&CrossedDoc::of(&m)).unwrap();
    let back: CrossedDoc = serde_json::from_str(&text).unwrap();
    let m2 = back.build::<Q>(None).unwrap();
    assert_eq!(m2.action_matrices(), m.action_matrices());
    assert_eq!(m2.coaction_matrix(), m.coaction_matrix());
  }

  #[test]
  fn references() {
    let doc: CrossedDoc = serde_json::from_str(r#"{"base":"z3","builtin":"adjoint"}"#).unwrap();
    assert_eq!(doc.build::<Q>(None).unwrap().dim(), 3);
    let doc: CrossedDoc = serde_json::from_str(r#"{"builtin":"trivial"}"#).unwrap();
    assert!(doc.build::<Q>(None).is_err());
    let h: HopfRef = serde_json::from_str(r#"{"group":{"elements":["e","a"],"table":[[0,1],[1,0]]}}"#).unwrap();
    assert_eq!(h.build::<Q>().unwrap().dim(), 2);
    assert!(Scalar::Text("1/0".into()).parse::<Q>().is_err());
    assert_eq!(Scalar::Text("-1/2".into()).parse::<Q>().unwrap(), Q::new((-1).into(), 2.into()));
  }

  #[test]
  fn graded_by_labels() {
    let doc: ComoduleDoc =
      serde_json::from_str(r#"{"algebra":"z4","grading":{"group":"z2","blocks":[[0,["e","c^2"]],[1,["c^1","c^3"]]]}}"#).unwrap();
    let ca = doc.build::<Q>().unwrap();
    assert_eq!(ca.coinvariants().dim(), 2);
  }
}
