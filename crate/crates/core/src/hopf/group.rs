use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::HopfError;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
  pub elements: Vec<String>,
  /// `table[a][b]` is the index of `a·b`.
  pub table:    Vec<Vec<usize>>,
}

/// Conjugacy information for one class representative.
#[derive(Clone, Debug)]
pub struct ClassData {
  pub representative: usize,
  pub class:          Vec<usize>,
  /// Elements of the centralizer `G_x`.
  pub centralizer:    Vec<usize>,
  /// `G_x / ⟨x⟩`, with `quotient_map[i]` the coset of `centralizer[i]`.
  pub quotient:       FiniteGroup,
  pub quotient_map:   Vec<usize>,
}

impl FiniteGroup {
  /// Validates closure, associativity, identity and inverses.
  pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
    let n = elements.len();
    if n == 0 {
      return Err(HopfError::InvalidGroup("empty group".into()));
    }
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
      return Err(HopfError::InvalidGroup(format!("table must be {n}x{n} with entries below {n}")));
    }
    let g = FiniteGroup { elements, table };
    let e = (0..n)
      .find(|&e| (0..n).all(|a| g.table[e][a] == a && g.table[a][e] == a))
      .ok_or_else(|| HopfError::InvalidGroup("no identity element".into()))?;
    for a in 0..n {
      if !(0..n).any(|b| g.table[a][b] == e && g.table[b][a] == e) {
        return Err(HopfError::InvalidGroup(format!("element {} has no inverse", g.elements[a])));
      }
      for b in 0..n {
        for c in 0..n {
          if g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]] {
            return Err(HopfError::InvalidGroup(format!(
              "associativity fails on ({}, {}, {})",
              g.elements[a], g.elements[b], g.elements[c]
            )));
          }
        }
      }
    }
    Ok(g)
  }

  pub fn order(&self) -> usize { self.elements.len() }

  pub fn mul(&self, a: usize, b: usize) -> usize { self.table[a][b] }

  pub fn identity(&self) -> usize {
    (0..self.order()).find(|&e| (0..self.order()).all(|a| self.table[e][a] == a)).expect("validated group")
  }

  pub fn inverse(&self, a: usize) -> usize {
    let e = self.identity();
    (0..self.order()).find(|&b| self.table[a][b] == e).expect("validated group")
  }

  pub fn conjugate(&self, g: usize, x: usize) -> usize { self.mul(self.mul(g, x), self.inverse(g)) }

  pub fn is_abelian(&self) -> bool {
    (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
  }

  pub fn element_order(&self, x: usize) -> usize {
    let e = self.identity();
    let mut y = x;
    let mut k = 1;
    while y != e {
      y = self.mul(y, x);
      k += 1;
    }
    k
  }

  /// Powers of `x`, starting at the identity.
  pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
    let mut out = vec![self.identity()];
    let mut y = x;
    while y != self.identity() {
      out.push(y);
      y = self.mul(y, x);
    }
    out
  }

  pub fn find(&self, label: &str) -> Option<usize> { self.elements.iter().position(|e| e == label) }

  /// Subgroup generated by `gens`, as sorted element indices.
  pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([self.identity()]);
    let mut frontier: Vec<usize> = vec![self.identity()];
    while let Some(a) = frontier.pop() {
      for &g in gens {
        let b = self.mul(a, g);
        if set.insert(b) {
          frontier.push(b);
        }
      }
    }
    set.into_iter().collect()
  }

  pub fn is_subgroup(&self, elems: &[usize]) -> bool {
    let set: BTreeSet<usize> = elems.iter().copied().collect();
    set.contains(&self.identity()) && elems.iter().all(|&a| elems.iter().all(|&b| set.contains(&self.mul(a, self.inverse(b)))))
  }

  /// Quotient `G / N` by the subgroup `sub`, which must be normal in the elements
  /// listed (used for `G_x / ⟨x⟩` with `x` central in `G_x`).
  /// Returns the quotient and the coset index of each element of `within`.
  pub fn quotient_within(&self, within: &[usize], sub: &[usize]) -> (FiniteGroup, Vec<usize>) {
    let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
    let mut map = vec![usize::MAX; within.len()];
    for (i, &a) in within.iter().enumerate() {
      let coset: BTreeSet<usize> = sub.iter().map(|&s| self.mul(a, s)).collect();
      let k = match cosets.iter().position(|c| *c == coset) {
        Some(k) => k,
        None => {
          cosets.push(coset);
          cosets.len() - 1
        },
      };
      map[i] = k;
    }
    let rep: Vec<usize> = (0..cosets.len()).map(|k| within[map.iter().position(|&m| m == k).unwrap()]).collect();
    let coset_of = |g: usize| cosets.iter().position(|c| c.contains(&g)).expect("closed under multiplication");
    let table = (0..cosets.len()).map(|a| (0..cosets.len()).map(|b| coset_of(self.mul(rep[a], rep[b]))).collect()).collect();
    let elements = rep
      .iter()
      .map(|&r| if sub.len() == 1 { self.elements[r].clone() } else { format!("[{}]", self.elements[r]) })
      .collect();
    (FiniteGroup { elements, table }, map)
  }

  /// Conjugacy classes with centralizers and `G_x/⟨x⟩`, one entry per class,
  /// ordered by smallest element index; the representative is that element.
  pub fn conjugacy_data(&self) -> Vec<ClassData> {
    let n = self.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
      if seen[x] {
        continue;
      }
      let class: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect::<BTreeSet<_>>().into_iter().collect();
      for &c in &class {
        seen[c] = true;
      }
      let centralizer: Vec<usize> = (0..n).filter(|&g| self.mul(g, x) == self.mul(x, g)).collect();
      let (quotient, quotient_map) = self.quotient_within(&centralizer, &self.cyclic_subgroup(x));
      out.push(ClassData { representative: x, class, centralizer, quotient, quotient_map });
    }
    out
  }

  pub fn class_count(&self) -> usize { self.conjugacy_data().len() }

  /// `Z/n` with elements `c^0 … c^(n-1)`.
  pub fn cyclic(n: usize) -> Self {
    let elements = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("c^{i}") }).collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup { elements, table }
  }

  /// Direct product, with `(a, b)` at index `a * |other| + b`.
  pub fn product(&self, other: &Self) -> Self {
    let m = other.order();
    let mut elements = Vec::new();
    for a in &self.elements {
      for b in &other.elements {
        elements.push(format!("({a},{b})"));
      }
    }
    let n = self.order() * m;
    let table =
      (0..n).map(|x| (0..n).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect()).collect();
    FiniteGroup { elements, table }
  }

  /// Group of the given permutations, closed under composition `(p·q)(i) = p(q(i))`.
  pub fn from_permutations(gens: &[Vec<usize>]) -> Self {
    let deg = gens[0].len();
    let id: Vec<usize> = (0..deg).collect();
    let mut perms: Vec<Vec<usize>> = vec![id];
    let mut i = 0;
    while i < perms.len() {
      for g in gens {
        let p: Vec<usize> = (0..deg).map(|k| perms[i][g[k]]).collect();
        if !perms.contains(&p) {
          perms.push(p);
        }
      }
      i += 1;
    }
    perms.sort();
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    let table = perms
      .iter()
      .map(|p| perms.iter().map(|q| index(&(0..deg).map(|k| p[q[k]]).collect())).collect())
      .collect();
    let elements = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup { elements, table }
  }

  pub fn symmetric3() -> Self { Self::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]) }

  /// Dihedral group of order 8, as symmetries of a square.
  pub fn dihedral4() -> Self { Self::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]) }

  /// Named groups: `z2, z3, z4, z2xz2, s3, d4`.
  pub fn builtin(name: &str) -> Option<Self> {
    match name {
      "z2" => Some(Self::cyclic(2)),
      "z3" => Some(Self::cyclic(3)),
      "z4" => Some(Self::cyclic(4)),
      "z2xz2" => Some(Self::cyclic(2).product(&Self::cyclic(2))),
      "s3" => Some(Self::symmetric3()),
      "d4" => Some(Self::dihedral4()),
      _ => None,
    }
  }
}

fn cycle_notation(p: &[usize]) -> String {
  let mut seen = vec![false; p.len()];
  let mut out = String::new();
  for s in 0..p.len() {
    if seen[s] || p[s] == s {
      continue;
    }
    let mut cyc = vec![s];
    seen[s] = true;
    let mut k = p[s];
    while k != s {
      seen[k] = true;
      cyc.push(k);
      k = p[k];
    }
    out.push('(');
    out.push_str(&cyc.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(""));
    out.push(')');
  }
  if out.is_empty() {
    "e".into()
  } else {
    out
  }
}

/// Parity of a permutation group element, read from its cycle label.
pub fn permutation_sign(label: &str) -> i64 {
  if label == "e" {
    return 1;
  }
  let mut sign = 1;
  for cyc in label.split(')') {
    let len = cyc.trim_start_matches('(').len();
    if len >= 2 && len % 2 == 0 {
      sign = -sign;
    }
  }
  sign
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn s3_conjugacy() {
    let g = FiniteGroup::symmetric3();
    FiniteGroup::new(g.elements.clone(), g.table.clone()).unwrap();
    let data = g.conjugacy_data();
    let mut sizes: Vec<(usize, usize)> = data.iter().map(|c| (c.class.len(), c.centralizer.len())).collect();
    sizes.sort();
    assert_eq!(sizes, vec![(1, 6), (2, 3), (3, 2)]);
    for c in &data {
      assert_eq!(c.class.len() * c.centralizer.len(), 6);
      if c.class.len() == 3 {
        assert_eq!(c.quotient.order(), 1);
      }
    }
    assert_eq!(g.elements.iter().filter(|l| permutation_sign(l) == -1).count(), 3);
  }

  #[test]
  fn abelian_and_cyclic() {
    let g = FiniteGroup::cyclic(4);
    assert!(g.is_abelian());
    let data = g.conjugacy_data();
    assert!(data.iter().all(|c| c.class.len() == 1 && c.centralizer.len() == 4));
    assert_eq!(data[1].quotient.order(), 1);
    assert_eq!(data[2].quotient.order(), 2);
    assert_eq!(FiniteGroup::dihedral4().order(), 8);
    assert_eq!(FiniteGroup::dihedral4().class_count(), 5);
    assert_eq!(FiniteGroup::builtin("z2xz2").unwrap().class_count(), 4);
  }

  #[test]
  fn rejects_bad_tables() {
    assert!(FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 1]]).is_err());
    assert!(FiniteGroup::new(vec!["a".into()], vec![vec![1]]).is_err());
  }
}
