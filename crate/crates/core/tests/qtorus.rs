use hopfcyc::qtorus::{binomial, box_oracle, torus_homology, x_lambda, QOrder, TorusCocycle};
use proptest::prelude::*;

fn cocycle(r: usize, upper: &[i64], q: QOrder) -> TorusCocycle {
  let mut a = vec![vec![0; r]; r];
  let mut it = upper.iter();
  for i in 0..r {
    for j in i + 1..r {
      let v = *it.next().unwrap();
      a[i][j] = v;
      a[j][i] = -v;
    }
  }
  TorusCocycle::new(r, a, q).unwrap()
}

fn order() -> impl Strategy<Value = QOrder> {
  prop_oneof![Just(QOrder::Infinite), (1u64..7).prop_map(QOrder::Finite)]
}

fn arb_cocycle() -> impl Strategy<Value = TorusCocycle> {
  (1usize..4, order()).prop_flat_map(|(r, q)| {
    proptest::collection::vec(-4i64..=4, r * (r - 1) / 2).prop_map(move |upper| cocycle(r, &upper, q))
  })
}

#[test]
fn order_three_gives_3z_squared() {
  let c = cocycle(2, &[1], QOrder::Finite(3));
  let l = x_lambda(&c).unwrap();
  assert_eq!(box_oracle(&c, &l, 6), None);
  for x in -6..=6i64 {
    for y in -6..=6i64 {
      assert_eq!(l.contains(&[x, y]), x % 3 == 0 && y % 3 == 0);
    }
  }
  assert_eq!(l.describe(), "3Z ⊕ 3Z");
}

#[test]
fn rank_three_has_a_free_direction() {
  // a = [[0,1,1],[-1,0,1],[-1,-1,0]] has kernel spanned by (1,-1,1) over Z.
  let c = cocycle(3, &[1, 1, 1], QOrder::Infinite);
  let l = x_lambda(&c).unwrap();
  assert_eq!(l.rank(), 1);
  assert!(l.contains(&[1, -1, 1]) && l.contains(&[-2, 2, -2]));
  assert!(!l.contains(&[1, 0, 0]));
  let rep = torus_homology(&c, 3).unwrap();
  assert_eq!(rep.hh_dims(), None);
  let per_nonzero: Vec<usize> = rep.degrees.iter().map(|d| d.hc_per_nonzero).collect();
  assert_eq!(per_nonzero, vec![1, 2, 1, 0]);
}

#[test]
fn report_serializes_without_totals_for_infinite_lattices() {
  let rep = torus_homology(&TorusCocycle::trivial(1), 1).unwrap();
  let json = serde_json::to_value(&rep).unwrap();
  assert!(json["degrees"][0].get("hh_total").is_none());
  assert_eq!(json["lattice_description"], "Z");
}

proptest! {
  #[test]
  fn lattice_matches_box_oracle(c in arb_cocycle()) {
    let l = x_lambda(&c).unwrap();
    let bound = match c.q_order { QOrder::Finite(m) => 2 * m as i64, QOrder::Infinite => 4 }.min(6);
    prop_assert_eq!(box_oracle(&c, &l, bound), None);
    for b in &l.basis {
      prop_assert!(c.annihilates(b));
    }
  }

  #[test]
  fn betti_patterns_are_binomial(c in arb_cocycle()) {
    let r = c.r;
    let rep = torus_homology(&c, r + 2).unwrap();
    let total: usize = rep.degrees.iter().map(|d| d.hh_per_point).sum();
    prop_assert_eq!(total, 1 << r);
    for d in &rep.degrees {
      prop_assert_eq!(d.hh_per_point, binomial(r, d.degree));
      prop_assert_eq!(d.hc_per_nonzero, binomial(r - 1, d.degree));
      prop_assert_eq!(d.hh_total.is_some(), rep.lattice.is_zero());
    }
  }
}
