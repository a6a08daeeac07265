//! Acceptance suite: one pass/fail line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfcyc::crossed::{adjoint, coadjoint, coinvariants_filtration, one_dimensional, sign, trivial};
use hopfcyc::cyclic::{
  build_aux_cyclic, build_cyclic, build_cyclic_unchecked, burghelea_finite, e1_page_report, homology_of, sbi_check, semisimple_reduction,
  shapiro_check, tor_fold_check, tor_oracle, HopfCyclicSpec, Method, Operators,
};
use hopfcyc::galois::{galois_check, hc_both_ways, lambda_iso, separable_base_change, Algebra, Bimodule, ComoduleAlgebra};
use hopfcyc::hopf::{permutation_sign, HopfSubalgebra};
use hopfcyc::linalg::{SparseVec, Subspace};
use hopfcyc::qtorus::{torus_homology, x_lambda, QOrder, TorusCocycle};
use hopfcyc::{Field, FiniteGroup, HopfAlgebra, Q};

type Outcome = Result<String, String>;

/// `(HH, HC)` pairs collected for the exactness check.
type Pairs = Vec<(String, Vec<usize>, Vec<usize>)>;

fn alg(name: &str) -> HopfAlgebra<Q> { HopfAlgebra::builtin(name).unwrap() }

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> { if ok { Ok(()) } else { Err(msg()) } }

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
  ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn within(what: &str, t: Instant, limit: Duration) -> Result<(), String> {
  ensure(t.elapsed() < limit, || format!("{what} took {:?}, limit {limit:?}", t.elapsed()))
}

/// Conjugacy classes by brute force over the multiplication table.
fn class_count(g: &FiniteGroup) -> usize {
  let n = g.order();
  let e = (0..n).find(|&e| (0..n).all(|x| g.table[e][x] == x)).unwrap();
  let mut seen = vec![false; n];
  let mut classes = 0;
  for x in 0..n {
    if seen[x] {
      continue;
    }
    classes += 1;
    for y in 0..n {
      let yinv = (0..n).find(|&z| g.table[y][z] == e).unwrap();
      seen[g.table[g.table[y][x]][yinv]] = true;
    }
  }
  classes
}

fn even_pattern(c: usize, len: usize) -> Vec<usize> { (0..len).map(|n| if n % 2 == 0 { c } else { 0 }).collect() }

fn c1_aux_values(pairs: &mut Pairs) -> Outcome {
  for name in ["z2", "z3"] {
    let t = Instant::now();
    let z = build_aux_cyclic(&alg(name), 5);
    let (hh, hc) = (z.hochschild(0..=4).map_err(|e| e.to_string())?, z.hc_connes(0..=4).map_err(|e| e.to_string())?);
    eq(&format!("HH~({name})"), &hh, &vec![1, 0, 0, 0, 0])?;
    eq(&format!("HC~({name})"), &hc, &vec![1, 0, 1, 0, 1])?;
    within(name, t, Duration::from_secs(10))?;
    pairs.push((format!("aux {name}"), hh, hc));
  }
  let t = Instant::now();
  let z = build_aux_cyclic(&alg("s3"), 4);
  let (hh, hc) = (z.hochschild(0..=3).map_err(|e| e.to_string())?, z.hc_connes(0..=3).map_err(|e| e.to_string())?);
  eq("HH~(s3)", &hh, &vec![1, 0, 0, 0])?;
  eq("HC~(s3)", &hc, &vec![1, 0, 1, 0])?;
  within("s3", t, Duration::from_secs(120))?;
  pairs.push(("aux s3".into(), hh, hc));
  Ok("z2, z3 to degree 4; s3 to degree 3".into())
}

fn c2_identity_suite(_: &mut Pairs) -> Outcome {
  let z = build_cyclic(&adjoint(&alg("s3")), 4).map_err(|e| e.to_string())?;
  let rep = z.identity_report();
  ensure(rep.all_passed(), || format!("s3 adjoint: {:?}", rep.failures().collect::<Vec<_>>()))?;
  let h = alg("z2");
  let bad = one_dimensional(&h, &[Q::from_i64(1), Q::from_i64(-1)], &SparseVec::unit(1)).map_err(|e| e.to_string())?;
  let zb = build_cyclic_unchecked(&bad, 3, Operators::All);
  let wd = HopfCyclicSpec::new(&bad, 3).well_definedness(3, 64);
  let fails = !zb.identity_report().passed("cyclic_order") || !wd.all_passed();
  ensure(fails, || "non-modular sign module passed the suite".into())?;
  Ok(format!("{} identity checks on (kS3, ad); non-modular input rejected", rep.checks.len()))
}

fn c3_oracle(pairs: &mut Pairs) -> Outcome {
  let s3 = alg("s3");
  let cases = [("z2 ad", adjoint(&alg("z2"))), ("z4 ad", adjoint(&alg("z4"))), ("s3 trivial", trivial(&s3)), ("s3 ad", adjoint(&s3))];
  for (label, m) in cases {
    let rep = homology_of(&m, 4, true, true, Method::Lambda).map_err(|e| e.to_string())?;
    let hh = rep.hh.unwrap();
    let tor = tor_oracle(m.base(), m.action_matrices(), 0..=4).map_err(|e| e.to_string())?;
    eq(label, &hh, &tor)?;
    pairs.push((label.into(), hh, rep.hc.unwrap()));
  }
  Ok("HH = Tor for 4 pairs, degrees 0..4".into())
}

fn c4_burghelea(pairs: &mut Pairs) -> Outcome {
  let t = Instant::now();
  for name in ["z2", "z3", "z2xz2", "s3"] {
    let h = alg(name);
    let c = class_count(h.group().unwrap());
    let rep = burghelea_finite(&adjoint(&h), 3).map_err(|e| e.to_string())?;
    eq(&format!("{name} direct"), &rep.direct, &even_pattern(c, 4))?;
    eq(&format!("{name} formula"), &rep.formula, &rep.direct)?;
    let hh = homology_of(&adjoint(&h), 3, true, false, Method::Lambda).map_err(|e| e.to_string())?.hh.unwrap();
    pairs.push((format!("burghelea {name}"), hh, rep.direct));
  }
  within("all groups", t, Duration::from_secs(300))?;
  Ok("c(G) = 2, 3, 4, 3".into())
}

fn s3_by_sign() -> ComoduleAlgebra<Q> {
  let g = FiniteGroup::symmetric3();
  let phi: Vec<usize> = g.elements.iter().map(|l| usize::from(permutation_sign(l) < 0)).collect();
  ComoduleAlgebra::group_algebra_graded(&g, &FiniteGroup::cyclic(2), &phi).unwrap()
}

fn c5_galois(pairs: &mut Pairs) -> Outcome {
  let ext = galois_check(&s3_by_sign()).map_err(|e| e.to_string())?;
  eq("β shape", ext.beta.shape(), (12, 12))?;
  let rel = ext.relations_report();
  for name in ["tau1", "tau2", "tau3", "tau4", "tau5"] {
    ensure(rel.passed(name), || format!("{name}: {:?}", rel.get(name)))?;
  }
  let iso = lambda_iso(&ext, &Bimodule::regular(ext.algebra()), 3).map_err(|e| e.to_string())?;
  ensure(iso.report.all_passed(), || format!("λ: {:?}", iso.report.failures().collect::<Vec<_>>()))?;
  let cmp = hc_both_ways(&ext, 3).map_err(|e| e.to_string())?;
  ensure(cmp.agree(), || format!("{cmp:?}"))?;
  let want = even_pattern(class_count(&FiniteGroup::symmetric3()), 4);
  eq("HC(A/B)", &cmp.get("HC").unwrap().left, &want)?;
  pairs.push(("A/B".into(), cmp.get("HH").unwrap().left.clone(), cmp.get("HC").unwrap().left.clone()));
  Ok("β bijective, relations exact, λ commutes to degree 3, HC = (3,0,3,0) both ways".into())
}

fn a3(s3: &HopfAlgebra<Q>) -> HopfSubalgebra<Q> {
  let even: Vec<usize> = s3.labels().iter().enumerate().filter(|(_, l)| permutation_sign(l) > 0).map(|(i, _)| i).collect();
  HopfSubalgebra::subgroup(s3, &even).unwrap()
}

fn c6_semisimple(pairs: &mut Pairs) -> Outcome {
  let s3 = alg("s3");
  let m = adjoint(&s3);
  let rep = semisimple_reduction(&a3(&s3), &m, 3).map_err(|e| e.to_string())?;
  let hh = rep.get("HH").unwrap();
  eq("HH", &hh.left, &hh.right)?;
  let hc = rep.get("HC").unwrap();
  pairs.push(("s3 ad reduced".into(), hh.right.clone(), hc.right.clone()));
  Ok(format!("HH = {:?} on both sides", hh.left))
}

fn c7_shapiro(pairs: &mut Pairs) -> Outcome {
  let z4 = alg("z4");
  let half = HopfSubalgebra::subgroup(&z4, &[0, 2]).unwrap();
  let rep = shapiro_check(&half, &adjoint(half.algebra()), 3).map_err(|e| e.to_string())?;
  let hc = rep.get("HC").unwrap();
  eq("HC", &hc.left, &hc.right)?;
  pairs.push(("induced z4".into(), rep.get("HH").unwrap().left.clone(), hc.left.clone()));
  Ok(format!("HC = {:?} on both sides", hc.left))
}

fn c8_tor_fold(pairs: &mut Pairs) -> Outcome {
  let r = tor_fold_check(&sign(&alg("z2")).map_err(|e| e.to_string())?, 4).map_err(|e| e.to_string())?;
  ensure(r.agree(), || format!("{r:?}"))?;
  eq("HC(z2, sign)", &r.comparisons[0].left, &vec![0; 5])?;
  let r = tor_fold_check(&trivial(&alg("z3")), 3).map_err(|e| e.to_string())?;
  ensure(r.agree(), || format!("{r:?}"))?;
  eq("HC(z3, trivial)", &r.comparisons[0].left, &vec![1, 0, 1, 0])?;
  for (label, m, max) in [("z2 sign", sign(&alg("z2")).unwrap(), 4), ("z3 trivial", trivial(&alg("z3")), 3)] {
    let rep = homology_of(&m, max, true, true, Method::Lambda).map_err(|e| e.to_string())?;
    pairs.push((label.into(), rep.hh.unwrap(), rep.hc.unwrap()));
  }
  Ok("direct = folded Tor".into())
}

fn span_units(d: usize, idx: &[usize]) -> Subspace<Q> { Subspace::span(d, &idx.iter().map(|&i| SparseVec::unit(i)).collect::<Vec<_>>()) }

fn c9_separable(_: &mut Pairs) -> Outcome {
  let a = Algebra::of_hopf(&alg("z4"));
  let rep = separable_base_change(&a, &span_units(4, &[0, 2]), &span_units(4, &[0]), &Bimodule::regular(&a), 3).map_err(|e| e.to_string())?;
  ensure(rep.is_quasi_iso(), || format!("{rep:?}"))?;
  Ok(format!("rank certificate in {} degrees", rep.quasi_iso.len()))
}

fn c10_torus(_: &mut Pairs) -> Outcome {
  let generic = TorusCocycle::new(2, vec![vec![0, 1], vec![-1, 0]], QOrder::Infinite).unwrap();
  let rep = torus_homology(&generic, 4).unwrap();
  eq("HH", rep.hh_dims().map(|v| v[..4].to_vec()), Some(vec![1, 2, 1, 0]))?;
  eq("HC", rep.hc_dims(), Some(vec![1, 2, 2, 2, 2]))?;
  for d in [2i64, 3, 5] {
    let c = TorusCocycle::new(2, vec![vec![0, 1], vec![-1, 0]], QOrder::Finite(d as u64)).unwrap();
    let l = x_lambda(&c).unwrap();
    for x in -2 * d..=2 * d {
      for y in -2 * d..=2 * d {
        // λ((x,y), −) is trivial iff q^{y} = q^{−x} = 1.
        let direct = y.rem_euclid(d) == 0 && x.rem_euclid(d) == 0;
        ensure(l.contains(&[x, y]) == direct, || format!("d = {d}: membership of ({x}, {y})"))?;
      }
    }
  }
  Ok("generic torus values; lattices for d = 2, 3, 5 match the box".into())
}

fn c11_sbi(pairs: &Pairs) -> Outcome {
  ensure(!pairs.is_empty(), || "no pairs collected".into())?;
  for (label, hh, hc) in pairs {
    let rep = sbi_check(hh, hc).map_err(|e| format!("{label}: {e}"))?;
    ensure(rep.all_passed(), || format!("{label}: HH {hh:?}, HC {hc:?}"))?;
  }
  Ok(format!("{} (HH, HC) pairs", pairs.len()))
}

fn c12_filtration(_: &mut Pairs) -> Outcome {
  let z3 = alg("z3");
  let m = trivial(&z3);
  let f = coinvariants_filtration(&m);
  eq("trivial F", f.dims(), vec![m.dim()])?;
  ensure(f.exhaustive, || "trivial coaction not exhaustive".into())?;
  let f = coinvariants_filtration(&adjoint(&alg("z2")));
  eq("ad z2 F", f.dims(), vec![1])?;
  ensure(!f.exhaustive, || "ad z2 reported exhaustive".into())?;
  ensure(f.terms[0].contains(&SparseVec::unit(0)), || "F_0 does not contain 1".into())?;
  for m in [trivial(&z3), coadjoint(&z3), sign(&alg("z2")).unwrap()] {
    let page = e1_page_report(&m, 3).map_err(|e| e.to_string())?;
    ensure(page.exhaustive && page.consistent(), || format!("{}: {page:?}", m.name()))?;
  }
  Ok("exhaustive for trivial coaction; stalls at span{1} for ad z2; E1 matches folded Tor".into())
}

fn main() -> ExitCode {
  let mut pairs = Pairs::new();
  type Criterion = (&'static str, fn(&mut Pairs) -> Outcome);
  let criteria: [Criterion; 10] = [
    ("aux object values", c1_aux_values),
    ("cyclic identity suite", c2_identity_suite),
    ("Hochschild equals Tor oracle", c3_oracle),
    ("finite-group decomposition", c4_burghelea),
    ("Hopf-Galois suite", c5_galois),
    ("semisimple reduction", c6_semisimple),
    ("induction", c7_shapiro),
    ("trivial coaction folds Tor", c8_tor_fold),
    ("separable base change", c9_separable),
    ("quantum torus", c10_torus),
  ];
  let mut failed = 0;
  let mut report = |n: usize, name: &str, t: Instant, outcome: Outcome| {
    let secs = t.elapsed().as_secs_f64();
    match outcome {
      Ok(msg) => println!("criterion {n:>2} PASS {name} ({secs:.1}s): {msg}"),
      Err(msg) => {
        failed += 1;
        println!("criterion {n:>2} FAIL {name} ({secs:.1}s): {msg}");
      },
    }
  };
  for (i, (name, f)) in criteria.iter().enumerate() {
    let t = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut pairs))).unwrap_or_else(|_| Err("panicked".into()));
    report(i + 1, name, t, outcome);
  }
  let t = Instant::now();
  report(11, "SBI consistency", t, c11_sbi(&pairs));
  let t = Instant::now();
  let outcome = catch_unwind(AssertUnwindSafe(|| c12_filtration(&mut pairs))).unwrap_or_else(|_| Err("panicked".into()));
  report(12, "coinvariants filtration", t, outcome);
  println!("acceptance: {} of 12 criteria passed", 12 - failed);
  if failed == 0 {
    ExitCode::SUCCESS
  } else {
    ExitCode::FAILURE
  }
}
