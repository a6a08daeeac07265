//! Command dispatch.

use std::path::Path;
use std::time::Instant;

use hopfcyc::crossed::CrossedModule;
use hopfcyc::cyclic::{build_cyclic_unchecked, burghelea_finite, homology_of, sbi_check, CyclicError, HopfCyclicSpec, Method, Operators};
use hopfcyc::galois::{galois_check, hc_both_ways, lambda_iso, Bimodule, GaloisError};
use hopfcyc::io::{ComoduleDoc, CrossedDoc, HopfDoc, HopfRef};
use hopfcyc::qtorus::{box_oracle, torus_homology, QOrder, TorusCocycle};
use hopfcyc::report::{Check, Report as Checks};
use hopfcyc::{Field, Fp, HopfAlgebra, Q};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::output::{Input, Report, Table};
use crate::{Command, Config, ExportWhat, MethodArg, Pair, VerifyWhat};

/// Primes accepted by `--field f<p>`.
pub const PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 2147483647];

pub enum CliError {
  /// Bad input or configuration; exit code 2.
  Input(String),
}

pub enum Output {
  Report(Report, f64),
  Document(String),
}

fn input_err(e: impl std::fmt::Display) -> CliError { CliError::Input(e.to_string()) }

/// A loaded argument: builtin name, file or inline JSON.
struct Source {
  input: Input,
  value: Value,
}

fn load(arg: &str) -> Result<Source, CliError> {
  let trimmed = arg.trim_start();
  if trimmed.starts_with('{') || trimmed.starts_with('[') {
    let value = serde_json::from_str(arg).map_err(|e| input_err(format!("inline JSON: {e}")))?;
    return Ok(Source { input: Input::new("<inline>", arg.as_bytes()), value });
  }
  let path = Path::new(arg);
  if path.is_file() {
    let bytes = std::fs::read(path).map_err(|e| input_err(format!("{arg}: {e}")))?;
    let value = serde_json::from_slice(&bytes).map_err(|e| input_err(format!("{arg}: {e}")))?;
    return Ok(Source { input: Input::new(arg, &bytes), value });
  }
  Ok(Source { input: Input::new(arg, arg.as_bytes()), value: Value::String(arg.to_string()) })
}

fn parse<T: DeserializeOwned>(src: &Source, what: &str) -> Result<T, CliError> {
  serde_json::from_value(src.value.clone()).map_err(|e| input_err(format!("{}: not a valid {what} document: {e}", src.input.source)))
}

fn crossed_doc(src: &Source) -> Result<CrossedDoc, CliError> {
  match &src.value {
    Value::String(name) => Ok(CrossedDoc::Builtin { base: None, builtin: name.clone() }),
    _ => parse(src, "module"),
  }
}

fn method(m: MethodArg) -> Method {
  match m {
    MethodArg::Lambda => Method::Lambda,
    MethodArg::Bicomplex => Method::Bicomplex,
    MethodArg::Both => Method::Both,
  }
}

/// Turns a failed computation into a failing check; characteristic refusals are configuration errors.
fn computation<T>(r: Result<T, impl Into<Failure>>) -> Result<Result<T, Check>, CliError> {
  match r.map_err(Into::into) {
    Ok(v) => Ok(Ok(v)),
    Err(Failure::Config(msg)) => Err(CliError::Input(msg)),
    Err(Failure::Math(name, msg)) => Ok(Err(Check::fail(name, msg))),
  }
}

enum Failure {
  Config(String),
  Math(&'static str, String),
}

impl From<CyclicError> for Failure {
  fn from(e: CyclicError) -> Self {
    match e {
      CyclicError::PositiveCharacteristic(_) => Failure::Config(e.to_string()),
      other => Failure::Math("computation", other.to_string()),
    }
  }
}

impl From<GaloisError> for Failure {
  fn from(e: GaloisError) -> Self {
    match e {
      GaloisError::Cyclic(c) => c.into(),
      GaloisError::NotGalois { .. } => Failure::Math("galois_map_bijective", e.to_string()),
      other => Failure::Math("computation", other.to_string()),
    }
  }
}

pub struct Session {
  pub command: Vec<String>,
  pub config:  Config,
}

struct Computed {
  inputs:  Vec<Input>,
  checks:  Checks,
  results: Value,
  tables:  Vec<Table>,
  parse:   f64,
}

macro_rules! with_field {
  ($self:ident, $field:expr, $f:ident => $body:expr) => {{
    match $field {
      0 => {
        type $f = Q;
        $body
      },
      2 => {
        type $f = Fp<2>;
        $body
      },
      3 => {
        type $f = Fp<3>;
        $body
      },
      5 => {
        type $f = Fp<5>;
        $body
      },
      7 => {
        type $f = Fp<7>;
        $body
      },
      11 => {
        type $f = Fp<11>;
        $body
      },
      13 => {
        type $f = Fp<13>;
        $body
      },
      2147483647 => {
        type $f = Fp<2147483647>;
        $body
      },
      p => Err(CliError::Input(format!("unsupported prime {p}; supported: {PRIMES:?}"))),
    }
  }};
}

impl Session {
  fn characteristic(&self) -> Result<u64, CliError> {
    let f = self.config.field.to_ascii_lowercase();
    if f == "q" {
      return Ok(0);
    }
    let p = f
      .strip_prefix('f')
      .and_then(|p| p.parse::<u64>().ok())
      .ok_or_else(|| input_err(format!("--field must be `q` or `f<p>`, got {:?}", self.config.field)))?;
    if !PRIMES.contains(&p) {
      return Err(input_err(format!("unsupported prime {p}; supported: {PRIMES:?}")));
    }
    Ok(p)
  }

  pub fn run(&self, cmd: &Command) -> Result<Output, CliError> {
    if self.config.max_degree < 1 {
      return Err(input_err("--max-degree must be at least 1"));
    }
    let p = self.characteristic()?;
    let needs_char_zero = matches!(cmd, Command::Hc(_) | Command::Galois { .. } | Command::Burghelea(_));
    if p != 0 && needs_char_zero {
      return Err(input_err(format!("cyclic homology needs characteristic 0; refusing to run over F{p}")));
    }
    let computed = match cmd {
      Command::Export { what } => return with_field!(self, p, F => self.export::<F>(what)).map(Output::Document),
      Command::Qtorus { input } => self.qtorus(input)?,
      _ => with_field!(self, p, F => self.dispatch::<F>(cmd))?,
    };
    let config = serde_json::to_value(&self.config).expect("config serializes");
    let report = Report::new(self.command.clone(), config, computed.inputs, computed.checks, computed.results, computed.tables);
    Ok(Output::Report(report, computed.parse))
  }

  fn dispatch<F: Field>(&self, cmd: &Command) -> Result<Computed, CliError> {
    match cmd {
      Command::Verify { what } => match what {
        VerifyWhat::Hopf { input } => self.verify_hopf::<F>(input),
        VerifyWhat::Crossed { input, base } => self.verify_crossed::<F>(input, base.as_deref()),
        VerifyWhat::Galois { input } => self.galois::<F>(input, false),
        VerifyWhat::Cyclic(pair) => self.verify_cyclic::<F>(pair),
      },
      Command::Hh(pair) => self.homology::<F>(pair, false),
      Command::Hc(pair) => self.homology::<F>(pair, true),
      Command::Galois { input } => self.galois::<F>(input, true),
      Command::Burghelea(pair) => self.burghelea::<F>(pair),
      Command::Qtorus { .. } | Command::Export { .. } => unreachable!("handled before field dispatch"),
    }
  }

  fn hopf<F: Field>(&self, arg: &str) -> Result<(Input, HopfAlgebra<F>), CliError> {
    let src = load(arg)?;
    let h = parse::<HopfRef>(&src, "Hopf algebra")?.build::<F>().map_err(input_err)?;
    Ok((src.input, h))
  }

  fn pair<F: Field>(&self, pair: &Pair) -> Result<(Vec<Input>, CrossedModule<F>), CliError> {
    let (hi, h) = self.hopf::<F>(&pair.hopf)?;
    let src = load(&pair.module)?;
    let m = crossed_doc(&src)?.build(Some(&h)).map_err(input_err)?;
    Ok((vec![hi, src.input], m))
  }

  fn verify_hopf<F: Field>(&self, arg: &str) -> Result<Computed, CliError> {
    let t = Instant::now();
    let (input, h) = self.hopf::<F>(arg)?;
    let parse = ms(t);
    let checks = h.verify();
    let results = json!({
      "name": h.name(), "dim": h.dim(), "commutative": h.is_commutative(), "cocommutative": h.is_cocommutative(),
    });
    Ok(Computed { inputs: vec![input], checks, results, tables: vec![], parse })
  }

  fn verify_crossed<F: Field>(&self, arg: &str, base: Option<&str>) -> Result<Computed, CliError> {
    let t = Instant::now();
    let mut inputs = Vec::new();
    let h = match base {
      Some(b) => {
        let (i, h) = self.hopf::<F>(b)?;
        inputs.push(i);
        Some(h)
      },
      None => None,
    };
    let src = load(arg)?;
    let m = crossed_doc(&src)?.build(h.as_ref()).map_err(input_err)?;
    inputs.push(src.input);
    let parse = ms(t);
    let checks = m.verify_all();
    let results = json!({
      "name": m.name(), "base": m.base().name(), "dim": m.dim(), "trivial_coaction": m.has_trivial_coaction(),
    });
    Ok(Computed { inputs, checks, results, tables: vec![], parse })
  }

  fn verify_cyclic<F: Field>(&self, pair: &Pair) -> Result<Computed, CliError> {
    let t = Instant::now();
    let (inputs, m) = self.pair::<F>(pair)?;
    let parse = ms(t);
    let max = self.config.max_degree;
    let mut checks = m.verify_modular().prefixed("module");
    let z = build_cyclic_unchecked(&m, max, Operators::All);
    checks.extend(z.identity_report().prefixed("identities"));
    checks.extend(HopfCyclicSpec::new(&m, max).well_definedness(max, 64).prefixed("well_defined"));
    let results = json!({ "object": format!("Z({}, {})", m.base().name(), m.name()), "dims": z.dims() });
    let tables = vec![Table::new("carrier dimensions").row("dim", z.dims())];
    Ok(Computed { inputs, checks, results, tables, parse })
  }

  fn homology<F: Field>(&self, pair: &Pair, want_hc: bool) -> Result<Computed, CliError> {
    let t = Instant::now();
    let (inputs, m) = self.pair::<F>(pair)?;
    let parse = ms(t);
    let max = self.config.max_degree;
    let mut checks = Checks::new();
    let mut tables = Vec::new();
    let results = match computation(homology_of(&m, max, true, want_hc, method(self.config.method)))? {
      Err(fail) => {
        checks.push(fail);
        Value::Null
      },
      Ok(rep) => {
        let mut table = Table::new(format!("homology of Z({}, {}) over {}", m.base().name(), m.name(), F::name()));
        if let Some(hh) = &rep.hh {
          table = table.row("HH", hh);
        }
        if let Some(hc) = &rep.hc {
          table = table.row("HC", hc);
          if let Some(hh) = &rep.hh {
            if let Ok(Ok(sbi)) = computation(sbi_check(hh, hc)) {
              checks.extend(sbi.prefixed("sbi"));
            }
          }
        }
        if let Some(agree) = rep.agree {
          checks.push(if agree { Check::pass("lambda_vs_bicomplex") } else { Check::fail("lambda_vs_bicomplex", "the two HC computations differ") });
        }
        tables.push(table);
        serde_json::to_value(&rep).expect("reports serialize")
      },
    };
    Ok(Computed { inputs, checks, results, tables, parse })
  }

  fn galois<F: Field>(&self, arg: &str, homology: bool) -> Result<Computed, CliError> {
    let t = Instant::now();
    let src = load(arg)?;
    let ca = parse::<ComoduleDoc>(&src, "comodule algebra")?.build::<F>().map_err(input_err)?;
    let parse = ms(t);
    let max = self.config.max_degree;
    let mut checks = ca.verify().prefixed("comodule");
    let mut tables = Vec::new();
    let mut results = json!({ "algebra_dim": ca.dim(), "hopf_dim": ca.base.dim() });
    let ext = match computation(galois_check(&ca))? {
      Err(fail) => {
        checks.push(fail);
        return Ok(Computed { inputs: vec![src.input], checks, results, tables, parse });
      },
      Ok(ext) => ext,
    };
    checks.push(Check::pass("galois_map_bijective"));
    results["coinvariants_dim"] = json!(ext.b.dim());
    results["balanced_square_dim"] = json!(ext.aa.dim());
    checks.extend(ext.relations_report().prefixed("relations"));
    checks.extend(ext.beta_n_report(max.min(2)).prefixed("beta_n"));
    if homology {
      match computation(lambda_iso(&ext, &Bimodule::regular(ext.algebra()), max))? {
        Err(fail) => checks.push(fail),
        Ok(iso) => {
          checks.extend(iso.report.prefixed("lambda"));
          results["relative_dims"] = json!(iso.relative.dims());
        },
      }
      match computation(hc_both_ways(&ext, max))? {
        Err(fail) => checks.push(fail),
        Ok(cmp) => {
          checks.extend(cmp.to_report());
          let mut table = Table::new(format!("{}: relative (A/B) against Hopf side (H, A_B)", cmp.title));
          for c in &cmp.comparisons {
            table = table.row(format!("{} A/B", c.quantity), &c.left).row(format!("{} H", c.quantity), &c.right);
          }
          if let (Some(hh), Some(hc)) = (cmp.get("HH"), cmp.get("HC")) {
            if let Ok(Ok(sbi)) = computation(sbi_check(&hh.left, &hc.left)) {
              checks.extend(sbi.prefixed("sbi"));
            }
          }
          tables.push(table);
          results["comparison"] = serde_json::to_value(&cmp).expect("reports serialize");
        },
      }
    }
    Ok(Computed { inputs: vec![src.input], checks, results, tables, parse })
  }

  fn burghelea<F: Field>(&self, pair: &Pair) -> Result<Computed, CliError> {
    let t = Instant::now();
    let (inputs, m) = self.pair::<F>(pair)?;
    let parse = ms(t);
    let mut checks = Checks::new();
    let mut tables = Vec::new();
    let results = match computation(burghelea_finite(&m, self.config.max_degree))? {
      Err(fail) => {
        checks.push(fail);
        Value::Null
      },
      Ok(rep) => {
        checks.push(if rep.agree() { Check::pass("formula_equals_direct") } else { Check::fail("formula_equals_direct", format!("{:?} vs {:?}", rep.formula, rep.direct)) });
        tables.push(Table::new("cyclic homology").row("formula", &rep.formula).row("direct", &rep.direct));
        serde_json::to_value(&rep).expect("reports serialize")
      },
    };
    Ok(Computed { inputs, checks, results, tables, parse })
  }

  fn qtorus(&self, arg: &str) -> Result<Computed, CliError> {
    let t = Instant::now();
    let src = load(arg)?;
    let c: TorusCocycle = parse(&src, "torus cocycle")?;
    c.validate().map_err(input_err)?;
    let parse = ms(t);
    let rep = torus_homology(&c, self.config.max_degree).map_err(input_err)?;
    let bound = match c.q_order {
      QOrder::Finite(m) => (2 * m).min(8) as i64,
      QOrder::Infinite => 4,
    }
    .min(if c.r > 3 { 2 } else { 8 });
    let mut checks = Checks::new();
    checks.push(Check::from_witness(
      "lattice_matches_box",
      box_oracle(&c, &rep.lattice, bound).map(|x| format!("membership of {x:?} disagrees with the congruences")),
    ));
    let per = |f: fn(&hopfcyc::qtorus::DegreeBetti) -> usize| rep.degrees.iter().map(f).collect::<Vec<_>>();
    let mut table = Table::new(format!("quantum torus, X = {}", rep.lattice_description));
    if let (Some(hh), Some(hc)) = (rep.hh_dims(), rep.hc_dims()) {
      table = table.row("HH", &hh).row("HC", &hc);
    } else {
      table = table
        .row("HH per point of X", &per(|d| d.hh_per_point))
        .row("HC constant", &per(|d| d.hc_constant))
        .row("HC per point of X*", &per(|d| d.hc_per_nonzero));
    }
    let results = serde_json::to_value(&rep).expect("reports serialize");
    Ok(Computed { inputs: vec![src.input], checks, results, tables: vec![table], parse })
  }

  fn export<F: Field>(&self, what: &ExportWhat) -> Result<String, CliError> {
    let value = match what {
      ExportWhat::Hopf { input } => serde_json::to_value(HopfDoc::of(&self.hopf::<F>(input)?.1)),
      ExportWhat::Crossed(pair) => serde_json::to_value(CrossedDoc::of(&self.pair::<F>(pair)?.1)),
    };
    Ok(serde_json::to_string_pretty(&value.expect("documents serialize")).expect("documents serialize"))
  }
}

fn ms(t: Instant) -> f64 { t.elapsed().as_secs_f64() * 1e3 }
