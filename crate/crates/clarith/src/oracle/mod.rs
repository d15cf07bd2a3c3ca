//! Independent semantic oracles.
//!
//! Nothing in this module depends on the proof kernel or the translations;
//! it provides the ground truth the test batteries compare against: Tarskian
//! evaluation over small finite models, evaluation in the standard model of
//! arithmetic, brute-force Π₂ witness search, and (in the submodules) Kripke
//! semantics with a propositional decision procedure.

mod kripke;
mod prop;

pub use kripke::{check_monotone, forces, forces_spec, KripkeModel};
pub use prop::{decide_prop, Decision, PropMode, SearchBudget};

use crate::logic::{Formula, Signature, Term};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("unbound variable `{0}` during evaluation")]
    UnboundVar(String),
    #[error("no interpretation for symbol `{0}`")]
    NoInterpretation(String),
    #[error("arithmetic overflow while evaluating a term")]
    Overflow,
    #[error("formula is not quantifier-free propositional: {0}")]
    NotPropositional(String),
    #[error("countermodel search budget exhausted")]
    BudgetExhausted,
}

/// A finite classical model over an initial segment `{0, .., size-1}` of the
/// naturals.
///
/// Test-model conventions, fixed for the whole battery: `0`, `S`, `+`, `*`
/// are interpreted modulo the domain size (totality); `=` is true identity;
/// `<=`/`>` compare representatives; every complemented relation is
/// interpreted as the complement of its base table.
#[derive(Debug, Clone)]
pub struct FiniteModel {
    pub size: u64,
    fns: BTreeMap<String, FnTable>,
    rels: BTreeMap<String, RelTable>,
}

#[derive(Debug, Clone)]
struct FnTable {
    table: Vec<u64>,
}

#[derive(Debug, Clone)]
struct RelTable {
    arity: usize,
    table: Vec<bool>,
}

fn index(args: &[u64], size: u64) -> usize {
    let mut i = 0usize;
    for &a in args {
        i = i * size as usize + a as usize;
    }
    i
}

impl FiniteModel {
    /// The standard-modulo model of the given size.
    pub fn standard(sig: &Signature, size: u64) -> FiniteModel {
        assert!(size >= 1, "domain must be nonempty");
        let mut m = FiniteModel { size, fns: BTreeMap::new(), rels: BTreeMap::new() };
        for name in sig.fn_names() {
            let arity = sig.fn_arity(name).unwrap();
            let mut table = vec![0u64; (size as usize).pow(arity as u32)];
            for (i, slot) in table.iter_mut().enumerate() {
                let args = unindex(i, arity, size);
                *slot = match name {
                    "0" => 0,
                    "S" => (args[0] + 1) % size,
                    "+" => (args[0] + args[1]) % size,
                    "*" => (args[0] * args[1]) % size,
                    // anything else starts as the constant-zero function
                    _ => 0,
                };
            }
            m.fns.insert(name.to_string(), FnTable { table });
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in sig.rel_names() {
            if seen.contains(name) {
                continue;
            }
            let info = sig.rel_info(name).unwrap();
            seen.insert(name.to_string());
            seen.insert(info.complement.clone());
            let arity = info.arity;
            let mut table = vec![false; (size as usize).pow(arity as u32)];
            for (i, slot) in table.iter_mut().enumerate() {
                let args = unindex(i, arity, size);
                *slot = match name {
                    "=" => args[0] == args[1],
                    "<=" => args[0] <= args[1],
                    _ => false,
                };
            }
            m.set_rel_pair(name, &info.complement.clone(), arity, table);
        }
        m
    }

    /// Install a relation table, keeping the complement complementary.
    pub fn set_rel_pair(&mut self, name: &str, complement: &str, arity: usize, table: Vec<bool>) {
        let comp: Vec<bool> = table.iter().map(|b| !b).collect();
        self.rels.insert(name.to_string(), RelTable { arity, table });
        self.rels.insert(complement.to_string(), RelTable { arity, table: comp });
    }

    pub fn eval_term(&self, t: &Term, env: &BTreeMap<String, u64>) -> Result<u64, OracleError> {
        match t {
            Term::Var(x) => env.get(x).copied().ok_or_else(|| OracleError::UnboundVar(x.clone())),
            Term::App(f, args) => {
                let vals = args
                    .iter()
                    .map(|a| self.eval_term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                let table = self
                    .fns
                    .get(f)
                    .ok_or_else(|| OracleError::NoInterpretation(f.clone()))?;
                Ok(table.table[index(&vals, self.size)])
            }
        }
    }

    fn eval_rel(&self, r: &str, args: &[u64]) -> Result<bool, OracleError> {
        let table =
            self.rels.get(r).ok_or_else(|| OracleError::NoInterpretation(r.to_string()))?;
        debug_assert_eq!(table.arity, args.len());
        Ok(table.table[index(args, self.size)])
    }

    /// Tarskian truth; quantifiers range over the finite domain.
    pub fn eval(&self, phi: &Formula, env: &BTreeMap<String, u64>) -> Result<bool, OracleError> {
        match phi {
            Formula::Bot => Ok(false),
            Formula::Atom(r, args) => {
                let vals = args
                    .iter()
                    .map(|a| self.eval_term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                self.eval_rel(r, &vals)
            }
            Formula::NegAtom(r, args) => {
                let vals = args
                    .iter()
                    .map(|a| self.eval_term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(!self.eval_rel(r, &vals)?)
            }
            Formula::And(a, b) => Ok(self.eval(a, env)? && self.eval(b, env)?),
            Formula::Or(a, b) => Ok(self.eval(a, env)? || self.eval(b, env)?),
            Formula::Imp(a, b) => Ok(!self.eval(a, env)? || self.eval(b, env)?),
            Formula::All(x, body) => {
                for v in 0..self.size {
                    let mut env2 = env.clone();
                    env2.insert(x.clone(), v);
                    if !self.eval(body, &env2)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Ex(x, body) => {
                for v in 0..self.size {
                    let mut env2 = env.clone();
                    env2.insert(x.clone(), v);
                    if self.eval(body, &env2)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    pub fn eval_closed(&self, phi: &Formula) -> Result<bool, OracleError> {
        self.eval(phi, &BTreeMap::new())
    }
}

fn unindex(mut i: usize, arity: usize, size: u64) -> Vec<u64> {
    let mut out = vec![0u64; arity];
    for k in (0..arity).rev() {
        out[k] = (i % size as usize) as u64;
        i /= size as usize;
    }
    out
}

/// The fixed battery: standard models of sizes 1..=3, plus variants of sizes
/// 2 and 3 with perturbed tables for the uninterpreted test relations. The
/// perturbations are deterministic.
pub fn battery(sig: &Signature) -> Vec<FiniteModel> {
    let mut out = Vec::new();
    for size in 1..=3u64 {
        out.push(FiniteModel::standard(sig, size));
    }
    for size in 2..=3u64 {
        for salt in 1..=3u64 {
            let mut m = FiniteModel::standard(sig, size);
            let mut seen = std::collections::BTreeSet::new();
            for name in sig.rel_names() {
                let info = sig.rel_info(name).unwrap();
                if info.decidable || seen.contains(name) {
                    continue;
                }
                seen.insert(name.to_string());
                seen.insert(info.complement.clone());
                let n = (size as usize).pow(info.arity as u32);
                // small multiplicative hash keeps the battery reproducible
                let mut h = salt
                    .wrapping_mul(0x9e37_79b9)
                    .wrapping_add(name.bytes().map(u64::from).sum::<u64>());
                let table: Vec<bool> = (0..n)
                    .map(|i| {
                        h = h.wrapping_mul(6364136223846793005).wrapping_add(i as u64 + 1);
                        (h >> 33) & 1 == 1
                    })
                    .collect();
                m.set_rel_pair(name, &info.complement.clone(), info.arity, table);
            }
            out.push(m);
        }
    }
    out
}

/// Term evaluation in the standard model of arithmetic.
pub fn std_eval_term(t: &Term, env: &BTreeMap<String, u64>) -> Result<u64, OracleError> {
    match t {
        Term::Var(x) => env.get(x).copied().ok_or_else(|| OracleError::UnboundVar(x.clone())),
        Term::App(f, args) => {
            let vals = args
                .iter()
                .map(|a| std_eval_term(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            match (f.as_str(), vals.as_slice()) {
                ("0", []) => Ok(0),
                ("S", [a]) => a.checked_add(1).ok_or(OracleError::Overflow),
                ("+", [a, b]) => a.checked_add(*b).ok_or(OracleError::Overflow),
                ("*", [a, b]) => a.checked_mul(*b).ok_or(OracleError::Overflow),
                _ => Err(OracleError::NoInterpretation(f.clone())),
            }
        }
    }
}

/// Truth of a decidable quantifier-free formula in the standard model.
pub fn std_eval_qf(phi: &Formula, env: &BTreeMap<String, u64>) -> Result<bool, OracleError> {
    match phi {
        Formula::Bot => Ok(false),
        Formula::Atom(r, args) => {
            let vals = args
                .iter()
                .map(|a| std_eval_term(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            std_eval_rel(r, &vals)
        }
        Formula::NegAtom(r, args) => {
            let vals = args
                .iter()
                .map(|a| std_eval_term(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(!std_eval_rel(r, &vals)?)
        }
        Formula::And(a, b) => Ok(std_eval_qf(a, env)? && std_eval_qf(b, env)?),
        Formula::Or(a, b) => Ok(std_eval_qf(a, env)? || std_eval_qf(b, env)?),
        Formula::Imp(a, b) => Ok(!std_eval_qf(a, env)? || std_eval_qf(b, env)?),
        Formula::All(..) | Formula::Ex(..) => {
            Err(OracleError::NotPropositional(phi.to_string()))
        }
    }
}

fn std_eval_rel(r: &str, vals: &[u64]) -> Result<bool, OracleError> {
    match (r, vals) {
        ("=", [a, b]) => Ok(a == b),
        ("!=", [a, b]) => Ok(a != b),
        ("<=", [a, b]) => Ok(a <= b),
        (">", [a, b]) => Ok(a > b),
        _ => Err(OracleError::NoInterpretation(r.to_string())),
    }
}

/// Least `y <= bound` with `R(x, y)` true in the standard model, or `None`.
///
/// This is the blind-search baseline the extracted witnessing terms are
/// compared against. `matrix` is a decidable quantifier-free formula in the
/// two named variables.
pub fn brute_force_witness(
    matrix: &Formula,
    xvar: &str,
    yvar: &str,
    x: u64,
    bound: u64,
) -> Result<Option<u64>, OracleError> {
    for y in 0..=bound {
        let mut env = BTreeMap::new();
        env.insert(xvar.to_string(), x);
        env.insert(yvar.to_string(), y);
        if std_eval_qf(matrix, &env)? {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::to_nnf;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    #[test]
    fn bot_is_false_everywhere() {
        for m in battery(&sig()) {
            assert!(!m.eval_closed(&Formula::Bot).unwrap());
        }
    }

    #[test]
    fn reflexivity_is_valid() {
        let phi = Formula::all("x", Formula::eq(Term::var("x"), Term::var("x")));
        for m in battery(&sig()) {
            assert!(m.eval_closed(&phi).unwrap());
        }
    }

    #[test]
    fn complements_partition() {
        let sig = sig();
        let atom = Formula::atom("R", vec![Term::var("x"), Term::var("y")]);
        let catom = Formula::negatom("R", vec![Term::var("x"), Term::var("y")]);
        for m in battery(&sig) {
            for a in 0..m.size {
                for b in 0..m.size {
                    let mut env = BTreeMap::new();
                    env.insert("x".to_string(), a);
                    env.insert("y".to_string(), b);
                    assert_ne!(m.eval(&atom, &env).unwrap(), m.eval(&catom, &env).unwrap());
                }
            }
        }
    }

    #[test]
    fn nnf_agrees_with_source() {
        let sig = sig();
        let phi = Formula::not(Formula::all(
            "x",
            Formula::imp(
                Formula::atom("A", vec![Term::var("x")]),
                Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")])),
            ),
        ));
        let n = to_nnf(&sig, &phi).unwrap();
        for m in battery(&sig) {
            assert_eq!(m.eval_closed(&phi).unwrap(), m.eval_closed(n.formula()).unwrap());
        }
    }

    #[test]
    fn complement_contradicts_on_numerals() {
        for a in 0..=5u64 {
            for b in 0..=5u64 {
                let le = Formula::atom("<=", vec![Term::numeral(a), Term::numeral(b)]);
                let gt = Formula::negatom("<=", vec![Term::numeral(a), Term::numeral(b)]);
                let env = BTreeMap::new();
                assert_ne!(std_eval_qf(&le, &env).unwrap(), std_eval_qf(&gt, &env).unwrap());
            }
        }
    }

    #[test]
    fn brute_force_finds_successor() {
        let matrix = Formula::eq(Term::var("y"), Term::succ(Term::var("x")));
        assert_eq!(brute_force_witness(&matrix, "x", "y", 3, 100).unwrap(), Some(4));
    }

    #[test]
    fn brute_force_none_below_bound() {
        let matrix =
            Formula::eq(Term::var("y"), Term::app("+", vec![Term::var("x"), Term::numeral(50)]));
        assert_eq!(brute_force_witness(&matrix, "x", "y", 1, 10).unwrap(), None);
    }
}
