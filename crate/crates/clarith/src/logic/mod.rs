//! First-order terms and formulas over an arithmetic signature.
//!
//! Atoms come in complemented pairs: every relation symbol `R` is registered
//! together with a complement symbol (`=` with `!=`, `<=` with `>`), so a
//! negated atomic formula always has an atomic equivalent. A complemented
//! atom is a primitive node [`Formula::NegAtom`] carrying the base relation
//! name, which keeps negation-normal form free of any negation constructor
//! and makes complementation an involution by construction.
//!
//! Formulas compare equal up to renaming of bound variables: `PartialEq` is
//! alpha-equivalence and `Hash` is computed on the de Bruijn skeleton.

mod nnf;
mod parse;

pub use nnf::{neg, to_nnf, Nnf, NnfError};
pub(crate) use nnf::neg_raw;
pub use parse::{
    formula_from_sexp, formula_to_sexp, parse_formula, parse_term, term_from_sexp, term_to_sexp,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SignatureError {
    #[error("unknown function symbol `{0}`")]
    UnknownFunction(String),
    #[error("unknown relation symbol `{0}`")]
    UnknownRelation(String),
    #[error("symbol `{symbol}` expects {expected} arguments, got {got}")]
    Arity { symbol: String, expected: usize, got: usize },
    #[error("complement requested for non-atomic formula")]
    NotAtomic,
}

#[derive(Debug, Clone)]
pub struct RelInfo {
    pub arity: usize,
    /// Designated complement symbol, e.g. `!=` for `=`.
    pub complement: String,
    pub decidable: bool,
}

#[derive(Debug, Clone)]
pub struct FnInfo {
    pub arity: usize,
}

/// Function and relation symbols of the ambient theory.
///
/// `0`, `S` and equality (with complement `!=`) are always present. Further
/// primitive recursive function symbols and decidable relations can be
/// registered on top of [`Signature::arith`].
#[derive(Debug, Clone)]
pub struct Signature {
    fns: BTreeMap<String, FnInfo>,
    rels: BTreeMap<String, RelInfo>,
}

impl Signature {
    /// The base arithmetic signature: `0`, `S`, `+`, `*`; `=`/`!=` and `<=`/`>`.
    pub fn arith() -> Signature {
        let mut sig = Signature { fns: BTreeMap::new(), rels: BTreeMap::new() };
        sig.register_fn("0", 0);
        sig.register_fn("S", 1);
        sig.register_fn("+", 2);
        sig.register_fn("*", 2);
        sig.register_rel("=", 2, "!=", true);
        sig.register_rel("<=", 2, ">", true);
        sig
    }

    /// Arithmetic plus a small stock of uninterpreted relations used by the
    /// logic-level test batteries: propositional atoms `p q r`, monadic
    /// `A B`, and binary `R`.
    pub fn arith_with_test_relations() -> Signature {
        let mut sig = Signature::arith();
        for name in ["p", "q", "r"] {
            sig.register_rel(name, 0, &format!("{name}~"), false);
        }
        for name in ["A", "B"] {
            sig.register_rel(name, 1, &format!("{name}~"), false);
        }
        sig.register_rel("R", 2, "R~", false);
        sig
    }

    pub fn register_fn(&mut self, name: &str, arity: usize) {
        self.fns.insert(name.to_string(), FnInfo { arity });
    }

    pub fn register_rel(&mut self, name: &str, arity: usize, complement: &str, decidable: bool) {
        self.rels.insert(
            name.to_string(),
            RelInfo { arity, complement: complement.to_string(), decidable },
        );
        self.rels.insert(
            complement.to_string(),
            RelInfo { arity, complement: name.to_string(), decidable },
        );
    }

    pub fn fn_arity(&self, name: &str) -> Result<usize, SignatureError> {
        self.fns
            .get(name)
            .map(|i| i.arity)
            .ok_or_else(|| SignatureError::UnknownFunction(name.to_string()))
    }

    pub fn rel_info(&self, name: &str) -> Result<&RelInfo, SignatureError> {
        self.rels.get(name).ok_or_else(|| SignatureError::UnknownRelation(name.to_string()))
    }

    pub fn rel_names(&self) -> impl Iterator<Item = &str> {
        self.rels.keys().map(|s| s.as_str())
    }

    pub fn fn_names(&self) -> impl Iterator<Item = &str> {
        self.fns.keys().map(|s| s.as_str())
    }

    pub fn check_term(&self, t: &Term) -> Result<(), SignatureError> {
        match t {
            Term::Var(_) => Ok(()),
            Term::App(f, args) => {
                let arity = self.fn_arity(f)?;
                if arity != args.len() {
                    return Err(SignatureError::Arity {
                        symbol: f.clone(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
        }
    }

    pub fn check_formula(&self, phi: &Formula) -> Result<(), SignatureError> {
        match phi {
            Formula::Bot => Ok(()),
            Formula::Atom(r, args) | Formula::NegAtom(r, args) => {
                let info = self.rel_info(r)?;
                if info.arity != args.len() {
                    return Err(SignatureError::Arity {
                        symbol: r.clone(),
                        expected: info.arity,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                self.check_formula(a)?;
                self.check_formula(b)
            }
            Formula::All(_, body) | Formula::Ex(_, body) => self.check_formula(body),
        }
    }
}

/// A first-order term: variables range over the natural numbers, numerals are
/// iterated `S` over `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(f: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(f.into(), args)
    }

    pub fn zero() -> Term {
        Term::app("0", vec![])
    }

    pub fn succ(t: Term) -> Term {
        Term::app("S", vec![t])
    }

    pub fn numeral(n: u64) -> Term {
        let mut t = Term::zero();
        for _ in 0..n {
            t = Term::succ(t);
        }
        t
    }

    /// Numeric value if the term is a pure numeral.
    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::App(f, args) if f == "0" && args.is_empty() => Some(0),
            Term::App(f, args) if f == "S" && args.len() == 1 => {
                args[0].as_numeral().map(|n| n + 1)
            }
            _ => None,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn substitute(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => t.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", term_to_sexp(self))
    }
}

/// First-order formulas. `¬φ` is not a constructor; it is the derived form
/// `φ → ⊥`, available as [`Formula::not`].
///
/// `NegAtom(r, args)` is the complemented atom: the registered complement of
/// relation `r` applied to `args`. It prints as `(catom r args...)`.
#[derive(Debug, Clone, Eq)]
pub enum Formula {
    Bot,
    Atom(String, Vec<Term>),
    NegAtom(String, Vec<Term>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    All(String, Box<Formula>),
    Ex(String, Box<Formula>),
}

impl Formula {
    pub fn atom(r: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(r.into(), args)
    }

    pub fn negatom(r: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::NegAtom(r.into(), args)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// `¬φ`, i.e. `φ → ⊥`.
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn all(x: impl Into<String>, body: Formula) -> Formula {
        Formula::All(x.into(), Box::new(body))
    }

    pub fn ex(x: impl Into<String>, body: Formula) -> Formula {
        Formula::Ex(x.into(), Box::new(body))
    }

    pub fn eq(s: Term, t: Term) -> Formula {
        Formula::atom("=", vec![s, t])
    }

    /// Splits `φ → ⊥` into `Some(φ)`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Imp(a, b) if matches!(**b, Formula::Bot) => Some(a),
            _ => None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(..) | Formula::NegAtom(..))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bot => {}
            Formula::Atom(_, args) | Formula::NegAtom(_, args) => {
                for a in args {
                    for v in a.free_vars() {
                        if !bound.iter().any(|b| *b == v) {
                            out.insert(v);
                        }
                    }
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::All(x, body) | Formula::Ex(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn has_free_var(&self, x: &str) -> bool {
        self.free_vars().contains(x)
    }

    /// Capture-avoiding substitution of `t` for free occurrences of `x`.
    ///
    /// Bound variables that would capture variables of `t` are renamed with
    /// primes: `(exists y (atom R x y))[x := y]` becomes
    /// `(exists y' (atom R y y'))`.
    pub fn substitute(&self, x: &str, t: &Term) -> Formula {
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Atom(r, args) => {
                Formula::Atom(r.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            Formula::NegAtom(r, args) => {
                Formula::NegAtom(r.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            Formula::And(a, b) => Formula::and(a.substitute(x, t), b.substitute(x, t)),
            Formula::Or(a, b) => Formula::or(a.substitute(x, t), b.substitute(x, t)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(x, t), b.substitute(x, t)),
            Formula::All(y, body) => {
                let (y, body) = subst_under_binder(y, body, x, t);
                Formula::All(y, Box::new(body))
            }
            Formula::Ex(y, body) => {
                let (y, body) = subst_under_binder(y, body, x, t);
                Formula::Ex(y, Box::new(body))
            }
        }
    }

    /// Number of negation nodes (`· → ⊥`) in the formula.
    pub fn negation_count(&self) -> usize {
        match self {
            Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => 0,
            Formula::Imp(a, b) => {
                let here = usize::from(matches!(**b, Formula::Bot));
                here + a.negation_count() + b.negation_count()
            }
            Formula::And(a, b) | Formula::Or(a, b) => a.negation_count() + b.negation_count(),
            Formula::All(_, body) | Formula::Ex(_, body) => body.negation_count(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
            Formula::All(_, body) | Formula::Ex(_, body) => 1 + body.size(),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => true,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::All(..) | Formula::Ex(..) => false,
        }
    }
}

fn subst_under_binder(y: &str, body: &Formula, x: &str, t: &Term) -> (String, Formula) {
    if y == x {
        // x is shadowed here; nothing to substitute below.
        return (y.to_string(), body.clone());
    }
    if t.free_vars().contains(y) && body.has_free_var(x) {
        let mut taken: BTreeSet<String> = body.free_vars();
        taken.extend(t.free_vars());
        taken.insert(x.to_string());
        let fresh = fresh_name(y, &taken);
        let renamed = body.substitute(y, &Term::var(fresh.clone()));
        (fresh, renamed.substitute(x, t))
    } else {
        (y.to_string(), body.substitute(x, t))
    }
}

/// Smallest of `base`, `base'`, `base''`, ... not in `taken`.
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    let mut candidate = base.to_string();
    while taken.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

fn alpha_eq(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>) -> bool {
    match (a, b) {
        (Formula::Bot, Formula::Bot) => true,
        (Formula::Atom(r, ts), Formula::Atom(s, us))
        | (Formula::NegAtom(r, ts), Formula::NegAtom(s, us)) => {
            r == s && ts.len() == us.len() && ts.iter().zip(us).all(|(t, u)| term_alpha_eq(t, u, env))
        }
        (Formula::And(a1, a2), Formula::And(b1, b2))
        | (Formula::Or(a1, a2), Formula::Or(b1, b2))
        | (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => {
            alpha_eq(a1, b1, env) && alpha_eq(a2, b2, env)
        }
        (Formula::All(x, p), Formula::All(y, q)) | (Formula::Ex(x, p), Formula::Ex(y, q)) => {
            env.push((x.clone(), y.clone()));
            let r = alpha_eq(p, q, env);
            env.pop();
            r
        }
        _ => false,
    }
}

fn term_alpha_eq(a: &Term, b: &Term, env: &[(String, String)]) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => {
            for (l, r) in env.iter().rev() {
                let lm = l == x;
                let rm = r == y;
                if lm || rm {
                    return lm && rm;
                }
            }
            x == y
        }
        (Term::App(f, ts), Term::App(g, us)) => {
            f == g && ts.len() == us.len() && ts.iter().zip(us).all(|(t, u)| term_alpha_eq(t, u, env))
        }
        _ => false,
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        alpha_eq(self, other, &mut Vec::new())
    }
}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        hash_formula(self, &mut Vec::new(), state);
    }
}

fn hash_formula<H: Hasher>(phi: &Formula, binders: &mut Vec<String>, state: &mut H) {
    match phi {
        Formula::Bot => 0u8.hash(state),
        Formula::Atom(r, ts) => {
            1u8.hash(state);
            r.hash(state);
            ts.iter().for_each(|t| hash_term(t, binders, state));
        }
        Formula::NegAtom(r, ts) => {
            2u8.hash(state);
            r.hash(state);
            ts.iter().for_each(|t| hash_term(t, binders, state));
        }
        Formula::And(a, b) => {
            3u8.hash(state);
            hash_formula(a, binders, state);
            hash_formula(b, binders, state);
        }
        Formula::Or(a, b) => {
            4u8.hash(state);
            hash_formula(a, binders, state);
            hash_formula(b, binders, state);
        }
        Formula::Imp(a, b) => {
            5u8.hash(state);
            hash_formula(a, binders, state);
            hash_formula(b, binders, state);
        }
        Formula::All(x, body) => {
            6u8.hash(state);
            binders.push(x.clone());
            hash_formula(body, binders, state);
            binders.pop();
        }
        Formula::Ex(x, body) => {
            7u8.hash(state);
            binders.push(x.clone());
            hash_formula(body, binders, state);
            binders.pop();
        }
    }
}

fn hash_term<H: Hasher>(t: &Term, binders: &[String], state: &mut H) {
    match t {
        Term::Var(x) => match binders.iter().rev().position(|b| b == x) {
            Some(i) => {
                0u8.hash(state);
                i.hash(state);
            }
            None => {
                1u8.hash(state);
                x.hash(state);
            }
        },
        Term::App(f, args) => {
            2u8.hash(state);
            f.hash(state);
            args.iter().for_each(|a| hash_term(a, binders, state));
        }
    }
}

/// The atomic equivalent of `¬θ` for atomic `θ`: flips `Atom` to `NegAtom`
/// and back. Involution by construction; the signature is consulted only to
/// reject unregistered relations.
pub fn complement_atom(sig: &Signature, theta: &Formula) -> Result<Formula, SignatureError> {
    match theta {
        Formula::Atom(r, args) => {
            sig.rel_info(r)?;
            Ok(Formula::NegAtom(r.clone(), args.clone()))
        }
        Formula::NegAtom(r, args) => {
            sig.rel_info(r)?;
            Ok(Formula::Atom(r.clone(), args.clone()))
        }
        _ => Err(SignatureError::NotAtomic),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", formula_to_sexp(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    #[test]
    fn substitution_basic() {
        let phi = Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")]));
        let got = phi.substitute("x", &Term::succ(Term::zero()));
        let want =
            Formula::ex("y", Formula::atom("R", vec![Term::succ(Term::zero()), Term::var("y")]));
        assert_eq!(got, want);
    }

    #[test]
    fn substitution_bound_occurrence() {
        let phi = Formula::all("x", Formula::atom("A", vec![Term::var("x")]));
        let got = phi.substitute("x", &Term::numeral(3));
        assert_eq!(got, phi);
    }

    #[test]
    fn substitution_capture_avoidance() {
        let phi = Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")]));
        let got = phi.substitute("x", &Term::var("y"));
        let want = Formula::ex("y'", Formula::atom("R", vec![Term::var("y"), Term::var("y'")]));
        assert_eq!(got, want);
        assert_eq!(got.free_vars().into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
    }

    #[test]
    fn alpha_equality_is_eq() {
        let a = Formula::all("x", Formula::atom("A", vec![Term::var("x")]));
        let b = Formula::all("z", Formula::atom("A", vec![Term::var("z")]));
        assert_eq!(a, b);
        let c = Formula::all("x", Formula::atom("A", vec![Term::var("y")]));
        let d = Formula::all("z", Formula::atom("A", vec![Term::var("y")]));
        assert_eq!(c, d);
        assert_ne!(a, c);
    }

    #[test]
    fn alpha_equality_hash_consistent() {
        use std::collections::HashSet;
        let mut set = HashSet::new();
        set.insert(Formula::ex("u", Formula::eq(Term::var("u"), Term::zero())));
        assert!(set.contains(&Formula::ex("v", Formula::eq(Term::var("v"), Term::zero()))));
    }

    #[test]
    fn complement_is_involution() {
        let sig = sig();
        let theta = Formula::eq(Term::var("x"), Term::var("y"));
        let c = complement_atom(&sig, &theta).unwrap();
        assert_eq!(c, Formula::negatom("=", vec![Term::var("x"), Term::var("y")]));
        let cc = complement_atom(&sig, &c).unwrap();
        assert_eq!(cc, theta);
    }

    #[test]
    fn signature_rejects_unknown_symbols() {
        let sig = sig();
        let bad = Formula::atom("Nope", vec![]);
        assert!(matches!(sig.check_formula(&bad), Err(SignatureError::UnknownRelation(_))));
        let bad_arity = Formula::atom("=", vec![Term::zero()]);
        assert!(matches!(sig.check_formula(&bad_arity), Err(SignatureError::Arity { .. })));
    }

    #[test]
    fn numerals() {
        assert_eq!(Term::numeral(3).as_numeral(), Some(3));
        assert_eq!(Term::var("x").as_numeral(), None);
    }
}
