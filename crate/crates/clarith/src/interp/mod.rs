//! Formula-level computational interpretations.
//!
//! Realizability and Dialectica statements live in a higher-typed language:
//! atoms take PR terms as arguments and quantifiers bind typed variables.
//! [`HFormula`] is that language; first-order formulas embed into it with
//! arithmetic function symbols mapped to their PR definitions.
//!
//! The interpretations themselves: modified realizability [`mr_realizes`]
//! parameterized by an [`APredicate`] interpreting `⊥`, the classical
//! realizability [`cr_realizes`] whose universal clause goes through
//! "refutes", and the Dialectica translations in [`dialectica`] / the
//! classical `∀∃` variant [`dprime`].

mod dialectica;

pub use dialectica::{dialectica, dprime, Interpretation};

use crate::logic::{neg, Formula, Nnf, Signature, Term};
use crate::prt::{normalize, typecheck, PrTerm, Ty};
use crate::sexp::Sexp;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum InterpError {
    #[error("function symbol `{0}` has no PR definition")]
    Unembeddable(String),
    #[error("realizer has type {found}, expected {expected}")]
    RealizerType { expected: String, found: String },
    #[error("realizer does not typecheck: {0}")]
    IllTyped(String),
    #[error("the distinguished predicate must be a decidable atom, got `{0}`")]
    BadPredicate(String),
    #[error("cannot evaluate: {0}")]
    Eval(String),
}

/// Formulas over PR terms with typed quantifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HFormula {
    Bot,
    Atom(String, Vec<PrTerm>),
    NegAtom(String, Vec<PrTerm>),
    And(Box<HFormula>, Box<HFormula>),
    Or(Box<HFormula>, Box<HFormula>),
    Imp(Box<HFormula>, Box<HFormula>),
    All(String, Ty, Box<HFormula>),
    Ex(String, Ty, Box<HFormula>),
}

impl HFormula {
    pub fn and(a: HFormula, b: HFormula) -> HFormula {
        HFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: HFormula, b: HFormula) -> HFormula {
        HFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: HFormula, b: HFormula) -> HFormula {
        HFormula::Imp(Box::new(a), Box::new(b))
    }

    pub fn not(a: HFormula) -> HFormula {
        HFormula::imp(a, HFormula::Bot)
    }

    pub fn all(x: impl Into<String>, ty: Ty, body: HFormula) -> HFormula {
        HFormula::All(x.into(), ty, Box::new(body))
    }

    pub fn ex(x: impl Into<String>, ty: Ty, body: HFormula) -> HFormula {
        HFormula::Ex(x.into(), ty, Box::new(body))
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            HFormula::Bot | HFormula::Atom(..) | HFormula::NegAtom(..) => true,
            HFormula::And(a, b) | HFormula::Or(a, b) | HFormula::Imp(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            HFormula::All(..) | HFormula::Ex(..) => false,
        }
    }

    /// Substitute a PR term for a free (term-level) variable.
    pub fn subst(&self, x: &str, v: &PrTerm) -> HFormula {
        match self {
            HFormula::Bot => HFormula::Bot,
            HFormula::Atom(r, args) => {
                HFormula::Atom(r.clone(), args.iter().map(|a| a.substitute(x, v)).collect())
            }
            HFormula::NegAtom(r, args) => {
                HFormula::NegAtom(r.clone(), args.iter().map(|a| a.substitute(x, v)).collect())
            }
            HFormula::And(a, b) => HFormula::and(a.subst(x, v), b.subst(x, v)),
            HFormula::Or(a, b) => HFormula::or(a.subst(x, v), b.subst(x, v)),
            HFormula::Imp(a, b) => HFormula::imp(a.subst(x, v), b.subst(x, v)),
            HFormula::All(y, ty, body) => {
                if y == x {
                    self.clone()
                } else {
                    HFormula::All(y.clone(), ty.clone(), Box::new(body.subst(x, v)))
                }
            }
            HFormula::Ex(y, ty, body) => {
                if y == x {
                    self.clone()
                } else {
                    HFormula::Ex(y.clone(), ty.clone(), Box::new(body.subst(x, v)))
                }
            }
        }
    }

    pub fn free_vars(&self) -> std::collections::BTreeSet<String> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(
        &self,
        bound: &mut Vec<String>,
        out: &mut std::collections::BTreeSet<String>,
    ) {
        match self {
            HFormula::Bot => {}
            HFormula::Atom(_, args) | HFormula::NegAtom(_, args) => {
                for a in args {
                    for v in a.free_vars() {
                        if !bound.iter().any(|b| *b == v) {
                            out.insert(v);
                        }
                    }
                }
            }
            HFormula::And(a, b) | HFormula::Or(a, b) | HFormula::Imp(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            HFormula::All(x, _, body) | HFormula::Ex(x, _, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn to_sexp(&self) -> Sexp {
        use crate::prt::prterm_to_sexp;
        use crate::prt::ty_to_sexp;
        match self {
            HFormula::Bot => Sexp::List(vec![Sexp::sym("bot")]),
            HFormula::Atom(r, args) => {
                let mut items = vec![Sexp::sym("atom"), Sexp::sym(r)];
                items.extend(args.iter().map(prterm_to_sexp));
                Sexp::List(items)
            }
            HFormula::NegAtom(r, args) => {
                let mut items = vec![Sexp::sym("catom"), Sexp::sym(r)];
                items.extend(args.iter().map(prterm_to_sexp));
                Sexp::List(items)
            }
            HFormula::And(a, b) => {
                Sexp::List(vec![Sexp::sym("and"), a.to_sexp(), b.to_sexp()])
            }
            HFormula::Or(a, b) => Sexp::List(vec![Sexp::sym("or"), a.to_sexp(), b.to_sexp()]),
            HFormula::Imp(a, b) => {
                Sexp::List(vec![Sexp::sym("imp"), a.to_sexp(), b.to_sexp()])
            }
            HFormula::All(x, ty, body) => Sexp::List(vec![
                Sexp::sym("forall"),
                Sexp::List(vec![Sexp::sym(x), ty_to_sexp(ty)]),
                body.to_sexp(),
            ]),
            HFormula::Ex(x, ty, body) => Sexp::List(vec![
                Sexp::sym("exists"),
                Sexp::List(vec![Sexp::sym(x), ty_to_sexp(ty)]),
                body.to_sexp(),
            ]),
        }
    }
}

impl fmt::Display for HFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sexp())
    }
}

/// The PR image of an arithmetic function symbol.
pub fn fn_pr_image(name: &str, args: Vec<PrTerm>) -> Result<PrTerm, InterpError> {
    use crate::prt::stdlib;
    match name {
        "0" => Ok(PrTerm::Zero),
        "S" => Ok(PrTerm::apps(PrTerm::Succ, args)),
        "+" => Ok(PrTerm::apps(stdlib::add(), args)),
        "*" => Ok(PrTerm::apps(stdlib::mul(), args)),
        other => Err(InterpError::Unembeddable(other.to_string())),
    }
}

/// A characteristic PR term for a decidable relation: evaluates to `0` on
/// tuples in the relation.
pub fn rel_char_term(name: &str) -> Option<fn() -> PrTerm> {
    use crate::prt::stdlib;
    match name {
        "=" => Some(stdlib::char_eq),
        "<=" => Some(stdlib::char_leq),
        _ => None,
    }
}

pub(crate) fn embed_term(t: &Term, env: &BTreeMap<String, PrTerm>) -> Result<PrTerm, InterpError> {
    match t {
        Term::Var(x) => Ok(env.get(x).cloned().unwrap_or_else(|| PrTerm::var(x.clone()))),
        Term::App(f, args) => {
            let args = args
                .iter()
                .map(|a| embed_term(a, env))
                .collect::<Result<Vec<_>, _>>()?;
            fn_pr_image(f, args)
        }
    }
}

/// Embed a first-order formula, substituting PR terms for selected free
/// variables along the way.
pub fn embed_formula(
    phi: &Formula,
    env: &BTreeMap<String, PrTerm>,
) -> Result<HFormula, InterpError> {
    match phi {
        Formula::Bot => Ok(HFormula::Bot),
        Formula::Atom(r, args) => Ok(HFormula::Atom(
            r.clone(),
            args.iter().map(|a| embed_term(a, env)).collect::<Result<Vec<_>, _>>()?,
        )),
        Formula::NegAtom(r, args) => Ok(HFormula::NegAtom(
            r.clone(),
            args.iter().map(|a| embed_term(a, env)).collect::<Result<Vec<_>, _>>()?,
        )),
        Formula::And(a, b) => Ok(HFormula::and(embed_formula(a, env)?, embed_formula(b, env)?)),
        Formula::Or(a, b) => Ok(HFormula::or(embed_formula(a, env)?, embed_formula(b, env)?)),
        Formula::Imp(a, b) => Ok(HFormula::imp(embed_formula(a, env)?, embed_formula(b, env)?)),
        Formula::All(x, body) => {
            let mut env2 = env.clone();
            env2.remove(x);
            Ok(HFormula::all(x.clone(), Ty::Nat, embed_formula(body, &env2)?))
        }
        Formula::Ex(x, body) => {
            let mut env2 = env.clone();
            env2.remove(x);
            Ok(HFormula::ex(x.clone(), Ty::Nat, embed_formula(body, &env2)?))
        }
    }
}

/// The distinguished predicate `A(y)` interpreting `⊥` under the
/// A-translation: a decidable atom with one distinguished variable.
#[derive(Debug, Clone)]
pub struct APredicate {
    pub var: String,
    pub formula: Formula,
}

impl APredicate {
    pub fn new(sig: &Signature, var: impl Into<String>, formula: Formula) -> Result<APredicate, InterpError> {
        let rel = match &formula {
            Formula::Atom(r, _) | Formula::NegAtom(r, _) => r.clone(),
            other => return Err(InterpError::BadPredicate(other.to_string())),
        };
        let decidable = sig.rel_info(&rel).map(|i| i.decidable).unwrap_or(false);
        if !decidable {
            return Err(InterpError::BadPredicate(formula.to_string()));
        }
        Ok(APredicate { var: var.into(), formula })
    }

    /// `A(a)` as a higher-typed formula.
    pub fn apply(&self, a: &PrTerm) -> Result<HFormula, InterpError> {
        let mut env = BTreeMap::new();
        env.insert(self.var.clone(), a.clone());
        embed_formula(&self.formula, &env)
    }
}

/// The realizer type `τ(φ)`.
pub fn realizer_type(phi: &Formula) -> Ty {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => Ty::Nat,
        Formula::And(a, b) => Ty::prod(realizer_type(a), realizer_type(b)),
        Formula::Or(a, b) => Ty::sum(realizer_type(a), realizer_type(b)),
        Formula::Imp(a, b) => Ty::arrow(realizer_type(a), realizer_type(b)),
        Formula::All(_, body) => Ty::arrow(Ty::Nat, realizer_type(body)),
        Formula::Ex(_, body) => Ty::prod(Ty::Nat, realizer_type(body)),
    }
}

fn check_realizer_type(a: &PrTerm, phi: &Formula) -> Result<(), InterpError> {
    let expected = realizer_type(phi);
    let mut ctx: Vec<(String, Ty)> = Vec::new();
    for v in a.free_vars() {
        ctx.push((v, Ty::Nat));
    }
    let found = typecheck(a, &ctx).map_err(|e| InterpError::IllTyped(e.to_string()))?;
    if found != expected {
        return Err(InterpError::RealizerType {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

/// Tag test `isleft(t) = 0` as a higher-typed atom.
fn is_left(t: PrTerm) -> HFormula {
    HFormula::Atom("=".into(), vec![PrTerm::IsLeft(Box::new(t)), PrTerm::Zero])
}

fn is_right(t: PrTerm) -> HFormula {
    HFormula::NegAtom("=".into(), vec![PrTerm::IsLeft(Box::new(t)), PrTerm::Zero])
}

/// Modified realizability: the formula "`a` realizes `φ`", with `⊥`
/// realized by the distinguished predicate.
pub fn mr_realizes(a: &PrTerm, phi: &Formula, pred: &APredicate) -> Result<HFormula, InterpError> {
    check_realizer_type(a, phi)?;
    let mut fresh = 0usize;
    mr_rec(a, phi, pred, &BTreeMap::new(), &mut fresh)
}

fn mr_rec(
    a: &PrTerm,
    phi: &Formula,
    pred: &APredicate,
    env: &BTreeMap<String, PrTerm>,
    fresh: &mut usize,
) -> Result<HFormula, InterpError> {
    match phi {
        Formula::Bot => pred.apply(a),
        Formula::Atom(..) | Formula::NegAtom(..) => embed_formula(phi, env),
        Formula::And(p, q) => Ok(HFormula::and(
            mr_rec(&PrTerm::p0(a.clone()), p, pred, env, fresh)?,
            mr_rec(&PrTerm::p1(a.clone()), q, pred, env, fresh)?,
        )),
        Formula::Or(p, q) => {
            let left = HFormula::and(
                is_left(a.clone()),
                mr_rec(&PrTerm::EltL(Box::new(a.clone())), p, pred, env, fresh)?,
            );
            let right = HFormula::and(
                is_right(a.clone()),
                mr_rec(&PrTerm::EltR(Box::new(a.clone())), q, pred, env, fresh)?,
            );
            Ok(HFormula::or(left, right))
        }
        Formula::Imp(p, q) => {
            let b = format!("b{}", *fresh);
            *fresh += 1;
            let bty = realizer_type(p);
            let inner = HFormula::imp(
                mr_rec(&PrTerm::var(b.clone()), p, pred, env, fresh)?,
                mr_rec(&PrTerm::app(a.clone(), PrTerm::var(b.clone())), q, pred, env, fresh)?,
            );
            Ok(HFormula::all(b, bty, inner))
        }
        Formula::All(x, body) => {
            let mut env2 = env.clone();
            env2.insert(x.clone(), PrTerm::var(x.clone()));
            let inner = mr_rec(
                &PrTerm::app(a.clone(), PrTerm::var(x.clone())),
                body,
                pred,
                &env2,
                fresh,
            )?;
            Ok(HFormula::all(x.clone(), Ty::Nat, inner))
        }
        Formula::Ex(x, body) => {
            let mut env2 = env.clone();
            env2.insert(x.clone(), PrTerm::p0(a.clone()));
            mr_rec(&PrTerm::p1(a.clone()), body, pred, &env2, fresh)
        }
    }
}

/// Classical realizability on negation-normal formulas: like modified
/// realizability except that the universal clause reads
/// `a ⊩ ∀x φ ≡ a refutes ∃x ∼φ`, where "`a` refutes ψ" is
/// `∀b (b ⊩ ψ → A(a(b)))`.
pub fn cr_realizes(a: &PrTerm, phi: &Nnf, pred: &APredicate) -> Result<HFormula, InterpError> {
    let mut fresh = 0usize;
    cr_rec(a, phi.formula(), pred, &BTreeMap::new(), &mut fresh)
}

/// The realizer type used by the classical universal clause.
pub fn cr_realizer_type(phi: &Formula) -> Ty {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => Ty::Nat,
        Formula::And(a, b) => Ty::prod(cr_realizer_type(a), cr_realizer_type(b)),
        Formula::Or(a, b) => Ty::sum(cr_realizer_type(a), cr_realizer_type(b)),
        Formula::Imp(..) => unreachable!("classical realizability is for NNF"),
        Formula::All(x, body) => {
            // refuter of ∃x ∼body
            let inner = Formula::Ex(x.clone(), Box::new(crate::logic::neg_raw(body)));
            Ty::arrow(cr_realizer_type(&inner), Ty::Nat)
        }
        Formula::Ex(_, body) => Ty::prod(Ty::Nat, cr_realizer_type(body)),
    }
}

fn cr_rec(
    a: &PrTerm,
    phi: &Formula,
    pred: &APredicate,
    env: &BTreeMap<String, PrTerm>,
    fresh: &mut usize,
) -> Result<HFormula, InterpError> {
    match phi {
        Formula::Bot => pred.apply(a),
        Formula::Atom(..) | Formula::NegAtom(..) => embed_formula(phi, env),
        Formula::And(p, q) => Ok(HFormula::and(
            cr_rec(&PrTerm::p0(a.clone()), p, pred, env, fresh)?,
            cr_rec(&PrTerm::p1(a.clone()), q, pred, env, fresh)?,
        )),
        Formula::Or(p, q) => {
            let left = HFormula::and(
                is_left(a.clone()),
                cr_rec(&PrTerm::EltL(Box::new(a.clone())), p, pred, env, fresh)?,
            );
            let right = HFormula::and(
                is_right(a.clone()),
                cr_rec(&PrTerm::EltR(Box::new(a.clone())), q, pred, env, fresh)?,
            );
            Ok(HFormula::or(left, right))
        }
        Formula::All(x, body) => {
            // a refutes ∃x ∼body
            let refuted = Formula::Ex(x.clone(), Box::new(crate::logic::neg_raw(body)));
            let b = format!("b{}", *fresh);
            *fresh += 1;
            let bty = cr_realizer_type(&refuted);
            let hyp = cr_rec(&PrTerm::var(b.clone()), &refuted, pred, env, fresh)?;
            let concl = pred.apply(&PrTerm::app(a.clone(), PrTerm::var(b.clone())))?;
            Ok(HFormula::all(b, bty, HFormula::imp(hyp, concl)))
        }
        Formula::Ex(x, body) => {
            let mut env2 = env.clone();
            env2.insert(x.clone(), PrTerm::p0(a.clone()));
            cr_rec(&PrTerm::p1(a.clone()), body, pred, &env2, fresh)
        }
        Formula::Imp(..) => Err(InterpError::Eval(
            "classical realizability applies to negation-normal formulas".into(),
        )),
    }
}

/// Evaluate a closed, essentially first-order higher-typed formula in the
/// standard model, with `ℕ` quantifiers bounded by `bound` (a test-only
/// approximation; higher-type quantifiers are rejected).
pub fn eval_h_bounded(phi: &HFormula, bound: u64) -> Result<bool, InterpError> {
    match phi {
        HFormula::Bot => Ok(false),
        HFormula::Atom(r, args) => eval_h_atom(r, args),
        HFormula::NegAtom(r, args) => Ok(!eval_h_atom(r, args)?),
        HFormula::And(a, b) => Ok(eval_h_bounded(a, bound)? && eval_h_bounded(b, bound)?),
        HFormula::Or(a, b) => Ok(eval_h_bounded(a, bound)? || eval_h_bounded(b, bound)?),
        HFormula::Imp(a, b) => Ok(!eval_h_bounded(a, bound)? || eval_h_bounded(b, bound)?),
        HFormula::All(x, Ty::Nat, body) => {
            for v in 0..=bound {
                if !eval_h_bounded(&body.subst(x, &PrTerm::numeral(v)), bound)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        HFormula::Ex(x, Ty::Nat, body) => {
            for v in 0..=bound {
                if eval_h_bounded(&body.subst(x, &PrTerm::numeral(v)), bound)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        HFormula::All(_, ty, _) | HFormula::Ex(_, ty, _) => Err(InterpError::Eval(format!(
            "cannot enumerate quantifier at type {ty}"
        ))),
    }
}

fn eval_h_atom(rel: &str, args: &[PrTerm]) -> Result<bool, InterpError> {
    let vals = args
        .iter()
        .map(|t| {
            let n = normalize(t).map_err(|e| InterpError::Eval(e.to_string()))?;
            n.as_numeral().ok_or_else(|| InterpError::Eval(format!("open atom argument {n}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    match (rel, vals.as_slice()) {
        ("=", [a, b]) => Ok(a == b),
        ("!=", [a, b]) => Ok(a != b),
        ("<=", [a, b]) => Ok(a <= b),
        (">", [a, b]) => Ok(a > b),
        _ => Err(InterpError::Eval(format!("no standard interpretation for `{rel}`"))),
    }
}

/// Convenience: `∼φ` at the NNF level, used by several pipelines.
pub fn nnf_negate(phi: &Nnf) -> Nnf {
    neg(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::to_nnf;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn pred_ry() -> APredicate {
        // A(y) := y = S(x), the successor relation at parameter x
        APredicate::new(
            &sig(),
            "y",
            Formula::eq(Term::var("y"), Term::succ(Term::var("x"))),
        )
        .unwrap()
    }

    #[test]
    fn realizer_types() {
        // τ(∃y R(x,y)) = N×N
        let phi = Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")]));
        assert_eq!(realizer_type(&phi), Ty::prod(Ty::Nat, Ty::Nat));
        // τ(atom) = N
        assert_eq!(realizer_type(&Formula::atom("p", vec![])), Ty::Nat);
        // τ(¬¬∃y R) = (N×N → N) → N
        let nn = Formula::not(Formula::not(phi));
        assert_eq!(
            realizer_type(&nn),
            Ty::arrow(
                Ty::arrow(Ty::prod(Ty::Nat, Ty::Nat), Ty::Nat),
                Ty::Nat
            )
        );
    }

    #[test]
    fn mr_existential_clause() {
        // a ⊩ ∃y (y = S(x)) unfolds to (a)0 = S(x) via the pair projections
        let phi = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let a = PrTerm::pair(PrTerm::numeral(4), PrTerm::Zero);
        let got = mr_realizes(&a, &phi, &pred_ry()).unwrap();
        // (a)0 substituted into the matrix
        assert_eq!(
            got,
            HFormula::Atom(
                "=".into(),
                vec![
                    PrTerm::p0(PrTerm::pair(PrTerm::numeral(4), PrTerm::Zero)),
                    PrTerm::apps(PrTerm::Succ, [PrTerm::var("x")]),
                ]
            )
        );
    }

    #[test]
    fn mr_atom_ignores_realizer() {
        let theta = Formula::eq(Term::zero(), Term::zero());
        let got = mr_realizes(&PrTerm::Zero, &theta, &pred_ry()).unwrap();
        assert_eq!(got, HFormula::Atom("=".into(), vec![PrTerm::Zero, PrTerm::Zero]));
    }

    #[test]
    fn mr_bot_is_the_predicate() {
        let got = mr_realizes(&PrTerm::numeral(7), &Formula::Bot, &pred_ry()).unwrap();
        assert_eq!(
            got,
            HFormula::Atom(
                "=".into(),
                vec![
                    PrTerm::numeral(7),
                    PrTerm::apps(PrTerm::Succ, [PrTerm::var("x")])
                ]
            )
        );
    }

    #[test]
    fn mr_implication_clause_shape() {
        let phi = Formula::imp(
            Formula::eq(Term::zero(), Term::zero()),
            Formula::eq(Term::zero(), Term::zero()),
        );
        let a = PrTerm::lam("u", Ty::Nat, PrTerm::Zero);
        let got = mr_realizes(&a, &phi, &pred_ry()).unwrap();
        match got {
            HFormula::All(_, Ty::Nat, body) => match *body {
                HFormula::Imp(..) => {}
                other => panic!("expected implication, got {other}"),
            },
            other => panic!("expected universal, got {other}"),
        }
    }

    #[test]
    fn mr_type_mismatch_rejected() {
        let phi = Formula::ex("y", Formula::eq(Term::var("y"), Term::zero()));
        assert!(matches!(
            mr_realizes(&PrTerm::Zero, &phi, &pred_ry()),
            Err(InterpError::RealizerType { .. })
        ));
    }

    #[test]
    fn cr_universal_clause_uses_refutes() {
        let sig = sig();
        // ∀y R~(x, y): a ⊩ it is ∀b (b ⊩ ∃y R(x,y) → A(a b))
        let phi = to_nnf(
            &sig,
            &Formula::all("y", Formula::negatom("R", vec![Term::var("x"), Term::var("y")])),
        )
        .unwrap();
        let a = PrTerm::lam("b", Ty::prod(Ty::Nat, Ty::Nat), PrTerm::p0(PrTerm::var("b")));
        let got = cr_realizes(&a, &phi, &pred_ry()).unwrap();
        match got {
            HFormula::All(b, ty, body) => {
                assert_eq!(ty, Ty::prod(Ty::Nat, Ty::Nat));
                match *body {
                    HFormula::Imp(hyp, concl) => {
                        // hypothesis: (b)1-realizes R(x, (b)0), i.e. the atom itself
                        assert!(matches!(*hyp, HFormula::Atom(ref r, _) if r == "R"));
                        // conclusion: A(a(b))
                        assert!(matches!(*concl, HFormula::Atom(ref r, _) if r == "="));
                    }
                    other => panic!("unexpected body {other}"),
                }
                let _ = b;
            }
            other => panic!("expected universal clause, got {other}"),
        }
    }

    #[test]
    fn cr_atom_clause() {
        let sig = sig();
        let theta = to_nnf(&sig, &Formula::eq(Term::var("x"), Term::zero())).unwrap();
        let got = cr_realizes(&PrTerm::Zero, &theta, &pred_ry()).unwrap();
        assert_eq!(
            got,
            HFormula::Atom("=".into(), vec![PrTerm::var("x"), PrTerm::Zero])
        );
    }

    #[test]
    fn projection_refutes_existential_of_complement() {
        // evaluation check of the id-trick: e := λb.(b)0 refutes ∃y R̄... here
        // with A(y) := y = S(x) at x := 3, e maps any realizer ⟨y0, r⟩ of
        // ∃y (y = S(3)) to y0 which satisfies A
        let phi = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::numeral(3))));
        let witness = PrTerm::pair(PrTerm::numeral(4), PrTerm::Zero);
        let a_pred = APredicate::new(
            &sig(),
            "y",
            Formula::eq(Term::var("y"), Term::succ(Term::numeral(3))),
        )
        .unwrap();
        let realizes = mr_realizes(&witness, &phi, &a_pred).unwrap();
        assert!(eval_h_bounded(&realizes, 10).unwrap());
        let e = PrTerm::lam("b", Ty::prod(Ty::Nat, Ty::Nat), PrTerm::p0(PrTerm::var("b")));
        let picked = normalize(&PrTerm::app(e, witness)).unwrap();
        assert_eq!(picked, PrTerm::numeral(4));
    }
}
