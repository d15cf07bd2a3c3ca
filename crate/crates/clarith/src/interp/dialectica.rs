//! The Dialectica interpretation and its classical `∀∃` variant.
//!
//! `dialectica` maps a formula to `∃x ∀y φ_D(x, y)` with a quantifier-free
//! matrix over the arithmetic signature; `dprime` maps a negation-normal
//! formula to the `∀x ∃y φ_D'(x, y)` form whose existential clause
//! challenges a purported counterexample function.
//!
//! Tuples of variables are kept as flattened lists, concatenated in clause
//! order; the function variables introduced by the implication, universal
//! and existential clauses are curried over the components they depend on.
//! Fresh names are drawn from a per-call counter, so outputs are
//! reproducible.

use super::{embed_formula, HFormula, InterpError};
use crate::logic::{neg_raw, Formula, Nnf};
use crate::prt::{PrTerm, Ty};
use crate::sexp::Sexp;
use std::collections::BTreeMap;
use std::fmt;

/// The `∃`-list, `∀`-list and matrix of an interpreted formula.
///
/// For [`dialectica`] the reading is `∃ ex ∀ all (matrix)`; for [`dprime`]
/// it is `∀ all ∃ ex (matrix)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpretation {
    pub ex: Vec<(String, Ty)>,
    pub all: Vec<(String, Ty)>,
    pub matrix: HFormula,
}

impl Interpretation {
    pub fn to_sexp(&self) -> Sexp {
        let binder = |items: &[(String, Ty)]| {
            items
                .iter()
                .map(|(x, ty)| {
                    Sexp::List(vec![Sexp::sym(x), crate::prt::ty_to_sexp(ty)])
                })
                .collect::<Vec<_>>()
        };
        let mut ex = vec![Sexp::sym("ex")];
        ex.extend(binder(&self.ex));
        let mut all = vec![Sexp::sym("all")];
        all.extend(binder(&self.all));
        Sexp::List(vec![
            Sexp::sym("interp"),
            Sexp::List(ex),
            Sexp::List(all),
            self.matrix.to_sexp(),
        ])
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sexp())
    }
}

struct FreshNames {
    counter: usize,
    used: std::collections::BTreeSet<String>,
}

impl FreshNames {
    fn new() -> FreshNames {
        FreshNames { counter: 0, used: std::collections::BTreeSet::new() }
    }

    fn fresh(&mut self, prefix: &str) -> String {
        loop {
            let name = format!("{prefix}{}", self.counter);
            self.counter += 1;
            if self.used.insert(name.clone()) {
                return name;
            }
        }
    }

    /// Keep a source binder name, priming it on collision.
    fn keep(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        while !self.used.insert(name.clone()) {
            name.push('\'');
        }
        name
    }
}

/// Curried function type over the given argument types.
fn curried(args: &[Ty], result: &Ty) -> Ty {
    args.iter().rev().fold(result.clone(), |acc, a| Ty::arrow(a.clone(), acc))
}

fn apply_vars(f: PrTerm, vars: &[(String, Ty)]) -> PrTerm {
    PrTerm::apps(f, vars.iter().map(|(x, _)| PrTerm::var(x.clone())))
}

/// Right-nested product bundling of a variable list; the empty bundle is `N`.
fn bundle_ty(vars: &[(String, Ty)]) -> Ty {
    match vars {
        [] => Ty::Nat,
        [(_, ty)] => ty.clone(),
        [(_, ty), rest @ ..] => Ty::prod(ty.clone(), bundle_ty(rest)),
    }
}

/// Projections of a bundled value back onto the variable list.
fn unbundle(value: PrTerm, vars: &[(String, Ty)]) -> Vec<(String, PrTerm)> {
    match vars {
        [] => vec![],
        [(x, _)] => vec![(x.clone(), value)],
        [(x, _), rest @ ..] => {
            let mut out = vec![(x.clone(), PrTerm::p0(value.clone()))];
            out.extend(unbundle(PrTerm::p1(value), rest));
            out
        }
    }
}

/// Gödel's Dialectica interpretation `φ ↦ ∃x ∀y φ_D(x,y)`.
pub fn dialectica(phi: &Formula) -> Result<Interpretation, InterpError> {
    let mut names = FreshNames::new();
    let interp = d_rec(phi, &mut names)?;
    debug_assert!(
        interp.matrix.is_quantifier_free(),
        "Dialectica matrix must be quantifier-free over arithmetic"
    );
    Ok(interp)
}

fn d_rec(phi: &Formula, names: &mut FreshNames) -> Result<Interpretation, InterpError> {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => Ok(Interpretation {
            ex: vec![],
            all: vec![],
            matrix: embed_formula(phi, &BTreeMap::new())?,
        }),
        Formula::And(a, b) => {
            let da = d_rec(a, names)?;
            let db = d_rec(b, names)?;
            Ok(Interpretation {
                ex: [da.ex, db.ex].concat(),
                all: [da.all, db.all].concat(),
                matrix: HFormula::and(da.matrix, db.matrix),
            })
        }
        Formula::Or(a, b) => {
            let da = d_rec(a, names)?;
            let db = d_rec(b, names)?;
            let z = names.fresh("z");
            let zty = Ty::sum(bundle_ty(&da.ex), bundle_ty(&db.ex));
            let zvar = PrTerm::var(z.clone());
            let mut left = da.matrix;
            for (x, t) in unbundle(PrTerm::EltL(Box::new(zvar.clone())), &da.ex) {
                left = left.subst(&x, &t);
            }
            let mut right = db.matrix;
            for (u, t) in unbundle(PrTerm::EltR(Box::new(zvar.clone())), &db.ex) {
                right = right.subst(&u, &t);
            }
            let is_left = HFormula::Atom(
                "=".into(),
                vec![PrTerm::IsLeft(Box::new(zvar.clone())), PrTerm::Zero],
            );
            let is_right = HFormula::NegAtom(
                "=".into(),
                vec![PrTerm::IsLeft(Box::new(zvar)), PrTerm::Zero],
            );
            Ok(Interpretation {
                ex: vec![(z, zty)],
                all: [da.all, db.all].concat(),
                matrix: HFormula::or(
                    HFormula::and(is_left, left),
                    HFormula::and(is_right, right),
                ),
            })
        }
        Formula::Imp(a, b) => {
            let da = d_rec(a, names)?;
            let db = d_rec(b, names)?;
            // ∃U,Y ∀x,v (φ_D(x, Y(x,v)) → ψ_D(U(x), v))
            let mut ex = Vec::new();
            let mut hypothesis = da.matrix;
            let mut conclusion = db.matrix;
            let mut u_names = Vec::new();
            for (u, uty) in &db.ex {
                let cap = names.fresh("U");
                let capty = curried(
                    &da.ex.iter().map(|(_, t)| t.clone()).collect::<Vec<_>>(),
                    uty,
                );
                u_names.push((cap.clone(), u.clone()));
                ex.push((cap, capty));
            }
            for (cap, u) in &u_names {
                conclusion =
                    conclusion.subst(u, &apply_vars(PrTerm::var(cap.clone()), &da.ex));
            }
            let mut y_names = Vec::new();
            for (y, yty) in &da.all {
                let cap = names.fresh("Y");
                let arg_tys: Vec<Ty> = da
                    .ex
                    .iter()
                    .map(|(_, t)| t.clone())
                    .chain(db.all.iter().map(|(_, t)| t.clone()))
                    .collect();
                let capty = curried(&arg_tys, yty);
                y_names.push((cap.clone(), y.clone()));
                ex.push((cap, capty));
            }
            for (cap, y) in &y_names {
                let args: Vec<(String, Ty)> =
                    da.ex.iter().chain(db.all.iter()).cloned().collect();
                hypothesis = hypothesis.subst(y, &apply_vars(PrTerm::var(cap.clone()), &args));
            }
            Ok(Interpretation {
                ex,
                all: [da.ex, db.all].concat(),
                matrix: HFormula::imp(hypothesis, conclusion),
            })
        }
        Formula::All(z, body) => {
            let z = names.keep(z);
            let da = d_rec(body, names)?;
            // ∃X ∀z,y φ_D(X(z), y, z)
            let mut ex = Vec::new();
            let mut matrix = da.matrix;
            for (x, xty) in &da.ex {
                let cap = names.fresh("X");
                ex.push((cap.clone(), Ty::arrow(Ty::Nat, xty.clone())));
                matrix = matrix.subst(
                    x,
                    &PrTerm::app(PrTerm::var(cap.clone()), PrTerm::var(z.clone())),
                );
            }
            let mut all = vec![(z, Ty::Nat)];
            all.extend(da.all);
            Ok(Interpretation { ex, all, matrix })
        }
        Formula::Ex(z, body) => {
            let z = names.keep(z);
            let da = d_rec(body, names)?;
            let mut ex = vec![(z, Ty::Nat)];
            ex.extend(da.ex);
            Ok(Interpretation { ex, all: da.all, matrix: da.matrix })
        }
    }
}

/// The classical `∀∃` Dialectica variant on negation-normal formulas.
pub fn dprime(phi: &Nnf) -> Result<Interpretation, InterpError> {
    let mut names = FreshNames::new();
    dp_rec(phi.formula(), &mut names)
}

fn dp_rec(phi: &Formula, names: &mut FreshNames) -> Result<Interpretation, InterpError> {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => Ok(Interpretation {
            ex: vec![],
            all: vec![],
            matrix: embed_formula(phi, &BTreeMap::new())?,
        }),
        Formula::And(a, b) => {
            let da = dp_rec(a, names)?;
            let db = dp_rec(b, names)?;
            Ok(Interpretation {
                all: [da.all, db.all].concat(),
                ex: [da.ex, db.ex].concat(),
                matrix: HFormula::and(da.matrix, db.matrix),
            })
        }
        Formula::Or(a, b) => {
            let da = dp_rec(a, names)?;
            let db = dp_rec(b, names)?;
            Ok(Interpretation {
                all: [da.all, db.all].concat(),
                ex: [da.ex, db.ex].concat(),
                matrix: HFormula::or(da.matrix, db.matrix),
            })
        }
        Formula::All(z, body) => {
            let z = names.keep(z);
            let da = dp_rec(body, names)?;
            let mut all = vec![(z, Ty::Nat)];
            all.extend(da.all);
            Ok(Interpretation { all, ex: da.ex, matrix: da.matrix })
        }
        Formula::Ex(z, body) => {
            // (∃z φ)^D' ≡ ∀S ∃z,r ¬(∼φ)_D'(z, r, S(z, r))
            let z = names.keep(z);
            let dn = dp_rec(&neg_raw(body), names)?;
            let mut all = Vec::new();
            let mut matrix = dn.matrix;
            for (s, sty) in &dn.ex {
                let cap = names.fresh("S");
                let arg_tys: Vec<Ty> = std::iter::once(Ty::Nat)
                    .chain(dn.all.iter().map(|(_, t)| t.clone()))
                    .collect();
                all.push((cap.clone(), curried(&arg_tys, sty)));
                let args: Vec<(String, Ty)> = std::iter::once((z.clone(), Ty::Nat))
                    .chain(dn.all.iter().cloned())
                    .collect();
                matrix = matrix.subst(s, &apply_vars(PrTerm::var(cap.clone()), &args));
            }
            let mut ex = vec![(z.clone(), Ty::Nat)];
            ex.extend(dn.all);
            Ok(Interpretation { all, ex, matrix: HFormula::not(matrix) })
        }
        Formula::Imp(..) => Err(InterpError::Eval(
            "the classical Dialectica variant applies to negation-normal formulas".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{to_nnf, Signature, Term};

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    #[test]
    fn atom_is_trivial() {
        let theta = Formula::eq(Term::var("x"), Term::zero());
        let d = dialectica(&theta).unwrap();
        assert!(d.ex.is_empty() && d.all.is_empty());
        let dp = dprime(&to_nnf(&sig(), &theta).unwrap()).unwrap();
        assert!(dp.ex.is_empty() && dp.all.is_empty());
    }

    #[test]
    fn implication_clause() {
        // φ = ∃a∀b R(a,b), ψ = ∃c∀d R(c,d):
        // (φ→ψ)^D = ∃U,Y ∀a,d (R(a, Y a d) → R(U a, d))
        let phi = Formula::ex(
            "a",
            Formula::all("b", Formula::atom("R", vec![Term::var("a"), Term::var("b")])),
        );
        let psi = Formula::ex(
            "c",
            Formula::all("d", Formula::atom("R", vec![Term::var("c"), Term::var("d")])),
        );
        let d = dialectica(&Formula::imp(phi, psi)).unwrap();
        assert_eq!(d.ex.len(), 2);
        assert_eq!(d.all.len(), 2);
        // U : N→N, Y : N→N→N
        assert_eq!(d.ex[0].1, Ty::arrow(Ty::Nat, Ty::Nat));
        assert_eq!(d.ex[1].1, Ty::arrow(Ty::Nat, Ty::arrow(Ty::Nat, Ty::Nat)));
        assert_eq!(d.all[0].0, "a");
        assert_eq!(d.all[1].0, "d");
        match &d.matrix {
            HFormula::Imp(h, c) => {
                assert!(matches!(**h, HFormula::Atom(ref r, _) if r == "R"));
                assert!(matches!(**c, HFormula::Atom(ref r, _) if r == "R"));
            }
            other => panic!("expected implication matrix, got {other}"),
        }
    }

    #[test]
    fn negation_duality() {
        // (¬φ)^D = ∃Y ∀x ¬φ_D(x, Y(x))
        let phi = Formula::ex(
            "a",
            Formula::all("b", Formula::atom("R", vec![Term::var("a"), Term::var("b")])),
        );
        let d_not = dialectica(&Formula::not(phi.clone())).unwrap();
        assert_eq!(d_not.ex.len(), 1);
        assert_eq!(d_not.all.len(), 1);
        // schema computed independently from dialectica(φ)
        let d = dialectica(&phi).unwrap();
        assert_eq!(d.ex.len(), 1);
        assert_eq!(d.all.len(), 1);
        let y_ty = Ty::arrow(d.ex[0].1.clone(), d.all[0].1.clone());
        assert_eq!(d_not.ex[0].1, y_ty);
        match &d_not.matrix {
            HFormula::Imp(_, b) => assert_eq!(**b, HFormula::Bot),
            other => panic!("expected negated matrix, got {other}"),
        }
    }

    #[test]
    fn existential_prefix_concatenates() {
        // (∃z φ)^D = ∃z,x ∀y φ_D
        let phi = Formula::ex(
            "z",
            Formula::ex("a", Formula::atom("R", vec![Term::var("z"), Term::var("a")])),
        );
        let d = dialectica(&phi).unwrap();
        assert_eq!(
            d.ex.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>(),
            vec!["z", "a"]
        );
        assert!(d.all.is_empty());
    }

    #[test]
    fn dprime_universal_prepends() {
        // (∀z φ)^D' = ∀z,x ∃y φ_D'
        let sig = sig();
        let phi = to_nnf(
            &sig,
            &Formula::all(
                "z",
                Formula::ex("y", Formula::atom("R", vec![Term::var("z"), Term::var("y")])),
            ),
        )
        .unwrap();
        let dp = dprime(&phi).unwrap();
        assert_eq!(dp.all[0].0, "z");
    }

    #[test]
    fn dprime_disjunction_is_plain() {
        let sig = sig();
        let phi = to_nnf(
            &sig,
            &Formula::or(Formula::atom("p", vec![]), Formula::atom("q", vec![])),
        )
        .unwrap();
        let dp = dprime(&phi).unwrap();
        assert!(dp.ex.is_empty() && dp.all.is_empty());
        assert!(matches!(dp.matrix, HFormula::Or(..)));
    }

    #[test]
    fn dprime_existential_clause_challenges_counterexamples() {
        // (∃z ∀w R(z,w))^D': ∀S ∃z ¬(∼∀wR)_D'(…)
        let sig = sig();
        let phi = to_nnf(
            &sig,
            &Formula::ex(
                "z",
                Formula::all("w", Formula::atom("R", vec![Term::var("z"), Term::var("w")])),
            ),
        )
        .unwrap();
        let dp = dprime(&phi).unwrap();
        // (∼φ)^D' = ∃w ¬R(z,w) has empty ∀-list, so the result is
        // ∀S ∃z ¬¬R(z, S(z))
        assert_eq!(dp.all.len(), 1);
        assert!(dp.all[0].0.starts_with('S'));
        assert_eq!(dp.all[0].1, Ty::arrow(Ty::Nat, Ty::Nat));
        assert_eq!(dp.ex, vec![("z".to_string(), Ty::Nat)]);
        assert_eq!(
            dp.matrix.to_sexp().to_string(),
            format!(
                "(imp (imp (atom R z (app {} z)) (bot)) (bot))",
                dp.all[0].0
            )
        );
    }

    #[test]
    fn matrices_are_quantifier_free() {
        let sig = sig();
        let phi = Formula::imp(
            Formula::all("x", Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")]))),
            Formula::ex("u", Formula::all("v", Formula::atom("R", vec![Term::var("u"), Term::var("v")]))),
        );
        assert!(dialectica(&phi).unwrap().matrix.is_quantifier_free());
        let nnf = to_nnf(&sig, &phi).unwrap();
        assert!(dprime(&nnf).unwrap().matrix.is_quantifier_free());
    }

    #[test]
    fn serialization_is_stable() {
        let phi = Formula::ex("z", Formula::eq(Term::var("z"), Term::zero()));
        let d = dialectica(&phi).unwrap();
        assert_eq!(
            d.to_sexp().to_string(),
            "(interp (ex (z N)) (all) (atom = z 0))"
        );
    }
}
