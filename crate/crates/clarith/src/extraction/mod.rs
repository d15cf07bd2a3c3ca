//! Extraction of programs from kernel proofs.
//!
//! [`extract_mr`] reads a modified-realizability realizer off a
//! minimal-logic proof: introductions become constructors, eliminations
//! become destructors, induction becomes a recursor, and axiom leaves are
//! mapped through a fixed table of canonical realizers.
//! [`extract_dialectica`] (see the submodule) extracts Dialectica witnesses,
//! and [`witness`] wires both into the Π₂ witnessing pipelines.

mod dialectica_ext;
mod witness;

pub use dialectica_ext::{counterexample_candidates, extract_dialectica, validate_dialectica};
pub use witness::{witness_pi2_direct, witness_pi2_via_mr, Pi2Goal, Route, WitnessReport};

use crate::interp::{embed_term, fn_pr_image, realizer_type, rel_char_term};
use crate::kernel::{check, AxiomInstance, LogicMode, Proof, Theory};
use crate::logic::{Formula, Term};
use crate::prt::{PrTerm, Ty};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExtractError {
    #[error("proof rejected by the kernel: {0}")]
    Kernel(String),
    #[error("axiom `{0}` has no registered realizer")]
    NoRealizer(String),
    #[error("cannot embed term: {0}")]
    Embed(String),
    #[error("extraction produced an ill-typed term: {0}")]
    IllTyped(String),
    #[error("goal is not of the required shape: {0}")]
    GoalShape(String),
    #[error("witness verification failed at input {input}: F({input}) = {output}")]
    VerificationFailure { input: u64, output: u64 },
    #[error("evaluation failed: {0}")]
    Eval(String),
    #[error("{0}")]
    Other(String),
}

fn hyp_var(label: &str) -> String {
    format!("_r_{label}")
}

fn embed(t: &Term) -> Result<PrTerm, ExtractError> {
    embed_term(t, &BTreeMap::new()).map_err(|e| ExtractError::Embed(e.to_string()))
}

/// Extract a realizer from a minimal-logic proof. Open hypotheses become
/// free variables of realizer type; free first-order variables stay free at
/// type `N`.
pub fn extract_mr(theory: &Theory, p: &Proof) -> Result<PrTerm, ExtractError> {
    check(p, LogicMode::Minimal, theory).map_err(|e| ExtractError::Kernel(e.to_string()))?;
    let (t, _) = ext(theory, p)?;
    Ok(t)
}

/// Core recursion; returns the realizer and the source conclusion.
fn ext(theory: &Theory, p: &Proof) -> Result<(PrTerm, Formula), ExtractError> {
    Ok(match p {
        Proof::Hyp { label, formula } => (PrTerm::var(hyp_var(label)), formula.clone()),
        Proof::ImpIntro { label, antecedent, body } => {
            let (t, c) = ext(theory, body)?;
            (
                PrTerm::lam(hyp_var(label), realizer_type(antecedent), t),
                Formula::imp(antecedent.clone(), c),
            )
        }
        Proof::ImpElim { fun, arg } => {
            let (f, fc) = ext(theory, fun)?;
            let (a, _) = ext(theory, arg)?;
            let cod = match fc {
                Formula::Imp(_, cod) => *cod,
                _ => unreachable!("checked proof"),
            };
            (PrTerm::app(f, a), cod)
        }
        Proof::AndIntro { left, right } => {
            let (l, lc) = ext(theory, left)?;
            let (r, rc) = ext(theory, right)?;
            (PrTerm::pair(l, r), Formula::and(lc, rc))
        }
        Proof::AndElim0 { pair } => {
            let (t, c) = ext(theory, pair)?;
            let a = match c {
                Formula::And(a, _) => *a,
                _ => unreachable!(),
            };
            (PrTerm::p0(t), a)
        }
        Proof::AndElim1 { pair } => {
            let (t, c) = ext(theory, pair)?;
            let b = match c {
                Formula::And(_, b) => *b,
                _ => unreachable!(),
            };
            (PrTerm::p1(t), b)
        }
        Proof::OrIntro0 { body, other } => {
            let (t, c) = ext(theory, body)?;
            (
                PrTerm::inl(t, realizer_type(other)),
                Formula::or(c, other.clone()),
            )
        }
        Proof::OrIntro1 { other, body } => {
            let (t, c) = ext(theory, body)?;
            (
                PrTerm::inr(realizer_type(other), t),
                Formula::or(other.clone(), c),
            )
        }
        Proof::OrElim { main, left_label, left, right_label, right } => {
            let (scrut, _) = ext(theory, main)?;
            let (l, chi) = ext(theory, left)?;
            let (r, _) = ext(theory, right)?;
            let l2 = l.substitute(&hyp_var(left_label), &PrTerm::EltL(Box::new(scrut.clone())));
            let r2 = r.substitute(&hyp_var(right_label), &PrTerm::EltR(Box::new(scrut.clone())));
            let t = PrTerm::ite(
                realizer_type(&chi),
                PrTerm::IsLeft(Box::new(scrut)),
                l2,
                r2,
            );
            (t, chi)
        }
        Proof::AllIntro { var, body } => {
            let (t, c) = ext(theory, body)?;
            (
                PrTerm::lam(var.clone(), Ty::Nat, t),
                Formula::all(var.clone(), c),
            )
        }
        Proof::AllElim { term, all } => {
            let (t, c) = ext(theory, all)?;
            let inst = match c {
                Formula::All(x, body) => body.substitute(&x, term),
                _ => unreachable!(),
            };
            (PrTerm::app(t, embed(term)?), inst)
        }
        Proof::ExIntro { target, witness, body } => {
            let (t, _) = ext(theory, body)?;
            (PrTerm::pair(embed(witness)?, t), target.clone())
        }
        Proof::ExElim { main, eigen, label, body } => {
            let (m, _) = ext(theory, main)?;
            let (b, chi) = ext(theory, body)?;
            let b = b.substitute(eigen, &PrTerm::p0(m.clone()));
            let b = b.substitute(&hyp_var(label), &PrTerm::p1(m));
            (b, chi)
        }
        Proof::BotElim { .. } | Proof::Dne { .. } => {
            unreachable!("rules outside minimal logic are rejected by the kernel check")
        }
        Proof::Axiom(inst) => {
            let formula = theory
                .instantiate(inst)
                .map_err(|e| ExtractError::Kernel(e.to_string()))?;
            (canonical_realizer(inst)?, formula)
        }
    })
}

/// The registered canonical realizers for the arithmetic axiom schemas.
///
/// Equations and their consequences are realized by constants (atoms carry
/// no computational content); induction by the recursor; excluded middle on
/// a decidable atom by a tag computed from the relation's characteristic
/// term. Realizer soundness is validated empirically by the pipelines; the
/// stability and compl-i realizers are placeholders that are exercised only
/// by proofs that go through those axioms directly.
pub fn canonical_realizer(inst: &AxiomInstance) -> Result<PrTerm, ExtractError> {
    Ok(match inst {
        AxiomInstance::EqRefl(_) | AxiomInstance::SuccNonzero(_) | AxiomInstance::DefEq { .. } => {
            PrTerm::Zero
        }
        AxiomInstance::EqSym(..) | AxiomInstance::SuccInj(..) => {
            PrTerm::lam("b", Ty::Nat, PrTerm::Zero)
        }
        AxiomInstance::EqTrans(..) => {
            PrTerm::lam("b", Ty::Nat, PrTerm::lam("c", Ty::Nat, PrTerm::Zero))
        }
        AxiomInstance::EqSubst { formula, .. } => {
            let ty = realizer_type(formula);
            PrTerm::lam("n", Ty::Nat, PrTerm::lam("a", ty, PrTerm::var("a")))
        }
        AxiomInstance::Induction { formula, .. } => {
            let ty = realizer_type(formula);
            let pair_ty = Ty::prod(
                ty.clone(),
                Ty::arrow(Ty::Nat, Ty::arrow(ty.clone(), ty.clone())),
            );
            PrTerm::lam(
                "p",
                pair_ty,
                PrTerm::rec(PrTerm::p0(PrTerm::var("p")), PrTerm::p1(PrTerm::var("p"))),
            )
        }
        AxiomInstance::AtomStability(_) => PrTerm::lam(
            "d",
            Ty::arrow(Ty::arrow(Ty::Nat, Ty::Nat), Ty::Nat),
            PrTerm::Zero,
        ),
        AxiomInstance::Decidable(theta) => decidability_realizer(theta)?,
        AxiomInstance::ComplIntro(_) => {
            PrTerm::lam("f", Ty::arrow(Ty::Nat, Ty::Nat), PrTerm::Zero)
        }
        AxiomInstance::ComplElim(_) => {
            PrTerm::lam("b", Ty::Nat, PrTerm::lam("c", Ty::Nat, PrTerm::Zero))
        }
    })
}

/// Characteristic PR term of a (possibly complemented) decidable atom:
/// evaluates to `0` exactly when the atom holds.
pub fn atom_char_term(theta: &Formula) -> Result<PrTerm, ExtractError> {
    match theta {
        Formula::Atom(r, args) => {
            let base = rel_char_term(r)
                .ok_or_else(|| ExtractError::NoRealizer(format!("dec on `{r}`")))?();
            let args = args.iter().map(embed).collect::<Result<Vec<_>, _>>()?;
            Ok(PrTerm::apps(base, args))
        }
        Formula::NegAtom(r, args) => {
            let base = rel_char_term(r)
                .ok_or_else(|| ExtractError::NoRealizer(format!("dec on `{r}`")))?();
            let args = args.iter().map(embed).collect::<Result<Vec<_>, _>>()?;
            // complement: 0 iff the base characteristic is nonzero
            Ok(PrTerm::ite(
                Ty::Nat,
                PrTerm::apps(base, args),
                PrTerm::numeral(1),
                PrTerm::Zero,
            ))
        }
        other => Err(ExtractError::GoalShape(format!("not an atom: {other}"))),
    }
}

fn decidability_realizer(theta: &Formula) -> Result<PrTerm, ExtractError> {
    let chi = atom_char_term(theta)?;
    Ok(PrTerm::ite(
        Ty::sum(Ty::Nat, Ty::Nat),
        chi,
        PrTerm::inl(PrTerm::Zero, Ty::Nat),
        PrTerm::inr(Ty::Nat, PrTerm::Zero),
    ))
}

/// PR image of an arithmetic function symbol, re-exported for the pipelines.
pub fn fn_image(name: &str, args: Vec<PrTerm>) -> Result<PrTerm, ExtractError> {
    fn_pr_image(name, args).map_err(|e| ExtractError::Embed(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::{eval_h_bounded, mr_realizes, APredicate};
    use crate::kernel::ha_axioms;
    use crate::logic::Signature;
    use crate::prt::{eval_nat, normalize, typecheck, typecheck_closed};

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn theory() -> Theory {
        ha_axioms(&sig())
    }

    #[test]
    fn atomic_axiom_extracts_to_zero() {
        let p = Proof::Axiom(AxiomInstance::EqRefl(Term::zero()));
        let t = extract_mr(&theory(), &p).unwrap();
        assert_eq!(t, PrTerm::Zero);
    }

    #[test]
    fn conjunction_extracts_to_pair() {
        let p = Proof::and_intro(
            Proof::Axiom(AxiomInstance::EqRefl(Term::zero())),
            Proof::Axiom(AxiomInstance::EqRefl(Term::numeral(1))),
        );
        let t = extract_mr(&theory(), &p).unwrap();
        assert_eq!(t, PrTerm::pair(PrTerm::Zero, PrTerm::Zero));
        assert_eq!(typecheck_closed(&t).unwrap(), Ty::prod(Ty::Nat, Ty::Nat));
    }

    #[test]
    fn extracted_types_match_realizer_types() {
        // λh. h : (p → p), plus an ∃-introduction
        let p = Proof::imp_intro(
            "h",
            Formula::atom("p", vec![]),
            Proof::hyp("h", Formula::atom("p", vec![])),
        );
        let t = extract_mr(&theory(), &p).unwrap();
        assert_eq!(typecheck_closed(&t).unwrap(), Ty::arrow(Ty::Nat, Ty::Nat));

        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let p = Proof::all_intro(
            "x",
            Proof::ex_intro(
                target,
                Term::succ(Term::var("x")),
                Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
            ),
        );
        let t = extract_mr(&theory(), &p).unwrap();
        assert_eq!(
            typecheck_closed(&t).unwrap(),
            Ty::arrow(Ty::Nat, Ty::prod(Ty::Nat, Ty::Nat))
        );
        // F(3) should project to witness 4
        let w = normalize(&PrTerm::p0(PrTerm::app(t, PrTerm::numeral(3)))).unwrap();
        assert_eq!(w, PrTerm::numeral(4));
    }

    #[test]
    fn induction_extracts_to_recursor() {
        let phi = Formula::eq(Term::var("x"), Term::var("x"));
        let p = Proof::Axiom(AxiomInstance::Induction { var: "x".into(), formula: phi });
        let t = extract_mr(&theory(), &p).unwrap();
        match normalize(&t).unwrap() {
            PrTerm::Lam(_, _, body) => assert!(matches!(*body, PrTerm::Rec(..))),
            other => panic!("expected a recursor-former, got {other}"),
        }
    }

    #[test]
    fn decidability_realizer_tags_by_truth() {
        // dec(x = 0): realizer picks inl at x=0 and inr at x=2
        let theta = Formula::eq(Term::var("x"), Term::zero());
        let r = canonical_realizer(&AxiomInstance::Decidable(theta)).unwrap();
        let at = |n: u64| {
            normalize(&r.substitute("x", &PrTerm::numeral(n))).unwrap()
        };
        assert!(matches!(at(0), PrTerm::Inl(..)));
        assert!(matches!(at(2), PrTerm::Inr(..)));
        // and the term typechecks in a context where x : N
        assert_eq!(
            typecheck(&r, &[("x".into(), Ty::Nat)]).unwrap(),
            Ty::sum(Ty::Nat, Ty::Nat)
        );
    }

    #[test]
    fn extracted_realizer_realizes_empirically() {
        // proof of ∃y (y = S(x)) realizes its formula on the standard model
        let matrix = Formula::eq(Term::var("y"), Term::succ(Term::var("x")));
        let target = Formula::ex("y", matrix.clone());
        let p = Proof::ex_intro(
            target.clone(),
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let t = extract_mr(&theory(), &p).unwrap();
        let pred = APredicate::new(&sig(), "y", matrix).unwrap();
        for x in 0..5u64 {
            let inst = t.substitute("x", &PrTerm::numeral(x));
            let phi_inst = target.substitute("x", &Term::numeral(x));
            let pred_inst = APredicate {
                var: "y".into(),
                formula: pred.formula.substitute("x", &Term::numeral(x)),
            };
            let realizes = mr_realizes(&inst, &phi_inst, &pred_inst).unwrap();
            assert!(eval_h_bounded(&realizes, 10).unwrap(), "x = {x}");
        }
    }

    #[test]
    fn or_elim_extracts_case_split() {
        // case split on dec(x = 0): both branches give a witness for
        // ∃y (y = x): left picks 0 (using x=0), right picks x
        let theta = Formula::eq(Term::var("x"), Term::zero());
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::var("x")));
        // left branch: from x = 0 conclude 0 = x by symmetry, witness 0
        let left = Proof::ex_intro(
            target.clone(),
            Term::zero(),
            Proof::imp_elim(
                Proof::Axiom(AxiomInstance::EqSym(Term::var("x"), Term::zero())),
                Proof::hyp("hl", theta.clone()),
            ),
        );
        let right = Proof::ex_intro(
            target.clone(),
            Term::var("x"),
            Proof::Axiom(AxiomInstance::EqRefl(Term::var("x"))),
        );
        let p = Proof::or_elim(
            Proof::Axiom(AxiomInstance::Decidable(theta)),
            "hl",
            left,
            "hr",
            right,
        );
        let t = extract_mr(&theory(), &p).unwrap();
        let f = PrTerm::lam("x", Ty::Nat, PrTerm::p0(t));
        assert_eq!(eval_nat(&f, &[0]).unwrap(), 0);
        assert_eq!(eval_nat(&f, &[3]).unwrap(), 3);
    }
}
