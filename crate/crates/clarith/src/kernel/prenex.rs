//! Prenexation with a kernel-checked classical equivalence proof.
//!
//! Input must be implication-free (convert with `to_nnf` first). Quantifiers
//! are pulled to the front left-to-right, renaming apart where necessary;
//! alongside the prenex form we synthesize a proof of `φ ↔ pnf(φ)` that the
//! kernel accepts in classical mode. Most quantifier shifts are minimally
//! valid; pulling `∀` out of the right of a disjunction is the genuinely
//! classical step and uses DNE.

use super::builder::{cong_and, cong_or, IffPf, Names};
use super::Proof;
use crate::logic::{fresh_name, Formula, Term};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PrenexError {
    #[error("prenexation requires an implication-free formula, found `{0}`")]
    HasImplication(String),
}

#[derive(Debug, Clone)]
pub struct PrenexResult {
    pub formula: Formula,
    /// Closed classical proof of `source ↔ formula`.
    pub equivalence: Proof,
}

/// Prenex an implication-free formula.
pub fn prenex(phi: &Formula) -> Result<PrenexResult, PrenexError> {
    ensure_imp_free(phi)?;
    let mut g = Names::new();
    let (formula, iff) = pnf(phi, &mut g);
    debug_assert_eq!(iff.lhs, *phi);
    debug_assert_eq!(iff.rhs, formula);
    Ok(PrenexResult { formula, equivalence: iff.into_proof() })
}

fn ensure_imp_free(phi: &Formula) -> Result<(), PrenexError> {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) => {
            ensure_imp_free(a)?;
            ensure_imp_free(b)
        }
        Formula::Imp(..) => Err(PrenexError::HasImplication(phi.to_string())),
        Formula::All(_, body) | Formula::Ex(_, body) => ensure_imp_free(body),
    }
}

fn pnf(phi: &Formula, g: &mut Names) -> (Formula, IffPf) {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => {
            (phi.clone(), IffPf::refl(phi, g))
        }
        Formula::All(x, body) => {
            let (pb, ib) = pnf(body, g);
            (Formula::all(x.clone(), pb), ib.cong_all(x, g))
        }
        Formula::Ex(x, body) => {
            let (pb, ib) = pnf(body, g);
            (Formula::ex(x.clone(), pb), ib.cong_ex(x, g))
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            let conj = matches!(phi, Formula::And(..));
            let (pa, ia) = pnf(a, g);
            let (pb, ib) = pnf(b, g);
            let combined = if conj { cong_and(&ia, &ib, g) } else { cong_or(&ia, &ib, g) };
            let (pulled, ipull) = pull(conj, &pa, &pb, g);
            (pulled, combined.trans(&ipull, g))
        }
        Formula::Imp(..) => unreachable!("checked by ensure_imp_free"),
    }
}

/// Pull prenex prefixes of `left` and `right` (both already prenex) out of
/// `left op right`, left prefix first.
fn pull(conj: bool, left: &Formula, right: &Formula, g: &mut Names) -> (Formula, IffPf) {
    let here = combine(conj, left, right);
    match left {
        Formula::All(x, body) | Formula::Ex(x, body) => {
            let universal = matches!(left, Formula::All(..));
            let (x, body) = rename_apart(x, body, right);
            let shift = shift_left(conj, universal, &x, &body, right, g);
            let (inner, iinner) = pull(conj, &body, right, g);
            let under = if universal {
                iinner.cong_all(&x, g)
            } else {
                iinner.cong_ex(&x, g)
            };
            let total = shift.trans(&under, g);
            debug_assert_eq!(total.lhs, here);
            (under_q(universal, &x, inner), total)
        }
        _ => match right {
            Formula::All(y, body) | Formula::Ex(y, body) => {
                let universal = matches!(right, Formula::All(..));
                let (y, body) = rename_apart(y, body, left);
                // reduce to the left-pull through commutativity
                let comm1 = comm(conj, left, right, g);
                let shift = shift_left(conj, universal, &y, &body, left, g);
                let (inner, iinner) = pull(conj, left, &body, g);
                // inside the quantifier: body op left ↔ left op body, then recurse
                let inside = comm(conj, &body, left, g).trans(&iinner, g);
                let under = if universal {
                    inside.cong_all(&y, g)
                } else {
                    inside.cong_ex(&y, g)
                };
                let total = comm1.trans(&shift, g).trans(&under, g);
                debug_assert_eq!(total.lhs, here);
                (under_q(universal, &y, inner), total)
            }
            _ => (here.clone(), IffPf::refl(&here, g)),
        },
    }
}

fn combine(conj: bool, a: &Formula, b: &Formula) -> Formula {
    if conj {
        Formula::and(a.clone(), b.clone())
    } else {
        Formula::or(a.clone(), b.clone())
    }
}

fn under_q(universal: bool, x: &str, body: Formula) -> Formula {
    if universal {
        Formula::all(x, body)
    } else {
        Formula::ex(x, body)
    }
}

fn rename_apart(x: &str, body: &Formula, other: &Formula) -> (String, Formula) {
    if other.has_free_var(x) {
        let mut taken: BTreeSet<String> = other.free_vars();
        taken.extend(body.free_vars());
        let fresh = fresh_name(x, &taken);
        (fresh.clone(), body.substitute(x, &Term::var(fresh)))
    } else {
        (x.to_string(), body.clone())
    }
}

/// `(x ∧ y)` / `(x ∨ y)` commutativity as an equivalence proof.
fn comm(conj: bool, a: &Formula, b: &Formula, g: &mut Names) -> IffPf {
    let dir = |a: &Formula, b: &Formula, g: &mut Names| -> Proof {
        let from = combine(conj, a, b);
        let h = g.fresh("h");
        if conj {
            Proof::imp_intro(
                h.clone(),
                from.clone(),
                Proof::and_intro(
                    Proof::and_elim1(Proof::hyp(h.clone(), from.clone())),
                    Proof::and_elim0(Proof::hyp(h.clone(), from.clone())),
                ),
            )
        } else {
            let l = g.fresh("h");
            let r = g.fresh("h");
            Proof::imp_intro(
                h.clone(),
                from.clone(),
                Proof::or_elim(
                    Proof::hyp(h, from.clone()),
                    l.clone(),
                    Proof::or_intro1(b.clone(), Proof::hyp(l, a.clone())),
                    r.clone(),
                    Proof::or_intro0(Proof::hyp(r, b.clone()), a.clone()),
                ),
            )
        }
    };
    IffPf::new(combine(conj, a, b), combine(conj, b, a), dir(a, b, g), dir(b, a, g))
}

/// `(Q x body) op r ↔ Q x (body op r)` with `x ∉ FV(r)`.
fn shift_left(
    conj: bool,
    universal: bool,
    x: &str,
    body: &Formula,
    r: &Formula,
    g: &mut Names,
) -> IffPf {
    debug_assert!(!r.has_free_var(x));
    let lhs = combine(conj, &under_q(universal, x, body.clone()), r);
    let rhs = under_q(universal, x, combine(conj, body, r));
    let (fwd, bwd) = match (conj, universal) {
        (true, true) => (shift_all_and_fwd(x, body, r, g), shift_all_and_bwd(x, body, r, g)),
        (true, false) => (shift_ex_and_fwd(x, body, r, g), shift_ex_and_bwd(x, body, r, g)),
        (false, true) => (shift_all_or_fwd(x, body, r, g), shift_all_or_bwd(x, body, r, g)),
        (false, false) => (shift_ex_or_fwd(x, body, r, g), shift_ex_or_bwd(x, body, r, g)),
    };
    IffPf::new(lhs, rhs, fwd, bwd)
}

fn shift_all_and_fwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::and(Formula::all(x, a.clone()), r.clone());
    let h = g.fresh("h");
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::all_intro(
            x,
            Proof::and_intro(
                Proof::all_elim(Term::var(x), Proof::and_elim0(Proof::hyp(h.clone(), from.clone()))),
                Proof::and_elim1(Proof::hyp(h.clone(), from.clone())),
            ),
        ),
    )
}

fn shift_all_and_bwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::all(x, Formula::and(a.clone(), r.clone()));
    let h = g.fresh("h");
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::and_intro(
            Proof::all_intro(
                x,
                Proof::and_elim0(Proof::all_elim(Term::var(x), Proof::hyp(h.clone(), from.clone()))),
            ),
            Proof::and_elim1(Proof::all_elim(Term::zero(), Proof::hyp(h, from.clone()))),
        ),
    )
}

fn shift_ex_and_fwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::and(Formula::ex(x, a.clone()), r.clone());
    let to = Formula::ex(x, Formula::and(a.clone(), r.clone()));
    let h = g.fresh("h");
    let w = g.fresh("h");
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::ex_elim(
            Proof::and_elim0(Proof::hyp(h.clone(), from.clone())),
            x,
            w.clone(),
            Proof::ex_intro(
                to,
                Term::var(x),
                Proof::and_intro(
                    Proof::hyp(w, a.clone()),
                    Proof::and_elim1(Proof::hyp(h.clone(), from.clone())),
                ),
            ),
        ),
    )
}

fn shift_ex_and_bwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::ex(x, Formula::and(a.clone(), r.clone()));
    let h = g.fresh("h");
    let w = g.fresh("h");
    let pair = Formula::and(a.clone(), r.clone());
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::ex_elim(
            Proof::hyp(h.clone(), from.clone()),
            x,
            w.clone(),
            Proof::and_intro(
                Proof::ex_intro(
                    Formula::ex(x, a.clone()),
                    Term::var(x),
                    Proof::and_elim0(Proof::hyp(w.clone(), pair.clone())),
                ),
                Proof::and_elim1(Proof::hyp(w, pair.clone())),
            ),
        ),
    )
}

fn shift_all_or_fwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    // (∀x a) ∨ r → ∀x (a ∨ r): minimally valid
    let from = Formula::or(Formula::all(x, a.clone()), r.clone());
    let h = g.fresh("h");
    let c = g.fresh("h");
    let hr = g.fresh("h");
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::all_intro(
            x,
            Proof::or_elim(
                Proof::hyp(h.clone(), from.clone()),
                c.clone(),
                Proof::or_intro0(
                    Proof::all_elim(Term::var(x), Proof::hyp(c, Formula::all(x, a.clone()))),
                    r.clone(),
                ),
                hr.clone(),
                Proof::or_intro1(a.clone(), Proof::hyp(hr, r.clone())),
            ),
        ),
    )
}

fn shift_all_or_bwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    // ∀x (a ∨ r) → (∀x a) ∨ r: the classical step (DNE + ex falso)
    let from = Formula::all(x, Formula::or(a.clone(), r.clone()));
    let to = Formula::or(Formula::all(x, a.clone()), r.clone());
    let h = g.fresh("h");
    let k = g.fresh("h");
    let ha = g.fresh("h");
    let hr = g.fresh("h");
    let not_to = Formula::not(to.clone());
    // λh. DNE (λk. k (inl (∀x. case (h x) of a ⇒ a | r ⇒ botE a (k (inr r)))))
    let per_x = Proof::or_elim(
        Proof::all_elim(Term::var(x), Proof::hyp(h.clone(), from.clone())),
        ha.clone(),
        Proof::hyp(ha, a.clone()),
        hr.clone(),
        Proof::bot_elim(
            a.clone(),
            Proof::imp_elim(
                Proof::hyp(k.clone(), not_to.clone()),
                Proof::or_intro1(Formula::all(x, a.clone()), Proof::hyp(hr, r.clone())),
            ),
        ),
    );
    Proof::imp_intro(
        h.clone(),
        from,
        Proof::dne(Proof::imp_intro(
            k.clone(),
            not_to.clone(),
            Proof::imp_elim(
                Proof::hyp(k, not_to.clone()),
                Proof::or_intro0(Proof::all_intro(x, per_x), r.clone()),
            ),
        )),
    )
}

fn shift_ex_or_fwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::or(Formula::ex(x, a.clone()), r.clone());
    let to = Formula::ex(x, Formula::or(a.clone(), r.clone()));
    let h = g.fresh("h");
    let c = g.fresh("h");
    let hr = g.fresh("h");
    let w = g.fresh("h");
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::or_elim(
            Proof::hyp(h, from.clone()),
            c.clone(),
            Proof::ex_elim(
                Proof::hyp(c, Formula::ex(x, a.clone())),
                x,
                w.clone(),
                Proof::ex_intro(
                    to.clone(),
                    Term::var(x),
                    Proof::or_intro0(Proof::hyp(w, a.clone()), r.clone()),
                ),
            ),
            hr.clone(),
            Proof::ex_intro(
                to.clone(),
                Term::zero(),
                Proof::or_intro1(
                    a.substitute(x, &Term::zero()),
                    Proof::hyp(hr, r.clone()),
                ),
            ),
        ),
    )
}

fn shift_ex_or_bwd(x: &str, a: &Formula, r: &Formula, g: &mut Names) -> Proof {
    let from = Formula::ex(x, Formula::or(a.clone(), r.clone()));
    let h = g.fresh("h");
    let w = g.fresh("h");
    let ha = g.fresh("h");
    let hr = g.fresh("h");
    let disj = Formula::or(a.clone(), r.clone());
    Proof::imp_intro(
        h.clone(),
        from.clone(),
        Proof::ex_elim(
            Proof::hyp(h, from.clone()),
            x,
            w.clone(),
            Proof::or_elim(
                Proof::hyp(w, disj.clone()),
                ha.clone(),
                Proof::or_intro0(
                    Proof::ex_intro(Formula::ex(x, a.clone()), Term::var(x), Proof::hyp(ha, a.clone())),
                    r.clone(),
                ),
                hr.clone(),
                Proof::or_intro1(Formula::ex(x, a.clone()), Proof::hyp(hr, r.clone())),
            ),
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check, LogicMode, Theory};
    use crate::logic::Signature;
    use crate::oracle::battery;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn is_prenex(phi: &Formula) -> bool {
        fn matrix_qf(f: &Formula) -> bool {
            match f {
                Formula::All(_, b) | Formula::Ex(_, b) => matrix_qf(b),
                other => other.is_quantifier_free(),
            }
        }
        matrix_qf(phi)
    }

    fn assert_prenex_ok(phi: &Formula) {
        let r = prenex(phi).unwrap();
        assert!(is_prenex(&r.formula), "not prenex: {}", r.formula);
        let theory = Theory::pure(&sig());
        let j = check(&r.equivalence, LogicMode::Classical, &theory).unwrap();
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, Formula::iff(phi.clone(), r.formula.clone()));
        // semantic double-check on the battery
        for m in battery(&sig()) {
            let fv = phi.free_vars();
            assert!(fv.is_empty(), "test formulas must be closed");
            assert_eq!(
                m.eval_closed(phi).unwrap(),
                m.eval_closed(&r.formula).unwrap(),
                "prenex changed truth value on a finite model"
            );
        }
    }

    #[test]
    fn conjunction_of_quantifiers() {
        // ∀x A(x) ∧ ∃y B(y) ↦ ∀x ∃y (A(x) ∧ B(y))
        let phi = Formula::and(
            Formula::all("x", Formula::atom("A", vec![Term::var("x")])),
            Formula::ex("y", Formula::atom("B", vec![Term::var("y")])),
        );
        let r = prenex(&phi).unwrap();
        assert_eq!(
            r.formula,
            Formula::all(
                "x",
                Formula::ex(
                    "y",
                    Formula::and(
                        Formula::atom("A", vec![Term::var("x")]),
                        Formula::atom("B", vec![Term::var("y")]),
                    ),
                ),
            )
        );
        assert_prenex_ok(&phi);
    }

    #[test]
    fn already_prenex_unchanged() {
        let phi = Formula::all(
            "x",
            Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")])),
        );
        let r = prenex(&phi).unwrap();
        assert_eq!(r.formula, phi);
        assert_prenex_ok(&phi);
    }

    #[test]
    fn disjunction_of_existentials() {
        // ∃x A(x) ∨ ∃y B(y) ↦ ∃x ∃y (A(x) ∨ B(y))
        let phi = Formula::or(
            Formula::ex("x", Formula::atom("A", vec![Term::var("x")])),
            Formula::ex("y", Formula::atom("B", vec![Term::var("y")])),
        );
        let r = prenex(&phi).unwrap();
        assert_eq!(
            r.formula,
            Formula::ex(
                "x",
                Formula::ex(
                    "y",
                    Formula::or(
                        Formula::atom("A", vec![Term::var("x")]),
                        Formula::atom("B", vec![Term::var("y")]),
                    ),
                ),
            )
        );
        assert_prenex_ok(&phi);
    }

    #[test]
    fn classical_shift_forall_out_of_or() {
        let phi = Formula::or(
            Formula::atom("p", vec![]),
            Formula::all("x", Formula::atom("A", vec![Term::var("x")])),
        );
        assert_prenex_ok(&phi);
    }

    #[test]
    fn variable_clash_renamed() {
        // ∀x A(x) ∧ ∃x B(x): the second binder must stay distinct
        let phi = Formula::and(
            Formula::all("x", Formula::atom("A", vec![Term::var("x")])),
            Formula::ex("x", Formula::atom("B", vec![Term::var("x")])),
        );
        assert_prenex_ok(&phi);
    }

    #[test]
    fn rejects_implications() {
        let phi = Formula::imp(Formula::atom("p", vec![]), Formula::atom("q", vec![]));
        assert!(prenex(&phi).is_err());
    }
}
