//! Negation-normal form and the classical negation operator `∼`.
//!
//! An [`Nnf`] formula is built from atoms and complemented atoms with `∧`,
//! `∨`, `∀`, `∃` only. `⊥` can survive as the whole formula when the
//! simplifier collapses everything (the empty-disjunction reading); it never
//! occurs strictly inside an NNF output.

use super::{Formula, Signature, SignatureError, Term};
use std::fmt;

/// A formula in negation-normal form. Constructed by [`to_nnf`] or validated
/// via [`Nnf::try_new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nnf(Formula);

impl Nnf {
    pub fn try_new(phi: Formula) -> Result<Nnf, NnfError> {
        check_nnf(&phi, true)?;
        Ok(Nnf(phi))
    }

    pub fn formula(&self) -> &Formula {
        &self.0
    }

    pub fn into_formula(self) -> Formula {
        self.0
    }

    pub fn is_bot(&self) -> bool {
        matches!(self.0, Formula::Bot)
    }
}

impl AsRef<Formula> for Nnf {
    fn as_ref(&self) -> &Formula {
        &self.0
    }
}

impl fmt::Display for Nnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum NnfError {
    #[error("formula is not in negation-normal form: contains {0}")]
    NotNnf(&'static str),
}

fn check_nnf(phi: &Formula, top: bool) -> Result<(), NnfError> {
    match phi {
        Formula::Bot => {
            if top {
                Ok(())
            } else {
                Err(NnfError::NotNnf("inner bottom"))
            }
        }
        Formula::Atom(..) | Formula::NegAtom(..) => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) => {
            check_nnf(a, false)?;
            check_nnf(b, false)
        }
        Formula::Imp(..) => Err(NnfError::NotNnf("implication")),
        Formula::All(_, body) | Formula::Ex(_, body) => check_nnf(body, false),
    }
}

/// The `∼` operator: exchanges `∧` with `∨`, `∀` with `∃`, and atoms with
/// their complements. `∼∼φ = φ` syntactically on strict NNF.
///
/// On the degenerate whole-formula `⊥`, `∼⊥` is the true atom `0 = 0`
/// (equality is always present in the signature); the involution does not
/// extend to that corner.
pub fn neg(phi: &Nnf) -> Nnf {
    Nnf(neg_raw(&phi.0))
}

pub(crate) fn neg_raw(phi: &Formula) -> Formula {
    match phi {
        Formula::Bot => Formula::eq(Term::zero(), Term::zero()),
        Formula::Atom(r, args) => Formula::NegAtom(r.clone(), args.clone()),
        Formula::NegAtom(r, args) => Formula::Atom(r.clone(), args.clone()),
        Formula::And(a, b) => Formula::or(neg_raw(a), neg_raw(b)),
        Formula::Or(a, b) => Formula::and(neg_raw(a), neg_raw(b)),
        Formula::All(x, body) => Formula::Ex(x.clone(), Box::new(neg_raw(body))),
        Formula::Ex(x, body) => Formula::All(x.clone(), Box::new(neg_raw(body))),
        Formula::Imp(..) => unreachable!("neg_raw applied to non-NNF formula"),
    }
}

/// Negation-normal form of an arbitrary formula.
///
/// Implications become `∼θ ∨ η`; the rewrites `θ ∨ ⊥ ⇝ θ` and `θ ∧ ⊥ ⇝ ⊥`
/// are applied bottom-up, together with their degenerate quantifier cases
/// `∀x ⊥ ⇝ ⊥`, `∃x ⊥ ⇝ ⊥` (sound over the nonempty domains evaluated here).
pub fn to_nnf(sig: &Signature, phi: &Formula) -> Result<Nnf, SignatureError> {
    sig.check_formula(phi)?;
    Ok(Nnf(nnf_raw(sig, phi)))
}

fn nnf_raw(sig: &Signature, phi: &Formula) -> Formula {
    match phi {
        Formula::Bot => Formula::Bot,
        Formula::Atom(..) | Formula::NegAtom(..) => phi.clone(),
        Formula::And(a, b) => simp_and(nnf_raw(sig, a), nnf_raw(sig, b)),
        Formula::Or(a, b) => simp_or(nnf_raw(sig, a), nnf_raw(sig, b)),
        Formula::Imp(a, b) => {
            let lhs = nnf_raw(sig, a);
            simp_or(neg_raw(&lhs), nnf_raw(sig, b))
        }
        Formula::All(x, body) => match nnf_raw(sig, body) {
            Formula::Bot => Formula::Bot,
            inner => Formula::All(x.clone(), Box::new(inner)),
        },
        Formula::Ex(x, body) => match nnf_raw(sig, body) {
            Formula::Bot => Formula::Bot,
            inner => Formula::Ex(x.clone(), Box::new(inner)),
        },
    }
}

fn simp_or(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Bot, b) => b,
        (a, Formula::Bot) => a,
        (a, b) => Formula::or(a, b),
    }
}

fn simp_and(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Bot, _) | (_, Formula::Bot) => Formula::Bot,
        (a, b) => Formula::and(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Signature;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn atom(r: &str) -> Formula {
        Formula::atom(r, vec![])
    }

    #[test]
    fn implication_becomes_disjunction() {
        // A -> B  becomes  ~A v B
        let phi = Formula::imp(atom("p"), atom("q"));
        let got = to_nnf(&sig(), &phi).unwrap();
        assert_eq!(got.formula(), &Formula::or(Formula::negatom("p", vec![]), atom("q")));
    }

    #[test]
    fn negated_conjunction_simplifies() {
        // not (A ∧ B) = (A ∧ B) -> bot; the ∨⊥ rewrite fires
        let phi = Formula::not(Formula::and(atom("p"), atom("q")));
        let got = to_nnf(&sig(), &phi).unwrap();
        assert_eq!(
            got.formula(),
            &Formula::or(Formula::negatom("p", vec![]), Formula::negatom("q", vec![]))
        );
    }

    #[test]
    fn atom_unchanged() {
        let phi = atom("p");
        assert_eq!(to_nnf(&sig(), &phi).unwrap().formula(), &phi);
    }

    #[test]
    fn neg_exchanges_everything() {
        // forall x (A(x) v B)  ~->  exists x (A~(x) ∧ B~)
        let phi = Formula::all(
            "x",
            Formula::or(Formula::atom("A", vec![Term::var("x")]), atom("q")),
        );
        let n = to_nnf(&sig(), &phi).unwrap();
        let got = neg(&n);
        let want = Formula::ex(
            "x",
            Formula::and(
                Formula::negatom("A", vec![Term::var("x")]),
                Formula::negatom("q", vec![]),
            ),
        );
        assert_eq!(got.formula(), &want);
    }

    #[test]
    fn neg_is_involution() {
        let phi = Formula::all(
            "x",
            Formula::or(
                Formula::atom("A", vec![Term::var("x")]),
                Formula::ex("y", Formula::negatom("R", vec![Term::var("x"), Term::var("y")])),
            ),
        );
        let n = Nnf::try_new(phi).unwrap();
        assert_eq!(neg(&neg(&n)), n);
    }

    #[test]
    fn idempotent_on_own_output() {
        let phi = Formula::imp(
            Formula::not(atom("p")),
            Formula::and(atom("q"), Formula::not(Formula::not(atom("r")))),
        );
        let once = to_nnf(&sig(), &phi).unwrap();
        let twice = to_nnf(&sig(), once.formula()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn bot_collapses_under_quantifier() {
        let phi = Formula::all("x", Formula::and(atom("p"), Formula::Bot));
        assert!(to_nnf(&sig(), &phi).unwrap().is_bot());
    }

    #[test]
    fn unknown_symbol_is_signature_error() {
        let phi = Formula::atom("Zap", vec![]);
        assert!(to_nnf(&sig(), &phi).is_err());
    }
}
