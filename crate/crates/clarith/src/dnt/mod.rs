//! Double-negation translations.
//!
//! Five translations of classical formulas into (nearly) negative form:
//! the Gödel-Gentzen translation `N`, the Kuroda translation, the Krivine
//! translation (with its visible preprocessing pass), the `M` translation on
//! negation-normal formulas, and the one-negation `awk` translation
//! `φ ↦ ¬(∼φ)`. Alongside the formula maps, [`translate_proof`] rewrites
//! checked classical derivations into minimal-logic derivations of the
//! `N`-image, and [`synth_equiv`] synthesizes kernel-checked equivalence
//! proofs between the translations.

mod equiv;
mod translate;

pub use equiv::{synth_equiv, EquivProof};
pub use translate::translate_proof;

use crate::logic::{neg, neg_raw, Formula, Nnf};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationName {
    N,
    Kuroda,
    Krivine,
    M,
    Awk,
}

impl std::str::FromStr for TranslationName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "n" => Ok(TranslationName::N),
            "kuroda" => Ok(TranslationName::Kuroda),
            "krivine" => Ok(TranslationName::Krivine),
            "m" => Ok(TranslationName::M),
            "awk" => Ok(TranslationName::Awk),
            other => {
                Err(format!("unknown translation `{other}` (expected n, kuroda, krivine, m, awk)"))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DntOptions {
    /// Apply the strengthened atom clauses of the Gödel-Gentzen translation
    /// (`θ^N := θ`, `(¬θ)^N := θ̄`). Off by default; the equivalence and
    /// proof-translation machinery always targets the literal translation.
    pub strengthened: bool,
    /// Use the alternative `M` conjunction clause
    /// `(φ∧ψ)_M := ¬((∼φ)_M ∨ (∼ψ)_M)`.
    pub m_conj_variant: bool,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DntError {
    #[error("translation `{0}` requires a negation-normal input")]
    NeedsNnf(String),
    #[error("proof translation requires a classically checked proof: {0}")]
    SourceCheck(String),
    #[error("lemma synthesis failed: {0}")]
    Lemma(String),
}

/// Gödel-Gentzen translation `φ ↦ φ^N`.
pub fn godel_gentzen(phi: &Formula, strengthened: bool) -> Formula {
    match phi {
        Formula::Bot => Formula::Bot,
        Formula::Atom(..) | Formula::NegAtom(..) => {
            if strengthened {
                phi.clone()
            } else {
                Formula::not(Formula::not(phi.clone()))
            }
        }
        Formula::Imp(a, b) => {
            // strengthened clause for negated atoms: (¬θ)^N := θ̄
            if strengthened && matches!(**b, Formula::Bot) && a.is_atomic() {
                return flip_atom(a);
            }
            Formula::imp(godel_gentzen(a, strengthened), godel_gentzen(b, strengthened))
        }
        Formula::And(a, b) => {
            Formula::and(godel_gentzen(a, strengthened), godel_gentzen(b, strengthened))
        }
        Formula::Or(a, b) => Formula::not(Formula::and(
            Formula::not(godel_gentzen(a, strengthened)),
            Formula::not(godel_gentzen(b, strengthened)),
        )),
        Formula::All(x, body) => {
            Formula::All(x.clone(), Box::new(godel_gentzen(body, strengthened)))
        }
        Formula::Ex(x, body) => Formula::not(Formula::all(
            x.clone(),
            Formula::not(godel_gentzen(body, strengthened)),
        )),
    }
}

fn flip_atom(theta: &Formula) -> Formula {
    match theta {
        Formula::Atom(r, args) => Formula::NegAtom(r.clone(), args.clone()),
        Formula::NegAtom(r, args) => Formula::Atom(r.clone(), args.clone()),
        _ => unreachable!("flip_atom on non-atomic formula"),
    }
}

/// Kuroda translation: doubly negate atoms, insert `¬¬` after every `∀`,
/// and prefix the whole formula with `¬¬`.
pub fn kuroda(phi: &Formula) -> Formula {
    Formula::not(Formula::not(kuroda_core(phi)))
}

pub(crate) fn kuroda_core(phi: &Formula) -> Formula {
    match phi {
        Formula::Bot => Formula::Bot,
        Formula::Atom(..) | Formula::NegAtom(..) => Formula::not(Formula::not(phi.clone())),
        Formula::And(a, b) => Formula::and(kuroda_core(a), kuroda_core(b)),
        Formula::Or(a, b) => Formula::or(kuroda_core(a), kuroda_core(b)),
        Formula::Imp(a, b) => Formula::imp(kuroda_core(a), kuroda_core(b)),
        Formula::All(x, body) => {
            Formula::All(x.clone(), Box::new(Formula::not(Formula::not(kuroda_core(body)))))
        }
        Formula::Ex(x, body) => Formula::Ex(x.clone(), Box::new(kuroda_core(body))),
    }
}

/// The preprocessing pass for the Krivine translation: rewrites `∃x ψ` to
/// `¬∀x ¬ψ` and non-negation implications to `¬φ ∨ ψ`, landing in the basis
/// `¬, ∧, ∨, ∀` over atoms (`⊥` is carried as an atom).
pub fn krivine_preprocess(phi: &Formula) -> Formula {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => phi.clone(),
        Formula::And(a, b) => Formula::and(krivine_preprocess(a), krivine_preprocess(b)),
        Formula::Or(a, b) => Formula::or(krivine_preprocess(a), krivine_preprocess(b)),
        Formula::Imp(a, b) => {
            if matches!(**b, Formula::Bot) {
                Formula::not(krivine_preprocess(a))
            } else {
                Formula::or(Formula::not(krivine_preprocess(a)), krivine_preprocess(b))
            }
        }
        Formula::All(x, body) => Formula::All(x.clone(), Box::new(krivine_preprocess(body))),
        Formula::Ex(x, body) => {
            Formula::not(Formula::all(x.clone(), Formula::not(krivine_preprocess(body))))
        }
    }
}

/// Raw Krivine clauses on the basis `¬, ∧, ∨, ∀`: `φ^Kr = ¬φ_Kr`, where
/// `φ_Kr` represents the negation of `φ`. Inputs outside the basis go
/// through [`krivine_preprocess`] first.
pub fn krivine_raw(phi: &Formula) -> Formula {
    Formula::not(krivine_matrix(phi))
}

pub(crate) fn krivine_matrix(phi: &Formula) -> Formula {
    match phi {
        // ⊥ is an ordinary atom for this translation
        Formula::Bot => Formula::not(Formula::Bot),
        Formula::Atom(..) | Formula::NegAtom(..) => Formula::not(phi.clone()),
        Formula::Imp(a, b) if matches!(**b, Formula::Bot) => Formula::not(krivine_matrix(a)),
        Formula::And(a, b) => Formula::or(krivine_matrix(a), krivine_matrix(b)),
        Formula::Or(a, b) => Formula::and(krivine_matrix(a), krivine_matrix(b)),
        Formula::All(x, body) => Formula::Ex(x.clone(), Box::new(krivine_matrix(body))),
        Formula::Imp(..) | Formula::Ex(..) => {
            // outside the basis; normalize and retry
            krivine_matrix(&krivine_preprocess(phi))
        }
    }
}

/// Full Krivine translation: preprocessing followed by the raw clauses.
pub fn krivine(phi: &Formula) -> Formula {
    krivine_raw(&krivine_preprocess(phi))
}

/// The `M` translation on negation-normal formulas: `φ^M = ¬(∼φ)_M`.
pub fn m_translation(phi: &Nnf, conj_variant: bool) -> Formula {
    Formula::not(m_core(neg(phi).formula(), conj_variant))
}

pub(crate) fn m_core(psi: &Formula, conj_variant: bool) -> Formula {
    match psi {
        Formula::Atom(..) | Formula::NegAtom(..) => psi.clone(),
        Formula::Or(a, b) => Formula::or(m_core(a, conj_variant), m_core(b, conj_variant)),
        Formula::And(a, b) => {
            if conj_variant {
                Formula::not(Formula::or(
                    m_core(&neg_raw(a), conj_variant),
                    m_core(&neg_raw(b), conj_variant),
                ))
            } else {
                Formula::and(m_core(a, conj_variant), m_core(b, conj_variant))
            }
        }
        Formula::Ex(x, body) => Formula::Ex(x.clone(), Box::new(m_core(body, conj_variant))),
        Formula::All(x, body) => {
            Formula::not(Formula::ex(x.clone(), m_core(&neg_raw(body), conj_variant)))
        }
        Formula::Bot => Formula::Bot,
        Formula::Imp(..) => unreachable!("m_core applied outside negation-normal form"),
    }
}

/// The awkward translation `φ^awk = ¬(∼φ)` on negation-normal formulas.
pub fn awkward(phi: &Nnf) -> Formula {
    Formula::not(neg(phi).into_formula())
}

/// Apply a translation by name. `M` and `awk` require NNF input.
pub fn translate(
    phi: &Formula,
    name: TranslationName,
    opts: &DntOptions,
) -> Result<Formula, DntError> {
    match name {
        TranslationName::N => Ok(godel_gentzen(phi, opts.strengthened)),
        TranslationName::Kuroda => Ok(kuroda(phi)),
        TranslationName::Krivine => Ok(krivine(phi)),
        TranslationName::M => {
            let nnf = Nnf::try_new(phi.clone()).map_err(|_| DntError::NeedsNnf("m".into()))?;
            Ok(m_translation(&nnf, opts.m_conj_variant))
        }
        TranslationName::Awk => {
            let nnf = Nnf::try_new(phi.clone()).map_err(|_| DntError::NeedsNnf("awk".into()))?;
            Ok(awkward(&nnf))
        }
    }
}

/// The syntactic negative-formula check: no `∃` or `∨` anywhere, and every
/// atom occurs under a negation sign.
pub fn is_negative(phi: &Formula) -> bool {
    match phi {
        Formula::Bot => true,
        Formula::Atom(..) | Formula::NegAtom(..) => false,
        Formula::Imp(a, b) => {
            let negated_atom = a.is_atomic() && matches!(**b, Formula::Bot);
            negated_atom || (is_negative(a) && is_negative(b))
        }
        Formula::And(a, b) => is_negative(a) && is_negative(b),
        Formula::All(_, body) => is_negative(body),
        Formula::Or(..) | Formula::Ex(..) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{to_nnf, Signature, Term};
    use crate::oracle::battery;

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn atom(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    #[test]
    fn gg_disjunction_clause() {
        let phi = Formula::or(atom("p"), atom("q"));
        let nn = |f: Formula| Formula::not(Formula::not(f));
        assert_eq!(
            godel_gentzen(&phi, false),
            Formula::not(Formula::and(
                Formula::not(nn(atom("p"))),
                Formula::not(nn(atom("q")))
            ))
        );
    }

    #[test]
    fn gg_existential_clause() {
        let phi = Formula::ex("x", Formula::atom("A", vec![Term::var("x")]));
        let got = godel_gentzen(&phi, false);
        let inner = Formula::not(Formula::not(Formula::atom("A", vec![Term::var("x")])));
        assert_eq!(got, Formula::not(Formula::all("x", Formula::not(inner))));
    }

    #[test]
    fn gg_universal_homomorphic() {
        let phi = Formula::all("x", Formula::atom("A", vec![Term::var("x")]));
        let got = godel_gentzen(&phi, false);
        assert_eq!(
            got,
            Formula::all(
                "x",
                Formula::not(Formula::not(Formula::atom("A", vec![Term::var("x")])))
            )
        );
    }

    #[test]
    fn gg_always_negative() {
        let phi = Formula::imp(
            Formula::or(atom("p"), Formula::ex("x", Formula::atom("A", vec![Term::var("x")]))),
            Formula::and(atom("q"), Formula::Bot),
        );
        assert!(is_negative(&godel_gentzen(&phi, false)));
        assert!(!is_negative(&phi));
    }

    #[test]
    fn gg_strengthened_clauses() {
        assert_eq!(godel_gentzen(&atom("p"), true), atom("p"));
        let notp = Formula::not(atom("p"));
        assert_eq!(godel_gentzen(&notp, true), Formula::negatom("p", vec![]));
    }

    #[test]
    fn kuroda_universal_clause() {
        let a = Formula::atom("A", vec![Term::var("x")]);
        let phi = Formula::all("x", a.clone());
        let nn = |f: Formula| Formula::not(Formula::not(f));
        assert_eq!(kuroda(&phi), nn(Formula::all("x", nn(nn(a)))));
    }

    #[test]
    fn kuroda_atom_clause() {
        let nn = |f: Formula| Formula::not(Formula::not(f));
        assert_eq!(kuroda(&atom("p")), nn(nn(atom("p"))));
    }

    #[test]
    fn kuroda_quantifier_free_is_prefix_only() {
        let phi = Formula::imp(atom("p"), Formula::and(atom("q"), atom("r")));
        let nn = |f: Formula| Formula::not(Formula::not(f));
        assert_eq!(
            kuroda(&phi),
            nn(Formula::imp(nn(atom("p")), Formula::and(nn(atom("q")), nn(atom("r")))))
        );
    }

    #[test]
    fn krivine_clauses() {
        let phi = Formula::and(atom("p"), atom("q"));
        assert_eq!(
            krivine_matrix(&phi),
            Formula::or(Formula::not(atom("p")), Formula::not(atom("q")))
        );
        let phi = Formula::all("x", Formula::atom("A", vec![Term::var("x")]));
        assert_eq!(
            krivine_matrix(&phi),
            Formula::ex("x", Formula::not(Formula::atom("A", vec![Term::var("x")])))
        );
        assert_eq!(krivine_matrix(&atom("p")), Formula::not(atom("p")));
    }

    #[test]
    fn krivine_preprocess_removes_exists() {
        let phi = Formula::ex("x", Formula::atom("A", vec![Term::var("x")]));
        let pre = krivine_preprocess(&phi);
        assert_eq!(
            pre,
            Formula::not(Formula::all(
                "x",
                Formula::not(Formula::atom("A", vec![Term::var("x")]))
            ))
        );
    }

    #[test]
    fn m_translation_clauses() {
        let sig = sig();
        // φ = ∃x A(x): φ^M = ¬¬∃x A(x)
        let phi = Formula::ex("x", Formula::atom("A", vec![Term::var("x")]));
        let nnf = to_nnf(&sig, &phi).unwrap();
        assert_eq!(m_translation(&nnf, false), Formula::not(Formula::not(phi.clone())));
        // atoms are fixed by the core map
        let theta = to_nnf(&sig, &atom("p")).unwrap();
        assert_eq!(m_translation(&theta, false), Formula::not(Formula::negatom("p", vec![])));
        // (∀x φ)_M = ¬∃x (∼φ)_M
        let down =
            to_nnf(&sig, &Formula::all("x", Formula::atom("A", vec![Term::var("x")]))).unwrap();
        assert_eq!(
            m_translation(&down, false),
            Formula::not(Formula::ex("x", Formula::negatom("A", vec![Term::var("x")])))
        );
    }

    #[test]
    fn awkward_is_one_negation() {
        let sig = sig();
        let phi = Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")]));
        let nnf = to_nnf(&sig, &phi).unwrap();
        assert_eq!(
            awkward(&nnf),
            Formula::not(Formula::all(
                "y",
                Formula::negatom("R", vec![Term::var("x"), Term::var("y")])
            ))
        );
        let theta = to_nnf(&sig, &atom("p")).unwrap();
        assert_eq!(awkward(&theta), Formula::not(Formula::negatom("p", vec![])));
    }

    #[test]
    fn classical_transparency_spot_check() {
        let sig = sig();
        let phi = Formula::imp(
            Formula::all("x", Formula::or(Formula::atom("A", vec![Term::var("x")]), atom("q"))),
            Formula::ex("y", Formula::atom("B", vec![Term::var("y")])),
        );
        let nnf = to_nnf(&sig, &phi).unwrap();
        let images = vec![
            godel_gentzen(&phi, false),
            godel_gentzen(&phi, true),
            kuroda(&phi),
            krivine(&phi),
            m_translation(&nnf, false),
            m_translation(&nnf, true),
            awkward(&nnf),
        ];
        for m in battery(&sig) {
            let want = m.eval_closed(&phi).unwrap();
            for img in &images {
                assert_eq!(m.eval_closed(img).unwrap(), want, "image {img}");
            }
        }
    }

    #[test]
    fn negation_counts_ordered() {
        let sig = sig();
        let phi = Formula::all(
            "x",
            Formula::or(
                Formula::atom("A", vec![Term::var("x")]),
                Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")])),
            ),
        );
        let nnf = to_nnf(&sig, &phi).unwrap();
        let m = m_translation(&nnf, false).negation_count();
        let kr = krivine(nnf.formula()).negation_count();
        let n = godel_gentzen(nnf.formula(), false).negation_count();
        assert!(m <= kr && kr <= n, "m={m} kr={kr} n={n}");
    }
}
