//! Arithmetic axiom schemas.
//!
//! Axiom leaves carry the schema name and its parameters; the theory
//! constructs the instance formula from them, so checking never has to match
//! a formula against a template. Instances are closed under substitution of
//! terms by construction.
//!
//! The schema set is the axiom basis of Heyting arithmetic over our
//! complemented-atom language: successor axioms, defining equations of the
//! registered primitive recursive symbols, equality schemas, induction, and
//! the decidability package for atoms (stability `¬¬θ → θ`, excluded middle
//! `θ ∨ θ̄`, and the two complement bridges). Peano arithmetic is the same
//! axiom set checked in classical mode; the minimal-logic variant is the
//! same set checked in minimal mode.

use crate::logic::{complement_atom, Formula, Signature, Term};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AxiomError {
    #[error("schema `{0}` is not part of the theory")]
    UnknownSchema(String),
    #[error("no defining equation named `{0}`")]
    UnknownDefEq(String),
    #[error("defining equation `{name}` expects {expected} parameters, got {got}")]
    DefEqArity { name: String, expected: usize, got: usize },
    #[error("schema `{schema}` requires an atomic formula, got `{got}`")]
    NotAtomic { schema: &'static str, got: String },
    #[error("schema `dec` requires a decidable relation, got `{0}`")]
    NotDecidable(String),
    #[error("ill-formed parameter: {0}")]
    IllFormed(String),
}

/// One instance of an axiom schema, given by its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum AxiomInstance {
    /// `t = t`
    EqRefl(Term),
    /// `s = t → t = s`
    EqSym(Term, Term),
    /// `s = t → t = u → s = u`
    EqTrans(Term, Term, Term),
    /// `s = t → φ[x:=s] → φ[x:=t]`
    EqSubst { var: String, formula: Formula, from: Term, to: Term },
    /// `S(t) != 0`
    SuccNonzero(Term),
    /// `S(s) = S(t) → s = t`
    SuccInj(Term, Term),
    /// A defining equation of a registered function symbol.
    DefEq { name: String, args: Vec<Term> },
    /// `φ[x:=0] ∧ ∀x (φ → φ[x:=S x]) → ∀x φ`
    Induction { var: String, formula: Formula },
    /// `¬¬θ → θ` for atomic θ.
    AtomStability(Formula),
    /// `θ ∨ θ̄` for decidable atomic θ.
    Decidable(Formula),
    /// `¬θ → θ̄`
    ComplIntro(Formula),
    /// `θ̄ → ¬θ`
    ComplElim(Formula),
}

impl AxiomInstance {
    pub fn schema_name(&self) -> &'static str {
        match self {
            AxiomInstance::EqRefl(_) => "eq-refl",
            AxiomInstance::EqSym(..) => "eq-sym",
            AxiomInstance::EqTrans(..) => "eq-trans",
            AxiomInstance::EqSubst { .. } => "eq-subst",
            AxiomInstance::SuccNonzero(_) => "succ-nonzero",
            AxiomInstance::SuccInj(..) => "succ-inj",
            AxiomInstance::DefEq { .. } => "defeq",
            AxiomInstance::Induction { .. } => "ind",
            AxiomInstance::AtomStability(_) => "stab",
            AxiomInstance::Decidable(_) => "dec",
            AxiomInstance::ComplIntro(_) => "compl-i",
            AxiomInstance::ComplElim(_) => "compl-e",
        }
    }

    pub fn substitute(&self, x: &str, t: &Term) -> AxiomInstance {
        match self {
            AxiomInstance::EqRefl(a) => AxiomInstance::EqRefl(a.substitute(x, t)),
            AxiomInstance::EqSym(a, b) => {
                AxiomInstance::EqSym(a.substitute(x, t), b.substitute(x, t))
            }
            AxiomInstance::EqTrans(a, b, c) => AxiomInstance::EqTrans(
                a.substitute(x, t),
                b.substitute(x, t),
                c.substitute(x, t),
            ),
            AxiomInstance::EqSubst { var, formula, from, to } => {
                if var == x {
                    AxiomInstance::EqSubst {
                        var: var.clone(),
                        formula: formula.clone(),
                        from: from.substitute(x, t),
                        to: to.substitute(x, t),
                    }
                } else {
                    // keep the template variable out of the way
                    let formula = formula.substitute(x, t);
                    AxiomInstance::EqSubst {
                        var: var.clone(),
                        formula,
                        from: from.substitute(x, t),
                        to: to.substitute(x, t),
                    }
                }
            }
            AxiomInstance::SuccNonzero(a) => AxiomInstance::SuccNonzero(a.substitute(x, t)),
            AxiomInstance::SuccInj(a, b) => {
                AxiomInstance::SuccInj(a.substitute(x, t), b.substitute(x, t))
            }
            AxiomInstance::DefEq { name, args } => AxiomInstance::DefEq {
                name: name.clone(),
                args: args.iter().map(|a| a.substitute(x, t)).collect(),
            },
            AxiomInstance::Induction { var, formula } => {
                if var == x {
                    self.clone()
                } else {
                    AxiomInstance::Induction {
                        var: var.clone(),
                        formula: formula.substitute(x, t),
                    }
                }
            }
            AxiomInstance::AtomStability(f) => AxiomInstance::AtomStability(f.substitute(x, t)),
            AxiomInstance::Decidable(f) => AxiomInstance::Decidable(f.substitute(x, t)),
            AxiomInstance::ComplIntro(f) => AxiomInstance::ComplIntro(f.substitute(x, t)),
            AxiomInstance::ComplElim(f) => AxiomInstance::ComplElim(f.substitute(x, t)),
        }
    }

    pub(crate) fn vars_mentioned(&self, out: &mut BTreeSet<String>) {
        match self {
            AxiomInstance::EqRefl(a) | AxiomInstance::SuccNonzero(a) => {
                out.extend(a.free_vars())
            }
            AxiomInstance::EqSym(a, b) | AxiomInstance::SuccInj(a, b) => {
                out.extend(a.free_vars());
                out.extend(b.free_vars());
            }
            AxiomInstance::EqTrans(a, b, c) => {
                out.extend(a.free_vars());
                out.extend(b.free_vars());
                out.extend(c.free_vars());
            }
            AxiomInstance::EqSubst { var, formula, from, to } => {
                out.extend(formula.free_vars());
                out.insert(var.clone());
                out.extend(from.free_vars());
                out.extend(to.free_vars());
            }
            AxiomInstance::DefEq { args, .. } => {
                args.iter().for_each(|a| out.extend(a.free_vars()))
            }
            AxiomInstance::Induction { var, formula } => {
                out.extend(formula.free_vars());
                out.insert(var.clone());
            }
            AxiomInstance::AtomStability(f)
            | AxiomInstance::Decidable(f)
            | AxiomInstance::ComplIntro(f)
            | AxiomInstance::ComplElim(f) => out.extend(f.free_vars()),
        }
    }
}

/// A named defining equation `lhs = rhs` parameterized by variables.
#[derive(Debug, Clone)]
pub struct DefEqTemplate {
    pub name: String,
    pub params: Vec<String>,
    pub lhs: Term,
    pub rhs: Term,
}

impl DefEqTemplate {
    fn instantiate(&self, args: &[Term]) -> Result<Formula, AxiomError> {
        if args.len() != self.params.len() {
            return Err(AxiomError::DefEqArity {
                name: self.name.clone(),
                expected: self.params.len(),
                got: args.len(),
            });
        }
        let mut lhs = self.lhs.clone();
        let mut rhs = self.rhs.clone();
        for (p, a) in self.params.iter().zip(args) {
            lhs = lhs.substitute(p, a);
            rhs = rhs.substitute(p, a);
        }
        Ok(Formula::eq(lhs, rhs))
    }
}

/// An axiom basis over a signature: which schemas are admitted and which
/// defining equations exist.
#[derive(Debug, Clone)]
pub struct Theory {
    pub name: String,
    sig: Signature,
    schemas: BTreeSet<&'static str>,
    defeqs: BTreeMap<String, DefEqTemplate>,
}

const ALL_SCHEMAS: &[&str] = &[
    "eq-refl",
    "eq-sym",
    "eq-trans",
    "eq-subst",
    "succ-nonzero",
    "succ-inj",
    "defeq",
    "ind",
    "stab",
    "dec",
    "compl-i",
    "compl-e",
];

impl Theory {
    /// The empty theory: pure logic, no axiom leaves admitted.
    pub fn pure(sig: &Signature) -> Theory {
        Theory {
            name: "pure".into(),
            sig: sig.clone(),
            schemas: BTreeSet::new(),
            defeqs: BTreeMap::new(),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn schema_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.schemas.iter().copied()
    }

    pub fn defeq_templates(&self) -> impl Iterator<Item = &DefEqTemplate> {
        self.defeqs.values()
    }

    pub fn register_defeq(&mut self, template: DefEqTemplate) {
        self.defeqs.insert(template.name.clone(), template);
    }

    /// Construct the instance formula for an axiom leaf, or reject it.
    pub fn instantiate(&self, inst: &AxiomInstance) -> Result<Formula, AxiomError> {
        if !self.schemas.contains(inst.schema_name()) {
            return Err(AxiomError::UnknownSchema(inst.schema_name().to_string()));
        }
        let atomic = |schema: &'static str, f: &Formula| -> Result<(), AxiomError> {
            if f.is_atomic() {
                Ok(())
            } else {
                Err(AxiomError::NotAtomic { schema, got: f.to_string() })
            }
        };
        match inst {
            AxiomInstance::EqRefl(t) => Ok(Formula::eq(t.clone(), t.clone())),
            AxiomInstance::EqSym(s, t) => Ok(Formula::imp(
                Formula::eq(s.clone(), t.clone()),
                Formula::eq(t.clone(), s.clone()),
            )),
            AxiomInstance::EqTrans(s, t, u) => Ok(Formula::imp(
                Formula::eq(s.clone(), t.clone()),
                Formula::imp(
                    Formula::eq(t.clone(), u.clone()),
                    Formula::eq(s.clone(), u.clone()),
                ),
            )),
            AxiomInstance::EqSubst { var, formula, from, to } => Ok(Formula::imp(
                Formula::eq(from.clone(), to.clone()),
                Formula::imp(formula.substitute(var, from), formula.substitute(var, to)),
            )),
            AxiomInstance::SuccNonzero(t) => {
                Ok(Formula::negatom("=", vec![Term::succ(t.clone()), Term::zero()]))
            }
            AxiomInstance::SuccInj(s, t) => Ok(Formula::imp(
                Formula::eq(Term::succ(s.clone()), Term::succ(t.clone())),
                Formula::eq(s.clone(), t.clone()),
            )),
            AxiomInstance::DefEq { name, args } => self
                .defeqs
                .get(name)
                .ok_or_else(|| AxiomError::UnknownDefEq(name.clone()))?
                .instantiate(args),
            AxiomInstance::Induction { var, formula } => {
                let base = formula.substitute(var, &Term::zero());
                let step = Formula::all(
                    var.clone(),
                    Formula::imp(
                        formula.clone(),
                        formula.substitute(var, &Term::succ(Term::var(var.clone()))),
                    ),
                );
                Ok(Formula::imp(
                    Formula::and(base, step),
                    Formula::all(var.clone(), formula.clone()),
                ))
            }
            AxiomInstance::AtomStability(theta) => {
                atomic("stab", theta)?;
                Ok(Formula::imp(
                    Formula::not(Formula::not(theta.clone())),
                    theta.clone(),
                ))
            }
            AxiomInstance::Decidable(theta) => {
                atomic("dec", theta)?;
                let rel = match theta {
                    Formula::Atom(r, _) | Formula::NegAtom(r, _) => r.clone(),
                    _ => unreachable!(),
                };
                let info = self
                    .sig
                    .rel_info(&rel)
                    .map_err(|e| AxiomError::IllFormed(e.to_string()))?;
                if !info.decidable {
                    return Err(AxiomError::NotDecidable(rel));
                }
                let comp = complement_atom(&self.sig, theta)
                    .map_err(|e| AxiomError::IllFormed(e.to_string()))?;
                Ok(Formula::or(theta.clone(), comp))
            }
            AxiomInstance::ComplIntro(theta) => {
                atomic("compl-i", theta)?;
                let comp = complement_atom(&self.sig, theta)
                    .map_err(|e| AxiomError::IllFormed(e.to_string()))?;
                Ok(Formula::imp(Formula::not(theta.clone()), comp))
            }
            AxiomInstance::ComplElim(theta) => {
                atomic("compl-e", theta)?;
                let comp = complement_atom(&self.sig, theta)
                    .map_err(|e| AxiomError::IllFormed(e.to_string()))?;
                Ok(Formula::imp(comp, Formula::not(theta.clone())))
            }
        }
    }
}

/// The axiom basis of Heyting arithmetic over the given signature: all
/// schemas plus the defining equations of `+` and `*`.
///
/// Checked in classical mode this is Peano arithmetic; checked in minimal
/// mode it is the minimal-logic variant used as the target of the proof
/// translations (atom stability and the complement bridges are kept as
/// axioms there).
pub fn ha_axioms(sig: &Signature) -> Theory {
    let mut t = Theory {
        name: "ha".into(),
        sig: sig.clone(),
        schemas: ALL_SCHEMAS.iter().copied().collect(),
        defeqs: BTreeMap::new(),
    };
    let x = || Term::var("a");
    let y = || Term::var("b");
    t.register_defeq(DefEqTemplate {
        name: "plus-0".into(),
        params: vec!["a".into()],
        lhs: Term::app("+", vec![x(), Term::zero()]),
        rhs: x(),
    });
    t.register_defeq(DefEqTemplate {
        name: "plus-s".into(),
        params: vec!["a".into(), "b".into()],
        lhs: Term::app("+", vec![x(), Term::succ(y())]),
        rhs: Term::succ(Term::app("+", vec![x(), y()])),
    });
    t.register_defeq(DefEqTemplate {
        name: "times-0".into(),
        params: vec!["a".into()],
        lhs: Term::app("*", vec![x(), Term::zero()]),
        rhs: Term::zero(),
    });
    t.register_defeq(DefEqTemplate {
        name: "times-s".into(),
        params: vec!["a".into(), "b".into()],
        lhs: Term::app("*", vec![x(), Term::succ(y())]),
        rhs: Term::app("+", vec![Term::app("*", vec![x(), y()]), x()]),
    });
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{battery, std_eval_qf};
    use std::collections::BTreeMap as Env;

    fn theory() -> Theory {
        ha_axioms(&Signature::arith_with_test_relations())
    }

    #[test]
    fn induction_instance_for_reflexivity() {
        let inst = AxiomInstance::Induction {
            var: "x".into(),
            formula: Formula::eq(Term::var("x"), Term::var("x")),
        };
        let f = theory().instantiate(&inst).unwrap();
        // the whole instance is classically valid on the battery
        for m in battery(&Signature::arith_with_test_relations()) {
            assert!(m.eval_closed(&f).unwrap());
        }
    }

    #[test]
    fn plus_equations_hold_on_numerals() {
        let t = theory();
        for a in 0..=5u64 {
            let f = t
                .instantiate(&AxiomInstance::DefEq {
                    name: "plus-0".into(),
                    args: vec![Term::numeral(a)],
                })
                .unwrap();
            assert!(std_eval_qf(&f, &Env::new()).unwrap());
            for b in 0..5u64 {
                let f = t
                    .instantiate(&AxiomInstance::DefEq {
                        name: "plus-s".into(),
                        args: vec![Term::numeral(a), Term::numeral(b)],
                    })
                    .unwrap();
                assert!(std_eval_qf(&f, &Env::new()).unwrap());
            }
        }
    }

    #[test]
    fn atom_stability_shape() {
        let theta = Formula::eq(Term::var("s"), Term::var("t"));
        let f = theory().instantiate(&AxiomInstance::AtomStability(theta.clone())).unwrap();
        assert_eq!(f, Formula::imp(Formula::not(Formula::not(theta.clone())), theta));
    }

    #[test]
    fn stability_rejects_compound() {
        let phi = Formula::and(
            Formula::eq(Term::zero(), Term::zero()),
            Formula::eq(Term::zero(), Term::zero()),
        );
        assert!(matches!(
            theory().instantiate(&AxiomInstance::AtomStability(phi)),
            Err(AxiomError::NotAtomic { .. })
        ));
    }

    #[test]
    fn dec_requires_decidable_relation() {
        let undecidable = Formula::atom("A", vec![Term::zero()]);
        assert!(matches!(
            theory().instantiate(&AxiomInstance::Decidable(undecidable)),
            Err(AxiomError::NotDecidable(_))
        ));
        let ok = Formula::eq(Term::var("x"), Term::zero());
        let f = theory().instantiate(&AxiomInstance::Decidable(ok.clone())).unwrap();
        assert_eq!(
            f,
            Formula::or(ok, Formula::negatom("=", vec![Term::var("x"), Term::zero()]))
        );
    }

    #[test]
    fn pure_theory_rejects_axioms() {
        let pure = Theory::pure(&Signature::arith());
        assert!(matches!(
            pure.instantiate(&AxiomInstance::EqRefl(Term::zero())),
            Err(AxiomError::UnknownSchema(_))
        ));
    }

    #[test]
    fn instances_closed_under_substitution() {
        let t = theory();
        let inst = AxiomInstance::EqSym(Term::var("u"), Term::succ(Term::var("v")));
        let f1 = t.instantiate(&inst.substitute("u", &Term::numeral(2))).unwrap();
        let f2 = t.instantiate(&inst).unwrap().substitute("u", &Term::numeral(2));
        assert_eq!(f1, f2);
    }
}
