//! Checked natural-deduction proofs.
//!
//! A [`Proof`] is an explicit derivation tree; [`check`] validates every
//! node against its rule, the declared [`LogicMode`], and the ambient
//! [`Theory`], and returns the end judgment (open hypotheses and
//! conclusion). There is no proof search: the kernel only checks.
//!
//! Modes are cumulative. Minimal logic has no `⊥`-specific rule;
//! intuitionistic logic adds ex falso; classical logic adds double-negation
//! elimination.

mod axioms;
pub(crate) mod builder;
mod parse;
mod prenex;

pub use axioms::{ha_axioms, AxiomError, AxiomInstance, DefEqTemplate, Theory};
pub use parse::{parse_proof_file, proof_file_to_sexp, proof_from_sexp, proof_to_sexp, ProofFile};
pub use prenex::prenex;

use crate::logic::{Formula, Term};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LogicMode {
    Minimal,
    Intuitionistic,
    Classical,
}

impl fmt::Display for LogicMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicMode::Minimal => write!(f, "minimal"),
            LogicMode::Intuitionistic => write!(f, "intuitionistic"),
            LogicMode::Classical => write!(f, "classical"),
        }
    }
}

impl std::str::FromStr for LogicMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minimal" => Ok(LogicMode::Minimal),
            "intuitionistic" => Ok(LogicMode::Intuitionistic),
            "classical" => Ok(LogicMode::Classical),
            other => Err(format!("unknown logic mode `{other}`")),
        }
    }
}

/// Natural-deduction derivation tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Proof {
    Hyp { label: String, formula: Formula },
    ImpIntro { label: String, antecedent: Formula, body: Box<Proof> },
    ImpElim { fun: Box<Proof>, arg: Box<Proof> },
    AndIntro { left: Box<Proof>, right: Box<Proof> },
    AndElim0 { pair: Box<Proof> },
    AndElim1 { pair: Box<Proof> },
    /// Concludes `body ∨ other`.
    OrIntro0 { body: Box<Proof>, other: Formula },
    /// Concludes `other ∨ body`.
    OrIntro1 { other: Formula, body: Box<Proof> },
    OrElim {
        main: Box<Proof>,
        left_label: String,
        left: Box<Proof>,
        right_label: String,
        right: Box<Proof>,
    },
    AllIntro { var: String, body: Box<Proof> },
    AllElim { term: Term, all: Box<Proof> },
    /// `target` is the existential formula `∃x φ`; the body proves
    /// `φ[x := witness]`.
    ExIntro { target: Formula, witness: Term, body: Box<Proof> },
    ExElim { main: Box<Proof>, eigen: String, label: String, body: Box<Proof> },
    /// Ex falso; intuitionistic and classical modes only.
    BotElim { target: Formula, body: Box<Proof> },
    /// Double-negation elimination; classical mode only.
    Dne { body: Box<Proof> },
    Axiom(AxiomInstance),
}

impl Proof {
    pub fn hyp(label: impl Into<String>, formula: Formula) -> Proof {
        Proof::Hyp { label: label.into(), formula }
    }

    pub fn imp_intro(label: impl Into<String>, antecedent: Formula, body: Proof) -> Proof {
        Proof::ImpIntro { label: label.into(), antecedent, body: Box::new(body) }
    }

    pub fn imp_elim(fun: Proof, arg: Proof) -> Proof {
        Proof::ImpElim { fun: Box::new(fun), arg: Box::new(arg) }
    }

    pub fn and_intro(left: Proof, right: Proof) -> Proof {
        Proof::AndIntro { left: Box::new(left), right: Box::new(right) }
    }

    pub fn and_elim0(pair: Proof) -> Proof {
        Proof::AndElim0 { pair: Box::new(pair) }
    }

    pub fn and_elim1(pair: Proof) -> Proof {
        Proof::AndElim1 { pair: Box::new(pair) }
    }

    pub fn or_intro0(body: Proof, other: Formula) -> Proof {
        Proof::OrIntro0 { body: Box::new(body), other }
    }

    pub fn or_intro1(other: Formula, body: Proof) -> Proof {
        Proof::OrIntro1 { other, body: Box::new(body) }
    }

    pub fn or_elim(
        main: Proof,
        left_label: impl Into<String>,
        left: Proof,
        right_label: impl Into<String>,
        right: Proof,
    ) -> Proof {
        Proof::OrElim {
            main: Box::new(main),
            left_label: left_label.into(),
            left: Box::new(left),
            right_label: right_label.into(),
            right: Box::new(right),
        }
    }

    pub fn all_intro(var: impl Into<String>, body: Proof) -> Proof {
        Proof::AllIntro { var: var.into(), body: Box::new(body) }
    }

    pub fn all_elim(term: Term, all: Proof) -> Proof {
        Proof::AllElim { term, all: Box::new(all) }
    }

    pub fn ex_intro(target: Formula, witness: Term, body: Proof) -> Proof {
        Proof::ExIntro { target, witness, body: Box::new(body) }
    }

    pub fn ex_elim(
        main: Proof,
        eigen: impl Into<String>,
        label: impl Into<String>,
        body: Proof,
    ) -> Proof {
        Proof::ExElim {
            main: Box::new(main),
            eigen: eigen.into(),
            label: label.into(),
            body: Box::new(body),
        }
    }

    pub fn bot_elim(target: Formula, body: Proof) -> Proof {
        Proof::BotElim { target, body: Box::new(body) }
    }

    pub fn dne(body: Proof) -> Proof {
        Proof::Dne { body: Box::new(body) }
    }

    /// Capture-avoiding substitution of a term for a free variable
    /// throughout the derivation. Eigenvariables act as binders for their
    /// subderivations and are renamed when they would capture.
    pub fn substitute(&self, x: &str, t: &Term) -> Proof {
        match self {
            Proof::Hyp { label, formula } => {
                Proof::hyp(label.clone(), formula.substitute(x, t))
            }
            Proof::ImpIntro { label, antecedent, body } => Proof::imp_intro(
                label.clone(),
                antecedent.substitute(x, t),
                body.substitute(x, t),
            ),
            Proof::ImpElim { fun, arg } => {
                Proof::imp_elim(fun.substitute(x, t), arg.substitute(x, t))
            }
            Proof::AndIntro { left, right } => {
                Proof::and_intro(left.substitute(x, t), right.substitute(x, t))
            }
            Proof::AndElim0 { pair } => Proof::and_elim0(pair.substitute(x, t)),
            Proof::AndElim1 { pair } => Proof::and_elim1(pair.substitute(x, t)),
            Proof::OrIntro0 { body, other } => {
                Proof::or_intro0(body.substitute(x, t), other.substitute(x, t))
            }
            Proof::OrIntro1 { other, body } => {
                Proof::or_intro1(other.substitute(x, t), body.substitute(x, t))
            }
            Proof::OrElim { main, left_label, left, right_label, right } => Proof::or_elim(
                main.substitute(x, t),
                left_label.clone(),
                left.substitute(x, t),
                right_label.clone(),
                right.substitute(x, t),
            ),
            Proof::AllIntro { var, body } => {
                let (var, body) = subst_under_eigen(var, body, x, t);
                Proof::AllIntro { var, body: Box::new(body) }
            }
            Proof::AllElim { term, all } => {
                Proof::all_elim(term.substitute(x, t), all.substitute(x, t))
            }
            Proof::ExIntro { target, witness, body } => Proof::ex_intro(
                target.substitute(x, t),
                witness.substitute(x, t),
                body.substitute(x, t),
            ),
            Proof::ExElim { main, eigen, label, body } => {
                let main2 = main.substitute(x, t);
                let (eigen, body) = subst_under_eigen(eigen, body, x, t);
                Proof::ExElim {
                    main: Box::new(main2),
                    eigen,
                    label: label.clone(),
                    body: Box::new(body),
                }
            }
            Proof::BotElim { target, body } => {
                Proof::bot_elim(target.substitute(x, t), body.substitute(x, t))
            }
            Proof::Dne { body } => Proof::dne(body.substitute(x, t)),
            Proof::Axiom(inst) => Proof::Axiom(inst.substitute(x, t)),
        }
    }

    fn vars_mentioned(&self, out: &mut BTreeSet<String>) {
        match self {
            Proof::Hyp { formula, .. } => out.extend(formula.free_vars()),
            Proof::ImpIntro { antecedent, body, .. } => {
                out.extend(antecedent.free_vars());
                body.vars_mentioned(out);
            }
            Proof::ImpElim { fun, arg } => {
                fun.vars_mentioned(out);
                arg.vars_mentioned(out);
            }
            Proof::AndIntro { left, right } => {
                left.vars_mentioned(out);
                right.vars_mentioned(out);
            }
            Proof::AndElim0 { pair } | Proof::AndElim1 { pair } => pair.vars_mentioned(out),
            Proof::OrIntro0 { body, other } | Proof::OrIntro1 { other, body } => {
                out.extend(other.free_vars());
                body.vars_mentioned(out);
            }
            Proof::OrElim { main, left, right, .. } => {
                main.vars_mentioned(out);
                left.vars_mentioned(out);
                right.vars_mentioned(out);
            }
            Proof::AllIntro { var, body } => {
                body.vars_mentioned(out);
                out.insert(var.clone());
            }
            Proof::AllElim { term, all } => {
                out.extend(term.free_vars());
                all.vars_mentioned(out);
            }
            Proof::ExIntro { target, witness, body } => {
                out.extend(target.free_vars());
                out.extend(witness.free_vars());
                body.vars_mentioned(out);
            }
            Proof::ExElim { main, eigen, body, .. } => {
                main.vars_mentioned(out);
                body.vars_mentioned(out);
                out.insert(eigen.clone());
            }
            Proof::BotElim { target, body } => {
                out.extend(target.free_vars());
                body.vars_mentioned(out);
            }
            Proof::Dne { body } => body.vars_mentioned(out),
            Proof::Axiom(inst) => inst.vars_mentioned(out),
        }
    }
}

fn subst_under_eigen(var: &str, body: &Proof, x: &str, t: &Term) -> (String, Proof) {
    if var == x {
        return (var.to_string(), body.clone());
    }
    if t.free_vars().contains(var) {
        let mut taken = BTreeSet::new();
        body.vars_mentioned(&mut taken);
        taken.extend(t.free_vars());
        taken.insert(x.to_string());
        let fresh = crate::logic::fresh_name(var, &taken);
        let renamed = body.substitute(var, &Term::var(fresh.clone()));
        (fresh, renamed.substitute(x, t))
    } else {
        (var.to_string(), body.substitute(x, t))
    }
}

/// The end sequent of a checked proof.
#[derive(Debug, Clone, PartialEq)]
pub struct Judgment {
    pub hypotheses: BTreeMap<String, Formula>,
    pub conclusion: Formula,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CheckErrorKind {
    #[error("rule `{rule}` is not licensed in {mode} mode")]
    RuleNotLicensed { rule: &'static str, mode: LogicMode },
    #[error("eigenvariable `{var}` occurs free where it must not")]
    Eigenvariable { var: String },
    #[error("hypothesis label `{label}` bound to conflicting formulas")]
    HypothesisClash { label: String },
    #[error("discharged hypothesis `{label}` proves `{found}` but the rule requires `{expected}`")]
    DischargeMismatch { label: String, expected: String, found: String },
    #[error("{rule} premise has shape `{found}`, expected {expected}")]
    ShapeMismatch { rule: &'static str, expected: String, found: String },
    #[error("branches conclude different formulas: `{left}` vs `{right}`")]
    BranchMismatch { left: String, right: String },
    #[error("axiom instance rejected: {0}")]
    Axiom(#[from] AxiomError),
}

/// A rejection report carrying the path (child indices from the root) of the
/// offending node.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("at node {}: {kind}", path_string(.path))]
pub struct CheckError {
    pub path: Vec<usize>,
    pub kind: CheckErrorKind,
}

fn path_string(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }
}

struct Checker<'a> {
    mode: LogicMode,
    theory: &'a Theory,
}

/// Check a proof; on success returns its end judgment.
pub fn check(p: &Proof, mode: LogicMode, theory: &Theory) -> Result<Judgment, CheckError> {
    let checker = Checker { mode, theory };
    let mut path = Vec::new();
    let (hyps, conclusion) = checker.run(p, &mut path)?;
    Ok(Judgment { hypotheses: hyps, conclusion })
}

type Hyps = BTreeMap<String, Formula>;

fn fail(kind: CheckErrorKind, path: &[usize]) -> CheckError {
    CheckError { path: path.to_vec(), kind }
}

fn merge(mut a: Hyps, b: Hyps, path: &[usize]) -> Result<Hyps, CheckError> {
    for (label, f) in b {
        match a.get(&label) {
            Some(g) if *g == f => {}
            Some(_) => return Err(fail(CheckErrorKind::HypothesisClash { label }, path)),
            None => {
                a.insert(label, f);
            }
        }
    }
    Ok(a)
}

fn discharge(
    hyps: &mut Hyps,
    label: &str,
    expected: &Formula,
    path: &[usize],
) -> Result<(), CheckError> {
    if let Some(f) = hyps.get(label) {
        if f != expected {
            return Err(fail(
                CheckErrorKind::DischargeMismatch {
                    label: label.to_string(),
                    expected: expected.to_string(),
                    found: f.to_string(),
                },
                path,
            ));
        }
        hyps.remove(label);
    }
    // vacuous discharge is permitted
    Ok(())
}

impl<'a> Checker<'a> {
    fn run(&self, p: &Proof, path: &mut Vec<usize>) -> Result<(Hyps, Formula), CheckError> {
        macro_rules! sub {
            ($i:expr, $child:expr) => {{
                path.push($i);
                let r = self.run($child, path);
                path.pop();
                r?
            }};
        }
        match p {
            Proof::Hyp { label, formula } => {
                let mut h = Hyps::new();
                h.insert(label.clone(), formula.clone());
                Ok((h, formula.clone()))
            }
            Proof::ImpIntro { label, antecedent, body } => {
                let (mut hyps, concl) = sub!(0, body);
                discharge(&mut hyps, label, antecedent, path)?;
                Ok((hyps, Formula::imp(antecedent.clone(), concl)))
            }
            Proof::ImpElim { fun, arg } => {
                let (h1, f) = sub!(0, fun);
                let (h2, a) = sub!(1, arg);
                match f {
                    Formula::Imp(dom, cod) if *dom == a => Ok((merge(h1, h2, path)?, *cod)),
                    Formula::Imp(dom, _) => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "→E",
                            expected: format!("argument proving `{dom}`"),
                            found: a.to_string(),
                        },
                        path,
                    )),
                    other => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "→E",
                            expected: "an implication".to_string(),
                            found: other.to_string(),
                        },
                        path,
                    )),
                }
            }
            Proof::AndIntro { left, right } => {
                let (h1, a) = sub!(0, left);
                let (h2, b) = sub!(1, right);
                Ok((merge(h1, h2, path)?, Formula::and(a, b)))
            }
            Proof::AndElim0 { pair } => {
                let (h, c) = sub!(0, pair);
                match c {
                    Formula::And(a, _) => Ok((h, *a)),
                    other => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "∧E",
                            expected: "a conjunction".to_string(),
                            found: other.to_string(),
                        },
                        path,
                    )),
                }
            }
            Proof::AndElim1 { pair } => {
                let (h, c) = sub!(0, pair);
                match c {
                    Formula::And(_, b) => Ok((h, *b)),
                    other => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "∧E",
                            expected: "a conjunction".to_string(),
                            found: other.to_string(),
                        },
                        path,
                    )),
                }
            }
            Proof::OrIntro0 { body, other } => {
                let (h, a) = sub!(0, body);
                Ok((h, Formula::or(a, other.clone())))
            }
            Proof::OrIntro1 { other, body } => {
                let (h, b) = sub!(0, body);
                Ok((h, Formula::or(other.clone(), b)))
            }
            Proof::OrElim { main, left_label, left, right_label, right } => {
                let (h0, disj) = sub!(0, main);
                let (a, b) = match disj {
                    Formula::Or(a, b) => (*a, *b),
                    other => {
                        return Err(fail(
                            CheckErrorKind::ShapeMismatch {
                                rule: "∨E",
                                expected: "a disjunction".to_string(),
                                found: other.to_string(),
                            },
                            path,
                        ))
                    }
                };
                let (mut h1, c1) = sub!(1, left);
                discharge(&mut h1, left_label, &a, path)?;
                let (mut h2, c2) = sub!(2, right);
                discharge(&mut h2, right_label, &b, path)?;
                if c1 != c2 {
                    return Err(fail(
                        CheckErrorKind::BranchMismatch {
                            left: c1.to_string(),
                            right: c2.to_string(),
                        },
                        path,
                    ));
                }
                let h = merge(merge(h0, h1, path)?, h2, path)?;
                Ok((h, c1))
            }
            Proof::AllIntro { var, body } => {
                let (hyps, concl) = sub!(0, body);
                for f in hyps.values() {
                    if f.has_free_var(var) {
                        return Err(fail(CheckErrorKind::Eigenvariable { var: var.clone() }, path));
                    }
                }
                Ok((hyps, Formula::All(var.clone(), Box::new(concl))))
            }
            Proof::AllElim { term, all } => {
                let (h, c) = sub!(0, all);
                match c {
                    Formula::All(x, body) => Ok((h, body.substitute(&x, term))),
                    other => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "∀E",
                            expected: "a universal formula".to_string(),
                            found: other.to_string(),
                        },
                        path,
                    )),
                }
            }
            Proof::ExIntro { target, witness, body } => {
                let (x, tbody) = match target {
                    Formula::Ex(x, tbody) => (x, tbody),
                    other => {
                        return Err(fail(
                            CheckErrorKind::ShapeMismatch {
                                rule: "∃I",
                                expected: "an existential target".to_string(),
                                found: other.to_string(),
                            },
                            path,
                        ))
                    }
                };
                let (h, c) = sub!(0, body);
                let expected = tbody.substitute(x, witness);
                if c != expected {
                    return Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "∃I",
                            expected: expected.to_string(),
                            found: c.to_string(),
                        },
                        path,
                    ));
                }
                Ok((h, target.clone()))
            }
            Proof::ExElim { main, eigen, label, body } => {
                let (h0, e) = sub!(0, main);
                let (x, ebody) = match e {
                    Formula::Ex(x, ebody) => (x, ebody),
                    other => {
                        return Err(fail(
                            CheckErrorKind::ShapeMismatch {
                                rule: "∃E",
                                expected: "an existential main premise".to_string(),
                                found: other.to_string(),
                            },
                            path,
                        ))
                    }
                };
                let hyp_formula = ebody.substitute(&x, &Term::var(eigen.clone()));
                let (mut h1, concl) = sub!(1, body);
                discharge(&mut h1, label, &hyp_formula, path)?;
                let main_formula = Formula::Ex(x, ebody);
                if concl.has_free_var(eigen)
                    || h1.values().any(|f| f.has_free_var(eigen))
                    || main_formula.has_free_var(eigen)
                {
                    return Err(fail(
                        CheckErrorKind::Eigenvariable { var: eigen.clone() },
                        path,
                    ));
                }
                Ok((merge(h0, h1, path)?, concl))
            }
            Proof::BotElim { target, body } => {
                if self.mode < LogicMode::Intuitionistic {
                    return Err(fail(
                        CheckErrorKind::RuleNotLicensed { rule: "⊥E", mode: self.mode },
                        path,
                    ));
                }
                let (h, c) = sub!(0, body);
                if c != Formula::Bot {
                    return Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "⊥E",
                            expected: "⊥".to_string(),
                            found: c.to_string(),
                        },
                        path,
                    ));
                }
                Ok((h, target.clone()))
            }
            Proof::Dne { body } => {
                if self.mode < LogicMode::Classical {
                    return Err(fail(
                        CheckErrorKind::RuleNotLicensed { rule: "DNE", mode: self.mode },
                        path,
                    ));
                }
                let (h, c) = sub!(0, body);
                let inner = c.as_negation().and_then(|n| n.as_negation()).cloned();
                match inner {
                    Some(phi) => Ok((h, phi)),
                    None => Err(fail(
                        CheckErrorKind::ShapeMismatch {
                            rule: "DNE",
                            expected: "a doubly negated formula".to_string(),
                            found: c.to_string(),
                        },
                        path,
                    )),
                }
            }
            Proof::Axiom(inst) => {
                let formula = self
                    .theory
                    .instantiate(inst)
                    .map_err(|e| fail(CheckErrorKind::Axiom(e), path))?;
                Ok((Hyps::new(), formula))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Signature;

    fn theory() -> Theory {
        ha_axioms(&Signature::arith_with_test_relations())
    }

    fn atom(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    #[test]
    fn assumption_is_accepted_in_minimal_mode() {
        let p = Proof::hyp("h", atom("p"));
        let j = check(&p, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(j.conclusion, atom("p"));
        assert_eq!(j.hypotheses.len(), 1);
    }

    #[test]
    fn bot_elim_rejected_in_minimal_mode() {
        let p = Proof::bot_elim(atom("p"), Proof::hyp("h", Formula::Bot));
        let err = check(&p, LogicMode::Minimal, &theory()).unwrap_err();
        assert!(matches!(err.kind, CheckErrorKind::RuleNotLicensed { rule: "⊥E", .. }));
        assert!(check(&p, LogicMode::Intuitionistic, &theory()).is_ok());
    }

    #[test]
    fn dne_only_classical() {
        let nn = Formula::not(Formula::not(atom("p")));
        let p = Proof::dne(Proof::hyp("h", nn));
        assert!(check(&p, LogicMode::Intuitionistic, &theory()).is_err());
        let j = check(&p, LogicMode::Classical, &theory()).unwrap();
        assert_eq!(j.conclusion, atom("p"));
    }

    #[test]
    fn imp_intro_discharges() {
        let p = Proof::imp_intro("h", atom("p"), Proof::hyp("h", atom("p")));
        let j = check(&p, LogicMode::Minimal, &theory()).unwrap();
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, Formula::imp(atom("p"), atom("p")));
    }

    #[test]
    fn eigenvariable_violation_caught() {
        let ax = Formula::atom("A", vec![Term::var("x")]);
        let p = Proof::all_intro("x", Proof::hyp("h", ax));
        let err = check(&p, LogicMode::Minimal, &theory()).unwrap_err();
        assert!(matches!(err.kind, CheckErrorKind::Eigenvariable { .. }));
    }

    #[test]
    fn forall_intro_elim() {
        let refl = Proof::Axiom(AxiomInstance::EqRefl(Term::var("x")));
        let all = Proof::all_intro("x", refl);
        let inst = Proof::all_elim(Term::succ(Term::zero()), all);
        let j = check(&inst, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(
            j.conclusion,
            Formula::eq(Term::succ(Term::zero()), Term::succ(Term::zero()))
        );
    }

    #[test]
    fn exists_intro_and_elim() {
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let intro = Proof::ex_intro(
            target.clone(),
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let j = check(&intro, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(j.conclusion, target);

        let use_it = Proof::Axiom(AxiomInstance::EqRefl(Term::zero()));
        let elim = Proof::ex_elim(intro, "w", "hw", use_it);
        let j = check(&elim, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(j.conclusion, Formula::eq(Term::zero(), Term::zero()));
    }

    #[test]
    fn ex_elim_eigen_escape_rejected() {
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::var("y")));
        let intro = Proof::ex_intro(
            target,
            Term::zero(),
            Proof::Axiom(AxiomInstance::EqRefl(Term::zero())),
        );
        let body = Proof::hyp("hw", Formula::eq(Term::var("w"), Term::var("w")));
        let elim = Proof::ex_elim(intro, "w", "hw", body);
        let err = check(&elim, LogicMode::Minimal, &theory()).unwrap_err();
        assert!(matches!(err.kind, CheckErrorKind::Eigenvariable { .. }));
    }

    #[test]
    fn error_reports_node_path() {
        let p = Proof::imp_intro(
            "h",
            Formula::Bot,
            Proof::bot_elim(atom("p"), Proof::hyp("h", Formula::Bot)),
        );
        let err = check(&p, LogicMode::Minimal, &theory()).unwrap_err();
        assert_eq!(err.path, vec![0]);
    }

    #[test]
    fn mode_monotonicity() {
        let p = Proof::imp_intro("h", atom("p"), Proof::hyp("h", atom("p")));
        for mode in [LogicMode::Minimal, LogicMode::Intuitionistic, LogicMode::Classical] {
            assert!(check(&p, mode, &theory()).is_ok());
        }
    }

    #[test]
    fn weakening_via_vacuous_discharge() {
        let p = Proof::imp_intro("unused", atom("q"), Proof::hyp("h", atom("p")));
        let j = check(&p, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(j.conclusion, Formula::imp(atom("q"), atom("p")));
        assert_eq!(j.hypotheses.len(), 1);
    }

    #[test]
    fn substitution_stability() {
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let p = Proof::ex_intro(
            target,
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let q = p.substitute("x", &Term::numeral(2));
        let j = check(&q, LogicMode::Minimal, &theory()).unwrap();
        assert_eq!(
            j.conclusion,
            Formula::ex("y", Formula::eq(Term::var("y"), Term::numeral(3)))
        );
    }
}
