//! S-expression format for proofs and `.prf` files.
//!
//! ```text
//! proof ::= (hyp h)                  ; formula taken from the binding site
//!         | (hyp h formula)          ; or annotated explicitly
//!         | (impI h formula proof)   | (impE proof proof)
//!         | (andI proof proof) | (andE0 proof) | (andE1 proof)
//!         | (orI0 proof formula) | (orI1 formula proof)
//!         | (orE proof h proof h proof)
//!         | (allI x proof) | (allE term proof)
//!         | (exI formula term proof) | (exE proof y h proof)
//!         | (botE formula proof) | (dne proof)
//!         | (ax schema params...)
//! ```
//!
//! A `.prf` file wraps a proof with its intended mode, theory and
//! conclusion:
//!
//! ```text
//! (proof (mode classical) (theory ha) (conclusion f) tree)
//! ```

use super::{AxiomInstance, LogicMode, Proof};
use crate::logic::{
    formula_from_sexp, formula_to_sexp, term_from_sexp, term_to_sexp, Formula, Signature,
};
use crate::sexp::{parse, ParseError, Sexp};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError { line: 0, col: 0, msg: msg.into() }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofFile {
    pub mode: LogicMode,
    pub theory: String,
    pub conclusion: Formula,
    pub proof: Proof,
}

pub fn proof_to_sexp(p: &Proof) -> Sexp {
    match p {
        Proof::Hyp { label, formula } => Sexp::List(vec![
            Sexp::sym("hyp"),
            Sexp::sym(label),
            formula_to_sexp(formula),
        ]),
        Proof::ImpIntro { label, antecedent, body } => Sexp::List(vec![
            Sexp::sym("impI"),
            Sexp::sym(label),
            formula_to_sexp(antecedent),
            proof_to_sexp(body),
        ]),
        Proof::ImpElim { fun, arg } => {
            Sexp::List(vec![Sexp::sym("impE"), proof_to_sexp(fun), proof_to_sexp(arg)])
        }
        Proof::AndIntro { left, right } => {
            Sexp::List(vec![Sexp::sym("andI"), proof_to_sexp(left), proof_to_sexp(right)])
        }
        Proof::AndElim0 { pair } => Sexp::List(vec![Sexp::sym("andE0"), proof_to_sexp(pair)]),
        Proof::AndElim1 { pair } => Sexp::List(vec![Sexp::sym("andE1"), proof_to_sexp(pair)]),
        Proof::OrIntro0 { body, other } => Sexp::List(vec![
            Sexp::sym("orI0"),
            proof_to_sexp(body),
            formula_to_sexp(other),
        ]),
        Proof::OrIntro1 { other, body } => Sexp::List(vec![
            Sexp::sym("orI1"),
            formula_to_sexp(other),
            proof_to_sexp(body),
        ]),
        Proof::OrElim { main, left_label, left, right_label, right } => Sexp::List(vec![
            Sexp::sym("orE"),
            proof_to_sexp(main),
            Sexp::sym(left_label),
            proof_to_sexp(left),
            Sexp::sym(right_label),
            proof_to_sexp(right),
        ]),
        Proof::AllIntro { var, body } => {
            Sexp::List(vec![Sexp::sym("allI"), Sexp::sym(var), proof_to_sexp(body)])
        }
        Proof::AllElim { term, all } => {
            Sexp::List(vec![Sexp::sym("allE"), term_to_sexp(term), proof_to_sexp(all)])
        }
        Proof::ExIntro { target, witness, body } => Sexp::List(vec![
            Sexp::sym("exI"),
            formula_to_sexp(target),
            term_to_sexp(witness),
            proof_to_sexp(body),
        ]),
        Proof::ExElim { main, eigen, label, body } => Sexp::List(vec![
            Sexp::sym("exE"),
            proof_to_sexp(main),
            Sexp::sym(eigen),
            Sexp::sym(label),
            proof_to_sexp(body),
        ]),
        Proof::BotElim { target, body } => Sexp::List(vec![
            Sexp::sym("botE"),
            formula_to_sexp(target),
            proof_to_sexp(body),
        ]),
        Proof::Dne { body } => Sexp::List(vec![Sexp::sym("dne"), proof_to_sexp(body)]),
        Proof::Axiom(inst) => axiom_to_sexp(inst),
    }
}

fn axiom_to_sexp(inst: &AxiomInstance) -> Sexp {
    let mut items = vec![Sexp::sym("ax"), Sexp::sym(inst.schema_name())];
    match inst {
        AxiomInstance::EqRefl(t) | AxiomInstance::SuccNonzero(t) => items.push(term_to_sexp(t)),
        AxiomInstance::EqSym(s, t) | AxiomInstance::SuccInj(s, t) => {
            items.push(term_to_sexp(s));
            items.push(term_to_sexp(t));
        }
        AxiomInstance::EqTrans(s, t, u) => {
            items.push(term_to_sexp(s));
            items.push(term_to_sexp(t));
            items.push(term_to_sexp(u));
        }
        AxiomInstance::EqSubst { var, formula, from, to } => {
            items.push(Sexp::sym(var));
            items.push(formula_to_sexp(formula));
            items.push(term_to_sexp(from));
            items.push(term_to_sexp(to));
        }
        AxiomInstance::DefEq { name, args } => {
            items.push(Sexp::sym(name));
            items.extend(args.iter().map(term_to_sexp));
        }
        AxiomInstance::Induction { var, formula } => {
            items.push(Sexp::sym(var));
            items.push(formula_to_sexp(formula));
        }
        AxiomInstance::AtomStability(f)
        | AxiomInstance::Decidable(f)
        | AxiomInstance::ComplIntro(f)
        | AxiomInstance::ComplElim(f) => items.push(formula_to_sexp(f)),
    }
    Sexp::List(items)
}

struct Binding {
    label: String,
    formula: Formula,
}

pub fn proof_from_sexp(sig: &Signature, e: &Sexp) -> Result<Proof, ParseError> {
    let mut env: Vec<Binding> = Vec::new();
    go(sig, e, &mut env)
}

fn lookup(env: &[Binding], label: &str) -> Option<Formula> {
    env.iter().rev().find(|b| b.label == label).map(|b| b.formula.clone())
}

fn go(sig: &Signature, e: &Sexp, env: &mut Vec<Binding>) -> Result<Proof, ParseError> {
    let items = e.as_list().ok_or_else(|| err("proof node must be a list"))?;
    let head = items
        .first()
        .and_then(|h| h.as_sym())
        .ok_or_else(|| err("proof node must start with a rule name"))?;
    let sym = |i: usize| -> Result<&str, ParseError> {
        items
            .get(i)
            .and_then(|s| s.as_sym())
            .ok_or_else(|| err(format!("`{head}` expects a symbol at position {i}")))
    };
    let need = |n: usize| -> Result<(), ParseError> {
        if items.len() != n + 1 {
            Err(err(format!("`{head}` expects {n} arguments, got {}", items.len() - 1)))
        } else {
            Ok(())
        }
    };
    match head {
        "hyp" => {
            if items.len() == 2 {
                let label = sym(1)?;
                let formula = lookup(env, label).ok_or_else(|| {
                    err(format!("hypothesis `{label}` is unbound; annotate it with its formula"))
                })?;
                Ok(Proof::hyp(label, formula))
            } else {
                need(2)?;
                let label = sym(1)?;
                Ok(Proof::hyp(label, formula_from_sexp(sig, &items[2])?))
            }
        }
        "impI" => {
            need(3)?;
            let label = sym(1)?.to_string();
            let antecedent = formula_from_sexp(sig, &items[2])?;
            env.push(Binding { label: label.clone(), formula: antecedent.clone() });
            let body = go(sig, &items[3], env);
            env.pop();
            Ok(Proof::imp_intro(label, antecedent, body?))
        }
        "impE" => {
            need(2)?;
            Ok(Proof::imp_elim(go(sig, &items[1], env)?, go(sig, &items[2], env)?))
        }
        "andI" => {
            need(2)?;
            Ok(Proof::and_intro(go(sig, &items[1], env)?, go(sig, &items[2], env)?))
        }
        "andE0" => {
            need(1)?;
            Ok(Proof::and_elim0(go(sig, &items[1], env)?))
        }
        "andE1" => {
            need(1)?;
            Ok(Proof::and_elim1(go(sig, &items[1], env)?))
        }
        "orI0" => {
            need(2)?;
            Ok(Proof::or_intro0(go(sig, &items[1], env)?, formula_from_sexp(sig, &items[2])?))
        }
        "orI1" => {
            need(2)?;
            Ok(Proof::or_intro1(formula_from_sexp(sig, &items[1])?, go(sig, &items[2], env)?))
        }
        "orE" => {
            need(5)?;
            let main = go(sig, &items[1], env)?;
            // branch hypotheses are bound to the respective disjuncts when
            // the main premise's conclusion is syntactically visible; for
            // compact files the annotated (hyp l f) form is always available.
            let ll = sym(2)?.to_string();
            let rl = sym(4)?.to_string();
            let (la, ra) = disjuncts_hint(sig, &items[1], env);
            if let Some(f) = la {
                env.push(Binding { label: ll.clone(), formula: f });
                let left = go(sig, &items[3], env);
                env.pop();
                let left = left?;
                let f = ra.ok_or_else(|| err("internal: missing right disjunct"))?;
                env.push(Binding { label: rl.clone(), formula: f });
                let right = go(sig, &items[5], env);
                env.pop();
                Ok(Proof::or_elim(main, ll, left, rl, right?))
            } else {
                let left = go(sig, &items[3], env)?;
                let right = go(sig, &items[5], env)?;
                Ok(Proof::or_elim(main, ll, left, rl, right))
            }
        }
        "allI" => {
            need(2)?;
            Ok(Proof::all_intro(sym(1)?, go(sig, &items[2], env)?))
        }
        "allE" => {
            need(2)?;
            Ok(Proof::all_elim(term_from_sexp(sig, &items[1])?, go(sig, &items[2], env)?))
        }
        "exI" => {
            need(3)?;
            Ok(Proof::ex_intro(
                formula_from_sexp(sig, &items[1])?,
                term_from_sexp(sig, &items[2])?,
                go(sig, &items[3], env)?,
            ))
        }
        "exE" => {
            need(4)?;
            let main = go(sig, &items[1], env)?;
            let eigen = sym(2)?.to_string();
            let label = sym(3)?.to_string();
            let hint = exists_hint(sig, &items[1], env, &eigen);
            if let Some(f) = hint {
                env.push(Binding { label: label.clone(), formula: f });
                let body = go(sig, &items[4], env);
                env.pop();
                Ok(Proof::ex_elim(main, eigen, label, body?))
            } else {
                Ok(Proof::ex_elim(main, eigen, label, go(sig, &items[4], env)?))
            }
        }
        "botE" => {
            need(2)?;
            Ok(Proof::bot_elim(formula_from_sexp(sig, &items[1])?, go(sig, &items[2], env)?))
        }
        "dne" => {
            need(1)?;
            Ok(Proof::dne(go(sig, &items[1], env)?))
        }
        "ax" => axiom_from_sexp(sig, items),
        other => Err(err(format!("unknown proof rule `{other}`"))),
    }
}

/// Best-effort syntactic view of the conclusion of a node, used only to bind
/// branch-hypothesis labels while parsing. The kernel re-derives and checks
/// all conclusions.
fn conclusion_hint(sig: &Signature, e: &Sexp, env: &[Binding]) -> Option<Formula> {
    let items = e.as_list()?;
    match items.first()?.as_sym()? {
        "hyp" => {
            if items.len() == 3 {
                formula_from_sexp(sig, &items[2]).ok()
            } else {
                lookup(env, items.get(1)?.as_sym()?)
            }
        }
        "ax" => {
            // conclusions of axioms are reconstructed by the checker; no
            // hint is needed because their shape is never matched on here
            None
        }
        "exI" => formula_from_sexp(sig, &items[1]).ok(),
        "orI0" => None,
        _ => None,
    }
}

fn disjuncts_hint(
    sig: &Signature,
    main: &Sexp,
    env: &[Binding],
) -> (Option<Formula>, Option<Formula>) {
    match conclusion_hint(sig, main, env) {
        Some(Formula::Or(a, b)) => (Some(*a), Some(*b)),
        _ => (None, None),
    }
}

fn exists_hint(sig: &Signature, main: &Sexp, env: &[Binding], eigen: &str) -> Option<Formula> {
    match conclusion_hint(sig, main, env) {
        Some(Formula::Ex(x, body)) => {
            Some(body.substitute(&x, &crate::logic::Term::var(eigen)))
        }
        _ => None,
    }
}

fn axiom_from_sexp(sig: &Signature, items: &[Sexp]) -> Result<Proof, ParseError> {
    let name = items
        .get(1)
        .and_then(|s| s.as_sym())
        .ok_or_else(|| err("`ax` expects a schema name"))?;
    let term = |i: usize| -> Result<crate::logic::Term, ParseError> {
        term_from_sexp(sig, items.get(i).ok_or_else(|| err("missing axiom parameter"))?)
    };
    let formula = |i: usize| -> Result<Formula, ParseError> {
        formula_from_sexp(sig, items.get(i).ok_or_else(|| err("missing axiom parameter"))?)
    };
    let inst = match name {
        "eq-refl" => AxiomInstance::EqRefl(term(2)?),
        "eq-sym" => AxiomInstance::EqSym(term(2)?, term(3)?),
        "eq-trans" => AxiomInstance::EqTrans(term(2)?, term(3)?, term(4)?),
        "eq-subst" => AxiomInstance::EqSubst {
            var: items
                .get(2)
                .and_then(|s| s.as_sym())
                .ok_or_else(|| err("eq-subst expects a variable"))?
                .to_string(),
            formula: formula(3)?,
            from: term(4)?,
            to: term(5)?,
        },
        "succ-nonzero" => AxiomInstance::SuccNonzero(term(2)?),
        "succ-inj" => AxiomInstance::SuccInj(term(2)?, term(3)?),
        "defeq" => AxiomInstance::DefEq {
            name: items
                .get(2)
                .and_then(|s| s.as_sym())
                .ok_or_else(|| err("defeq expects an equation name"))?
                .to_string(),
            args: items[3..]
                .iter()
                .map(|a| term_from_sexp(sig, a))
                .collect::<Result<Vec<_>, _>>()?,
        },
        "ind" => AxiomInstance::Induction {
            var: items
                .get(2)
                .and_then(|s| s.as_sym())
                .ok_or_else(|| err("ind expects a variable"))?
                .to_string(),
            formula: formula(3)?,
        },
        "stab" => AxiomInstance::AtomStability(formula(2)?),
        "dec" => AxiomInstance::Decidable(formula(2)?),
        "compl-i" => AxiomInstance::ComplIntro(formula(2)?),
        "compl-e" => AxiomInstance::ComplElim(formula(2)?),
        other => return Err(err(format!("unknown axiom schema `{other}`"))),
    };
    Ok(Proof::Axiom(inst))
}

pub fn proof_file_to_sexp(f: &ProofFile) -> Sexp {
    Sexp::List(vec![
        Sexp::sym("proof"),
        Sexp::List(vec![Sexp::sym("mode"), Sexp::sym(f.mode.to_string())]),
        Sexp::List(vec![Sexp::sym("theory"), Sexp::sym(&f.theory)]),
        Sexp::List(vec![Sexp::sym("conclusion"), formula_to_sexp(&f.conclusion)]),
        proof_to_sexp(&f.proof),
    ])
}

pub fn parse_proof_file(sig: &Signature, src: &str) -> Result<ProofFile, ParseError> {
    let e = parse(src)?;
    let items = e.as_list().ok_or_else(|| err("proof file must be a `(proof ...)` form"))?;
    if items.first().and_then(|h| h.as_sym()) != Some("proof") {
        return Err(err("proof file must start with `proof`"));
    }
    let mut mode = None;
    let mut theory = None;
    let mut conclusion = None;
    let mut tree = None;
    for item in &items[1..] {
        match item.head() {
            Some("mode") => {
                let m = item.as_list().unwrap()[1]
                    .as_sym()
                    .ok_or_else(|| err("mode must be a symbol"))?;
                mode = Some(m.parse::<LogicMode>().map_err(err)?);
            }
            Some("theory") => {
                theory = Some(
                    item.as_list().unwrap()[1]
                        .as_sym()
                        .ok_or_else(|| err("theory must be a symbol"))?
                        .to_string(),
                );
            }
            Some("conclusion") => {
                conclusion = Some(formula_from_sexp(sig, &item.as_list().unwrap()[1])?);
            }
            _ => {
                tree = Some(proof_from_sexp(sig, item)?);
            }
        }
    }
    Ok(ProofFile {
        mode: mode.ok_or_else(|| err("proof file is missing `(mode ...)`"))?,
        theory: theory.ok_or_else(|| err("proof file is missing `(theory ...)`"))?,
        conclusion: conclusion.ok_or_else(|| err("proof file is missing `(conclusion ...)`"))?,
        proof: tree.ok_or_else(|| err("proof file has no derivation"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check, ha_axioms};

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    #[test]
    fn compact_hypotheses_resolve_through_binders() {
        // (impI h1 p (impI h2 (imp p q) (impE (hyp h2) (hyp h1))))
        let src = "(impI h1 (atom p) (impI h2 (imp (atom p) (atom q)) \
                   (impE (hyp h2) (hyp h1))))";
        let p = proof_from_sexp(&sig(), &parse(src).unwrap()).unwrap();
        let theory = ha_axioms(&sig());
        let j = check(&p, LogicMode::Minimal, &theory).unwrap();
        assert_eq!(j.conclusion.to_string(), "(imp (atom p) (imp (imp (atom p) (atom q)) (atom q)))");
    }

    #[test]
    fn proof_roundtrip() {
        let src = "(impI h (atom p) (hyp h (atom p)))";
        let p = proof_from_sexp(&sig(), &parse(src).unwrap()).unwrap();
        let printed = proof_to_sexp(&p).to_string();
        let p2 = proof_from_sexp(&sig(), &parse(&printed).unwrap()).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn proof_file_roundtrip() {
        let src = "(proof (mode classical) (theory pa) \
                   (conclusion (atom = 0 0)) (ax eq-refl 0))";
        let f = parse_proof_file(&sig(), src).unwrap();
        assert_eq!(f.mode, LogicMode::Classical);
        let printed = proof_file_to_sexp(&f).to_string();
        assert_eq!(parse_proof_file(&sig(), &printed).unwrap(), f);
    }

    #[test]
    fn unbound_compact_hyp_is_an_error() {
        let srcs = "(impE (hyp nowhere) (ax eq-refl 0))";
        assert!(proof_from_sexp(&sig(), &parse(srcs).unwrap()).is_err());
    }
}
