//! Translation of checked classical proofs into minimal-logic proofs of
//! their Gödel-Gentzen images.
//!
//! The translation is node-local: the homomorphic rules carry over
//! unchanged, the positive rules (`∨I`, `∃I`) become continuation feeds, the
//! eliminations (`∨E`, `∃E`, `DNE`, `⊥E`) go through the synthesized
//! stability and ex-falso lemmas for negative formulas, and every axiom leaf
//! is replaced by a minimal-logic proof of the axiom's `N`-image from the
//! arithmetic axioms themselves. The excluded-middle axiom translates by a
//! case split on itself rather than through the complement bridge; that
//! choice keeps the extracted realizers of translated proofs sound.

use super::{godel_gentzen, DntError};
use crate::kernel::builder::{collapse, dni, efq_neg, nn_map, stab, ImpPf, Names};
use crate::kernel::{check, AxiomInstance, LogicMode, Proof, Theory};
use crate::logic::{neg_raw, Formula, Term};

fn n_of(phi: &Formula) -> Formula {
    godel_gentzen(phi, false)
}

fn not(f: Formula) -> Formula {
    Formula::not(f)
}

fn lam(g: &mut Names, ante: &Formula, body: impl FnOnce(&mut Names, Proof) -> Proof) -> Proof {
    let l = g.fresh("t");
    let h = Proof::hyp(l.clone(), ante.clone());
    Proof::imp_intro(l, ante.clone(), body(g, h))
}

fn app(f: Proof, a: Proof) -> Proof {
    Proof::imp_elim(f, a)
}

/// Translate a classical proof over the given theory into a minimal-logic
/// proof of the `N`-translated conclusion, with `N`-translated hypotheses.
pub fn translate_proof(theory: &Theory, p: &Proof) -> Result<Proof, DntError> {
    check(p, LogicMode::Classical, theory).map_err(|e| DntError::SourceCheck(e.to_string()))?;
    let mut g = Names::new();
    let (q, _) = walk(theory, p, &mut g)?;
    Ok(q)
}

/// Returns the translated proof together with the source conclusion.
fn walk(theory: &Theory, p: &Proof, g: &mut Names) -> Result<(Proof, Formula), DntError> {
    Ok(match p {
        Proof::Hyp { label, formula } => {
            (Proof::hyp(label.clone(), n_of(formula)), formula.clone())
        }
        Proof::ImpIntro { label, antecedent, body } => {
            let (b, bc) = walk(theory, body, g)?;
            (
                Proof::imp_intro(label.clone(), n_of(antecedent), b),
                Formula::imp(antecedent.clone(), bc),
            )
        }
        Proof::ImpElim { fun, arg } => {
            let (f, fc) = walk(theory, fun, g)?;
            let (a, _) = walk(theory, arg, g)?;
            let cod = match fc {
                Formula::Imp(_, cod) => *cod,
                _ => unreachable!("source proof checked"),
            };
            (Proof::imp_elim(f, a), cod)
        }
        Proof::AndIntro { left, right } => {
            let (l, lc) = walk(theory, left, g)?;
            let (r, rc) = walk(theory, right, g)?;
            (Proof::and_intro(l, r), Formula::and(lc, rc))
        }
        Proof::AndElim0 { pair } => {
            let (q, c) = walk(theory, pair, g)?;
            let a = match c {
                Formula::And(a, _) => *a,
                _ => unreachable!(),
            };
            (Proof::and_elim0(q), a)
        }
        Proof::AndElim1 { pair } => {
            let (q, c) = walk(theory, pair, g)?;
            let b = match c {
                Formula::And(_, b) => *b,
                _ => unreachable!(),
            };
            (Proof::and_elim1(q), b)
        }
        Proof::OrIntro0 { body, other } => {
            let (q, a) = walk(theory, body, g)?;
            // target ¬(¬aN ∧ ¬oN): λk. k.0 q
            let hyp_f = Formula::and(not(n_of(&a)), not(n_of(other)));
            let proof = lam(g, &hyp_f, |_g2, k| app(Proof::and_elim0(k), q));
            (proof, Formula::or(a, other.clone()))
        }
        Proof::OrIntro1 { other, body } => {
            let (q, b) = walk(theory, body, g)?;
            let hyp_f = Formula::and(not(n_of(other)), not(n_of(&b)));
            let proof = lam(g, &hyp_f, |_g2, k| app(Proof::and_elim1(k), q));
            (proof, Formula::or(other.clone(), b))
        }
        Proof::OrElim { main, left_label, left, right_label, right } => {
            let (m, mc) = walk(theory, main, g)?;
            let (l, chi) = walk(theory, left, g)?;
            let (r, _) = walk(theory, right, g)?;
            let (a, b) = match mc {
                Formula::Or(a, b) => (*a, *b),
                _ => unreachable!(),
            };
            let nchi = n_of(&chi);
            let s = stab(&nchi, g).map_err(|e| DntError::Lemma(e.to_string()))?;
            // stab (λk. m ⟨λ(ll). k l, λ(rl). k r⟩)
            let body = lam(g, &not(nchi.clone()), |_g2, k| {
                let pl = Proof::imp_intro(left_label.clone(), n_of(&a), app(k.clone(), l.clone()));
                let pr =
                    Proof::imp_intro(right_label.clone(), n_of(&b), app(k.clone(), r.clone()));
                app(m.clone(), Proof::and_intro(pl, pr))
            });
            (s.apply(body), chi)
        }
        Proof::AllIntro { var, body } => {
            let (q, c) = walk(theory, body, g)?;
            (Proof::all_intro(var.clone(), q), Formula::all(var.clone(), c))
        }
        Proof::AllElim { term, all } => {
            let (q, c) = walk(theory, all, g)?;
            let inst = match c {
                Formula::All(x, body) => body.substitute(&x, term),
                _ => unreachable!(),
            };
            (Proof::all_elim(term.clone(), q), inst)
        }
        Proof::ExIntro { target, witness, body } => {
            let (q, _) = walk(theory, body, g)?;
            let (x, tbody) = match target {
                Formula::Ex(x, tbody) => (x.clone(), (**tbody).clone()),
                _ => unreachable!(),
            };
            // target image ¬∀x ¬(tbody)N: λk. (k witness) q
            let all_f = Formula::all(x, not(n_of(&tbody)));
            let proof = lam(g, &all_f, |_g2, k| app(Proof::all_elim(witness.clone(), k), q));
            (proof, target.clone())
        }
        Proof::ExElim { main, eigen, label, body } => {
            let (m, mc) = walk(theory, main, g)?;
            let (b, chi) = walk(theory, body, g)?;
            let (x, ebody) = match mc {
                Formula::Ex(x, ebody) => (x, *ebody),
                _ => unreachable!(),
            };
            let hyp_n = n_of(&ebody.substitute(&x, &Term::var(eigen.clone())));
            let nchi = n_of(&chi);
            let s = stab(&nchi, g).map_err(|e| DntError::Lemma(e.to_string()))?;
            // stab (λk. m (∀I eigen. λ(label). k b))
            let outer = lam(g, &not(nchi.clone()), |_g2, k| {
                let branch = Proof::imp_intro(label.clone(), hyp_n.clone(), app(k, b.clone()));
                app(m.clone(), Proof::all_intro(eigen.clone(), branch))
            });
            (s.apply(outer), chi)
        }
        Proof::BotElim { target, body } => {
            let (q, _) = walk(theory, body, g)?;
            let e = efq_neg(&n_of(target), g).map_err(|err| DntError::Lemma(err.to_string()))?;
            (e.apply(q), target.clone())
        }
        Proof::Dne { body } => {
            let (q, c) = walk(theory, body, g)?;
            let phi = c
                .as_negation()
                .and_then(|n| n.as_negation())
                .cloned()
                .expect("source proof checked");
            let s = stab(&n_of(&phi), g).map_err(|e| DntError::Lemma(e.to_string()))?;
            (s.apply(q), phi)
        }
        Proof::Axiom(inst) => {
            let formula = theory
                .instantiate(inst)
                .map_err(|e| DntError::SourceCheck(e.to_string()))?;
            (translate_axiom(theory, inst, &formula, g)?, formula)
        }
    })
}

fn translate_axiom(
    theory: &Theory,
    inst: &AxiomInstance,
    source: &Formula,
    g: &mut Names,
) -> Result<Proof, DntError> {
    let _ = theory;
    Ok(match inst {
        // atomic axioms: double-negate the leaf
        AxiomInstance::EqRefl(_) | AxiomInstance::SuccNonzero(_) | AxiomInstance::DefEq { .. } => {
            dni(source, g).apply(Proof::Axiom(inst.clone()))
        }
        // implications between atoms: the ¬¬-functor
        AxiomInstance::EqSym(..) | AxiomInstance::SuccInj(..) => {
            let (from, to) = match source {
                Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
                _ => unreachable!("axiom shape"),
            };
            nn_map(&ImpPf::new(from, to, Proof::Axiom(inst.clone())), g).proof
        }
        AxiomInstance::EqTrans(s, t, u) => {
            let e1 = Formula::eq(s.clone(), t.clone());
            let e2 = Formula::eq(t.clone(), u.clone());
            let e3 = Formula::eq(s.clone(), u.clone());
            let nn = |f: &Formula| Formula::not(Formula::not(f.clone()));
            // λd1. λd2. λk. d1 (λa. d2 (λb. k (ax a b)))
            lam(g, &nn(&e1), |g, d1| {
                lam(g, &nn(&e2), |g, d2| {
                    lam(g, &not(e3.clone()), |g, k| {
                        let inner = lam(g, &e1, |g, a| {
                            let deeper = lam(g, &e2, |_g2, b| {
                                app(k.clone(), app(app(Proof::Axiom(inst.clone()), a.clone()), b))
                            });
                            app(d2.clone(), deeper)
                        });
                        app(d1.clone(), inner)
                    })
                })
            })
        }
        AxiomInstance::EqSubst { var, formula, from, to } => {
            let nphi = n_of(formula);
            let eq = Formula::eq(from.clone(), to.clone());
            let nn_eq = Formula::not(Formula::not(eq.clone()));
            let nphi_from = nphi.substitute(var, from);
            let nphi_to = nphi.substitute(var, to);
            let s = stab(&nphi_to, g).map_err(|e| DntError::Lemma(e.to_string()))?;
            let ax = Proof::Axiom(AxiomInstance::EqSubst {
                var: var.clone(),
                formula: nphi.clone(),
                from: from.clone(),
                to: to.clone(),
            });
            // λd. λa. stab (λk. d (λe. k ((ax e) a)))
            lam(g, &nn_eq, |g, d| {
                lam(g, &nphi_from, |g, a| {
                    let body = lam(g, &not(nphi_to.clone()), |g, k| {
                        let inner = lam(g, &eq, |_g2, e| {
                            app(k.clone(), app(app(ax.clone(), e), a.clone()))
                        });
                        app(d.clone(), inner)
                    });
                    s.apply(body)
                })
            })
        }
        AxiomInstance::Induction { var, formula } => Proof::Axiom(AxiomInstance::Induction {
            var: var.clone(),
            formula: n_of(formula),
        }),
        AxiomInstance::AtomStability(theta) => collapse(&not(theta.clone()), g).proof,
        AxiomInstance::Decidable(theta) => {
            // ¬(¬¬¬θ ∧ ¬¬¬θ̄) by cases on θ ∨ θ̄
            let comp = neg_raw(theta);
            let n3 = |f: &Formula| not(not(not(f.clone())));
            let hyp_f = Formula::and(n3(theta), n3(&comp));
            lam(g, &hyp_f, |g, h| {
                let lt = g.fresh("t");
                let lc = g.fresh("t");
                let d_t = dni(theta, g);
                let d_c = dni(&comp, g);
                Proof::or_elim(
                    Proof::Axiom(inst.clone()),
                    lt.clone(),
                    app(
                        Proof::and_elim0(h.clone()),
                        d_t.apply(Proof::hyp(lt.clone(), theta.clone())),
                    ),
                    lc.clone(),
                    app(
                        Proof::and_elim1(h.clone()),
                        d_c.apply(Proof::hyp(lc.clone(), comp.clone())),
                    ),
                )
            })
        }
        AxiomInstance::ComplIntro(theta) => {
            let comp = neg_raw(theta);
            let n3_theta = not(not(not(theta.clone())));
            // λd. λk. d (λnθ. k (compl-i nθ))
            lam(g, &n3_theta, |g, d| {
                lam(g, &not(not(comp.clone())), |g, k| {
                    let inner = lam(g, &not(theta.clone()), |_g2, ntheta| {
                        app(k.clone(), app(Proof::Axiom(inst.clone()), ntheta))
                    });
                    app(d, inner)
                })
            })
        }
        AxiomInstance::ComplElim(theta) => {
            let comp = neg_raw(theta);
            let nn_comp = not(not(comp.clone()));
            let nn_theta = not(not(theta.clone()));
            // λa. λb. a (λc. b (λt. (compl-e c) t))
            lam(g, &nn_comp, |g, a| {
                lam(g, &nn_theta, |g, b| {
                    let inner = lam(g, &comp, |g, c| {
                        let deeper = lam(g, theta, |_g2, t| {
                            app(app(Proof::Axiom(inst.clone()), c.clone()), t)
                        });
                        app(b.clone(), deeper)
                    });
                    app(a, inner)
                })
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ha_axioms, Judgment};
    use crate::logic::Signature;

    fn theory() -> Theory {
        ha_axioms(&Signature::arith_with_test_relations())
    }

    fn translated_judgment(p: &Proof) -> Judgment {
        let theory = theory();
        let q = translate_proof(&theory, p).unwrap();
        check(&q, LogicMode::Minimal, &theory).unwrap()
    }

    #[test]
    fn axiom_leaf_base_case() {
        // a single axiom leaf becomes a proof of its N-translation
        let p = Proof::Axiom(AxiomInstance::EqRefl(Term::zero()));
        let j = translated_judgment(&p);
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, n_of(&Formula::eq(Term::zero(), Term::zero())));
    }

    #[test]
    fn dne_on_atom_translates() {
        // classical proof: ¬¬(0=0) → 0=0 via DNE under an →I
        let theta = Formula::eq(Term::zero(), Term::zero());
        let nn = Formula::not(Formula::not(theta.clone()));
        let p = Proof::imp_intro("h", nn.clone(), Proof::dne(Proof::hyp("h", nn.clone())));
        let j = translated_judgment(&p);
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, n_of(&Formula::imp(nn, theta)));
    }

    #[test]
    fn hypotheses_are_n_translated() {
        let phi = Formula::or(
            Formula::atom("p", vec![]),
            Formula::atom("q", vec![]),
        );
        let p = Proof::hyp("h", phi.clone());
        let j = translated_judgment(&p);
        assert_eq!(j.hypotheses.get("h"), Some(&n_of(&phi)));
        assert_eq!(j.conclusion, n_of(&phi));
    }

    #[test]
    fn case_split_on_decidable_atom_translates() {
        // from dec(x=0), conclude 0=0 ∨ something via a trivial case split:
        // both branches prove x=x, so the whole proves x=x
        let theta = Formula::eq(Term::var("x"), Term::zero());
        let refl = Proof::Axiom(AxiomInstance::EqRefl(Term::var("x")));
        let p = Proof::or_elim(
            Proof::Axiom(AxiomInstance::Decidable(theta)),
            "l",
            refl.clone(),
            "r",
            refl,
        );
        let j = translated_judgment(&p);
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, n_of(&Formula::eq(Term::var("x"), Term::var("x"))));
    }

    #[test]
    fn existential_intro_and_elim_translate() {
        // ∃y (y = S(x)), then use it to conclude 0=0
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let intro = Proof::ex_intro(
            target.clone(),
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let elim = Proof::ex_elim(
            intro,
            "w",
            "hw",
            Proof::Axiom(AxiomInstance::EqRefl(Term::zero())),
        );
        let j = translated_judgment(&elim);
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, n_of(&Formula::eq(Term::zero(), Term::zero())));
    }

    #[test]
    fn rejected_source_is_reported() {
        // a minimal-mode-only tree is fine, but an ill-formed one is not
        let bad = Proof::dne(Proof::hyp("h", Formula::atom("p", vec![])));
        let theory = theory();
        assert!(matches!(translate_proof(&theory, &bad), Err(DntError::SourceCheck(_))));
    }
}
