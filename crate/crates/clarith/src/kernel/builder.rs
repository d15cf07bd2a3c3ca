//! Combinators for constructing natural-deduction proofs programmatically.
//!
//! Everything here produces *closed* proofs (no open hypotheses) in minimal
//! logic unless stated otherwise; label freshness is handled by [`Names`].
//! These are the raw materials of the proof translations and the synthesized
//! equivalence proofs.

use super::{AxiomInstance, Proof};
use crate::logic::{Formula, Term};

/// Fresh-name supply for hypothesis labels.
#[derive(Debug, Default)]
pub(crate) struct Names {
    n: usize,
}

impl Names {
    pub fn new() -> Names {
        Names { n: 0 }
    }

    pub fn fresh(&mut self, base: &str) -> String {
        let k = self.n;
        self.n += 1;
        format!("{base}{k}")
    }
}

/// A closed proof of `from → to`, carrying both endpoints.
#[derive(Debug, Clone)]
pub(crate) struct ImpPf {
    pub from: Formula,
    pub to: Formula,
    pub proof: Proof,
}

impl ImpPf {
    pub fn new(from: Formula, to: Formula, proof: Proof) -> ImpPf {
        ImpPf { from, to, proof }
    }

    /// Modus ponens against a proof of `from`.
    pub fn apply(&self, arg: Proof) -> Proof {
        Proof::imp_elim(self.proof.clone(), arg)
    }

    /// `self : A → B`, `then : B → C` gives `A → C`.
    pub fn and_then(&self, then: &ImpPf, g: &mut Names) -> ImpPf {
        let h = g.fresh("h");
        let proof = Proof::imp_intro(
            h.clone(),
            self.from.clone(),
            then.apply(self.apply(Proof::hyp(h.clone(), self.from.clone()))),
        );
        ImpPf::new(self.from.clone(), then.to.clone(), proof)
    }
}

/// `φ → φ`.
pub(crate) fn imp_id(phi: &Formula, g: &mut Names) -> ImpPf {
    let h = g.fresh("h");
    ImpPf::new(
        phi.clone(),
        phi.clone(),
        Proof::imp_intro(h.clone(), phi.clone(), Proof::hyp(h, phi.clone())),
    )
}

/// Double-negation introduction `φ → ¬¬φ`.
pub(crate) fn dni(phi: &Formula, g: &mut Names) -> ImpPf {
    let a = g.fresh("h");
    let k = g.fresh("h");
    let nphi = Formula::not(phi.clone());
    let proof = Proof::imp_intro(
        a.clone(),
        phi.clone(),
        Proof::imp_intro(
            k.clone(),
            nphi.clone(),
            Proof::imp_elim(Proof::hyp(k, nphi.clone()), Proof::hyp(a, phi.clone())),
        ),
    );
    ImpPf::new(phi.clone(), Formula::not(nphi), proof)
}

/// Triple-negation collapse `¬¬¬φ → ¬φ`.
pub(crate) fn collapse(phi: &Formula, g: &mut Names) -> ImpPf {
    let nphi = Formula::not(phi.clone());
    let nnnphi = Formula::not(Formula::not(nphi.clone()));
    let t = g.fresh("h");
    let a = g.fresh("h");
    // λt. λa. t (dni a)
    let inner = dni(phi, g);
    let proof = Proof::imp_intro(
        t.clone(),
        nnnphi.clone(),
        Proof::imp_intro(
            a.clone(),
            phi.clone(),
            Proof::imp_elim(
                Proof::hyp(t, nnnphi.clone()),
                inner.apply(Proof::hyp(a, phi.clone())),
            ),
        ),
    );
    ImpPf::new(nnnphi, nphi, proof)
}

/// From a closed proof of `A → B`, the functor `¬¬A → ¬¬B`.
pub(crate) fn nn_map(ab: &ImpPf, g: &mut Names) -> ImpPf {
    let nna = Formula::not(Formula::not(ab.from.clone()));
    let nnb = Formula::not(Formula::not(ab.to.clone()));
    let d = g.fresh("h");
    let k = g.fresh("h");
    let a = g.fresh("h");
    let nb = Formula::not(ab.to.clone());
    // λd. λk. d (λa. k (ab a))
    let proof = Proof::imp_intro(
        d.clone(),
        nna.clone(),
        Proof::imp_intro(
            k.clone(),
            nb.clone(),
            Proof::imp_elim(
                Proof::hyp(d, nna.clone()),
                Proof::imp_intro(
                    a.clone(),
                    ab.from.clone(),
                    Proof::imp_elim(
                        Proof::hyp(k, nb.clone()),
                        ab.apply(Proof::hyp(a, ab.from.clone())),
                    ),
                ),
            ),
        ),
    );
    ImpPf::new(nna, nnb, proof)
}

/// A closed proof of `lhs ↔ rhs`, kept as its two directions.
#[derive(Debug, Clone)]
pub(crate) struct IffPf {
    pub lhs: Formula,
    pub rhs: Formula,
    pub fwd: Proof,
    pub bwd: Proof,
}

impl IffPf {
    pub fn new(lhs: Formula, rhs: Formula, fwd: Proof, bwd: Proof) -> IffPf {
        IffPf { lhs, rhs, fwd, bwd }
    }

    pub fn refl(phi: &Formula, g: &mut Names) -> IffPf {
        let id1 = imp_id(phi, g).proof;
        let id2 = imp_id(phi, g).proof;
        IffPf::new(phi.clone(), phi.clone(), id1, id2)
    }

    pub fn sym(self) -> IffPf {
        IffPf { lhs: self.rhs, rhs: self.lhs, fwd: self.bwd, bwd: self.fwd }
    }

    pub fn fwd_imp(&self) -> ImpPf {
        ImpPf::new(self.lhs.clone(), self.rhs.clone(), self.fwd.clone())
    }

    pub fn bwd_imp(&self) -> ImpPf {
        ImpPf::new(self.rhs.clone(), self.lhs.clone(), self.bwd.clone())
    }

    pub fn trans(&self, other: &IffPf, g: &mut Names) -> IffPf {
        debug_assert_eq!(self.rhs, other.lhs);
        let fwd = self.fwd_imp().and_then(&other.fwd_imp(), g);
        let bwd = other.bwd_imp().and_then(&self.bwd_imp(), g);
        IffPf::new(self.lhs.clone(), other.rhs.clone(), fwd.proof, bwd.proof)
    }

    /// The whole `lhs ↔ rhs` as a single conjunction proof.
    pub fn into_proof(self) -> Proof {
        Proof::and_intro(self.fwd, self.bwd)
    }

    /// `¬lhs ↔ ¬rhs`.
    pub fn cong_not(&self, g: &mut Names) -> IffPf {
        cong_imp_parts(self, &IffPf::refl(&Formula::Bot, g), g)
    }

    pub fn cong_all(&self, var: &str, g: &mut Names) -> IffPf {
        let dir = |ab: &ImpPf, g: &mut Names| -> Proof {
            let all_from = Formula::all(var, ab.from.clone());
            let c = g.fresh("h");
            Proof::imp_intro(
                c.clone(),
                all_from.clone(),
                Proof::all_intro(
                    var,
                    ab.apply(Proof::all_elim(Term::var(var), Proof::hyp(c, all_from.clone()))),
                ),
            )
        };
        let fwd = dir(&self.fwd_imp(), g);
        let bwd = dir(&self.bwd_imp(), g);
        IffPf::new(
            Formula::all(var, self.lhs.clone()),
            Formula::all(var, self.rhs.clone()),
            fwd,
            bwd,
        )
    }

    pub fn cong_ex(&self, var: &str, g: &mut Names) -> IffPf {
        let dir = |ab: &ImpPf, g: &mut Names| -> Proof {
            let ex_from = Formula::ex(var, ab.from.clone());
            let ex_to = Formula::ex(var, ab.to.clone());
            let e = g.fresh("h");
            let hw = g.fresh("h");
            Proof::imp_intro(
                e.clone(),
                ex_from.clone(),
                Proof::ex_elim(
                    Proof::hyp(e, ex_from.clone()),
                    var,
                    hw.clone(),
                    Proof::ex_intro(
                        ex_to.clone(),
                        Term::var(var),
                        ab.apply(Proof::hyp(hw, ab.from.clone())),
                    ),
                ),
            )
        };
        let fwd = dir(&self.fwd_imp(), g);
        let bwd = dir(&self.bwd_imp(), g);
        IffPf::new(
            Formula::ex(var, self.lhs.clone()),
            Formula::ex(var, self.rhs.clone()),
            fwd,
            bwd,
        )
    }
}

/// `(A ∧ B) ↔ (A' ∧ B')` from the component equivalences.
pub(crate) fn cong_and(ia: &IffPf, ib: &IffPf, g: &mut Names) -> IffPf {
    let dir = |a: &ImpPf, b: &ImpPf, g: &mut Names| -> Proof {
        let from = Formula::and(a.from.clone(), b.from.clone());
        let p = g.fresh("h");
        Proof::imp_intro(
            p.clone(),
            from.clone(),
            Proof::and_intro(
                a.apply(Proof::and_elim0(Proof::hyp(p.clone(), from.clone()))),
                b.apply(Proof::and_elim1(Proof::hyp(p.clone(), from.clone()))),
            ),
        )
    };
    let fwd = dir(&ia.fwd_imp(), &ib.fwd_imp(), g);
    let bwd = dir(&ia.bwd_imp(), &ib.bwd_imp(), g);
    IffPf::new(
        Formula::and(ia.lhs.clone(), ib.lhs.clone()),
        Formula::and(ia.rhs.clone(), ib.rhs.clone()),
        fwd,
        bwd,
    )
}

/// `(A ∨ B) ↔ (A' ∨ B')`.
pub(crate) fn cong_or(ia: &IffPf, ib: &IffPf, g: &mut Names) -> IffPf {
    let dir = |a: &ImpPf, b: &ImpPf, g: &mut Names| -> Proof {
        let from = Formula::or(a.from.clone(), b.from.clone());
        let p = g.fresh("h");
        let l = g.fresh("h");
        let r = g.fresh("h");
        Proof::imp_intro(
            p.clone(),
            from.clone(),
            Proof::or_elim(
                Proof::hyp(p, from.clone()),
                l.clone(),
                Proof::or_intro0(
                    a.apply(Proof::hyp(l, a.from.clone())),
                    b.to.clone(),
                ),
                r.clone(),
                Proof::or_intro1(
                    a.to.clone(),
                    b.apply(Proof::hyp(r, b.from.clone())),
                ),
            ),
        )
    };
    let fwd = dir(&ia.fwd_imp(), &ib.fwd_imp(), g);
    let bwd = dir(&ia.bwd_imp(), &ib.bwd_imp(), g);
    IffPf::new(
        Formula::or(ia.lhs.clone(), ib.lhs.clone()),
        Formula::or(ia.rhs.clone(), ib.rhs.clone()),
        fwd,
        bwd,
    )
}

/// `(A → B) ↔ (A' → B')`.
pub(crate) fn cong_imp_parts(ia: &IffPf, ib: &IffPf, g: &mut Names) -> IffPf {
    let dir = |a_back: &ImpPf, b_fwd: &ImpPf, g: &mut Names| -> Proof {
        // from : a_back.to → b_fwd.from ; to : a_back.from → b_fwd.to
        let from = Formula::imp(a_back.to.clone(), b_fwd.from.clone());
        let f = g.fresh("h");
        let x = g.fresh("h");
        Proof::imp_intro(
            f.clone(),
            from.clone(),
            Proof::imp_intro(
                x.clone(),
                a_back.from.clone(),
                b_fwd.apply(Proof::imp_elim(
                    Proof::hyp(f, from.clone()),
                    a_back.apply(Proof::hyp(x, a_back.from.clone())),
                )),
            ),
        )
    };
    let fwd = dir(&ia.bwd_imp(), &ib.fwd_imp(), g);
    let bwd = dir(&ia.fwd_imp(), &ib.bwd_imp(), g);
    IffPf::new(
        Formula::imp(ia.lhs.clone(), ib.lhs.clone()),
        Formula::imp(ia.rhs.clone(), ib.rhs.clone()),
        fwd,
        bwd,
    )
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum LemmaError {
    #[error("formula `{0}` is outside the stable class")]
    NotStable(String),
    #[error("no ex-falso derivation for `{0}` in minimal logic")]
    NoEfq(String),
}

/// Minimal-logic stability `¬¬φ → φ` for the stable class: `⊥`, atoms (via
/// the stability axiom), conjunctions and universals of stable formulas, and
/// implications with stable conclusion. Negative formulas all fall in.
pub(crate) fn stab(phi: &Formula, g: &mut Names) -> Result<ImpPf, LemmaError> {
    let nn = |f: &Formula| Formula::not(Formula::not(f.clone()));
    match phi {
        Formula::Bot => {
            // λd. d (λb. b)
            let d = g.fresh("h");
            let id = imp_id(&Formula::Bot, g);
            let proof = Proof::imp_intro(
                d.clone(),
                nn(&Formula::Bot),
                Proof::imp_elim(Proof::hyp(d, nn(&Formula::Bot)), id.proof),
            );
            Ok(ImpPf::new(nn(&Formula::Bot), Formula::Bot, proof))
        }
        Formula::Atom(..) | Formula::NegAtom(..) => {
            Ok(ImpPf::new(
                nn(phi),
                phi.clone(),
                Proof::Axiom(AxiomInstance::AtomStability(phi.clone())),
            ))
        }
        Formula::Imp(a, b) => {
            // λd. λx. stab_b (λk. d (λf. k (f x)))
            let sb = stab(b, g)?;
            let d = g.fresh("h");
            let x = g.fresh("h");
            let k = g.fresh("h");
            let f = g.fresh("h");
            let nb = Formula::not((**b).clone());
            let inner = Proof::imp_intro(
                k.clone(),
                nb.clone(),
                Proof::imp_elim(
                    Proof::hyp(d.clone(), nn(phi)),
                    Proof::imp_intro(
                        f.clone(),
                        phi.clone(),
                        Proof::imp_elim(
                            Proof::hyp(k, nb.clone()),
                            Proof::imp_elim(
                                Proof::hyp(f, phi.clone()),
                                Proof::hyp(x.clone(), (**a).clone()),
                            ),
                        ),
                    ),
                ),
            );
            let proof = Proof::imp_intro(
                d.clone(),
                nn(phi),
                Proof::imp_intro(x, (**a).clone(), sb.apply(inner)),
            );
            Ok(ImpPf::new(nn(phi), phi.clone(), proof))
        }
        Formula::And(a, b) => {
            let sa = stab(a, g)?;
            let sb = stab(b, g)?;
            let d = g.fresh("h");
            let mk = |proj_left: bool, s: &ImpPf, g: &mut Names| -> Proof {
                let k = g.fresh("h");
                let p = g.fresh("h");
                let part = if proj_left {
                    Proof::and_elim0(Proof::hyp(p.clone(), phi.clone()))
                } else {
                    Proof::and_elim1(Proof::hyp(p.clone(), phi.clone()))
                };
                let nf = Formula::not(s.to.clone());
                s.apply(Proof::imp_intro(
                    k.clone(),
                    nf.clone(),
                    Proof::imp_elim(
                        Proof::hyp(d.clone(), nn(phi)),
                        Proof::imp_intro(
                            p.clone(),
                            phi.clone(),
                            Proof::imp_elim(Proof::hyp(k.clone(), nf.clone()), part),
                        ),
                    ),
                ))
            };
            let left = mk(true, &sa, g);
            let right = mk(false, &sb, g);
            let proof =
                Proof::imp_intro(d, nn(phi), Proof::and_intro(left, right));
            Ok(ImpPf::new(nn(phi), phi.clone(), proof))
        }
        Formula::All(x, body) => {
            let sbody = stab(body, g)?;
            let d = g.fresh("h");
            let k = g.fresh("h");
            let c = g.fresh("h");
            let nbody = Formula::not((**body).clone());
            let inner = Proof::imp_intro(
                k.clone(),
                nbody.clone(),
                Proof::imp_elim(
                    Proof::hyp(d.clone(), nn(phi)),
                    Proof::imp_intro(
                        c.clone(),
                        phi.clone(),
                        Proof::imp_elim(
                            Proof::hyp(k, nbody.clone()),
                            Proof::all_elim(Term::var(x), Proof::hyp(c, phi.clone())),
                        ),
                    ),
                ),
            );
            let proof = Proof::imp_intro(
                d,
                nn(phi),
                Proof::all_intro(x, sbody.apply(inner)),
            );
            Ok(ImpPf::new(nn(phi), phi.clone(), proof))
        }
        Formula::Or(..) | Formula::Ex(..) => Err(LemmaError::NotStable(phi.to_string())),
    }
}

/// Minimal-logic ex falso `⊥ → φ` for formulas whose leaves under `∧`, `→`,
/// `∀` are `⊥` or negations; covers all Gödel-Gentzen images.
pub(crate) fn efq_neg(phi: &Formula, g: &mut Names) -> Result<ImpPf, LemmaError> {
    let b = g.fresh("h");
    let body = efq_neg_body(phi, Proof::hyp(b.clone(), Formula::Bot), g)?;
    Ok(ImpPf::new(
        Formula::Bot,
        phi.clone(),
        Proof::imp_intro(b, Formula::Bot, body),
    ))
}

fn efq_neg_body(phi: &Formula, bot: Proof, g: &mut Names) -> Result<Proof, LemmaError> {
    match phi {
        Formula::Bot => Ok(bot),
        Formula::Imp(a, c) => {
            let x = g.fresh("h");
            let inner = efq_neg_body(c, bot, g)?;
            Ok(Proof::imp_intro(x, (**a).clone(), inner))
        }
        Formula::And(a, c) => {
            let pa = efq_neg_body(a, bot.clone(), g)?;
            let pc = efq_neg_body(c, bot, g)?;
            Ok(Proof::and_intro(pa, pc))
        }
        Formula::All(x, body) => {
            let inner = efq_neg_body(body, bot, g)?;
            Ok(Proof::all_intro(x, inner))
        }
        _ => Err(LemmaError::NoEfq(phi.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check, ha_axioms, LogicMode};
    use crate::logic::Signature;

    fn assert_minimal(p: &Proof, concl: &Formula) {
        let theory = ha_axioms(&Signature::arith_with_test_relations());
        let j = check(p, LogicMode::Minimal, &theory).unwrap();
        assert!(j.hypotheses.is_empty(), "lemma has open hypotheses");
        assert_eq!(&j.conclusion, concl);
    }

    fn atom(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    #[test]
    fn dni_checks() {
        let mut g = Names::new();
        let p = dni(&atom("p"), &mut g);
        assert_minimal(&p.proof, &Formula::imp(atom("p"), Formula::not(Formula::not(atom("p")))));
    }

    #[test]
    fn collapse_checks() {
        let mut g = Names::new();
        let p = collapse(&atom("p"), &mut g);
        assert_minimal(
            &p.proof,
            &Formula::imp(
                Formula::not(Formula::not(Formula::not(atom("p")))),
                Formula::not(atom("p")),
            ),
        );
    }

    #[test]
    fn stability_of_negative_shapes() {
        let mut g = Names::new();
        // ¬p, ¬p ∧ ¬q, ∀x ¬A(x), (p → ¬q)
        let shapes = vec![
            Formula::not(atom("p")),
            Formula::and(Formula::not(atom("p")), Formula::not(atom("q"))),
            Formula::all("x", Formula::not(Formula::atom("A", vec![Term::var("x")]))),
            Formula::imp(atom("p"), Formula::not(atom("q"))),
            Formula::eq(Term::var("s"), Term::var("t")),
        ];
        for phi in shapes {
            let s = stab(&phi, &mut g).unwrap();
            assert_minimal(
                &s.proof,
                &Formula::imp(Formula::not(Formula::not(phi.clone())), phi.clone()),
            );
        }
    }

    #[test]
    fn stability_rejects_disjunction() {
        let mut g = Names::new();
        assert!(stab(&Formula::or(atom("p"), atom("q")), &mut g).is_err());
    }

    #[test]
    fn efq_for_negative_shapes() {
        let mut g = Names::new();
        let shapes = vec![
            Formula::not(atom("p")),
            Formula::not(Formula::not(atom("p"))),
            Formula::all("x", Formula::not(Formula::atom("A", vec![Term::var("x")]))),
            Formula::and(Formula::not(atom("p")), Formula::Bot),
        ];
        for phi in shapes {
            let e = efq_neg(&phi, &mut g).unwrap();
            assert_minimal(&e.proof, &Formula::imp(Formula::Bot, phi.clone()));
        }
        assert!(efq_neg(&atom("p"), &mut g).is_err());
    }

    #[test]
    fn congruence_under_quantifiers() {
        let mut g = Names::new();
        let a = Formula::atom("A", vec![Term::var("x")]);
        // x-pointwise refl, lifted to ∀ and ∃
        let base = IffPf::refl(&a, &mut g);
        let all = base.cong_all("x", &mut g);
        assert_minimal(
            &all.clone().into_proof(),
            &Formula::iff(Formula::all("x", a.clone()), Formula::all("x", a.clone())),
        );
        let base = IffPf::refl(&a, &mut g);
        let ex = base.cong_ex("x", &mut g);
        assert_minimal(
            &ex.into_proof(),
            &Formula::iff(Formula::ex("x", a.clone()), Formula::ex("x", a)),
        );
    }

    #[test]
    fn nn_map_checks() {
        let mut g = Names::new();
        let ab = imp_id(&atom("p"), &mut g);
        let m = nn_map(&ab, &mut g);
        assert_minimal(
            &m.proof,
            &Formula::imp(
                Formula::not(Formula::not(atom("p"))),
                Formula::not(Formula::not(atom("p"))),
            ),
        );
    }
}
