//! Synthesis of kernel-checked equivalence proofs between the translations.
//!
//! For each translation `V` this module builds, by structural induction, a
//! closed proof relating `φ^V` to the Gödel-Gentzen image `φ^N`: full
//! equivalences for the Krivine and `M` translations in minimal logic and
//! for Kuroda in intuitionistic logic (one direction of the implication
//! clause needs ex falso), and the single direction `φ^N → φ^awk` for the
//! awkward translation. The `M` and `awk` cases lean on the complement
//! bridges of the arithmetic theory, so their proofs carry axiom leaves;
//! Krivine and Kuroda are pure logic.
//!
//! The inductions maintain one invariant per translation:
//! `N(φ) ↔ ¬φ_Kr`, `N(φ) ↔ ¬¬ku_core(φ)`, and `¬(∼φ)_M ↔ N(φ)` together
//! with the bridge `(∼φ)^N ↔ ¬φ^N`.

use super::{
    godel_gentzen, krivine_matrix, kuroda_core, m_core, DntError, DntOptions, TranslationName,
};
use crate::kernel::builder::{collapse, dni, stab, IffPf, ImpPf, Names};
use crate::kernel::{AxiomInstance, LogicMode, Proof};
use crate::logic::{neg_raw, to_nnf, Formula, Signature, Term};

/// A synthesized, kernel-checkable proof relating a translation to `N`.
#[derive(Debug, Clone)]
pub struct EquivProof {
    pub name: TranslationName,
    /// Mode the proof is valid in (`minimal` except for Kuroda).
    pub mode: LogicMode,
    /// What the proof concludes: an `iff`, or a single implication for awk.
    pub conclusion: Formula,
    pub proof: Proof,
}

fn not(f: Formula) -> Formula {
    Formula::not(f)
}

fn nn(f: &Formula) -> Formula {
    Formula::not(Formula::not(f.clone()))
}

fn lam(g: &mut Names, ante: &Formula, body: impl FnOnce(&mut Names, Proof) -> Proof) -> Proof {
    let l = g.fresh("h");
    let h = Proof::hyp(l.clone(), ante.clone());
    Proof::imp_intro(l, ante.clone(), body(g, h))
}

fn app(f: Proof, a: Proof) -> Proof {
    Proof::imp_elim(f, a)
}

fn n_of(phi: &Formula) -> Formula {
    godel_gentzen(phi, false)
}

/// Synthesize the equivalence (or, for awk, the implication) between
/// `φ^name` and `φ^N`. `M` and awk translate the negation-normal form of
/// `φ`; the returned conclusion records exactly what was proved.
pub fn synth_equiv(
    sig: &Signature,
    phi: &Formula,
    name: TranslationName,
    opts: &DntOptions,
) -> Result<EquivProof, DntError> {
    let mut g = Names::new();
    match name {
        TranslationName::N => {
            let n = n_of(phi);
            let iff = IffPf::refl(&n, &mut g);
            Ok(EquivProof {
                name,
                mode: LogicMode::Minimal,
                conclusion: Formula::iff(n.clone(), n),
                proof: iff.into_proof(),
            })
        }
        TranslationName::Krivine => {
            let iff = kr_iff(phi, &mut g).sym();
            let conclusion = Formula::iff(iff.lhs.clone(), iff.rhs.clone());
            Ok(EquivProof {
                name,
                mode: LogicMode::Minimal,
                conclusion,
                proof: iff.into_proof(),
            })
        }
        TranslationName::Kuroda => {
            let iff = ku_iff(phi, &mut g).sym();
            let conclusion = Formula::iff(iff.lhs.clone(), iff.rhs.clone());
            Ok(EquivProof {
                name,
                mode: LogicMode::Intuitionistic,
                conclusion,
                proof: iff.into_proof(),
            })
        }
        TranslationName::M => {
            let nnf = to_nnf(sig, phi).map_err(|e| DntError::Lemma(e.to_string()))?;
            let iff = m_iff(nnf.formula(), opts.m_conj_variant, &mut g)?;
            let conclusion = Formula::iff(iff.lhs.clone(), iff.rhs.clone());
            Ok(EquivProof {
                name,
                mode: LogicMode::Minimal,
                conclusion,
                proof: iff.into_proof(),
            })
        }
        TranslationName::Awk => {
            let nnf = to_nnf(sig, phi).map_err(|e| DntError::Lemma(e.to_string()))?;
            let dir = awk_dir(nnf.formula(), &mut g)?;
            let conclusion = Formula::imp(dir.from.clone(), dir.to.clone());
            Ok(EquivProof {
                name,
                mode: LogicMode::Minimal,
                conclusion,
                proof: dir.proof,
            })
        }
    }
}

/// `¬¬φ ↔ φ` for the stable class.
fn stab_iff(phi: &Formula, g: &mut Names) -> Result<IffPf, DntError> {
    let s = stab(phi, g).map_err(|e| DntError::Lemma(e.to_string()))?;
    let d = dni(phi, g);
    Ok(IffPf::new(nn(phi), phi.clone(), s.proof, d.proof))
}

// ---------------------------------------------------------------------
// Krivine: invariant N(φ) ↔ ¬φ_Kr
// ---------------------------------------------------------------------

fn kr_iff(phi: &Formula, g: &mut Names) -> IffPf {
    let lhs = n_of(phi);
    let rhs = not(krivine_matrix(phi));
    let result = match phi {
        Formula::Bot => {
            // ⊥ ↔ ¬¬⊥
            let fwd = dni(&Formula::Bot, g).proof;
            let bwd = stab(&Formula::Bot, g).expect("bottom is stable").proof;
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Atom(..) | Formula::NegAtom(..) => IffPf::refl(&nn(phi), g),
        Formula::Imp(a, b) if matches!(**b, Formula::Bot) => kr_iff(a, g).cong_not(g),
        Formula::Imp(a, b) => {
            let ia = kr_iff(a, g);
            let ib = kr_iff(b, g);
            let na = ia.lhs.clone();
            let (ka, kb) = (krivine_matrix(a), krivine_matrix(b));
            let matrix = Formula::and(not(ka.clone()), kb.clone());
            // fwd: λf. λp. (ib.fwd (f (ia.bwd p.0))) p.1
            let fwd = lam(g, &lhs, |g, f| {
                lam(g, &matrix, |_g2, p| {
                    let aa = app(ia.bwd.clone(), Proof::and_elim0(p.clone()));
                    let bb = app(f, aa);
                    app(app(ib.fwd.clone(), bb), Proof::and_elim1(p))
                })
            });
            // bwd: λm. λa. ib.bwd (λl. m ⟨ia.fwd a, l⟩)
            let bwd = lam(g, &rhs, |g, m| {
                lam(g, &na, |g, ha| {
                    let nk = app(ia.fwd.clone(), ha);
                    let nl = lam(g, &kb, |_g2, l| app(m, Proof::and_intro(nk.clone(), l)));
                    app(ib.bwd.clone(), nl)
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::And(a, b) => {
            let ia = kr_iff(a, g);
            let ib = kr_iff(b, g);
            let (ka, kb) = (krivine_matrix(a), krivine_matrix(b));
            let disj = Formula::or(ka.clone(), kb.clone());
            // fwd: λc. λd. case d of k ⇒ (ia.fwd c.0) k | l ⇒ (ib.fwd c.1) l
            let fwd = lam(g, &lhs, |g, c| {
                lam(g, &disj, |g, d| {
                    let lk = g.fresh("h");
                    let lr = g.fresh("h");
                    Proof::or_elim(
                        d,
                        lk.clone(),
                        app(
                            app(ia.fwd.clone(), Proof::and_elim0(c.clone())),
                            Proof::hyp(lk, ka.clone()),
                        ),
                        lr.clone(),
                        app(
                            app(ib.fwd.clone(), Proof::and_elim1(c.clone())),
                            Proof::hyp(lr, kb.clone()),
                        ),
                    )
                })
            });
            // bwd: λn. ⟨ia.bwd (λk. n (inl k)), ib.bwd (λl. n (inr l))⟩
            let bwd = lam(g, &rhs, |g, n| {
                let left = app(
                    ia.bwd.clone(),
                    lam(g, &ka, |_g2, k| app(n.clone(), Proof::or_intro0(k, kb.clone()))),
                );
                let right = app(
                    ib.bwd.clone(),
                    lam(g, &kb, |_g2, l| app(n.clone(), Proof::or_intro1(ka.clone(), l))),
                );
                Proof::and_intro(left, right)
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Or(a, b) => {
            let ia = kr_iff(a, g);
            let ib = kr_iff(b, g);
            let (na, nb) = (ia.lhs.clone(), ib.lhs.clone());
            let (ka, kb) = (krivine_matrix(a), krivine_matrix(b));
            let conj = Formula::and(ka.clone(), kb.clone());
            // fwd: λn. λq. n ⟨λa. (ia.fwd a) q.0, λb. (ib.fwd b) q.1⟩
            let fwd = lam(g, &lhs, |g, n| {
                lam(g, &conj, |g, q| {
                    let pa = lam(g, &na, |_g2, ha| {
                        app(app(ia.fwd.clone(), ha), Proof::and_elim0(q.clone()))
                    });
                    let pb = lam(g, &nb, |_g2, hb| {
                        app(app(ib.fwd.clone(), hb), Proof::and_elim1(q.clone()))
                    });
                    app(n, Proof::and_intro(pa, pb))
                })
            });
            // bwd: λm. λp. (λk¬. p.0 (ia.bwd k¬)) ... double-negation shuffle
            let bwd = lam(g, &rhs, |g, m| {
                let inner = Formula::and(not(na.clone()), not(nb.clone()));
                lam(g, &inner, |g, p| {
                    let d1 = lam(g, &not(ka.clone()), |_g2, k| {
                        app(Proof::and_elim0(p.clone()), app(ia.bwd.clone(), k))
                    });
                    let d2 = lam(g, &not(kb.clone()), |_g2, l| {
                        app(Proof::and_elim1(p.clone()), app(ib.bwd.clone(), l))
                    });
                    let body = lam(g, &ka, |g, k| {
                        let inner2 = lam(g, &kb, |_g2, l| {
                            app(m.clone(), Proof::and_intro(k.clone(), l))
                        });
                        app(d2.clone(), inner2)
                    });
                    app(d1, body)
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::All(x, a) => {
            let ia = kr_iff(a, g);
            let ka = krivine_matrix(a);
            let exk = Formula::ex(x.clone(), ka.clone());
            // fwd: λc. λe. ∃E e (x, hk). (ia.fwd (c x)) hk
            let fwd = lam(g, &lhs, |g, c| {
                lam(g, &exk, |g, e| {
                    let hk = g.fresh("h");
                    Proof::ex_elim(
                        e,
                        x.clone(),
                        hk.clone(),
                        app(
                            app(ia.fwd.clone(), Proof::all_elim(Term::var(x.clone()), c.clone())),
                            Proof::hyp(hk, ka.clone()),
                        ),
                    )
                })
            });
            // bwd: λn. ∀I x. ia.bwd (λk. n (∃I x k))
            let bwd = lam(g, &rhs, |g, n| {
                let per_x = lam(g, &ka, |_g2, k| {
                    app(n.clone(), Proof::ex_intro(exk.clone(), Term::var(x.clone()), k))
                });
                Proof::all_intro(x.clone(), app(ia.bwd.clone(), per_x))
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Ex(x, a) => {
            let ia = kr_iff(a, g);
            let na = ia.lhs.clone();
            let ka = krivine_matrix(a);
            let allna = Formula::all(x.clone(), not(na.clone()));
            let exnk = Formula::ex(x.clone(), not(ka.clone()));
            // inner: ∀x ¬N(a) ↔ ¬∃x ¬K
            let jfwd = lam(g, &allna, |g, c| {
                lam(g, &exnk, |g, e| {
                    let ha = g.fresh("h");
                    Proof::ex_elim(
                        e,
                        x.clone(),
                        ha.clone(),
                        app(
                            Proof::all_elim(Term::var(x.clone()), c.clone()),
                            app(ia.bwd.clone(), Proof::hyp(ha, not(ka.clone()))),
                        ),
                    )
                })
            });
            let jbwd = lam(g, &not(exnk.clone()), |g, m| {
                let per_x = lam(g, &na, |_g2, p| {
                    app(
                        m.clone(),
                        Proof::ex_intro(
                            exnk.clone(),
                            Term::var(x.clone()),
                            app(ia.fwd.clone(), p),
                        ),
                    )
                });
                Proof::all_intro(x.clone(), per_x)
            });
            let j = IffPf::new(allna, not(exnk), jfwd, jbwd);
            j.cong_not(g)
        }
    };
    debug_assert_eq!(result.lhs, lhs, "Krivine invariant lhs for {phi}");
    debug_assert_eq!(result.rhs, rhs, "Krivine invariant rhs for {phi}");
    result
}

// ---------------------------------------------------------------------
// Kuroda: invariant N(φ) ↔ ¬¬ku_core(φ)
// ---------------------------------------------------------------------

fn ku_iff(phi: &Formula, g: &mut Names) -> IffPf {
    let lhs = n_of(phi);
    let core = kuroda_core(phi);
    let rhs = nn(&core);
    let result = match phi {
        Formula::Bot => {
            let fwd = dni(&Formula::Bot, g).proof;
            let bwd = stab(&Formula::Bot, g).expect("bottom is stable").proof;
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Atom(..) | Formula::NegAtom(..) => {
            // ¬¬θ ↔ ¬¬¬¬θ
            let fwd = dni(&nn(phi), g).proof;
            let bwd = collapse(&not(phi.clone()), g).proof;
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::And(a, b) => {
            let ia = ku_iff(a, g);
            let ib = ku_iff(b, g);
            let (sa, sb) = (kuroda_core(a), kuroda_core(b));
            let pair = Formula::and(sa.clone(), sb.clone());
            // fwd: λc. λn. (ia.fwd c.0)(λx. (ib.fwd c.1)(λy. n ⟨x,y⟩))
            let fwd = lam(g, &lhs, |g, c| {
                lam(g, &not(pair.clone()), |g, n| {
                    let inner = lam(g, &sa, |g, x| {
                        let deeper = lam(g, &sb, |_g2, y| {
                            app(n.clone(), Proof::and_intro(x.clone(), y))
                        });
                        app(app(ib.fwd.clone(), Proof::and_elim1(c.clone())), deeper)
                    });
                    app(app(ia.fwd.clone(), Proof::and_elim0(c.clone())), inner)
                })
            });
            // bwd: λm. ⟨ia.bwd (λk. m (λp. k p.0)), ib.bwd (λk. m (λp. k p.1))⟩
            let bwd = lam(g, &rhs, |g, m| {
                let mk = |left: bool, g: &mut Names, m: &Proof| {
                    let target = if left { sa.clone() } else { sb.clone() };
                    lam(g, &not(target.clone()), |g, k| {
                        let sel = lam(g, &pair, |_g2, p| {
                            let part = if left {
                                Proof::and_elim0(p)
                            } else {
                                Proof::and_elim1(p)
                            };
                            app(k.clone(), part)
                        });
                        app(m.clone(), sel)
                    })
                };
                let da = mk(true, g, &m);
                let db = mk(false, g, &m);
                Proof::and_intro(app(ia.bwd.clone(), da), app(ib.bwd.clone(), db))
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Or(a, b) => {
            let ia = ku_iff(a, g);
            let ib = ku_iff(b, g);
            let (na, nb) = (ia.lhs.clone(), ib.lhs.clone());
            let (sa, sb) = (kuroda_core(a), kuroda_core(b));
            let disj = Formula::or(sa.clone(), sb.clone());
            // fwd: λn. λm. n ⟨λa. (ia.fwd a)(λx. m (inl x)), λb. (ib.fwd b)(λy. m (inr y))⟩
            let fwd = lam(g, &lhs, |g, n| {
                lam(g, &not(disj.clone()), |g, m| {
                    let pa = lam(g, &na, |g, ha| {
                        let kx = lam(g, &sa, |_g2, x| {
                            app(m.clone(), Proof::or_intro0(x, sb.clone()))
                        });
                        app(app(ia.fwd.clone(), ha), kx)
                    });
                    let pb = lam(g, &nb, |g, hb| {
                        let ky = lam(g, &sb, |_g2, y| {
                            app(m.clone(), Proof::or_intro1(sa.clone(), y))
                        });
                        app(app(ib.fwd.clone(), hb), ky)
                    });
                    app(n, Proof::and_intro(pa, pb))
                })
            });
            // bwd: λd. λp. d (λc. case c of x ⇒ p.0 (ia.bwd (dni x)) | y ⇒ p.1 (ib.bwd (dni y)))
            let bwd = lam(g, &rhs, |g, d| {
                let inner = Formula::and(not(na.clone()), not(nb.clone()));
                lam(g, &inner, |g, p| {
                    let lx = g.fresh("h");
                    let ly = g.fresh("h");
                    let dnia = dni(&sa, g);
                    let dnib = dni(&sb, g);
                    let case = lam(g, &disj, |_g2, c| {
                        Proof::or_elim(
                            c,
                            lx.clone(),
                            app(
                                Proof::and_elim0(p.clone()),
                                app(ia.bwd.clone(), dnia.apply(Proof::hyp(lx.clone(), sa.clone()))),
                            ),
                            ly.clone(),
                            app(
                                Proof::and_elim1(p.clone()),
                                app(ib.bwd.clone(), dnib.apply(Proof::hyp(ly.clone(), sb.clone()))),
                            ),
                        )
                    });
                    app(d, case)
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Imp(a, b) => {
            let ia = ku_iff(a, g);
            let ib = ku_iff(b, g);
            let na = ia.lhs.clone();
            let (sa, sb) = (kuroda_core(a), kuroda_core(b));
            let core_imp = Formula::imp(sa.clone(), sb.clone());
            // fwd (intuitionistic): λf. λn.
            //   (ib.fwd (f (ia.bwd (λk. n (λx. botE (k x)))))) (λy. n (λ_. y))
            let fwd = lam(g, &lhs, |g, f| {
                lam(g, &not(core_imp.clone()), |g, n| {
                    let da = lam(g, &not(sa.clone()), |g, k| {
                        let blow = lam(g, &sa, |_g2, x| {
                            Proof::bot_elim(sb.clone(), app(k.clone(), x))
                        });
                        app(n.clone(), blow)
                    });
                    let ha = app(ia.bwd.clone(), da);
                    let hb = app(f, ha);
                    let nb = lam(g, &sb, |g, y| {
                        let discard = lam(g, &sa, |_g2, _x| y.clone());
                        app(n.clone(), discard)
                    });
                    app(app(ib.fwd.clone(), hb), nb)
                })
            });
            // bwd: λd. λa. ib.bwd (λk. d (λg. (ia.fwd a)(λx. k (g x))))
            let bwd = lam(g, &rhs, |g, d| {
                lam(g, &na, |g, ha| {
                    let kk = lam(g, &not(sb.clone()), |g, k| {
                        let use_g = lam(g, &core_imp, |g, gg| {
                            let feed = lam(g, &sa, |_g2, x| {
                                app(k.clone(), app(gg.clone(), x))
                            });
                            app(app(ia.fwd.clone(), ha.clone()), feed)
                        });
                        app(d.clone(), use_g)
                    });
                    app(ib.bwd.clone(), kk)
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::All(x, a) => {
            let ia = ku_iff(a, g);
            let sa = kuroda_core(a);
            let core_all = Formula::all(x.clone(), nn(&sa));
            // fwd: λc. dni (∀I x. ia.fwd (c x))
            let fwd = lam(g, &lhs, |g, c| {
                let all = Proof::all_intro(
                    x.clone(),
                    app(ia.fwd.clone(), Proof::all_elim(Term::var(x.clone()), c)),
                );
                dni(&core_all, g).apply(all)
            });
            // bwd: λd. ∀I x. ia.bwd (λk. d (λg. (g x) k))
            let bwd = lam(g, &rhs, |g, d| {
                let per_x = {
                    let kk = lam(g, &not(sa.clone()), |g, k| {
                        let use_g = lam(g, &core_all, |_g2, gg| {
                            app(Proof::all_elim(Term::var(x.clone()), gg), k.clone())
                        });
                        app(d.clone(), use_g)
                    });
                    app(ia.bwd.clone(), kk)
                };
                Proof::all_intro(x.clone(), per_x)
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Ex(x, a) => {
            let ia = ku_iff(a, g);
            let na = ia.lhs.clone();
            let sa = kuroda_core(a);
            let core_ex = Formula::ex(x.clone(), sa.clone());
            let allnna = Formula::all(x.clone(), not(na.clone()));
            // fwd: λn. λm. n (∀I x. λp. (ia.fwd p)(λq. m (∃I x q)))
            let fwd = lam(g, &lhs, |g, n| {
                lam(g, &not(core_ex.clone()), |g, m| {
                    let per_x = lam(g, &na, |g, p| {
                        let kq = lam(g, &sa, |_g2, q| {
                            app(
                                m.clone(),
                                Proof::ex_intro(core_ex.clone(), Term::var(x.clone()), q),
                            )
                        });
                        app(app(ia.fwd.clone(), p), kq)
                    });
                    app(n, Proof::all_intro(x.clone(), per_x))
                })
            });
            // bwd: λd. λc. d (λe. ∃E e (x, hq). (c x) (ia.bwd (dni hq)))
            let bwd = lam(g, &rhs, |g, d| {
                lam(g, &allnna, |g, c| {
                    let hq = g.fresh("h");
                    let dnia = dni(&sa, g);
                    let case = lam(g, &core_ex, |_g2, e| {
                        Proof::ex_elim(
                            e,
                            x.clone(),
                            hq.clone(),
                            app(
                                Proof::all_elim(Term::var(x.clone()), c.clone()),
                                app(
                                    ia.bwd.clone(),
                                    dnia.apply(Proof::hyp(hq.clone(), sa.clone())),
                                ),
                            ),
                        )
                    });
                    app(d, case)
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
    };
    debug_assert_eq!(result.lhs, lhs, "Kuroda invariant lhs for {phi}");
    debug_assert_eq!(result.rhs, rhs, "Kuroda invariant rhs for {phi}");
    result
}

// ---------------------------------------------------------------------
// Complement bridges and the N-image of the classical negation
// ---------------------------------------------------------------------

/// `¬θ̄ ↔ ¬¬θ` for atomic θ, where `θ̄` is the complemented atom. Uses the
/// compl-i / compl-e axioms.
fn compl_nn(theta: &Formula, g: &mut Names) -> IffPf {
    let comp = neg_raw(theta); // atomic flip
    let lhs = not(comp.clone());
    let rhs = nn(theta);
    // fwd: λn. λk. n (compl-i k)
    let fwd = lam(g, &lhs, |g, n| {
        lam(g, &not(theta.clone()), |_g2, k| {
            app(n, app(Proof::Axiom(AxiomInstance::ComplIntro(theta.clone())), k))
        })
    });
    // bwd: λd. λc. d (λt. (compl-e c) t)
    let bwd = lam(g, &rhs, |g, d| {
        lam(g, &comp, |g, c| {
            let inner = lam(g, theta, |_g2, t| {
                app(app(Proof::Axiom(AxiomInstance::ComplElim(theta.clone())), c.clone()), t)
            });
            app(d, inner)
        })
    });
    IffPf::new(lhs, rhs, fwd, bwd)
}

/// `(∼φ)^N ↔ ¬φ^N` for φ in strict negation-normal form.
fn l_iff(phi: &Formula, g: &mut Names) -> Result<IffPf, DntError> {
    let lhs = n_of(&neg_raw(phi));
    let rhs = not(n_of(phi));
    let result = match phi {
        // compl_nn(θ) : ¬θ̄ ↔ ¬¬θ lifts under one negation to the goal
        Formula::Atom(..) | Formula::NegAtom(..) => compl_nn(phi, g).cong_not(g),
        Formula::And(a, b) => {
            // (∼a ∨ ∼b)^N = ¬(¬(∼a)^N ∧ ¬(∼b)^N) ↔ ¬(¬¬aN ∧ ¬¬bN) ↔ ¬(aN ∧ bN)
            let la = l_iff(a, g)?;
            let lb = l_iff(b, g)?;
            let step1 = crate::kernel::builder::cong_and(
                &la.cong_not(g),
                &lb.cong_not(g),
                g,
            )
            .cong_not(g);
            let stab_a = stab_iff(&n_of(a), g)?;
            let stab_b = stab_iff(&n_of(b), g)?;
            let step2 = crate::kernel::builder::cong_and(&stab_a, &stab_b, g).cong_not(g);
            step1.trans(&step2, g)
        }
        Formula::Or(a, b) => {
            // (∼a ∧ ∼b)^N = (∼a)^N ∧ (∼b)^N ↔ ¬aN ∧ ¬bN ↔ ¬¬(¬aN ∧ ¬bN)
            let la = l_iff(a, g)?;
            let lb = l_iff(b, g)?;
            let step1 = crate::kernel::builder::cong_and(&la, &lb, g);
            let inner = Formula::and(not(n_of(a)), not(n_of(b)));
            let step2 = stab_iff(&inner, g)?.sym();
            step1.trans(&step2, g)
        }
        Formula::All(x, a) => {
            // (∃x ∼a)^N = ¬∀x¬(∼a)^N ↔ ¬∀x¬¬aN ↔ ¬∀x aN
            let la = l_iff(a, g)?;
            let step1 = la.cong_not(g).cong_all(x, g).cong_not(g);
            let stab_a = stab_iff(&n_of(a), g)?;
            let step2 = stab_a.cong_all(x, g).cong_not(g);
            step1.trans(&step2, g)
        }
        Formula::Ex(x, a) => {
            // (∀x ∼a)^N = ∀x (∼a)^N ↔ ∀x ¬aN ↔ ¬¬∀x ¬aN
            let la = l_iff(a, g)?;
            let step1 = la.cong_all(x, g);
            let inner = Formula::all(x.clone(), not(n_of(a)));
            let step2 = stab_iff(&inner, g)?.sym();
            step1.trans(&step2, g)
        }
        Formula::Bot | Formula::Imp(..) => {
            return Err(DntError::Lemma(format!(
                "negation bridge applied outside strict NNF: {phi}"
            )))
        }
    };
    debug_assert_eq!(result.lhs, lhs, "L-lemma lhs for {phi}");
    debug_assert_eq!(result.rhs, rhs, "L-lemma rhs for {phi}");
    Ok(result)
}

// ---------------------------------------------------------------------
// M: invariant ¬(∼φ)_M ↔ N(φ)
// ---------------------------------------------------------------------

/// `¬m_core(φ) ↔ ¬N(φ)`: the composition of the invariant at `∼φ` with the
/// negation bridge.
fn m_u(phi: &Formula, variant: bool, g: &mut Names) -> Result<IffPf, DntError> {
    let at_neg = m_iff(&neg_raw(phi), variant, g)?; // ¬ m_core(φ) ↔ (∼φ)^N
    let bridge = l_iff(phi, g)?; // (∼φ)^N ↔ ¬φ^N
    Ok(at_neg.trans(&bridge, g))
}

fn m_iff(phi: &Formula, variant: bool, g: &mut Names) -> Result<IffPf, DntError> {
    let lhs = not(m_core(&neg_raw(phi), variant));
    let rhs = n_of(phi);
    let result = match phi {
        Formula::Bot => {
            // ∼⊥ is the true atom 0=0: ¬(0=0) ↔ ⊥, via reflexivity
            let tr = Formula::eq(Term::zero(), Term::zero());
            let fwd = lam(g, &not(tr.clone()), |_g2, n| {
                app(n, Proof::Axiom(AxiomInstance::EqRefl(Term::zero())))
            });
            let bwd = lam(g, &Formula::Bot, |g, b| lam(g, &tr, |_g2, _t| b));
            IffPf::new(not(tr), Formula::Bot, fwd, bwd)
        }
        // compl_nn(θ) : ¬θ̄ ↔ ¬¬θ is exactly the invariant at an atom
        Formula::Atom(..) | Formula::NegAtom(..) => compl_nn(phi, g),
        Formula::And(a, b) => {
            let ia = m_iff(a, variant, g)?;
            let ib = m_iff(b, variant, g)?;
            let (xa, xb) = (m_core(&neg_raw(a), variant), m_core(&neg_raw(b), variant));
            let disj = Formula::or(xa.clone(), xb.clone());
            // fwd: λn. ⟨ia.fwd (λx. n (inl x)), ib.fwd (λy. n (inr y))⟩
            let fwd = lam(g, &not(disj.clone()), |g, n| {
                let left = app(
                    ia.fwd.clone(),
                    lam(g, &xa, |_g2, x| app(n.clone(), Proof::or_intro0(x, xb.clone()))),
                );
                let right = app(
                    ib.fwd.clone(),
                    lam(g, &xb, |_g2, y| app(n.clone(), Proof::or_intro1(xa.clone(), y))),
                );
                Proof::and_intro(left, right)
            });
            // bwd: λc. λd. case d of x ⇒ (ia.bwd c.0) x | y ⇒ (ib.bwd c.1) y
            let bwd = lam(g, &rhs, |g, c| {
                lam(g, &disj, |g, d| {
                    let lx = g.fresh("h");
                    let ly = g.fresh("h");
                    Proof::or_elim(
                        d,
                        lx.clone(),
                        app(
                            app(ia.bwd.clone(), Proof::and_elim0(c.clone())),
                            Proof::hyp(lx, xa.clone()),
                        ),
                        ly.clone(),
                        app(
                            app(ib.bwd.clone(), Proof::and_elim1(c.clone())),
                            Proof::hyp(ly, xb.clone()),
                        ),
                    )
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Or(a, b) => {
            if variant {
                // (∼a ∧ ∼b)_M = ¬(m_core(a) ∨ m_core(b))
                let ua = m_u(a, variant, g)?; // ¬U ↔ ¬aN
                let ub = m_u(b, variant, g)?;
                let (u, v) = (m_core(a, variant), m_core(b, variant));
                let disj = Formula::or(u.clone(), v.clone());
                let conj = Formula::and(not(n_of(a)), not(n_of(b)));
                // fwd: λd. λp. d (λc. case c of u ⇒ (ua.bwd p.0) u | v ⇒ (ub.bwd p.1) v)
                let fwd = lam(g, &nn(&disj), |g, d| {
                    lam(g, &conj, |g, p| {
                        let lu = g.fresh("h");
                        let lv = g.fresh("h");
                        let case = lam(g, &disj, |_g2, c| {
                            Proof::or_elim(
                                c,
                                lu.clone(),
                                app(
                                    app(ua.bwd.clone(), Proof::and_elim0(p.clone())),
                                    Proof::hyp(lu.clone(), u.clone()),
                                ),
                                lv.clone(),
                                app(
                                    app(ub.bwd.clone(), Proof::and_elim1(p.clone())),
                                    Proof::hyp(lv.clone(), v.clone()),
                                ),
                            )
                        });
                        app(d, case)
                    })
                });
                // bwd: λm. λn. m ⟨ua.fwd (λu. n (inl u)), ub.fwd (λv. n (inr v))⟩
                let bwd = lam(g, &rhs, |g, m| {
                    lam(g, &not(disj.clone()), |g, n| {
                        let pa = app(
                            ua.fwd.clone(),
                            lam(g, &u, |_g2, hu| {
                                app(n.clone(), Proof::or_intro0(hu, v.clone()))
                            }),
                        );
                        let pb = app(
                            ub.fwd.clone(),
                            lam(g, &v, |_g2, hv| {
                                app(n.clone(), Proof::or_intro1(u.clone(), hv))
                            }),
                        );
                        app(m, Proof::and_intro(pa, pb))
                    })
                });
                IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
            } else {
                let ia = m_iff(a, variant, g)?;
                let ib = m_iff(b, variant, g)?;
                let (xa, xb) = (m_core(&neg_raw(a), variant), m_core(&neg_raw(b), variant));
                let conj = Formula::and(xa.clone(), xb.clone());
                let inner = Formula::and(not(n_of(a)), not(n_of(b)));
                // fwd: λn. λp. (λk. p.0 (ia.fwd k)) ∘ double-negation shuffle
                let fwd = lam(g, &not(conj.clone()), |g, n| {
                    lam(g, &inner, |g, p| {
                        let d1 = lam(g, &not(xa.clone()), |_g2, k| {
                            app(Proof::and_elim0(p.clone()), app(ia.fwd.clone(), k))
                        });
                        let d2 = lam(g, &not(xb.clone()), |_g2, l| {
                            app(Proof::and_elim1(p.clone()), app(ib.fwd.clone(), l))
                        });
                        let body = lam(g, &xa, |g, x| {
                            let inner2 = lam(g, &xb, |_g2, y| {
                                app(n.clone(), Proof::and_intro(x.clone(), y))
                            });
                            app(d2.clone(), inner2)
                        });
                        app(d1, body)
                    })
                });
                // bwd: λm. λq. m ⟨λa'. (ia.bwd a') q.0, λb'. (ib.bwd b') q.1⟩
                let bwd = lam(g, &rhs, |g, m| {
                    lam(g, &conj, |g, q| {
                        let pa = lam(g, &n_of(a), |_g2, ha| {
                            app(app(ia.bwd.clone(), ha), Proof::and_elim0(q.clone()))
                        });
                        let pb = lam(g, &n_of(b), |_g2, hb| {
                            app(app(ib.bwd.clone(), hb), Proof::and_elim1(q.clone()))
                        });
                        app(m, Proof::and_intro(pa, pb))
                    })
                });
                IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
            }
        }
        Formula::All(x, a) => {
            let ia = m_iff(a, variant, g)?;
            let xa = m_core(&neg_raw(a), variant);
            let exx = Formula::ex(x.clone(), xa.clone());
            // fwd: λn. ∀I x. ia.fwd (λx'. n (∃I x x'))
            let fwd = lam(g, &not(exx.clone()), |g, n| {
                let per_x = app(
                    ia.fwd.clone(),
                    lam(g, &xa, |_g2, u| {
                        app(n.clone(), Proof::ex_intro(exx.clone(), Term::var(x.clone()), u))
                    }),
                );
                Proof::all_intro(x.clone(), per_x)
            });
            // bwd: λc. λe. ∃E e (x, hu). (ia.bwd (c x)) hu
            let bwd = lam(g, &rhs, |g, c| {
                lam(g, &exx, |g, e| {
                    let hu = g.fresh("h");
                    Proof::ex_elim(
                        e,
                        x.clone(),
                        hu.clone(),
                        app(
                            app(ia.bwd.clone(), Proof::all_elim(Term::var(x.clone()), c.clone())),
                            Proof::hyp(hu, xa.clone()),
                        ),
                    )
                })
            });
            IffPf::new(lhs.clone(), rhs.clone(), fwd, bwd)
        }
        Formula::Ex(x, a) => {
            let ua = m_u(a, variant, g)?; // ¬U ↔ ¬aN
            let u = m_core(a, variant);
            let exu = Formula::ex(x.clone(), u.clone());
            let allna = Formula::all(x.clone(), not(n_of(a)));
            // inner: ¬∃x U ↔ ∀x ¬aN
            let jfwd = lam(g, &not(exu.clone()), |g, n| {
                let per_x = app(
                    ua.fwd.clone(),
                    lam(g, &u, |_g2, hu| {
                        app(n.clone(), Proof::ex_intro(exu.clone(), Term::var(x.clone()), hu))
                    }),
                );
                Proof::all_intro(x.clone(), per_x)
            });
            let jbwd = lam(g, &allna, |g, c| {
                lam(g, &exu, |g, e| {
                    let hu = g.fresh("h");
                    Proof::ex_elim(
                        e,
                        x.clone(),
                        hu.clone(),
                        app(
                            app(ua.bwd.clone(), Proof::all_elim(Term::var(x.clone()), c.clone())),
                            Proof::hyp(hu, u.clone()),
                        ),
                    )
                })
            });
            let j = IffPf::new(not(exu), allna, jfwd, jbwd);
            j.cong_not(g)
        }
        Formula::Imp(..) => {
            return Err(DntError::Lemma(format!(
                "M synthesis applied outside negation-normal form: {phi}"
            )))
        }
    };
    debug_assert_eq!(result.lhs, lhs, "M invariant lhs for {phi}");
    debug_assert_eq!(result.rhs, rhs, "M invariant rhs for {phi}");
    Ok(result)
}

// ---------------------------------------------------------------------
// awk: the single direction N(φ) → ¬(∼φ)
// ---------------------------------------------------------------------

/// `ψ → ψ^N` for strict NNF ψ.
fn w_imp(psi: &Formula, g: &mut Names) -> Result<ImpPf, DntError> {
    let target = n_of(psi);
    let result = match psi {
        Formula::Atom(..) | Formula::NegAtom(..) => dni(psi, g),
        Formula::And(a, b) => {
            let wa = w_imp(a, g)?;
            let wb = w_imp(b, g)?;
            let proof = lam(g, psi, |_g2, p| {
                Proof::and_intro(
                    wa.apply(Proof::and_elim0(p.clone())),
                    wb.apply(Proof::and_elim1(p)),
                )
            });
            ImpPf::new(psi.clone(), target.clone(), proof)
        }
        Formula::Or(a, b) => {
            let wa = w_imp(a, g)?;
            let wb = w_imp(b, g)?;
            let inner = Formula::and(not(n_of(a)), not(n_of(b)));
            let proof = lam(g, psi, |g, d| {
                lam(g, &inner, |g, q| {
                    let la = g.fresh("h");
                    let lb = g.fresh("h");
                    Proof::or_elim(
                        d,
                        la.clone(),
                        app(
                            Proof::and_elim0(q.clone()),
                            wa.apply(Proof::hyp(la, (**a).clone())),
                        ),
                        lb.clone(),
                        app(
                            Proof::and_elim1(q.clone()),
                            wb.apply(Proof::hyp(lb, (**b).clone())),
                        ),
                    )
                })
            });
            ImpPf::new(psi.clone(), target.clone(), proof)
        }
        Formula::All(x, a) => {
            let wa = w_imp(a, g)?;
            let proof = lam(g, psi, |_g2, c| {
                Proof::all_intro(x.clone(), wa.apply(Proof::all_elim(Term::var(x.clone()), c)))
            });
            ImpPf::new(psi.clone(), target.clone(), proof)
        }
        Formula::Ex(x, a) => {
            let wa = w_imp(a, g)?;
            let allk = Formula::all(x.clone(), not(n_of(a)));
            let proof = lam(g, psi, |g, e| {
                lam(g, &allk, |g, k| {
                    let ha = g.fresh("h");
                    Proof::ex_elim(
                        e,
                        x.clone(),
                        ha.clone(),
                        app(
                            Proof::all_elim(Term::var(x.clone()), k),
                            wa.apply(Proof::hyp(ha, (**a).clone())),
                        ),
                    )
                })
            });
            ImpPf::new(psi.clone(), target.clone(), proof)
        }
        Formula::Bot | Formula::Imp(..) => {
            return Err(DntError::Lemma(format!(
                "embedding lemma applied outside strict NNF: {psi}"
            )))
        }
    };
    debug_assert_eq!(result.to, target);
    Ok(result)
}

/// `N(φ) → ¬(∼φ)` for NNF φ.
fn awk_dir(phi: &Formula, g: &mut Names) -> Result<ImpPf, DntError> {
    let lhs = n_of(phi);
    let neg_phi = neg_raw(phi);
    let rhs = not(neg_phi.clone());
    if matches!(phi, Formula::Bot) {
        // ⊥ → ¬(0=0)
        let proof = lam(g, &Formula::Bot, |g, b| lam(g, &neg_phi, |_g2, _t| b));
        return Ok(ImpPf::new(lhs, rhs, proof));
    }
    let w = w_imp(&neg_phi, g)?; // ∼φ → (∼φ)^N
    let l = l_iff(phi, g)?; // (∼φ)^N ↔ ¬φ^N
    // λp. λa. (l.fwd (w a)) p
    let proof = lam(g, &lhs, |g, p| {
        lam(g, &neg_phi, |_g2, a| {
            app(app(l.fwd.clone(), w.apply(a)), p.clone())
        })
    });
    Ok(ImpPf::new(lhs, rhs, proof))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dnt::{awkward, krivine, kuroda, m_translation};
    use crate::kernel::{check, ha_axioms, Theory};
    use crate::logic::{to_nnf, Signature};

    fn sig() -> Signature {
        Signature::arith_with_test_relations()
    }

    fn atom(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    fn samples() -> Vec<Formula> {
        vec![
            atom("p"),
            Formula::Bot,
            Formula::not(atom("p")),
            Formula::imp(atom("p"), atom("q")),
            Formula::and(atom("p"), Formula::or(atom("q"), atom("r"))),
            Formula::or(Formula::not(atom("p")), Formula::imp(atom("q"), Formula::Bot)),
            Formula::ex("x", Formula::atom("A", vec![Term::var("x")])),
            Formula::all(
                "x",
                Formula::imp(
                    Formula::atom("A", vec![Term::var("x")]),
                    Formula::ex("y", Formula::atom("R", vec![Term::var("x"), Term::var("y")])),
                ),
            ),
            Formula::eq(Term::var("u"), Term::succ(Term::var("v"))),
        ]
    }

    fn check_equiv(e: &EquivProof, theory: &Theory) {
        let j = check(&e.proof, e.mode, theory).unwrap_or_else(|err| {
            panic!("synthesized proof rejected: {err}\nconclusion: {}", e.conclusion)
        });
        assert!(j.hypotheses.is_empty());
        assert_eq!(j.conclusion, e.conclusion);
    }

    #[test]
    fn krivine_equivalences_check_in_minimal_mode() {
        let sig = sig();
        let theory = Theory::pure(&sig);
        for phi in samples() {
            let e = synth_equiv(&sig, &phi, TranslationName::Krivine, &DntOptions::default())
                .unwrap();
            assert_eq!(e.mode, LogicMode::Minimal);
            assert_eq!(
                e.conclusion,
                Formula::iff(krivine(&phi), godel_gentzen(&phi, false))
            );
            check_equiv(&e, &theory);
        }
    }

    #[test]
    fn kuroda_equivalences_check_in_intuitionistic_mode() {
        let sig = sig();
        let theory = Theory::pure(&sig);
        for phi in samples() {
            let e =
                synth_equiv(&sig, &phi, TranslationName::Kuroda, &DntOptions::default()).unwrap();
            assert_eq!(e.mode, LogicMode::Intuitionistic);
            assert_eq!(
                e.conclusion,
                Formula::iff(kuroda(&phi), godel_gentzen(&phi, false))
            );
            check_equiv(&e, &theory);
        }
    }

    #[test]
    fn m_equivalences_check_in_minimal_ha() {
        let sig = sig();
        let theory = ha_axioms(&sig);
        for variant in [false, true] {
            let opts = DntOptions { strengthened: false, m_conj_variant: variant };
            for phi in samples() {
                let e = synth_equiv(&sig, &phi, TranslationName::M, &opts).unwrap();
                assert_eq!(e.mode, LogicMode::Minimal);
                let nnf = to_nnf(&sig, &phi).unwrap();
                assert_eq!(
                    e.conclusion,
                    Formula::iff(
                        m_translation(&nnf, variant),
                        godel_gentzen(nnf.formula(), false)
                    )
                );
                check_equiv(&e, &theory);
            }
        }
    }

    #[test]
    fn awk_single_direction_checks() {
        let sig = sig();
        let theory = ha_axioms(&sig);
        for phi in samples() {
            let e =
                synth_equiv(&sig, &phi, TranslationName::Awk, &DntOptions::default()).unwrap();
            assert_eq!(e.mode, LogicMode::Minimal);
            let nnf = to_nnf(&sig, &phi).unwrap();
            assert_eq!(
                e.conclusion,
                Formula::imp(godel_gentzen(nnf.formula(), false), awkward(&nnf))
            );
            check_equiv(&e, &theory);
        }
    }

    #[test]
    fn atomic_krivine_base_case_is_two_line() {
        // base case: the equivalence for an atom is reflexivity of ¬¬θ
        let sig = sig();
        let e = synth_equiv(&sig, &atom("p"), TranslationName::Krivine, &DntOptions::default())
            .unwrap();
        check_equiv(&e, &Theory::pure(&sig));
    }
}
