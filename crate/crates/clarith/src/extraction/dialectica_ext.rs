//! Dialectica witness extraction from minimal-logic proofs.
//!
//! For a proof of `φ` from hypotheses `ψ_l`, the extraction produces terms
//! for the `∃`-list of `φ^D` together with, per hypothesis, counterexample
//! terms for the `∀`-list of `ψ_l^D`, such that the matrices compose:
//! whenever every hypothesis matrix holds at its counterexamples, the
//! conclusion matrix holds at the witnesses.
//!
//! Hypothesis `∃`-variables appear as free variables `dx_<label>_<i>`;
//! the conclusion's `∀`-variables appear as `dv_<j>`. When a hypothesis is
//! shared between two premises, its two counterexample vectors are merged
//! with a definition by cases over the (quantifier-free, decidable)
//! hypothesis matrix — the contraction step. Induction extracts to a
//! recursor for the witness series and a bounded backward search for the
//! blamed stage on the counterexample side.

use super::{atom_char_term, ExtractError};
use crate::interp::{dialectica, rel_char_term, HFormula, Interpretation};
use crate::kernel::{check, AxiomInstance, LogicMode, Proof, Theory};
use crate::logic::{Formula, Term};
use crate::prt::{stdlib, PrTerm, Ty};
use std::collections::BTreeMap;

fn dx(label: &str, i: usize) -> String {
    format!("dx_{label}_{i}")
}

fn dv(j: usize) -> String {
    format!("dv_{j}")
}

fn embed(t: &Term) -> Result<PrTerm, ExtractError> {
    crate::interp::embed_term(t, &BTreeMap::new()).map_err(|e| ExtractError::Embed(e.to_string()))
}

fn d_of(phi: &Formula) -> Result<Interpretation, ExtractError> {
    dialectica(phi).map_err(|e| ExtractError::Embed(e.to_string()))
}

/// Simultaneous substitution of the canonical `dv_j` variables.
fn subst_dvs(t: &PrTerm, feeds: &[PrTerm]) -> PrTerm {
    let mut out = t.clone();
    for j in 0..feeds.len() {
        out = out.substitute(&dv(j), &PrTerm::var(format!("#tmp_{j}")));
    }
    for (j, feed) in feeds.iter().enumerate() {
        out = out.substitute(&format!("#tmp_{j}"), feed);
    }
    out
}

fn dv_vars(n: usize) -> Vec<PrTerm> {
    (0..n).map(|j| PrTerm::var(dv(j))).collect()
}

fn bundle_terms(ts: &[PrTerm]) -> PrTerm {
    match ts {
        [] => PrTerm::Zero,
        [t] => t.clone(),
        [t, rest @ ..] => PrTerm::pair(t.clone(), bundle_terms(rest)),
    }
}

fn unbundle_terms(v: PrTerm, n: usize) -> Vec<PrTerm> {
    match n {
        0 => vec![],
        1 => vec![v],
        _ => {
            let mut out = vec![PrTerm::p0(v.clone())];
            out.extend(unbundle_terms(PrTerm::p1(v), n - 1));
            out
        }
    }
}

fn bundle_ty(tys: &[Ty]) -> Ty {
    match tys {
        [] => Ty::Nat,
        [t] => t.clone(),
        [t, rest @ ..] => Ty::prod(t.clone(), bundle_ty(rest)),
    }
}

/// Compile a quantifier-free higher-typed formula to its characteristic
/// term: evaluates to `0` exactly on satisfying assignments.
pub(crate) fn char_compile(phi: &HFormula) -> Result<PrTerm, ExtractError> {
    Ok(match phi {
        HFormula::Bot => PrTerm::numeral(1),
        HFormula::Atom(r, args) => {
            let base = rel_char_term(r)
                .ok_or_else(|| ExtractError::NoRealizer(format!("characteristic of `{r}`")))?();
            PrTerm::apps(base, args.iter().cloned())
        }
        HFormula::NegAtom(r, args) => {
            let base = rel_char_term(r)
                .ok_or_else(|| ExtractError::NoRealizer(format!("characteristic of `{r}`")))?();
            PrTerm::ite(
                Ty::Nat,
                PrTerm::apps(base, args.iter().cloned()),
                PrTerm::numeral(1),
                PrTerm::Zero,
            )
        }
        HFormula::And(a, b) => {
            PrTerm::apps(stdlib::add(), [char_compile(a)?, char_compile(b)?])
        }
        HFormula::Or(a, b) => {
            PrTerm::apps(stdlib::mul(), [char_compile(a)?, char_compile(b)?])
        }
        HFormula::Imp(a, b) => {
            PrTerm::ite(Ty::Nat, char_compile(a)?, char_compile(b)?, PrTerm::Zero)
        }
        HFormula::All(..) | HFormula::Ex(..) => {
            return Err(ExtractError::Other(
                "characteristic terms exist only for quantifier-free matrices".into(),
            ))
        }
    })
}

/// The matrix of `ψ^D` instantiated at the hypothesis variables of `label`
/// and the given counterexample terms, as a characteristic term.
fn hyp_matrix_char(
    label: &str,
    psi: &Formula,
    counters: &[PrTerm],
) -> Result<PrTerm, ExtractError> {
    let d = d_of(psi)?;
    let mut matrix = d.matrix.clone();
    for (i, (name, _)) in d.ex.iter().enumerate() {
        matrix = matrix.subst(name, &PrTerm::var(dx(label, i)));
    }
    for ((name, _), c) in d.all.iter().zip(counters) {
        matrix = matrix.subst(name, c);
    }
    char_compile(&matrix)
}

type Counters = BTreeMap<String, Vec<PrTerm>>;

#[derive(Debug, Clone)]
struct DRes {
    wit: Vec<PrTerm>,
    counters: Counters,
}

/// Merge counterexample maps from two premises; a hypothesis used on both
/// sides is resolved by testing its matrix against the first vector.
fn merge(
    c1: Counters,
    c2: Counters,
    hyps: &BTreeMap<String, Formula>,
) -> Result<Counters, ExtractError> {
    let mut out = c1;
    for (label, right) in c2 {
        match out.remove(&label) {
            None => {
                out.insert(label, right);
            }
            Some(left) => {
                let psi = hyps
                    .get(&label)
                    .ok_or_else(|| ExtractError::Other(format!("unknown hypothesis {label}")))?;
                let d = d_of(psi)?;
                let test = hyp_matrix_char(&label, psi, &left)?;
                let merged = left
                    .iter()
                    .zip(&right)
                    .zip(&d.all)
                    .map(|((l, r), (_, ty))| {
                        // matrix true under `left` ⇒ left is no counterexample,
                        // fall through to the right premise's demand
                        PrTerm::ite(ty.clone(), test.clone(), r.clone(), l.clone())
                    })
                    .collect();
                out.insert(label, merged);
            }
        }
    }
    Ok(out)
}

/// Rename one hypothesis' `dx` variables to concrete terms everywhere.
fn feed_hyp(res: &mut DRes, label: &str, feeds: &[PrTerm]) {
    let sub = |t: &PrTerm| {
        let mut out = t.clone();
        for (i, feed) in feeds.iter().enumerate() {
            out = out.substitute(&dx(label, i), feed);
        }
        out
    };
    res.wit = res.wit.iter().map(&sub).collect();
    for v in res.counters.values_mut() {
        *v = v.iter().map(&sub).collect();
    }
}

/// Extract Dialectica witnesses for the conclusion of a closed minimal
/// proof: terms for the `∃`-list of `conclusion^D`.
pub fn extract_dialectica(theory: &Theory, p: &Proof) -> Result<Vec<PrTerm>, ExtractError> {
    check(p, LogicMode::Minimal, theory).map_err(|e| ExtractError::Kernel(e.to_string()))?;
    let (res, _, _) = dext(theory, p)?;
    Ok(res.wit)
}

fn dext(
    theory: &Theory,
    p: &Proof,
) -> Result<(DRes, Formula, BTreeMap<String, Formula>), ExtractError> {
    match p {
        Proof::Hyp { label, formula } => {
            let d = d_of(formula)?;
            let wit = (0..d.ex.len()).map(|i| PrTerm::var(dx(label, i))).collect();
            let mut counters = Counters::new();
            counters.insert(label.clone(), dv_vars(d.all.len()));
            let mut hyps = BTreeMap::new();
            hyps.insert(label.clone(), formula.clone());
            Ok((DRes { wit, counters }, formula.clone(), hyps))
        }
        Proof::ImpIntro { label, antecedent, body } => {
            let (mut res, chi, mut hyps) = dext(theory, body)?;
            let da = d_of(antecedent)?;
            let dchi = d_of(&chi)?;
            let discharged = res.counters.remove(label).unwrap_or_else(|| {
                // vacuous discharge: arbitrary counterexamples
                da.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
            });
            hyps.remove(label);
            let bind_prefix = |t: &PrTerm| -> PrTerm {
                // λ over the antecedent's ∃-variables
                da.ex
                    .iter()
                    .enumerate()
                    .rev()
                    .fold(t.clone(), |acc, (i, (_, ty))| {
                        PrTerm::lam(dx(label, i), ty.clone(), acc)
                    })
            };
            // U-part: abstract the body's witnesses
            let mut wit: Vec<PrTerm> = res.wit.iter().map(&bind_prefix).collect();
            // Y-part: abstract the discharged counterexamples over the
            // antecedent's ∃-variables and the conclusion's ∀-variables
            for c in &discharged {
                let inner = dchi
                    .all
                    .iter()
                    .enumerate()
                    .rev()
                    .fold(c.clone(), |acc, (j, (_, ty))| {
                        PrTerm::lam(dv(j), ty.clone(), acc)
                    });
                wit.push(bind_prefix(&inner));
            }
            // other hypotheses: re-index conclusion positions
            let k = da.ex.len();
            for v in res.counters.values_mut() {
                *v = v
                    .iter()
                    .map(|t| {
                        let mut out = t.clone();
                        for j in (0..dchi.all.len()).rev() {
                            out = out.substitute(&dv(j), &PrTerm::var(format!("#s_{j}")));
                        }
                        for j in 0..dchi.all.len() {
                            out = out.substitute(&format!("#s_{j}"), &PrTerm::var(dv(j + k)));
                        }
                        for i in 0..k {
                            out = out.substitute(&dx(label, i), &PrTerm::var(dv(i)));
                        }
                        out
                    })
                    .collect();
            }
            Ok((DRes { wit, counters: res.counters }, Formula::imp(antecedent.clone(), chi), hyps))
        }
        Proof::ImpElim { fun, arg } => {
            let (rf, fc, hf) = dext(theory, fun)?;
            let (mut ra, ac, ha) = dext(theory, arg)?;
            let (ant, chi) = match &fc {
                Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
                _ => unreachable!(),
            };
            debug_assert_eq!(ant, ac);
            let da = d_of(&ant)?;
            let dchi = d_of(&chi)?;
            let u_count = dchi.ex.len();
            // conclusion witnesses: U_i applied to the argument's witnesses
            let wit: Vec<PrTerm> = rf.wit[..u_count]
                .iter()
                .map(|u| PrTerm::apps(u.clone(), ra.wit.iter().cloned()))
                .collect();
            // counterexamples flowing into the antecedent: Y_j(arg-wits, dv*)
            let feeds: Vec<PrTerm> = rf.wit[u_count..]
                .iter()
                .map(|y| {
                    PrTerm::apps(
                        y.clone(),
                        ra.wit.iter().cloned().chain(dv_vars(dchi.all.len())),
                    )
                })
                .collect();
            debug_assert_eq!(feeds.len(), da.all.len());
            // the argument's hypotheses see those feeds as their dv positions
            for v in ra.counters.values_mut() {
                *v = v.iter().map(|t| subst_dvs(t, &feeds)).collect();
            }
            // the function's hypotheses: its dv = arg-∃ positions ++ χ-∀
            let f_feeds: Vec<PrTerm> =
                ra.wit.iter().cloned().chain(dv_vars(dchi.all.len())).collect();
            let mut cf = rf.counters;
            for v in cf.values_mut() {
                *v = v.iter().map(|t| subst_dvs(t, &f_feeds)).collect();
            }
            let mut hyps = hf;
            hyps.extend(ha);
            let counters = merge(cf, ra.counters, &hyps)?;
            Ok((DRes { wit, counters }, chi, hyps))
        }
        Proof::AndIntro { left, right } => {
            let (rl, lc, hl) = dext(theory, left)?;
            let (mut rr, rc, hr) = dext(theory, right)?;
            let dl = d_of(&lc)?;
            let dr = d_of(&rc)?;
            let shift = dl.all.len();
            for v in rr.counters.values_mut() {
                let feeds: Vec<PrTerm> =
                    (0..dr.all.len()).map(|j| PrTerm::var(dv(j + shift))).collect();
                *v = v.iter().map(|t| subst_dvs(t, &feeds)).collect();
            }
            let mut hyps = hl;
            hyps.extend(hr);
            let counters = merge(rl.counters, rr.counters, &hyps)?;
            let wit = [rl.wit, rr.wit].concat();
            Ok((DRes { wit, counters }, Formula::and(lc, rc), hyps))
        }
        Proof::AndElim0 { pair } | Proof::AndElim1 { pair } => {
            let first = matches!(p, Proof::AndElim0 { .. });
            let (mut r, c, hyps) = dext(theory, pair)?;
            let (a, b) = match &c {
                Formula::And(a, b) => ((**a).clone(), (**b).clone()),
                _ => unreachable!(),
            };
            let da = d_of(&a)?;
            let db = d_of(&b)?;
            let (keep, keep_d, other_d) =
                if first { (a.clone(), &da, &db) } else { (b.clone(), &db, &da) };
            let keep_wits = if first {
                r.wit[..da.ex.len()].to_vec()
            } else {
                r.wit[da.ex.len()..].to_vec()
            };
            // pair counters: kept component's positions map to dv, the other
            // side gets dummies
            let feeds: Vec<PrTerm> = if first {
                (0..keep_d.all.len())
                    .map(|j| PrTerm::var(dv(j)))
                    .chain(other_d.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())))
                    .collect()
            } else {
                other_d
                    .all
                    .iter()
                    .map(|(_, ty)| PrTerm::ZeroC(ty.clone()))
                    .chain((0..keep_d.all.len()).map(|j| PrTerm::var(dv(j))))
                    .collect()
            };
            for v in r.counters.values_mut() {
                *v = v.iter().map(|t| subst_dvs(t, &feeds)).collect();
            }
            Ok((DRes { wit: keep_wits, counters: r.counters }, keep, hyps))
        }
        Proof::OrIntro0 { body, other } => {
            let (r, c, hyps) = dext(theory, body)?;
            let dother = d_of(other)?;
            let other_bundle: Vec<Ty> = dother.ex.iter().map(|(_, t)| t.clone()).collect();
            let wit = vec![PrTerm::inl(bundle_terms(&r.wit), bundle_ty(&other_bundle))];
            Ok((DRes { wit, counters: r.counters }, Formula::or(c, other.clone()), hyps))
        }
        Proof::OrIntro1 { other, body } => {
            let (mut r, c, hyps) = dext(theory, body)?;
            let dother = d_of(other)?;
            let dc = d_of(&c)?;
            let shift = dother.all.len();
            for v in r.counters.values_mut() {
                let feeds: Vec<PrTerm> =
                    (0..dc.all.len()).map(|j| PrTerm::var(dv(j + shift))).collect();
                *v = v.iter().map(|t| subst_dvs(t, &feeds)).collect();
            }
            let this_bundle: Vec<Ty> = dother.ex.iter().map(|(_, t)| t.clone()).collect();
            let wit = vec![PrTerm::inr(bundle_ty(&this_bundle), bundle_terms(&r.wit))];
            Ok((DRes { wit, counters: r.counters }, Formula::or(other.clone(), c), hyps))
        }
        Proof::OrElim { main, left_label, left, right_label, right } => {
            let (r0, c0, h0) = dext(theory, main)?;
            let (mut rl, chi, mut hl) = dext(theory, left)?;
            let (mut rr, _, mut hr) = dext(theory, right)?;
            let (a, b) = match &c0 {
                Formula::Or(a, b) => ((**a).clone(), (**b).clone()),
                _ => unreachable!(),
            };
            let da = d_of(&a)?;
            let db = d_of(&b)?;
            let dchi = d_of(&chi)?;
            let z = r0.wit[0].clone();
            let tag = PrTerm::IsLeft(Box::new(z.clone()));
            let left_feeds =
                unbundle_terms(PrTerm::EltL(Box::new(z.clone())), da.ex.len().max(1))
                    [..da.ex.len()]
                    .to_vec();
            let right_feeds =
                unbundle_terms(PrTerm::EltR(Box::new(z.clone())), db.ex.len().max(1))
                    [..db.ex.len()]
                    .to_vec();
            let cl = rl.counters.remove(left_label).unwrap_or_else(|| {
                da.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
            });
            let cr = rr.counters.remove(right_label).unwrap_or_else(|| {
                db.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
            });
            hl.remove(left_label);
            hr.remove(right_label);
            feed_hyp(&mut rl, left_label, &left_feeds);
            feed_hyp(&mut rr, right_label, &right_feeds);
            let cl: Vec<PrTerm> = cl
                .iter()
                .map(|t| {
                    let mut out = t.clone();
                    for (i, f) in left_feeds.iter().enumerate() {
                        out = out.substitute(&dx(left_label, i), f);
                    }
                    out
                })
                .collect();
            let cr: Vec<PrTerm> = cr
                .iter()
                .map(|t| {
                    let mut out = t.clone();
                    for (i, f) in right_feeds.iter().enumerate() {
                        out = out.substitute(&dx(right_label, i), f);
                    }
                    out
                })
                .collect();
            // witnesses: select by tag
            let wit: Vec<PrTerm> = rl
                .wit
                .iter()
                .zip(&rr.wit)
                .zip(&dchi.ex)
                .map(|((l, r), (_, ty))| {
                    PrTerm::ite(ty.clone(), tag.clone(), l.clone(), r.clone())
                })
                .collect();
            // disjunction counterexamples: the branches' discharged demands
            let disj_feeds: Vec<PrTerm> = cl.into_iter().chain(cr).collect();
            let mut c0m = r0.counters;
            for v in c0m.values_mut() {
                *v = v.iter().map(|t| subst_dvs(t, &disj_feeds)).collect();
            }
            // branch counters: select by tag where both branches constrain
            let mut branch = Counters::new();
            let labels: std::collections::BTreeSet<String> =
                rl.counters.keys().chain(rr.counters.keys()).cloned().collect();
            let mut hyps = h0.clone();
            hyps.extend(hl.clone());
            hyps.extend(hr.clone());
            for label in labels {
                let psi = hyps.get(&label).unwrap();
                let dpsi = d_of(psi)?;
                let lv = rl.counters.get(&label).cloned().unwrap_or_else(|| {
                    dpsi.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
                });
                let rv = rr.counters.get(&label).cloned().unwrap_or_else(|| {
                    dpsi.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
                });
                let sel: Vec<PrTerm> = lv
                    .iter()
                    .zip(&rv)
                    .zip(&dpsi.all)
                    .map(|((l, r), (_, ty))| {
                        PrTerm::ite(ty.clone(), tag.clone(), l.clone(), r.clone())
                    })
                    .collect();
                branch.insert(label, sel);
            }
            let counters = merge(c0m, branch, &hyps)?;
            Ok((DRes { wit, counters }, chi, hyps))
        }
        Proof::AllIntro { var, body } => {
            let (mut r, c, hyps) = dext(theory, body)?;
            let dc = d_of(&c)?;
            let wit: Vec<PrTerm> =
                r.wit.iter().map(|t| PrTerm::lam(var.clone(), Ty::Nat, t.clone())).collect();
            // conclusion ∀-positions: 0 is the new variable, the rest shift
            for v in r.counters.values_mut() {
                *v = v
                    .iter()
                    .map(|t| {
                        let mut out = t.clone();
                        for j in (0..dc.all.len()).rev() {
                            out = out.substitute(&dv(j), &PrTerm::var(dv(j + 1)));
                        }
                        out.substitute(var, &PrTerm::var(dv(0)))
                    })
                    .collect();
            }
            Ok((DRes { wit, counters: r.counters }, Formula::all(var.clone(), c), hyps))
        }
        Proof::AllElim { term, all } => {
            let (mut r, c, hyps) = dext(theory, all)?;
            let (x, body) = match &c {
                Formula::All(x, body) => (x.clone(), (**body).clone()),
                _ => unreachable!(),
            };
            let dbody = d_of(&body)?;
            let t = embed(term)?;
            let wit: Vec<PrTerm> =
                r.wit.iter().map(|w| PrTerm::app(w.clone(), t.clone())).collect();
            let feeds: Vec<PrTerm> = std::iter::once(t)
                .chain((0..dbody.all.len()).map(|j| PrTerm::var(dv(j))))
                .collect();
            for v in r.counters.values_mut() {
                *v = v.iter().map(|w| subst_dvs(w, &feeds)).collect();
            }
            Ok((DRes { wit, counters: r.counters }, body.substitute(&x, term), hyps))
        }
        Proof::ExIntro { target, witness, body } => {
            let (r, _, hyps) = dext(theory, body)?;
            let mut wit = vec![embed(witness)?];
            wit.extend(r.wit);
            Ok((DRes { wit, counters: r.counters }, target.clone(), hyps))
        }
        Proof::ExElim { main, eigen, label, body } => {
            let (r0, c0, h0) = dext(theory, main)?;
            let (mut rb, chi, mut hb) = dext(theory, body)?;
            let inner_wits = r0.wit[1..].to_vec();
            let z = r0.wit[0].clone();
            hb.remove(label);
            feed_hyp(&mut rb, label, &inner_wits);
            let sub_eigen = |t: &PrTerm| t.substitute(eigen, &z);
            rb.wit = rb.wit.iter().map(&sub_eigen).collect();
            for v in rb.counters.values_mut() {
                *v = v.iter().map(&sub_eigen).collect();
            }
            let discharged: Vec<PrTerm> = match rb.counters.remove(label) {
                Some(cs) => cs
                    .iter()
                    .map(|t| {
                        let mut out = sub_eigen(t);
                        for (i, f) in inner_wits.iter().enumerate() {
                            out = out.substitute(&dx(label, i), f);
                        }
                        out
                    })
                    .collect(),
                None => {
                    let dpsi = d_of(&match &c0 {
                        Formula::Ex(x, b) => b.substitute(x, &Term::var(eigen.clone())),
                        _ => unreachable!(),
                    })?;
                    dpsi.all.iter().map(|(_, ty)| PrTerm::ZeroC(ty.clone())).collect()
                }
            };
            let mut c0m = r0.counters;
            for v in c0m.values_mut() {
                *v = v.iter().map(|t| subst_dvs(t, &discharged)).collect();
            }
            let mut hyps = h0;
            hyps.extend(hb);
            let counters = merge(c0m, rb.counters, &hyps)?;
            Ok((DRes { wit: rb.wit.clone(), counters }, chi, hyps))
        }
        Proof::BotElim { .. } | Proof::Dne { .. } => {
            unreachable!("rules outside minimal logic are rejected by the kernel check")
        }
        Proof::Axiom(inst) => {
            let formula = theory
                .instantiate(inst)
                .map_err(|e| ExtractError::Kernel(e.to_string()))?;
            let wit = axiom_witnesses(inst, &formula)?;
            Ok((DRes { wit, counters: Counters::new() }, formula, BTreeMap::new()))
        }
    }
}

fn axiom_witnesses(inst: &AxiomInstance, _formula: &Formula) -> Result<Vec<PrTerm>, ExtractError> {
    Ok(match inst {
        AxiomInstance::EqRefl(_)
        | AxiomInstance::SuccNonzero(_)
        | AxiomInstance::DefEq { .. }
        | AxiomInstance::EqSym(..)
        | AxiomInstance::EqTrans(..)
        | AxiomInstance::SuccInj(..)
        | AxiomInstance::AtomStability(_)
        | AxiomInstance::ComplIntro(_)
        | AxiomInstance::ComplElim(_) => vec![],
        AxiomInstance::Decidable(theta) => {
            let chi = atom_char_term(theta)?;
            vec![PrTerm::ite(
                Ty::sum(Ty::Nat, Ty::Nat),
                chi,
                PrTerm::inl(PrTerm::Zero, Ty::Nat),
                PrTerm::inr(Ty::Nat, PrTerm::Zero),
            )]
        }
        AxiomInstance::EqSubst { var, formula, from, to } => {
            // identities: U_i projects, Y_j projects
            let d_from = d_of(&formula.substitute(var, from))?;
            let d_to = d_of(&formula.substitute(var, to))?;
            let mut wit = Vec::new();
            let xs: Vec<(String, Ty)> = d_from
                .ex
                .iter()
                .enumerate()
                .map(|(i, (_, ty))| (format!("xa{i}"), ty.clone()))
                .collect();
            for (i, _) in d_to.ex.iter().enumerate() {
                let body = PrTerm::var(xs[i].0.clone());
                let t = xs
                    .iter()
                    .rev()
                    .fold(body, |acc, (n, ty)| PrTerm::lam(n.clone(), ty.clone(), acc));
                wit.push(t);
            }
            let vs: Vec<(String, Ty)> = d_to
                .all
                .iter()
                .enumerate()
                .map(|(j, (_, ty))| (format!("vb{j}"), ty.clone()))
                .collect();
            for (j, _) in d_from.all.iter().enumerate() {
                let body = PrTerm::var(vs[j].0.clone());
                let inner = vs
                    .iter()
                    .rev()
                    .fold(body, |acc, (n, ty)| PrTerm::lam(n.clone(), ty.clone(), acc));
                let t = xs
                    .iter()
                    .rev()
                    .fold(inner, |acc, (n, ty)| PrTerm::lam(n.clone(), ty.clone(), acc));
                wit.push(t);
            }
            wit
        }
        AxiomInstance::Induction { var, formula } => induction_witnesses(var, formula)?,
    })
}

/// Dialectica witnesses for an induction instance: the witness series is a
/// recursor over the step functions; the counterexample side walks the
/// series backwards from a failing stage, blaming either the base or the
/// first failing step (located by a bounded search).
fn induction_witnesses(var: &str, formula: &Formula) -> Result<Vec<PrTerm>, ExtractError> {
    let d = d_of(formula)?;
    let t_tys: Vec<Ty> = d.ex.iter().map(|(_, ty)| ty.clone()).collect();
    let v_tys: Vec<Ty> = d.all.iter().map(|(_, ty)| ty.clone()).collect();
    let k = t_tys.len();
    let m = v_tys.len();
    let bt = bundle_ty(&t_tys);
    let bv = bundle_ty(&v_tys);

    // H.ex argument variables: base_i, su_i (step witnesses), sy_j (step
    // counter-functions)
    let base_args: Vec<(String, Ty)> =
        t_tys.iter().enumerate().map(|(i, ty)| (format!("ib{i}"), ty.clone())).collect();
    let su_args: Vec<(String, Ty)> = t_tys
        .iter()
        .enumerate()
        .map(|(i, ty)| {
            let curried = t_tys.iter().rev().fold(ty.clone(), |acc, a| Ty::arrow(a.clone(), acc));
            (format!("isu{i}"), Ty::arrow(Ty::Nat, curried))
        })
        .collect();
    let sy_args: Vec<(String, Ty)> = v_tys
        .iter()
        .enumerate()
        .map(|(j, ty)| {
            let all_args: Vec<Ty> = t_tys.iter().chain(v_tys.iter()).cloned().collect();
            let curried = all_args.iter().rev().fold(ty.clone(), |acc, a| Ty::arrow(a.clone(), acc));
            (format!("isy{j}"), Ty::arrow(Ty::Nat, curried))
        })
        .collect();
    let hex_args: Vec<(String, Ty)> =
        base_args.iter().chain(&su_args).chain(&sy_args).cloned().collect();

    // witness series W : N → bundle(T)
    let w_step = {
        let p_comps = unbundle_terms(PrTerm::var("ip"), k.max(1))[..k].to_vec();
        let comps: Vec<PrTerm> = su_args
            .iter()
            .map(|(n, _)| {
                PrTerm::apps(
                    PrTerm::app(PrTerm::var(n.clone()), PrTerm::var("in")),
                    p_comps.iter().cloned(),
                )
            })
            .collect();
        PrTerm::lam("in", Ty::Nat, PrTerm::lam("ip", bt.clone(), bundle_terms(&comps)))
    };
    let base_bundle = bundle_terms(
        &base_args.iter().map(|(n, _)| PrTerm::var(n.clone())).collect::<Vec<_>>(),
    );
    let w_series = PrTerm::rec(base_bundle, w_step);
    let w_at = |n: PrTerm| PrTerm::app(w_series.clone(), n);

    // conclusion ∀-arguments: n* and the conclusion counterexamples v*
    let nstar = PrTerm::var("inb");
    let vstar: Vec<(String, Ty)> =
        v_tys.iter().enumerate().map(|(j, ty)| (format!("ivc{j}"), ty.clone())).collect();

    // descent table D : N → bundle(V), D(0) = v*, D(S j) = sy(n* ∸ S j, W(n* ∸ S j), D(j))
    let level = |j: PrTerm| {
        PrTerm::apps(stdlib::sub(), [nstar.clone(), PrTerm::app(PrTerm::Succ, j)])
    };
    let d_step = {
        let i = level(PrTerm::var("jn"));
        let w_comps = unbundle_terms(w_at(i.clone()), k.max(1))[..k].to_vec();
        let c_comps = unbundle_terms(PrTerm::var("jp"), m.max(1))[..m].to_vec();
        let comps: Vec<PrTerm> = sy_args
            .iter()
            .map(|(n, _)| {
                PrTerm::apps(
                    PrTerm::app(PrTerm::var(n.clone()), i.clone()),
                    w_comps.iter().cloned().chain(c_comps.iter().cloned()),
                )
            })
            .collect();
        PrTerm::lam("jn", Ty::Nat, PrTerm::lam("jp", bv.clone(), bundle_terms(&comps)))
    };
    let d_table = PrTerm::rec(
        bundle_terms(&vstar.iter().map(|(n, _)| PrTerm::var(n.clone())).collect::<Vec<_>>()),
        d_step,
    );
    let d_at = |j: PrTerm| PrTerm::app(d_table.clone(), j);

    // search predicate: φ_D holds at stage n* ∸ S j with counters D(S j)
    let pred = {
        let i = level(PrTerm::var("sj"));
        let w_comps = unbundle_terms(w_at(i.clone()), k.max(1))[..k].to_vec();
        let c_comps =
            unbundle_terms(d_at(PrTerm::app(PrTerm::Succ, PrTerm::var("sj"))), m.max(1))[..m]
                .to_vec();
        let mut matrix = d.matrix.clone();
        for ((name, _), w) in d.ex.iter().zip(&w_comps) {
            matrix = matrix.subst(name, w);
        }
        for ((name, _), c) in d.all.iter().zip(&c_comps) {
            matrix = matrix.subst(name, c);
        }
        matrix = matrix.subst(var, &i);
        PrTerm::lam("sj", Ty::Nat, char_compile(&matrix)?)
    };
    // least j < n* with pred(j) = 0, else n*
    let jstar = {
        let step = PrTerm::lam(
            "ln",
            Ty::Nat,
            PrTerm::lam(
                "lp",
                Ty::Nat,
                PrTerm::ite(
                    Ty::Nat,
                    PrTerm::apps(stdlib::char_eq(), [PrTerm::var("lp"), PrTerm::var("ln")]),
                    PrTerm::ite(
                        Ty::Nat,
                        PrTerm::app(pred.clone(), PrTerm::var("ln")),
                        PrTerm::var("ln"),
                        PrTerm::app(PrTerm::Succ, PrTerm::var("ln")),
                    ),
                    PrTerm::var("lp"),
                ),
            ),
        );
        PrTerm::app(PrTerm::rec(PrTerm::Zero, step), nstar.clone())
    };
    let istar = level(jstar.clone());

    // conclusion witnesses
    let lam_hex = |t: PrTerm| {
        hex_args.iter().rev().fold(t, |acc, (n, ty)| PrTerm::lam(n.clone(), ty.clone(), acc))
    };
    let lam_call = |t: PrTerm| {
        let inner = vstar
            .iter()
            .rev()
            .fold(t, |acc, (n, ty)| PrTerm::lam(n.clone(), ty.clone(), acc));
        PrTerm::lam("inb", Ty::Nat, inner)
    };
    let mut wit = Vec::new();
    // U_i : bundle accessors of the witness series
    for i in 0..k {
        let body = unbundle_terms(w_at(PrTerm::var("un")), k.max(1))[..k][i].clone();
        wit.push(lam_hex(PrTerm::lam("un", Ty::Nat, body)));
    }
    // Y over H.all = V (base) ++ [x] ++ T ++ V (step)
    let base_part = unbundle_terms(d_at(nstar.clone()), m.max(1))[..m].to_vec();
    let w_istar = unbundle_terms(w_at(istar.clone()), k.max(1))[..k].to_vec();
    let v_jstar = unbundle_terms(d_at(jstar.clone()), m.max(1))[..m].to_vec();
    for t in base_part {
        wit.push(lam_hex(lam_call(t)));
    }
    wit.push(lam_hex(lam_call(istar)));
    for t in w_istar {
        wit.push(lam_hex(lam_call(t)));
    }
    for t in v_jstar {
        wit.push(lam_hex(lam_call(t)));
    }
    Ok(wit)
}

/// Small battery of function candidates used to challenge extracted
/// witnesses at a given type during validation.
pub fn counterexample_candidates(ty: &Ty, bound: u64) -> Vec<PrTerm> {
    match ty {
        Ty::Nat => (0..=bound).map(PrTerm::numeral).collect(),
        Ty::Arrow(a, b) if **a == Ty::Nat && **b == Ty::Nat => vec![
            PrTerm::lam("n", Ty::Nat, PrTerm::Zero),
            PrTerm::lam("n", Ty::Nat, PrTerm::var("n")),
            PrTerm::lam("n", Ty::Nat, PrTerm::app(PrTerm::Succ, PrTerm::var("n"))),
            PrTerm::lam("n", Ty::Nat, PrTerm::numeral(bound)),
        ],
        other => vec![PrTerm::ZeroC(other.clone())],
    }
}

/// Check extracted witnesses against the Dialectica matrix, enumerating
/// counterexample candidates for the `∀`-variables (and numerals for free
/// first-order variables) up to the bound. Test-scale validation only.
pub fn validate_dialectica(
    phi: &Formula,
    witnesses: &[PrTerm],
    bound: u64,
) -> Result<bool, ExtractError> {
    let d = d_of(phi)?;
    if witnesses.len() != d.ex.len() {
        return Err(ExtractError::Other(format!(
            "expected {} witnesses, got {}",
            d.ex.len(),
            witnesses.len()
        )));
    }
    let mut matrix = d.matrix.clone();
    for ((name, _), w) in d.ex.iter().zip(witnesses) {
        matrix = matrix.subst(name, w);
    }
    // free first-order variables range over numerals like ∀-variables
    let mut slots: Vec<(String, Vec<PrTerm>)> = Vec::new();
    for v in phi.free_vars() {
        slots.push((v, counterexample_candidates(&Ty::Nat, bound)));
    }
    for (name, ty) in &d.all {
        slots.push((name.clone(), counterexample_candidates(ty, bound)));
    }
    check_all(&matrix, &slots, 0)
}

fn check_all(
    matrix: &HFormula,
    slots: &[(String, Vec<PrTerm>)],
    idx: usize,
) -> Result<bool, ExtractError> {
    if idx == slots.len() {
        let chi = char_compile(matrix)?;
        let v = crate::prt::normalize(&chi).map_err(|e| ExtractError::Eval(e.to_string()))?;
        return Ok(v.as_numeral() == Some(0));
    }
    let (name, candidates) = &slots[idx];
    for c in candidates {
        let inst = matrix.subst(name, c);
        if !check_all(&inst, slots, idx + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ha_axioms;
    use crate::logic::Signature;

    fn theory() -> Theory {
        ha_axioms(&Signature::arith_with_test_relations())
    }

    #[test]
    fn atomic_proof_has_no_witnesses() {
        let p = Proof::Axiom(AxiomInstance::EqRefl(Term::zero()));
        let w = extract_dialectica(&theory(), &p).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn canonical_existential_witness() {
        // ∃y (y = S(x)) proved canonically: witness S(x); matrix valid for x ≤ 20
        let target = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let p = Proof::ex_intro(
            target.clone(),
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let w = extract_dialectica(&theory(), &p).unwrap();
        assert_eq!(w.len(), 1);
        assert!(validate_dialectica(&target, &w, 20).unwrap());
    }

    #[test]
    fn forall_intro_abstracts() {
        let matrix = Formula::eq(Term::var("y"), Term::succ(Term::var("x")));
        let goal = Formula::all("x", Formula::ex("y", matrix.clone()));
        let p = Proof::all_intro(
            "x",
            Proof::ex_intro(
                Formula::ex("y", matrix),
                Term::succ(Term::var("x")),
                Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
            ),
        );
        let w = extract_dialectica(&theory(), &p).unwrap();
        assert_eq!(w.len(), 1);
        // the witness is a function of x; F(3) = 4
        assert_eq!(crate::prt::eval_nat(&w[0], &[3]).unwrap(), 4);
        assert!(validate_dialectica(&goal, &w, 15).unwrap());
    }

    #[test]
    fn modus_ponens_composes_witnesses() {
        // from ∃y (y = S(x)) and (∃y y=S(x)) → (∃z z=S(x)), recover a witness
        let ex_y = Formula::ex("y", Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
        let ex_z = Formula::ex("z", Formula::eq(Term::var("z"), Term::succ(Term::var("x"))));
        let imp = Proof::imp_intro(
            "h",
            ex_y.clone(),
            Proof::ex_elim(
                Proof::hyp("h", ex_y.clone()),
                "w",
                "hw",
                Proof::ex_intro(
                    ex_z.clone(),
                    Term::var("w"),
                    Proof::hyp("hw", Formula::eq(Term::var("w"), Term::succ(Term::var("x")))),
                ),
            ),
        );
        let arg = Proof::ex_intro(
            ex_y,
            Term::succ(Term::var("x")),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(Term::var("x")))),
        );
        let p = Proof::imp_elim(imp, arg);
        let w = extract_dialectica(&theory(), &p).unwrap();
        assert!(validate_dialectica(&ex_z, &w, 10).unwrap());
    }

    #[test]
    fn induction_witnesses_validate() {
        // ∀x (0 + x = x) by induction; Dialectica witnesses are empty
        // (atomic matrix), validation enumerates x
        let phi = Formula::eq(Term::app("+", vec![Term::zero(), Term::var("x")]), Term::var("x"));
        let goal = Formula::all("x", phi.clone());
        let base = Proof::Axiom(AxiomInstance::DefEq {
            name: "plus-0".into(),
            args: vec![Term::zero()],
        });
        // step: from 0+k = k conclude 0+S k = S k
        let hyp_f = phi.substitute("x", &Term::var("k"));
        let lhs_step = Formula::eq(
            Term::app("+", vec![Term::zero(), Term::succ(Term::var("k"))]),
            Term::succ(Term::app("+", vec![Term::zero(), Term::var("k")])),
        );
        let _ = lhs_step;
        // 0 + S k = S(0 + k) by plus-s; S(0+k) = S k by eq-subst from 0+k=k
        let plus_s = Proof::Axiom(AxiomInstance::DefEq {
            name: "plus-s".into(),
            args: vec![Term::zero(), Term::var("k")],
        });
        let zk = Term::app("+", vec![Term::zero(), Term::var("k")]);
        // φ(w) := S(0+k)... use eq-subst with template S(0+k) = S(z)
        let template = Formula::eq(
            Term::succ(zk.clone()),
            Term::succ(Term::var("zz")),
        );
        let subst_ax = Proof::Axiom(AxiomInstance::EqSubst {
            var: "zz".into(),
            formula: template,
            from: zk.clone(),
            to: Term::var("k"),
        });
        let s_eq = Proof::imp_elim(
            Proof::imp_elim(subst_ax, Proof::hyp("ih", hyp_f.clone())),
            Proof::Axiom(AxiomInstance::EqRefl(Term::succ(zk.clone()))),
        );
        // chain: 0+Sk = S(0+k) = S k
        let trans = Proof::imp_elim(
            Proof::imp_elim(
                Proof::Axiom(AxiomInstance::EqTrans(
                    Term::app("+", vec![Term::zero(), Term::succ(Term::var("k"))]),
                    Term::succ(zk),
                    Term::succ(Term::var("k")),
                )),
                plus_s,
            ),
            s_eq,
        );
        let step = Proof::all_intro("k", Proof::imp_intro("ih", hyp_f, trans));
        let ind = Proof::Axiom(AxiomInstance::Induction { var: "x".into(), formula: phi });
        let p = Proof::imp_elim(ind, Proof::and_intro(base, step));
        let w = extract_dialectica(&theory(), &p).unwrap();
        assert!(validate_dialectica(&goal, &w, 12).unwrap());
    }
}
