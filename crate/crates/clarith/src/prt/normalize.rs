//! Normalization of PR terms.
//!
//! The default strategy is normal order (leftmost-outermost), which reaches
//! the normal form whenever one exists under the fuel bound. Recursors unfold
//! only on numeral-headed scrutinees. An applicative-order evaluator is
//! provided as an independent cross-check for closed terms.

use super::{PrTerm, Ty};
use thiserror::Error;

/// Default reduction budget. Well-typed desk-scale terms stay far below it;
/// the bound exists so malformed inputs fail with a diagnostic instead of
/// looping.
pub const FUEL_DEFAULT: u64 = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("fuel exhausted after {0} reduction steps")]
    FuelExhausted(u64),
    #[error("term of type {0:?} is not a numeral after normalization")]
    NotANumeral(Box<PrTerm>),
}

struct Fuel {
    left: u64,
    initial: u64,
}

impl Fuel {
    fn new(n: u64) -> Fuel {
        Fuel { left: n, initial: n }
    }

    fn tick(&mut self) -> Result<(), EvalError> {
        if self.left == 0 {
            return Err(EvalError::FuelExhausted(self.initial));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Normalize with the default fuel bound.
pub fn normalize(t: &PrTerm) -> Result<PrTerm, EvalError> {
    normalize_fuel(t, FUEL_DEFAULT)
}

pub fn normalize_fuel(t: &PrTerm, fuel: u64) -> Result<PrTerm, EvalError> {
    let mut fuel = Fuel::new(fuel);
    nf(t.clone(), &mut fuel)
}

/// Weak-head normal form.
fn whnf(mut t: PrTerm, fuel: &mut Fuel) -> Result<PrTerm, EvalError> {
    loop {
        match t {
            PrTerm::App(f, a) => {
                let f = whnf(*f, fuel)?;
                match f {
                    PrTerm::Lam(x, _, body) => {
                        fuel.tick()?;
                        t = body.substitute(&x, &a);
                    }
                    PrTerm::Rec(s, step) => {
                        // unfold only on a numeral-headed argument
                        let arg = whnf(*a, fuel)?;
                        match arg {
                            PrTerm::Zero => {
                                fuel.tick()?;
                                t = *s;
                            }
                            PrTerm::App(hd, m) if matches!(*hd, PrTerm::Succ) => {
                                fuel.tick()?;
                                let rec = PrTerm::Rec(s, step.clone());
                                t = PrTerm::apps(
                                    *step,
                                    [(*m).clone(), PrTerm::app(rec, *m)],
                                );
                            }
                            stuck => return Ok(PrTerm::app(PrTerm::Rec(s, step), stuck)),
                        }
                    }
                    other => return Ok(PrTerm::app(other, *a)),
                }
            }
            PrTerm::P0(p) => {
                let p = whnf(*p, fuel)?;
                match p {
                    PrTerm::Pair(a, _) => {
                        fuel.tick()?;
                        t = *a;
                    }
                    stuck => return Ok(PrTerm::P0(Box::new(stuck))),
                }
            }
            PrTerm::P1(p) => {
                let p = whnf(*p, fuel)?;
                match p {
                    PrTerm::Pair(_, b) => {
                        fuel.tick()?;
                        t = *b;
                    }
                    stuck => return Ok(PrTerm::P1(Box::new(stuck))),
                }
            }
            PrTerm::IsLeft(p) => {
                let p = whnf(*p, fuel)?;
                match p {
                    PrTerm::Inl(..) => {
                        fuel.tick()?;
                        t = PrTerm::Zero;
                    }
                    PrTerm::Inr(..) => {
                        fuel.tick()?;
                        t = PrTerm::numeral(1);
                    }
                    stuck => return Ok(PrTerm::IsLeft(Box::new(stuck))),
                }
            }
            PrTerm::EltL(p) => {
                let p = whnf(*p, fuel)?;
                match p {
                    PrTerm::Inl(a, _) => {
                        fuel.tick()?;
                        t = *a;
                    }
                    // junk value: interpreting an inr as a left element
                    PrTerm::Inr(left, _) => {
                        fuel.tick()?;
                        t = PrTerm::ZeroC(left);
                    }
                    stuck => return Ok(PrTerm::EltL(Box::new(stuck))),
                }
            }
            PrTerm::EltR(p) => {
                let p = whnf(*p, fuel)?;
                match p {
                    PrTerm::Inr(_, a) => {
                        fuel.tick()?;
                        t = *a;
                    }
                    PrTerm::Inl(_, right) => {
                        fuel.tick()?;
                        t = PrTerm::ZeroC(right);
                    }
                    stuck => return Ok(PrTerm::EltR(Box::new(stuck))),
                }
            }
            PrTerm::ZeroC(ty) => {
                fuel.tick()?;
                t = expand_zero(&ty);
            }
            done => return Ok(done),
        }
    }
}

fn expand_zero(ty: &Ty) -> PrTerm {
    match ty {
        Ty::Nat => PrTerm::Zero,
        Ty::Prod(a, b) => PrTerm::pair(PrTerm::ZeroC((**a).clone()), PrTerm::ZeroC((**b).clone())),
        Ty::Sum(a, b) => PrTerm::inl(PrTerm::ZeroC((**a).clone()), (**b).clone()),
        Ty::Arrow(a, b) => PrTerm::lam("_z", (**a).clone(), PrTerm::ZeroC((**b).clone())),
    }
}

fn nf(t: PrTerm, fuel: &mut Fuel) -> Result<PrTerm, EvalError> {
    let head = whnf(t, fuel)?;
    Ok(match head {
        PrTerm::Lam(x, ty, body) => PrTerm::Lam(x, ty, Box::new(nf(*body, fuel)?)),
        PrTerm::App(f, a) => PrTerm::app(nf(*f, fuel)?, nf(*a, fuel)?),
        PrTerm::Pair(a, b) => PrTerm::pair(nf(*a, fuel)?, nf(*b, fuel)?),
        PrTerm::Rec(s, step) => PrTerm::rec(nf(*s, fuel)?, nf(*step, fuel)?),
        PrTerm::P0(a) => PrTerm::P0(Box::new(nf(*a, fuel)?)),
        PrTerm::P1(a) => PrTerm::P1(Box::new(nf(*a, fuel)?)),
        PrTerm::Inl(a, ty) => PrTerm::inl(nf(*a, fuel)?, ty),
        PrTerm::Inr(ty, a) => PrTerm::inr(ty, nf(*a, fuel)?),
        PrTerm::IsLeft(a) => PrTerm::IsLeft(Box::new(nf(*a, fuel)?)),
        PrTerm::EltL(a) => PrTerm::EltL(Box::new(nf(*a, fuel)?)),
        PrTerm::EltR(a) => PrTerm::EltR(Box::new(nf(*a, fuel)?)),
        leaf @ (PrTerm::Var(_) | PrTerm::Zero | PrTerm::Succ) => leaf,
        PrTerm::ZeroC(_) => unreachable!("whnf expands zero functionals"),
    })
}

/// Applies a closed `N → ... → N` term to numerals and reads back the result.
pub fn eval_nat(t: &PrTerm, args: &[u64]) -> Result<u64, EvalError> {
    let applied = PrTerm::apps(t.clone(), args.iter().map(|n| PrTerm::numeral(*n)));
    let v = normalize(&applied)?;
    v.as_numeral().ok_or_else(|| EvalError::NotANumeral(Box::new(v)))
}

/// Applicative-order normalization: arguments are fully normalized before a
/// redex is contracted. Cross-check evaluator; agrees with [`normalize`] on
/// closed terms of type `N`.
pub fn normalize_applicative(t: &PrTerm) -> Result<PrTerm, EvalError> {
    let mut fuel = Fuel::new(FUEL_DEFAULT);
    nf_app(t.clone(), &mut fuel)
}

pub fn eval_nat_applicative(t: &PrTerm, args: &[u64]) -> Result<u64, EvalError> {
    let applied = PrTerm::apps(t.clone(), args.iter().map(|n| PrTerm::numeral(*n)));
    let v = normalize_applicative(&applied)?;
    v.as_numeral().ok_or_else(|| EvalError::NotANumeral(Box::new(v)))
}

fn nf_app(t: PrTerm, fuel: &mut Fuel) -> Result<PrTerm, EvalError> {
    match t {
        PrTerm::App(f, a) => {
            let f = nf_app(*f, fuel)?;
            let a = nf_app(*a, fuel)?;
            match f {
                PrTerm::Lam(x, _, body) => {
                    fuel.tick()?;
                    nf_app(body.substitute(&x, &a), fuel)
                }
                PrTerm::Rec(s, step) => match a {
                    PrTerm::Zero => {
                        fuel.tick()?;
                        Ok(*s)
                    }
                    PrTerm::App(hd, m) if matches!(*hd, PrTerm::Succ) => {
                        fuel.tick()?;
                        let rec = PrTerm::Rec(s, step.clone());
                        nf_app(
                            PrTerm::apps(*step, [(*m).clone(), PrTerm::app(rec, *m)]),
                            fuel,
                        )
                    }
                    stuck => Ok(PrTerm::app(PrTerm::Rec(s, step), stuck)),
                },
                other => Ok(PrTerm::app(other, a)),
            }
        }
        PrTerm::Lam(x, ty, body) => Ok(PrTerm::Lam(x, ty, Box::new(nf_app(*body, fuel)?))),
        PrTerm::Rec(s, step) => Ok(PrTerm::rec(nf_app(*s, fuel)?, nf_app(*step, fuel)?)),
        PrTerm::Pair(a, b) => Ok(PrTerm::pair(nf_app(*a, fuel)?, nf_app(*b, fuel)?)),
        PrTerm::P0(p) => {
            fuel.tick()?;
            match nf_app(*p, fuel)? {
                PrTerm::Pair(a, _) => Ok(*a),
                stuck => Ok(PrTerm::P0(Box::new(stuck))),
            }
        }
        PrTerm::P1(p) => {
            fuel.tick()?;
            match nf_app(*p, fuel)? {
                PrTerm::Pair(_, b) => Ok(*b),
                stuck => Ok(PrTerm::P1(Box::new(stuck))),
            }
        }
        PrTerm::IsLeft(p) => {
            fuel.tick()?;
            match nf_app(*p, fuel)? {
                PrTerm::Inl(..) => Ok(PrTerm::Zero),
                PrTerm::Inr(..) => Ok(PrTerm::numeral(1)),
                stuck => Ok(PrTerm::IsLeft(Box::new(stuck))),
            }
        }
        PrTerm::EltL(p) => {
            fuel.tick()?;
            match nf_app(*p, fuel)? {
                PrTerm::Inl(a, _) => Ok(*a),
                PrTerm::Inr(left, _) => nf_app(PrTerm::ZeroC(left), fuel),
                stuck => Ok(PrTerm::EltL(Box::new(stuck))),
            }
        }
        PrTerm::EltR(p) => {
            fuel.tick()?;
            match nf_app(*p, fuel)? {
                PrTerm::Inr(_, a) => Ok(*a),
                PrTerm::Inl(_, right) => nf_app(PrTerm::ZeroC(right), fuel),
                stuck => Ok(PrTerm::EltR(Box::new(stuck))),
            }
        }
        PrTerm::Inl(a, ty) => Ok(PrTerm::inl(nf_app(*a, fuel)?, ty)),
        PrTerm::Inr(ty, a) => Ok(PrTerm::inr(ty, nf_app(*a, fuel)?)),
        PrTerm::ZeroC(ty) => {
            fuel.tick()?;
            nf_app(expand_zero(&ty), fuel)
        }
        leaf => Ok(leaf),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prt::{stdlib, typecheck_closed};

    #[test]
    fn rec_zero_equation() {
        // R_{s,t}(0) = s
        let s = PrTerm::numeral(7);
        let step = PrTerm::lam("n", Ty::Nat, PrTerm::lam("p", Ty::Nat, PrTerm::var("n")));
        let r = PrTerm::app(PrTerm::rec(s.clone(), step), PrTerm::Zero);
        assert_eq!(normalize(&r).unwrap(), s);
    }

    #[test]
    fn beta() {
        let id = PrTerm::lam("x", Ty::Nat, PrTerm::var("x"));
        let t = PrTerm::app(id, PrTerm::numeral(1));
        assert_eq!(normalize(&t).unwrap(), PrTerm::numeral(1));
    }

    #[test]
    fn addition() {
        assert_eq!(eval_nat(&stdlib::add(), &[3, 4]).unwrap(), 7);
        assert_eq!(eval_nat(&stdlib::add(), &[2, 2]).unwrap(), 4);
    }

    #[test]
    fn multiplication() {
        assert_eq!(eval_nat(&stdlib::mul(), &[3, 4]).unwrap(), 12);
        assert_eq!(eval_nat(&stdlib::mul(), &[0, 9]).unwrap(), 0);
    }

    #[test]
    fn predecessor() {
        // eval_nat(R_{0, λn.λp.n}, [5]) = 4
        assert_eq!(eval_nat(&stdlib::pred(), &[5]).unwrap(), 4);
        assert_eq!(eval_nat(&stdlib::pred(), &[0]).unwrap(), 0);
    }

    #[test]
    fn succ_term() {
        let f = PrTerm::lam("x", Ty::Nat, PrTerm::app(PrTerm::Succ, PrTerm::var("x")));
        assert_eq!(eval_nat(&f, &[3]).unwrap(), 4);
    }

    #[test]
    fn characteristic_terms() {
        for m in 0..5u64 {
            for n in 0..5u64 {
                let eq = eval_nat(&stdlib::char_eq(), &[m, n]).unwrap();
                assert_eq!(eq == 0, m == n);
                let le = eval_nat(&stdlib::char_leq(), &[m, n]).unwrap();
                assert_eq!(le == 0, m <= n);
            }
        }
    }

    #[test]
    fn ite_selects() {
        let t = PrTerm::ite(Ty::Nat, PrTerm::Zero, PrTerm::numeral(3), PrTerm::numeral(9));
        assert_eq!(normalize(&t).unwrap(), PrTerm::numeral(3));
        let t = PrTerm::ite(Ty::Nat, PrTerm::numeral(2), PrTerm::numeral(3), PrTerm::numeral(9));
        assert_eq!(normalize(&t).unwrap(), PrTerm::numeral(9));
    }

    #[test]
    fn subject_reduction_sample() {
        let t = PrTerm::app(stdlib::add(), PrTerm::numeral(2));
        let ty = typecheck_closed(&t).unwrap();
        let n = normalize(&t).unwrap();
        assert_eq!(typecheck_closed(&n).unwrap(), ty);
    }

    #[test]
    fn strategies_agree_on_closed_nat() {
        let t = PrTerm::apps(stdlib::mul(), [PrTerm::numeral(3), PrTerm::numeral(5)]);
        assert_eq!(
            normalize(&t).unwrap(),
            normalize_applicative(&t).unwrap()
        );
    }

    #[test]
    fn fuel_is_reported() {
        let omega_ish = PrTerm::apps(stdlib::mul(), [PrTerm::numeral(50), PrTerm::numeral(50)]);
        match normalize_fuel(&omega_ish, 10) {
            Err(EvalError::FuelExhausted(10)) => {}
            other => panic!("expected fuel exhaustion, got {other:?}"),
        }
    }
}
