//! Gödel's calculus of primitive recursive functionals of finite type.
//!
//! Types are `N`, function, product and sum types; terms include the
//! recursor `R_{s,t}` with `R_{s,t}(0) = s` and `R_{s,t}(S n) = t(n, R_{s,t}(n))`,
//! pairing/projections, tagged unions with `isleft`/`eltl`/`eltr`, and the
//! constant-zero functionals `0^σ`. Application is curried throughout:
//! `t(r,s)` abbreviates `(t(r))(s)`.

mod normalize;
mod parse;
mod sums;

pub use normalize::{eval_nat, eval_nat_applicative, normalize, normalize_applicative, FUEL_DEFAULT};
pub use parse::{parse_prterm, parse_ty, prterm_from_sexp, prterm_to_sexp, ty_from_sexp, ty_to_sexp};
pub use sums::eliminate_sums;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use thiserror::Error;

/// Finite types over the base type of natural numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ty {
    Nat,
    Arrow(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    Sum(Box<Ty>, Box<Ty>),
}

impl Ty {
    pub fn arrow(a: Ty, b: Ty) -> Ty {
        Ty::Arrow(Box::new(a), Box::new(b))
    }

    pub fn prod(a: Ty, b: Ty) -> Ty {
        Ty::Prod(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Ty, b: Ty) -> Ty {
        Ty::Sum(Box::new(a), Box::new(b))
    }

    /// Type level: `level(N) = 0`, `level(σ→τ) = max(level σ + 1, level τ)`,
    /// products and sums take the max of their components.
    pub fn level(&self) -> usize {
        match self {
            Ty::Nat => 0,
            Ty::Arrow(a, b) => (a.level() + 1).max(b.level()),
            Ty::Prod(a, b) | Ty::Sum(a, b) => a.level().max(b.level()),
        }
    }

    pub fn contains_sum(&self) -> bool {
        match self {
            Ty::Nat => false,
            Ty::Sum(..) => true,
            Ty::Arrow(a, b) | Ty::Prod(a, b) => a.contains_sum() || b.contains_sum(),
        }
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ty_to_sexp(self))
    }
}

/// Terms of the PR calculus.
#[derive(Debug, Clone, Eq)]
pub enum PrTerm {
    Var(String),
    /// `0 : N`
    Zero,
    /// `S : N → N`
    Succ,
    App(Box<PrTerm>, Box<PrTerm>),
    Lam(String, Ty, Box<PrTerm>),
    /// `R_{s,t} : N → σ` for `s : σ`, `t : N → σ → σ`.
    Rec(Box<PrTerm>, Box<PrTerm>),
    Pair(Box<PrTerm>, Box<PrTerm>),
    P0(Box<PrTerm>),
    P1(Box<PrTerm>),
    /// `inl a : σ + τ`; the annotation is the right component `τ`.
    Inl(Box<PrTerm>, Ty),
    /// `inr a : σ + τ`; the annotation is the left component `σ`.
    Inr(Ty, Box<PrTerm>),
    /// Tag of a sum value: `0` on `inl`, `1` on `inr`.
    IsLeft(Box<PrTerm>),
    EltL(Box<PrTerm>),
    EltR(Box<PrTerm>),
    /// Constant-zero functional `0^σ`.
    ZeroC(Ty),
}

impl PrTerm {
    pub fn var(x: impl Into<String>) -> PrTerm {
        PrTerm::Var(x.into())
    }

    pub fn app(f: PrTerm, a: PrTerm) -> PrTerm {
        PrTerm::App(Box::new(f), Box::new(a))
    }

    pub fn apps(f: PrTerm, args: impl IntoIterator<Item = PrTerm>) -> PrTerm {
        args.into_iter().fold(f, PrTerm::app)
    }

    pub fn lam(x: impl Into<String>, ty: Ty, body: PrTerm) -> PrTerm {
        PrTerm::Lam(x.into(), ty, Box::new(body))
    }

    pub fn rec(s: PrTerm, t: PrTerm) -> PrTerm {
        PrTerm::Rec(Box::new(s), Box::new(t))
    }

    pub fn pair(a: PrTerm, b: PrTerm) -> PrTerm {
        PrTerm::Pair(Box::new(a), Box::new(b))
    }

    pub fn p0(a: PrTerm) -> PrTerm {
        PrTerm::P0(Box::new(a))
    }

    pub fn p1(a: PrTerm) -> PrTerm {
        PrTerm::P1(Box::new(a))
    }

    pub fn inl(a: PrTerm, right: Ty) -> PrTerm {
        PrTerm::Inl(Box::new(a), right)
    }

    pub fn inr(left: Ty, a: PrTerm) -> PrTerm {
        PrTerm::Inr(left, Box::new(a))
    }

    pub fn numeral(n: u64) -> PrTerm {
        let mut t = PrTerm::Zero;
        for _ in 0..n {
            t = PrTerm::app(PrTerm::Succ, t);
        }
        t
    }

    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            PrTerm::Zero => Some(0),
            PrTerm::App(f, a) if matches!(**f, PrTerm::Succ) => a.as_numeral().map(|n| n + 1),
            _ => None,
        }
    }

    /// `if c = 0 then a else b`, built from a recursor at the given type.
    pub fn ite(ty: Ty, c: PrTerm, a: PrTerm, b: PrTerm) -> PrTerm {
        let step = PrTerm::lam("_n", Ty::Nat, PrTerm::lam("_p", ty, b));
        PrTerm::app(PrTerm::rec(a, step), c)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            PrTerm::Var(x) => {
                if !bound.iter().any(|b| b == x) {
                    out.insert(x.clone());
                }
            }
            PrTerm::Zero | PrTerm::Succ | PrTerm::ZeroC(_) => {}
            PrTerm::App(a, b) | PrTerm::Rec(a, b) | PrTerm::Pair(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            PrTerm::Lam(x, _, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            PrTerm::P0(a)
            | PrTerm::P1(a)
            | PrTerm::Inl(a, _)
            | PrTerm::Inr(_, a)
            | PrTerm::IsLeft(a)
            | PrTerm::EltL(a)
            | PrTerm::EltR(a) => a.collect_free(bound, out),
        }
    }

    /// Capture-avoiding substitution.
    pub fn substitute(&self, x: &str, v: &PrTerm) -> PrTerm {
        match self {
            PrTerm::Var(y) if y == x => v.clone(),
            PrTerm::Var(_) | PrTerm::Zero | PrTerm::Succ | PrTerm::ZeroC(_) => self.clone(),
            PrTerm::App(a, b) => PrTerm::app(a.substitute(x, v), b.substitute(x, v)),
            PrTerm::Rec(a, b) => PrTerm::rec(a.substitute(x, v), b.substitute(x, v)),
            PrTerm::Pair(a, b) => PrTerm::pair(a.substitute(x, v), b.substitute(x, v)),
            PrTerm::Lam(y, ty, body) => {
                if y == x {
                    return self.clone();
                }
                if v.free_vars().contains(y) && body.free_vars().contains(x) {
                    let mut taken = body.free_vars();
                    taken.extend(v.free_vars());
                    taken.insert(x.to_string());
                    let fresh = crate::logic::fresh_name(y, &taken);
                    let renamed = body.substitute(y, &PrTerm::var(fresh.clone()));
                    PrTerm::Lam(fresh, ty.clone(), Box::new(renamed.substitute(x, v)))
                } else {
                    PrTerm::Lam(y.clone(), ty.clone(), Box::new(body.substitute(x, v)))
                }
            }
            PrTerm::P0(a) => PrTerm::p0(a.substitute(x, v)),
            PrTerm::P1(a) => PrTerm::p1(a.substitute(x, v)),
            PrTerm::Inl(a, ty) => PrTerm::inl(a.substitute(x, v), ty.clone()),
            PrTerm::Inr(ty, a) => PrTerm::inr(ty.clone(), a.substitute(x, v)),
            PrTerm::IsLeft(a) => PrTerm::IsLeft(Box::new(a.substitute(x, v))),
            PrTerm::EltL(a) => PrTerm::EltL(Box::new(a.substitute(x, v))),
            PrTerm::EltR(a) => PrTerm::EltR(Box::new(a.substitute(x, v))),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            PrTerm::Var(_) | PrTerm::Zero | PrTerm::Succ | PrTerm::ZeroC(_) => 1,
            PrTerm::App(a, b) | PrTerm::Rec(a, b) | PrTerm::Pair(a, b) => 1 + a.size() + b.size(),
            PrTerm::Lam(_, _, body) => 1 + body.size(),
            PrTerm::P0(a)
            | PrTerm::P1(a)
            | PrTerm::Inl(a, _)
            | PrTerm::Inr(_, a)
            | PrTerm::IsLeft(a)
            | PrTerm::EltL(a)
            | PrTerm::EltR(a) => 1 + a.size(),
        }
    }
}

impl fmt::Display for PrTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", prterm_to_sexp(self))
    }
}

fn pr_alpha_eq(a: &PrTerm, b: &PrTerm, env: &mut Vec<(String, String)>) -> bool {
    use PrTerm::*;
    match (a, b) {
        (Var(x), Var(y)) => {
            for (l, r) in env.iter().rev() {
                let lm = l == x;
                let rm = r == y;
                if lm || rm {
                    return lm && rm;
                }
            }
            x == y
        }
        (Zero, Zero) | (Succ, Succ) => true,
        (ZeroC(s), ZeroC(t)) => s == t,
        (App(a1, a2), App(b1, b2))
        | (Rec(a1, a2), Rec(b1, b2))
        | (Pair(a1, a2), Pair(b1, b2)) => pr_alpha_eq(a1, b1, env) && pr_alpha_eq(a2, b2, env),
        (Lam(x, s, p), Lam(y, t, q)) => {
            if s != t {
                return false;
            }
            env.push((x.clone(), y.clone()));
            let r = pr_alpha_eq(p, q, env);
            env.pop();
            r
        }
        (P0(p), P0(q)) | (P1(p), P1(q)) | (IsLeft(p), IsLeft(q)) | (EltL(p), EltL(q))
        | (EltR(p), EltR(q)) => pr_alpha_eq(p, q, env),
        (Inl(p, s), Inl(q, t)) => s == t && pr_alpha_eq(p, q, env),
        (Inr(s, p), Inr(t, q)) => s == t && pr_alpha_eq(p, q, env),
        _ => false,
    }
}

impl PartialEq for PrTerm {
    fn eq(&self, other: &Self) -> bool {
        pr_alpha_eq(self, other, &mut Vec::new())
    }
}

impl Hash for PrTerm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        hash_pr(self, &mut Vec::new(), state);
    }
}

fn hash_pr<H: Hasher>(t: &PrTerm, binders: &mut Vec<String>, state: &mut H) {
    use PrTerm::*;
    match t {
        Var(x) => match binders.iter().rev().position(|b| b == x) {
            Some(i) => {
                (0u8, i).hash(state);
            }
            None => {
                (1u8, x).hash(state);
            }
        },
        Zero => 2u8.hash(state),
        Succ => 3u8.hash(state),
        App(a, b) => {
            4u8.hash(state);
            hash_pr(a, binders, state);
            hash_pr(b, binders, state);
        }
        Lam(x, ty, body) => {
            5u8.hash(state);
            ty.hash(state);
            binders.push(x.clone());
            hash_pr(body, binders, state);
            binders.pop();
        }
        Rec(a, b) => {
            6u8.hash(state);
            hash_pr(a, binders, state);
            hash_pr(b, binders, state);
        }
        Pair(a, b) => {
            7u8.hash(state);
            hash_pr(a, binders, state);
            hash_pr(b, binders, state);
        }
        P0(a) => {
            8u8.hash(state);
            hash_pr(a, binders, state);
        }
        P1(a) => {
            9u8.hash(state);
            hash_pr(a, binders, state);
        }
        Inl(a, ty) => {
            (10u8, ty).hash(state);
            hash_pr(a, binders, state);
        }
        Inr(ty, a) => {
            (11u8, ty).hash(state);
            hash_pr(a, binders, state);
        }
        IsLeft(a) => {
            12u8.hash(state);
            hash_pr(a, binders, state);
        }
        EltL(a) => {
            13u8.hash(state);
            hash_pr(a, binders, state);
        }
        EltR(a) => {
            14u8.hash(state);
            hash_pr(a, binders, state);
        }
        ZeroC(ty) => {
            (15u8, ty).hash(state);
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("expected {expected}, found {found} at {context}")]
    Mismatch { expected: String, found: String, context: String },
    #[error("cannot apply non-function of type {0}")]
    NotAFunction(String),
    #[error("projection applied to non-product of type {0}")]
    NotAProduct(String),
    #[error("sum operation applied to non-sum of type {0}")]
    NotASum(String),
}

/// Typechecks a term in the given context and returns its unique type.
pub fn typecheck(t: &PrTerm, ctx: &[(String, Ty)]) -> Result<Ty, TypeError> {
    let mut env: Vec<(String, Ty)> = ctx.to_vec();
    infer(t, &mut env)
}

/// Typecheck a closed term.
pub fn typecheck_closed(t: &PrTerm) -> Result<Ty, TypeError> {
    typecheck(t, &[])
}

fn infer(t: &PrTerm, env: &mut Vec<(String, Ty)>) -> Result<Ty, TypeError> {
    match t {
        PrTerm::Var(x) => env
            .iter()
            .rev()
            .find(|(y, _)| y == x)
            .map(|(_, ty)| ty.clone())
            .ok_or_else(|| TypeError::Unbound(x.clone())),
        PrTerm::Zero => Ok(Ty::Nat),
        PrTerm::Succ => Ok(Ty::arrow(Ty::Nat, Ty::Nat)),
        PrTerm::App(f, a) => {
            let fty = infer(f, env)?;
            let aty = infer(a, env)?;
            match fty {
                Ty::Arrow(dom, cod) => {
                    if *dom == aty {
                        Ok(*cod)
                    } else {
                        Err(TypeError::Mismatch {
                            expected: dom.to_string(),
                            found: aty.to_string(),
                            context: "application argument".into(),
                        })
                    }
                }
                other => Err(TypeError::NotAFunction(other.to_string())),
            }
        }
        PrTerm::Lam(x, ty, body) => {
            env.push((x.clone(), ty.clone()));
            let bty = infer(body, env)?;
            env.pop();
            Ok(Ty::arrow(ty.clone(), bty))
        }
        PrTerm::Rec(s, step) => {
            let sty = infer(s, env)?;
            let tty = infer(step, env)?;
            let want = Ty::arrow(Ty::Nat, Ty::arrow(sty.clone(), sty.clone()));
            if tty == want {
                Ok(Ty::arrow(Ty::Nat, sty))
            } else {
                Err(TypeError::Mismatch {
                    expected: want.to_string(),
                    found: tty.to_string(),
                    context: "recursor step".into(),
                })
            }
        }
        PrTerm::Pair(a, b) => Ok(Ty::prod(infer(a, env)?, infer(b, env)?)),
        PrTerm::P0(a) => match infer(a, env)? {
            Ty::Prod(l, _) => Ok(*l),
            other => Err(TypeError::NotAProduct(other.to_string())),
        },
        PrTerm::P1(a) => match infer(a, env)? {
            Ty::Prod(_, r) => Ok(*r),
            other => Err(TypeError::NotAProduct(other.to_string())),
        },
        PrTerm::Inl(a, right) => Ok(Ty::sum(infer(a, env)?, right.clone())),
        PrTerm::Inr(left, a) => Ok(Ty::sum(left.clone(), infer(a, env)?)),
        PrTerm::IsLeft(a) => match infer(a, env)? {
            Ty::Sum(..) => Ok(Ty::Nat),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        PrTerm::EltL(a) => match infer(a, env)? {
            Ty::Sum(l, _) => Ok(*l),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        PrTerm::EltR(a) => match infer(a, env)? {
            Ty::Sum(_, r) => Ok(*r),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        PrTerm::ZeroC(ty) => Ok(ty.clone()),
    }
}

/// Maximum type level of `σ` over all recursors `R_{s,t} : N → σ` in the
/// term; `0` if recursor-free. Requires a well-typed term.
pub fn recursor_rank(t: &PrTerm) -> Result<usize, TypeError> {
    let mut env = Vec::new();
    let mut rank = 0usize;
    rank_walk(t, &mut env, &mut rank)?;
    Ok(rank)
}

fn rank_walk(t: &PrTerm, env: &mut Vec<(String, Ty)>, rank: &mut usize) -> Result<Ty, TypeError> {
    if let PrTerm::Rec(s, step) = t {
        let sty = rank_walk(s, env, rank)?;
        let tty = rank_walk(step, env, rank)?;
        let want = Ty::arrow(Ty::Nat, Ty::arrow(sty.clone(), sty.clone()));
        if tty != want {
            return Err(TypeError::Mismatch {
                expected: want.to_string(),
                found: tty.to_string(),
                context: "recursor step".into(),
            });
        }
        *rank = (*rank).max(sty.level());
        return Ok(Ty::arrow(Ty::Nat, sty));
    }
    match t {
        PrTerm::Lam(x, ty, body) => {
            env.push((x.clone(), ty.clone()));
            let bty = rank_walk(body, env, rank)?;
            env.pop();
            Ok(Ty::arrow(ty.clone(), bty))
        }
        PrTerm::App(f, a) => {
            let fty = rank_walk(f, env, rank)?;
            let aty = rank_walk(a, env, rank)?;
            match fty {
                Ty::Arrow(dom, cod) if *dom == aty => Ok(*cod),
                Ty::Arrow(dom, _) => Err(TypeError::Mismatch {
                    expected: dom.to_string(),
                    found: aty.to_string(),
                    context: "application argument".into(),
                }),
                other => Err(TypeError::NotAFunction(other.to_string())),
            }
        }
        PrTerm::Pair(a, b) => Ok(Ty::prod(rank_walk(a, env, rank)?, rank_walk(b, env, rank)?)),
        PrTerm::P0(a) => match rank_walk(a, env, rank)? {
            Ty::Prod(l, _) => Ok(*l),
            other => Err(TypeError::NotAProduct(other.to_string())),
        },
        PrTerm::P1(a) => match rank_walk(a, env, rank)? {
            Ty::Prod(_, r) => Ok(*r),
            other => Err(TypeError::NotAProduct(other.to_string())),
        },
        PrTerm::Inl(a, right) => Ok(Ty::sum(rank_walk(a, env, rank)?, right.clone())),
        PrTerm::Inr(left, a) => Ok(Ty::sum(left.clone(), rank_walk(a, env, rank)?)),
        PrTerm::IsLeft(a) => match rank_walk(a, env, rank)? {
            Ty::Sum(..) => Ok(Ty::Nat),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        PrTerm::EltL(a) => match rank_walk(a, env, rank)? {
            Ty::Sum(l, _) => Ok(*l),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        PrTerm::EltR(a) => match rank_walk(a, env, rank)? {
            Ty::Sum(_, r) => Ok(*r),
            other => Err(TypeError::NotASum(other.to_string())),
        },
        _ => infer(t, env),
    }
}

/// Standard library of small arithmetic terms used across the crate.
pub mod stdlib {
    use super::{PrTerm, Ty};

    /// `add : N → N → N` via recursion on the second argument.
    pub fn add() -> PrTerm {
        // λm. R_{m, λn.λp. S p}
        PrTerm::lam(
            "m",
            Ty::Nat,
            PrTerm::rec(
                PrTerm::var("m"),
                PrTerm::lam(
                    "n",
                    Ty::Nat,
                    PrTerm::lam("p", Ty::Nat, PrTerm::app(PrTerm::Succ, PrTerm::var("p"))),
                ),
            ),
        )
    }

    /// `mul : N → N → N`.
    pub fn mul() -> PrTerm {
        // λm. R_{0, λn.λp. add m p}
        PrTerm::lam(
            "m",
            Ty::Nat,
            PrTerm::rec(
                PrTerm::Zero,
                PrTerm::lam(
                    "n",
                    Ty::Nat,
                    PrTerm::lam(
                        "p",
                        Ty::Nat,
                        PrTerm::apps(add(), [PrTerm::var("m"), PrTerm::var("p")]),
                    ),
                ),
            ),
        )
    }

    /// `pred : N → N` with `pred 0 = 0`.
    pub fn pred() -> PrTerm {
        PrTerm::rec(
            PrTerm::Zero,
            PrTerm::lam("n", Ty::Nat, PrTerm::lam("p", Ty::Nat, PrTerm::var("n"))),
        )
    }

    /// Cut-off subtraction `sub m n = m ∸ n`.
    pub fn sub() -> PrTerm {
        // λm. R_{m, λn.λp. pred p}
        PrTerm::lam(
            "m",
            Ty::Nat,
            PrTerm::rec(
                PrTerm::var("m"),
                PrTerm::lam(
                    "n",
                    Ty::Nat,
                    PrTerm::lam("p", Ty::Nat, PrTerm::app(pred(), PrTerm::var("p"))),
                ),
            ),
        )
    }

    /// Characteristic term of equality: `eq m n = 0` iff `m = n`.
    pub fn char_eq() -> PrTerm {
        PrTerm::lam(
            "m",
            Ty::Nat,
            PrTerm::lam(
                "n",
                Ty::Nat,
                PrTerm::apps(
                    add(),
                    [
                        PrTerm::apps(sub(), [PrTerm::var("m"), PrTerm::var("n")]),
                        PrTerm::apps(sub(), [PrTerm::var("n"), PrTerm::var("m")]),
                    ],
                ),
            ),
        )
    }

    /// Characteristic term of `<=`: `leq m n = 0` iff `m <= n`.
    pub fn char_leq() -> PrTerm {
        sub()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursor_type() {
        // R_{s,t} with s : N, t : N→N→N has type N→N
        let r = PrTerm::rec(
            PrTerm::Zero,
            PrTerm::lam("n", Ty::Nat, PrTerm::lam("p", Ty::Nat, PrTerm::var("n"))),
        );
        assert_eq!(typecheck_closed(&r).unwrap(), Ty::arrow(Ty::Nat, Ty::Nat));
    }

    #[test]
    fn identity_type() {
        let id = PrTerm::lam("x", Ty::Nat, PrTerm::var("x"));
        assert_eq!(typecheck_closed(&id).unwrap(), Ty::arrow(Ty::Nat, Ty::Nat));
    }

    #[test]
    fn type_clash_rejected() {
        // S applied to a function
        let bad = PrTerm::app(PrTerm::Succ, PrTerm::lam("x", Ty::Nat, PrTerm::var("x")));
        assert!(typecheck_closed(&bad).is_err());
    }

    #[test]
    fn rank_of_add_is_zero() {
        assert_eq!(recursor_rank(&stdlib::add()).unwrap(), 0);
    }

    #[test]
    fn rank_recursor_free() {
        let id = PrTerm::lam("x", Ty::Nat, PrTerm::var("x"));
        assert_eq!(recursor_rank(&id).unwrap(), 0);
    }

    #[test]
    fn rank_of_function_valued_recursor() {
        // recursion at type N→N has rank 1
        let f = Ty::arrow(Ty::Nat, Ty::Nat);
        let r = PrTerm::rec(
            PrTerm::lam("x", Ty::Nat, PrTerm::var("x")),
            PrTerm::lam("n", Ty::Nat, PrTerm::lam("p", f.clone(), PrTerm::var("p"))),
        );
        assert_eq!(recursor_rank(&r).unwrap(), 1);
    }

    #[test]
    fn alpha_equality() {
        let a = PrTerm::lam("x", Ty::Nat, PrTerm::var("x"));
        let b = PrTerm::lam("y", Ty::Nat, PrTerm::var("y"));
        assert_eq!(a, b);
    }

    #[test]
    fn levels() {
        assert_eq!(Ty::Nat.level(), 0);
        assert_eq!(Ty::arrow(Ty::Nat, Ty::Nat).level(), 1);
        assert_eq!(Ty::arrow(Ty::arrow(Ty::Nat, Ty::Nat), Ty::Nat).level(), 2);
        assert_eq!(Ty::prod(Ty::Nat, Ty::arrow(Ty::Nat, Ty::Nat)).level(), 1);
    }
}
