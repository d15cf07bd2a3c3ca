//! Elimination of sum types.
//!
//! `σ + τ` is encoded as `N × σ × τ` (right-nested), with
//! `inl(a) = ⟨0, a, 0^τ⟩` and `inr(a) = ⟨1, 0^σ, a⟩`; `isleft` reads the tag
//! and the accessors read the payload slots. The pass rewrites terms and all
//! type annotations; on closed terms of type `N` it does not change
//! `eval_nat`.

use super::{PrTerm, Ty};

pub(crate) fn encode_ty(ty: &Ty) -> Ty {
    match ty {
        Ty::Nat => Ty::Nat,
        Ty::Arrow(a, b) => Ty::arrow(encode_ty(a), encode_ty(b)),
        Ty::Prod(a, b) => Ty::prod(encode_ty(a), encode_ty(b)),
        Ty::Sum(a, b) => Ty::prod(Ty::Nat, Ty::prod(encode_ty(a), encode_ty(b))),
    }
}

/// Rewrites a term to one mentioning no sum types.
pub fn eliminate_sums(t: &PrTerm) -> PrTerm {
    match t {
        PrTerm::Var(_) | PrTerm::Zero | PrTerm::Succ => t.clone(),
        PrTerm::App(f, a) => PrTerm::app(eliminate_sums(f), eliminate_sums(a)),
        PrTerm::Lam(x, ty, body) => {
            PrTerm::Lam(x.clone(), encode_ty(ty), Box::new(eliminate_sums(body)))
        }
        PrTerm::Rec(s, step) => PrTerm::rec(eliminate_sums(s), eliminate_sums(step)),
        PrTerm::Pair(a, b) => PrTerm::pair(eliminate_sums(a), eliminate_sums(b)),
        PrTerm::P0(a) => PrTerm::p0(eliminate_sums(a)),
        PrTerm::P1(a) => PrTerm::p1(eliminate_sums(a)),
        PrTerm::Inl(a, right) => PrTerm::pair(
            PrTerm::Zero,
            PrTerm::pair(eliminate_sums(a), PrTerm::ZeroC(encode_ty(right))),
        ),
        PrTerm::Inr(left, a) => PrTerm::pair(
            PrTerm::numeral(1),
            PrTerm::pair(PrTerm::ZeroC(encode_ty(left)), eliminate_sums(a)),
        ),
        PrTerm::IsLeft(a) => PrTerm::p0(eliminate_sums(a)),
        PrTerm::EltL(a) => PrTerm::p0(PrTerm::p1(eliminate_sums(a))),
        PrTerm::EltR(a) => PrTerm::p1(PrTerm::p1(eliminate_sums(a))),
        PrTerm::ZeroC(ty) => PrTerm::ZeroC(encode_ty(ty)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prt::{eval_nat, normalize, typecheck_closed};

    #[test]
    fn inl_encoding() {
        let t = PrTerm::inl(PrTerm::var("a"), Ty::Nat);
        let enc = eliminate_sums(&t);
        assert_eq!(
            enc,
            PrTerm::pair(
                PrTerm::Zero,
                PrTerm::pair(PrTerm::var("a"), PrTerm::ZeroC(Ty::Nat))
            )
        );
    }

    #[test]
    fn inr_encoding() {
        let t = PrTerm::inr(Ty::Nat, PrTerm::var("a"));
        let enc = eliminate_sums(&t);
        assert_eq!(
            enc,
            PrTerm::pair(
                PrTerm::numeral(1),
                PrTerm::pair(PrTerm::ZeroC(Ty::Nat), PrTerm::var("a"))
            )
        );
    }

    #[test]
    fn sum_free_unchanged() {
        let t = PrTerm::lam("x", Ty::Nat, PrTerm::app(PrTerm::Succ, PrTerm::var("x")));
        assert_eq!(eliminate_sums(&t), t);
    }

    #[test]
    fn encoded_type_checks_and_eval_preserved() {
        // case analysis on a sum, encoded away
        let scrut = PrTerm::inr(Ty::Nat, PrTerm::numeral(4));
        let t = PrTerm::ite(
            Ty::Nat,
            PrTerm::IsLeft(Box::new(scrut.clone())),
            PrTerm::EltL(Box::new(scrut.clone())),
            PrTerm::app(PrTerm::Succ, PrTerm::EltR(Box::new(scrut))),
        );
        let before = eval_nat(&t, &[]).unwrap();
        let enc = eliminate_sums(&t);
        let ty = typecheck_closed(&enc).unwrap();
        assert!(!ty.contains_sum());
        assert_eq!(eval_nat(&enc, &[]).unwrap(), before);
        assert_eq!(before, 5);
        // normal forms exist on both sides
        normalize(&t).unwrap();
        normalize(&enc).unwrap();
    }
}
