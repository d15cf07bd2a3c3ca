//! S-expression grammar for PR types and terms.
//!
//! ```text
//! ty   ::= N | (-> ty ty) | (* ty ty) | (+ ty ty)
//! term ::= x | 0 | S | 3            ; decimals are numeral sugar
//!        | (var x) | (app t t ...) | (lam (x ty) t) | (rec t t)
//!        | (pair t t) | (p0 t) | (p1 t)
//!        | (inl t ty) | (inr ty t) | (isleft t) | (eltl t) | (eltr t)
//!        | (zero ty)
//! ```
//!
//! The printer flattens application spines to `(app f a b ...)` and prints
//! pure numerals as decimals.

use super::{PrTerm, Ty};
use crate::sexp::{parse, ParseError, Sexp};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError { line: 0, col: 0, msg: msg.into() }
}

pub fn ty_to_sexp(ty: &Ty) -> Sexp {
    match ty {
        Ty::Nat => Sexp::sym("N"),
        Ty::Arrow(a, b) => Sexp::List(vec![Sexp::sym("->"), ty_to_sexp(a), ty_to_sexp(b)]),
        Ty::Prod(a, b) => Sexp::List(vec![Sexp::sym("*"), ty_to_sexp(a), ty_to_sexp(b)]),
        Ty::Sum(a, b) => Sexp::List(vec![Sexp::sym("+"), ty_to_sexp(a), ty_to_sexp(b)]),
    }
}

pub fn ty_from_sexp(e: &Sexp) -> Result<Ty, ParseError> {
    match e {
        Sexp::Sym(s) if s == "N" => Ok(Ty::Nat),
        Sexp::Sym(s) => Err(err(format!("unknown type `{s}`"))),
        Sexp::List(items) => {
            let head = items
                .first()
                .and_then(|h| h.as_sym())
                .ok_or_else(|| err("type must start with a symbol"))?;
            if items.len() != 3 {
                return Err(err(format!("type constructor `{head}` expects 2 arguments")));
            }
            let a = ty_from_sexp(&items[1])?;
            let b = ty_from_sexp(&items[2])?;
            match head {
                "->" => Ok(Ty::arrow(a, b)),
                "*" => Ok(Ty::prod(a, b)),
                "+" => Ok(Ty::sum(a, b)),
                other => Err(err(format!("unknown type constructor `{other}`"))),
            }
        }
    }
}

pub fn prterm_to_sexp(t: &PrTerm) -> Sexp {
    if let Some(n) = t.as_numeral() {
        return Sexp::sym(n.to_string());
    }
    match t {
        PrTerm::Var(x) => Sexp::sym(x),
        PrTerm::Zero => Sexp::sym("0"),
        PrTerm::Succ => Sexp::sym("S"),
        PrTerm::App(..) => {
            // flatten the spine
            let mut spine = Vec::new();
            let mut cur = t;
            while let PrTerm::App(f, a) = cur {
                spine.push(prterm_to_sexp(a));
                cur = f;
            }
            spine.push(prterm_to_sexp(cur));
            spine.push(Sexp::sym("app"));
            spine.reverse();
            Sexp::List(spine)
        }
        PrTerm::Lam(x, ty, body) => Sexp::List(vec![
            Sexp::sym("lam"),
            Sexp::List(vec![Sexp::sym(x), ty_to_sexp(ty)]),
            prterm_to_sexp(body),
        ]),
        PrTerm::Rec(s, step) => {
            Sexp::List(vec![Sexp::sym("rec"), prterm_to_sexp(s), prterm_to_sexp(step)])
        }
        PrTerm::Pair(a, b) => {
            Sexp::List(vec![Sexp::sym("pair"), prterm_to_sexp(a), prterm_to_sexp(b)])
        }
        PrTerm::P0(a) => Sexp::List(vec![Sexp::sym("p0"), prterm_to_sexp(a)]),
        PrTerm::P1(a) => Sexp::List(vec![Sexp::sym("p1"), prterm_to_sexp(a)]),
        PrTerm::Inl(a, ty) => {
            Sexp::List(vec![Sexp::sym("inl"), prterm_to_sexp(a), ty_to_sexp(ty)])
        }
        PrTerm::Inr(ty, a) => {
            Sexp::List(vec![Sexp::sym("inr"), ty_to_sexp(ty), prterm_to_sexp(a)])
        }
        PrTerm::IsLeft(a) => Sexp::List(vec![Sexp::sym("isleft"), prterm_to_sexp(a)]),
        PrTerm::EltL(a) => Sexp::List(vec![Sexp::sym("eltl"), prterm_to_sexp(a)]),
        PrTerm::EltR(a) => Sexp::List(vec![Sexp::sym("eltr"), prterm_to_sexp(a)]),
        PrTerm::ZeroC(ty) => Sexp::List(vec![Sexp::sym("zero"), ty_to_sexp(ty)]),
    }
}

pub fn prterm_from_sexp(e: &Sexp) -> Result<PrTerm, ParseError> {
    match e {
        Sexp::Sym(s) => match s.as_str() {
            "S" => Ok(PrTerm::Succ),
            _ => {
                if let Ok(n) = s.parse::<u64>() {
                    Ok(PrTerm::numeral(n))
                } else {
                    Ok(PrTerm::var(s.clone()))
                }
            }
        },
        Sexp::List(items) => {
            let head = items
                .first()
                .and_then(|h| h.as_sym())
                .ok_or_else(|| err("PR term must start with a keyword"))?;
            let need = |n: usize| -> Result<(), ParseError> {
                if items.len() != n + 1 {
                    Err(err(format!("`{head}` expects {n} arguments")))
                } else {
                    Ok(())
                }
            };
            match head {
                "app" => {
                    if items.len() < 3 {
                        return Err(err("`app` expects at least 2 arguments"));
                    }
                    let f = prterm_from_sexp(&items[1])?;
                    let args = items[2..]
                        .iter()
                        .map(prterm_from_sexp)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(PrTerm::apps(f, args))
                }
                "lam" => {
                    need(2)?;
                    let binder = items[1]
                        .as_list()
                        .filter(|l| l.len() == 2)
                        .ok_or_else(|| err("`lam` binder must be (name ty)"))?;
                    let name = binder[0]
                        .as_sym()
                        .ok_or_else(|| err("binder name must be a symbol"))?;
                    let ty = ty_from_sexp(&binder[1])?;
                    Ok(PrTerm::lam(name, ty, prterm_from_sexp(&items[2])?))
                }
                "rec" => {
                    need(2)?;
                    Ok(PrTerm::rec(prterm_from_sexp(&items[1])?, prterm_from_sexp(&items[2])?))
                }
                "pair" => {
                    need(2)?;
                    Ok(PrTerm::pair(prterm_from_sexp(&items[1])?, prterm_from_sexp(&items[2])?))
                }
                "p0" => {
                    need(1)?;
                    Ok(PrTerm::p0(prterm_from_sexp(&items[1])?))
                }
                "p1" => {
                    need(1)?;
                    Ok(PrTerm::p1(prterm_from_sexp(&items[1])?))
                }
                "inl" => {
                    need(2)?;
                    Ok(PrTerm::inl(prterm_from_sexp(&items[1])?, ty_from_sexp(&items[2])?))
                }
                "inr" => {
                    need(2)?;
                    Ok(PrTerm::inr(ty_from_sexp(&items[1])?, prterm_from_sexp(&items[2])?))
                }
                "isleft" => {
                    need(1)?;
                    Ok(PrTerm::IsLeft(Box::new(prterm_from_sexp(&items[1])?)))
                }
                "eltl" => {
                    need(1)?;
                    Ok(PrTerm::EltL(Box::new(prterm_from_sexp(&items[1])?)))
                }
                "eltr" => {
                    need(1)?;
                    Ok(PrTerm::EltR(Box::new(prterm_from_sexp(&items[1])?)))
                }
                "zero" => {
                    need(1)?;
                    Ok(PrTerm::ZeroC(ty_from_sexp(&items[1])?))
                }
                "var" => {
                    need(1)?;
                    let name = items[1]
                        .as_sym()
                        .ok_or_else(|| err("`var` expects a symbol"))?;
                    Ok(PrTerm::var(name))
                }
                other => Err(err(format!("unknown PR term keyword `{other}`"))),
            }
        }
    }
}

pub fn parse_prterm(src: &str) -> Result<PrTerm, ParseError> {
    prterm_from_sexp(&parse(src)?)
}

pub fn parse_ty(src: &str) -> Result<Ty, ParseError> {
    ty_from_sexp(&parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_spec_example() {
        let t = parse_prterm("(lam (x N) (app S (var x)))").unwrap();
        assert_eq!(
            t,
            PrTerm::lam("x", Ty::Nat, PrTerm::app(PrTerm::Succ, PrTerm::var("x")))
        );
        let printed = prterm_to_sexp(&t).to_string();
        assert_eq!(printed, "(lam (x N) (app S x))");
        assert_eq!(parse_prterm(&printed).unwrap(), t);
    }

    #[test]
    fn numerals_print_as_decimals() {
        assert_eq!(prterm_to_sexp(&PrTerm::numeral(3)).to_string(), "3");
        assert_eq!(parse_prterm("3").unwrap(), PrTerm::numeral(3));
    }

    #[test]
    fn type_roundtrip() {
        let ty = parse_ty("(-> (* N N) (+ N (-> N N)))").unwrap();
        assert_eq!(parse_ty(&ty_to_sexp(&ty).to_string()).unwrap(), ty);
    }

    #[test]
    fn printer_output_reparses() {
        let t = PrTerm::apps(
            crate::prt::stdlib::add(),
            [PrTerm::numeral(2), PrTerm::var("k")],
        );
        let printed = prterm_to_sexp(&t).to_string();
        assert_eq!(parse_prterm(&printed).unwrap(), t);
    }
}
