//! S-expression grammar for terms and formulas.
//!
//! ```text
//! term    ::= x | 0 | 7 | (S term) | (+ term term) | ...
//! formula ::= (bot) | (atom R term...) | (catom R term...)
//!           | (and f f) | (or f f) | (imp f f) | (not f)
//!           | (forall x f) | (exists x f)
//! ```
//!
//! Bare symbols are variables unless they name a registered 0-ary function;
//! decimal literals are parsed as unary numerals. The printer is canonical
//! (no `not`, no decimals) and round-trips bit-exactly on its own output.

use super::{Formula, Signature, Term};
use crate::sexp::{parse, ParseError, Sexp};

fn err(msg: impl Into<String>) -> ParseError {
    ParseError { line: 0, col: 0, msg: msg.into() }
}

pub fn term_to_sexp(t: &Term) -> Sexp {
    match t {
        Term::Var(x) => Sexp::sym(x),
        Term::App(f, args) if args.is_empty() => Sexp::sym(f),
        Term::App(f, args) => {
            let mut items = vec![Sexp::sym(f)];
            items.extend(args.iter().map(term_to_sexp));
            Sexp::List(items)
        }
    }
}

pub fn term_from_sexp(sig: &Signature, e: &Sexp) -> Result<Term, ParseError> {
    match e {
        Sexp::Sym(s) => {
            if let Ok(n) = s.parse::<u64>() {
                if sig.fn_arity(s).is_err() || s == "0" {
                    return Ok(Term::numeral(n));
                }
            }
            match sig.fn_arity(s) {
                Ok(0) => Ok(Term::app(s.clone(), vec![])),
                _ => Ok(Term::var(s.clone())),
            }
        }
        Sexp::List(items) => {
            let head = items
                .first()
                .and_then(|h| h.as_sym())
                .ok_or_else(|| err("term application must start with a symbol"))?;
            let args = items[1..]
                .iter()
                .map(|a| term_from_sexp(sig, a))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::app(head, args))
        }
    }
}

pub fn formula_to_sexp(phi: &Formula) -> Sexp {
    match phi {
        Formula::Bot => Sexp::List(vec![Sexp::sym("bot")]),
        Formula::Atom(r, args) => {
            let mut items = vec![Sexp::sym("atom"), Sexp::sym(r)];
            items.extend(args.iter().map(term_to_sexp));
            Sexp::List(items)
        }
        Formula::NegAtom(r, args) => {
            let mut items = vec![Sexp::sym("catom"), Sexp::sym(r)];
            items.extend(args.iter().map(term_to_sexp));
            Sexp::List(items)
        }
        Formula::And(a, b) => {
            Sexp::List(vec![Sexp::sym("and"), formula_to_sexp(a), formula_to_sexp(b)])
        }
        Formula::Or(a, b) => {
            Sexp::List(vec![Sexp::sym("or"), formula_to_sexp(a), formula_to_sexp(b)])
        }
        Formula::Imp(a, b) => {
            Sexp::List(vec![Sexp::sym("imp"), formula_to_sexp(a), formula_to_sexp(b)])
        }
        Formula::All(x, body) => {
            Sexp::List(vec![Sexp::sym("forall"), Sexp::sym(x), formula_to_sexp(body)])
        }
        Formula::Ex(x, body) => {
            Sexp::List(vec![Sexp::sym("exists"), Sexp::sym(x), formula_to_sexp(body)])
        }
    }
}

pub fn formula_from_sexp(sig: &Signature, e: &Sexp) -> Result<Formula, ParseError> {
    let items = e.as_list().ok_or_else(|| err("formula must be a list form"))?;
    let head = items
        .first()
        .and_then(|h| h.as_sym())
        .ok_or_else(|| err("formula must start with a keyword"))?;
    let arity_err = |want: usize| err(format!("`{head}` expects {want} arguments"));
    match head {
        "bot" => {
            if items.len() != 1 {
                return Err(arity_err(0));
            }
            Ok(Formula::Bot)
        }
        "atom" | "catom" => {
            let rel = items
                .get(1)
                .and_then(|h| h.as_sym())
                .ok_or_else(|| err(format!("`{head}` needs a relation symbol")))?;
            let args = items[2..]
                .iter()
                .map(|a| term_from_sexp(sig, a))
                .collect::<Result<Vec<_>, _>>()?;
            if head == "atom" {
                Ok(Formula::Atom(rel.to_string(), args))
            } else {
                Ok(Formula::NegAtom(rel.to_string(), args))
            }
        }
        "and" | "or" | "imp" => {
            if items.len() != 3 {
                return Err(arity_err(2));
            }
            let a = formula_from_sexp(sig, &items[1])?;
            let b = formula_from_sexp(sig, &items[2])?;
            Ok(match head {
                "and" => Formula::and(a, b),
                "or" => Formula::or(a, b),
                _ => Formula::imp(a, b),
            })
        }
        "not" => {
            if items.len() != 2 {
                return Err(arity_err(1));
            }
            Ok(Formula::not(formula_from_sexp(sig, &items[1])?))
        }
        "iff" => {
            if items.len() != 3 {
                return Err(arity_err(2));
            }
            let a = formula_from_sexp(sig, &items[1])?;
            let b = formula_from_sexp(sig, &items[2])?;
            Ok(Formula::iff(a, b))
        }
        "forall" | "exists" => {
            if items.len() != 3 {
                return Err(arity_err(2));
            }
            let x = items[1]
                .as_sym()
                .ok_or_else(|| err("quantifier variable must be a symbol"))?;
            let body = formula_from_sexp(sig, &items[2])?;
            Ok(if head == "forall" {
                Formula::all(x, body)
            } else {
                Formula::ex(x, body)
            })
        }
        other => Err(err(format!("unknown formula keyword `{other}`"))),
    }
}

/// Parse a formula from source text.
pub fn parse_formula(sig: &Signature, src: &str) -> Result<Formula, ParseError> {
    formula_from_sexp(sig, &parse(src)?)
}

/// Parse a term from source text.
pub fn parse_term(sig: &Signature, src: &str) -> Result<Term, ParseError> {
    term_from_sexp(sig, &parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Signature;

    #[test]
    fn formula_roundtrip() {
        let sig = Signature::arith_with_test_relations();
        let src = "(forall x (exists y (atom R x y)))";
        let phi = parse_formula(&sig, src).unwrap();
        assert_eq!(formula_to_sexp(&phi).to_string(), src);
    }

    #[test]
    fn imp_bot_example() {
        let sig = Signature::arith_with_test_relations();
        let phi = parse_formula(&sig, "(imp (atom p) (bot))").unwrap();
        assert_eq!(phi, Formula::not(Formula::atom("p", vec![])));
        assert_eq!(formula_to_sexp(&phi).to_string(), "(imp (atom p) (bot))");
    }

    #[test]
    fn not_sugar_prints_canonically() {
        let sig = Signature::arith();
        let phi = parse_formula(&sig, "(not (atom = x 0))").unwrap();
        assert_eq!(formula_to_sexp(&phi).to_string(), "(imp (atom = x 0) (bot))");
    }

    #[test]
    fn numerals_and_zero_ary() {
        let sig = Signature::arith();
        let t = parse_term(&sig, "(+ 2 (S x))").unwrap();
        assert_eq!(
            t,
            Term::app("+", vec![Term::numeral(2), Term::succ(Term::var("x"))])
        );
        // numerals print structurally
        assert_eq!(term_to_sexp(&t).to_string(), "(+ (S (S 0)) (S x))");
        // and parse back to the same value
        let back = parse_term(&sig, &term_to_sexp(&t).to_string()).unwrap();
        assert_eq!(back, t);
    }
}
