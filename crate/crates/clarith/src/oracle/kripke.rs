//! Finite Kripke models for propositional minimal and intuitionistic logic.
//!
//! Worlds form a finite poset (stored as a reflexive-transitive reachability
//! matrix); valuations are monotone along the order. In minimal mode `⊥` is
//! just another atom; in intuitionistic mode it is absurdity and is forced
//! nowhere.

use crate::logic::Formula;
use std::collections::BTreeSet;
use std::fmt;

/// Pseudo-atom standing for `⊥` in minimal-mode valuations.
pub const BOT_ATOM: &str = "_bot";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    /// `order[i][j]` iff world `j` is reachable from (≥) world `i`.
    /// Reflexive and transitive.
    pub order: Vec<Vec<bool>>,
    /// Atoms forced at each world, keyed by the atom's printed form.
    pub val: Vec<BTreeSet<String>>,
}

impl KripkeModel {
    pub fn worlds(&self) -> usize {
        self.order.len()
    }

    /// Builds a tree-shaped model from a parent vector (`parent[0]` unused;
    /// `parent[i] < i` for `i > 0`).
    pub fn tree(parents: &[usize], val: Vec<BTreeSet<String>>) -> KripkeModel {
        let n = parents.len();
        assert_eq!(n, val.len());
        let mut order = vec![vec![false; n]; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
        }
        // j reachable from i iff i is an ancestor of j
        for j in 1..n {
            let mut a = j;
            while a != 0 {
                a = parents[a];
                order[a][j] = true;
            }
        }
        KripkeModel { order, val }
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(kripke (worlds {})", self.worlds())?;
        for i in 0..self.worlds() {
            for j in 0..self.worlds() {
                if i != j && self.order[i][j] {
                    write!(f, " (le {i} {j})")?;
                }
            }
        }
        for (i, atoms) in self.val.iter().enumerate() {
            write!(f, " (val {i}")?;
            for a in atoms {
                write!(f, " {a}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

/// Key under which an atomic formula is looked up in a valuation.
pub(crate) fn atom_key(phi: &Formula) -> String {
    phi.to_string()
}

/// Kripke forcing for quantifier-free formulas. `bot_as_atom` selects
/// minimal mode. Complemented atoms are treated as atoms of their own; the
/// decision procedure unfolds them before calling in.
pub fn forces(m: &KripkeModel, w: usize, phi: &Formula, bot_as_atom: bool) -> bool {
    match phi {
        Formula::Bot => bot_as_atom && m.val[w].contains(BOT_ATOM),
        Formula::Atom(..) | Formula::NegAtom(..) => m.val[w].contains(&atom_key(phi)),
        Formula::And(a, b) => {
            forces(m, w, a, bot_as_atom) && forces(m, w, b, bot_as_atom)
        }
        Formula::Or(a, b) => forces(m, w, a, bot_as_atom) || forces(m, w, b, bot_as_atom),
        Formula::Imp(a, b) => (0..m.worlds()).all(|v| {
            !m.order[w][v] || !forces(m, v, a, bot_as_atom) || forces(m, v, b, bot_as_atom)
        }),
        Formula::All(..) | Formula::Ex(..) => {
            unreachable!("Kripke forcing is propositional only")
        }
    }
}

/// Independent forcing evaluator used to re-verify countermodels: computes
/// the full forcing table bottom-up over subformulas instead of recursing.
pub fn forces_spec(m: &KripkeModel, w: usize, phi: &Formula, bot_as_atom: bool) -> bool {
    let mut subs: Vec<&Formula> = Vec::new();
    collect_subformulas(phi, &mut subs);
    // children come before parents in `subs`
    let mut table: Vec<Vec<bool>> = Vec::with_capacity(subs.len());
    for (idx, sub) in subs.iter().enumerate() {
        let row: Vec<bool> = (0..m.worlds())
            .map(|v| match sub {
                Formula::Bot => bot_as_atom && m.val[v].contains(BOT_ATOM),
                Formula::Atom(..) | Formula::NegAtom(..) => {
                    m.val[v].contains(&atom_key(sub))
                }
                Formula::And(a, b) => {
                    table[pos_of(&subs[..idx], a)][v] && table[pos_of(&subs[..idx], b)][v]
                }
                Formula::Or(a, b) => {
                    table[pos_of(&subs[..idx], a)][v] || table[pos_of(&subs[..idx], b)][v]
                }
                Formula::Imp(a, b) => {
                    let ia = pos_of(&subs[..idx], a);
                    let ib = pos_of(&subs[..idx], b);
                    (0..m.worlds()).all(|u| !m.order[v][u] || !table[ia][u] || table[ib][u])
                }
                _ => unreachable!(),
            })
            .collect();
        table.push(row);
    }
    table[subs.len() - 1][w]
}

fn pos_of(subs: &[&Formula], target: &Formula) -> usize {
    subs.iter()
        .position(|s| std::ptr::eq(*s as *const Formula, target as *const Formula))
        .expect("subformula indexed before parent")
}

fn collect_subformulas<'a>(phi: &'a Formula, out: &mut Vec<&'a Formula>) {
    match phi {
        Formula::Bot | Formula::Atom(..) | Formula::NegAtom(..) => {}
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            collect_subformulas(a, out);
            collect_subformulas(b, out);
        }
        Formula::All(..) | Formula::Ex(..) => unreachable!(),
    }
    out.push(phi);
}

/// Valuation monotonicity along the order.
pub fn check_monotone(m: &KripkeModel) -> bool {
    for i in 0..m.worlds() {
        for j in 0..m.worlds() {
            if m.order[i][j] && !m.val[i].is_subset(&m.val[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Formula;

    fn atom(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    #[test]
    fn two_world_refutes_double_negation_elim() {
        // w0 < w1, p true only at w1: w0 forces ¬¬p but not p
        let mut v0 = BTreeSet::new();
        let mut v1 = BTreeSet::new();
        v1.insert(atom_key(&atom("p")));
        let _ = &mut v0;
        let m = KripkeModel::tree(&[0, 0], vec![v0, v1]);
        assert!(check_monotone(&m));
        let p = atom("p");
        let nnp = Formula::not(Formula::not(p.clone()));
        assert!(!forces(&m, 0, &p, false));
        assert!(forces(&m, 0, &nnp, false));
        assert_eq!(forces(&m, 0, &nnp, false), forces_spec(&m, 0, &nnp, false));
    }

    #[test]
    fn minimal_mode_bot_atom() {
        // with ⊥ as an atom forced at the root, ⊥ → p is refutable
        let mut v0 = BTreeSet::new();
        v0.insert(BOT_ATOM.to_string());
        let m = KripkeModel::tree(&[0], vec![v0]);
        let phi = Formula::imp(Formula::Bot, atom("p"));
        assert!(!forces(&m, 0, &phi, true));
        // intuitionistic reading forces it
        assert!(forces(&m, 0, &phi, false));
    }

    #[test]
    fn spec_evaluator_agrees() {
        let mut v0 = BTreeSet::new();
        v0.insert(atom_key(&atom("q")));
        let mut v1 = v0.clone();
        v1.insert(atom_key(&atom("p")));
        let m = KripkeModel::tree(&[0, 0], vec![v0, v1]);
        let phi = Formula::imp(
            Formula::imp(atom("p"), atom("q")),
            Formula::or(atom("q"), Formula::not(atom("p"))),
        );
        for w in 0..2 {
            for bot_as_atom in [false, true] {
                assert_eq!(
                    forces(&m, w, &phi, bot_as_atom),
                    forces_spec(&m, w, &phi, bot_as_atom)
                );
            }
        }
    }
}
