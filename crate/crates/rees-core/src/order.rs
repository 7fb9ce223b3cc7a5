//! Term orders on monomials: grevlex on the total grading, lex, and block
//! elimination orders (grevlex inside each block, eliminated block first).

use std::cmp::Ordering;

use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermOrder {
    /// Graded reverse lexicographic on all variables.
    GrevlexTotal,
    /// Plain lexicographic, x1 > x2 > ... > T1 > ... > tags.
    Lex,
    /// Any monomial containing one of the `eliminated` variables is greater
    /// than any monomial free of them; grevlex within each block.
    Elimination { eliminated: Vec<usize> },
}

impl TermOrder {
    /// Elimination order whose eliminated block is the single variable `idx`.
    pub fn eliminate(idx: usize) -> TermOrder {
        TermOrder::Elimination {
            eliminated: vec![idx],
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            TermOrder::GrevlexTotal => a.cmp_grevlex(b, nvars),
            TermOrder::Lex => {
                for i in 0..nvars {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Elimination { eliminated } => {
                match a.cmp_grevlex_on(b, eliminated) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let rest: Vec<usize> = (0..nvars).filter(|i| !eliminated.contains(i)).collect();
                a.cmp_grevlex_on(b, &rest)
            }
        }
    }
}
