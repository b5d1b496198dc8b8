//! Self-similar group actions on k-monoids and the Zappa–Szép products they
//! define.
//!
//! A group `G` generated by named symbols acts on the base monoid letter by
//! letter: each generator `g` and letter `x` give an image `g·x` of the same
//! color and a restriction `g|_x ∈ G`. Group elements are represented by
//! freely reduced words in the generators and their formal inverses.

mod action;
mod laws;
mod relators;

pub use action::{base_reference, GeneralizedElement, SelfSimilarAction};
pub use laws::{transversal_check, units_and_atoms, wfp_check, zappa_szep_identities, WfpReport};
pub use relators::{relators_to_squares, split_relator, InverseNumbering};

use std::fmt;

/// A generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub generator: u16,
    pub inverse: bool,
}

impl Symbol {
    pub fn new(generator: u16, inverse: bool) -> Self {
        Symbol { generator, inverse }
    }

    pub fn inverse(self) -> Symbol {
        Symbol {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Dense index: `2·generator + inverse`.
    pub fn index(self) -> usize {
        2 * self.generator as usize + self.inverse as usize
    }
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<Symbol>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn symbol(s: Symbol) -> Self {
        GroupWord(vec![s])
    }

    /// Free reduction of the given sequence.
    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        let mut out: Vec<Symbol> = Vec::new();
        for s in symbols {
            if out.last() == Some(&s.inverse()) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        GroupWord(out)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord::from_symbols(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// Length of the reduced product `self·other` without building it.
    pub fn product_len(&self, other: &GroupWord) -> usize {
        let cancel = self
            .0
            .iter()
            .rev()
            .zip(other.0.iter())
            .take_while(|(a, b)| a.inverse() == **b)
            .count();
        self.0.len() + other.0.len() - 2 * cancel
    }

    /// Every reduced word of length `≤ max_len` over `generators` generators,
    /// shortest first.
    pub fn ball(generators: usize, max_len: usize) -> Vec<GroupWord> {
        let symbols: Vec<Symbol> = (0..generators as u16)
            .flat_map(|g| [Symbol::new(g, false), Symbol::new(g, true)])
            .collect();
        let mut out = vec![GroupWord::identity()];
        let mut layer = vec![GroupWord::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &s in &symbols {
                    if w.0.last() == Some(&s.inverse()) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(s);
                    next.push(GroupWord(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|s| format!("g{}{}", s.generator, if s.inverse { "⁻¹" } else { "" }))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u16) -> Symbol {
        Symbol::new(i, false)
    }

    #[test]
    fn free_reduction() {
        let w = GroupWord::from_symbols([g(0), g(1), g(1).inverse(), g(0).inverse(), g(1)]);
        assert_eq!(w, GroupWord::symbol(g(1)));
        let x = GroupWord::from_symbols([g(0), g(1)]);
        assert!(x.concat(&x.inverse()).is_identity());
        assert_eq!(x.inverse().symbols(), &[g(1).inverse(), g(0).inverse()]);
    }

    #[test]
    fn product_len_matches_reduction() {
        let ball = GroupWord::ball(2, 3);
        for a in &ball {
            for b in ball.iter().step_by(3) {
                assert_eq!(a.product_len(b), a.concat(b).len());
            }
        }
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(GroupWord::ball(1, 3).len(), 7);
        assert_eq!(GroupWord::ball(2, 3).len(), 1 + 4 + 12 + 36);
        let ball = GroupWord::ball(2, 2);
        let mut sorted = ball.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ball.len());
    }
}
