//! Monomial orders.
//!
//! Every order is realised as a sort key: a fixed-length integer array whose
//! lexicographic comparison coincides with the order. The Gröbner engine
//! sorts and compares keys only.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};

pub const KEY_LEN: usize = MAX_VARS + 2;
pub type Key = [i32; KEY_LEN];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Compare by the weight `w·e` first, then by `tiebreak`.
    Weight { weights: Vec<i32>, tiebreak: Box<MonomialOrder> },
    /// Consecutive variable blocks of the given sizes, each degrevlex; an
    /// earlier block dominates every later one (elimination order).
    Block(Vec<usize>),
}

impl MonomialOrder {
    /// Eliminates the first `k` variables of an `n`-variable ring.
    pub fn elimination(k: usize, n: usize) -> Self {
        MonomialOrder::Block(vec![k, n - k])
    }

    pub fn weighted(weights: Vec<i32>) -> Self {
        MonomialOrder::Weight { weights, tiebreak: Box::new(MonomialOrder::DegRevLex) }
    }

    pub fn key(&self, m: &Monomial) -> Key {
        let mut k = [0i32; KEY_LEN];
        self.fill_key(m, &mut k, 0, m.nvars());
        k
    }

    fn fill_key(&self, m: &Monomial, k: &mut Key, start: usize, n: usize) -> usize {
        match self {
            MonomialOrder::Lex => {
                for i in 0..n {
                    k[start + i] = m.exp(i) as i32;
                }
                start + n
            }
            MonomialOrder::DegRevLex => degrevlex_block(m, 0, n, k, start),
            MonomialOrder::Weight { weights, tiebreak } => {
                k[start] = (0..n).map(|i| weights.get(i).copied().unwrap_or(0) * m.exp(i) as i32).sum();
                tiebreak.fill_key(m, k, start + 1, n)
            }
            MonomialOrder::Block(sizes) => {
                let mut pos = start;
                let mut var = 0;
                for &s in sizes {
                    let s = s.min(n - var);
                    pos = degrevlex_block(m, var, s, k, pos);
                    var += s;
                }
                if var < n {
                    pos = degrevlex_block(m, var, n - var, k, pos);
                }
                pos
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Weight { weights, tiebreak } => {
                format!("weight({:?},{})", weights, tiebreak.name())
            }
            MonomialOrder::Block(s) => format!("block{:?}", s),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            other if other.starts_with("weight:") => {
                let weights = other["weight:".len()..]
                    .split(',')
                    .map(|w| w.trim().parse::<i32>().ok().filter(|&w| w > 0))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::InvalidArgument(format!("weights in `{other}` must be positive integers")))?;
                Ok(MonomialOrder::weighted(weights))
            }
            other => Err(Error::InvalidArgument(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// Degrevlex key of variables `from..from+len` written at `pos`: the block
/// degree, then the negated exponents from the last variable backwards.
fn degrevlex_block(m: &Monomial, from: usize, len: usize, k: &mut Key, pos: usize) -> usize {
    if len == 0 {
        return pos;
    }
    k[pos] = (from..from + len).map(|i| m.exp(i) as i32).sum();
    for j in 1..len {
        k[pos + j] = -(m.exp(from + len - j) as i32);
    }
    pos + len
}

/// Compares two monomials; errors when they live in different rings.
pub fn compare_monomials(a: &Monomial, b: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::VarMismatch(a.nvars(), b.nvars()));
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn documented_comparisons() {
        let drl = MonomialOrder::DegRevLex;
        assert_eq!(compare_monomials(&m(&[2, 0, 0, 0]), &m(&[1, 1, 0, 0]), &drl), Ok(Ordering::Greater));
        assert_eq!(compare_monomials(&m(&[1, 0, 0, 1]), &m(&[0, 2, 0, 0]), &drl), Ok(Ordering::Less));
        assert_eq!(
            compare_monomials(&m(&[1, 0, 0, 1]), &m(&[0, 2, 0, 0]), &MonomialOrder::Lex),
            Ok(Ordering::Greater)
        );
        assert!(compare_monomials(&m(&[1, 0, 0]), &m(&[1, 0, 0, 0]), &drl).is_err());
    }

    #[test]
    fn parsing_names() {
        assert_eq!(MonomialOrder::parse("lex"), Ok(MonomialOrder::Lex));
        assert_eq!(MonomialOrder::parse("weight:3,1,2,1"), Ok(MonomialOrder::weighted(vec![3, 1, 2, 1])));
        assert!(MonomialOrder::parse("weight:1,0,1,1").is_err());
        assert!(MonomialOrder::parse("weight:").is_err());
        assert!(MonomialOrder::parse("deglex").is_err());
    }

    #[test]
    fn elimination_block_dominates() {
        let ord = MonomialOrder::elimination(1, 3);
        // x * anything beats any pure y,z monomial
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::weighted(vec![1, 0, 3, 2]),
            MonomialOrder::Block(vec![1, 3]),
            MonomialOrder::Block(vec![2, 2]),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..3, 4).prop_map(|v| Monomial::from_exps(&v))
    }

    proptest! {
        #[test]
        fn multiplicative(a in mono(), b in mono(), c in mono()) {
            for ord in orders() {
                if ord.cmp(&a, &b) == Ordering::Greater {
                    prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), Ordering::Greater);
                }
                prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            }
        }
    }
}
