//! Dense exponent-vector monomials.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported variable count (four ring variables plus the family
/// parameter and auxiliary elimination variables).
pub const MAX_VARS: usize = 8;

/// Default variable names by position.
pub const DEFAULT_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "t", "a", "u", "v", "w"];

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8 }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVars(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| Error::InvalidArgument(format!("exponent {e} too large")))?;
        }
        Ok(m)
    }

    /// Panicking shorthand for literals in tests and constructors.
    pub fn from_exps(exps: &[u32]) -> Self {
        Self::new(exps).expect("valid exponent vector")
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] -= other.exps[i];
        }
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].max(other.exps[i]);
        }
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].min(other.exps[i]);
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut r = *self;
        r.exps[i] = e as u16;
        r
    }

    /// Same exponents in a ring with `nvars` variables; dropped positions must be zero.
    pub fn resize(&self, nvars: usize) -> Option<Monomial> {
        if nvars > MAX_VARS || self.exps[nvars.min(MAX_VARS)..].iter().any(|&e| e != 0) {
            return None;
        }
        let mut r = *self;
        r.nvars = nvars as u8;
        Some(r)
    }

    /// Removes variable `i`, shifting later ones down. The exponent of `i` is discarded.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let mut r = Monomial::one(self.nvars() - 1);
        let mut k = 0;
        for j in 0..self.nvars() {
            if j != i {
                r.exps[k] = self.exps[j];
                k += 1;
            }
        }
        r
    }

    /// All monomials of degree `d` in `nvars` variables, lex-descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u32; MAX_VARS];
        fn rec(pos: usize, left: u32, nvars: usize, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
            if pos + 1 == nvars {
                cur[pos] = left;
                out.push(Monomial::from_exps(&cur[..nvars]));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, nvars, cur, out);
            }
            cur[pos] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, nvars, &mut cur, &mut out);
        out
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(names[i].to_string()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_of_degree(n: usize, d: u32) -> u64 {
    if n == 0 {
        return (d == 0) as u64;
    }
    // C(d + n - 1, n - 1)
    let mut acc: u64 = 1;
    for i in 1..n as u64 {
        acc = acc * (d as u64 + i) / i;
    }
    acc
}
