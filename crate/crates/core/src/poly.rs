//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are stored sorted descending in degrevlex with no zero coefficients,
//! so two polynomials are equal iff their term vectors are equal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, DEFAULT_NAMES};
use crate::order::MonomialOrder;
use crate::scalar::{self, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

#[inline]
pub(crate) fn drl_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.nvars()).rev() {
        let (ea, eb) = (a.exp(i), b.exp(i));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(m, c)] }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::monomial(Monomial::var(i, nvars))
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i, n), c.clone())).collect())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| drl_cmp(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.iter().find(|(mm, _)| mm == m).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Common degree of all terms, `None` for the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Homogeneity in the first `k` variables only (later ones have degree 0).
    pub fn is_homogeneous_in(&self, k: usize) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| (0..k).map(|i| m.exp(i)).sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    /// Leading term under `ord`.
    pub fn leading(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        if *ord == MonomialOrder::DegRevLex {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms.iter().max_by_key(|(m, _)| ord.key(m)).map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<Monomial> {
        self.leading(ord).map(|(m, _)| *m)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Scalar::one(), self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self + c * m * other`, the basic reduction step.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, other: &Polynomial) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match drl_cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::VarMismatch(images.len(), self.nvars));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::InvalidArgument("images live in different rings".into()));
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::constant(Scalar::one(), target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone(), target);
            for i in 0..self.nvars {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e];
            }
            for (mm, cc) in prod.terms {
                *acc.entry(mm).or_insert_with(Scalar::zero) += cc;
            }
        }
        Ok(Polynomial::from_terms(target, acc.into_iter().collect()))
    }

    /// Same polynomial in a ring with more variables appended.
    pub fn extend(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.resize(nvars).expect("fits"), c.clone())).collect(),
        }
    }

    /// Drops trailing variables that do not occur; `None` if one occurs.
    pub fn restrict(&self, nvars: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.resize(nvars).map(|mm| (mm, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { nvars, terms })
    }

    /// Sets variable `i` to `value` and removes it from the ring.
    pub fn specialize_var(&self, i: usize, value: &Scalar) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(i);
            let coef = if e == 0 {
                c.clone()
            } else if value.is_zero() {
                continue;
            } else {
                c * num_traits::pow(value.clone(), e as usize)
            };
            terms.push((m.remove_var(i), coef));
        }
        Polynomial::from_terms(self.nvars - 1, terms)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let (ld, lc) = (d.terms[0].0, d.terms[0].1.clone());
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((lm, c)) = rem.terms.first().cloned() {
            let m = lm.div(&ld)?;
            let q = c / &lc;
            rem = rem.add_scaled(&-q.clone(), &m, d);
            quot.push((m, q));
        }
        Some(Polynomial::from_terms(self.nvars, quot))
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exp(i);
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Coefficient vector of a linear form; `None` if not linear homogeneous.
    pub fn linear_coeffs(&self) -> Option<Vec<Scalar>> {
        if self.homogeneous_degree() != Some(1) {
            return None;
        }
        let mut v = vec![Scalar::zero(); self.nvars];
        for (m, c) in &self.terms {
            let i = (0..self.nvars).find(|&i| m.exp(i) == 1)?;
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", abs, mono));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(&Scalar::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(&-Scalar::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].1, &rhs.terms[0].0);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        Polynomial::from_terms(self.nvars, acc.into_iter().collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Shorthand used throughout tests: integer-coefficient polynomial in
/// `k[x,y,z,t]` from `(coefficient, exponents)` pairs.
pub fn poly4(terms: &[(i64, [u32; 4])]) -> Polynomial {
    Polynomial::from_terms(4, terms.iter().map(|(c, e)| (Monomial::from_exps(e), scalar::int(*c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn arithmetic_and_display() {
        let x = Polynomial::var(0, 4);
        let y = Polynomial::var(1, 4);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, poly4(&[(1, [2, 0, 0, 0]), (-1, [0, 2, 0, 0])]));
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let x = Polynomial::var(0, 4);
        let y = Polynomial::var(1, 4);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.exact_div(&(&x + &y)), Some(&x - &y));
        assert_eq!(p.exact_div(&x), None);
    }

    #[test]
    fn specialization() {
        // x*a^2 + y at a = 3
        let p = Polynomial::from_terms(
            5,
            vec![(Monomial::from_exps(&[1, 0, 0, 0, 2]), int(1)), (Monomial::from_exps(&[0, 1, 0, 0, 0]), int(1))],
        );
        let q = p.specialize_var(4, &int(3));
        assert_eq!(q, poly4(&[(9, [1, 0, 0, 0]), (1, [0, 1, 0, 0])]));
    }
}
