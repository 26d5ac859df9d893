//! Hilbert functions, Hilbert polynomials, regularity, Macaulay growth and
//! Gotzmann numbers.
//!
//! Hilbert functions use the ideal convention, `n ↦ dim_k I_n`; the quotient
//! side is `dim P_n − dim I_n`.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::borel;
use crate::error::{Error, Result};
use crate::gin;
use crate::ideal::{minimize_monomials, Ideal};
use crate::linalg;
use crate::monomial::{count_of_degree, Monomial};
use crate::order::MonomialOrder;
use crate::scalar::{self, Scalar};

/// Seed of the internal random source used by [`regularity`].
pub const REGULARITY_SEED: u64 = 0x4e_2b_5d_01;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub nvars: usize,
    /// `values[n] = dim I_n`.
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn of(i: &Ideal, upto: u32) -> Result<Self> {
        let lms = initial_monomials(i);
        Ok(HilbertFunction { nvars: i.nvars(), values: (0..=upto).map(|n| count_in_degree(&lms, i.nvars(), n)).collect() })
    }

    pub fn quotient_values(&self) -> Vec<u64> {
        self.values.iter().enumerate().map(|(n, v)| count_of_degree(self.nvars, n as u32) - v).collect()
    }
}

fn initial_monomials(i: &Ideal) -> Vec<Monomial> {
    match i.monomial_generators() {
        Some(ms) => ms,
        None => minimize_monomials(i.leading_monomials(&MonomialOrder::DegRevLex)),
    }
}

fn count_in_degree(lms: &[Monomial], nvars: usize, n: u32) -> u64 {
    if lms.is_empty() {
        return 0;
    }
    Monomial::all_of_degree(nvars, n).iter().filter(|m| lms.iter().any(|g| g.divides(m))).count() as u64
}

/// `dim_k I_n`, counted on the degrevlex initial ideal.
pub fn hilbert_function(i: &Ideal, n: i64) -> Result<u64> {
    if n < 0 {
        return Err(Error::NegativeDegree(n));
    }
    i.require_homogeneous()?;
    Ok(count_in_degree(&initial_monomials(i), i.nvars(), n as u32))
}

pub fn hilbert_values(i: &Ideal, upto: u32) -> Result<Vec<u64>> {
    i.require_homogeneous()?;
    Ok(HilbertFunction::of(i, upto)?.values)
}

/// A numerical polynomial in `n` with rational coefficients (`coeffs[k]` is
/// the coefficient of `n^k`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    coeffs: Vec<Scalar>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| scalar::int(v)).collect())
    }

    /// `C(n + shift, k)` as a polynomial in `n`.
    pub fn binomial(shift: i64, k: u32) -> Self {
        let mut acc = Self::from_ints(&[1]);
        for j in 0..k as i64 {
            // (n + shift - j) / (j + 1)
            let lin = Self::new(vec![scalar::frac(shift - j, j + 1), scalar::frac(1, j + 1)]);
            acc = acc.mul(&lin);
        }
        acc
    }

    /// `C(n + v − 1, v − 1)`, the Hilbert polynomial of the polynomial ring in `v` variables.
    pub fn ring(nvars: usize) -> Self {
        Self::binomial(nvars as i64 - 1, nvars as u32 - 1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, n: i64) -> Scalar {
        let x = scalar::int(n);
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * &x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..len)
                .map(|k| {
                    self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero) + o.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(vec![]);
        }
        let mut c = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    /// The Gotzmann exponents `a_1 ≥ … ≥ a_r ≥ 0` with
    /// `p(n) = Σ_i C(n + a_i − i + 1, a_i)`.
    pub fn gotzmann_decomposition(&self) -> Result<Vec<u32>> {
        let mut rem = self.clone();
        let mut out: Vec<u32> = Vec::new();
        while !rem.is_zero() {
            let a = rem.degree().unwrap() as u32;
            if !rem.leading_coefficient().is_positive() || out.last().is_some_and(|&prev| a > prev) {
                return Err(Error::InvalidHilbertPolynomial(self.to_string()));
            }
            if out.len() > 100_000 {
                return Err(Error::InvalidHilbertPolynomial(format!("{} (decomposition too long)", self)));
            }
            let r = out.len() as i64;
            rem = rem.sub(&Self::binomial(a as i64 - r, a));
            out.push(a);
        }
        Ok(out)
    }

    /// Interpolating polynomial through `(start + k, values[k])`.
    pub fn interpolate(start: i64, values: &[Scalar]) -> Self {
        let m = values.len();
        let vander: linalg::Matrix =
            (0..m).map(|k| (0..m).map(|e| num_traits::pow(scalar::int(start + k as i64), e)).collect()).collect();
        let inv = linalg::inverse(&vander).expect("distinct nodes");
        Self::new(linalg::mat_vec(&inv, values))
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("n^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{a}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertPolynomial({self})")
    }
}

/// Numerator `K(t)` of the Hilbert series `K(t)/(1−t)^n` of `P/J` for a
/// monomial ideal `J`, by pivoting on variables.
pub fn series_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimize_monomials(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().all(|g| g.degree() == 1) {
        // (1 - t)^k
        let mut p = vec![1i64];
        for _ in 0..gens.len() {
            let mut q = vec![0i64; p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                q[i] += c;
                q[i + 1] -= c;
            }
            p = q;
        }
        return p;
    }
    // pivot on the variable occurring in the most non-linear generators
    let v = (0..nvars)
        .max_by_key(|&v| gens.iter().filter(|g| g.degree() > 1 && g.exp(v) > 0).count())
        .unwrap();
    let x = Monomial::var(v, nvars);
    // H(P/J) = H(P/(J + x)) + t H(P/(J : x))
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(v) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&x)).unwrap()).collect();
    let a = series_numerator(&plus, nvars);
    let b = series_numerator(&colon, nvars);
    let mut out = vec![0i64; a.len().max(b.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Ideal-side Hilbert polynomial, by interpolation beyond the degree where
/// the Hilbert function of the initial ideal is known to be polynomial.
pub fn hilbert_polynomial(i: &Ideal) -> Result<HilbertPolynomial> {
    i.require_homogeneous()?;
    let n = i.nvars();
    let lms = initial_monomials(i);
    let k = series_numerator(&lms, n);
    let max_gen = lms.iter().map(|m| m.degree()).max().unwrap_or(0) as i64;
    let start = 6.max(max_gen).max(k.len() as i64 - n as i64);
    let values: Vec<Scalar> = (0..n as i64).map(|j| scalar::int(count_in_degree(&lms, n, (start + j) as u32) as i64)).collect();
    let p = HilbertPolynomial::interpolate(start, &values);
    for j in n as i64..n as i64 + 4 {
        let d = start + j;
        let actual = scalar::int(count_in_degree(&lms, n, d as u32) as i64);
        if p.eval(d) != actual {
            return Err(Error::Internal(format!("Hilbert polynomial guard failed at degree {d}")));
        }
    }
    Ok(p)
}

/// `C(n+v−1, v−1) − hilbert_polynomial(I)`.
pub fn quotient_hilbert_polynomial(i: &Ideal) -> Result<HilbertPolynomial> {
    Ok(HilbertPolynomial::ring(i.nvars()).sub(&hilbert_polynomial(i)?))
}

/// Castelnuovo–Mumford regularity: the largest generator degree of the
/// generic initial ideal (directly, for strongly stable input).
pub fn regularity(i: &Ideal) -> Result<u32> {
    if i.is_zero() {
        return Err(Error::InvalidArgument("regularity of the zero ideal".into()));
    }
    if let Some(ms) = i.monomial_generators() {
        if borel::is_strongly_stable_monomials(&ms) {
            return Ok(ms.iter().map(|m| m.degree()).max().unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(REGULARITY_SEED);
    let g = gin::generic_initial_ideal(i, &mut rng)?;
    Ok(g.gin.monomial_generators().unwrap().iter().map(|m| m.degree()).max().unwrap())
}

/// Minimal `dim P_1·W` over `a`-dimensional spaces `W` of degree-`d` forms in
/// `r` variables, realised by the lex segment.
pub fn macaulay_min_growth(a: u64, d: u32, r: usize) -> Result<u64> {
    let total = count_of_degree(r, d);
    if a > total {
        return Err(Error::InvalidArgument(format!("dimension {a} exceeds {total}")));
    }
    let segment: Vec<Monomial> = Monomial::all_of_degree(r, d).into_iter().take(a as usize).collect();
    let mut grown: HashSet<Monomial> = HashSet::new();
    for m in &segment {
        for v in 0..r {
            grown.insert(m.mul(&Monomial::var(v, r)));
        }
    }
    Ok(grown.len() as u64)
}

/// Macaulay's bound `h^{<d>}` on the quotient-side growth from degree `d` to `d+1`.
pub fn macaulay_upper_bound(h: u64, d: u32) -> u64 {
    if d == 0 {
        return if h == 0 { 0 } else { u64::MAX };
    }
    let binom = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc as u64
    };
    let mut rest = h;
    let mut out = 0;
    let mut k = d as u64;
    while rest > 0 && k > 0 {
        let mut top = k;
        while binom(top + 1, k) <= rest {
            top += 1;
        }
        rest -= binom(top, k);
        out += binom(top + 1, k + 1);
        k -= 1;
    }
    out
}

/// Number of terms of the Gotzmann decomposition.
pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<usize> {
    Ok(p.gotzmann_decomposition()?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly4;

    fn b(i: usize) -> Ideal {
        borel::catalog()[i - 3].ideal.clone()
    }

    #[test]
    fn catalog_values() {
        assert_eq!(hilbert_function(&b(3), 4).unwrap(), 19);
        assert_eq!(hilbert_function(&b(6), 1).unwrap(), 1);
        assert_eq!(hilbert_function(&b(5), 2).unwrap(), 3);
        assert_eq!(hilbert_function(&Ideal::zero(4), 5).unwrap(), 0);
        assert!(hilbert_function(&b(3), -1).is_err());
    }

    #[test]
    fn polynomials() {
        let four_n = HilbertPolynomial::from_ints(&[0, 4]);
        for i in 3..=6 {
            let q = hilbert_polynomial(&b(i)).unwrap();
            assert_eq!((q.eval(5), q.eval(6), q.eval(7)), (scalar::int(36), scalar::int(60), scalar::int(92)));
            assert_eq!(quotient_hilbert_polynomial(&b(i)).unwrap(), four_n);
        }
        let x = Ideal::new(4, vec![poly4(&[(1, [1, 0, 0, 0])])]);
        assert_eq!(hilbert_polynomial(&x).unwrap(), HilbertPolynomial::binomial(2, 3));
        let pt = Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        assert_eq!(quotient_hilbert_polynomial(&pt).unwrap(), HilbertPolynomial::from_ints(&[1]));
        assert_eq!(hilbert_polynomial(&pt).unwrap(), HilbertPolynomial::ring(4).sub(&HilbertPolynomial::from_ints(&[1])));
        assert_eq!(four_n.to_string(), "4*n");
    }

    #[test]
    fn series_matches_counting() {
        for i in 3..=6 {
            let gens = b(i).monomial_generators().unwrap();
            let k = series_numerator(&gens, 4);
            // coefficient extraction from K(t)/(1-t)^4
            for n in 0..12i64 {
                let mut h = 0i64;
                for (j, c) in k.iter().enumerate() {
                    let m = n - j as i64;
                    if m >= 0 {
                        h += c * count_of_degree(4, m as u32) as i64;
                    }
                }
                let ideal_side = count_of_degree(4, n as u32) as i64 - h;
                assert_eq!(ideal_side as u64, hilbert_function(&b(i), n).unwrap());
            }
        }
    }

    #[test]
    fn regularity_of_catalog() {
        for i in 3..=6 {
            assert_eq!(regularity(&b(i)).unwrap(), i as u32);
        }
        assert_eq!(regularity(&Ideal::monomial4(&[[1, 0, 0, 0]])).unwrap(), 1);
    }

    #[test]
    fn macaulay_growth() {
        assert_eq!(macaulay_min_growth(3, 1, 4).unwrap(), 9);
        assert_eq!(macaulay_min_growth(0, 3, 4).unwrap(), 0);
        assert_eq!(macaulay_min_growth(10, 2, 4).unwrap(), 20);
        assert!(macaulay_min_growth(11, 2, 4).is_err());
        let mut prev = 0;
        for a in 0..=10 {
            let g = macaulay_min_growth(a, 2, 4).unwrap();
            assert!(g >= prev);
            prev = g;
        }
    }

    #[test]
    fn macaulay_bound_values() {
        // 4 = C(3,2) + C(1,1) in degree 2 -> C(4,3) + C(2,2) = 5
        assert_eq!(macaulay_upper_bound(4, 2), 5);
        // 3 = C(3,1) in degree 1 -> C(4,2) = 6
        assert_eq!(macaulay_upper_bound(3, 1), 6);
        assert_eq!(macaulay_upper_bound(4, 4), 4);
    }

    #[test]
    fn gotzmann_numbers() {
        assert_eq!(gotzmann_number(&HilbertPolynomial::from_ints(&[0, 4])).unwrap(), 6);
        assert_eq!(gotzmann_number(&HilbertPolynomial::from_ints(&[1])).unwrap(), 1);
        assert_eq!(gotzmann_number(&HilbertPolynomial::from_ints(&[1, 3])).unwrap(), 4);
        assert!(gotzmann_number(&HilbertPolynomial::from_ints(&[-1])).is_err());
        // 3n+1 = (n+1) + n + (n-1) + 1
        let hand = HilbertPolynomial::binomial(1, 1)
            .add(&HilbertPolynomial::binomial(0, 1))
            .add(&HilbertPolynomial::binomial(-1, 1))
            .add(&HilbertPolynomial::from_ints(&[1]));
        assert_eq!(hand, HilbertPolynomial::from_ints(&[1, 3]));
    }
}
