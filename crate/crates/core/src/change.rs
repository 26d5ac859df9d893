//! Invertible linear changes of coordinates.

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};

/// An element of `GL(n, Q)` acting by substitution: variable `j` is replaced
/// by `Σ_i matrix[j][i] x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Matrix,
}

impl LinearChange {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("linear change must be square".into()));
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::Singular);
        }
        Ok(LinearChange { matrix })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| scalar::int(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        LinearChange { matrix: linalg::identity(n) }
    }

    pub fn diagonal(d: &[Scalar]) -> Result<Self> {
        let n = d.len();
        Self::new((0..n).map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { Scalar::zero() }).collect()).collect())
    }

    /// Uniform integer entries in `[-bound, bound]`, redrawn until invertible.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Self {
        loop {
            let m: Matrix = (0..n).map(|_| (0..n).map(|_| scalar::int(rng.gen_range(-bound..=bound))).collect()).collect();
            if let Ok(g) = Self::new(m) {
                return g;
            }
        }
    }

    /// The additive-group action `t ↦ t − α x` on `k[x,y,z,t]`.
    pub fn shear_t_by_x(alpha: &Scalar) -> Self {
        let mut m = linalg::identity(4);
        m[3][0] = -alpha.clone();
        LinearChange { matrix: m }
    }

    /// The torus element `y ↦ λ^{-2} y, z ↦ λ^{-2} z` on `k[x,y,z,t]`.
    pub fn scale_yz(lambda: &Scalar) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::Singular);
        }
        let s = (lambda * lambda).recip();
        Self::diagonal(&[Scalar::one(), s.clone(), s, Scalar::one()])
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> Self {
        LinearChange { matrix: linalg::inverse(&self.matrix).expect("invertible by construction") }
    }

    /// `self` applied after `first`: `apply(p, compose) == apply(apply(p, first), self)`.
    pub fn after(&self, first: &LinearChange) -> LinearChange {
        // p(M1 x) then substituting x -> M2 x gives p(M1 M2 x)
        LinearChange { matrix: linalg::mat_mul(&first.matrix, &self.matrix) }
    }

    /// Images of the variables as linear forms.
    pub fn images(&self) -> Vec<Polynomial> {
        self.matrix.iter().map(|row| Polynomial::linear(row)).collect()
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.nvars() {
            return Err(Error::VarMismatch(p.nvars(), self.nvars()));
        }
        p.substitute(&self.images())
    }

    /// Coefficient vector of the image of the linear form with coefficients `c`.
    pub fn apply_linear(&self, c: &[Scalar]) -> Vec<Scalar> {
        let n = self.nvars();
        (0..n).map(|i| (0..n).fold(Scalar::zero(), |acc, j| acc + &c[j] * &self.matrix[j][i])).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() }))
    }
}

pub fn apply_change(p: &Polynomial, g: &LinearChange) -> Result<Polynomial> {
    g.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly4;
    use crate::scalar::{frac, int};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn documented_examples() {
        let tx = poly4(&[(1, [1, 0, 0, 1])]);
        let psi = LinearChange::shear_t_by_x(&int(1));
        assert_eq!(psi.apply(&tx).unwrap(), poly4(&[(-1, [2, 0, 0, 0]), (1, [1, 0, 0, 1])]));
        assert_eq!(LinearChange::identity(4).apply(&tx).unwrap(), tx);
        let y2 = poly4(&[(1, [0, 2, 0, 0])]);
        let sigma = LinearChange::scale_yz(&int(2)).unwrap();
        assert_eq!(sigma.apply(&y2).unwrap(), y2.scale(&frac(1, 16)));
    }

    #[test]
    fn rejects_singular() {
        assert_eq!(LinearChange::from_ints(&[vec![1, 2], vec![2, 4]]), Err(Error::Singular));
    }

    #[test]
    fn inverse_and_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = poly4(&[(3, [2, 1, 0, 0]), (-1, [0, 0, 1, 2]), (5, [1, 1, 1, 0])]);
        let q = poly4(&[(1, [1, 0, 0, 0]), (2, [0, 0, 0, 1])]);
        for _ in 0..5 {
            let g = LinearChange::random(&mut rng, 4, 3);
            let gp = g.apply(&p).unwrap();
            assert_eq!(gp.homogeneous_degree(), Some(3));
            assert_eq!(g.inverse().apply(&gp).unwrap(), p);
            assert_eq!(g.apply(&(&p * &q)).unwrap(), &gp * &g.apply(&q).unwrap());
            assert_eq!(g.apply(&(&p * &q + &p * &q)).unwrap(), g.apply(&(&p * &q)).unwrap().scale(&int(2)));
            let h = LinearChange::random(&mut rng, 4, 3);
            assert_eq!(h.after(&g).apply(&p).unwrap(), h.apply(&gp).unwrap());
            let lin = q.linear_coeffs().unwrap();
            assert_eq!(Polynomial::linear(&g.apply_linear(&lin)), g.apply(&q).unwrap());
        }
    }
}
