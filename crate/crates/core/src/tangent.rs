//! Tangent spaces of the Hilbert scheme at saturated ideals.
//!
//! At a saturated `I` of regularity `m` the tangent space is
//! `Hom(I_{≥m}, P/I)_0`: a map is fixed by its values on a basis of `I_m`,
//! subject to the linear syzygies of `I_{≥m}`. Monomial ideals split into
//! torus-weight blocks; other ideals are handled by one exact kernel.
//! [`hom_dimension`] computes the smaller space `Hom(I, P/I)_0` from given
//! generators and syzygies.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gin;
use crate::hilbert::{self, HilbertPolynomial};
use crate::ideal::{minimize_monomials, Ideal};
use crate::linalg::{self, EchelonBasis};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::syzygy::{self, SyzygyGenerators};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub dimension: usize,
    /// Degrees of the minimal generators of `I`.
    pub generator_degrees: Vec<u32>,
    /// Number of linear equations imposed.
    pub constraint_count: usize,
    /// Degree `m` of the truncation `I_{≥m}` used; `None` when `I` is not
    /// saturated and `Hom(I, P/I)_0` is reported instead.
    pub truncation_degree: Option<u32>,
    /// False unless `I` is saturated with quotient Hilbert polynomial `4n`.
    pub hilbert_scheme_point: bool,
}

fn initial_monomials(i: &Ideal) -> Vec<Monomial> {
    match i.monomial_generators() {
        Some(ms) => ms,
        None => minimize_monomials(i.leading_monomials(&MonomialOrder::DegRevLex)),
    }
}

fn standard(lms: &[Monomial], n: usize, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(n, d).into_iter().filter(|m| !lms.iter().any(|g| g.divides(m))).collect()
}

/// Tangent space dimension at a saturated homogeneous ideal.
pub fn tangent_dimension(i: &Ideal) -> Result<TangentReport> {
    i.require_homogeneous()?;
    if i.is_zero() {
        return Err(Error::InvalidArgument("tangent space of the zero ideal".into()));
    }
    if !gin::is_saturated(i)? {
        let gens = i.minimal_generators();
        let syz = syzygy::syzygy_generators(&Ideal::new(i.nvars(), gens.clone()), &MonomialOrder::DegRevLex)?;
        return Ok(TangentReport {
            dimension: hom_dimension(i, &gens, &syz)?,
            generator_degrees: generator_degrees(i),
            constraint_count: syz.len(),
            truncation_degree: None,
            hilbert_scheme_point: false,
        });
    }
    let m = hilbert::regularity(i)?;
    let mut report = if i.is_monomial() { truncated_monomial(i, m)? } else { truncated_general(i, m)? };
    report.hilbert_scheme_point = hilbert::quotient_hilbert_polynomial(i)? == HilbertPolynomial::from_ints(&[0, 4]);
    Ok(report)
}

fn generator_degrees(i: &Ideal) -> Vec<u32> {
    let mut d: Vec<u32> = i.minimal_generators().iter().map(|g| g.homogeneous_degree().unwrap_or(0)).collect();
    d.sort_unstable();
    d
}

/// Torus-weight blocks: unknown `(g, b)` has weight `b − g`, and the
/// syzygy `x_i g₁ = x_j g₂` only relates unknowns of equal weight.
pub fn truncated_monomial(i: &Ideal, m: u32) -> Result<TangentReport> {
    let n = i.nvars();
    let lms = i.monomial_generators().ok_or_else(|| Error::InvalidArgument("monomial ideal expected".into()))?;
    let in_i = |x: &Monomial| lms.iter().any(|g| g.divides(x));
    let all_m = Monomial::all_of_degree(n, m);
    let gens: Vec<Monomial> = all_m.iter().copied().filter(|x| in_i(x)).collect();
    let std_m: HashSet<Monomial> = all_m.iter().copied().filter(|x| !in_i(x)).collect();
    let gen_set: HashSet<Monomial> = gens.iter().copied().collect();
    // linear syzygies: pairs with x_i g1 = x_j g2
    let mut pairs: Vec<(Monomial, Monomial, Monomial)> = Vec::new();
    for g1 in &gens {
        for j in 0..n {
            for i2 in 0..n {
                if i2 == j || g1.exp(j) == 0 {
                    continue;
                }
                let g2 = g1.with_exp(j, g1.exp(j) - 1).with_exp(i2, g1.exp(i2) + 1);
                if gen_set.contains(&g2) && g1.exps() < g2.exps() {
                    pairs.push((*g1, g2, g1.mul(&Monomial::var(i2, n))));
                }
            }
        }
    }
    type W = [i32; crate::monomial::MAX_VARS];
    let weight = |b: &Monomial, g: &Monomial| -> W {
        let mut w = [0i32; crate::monomial::MAX_VARS];
        for k in 0..n {
            w[k] = b.exp(k) as i32 - g.exp(k) as i32;
        }
        w
    };
    let shift = |x: &Monomial, w: &W| -> Option<Monomial> {
        let mut e = vec![0u32; n];
        for k in 0..n {
            let v = x.exp(k) as i32 + w[k];
            if v < 0 {
                return None;
            }
            e[k] = v as u32;
        }
        Some(Monomial::from_exps(&e))
    };
    let mut blocks: BTreeMap<W, Vec<Monomial>> = BTreeMap::new();
    for g in &gens {
        for b in &std_m {
            blocks.entry(weight(b, g)).or_default().push(*g);
        }
    }
    let mut dimension = 0;
    let mut constraints = 0;
    for (w, members) in &blocks {
        let col: HashMap<Monomial, usize> = members.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let mut basis = EchelonBasis::new();
        for (g1, g2, lcm) in &pairs {
            let Some(target) = shift(lcm, w) else { continue };
            if in_i(&target) {
                continue;
            }
            let mut row = vec![Scalar::zero(); members.len()];
            let mut any = false;
            if let Some(&c) = col.get(g1) {
                row[c] += Scalar::one();
                any = true;
            }
            if let Some(&c) = col.get(g2) {
                row[c] -= Scalar::one();
                any = true;
            }
            if any {
                constraints += 1;
                basis.insert(row);
            }
        }
        dimension += members.len() - basis.dim();
    }
    Ok(TangentReport {
        dimension,
        generator_degrees: generator_degrees(i),
        constraint_count: constraints,
        truncation_degree: Some(m),
        hilbert_scheme_point: true,
    })
}

/// Exact kernel on a basis of `I_m` with the linear syzygies of `I_{≥m}`.
pub fn truncated_general(i: &Ideal, m: u32) -> Result<TangentReport> {
    let n = i.nvars();
    let lms = initial_monomials(i);
    let reducer = i.reducer();
    let in_lead = |x: &Monomial| lms.iter().any(|g| g.divides(x));
    // basis of I_m: M − NF(M) for leading monomials M of degree m
    let gens: Vec<Polynomial> = Monomial::all_of_degree(n, m)
        .into_iter()
        .filter(|x| in_lead(x))
        .map(|x| {
            let p = Polynomial::monomial(x);
            &p - &reducer.reduce(&p)
        })
        .collect();
    let std_m = standard(&lms, n, m);
    let std_next = standard(&lms, n, m + 1);
    let next_index: HashMap<Monomial, usize> = std_next.iter().enumerate().map(|(k, x)| (*x, k)).collect();
    // kernel of ⊕_{g, j} k·x_j g → P_{m+1}
    let all_next = Monomial::all_of_degree(n, m + 1);
    let idx: HashMap<Monomial, usize> = all_next.iter().enumerate().map(|(k, x)| (*x, k)).collect();
    let ncols = gens.len() * n;
    let mut mat = vec![vec![Scalar::zero(); ncols]; all_next.len()];
    for (gi, g) in gens.iter().enumerate() {
        for j in 0..n {
            let xj = Monomial::var(j, n);
            for (mono, c) in g.terms() {
                mat[idx[&mono.mul(&xj)]][gi * n + j] = c.clone();
            }
        }
    }
    let kernel = linalg::kernel_basis(&mat, ncols);
    // x_j · b reduced, per standard monomial b of degree m
    let shifted: Vec<Vec<Vec<(usize, Scalar)>>> = (0..n)
        .map(|j| {
            std_m
                .iter()
                .map(|b| {
                    let nf = reducer.reduce(&Polynomial::monomial(b.mul(&Monomial::var(j, n))));
                    nf.terms().iter().map(|(x, c)| (next_index[x], c.clone())).collect()
                })
                .collect()
        })
        .collect();
    let unknowns = gens.len() * std_m.len();
    let mut basis = EchelonBasis::new();
    let mut constraints = 0;
    for v in &kernel {
        let mut block = vec![vec![Scalar::zero(); unknowns]; std_next.len()];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (gi, j) = (k / n, k % n);
            for (bi, terms) in shifted[j].iter().enumerate() {
                for (row, coef) in terms {
                    block[*row][gi * std_m.len() + bi] += c * coef;
                }
            }
        }
        for row in block {
            if row.iter().any(|c| !c.is_zero()) {
                constraints += 1;
                if basis.dim() < unknowns {
                    basis.insert(row);
                }
            }
        }
    }
    Ok(TangentReport {
        dimension: unknowns - basis.dim(),
        generator_degrees: generator_degrees(i),
        constraint_count: constraints,
        truncation_degree: Some(m),
        hilbert_scheme_point: true,
    })
}

/// `dim Hom(I, P/I)_0` from generators of `i` and a generating set of their syzygies.
pub fn hom_dimension(i: &Ideal, gens: &[Polynomial], syz: &SyzygyGenerators) -> Result<usize> {
    i.require_homogeneous()?;
    let n = i.nvars();
    let lms = initial_monomials(i);
    let degs: Vec<u32> = gens.iter().map(|g| g.homogeneous_degree().unwrap_or(0)).collect();
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (k, &d) in degs.iter().enumerate() {
        unknowns.extend(standard(&lms, n, d).into_iter().map(|x| (k, x)));
    }
    let reducer = i.reducer();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for s in syz {
        let Some(deg) = s.iter().zip(&degs).find(|(p, _)| !p.is_zero()).map(|(p, d)| p.total_degree().unwrap() + d) else {
            continue;
        };
        let targets = standard(&lms, n, deg);
        let index: HashMap<Monomial, usize> = targets.iter().enumerate().map(|(k, x)| (*x, k)).collect();
        let mut block = vec![vec![Scalar::zero(); unknowns.len()]; targets.len()];
        for (col, (k, b)) in unknowns.iter().enumerate() {
            if s[*k].is_zero() {
                continue;
            }
            for (x, c) in reducer.reduce(&s[*k].mul_monomial(b)).terms() {
                block[index[x]][col] += c;
            }
        }
        rows.extend(block);
    }
    let rank = if rows.is_empty() { 0 } else { linalg::rank(&rows, unknowns.len()) };
    Ok(unknowns.len() - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel;
    use crate::poly::poly4;

    fn ci() -> Ideal {
        Ideal::new(
            4,
            vec![
                poly4(&[(1, [2, 0, 0, 0]), (1, [0, 1, 1, 0]), (-1, [0, 0, 0, 2])]),
                poly4(&[(1, [1, 1, 0, 0]), (2, [0, 0, 2, 0]), (1, [0, 0, 1, 1])]),
            ],
        )
    }

    #[test]
    fn smooth_points() {
        let b6 = borel::catalog()[3].ideal.clone();
        let r = tangent_dimension(&b6).unwrap();
        assert_eq!(r.dimension, 23);
        assert_eq!(r.generator_degrees, vec![1, 5, 6]);
        assert!(r.hilbert_scheme_point);
        assert_eq!(tangent_dimension(&ci()).unwrap().dimension, 16);
    }

    #[test]
    fn two_routes_agree_on_monomial_ideals() {
        for e in &borel::catalog()[..2] {
            let m = e.regularity;
            assert_eq!(truncated_monomial(&e.ideal, m).unwrap().dimension, truncated_general(&e.ideal, m).unwrap().dimension, "{}", e.name);
        }
    }

    #[test]
    fn catalog_lower_bounds() {
        let cat = borel::catalog();
        assert!(tangent_dimension(&cat[0].ideal).unwrap().dimension >= 16);
        for e in &cat[1..] {
            assert!(tangent_dimension(&e.ideal).unwrap().dimension >= 23, "{}", e.name);
        }
    }

    #[test]
    fn hom_from_generators_is_a_lower_bound() {
        for e in borel::catalog() {
            let gens = e.ideal.minimal_generators();
            let full = hom_dimension(&e.ideal, &gens, &syzygy::taylor_syzygies(&gens)).unwrap();
            let red = syzygy::reduced_taylor_syzygies(&gens);
            assert_eq!(hom_dimension(&e.ideal, &gens, &red).unwrap(), full);
            assert!(full <= tangent_dimension(&e.ideal).unwrap().dimension);
        }
        let gens = ci().gens().to_vec();
        let syz = syzygy::syzygy_generators(&ci(), &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(hom_dimension(&ci(), &gens, &syz).unwrap(), 16);
    }

    #[test]
    fn flags_non_points() {
        let i = Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 4]]);
        let r = tangent_dimension(&i).unwrap();
        assert!(!r.hilbert_scheme_point);
        assert_eq!(r.truncation_degree, None);
        let line = Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let r = tangent_dimension(&line).unwrap();
        // lines in P^3 form the 4-dimensional Grassmannian
        assert_eq!(r.dimension, 4);
        assert!(!r.hilbert_scheme_point);
    }
}
