//! First syzygies of a list of homogeneous generators.
//!
//! Monomial generators get the pairwise lcm syzygies. Otherwise the syzygies
//! are found degree by degree as kernels of the multiplication maps
//! `⊕ P_{e−d_i} → P_e`, keeping only vectors not generated by syzygies of
//! lower degree. The degree range is bounded by the largest generator degree
//! and the largest S-pair lcm degree of a Gröbner basis, beyond which the
//! syzygy module has no new generators.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{self, EchelonBasis};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

pub type SyzygyGenerators = Vec<Vec<Polynomial>>;

/// Generating set of the syzygy module of `i.gens()`.
pub fn syzygy_generators(i: &Ideal, ord: &MonomialOrder) -> Result<SyzygyGenerators> {
    i.require_homogeneous()?;
    let gens = i.gens();
    let n = i.nvars();
    if gens.iter().all(|g| g.len() == 1) {
        return Ok(taylor_syzygies(gens));
    }
    let degs: Vec<u32> = gens.iter().map(|g| g.homogeneous_degree().unwrap()).collect();
    let gb = i.groebner_basis(ord);
    let lms: Vec<Monomial> = gb.iter().filter_map(|g| g.leading_monomial(ord)).collect();
    let mut bound = degs.iter().copied().max().unwrap_or(0);
    for a in 0..lms.len() {
        for b in a + 1..lms.len() {
            bound = bound.max(lms[a].lcm(&lms[b]).degree());
        }
    }
    let lo = degs.iter().copied().min().unwrap_or(0);
    let mut found: Vec<(u32, Vec<Polynomial>)> = Vec::new();
    for e in lo + 1..=bound {
        let (cols, col_index) = columns(&degs, n, e);
        if cols.is_empty() {
            continue;
        }
        let targets = Monomial::all_of_degree(n, e);
        let tindex: HashMap<Monomial, usize> = targets.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut mat = vec![vec![Scalar::zero(); cols.len()]; targets.len()];
        for (c, (gi, m)) in cols.iter().enumerate() {
            for (mm, coef) in gens[*gi].terms() {
                mat[tindex[&mm.mul(m)]][c] = coef.clone();
            }
        }
        let kernel = linalg::kernel_basis(&mat, cols.len());
        if kernel.is_empty() {
            continue;
        }
        let mut span = EchelonBasis::new();
        for (d, s) in &found {
            for mm in Monomial::all_of_degree(n, e - d) {
                let shifted: Vec<Polynomial> = s.iter().map(|p| p.mul_monomial(&mm)).collect();
                span.insert(to_vector(&shifted, &col_index, cols.len()));
            }
        }
        for v in kernel {
            if span.insert(v.clone()) {
                found.push((e, from_vector(&v, &cols, gens.len(), n)));
            }
        }
    }
    Ok(found.into_iter().map(|(_, s)| s).collect())
}

type Columns = (Vec<(usize, Monomial)>, HashMap<(usize, Monomial), usize>);

fn columns(degs: &[u32], n: usize, e: u32) -> Columns {
    let mut cols = Vec::new();
    for (gi, &d) in degs.iter().enumerate() {
        if d <= e {
            for m in Monomial::all_of_degree(n, e - d) {
                cols.push((gi, m));
            }
        }
    }
    let index = cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    (cols, index)
}

fn to_vector(s: &[Polynomial], index: &HashMap<(usize, Monomial), usize>, width: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); width];
    for (gi, p) in s.iter().enumerate() {
        for (m, c) in p.terms() {
            v[index[&(gi, *m)]] = c.clone();
        }
    }
    v
}

fn from_vector(v: &[Scalar], cols: &[(usize, Monomial)], r: usize, n: usize) -> Vec<Polynomial> {
    let mut terms: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); r];
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            terms[cols[k].0].push((cols[k].1, c.clone()));
        }
    }
    terms.into_iter().map(|t| Polynomial::from_terms(n, t)).collect()
}

/// Pairwise `lcm/m_i · e_i − c_i/c_j · lcm/m_j · e_j` for single-term generators.
pub fn taylor_syzygies(gens: &[Polynomial]) -> SyzygyGenerators {
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let r = gens.len();
    let mut out = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let (ma, ca) = &gens[a].terms()[0];
            let (mb, cb) = &gens[b].terms()[0];
            let l = ma.lcm(mb);
            let mut s = vec![Polynomial::zero(n); r];
            s[a] = Polynomial::term(cb.clone(), l.div(ma).unwrap());
            s[b] = Polynomial::term(-ca.clone(), l.div(mb).unwrap());
            out.push(s);
        }
    }
    out
}

/// Pairwise syzygies for single-term generators with the pairs `(i,j)` dropped
/// whenever some `m_k` divides `lcm(m_i,m_j)` while neither `lcm(m_i,m_k)` nor
/// `lcm(m_k,m_j)` equals it; what remains still generates.
pub fn reduced_taylor_syzygies(gens: &[Polynomial]) -> SyzygyGenerators {
    let r = gens.len();
    let ms: Vec<Monomial> = gens.iter().map(|g| g.terms()[0].0).collect();
    let full = taylor_syzygies(gens);
    let mut out = Vec::new();
    let mut k_pair = 0;
    for a in 0..r {
        for b in a + 1..r {
            let l = ms[a].lcm(&ms[b]);
            let redundant = (0..r).any(|k| k != a && k != b && ms[k].divides(&l) && ms[a].lcm(&ms[k]) != l && ms[k].lcm(&ms[b]) != l);
            if !redundant {
                out.push(full[k_pair].clone());
            }
            k_pair += 1;
        }
    }
    out
}

/// `Σ s_i g_i`, zero for a genuine syzygy.
pub fn evaluate(s: &[Polynomial], gens: &[Polynomial]) -> Result<Polynomial> {
    if s.len() != gens.len() {
        return Err(Error::InvalidArgument("syzygy length differs from generator count".into()));
    }
    let n = gens.first().map(|g| g.nvars()).unwrap_or(0);
    Ok(s.iter().zip(gens).fold(Polynomial::zero(n), |acc, (a, g)| &acc + &(a * g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly4;

    #[test]
    fn koszul_pair() {
        let i = Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let s = syzygy_generators(&i, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s, vec![vec![poly4(&[(1, [0, 1, 0, 0])]), poly4(&[(-1, [1, 0, 0, 0])])]]);
    }

    #[test]
    fn complete_intersection_has_one_syzygy() {
        let f = poly4(&[(1, [2, 0, 0, 0]), (-1, [0, 1, 0, 1])]);
        let g = poly4(&[(1, [1, 1, 0, 0]), (-1, [0, 0, 1, 1])]);
        let i = Ideal::new(4, vec![f.clone(), g.clone()]);
        let s = syzygy_generators(&i, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s.len(), 1);
        assert!(evaluate(&s[0], i.gens()).unwrap().is_zero());
        // proportional to the Koszul relation (g, -f)
        let c = s[0][0].terms()[0].1.clone() / g.terms()[0].1.clone();
        assert_eq!(s[0][0], g.scale(&c));
        assert_eq!(s[0][1], f.scale(&-c));
    }

    #[test]
    fn b3_lcm_syzygies_vanish() {
        let i = Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [0, 3, 0, 0]]);
        let s = syzygy_generators(&i, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s.len(), 3);
        for v in &s {
            assert!(evaluate(v, i.gens()).unwrap().is_zero());
        }
    }
}
