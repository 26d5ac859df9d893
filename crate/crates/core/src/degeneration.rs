//! One-parameter families of ideals and their flat limits in the Hilbert
//! scheme, with the specific degenerations connecting the strata.
//!
//! A family lives in `k[x,y,z,t,a]` with the parameter `a` at index 4. Its
//! limit is computed as `(J : a^∞)|_{a=0}`, saturated by the irrelevant ideal.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::change::LinearChange;
use crate::error::{Error, Result};
use crate::groebner::divide;
use crate::hilbert::{self, HilbertPolynomial};
use crate::ideal::{saturate, saturate_irrelevant, Ideal};
use crate::linalg::{self, EchelonBasis};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};
use crate::strata::{self, classify, echelon_linear, factor_quadric_net, gcd_forms, R5Shape, Stratum, StratumReport, StratumShape};

const N: usize = crate::NVARS;
/// Index of the parameter in the family ring.
pub const PARAM: usize = N;
const FAMILY_VARS: usize = N + 1;
const FLATNESS_SEED: u64 = 0x0f1a7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitPoint {
    Zero,
    Infinity,
}

impl fmt::Display for LimitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitPoint::Zero => "0",
            LimitPoint::Infinity => "inf",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ParamFamily {
    gens: Vec<Polynomial>,
    pub description: String,
}

impl ParamFamily {
    /// Generators in `k[x,y,z,t,a]`, each homogeneous in `x,y,z,t`.
    pub fn new(gens: Vec<Polynomial>, description: impl Into<String>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != FAMILY_VARS {
                return Err(Error::VarMismatch(g.nvars(), FAMILY_VARS));
            }
            if !g.is_homogeneous_in(N) {
                return Err(Error::Inhomogeneous);
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::InvalidArgument("family without generators".into()));
        }
        Ok(ParamFamily { gens: gens.iter().map(strip_param_content).collect(), description: description.into() })
    }

    /// The family `g ↦ g` with no parameter dependence.
    pub fn constant(i: &Ideal) -> Result<Self> {
        Self::new(i.gens().iter().map(|g| g.extend(FAMILY_VARS)).collect(), "constant")
    }

    /// The family `images(a)(I)`, where variable `j` maps to `images[j]` in `k[x,y,z,t,a]`.
    pub fn from_substitution(i: &Ideal, images: &[Polynomial], description: impl Into<String>) -> Result<Self> {
        let gens = i.gens().iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?;
        Self::new(gens, description)
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn reversed(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e = g.degree_in(PARAM);
                Polynomial::from_terms(
                    FAMILY_VARS,
                    g.terms().iter().map(|(m, c)| (m.with_exp(PARAM, e - m.exp(PARAM)), c.clone())).collect(),
                )
            })
            .collect::<Vec<_>>();
        ParamFamily { gens: gens.iter().map(strip_param_content).collect(), description: self.description.clone() }
    }
}

fn strip_param_content(g: &Polynomial) -> Polynomial {
    let e = g.terms().iter().map(|(m, _)| m.exp(PARAM)).min().unwrap_or(0);
    if e == 0 {
        return g.clone();
    }
    Polynomial::from_terms(FAMILY_VARS, g.terms().iter().map(|(m, c)| (m.with_exp(PARAM, m.exp(PARAM) - e), c.clone())).collect())
}

/// Substitutes `a = value`; not saturated.
pub fn specialize(f: &ParamFamily, value: &Scalar) -> Result<Ideal> {
    let gens: Vec<Polynomial> = f.gens.iter().map(|g| g.specialize_var(PARAM, value)).filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::InvalidArgument(format!("all generators vanish at a = {value}")));
    }
    Ok(Ideal::new(N, gens))
}

/// Quotient Hilbert polynomial shared by the generic fibres: the first one
/// seen at three sampled parameter values.
pub fn generic_hilbert_polynomial(f: &ParamFamily) -> Result<HilbertPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(FLATNESS_SEED);
    let mut seen: Vec<(HilbertPolynomial, usize)> = Vec::new();
    for _ in 0..9 {
        let v = loop {
            let v: i64 = rng.gen_range(-1000..=1000);
            if v != 0 {
                break scalar::int(v);
            }
        };
        let Ok(fibre) = specialize(f, &v) else { continue };
        let hp = hilbert::quotient_hilbert_polynomial(&fibre)?;
        match seen.iter_mut().find(|(p, _)| *p == hp) {
            Some((p, k)) => {
                *k += 1;
                if *k == 3 {
                    return Ok(p.clone());
                }
            }
            None => seen.push((hp, 1)),
        }
    }
    Err(Error::NotFlat(format!("{}: no Hilbert polynomial repeats across sampled fibres", f.description)))
}

#[derive(Clone, Debug)]
pub struct LimitDetail {
    /// `(J : a^∞)|_{a=0}` before irrelevant saturation.
    pub specialized: Ideal,
    pub limit: Ideal,
    pub hilbert_polynomial: HilbertPolynomial,
}

pub fn family_limit(f: &ParamFamily, at: LimitPoint) -> Result<Ideal> {
    Ok(family_limit_detailed(f, at)?.limit)
}

pub fn family_limit_detailed(f: &ParamFamily, at: LimitPoint) -> Result<LimitDetail> {
    let generic = generic_hilbert_polynomial(f)?;
    let fam = match at {
        LimitPoint::Zero => f.clone(),
        LimitPoint::Infinity => f.reversed(),
    };
    let j = Ideal::new(FAMILY_VARS, fam.gens.clone());
    let sat = saturate(&j, &Polynomial::var(PARAM, FAMILY_VARS))?;
    let gens: Vec<Polynomial> = sat.gens().iter().map(|g| g.specialize_var(PARAM, &Scalar::zero())).collect();
    let specialized = Ideal::new(N, gens);
    let limit = saturate_irrelevant(&specialized)?;
    let hp = hilbert::quotient_hilbert_polynomial(&limit)?;
    if hp != generic {
        return Err(Error::NotFlat(format!("{}: limit has Hilbert polynomial {hp}, fibres {generic}", f.description)));
    }
    Ok(LimitDetail { specialized, limit, hilbert_polynomial: hp })
}

/// `x_i ↦ a^{w_i} x_i`, shifted so that the smallest weight is 0.
fn torus_images(w: &[i64]) -> Result<Vec<Polynomial>> {
    if w.len() != N {
        return Err(Error::InvalidArgument(format!("weight vector needs {N} entries")));
    }
    if w.iter().all(|&v| v == w[0]) {
        return Err(Error::InvalidArgument("constant weight vector acts trivially".into()));
    }
    let lo = *w.iter().min().unwrap();
    Ok((0..N)
        .map(|i| Polynomial::monomial(Monomial::var(i, FAMILY_VARS).with_exp(PARAM, (w[i] - lo) as u32)))
        .collect())
}

/// Limit of the orbit `λ ↦ σ_w(λ)·I` as `λ → at`.
pub fn weight_limit(i: &Ideal, w: &[i64], at: LimitPoint) -> Result<Ideal> {
    i.require_homogeneous()?;
    let fam = weight_family(i, w)?;
    let lim = family_limit(&fam, at)?;
    let two = torus_action(w, &scalar::int(2))?;
    if !lim.apply_change(&two)?.equal(&lim) {
        return Err(Error::Internal("weight limit is not torus-fixed".into()));
    }
    Ok(lim)
}

pub fn weight_family(i: &Ideal, w: &[i64]) -> Result<ParamFamily> {
    ParamFamily::from_substitution(i, &torus_images(w)?, format!("torus {w:?}"))
}

/// `x_i ↦ λ^{w_i} x_i` for a fixed `λ ≠ 0`.
pub fn torus_action(w: &[i64], lambda: &Scalar) -> Result<LinearChange> {
    let d: Vec<Scalar> = w.iter().map(|&e| num_traits::pow::pow(lambda.clone(), e.unsigned_abs() as usize)).zip(w).map(|(p, &e)| if e < 0 { p.recip() } else { p }).collect();
    LinearChange::diagonal(&d)
}

fn lin_to_family(p: &Polynomial) -> Polynomial {
    p.extend(FAMILY_VARS)
}

/// `f_a = ℓℓ₁ + a q`, `g_a = ℓℓ₂ − a p`.
pub fn va_family(ell: &Polynomial, ell1: &Polynomial, ell2: &Polynomial, p: &Polynomial, q: &Polynomial) -> Result<ParamFamily> {
    let a = Polynomial::var(PARAM, FAMILY_VARS);
    let f = &lin_to_family(&(ell * ell1)) + &(&a * &lin_to_family(q));
    let g = &lin_to_family(&(ell * ell2)) - &(&a * &lin_to_family(p));
    ParamFamily::new(vec![f, g], "complete intersections f_a = l*l1 + a*q, g_a = l*l2 - a*p")
}

#[derive(Clone, Debug)]
pub struct VaDegeneration {
    pub family: ParamFamily,
    pub limit: Ideal,
    pub ell: Polynomial,
    pub ell1: Polynomial,
    pub ell2: Polynomial,
    pub p: Polynomial,
    pub q: Polynomial,
}

/// Writes an `R3'` ideal as the limit at 0 of complete intersections.
pub fn va_degeneration(i: &Ideal) -> Result<VaDegeneration> {
    let rep = classify(i)?;
    if rep.stratum != Stratum::R3Prime {
        return Err(Error::WrongStratum { expected: "R3'".into(), found: rep.stratum.to_string() });
    }
    let quadrics = i.basis_in_degree(2);
    let ell = gcd_forms(&quadrics[0], &quadrics[1])?;
    let lin: Vec<Polynomial> = quadrics.iter().map(|q| q.exact_div(&ell).unwrap()).collect();
    let pair = echelon_linear(&lin);
    let (ell1, ell2) = (pair[0].clone(), pair[1].clone());
    let cubic = i
        .minimal_generators()
        .into_iter()
        .find(|g| g.total_degree() == Some(3))
        .ok_or_else(|| Error::Internal("no cubic generator in an R3' ideal".into()))?;
    let (quots, rem) = divide(&cubic, &pair, &MonomialOrder::DegRevLex);
    if !rem.is_zero() {
        return Err(Error::Internal("F is not in (l1, l2)".into()));
    }
    let (mut p, mut q) = (quots[0].clone(), quots[1].clone());
    // keep F = l1 p + l2 q with neither p nor q divisible by l
    let shifts: Vec<Polynomial> = (0..N).map(|k| Polynomial::var(k, N)).collect();
    let divisible = |h: &Polynomial| h.is_zero() || h.exact_div(&ell).is_some();
    let mut k = 0;
    while divisible(&p) || divisible(&q) {
        let c = &shifts[k % N] + &shifts[(k / N + 1 + k % N) % N].scale(&scalar::int(k as i64 + 1));
        p = &quots[0] + &(&ell2 * &c);
        q = &quots[1] - &(&ell1 * &c);
        k += 1;
        if k > 64 {
            return Err(Error::Internal("could not split F away from l".into()));
        }
    }
    let family = va_family(&ell, &ell1, &ell2, &p, &q)?;
    let limit = family_limit(&family, LimitPoint::Zero)?;
    if !limit.equal(i) {
        return Err(Error::Internal("complete-intersection family does not limit to the input".into()));
    }
    let generic = generic_fibre(&family)?;
    if gcd_forms(&generic.gens()[0], &generic.gens()[1])?.total_degree() != Some(0) {
        return Err(Error::Internal("generic fibre is not a complete intersection".into()));
    }
    Ok(VaDegeneration { family, limit, ell, ell1, ell2, p, q })
}

/// A fibre at a sampled parameter where the two generators are coprime, if any.
fn generic_fibre(f: &ParamFamily) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(FLATNESS_SEED ^ 1);
    for _ in 0..10 {
        let v = scalar::int(rng.gen_range(1..=1000));
        let fib = specialize(f, &v)?;
        if fib.gens().len() == 2 && gcd_forms(&fib.gens()[0], &fib.gens()[1])?.total_degree() == Some(0) {
            return Ok(fib);
        }
    }
    specialize(f, &scalar::int(1))
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub family: ParamFamily,
    pub at: LimitPoint,
    pub source: Ideal,
    pub limit: Ideal,
    pub report: StratumReport,
}

#[derive(Clone, Debug)]
pub struct DegenerationChain {
    /// Coordinates in which the chain is written: `I = frame(normalized)`.
    pub frame: LinearChange,
    pub normalized: Ideal,
    pub case: RsCase,
    pub steps: Vec<ChainStep>,
    pub terminal: Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RsCase {
    /// `ℓ ∉ L`: shear-and-scale family at ∞.
    First,
    /// `ℓ ∈ L` with the `xt⁴` term present: scaling `x` at ∞.
    SecondWithTerm,
    /// `ℓ ∈ L` without it: two steps through an ideal with the term.
    SecondWithoutTerm,
}

/// Change whose substitution maps variable `j` to `basis[j]`.
fn frame_from(basis: &[Polynomial]) -> Result<LinearChange> {
    LinearChange::new(basis.iter().map(|b| b.linear_coeffs().unwrap()).collect())
}

/// Completes independent linear forms to a basis with coordinate forms.
fn complete_basis(forms: &[Polynomial]) -> Vec<Polynomial> {
    let mut e = EchelonBasis::new();
    let mut out = Vec::new();
    for f in forms {
        if e.insert(f.linear_coeffs().unwrap()) {
            out.push(f.clone());
        }
    }
    for k in 0..N {
        let v = Polynomial::var(k, N);
        if out.len() < N && e.insert(v.linear_coeffs().unwrap()) {
            out.push(v);
        }
    }
    out
}

fn step(source: &Ideal, family: ParamFamily, at: LimitPoint) -> Result<ChainStep> {
    let limit = family_limit(&family, at)?;
    let report = classify(&limit)?;
    Ok(ChainStep { family, at, source: source.clone(), limit, report })
}

/// Degenerates an `R5` ideal to `R6`.
pub fn rs_degeneration(i: &Ideal) -> Result<DegenerationChain> {
    let rep = classify(i)?;
    if rep.stratum != Stratum::R5 {
        return Err(Error::WrongStratum { expected: "R5".into(), found: rep.stratum.to_string() });
    }
    let net = i.basis_in_degree(2);
    let (ell, l_space) = factor_quadric_net(&net)?.ok_or_else(|| Error::Internal("quadrics of an R5 ideal do not factor".into()))?;
    let l_rank = linalg::rank(&[&l_space[..], std::slice::from_ref(&ell)].concat().iter().map(|p| p.linear_coeffs().unwrap()).collect(), N);
    let chain = if l_rank == 4 { rs_case_one(i, &ell, &l_space)? } else { rs_case_two(i, &ell, &l_space)? };
    if chain.steps.last().map(|s| s.report.stratum) != Some(Stratum::R6) {
        return Err(Error::WrongStratum { expected: "R6".into(), found: format!("{:?}", chain.steps.last().map(|s| s.report.stratum)) });
    }
    Ok(chain)
}

fn rs_case_one(i: &Ideal, ell: &Polynomial, l_space: &[Polynomial]) -> Result<DegenerationChain> {
    // ℓ ↦ t, L ↦ ⟨x,y,z⟩
    let mut basis = l_space.to_vec();
    basis.push(ell.clone());
    let frame0 = frame_from(&basis)?;
    let moved = i.apply_change(&frame0.inverse())?;
    let (f, g, inner) = borel_position(&moved)?;
    // extend the k[x,y,z] change by t ↦ t
    let mut m = inner.matrix().clone();
    for row in m.iter_mut() {
        row.push(Scalar::zero());
    }
    let mut last = vec![Scalar::zero(); N];
    last[3] = Scalar::one();
    m.push(last);
    let inner4 = LinearChange::new(m)?;
    let (x, y, z, t) = (Polynomial::var(0, N), Polynomial::var(1, N), Polynomial::var(2, N), Polynomial::var(3, N));
    let normalized = Ideal::new(N, vec![&t * &x, &t * &y, &t * &z, f.extend(N), g.extend(N)]);
    if !normalized.equal(&moved.apply_change(&inner4.inverse())?) {
        return Err(Error::Internal("case-one normalisation changed the ideal".into()));
    }
    let frame = inner4.after(&frame0);
    // σ(a) then ψ_a, up to the projective factor a²: x ↦ a²x, t ↦ a²t − a³x
    let a = |e: u32| Polynomial::monomial(Monomial::one(FAMILY_VARS).with_exp(PARAM, e));
    let v = |k| Polynomial::var(k, FAMILY_VARS);
    let images = vec![&a(2) * &v(0), v(1), v(2), &(&a(2) * &v(3)) - &(&a(3) * &v(0))];
    let family = ParamFamily::from_substitution(&normalized, &images, "shear t -> t - a x composed with y,z -> a^-2 y,z")?;
    let s = step(&normalized, family, LimitPoint::Infinity)?;
    Ok(DegenerationChain { frame, normalized, case: RsCase::First, terminal: s.limit.clone(), steps: vec![s] })
}

/// Quintics `f, g` of `(I|_{t=0}) ⊂ k[x,y,z]` after a change of `x,y,z`
/// making their leading monomials `x⁵, x⁴y`; returns the change too.
fn borel_position(moved: &Ideal) -> Result<(Polynomial, Polynomial, LinearChange)> {
    let plane = Ideal::new(3, moved.gens().iter().map(|g| g.specialize_var(3, &Scalar::zero())).collect());
    let quintics = plane.basis_in_degree(5);
    if quintics.len() != 2 || plane.basis().len() != 2 {
        return Err(Error::Internal("plane section is not generated by two quintics".into()));
    }
    let ord = MonomialOrder::DegRevLex;
    let x5 = Monomial::from_exps(&[5, 0, 0]);
    let x4y = Monomial::from_exps(&[4, 1, 0]);
    for c in small_unipotents() {
        let ch = LinearChange::from_ints(&c)?;
        let span = Ideal::new(3, quintics.iter().map(|q| ch.apply(q)).collect::<Result<Vec<_>>>()?);
        let b = span.basis();
        if b.len() == 2 && b[0].leading_monomial(&ord) == Some(x5) && b[1].leading_monomial(&ord) == Some(x4y) {
            return Ok((b[0].clone(), b[1].clone(), ch.inverse()));
        }
    }
    Err(Error::Internal("no small change puts the quintics in Borel position".into()))
}

/// Unitriangular 3×3 integer matrices of both kinds, by increasing entry size.
fn small_unipotents() -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for bound in 0..=3i64 {
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    if a.abs().max(b.abs()).max(c.abs()) != bound {
                        continue;
                    }
                    out.push(vec![vec![1, 0, 0], vec![a, 1, 0], vec![b, c, 1]]);
                    out.push(vec![vec![1, a, b], vec![0, 1, c], vec![0, 0, 1]]);
                }
            }
        }
    }
    out
}

fn rs_case_two(i: &Ideal, ell: &Polynomial, l_space: &[Polynomial]) -> Result<DegenerationChain> {
    // ℓ ↦ x, L ↦ ⟨x,y,z⟩
    let mut basis = complete_basis(&[vec![ell.clone()], l_space.to_vec()].concat());
    if basis.len() != N {
        return Err(Error::Internal("could not complete a basis".into()));
    }
    basis.truncate(N);
    let frame = frame_from(&basis)?;
    let normalized = i.apply_change(&frame.inverse())?;
    let xt4 = Monomial::from_exps(&[1, 0, 0, 4]);
    let quintics = normalized.basis_in_degree(5);
    if quintics.len() != 2 {
        return Err(Error::Internal(format!("expected two quintic basis elements, found {}", quintics.len())));
    }
    let w = [1, 0, 0, 0];
    let has_term = quintics.iter().any(|q| !q.coefficient(&xt4).is_zero());
    if has_term {
        let s = step(&normalized, weight_family(&normalized, &w)?, LimitPoint::Infinity)?;
        return Ok(DegenerationChain { frame, normalized, case: RsCase::SecondWithTerm, terminal: s.limit.clone(), steps: vec![s] });
    }
    // f = ℓ₁h, g = ℓ₂h with ℓ₂ ∈ ⟨y,z⟩
    let h = gcd_forms(&quintics[0], &quintics[1])?;
    if h.total_degree() != Some(4) {
        return Err(Error::Internal("quintics do not share a quartic factor".into()));
    }
    let lins: Vec<Polynomial> = quintics.iter().map(|q| q.exact_div(&h).unwrap()).collect();
    let ech = echelon_linear(&lins);
    // take ℓ₂ in ⟨ℓ₁,ℓ₂⟩ ∩ ⟨y,z⟩
    let in_yz = |p: &Polynomial| p.coefficient(&Monomial::var(3, N)).is_zero();
    let (ell1, ell2) = if in_yz(&ech[1]) {
        (ech[0].clone(), ech[1].clone())
    } else if in_yz(&ech[0]) {
        (ech[1].clone(), ech[0].clone())
    } else {
        let c0 = ech[0].coefficient(&Monomial::var(3, N));
        let c1 = ech[1].coefficient(&Monomial::var(3, N));
        (ech[0].clone(), &ech[0].scale(&c1) - &ech[1].scale(&c0))
    };
    let shape = R5Shape::second_normalized(ell1, ell2, h, Scalar::one());
    let lifted = strata::build_stratum_ideal(&StratumShape::R5(shape))?;
    let back = step(&lifted, weight_family(&lifted, &w)?, LimitPoint::Zero)?;
    if !back.limit.equal(&normalized) {
        return Err(Error::Internal("scaling x does not recover the input ideal".into()));
    }
    let fwd = step(&lifted, weight_family(&lifted, &w)?, LimitPoint::Infinity)?;
    Ok(DegenerationChain { frame, normalized, case: RsCase::SecondWithoutTerm, terminal: fwd.limit.clone(), steps: vec![back, fwd] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel;
    use crate::poly::poly4;

    fn v(i: usize) -> Polynomial {
        Polynomial::var(i, N)
    }

    #[test]
    fn constant_family() {
        let b4 = borel::catalog()[1].ideal.clone();
        let fam = ParamFamily::constant(&b4).unwrap();
        assert_eq!(specialize(&fam, &scalar::int(7)).unwrap(), b4);
        assert_eq!(family_limit(&fam, LimitPoint::Zero).unwrap(), b4);
        assert_eq!(family_limit(&fam, LimitPoint::Infinity).unwrap(), b4);
    }

    #[test]
    fn weight_limits() {
        let xy = Ideal::new(N, vec![&v(0) + &v(1)]);
        assert_eq!(weight_limit(&xy, &[0, 1, 0, 0], LimitPoint::Zero).unwrap(), Ideal::monomial4(&[[1, 0, 0, 0]]));
        assert_eq!(weight_limit(&xy, &[0, 1, 0, 0], LimitPoint::Infinity).unwrap(), Ideal::monomial4(&[[0, 1, 0, 0]]));
        let b5 = borel::catalog()[2].ideal.clone();
        assert_eq!(weight_limit(&b5, &[3, 1, 0, 2], LimitPoint::Zero).unwrap(), b5);
        assert!(weight_limit(&b5, &[1, 1, 1, 1], LimitPoint::Zero).is_err());
    }

    #[test]
    fn va_examples() {
        let (x, y, z, t) = (v(0), v(1), v(2), v(3));
        let i = Ideal::new(N, vec![&x * &y, &x * &z, &(&y * &t.pow(2)) + &(&y.pow(2) * &z)]);
        let fam = va_family(&x, &y, &z, &t.pow(2), &y.pow(2)).unwrap();
        let at0 = specialize(&fam, &Scalar::zero()).unwrap();
        assert_eq!(at0, Ideal::new(N, vec![&x * &y, &x * &z]));
        assert_eq!(family_limit(&fam, LimitPoint::Zero).unwrap(), i);
        let d = va_degeneration(&i).unwrap();
        assert_eq!(d.limit, i);
        let b3 = borel::catalog()[0].ideal.clone();
        assert_eq!(va_degeneration(&b3).unwrap().limit, b3);
        let ci = Ideal::new(N, vec![poly4(&[(1, [2, 0, 0, 0]), (1, [0, 0, 0, 2])]), poly4(&[(1, [0, 2, 0, 0]), (1, [0, 0, 2, 0])])]);
        assert!(matches!(va_degeneration(&ci), Err(Error::WrongStratum { .. })));
    }

    #[test]
    fn rs_case_one_example() {
        let (x, y, z, t) = (v(0), v(1), v(2), v(3));
        let i = Ideal::new(N, vec![&t * &x, &t * &y, &t * &z, x.pow(5), &x.pow(4) * &y]);
        let chain = rs_degeneration(&i).unwrap();
        assert_eq!(chain.case, RsCase::First);
        assert_eq!(chain.steps.len(), 1);
        assert!(chain.terminal.contains(&x));
        assert_eq!(i.apply_change(&chain.frame.inverse()).unwrap(), chain.normalized);
        assert_eq!(classify(&chain.terminal).unwrap().stratum, Stratum::R6);
    }

    #[test]
    fn rs_case_two_examples() {
        let (x, y, z, t) = (v(0), v(1), v(2), v(3));
        let h = &(&y * &t.pow(3)) + &z.pow(4);
        // with the x t^4 term
        let with = R5Shape::second_normalized(t.clone(), y.clone(), h.clone(), scalar::int(2));
        let i = strata::build_stratum_ideal(&StratumShape::R5(with)).unwrap();
        let chain = rs_degeneration(&i).unwrap();
        assert_eq!(chain.case, RsCase::SecondWithTerm);
        let lim = &chain.terminal;
        for m in [[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 4]] {
            assert!(lim.contains(&poly4(&[(1, m)])));
        }
        assert!(lim.contains(&x));
        // without it
        let without = R5Shape::second_normalized(&y + &t, z.clone(), h, Scalar::zero());
        let i = strata::build_stratum_ideal(&StratumShape::R5(without)).unwrap();
        let chain = rs_degeneration(&i).unwrap();
        assert_eq!(chain.case, RsCase::SecondWithoutTerm);
        assert_eq!(chain.steps.len(), 2);
        assert_eq!(chain.steps[0].report.stratum, Stratum::R5);
        assert_eq!(chain.steps[1].report.stratum, Stratum::R6);
    }
}
