//! Shapes of the ideals in each regularity stratum, random samplers for them,
//! the stratum classifier and the dimension ledger.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;

use crate::borel;
use crate::change::LinearChange;
use crate::error::{Error, Result};
use crate::gin;
use crate::hilbert::{self, HilbertPolynomial};
use crate::ideal::{intersect, Ideal};
use crate::linalg::{self, EchelonBasis};
use crate::monomial::{count_of_degree, Monomial};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};

const N: usize = crate::NVARS;
/// Default coefficient bound for samplers.
pub const SAMPLE_BOUND: i64 = 5;
const MAX_REJECTIONS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    V,
    R3Prime,
    R4,
    R5,
    R6,
}

impl Stratum {
    pub const ALL: [Stratum; 5] = [Stratum::V, Stratum::R3Prime, Stratum::R4, Stratum::R5, Stratum::R6];

    pub fn regularity(self) -> u32 {
        match self {
            Stratum::V | Stratum::R3Prime => 3,
            Stratum::R4 => 4,
            Stratum::R5 => 5,
            Stratum::R6 => 6,
        }
    }

    /// The Borel ideal sharing this stratum's Hilbert function.
    pub fn borel_model(self) -> Ideal {
        borel::catalog()[self.regularity() as usize - 3].ideal.clone()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stratum::V => "V",
            Stratum::R3Prime => "R3'",
            Stratum::R4 => "R4",
            Stratum::R5 => "R5",
            Stratum::R6 => "R6",
        })
    }
}

impl FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "V" | "CI" => Ok(Stratum::V),
            "R3'" | "R3P" | "R3PRIME" => Ok(Stratum::R3Prime),
            "R4" => Ok(Stratum::R4),
            "R5" => Ok(Stratum::R5),
            "R6" => Ok(Stratum::R6),
            _ => Err(Error::InvalidArgument(format!("unknown stratum {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    HVA,
    HRS,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::HVA => "H_VA",
            Component::HRS => "H_RS",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Certain,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub regularity: u32,
    pub stratum: Stratum,
    /// `dim I_n` for `n = 0..=7`.
    pub hilbert_values: Vec<u64>,
    pub ci: bool,
    pub components: Vec<(Component, Membership)>,
}

#[derive(Clone, Debug)]
pub struct CIShape {
    pub f: Polynomial,
    pub g: Polynomial,
}

/// `(ℓℓ₁, ℓℓ₂, F)` with `F ∈ (ℓ₁,ℓ₂)₃`.
#[derive(Clone, Debug)]
pub struct R3PrimeShape {
    pub ell: Polynomial,
    pub ell1: Polynomial,
    pub ell2: Polynomial,
    pub cubic: Polynomial,
}

impl R3PrimeShape {
    /// `F = ℓ₁p + ℓ₂q`.
    pub fn from_quadrics(ell: Polynomial, ell1: Polynomial, ell2: Polynomial, p: &Polynomial, q: &Polynomial) -> Self {
        let cubic = &(&ell1 * p) + &(&ell2 * q);
        R3PrimeShape { ell, ell1, ell2, cubic }
    }
}

/// `(ℓ(ℓ₁,ℓ₂,q), p)`.
#[derive(Clone, Debug)]
pub struct R4Shape {
    pub ell: Polynomial,
    pub ell1: Polynomial,
    pub ell2: Polynomial,
    pub q: Polynomial,
    pub p: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R5Case {
    /// `ℓ ∉ L`.
    First,
    /// `ℓ ∈ L`.
    Second,
}

/// `ℓL + (f, g)` with `f = ℓ₁h + α·ℓ·w⁴`, `g = ℓ₂h`.
///
/// `complement` spans the linear part of the ring `S` containing `ℓ₁, ℓ₂, h`.
/// In the first case it is a basis of `L`; in the second it is `(s₁, s₂, w)`
/// with `s₁, s₂ ∈ L` and `w ∉ L`.
#[derive(Clone, Debug)]
pub struct R5Shape {
    pub case: R5Case,
    pub ell: Polynomial,
    pub l_space: Vec<Polynomial>,
    pub complement: Vec<Polynomial>,
    pub ell1: Polynomial,
    pub ell2: Polynomial,
    pub h: Polynomial,
    pub alpha: Scalar,
}

impl R5Shape {
    /// The explicit first case with `L = ⟨x,y,z⟩`-type data given directly.
    pub fn first(ell: Polynomial, l_space: Vec<Polynomial>, ell1: Polynomial, ell2: Polynomial, h: Polynomial) -> Self {
        R5Shape { case: R5Case::First, ell, complement: l_space.clone(), l_space, ell1, ell2, h, alpha: Scalar::zero() }
    }

    /// The second case in coordinates `ℓ = x`, `L = ⟨x,y,z⟩`, `S = k[y,z,t]`.
    pub fn second_normalized(ell1: Polynomial, ell2: Polynomial, h: Polynomial, alpha: Scalar) -> Self {
        let v = |i| Polynomial::var(i, N);
        R5Shape {
            case: R5Case::Second,
            ell: v(0),
            l_space: vec![v(0), v(1), v(2)],
            complement: vec![v(1), v(2), v(3)],
            ell1,
            ell2,
            h,
            alpha,
        }
    }

    pub fn f(&self) -> Polynomial {
        let main = &self.ell1 * &self.h;
        if self.alpha.is_zero() {
            return main;
        }
        let w = &self.complement[2];
        &main + &(&self.ell * &w.pow(4)).scale(&self.alpha)
    }

    pub fn g(&self) -> Polynomial {
        &self.ell2 * &self.h
    }

    pub fn transform(&self, c: &LinearChange) -> Result<Self> {
        let ap = |p: &Polynomial| c.apply(p);
        Ok(R5Shape {
            case: self.case,
            ell: ap(&self.ell)?,
            l_space: self.l_space.iter().map(ap).collect::<Result<_>>()?,
            complement: self.complement.iter().map(ap).collect::<Result<_>>()?,
            ell1: ap(&self.ell1)?,
            ell2: ap(&self.ell2)?,
            h: ap(&self.h)?,
            alpha: self.alpha.clone(),
        })
    }
}

/// `(ℓ) + f·(h, g)`.
#[derive(Clone, Debug)]
pub struct R6Shape {
    pub ell: Polynomial,
    pub f: Polynomial,
    pub h: Polynomial,
    pub g: Polynomial,
}

/// `(ℓ, f) ∩ 𝒫₁ ∩ 𝒫₂` for two points given by homogeneous coordinates.
#[derive(Clone, Debug)]
pub struct RSFamilyShape {
    pub ell: Polynomial,
    pub f: Polynomial,
    pub pt1: Vec<Scalar>,
    pub pt2: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub enum StratumShape {
    CI(CIShape),
    R3Prime(R3PrimeShape),
    R4(R4Shape),
    R5(R5Shape),
    R6(R6Shape),
}

impl StratumShape {
    pub fn stratum(&self) -> Stratum {
        match self {
            StratumShape::CI(_) => Stratum::V,
            StratumShape::R3Prime(_) => Stratum::R3Prime,
            StratumShape::R4(_) => Stratum::R4,
            StratumShape::R5(_) => Stratum::R5,
            StratumShape::R6(_) => Stratum::R6,
        }
    }
}

fn violation(msg: &str) -> Error {
    Error::ShapeViolation(msg.to_string())
}

fn require_form(p: &Polynomial, d: u32, name: &str) -> Result<()> {
    if p.nvars() != N || p.homogeneous_degree() != Some(d) {
        return Err(violation(&format!("{name} must be a nonzero form of degree {d} in 4 variables")));
    }
    Ok(())
}

fn linear_rank(forms: &[Polynomial]) -> usize {
    let mut e = EchelonBasis::new();
    for f in forms {
        if let Some(c) = f.linear_coeffs() {
            e.insert(c);
        }
    }
    e.dim()
}

fn in_span(f: &Polynomial, forms: &[Polynomial]) -> bool {
    linear_rank(forms) == linear_rank(&[forms, std::slice::from_ref(f)].concat())
}

fn divides(d: &Polynomial, f: &Polynomial) -> bool {
    f.exact_div(d).is_some()
}

fn ideal_of(gens: &[Polynomial]) -> Ideal {
    Ideal::new(N, gens.to_vec())
}

/// Whether `p` lies in the subring generated by the independent linear forms `basis`.
fn in_subring(p: &Polynomial, basis: &[Polynomial]) -> Result<bool> {
    let mut rows: Vec<Vec<Scalar>> = basis.iter().map(|b| b.linear_coeffs().unwrap()).collect();
    let mut e = EchelonBasis::new();
    for r in &rows {
        e.insert(r.clone());
    }
    for i in 0..N {
        if rows.len() == N {
            break;
        }
        let mut unit = vec![Scalar::zero(); N];
        unit[i] = Scalar::one();
        if e.insert(unit.clone()) {
            rows.push(unit);
        }
    }
    // variable j ↦ rows[j]
    let frame = LinearChange::new(rows)?;
    let pulled = frame.inverse().apply(p)?;
    Ok(pulled.terms().iter().all(|(m, _)| (basis.len()..N).all(|j| m.exp(j) == 0)))
}

/// A greatest common divisor of two forms, as `f·g / lcm(f,g)`, made monic.
pub fn gcd_forms(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() || !g.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let ord = MonomialOrder::DegRevLex;
    let cap = intersect(&Ideal::new(f.nvars(), vec![f.clone()]), &Ideal::new(g.nvars(), vec![g.clone()]));
    let basis = cap.basis();
    if basis.len() != 1 {
        return Err(Error::Internal("intersection of principal ideals is not principal".into()));
    }
    let prod = f * g;
    let gcd = prod.exact_div(&basis[0]).ok_or_else(|| Error::Internal("lcm does not divide f*g".into()))?;
    Ok(gcd.monic(&ord))
}

/// Writes a 3-dimensional space of quadrics as `ℓ·L` when possible.
pub fn factor_quadric_net(v: &[Polynomial]) -> Result<Option<(Polynomial, Vec<Polynomial>)>> {
    if v.len() != 3 || v.iter().any(|q| q.homogeneous_degree() != Some(2)) {
        return Err(Error::InvalidArgument("expected three quadrics".into()));
    }
    let rows: Vec<Vec<Scalar>> = v.iter().map(quadric_coeffs).collect();
    if linalg::rank(&rows, rows[0].len()) != 3 {
        return Err(Error::InvalidArgument("quadrics are linearly dependent".into()));
    }
    let ell = gcd_forms(&v[0], &v[1])?;
    if ell.total_degree() != Some(1) {
        return Ok(None);
    }
    let Some(l2) = v[2].exact_div(&ell) else { return Ok(None) };
    let l: Vec<Polynomial> = vec![v[0].exact_div(&ell).unwrap(), v[1].exact_div(&ell).unwrap(), l2];
    Ok(Some((ell, echelon_linear(&l))))
}

fn quadric_coeffs(q: &Polynomial) -> Vec<Scalar> {
    Monomial::all_of_degree(q.nvars(), 2).iter().map(|m| q.coefficient(m)).collect()
}

/// Reduced row echelon basis of a span of linear forms.
pub fn echelon_linear(forms: &[Polynomial]) -> Vec<Polynomial> {
    let n = forms.first().map(|f| f.nvars()).unwrap_or(N);
    let mut m: linalg::Matrix = forms.iter().filter_map(|f| f.linear_coeffs()).collect();
    let piv = linalg::rref(&mut m, n);
    m.truncate(piv.len());
    m.iter().map(|r| Polynomial::linear(r)).collect()
}

fn validate(shape: &StratumShape) -> Result<Ideal> {
    match shape {
        StratumShape::CI(s) => {
            require_form(&s.f, 2, "f")?;
            require_form(&s.g, 2, "g")?;
            if gcd_forms(&s.f, &s.g)?.total_degree() != Some(0) {
                return Err(violation("f and g have a common divisor"));
            }
            Ok(ideal_of(&[s.f.clone(), s.g.clone()]))
        }
        StratumShape::R3Prime(s) => {
            require_form(&s.ell, 1, "ℓ")?;
            require_form(&s.ell1, 1, "ℓ₁")?;
            require_form(&s.ell2, 1, "ℓ₂")?;
            require_form(&s.cubic, 3, "F")?;
            if linear_rank(&[s.ell1.clone(), s.ell2.clone()]) != 2 {
                return Err(violation("ℓ₁ and ℓ₂ are linearly dependent"));
            }
            if !ideal_of(&[s.ell1.clone(), s.ell2.clone()]).contains(&s.cubic) {
                return Err(violation("F is not in (ℓ₁,ℓ₂)"));
            }
            if divides(&s.ell, &s.cubic) {
                return Err(violation("F is divisible by ℓ"));
            }
            Ok(ideal_of(&[&s.ell * &s.ell1, &s.ell * &s.ell2, s.cubic.clone()]))
        }
        StratumShape::R4(s) => {
            require_form(&s.ell, 1, "ℓ")?;
            require_form(&s.ell1, 1, "ℓ₁")?;
            require_form(&s.ell2, 1, "ℓ₂")?;
            require_form(&s.q, 2, "q")?;
            require_form(&s.p, 4, "p")?;
            if linear_rank(&[s.ell1.clone(), s.ell2.clone()]) != 2 {
                return Err(violation("ℓ₁ and ℓ₂ are linearly dependent"));
            }
            let line = ideal_of(&[s.ell1.clone(), s.ell2.clone()]);
            if line.contains(&s.q) {
                return Err(violation("q lies in (ℓ₁,ℓ₂)"));
            }
            if !line.sum(&ideal_of(std::slice::from_ref(&s.q))).contains(&s.p) {
                return Err(violation("p is not in (ℓ₁,ℓ₂,q)"));
            }
            if divides(&s.ell, &s.p) {
                return Err(violation("p lies in (ℓ)"));
            }
            Ok(ideal_of(&[&s.ell * &s.ell1, &s.ell * &s.ell2, &s.ell * &s.q, s.p.clone()]))
        }
        StratumShape::R5(s) => validate_r5(s),
        StratumShape::R6(s) => {
            require_form(&s.ell, 1, "ℓ")?;
            require_form(&s.f, 4, "f")?;
            require_form(&s.h, 1, "h")?;
            require_form(&s.g, 2, "g")?;
            if divides(&s.ell, &s.f) {
                return Err(violation("f lies in (ℓ)"));
            }
            if linear_rank(&[s.ell.clone(), s.h.clone()]) != 2 {
                return Err(violation("h is a multiple of ℓ"));
            }
            if ideal_of(&[s.ell.clone(), s.h.clone()]).contains(&s.g) {
                return Err(violation("g lies in (ℓ,h)"));
            }
            Ok(ideal_of(&[s.ell.clone(), &s.f * &s.h, &s.f * &s.g]))
        }
    }
}

fn validate_r5(s: &R5Shape) -> Result<Ideal> {
    require_form(&s.ell, 1, "ℓ")?;
    require_form(&s.ell1, 1, "ℓ₁")?;
    require_form(&s.ell2, 1, "ℓ₂")?;
    require_form(&s.h, 4, "h")?;
    if s.l_space.len() != 3 || s.l_space.iter().any(|l| l.homogeneous_degree() != Some(1)) || linear_rank(&s.l_space) != 3 {
        return Err(violation("L must be spanned by 3 independent linear forms"));
    }
    if s.complement.len() != 3 || s.complement.iter().any(|l| l.homogeneous_degree() != Some(1)) || linear_rank(&s.complement) != 3 {
        return Err(violation("the complement ring needs 3 independent linear forms"));
    }
    let ell_in_l = in_span(&s.ell, &s.l_space);
    match s.case {
        R5Case::First => {
            if ell_in_l {
                return Err(violation("first case needs ℓ ∉ L"));
            }
            if !s.complement.iter().all(|c| in_span(c, &s.l_space)) {
                return Err(violation("first case: S must be generated by L"));
            }
            if !s.alpha.is_zero() {
                return Err(violation("first case has no α term"));
            }
        }
        R5Case::Second => {
            if !ell_in_l {
                return Err(violation("second case needs ℓ ∈ L"));
            }
            if !s.complement[..2].iter().all(|c| in_span(c, &s.l_space)) || in_span(&s.complement[2], &s.l_space) {
                return Err(violation("second case: S = k[s₁,s₂,w] with s₁,s₂ ∈ L and w ∉ L"));
            }
            if linear_rank(&[vec![s.ell.clone()], s.complement.clone()].concat()) != 4 {
                return Err(violation("second case: ℓ, s₁, s₂, w must form a basis"));
            }
            if !s.alpha.is_zero() && !in_span(&s.ell2, &s.complement[..2]) {
                return Err(violation("α ≠ 0 needs ℓ₂ ∈ ⟨s₁,s₂⟩"));
            }
        }
    }
    if !in_span(&s.ell1, &s.complement) || !in_span(&s.ell2, &s.complement) {
        return Err(violation("ℓ₁, ℓ₂ must lie in S₁"));
    }
    if linear_rank(&[s.ell1.clone(), s.ell2.clone()]) != 2 {
        return Err(violation("ℓ₁ and ℓ₂ are linearly dependent"));
    }
    if !in_subring(&s.h, &s.complement)? {
        return Err(violation("h must lie in S₄"));
    }
    let l_ideal = ideal_of(&s.l_space);
    let (f, g) = (s.f(), s.g());
    if !l_ideal.contains(&f) || !l_ideal.contains(&g) {
        return Err(violation("f and g must lie in (L)"));
    }
    let mut gens: Vec<Polynomial> = s.l_space.iter().map(|l| &s.ell * l).collect();
    gens.push(f);
    gens.push(g);
    Ok(ideal_of(&gens))
}

/// The Hilbert function (`n ≤ 8`) and regularity expected of a stratum member.
pub fn check_contract(i: &Ideal, stratum: Stratum) -> Result<()> {
    let want = hilbert::hilbert_values(&stratum.borel_model(), 8)?;
    let got = hilbert::hilbert_values(i, 8)?;
    if want != got {
        return Err(Error::Internal(format!("{stratum}: Hilbert function {got:?}, expected {want:?}")));
    }
    let r = hilbert::regularity(i)?;
    if r != stratum.regularity() {
        return Err(Error::WrongStratum { expected: stratum.to_string(), found: format!("regularity {r}") });
    }
    Ok(())
}

/// Validates the shape and builds its ideal; the stratum contract is asserted.
pub fn build_stratum_ideal(shape: &StratumShape) -> Result<Ideal> {
    let i = validate(shape)?;
    check_contract(&i, shape.stratum())?;
    Ok(i)
}

fn coef<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    scalar::int(rng.gen_range(-bound..=bound))
}

/// Dense random form of degree `d` in the subring generated by `basis`.
pub fn random_form_in<R: Rng + ?Sized>(rng: &mut R, basis: &[Polynomial], d: u32, bound: i64) -> Polynomial {
    loop {
        let k = basis.len();
        let terms: Vec<(Monomial, Scalar)> = Monomial::all_of_degree(k, d).into_iter().map(|m| (m, coef(rng, bound))).collect();
        let p = Polynomial::from_terms(k, terms).substitute(basis).expect("matching arity");
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_form<R: Rng + ?Sized>(rng: &mut R, d: u32, bound: i64) -> Polynomial {
    let vars: Vec<Polynomial> = (0..N).map(|i| Polynomial::var(i, N)).collect();
    random_form_in(rng, &vars, d, bound)
}

fn random_shape<R: Rng + ?Sized>(label: Stratum, rng: &mut R, bound: i64) -> Result<StratumShape> {
    let lin = |rng: &mut R| random_form(rng, 1, bound);
    Ok(match label {
        Stratum::V => StratumShape::CI(CIShape { f: random_form(rng, 2, bound), g: random_form(rng, 2, bound) }),
        Stratum::R3Prime => {
            let (ell, ell1, ell2) = (lin(rng), lin(rng), lin(rng));
            let (p, q) = (random_form(rng, 2, bound), random_form(rng, 2, bound));
            StratumShape::R3Prime(R3PrimeShape::from_quadrics(ell, ell1, ell2, &p, &q))
        }
        Stratum::R4 => {
            let (ell, ell1, ell2) = (lin(rng), lin(rng), lin(rng));
            let q = random_form(rng, 2, bound);
            let p = &(&(&ell1 * &random_form(rng, 3, bound)) + &(&ell2 * &random_form(rng, 3, bound))) + &(&q * &random_form(rng, 2, bound));
            StratumShape::R4(R4Shape { ell, ell1, ell2, q, p })
        }
        Stratum::R5 => {
            let v = |i| Polynomial::var(i, N);
            let normalized = if rng.gen_bool(0.5) {
                // ℓ = t, L = ⟨x,y,z⟩
                let l = vec![v(0), v(1), v(2)];
                let (ell1, ell2) = (random_form_in(rng, &l, 1, bound), random_form_in(rng, &l, 1, bound));
                R5Shape::first(v(3), l.clone(), ell1, ell2, random_form_in(rng, &l, 4, bound))
            } else {
                let s = vec![v(1), v(2), v(3)];
                let yz = vec![v(1), v(2)];
                if rng.gen_bool(0.5) {
                    // h ∈ (y,z)
                    let h = &(&v(1) * &random_form_in(rng, &s, 3, bound)) + &(&v(2) * &random_form_in(rng, &s, 3, bound));
                    let ell1 = random_form_in(rng, &s, 1, bound);
                    let (ell2, alpha) = if rng.gen_bool(0.5) {
                        (random_form_in(rng, &yz, 1, bound), coef(rng, bound))
                    } else {
                        (random_form_in(rng, &s, 1, bound), Scalar::zero())
                    };
                    R5Shape::second_normalized(ell1, ell2, h, alpha)
                } else {
                    let (ell1, ell2) = (random_form_in(rng, &yz, 1, bound), random_form_in(rng, &yz, 1, bound));
                    R5Shape::second_normalized(ell1, ell2, random_form_in(rng, &s, 4, bound), coef(rng, bound))
                }
            };
            StratumShape::R5(normalized.transform(&LinearChange::random(rng, N, bound))?)
        }
        Stratum::R6 => StratumShape::R6(R6Shape {
            ell: lin(rng),
            f: random_form(rng, 4, bound),
            h: lin(rng),
            g: random_form(rng, 2, bound),
        }),
    })
}

/// Random member of a stratum from a random valid shape.
pub fn sample_stratum<R: Rng + ?Sized>(label: Stratum, rng: &mut R) -> Result<Ideal> {
    sample_stratum_with(label, rng, SAMPLE_BOUND)
}

pub fn sample_stratum_with<R: Rng + ?Sized>(label: Stratum, rng: &mut R, bound: i64) -> Result<Ideal> {
    sample_shape_with(label, rng, bound).map(|(_, i)| i)
}

pub fn sample_shape_with<R: Rng + ?Sized>(label: Stratum, rng: &mut R, bound: i64) -> Result<(StratumShape, Ideal)> {
    for _ in 0..MAX_REJECTIONS {
        let shape = random_shape(label, rng, bound)?;
        match validate(&shape) {
            Ok(i) => {
                check_contract(&i, label)?;
                return Ok((shape, i));
            }
            Err(Error::ShapeViolation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(MAX_REJECTIONS))
}

/// Ideal of the point with homogeneous coordinates `pt`.
pub fn point_ideal(pt: &[Scalar]) -> Result<Ideal> {
    if pt.len() != N || pt.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidArgument("a point needs 4 coordinates, not all zero".into()));
    }
    let k = (0..N).find(|&i| !pt[i].is_zero()).unwrap();
    let gens: Vec<Polynomial> = (0..N)
        .filter(|&i| i != k)
        .map(|i| {
            let mut c = vec![Scalar::zero(); N];
            c[i] = pt[k].clone();
            c[k] = -pt[i].clone();
            Polynomial::linear(&c)
        })
        .collect();
    Ok(ideal_of(&gens))
}

fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// `(ℓ, f) ∩ 𝒫₁ ∩ 𝒫₂`, asserting quotient Hilbert polynomial `4n`.
pub fn rs_family_ideal(s: &RSFamilyShape) -> Result<Ideal> {
    require_form(&s.ell, 1, "ℓ")?;
    require_form(&s.f, 4, "f")?;
    if divides(&s.ell, &s.f) {
        return Err(violation("f lies in (ℓ)"));
    }
    let p1 = point_ideal(&s.pt1)?;
    let p2 = point_ideal(&s.pt2)?;
    if proportional(&s.pt1, &s.pt2) {
        return Err(violation("the two points coincide"));
    }
    for pt in [&s.pt1, &s.pt2] {
        if s.ell.eval(pt).is_zero() && s.f.eval(pt).is_zero() {
            return Err(violation("a point lies on the plane quartic"));
        }
    }
    let curve = ideal_of(&[s.ell.clone(), s.f.clone()]);
    let i = intersect(&intersect(&curve, &p1), &p2);
    let hp = hilbert::quotient_hilbert_polynomial(&i)?;
    let want = HilbertPolynomial::from_ints(&[0, 4]);
    if hp != want {
        return Err(Error::WrongHilbertPolynomial { expected: want.to_string(), found: hp.to_string() });
    }
    Ok(i)
}

pub fn sample_rs_family<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Result<(RSFamilyShape, Ideal)> {
    for _ in 0..MAX_REJECTIONS {
        let shape = RSFamilyShape {
            ell: random_form(rng, 1, bound),
            f: random_form(rng, 4, bound),
            pt1: (0..N).map(|_| coef(rng, bound)).collect(),
            pt2: (0..N).map(|_| coef(rng, bound)).collect(),
        };
        match rs_family_ideal(&shape) {
            Ok(i) => return Ok((shape, i)),
            Err(Error::ShapeViolation(_)) | Err(Error::InvalidArgument(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(MAX_REJECTIONS))
}

/// Regularity stratum and component attribution of a saturated ideal with
/// quotient Hilbert polynomial `4n`.
pub fn classify(i: &Ideal) -> Result<StratumReport> {
    let want = HilbertPolynomial::from_ints(&[0, 4]);
    let hp = hilbert::quotient_hilbert_polynomial(i)?;
    if hp != want {
        return Err(Error::WrongHilbertPolynomial { expected: want.to_string(), found: hp.to_string() });
    }
    if !gin::is_saturated(i)? {
        return Err(Error::NotSaturated);
    }
    let regularity = hilbert::regularity(i)?;
    let stratum = match regularity {
        3 => {
            let quadrics = i.basis_in_degree(2);
            if quadrics.len() != 2 {
                return Err(Error::Internal(format!("regularity 3 with {} quadrics", quadrics.len())));
            }
            if gcd_forms(&quadrics[0], &quadrics[1])?.total_degree() == Some(0) {
                Stratum::V
            } else {
                Stratum::R3Prime
            }
        }
        4 => Stratum::R4,
        5 => Stratum::R5,
        6 => Stratum::R6,
        r => return Err(Error::Internal(format!("regularity {r} outside 3..=6"))),
    };
    let components = if regularity == 3 {
        vec![(Component::HVA, Membership::Certain), (Component::HRS, Membership::Unknown)]
    } else {
        vec![(Component::HVA, Membership::Unknown), (Component::HRS, Membership::Certain)]
    };
    Ok(StratumReport {
        regularity,
        stratum,
        hilbert_values: hilbert::hilbert_values(i, 7)?,
        ci: stratum == Stratum::V,
        components,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionEntry {
    pub name: &'static str,
    pub value: i64,
    /// Summands of the parameter count, each with a label.
    pub terms: Vec<(&'static str, i64)>,
}

impl DimensionEntry {
    fn new(name: &'static str, terms: Vec<(&'static str, i64)>) -> Self {
        DimensionEntry { name, value: terms.iter().map(|t| t.1).sum(), terms }
    }

    pub fn derivation(&self) -> String {
        let mut s = String::new();
        for (k, (_, v)) in self.terms.iter().enumerate() {
            if k == 0 {
                s += &v.to_string();
            } else if *v < 0 {
                s += &format!("-{}", -v);
            } else {
                s += &format!("+{v}");
            }
        }
        format!("{s}={}", self.value)
    }
}

fn dim_p(d: u32) -> i64 {
    count_of_degree(N, d) as i64
}

fn grass(k: i64, n: i64) -> i64 {
    k * (n - k)
}

fn proj(vector_dim: i64) -> i64 {
    vector_dim - 1
}

fn dim_in(i: &Ideal, d: i64) -> i64 {
    hilbert::hilbert_function(i, d).expect("homogeneous") as i64
}

/// Dimensions of the strata and components, each as a sum of Grassmannian,
/// projective-space and fibre dimensions computed from Hilbert functions.
pub fn dimension_table() -> Vec<DimensionEntry> {
    let v = |i| Polynomial::var(i, N);
    let x = v(0);
    let line = ideal_of(&[v(0), v(1)]);
    let two_points = ideal_of(&[v(0), v(1), &v(2) * &v(2)]);
    let ell_line = two_points_times(&x, &line);
    let ell_two = two_points_times(&x, &two_points);
    let plane_quartics = dim_p(4) - dim_p(3);

    let hq = DimensionEntry::new("Hq", vec![("Grass(2,P1)", grass(2, dim_p(1))), ("P(P2/(l1,l2)_2)", proj(dim_p(2) - dim_in(&line, 2)))]);
    let r4 = DimensionEntry::new(
        "R4",
        vec![
            ("P(P1)", proj(dim_p(1))),
            ("Hq", hq.value),
            ("P((l1,l2,q)_4/l(l1,l2,q)_3)", proj(dim_in(&two_points, 4) - dim_in(&ell_two, 4))),
        ],
    );
    let h1 = DimensionEntry::new(
        "H1",
        vec![
            ("P(P1)", proj(dim_p(1))),
            ("Grass(2,P1/l)", grass(2, dim_p(1) - 1)),
            ("P(P4/lP3)", proj(plane_quartics)),
        ],
    );
    let r5 = DimensionEntry::new("R5", vec![("H1", h1.value), ("fibre", 3)]);
    let r6 = DimensionEntry::new(
        "R6",
        vec![
            ("P(P1)", proj(dim_p(1))),
            ("P(P4/lP3)", proj(plane_quartics)),
            ("P(P1/l)", proj(dim_p(1) - 1)),
            ("P(P2/(l,h)_2)", proj(dim_p(2) - dim_in(&line, 2))),
        ],
    );
    let vdim = DimensionEntry::new("V", vec![("Grass(2,P2)", grass(2, dim_p(2)))]);
    let r3p = DimensionEntry::new(
        "R3'",
        vec![
            ("P(P1)", proj(dim_p(1))),
            ("Grass(2,P1)", grass(2, dim_p(1))),
            ("P((l1,l2)_3/l(l1,l2)_2)", proj(dim_in(&line, 3) - dim_in(&ell_line, 3))),
        ],
    );
    let z = DimensionEntry::new(
        "Z",
        vec![("P(P1)", proj(dim_p(1))), ("P(P4/lP3)", proj(plane_quartics)), ("two points", 2 * proj(dim_p(1)))],
    );
    vec![hq, r4, h1, r5, r6, vdim, r3p, z]
}

fn two_points_times(ell: &Polynomial, i: &Ideal) -> Ideal {
    i.mul_poly(ell)
}

pub fn dimension_of(name: &str) -> Option<i64> {
    dimension_table().into_iter().find(|e| e.name == name).map(|e| e.value)
}
