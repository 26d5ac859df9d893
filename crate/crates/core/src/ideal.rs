//! Homogeneous ideals and the ideal-theoretic operations built on the
//! Gröbner engine: membership, quotients, saturation, intersection.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::change::LinearChange;
use crate::error::{Error, Result};
use crate::groebner::{self, Reducer};
use crate::linalg::{kernel_basis, Matrix};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};

type BasisCache = Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// An ideal given by generators, with reduced Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    cache: BasisCache,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        Ideal { nvars, gens, cache: Arc::default() }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, vec![Polynomial::constant(Scalar::from_integer(1.into()), nvars)])
    }

    pub fn from_monomials(monos: &[Monomial]) -> Self {
        let nvars = monos.first().map(|m| m.nvars()).unwrap_or(crate::NVARS);
        Self::new(nvars, monos.iter().map(|m| Polynomial::monomial(*m)).collect())
    }

    /// Monomial ideal in `k[x,y,z,t]` from exponent vectors.
    pub fn monomial4(exps: &[[u32; 4]]) -> Self {
        Self::from_monomials(&exps.iter().map(|e| Monomial::from_exps(e)).collect::<Vec<_>>())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    pub fn groebner_basis(&self, ord: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(b) = self.cache.lock().unwrap().get(ord) {
            return b.clone();
        }
        let gb = Arc::new(groebner::buchberger(&self.gens, ord, None));
        self.cache.lock().unwrap().entry(ord.clone()).or_insert(gb).clone()
    }

    /// Degrevlex basis, the canonical one.
    pub fn basis(&self) -> Arc<Vec<Polynomial>> {
        self.groebner_basis(&MonomialOrder::DegRevLex)
    }

    /// Basis correct up to degree `d` (homogeneous input); not cached.
    pub fn truncated_basis(&self, ord: &MonomialOrder, d: u32) -> Vec<Polynomial> {
        if let Some(b) = self.cache.lock().unwrap().get(ord) {
            return b.as_ref().clone();
        }
        groebner::buchberger(&self.gens, ord, Some(d))
    }

    pub fn normal_form(&self, f: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        groebner::normal_form(f, &self.groebner_basis(ord), ord)
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(&self.basis(), &MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f, &MonomialOrder::DegRevLex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let r = self.reducer();
        other.gens.iter().all(|g| r.reduce(g).is_zero())
    }

    pub fn leading_monomials(&self, ord: &MonomialOrder) -> Vec<Monomial> {
        self.groebner_basis(ord).iter().filter_map(|g| g.leading_monomial(ord)).collect()
    }

    pub fn initial_ideal(&self, ord: &MonomialOrder) -> Ideal {
        let mut lms = self.leading_monomials(ord);
        sort_monomials_desc(&mut lms);
        if lms.is_empty() {
            return Ideal::zero(self.nvars);
        }
        Ideal::from_monomials(&lms)
    }

    /// Minimal monomial generators, degrevlex-descending. Monomial ideals only.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        Some(minimize_monomials(self.gens.iter().map(|g| g.terms()[0].0).collect()))
    }

    /// Minimal homogeneous generators, extracted from the degrevlex basis by
    /// dropping elements lying in the ideal generated by the ones kept so far.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        if let Some(ms) = self.monomial_generators() {
            return ms.into_iter().map(Polynomial::monomial).collect();
        }
        let mut gb: Vec<Polynomial> = self.basis().as_ref().clone();
        gb.sort_by_key(|g| g.total_degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gb {
            let d = g.total_degree().unwrap_or(0);
            if !kept.is_empty() {
                let partial = groebner::buchberger(&kept, &MonomialOrder::DegRevLex, Some(d));
                if groebner::normal_form(&g, &partial, &MonomialOrder::DegRevLex).is_zero() {
                    continue;
                }
            }
            kept.push(g);
        }
        kept
    }

    pub fn apply_change(&self, g: &LinearChange) -> Result<Ideal> {
        let gens = self.gens.iter().map(|p| g.apply(p)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(self.nvars, gens))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(self.nvars, gens)
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Ideal {
        Ideal::new(self.nvars, self.gens.iter().map(|g| g * f).collect())
    }

    pub fn extend(&self, nvars: usize) -> Ideal {
        Ideal::new(nvars, self.gens.iter().map(|g| g.extend(nvars)).collect())
    }

    pub fn equal(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars && *self.basis() == *other.basis()
    }

    /// Generators of degree exactly `d` in the degrevlex basis.
    pub fn basis_in_degree(&self, d: u32) -> Vec<Polynomial> {
        self.basis().iter().filter(|g| g.total_degree() == Some(d)).cloned().collect()
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.fmt_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.fmt_with(&crate::monomial::DEFAULT_NAMES))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&crate::monomial::DEFAULT_NAMES))
    }
}

pub fn sort_monomials_desc(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| crate::poly::drl_cmp(b, a));
}

/// Removes non-minimal monomials and sorts degrevlex-descending.
pub fn minimize_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by_key(|m| m.degree());
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    sort_monomials_desc(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Operations

pub fn groebner_basis(i: &Ideal, ord: &MonomialOrder) -> Vec<Polynomial> {
    i.groebner_basis(ord).as_ref().clone()
}

pub fn normal_form(f: &Polynomial, i: &Ideal, ord: &MonomialOrder) -> Polynomial {
    i.normal_form(f, ord)
}

pub fn initial_ideal(i: &Ideal, ord: &MonomialOrder) -> Ideal {
    i.initial_ideal(ord)
}

pub fn equal(i: &Ideal, j: &Ideal) -> bool {
    i.equal(j)
}

/// Elimination of the appended variable `u` (index `nvars`) from `gens`.
fn eliminate_last(nvars: usize, gens: Vec<Polynomial>) -> Ideal {
    let n1 = nvars + 1;
    let mut w = vec![0; n1];
    w[nvars] = 1;
    let ord = MonomialOrder::weighted(w);
    let gb = groebner::buchberger(&gens, &ord, None);
    let kept: Vec<Polynomial> = gb.into_iter().filter(|g| g.degree_in(nvars) == 0).map(|g| g.restrict(nvars).unwrap()).collect();
    Ideal::new(nvars, kept)
}

/// `I ∩ J` as the elimination of `u` from `u·I + (1−u)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    let n = i.nvars;
    if i.is_zero() || j.is_zero() {
        return Ideal::zero(n);
    }
    if i.is_monomial() && j.is_monomial() {
        let a = i.monomial_generators().unwrap();
        let b = j.monomial_generators().unwrap();
        let lcms: Vec<Monomial> = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
        return Ideal::from_monomials(&minimize_monomials(lcms));
    }
    let n1 = n + 1;
    let u = Polynomial::var(n, n1);
    let one_minus_u = &Polynomial::constant(Scalar::from_integer(1.into()), n1) - &u;
    let mut gens = Vec::new();
    for g in &i.gens {
        gens.push(&g.extend(n1) * &u);
    }
    for g in &j.gens {
        gens.push(&g.extend(n1) * &one_minus_u);
    }
    eliminate_last(n, gens)
}

/// `I : f`, via `(I ∩ (f)) / f`.
pub fn quotient(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = i.nvars;
    if i.is_monomial() && f.len() == 1 {
        let m = f.terms()[0].0;
        let ms: Vec<Monomial> = i.monomial_generators().unwrap().iter().map(|g| g.div(&g.gcd(&m)).unwrap()).collect();
        return Ok(Ideal::from_monomials(&minimize_monomials(ms)));
    }
    let principal = Ideal::new(n, vec![f.clone()]);
    let cap = intersect(i, &principal);
    let gens = cap
        .gens
        .iter()
        .map(|g| g.exact_div(f).ok_or_else(|| Error::Internal("intersection element not divisible".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(n, gens))
}

/// `I : f^∞`, computed by eliminating `u` from `I + (1 − u f)`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = i.nvars;
    if i.is_zero() {
        return Ok(i.clone());
    }
    if i.is_monomial() && f.len() == 1 {
        let m = f.terms()[0].0;
        let ms: Vec<Monomial> = i
            .monomial_generators()
            .unwrap()
            .iter()
            .map(|g| {
                let mut r = *g;
                for v in 0..n {
                    if m.exp(v) > 0 {
                        r = r.with_exp(v, 0);
                    }
                }
                r
            })
            .collect();
        return Ok(Ideal::from_monomials(&minimize_monomials(ms)));
    }
    if let Some(v) = single_variable(f) {
        if let Some(w) = positive_grading(i, v) {
            return Ok(saturate_var_graded(i, v, w));
        }
    }
    Ok(saturate_by_elimination(i, f))
}

fn saturate_by_elimination(i: &Ideal, f: &Polynomial) -> Ideal {
    let n = i.nvars;
    let n1 = n + 1;
    let mut gens: Vec<Polynomial> = i.gens.iter().map(|g| g.extend(n1)).collect();
    let uf = &Polynomial::var(n, n1) * &f.extend(n1);
    gens.push(&Polynomial::constant(Scalar::from_integer(1.into()), n1) - &uf);
    eliminate_last(n, gens)
}

/// `I : f^∞` as the stable value of `I ⊆ I:f ⊆ I:f² ⊆ …`; the slow reference route.
pub fn saturate_by_quotients(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = quotient(&cur, f)?;
        if next.equal(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

fn single_variable(f: &Polynomial) -> Option<usize> {
    match f.terms() {
        [(m, _)] if m.degree() == 1 => (0..m.nvars()).find(|&v| m.exp(v) == 1),
        _ => None,
    }
}

/// Positive integer weights making every generator homogeneous, when the
/// generators are already homogeneous in the variables other than `x_v`.
fn positive_grading(i: &Ideal, v: usize) -> Option<Vec<i32>> {
    let n = i.nvars;
    let rest = |m: &Monomial| (0..n).filter(|&k| k != v).map(|k| m.exp(k)).sum::<u32>();
    let mut rows: Matrix = Vec::new();
    for g in &i.gens {
        let (m0, _) = &g.terms()[0];
        for (m, _) in &g.terms()[1..] {
            if rest(m) != rest(m0) {
                return None;
            }
            rows.push((0..n).map(|k| scalar::int(m.exp(k) as i64 - m0.exp(k) as i64)).collect());
        }
    }
    if rows.is_empty() {
        return Some(vec![1; n]);
    }
    let ker = kernel_basis(&rows, n);
    let k = ker.iter().find(|k| !num_traits::Zero::is_zero(&k[v]))?;
    let mut scaled: Vec<Scalar> = k.iter().map(|c| c / &k[v]).collect();
    let denom: Scalar = Scalar::from_integer(scaled.iter().map(|c| c.denom().clone()).product());
    let mut w = Vec::with_capacity(n);
    for c in scaled.iter_mut() {
        w.push(i32::try_from((&*c * &denom).to_integer()).ok()?);
    }
    let shift = (0..n).filter(|&k| k != v).map(|k| 1 - w[k]).max().unwrap_or(0).max(0);
    for (k, wk) in w.iter_mut().enumerate() {
        if k != v {
            *wk = wk.checked_add(shift)?;
        }
    }
    Some(w)
}

fn strip_variable(gb: &[Polynomial], v: usize, n: usize) -> Vec<Polynomial> {
    gb.iter()
        .map(|g| {
            let e = g.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0);
            if e == 0 {
                g.clone()
            } else {
                g.exact_div(&Polynomial::var(v, n).pow(e)).unwrap()
            }
        })
        .collect()
}

/// `I : x_v^∞` for `I` homogeneous under the positive grading `w`: order by
/// `w`-degree, then by the exponent of `x_v` (smaller first), and strip
/// powers of `x_v` from the basis.
fn saturate_var_graded(i: &Ideal, v: usize, w: Vec<i32>) -> Ideal {
    let n = i.nvars;
    let mut low = vec![0; n];
    low[v] = -1;
    let ord = MonomialOrder::Weight {
        weights: w,
        tiebreak: Box::new(MonomialOrder::Weight { weights: low, tiebreak: Box::new(MonomialOrder::DegRevLex) }),
    };
    let gb = i.groebner_basis(&ord);
    Ideal::new(n, strip_variable(&gb, v, n))
}

/// `I : x_v^∞` for homogeneous `I`: degrevlex with `x_v` last, then strip
/// powers of `x_v` from the basis.
fn saturate_var_homogeneous(i: &Ideal, v: usize) -> Ideal {
    let n = i.nvars;
    let last = n - 1;
    let swap = |p: &Polynomial| -> Polynomial {
        let imgs: Vec<Polynomial> = (0..n)
            .map(|k| {
                let target = if k == v { last } else if k == last { v } else { k };
                Polynomial::var(target, n)
            })
            .collect();
        p.substitute(&imgs).unwrap()
    };
    let swapped = Ideal::new(n, i.gens.iter().map(swap).collect());
    let stripped = strip_variable(&swapped.basis(), last, n);
    Ideal::new(n, stripped.iter().map(swap).collect())
}

/// Saturation by the irrelevant ideal `(x_1, …, x_n)`.
pub fn saturate_irrelevant(i: &Ideal) -> Result<Ideal> {
    i.require_homogeneous()?;
    let n = i.nvars;
    if i.is_zero() {
        return Ok(i.clone());
    }
    if i.is_monomial() {
        let gens = i.monomial_generators().unwrap();
        let mut acc: Option<Vec<Monomial>> = None;
        for v in 0..n {
            let sat_v: Vec<Monomial> = minimize_monomials(gens.iter().map(|g| g.with_exp(v, 0)).collect());
            acc = Some(match acc {
                None => sat_v,
                Some(a) => minimize_monomials(a.iter().flat_map(|x| sat_v.iter().map(move |y| x.lcm(y))).collect()),
            });
        }
        return Ok(Ideal::from_monomials(&acc.unwrap()));
    }
    let by_last = saturate_var_homogeneous(i, n - 1);
    if by_last.equal(i) {
        return Ok(i.clone());
    }
    let mut acc = by_last;
    for v in (0..n - 1).rev() {
        let sv = saturate_var_homogeneous(i, v);
        if sv.contains_ideal(&acc) {
            continue;
        }
        acc = intersect(&acc, &sv);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly4;

    fn b3() -> Ideal {
        Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [0, 3, 0, 0]])
    }

    #[test]
    fn normal_forms() {
        let i = b3();
        let ord = MonomialOrder::DegRevLex;
        assert!(normal_form(&poly4(&[(1, [2, 1, 0, 0])]), &i, &ord).is_zero());
        let t3 = poly4(&[(1, [0, 0, 0, 3])]);
        assert_eq!(normal_form(&t3, &i, &ord), t3);
        let f = poly4(&[(1, [0, 3, 0, 0]), (1, [0, 0, 1, 2])]);
        assert_eq!(normal_form(&f, &i, &ord), poly4(&[(1, [0, 0, 1, 2])]));
    }

    #[test]
    fn basic_quotients() {
        let i = Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0]]);
        let x = poly4(&[(1, [1, 0, 0, 0])]);
        assert_eq!(quotient(&i, &x).unwrap(), Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0]]));
        let t = poly4(&[(1, [0, 0, 0, 1])]);
        assert_eq!(quotient(&b3(), &t).unwrap(), b3());
        assert!(quotient(&b3(), &Polynomial::zero(4)).is_err());
    }

    #[test]
    fn intersection_examples() {
        let x = Ideal::monomial4(&[[1, 0, 0, 0]]);
        let y = Ideal::monomial4(&[[0, 1, 0, 0]]);
        assert_eq!(intersect(&x, &y), Ideal::monomial4(&[[1, 1, 0, 0]]));
        // non-monomial route
        let xy = Ideal::new(4, vec![poly4(&[(1, [1, 0, 0, 0]), (1, [0, 1, 0, 0])])]);
        let z = Ideal::monomial4(&[[0, 0, 1, 0]]);
        let cap = intersect(&xy, &z);
        assert_eq!(cap, Ideal::new(4, vec![poly4(&[(1, [1, 0, 1, 0]), (1, [0, 1, 1, 0])])]));
    }

    fn poly5(terms: &[(i64, [u32; 5])]) -> Polynomial {
        Polynomial::from_terms(5, terms.iter().map(|(c, e)| (Monomial::from_exps(e), scalar::int(*c))).collect())
    }

    #[test]
    fn graded_saturation_matches_elimination() {
        let a = poly5(&[(1, [0, 0, 0, 0, 1])]);
        let torus = Ideal::new(
            5,
            vec![
                poly5(&[(1, [2, 0, 0, 0, 4]), (-1, [0, 1, 1, 0, 1])]),
                poly5(&[(1, [1, 0, 0, 1, 2]), (1, [0, 0, 2, 0, 2])]),
            ],
        );
        let pencil = Ideal::new(
            5,
            vec![
                poly5(&[(1, [1, 1, 0, 0, 0]), (1, [0, 0, 0, 2, 1])]),
                poly5(&[(1, [1, 0, 1, 0, 0]), (-1, [0, 2, 0, 0, 1])]),
            ],
        );
        for i in [&torus, &pencil] {
            let w = positive_grading(i, 4).expect("quasi-homogeneous");
            assert!(w.iter().all(|&c| c > 0));
            let graded = saturate(i, &a).unwrap();
            assert_eq!(graded, saturate_by_elimination(i, &a));
            assert_eq!(graded, saturate_by_quotients(i, &a).unwrap());
        }
        let mixed = Ideal::new(5, vec![poly5(&[(1, [1, 0, 0, 0, 1]), (1, [0, 2, 0, 0, 0])])]);
        assert_eq!(positive_grading(&mixed, 4), None);
    }

    #[test]
    fn irrelevant_saturation() {
        let i = Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 4]]);
        let s = saturate_irrelevant(&i).unwrap();
        assert!(s.contains(&poly4(&[(1, [1, 0, 0, 0])])));
        let b6 = Ideal::monomial4(&[[1, 0, 0, 0], [0, 5, 0, 0], [0, 4, 2, 0]]);
        assert_eq!(saturate_irrelevant(&b6).unwrap(), b6);
    }
}
