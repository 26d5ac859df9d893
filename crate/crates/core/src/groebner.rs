//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Internally polynomials carry one sort key per term. All supported orders
//! have keys that are additive in the exponents, so shifting a polynomial by
//! a monomial shifts its keys by that monomial's key and never reorders it.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::order::{Key, MonomialOrder, KEY_LEN};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub(crate) struct Term {
    key: Key,
    mono: Monomial,
    coef: Scalar,
}

#[derive(Clone, Debug)]
pub(crate) struct GPoly {
    terms: Vec<Term>,
    sugar: u32,
}

#[inline]
fn add_keys(a: &Key, b: &Key) -> Key {
    let mut r = [0i32; KEY_LEN];
    for i in 0..KEY_LEN {
        r[i] = a[i] + b[i];
    }
    r
}

impl GPoly {
    pub(crate) fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> =
            p.terms().iter().map(|(m, c)| Term { key: ord.key(m), mono: *m, coef: c.clone() }).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.key));
        GPoly { sugar: p.total_degree().unwrap_or(0), terms }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|t| (t.mono, t.coef.clone())).collect())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coef.is_one() {
                let inv = t.coef.recip();
                for t in self.terms.iter_mut() {
                    t.coef *= &inv;
                }
            }
        }
    }

    /// `self - c * m * g` where `mkey` is the key of `m`.
    fn sub_mul(&mut self, c: &Scalar, m: &Monomial, mkey: &Key, g: &GPoly) {
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + g.terms.len());
        let mut a = old.into_iter().peekable();
        let mut b = g.terms.iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => x.key.cmp(&add_keys(&y.key, mkey)),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => {
                    let y = b.next().unwrap();
                    out.push(Term { key: add_keys(&y.key, mkey), mono: y.mono.mul(m), coef: -(c * &y.coef) });
                }
                Ordering::Equal => {
                    let mut x = a.next().unwrap();
                    let y = b.next().unwrap();
                    x.coef -= c * &y.coef;
                    if !x.coef.is_zero() {
                        out.push(x);
                    }
                }
            }
        }
        self.terms = out;
        self.sugar = self.sugar.max(g.sugar + m.degree());
    }
}

fn find_divisor<'a>(m: &Monomial, basis: &'a [GPoly], active: &[bool]) -> Option<&'a GPoly> {
    basis.iter().zip(active).find(|(g, &a)| a && g.lm().divides(m)).map(|(g, _)| g)
}

/// Full reduction of `f` by monic `basis` (only `active` entries are used).
fn reduce(mut f: GPoly, basis: &[GPoly], active: &[bool], ord: &MonomialOrder) -> GPoly {
    let mut done: Vec<Term> = Vec::new();
    while let Some(lead) = f.terms.first() {
        let lm = lead.mono;
        if let Some(g) = find_divisor(&lm, basis, active) {
            let m = lm.div(g.lm()).unwrap();
            let c = lead.coef.clone();
            let mkey = ord.key(&m);
            f.sub_mul(&c, &m, &mkey, g);
        } else {
            done.push(f.terms.remove(0));
        }
    }
    f.terms = done;
    f
}

/// Reduces only until the leading monomial is irreducible.
fn top_reduce(mut f: GPoly, basis: &[GPoly], active: &[bool], ord: &MonomialOrder) -> GPoly {
    while let Some(lead) = f.terms.first() {
        let lm = lead.mono;
        match find_divisor(&lm, basis, active) {
            Some(g) => {
                let m = lm.div(g.lm()).unwrap();
                let c = lead.coef.clone();
                let mkey = ord.key(&m);
                f.sub_mul(&c, &m, &mkey, g);
            }
            None => break,
        }
    }
    f
}

fn spoly(f: &GPoly, g: &GPoly, ord: &MonomialOrder) -> GPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.div(f.lm()).unwrap();
    let mg = l.div(g.lm()).unwrap();
    let kf = ord.key(&mf);
    let kg = ord.key(&mg);
    let mut s = GPoly {
        terms: f.terms[1..]
            .iter()
            .map(|t| Term { key: add_keys(&t.key, &kf), mono: t.mono.mul(&mf), coef: t.coef.clone() })
            .collect(),
        sugar: f.sugar + mf.degree(),
    };
    let g_tail = GPoly { terms: g.terms[1..].to_vec(), sugar: g.sugar };
    s.sub_mul(&Scalar::one(), &mg, &kg, &g_tail);
    s
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy, Debug)]
struct Pair {
    sugar: u32,
    lcm_deg: u32,
    i: usize,
    j: usize,
}

fn insert(h: GPoly, basis: &mut Vec<GPoly>, active: &mut Vec<bool>, pairs: &mut BinaryHeap<Reverse<Pair>>) {
    let hl = *h.lm();
    let k = basis.len();
    // Gebauer–Möller: new pairs (i, k)
    let cand: Vec<(usize, Monomial)> =
        (0..k).filter(|&i| active[i]).map(|i| (i, basis[i].lm().lcm(&hl))).collect();
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        let (ia, la) = cand[a];
        if basis[ia].lm().is_coprime(&hl) {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lb = cand[b].1;
            if lb.divides(&la) && (lb != la || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // drop product-criterion pairs after chain filtering
    let mut new_pairs = Vec::new();
    for (idx, &(i, l)) in cand.iter().enumerate() {
        if keep[idx] && !basis[i].lm().is_coprime(&hl) {
            new_pairs.push((i, l));
        }
    }
    // old pairs made redundant by h
    let old: Vec<Pair> = pairs.drain().map(|Reverse(p)| p).collect();
    for p in old {
        let l = basis[p.i].lm().lcm(basis[p.j].lm());
        if hl.divides(&l) && basis[p.i].lm().lcm(&hl) != l && basis[p.j].lm().lcm(&hl) != l {
            continue;
        }
        pairs.push(Reverse(p));
    }
    basis.push(h);
    active.push(true);
    for (i, l) in new_pairs {
        let si = basis[i].sugar + l.degree() - basis[i].lm().degree();
        let sk = basis[k].sugar + l.degree() - basis[k].lm().degree();
        pairs.push(Reverse(Pair { sugar: si.max(sk), lcm_deg: l.degree(), i, j: k }));
    }
    for i in 0..k {
        if active[i] && hl.divides(basis[i].lm()) {
            active[i] = false;
        }
    }
}

/// Computes a reduced Gröbner basis. With `truncate = Some(d)` all S-pairs of
/// degree above `d` are skipped, which yields a basis that is correct up to
/// degree `d` for homogeneous input.
pub(crate) fn buchberger(gens: &[Polynomial], ord: &MonomialOrder, truncate: Option<u32>) -> Vec<Polynomial> {
    let nvars = gens.first().map(|p| p.nvars()).unwrap_or(0);
    let mut basis: Vec<GPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();

    let mut input: Vec<GPoly> = gens.iter().filter(|p| !p.is_zero()).map(|p| GPoly::from_poly(p, ord)).collect();
    input.sort_by_key(|g| g.sugar);

    for g in input {
        let mut h = top_reduce(g, &basis, &active, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(h, &mut basis, &mut active, &mut pairs);
    }

    while let Some(Reverse(p)) = pairs.pop() {
        if let Some(d) = truncate {
            if p.lcm_deg > d {
                continue;
            }
        }
        let s = spoly(&basis[p.i], &basis[p.j], ord);
        let mut h = top_reduce(s, &basis, &active, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(h, &mut basis, &mut active, &mut pairs);
    }

    interreduce(basis, active, ord, nvars)
}

fn interreduce(basis: Vec<GPoly>, active: Vec<bool>, ord: &MonomialOrder, nvars: usize) -> Vec<Polynomial> {
    let mut kept: Vec<GPoly> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    // minimal: no lm divisible by another
    kept.sort_by(|a, b| a.terms[0].key.cmp(&b.terms[0].key));
    let mut minimal: Vec<GPoly> = Vec::new();
    for g in kept {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let n = minimal.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut act = vec![true; n];
        act[i] = false;
        let g = minimal[i].clone();
        let lead = g.terms[0].clone();
        let tail = GPoly { terms: g.terms[1..].to_vec(), sugar: g.sugar };
        let mut r = reduce(tail, &minimal, &act, ord);
        r.terms.insert(0, lead);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| b.terms[0].key.cmp(&a.terms[0].key));
    out.iter().map(|g| g.to_poly(nvars)).collect()
}

/// Normal form of `f` with respect to a Gröbner basis.
pub(crate) fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let gb: Vec<GPoly> = basis.iter().map(|p| {
        let mut g = GPoly::from_poly(p, ord);
        g.make_monic();
        g
    }).collect();
    let act = vec![true; gb.len()];
    reduce(GPoly::from_poly(f, ord), &gb, &act, ord).to_poly(f.nvars())
}

/// Reusable reducer for many normal forms against one basis.
pub struct Reducer {
    gb: Vec<GPoly>,
    active: Vec<bool>,
    ord: MonomialOrder,
}

impl Reducer {
    pub fn new(basis: &[Polynomial], ord: &MonomialOrder) -> Self {
        let gb: Vec<GPoly> = basis
            .iter()
            .map(|p| {
                let mut g = GPoly::from_poly(p, ord);
                g.make_monic();
                g
            })
            .collect();
        let active = vec![true; gb.len()];
        Reducer { gb, active, ord: ord.clone() }
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(GPoly::from_poly(f, &self.ord), &self.gb, &self.active, &self.ord).to_poly(f.nvars())
    }
}

/// Multivariate division with quotients: `f = Σ q_i d_i + r`, no term of `r`
/// divisible by a leading monomial of the divisors.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> (Vec<Polynomial>, Polynomial) {
    let n = f.nvars();
    let mut quots: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); divisors.len()];
    let leads: Vec<(Monomial, Scalar)> =
        divisors.iter().map(|d| d.leading(ord).map(|(m, c)| (*m, c.clone())).expect("nonzero divisor")).collect();
    let mut rem = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading(ord).map(|(m, c)| (*m, c.clone())) {
        match leads.iter().position(|(dm, _)| dm.divides(&lm)) {
            Some(i) => {
                let m = lm.div(&leads[i].0).unwrap();
                let c = &lc / &leads[i].1;
                p = p.add_scaled(&-c.clone(), &m, &divisors[i]);
                quots[i].push((m, c));
            }
            None => {
                rem.push((lm, lc.clone()));
                p = p.add_scaled(&-lc, &Monomial::one(n), &Polynomial::monomial(lm));
            }
        }
    }
    (
        quots.into_iter().map(|q| Polynomial::from_terms(n, q)).collect(),
        Polynomial::from_terms(n, rem),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly4;

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gens = vec![
            poly4(&[(1, [2, 0, 0, 0])]),
            poly4(&[(1, [1, 1, 0, 0])]),
            poly4(&[(1, [1, 0, 2, 0])]),
            poly4(&[(1, [0, 4, 0, 0])]),
        ];
        let gb = buchberger(&gens, &MonomialOrder::DegRevLex, None);
        assert_eq!(gb.len(), 4);
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn linear_forms() {
        let x = poly4(&[(1, [1, 0, 0, 0])]);
        let xy = poly4(&[(1, [1, 0, 0, 0]), (1, [0, 1, 0, 0])]);
        let gb = buchberger(&[x.clone(), xy], &MonomialOrder::DegRevLex, None);
        assert_eq!(gb, vec![x, poly4(&[(1, [0, 1, 0, 0])])]);
    }

    #[test]
    fn division_identity() {
        let f = poly4(&[(1, [0, 2, 1, 0]), (1, [0, 1, 0, 2])]);
        let ds = vec![poly4(&[(1, [0, 1, 0, 0])]), poly4(&[(1, [0, 0, 1, 0])])];
        let (q, r) = divide(&f, &ds, &MonomialOrder::DegRevLex);
        assert!(r.is_zero());
        let back = &(&q[0] * &ds[0]) + &(&q[1] * &ds[1]);
        assert_eq!(back, f);
    }
}
