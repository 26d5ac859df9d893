//! Strongly stable (Borel-fixed) monomial ideals: predicates, closure,
//! the catalog of saturated Borel ideals with Hilbert polynomial `4n`, and an
//! exhaustive enumerator for curves and points.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hilbert::{self, HilbertPolynomial};
use crate::ideal::{minimize_monomials, sort_monomials_desc, Ideal};
use crate::monomial::{count_of_degree, Monomial};
use crate::scalar;

#[derive(Clone, Debug)]
pub struct BorelCatalogEntry {
    pub name: &'static str,
    pub ideal: Ideal,
    /// `dim I_n` for `n = 0..=7`.
    pub phi: [u64; 8],
    pub regularity: u32,
}

/// The four Borel ideals `B3..B6` in `k[x,y,z,t]`.
pub fn catalog() -> Vec<BorelCatalogEntry> {
    vec![
        BorelCatalogEntry {
            name: "B3",
            ideal: Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [0, 3, 0, 0]]),
            phi: [0, 0, 2, 8, 19, 36, 60, 92],
            regularity: 3,
        },
        BorelCatalogEntry {
            name: "B4",
            ideal: Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 2, 0], [0, 4, 0, 0]]),
            phi: [0, 0, 2, 8, 19, 36, 60, 92],
            regularity: 4,
        },
        BorelCatalogEntry {
            name: "B5",
            ideal: Ideal::monomial4(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [0, 5, 0, 0], [0, 4, 1, 0]]),
            phi: [0, 0, 3, 9, 19, 36, 60, 92],
            regularity: 5,
        },
        BorelCatalogEntry {
            name: "B6",
            ideal: Ideal::monomial4(&[[1, 0, 0, 0], [0, 5, 0, 0], [0, 4, 2, 0]]),
            phi: [0, 1, 4, 10, 20, 36, 60, 92],
            regularity: 6,
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<BorelCatalogEntry> {
    catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

fn in_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// `m · x_i / x_j`, if `x_j | m`.
fn swap(m: &Monomial, i: usize, j: usize) -> Option<Monomial> {
    if m.exp(j) == 0 {
        return None;
    }
    Some(m.with_exp(j, m.exp(j) - 1).with_exp(i, m.exp(i) + 1))
}

/// Strong stability of the ideal generated by `gens`.
pub fn is_strongly_stable_monomials(gens: &[Monomial]) -> bool {
    gens.iter().all(|m| {
        (0..m.nvars()).all(|j| (0..j).all(|i| swap(m, i, j).is_none_or(|s| in_ideal(&s, gens))))
    })
}

pub fn is_strongly_stable(i: &Ideal) -> Result<bool> {
    let gens = i
        .monomial_generators()
        .ok_or_else(|| Error::InvalidArgument("strong stability needs a monomial ideal".into()))?;
    Ok(is_strongly_stable_monomials(&gens))
}

/// Smallest strongly stable ideal containing the given monomials.
pub fn borel_closure(ms: &[Monomial]) -> Result<Ideal> {
    if ms.is_empty() {
        return Err(Error::InvalidArgument("Borel closure of an empty list".into()));
    }
    let mut seen: HashSet<Monomial> = ms.iter().copied().collect();
    let mut stack: Vec<Monomial> = ms.to_vec();
    while let Some(m) = stack.pop() {
        for j in 0..m.nvars() {
            for i in 0..j {
                if let Some(s) = swap(&m, i, j) {
                    if seen.insert(s) {
                        stack.push(s);
                    }
                }
            }
        }
    }
    Ok(Ideal::from_monomials(&minimize_monomials(seen.into_iter().collect())))
}

fn check_supported(p: &HilbertPolynomial) -> Result<usize> {
    let r = hilbert::gotzmann_number(p)?;
    if p.degree().is_some_and(|d| d > 1) {
        return Err(Error::InvalidHilbertPolynomial(format!("{p}: only points and curves are supported")));
    }
    Ok(r)
}

/// All saturated strongly stable ideals of `k[x,y,z,t]` whose quotient has
/// Hilbert polynomial `p`, in canonical form and sorted.
pub fn enumerate_borel_ideals(p: &HilbertPolynomial) -> Result<Vec<Ideal>> {
    enumerate_inner(p, None::<&mut rand::rngs::ThreadRng>)
}

/// Same search with branch order randomized; the result must not change.
pub fn enumerate_borel_ideals_shuffled<R: Rng>(p: &HilbertPolynomial, rng: &mut R) -> Result<Vec<Ideal>> {
    enumerate_inner(p, Some(rng))
}

struct Search<'a, R> {
    /// Eventual value of the first difference of `p` (0 for points).
    e: i64,
    /// `p(r)` minus the degree-0 contribution.
    budget: i64,
    r: u32,
    rng: Option<&'a mut R>,
    found: BTreeSet<Vec<[u16; 4]>>,
}

fn lower_bound(e: i64, j: u32) -> i64 {
    e.min(j as i64 + 1)
}

impl<R: Rng> Search<'_, R> {
    /// `layers[d-1]` holds `J_d ⊂ k[x,y,z]_d` as a set.
    fn descend(&mut self, layers: &mut Vec<HashSet<Monomial>>, used: i64) {
        let d = layers.len() as u32 + 1;
        if d > self.r {
            if used == self.budget {
                self.record(layers);
            }
            return;
        }
        let future: i64 = (d + 1..=self.r).map(|j| lower_bound(self.e, j)).sum();
        let monos = Monomial::all_of_degree(3, d);
        let base: HashSet<Monomial> = match layers.last() {
            None => HashSet::new(),
            Some(prev) => prev.iter().flat_map(|m| (0..3).map(move |v| m.mul(&Monomial::var(v, 3)))).collect(),
        };
        let total = monos.len() as i64;
        let max_h = (self.budget - used - future).min(total - base.len() as i64);
        if max_h < 0 {
            return;
        }
        let mut choices = Vec::new();
        let mut current = HashSet::new();
        choose_layer(&monos, 0, &base, &mut current, &mut choices, total - max_h);
        if let Some(rng) = self.rng.as_deref_mut() {
            choices.shuffle(rng);
        }
        for layer in choices {
            let h = total - layer.len() as i64;
            if h < self.e && h <= d as i64 {
                continue;
            }
            if used + h + future > self.budget {
                continue;
            }
            layers.push(layer);
            self.descend(layers, used + h);
            layers.pop();
        }
    }

    fn record(&mut self, layers: &[HashSet<Monomial>]) {
        let all: Vec<Monomial> = layers.iter().flatten().copied().collect();
        let gens = minimize_monomials(all);
        let mut key: Vec<[u16; 4]> = gens
            .iter()
            .map(|m| [m.exp(0) as u16, m.exp(1) as u16, m.exp(2) as u16, 0])
            .collect();
        key.sort();
        self.found.insert(key);
    }
}

/// Strongly stable subsets of `monos` (lex-descending) containing `base` with
/// at least `min_size` elements.
fn choose_layer(
    monos: &[Monomial],
    k: usize,
    base: &HashSet<Monomial>,
    current: &mut HashSet<Monomial>,
    out: &mut Vec<HashSet<Monomial>>,
    min_size: i64,
) {
    if ((current.len() + monos.len() - k) as i64) < min_size {
        return;
    }
    if k == monos.len() {
        out.push(current.clone());
        return;
    }
    let m = monos[k];
    // every upward swap is lex-larger, hence already decided
    let can_take = (0..3).all(|j| (0..j).all(|i| swap(&m, i, j).is_none_or(|s| current.contains(&s))));
    if can_take {
        current.insert(m);
        choose_layer(monos, k + 1, base, current, out, min_size);
        current.remove(&m);
    }
    if !base.contains(&m) {
        choose_layer(monos, k + 1, base, current, out, min_size);
    }
}

fn enumerate_inner<R: Rng>(p: &HilbertPolynomial, rng: Option<&mut R>) -> Result<Vec<Ideal>> {
    let r = check_supported(p)? as u32;
    if p.is_zero() {
        return Ok(vec![Ideal::unit(4)]);
    }
    let at_r = scalar::to_i64(&p.eval(r as i64)).ok_or_else(|| Error::InvalidHilbertPolynomial(p.to_string()))?;
    let e = if p.degree() == Some(1) { scalar::to_i64(&p.leading_coefficient()).unwrap_or(-1) } else { 0 };
    if e < 0 {
        return Err(Error::InvalidHilbertPolynomial(p.to_string()));
    }
    let mut search = Search { e, budget: at_r - 1, r, rng, found: BTreeSet::new() };
    search.descend(&mut Vec::new(), 0);
    let mut out = Vec::new();
    for key in search.found {
        let gens: Vec<Monomial> = key.iter().map(|e| Monomial::from_exps(&[e[0] as u32, e[1] as u32, e[2] as u32, 0])).collect();
        let ideal = canonical(gens);
        if hilbert::quotient_hilbert_polynomial(&ideal)? == *p {
            out.push(ideal);
        }
    }
    out.sort_by_key(sort_key);
    Ok(out)
}

fn canonical(gens: Vec<Monomial>) -> Ideal {
    let mut g = minimize_monomials(gens);
    sort_monomials_desc(&mut g);
    Ideal::from_monomials(&g)
}

fn sort_key(i: &Ideal) -> (u32, Vec<Vec<u16>>) {
    let g = i.monomial_generators().unwrap_or_default();
    (g.iter().map(|m| m.degree()).max().unwrap_or(0), g.iter().map(|m| m.exps().to_vec()).collect())
}

/// The saturated lexicographic ideal with quotient Hilbert polynomial `p`.
pub fn lex_ideal(p: &HilbertPolynomial) -> Result<Ideal> {
    let r = check_supported(p)? as u32;
    if p.is_zero() {
        return Ok(Ideal::unit(4));
    }
    let at_r = scalar::to_i64(&p.eval(r as i64)).ok_or_else(|| Error::InvalidHilbertPolynomial(p.to_string()))?;
    let size = count_of_degree(4, r) as i64 - at_r;
    if size < 0 {
        return Err(Error::InvalidHilbertPolynomial(p.to_string()));
    }
    let segment: Vec<Monomial> = Monomial::all_of_degree(4, r).into_iter().take(size as usize).collect();
    let ideal = canonical(segment.iter().map(|m| m.with_exp(3, 0)).collect());
    if hilbert::quotient_hilbert_polynomial(&ideal)? != *p {
        return Err(Error::InvalidHilbertPolynomial(p.to_string()));
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::saturate_irrelevant;
    use proptest::prelude::{prop_assert, proptest, ProptestConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn four_n() -> HilbertPolynomial {
        HilbertPolynomial::from_ints(&[0, 4])
    }

    #[test]
    fn stability_examples() {
        assert!(is_strongly_stable(&catalog()[1].ideal).unwrap());
        assert!(!is_strongly_stable(&Ideal::monomial4(&[[2, 0, 0, 0], [0, 2, 0, 0]])).unwrap());
        assert!(is_strongly_stable(&Ideal::monomial4(&[[1, 0, 0, 0]])).unwrap());
        let nonmono = Ideal::new(4, vec![crate::poly::poly4(&[(1, [1, 0, 0, 0]), (1, [0, 1, 0, 0])])]);
        assert!(is_strongly_stable(&nonmono).is_err());
    }

    #[test]
    fn closure_examples() {
        let y3 = Monomial::from_exps(&[0, 3, 0, 0]);
        let cube = Ideal::monomial4(&[[3, 0, 0, 0], [2, 1, 0, 0], [1, 2, 0, 0], [0, 3, 0, 0]]);
        assert_eq!(borel_closure(&[y3]).unwrap(), cube);
        let x = Monomial::from_exps(&[1, 0, 0, 0]);
        assert_eq!(borel_closure(&[x]).unwrap(), Ideal::monomial4(&[[1, 0, 0, 0]]));
        assert!(borel_closure(&[]).is_err());
    }

    #[test]
    fn closure_is_minimal_among_random_stable_ideals() {
        let m = Monomial::from_exps(&[0, 4, 2, 0]);
        let cl = borel_closure(&[m]).unwrap();
        assert!(is_strongly_stable(&cl).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let all6 = Monomial::all_of_degree(4, 6);
        for _ in 0..20 {
            let mut extra: Vec<Monomial> = (0..3).map(|_| all6[rng.gen_range(0..all6.len())]).collect();
            extra.push(m);
            let other = borel_closure(&extra).unwrap();
            assert!(other.contains_ideal(&cl));
        }
    }

    #[test]
    fn catalog_is_consistent() {
        for e in catalog() {
            assert!(is_strongly_stable(&e.ideal).unwrap());
            assert_eq!(saturate_irrelevant(&e.ideal).unwrap(), e.ideal);
            let hf: Vec<u64> = (0..8).map(|n| hilbert::hilbert_function(&e.ideal, n).unwrap()).collect();
            assert_eq!(hf, e.phi.to_vec(), "{}", e.name);
        }
    }

    #[test]
    fn enumerates_the_four_curves() {
        let found = enumerate_borel_ideals(&four_n()).unwrap();
        let expected: Vec<Ideal> = catalog().into_iter().map(|e| e.ideal).collect();
        assert_eq!(found, expected);
        for i in &found {
            assert!(is_strongly_stable(i).unwrap());
            assert_eq!(&saturate_irrelevant(i).unwrap(), i);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        assert_eq!(enumerate_borel_ideals_shuffled(&four_n(), &mut rng).unwrap(), found);
    }

    #[test]
    fn points_and_lines() {
        let pt = Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        let line = Ideal::monomial4(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        assert_eq!(enumerate_borel_ideals(&HilbertPolynomial::from_ints(&[1])).unwrap(), vec![pt.clone()]);
        assert_eq!(enumerate_borel_ideals(&HilbertPolynomial::from_ints(&[1, 1])).unwrap(), vec![line.clone()]);
        assert_eq!(lex_ideal(&HilbertPolynomial::from_ints(&[1])).unwrap(), pt);
        assert_eq!(lex_ideal(&HilbertPolynomial::from_ints(&[1, 1])).unwrap(), line);
        assert!(enumerate_borel_ideals(&HilbertPolynomial::from_ints(&[1, 1, 1])).is_err());
    }

    #[test]
    fn lex_point_is_b6() {
        let lex = lex_ideal(&four_n()).unwrap();
        assert_eq!(lex, catalog()[3].ideal);
        assert!(enumerate_borel_ideals(&four_n()).unwrap().contains(&lex));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn closure_is_stable_and_contains_inputs(exps in proptest::collection::vec(proptest::array::uniform4(0u32..4), 1..4)) {
            let ms: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exps(e)).collect();
            let cl = borel_closure(&ms).unwrap();
            prop_assert!(is_strongly_stable(&cl).unwrap());
            for m in &ms {
                prop_assert!(cl.contains(&crate::poly::Polynomial::monomial(*m)));
            }
        }
    }
}
