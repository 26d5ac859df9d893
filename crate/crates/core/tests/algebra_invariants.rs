use hilb4n_core::borel::catalog;
use hilb4n_core::gin::generic_initial_ideal;
use hilb4n_core::hilbert::{
    hilbert_function, hilbert_polynomial, hilbert_values, macaulay_min_growth, macaulay_upper_bound, regularity,
};
use hilb4n_core::ideal::{saturate_irrelevant, Ideal};
use hilb4n_core::linalg::rank;
use hilb4n_core::monomial::count_of_degree;
use hilb4n_core::scalar::{frac, int};
use hilb4n_core::syzygy::{evaluate, syzygy_generators};
use hilb4n_core::{LinearChange, Monomial, MonomialOrder, Polynomial, Scalar};
use num_traits::Zero;
use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    let monos = Monomial::all_of_degree(4, d);
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| (*monos.choose(rng).unwrap(), int(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 })))
        .collect();
    Polynomial::from_terms(4, terms)
}

fn random_ideal(seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(2..=3);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_form(&mut rng, d)
        }).filter(|f| !f.is_zero()).collect();
    Ideal::new(4, gens)
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::DegRevLex,
        MonomialOrder::Lex,
        MonomialOrder::Weight { weights: vec![1, 2, 3, 4], tiebreak: Box::new(MonomialOrder::DegRevLex) },
    ]
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading(ord).unwrap();
    let (mg, cg) = g.leading(ord).unwrap();
    let l = mf.lcm(mg);
    &f.mul_term(&cf.recip(), &l.div(mf).unwrap()) - &g.mul_term(&cg.recip(), &l.div(mg).unwrap())
}

fn scalar_pair() -> impl proptest::strategy::Strategy<Value = Scalar> {
    use proptest::strategy::Strategy;
    (-50i64..50, 1i64..20).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar_pair(), b in scalar_pair(), c in scalar_pair()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), int(1));
        }
        // canonical representation: equal values have equal parts
        let scaled = Scalar::new(a.numer() * 7, a.denom() * 7);
        prop_assert_eq!(scaled.numer(), a.numer());
        prop_assert_eq!(scaled.denom(), a.denom());
    }

    #[test]
    fn change_round_trip(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = LinearChange::random(&mut rng, 4, 3);
        let p = random_form(&mut rng, 3);
        let back = g.inverse().apply(&g.apply(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_invariants(seed in 0u64..10_000) {
        let i = random_ideal(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        for ord in orders() {
            let gb = i.groebner_basis(&ord);
            let mut gens = i.gens().to_vec();
            gens.shuffle(&mut rng);
            prop_assert_eq!(&*Ideal::new(4, gens).groebner_basis(&ord), &*gb);
            for (a, f) in gb.iter().enumerate() {
                for g in &gb[a + 1..] {
                    prop_assert!(i.normal_form(&s_polynomial(f, g, &ord), &ord).is_zero());
                }
            }
            let init = i.initial_ideal(&ord);
            for n in 0..=10 {
                prop_assert_eq!(hilbert_function(&init, n).unwrap(), hilbert_function(&i, n).unwrap());
            }
        }
        let gens = i.minimal_generators();
        let syz = syzygy_generators(&Ideal::new(4, gens.clone()), &MonomialOrder::DegRevLex).unwrap();
        for s in &syz {
            prop_assert!(evaluate(s, &gens).unwrap().is_zero());
        }
        let sat = saturate_irrelevant(&i).unwrap();
        prop_assert!(saturate_irrelevant(&sat).unwrap().equal(&sat));
        prop_assert!(sat.contains_ideal(&i));
    }

    #[test]
    fn quotient_growth_obeys_macaulay(seed in 0u64..10_000) {
        let i = random_ideal(seed);
        let h: Vec<u64> = hilbert_values(&i, 9)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(n, v)| count_of_degree(4, n as u32) - v)
            .collect();
        for d in 1..=8 {
            prop_assert!(h[d + 1] <= macaulay_upper_bound(h[d], d as u32), "degree {}", d);
        }
    }

    #[test]
    fn polynomial_agrees_past_regularity(seed in 0u64..10_000) {
        let i = random_ideal(seed);
        let r = regularity(&i).unwrap() as i64;
        let p = hilbert_polynomial(&i).unwrap();
        for n in r..=r + 4 {
            prop_assert_eq!(p.eval(n), int(hilbert_function(&i, n).unwrap() as i64));
        }
    }

    #[test]
    fn gin_preserves_hilbert_function(seed in 0u64..10_000) {
        let i = random_ideal(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = generic_initial_ideal(&i, &mut rng).unwrap().gin;
        prop_assert_eq!(hilbert_values(&g, 8).unwrap(), hilbert_values(&i, 8).unwrap());
        let again = generic_initial_ideal(&g, &mut rng).unwrap().gin;
        prop_assert!(again.equal(&g));
    }
}

#[test]
fn gin_regularity_matches_the_monomial_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for e in catalog() {
        assert_eq!(regularity(&e.ideal).unwrap(), e.regularity);
        let moved = e.ideal.apply_change(&LinearChange::random(&mut rng, 4, 3)).unwrap();
        let g = generic_initial_ideal(&moved, &mut rng).unwrap().gin;
        let top = g.monomial_generators().unwrap().iter().map(|m| m.degree()).max().unwrap();
        assert_eq!(top, e.regularity, "{}", e.name);
        assert!(g.equal(&e.ideal));
    }
}

fn growth(space: &[Vec<Scalar>], basis: &[Monomial], r: usize, d: u32) -> u64 {
    let up = Monomial::all_of_degree(r, d + 1);
    let mut rows = Vec::new();
    for v in space {
        for x in 0..r {
            let mut row = vec![Scalar::zero(); up.len()];
            for (c, m) in v.iter().zip(basis) {
                if !c.is_zero() {
                    let k = up.iter().position(|u| *u == m.mul(&Monomial::var(x, r))).unwrap();
                    row[k] += c;
                }
            }
            rows.push(row);
        }
    }
    rank(&rows, up.len()) as u64
}

fn subsets(n: usize, a: usize) -> Vec<Vec<usize>> {
    if a == 0 {
        return vec![vec![]];
    }
    if n < a {
        return vec![];
    }
    let mut out = subsets(n - 1, a);
    for mut s in subsets(n - 1, a - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

#[test]
fn lex_segments_minimise_growth() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for r in 1..=3usize {
        for d in 0..=2u32 {
            let basis = Monomial::all_of_degree(r, d);
            let mut last = 0;
            for a in 0..=basis.len().min(4) {
                let lex = macaulay_min_growth(a as u64, d, r).unwrap();
                assert!(lex >= last);
                last = lex;
                let unit = |k: usize| -> Vec<Scalar> { (0..basis.len()).map(|j| int((j == k) as i64)).collect() };
                let monomial_min = subsets(basis.len(), a)
                    .iter()
                    .map(|s| growth(&s.iter().map(|&k| unit(k)).collect::<Vec<_>>(), &basis, r, d))
                    .min()
                    .unwrap();
                assert_eq!(monomial_min, lex, "a={a} d={d} r={r}");
                for _ in 0..200 {
                    let space: Vec<Vec<Scalar>> =
                        (0..a).map(|_| (0..basis.len()).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
                    if rank(&space, basis.len()) == a {
                        assert!(growth(&space, &basis, r, d) >= lex);
                    }
                }
            }
        }
    }
}
