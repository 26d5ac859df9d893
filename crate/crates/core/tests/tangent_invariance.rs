use hilb4n_core::borel::catalog;
use hilb4n_core::strata::{sample_stratum, Stratum};
use hilb4n_core::syzygy::{syzygy_generators, taylor_syzygies};
use hilb4n_core::tangent::{hom_dimension, tangent_dimension};
use hilb4n_core::{Ideal, LinearChange, MonomialOrder};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Small coefficient bounds keep the non-monomial kernels cheap.
fn moved_dimensions(i: &Ideal, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..5)
        .map(|_| {
            let g = LinearChange::random(rng, 4, 1);
            tangent_dimension(&i.apply_change(&g).unwrap()).unwrap().dimension
        })
        .collect()
}

#[test]
fn complete_intersections_are_smooth_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10 {
        let i = sample_stratum(Stratum::V, &mut rng).unwrap();
        assert_eq!(tangent_dimension(&i).unwrap().dimension, 16);
    }
}

#[test]
fn r3_samples_have_at_least_sixteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let i = sample_stratum(Stratum::R3Prime, &mut rng).unwrap();
        assert!(tangent_dimension(&i).unwrap().dimension >= 16);
    }
}

#[test]
fn linear_changes_preserve_the_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let ci = sample_stratum(Stratum::V, &mut rng).unwrap();
    let mut samples = vec![ci];
    samples.extend(catalog()[..2].iter().map(|e| e.ideal.clone()));
    for i in &samples {
        let base = tangent_dimension(i).unwrap().dimension;
        for d in moved_dimensions(i, &mut rng) {
            assert_eq!(d, base);
        }
    }
}

#[test]
fn generator_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let ci = sample_stratum(Stratum::V, &mut rng).unwrap();
    for i in catalog().iter().map(|e| e.ideal.clone()).chain([ci]) {
        let base = tangent_dimension(&i).unwrap().dimension;
        let mut gens = i.minimal_generators();
        let hom = {
            let syz = syzygy_generators(&Ideal::new(4, gens.clone()), &MonomialOrder::DegRevLex).unwrap();
            hom_dimension(&i, &gens, &syz).unwrap()
        };
        for _ in 0..3 {
            gens.shuffle(&mut rng);
            let j = Ideal::new(4, gens.clone());
            assert_eq!(tangent_dimension(&j).unwrap().dimension, base);
            let syz = if j.is_monomial() { taylor_syzygies(&gens) } else { syzygy_generators(&j, &MonomialOrder::DegRevLex).unwrap() };
            assert_eq!(hom_dimension(&j, &gens, &syz).unwrap(), hom);
        }
    }
}
