use hilb4n_core::degeneration::{family_limit, rs_degeneration, specialize, va_degeneration, LimitPoint, RsCase};
use hilb4n_core::hilbert::{hilbert_values, quotient_hilbert_polynomial};
use hilb4n_core::strata::{classify, sample_stratum, Stratum};
use hilb4n_core::scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn r5_samples_degenerate_to_r6() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cases = Vec::new();
    for _ in 0..25 {
        let i = sample_stratum(Stratum::R5, &mut rng).unwrap();
        let chain = rs_degeneration(&i).unwrap();
        assert_eq!(classify(&chain.terminal).unwrap().stratum, Stratum::R6);
        let generic = hilbert_values(&i, 8).unwrap();
        let limit = hilbert_values(&chain.terminal, 8).unwrap();
        assert!(limit.iter().zip(&generic).all(|(a, b)| a >= b));
        cases.push(chain.case);
    }
    for c in [RsCase::First, RsCase::SecondWithTerm, RsCase::SecondWithoutTerm] {
        assert!(cases.contains(&c), "{c:?} never sampled");
    }
}

#[test]
fn r3_prime_samples_are_limits_of_complete_intersections() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..25 {
        let i = sample_stratum(Stratum::R3Prime, &mut rng).unwrap();
        let d = va_degeneration(&i).unwrap();
        assert!(d.limit.equal(&i));
        let fibre = specialize(&d.family, &scalar::int(3)).unwrap();
        assert_eq!(quotient_hilbert_polynomial(&fibre).unwrap(), quotient_hilbert_polynomial(&i).unwrap());
        assert_eq!(family_limit(&d.family, LimitPoint::Zero).unwrap(), i);
    }
}
