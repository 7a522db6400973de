//! Field-axiom and generator-order sweeps over every prime power up to 2^12.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wspectra::field::{is_prime_power, FieldSpec};

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| is_prime_power(q)).collect()
}

#[test]
fn axioms_hold_for_all_small_prime_powers() {
    let mut rng = StdRng::seed_from_u64(3);
    for q in prime_powers_up_to(1 << 12) {
        let f = FieldSpec::new(q).unwrap_or_else(|e| panic!("q={q}: {e}"));
        assert_eq!(f.order(), q);
        assert_eq!(f.characteristic().pow(f.degree()), q);
        for _ in 0..1000 {
            let a = rng.random_range(0..q);
            let b = rng.random_range(0..q);
            let c = rng.random_range(0..q);
            assert_eq!(f.add(a, b), f.add(b, a), "q={q}");
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)), "q={q}");
            assert_eq!(f.mul(a, b), f.mul(b, a), "q={q}");
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)), "q={q}");
            assert_eq!(
                f.mul(a, f.add(b, c)),
                f.add(f.mul(a, b), f.mul(a, c)),
                "q={q}"
            );
        }
    }
}

#[test]
fn generator_order_is_maximal_for_all_small_prime_powers() {
    for q in prime_powers_up_to(1 << 12) {
        let f = FieldSpec::new(q).unwrap();
        let w = f.primitive_element();
        assert_eq!(f.pow(w, q - 1), 1, "q={q}");
        for d in 1..q - 1 {
            if (q - 1) % d == 0 {
                assert_ne!(f.pow(w, d), 1, "q={q}: order divides {d}");
            }
        }
    }
}

#[test]
fn inverses_cancel_everywhere_on_sampled_fields() {
    for q in [2u64, 3, 4, 8, 9, 16, 27, 81, 125, 243, 1024, 2401, 4096] {
        let f = FieldSpec::new(q).unwrap();
        for a in 1..q {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1, "q={q}, a={a}");
        }
    }
}
