//! Explicit code families with many distinct weights.
//!
//! Three constructions do the heavy lifting: a binary family whose k-bit
//! messages hit every weight in {1, ..., 2^k - 1}, a two-dimensional family
//! over GF(q) with q + 1 weights (the projective maximum for k = 2), and a
//! doubling step that turns any k-dimensional code with L weights into a
//! (k+1)-dimensional code with 2L + 1.

use std::collections::BTreeSet;

use crate::code::{LinearCode, WeightSpectrum};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Dimensions above this would overflow the enumeration budget anyway.
pub const MAX_BINARY_DIMENSION: usize = 20;

/// Binary [2^k - 1, k] code whose nonzero messages realize every weight in
/// {1, ..., 2^k - 1} exactly once.
///
/// Column block j (1-based) is a single distinct column, with ones in the
/// top k - j + 1 rows, repeated 2^(j-1) times. Even k = 20 is a 20-entry
/// multiset.
pub fn binary_full_spectrum(k: usize) -> Result<LinearCode> {
    if k < 1 || k > MAX_BINARY_DIMENSION {
        return Err(Error::OutOfRange(format!(
            "binary full-spectrum dimension must be in 1..={MAX_BINARY_DIMENSION}, got {k}"
        )));
    }
    let field = FieldSpec::new(2)?;
    let columns = (1..=k).map(|block| {
        let mut col = vec![0u64; k];
        for row in col.iter_mut().take(k - block + 1) {
            *row = 1;
        }
        (col, 1u64 << (block - 1))
    });
    LinearCode::new(field, k, columns)
}

/// Two-dimensional code over GF(q) with q + 1 distinct weights at the
/// shortest length this construction allows, C(q,2) + 2q + 1.
pub fn two_dim_full(q: u64) -> Result<LinearCode> {
    two_dim_full_with(q, q, q + 1)
}

/// Generalized two-dimensional construction with explicit private-support
/// sizes. The generators u, v overlap on C(q,2) coordinates where v is
/// all-one and u takes the value w^i on exactly i + 1 of them (w a fixed
/// generator of GF(q)*); u keeps `a` private ones and v keeps `b`.
/// Requires a >= q and b > a so that the q + 1 weights stay pairwise
/// distinct.
pub fn two_dim_full_with(q: u64, a: u64, b: u64) -> Result<LinearCode> {
    let field = FieldSpec::new(q)?;
    if a < q {
        return Err(Error::PreconditionViolated(format!(
            "private support of u must satisfy a >= q (got a={a}, q={q})"
        )));
    }
    if b <= a {
        return Err(Error::PreconditionViolated(format!(
            "private supports must satisfy b > a (got a={a}, b={b})"
        )));
    }
    let w = field.primitive_element();
    let mut columns = Vec::with_capacity(q as usize + 1);
    // Overlap block: column (w^i, 1) with multiplicity i + 1; sizes sum to
    // C(q, 2).
    for i in 0..q.saturating_sub(1) {
        columns.push((vec![field.pow(w, i), 1], i + 1));
    }
    columns.push((vec![1, 0], a));
    columns.push((vec![0, 1], b));
    LinearCode::new(field, 2, columns)
}

/// The weight set of [`two_dim_full_with`], by direct reading of the
/// construction: {a + C(q,2), b + C(q,2)} and {a + b + C(q,2) - i} for
/// i = 1..q-1.
pub(crate) fn two_dim_full_spectrum(q: u64, a: u64, b: u64) -> WeightSpectrum {
    let overlap = q * (q - 1) / 2;
    let mut set = BTreeSet::new();
    set.insert(a + overlap);
    set.insert(b + overlap);
    for i in 1..q {
        set.insert(a + b + overlap - i);
    }
    WeightSpectrum::from_set(set)
}

/// One doubling step: appends a zero row-coordinate to every column and `t`
/// copies of the new unit column. The spectrum becomes
/// old ∪ {t} ∪ {t + w : w in old}, of size exactly 2|old| + 1, provided
/// t exceeds the largest old weight.
///
/// `t` defaults to max(old) + 1, the smallest admissible tail.
pub fn doubling_step(code: &LinearCode, t: Option<u64>) -> Result<LinearCode> {
    let rank = code.rank();
    if rank < code.dimension() {
        return Err(Error::RankDeficient {
            rank,
            dimension: code.dimension(),
        });
    }
    let spectrum = code.weight_spectrum()?;
    let w_max = spectrum
        .max()
        .expect("a full-rank code has a nonzero weight");
    let t = t.unwrap_or(w_max + 1);
    if t <= w_max {
        return Err(Error::PreconditionViolated(format!(
            "tail length {t} must exceed the largest weight {w_max}"
        )));
    }
    doubled_code(code, t)
}

fn doubled_code(code: &LinearCode, t: u64) -> Result<LinearCode> {
    let k = code.dimension();
    let mut columns: Vec<(Vec<u64>, u64)> = code
        .columns()
        .iter()
        .map(|(col, mult)| {
            let mut c = col.clone();
            c.push(0);
            (c, *mult)
        })
        .collect();
    let mut unit = vec![0u64; k + 1];
    unit[k] = 1;
    columns.push((unit, t));
    LinearCode::new(code.field().clone(), k + 1, columns)
}

fn doubled_spectrum(old: &WeightSpectrum, t: u64) -> WeightSpectrum {
    let mut set: BTreeSet<u64> = old.iter().collect();
    set.insert(t);
    set.extend(old.iter().map(|w| w + t));
    WeightSpectrum::from_set(set)
}

/// Applies k - 2 doubling steps (with minimal tails) to [`two_dim_full`],
/// producing a k-dimensional code with 2^(k-2) (q + 2) - 1 distinct weights.
pub fn iterated_doubling(k: usize, q: u64) -> Result<LinearCode> {
    Ok(iterated_doubling_with_spectrum(k, q)?.0)
}

/// Hard cap on the tracked spectrum size of [`iterated_doubling`]; the set
/// doubles per dimension, so unchecked requests would exhaust memory.
const MAX_TRACKED_WEIGHTS: u128 = 1 << 22;

/// Same as [`iterated_doubling`] but also returns the weight set tracked
/// through the recursion. The tracked set is exact because each step maps
/// the spectrum to old ∪ {t} ∪ (old + t) with a disjoint tail; it lets
/// callers read the weight count of codes too large to re-enumerate.
pub fn iterated_doubling_with_spectrum(k: usize, q: u64) -> Result<(LinearCode, WeightSpectrum)> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "iterated doubling needs dimension k >= 2, got {k}"
        )));
    }
    // Final count is 2^(k-2) (q + 2) - 1.
    let predicted = if k - 2 >= 100 {
        u128::MAX
    } else {
        (q as u128 + 2) << (k - 2)
    };
    if predicted > MAX_TRACKED_WEIGHTS {
        return Err(Error::OutOfRange(format!(
            "iterated doubling at k = {k}, q = {q} would track about {predicted} weights; \
             the cap is {MAX_TRACKED_WEIGHTS}"
        )));
    }
    let mut code = two_dim_full(q)?;
    let mut spectrum = two_dim_full_spectrum(q, q, q + 1);
    for _ in 2..k {
        let t = spectrum.max().expect("spectrum is nonempty") + 1;
        code = doubled_code(&code, t)?;
        spectrum = doubled_spectrum(&spectrum, t);
    }
    Ok((code, spectrum))
}

/// The ambient code F_q^k: identity columns, spectrum {1, ..., k}.
pub fn ambient_code(k: usize, q: u64) -> Result<LinearCode> {
    if k < 1 {
        return Err(Error::OutOfRange("ambient dimension must be >= 1".into()));
    }
    let field = FieldSpec::new(q)?;
    let columns = (0..k).map(|i| {
        let mut col = vec![0u64; k];
        col[i] = 1;
        (col, 1u64)
    });
    LinearCode::new(field, k, columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(code: &LinearCode) -> Vec<u64> {
        code.weight_spectrum().unwrap().weights().to_vec()
    }

    #[test]
    fn binary_full_spectrum_smallest_cases() {
        let c1 = binary_full_spectrum(1).unwrap();
        assert_eq!((c1.length(), c1.dimension()), (1, 1));
        assert_eq!(weights(&c1), vec![1]);

        let c2 = binary_full_spectrum(2).unwrap();
        assert_eq!((c2.length(), c2.dimension()), (3, 2));
        assert_eq!(weights(&c2), vec![1, 2, 3]);

        let c4 = binary_full_spectrum(4).unwrap();
        assert_eq!((c4.length(), c4.dimension()), (15, 4));
        assert_eq!(weights(&c4), (1..=15).collect::<Vec<_>>());
    }

    #[test]
    fn binary_full_spectrum_bounds_check() {
        assert!(binary_full_spectrum(0).is_err());
        assert!(binary_full_spectrum(MAX_BINARY_DIMENSION + 1).is_err());
    }

    #[test]
    fn binary_message_weight_map_is_a_bijection() {
        // Each nonzero message must land on its own weight.
        for k in 1..=10usize {
            let code = binary_full_spectrum(k).unwrap();
            let mut seen = vec![false; 1 << k];
            for m in 1u64..(1 << k) {
                let msg: Vec<u64> = (0..k).map(|i| (m >> i) & 1).collect();
                let w = code.weight_of_message(&msg).unwrap() as usize;
                assert!(w >= 1 && w < (1 << k));
                assert!(!seen[w], "weight {w} repeated at k={k}");
                seen[w] = true;
            }
        }
    }

    #[test]
    fn two_dim_full_binary_case() {
        let code = two_dim_full(2).unwrap();
        assert_eq!(code.length(), 6);
        assert_eq!(weights(&code), vec![3, 4, 5]);
    }

    #[test]
    fn two_dim_full_ternary_case() {
        let code = two_dim_full(3).unwrap();
        // C(3,2) + 2*3 + 1 = 10.
        assert_eq!(code.length(), 10);
        assert_eq!(weights(&code), vec![6, 7, 8, 9]);
    }

    #[test]
    fn two_dim_full_preconditions() {
        assert!(matches!(
            two_dim_full_with(3, 2, 4),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            two_dim_full_with(3, 4, 4),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(two_dim_full(6), Err(Error::NotAPrimePower(6))));
    }

    #[test]
    fn two_dim_closed_form_matches_enumeration() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 32] {
            let code = two_dim_full(q).unwrap();
            let enumerated = code.weight_spectrum().unwrap();
            let predicted = two_dim_full_spectrum(q, q, q + 1);
            assert_eq!(enumerated, predicted, "q={q}");
            assert_eq!(enumerated.len() as u64, q + 1, "q={q}");
        }
    }

    #[test]
    fn doubling_binary_k2_reaches_k3_spectrum() {
        let base = binary_full_spectrum(2).unwrap();
        let doubled = doubling_step(&base, Some(4)).unwrap();
        assert_eq!(doubled.dimension(), 3);
        assert_eq!(weights(&doubled), (1..=7).collect::<Vec<_>>());
    }

    #[test]
    fn doubling_two_dim_ternary() {
        let base = two_dim_full(3).unwrap();
        let doubled = doubling_step(&base, Some(10)).unwrap();
        assert_eq!(weights(&doubled), vec![6, 7, 8, 9, 10, 16, 17, 18, 19]);
    }

    #[test]
    fn doubling_rejects_small_tails() {
        let rep = LinearCode::new(FieldSpec::new(2).unwrap(), 1, vec![(vec![1], 5)]).unwrap();
        assert!(matches!(
            doubling_step(&rep, Some(5)),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(doubling_step(&rep, Some(6)).is_ok());
    }

    #[test]
    fn doubling_rejects_rank_deficient_codes() {
        let field = FieldSpec::new(3).unwrap();
        let deficient =
            LinearCode::new(field, 2, vec![(vec![1, 1], 1), (vec![2, 2], 1)]).unwrap();
        assert!(matches!(
            doubling_step(&deficient, None),
            Err(Error::RankDeficient { rank: 1, dimension: 2 })
        ));
    }

    #[test]
    fn iterated_doubling_counts() {
        let (_, s) = iterated_doubling_with_spectrum(2, 3).unwrap();
        assert_eq!(s.len(), 4);
        let (_, s) = iterated_doubling_with_spectrum(3, 3).unwrap();
        assert_eq!(s.len(), 9);
        // Recursion 2L + 1 from 6: 6 -> 13 -> 27.
        let (_, s) = iterated_doubling_with_spectrum(4, 5).unwrap();
        assert_eq!(s.len(), 27);
        assert!(iterated_doubling(1, 3).is_err());
        // Oversized requests refuse instead of exhausting memory.
        assert!(matches!(
            iterated_doubling(40, 9),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            iterated_doubling(300, 2),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn iterated_tracked_spectrum_matches_enumeration() {
        for (k, q) in [(2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (4, 4), (3, 9)] {
            let (code, tracked) = iterated_doubling_with_spectrum(k, q).unwrap();
            assert_eq!(code.dimension(), k);
            assert_eq!(code.weight_spectrum().unwrap(), tracked, "k={k}, q={q}");
        }
    }

    #[test]
    fn ambient_code_spectra() {
        assert_eq!(weights(&ambient_code(1, 2).unwrap()), vec![1]);
        assert_eq!(weights(&ambient_code(4, 3).unwrap()), vec![1, 2, 3, 4]);
        assert_eq!(weights(&ambient_code(3, 9).unwrap()), vec![1, 2, 3]);
    }

    #[test]
    fn construction_counts_are_monotone_in_dimension() {
        for q in [2u64, 3, 4] {
            let mut prev = 0u64;
            for k in 2..=6usize {
                let (_, s) = iterated_doubling_with_spectrum(k, q).unwrap();
                assert!(s.len() as u64 >= prev, "k={k}, q={q}");
                prev = s.len() as u64;
            }
        }
    }

    #[test]
    fn two_dim_counts_are_monotone_in_field_extension() {
        for (q, qm) in [(2u64, 4u64), (2, 16), (3, 9), (5, 25)] {
            let small = two_dim_full(q).unwrap().num_distinct_weights().unwrap();
            let big = two_dim_full(qm).unwrap().num_distinct_weights().unwrap();
            assert!(small <= big);
        }
    }
}
