//! Randomized and exhaustive searches for extremal weight and distance
//! counts.
//!
//! The random search reproduces the long-random-code experiments: sample
//! generator matrices with i.i.d. uniform entries (resampling on rank
//! deficiency), count distinct weights, keep the best witness. Everything is
//! seeded; each trial derives its own stream from (seed, trial index), so
//! results are identical no matter how the trials are scheduled.
//!
//! The exhaustive oracles enumerate every [n, k]_q subspace exactly once via
//! reduced-row-echelon canonical generator matrices, and every M-subset of
//! words with the first word pinned to all-zeros (per-coordinate symbol
//! relabeling makes that lossless). They are deliberately budgeted: these
//! are ground-truth references for small parameters, not production search.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{hamming_ball_volume, weight_count_upper};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::nonlinear::{max_distances, saturating_length_upper};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on the number of subspaces an exhaustive weight search may
/// visit.
pub const DEFAULT_SUBSPACE_BUDGET: u64 = 10_000_000;

/// Default cap on the number of word tuples an exhaustive distance search
/// may visit.
pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;

/// Outcome of a random generator-matrix search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: u64,
    pub k: usize,
    pub q: u64,
    pub trials: u64,
    pub seed: u64,
    pub best_count: u64,
    pub best_witness: LinearCode,
}

/// Samples `trials` random [n, k]_q generator matrices and reports the
/// largest number of distinct weights seen, with a witness. Deterministic
/// given the seed; ties prefer the lexicographically smallest witness.
pub fn random_linear_search(
    n: u64,
    k: usize,
    q: u64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<SearchReport> {
    let field = FieldSpec::new(q)?;
    if k < 1 || (k as u64) > n {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    if trials < 1 {
        return Err(Error::PreconditionViolated("need at least one trial".into()));
    }
    // One spectrum enumeration per trial; refuse up front if a single one
    // would blow the budget.
    probe_projective_budget(k, q, budget)?;

    let run = |trial: u64| -> (u64, LinearCode) {
        let code = sample_full_rank_code(&field, n, k, seed, trial);
        let count = code
            .weight_spectrum_with_budget(budget)
            .expect("budget was probed")
            .len() as u64;
        (count, code)
    };
    let pick = |a: (u64, LinearCode), b: (u64, LinearCode)| -> (u64, LinearCode) {
        if b.0 > a.0 || (b.0 == a.0 && b.1.columns() < a.1.columns()) {
            b
        } else {
            a
        }
    };

    #[cfg(feature = "parallel")]
    let best = (0..trials)
        .into_par_iter()
        .map(run)
        .reduce_with(pick)
        .expect("at least one trial");
    #[cfg(not(feature = "parallel"))]
    let best = (0..trials).map(run).reduce(pick).expect("at least one trial");

    Ok(SearchReport {
        n,
        k,
        q,
        trials,
        seed,
        best_count: best.0,
        best_witness: best.1,
    })
}

/// Single-threaded variant of [`random_linear_search`] with identical
/// output, kept public for the benchmarks.
pub fn random_linear_search_seq(
    n: u64,
    k: usize,
    q: u64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<SearchReport> {
    let field = FieldSpec::new(q)?;
    if k < 1 || (k as u64) > n || trials < 1 {
        return Err(Error::PreconditionViolated("bad search parameters".into()));
    }
    probe_projective_budget(k, q, budget)?;
    let mut best: Option<(u64, LinearCode)> = None;
    for trial in 0..trials {
        let code = sample_full_rank_code(&field, n, k, seed, trial);
        let count = code.weight_spectrum_seq().expect("budget was probed").len() as u64;
        best = Some(match best {
            None => (count, code),
            Some(b) if count > b.0 || (count == b.0 && code.columns() < b.1.columns()) => {
                (count, code)
            }
            Some(b) => b,
        });
    }
    let (best_count, best_witness) = best.expect("at least one trial");
    Ok(SearchReport {
        n,
        k,
        q,
        trials,
        seed,
        best_count,
        best_witness,
    })
}

fn probe_projective_budget(k: usize, q: u64, budget: u64) -> Result<()> {
    let mut total = 0u128;
    let mut pw = 1u128;
    for _ in 0..k {
        total += pw;
        pw = pw.saturating_mul(q as u128);
    }
    if total > budget as u128 {
        return Err(Error::ResourceLimit {
            needed: total,
            budget: budget as u128,
        });
    }
    Ok(())
}

/// Each trial reads its own ChaCha stream, so trials are independent of
/// scheduling order.
fn sample_full_rank_code(field: &FieldSpec, n: u64, k: usize, seed: u64, trial: u64) -> LinearCode {
    let q = field.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    loop {
        let mut columns: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        for _ in 0..n {
            let col: Vec<u64> = (0..k).map(|_| rng.random_range(0..q)).collect();
            *columns.entry(col).or_insert(0) += 1;
        }
        let code = LinearCode::new(field.clone(), k, columns)
            .expect("sampled columns are well-formed");
        if code.rank() == k {
            return code;
        }
    }
}

/// Number of k-dimensional subspaces of F_q^n (the Gaussian binomial
/// coefficient).
pub fn subspace_count(n: u64, k: usize, q: u64) -> BigUint {
    let n = u32::try_from(n).expect("length fits in u32");
    let q = BigUint::from(q);
    let mut numerator = BigUint::from(1u32);
    let mut denominator = BigUint::from(1u32);
    for i in 0..k as u32 {
        numerator *= q.pow(n - i) - 1u32;
        denominator *= q.pow(i + 1) - 1u32;
    }
    numerator / denominator
}

/// Exact maximum of the number of distinct weights over all [n, k]_q codes,
/// by exhausting reduced-row-echelon canonical generator matrices (one per
/// subspace).
pub fn max_weights_at_length(n: u64, k: usize, q: u64, budget: u64) -> Result<u64> {
    let field = FieldSpec::new(q)?;
    if k < 1 || (k as u64) > n {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    if n > 127 {
        return Err(Error::ResourceLimit {
            needed: u128::MAX,
            budget: budget as u128,
        });
    }
    let total = subspace_count(n, k, q);
    if total > BigUint::from(budget) {
        return Err(Error::ResourceLimit {
            needed: u128::try_from(&total).unwrap_or(u128::MAX),
            budget: budget as u128,
        });
    }

    let n = n as usize;
    let pivot_sets = combinations(n, k);
    let per_set = |pivots: &Vec<usize>| -> u64 {
        let mut best = 0u64;
        // Free cells: in row i, the non-pivot columns right of pivot i.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for col in p + 1..n {
                if !pivots.contains(&col) {
                    free.push((i, col));
                }
            }
        }
        let assignments = q.pow(free.len() as u32);
        let mut matrix_cols = vec![vec![0u64; k]; n];
        for a in 0..assignments {
            for col in matrix_cols.iter_mut() {
                col.fill(0);
            }
            for (i, &p) in pivots.iter().enumerate() {
                matrix_cols[p][i] = 1;
            }
            let mut rest = a;
            for &(row, col) in &free {
                matrix_cols[col][row] = rest % q;
                rest /= q;
            }
            let mask = projective_weight_mask(&matrix_cols, &field, k);
            best = best.max(u64::from(mask.count_ones()));
        }
        best
    };

    #[cfg(feature = "parallel")]
    let best = pivot_sets.par_iter().map(per_set).max().unwrap_or(0);
    #[cfg(not(feature = "parallel"))]
    let best = pivot_sets.iter().map(per_set).max().unwrap_or(0);
    Ok(best)
}

/// Distinct weights of the subspace spanned by the given raw columns, as a
/// bitmask over weights 1..=n (n <= 127).
fn projective_weight_mask(columns: &[Vec<u64>], field: &FieldSpec, k: usize) -> u128 {
    let q = field.order();
    let mut mask = 0u128;
    let mut msg = vec![0u64; k];
    for pivot in 0..k {
        let tails = q.pow((k - 1 - pivot) as u32);
        for t in 0..tails {
            msg.fill(0);
            msg[pivot] = 1;
            let mut rest = t;
            for pos in (pivot + 1..k).rev() {
                msg[pos] = rest % q;
                rest /= q;
            }
            let mut w = 0u32;
            for col in columns {
                if field.dot(&msg, col) != 0 {
                    w += 1;
                }
            }
            if w > 0 {
                mask |= 1u128 << w;
            }
        }
    }
    mask
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance the rightmost index that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Smallest length n at which some [n, k]_q code reaches `target` distinct
/// weights. The scan starts at max(target, k): a length-n code has at most
/// n distinct weights, and dimension k needs length at least k.
pub fn smallest_saturating_length(k: usize, q: u64, target: u64, budget: u64) -> Result<u64> {
    if target < 1 {
        return Err(Error::OutOfRange("target must be at least 1".into()));
    }
    if BigUint::from(target) > weight_count_upper(k, q)? {
        return Err(Error::PreconditionViolated(format!(
            "target {target} exceeds the projective bound for k = {k}, q = {q}"
        )));
    }
    let mut n = target.max(k as u64);
    loop {
        if max_weights_at_length(n, k, q, budget)? >= target {
            return Ok(n);
        }
        n += 1;
    }
}

/// Exact maximum of the number of distinct pairwise distances over all
/// M-word codes of length n over a q-symbol alphabet.
///
/// The first word is pinned to all-zeros: per-coordinate relabeling of
/// symbols preserves every pairwise distance and can always move one word
/// to the origin.
pub fn max_distances_at_length(n: u64, size: usize, q: u64, budget: u64) -> Result<u64> {
    if size < 2 || q < 2 || n < 1 {
        return Err(Error::PreconditionViolated(format!(
            "need size >= 2, q >= 2, n >= 1; got size = {size}, q = {q}, n = {n}"
        )));
    }
    if size == 2 {
        // A pair of distinct words realizes exactly one distance.
        return Ok(1);
    }
    if n > 127 {
        return Err(Error::ResourceLimit {
            needed: u128::MAX,
            budget: budget as u128,
        });
    }
    let total_words = q
        .checked_pow(n as u32)
        .filter(|&t| t <= (1 << 40))
        .ok_or(Error::ResourceLimit {
            needed: u128::MAX,
            budget: budget as u128,
        })?;
    let tuples = binomial(total_words - 1, size as u64 - 1);
    if tuples > BigUint::from(budget) {
        return Err(Error::ResourceLimit {
            needed: u128::try_from(&tuples).unwrap_or(u128::MAX),
            budget: budget as u128,
        });
    }

    // Decode every word once; the combination walk then only compares rows.
    let words: Vec<Vec<u16>> = (0..total_words)
        .map(|w| {
            let mut digits = vec![0u16; n as usize];
            let mut rest = w;
            for d in digits.iter_mut() {
                *d = (rest % q) as u16;
                rest /= q;
            }
            digits
        })
        .collect();
    let zero_distance: Vec<u32> = words
        .iter()
        .map(|w| w.iter().filter(|&&s| s != 0).count() as u32)
        .collect();

    let target = max_distances(size as u64)?;
    let stop = AtomicBool::new(false);
    let first_range: Vec<u64> = (1..total_words).collect();
    let per_first = |&first: &u64| -> u64 {
        if stop.load(Ordering::Relaxed) {
            return 0;
        }
        let mut chosen = vec![first];
        let best = extend_tuple(
            &words,
            &zero_distance,
            total_words,
            size - 1,
            &mut chosen,
            target,
            &stop,
        );
        if best == target {
            stop.store(true, Ordering::Relaxed);
        }
        best
    };

    #[cfg(feature = "parallel")]
    let best = first_range.par_iter().map(per_first).max().unwrap_or(0);
    #[cfg(not(feature = "parallel"))]
    let best = first_range.iter().map(per_first).max().unwrap_or(0);
    Ok(best)
}

fn extend_tuple(
    words: &[Vec<u16>],
    zero_distance: &[u32],
    total_words: u64,
    want: usize,
    chosen: &mut Vec<u64>,
    target: u64,
    stop: &AtomicBool,
) -> u64 {
    if chosen.len() == want {
        let mut mask = 0u128;
        for (i, &a) in chosen.iter().enumerate() {
            mask |= 1u128 << zero_distance[a as usize];
            for &b in &chosen[i + 1..] {
                let d = hamming_u16(&words[a as usize], &words[b as usize]);
                mask |= 1u128 << d;
            }
        }
        return u64::from(mask.count_ones());
    }
    let mut best = 0u64;
    let start = chosen.last().copied().unwrap_or(0) + 1;
    for next in start..total_words {
        chosen.push(next);
        best = best.max(extend_tuple(
            words,
            zero_distance,
            total_words,
            want,
            chosen,
            target,
            stop,
        ));
        chosen.pop();
        if best == target || stop.load(Ordering::Relaxed) {
            break;
        }
    }
    best
}

fn hamming_u16(x: &[u16], y: &[u16]) -> u32 {
    x.iter().zip(y).filter(|(a, b)| a != b).count() as u32
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut out = BigUint::from(1u32);
    for i in 0..k.min(n) {
        out = out * (n - i) / (i + 1);
    }
    if k > n {
        BigUint::ZERO
    } else {
        out
    }
}

/// Smallest length at which M words can realize all C(M, 2) distances. The
/// scan starts at C(M, 2) (distances live in [1, n]) and is capped by the
/// difference-set upper bound, which guarantees termination.
pub fn smallest_distance_saturating_length(size: usize, q: u64, budget: u64) -> Result<u64> {
    let target = max_distances(size as u64)?;
    let cap = saturating_length_upper(size as u64)?;
    let mut n = target;
    while n <= cap {
        if max_distances_at_length(n, size, q, budget)? == target {
            return Ok(n);
        }
        n += 1;
    }
    Err(Error::Infeasible(format!(
        "no length up to {cap} saturates {target} distances for size {size}"
    )))
}

/// One grid cell of the audit: the exact maximum weight count at (n, k, q).
#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    pub n: u64,
    pub k: usize,
    pub q: u64,
    pub max_weights: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
    /// Human-readable descriptions of any violated inequality. Empty means
    /// every monotonicity and consistency relation held on the grid.
    pub violations: Vec<String>,
}

/// Evaluates the exhaustive oracle over a small grid (q in {2, 3, 4},
/// k <= 3, n <= 6) and checks the expected relations: the count never
/// exceeds min(n, projective bound), is nondecreasing in n and in k, does
/// not drop when the field grows from GF(2) to GF(4), and respects the
/// ball-volume inequality q^k <= volume(n, count, q).
pub fn monotonicity_audit(budget: u64) -> Result<AuditReport> {
    let qs = [2u64, 3, 4];
    let mut rows = Vec::new();
    let mut table: BTreeMap<(u64, usize, u64), u64> = BTreeMap::new();
    for &q in &qs {
        for k in 1..=3usize {
            for n in k as u64..=6 {
                let value = max_weights_at_length(n, k, q, budget)?;
                table.insert((q, k, n), value);
                rows.push(AuditRow {
                    n,
                    k,
                    q,
                    max_weights: value,
                });
            }
        }
    }

    let mut violations = Vec::new();
    for (&(q, k, n), &value) in &table {
        if value > n {
            violations.push(format!("L({n},{k},{q}) = {value} exceeds the length cap"));
        }
        if BigUint::from(value) > weight_count_upper(k, q)? {
            violations.push(format!(
                "L({n},{k},{q}) = {value} exceeds the projective bound"
            ));
        }
        if let Some(&next_n) = table.get(&(q, k, n + 1)) {
            if value > next_n {
                violations.push(format!("L({n},{k},{q}) = {value} > L({},{k},{q})", n + 1));
            }
        }
        if let Some(&next_k) = table.get(&(q, k + 1, n)) {
            if value > next_k {
                violations.push(format!("L({n},{k},{q}) = {value} > L({n},{},{q})", k + 1));
            }
        }
        if q == 2 {
            if let Some(&ext) = table.get(&(4, k, n)) {
                if value > ext {
                    violations.push(format!("L({n},{k},2) = {value} > L({n},{k},4) = {ext}"));
                }
            }
        }
        let ball = hamming_ball_volume(n, value, q)?;
        if BigUint::from(q).pow(k as u32) > ball {
            violations.push(format!(
                "ball volume at L({n},{k},{q}) = {value} cannot hold q^k words"
            ));
        }
    }
    Ok(AuditReport { rows, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn subspace_counts() {
        assert_eq!(subspace_count(3, 2, 2), BigUint::from(7u32));
        assert_eq!(subspace_count(2, 2, 2), BigUint::from(1u32));
        assert_eq!(subspace_count(4, 2, 3), BigUint::from(130u32));
        assert_eq!(subspace_count(6, 3, 4), BigUint::from(376805u32));
    }

    #[test]
    fn exhaustive_weight_oracle_small_values() {
        assert_eq!(max_weights_at_length(3, 2, 2, 1000).unwrap(), 3);
        assert_eq!(max_weights_at_length(2, 2, 2, 1000).unwrap(), 2);
        assert_eq!(max_weights_at_length(4, 2, 2, 1000).unwrap(), 3);
    }

    /// Independent oracle: enumerate every generator matrix, keep rank-k
    /// ones, and take the maximum weight count over full codeword sets.
    fn brute_force_max_weights(n: usize, k: usize, q: u64) -> (u64, u64) {
        let field = FieldSpec::new(q).unwrap();
        let matrices = q.pow((n * k) as u32);
        let mut best = 0u64;
        let mut subspaces: BTreeSet<Vec<u64>> = BTreeSet::new();
        for m in 0..matrices {
            let mut rest = m;
            let mut cols: Vec<Vec<u64>> = vec![vec![0u64; k]; n];
            for col in cols.iter_mut() {
                for entry in col.iter_mut() {
                    *entry = rest % q;
                    rest /= q;
                }
            }
            // All q^k codewords, as packed vectors.
            let mut words: Vec<u64> = Vec::with_capacity(q.pow(k as u32) as usize);
            let mut weights = BTreeSet::new();
            for msg_id in 0..q.pow(k as u32) {
                let mut rest = msg_id;
                let msg: Vec<u64> = (0..k)
                    .map(|_| {
                        let d = rest % q;
                        rest /= q;
                        d
                    })
                    .collect();
                let mut packed = 0u64;
                let mut w = 0u64;
                for col in &cols {
                    let v = field.dot(&msg, col);
                    packed = packed * q + v;
                    if v != 0 {
                        w += 1;
                    }
                }
                words.push(packed);
                if msg_id > 0 {
                    weights.insert(w);
                }
            }
            words.sort_unstable();
            words.dedup();
            if words.len() as u64 == q.pow(k as u32) {
                // Full rank: q^k distinct codewords.
                best = best.max(weights.len() as u64);
                subspaces.insert(words);
            }
        }
        (best, subspaces.len() as u64)
    }

    #[test]
    fn rref_enumeration_matches_brute_force() {
        for (n, k, q) in [(3usize, 2usize, 2u64), (4, 2, 2), (3, 1, 3), (4, 2, 3), (3, 3, 2)] {
            let (expected_max, expected_count) = brute_force_max_weights(n, k, q);
            let got = max_weights_at_length(n as u64, k, q, 1_000_000).unwrap();
            assert_eq!(got, expected_max, "max at n={n}, k={k}, q={q}");
            assert_eq!(
                subspace_count(n as u64, k, q),
                BigUint::from(expected_count),
                "count at n={n}, k={k}, q={q}"
            );
        }
    }

    #[test]
    fn exhaustive_budget_is_enforced() {
        assert!(matches!(
            max_weights_at_length(6, 3, 4, 1000),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn weight_saturating_lengths() {
        assert_eq!(smallest_saturating_length(1, 2, 1, 1000).unwrap(), 1);
        assert_eq!(smallest_saturating_length(2, 2, 3, 10_000).unwrap(), 3);
        // The sum of the four projective-class weights obstructs lengths 4
        // and 5 over GF(3); 6 is the first length with four distinct
        // weights.
        assert_eq!(
            smallest_saturating_length(2, 3, 4, 1_000_000).unwrap(),
            6
        );
        assert!(smallest_saturating_length(2, 2, 4, 1000).is_err());
    }

    #[test]
    fn exhaustive_distance_oracle_values() {
        assert_eq!(max_distances_at_length(1, 2, 2, 1000).unwrap(), 1);
        assert_eq!(max_distances_at_length(2, 3, 2, 10_000).unwrap(), 2);
        assert_eq!(max_distances_at_length(3, 3, 2, 10_000).unwrap(), 3);
        // Never more than C(M, 2).
        assert_eq!(max_distances_at_length(6, 3, 2, 100_000).unwrap(), 3);
    }

    #[test]
    fn distance_saturating_lengths() {
        assert_eq!(smallest_distance_saturating_length(2, 2, 1000).unwrap(), 1);
        assert_eq!(
            smallest_distance_saturating_length(3, 2, 100_000).unwrap(),
            3
        );
        // {0, e1, e2+e3, 111111} realizes {1,...,6} at length 6, and no
        // shorter length has room for six distinct distances.
        assert_eq!(
            smallest_distance_saturating_length(4, 2, 10_000_000).unwrap(),
            6
        );
    }

    #[test]
    fn random_search_is_reproducible() {
        let a = random_linear_search(100, 2, 3, 10, 42, 1 << 20).unwrap();
        let b = random_linear_search(100, 2, 3, 10, 42, 1 << 20).unwrap();
        assert_eq!(a.best_count, b.best_count);
        assert_eq!(a.best_witness, b.best_witness);
        let c = random_linear_search_seq(100, 2, 3, 10, 42, 1 << 20).unwrap();
        assert_eq!(a.best_count, c.best_count);
        assert_eq!(a.best_witness, c.best_witness);
        // The witness really attains the reported count.
        assert_eq!(
            a.best_witness.num_distinct_weights().unwrap(),
            a.best_count
        );
    }

    #[test]
    fn random_search_respects_bounds() {
        let report = random_linear_search(30, 3, 2, 20, 7, 1 << 20).unwrap();
        assert!(report.best_count <= 7);
        assert!(report.best_count <= 30);
        assert_eq!(report.best_witness.rank(), 3);
        // At length 3 the length cap binds regardless of the trial count.
        let tight = random_linear_search(3, 3, 2, 50, 7, 1 << 20).unwrap();
        assert!(tight.best_count <= 3);
    }

    #[test]
    fn wide_binary_search_saturates() {
        // Random wide [63, 3] binary codes separate all 7 weights with high
        // probability across 1000 trials.
        let report = random_linear_search(63, 3, 2, 1000, 1, 1 << 20).unwrap();
        assert_eq!(report.best_count, 7);
    }

    #[test]
    fn audit_grid_is_clean() {
        let report = monotonicity_audit(DEFAULT_SUBSPACE_BUDGET).unwrap();
        assert!(
            report.violations.is_empty(),
            "violations: {:?}",
            report.violations
        );
        let lookup = |q: u64, k: usize, n: u64| {
            report
                .rows
                .iter()
                .find(|r| r.q == q && r.k == k && r.n == n)
                .unwrap()
                .max_weights
        };
        assert_eq!(lookup(2, 2, 4), 3);
        assert_eq!(lookup(2, 2, 5), 3);
        assert_eq!(lookup(2, 2, 2), 2);
        assert!(lookup(2, 2, 2) <= lookup(4, 2, 2));
    }
}
