//! Unrestricted (nonlinear) codes and their distance spectra.
//!
//! The alphabet here is the plain integer range [0, q) with q any integer
//! greater than 1; Hamming distance only needs equality testing, so no field
//! structure is assumed. Two families matter: step codes (runs of ones whose
//! pairwise distances are differences of a Sidon set, realizing C(M,2)
//! distinct distances), and codes built from perfect difference sets, which
//! reach C(M,2) distances at length 2 C(M,2) + 1.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{is_prime_power, next_prime_power, FieldSpec};

/// Largest field order the difference-set construction may build (GF(s^3)).
const SINGER_FIELD_LIMIT: u64 = 1 << 20;

/// An unrestricted code: M distinct words of equal length over [0, q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnrestrictedCode {
    alphabet_size: u64,
    length: usize,
    words: Vec<Vec<u64>>,
}

impl UnrestrictedCode {
    pub fn new(alphabet_size: u64, words: Vec<Vec<u64>>) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::OutOfRange(
                "alphabet size must be at least 2".into(),
            ));
        }
        if words.len() < 2 {
            return Err(Error::OutOfRange("a code needs at least 2 words".into()));
        }
        let length = words[0].len();
        if length == 0 {
            return Err(Error::OutOfRange("word length must be at least 1".into()));
        }
        let mut seen = BTreeSet::new();
        for w in &words {
            if w.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: w.len(),
                });
            }
            if let Some(&bad) = w.iter().find(|&&s| s >= alphabet_size) {
                return Err(Error::OutOfRange(format!(
                    "symbol {bad} is outside the alphabet [0, {alphabet_size})"
                )));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::PreconditionViolated(
                    "code words must be pairwise distinct".into(),
                ));
            }
        }
        Ok(UnrestrictedCode {
            alphabet_size,
            length,
            words,
        })
    }

    pub fn alphabet_size(&self) -> u64 {
        self.alphabet_size
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<u64>] {
        &self.words
    }

    /// The set of pairwise Hamming distances.
    pub fn distance_spectrum(&self) -> BTreeSet<u64> {
        let mut set = BTreeSet::new();
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                set.insert(hamming_distance(x, y));
            }
        }
        set
    }

    pub fn num_distinct_distances(&self) -> u64 {
        self.distance_spectrum().len() as u64
    }
}

pub fn hamming_distance(x: &[u64], y: &[u64]) -> u64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).filter(|(a, b)| a != b).count() as u64
}

/// Wire format: `{"q": .., "n": .., "words": ["0101", ..]}` with one base-36
/// digit per symbol; alphabets above 36 symbols have no string form.
impl Serialize for UnrestrictedCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.alphabet_size > 36 {
            return Err(S::Error::custom(
                "digit-string serialization supports alphabets up to 36 symbols",
            ));
        }
        #[derive(Serialize)]
        struct Record<'a> {
            q: u64,
            n: usize,
            words: &'a [String],
        }
        let words: Vec<String> = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&s| char::from_digit(s as u32, 36).expect("symbol < 36"))
                    .collect()
            })
            .collect();
        Record {
            q: self.alphabet_size,
            n: self.length,
            words: &words,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnrestrictedCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Record {
            q: u64,
            n: usize,
            words: Vec<String>,
        }
        let record = Record::deserialize(deserializer)?;
        let words = record
            .words
            .iter()
            .map(|w| {
                w.chars()
                    .map(|c| {
                        c.to_digit(36)
                            .map(u64::from)
                            .ok_or_else(|| D::Error::custom(format!("bad symbol {c:?}")))
                    })
                    .collect::<std::result::Result<Vec<u64>, D::Error>>()
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let code = UnrestrictedCode::new(record.q, words).map_err(D::Error::custom)?;
        if code.length() != record.n {
            return Err(D::Error::custom("stated length disagrees with the words"));
        }
        Ok(code)
    }
}

/// A code in "run of ones" form, described by its strictly increasing word
/// weights w_0 = 0 < w_1 < ... < w_{M-1}. The distance between two such
/// words is the difference of their weights, so a Sidon weight sequence
/// gives all C(M,2) distances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StepCode {
    weights: Vec<u64>,
}

impl StepCode {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.first() != Some(&0) {
            return Err(Error::PreconditionViolated(
                "step weights must start at 0".into(),
            ));
        }
        if !weights.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::PreconditionViolated(
                "step weights must be strictly increasing".into(),
            ));
        }
        Ok(StepCode { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn size(&self) -> usize {
        self.weights.len()
    }

    /// Materializes the step code over [0, q): word i is w_i ones followed
    /// by zeros, at length max(w).
    pub fn to_code(&self, q: u64) -> Result<UnrestrictedCode> {
        if self.weights.len() < 2 {
            return Err(Error::OutOfRange(
                "materializing needs at least 2 weights".into(),
            ));
        }
        let n = *self.weights.last().unwrap() as usize;
        let words = self
            .weights
            .iter()
            .map(|&w| {
                let mut word = vec![0u64; n];
                for s in word.iter_mut().take(w as usize) {
                    *s = 1;
                }
                word
            })
            .collect();
        UnrestrictedCode::new(q, words)
    }
}

/// How to pick the next Sidon element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidonStrategy {
    /// Smallest integer keeping all pairwise differences distinct. Canonical
    /// and shortest.
    Greedy,
    /// w_i = 2^i - 1; longer but closed-form.
    Doubling,
}

/// Greedy Sidon weight sequence of the given size, starting at 0.
///
/// ```
/// use wspectra::nonlinear::sidon_chain;
///
/// let chain = sidon_chain(4).unwrap();
/// assert_eq!(chain.weights(), &[0, 1, 3, 7]);
/// // All C(4, 2) = 6 pairwise distances are distinct.
/// assert_eq!(chain.to_code(2).unwrap().num_distinct_distances(), 6);
/// ```
pub fn sidon_chain(size: usize) -> Result<StepCode> {
    sidon_chain_with(size, SidonStrategy::Greedy)
}

pub fn sidon_chain_with(size: usize, strategy: SidonStrategy) -> Result<StepCode> {
    if size < 2 {
        return Err(Error::OutOfRange(
            "a Sidon chain needs at least 2 elements".into(),
        ));
    }
    match strategy {
        SidonStrategy::Greedy => {
            let mut weights: Vec<u64> = vec![0];
            let mut used: BTreeSet<u64> = BTreeSet::new();
            while weights.len() < size {
                let mut candidate = weights.last().unwrap() + 1;
                'scan: loop {
                    for &w in &weights {
                        if used.contains(&(candidate - w)) {
                            candidate += 1;
                            continue 'scan;
                        }
                    }
                    break;
                }
                for &w in &weights {
                    used.insert(candidate - w);
                }
                weights.push(candidate);
            }
            StepCode::new(weights)
        }
        SidonStrategy::Doubling => {
            if size > 63 {
                return Err(Error::OutOfRange(
                    "doubling weights overflow beyond 63 elements".into(),
                ));
            }
            StepCode::new((0..size).map(|i| (1u64 << i) - 1).collect())
        }
    }
}

/// The largest possible number of distinct pairwise distances of an M-word
/// code: C(M, 2), attained by step codes over any alphabet.
pub fn max_distances(size: u64) -> Result<u64> {
    if size < 2 {
        return Err(Error::OutOfRange("need at least 2 words".into()));
    }
    Ok(size * (size - 1) / 2)
}

/// A set of residues modulo v with every nonzero residue arising exactly
/// once as an ordered difference (a planar difference set).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSet {
    #[serde(rename = "v")]
    modulus: u64,
    residues: Vec<u64>,
}

impl DifferenceSet {
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::OutOfRange("modulus must be positive".into()));
        }
        let set: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&r| r >= modulus) {
            return Err(Error::OutOfRange(format!(
                "residue {bad} is not reduced mod {modulus}"
            )));
        }
        Ok(DifferenceSet {
            modulus,
            residues: set.into_iter().collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted residues.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// True iff every nonzero residue mod v occurs exactly once among the
    /// ordered differences. Vacuously true for v = 1.
    pub fn is_perfect(&self) -> bool {
        let v = self.modulus as usize;
        let mut counts = vec![0u32; v];
        for (i, &x) in self.residues.iter().enumerate() {
            for (j, &y) in self.residues.iter().enumerate() {
                if i != j {
                    counts[((x + self.modulus - y) % self.modulus) as usize] += 1;
                }
            }
        }
        counts[1..].iter().all(|&c| c == 1)
    }
}

/// Perfect difference set with parameters (s^2 + s + 1, s + 1, 1) for a
/// prime power s, via the hyperplane of GF(s^3) over GF(s).
///
/// With a fixed generator alpha of GF(s^3)*, the residues are the
/// i mod (s^2 + s + 1) for which alpha^i lies in the 2-dimensional
/// GF(s)-subspace spanned by {1, X}. Membership is well defined per residue
/// class because alpha^(s^2+s+1) scales by a GF(s) element and the subspace
/// is closed under that scaling.
pub fn singer_difference_set(s: u64) -> Result<DifferenceSet> {
    if !is_prime_power(s) {
        return Err(Error::NotAPrimePower(s));
    }
    let cube = (s as u128) * (s as u128) * (s as u128);
    if cube > SINGER_FIELD_LIMIT as u128 {
        return Err(Error::ResourceLimit {
            needed: cube,
            budget: SINGER_FIELD_LIMIT as u128,
        });
    }
    let v = s * s + s + 1;
    let ds = hyperplane_difference_set(s, v);
    match ds {
        Some(ds) if ds.is_perfect() && ds.residues().len() as u64 == s + 1 => Ok(ds),
        // The algebraic route covers every prime power in range; the
        // backtracking search is a safety net for small moduli.
        _ if v <= 200 => search_perfect_difference_set(v, (s + 1) as usize)
            .ok_or_else(|| Error::Infeasible(format!("no ({v}, {}, 1) difference set", s + 1))),
        _ => Err(Error::Infeasible(format!(
            "difference set construction failed for s = {s}"
        ))),
    }
}

fn hyperplane_difference_set(s: u64, v: u64) -> Option<DifferenceSet> {
    let field = FieldSpec::new(s * s * s).ok()?;
    let p = field.characteristic();
    let m = field.degree() as usize;
    let prime = FieldSpec::new(p).ok()?;

    // GF(s) inside GF(s^3) is the kernel of the GF(p)-linear map x -> x^s - x.
    let mut map_columns: Vec<Vec<u64>> = Vec::with_capacity(m);
    for i in 0..m {
        let basis = field.from_coeffs(&unit_vector(m, i)).ok()?;
        let image = field.sub(field.pow(basis, s), basis);
        map_columns.push(field.coeffs(image));
    }
    let subfield_basis = kernel_basis(&map_columns, &prime, m);
    let e = m / 3;
    if subfield_basis.len() != e {
        return None;
    }

    // W = K + K*X, as 2e GF(p)-basis vectors in reduced form.
    let x_elem = field.from_coeffs(&unit_vector(m, 1)).ok()?;
    let mut w_basis: Vec<Vec<u64>> = Vec::with_capacity(2 * e);
    for kappa in &subfield_basis {
        let elem = field.from_coeffs(kappa).ok()?;
        w_basis.push(kappa.clone());
        w_basis.push(field.coeffs(field.mul(elem, x_elem)));
    }
    let reduced = row_reduce(w_basis, &prime);
    if reduced.len() != 2 * e {
        return None;
    }

    let alpha = field.primitive_element();
    let mut residues = Vec::with_capacity(s as usize + 1);
    let mut x = 1u64;
    for i in 0..v {
        if in_span(&field.coeffs(x), &reduced, &prime) {
            residues.push(i);
        }
        x = field.mul(x, alpha);
    }
    DifferenceSet::new(v, residues).ok()
}

fn unit_vector(len: usize, at: usize) -> Vec<u64> {
    let mut v = vec![0u64; len];
    v[at] = 1;
    v
}

/// Basis of the kernel of the linear map whose columns are given, over the
/// prime field.
fn kernel_basis(columns: &[Vec<u64>], prime: &FieldSpec, dim: usize) -> Vec<Vec<u64>> {
    // Row-reduce the transpose-free way: eliminate on the column space of
    // the map matrix, tracking which input combinations die.
    // Build rows of the matrix A with A[r][c] = columns[c][r].
    let rows = columns[0].len();
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|r| columns.iter().map(|col| col[r]).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; dim];
    let mut pivot_row = 0usize;
    for col in 0..dim {
        let Some(found) = (pivot_row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(pivot_row, found);
        let inv = prime.inv(a[pivot_row][col]).expect("pivot is nonzero");
        for x in a[pivot_row].iter_mut() {
            *x = prime.mul(*x, inv);
        }
        let pivot_vals = a[pivot_row].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_vals) {
                    *x = prime.sub(*x, prime.mul(factor, pv));
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
    }
    // Free columns yield kernel vectors.
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec = vec![0u64; dim];
        vec[free] = 1;
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                vec[col] = prime.neg(a[*r][free]);
            }
        }
        basis.push(vec);
    }
    basis
}

/// Row-reduces a list of vectors over the prime field, dropping dependents.
/// Rows stay in insertion order; each kept row has zeros at the leads of the
/// rows before it, which is what [`reduce_against`] relies on.
fn row_reduce(vectors: Vec<Vec<u64>>, prime: &FieldSpec) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for mut v in vectors {
        reduce_against(&mut v, &rows, prime);
        if v.iter().any(|&x| x != 0) {
            let lead = v.iter().position(|&x| x != 0).unwrap();
            let inv = prime.inv(v[lead]).expect("lead is nonzero");
            for x in v.iter_mut() {
                *x = prime.mul(*x, inv);
            }
            rows.push(v);
        }
    }
    rows
}

fn reduce_against(v: &mut [u64], rows: &[Vec<u64>], prime: &FieldSpec) {
    for row in rows {
        let lead = row.iter().position(|&x| x != 0).unwrap();
        if v[lead] != 0 {
            let factor = v[lead];
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi = prime.sub(*vi, prime.mul(factor, *ri));
            }
        }
    }
}

fn in_span(coeffs: &[u64], reduced: &[Vec<u64>], prime: &FieldSpec) -> bool {
    let mut v = coeffs.to_vec();
    reduce_against(&mut v, reduced, prime);
    v.iter().all(|&x| x == 0)
}

/// Backtracking search for a perfect difference set mod v with the given
/// size, canonicalized to contain 0 and ascend. Returns the first hit in
/// lexicographic order.
fn search_perfect_difference_set(v: u64, size: usize) -> Option<DifferenceSet> {
    fn extend(v: u64, size: usize, chosen: &mut Vec<u64>, used: &mut [bool]) -> bool {
        if chosen.len() == size {
            return true;
        }
        let start = chosen.last().map_or(0, |&last| last + 1);
        'next: for candidate in start..v {
            // The fresh differences must avoid both the marked ones and
            // each other.
            let mut fresh: Vec<usize> = Vec::with_capacity(2 * chosen.len());
            for &c in chosen.iter() {
                let d1 = ((candidate - c) % v) as usize;
                let d2 = ((c + v - candidate) % v) as usize;
                if used[d1] || used[d2] || d1 == d2 || fresh.contains(&d1) || fresh.contains(&d2)
                {
                    continue 'next;
                }
                fresh.push(d1);
                fresh.push(d2);
            }
            for &d in &fresh {
                used[d] = true;
            }
            chosen.push(candidate);
            if extend(v, size, chosen, used) {
                return true;
            }
            chosen.pop();
            for d in fresh {
                used[d] = false;
            }
        }
        false
    }

    let mut chosen = vec![0u64];
    let mut used = vec![false; v as usize];
    if extend(v, size, &mut chosen, &mut used) {
        let ds = DifferenceSet::new(v, chosen).ok()?;
        ds.is_perfect().then_some(ds)
    } else {
        None
    }
}

/// The M = s + 1 rows of v_i consecutive ones (v_i the sorted residues of a
/// difference set with parameters (s^2+s+1, s+1, 1)), over [0, q). The
/// distance between rows i and j is |v_i - v_j|, so the code has exactly
/// C(M, 2) distinct distances at length s^2 + s + 1 = 2 C(M, 2) + 1.
pub fn singer_code(s: u64, q: u64) -> Result<UnrestrictedCode> {
    if q < 2 {
        return Err(Error::OutOfRange(
            "alphabet size must be at least 2".into(),
        ));
    }
    let ds = singer_difference_set(s)?;
    let n = ds.modulus() as usize;
    let words = ds
        .residues()
        .iter()
        .map(|&r| {
            let mut word = vec![0u64; n];
            for sym in word.iter_mut().take(r as usize) {
                *sym = 1;
            }
            word
        })
        .collect();
    UnrestrictedCode::new(q, words)
}

/// Upper bound on the smallest length at which an M-word code can realize
/// all C(M, 2) distances: 2 C(M, 2) + 1 when M - 1 is a prime power, and
/// otherwise the same bound evaluated at the next prime power above M - 1
/// (the smallest saturating length is nondecreasing in M).
pub fn saturating_length_upper(size: u64) -> Result<u64> {
    if size < 2 {
        return Err(Error::OutOfRange("need at least 2 words".into()));
    }
    let s = if is_prime_power(size - 1) {
        size - 1
    } else {
        next_prime_power(size - 1)
    };
    let m = s + 1;
    Ok(2 * max_distances(m)? + 1)
}
