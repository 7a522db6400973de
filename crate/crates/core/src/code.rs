//! Linear [n, k]_q codes in column-multiset form, and their weight spectra.
//!
//! A code is stored as the multiset of its generator-matrix columns: one
//! entry per distinct column value together with a multiplicity. The weight
//! of a codeword uG depends only on which distinct columns u hits, so this
//! representation handles lengths in the millions at the cost of the number
//! of *distinct* columns.
//!
//! The spectrum enumerates one message per projective class (first nonzero
//! entry normalized to 1): scalar multiples of a codeword share its weight,
//! so these (q^k - 1)/(q - 1) representatives see every nonzero weight.
//! With the `parallel` feature the representative space is partitioned into
//! independent chunks and merged by set union.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on the number of projective representatives a spectrum
/// enumeration may visit. Beyond this the operation refuses rather than
/// silently running for hours.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;

/// A k-dimensional linear code over GF(q), stored as a column multiset.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    dimension: usize,
    /// Distinct columns (each a length-k vector of packed field elements),
    /// sorted, with positive multiplicities.
    columns: Vec<(Vec<u64>, u64)>,
    length: u64,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("q", &self.field.order())
            .field("k", &self.dimension)
            .field("n", &self.length)
            .field("distinct_columns", &self.columns.len())
            .finish()
    }
}

impl LinearCode {
    /// Builds a code from generator columns. Duplicate column values are
    /// aggregated; the result is sorted so equal codes compare equal.
    pub fn new(
        field: FieldSpec,
        dimension: usize,
        columns: impl IntoIterator<Item = (Vec<u64>, u64)>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::OutOfRange("dimension must be at least 1".into()));
        }
        let mut merged: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        let mut length = 0u64;
        for (col, mult) in columns {
            if col.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: col.len(),
                });
            }
            if let Some(&bad) = col.iter().find(|&&c| !field.contains(c)) {
                return Err(Error::OutOfRange(format!(
                    "column entry {bad} is not an element of GF({})",
                    field.order()
                )));
            }
            if mult == 0 {
                return Err(Error::PreconditionViolated(
                    "column multiplicity must be positive".into(),
                ));
            }
            length += mult;
            *merged.entry(col).or_insert(0) += mult;
        }
        if length == 0 {
            return Err(Error::OutOfRange("code length must be at least 1".into()));
        }
        Ok(LinearCode {
            field,
            dimension,
            columns: merged.into_iter().collect(),
            length,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn alphabet_size(&self) -> u64 {
        self.field.order()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    /// Distinct columns with multiplicities, in sorted order.
    pub fn columns(&self) -> &[(Vec<u64>, u64)] {
        &self.columns
    }

    /// Number of projective message classes, (q^k - 1)/(q - 1).
    pub fn projective_message_count(&self) -> u128 {
        let q = self.field.order() as u128;
        let mut total = 0u128;
        let mut pw = 1u128;
        for _ in 0..self.dimension {
            total += pw;
            pw = pw.saturating_mul(q);
        }
        total
    }

    /// Hamming weight of the codeword uG: the multiplicity-weighted count of
    /// columns not orthogonal to the message.
    pub fn weight_of_message(&self, message: &[u64]) -> Result<u64> {
        if message.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: message.len(),
            });
        }
        Ok(self.weight_unchecked(message))
    }

    fn weight_unchecked(&self, message: &[u64]) -> u64 {
        let mut w = 0u64;
        for (col, mult) in &self.columns {
            if self.field.dot(message, col) != 0 {
                w += mult;
            }
        }
        w
    }

    /// The sorted set of distinct nonzero codeword weights, under the
    /// default enumeration budget.
    pub fn weight_spectrum(&self) -> Result<WeightSpectrum> {
        self.weight_spectrum_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    pub fn weight_spectrum_with_budget(&self, budget: u64) -> Result<WeightSpectrum> {
        let reps = self.checked_rep_space(budget)?;
        #[cfg(feature = "parallel")]
        {
            // Fixed-size index chunks, each walked by the sequential inner
            // loop; the union of per-chunk sets is order-independent.
            const CHUNK: u64 = 1 << 12;
            let starts: Vec<u64> = (0..reps.total).step_by(CHUNK as usize).collect();
            let set = starts
                .par_iter()
                .map(|&lo| {
                    let hi = (lo + CHUNK).min(reps.total);
                    let mut msg = vec![0u64; self.dimension];
                    let mut acc = BTreeSet::new();
                    for i in lo..hi {
                        reps.decode(i, &mut msg);
                        acc.insert(self.weight_unchecked(&msg));
                    }
                    acc
                })
                .reduce(BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                });
            Ok(WeightSpectrum::from_set(set))
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(self.spectrum_seq_inner(&reps))
        }
    }

    /// Single-threaded spectrum enumeration. This is the fallback used when
    /// the crate is built without the `parallel` feature; it is public so
    /// the benchmarks can compare the two paths directly.
    pub fn weight_spectrum_seq(&self) -> Result<WeightSpectrum> {
        let reps = self.checked_rep_space(DEFAULT_ENUMERATION_BUDGET)?;
        Ok(self.spectrum_seq_inner(&reps))
    }

    fn spectrum_seq_inner(&self, reps: &RepSpace) -> WeightSpectrum {
        let mut set = BTreeSet::new();
        let mut msg = vec![0u64; self.dimension];
        for i in 0..reps.total {
            reps.decode(i, &mut msg);
            set.insert(self.weight_unchecked(&msg));
        }
        WeightSpectrum::from_set(set)
    }

    /// Size of the weight spectrum; the quantity maximized throughout this
    /// crate.
    pub fn num_distinct_weights(&self) -> Result<u64> {
        Ok(self.weight_spectrum()?.len() as u64)
    }

    /// Lengthens the code by `t` all-zero coordinates. The spectrum is
    /// unchanged.
    pub fn extend_with_zero_columns(&self, t: u64) -> Result<LinearCode> {
        if t == 0 {
            return Err(Error::PreconditionViolated(
                "zero-column extension requires t >= 1".into(),
            ));
        }
        let mut columns = self.columns.clone();
        let zero = vec![0u64; self.dimension];
        match columns.binary_search_by(|(c, _)| c.cmp(&zero)) {
            Ok(i) => columns[i].1 += t,
            Err(i) => columns.insert(i, (zero, t)),
        }
        Ok(LinearCode {
            field: self.field.clone(),
            dimension: self.dimension,
            columns,
            length: self.length + t,
        })
    }

    /// Rank over GF(q) of the matrix of distinct columns. Equals the stated
    /// dimension exactly when the generator rows are independent.
    pub fn rank(&self) -> usize {
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for (col, _) in &self.columns {
            let mut v = col.clone();
            for b in &basis {
                let lead = b.iter().position(|&x| x != 0).unwrap();
                if v[lead] != 0 {
                    // v -= (v[lead] / b[lead]) * b
                    let factor = self
                        .field
                        .div(v[lead], b[lead])
                        .expect("basis lead entries are nonzero");
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = self.field.sub(*vi, self.field.mul(factor, *bi));
                    }
                }
            }
            if v.iter().any(|&x| x != 0) {
                basis.push(v);
                if basis.len() == self.dimension {
                    break;
                }
            }
        }
        basis.len()
    }

    fn checked_rep_space(&self, budget: u64) -> Result<RepSpace> {
        let total = self.projective_message_count();
        if total > budget as u128 {
            return Err(Error::ResourceLimit {
                needed: total,
                budget: budget as u128,
            });
        }
        Ok(RepSpace::new(self.dimension, self.field.order(), total as u64))
    }
}

/// Indexable space of projective representatives: messages whose first
/// nonzero entry is 1, in lexicographic order.
struct RepSpace {
    dimension: usize,
    /// pow[i] = q^i; every entry is bounded by the (budget-checked) total.
    pow: Vec<u64>,
    total: u64,
}

impl RepSpace {
    fn new(dimension: usize, q: u64, total: u64) -> Self {
        let mut pow = Vec::with_capacity(dimension);
        let mut x = 1u64;
        for _ in 0..dimension {
            pow.push(x);
            x = x.saturating_mul(q);
        }
        RepSpace {
            dimension,
            pow,
            total,
        }
    }

    /// Writes the representative with the given index. Block j holds the
    /// messages whose first nonzero entry sits at position j; within a block
    /// the trailing entries run in lexicographic (big-endian) order.
    fn decode(&self, mut index: u64, out: &mut [u64]) {
        out.fill(0);
        for pivot in 0..self.dimension {
            let block = self.pow[self.dimension - 1 - pivot];
            if index < block {
                out[pivot] = 1;
                let mut rest = index;
                for pos in pivot + 1..self.dimension {
                    let place = self.pow[self.dimension - 1 - pos];
                    out[pos] = rest / place;
                    rest %= place;
                }
                return;
            }
            index -= block;
        }
        unreachable!("index beyond the representative space");
    }
}

/// Sorted set of distinct nonzero weights of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSpectrum {
    weights: Vec<u64>,
}

impl WeightSpectrum {
    pub fn from_set(set: BTreeSet<u64>) -> Self {
        WeightSpectrum {
            weights: set.into_iter().filter(|&w| w > 0).collect(),
        }
    }

    pub fn from_sorted(weights: Vec<u64>) -> Result<Self> {
        if weights.first() == Some(&0) || !weights.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::PreconditionViolated(
                "weights must be strictly increasing and positive".into(),
            ));
        }
        Ok(WeightSpectrum { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.weights.last().copied()
    }

    pub fn min(&self) -> Option<u64> {
        self.weights.first().copied()
    }

    pub fn contains(&self, w: u64) -> bool {
        self.weights.binary_search(&w).is_ok()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.weights.iter().copied()
    }
}

/// Wire format: `{"q": .., "k": .., "columns": [[[entries..], multiplicity], ..]}`
/// with entries packed as integers in `[0, q)` in the fixed basis order.
#[derive(Serialize, Deserialize)]
struct CodeRecord {
    q: u64,
    k: usize,
    columns: Vec<(Vec<u64>, u64)>,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CodeRecord {
            q: self.field.order(),
            k: self.dimension,
            columns: self.columns.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let record = CodeRecord::deserialize(deserializer)?;
        let field = FieldSpec::new(record.q).map_err(serde::de::Error::custom)?;
        LinearCode::new(field, record.k, record.columns).map_err(serde::de::Error::custom)
    }
}
