//! Integer partitions, dominance order, covers, conjugation, block structure,
//! and permutohedron membership.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// An integer partition: a weakly decreasing list of positive parts.
///
/// The empty partition (of 0) is allowed. Trailing zeros in the input are
/// stripped by the constructor; any other violation of weak decrease is an
/// error. Textual form is `"[3,1,1]"` (empty: `"[]"`), which is also the JSON
/// key format used for coefficient maps.
///
/// `Ord` is lexicographic on the part lists. Partitions of equal weight are
/// never prefixes of one another, so within one degree this is the standard
/// lexicographic order on partitions; iterating a sorted collection in
/// *descending* order visits partitions in the order
/// [`generate_partitions`] emits them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease and strips trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts an arbitrary exponent vector into a partition (zeros dropped).
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part at 0-based index `i`, or 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let mut cols = Vec::with_capacity(first);
        for j in 1..=first {
            cols.push(self.0.iter().filter(|&&p| p >= j as u32).count() as u32);
        }
        Partition(cols)
    }

    /// Product of the factorials of the parts.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// The exponent vector padded with zeros to length `n`.
    /// Errors when the partition has more than `n` parts.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::TooFewVariables {
                needed: self.len(),
                given: n,
            });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[3,1,1]"` (whitespace tolerated) or a bare comma list `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid partition {s:?}")))
            })
            .collect();
        Partition::new(parts?)
    }
}

/// All partitions of `d`, in descending lexicographic order
/// (`[d]` first, `[1,1,...,1]` last). `d = 0` yields the empty partition.
pub fn generate_partitions(d: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let top = max_part.min(remaining);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `max_len` parts, in the same order as
/// [`generate_partitions`].
pub fn generate_partitions_max_len(d: u32, max_len: usize) -> Vec<Partition> {
    generate_partitions(d)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Dominance comparison `mu ⊴ lambda` between partitions of equal weight:
/// every prefix sum of `mu` is at most the corresponding prefix sum of
/// `lambda`. Different weights are incomparable and an error.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::IncomparableWeights);
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0u64, 0u64);
    for i in 0..len {
        sm += mu.part(i) as u64;
        sl += lambda.part(i) as u64;
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The partitions covered by `lambda` in dominance order (the immediate
/// lower neighbours), in descending lexicographic order.
///
/// A cover is obtained by moving one box from row `i` to a lower row `k`
/// (possibly a new row) such that the result `mu` is a partition and either
/// the two changed parts become equal (`mu_i == mu_k`) or the rows are
/// adjacent (`k == i + 1`).
pub fn dominance_covers(lambda: &Partition) -> Vec<Partition> {
    let l = lambda.len();
    let mut found = BTreeSet::new();
    for i in 0..l {
        for k in (i + 1)..=l {
            // k == l denotes a new row below the diagram.
            let mut parts = lambda.0.clone();
            if k == l {
                parts.push(0);
            }
            if parts[i] == 0 {
                continue;
            }
            parts[i] -= 1;
            parts[k] += 1;
            if parts.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let cover = parts[i] == parts[k] || k == i + 1;
            if cover {
                found.insert(Partition::new(parts).expect("validated above"));
            }
        }
    }
    found.into_iter().rev().collect()
}

/// Block structure of a partition viewed in `n` variables.
///
/// The parts of `mu` group into `ell` maximal blocks of equal value;
/// `values[t]`, `sizes[t]`, and `starts[t]` give each block's value, length,
/// and 1-based starting position. `trailing = n - len(mu)` counts the
/// variables beyond the support of `mu`. Errors when `n < len(mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub values: Vec<u32>,
    pub sizes: Vec<usize>,
    pub starts: Vec<usize>,
    pub trailing: usize,
}

impl BlockStructure {
    /// Number of distinct part values.
    pub fn ell(&self) -> usize {
        self.values.len()
    }
}

pub fn block_structure(mu: &Partition, n: usize) -> Result<BlockStructure> {
    if n < mu.len() {
        return Err(Error::TooFewVariables {
            needed: mu.len(),
            given: n,
        });
    }
    let mut values = Vec::new();
    let mut sizes = Vec::new();
    let mut starts = Vec::new();
    let mut i = 0;
    while i < mu.len() {
        let v = mu.part(i);
        let start = i;
        while i < mu.len() && mu.part(i) == v {
            i += 1;
        }
        values.push(v);
        sizes.push(i - start);
        starts.push(start + 1);
    }
    Ok(BlockStructure {
        values,
        sizes,
        starts,
        trailing: n - mu.len(),
    })
}

/// Whether the nonnegative vector `alpha` lies in the permutohedron of
/// `lambda`: the weights agree and every nonempty subset `S` of positions
/// satisfies `sum_{i in S} alpha_i <= lambda_1 + ... + lambda_{|S|}`.
///
/// The subset condition is checked literally over all `2^len(alpha) - 1`
/// subsets; intended for small dimensions.
pub fn permutohedron_contains(lambda: &Partition, alpha: &[u32]) -> bool {
    let weight: u64 = alpha.iter().map(|&a| a as u64).sum();
    if weight != lambda.weight() as u64 {
        return false;
    }
    let n = alpha.len();
    let mut lambda_prefix = vec![0u64; n + 1];
    for i in 0..n {
        lambda_prefix[i + 1] = lambda_prefix[i] + lambda.part(i) as u64;
    }
    for mask in 1u64..(1u64 << n) {
        let mut sum = 0u64;
        let mut size = 0usize;
        for (i, &a) in alpha.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum += a as u64;
                size += 1;
            }
        }
        if sum > lambda_prefix[size] {
            return false;
        }
    }
    true
}
