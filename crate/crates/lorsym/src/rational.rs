//! Exact rational arithmetic: parsing, formatting, factorials, binomials,
//! and an operation counter for the certified code path.

use std::cell::Cell;
use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type used throughout: an arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics if `d == 0`; intended for literals in tests and
/// internal constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `"p"` or `"p/q"` (optional sign on either part).
///
/// The result is reduced; a zero denominator is an error.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s.trim(), None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(numer, denom))
}

/// Canonical string form: `"p"` when the reduced denominator is 1, else
/// `"p/q"` with `q > 0`.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i; // exact at every step
    }
    acc
}

/// Counter for exact rational operations on the certified code path.
///
/// Each arithmetic method performs one rational operation and increments the
/// counter by one; comparisons count as one operation as well. The counter is
/// deliberately *not* shared across threads: parallel work gives each task its
/// own `Ops` and sums the counts afterwards, so totals are identical for the
/// parallel and sequential execution paths.
#[derive(Debug, Default)]
pub struct Ops {
    n: Cell<u64>,
}

impl Ops {
    pub fn new() -> Self {
        Self { n: Cell::new(0) }
    }

    /// Operations recorded so far.
    pub fn count(&self) -> u64 {
        self.n.get()
    }

    /// Add an externally accumulated count (e.g. from a parallel task).
    pub fn absorb(&self, extra: u64) {
        self.n.set(self.n.get() + extra);
    }

    fn bump(&self) {
        self.n.set(self.n.get() + 1);
    }

    pub fn add(&self, a: &Rat, b: &Rat) -> Rat {
        self.bump();
        a + b
    }

    pub fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        self.bump();
        a - b
    }

    pub fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        self.bump();
        a * b
    }

    /// Division; the caller guarantees `b != 0`.
    pub fn div(&self, a: &Rat, b: &Rat) -> Rat {
        self.bump();
        a / b
    }

    pub fn neg(&self, a: &Rat) -> Rat {
        self.bump();
        -a
    }

    pub fn cmp(&self, a: &Rat, b: &Rat) -> Ordering {
        self.bump();
        a.cmp(b)
    }

    /// Sign of `a` as a comparison against zero (one counted operation).
    pub fn sign(&self, a: &Rat) -> Ordering {
        self.bump();
        if a.is_positive() {
            Ordering::Greater
        } else if a.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}
