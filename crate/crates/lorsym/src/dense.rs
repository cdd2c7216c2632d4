//! Dense homogeneous polynomials with explicit exponent vectors, used by the
//! brute-force definitional tester and by cross-validation tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{factorial, parse_rat, rat_to_string, Rat};

/// A homogeneous polynomial in `nvars` variables of degree `degree`, stored as
/// a map from exponent vectors (length `nvars`, entries summing to `degree`)
/// to nonzero exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl DensePoly {
    /// Builds a polynomial, validating homogeneity and dropping zero terms.
    pub fn new(nvars: usize, degree: u32, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != nvars {
                return Err(Error::Invalid(format!(
                    "exponent vector {exp:?} has length {}, expected {nvars}",
                    exp.len()
                )));
            }
            let w: u32 = exp.iter().sum();
            if w != degree {
                return Err(Error::Invalid(format!(
                    "exponent vector {exp:?} has degree {w}, expected {degree} (inhomogeneous)"
                )));
            }
            *map.entry(exp).or_insert_with(Rat::zero) += coeff;
        }
        // Drop zero coefficients (including exact cancellations) so that the
        // stored support is the true support.
        map.retain(|_, c| !c.is_zero());
        Ok(Self {
            nvars,
            degree,
            terms: map,
        })
    }

    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    /// Coefficient of `x^exp` (zero when absent).
    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// The support as a sorted list of exponent vectors
    /// (descending lexicographic).
    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().rev().cloned().collect()
    }

    /// True when some coefficient is negative.
    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c < &Rat::zero())
    }

    /// Exact partial derivative `∂^alpha`, with the usual falling-factorial
    /// coefficients; the result is homogeneous of degree `d - |alpha|`.
    /// Errors when `|alpha| > degree` or the length mismatches.
    pub fn derivative(&self, alpha: &[u32]) -> Result<DensePoly> {
        if alpha.len() != self.nvars {
            return Err(Error::Invalid(format!(
                "derivative multi-index length {} != nvars {}",
                alpha.len(),
                self.nvars
            )));
        }
        let order: u32 = alpha.iter().sum();
        if order > self.degree {
            return Err(Error::Invalid(format!(
                "derivative order {order} exceeds degree {}",
                self.degree
            )));
        }
        let mut out = Vec::new();
        'term: for (exp, coeff) in &self.terms {
            let mut factor = Rat::from_integer(1.into());
            let mut new_exp = Vec::with_capacity(self.nvars);
            for i in 0..self.nvars {
                if exp[i] < alpha[i] {
                    continue 'term;
                }
                // β_i (β_i − 1) ⋯ (β_i − α_i + 1) = β_i! / (β_i − α_i)!
                let falling = factorial(exp[i]) / factorial(exp[i] - alpha[i]);
                factor *= Rat::from_integer(falling);
                new_exp.push(exp[i] - alpha[i]);
            }
            out.push((new_exp, coeff * factor));
        }
        DensePoly::new(self.nvars, self.degree - order, out)
    }

    /// Product of two polynomials over disjoint-or-equal variable sets of the
    /// same length.
    pub fn mul(&self, other: &DensePoly) -> Result<DensePoly> {
        if self.nvars != other.nvars {
            return Err(Error::Invalid(format!(
                "cannot multiply polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *out.entry(exp).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        DensePoly::new(self.nvars, self.degree + other.degree, out)
    }

    /// Sum; variable counts and degrees must agree.
    pub fn add(&self, other: &DensePoly) -> Result<DensePoly> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return Err(Error::Invalid(
                "sum requires equal variable counts and degrees".into(),
            ));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(Rat::zero) += c;
        }
        DensePoly::new(self.nvars, self.degree, terms)
    }

    /// Sets the last variable to zero and drops it, producing a polynomial in
    /// one fewer variable.
    pub fn restrict_last_to_zero(&self) -> Result<DensePoly> {
        if self.nvars == 0 {
            return Err(Error::Invalid("no variable to restrict".into()));
        }
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[self.nvars - 1] == 0)
            .map(|(e, c)| (e[..self.nvars - 1].to_vec(), c.clone()));
        DensePoly::new(self.nvars - 1, self.degree, terms.collect::<Vec<_>>())
    }

    /// Applies a permutation of the variables: variable `i` of the result is
    /// variable `perm[i]` of the input.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<DensePoly> {
        if perm.len() != self.nvars {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.nvars];
        for &p in perm {
            if p >= self.nvars || seen[p] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[p] = true;
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let exp: Vec<u32> = perm.iter().map(|&p| e[p]).collect();
            (exp, c.clone())
        });
        DensePoly::new(self.nvars, self.degree, terms.collect::<Vec<_>>())
    }

    /// JSON form `{"nvars": n, "degree": d, "terms": {"[2,0,1]": "1/2", …}}`
    /// with exponent keys in descending lexicographic order.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(s, "{{\"nvars\":{},\"degree\":{},\"terms\":{{", self.nvars, self.degree).unwrap();
        for (i, (exp, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let key: Vec<String> = exp.iter().map(|e| e.to_string()).collect();
            write!(s, "\"[{}]\":\"{}\"", key.join(","), rat_to_string(coeff)).unwrap();
        }
        s.push_str("}}");
        s
    }

    pub fn from_json(text: &str) -> Result<DensePoly> {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let nvars = obj
            .get("nvars")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing integer field \"nvars\"".into()))?
            as usize;
        let degree = obj
            .get("degree")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing integer field \"degree\"".into()))?
            as u32;
        let terms_obj = obj
            .get("terms")
            .and_then(|x| x.as_object())
            .ok_or_else(|| Error::Parse("missing object field \"terms\"".into()))?;
        let mut terms = Vec::new();
        for (key, val) in terms_obj {
            let inner = key
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("invalid exponent key {key:?}")))?;
            let exp: Result<Vec<u32>> = if inner.trim().is_empty() {
                Ok(Vec::new())
            } else {
                inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("invalid exponent key {key:?}")))
                    })
                    .collect()
            };
            let coeff = match val {
                serde_json::Value::String(s) => parse_rat(s)?,
                serde_json::Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}")))?;
                    Rat::from_integer(i.into())
                }
                other => return Err(Error::Parse(format!("invalid coefficient {other}"))),
            };
            terms.push((exp?, coeff));
        }
        DensePoly::new(nvars, degree, terms)
    }
}
