//! Exact symmetric matrices and the signed-principal-minor test for
//! "at most one positive eigenvalue".

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rational::{Ops, Rat};

/// A symmetric matrix of exact rationals, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<Rat>, // row-major
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// The principal submatrix on the 1-based index set `s` (sorted,
    /// duplicate-free, within bounds).
    fn submatrix(&self, s: &[usize]) -> Vec<Vec<Rat>> {
        s.iter()
            .map(|&i| s.iter().map(|&j| self.get(i - 1, j - 1).clone()).collect())
            .collect()
    }
}

/// Exact determinant of the principal submatrix of `a` on the 1-based index
/// set `s`. Errors on an empty or out-of-range set.
pub fn principal_minor(a: &SymMatrix, s: &[usize]) -> Result<Rat> {
    validate_index_set(a, s)?;
    let ops = Ops::new();
    Ok(det_counted(&a.submatrix(s), &ops))
}

fn validate_index_set(a: &SymMatrix, s: &[usize]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Invalid("index set must be nonempty".into()));
    }
    for w in s.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Invalid(format!(
                "index set must be strictly increasing, got {s:?}"
            )));
        }
    }
    if s[0] < 1 || *s.last().unwrap() > a.dim() {
        return Err(Error::Invalid(format!(
            "index set {s:?} out of range for dimension {}",
            a.dim()
        )));
    }
    Ok(())
}

/// Determinant by branch-free cofactor expansion along the first row.
///
/// Every multiplication and addition/subtraction is performed and counted
/// regardless of entry values, so the operation count is a function of the
/// dimension alone — this keeps certified operation counts independent of the
/// numeric content of the matrix.
fn det_counted(m: &[Vec<Rat>], ops: &Ops) -> Rat {
    let n = m.len();
    match n {
        0 => Rat::from_integer(1.into()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc: Option<Rat> = None;
            for j in 0..n {
                let minor: Vec<Vec<Rat>> = (1..n)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[r][c].clone())
                            .collect()
                    })
                    .collect();
                let term = ops.mul(&m[0][j], &det_counted(&minor, ops));
                acc = Some(match acc {
                    None => term,
                    Some(a) => {
                        if j % 2 == 1 {
                            ops.sub(&a, &term)
                        } else {
                            ops.add(&a, &term)
                        }
                    }
                });
            }
            acc.expect("n >= 2")
        }
    }
}

/// Outcome of the signed-minor test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorVerdict {
    /// True when the matrix has at most one positive eigenvalue.
    pub ok: bool,
    /// On failure, the smallest-cardinality (then lexicographically smallest)
    /// violating index set, 1-based.
    pub witness: Option<Vec<usize>>,
}

/// Signature test for an entrywise-nonnegative symmetric matrix: the matrix
/// has at most one positive eigenvalue if and only if
/// `(−1)^{|S|−1} · det(A[S]) ≥ 0` for every nonempty index set `S`.
///
/// All `2^dim − 1` minors are evaluated (no early exit) so the consumed
/// operation count depends only on the dimension; the witness reported is the
/// smallest-cardinality, then lexicographically smallest, violating set.
/// A negative entry violates the criterion's hypothesis and is an error.
pub fn at_most_one_positive_eigenvalue(a: &SymMatrix, ops: &Ops) -> Result<MinorVerdict> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if ops.sign(a.get(i, j)) == Ordering::Less {
                return Err(Error::NegativeEntry {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    let mut witness: Option<Vec<usize>> = None;
    for s in index_sets_by_cardinality_then_lex(a.dim()) {
        let det = det_counted(&a.submatrix(&s), ops);
        // Signed inequality: (−1)^{|S|−1} det ≥ 0, i.e. det ≥ 0 for odd |S|
        // and det ≤ 0 for even |S|.
        let sign = ops.sign(&det);
        let violated = if s.len() % 2 == 1 {
            sign == Ordering::Less
        } else {
            sign == Ordering::Greater
        };
        if violated && witness.is_none() {
            witness = Some(s);
        }
    }
    Ok(MinorVerdict {
        ok: witness.is_none(),
        witness,
    })
}

/// All nonempty subsets of `{1, …, n}`, ordered by cardinality and then
/// lexicographically.
fn index_sets_by_cardinality_then_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity((1usize << n).saturating_sub(1));
    for size in 1..=n {
        let mut current: Vec<usize> = (1..=size).collect();
        loop {
            out.push(current.clone());
            // Advance to the next k-combination in lexicographic order.
            let mut i = size;
            while i > 0 && current[i - 1] == n - size + i {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            current[i - 1] += 1;
            for j in i..size {
                current[j] = current[j - 1] + 1;
            }
        }
    }
    out
}
