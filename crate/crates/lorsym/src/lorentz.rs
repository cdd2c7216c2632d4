//! The reduced membership test for Lorentzian symmetric polynomials and
//! symmetric functions, with machine-checkable certificates and a
//! deterministic operation count.
//!
//! The test works on normalized-monomial coefficients `c_λ` and checks, in
//! order: nonnegativity, a unique dominance-maximal support element,
//! monotonicity along dominance covers, and — for every partition `μ` of
//! `d − 2` — that a small reduced Hessian matrix has at most one positive
//! eigenvalue. The reduced matrix has one row per block of equal parts of `μ`
//! plus one row for the variables beyond the support of `μ`, so its size
//! depends on `d` alone: the variable count `n` enters the entries as a
//! rational value, never as a loop bound, which makes the operation count at
//! fixed degree independent of `n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{at_most_one_positive_eigenvalue, SymMatrix};
use crate::partitions::{block_structure, dominance_covers, dominance_leq, generate_partitions, Partition};
use crate::rational::{int, Ops, Rat};
use crate::symfunc::{convert_basis, Basis, SymPoly};

/// Interpretation of the input: a symmetric function (stable limit, formally
/// infinitely many variables) or a symmetric polynomial in exactly `n`
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Function,
    Polynomial(usize),
}

/// Which condition of the membership test failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// A negative coefficient.
    Nonneg,
    /// Support structure: no unique dominance-maximal element (reduced test)
    /// or an M-convexity / connectivity failure (definitional oracle).
    SupportM,
    /// A dominance cover pair with increasing coefficients.
    DominanceD,
    /// A reduced or full Hessian with two or more positive eigenvalues.
    HessianH,
}

impl FailureKind {
    pub fn tag(self) -> &'static str {
        match self {
            FailureKind::Nonneg => "nonneg",
            FailureKind::SupportM => "support-M",
            FailureKind::DominanceD => "dominance-D",
            FailureKind::HessianH => "hessian-H",
        }
    }
}

/// A concrete, independently checkable certificate of failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The first partition (descending lexicographic) with `c_λ < 0`.
    NegativeCoefficient { partition: Partition },
    /// Two incomparable dominance-maximal support elements.
    IncomparableMaxima { first: Partition, second: Partition },
    /// A cover `mu ⋖ lambda` with `c_lambda > c_mu`.
    CoverViolation { mu: Partition, lambda: Partition },
    /// A derivative partition `mu` and the 1-based principal index set of the
    /// reduced Hessian violating the signed-minor inequality.
    HessianMinor { mu: Partition, minor: Vec<usize> },
    /// An exchange-axiom failure: `x`, `y` in the support and a 1-based index
    /// `i` with `x_i > y_i` admitting no valid exchange.
    ExchangeFailure { x: Vec<u32>, y: Vec<u32>, index: usize },
    /// A derivative multi-index whose polynomial splits over disjoint
    /// variable sets; `component` is one part (1-based variables).
    Decomposable { alpha: Vec<u32>, component: Vec<usize> },
    /// A derivative multi-index and a violating principal index set of the
    /// full Hessian.
    CompositionMinor { alpha: Vec<u32>, minor: Vec<usize> },
}

impl Witness {
    fn write_json(&self, s: &mut String) {
        match self {
            Witness::NegativeCoefficient { partition } => {
                write!(s, "{{\"partition\":\"{partition}\"}}").unwrap();
            }
            Witness::IncomparableMaxima { first, second } => {
                write!(s, "{{\"maxima\":[\"{first}\",\"{second}\"]}}").unwrap();
            }
            Witness::CoverViolation { mu, lambda } => {
                write!(s, "{{\"mu\":\"{mu}\",\"lambda\":\"{lambda}\"}}").unwrap();
            }
            Witness::HessianMinor { mu, minor } => {
                write!(s, "{{\"mu\":\"{mu}\",\"minor\":{}}}", join_usize(minor)).unwrap();
            }
            Witness::ExchangeFailure { x, y, index } => {
                write!(
                    s,
                    "{{\"x\":{},\"y\":{},\"index\":{index}}}",
                    join_u32(x),
                    join_u32(y)
                )
                .unwrap();
            }
            Witness::Decomposable { alpha, component } => {
                write!(
                    s,
                    "{{\"alpha\":{},\"component\":{}}}",
                    join_u32(alpha),
                    join_usize(component)
                )
                .unwrap();
            }
            Witness::CompositionMinor { alpha, minor } => {
                write!(
                    s,
                    "{{\"alpha\":{},\"minor\":{}}}",
                    join_u32(alpha),
                    join_usize(minor)
                )
                .unwrap();
            }
        }
    }
}

fn join_u32(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn join_usize(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// A failed condition together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub witness: Witness,
}

/// Result of a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub lorentzian: bool,
    pub failure: Option<Failure>,
    /// Exact rational operations consumed on the certified path. Zero for the
    /// definitional oracle, which does not meter its arithmetic.
    pub op_count: u64,
}

impl Verdict {
    fn pass(op_count: u64) -> Self {
        Verdict {
            lorentzian: true,
            failure: None,
            op_count,
        }
    }

    fn fail(kind: FailureKind, witness: Witness, op_count: u64) -> Self {
        Verdict {
            lorentzian: false,
            failure: Some(Failure { kind, witness }),
            op_count,
        }
    }

    /// JSON form
    /// `{"lorentzian": bool, "failure": {"kind": "...", "witness": {...}} | null, "opCount": N}`.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(s, "{{\"lorentzian\":{},\"failure\":", self.lorentzian).unwrap();
        match &self.failure {
            None => s.push_str("null"),
            Some(f) => {
                write!(s, "{{\"kind\":\"{}\",\"witness\":", f.kind.tag()).unwrap();
                f.witness.write_json(&mut s);
                s.push('}');
            }
        }
        write!(s, ",\"opCount\":{}}}", self.op_count).unwrap();
        s
    }
}

/// The partition `mu + e_i + e_j` (0-based positions, possibly equal or
/// beyond the current length), resolved by sorting.
fn bump2(mu: &Partition, i: usize, j: usize) -> Partition {
    let len = mu.len().max(i + 1).max(j + 1);
    let mut parts: Vec<u32> = (0..len).map(|t| mu.part(t)).collect();
    parts[i] += 1;
    parts[j] += 1;
    Partition::from_exponents(&parts)
}

/// Trailing-block treatment for the reduced matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Trailing {
    /// Function mode: normalized tail row (`r_s`, `q` entries).
    Stable,
    /// Polynomial mode with the given tail size `n − k`; zero drops the tail
    /// row entirely.
    Finite(usize),
}

/// Builds the reduced Hessian for `mu` from normalized-monomial coefficients.
/// Every rational operation is counted on `ops`; the count is a function of
/// the block structure of `mu` alone.
fn reduced_matrix(
    coeffs: &BTreeMap<Partition, Rat>,
    mu: &Partition,
    trailing: Trailing,
    ops: &Ops,
) -> SymMatrix {
    let c = |i: usize, j: usize| -> Rat {
        coeffs
            .get(&bump2(mu, i, j))
            .cloned()
            .unwrap_or_else(|| Rat::from_integer(0.into()))
    };
    let k = mu.len();
    let bs = block_structure(mu, k).expect("k parts fit in k variables");
    let ell = bs.ell();
    let tail = match trailing {
        Trailing::Stable => 1,
        Trailing::Finite(0) => 0,
        Trailing::Finite(_) => 1,
    };
    let dim = ell + tail;
    let mut rows = vec![vec![Rat::from_integer(0.into()); dim]; dim];
    // Diagonal block entries: a_t = n_t (c_{μ+2e_{m_t}} + (n_t−1) c_{μ+e_{m_t}+e_{m_t+1}}).
    for t in 0..ell {
        let start = bs.starts[t] - 1; // 0-based first variable of block t
        let size = bs.sizes[t];
        let inner = if size >= 2 {
            let within = ops.mul(&int(size as i64 - 1), &c(start, start + 1));
            ops.add(&c(start, start), &within)
        } else {
            c(start, start)
        };
        rows[t][t] = ops.mul(&int(size as i64), &inner);
    }
    // Off-diagonal block entries: b_{s,t} = n_s n_t c_{μ+e_{m_s}+e_{m_t}}.
    for s in 0..ell {
        for t in (s + 1)..ell {
            let factor = (bs.sizes[s] * bs.sizes[t]) as i64;
            let v = ops.mul(&int(factor), &c(bs.starts[s] - 1, bs.starts[t] - 1));
            rows[s][t] = v.clone();
            rows[t][s] = v;
        }
    }
    if tail == 1 {
        match trailing {
            Trailing::Stable => {
                // r_s = n_s c_{μ+e_{m_s}+e_{k+1}}, q = c_{μ+e_{k+1}+e_{k+2}}.
                for s in 0..ell {
                    let v = ops.mul(&int(bs.sizes[s] as i64), &c(bs.starts[s] - 1, k));
                    rows[s][ell] = v.clone();
                    rows[ell][s] = v;
                }
                rows[ell][ell] = c(k, k + 1);
            }
            Trailing::Finite(tail_size) => {
                // The tail is block ℓ+1 of size n−k with part value zero:
                // off-diagonals (n−k) n_s c_{μ+e_{m_s}+e_{k+1}}, diagonal
                // (n−k)((n−k−1) c_{μ+e_{k+1}+e_{k+2}} + c_{μ+2e_{k+1}}).
                for s in 0..ell {
                    let factor = (bs.sizes[s] * tail_size) as i64;
                    let v = ops.mul(&int(factor), &c(bs.starts[s] - 1, k));
                    rows[s][ell] = v.clone();
                    rows[ell][s] = v;
                }
                let inner = if tail_size >= 2 {
                    let within = ops.mul(&int(tail_size as i64 - 1), &c(k, k + 1));
                    ops.add(&c(k, k), &within)
                } else {
                    c(k, k)
                };
                rows[ell][ell] = ops.mul(&int(tail_size as i64), &inner);
            }
        }
    }
    SymMatrix::new(rows).expect("constructed symmetric")
}

/// The reduced Hessian matrix for the derivative partition `mu`.
///
/// In function mode this is the `(ℓ+1) × (ℓ+1)` matrix `M(μ)` with one row
/// per block of equal parts of `μ` and a final row for the stable tail. In
/// polynomial mode the tail row carries the collapsed contribution of the
/// `n − k` variables beyond the support of `μ` and requires `n ≥ k + 2`.
pub fn reduced_hessian(f: &SymPoly, mu: &Partition, mode: Mode) -> Result<SymMatrix> {
    if f.degree() < 2 || mu.weight() != f.degree() - 2 {
        return Err(Error::Invalid(format!(
            "mu must be a partition of degree − 2 = {}, got {mu} of weight {}",
            f.degree().saturating_sub(2),
            mu.weight()
        )));
    }
    let tilde = convert_basis(f, Basis::MTilde);
    let k = mu.len();
    let ops = Ops::new();
    match mode {
        Mode::Function => Ok(reduced_matrix(tilde.coeffs(), mu, Trailing::Stable, &ops)),
        Mode::Polynomial(n) => {
            if n < k + 2 {
                return Err(Error::Invalid(format!("too few variables for {mu}")));
            }
            let visible = tilde.restrict_to_max_len(n);
            Ok(reduced_matrix(
                visible.coeffs(),
                mu,
                Trailing::Finite(n - k),
                &ops,
            ))
        }
    }
}

/// Dominance-maximal elements of a set of equal-weight partitions, in
/// descending lexicographic order.
fn dominance_maxima(support: &[Partition]) -> Vec<Partition> {
    support
        .iter()
        .filter(|lam| {
            !support.iter().any(|other| {
                *other != **lam && dominance_leq(lam, other).unwrap_or(false)
            })
        })
        .cloned()
        .collect()
}

/// Unique-dominance-maximum condition on the support of `f` (normalized
/// monomial coefficients assumed nonnegative). Returns the failing
/// incomparable pair of maximal elements, if any; an empty support is the
/// zero polynomial and an error.
pub fn check_support_m(f: &SymPoly) -> Result<(bool, Option<(Partition, Partition)>)> {
    let tilde = convert_basis(f, Basis::MTilde);
    let support = tilde.support();
    if support.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let maxima = dominance_maxima(&support);
    if maxima.len() <= 1 {
        Ok((true, None))
    } else {
        Ok((false, Some((maxima[0].clone(), maxima[1].clone()))))
    }
}

/// Cover-monotonicity condition: `c_mu ≥ c_lambda` for every dominance cover
/// `mu ⋖ lambda` (normalized monomial coefficients). Returns the first
/// failing cover in deterministic order (`lambda` descending lexicographic,
/// then its covers descending lexicographic).
pub fn check_dominance_d(f: &SymPoly) -> (bool, Option<(Partition, Partition)>) {
    let tilde = convert_basis(f, Basis::MTilde);
    let ops = Ops::new();
    check_dominance_d_counted(tilde.coeffs(), f.degree(), usize::MAX, &ops)
}

fn check_dominance_d_counted(
    coeffs: &BTreeMap<Partition, Rat>,
    degree: u32,
    max_len: usize,
    ops: &Ops,
) -> (bool, Option<(Partition, Partition)>) {
    let zero = Rat::from_integer(0.into());
    let lookup = |p: &Partition| coeffs.get(p).cloned().unwrap_or_else(|| zero.clone());
    let mut witness = None;
    for lambda in generate_partitions(degree) {
        if lambda.len() > max_len {
            continue;
        }
        for mu in dominance_covers(&lambda) {
            if mu.len() > max_len {
                continue;
            }
            let violated = ops.cmp(&lookup(&lambda), &lookup(&mu)) == Ordering::Greater;
            if violated && witness.is_none() {
                witness = Some((mu, lambda.clone()));
            }
        }
    }
    (witness.is_none(), witness)
}

/// Full membership test. Accepts any basis (converted internally to
/// normalized monomials) and checks, in order: coefficient nonnegativity, the
/// unique-maximum support condition, cover monotonicity, and the reduced
/// Hessian signature for every partition of `d − 2` in descending
/// lexicographic order. The first failure in this order is certified. In
/// polynomial mode, partitions with more than `n` parts vanish and are
/// excluded throughout; a polynomial whose visible support is empty is the
/// zero polynomial and an error.
///
/// Degrees 0 and 1 are Lorentzian exactly when the (nonzero) coefficients are
/// nonnegative.
pub fn is_lorentzian(f: &SymPoly, mode: Mode) -> Result<Verdict> {
    let d = f.degree();
    let tilde = convert_basis(f, Basis::MTilde);
    let visible = match mode {
        Mode::Function => tilde,
        Mode::Polynomial(0) => {
            return Err(Error::Invalid(
                "polynomial mode requires at least one variable".into(),
            ))
        }
        Mode::Polynomial(n) => tilde.restrict_to_max_len(n),
    };
    if visible.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let max_len = match mode {
        Mode::Function => usize::MAX,
        Mode::Polynomial(n) => n,
    };
    let ops = Ops::new();

    // Nonnegativity, first violation in descending lexicographic order.
    let mut negative = None;
    for (key, coeff) in visible.coeffs().iter().rev() {
        if ops.sign(coeff) == Ordering::Less && negative.is_none() {
            negative = Some(key.clone());
        }
    }
    if let Some(partition) = negative {
        return Ok(Verdict::fail(
            FailureKind::Nonneg,
            Witness::NegativeCoefficient { partition },
            ops.count(),
        ));
    }
    if d <= 1 {
        return Ok(Verdict::pass(ops.count()));
    }

    // Unique dominance-maximal support element.
    let maxima = dominance_maxima(&visible.support());
    if maxima.len() > 1 {
        return Ok(Verdict::fail(
            FailureKind::SupportM,
            Witness::IncomparableMaxima {
                first: maxima[0].clone(),
                second: maxima[1].clone(),
            },
            ops.count(),
        ));
    }

    // Monotonicity along dominance covers.
    let (ok, witness) = check_dominance_d_counted(visible.coeffs(), d, max_len, &ops);
    if !ok {
        let (mu, lambda) = witness.expect("failure carries witness");
        return Ok(Verdict::fail(
            FailureKind::DominanceD,
            Witness::CoverViolation { mu, lambda },
            ops.count(),
        ));
    }

    // Reduced Hessian signature for every µ of d − 2, in descending
    // lexicographic order. All matrices are evaluated (collect-then-select)
    // so the certificate and the operation count are independent of the
    // execution strategy.
    let mus: Vec<Partition> = generate_partitions(d - 2)
        .into_iter()
        .filter(|mu| mu.len() <= max_len)
        .collect();
    let coeffs = visible.coeffs().clone();
    let results: Vec<(u64, Option<Vec<usize>>)> = exec::map_collect(mus.clone(), move |mu| {
        let task_ops = Ops::new();
        let trailing = match mode {
            Mode::Function => Trailing::Stable,
            Mode::Polynomial(n) => Trailing::Finite(n - mu.len()),
        };
        let matrix = reduced_matrix(&coeffs, &mu, trailing, &task_ops);
        let verdict = at_most_one_positive_eigenvalue(&matrix, &task_ops)
            .expect("entries are nonnegative once coefficients are");
        (task_ops.count(), verdict.witness)
    });
    let mut first_failure: Option<(Partition, Vec<usize>)> = None;
    for (mu, (count, witness)) in mus.into_iter().zip(results) {
        ops.absorb(count);
        if first_failure.is_none() {
            if let Some(minor) = witness {
                first_failure = Some((mu, minor));
            }
        }
    }
    if let Some((mu, minor)) = first_failure {
        return Ok(Verdict::fail(
            FailureKind::HessianH,
            Witness::HessianMinor { mu, minor },
            ops.count(),
        ));
    }
    Ok(Verdict::pass(ops.count()))
}
