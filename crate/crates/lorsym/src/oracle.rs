//! Brute-force membership oracle working directly on expanded polynomials,
//! plus the exchange-axiom and discrete-concavity checks it is built from.
//!
//! The oracle applies the definition verbatim: M-convexity of the support by
//! the exchange axiom over all ordered pairs, indecomposability of every
//! derivative of order at most `d − 2` via connectivity of the variable
//! co-occurrence graph, and the signed principal-minor test on the full
//! Hessian of every derivative of order exactly `d − 2`. It is meant for
//! desk-scale inputs and cross-validation; it meters no arithmetic
//! (`opCount` is always zero) and may stop at the first failure.

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::lorentz::{FailureKind, Verdict, Witness};
use crate::partitions::Partition;
use crate::rational::Rat;
use crate::symfunc::{convert_basis, distinct_permutations, Basis, SymPoly};

fn verdict_pass() -> Verdict {
    Verdict {
        lorentzian: true,
        failure: None,
        op_count: 0,
    }
}

fn verdict_fail(kind: FailureKind, witness: Witness) -> Verdict {
    Verdict {
        lorentzian: false,
        failure: Some(crate::lorentz::Failure { kind, witness }),
        op_count: 0,
    }
}

/// All exponent vectors of the given total in `nvars` variables, in
/// descending lexicographic order.
pub fn compositions(total: u32, nvars: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if slots == 1 {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=remaining).rev() {
            cur.push(v);
            rec(remaining - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(nvars);
    rec(total, nvars, &mut cur, &mut out);
    out
}

/// Exchange axiom over all ordered support pairs: for every `x`, `y` in the
/// set and every index `i` with `x_i > y_i` there must be a `j` with
/// `x_j < y_j` such that both `x − e_i + e_j` and `y + e_i − e_j` stay in the
/// set. Returns the first failing `(x, y, i)` (pairs in descending
/// lexicographic order, `i` ascending, 1-based) as witness.
pub fn is_m_convex(support: &[Vec<u32>]) -> Result<(bool, Option<(Vec<u32>, Vec<u32>, usize)>)> {
    if support.is_empty() {
        return Ok((true, None));
    }
    let len = support[0].len();
    let weight: u32 = support[0].iter().sum();
    for v in support {
        if v.len() != len || v.iter().sum::<u32>() != weight {
            return Err(Error::Invalid(
                "exchange axiom requires equal-length, equal-weight vectors".into(),
            ));
        }
    }
    let mut sorted: Vec<Vec<u32>> = support.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    let set: HashSet<&[u32]> = sorted.iter().map(|v| v.as_slice()).collect();
    for x in &sorted {
        for y in &sorted {
            if x == y {
                continue;
            }
            for i in 0..len {
                if x[i] <= y[i] {
                    continue;
                }
                let mut found = false;
                for j in 0..len {
                    if x[j] >= y[j] {
                        continue;
                    }
                    let mut xm = x.clone();
                    xm[i] -= 1;
                    xm[j] += 1;
                    if !set.contains(xm.as_slice()) {
                        continue;
                    }
                    let mut ym = y.clone();
                    ym[i] += 1;
                    ym[j] -= 1;
                    if set.contains(ym.as_slice()) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Ok((false, Some((x.clone(), y.clone(), i + 1))));
                }
            }
        }
    }
    Ok((true, None))
}

/// If the variables appearing in `h` split into two or more co-occurrence
/// components, returns the component (sorted, 1-based) containing the
/// smallest active variable; `None` when `h` is indecomposable or zero.
pub(crate) fn indecomposable_component(h: &DensePoly) -> Option<Vec<usize>> {
    let n = h.nvars();
    let mut active: BTreeSet<usize> = BTreeSet::new();
    let mut adjacent: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for exp in h.terms().keys() {
        let vars: Vec<usize> = (0..n).filter(|&v| exp[v] > 0).collect();
        for &v in &vars {
            active.insert(v);
        }
        for a in 0..vars.len() {
            for b in (a + 1)..vars.len() {
                adjacent[vars[a]].insert(vars[b]);
                adjacent[vars[b]].insert(vars[a]);
            }
        }
    }
    let &start = active.iter().next()?;
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut queue = vec![start];
    seen.insert(start);
    while let Some(v) = queue.pop() {
        for &w in &adjacent[v] {
            if seen.insert(w) {
                queue.push(w);
            }
        }
    }
    if seen.len() == active.len() {
        None
    } else {
        Some(seen.into_iter().map(|v| v + 1).collect())
    }
}

/// Exact determinant by fraction-free-style Gaussian elimination with row
/// pivoting (uncounted; the oracle does not meter arithmetic).
fn det_gaussian(mut rows: Vec<Vec<Rat>>) -> Rat {
    let n = rows.len();
    let mut det = Rat::from_integer(1.into());
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        det *= rows[col][col].clone();
        let inverse_pivot = rows[col][col].clone();
        for r in (col + 1)..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inverse_pivot;
            for c in col..n {
                let sub = &rows[col][c] * &factor;
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
    }
    det
}

/// All `k`-element index subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Signed principal-minor test with early exit: returns the first index set
/// (smallest cardinality, then lexicographic, 1-based) whose signed minor is
/// negative, or `None` when the matrix has at most one positive eigenvalue.
fn first_violating_minor(a: &SymMatrix) -> Option<Vec<usize>> {
    let n = a.dim();
    for card in 1..=n {
        for indices in combinations(n, card) {
            let rows: Vec<Vec<Rat>> = indices
                .iter()
                .map(|&r| indices.iter().map(|&c| a.get(r, c).clone()).collect())
                .collect();
            let det = det_gaussian(rows);
            let bad = if card % 2 == 1 {
                det < Rat::zero()
            } else {
                det > Rat::zero()
            };
            if bad {
                return Some(indices.iter().map(|&i| i + 1).collect());
            }
        }
    }
    None
}

/// The Hessian of `∂^α g` (a quadratic form when `|α| = d − 2`), as an
/// `n × n` symmetric matrix of exact rationals.
pub fn hessian_of_derivative(g: &DensePoly, alpha: &[u32]) -> Result<SymMatrix> {
    let order: u32 = alpha.iter().sum();
    if g.degree() < 2 || order != g.degree() - 2 {
        return Err(Error::Invalid(format!(
            "derivative order {} must equal degree − 2 = {}",
            order,
            g.degree().saturating_sub(2)
        )));
    }
    let h = g.derivative(alpha)?;
    let n = g.nvars();
    let two = Rat::from_integer(2.into());
    let mut rows = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut exp = vec![0u32; n];
            exp[i] += 1;
            exp[j] += 1;
            let c = h.coeff(&exp);
            let value = if i == j { &c * &two } else { c };
            rows[i][j] = value.clone();
            rows[j][i] = value;
        }
    }
    SymMatrix::new(rows)
}

/// Definitional membership oracle on an expanded polynomial: support
/// M-convexity, indecomposability of all derivatives of order `≤ d − 2`, and
/// the at-most-one-positive-eigenvalue condition on the Hessian of every
/// derivative of order exactly `d − 2`. Stops at the first failure; the
/// operation count is always zero.
pub fn oracle_is_lorentzian(g: &DensePoly) -> Result<Verdict> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.has_negative_coeff() {
        return Err(Error::Invalid(
            "oracle requires non-negative coefficients".into(),
        ));
    }
    let support = g.support();
    let (convex, witness) = is_m_convex(&support)?;
    if !convex {
        let (x, y, index) = witness.expect("failure carries witness");
        return Ok(verdict_fail(
            FailureKind::SupportM,
            Witness::ExchangeFailure { x, y, index },
        ));
    }
    let d = g.degree();
    if d < 2 {
        return Ok(verdict_pass());
    }
    for order in 0..=(d - 2) {
        for alpha in compositions(order, g.nvars()) {
            let h = g.derivative(&alpha)?;
            if h.is_zero() {
                continue;
            }
            if let Some(component) = indecomposable_component(&h) {
                return Ok(verdict_fail(
                    FailureKind::SupportM,
                    Witness::Decomposable { alpha, component },
                ));
            }
        }
    }
    for alpha in compositions(d - 2, g.nvars()) {
        let hessian = hessian_of_derivative(g, &alpha)?;
        if let Some(minor) = first_violating_minor(&hessian) {
            return Ok(verdict_fail(
                FailureKind::HessianH,
                Witness::CompositionMinor { alpha, minor },
            ));
        }
    }
    Ok(verdict_pass())
}

/// Discrete log-concavity of normalized-monomial coefficients along exchange
/// moves: for all support vectors `α`, `β` (in `n` variables) and every `i`
/// with `α_i > β_i`, requires
/// `c_α c_β ≤ max_j c_{α−e_i+e_j} c_{β+e_i−e_j}` over `j` with `α_j < β_j`,
/// products compared exactly. Returns the first failing `(α, β, i)` (pairs in
/// descending lexicographic order, `i` ascending, 1-based). The support must
/// be M-convex and the coefficients positive.
pub fn is_nu_m_concave(
    f: &SymPoly,
    n: usize,
) -> Result<(bool, Option<(Vec<u32>, Vec<u32>, usize)>)> {
    let tilde = convert_basis(f, Basis::MTilde);
    let visible = tilde.restrict_to_max_len(n);
    if visible.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut support: Vec<Vec<u32>> = Vec::new();
    for (key, coeff) in visible.coeffs() {
        if *coeff < Rat::zero() {
            return Err(Error::Invalid(
                "concavity check requires positive coefficients".into(),
            ));
        }
        let padded = key.padded(n).expect("visible keys fit");
        support.extend(distinct_permutations(&padded));
    }
    let (convex, _) = is_m_convex(&support)?;
    if !convex {
        return Err(Error::SupportNotMConvex);
    }
    support.sort_unstable_by(|a, b| b.cmp(a));
    let c = |v: &[u32]| visible.coeff(&Partition::from_exponents(v));
    for alpha in &support {
        for beta in &support {
            if alpha == beta {
                continue;
            }
            let mut lhs: Option<Rat> = None;
            for i in 0..n {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let lhs = lhs.get_or_insert_with(|| c(alpha) * c(beta));
                let mut best: Option<Rat> = None;
                for j in 0..n {
                    if alpha[j] >= beta[j] {
                        continue;
                    }
                    let mut am = alpha.clone();
                    am[i] -= 1;
                    am[j] += 1;
                    let mut bm = beta.clone();
                    bm[i] += 1;
                    bm[j] -= 1;
                    let product = c(&am) * c(&bm);
                    best = Some(match best {
                        None => product,
                        Some(b) if product > b => product,
                        Some(b) => b,
                    });
                }
                let best = best.expect("equal weight guarantees a receiving index");
                if *lhs > best {
                    return Ok((false, Some((alpha.clone(), beta.clone(), i + 1))));
                }
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{is_lorentzian, Mode};
    use crate::rational::{int, rat};
    use crate::symfunc::expand;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mtilde(degree: u32, coeffs: &[(&[u32], Rat)]) -> SymPoly {
        SymPoly::new(
            degree,
            Basis::MTilde,
            coeffs.iter().map(|(k, c)| (p(k), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn elementary_cubic_is_lorentzian() {
        let g = DensePoly::new(3, 3, vec![(vec![1, 1, 1], int(1))]).unwrap();
        let v = oracle_is_lorentzian(&g).unwrap();
        assert!(v.lorentzian);
        assert_eq!(v.op_count, 0);
    }

    #[test]
    fn sum_of_squares_fails_exchange() {
        let g = DensePoly::new(2, 2, vec![(vec![2, 0], int(1)), (vec![0, 2], int(1))]).unwrap();
        let v = oracle_is_lorentzian(&g).unwrap();
        assert!(!v.lorentzian);
        let failure = v.failure.unwrap();
        assert_eq!(failure.kind, FailureKind::SupportM);
        assert_eq!(
            failure.witness,
            Witness::ExchangeFailure {
                x: vec![2, 0],
                y: vec![0, 2],
                index: 1
            }
        );
    }

    #[test]
    fn worked_quartic_passes_oracle_at_four_variables() {
        let f = mtilde(4, &[(&[2, 1, 1], int(1)), (&[1, 1, 1, 1], int(1))]);
        let g = expand(&f, 4).unwrap();
        assert!(oracle_is_lorentzian(&g).unwrap().lorentzian);
    }

    #[test]
    fn oracle_matches_reduced_test_on_variable_count_boundary() {
        let f = mtilde(
            4,
            &[
                (&[4], int(1)),
                (&[3, 1], int(2)),
                (&[2, 2], int(2)),
                (&[2, 1, 1], int(5)),
                (&[1, 1, 1, 1], int(5)),
            ],
        );
        assert!(oracle_is_lorentzian(&expand(&f, 4).unwrap())
            .unwrap()
            .lorentzian);
        let at5 = oracle_is_lorentzian(&expand(&f, 5).unwrap()).unwrap();
        assert!(!at5.lorentzian);
        let failure = at5.failure.unwrap();
        assert_eq!(failure.kind, FailureKind::HessianH);
        match failure.witness {
            Witness::CompositionMinor { alpha, .. } => assert_eq!(alpha, vec![2, 0, 0, 0, 0]),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn exchange_axiom_examples() {
        // Integer points of the permutohedron of (2, 1, 0).
        let mut points = distinct_permutations(&[2, 1, 0]);
        points.push(vec![1, 1, 1]);
        assert_eq!(is_m_convex(&points).unwrap(), (true, None));

        let (ok, witness) = is_m_convex(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some((vec![2, 0], vec![0, 2], 1)));

        let ns = SymPoly::new(3, Basis::Ns, vec![(p(&[2, 1]), int(1))]).unwrap();
        let support = expand(&ns, 3).unwrap().support();
        assert_eq!(is_m_convex(&support).unwrap(), (true, None));

        assert!(is_m_convex(&[vec![1, 0], vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn decomposable_component_extraction() {
        let g = DensePoly::new(3, 2, vec![(vec![2, 0, 0], int(1)), (vec![0, 1, 1], int(1))]).unwrap();
        assert_eq!(indecomposable_component(&g), Some(vec![1]));
        let connected =
            DensePoly::new(3, 2, vec![(vec![1, 1, 0], int(1)), (vec![0, 1, 1], int(1))]).unwrap();
        assert_eq!(indecomposable_component(&connected), None);
    }

    #[test]
    fn hessian_of_derivative_base_case() {
        // (x² + y²)/2 + xy at α = (0,0) has Hessian [[1,1],[1,1]].
        let f = mtilde(2, &[(&[2], int(1)), (&[1, 1], int(1))]);
        let g = expand(&f, 2).unwrap();
        let h = hessian_of_derivative(&g, &[0, 0]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(*h.get(i, j), int(1));
            }
        }
        assert!(oracle_is_lorentzian(&g).unwrap().lorentzian);
        assert!(hessian_of_derivative(&g, &[1, 0]).is_err());
    }

    #[test]
    fn concavity_fails_on_the_boundary_quartic() {
        let f = mtilde(
            4,
            &[
                (&[4], rat(1, 256)),
                (&[3, 1], rat(1, 16)),
                (&[2, 2], rat(3, 8)),
                (&[2, 1, 1], rat(1, 2)),
                (&[1, 1, 1, 1], int(1)),
            ],
        );
        let (ok, witness) = is_nu_m_concave(&f, 4).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some((vec![2, 2, 0, 0], vec![1, 1, 1, 1], 1)));
    }

    #[test]
    fn concavity_holds_for_elementary_quadratic() {
        let f = mtilde(2, &[(&[1, 1], int(1))]);
        assert_eq!(is_nu_m_concave(&f, 3).unwrap(), (true, None));
        let squares = mtilde(2, &[(&[2], int(2))]);
        assert_eq!(
            is_nu_m_concave(&squares, 2).unwrap_err(),
            Error::SupportNotMConvex
        );
    }

    #[test]
    fn oracle_and_reduced_test_agree_on_random_cubics() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let coeffs: Vec<(&[u32], Rat)> = vec![
                (&[3][..], int(rng.gen_range(0..4))),
                (&[2, 1][..], int(rng.gen_range(0..4))),
                (&[1, 1, 1][..], int(rng.gen_range(0..4))),
            ];
            let f = mtilde(3, &coeffs);
            let tilde = f.restrict_to_max_len(3);
            if tilde.is_zero() {
                continue;
            }
            let reduced = is_lorentzian(&f, Mode::Polynomial(3)).unwrap();
            let oracle = oracle_is_lorentzian(&expand(&f, 3).unwrap()).unwrap();
            assert_eq!(reduced.lorentzian, oracle.lorentzian, "{f:?}");
        }
    }

    #[test]
    fn gaussian_determinant_matches_cofactor_expansion() {
        let rows = vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), int(1)],
            vec![int(0), int(1), int(4)],
        ];
        let m = SymMatrix::new(rows.clone()).unwrap();
        let via_minor = crate::linalg::principal_minor(&m, &[1, 2, 3]).unwrap();
        assert_eq!(det_gaussian(rows), via_minor);
    }

    #[test]
    fn minor_scan_agrees_with_counted_criterion() {
        let ops = crate::rational::Ops::new();
        for rows in [
            vec![vec![int(1), int(2)], vec![int(2), int(1)]],
            vec![vec![int(2), int(1)], vec![int(1), int(2)]],
            vec![
                vec![int(1), int(1), int(1)],
                vec![int(1), int(1), int(1)],
                vec![int(1), int(1), int(1)],
            ],
            vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)],
            ],
        ] {
            let m = SymMatrix::new(rows).unwrap();
            let counted = crate::linalg::at_most_one_positive_eigenvalue(&m, &ops).unwrap();
            let scanned = first_violating_minor(&m);
            assert_eq!(counted.ok, scanned.is_none());
            assert_eq!(counted.witness, scanned);
        }
    }
}
