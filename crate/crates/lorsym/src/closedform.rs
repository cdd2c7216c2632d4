//! Direct semialgebraic membership predicates for degrees 2 through 6.
//!
//! Each predicate evaluates a fixed, explicitly written system of
//! inequalities on normalized-monomial coefficients and reports the first
//! violated inequality by name. The systems are implemented literally — no
//! re-derivation — precisely so they can cross-validate the general
//! reduced-Hessian tester. Coefficients are named `a, b, c, …` in descending
//! lexicographic order of the indexing partitions; an all-zero input is
//! rejected as the zero polynomial.
//!
//! Degree conventions differ by theorem and are kept as printed: the cubic
//! system with parameter `n` describes polynomials in `n + 1` variables,
//! while the quartic system's `n` is the variable count itself. Degrees 5
//! and 6 are provided in function (stable-limit) form only; polynomial-mode
//! queries at those degrees route to the general tester.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{at_most_one_positive_eigenvalue, SymMatrix};
use crate::lorentz::{is_lorentzian, Mode};
use crate::partitions::{dominance_covers, generate_partitions, Partition};
use crate::rational::{int, Ops, Rat};
use crate::symfunc::{convert_basis, Basis, SymPoly};

/// Verdict of a closed-form membership predicate: either a member of the
/// region, or the name of the first violated inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionVerdict {
    pub member: bool,
    pub failed_inequality: Option<String>,
}

impl RegionVerdict {
    fn member() -> Self {
        RegionVerdict {
            member: true,
            failed_inequality: None,
        }
    }

    fn fail(tag: &str) -> Self {
        RegionVerdict {
            member: false,
            failed_inequality: Some(tag.to_string()),
        }
    }
}

fn all_zero(values: &[&Rat]) -> bool {
    values.iter().all(|v| v.is_zero())
}

/// First violated link of the chain `0 ≤ v₁ ≤ v₂ ≤ …`, with `names` giving
/// the coefficient letters.
fn chain(values: &[&Rat], names: &[&str]) -> Option<String> {
    if *values[0] < Rat::zero() {
        return Some(format!("0 <= {}", names[0]));
    }
    for i in 1..values.len() {
        if values[i] < values[i - 1] {
            return Some(format!("{} <= {}", names[i - 1], names[i]));
        }
    }
    None
}

/// Degree-2 region: `0 ≤ a ≤ b`, not both zero. The printed condition is the
/// same in function mode and in polynomial mode with at least two variables,
/// so the mode does not enter the predicate.
pub fn degree2(a: &Rat, b: &Rat, mode: Mode) -> RegionVerdict {
    let _ = mode;
    if all_zero(&[a, b]) {
        return RegionVerdict::fail("zero polynomial");
    }
    match chain(&[a, b], &["a", "b"]) {
        Some(tag) => RegionVerdict::fail(&tag),
        None => RegionVerdict::member(),
    }
}

/// Degree-3 region on coefficients `(a, b, c)` of `(m̃_3, m̃_21, m̃_111)`:
/// the chain `0 ≤ a ≤ b ≤ c` plus the mode's quadratic inequality —
/// `ab + (n−1)ac ≤ nb²` for a polynomial in `n + 1` variables (the printed
/// system's parameter `n` requires `n ≥ 2`), or its limit `ac ≤ b²` for a
/// symmetric function.
pub fn degree3(a: &Rat, b: &Rat, c: &Rat, mode: Mode) -> RegionVerdict {
    if all_zero(&[a, b, c]) {
        return RegionVerdict::fail("zero polynomial");
    }
    if let Some(tag) = chain(&[a, b, c], &["a", "b", "c"]) {
        return RegionVerdict::fail(&tag);
    }
    match mode {
        Mode::Function => {
            if a * c > b * b {
                return RegionVerdict::fail("ac <= b^2");
            }
        }
        Mode::Polynomial(n) => {
            let n = int(n as i64);
            if a * b + (&n - int(1)) * a * c > &n * b * b {
                return RegionVerdict::fail("ab + (n-1)ac <= nb^2");
            }
        }
    }
    RegionVerdict::member()
}

/// Degree-3 region in normalized-Schur coordinates `(a, b, c)` of
/// `(Ns_3, Ns_21, Ns_111)`: `a, b, b + c ≥ 0` and
/// `ac − (1/n)a(b + c) ≤ b²`, for the same parameter `n ≥ 2` as [`degree3`]
/// (the polynomial lives in `n + 1` variables). Agrees with [`degree3`]
/// after the basis conversion `(a, b, c) ↦ (a, a+b, a+2b+c)`.
pub fn degree3_nschur(a: &Rat, b: &Rat, c: &Rat, n: usize) -> RegionVerdict {
    if all_zero(&[a, b, c]) {
        return RegionVerdict::fail("zero polynomial");
    }
    if *a < Rat::zero() {
        return RegionVerdict::fail("a >= 0");
    }
    if *b < Rat::zero() {
        return RegionVerdict::fail("b >= 0");
    }
    if b + c < Rat::zero() {
        return RegionVerdict::fail("b + c >= 0");
    }
    let inv_n = Rat::new(1.into(), (n as i64).into());
    if a * c - inv_n * a * (b + c) > b * b {
        return RegionVerdict::fail("ac - (1/n)a(b+c) <= b^2");
    }
    RegionVerdict::member()
}

/// Degree-4 region on coefficients `(a, b, c, d, e)` of
/// `(m̃_4, m̃_31, m̃_22, m̃_211, m̃_1111)`: the chain `0 ≤ a ≤ … ≤ e` plus
/// two quadratics — in `n ≥ 4` variables `a(c + (n−2)d) ≤ (n−1)b²` and
/// `(b+c)(d + (n−3)e) ≤ 2(n−2)d²`, or their stable limits `ad ≤ b²` and
/// `(b+c)e ≤ 2d²` in function mode.
pub fn degree4(a: &Rat, b: &Rat, c: &Rat, d: &Rat, e: &Rat, mode: Mode) -> RegionVerdict {
    if all_zero(&[a, b, c, d, e]) {
        return RegionVerdict::fail("zero polynomial");
    }
    if let Some(tag) = chain(&[a, b, c, d, e], &["a", "b", "c", "d", "e"]) {
        return RegionVerdict::fail(&tag);
    }
    match mode {
        Mode::Function => {
            if a * d > b * b {
                return RegionVerdict::fail("ad <= b^2");
            }
            if (b + c) * e > int(2) * d * d {
                return RegionVerdict::fail("(b+c)e <= 2d^2");
            }
        }
        Mode::Polynomial(n) => {
            let n = int(n as i64);
            if a * (c + (&n - int(2)) * d) > (&n - int(1)) * b * b {
                return RegionVerdict::fail("a(c + (n-2)d) <= (n-1)b^2");
            }
            if (b + c) * (d + (&n - int(3)) * e) > int(2) * (&n - int(2)) * d * d {
                return RegionVerdict::fail("(b+c)(d + (n-3)e) <= 2(n-2)d^2");
            }
        }
    }
    RegionVerdict::member()
}

/// Degree-5 function-mode region on coefficients `(a, …, g)` of
/// `(m̃_5, m̃_41, m̃_32, m̃_311, m̃_221, m̃_2111, m̃_11111)`: the dominance
/// chain, four quadratics, and one 3×3 determinant inequality, in printed
/// order.
#[allow(clippy::too_many_arguments)]
pub fn degree5_fn(a: &Rat, b: &Rat, c: &Rat, d: &Rat, e: &Rat, f: &Rat, g: &Rat) -> RegionVerdict {
    if all_zero(&[a, b, c, d, e, f, g]) {
        return RegionVerdict::fail("zero polynomial");
    }
    if let Some(tag) = chain(
        &[a, b, c, d, e, f, g],
        &["a", "b", "c", "d", "e", "f", "g"],
    ) {
        return RegionVerdict::fail(&tag);
    }
    if a * d > b * b {
        return RegionVerdict::fail("ad <= b^2");
    }
    if (d + int(2) * e) * g > int(3) * f * f {
        return RegionVerdict::fail("(d + 2e)g <= 3f^2");
    }
    if b * f > d * d {
        return RegionVerdict::fail("bf <= d^2");
    }
    if c * f > e * e {
        return RegionVerdict::fail("cf <= e^2");
    }
    // det [[b, c, d], [c, c, e], [d, e, f]] ≥ 0.
    let det = b * (c * f - e * e) - c * (c * f - e * d) + d * (c * e - c * d);
    if det < Rat::zero() {
        return RegionVerdict::fail("det(b c d; c c e; d e f) >= 0");
    }
    RegionVerdict::member()
}

/// Degree-6 function-mode region on normalized-monomial coefficients indexed
/// by partitions of 6 (absent keys are zero): all dominance-cover
/// inequalities, three printed quadratics, and the signed-minor signature
/// test on the two printed 3×3 matrices `Q31` and `Q211`.
pub fn degree6_fn(coeffs: &BTreeMap<Partition, Rat>) -> Result<RegionVerdict> {
    for key in coeffs.keys() {
        if key.weight() != 6 {
            return Err(Error::Invalid(format!(
                "degree-6 region requires partitions of 6, got {key}"
            )));
        }
    }
    if coeffs.values().all(|v| v.is_zero()) {
        return Ok(RegionVerdict::fail("zero polynomial"));
    }
    let c = |parts: &[u32]| -> Rat {
        let key = Partition::new(parts.to_vec()).expect("valid partition literal");
        coeffs.get(&key).cloned().unwrap_or_else(Rat::zero)
    };
    // Dominance-cover inequalities c_μ ≥ c_λ, λ in descending lexicographic
    // order.
    for lambda in generate_partitions(6) {
        let c_lambda = coeffs.get(&lambda).cloned().unwrap_or_else(Rat::zero);
        if c_lambda < Rat::zero() {
            return Ok(RegionVerdict::fail(&format!("c{lambda} >= 0")));
        }
        for mu in dominance_covers(&lambda) {
            let c_mu = coeffs.get(&mu).cloned().unwrap_or_else(Rat::zero);
            if c_lambda > c_mu {
                return Ok(RegionVerdict::fail(&format!("c{mu} >= c{lambda}")));
            }
        }
    }
    if c(&[6]) * c(&[4, 1, 1]) > c(&[5, 1]) * c(&[5, 1]) {
        return Ok(RegionVerdict::fail("c6 c411 <= c51^2"));
    }
    if c(&[2, 2, 1, 1]) * (c(&[4, 2]) + c(&[3, 3])) > int(2) * c(&[3, 2, 1]) * c(&[3, 2, 1]) {
        return Ok(RegionVerdict::fail("c2211 (c42 + c33) <= 2 c321^2"));
    }
    if c(&[1, 1, 1, 1, 1, 1]) * (c(&[3, 1, 1, 1]) + int(3) * c(&[2, 2, 1, 1]))
        > int(4) * c(&[2, 1, 1, 1, 1]) * c(&[2, 1, 1, 1, 1])
    {
        return Ok(RegionVerdict::fail(
            "c111111 (c3111 + 3 c2211) <= 4 c21111^2",
        ));
    }
    let q31 = SymMatrix::new(vec![
        vec![c(&[5, 1]), c(&[4, 2]), c(&[4, 1, 1])],
        vec![c(&[4, 2]), c(&[3, 3]), c(&[3, 2, 1])],
        vec![c(&[4, 1, 1]), c(&[3, 2, 1]), c(&[3, 1, 1, 1])],
    ])
    .expect("constructed symmetric");
    let half = Rat::new(1.into(), 2.into());
    let q211 = SymMatrix::new(vec![
        vec![c(&[4, 1, 1]), c(&[3, 2, 1]), c(&[3, 1, 1, 1])],
        vec![
            c(&[3, 2, 1]),
            &half * (c(&[3, 2, 1]) + c(&[2, 2, 2])),
            c(&[2, 2, 1, 1]),
        ],
        vec![c(&[3, 1, 1, 1]), c(&[2, 2, 1, 1]), c(&[2, 1, 1, 1, 1])],
    ])
    .expect("constructed symmetric");
    let ops = Ops::new();
    if !at_most_one_positive_eigenvalue(&q31, &ops)?.ok {
        return Ok(RegionVerdict::fail("Q31 signature"));
    }
    if !at_most_one_positive_eigenvalue(&q211, &ops)?.ok {
        return Ok(RegionVerdict::fail("Q211 signature"));
    }
    Ok(RegionVerdict::member())
}

/// Dispatch a symmetric polynomial or function to the matching closed-form
/// predicate when one is printed for its degree and mode, and to the general
/// reduced-Hessian tester otherwise (degrees 5 and 6 in polynomial mode,
/// degrees outside 2–6, and variable counts below a printed system's
/// premise). The routed general verdict is reported with the failing
/// condition's kind tag.
pub fn region_verdict(f: &SymPoly, mode: Mode) -> Result<RegionVerdict> {
    let tilde = convert_basis(f, Basis::MTilde);
    let c = |parts: &[u32]| -> Rat {
        let key = Partition::new(parts.to_vec()).expect("valid partition literal");
        tilde.coeff(&key)
    };
    let general = |f: &SymPoly, mode: Mode| -> Result<RegionVerdict> {
        let v = is_lorentzian(f, mode)?;
        Ok(RegionVerdict {
            member: v.lorentzian,
            failed_inequality: v.failure.map(|fail| fail.kind.tag().to_string()),
        })
    };
    match (f.degree(), mode) {
        (2, Mode::Function) => Ok(degree2(&c(&[2]), &c(&[1, 1]), mode)),
        (2, Mode::Polynomial(n)) if n >= 2 => Ok(degree2(&c(&[2]), &c(&[1, 1]), mode)),
        (3, Mode::Function) => Ok(degree3(&c(&[3]), &c(&[2, 1]), &c(&[1, 1, 1]), mode)),
        (3, Mode::Polynomial(nvars)) if nvars >= 3 => Ok(degree3(
            &c(&[3]),
            &c(&[2, 1]),
            &c(&[1, 1, 1]),
            Mode::Polynomial(nvars - 1),
        )),
        (4, Mode::Function) => Ok(degree4(
            &c(&[4]),
            &c(&[3, 1]),
            &c(&[2, 2]),
            &c(&[2, 1, 1]),
            &c(&[1, 1, 1, 1]),
            mode,
        )),
        (4, Mode::Polynomial(nvars)) if nvars >= 4 => Ok(degree4(
            &c(&[4]),
            &c(&[3, 1]),
            &c(&[2, 2]),
            &c(&[2, 1, 1]),
            &c(&[1, 1, 1, 1]),
            mode,
        )),
        (5, Mode::Function) => Ok(degree5_fn(
            &c(&[5]),
            &c(&[4, 1]),
            &c(&[3, 2]),
            &c(&[3, 1, 1]),
            &c(&[2, 2, 1]),
            &c(&[2, 1, 1, 1]),
            &c(&[1, 1, 1, 1, 1]),
        )),
        (6, Mode::Function) => degree6_fn(tilde.coeffs()),
        _ => general(f, mode),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree2_examples() {
        assert!(degree2(&int(1), &int(1), Mode::Function).member);
        let not = degree2(&int(2), &int(1), Mode::Function);
        assert_eq!(not.failed_inequality.as_deref(), Some("a <= b"));
        assert!(degree2(&int(0), &int(1), Mode::Polynomial(2)).member);
        let zero = degree2(&int(0), &int(0), Mode::Function);
        assert_eq!(zero.failed_inequality.as_deref(), Some("zero polynomial"));
        let neg = degree2(&int(-1), &int(1), Mode::Function);
        assert_eq!(neg.failed_inequality.as_deref(), Some("0 <= a"));
    }

    #[test]
    fn degree3_examples() {
        // 1 + 1 = 2 ≤ 2 at the theorem's n = 2 (three variables).
        assert!(degree3(&int(1), &int(1), &int(1), Mode::Polynomial(2)).member);
        let fn_not = degree3(&int(1), &int(2), &int(7), Mode::Function);
        assert_eq!(fn_not.failed_inequality.as_deref(), Some("ac <= b^2"));
        assert!(degree3(&int(1), &int(3), &int(4), Mode::Function).member);
        // The same cubic through the general tester at n + 1 = 3 variables.
        let f = SymPoly::new(
            3,
            Basis::MTilde,
            vec![
                (p(&[3]), int(1)),
                (p(&[2, 1]), int(1)),
                (p(&[1, 1, 1]), int(1)),
            ],
        )
        .unwrap();
        assert!(is_lorentzian(&f, Mode::Polynomial(3)).unwrap().lorentzian);
    }

    #[test]
    fn degree3_function_region_is_the_large_n_limit() {
        for (a, b, c) in [(1i64, 1, 1), (1, 2, 3), (0, 1, 5), (2, 3, 4), (1, 2, 5)] {
            let fn_verdict = degree3(&int(a), &int(b), &int(c), Mode::Function).member;
            let far = degree3(&int(a), &int(b), &int(c), Mode::Polynomial(1000)).member;
            assert!(
                fn_verdict <= far,
                "function region must sit inside every finite-n region"
            );
        }
    }

    #[test]
    fn degree3_nschur_examples() {
        for n in [2usize, 3, 7] {
            assert!(degree3_nschur(&int(1), &int(2), &int(-1), n).member);
        }
        let not = degree3_nschur(&int(1), &int(0), &int(4), 2);
        assert_eq!(
            not.failed_inequality.as_deref(),
            Some("ac - (1/n)a(b+c) <= b^2")
        );
        assert!(degree3_nschur(&int(0), &int(1), &int(1), 2).member);
        let neg = degree3_nschur(&int(1), &int(1), &int(-2), 4);
        assert_eq!(neg.failed_inequality.as_deref(), Some("b + c >= 0"));
    }

    #[test]
    fn degree3_nschur_agrees_with_degree3_after_conversion() {
        for a in -1i64..=2 {
            for b in -1i64..=2 {
                for c in -2i64..=2 {
                    for n in [2usize, 3, 5] {
                        let ns = degree3_nschur(&int(a), &int(b), &int(c), n);
                        let m = degree3(
                            &int(a),
                            &int(a + b),
                            &int(a + 2 * b + c),
                            Mode::Polynomial(n),
                        );
                        assert_eq!(ns.member, m.member, "a={a} b={b} c={c} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree4_examples() {
        let coeffs = [int(1), int(2), int(2), int(5), int(5)];
        let [a, b, c, d, e] = &coeffs;
        assert!(degree4(a, b, c, d, e, Mode::Polynomial(4)).member);
        let at5 = degree4(a, b, c, d, e, Mode::Polynomial(5));
        assert_eq!(
            at5.failed_inequality.as_deref(),
            Some("a(c + (n-2)d) <= (n-1)b^2")
        );
        assert!(degree4(
            &rat(1, 256),
            &rat(1, 16),
            &rat(3, 8),
            &rat(1, 2),
            &int(1),
            Mode::Function
        )
        .member);
        assert!(degree4(&int(0), &int(0), &int(0), &int(0), &int(1), Mode::Function).member);
    }

    #[test]
    fn degree5_examples() {
        let one = int(1);
        assert!(degree5_fn(&one, &one, &one, &one, &one, &one, &one).member);
        // Normalized-Schur coefficients of shape (3, 2).
        assert!(degree5_fn(
            &int(0),
            &int(0),
            &int(1),
            &int(1),
            &int(2),
            &int(3),
            &int(5)
        )
        .member);
        let not = degree5_fn(&one, &one, &one, &one, &one, &int(2), &int(2));
        assert_eq!(not.failed_inequality.as_deref(), Some("bf <= d^2"));
    }

    #[test]
    fn degree6_examples() {
        let ones: BTreeMap<Partition, Rat> = generate_partitions(6)
            .into_iter()
            .map(|lam| (lam, int(1)))
            .collect();
        assert!(degree6_fn(&ones).unwrap().member);

        // Normalized-Schur coefficients of shape (2, 2, 2): Kostka row.
        let ns = SymPoly::new(6, Basis::Ns, vec![(p(&[2, 2, 2]), int(1))]).unwrap();
        let tilde = convert_basis(&ns, Basis::MTilde);
        assert!(degree6_fn(tilde.coeffs()).unwrap().member);

        // c51 = c42 = 0 with c411, c33 > 0 makes det(Q31) = −c411² c33 < 0.
        let mut coeffs: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (parts, v) in [
            (&[6][..], 0i64),
            (&[5, 1][..], 0),
            (&[4, 2][..], 0),
            (&[4, 1, 1][..], 1),
            (&[3, 3][..], 1),
            (&[3, 2, 1][..], 1),
            (&[3, 1, 1, 1][..], 1),
            (&[2, 2, 2][..], 1),
            (&[2, 2, 1, 1][..], 1),
            (&[2, 1, 1, 1, 1][..], 1),
            (&[1, 1, 1, 1, 1, 1][..], 1),
        ] {
            coeffs.insert(p(parts), int(v));
        }
        let verdict = degree6_fn(&coeffs).unwrap();
        assert_eq!(verdict.failed_inequality.as_deref(), Some("Q31 signature"));

        let zero: BTreeMap<Partition, Rat> = BTreeMap::new();
        assert_eq!(
            degree6_fn(&zero).unwrap().failed_inequality.as_deref(),
            Some("zero polynomial")
        );
        let bad: BTreeMap<Partition, Rat> = [(p(&[2, 1]), int(1))].into_iter().collect();
        assert!(degree6_fn(&bad).is_err());
    }

    #[test]
    fn dispatcher_routes_by_degree_and_mode() {
        let quintic_ones = SymPoly::new(
            5,
            Basis::MTilde,
            generate_partitions(5).into_iter().map(|lam| (lam, int(1))),
        )
        .unwrap();
        assert!(region_verdict(&quintic_ones, Mode::Function).unwrap().member);
        // Degree 5 in polynomial mode has no printed system: general tester.
        let poly = region_verdict(&quintic_ones, Mode::Polynomial(5)).unwrap();
        let direct = is_lorentzian(&quintic_ones, Mode::Polynomial(5)).unwrap();
        assert_eq!(poly.member, direct.lorentzian);

        let quartic = SymPoly::new(
            4,
            Basis::MTilde,
            vec![
                (p(&[4]), int(1)),
                (p(&[3, 1]), int(2)),
                (p(&[2, 2]), int(2)),
                (p(&[2, 1, 1]), int(5)),
                (p(&[1, 1, 1, 1]), int(5)),
            ],
        )
        .unwrap();
        assert!(region_verdict(&quartic, Mode::Polynomial(4)).unwrap().member);
        assert!(!region_verdict(&quartic, Mode::Polynomial(5)).unwrap().member);
        assert!(!region_verdict(&quartic, Mode::Function).unwrap().member);
    }

    #[test]
    fn closed_forms_agree_with_general_tester_on_small_grids() {
        // Degree 3, function mode and the theorem's n = 2 (three variables).
        for a in 0i64..=2 {
            for b in 0i64..=2 {
                for c in 0i64..=3 {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let f = SymPoly::new(
                        3,
                        Basis::MTilde,
                        vec![
                            (p(&[3]), int(a)),
                            (p(&[2, 1]), int(b)),
                            (p(&[1, 1, 1]), int(c)),
                        ],
                    )
                    .unwrap();
                    let closed = degree3(&int(a), &int(b), &int(c), Mode::Polynomial(2)).member;
                    let general = is_lorentzian(&f, Mode::Polynomial(3)).unwrap().lorentzian;
                    assert_eq!(closed, general, "({a},{b},{c}) at three variables");
                    let closed_fn = degree3(&int(a), &int(b), &int(c), Mode::Function).member;
                    let general_fn = is_lorentzian(&f, Mode::Function).unwrap().lorentzian;
                    assert_eq!(closed_fn, general_fn, "({a},{b},{c}) function mode");
                }
            }
        }
    }

    #[test]
    fn boundary_equality_classifies_as_member() {
        // ac = b² exactly.
        assert!(degree3(&int(1), &int(2), &int(4), Mode::Function).member);
        // ad = b² exactly.
        assert!(degree4(&int(1), &int(1), &int(1), &int(1), &int(1), Mode::Function).member);
        // The quartic threshold at n = 4 is tight in a(c + (n−2)d) ≤ (n−1)b².
        assert!(degree4(
            &int(1),
            &int(2),
            &int(2),
            &int(5),
            &int(5),
            Mode::Polynomial(4)
        )
        .member);
    }
}
