//! Generators for structured families of symmetric polynomials and their
//! family-specific verifications: elementary symmetric polynomials, M-convex
//! generating functions, normalized Schur polynomials, two-column Schur
//! shapes with their ballot-number quadratic data, and chromatic symmetric
//! functions of Dyck-path indifference graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::partitions::{dominance_leq, generate_partitions, Partition};
use crate::rational::{binomial, factorial, Rat};
use crate::symfunc::{convert_basis, Basis, SymPoly};

/// The elementary symmetric polynomial `e_d` as the normalized monomial
/// `m̃_{1^d}`.
pub fn elementary(d: u32) -> Result<SymPoly> {
    if d == 0 {
        return Err(Error::Invalid("elementary degree must be at least 1".into()));
    }
    let column = Partition::new(vec![1; d as usize]).expect("column shape");
    Ok(SymPoly::new(d, Basis::MTilde, vec![(column, Rat::one())]).expect("single key"))
}

/// The generating function of the M-convex set below `lambda`: normalized
/// monomial coefficients equal to 1 on the dominance interval
/// `[1^d, lambda]` and 0 elsewhere.
pub fn mconvex_generating(lambda: &Partition) -> SymPoly {
    let d = lambda.weight();
    let keys = generate_partitions(d)
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda).unwrap_or(false))
        .map(|mu| (mu, Rat::one()));
    SymPoly::new(d, Basis::MTilde, keys).expect("equal weights")
}

/// The normalized Schur polynomial `Ns_λ` in the normalized monomial basis:
/// the coefficient of `m̃_μ` is the Kostka number `K_{λμ}`.
pub fn normalized_schur(lambda: &Partition) -> SymPoly {
    let ns = SymPoly::new(
        lambda.weight(),
        Basis::Ns,
        vec![(lambda.clone(), Rat::one())],
    )
    .expect("single key");
    convert_basis(&ns, Basis::MTilde)
}

/// The ballot number `C_{k,ℓ} = (k+ℓ choose ℓ) − (k+ℓ choose ℓ−1)`, equal to
/// the number of standard Young tableaux of the two-row shape `(k, ℓ)`.
pub fn ballot(k: u32, l: u32) -> Result<BigInt> {
    if k < l {
        return Err(Error::Invalid(format!(
            "ballot number requires k >= l, got k = {k}, l = {l}"
        )));
    }
    let first = binomial(k + l, l);
    let second = if l == 0 {
        BigInt::zero()
    } else {
        binomial(k + l, l - 1)
    };
    Ok(first - second)
}

/// Ballot number extended by the vanishing convention: any negative index —
/// or an invalid shape with `k < l` — gives 0.
fn ballot_or_zero(k: i64, l: i64) -> BigInt {
    if k < 0 || l < 0 || k < l {
        return BigInt::zero();
    }
    ballot(k as u32, l as u32).expect("validated k >= l")
}

/// The four quadratic-form coefficients of `∂^μ Ns_{(s,t)'}` for
/// `μ = (2^p, 1^q)`, `q = (s − p) + (t − p) − 2`, expressed as ballot
/// numbers with `k = s − p`, `ℓ = t − p`:
/// `a = C_{k−2,ℓ−2}`, `b = C_{k−1,ℓ−1}`, `c₁ = C_{k,ℓ}`, `c₂ = C_{k−1,ℓ−1}`.
/// The ballot inequalities `c₂ ≤ c₁` (for `ℓ ≥ 1`) and
/// `(q−1) a c₁ ≤ q b²` (for `ℓ ≥ 2`) are verified before returning.
pub fn two_column_quadratic_data(
    s: u32,
    t: u32,
    p: u32,
) -> Result<(BigInt, BigInt, BigInt, BigInt)> {
    if !(s >= t && t >= p) {
        return Err(Error::Invalid(format!(
            "column data requires s >= t >= p, got ({s}, {t}, {p})"
        )));
    }
    let k = (s - p) as i64;
    let l = (t - p) as i64;
    let a = ballot_or_zero(k - 2, l - 2);
    let b = ballot_or_zero(k - 1, l - 1);
    let c1 = ballot_or_zero(k, l);
    let c2 = b.clone();
    if l >= 1 && c2 > c1 {
        return Err(Error::Invalid(format!(
            "ballot inequality c2 <= c1 failed at k = {k}, l = {l}"
        )));
    }
    if l >= 2 {
        let q = BigInt::from(k + l - 2);
        let q_minus_1 = &q - BigInt::one();
        if q_minus_1 * &a * &c1 > q * &b * &b {
            return Err(Error::Invalid(format!(
                "ballot inequality (q-1) a c1 <= q b^2 failed at k = {k}, l = {l}"
            )));
        }
    }
    Ok((a, b, c1, c2))
}

/// One step of a lattice path: north or east.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    N,
    E,
}

/// A Dyck path of semilength `n`: a sequence of `n` north and `n` east steps
/// from `(0,0)` to `(n,n)` that never goes below the diagonal (every prefix
/// has at least as many norths as easts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<DyckPath> {
        let mut norths = 0usize;
        let mut easts = 0usize;
        for step in &steps {
            match step {
                Step::N => norths += 1,
                Step::E => easts += 1,
            }
            if easts > norths {
                return Err(Error::Invalid(
                    "path dips below the diagonal: a prefix has more easts than norths".into(),
                ));
            }
        }
        if norths != easts {
            return Err(Error::Invalid(format!(
                "path must balance norths and easts, got {norths} N and {easts} E"
            )));
        }
        Ok(DyckPath { steps })
    }

    /// Semilength: the number of north (equivalently east) steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            out.write_str(match step {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(text: &str) -> Result<DyckPath> {
        let mut steps = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match ch {
                'N' | 'n' => steps.push(Step::N),
                'E' | 'e' => steps.push(Step::E),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid path step '{other}': expected N or E"
                    )))
                }
            }
        }
        DyckPath::new(steps)
    }
}

/// All Dyck paths of semilength `n`, in a fixed deterministic order
/// (north-first backtracking).
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, norths: usize, easts: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if cur.len() == 2 * n {
            out.push(DyckPath {
                steps: cur.clone(),
            });
            return;
        }
        if norths < n {
            cur.push(Step::N);
            rec(n, norths + 1, easts, cur, out);
            cur.pop();
        }
        if easts < norths {
            cur.push(Step::E);
            rec(n, norths, easts + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// A graph on vertices `1..=nverts` with edges stored as ordered pairs
/// `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndifferenceGraph {
    nverts: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl IndifferenceGraph {
    pub fn new(nverts: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if !(1 <= i && i < j && j <= nverts) {
                return Err(Error::Invalid(format!(
                    "edge ({i}, {j}) must satisfy 1 <= i < j <= {nverts}"
                )));
            }
            set.insert((i, j));
        }
        Ok(IndifferenceGraph {
            nverts,
            edges: set,
        })
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let pair = if i < j { (i, j) } else { (j, i) };
        self.edges.contains(&pair)
    }
}

/// The indifference graph of a Dyck path: vertices `1..=n`, with an edge
/// between `i < j` exactly when the number of north steps before the `i`-th
/// east step is at least `j` (the square in column `i`, row `n+1−j` lies
/// between the path and the diagonal).
pub fn indifference_graph(path: &DyckPath) -> IndifferenceGraph {
    let n = path.semilength();
    let mut edges = BTreeSet::new();
    let mut norths = 0usize;
    let mut east_index = 0usize;
    for step in path.steps() {
        match step {
            Step::N => norths += 1,
            Step::E => {
                east_index += 1;
                let i = east_index;
                for j in (i + 1)..=norths.min(n) {
                    edges.insert((i, j));
                }
            }
        }
    }
    IndifferenceGraph { nverts: n, edges }
}

/// Whether the complement graph is bipartite (checked exactly by two-coloring
/// each complement component); a Dyck path is abelian when this holds for its
/// indifference graph.
pub fn is_abelian(graph: &IndifferenceGraph) -> bool {
    let n = graph.nverts;
    let mut color = vec![None::<bool>; n + 1];
    for start in 1..=n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            let cu = color[u].expect("queued vertices are colored");
            for v in 1..=n {
                if v == u || graph.has_edge(u, v) {
                    continue; // complement edges only
                }
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// The chromatic symmetric polynomial `X_G` in `n` variables by brute-force
/// enumeration of all proper colorings `κ: V → [n]`, returned both as the
/// explicit polynomial and as its monomial-basis symmetric form.
pub fn chromatic_symmetric(
    graph: &IndifferenceGraph,
    n: usize,
) -> Result<(DensePoly, SymPoly)> {
    let v = graph.nverts;
    if v > 8 || n > 8 {
        return Err(Error::Invalid(format!(
            "coloring enumeration is desk-scale: need |V| <= 8 and n <= 8, got |V| = {v}, n = {n}"
        )));
    }
    if n == 0 {
        return Err(Error::TooFewVariables { needed: 1, given: 0 });
    }
    let edges: Vec<(usize, usize)> = graph.edges.iter().copied().collect();
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    let mut coloring = vec![0usize; v];
    loop {
        let proper = edges
            .iter()
            .all(|&(i, j)| coloring[i - 1] != coloring[j - 1]);
        if proper {
            let mut exp = vec![0u32; n];
            for &color in &coloring {
                exp[color] += 1;
            }
            terms.push((exp, Rat::one()));
        }
        // Advance the base-n counter; stop after the last coloring.
        let mut pos = 0usize;
        loop {
            if pos == v {
                break;
            }
            coloring[pos] += 1;
            if coloring[pos] < n {
                break;
            }
            coloring[pos] = 0;
            pos += 1;
        }
        if pos == v {
            break;
        }
    }
    let dense = DensePoly::new(n, v as u32, terms)?;
    let mut coeffs: Vec<(Partition, Rat)> = Vec::new();
    for (exp, c) in dense.terms() {
        let mut sorted = exp.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if *exp == sorted {
            coeffs.push((Partition::from_exponents(exp), c.clone()));
        }
    }
    let sym = SymPoly::new(v as u32, Basis::M, coeffs)?;
    Ok((dense, sym))
}

/// Extract the clique-matching counts `r_i` from a monomial-basis chromatic
/// symmetric polynomial of an abelian indifference graph:
/// `X_G = Σ_i i!(v−2i)! r_i m_{(2^i, 1^{v−2i})}` with each `r_i` a
/// non-negative integer. Errors when the support leaves the two-part-bounded
/// pattern or a coefficient fails the exact divisibility.
pub fn abelian_r_extraction(x: &SymPoly, nverts: u32) -> Result<Vec<BigInt>> {
    let v = nverts;
    if x.degree() != v {
        return Err(Error::Invalid(format!(
            "degree {} does not match vertex count {v}",
            x.degree()
        )));
    }
    let m_basis = convert_basis(x, Basis::M);
    for key in m_basis.support() {
        let ok = key.parts().iter().all(|&part| part <= 2);
        if !ok {
            return Err(Error::Invalid(format!(
                "support outside the pattern (2^i, 1^(v-2i)): found {key}"
            )));
        }
    }
    let mut out = Vec::new();
    for i in 0..=(v / 2) {
        let mut parts = vec![2u32; i as usize];
        parts.extend(std::iter::repeat(1).take((v - 2 * i) as usize));
        let key = Partition::new(parts).expect("pattern shape");
        let coeff = m_basis.coeff(&key);
        let scale = Rat::from_integer(factorial(i) * factorial(v - 2 * i));
        let r = coeff / scale;
        if !r.is_integer() || r < Rat::zero() {
            return Err(Error::Invalid(format!(
                "coefficient of m_{key} is not i!(v-2i)! times a non-negative integer"
            )));
        }
        out.push(r.to_integer());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::kostka;
    use crate::lorentz::{is_lorentzian, Mode};
    use crate::oracle::hessian_of_derivative;
    use crate::rational::int;
    use crate::symfunc::expand;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let e3 = elementary(3).unwrap();
        assert_eq!(e3.support(), vec![p(&[1, 1, 1])]);
        assert_eq!(e3.coeff(&p(&[1, 1, 1])), int(1));
        let e2 = expand(&elementary(2).unwrap(), 2).unwrap();
        assert_eq!(e2.coeff(&[1, 1]), int(1));
        assert_eq!(e2.terms().len(), 1);
        for d in 1..=6 {
            let f = elementary(d).unwrap();
            assert!(
                is_lorentzian(&f, Mode::Function).unwrap().lorentzian,
                "e_{d}"
            );
        }
        assert!(elementary(0).is_err());
    }

    #[test]
    fn mconvex_generating_examples() {
        let top = mconvex_generating(&p(&[4]));
        assert_eq!(top.support().len(), generate_partitions(4).len());
        assert!(top.coeffs().values().all(|c| *c == int(1)));
        assert_eq!(
            mconvex_generating(&p(&[1, 1, 1])),
            elementary(3).unwrap()
        );
        for d in 1..=6u32 {
            for lambda in generate_partitions(d) {
                let f = mconvex_generating(&lambda);
                assert!(
                    is_lorentzian(&f, Mode::Function).unwrap().lorentzian,
                    "interval below {lambda}"
                );
            }
        }
    }

    #[test]
    fn normalized_schur_examples() {
        let ns2 = normalized_schur(&p(&[2]));
        assert_eq!(ns2.coeff(&p(&[2])), int(1));
        assert_eq!(ns2.coeff(&p(&[1, 1])), int(1));
        let ns11 = normalized_schur(&p(&[1, 1]));
        assert_eq!(ns11.support(), vec![p(&[1, 1])]);

        let ns33 = normalized_schur(&p(&[3, 3]));
        assert!(is_lorentzian(&ns33, Mode::Function).unwrap().lorentzian);
        let schur_coords = convert_basis(&ns33, Basis::S);
        assert!(
            schur_coords.coeffs().values().any(|c| *c < int(0)),
            "Ns_33 must have a negative Schur-basis coefficient"
        );
    }

    #[test]
    fn ballot_numbers() {
        for k in 0..=6 {
            assert_eq!(ballot(k, 0).unwrap(), BigInt::from(1));
        }
        assert_eq!(ballot(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(ballot(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(ballot(4, 4).unwrap(), BigInt::from(14));
        assert_eq!(ballot(5, 2).unwrap(), BigInt::from(14));
        assert!(ballot(1, 2).is_err());
        // Standard-tableau count of the two-row shape (k, l).
        for k in 1..=4u32 {
            for l in 0..=k.min(4) {
                let shape = if l == 0 { p(&[k]) } else { p(&[k, l]) };
                let content = Partition::new(vec![1; (k + l) as usize]).unwrap();
                assert_eq!(
                    ballot(k, l).unwrap(),
                    kostka(&shape, &content).unwrap(),
                    "C_{{{k},{l}}}"
                );
            }
        }
    }

    #[test]
    fn ballot_recurrence_is_exact_up_to_twelve() {
        for k in 1..=12u32 {
            for l in 1..=k {
                let lhs = Rat::from_integer(ballot(k, l).unwrap());
                let rhs = Rat::new(
                    BigInt::from((k + l) * (k + l - 1)),
                    BigInt::from((k + 1) * l),
                ) * Rat::from_integer(ballot(k - 1, l - 1).unwrap());
                assert_eq!(lhs, rhs, "recurrence at ({k}, {l})");
            }
        }
    }

    #[test]
    fn printed_ballot_inequality_holds() {
        for k in 2..=12u64 {
            for l in 2..=k {
                let lhs = BigInt::from((k + 1) * l) * BigInt::from((k + l - 2) * (k + l - 2));
                let rhs = BigInt::from(k * (l - 1)) * BigInt::from((k + l) * (k + l - 1));
                assert!(lhs >= rhs, "(k+1)l(k+l-2)^2 >= k(l-1)(k+l)(k+l-1) at ({k},{l})");
            }
        }
    }

    #[test]
    fn two_column_data_matches_derivative_readoff() {
        for s in 1..=5u32 {
            for t in 0..=s.min(5) {
                if s + t < 2 || s + t > 6 {
                    continue;
                }
                for pp in 0..=t {
                    if s + t < 2 * pp + 2 {
                        continue;
                    }
                    let q = (s + t - 2 * pp - 2) as usize;
                    let n = (pp as usize) + q + 2;
                    let (a, b, c1, c2) = two_column_quadratic_data(s, t, pp).unwrap();
                    let gamma = if t == 0 { p(&[s]) } else { p(&[s, t]) }.conjugate();
                    let g = expand(&normalized_schur(&gamma), n).unwrap();
                    let mut mu = vec![2u32; pp as usize];
                    mu.extend(std::iter::repeat(1).take(q));
                    mu.extend([0, 0]);
                    let hess = hessian_of_derivative(&g, &mu).unwrap();
                    let y1 = n - 2;
                    let y2 = n - 1;
                    assert_eq!(
                        *hess.get(y1, y2),
                        Rat::from_integer(c1.clone()),
                        "c1 at ({s},{t},{pp})"
                    );
                    assert_eq!(
                        *hess.get(y1, y1),
                        Rat::from_integer(c2.clone()),
                        "c2 at ({s},{t},{pp})"
                    );
                    if q >= 1 {
                        let x1 = pp as usize;
                        assert_eq!(
                            *hess.get(x1, y1),
                            Rat::from_integer(b.clone()),
                            "b at ({s},{t},{pp})"
                        );
                        if q >= 2 {
                            assert_eq!(
                                *hess.get(x1, x1 + 1),
                                Rat::from_integer(a.clone()),
                                "a at ({s},{t},{pp})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_column_degenerate_indices_vanish() {
        let (a, b, c1, c2) = two_column_quadratic_data(3, 3, 3).unwrap();
        assert_eq!(a, BigInt::zero());
        assert_eq!(b, BigInt::zero());
        assert_eq!(c1, BigInt::from(1));
        assert_eq!(c2, BigInt::zero());
        assert!(two_column_quadratic_data(2, 3, 1).is_err());
    }

    #[test]
    fn dyck_path_parsing_and_validation() {
        let path: DyckPath = "NNEE".parse().unwrap();
        assert_eq!(path.semilength(), 2);
        assert_eq!(path.to_string(), "NNEE");
        assert!("NEEN".parse::<DyckPath>().is_err());
        assert!("NNE".parse::<DyckPath>().is_err());
        assert!("NXEE".parse::<DyckPath>().is_err());
        assert_eq!(all_dyck_paths(3).len(), 5);
        assert_eq!(all_dyck_paths(6).len(), 132);
    }

    #[test]
    fn indifference_graph_fixtures() {
        // Full path N^n E^n gives the complete graph, which is abelian.
        for n in 1..=4usize {
            let text = format!("{}{}", "N".repeat(n), "E".repeat(n));
            let g = indifference_graph(&text.parse().unwrap());
            assert_eq!(g.edges().len(), n * (n - 1) / 2, "K_{n}");
            assert!(is_abelian(&g));
        }
        // Staircase (NE)^n gives the edgeless graph; its complement is
        // complete, so it is abelian only up to two vertices.
        for n in 1..=4usize {
            let text = "NE".repeat(n);
            let g = indifference_graph(&text.parse().unwrap());
            assert!(g.edges().is_empty());
            assert_eq!(is_abelian(&g), n <= 2, "edgeless on {n}");
        }
        // NNENEE gives the path graph on three vertices, whose complement is
        // a single edge: abelian.
        let g = indifference_graph(&"NNENEE".parse().unwrap());
        let expected: BTreeSet<(usize, usize)> = [(1, 2), (2, 3)].into_iter().collect();
        assert_eq!(*g.edges(), expected);
        assert!(is_abelian(&g));
    }

    #[test]
    fn chromatic_symmetric_examples() {
        // Edgeless on three vertices: every coloring is proper, so X is the
        // cube of the power sum.
        let edgeless = IndifferenceGraph::new(3, Vec::new()).unwrap();
        let (dense, sym) = chromatic_symmetric(&edgeless, 3).unwrap();
        let power = DensePoly::new(
            3,
            1,
            vec![
                (vec![1, 0, 0], int(1)),
                (vec![0, 1, 0], int(1)),
                (vec![0, 0, 1], int(1)),
            ],
        )
        .unwrap();
        let cube = power.mul(&power).unwrap().mul(&power).unwrap();
        assert_eq!(dense, cube);
        assert_eq!(sym.coeff(&p(&[3])), int(1));
        assert_eq!(sym.coeff(&p(&[2, 1])), int(3));
        assert_eq!(sym.coeff(&p(&[1, 1, 1])), int(6));

        // The triangle: six proper colorings, all rainbow.
        let triangle = IndifferenceGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        let (dense, sym) = chromatic_symmetric(&triangle, 3).unwrap();
        assert_eq!(dense.coeff(&[1, 1, 1]), int(6));
        assert_eq!(dense.terms().len(), 1);
        assert_eq!(sym.support(), vec![p(&[1, 1, 1])]);
        assert_eq!(sym.coeff(&p(&[1, 1, 1])), int(6));
        let r = abelian_r_extraction(&sym, 3).unwrap();
        assert_eq!(r, vec![BigInt::from(1), BigInt::zero()]);
    }

    #[test]
    fn chromatic_symmetric_is_symmetric_under_transpositions() {
        let g = indifference_graph(&"NNENEE".parse().unwrap());
        let (dense, _) = chromatic_symmetric(&g, 4).unwrap();
        for swap in [vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![3, 1, 2, 0]] {
            assert_eq!(dense.permute_vars(&swap).unwrap(), dense);
        }
    }

    #[test]
    fn abelian_paths_of_small_semilength_are_lorentzian() {
        for n in 1..=4usize {
            for path in all_dyck_paths(n) {
                let g = indifference_graph(&path);
                if !is_abelian(&g) {
                    continue;
                }
                let (_, sym) = chromatic_symmetric(&g, n).unwrap();
                let r = abelian_r_extraction(&sym, n as u32).unwrap();
                assert_eq!(r[0], BigInt::from(1), "r_0 for {path}");
                // The normalization reinterprets monomial coefficients in the
                // normalized monomial basis.
                let normalized = SymPoly::new(
                    n as u32,
                    Basis::MTilde,
                    convert_basis(&sym, Basis::M)
                        .coeffs()
                        .iter()
                        .map(|(key, c)| (key.clone(), c.clone())),
                )
                .unwrap();
                assert!(
                    is_lorentzian(&normalized, Mode::Function).unwrap().lorentzian,
                    "path {path}"
                );
            }
        }
    }

    #[test]
    fn r_extraction_rejects_non_matching_support() {
        let bad = SymPoly::new(4, Basis::M, vec![(p(&[3, 1]), int(1))]).unwrap();
        assert!(abelian_r_extraction(&bad, 4).is_err());
    }
}
