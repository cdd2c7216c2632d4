//! Symmetric polynomials in four bases (monomial `m`, normalized monomial
//! `m̃`, Schur `s`, normalized Schur `Ns`), exact basis conversion through
//! Kostka matrices, monomial expansion, the normalized omega involution, the
//! Hall pairing against a Schur function in a two-alphabet setting, and the
//! dual Cauchy identity check.
//!
//! The normalization `N` divides each monomial `x^α` by `α!`; under it the
//! monomial basis `m_λ` becomes `m̃_λ = m_λ / λ!` and the Schur basis becomes
//! `Ns_λ = Σ_μ K_{λμ} m̃_μ`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::kostka;
use crate::partitions::Partition;
use crate::rational::{parse_rat, rat_to_string, Rat};

/// Coefficient basis tag for [`SymPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial symmetric polynomials `m_λ`.
    M,
    /// Normalized monomials `m̃_λ = m_λ / λ!`.
    MTilde,
    /// Schur polynomials `s_λ`.
    S,
    /// Normalized Schur polynomials `Ns_λ = N(s_λ)`.
    Ns,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::MTilde => "mtilde",
            Basis::S => "s",
            Basis::Ns => "ns",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Basis> {
        match tag {
            "m" => Ok(Basis::M),
            "mtilde" => Ok(Basis::MTilde),
            "s" => Ok(Basis::S),
            "ns" => Ok(Basis::Ns),
            other => Err(Error::Parse(format!(
                "unknown basis {other:?} (expected \"m\", \"mtilde\", \"s\", or \"ns\")"
            ))),
        }
    }
}

/// A homogeneous symmetric polynomial of fixed degree, stored as a sparse map
/// from partitions of the degree to nonzero exact rational coefficients in the
/// given basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    degree: u32,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymPoly {
    /// Builds a polynomial, validating key weights and dropping zeros.
    pub fn new(
        degree: u32,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, Rat)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (key, coeff) in coeffs {
            if key.weight() != degree {
                return Err(Error::Invalid(format!(
                    "coefficient key {key} has weight {}, expected degree {degree}",
                    key.weight()
                )));
            }
            *map.entry(key).or_insert_with(Rat::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self {
            degree,
            basis,
            coeffs: map,
        })
    }

    pub fn zero(degree: u32, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    /// Coefficient of the given partition (zero when absent).
    pub fn coeff(&self, key: &Partition) -> Rat {
        self.coeffs.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Support partitions in descending lexicographic order.
    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().rev().cloned().collect()
    }

    /// Drops coefficients on partitions with more than `n` parts — the terms
    /// that vanish identically in `n` variables.
    pub fn restrict_to_max_len(&self, n: usize) -> SymPoly {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(k, _)| k.len() <= n)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        SymPoly {
            degree: self.degree,
            basis: self.basis,
            coeffs,
        }
    }

    /// JSON form
    /// `{"degree": d, "basis": "mtilde", "coeffs": {"[2,1]": "5/3", …}}`
    /// with partition keys in descending lexicographic order and rationals as
    /// `"p"` / `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{{\"degree\":{},\"basis\":\"{}\",\"coeffs\":{{",
            self.degree,
            self.basis.tag()
        )
        .unwrap();
        for (i, (key, coeff)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "\"{}\":\"{}\"", key, rat_to_string(coeff)).unwrap();
        }
        s.push_str("}}");
        s
    }

    pub fn from_json(text: &str) -> Result<SymPoly> {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let degree = obj
            .get("degree")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing integer field \"degree\"".into()))?
            as u32;
        let basis = Basis::from_tag(
            obj.get("basis")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Parse("missing string field \"basis\"".into()))?,
        )?;
        let coeffs_obj = obj
            .get("coeffs")
            .and_then(|x| x.as_object())
            .ok_or_else(|| Error::Parse("missing object field \"coeffs\"".into()))?;
        let mut coeffs = Vec::new();
        for (key, val) in coeffs_obj {
            let partition: Partition = key.parse()?;
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
            coeffs.push((partition, coeff));
        }
        SymPoly::new(degree, basis, coeffs)
    }
}

/// Rewrites the coordinates of `f` in the normalized-monomial basis.
fn to_mtilde(f: &SymPoly) -> SymPoly {
    let d = f.degree;
    let coeffs: Vec<(Partition, Rat)> = match f.basis {
        Basis::MTilde => f.coeffs.iter().map(|(k, c)| (k.clone(), c.clone())).collect(),
        // m_λ = λ! · m̃_λ
        Basis::M => f
            .coeffs
            .iter()
            .map(|(k, c)| (k.clone(), c * Rat::from_integer(k.factorial())))
            .collect(),
        // s_λ = Σ_μ K_{λμ} m_μ = Σ_μ K_{λμ} μ! m̃_μ
        Basis::S => {
            let t = kostka::table(d);
            let mut out = Vec::new();
            for mu in &t.partitions {
                let mut acc = Rat::zero();
                for (lam, c) in &f.coeffs {
                    acc += c * Rat::from_integer(t.entry(lam, mu).clone());
                }
                out.push((mu.clone(), acc * Rat::from_integer(mu.factorial())));
            }
            out
        }
        // Ns_λ = Σ_μ K_{λμ} m̃_μ
        Basis::Ns => {
            let t = kostka::table(d);
            let mut out = Vec::new();
            for mu in &t.partitions {
                let mut acc = Rat::zero();
                for (lam, c) in &f.coeffs {
                    acc += c * Rat::from_integer(t.entry(lam, mu).clone());
                }
                out.push((mu.clone(), acc));
            }
            out
        }
    };
    SymPoly::new(d, Basis::MTilde, coeffs).expect("weights preserved")
}

/// Rewrites normalized-monomial coordinates in the target basis.
fn from_mtilde(f: &SymPoly, target: Basis) -> SymPoly {
    debug_assert_eq!(f.basis, Basis::MTilde);
    let d = f.degree;
    let coeffs: Vec<(Partition, Rat)> = match target {
        Basis::MTilde => f.coeffs.iter().map(|(k, c)| (k.clone(), c.clone())).collect(),
        // m̃_λ = (1/λ!) m_λ
        Basis::M => f
            .coeffs
            .iter()
            .map(|(k, c)| (k.clone(), c / Rat::from_integer(k.factorial())))
            .collect(),
        // f = Σ_μ c̃_μ m̃_μ = Σ_λ (Σ_μ (K⁻¹)_{μλ} c̃_μ) Ns_λ
        Basis::Ns => {
            let t = kostka::table(d);
            let mut out = Vec::new();
            for lam in &t.partitions {
                let mut acc = Rat::zero();
                for (mu, c) in &f.coeffs {
                    acc += c * Rat::from_integer(t.inverse_entry(mu, lam).clone());
                }
                out.push((lam.clone(), acc));
            }
            out
        }
        // Through ordinary monomial coordinates: m_μ = Σ_λ (K⁻¹)_{μλ} s_λ.
        Basis::S => {
            let t = kostka::table(d);
            let mut out = Vec::new();
            for lam in &t.partitions {
                let mut acc = Rat::zero();
                for (mu, c) in &f.coeffs {
                    let m_coeff = c / Rat::from_integer(mu.factorial());
                    acc += m_coeff * Rat::from_integer(t.inverse_entry(mu, lam).clone());
                }
                out.push((lam.clone(), acc));
            }
            out
        }
    };
    SymPoly::new(d, target, coeffs).expect("weights preserved")
}

/// Exact change of basis; the underlying symmetric function is unchanged and
/// round-trips are bit-exact.
pub fn convert_basis(f: &SymPoly, target: Basis) -> SymPoly {
    if f.basis == target {
        return f.clone();
    }
    from_mtilde(&to_mtilde(f), target)
}

/// Exact monomial expansion of the truncation of `f` to `n` variables.
///
/// Partitions with more than `n` parts contribute nothing; the coefficient of
/// `x^α` is `c̃_{[α]} / α!` in normalized-monomial coordinates.
pub fn expand(f: &SymPoly, n: usize) -> Result<DensePoly> {
    if n == 0 {
        return Err(Error::TooFewVariables { needed: 1, given: 0 });
    }
    let tilde = to_mtilde(f);
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    for (lam, c) in &tilde.coeffs {
        if lam.len() > n {
            continue;
        }
        let per_monomial = c / Rat::from_integer(lam.factorial());
        let padded = lam.padded(n).expect("length checked");
        for alpha in distinct_permutations(&padded) {
            terms.push((alpha, per_monomial.clone()));
        }
    }
    DensePoly::new(n, f.degree, terms)
}

/// All distinct rearrangements of `values`, in descending lexicographic order.
pub fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(values.len());
    fn rec(
        counts: &mut BTreeMap<u32, usize>,
        prefix: &mut Vec<u32>,
        len: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let available: Vec<u32> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .rev()
            .collect();
        for v in available {
            *counts.get_mut(&v).unwrap() -= 1;
            prefix.push(v);
            rec(counts, prefix, len, out);
            prefix.pop();
            *counts.get_mut(&v).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut prefix, values.len(), &mut out);
    out
}

/// The normalized omega involution: conjugation of every index in the
/// normalized-Schur basis (`Ns_λ ↦ Ns_{λ'}`), returned in the basis of the
/// input.
pub fn omega_normalized(f: &SymPoly) -> SymPoly {
    let ns = convert_basis(f, Basis::Ns);
    let conjugated: Vec<(Partition, Rat)> = ns
        .coeffs
        .iter()
        .map(|(k, c)| (k.conjugate(), c.clone()))
        .collect();
    let g = SymPoly::new(f.degree, Basis::Ns, conjugated).expect("conjugation preserves weight");
    convert_basis(&g, f.basis)
}

/// A polynomial in two symmetric alphabets, stored in the monomial ⊗ monomial
/// basis: a map from pairs (x-partition, y-partition) to coefficients. Keys of
/// different x- and y-weights may coexist.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiSymPoly {
    coeffs: BTreeMap<(Partition, Partition), Rat>,
}

impl BiSymPoly {
    pub fn new(coeffs: impl IntoIterator<Item = (Partition, Partition, Rat)>) -> Self {
        let mut map: BTreeMap<(Partition, Partition), Rat> = BTreeMap::new();
        for (x, y, c) in coeffs {
            *map.entry((x, y)).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { coeffs: map }
    }

    pub fn coeffs(&self) -> &BTreeMap<(Partition, Partition), Rat> {
        &self.coeffs
    }
}

/// Contracts the x-alphabet of `f` against the Schur function `s_lambda`
/// using `⟨m_μ, s_λ⟩ = (K⁻¹)_{μλ}`, returning the remaining y-alphabet
/// polynomial in the monomial basis.
///
/// Terms whose x-weight differs from `weight(lambda)` pair to zero and are
/// ignored. If the surviving terms are inhomogeneous in y, the result is not a
/// single-degree polynomial and an error is raised.
pub fn hall_with_schur_x(f: &BiSymPoly, lambda: &Partition) -> Result<SymPoly> {
    let w = lambda.weight();
    let t = kostka::table(w);
    let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
    for ((x, y), c) in &f.coeffs {
        if x.weight() != w {
            continue;
        }
        let pairing = Rat::from_integer(t.inverse_entry(x, lambda).clone());
        if pairing.is_zero() {
            continue;
        }
        *acc.entry(y.clone()).or_insert_with(Rat::zero) += c * pairing;
    }
    acc.retain(|_, c| !c.is_zero());
    let mut weights: Vec<u32> = acc.keys().map(|k| k.weight()).collect();
    weights.sort_unstable();
    weights.dedup();
    match weights.as_slice() {
        [] => Ok(SymPoly::zero(0, Basis::M)),
        [d] => SymPoly::new(*d, Basis::M, acc),
        many => Err(Error::MixedDegrees(format!(
            "pairing result spans y-degrees {many:?}"
        ))),
    }
}

/// Dense expansion of the Schur polynomial `s_λ(x_1, …, x_n)` by direct
/// semistandard-tableau enumeration (entries at most `n`).
pub fn schur_dense(lambda: &Partition, n: usize) -> Result<DensePoly> {
    if lambda.len() > n {
        return Ok(DensePoly::zero(n, lambda.weight()));
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n];
    fn fill(
        shape: &[usize],
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        content: &mut Vec<u32>,
        r: usize,
        c: usize,
        terms: &mut Vec<(Vec<u32>, Rat)>,
    ) {
        if r == shape.len() {
            terms.push((content.clone(), Rat::from_integer(1.into())));
            return;
        }
        let (next_r, next_c) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_above = if r > 0 && c < shape[r - 1] { rows[r - 1][c] + 1 } else { 1 };
        for v in min_left.max(min_above)..=n {
            rows[r][c] = v;
            content[v - 1] += 1;
            fill(shape, n, rows, content, next_r, next_c, terms);
            content[v - 1] -= 1;
        }
    }
    fill(&shape, n, &mut rows, &mut content, 0, 0, &mut terms);
    DensePoly::new(n, lambda.weight(), terms)
}

/// Verifies the dual Cauchy identity at finite alphabet sizes: expands
/// `Π_{i≤n} Π_{j≤m} (x_i + y_j)` and compares it bit-exactly with
/// `Σ_λ s_λ(x) · s_{λ̃'}(y)`, where `λ` runs over partitions fitting in an
/// `n × m` box and `λ̃'` is the conjugate of the box complement of `λ`.
pub fn dual_cauchy_check(n: usize, m: usize) -> Result<bool> {
    if n < 1 || m < 1 {
        return Err(Error::Invalid("dual Cauchy check requires n, m >= 1".into()));
    }
    if n * m > 20 {
        return Err(Error::Invalid(format!(
            "dual Cauchy check is desk-scale only (n*m <= 20, got {})",
            n * m
        )));
    }
    let total = n + m;
    // Left side: the product of all x_i + y_j.
    let mut lhs = DensePoly::new(total, 0, vec![(vec![0; total], Rat::from_integer(1.into()))])?;
    for i in 0..n {
        for j in 0..m {
            let mut xi = vec![0u32; total];
            xi[i] = 1;
            let mut yj = vec![0u32; total];
            yj[n + j] = 1;
            let factor = DensePoly::new(
                total,
                1,
                vec![
                    (xi, Rat::from_integer(1.into())),
                    (yj, Rat::from_integer(1.into())),
                ],
            )?;
            lhs = lhs.mul(&factor)?;
        }
    }
    // Right side: sum over partitions in the box.
    let mut rhs = DensePoly::zero(total, (n * m) as u32);
    for w in 0..=(n * m) as u32 {
        for lam in crate::partitions::generate_partitions_max_len(w, n) {
            if lam.part(0) > m as u32 {
                continue;
            }
            let comp = box_complement_conjugate(&lam, n, m)?;
            let sx = embed(&schur_dense(&lam, n)?, total, 0)?;
            let sy = embed(&schur_dense(&comp, m)?, total, n)?;
            rhs = rhs.add(&sx.mul(&sy)?)?;
        }
    }
    Ok(lhs == rhs)
}

/// The conjugate of the complement of `lambda` inside an `n × m` box:
/// reverse the complements `m − λ_{n+1−i}` and conjugate.
fn box_complement_conjugate(lambda: &Partition, n: usize, m: usize) -> Result<Partition> {
    if lambda.len() > n || lambda.part(0) > m as u32 {
        return Err(Error::Invalid(format!(
            "{lambda} does not fit in a {n} x {m} box"
        )));
    }
    let complement: Vec<u32> = (0..n).map(|i| m as u32 - lambda.part(n - 1 - i)).collect();
    Ok(Partition::new(complement)?.conjugate())
}

/// Re-embeds a polynomial in `total` variables with its variables placed at
/// `offset..offset + nvars`.
fn embed(f: &DensePoly, total: usize, offset: usize) -> Result<DensePoly> {
    let terms = f.terms().iter().map(|(e, c)| {
        let mut exp = vec![0u32; total];
        exp[offset..offset + e.len()].copy_from_slice(e);
        (exp, c.clone())
    });
    DensePoly::new(total, f.degree(), terms.collect::<Vec<_>>())
}
