//! Kostka numbers by explicit semistandard-tableau enumeration, per-degree
//! Kostka matrices in descending-lexicographic partition order, and their
//! exact unitriangular inverses.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};

/// Number of semistandard Young tableaux of shape `lambda` and content `mu`:
/// fillings of the diagram of `lambda` with `mu_1` ones, `mu_2` twos, …,
/// weakly increasing along rows and strictly increasing down columns.
///
/// Counted by literal cell-by-cell backtracking (no combinatorial shortcuts);
/// the weights of `lambda` and `mu` must agree.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::Invalid(format!(
            "kostka requires equal weights, got |{lambda}| = {} and |{mu}| = {}",
            lambda.weight(),
            mu.weight()
        )));
    }
    if lambda.weight() == 0 {
        return Ok(BigInt::one());
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let values = mu.len();
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    // rows[r][c] holds the entry placed at row r, column c (1-based values).
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut count: u128 = 0;
    fill(&shape, values, &mut remaining, &mut rows, 0, 0, &mut count);
    Ok(BigInt::from(count))
}

/// Backtracking over cells in row-major order. `r`, `c` locate the next cell.
fn fill(
    shape: &[usize],
    values: usize,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<usize>>,
    r: usize,
    c: usize,
    count: &mut u128,
) {
    if r == shape.len() {
        *count += 1;
        return;
    }
    let (next_r, next_c) = if c + 1 < shape[r] {
        (r, c + 1)
    } else {
        (r + 1, 0)
    };
    // Row-weak bound from the left neighbour, column-strict from above.
    let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_above = if r > 0 && c < shape[r - 1] {
        rows[r - 1][c] + 1
    } else {
        1
    };
    let lo = min_left.max(min_above);
    for v in lo..=values {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v;
        fill(shape, values, remaining, rows, next_r, next_c, count);
        remaining[v - 1] += 1;
    }
}

/// The Kostka data for one degree: all partitions of `d` in descending
/// lexicographic order, the matrix `K[i][j] = K_{p_i, p_j}`, and its exact
/// inverse. In this order `K` is upper unitriangular (`K_{λμ} = 0` unless
/// `μ ⊴ λ`, and descending lex refines dominance), so the inverse has integer
/// entries and unit diagonal.
#[derive(Debug)]
pub struct KostkaTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    pub k: Vec<Vec<BigInt>>,
    pub k_inv: Vec<Vec<BigInt>>,
}

impl KostkaTable {
    fn compute(d: u32) -> Self {
        let partitions = generate_partitions(d);
        let n = partitions.len();
        let mut k = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                k[i][j] = kostka(&partitions[i], &partitions[j]).expect("equal weights");
            }
        }
        // Back-substitution on the unitriangular matrix:
        // inv[i][i] = 1, inv[i][j] = -Σ_{i<t≤j} K[i][t]·inv[t][j] for j > i.
        let mut k_inv = vec![vec![BigInt::zero(); n]; n];
        for i in (0..n).rev() {
            k_inv[i][i] = BigInt::one();
            for j in (i + 1)..n {
                let mut acc = BigInt::zero();
                for t in (i + 1)..=j {
                    acc += &k[i][t] * &k_inv[t][j];
                }
                k_inv[i][j] = -acc;
            }
        }
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        KostkaTable {
            partitions,
            index,
            k,
            k_inv,
        }
    }

    pub fn position(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `K_{λμ}`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.k[self.position(lambda)][self.position(mu)]
    }

    /// `(K^{-1})_{λμ}`.
    pub fn inverse_entry(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.k_inv[self.position(lambda)][self.position(mu)]
    }
}

/// Shared per-degree table, computed once and reused concurrently.
pub fn table(d: u32) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    // Computing outside the lock could duplicate work on a race; holding the
    // lock keeps initialization single-shot, and tables are small.
    let mut guard = cache.lock().expect("kostka cache poisoned");
    guard
        .entry(d)
        .or_insert_with(|| Arc::new(KostkaTable::compute(d)))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dominance_leq;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_kostka_values() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(kostka(&p(&[2]), &p(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(0));
        assert_eq!(kostka(&p(&[3, 1]), &p(&[1, 1, 1, 1])).unwrap(), BigInt::from(3));
        assert_eq!(
            kostka(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn diagonal_is_one_up_to_degree_6() {
        for d in 0..=6 {
            for lam in generate_partitions(d) {
                assert_eq!(kostka(&lam, &lam).unwrap(), BigInt::one(), "λ = {lam}");
            }
        }
    }

    #[test]
    fn vanishing_matches_dominance_up_to_degree_6() {
        for d in 1..=6 {
            let parts = generate_partitions(d);
            for lam in &parts {
                for mu in &parts {
                    let k = kostka(lam, mu).unwrap();
                    let dominated = dominance_leq(mu, lam).unwrap();
                    assert_eq!(
                        k.is_zero(),
                        !dominated,
                        "K_{{{lam},{mu}}} = {k}, dominance {dominated}"
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_in_content_up_to_degree_6() {
        // For fixed shape γ: μ ⊴ λ implies K_{γμ} ≥ K_{γλ}.
        for d in 1..=6 {
            let parts = generate_partitions(d);
            for gamma in &parts {
                for lam in &parts {
                    for mu in &parts {
                        if dominance_leq(mu, lam).unwrap() {
                            assert!(
                                kostka(gamma, mu).unwrap() >= kostka(gamma, lam).unwrap(),
                                "γ={gamma}, μ={mu} ⊴ λ={lam}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_content_cross_checks() {
        // Standard tableaux of shape (n, n) are counted by Catalan numbers;
        // shape (k, l) by the ballot numbers C(k+l, l)·(k−l+1)/(k+1).
        assert_eq!(
            kostka(&p(&[3, 3]), &p(&[1, 1, 1, 1, 1, 1])).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            kostka(&p(&[4, 4]), &p(&[1, 1, 1, 1, 1, 1, 1, 1])).unwrap(),
            BigInt::from(14)
        );
        assert_eq!(
            kostka(&p(&[5, 2]), &p(&[1, 1, 1, 1, 1, 1, 1])).unwrap(),
            BigInt::from(14)
        );
    }

    #[test]
    fn degree_3_table_and_inverse() {
        let t = table(3);
        assert_eq!(t.partitions, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let k: Vec<Vec<i64>> = t
            .k
            .iter()
            .map(|row| row.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect();
        assert_eq!(k, vec![vec![1, 1, 1], vec![0, 1, 2], vec![0, 0, 1]]);
        let ki: Vec<Vec<i64>> = t
            .k_inv
            .iter()
            .map(|row| row.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect();
        assert_eq!(ki, vec![vec![1, -1, 1], vec![0, 1, -2], vec![0, 0, 1]]);
    }

    #[test]
    fn inverse_is_exact_up_to_degree_6() {
        for d in 0..=6 {
            let t = table(d);
            let n = t.partitions.len();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigInt::zero();
                    for l in 0..n {
                        acc += &t.k[i][l] * &t.k_inv[l][j];
                    }
                    let expect = if i == j { BigInt::one() } else { BigInt::zero() };
                    assert_eq!(acc, expect, "degree {d}, ({i},{j})");
                }
            }
        }
    }
}
