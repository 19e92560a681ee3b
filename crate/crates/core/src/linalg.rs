//! Exact determinants, ranks and linear solves over commutative rings.

use std::collections::HashMap;

use crate::scalar::{Domain, Ring};

/// Division-free determinant by Laplace expansion, memoized over column
/// subsets. Works over any commutative ring, including rings with zero
/// divisors. Cost is `O(2^n n)` ring operations in the worst case; zero
/// entries prune the search.
pub fn det<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    assert!(n <= 63, "determinant too large for subset expansion");
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let nonzero: Vec<Vec<bool>> = m
        .iter()
        .map(|row| row.iter().map(|x| !ring.is_zero(x)).collect())
        .collect();
    let mut level: HashMap<u64, R::Elem> = HashMap::new();
    level.insert(0, ring.one());
    for (k, row) in m.iter().enumerate() {
        let mut next: HashMap<u64, R::Elem> = HashMap::new();
        for (&mask, val) in &level {
            for j in 0..n {
                if mask & (1 << j) != 0 || !nonzero[k][j] {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let mut t = ring.mul(val, &row[j]);
                if inversions % 2 == 1 {
                    t = ring.neg(&t);
                }
                let new_mask = mask | (1 << j);
                match next.get_mut(&new_mask) {
                    Some(acc) => *acc = ring.add(acc, &t),
                    None => {
                        next.insert(new_mask, t);
                    }
                }
            }
        }
        next.retain(|_, v| !ring.is_zero(v));
        if next.is_empty() {
            return ring.zero();
        }
        level = next;
    }
    level.into_values().next().unwrap_or_else(|| ring.zero())
}

/// Result of fraction-free row reduction.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rank: usize,
    /// Original indices of rows that carry pivots.
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
}

/// Fraction-free (Bareiss) elimination over an integral domain.
pub fn echelon<D: Domain>(ring: &D, rows: &[Vec<D::Elem>]) -> Echelon {
    let mut a: Vec<Vec<D::Elem>> = rows.to_vec();
    let mut order: Vec<usize> = (0..a.len()).collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = ring.one();
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !ring.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        order.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..a.len() {
            let factor = a[i][c].clone();
            for j in c..ncols {
                let v = ring.sub(&ring.mul(&pivot, &a[i][j]), &ring.mul(&factor, &a[r][j]));
                a[i][j] = ring
                    .exact_div(&v, &prev)
                    .expect("Bareiss division must be exact in a domain");
            }
        }
        prev = pivot;
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        rank: r,
        pivot_rows: order[..r].to_vec(),
        pivot_cols,
    }
}

/// Rank of a matrix over a domain (equivalently over its fraction field).
pub fn rank<D: Domain>(ring: &D, rows: &[Vec<D::Elem>]) -> usize {
    echelon(ring, rows).rank
}

/// Solution of `A x = b` as numerators over a common denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionSolution<E> {
    pub numerators: Vec<E>,
    pub denominator: E,
}

/// Solves `A x = b` over the fraction field of a domain.
///
/// Free variables are set to zero. Returns `None` when the system is
/// inconsistent.
pub fn solve<D: Domain>(ring: &D, a: &[Vec<D::Elem>], b: &[D::Elem]) -> Option<FractionSolution<D::Elem>> {
    let nvars = a.first().map_or(0, Vec::len);
    let ech = echelon(ring, a);
    let sub: Vec<Vec<D::Elem>> = ech
        .pivot_rows
        .iter()
        .map(|&i| ech.pivot_cols.iter().map(|&j| a[i][j].clone()).collect())
        .collect();
    let den = det(ring, &sub);
    let mut numerators = vec![ring.zero(); nvars];
    for (k, &col) in ech.pivot_cols.iter().enumerate() {
        let mut m = sub.clone();
        for (row, &i) in m.iter_mut().zip(&ech.pivot_rows) {
            row[k] = b[i].clone();
        }
        numerators[col] = det(ring, &m);
    }
    // check every equation: A * num == b * den
    for (row, bi) in a.iter().zip(b) {
        let lhs = ring.sum(
            row.iter()
                .zip(&numerators)
                .map(|(x, y)| ring.mul(x, y))
                .collect::<Vec<_>>()
                .iter(),
        );
        if !ring.is_zero(&ring.sub(&lhs, &ring.mul(bi, &den))) {
            return None;
        }
    }
    Some(FractionSolution {
        numerators,
        denominator: den,
    })
}
