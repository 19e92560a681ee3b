//! Schur polynomials in finitely many variables, computed directly from
//! semistandard tableaux. Used as an independent check on the Schur-basis
//! arithmetic.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partitions::Partition;
use crate::poly::{MPoly, Monomial};
use crate::scalar::Scalar;

use super::SymFuncOver;

/// `s_π(x_0, ..., x_{N−1})` as the sum of `x^T` over SSYT `T` of shape `π`
/// with entries in `0..N`.
pub fn schur_polynomial(pi: &Partition, nvars: usize) -> MPoly<BigInt> {
    let mut out = MPoly::zero();
    if pi.len() > nvars {
        return out;
    }
    let shape = pi.parts();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut exps = vec![0u32; nvars];
    fill(shape, &mut rows, 0, 0, nvars, &mut exps, &mut out);
    out
}

fn fill(
    shape: &[usize],
    rows: &mut Vec<Vec<usize>>,
    r: usize,
    c: usize,
    n: usize,
    exps: &mut [u32],
    out: &mut MPoly<BigInt>,
) {
    if r == shape.len() {
        out.add_term(Monomial::from_exponents(exps), BigInt::from(1));
        return;
    }
    if c == shape[r] {
        fill(shape, rows, r + 1, 0, n, exps, out);
        return;
    }
    let lo_row = if c > 0 { rows[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 0 };
    // entries in row r are at least r
    for v in lo_row.max(lo_col)..n {
        rows[r][c] = v;
        exps[v] += 1;
        fill(shape, rows, r, c + 1, n, exps, out);
        exps[v] -= 1;
    }
}

/// Image of `f` under `Λ → Z[x_0..x_{N−1}]`.
pub fn monomial_expansion_oracle<C: Scalar>(f: &SymFuncOver<C>, nvars: usize) -> MPoly<C> {
    let mut out = MPoly::zero();
    for (pi, c) in f.terms() {
        let p = schur_polynomial(pi, nvars).map_coeffs(|k| C::from_integer(k) * c.clone());
        out = &out + &p;
    }
    out
}
