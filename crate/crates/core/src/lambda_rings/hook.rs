//! Virtual splitting of an element with bound `(2,1)`.
//!
//! In `A = R[a]/(λ³(y))` with `a` a line and `y = x + a`, the image of `y`
//! is even of degree two, so `x = l1 + l2 − a` after splitting `y`. The
//! checks here are the finite part of that argument: the identities
//! `λ^{n+1}(y) = x^{n−2} λ³(y)`, and injectivity of `R → A` degree by degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::partitions::{part, Partition};
use crate::scalar::{Native, Ring};
use crate::SymFunc;

use super::{check_bound, lambda_series, LambdaRing, LinePoly, SchurQuotient};

/// Outcome of [`hook_split`].
#[derive(Debug, Clone)]
pub struct HookSplit {
    /// The element that was split: `x`, or `−x` for [`hook_split_negated`].
    pub element: SymFunc,
    /// `y = element + a`, as coefficients of `aⁱ`.
    pub y: Vec<SymFunc>,
    pub lambda3_y: Vec<SymFunc>,
    /// Values of `n` for which `λ^{n+1}(y) = x^{n−2} λ³(y)` was checked.
    pub identities_checked: Vec<usize>,
    pub identity_failures: Vec<usize>,
    /// Degree of `y` as an even element of `A`, if the identities hold.
    pub y_even_degree: Option<usize>,
    /// Degrees `0..=injective_up_to` where `R_d → A_d` was checked.
    pub injective_up_to: usize,
    pub injectivity_failures: Vec<usize>,
    /// Rank of the original `x` in the extension: `1`, or `−1` when `−x`
    /// was split.
    pub rank: i64,
}

impl HookSplit {
    pub fn holds(&self) -> bool {
        self.identity_failures.is_empty() && self.injectivity_failures.is_empty() && self.y_even_degree == Some(2)
    }

    /// `x` as a virtual sum of line elements.
    pub fn virtual_sum(&self) -> &'static str {
        if self.rank > 0 {
            "l1 + l2 - a"
        } else {
            "a - l1 - l2"
        }
    }
}

/// Splits `x` in `R = Λ_λ` (or Λ); checks the identities for
/// `3 ≤ n ≤ n_max` and injectivity in degrees up to `inj_degree`.
pub fn hook_split(ring: &SchurQuotient, x: &SymFunc, n_max: usize, inj_degree: usize) -> Result<HookSplit> {
    split(ring, x, n_max, inj_degree, 1)
}

/// [`hook_split`] applied to `−x`; `x` then has rank `−1`.
pub fn hook_split_negated(ring: &SchurQuotient, x: &SymFunc, n_max: usize, inj_degree: usize) -> Result<HookSplit> {
    split(ring, &-x.clone(), n_max, inj_degree, -1)
}

fn split(ring: &SchurQuotient, x: &SymFunc, n_max: usize, inj_degree: usize, rank_sign: i64) -> Result<HookSplit> {
    let e = match x.degree() {
        Some(e) if e > 0 && x.is_homogeneous() => e,
        _ => return Err(Error::Precondition("x must be nonzero and homogeneous of positive degree".into())),
    };
    let cap = ring.degree_cap();
    let bound = check_bound(ring, x, &part(&[2, 1]), cap)?;
    if let Some((pi, _)) = bound.witnesses.first() {
        return Err(Error::Precondition(format!("(2,1) is not a bound: s{}(x) ≠ 0", pi)));
    }
    let a_ring = LinePoly::new(ring.clone());
    let y = a_ring.add(&a_ring.constant(x), &a_ring.line());
    let lam = lambda_series(&a_ring, &y, (n_max + 1).max(3))?.into_coeffs();
    let l3 = lam[3].clone();

    let mut identities_checked = Vec::new();
    let mut identity_failures = Vec::new();
    for n in 3..=n_max {
        let rhs = a_ring.mul(&a_ring.constant(&ring.pow(x, (n - 2) as u32)), &l3);
        identities_checked.push(n);
        if lam[n + 1] != rhs {
            identity_failures.push(n);
        }
    }
    // below degree 3e the ideal is zero, so λ²(y) ≠ 0 survives in A
    let y_even_degree = (identity_failures.is_empty() && !a_ring.is_zero(&lam[2])).then_some(2);

    let mut injectivity_failures = Vec::new();
    for d in 0..=inj_degree {
        if !injective_in_degree(ring, &a_ring, &l3, e, d) {
            injectivity_failures.push(d);
        }
    }

    Ok(HookSplit {
        element: x.clone(),
        y,
        lambda3_y: l3,
        identities_checked,
        identity_failures,
        y_even_degree,
        injective_up_to: inj_degree,
        injectivity_failures,
        rank: rank_sign,
    })
}

/// `R_d ∩ (λ³(y))_d = 0`, with `a` in degree `e`.
fn injective_in_degree(ring: &SchurQuotient, a_ring: &LinePoly<SchurQuotient>, l3: &[SymFunc], e: usize, d: usize) -> bool {
    // coordinates of R[a]_d: pairs (i, π) with |π| = d − ie
    let mut coords: BTreeMap<(usize, Partition), usize> = BTreeMap::new();
    for i in 0..=d / e {
        for pi in ring.basis(d - i * e) {
            let k = coords.len();
            coords.insert((i, pi), k);
        }
    }
    let vector = |p: &[SymFunc]| -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); coords.len()];
        for (i, f) in p.iter().enumerate() {
            for (pi, c) in f.terms() {
                let k = coords[&(i, pi.clone())];
                v[k] = c.clone();
            }
        }
        v
    };
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    if d >= 3 * e {
        let rest = d - 3 * e;
        for i in 0..=rest / e {
            for pi in ring.basis(rest - i * e) {
                let m = a_ring.monomial(&SymFunc::schur(pi), i);
                gens.push(vector(&a_ring.mul(&m, &l3.to_vec())));
            }
        }
    }
    let base: Vec<Vec<BigInt>> = ring
        .basis(d)
        .into_iter()
        .map(|pi| vector(&a_ring.constant(&SymFunc::schur(pi))))
        .collect();
    if coords.is_empty() {
        return true;
    }
    let z = Native::<BigInt>::new();
    let rg = if gens.is_empty() { 0 } else { rank(&z, &gens) };
    let mut all = gens;
    let dim = base.len();
    all.extend(base);
    let rall = if all.is_empty() { 0 } else { rank(&z, &all) };
    rall == rg + dim
}
