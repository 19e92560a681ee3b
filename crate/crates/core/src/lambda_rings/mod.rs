//! Finitely presented λ-rings and the operations defined on any λ-ring:
//! λ- and σ-operations, evaluation of symmetric functions, bound checks
//! and the splitting constructions.

mod binomial;
mod embedding;
pub use embedding::{quotient_embedding, KernelReport, QuotientEmbedding};
mod hook;
pub use hook::{hook_split, hook_split_negated, HookSplit};
mod line_poly;
mod poly_ring;
mod quotient;
mod sum_bound;
pub use sum_bound::{sum_bound_candidate, CandidateCheck, SumBoundReport, SumBoundWitness};
mod table;
pub use table::{TablePreset, TableRing};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::lambda_calculus::{evaluate_e_polynomial, series_negate_variable, series_invert, LambdaSeries};
use crate::partitions::{superpartitions_of, Partition};
use crate::scalar::Ring;
use crate::schur::{jacobi_trudi, schur_to_e_polynomial, GenBasis, SymFuncOver};

pub use binomial::Binomial;


pub use line_poly::LinePoly;
pub use poly_ring::{split_even, Generator, PolyLambdaRing};
pub use quotient::SchurQuotient;



/// A ring with λ-operations.
///
/// Implementors supply the truncated series `λ_t(x)`; everything else is
/// derived from it.
pub trait LambdaRing: Ring {
    /// Largest λ-degree the ring will compute.
    fn degree_cap(&self) -> usize;

    /// `[1, λ¹(x), …, λⁿ(x)]`, without checking the cap.
    fn lambda_values(&self, x: &Self::Elem, n: usize) -> Result<Vec<Self::Elem>>;

    /// Human-readable rendering of an element.
    fn render(&self, x: &Self::Elem) -> String;
}

/// `λ_t(x)` to precision `n`.
pub fn lambda_series<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<LambdaSeries<R::Elem>> {
    check_cap(n, ring.degree_cap())?;
    let values = ring.lambda_values(x, n)?;
    crate::lambda_calculus::series_from_lambdas(ring, values, n)
}

/// `σ_t(x) = λ_{−t}(x)^{−1}` to precision `n`.
pub fn sigma_series<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<LambdaSeries<R::Elem>> {
    let lam = lambda_series(ring, x, n)?;
    series_invert(ring, &series_negate_variable(ring, &lam))
}

/// `λⁿ(x)`.
pub fn lambda_op<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<R::Elem> {
    Ok(lambda_series(ring, x, n)?.into_coeffs().swap_remove(n))
}

/// `σⁿ(x)`.
pub fn sigma_op<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<R::Elem> {
    Ok(sigma_series(ring, x, n)?.into_coeffs().swap_remove(n))
}

/// `φ(x)`: `φ` written in the `e_k` and evaluated at `e_k ↦ λᵏ(x)`.
pub fn apply_symfunc<R: LambdaRing>(ring: &R, phi: &SymFuncOver<BigInt>, x: &R::Elem) -> Result<R::Elem> {
    let deg = phi.degree().unwrap_or(0);
    let lam = lambda_series(ring, x, deg)?;
    evaluate_e_polynomial(ring, &schur_to_e_polynomial(phi), lam.coeffs())
}

/// `s_π(x) = det(σ^{π_i+j−i}(x))`.
pub fn schur_value<R: LambdaRing>(ring: &R, pi: &Partition, x: &R::Elem) -> Result<R::Elem> {
    let sigma = sigma_series(ring, x, pi.weight())?;
    Ok(schur_from_series(ring, pi, GenBasis::H, sigma.coeffs()))
}

/// `s_π(x) = det(λ^{π′_i+j−i}(x))`; agrees with [`schur_value`].
pub fn schur_value_dual<R: LambdaRing>(ring: &R, pi: &Partition, x: &R::Elem) -> Result<R::Elem> {
    let lam = lambda_series(ring, x, pi.weight())?;
    Ok(schur_from_series(ring, pi, GenBasis::E, lam.coeffs()))
}

fn schur_from_series<R: Ring>(ring: &R, pi: &Partition, basis: GenBasis, values: &[R::Elem]) -> R::Elem {
    let mut acc = ring.zero();
    for (c, m) in &jacobi_trudi(pi, basis).terms {
        let t = m.indices.iter().fold(ring.from_int(c), |t, &k| ring.mul(&t, &values[k]));
        acc = ring.add(&acc, &t);
    }
    acc
}

/// Result of [`check_bound`].
#[derive(Debug, Clone)]
pub struct BoundReport<E> {
    pub bound: Partition,
    pub up_to: usize,
    /// True when every `s_π(x)` with `π ⊇ bound`, `|π| ≤ up_to` vanishes.
    pub holds: bool,
    pub witnesses: Vec<(Partition, E)>,
}

/// Evaluates `s_π(x)` for every `π ⊇ λ` with `|π| ≤ N`.
pub fn check_bound<R: LambdaRing>(ring: &R, x: &R::Elem, lambda: &Partition, n: usize) -> Result<BoundReport<R::Elem>> {
    let sigma = sigma_series(ring, x, n)?;
    let mut witnesses = Vec::new();
    for pi in (lambda.weight()..=n).flat_map(|w| superpartitions_of(lambda, w)) {
        let v = schur_from_series(ring, &pi, GenBasis::H, sigma.coeffs());
        if !ring.is_zero(&v) {
            witnesses.push((pi, v));
        }
    }
    Ok(BoundReport {
        bound: lambda.clone(),
        up_to: n,
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// Result of [`even_odd_analysis`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenOddReport {
    pub even_degree: Option<usize>,
    pub odd_degree: Option<usize>,
    pub up_to: usize,
}

/// Least `n < N` with `λᵏ(x) = 0` (resp. `σᵏ(x) = 0`) for all `n < k ≤ N`.
pub fn even_odd_analysis<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<EvenOddReport> {
    let lam = lambda_series(ring, x, n)?;
    let sig = sigma_series(ring, x, n)?;
    let degree = |s: &LambdaSeries<R::Elem>| {
        let last = (0..=n).rev().find(|&k| !ring.is_zero(&s.coeffs()[k])).unwrap_or(0);
        (last < n).then_some(last)
    };
    Ok(EvenOddReport {
        even_degree: degree(&lam),
        odd_degree: degree(&sig),
        up_to: n,
    })
}

/// Both sides of `s_π′(−x) = (−1)^{|π|} s_π(x)`.
#[derive(Debug, Clone)]
pub struct NegationCheck<E> {
    pub lhs: E,
    pub rhs: E,
    pub signed_holds: bool,
    /// Whether `s_π′(−x) = s_π(x)` without the sign.
    pub unsigned_holds: bool,
}

pub fn negate_schur_identity<R: LambdaRing>(ring: &R, x: &R::Elem, pi: &Partition) -> Result<NegationCheck<R::Elem>> {
    let lhs = schur_value(ring, &pi.conjugate(), &ring.neg(x))?;
    let rhs = schur_value(ring, pi, x)?;
    let signed = if pi.weight().is_multiple_of(2) { rhs.clone() } else { ring.neg(&rhs) };
    Ok(NegationCheck {
        signed_holds: ring.is_zero(&ring.sub(&lhs, &signed)),
        unsigned_holds: ring.is_zero(&ring.sub(&lhs, &rhs)),
        lhs,
        rhs,
    })
}

/// `s_π(ℓx)` against `ℓ^{|π|} s_π(x)`, and `s_π(−ℓx)` against
/// `(−ℓ)^{|π|} s_π′(x)`.
#[derive(Debug, Clone)]
pub struct LineScaling<E> {
    pub value: E,
    pub expected: E,
    pub negated_value: E,
    pub negated_expected: E,
}

impl<E: PartialEq> LineScaling<E> {
    pub fn holds(&self) -> bool {
        self.value == self.expected && self.negated_value == self.negated_expected
    }
}

/// Errors with [`Error::NotALine`] unless `λᵏ(ℓ) = 0` for `2 ≤ k ≤ max(2, |π|)`.
pub fn line_scaling<R: LambdaRing>(ring: &R, line: &R::Elem, x: &R::Elem, pi: &Partition) -> Result<LineScaling<R::Elem>> {
    let n = pi.weight();
    let lam = lambda_series(ring, line, n.max(2))?;
    if lam.coeffs()[2..].iter().any(|c| !ring.is_zero(c)) {
        return Err(Error::NotALine);
    }
    let lx = ring.mul(line, x);
    let value = schur_value(ring, pi, &lx)?;
    let expected = ring.mul(&ring.pow(line, n as u32), &schur_value(ring, pi, x)?);
    let negated_value = schur_value(ring, pi, &ring.neg(&lx))?;
    let negated_expected = ring.mul(&ring.pow(&ring.neg(line), n as u32), &schur_value(ring, &pi.conjugate(), x)?);
    Ok(LineScaling {
        value,
        expected,
        negated_value,
        negated_expected,
    })
}

/// Series `λ_t(x)` raised to an integer power, to precision `n`.
pub(crate) fn series_power<R: Ring>(ring: &R, s: &[R::Elem], e: &BigInt, n: usize) -> Result<Vec<R::Elem>> {
    use num_traits::{Signed, ToPrimitive};
    let base = crate::lambda_calculus::series_from_lambdas(ring, s.to_vec(), n)?;
    let base = if e.is_negative() { series_invert(ring, &base)? } else { base };
    let mut k = e.abs().to_u64().ok_or_else(|| Error::Unsupported("exponent too large".into()))?;
    let mut acc = crate::lambda_calculus::series_from_lambdas(ring, vec![ring.one()], n)?;
    let mut sq = base;
    while k > 0 {
        if k & 1 == 1 {
            acc = crate::lambda_calculus::series_multiply(ring, &acc, &sq);
        }
        k >>= 1;
        if k > 0 {
            sq = crate::lambda_calculus::series_multiply(ring, &sq, &sq);
        }
    }
    Ok(acc.into_coeffs())
}

/// `λ_t(x + y) = λ_t(x) λ_t(y)` on value lists.
pub(crate) fn multiply_values<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut acc = ring.zero();
            for i in 0..=k {
                if ring.is_zero(&a[i]) || ring.is_zero(&b[k - i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&a[i], &b[k - i]));
            }
            acc
        })
        .collect()
}
