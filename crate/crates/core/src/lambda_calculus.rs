//! Universal λ-ring polynomials and truncated λ-series.
//!
//! `P_n` expresses `λⁿ(xy)` through the `λⁱx` and `λʲy`; `P_{m,n}` expresses
//! `λ^m(λⁿx)` through the `λⁱx`. Both are pure combinatorial constants and
//! are memoized per index.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_cap, Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::poly::{format_signed_sum, MPoly, Monomial};
use crate::scalar::Ring;
use crate::schur::{coproduct, schur_in_e, SymFuncOver};
use crate::DEFAULT_MAX_DEGREE;

/// Which argument a `λⁱ` symbol is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaSymbol {
    X,
    Y,
}

impl fmt::Display for LambdaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaSymbol::X => "x",
            LambdaSymbol::Y => "y",
        })
    }
}

fn var_of(sym: LambdaSymbol, index: usize) -> u32 {
    assert!(index >= 1, "λ-symbols start at index 1");
    let base = 2 * (index as u32 - 1);
    match sym {
        LambdaSymbol::X => base,
        LambdaSymbol::Y => base + 1,
    }
}

fn symbol_of(v: u32) -> (LambdaSymbol, usize) {
    let sym = if v.is_multiple_of(2) { LambdaSymbol::X } else { LambdaSymbol::Y };
    (sym, v as usize / 2 + 1)
}

/// One factor `(λ^index symbol)^exponent`.
pub type LambdaFactor = (LambdaSymbol, usize, u32);

/// An integer polynomial in the symbols `λ¹x, λ²x, …` and `λ¹y, λ²y, …`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPolynomial {
    poly: MPoly<BigInt>,
}

impl LambdaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single symbol `λ^index` applied to `sym`.
    pub fn symbol(sym: LambdaSymbol, index: usize) -> Self {
        LambdaPolynomial { poly: MPoly::var(var_of(sym, index)) }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Vec<LambdaFactor>)>,
    {
        let mut poly = MPoly::zero();
        for (c, factors) in terms {
            let m = Monomial::from_pairs(factors.into_iter().map(|(s, i, e)| (var_of(s, i), e)));
            poly.add_term(m, c);
        }
        LambdaPolynomial { poly }
    }

    /// Wraps a polynomial in the elementary generators, `e_k ↦ λᵏ sym`.
    pub fn from_e_polynomial(p: &MPoly<BigInt>, sym: LambdaSymbol) -> Self {
        LambdaPolynomial {
            poly: p.substitute(|k| MPoly::var(var_of(sym, k as usize))),
        }
    }

    /// Terms in canonical order as `(coefficient, factors)`.
    pub fn terms(&self) -> Vec<(BigInt, Vec<LambdaFactor>)> {
        self.poly
            .terms()
            .map(|(m, c)| {
                let factors = m
                    .pairs()
                    .iter()
                    .map(|&(v, e)| {
                        let (s, i) = symbol_of(v);
                        (s, i, e)
                    })
                    .collect();
                (c.clone(), factors)
            })
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.poly.num_terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficient of a monomial given as factors.
    pub fn coeff(&self, factors: &[LambdaFactor]) -> BigInt {
        let m = Monomial::from_pairs(factors.iter().map(|&(s, i, e)| (var_of(s, i), e)));
        self.poly.coeff(&m)
    }

    /// Total weight of each monomial, `λⁱ` having weight `i`.
    pub fn weights(&self) -> Vec<usize> {
        self.poly
            .terms()
            .map(|(m, _)| m.weighted_degree(|v| symbol_of(v).1 as u32) as usize)
            .collect()
    }

    /// Weight carried by the `sym` factors of each monomial.
    pub fn partial_weights(&self, sym: LambdaSymbol) -> Vec<usize> {
        self.poly
            .terms()
            .map(|(m, _)| {
                m.weighted_degree(|v| {
                    let (s, i) = symbol_of(v);
                    if s == sym {
                        i as u32
                    } else {
                        0
                    }
                }) as usize
            })
            .collect()
    }

    /// Largest index of a `sym` factor occurring in each monomial.
    pub fn max_index_per_term(&self, sym: LambdaSymbol) -> Vec<Option<usize>> {
        self.poly
            .terms()
            .map(|(m, _)| {
                m.pairs()
                    .iter()
                    .map(|&(v, _)| symbol_of(v))
                    .filter(|&(s, _)| s == sym)
                    .map(|(_, i)| i)
                    .max()
            })
            .collect()
    }

    pub fn as_mpoly(&self) -> &MPoly<BigInt> {
        &self.poly
    }

    /// Evaluates with `xs[i] = λⁱ(x)` and `ys[i] = λⁱ(y)` (index 0 unused).
    pub fn evaluate<R: Ring>(&self, ring: &R, xs: &[R::Elem], ys: &[R::Elem]) -> Result<R::Elem> {
        for (m, _) in self.poly.terms() {
            for &(v, _) in m.pairs() {
                let (s, i) = symbol_of(v);
                let given = match s {
                    LambdaSymbol::X => xs.len(),
                    LambdaSymbol::Y => ys.len(),
                };
                if i >= given {
                    return Err(Error::InsufficientValues { needed: i, given: given.saturating_sub(1) });
                }
            }
        }
        Ok(self.poly.eval_in(
            ring,
            |v| match symbol_of(v) {
                (LambdaSymbol::X, i) => xs[i].clone(),
                (LambdaSymbol::Y, i) => ys[i].clone(),
            },
            |c| ring.from_int(c),
        ))
    }
}

impl fmt::Display for LambdaPolynomial {
    /// `x1^2*y2 + x2*y1^2 - 2*x2*y2`, where `x1` reads `λ¹x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&Monomial, &BigInt)> = self.poly.terms().collect();
        terms.sort_by(|a, b| b.0.lex_cmp(a.0));
        let rendered = terms
            .into_iter()
            .map(|(m, c)| {
                let mut factors: Vec<(LambdaSymbol, usize, u32)> = m
                    .pairs()
                    .iter()
                    .map(|&(v, e)| {
                        let (s, i) = symbol_of(v);
                        (s, i, e)
                    })
                    .collect();
                factors.sort();
                let mono: Vec<String> = factors
                    .into_iter()
                    .map(|(s, i, e)| if e == 1 { format!("{}{}", s, i) } else { format!("{}{}^{}", s, i, e) })
                    .collect();
                (mono.join("*"), c.to_string())
            })
            .collect();
        f.write_str(&format_signed_sum(rendered))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    coeff: String,
    monomial: Vec<LambdaFactor>,
}

impl Serialize for LambdaPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms()
            .into_iter()
            .map(|(c, monomial)| TermRecord { coeff: c.to_string(), monomial })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LambdaPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            let c: BigInt = r.coeff.parse().map_err(serde::de::Error::custom)?;
            if r.monomial.iter().any(|&(_, i, _)| i == 0) {
                return Err(serde::de::Error::custom("λ-symbol index must be at least 1"));
            }
            terms.push((c, r.monomial));
        }
        Ok(LambdaPolynomial::from_terms(terms))
    }
}

fn product_cache() -> &'static RwLock<HashMap<usize, LambdaPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, LambdaPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn composition_cache() -> &'static RwLock<HashMap<(usize, usize), LambdaPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), LambdaPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memoized<K: std::hash::Hash + Eq + Clone>(
    cache: &RwLock<HashMap<K, LambdaPolynomial>>,
    key: K,
    compute: impl FnOnce() -> LambdaPolynomial,
) -> LambdaPolynomial {
    if let Some(p) = cache.read().expect("cache poisoned").get(&key) {
        return p.clone();
    }
    let p = compute();
    cache.write().expect("cache poisoned").entry(key).or_insert(p).clone()
}

/// `P_n` with `λⁿ(xy) = P_n(λ¹x..λⁿx; λ¹y..λⁿy)`, default degree cap.
pub fn product_polynomial(n: usize) -> Result<LambdaPolynomial> {
    product_polynomial_capped(n, DEFAULT_MAX_DEGREE)
}

pub fn product_polynomial_capped(n: usize, cap: usize) -> Result<LambdaPolynomial> {
    if n == 0 {
        return Err(Error::Precondition("product polynomial index must be positive".into()));
    }
    check_cap(n, cap)?;
    Ok(product_polynomial_raw(n))
}

/// Uncapped; `n = 0` gives 1.
pub(crate) fn product_polynomial_raw(n: usize) -> LambdaPolynomial {
    memoized(product_cache(), n, || {
        // e_n on the product alphabet is Σ_π s_π(X) s_π′(Y)
        let mut poly = MPoly::zero();
        for pi in partitions_of(n) {
            let sx = LambdaPolynomial::from_e_polynomial(&schur_in_e(&pi), LambdaSymbol::X);
            let sy = LambdaPolynomial::from_e_polynomial(&schur_in_e(&pi.conjugate()), LambdaSymbol::Y);
            poly = &poly + &(&sx.poly * &sy.poly);
        }
        LambdaPolynomial { poly }
    })
}

/// `P_{m,n}` with `λ^m(λⁿx) = P_{m,n}(λ¹x..λ^{mn}x)`, default degree cap.
pub fn composition_polynomial(m: usize, n: usize) -> Result<LambdaPolynomial> {
    composition_polynomial_capped(m, n, DEFAULT_MAX_DEGREE)
}

pub fn composition_polynomial_capped(m: usize, n: usize, cap: usize) -> Result<LambdaPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("composition indices must be positive".into()));
    }
    check_cap(m * n, cap)?;
    Ok(composition_polynomial_raw(m, n))
}

/// Uncapped; `m = 0` gives 1.
pub(crate) fn composition_polynomial_raw(m: usize, n: usize) -> LambdaPolynomial {
    memoized(composition_cache(), (m, n), || {
        let p = plethysm_e_e(m, n);
        let out = LambdaPolynomial::from_e_polynomial(&p, LambdaSymbol::X);
        debug_assert!(
            m == 0 || out.max_index_per_term(LambdaSymbol::X).iter().all(|i| i.is_some_and(|i| i >= n)),
            "every monomial of P_{{m,n}} has a factor λⁱx with i ≥ n"
        );
        out
    })
}

/// `ε_ρ / z_ρ`, the coefficient of `p_ρ` in `e_{|ρ|}`.
fn e_coefficient_in_p(rho: &Partition) -> BigRational {
    let mut z = BigInt::one();
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in rho.parts() {
        *mult.entry(r).or_insert(0) += 1;
    }
    for (&r, &k) in &mult {
        for j in 1..=k {
            z *= BigInt::from(r) * BigInt::from(j);
        }
    }
    let sign = if (rho.weight() - rho.len()).is_multiple_of(2) { 1 } else { -1 };
    BigRational::new(BigInt::from(sign), z)
}

/// `p_1..p_N` as polynomials in the `e_k` (Newton's identities).
fn power_sums_in_e(max: usize) -> Vec<MPoly<BigRational>> {
    let mut p: Vec<MPoly<BigRational>> = vec![MPoly::zero()];
    for k in 1..=max {
        let sign = |i: usize| if i.is_multiple_of(2) { -BigRational::one() } else { BigRational::one() };
        let mut pk = MPoly::var(k as u32).scale(&(sign(k) * BigRational::from_integer(BigInt::from(k))));
        for i in 1..k {
            let t = MPoly::var(i as u32).scale(&sign(i));
            pk = &pk + &(&t * &p[k - i]);
        }
        p.push(pk);
    }
    p
}

/// The plethysm `e_m[e_n]` as an integer polynomial in the `e_k`.
///
/// Computed in the power-sum basis over Q, where `p_k[e_n]` is `e_n` with
/// every `p_j` replaced by `p_{kj}`, then rewritten through Newton's
/// identities.
fn plethysm_e_e(m: usize, n: usize) -> MPoly<BigInt> {
    if m == 0 {
        return MPoly::one();
    }
    if m == 1 {
        return MPoly::var(n as u32);
    }
    if n == 1 {
        return MPoly::var(m as u32);
    }
    // e_n in power sums, variable j = p_j
    let en: Vec<(BigRational, Vec<usize>)> = partitions_of(n)
        .into_iter()
        .map(|rho| (e_coefficient_in_p(&rho), rho.parts().to_vec()))
        .collect();
    let p_k_of_en = |k: usize| -> MPoly<BigRational> {
        let mut out = MPoly::zero();
        for (c, rho) in &en {
            let mono = Monomial::from_pairs(rho.iter().map(|&j| ((k * j) as u32, 1)));
            out.add_term(mono, c.clone());
        }
        out
    };
    let plethysm_factors: Vec<MPoly<BigRational>> = (0..=m).map(p_k_of_en).collect();
    let mut in_p = MPoly::<BigRational>::zero();
    for rho in partitions_of(m) {
        let mut term = MPoly::constant(e_coefficient_in_p(&rho));
        for &k in rho.parts() {
            term = &term * &plethysm_factors[k];
        }
        in_p = &in_p + &term;
    }
    let p_in_e = power_sums_in_e(m * n);
    let in_e = in_p.substitute(|j| p_in_e[j as usize].clone());
    in_e.map_coeffs(|c| {
        assert!(c.is_integer(), "plethysm coefficient {} is not integral", c);
        c.to_integer()
    })
}

/// A truncated series `c_0 + c_1 t + … + c_N t^N` with `c_0 = 1`, stored
/// to its full precision `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> LambdaSeries<E> {
    /// Coefficients `c_0..c_N`.
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    /// The truncation degree `N`.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        LambdaSeries {
            coeffs: self.coeffs[..=precision.min(self.precision())].to_vec(),
        }
    }
}

/// Builds a series from `[1, c_1, c_2, …]`, zero-padded to `precision`.
pub fn series_from_lambdas<R: Ring>(ring: &R, values: Vec<R::Elem>, precision: usize) -> Result<LambdaSeries<R::Elem>> {
    match values.first() {
        Some(c0) if ring.is_one(c0) => {}
        _ => return Err(Error::NonUnit),
    }
    let mut coeffs = values;
    coeffs.truncate(precision + 1);
    coeffs.resize(precision + 1, ring.zero());
    Ok(LambdaSeries { coeffs })
}

/// Product, to the smaller of the two precisions.
pub fn series_multiply<R: Ring>(ring: &R, f: &LambdaSeries<R::Elem>, g: &LambdaSeries<R::Elem>) -> LambdaSeries<R::Elem> {
    let n = f.precision().min(g.precision());
    let coeffs = (0..=n)
        .map(|k| {
            let mut acc = ring.zero();
            for i in 0..=k {
                if ring.is_zero(&f.coeffs[i]) || ring.is_zero(&g.coeffs[k - i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&f.coeffs[i], &g.coeffs[k - i]));
            }
            acc
        })
        .collect();
    LambdaSeries { coeffs }
}

/// Multiplicative inverse to the same precision.
pub fn series_invert<R: Ring>(ring: &R, f: &LambdaSeries<R::Elem>) -> Result<LambdaSeries<R::Elem>> {
    if !ring.is_one(&f.coeffs[0]) {
        return Err(Error::NonUnit);
    }
    let mut g = vec![ring.one()];
    for k in 1..=f.precision() {
        let mut acc = ring.zero();
        for i in 1..=k {
            if ring.is_zero(&f.coeffs[i]) {
                continue;
            }
            acc = ring.add(&acc, &ring.mul(&f.coeffs[i], &g[k - i]));
        }
        g.push(ring.neg(&acc));
    }
    Ok(LambdaSeries { coeffs: g })
}

/// `f(−t)`.
pub fn series_negate_variable<R: Ring>(ring: &R, f: &LambdaSeries<R::Elem>) -> LambdaSeries<R::Elem> {
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { ring.neg(c) })
        .collect();
    LambdaSeries { coeffs }
}

/// `σ_t(x) = λ_{−t}(x)^{−1}` from `λ_t(x)`; the same map sends `σ_t` back
/// to `λ_t`.
pub fn sigma_from_lambda<R: Ring>(ring: &R, lambda: &LambdaSeries<R::Elem>) -> Result<LambdaSeries<R::Elem>> {
    series_invert(ring, &series_negate_variable(ring, lambda))
}

/// Evaluates a polynomial in the `e_k` at `e_k ↦ lambdas[k]`.
pub fn evaluate_e_polynomial<R: Ring>(ring: &R, p: &MPoly<BigInt>, lambdas: &[R::Elem]) -> Result<R::Elem> {
    let needed = p
        .terms()
        .flat_map(|(m, _)| m.pairs().iter().map(|&(v, _)| v as usize))
        .max()
        .unwrap_or(0);
    if needed >= lambdas.len() {
        return Err(Error::InsufficientValues { needed, given: lambdas.len().saturating_sub(1) });
    }
    Ok(p.eval_in(ring, |v| lambdas[v as usize].clone(), |c| ring.from_int(c)))
}

/// `s_π(x)` from `lambdas[k] = λᵏ(x)` by the dual Jacobi-Trudi identity.
pub fn schur_from_lambdas<R: Ring>(ring: &R, pi: &Partition, lambdas: &[R::Elem]) -> Result<R::Elem> {
    evaluate_e_polynomial(ring, &schur_in_e(pi), lambdas)
}

/// `φ(x+y) = Σ φ′_i(x) φ″_i(y)` over the coproduct of `φ`, given
/// `xs[k] = λᵏ(x)` and `ys[k] = λᵏ(y)` for `k = 0..=deg φ`.
pub fn apply_to_sum<R: Ring>(ring: &R, phi: &SymFuncOver<BigInt>, xs: &[R::Elem], ys: &[R::Elem]) -> Result<R::Elem> {
    let deg = phi.degree().unwrap_or(0);
    for vals in [xs, ys] {
        if vals.len() <= deg {
            return Err(Error::InsufficientValues { needed: deg, given: vals.len().saturating_sub(1) });
        }
    }
    let mut left: HashMap<Partition, R::Elem> = HashMap::new();
    let mut right: HashMap<Partition, R::Elem> = HashMap::new();
    let mut acc = ring.zero();
    for ((mu, nu), c) in coproduct(phi).terms() {
        if !left.contains_key(mu) {
            left.insert(mu.clone(), schur_from_lambdas(ring, mu, xs)?);
        }
        if !right.contains_key(nu) {
            right.insert(nu.clone(), schur_from_lambdas(ring, nu, ys)?);
        }
        let t = ring.mul(&left[mu], &right[nu]);
        acc = ring.add(&acc, &ring.scale(&t, c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Native;
    use LambdaSymbol::{X, Y};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn product_low_degrees() {
        let p1 = product_polynomial(1).unwrap();
        assert_eq!(p1, LambdaPolynomial::from_terms([(big(1), vec![(X, 1, 1), (Y, 1, 1)])]));
        let p2 = product_polynomial(2).unwrap();
        let expect = LambdaPolynomial::from_terms([
            (big(1), vec![(X, 1, 2), (Y, 2, 1)]),
            (big(1), vec![(X, 2, 1), (Y, 1, 2)]),
            (big(-2), vec![(X, 2, 1), (Y, 2, 1)]),
        ]);
        assert_eq!(p2, expect);
        assert!(matches!(product_polynomial(13), Err(Error::DegreeCap { .. })));
        assert!(product_polynomial(0).is_err());
    }

    #[test]
    fn composition_two_three() {
        let p = composition_polynomial(2, 3).unwrap();
        let expect = LambdaPolynomial::from_terms([
            (big(1), vec![(X, 6, 1)]),
            (big(-1), vec![(X, 1, 1), (X, 5, 1)]),
            (big(1), vec![(X, 2, 1), (X, 4, 1)]),
        ]);
        assert_eq!(p, expect);
        assert_eq!(composition_polynomial(1, 4).unwrap(), LambdaPolynomial::symbol(X, 4));
    }

    #[test]
    fn series_basics() {
        let z = Native::<BigInt>::new();
        let f = series_from_lambdas(&z, vec![big(1), big(3)], 4).unwrap();
        let inv = series_invert(&z, &f).unwrap();
        assert_eq!(inv.coeffs(), &[big(1), big(-3), big(9), big(-27), big(81)]);
        assert_eq!(series_invert(&z, &inv).unwrap(), f);
        let g = series_from_lambdas(&z, vec![big(1), big(5)], 4).unwrap();
        assert_eq!(series_multiply(&z, &f, &g).coeffs()[..3], [big(1), big(8), big(15)]);
        assert!(series_from_lambdas(&z, vec![big(2)], 3).is_err());
    }

    #[test]
    fn sum_rule_counit() {
        let z = Native::<BigInt>::new();
        let xs = vec![big(1), big(4), big(6)];
        let ys = vec![big(1), big(0), big(0)];
        assert_eq!(apply_to_sum(&z, &SymFuncOver::one(), &xs, &ys).unwrap(), big(1));
        // binomial λ-values of 4 and 3: λ²(7) = 21
        let ys = vec![big(1), big(3), big(3)];
        assert_eq!(apply_to_sum(&z, &SymFuncOver::e(2), &xs, &ys).unwrap(), big(21));
        assert!(apply_to_sum(&z, &SymFuncOver::e(3), &xs, &ys).is_err());
    }

    #[test]
    fn display_and_json() {
        let p2 = product_polynomial(2).unwrap();
        assert_eq!(p2.to_string(), "x1^2*y2 + x2*y1^2 - 2*x2*y2");
        let json = serde_json::to_string(&p2).unwrap();
        let back: LambdaPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p2);
    }
}
