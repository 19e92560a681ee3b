//! Splitting `p/q` over Q into line factors `(1 − αt)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

use super::RationalPair;

/// `p/q = ∏(1 − αᵢt) / ∏(1 − βⱼt)`; the element is `Σ ℓ_{αᵢ} − Σ ℓ_{βⱼ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineFactorization {
    #[serde(serialize_with = "ser_rationals")]
    pub lines_plus: Vec<BigRational>,
    #[serde(serialize_with = "ser_rationals")]
    pub lines_minus: Vec<BigRational>,
    /// After cancelling common roots.
    #[serde(serialize_with = "ser_rationals")]
    pub net_plus: Vec<BigRational>,
    #[serde(serialize_with = "ser_rationals")]
    pub net_minus: Vec<BigRational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl LineFactorization {
    /// `∏(1 − αt)` over a list of roots, as coefficients.
    pub fn expand(roots: &[BigRational]) -> Vec<BigRational> {
        let mut acc = vec![BigRational::one()];
        for a in roots {
            let mut next = acc.clone();
            next.push(BigRational::zero());
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] -= a * c;
            }
            acc = next;
        }
        acc
    }
}

/// Factors `p` and `q` into line factors with rational roots.
///
/// Fails with [`Error::Unsupported`] when a factor has no rational root.
pub fn factor_into_lines(pair: &RationalPair<BigRational>) -> Result<LineFactorization> {
    let lines_plus = roots_of(&normalized(&pair.p)?)?;
    let lines_minus = roots_of(&normalized(&pair.q)?)?;
    let mut net_plus = Vec::new();
    let mut net_minus = lines_minus.clone();
    for a in &lines_plus {
        match net_minus.iter().position(|b| b == a) {
            Some(i) => {
                net_minus.remove(i);
            }
            None => net_plus.push(a.clone()),
        }
    }
    Ok(LineFactorization {
        lines_plus,
        lines_minus,
        net_plus,
        net_minus,
    })
}

/// Divides by the constant term and trims.
fn normalized(p: &[BigRational]) -> Result<Vec<BigRational>> {
    let c0 = p.first().filter(|c| !c.is_zero()).ok_or(Error::NonUnit)?;
    let mut v: Vec<BigRational> = p.iter().map(|c| c / c0).collect();
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    Ok(v)
}

/// Roots `α` with `(1 − αt) | p`, with multiplicity, sorted; `p(0) = 1`.
fn roots_of(p: &[BigRational]) -> Result<Vec<BigRational>> {
    // α is a root of u^d p(1/u), whose coefficients listed from the top are those of p
    let mut rev: Vec<BigRational> = p.to_vec();
    let mut roots = Vec::new();
    while rev.len() > 1 {
        let ints = clear_denominators(&rev);
        let lead = ints.first().expect("nonempty").abs();
        let constant = ints.last().expect("nonempty").abs();
        let root = candidates(&constant, &lead)?
            .into_iter()
            .find(|r| eval(&rev, r).is_zero());
        match root {
            Some(r) => {
                rev = deflate(&rev, &r);
                roots.push(r);
            }
            None => {
                return Err(Error::Unsupported(format!(
                    "factor of degree {} has no rational root; algebraic roots are not supported",
                    rev.len() - 1
                )))
            }
        }
    }
    roots.sort();
    debug_assert_eq!(LineFactorization::expand(&roots), p);
    Ok(roots)
}

/// Integer multiple of `v`, highest degree first.
fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    v.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// `±a/b` with `a | constant`, `b | lead`.
fn candidates(constant: &BigInt, lead: &BigInt) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    for a in divisors(constant)? {
        for b in divisors(lead)? {
            let r = BigRational::new(a.clone(), b);
            out.push(-r.clone());
            out.push(r);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n
        .to_u64()
        .filter(|&n| n < 1 << 48)
        .ok_or_else(|| Error::Unsupported(format!("coefficient {} is too large for rational root search", n)))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Horner evaluation, highest degree first.
fn eval(v: &[BigRational], x: &BigRational) -> BigRational {
    v.iter().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Quotient by `(u − r)`, highest degree first.
fn deflate(v: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(v.len() - 1);
    let mut acc = BigRational::zero();
    for c in &v[..v.len() - 1] {
        acc = acc * r + c;
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    fn pair(p: &[i64], qq: &[i64]) -> RationalPair<BigRational> {
        RationalPair {
            p: q(p),
            q: q(qq),
            denominator: BigRational::one(),
            verified_to: 0,
        }
    }

    #[test]
    fn single_line() {
        let f = factor_into_lines(&pair(&[1, -2], &[1])).unwrap();
        assert_eq!(f.lines_plus, q(&[2]));
        assert!(f.lines_minus.is_empty());
    }

    #[test]
    fn cancellation() {
        let f = factor_into_lines(&pair(&[1, -3, 2], &[1, -1])).unwrap();
        assert_eq!(f.lines_plus, q(&[1, 2]));
        assert_eq!(f.lines_minus, q(&[1]));
        assert_eq!(f.net_plus, q(&[2]));
        assert!(f.net_minus.is_empty());
    }

    #[test]
    fn fractional_and_repeated_roots() {
        // (1 − t/2)²(1 + 3t)
        let p = LineFactorization::expand(&[
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer((-3).into()),
        ]);
        let f = factor_into_lines(&RationalPair {
            p: p.clone(),
            q: q(&[1]),
            denominator: BigRational::one(),
            verified_to: 0,
        })
        .unwrap();
        assert_eq!(LineFactorization::expand(&f.lines_plus), p);
    }

    #[test]
    fn irrational_roots_fail() {
        assert!(matches!(factor_into_lines(&pair(&[1, 1, 1], &[1])), Err(Error::Unsupported(_))));
    }
}
