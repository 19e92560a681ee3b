//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{ExactDiv, FromInteger, Ring, Scalar};

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// Dense exponent vector `[e_0, e_1, ...]`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v as u32, e))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree where variable `v` carries weight `weight(v)`.
    pub fn weighted_degree(&self, weight: impl Fn(u32) -> u32) -> u32 {
        self.0.iter().map(|&(v, e)| weight(v) * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|&(v, k)| (v, k * e)).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let d = if j < other.0.len() && other.0[j].0 == v {
                j += 1;
                other.0[j - 1].1
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                0
            };
            match e.cmp(&d) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((v, e - d)),
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// `a1^2*b1`; the empty monomial renders as the empty string.
    pub fn display_with(&self, name: impl Fn(u32) -> String) -> String {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{}", name(v), e) })
            .collect();
        parts.join("*")
    }

    /// Lexicographic monomial order with variable 0 the largest.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            if a.0 != b.0 {
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("x{}", v) } else { format!("x{}^{}", v, e) })
            .collect();
        write!(f, "{}", s.join("*"))
    }
}

/// Sparse polynomial over a [`Scalar`] coefficient type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> MPoly<C> {
    pub fn new() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: u32) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::new();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, k)| (n.mul(m), k.clone() * c.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `images(v)` for every variable `v`.
    pub fn substitute(&self, images: impl Fn(u32) -> MPoly<C>) -> MPoly<C> {
        self.eval_in(&crate::scalar::Native::<MPoly<C>>::new(), images, |c| MPoly::constant(c.clone()))
    }

    /// Evaluates in an arbitrary ring given images of variables and coefficients.
    pub fn eval_in<R: Ring>(
        &self,
        ring: &R,
        var: impl Fn(u32) -> R::Elem,
        coeff: impl Fn(&C) -> R::Elem,
    ) -> R::Elem {
        let mut cache: BTreeMap<u32, Vec<R::Elem>> = BTreeMap::new();
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for &(v, e) in m.pairs() {
                let powers = cache.entry(v).or_insert_with(|| vec![ring.one(), var(v)]);
                while powers.len() <= e as usize {
                    let next = ring.mul(powers.last().unwrap(), &powers[1]);
                    powers.push(next);
                }
                t = ring.mul(&t, &powers[e as usize]);
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Leading term in [`Monomial::lex_cmp`] order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| a.0.lex_cmp(b.0))
    }

    /// Maps coefficients into another scalar type.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Renders with custom variable names, e.g. `2*a1^2*b1 - 3`.
    pub fn display_with(&self, name: impl Fn(u32) -> String) -> String
    where
        C: fmt::Display,
    {
        let terms: Vec<(String, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.display_with(&name), c.to_string()))
            .collect();
        format_signed_sum(terms)
    }
}

/// Joins `(monomial, coefficient)` strings as `a + 2*b - c`.
pub fn format_signed_sum(terms: Vec<(String, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in terms.into_iter().enumerate() {
        let (neg, abs) = match coeff.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, coeff),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mono.is_empty(), abs.as_str()) {
            (true, _) => out.push_str(&abs),
            (false, "1") => out.push_str(&mono),
            (false, _) => {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

impl<C: ExactDiv> MPoly<C> {
    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly<C>) -> Option<MPoly<C>> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = c.exact_div(&lc)?;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl<C: Scalar> Default for MPoly<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Scalar> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{:?}*{:?}", c, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<'a, C: Scalar> Add<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Sub<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Mul<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: MPoly<C>) -> MPoly<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: MPoly<C>) -> MPoly<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: MPoly<C>) -> MPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Scalar> Zero for MPoly<C> {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for MPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Scalar> FromInteger for MPoly<C> {
    fn from_integer(n: &BigInt) -> Self {
        Self::constant(C::from_integer(n))
    }
}

impl<C: ExactDiv> ExactDiv for MPoly<C> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        MPoly::exact_div(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<BigInt>;

    fn x(v: u32) -> P {
        P::var(v)
    }

    #[test]
    fn arithmetic() {
        let p = &x(0) + &x(1);
        let sq = &p * &p;
        let expect = &(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) + &(&x(0) * &x(1)).scale(&BigInt::from(2));
        assert_eq!(sq, expect);
        assert!((&p - &p).is_zero());
        assert_eq!(p.pow(3).num_terms(), 4);
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::from_pairs([(0, 2), (3, 1)]);
        let b = Monomial::from_pairs([(0, 1)]);
        assert_eq!(a.div(&b), Some(Monomial::from_pairs([(0, 1), (3, 1)])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.div(&Monomial::var(2)), None);
    }

    #[test]
    fn exact_division() {
        let a = &x(0) + &x(1);
        let b = &(&x(0) * &x(2)) - &P::constant(BigInt::from(3));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!((&prod + &P::one()).exact_div(&a), None);
    }

    #[test]
    fn display() {
        let p = &(&x(0) * &x(0)).scale(&BigInt::from(2)) - &P::constant(BigInt::from(3));
        assert_eq!(p.display_with(|v| format!("a{}", v + 1)), "2*a1^2 - 3");
        assert_eq!(P::new().display_with(|v| v.to_string()), "0");
    }

    #[test]
    fn substitution() {
        // (x0 + 1)^2 with x0 -> x1 - 1 gives x1^2
        let p = (&x(0) + &P::one()).pow(2);
        let q = p.substitute(|_| &x(1) - &P::one());
        assert_eq!(q, &x(1) * &x(1));
    }
}
