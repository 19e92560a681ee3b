//! The graded ring of symmetric functions with the Schur basis as its
//! native representation.

mod hopf;
mod jacobi_trudi;
mod lr;
mod oracle;
mod pieri;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_cap, Result};
use crate::partitions::Partition;
use crate::poly::format_signed_sum;
use crate::scalar::{FromInteger, Scalar};

pub use hopf::{antipode, coproduct, counit, omega, TensorSymFuncOver};
pub use jacobi_trudi::{
    e_polynomial_to_schur, jacobi_trudi, schur_to_e_polynomial, GenBasis, GenMonomial, SignedExpansion,
};
pub(crate) use jacobi_trudi::schur_in_e;
pub use lr::{lr_coefficient, lr_product};
pub use oracle::{monomial_expansion_oracle, schur_polynomial};
pub use pieri::{from_generator_monomial, pieri_e, pieri_h};

/// An element of Λ as a sparse vector over the Schur basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFuncOver<C> {
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Scalar> SymFuncOver<C> {
    pub fn zero() -> Self {
        SymFuncOver { coeffs: BTreeMap::new() }
    }

    /// The unit `s_()`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// The basis element `s_π`.
    pub fn schur(pi: Partition) -> Self {
        Self::term(pi, C::one())
    }

    pub fn term(pi: Partition, c: C) -> Self {
        let mut f = Self::zero();
        f.add_term(pi, c);
        f
    }

    /// `e_n = s_(1^n)`.
    pub fn e(n: usize) -> Self {
        Self::schur(Partition::column(n))
    }

    /// `h_n = s_(n)`.
    pub fn h(n: usize) -> Self {
        Self::schur(Partition::row(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, pi: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(pi) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, pi: &Partition) -> C {
        self.coeffs.get(pi).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest weight in the support, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::weight).max()
    }

    /// The degree-`n` homogeneous component.
    pub fn component(&self, n: usize) -> Self {
        self.filter(|p| p.weight() == n)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut w = self.coeffs.keys().map(Partition::weight);
        match w.next() {
            None => true,
            Some(first) => w.all(|x| x == first),
        }
    }

    pub fn filter(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        SymFuncOver {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(p, k)| (p.clone(), k.clone() * c.clone())))
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SymFuncOver<D> {
        SymFuncOver::from_terms(self.coeffs.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Product via Littlewood-Richardson coefficients.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.coeffs {
            for (q, b) in &other.coeffs {
                let ab = a.clone() * b.clone();
                for (pi, c) in lr_product(p, q).iter() {
                    out.add_term(pi.clone(), ab.clone() * C::from_integer(&BigInt::from(*c)));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// Normal form in `Λ/I_λ`: drops every term whose partition contains `λ`.
    pub fn reduce_mod_ideal(&self, lambda: &Partition) -> Self {
        self.filter(|p| !p.contains(lambda))
    }

    /// Errors if any term has weight above `cap`.
    pub fn check_degree(&self, cap: usize) -> Result<()> {
        check_cap(self.degree().unwrap_or(0), cap)
    }
}

impl<C: Scalar> Default for SymFuncOver<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// `s_μ s_ν` in the Schur basis.
pub fn schur_product<C: Scalar>(mu: &Partition, nu: &Partition) -> SymFuncOver<C> {
    SymFuncOver::schur(mu.clone()).multiply(&SymFuncOver::schur(nu.clone()))
}

/// Bilinear product of two symmetric functions.
pub fn multiply<C: Scalar>(f: &SymFuncOver<C>, g: &SymFuncOver<C>) -> SymFuncOver<C> {
    f.multiply(g)
}

/// See [`SymFuncOver::reduce_mod_ideal`].
pub fn reduce_mod_ideal<C: Scalar>(f: &SymFuncOver<C>, lambda: &Partition) -> SymFuncOver<C> {
    f.reduce_mod_ideal(lambda)
}

impl<C: Scalar + fmt::Display> fmt::Display for SymFuncOver<C> {
    /// `s[3,1] + 2*s[2,1,1] - s[]`, terms in canonical partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .map(|(p, c)| (format!("s{}", p), c.to_string()))
            .collect();
        write!(f, "{}", format_signed_sum(terms))
    }
}

impl<C: Scalar> fmt::Debug for SymFuncOver<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

impl<C: Scalar> Add for SymFuncOver<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.coeffs {
            self.add_term(p, c);
        }
        self
    }
}

impl<C: Scalar> Sub for SymFuncOver<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Neg for SymFuncOver<C> {
    type Output = Self;
    fn neg(self) -> Self {
        SymFuncOver {
            coeffs: self.coeffs.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl<C: Scalar> Mul for SymFuncOver<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl<'a, C: Scalar> Add<&'a SymFuncOver<C>> for &'a SymFuncOver<C> {
    type Output = SymFuncOver<C>;
    fn add(self, rhs: &'a SymFuncOver<C>) -> SymFuncOver<C> {
        self.clone() + rhs.clone()
    }
}

impl<'a, C: Scalar> Sub<&'a SymFuncOver<C>> for &'a SymFuncOver<C> {
    type Output = SymFuncOver<C>;
    fn sub(self, rhs: &'a SymFuncOver<C>) -> SymFuncOver<C> {
        self.clone() - rhs.clone()
    }
}

impl<'a, C: Scalar> Mul<&'a SymFuncOver<C>> for &'a SymFuncOver<C> {
    type Output = SymFuncOver<C>;
    fn mul(self, rhs: &'a SymFuncOver<C>) -> SymFuncOver<C> {
        self.multiply(rhs)
    }
}

impl<C: Scalar> Zero for SymFuncOver<C> {
    fn zero() -> Self {
        SymFuncOver::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Scalar> One for SymFuncOver<C> {
    fn one() -> Self {
        SymFuncOver::one()
    }
}

impl<C: Scalar> FromInteger for SymFuncOver<C> {
    fn from_integer(n: &BigInt) -> Self {
        Self::term(Partition::empty(), C::from_integer(n))
    }
}

/// JSON form: partition strings mapped to coefficient strings,
/// `{"[2,1]": "3", "[]": "-1"}`.
impl<C: Scalar + fmt::Display> Serialize for SymFuncOver<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.coeffs.iter().map(|(p, c)| (p.to_string(), c.to_string())))
    }
}

impl<'de, C> Deserialize<'de> for SymFuncOver<C>
where
    C: Scalar + FromStr,
    C::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut out = SymFuncOver::zero();
        for (p, c) in raw {
            let p: Partition = p.parse().map_err(serde::de::Error::custom)?;
            let c: C = c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(p, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;
    use crate::SymFunc;

    fn s(p: &[usize]) -> SymFunc {
        SymFunc::schur(part(p))
    }

    #[test]
    fn json_round_trip() {
        let f = s(&[2, 1]).scale(&BigInt::from(3)) - SymFunc::one();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"[]":"-1","[2,1]":"3"}"#);
        assert_eq!(serde_json::from_str::<SymFunc>(&j).unwrap(), f);
    }

    #[test]
    fn schur_product_examples() {
        assert_eq!(schur_product::<BigInt>(&part(&[1]), &part(&[1])), s(&[2]) + s(&[1, 1]));
        assert_eq!(schur_product::<BigInt>(&part(&[2]), &part(&[1, 1])), s(&[3, 1]) + s(&[2, 1, 1]));
    }

    #[test]
    fn multiply_unit_and_zero() {
        let f = s(&[2, 1]) + s(&[3]).scale(&BigInt::from(-2));
        assert_eq!(f.multiply(&SymFunc::one()), f);
        assert!(SymFunc::zero().multiply(&f).is_zero());
        assert_eq!(SymFunc::e(1).pow(2), s(&[2]) + s(&[1, 1]));
    }

    #[test]
    fn reduce_examples() {
        let lam = part(&[2, 1]);
        assert_eq!((s(&[2, 2]) + s(&[1, 1])).reduce_mod_ideal(&lam), s(&[1, 1]));
        assert_eq!(s(&[1]).multiply(&s(&[1, 1])).reduce_mod_ideal(&lam), s(&[1, 1, 1]));
        let f = s(&[]).scale(&BigInt::from(5)) + s(&[3]) + s(&[1, 1]);
        assert_eq!(f.reduce_mod_ideal(&part(&[1])), s(&[]).scale(&BigInt::from(5)));
    }

    #[test]
    fn display() {
        let f = s(&[3, 1]) + s(&[2, 1, 1]).scale(&BigInt::from(2)) - s(&[]);
        assert_eq!(f.to_string(), "-s[] + s[3,1] + 2*s[2,1,1]");
        assert_eq!(SymFunc::zero().to_string(), "0");
    }
}
