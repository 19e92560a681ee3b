//! Coefficient abstractions.
//!
//! Two layers: [`Scalar`] is a value type carrying its own arithmetic
//! through `num-traits` (integers, rationals, polynomials over those), and
//! [`Ring`] is a context object for rings whose elements need side
//! information to be multiplied or normalized (quotient rings, presented
//! lambda-rings). [`Native`] bridges the two.

use std::fmt::Debug;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Conversion from an arbitrary precision integer into a coefficient type.
pub trait FromInteger {
    fn from_integer(n: &BigInt) -> Self;
}

impl FromInteger for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
}

impl FromInteger for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl FromInteger for i64 {
    fn from_integer(n: &BigInt) -> Self {
        n.to_i64().expect("integer does not fit in i64")
    }
}

impl FromInteger for i128 {
    fn from_integer(n: &BigInt) -> Self {
        n.to_i128().expect("integer does not fit in i128")
    }
}

/// An exact commutative coefficient type.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + FromInteger
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + FromInteger
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Scalars supporting exact division when the quotient exists.
pub trait ExactDiv: Scalar {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl ExactDiv for i64 {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (*rhs != 0 && self % rhs == 0).then(|| self / rhs)
    }
}

/// A commutative ring given by a context object.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        self.mul(&self.from_int(n), a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// Rings that are integral domains with exact division.
pub trait Domain: Ring {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

/// The ring context of a [`Scalar`] value type.
#[derive(Debug)]
pub struct Native<T>(PhantomData<T>);

impl<T> Native<T> {
    pub const fn new() -> Self {
        Native(PhantomData)
    }
}

impl<T> Default for Native<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Native<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Native<T> {}

impl<T: Scalar> Ring for Native<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_int(&self, n: &BigInt) -> T {
        T::from_integer(n)
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn neg(&self, a: &T) -> T {
        -a.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
}

impl<T: ExactDiv> Domain for Native<T> {
    fn exact_div(&self, a: &T, b: &T) -> Option<T> {
        a.exact_div(b)
    }
}

/// `binomial(r, k)` for any integer `r`, via the falling factorial.
pub fn binomial(r: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= r - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
