//! Two small λ-rings given by explicit normal forms.
//!
//! * `Lambda23`: the quotient of `Λ_(2,2) = Z + x·Z[x, b]` by the ideal
//!   generated by the `λ^{2i}(x)`. Its basis is `1, xⁿ, x·b^{2n}` (`n ≥ 1`):
//!   a monomial `x^i b^j` is zero when `i ≥ 2, j ≥ 1` or when `i = 1` and `j`
//!   is odd. λ-operations are computed in `Z[a, b]`, `a` a line and `b` odd
//!   of degree one, through `x = a + b`, and then reduced.
//! * `Nil`: `Λ/(I_(2) + I_(1,1)) = Z[ε]/(ε²)` with `ε = s_(1)`, computed in
//!   `Z[ℓ]` with `ε = ℓ` a line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial};
use crate::scalar::Ring;

use super::{LambdaRing, PolyLambdaRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TablePreset {
    Lambda23,
    Nil,
}

impl fmt::Display for TablePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TablePreset::Lambda23 => "lambda2-3",
            TablePreset::Nil => "nil",
        })
    }
}

impl FromStr for TablePreset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lambda2-3" => Ok(TablePreset::Lambda23),
            "nil" => Ok(TablePreset::Nil),
            _ => Err(Error::Parse(format!("unknown table ring {:?}", s))),
        }
    }
}

const X: u32 = 0;
const B: u32 = 1;

#[derive(Debug, Clone)]
pub struct TableRing {
    preset: TablePreset,
    lift: PolyLambdaRing,
}

impl TableRing {
    pub fn new(preset: TablePreset, cap: usize) -> Self {
        let mut lift = PolyLambdaRing::new(cap);
        match preset {
            TablePreset::Lambda23 => {
                lift.add_line("a");
                lift.add_neg_line("b");
            }
            TablePreset::Nil => {
                lift.add_line("l");
            }
        }
        TableRing { preset, lift }
    }

    pub fn preset(&self) -> TablePreset {
        self.preset
    }

    /// The distinguished element: `x` or `ε`.
    pub fn x(&self) -> MPoly<BigInt> {
        MPoly::var(X)
    }

    /// `x·b^{2n}` in `Lambda23`.
    pub fn x_b_even(&self, n: u32) -> Result<MPoly<BigInt>> {
        match self.preset {
            TablePreset::Lambda23 => Ok(MPoly::term(
                Monomial::from_pairs([(X, 1), (B, 2 * n)]),
                BigInt::one(),
            )),
            TablePreset::Nil => Err(Error::Unsupported("the nil ring has no b".into())),
        }
    }

    fn keep(&self, m: &Monomial) -> bool {
        match self.preset {
            TablePreset::Lambda23 => {
                let (i, j) = (m.exponent(X), m.exponent(B));
                debug_assert!(i > 0 || j == 0, "x^0 b^j with j > 0 is outside the ring");
                j == 0 || (i == 1 && j % 2 == 0)
            }
            TablePreset::Nil => m.exponent(X) <= 1,
        }
    }

    /// Normal form.
    pub fn reduce(&self, p: &MPoly<BigInt>) -> MPoly<BigInt> {
        p.filter_terms(|m| self.keep(m))
    }

    /// Checks that `p` lies in the ring and returns its normal form.
    pub fn element(&self, p: &MPoly<BigInt>) -> Result<MPoly<BigInt>> {
        if let TablePreset::Lambda23 = self.preset {
            if p.terms().any(|(m, _)| m.exponent(X) == 0 && m.exponent(B) > 0) {
                return Err(Error::Precondition("element lies outside Z + x·Z[x, b]".into()));
            }
        }
        Ok(self.reduce(p))
    }

    fn to_lift(&self, p: &MPoly<BigInt>) -> MPoly<BigInt> {
        match self.preset {
            // x = a + b; the lift ring numbers a as 0 and b as 1
            TablePreset::Lambda23 => p.substitute(|v| if v == X { &MPoly::var(0) + &MPoly::var(1) } else { MPoly::var(1) }),
            TablePreset::Nil => p.clone(),
        }
    }

    fn from_lift(&self, p: &MPoly<BigInt>) -> MPoly<BigInt> {
        match self.preset {
            TablePreset::Lambda23 => p.substitute(|v| if v == 0 { &MPoly::var(X) - &MPoly::var(B) } else { MPoly::var(B) }),
            TablePreset::Nil => p.clone(),
        }
    }
}

impl Ring for TableRing {
    type Elem = MPoly<BigInt>;

    fn zero(&self) -> MPoly<BigInt> {
        MPoly::zero()
    }
    fn one(&self) -> MPoly<BigInt> {
        MPoly::one()
    }
    fn from_int(&self, n: &BigInt) -> MPoly<BigInt> {
        MPoly::constant(n.clone())
    }
    fn add(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a + b
    }
    fn neg(&self, a: &MPoly<BigInt>) -> MPoly<BigInt> {
        -a.clone()
    }
    fn mul(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        self.reduce(&(a * b))
    }
    fn is_zero(&self, a: &MPoly<BigInt>) -> bool {
        a.is_zero()
    }
}

impl LambdaRing for TableRing {
    fn degree_cap(&self) -> usize {
        self.lift.cap()
    }

    fn lambda_values(&self, x: &MPoly<BigInt>, n: usize) -> Result<Vec<MPoly<BigInt>>> {
        let values = self.lift.lambda_values(&self.to_lift(x), n)?;
        Ok(values.iter().map(|v| self.reduce(&self.from_lift(v))).collect())
    }

    fn render(&self, p: &MPoly<BigInt>) -> String {
        p.display_with(|v| match (self.preset, v) {
            (TablePreset::Nil, _) => "s1".to_string(),
            (_, X) => "x".to_string(),
            _ => "b".to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::lambda_op;

    #[test]
    fn lambda23_values() {
        let r = TableRing::new(TablePreset::Lambda23, 12);
        let x = r.x();
        for i in 1..=3u32 {
            assert!(lambda_op(&r, &x, 2 * i as usize).unwrap().is_zero());
            assert_eq!(lambda_op(&r, &x, 2 * i as usize + 1).unwrap(), r.x_b_even(i).unwrap());
        }
        assert_eq!(r.pow(&x, 6), MPoly::var(X).pow(6));
    }

    #[test]
    fn nil_square() {
        let r = TableRing::new(TablePreset::Nil, 8);
        let e = r.x();
        assert!(r.mul(&e, &e).is_zero());
        assert!(lambda_op(&r, &e, 2).unwrap().is_zero());
        assert!(crate::lambda_rings::sigma_op(&r, &e, 2).unwrap().is_zero());
    }
}
