//! `R[a]` with `a` adjoined as a line element.

use crate::error::Result;
use crate::scalar::Ring;

use super::{multiply_values, LambdaRing};

/// Elements are coefficient lists `[r_0, r_1, …]` of `Σ r_i aⁱ`, without
/// trailing zeros.
#[derive(Debug, Clone)]
pub struct LinePoly<R> {
    base: R,
}

impl<R: LambdaRing> LinePoly<R> {
    pub fn new(base: R) -> Self {
        LinePoly { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// The line element `a`.
    pub fn line(&self) -> Vec<R::Elem> {
        vec![self.base.zero(), self.base.one()]
    }

    /// `r ∈ R` as a constant.
    pub fn constant(&self, r: &R::Elem) -> Vec<R::Elem> {
        self.trim(vec![r.clone()])
    }

    /// `r aⁱ`.
    pub fn monomial(&self, r: &R::Elem, i: usize) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); i + 1];
        v[i] = r.clone();
        self.trim(v)
    }

    fn trim(&self, mut v: Vec<R::Elem>) -> Vec<R::Elem> {
        while v.last().is_some_and(|c| self.base.is_zero(c)) {
            v.pop();
        }
        v
    }

    /// Coefficient of `aⁱ`.
    pub fn coeff(&self, p: &[R::Elem], i: usize) -> R::Elem {
        p.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }
}

impl<R: LambdaRing> Ring for LinePoly<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        self.constant(&self.base.one())
    }
    fn from_int(&self, n: &num_bigint::BigInt) -> Self::Elem {
        self.constant(&self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.base.add(&self.coeff(a, i), &self.coeff(b, i))).collect();
        self.trim(v)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.trim(v)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
}

impl<R: LambdaRing> LambdaRing for LinePoly<R> {
    fn degree_cap(&self) -> usize {
        self.base.degree_cap()
    }

    /// `λᵏ(r aⁱ) = λᵏ(r) a^{ik}`, multiplied over the terms.
    fn lambda_values(&self, x: &Self::Elem, n: usize) -> Result<Vec<Self::Elem>> {
        let mut acc: Vec<Self::Elem> = (0..=n).map(|k| if k == 0 { self.one() } else { self.zero() }).collect();
        for (i, r) in x.iter().enumerate() {
            if self.base.is_zero(r) {
                continue;
            }
            let lam = self.base.lambda_values(r, n)?;
            let term: Vec<Self::Elem> = lam.iter().enumerate().map(|(k, c)| self.monomial(c, i * k)).collect();
            acc = multiply_values(self, &acc, &term);
        }
        Ok(acc)
    }

    fn render(&self, x: &Self::Elem) -> String {
        if x.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| {
                let c = self.base.render(c);
                match i {
                    0 => c,
                    1 => format!("({})*a", c),
                    _ => format!("({})*a^{}", c, i),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::{lambda_op, Binomial};
    use num_bigint::BigInt;

    #[test]
    fn line_adjoined_to_integers() {
        let r = LinePoly::new(Binomial::new(1, 8));
        let a = r.line();
        let three = r.from_int(&BigInt::from(3));
        let x = r.add(&three, &a);
        // λ²(3 + a) = 3 + 3a
        let expect = r.add(&three, &r.mul(&three, &a));
        assert_eq!(lambda_op(&r, &x, 2).unwrap(), expect);
        assert!(lambda_op(&r, &a, 2).unwrap().is_empty());
        // λ²(2a²) = a⁴
        let y = r.monomial(&vec![BigInt::from(2)], 2);
        assert_eq!(lambda_op(&r, &y, 2).unwrap(), r.monomial(&vec![BigInt::from(1)], 4));
    }
}
