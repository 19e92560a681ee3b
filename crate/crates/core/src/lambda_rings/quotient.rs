//! `Λ` and its quotients `Λ_λ = Λ/I_λ`, with symmetric functions in the
//! Schur basis as normal forms.

use num_bigint::BigInt;

use crate::error::Result;
use crate::partitions::Partition;
use crate::scalar::Ring;
use crate::schur::{e_polynomial_to_schur, schur_to_e_polynomial, SymFuncOver};
use crate::SymFunc;

use super::{LambdaRing, PolyLambdaRing};

/// `Λ_λ`, or `Λ` itself when no bound is given. The generator is `s_(1)`.
#[derive(Debug, Clone)]
pub struct SchurQuotient {
    bound: Option<Partition>,
    free: PolyLambdaRing,
}

impl SchurQuotient {
    pub fn new(bound: Partition, cap: usize) -> Self {
        SchurQuotient {
            bound: Some(bound),
            free: PolyLambdaRing::free(cap),
        }
    }

    /// The free λ-ring Λ on one generator.
    pub fn free(cap: usize) -> Self {
        SchurQuotient {
            bound: None,
            free: PolyLambdaRing::free(cap),
        }
    }

    pub fn bound(&self) -> Option<&Partition> {
        self.bound.as_ref()
    }

    pub fn generator(&self) -> SymFunc {
        self.reduce(&SymFunc::e(1))
    }

    /// Normal form: drops every `s_π` with `π ⊇ λ`.
    pub fn reduce(&self, f: &SymFunc) -> SymFunc {
        match &self.bound {
            Some(b) => f.reduce_mod_ideal(b),
            None => f.clone(),
        }
    }

    /// Basis `s_π`, `π ⊉ λ`, `|π| = d`.
    pub fn basis(&self, d: usize) -> Vec<Partition> {
        crate::partitions::partitions_of(d)
            .into_iter()
            .filter(|p| self.bound.as_ref().is_none_or(|b| !p.contains(b)))
            .collect()
    }
}

impl Ring for SchurQuotient {
    type Elem = SymFunc;

    fn zero(&self) -> SymFunc {
        SymFunc::zero()
    }
    fn one(&self) -> SymFunc {
        self.reduce(&SymFunc::one())
    }
    fn from_int(&self, n: &BigInt) -> SymFunc {
        self.reduce(&SymFunc::term(Partition::empty(), n.clone()))
    }
    fn add(&self, a: &SymFunc, b: &SymFunc) -> SymFunc {
        a + b
    }
    fn neg(&self, a: &SymFunc) -> SymFunc {
        -a.clone()
    }
    fn mul(&self, a: &SymFunc, b: &SymFunc) -> SymFunc {
        if a.is_zero() || b.is_zero() {
            return SymFunc::zero();
        }
        self.reduce(&a.multiply(b))
    }
    fn sub(&self, a: &SymFunc, b: &SymFunc) -> SymFunc {
        a - b
    }
    fn is_zero(&self, a: &SymFunc) -> bool {
        a.is_zero()
    }
}

impl LambdaRing for SchurQuotient {
    fn degree_cap(&self) -> usize {
        self.free.cap()
    }

    fn lambda_values(&self, x: &SymFunc, n: usize) -> Result<Vec<SymFunc>> {
        if *x == SymFunc::e(1) {
            return Ok((0..=n).map(|k| self.reduce(&SymFunc::e(k))).collect());
        }
        // I_λ is a λ-ideal, so λ-operations on representatives reduce correctly
        let e_poly = schur_to_e_polynomial(x);
        let values = self.free.lambda_values(&e_poly, n)?;
        Ok(values
            .iter()
            .map(|p| self.reduce(&e_polynomial_to_schur::<BigInt>(p)))
            .collect())
    }

    fn render(&self, x: &SymFuncOver<BigInt>) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::{apply_symfunc, lambda_op, schur_value, schur_value_dual, sigma_op};
    use crate::partitions::{part, partitions_up_to};

    fn s(p: &[usize]) -> SymFunc {
        SymFunc::schur(part(p))
    }

    #[test]
    fn lambda21_relations() {
        let r = SchurQuotient::new(part(&[2, 1]), 12);
        let x = r.generator();
        assert_eq!(lambda_op(&r, &x, 2).unwrap(), s(&[1, 1]));
        let y = s(&[1, 1]);
        assert_eq!(lambda_op(&r, &x, 3).unwrap(), r.mul(&x, &y));
        assert_eq!(lambda_op(&r, &x, 4).unwrap(), r.mul(&y, &y));
        assert_eq!(r.mul(&y, &y), s(&[1, 1, 1, 1]));
    }

    #[test]
    fn free_ring_is_plethysm() {
        let r = SchurQuotient::free(12);
        // λ²(e_2) = s_(2,1,1) and σ²(s_1) = h_2
        assert_eq!(lambda_op(&r, &SymFunc::e(2), 2).unwrap(), s(&[2, 1, 1]));
        assert_eq!(sigma_op(&r, &r.generator(), 2).unwrap(), s(&[2]));
        // λ²(h_2) = s_(3,1)
        assert_eq!(lambda_op(&r, &SymFunc::h(2), 2).unwrap(), s(&[3, 1]));
    }

    #[test]
    fn universal_element_and_routes_agree() {
        let r = SchurQuotient::free(12);
        let x = r.generator();
        for pi in partitions_up_to(5) {
            let v = schur_value(&r, &pi, &x).unwrap();
            assert_eq!(v, SymFunc::schur(pi.clone()));
            assert_eq!(schur_value_dual(&r, &pi, &x).unwrap(), v);
            assert_eq!(apply_symfunc(&r, &SymFunc::schur(pi.clone()), &x).unwrap(), v);
        }
    }
}
