//! Hopf structure: coproduct, counit, the involution ω and the antipode.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::partitions::{partitions_of, Partition};
use crate::poly::format_signed_sum;
use crate::scalar::Scalar;

use super::lr::lr_coefficient;
use super::SymFuncOver;

/// An element of Λ⊗Λ over the basis `s_μ ⊗ s_ν`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSymFuncOver<C> {
    coeffs: BTreeMap<(Partition, Partition), C>,
}

impl<C: Scalar> TensorSymFuncOver<C> {
    pub fn zero() -> Self {
        TensorSymFuncOver { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Partition::empty(), Partition::empty(), C::one());
        t
    }

    /// `f ⊗ g`.
    pub fn pure(f: &SymFuncOver<C>, g: &SymFuncOver<C>) -> Self {
        let mut t = Self::zero();
        for (p, a) in f.terms() {
            for (q, b) in g.terms() {
                t.add_term(p.clone(), q.clone(), a.clone() * b.clone());
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let s = match self.coeffs.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.coeffs.insert(key, s);
        }
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> C {
        self.coeffs
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((p, q), c) in &other.coeffs {
            out.add_term(p.clone(), q.clone(), c.clone());
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((p1, q1), a) in &self.coeffs {
            for ((p2, q2), b) in &other.coeffs {
                let left = SymFuncOver::<C>::schur(p1.clone()).multiply(&SymFuncOver::schur(p2.clone()));
                let right = SymFuncOver::<C>::schur(q1.clone()).multiply(&SymFuncOver::schur(q2.clone()));
                let ab = a.clone() * b.clone();
                for (l, x) in left.terms() {
                    for (r, y) in right.terms() {
                        out.add_term(l.clone(), r.clone(), ab.clone() * x.clone() * y.clone());
                    }
                }
            }
        }
        out
    }

    /// Applies `f ⊗ g` termwise.
    pub fn map_legs(
        &self,
        left: impl Fn(&SymFuncOver<C>) -> SymFuncOver<C>,
        right: impl Fn(&SymFuncOver<C>) -> SymFuncOver<C>,
    ) -> Self {
        let mut out = Self::zero();
        for ((p, q), c) in &self.coeffs {
            let l = left(&SymFuncOver::schur(p.clone()));
            let r = right(&SymFuncOver::schur(q.clone()));
            let t = TensorSymFuncOver::pure(&l, &r);
            for ((a, b), d) in t.coeffs {
                out.add_term(a, b, d * c.clone());
            }
        }
        out
    }

    /// Multiplication map Λ⊗Λ → Λ.
    pub fn contract(&self) -> SymFuncOver<C> {
        let mut out = SymFuncOver::zero();
        for ((p, q), c) in &self.coeffs {
            out = out + SymFuncOver::<C>::schur(p.clone()).multiply(&SymFuncOver::schur(q.clone())).scale(c);
        }
        out
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for TensorSymFuncOver<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .map(|((p, q), c)| (format!("s{}⊗s{}", p, q), c.to_string()))
            .collect();
        write!(f, "{}", format_signed_sum(terms))
    }
}

impl<C: Scalar> fmt::Debug for TensorSymFuncOver<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

/// `Δ(s_π) = Σ c^π_{μν} s_μ ⊗ s_ν`, extended linearly.
pub fn coproduct<C: Scalar>(f: &SymFuncOver<C>) -> TensorSymFuncOver<C> {
    let mut out = TensorSymFuncOver::zero();
    for (pi, c) in f.terms() {
        let n = pi.weight();
        for k in 0..=n {
            for mu in partitions_of(k).into_iter().filter(|m| pi.contains(m)) {
                for nu in partitions_of(n - k).into_iter().filter(|m| pi.contains(m)) {
                    let lr = lr_coefficient(pi, &mu, &nu);
                    if lr > 0 {
                        out.add_term(mu.clone(), nu, c.clone() * C::from_integer(&BigInt::from(lr)));
                    }
                }
            }
        }
    }
    out
}

/// Degree-zero coefficient.
pub fn counit<C: Scalar>(f: &SymFuncOver<C>) -> C {
    f.coeff(&Partition::empty())
}

/// The ring involution `s_π ↦ s_π′`.
pub fn omega<C: Scalar>(f: &SymFuncOver<C>) -> SymFuncOver<C> {
    SymFuncOver::from_terms(f.terms().map(|(p, c)| (p.conjugate(), c.clone())))
}

/// The Hopf antipode `s_π ↦ (−1)^{|π|} s_π′`.
pub fn antipode<C: Scalar>(f: &SymFuncOver<C>) -> SymFuncOver<C> {
    SymFuncOver::from_terms(f.terms().map(|(p, c)| {
        let c = if p.weight() % 2 == 0 { c.clone() } else { -c.clone() };
        (p.conjugate(), c)
    }))
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
    fn coproduct_of_e2() {
        let d = coproduct(&SymFunc::e(2));
        let expect = TensorSymFuncOver::pure(&SymFunc::e(2), &SymFunc::one())
            .add(&TensorSymFuncOver::pure(&SymFunc::e(1), &SymFunc::e(1)))
            .add(&TensorSymFuncOver::pure(&SymFunc::one(), &SymFunc::e(2)));
        assert_eq!(d, expect);
        assert_eq!(coproduct(&SymFunc::one()), TensorSymFuncOver::one());
    }

    #[test]
    fn coproduct_of_s21() {
        let d = coproduct(&s(&[2, 1]));
        let s2_11 = s(&[2]) + s(&[1, 1]);
        let expect = TensorSymFuncOver::pure(&SymFunc::one(), &s(&[2, 1]))
            .add(&TensorSymFuncOver::pure(&s(&[1]), &s2_11))
            .add(&TensorSymFuncOver::pure(&s2_11, &s(&[1])))
            .add(&TensorSymFuncOver::pure(&s(&[2, 1]), &SymFunc::one()));
        assert_eq!(d, expect);
    }

    #[test]
    fn omega_and_antipode() {
        assert_eq!(omega(&s(&[2, 1])), s(&[2, 1]));
        assert_eq!(omega(&SymFunc::e(3)), SymFunc::h(3));
        assert_eq!(antipode(&SymFunc::e(2)), SymFunc::h(2));
        assert_eq!(antipode(&SymFunc::e(3)), -SymFunc::h(3));
    }

    #[test]
    fn antipode_axiom_on_e2() {
        // Σ S(e_i) e_{2-i} = h_2 - h_1 e_1 + e_2 = 0
        let lhs = coproduct(&SymFunc::e(2)).map_legs(antipode, |g| g.clone()).contract();
        assert!(lhs.is_zero());
    }
}
