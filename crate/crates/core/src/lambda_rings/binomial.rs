//! `Z^k` with `λⁿ(r) = binomial(r, n)` in each coordinate.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::scalar::{binomial, Ring};

use super::LambdaRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    rank: usize,
    cap: usize,
}

impl Binomial {
    /// `Z^rank`; rank 1 is Z.
    pub fn new(rank: usize, cap: usize) -> Self {
        Binomial { rank, cap }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, coords: &[i64]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.rank, "wrong number of coordinates");
        coords.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl Ring for Binomial {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.rank]
    }
    fn one(&self) -> Vec<BigInt> {
        vec![BigInt::from(1); self.rank]
    }
    fn from_int(&self, n: &BigInt) -> Vec<BigInt> {
        vec![n.clone(); self.rank]
    }
    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }
    fn is_zero(&self, a: &Vec<BigInt>) -> bool {
        a.iter().all(Zero::is_zero)
    }
}

impl LambdaRing for Binomial {
    fn degree_cap(&self) -> usize {
        self.cap
    }

    fn lambda_values(&self, x: &Vec<BigInt>, n: usize) -> Result<Vec<Vec<BigInt>>> {
        Ok((0..=n).map(|k| x.iter().map(|r| binomial(r, k)).collect()).collect())
    }

    fn render(&self, x: &Vec<BigInt>) -> String {
        if self.rank == 1 {
            x[0].to_string()
        } else {
            let parts: Vec<String> = x.iter().map(BigInt::to_string).collect();
            format!("({})", parts.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::{apply_symfunc, lambda_op, negate_schur_identity, sigma_op};
    use crate::partitions::part;
    use crate::SymFunc;

    #[test]
    fn binomial_values() {
        let z = Binomial::new(1, 12);
        assert_eq!(lambda_op(&z, &z.element(&[3]), 2).unwrap(), z.element(&[3]));
        // σⁿ(r) = binomial(r + n − 1, n)
        assert_eq!(sigma_op(&z, &z.element(&[3]), 2).unwrap(), z.element(&[6]));
        assert_eq!(lambda_op(&z, &z.element(&[-2]), 3).unwrap(), z.element(&[-4]));
    }

    #[test]
    fn s21_of_two() {
        // s_21 = e2 e1 − e3 at r = 2: 1·2 − 0
        let z = Binomial::new(1, 12);
        let v = apply_symfunc(&z, &SymFunc::schur(part(&[2, 1])), &z.element(&[2])).unwrap();
        assert_eq!(v, z.element(&[2]));
    }

    #[test]
    fn negation_in_integers() {
        let z = Binomial::new(2, 12);
        let chk = negate_schur_identity(&z, &z.element(&[3, -1]), &part(&[2, 1])).unwrap();
        assert!(chk.signed_holds);
    }
}
