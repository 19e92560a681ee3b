//! The map `Λ → Λ_m ⊗ Λ_{−n}` sending the generator to `a + b`, whose kernel
//! is `I_β` for the rectangle `β = ((m+1)^{n+1})`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::linalg::rank;
use crate::partitions::{partitions_of, Partition};
use crate::poly::{MPoly, Monomial};
use crate::scalar::Native;
use crate::schur::schur_to_e_polynomial;
use crate::SymFunc;

use super::{LambdaRing, PolyLambdaRing};

#[derive(Debug, Clone)]
pub struct QuotientEmbedding {
    beta: Partition,
    even_degree: usize,
    odd_degree: usize,
    target: PolyLambdaRing,
}

/// Builds the embedding for a non-empty rectangle `β = ((m+1)^{n+1})`.
pub fn quotient_embedding(beta: &Partition, cap: usize) -> Result<QuotientEmbedding> {
    if beta.is_empty() {
        return Err(Error::NoRectangles);
    }
    if !beta.is_rectangular() {
        return Err(Error::NotRectangular(beta.to_string()));
    }
    let m = beta.width() - 1;
    let n = beta.len() - 1;
    Ok(QuotientEmbedding {
        beta: beta.clone(),
        even_degree: m,
        odd_degree: n,
        target: PolyLambdaRing::tensor(m, n, cap),
    })
}

/// Degreewise comparison of the kernel with `span{s_π : π ⊇ β}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub degree: usize,
    /// Number of `π ⊇ β` of this weight.
    pub contained: usize,
    /// Those `π ⊇ β` whose image is nonzero.
    pub nonvanishing: Vec<Partition>,
    /// Number of `π ⊉ β` of this weight.
    pub outside: usize,
    /// Rank of the images of the `s_π`, `π ⊉ β`.
    pub rank: usize,
}

impl KernelReport {
    /// The kernel in this degree is exactly `span{s_π : π ⊇ β}`.
    pub fn matches(&self) -> bool {
        self.nonvanishing.is_empty() && self.rank == self.outside
    }
}

impl QuotientEmbedding {
    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// `(m, n)`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.even_degree, self.odd_degree)
    }

    pub fn target(&self) -> &PolyLambdaRing {
        &self.target
    }

    /// Image of the generator, `a1 + b1`.
    pub fn generator_image(&self) -> MPoly<BigInt> {
        self.target.universal_element()
    }

    /// `[1, λ¹(a+b), …, λᵈ(a+b)]`.
    pub fn lambda_images(&self, d: usize) -> Result<Vec<MPoly<BigInt>>> {
        check_cap(d, self.target.degree_cap())?;
        self.target.lambda_values(&self.generator_image(), d)
    }

    /// Image of a symmetric function.
    pub fn map(&self, f: &SymFunc) -> Result<MPoly<BigInt>> {
        let d = f.degree().unwrap_or(0);
        let vals = self.lambda_images(d)?;
        crate::lambda_calculus::evaluate_e_polynomial(&self.target, &schur_to_e_polynomial(f), &vals)
    }

    pub fn kernel_report(&self, d: usize) -> Result<KernelReport> {
        let vals = self.lambda_images(d)?;
        let mut nonvanishing = Vec::new();
        let mut contained = 0;
        let mut images: Vec<MPoly<BigInt>> = Vec::new();
        for pi in partitions_of(d) {
            let img = crate::lambda_calculus::evaluate_e_polynomial(
                &self.target,
                &schur_to_e_polynomial(&SymFunc::schur(pi.clone())),
                &vals,
            )?;
            if pi.contains(&self.beta) {
                contained += 1;
                if !img.is_zero() {
                    nonvanishing.push(pi);
                }
            } else {
                images.push(img);
            }
        }
        let outside = images.len();
        Ok(KernelReport {
            degree: d,
            contained,
            nonvanishing,
            outside,
            rank: image_rank(&images),
        })
    }
}

/// Rank over Q of a list of integer polynomials.
pub(crate) fn image_rank(images: &[MPoly<BigInt>]) -> usize {
    let mut monos: Vec<Monomial> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<BigInt>> = images.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    if monos.is_empty() {
        return 0;
    }
    rank(&Native::<BigInt>::new(), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::lambda_op;
    use crate::partitions::part;

    #[test]
    fn two_by_two() {
        let f = quotient_embedding(&part(&[2, 2]), 12).unwrap();
        let t = f.target();
        let a = t.element("a1").unwrap();
        let b = t.element("b1").unwrap();
        let vals = f.lambda_images(6).unwrap();
        for k in 0..6 {
            assert_eq!(vals[k + 1], &(&a + &b) * &b.pow(k as u32));
        }
        assert!(f.map(&SymFunc::schur(part(&[2, 2]))).unwrap().is_zero());
        for d in 0..=6 {
            assert!(f.kernel_report(d).unwrap().matches(), "degree {}", d);
        }
    }

    #[test]
    fn commutes_with_lambda() {
        let f = quotient_embedding(&part(&[3, 3]), 12).unwrap();
        let free = crate::lambda_rings::SchurQuotient::free(12);
        let g = SymFunc::schur(part(&[2])) - SymFunc::schur(part(&[1]));
        for k in 1..=3 {
            let lhs = f.map(&lambda_op(&free, &g, k).unwrap()).unwrap();
            let rhs = lambda_op(f.target(), &f.map(&g).unwrap(), k).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rejects_non_rectangles() {
        assert!(matches!(quotient_embedding(&part(&[2, 1]), 12), Err(Error::NotRectangular(_))));
        assert!(matches!(quotient_embedding(&part(&[]), 12), Err(Error::NoRectangles)));
    }
}
