//! `R_m = Z[x_1, x_2, …]` modulo all products `x_{i_1}⋯x_{i_m}` with
//! `|i_j − i_k| < 2m`, and `f(t) = 1 + Σ x_n tⁿ`.
//!
//! Every `m×m` Hankel determinant of `f` vanishes, while `s_π(f)` survives
//! for partitions whose conjugate has widely spaced parts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poly::{MPoly, Monomial};
use crate::scalar::Ring;

use super::{is_determinantally_rational, is_schur_rational, HankelReport, SchurRationalReport, SeriesOracle};

/// `R_m`; variable `n` is `x_n`. The ideal is monomial, so normal forms
/// drop the forbidden monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterexampleRing {
    m: usize,
}

impl CounterexampleRing {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Precondition("R_m needs m ≥ 2".into()));
        }
        Ok(CounterexampleRing { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generator(&self, n: usize) -> MPoly<BigInt> {
        if n == 0 {
            MPoly::one()
        } else {
            MPoly::var(n as u32)
        }
    }

    /// Some `m` factors (with multiplicity) have indices within `2m − 1`
    /// of each other.
    pub fn is_forbidden(&self, mono: &Monomial) -> bool {
        let idx: Vec<u32> = mono
            .pairs()
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
            .collect();
        let m = self.m;
        idx.windows(m).any(|w| ((w[m - 1] - w[0]) as usize) < 2 * m)
    }

    pub fn reduce(&self, p: &MPoly<BigInt>) -> MPoly<BigInt> {
        p.filter_terms(|mono| !self.is_forbidden(mono))
    }

    pub fn render(&self, p: &MPoly<BigInt>) -> String {
        p.display_with(|v| format!("x{}", v))
    }
}

impl Ring for CounterexampleRing {
    type Elem = MPoly<BigInt>;

    fn zero(&self) -> MPoly<BigInt> {
        MPoly::new()
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

/// `R_m` with `f(t) = 1 + Σ_{n ≤ index_cap} x_n tⁿ`; coefficients past
/// `index_cap` are not available.
pub fn counterexample_ring(m: usize, index_cap: usize) -> Result<(CounterexampleRing, SeriesOracle<CounterexampleRing>)> {
    let ring = CounterexampleRing::new(m)?;
    let coeffs = (0..=index_cap).map(|n| ring.generator(n)).collect();
    let f = SeriesOracle::from_coeffs(ring, coeffs)?;
    Ok((ring, f))
}

/// Both checks on the series of `R_m`.
#[derive(Debug, Clone)]
pub struct Separation {
    pub hankel: HankelReport<MPoly<BigInt>>,
    pub schur: SchurRationalReport<MPoly<BigInt>>,
    /// First witness `π` whose diagonal monomial `∏ x_{π′_i}` survives.
    pub lacunary: Option<Partition>,
}

impl Separation {
    /// Determinantally rational but not Schur-rational, within the window.
    pub fn separates(&self) -> bool {
        self.hankel.holds() && !self.schur.holds()
    }
}

/// Runs the `m×m` Hankel check and the Schur check against `μ`, both up to
/// coefficient `N`.
pub fn separation(m: usize, mu: &Partition, n_max: usize, index_cap: usize) -> Result<Separation> {
    let (ring, f) = counterexample_ring(m, index_cap)?;
    let hankel = is_determinantally_rational(&f, m, 0, n_max)?;
    let schur = is_schur_rational(&f, mu, n_max)?;
    let lacunary = schur
        .witnesses
        .iter()
        .find(|(pi, v)| {
            let diag = pi.conjugate().parts().iter().fold(MPoly::one(), |acc, &k| &acc * &ring.generator(k));
            let (mono, _) = diag.leading_term().expect("nonzero monomial");
            !ring.is_forbidden(mono) && !v.coeff(mono).is_zero()
        })
        .map(|(pi, _)| pi.clone());
    Ok(Separation { hankel, schur, lacunary })
}
