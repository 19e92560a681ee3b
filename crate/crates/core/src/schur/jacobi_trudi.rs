//! Jacobi-Trudi determinants and conversions between the Schur basis and
//! polynomials in the elementary generators.
//!
//! An "e-polynomial" is an [`MPoly`] in which variable `k` stands for `e_k`
//! (`k ≥ 1`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::det;
use crate::partitions::Partition;
use crate::poly::{format_signed_sum, MPoly, Monomial};
use crate::scalar::{Native, Scalar};

use super::pieri::from_generator_monomial;
use super::SymFuncOver;

/// Which family of generators: elementary `e_k` or complete `h_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenBasis {
    E,
    H,
}

impl fmt::Display for GenBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenBasis::E => "e",
            GenBasis::H => "h",
        })
    }
}

impl FromStr for GenBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "e" => Ok(GenBasis::E),
            "h" => Ok(GenBasis::H),
            _ => Err(Error::Parse(format!("basis must be e or h, got {:?}", s))),
        }
    }
}

/// A product of generators of one family, indices in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenMonomial {
    pub basis: GenBasis,
    pub indices: Vec<usize>,
}

impl GenMonomial {
    pub fn word(&self) -> Vec<(GenBasis, usize)> {
        self.indices.iter().map(|&k| (self.basis, k)).collect()
    }
}

impl fmt::Display for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.indices.len() {
            let k = self.indices[i];
            let run = self.indices[i..].iter().take_while(|&&j| j == k).count();
            parts.push(if run == 1 {
                format!("{}{}", self.basis, k)
            } else {
                format!("{}{}^{}", self.basis, k, run)
            });
            i += run;
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A signed sum of generator monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedExpansion {
    pub terms: Vec<(BigInt, GenMonomial)>,
}

impl SignedExpansion {
    /// Re-expands every monomial by Pieri chains.
    pub fn to_schur<C: Scalar>(&self) -> SymFuncOver<C> {
        let mut out = SymFuncOver::zero();
        for (c, m) in &self.terms {
            let f: SymFuncOver<C> = from_generator_monomial(&m.word());
            out = out + f.scale(&C::from_integer(c));
        }
        out
    }
}

impl fmt::Display for SignedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mono = if m.indices.is_empty() { String::new() } else { m.to_string() };
                (mono, c.to_string())
            })
            .collect();
        write!(f, "{}", format_signed_sum(terms))
    }
}

/// Determinant of `(g_{π_i + j − i})` with `g_0 = 1` and `g_k = 0` for
/// `k < 0`, as an MPoly in which variable `k` is `g_k`.
fn jt_determinant(rows: &Partition) -> MPoly<BigInt> {
    let n = rows.len();
    let entry = |i: usize, j: usize| -> MPoly<BigInt> {
        let k = rows.part(i) as i64 + j as i64 - i as i64;
        match k {
            k if k < 0 => MPoly::zero(),
            0 => MPoly::one(),
            k => MPoly::var(k as u32),
        }
    };
    let m: Vec<Vec<MPoly<BigInt>>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    det(&Native::<MPoly<BigInt>>::new(), &m)
}

/// Expansion `s_π = det|h_{π_i+j−i}|` (basis `h`) or `det|e_{π′_i+j−i}|`
/// (basis `e`) as a signed sum of generator monomials.
pub fn jacobi_trudi(pi: &Partition, basis: GenBasis) -> SignedExpansion {
    let rows = match basis {
        GenBasis::H => pi.clone(),
        GenBasis::E => pi.conjugate(),
    };
    let poly = jt_determinant(&rows);
    let mut terms: Vec<(BigInt, GenMonomial)> = poly
        .terms()
        .map(|(m, c)| {
            let mut indices: Vec<usize> = m
                .pairs()
                .iter()
                .flat_map(|&(v, e)| std::iter::repeat_n(v as usize, e as usize))
                .collect();
            indices.sort_unstable_by(|a, b| b.cmp(a));
            (c.clone(), GenMonomial { basis, indices })
        })
        .collect();
    terms.sort_by(|a, b| a.1.indices.cmp(&b.1.indices));
    SignedExpansion { terms }
}

fn e_cache() -> &'static RwLock<HashMap<Partition, MPoly<BigInt>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, MPoly<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn s_cache() -> &'static RwLock<HashMap<Monomial, SymFuncOver<BigInt>>> {
    static CACHE: OnceLock<RwLock<HashMap<Monomial, SymFuncOver<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_π` as a polynomial in `e_1, e_2, ...` (memoized).
pub(crate) fn schur_in_e(pi: &Partition) -> MPoly<BigInt> {
    if let Some(p) = e_cache().read().expect("cache poisoned").get(pi) {
        return p.clone();
    }
    let p = jt_determinant(&pi.conjugate());
    e_cache()
        .write()
        .expect("cache poisoned")
        .entry(pi.clone())
        .or_insert(p)
        .clone()
}

/// Writes a symmetric function as a polynomial in the `e_k`.
pub fn schur_to_e_polynomial<C: Scalar>(f: &SymFuncOver<C>) -> MPoly<C> {
    let mut out = MPoly::zero();
    for (pi, c) in f.terms() {
        let e = schur_in_e(pi).map_coeffs(|k| C::from_integer(k) * c.clone());
        out = &out + &e;
    }
    out
}

fn e_monomial_to_schur(m: &Monomial) -> SymFuncOver<BigInt> {
    if let Some(f) = s_cache().read().expect("cache poisoned").get(m) {
        return f.clone();
    }
    let mut word: Vec<(GenBasis, usize)> = m
        .pairs()
        .iter()
        .flat_map(|&(v, e)| std::iter::repeat_n((GenBasis::E, v as usize), e as usize))
        .collect();
    // larger factors first keeps the intermediate expansions small
    word.reverse();
    let f: SymFuncOver<BigInt> = from_generator_monomial(&word);
    s_cache()
        .write()
        .expect("cache poisoned")
        .entry(m.clone())
        .or_insert(f)
        .clone()
}

/// Expands a polynomial in the `e_k` into the Schur basis.
pub fn e_polynomial_to_schur<C: Scalar>(p: &MPoly<C>) -> SymFuncOver<C> {
    let mut out = SymFuncOver::zero();
    for (m, c) in p.terms() {
        if m.pairs().iter().any(|&(v, _)| v == 0) {
            panic!("variable 0 is not an elementary generator");
        }
        for (pi, k) in e_monomial_to_schur(m).terms() {
            out.add_term(pi.clone(), C::from_integer(k) * c.clone());
        }
    }
    out
}

impl GenMonomial {
    pub fn unit(basis: GenBasis) -> Self {
        GenMonomial { basis, indices: Vec::new() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{part, partitions_up_to};
    use crate::SymFunc;

    #[test]
    fn examples() {
        assert_eq!(jacobi_trudi(&part(&[2, 1]), GenBasis::H).to_string(), "h2*h1 - h3");
        assert_eq!(jacobi_trudi(&part(&[2, 1]), GenBasis::E).to_string(), "e2*e1 - e3");
        assert_eq!(jacobi_trudi(&part(&[4]), GenBasis::H).to_string(), "h4");
        assert_eq!(jacobi_trudi(&part(&[1, 1]), GenBasis::H).to_string(), "h1^2 - h2");
        assert_eq!(jacobi_trudi(&part(&[]), GenBasis::H).to_string(), "1");
    }

    #[test]
    fn closure_small() {
        for pi in partitions_up_to(5) {
            for b in [GenBasis::E, GenBasis::H] {
                let back: SymFunc = jacobi_trudi(&pi, b).to_schur();
                assert_eq!(back, SymFunc::schur(pi.clone()), "{} {}", pi, b);
            }
        }
    }

    #[test]
    fn e_polynomial_roundtrip() {
        let f = SymFunc::schur(part(&[3, 1])) - SymFunc::schur(part(&[1, 1]));
        assert_eq!(e_polynomial_to_schur(&schur_to_e_polynomial(&f)), f);
    }
}
