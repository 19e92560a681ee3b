use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::lambda_rings::{lambda_series, sigma_series, LambdaRing};
use crate::scalar::Ring;

/// Produces the coefficients `r_from..=r_to`.
type Source<E> = Arc<dyn Fn(usize, usize) -> Result<Vec<E>> + Send + Sync>;

/// A power series `Σ r_n tⁿ` with `r_0 = 1`, computed on demand.
///
/// Coefficients are memoized behind a mutex, so one oracle can serve
/// concurrent readers.
pub struct SeriesOracle<R: Ring> {
    ring: R,
    source: Source<R::Elem>,
    memo: Mutex<Vec<R::Elem>>,
}

impl<R: Ring> SeriesOracle<R> {
    fn with_source(ring: R, source: Source<R::Elem>) -> Result<Self> {
        let oracle = SeriesOracle {
            ring,
            source,
            memo: Mutex::new(Vec::new()),
        };
        if !oracle.ring.is_one(&oracle.coeff(0)?) {
            return Err(Error::NonUnit);
        }
        Ok(oracle)
    }

    /// `r_n = f(n)`.
    pub fn from_fn(ring: R, f: impl Fn(usize) -> R::Elem + Send + Sync + 'static) -> Result<Self> {
        Self::with_source(ring, Arc::new(move |from, to| Ok((from..=to).map(&f).collect())))
    }

    /// A series known only up to `t^{len−1}`; later coefficients are an
    /// error.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Result<Self>
    where
        R::Elem: Send + Sync + 'static,
    {
        let given = coeffs.len().saturating_sub(1);
        Self::with_source(
            ring,
            Arc::new(move |from, to| {
                if to >= coeffs.len() {
                    return Err(Error::InsufficientValues { needed: to, given });
                }
                Ok(coeffs[from..=to].to_vec())
            }),
        )
    }

    /// A polynomial, extended by zeros.
    pub fn polynomial(ring: R, coeffs: Vec<R::Elem>) -> Result<Self>
    where
        R: Clone + Send + Sync + 'static,
        R::Elem: Send + Sync + 'static,
    {
        let r = ring.clone();
        Self::with_source(
            ring,
            Arc::new(move |from, to| Ok((from..=to).map(|k| coeffs.get(k).cloned().unwrap_or_else(|| r.zero())).collect())),
        )
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `r_n`.
    pub fn coeff(&self, n: usize) -> Result<R::Elem> {
        Ok(self.coeffs(n)?.swap_remove(n))
    }

    /// `[r_0, …, r_n]`.
    pub fn coeffs(&self, n: usize) -> Result<Vec<R::Elem>> {
        let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
        if memo.len() <= n {
            let more = (self.source)(memo.len(), n)?;
            memo.extend(more);
        }
        Ok(memo[..=n].to_vec())
    }

    /// Number of coefficients computed so far.
    pub fn known(&self) -> usize {
        self.memo.lock().map(|m| m.len()).unwrap_or(0)
    }
}

impl<R: LambdaRing + Clone + Send + Sync + 'static> SeriesOracle<R>
where
    R::Elem: Send + Sync + 'static,
{
    /// `λ_t(x)`, up to the ring's degree cap.
    pub fn lambda_t(ring: R, x: R::Elem) -> Result<Self> {
        let r = ring.clone();
        Self::with_source(
            ring,
            Arc::new(move |from, to| Ok(lambda_series(&r, &x, to)?.into_coeffs().split_off(from))),
        )
    }

    /// `σ_t(x)`, up to the ring's degree cap.
    pub fn sigma_t(ring: R, x: R::Elem) -> Result<Self> {
        let r = ring.clone();
        Self::with_source(
            ring,
            Arc::new(move |from, to| Ok(sigma_series(&r, &x, to)?.into_coeffs().split_off(from))),
        )
    }
}

impl<R: Ring> fmt::Debug for SeriesOracle<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesOracle").field("known", &self.known()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Native;
    use num_bigint::BigInt;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn memoized_and_shared() {
        let calls = Arc::new(AtomicUsize::new(0));
        let c = calls.clone();
        let f = SeriesOracle::from_fn(Native::<BigInt>::new(), move |n| {
            c.fetch_add(1, Ordering::SeqCst);
            BigInt::from(n + 1) - BigInt::from(n)
        })
        .unwrap();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(f.coeffs(10).unwrap().len(), 11));
            }
        });
        assert_eq!(calls.load(Ordering::SeqCst), 11);
    }

    #[test]
    fn rejects_non_unit() {
        let z = Native::<BigInt>::new();
        assert_eq!(SeriesOracle::from_coeffs(z, vec![BigInt::from(2)]).unwrap_err(), Error::NonUnit);
        let f = SeriesOracle::from_coeffs(z, vec![BigInt::from(1), BigInt::from(2)]).unwrap();
        assert!(matches!(f.coeff(2), Err(Error::InsufficientValues { .. })));
    }
}
