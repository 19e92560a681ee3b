//! Rationality of power series `f(t) = Σ r_n tⁿ` with `r_0 = 1`.
//!
//! Three notions are checked here. A series is rational when `f = p/q`.
//! It is determinantally rational when the `m×m` Hankel determinants
//! `det(r_{n+i+j})` vanish for all large `n`. It is Schur-rational when
//! the Jacobi-Trudi minors `s_π(f)` vanish for all `π ⊇ μ`.

mod counterexample;
mod lines;
mod oracle;

pub use counterexample::{counterexample_ring, separation, CounterexampleRing, Separation};
pub use lines::{factor_into_lines, LineFactorization};
pub use oracle::SeriesOracle;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{det, solve};
use crate::partitions::{superpartitions_of, Partition};
use crate::scalar::{Domain, Ring};

/// `det(r_{n+i+j})_{i,j=1..m}`.
pub fn hankel_det<R: Ring>(f: &SeriesOracle<R>, m: usize, n: usize) -> Result<R::Elem> {
    let r = f.coeffs(n + 2 * m)?;
    let mat: Vec<Vec<R::Elem>> = (1..=m).map(|i| (1..=m).map(|j| r[n + i + j].clone()).collect()).collect();
    Ok(det(f.ring(), &mat))
}

/// Result of [`is_determinantally_rational`].
#[derive(Debug, Clone)]
pub struct HankelReport<E> {
    pub m: usize,
    pub n0: usize,
    pub up_to: usize,
    /// Offsets `n` that were checked.
    pub offsets: Vec<usize>,
    /// Offsets with a nonzero determinant.
    pub witnesses: Vec<(usize, E)>,
}

impl<E> HankelReport<E> {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks `hankel_det(f, m, n) = 0` for `n₀ < n ≤ N − 2m`.
pub fn is_determinantally_rational<R: Ring>(
    f: &SeriesOracle<R>,
    m: usize,
    n0: usize,
    n_max: usize,
) -> Result<HankelReport<R::Elem>> {
    if m == 0 {
        return Err(Error::Precondition("Hankel size must be at least 1".into()));
    }
    if n_max < n0 + 2 * m {
        return Err(Error::Precondition(format!("N = {} is below n0 + 2m = {}", n_max, n0 + 2 * m)));
    }
    let offsets: Vec<usize> = (n0 + 1..=n_max - 2 * m).collect();
    let mut witnesses = Vec::new();
    for &n in &offsets {
        let d = hankel_det(f, m, n)?;
        if !f.ring().is_zero(&d) {
            witnesses.push((n, d));
        }
    }
    Ok(HankelReport {
        m,
        n0,
        up_to: n_max,
        offsets,
        witnesses,
    })
}

/// `s_π(f) = det(r_{π′_i − i + j})`, an `π_1 × π_1` determinant.
///
/// With `r_n = λⁿ(x)` this is `s_π(x)`.
pub fn schur_minor<R: Ring>(f: &SeriesOracle<R>, pi: &Partition) -> Result<R::Elem> {
    minor(f, pi, |c, i, j| c as isize - i as isize + j as isize)
}

/// The minor with entries `r_{π′_i + i − j}`. It agrees with
/// [`schur_minor`] on one-row and one-column shapes only; kept for comparison.
pub fn schur_minor_transposed_index<R: Ring>(f: &SeriesOracle<R>, pi: &Partition) -> Result<R::Elem> {
    minor(f, pi, |c, i, j| c as isize + i as isize - j as isize)
}

fn minor<R: Ring>(f: &SeriesOracle<R>, pi: &Partition, index: impl Fn(usize, usize, usize) -> isize) -> Result<R::Elem> {
    let conj = pi.conjugate();
    let k = conj.len();
    let top = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| index(conj.part(i), i, j)).max();
    let r = match top {
        Some(t) if t >= 0 => f.coeffs(t as usize)?,
        _ => vec![f.ring().one()],
    };
    let mat: Vec<Vec<R::Elem>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match index(conj.part(i), i, j) {
                    idx if idx < 0 => f.ring().zero(),
                    idx => r[idx as usize].clone(),
                })
                .collect()
        })
        .collect();
    Ok(det(f.ring(), &mat))
}

/// Result of [`is_schur_rational`].
#[derive(Debug, Clone)]
pub struct SchurRationalReport<E> {
    pub mu: Partition,
    pub up_to: usize,
    /// Number of partitions checked.
    pub checked: usize,
    pub witnesses: Vec<(Partition, E)>,
}

impl<E> SchurRationalReport<E> {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks `s_π(f) = 0` for every `π ⊇ μ` with `|π| ≤ N`.
pub fn is_schur_rational<R: Ring>(f: &SeriesOracle<R>, mu: &Partition, n_max: usize) -> Result<SchurRationalReport<R::Elem>> {
    f.coeffs(n_max)?;
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for pi in (mu.weight()..=n_max).flat_map(|w| superpartitions_of(mu, w)) {
        checked += 1;
        let v = schur_minor(f, &pi)?;
        if !f.ring().is_zero(&v) {
            witnesses.push((pi, v));
        }
    }
    Ok(SchurRationalReport {
        mu: mu.clone(),
        up_to: n_max,
        checked,
        witnesses,
    })
}

/// `f = p/q` with `p = Σ p_k t^k / d` and `q = Σ q_k t^k / d`, where
/// `p_0 = q_0 = d`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPair<E> {
    pub p: Vec<E>,
    pub q: Vec<E>,
    pub denominator: E,
    /// `q·f ≡ p` was verified modulo `t^{verified_to + 1}`.
    pub verified_to: usize,
}

impl<E> RationalPair<E> {
    pub fn degrees(&self) -> (usize, usize) {
        (self.p.len().saturating_sub(1), self.q.len().saturating_sub(1))
    }

    /// The rectangle with `deg p + 1` rows of length `deg q + 1`. Every
    /// `s_π(f)` with `π` containing it vanishes.
    pub fn schur_bound(&self) -> Partition {
        let (dp, dq) = self.degrees();
        Partition::rectangle(dp + 1, dq + 1)
    }
}

impl RationalPair<BigInt> {
    pub fn to_rational(&self) -> RationalPair<BigRational> {
        let scale = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::new(c.clone(), self.denominator.clone())).collect()
        };
        RationalPair {
            p: scale(&self.p),
            q: scale(&self.q),
            denominator: BigRational::from_integer(BigInt::from(1)),
            verified_to: self.verified_to,
        }
    }
}

/// Solves `q·f ≡ p (mod t^{N+1})` with `deg q < m`, `deg p < n₀` and
/// `q(0) = 1` over the fraction field. Free unknowns are set to zero, so
/// the lowest-index solution is returned.
pub fn reconstruct_rational<D: Domain>(
    f: &SeriesOracle<D>,
    m: usize,
    n0: usize,
    n_max: usize,
) -> Result<RationalPair<D::Elem>> {
    if m == 0 || n0 == 0 {
        return Err(Error::Precondition("degree bounds m and n0 must be at least 1".into()));
    }
    if n_max < n0 + 2 * m {
        return Err(Error::Precondition(format!("N = {} is below n0 + 2m = {}", n_max, n0 + 2 * m)));
    }
    let ring = f.ring();
    let r = f.coeffs(n_max)?;
    let at = |k: usize, j: usize| if j <= k { r[k - j].clone() } else { ring.zero() };
    // for k ≥ n₀: Σ_{j=1}^{m−1} q_j r_{k−j} = −r_k
    let a: Vec<Vec<D::Elem>> = (n0..=n_max).map(|k| (1..m).map(|j| at(k, j)).collect()).collect();
    let b: Vec<D::Elem> = (n0..=n_max).map(|k| ring.neg(&r[k])).collect();
    let sol = solve(ring, &a, &b).ok_or(Error::NoSolution)?;
    let d = sol.denominator;
    let mut q = vec![d.clone()];
    q.extend(sol.numerators);
    let p: Vec<D::Elem> = (0..n0)
        .map(|k| ring.sum(q.iter().enumerate().map(|(j, qj)| ring.mul(qj, &at(k, j))).collect::<Vec<_>>().iter()))
        .collect();
    Ok(normalize(ring, p, q, d, n_max))
}

fn normalize<D: Domain>(ring: &D, p: Vec<D::Elem>, q: Vec<D::Elem>, d: D::Elem, n: usize) -> RationalPair<D::Elem> {
    let trim = |mut v: Vec<D::Elem>| {
        while v.len() > 1 && v.last().is_some_and(|c| ring.is_zero(c)) {
            v.pop();
        }
        v
    };
    let (p, q) = (trim(p), trim(q));
    let divided: Option<(Vec<_>, Vec<_>)> = (|| {
        let dp = p.iter().map(|c| ring.exact_div(c, &d)).collect::<Option<Vec<_>>>()?;
        let dq = q.iter().map(|c| ring.exact_div(c, &d)).collect::<Option<Vec<_>>>()?;
        Some((dp, dq))
    })();
    match divided {
        Some((p, q)) => RationalPair {
            p,
            q,
            denominator: ring.one(),
            verified_to: n,
        },
        None => RationalPair {
            p,
            q,
            denominator: d,
            verified_to: n,
        },
    }
}
