//! Candidate bounds for a sum `x + y` from bounds `λ` of `x` and `μ` of `y`.
//!
//! `s_π(x+y) = Σ c^π_{αβ} s_α(x) s_β(y)` vanishes as soon as every nonzero
//! `c^π_{αβ}` has `α ⊇ λ` or `β ⊇ μ`. A partition `π₀` is a sum bound if
//! this holds for all `π ⊇ π₀`; candidates are checked by brute force.

use serde::Serialize;

use crate::partitions::{partitions_of, Partition};
use crate::schur::lr_coefficient;

/// A violation: `c^π_{αβ} ≠ 0` with `α ⊉ λ` and `β ⊉ μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumBoundWitness {
    pub pi: Partition,
    pub alpha: Partition,
    pub beta: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateCheck {
    pub candidate: Partition,
    pub verified: bool,
    pub witnesses: Vec<SumBoundWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumBoundReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub up_to: usize,
    /// The componentwise sum `λ + μ`.
    pub componentwise: CandidateCheck,
    /// `π₀_k = max_{i+j−1=k}(λ_i + μ_j − 1)`, from the inequality
    /// `π_{i+j−1} ≤ α_i + β_j` for `c^π_{αβ} ≠ 0`.
    pub weyl: CandidateCheck,
}

/// Checks the componentwise sum and the inequality-based candidate over
/// all `π ⊇ π₀` with `|π| ≤ n`.
pub fn sum_bound_candidate(lambda: &Partition, mu: &Partition, n: usize) -> SumBoundReport {
    let componentwise = check(lambda, mu, lambda.add_rows(mu), n);
    let weyl = check(lambda, mu, weyl_candidate(lambda, mu), n);
    SumBoundReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        up_to: n,
        componentwise,
        weyl,
    }
}

fn weyl_candidate(lambda: &Partition, mu: &Partition) -> Partition {
    if lambda.is_empty() || mu.is_empty() {
        return Partition::empty();
    }
    let rows = lambda.len() + mu.len() - 1;
    let parts: Vec<usize> = (1..=rows)
        .map(|k| {
            (1..=lambda.len())
                .filter(|&i| k + 1 > i && k + 1 - i <= mu.len())
                .map(|i| lambda.part(i - 1) + mu.part(k - i) - 1)
                .max()
                .unwrap_or(0)
        })
        .collect();
    Partition::from_unsorted(parts)
}

fn check(lambda: &Partition, mu: &Partition, candidate: Partition, n: usize) -> CandidateCheck {
    let mut witnesses = Vec::new();
    for w in candidate.weight()..=n {
        for pi in partitions_of(w).into_iter().filter(|p| p.contains(&candidate)) {
            for k in 0..=w {
                let alphas: Vec<Partition> = partitions_of(k)
                    .into_iter()
                    .filter(|a| pi.contains(a) && !a.contains(lambda))
                    .collect();
                if alphas.is_empty() {
                    continue;
                }
                let betas: Vec<Partition> = partitions_of(w - k)
                    .into_iter()
                    .filter(|b| pi.contains(b) && !b.contains(mu))
                    .collect();
                for alpha in &alphas {
                    for beta in &betas {
                        if lr_coefficient(&pi, alpha, beta) != 0 {
                            witnesses.push(SumBoundWitness {
                                pi: pi.clone(),
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    CandidateCheck {
        candidate,
        verified: witnesses.is_empty(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn single_boxes() {
        let r = sum_bound_candidate(&part(&[1]), &part(&[1]), 6);
        assert_eq!(r.componentwise.candidate, part(&[2]));
        assert!(r.componentwise.verified);
        assert_eq!(r.weyl.candidate, part(&[1]));
        assert!(r.weyl.verified);
    }

    #[test]
    fn empty_bound() {
        let r = sum_bound_candidate(&part(&[]), &part(&[2, 1]), 6);
        assert_eq!(r.componentwise.candidate, part(&[2, 1]));
        assert!(r.componentwise.verified);
    }

    #[test]
    fn squares() {
        let r = sum_bound_candidate(&part(&[2, 2]), &part(&[2, 2]), 10);
        assert_eq!(r.componentwise.candidate, part(&[4, 4]));
        // s_(4) s_(4) contains s_(4,4), and (4) contains neither bound
        assert!(r.componentwise.witnesses.contains(&SumBoundWitness {
            pi: part(&[4, 4]),
            alpha: part(&[4]),
            beta: part(&[4]),
        }));
        assert_eq!(r.weyl.candidate, part(&[3, 3, 3]));
        assert!(r.weyl.verified);
    }
}
