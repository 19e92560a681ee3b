use std::collections::BTreeMap;

use crate::partitions::Partition;
use crate::scalar::Scalar;

use super::jacobi_trudi::GenBasis;
use super::SymFuncOver;

/// `h_p s_π`: sum over ways to add `p` boxes to `π`, no two in a column.
pub fn pieri_h<C: Scalar>(p: usize, pi: &Partition) -> SymFuncOver<C> {
    let mut out = Vec::new();
    let mut shape = pi.parts().to_vec();
    shape.push(0);
    horizontal(&mut shape, pi.parts(), 0, p, &mut out);
    SymFuncOver::from_terms(out.into_iter().map(|s| (Partition::from_unsorted(s), C::one())))
}

fn horizontal(shape: &mut Vec<usize>, old: &[usize], row: usize, need: usize, out: &mut Vec<Vec<usize>>) {
    if need == 0 {
        out.push(shape.clone());
        return;
    }
    if row >= shape.len() {
        return;
    }
    let room = if row == 0 {
        need
    } else {
        old[row - 1] - old.get(row).copied().unwrap_or(0)
    };
    for k in (0..=need.min(room)).rev() {
        shape[row] += k;
        horizontal(shape, old, row + 1, need - k, out);
        shape[row] -= k;
    }
}

/// `e_p s_π`: sum over ways to add `p` boxes to `π`, no two in a row.
pub fn pieri_e<C: Scalar>(p: usize, pi: &Partition) -> SymFuncOver<C> {
    let mut out = Vec::new();
    let mut shape = pi.parts().to_vec();
    shape.resize(pi.len() + p, 0);
    vertical(&mut shape, 0, p, &mut out);
    SymFuncOver::from_terms(out.into_iter().map(|s| (Partition::from_unsorted(s), C::one())))
}

fn vertical(shape: &mut Vec<usize>, row: usize, need: usize, out: &mut Vec<Vec<usize>>) {
    if need == 0 {
        out.push(shape.clone());
        return;
    }
    if row >= shape.len() || shape.len() - row < need {
        return;
    }
    // add a box to this row if the result stays a partition
    if row == 0 || shape[row] < shape[row - 1] {
        shape[row] += 1;
        vertical(shape, row + 1, need - 1, out);
        shape[row] -= 1;
    }
    vertical(shape, row + 1, need, out);
}

/// Product of `e`/`h` generators expanded in the Schur basis by iterated
/// Pieri steps. The empty word is the unit; index 0 is the unit.
pub fn from_generator_monomial<C: Scalar>(word: &[(GenBasis, usize)]) -> SymFuncOver<C> {
    let mut current: BTreeMap<Partition, C> = BTreeMap::new();
    current.insert(Partition::empty(), C::one());
    for &(basis, k) in word {
        if k == 0 {
            continue;
        }
        let mut next = SymFuncOver::<C>::zero();
        for (pi, c) in &current {
            let step: SymFuncOver<C> = match basis {
                GenBasis::E => pieri_e(k, pi),
                GenBasis::H => pieri_h(k, pi),
            };
            for (mu, d) in step.terms() {
                next.add_term(mu.clone(), c.clone() * d.clone());
            }
        }
        current = next.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    }
    SymFuncOver::from_terms(current)
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
    fn pieri_examples() {
        assert_eq!(
            pieri_h::<num_bigint::BigInt>(2, &part(&[2, 1])),
            s(&[4, 1]) + s(&[3, 2]) + s(&[3, 1, 1]) + s(&[2, 2, 1])
        );
        assert_eq!(pieri_h::<num_bigint::BigInt>(1, &part(&[])), s(&[1]));
        assert_eq!(pieri_e::<num_bigint::BigInt>(2, &part(&[1])), s(&[2, 1]) + s(&[1, 1, 1]));
    }

    #[test]
    fn generator_words() {
        assert_eq!(from_generator_monomial::<num_bigint::BigInt>(&[(GenBasis::E, 2)]), s(&[1, 1]));
        assert_eq!(
            from_generator_monomial::<num_bigint::BigInt>(&[(GenBasis::H, 2), (GenBasis::H, 1)]),
            s(&[3]) + s(&[2, 1])
        );
        assert_eq!(from_generator_monomial::<num_bigint::BigInt>(&[]), s(&[]));
        assert_eq!(
            from_generator_monomial::<num_bigint::BigInt>(&[(GenBasis::E, 2), (GenBasis::E, 1)]),
            s(&[2, 1]) + s(&[1, 1, 1])
        );
    }
}
