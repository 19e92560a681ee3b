//! Littlewood-Richardson coefficients by skew-tableau enumeration.
//!
//! The product `s_μ s_ν` is built by adding `ν_1` boxes labelled 1, then
//! `ν_2` boxes labelled 2, and so on, each batch a horizontal strip. A
//! filling counts iff its reverse reading word is a lattice word; for
//! strips added in label order this is the row condition
//! `#i in rows ≤ r ≤ #(i−1) in rows < r`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::Partition;

type ProductTable = HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>;

fn cache() -> &'static RwLock<ProductTable> {
    static CACHE: OnceLock<RwLock<ProductTable>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `s_μ s_ν = Σ c^π_{μν} s_π`, as `(π, c)` pairs in canonical order.
///
/// Results are memoized process-wide; lookups take a read lock and inserts
/// a write lock, so concurrent callers see identical tables.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    // c^π_{μν} is symmetric; enumerate with the shorter partition as labels.
    let key = if (nu.len(), nu) <= (mu.len(), mu) {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(hit) = cache().read().expect("LR cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute(&key.0, &key.1));
    let mut table = cache().write().expect("LR cache poisoned");
    Arc::clone(table.entry(key).or_insert(computed))
}

/// A single coefficient `c^π_{μν}`.
pub fn lr_coefficient(pi: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if pi.weight() != mu.weight() + nu.weight() || !pi.contains(mu) || !pi.contains(nu) {
        return 0;
    }
    lr_product(mu, nu)
        .iter()
        .find(|(p, _)| p == pi)
        .map_or(0, |(_, c)| *c)
}

struct Filler<'a> {
    nu: &'a [usize],
    shape: Vec<usize>,
    // counts[row][label-1]
    counts: Vec<Vec<usize>>,
    out: BTreeMap<Vec<usize>, u64>,
}

fn compute(base: &Partition, labels: &Partition) -> Vec<(Partition, u64)> {
    let rows = base.len() + labels.len();
    let mut filler = Filler {
        nu: labels.parts(),
        shape: {
            let mut s = base.parts().to_vec();
            s.resize(rows, 0);
            s
        },
        counts: vec![vec![0; labels.len()]; rows],
        out: BTreeMap::new(),
    };
    filler.label(1);
    let mut out: Vec<(Partition, u64)> = filler
        .out
        .into_iter()
        .map(|(s, c)| (Partition::from_unsorted(s), c))
        .collect();
    out.sort();
    out
}

impl Filler<'_> {
    fn label(&mut self, i: usize) {
        if i > self.nu.len() {
            *self.out.entry(self.shape.clone()).or_insert(0) += 1;
            return;
        }
        let old = self.shape.clone();
        self.strip(i, 0, self.nu[i - 1], 0, 0, &old);
    }

    /// Places the remaining `need` boxes labelled `i` in rows `row..`.
    /// `cum` counts label `i` placed in earlier rows, `prev_above` counts
    /// label `i-1` in rows strictly above `row`.
    fn strip(&mut self, i: usize, row: usize, need: usize, cum: usize, prev_above: usize, old: &[usize]) {
        if need == 0 {
            self.label(i + 1);
            return;
        }
        if row >= old.len() {
            return;
        }
        if row > 0 && old[row - 1] == 0 {
            // this row and every row below it cannot receive boxes
            return;
        }
        let room = if row == 0 { need } else { old[row - 1] - old[row] };
        let lattice_room = if i == 1 { need } else { prev_above.saturating_sub(cum) };
        let max_k = need.min(room).min(lattice_room);
        let prev_here = if i >= 2 { self.counts[row][i - 2] } else { 0 };
        for k in (0..=max_k).rev() {
            self.shape[row] += k;
            self.counts[row][i - 1] += k;
            self.strip(i, row + 1, need - k, cum + k, prev_above + prev_here, old);
            self.shape[row] -= k;
            self.counts[row][i - 1] -= k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn prod(mu: &[usize], nu: &[usize]) -> Vec<(Partition, u64)> {
        lr_product(&part(mu), &part(nu)).as_ref().clone()
    }

    #[test]
    fn small_products() {
        assert_eq!(prod(&[1], &[1]), vec![(part(&[2]), 1), (part(&[1, 1]), 1)]);
        assert_eq!(prod(&[2], &[1, 1]), vec![(part(&[3, 1]), 1), (part(&[2, 1, 1]), 1)]);
        assert_eq!(
            prod(&[1, 1], &[1, 1]),
            vec![(part(&[2, 2]), 1), (part(&[2, 1, 1]), 1), (part(&[1, 1, 1, 1]), 1)]
        );
        assert_eq!(prod(&[], &[2, 1]), vec![(part(&[2, 1]), 1)]);
    }

    #[test]
    fn classic_coefficient_two() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])), 2);
    }

    #[test]
    fn symmetric_in_factors() {
        assert_eq!(prod(&[3, 1], &[2, 2, 1]), prod(&[2, 2, 1], &[3, 1]));
    }
}
