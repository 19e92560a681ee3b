//! Integer partitions: containment, conjugation, unions and enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without zeros.
///
/// The total order sorts by weight first and then in reverse lexicographic
/// order within a weight, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping zero parts.
    ///
    /// Returns an error if the nonzero parts are not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {:?} are not a weakly decreasing sequence of positive integers",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The single-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::rectangle(1, n)
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::rectangle(n, 1)
    }

    /// `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// True iff the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| s >= o)
    }

    /// Componentwise maximum: the smallest partition containing both.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i).max(other.part(i))).collect();
        Partition { parts }
    }

    /// Componentwise sum of parts.
    pub fn add_rows(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// The maximal rectangles inside the diagram: for every row `i` whose
    /// part strictly exceeds the next one, `λ_i` repeated `i` times.
    pub fn rectangle_decomposition(&self) -> Result<Vec<Partition>> {
        if self.is_empty() {
            return Err(Error::NoRectangles);
        }
        Ok((0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Partition::rectangle(i + 1, self.part(i)))
            .collect())
    }

    /// Number of boxes `(i, j)` with `i < rows` lying in the diagram,
    /// i.e. the partition truncated to its first `rows` rows.
    pub fn truncate_rows(&self, rows: usize) -> Partition {
        Partition {
            parts: self.parts.iter().copied().take(rows).collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [parts], got {:?}", s)))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill(rest - p, p, current, out);
        current.pop();
    }
}

/// Partitions of `n` containing `lambda`, in reverse lexicographic order.
pub fn superpartitions_of(lambda: &Partition, n: usize) -> Vec<Partition> {
    if lambda.weight() > n {
        return Vec::new();
    }
    partitions_of(n)
        .into_iter()
        .filter(|p| p.contains(lambda))
        .collect()
}

/// All partitions of weight at most `n`, in the canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions of `n` with at most `rows` rows and first row at most `cols`.
pub fn partitions_in_box(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= rows && p.width() <= cols)
        .collect()
}

/// Convenience constructor for literal partitions in code and tests.
///
/// Panics on malformed input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("malformed partition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[]).conjugate(), part(&[]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
    }

    #[test]
    fn contains_examples() {
        assert!(part(&[2, 2]).contains(&part(&[2, 1])));
        assert!(!part(&[3]).contains(&part(&[1, 1])));
        // hook (m, 1^{n-1}) contains (m) and (1^n)
        let hook = part(&[4, 1, 1]);
        assert!(hook.contains(&Partition::row(4)));
        assert!(hook.contains(&Partition::column(3)));
    }

    #[test]
    fn union_examples() {
        assert_eq!(part(&[2, 1]).union(&part(&[3])), part(&[3, 1]));
        assert_eq!(part(&[1, 1]).union(&part(&[2])), part(&[2, 1]));
        assert_eq!(part(&[2, 2]).union(&part(&[])), part(&[2, 2]));
    }

    #[test]
    fn union_characterizes_common_superpartitions() {
        let small = partitions_up_to(3);
        let big = partitions_up_to(6);
        for l in &small {
            for m in &small {
                let u = l.union(m);
                for p in &big {
                    assert_eq!(p.contains(&u), p.contains(l) && p.contains(m));
                }
            }
        }
    }

    #[test]
    fn rectangle_decomposition_examples() {
        assert_eq!(
            part(&[2, 1]).rectangle_decomposition().unwrap(),
            vec![part(&[2]), part(&[1, 1])]
        );
        assert_eq!(part(&[3, 3]).rectangle_decomposition().unwrap(), vec![part(&[3, 3])]);
        assert_eq!(
            part(&[3, 2, 2, 1]).rectangle_decomposition().unwrap(),
            vec![part(&[3]), part(&[2, 2, 2]), part(&[1, 1, 1, 1])]
        );
        assert_eq!(part(&[]).rectangle_decomposition(), Err(Error::NoRectangles));
    }

    #[test]
    fn rectangles_union_back() {
        for p in partitions_up_to(8).into_iter().skip(1) {
            let u = p
                .rectangle_decomposition()
                .unwrap()
                .iter()
                .fold(Partition::empty(), |acc, r| acc.union(r));
            assert_eq!(u, p);
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(
            partitions_of(4),
            vec![part(&[4]), part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]
        );
        assert_eq!(
            superpartitions_of(&part(&[2, 1]), 4),
            vec![part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]
        );
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = partitions_up_to(8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), part(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2 , 2 ] ".parse::<Partition>().unwrap(), part(&[2, 2]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert_eq!(part(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }
}
