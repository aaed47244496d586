//! Integer partitions, Young diagram cells and hook lengths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction, so the empty sequence is the
/// unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// β-numbers `d_i = λ_i + n - i` of a partition padded to `n` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    values: Vec<usize>,
}

impl BetaSet {
    /// Values in strictly decreasing order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        // decreasing order, so search on the reversed comparison
        self.values.binary_search_by(|v| x.cmp(v)).is_ok()
    }

    /// `d_i` for a 1-based index `i`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }
}

impl Partition {
    /// Validates raw user input. Zeros are stripped; negative values and
    /// ascents are rejected.
    pub fn from_parts(raw: &[i64]) -> Result<Self> {
        if let Some(&v) = raw.iter().find(|&&v| v < 0) {
            return Err(Error::NegativePart(v));
        }
        if let Some(w) = raw.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Partition {
            parts: raw
                .iter()
                .filter(|&&v| v > 0)
                .map(|&v| v as usize)
                .collect(),
        })
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    /// Zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                prev: w[0] as i64,
                next: w[1] as i64,
            });
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` for a 1-based row index; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of cells in column `j` (1-based).
    pub fn column_length(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Cells in row-major order, each row read left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Hook length `λ_i - j + L - i + 1`, where `L` is the full length of
    /// column `j`.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::CellOutOfDiagram {
                row: c.row,
                col: c.col,
            });
        }
        Ok(self.hook(c))
    }

    pub(crate) fn hook(&self, c: Cell) -> usize {
        self.part(c.row) + self.column_length(c.col) + 1 - c.col - c.row
    }

    /// Hook lengths of the whole diagram, row-major.
    pub fn hooks(&self) -> Vec<usize> {
        self.cells().map(|c| self.hook(c)).collect()
    }

    /// `h(i,1)` for every row; strictly decreasing.
    pub fn first_column_hooks(&self) -> Vec<usize> {
        (1..=self.len())
            .map(|i| self.hook(Cell::new(i, 1)))
            .collect()
    }

    /// β-numbers after padding to `n` parts.
    pub fn beta_set(&self, n: usize) -> Result<BetaSet> {
        if n < self.len() {
            return Err(Error::PadTooShort { len: self.len(), n });
        }
        Ok(BetaSet {
            values: (1..=n).map(|i| self.part(i) + n - i).collect(),
        })
    }

    /// `{ j : 1 <= j <= d_i, d_i - j ∉ P }` with `P` the β-set for `n = |λ|`.
    /// Returned in decreasing order, i.e. matching the row's cells read left
    /// to right.
    pub fn row_hook_set(&self, i: usize) -> Result<Vec<usize>> {
        if i == 0 || i > self.len() {
            return Err(Error::RowOutOfRange {
                row: i,
                len: self.len(),
            });
        }
        let beta = self.beta_set(self.size())?;
        Ok(gaps_below(&beta, i))
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width).map(|j| self.column_length(j)).collect(),
        }
    }

    /// Reads a partition back from its first-column hook lengths (any order).
    pub fn from_first_column_hooks(hooks: &[usize]) -> Result<Partition> {
        let mut h = hooks.to_vec();
        h.sort_unstable_by(|a, b| b.cmp(a));
        if h.windows(2).any(|w| w[0] == w[1]) || h.contains(&0) {
            return Err(Error::parse(
                &format!("{hooks:?}"),
                "first column hooks must be distinct and positive",
            ));
        }
        let len = h.len();
        Ok(Partition::from_sorted(
            h.iter()
                .enumerate()
                .map(|(i, &x)| x + i + 1 - len)
                .collect(),
        ))
    }
}

/// `{ j : 1 <= j <= d_i, d_i - j ∉ P }` in decreasing order of `j`.
pub(crate) fn gaps_below(beta: &BetaSet, i: usize) -> Vec<usize> {
    let d = beta.get(i);
    (1..=d).rev().filter(|&j| !beta.contains(d - j)).collect()
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for k in (1..=rest.min(max)).rev() {
        current.push(k);
        fill(rest - k, k, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2"`; `"-"` or an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let raw = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::parse(s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_parts(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(Partition::from_parts(&[3, 2, 0, 0]).unwrap(), p(&[3, 2]));
        assert!(Partition::from_parts(&[]).unwrap().is_empty());
        assert_eq!(
            Partition::from_parts(&[2, 3]),
            Err(Error::NotWeaklyDecreasing { prev: 2, next: 3 })
        );
        assert_eq!(
            Partition::from_parts(&[2, -1]),
            Err(Error::NegativePart(-1))
        );
    }

    #[test]
    fn hook_lengths_match_diagrams() {
        assert_eq!(p(&[3, 2, 1, 1]).hook_length(Cell::new(1, 1)).unwrap(), 6);
        assert_eq!(p(&[3, 1]).hook_length(Cell::new(1, 1)).unwrap(), 4);
        assert_eq!(p(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(p(&[3, 2, 1, 1]).hooks(), vec![6, 3, 1, 4, 1, 2, 1]);
        assert_eq!(p(&[2, 2]).hooks(), vec![3, 2, 2, 1]);
        assert_eq!(
            p(&[3, 1]).hook_length(Cell::new(2, 2)),
            Err(Error::CellOutOfDiagram { row: 2, col: 2 })
        );
    }

    #[test]
    fn first_column() {
        assert_eq!(p(&[3, 2, 1, 1]).first_column_hooks(), vec![6, 4, 2, 1]);
        // by hand: h(1,1) = 4-1+3-1+1, h(2,1) = 2-1+3-2+1, h(3,1) = 2-1+3-3+1
        assert_eq!(p(&[4, 2, 2]).first_column_hooks(), vec![6, 3, 2]);
        assert!(Partition::empty().first_column_hooks().is_empty());
        assert_eq!(
            Partition::from_first_column_hooks(&[2, 3, 6]).unwrap(),
            p(&[4, 2, 2])
        );
    }

    #[test]
    fn beta_sets() {
        assert_eq!(p(&[3, 2]).beta_set(5).unwrap().values(), &[7, 5, 2, 1, 0]);
        assert_eq!(Partition::empty().beta_set(3).unwrap().values(), &[2, 1, 0]);
        assert_eq!(
            p(&[1, 1, 1, 1]).beta_set(4).unwrap().values(),
            &[4, 3, 2, 1]
        );
        assert_eq!(
            p(&[1, 1]).beta_set(1),
            Err(Error::PadTooShort { len: 2, n: 1 })
        );
    }

    #[test]
    fn row_hooks() {
        assert_eq!(p(&[3, 2]).row_hook_set(1).unwrap(), vec![4, 3, 1]);
        assert_eq!(p(&[3, 2]).row_hook_set(2).unwrap(), vec![2, 1]);
        assert_eq!(p(&[1]).row_hook_set(1).unwrap(), vec![1]);
        assert_eq!(
            p(&[1]).row_hook_set(2),
            Err(Error::RowOutOfRange { row: 2, len: 1 })
        );
    }

    #[test]
    fn transposes() {
        assert_eq!(p(&[3, 2]).transpose(), p(&[2, 2, 1]));
        assert_eq!(p(&[4]).transpose(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    /// Brute force: every composition of `n`, sorted, deduplicated.
    fn brute_partition_count(n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for k in 0..n - 1 {
                if mask & (1 << k) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            seen.insert(parts);
        }
        seen.len()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(brute_partition_count(6), 11);
        assert_eq!(partitions_of(6).len(), 11);
        for n in 0..=10 {
            assert_eq!(partitions_of(n).len(), brute_partition_count(n));
        }
        let four: Vec<String> = partitions_of(4).iter().map(|q| q.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn text_form() {
        assert_eq!("3,2".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(
            "1,2".parse::<Partition>().unwrap_err().name(),
            "NotWeaklyDecreasing"
        );
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn row_hooks_are_hook_sets(lambda: &Partition) -> bool {
        (1..=lambda.len()).all(|i| {
            let set = lambda.row_hook_set(i).unwrap();
            let hooks: Vec<usize> = (1..=lambda.part(i))
                .map(|j| lambda.hook(Cell::new(i, j)))
                .collect();
            set.len() == lambda.part(i) && set == hooks
        })
    }

    fn columns_share_shifted_beta(lambda: &Partition) -> bool {
        let beta = lambda.beta_set(lambda.size()).unwrap();
        (1..=lambda.part(1)).all(|j| {
            let shifted: Vec<usize> = (1..=lambda.column_length(j))
                .map(|i| beta.get(i) - lambda.hook(Cell::new(i, j)))
                .collect();
            shifted.windows(2).all(|w| w[0] == w[1])
        })
    }

    #[test]
    fn hook_identities_up_to_twelve() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                assert!(row_hooks_are_hook_sets(&lambda), "{lambda}");
                assert!(columns_share_shifted_beta(&lambda), "{lambda}");
            }
        }
    }

    fn partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..9, 0..9).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::from_sorted(v)
        })
    }

    proptest! {
        #[test]
        fn hook_identities(lambda in partition()) {
            prop_assert!(row_hooks_are_hook_sets(&lambda));
            prop_assert!(columns_share_shifted_beta(&lambda));
        }

        #[test]
        fn transpose_is_an_involution(lambda in partition()) {
            let t = lambda.transpose();
            prop_assert_eq!(t.size(), lambda.size());
            prop_assert_eq!(t.transpose(), lambda.clone());
            let mut a = lambda.hooks();
            let mut b = t.hooks();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn first_column_hooks_roundtrip(lambda in partition()) {
            let back = Partition::from_first_column_hooks(&lambda.first_column_hooks()).unwrap();
            prop_assert_eq!(back, lambda);
        }

        #[test]
        fn text_roundtrip(lambda in partition()) {
            prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
        }
    }
}
