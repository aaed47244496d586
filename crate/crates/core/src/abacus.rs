//! Bead diagrams on an ℓ-runner abacus, ℓ-cores and ℓ-quotients.
//!
//! Positions are counted left to right along rows of `ell` points, starting
//! at 0. Position `p` sits in column `p % ell`, row `p / ell`. The diagram of
//! a partition has a bead at each first-column hook length, so position 0
//! (hook length 0) is always the first empty point.
//!
//! Reading a diagram back ignores any solid run of beads before the first
//! empty position: the remaining beads, counted from that empty position,
//! are the first-column hook lengths. Equivalently the occupied set is a set
//! of β-numbers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BeadDiagram {
    ell: usize,
    beads: BTreeSet<usize>,
}

impl BeadDiagram {
    pub fn new(ell: usize, beads: impl IntoIterator<Item = usize>) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidEll);
        }
        Ok(BeadDiagram {
            ell,
            beads: beads.into_iter().collect(),
        })
    }

    /// `𝔅_ℓ(λ)`: beads at the first-column hook lengths.
    pub fn from_partition(lambda: &Partition, ell: usize) -> Result<Self> {
        Self::new(ell, lambda.first_column_hooks())
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn beads(&self) -> &BTreeSet<usize> {
        &self.beads
    }

    pub fn is_occupied(&self, position: usize) -> bool {
        self.beads.contains(&position)
    }

    pub fn first_empty(&self) -> usize {
        (0..).find(|p| !self.beads.contains(p)).unwrap()
    }

    /// The partition encoded by the diagram, counting from the first empty
    /// position.
    pub fn partition(&self) -> Partition {
        let e = self.first_empty();
        let hooks: Vec<usize> = self
            .beads
            .iter()
            .filter(|&&p| p > e)
            .map(|&p| p - e)
            .collect();
        Partition::from_first_column_hooks(&hooks).expect("bead positions are distinct")
    }

    /// Number of beads on each runner.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.ell];
        for &p in &self.beads {
            counts[p % self.ell] += 1;
        }
        counts
    }

    /// Single-runner diagram formed by column `c` (0-based).
    pub fn column(&self, c: usize) -> BeadDiagram {
        BeadDiagram {
            ell: 1,
            beads: self
                .beads
                .iter()
                .filter(|&&p| p % self.ell == c)
                .map(|&p| p / self.ell)
                .collect(),
        }
    }

    /// All beads slid as far up their runners as they go.
    pub fn compacted(&self) -> BeadDiagram {
        let ell = self.ell;
        let beads = self
            .column_counts()
            .into_iter()
            .enumerate()
            .flat_map(|(c, k)| (0..k).map(move |r| r * ell + c))
            .collect();
        BeadDiagram { ell, beads }
    }

    /// Renders the occupied (`o`) and empty (`.`) points row by row.
    pub fn render(&self) -> String {
        let last = self.beads.iter().next_back().copied().unwrap_or(0);
        let rows = last / self.ell + 1;
        let mut out = String::new();
        for r in 0..rows {
            let line: Vec<&str> = (0..self.ell)
                .map(|c| {
                    if self.is_occupied(r * self.ell + c) {
                        "o"
                    } else {
                        "."
                    }
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// An ordered ℓ-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidEll);
        }
        Ok(MultiPartition { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    /// `Σ |λ^i|`.
    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `(λ¹, λ^ℓ, …, λ²)`: first component fixed, the rest reversed.
    pub fn star(&self) -> MultiPartition {
        let mut components = Vec::with_capacity(self.components.len());
        components.push(self.components[0].clone());
        components.extend(self.components[1..].iter().rev().cloned());
        MultiPartition { components }
    }
}

pub fn star_involution(q: &MultiPartition) -> MultiPartition {
    q.star()
}

pub fn abacus_from_partition(lambda: &Partition, ell: usize) -> Result<BeadDiagram> {
    BeadDiagram::from_partition(lambda, ell)
}

pub fn partition_from_abacus(diagram: &BeadDiagram) -> Partition {
    diagram.partition()
}

pub fn ell_core(lambda: &Partition, ell: usize) -> Result<Partition> {
    Ok(BeadDiagram::from_partition(lambda, ell)?
        .compacted()
        .partition())
}

pub fn has_trivial_core(lambda: &Partition, ell: usize) -> Result<bool> {
    Ok(ell_core(lambda, ell)?.is_empty())
}

/// Number of beads used when reading off the quotient.
///
/// A partition with non-trivial core is read from `𝔅_ℓ(λ)` as drawn (one bead
/// per row). A partition with trivial core is first padded with leading beads
/// to the least count `N ≥ length` with `N ≡ -1 (mod ℓ)`; this fixes the
/// charge so that the quotient map is a bijection onto ℓ-multipartitions.
fn quotient_bead_count(lambda: &Partition, ell: usize) -> Result<usize> {
    let len = lambda.len();
    if !has_trivial_core(lambda, ell)? {
        return Ok(len);
    }
    Ok((len..).find(|n| (n + 1) % ell == 0).unwrap())
}

pub fn ell_quotient(lambda: &Partition, ell: usize) -> Result<MultiPartition> {
    let n = quotient_bead_count(lambda, ell)?;
    let diagram = BeadDiagram::new(ell, lambda.beta_set(n)?.values().iter().copied())?;
    Ok(MultiPartition {
        components: (0..ell).map(|c| diagram.column(c).partition()).collect(),
    })
}

/// The bead diagram of the trivial-core partition with quotient `q`.
///
/// Each column carries the β-numbers of its component, padded with leading
/// beads so that the first `ℓ - 1` columns hold `m` beads and the last holds
/// `m - 1`, with `m` as small as possible.
pub fn quotient_diagram(q: &MultiPartition, ell: usize) -> Result<BeadDiagram> {
    if ell == 0 {
        return Err(Error::InvalidEll);
    }
    if q.ell() != ell {
        return Err(Error::LengthMismatch {
            expected: ell,
            found: q.ell(),
        });
    }
    let comps = q.components();
    let m = comps[..ell - 1]
        .iter()
        .map(Partition::len)
        .chain(std::iter::once(comps[ell - 1].len() + 1))
        .max()
        .unwrap();
    let mut beads = Vec::new();
    for (c, comp) in comps.iter().enumerate() {
        let count = if c + 1 < ell { m } else { m - 1 };
        let rows = comp.beta_set(count)?;
        beads.extend(rows.values().iter().map(|&r| r * ell + c));
    }
    BeadDiagram::new(ell, beads)
}

/// Inverse of [`ell_quotient`] on partitions with trivial ℓ-core.
pub fn from_quotient(q: &MultiPartition, ell: usize) -> Result<Partition> {
    Ok(quotient_diagram(q, ell)?.partition())
}

/// All ℓ-multipartitions of `n`: the first component runs through sizes
/// `n, n-1, …, 0`, each in reverse lexicographic order, recursively.
pub fn multipartitions_of(n: usize, ell: usize) -> Result<Vec<MultiPartition>> {
    if ell == 0 {
        return Err(Error::InvalidEll);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(ell);
    fill(n, ell, &mut current, &mut out);
    Ok(out)
}

fn fill(rest: usize, slots: usize, current: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
    if slots == 1 {
        for p in partitions_of(rest) {
            current.push(p);
            out.push(MultiPartition {
                components: current.clone(),
            });
            current.pop();
        }
        return;
    }
    for k in (0..=rest).rev() {
        for p in partitions_of(k) {
            current.push(p);
            fill(rest - k, slots - 1, current, out);
            current.pop();
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// Parses `"3,2|1,1|2"`; `"-"` marks an empty component.
    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(components)
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn partition(max: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=max, 0..=max).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    fn multipartition() -> impl Strategy<Value = (MultiPartition, usize)> {
        (1usize..5).prop_flat_map(|ell| {
            prop::collection::vec(partition(4), ell)
                .prop_map(move |cs| (MultiPartition::new(cs).unwrap(), ell))
        })
    }

    #[test]
    fn bijection_up_to_five() {
        for ell in 1..=4 {
            for n in 0..=5 {
                let multis = multipartitions_of(n, ell).unwrap();
                let mut images = BTreeSet::new();
                for q in &multis {
                    let lambda = from_quotient(q, ell).unwrap();
                    assert_eq!(lambda.size(), n * ell);
                    assert!(has_trivial_core(&lambda, ell).unwrap());
                    assert_eq!(&ell_quotient(&lambda, ell).unwrap(), q);
                    images.insert(lambda);
                }
                let trivial: Vec<Partition> = partitions_of(n * ell)
                    .into_iter()
                    .filter(|l| has_trivial_core(l, ell).unwrap())
                    .collect();
                assert_eq!(images.len(), multis.len());
                assert_eq!(trivial.len(), multis.len(), "n={n} ell={ell}");
                assert!(trivial.iter().all(|l| images.contains(l)));
            }
        }
    }

    proptest! {
        #[test]
        fn quotient_of_composition((q, ell) in multipartition()) {
            let lambda = from_quotient(&q, ell).unwrap();
            prop_assert_eq!(lambda.size(), ell * q.weight());
            prop_assert!(has_trivial_core(&lambda, ell).unwrap());
            prop_assert_eq!(ell_quotient(&lambda, ell).unwrap(), q.clone());
            prop_assert_eq!(q.star().star(), q);
        }

        #[test]
        fn size_splits_into_core_and_weight(lambda in partition(7), ell in 1usize..6) {
            let core = ell_core(&lambda, ell).unwrap();
            let quo = ell_quotient(&lambda, ell).unwrap();
            prop_assert_eq!(lambda.size(), core.size() + ell * quo.weight());
            prop_assert!(has_trivial_core(&core, ell).unwrap() == core.is_empty());
            prop_assert_eq!(ell_core(&core, ell).unwrap(), core);
        }

        #[test]
        fn diagram_roundtrip(lambda in partition(7), ell in 1usize..6) {
            let d = abacus_from_partition(&lambda, ell).unwrap();
            prop_assert_eq!(partition_from_abacus(&d), lambda);
        }
    }
}
