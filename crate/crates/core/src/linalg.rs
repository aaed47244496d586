//! Exact rank over ℚ by fraction-free elimination.
//!
//! Rows are sparse. Each incoming row is cleared of denominators and then
//! reduced against the stored pivots with integer cross-multiplication,
//! dividing out the row content after every step so entries stay small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Row = BTreeMap<usize, BigInt>;

/// Incremental row echelon form over ℤ.
#[derive(Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns `true` when it was independent of the rows
    /// inserted so far.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        match self.reduce(integer_row(row)) {
            Some(r) => {
                let lead = *r.keys().next().unwrap();
                self.pivots.insert(lead, r);
                true
            }
            None => false,
        }
    }

    /// Whether the row lies in the span of the inserted rows.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        self.reduce(integer_row(row)).is_none()
    }

    fn reduce(&self, mut row: Row) -> Option<Row> {
        loop {
            let (&lead, _) = row.iter().next()?;
            let Some(pivot) = self.pivots.get(&lead) else {
                return Some(row);
            };
            let a = pivot[&lead].clone();
            let b = row[&lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            // row <- a*row - b*pivot
            let mut next = Row::new();
            for (k, v) in &row {
                next.insert(*k, v * &a);
            }
            for (k, v) in pivot {
                let e = next.entry(*k).or_insert_with(BigInt::zero);
                *e -= v * &b;
            }
            next.retain(|_, v| !v.is_zero());
            row = primitive(next);
        }
    }
}

fn integer_row(row: impl IntoIterator<Item = (usize, BigRational)>) -> Row {
    let entries: Vec<(usize, BigRational)> =
        row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    let lcm = entries
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out = Row::new();
    for (k, v) in entries {
        let scaled = (v * BigRational::from_integer(lcm.clone())).to_integer();
        let e = out.entry(k).or_insert_with(BigInt::zero);
        *e += scaled;
    }
    out.retain(|_, v| !v.is_zero());
    primitive(out)
}

fn primitive(mut row: Row) -> Row {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    if let Some(first) = row.values().next() {
        if first.is_negative() {
            for v in row.values_mut() {
                *v = -v.clone();
            }
        }
    }
    row
}

/// Rank of a list of sparse rational rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<(usize, BigRational)>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
