//! Hilbert–Poincaré series: the closed product formula, the hook length
//! dimension, and a rank computation straight from a presentation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::Partition;
use crate::poly::{monomials_of_weight, GenSym, Monomial};
use crate::presentation::{negate_grading, GradedPresentation, Orientation};

/// Degrees checked past the end of the formula series.
pub const DEFAULT_SLACK: usize = 2;

/// `Σ c_i q^i` with trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    coefficients: Vec<u64>,
}

impl HilbertSeries {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        HilbertSeries { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `c_d`, zero past the end.
    pub fn coefficient(&self, d: usize) -> u64 {
        self.coefficients.get(d).copied().unwrap_or(0)
    }

    /// Highest degree with a non-zero coefficient.
    pub fn top_degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({ "coefficients": self.coefficients, "total": self.total() })
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| {
                let q = match d {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{d}"),
                };
                match (c, d) {
                    (_, 0) => c.to_string(),
                    (1, _) => q,
                    _ => format!("{c}*{q}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_q_pow(k: usize) -> Vec<i128> {
    let mut v = vec![0; k + 1];
    v[0] = 1;
    v[k] -= 1;
    v
}

/// `∏_{i=1}^n (1 - q^i) / ∏_{cells} (1 - q^{h})`, divided exactly.
pub fn hilbert_series_formula(lambda: &Partition) -> Result<HilbertSeries> {
    let n = lambda.size();
    let num = (1..=n).fold(vec![1i128], |acc, i| poly_mul(&acc, &one_minus_q_pow(i)));
    let den = lambda
        .hooks()
        .into_iter()
        .fold(vec![1i128], |acc, h| poly_mul(&acc, &one_minus_q_pow(h)));
    if den.len() > num.len() {
        return Err(Error::InexactDivision(
            "denominator has larger degree".into(),
        ));
    }
    // den(0) = 1, so the quotient is the truncated power series num / den
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![0i128; qlen];
    for k in 0..qlen {
        let mut c = num[k];
        for j in 1..den.len().min(k + 1) {
            c -= den[j] * quot[k - j];
        }
        quot[k] = c;
    }
    if poly_mul(&quot, &den) != num {
        return Err(Error::InexactDivision(format!(
            "hook product of {lambda} does not divide the numerator"
        )));
    }
    let coefficients = quot
        .into_iter()
        .map(|c| {
            u64::try_from(c).map_err(|_| {
                Error::InexactDivision(format!("negative coefficient {c} for {lambda}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertSeries::new(coefficients))
}

/// `n! / ∏ h(i,j)`.
pub fn dimension_hook_formula(lambda: &Partition) -> Result<BigUint> {
    let fact: BigUint = (1..=lambda.size()).map(BigUint::from).product();
    let hooks: BigUint = lambda.hooks().into_iter().map(BigUint::from).product();
    if &fact % &hooks != BigUint::from(0u32) {
        return Err(Error::NonIntegral);
    }
    Ok(fact / hooks)
}

fn positive_generators(p: &GradedPresentation) -> Result<Vec<GenSym>> {
    p.generators()
        .iter()
        .map(|g| {
            if g.degree <= 0 || g.degree as usize != g.sym.degree {
                Err(Error::NegativeDegreeGenerator(g.sym.name(p.prefix())))
            } else {
                Ok(g.sym)
            }
        })
        .collect()
}

fn relation_degrees(p: &GradedPresentation) -> Result<Vec<usize>> {
    p.relations()
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, r)| {
            p.relation_degree(k)
                .map(|d| d as usize)
                .ok_or_else(|| Error::InhomogeneousRelation(r.fmt_with_prefix(p.prefix())))
        })
        .collect()
}

/// `dim A_d` = number of monomials of degree `d` minus the rank of all
/// products `m·r` landing in degree `d`.
fn dimension_in_degree(p: &GradedPresentation, syms: &[GenSym], degs: &[usize], d: usize) -> u64 {
    let basis = monomials_of_weight(syms, d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut span = Echelon::new();
    let rels = p.relations().iter().filter(|r| !r.is_zero());
    for (r, &s) in rels.zip(degs) {
        if s > d {
            continue;
        }
        for m in monomials_of_weight(syms, d - s) {
            if span.rank() == basis.len() {
                break;
            }
            let row: Vec<(usize, BigRational)> = r
                .terms()
                .map(|(t, c)| (index[&t.mul(&m)], c.clone()))
                .collect();
            span.insert(row);
        }
    }
    (basis.len() - span.rank()) as u64
}

/// Graded dimensions in degrees `0..=max_degree`, computed by linear
/// algebra from the presentation alone.
pub fn graded_dimensions_from_presentation(
    p: &GradedPresentation,
    max_degree: usize,
) -> Result<HilbertSeries> {
    let syms = positive_generators(p)?;
    let degs = relation_degrees(p)?;
    let dims: Vec<u64> = (0..=max_degree)
        .into_par_iter()
        .map(|d| dimension_in_degree(p, &syms, &degs, d))
        .collect();
    Ok(HilbertSeries::new(dims))
}

/// Graded dimensions with the degree bound found automatically: once as many
/// consecutive degrees as the largest generator degree vanish, every higher
/// degree vanishes too. Gives up with `NotFiniteDimensional` past a cap.
pub fn graded_dimensions(p: &GradedPresentation) -> Result<HilbertSeries> {
    let syms = positive_generators(p)?;
    let degs = relation_degrees(p)?;
    let window = syms.iter().map(|g| g.degree).max().unwrap_or(1);
    let cap = 4 * degs.iter().sum::<usize>() + 2 * window + 8;
    let mut dims = Vec::new();
    let mut zeros = 0;
    for d in 0..=cap {
        let dim = dimension_in_degree(p, &syms, &degs, d);
        dims.push(dim);
        zeros = if dim == 0 { zeros + 1 } else { 0 };
        if zeros >= window {
            return Ok(HilbertSeries::new(dims));
        }
    }
    Err(Error::NotFiniteDimensional(cap))
}

/// Total dimension of the ring, for either orientation.
pub fn dimension(p: &GradedPresentation) -> Result<u64> {
    let positive = match p.orientation() {
        Orientation::Positive => p.clone(),
        Orientation::Negative => negate_grading(p),
    };
    Ok(graded_dimensions(&positive)?.total())
}

/// Converts a hook-formula dimension for comparisons with [`HilbertSeries::total`].
pub fn hook_dimension_u64(lambda: &Partition) -> Result<u64> {
    dimension_hook_formula(lambda)?
        .to_u64()
        .ok_or(Error::NonIntegral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::{ell_quotient, MultiPartition};
    use crate::partition::partitions_of;
    use crate::presentation::{direct_presentation, simplify, wreath_presentation};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn series(v: &[u64]) -> HilbertSeries {
        HilbertSeries::new(v.to_vec())
    }

    #[test]
    fn formula_examples() {
        assert_eq!(
            hilbert_series_formula(&p("3,1")).unwrap(),
            series(&[1, 1, 1])
        );
        assert_eq!(
            hilbert_series_formula(&p("3,1")).unwrap().to_string(),
            "1 + q + q^2"
        );
        assert_eq!(
            hilbert_series_formula(&p("3,2")).unwrap(),
            series(&[1, 1, 1, 1, 1])
        );
        for n in 0..=8 {
            assert_eq!(
                hilbert_series_formula(&Partition::new(vec![n]).unwrap()).unwrap(),
                series(&[1])
            );
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(
            dimension_hook_formula(&p("3,2")).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            dimension_hook_formula(&p("2,2")).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            dimension_hook_formula(&p("4")).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            dimension_hook_formula(&Partition::empty()).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn oracle_examples() {
        let d = graded_dimensions_from_presentation(&direct_presentation(&p("3,2")), 7).unwrap();
        assert_eq!(d, series(&[1, 1, 1, 1, 1]));
        let quo = ell_quotient(&p("2,2"), 2).unwrap();
        let w = wreath_presentation(&quo, 2).unwrap();
        assert_eq!(graded_dimensions(&w).unwrap(), series(&[1, 0, 1]));
        let empty = direct_presentation(&Partition::empty());
        assert_eq!(
            graded_dimensions_from_presentation(&empty, 3).unwrap(),
            series(&[1])
        );
    }

    #[test]
    fn rejects_negative_generators() {
        let m = negate_grading(&direct_presentation(&p("2,1")));
        assert!(matches!(
            graded_dimensions(&m),
            Err(Error::NegativeDegreeGenerator(_))
        ));
        assert_eq!(dimension(&m).unwrap(), 2);
    }

    #[test]
    fn formula_matches_oracle_to_five() {
        for n in 0..=5 {
            for lambda in partitions_of(n) {
                let formula = hilbert_series_formula(&lambda).unwrap();
                let bound = formula.top_degree().unwrap() + DEFAULT_SLACK;
                let raw = direct_presentation(&lambda);
                assert_eq!(
                    graded_dimensions_from_presentation(&raw, bound).unwrap(),
                    formula
                );
                assert_eq!(graded_dimensions(&simplify(&raw)).unwrap(), formula);
                assert_eq!(formula.total(), hook_dimension_u64(&lambda).unwrap());
            }
        }
    }

    #[test]
    fn wreath_dimensions_vanish_off_multiples() {
        let q: MultiPartition = "1,1|-|1".parse().unwrap();
        let d = graded_dimensions(&wreath_presentation(&q, 3).unwrap()).unwrap();
        assert_eq!(d, series(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(series(&[1, 0, 3]).to_string(), "1 + 3*q^2");
        assert_eq!(series(&[]).to_string(), "0");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::partition::partitions_of;

    #[test]
    fn squares_of_dimensions_sum_to_factorial() {
        for n in 0..=8 {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            let sum: BigUint = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = dimension_hook_formula(l).unwrap();
                    &d * &d
                })
                .sum();
            assert_eq!(sum, fact, "n={n}");
        }
    }

    #[test]
    fn series_properties_up_to_twelve() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                let s = hilbert_series_formula(&lambda).unwrap();
                assert_eq!(s.coefficient(0), 1);
                assert_eq!(s.total(), hook_dimension_u64(&lambda).unwrap(), "{lambda}");
                assert_eq!(hilbert_series_formula(&lambda.transpose()).unwrap(), s);
                let c = s.coefficients();
                assert!(
                    c.iter().eq(c.iter().rev()),
                    "{lambda} series is palindromic"
                );
            }
        }
    }
}
