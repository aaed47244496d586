//! Graded presentations of `A(λ)⁺` read straight off the Young diagram, their
//! wreath analogues, and a deterministic simplifier.
//!
//! Generators are the cells of `D_λ`, named `f_{i,h}` by row and hook length.
//! The relation `r_s` is the sum over transversal monomials of degree `s`
//! (cells sharing no row and no column), each weighted by a Vandermonde
//! product in the shifted β-numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::abacus::{from_quotient, MultiPartition};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::{Cell, Partition};
use crate::poly::{format_rational, monomials_of_weight, parse_rational, GenSym, MPoly, Monomial};

/// The irreducible a presentation belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Partition(Partition),
    Multi(MultiPartition),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Multi(q) => write!(f, "{q}"),
        }
    }
}

impl Label {
    /// Partitions never contain `|`, multipartitions always do unless ℓ = 1.
    pub fn parse(s: &str, ell: usize) -> Result<Label> {
        if s.contains('|') || ell > 1 {
            Ok(Label::Multi(s.parse()?))
        } else {
            Ok(Label::Partition(s.parse()?))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Orientation::Positive => "positive",
            Orientation::Negative => "negative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub sym: GenSym,
    pub degree: i64,
}

/// A commutative graded ring `ℂ[generators] / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    generators: Vec<Generator>,
    relations: Vec<MPoly>,
    label: Label,
    ell: usize,
    orientation: Orientation,
    simplified: bool,
    prefix: char,
}

impl GradedPresentation {
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_syms(&self) -> Vec<GenSym> {
        self.generators.iter().map(|g| g.sym).collect()
    }

    pub fn relations(&self) -> &[MPoly] {
        &self.relations
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_simplified(&self) -> bool {
        self.simplified
    }

    pub fn prefix(&self) -> char {
        self.prefix
    }

    /// Same presentation with generators printed as `{prefix}i,h`.
    pub fn with_prefix(&self, prefix: char) -> GradedPresentation {
        GradedPresentation {
            prefix,
            ..self.clone()
        }
    }

    /// Degree of relation `k` in the stored grading; `None` for a zero or
    /// inhomogeneous relation.
    pub fn relation_degree(&self, k: usize) -> Option<i64> {
        homogeneous_degree(&self.relations[k]).map(|d| d as i64 * self.orientation.sign())
    }

    /// True when no generators remain, i.e. the ring is the base field or 0.
    pub fn is_base_field(&self) -> bool {
        self.generators.is_empty() && self.relations.iter().all(|r| !is_unit(r))
    }

    pub fn to_json(&self) -> Value {
        let generators: Vec<Value> = self
            .generators
            .iter()
            .map(|g| {
                json!({
                    "name": g.sym.name(self.prefix),
                    "row": g.sym.row,
                    "hook": g.sym.degree,
                    "degree": g.degree,
                })
            })
            .collect();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                Value::Array(
                    r.terms()
                        .map(|(m, c)| {
                            let names: Vec<String> = m
                                .gens()
                                .iter()
                                .flat_map(|(g, e)| {
                                    std::iter::repeat_n(g.name(self.prefix), *e as usize)
                                })
                                .collect();
                            json!({ "coefficient": format_rational(c), "monomial": names })
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "generators": generators,
            "relations": relations,
            "metadata": {
                "partition": self.label.to_string(),
                "ell": self.ell,
                "simplified": self.simplified,
                "orientation": self.orientation.as_str(),
            },
        })
    }

    /// Inverse of [`GradedPresentation::to_json`].
    pub fn from_json(v: &Value) -> Result<GradedPresentation> {
        let bad = |r: &str| Error::parse(&v.to_string(), r);
        let meta = v.get("metadata").ok_or_else(|| bad("missing metadata"))?;
        let ell = meta
            .get("ell")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing ell"))? as usize;
        let label_str = meta
            .get("partition")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing partition"))?;
        let label = Label::parse(label_str, ell)?;
        let simplified = meta
            .get("simplified")
            .and_then(Value::as_bool)
            .ok_or_else(|| bad("missing simplified"))?;
        let orientation = match meta.get("orientation").and_then(Value::as_str) {
            Some("negative") => Orientation::Negative,
            Some("positive") | None => Orientation::Positive,
            Some(_) => return Err(bad("unknown orientation")),
        };
        let mut prefix = 'f';
        let mut generators = Vec::new();
        let mut by_name: HashMap<String, GenSym> = HashMap::new();
        for g in v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
        {
            let field = |k: &str| g.get(k).ok_or_else(|| bad("incomplete generator"));
            let name = field("name")?.as_str().ok_or_else(|| bad("name"))?;
            let row = field("row")?.as_u64().ok_or_else(|| bad("row"))? as usize;
            let hook = field("hook")?.as_u64().ok_or_else(|| bad("hook"))? as usize;
            let degree = field("degree")?.as_i64().ok_or_else(|| bad("degree"))?;
            prefix = name.chars().next().ok_or_else(|| bad("empty name"))?;
            let sym = GenSym::new(row, hook);
            by_name.insert(name.to_string(), sym);
            generators.push(Generator { sym, degree });
        }
        let mut relations = Vec::new();
        for r in v
            .get("relations")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing relations"))?
        {
            let mut poly = MPoly::zero();
            for t in r.as_array().ok_or_else(|| bad("relation"))? {
                let c = t
                    .get("coefficient")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("coefficient"))?;
                let syms = t
                    .get("monomial")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("monomial"))?
                    .iter()
                    .map(|n| {
                        n.as_str()
                            .and_then(|n| by_name.get(n).copied())
                            .ok_or_else(|| bad("undeclared generator"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                poly.add_term(Monomial::product(syms), parse_rational(c)?);
            }
            relations.push(poly);
        }
        Ok(GradedPresentation {
            generators,
            relations,
            label,
            ell,
            orientation,
            simplified,
            prefix,
        })
    }
}

impl fmt::Display for GradedPresentation {
    /// `C[f1,1] / (f1,1^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C")?;
        if !self.generators.is_empty() {
            let names: Vec<String> = self
                .generators
                .iter()
                .map(|g| g.sym.name(self.prefix))
                .collect();
            write!(f, "[{}]", names.join(", "))?;
        }
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| r.fmt_with_prefix(self.prefix))
                .collect();
            write!(f, " / ({})", rels.join(", "))?;
        }
        Ok(())
    }
}

fn is_unit(r: &MPoly) -> bool {
    matches!(r.leading_term(), Some((m, _)) if m.is_one())
}

fn homogeneous_degree(r: &MPoly) -> Option<usize> {
    let mut degrees = r.terms().map(|(m, _)| m.weighted_degree());
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// A set of cells with pairwise distinct rows and pairwise distinct columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransversalMonomial {
    cells: Vec<Cell>,
    hooks: Vec<usize>,
}

impl TransversalMonomial {
    pub fn new(lambda: &Partition, mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort_unstable();
        for &c in &cells {
            lambda.hook_length(c)?;
        }
        for (k, a) in cells.iter().enumerate() {
            for b in &cells[k + 1..] {
                if a.row == b.row || a.col == b.col {
                    return Err(Error::NotTransversal(a.to_string(), b.to_string()));
                }
            }
        }
        let hooks = cells.iter().map(|&c| lambda.hook(c)).collect();
        Ok(TransversalMonomial { cells, hooks })
    }

    /// Cells sorted by row.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn degree(&self) -> usize {
        self.hooks.iter().sum()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::product(
            self.cells
                .iter()
                .zip(&self.hooks)
                .map(|(c, &h)| GenSym::new(c.row, h)),
        )
    }
}

/// Every transversal monomial of degree at most `max_degree`, the empty one
/// included.
pub fn transversal_monomials(lambda: &Partition, max_degree: usize) -> Vec<TransversalMonomial> {
    let mut out = Vec::new();
    let mut used = vec![false; lambda.part(1) + 1];
    let mut current = Vec::new();
    transversal_fill(lambda, 1, max_degree, &mut used, &mut current, &mut out);
    out
}

fn transversal_fill(
    lambda: &Partition,
    row: usize,
    budget: usize,
    used: &mut [bool],
    current: &mut Vec<(Cell, usize)>,
    out: &mut Vec<TransversalMonomial>,
) {
    if row > lambda.len() {
        out.push(TransversalMonomial {
            cells: current.iter().map(|(c, _)| *c).collect(),
            hooks: current.iter().map(|(_, h)| *h).collect(),
        });
        return;
    }
    transversal_fill(lambda, row + 1, budget, used, current, out);
    for col in 1..=lambda.part(row) {
        let cell = Cell::new(row, col);
        let h = lambda.hook(cell);
        if used[col] || h > budget {
            continue;
        }
        used[col] = true;
        current.push((cell, h));
        transversal_fill(lambda, row + 1, budget - h, used, current, out);
        current.pop();
        used[col] = false;
    }
}

/// `∏_{i<j} (e_i - e_j)` where `e_i = d_i - h` if `m` has a cell of hook `h`
/// in row `i`, and `e_i = d_i` otherwise.
pub fn vandermonde_coefficient(lambda: &Partition, m: &TransversalMonomial) -> Result<BigRational> {
    for &c in &m.cells {
        lambda.hook_length(c)?;
    }
    let n = lambda.size();
    let beta = lambda.beta_set(n)?;
    let mut e: Vec<i64> = beta.values().iter().map(|&d| d as i64).collect();
    for (c, &h) in m.cells.iter().zip(&m.hooks) {
        e[c.row - 1] -= h as i64;
    }
    let mut prod = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            prod *= e[i] - e[j];
        }
    }
    Ok(BigRational::from_integer(prod))
}

/// `(-1)^{n(n-1)/2}`: converts the Vandermonde product into the Wronskian
/// coefficient, whose columns run in decreasing degree.
fn wronskian_sign(n: usize) -> BigRational {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `A(λ)⁺` with one generator per cell and relations `r_1, …, r_n`.
pub fn direct_presentation(lambda: &Partition) -> GradedPresentation {
    let n = lambda.size();
    let generators = lambda
        .cells()
        .map(|c| {
            let h = lambda.hook(c);
            Generator {
                sym: GenSym::new(c.row, h),
                degree: h as i64,
            }
        })
        .collect();
    let sign = wronskian_sign(n);
    let mut relations = vec![MPoly::zero(); n];
    for t in transversal_monomials(lambda, n) {
        let s = t.degree();
        if s == 0 {
            continue;
        }
        let c = vandermonde_coefficient(lambda, &t).expect("cells come from the diagram");
        relations[s - 1].add_term(t.monomial(), c * &sign);
    }
    GradedPresentation {
        generators,
        relations,
        label: Label::Partition(lambda.clone()),
        ell: 1,
        orientation: Orientation::Positive,
        simplified: false,
        prefix: 'f',
    }
}

/// `A(q)⁺` for an ℓ-multipartition `q`: the presentation of
/// `λ = from_quotient(q)` with every generator of hook not divisible by ℓ set
/// to zero and only the relations `r_ℓ, r_{2ℓ}, …` kept. Relations that
/// vanish identically after the substitution are dropped.
pub fn wreath_presentation(q: &MultiPartition, ell: usize) -> Result<GradedPresentation> {
    if ell == 0 {
        return Err(Error::InvalidEll);
    }
    if q.ell() != ell {
        return Err(Error::LengthMismatch {
            expected: ell,
            found: q.ell(),
        });
    }
    let lambda = from_quotient(q, ell)?;
    let full = direct_presentation(&lambda);
    let (generators, dead): (Vec<Generator>, Vec<Generator>) = full
        .generators
        .iter()
        .partition(|g| g.sym.degree % ell == 0);
    let dead: BTreeSet<GenSym> = dead.into_iter().map(|g| g.sym).collect();
    let relations = full
        .relations
        .iter()
        .enumerate()
        .filter(|(k, _)| (k + 1) % ell == 0)
        .map(|(_, r)| r.kill_symbols(&dead))
        .filter(|r| !r.is_zero())
        .collect();
    Ok(GradedPresentation {
        generators,
        relations,
        label: Label::Multi(q.clone()),
        ell,
        orientation: Orientation::Positive,
        simplified: false,
        prefix: 'f',
    })
}

/// The generator of `r` to eliminate, if `r` is linear in one: among the
/// symbols whose only occurrence in `r` is a bare linear term, the largest
/// `(row, hook)`.
fn linear_symbol(r: &MPoly) -> Option<GenSym> {
    r.symbols().into_iter().rev().find(|&g| {
        let bare = Monomial::gen(g);
        r.terms().all(|(m, _)| m.exponent(g) == 0 || *m == bare)
    })
}

/// Eliminates generators through relations linear in them, then reduces the
/// relations to a minimal homogeneous generating set and makes each monic.
pub fn simplify(p: &GradedPresentation) -> GradedPresentation {
    let mut generators = p.generators.clone();
    let mut relations: Vec<MPoly> = p
        .relations
        .iter()
        .filter(|r| !r.is_zero())
        .cloned()
        .collect();
    loop {
        let mut order: Vec<usize> = (0..relations.len()).collect();
        order.sort_by_key(|&k| homogeneous_degree(&relations[k]));
        let Some((k, g)) = order
            .into_iter()
            .find_map(|k| linear_symbol(&relations[k]).map(|g| (k, g)))
        else {
            break;
        };
        let r = relations.remove(k);
        let bare = Monomial::gen(g);
        let c = r.coefficient(&bare);
        let rest = &r - &MPoly::term(bare, c.clone());
        let value = rest.scale(&(-c.recip()));
        relations = relations
            .iter()
            .map(|x| x.substitute(g, &value))
            .filter(|x| !x.is_zero())
            .collect();
        generators.retain(|x| x.sym != g);
    }
    let syms: Vec<GenSym> = generators.iter().map(|g| g.sym).collect();
    GradedPresentation {
        generators,
        relations: minimal_relations(relations, &syms),
        simplified: true,
        ..p.clone()
    }
}

/// Keeps, in order of degree, each relation not already in the ideal spanned
/// by the relations kept before it.
fn minimal_relations(mut relations: Vec<MPoly>, syms: &[GenSym]) -> Vec<MPoly> {
    relations.sort_by_key(homogeneous_degree);
    let mut kept: Vec<(usize, MPoly)> = Vec::new();
    for r in relations {
        let Some(d) = homogeneous_degree(&r) else {
            kept.push((usize::MAX, r.monic()));
            continue;
        };
        if is_unit(&r) {
            return vec![MPoly::one()];
        }
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut row_of = |p: &MPoly| -> Vec<(usize, BigRational)> {
            p.terms()
                .map(|(m, c)| {
                    let next = index.len();
                    (*index.entry(m.clone()).or_insert(next), c.clone())
                })
                .collect()
        };
        let mut span = Echelon::new();
        for (dk, k) in &kept {
            if *dk > d {
                continue;
            }
            for m in monomials_of_weight(syms, d - dk) {
                span.insert(row_of(&k.mul_monomial(&m)));
            }
        }
        if !span.contains(row_of(&r)) {
            kept.push((d, r.monic()));
        }
    }
    kept.into_iter().map(|(_, r)| r).collect()
}

/// Same ring with every degree negated.
pub fn negate_grading(p: &GradedPresentation) -> GradedPresentation {
    GradedPresentation {
        generators: p
            .generators
            .iter()
            .map(|g| Generator {
                sym: g.sym,
                degree: -g.degree,
            })
            .collect(),
        orientation: p.orientation.flip(),
        ..p.clone()
    }
}

/// Presentation for a label: direct for a partition, wreath for an
/// ℓ-multipartition.
pub fn presentation_for(label: &Label, simplified: bool) -> Result<GradedPresentation> {
    let raw = match label {
        Label::Partition(p) => direct_presentation(p),
        Label::Multi(q) => wreath_presentation(q, q.ell())?,
    };
    Ok(if simplified { simplify(&raw) } else { raw })
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::abacus::multipartitions_of;
    use crate::hilbert::{
        graded_dimensions, graded_dimensions_from_presentation, hilbert_series_formula,
        DEFAULT_SLACK,
    };
    use crate::partition::partitions_of;
    use num_traits::Zero;

    fn raw_dimensions(p: &GradedPresentation, lambda: &Partition) -> crate::hilbert::HilbertSeries {
        let top = hilbert_series_formula(lambda)
            .unwrap()
            .top_degree()
            .unwrap();
        graded_dimensions_from_presentation(p, top + DEFAULT_SLACK).unwrap()
    }

    #[test]
    fn transversal_support_up_to_six() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                let pres = direct_presentation(&lambda);
                let declared: BTreeSet<GenSym> = pres.generator_syms().into_iter().collect();
                assert_eq!(declared.len(), lambda.size());
                let mut seen = 0;
                for (k, r) in pres.relations().iter().enumerate() {
                    assert_eq!(pres.relation_degree(k), Some(k as i64 + 1), "{lambda}");
                    assert!(r.symbols().is_subset(&declared));
                    for (m, _) in r.terms() {
                        let rows: BTreeSet<usize> = m.gens().iter().map(|(g, _)| g.row).collect();
                        assert_eq!(rows.len(), m.gens().len());
                        assert_eq!(m.symbol_count() as usize, m.gens().len());
                    }
                    seen += r.len();
                }
                let all = transversal_monomials(&lambda, n);
                let nonempty: Vec<&TransversalMonomial> =
                    all.iter().filter(|t| t.degree() > 0).collect();
                assert_eq!(seen, nonempty.len(), "{lambda}");
                for t in nonempty {
                    let r = &pres.relations()[t.degree() - 1];
                    assert!(!r.coefficient(&t.monomial()).is_zero(), "{lambda}");
                }
                for g in pres.generator_syms() {
                    let r = &pres.relations()[g.degree - 1];
                    assert!(!r.coefficient(&Monomial::gen(g)).is_zero());
                }
            }
        }
    }

    #[test]
    fn simplify_preserves_dimensions() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                let raw = direct_presentation(&lambda);
                let s = simplify(&raw);
                assert_eq!(
                    graded_dimensions(&s).unwrap(),
                    raw_dimensions(&raw, &lambda),
                    "{lambda}"
                );
                assert!(s.generators().iter().all(|g| s
                    .relations()
                    .iter()
                    .all(|r| linear_symbol(r) != Some(g.sym))));
            }
        }
        for ell in 2..=8 {
            for n in 0..=8 / ell {
                for q in multipartitions_of(n, ell).unwrap() {
                    let raw = wreath_presentation(&q, ell).unwrap();
                    let s = simplify(&raw);
                    assert_eq!(
                        graded_dimensions(&s).unwrap(),
                        graded_dimensions(&raw).unwrap(),
                        "{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn transpose_dimensions_up_to_eight() {
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                let t = lambda.transpose();
                if t < lambda {
                    continue;
                }
                let (a, b) = (direct_presentation(&lambda), direct_presentation(&t));
                if n <= 6 {
                    assert_eq!(
                        raw_dimensions(&a, &lambda),
                        raw_dimensions(&b, &t),
                        "{lambda}"
                    );
                } else {
                    assert_eq!(
                        graded_dimensions(&simplify(&a)).unwrap(),
                        graded_dimensions(&simplify(&b)).unwrap(),
                        "{lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn wreath_support() {
        for ell in 2..=8 {
            for n in 0..=8 / ell {
                for q in multipartitions_of(n, ell).unwrap() {
                    let w = wreath_presentation(&q, ell).unwrap();
                    let l = ell as i64;
                    assert!(w.generators().iter().all(|g| g.degree % l == 0), "{q}");
                    for k in 0..w.relations().len() {
                        assert_eq!(w.relation_degree(k).unwrap() % l, 0, "{q}");
                    }
                    let dims = graded_dimensions(&w).unwrap();
                    for (d, c) in dims.coefficients().iter().enumerate() {
                        assert!(d % ell == 0 || *c == 0, "{q}");
                    }
                }
            }
        }
    }

    #[test]
    fn matches_wronskian_for_six() {
        for lambda in partitions_of(6) {
            let w = crate::wronski::wronski_relations(&lambda).unwrap();
            assert_eq!(
                direct_presentation(&lambda).relations(),
                &w.relations[..],
                "{lambda}"
            );
        }
    }
}
