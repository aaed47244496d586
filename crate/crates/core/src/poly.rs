//! Exact multivariate polynomials over ℚ in graded symbols `f_{i,j}` and one
//! distinguished variable `u`.
//!
//! Grading: `deg u = 1`, `deg f_{i,j} = j`. Monomials are ordered by weighted
//! degree first, then lexicographically with `u` greatest and the symbols
//! ordered by `(row, degree)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest matrix the determinant routine accepts.
pub const MAX_DET_SIZE: usize = 16;

/// The symbol `f_{row,degree}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSym {
    pub row: usize,
    pub degree: usize,
}

impl GenSym {
    pub fn new(row: usize, degree: usize) -> Self {
        GenSym { row, degree }
    }

    pub fn name(&self, prefix: char) -> String {
        format!("{prefix}{},{}", self.row, self.degree)
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{},{}", self.row, self.degree)
    }
}

/// `u^k` times a product of symbols. Exponents stored are always positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    u: u32,
    gens: Vec<(GenSym, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn u_pow(k: u32) -> Self {
        Monomial {
            u: k,
            gens: Vec::new(),
        }
    }

    pub fn gen(g: GenSym) -> Self {
        Monomial {
            u: 0,
            gens: vec![(g, 1)],
        }
    }

    /// Product of the given symbols (repetition allowed).
    pub fn product(syms: impl IntoIterator<Item = GenSym>) -> Self {
        let mut counts: BTreeMap<GenSym, u32> = BTreeMap::new();
        for g in syms {
            *counts.entry(g).or_default() += 1;
        }
        Monomial {
            u: 0,
            gens: counts.into_iter().collect(),
        }
    }

    pub fn u_exp(&self) -> u32 {
        self.u
    }

    pub fn gens(&self) -> &[(GenSym, u32)] {
        &self.gens
    }

    pub fn exponent(&self, g: GenSym) -> u32 {
        self.gens
            .binary_search_by(|(h, _)| h.cmp(&g))
            .map(|k| self.gens[k].1)
            .unwrap_or(0)
    }

    pub fn weighted_degree(&self) -> usize {
        self.u as usize
            + self
                .gens
                .iter()
                .map(|(g, e)| g.degree * *e as usize)
                .sum::<usize>()
    }

    /// Total number of symbol factors, counted with multiplicity.
    pub fn symbol_count(&self) -> u32 {
        self.gens.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.u == 0 && self.gens.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        let (mut a, mut b) = (self.gens.iter().peekable(), other.gens.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ga, ea)), Some(&&(gb, eb))) => match ga.cmp(&gb) {
                    Ordering::Less => {
                        gens.push((ga, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        gens.push((gb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        gens.push((ga, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    gens.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    gens.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            u: self.u + other.u,
            gens,
        }
    }

    /// Removes every power of `g`, returning the exponent and the cofactor.
    pub fn split_off(&self, g: GenSym) -> (u32, Monomial) {
        let mut rest = self.clone();
        match rest.gens.binary_search_by(|(h, _)| h.cmp(&g)) {
            Ok(k) => {
                let (_, e) = rest.gens.remove(k);
                (e, rest)
            }
            Err(_) => (0, rest),
        }
    }

    fn with_u(&self, u: u32) -> Monomial {
        Monomial {
            u,
            gens: self.gens.clone(),
        }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        match self.u.cmp(&other.u) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut a, mut b) = (self.gens.iter(), other.gens.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ga, ea)), Some((gb, eb))) => {
                    // an earlier symbol present only on one side decides
                    match ga.cmp(gb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => {}
                            o => return o,
                        },
                    }
                }
            }
        }
    }

    pub fn fmt_with_prefix(&self, prefix: char) -> String {
        let mut factors = Vec::new();
        match self.u {
            0 => {}
            1 => factors.push("u".to_string()),
            k => factors.push(format!("u^{k}")),
        }
        for (g, e) in &self.gens {
            if *e == 1 {
                factors.push(g.name(prefix));
            } else {
                factors.push(format!("{}^{e}", g.name(prefix)));
            }
        }
        factors.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every monomial in the given symbols (no `u`) of weighted degree `w`,
/// symbols allowed to any power. Output is sorted ascending.
pub fn monomials_of_weight(syms: &[GenSym], w: usize) -> Vec<Monomial> {
    let mut sorted: Vec<GenSym> = syms.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.retain(|g| g.degree > 0);
    let mut out = Vec::new();
    let mut current = Vec::new();
    weight_fill(&sorted, w, &mut current, &mut out);
    out.sort();
    out
}

fn weight_fill(
    syms: &[GenSym],
    rest: usize,
    current: &mut Vec<(GenSym, u32)>,
    out: &mut Vec<Monomial>,
) {
    let Some((&g, tail)) = syms.split_first() else {
        if rest == 0 {
            out.push(Monomial {
                u: 0,
                gens: current.clone(),
            });
        }
        return;
    };
    for e in 0..=(rest / g.degree) {
        if e > 0 {
            current.push((g, e as u32));
        }
        weight_fill(tail, rest - e * g.degree, current, out);
        if e > 0 {
            current.pop();
        }
    }
}

/// Result of [`MPoly::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(usize),
    Inhomogeneous,
}

/// Sparse polynomial with exact rational coefficients; no zero coefficient is
/// ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        MPoly::term(Monomial::one(), c)
    }

    pub fn integer(c: i64) -> Self {
        MPoly::constant(rat(c))
    }

    pub fn u() -> Self {
        MPoly::term(Monomial::u_pow(1), BigRational::one())
    }

    pub fn u_pow(k: u32) -> Self {
        MPoly::term(Monomial::u_pow(k), BigRational::one())
    }

    pub fn gen(g: GenSym) -> Self {
        MPoly::term(Monomial::gen(g), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Greatest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Formal derivative in `u`; the symbols are constants.
    pub fn d_du(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.u > 0 {
                out.add_term(m.with_u(m.u - 1), c * rat(m.u as i64));
            }
        }
        out
    }

    pub fn weighted_degree(&self) -> Result<Homogeneity> {
        let mut degrees = self.terms.keys().map(Monomial::weighted_degree);
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(Homogeneity::Homogeneous(first))
        } else {
            Ok(Homogeneity::Inhomogeneous)
        }
    }

    /// Highest power of `u` present, `None` for zero.
    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.u).max()
    }

    /// The part multiplying `u^k`, with `u` removed.
    pub fn coefficient_of_u(&self, k: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u == k)
                .map(|(m, c)| (m.with_u(0), c.clone()))
                .collect(),
        }
    }

    /// Symbols occurring anywhere in the polynomial.
    pub fn symbols(&self) -> BTreeSet<GenSym> {
        self.terms
            .keys()
            .flat_map(|m| m.gens.iter().map(|(g, _)| *g))
            .collect()
    }

    pub fn contains_symbol(&self, g: GenSym) -> bool {
        self.terms.keys().any(|m| m.exponent(g) > 0)
    }

    /// Replaces every occurrence of `g` by `value`.
    pub fn substitute(&self, g: GenSym, value: &MPoly) -> MPoly {
        if !self.contains_symbol(g) {
            return self.clone();
        }
        let mut powers: HashMap<u32, MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(g);
            if e == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            let pw = powers.entry(e).or_insert_with(|| value.pow(e));
            for (t, a) in &pw.terms {
                out.add_term(t.mul(&rest), a * c);
            }
        }
        out
    }

    /// Sets each of the given symbols to zero.
    pub fn kill_symbols(&self, dead: &BTreeSet<GenSym>) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.gens.iter().all(|(g, _)| !dead.contains(g)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact division by a polynomial in `u` whose leading `u`-coefficient is
    /// a non-zero rational constant. Errors if the remainder is non-zero.
    pub fn div_exact_in_u(&self, divisor: &MPoly) -> Result<MPoly> {
        let ddeg = divisor
            .u_degree()
            .ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let lead = divisor.coefficient_of_u(ddeg);
        let lead_c = match lead.terms.iter().next() {
            Some((m, c)) if lead.len() == 1 && m.is_one() => c.clone(),
            _ => {
                return Err(Error::InexactDivision(
                    "divisor's leading u-coefficient is not a constant".into(),
                ))
            }
        };
        let mut rem = self.clone();
        let mut quotient = MPoly::zero();
        while let Some(rdeg) = rem.u_degree() {
            if rdeg < ddeg {
                break;
            }
            let shift = rdeg - ddeg;
            let step = rem
                .coefficient_of_u(rdeg)
                .scale(&lead_c.recip())
                .mul_monomial(&Monomial::u_pow(shift));
            rem = &rem - &(&step * divisor);
            quotient += &step;
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "remainder {rem} is not zero"
            )));
        }
        Ok(quotient)
    }

    /// Largest exponent of any single symbol.
    pub fn max_symbol_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.gens.iter().map(|(_, e)| *e))
            .max()
            .unwrap_or(0)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => MPoly::zero(),
        }
    }

    pub fn fmt_with_prefix(&self, prefix: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = m.fmt_with_prefix(prefix);
            if m.is_one() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&body);
            }
        }
        out
    }
}

/// `"p/q"`, or the integer when the denominator is 1.
pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |r: &str| Error::parse(s, r.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            s.trim().parse().map_err(|_| bad("bad integer"))?,
        )),
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with_prefix('f'))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

/// A matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::NonSquare {
                rows: nrows,
                cols: bad.len(),
            });
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Exact determinant by Laplace expansion along rows, memoizing the
    /// minors on the bottom rows indexed by their column subset.
    pub fn determinant(&self) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::MatrixTooLarge(n));
        }
        let mut level: HashMap<u32, MPoly> = HashMap::new();
        level.insert(0, MPoly::one());
        for t in 1..=n {
            let row = n - t;
            let mut next = HashMap::new();
            for mask in 0u32..(1u32 << n) {
                if mask.count_ones() as usize != t {
                    continue;
                }
                let mut acc = MPoly::zero();
                let mut position = 0;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let entry = self.get(row, c);
                    if !entry.is_zero() {
                        if let Some(minor) = level.get(&(mask & !(1 << c))) {
                            let prod = entry * minor;
                            if position % 2 == 0 {
                                acc += &prod;
                            } else {
                                acc = &acc - &prod;
                            }
                        }
                    }
                    position += 1;
                }
                if !acc.is_zero() {
                    next.insert(mask, acc);
                }
            }
            level = next;
        }
        Ok(level.remove(&((1u32 << n) - 1)).unwrap_or_else(MPoly::zero))
    }
}
