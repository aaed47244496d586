//! Schubert-cell bases, their Wronskian, and the relations cut out by the
//! fibre of the Wronski map over zero.
//!
//! This is the slow, symbolic route to `A(λ)⁺`. The combinatorial route in
//! [`crate::presentation`] must agree with it coefficient for coefficient.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{gaps_below, BetaSet, Partition};
use crate::poly::{GenSym, MPoly, Monomial, PolyMatrix};

/// The basis `f_i = u^{d_i} + Σ f_{i,j} u^{d_i - j}` (sum over `d_i - j ∉ P`)
/// of the generic subspace in the Schubert cell of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertBasis {
    source: Partition,
    beta: BetaSet,
    polys: Vec<MPoly>,
}

impl SchubertBasis {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn beta(&self) -> &BetaSet {
        &self.beta
    }

    pub fn polys(&self) -> &[MPoly] {
        &self.polys
    }

    /// Symbols occurring in `f_i` (1-based), in decreasing degree.
    pub fn symbols_of(&self, i: usize) -> Vec<GenSym> {
        gaps_below(&self.beta, i)
            .into_iter()
            .map(|j| GenSym::new(i, j))
            .collect()
    }
}

/// `r_1 … r_n` read off the Wronskian `leading·u^n + r_1 u^{n-1} + … + r_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskiRelations {
    pub leading: BigRational,
    pub relations: Vec<MPoly>,
}

impl WronskiRelations {
    /// `r_s` for `1 <= s <= n`.
    pub fn relation(&self, s: usize) -> &MPoly {
        &self.relations[s - 1]
    }
}

pub fn schubert_basis(lambda: &Partition) -> SchubertBasis {
    let n = lambda.size();
    let beta = lambda.beta_set(n).expect("length never exceeds size");
    let polys = (1..=n)
        .map(|i| {
            let d = beta.get(i) as u32;
            let mut f = MPoly::u_pow(d);
            for j in gaps_below(&beta, i) {
                let mono = Monomial::gen(GenSym::new(i, j)).mul(&Monomial::u_pow(d - j as u32));
                f.add_term(mono, BigRational::one());
            }
            f
        })
        .collect();
    SchubertBasis {
        source: lambda.clone(),
        beta,
        polys,
    }
}

/// `det [ f_c^{(r)} ]` with rows indexed by derivative order.
pub fn wronskian_of(polys: &[MPoly]) -> Result<MPoly> {
    let n = polys.len();
    let mut rows = Vec::with_capacity(n);
    let mut current: Vec<MPoly> = polys.to_vec();
    for _ in 0..n {
        let next = current.iter().map(MPoly::d_du).collect();
        rows.push(std::mem::replace(&mut current, next));
    }
    PolyMatrix::from_rows(rows)?.determinant()
}

pub fn wronskian(basis: &SchubertBasis) -> Result<MPoly> {
    wronskian_of(&basis.polys)
}

pub fn wronski_relations(lambda: &Partition) -> Result<WronskiRelations> {
    let n = lambda.size() as u32;
    let w = wronskian(&schubert_basis(lambda))?;
    let leading = w
        .coefficient_of_u(n)
        .terms()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigRational::zero);
    let relations = (1..=n).map(|s| w.coefficient_of_u(n - s)).collect();
    Ok(WronskiRelations { leading, relations })
}

/// `Wr(f_1,…,f_n) = f_1^n · Wr((f_2/f_1)', …, (f_n/f_1)')`.
///
/// Inputs must have strictly increasing `u`-degree, and every quotient must
/// be exact; in practice that means monomial inputs, or bases whose
/// successive pivots have constant leading coefficient and divide the rest.
pub fn wronskian_recursive(polys: &[MPoly]) -> Result<MPoly> {
    let Some((first, rest)) = polys.split_first() else {
        return Ok(MPoly::one());
    };
    if first.is_zero() {
        return Err(Error::InexactDivision("zero pivot".into()));
    }
    let mut prev = first.u_degree();
    for p in rest {
        let d = p.u_degree();
        if d <= prev {
            return Err(Error::InexactDivision(
                "degrees must be strictly increasing".into(),
            ));
        }
        prev = d;
    }
    let reduced = rest
        .iter()
        .map(|p| Ok(p.div_exact_in_u(first)?.d_du()))
        .collect::<Result<Vec<_>>>()?;
    let inner = wronskian_recursive(&reduced)?;
    Ok(&first.pow(polys.len() as u32) * &inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Homogeneity;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn f(i: usize, j: usize) -> MPoly {
        MPoly::gen(GenSym::new(i, j))
    }

    fn c(n: i64) -> MPoly {
        MPoly::integer(n)
    }

    fn up(k: u32) -> MPoly {
        MPoly::u_pow(k)
    }

    #[test]
    fn basis_of_three_two() {
        let b = schubert_basis(&p("3,2"));
        let polys = b.polys();
        assert_eq!(polys.len(), 5);
        let f1 = &(&(&up(7) + &(&f(1, 1) * &up(6))) + &(&f(1, 3) * &up(4))) + &(&f(1, 4) * &up(3));
        assert_eq!(polys[0], f1);
        let f2 = &(&up(5) + &(&f(2, 1) * &up(4))) + &(&f(2, 2) * &up(3));
        assert_eq!(polys[1], f2);
        assert_eq!(polys[2], up(2));
        assert_eq!(polys[3], up(1));
        assert_eq!(polys[4], c(1));
        for (k, poly) in polys.iter().enumerate() {
            let d = b.beta().get(k + 1);
            assert_eq!(poly.weighted_degree(), Ok(Homogeneity::Homogeneous(d)));
        }
    }

    #[test]
    fn basis_of_one() {
        let b = schubert_basis(&p("1"));
        assert_eq!(b.polys(), &[&MPoly::u() + &f(1, 1)]);
        assert!(schubert_basis(&Partition::empty()).polys().is_empty());
    }

    #[test]
    fn example_three_two_relations() {
        let w = wronski_relations(&p("3,2")).unwrap();
        // the determinant oracle gives 50400; the printed example has 25200
        assert_eq!(w.leading, BigRational::from_integer(50400.into()));
        assert_eq!(
            w.relation(1),
            &(&(&c(14400) * &f(1, 1)) + &(&c(30240) * &f(2, 1)))
        );
        assert_eq!(
            w.relation(2),
            &(&(&(&c(11520) * &f(1, 1)) * &f(2, 1)) + &(&c(10080) * &f(2, 2)))
        );
        assert_eq!(
            w.relation(3),
            &(&(&c(-2880) * &f(1, 3)) + &(&(&c(4320) * &f(1, 1)) * &f(2, 2)))
        );
        assert_eq!(w.relation(4), &(&c(-1440) * &f(1, 4)));
        assert_eq!(
            w.relation(5),
            &(&(&(&c(-288) * &f(1, 4)) * &f(2, 1)) + &(&(&c(288) * &f(1, 3)) * &f(2, 2)))
        );
    }

    #[test]
    fn wronskian_degree_is_n() {
        let w = wronskian(&schubert_basis(&p("1,1"))).unwrap();
        assert_eq!(w.weighted_degree(), Ok(Homogeneity::Homogeneous(2)));
        let empty = wronski_relations(&Partition::empty()).unwrap();
        assert_eq!(empty.leading, BigRational::one());
        assert!(empty.relations.is_empty());
    }

    #[test]
    fn recursive_formula() {
        assert_eq!(wronskian_recursive(&[MPoly::u(), up(2)]).unwrap(), up(2));
        // falling-factorial determinant of d = (0,1,2,3) by hand: 1·2·3·1·2·1
        assert_eq!(
            wronskian_recursive(&[c(1), MPoly::u(), up(2), up(3)]).unwrap(),
            c(12)
        );
        let mono: Vec<MPoly> = [0, 1, 2, 4, 6].iter().map(|&e| up(e)).collect();
        assert_eq!(wronskian_recursive(&mono).unwrap(), &c(11520) * &up(3));
        assert!(wronskian_recursive(&[up(2), MPoly::u()]).is_err());
        assert!(wronskian_recursive(&[&MPoly::u() + &c(1), up(2)]).is_err());
    }

    #[test]
    fn recursive_matches_determinant_on_monomials() {
        let mono: Vec<MPoly> = [0, 1, 2, 4, 6].iter().map(|&e| up(e)).collect();
        assert_eq!(
            wronskian_recursive(&mono).unwrap(),
            wronskian_of(&mono).unwrap()
        );
    }
}
