//! The twisted big bracket on `Lambda(V (+) V*)`.
//!
//! On basis monomials `Xi (x) X` and `Pi (x) Y` the bracket is evaluated in
//! closed form: every vector of the first factor is contracted into `Pi`,
//! every vector of the second into `Xi`, and the untouched factors are
//! twisted by `Ad_alpha`. Bilinearity extends it to arbitrary elements.

use std::collections::HashMap;

use crate::cochain::nr_bracket;
use crate::error::{Error, Result};
use crate::exterior::{big_from_cochain, cochain_from_big, interior, BigElement, Monomial, MultiIndex};
use crate::linalg::{sign, unit_vector, Rational, TwistMap};

/// Per-call caches for the pieces that recur across monomial pairs.
struct Ctx<'a> {
    alpha: &'a TwistMap,
    dim: usize,
    cov: HashMap<u32, BigElement>,
    vec: HashMap<u32, BigElement>,
    contraction: HashMap<(usize, u32), BigElement>,
}

impl<'a> Ctx<'a> {
    fn new(alpha: &'a TwistMap) -> Self {
        Ctx { alpha, dim: alpha.dim(), cov: HashMap::new(), vec: HashMap::new(), contraction: HashMap::new() }
    }

    /// `(alpha^{-1})^*` of the pure covector monomial.
    fn ad_cov(&mut self, c: MultiIndex) -> BigElement {
        let (alpha, dim) = (self.alpha, self.dim);
        self.cov
            .entry(c.mask())
            .or_insert_with(|| {
                BigElement::monomial(dim, c, MultiIndex::EMPTY, Rational::from_integer(1.into()))
                    .ad_alpha(alpha)
                    .expect("dimensions agree")
            })
            .clone()
    }

    /// `alpha` of the pure vector monomial.
    fn ad_vec(&mut self, v: MultiIndex) -> BigElement {
        let (alpha, dim) = (self.alpha, self.dim);
        self.vec
            .entry(v.mask())
            .or_insert_with(|| {
                BigElement::monomial(dim, MultiIndex::EMPTY, v, Rational::from_integer(1.into()))
                    .ad_alpha(alpha)
                    .expect("dimensions agree")
            })
            .clone()
    }

    /// `i^alpha_{e_i}` of the pure covector monomial.
    fn contract(&mut self, i: usize, c: MultiIndex) -> BigElement {
        let (alpha, dim) = (self.alpha, self.dim);
        self.contraction
            .entry((i, c.mask()))
            .or_insert_with(|| {
                let xi = BigElement::monomial(dim, c, MultiIndex::EMPTY, Rational::from_integer(1.into()));
                interior(&unit_vector(dim, i), &xi, alpha).expect("pure covector")
            })
            .clone()
    }

    fn monomials(&mut self, (c1, x): Monomial, (c2, y): Monomial) -> BigElement {
        let p = x.len() as i64 - 1;
        let q = c1.len() as i64 - 1;
        let l = c2.len() as i64 - 1;
        let mut out = BigElement::zero(self.dim);
        if !x.is_empty() && !c2.is_empty() {
            let ad_xi = self.ad_cov(c1);
            let ay = self.ad_vec(y);
            let pre = sign(p * l + p);
            for (j, xj) in x.iter().enumerate() {
                let cov = ad_xi.wedge(&self.contract(xj, c2));
                if cov.is_zero() {
                    continue;
                }
                let vec = self.ad_vec(x.without(xj)).wedge(&ay);
                out = out.try_add(&cov.wedge(&vec).scale(&(&pre * sign(j as i64)))).expect("same dim");
            }
        }
        if !y.is_empty() && !c1.is_empty() {
            let ad_pi = self.ad_cov(c2);
            let ax = self.ad_vec(x);
            let pre = -sign(p * l + q);
            for (j, yj) in y.iter().enumerate() {
                let cov = self.contract(yj, c1).wedge(&ad_pi);
                if cov.is_zero() {
                    continue;
                }
                let vec = ax.wedge(&self.ad_vec(y.without(yj)));
                out = out.try_add(&cov.wedge(&vec).scale(&(&pre * sign(j as i64)))).expect("same dim");
            }
        }
        out
    }
}

/// The twisted big bracket `{a, b}_alpha`.
pub fn big_bracket(a: &BigElement, b: &BigElement, alpha: &TwistMap) -> Result<BigElement> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("elements over dimensions {} and {}", a.dim(), b.dim())));
    }
    a.check_twist(alpha)?;
    let mut ctx = Ctx::new(alpha);
    let mut out = BigElement::zero(a.dim());
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let t = ctx.monomials(*ma, *mb);
            if !t.is_zero() {
                out = out.try_add(&t.scale(&(ca * cb)))?;
            }
        }
    }
    Ok(out)
}

fn single_vector_arity(a: &BigElement) -> Result<i64> {
    Ok(cochain_from_big(a)?.arity() as i64)
}

/// `{Xi (x) x, Pi (x) y} + (-1)^{ql} [Xi (x) x, Pi (x) y]`, which vanishes
/// when the big bracket and the Nijenhuis-Richardson bracket agree.
pub fn nr_consistency(a: &BigElement, b: &BigElement, alpha: &TwistMap) -> Result<BigElement> {
    let q = single_vector_arity(a)? - 1;
    let l = single_vector_arity(b)? - 1;
    let nr = nr_bracket(&cochain_from_big(a)?, &cochain_from_big(b)?, alpha)?;
    let big = big_bracket(a, b, alpha)?;
    big.try_add(&big_from_cochain(&nr)?.scale(&sign(q * l)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn mono(dim: usize, m: Monomial) -> BigElement {
        BigElement::monomial(dim, m.0, m.1, rat(1))
    }

    fn deg(m: Monomial) -> i64 {
        BigElement::monomial_degree(m)
    }

    #[test]
    fn generator_brackets() {
        let a = TwistMap::diag(&[rat(2), rat(3)]).unwrap();
        let e = |i| BigElement::basis_vector(2, i);
        let xi = |i| BigElement::basis_covector(2, i);
        assert!(big_bracket(&e(0), &e(1), &a).unwrap().is_zero());
        assert!(big_bracket(&xi(0), &xi(1), &a).unwrap().is_zero());
        assert_eq!(big_bracket(&e(0), &xi(0), &a).unwrap(), BigElement::scalar(2, frac(1, 2)));
        assert_eq!(big_bracket(&xi(0), &e(0), &a).unwrap(), BigElement::scalar(2, frac(1, 2)));
        let top = xi(0).wedge(&xi(1));
        assert_eq!(big_bracket(&e(0), &top, &a).unwrap(), xi(1).scale(&frac(1, 6)));
    }

    #[test]
    fn skew_symmetry_and_centrality_at_dim_two() {
        let alpha = TwistMap::new(crate::linalg::Matrix::from_i64(&[&[2, 1], &[0, 3]])).unwrap();
        let basis = BigElement::basis_monomials(2);
        let one = BigElement::scalar(2, rat(1));
        for &a in &basis {
            let x = mono(2, a);
            assert!(big_bracket(&one, &x, &alpha).unwrap().is_zero());
            for &b in &basis {
                let y = mono(2, b);
                let lhs = big_bracket(&x, &y, &alpha).unwrap();
                let rhs = big_bracket(&y, &x, &alpha).unwrap().scale(&-sign(deg(a) * deg(b)));
                assert_eq!(lhs, rhs, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn consistency_example() {
        let alpha = TwistMap::diag(&[rat(1), rat(2)]).unwrap();
        let a = BigElement::basis_covector(2, 0).wedge(&BigElement::basis_vector(2, 0));
        let b = BigElement::basis_covector(2, 1).wedge(&BigElement::basis_vector(2, 1));
        assert!(nr_consistency(&a, &b, &alpha).unwrap().is_zero());
    }
}
