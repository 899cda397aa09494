//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hombracket::cochain::Cochain;
use hombracket::exterior::{BigElement, MultiIndex};
use hombracket::linalg::{rat, Matrix, Rational, TwistMap};
use num_traits::{One, Zero};

/// A generator of the exterior algebra: covector `Cov(i)` or vector `Vec(i)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    Cov(usize),
    Vec(usize),
}

fn word(m: (MultiIndex, MultiIndex)) -> Vec<Gen> {
    let mut w: Vec<Gen> = m.0.iter().map(Gen::Cov).collect();
    w.extend(m.1.iter().map(Gen::Vec));
    w
}

/// Builds the element of a word of generators in arbitrary order.
pub fn from_word(dim: usize, w: &[Gen], c: Rational) -> BigElement {
    let mut out = BigElement::scalar(dim, c);
    for g in w {
        let x = match g {
            Gen::Cov(i) => BigElement::basis_covector(dim, *i),
            Gen::Vec(i) => BigElement::basis_vector(dim, *i),
        };
        out = out.wedge(&x);
    }
    out
}

/// Symmetric pairing `<e_i, xi^j> = <xi^j, e_i> = (alpha^{-1})_{ji}`.
fn pairing(g: Gen, h: Gen, alpha: &TwistMap) -> Rational {
    match (g, h) {
        (Gen::Vec(i), Gen::Cov(j)) | (Gen::Cov(j), Gen::Vec(i)) => alpha.inverse()[(j, i)].clone(),
        _ => Rational::zero(),
    }
}

/// Big bracket computed as `Ad_alpha` of a contraction built from a right
/// derivative on the first argument and a left derivative on the second.
pub fn big_bracket_oracle(a: &BigElement, b: &BigElement, alpha: &TwistMap) -> BigElement {
    let dim = a.dim();
    let mut out = BigElement::zero(dim);
    for (ma, ca) in a.terms() {
        let wa = word(*ma);
        for (mb, cb) in b.terms() {
            let wb = word(*mb);
            for (pa, &g) in wa.iter().enumerate() {
                for (pb, &h) in wb.iter().enumerate() {
                    let p = pairing(g, h, alpha);
                    if p.is_zero() {
                        continue;
                    }
                    let right_sign = if (wa.len() - 1 - pa) % 2 == 0 { 1 } else { -1 };
                    let left_sign = if pb % 2 == 0 { 1 } else { -1 };
                    let mut w: Vec<Gen> = wa.iter().enumerate().filter(|(i, _)| *i != pa).map(|(_, g)| *g).collect();
                    w.extend(wb.iter().enumerate().filter(|(i, _)| *i != pb).map(|(_, g)| *g));
                    let c = ca * cb * p * rat(right_sign * left_sign);
                    out = out.try_add(&from_word(dim, &w, c)).unwrap();
                }
            }
        }
    }
    out.ad_alpha(alpha).unwrap()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let moved = p.len() - pos;
            out.push((q, s ^ (moved % 2 == 1)));
        }
    }
    out
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Untwisted insertion product summed over all permutations with the
/// `1/(l+1)! k!` normalization.
pub fn untwisted_compose(p: &Cochain, q: &Cochain) -> Cochain {
    let dim = p.source_dim();
    if p.arity() == 0 {
        return Cochain::zero(dim, dim, 0);
    }
    let (ap, aq) = (p.arity(), q.arity());
    let n = ap + aq - 1;
    let norm = Rational::new(1.into(), (factorial(aq) * factorial(ap - 1)).into());
    Cochain::from_fn(dim, dim, n, |t| {
        let mut acc = vec![Rational::zero(); dim];
        for (perm, neg) in permutations(n) {
            let xs: Vec<usize> = perm.iter().map(|&i| t[i]).collect();
            let inner = q.eval_basis(&xs[..aq]);
            let mut args = vec![inner];
            args.extend(xs[aq..].iter().map(|&i| hombracket::linalg::unit_vector(dim, i)));
            let v = p.eval(&args);
            for (a, x) in acc.iter_mut().zip(v) {
                if neg {
                    *a -= x * &norm;
                } else {
                    *a += x * &norm;
                }
            }
        }
        acc
    })
}

/// Hom-Jacobi residual `[a x, [y, z]] + c.p.` for a bracket table.
pub fn jacobi_residual(mu: &Cochain, alpha: &Matrix, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let dim = alpha.rows();
    let e = |i| hombracket::linalg::unit_vector(dim, i);
    let term = |a: usize, b: usize, c: usize| mu.eval(&[alpha.apply(&e(a)), mu.eval_basis(&[b, c])]);
    let mut out = term(i, j, k);
    for (x, y) in out.iter_mut().zip(term(j, k, i)) {
        *x += y;
    }
    for (x, y) in out.iter_mut().zip(term(k, i, j)) {
        *x += y;
    }
    out
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn one() -> Rational {
    Rational::one()
}

pub type Table = BTreeMap<(usize, usize), Vec<Rational>>;
