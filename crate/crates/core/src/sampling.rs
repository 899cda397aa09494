//! Seeded random inputs for the property suites.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::exterior::{BigElement, Monomial, MultiIndex};
use crate::linalg::{frac, rat, Matrix, Rational, TwistMap};
use crate::nijenhuis::{combine, commutant_basis, intertwiner_basis};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational: an integer in `-3..=3`, sometimes halved or thirded.
pub fn small_rational(rng: &mut SuiteRng) -> Rational {
    let n = rng.gen_range(-3..=3);
    match rng.gen_range(0..4) {
        0 => frac(n, rng.gen_range(2..=3)),
        _ => rat(n),
    }
}

fn nonzero_rational(rng: &mut SuiteRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A cochain whose entries are each nonzero with probability one half.
pub fn cochain(rng: &mut SuiteRng, dim: usize, arity: usize) -> Cochain {
    Cochain::from_fn(dim, dim, arity, |_| {
        (0..dim).map(|_| if rng.gen_bool(0.5) { small_rational(rng) } else { Rational::zero() }).collect()
    })
}

/// A combination of one to three basis monomials of the given degree.
pub fn homogeneous(rng: &mut SuiteRng, dim: usize, degree: i64) -> BigElement {
    let monos: Vec<Monomial> =
        BigElement::basis_monomials(dim).into_iter().filter(|&m| BigElement::monomial_degree(m) == degree).collect();
    let mut out = BigElement::zero(dim);
    if monos.is_empty() {
        return out;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let (c, v) = *monos.choose(rng).expect("nonempty");
        out.add_term(c, v, nonzero_rational(rng));
    }
    out
}

/// An operator commuting with `alpha`: a random element of the commutant, a
/// polynomial in `alpha`, or a multiple of `alpha`.
pub fn commuting_operator(rng: &mut SuiteRng, alpha: &TwistMap) -> Matrix {
    let n = alpha.dim();
    match rng.gen_range(0..4) {
        0 | 1 => {
            let basis = commutant_basis(alpha);
            let coeffs: Vec<Rational> =
                basis.iter().map(|_| if rng.gen_bool(0.6) { small_rational(rng) } else { Rational::zero() }).collect();
            combine(&basis, &coeffs, n)
        }
        2 => {
            let mut out = Matrix::zeros(n, n);
            for k in 0..=2 {
                out = &out + &alpha.forward().pow(k).scale(&small_rational(rng));
            }
            out
        }
        _ => alpha.forward().scale(&small_rational(rng)),
    }
}

/// An element of `V* (x) Lambda^2 V`: half the time drawn from the
/// `Ad_alpha`-invariant part, otherwise unrestricted.
pub fn cobracket_candidate(rng: &mut SuiteRng, alpha: &TwistMap) -> BigElement {
    let n = alpha.dim();
    let monos: Vec<Monomial> = MultiIndex::subsets(n, 1)
        .into_iter()
        .flat_map(|c| MultiIndex::subsets(n, 2).into_iter().map(move |v| (c, v)))
        .collect();
    let mut out = BigElement::zero(n);
    if rng.gen_bool(0.5) {
        // Kernel of Ad_alpha - 1 on this bidegree.
        let mut m = Matrix::zeros(monos.len(), monos.len());
        for (j, &(c, v)) in monos.iter().enumerate() {
            let img = BigElement::monomial(n, c, v, rat(1)).ad_alpha(alpha).expect("dims");
            for (i, &(c2, v2)) in monos.iter().enumerate() {
                let d = if i == j { rat(1) } else { rat(0) };
                m[(i, j)] = img.coeff(c2, v2) - d;
            }
        }
        for k in m.kernel_basis() {
            if rng.gen_bool(0.6) {
                let s = small_rational(rng);
                for (i, &(c, v)) in monos.iter().enumerate() {
                    out.add_term(c, v, &k[i] * &s);
                }
            }
        }
    } else {
        for &(c, v) in &monos {
            if rng.gen_bool(0.4) {
                out.add_term(c, v, small_rational(rng));
            }
        }
    }
    out
}

/// A candidate map `W -> V`: usually a combination of intertwiners
/// (`T beta = alpha T`), sometimes an arbitrary matrix.
pub fn operator_candidate(rng: &mut SuiteRng, alpha: &TwistMap, beta: &TwistMap) -> Matrix {
    let (n, w) = (alpha.dim(), beta.dim());
    if rng.gen_bool(0.75) {
        let basis = intertwiner_basis(alpha, beta);
        let mut out = Matrix::zeros(n, w);
        for b in &basis {
            if rng.gen_bool(0.5) {
                out = &out + &b.scale(&small_rational(rng));
            }
        }
        out
    } else {
        let rows = (0..n).map(|_| (0..w).map(|_| small_rational(rng)).collect()).collect();
        Matrix::from_rows(rows).expect("rectangular")
    }
}
