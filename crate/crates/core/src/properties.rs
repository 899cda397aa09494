//! Residuals of the graded identities satisfied by the two brackets. Each
//! function returns zero exactly when its identity holds.

use crate::big_bracket::big_bracket;
use crate::cochain::{ad_alpha_cochain, nr_bracket, right1_residual, right2_residual, Cochain};
use crate::error::{Error, Result};
use crate::exterior::{interior, BigElement};
use crate::linalg::{sign, unit_vector, TwistMap};

/// Residuals of the graded hom-Lie identities of the NR bracket and of the
/// hom-right-symmetry of the insertion product.
#[derive(Clone, Debug)]
pub struct NrAxioms {
    /// `Ad[P,Q] - [Ad P, Ad Q]`.
    pub equivariance: Cochain,
    /// `[P,Q] + (-1)^{|P||Q|} [Q,P]`.
    pub antisymmetry: Cochain,
    /// `[Ad W,[P,Q]] - [[W,P], Ad Q] - (-1)^{|W||P|} [Ad P,[W,Q]]`.
    pub jacobi: Cochain,
    /// `Ad(P o Q) - Ad P o Ad Q`.
    pub right1: Cochain,
    /// Right-symmetry in `Q, W` with the Koszul sign.
    pub right2_graded: Cochain,
    /// Right-symmetry in `Q, W` read without signs.
    pub right2_literal: Cochain,
}

pub fn nr_axioms(p: &Cochain, q: &Cochain, w: &Cochain, alpha: &TwistMap) -> Result<NrAxioms> {
    let ad = |c: &Cochain| ad_alpha_cochain(c, alpha);
    let br = |a: &Cochain, b: &Cochain| nr_bracket(a, b, alpha);
    let pq = br(p, q)?;
    let equivariance = ad(&pq)?.try_sub(&br(&ad(p)?, &ad(q)?)?)?;
    let antisymmetry = pq.try_add(&br(q, p)?.scale(&sign(p.degree() * q.degree())))?;
    let jacobi = br(&ad(w)?, &pq)?
        .try_sub(&br(&br(w, p)?, &ad(q)?)?)?
        .try_sub(&br(&ad(p)?, &br(w, q)?)?.scale(&sign(w.degree() * p.degree())))?;
    Ok(NrAxioms {
        equivariance,
        antisymmetry,
        jacobi,
        right1: right1_residual(p, q, alpha)?,
        right2_graded: right2_residual(p, q, w, alpha, true)?,
        right2_literal: right2_residual(p, q, w, alpha, false)?,
    })
}

fn degree(a: &BigElement) -> Result<i64> {
    if a.is_zero() {
        return Ok(0);
    }
    a.degree().ok_or_else(|| Error::ShapeError("element is not homogeneous".into()))
}

/// Residuals of the graded hom-Lie and hom-Poisson identities of the big
/// bracket on homogeneous `P, Q, W`.
#[derive(Clone, Debug)]
pub struct BigAxioms {
    /// `Ad{P,Q} - {Ad P, Ad Q}`.
    pub equivariance: BigElement,
    /// `{Ad P,{Q,W}} - {{P,Q}, Ad W} - (-1)^{|P||Q|} {Ad Q,{P,W}}`.
    pub jacobi: BigElement,
    /// `{P,Q} + (-1)^{|P||Q|} {Q,P}`.
    pub skew: BigElement,
    /// `{P^Q, W} - Ad P ^ {Q,W} - (-1)^{|Q||W|} {P,W} ^ Ad Q`.
    pub derivation: BigElement,
    /// `{1, P}`.
    pub scalar: BigElement,
}

pub fn big_axioms(p: &BigElement, q: &BigElement, w: &BigElement, alpha: &TwistMap) -> Result<BigAxioms> {
    let (dp, dq, dw) = (degree(p)?, degree(q)?, degree(w)?);
    let ad = |c: &BigElement| c.ad_alpha(alpha);
    let br = |a: &BigElement, b: &BigElement| big_bracket(a, b, alpha);
    let pq = br(p, q)?;
    let equivariance = ad(&pq)?.try_sub(&br(&ad(p)?, &ad(q)?)?)?;
    let jacobi = br(&ad(p)?, &br(q, w)?)?
        .try_sub(&br(&pq, &ad(w)?)?)?
        .try_sub(&br(&ad(q)?, &br(p, w)?)?.scale(&sign(dp * dq)))?;
    let skew = pq.try_add(&br(q, p)?.scale(&sign(dp * dq)))?;
    let derivation = br(&p.try_wedge(q)?, w)?
        .try_sub(&ad(p)?.try_wedge(&br(q, w)?)?)?
        .try_sub(&br(p, w)?.try_wedge(&ad(q)?)?.scale(&sign(dq * dw)))?;
    let scalar = br(&BigElement::scalar(p.dim(), sign(0)), p)?;
    Ok(BigAxioms { equivariance, jacobi, skew, derivation, scalar })
}

/// The two interior-product identities at basis vectors `e_x`, `e_z` and a
/// pure covector `Xi`:
/// `(alpha^{-1})^* i_x Xi - i_{alpha x} (alpha^{-1})^* Xi` and
/// `i_{alpha x} i_z Xi + i_{alpha z} i_x Xi`.
pub fn interior_residuals(x: usize, z: usize, xi: &BigElement, alpha: &TwistMap) -> Result<(BigElement, BigElement)> {
    let n = alpha.dim();
    let (ex, ez) = (unit_vector(n, x), unit_vector(n, z));
    let (ax, az) = (alpha.forward().apply(&ex), alpha.forward().apply(&ez));
    let first = interior(&ex, xi, alpha)?.ad_alpha(alpha)?.try_sub(&interior(&ax, &xi.ad_alpha(alpha)?, alpha)?)?;
    let second = interior(&ax, &interior(&ez, xi, alpha)?, alpha)?.try_add(&interior(
        &az,
        &interior(&ex, xi, alpha)?,
        alpha,
    )?)?;
    Ok((first, second))
}
