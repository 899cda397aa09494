//! Hom-Nijenhuis operators, the deformations they generate, polynomials in
//! them, hom-O-operators and the semidirect product that links the two.

use num_traits::{One, Zero};

use crate::big_bracket::big_bracket;
use crate::cochain::{ad_alpha_cochain, coboundary_unchecked, compose, is_hom_lie, nr_bracket, Cochain};
use crate::error::{Error, Result};
use crate::exterior::{big_from_cochain, BigElement};
use crate::linalg::{unit_vector, Matrix, Rational, TwistMap};
use crate::report::{all_tuples, first_witness, increasing_tuples, Condition, Report};
use crate::structures::{
    big_condition, check_representation, describe_failure, HomLieAlgebra, Representation, RightSymmetricAlgebra,
};

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.to_rows().into_iter().flatten().collect()
}

fn check_square(n: &Matrix, g: &HomLieAlgebra) -> Result<()> {
    if n.rows() != g.dim() || n.cols() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} on a {}-dimensional algebra",
            n.rows(),
            n.cols(),
            g.dim()
        )));
    }
    Ok(())
}

/// `Ad_alpha N = N`, i.e. `alpha N = N alpha`; the witness is the first
/// basis vector where they differ.
pub fn commutation_condition(n: &Matrix, alpha: &TwistMap) -> Condition {
    let an = alpha.forward() * n;
    let na = n * alpha.forward();
    let w = first_witness((0..n.cols()).map(|j| vec![j]), |t| sub(&an.column(t[0]), &na.column(t[0])));
    Condition::from_witness("ad-alpha-invariance", w)
}

fn require_commuting(n: &Matrix, alpha: &TwistMap) -> Result<()> {
    let c = commutation_condition(n, alpha);
    if c.pass {
        return Ok(());
    }
    let w = c.witness.expect("failing condition has a witness");
    let res: Vec<String> = w.residual.iter().map(crate::linalg::format_rational).collect();
    Err(Error::AdAlphaViolation(format!(
        "Ad_alpha N differs from N at e{}: alpha N - N alpha = [{}]",
        w.args[0],
        res.join(", ")
    )))
}

/// `[Nx, Ny] - N[N alpha^{-1} x, y] - N[x, N alpha^{-1} y] + N^2 [alpha^{-1} x, alpha^{-1} y]`
/// at basis vectors `e_i`, `e_j`.
pub fn nijenhuis_residual(n: &Matrix, g: &HomLieAlgebra, i: usize, j: usize) -> Vec<Rational> {
    let d = g.dim();
    let (x, y) = (unit_vector(d, i), unit_vector(d, j));
    let ai = g.alpha().inverse();
    let (xa, ya) = (ai.apply(&x), ai.apply(&y));
    let lhs = g.bracket(&n.apply(&x), &n.apply(&y));
    let r1 = n.apply(&g.bracket(&n.apply(&xa), &y));
    let r2 = n.apply(&g.bracket(&x, &n.apply(&ya)));
    let r3 = n.apply(&n.apply(&g.bracket(&xa, &ya)));
    add(&sub(&sub(&lhs, &r1), &r2), &r3)
}

/// `{N, {N, mu}} - {N o N, mu}` with `N o N` the twisted insertion product.
pub fn nijenhuis_big_residual(n: &Matrix, g: &HomLieAlgebra) -> Result<BigElement> {
    check_square(n, g)?;
    let a = g.alpha();
    let nb = BigElement::from_matrix(n);
    let mu = g.mu_big();
    let nc = Cochain::from_matrix(n);
    let nn = big_from_cochain(&compose(&nc, &nc, a)?)?;
    let lhs = big_bracket(&nb, &big_bracket(&nb, &mu, a)?, a)?;
    lhs.try_sub(&big_bracket(&nn, &mu, a)?)
}

/// Evaluates both the big-bracket condition and the pointwise Nijenhuis
/// identity; fails with [`Error::AdAlphaViolation`] unless `N` commutes with `alpha`.
pub fn is_hom_nijenhuis(n: &Matrix, g: &HomLieAlgebra) -> Result<Report> {
    check_square(n, g)?;
    require_commuting(n, g.alpha())?;
    let big = big_condition("big-bracket", &nijenhuis_big_residual(n, g)?);
    let direct = Condition::from_witness(
        "nijenhuis-identity",
        first_witness(increasing_tuples(g.dim(), 2), |t| nijenhuis_residual(n, g, t[0], t[1])),
    );
    let agree = Condition::from_bool("routes-agree", big.pass == direct.pass);
    Ok(Report::with_conditions("nijenhuis", vec![big, direct, agree]))
}

/// The earlier integrability condition `[Nx, Ny] = N[Nx, y] + N[x, Ny] - N^2[x, y]`,
/// which ignores the twist; kept for comparison.
pub fn untwisted_nijenhuis_residual(n: &Matrix, g: &HomLieAlgebra, i: usize, j: usize) -> Vec<Rational> {
    let d = g.dim();
    let (x, y) = (unit_vector(d, i), unit_vector(d, j));
    let lhs = g.bracket(&n.apply(&x), &n.apply(&y));
    let r1 = n.apply(&g.bracket(&n.apply(&x), &y));
    let r2 = n.apply(&g.bracket(&x, &n.apply(&y)));
    let r3 = n.apply(&n.apply(&g.bracket(&x, &y)));
    add(&sub(&sub(&lhs, &r1), &r2), &r3)
}

/// A polynomial in `t` whose coefficients are bilinear brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationPolynomial {
    pub coefficients: Vec<Cochain>,
}

impl DeformationPolynomial {
    /// `sum_i t^i c_i`.
    pub fn eval(&self, t: &Rational) -> Result<Cochain> {
        let mut out = self.coefficients[0].scale(&Rational::zero());
        let mut power = Rational::one();
        for c in &self.coefficients {
            out = out.try_add(&c.scale(&power))?;
            power *= t;
        }
        Ok(out)
    }
}

/// `omega(x, y) = -{{{N, mu}, alpha^{-1} x}, y}` on basis vectors.
pub fn omega_via_big_bracket(n: &Matrix, g: &HomLieAlgebra) -> Result<Cochain> {
    check_square(n, g)?;
    let a = g.alpha();
    let d = g.dim();
    let nmu = big_bracket(&BigElement::from_matrix(n), &g.mu_big(), a)?;
    let mut err = None;
    let omega = Cochain::from_fn(d, d, 2, |t| {
        let x = BigElement::vector(&a.inverse().column(t[0]));
        let y = BigElement::basis_vector(d, t[1]);
        let r = big_bracket(&nmu, &x, a).and_then(|s| big_bracket(&s, &y, a));
        match r {
            Ok(v) => {
                if !v.is_pure_vector() || v.terms().keys().any(|(_, w)| w.len() != 1) {
                    err = Some(Error::ShapeError("bracket did not reduce to a vector".into()));
                }
                v.vector_part().into_iter().map(|c| -c).collect()
            }
            Err(e) => {
                err = Some(e);
                vec![Rational::zero(); d]
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(omega),
    }
}

/// `omega = dN`, computed with the Nijenhuis-Richardson coboundary.
pub fn omega_via_coboundary(n: &Matrix, g: &HomLieAlgebra) -> Result<Cochain> {
    check_square(n, g)?;
    coboundary_unchecked(&Cochain::from_matrix(n), g.mu(), g.alpha())
}

/// The deformation `mu + t omega` generated by a certified Nijenhuis operator.
pub fn deformation_from_n(n: &Matrix, g: &HomLieAlgebra) -> Result<(Cochain, DeformationPolynomial)> {
    let r = is_hom_nijenhuis(n, g)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotNijenhuis(describe_failure(c)));
    }
    let big = omega_via_big_bracket(n, g)?;
    let nr = omega_via_coboundary(n, g)?;
    if big != nr {
        return Err(Error::ConstructionFailure("the two computations of omega disagree".into()));
    }
    let poly = DeformationPolynomial { coefficients: vec![g.mu().clone(), nr.clone()] };
    Ok((nr, poly))
}

fn cyclic(mut f: impl FnMut(usize, usize, usize) -> Vec<Rational>, i: usize, j: usize, k: usize) -> Vec<Rational> {
    add(&add(&f(i, j, k), &f(j, k, i)), &f(k, i, j))
}

/// Checks that `mu + t omega` is hom-Lie for all `t`: `Ad_alpha omega = omega`,
/// `[omega(x,y), alpha z] + omega([x,y], alpha z) + c.p. = 0` and
/// `omega(omega(x,y), alpha z) + c.p. = 0`, and cross-checks the last two
/// against `(d omega)(alpha x, alpha y, alpha z)` and `[omega, omega](alpha x, alpha y, alpha z)`.
pub fn check_deformation(omega: &Cochain, g: &HomLieAlgebra) -> Result<Report> {
    let d = g.dim();
    let a = g.alpha();
    if omega.source_dim() != d || (omega.arity() != 2 && !omega.is_zero()) {
        return Err(Error::DimensionMismatch("omega must be a bracket on the algebra".into()));
    }
    let omega = crate::cochain::with_arity(omega, 2);
    let e = |i| unit_vector(d, i);
    let ae = |i| a.forward().apply(&e(i));
    let diff = ad_alpha_cochain(&omega, a)?.try_sub(&omega)?;
    let inv =
        Condition::from_witness("ad-alpha-invariance", first_witness(increasing_tuples(d, 2), |t| diff.eval_basis(t)));
    let cocycle_at = |t: &[usize]| {
        cyclic(
            |x, y, z| add(&g.bracket(&omega.eval_basis(&[x, y]), &ae(z)), &omega.eval(&[g.bracket_basis(x, y), ae(z)])),
            t[0],
            t[1],
            t[2],
        )
    };
    let jac_at = |t: &[usize]| cyclic(|x, y, z| omega.eval(&[omega.eval_basis(&[x, y]), ae(z)]), t[0], t[1], t[2]);
    let cocycle = Condition::from_witness("cocycle", first_witness(increasing_tuples(d, 3), cocycle_at));
    let jac = Condition::from_witness("omega-hom-jacobi", first_witness(increasing_tuples(d, 3), jac_at));

    let d_omega = coboundary_unchecked(&omega, g.mu(), a)?;
    let ww = nr_bracket(&omega, &omega, a)?;
    let at_alpha = |c: &Cochain, t: &[usize]| c.eval(&[ae(t[0]), ae(t[1]), ae(t[2])]);
    let d_zero = first_witness(increasing_tuples(d, 3), |t| at_alpha(&d_omega, t)).is_none();
    let ww_zero = first_witness(increasing_tuples(d, 3), |t| at_alpha(&ww, t)).is_none();
    let mut conds = vec![inv.clone(), cocycle.clone(), jac.clone()];
    if inv.pass {
        conds.push(Condition::from_bool("cocycle-matches-d-omega", d_zero == cocycle.pass));
        conds.push(Condition::from_bool("jacobi-matches-omega-omega", ww_zero == jac.pass));
    }
    Ok(Report::with_conditions("deformation", conds))
}

/// Compares `(alpha + tN)[x, y]_t` with `[(alpha + tN) x, (alpha + tN) y]`
/// coefficientwise in `t` (degrees 0, 1, 2) on all basis pairs.
pub fn check_trivial_deformation(n: &Matrix, omega: &Cochain, g: &HomLieAlgebra) -> Result<Report> {
    check_square(n, g)?;
    let d = g.dim();
    let a = g.alpha().forward();
    let omega = crate::cochain::with_arity(omega, 2);
    let e = |i| unit_vector(d, i);
    // Left side: alpha[x,y] + t (alpha omega + N[x,y]) + t^2 N omega.
    // Right side: [ax,ay] + t ([ax,Ny] + [Nx,ay]) + t^2 [Nx,Ny].
    let coeff = |k: usize, i: usize, j: usize| -> Vec<Rational> {
        let (x, y) = (e(i), e(j));
        let b = g.bracket_basis(i, j);
        let w = omega.eval_basis(&[i, j]);
        let (ax, ay, nx, ny) = (a.apply(&x), a.apply(&y), n.apply(&x), n.apply(&y));
        let (lhs, rhs) = match k {
            0 => (a.apply(&b), g.bracket(&ax, &ay)),
            1 => (add(&a.apply(&w), &n.apply(&b)), add(&g.bracket(&ax, &ny), &g.bracket(&nx, &ay))),
            _ => (n.apply(&w), g.bracket(&nx, &ny)),
        };
        sub(&lhs, &rhs)
    };
    let conds = (0..=2)
        .map(|k| {
            let w = first_witness(increasing_tuples(d, 2), |t| coeff(k, t[0], t[1]));
            Condition::from_witness(&format!("t^{k}"), w)
        })
        .collect();
    Ok(Report::with_conditions("trivial-deformation", conds))
}

/// The `i`-fold twisted power `N o ... o N`; the empty power is `alpha`,
/// the unit of `o` on operators commuting with `alpha`.
pub fn circ_power(n: &Matrix, alpha: &TwistMap, i: usize) -> Result<Matrix> {
    if i == 0 {
        return Ok(alpha.forward().clone());
    }
    let nc = Cochain::from_matrix(n);
    let mut p = nc.clone();
    for _ in 1..i {
        p = compose(&nc, &p, alpha)?;
    }
    p.to_matrix()
}

/// `P(N) = sum_i c_i N o ... o N`, certified with [`is_hom_nijenhuis`].
/// The report also records that each twisted power equals `N^i alpha^{-(i-1)}`.
pub fn poly_of_nijenhuis(coeffs: &[Rational], n: &Matrix, g: &HomLieAlgebra) -> Result<(Matrix, Report)> {
    let r = is_hom_nijenhuis(n, g)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotNijenhuis(describe_failure(c)));
    }
    let a = g.alpha();
    let mut p = Matrix::zeros(g.dim(), g.dim());
    let mut powers_ok = true;
    for (i, c) in coeffs.iter().enumerate() {
        let pw = circ_power(n, a, i)?;
        let expected = &n.pow(i as u32) * &a.power(1 - i as i32);
        powers_ok &= pw == expected;
        p = &p + &pw.scale(c);
    }
    let mut report = Report::new("polynomial");
    report.push(Condition::from_bool("power-identity", powers_ok));
    report.absorb("", &is_hom_nijenhuis(&p, g)?);
    Ok((p, report))
}

/// `[N^i x, N^j y] - N^i[x, N^j a^{-i} y] - N^j[N^i a^{-j} x, y] + N^{i+j}[a^{-j} x, a^{-i} y]`.
pub fn powers_residual(n: &Matrix, g: &HomLieAlgebra, i: u32, j: u32, x: usize, y: usize) -> Vec<Rational> {
    let d = g.dim();
    let a = g.alpha();
    let (ex, ey) = (unit_vector(d, x), unit_vector(d, y));
    let (ni, nj, nij) = (n.pow(i), n.pow(j), n.pow(i + j));
    let (ai, aj) = (a.power(-(i as i32)), a.power(-(j as i32)));
    let t0 = g.bracket(&ni.apply(&ex), &nj.apply(&ey));
    let t1 = ni.apply(&g.bracket(&ex, &nj.apply(&ai.apply(&ey))));
    let t2 = nj.apply(&g.bracket(&ni.apply(&aj.apply(&ex)), &ey));
    let t3 = nij.apply(&g.bracket(&aj.apply(&ex), &ai.apply(&ey)));
    add(&sub(&sub(&t0, &t1), &t2), &t3)
}

/// Checks the powers identity for all `0 <= i, j <= max_power` with plain
/// matrix powers, on all ordered basis pairs.
pub fn powers_lemma_check(n: &Matrix, g: &HomLieAlgebra, max_power: u32) -> Result<Report> {
    let r = is_hom_nijenhuis(n, g)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotNijenhuis(describe_failure(c)));
    }
    let mut report = Report::new("powers");
    for i in 0..=max_power {
        for j in 0..=max_power {
            let w = first_witness(all_tuples(g.dim(), 2), |t| powers_residual(n, g, i, j, t[0], t[1]));
            report.push(Condition::from_witness(&format!("i={i},j={j}"), w));
        }
    }
    Ok(report)
}

/// How the action enters the semidirect bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemidirectVariant {
    /// `[(x,u),(y,v)] = ([x,y], rho(x) v - rho(y) u)`.
    Plain,
    /// `[(x,u),(y,v)] = ([x,y], rho(alpha x) v - rho(alpha y) u)`.
    Twisted,
}

/// The bracket on `V (+) W` for the given variant, with twist `alpha (+) beta`.
pub fn semidirect_bracket(g: &HomLieAlgebra, rep: &Representation, variant: SemidirectVariant) -> (Cochain, TwistMap) {
    let (n, w) = (g.dim(), rep.wdim());
    let twist = g.alpha().direct_sum(rep.beta());
    let act = |x: usize| -> Matrix {
        match variant {
            SemidirectVariant::Plain => rep.rho_basis(x).clone(),
            SemidirectVariant::Twisted => rep.rho(&g.alpha().forward().column(x)),
        }
    };
    let mu = Cochain::from_fn(n + w, n + w, 2, |t| {
        let (i, j) = (t[0], t[1]);
        let mut out = vec![Rational::zero(); n + w];
        if j < n {
            out[..n].clone_from_slice(&g.bracket_basis(i, j));
        } else if i < n {
            // [(e_i, 0), (0, f_b)] = (0, rho(e_i) f_b)
            let col = act(i).column(j - n);
            out[n..].clone_from_slice(&col);
        }
        out
    });
    (mu, twist)
}

/// The semidirect product `V x_rho W`, certified with [`is_hom_lie`]; the
/// plain variant is tried first, then the twisted one.
pub fn semidirect_product(g: &HomLieAlgebra, rep: &Representation) -> Result<(HomLieAlgebra, SemidirectVariant)> {
    let r = check_representation(rep, g)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotRepresentation(describe_failure(c)));
    }
    for variant in [SemidirectVariant::Plain, SemidirectVariant::Twisted] {
        let (mu, twist) = semidirect_bracket(g, rep, variant);
        if is_hom_lie(&mu, &twist)?.pass() {
            return Ok((HomLieAlgebra::new_unchecked(mu, twist), variant));
        }
    }
    Err(Error::ConstructionFailure("no semidirect bracket variant is hom-Lie".into()))
}

fn check_t(t: &Matrix, g: &HomLieAlgebra, rep: &Representation) -> Result<()> {
    if t.rows() != g.dim() || t.cols() != rep.wdim() || rep.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "T is {}x{}, expected {}x{}",
            t.rows(),
            t.cols(),
            g.dim(),
            rep.wdim()
        )));
    }
    Ok(())
}

/// `[Tu, Tv] - T(rho(T beta^{-1} u) v - rho(T beta^{-1} v) u)` at basis vectors of `W`.
pub fn o_operator_residual(t: &Matrix, g: &HomLieAlgebra, rep: &Representation, a: usize, b: usize) -> Vec<Rational> {
    let w = rep.wdim();
    let (u, v) = (unit_vector(w, a), unit_vector(w, b));
    let bi = rep.beta().inverse();
    let lhs = g.bracket(&t.apply(&u), &t.apply(&v));
    let x = rep.rho(&t.apply(&bi.apply(&u))).apply(&v);
    let y = rep.rho(&t.apply(&bi.apply(&v))).apply(&u);
    sub(&lhs, &t.apply(&sub(&x, &y)))
}

/// Checks `T beta = alpha T` and the transport condition on all basis pairs of `W`.
pub fn is_hom_o_operator(t: &Matrix, g: &HomLieAlgebra, rep: &Representation) -> Result<Report> {
    check_t(t, g, rep)?;
    let tb = t * rep.beta().forward();
    let at = g.alpha().forward() * t;
    let inter = first_witness((0..rep.wdim()).map(|j| vec![j]), |c| sub(&tb.column(c[0]), &at.column(c[0])));
    let cond = first_witness(increasing_tuples(rep.wdim(), 2), |p| o_operator_residual(t, g, rep, p[0], p[1]));
    Ok(Report::with_conditions(
        "o-operator",
        vec![Condition::from_witness("intertwining", inter), Condition::from_witness("o-identity", cond)],
    ))
}

/// The block operator `[[0, T], [0, 0]]` on `V (+) W`.
pub fn block_operator(t: &Matrix) -> Matrix {
    let (n, w) = (t.rows(), t.cols());
    let mut m = Matrix::zeros(n + w, n + w);
    for i in 0..n {
        for j in 0..w {
            m[(i, n + j)] = t[(i, j)].clone();
        }
    }
    m
}

/// Outcome of comparing `T` with its block operator on the semidirect product.
#[derive(Clone, Debug)]
pub struct OOperatorBridge {
    pub o_operator: bool,
    pub block_nijenhuis: bool,
    pub report: Report,
}

/// Evaluates `T` as an O-operator and `[[0, T], [0, 0]]` as a Nijenhuis
/// operator on the semidirect product. A block that does not commute with
/// the twist counts as not Nijenhuis.
pub fn o_operator_bridge(t: &Matrix, g: &HomLieAlgebra, rep: &Representation) -> Result<OOperatorBridge> {
    let o = is_hom_o_operator(t, g, rep)?;
    let (sd, _) = semidirect_product(g, rep)?;
    let block = block_operator(t);
    let mut report = Report::new("o-operator-bridge");
    report.absorb("", &o);
    let block_nijenhuis = match is_hom_nijenhuis(&block, &sd) {
        Ok(r) => {
            report.absorb("block ", &r);
            r.pass()
        }
        Err(Error::AdAlphaViolation(_)) => {
            report.push(Condition::failed("block ad-alpha-invariance", None));
            false
        }
        Err(e) => return Err(e),
    };
    report.push(Condition::from_bool("routes-agree", o.pass() == block_nijenhuis));
    Ok(OOperatorBridge { o_operator: o.pass(), block_nijenhuis, report })
}

/// The product `u * v = rho(T beta^{-1} v) u` on `W` with twist `beta`.
pub fn right_symmetric_from_o(t: &Matrix, g: &HomLieAlgebra, rep: &Representation) -> Result<RightSymmetricAlgebra> {
    let r = is_hom_o_operator(t, g, rep)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotOOperator(describe_failure(c)));
    }
    let w = rep.wdim();
    let bi = rep.beta().inverse();
    let table =
        (0..w).map(|i| (0..w).map(|j| rep.rho(&t.apply(&bi.column(j))).apply(&unit_vector(w, i))).collect()).collect();
    RightSymmetricAlgebra::new(table, rep.beta().clone())
}

/// A basis of the matrices commuting with `alpha`.
pub fn commutant_basis(alpha: &TwistMap) -> Vec<Matrix> {
    let n = alpha.dim();
    let a = alpha.forward();
    // Column (p*n + q) is the image of E_pq under X -> aX - Xa.
    let mut m = Matrix::zeros(n * n, n * n);
    for p in 0..n {
        for q in 0..n {
            let mut e = Matrix::zeros(n, n);
            e[(p, q)] = Rational::one();
            let img = &(a * &e) - &(&e * a);
            for (r, x) in flatten(&img).into_iter().enumerate() {
                m[(r, p * n + q)] = x;
            }
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).expect("square"))
        .collect()
}

/// A linear combination of matrices.
pub fn combine(basis: &[Matrix], coeffs: &[Rational], n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        out = &out + &b.scale(c);
    }
    out
}

/// Matrices `T: W -> V` with `T beta = alpha T`.
pub fn intertwiner_basis(alpha: &TwistMap, beta: &TwistMap) -> Vec<Matrix> {
    let (n, w) = (alpha.dim(), beta.dim());
    let mut m = Matrix::zeros(n * w, n * w);
    for p in 0..n {
        for q in 0..w {
            let mut e = Matrix::zeros(n, w);
            e[(p, q)] = Rational::one();
            let img = &(&e * beta.forward()) - &(alpha.forward() * &e);
            for (r, x) in flatten(&img).into_iter().enumerate() {
                m[(r, p * w + q)] = x;
            }
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(w).map(|r| r.to_vec()).collect()).expect("rectangular"))
        .collect()
}
