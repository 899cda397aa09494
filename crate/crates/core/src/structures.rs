//! Hom-Lie algebras, representations, bialgebras and their quasi variants,
//! and hom-right-symmetric algebras.

use num_traits::{One, Zero};

use crate::big_bracket::big_bracket;
use crate::cochain::{ad_alpha_cochain, compose, is_hom_lie, with_arity, Cochain};
use crate::error::{Error, Result};
use crate::exterior::{big_from_cochain, BigElement, MultiIndex};
use crate::linalg::{add_scaled, frac, is_zero_vec, unit_vector, Matrix, Rational, TwistMap};
use crate::report::{all_tuples, first_witness, increasing_tuples, Condition, Report, Witness};

/// A certified regular hom-Lie algebra `(V, mu, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    mu: Cochain,
    alpha: TwistMap,
}

impl HomLieAlgebra {
    /// Certifies `(mu, alpha)` with [`is_hom_lie`].
    pub fn new(mu: Cochain, alpha: TwistMap) -> Result<Self> {
        let r = is_hom_lie(&mu, &alpha)?;
        if let Some(c) = r.first_failure() {
            return Err(Error::NotHomLie(describe_failure(c)));
        }
        Ok(HomLieAlgebra { mu: with_arity(&mu, 2), alpha })
    }

    /// Packages data without certification, for checks that report on it.
    pub fn new_unchecked(mu: Cochain, alpha: TwistMap) -> Self {
        HomLieAlgebra { mu: with_arity(&mu, 2), alpha }
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    pub fn mu(&self) -> &Cochain {
        &self.mu
    }

    pub fn alpha(&self) -> &TwistMap {
        &self.alpha
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mu.eval(&[x.to_vec(), y.to_vec()])
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.mu.eval_basis(&[i, j])
    }

    /// `mu` as an element of `Lambda^2 V* (x) V`.
    pub fn mu_big(&self) -> BigElement {
        big_from_cochain(&self.mu).expect("V-valued")
    }
}

pub(crate) fn describe_failure(c: &Condition) -> String {
    match &c.witness {
        Some(w) => format!("{} fails at {:?}", c.name, w.args),
        None => format!("{} fails", c.name),
    }
}

/// A representation `rho: V -> gl(W)` with respect to `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    rho: Vec<Matrix>,
    beta: TwistMap,
}

impl Representation {
    /// `rho[i]` is the action of the basis vector `e_i`.
    pub fn new(rho: Vec<Matrix>, beta: TwistMap) -> Result<Self> {
        let w = beta.dim();
        if rho.iter().any(|m| m.rows() != w || m.cols() != w) {
            return Err(Error::DimensionMismatch(format!("rho matrices must be {w}x{w}")));
        }
        Ok(Representation { rho, beta })
    }

    /// The adjoint representation `rho(x) = mu(x, .)` with `beta = alpha`.
    pub fn adjoint(g: &HomLieAlgebra) -> Self {
        Self::adjoint_raw(g.mu(), g.alpha())
    }

    pub(crate) fn adjoint_raw(mu: &Cochain, alpha: &TwistMap) -> Self {
        let n = alpha.dim();
        let rho = (0..n)
            .map(|i| {
                let cols: Vec<Vec<Rational>> = (0..n).map(|j| with_arity(mu, 2).eval_basis(&[i, j])).collect();
                Matrix::from_columns(&cols).expect("square")
            })
            .collect();
        Representation { rho, beta: alpha.clone() }
    }

    /// The zero action of a `dim`-dimensional algebra on `W` twisted by `beta`.
    pub fn trivial(dim: usize, beta: TwistMap) -> Self {
        let w = beta.dim();
        Representation { rho: vec![Matrix::zeros(w, w); dim], beta }
    }

    /// Dimension of the acting algebra.
    pub fn dim(&self) -> usize {
        self.rho.len()
    }

    pub fn wdim(&self) -> usize {
        self.beta.dim()
    }

    pub fn beta(&self) -> &TwistMap {
        &self.beta
    }

    pub fn rho_matrices(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn rho_basis(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    /// `rho(x)` for an arbitrary vector.
    pub fn rho(&self, x: &[Rational]) -> Matrix {
        let w = self.wdim();
        let mut m = Matrix::zeros(w, w);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.rho[i].scale(c);
            }
        }
        m
    }
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.to_rows().into_iter().flatten().collect()
}

/// Checks `rho(alpha x) beta = beta rho(x)` and
/// `rho([x, y]) beta = rho(alpha x) rho(y) - rho(alpha y) rho(x)`.
pub fn check_representation(rep: &Representation, g: &HomLieAlgebra) -> Result<Report> {
    check_representation_raw(rep, g.mu(), g.alpha())
}

pub(crate) fn check_representation_raw(rep: &Representation, mu: &Cochain, alpha: &TwistMap) -> Result<Report> {
    let n = alpha.dim();
    if rep.dim() != n {
        return Err(Error::DimensionMismatch(format!("{} rho matrices for dimension {n}", rep.dim())));
    }
    let mu = with_arity(mu, 2);
    let beta = rep.beta().forward();
    let ax: Vec<Matrix> = (0..n).map(|i| rep.rho(&alpha.forward().column(i))).collect();
    let equi =
        first_witness((0..n).map(|i| vec![i]), |t| flatten(&(&(&ax[t[0]] * beta) - &(beta * rep.rho_basis(t[0])))));
    let compat = first_witness(increasing_tuples(n, 2), |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = &rep.rho(&mu.eval_basis(&[i, j])) * beta;
        let rhs = &(&ax[i] * rep.rho_basis(j)) - &(&ax[j] * rep.rho_basis(i));
        flatten(&(&lhs - &rhs))
    });
    Ok(Report::with_conditions(
        "representation",
        vec![
            Condition::from_witness("beta-equivariance", equi),
            Condition::from_witness("bracket-compatibility", compat),
        ],
    ))
}

/// A condition that passes when the element vanishes; on failure the
/// witness is its first term (covector then vector indices, 1-based).
pub fn big_condition(name: &str, residual: &BigElement) -> Condition {
    match residual.terms().iter().next() {
        None => Condition::passed(name),
        Some(((c, v), x)) => {
            let mut args: Vec<usize> = c.iter().collect();
            args.extend(v.iter());
            Condition::failed(name, Some(Witness::new(&args, vec![x.clone()]))).with_detail(residual.to_text())
        }
    }
}

fn check_delta_shape(delta: &BigElement, dim: usize) -> Result<()> {
    if delta.dim() != dim {
        return Err(Error::DimensionMismatch("cobracket over the wrong dimension".into()));
    }
    if delta.terms().keys().any(|(c, v)| c.len() != 1 || v.len() != 2) {
        return Err(Error::ShapeError("a cobracket must lie in V* (x) Lambda^2 V".into()));
    }
    Ok(())
}

/// `Delta(x)` as an element of `Lambda^2 V`.
pub fn apply_delta(delta: &BigElement, x: &[Rational]) -> BigElement {
    let mut out = BigElement::zero(delta.dim());
    for ((c, v), d) in delta.terms() {
        let k = c.iter().next().expect("one covector");
        if !x[k].is_zero() {
            out.add_term(MultiIndex::EMPTY, *v, d * &x[k]);
        }
    }
    out
}

/// Coordinates of a bivector over the increasing pairs.
fn bivector_coords(b: &BigElement) -> Vec<Rational> {
    increasing_tuples(b.dim(), 2)
        .iter()
        .map(|t| b.coeff(MultiIndex::EMPTY, MultiIndex::from_indices(t).expect("pair")))
        .collect()
}

/// `Delta^*(xi^a, xi^b) = sum_k D_k^{ab} xi^k`, read off the tensor
/// `sum D_k^{ij} xi^k (x) e_i ^ e_j`, without any invariance check.
pub fn dual_bracket_unchecked(delta: &BigElement) -> Result<Cochain> {
    let n = delta.dim();
    check_delta_shape(delta, n)?;
    let mut out = Cochain::zero(n, n, 2);
    for ((c, v), d) in delta.terms() {
        let k = c.iter().next().expect("one covector");
        out.add_at(*v, k, d.clone());
    }
    Ok(out)
}

fn delta_invariance(delta: &BigElement, alpha: &TwistMap) -> Result<Condition> {
    let diff = delta.ad_alpha(alpha)?.try_sub(delta)?;
    Ok(big_condition("ad-alpha-invariance", &diff))
}

fn require(c: Condition) -> Result<()> {
    if c.pass {
        Ok(())
    } else {
        Err(Error::AdAlphaViolation(format!(
            "{} fails{}",
            c.name,
            c.detail.map(|d| format!(": {d}")).unwrap_or_default()
        )))
    }
}

/// The bracket on `V*` dual to `Delta`; requires `Ad_alpha Delta = Delta`.
pub fn dual_bracket(delta: &BigElement, alpha: &TwistMap) -> Result<Cochain> {
    require(delta_invariance(delta, alpha)?)?;
    dual_bracket_unchecked(delta)
}

/// Compares `Delta(x) = {Delta, x}` and
/// `Delta^*(xi, eta) = -{{Delta, (alpha^3)^* xi}, (alpha^2)^* eta}` with the
/// direct tensor readings on basis elements.
pub fn dual_bracket_routes(delta: &BigElement, alpha: &TwistMap) -> Result<Report> {
    require(delta_invariance(delta, alpha)?)?;
    let n = alpha.dim();
    let dstar = dual_bracket_unchecked(delta)?;
    let via_x = first_witness((0..n).map(|i| vec![i]), |t| {
        let e = unit_vector(n, t[0]);
        let big = big_bracket(delta, &BigElement::vector(&e), alpha).expect("dims");
        let diff = big.try_sub(&apply_delta(delta, &e)).expect("dims");
        bivector_coords(&diff)
    });
    let via_dual = first_witness(increasing_tuples(n, 2), |t| {
        let xi = BigElement::basis_covector(n, t[0]).dual_pow(alpha, 3).expect("dims");
        let eta = BigElement::basis_covector(n, t[1]).dual_pow(alpha, 2).expect("dims");
        let inner = big_bracket(delta, &xi, alpha).expect("dims");
        let big = big_bracket(&inner, &eta, alpha).expect("dims").scale(&-Rational::one());
        let direct = BigElement::covector(&dstar.eval_basis(t));
        big.try_sub(&direct).expect("dims").covector_part()
    });
    Ok(Report::with_conditions(
        "dual-bracket",
        vec![
            Condition::from_witness("delta-via-bracket", via_x),
            Condition::from_witness("dual-via-bracket", via_dual),
        ],
    ))
}

/// `ad_x(Y) = sum mu(x, y_a) ^ y_b + y_a ^ mu(x, y_b)` on a bivector `Y`.
fn ad_on_bivector(mu: &Cochain, x: &[Rational], b: &BigElement) -> BigElement {
    let n = b.dim();
    let mut out = BigElement::zero(n);
    for ((_, v), c) in b.terms() {
        let idx = v.to_vec();
        let ya = BigElement::vector(&unit_vector(n, idx[0]));
        let yb = BigElement::vector(&unit_vector(n, idx[1]));
        let ma = BigElement::vector(&mu.eval(&[x.to_vec(), unit_vector(n, idx[0])]));
        let mb = BigElement::vector(&mu.eval(&[x.to_vec(), unit_vector(n, idx[1])]));
        let t = ma.wedge(&yb).try_add(&ya.wedge(&mb)).expect("dims");
        out = out.try_add(&t.scale(c)).expect("dims");
    }
    out
}

/// Residual of `Delta(mu(x, y)) = ad_{alpha x} Delta(y) - ad_{alpha y} Delta(x)`
/// at basis vectors `e_i`, `e_j`, as bivector coordinates.
pub fn cocycle_residual(mu: &Cochain, alpha: &TwistMap, delta: &BigElement, i: usize, j: usize) -> Vec<Rational> {
    let n = alpha.dim();
    let mu = with_arity(mu, 2);
    let (x, y) = (unit_vector(n, i), unit_vector(n, j));
    let lhs = apply_delta(delta, &mu.eval(&[x.clone(), y.clone()]));
    let ax = alpha.forward().apply(&x);
    let ay = alpha.forward().apply(&y);
    let rhs = ad_on_bivector(&mu, &ax, &apply_delta(delta, &y))
        .try_sub(&ad_on_bivector(&mu, &ay, &apply_delta(delta, &x)))
        .expect("dims");
    bivector_coords(&lhs.try_sub(&rhs).expect("dims"))
}

/// Both descriptions of a hom-Lie bialgebra evaluated side by side.
#[derive(Clone, Debug)]
pub struct BialgebraRoutes {
    /// `Ad_alpha mu = mu`, `Ad_alpha Delta = Delta` and `{mu + Delta, mu + Delta} = 0`.
    pub big: bool,
    /// Items (i), (ii) and (iii): hom-Lie on `V`, hom-Lie on `V*`, cocycle.
    pub itemized: bool,
    pub report: Report,
}

/// Evaluates the single big-bracket condition and the itemized conditions
/// without requiring the invariance preconditions.
pub fn compare_bialgebra_routes(mu: &Cochain, alpha: &TwistMap, delta: &BigElement) -> Result<BialgebraRoutes> {
    let n = alpha.dim();
    check_delta_shape(delta, n)?;
    let mu = with_arity(mu, 2);
    let mu_big = big_from_cochain(&mu)?;
    let mut report = Report::new("bialgebra");
    let mu_inv = big_condition("mu-invariance", &mu_big.ad_alpha(alpha)?.try_sub(&mu_big)?);
    let d_inv = delta_invariance(delta, alpha)?;
    let total = mu_big.try_add(delta)?;
    let tt = big_condition("big-bracket", &big_bracket(&total, &total, alpha)?);
    let big = mu_inv.pass && d_inv.pass && tt.pass;
    report.push(mu_inv);
    report.push(d_inv);
    report.push(tt);

    let r1 = is_hom_lie(&mu, alpha)?;
    let r2 = is_hom_lie(&dual_bracket_unchecked(delta)?, &alpha.dual_twist())?;
    let cocycle = first_witness(increasing_tuples(n, 2), |t| cocycle_residual(&mu, alpha, delta, t[0], t[1]));
    let c3 = Condition::from_witness("(iii) cocycle", cocycle);
    let itemized = r1.pass() && r2.pass() && c3.pass;
    report.absorb("(i) ", &r1);
    report.absorb("(ii) dual ", &r2);
    report.push(c3);
    report.push(Condition::from_bool("routes-agree", big == itemized));
    Ok(BialgebraRoutes { big, itemized, report })
}

/// Checks `{mu + Delta, mu + Delta}_alpha = 0` and the itemized conditions.
/// Fails with [`Error::AdAlphaViolation`] when `mu` or `Delta` is not
/// `Ad_alpha`-invariant.
pub fn check_bialgebra(g: &HomLieAlgebra, delta: &BigElement) -> Result<Report> {
    check_delta_shape(delta, g.dim())?;
    let mu_big = g.mu_big();
    require(big_condition("mu-invariance", &mu_big.ad_alpha(g.alpha())?.try_sub(&mu_big)?))?;
    require(delta_invariance(delta, g.alpha())?)?;
    let mut r = compare_bialgebra_routes(g.mu(), g.alpha(), delta)?.report;
    r.conditions.retain(|c| !c.name.ends_with("invariance"));
    Ok(r)
}

fn quasi_preconditions(g: &HomLieAlgebra, delta: &BigElement) -> Result<()> {
    check_delta_shape(delta, g.dim())?;
    let mu_big = g.mu_big();
    require(big_condition("mu-invariance", &mu_big.ad_alpha(g.alpha())?.try_sub(&mu_big)?))?;
    require(delta_invariance(delta, g.alpha())?)
}

/// Components of `{T, T}` for `T = phi + mu + Delta`, in order:
/// `{mu,mu}`, `1/2 {Delta,Delta} + {mu,phi}`, `{mu,Delta}`, `{Delta,phi}`, and the total.
pub fn quasi_phi_components(g: &HomLieAlgebra, delta: &BigElement, phi: &BigElement) -> Result<[BigElement; 5]> {
    let a = g.alpha();
    let mu = g.mu_big();
    let half = frac(1, 2);
    let mm = big_bracket(&mu, &mu, a)?;
    let c2 = big_bracket(delta, delta, a)?.scale(&half).try_add(&big_bracket(&mu, phi, a)?)?;
    let c3 = big_bracket(&mu, delta, a)?;
    let c4 = big_bracket(delta, phi, a)?;
    let t = phi.try_add(&mu)?.try_add(delta)?;
    let total = big_bracket(&t, &t, a)?;
    Ok([mm, c2, c3, c4, total])
}

/// Components of `{T, T}` for `T = mu + Delta + psi`, in order:
/// `{Delta,Delta}`, `1/2 {mu,mu} + {Delta,psi}`, `{mu,Delta}`, `{mu,psi}`, and the total.
pub fn quasi_psi_components(g: &HomLieAlgebra, delta: &BigElement, psi: &BigElement) -> Result<[BigElement; 5]> {
    let a = g.alpha();
    let mu = g.mu_big();
    let half = frac(1, 2);
    let dd = big_bracket(delta, delta, a)?;
    let c2 = big_bracket(&mu, &mu, a)?.scale(&half).try_add(&big_bracket(delta, psi, a)?)?;
    let c3 = big_bracket(&mu, delta, a)?;
    let c4 = big_bracket(&mu, psi, a)?;
    let t = mu.try_add(delta)?.try_add(psi)?;
    let total = big_bracket(&t, &t, a)?;
    Ok([dd, c2, c3, c4, total])
}

/// `c1 + 2 c2 + 2 c3 + 2 c4`: the total recovered from the components.
pub fn recombine(c: &[BigElement; 5]) -> BigElement {
    let two = Rational::from_integer(2.into());
    c[0].try_add(&c[1].scale(&two))
        .and_then(|s| s.try_add(&c[2].scale(&two)))
        .and_then(|s| s.try_add(&c[3].scale(&two)))
        .expect("dims")
}

/// Checks `{phi + mu + Delta, phi + mu + Delta}_alpha = 0` with `alpha(phi) = phi`.
pub fn check_lie_quasi_bialgebra(g: &HomLieAlgebra, delta: &BigElement, phi: &BigElement) -> Result<Report> {
    quasi_preconditions(g, delta)?;
    if phi.dim() != g.dim() || phi.terms().keys().any(|(c, v)| !c.is_empty() || v.len() != 3) {
        return Err(Error::ShapeError("phi must lie in Lambda^3 V".into()));
    }
    require(big_condition("phi-invariance", &phi.apply_to_vectors(g.alpha().forward()).try_sub(phi)?))?;
    let c = quasi_phi_components(g, delta, phi)?;
    let names = ["mu-mu", "half-delta-delta+mu-phi", "mu-delta", "delta-phi"];
    let mut r = Report::new("quasi-phi");
    r.push(big_condition("big-bracket", &c[4]));
    for (name, comp) in names.iter().zip(&c) {
        r.push(big_condition(name, comp));
    }
    r.push(big_condition("decomposition", &recombine(&c).try_sub(&c[4])?));
    Ok(r)
}

/// Checks `{mu + Delta + psi, mu + Delta + psi}_alpha = 0` with `(alpha^{-1})^* psi = psi`.
pub fn check_quasi_lie_bialgebra(g: &HomLieAlgebra, delta: &BigElement, psi: &BigElement) -> Result<Report> {
    quasi_preconditions(g, delta)?;
    if psi.dim() != g.dim() || psi.terms().keys().any(|(c, v)| c.len() != 3 || !v.is_empty()) {
        return Err(Error::ShapeError("psi must lie in Lambda^3 V*".into()));
    }
    require(big_condition("psi-invariance", &psi.ad_alpha(g.alpha())?.try_sub(psi)?))?;
    let c = quasi_psi_components(g, delta, psi)?;
    let names = ["delta-delta", "half-mu-mu+delta-psi", "mu-delta", "mu-psi"];
    let mut r = Report::new("quasi-psi");
    r.push(big_condition("big-bracket", &c[4]));
    for (name, comp) in names.iter().zip(&c) {
        r.push(big_condition(name, comp));
    }
    r.push(big_condition("decomposition", &recombine(&c).try_sub(&c[4])?));
    Ok(r)
}

/// A product `*` on `V` (full table, not antisymmetrized) with a twist `gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSymmetricAlgebra {
    /// `table[i][j]` holds the coordinates of `e_i * e_j`.
    table: Vec<Vec<Vec<Rational>>>,
    gamma: TwistMap,
}

impl RightSymmetricAlgebra {
    pub fn new(table: Vec<Vec<Vec<Rational>>>, gamma: TwistMap) -> Result<Self> {
        let n = gamma.dim();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("product table must be {n}x{n} of {n}-vectors")));
        }
        Ok(RightSymmetricAlgebra { table, gamma })
    }

    pub fn zero(gamma: TwistMap) -> Self {
        let n = gamma.dim();
        RightSymmetricAlgebra { table: vec![vec![vec![Rational::zero(); n]; n]; n], gamma }
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self) -> &TwistMap {
        &self.gamma
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &self.table[i][j], &(a * b));
                }
            }
        }
        out
    }
}

/// Checks that `gamma` preserves `*` and that
/// `(x*y)*gamma(z) - gamma(x)*(y*z) = (x*z)*gamma(y) - gamma(x)*(z*y)` on all basis triples.
pub fn check_right_symmetric(rs: &RightSymmetricAlgebra) -> Report {
    let n = rs.dim();
    let g = |v: &[Rational]| rs.gamma().forward().apply(v);
    let e = |i| unit_vector(n, i);
    let mult = first_witness(all_tuples(n, 2), |t| {
        let lhs = g(&rs.product(&e(t[0]), &e(t[1])));
        let rhs = rs.product(&g(&e(t[0])), &g(&e(t[1])));
        sub(&lhs, &rhs)
    });
    let ident = first_witness(all_tuples(n, 3), |t| {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        let side = |y: &[Rational], z: &[Rational]| {
            sub(&rs.product(&rs.product(&x, y), &g(z)), &rs.product(&g(&x), &rs.product(y, z)))
        };
        sub(&side(&y, &z), &side(&z, &y))
    });
    Report::with_conditions(
        "right-symmetric",
        vec![Condition::from_witness("multiplicativity", mult), Condition::from_witness("right-symmetry", ident)],
    )
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The commutator bracket `[x, y] = x*y - y*x`, certified as a hom-Lie algebra.
pub fn commutator_hom_lie(rs: &RightSymmetricAlgebra) -> Result<HomLieAlgebra> {
    let r = check_right_symmetric(rs);
    if let Some(c) = r.first_failure() {
        return Err(Error::NotRightSymmetric(describe_failure(c)));
    }
    let n = rs.dim();
    let mu = Cochain::from_fn(n, n, 2, |t| sub(&rs.table[t[0]][t[1]], &rs.table[t[1]][t[0]]));
    HomLieAlgebra::new(mu, rs.gamma().clone())
}

/// Residual of `mu(x, y) = -{{mu, alpha^{-1} x}, y}` at basis vectors.
pub fn mu_from_bracket_residual(g: &HomLieAlgebra, i: usize, j: usize) -> Vec<Rational> {
    let n = g.dim();
    let a = g.alpha();
    let x = BigElement::vector(&a.inverse().column(i));
    let y = BigElement::basis_vector(n, j);
    let inner = big_bracket(&g.mu_big(), &x, a).expect("dims");
    let big = big_bracket(&inner, &y, a).expect("dims");
    let mut out = g.bracket_basis(i, j);
    add_scaled(&mut out, &big.vector_part(), &Rational::one());
    if !is_zero_vec(&out) {
        return out;
    }
    // Anything outside the vector part is also a discrepancy.
    let rest = big.try_sub(&BigElement::vector(&big.vector_part())).expect("dims");
    if rest.is_zero() {
        out
    } else {
        vec![Rational::one(); n]
    }
}

/// The insertion algebra `(C(V, V), o, Ad_alpha)` on cochains of arity at
/// most `max_arity`, with products of higher arity dropped (nothing is lost
/// once `max_arity >= dim`). Basis elements are ordered by arity, then
/// argument set, then target index; the second value lists their degrees.
pub fn cochain_algebra(alpha: &TwistMap, max_arity: usize) -> Result<(RightSymmetricAlgebra, Vec<i64>)> {
    let n = alpha.dim();
    let mut basis = Vec::new();
    for k in 0..=max_arity.min(n) {
        for s in MultiIndex::subsets(n, k) {
            for t in 0..n {
                let mut c = Cochain::zero(n, n, k);
                c.set(s, unit_vector(n, t));
                basis.push(c);
            }
        }
    }
    let coords = |c: &Cochain| -> Vec<Rational> {
        basis
            .iter()
            .map(|b| {
                if b.arity() != c.arity() {
                    return Rational::zero();
                }
                let (s, v) = b.values().iter().next().expect("basis element");
                let t = v.iter().position(|x| !x.is_zero()).expect("unit");
                c.value_at(*s)[t].clone()
            })
            .collect()
    };
    let mut table = Vec::with_capacity(basis.len());
    for p in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for q in &basis {
            let pq = compose(p, q, alpha)?;
            let keep = pq.arity() <= max_arity;
            row.push(if keep { coords(&pq) } else { vec![Rational::zero(); basis.len()] });
        }
        table.push(row);
    }
    let gamma = Matrix::from_columns(
        &basis.iter().map(|b| ad_alpha_cochain(b, alpha).map(|a| coords(&a))).collect::<Result<Vec<_>>>()?,
    )?;
    let degrees = basis.iter().map(Cochain::degree).collect();
    Ok((RightSymmetricAlgebra::new(table, TwistMap::new(gamma)?)?, degrees))
}
