//! Built-in instances and the named checks they are declared to pass.

use crate::cochain::{is_hom_lie, Cochain};
use crate::error::{Error, Result};
use crate::exterior::BigElement;
use crate::instance::Instance;
use crate::linalg::{Matrix, TwistMap};
use crate::nijenhuis::{
    check_deformation, check_trivial_deformation, deformation_from_n, is_hom_nijenhuis, is_hom_o_operator,
};
use crate::report::{first_witness, increasing_tuples, Condition, Report};
use crate::structures::{
    check_bialgebra, check_lie_quasi_bialgebra, check_quasi_lie_bialgebra, check_representation, check_right_symmetric,
    describe_failure, HomLieAlgebra,
};

const FILES: &[(&str, &str)] = &[
    ("abelian2", include_str!("../corpus/abelian2.json")),
    ("affine2", include_str!("../corpus/affine2.json")),
    ("sl2", include_str!("../corpus/sl2.json")),
    ("sl2_yau", include_str!("../corpus/sl2_yau.json")),
    ("bialgebra2", include_str!("../corpus/bialgebra2.json")),
    ("o_operator2", include_str!("../corpus/o_operator2.json")),
    ("heisenberg3", include_str!("../corpus/heisenberg3.json")),
    ("quasi3", include_str!("../corpus/quasi3.json")),
];

/// Names of the built-in instances, in corpus order.
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// The shipped text of a corpus file.
pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses a corpus instance without running its checks.
pub fn load_unchecked(name: &str) -> Result<Instance> {
    let text = source(name).ok_or_else(|| Error::ParseError(format!("no corpus instance `{name}`")))?;
    Instance::parse(text)
}

/// Parses a corpus instance and runs its declared checks.
pub fn load(name: &str) -> Result<Instance> {
    let inst = load_unchecked(name)?;
    let r = certify(&inst)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::ConstructionFailure(format!("{name}: {}", describe_failure(c))));
    }
    Ok(inst)
}

/// All corpus instances, each certified.
pub fn all() -> Result<Vec<Instance>> {
    names().into_iter().map(load).collect()
}

/// Runs every declared check of the instance.
pub fn certify(inst: &Instance) -> Result<Report> {
    let mut report = Report::new(format!("certify {}", inst.name));
    for c in &inst.checks {
        report.absorb(&format!("{c}: "), &run_check(inst, c)?);
    }
    Ok(report)
}

fn missing(field: &str) -> Error {
    Error::ParseError(format!("instance has no `{field}`"))
}

/// Runs a named check: `lie`, `rep`, `bialgebra`, `quasi-phi`, `quasi-psi`,
/// `right-symmetric`, `nijenhuis`, `o-operator` or `deformation`.
pub fn run_check(inst: &Instance, check: &str) -> Result<Report> {
    let g = || inst.algebra_unchecked();
    let certified = || -> Result<HomLieAlgebra> { inst.algebra() };
    let delta = || inst.delta.clone().unwrap_or_else(|| BigElement::zero(inst.dim()));
    match check {
        "lie" => is_hom_lie(&inst.mu, &inst.alpha),
        "rep" => check_representation(inst.rep.as_ref().ok_or_else(|| missing("rep"))?, &certified()?),
        "bialgebra" => check_bialgebra(&g(), &delta()),
        "quasi-phi" => check_lie_quasi_bialgebra(&g(), &delta(), inst.phi.as_ref().ok_or_else(|| missing("phi"))?),
        "quasi-psi" => check_quasi_lie_bialgebra(&g(), &delta(), inst.psi.as_ref().ok_or_else(|| missing("psi"))?),
        "right-symmetric" => Ok(check_right_symmetric(inst.product.as_ref().ok_or_else(|| missing("product"))?)),
        "nijenhuis" => is_hom_nijenhuis(inst.n.as_ref().ok_or_else(|| missing("n"))?, &certified()?),
        "o-operator" => is_hom_o_operator(
            inst.t.as_ref().ok_or_else(|| missing("t"))?,
            &certified()?,
            inst.rep.as_ref().ok_or_else(|| missing("rep"))?,
        ),
        "deformation" => {
            let g = certified()?;
            let n = inst.n.as_ref().ok_or_else(|| missing("n"))?;
            let (omega, _) = deformation_from_n(n, &g)?;
            let mut r = Report::new("deformation");
            r.absorb("", &check_deformation(&omega, &g)?);
            r.absorb("", &check_trivial_deformation(n, &omega, &g)?);
            Ok(r)
        }
        other => Err(Error::ParseError(format!("unknown check `{other}`"))),
    }
}

/// `mu_alpha(x, y) = alpha(mu(x, y))` with twist `alpha`, for a Lie bracket
/// `mu` and an automorphism `alpha` of it; the result is certified.
pub fn yau_twist(mu: &Cochain, alpha: &Matrix) -> Result<HomLieAlgebra> {
    let twist = TwistMap::new(alpha.clone())?;
    let n = twist.dim();
    if mu.source_dim() != n || mu.target_dim() != n {
        return Err(Error::DimensionMismatch("bracket and automorphism sizes differ".into()));
    }
    let mu = crate::cochain::with_arity(mu, 2);
    let w = first_witness(increasing_tuples(n, 2), |t| {
        let lhs = alpha.apply(&mu.eval_basis(t));
        let rhs = mu.eval(&[alpha.column(t[0]), alpha.column(t[1])]);
        lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect()
    });
    if let Some(w) = w {
        return Err(Error::NotAutomorphism(describe_failure(&Condition::failed("automorphism", Some(w)))));
    }
    let twisted = Cochain::from_fn(n, n, 2, |t| alpha.apply(&mu.eval_basis(t)));
    HomLieAlgebra::new(twisted, twist)
}
