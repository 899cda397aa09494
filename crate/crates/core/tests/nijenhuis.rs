use hombracket::cochain::{coboundary, Cochain};
use hombracket::corpus;
use hombracket::linalg::{frac, rat, Matrix, Rational, TwistMap};
use hombracket::nijenhuis::*;
use hombracket::structures::{check_right_symmetric, commutator_hom_lie, HomLieAlgebra, Representation};
use hombracket::Error;

fn alg(name: &str) -> HomLieAlgebra {
    corpus::load(name).unwrap().algebra().unwrap()
}

fn regular() -> Vec<HomLieAlgebra> {
    ["abelian2", "affine2", "sl2", "sl2_yau", "heisenberg3"].iter().map(|n| alg(n)).collect()
}

#[test]
fn sl2_counterexample() {
    let g = alg("sl2");
    let mut n = Matrix::zeros(3, 3);
    n[(1, 0)] = rat(1);
    let r = is_hom_nijenhuis(&n, &g).unwrap();
    assert!(!r.pass());
    let c = r.condition("nijenhuis-identity").unwrap();
    let w = c.witness.as_ref().unwrap();
    assert_eq!(w.args, vec![1, 3]);
    assert_eq!(w.residual, vec![rat(0), rat(-1), rat(0)]);
    assert!(!r.condition("big-bracket").unwrap().pass);
    assert!(r.condition("routes-agree").unwrap().pass);
}

#[test]
fn non_commuting_operator_is_rejected() {
    let g = alg("affine2");
    let mut n = Matrix::zeros(2, 2);
    n[(0, 1)] = rat(1);
    assert!(matches!(is_hom_nijenhuis(&n, &g), Err(Error::AdAlphaViolation(_))));
}

#[test]
fn twist_and_zero_are_nijenhuis() {
    for g in regular() {
        let a = g.alpha().forward().clone();
        assert!(is_hom_nijenhuis(&a, &g).unwrap().pass());
        assert!(is_hom_nijenhuis(&Matrix::zeros(g.dim(), g.dim()), &g).unwrap().pass());
    }
}

#[test]
fn omega_of_twist_is_mu() {
    for g in regular() {
        let a = g.alpha().forward().clone();
        let (omega, poly) = deformation_from_n(&a, &g).unwrap();
        assert_eq!(&omega, g.mu());
        assert_eq!(poly.eval(&rat(3)).unwrap(), g.mu().scale(&rat(4)));
        assert!(check_deformation(&omega, &g).unwrap().pass());
        assert!(check_trivial_deformation(&a, &omega, &g).unwrap().pass());
    }
}

#[test]
fn omega_routes_agree_for_diagonal_n() {
    let g = alg("affine2");
    let n = Matrix::diag(&[rat(3), frac(-1, 2)]);
    let big = omega_via_big_bracket(&n, &g).unwrap();
    let nr = omega_via_coboundary(&n, &g).unwrap();
    assert_eq!(big, nr);
    assert_eq!(nr, coboundary(&Cochain::from_matrix(&n), g.mu(), g.alpha()).unwrap());
    let zero = Matrix::zeros(2, 2);
    assert!(deformation_from_n(&zero, &g).unwrap().0.is_zero());
}

#[test]
fn deformation_checks() {
    let g = alg("sl2");
    assert!(check_deformation(&Cochain::zero(3, 3, 2), &g).unwrap().pass());
    assert!(check_deformation(g.mu(), &g).unwrap().pass());
    let z = Matrix::zeros(3, 3);
    assert!(check_trivial_deformation(&z, &Cochain::zero(3, 3, 2), &g).unwrap().pass());
    // omega = mu with N = 0 is not trivial: the t^1 coefficient differs.
    let r = check_trivial_deformation(&z, g.mu(), &g).unwrap();
    assert!(!r.condition("t^1").unwrap().pass);
}

#[test]
fn circ_powers() {
    let g = alg("sl2_yau");
    let a = g.alpha();
    let n = Matrix::diag(&[rat(2), rat(-1), frac(1, 3)]);
    for i in 0..=4u32 {
        let expected = &n.pow(i) * &a.power(1 - i as i32);
        assert_eq!(circ_power(&n, a, i as usize).unwrap(), expected);
    }
    let af = a.forward().clone();
    assert_eq!(circ_power(&af, a, 2).unwrap(), af);
}

#[test]
fn polynomials() {
    let g = alg("affine2");
    let n = Matrix::diag(&[rat(1), rat(3)]);
    let (p, r) = poly_of_nijenhuis(&[rat(0), rat(1)], &n, &g).unwrap();
    assert_eq!(p, n);
    assert!(r.pass());
    let (p, r) = poly_of_nijenhuis(&[rat(5)], &n, &g).unwrap();
    assert_eq!(p, g.alpha().forward().scale(&rat(5)));
    assert!(r.pass());
    let a = g.alpha().forward().clone();
    let (p, r) = poly_of_nijenhuis(&[rat(0), rat(0), rat(1)], &a, &g).unwrap();
    assert_eq!(p, a);
    assert!(r.pass());

    let s = alg("sl2");
    let mut bad = Matrix::zeros(3, 3);
    bad[(1, 0)] = rat(1);
    assert!(matches!(poly_of_nijenhuis(&[rat(1)], &bad, &s), Err(Error::NotNijenhuis(_))));
}

#[test]
fn powers_lemma() {
    for g in regular() {
        let a = g.alpha().forward().clone();
        assert!(powers_lemma_check(&a, &g, 3).unwrap().pass());
    }
    let g = alg("affine2");
    assert!(powers_lemma_check(&Matrix::diag(&[rat(-2), rat(5)]), &g, 3).unwrap().pass());
}

#[test]
fn powers_lemma_base_cases() {
    let g = alg("sl2_yau");
    let n = g.alpha().forward().scale(&rat(3));
    for x in 0..3 {
        for y in 0..3 {
            assert!(powers_residual(&n, &g, 0, 0, x, y).iter().all(|c| c == &rat(0)));
            assert_eq!(powers_residual(&n, &g, 1, 1, x, y), nijenhuis_residual(&n, &g, x, y));
        }
    }
}

#[test]
fn untwisted_definition_differs() {
    let g = alg("sl2_yau");
    let a = g.alpha().forward().clone();
    assert!(is_hom_nijenhuis(&a, &g).unwrap().pass());
    let r = untwisted_nijenhuis_residual(&a, &g, 1, 2);
    assert_eq!(r, vec![frac(-1, 2), rat(0), rat(0)]);
}

#[test]
fn semidirect_products() {
    let g = alg("affine2");
    let (sd, v) = semidirect_product(&g, &Representation::adjoint(&g)).unwrap();
    assert_eq!(sd.dim(), 4);
    assert_eq!(v, SemidirectVariant::Plain);

    let empty = Representation::trivial(2, TwistMap::identity(0));
    let (sd, _) = semidirect_product(&g, &empty).unwrap();
    assert_eq!(sd.mu(), g.mu());

    let zero = Representation::trivial(2, TwistMap::diag(&[rat(3)]).unwrap());
    let (sd, _) = semidirect_product(&g, &zero).unwrap();
    assert_eq!(sd.bracket_basis(0, 2), vec![rat(0); 3]);

    let bad = Representation::adjoint(&g);
    let bad = Representation::new(bad.rho_matrices().to_vec(), TwistMap::identity(2)).unwrap();
    assert!(matches!(semidirect_product(&g, &bad), Err(Error::NotRepresentation(_))));
}

#[test]
fn o_operators() {
    let inst = corpus::load("o_operator2").unwrap();
    let g = inst.algebra().unwrap();
    let rep = inst.rep.clone().unwrap();
    let t = inst.t.clone().unwrap();

    let b = o_operator_bridge(&t, &g, &rep).unwrap();
    assert!(b.o_operator && b.block_nijenhuis);
    let rs = right_symmetric_from_o(&t, &g, &rep).unwrap();
    assert_eq!(&rs, inst.product.as_ref().unwrap());
    assert!(check_right_symmetric(&rs).pass());
    assert!(commutator_hom_lie(&rs).is_ok());

    let zero = Matrix::zeros(2, 2);
    assert!(is_hom_o_operator(&zero, &g, &rep).unwrap().pass());
    let rs = right_symmetric_from_o(&zero, &g, &rep).unwrap();
    assert!(rs.table().iter().flatten().flatten().all(|c| c == &Rational::from_integer(0.into())));

    let id = Matrix::identity(2);
    let b = o_operator_bridge(&id, &g, &rep).unwrap();
    assert!(!b.o_operator && !b.block_nijenhuis);
    assert!(matches!(right_symmetric_from_o(&id, &g, &rep), Err(Error::NotOOperator(_))));

    let mut off = Matrix::zeros(2, 2);
    off[(0, 1)] = rat(1);
    let b = o_operator_bridge(&off, &g, &rep).unwrap();
    assert!(!b.o_operator && !b.block_nijenhuis);
}

#[test]
fn o_operator_shape() {
    let g = alg("affine2");
    let rep = Representation::adjoint(&g);
    assert!(matches!(is_hom_o_operator(&Matrix::zeros(2, 3), &g, &rep), Err(Error::DimensionMismatch(_))));
}

#[test]
fn commutants() {
    let g = alg("affine2");
    let b = commutant_basis(g.alpha());
    assert_eq!(b.len(), 2);
    let h = alg("heisenberg3");
    for m in commutant_basis(h.alpha()) {
        assert_eq!(h.alpha().forward() * &m, &m * h.alpha().forward());
    }
    let s = alg("sl2");
    assert_eq!(commutant_basis(s.alpha()).len(), 9);
}
