//! Alternating multilinear maps `Lambda^k V -> W`, the twisted insertion
//! product, the hom-Nijenhuis-Richardson bracket and the coboundary operators.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{MultiIndex, MAX_DIM};
use crate::linalg::{add_scaled, is_zero_vec, sign, unit_vector, Matrix, Rational, TwistMap};
use crate::report::{first_witness, increasing_tuples, Condition, Report};
use crate::structures::Representation;

/// An alternating map `Lambda^arity V -> W`, stored on strictly increasing
/// basis tuples. `V`-valued cochains have `target_dim == source_dim`.
///
/// Equality is semantic: two zero cochains are equal whatever their arity.
#[derive(Clone)]
pub struct Cochain {
    source_dim: usize,
    target_dim: usize,
    arity: usize,
    values: BTreeMap<MultiIndex, Vec<Rational>>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return self.source_dim == other.source_dim && self.target_dim == other.target_dim;
        }
        self.source_dim == other.source_dim
            && self.target_dim == other.target_dim
            && self.arity == other.arity
            && self.values == other.values
    }
}

impl Eq for Cochain {}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let entries: Vec<String> = self
            .values
            .iter()
            .map(|(k, v)| {
                let v: Vec<String> = v.iter().map(crate::linalg::format_rational).collect();
                format!("{k:?}->[{}]", v.join(","))
            })
            .collect();
        write!(f, "Cochain(arity {}, {})", self.arity, entries.join(" "))
    }
}

/// Sign of the permutation sorting `idx`, or `None` if an index repeats.
pub fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut neg = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(neg)
}

/// A `(p, q)`-unshuffle: a permutation of `0..p+q` increasing on its first
/// `p` and on its last `q` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unshuffle {
    pub perm: Vec<usize>,
    pub negative: bool,
}

impl Unshuffle {
    pub fn first(&self, p: usize) -> &[usize] {
        &self.perm[..p]
    }

    pub fn sign(&self) -> Rational {
        if self.negative {
            -Rational::one()
        } else {
            Rational::one()
        }
    }
}

/// All `(p, q)`-unshuffles, ordered lexicographically by the first block.
pub fn unshuffles(p: usize, q: usize) -> Vec<Unshuffle> {
    increasing_tuples(p + q, p)
        .into_iter()
        .map(|first| {
            let inversions: usize = first.iter().enumerate().map(|(i, s)| s - i).sum();
            let mut perm = first.clone();
            perm.extend((0..p + q).filter(|i| !first.contains(i)));
            Unshuffle { perm, negative: inversions % 2 == 1 }
        })
        .collect()
}

impl Cochain {
    pub fn zero(source_dim: usize, target_dim: usize, arity: usize) -> Self {
        assert!(source_dim <= MAX_DIM, "dimension {source_dim} exceeds {MAX_DIM}");
        Cochain { source_dim, target_dim, arity, values: BTreeMap::new() }
    }

    /// The arity-0 cochain with the given value.
    pub fn constant(source_dim: usize, value: Vec<Rational>) -> Self {
        let mut c = Self::zero(source_dim, value.len(), 0);
        c.set(MultiIndex::EMPTY, value);
        c
    }

    /// A vector of `V` seen as an arity-0 cochain.
    pub fn vector(v: &[Rational]) -> Self {
        Self::constant(v.len(), v.to_vec())
    }

    /// A matrix seen as an arity-1 cochain.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut c = Self::zero(m.cols(), m.rows(), 1);
        for j in 0..m.cols() {
            c.set(MultiIndex::single(j), m.column(j));
        }
        c
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn(
        source_dim: usize,
        target_dim: usize,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Self {
        let mut c = Self::zero(source_dim, target_dim, arity);
        for t in increasing_tuples(source_dim, arity) {
            let v = f(&t);
            c.set(MultiIndex::from_indices(&t).expect("increasing"), v);
        }
        c
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree in the graded sense: `arity - 1`.
    pub fn degree(&self) -> i64 {
        self.arity as i64 - 1
    }

    pub fn values(&self) -> &BTreeMap<MultiIndex, Vec<Rational>> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, args: MultiIndex, value: Vec<Rational>) {
        assert_eq!(args.len(), self.arity, "argument count must equal the arity");
        assert_eq!(value.len(), self.target_dim, "value must lie in the target space");
        if is_zero_vec(&value) {
            self.values.remove(&args);
        } else {
            self.values.insert(args, value);
        }
    }

    /// Adds `c` to coordinate `j` of the value at `args`.
    pub fn add_at(&mut self, args: MultiIndex, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let mut v = self.value_at(args);
        v[j] += c;
        self.set(args, v);
    }

    pub fn value_at(&self, args: MultiIndex) -> Vec<Rational> {
        self.values.get(&args).cloned().unwrap_or_else(|| vec![Rational::zero(); self.target_dim])
    }

    /// Value on basis vectors `e_{idx[0]}, ...` in any order.
    pub fn eval_basis(&self, idx: &[usize]) -> Vec<Rational> {
        assert_eq!(idx.len(), self.arity, "argument count must equal the arity");
        let mut sorted = idx.to_vec();
        match sort_sign(&mut sorted) {
            None => vec![Rational::zero(); self.target_dim],
            Some(neg) => {
                let v = self.value_at(MultiIndex::from_indices(&sorted).expect("sorted"));
                if neg {
                    v.into_iter().map(|x| -x).collect()
                } else {
                    v
                }
            }
        }
    }

    /// Value on arbitrary vectors, by multilinear expansion.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity, "argument count must equal the arity");
        let mut out = vec![Rational::zero(); self.target_dim];
        if self.is_zero() {
            return out;
        }
        let mut idx = Vec::with_capacity(self.arity);
        self.eval_rec(args, &mut idx, &Rational::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[Vec<Rational>], idx: &mut Vec<usize>, coeff: &Rational, out: &mut [Rational]) {
        let k = idx.len();
        if k == args.len() {
            let mut sorted = idx.clone();
            if let Some(neg) = sort_sign(&mut sorted) {
                let key = MultiIndex::from_indices(&sorted).expect("sorted");
                if let Some(v) = self.values.get(&key) {
                    let c = if neg { -coeff.clone() } else { coeff.clone() };
                    add_scaled(out, v, &c);
                }
            }
            return;
        }
        for (i, x) in args[k].iter().enumerate() {
            if x.is_zero() || idx.contains(&i) {
                continue;
            }
            idx.push(i);
            self.eval_rec(args, idx, &(coeff * x), out);
            idx.pop();
        }
    }

    fn check_same_space(&self, other: &Cochain) -> Result<()> {
        if self.source_dim != other.source_dim || self.target_dim != other.target_dim {
            return Err(Error::DimensionMismatch(format!(
                "cochains {}->{} and {}->{}",
                self.source_dim, self.target_dim, other.source_dim, other.target_dim
            )));
        }
        Ok(())
    }

    /// Sum; a zero cochain of any arity acts as the identity.
    pub fn try_add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.arity != other.arity {
            return Err(Error::DimensionMismatch(format!(
                "cannot add cochains of arity {} and {}",
                self.arity, other.arity
            )));
        }
        let mut out = self.clone();
        for (k, v) in &other.values {
            let mut cur = out.value_at(*k);
            add_scaled(&mut cur, v, &Rational::one());
            out.set(*k, cur);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        let mut out = Cochain::zero(self.source_dim, self.target_dim, self.arity);
        if s.is_zero() {
            return out;
        }
        for (k, v) in &self.values {
            out.values.insert(*k, v.iter().map(|x| x * s).collect());
        }
        out
    }

    /// `m P(a^{-1} x_1, ..., a^{-1} x_k)` where `a_inv` acts on the source
    /// and `m` on the target.
    pub fn conjugate(&self, a_inv: &Matrix, m: &Matrix) -> Cochain {
        let cols: Vec<Vec<Rational>> = (0..self.source_dim).map(|j| a_inv.column(j)).collect();
        Cochain::from_fn(self.source_dim, m.rows(), self.arity, |t| {
            let args: Vec<Vec<Rational>> = t.iter().map(|&i| cols[i].clone()).collect();
            m.apply(&self.eval(&args))
        })
    }

    /// The arity-1 cochain as a matrix.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity != 1 && !self.is_zero() {
            return Err(Error::ShapeError(format!("arity {} cochain is not a matrix", self.arity)));
        }
        let cols: Vec<Vec<Rational>> = (0..self.source_dim).map(|j| self.eval_basis(&[j])).collect();
        if cols.is_empty() {
            return Ok(Matrix::zeros(self.target_dim, 0));
        }
        Matrix::from_columns(&cols)
    }

    /// The value of an arity-0 cochain.
    pub fn as_vector(&self) -> Vec<Rational> {
        self.value_at(MultiIndex::EMPTY)
    }
}

fn check_endo(p: &Cochain, alpha: &TwistMap) -> Result<()> {
    if p.source_dim != p.target_dim || p.source_dim != alpha.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain {}->{} with a twist on dimension {}",
            p.source_dim,
            p.target_dim,
            alpha.dim()
        )));
    }
    Ok(())
}

/// `Ad_alpha P = alpha P(alpha^{-1} ., ..., alpha^{-1} .)`.
pub fn ad_alpha_cochain(p: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    check_endo(p, alpha)?;
    Ok(p.conjugate(alpha.inverse(), alpha.forward()))
}

/// The twisted insertion product
/// `(P o Q)(x) = sum_sigma sgn(sigma) alpha P(alpha^{-1} Q(alpha^{-1} x_S), alpha^{-1} x_R)`
/// over unshuffles whose first block `S` has the arity of `Q`.
pub fn compose(p: &Cochain, q: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    check_endo(p, alpha)?;
    check_endo(q, alpha)?;
    let dim = alpha.dim();
    if p.arity == 0 {
        return Ok(Cochain::zero(dim, dim, q.arity.saturating_sub(1)));
    }
    let n = p.arity + q.arity - 1;
    let mut out = Cochain::zero(dim, dim, n);
    if p.is_zero() || q.is_zero() || n > dim {
        return Ok(out);
    }
    // alpha P(alpha^{-1} u, alpha^{-1} x_R) = (Ad_alpha P)(u, x_R) with
    // u = Q(alpha^{-1} x_S).
    let pa = p.conjugate(alpha.inverse(), alpha.forward());
    let qi = q.conjugate(alpha.inverse(), &Matrix::identity(dim));
    let shuffles = unshuffles(q.arity, p.arity - 1);
    for t in increasing_tuples(dim, n) {
        let mut acc = vec![Rational::zero(); dim];
        for sh in &shuffles {
            let s: Vec<usize> = sh.perm[..q.arity].iter().map(|&i| t[i]).collect();
            let u = qi.eval_basis(&s);
            if is_zero_vec(&u) {
                continue;
            }
            let rest: Vec<usize> = sh.perm[q.arity..].iter().map(|&i| t[i]).collect();
            let mut slot = Vec::with_capacity(p.arity);
            slot.push(0);
            slot.extend_from_slice(&rest);
            for (j, uj) in u.iter().enumerate() {
                if uj.is_zero() {
                    continue;
                }
                slot[0] = j;
                let v = pa.eval_basis(&slot);
                let c = if sh.negative { -uj.clone() } else { uj.clone() };
                add_scaled(&mut acc, &v, &c);
            }
        }
        out.set(MultiIndex::from_indices(&t).expect("increasing"), acc);
    }
    Ok(out)
}

/// The hom-Nijenhuis-Richardson bracket `[P, Q] = P o Q - (-1)^{kl} Q o P`
/// with `k = arity(P) - 1`, `l = arity(Q) - 1`.
pub fn nr_bracket(p: &Cochain, q: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    let pq = compose(p, q, alpha)?;
    let qp = compose(q, p, alpha)?;
    pq.try_sub(&qp.scale(&sign(p.degree() * q.degree())))
}

/// `Ad_alpha(P o Q) - Ad_alpha P o Ad_alpha Q`.
pub fn right1_residual(p: &Cochain, q: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    let lhs = ad_alpha_cochain(&compose(p, q, alpha)?, alpha)?;
    let rhs = compose(&ad_alpha_cochain(p, alpha)?, &ad_alpha_cochain(q, alpha)?, alpha)?;
    lhs.try_sub(&rhs)
}

/// `(P o Q) o Ad W - Ad P o (Q o W)`.
pub fn right_associator(p: &Cochain, q: &Cochain, w: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    let lhs = compose(&compose(p, q, alpha)?, &ad_alpha_cochain(w, alpha)?, alpha)?;
    let rhs = compose(&ad_alpha_cochain(p, alpha)?, &compose(q, w, alpha)?, alpha)?;
    lhs.try_sub(&rhs)
}

/// The associator minus its `Q <-> W` swap. With `graded` the swapped term
/// carries the Koszul sign `(-1)^{|Q||W|}`; without it the identity is read
/// literally and fails when `Q` and `W` both have odd degree.
pub fn right2_residual(p: &Cochain, q: &Cochain, w: &Cochain, alpha: &TwistMap, graded: bool) -> Result<Cochain> {
    let a = right_associator(p, q, w, alpha)?;
    let b = right_associator(p, w, q, alpha)?;
    let s = if graded { sign(q.degree() * w.degree()) } else { Rational::one() };
    a.try_sub(&b.scale(&s))
}

fn mu_shape(mu: &Cochain, alpha: &TwistMap) -> Result<()> {
    check_endo(mu, alpha)?;
    if mu.arity != 2 && !mu.is_zero() {
        return Err(Error::DimensionMismatch(format!("bracket must have arity 2, found {}", mu.arity)));
    }
    Ok(())
}

/// Checks multiplicativity `Ad_alpha mu = mu` and `[mu, mu]_alpha = 0`.
pub fn is_hom_lie(mu: &Cochain, alpha: &TwistMap) -> Result<Report> {
    mu_shape(mu, alpha)?;
    let dim = alpha.dim();
    let mu = with_arity(mu, 2);
    let ad = ad_alpha_cochain(&mu, alpha)?;
    let diff = ad.try_sub(&mu)?;
    let mult = first_witness(increasing_tuples(dim, 2), |t| diff.eval_basis(t));
    let mm = nr_bracket(&mu, &mu, alpha)?;
    let jac = first_witness(increasing_tuples(dim, 3), |t| mm.eval_basis(t));
    Ok(Report::with_conditions(
        "hom-lie",
        vec![Condition::from_witness("multiplicativity", mult), Condition::from_witness("hom-jacobi", jac)],
    ))
}

/// Reinterprets a zero cochain at the given arity; nonzero cochains are
/// returned unchanged.
pub(crate) fn with_arity(c: &Cochain, arity: usize) -> Cochain {
    if c.is_zero() {
        Cochain::zero(c.source_dim, c.target_dim, arity)
    } else {
        c.clone()
    }
}

/// `d f = (-1)^{k+1} [mu, f]_alpha` for `f` of arity `k`, without checking
/// that `(mu, alpha)` is a hom-Lie algebra.
pub fn coboundary_unchecked(f: &Cochain, mu: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    mu_shape(mu, alpha)?;
    let mu = with_arity(mu, 2);
    let b = nr_bracket(&mu, f, alpha)?;
    Ok(with_arity(&b.scale(&sign(f.arity as i64 + 1)), f.arity + 1))
}

/// `d f = (-1)^{k+1} [mu, f]_alpha`; fails unless `(mu, alpha)` is hom-Lie.
pub fn coboundary(f: &Cochain, mu: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    let r = is_hom_lie(mu, alpha)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotHomLie(format!("{} fails", c.name)));
    }
    coboundary_unchecked(f, mu, alpha)
}

/// The coboundary of a `W`-valued cochain for a representation, written out
/// term by term; does not check the representation axioms.
pub fn rep_coboundary_unchecked(f: &Cochain, rep: &Representation, mu: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    mu_shape(mu, alpha)?;
    let dim = alpha.dim();
    if f.source_dim != dim || f.target_dim != rep.wdim() || rep.dim() != dim {
        return Err(Error::DimensionMismatch("cochain, representation and algebra disagree".into()));
    }
    let k = f.arity;
    let mu = with_arity(mu, 2);
    let inv1: Vec<Vec<Rational>> = (0..dim).map(|j| alpha.inverse().column(j)).collect();
    let inv2m = alpha.power(-2);
    let inv2: Vec<Vec<Rational>> = (0..dim).map(|j| inv2m.column(j)).collect();
    let beta = rep.beta().forward();
    Ok(Cochain::from_fn(dim, rep.wdim(), k + 1, |x| {
        let mut acc = vec![Rational::zero(); rep.wdim()];
        for i in 0..=k {
            let args: Vec<Vec<Rational>> = (0..=k).filter(|&m| m != i).map(|m| inv1[x[m]].clone()).collect();
            let v = rep.rho_basis(x[i]).apply(&f.eval(&args));
            add_scaled(&mut acc, &v, &sign(i as i64));
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let mut args = vec![mu.eval(&[inv2[x[i]].clone(), inv2[x[j]].clone()])];
                args.extend((0..=k).filter(|&m| m != i && m != j).map(|m| inv1[x[m]].clone()));
                let v = beta.apply(&f.eval(&args));
                add_scaled(&mut acc, &v, &sign((i + j) as i64));
            }
        }
        acc
    }))
}

/// Representation coboundary; fails unless `(rho, beta)` is a representation.
pub fn rep_coboundary(f: &Cochain, rep: &Representation, mu: &Cochain, alpha: &TwistMap) -> Result<Cochain> {
    let r = crate::structures::check_representation_raw(rep, mu, alpha)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotRepresentation(format!("{} fails", c.name)));
    }
    rep_coboundary_unchecked(f, rep, mu, alpha)
}

/// One row of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDegree {
    pub degree: usize,
    pub cochains: usize,
    pub kernel: usize,
    pub image: usize,
    pub cohomology: usize,
}

/// Matrix of `d: C^k -> C^{k+1}` in the basis (increasing tuple, coordinate).
pub fn coboundary_matrix(k: usize, rep: &Representation, mu: &Cochain, alpha: &TwistMap) -> Result<Matrix> {
    let dim = alpha.dim();
    let w = rep.wdim();
    let src = increasing_tuples(dim, k);
    let dst = increasing_tuples(dim, k + 1);
    let mut m = Matrix::zeros(dst.len() * w, src.len() * w);
    for (si, s) in src.iter().enumerate() {
        for a in 0..w {
            let mut f = Cochain::zero(dim, w, k);
            f.set(MultiIndex::from_indices(s).expect("increasing"), unit_vector(w, a));
            let df = rep_coboundary_unchecked(&f, rep, mu, alpha)?;
            for (di, d) in dst.iter().enumerate() {
                let v = df.value_at(MultiIndex::from_indices(d).expect("increasing"));
                for (b, x) in v.into_iter().enumerate() {
                    m[(di * w + b, si * w + a)] = x;
                }
            }
        }
    }
    Ok(m)
}

/// Dimensions of kernels, images and cohomology for degrees `0..=max_degree`.
pub fn cohomology_dims(
    mu: &Cochain,
    alpha: &TwistMap,
    rep: &Representation,
    max_degree: usize,
) -> Result<Vec<CohomologyDegree>> {
    let r = is_hom_lie(mu, alpha)?;
    if let Some(c) = r.first_failure() {
        return Err(Error::NotHomLie(format!("{} fails", c.name)));
    }
    let rr = crate::structures::check_representation_raw(rep, mu, alpha)?;
    if let Some(c) = rr.first_failure() {
        return Err(Error::NotRepresentation(format!("{} fails", c.name)));
    }
    let dim = alpha.dim();
    let binom = |k: usize| increasing_tuples(dim, k).len();
    let mut ranks = Vec::with_capacity(max_degree + 1);
    let mut prev: Option<Matrix> = None;
    for k in 0..=max_degree.min(dim) {
        let d = coboundary_matrix(k, rep, mu, alpha)?;
        if let Some(p) = &prev {
            if !d.try_mul(p)?.is_zero() {
                return Err(Error::ConstructionFailure(format!("d^2 is nonzero on degree {}", k - 1)));
            }
        }
        ranks.push(d.rank());
        prev = Some(d);
    }
    ranks.resize(max_degree + 1, 0);
    Ok((0..=max_degree)
        .map(|k| {
            let cochains = if k > dim { 0 } else { binom(k) * rep.wdim() };
            let kernel = cochains - ranks[k];
            let image = if k == 0 { 0 } else { ranks[k - 1] };
            CohomologyDegree { degree: k, cochains, kernel, image, cohomology: kernel - image }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i)
    }

    fn affine2() -> (Cochain, TwistMap) {
        let mu = Cochain::from_fn(2, 2, 2, |_| vec![rat(0), rat(1)]);
        (mu, TwistMap::diag(&[rat(1), rat(2)]).unwrap())
    }

    #[test]
    fn sort_sign_cases() {
        assert_eq!(sort_sign(&mut [0, 1, 2]), Some(false));
        assert_eq!(sort_sign(&mut [1, 0, 2]), Some(true));
        assert_eq!(sort_sign(&mut [2, 0, 1]), Some(false));
        assert_eq!(sort_sign(&mut [1, 1]), None);
        assert_eq!(sort_sign(&mut [2, 0, 2]), None);
    }

    #[test]
    fn unshuffle_enumeration() {
        let u = unshuffles(2, 1);
        assert_eq!(
            u.iter().map(|s| s.perm.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 2, 0]]
        );
        assert_eq!(u.iter().map(|s| s.negative).collect::<Vec<_>>(), vec![false, true, false]);
        assert_eq!(unshuffles(2, 2).len(), 6);
        assert_eq!(unshuffles(0, 3).len(), 1);
    }

    #[test]
    fn matrix_compose_and_bracket() {
        let alpha = TwistMap::diag(&[rat(1), rat(2)]).unwrap();
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let (ca, cb) = (Cochain::from_matrix(&a), Cochain::from_matrix(&b));
        let expect = &(&(&(alpha.forward() * &a) * alpha.inverse()) * &b) * alpha.inverse();
        assert_eq!(compose(&ca, &cb, &alpha).unwrap().to_matrix().unwrap(), expect);
        let br = nr_bracket(&ca, &cb, &alpha).unwrap().to_matrix().unwrap();
        assert_eq!(br, Matrix::diag(&[frac(1, 2), rat(-1)]));
        let id = TwistMap::identity(2);
        let plain = nr_bracket(&ca, &cb, &id).unwrap().to_matrix().unwrap();
        assert_eq!(plain, &(&a * &b) - &(&b * &a));
    }

    #[test]
    fn compose_with_vector_is_adjoint_action() {
        let alpha = TwistMap::new(Matrix::from_i64(&[&[2, 0], &[1, 1]])).unwrap();
        let n = Matrix::from_i64(&[&[1, 3], &[0, -1]]);
        let y = vec![rat(2), frac(-1, 2)];
        let cn = Cochain::from_matrix(&n);
        let cy = Cochain::vector(&y);
        let adn = ad_alpha_cochain(&cn, &alpha).unwrap();
        assert_eq!(compose(&cn, &cy, &alpha).unwrap().as_vector(), adn.eval(&[y.clone()]));
        assert_eq!(nr_bracket(&cn, &cy, &alpha).unwrap().as_vector(), adn.eval(&[y]));
        assert!(compose(&cy, &cn, &alpha).unwrap().is_zero());
    }

    #[test]
    fn ad_alpha_examples() {
        let (mu, alpha) = affine2();
        assert_eq!(ad_alpha_cochain(&mu, &alpha).unwrap(), mu);
        assert_eq!(ad_alpha_cochain(&mu, &TwistMap::identity(2)).unwrap(), mu);
        let p = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let conj = &(alpha.forward() * &p) * alpha.inverse();
        assert_eq!(ad_alpha_cochain(&Cochain::from_matrix(&p), &alpha).unwrap().to_matrix().unwrap(), conj);
    }

    #[test]
    fn odd_square_is_twice_compose() {
        let (mu, alpha) = affine2();
        let mm = nr_bracket(&mu, &mu, &alpha).unwrap();
        assert_eq!(mm, compose(&mu, &mu, &alpha).unwrap().scale(&rat(2)));
        let n = Cochain::from_matrix(&Matrix::from_i64(&[&[1, 0], &[0, 3]]));
        assert!(nr_bracket(&n, &n, &alpha).unwrap().is_zero());
    }

    fn sl2() -> Cochain {
        let mut mu = Cochain::zero(3, 3, 2);
        mu.set(MultiIndex::from_indices(&[0, 1]).unwrap(), vec![rat(0), rat(2), rat(0)]);
        mu.set(MultiIndex::from_indices(&[0, 2]).unwrap(), vec![rat(0), rat(0), rat(-2)]);
        mu.set(MultiIndex::from_indices(&[1, 2]).unwrap(), vec![rat(1), rat(0), rat(0)]);
        mu
    }

    #[test]
    fn hom_lie_examples() {
        let (mu, alpha) = affine2();
        assert!(is_hom_lie(&mu, &alpha).unwrap().pass());
        assert!(is_hom_lie(&Cochain::zero(2, 2, 2), &alpha).unwrap().pass());
        assert!(is_hom_lie(&sl2(), &TwistMap::identity(3)).unwrap().pass());
        let r = is_hom_lie(&sl2(), &TwistMap::diag(&[rat(1), rat(2), rat(3)]).unwrap()).unwrap();
        let c = r.condition("multiplicativity").unwrap();
        assert!(!c.pass);
        assert_eq!(c.witness.as_ref().unwrap().args, vec![2, 3]);
    }

    #[test]
    fn coboundary_examples() {
        let (mu, alpha) = affine2();
        assert!(coboundary(&Cochain::zero(2, 2, 1), &mu, &alpha).unwrap().is_zero());
        let n = Cochain::from_matrix(alpha.forward());
        assert_eq!(coboundary(&n, &mu, &alpha).unwrap(), mu);
        // Untwisted: d x (y) = [y, x] up to the classical sign, i.e. -ad_x.
        let id = TwistMap::identity(3);
        let x = vec![rat(1), rat(2), rat(-1)];
        let dx = coboundary(&Cochain::vector(&x), &sl2(), &id).unwrap();
        for j in 0..3 {
            assert_eq!(dx.eval_basis(&[j]), sl2().eval(&[e(3, j), x.clone()]));
        }
        let bad = TwistMap::diag(&[rat(1), rat(2), rat(3)]).unwrap();
        assert!(matches!(coboundary(&Cochain::vector(&x), &sl2(), &bad), Err(Error::NotHomLie(_))));
    }

    #[test]
    fn eval_extends_antisymmetrically() {
        let mu = sl2();
        let x = vec![rat(1), rat(2), rat(0)];
        let y = vec![rat(0), rat(1), frac(1, 2)];
        let a = mu.eval(&[x.clone(), y.clone()]);
        let b = mu.eval(&[y.clone(), x.clone()]);
        assert_eq!(a, b.into_iter().map(|v| -v).collect::<Vec<_>>());
        assert!(is_zero_vec(&mu.eval(&[x.clone(), x])));
    }
}
