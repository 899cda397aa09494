//! The exterior algebra of `V (+) V*` in canonical monomial form.
//!
//! A basis monomial is written `xi^{c_1} ^ ... ^ xi^{c_a} ^ e_{v_1} ^ ... ^ e_{v_b}`
//! with both index lists strictly increasing; every generator is odd. Index
//! sets are stored as bitmasks, so dimensions are limited to 32.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Matrix, Rational, TwistMap};

/// Largest supported dimension of `V`.
pub const MAX_DIM: usize = 32;

/// A strictly increasing set of (0-based) basis indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_mask(mask: u32) -> Self {
        MultiIndex(mask)
    }

    pub fn single(i: usize) -> Self {
        MultiIndex(1 << i)
    }

    /// Builds an index set from a strictly increasing list of 0-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for (k, &i) in indices.iter().enumerate() {
            if i >= MAX_DIM {
                return Err(Error::ShapeError(format!("index {i} exceeds the supported dimension")));
            }
            if k > 0 && indices[k - 1] >= i {
                return Err(Error::ShapeError(format!("indices {indices:?} are not strictly increasing")));
            }
            mask |= 1 << i;
        }
        Ok(MultiIndex(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn without(self, i: usize) -> Self {
        MultiIndex(self.0 & !(1 << i))
    }

    pub fn union(self, other: MultiIndex) -> Self {
        MultiIndex(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: MultiIndex) -> bool {
        self.0 & other.0 == 0
    }

    /// All index sets of size `k` drawn from `0..n`, in canonical order.
    pub fn subsets(n: usize, k: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if cur.len() == k {
                out.push(MultiIndex::from_indices(cur).expect("increasing"));
                return;
            }
            for i in start..n {
                if n - i < k - cur.len() {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    /// All subsets of `0..n`, shortest first.
    pub fn all_subsets(n: usize) -> Vec<MultiIndex> {
        (0..=n).flat_map(|k| Self::subsets(n, k)).collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter().map(|i| i + 1)).finish()
    }
}

/// Number of pairs `(s, t)` with `s` in `left`, `t` in `right` and `s > t`:
/// the transpositions needed to sort the concatenation `left ++ right`.
pub(crate) fn merge_inversions(left: u32, right: u32) -> u32 {
    let mut n = 0;
    let mut r = right;
    while r != 0 {
        let t = r.trailing_zeros();
        r &= r - 1;
        n += (left & !((2u32 << t).wrapping_sub(1))).count_ones();
    }
    n
}

fn parity_sign(n: u32) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Key of a basis monomial: (covector indices, vector indices).
pub type Monomial = (MultiIndex, MultiIndex);

/// An element of `Lambda(V (+) V*)`, possibly inhomogeneous.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigElement {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl BigElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        BigElement { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        Self::monomial(dim, MultiIndex::EMPTY, MultiIndex::EMPTY, c)
    }

    pub fn monomial(dim: usize, cov: MultiIndex, vec: MultiIndex, c: Rational) -> Self {
        let mut out = Self::zero(dim);
        out.add_term(cov, vec, c);
        out
    }

    pub fn basis_vector(dim: usize, i: usize) -> Self {
        Self::monomial(dim, MultiIndex::EMPTY, MultiIndex::single(i), Rational::one())
    }

    pub fn basis_covector(dim: usize, i: usize) -> Self {
        Self::monomial(dim, MultiIndex::single(i), MultiIndex::EMPTY, Rational::one())
    }

    /// The vector `sum_i v_i e_i`.
    pub fn vector(v: &[Rational]) -> Self {
        let mut out = Self::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            out.add_term(MultiIndex::EMPTY, MultiIndex::single(i), c.clone());
        }
        out
    }

    /// The covector `sum_i c_i xi^i`.
    pub fn covector(c: &[Rational]) -> Self {
        let mut out = Self::zero(c.len());
        for (i, x) in c.iter().enumerate() {
            out.add_term(MultiIndex::single(i), MultiIndex::EMPTY, x.clone());
        }
        out
    }

    /// The tensor `sum_{ij} m_ij xi^j (x) e_i` of a linear map `V -> V`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut out = Self::zero(m.rows());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.add_term(MultiIndex::single(j), MultiIndex::single(i), m[(i, j)].clone());
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, cov: MultiIndex, vec: MultiIndex) -> Rational {
        self.terms.get(&(cov, vec)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, cov: MultiIndex, vec: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (cov, vec);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_dim(&self, other: &BigElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("elements over dimensions {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &BigElement) -> Result<BigElement> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for ((c, v), x) in &other.terms {
            out.add_term(*c, *v, x.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &BigElement) -> Result<BigElement> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> BigElement {
        let mut out = Self::zero(self.dim);
        if s.is_zero() {
            return out;
        }
        for (k, x) in &self.terms {
            out.terms.insert(*k, x * s);
        }
        out
    }

    /// Degree `|cov| + |vec| - 2` of a basis monomial.
    pub fn monomial_degree((cov, vec): Monomial) -> i64 {
        (cov.len() + vec.len()) as i64 - 2
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<i64, BigElement> {
        let mut out: BTreeMap<i64, BigElement> = BTreeMap::new();
        for (k, x) in &self.terms {
            out.entry(Self::monomial_degree(*k)).or_insert_with(|| Self::zero(self.dim)).terms.insert(*k, x.clone());
        }
        out
    }

    /// The degree if the element is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|k| Self::monomial_degree(*k));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Restriction to the terms in `Lambda^a V* (x) Lambda^b V`.
    pub fn bidegree_part(&self, a: usize, b: usize) -> BigElement {
        let mut out = Self::zero(self.dim);
        for ((c, v), x) in &self.terms {
            if c.len() == a && v.len() == b {
                out.terms.insert((*c, *v), x.clone());
            }
        }
        out
    }

    pub fn is_pure_covector(&self) -> bool {
        self.terms.keys().all(|(_, v)| v.is_empty())
    }

    pub fn is_pure_vector(&self) -> bool {
        self.terms.keys().all(|(c, _)| c.is_empty())
    }

    /// Coordinates of the degree `-1` vector part.
    pub fn vector_part(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.coeff(MultiIndex::EMPTY, MultiIndex::single(i))).collect()
    }

    /// Coordinates of the degree `-1` covector part.
    pub fn covector_part(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.coeff(MultiIndex::single(i), MultiIndex::EMPTY)).collect()
    }

    /// The scalar (degree `-2`) part.
    pub fn scalar_part(&self) -> Rational {
        self.coeff(MultiIndex::EMPTY, MultiIndex::EMPTY)
    }

    /// Every basis monomial of `Lambda(V (+) V*)` for the given dimension.
    pub fn basis_monomials(dim: usize) -> Vec<Monomial> {
        let subsets = MultiIndex::all_subsets(dim);
        let mut out = Vec::with_capacity(subsets.len() * subsets.len());
        for &c in &subsets {
            for &v in &subsets {
                out.push((c, v));
            }
        }
        out
    }

    pub fn try_wedge(&self, other: &BigElement) -> Result<BigElement> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for ((c1, v1), x) in &self.terms {
            for ((c2, v2), y) in &other.terms {
                if let Some((c, v, s)) = wedge_monomials((*c1, *v1), (*c2, *v2)) {
                    out.add_term(c, v, if s { -(x * y) } else { x * y });
                }
            }
        }
        Ok(out)
    }

    /// Wedge product. Panics on a dimension mismatch; see [`Self::try_wedge`].
    pub fn wedge(&self, other: &BigElement) -> BigElement {
        self.try_wedge(other).expect("wedge of elements over different dimensions")
    }

    /// Applies linear maps generator-wise: each `xi^j` goes to column `j` of
    /// `cov_map` (read in the dual basis), each `e_j` to column `j` of `vec_map`.
    pub fn transform(&self, cov_map: &Matrix, vec_map: &Matrix) -> BigElement {
        let mut cov_cache: HashMap<u32, Vec<(u32, Rational)>> = HashMap::new();
        let mut vec_cache: HashMap<u32, Vec<(u32, Rational)>> = HashMap::new();
        let mut out = Self::zero(self.dim);
        for ((c, v), x) in &self.terms {
            let ci = cov_cache.entry(c.mask()).or_insert_with(|| exterior_image(c.mask(), cov_map)).clone();
            let vi = vec_cache.entry(v.mask()).or_insert_with(|| exterior_image(v.mask(), vec_map));
            for (cm, cc) in &ci {
                for (vm, vc) in vi.iter() {
                    out.add_term(MultiIndex(*cm), MultiIndex(*vm), x * cc * vc);
                }
            }
        }
        out
    }

    /// Sum of `(alpha^{-1})^*` on covector factors and `alpha` on vector factors.
    pub fn ad_alpha(&self, alpha: &TwistMap) -> Result<BigElement> {
        self.check_twist(alpha)?;
        Ok(self.transform(alpha.inverse_dual(), alpha.forward()))
    }

    /// `alpha^k` on vector factors and `((alpha^{-1})^*)^k` on covector
    /// factors, for any integer `k`.
    pub fn ad_alpha_pow(&self, alpha: &TwistMap, k: i32) -> Result<BigElement> {
        self.check_twist(alpha)?;
        let vec_map = alpha.power(k);
        let cov_map = alpha.power(-k).transpose();
        Ok(self.transform(&cov_map, &vec_map))
    }

    /// `(alpha^k)^*` on covector factors; vector factors untouched.
    pub fn dual_pow(&self, alpha: &TwistMap, k: i32) -> Result<BigElement> {
        self.check_twist(alpha)?;
        Ok(self.transform(&alpha.power(k).transpose(), &Matrix::identity(self.dim)))
    }

    /// `alpha` on vector factors only.
    pub fn apply_to_vectors(&self, m: &Matrix) -> BigElement {
        self.transform(&Matrix::identity(self.dim), m)
    }

    pub(crate) fn check_twist(&self, alpha: &TwistMap) -> Result<()> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "twist of dimension {} on an element over dimension {}",
                alpha.dim(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Renders with 1-based indices, e.g. `2 xi1^xi2(x)e1 + e2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((c, v), x)| {
                let mut gens: Vec<String> = c.iter().map(|i| format!("ξ{}", i + 1)).collect();
                let vecs: Vec<String> = v.iter().map(|i| format!("e{}", i + 1)).collect();
                let body = match (gens.is_empty(), vecs.is_empty()) {
                    (true, true) => String::new(),
                    (false, true) => gens.join("∧"),
                    (true, false) => vecs.join("∧"),
                    (false, false) => {
                        gens = vec![gens.join("∧")];
                        format!("{}⊗{}", gens[0], vecs.join("∧"))
                    }
                };
                if body.is_empty() {
                    format_rational(x)
                } else if x.is_one() {
                    body
                } else if *x == -Rational::one() {
                    format!("-{body}")
                } else {
                    format!("{}·{body}", format_rational(x))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for BigElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigElement[{}]({})", self.dim, self.to_text())
    }
}

/// Product of two basis monomials: the resulting key and whether the sign
/// is negative, or `None` if a generator repeats.
pub(crate) fn wedge_monomials((c1, v1): Monomial, (c2, v2): Monomial) -> Option<(MultiIndex, MultiIndex, bool)> {
    if !c1.is_disjoint(c2) || !v1.is_disjoint(v2) {
        return None;
    }
    let n =
        (v1.len() * c2.len()) as u32 + merge_inversions(c1.mask(), c2.mask()) + merge_inversions(v1.mask(), v2.mask());
    Some((c1.union(c2), v1.union(v2), n % 2 == 1))
}

/// Image of the pure monomial with index set `mask` under the exterior power
/// of `m` (generator `j` maps to column `j`).
fn exterior_image(mask: u32, m: &Matrix) -> Vec<(u32, Rational)> {
    let mut cur: BTreeMap<u32, Rational> = BTreeMap::new();
    cur.insert(0, Rational::one());
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut next: BTreeMap<u32, Rational> = BTreeMap::new();
        for (s, c) in &cur {
            for i in 0..m.rows() {
                let a = &m[(i, j)];
                if a.is_zero() || s >> i & 1 == 1 {
                    continue;
                }
                let inv = (s & !((2u32 << i).wrapping_sub(1))).count_ones();
                let e = next.entry(s | 1 << i).or_insert_with(Rational::zero);
                *e += parity_sign(inv) * c * a;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur.into_iter().collect()
}

/// Contraction of `v` into the first slot of a pure covector element,
/// `Xi(v, ...)`, with the determinant pairing.
pub fn contract(v: &[Rational], xi: &BigElement) -> Result<BigElement> {
    if !xi.is_pure_covector() {
        return Err(Error::NotPureCovector);
    }
    if v.len() != xi.dim() {
        return Err(Error::DimensionMismatch("vector and covector dimensions differ".into()));
    }
    let mut out = BigElement::zero(xi.dim());
    for ((c, _), x) in xi.terms() {
        for (b, j) in c.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            let s = parity_sign(b as u32);
            out.add_term(c.without(j), MultiIndex::EMPTY, s * x * &v[j]);
        }
    }
    Ok(out)
}

/// The twisted interior product `i^alpha_x Xi`, defined by
/// `(i^alpha_x Xi)(x_1, ..., x_q) = Xi(alpha^{-1} x, alpha^{-1} x_1, ..., alpha^{-1} x_q)`.
pub fn interior(x: &[Rational], xi: &BigElement, alpha: &TwistMap) -> Result<BigElement> {
    xi.check_twist(alpha)?;
    let pre = alpha.inverse().apply(x);
    Ok(contract(&pre, xi)?.transform(alpha.inverse_dual(), &Matrix::identity(xi.dim())))
}

/// Evaluates a homogeneous pure covector `Xi` of length `q+1` on `q+1`
/// vectors with the determinant pairing.
pub fn evaluate_covector(xi: &BigElement, args: &[Vec<Rational>]) -> Result<Rational> {
    let mut cur = xi.clone();
    for a in args {
        cur = contract(a, &cur)?;
    }
    if cur.terms().keys().any(|(c, _)| !c.is_empty()) {
        return Err(Error::ShapeError("too few arguments for the covector".into()));
    }
    Ok(cur.scalar_part())
}

/// Reads an element whose terms all carry exactly one vector factor as a
/// skew multilinear map: `(Xi (x) x)(x_1, ..., x_{q+1}) = Xi(x_1, ..., x_{q+1}) x`.
pub fn cochain_from_big(a: &BigElement) -> Result<Cochain> {
    let dim = a.dim();
    let mut arity = None;
    for (c, v) in a.terms().keys() {
        if v.len() != 1 {
            return Err(Error::ShapeError(format!("term with {} vector factors; exactly one is required", v.len())));
        }
        match arity {
            None => arity = Some(c.len()),
            Some(k) if k != c.len() => {
                return Err(Error::ShapeError("element is not homogeneous".into()));
            }
            _ => {}
        }
    }
    let mut out = Cochain::zero(dim, dim, arity.unwrap_or(0));
    for ((c, v), x) in a.terms() {
        let j = v.iter().next().expect("one vector factor");
        out.add_at(*c, j, x.clone());
    }
    Ok(out)
}

/// Inverse of [`cochain_from_big`] for `V`-valued cochains.
pub fn big_from_cochain(f: &Cochain) -> Result<BigElement> {
    if f.source_dim() != f.target_dim() {
        return Err(Error::ShapeError("only V-valued cochains embed as tensors".into()));
    }
    let mut out = BigElement::zero(f.source_dim());
    for (args, value) in f.values() {
        for (j, x) in value.iter().enumerate() {
            out.add_term(*args, MultiIndex::single(j), x.clone());
        }
    }
    Ok(out)
}
