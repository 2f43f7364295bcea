//! The finite algebra k[x1,...,xn]/(f1(x1),...,fn(xn)).
//!
//! Decision operations (dimension, codimension, primitive-element test,
//! injective-linear-form search) are root-free: they only use gcd, squarefree
//! parts and resultants, so they work for arbitrary rational generators.
//! Grid-explicit operations (membership by derivatives, annihilators, the
//! closed-form minimal polynomial) take a [`GridSpec`] with rational roots.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{Insertion, SpanTracker};
use crate::modp::{values_poly_mod, PolyMod, SCREEN_PRIMES};
use crate::multipoly::MultiPoly;
use crate::poly::UniPoly;
use crate::rat::{parse_rat, rat_to_string, ri, Rat};

/// Number of candidates tried per linear-form coordinate before giving up.
pub const DEFAULT_SEARCH_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    generators: Vec<UniPoly>,
    vars: Vec<String>,
}

/// Residue class, stored as coefficients on the monomial basis
/// {x^m : 0 ≤ m_i < deg f_i}. Absent exponent vectors mean zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QElem {
    coeffs: BTreeMap<Vec<u32>, Rat>,
}

/// Per-axis root/multiplicity data: axis i holds the distinct rational roots
/// of f_i with their multiplicities, so f_i = ∏ (x_i − a)^mult.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    axes: Vec<Vec<(Rat, u32)>>,
}

/// The linear form x_1 + c_2·x_2 + ... + c_n·x_n; c_1 is pinned to 1 and the
/// remaining coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input(
                "linear form needs at least one coefficient".into(),
            ));
        }
        if !coeffs[0].is_one() {
            return Err(Error::Input(
                "leading linear-form coefficient must be 1".into(),
            ));
        }
        if coeffs[1..].iter().any(Zero::is_zero) {
            return Err(Error::Input(
                "linear-form coefficients must be nonzero".into(),
            ));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| ri(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn apply(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.coeffs.len(), "point dimension mismatch");
        self.coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// The form as a multivariate polynomial.
    pub fn to_multipoly(&self) -> MultiPoly {
        let n = self.coeffs.len();
        let mut p = MultiPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            p = p.add(&MultiPoly::var(n, i).scale(c));
        }
        p
    }
}

impl QuotientAlgebra {
    /// Build with default variable names x1, ..., xn.
    pub fn new(generators: Vec<UniPoly>) -> Result<Self> {
        let vars = (1..=generators.len()).map(|i| format!("x{i}")).collect();
        Self::with_vars(generators, vars)
    }

    pub fn with_vars(generators: Vec<UniPoly>, vars: Vec<String>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("algebra needs at least one generator".into()));
        }
        if generators.len() != vars.len() {
            return Err(Error::Input(format!(
                "{} generators but {} variable names",
                generators.len(),
                vars.len()
            )));
        }
        for g in &generators {
            if g.degree().is_none_or(|d| d == 0) {
                return Err(Error::Input(
                    "each generator must be nonconstant in its own variable".into(),
                ));
            }
        }
        Ok(QuotientAlgebra { generators, vars })
    }

    pub fn generators(&self) -> &[UniPoly] {
        &self.generators
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| g.degree().expect("generators are nonconstant"))
            .collect()
    }

    /// Vector-space dimension: the product of the generator degrees, which is
    /// also the number of monomials in the basis box.
    pub fn dim(&self) -> usize {
        self.degrees().iter().product()
    }

    /// Largest degree of a minimal polynomial of an element, computed
    /// root-free: with d_i = deg f_i and s_i = deg squarefree_part(f_i),
    /// codim = Σ_i d_i·∏_{j≠i} s_j − (n−1)·∏_j s_j.
    ///
    /// This is the axis-wise summation of the per-point exponents
    /// Σ_i ν_i(a_i) − n + 1 over the root grid.
    pub fn codim(&self) -> Result<usize> {
        let degrees = self.degrees();
        let squarefree: Vec<usize> = self
            .generators
            .iter()
            .map(|g| Ok(g.squarefree_part()?.degree().expect("nonconstant")))
            .collect::<Result<_>>()?;
        let n = degrees.len();
        let grid_size: usize = squarefree.iter().product();
        let mut total = 0usize;
        for (i, degree) in degrees.iter().enumerate() {
            let others: usize = squarefree
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s)
                .product();
            total += degree * others;
        }
        Ok(total - (n - 1) * grid_size)
    }

    /// Primitive-element criterion: at most one generator is inseparable.
    /// Equivalently (and cross-checked by tests), codim = dim.
    pub fn has_primitive_element(&self) -> Result<bool> {
        let mut inseparable = 0usize;
        for g in &self.generators {
            if !g.is_separable()? {
                inseparable += 1;
            }
        }
        Ok(inseparable <= 1)
    }

    /// Exponent boxes of the monomial basis, first axis fastest, matching the
    /// ordering 1, x, ..., x^{d1−1}, y, xy, ...
    pub fn basis_exponents(&self) -> Vec<Vec<u32>> {
        let degrees = self.degrees();
        let dim = self.dim();
        let mut out = Vec::with_capacity(dim);
        let mut current = vec![0u32; degrees.len()];
        for _ in 0..dim {
            out.push(current.clone());
            for (slot, &d) in current.iter_mut().zip(&degrees) {
                *slot += 1;
                if (*slot as usize) < d {
                    break;
                }
                *slot = 0;
            }
        }
        out
    }

    fn basis_index(&self, exps: &[u32]) -> usize {
        let degrees = self.degrees();
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (e, d) in exps.iter().zip(&degrees) {
            idx += (*e as usize) * stride;
            stride *= d;
        }
        idx
    }

    fn check_member(&self, e: &QElem) -> Result<()> {
        let degrees = self.degrees();
        for exps in e.coeffs.keys() {
            if exps.len() != degrees.len()
                || exps.iter().zip(&degrees).any(|(&m, &d)| m as usize >= d)
            {
                return Err(Error::Input(
                    "element does not lie in this algebra's basis box".into(),
                ));
            }
        }
        Ok(())
    }

    /// Unique representation of p + I on the monomial basis: per-variable
    /// univariate remaindering, valid because each generator involves only its
    /// own variable.
    pub fn normal_form(&self, p: &MultiPoly) -> Result<QElem> {
        let n = self.nvars();
        if p.nvars() != n {
            return Err(Error::Input(format!(
                "polynomial in {} variables, algebra has {}",
                p.nvars(),
                n
            )));
        }
        // Remainder tables x_i^k mod f_i for every exponent that occurs.
        let mut max_exp = vec![0u32; n];
        for (exps, _) in p.terms() {
            for (m, e) in max_exp.iter_mut().zip(exps) {
                *m = (*m).max(*e);
            }
        }
        let mut tables: Vec<Vec<UniPoly>> = Vec::with_capacity(n);
        for (i, f) in self.generators.iter().enumerate() {
            let mut table = Vec::with_capacity(max_exp[i] as usize + 1);
            let mut power = UniPoly::one();
            table.push(power.clone());
            for _ in 0..max_exp[i] {
                power = (&power * &UniPoly::x()).div_rem(f)?.1;
                table.push(power.clone());
            }
            tables.push(table);
        }
        let mut out = QElem::zero();
        for (exps, coef) in p.terms() {
            let factors: Vec<&UniPoly> = exps
                .iter()
                .enumerate()
                .map(|(i, &e)| &tables[i][e as usize])
                .collect();
            // Tensor expansion of coef·∏ factors over the basis box.
            let mut stack: Vec<(usize, Vec<u32>, Rat)> = vec![(0, Vec::new(), coef.clone())];
            while let Some((axis, prefix, c)) = stack.pop() {
                if axis == n {
                    out.add_assign_term(prefix, c);
                    continue;
                }
                for (k, fc) in factors[axis].coeffs().iter().enumerate() {
                    if fc.is_zero() {
                        continue;
                    }
                    let mut next = prefix.clone();
                    next.push(k as u32);
                    stack.push((axis + 1, next, &c * fc));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, a: &QElem, b: &QElem) -> Result<QElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        let mut out = a.clone();
        for (e, c) in &b.coeffs {
            out.add_assign_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, a: &QElem, s: &Rat) -> Result<QElem> {
        self.check_member(a)?;
        if s.is_zero() {
            return Ok(QElem::zero());
        }
        Ok(QElem {
            coeffs: a.coeffs.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        })
    }

    pub fn mul(&self, a: &QElem, b: &QElem) -> Result<QElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        let n = self.nvars();
        self.normal_form(&a.lift(n).mul(&b.lift(n)))
    }

    /// The residue class of x_i.
    pub fn var_residue(&self, i: usize) -> Result<QElem> {
        if i >= self.nvars() {
            return Err(Error::Input("variable index out of range".into()));
        }
        self.normal_form(&MultiPoly::var(self.nvars(), i))
    }

    /// Residue class of a linear form.
    pub fn form_residue(&self, form: &LinearForm) -> Result<QElem> {
        if form.len() != self.nvars() {
            return Err(Error::Input("linear form length mismatch".into()));
        }
        self.normal_form(&form.to_multipoly())
    }

    /// Coordinates of a residue class on the monomial basis.
    pub fn coordinates(&self, e: &QElem) -> Result<Vec<Rat>> {
        self.check_member(e)?;
        let mut coords = vec![Rat::zero(); self.dim()];
        for (exps, c) in &e.coeffs {
            coords[self.basis_index(exps)] = c.clone();
        }
        Ok(coords)
    }

    /// Monic least-degree polynomial annihilating the residue class, by
    /// Krylov-style linear dependence of 1, e, e², ... in basis coordinates.
    pub fn min_poly_residue(&self, e: &QElem) -> Result<UniPoly> {
        self.check_member(e)?;
        let mut tracker = SpanTracker::new(self.dim());
        let mut power = QElem::one(self.nvars());
        loop {
            match tracker.insert(self.coordinates(&power)?) {
                Insertion::Dependent(comb) => {
                    let mut coeffs: Vec<Rat> = comb.into_iter().map(|c| -c).collect();
                    coeffs.push(Rat::one());
                    return Ok(UniPoly::new(coeffs));
                }
                Insertion::Independent => {}
            }
            power = self.mul(&power, e)?;
        }
    }

    /// Find nonzero c_2, ..., c_n making x_1 + Σ c_i·x_i injective on the
    /// root grid of the generators, certified root-free: the iterated values
    /// polynomial of the squarefree parts must be squarefree.
    ///
    /// The search is deterministic, trying 1, −1, 2, −2, ... per coordinate,
    /// folding left to right. Candidates are screened modulo fixed word-sized
    /// primes (squarefreeness modulo one good prime certifies squarefreeness
    /// over the rationals for these monic folds); the exact fold is used only
    /// if every screening prime is unusable for the given coefficients.
    pub fn find_primitive_linear_form(&self) -> Result<LinearForm> {
        self.find_primitive_linear_form_bounded(DEFAULT_SEARCH_BOUND)
    }

    pub fn find_primitive_linear_form_bounded(&self, bound: usize) -> Result<LinearForm> {
        if bound == 0 {
            return Err(Error::Input("search bound must be at least 1".into()));
        }
        if !self.has_primitive_element()? {
            return Err(Error::NoPrimitiveElement(
                "more than one generator is inseparable".into(),
            ));
        }
        let squarefree: Vec<UniPoly> = self
            .generators
            .iter()
            .map(|g| g.squarefree_part())
            .collect::<Result<_>>()?;
        let n = squarefree.len();
        let mut coeffs = vec![ri(1)];
        if n == 1 {
            return LinearForm::new(coeffs);
        }

        let primes: Vec<u64> = SCREEN_PRIMES
            .into_iter()
            .filter(|&p| squarefree.iter().all(|f| PolyMod::reduce(f, p).is_some()))
            .take(2)
            .collect();

        let mut acc_mod: Vec<(u64, PolyMod)> = primes
            .iter()
            .map(|&p| {
                (
                    p,
                    PolyMod::reduce(&squarefree[0], p).expect("prime was screened"),
                )
            })
            .collect();
        let mut acc_exact = if primes.is_empty() {
            Some(squarefree[0].clone())
        } else {
            None
        };

        for axis_part in &squarefree[1..] {
            let mut found = None;
            for c in candidate_coefficients(bound) {
                if !acc_mod.is_empty() {
                    let mut folds = Vec::with_capacity(acc_mod.len());
                    let mut squarefree_witness = false;
                    for (p, acc) in &acc_mod {
                        let gp = PolyMod::reduce(axis_part, *p).expect("screened");
                        let cm = ((c % *p as i64 + *p as i64) % *p as i64) as u64;
                        let fold = values_poly_mod(acc, &gp, cm, *p)?;
                        if fold.is_squarefree() {
                            squarefree_witness = true;
                        }
                        folds.push(fold);
                    }
                    if squarefree_witness {
                        for ((_, acc), fold) in acc_mod.iter_mut().zip(folds) {
                            *acc = fold;
                        }
                        found = Some(c);
                        break;
                    }
                } else {
                    let acc = acc_exact.as_ref().expect("exact accumulator present");
                    let fold = UniPoly::values_poly(acc, axis_part, &ri(c))?;
                    if fold.is_separable()? {
                        acc_exact = Some(fold);
                        found = Some(c);
                        break;
                    }
                }
            }
            match found {
                Some(c) => coeffs.push(ri(c)),
                None => return Err(Error::SearchExhausted { candidates: bound }),
            }
        }
        LinearForm::new(coeffs)
    }
}

/// Search order 1, −1, 2, −2, 3, −3, ...
fn candidate_coefficients(bound: usize) -> impl Iterator<Item = i64> {
    (0..bound).map(|k| {
        let magnitude = (k / 2 + 1) as i64;
        if k % 2 == 0 {
            magnitude
        } else {
            -magnitude
        }
    })
}

impl QElem {
    pub fn zero() -> Self {
        QElem {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0; nvars], Rat::one());
        QElem { coeffs }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(vec![0; nvars], c);
        }
        QElem { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.coeffs.iter()
    }

    fn add_assign_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Lift to the polynomial ring (the canonical basis representative).
    pub fn lift(&self, nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            self.coeffs
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        )
        .expect("basis exponents are well-formed")
    }
}

impl GridSpec {
    pub fn new(axes: Vec<Vec<(Rat, u32)>>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::Input("grid needs at least one axis".into()));
        }
        for axis in &axes {
            if axis.is_empty() {
                return Err(Error::Input(
                    "each grid axis needs at least one root".into(),
                ));
            }
            if axis.iter().any(|(_, m)| *m == 0) {
                return Err(Error::Input("multiplicities must be at least 1".into()));
            }
            let distinct: BTreeSet<&Rat> = axis.iter().map(|(r, _)| r).collect();
            if distinct.len() != axis.len() {
                return Err(Error::Input("roots within an axis must be distinct".into()));
            }
        }
        Ok(GridSpec { axes })
    }

    pub fn from_ints(axes: &[&[(i64, u32)]]) -> Result<Self> {
        Self::new(
            axes.iter()
                .map(|axis| axis.iter().map(|&(r, m)| (ri(r), m)).collect())
                .collect(),
        )
    }

    pub fn axes(&self) -> &[Vec<(Rat, u32)>] {
        &self.axes
    }

    pub fn nvars(&self) -> usize {
        self.axes.len()
    }

    /// The generator this axis models: ∏ (x − a)^mult.
    pub fn axis_poly(&self, i: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for (root, mult) in &self.axes[i] {
            let lin = UniPoly::new(vec![-root.clone(), ri(1)]);
            for _ in 0..*mult {
                acc = &acc * &lin;
            }
        }
        acc
    }

    pub fn to_algebra(&self) -> QuotientAlgebra {
        let gens = (0..self.nvars()).map(|i| self.axis_poly(i)).collect();
        QuotientAlgebra::new(gens).expect("grid axes are nonempty")
    }

    /// All grid points with their multiplicity vectors.
    pub fn points(&self) -> Vec<(Vec<Rat>, Vec<u32>)> {
        let mut out = vec![(Vec::new(), Vec::new())];
        for axis in &self.axes {
            let mut next = Vec::with_capacity(out.len() * axis.len());
            for (point, mults) in &out {
                for (root, mult) in axis {
                    let mut p = point.clone();
                    let mut m = mults.clone();
                    p.push(root.clone());
                    m.push(*mult);
                    next.push((p, m));
                }
            }
            out = next;
        }
        out
    }

    /// Membership in the grid ideal via vanishing of mixed partial
    /// derivatives: p lies in the ideal exactly when ∂^m p(a) = 0 for every
    /// grid point a and every m with m_i < ν_i(a_i). Agrees with
    /// `normal_form(p) = 0` in the reconstructed algebra.
    pub fn hermite_membership(&self, p: &MultiPoly) -> Result<bool> {
        let n = self.nvars();
        if p.nvars() != n {
            return Err(Error::Input(format!(
                "polynomial in {} variables, grid has {}",
                p.nvars(),
                n
            )));
        }
        // Derivatives are shared across points; precompute over the maximal box.
        let max_mult: Vec<u32> = self
            .axes
            .iter()
            .map(|axis| axis.iter().map(|(_, m)| *m).max().unwrap_or(1))
            .collect();
        let mut derivs: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        derivs.insert(vec![0; n], p.clone());
        let mut frontier = vec![vec![0u32; n]];
        while let Some(order) = frontier.pop() {
            for i in 0..n {
                if order[i] + 1 >= max_mult[i] {
                    continue;
                }
                let mut next = order.clone();
                next[i] += 1;
                if derivs.contains_key(&next) {
                    continue;
                }
                let d = derivs[&order].partial(i);
                derivs.insert(next.clone(), d);
                frontier.push(next);
            }
        }
        for (point, mults) in self.points() {
            for (order, deriv) in &derivs {
                if order.iter().zip(&mults).any(|(o, m)| o >= m) {
                    continue;
                }
                if !deriv.eval(&point).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Per-point exponent Σ_i ν_i(a_i) − n + 1.
    fn point_exponent(&self, mults: &[u32]) -> usize {
        let total: usize = mults.iter().map(|&m| m as usize).sum();
        total - self.nvars() + 1
    }

    /// The universal annihilator F(t) = ∏_a (t − p(a))^{Σν_i(a_i) − n + 1}:
    /// F(p) always lies in the grid ideal, and the minimal polynomial of the
    /// residue class of p divides F.
    pub fn build_annihilator(&self, p: &MultiPoly) -> Result<UniPoly> {
        if p.nvars() != self.nvars() {
            return Err(Error::Input(format!(
                "polynomial in {} variables, grid has {}",
                p.nvars(),
                self.nvars()
            )));
        }
        let mut acc = UniPoly::one();
        for (point, mults) in self.points() {
            let value = p.eval(&point);
            let lin = UniPoly::new(vec![-value, ri(1)]);
            for _ in 0..self.point_exponent(&mults) {
                acc = &acc * &lin;
            }
        }
        Ok(acc)
    }

    /// Closed-form minimal polynomial of the residue class of an injective
    /// linear form g: μ(t) = ∏_a (t − g(a))^{Σν_i(a_i) − n + 1}, with degree
    /// equal to the codimension. Errors when g is not injective on the grid.
    pub fn min_poly_of_injective_form(&self, form: &LinearForm) -> Result<UniPoly> {
        if form.len() != self.nvars() {
            return Err(Error::Input("linear form length mismatch".into()));
        }
        let points = self.points();
        let values: Vec<Rat> = points.iter().map(|(p, _)| form.apply(p)).collect();
        let distinct: BTreeSet<&Rat> = values.iter().collect();
        if distinct.len() != values.len() {
            return Err(Error::ContractViolation(
                "linear form is not injective on the grid".into(),
            ));
        }
        let mut acc = UniPoly::one();
        for (value, (_, mults)) in values.into_iter().zip(&points) {
            let lin = UniPoly::new(vec![-value, ri(1)]);
            for _ in 0..self.point_exponent(mults) {
                acc = &acc * &lin;
            }
        }
        Ok(acc)
    }
}

/// The sum/product identity on reals k_i ≥ 1:
/// Σ k_i − (n − 1) = ∏ k_i holds exactly when at most one k_i exceeds 1.
pub fn sum_product_identity(ks: &[Rat]) -> Result<bool> {
    if ks.is_empty() {
        return Err(Error::Input("need at least one value".into()));
    }
    if ks.iter().any(|k| k < &Rat::one()) {
        return Err(Error::Input("all values must be at least 1".into()));
    }
    let sum = ks.iter().fold(Rat::zero(), |a, b| a + b);
    let product = ks.iter().fold(Rat::one(), |a, b| a * b);
    Ok(sum - ri(ks.len() as i64 - 1) == product)
}

// --- serde -----------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct AlgebraWire {
    generators: Vec<UniPoly>,
    vars: Vec<String>,
}

impl Serialize for QuotientAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraWire {
            generators: self.generators.clone(),
            vars: self.vars.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuotientAlgebra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = AlgebraWire::deserialize(deserializer)?;
        QuotientAlgebra::with_vars(wire.generators, wire.vars)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct GridNodeWire {
    root: String,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct GridWire {
    axes: Vec<Vec<GridNodeWire>>,
}

impl Serialize for GridSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GridWire {
            axes: self
                .axes
                .iter()
                .map(|axis| {
                    axis.iter()
                        .map(|(r, m)| GridNodeWire {
                            root: rat_to_string(r),
                            mult: *m,
                        })
                        .collect()
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GridSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = GridWire::deserialize(deserializer)?;
        let axes = wire
            .axes
            .into_iter()
            .map(|axis| {
                axis.into_iter()
                    .map(|node| {
                        Ok((
                            parse_rat(&node.root).map_err(|e| D::Error::custom(e.to_string()))?,
                            node.mult,
                        ))
                    })
                    .collect::<std::result::Result<Vec<_>, D::Error>>()
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        GridSpec::new(axes).map_err(|e| D::Error::custom(e.to_string()))
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(rat_to_string))
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        LinearForm::new(coeffs).map_err(|e| D::Error::custom(e.to_string()))
    }
}
