//! Sparse multivariate polynomials as exponent-vector → coefficient maps.
//!
//! These appear only as operation inputs (membership tests, annihilators,
//! normal forms); no general multivariate division is implemented because the
//! quotient generators are univariate and reduction happens per variable.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rat::{parse_rat, rat_to_string, ri, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The variable x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exps, Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, Rat)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exps, coef) in terms {
            if exps.len() != nvars {
                return Err(Error::Input(format!(
                    "term has {} exponents, expected {}",
                    exps.len(),
                    nvars
                )));
            }
            p.add_term(exps, coef);
        }
        Ok(p)
    }

    /// Embed a univariate polynomial as a polynomial in x_i.
    pub fn from_univariate(f: &UniPoly, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        for (k, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0; nvars];
            exps[i] = k as u32;
            p.terms.insert(exps, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exps: Vec<u32>, coef: Rat) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut acc = Rat::zero();
        for (exps, coef) in &self.terms {
            let mut term = coef.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Partial derivative with respect to x_i.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (exps, coef) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            out.add_term(e, coef * ri(exps[i] as i64));
        }
        out
    }

    /// Mixed partial derivative ∂^order.
    pub fn partial_mixed(&self, order: &[u32]) -> Self {
        assert_eq!(order.len(), self.nvars);
        let mut out = self.clone();
        for (i, &k) in order.iter().enumerate() {
            for _ in 0..k {
                out = out.partial(i);
            }
        }
        out
    }

    /// Substitute this polynomial into a univariate polynomial (Horner).
    pub fn compose_into(&self, outer: &UniPoly) -> Self {
        let mut acc = Self::zero(self.nvars);
        for c in outer.coeffs().iter().rev() {
            acc = acc.mul(self);
            acc.add_term(vec![0; self.nvars], c.clone());
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exps: Vec<u32>,
    coef: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(e, c)| TermWire {
            exps: e.clone(),
            coef: rat_to_string(c),
        }))
    }
}

/// Deserialization needs the ambient variable count, which comes from the
/// surrounding document (grid or algebra), so `MultiPoly` itself deserializes
/// from the term list and infers the count from the first term.
impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<TermWire>::deserialize(deserializer)?;
        let nvars = raw.first().map(|t| t.exps.len()).unwrap_or(0);
        let terms = raw
            .into_iter()
            .map(|t| {
                Ok((
                    t.exps,
                    parse_rat(&t.coef).map_err(|e| D::Error::custom(e.to_string()))?,
                ))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        MultiPoly::from_terms(nvars, terms).map_err(|e| D::Error::custom(e.to_string()))
    }
}

impl MultiPoly {
    /// Reinterpret with a different ambient variable count (used after
    /// deserialization when the document fixes the count). Errors if any term
    /// disagrees.
    pub fn with_nvars(self, nvars: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(nvars));
        }
        if self.nvars != nvars {
            return Err(Error::Input(format!(
                "polynomial uses {} variables, expected {}",
                self.nvars, nvars
            )));
        }
        Ok(self)
    }
}
