//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty sequence and `degree()` returns `None` for it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::{parse_rat, rat_to_string, ri, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Build from low-degree-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ri(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ri(1))
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(ri(1), 1)
    }

    /// Monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut acc = Self::one();
        for r in roots {
            acc = &acc * &Self::new(vec![-r.clone(), ri(1)]);
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero when k exceeds the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Divide by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * ri(k as i64))
            .collect();
        Self::new(coeffs)
    }

    /// Quotient and remainder of exact division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DegenerateInput(
                "division by the zero polynomial".into(),
            ));
        }
        let dd = divisor.coeffs.len() - 1;
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let val = &rem[k + i] - &(c * &q);
                    rem[k + i] = val;
                }
            }
            quot[k] = q;
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "expected exact division, remainder {r}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other
            .div_rem(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// `gcd(f, 0) = monic(f)` and `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // Normalizing each remainder to monic keeps coefficient growth in check.
            let r = a.div_rem(&b).expect("nonzero divisor").1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Separability test: no repeated roots in the algebraic closure,
    /// i.e. gcd(f, f') is constant. Errors on zero or constant input.
    pub fn is_separable(&self) -> Result<bool> {
        if self.degree().is_none_or(|d| d == 0) {
            return Err(Error::DegenerateInput(
                "separability is defined for nonconstant polynomials".into(),
            ));
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Monic polynomial with the same roots, each with multiplicity one:
    /// f / gcd(f, f'). Errors on zero or constant input.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.degree().is_none_or(|d| d == 0) {
            return Err(Error::DegenerateInput(
                "squarefree part is defined for nonconstant polynomials".into(),
            ));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.monic())
    }

    /// Clear denominators: returns (integer coefficients, common scale λ > 0)
    /// with λ·f having the returned coefficients.
    fn to_integer_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (ints, lcm)
    }

    /// Resultant of two nonzero polynomials.
    ///
    /// Convention: Res(f, g) = lc(f)^deg g · lc(g)^deg f · ∏ (aᵢ − bⱼ) over the
    /// roots aᵢ of f and bⱼ of g, the determinant of the Sylvester matrix.
    /// So Res(x − 2, x − 3) = 2 − 3 = −1. Computed fraction-free over the
    /// integers (Bareiss) after clearing denominators.
    pub fn resultant(&self, other: &Self) -> Result<Rat> {
        let df = self
            .degree()
            .ok_or_else(|| Error::DegenerateInput("resultant of the zero polynomial".into()))?;
        let dg = other
            .degree()
            .ok_or_else(|| Error::DegenerateInput("resultant of the zero polynomial".into()))?;
        if df == 0 {
            return Ok(pow_rat(&self.leading_coeff(), dg));
        }
        if dg == 0 {
            return Ok(pow_rat(&other.leading_coeff(), df));
        }
        let (fi, fl) = self.to_integer_scaled();
        let (gi, gl) = other.to_integer_scaled();
        let det = sylvester_det(&fi, &gi);
        // Res(λf, μg) = λ^deg g · μ^deg f · Res(f, g).
        let scale = pow_big(&fl, dg) * pow_big(&gl, df);
        Ok(Rat::new(det, scale))
    }

    /// Polynomial with the scaled root set {c·b : g(b) = 0}: c^deg·g(x/c).
    /// Preserves monicity.
    pub fn scale_roots(&self, c: &Rat) -> Self {
        let d = match self.degree() {
            Some(d) => d,
            None => return Self::zero(),
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * pow_rat(c, d - k))
            .collect();
        Self::new(coeffs)
    }

    /// Substitute x ↦ s·x + t.
    pub fn compose_linear(&self, s: &Rat, t: &Rat) -> Self {
        let lin = Self::new(vec![t.clone(), s.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Monic polynomial whose roots are exactly {a + c·b : f(a) = 0, g(b) = 0},
    /// computed root-free as the resultant Res_x(f(x), c^deg g·g((t − x)/c)),
    /// evaluated at deg f·deg g + 1 points and interpolated.
    ///
    /// The degree is deg f · deg g; the map (a, b) ↦ a + c·b is injective on
    /// the root grid exactly when the result is squarefree. Inputs must be
    /// squarefree and c nonzero.
    pub fn values_poly(f: &Self, g: &Self, c: &Rat) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidCoefficient(
                "values polynomial requires a nonzero scale".into(),
            ));
        }
        for part in [f, g] {
            if !part.is_separable()? {
                return Err(Error::ContractViolation(
                    "values polynomial requires squarefree inputs".into(),
                ));
            }
        }
        let fm = f.monic();
        let gm = g.monic().scale_roots(c);
        let degree = fm.degree().unwrap() * gm.degree().unwrap();
        let minus_one = ri(-1);
        let mut points = Vec::with_capacity(degree + 1);
        for k in 0..=degree {
            let t = ri(k as i64);
            // g_c(t − x) as a polynomial in x; its resultant with f is the
            // product of t − (a + c·b) over the root grid.
            let shifted = gm.compose_linear(&minus_one, &t);
            points.push((t, fm.resultant(&shifted)?));
        }
        let result = interpolate(&points)?;
        debug_assert_eq!(result.degree(), Some(degree));
        debug_assert!(result.is_monic());
        Ok(result)
    }

    /// Render with an arbitrary variable label.
    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

fn pow_rat(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn pow_big(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Determinant of the Sylvester matrix of two integer polynomials
/// (low-degree-first coefficients), by fraction-free Bareiss elimination.
fn sylvester_det(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for row in 0..dg {
        for (k, c) in f.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in g.iter().rev().enumerate() {
            m[dg + row][row + k] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Exact integer determinant via the Bareiss algorithm.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact polynomial through the given points (Newton divided differences).
/// Errors if two nodes coincide.
pub fn interpolate(points: &[(Rat, Rat)]) -> Result<UniPoly> {
    let n = points.len();
    let mut coeffs: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            if dx.is_zero() {
                return Err(Error::Input("interpolation nodes must be distinct".into()));
            }
            coeffs[i] = (&coeffs[i] - &coeffs[i - 1]) / dx;
        }
    }
    // Expand the Newton form ∑ coeffs[i]·∏_{j<i}(x − x_j).
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::new(vec![-points[i].0.clone(), ri(1)]);
        acc = &(&acc * &lin) + &UniPoly::constant(coeffs[i].clone());
    }
    Ok(acc)
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let val = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = val;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        let var = self.var;
        if poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() {
                -c.clone()
            } else {
                c.clone()
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 || !unit_mag {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            if k > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "{var}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(rat_to_string))
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(UniPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rq;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[2, -3, 0, 1]).degree(), Some(3));
    }

    #[test]
    fn gcd_examples() {
        // (x² + 2x + 1, 2x + 2) → x + 1
        assert_eq!(p(&[1, 2, 1]).gcd(&p(&[2, 2])), p(&[1, 1]));
        // gcd(f, 0) = monic(f) for f = 3x − 6
        assert_eq!(p(&[-6, 3]).gcd(&UniPoly::zero()), p(&[-2, 1]));
        // (x² − 1, x − 1) → x − 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn gcd_divides_both_inputs_exactly() {
        let f = p(&[1, 2, 1]);
        let g = p(&[2, 2]);
        let d = f.gcd(&g);
        assert!(d.divides(&f));
        assert!(d.divides(&g));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[2, -3, 0, 1]).derivative(), p(&[-3, 0, 3]));
        assert_eq!(p(&[5]).derivative(), UniPoly::zero());
        assert_eq!(p(&[1, 2, 1]).derivative(), p(&[2, 2]));
    }

    #[test]
    fn separability_examples() {
        // (x+1)²
        assert!(!p(&[1, 2, 1]).is_separable().unwrap());
        // (x−1)²(x+2)
        assert!(!p(&[2, -3, 0, 1]).is_separable().unwrap());
        // x
        assert!(p(&[0, 1]).is_separable().unwrap());
        assert!(matches!(
            p(&[7]).is_separable(),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            UniPoly::zero().is_separable(),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn squarefree_part_examples() {
        // (x−1)²(x+2) → (x−1)(x+2) = x² + x − 2
        assert_eq!(p(&[2, -3, 0, 1]).squarefree_part().unwrap(), p(&[-2, 1, 1]));
        // (x+1)² → x + 1
        assert_eq!(p(&[1, 2, 1]).squarefree_part().unwrap(), p(&[1, 1]));
        // x² − 2 is already squarefree
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.squarefree_part().unwrap(), f);
        assert!(f.is_separable().unwrap());
    }

    #[test]
    fn squarefree_part_of_powers() {
        for f in [p(&[-2, 1]), p(&[-1, 0, 1]), p(&[3, 1, 1])] {
            let mut power = f.clone();
            for _ in 0..2 {
                assert_eq!(power.squarefree_part().unwrap(), f.monic());
                power = &power * &f;
            }
            assert_eq!(power.squarefree_part().unwrap(), f.monic());
        }
    }

    #[test]
    fn resultant_examples_and_sign_convention() {
        // Res(x − 2, x − 3) = 2 − 3 = −1: pins the sign convention.
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])).unwrap(), ri(-1));
        // shared root
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(), ri(0));
        // Res(x² − 2, x² − 3) = ∏(±√2 ∓ √3) = 1
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])).unwrap(), ri(1));
        // constants: Res(c, g) = c^deg g
        assert_eq!(p(&[5]).resultant(&p(&[-1, 0, 1])).unwrap(), ri(25));
        assert!(UniPoly::zero().resultant(&p(&[1, 1])).is_err());
    }

    #[test]
    fn resultant_matches_root_products() {
        // Res(f, g) = ∏ g(a) over roots a of monic f.
        let roots_f = [ri(1), ri(-2), rq(1, 2)];
        let roots_g = [ri(3), ri(-1)];
        let f = UniPoly::from_roots(&roots_f);
        let g = UniPoly::from_roots(&roots_g);
        let mut expected = Rat::one();
        for a in &roots_f {
            for b in &roots_g {
                expected *= a - b;
            }
        }
        assert_eq!(f.resultant(&g).unwrap(), expected);
        // with non-monic scaling: Res(2f, 3g) = 2^deg g·3^deg f·Res(f, g)
        let f2 = f.scale(&ri(2));
        let g3 = g.scale(&ri(3));
        assert_eq!(f2.resultant(&g3).unwrap(), expected * ri(4) * ri(27));
    }

    #[test]
    fn values_poly_examples() {
        // f = x² − 1, g = x, c = 7: roots {±1 + 7·0} → t² − 1
        let v = UniPoly::values_poly(&p(&[-1, 0, 1]), &p(&[0, 1]), &ri(7)).unwrap();
        assert_eq!(v, p(&[-1, 0, 1]));
        // f = g = x, c = 5 → t
        let v = UniPoly::values_poly(&p(&[0, 1]), &p(&[0, 1]), &ri(5)).unwrap();
        assert_eq!(v, p(&[0, 1]));
        // f = g = x² − x, c = 1: sums {0, 1, 1, 2} → t(t−1)²(t−2), not squarefree
        let f = p(&[0, -1, 1]);
        let v = UniPoly::values_poly(&f, &f, &ri(1)).unwrap();
        let expected = &(&p(&[0, 1]) * &p(&[-1, 1])) * &(&p(&[-1, 1]) * &p(&[-2, 1]));
        assert_eq!(v, expected);
        assert!(!v.is_separable().unwrap());
    }

    #[test]
    fn values_poly_rejects_bad_inputs() {
        let f = p(&[-1, 0, 1]);
        assert!(matches!(
            UniPoly::values_poly(&f, &f, &ri(0)),
            Err(Error::InvalidCoefficient(_))
        ));
        let sq = p(&[1, 2, 1]);
        assert!(matches!(
            UniPoly::values_poly(&sq, &f, &ri(1)),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn values_poly_brute_force_oracle() {
        // Rational-split fixtures: compare against the explicit root grid.
        let grids: [(&[i64], &[i64], i64); 4] = [
            (&[0, 1, 3], &[0, 2], 1),
            (&[-1, 2], &[1, 4, 6], 2),
            (&[0, 1], &[0, 1], 2),
            (&[5], &[-3, 7], -1),
        ];
        for (ra, rb, c) in grids {
            let roots_a: Vec<Rat> = ra.iter().map(|&v| ri(v)).collect();
            let roots_b: Vec<Rat> = rb.iter().map(|&v| ri(v)).collect();
            let f = UniPoly::from_roots(&roots_a);
            let g = UniPoly::from_roots(&roots_b);
            let c = ri(c);
            let got = UniPoly::values_poly(&f, &g, &c).unwrap();
            let mut sums = Vec::new();
            for a in &roots_a {
                for b in &roots_b {
                    sums.push(a + &(&c * b));
                }
            }
            assert_eq!(got, UniPoly::from_roots(&sums));
            assert_eq!(got.degree(), Some(ra.len() * rb.len()));
        }
    }

    #[test]
    fn interpolation_reproduces_polynomials() {
        let f = p(&[2, -3, 0, 1]);
        let points: Vec<(Rat, Rat)> = (0..4).map(|k| (ri(k), f.eval(&ri(k)))).collect();
        assert_eq!(interpolate(&points).unwrap(), f);
        assert!(interpolate(&[(ri(1), ri(0)), (ri(1), ri(2))]).is_err());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[2, -3, 0, 1]).to_string(), "x^3 - 3*x + 2");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 2, 1]).display_with("t").to_string(), "t^2 + 2*t + 1");
        assert_eq!(UniPoly::new(vec![rq(-1, 2)]).to_string(), "-1/2");
    }
}
