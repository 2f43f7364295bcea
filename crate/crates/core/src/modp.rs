//! Polynomial arithmetic modulo word-sized primes.
//!
//! Screening layer for the injective-linear-form search: a monic integer
//! polynomial that is squarefree modulo one good prime is squarefree over the
//! rationals, so a single modular witness certifies injectivity. All values
//! stay below 2^31 so products fit in u64.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rat::{inv_mod, mul_mod, pow_mod, rat_mod};

/// Fixed screening primes. Reduction skips a prime when a denominator or a
/// leading coefficient vanishes modulo it.
pub(crate) const SCREEN_PRIMES: [u64; 4] =
    [2_147_483_647, 2_147_483_629, 1_000_000_007, 998_244_353];

/// Dense polynomial over F_p, low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PolyMod {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl PolyMod {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyMod { coeffs, p }
    }

    pub fn zero(p: u64) -> Self {
        PolyMod {
            coeffs: Vec::new(),
            p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    /// Reduce an exact rational polynomial; `None` when a denominator is
    /// divisible by p or the leading coefficient collapses (degree loss).
    pub fn reduce(f: &UniPoly, p: u64) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            coeffs.push(rat_mod(c, p)?);
        }
        if let Some(&lc) = coeffs.last() {
            if lc == 0 {
                return None;
            }
        }
        Some(PolyMod { coeffs, p })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p))
            .collect();
        Self::new(coeffs, self.p)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        let lc_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let q = mul_mod(*rem.last().unwrap(), lc_inv, p);
            let k = rem.len() - 1 - dd;
            if q != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(c, q, p);
                    rem[k + i] = (rem[k + i] + p - sub) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        PolyMod { coeffs: rem, p }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn is_squarefree(&self) -> bool {
        debug_assert!(self.degree().is_some_and(|d| d >= 1));
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    #[cfg(test)]
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// c^deg·f(x/c): roots scaled by c.
    pub fn scale_roots(&self, c: u64) -> Self {
        let d = match self.degree() {
            Some(d) => d,
            None => return self.clone(),
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| mul_mod(a, pow_mod(c, (d - k) as u64, self.p), self.p))
            .collect();
        Self::new(coeffs, self.p)
    }

    /// Substitute x ↦ t − x (reflection shifted by the constant t).
    pub fn reflect_shift(&self, t: u64) -> Self {
        let p = self.p;
        // Horner with the linear polynomial t − x.
        let mut acc = Self::zero(p);
        for &c in self.coeffs.iter().rev() {
            let mut next = vec![0u64; acc.coeffs.len() + 1];
            for (k, &a) in acc.coeffs.iter().enumerate() {
                next[k] = (next[k] + mul_mod(a, t, p)) % p;
                next[k + 1] = (next[k + 1] + p - a % p) % p;
            }
            next[0] = (next[0] + c) % p;
            acc = Self::new(next, p);
        }
        acc
    }
}

/// Resultant over F_p via the Euclidean remainder sequence.
///
/// Same convention as the exact resultant: the Sylvester determinant,
/// Res(f, g) = lc(f)^deg g·lc(g)^deg f·∏(aᵢ − bⱼ).
pub(crate) fn resultant_mod(f: &PolyMod, g: &PolyMod) -> Result<u64> {
    let p = f.p;
    let (mut a, mut b) = (f.clone(), g.clone());
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        _ => {
            return Err(Error::DegenerateInput(
                "resultant of zero polynomial".into(),
            ))
        }
    };
    let mut sign_flip = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
    }
    let mut acc = 1u64;
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            acc = mul_mod(acc, pow_mod(b.leading(), da as u64, p), p);
            break;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(0);
        }
        let dr = r.degree().unwrap();
        acc = mul_mod(acc, pow_mod(b.leading(), (da - dr) as u64, p), p);
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        a = b;
        b = r;
    }
    if sign_flip {
        acc = (p - acc) % p;
    }
    Ok(acc)
}

/// Newton interpolation over F_p through (0, ys[0]), (1, ys[1]), ...
pub(crate) fn interpolate_mod(ys: &[u64], p: u64) -> PolyMod {
    let n = ys.len();
    assert!(n as u64 <= p, "need distinct nodes mod p");
    let mut coeffs: Vec<u64> = ys.to_vec();
    for level in 1..n {
        let inv = inv_mod(level as u64, p);
        for i in (level..n).rev() {
            let diff = (coeffs[i] + p - coeffs[i - 1]) % p;
            coeffs[i] = mul_mod(diff, inv, p);
        }
    }
    let mut acc = PolyMod::zero(p);
    for i in (0..n).rev() {
        // acc·(x − i) + coeffs[i]
        let node = i as u64 % p;
        let mut next = vec![0u64; acc.coeffs.len() + 1];
        for (k, &a) in acc.coeffs.iter().enumerate() {
            next[k] = (next[k] + p - mul_mod(a, node, p)) % p;
            next[k + 1] = (next[k + 1] + a) % p;
        }
        next[0] = (next[0] + coeffs[i]) % p;
        acc = PolyMod::new(next, p);
    }
    acc
}

/// Modular image of the values polynomial: the monic polynomial with roots
/// {a + c·b} for the (squarefree, monic) inputs, computed by evaluation and
/// interpolation entirely over F_p.
pub(crate) fn values_poly_mod(f: &PolyMod, g: &PolyMod, c: u64, p: u64) -> Result<PolyMod> {
    let df = f
        .degree()
        .ok_or_else(|| Error::DegenerateInput("zero polynomial".into()))?;
    let dg = g
        .degree()
        .ok_or_else(|| Error::DegenerateInput("zero polynomial".into()))?;
    let degree = df * dg;
    if degree as u64 + 1 > p {
        return Err(Error::Internal(
            "fold degree exceeds screening prime".into(),
        ));
    }
    let g_scaled = g.scale_roots(c);
    let mut ys = Vec::with_capacity(degree + 1);
    for t in 0..=degree as u64 {
        let shifted = g_scaled.reflect_shift(t);
        ys.push(resultant_mod(f, &shifted)?);
    }
    let result = interpolate_mod(&ys, p);
    if result.degree() != Some(degree) || result.leading() != 1 {
        return Err(Error::Internal(
            "modular values polynomial must be monic".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ri, Rat};

    const P: u64 = 1_000_000_007;

    fn pm(coeffs: &[i64]) -> PolyMod {
        PolyMod::new(
            coeffs
                .iter()
                .map(|&c| ((c % P as i64 + P as i64) % P as i64) as u64)
                .collect(),
            P,
        )
    }

    #[test]
    fn screening_primes_are_prime() {
        for p in SCREEN_PRIMES {
            assert!(p > 2 && p < 1 << 31);
            let mut d = 2u64;
            while d * d <= p {
                assert!(p % d != 0, "{p} is divisible by {d}");
                d += 1;
            }
        }
    }

    #[test]
    fn rem_and_gcd() {
        // (x² − 1) mod (x − 1) = 0
        assert!(pm(&[-1, 0, 1]).rem(&pm(&[-1, 1])).is_zero());
        let g = pm(&[1, 2, 1]).gcd(&pm(&[2, 2]));
        assert_eq!(g.degree(), Some(1));
        assert!(!pm(&[1, 2, 1]).is_squarefree());
        assert!(pm(&[-1, 0, 1]).is_squarefree());
    }

    #[test]
    fn resultant_matches_exact_values() {
        let cases: [(&[i64], &[i64]); 5] = [
            (&[-2, 1], &[-3, 1]),
            (&[-1, 0, 1], &[-1, 1]),
            (&[-2, 0, 1], &[-3, 0, 1]),
            (&[-2, 0, 1], &[-3, 1]),
            (&[2, -3, 0, 1], &[1, 2, 1]),
        ];
        for (f, g) in cases {
            let exact = UniPoly::from_ints(f)
                .resultant(&UniPoly::from_ints(g))
                .unwrap();
            let exact_mod = crate::rat::rat_mod(&exact, P).unwrap();
            assert_eq!(resultant_mod(&pm(f), &pm(g)).unwrap(), exact_mod);
            // and with the arguments swapped
            let exact_sw = UniPoly::from_ints(g)
                .resultant(&UniPoly::from_ints(f))
                .unwrap();
            let exact_sw_mod = crate::rat::rat_mod(&exact_sw, P).unwrap();
            assert_eq!(resultant_mod(&pm(g), &pm(f)).unwrap(), exact_sw_mod);
        }
    }

    #[test]
    fn values_poly_matches_exact_reduction() {
        let f = UniPoly::from_ints(&[-1, 0, 1]); // roots ±1
        let g = UniPoly::from_ints(&[0, -1, 1]); // roots 0, 1
        for c in [1i64, -1, 2, 5] {
            let exact = UniPoly::values_poly(&f, &g, &ri(c)).unwrap();
            let want: Vec<u64> = exact
                .coeffs()
                .iter()
                .map(|q: &Rat| crate::rat::rat_mod(q, P).unwrap())
                .collect();
            let fp = PolyMod::reduce(&f, P).unwrap();
            let gp = PolyMod::reduce(&g, P).unwrap();
            let cm = ((c % P as i64 + P as i64) % P as i64) as u64;
            let got = values_poly_mod(&fp, &gp, cm, P).unwrap();
            assert_eq!(got.coeffs, want);
        }
    }

    #[test]
    fn interpolation_round_trip() {
        let f = pm(&[2, -3, 0, 1]);
        let ys: Vec<u64> = (0..4).map(|t| f.eval(t)).collect();
        assert_eq!(interpolate_mod(&ys, P), f);
    }
}
