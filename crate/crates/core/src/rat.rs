//! Exact rational scalars.
//!
//! The ground field is fixed to the rationals. `Rat` is an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator, so equality is
//! structural and arithmetic never rounds.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on a zero denominator;
/// use [`parse_rat`] for untrusted input.
pub fn rq(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parse "p/q" or an integer literal, exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = |_| Error::Input(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::Input(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(bad)?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Canonical string form: "p" for integers, "p/q" otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduce a rational modulo a word-sized prime. `None` when the denominator
/// vanishes modulo `p`.
pub fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = ((r.numer() % &pb) + &pb) % &pb;
    let den = ((r.denom() % &pb) + &pb) % &pb;
    let num = u64::try_from(&num).expect("reduced residue fits u64");
    let den = u64::try_from(&den).expect("reduced residue fits u64");
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}
