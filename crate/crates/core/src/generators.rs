//! Fixture constructors: companion matrices, the block pair realizing the
//! regular representation of x̃ and ỹ, the classical 3×3 commuting pair, and
//! seeded unimodular conjugation.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::UniPoly;
use crate::rat::{ri, Rat};

/// A pair of monic inseparable polynomials of degree > 1; the block pair they
/// generate is a certified negative instance of size deg f · deg g.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleSpec {
    pub f: UniPoly,
    pub g: UniPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl<'de> Deserialize<'de> for CounterexampleSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            f: UniPoly,
            g: UniPoly,
            #[serde(default)]
            seed: Option<u64>,
        }
        let wire = Wire::deserialize(deserializer)?;
        CounterexampleSpec::new(wire.f, wire.g, wire.seed)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

impl CounterexampleSpec {
    pub fn new(f: UniPoly, g: UniPoly, seed: Option<u64>) -> Result<Self> {
        for (name, poly) in [("f", &f), ("g", &g)] {
            if poly.degree().is_none_or(|d| d < 2) {
                return Err(Error::Input(format!("{name} must have degree at least 2")));
            }
            if !poly.is_monic() {
                return Err(Error::Input(format!("{name} must be monic")));
            }
            if poly.is_separable()? {
                return Err(Error::Input(format!(
                    "{name} must be inseparable (have a repeated root)"
                )));
            }
        }
        Ok(CounterexampleSpec { f, g, seed })
    }

    pub fn matrix_size(&self) -> usize {
        self.f.degree().unwrap() * self.g.degree().unwrap()
    }
}

/// Companion matrix of a monic polynomial: ones on the superdiagonal and the
/// negated coefficients in the last row, so that both the minimal and the
/// characteristic polynomial equal f.
pub fn companion(f: &UniPoly) -> Result<QMatrix> {
    let d = f
        .degree()
        .ok_or_else(|| Error::Input("companion matrix needs degree at least 1".into()))?;
    if d == 0 {
        return Err(Error::Input(
            "companion matrix needs degree at least 1".into(),
        ));
    }
    if !f.is_monic() {
        return Err(Error::Input(
            "companion matrix requires a monic polynomial".into(),
        ));
    }
    let mut m = QMatrix::zero(d, d);
    for i in 0..d - 1 {
        m.set(i, i + 1, ri(1));
    }
    for j in 0..d {
        m.set(d - 1, j, -f.coeff(j));
    }
    Ok(m)
}

/// The regular representations of x̃ and ỹ on the basis of
/// k[x,y]/(f(x), g(y)) ordered 1, x, ..., x^{m−1}, y, xy, ...:
/// ρ(f) is block-diagonal with deg g copies of the companion of f, and ρ(g)
/// is the block companion of g with m×m identity and scalar blocks.
///
/// The outputs commute, have minimal polynomials f and g, and span an algebra
/// of dimension deg f · deg g.
pub fn regular_rep_pair(spec: &CounterexampleSpec) -> Result<(QMatrix, QMatrix)> {
    let m = spec.f.degree().unwrap();
    let k = spec.g.degree().unwrap();
    let n = m * k;
    let cf = companion(&spec.f)?;

    let mut rep_f = QMatrix::zero(n, n);
    for block in 0..k {
        for i in 0..m {
            for j in 0..m {
                rep_f.set(block * m + i, block * m + j, cf.at(i, j).clone());
            }
        }
    }

    let mut rep_g = QMatrix::zero(n, n);
    for block in 0..k - 1 {
        for i in 0..m {
            rep_g.set(block * m + i, (block + 1) * m + i, ri(1));
        }
    }
    for block in 0..k {
        let coeff = -spec.g.coeff(block);
        for i in 0..m {
            rep_g.set((k - 1) * m + i, block * m + i, coeff.clone());
        }
    }
    Ok((rep_f, rep_g))
}

/// The classical 3×3 commuting pair with A² = B² = AB = BA = 0: A has its
/// only nonzero entry at (1,2) and B at (1,3).
pub fn frobenius_pair() -> (QMatrix, QMatrix) {
    (
        QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
    )
}

/// Seeded unimodular matrix: a product of unit upper- and lower-triangular
/// integer matrices, so det S = 1 and S⁻¹ is exactly computable.
pub fn random_unimodular(n: usize, seed: u64) -> QMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = QMatrix::identity(n);
    for round in 0..4 {
        let mut t = QMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let fill = if round % 2 == 0 { j > i } else { j < i };
                if fill {
                    t.set(i, j, ri(rng.random_range(-3..=3)));
                }
            }
        }
        s = s.mul(&t).expect("square factors");
    }
    s
}

/// Conjugate a pair by an explicit invertible matrix, returning
/// (S·A·S⁻¹, S·B·S⁻¹, S).
pub fn conjugate_pair(
    pair: (&QMatrix, &QMatrix),
    s: &QMatrix,
) -> Result<(QMatrix, QMatrix, QMatrix)> {
    let (a, b) = pair;
    if !a.is_square() || a.rows() != b.rows() || !b.is_square() || s.rows() != a.rows() {
        return Err(Error::Input(
            "conjugation requires square matrices of equal size".into(),
        ));
    }
    let s_inv = s
        .inverse()?
        .ok_or_else(|| Error::Input("conjugating matrix must be invertible".into()))?;
    let a2 = s.mul(a)?.mul(&s_inv)?;
    let b2 = s.mul(b)?.mul(&s_inv)?;
    Ok((a2, b2, s.clone()))
}

/// Conjugate a pair by a seeded unimodular matrix. Conjugation preserves
/// commutation, minimal polynomials and the span dimension.
pub fn random_conjugate(
    pair: (&QMatrix, &QMatrix),
    seed: u64,
) -> Result<(QMatrix, QMatrix, QMatrix)> {
    let s = random_unimodular(pair.0.rows(), seed);
    conjugate_pair(pair, &s)
}

/// Monic separable polynomial with `count` distinct small integer roots.
pub fn random_separable(rng: &mut impl Rng, count: usize) -> UniPoly {
    let roots = distinct_roots(rng, count);
    UniPoly::from_roots(&roots)
}

/// Monic inseparable polynomial built constructively: draw distinct small
/// integer roots and square the first factor, guaranteeing a repeated root.
pub fn random_inseparable(rng: &mut impl Rng, base_roots: usize) -> UniPoly {
    let count = base_roots.max(1);
    let mut roots = distinct_roots(rng, count);
    roots.push(roots[0].clone());
    UniPoly::from_roots(&roots)
}

fn distinct_roots(rng: &mut impl Rng, count: usize) -> Vec<Rat> {
    assert!(count <= 13, "root pool covers [-6, 6]");
    let mut pool: Vec<i64> = (-6..=6).collect();
    let mut roots = Vec::with_capacity(count);
    for _ in 0..count {
        let idx = rng.random_range(0..pool.len());
        roots.push(ri(pool.swap_remove(idx)));
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subalgebra::{commute_check, span_dimension};

    fn example_spec() -> CounterexampleSpec {
        CounterexampleSpec::new(
            UniPoly::from_ints(&[2, -3, 0, 1]),
            UniPoly::from_ints(&[1, 2, 1]),
            None,
        )
        .unwrap()
    }

    #[test]
    fn companion_examples() {
        let c = companion(&UniPoly::from_ints(&[2, -3, 0, 1])).unwrap();
        assert_eq!(
            c,
            QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[-2, 3, 0]])
        );
        let c = companion(&UniPoly::from_ints(&[-7, 1])).unwrap();
        assert_eq!(c, QMatrix::from_int_rows(&[&[7]]));
        let c = companion(&UniPoly::from_ints(&[1, 2, 1])).unwrap();
        assert_eq!(c, QMatrix::from_int_rows(&[&[0, 1], &[-1, -2]]));
        // non-monic rejected
        assert!(companion(&UniPoly::from_ints(&[1, 2])).is_err());
        assert!(companion(&UniPoly::from_ints(&[5])).is_err());
    }

    #[test]
    fn companion_min_poly_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let degree = rng.random_range(1..=6usize);
            let coeffs: Vec<Rat> = (0..degree).map(|_| ri(rng.random_range(-4..=4))).collect();
            let mut all = coeffs;
            all.push(ri(1));
            let f = UniPoly::new(all);
            let c = companion(&f).unwrap();
            assert_eq!(c.min_poly().unwrap(), f);
        }
    }

    #[test]
    fn regular_rep_pair_matches_printed_blocks() {
        let (rf, rg) = regular_rep_pair(&example_spec()).unwrap();
        let want_f = QMatrix::from_int_rows(&[
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[-2, 3, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, -2, 3, 0],
        ]);
        let want_g = QMatrix::from_int_rows(&[
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[-1, 0, 0, -2, 0, 0],
            &[0, -1, 0, 0, -2, 0],
            &[0, 0, -1, 0, 0, -2],
        ]);
        assert_eq!(rf, want_f);
        assert_eq!(rg, want_g);
        assert!(commute_check(&[rf.clone(), rg.clone()]).unwrap());
        assert_eq!(rf.min_poly().unwrap(), UniPoly::from_ints(&[2, -3, 0, 1]));
        assert_eq!(rg.min_poly().unwrap(), UniPoly::from_ints(&[1, 2, 1]));
        let (dim, _) = span_dimension(&[rf, rg]).unwrap();
        assert_eq!(dim, 6);
    }

    #[test]
    fn regular_rep_pair_square_square() {
        // f = g = x²: regular representation of x̃, ỹ in k[x,y]/(x², y²)
        let spec = CounterexampleSpec::new(
            UniPoly::from_ints(&[0, 0, 1]),
            UniPoly::from_ints(&[0, 0, 1]),
            None,
        )
        .unwrap();
        let (rf, rg) = regular_rep_pair(&spec).unwrap();
        let want_f =
            QMatrix::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let want_g =
            QMatrix::from_int_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(rf, want_f);
        assert_eq!(rg, want_g);
        assert!(commute_check(&[rf, rg]).unwrap());
    }

    #[test]
    fn counterexample_spec_validation() {
        // separable f rejected
        assert!(CounterexampleSpec::new(
            UniPoly::from_ints(&[-2, 0, 1]),
            UniPoly::from_ints(&[1, 2, 1]),
            None
        )
        .is_err());
        // degree 1 rejected
        assert!(CounterexampleSpec::new(
            UniPoly::from_ints(&[1, 1]),
            UniPoly::from_ints(&[1, 2, 1]),
            None
        )
        .is_err());
        // non-monic rejected
        assert!(CounterexampleSpec::new(
            UniPoly::from_ints(&[2, 4, 2]),
            UniPoly::from_ints(&[1, 2, 1]),
            None
        )
        .is_err());
        // deserialization validates too
        assert!(serde_json::from_str::<CounterexampleSpec>(
            r#"{"f":["-2","0","1"],"g":["1","2","1"]}"#
        )
        .is_err());
    }

    #[test]
    fn frobenius_pair_facts() {
        let (a, b) = frobenius_pair();
        assert_eq!(a.at(0, 1), &ri(1));
        assert_eq!(b.at(0, 2), &ri(1));
        assert!(a.mul(&a).unwrap().is_zero());
        assert!(b.mul(&b).unwrap().is_zero());
        assert!(a.mul(&b).unwrap().is_zero());
        assert!(b.mul(&a).unwrap().is_zero());
        let (dim, _) = span_dimension(&[a, b]).unwrap();
        assert_eq!(dim, 3);
    }

    #[test]
    fn conjugation_preserves_invariants() {
        let (rf, rg) = regular_rep_pair(&example_spec()).unwrap();
        let (a, b, s) = random_conjugate((&rf, &rg), 77).unwrap();
        // unimodular: the inverse is integral and det = ±1; verify S·S⁻¹ = I
        let s_inv = s.inverse().unwrap().unwrap();
        assert_eq!(s.mul(&s_inv).unwrap(), QMatrix::identity(6));
        assert!(commute_check(&[a.clone(), b.clone()]).unwrap());
        assert_eq!(a.min_poly().unwrap(), rf.min_poly().unwrap());
        assert_eq!(b.min_poly().unwrap(), rg.min_poly().unwrap());
        let (dim, _) = span_dimension(&[a, b]).unwrap();
        assert_eq!(dim, 6);
        // identity conjugation is a no-op
        let (a, b, _) = conjugate_pair((&rf, &rg), &QMatrix::identity(6)).unwrap();
        assert_eq!((a, b), (rf, rg));
    }

    #[test]
    fn random_unimodular_has_unit_determinant() {
        for seed in 0..5 {
            let s = random_unimodular(4, seed);
            let s_inv = s.inverse().unwrap().unwrap();
            assert_eq!(s.mul(&s_inv).unwrap(), QMatrix::identity(4));
            // all entries of the inverse are integers (unimodularity)
            for i in 0..4 {
                for j in 0..4 {
                    assert!(num_traits::One::is_one(s_inv.at(i, j).denom()));
                }
            }
        }
    }

    #[test]
    fn samplers_produce_what_they_claim() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let s = random_separable(&mut rng, 3);
            assert!(s.is_separable().unwrap());
            assert!(s.is_monic());
            let i = random_inseparable(&mut rng, 2);
            assert!(!i.is_separable().unwrap());
            assert!(i.is_monic());
            assert!(i.degree().unwrap() >= 2);
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = example_spec();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"f":["2","-3","0","1"],"g":["1","2","1"]}"#);
        let back: CounterexampleSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.f, spec.f);
        assert_eq!(back.g, spec.g);
    }
}
