//! The unital subalgebra k[A1,...,Am] generated by commuting matrices:
//! spanning sets, dimension, membership, and expressing one matrix as a
//! polynomial in another.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{apply_poly, Insertion, QMatrix, SpanTracker};
use crate::poly::UniPoly;
use crate::rat::{ri, Rat};

/// Echelonized spanning data for k[A1,...,Am].
#[derive(Debug, Clone)]
pub struct SpanBasis {
    pub generators: Vec<QMatrix>,
    /// Linearly independent monomial products, in insertion order.
    pub basis: Vec<QMatrix>,
    /// Exponent bound per generator: the degree of its minimal polynomial.
    pub degree_bounds: Vec<usize>,
}

fn check_family(ms: &[QMatrix]) -> Result<usize> {
    if ms.is_empty() {
        return Err(Error::Input("need at least one matrix".into()));
    }
    let n = ms[0].rows();
    for m in ms {
        if !m.is_square() || m.rows() != n {
            return Err(Error::Input(
                "matrices must be square and of equal size".into(),
            ));
        }
    }
    Ok(n)
}

/// True when every pair of matrices commutes.
pub fn commute_check(ms: &[QMatrix]) -> Result<bool> {
    check_family(ms)?;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if ms[i].mul(&ms[j])? != ms[j].mul(&ms[i])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of k[A1,...,Am] as a vector space, with the spanning basis.
///
/// Monomial products A1^e1···Am^em with e_i < deg μ_{A_i} span the algebra
/// (reduction is per-generator via μ_{A_i}(A_i) = 0 because the generators
/// commute); the dimension is the rank of their vectorizations.
pub fn span_dimension(ms: &[QMatrix]) -> Result<(usize, SpanBasis)> {
    let n = check_family(ms)?;
    if !commute_check(ms)? {
        return Err(Error::Input("matrices do not commute".into()));
    }
    let degree_bounds: Vec<usize> = ms
        .iter()
        .map(|m| Ok(m.min_poly()?.degree().expect("nonzero minimal polynomial")))
        .collect::<Result<_>>()?;
    // Power tables per generator.
    let mut powers: Vec<Vec<QMatrix>> = Vec::with_capacity(ms.len());
    for (m, &bound) in ms.iter().zip(&degree_bounds) {
        let mut table = vec![QMatrix::identity(n)];
        for _ in 1..bound {
            table.push(table.last().unwrap().mul(m)?);
        }
        powers.push(table);
    }
    let mut tracker = SpanTracker::new(n * n);
    let mut basis = Vec::new();
    // Odometer over exponent boxes, first generator fastest.
    let total: usize = degree_bounds.iter().product();
    let mut exps = vec![0usize; ms.len()];
    for _ in 0..total {
        let mut product = QMatrix::identity(n);
        for (table, &e) in powers.iter().zip(&exps) {
            if e > 0 {
                product = product.mul(&table[e])?;
            }
        }
        if let Insertion::Independent = tracker.insert(product.vectorize()) {
            basis.push(product);
        }
        for (slot, &bound) in exps.iter_mut().zip(&degree_bounds) {
            *slot += 1;
            if *slot < bound {
                break;
            }
            *slot = 0;
        }
    }
    Ok((
        tracker.rank(),
        SpanBasis {
            generators: ms.to_vec(),
            basis,
            degree_bounds,
        },
    ))
}

/// Express `target` as a polynomial in `source`: returns p with
/// deg p < deg μ_source and p(source) = target when target ∈ k[source],
/// `None` otherwise. Deterministic: solved on the vectorized powers with free
/// variables pinned to zero (the solution is unique when it exists, since the
/// powers below deg μ are independent).
pub fn express_as_polynomial(target: &QMatrix, source: &QMatrix) -> Result<Option<UniPoly>> {
    check_family(&[target.clone(), source.clone()])?;
    let n = source.rows();
    let d = source
        .min_poly()?
        .degree()
        .expect("nonzero minimal polynomial");
    // Columns are the vectorized powers I, C, ..., C^{d−1}.
    let mut power = QMatrix::identity(n);
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(d);
    for k in 0..d {
        columns.push(power.vectorize());
        if k + 1 < d {
            power = power.mul(source)?;
        }
    }
    let system = QMatrix::from_fn(n * n, d, |i, j| columns[j][i].clone());
    match system.solve_linear(&target.vectorize())? {
        Some(solution) => {
            let p = UniPoly::new(solution);
            debug_assert_eq!(apply_poly(&p, source)?, *target);
            Ok(Some(p))
        }
        None => Ok(None),
    }
}

/// Probabilistic lower bound for the codimension of k[A1,...,Am]: the maximum
/// degree of the minimal polynomial over `trials` random integer combinations
/// of the span basis (coefficients in [−10, 10] from a seeded stream). Each
/// trial attains the true codimension with probability one over the
/// rationals, so the bound is sharp in practice.
pub fn monte_carlo_codim(ms: &[QMatrix], trials: usize, seed: u64) -> Result<usize> {
    let (_, basis) = span_dimension(ms)?;
    monte_carlo_codim_with_basis(&basis, trials, seed)
}

pub fn monte_carlo_codim_with_basis(span: &SpanBasis, trials: usize, seed: u64) -> Result<usize> {
    if trials == 0 {
        return Err(Error::Input("need at least one trial".into()));
    }
    let n = span.generators[0].rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0usize;
    for _ in 0..trials {
        let mut element = QMatrix::zero(n, n);
        for b in &span.basis {
            let c: i64 = rng.random_range(-10..=10);
            if c != 0 {
                element = element.add(&b.scale(&ri(c)))?;
            }
        }
        let degree = element
            .min_poly()?
            .degree()
            .expect("nonzero minimal polynomial");
        best = best.max(degree);
        if best == span.basis.len() {
            break; // cannot exceed the dimension
        }
    }
    Ok(best)
}
