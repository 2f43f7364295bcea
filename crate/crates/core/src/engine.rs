//! Top-level analysis of a commuting family: construct a common source matrix
//! C with every input a polynomial in C, or emit a verified negative
//! certificate, or report an explicit unknown.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{apply_poly, QMatrix};
use crate::poly::UniPoly;
use crate::quotient::{LinearForm, QuotientAlgebra, DEFAULT_SEARCH_BOUND};
use crate::subalgebra::{
    commute_check, express_as_polynomial, monte_carlo_codim_with_basis, span_dimension,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "CONSTRUCTED")]
    Constructed,
    #[serde(rename = "NEGATIVE_IN_SPAN")]
    NegativeInSpan,
    #[serde(rename = "NEGATIVE_ABSOLUTE")]
    NegativeAbsolute,
    #[serde(rename = "NEGATIVE_ABSOLUTE_PROBABILISTIC")]
    NegativeAbsoluteProbabilistic,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl Verdict {
    /// Stable process exit code for shell pipelines.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Constructed => 0,
            Verdict::NegativeInSpan => 10,
            Verdict::NegativeAbsolute => 11,
            Verdict::NegativeAbsoluteProbabilistic => 12,
            Verdict::Unknown => 20,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Constructed => "CONSTRUCTED",
            Verdict::NegativeInSpan => "NEGATIVE_IN_SPAN",
            Verdict::NegativeAbsolute => "NEGATIVE_ABSOLUTE",
            Verdict::NegativeAbsoluteProbabilistic => "NEGATIVE_ABSOLUTE_PROBABILISTIC",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

/// A constructed common source: C together with the expressing polynomials,
/// re-verified (p_i(C) = A_i exactly) before being returned.
#[derive(Debug, Clone, Serialize)]
pub struct CommonSource {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_form: Option<LinearForm>,
    pub source: QMatrix,
    pub polynomials: Vec<UniPoly>,
}

/// A verified negative certificate for a commuting pair.
#[derive(Debug, Clone, Serialize)]
pub struct NegativeCertificate {
    pub min_poly_degrees: [usize; 2],
    pub degree_product: usize,
    pub span_dimension: usize,
    pub matrix_size: usize,
    /// True when the certificate excludes every matrix, not just members of
    /// k[A, B].
    pub absolute: bool,
    pub statement: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloEvidence {
    pub span_dimension: usize,
    pub matrix_size: usize,
    pub observed_codim: usize,
    pub trials: usize,
    pub seed: u64,
    pub statement: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Constructed(CommonSource),
    Negative(NegativeCertificate),
    Probabilistic(MonteCarloEvidence),
    Unknown {
        reason: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        span_dimension: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        observed_codim: Option<usize>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub matrix_count: usize,
    pub matrix_size: usize,
    pub min_polys: Vec<UniPoly>,
    pub separable: Vec<bool>,
    pub commuting: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input_summary: InputSummary,
    pub verdict: Verdict,
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub trials: usize,
    pub seed: u64,
    pub search_bound: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            trials: 100,
            seed: 0,
            search_bound: DEFAULT_SEARCH_BOUND,
        }
    }
}

fn validate_family(ms: &[QMatrix]) -> Result<usize> {
    if ms.is_empty() {
        return Err(Error::Input("need at least one matrix".into()));
    }
    let n = ms[0].rows();
    if ms.iter().any(|m| !m.is_square() || m.rows() != n) {
        return Err(Error::Input(
            "matrices must be square and of equal size".into(),
        ));
    }
    Ok(n)
}

/// Construct C = Σ c_i·A_i from an injective linear form on the root grid of
/// the minimal polynomials, and express every input as a polynomial in C.
///
/// Requires a commuting family with at most one inseparable minimal
/// polynomial. If the coefficient search exhausts its bound, falls back to a
/// cyclic member (deg μ = n) expressing all the others, when one exists.
pub fn construct_common_source(ms: &[QMatrix], bound: usize) -> Result<CommonSource> {
    let n = validate_family(ms)?;
    if !commute_check(ms)? {
        return Err(Error::Input("matrices do not commute".into()));
    }
    let min_polys: Vec<UniPoly> = ms.iter().map(|m| m.min_poly()).collect::<Result<_>>()?;
    let mut inseparable = 0usize;
    for mu in &min_polys {
        if mu.degree() != Some(1) && !mu.is_separable()? {
            inseparable += 1;
        }
    }
    if inseparable > 1 {
        return Err(Error::HypothesisNotMet(format!(
            "{inseparable} matrices have inseparable minimal polynomials; at most one is allowed"
        )));
    }

    let algebra = QuotientAlgebra::new(min_polys.clone())?;
    match algebra.find_primitive_linear_form_bounded(bound) {
        Ok(form) => {
            let mut source = QMatrix::zero(n, n);
            for (c, a) in form.coeffs().iter().zip(ms) {
                source = source.add(&a.scale(c))?;
            }
            let polynomials = express_all(ms, &source)?;
            Ok(CommonSource {
                linear_form: Some(form),
                source,
                polynomials,
            })
        }
        Err(Error::SearchExhausted { candidates }) => {
            // A member whose minimal polynomial has full degree n generates
            // everything that commutes with it.
            for (i, mu) in min_polys.iter().enumerate() {
                if mu.degree() != Some(n) {
                    continue;
                }
                let mut polynomials = Vec::with_capacity(ms.len());
                let mut all = true;
                for a in ms {
                    match express_as_polynomial(a, &ms[i])? {
                        Some(p) => polynomials.push(p),
                        None => {
                            all = false;
                            break;
                        }
                    }
                }
                if all {
                    verify_expressions(ms, &ms[i], &polynomials)?;
                    return Ok(CommonSource {
                        linear_form: None,
                        source: ms[i].clone(),
                        polynomials,
                    });
                }
            }
            Err(Error::SearchExhausted { candidates })
        }
        Err(e) => Err(e),
    }
}

fn express_all(ms: &[QMatrix], source: &QMatrix) -> Result<Vec<UniPoly>> {
    let mut polynomials = Vec::with_capacity(ms.len());
    for a in ms {
        match express_as_polynomial(a, source)? {
            Some(p) => polynomials.push(p),
            None => {
                return Err(Error::Internal(
                    "certified source failed to express a member".into(),
                ))
            }
        }
    }
    verify_expressions(ms, source, &polynomials)?;
    Ok(polynomials)
}

fn verify_expressions(ms: &[QMatrix], source: &QMatrix, ps: &[UniPoly]) -> Result<()> {
    for (a, p) in ms.iter().zip(ps) {
        if apply_poly(p, source)? != *a {
            return Err(Error::Internal(
                "replay verification p(C) = A failed".into(),
            ));
        }
    }
    Ok(())
}

/// Negative certificate for a commuting pair: when both minimal polynomials
/// are inseparable and deg μ_A·deg μ_B = dim k[A,B], no member of k[A,B] can
/// express both A and B; when that value also equals the matrix size n, no
/// matrix of any kind can. Returns `None` when the hypotheses do not hold.
pub fn negative_certificate(a: &QMatrix, b: &QMatrix) -> Result<Option<NegativeCertificate>> {
    let n = validate_family(&[a.clone(), b.clone()])?;
    if !commute_check(&[a.clone(), b.clone()])? {
        return Err(Error::Input("matrices do not commute".into()));
    }
    let mu_a = a.min_poly()?;
    let mu_b = b.min_poly()?;
    for mu in [&mu_a, &mu_b] {
        if mu.degree() == Some(1) || mu.is_separable()? {
            return Ok(None);
        }
    }
    let da = mu_a.degree().unwrap();
    let db = mu_b.degree().unwrap();
    let (dim, _) = span_dimension(&[a.clone(), b.clone()])?;
    if da * db != dim {
        return Ok(None);
    }
    let absolute = dim == n;
    let statement = if absolute {
        format!(
            "both minimal polynomials are inseparable and deg(mu_A)*deg(mu_B) = {da}*{db} = \
             {dim} = dim k[A,B] = n, so the pair algebra has no primitive element and no \
             {n}x{n} matrix C expresses both inputs as polynomials in C"
        )
    } else {
        format!(
            "both minimal polynomials are inseparable and deg(mu_A)*deg(mu_B) = {da}*{db} = \
             {dim} = dim k[A,B], so k[A,B] has no primitive element and no C inside k[A,B] \
             expresses both inputs as polynomials in C"
        )
    };
    Ok(Some(NegativeCertificate {
        min_poly_degrees: [da, db],
        degree_product: da * db,
        span_dimension: dim,
        matrix_size: n,
        absolute,
        statement,
    }))
}

/// Full decision pipeline. Returns a report even for non-commuting input
/// (verdict UNKNOWN with the reason recorded); hard errors are reserved for
/// malformed families.
pub fn analyze(ms: &[QMatrix], options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let n = validate_family(ms)?;
    if options.trials == 0 {
        return Err(Error::Input("need at least one trial".into()));
    }
    let min_polys: Vec<UniPoly> = ms.iter().map(|m| m.min_poly()).collect::<Result<_>>()?;
    let mut separable = Vec::with_capacity(ms.len());
    for mu in &min_polys {
        separable.push(mu.degree() == Some(1) || mu.is_separable()?);
    }
    let commuting = commute_check(ms)?;
    let summary = InputSummary {
        matrix_count: ms.len(),
        matrix_size: n,
        min_polys: min_polys.clone(),
        separable: separable.clone(),
        commuting,
    };
    if !commuting {
        return Ok(AnalysisReport {
            input_summary: summary,
            verdict: Verdict::Unknown,
            certificate: Certificate::Unknown {
                reason: "matrices do not commute".into(),
                span_dimension: None,
                observed_codim: None,
            },
            trials: None,
            seed: None,
        });
    }

    let inseparable = separable.iter().filter(|s| !**s).count();
    if inseparable <= 1 {
        return match construct_common_source(ms, options.search_bound) {
            Ok(source) => Ok(AnalysisReport {
                input_summary: summary,
                verdict: Verdict::Constructed,
                certificate: Certificate::Constructed(source),
                trials: None,
                seed: None,
            }),
            Err(Error::SearchExhausted { candidates }) => Ok(AnalysisReport {
                input_summary: summary,
                verdict: Verdict::Unknown,
                certificate: Certificate::Unknown {
                    reason: format!(
                        "a common source exists but the linear-form search exhausted \
                         {candidates} candidates per coordinate; retry with a larger bound"
                    ),
                    span_dimension: None,
                    observed_codim: None,
                },
                trials: None,
                seed: None,
            }),
            Err(e) => Err(e),
        };
    }

    // Scalar members are polynomials in any matrix and do not affect the
    // span, so negative reasoning applies to the non-scalar members.
    let effective: Vec<&QMatrix> = ms.iter().filter(|m| !m.is_scalar()).collect();
    if effective.len() == 2 {
        if let Some(cert) = negative_certificate(effective[0], effective[1])? {
            let verdict = if cert.absolute {
                Verdict::NegativeAbsolute
            } else {
                Verdict::NegativeInSpan
            };
            return Ok(AnalysisReport {
                input_summary: summary,
                verdict,
                certificate: Certificate::Negative(cert),
                trials: None,
                seed: None,
            });
        }
    }

    let (dim, basis) = span_dimension(ms)?;
    let observed = monte_carlo_codim_with_basis(&basis, options.trials, options.seed)?;
    if dim == n && observed < dim {
        let statement = format!(
            "dim k[A_1,...,A_m] = {dim} = n and {trials} random elements all have minimal \
             polynomials of degree at most {observed} < {dim}: strong evidence that the span \
             algebra has no primitive element, hence that no matrix C expresses every input \
             as a polynomial in C (a random element of an algebra with a primitive element \
             attains the full degree with probability one)",
            trials = options.trials
        );
        return Ok(AnalysisReport {
            input_summary: summary,
            verdict: Verdict::NegativeAbsoluteProbabilistic,
            certificate: Certificate::Probabilistic(MonteCarloEvidence {
                span_dimension: dim,
                matrix_size: n,
                observed_codim: observed,
                trials: options.trials,
                seed: options.seed,
                statement,
            }),
            trials: Some(options.trials),
            seed: Some(options.seed),
        });
    }

    Ok(AnalysisReport {
        input_summary: summary,
        verdict: Verdict::Unknown,
        certificate: Certificate::Unknown {
            reason: if dim == n {
                "randomized probing matched the span dimension, so the span algebra likely \
                 has a primitive element, but more than one input is inseparable and no \
                 implemented construction applies"
                    .into()
            } else {
                format!(
                    "dim k[A_1,...,A_m] = {dim} < n = {n}: no implemented certificate covers \
                     this configuration"
                )
            },
            span_dimension: Some(dim),
            observed_codim: Some(observed),
        },
        trials: Some(options.trials),
        seed: Some(options.seed),
    })
}
