//! Batch command-line front end: JSON in, JSON (or text) out, with stable
//! exit codes so shell pipelines can branch on the verdict without parsing.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use commat::engine::{analyze, AnalyzeOptions, Certificate};
use commat::generators::{frobenius_pair, random_conjugate, regular_rep_pair, CounterexampleSpec};
use commat::multipoly::MultiPoly;
use commat::quotient::{GridSpec, QuotientAlgebra};
use commat::rat::rat_to_string;
use commat::{QMatrix, UniPoly};

/// Exit code for malformed input.
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "commat",
    about = "Decide whether commuting rational matrices are polynomials in a common matrix, \
             and work with the finite algebras k[x1,...,xn]/(f1(x1),...,fn(xn)) behind the decision",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CommonFlags {
    /// Monte-Carlo trials for randomized codimension probing
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Seed for all randomized steps; identical seeds give identical output
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidates tried per linear-form coordinate before giving up
    #[arg(long, default_value_t = 64)]
    bound: usize,
    /// Output format (JSON is the stable contract)
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a commuting family: construct a common source matrix or emit a
    /// negative certificate. Exit codes: 0 constructed, 10 negative in span,
    /// 11 negative absolute, 12 negative absolute (probabilistic), 20 unknown,
    /// 2 input error.
    Analyze {
        /// Path to a matrices JSON file, or "-" for stdin
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Operations on the quotient algebra k[x1,...,xn]/(f1,...,fn)
    Quotient {
        #[command(subcommand)]
        sub: QuotientCmd,
    },
    /// Emit fixture matrix pairs as analyze-ready JSON
    Generate {
        #[command(subcommand)]
        kind: GenerateCmd,
    },
    /// Run the built-in fixture suite and report pass/fail
    Selftest,
}

#[derive(Subcommand)]
enum QuotientCmd {
    /// Vector-space dimension of the algebra (product of generator degrees)
    Dim {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Largest minimal-polynomial degree over the algebra
    Codim {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Primitive-element test; prints the injective linear form when one exists
    Primitive {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Ideal membership of a polynomial over a rational root grid
    Member {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Universal annihilator of a polynomial over a rational root grid
    Annihilator {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Block pair from two monic inseparable polynomials (optionally conjugated)
    Counterexample {
        input: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// The classical 3×3 commuting pair
    Frobenius {
        #[command(flatten)]
        flags: CommonFlags,
    },
}

/// A family of matrices on the wire; `conjugator` records the change of basis
/// when a generated pair was conjugated and is ignored by `analyze`.
#[derive(Serialize, Deserialize)]
struct MatrixFamily {
    matrices: Vec<QMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conjugator: Option<QMatrix>,
}

#[derive(Deserialize)]
struct PolyOnGrid {
    poly: MultiPoly,
    grid: GridSpec,
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("malformed {what} JSON: {e}"))
}

fn emit<T: Serialize>(value: &T, format: Format, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(value).expect("report serialization cannot fail")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn poly_text(p: &UniPoly, var: &str) -> String {
    p.display_with(var).to_string()
}

fn run_analyze(input: &str, flags: &CommonFlags) -> Result<u8, String> {
    let family: MatrixFamily = parse_json(&read_input(input)?, "matrices")?;
    let options = AnalyzeOptions {
        trials: flags.trials,
        seed: flags.seed,
        search_bound: flags.bound,
    };
    let report = analyze(&family.matrices, &options).map_err(|e| e.to_string())?;
    let code = report.verdict.exit_code() as u8;
    emit(&report, flags.format, || {
        let mut lines = vec![
            format!("verdict: {}", report.verdict.as_str()),
            format!(
                "family: {} matrices of size {n}x{n}, commuting: {}",
                report.input_summary.matrix_count,
                report.input_summary.commuting,
                n = report.input_summary.matrix_size,
            ),
        ];
        for (i, (mu, sep)) in report
            .input_summary
            .min_polys
            .iter()
            .zip(&report.input_summary.separable)
            .enumerate()
        {
            lines.push(format!(
                "  mu_{}: {} ({})",
                i + 1,
                poly_text(mu, "t"),
                if *sep { "separable" } else { "inseparable" }
            ));
        }
        match &report.certificate {
            Certificate::Constructed(cs) => {
                lines.push("common source C constructed and verified:".into());
                if let Some(form) = &cs.linear_form {
                    let coeffs: Vec<String> = form.coeffs().iter().map(rat_to_string).collect();
                    lines.push(format!(
                        "  linear form coefficients: [{}]",
                        coeffs.join(", ")
                    ));
                }
                lines.push(format!("  C =\n{}", cs.source));
                for (i, p) in cs.polynomials.iter().enumerate() {
                    lines.push(format!("  p_{}: {}", i + 1, poly_text(p, "t")));
                }
            }
            Certificate::Negative(cert) => {
                lines.push(cert.statement.clone());
            }
            Certificate::Probabilistic(ev) => {
                lines.push(ev.statement.clone());
            }
            Certificate::Unknown { reason, .. } => {
                lines.push(format!("no verdict: {reason}"));
            }
        }
        lines.join("\n")
    });
    Ok(code)
}

fn run_quotient(sub: &QuotientCmd) -> Result<u8, String> {
    match sub {
        QuotientCmd::Dim { input, flags } => {
            let alg: QuotientAlgebra = parse_json(&read_input(input)?, "algebra")?;
            let dim = alg.dim();
            #[derive(Serialize)]
            struct Out {
                dim: usize,
            }
            emit(&Out { dim }, flags.format, || format!("dim = {dim}"));
            Ok(0)
        }
        QuotientCmd::Codim { input, flags } => {
            let alg: QuotientAlgebra = parse_json(&read_input(input)?, "algebra")?;
            let codim = alg.codim().map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                codim: usize,
            }
            emit(&Out { codim }, flags.format, || format!("codim = {codim}"));
            Ok(0)
        }
        QuotientCmd::Primitive { input, flags } => {
            let alg: QuotientAlgebra = parse_json(&read_input(input)?, "algebra")?;
            let primitive = alg.has_primitive_element().map_err(|e| e.to_string())?;
            let form = if primitive {
                Some(
                    alg.find_primitive_linear_form_bounded(flags.bound)
                        .map_err(|e| e.to_string())?,
                )
            } else {
                None
            };
            #[derive(Serialize)]
            struct Out {
                primitive: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                linear_form: Option<commat::LinearForm>,
            }
            emit(
                &Out {
                    primitive,
                    linear_form: form.clone(),
                },
                flags.format,
                || match form {
                    Some(f) => {
                        let coeffs: Vec<String> = f.coeffs().iter().map(rat_to_string).collect();
                        format!(
                            "primitive element exists; linear form [{}]",
                            coeffs.join(", ")
                        )
                    }
                    None => "no primitive element".into(),
                },
            );
            Ok(0)
        }
        QuotientCmd::Member { input, flags } => {
            let doc: PolyOnGrid = parse_json(&read_input(input)?, "membership query")?;
            let poly = doc
                .poly
                .with_nvars(doc.grid.nvars())
                .map_err(|e| e.to_string())?;
            let member = doc
                .grid
                .hermite_membership(&poly)
                .map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                member: bool,
            }
            emit(&Out { member }, flags.format, || {
                if member {
                    "polynomial lies in the grid ideal".into()
                } else {
                    "polynomial is NOT in the grid ideal".into()
                }
            });
            Ok(0)
        }
        QuotientCmd::Annihilator { input, flags } => {
            let doc: PolyOnGrid = parse_json(&read_input(input)?, "annihilator query")?;
            let poly = doc
                .poly
                .with_nvars(doc.grid.nvars())
                .map_err(|e| e.to_string())?;
            let annihilator = doc
                .grid
                .build_annihilator(&poly)
                .map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                annihilator: UniPoly,
            }
            let text = poly_text(&annihilator, "t");
            emit(&Out { annihilator }, flags.format, || {
                format!("annihilator = {text}")
            });
            Ok(0)
        }
    }
}

fn run_generate(kind: &GenerateCmd) -> Result<u8, String> {
    match kind {
        GenerateCmd::Counterexample { input, flags } => {
            let spec: CounterexampleSpec = parse_json(&read_input(input)?, "counterexample spec")?;
            let (a, b) = regular_rep_pair(&spec).map_err(|e| e.to_string())?;
            let family = match spec.seed {
                Some(seed) => {
                    let (a, b, s) = random_conjugate((&a, &b), seed).map_err(|e| e.to_string())?;
                    MatrixFamily {
                        matrices: vec![a, b],
                        conjugator: Some(s),
                    }
                }
                None => MatrixFamily {
                    matrices: vec![a, b],
                    conjugator: None,
                },
            };
            emit(&family, flags.format, || {
                family
                    .matrices
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
        GenerateCmd::Frobenius { flags } => {
            let (a, b) = frobenius_pair();
            let family = MatrixFamily {
                matrices: vec![a, b],
                conjugator: None,
            };
            emit(&family, flags.format, || {
                family
                    .matrices
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(0)
        }
    }
}

fn run_selftest() -> u8 {
    let mut failures = 0usize;
    let mut check = |name: &str, outcome: Result<(), String>| match outcome {
        Ok(()) => println!("ok   - {name}"),
        Err(detail) => {
            failures += 1;
            println!("FAIL - {name}: {detail}");
        }
    };
    selftest::run(&mut check);
    if failures == 0 {
        println!("selftest: all checks passed");
        0
    } else {
        println!("selftest: {failures} check(s) failed");
        1
    }
}

mod selftest {
    use super::*;
    use commat::engine::Verdict;
    use commat::rat::ri;
    use commat::subalgebra::{monte_carlo_codim, span_dimension};

    fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(), String> {
        if got == want {
            Ok(())
        } else {
            Err(format!("got {got:?}, want {want:?}"))
        }
    }

    pub fn run(check: &mut impl FnMut(&str, Result<(), String>)) {
        let f = UniPoly::from_ints(&[2, -3, 0, 1]);
        let g = UniPoly::from_ints(&[1, 2, 1]);

        check("companion matrix of x^3 - 3x + 2", {
            commat::generators::companion(&f)
                .map_err(|e| e.to_string())
                .and_then(|c| {
                    expect(
                        c,
                        QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[-2, 3, 0]]),
                    )
                })
        });

        let spec = CounterexampleSpec::new(f.clone(), g.clone(), None)
            .expect("fixture polynomials are inseparable");
        let pair = regular_rep_pair(&spec).expect("fixture pair");
        check("block pair commutes with minimal polynomials f and g", {
            commat::subalgebra::commute_check(&[pair.0.clone(), pair.1.clone()])
                .map_err(|e| e.to_string())
                .and_then(|c| expect(c, true))
                .and_then(|_| pair.0.min_poly().map_err(|e| e.to_string()))
                .and_then(|mu| expect(mu, f.clone()))
                .and_then(|_| pair.1.min_poly().map_err(|e| e.to_string()))
                .and_then(|mu| expect(mu, g.clone()))
        });

        check("block pair spans an algebra of dimension 6", {
            span_dimension(&[pair.0.clone(), pair.1.clone()])
                .map_err(|e| e.to_string())
                .and_then(|(d, _)| expect(d, 6))
        });

        check("block pair is a deterministic absolute negative", {
            analyze(
                &[pair.0.clone(), pair.1.clone()],
                &AnalyzeOptions::default(),
            )
            .map_err(|e| e.to_string())
            .and_then(|r| expect(r.verdict, Verdict::NegativeAbsolute))
        });

        let (a, b) = frobenius_pair();
        check(
            "classical 3x3 pair: span 3, observed codim 2, probabilistic verdict",
            {
                span_dimension(&[a.clone(), b.clone()])
                    .map_err(|e| e.to_string())
                    .and_then(|(d, _)| expect(d, 3))
                    .and_then(|_| {
                        monte_carlo_codim(&[a.clone(), b.clone()], 100, 0)
                            .map_err(|e| e.to_string())
                    })
                    .and_then(|c| expect(c, 2))
                    .and_then(|_| {
                        analyze(&[a.clone(), b.clone()], &AnalyzeOptions::default())
                            .map_err(|e| e.to_string())
                    })
                    .and_then(|r| expect(r.verdict, Verdict::NegativeAbsoluteProbabilistic))
            },
        );

        check(
            "quotient by (f, g): dim 6, codim 5, no primitive element",
            {
                QuotientAlgebra::new(vec![f.clone(), g.clone()])
                    .map_err(|e| e.to_string())
                    .and_then(|alg| {
                        expect(alg.dim(), 6)?;
                        expect(alg.codim().map_err(|e| e.to_string())?, 5)?;
                        expect(
                            alg.has_primitive_element().map_err(|e| e.to_string())?,
                            false,
                        )
                    })
            },
        );

        check("x^2 - 2, y^2 - 3: fold t^4 - 10t^2 + 1 is squarefree", {
            UniPoly::values_poly(
                &UniPoly::from_ints(&[-2, 0, 1]),
                &UniPoly::from_ints(&[-3, 0, 1]),
                &ri(1),
            )
            .map_err(|e| e.to_string())
            .and_then(|fold| {
                expect(fold.clone(), UniPoly::from_ints(&[1, 0, -10, 0, 1]))?;
                expect(fold.is_separable().map_err(|e| e.to_string())?, true)
            })
        });

        check("diagonal pair constructs a verified common source", {
            let a = QMatrix::diagonal(&[ri(1), ri(2)]);
            let b = QMatrix::diagonal(&[ri(3), ri(3)]);
            analyze(&[a, b], &AnalyzeOptions::default())
                .map_err(|e| e.to_string())
                .and_then(|r| expect(r.verdict, Verdict::Constructed))
        });
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { input, flags } => run_analyze(input, flags),
        Command::Quotient { sub } => run_quotient(sub),
        Command::Generate { kind } => run_generate(kind),
        Command::Selftest => return ExitCode::from(run_selftest()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
