use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mideal::constructible::{
    constructible_betti, polarize, search_constructible, verify_certificate, CertificateFile,
    ConstructibilityCertificate, SearchOutcome,
};
use mideal::coxeter::{self, k_polynomial_by_enumeration, sphere_or_ball};
use mideal::lexsegment::{self, quotient_order};
use mideal::oracle::{betti_numbers_with, Strategy};
use mideal::quotients::{
    self, betti_from_certificate, check_order, find_order, is_stable, stability_witness, stable_betti, CheckOutcome,
    FindOutcome, QuotientCertificate, Regularity,
};
use mideal::resolution::{
    ek_resolution, format_poly, koszul, mapping_cone_resolution, stable_hilbert_series, verify_complex,
    GradedFreeResolution,
};
use mideal::simplicial::{self, eagon_reiner_check, ShellingOutcome};
use mideal::{Field, MonomialIdeal};

use crate::input::{
    complex_json, ideal_json, monomials, read_json, split_list, ComplexInput, IdealInput, SegmentInput,
    SubwordInput,
};
use crate::report::{Failure, Outcome, Status};

/// Settings shared by every subcommand.
pub struct Context {
    pub field: Field,
    pub seed: u64,
}

type Run = Result<Outcome, Failure>;

#[derive(Subcommand, Debug)]
pub enum IdealCmd {
    /// Graded Betti numbers by the brute-force oracle.
    Betti {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Check a generator order for linear quotients, or search for one.
    Quotients {
        #[command(flatten)]
        ideal: IdealInput,
        /// Order to check, comma separated; all generators must appear.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = quotients::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Stability, with the Eliahou-Kervaire Betti numbers and Hilbert series.
    Stable {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Intersection with a second ideal
    Intersect {
        #[command(flatten)]
        ideal: IdealInput,
        /// Generators of the second ideal, in the same ring.
        #[arg(long)]
        with: String,
    },
    /// Generators of the colon ideal I : u
    Colon {
        #[command(flatten)]
        ideal: IdealInput,
        /// The monomial to divide by.
        #[arg(long)]
        by: String,
    },
    /// Krull dimension, minimal primes, depth and Cohen-Macaulayness of S/I.
    DimDepth {
        #[command(flatten)]
        ideal: IdealInput,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Taylor,
    Koszul,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Taylor => Strategy::Taylor,
            StrategyArg::Koszul => Strategy::UpperKoszul,
        }
    }
}

fn certificate_json(c: &QuotientCertificate) -> Result<Value, Failure> {
    let regular = match c.decomposition().is_regular() {
        Regularity::Regular => json!({ "regular": true }),
        Regularity::Counterexample { u, s } => json!({ "regular": false, "u": u, "s": s }),
    };
    Ok(json!({
        "order": c.order().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "sets": c.sets(),
        "betti": betti_from_certificate(c)?,
        "decomposition": regular,
    }))
}

pub fn ideal(cmd: &IdealCmd, ctx: &Context) -> Run {
    match cmd {
        IdealCmd::Betti { ideal, strategy } => {
            let i = ideal.load()?;
            let b = betti_numbers_with(&i.ideal, ctx.field, (*strategy).into())?;
            let grid = b.betti.to_string();
            let result = json!({
                "field": b.field,
                "betti": b.betti,
                "totals": b.betti.totals(),
                "projdim": b.projdim,
                "regularity": b.betti.regularity(),
                "linear": b.linear,
            });
            Ok(Outcome::new(ideal_json(&i.ideal), result).warn(i.warnings).block(grid))
        }
        IdealCmd::Quotients { ideal, order, budget } => {
            let i = ideal.load()?;
            let input = ideal_json(&i.ideal);
            let out = match order {
                Some(o) => {
                    let (_, order) = monomials(Some(i.ideal.n()), &split_list(o), "order")?;
                    match check_order(&i.ideal, &order)? {
                        CheckOutcome::Certified(c) => {
                            let mut v = certificate_json(&c)?;
                            v["verdict"] = json!("linear_quotients");
                            Outcome::new(input, v)
                        }
                        CheckOutcome::Failed(f) => {
                            Outcome::new(input, json!({ "verdict": "failed", "failure": f })).status(Status::Negative)
                        }
                    }
                }
                None => match find_order(&i.ideal, *budget) {
                    FindOutcome::Found(c) => {
                        let mut v = certificate_json(&c)?;
                        v["verdict"] = json!("linear_quotients");
                        Outcome::new(input, v)
                    }
                    FindOutcome::None => Outcome::new(input, json!({ "verdict": "none" })).status(Status::Negative),
                    FindOutcome::Unknown { nodes } => {
                        Outcome::new(input, json!({ "verdict": "unknown", "nodes": nodes })).status(Status::Unknown)
                    }
                },
            };
            Ok(out.warn(i.warnings))
        }
        IdealCmd::Stable { ideal } => {
            let i = ideal.load()?;
            let input = ideal_json(&i.ideal);
            if let Some((u, var)) = stability_witness(&i.ideal) {
                let v = json!({ "stable": false, "witness": { "generator": u.to_string(), "variable": var } });
                return Ok(Outcome::new(input, v).status(Status::Negative).warn(i.warnings));
            }
            debug_assert!(is_stable(&i.ideal));
            let b = stable_betti(&i.ideal)?;
            let h = stable_hilbert_series(&i.ideal)?;
            let grid = b.to_string();
            let v = json!({ "stable": true, "betti": b, "hilbert_series": h, "hilbert_numerator": h.to_string() });
            Ok(Outcome::new(input, v).warn(i.warnings).block(grid))
        }
        IdealCmd::Intersect { ideal, with } => {
            let i = ideal.load()?;
            let (_, other) = monomials(Some(i.ideal.n()), &split_list(with), "with")?;
            let j = MonomialIdeal::minimalize(i.ideal.n(), other)?;
            let meet = i.ideal.intersect(&j)?;
            let input = json!({ "first": ideal_json(&i.ideal), "second": ideal_json(&j) });
            let v = json!({ "intersection": ideal_json(&meet), "generation_degree": meet.generation_degree() });
            Ok(Outcome::new(input, v).warn(i.warnings))
        }
        IdealCmd::Colon { ideal, by } => {
            let i = ideal.load()?;
            let (_, u) = monomials(Some(i.ideal.n()), &[by.as_str()], "by")?;
            let gens = i.ideal.colon_gens(&u[0])?;
            let input = json!({ "ideal": ideal_json(&i.ideal), "by": u[0].to_string() });
            let v = json!({ "colon": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>() });
            Ok(Outcome::new(input, v).warn(i.warnings))
        }
        IdealCmd::DimDepth { ideal } => {
            let i = ideal.load()?;
            let dim = i.ideal.krull_dim()?;
            let primes = i.ideal.minimal_primes()?;
            let b = betti_numbers_with(&i.ideal, ctx.field, Strategy::Auto)?;
            let projdim = b.projdim + 1;
            let depth = i.ideal.n() - projdim;
            let v = json!({
                "field": ctx.field,
                "krull_dim": dim,
                "height": i.ideal.n() - dim,
                "minimal_primes": primes.primes,
                "depth": depth,
                "projdim": projdim,
                "cohen_macaulay": depth == dim,
            });
            Ok(Outcome::new(ideal_json(&i.ideal), v).warn(i.warnings))
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum LexCmd {
    /// Completely / linear-resolution classification with dim, depth and CM.
    Classify {
        #[command(flatten)]
        seg: SegmentInput,
    },
    /// A generator order with linear quotients.
    Order {
        #[command(flatten)]
        seg: SegmentInput,
    },
    /// The mapping-cone resolution along that order.
    Resolution {
        #[command(flatten)]
        seg: SegmentInput,
    },
}

pub fn lexsegment(cmd: &LexCmd, _ctx: &Context) -> Run {
    match cmd {
        LexCmd::Classify { seg } => {
            let s = seg.load()?;
            let r = lexsegment::report(&s)?;
            let negative = r.classification.as_ref().is_some_and(|c| !c.linear_resolution);
            let warnings = r.classification.as_ref().map(|c| c.warnings.clone()).unwrap_or_default();
            Ok(Outcome::new(seg.json(), r).negative_if(negative).warn(warnings))
        }
        LexCmd::Order { seg } => {
            let s = seg.load()?;
            let c = quotient_order(&s)?;
            Ok(Outcome::new(seg.json(), certificate_json(&c)?))
        }
        LexCmd::Resolution { seg } => {
            let s = seg.load()?;
            let c = quotient_order(&s)?;
            resolution_outcome(seg.json(), mapping_cone_resolution(&c)?)
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ResolutionCmd {
    /// Koszul complex of a sequence of monomials.
    Koszul {
        #[arg(long)]
        n: Option<usize>,
        /// The sequence, comma separated; kept as given.
        #[arg(long)]
        seq: String,
    },
    /// Eliahou-Kervaire resolution of a stable ideal.
    Ek {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Mapping-cone resolution along an order with linear quotients.
    Cone {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = quotients::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check d o d = 0, minimality and degrees of a resolution file.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
}

fn resolution_outcome(input: Value, r: GradedFreeResolution) -> Run {
    let report = verify_complex(&r);
    if !report.dd_zero {
        return Err(Failure {
            status: Status::InvariantViolation,
            message: format!("constructed complex fails d o d = 0 at {:?}", report.dd_failure),
        });
    }
    let pretty = format!("{}\n{}", report.betti, r.pretty());
    let v = json!({ "resolution": r, "ranks": r.ranks(), "verification": report });
    Ok(Outcome::new(input, v).block(pretty))
}

pub fn resolution(cmd: &ResolutionCmd, _ctx: &Context) -> Run {
    match cmd {
        ResolutionCmd::Koszul { n, seq } => {
            let (n, seq) = monomials(*n, &split_list(seq), "seq")?;
            let input = json!({ "n": n, "seq": seq.iter().map(|g| g.to_string()).collect::<Vec<_>>() });
            resolution_outcome(input, koszul(n, &seq)?)
        }
        ResolutionCmd::Ek { ideal } => {
            let i = ideal.load()?;
            Ok(resolution_outcome(ideal_json(&i.ideal), ek_resolution(&i.ideal)?)?.warn(i.warnings))
        }
        ResolutionCmd::Cone { ideal, order, budget } => {
            let i = ideal.load()?;
            let input = ideal_json(&i.ideal);
            let cert = match order {
                Some(o) => {
                    let (_, order) = monomials(Some(i.ideal.n()), &split_list(o), "order")?;
                    match check_order(&i.ideal, &order)? {
                        CheckOutcome::Certified(c) => c,
                        CheckOutcome::Failed(f) => {
                            return Ok(Outcome::new(input, json!({ "verdict": "failed", "failure": f }))
                                .status(Status::Negative))
                        }
                    }
                }
                None => match find_order(&i.ideal, *budget) {
                    FindOutcome::Found(c) => c,
                    FindOutcome::None => {
                        return Ok(Outcome::new(input, json!({ "verdict": "none" })).status(Status::Negative))
                    }
                    FindOutcome::Unknown { nodes } => {
                        return Ok(Outcome::new(input, json!({ "verdict": "unknown", "nodes": nodes }))
                            .status(Status::Unknown))
                    }
                },
            };
            Ok(resolution_outcome(input, mapping_cone_resolution(&cert)?)?.warn(i.warnings))
        }
        ResolutionCmd::Verify { input } => {
            let r: GradedFreeResolution = read_json(input)?;
            let report = verify_complex(&r);
            let ok = report.dd_zero;
            let grid = report.betti.to_string();
            let v = json!({ "ranks": r.ranks(), "verification": report });
            Ok(Outcome::new(json!({ "file": input }), v).negative_if(!ok).block(grid))
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Ideals, homology, CM and the purity hierarchy.
    Analyze {
        #[command(flatten)]
        complex: ComplexInput,
        #[arg(long, default_value_t = quotients::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Alexander dual and the dual Stanley-Reisner ideal.
    Dual {
        #[command(flatten)]
        complex: ComplexInput,
    },
    /// A shelling through linear quotients of the dual ideal.
    Shelling {
        #[command(flatten)]
        complex: ComplexInput,
        #[arg(long, default_value_t = quotients::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Reisner's criterion over the field of `--char`, with Eagon-Reiner.
    Cm {
        #[command(flatten)]
        complex: ComplexInput,
    },
}

fn gens_or_unit(i: mideal::Result<Option<MonomialIdeal>>) -> Result<Value, Failure> {
    match i {
        Ok(Some(i)) => Ok(json!(i.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>())),
        Ok(None) => Ok(json!([])),
        Err(mideal::Error::UnitIdeal) => Ok(json!(["1"])),
        Err(e) => Err(e.into()),
    }
}

pub fn complex(cmd: &ComplexCmd, ctx: &Context) -> Run {
    match cmd {
        ComplexCmd::Analyze { complex, budget } => {
            let c = complex.load()?;
            let r = simplicial::analyze(&c.complex, ctx.field, *budget)?;
            let w = r.warnings.clone();
            Ok(Outcome::new(complex_json(&c.complex), r).warn(c.warnings).warn(w))
        }
        ComplexCmd::Dual { complex } => {
            let c = complex.load()?;
            let v = json!({
                "alexander_dual": c.complex.alexander_dual()?.facet_sets(),
                "sr_ideal": gens_or_unit(c.complex.sr_ideal())?,
                "dual_sr_ideal": gens_or_unit(c.complex.dual_sr_ideal())?,
            });
            Ok(Outcome::new(complex_json(&c.complex), v).warn(c.warnings))
        }
        ComplexCmd::Shelling { complex, budget } => {
            let c = complex.load()?;
            let s = c.complex.shelling(*budget)?;
            let status = match s {
                ShellingOutcome::Shellable { .. } => Status::Ok,
                ShellingOutcome::NotShellable => Status::Negative,
                ShellingOutcome::Unknown { .. } => Status::Unknown,
            };
            Ok(Outcome::new(complex_json(&c.complex), s).status(status).warn(c.warnings))
        }
        ComplexCmd::Cm { complex } => {
            let c = complex.load()?;
            let cm = c.complex.cohen_macaulay(ctx.field)?;
            let homology = c.complex.homology(ctx.field)?;
            let er = if c.complex.is_pure() { Some(eagon_reiner_check(&c.complex, ctx.field)?) } else { None };
            if er.as_ref().is_some_and(|r| !r.agree || !r.terai_holds) {
                return Err(Failure {
                    status: Status::InvariantViolation,
                    message: format!("Eagon-Reiner or Terai fails: {er:?}"),
                });
            }
            let negative = !cm.cohen_macaulay;
            let v = json!({ "cohen_macaulay": cm, "homology": homology, "eagon_reiner": er });
            Ok(Outcome::new(complex_json(&c.complex), v).negative_if(negative).warn(c.warnings))
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ConstructibleCmd {
    /// Check a certificate file `{"n": .., "certificate": node}`.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        /// The ideal it should generate; defaults to the one it generates.
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Search for a certificate within a node budget.
    Search {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, default_value_t = mideal::constructible::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Square-free polarization with its variable map.
    Polarize {
        #[command(flatten)]
        ideal: IdealInput,
    },
}

pub fn constructible(cmd: &ConstructibleCmd, _ctx: &Context) -> Run {
    match cmd {
        ConstructibleCmd::Verify { cert, ideal } => {
            let file: CertificateFile = read_json(cert)?;
            let c = ConstructibilityCertificate::from_file(&file)?;
            let (target, warnings) = if ideal.is_given() {
                let i = ideal.load()?;
                (i.ideal, i.warnings)
            } else {
                (c.ideal()?, Vec::new())
            };
            let v = verify_certificate(&target, &c)?;
            let input = json!({ "ideal": ideal_json(&target), "certificate": file });
            let betti = if v.valid { Some(constructible_betti(&c)?) } else { None };
            let negative = !v.valid;
            let mut out = Outcome::new(input, json!({ "verification": v, "betti": betti })).negative_if(negative);
            if let Some(b) = betti {
                out = out.block(b.to_string());
            }
            Ok(out.warn(warnings))
        }
        ConstructibleCmd::Search { ideal, budget } => {
            let i = ideal.load()?;
            let input = ideal_json(&i.ideal);
            let out = match search_constructible(&i.ideal, *budget)? {
                SearchOutcome::Found(c) => {
                    let b = constructible_betti(&c)?;
                    let v = json!({ "verdict": "constructible", "certificate": c.to_file()?, "betti": b });
                    Outcome::new(input, v).block(c.to_string())
                }
                SearchOutcome::NotConstructible => {
                    Outcome::new(input, json!({ "verdict": "not_constructible" })).status(Status::Negative)
                }
                SearchOutcome::Unknown { nodes } => {
                    Outcome::new(input, json!({ "verdict": "unknown", "nodes": nodes })).status(Status::Unknown)
                }
            };
            Ok(out.warn(i.warnings))
        }
        ConstructibleCmd::Polarize { ideal } => {
            let i = ideal.load()?;
            Ok(Outcome::new(ideal_json(&i.ideal), polarize(&i.ideal)).warn(i.warnings))
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum SubwordCmd {
    /// Facets, dual quotients, shelling, bounds and the special class.
    Analyze {
        #[command(flatten)]
        word: SubwordInput,
    },
    /// K-polynomial by enumerating subwords with Demazure product pi.
    Kpoly {
        #[command(flatten)]
        word: SubwordInput,
    },
    /// Whether the complex is a sphere or a ball.
    Sphere {
        #[command(flatten)]
        word: SubwordInput,
    },
}

pub fn subword(cmd: &SubwordCmd, _ctx: &Context) -> Run {
    match cmd {
        SubwordCmd::Analyze { word } => {
            let (q, pi) = word.load()?;
            let r = coxeter::analyze(&q, &pi)?;
            let mut warnings = Vec::new();
            if !r.contains {
                warnings.push("the word contains no reduced word of pi: the complex is void".into());
            }
            if r.empty_face_only {
                warnings.push("the complex is {∅}".into());
            }
            let negative = !r.contains;
            Ok(Outcome::new(word.json(&q, &pi), r).negative_if(negative).warn(warnings))
        }
        SubwordCmd::Kpoly { word } => {
            let (q, pi) = word.load()?;
            let k = k_polynomial_by_enumeration(&q, &pi)?;
            let v = json!({ "k_polynomial": k, "formatted": format_poly(&k) });
            Ok(Outcome::new(word.json(&q, &pi), v))
        }
        SubwordCmd::Sphere { word } => {
            let (q, pi) = word.load()?;
            if !q.contains(&pi) {
                let v = json!({ "contains": false, "topology": null });
                return Ok(Outcome::new(word.json(&q, &pi), v).status(Status::Negative));
            }
            let t = sphere_or_ball(&q, &pi)?;
            Ok(Outcome::new(word.json(&q, &pi), json!({ "contains": true, "topology": t })))
        }
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Largest number of variables or vertices.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest degree (lexsegment sweep).
    #[arg(long)]
    pub max_d: Option<u32>,
    /// Number of random complexes.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = quotients::DEFAULT_BUDGET)]
    pub budget: u64,
}
