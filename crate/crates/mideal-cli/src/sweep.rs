//! Property sweeps over exhaustive or seeded random families.

use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use mideal::lexsegment::{all_segments, depth_formula, is_cohen_macaulay, krull_dim_formula};
use mideal::oracle::depth_and_projdim;
use mideal::simplicial::{eagon_reiner_check, ShellingOutcome, SimplicialComplex, SHIFTED_LIMIT};

use crate::commands::{Context, SweepArgs};
use crate::report::{Failure, Outcome, Status};

#[derive(Subcommand, Debug)]
pub enum SweepCmd {
    /// shifted => vertex-decomposable => shellable => CM, on random pure complexes.
    Hierarchy {
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Dimension, depth and CM formulas against the oracle, for every lexsegment.
    Lexsegment {
        #[command(flatten)]
        args: SweepArgs,
    },
    /// CM against linearity of the dual ideal, and Terai's equality.
    EagonReiner {
        #[command(flatten)]
        args: SweepArgs,
    },
}

/// Pure complexes on at most `max_n` vertices, one facet size each.
fn random_pure_complexes(seed: u64, max_n: usize, count: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            let size = rng.random_range(1..=n);
            let m = rng.random_range(1..=7);
            let facets: Vec<u64> = (0..m)
                .map(|_| {
                    let mut verts: Vec<usize> = (0..n).collect();
                    for i in 0..size {
                        let j = rng.random_range(i..n);
                        verts.swap(i, j);
                    }
                    verts[..size].iter().fold(0u64, |acc, &v| acc | 1 << v)
                })
                .collect();
            SimplicialComplex::from_masks(n, facets)
        })
        .collect()
}

fn check_max(n: usize, limit: usize, what: &str) -> Result<(), Failure> {
    if n < 2 || n > limit {
        return Err(Failure::input(format!("{what} must be in 2..={limit}")));
    }
    Ok(())
}

fn finish(input: serde_json::Value, checked: usize, failures: Vec<String>, extra: serde_json::Value) -> Outcome {
    let status = if failures.is_empty() { Status::Ok } else { Status::InvariantViolation };
    let mut v = json!({ "checked": checked, "failures": failures });
    if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object()) {
        obj.extend(more.clone());
    }
    Outcome::new(input, v).status(status)
}

pub fn sweep(cmd: &SweepCmd, ctx: &Context) -> Result<Outcome, Failure> {
    match cmd {
        SweepCmd::Hierarchy { args } => {
            let max_n = args.max_n.unwrap_or(6);
            check_max(max_n, SHIFTED_LIMIT, "--max-n")?;
            let input = json!({ "max_n": max_n, "count": args.count, "seed": ctx.seed, "field": ctx.field });
            let family = random_pure_complexes(ctx.seed, max_n, args.count);
            let rows: Vec<Result<[bool; 5], String>> = family
                .par_iter()
                .map(|cx| {
                    let err = |e: mideal::Error| format!("{cx}: {e}");
                    let shifted = cx.is_shifted().map_err(err)?;
                    let vd = cx.is_vertex_decomposable().map_err(err)?;
                    let shell = cx.shelling(args.budget).map_err(err)?;
                    let unknown = matches!(shell, ShellingOutcome::Unknown { .. });
                    let shellable = matches!(shell, ShellingOutcome::Shellable { .. });
                    let cm = cx.is_cohen_macaulay(ctx.field).map_err(err)?;
                    Ok([shifted, vd, shellable, cm, unknown])
                })
                .collect();
            let mut counts = [0usize; 5];
            let mut failures = Vec::new();
            for (cx, row) in family.iter().zip(rows) {
                let r = row.map_err(|e| Failure { status: Status::InvariantViolation, message: e })?;
                for k in 0..5 {
                    counts[k] += r[k] as usize;
                }
                let [shifted, vd, shellable, cm, unknown] = r;
                if (shifted && !vd) || (vd && !shellable && !unknown) || (shellable && !cm) {
                    failures.push(cx.to_string());
                }
            }
            let extra = json!({
                "shifted": counts[0],
                "vertex_decomposable": counts[1],
                "shellable": counts[2],
                "cohen_macaulay": counts[3],
                "shelling_unknown": counts[4],
            });
            let unknown = counts[4] > 0;
            let out = finish(input, family.len(), failures, extra);
            Ok(if unknown && out.status == Status::Ok { out.status(Status::Unknown) } else { out })
        }
        SweepCmd::Lexsegment { args } => {
            let max_n = args.max_n.unwrap_or(5);
            let max_d = args.max_d.unwrap_or(3);
            check_max(max_n, 8, "--max-n")?;
            if max_d == 0 || max_d > 6 {
                return Err(Failure::input("--max-d must be in 1..=6"));
            }
            let input = json!({ "max_n": max_n, "max_d": max_d, "field": ctx.field });
            let mut segs = Vec::new();
            for n in 1..=max_n {
                for d in 1..=max_d {
                    segs.extend(all_segments(n, d)?);
                }
            }
            let failures: Vec<String> = segs
                .par_iter()
                .filter_map(|seg| {
                    let ideal = seg.ideal();
                    let dim = ideal.krull_dim().ok()?;
                    let (depth, _) = depth_and_projdim(&ideal, ctx.field).ok()?;
                    let fd = krull_dim_formula(seg).dim;
                    let fdepth = depth_formula(seg).depth;
                    let cm = is_cohen_macaulay(seg).map(|r| r.cohen_macaulay).ok();
                    let ok = fd == dim && fdepth == depth && cm == Some(dim == depth);
                    (!ok).then(|| format!("n={} L({}, {}): dim {fd}/{dim} depth {fdepth}/{depth}", seg.n(), seg.u(), seg.v()))
                })
                .collect();
            Ok(finish(input, segs.len(), failures, json!({})))
        }
        SweepCmd::EagonReiner { args } => {
            let max_n = args.max_n.unwrap_or(6);
            check_max(max_n, 10, "--max-n")?;
            let input = json!({ "max_n": max_n, "count": args.count, "seed": ctx.seed, "field": ctx.field });
            let family = random_pure_complexes(ctx.seed, max_n, args.count);
            let reports: Vec<_> = family.par_iter().map(|cx| eagon_reiner_check(cx, ctx.field)).collect();
            let mut failures = Vec::new();
            let mut cm = 0;
            for (cx, r) in family.iter().zip(reports) {
                let r = r?;
                cm += r.cohen_macaulay as usize;
                if !r.agree || !r.terai_holds {
                    failures.push(format!("{cx}: {r:?}"));
                }
            }
            Ok(finish(input, family.len(), failures, json!({ "cohen_macaulay": cm })))
        }
    }
}
