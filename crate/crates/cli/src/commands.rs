use std::collections::BTreeMap;
use std::time::Instant;

use diagcomm::groebner::initial_forms_ideal_with;
use diagcomm::hilbert::BidegreePolynomial;
use diagcomm::linalg::Matrix;
use diagcomm::permlab::{bruhat_leq, PartialPerm, Permutation};
use diagcomm::polyring::{Ring, TermOrder};
use diagcomm::scalar::int;
use diagcomm::schemes::{
    build_ideal, degeneration_weight, diag_lemma_check, jacobian_rank, permutation_matrix,
    random_d_point, random_params, same_up_to_sign, sample_point, tao_rank_check, tau_substitute,
    vanishes_at, w0_conjugate, Orientation, SchemeTag,
};
use diagcomm::{Error, RatMatrix, Result};
use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Cli, Command};
use crate::engine::{Engine, Invariants};
use crate::expected;
use crate::keyed_rng::keyed_rng;
use crate::report::{bidegree_json, CheckReport, Status};

pub const SMOOTH_TRIALS: usize = 25;
pub const TAO_TRIALS: usize = 100;
pub const MEMBERSHIP_TRIALS: usize = 20;

/// Everything a command needs: the parsed flags, the engine and the pool.
pub struct Context {
    pub cli: Cli,
    pub engine: Engine,
    pub pool: rayon::ThreadPool,
}

/// Usage problems, reported with exit code 2.
pub fn validate(cli: &Cli) -> std::result::Result<(), String> {
    let n = cli.n;
    let range = |lo: usize, hi: usize, what: &str| {
        if n < lo || n > hi {
            Err(format!("{what} needs {lo} <= n <= {hi}, got n = {n}"))
        } else {
            Ok(())
        }
    };
    match cli.command {
        Command::Degrees | Command::Identities | Command::Smooth => {
            range(1, 4, command_name(cli.command))?
        }
        Command::Degenerate => range(2, 4, "degenerate")?,
        Command::Tao => range(2, 5, "tao")?,
        Command::Strata => range(1, 5, "strata")?,
        Command::Conjectures => range(1, 3, "conjectures")?,
        Command::All => range(1, 5, "all")?,
    }
    if let Some(pi) = &cli.pi {
        if pi.n() != n {
            return Err(format!("--pi {pi} is not a permutation of size {n}"));
        }
    }
    if !(cli.budget_seconds.is_finite() && cli.budget_seconds > 0.0) {
        return Err("--budget-seconds must be positive".into());
    }
    Ok(())
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Degrees => "degrees",
        Command::Identities => "identities",
        Command::Degenerate => "degenerate",
        Command::Smooth => "smooth",
        Command::Tao => "tao",
        Command::Strata => "strata",
        Command::Conjectures => "conjectures",
        Command::All => "all",
    }
}

pub fn run_command(ctx: &Context, command: Command) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    match command {
        Command::Degrees => degrees(ctx),
        Command::Identities => identities(ctx),
        Command::Degenerate => degenerate(ctx),
        Command::Smooth => smooth(ctx),
        Command::Tao => tao(ctx),
        Command::Strata => strata(ctx),
        Command::Conjectures => conjectures(ctx),
        Command::All => {
            // n = 4 Gröbner work on the candidates is left to explicit commands
            let mut plan = vec![];
            if n <= 3 {
                plan.extend([Command::Degrees, Command::Identities]);
            }
            if (2..=3).contains(&n) {
                plan.push(Command::Degenerate);
            }
            if n <= 4 {
                plan.push(Command::Smooth);
            }
            if n >= 2 {
                plan.push(Command::Tao);
            }
            plan.push(Command::Strata);
            if n <= 3 {
                plan.push(Command::Conjectures);
            }
            plan.into_iter().flat_map(|c| run_command(ctx, c)).collect()
        }
    }
}

fn timed(ctx: &Context, f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut report = f();
    if ctx.cli.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn error_row(name: String, err: Error) -> CheckReport {
    match err {
        Error::Timeout => CheckReport::missing(name, json!({ "missing": true })),
        other => CheckReport::new(
            name,
            Status::Fail,
            format!("error: {other}"),
            json!({ "error": other.to_string() }),
        ),
    }
}

fn permutations(ctx: &Context, n: usize) -> Vec<Permutation> {
    match &ctx.cli.pi {
        Some(pi) if pi.n() == n => vec![pi.clone()],
        _ => Permutation::all(n),
    }
}

fn invariants_for<'a>(
    ctx: &Context,
    perms: impl IntoIterator<Item = &'a Permutation>,
    tag: fn(Permutation) -> SchemeTag,
) -> BTreeMap<Permutation, Result<Invariants>> {
    let perms: Vec<&Permutation> = perms.into_iter().collect();
    ctx.pool.install(|| {
        perms
            .par_iter()
            .map(|pi| {
                (
                    (*pi).clone(),
                    ctx.engine.invariants(&tag((*pi).clone()), pi.n()),
                )
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    })
}

fn degrees(ctx: &Context) -> Vec<CheckReport> {
    let perms = permutations(ctx, ctx.cli.n);
    let start = Instant::now();
    let table = invariants_for(ctx, &perms, SchemeTag::EpiCandidate);
    let elapsed = start.elapsed().as_millis() as u64;
    let mut rows: Vec<CheckReport> = perms
        .iter()
        .map(|pi| {
            let name = format!("degrees/{pi}");
            match &table[pi] {
                Err(e) => error_row(name, e.clone()),
                Ok(inv) => degree_row(name, pi, inv),
            }
        })
        .collect();
    if ctx.cli.timings {
        for r in &mut rows {
            r.elapsed_ms = Some(elapsed);
        }
    }
    rows
}

fn degree_row(name: String, pi: &Permutation, inv: &Invariants) -> CheckReport {
    let d = inv.degree();
    let payload = json!({
        "pi": pi.to_string(),
        "degree": d,
        "bidegree": bidegree_json(&inv.bidegree),
        "bidegreeText": inv.bidegree.to_string(),
        "dimension": inv.dimension,
    });
    let summary = format!("d={d}  d'={}", inv.bidegree);
    let published_d = expected::degree(pi);
    let published_b = expected::bidegree(pi);
    if published_d.is_none() && published_b.is_none() {
        return CheckReport::new(name, Status::Report, summary, payload);
    }
    let mut expectation = serde_json::Map::new();
    let mut ok = true;
    if let Some(e) = published_d {
        expectation.insert("degree".into(), json!(e));
        ok &= e == d;
    }
    if let Some(e) = &published_b {
        expectation.insert("bidegree".into(), bidegree_json(e));
        ok &= *e == inv.bidegree;
    }
    CheckReport::new(name, Status::from_bool(ok), summary, payload)
        .expecting(Value::Object(expectation))
}

fn identities(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    let all: Vec<Permutation> = (1..=n).flat_map(Permutation::all).collect();
    let start = Instant::now();
    let table = invariants_for(ctx, &all, SchemeTag::EpiCandidate);
    let elapsed = ctx.cli.timings.then(|| start.elapsed().as_millis() as u64);
    let names = [
        "identities/sum-degrees",
        "identities/sum-bidegrees",
        "identities/star-products",
        "identities/degree-symmetries",
        "identities/bidegree-swap",
        "identities/bidegree-w0-inverse",
    ];
    let bd: BTreeMap<&Permutation, &BidegreePolynomial> = match all
        .iter()
        .map(|p| table[p].as_ref().map(|inv| (p, &inv.bidegree)))
        .collect::<std::result::Result<_, _>>()
    {
        Ok(m) => m,
        Err(e) => {
            return names
                .iter()
                .map(|name| error_row(name.to_string(), e.clone()))
                .collect()
        }
    };
    let top = Permutation::all(n);
    let k = (n * n - n) as u32;
    let mut rows = Vec::new();

    let sum: u64 = top.iter().map(|p| bd[p].eval_at_one()).sum();
    let expected_sum = 1u64 << k;
    rows.push(
        CheckReport::new(
            names[0],
            Status::from_bool(sum == expected_sum),
            format!("sum of d = {sum}, 2^{k} = {expected_sum}"),
            json!({ "sum": sum, "expected": expected_sum }),
        )
        .expecting(json!({ "sum": expected_sum })),
    );

    let total = top
        .iter()
        .fold(BidegreePolynomial::default(), |acc, p| acc.add(bd[p]));
    let binomial = BidegreePolynomial::a_plus_b_power(k);
    rows.push(
        CheckReport::new(
            names[1],
            Status::from_bool(total == binomial),
            format!("sum of d' = {total}"),
            json!({ "sum": bidegree_json(&total), "expected": bidegree_json(&binomial) }),
        )
        .expecting(json!({ "sum": bidegree_json(&binomial) })),
    );

    let mut splits = Vec::new();
    for pi in &top {
        for j in 1..n {
            if let Some((a, b)) = pi.split_at(j) {
                let rhs = bd[&a]
                    .mul(bd[&b])
                    .mul(&BidegreePolynomial::ab_power((j * (n - j)) as u32));
                splits.push(json!({
                    "pi": pi.to_string(), "left": a.to_string(), "right": b.to_string(),
                    "holds": *bd[pi] == rhs, "product": rhs.to_string(),
                }));
            }
        }
    }
    let star_ok = splits.iter().all(|s| s["holds"] == json!(true));
    rows.push(CheckReport::new(
        names[2],
        Status::from_bool(star_ok),
        format!("{} splits checked", splits.len()),
        json!({ "splits": splits }),
    ));

    let mut sym = Vec::new();
    let mut swap = Vec::new();
    let mut w0inv = Vec::new();
    for pi in &top {
        let inv = pi.inverse();
        let conj = pi.conjugate_by_w0();
        let both = inv.conjugate_by_w0();
        let d = bd[pi].eval_at_one();
        sym.push(json!({
            "pi": pi.to_string(), "degree": d,
            "holds": d == bd[&inv].eval_at_one() && d == bd[&conj].eval_at_one(),
        }));
        swap.push(json!({ "pi": pi.to_string(), "inverse": inv.to_string(), "holds": *bd[pi] == bd[&inv].swap() }));
        w0inv.push(json!({ "pi": pi.to_string(), "image": both.to_string(), "holds": bd[pi] == bd[&both] }));
    }
    for (name, list, what) in [
        (names[3], sym, "d_pi = d_pi^-1 = d_w0.pi.w0"),
        (names[4], swap, "d'_pi(A,B) = d'_pi^-1(B,A)"),
        (names[5], w0inv, "d'_pi = d'_w0.pi^-1.w0"),
    ] {
        let ok = list.iter().all(|s| s["holds"] == json!(true));
        rows.push(CheckReport::new(
            name,
            Status::from_bool(ok),
            format!("{what} for {} permutations", list.len()),
            json!({ "cases": list }),
        ));
    }
    for r in &mut rows {
        r.elapsed_ms = elapsed;
    }
    rows
}

fn degenerate(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    let limit = timed(ctx, || {
        let name = "degenerate/limit".to_string();
        match degeneration_limit(ctx, n) {
            Ok(r) => r,
            Err(e) => error_row(name, e),
        }
    });
    let twist = timed(ctx, || match twist_check(n) {
        Ok(r) => r,
        Err(e) => error_row("degenerate/twist".into(), e),
    });
    vec![limit, twist]
}

fn degeneration_limit(ctx: &Context, n: usize) -> Result<CheckReport> {
    let orientation = ctx.cli.orientation();
    let d = build_ideal(&SchemeTag::D, n)?;
    let w = degeneration_weight(n, orientation)?;
    let limit = initial_forms_ideal_with(&d, &w, &ctx.engine.options())?;
    let order = TermOrder::Grevlex;
    let limit_gb = ctx.engine.basis_with_order(&limit, &order)?;
    let d0 = build_ideal(&SchemeTag::D0, n)?;
    let d0_gb = ctx.engine.basis_with_order(&d0, &order)?;
    let conj_gb = ctx
        .engine
        .basis_with_order(&w0_conjugate(&d0, n)?, &order)?;
    // reduced bases are canonical, so equal ideals have equal bases
    let equals_d0 = limit_gb == d0_gb;
    let equals_conj = limit_gb == conj_gb;
    let payload = json!({
        "orientation": format!("{orientation:?}").to_lowercase(),
        "weights": w.weights(),
        "limitBasisSize": limit_gb.len(),
        "equalsD0": equals_d0,
        "equalsW0ConjugateD0": equals_conj,
    });
    let expectation = json!({ "equalsD0": true });
    Ok(match orientation {
        Orientation::Standard => CheckReport::new(
            "degenerate/limit",
            Status::from_bool(equals_d0),
            format!("in_w(I_D) {} I_D0", if equals_d0 { "=" } else { "!=" }),
            payload,
        )
        .expecting(expectation),
        Orientation::Flipped => CheckReport::new(
            "degenerate/limit",
            Status::Report,
            format!(
                "flipped weight: limit is {}",
                if equals_conj {
                    "the w0-conjugate of I_D0"
                } else {
                    "not the w0-conjugate of I_D0"
                }
            ),
            payload,
        ),
    })
}

fn twist_check(n: usize) -> Result<CheckReport> {
    let twisted = tau_substitute(&build_ideal(&SchemeTag::D0, n)?, n)?;
    let e = build_ideal(&SchemeTag::E, n)?;
    let covered = |a: &diagcomm::Ideal, b: &diagcomm::Ideal| {
        a.generators
            .iter()
            .all(|g| b.generators.iter().any(|h| same_up_to_sign(g, h)))
    };
    // equal generator sets up to sign give mutual membership without a basis
    let generator_level = twisted.generators.len() == e.generators.len()
        && covered(&twisted, &e)
        && covered(&e, &twisted);
    Ok(CheckReport::new(
        "degenerate/twist",
        Status::from_bool(generator_level),
        format!("tau(I_D0) {} I_E", if generator_level { "=" } else { "!=" }),
        json!({ "generatorLevel": generator_level, "generators": e.generators.len() }),
    ))
}

fn w0_matrix(n: usize) -> RatMatrix {
    permutation_matrix(&Permutation::longest(n))
}

fn smooth(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    let trials = ctx.cli.trials.unwrap_or(SMOOTH_TRIALS);
    let seed = ctx.cli.seed;
    let convention = ctx.cli.diag_convention();
    let expected = n * n - n;
    let rank_row = timed(ctx, || {
        let outcome: Result<Vec<(String, usize, usize)>> = (|| {
            let ring = Ring::matrix_pair(n)?;
            let e = build_ideal(&SchemeTag::E, n)?;
            let d0 = build_ideal(&SchemeTag::D0, n)?;
            let perms = Permutation::all(n);
            ctx.pool.install(|| {
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let mut rng = keyed_rng(seed, "smooth/jacobian", t as u64);
                        let pi = perms.choose(&mut rng).expect("n >= 1").clone();
                        let (x, y) = sample_point(&random_params(&mut rng, &pi, false)?)?;
                        let re = jacobian_rank(&e, &ring, &x, &y)?;
                        let rd = jacobian_rank(
                            &d0,
                            &ring,
                            &(&w0_matrix(n) * &x),
                            &(&y * &w0_matrix(n)),
                        )?;
                        Ok((pi.to_string(), re, rd))
                    })
                    .collect()
            })
        })();
        match outcome {
            Err(e) => error_row("smooth/jacobian".into(), e),
            Ok(samples) => {
                let bad = samples
                    .iter()
                    .filter(|(_, a, b)| *a != expected || *b != expected)
                    .count();
                CheckReport::new(
                    "smooth/jacobian",
                    Status::from_bool(bad == 0),
                    format!("{} central points, rank {expected} expected on I_E and I_D0, {bad} failures", samples.len()),
                    json!({
                        "trials": samples.len(),
                        "expectedRank": expected,
                        "failures": bad,
                        "samples": samples.iter().map(|(p, a, b)| json!({"pi": p, "rankE": a, "rankD0": b})).collect::<Vec<_>>(),
                    }),
                )
            }
        }
    });
    let lemma_row = timed(ctx, || {
        let outcome: Result<Vec<(String, bool)>> = {
            let perms = Permutation::all(n);
            ctx.pool.install(|| {
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let mut rng = keyed_rng(seed, "smooth/diag-identity", t as u64);
                        let pi = perms.choose(&mut rng).expect("n >= 1").clone();
                        let (x, y) = sample_point(&random_params(&mut rng, &pi, true)?)?;
                        Ok((pi.to_string(), diag_lemma_check(&x, &y, &pi, convention)))
                    })
                    .collect()
            })
        };
        match outcome {
            Err(e) => error_row("smooth/diag-identity".into(), e),
            Ok(samples) => {
                let failures: Vec<&String> =
                    samples.iter().filter(|s| !s.1).map(|s| &s.0).collect();
                CheckReport::new(
                    "smooth/diag-identity",
                    Status::from_bool(failures.is_empty()),
                    format!(
                        "diag(XY) = pi.diag(YX) at {} dense-orbit points, {} failures",
                        samples.len(),
                        failures.len()
                    ),
                    json!({
                        "trials": samples.len(),
                        "convention": format!("{convention:?}").to_lowercase(),
                        "failingPermutations": failures,
                    }),
                )
            }
        }
    });
    vec![rank_row, lemma_row]
}

fn tao(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    let trials = ctx.cli.trials.unwrap_or(TAO_TRIALS);
    let seed = ctx.cli.seed;
    vec![timed(ctx, || {
        let outcome: Result<Vec<(bool, usize, bool)>> = ctx.pool.install(|| {
            (0..trials)
                .into_par_iter()
                .map(|t| {
                    let mut rng = keyed_rng(seed, "tao/rank-bound", t as u64);
                    let (x, y) = random_d_point(&mut rng, n)?;
                    let r = tao_rank_check(&x, &y)?;
                    Ok((r.applies, r.rank, r.pass))
                })
                .collect()
        });
        let witness = tao_rank_check(
            &Matrix::diagonal(&(1..=n as i64).map(int).collect::<Vec<_>>()),
            &Matrix::zeros(n, n),
        );
        match (outcome, witness) {
            (Err(e), _) | (_, Err(e)) => error_row("tao/rank-bound".into(), e),
            (Ok(samples), Ok(w)) => {
                let applicable = samples.iter().filter(|s| s.0).count();
                let failures = samples.iter().filter(|s| !s.2).count();
                let max_rank = samples
                    .iter()
                    .filter(|s| s.0)
                    .map(|s| s.1)
                    .max()
                    .unwrap_or(0);
                let ok = failures == 0 && w.rank == n && !w.applies;
                CheckReport::new(
                    "tao/rank-bound",
                    Status::from_bool(ok),
                    format!(
                        "{applicable}/{} samples with diagonal nonzero commutator, max rank {max_rank} <= {}; commuting witness rank {}",
                        samples.len(),
                        n - 1,
                        w.rank
                    ),
                    json!({
                        "trials": samples.len(),
                        "applicable": applicable,
                        "failures": failures,
                        "maxRank": max_rank,
                        "bound": n - 1,
                        "witness": { "x": format!("diag(1..{n})"), "y": "0", "rank": w.rank },
                    }),
                )
                .expecting(json!({ "maxRank": n - 1 }))
            }
        }
    })]
}

fn strata(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    vec![timed(ctx, || {
        let all = match PartialPerm::all(n) {
            Ok(a) => a,
            Err(e) => return error_row("strata/dimensions".into(), e),
        };
        let top = n * n + n;
        let mut ok = true;
        let rows: Vec<Value> = all
            .iter()
            .map(|p| {
                let full = p.rank() == n;
                let dim = p.stratum_dimension();
                ok &= if full { dim == top } else { dim < top };
                json!({
                    "p": p.to_string(),
                    "rank": p.rank(),
                    "orbitDimension": p.orbit_dimension(),
                    "stratumDimension": dim,
                })
            })
            .collect();
        let at_top = all.iter().filter(|p| p.stratum_dimension() == top).count();
        CheckReport::new(
            "strata/dimensions",
            Status::from_bool(ok),
            format!("{} partial permutations; dimension {top} reached by exactly the {at_top} permutations", all.len()),
            json!({ "count": all.len(), "topDimension": top, "atTop": at_top, "strata": rows }),
        )
    })]
}

fn conjectures(ctx: &Context) -> Vec<CheckReport> {
    let n = ctx.cli.n;
    let perms = permutations(ctx, n);
    let trials = ctx.cli.trials.unwrap_or(MEMBERSHIP_TRIALS);
    let seed = ctx.cli.seed;
    let start = Instant::now();
    let epi = invariants_for(ctx, &perms, SchemeTag::EpiCandidate);
    let closure = invariants_for(ctx, &perms, SchemeTag::ClosureUnion);
    let elapsed = ctx.cli.timings.then(|| start.elapsed().as_millis() as u64);
    let all = Permutation::all(n);
    let top = n * n + n;
    let membership = |tag: &SchemeTag, name: &str, choices: &[Permutation]| -> Result<bool> {
        let ring = Ring::matrix_pair(n)?;
        let ideal = build_ideal(tag, n)?;
        let results: Vec<Result<bool>> = ctx.pool.install(|| {
            (0..trials)
                .into_par_iter()
                .map(|t| {
                    let mut rng = keyed_rng(seed, name, t as u64);
                    let rho = choices.choose(&mut rng).expect("nonempty").clone();
                    let (x, y) = sample_point(&random_params(&mut rng, &rho, true)?)?;
                    Ok(vanishes_at(&ideal, &ring, &x, &y).is_ok())
                })
                .collect()
        });
        results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
    };
    let mut rows = Vec::new();
    for pi in &perms {
        let name = format!("conjectures/epi:{pi}");
        rows.push(match &epi[pi] {
            Err(e) => error_row(name, e.clone()),
            Ok(inv) => match membership(&SchemeTag::EpiCandidate(pi.clone()), &name, std::slice::from_ref(pi)) {
                Err(e) => error_row(name, e),
                Ok(on_scheme) => {
                    let published = expected::degree(pi);
                    let matches = inv.dimension == top && Some(inv.degree()) == published && on_scheme;
                    CheckReport::new(
                        name,
                        Status::Report,
                        format!("dim {} d={} sample points on scheme: {on_scheme}; matches: {matches}", inv.dimension, inv.degree()),
                        json!({
                            "pi": pi.to_string(),
                            "dimension": inv.dimension,
                            "degree": inv.degree(),
                            "bidegree": bidegree_json(&inv.bidegree),
                            "samplePointsOnScheme": on_scheme,
                            "matchesPaperGl3": matches,
                        }),
                    )
                    .expecting(json!({ "dimension": top, "degree": published }))
                }
            },
        });
    }
    for pi in &perms {
        let name = format!("conjectures/closure:{pi}");
        let below: Vec<Permutation> = all
            .iter()
            .filter(|r| bruhat_leq(r, pi).unwrap_or(false))
            .cloned()
            .collect();
        let published: Option<u64> = below.iter().map(expected::degree).sum();
        rows.push(match &closure[pi] {
            Err(e) => error_row(name, e.clone()),
            Ok(inv) => match membership(&SchemeTag::ClosureUnion(pi.clone()), &name, &below) {
                Err(e) => error_row(name, e),
                Ok(on_scheme) => {
                    let matches = inv.dimension == top && Some(inv.degree()) == published && on_scheme;
                    CheckReport::new(
                        name,
                        Status::Report,
                        format!(
                            "d={} over {} permutations below; sample points on scheme: {on_scheme}; matches: {matches}",
                            inv.degree(),
                            below.len()
                        ),
                        json!({
                            "pi": pi.to_string(),
                            "below": below.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                            "dimension": inv.dimension,
                            "degree": inv.degree(),
                            "bidegree": bidegree_json(&inv.bidegree),
                            "samplePointsOnScheme": on_scheme,
                            "matchesPaperGl3": matches,
                        }),
                    )
                    .expecting(json!({ "dimension": top, "degree": published }))
                }
            },
        });
    }
    for r in &mut rows {
        r.elapsed_ms = elapsed;
    }
    rows
}
