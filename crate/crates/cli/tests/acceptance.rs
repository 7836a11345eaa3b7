//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use linspec::chromatic::named_graph;
use linspec::designs::{cond1, steiner_triple_system, transversal_design, verify_gdd};
use linspec::expansion::{contains_expansion, expand, greedy_shadow_embedding, greedy_target, verify_embedding, GreedyOutcome};
use linspec::harness::{design_corpus, expansion_test_graphs, random_corpus, Instance};
use linspec::hypercore::read_hypergraph;
use linspec::shadow::{global_bound_check, lconn_check, turan_bound_check};
use linspec::spectral::spectral_radius;
use linspec::{Graph, Hypergraph, SpectralOptions};

const SEED: u64 = 2024;

type Outcome = Result<String, String>;

/// Name, check, time limit.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> SpectralOptions {
    SpectralOptions::default()
}

fn rho(h: &Hypergraph) -> Result<f64, String> {
    let rep = spectral_radius(h, &opts()).map_err(|e| e.to_string())?;
    ensure(rep.converged, || "iteration did not converge".into())?;
    Ok(rep.rho)
}

fn fano_from_cli() -> Result<Hypergraph, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_linspec"))
        .args(["design", "sts", "--n", "7"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("cli exited with {}", out.status))?;
    read_hypergraph(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())
}

fn c1() -> Outcome {
    let h = fano_from_cli()?;
    let r = rho(&h)?;
    ensure((r - 3.0).abs() <= 1e-8, || format!("rho = {r}"))?;
    let g = global_bound_check(&h, &opts()).map_err(|e| e.to_string())?;
    ensure(g.equality && g.is_design, || format!("equality {} is_design {}", g.equality, g.is_design))?;
    Ok(format!("rho = {r:.12}, bound {} attained, design", g.bound))
}

fn c2() -> Outcome {
    let h = steiner_triple_system(9).map_err(|e| e.to_string())?;
    let r = rho(&h)?;
    ensure((r - 4.0).abs() <= 1e-8, || format!("rho = {r}"))?;
    ensure(h.edge_count() == 9 * 8 / (3 * 2), || format!("{} edges", h.edge_count()))?;
    Ok(format!("rho = {r:.12}, e = {}", h.edge_count()))
}

fn c3() -> Outcome {
    let mut parts = Vec::new();
    for m in [3usize, 5, 7] {
        let (h, groups) = transversal_design(3, m).map_err(|e| e.to_string())?;
        ensure(verify_gdd(&h, &groups), || format!("TD(3,{m}) is not a GDD"))?;
        let r = rho(&h)?;
        let (n, k, rr) = (3 * m, 3, 3);
        let closed = (n * (k - 1)) as f64 / (k * (rr - 1)) as f64;
        ensure((r - m as f64).abs() <= 1e-8 && (r - closed).abs() <= 1e-8, || format!("TD(3,{m}): rho = {r}"))?;
        let want = m * m * k * (k - 1) / (rr * (rr - 1));
        ensure(h.edge_count() == m * m && h.edge_count() == want, || format!("TD(3,{m}): {} edges", h.edge_count()))?;
        parts.push(format!("m={m}: rho={r:.10}"));
    }
    Ok(parts.join(", "))
}

fn random_instances() -> Result<Vec<Instance>, String> {
    random_corpus(200, &[3, 4], 15, SEED).map_err(|e| e.to_string())
}

fn c4() -> Outcome {
    let corpus = random_instances()?;
    let (mut regular, mut min_strict) = (0, f64::MAX);
    for inst in &corpus {
        let h = &inst.hypergraph;
        ensure(h.n() <= 15 && h.is_connected() && h.is_linear(), || format!("{}: bad instance", inst.name))?;
        let t = lconn_check(h, &opts()).map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(t.rho <= t.shadow_scaled + 1e-6, || format!("{}: rho {} > {}", inst.name, t.rho, t.shadow_scaled))?;
        let tight = t.gap.abs() <= 1e-6;
        let reg = h.degree_profile().is_regular();
        ensure(tight == reg, || format!("{}: gap {:e}, regular {reg}", inst.name, t.gap))?;
        if reg {
            regular += 1;
        } else {
            min_strict = min_strict.min(t.gap);
        }
    }
    Ok(format!("{} instances, {regular} regular, smallest irregular gap {min_strict:.3e}", corpus.len()))
}

fn c5() -> Outcome {
    let mut hosts = vec![("fano".to_string(), fano_from_cli()?)];
    hosts.push(("sts(9)".into(), steiner_triple_system(9).map_err(|e| e.to_string())?));
    for m in [3, 5, 7] {
        hosts.push((format!("td(3,{m})"), transversal_design(3, m).map_err(|e| e.to_string())?.0));
    }
    hosts.extend(random_instances()?.into_iter().map(|i| (i.name, i.hypergraph)));
    for (name, h) in &hosts {
        let r = rho(h)?;
        let p = h.degree_profile();
        ensure(p.average_f64() <= r + 1e-9 && r <= p.max as f64 + 1e-9, || {
            format!("{name}: avg {} <= rho {r} <= max {} fails", p.average_f64(), p.max)
        })?;
        let lower = (h.r() * h.edge_count()) as f64 / h.n() as f64;
        ensure(r >= lower - 1e-6, || format!("{name}: rho {r} < re/n {lower}"))?;
    }
    Ok(format!("{} instances", hosts.len()))
}

fn c6() -> Outcome {
    let mut count = 0;
    for k in 2..=5 {
        for n in k..=12 {
            let t = turan_bound_check(k, n, 1e-8).map_err(|e| e.to_string())?;
            ensure(t.rho <= t.bound + 1e-8, || format!("T_{k}({n}): {} > {}", t.rho, t.bound))?;
            let equal = (t.rho - t.bound).abs() <= 1e-8;
            ensure(equal == (n % k == 0), || format!("T_{k}({n}): rho {} vs {}", t.rho, t.bound))?;
            count += 1;
        }
    }
    Ok(format!("{count} Turán graphs"))
}

fn c7() -> Outcome {
    let graphs = expansion_test_graphs();
    for (name, f) in &graphs {
        ensure(f.n() <= 8, || format!("{name} too large"))?;
        for r in 3..=5 {
            let exp = expand(f, r).map_err(|e| e.to_string())?;
            let h = exp.hypergraph();
            ensure(h.n() == f.n() + (r - 2) * f.edge_count(), || format!("{name}^{r}: {} vertices", h.n()))?;
            ensure(h.edge_count() == f.edge_count(), || format!("{name}^{r}: {} edges", h.edge_count()))?;
            ensure(h.is_linear(), || format!("{name}^{r} not linear"))?;
        }
    }
    Ok(format!("{} graphs x r in 3..=5", graphs.len()))
}

fn certified(h: &Hypergraph, f: &Graph) -> Result<bool, String> {
    let exp = expand(f, h.r()).map_err(|e| e.to_string())?;
    Ok(match contains_expansion(h, f, h.r()).map_err(|e| e.to_string())? {
        Some(emb) => verify_embedding(h, &exp, &emb),
        None => false,
    })
}

fn c8() -> Outcome {
    let mut hosts: Vec<(String, Hypergraph)> =
        design_corpus(30).into_iter().map(|i| (i.name, i.hypergraph)).collect();
    hosts.extend(random_instances()?.into_iter().map(|i| (i.name, i.hypergraph)));
    hosts.push(("k4^3".into(), expand(&Graph::complete(4).unwrap(), 3).unwrap().into_hypergraph()));
    hosts.retain(|(_, h)| h.n() <= 12 && h.r() >= 3);
    // pattern, and the greedy target K_k(l..l) that contains it
    let cases = [("k3", 3, 1), ("p3", 2, 2), ("k4", 4, 1)];
    let (mut successes, mut runs) = (0, 0);
    for (name, h) in &hosts {
        for &(pattern, k, l) in &cases {
            runs += 1;
            let outcome = match greedy_shadow_embedding(h, k, l, false) {
                Ok(o) => o,
                Err(linspec::Error::NoWitness) => continue,
                Err(e) => return Err(format!("{name}/{pattern}: {e}")),
            };
            let GreedyOutcome::Embedded { expansion, embedding, .. } = outcome else { continue };
            successes += 1;
            ensure(verify_embedding(h, &expansion, &embedding), || format!("{name}/{pattern}: bad greedy embedding"))?;
            let target = greedy_target(k, l, false).map_err(|e| e.to_string())?;
            ensure(certified(h, &target)?, || format!("{name}/{pattern}: search misses greedy target"))?;
            let f = named_graph(pattern).map_err(|e| e.to_string())?;
            ensure(certified(h, &f)?, || format!("{name}/{pattern}: search misses pattern"))?;
        }
    }
    ensure(successes > 0, || "no greedy success to confirm".into())?;
    Ok(format!("{} hosts, {successes} of {runs} greedy runs succeeded, all confirmed", hosts.len()))
}

fn c9() -> Outcome {
    let k4 = Graph::complete(4).unwrap();
    for m in [3, 5] {
        let (td, _) = transversal_design(3, m).map_err(|e| e.to_string())?;
        let hit = contains_expansion(&td, &k4, 3).map_err(|e| e.to_string())?;
        ensure(hit.is_none(), || format!("TD(3,{m}) contains K4^3"))?;
    }
    Ok("TD(3,3) and TD(3,5) are K4^3-free".into())
}

fn c10() -> Outcome {
    for n in 3..=1000 {
        let residue = matches!(n % 6, 1 | 3);
        ensure(cond1(n, 3) == residue, || format!("cond1({n}, 3) = {}", cond1(n, 3)))?;
        let built = steiner_triple_system(n).is_ok();
        ensure(built == residue, || format!("steiner_triple_system({n}) built = {built}"))?;
    }
    Ok("n in 3..=1000".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fano equality via cli", c1, Duration::from_secs(1)),
        ("sts(9) radius and edge cap", c2, Duration::from_secs(1)),
        ("transversal designs m=3,5,7", c3, Duration::from_secs(2)),
        ("shadow transfer on 200 random", c4, Duration::from_secs(60)),
        ("degree sandwich and edge density", c5, Duration::from_secs(60)),
        ("turan spectral bound", c6, Duration::from_secs(5)),
        ("expansion bookkeeping", c7, Duration::from_secs(5)),
        ("containment oracle agreement", c8, Duration::from_secs(60)),
        ("extremal freeness", c9, Duration::from_secs(30)),
        ("divisibility gates", c10, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let verdict = match result {
            Ok(detail) if took <= *limit => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over time limit {limit:?}: {detail}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {:>2} [{name}] {verdict} ({:.3}s)", i + 1, took.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
