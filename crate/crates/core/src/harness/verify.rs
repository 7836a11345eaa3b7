use std::time::Instant;

use rayon::prelude::*;

use crate::chromatic::named_graph;
use crate::designs::{gdd, steiner_triple_system, transversal_design, verify_design, verify_gdd, GroupDivision};
use crate::error::{Error, Result};
use crate::expansion::{contains_expansion, expand, greedy_shadow_embedding, greedy_target, verify_embedding, GreedyOutcome};
use crate::hypercore::{Graph, Hypergraph};
use crate::shadow::{global_bound_check, lconn_check, turan_bound_check, EQUALITY_TOL};
use crate::spectral::{spectral_radius, SpectralOptions};

use super::random::random_connected_linear;
use super::report::{canonicalize, Check, VerificationReport};

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub spectral: SpectralOptions,
    /// Slack for inequalities between a computed radius and a bound.
    pub bound_tol: f64,
    /// Slack for equalities with a known closed form.
    pub equality_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { spectral: SpectralOptions::default(), bound_tol: 1e-6, equality_tol: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub random_instances: usize,
    pub uniformities: Vec<usize>,
    pub max_random_n: usize,
    pub max_design_n: usize,
    /// Hosts up to this size also get the containment cross-checks.
    pub max_containment_n: usize,
    pub turan_k: std::ops::RangeInclusive<usize>,
    pub turan_max_n: usize,
    pub verify: VerifyConfig,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            random_instances: 200,
            uniformities: vec![3, 4],
            max_random_n: 15,
            max_design_n: 30,
            max_containment_n: 12,
            turan_k: 2..=5,
            turan_max_n: 12,
            verify: VerifyConfig::default(),
        }
    }
}

/// A constructed or sampled hypergraph with how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub name: String,
    pub hypergraph: Hypergraph,
    /// Present when the instance is a GDD.
    pub groups: Option<GroupDivision>,
}

/// Every constructible design with at most `max_n` points.
pub fn design_corpus(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in (7..=max_n).filter(|n| matches!(n % 6, 1 | 3)) {
        let h = steiner_triple_system(n).expect("supported residue");
        out.push(Instance { name: format!("sts({n:02})"), hypergraph: h, groups: None });
    }
    for r in 3..=max_n {
        for m in (r..=max_n / r).filter(|&m| crate::designs::is_prime(m)) {
            let (h, g) = transversal_design(r, m).expect("prime order");
            out.push(Instance { name: format!("td({r},{m})"), hypergraph: h, groups: Some(g) });
        }
    }
    for k in 2..=6 {
        for m in (1..=3).filter(|m| m * k <= max_n) {
            let (h, g) = gdd(m, k, 2).expect("multipartite family");
            out.push(Instance { name: format!("gdd({m}^{k},r=2)"), hypergraph: h, groups: Some(g) });
        }
    }
    out
}

/// Seeded connected linear hypergraphs, cycling through `uniformities`.
pub fn random_corpus(count: usize, uniformities: &[usize], max_n: usize, seed: u64) -> Result<Vec<Instance>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let r = uniformities[i % uniformities.len()];
            let h = random_connected_linear(seed.wrapping_mul(0x1_0000).wrapping_add(i as u64), r, max_n)?;
            let name = format!("random(r={r},#{i:03},n={},e={})", h.n(), h.edge_count());
            Ok(Instance { name, hypergraph: h, groups: None })
        })
        .collect()
}

fn timed(theorem: &'static str, instance: &str, run: impl FnOnce() -> Result<Vec<Check>>) -> VerificationReport {
    let start = Instant::now();
    let (checks, error) = match run() {
        Ok(checks) => (checks, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    VerificationReport { theorem, instance: instance.to_string(), checks, error, runtime: start.elapsed() }
}

/// All spectral and counting checks that apply to one hypergraph.
pub fn hypergraph_reports(inst: &Instance, cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let h = &inst.hypergraph;
    let name = inst.name.as_str();
    let mut out = Vec::new();
    let (n, r, e) = (h.n(), h.r(), h.edge_count());
    let profile = h.degree_profile();

    out.push(timed("degree-sandwich", name, || {
        let rho = spectral_radius(h, &cfg.spectral)?.rho;
        let mut checks = vec![
            Check::AtLeast { label: "rho>=avg", measured: rho, bound: profile.average_f64(), tol: cfg.bound_tol },
            Check::AtMost { label: "rho<=max", measured: rho, bound: profile.max as f64, tol: cfg.bound_tol },
        ];
        if profile.is_regular() {
            checks.push(Check::Close { label: "rho=d", measured: rho, expected: profile.max as f64, tol: cfg.equality_tol });
        }
        Ok(checks)
    }));

    out.push(timed("edge-density", name, || {
        let rho = spectral_radius(h, &cfg.spectral)?.rho;
        let bound = (r * e) as f64 / n as f64;
        Ok(vec![Check::AtLeast { label: "rho>=re/n", measured: rho, bound, tol: cfg.bound_tol }])
    }));

    if h.is_linear() {
        out.push(timed("linear-edge-cap", name, || {
            let design = verify_design(h);
            Ok(vec![
                Check::Holds { label: "e<=n(n-1)/(r(r-1))", value: e * r * (r - 1) <= n * (n - 1) },
                Check::Iff { label: "equality<=>design", left: e * r * (r - 1) == n * (n - 1), right: design },
            ])
        }));
        out.push(timed("shadow-transfer", name, || {
            let t = lconn_check(h, &cfg.spectral)?;
            let mut checks = vec![Check::AtMost { label: "rho<=rho(shadow)/(r-1)", measured: t.rho, bound: t.shadow_scaled, tol: EQUALITY_TOL }];
            if r >= 3 {
                checks.push(Check::Iff { label: "equality<=>regular", left: t.equality, right: t.regular });
            }
            Ok(checks)
        }));
        out.push(timed("global-bound", name, || {
            let g = global_bound_check(h, &cfg.spectral)?;
            Ok(vec![
                Check::AtMost { label: "rho<=(n-1)/(r-1)", measured: g.rho, bound: g.bound, tol: cfg.bound_tol },
                Check::Iff { label: "equality<=>design", left: g.equality, right: g.is_design },
            ])
        }));
    }

    if let Some(groups) = &inst.groups {
        let (m, k) = (groups.group_size(), groups.k());
        out.push(timed("gdd-equality", name, || {
            let rho = spectral_radius(h, &cfg.spectral)?.rho;
            let expected = (n * (k - 1)) as f64 / (k * (r - 1)) as f64;
            Ok(vec![
                Check::Holds { label: "verify_gdd", value: verify_gdd(h, groups) },
                Check::Close { label: "rho=n(k-1)/(k(r-1))", measured: rho, expected, tol: cfg.equality_tol },
            ])
        }));
        out.push(timed("gdd-edge-count", name, || {
            let expected = (m * m * k * (k - 1)) / (r * (r - 1));
            Ok(vec![
                Check::Holds { label: "divisible", value: (m * m * k * (k - 1)) % (r * (r - 1)) == 0 },
                Check::Exact { label: "e=m^2k(k-1)/(r(r-1))", measured: e as u64, expected: expected as u64 },
            ])
        }));
    }
    out
}

pub fn turan_reports(ks: std::ops::RangeInclusive<usize>, max_n: usize, tol: f64) -> Vec<VerificationReport> {
    let params: Vec<(usize, usize)> = ks.flat_map(|k| (k..=max_n).map(move |n| (k, n))).collect();
    params
        .into_par_iter()
        .map(|(k, n)| {
            timed("turan-bound", &format!("turan(k={k},n={n:02})"), || {
                let t = turan_bound_check(k, n, tol)?;
                Ok(vec![
                    Check::AtMost { label: "rho<=n(1-1/k)", measured: t.rho, bound: t.bound, tol },
                    Check::Iff { label: "equality<=>k|n", left: t.equality, right: t.divisible },
                ])
            })
        })
        .collect()
}

/// Graphs on at most 8 vertices used for expansion bookkeeping.
pub fn expansion_test_graphs() -> Vec<(String, Graph)> {
    let mut names: Vec<String> = Vec::new();
    names.extend((2..=8).map(|n| format!("k{n}")));
    names.extend((2..=8).map(|n| format!("p{n}")));
    names.extend((3..=8).map(|n| format!("c{n}")));
    names.extend(["t2_4", "t2_5", "t3_6", "t3_7", "t4_8", "t2_8"].map(String::from));
    let mut out: Vec<(String, Graph)> = names.into_iter().map(|s| {
        let g = named_graph(&s).expect("known name");
        (s, g)
    }).collect();
    out.push(("k4+isolated".into(), Graph::complete(4).unwrap().with_isolated(2)));
    out.push(("petersen-minus-2".into(), Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (5, 7), (6, 5)]).unwrap()));
    out
}

pub fn expansion_reports() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (name, f) in expansion_test_graphs() {
        for r in 3..=5 {
            out.push(timed("expansion-counts", &format!("{name}^{r}"), || {
                let exp = expand(&f, r)?;
                let h = exp.hypergraph();
                Ok(vec![
                    Check::Exact {
                        label: "|V|=|V(F)|+(r-2)|E(F)|",
                        measured: h.n() as u64,
                        expected: (f.n() + (r - 2) * f.edge_count()) as u64,
                    },
                    Check::Exact { label: "|E|=|E(F)|", measured: h.edge_count() as u64, expected: f.edge_count() as u64 },
                    Check::Holds { label: "linear", value: h.is_linear() },
                ])
            }));
        }
    }
    out
}

/// Greedy targets checked against the exact search: pattern name, the
/// greedy parameters `(k, l, plus)`, and the pattern contained in the target.
pub const GREEDY_CASES: [(&str, usize, usize, bool); 3] = [("k3", 3, 1, false), ("p3", 2, 2, false), ("k4", 4, 1, false)];

/// Every greedy success must be confirmed by the exact search, for both the
/// greedy target and the smaller pattern it contains.
pub fn containment_reports(inst: &Instance) -> Vec<VerificationReport> {
    let h = &inst.hypergraph;
    GREEDY_CASES
        .iter()
        .map(|&(pattern, k, l, plus)| {
            timed("greedy-soundness", &format!("{}/{pattern}", inst.name), || {
                let pattern_graph = named_graph(pattern)?;
                let target = greedy_target(k, l, plus)?;
                match greedy_shadow_embedding(h, k, l, plus) {
                    Err(Error::NoWitness) => Ok(vec![Check::Holds { label: "no-witness", value: true }]),
                    Err(e) => Err(e),
                    Ok(GreedyOutcome::PartExhausted(_)) => Ok(vec![Check::Holds { label: "part-exhausted", value: true }]),
                    Ok(GreedyOutcome::Embedded { expansion, embedding, .. }) => Ok(vec![
                        Check::Holds { label: "verify_embedding", value: verify_embedding(h, &expansion, &embedding) },
                        Check::Holds { label: "search-finds-target", value: found(h, &target)? },
                        Check::Holds { label: "search-finds-pattern", value: found(h, &pattern_graph)? },
                    ]),
                }
            })
        })
        .collect()
}

fn found(h: &Hypergraph, f: &Graph) -> Result<bool> {
    Ok(match contains_expansion(h, f, h.r())? {
        Some(emb) => verify_embedding(h, &expand(f, h.r())?, &emb),
        None => false,
    })
}

/// `K_{k+1}^r` never embeds into a transversal design TD(k, m).
pub fn freeness_reports() -> Vec<VerificationReport> {
    [3usize, 5]
        .into_par_iter()
        .map(|m| {
            timed("expansion-freeness", &format!("td(3,{m})/k4"), || {
                let (td, _) = transversal_design(3, m)?;
                let hit = contains_expansion(&td, &Graph::complete(4)?, 3)?;
                Ok(vec![Check::Holds { label: "k4-free", value: hit.is_none() }])
            })
        })
        .collect()
}

/// Runs every suite over the design corpus and a seeded random corpus.
/// Reports come back sorted by theorem then instance.
pub fn verify_all(cfg: &CorpusConfig, seed: u64) -> Result<Vec<VerificationReport>> {
    let mut instances = design_corpus(cfg.max_design_n);
    instances.extend(random_corpus(cfg.random_instances, &cfg.uniformities, cfg.max_random_n, seed)?);

    let mut reports: Vec<VerificationReport> = instances
        .par_iter()
        .flat_map_iter(|inst| {
            let mut out = hypergraph_reports(inst, &cfg.verify);
            if inst.hypergraph.r() >= 3 && inst.hypergraph.n() <= cfg.max_containment_n {
                out.extend(containment_reports(inst));
            }
            out
        })
        .collect();
    reports.extend(turan_reports(cfg.turan_k.clone(), cfg.turan_max_n, cfg.verify.equality_tol));
    reports.extend(expansion_reports());
    reports.extend(freeness_reports());
    canonicalize(&mut reports);
    Ok(reports)
}

/// Checks for a single user-supplied hypergraph.
pub fn verify_hypergraph(name: &str, h: &Hypergraph, groups: Option<GroupDivision>, cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let inst = Instance { name: name.to_string(), hypergraph: h.clone(), groups };
    let mut reports = hypergraph_reports(&inst, cfg);
    canonicalize(&mut reports);
    reports
}
