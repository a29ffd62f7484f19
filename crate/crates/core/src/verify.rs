//! Seeded verification suites comparing every formula against an independent route.

use std::time::Instant;

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{named, regular_catalog};
use crate::charpoly::charpoly_exact;
use crate::eigen::{eig_sym_with, spectra_match, JacobiOptions, NumericSpectrum, DEFAULT_MAX_SWEEPS, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::formulas::{
    check_certificates, cycle_pocket_spectrum_q, edge_pocket_charpoly_q, huv_spectrum_q, hv_spectrum_a, hv_spectrum_q,
    inherited_spectrum, join_charpoly_a, join_charpoly_q, matching_pocket_spectrum_q, pocket_charpoly_a,
    pocket_charpoly_q, pocket_eigenvector_certificates, spanning_edge_pocket_charpoly_q, CertificateKind, CoronalRoute,
    PocketKind,
};
use crate::graph::Graph;
use crate::pocket::{EdgePocketSpec, PocketSpec, VertexPocketSpec};
use crate::spectrum::SpectrumMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Factored adjacency charpoly of random vertex-pocket graphs.
    VertexA,
    /// Factored signless Laplacian charpoly of random vertex-pocket graphs.
    VertexQ,
    /// Edge-pocket factorisation on fixtures and random regular `E_k`.
    EdgeQ,
    /// Spanning edge-pocket form against the general one.
    EdgeSpanning,
    JoinA,
    JoinQ,
    /// Closed-form spectrum of the matching instance.
    Matching,
    /// Closed-form spectrum of the Hamiltonian-cycle instance.
    Cycle,
    /// Spectra of `{v} ∨ H1` and `K_2 ∨ H2` over the regular catalog.
    Small,
    /// Residual polynomial independence of the remainder.
    Inherit,
    /// Eigenvector certificates on `C_p □ K_q` remainders.
    Eigvec,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::VertexA,
        Suite::VertexQ,
        Suite::EdgeQ,
        Suite::EdgeSpanning,
        Suite::JoinA,
        Suite::JoinQ,
        Suite::Matching,
        Suite::Cycle,
        Suite::Small,
        Suite::Inherit,
        Suite::Eigvec,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::VertexA => "vertex-a",
            Suite::VertexQ => "vertex-q",
            Suite::EdgeQ => "edge-q",
            Suite::EdgeSpanning => "edge-spanning",
            Suite::JoinA => "join-a",
            Suite::JoinQ => "join-q",
            Suite::Matching => "matching",
            Suite::Cycle => "cycle",
            Suite::Small => "small",
            Suite::Inherit => "inherit",
            Suite::Eigvec => "eigvec",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite `{s}`")))
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub count: usize,
    pub tol: f64,
    /// Jacobi sweep limit for the numeric oracle.
    pub max_sweeps: usize,
    /// Size parameter for the closed-form suites (`k` for the matching, `n` for the cycle).
    pub n: Option<usize>,
    /// Pocket order for the closed-form suites.
    pub m: Option<usize>,
    /// Restrict the inherit suite to one pocket kind.
    pub kind: Option<PocketKind>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, count: 50, tol: DEFAULT_TOL, max_sweeps: DEFAULT_MAX_SWEEPS, n: None, m: None, kind: None }
    }
}

/// One pass/fail line of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    /// The failing instance, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn exact(name: impl Into<String>, passed: bool, instance: impl FnOnce() -> Value) -> Check {
        Check { name: name.into(), passed, deviation: None, counterexample: (!passed).then(instance), note: None }
    }

    fn numeric(name: impl Into<String>, deviation: f64, tol: f64, instance: impl FnOnce() -> Value) -> Check {
        let passed = deviation <= tol;
        Check {
            name: name.into(),
            passed,
            deviation: Some(deviation),
            counterexample: (!passed).then(instance),
            note: None,
        }
    }

    fn failed(name: impl Into<String>, err: &Error, instance: Value) -> Check {
        Check {
            name: name.into(),
            passed: false,
            deviation: None,
            counterexample: Some(instance),
            note: Some(err.to_string()),
        }
    }
}

/// Outputs and checks of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

/// Per-instance generator: stream `index` of the ChaCha generator keyed by `seed`.
fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).expect("distinct vertices");
            }
        }
    }
    g
}

fn shuffled(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm).expect("permutation")
}

/// Random vertex-pocket spec with `n <= max_n`, `m <= max_m` and the pocket vertex adjacent to all of `H`.
pub fn random_vertex_spec(rng: &mut impl Rng, max_n: usize, max_m: usize) -> VertexPocketSpec {
    let n = rng.gen_range(1..=max_n);
    let f = random_graph(rng, n, 0.5);
    let k = rng.gen_range(1..=n);
    let mut vk: Vec<usize> = (0..n).choose_multiple(rng, k);
    vk.shuffle(rng);
    let m = rng.gen_range(2..=max_m);
    let h1 = random_graph(rng, m - 1, 0.5);
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    let h = Graph::empty(1).join(&h1).permuted(&perm).expect("permutation");
    let v = perm.iter().position(|&x| x == 0).expect("apex present");
    VertexPocketSpec::new(f, vk, h, v).expect("generated spec is valid")
}

/// Random edge-pocket spec whose `E_k` is a matching or a cycle forced into `F`.
pub fn random_edge_spec(rng: &mut impl Rng, max_n: usize, max_m: usize) -> EdgePocketSpec {
    let n = rng.gen_range(3..=max_n.max(3));
    let mut f = random_graph(rng, n, 0.5);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let ek: Vec<(usize, usize)> = if rng.gen_bool(0.5) {
        let pairs = rng.gen_range(1..=n / 2);
        (0..pairs).map(|i| (order[2 * i], order[2 * i + 1])).collect()
    } else {
        let p = rng.gen_range(3..=n);
        (0..p).map(|i| (order[i], order[(i + 1) % p])).collect()
    };
    for &(a, b) in &ek {
        if !f.has_edge(a, b) {
            f.add_edge(a, b).expect("distinct vertices");
        }
    }
    let m = rng.gen_range(3..=max_m.max(3));
    let h2 = random_graph(rng, m - 2, 0.5);
    EdgePocketSpec::with_k2(f, ek, &h2).expect("generated spec is valid")
}

fn numeric(m: &crate::matrix::MatrixInt, opts: &VerifyOptions) -> Result<NumericSpectrum> {
    let jacobi = JacobiOptions { max_sweeps: opts.max_sweeps, ..JacobiOptions::default() };
    eig_sym_with(&m.to_f64(), jacobi).map(|d| NumericSpectrum::from_values(d.values))
}

fn spec_json(spec: &impl Serialize) -> Value {
    serde_json::to_value(spec).unwrap_or(Value::Null)
}

fn vertex_suite(opts: &VerifyOptions, kind: PocketKind) -> Vec<Check> {
    (0..opts.count)
        .into_par_iter()
        .map(|i| {
            let spec = random_vertex_spec(&mut instance_rng(opts.seed, i), 7, 6);
            let name = format!("{kind} #{i}");
            let g = crate::pocket::build_vertex_pockets(&spec);
            let result = match kind {
                PocketKind::AVertex => pocket_charpoly_a(&spec, CoronalRoute::Auto)
                    .and_then(|f| Ok((f.expanded, charpoly_exact(&g.adjacency_matrix())?))),
                _ => pocket_charpoly_q(&spec, CoronalRoute::Auto)
                    .and_then(|f| Ok((f.expanded, charpoly_exact(&g.signless_laplacian())?))),
            };
            match result {
                Ok((formula, direct)) => Check::exact(name, formula == direct, || spec_json(&spec)),
                Err(e) => Check::failed(name, &e, spec_json(&spec)),
            }
        })
        .collect()
}

/// A named host graph with the edges that carry pockets.
pub type EdgeFixture = (&'static str, Graph, Vec<(usize, usize)>);

type NamedSpec = (String, Result<PocketSpec>);

/// `(name, F, E_k)` for the spanning edge-pocket fixtures.
pub fn edge_fixtures() -> Vec<EdgeFixture> {
    let g = |s: &str| named(s).expect("literal");
    let cycle = |n: usize| (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>();
    vec![
        ("K4 matching", g("K4"), vec![(0, 1), (2, 3)]),
        ("K6 matching", g("K6"), vec![(0, 1), (2, 3), (4, 5)]),
        ("K3 cycle", g("K3"), cycle(3)),
        ("K4 Hamilton cycle", g("K4"), cycle(4)),
        ("C5 all edges", g("C5"), cycle(5)),
    ]
}

/// Pocket graphs used with [`edge_fixtures`].
pub fn edge_fixture_pockets() -> Vec<(&'static str, Graph)> {
    vec![("K5", named("K5").expect("K5")), ("K2+C4", named("K2+C4").expect("K2+C4"))]
}

fn edge_fixture_specs() -> Vec<(String, EdgePocketSpec)> {
    let mut out = Vec::new();
    for (fname, f, ek) in edge_fixtures() {
        for (hname, h) in edge_fixture_pockets() {
            let spec = EdgePocketSpec::new(f.clone(), ek.clone(), h, (0, 1)).expect("fixture spec");
            out.push((format!("{fname} / {hname}"), spec));
        }
    }
    out
}

fn edge_check(name: String, spec: &EdgePocketSpec) -> Check {
    let direct = charpoly_exact(&crate::pocket::build_edge_pockets(spec).signless_laplacian());
    match edge_pocket_charpoly_q(spec, CoronalRoute::Auto).and_then(|f| Ok((f.expanded, direct?))) {
        Ok((formula, direct)) => Check::exact(name, formula == direct, || spec_json(spec)),
        Err(e) => Check::failed(name, &e, spec_json(spec)),
    }
}

fn edge_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks: Vec<Check> = edge_fixture_specs().par_iter().map(|(name, spec)| edge_check(name.clone(), spec)).collect();
    checks.extend((0..opts.count).into_par_iter().map(|i| {
        let spec = random_edge_spec(&mut instance_rng(opts.seed, i), 7, 6);
        edge_check(format!("random #{i}"), &spec)
    }).collect::<Vec<_>>());
    checks
}

fn spanning_suite() -> Vec<Check> {
    edge_fixture_specs()
        .par_iter()
        .map(|(name, spec)| {
            let both = edge_pocket_charpoly_q(spec, CoronalRoute::Auto)
                .and_then(|a| Ok((a, spanning_edge_pocket_charpoly_q(spec, CoronalRoute::Auto)?)));
            match both {
                Ok((general, spanning)) => Check::exact(
                    name.clone(),
                    general.expanded == spanning.expanded && general.residual.determinant == spanning.residual.determinant,
                    || spec_json(spec),
                ),
                Err(e) => Check::failed(name.clone(), &e, spec_json(spec)),
            }
        })
        .collect()
}

fn join_suite(opts: &VerifyOptions, adjacency: bool) -> Result<Vec<Check>> {
    let pool = regular_catalog(7)?;
    Ok((0..opts.count)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(opts.seed, i);
            let (a, b) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
            let g1 = shuffled(&mut rng, &pool[a]);
            let g2 = shuffled(&mut rng, &pool[b]);
            let joined = g1.join(&g2);
            let result = if adjacency {
                join_charpoly_a(&g1, &g2).and_then(|f| Ok((f, charpoly_exact(&joined.adjacency_matrix())?)))
            } else {
                join_charpoly_q(&g1, &g2).and_then(|f| Ok((f, charpoly_exact(&joined.signless_laplacian())?)))
            };
            let instance = || json!({ "g1": g1.to_graph6(), "g2": g2.to_graph6() });
            match result {
                Ok((formula, direct)) => Check::exact(format!("join #{i}"), formula == direct, instance),
                Err(e) => Check::failed(format!("join #{i}"), &e, instance()),
            }
        })
        .collect())
}

/// Exact multiset equality when both sides are exact, numeric comparison otherwise.
fn compare_spectra(name: String, formula: &SpectrumMultiset, direct: &SpectrumMultiset, tol: f64, instance: Value) -> Check {
    if formula.is_exact() && direct.is_exact() {
        return Check::exact(name, formula == direct, || instance);
    }
    match spectra_match(formula, direct, tol) {
        Ok(outcome) => Check::numeric(name, outcome.max_deviation, tol, || instance),
        Err(e) => Check::failed(name, &e, instance),
    }
}

fn small_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let pool = regular_catalog(6)?;
    let k1 = Graph::empty(1);
    let k2 = named("K2")?;
    Ok(pool
        .par_iter()
        .flat_map_iter(|h| {
            let g6 = h.to_graph6();
            let direct = |g: &Graph, adjacency: bool| {
                let m = if adjacency { g.adjacency_matrix() } else { g.signless_laplacian() };
                SpectrumMultiset::from_charpoly(&charpoly_exact(&m)?)
            };
            let cases: [(&str, Result<SpectrumMultiset>, Result<SpectrumMultiset>); 3] = [
                ("A {v}+H", hv_spectrum_a(h), direct(&k1.join(h), true)),
                ("Q {v}+H", hv_spectrum_q(h), direct(&k1.join(h), false)),
                ("Q K2+H", huv_spectrum_q(h), direct(&k2.join(h), false)),
            ];
            cases
                .into_iter()
                .map(|(what, formula, direct)| {
                    let name = format!("{what} H={g6}");
                    let instance = json!({ "H": g6 });
                    match formula.and_then(|f| Ok((f, direct?))) {
                        Ok((f, d)) => compare_spectra(name, &f, &d, opts.tol, instance),
                        Err(e) => Check::failed(name, &e, instance),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect())
}

fn numeric_spectrum_check(name: String, formula: &SpectrumMultiset, g: &Graph, opts: &VerifyOptions, instance: Value) -> Check {
    let result = numeric(&g.signless_laplacian(), opts).and_then(|n| spectra_match(formula, &n, opts.tol));
    match result {
        Ok(outcome) => Check::numeric(name, outcome.max_deviation, opts.tol, || instance),
        Err(e) => Check::failed(name, &e, instance),
    }
}

fn trace_check(name: String, formula: &SpectrumMultiset, g: &Graph) -> Check {
    let trace = g.signless_laplacian().trace();
    let sum = formula.exact_sum();
    let passed = sum.as_ref().is_some_and(|s| s.is_integer() && s.to_integer() == trace);
    Check {
        name,
        passed,
        deviation: None,
        counterexample: None,
        note: Some(match sum {
            Some(s) => format!("sum {s}, trace {trace}"),
            None => format!("no exact sum, trace {trace}"),
        }),
    }
}

fn closed_form_checks(
    label: &str,
    params: Value,
    spec: Result<EdgePocketSpec>,
    formula: impl FnOnce(&EdgePocketSpec) -> Result<SpectrumMultiset>,
    opts: &VerifyOptions,
) -> Vec<Check> {
    let run = spec.and_then(|s| Ok((formula(&s)?, s)));
    match run {
        Ok((spectrum, spec)) => {
            let g = crate::pocket::build_edge_pockets(&spec);
            let mut checks = vec![numeric_spectrum_check(format!("{label} spectrum"), &spectrum, &g, opts, params)];
            if spectrum.is_exact() {
                checks.push(trace_check(format!("{label} trace"), &spectrum, &g));
            }
            checks
        }
        Err(e) => vec![Check::failed(label, &e, params)],
    }
}

fn matching_suite(opts: &VerifyOptions) -> Vec<Check> {
    let k = opts.n.unwrap_or(2);
    let m = opts.m.unwrap_or(5);
    let label = format!("matching k={k} m={m}");
    let params = json!({ "k": k, "m": m, "H": format!("K{m}") });
    let spec = named(&format!("K{}", 2 * k)).and_then(|f| {
        let ek = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        EdgePocketSpec::new(f, ek, named(&format!("K{m}"))?, (0, 1))
    });
    closed_form_checks(&label, params, spec, |s| matching_pocket_spectrum_q(k, m, m.saturating_sub(3), &huv_spectrum_q(&s.h2())?), opts)
}

fn cycle_suite(opts: &VerifyOptions) -> Vec<Check> {
    let n = opts.n.unwrap_or(3);
    let m = opts.m.unwrap_or(5);
    let label = format!("cycle n={n} m={m}");
    let params = json!({ "n": n, "m": m, "H": format!("K{m}") });
    let spec = named(&format!("K{n}")).and_then(|f| {
        let ek = (0..n).map(|i| (i, (i + 1) % n)).collect();
        EdgePocketSpec::new(f, ek, named(&format!("K{m}"))?, (0, 1))
    });
    closed_form_checks(&label, params, spec, |s| cycle_pocket_spectrum_q(n, m, m.saturating_sub(3), &huv_spectrum_q(&s.h2())?), opts)
}

/// `(name, F, attachment vertices or edges)` for the residual independence fixtures.
pub fn inherit_vertex_fixtures() -> Vec<(&'static str, Graph, Vec<usize>)> {
    let g = |s: &str| named(s).expect("literal");
    vec![("P3 ends", g("P3"), vec![0, 2]), ("C4 all", g("C4"), vec![0, 1, 2, 3]), ("K1,3 centre", g("K1,3"), vec![0])]
}

pub fn inherit_edge_fixtures() -> Vec<EdgeFixture> {
    let g = |s: &str| named(s).expect("literal");
    vec![
        ("K4 matching", g("K4"), vec![(0, 1), (2, 3)]),
        ("K3 cycle", g("K3"), vec![(0, 1), (1, 2), (2, 0)]),
        ("P4 middle edge", g("P4"), vec![(1, 2)]),
    ]
}

fn inherit_instance(kind: PocketKind, spec: PocketSpec, name: String, opts: &VerifyOptions) -> (Check, Option<crate::poly::IntPolynomial>) {
    let instance = spec_json(&spec);
    let run = inherited_spectrum(kind, &spec).and_then(|inh| {
        let g = spec.build();
        let m = if kind == PocketKind::AVertex { g.adjacency_matrix() } else { g.signless_laplacian() };
        Ok((inh, numeric(&m, opts)?))
    });
    match run {
        Ok((inh, numeric)) => {
            let short = inh
                .inherited
                .entries()
                .iter()
                .map(|e| (e, numeric.count_near(e.value.to_f64(), opts.tol.max(1e-7))))
                .find(|(e, seen)| *seen < e.multiplicity * inh.copies);
            let check = Check {
                name,
                passed: short.is_none(),
                deviation: None,
                counterexample: short.is_some().then_some(instance),
                note: short.map(|(e, seen)| format!("{} seen {seen} times", e.value)),
            };
            (check, Some(inh.residual_poly))
        }
        Err(e) => (Check::failed(name, &e, instance), None),
    }
}

fn inherit_suite(opts: &VerifyOptions) -> Vec<Check> {
    let kinds: Vec<PocketKind> = match opts.kind {
        Some(k) => vec![k],
        None => vec![PocketKind::AVertex, PocketKind::QVertex, PocketKind::QEdge],
    };
    let remainders = [("C6", named("C6").expect("C6")), ("2K3", named("K3|K3").expect("2K3"))];
    let mut jobs: Vec<(PocketKind, String, Vec<NamedSpec>)> = Vec::new();
    for kind in kinds {
        if kind == PocketKind::QEdge {
            for (fname, f, ek) in inherit_edge_fixtures() {
                let specs = remainders
                    .iter()
                    .map(|(h, r)| (format!("{kind} {fname} H2={h}"), EdgePocketSpec::with_k2(f.clone(), ek.clone(), r).map(PocketSpec::Edge)))
                    .collect();
                jobs.push((kind, fname.to_string(), specs));
            }
        } else {
            for (fname, f, vk) in inherit_vertex_fixtures() {
                let specs = remainders
                    .iter()
                    .map(|(h, r)| (format!("{kind} {fname} H1={h}"), VertexPocketSpec::with_apex(f.clone(), vk.clone(), r).map(PocketSpec::Vertex)))
                    .collect();
                jobs.push((kind, fname.to_string(), specs));
            }
        }
    }
    jobs.into_par_iter()
        .flat_map_iter(|(kind, fname, specs)| {
            let mut checks = Vec::new();
            let mut residuals = Vec::new();
            for (name, spec) in specs {
                match spec {
                    Ok(spec) => {
                        let (check, poly) = inherit_instance(kind, spec, name, opts);
                        checks.push(check);
                        residuals.push(poly);
                    }
                    Err(e) => {
                        checks.push(Check::failed(name, &e, Value::Null));
                        residuals.push(None);
                    }
                }
            }
            let same = residuals[0].is_some() && residuals.windows(2).all(|w| w[0] == w[1]);
            checks.push(Check::exact(format!("{kind} {fname} residual C6 = 2K3"), same, || {
                json!({ "residuals": residuals.iter().map(|r| r.as_ref().map(|p| p.to_string())).collect::<Vec<_>>() })
            }));
            checks
        })
        .collect()
}

/// `(p, q)` remainders `C_p □ K_q` used by the eigenvector suite.
pub const EIGVEC_REMAINDERS: [(usize, usize); 3] = [(3, 1), (4, 2), (3, 2)];

fn eigvec_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut jobs = Vec::new();
    for (p, q) in EIGVEC_REMAINDERS {
        let r = named(&format!("C{p}#K{q}")).expect("literal");
        let vertex = VertexPocketSpec::with_apex(named("K3").expect("K3"), vec![0, 1, 2], &r).map(PocketSpec::Vertex);
        let c4 = named("C4").expect("C4");
        let edge = EdgePocketSpec::with_k2(c4.clone(), c4.edges(), &r).map(PocketSpec::Edge);
        for (kind, spec) in [(CertificateKind::A, &vertex), (CertificateKind::QVertex, &vertex), (CertificateKind::QEdge, &edge)] {
            for s in 1..=p {
                for t in 1..=q {
                    if (s, t) != (p, q) {
                        jobs.push((p, q, kind, spec.clone(), s, t));
                    }
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(p, q, kind, spec, s, t)| {
            let name = format!("{kind:?} C{p}#K{q} (s={s}, t={t})");
            let instance = json!({ "p": p, "q": q, "s": s, "t": t });
            let run = spec.and_then(|spec| {
                let certs = pocket_eigenvector_certificates(kind, &spec, p, s, t)?;
                Ok((check_certificates(&spec.build(), &certs, opts.tol)?, certs.len()))
            });
            match run {
                Ok((c, k)) => {
                    let mut check = Check::numeric(name, c.max_residual, opts.tol, || instance.clone());
                    if c.rank != k {
                        check.passed = false;
                        check.note = Some(format!("rank {} of {k}", c.rank));
                        check.counterexample = Some(instance);
                    }
                    check
                }
                Err(e) => Check::failed(name, &e, instance),
            }
        })
        .collect()
}

/// Run one suite. Instances are generated from `opts.seed` and merged in index order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::VertexA => vertex_suite(opts, PocketKind::AVertex),
        Suite::VertexQ => vertex_suite(opts, PocketKind::QVertex),
        Suite::EdgeQ => edge_suite(opts),
        Suite::EdgeSpanning => spanning_suite(),
        Suite::JoinA => join_suite(opts, true)?,
        Suite::JoinQ => join_suite(opts, false)?,
        Suite::Matching => matching_suite(opts),
        Suite::Cycle => cycle_suite(opts),
        Suite::Small => small_suite(opts)?,
        Suite::Inherit => inherit_suite(opts),
        Suite::Eigvec => eigvec_suite(opts),
    })
}

/// [`run_suite`] wrapped in a report.
pub fn verify_report(suite: Suite, opts: &VerifyOptions, timing: bool) -> Result<RunReport> {
    let start = Instant::now();
    let checks = run_suite(suite, opts)?;
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(RunReport {
        command: format!("verify {suite}"),
        inputs: serde_json::to_value(opts).unwrap_or(Value::Null),
        outputs: json!({ "instances": checks.len(), "passed": passed }),
        checks,
        wall_time_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(count: usize) -> VerifyOptions {
        VerifyOptions { seed: 3, count, ..VerifyOptions::default() }
    }

    #[test]
    fn every_suite_passes_small() {
        for suite in Suite::ALL {
            let checks = run_suite(suite, &quick(4)).unwrap();
            assert!(!checks.is_empty(), "{suite}");
            for c in &checks {
                assert!(c.passed, "{suite}: {c:?}");
            }
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let a = verify_report(Suite::VertexQ, &quick(6), false).unwrap();
        let b = verify_report(Suite::VertexQ, &quick(6), false).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("prop".parse::<Suite>().is_err());
    }

    #[test]
    fn random_specs_satisfy_preconditions() {
        let mut rng = instance_rng(11, 0);
        for _ in 0..30 {
            let v = random_vertex_spec(&mut rng, 7, 6);
            assert!(v.validate().specified_degree_full);
            let e = random_edge_spec(&mut rng, 7, 6);
            assert!(e.validate().specified_degree_full && e.validate().ek_regular.is_some());
        }
    }
}
