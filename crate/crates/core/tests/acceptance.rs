//! One pass/fail line per acceptance criterion. Runs without the libtest harness
//! so the lines always reach stdout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use pocket_spectra::catalog::{catalog, catalog_text, named, regular_catalog, rook, shrikhande};
use pocket_spectra::charpoly::{coronal, coronal_constant_row_sum};
use pocket_spectra::cospectral::{
    make_cospectral_edge_pocket_pair, make_cospectral_vertex_pocket_pair, search_cospectral_mates, verify_cospectral,
    CospectralCertificate, MatrixKind,
};
use pocket_spectra::eigen::{eig_sym, spectra_match};
use pocket_spectra::formulas::{cycle_pocket_spectrum_q, huv_spectrum_q, matching_pocket_spectrum_q};
use pocket_spectra::graph::{are_isomorphic, NonIsomorphismWitness};
use pocket_spectra::pocket::{build_edge_pockets, EdgePocketSpec};
use pocket_spectra::verify::{run_suite, Check, Suite, VerifyOptions};
use pocket_spectra::{Eigenvalue, Graph, IntPolynomial, RationalFunction, SpectrumMultiset};

const TOL: f64 = 1e-9;
const SEED: u64 = 20;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn suite(suite: Suite, count: usize) -> std::result::Result<Vec<Check>, String> {
    let opts = VerifyOptions { seed: SEED, count, tol: TOL, ..VerifyOptions::default() };
    run_suite(suite, &opts).map_err(|e| e.to_string())
}

fn all_pass(checks: &[Check]) -> Verdict {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    match failed.first() {
        None => Ok(format!("{}/{} passed", checks.len(), checks.len())),
        Some(c) => Err(format!(
            "{}/{} passed; first failure {}: {}",
            checks.len() - failed.len(),
            checks.len(),
            c.name,
            c.note.clone().unwrap_or_default()
        )),
    }
}

fn within(elapsed: Duration, budget: Duration, verdict: Verdict) -> Verdict {
    let v = verdict?;
    if elapsed > budget {
        return Err(format!("{v}, but took {:.1} s (budget {:.0} s)", elapsed.as_secs_f64(), budget.as_secs_f64()));
    }
    Ok(v)
}

fn vertex_a() -> Verdict {
    let start = Instant::now();
    let checks = suite(Suite::VertexA, 50)?;
    within(start.elapsed(), Duration::from_secs(60), all_pass(&checks))
}

fn vertex_q() -> Verdict {
    all_pass(&suite(Suite::VertexQ, 50)?)
}

fn edge_fixtures() -> Verdict {
    let general = suite(Suite::EdgeQ, 0)?;
    let spanning = suite(Suite::EdgeSpanning, 0)?;
    if general.len() != 10 || spanning.len() != 10 {
        return Err(format!("expected 10 fixtures, got {} and {}", general.len(), spanning.len()));
    }
    all_pass(&general)?;
    all_pass(&spanning)?;
    Ok("10/10 exact, spanning form bit-identical on 10/10".into())
}

fn joins() -> Verdict {
    let a = all_pass(&suite(Suite::JoinA, 20)?)?;
    let q = all_pass(&suite(Suite::JoinQ, 20)?)?;
    Ok(format!("A {a}, Q {q}"))
}

fn small_pockets() -> Verdict {
    let checks = suite(Suite::Small, 0)?;
    let pool = regular_catalog(6).map_err(|e| e.to_string())?;
    if checks.len() != 3 * pool.len() {
        return Err(format!("{} checks for {} regular graphs", checks.len(), pool.len()));
    }
    let worst = checks.iter().filter_map(|c| c.deviation).fold(0.0, f64::max);
    all_pass(&checks).map(|v| format!("{v} over {} regular graphs, worst numeric deviation {worst:.1e}", pool.len()))
}

fn k(n: usize) -> Graph {
    named(&format!("K{n}")).expect("complete graph")
}

fn numeric_q(g: &Graph) -> std::result::Result<pocket_spectra::NumericSpectrum, String> {
    eig_sym(&g.signless_laplacian().to_f64()).map_err(|e| e.to_string())
}

fn exact_integer_sum(s: &SpectrumMultiset) -> Option<BigInt> {
    s.exact_sum().filter(BigRational::is_integer).map(|r| r.to_integer())
}

fn closed_form_report(
    expected: &SpectrumMultiset,
    formula: &SpectrumMultiset,
    g: &Graph,
    sum: i64,
    budget: Option<(Instant, Duration)>,
) -> Verdict {
    if formula != expected {
        return Err(format!("closed form {formula} differs from {expected}"));
    }
    let numeric = numeric_q(g)?;
    let m = spectra_match(formula, &numeric, TOL).map_err(|e| e.to_string())?;
    if !m.matched {
        return Err(format!("numeric deviation {:.2e}", m.max_deviation));
    }
    let trace = g.signless_laplacian().trace();
    if exact_integer_sum(formula) != Some(BigInt::from(sum)) || trace != BigInt::from(sum) {
        return Err(format!("sum {:?}, trace {trace}, expected {sum}", formula.exact_sum()));
    }
    let verdict = Ok(format!("{formula}, deviation {:.1e}, sum = trace = {sum}", m.max_deviation));
    match budget {
        Some((start, limit)) => within(start.elapsed(), limit, verdict),
        None => verdict,
    }
}

fn matching_instance() -> Verdict {
    let start = Instant::now();
    let spec = EdgePocketSpec::new(k(4), vec![(0, 1), (2, 3)], k(5), (0, 1)).map_err(|e| e.to_string())?;
    let huv = huv_spectrum_q(&spec.h2()).map_err(|e| e.to_string())?;
    let formula = matching_pocket_spectrum_q(2, 5, 2, &huv).map_err(|e| e.to_string())?;
    let mut expected = SpectrumMultiset::new();
    expected.insert(Eigenvalue::int(3), 5);
    expected.insert(Eigenvalue::int(5), 2);
    expected.insert(Eigenvalue::int(8), 1);
    for e in Eigenvalue::quadratic_pair(1, -15, 48).map_err(|e| e.to_string())? {
        expected.insert(e, 1);
    }
    let g = build_edge_pockets(&spec);
    closed_form_report(&expected, &formula, &g, 48, Some((start, Duration::from_secs(1))))
}

fn cycle_instance() -> Verdict {
    let spec = EdgePocketSpec::new(k(3), vec![(0, 1), (1, 2), (2, 0)], k(5), (0, 1)).map_err(|e| e.to_string())?;
    let huv = huv_spectrum_q(&spec.h2()).map_err(|e| e.to_string())?;
    let formula = cycle_pocket_spectrum_q(3, 5, 2, &huv).map_err(|e| e.to_string())?;
    let mut expected = SpectrumMultiset::new();
    expected.insert(Eigenvalue::int(3), 6);
    expected.insert(Eigenvalue::int(4), 1);
    expected.insert(Eigenvalue::int(12), 1);
    for e in Eigenvalue::quadratic_pair(1, -13, 39).map_err(|e| e.to_string())? {
        expected.insert(e, 2);
    }
    closed_form_report(&expected, &formula, &build_edge_pockets(&spec), 60, None)
}

fn residual_independence() -> Verdict {
    let checks = suite(Suite::Inherit, 0)?;
    let pairs = checks.iter().filter(|c| c.name.contains("residual")).count();
    if pairs != 9 {
        return Err(format!("expected 9 fixture comparisons, got {pairs}"));
    }
    all_pass(&checks).map(|v| format!("{v}: 3 fixtures per pocket kind, C6 and 2K3 residuals identical"))
}

fn recheck(c: &CospectralCertificate) -> std::result::Result<(), String> {
    match c.recheck() {
        Ok(true) => Ok(()),
        Ok(false) => Err("certificate failed to re-verify".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn seed_pairs() -> Verdict {
    let start = Instant::now();
    let (s, r) = (shrikhande(), rook());
    for kind in [MatrixKind::A, MatrixKind::Q] {
        let v = verify_cospectral(&s, &r, kind).map_err(|e| e.to_string())?;
        let c = v.certificate().ok_or(format!("seeds not certified {kind}-cospectral"))?;
        if c.nonisomorphic_witness != NonIsomorphismWitness::RefinementDistinguisher {
            return Err(format!("seed witness {:?}", c.nonisomorphic_witness));
        }
    }
    let p4 = named("P4").map_err(|e| e.to_string())?;
    let mut orders = Vec::new();
    for kind in [MatrixKind::A, MatrixKind::Q] {
        let (g1, _, c) = make_cospectral_vertex_pocket_pair(&p4, &[0, 1], &s, &r, kind).map_err(|e| e.to_string())?;
        recheck(&c)?;
        orders.push(g1.order());
    }
    let (g1, _, c) = make_cospectral_edge_pocket_pair(&k(4), &[(0, 1), (2, 3)], &s, &r).map_err(|e| e.to_string())?;
    recheck(&c)?;
    orders.push(g1.order());
    if orders != [36, 36, 36] {
        return Err(format!("unexpected pair orders {orders:?}"));
    }
    within(
        start.elapsed(),
        Duration::from_secs(120),
        Ok("seeds A- and Q-cospectral (refinement witness); P4 vertex pairs (A, Q) and K4 matching edge pair certified".into()),
    )
}

fn eigenvectors() -> Verdict {
    let checks = suite(Suite::Eigvec, 0)?;
    let worst = checks.iter().filter_map(|c| c.deviation).fold(0.0, f64::max);
    all_pass(&checks).map(|v| format!("{v}, worst residual {worst:.1e}, full rank"))
}

/// Every labelled `r`-regular graph on `n` vertices, reduced up to isomorphism.
fn regular_graphs(n: usize, r: usize) -> Vec<Graph> {
    fn extend(g: &mut Graph, n: usize, r: usize, v: usize, from: usize, out: &mut Vec<Graph>) {
        if v == n {
            if !out.iter().any(|h| are_isomorphic(g, h).expect("small order").is_isomorphic()) {
                out.push(g.clone());
            }
            return;
        }
        if g.degree(v) == r {
            return extend(g, n, r, v + 1, v + 2, out);
        }
        for w in from..n {
            if g.degree(w) < r {
                g.add_edge(v, w).expect("new edge");
                extend(g, n, r, v, w + 1, out);
                *g = without_edge(g, v, w);
            }
        }
    }
    fn without_edge(g: &Graph, a: usize, b: usize) -> Graph {
        let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (a.min(b), a.max(b))).collect();
        Graph::from_edges(g.order(), &edges).expect("valid edges")
    }
    let mut out = Vec::new();
    extend(&mut Graph::empty(n), n, r, 0, 1, &mut out);
    out
}

fn coronals() -> Verdict {
    let p3 = named("P3").map_err(|e| e.to_string())?;
    let expected = RationalFunction::new(IntPolynomial::from_i64(&[4, 3]), IntPolynomial::from_i64(&[-2, 0, 1]));
    let got = coronal(&p3.adjacency_matrix()).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("coronal of A(P3) is {got}"));
    }
    let mut pool = regular_catalog(7).map_err(|e| e.to_string())?;
    let order8: Vec<Graph> = (0..8).flat_map(|r| regular_graphs(8, r)).collect();
    if order8.len() != 22 {
        return Err(format!("enumerated {} regular graphs of order 8, expected 22", order8.len()));
    }
    pool.extend(order8);
    for g in &pool {
        let r = g.regularity().expect("regular");
        for (m, t) in [(g.adjacency_matrix(), r), (g.signless_laplacian(), 2 * r)] {
            let general = coronal(&m).map_err(|e| e.to_string())?;
            let shortcut = coronal_constant_row_sum(g.order(), BigInt::from(t)).map_err(|e| e.to_string())?;
            if general != shortcut {
                return Err(format!("coronal mismatch on {g}: {general} vs {shortcut}"));
            }
        }
    }
    Ok(format!("A(P3) gives {got}; n/(x - t) on {} regular graphs of order <= 8, both matrices", pool.len()))
}

fn search_fixture() -> Verdict {
    let fixture = include_str!("fixtures/search_regressions.txt");
    let expected: Vec<Vec<&str>> = fixture
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .filter(|f| f[0] == "A" && f[1] == "5")
        .collect();
    let text = catalog_text(5).map_err(|e| e.to_string())?;
    let report = search_cospectral_mates(text, MatrixKind::A, false).map_err(|e| e.to_string())?;
    if report.graphs_read != 34 || catalog(5).map_err(|e| e.to_string())?.len() != 34 {
        return Err(format!("read {} graphs", report.graphs_read));
    }
    let got: Vec<String> = report
        .hits
        .iter()
        .map(|h| {
            let w = serde_json::to_value(h.certificate.nonisomorphic_witness).expect("witness");
            format!("{} {} {} {} {}", h.lines.0, h.lines.1, h.certificate.g1, h.certificate.g2, w.as_str().unwrap_or(""))
        })
        .collect();
    let want: Vec<String> = expected.iter().map(|f| f[2..].join(" ")).collect();
    if got != want {
        return Err(format!("search emitted {got:?}, fixture records {want:?}"));
    }
    let star = named("K1,4").map_err(|e| e.to_string())?;
    let square = named("C4|E1").map_err(|e| e.to_string())?;
    let c = &report.hits[0].certificate;
    let iso = |a: &Graph, b: &Graph| are_isomorphic(a, b).map(|o| o.is_isomorphic()).unwrap_or(false);
    let matches = (iso(&c.g1, &star) && iso(&c.g2, &square)) || (iso(&c.g1, &square) && iso(&c.g2, &star));
    if !matches {
        return Err("fixture pair is not K1,4 / C4+K1".into());
    }
    recheck(c)?;
    Ok(format!("{} certificate(s) as recorded, including K1,4 / C4 ∪ K1", got.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("vertex pockets, adjacency factorisation on 50 seeded specs", vertex_a),
        ("vertex pockets, signless Laplacian factorisation on 50 seeded specs", vertex_q),
        ("edge pockets, general and spanning forms on fixtures", edge_fixtures),
        ("join formulas on 20 seeded regular pairs", joins),
        ("small pocket spectra over the regular catalog", small_pockets),
        ("matching closed form on K4 with K5 pockets", matching_instance),
        ("cycle closed form on K3 with K5 pockets", cycle_instance),
        ("residual independence of the pocket remainder", residual_independence),
        ("cospectral pairs from Shrikhande and rook seeds", seed_pairs),
        ("eigenvector certificates", eigenvectors),
        ("coronal unit checks", coronals),
        ("order-5 adjacency cospectral search regression", search_fixture),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail} ({secs:.2} s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {title}: {detail} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
