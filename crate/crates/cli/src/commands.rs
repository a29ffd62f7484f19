use std::io::Read;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use pocket_spectra::catalog::parse_graph;
use pocket_spectra::cospectral::{
    make_cospectral_edge_pocket_pair, make_cospectral_vertex_pocket_pair, search_cospectral_mates, verify_cospectral,
    CospectralVerdict,
};
use pocket_spectra::eigen::{eig_sym_with, JacobiOptions};
use pocket_spectra::formulas::{edge_pocket_charpoly_q, pocket_charpoly_a, pocket_charpoly_q, spanning_edge_pocket_charpoly_q};
use pocket_spectra::graph::parse_edge_list;
use pocket_spectra::pocket::{corona, edge_corona};
use pocket_spectra::verify::{verify_report, VerifyOptions};
use pocket_spectra::{
    charpoly_exact, Check, EdgePocketSpec, Error, FactoredCharpoly, Graph, MatrixKind, PocketSpec, Result, RunReport,
    SpectrumMultiset, VertexPocketSpec,
};

use crate::args::{
    BuildArgs, CharpolyArgs, CospectralCommand, Matrix, PocketArgs, SpectrumArgs, Via, VerifyArgs,
};

pub enum Output {
    Report(RunReport),
    Text(String),
}

/// What a command produced and whether it found a mathematical mismatch.
pub struct Outcome {
    pub output: Output,
    pub mismatch: bool,
}

impl Outcome {
    fn report(report: RunReport) -> Outcome {
        let mismatch = !report.passed();
        Outcome { output: Output::Report(report), mismatch }
    }
}

struct Timer(Instant);

impl Timer {
    fn start() -> Timer {
        Timer(Instant::now())
    }

    fn report(&self, timing: bool, command: &str, inputs: Value, outputs: Value, checks: Vec<Check>) -> RunReport {
        RunReport {
            command: command.to_string(),
            inputs,
            outputs,
            checks,
            wall_time_ms: timing.then(|| self.0.elapsed().as_millis() as u64),
        }
    }
}

fn check(name: &str, passed: bool, note: Option<String>) -> Check {
    Check { name: name.to_string(), passed, deviation: None, counterexample: None, note }
}

fn first_graph6_line(text: &str) -> Option<&str> {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('>'))
}

/// A named literal, a graph6 string, or a file whose first line is graph6.
pub fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))?;
        let line = first_graph6_line(&text).ok_or_else(|| Error::InvalidInput(format!("{arg} holds no graph")))?;
        return Graph::from_graph6(line);
    }
    parse_graph(arg)
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::InvalidInput(format!("`{t}` is not a vertex index"))))
        .collect()
}

fn parse_edge(text: &str) -> Result<(usize, usize)> {
    match parse_edge_list(text)?.as_slice() {
        [e] => Ok(*e),
        _ => Err(Error::InvalidInput(format!("`{text}` is not a single edge"))),
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str> {
    value.as_deref().ok_or_else(|| Error::InvalidInput(format!("missing {flag}")))
}

/// Resolve the pocket flags, if any were given.
fn pocket_spec(p: &PocketArgs) -> Result<Option<PocketSpec>> {
    if let Some(path) = &p.spec {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        return serde_json::from_str(&text).map(Some).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())));
    }
    let vertex = p.vk.is_some() || p.v.is_some();
    let edge = p.ek.is_some() || p.uv.is_some() || p.flip.is_some();
    if vertex && edge {
        return Err(Error::InvalidInput("vertex-pocket and edge-pocket flags are mixed".into()));
    }
    if !vertex && !edge {
        return Ok(None);
    }
    let f = load_graph(required(&p.f, "-F")?)?;
    let h = load_graph(required(&p.h, "-H")?)?;
    if vertex {
        let vk = parse_list(required(&p.vk, "-Vk")?)?;
        return VertexPocketSpec::new(f, vk, h, p.v.unwrap_or(0)).map(|s| Some(PocketSpec::Vertex(s)));
    }
    let ek = parse_edge_list(required(&p.ek, "-Ek")?)?;
    let uv = p.uv.as_deref().map(parse_edge).transpose()?.unwrap_or((0, 1));
    let mut flips = vec![false; ek.len()];
    for i in parse_list(p.flip.as_deref().unwrap_or(""))? {
        *flips.get_mut(i).ok_or_else(|| Error::InvalidInput(format!("flip index {i} out of range")))? = true;
    }
    EdgePocketSpec::with_flips(f, ek, h, uv, flips).map(|s| Some(PocketSpec::Edge(s)))
}

fn spec_inputs(spec: &PocketSpec) -> Value {
    serde_json::to_value(spec).unwrap_or(Value::Null)
}

pub fn build(args: &BuildArgs, timing: bool) -> Result<Outcome> {
    let timer = Timer::start();
    let host_and_pocket = || -> Result<(Graph, Graph)> {
        Ok((load_graph(required(&args.pocket.f, "-F")?)?, load_graph(required(&args.pocket.h, "-H")?)?))
    };
    let (graph, inputs) = if args.corona || args.edge_corona {
        let (f, h) = host_and_pocket()?;
        let g = if args.corona { corona(&f, &h)? } else { edge_corona(&f, &h)? };
        let mode = if args.corona { "corona" } else { "edge-corona" };
        (g, json!({ "mode": mode, "F": f.to_graph6(), "H": h.to_graph6() }))
    } else {
        let spec = pocket_spec(&args.pocket)?
            .ok_or_else(|| Error::InvalidInput("give -Vk/-v or -Ek/-uv, or --spec".into()))?;
        match (&spec, args.vertex_pockets, args.edge_pockets) {
            (PocketSpec::Edge(_), true, _) => return Err(Error::InvalidInput("--vertex-pockets needs -Vk".into())),
            (PocketSpec::Vertex(_), _, true) => return Err(Error::InvalidInput("--edge-pockets needs -Ek".into())),
            _ => {}
        }
        (spec.build(), spec_inputs(&spec))
    };
    if args.graph6_only {
        return Ok(Outcome { output: Output::Text(graph.to_graph6()), mismatch: false });
    }
    let outputs = json!({
        "graph6": graph.to_graph6(),
        "order": graph.order(),
        "size": graph.edge_count(),
        "degree_sequence": graph.degree_sequence(),
    });
    Ok(Outcome::report(timer.report(timing, "build", inputs, outputs, Vec::new())))
}

fn direct_charpoly(g: &Graph, matrix: Matrix) -> Result<pocket_spectra::IntPolynomial> {
    match matrix {
        Matrix::A => charpoly_exact(&g.adjacency_matrix()),
        Matrix::Q => charpoly_exact(&g.signless_laplacian()),
    }
}

fn formula_charpoly(spec: &PocketSpec, args: &CharpolyArgs) -> Result<FactoredCharpoly> {
    let route = args.coronal.into();
    match (spec, args.matrix) {
        (PocketSpec::Vertex(s), Matrix::A) => pocket_charpoly_a(s, route),
        (PocketSpec::Vertex(s), Matrix::Q) => pocket_charpoly_q(s, route),
        (PocketSpec::Edge(s), Matrix::Q) if args.spanning => spanning_edge_pocket_charpoly_q(s, route),
        (PocketSpec::Edge(s), Matrix::Q) => edge_pocket_charpoly_q(s, route),
        (PocketSpec::Edge(_), Matrix::A) => Err(Error::PreconditionViolation(
            "edge-pockets have a signless Laplacian factorisation only; use --matrix Q".into(),
        )),
    }
}

pub fn charpoly(args: &CharpolyArgs, timing: bool) -> Result<Outcome> {
    let timer = Timer::start();
    let spec = pocket_spec(&args.pocket)?;
    let graph = match (&args.graph, &spec) {
        (Some(_), Some(_)) => return Err(Error::InvalidInput("give either a graph or a pocket spec, not both".into())),
        (Some(g), None) => load_graph(g)?,
        (None, Some(s)) => s.build(),
        (None, None) => return Err(Error::InvalidInput("no graph or pocket spec given".into())),
    };
    let matrix = format!("{:?}", args.matrix);
    let mut inputs = json!({ "graph6": graph.to_graph6(), "matrix": matrix, "via": format!("{:?}", args.via).to_lowercase() });
    if let Some(s) = &spec {
        inputs["spec"] = spec_inputs(s);
    }
    let factored = match (args.via, &spec) {
        (Via::Direct, _) => None,
        (_, Some(s)) => Some(formula_charpoly(s, args)?),
        (_, None) => {
            return Err(Error::InvalidInput("the formula route needs a pocket spec, not a bare graph".into()))
        }
    };
    let direct = (args.via != Via::Formula).then(|| direct_charpoly(&graph, args.matrix)).transpose()?;
    let mut outputs = json!({});
    let mut checks = Vec::new();
    if let Some(d) = &direct {
        outputs["charpoly"] = json!(d);
        outputs["display"] = json!(d.to_string());
    }
    if let Some(f) = &factored {
        outputs["formula"] = json!(f.expanded);
        outputs["factored"] = serde_json::to_value(f).unwrap_or(Value::Null);
        if direct.is_none() {
            outputs["charpoly"] = json!(f.expanded);
            outputs["display"] = json!(f.expanded.to_string());
        }
    }
    if let (Some(d), Some(f)) = (&direct, &factored) {
        checks.push(check("formula equals direct", *d == f.expanded, None));
    }
    Ok(Outcome::report(timer.report(timing, "charpoly", inputs, outputs, checks)))
}

pub fn spectrum(args: &SpectrumArgs, timing: bool) -> Result<Outcome> {
    let timer = Timer::start();
    let g = load_graph(&args.graph)?;
    let m = match args.matrix {
        Matrix::A => g.adjacency_matrix(),
        Matrix::Q => g.signless_laplacian(),
    };
    let jacobi = JacobiOptions { max_sweeps: args.numeric.max_sweeps, ..JacobiOptions::default() };
    let numeric = eig_sym_with(&m.to_f64(), jacobi)?;
    if args.csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let table = w.write_record(["index", "eigenvalue"]).and_then(|_| {
            numeric.values.iter().enumerate().try_for_each(|(i, v)| w.write_record([i.to_string(), format!("{v:.12}")]))
        });
        table.map_err(|e| Error::Internal(e.to_string()))?;
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        let text = String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))?;
        return Ok(Outcome { output: Output::Text(text.trim_end().to_string()), mismatch: false });
    }
    let exact = SpectrumMultiset::from_charpoly(&charpoly_exact(&m)?)?;
    let agreement = pocket_spectra::eigen::spectra_match(&exact, &pocket_spectra::NumericSpectrum::from_values(numeric.values.clone()), args.numeric.tol)?;
    let outputs = json!({ "exact": exact.to_string(), "numeric": numeric.values, "sweeps": numeric.sweeps });
    let checks = vec![Check {
        name: "exact and numeric spectra agree".into(),
        passed: agreement.matched,
        deviation: Some(agreement.max_deviation),
        counterexample: None,
        note: None,
    }];
    let inputs = json!({ "graph6": g.to_graph6(), "matrix": format!("{:?}", args.matrix), "tol": args.numeric.tol });
    Ok(Outcome::report(timer.report(timing, "spectrum", inputs, outputs, checks)))
}

pub fn verify(args: &VerifyArgs, timing: bool) -> Result<Outcome> {
    let opts = VerifyOptions {
        seed: args.seed,
        count: args.count,
        tol: args.numeric.tol,
        max_sweeps: args.numeric.max_sweeps,
        n: args.n,
        m: args.m,
        kind: args.kind.map(Into::into),
    };
    Ok(Outcome::report(verify_report(args.suite.into(), &opts, timing)?))
}

/// Split `a,b` into two graphs, allowing commas inside literals such as `K2,3`.
fn seed_pair(text: &str) -> Result<(Graph, Graph)> {
    text.match_indices(',')
        .find_map(|(i, _)| Some((load_graph(&text[..i]).ok()?, load_graph(&text[i + 1..]).ok()?)))
        .ok_or_else(|| Error::InvalidInput(format!("`{text}` is not a pair of graphs")))
}

pub fn cospectral(cmd: &CospectralCommand, timing: bool) -> Result<Outcome> {
    let timer = Timer::start();
    match cmd {
        CospectralCommand::Check { g1, g2, kind } => {
            let (a, b) = (load_graph(g1)?, load_graph(g2)?);
            let verdict = verify_cospectral(&a, &b, MatrixKind::from(*kind))?;
            let note = match &verdict {
                CospectralVerdict::Certified(c) => Some(format!("witness: {:?}", c.nonisomorphic_witness)),
                CospectralVerdict::Isomorphic { .. } => Some("graphs are isomorphic".into()),
                CospectralVerdict::Mismatch(m) => m.first_difference.map(|i| format!("first differing coefficient: x^{i}")),
            };
            let certified = matches!(verdict, CospectralVerdict::Certified(_));
            let inputs = json!({ "g1": a.to_graph6(), "g2": b.to_graph6(), "kind": format!("{kind:?}") });
            let outputs = serde_json::to_value(&verdict).unwrap_or(Value::Null);
            let checks = vec![check("cospectral, non-isomorphic pair", certified, note)];
            Ok(Outcome::report(timer.report(timing, "cospectral check", inputs, outputs, checks)))
        }
        CospectralCommand::Construct { seeds, f, vk, ek, kind } => {
            let (s1, s2) = seed_pair(seeds)?;
            let host = load_graph(f)?;
            let (g1, g2, cert) = match (vk, ek) {
                (Some(vk), None) => make_cospectral_vertex_pocket_pair(&host, &parse_list(vk)?, &s1, &s2, (*kind).into())?,
                (None, Some(ek)) => {
                    if *kind != Matrix::Q {
                        return Err(Error::PreconditionViolation("edge-pocket pairs are certified for Q only".into()));
                    }
                    make_cospectral_edge_pocket_pair(&host, &parse_edge_list(ek)?, &s1, &s2)?
                }
                _ => return Err(Error::InvalidInput("give exactly one of -Vk and -Ek".into())),
            };
            let recheck = cert.recheck()?;
            let inputs = json!({ "seeds": [s1.to_graph6(), s2.to_graph6()], "F": host.to_graph6(), "Vk": vk, "Ek": ek, "kind": format!("{kind:?}") });
            let outputs = json!({ "g1": g1.to_graph6(), "g2": g2.to_graph6(), "certificate": cert });
            let checks = vec![check("certificate re-verifies", recheck, None)];
            Ok(Outcome::report(timer.report(timing, "cospectral construct", inputs, outputs, checks)))
        }
        CospectralCommand::Search { input, kind, regular } => {
            let text = if input == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(input).map_err(|e| Error::InvalidInput(format!("{input}: {e}")))?
            };
            let report = search_cospectral_mates(&text, (*kind).into(), *regular)?;
            let inputs = json!({ "in": input, "kind": format!("{kind:?}"), "regular": regular });
            let outputs = serde_json::to_value(&report).unwrap_or(Value::Null);
            Ok(Outcome::report(timer.report(timing, "cospectral search", inputs, outputs, Vec::new())))
        }
    }
}
