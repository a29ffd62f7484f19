use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pocket_spectra::catalog::{catalog_text, named};
use pocket_spectra::charpoly::{charpoly_exact, coronal};
use pocket_spectra::cospectral::search_cospectral_mates;
use pocket_spectra::eigen::eig_sym;
use pocket_spectra::formulas::{edge_pocket_charpoly_q, pocket_charpoly_q};
use pocket_spectra::pocket::build_vertex_pockets;
use pocket_spectra::{CoronalRoute, EdgePocketSpec, MatrixKind, VertexPocketSpec};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly_exact");
    for name in ["C6#K2", "rook", "shrikhande#K2"] {
        let q = named(name).unwrap().signless_laplacian();
        group.bench_with_input(BenchmarkId::from_parameter(name), &q, |b, q| b.iter(|| charpoly_exact(black_box(q)).unwrap()));
    }
    group.finish();

    let q = named("P3#C4").unwrap().signless_laplacian();
    c.bench_function("coronal/P3#C4", |b| b.iter(|| coronal(black_box(&q)).unwrap()));
}

fn formulas(c: &mut Criterion) {
    let spec = VertexPocketSpec::new(named("C5").unwrap(), vec![0, 2, 4], named("K2+C4").unwrap(), 0).unwrap();
    let mut group = c.benchmark_group("vertex_pockets_q");
    group.bench_function("formula", |b| b.iter(|| pocket_charpoly_q(black_box(&spec), CoronalRoute::Auto).unwrap()));
    group.bench_function("direct", |b| {
        b.iter(|| charpoly_exact(&build_vertex_pockets(black_box(&spec)).signless_laplacian()).unwrap())
    });
    group.finish();

    let spec = EdgePocketSpec::new(named("K4").unwrap(), vec![(0, 1), (2, 3)], named("K5").unwrap(), (0, 1)).unwrap();
    c.bench_function("edge_pockets_q/formula", |b| {
        b.iter(|| edge_pocket_charpoly_q(black_box(&spec), CoronalRoute::Auto).unwrap())
    });
}

fn numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("eig_sym");
    for name in ["C12", "rook", "rook#K2"] {
        let a = named(name).unwrap().adjacency_matrix().to_f64();
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| b.iter(|| eig_sym(black_box(a)).unwrap()));
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let text = catalog_text(6).unwrap();
    c.bench_function("search/order6", |b| b.iter(|| search_cospectral_mates(black_box(text), MatrixKind::A, false).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = exact, formulas, numeric, search
}
criterion_main!(benches);
