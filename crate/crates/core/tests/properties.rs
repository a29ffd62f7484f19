use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pocket_spectra::catalog::{named, regular_catalog, rook, shrikhande};
use pocket_spectra::charpoly::{charpoly_exact, coronal, coronal_constant_row_sum};
use pocket_spectra::cospectral::{
    charpoly_of, make_cospectral_edge_pocket_pair, make_cospectral_vertex_pocket_pair, search_cospectral_mates,
};
use pocket_spectra::eigen::{eig_sym, eig_sym_with, JacobiOptions};
use pocket_spectra::formulas::{edge_pocket_charpoly_q, pocket_charpoly_a, pocket_charpoly_q, CoronalRoute};
use pocket_spectra::pocket::{build_edge_pockets, build_vertex_pockets};
use pocket_spectra::verify::{random_edge_spec, random_graph, random_vertex_spec};
use pocket_spectra::{Graph, IntPolynomial, MatrixInt, MatrixKind, RationalFunction, SpectrumMultiset};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.5))
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 1..5).prop_map(|c| IntPolynomial::from_i64(&c))
}

fn nonzero_poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    poly_strategy().prop_filter("non-zero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_agrees_with_pointwise_determinants(g in graph_strategy(7), x0 in -5i64..=5) {
        let a = g.adjacency_matrix();
        let n = g.order();
        let shifted = &MatrixInt::identity(n).scale(&BigInt::from(x0)) - &a;
        prop_assert_eq!(charpoly_exact(&a).unwrap().eval(&BigInt::from(x0)), shifted.determinant().unwrap());
    }

    #[test]
    fn charpoly_invariant_under_relabelling(g in graph_strategy(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm).unwrap();
        for kind in [MatrixKind::A, MatrixKind::Q] {
            prop_assert_eq!(charpoly_of(&g, kind).unwrap(), charpoly_of(&h, kind).unwrap());
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn coronal_satisfies_determinant_lemma(g in graph_strategy(6)) {
        // 1ᵀ(xI - M)⁻¹1 = det(xI - M + J)/det(xI - M) - 1
        let m = g.signless_laplacian();
        let n = g.order();
        let plus_j = &m - &MatrixInt::ones(n, n);
        let lhs = coronal(&m).unwrap();
        let rhs = &RationalFunction::new(charpoly_exact(&plus_j).unwrap(), charpoly_exact(&m).unwrap()) - &RationalFunction::one();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_functions_form_a_field(a in poly_strategy(), b in nonzero_poly_strategy(), c in poly_strategy(), d in nonzero_poly_strategy()) {
        let p = RationalFunction::new(a, b);
        let q = RationalFunction::new(c, d);
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        if !q.is_zero() {
            prop_assert_eq!(&(&p * &q) / &q, p.clone());
        }
        prop_assert_eq!(&p * &(&q + &RationalFunction::one()), &(&p * &q) + &p);
    }

    #[test]
    fn exact_spectrum_rebuilds_charpoly(g in graph_strategy(7)) {
        let f = charpoly_exact(&g.signless_laplacian()).unwrap();
        let s = SpectrumMultiset::from_charpoly(&f).unwrap();
        prop_assert_eq!(s.total(), g.order());
        if let Some(p) = s.exact_polynomial() {
            prop_assert_eq!(p, f);
        }
    }

    #[test]
    fn jacobi_preserves_trace_and_orthogonality(
        n in 1usize..=12,
        entries in prop::collection::vec(-9i64..=9, 144),
    ) {
        let m: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| entries[i.min(j) * 12 + i.max(j)] as f64).collect())
            .collect();
        let d = eig_sym_with(&m, JacobiOptions::default()).unwrap();
        let trace: f64 = (0..n).map(|i| m[i][i]).sum();
        prop_assert!((d.values.iter().sum::<f64>() - trace).abs() <= 1e-8);
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|r| d.vectors[r][i] * d.vectors[r][j]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - expected).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn jacobi_matches_exact_roots(g in graph_strategy(8)) {
        let numeric = eig_sym(&g.adjacency_matrix().to_f64()).unwrap();
        let exact = pocket_spectra::poly::real_roots(&charpoly_exact(&g.adjacency_matrix()).unwrap());
        let expanded: Vec<f64> = exact.iter().flat_map(|&(r, k)| std::iter::repeat_n(r, k)).collect();
        prop_assert_eq!(expanded.len(), numeric.values().len());
        for (a, b) in expanded.iter().zip(numeric.values()) {
            prop_assert!((a - b).abs() <= 1e-8, "{} vs {}", a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vertex_pocket_factorisations(seed in any::<u64>()) {
        let spec = random_vertex_spec(&mut ChaCha8Rng::seed_from_u64(seed), 6, 5);
        let g = build_vertex_pockets(&spec);
        prop_assert_eq!(pocket_charpoly_a(&spec, CoronalRoute::General).unwrap().expanded, charpoly_exact(&g.adjacency_matrix()).unwrap());
        prop_assert_eq!(pocket_charpoly_q(&spec, CoronalRoute::General).unwrap().expanded, charpoly_exact(&g.signless_laplacian()).unwrap());
    }

    #[test]
    fn edge_pocket_factorisation(seed in any::<u64>()) {
        let spec = random_edge_spec(&mut ChaCha8Rng::seed_from_u64(seed), 6, 5);
        let g = build_edge_pockets(&spec);
        prop_assert_eq!(edge_pocket_charpoly_q(&spec, CoronalRoute::General).unwrap().expanded, charpoly_exact(&g.signless_laplacian()).unwrap());
    }

    #[test]
    fn search_misses_only_distinct_charpolys(seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let text = pocket_spectra::catalog::catalog_text(6).unwrap();
        let report = search_cospectral_mates(text, MatrixKind::A, false).unwrap();
        let graphs: Vec<Graph> = text.lines().map(|l| Graph::from_graph6(l).unwrap()).collect();
        for _ in 0..20 {
            let (i, j) = (rng.gen_range(0..graphs.len()), rng.gen_range(0..graphs.len()));
            if i == j {
                continue;
            }
            let emitted = report.hits.iter().any(|h| h.lines == (i.min(j), i.max(j)));
            let same = charpoly_of(&graphs[i], MatrixKind::A).unwrap() == charpoly_of(&graphs[j], MatrixKind::A).unwrap();
            // the catalog has one graph per isomorphism class
            prop_assert_eq!(emitted, same);
        }
    }
}

#[test]
fn constant_row_sum_coronal_on_regular_catalog() {
    for g in regular_catalog(7).unwrap() {
        let r = g.regularity().unwrap();
        let n = g.order();
        assert_eq!(coronal(&g.adjacency_matrix()).unwrap(), coronal_constant_row_sum(n, BigInt::from(r)).unwrap());
        assert_eq!(coronal(&g.signless_laplacian()).unwrap(), coronal_constant_row_sum(n, BigInt::from(2 * r)).unwrap());
    }
}

#[test]
fn exact_sum_is_trace() {
    for g in regular_catalog(6).unwrap() {
        let s = SpectrumMultiset::from_charpoly(&charpoly_exact(&g.signless_laplacian()).unwrap()).unwrap();
        if let Some(sum) = s.exact_sum() {
            assert_eq!(sum, BigRational::from_integer(g.signless_laplacian().trace()));
        }
    }
}

/// Pocket pairs from the strongly regular seeds stay cospectral for random hosts.
#[test]
fn seeded_pocket_pairs_stay_cospectral() {
    let (s, r) = (shrikhande(), rook());
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        use rand::Rng;
        let n = rng.gen_range(2..=3);
        let f = random_graph(&mut rng, n, 0.6);
        let vk = vec![0, n - 1];
        for kind in [MatrixKind::A, MatrixKind::Q] {
            let (g1, g2, cert) = make_cospectral_vertex_pocket_pair(&f, &vk, &s, &r, kind).unwrap();
            assert_eq!(g1.order(), n + 2 * 16);
            assert_eq!(charpoly_of(&g1, kind).unwrap(), charpoly_of(&g2, kind).unwrap());
            assert_eq!(cert.shared_charpoly, charpoly_of(&g2, kind).unwrap());
        }
    }
    for f in ["K2", "P3", "K3"] {
        let f = named(f).unwrap();
        let (g1, g2, _) = make_cospectral_edge_pocket_pair(&f, &[(0, 1)], &s, &r).unwrap();
        assert_eq!(charpoly_of(&g1, MatrixKind::Q).unwrap(), charpoly_of(&g2, MatrixKind::Q).unwrap());
    }
}
