use gb_core::calculus::{
    build_operators, diffop_order, field_apply, field_operator_bijection, operator_of_field, DiffOrder, FirstOrder,
};
use gb_core::rational::{dot, vec_from_ints, zero, Rational};
use gb_core::tangent::{differential_of_hom, verify_extremal};
use gb_core::{DirectedEdgeTable, Graph, TangentGraph, VertexMap};
use proptest::prelude::*;

/// Graph on `n <= max_n` vertices from an edge bitmask over the pairs `i < j`.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len())
            .prop_map(move |mask| Graph::new(n, pairs.iter().zip(&mask).filter(|p| *p.1).map(|p| *p.0)).unwrap())
    })
}

fn ints(len: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-20i64..=20, len)
}

fn graph_and_field(max_n: usize) -> impl Strategy<Value = (Graph, Vec<i64>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), ints(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(g in graph(7)) {
        let table = DirectedEdgeTable::new(&g);
        prop_assert_eq!(table.len(), 2 * g.edge_count());
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), table.len());
        for u in 0..table.len() {
            prop_assert_eq!(table.sigma(table.sigma(u)), u);
            prop_assert_eq!(table.pi(table.sigma(u)), table.pi_plus(u));
        }
    }

    #[test]
    fn adjacency_is_linear((g, a) in graph_and_field(7), s in -5i64..=5) {
        let b: Vec<i64> = a.iter().rev().copied().collect();
        let (fa, fb) = (vec_from_ints(&a), vec_from_ints(&b));
        let comb: Vec<Rational> = fa.iter().zip(&fb).map(|(x, y)| Rational::from_integer(s.into()) * x + y).collect();
        let lhs = g.adjacency_apply(&comb).unwrap();
        let (aa, ab) = (g.adjacency_apply(&fa).unwrap(), g.adjacency_apply(&fb).unwrap());
        for i in 0..g.n() {
            prop_assert_eq!(&lhs[i], &(Rational::from_integer(s.into()) * &aa[i] + &ab[i]));
        }
    }

    #[test]
    fn walk_distance_triangle_inequality(g in graph(7)) {
        let d = g.all_pairs_distances();
        let n = g.n();
        for i in 0..n {
            prop_assert_eq!(d[i][i], Some(0));
            for j in 0..n {
                prop_assert_eq!(d[i][j], d[j][i]);
                for k in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (d[i][k], d[i][j], d[j][k]) {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn tangent_inside_tau_and_equality_for_star_forests(g in graph(6)) {
        let (t, tau) = (TangentGraph::t(&g), TangentGraph::tau(&g));
        for &(a, b) in t.graph().edges() {
            prop_assert!(tau.graph().has_edge(a, b));
        }
        let equal = t.graph().same_structure(tau.graph());
        prop_assert_eq!(equal, g.is_star_forest());
        prop_assert_eq!(verify_extremal(&g).tangent_equals_tau, equal);
    }

    #[test]
    fn gradient_is_odd_under_reversal((g, phi) in graph_and_field(7)) {
        let s = build_operators(&g);
        let grad = s.gradient(&vec_from_ints(&phi)).unwrap();
        for u in 0..s.table.len() {
            prop_assert_eq!(&grad[s.table.sigma(u)], &-&grad[u]);
        }
    }

    #[test]
    fn laplacian_is_positive_semidefinite((g, phi) in graph_and_field(7)) {
        let s = build_operators(&g);
        let f = vec_from_ints(&phi);
        let q = dot(&f, &s.laplacian(&f).unwrap());
        prop_assert!(q >= zero());
        prop_assert!(s.lap.is_symmetric());
        prop_assert!(s.lap.row_sums().iter().all(|&r| r == 0));
        let grad = s.gradient(&f).unwrap();
        prop_assert_eq!(q, dot(&grad, &grad));
    }

    #[test]
    fn vector_fields_round_trip((g, x) in graph(6).prop_flat_map(|g| {
        let m = 2 * g.edge_count();
        (Just(g), ints(m))
    })) {
        let table = DirectedEdgeTable::new(&g);
        let l = operator_of_field(&table, &x).unwrap();
        prop_assert_eq!(field_operator_bijection(&g, &l).unwrap(), FirstOrder::Field(x.clone()));
        let expected = if x.iter().all(|&v| v == 0) { 0 } else { 1 };
        prop_assert_eq!(diffop_order(&g, &l).unwrap(), DiffOrder::Order(expected));
        let phi: Vec<i64> = (0..g.n() as i64).map(|i| i * i - 3).collect();
        let direct = field_apply(&table, &vec_from_ints(&x), &vec_from_ints(&phi)).unwrap();
        prop_assert_eq!(l.apply(&vec_from_ints(&phi)).unwrap(), direct);
    }

    #[test]
    fn differentials_compose(g in graph(6)) {
        // Projections of the bipartite double cover onto G and K2.
        let n = g.n();
        let cover = Graph::new(
            2 * n,
            g.edges().iter().flat_map(|&(i, j)| [(i, j + n), (i + n, j)]),
        ).unwrap();
        let h = VertexMap::new((0..2 * n).map(|v| v % n).collect());
        let k = VertexMap::new((0..2 * n).map(|v| v / n).collect());
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let dh = differential_of_hom(&h, &cover, &g).unwrap();
        prop_assert!(dh.report.passed());
        let dk = differential_of_hom(&k, &cover, &k2).unwrap();
        prop_assert!(dk.report.passed());
        // d(id) = id and d(h∘s) = dh∘ds for the swap s of the cover.
        let id = differential_of_hom(&VertexMap::identity(2 * n), &cover, &cover).unwrap();
        prop_assert_eq!(id.map, VertexMap::identity(2 * cover.edge_count()));
        let swap = VertexMap::new((0..2 * n).map(|v| (v + n) % (2 * n)).collect());
        let ds = differential_of_hom(&swap, &cover, &cover).unwrap();
        let hs = differential_of_hom(&swap.then(&h), &cover, &g).unwrap();
        prop_assert_eq!(hs.map, ds.map.then(&dh.map));
    }
}
