use proptest::prelude::*;
use q1lab::families::{self, FamilySpec};
use q1lab::graph::{edge_index, pair_count};
use q1lab::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let edges: Vec<_> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .filter(|&(i, j)| bits[edge_index(i, j)])
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Subset brute force.
fn clique_oracle(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|i| (0..n).all(|j| i == j || s >> i & 1 == 0 || s >> j & 1 == 0 || g.has_edge(i, j)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Tries every assignment with k colors.
fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    (1..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut c = vec![0; n];
                for v in c.iter_mut() {
                    *v = code % k as u64;
                    code /= k as u64;
                }
                g.edges().all(|(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

#[test]
fn edge_index_order() {
    let order: Vec<(usize, usize)> = (1..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    for (k, &(i, j)) in order.iter().enumerate() {
        assert_eq!(edge_index(i, j), k);
    }
    assert_eq!(pair_count(7), 21);
}

#[test]
fn invariants_on_all_six_vertex_graphs() {
    for mask in (0..1u64 << 15).step_by(7) {
        let g = Graph::from_edge_mask(6, mask).unwrap();
        assert_eq!(g.clique_number(), clique_oracle(&g), "{g}");
        if mask % 5 == 0 {
            assert_eq!(g.chromatic_number().unwrap(), chromatic_oracle(&g), "{g}");
        }
    }
}

#[test]
fn family_round_trips() {
    let specs = [
        "turan:10,3",
        "kite:7,4",
        "kpq:2,5",
        "joinpath:3,4",
        "path:9",
        "complete:6",
        "empty:4",
        "cpm:8",
        "cpmtri:9",
        "multipartite:4,3,3",
    ];
    for s in specs {
        let spec: FamilySpec = s.parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g, "{s}");
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g, "{s}");
        assert_eq!(g.clique_number(), spec.clique_number(), "{s}");
        assert_eq!(g.n(), spec.order());
        if g.n() <= 12 {
            assert_eq!(g.chromatic_number().unwrap(), spec.chromatic_number(), "{s}");
        }
    }
    for bad in ["turan:3,5", "kite:5,1", "bogus:3", "path:", "cpmtri:8", "multipartite:"] {
        assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
    }
}

#[test]
fn turan_structure() {
    for n in 2..=20 {
        for t in 2..=n {
            let g = families::turan(n, t).unwrap();
            assert!(g.is_turan(t));
            assert_eq!(g.clique_number(), t);
            let mut parts = g.multipartite_parts().unwrap();
            parts.sort_unstable();
            assert!(parts.last().unwrap() - parts[0] <= 1);
        }
    }
}

#[test]
fn kite_structure() {
    for n in 3..=12 {
        for w in 2..=n {
            let g = families::kite(n, w).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.clique_number(), w);
            assert_eq!(g.m(), w * (w - 1) / 2 + n - w);
        }
        assert!(families::kite(n, 2).unwrap().is_path());
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), pair_count(g.n()));
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        prop_assert_eq!(g.degree_profile().edge_count(), g.m());
    }

    #[test]
    fn duplication_makes_twins(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.n();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let h = g.duplicate_vertex(u, v).unwrap();
        prop_assert_eq!(h.neighbors(u), g.neighbors(v) & !(1u64 << u));
        prop_assert!(!h.has_edge(u, v));
        // vertices other than u keep their other adjacencies
        for x in (0..n).filter(|&x| x != u) {
            for y in (0..n).filter(|&y| y != u) {
                prop_assert_eq!(h.has_edge(x, y), g.has_edge(x, y));
            }
        }
        prop_assert!(h.clique_number() <= g.clique_number());
    }

    #[test]
    fn permutation_preserves_invariants(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(h.m(), g.m());
        prop_assert_eq!(h.clique_number(), g.clique_number());
        prop_assert_eq!(h.is_connected(), g.is_connected());
        let mut a = g.degrees();
        let mut b = h.degrees();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn join_and_union_counts(a in arb_graph(8), b in arb_graph(8)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.m(), a.m() + b.m() + a.n() * b.n());
        prop_assert_eq!(j.clique_number(), a.clique_number() + b.clique_number());
        let u = a.union(&b).unwrap();
        prop_assert_eq!(u.m(), a.m() + b.m());
        prop_assert_eq!(u.clique_number(), a.clique_number().max(b.clique_number()));
    }
}
