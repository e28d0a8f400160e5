use std::collections::HashSet;

use proptest::prelude::*;

use convexham::certificate::canonical_cycle;
use convexham::convexity::{canonical_mask, classify_subset, is_convex_by_k5, is_convex_by_triangles, k5_mask};
use convexham::edge::all_edges;
use convexham::generators::{convex_position, random_geometric, twisted};
use convexham::geometry::{find_degeneracy, point_in_polygon, Point};
use convexham::oracle::{brute_hamiltonian, cycle_sides, is_plane, verify, Mode};
use convexham::plane::{
    empty_k_cycle, hamiltonian_cycle, path_containing_edge, st_hamiltonian_path, star_avoiding_hamiltonian_cycle,
};
use convexham::subdrawings::{default_order, greedy_maximal_plane};
use convexham::{io, Drawing, Edge, PointSet};

fn instance() -> impl Strategy<Value = Drawing> {
    (4usize..=11, any::<u64>()).prop_map(|(n, seed)| random_geometric(n, seed).unwrap())
}

fn small_grid_points() -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-12i64..12, -12i64..12), 4..9)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn crossing_predicate_is_symmetric_and_ignores_adjacent_edges(d in instance()) {
        let edges: Vec<Edge> = all_edges(d.n()).collect();
        for &e in &edges {
            for &f in &edges {
                prop_assert_eq!(d.crosses(e, f), d.crosses(f, e));
                if e.shares_vertex(f) {
                    prop_assert!(!d.crosses(e, f));
                }
            }
        }
    }

    #[test]
    fn hamiltonian_cycle_verifies(d in instance()) {
        let c = hamiltonian_cycle(&d).unwrap();
        prop_assert!(c.oracle_verified);
        prop_assert_eq!(c.vertices.len(), d.n());
        prop_assert_eq!(canonical_cycle(&c.vertices), c.vertices.clone());
    }

    #[test]
    fn st_path_has_requested_ends(d in instance(), a in 0usize..100, b in 0usize..100) {
        let n = d.n();
        let (s, t) = (a % n + 1, b % n + 1);
        prop_assume!(s != t);
        let c = st_hamiltonian_path(&d, s, t).unwrap();
        prop_assert_eq!(c.vertices.first(), Some(&s));
        prop_assert_eq!(c.vertices.last(), Some(&t));
    }

    #[test]
    fn star_avoiding_cycle_avoids_the_star(d in instance(), a in 0usize..100) {
        let v = a % d.n() + 1;
        let c = star_avoiding_hamiltonian_cycle(&d, v).unwrap();
        let star: Vec<Edge> = (1..=d.n()).filter(|&w| w != v).map(|w| Edge::new(v, w)).collect();
        for &e in &c.edges {
            prop_assert!(star.iter().all(|&s| !d.crosses(e, s)));
        }
    }

    #[test]
    fn empty_cycle_side_matches_geometry(d in instance(), a in 0usize..100, b in 0usize..100) {
        let n = d.n();
        let (v, k) = (a % n + 1, 3 + b % (n - 2));
        let c = empty_k_cycle(&d, k, v).unwrap();
        let pts = d.points().unwrap().points();
        let poly: Vec<Point> = c.vertices.iter().map(|&w| pts[w - 1]).collect();
        let inside = (1..=n).filter(|w| !c.vertices.contains(w) && point_in_polygon(pts[w - 1], &poly)).count();
        let outside = n - k - inside;
        prop_assert!(inside == 0 || outside == 0);
    }

    #[test]
    fn path_through_any_edge(d in instance(), a in 0usize..100, b in 0usize..100) {
        let n = d.n();
        let (u, w) = (a % n + 1, b % n + 1);
        prop_assume!(u != w);
        let c = path_containing_edge(&d, Edge::new(u, w)).unwrap();
        prop_assert!(c.edges.contains(&Edge::new(u, w)));
    }

    #[test]
    fn greedy_size_does_not_depend_on_order(d in instance(), shuffle in any::<u64>()) {
        let base = greedy_maximal_plane(&d, &[], &default_order(&d)).unwrap();
        let mut order: Vec<Edge> = all_edges(d.n()).collect();
        let len = order.len();
        let mut x = shuffle | 1;
        for i in (1..len).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            order.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let other = greedy_maximal_plane(&d, &[], &order).unwrap();
        prop_assert_eq!(base.len(), other.len());
        prop_assert!(is_plane(&d, &other.edges));
        prop_assert!(other.len() >= 2 * d.n() - 3);
    }

    #[test]
    fn json_round_trip(d in instance(), omit in any::<bool>()) {
        let back = io::from_json(&io::to_json(&d, omit)).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn relabeling_preserves_k5_classes(perm in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle(), seed in any::<u64>()) {
        let d = random_geometric(6, seed).unwrap();
        let r = d.relabel(&perm).unwrap();
        let q = [1, 2, 3, 4, 5];
        let image = {
            let mut v: Vec<usize> = q.iter().map(|&w| perm[w - 1]).collect();
            v.sort_unstable();
            [v[0], v[1], v[2], v[3], v[4]]
        };
        prop_assert_eq!(classify_subset(&d, q), classify_subset(&r, image));
        prop_assert_eq!(canonical_mask(k5_mask(&d, q)), canonical_mask(k5_mask(&r, image)));
    }

    #[test]
    fn twisted_relabelings_are_never_convex(perm in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle()) {
        let r = twisted(6).relabel(&perm).unwrap();
        prop_assert!(!is_convex_by_triangles(&r).unwrap());
        prop_assert!(!is_convex_by_k5(&r).unwrap());
    }

    #[test]
    fn arbitrary_grid_point_sets(points in small_grid_points()) {
        prop_assume!(find_degeneracy(&points).is_none());
        let d = Drawing::from_points(PointSet::new(points).unwrap());
        prop_assert!(is_convex_by_triangles(&d).unwrap());
        let c = hamiltonian_cycle(&d).unwrap();
        prop_assert!(verify(&d, &c).ok);
        for v in 1..=d.n() {
            star_avoiding_hamiltonian_cycle(&d, v).unwrap();
        }
    }

    #[test]
    fn random_plane_cycles_agree_with_point_in_polygon(seed in any::<u64>(), pick in prop::collection::vec(any::<prop::sample::Index>(), 3..7)) {
        let d = random_geometric(9, seed).unwrap();
        let mut cyc: Vec<usize> = Vec::new();
        let mut seen = HashSet::new();
        for i in pick {
            let v = i.index(9) + 1;
            if seen.insert(v) {
                cyc.push(v);
            }
        }
        prop_assume!(cyc.len() >= 3);
        let k = cyc.len();
        let edges: Vec<Edge> = (0..k).map(|i| Edge::new(cyc[i], cyc[(i + 1) % k])).collect();
        prop_assume!(is_plane(&d, &edges));
        let sides = cycle_sides(&d, &cyc).unwrap();
        let pts = d.points().unwrap().points();
        let poly: Vec<Point> = cyc.iter().map(|&w| pts[w - 1]).collect();
        let inside: Vec<usize> = (1..=9).filter(|w| !cyc.contains(w) && point_in_polygon(pts[w - 1], &poly)).collect();
        let outside: Vec<usize> = (1..=9).filter(|w| !cyc.contains(w) && !inside.contains(w)).collect();
        let got = [sides.side_a.clone(), sides.side_b.clone()];
        prop_assert!(got == [inside.clone(), outside.clone()] || got == [outside, inside]);
    }
}

#[test]
fn hull_is_the_unique_plane_cycle_in_convex_position() {
    for n in 3..=9 {
        let d = convex_position(n);
        let hull: Vec<usize> = (1..=n).collect();
        assert_eq!(brute_hamiltonian(&d, &Mode::Cycle).unwrap(), vec![hull.clone()]);
        assert_eq!(hamiltonian_cycle(&d).unwrap().vertices, hull);
    }
}
