use std::collections::{BTreeSet, HashMap};

use arcspace_core::canon::canonical_form;
use arcspace_core::exact::rat;
use arcspace_core::{
    build_incidences, build_walk_operators, default_arc_system, fundamental_cycles,
    generate_nonisomorphic, parse_graph6, signed_cycle_vector, structure_summary, to_graph6, Graph,
    GraphFilter, RatMatrix,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge mask over all relabellings.
fn brute_canonical(
    n: usize,
    mask: u32,
    perms: &[Vec<usize>],
    index: &HashMap<(usize, usize), usize>,
) -> u32 {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u32, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << index[&(a, b)]
            })
        })
        .min()
        .unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn generator_matches_brute_force_isomorphism_classes() {
    for n in 1..=6 {
        let perms = permutations(n);
        let index: HashMap<(usize, usize), usize> = pairs(n)
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let total = 1u32 << pairs(n).len();
        let mut classes = BTreeSet::new();
        let mut connected = BTreeSet::new();
        let mut forms: HashMap<u32, _> = HashMap::new();
        for mask in 0..total {
            let class = brute_canonical(n, mask, &perms, &index);
            let g = from_mask(n, mask);
            if classes.insert(class) && structure_summary(&g).c == 1 {
                connected.insert(class);
            }
            if n <= 5 {
                // the refinement canonical form is a class invariant ...
                let form = canonical_form(&g);
                assert_eq!(*forms.entry(class).or_insert(form), form);
            }
        }
        if n <= 5 {
            // ... and separates classes
            let distinct: BTreeSet<_> = forms.values().collect();
            assert_eq!(distinct.len(), classes.len());
        }
        let generated = generate_nonisomorphic(&GraphFilter::all(n)).unwrap();
        assert_eq!(generated.len(), classes.len(), "n = {n}");
        let generated_classes: BTreeSet<u32> = generated
            .iter()
            .map(|g| {
                let mask = g.edges().iter().fold(0u32, |acc, e| acc | 1 << index[e]);
                brute_canonical(n, mask, &perms, &index)
            })
            .collect();
        assert_eq!(generated_classes, classes);
        let gen_connected = generate_nonisomorphic(&GraphFilter::connected(n)).unwrap();
        assert_eq!(gen_connected.len(), connected.len(), "connected, n = {n}");
    }
}

#[test]
fn fundamental_cycles_span_the_flow_space() {
    let mut graphs: Vec<Graph> = (1..=6)
        .flat_map(|n| generate_nonisomorphic(&GraphFilter::all(n)).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        graphs.push(random_graph(&mut rng, n));
    }
    for g in &graphs {
        let arcs = default_arc_system(g);
        let s = structure_summary(g);
        let cycles = fundamental_cycles(g, &arcs);
        assert_eq!(cycles.len() + g.n(), g.m() + s.c, "{g}");
        if cycles.is_empty() {
            continue;
        }
        let columns: Vec<_> = cycles
            .iter()
            .map(|c| signed_cycle_vector(c, &arcs).unwrap())
            .collect();
        let z = RatMatrix::from_columns(g.m(), &columns);
        let inc = build_incidences(g, &arcs);
        assert!(inc.n.mul(&z).is_zero(), "{g}");
        assert_eq!(z.rank(), cycles.len(), "{g}");
    }
}

#[test]
fn walk_matrices_match_their_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n);
        if g.m() == 0 {
            continue;
        }
        let arcs = default_arc_system(&g);
        let ops = build_walk_operators(&g, &arcs).unwrap();
        let all: Vec<(usize, usize)> = arcs.arcs().collect();
        for (i, &(u, v)) in all.iter().enumerate() {
            for (j, &(w, x)) in all.iter().enumerate() {
                // non-backtracking step from arc uv to arc wx
                let t = i64::from(v == w && u != x);
                assert_eq!(ops.t[(i, j)], rat(t));
                // reversal walk: from uv into vx with weight 2/d(v) - [x = u]
                let expected_u = if u == x && v == w {
                    rat(2) / rat(g.degree(v) as i64) - rat(1)
                } else if v == w {
                    rat(2) / rat(g.degree(v) as i64)
                } else {
                    rat(0)
                };
                assert_eq!(ops.u[(j, i)], expected_u);
                assert_eq!(ops.p[(i, j)], rat(i64::from(u == x && v == w)));
            }
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(n in 0usize..70, density in 0.0f64..1.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::new(n, edges).unwrap();
        let text = to_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }
}
