//! Seeded generators and small-graph enumeration shared by tests and
//! benchmarks.
//!
//! Random matrices in a graph's class draw edge weights from the
//! nonzero integers -3..=3 and diagonal entries from -3..=3, enough
//! variety to exercise every index type and both transfer verdicts.
//! The exhaustive enumerators return one representative per
//! isomorphism class (canonical form = minimal edge bitmask over all
//! vertex relabelings), which keeps desk-scale sweeps tractable.

use crate::ratmat::{rat, RationalMatrix};
use crate::rgraph::RootedGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniform random graph on n vertices (each edge with probability p)
/// with a uniform random root.
pub fn random_rooted_graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> RootedGraph {
    assert!(n >= 1, "graph needs a vertex");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let root = rng.gen_range(0..n);
    RootedGraph::new(n, &edges, root).expect("generated edges are valid")
}

/// Random symmetric matrix strictly in the class of g: every edge gets
/// a nonzero weight in -3..=3, every diagonal entry a value in -3..=3.
pub fn random_matrix_for(rng: &mut impl Rng, g: &RootedGraph) -> RationalMatrix {
    let nonzero: [i64; 6] = [-3, -2, -1, 1, 2, 3];
    let n = g.n();
    let mut m = RationalMatrix::zeros(n, n);
    for v in 0..n {
        m.set(v, v, rat(rng.gen_range(-3..=3)));
    }
    for (u, v) in g.edges() {
        let w = rat(*nonzero.choose(rng).expect("palette is non-empty"));
        m.set(u, v, w.clone());
        m.set(v, u, w);
    }
    m
}

fn pair_slot(u: usize, v: usize, n: usize) -> usize {
    let (a, b) = (u.min(v), u.max(v));
    // slots for pairs (a, b), a < b, in row-major order
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn apply_perm(mask: u32, n: usize, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << pair_slot(u, v, n)) != 0 {
                out |= 1 << pair_slot(perm[u], perm[v], n);
            }
        }
    }
    out
}

fn mask_to_graph(mask: u32, n: usize) -> RootedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << pair_slot(u, v, n)) != 0 {
                edges.push((u, v));
            }
        }
    }
    RootedGraph::new(n, &edges, 0).expect("mask decodes to a valid graph")
}

fn graph_mask(g: &RootedGraph) -> u32 {
    let mut mask = 0u32;
    for (u, v) in g.edges() {
        mask |= 1 << pair_slot(u, v, g.n());
    }
    mask
}

/// One representative per isomorphism class of graphs on exactly n
/// vertices (n <= 6), rooted at 0, in ascending canonical-mask order.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<RootedGraph> {
    assert!((1..=6).contains(&n), "exhaustive enumeration handles n in 1..=6");
    let perms = permutations(n);
    let slots = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots) {
        let canonical = perms.iter().map(|p| apply_perm(mask, n, p)).min().unwrap();
        if canonical == mask {
            out.push(mask_to_graph(mask, n));
        }
    }
    out
}

/// Connected representatives only.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<RootedGraph> {
    all_graphs_up_to_iso(n)
        .into_iter()
        .filter(RootedGraph::is_connected)
        .collect()
}

/// One root per vertex orbit of the automorphism group, ascending.
pub fn root_orbit_reps(g: &RootedGraph) -> Vec<usize> {
    let n = g.n();
    let mask = graph_mask(g);
    let mut orbit: Vec<usize> = (0..n).collect();
    for perm in permutations(n) {
        if apply_perm(mask, n, &perm) != mask {
            continue;
        }
        for v in 0..n {
            // union v with its image under the automorphism
            let (mut a, mut b) = (v, perm[v]);
            while orbit[a] != a {
                a = orbit[a];
            }
            while orbit[b] != b {
                b = orbit[b];
            }
            if a != b {
                orbit[a.max(b)] = a.min(b);
            }
        }
    }
    let mut reps: Vec<usize> = (0..n)
        .filter(|&v| {
            let mut a = v;
            while orbit[a] != a {
                a = orbit[a];
            }
            a == v
        })
        .collect();
    reps.sort_unstable();
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rgraph::{family, Family};
    use crate::snipcore::in_pattern;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_matrix_respects_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let g = random_rooted_graph(&mut rng, 6, 0.4);
            let m = random_matrix_for(&mut rng, &g);
            assert!(in_pattern(&m, &g, true).unwrap());
        }
    }

    #[test]
    fn iso_class_counts_match_the_literature() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| connected_graphs_up_to_iso(n).len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn orbits_of_symmetric_graphs() {
        assert_eq!(root_orbit_reps(&family(Family::Complete(4))), vec![0]);
        assert_eq!(root_orbit_reps(&family(Family::Star(3))), vec![0, 1]);
        assert_eq!(root_orbit_reps(&family(Family::Path(4))), vec![0, 1]);
        assert_eq!(root_orbit_reps(&family(Family::Paw)), vec![0, 1, 3]);
        assert_eq!(root_orbit_reps(&family(Family::S211)), vec![0, 1, 2, 4]);
    }
}
