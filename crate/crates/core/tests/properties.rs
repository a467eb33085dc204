//! Property tests for the structural invariants of the library: the
//! nullity-pair trichotomy, congruence and Schur invariances, the
//! relationships among the transfer deciders, rooted-minor
//! monotonicity, and the coupling identities for the rooted parameter.

use num::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sniplab_core::{
    all_graphs_up_to_iso, connected_graphs_up_to_iso, family, has_isnip_direct, has_sap,
    in_pattern, index_type, neutral_shift, nullity_pair, random_matrix_for, random_rooted_graph,
    rat, ratio, root_orbit_reps, search_certificate, xixi_minor_based, Family, IndexType,
    NullityPair, Rational, RationalMatrix, RootedGraph, SearchGrid,
};

/// A seeded (graph, matrix, root) triple. Proptest drives the seed and
/// the size; the generators in `corpus` do the sampling, so failures
/// shrink to a seed that can be replayed directly.
fn seeded_triple(seed: u64, n: usize) -> (RootedGraph, RationalMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_rooted_graph(&mut rng, n, 0.5);
    let m = random_matrix_for(&mut rng, &g);
    (g, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The two nullities never differ by more than one.
    #[test]
    fn trichotomy_bounds_the_pair(seed in any::<u64>(), n in 1usize..=7) {
        let (g, m) = seeded_triple(seed, n);
        let pair = nullity_pair(&m, g.root()).unwrap();
        prop_assert!(pair.full.abs_diff(pair.sub) <= 1);
        let class = index_type(&m, g.root()).unwrap();
        let expected = match class {
            IndexType::Upper => pair.full + 1,
            IndexType::Neutral => pair.full,
            IndexType::Downer => pair.full - 1,
        };
        prop_assert_eq!(pair.sub, expected);
    }

    /// Rank is invariant under transposition and nonzero scaling, and
    /// matches n minus the kernel dimension.
    #[test]
    fn rank_invariances(seed in any::<u64>(), n in 1usize..=7) {
        let (g, m) = seeded_triple(seed, n);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), m.scale(&ratio(-7, 3)).rank());
        prop_assert_eq!(m.rank() + m.kernel_basis().cols(), g.n());
        // the kernel basis really is a basis of the kernel
        let prod = m.mul(&m.kernel_basis()).unwrap();
        for r in 0..prod.rows() {
            for c in 0..prod.cols() {
                prop_assert!(prod.at(r, c).is_zero());
            }
        }
    }

    /// Congruence by an invertible diagonal matrix preserves the
    /// pattern, the nullity pair, and all three transfer verdicts.
    #[test]
    fn diagonal_congruence_preserves_everything(seed in any::<u64>(), n in 1usize..=6) {
        let (g, m) = seeded_triple(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
        let scales: Vec<Rational> = (0..n)
            .map(|_| {
                let pick: [i64; 4] = [1, -1, 2, -2];
                rat(pick[(rand::Rng::gen_range(&mut rng, 0..4)) as usize])
            })
            .collect();
        let mut congruent = m.clone();
        for r in 0..n {
            for c in 0..n {
                let value = m.at(r, c) * &scales[r] * &scales[c];
                congruent.set(r, c, value);
            }
        }
        let i = g.root();
        prop_assert!(in_pattern(&congruent, &g, true).unwrap());
        prop_assert_eq!(nullity_pair(&m, i).unwrap(), nullity_pair(&congruent, i).unwrap());
        prop_assert_eq!(
            has_isnip_direct(&m, &g, i).unwrap(),
            has_isnip_direct(&congruent, &g, i).unwrap()
        );
        prop_assert_eq!(has_sap(&m, &g).unwrap(), has_sap(&congruent, &g).unwrap());
    }

    /// The transfer property at a vertex is weaker than the full
    /// strong-independence test: dropping a constraint row can only
    /// shrink the solution space of the blocking system.
    #[test]
    fn transfer_implies_full_strength(seed in any::<u64>(), n in 1usize..=7) {
        let (g, m) = seeded_triple(seed, n);
        if has_isnip_direct(&m, &g, g.root()).unwrap() {
            prop_assert!(has_sap(&m, &g).unwrap());
        }
    }

    /// The shift that turns a neutral root into a downer is unique:
    /// nearby probe values stay non-downer.
    #[test]
    fn neutral_shift_is_the_only_downer_shift(seed in any::<u64>(), n in 2usize..=7) {
        let (g, m) = seeded_triple(seed, n);
        let i = g.root();
        if index_type(&m, i).unwrap() != IndexType::Neutral {
            return Ok(());
        }
        let t = neutral_shift(&m, i).unwrap();
        for probe in [&t + rat(1), &t - rat(1), &t + ratio(1, 2), &t - ratio(1, 2)] {
            let mut shifted = m.clone();
            shifted.set(i, i, m.at(i, i) + &probe);
            prop_assert!(index_type(&shifted, i).unwrap() != IndexType::Downer);
        }
    }

    /// Schur complement on an invertible principal block: commutes with
    /// root deletion and preserves both nullities.
    #[test]
    fn schur_preserves_nullities(seed in any::<u64>(), n in 3usize..=7) {
        let (g, m) = seeded_triple(seed, n);
        let i = g.root();
        // largest prefix of non-root indices that is invertible
        let candidates: Vec<usize> = (0..n).filter(|&v| v != i).collect();
        let mut alpha = Vec::new();
        for &v in &candidates {
            let mut probe = alpha.clone();
            probe.push(v);
            let block = m.submatrix(&probe, &probe).unwrap();
            if block.rank() == probe.len() {
                alpha = probe;
            }
        }
        if alpha.is_empty() {
            return Ok(());
        }
        let comp = m.schur_complement(&alpha).unwrap();
        prop_assert_eq!(m.nullity(), comp.nullity());
        // position of the root among the surviving indices
        let i_new = (0..n).filter(|v| !alpha.contains(v)).position(|v| v == i).unwrap();
        let pair = nullity_pair(&m, i).unwrap();
        prop_assert_eq!(pair, nullity_pair(&comp, i_new).unwrap());
        // deleting the root commutes with the complement
        let deleted_then_schur = m.delete_row_col(i).unwrap().schur_complement(
            &alpha.iter().map(|&v| if v > i { v - 1 } else { v }).collect::<Vec<_>>(),
        ).unwrap();
        let schur_then_deleted = comp.delete_row_col(i_new).unwrap();
        prop_assert_eq!(deleted_then_schur, schur_then_deleted);
    }

    /// graph6 encoding round-trips every graph the corpus produces.
    #[test]
    fn graph6_round_trip(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_rooted_graph(&mut rng, n, 0.5);
        let text = g.to_graph6();
        let back = RootedGraph::from_graph6(&text, g.root()).unwrap();
        prop_assert_eq!(g, back);
    }
}

/// One-step rooted minors never increase the catalog value: audited
/// exhaustively over every rooted graph on at most six vertices, one
/// representative per isomorphism class and root orbit.
#[test]
fn minor_value_is_monotone_under_one_step_minors() {
    for n in 1..=6 {
        for shape in all_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                let g = shape.with_root(root).unwrap();
                let value = xixi_minor_based(&g).unwrap().minor_value;
                for smaller in g.one_step_minors() {
                    let smaller_value = xixi_minor_based(&smaller).unwrap().minor_value;
                    assert!(
                        smaller_value <= value,
                        "one-step minor of {} (root {}) jumped from {} to {}",
                        g.to_graph6(),
                        g.root(),
                        value,
                        smaller_value
                    );
                }
            }
        }
    }
}

/// Appending a leaf at the root and re-rooting there lifts the catalog
/// value from at least 2k to at least 2k+1 and vice versa, for every
/// connected rooted graph on at most six vertices. (Disconnected
/// graphs reduce to the root component on both sides, so connected
/// hosts settle the general case.)
#[test]
fn extend_root_couples_odd_and_even_levels() {
    for n in 1..=6 {
        for shape in connected_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                let g = shape.with_root(root).unwrap();
                let value = xixi_minor_based(&g).unwrap().minor_value;
                let extended = xixi_minor_based(&g.extend_root()).unwrap().minor_value;
                for k in 0..=2 {
                    assert_eq!(
                        extended >= 2 * k + 1,
                        value >= 2 * k,
                        "coupling failed for {} (root {}): value {}, extended {}",
                        g.to_graph6(),
                        g.root(),
                        value,
                        extended
                    );
                }
            }
        }
    }
}

/// Gluing two rooted graphs at their roots makes the root a
/// cut-vertex, and the catalog value of the sum is the larger of the
/// two parts.
#[test]
fn vertex_sum_at_root_takes_the_max() {
    let mut parts = Vec::new();
    for n in 1..=4 {
        for shape in connected_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                parts.push(shape.with_root(root).unwrap());
            }
        }
    }
    for a in &parts {
        for b in &parts {
            let sum = a.vertex_sum(a.root(), b, b.root()).unwrap();
            let sum_value = xixi_minor_based(&sum).unwrap().minor_value;
            let a_value = xixi_minor_based(a).unwrap().minor_value;
            let b_value = xixi_minor_based(b).unwrap().minor_value;
            assert_eq!(
                sum_value,
                a_value.max(b_value),
                "vertex sum of {} and {} scored {}",
                a.to_graph6(),
                b.to_graph6(),
                sum_value
            );
        }
    }
}

/// Three-part chains glued through a middle graph: replacing either
/// outer part by a single edge never changes the value, as long as the
/// root lies in the middle part. Spot-checked on hosts of up to eight
/// vertices.
#[test]
fn two_cut_reduction_spot_check() {
    let k2 = family(Family::Complete(2));
    let mut outers = Vec::new();
    for n in 2..=3 {
        for shape in connected_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                outers.push(shape.with_root(root).unwrap());
            }
        }
    }
    let middles = [
        family(Family::Path(3)).with_root(1).unwrap(),
        family(Family::Complete(3)).with_root(2).unwrap(),
        RootedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (1, 3)], 1).unwrap(),
    ];
    for g0 in &middles {
        // glue points: the two vertices of the middle that are not the root
        let glue: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.root()).take(2).collect();
        let (v1, v2) = (glue[0], glue[1]);
        for g1 in &outers {
            for g2 in &outers {
                let assemble = |left: &RootedGraph, right: &RootedGraph| {
                    let once = g0.vertex_sum(v1, left, left.root()).unwrap();
                    once.vertex_sum(v2, right, right.root())
                        .unwrap()
                        .with_root(g0.root())
                        .unwrap()
                };
                let full_value = xixi_minor_based(&assemble(g1, g2)).unwrap().minor_value;
                let left_replaced = xixi_minor_based(&assemble(&k2, g2)).unwrap().minor_value;
                let right_replaced = xixi_minor_based(&assemble(g1, &k2)).unwrap().minor_value;
                assert_eq!(
                    full_value,
                    left_replaced.max(right_replaced),
                    "two-cut identity failed for middle {} with outers {} and {}",
                    g0.to_graph6(),
                    g1.to_graph6(),
                    g2.to_graph6()
                );
            }
        }
    }
}

/// Whenever the default grid certifies a square pair (k, k) with the
/// transfer property, shifting the root diagonal entry by the downer
/// shift produces a (k+1, k) certificate, so the square pair never
/// certifies more than its staircase neighbor.
#[test]
fn square_pairs_convert_to_their_staircase_neighbors() {
    let mut converted = 0;
    for n in 1..=4 {
        for shape in connected_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                let g = shape.with_root(root).unwrap();
                let grid = SearchGrid::default_for(&g);
                for k in 0..=2usize {
                    let target = NullityPair::new(k, k);
                    let Some(cert) = search_certificate(&g, target, true, &grid).unwrap() else {
                        continue;
                    };
                    let m = &cert.matrix;
                    let i = g.root();
                    let t = neutral_shift(m, i).unwrap();
                    let mut shifted = m.clone();
                    shifted.set(i, i, m.at(i, i) + &t);
                    assert_eq!(
                        nullity_pair(&shifted, i).unwrap(),
                        NullityPair::new(k + 1, k),
                        "shift did not step the pair on {}",
                        g.to_graph6()
                    );
                    assert!(
                        has_isnip_direct(&shifted, &g, i).unwrap(),
                        "shifted witness lost the transfer property on {}",
                        g.to_graph6()
                    );
                    converted += 1;
                }
            }
        }
    }
    assert!(converted >= 8, "only {converted} square certificates found");
}

/// The exhaustive default-grid search never certifies more than the
/// rooted-minor characterization allows on small graphs. A saturated
/// report (catalog level 5) is exempt: the catalog stops at 5, while
/// certificates keep going.
#[test]
fn search_never_beats_the_minor_characterization() {
    let mut saturated_seen = 0;
    for n in 1..=5 {
        for shape in connected_graphs_up_to_iso(n) {
            for root in root_orbit_reps(&shape) {
                let g = shape.with_root(root).unwrap();
                let report = sniplab_core::xixi_report(&g, &SearchGrid::default_for(&g)).unwrap();
                if report.saturated {
                    saturated_seen += 1;
                    continue;
                }
                assert!(
                    report.certified_lower <= report.minor_value,
                    "{} (root {}) certified {} above minor value {}",
                    g.to_graph6(),
                    g.root(),
                    report.certified_lower,
                    report.minor_value
                );
            }
        }
    }
    assert!(saturated_seen >= 1, "expected at least one saturated report (K5)");
}
