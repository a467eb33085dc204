//! Certified bounds for the rooted minor-monotone parameter.
//!
//! The parameter of a rooted graph is bounded below two independent
//! ways: by exhibiting a matrix in the graph's class whose nullity
//! pair at the root carries the transfer property (search
//! certification), and by finding a member of the minimal-minor
//! catalog as a rooted minor (structural certification). A report
//! combines both with the edge-count sanity bound.
//!
//! Searches run over a finite grid of diagonal and edge values in
//! parallel; results are deterministic because parallel chunks are
//! merged by minimum enumeration index (exhaustive mode) or minimum
//! sample counter (randomized mode).

use crate::ratmat::{rat, Rational, RationalMatrix};
use crate::rgraph::{minimal_minor_family, RGraphError, RootedGraph};
use crate::snipcore::{
    has_isnip_direct, nullity_pair, NullityPair, SnipCertificate, SnipError,
};
use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Exhaustive scans refuse to start above this many candidates.
pub const DEFAULT_CANDIDATE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum XiXiError {
    #[error("search space has {candidates} candidates, above the cap of {cap}")]
    GridTooLarge { candidates: u128, cap: u64 },
    #[error("the root is not a cut vertex of its component")]
    NotACutVertex,
    #[error("target pair ({k}, {l}) violates the one-step interlacing bound")]
    BadTarget { k: usize, l: usize },
    #[error("unusable search grid: {0}")]
    BadGrid(String),
    #[error(transparent)]
    Graph(#[from] RGraphError),
    #[error(transparent)]
    Snip(#[from] SnipError),
}

/// Value grid for matrix candidates in the class of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchGrid {
    pub diagonal_values: Vec<Rational>,
    pub edge_values: Vec<Rational>,
    pub mode: SearchMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every combination, in lexicographic order over (diagonal
    /// entries, then edge entries), vertex and edge order ascending.
    Exhaustive,
    /// `samples` independent draws; draw t comes from a ChaCha stream
    /// derived from (seed, t), so runs are reproducible and
    /// parallelism-independent.
    Randomized { samples: u64, seed: u64 },
}

impl SearchGrid {
    /// Diagonals -2..=2 and edge weights +-1; forests only need +1
    /// because a sign change on any tree edge is a diagonal congruence.
    pub fn default_for(g: &RootedGraph) -> SearchGrid {
        let edge_values = if g.is_forest() {
            vec![rat(1)]
        } else {
            vec![rat(1), rat(-1)]
        };
        SearchGrid {
            diagonal_values: (-2..=2).map(rat).collect(),
            edge_values,
            mode: SearchMode::Exhaustive,
        }
    }

    fn validate(&self) -> Result<(), XiXiError> {
        if self.diagonal_values.is_empty() {
            return Err(XiXiError::BadGrid("no diagonal values".into()));
        }
        if self.edge_values.is_empty() {
            return Err(XiXiError::BadGrid("no edge values".into()));
        }
        if self.edge_values.iter().any(Rational::is_zero) {
            return Err(XiXiError::BadGrid(
                "edge value 0 would leave the graph's class".into(),
            ));
        }
        for (i, v) in self.diagonal_values.iter().enumerate() {
            if self.diagonal_values[i + 1..].contains(v) {
                return Err(XiXiError::BadGrid(format!("duplicate diagonal value {v}")));
            }
        }
        for (i, v) in self.edge_values.iter().enumerate() {
            if self.edge_values[i + 1..].contains(v) {
                return Err(XiXiError::BadGrid(format!("duplicate edge value {v}")));
            }
        }
        if let SearchMode::Randomized { samples: 0, .. } = self.mode {
            return Err(XiXiError::BadGrid("randomized mode with no samples".into()));
        }
        Ok(())
    }
}

/// Concrete candidate space for one graph: which edge slots vary and
/// how indices decode to matrices.
struct GridSpace<'a> {
    g: &'a RootedGraph,
    grid: &'a SearchGrid,
    edges: Vec<(usize, usize)>,
    /// Edges pinned to +1 by the spanning-forest normalization.
    pinned: Vec<bool>,
    free_edges: usize,
}

impl<'a> GridSpace<'a> {
    fn build(g: &'a RootedGraph, grid: &'a SearchGrid) -> Result<Self, XiXiError> {
        grid.validate()?;
        let edges: Vec<(usize, usize)> = g.edges().collect();
        // Signs on a spanning forest can be fixed by a +-1 diagonal
        // congruence, which preserves nullity pairs and transfer
        // verdicts; when the edge grid is exactly {+1, -1} this cuts
        // the space without losing any verdict.
        let mut pinned = vec![false; edges.len()];
        let plus = rat(1);
        let minus = rat(-1);
        let plus_minus: BTreeSet<&Rational> = [&plus, &minus].into_iter().collect();
        let grid_set: BTreeSet<&Rational> = grid.edge_values.iter().collect();
        if grid_set == plus_minus {
            let mut parent: Vec<usize> = (0..g.n()).collect();
            fn find(parent: &mut Vec<usize>, v: usize) -> usize {
                if parent[v] != v {
                    let r = find(parent, parent[v]);
                    parent[v] = r;
                }
                parent[v]
            }
            for (pos, &(u, v)) in edges.iter().enumerate() {
                let ru = find(&mut parent, u);
                let rv = find(&mut parent, v);
                if ru != rv {
                    parent[ru] = rv;
                    pinned[pos] = true;
                }
            }
        }
        let free_edges = pinned.iter().filter(|&&p| !p).count();
        Ok(GridSpace {
            g,
            grid,
            edges,
            pinned,
            free_edges,
        })
    }

    fn candidate_count(&self) -> u128 {
        let d = self.grid.diagonal_values.len() as u128;
        let e = self.grid.edge_values.len() as u128;
        d.pow(self.g.n() as u32) * e.pow(self.free_edges as u32)
    }

    fn assemble(&self, diag_digits: &[usize], edge_digits: &[usize]) -> RationalMatrix {
        let n = self.g.n();
        let mut m = RationalMatrix::zeros(n, n);
        for (v, &digit) in diag_digits.iter().enumerate() {
            m.set(v, v, self.grid.diagonal_values[digit].clone());
        }
        let mut free_pos = 0;
        for (pos, &(u, v)) in self.edges.iter().enumerate() {
            let value = if self.pinned[pos] {
                rat(1)
            } else {
                let value = self.grid.edge_values[edge_digits[free_pos]].clone();
                free_pos += 1;
                value
            };
            m.set(u, v, value.clone());
            m.set(v, u, value);
        }
        m
    }

    /// Index decoding for exhaustive mode: diagonal digits are most
    /// significant (vertex 0 on top), then free edge digits in edge
    /// order.
    fn decode(&self, mut idx: u64) -> RationalMatrix {
        let d = self.grid.diagonal_values.len() as u64;
        let e = self.grid.edge_values.len() as u64;
        let mut edge_digits = vec![0usize; self.free_edges];
        for slot in edge_digits.iter_mut().rev() {
            *slot = (idx % e) as usize;
            idx /= e;
        }
        let mut diag_digits = vec![0usize; self.g.n()];
        for slot in diag_digits.iter_mut().rev() {
            *slot = (idx % d) as usize;
            idx /= d;
        }
        debug_assert_eq!(idx, 0, "index beyond the candidate space");
        self.assemble(&diag_digits, &edge_digits)
    }

    /// Draw t of randomized mode.
    fn sample(&self, seed: u64, t: u64) -> RationalMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let diag_digits: Vec<usize> = (0..self.g.n())
            .map(|_| rng.gen_range(0..self.grid.diagonal_values.len()))
            .collect();
        let edge_digits: Vec<usize> = (0..self.free_edges)
            .map(|_| rng.gen_range(0..self.grid.edge_values.len()))
            .collect();
        self.assemble(&diag_digits, &edge_digits)
    }

    /// Number of scan steps and the mapping from step to candidate.
    fn plan(&self, cap: u64) -> Result<(u64, Plan), XiXiError> {
        match self.grid.mode {
            SearchMode::Exhaustive => {
                let count = self.candidate_count();
                if count > cap as u128 {
                    return Err(XiXiError::GridTooLarge {
                        candidates: count,
                        cap,
                    });
                }
                Ok((count as u64, Plan::Exhaustive))
            }
            SearchMode::Randomized { samples, seed } => Ok((samples, Plan::Randomized { seed })),
        }
    }

    fn candidate(&self, plan: Plan, t: u64) -> RationalMatrix {
        match plan {
            Plan::Exhaustive => self.decode(t),
            Plan::Randomized { seed } => self.sample(seed, t),
        }
    }
}

#[derive(Clone, Copy)]
enum Plan {
    Exhaustive,
    Randomized { seed: u64 },
}

/// First matrix in the class of g (grid order) whose nullity pair at
/// the root equals `target`, optionally insisting on the transfer
/// property; None when the scan exhausts without a hit.
pub fn search_certificate(
    g: &RootedGraph,
    target: NullityPair,
    require_snip: bool,
    grid: &SearchGrid,
) -> Result<Option<SnipCertificate>, XiXiError> {
    search_certificate_capped(g, target, require_snip, grid, DEFAULT_CANDIDATE_CAP)
}

pub fn search_certificate_capped(
    g: &RootedGraph,
    target: NullityPair,
    require_snip: bool,
    grid: &SearchGrid,
    cap: u64,
) -> Result<Option<SnipCertificate>, XiXiError> {
    if target.full.abs_diff(target.sub) > 1 {
        return Err(XiXiError::BadTarget {
            k: target.full,
            l: target.sub,
        });
    }
    let space = GridSpace::build(g, grid)?;
    let (steps, plan) = space.plan(cap)?;
    let root = g.root();
    let hit = (0..steps).into_par_iter().find_first(|&t| {
        let m = space.candidate(plan, t);
        nullity_pair(&m, root).expect("grid candidates are symmetric") == target
            && (!require_snip
                || has_isnip_direct(&m, g, root).expect("grid candidates match the graph"))
    });
    match hit {
        None => Ok(None),
        Some(t) => {
            let m = space.candidate(plan, t);
            Ok(Some(SnipCertificate::compute(g.clone(), m)?))
        }
    }
}

/// Every nullity pair attainable at the root over the grid, with the
/// transfer verdicts that accompany it. Sorted by pair then verdict.
pub fn enumerate_pairs(
    g: &RootedGraph,
    grid: &SearchGrid,
) -> Result<Vec<(NullityPair, bool)>, XiXiError> {
    enumerate_pairs_capped(g, grid, DEFAULT_CANDIDATE_CAP)
}

pub fn enumerate_pairs_capped(
    g: &RootedGraph,
    grid: &SearchGrid,
    cap: u64,
) -> Result<Vec<(NullityPair, bool)>, XiXiError> {
    let space = GridSpace::build(g, grid)?;
    let (steps, plan) = space.plan(cap)?;
    let root = g.root();
    let set = (0..steps)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc: BTreeSet<(NullityPair, bool)>, t| {
            let m = space.candidate(plan, t);
            let pair = nullity_pair(&m, root).expect("grid candidates are symmetric");
            let snip =
                has_isnip_direct(&m, g, root).expect("grid candidates match the graph");
            acc.insert((pair, snip));
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(set.into_iter().collect())
}

/// What a transfer-carrying pair (k, l) certifies: k + l when k <= l,
/// and 2l otherwise (a (l+1, l) pair converts to an (l, l) one).
fn certified_contribution(pair: NullityPair) -> usize {
    if pair.full <= pair.sub {
        pair.full + pair.sub
    } else {
        2 * pair.sub
    }
}

#[derive(Clone)]
struct BestWitness {
    score: usize,
    order: u64,
    matrix: RationalMatrix,
    pair: NullityPair,
}

fn better(a: Option<BestWitness>, b: Option<BestWitness>) -> Option<BestWitness> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.score, std::cmp::Reverse(y.order)) > (x.score, std::cmp::Reverse(x.order)) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Scan for the transfer-carrying candidate with the largest certified
/// contribution; ties go to the earliest enumeration index.
fn best_certified(
    g: &RootedGraph,
    grid: &SearchGrid,
    cap: u64,
) -> Result<Option<(usize, SnipCertificate)>, XiXiError> {
    let space = GridSpace::build(g, grid)?;
    let (steps, plan) = space.plan(cap)?;
    let root = g.root();
    let best = (0..steps)
        .into_par_iter()
        .fold(
            || None,
            |acc: Option<BestWitness>, t| {
                let m = space.candidate(plan, t);
                let pair = nullity_pair(&m, root).expect("grid candidates are symmetric");
                let score = certified_contribution(pair);
                if acc.as_ref().map_or(false, |b| b.score >= score) {
                    return acc;
                }
                let snip =
                    has_isnip_direct(&m, g, root).expect("grid candidates match the graph");
                if snip {
                    Some(BestWitness {
                        score,
                        order: t,
                        matrix: m,
                        pair,
                    })
                } else {
                    acc
                }
            },
        )
        .reduce(|| None, better);
    match best {
        None => Ok(None),
        Some(w) => {
            let cert = SnipCertificate::compute(g.clone(), w.matrix)?;
            debug_assert_eq!(cert.pair, w.pair);
            Ok(Some((w.score, cert)))
        }
    }
}

/// Lower-bound evidence for one rooted graph. All certification happens
/// on the root's connected component; `graph` keeps the input as given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiXiReport {
    pub graph: RootedGraph,
    /// Best transfer-certified contribution found by the search
    /// (0 when the scan found no transfer-carrying candidate).
    pub certified_lower: usize,
    /// Largest catalog level s whose minimal family has a member
    /// occurring as a rooted minor.
    pub minor_value: usize,
    /// The catalog tops out at 5; a saturated report only claims
    /// "at least 5".
    pub saturated: bool,
    /// Witness for `certified_lower`, when one exists.
    pub certificates: Vec<SnipCertificate>,
    /// e + 1 >= C(m, 2) with m = ceil((certified_lower + 3) / 2),
    /// evaluated on the root component.
    pub edge_bound_ok: bool,
}

/// Largest s in 0..=5 whose minimal family occurs in g as a rooted
/// minor; g must already be connected (use the root component).
fn minor_level(g: &RootedGraph) -> Result<usize, XiXiError> {
    for s in (0..=5usize).rev() {
        for pattern in minimal_minor_family(s)? {
            if g.contains_rooted_minor(&pattern)? {
                return Ok(s);
            }
        }
    }
    unreachable!("the single-vertex pattern is a rooted minor of every graph")
}

/// Structural certification only: the minor catalog descent, with the
/// search fields left empty.
pub fn xixi_minor_based(g: &RootedGraph) -> Result<XiXiReport, XiXiError> {
    let (comp, _) = g.root_component();
    let minor_value = minor_level(&comp)?;
    Ok(XiXiReport {
        graph: g.clone(),
        certified_lower: 0,
        minor_value,
        saturated: minor_value == 5,
        certificates: Vec::new(),
        edge_bound_ok: edge_bound_check(&comp, 0),
    })
}

/// Full report: minor descent plus a grid search for the best
/// transfer-certified nullity pair at the root.
pub fn xixi_report(g: &RootedGraph, grid: &SearchGrid) -> Result<XiXiReport, XiXiError> {
    xixi_report_capped(g, grid, DEFAULT_CANDIDATE_CAP)
}

pub fn xixi_report_capped(
    g: &RootedGraph,
    grid: &SearchGrid,
    cap: u64,
) -> Result<XiXiReport, XiXiError> {
    let (comp, _) = g.root_component();
    let minor_value = minor_level(&comp)?;
    let (certified_lower, certificates) = match best_certified(&comp, grid, cap)? {
        Some((score, cert)) => (score, vec![cert]),
        None => (0, Vec::new()),
    };
    Ok(XiXiReport {
        graph: g.clone(),
        certified_lower,
        minor_value,
        saturated: minor_value == 5,
        certificates,
        edge_bound_ok: edge_bound_check(&comp, certified_lower),
    })
}

/// Splits at a cut-vertex root: one part per component of the root's
/// component minus the root, each induced together with the root and
/// rooted there. Parts are ordered by their smallest original vertex.
pub fn cut_vertex_reduce(g: &RootedGraph) -> Result<Vec<RootedGraph>, XiXiError> {
    let (comp, _) = g.root_component();
    let r = comp.root();
    if !comp.is_cut_vertex(r) {
        return Err(XiXiError::NotACutVertex);
    }
    let mut parts = Vec::new();
    let remainder = comp.without_vertex(r)?;
    for piece in remainder.components() {
        let mut keep: Vec<usize> = piece
            .iter()
            .map(|&v| if v >= r { v + 1 } else { v })
            .collect();
        keep.push(r);
        keep.sort_unstable();
        parts.push(comp.induced(&keep));
    }
    Ok(parts)
}

/// Edge-count lower-bound sanity test: a graph whose parameter is at
/// least `lower` needs e + 1 >= C(m, 2) where m = ceil((lower + 3)/2).
pub fn edge_bound_check(g: &RootedGraph, lower: usize) -> bool {
    let m = (lower + 3).div_ceil(2);
    g.edge_count() + 1 >= m * (m - 1) / 2
}

/// Graph-complement sanity test on certified lower bounds for g and
/// its complement: (lower_g + lower_comp)^2 <= 8 n^2.
pub fn ng_bound_check(g: &RootedGraph, lower_g: usize, lower_comp: usize) -> bool {
    let sum = (lower_g + lower_comp) as u128;
    let n = g.n() as u128;
    sum * sum <= 8 * n * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rgraph::{family, Family};

    fn k(n: usize) -> RootedGraph {
        family(Family::Complete(n))
    }

    #[test]
    fn default_grid_shapes() {
        let star = family(Family::Star(4));
        let grid = SearchGrid::default_for(&star);
        assert_eq!(grid.edge_values, vec![rat(1)]);
        assert_eq!(grid.diagonal_values.len(), 5);

        let triangle_grid = SearchGrid::default_for(&k(3));
        assert_eq!(triangle_grid.edge_values.len(), 2);
    }

    #[test]
    fn normalization_pins_spanning_forest() {
        let triangle = k(3);
        let grid = SearchGrid::default_for(&triangle);
        let space = GridSpace::build(&triangle, &grid).unwrap();
        assert_eq!(space.free_edges, 1); // 3 edges, 2 on the spanning tree
        assert_eq!(space.candidate_count(), 125 * 2);

        let star = family(Family::Star(4));
        let star_grid = SearchGrid::default_for(&star);
        let star_space = GridSpace::build(&star, &star_grid).unwrap();
        assert_eq!(star_space.candidate_count(), 5u128.pow(5));
    }

    #[test]
    fn grid_validation() {
        let mut grid = SearchGrid::default_for(&k(2));
        grid.edge_values = vec![rat(0)];
        assert!(matches!(
            enumerate_pairs(&k(2), &grid),
            Err(XiXiError::BadGrid(_))
        ));
        let mut dup = SearchGrid::default_for(&k(2));
        dup.diagonal_values.push(rat(0));
        assert!(matches!(
            enumerate_pairs(&k(2), &dup),
            Err(XiXiError::BadGrid(_))
        ));
    }

    #[test]
    fn candidate_cap_applies() {
        let grid = SearchGrid::default_for(&k(3));
        assert!(matches!(
            enumerate_pairs_capped(&k(3), &grid, 10),
            Err(XiXiError::GridTooLarge { candidates: 250, .. })
        ));
    }

    #[test]
    fn enumerate_pairs_on_an_edge() {
        let pairs = enumerate_pairs(&k(2), &SearchGrid::default_for(&k(2))).unwrap();
        assert_eq!(
            pairs,
            vec![
                (NullityPair::new(0, 0), true),
                (NullityPair::new(0, 1), true),
                (NullityPair::new(1, 0), true),
            ]
        );
    }

    #[test]
    fn search_finds_lexicographic_first_witness() {
        // diagonal digits (-2,-2) decode first; the first (0,1) hit
        // needs the deleted-vertex diagonal to be zero
        let g = k(2);
        let cert = search_certificate(&g, NullityPair::new(0, 1), true, &SearchGrid::default_for(&g))
            .unwrap()
            .unwrap();
        assert_eq!(cert.pair, NullityPair::new(0, 1));
        assert_eq!(cert.matrix.at(0, 0), &rat(-2));
        assert_eq!(cert.matrix.at(1, 1), &rat(0));
        assert!(cert.verify());

        let missing = search_certificate(
            &g,
            NullityPair::new(1, 1),
            false,
            &SearchGrid::default_for(&g),
        )
        .unwrap();
        assert!(missing.is_none());

        assert!(matches!(
            search_certificate(&g, NullityPair::new(3, 1), false, &SearchGrid::default_for(&g)),
            Err(XiXiError::BadTarget { k: 3, l: 1 })
        ));
    }

    #[test]
    fn randomized_mode_is_reproducible() {
        let mut grid = SearchGrid::default_for(&k(3));
        grid.mode = SearchMode::Randomized {
            samples: 60,
            seed: 7,
        };
        let a = enumerate_pairs(&k(3), &grid).unwrap();
        let b = enumerate_pairs(&k(3), &grid).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn reports_on_small_catalog_graphs() {
        let r = xixi_report(&k(1), &SearchGrid::default_for(&k(1))).unwrap();
        assert_eq!((r.certified_lower, r.minor_value, r.saturated), (0, 0, false));
        assert!(r.edge_bound_ok);
        assert_eq!(r.certificates.len(), 1); // (0,0) carries the property

        let r = xixi_report(&k(2), &SearchGrid::default_for(&k(2))).unwrap();
        assert_eq!((r.certified_lower, r.minor_value), (1, 1));
        assert_eq!(r.certificates[0].pair, NullityPair::new(0, 1));

        let r = xixi_report(&k(3), &SearchGrid::default_for(&k(3))).unwrap();
        assert_eq!((r.certified_lower, r.minor_value), (2, 2));

        let paw_pendant = family(Family::Paw).with_root(3).unwrap();
        let r = xixi_report(&paw_pendant, &SearchGrid::default_for(&paw_pendant)).unwrap();
        assert_eq!((r.certified_lower, r.minor_value), (3, 3));
        assert!(!r.saturated);
        assert!(r.edge_bound_ok);
    }

    #[test]
    fn report_reduces_to_root_component() {
        // triangle plus two isolated vertices
        let g = RootedGraph::new(5, &[(0, 1), (0, 2), (1, 2)], 1).unwrap();
        let r = xixi_report(&g, &SearchGrid::default_for(&k(3))).unwrap();
        assert_eq!(r.minor_value, 2);
        assert_eq!(r.certified_lower, 2);
        assert_eq!(r.graph, g);
        assert_eq!(r.certificates[0].graph.n(), 3);

        let text = serde_json::to_string(&r).unwrap();
        let back: XiXiReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn minor_only_report() {
        let s211_leaf = family(Family::S211).with_root(4).unwrap();
        let r = xixi_minor_based(&s211_leaf).unwrap();
        assert_eq!(r.minor_value, 3);
        assert_eq!(r.certified_lower, 0);
        assert!(r.certificates.is_empty());
        assert!(r.edge_bound_ok);
    }

    #[test]
    fn cut_vertex_reduction_splits_a_paw() {
        let paw = family(Family::Paw); // rooted at the cut vertex 0
        let parts = cut_vertex_reduce(&paw).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], k(3));
        assert_eq!(parts[1], k(2));

        assert!(matches!(
            cut_vertex_reduce(&k(3)),
            Err(XiXiError::NotACutVertex)
        ));
    }

    #[test]
    fn cut_vertex_reduction_keeps_original_labels_sorted() {
        // path 0-1-2 rooted at the middle
        let p3_mid = family(Family::Path(3)).with_root(1).unwrap();
        let parts = cut_vertex_reduce(&p3_mid).unwrap();
        assert_eq!(parts.len(), 2);
        // part {0,1} rooted at 1, part {1,2} rooted at 0 after relabel
        assert_eq!(parts[0], k(2).with_root(1).unwrap());
        assert_eq!(parts[1], k(2));
    }

    #[test]
    fn bound_checks() {
        assert!(edge_bound_check(&k(4), 4)); // 6 + 1 >= C(4,2)
        let sparse = family(Family::Path(4));
        assert!(!edge_bound_check(&sparse, 4)); // 3 + 1 < 6
        assert!(edge_bound_check(&sparse, 0)); // m = 2 always passes

        assert!(ng_bound_check(&k(3), 2, 2));
        assert!(!ng_bound_check(&k(1), 2, 1)); // 9 > 8
    }
}
