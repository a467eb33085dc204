//! Constructive matrix families and nullity-pair staircase moves.
//!
//! The catalog matrices realize the extreme nullity pair (3, 2) with
//! the transfer property on the six minimal forbidden graphs. Each is
//! a sum of clique blocks (all-ones on a vertex subset, diagonal
//! included) and star blocks (a hub attached by unit weights, all
//! diagonals zero). The staircase moves walk a nullity pair down to
//! (0, 0) or (1, 0) by diagonal bumps, border perturbations, and
//! small rank-one corrections, each certified by recomputing the pair
//! of the produced matrix.

use crate::ratmat::{format_rational, rat, Rational, RationalMatrix};
use crate::rgraph::{support_graph, RootedGraph};
use crate::snipcore::{nullity_pair, NullityPair, SnipError};
use num::traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("both nullities must be positive to step southwest")]
    PairTooSmall,
    #[error("a border perturbation needs a neutral square pair (k+1, k+1)")]
    NotNeutralSquare,
    #[error("the trailing principal block has a trivial kernel")]
    DegenerateKernel,
    #[error("a rank-one correction needs a pair of shape (k, k+1)")]
    WrongPairShape,
    #[error("no dyadic epsilon down to 2^-60 produced the expected pair")]
    NoSmallEps,
    #[error("perturbation size must be nonzero")]
    ZeroEps,
    #[error("leaf weight must be nonzero")]
    ZeroWeight,
    #[error(transparent)]
    Snip(#[from] SnipError),
}

/// Names for the six catalog matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PaperMatrixId {
    A0,
    A1,
    B0,
    B1,
    B2,
    B3,
}

impl PaperMatrixId {
    pub const ALL: [PaperMatrixId; 6] = [
        PaperMatrixId::A0,
        PaperMatrixId::A1,
        PaperMatrixId::B0,
        PaperMatrixId::B1,
        PaperMatrixId::B2,
        PaperMatrixId::B3,
    ];
}

impl fmt::Display for PaperMatrixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PaperMatrixId::A0 => "A0",
            PaperMatrixId::A1 => "A1",
            PaperMatrixId::B0 => "B0",
            PaperMatrixId::B1 => "B1",
            PaperMatrixId::B2 => "B2",
            PaperMatrixId::B3 => "B3",
        };
        f.write_str(name)
    }
}

impl FromStr for PaperMatrixId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A0" => Ok(PaperMatrixId::A0),
            "A1" => Ok(PaperMatrixId::A1),
            "B0" => Ok(PaperMatrixId::B0),
            "B1" => Ok(PaperMatrixId::B1),
            "B2" => Ok(PaperMatrixId::B2),
            "B3" => Ok(PaperMatrixId::B3),
            other => Err(format!(
                "unknown catalog matrix {other:?} (expected A0, A1, or B0..B3)"
            )),
        }
    }
}

/// The named catalog matrix together with its support graph, rooted at
/// vertex 0.
pub fn paper_matrix(id: PaperMatrixId) -> (RootedGraph, RationalMatrix) {
    let rows: &[&[i64]] = match id {
        PaperMatrixId::A0 => &[
            &[1, 1, 1, 1],
            &[1, 1, 1, 1],
            &[1, 1, 1, 1],
            &[1, 1, 1, 1],
        ],
        PaperMatrixId::A1 => &[
            &[0, 0, 1, 1, 1],
            &[0, 0, 1, 1, 1],
            &[1, 1, 0, 0, 0],
            &[1, 1, 0, 0, 0],
            &[1, 1, 0, 0, 0],
        ],
        PaperMatrixId::B0 => &[
            &[2, 1, 1, 0, 1, 1],
            &[1, 1, 1, 0, 0, 0],
            &[1, 1, 2, 1, 1, 0],
            &[0, 0, 1, 1, 1, 0],
            &[1, 0, 1, 1, 2, 1],
            &[1, 0, 0, 0, 1, 1],
        ],
        PaperMatrixId::B1 => &[
            &[1, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 1, 1, 0, 1],
            &[0, 0, 1, 1, 1, 0, 0],
            &[1, 0, 1, 1, 2, 1, 0],
            &[1, 0, 0, 0, 1, 1, 0],
            &[1, 1, 1, 0, 0, 0, 0],
        ],
        PaperMatrixId::B2 => &[
            &[1, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 1, 1, 0, 1],
            &[1, 0, 0, 0, 1, 1, 0, 0],
            &[1, 1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0],
        ],
        PaperMatrixId::B3 => &[
            &[0, 0, 0, 0, 0, 0, 1, 0, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0, 1],
            &[1, 1, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 1, 1, 0, 0, 0],
        ],
    };
    let matrix = RationalMatrix::from_int_rows(rows);
    let graph = support_graph(&matrix, 0).expect("catalog matrices are symmetric");
    (graph, matrix)
}

/// Sum of clique blocks and star blocks on n vertices. A clique block
/// on a subset S adds the all-ones matrix indexed by S (diagonal
/// included); a star block (hub, leaves) adds unit entries between the
/// hub and each leaf. Block vertices must be distinct and in range.
pub fn star_clique_sum(
    n: usize,
    cliques: &[Vec<usize>],
    stars: &[(usize, Vec<usize>)],
) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    let mut bump = |r: usize, c: usize| {
        assert!(r < n && c < n, "block vertex out of range");
        let value = m.at(r, c).clone() + rat(1);
        m.set(r, c, value);
    };
    for block in cliques {
        for (idx, &u) in block.iter().enumerate() {
            assert!(
                !block[idx + 1..].contains(&u),
                "clique block repeats vertex {u}"
            );
            for &v in block {
                bump(u, v);
            }
        }
    }
    for (hub, leaves) in stars {
        for (idx, &leaf) in leaves.iter().enumerate() {
            assert!(leaf != *hub, "star hub {hub} listed as its own leaf");
            assert!(
                !leaves[idx + 1..].contains(&leaf),
                "star block repeats leaf {leaf}"
            );
            bump(*hub, leaf);
            bump(leaf, *hub);
        }
    }
    m
}

/// One staircase move, the matrix it produced, and that matrix's
/// freshly computed nullity pair at the same vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbStep {
    pub kind: StepKind,
    pub matrix: RationalMatrix,
    pub pair: NullityPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    /// Diagonal bump at `bumped`, moving (k+1, l+1) to (k, l).
    Sw { bumped: usize },
    /// Border perturbation along a kernel vector of A(i), moving
    /// (k+1, k+1) to (k, k+1).
    West { eps: Rational },
    /// Rank-one correction of A(i) by the border, moving (k, k+1) to
    /// (k, k).
    South { eps: Rational },
}

impl Serialize for StepKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StepKind", 2)?;
        match self {
            StepKind::Sw { bumped } => {
                st.serialize_field("op", "sw")?;
                st.serialize_field("bumped", bumped)?;
            }
            StepKind::West { eps } => {
                st.serialize_field("op", "west")?;
                st.serialize_field("eps", &format_rational(eps))?;
            }
            StepKind::South { eps } => {
                st.serialize_field("op", "south")?;
                st.serialize_field("eps", &format_rational(eps))?;
            }
        }
        st.end()
    }
}

impl Serialize for PerturbStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PerturbStep", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.serialize_field("pair", &self.pair)?;
        st.end()
    }
}

/// Bump one diagonal entry to shrink both nullities by one. Requires
/// pair (k+1, l+1) with k, l >= 0. The kernel of A always contains a
/// vector vanishing at i under that precondition; the bump lands on
/// its first support vertex.
pub fn sw_step(a: &RationalMatrix, i: usize) -> Result<PerturbStep, StepError> {
    let pair = nullity_pair(a, i)?;
    if pair.full == 0 || pair.sub == 0 {
        return Err(StepError::PairTooSmall);
    }
    let kernel = a.kernel_basis();
    let column = |c: usize| -> Vec<Rational> {
        (0..kernel.rows()).map(|r| kernel.at(r, c).clone()).collect()
    };
    let pivot = (0..kernel.cols()).find(|&c| !kernel.at(i, c).is_zero());
    let v: Vec<Rational> = match pivot {
        None => column(0),
        Some(p) => {
            // eliminate coordinate i from another basis column
            let other = (0..kernel.cols()).find(|&c| c != p).unwrap_or_else(|| {
                unreachable!(
                    "a one-dimensional kernel meeting coordinate {i} would force \
                     null(A(i)) = null(A) - 1 = 0"
                )
            });
            let scale = kernel.at(i, other) / kernel.at(i, p);
            column(other)
                .into_iter()
                .zip(column(p))
                .map(|(o, pv)| o - &scale * pv)
                .collect()
        }
    };
    let bumped = v
        .iter()
        .position(|x| !x.is_zero())
        .expect("eliminated kernel vector stays nonzero");
    let mut matrix = a.clone();
    matrix.set(bumped, bumped, matrix.at(bumped, bumped).clone() + rat(1));
    let pair = nullity_pair(&matrix, i)?;
    Ok(PerturbStep {
        kind: StepKind::Sw { bumped },
        matrix,
        pair,
    })
}

/// Perturb the border column at i along a kernel vector of A(i),
/// scaled by eps, to break a neutral square pair (k+1, k+1) down to
/// (k, k+1). The kernel vector is the first basis column, normalized
/// to leading entry one.
pub fn west_step(a: &RationalMatrix, i: usize, eps: &Rational) -> Result<PerturbStep, StepError> {
    if eps.is_zero() {
        return Err(StepError::ZeroEps);
    }
    let pair = nullity_pair(a, i)?;
    if pair.full != pair.sub || pair.full == 0 {
        return Err(StepError::NotNeutralSquare);
    }
    let c = a
        .delete_row_col(i)
        .expect("pair computation validated shape and index");
    let kernel = c.kernel_basis();
    if kernel.cols() == 0 {
        return Err(StepError::DegenerateKernel);
    }
    let lead = (0..kernel.rows())
        .map(|r| kernel.at(r, 0))
        .find(|x| !x.is_zero())
        .expect("kernel basis columns are nonzero")
        .clone();
    let others: Vec<usize> = (0..a.rows()).filter(|&r| r != i).collect();
    let mut matrix = a.clone();
    for (sub_r, &r) in others.iter().enumerate() {
        let delta = eps * kernel.at(sub_r, 0) / &lead;
        let value = a.at(r, i).clone() + delta;
        matrix.set(r, i, value.clone());
        matrix.set(i, r, value);
    }
    let pair = nullity_pair(&matrix, i)?;
    Ok(PerturbStep {
        kind: StepKind::West { eps: eps.clone() },
        matrix,
        pair,
    })
}

/// Add eps * b b^T to A(i), where b is the border column at i, to close
/// a (k, k+1) pair to (k, k). Tries eps = 1, 1/2, 1/4, ... down to
/// 2^-60 and keeps the first size that lands on (k, k).
pub fn south_step(a: &RationalMatrix, i: usize) -> Result<PerturbStep, StepError> {
    let pair = nullity_pair(a, i)?;
    if pair.sub != pair.full + 1 {
        return Err(StepError::WrongPairShape);
    }
    let others: Vec<usize> = (0..a.rows()).filter(|&r| r != i).collect();
    let border: Vec<Rational> = others.iter().map(|&r| a.at(r, i).clone()).collect();
    let target = NullityPair::new(pair.full, pair.full);
    for t in 0..=60u32 {
        let eps = Rational::new(num::BigInt::one(), num::BigInt::one() << t as usize);
        let mut matrix = a.clone();
        for (p, &r) in others.iter().enumerate() {
            for (q, &c) in others.iter().enumerate() {
                let value = a.at(r, c).clone() + &eps * &border[p] * &border[q];
                matrix.set(r, c, value);
            }
        }
        let fresh = nullity_pair(&matrix, i)?;
        if fresh == target {
            return Ok(PerturbStep {
                kind: StepKind::South { eps },
                matrix,
                pair: fresh,
            });
        }
    }
    Err(StepError::NoSmallEps)
}

/// Border a matrix with one new vertex of diagonal value `diag`,
/// attached to vertex j of B with weight `weight`. The new vertex
/// takes index 0 and the old vertex r becomes r + 1.
pub fn append_leaf_matrix(
    b: &RationalMatrix,
    j: usize,
    diag: &Rational,
    weight: &Rational,
) -> Result<RationalMatrix, StepError> {
    if !b.is_square() || !b.is_symmetric() {
        return Err(StepError::Snip(SnipError::ShapeMismatch(
            "leaf can only be appended to a symmetric matrix".into(),
        )));
    }
    if j >= b.rows() {
        return Err(StepError::Snip(SnipError::IndexOutOfRange {
            index: j,
            size: b.rows(),
        }));
    }
    if weight.is_zero() {
        return Err(StepError::ZeroWeight);
    }
    let n = b.rows();
    let mut m = RationalMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, diag.clone());
    m.set(0, j + 1, weight.clone());
    m.set(j + 1, 0, weight.clone());
    for r in 0..n {
        for c in 0..n {
            m.set(r + 1, c + 1, b.at(r, c).clone());
        }
    }
    Ok(m)
}
