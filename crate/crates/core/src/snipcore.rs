//! Nullity pairs and the null-vector transfer property.
//!
//! For a symmetric matrix A and a vertex i, the pair
//! (null(A), null(A(i))) classifies i as downer, neutral, or upper
//! (the two nullities can differ by at most one). The transfer
//! property at i asks that the zero matrix be the only symmetric X
//! supported off the graph and off the diagonal with (AX)[r,:] = 0 for
//! every row r except possibly i; dropping the exception gives the
//! classical full-strength property. Three independent deciders are
//! provided and must always agree: a direct rank computation, a
//! case split over the index type, and a spanning test on the kernel
//! of A with row i removed.

use crate::ratmat::{Rational, RationalMatrix, RatMatError};
use crate::rgraph::RootedGraph;
use num::traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SnipError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("vertex is not neutral for this matrix")]
    NotNeutral,
    #[error("the rows given do not form a linearly independent basis")]
    NotABasis,
    #[error("matrix entries do not match the graph support")]
    NotInPattern,
}

impl From<RatMatError> for SnipError {
    fn from(e: RatMatError) -> Self {
        SnipError::ShapeMismatch(e.to_string())
    }
}

/// (null(A), null(A(i))), ordered full matrix first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NullityPair {
    pub full: usize,
    pub sub: usize,
}

impl NullityPair {
    pub fn new(full: usize, sub: usize) -> Self {
        NullityPair { full, sub }
    }
}

impl fmt::Display for NullityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.full, self.sub)
    }
}

impl Serialize for NullityPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.full, self.sub].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NullityPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [full, sub] = <[usize; 2]>::deserialize(deserializer)?;
        Ok(NullityPair { full, sub })
    }
}

/// How null(A(i)) moves relative to null(A).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexType {
    /// null(A(i)) = null(A) + 1
    Upper,
    /// null(A(i)) = null(A)
    Neutral,
    /// null(A(i)) = null(A) - 1
    Downer,
}

impl fmt::Display for IndexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IndexType::Upper => "upper",
            IndexType::Neutral => "neutral",
            IndexType::Downer => "downer",
        };
        f.write_str(name)
    }
}

fn check_square_symmetric(a: &RationalMatrix) -> Result<(), SnipError> {
    if !a.is_square() {
        return Err(SnipError::ShapeMismatch(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if !a.is_symmetric() {
        return Err(SnipError::ShapeMismatch("matrix is not symmetric".into()));
    }
    Ok(())
}

fn check_vertex(a: &RationalMatrix, i: usize) -> Result<(), SnipError> {
    if i >= a.rows() {
        return Err(SnipError::IndexOutOfRange {
            index: i,
            size: a.rows(),
        });
    }
    Ok(())
}

fn check_matches_graph(a: &RationalMatrix, g: &RootedGraph) -> Result<(), SnipError> {
    check_square_symmetric(a)?;
    if a.rows() != g.n() {
        return Err(SnipError::ShapeMismatch(format!(
            "matrix order {} does not match graph on {} vertices",
            a.rows(),
            g.n()
        )));
    }
    Ok(())
}

/// Does A lie in the matrix class of g? With `strict` the off-diagonal
/// support must equal the edge set; otherwise edges may also carry
/// zero (the closure of the class).
pub fn in_pattern(a: &RationalMatrix, g: &RootedGraph, strict: bool) -> Result<bool, SnipError> {
    check_matches_graph(a, g)?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let zero = a.at(u, v).is_zero();
            if g.has_edge(u, v) {
                if strict && zero {
                    return Ok(false);
                }
            } else if !zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn nullity_pair(a: &RationalMatrix, i: usize) -> Result<NullityPair, SnipError> {
    check_square_symmetric(a)?;
    check_vertex(a, i)?;
    let sub = a.delete_row_col(i).expect("shape and index were validated");
    Ok(NullityPair {
        full: a.nullity(),
        sub: sub.nullity(),
    })
}

pub fn index_type(a: &RationalMatrix, i: usize) -> Result<IndexType, SnipError> {
    let pair = nullity_pair(a, i)?;
    Ok(classify(pair))
}

fn classify(pair: NullityPair) -> IndexType {
    if pair.sub == pair.full + 1 {
        IndexType::Upper
    } else if pair.sub == pair.full {
        IndexType::Neutral
    } else {
        assert!(
            pair.full == pair.sub + 1,
            "nullity pair {pair} violates the one-step interlacing bound"
        );
        IndexType::Downer
    }
}

/// The unique t such that i becomes a downer for A + t*E_ii, defined
/// exactly when i is neutral. Writing C = A(i) and b for the border
/// column, t = x^T b - a_ii for any x with Cx = b; neutrality makes b
/// consistent and the value independent of the chosen solution.
pub fn neutral_shift(a: &RationalMatrix, i: usize) -> Result<Rational, SnipError> {
    let pair = nullity_pair(a, i)?;
    if classify(pair) != IndexType::Neutral {
        return Err(SnipError::NotNeutral);
    }
    let n = a.rows();
    let c = a.delete_row_col(i).expect("shape and index were validated");
    let others: Vec<usize> = (0..n).filter(|&r| r != i).collect();
    let b: Vec<Rational> = others.iter().map(|&r| a.at(r, i).clone()).collect();
    let x = c
        .in_column_space(&b)
        .expect("border of a neutral vertex lies in the column space");
    let mut t = -a.at(i, i).clone();
    for (r, value) in b.iter().enumerate() {
        t += x[r].clone() * value;
    }
    // sanity: the shift really flips i to a downer
    let mut shifted = a.clone();
    shifted.set(i, i, a.at(i, i).clone() + &t);
    let after = nullity_pair(&shifted, i).expect("shifted matrix stays symmetric");
    assert!(
        after.full == after.sub + 1,
        "neutral shift failed to produce a downer"
    );
    Ok(t)
}

/// Positions (p, q) with p < q that are non-edges of g: the free
/// off-diagonal supports available to a blocking matrix X.
fn free_positions(g: &RootedGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..g.n() {
        for q in p + 1..g.n() {
            if !g.has_edge(p, q) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Rank test shared by the full-strength and single-row-relaxed
/// deciders. Unknowns are the free off-diagonal entries of X; each
/// kept row r and column c of AX contributes the linear constraint
/// sum over free (p,q) of x_pq * (A[r,p][c=q] + A[r,q][c=p]) = 0.
/// The property holds iff only X = 0 satisfies all constraints.
fn blocking_system_is_injective(
    a: &RationalMatrix,
    g: &RootedGraph,
    skip_row: Option<usize>,
) -> bool {
    let free = free_positions(g);
    if free.is_empty() {
        return true;
    }
    let n = g.n();
    let mut rows = Vec::new();
    for r in 0..n {
        if skip_row == Some(r) {
            continue;
        }
        for c in 0..n {
            let mut row = Vec::with_capacity(free.len());
            for &(p, q) in &free {
                let mut coeff = Rational::zero();
                if c == q {
                    coeff += a.at(r, p);
                }
                if c == p {
                    coeff += a.at(r, q);
                }
                row.push(coeff);
            }
            rows.push(row);
        }
    }
    let system = RationalMatrix::from_rows(rows).expect("constraint rows share a length");
    system.rank() == free.len()
}

/// Full-strength transfer property: X = 0 is the only symmetric X with
/// support off g and off the diagonal satisfying AX = 0.
pub fn has_sap(a: &RationalMatrix, g: &RootedGraph) -> Result<bool, SnipError> {
    check_matches_graph(a, g)?;
    Ok(blocking_system_is_injective(a, g, None))
}

/// Single-vertex relaxation at i: rows of AX other than i must vanish.
pub fn has_isnip_direct(a: &RationalMatrix, g: &RootedGraph, i: usize) -> Result<bool, SnipError> {
    check_matches_graph(a, g)?;
    check_vertex(a, i)?;
    Ok(blocking_system_is_injective(a, g, Some(i)))
}

/// Same decision routed through the index type of i: downers reduce to
/// the full-strength property of A itself, neutral vertices to the
/// diagonal shift that makes i a downer, and uppers to A(i) against
/// g - i.
pub fn has_isnip_cases(a: &RationalMatrix, g: &RootedGraph, i: usize) -> Result<bool, SnipError> {
    check_matches_graph(a, g)?;
    check_vertex(a, i)?;
    match index_type(a, i)? {
        IndexType::Downer => has_sap(a, g),
        IndexType::Neutral => {
            let t = neutral_shift(a, i)?;
            let mut shifted = a.clone();
            shifted.set(i, i, a.at(i, i).clone() + t);
            has_sap(&shifted, g)
        }
        IndexType::Upper => {
            let sub = a.delete_row_col(i).expect("shape and index were validated");
            let g_sub = g
                .without_vertex(i)
                .expect("graph order matches the matrix");
            has_sap(&sub, &g_sub)
        }
    }
}

/// Do the rows u_1..u_n of `basis` provide every symmetric m x m matrix
/// as a combination of vertex ingredients u_j u_j^T and edge
/// ingredients u_j u_k^T + u_k u_j^T over the edges of g? Requires the
/// rows to span a space of dimension equal to the column count.
pub fn gives_full_recipe(basis: &RationalMatrix, g: &RootedGraph) -> Result<bool, SnipError> {
    if basis.rows() != g.n() {
        return Err(SnipError::ShapeMismatch(format!(
            "basis has {} rows but the graph has {} vertices",
            basis.rows(),
            g.n()
        )));
    }
    let m = basis.cols();
    if m == 0 {
        return Ok(true);
    }
    if basis.rank() != m {
        return Err(SnipError::NotABasis);
    }
    let dim = m * (m + 1) / 2;
    let vectorize = |mat: &dyn Fn(usize, usize) -> Rational| -> Vec<Rational> {
        let mut row = Vec::with_capacity(dim);
        for p in 0..m {
            for q in p..m {
                row.push(mat(p, q));
            }
        }
        row
    };
    let u = |j: usize, p: usize| basis.at(j, p).clone();
    let mut rows = Vec::new();
    for j in 0..g.n() {
        rows.push(vectorize(&|p, q| u(j, p) * u(j, q)));
    }
    for (j, k) in g.edges() {
        rows.push(vectorize(&|p, q| u(j, p) * u(k, q) + u(k, p) * u(j, q)));
    }
    let system = RationalMatrix::from_rows(rows).expect("ingredient rows share a length");
    Ok(system.rank() == dim)
}

/// Third decider: the transfer property at i holds iff the kernel of A
/// with row i deleted gives the full recipe over g.
pub fn has_isnip_recipe(a: &RationalMatrix, g: &RootedGraph, i: usize) -> Result<bool, SnipError> {
    check_matches_graph(a, g)?;
    check_vertex(a, i)?;
    let trimmed = a.delete_row(i).expect("shape and index were validated");
    gives_full_recipe(&trimmed.kernel_basis(), g)
}

/// A matrix in the class of a rooted graph, its nullity pair at the
/// root, and the transfer verdict computed three independent ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnipCertificate {
    pub graph: RootedGraph,
    pub matrix: RationalMatrix,
    pub pair: NullityPair,
    pub index_type: IndexType,
    pub snip_direct: bool,
    pub snip_cases: bool,
    pub snip_recipe: bool,
}

impl SnipCertificate {
    /// Evaluates all fields for a matrix strictly in the class of g,
    /// at the root of g.
    pub fn compute(graph: RootedGraph, matrix: RationalMatrix) -> Result<Self, SnipError> {
        if !in_pattern(&matrix, &graph, true)? {
            return Err(SnipError::NotInPattern);
        }
        let i = graph.root();
        let pair = nullity_pair(&matrix, i)?;
        Ok(SnipCertificate {
            snip_direct: has_isnip_direct(&matrix, &graph, i)?,
            snip_cases: has_isnip_cases(&matrix, &graph, i)?,
            snip_recipe: has_isnip_recipe(&matrix, &graph, i)?,
            index_type: classify(pair),
            pair,
            graph,
            matrix,
        })
    }

    /// True when every stored field matches a fresh evaluation and the
    /// three verdicts agree.
    pub fn verify(&self) -> bool {
        match SnipCertificate::compute(self.graph.clone(), self.matrix.clone()) {
            Ok(fresh) => fresh == *self && self.verdicts_agree(),
            Err(_) => false,
        }
    }

    pub fn verdicts_agree(&self) -> bool {
        self.snip_direct == self.snip_cases && self.snip_cases == self.snip_recipe
    }

    /// The agreed verdict.
    pub fn snip(&self) -> bool {
        debug_assert!(self.verdicts_agree());
        self.snip_direct
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    graph: RootedGraph,
    matrix: RationalMatrix,
    pair: NullityPair,
    index: IndexType,
    snip: bool,
}

impl Serialize for SnipCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = CertificateRepr {
            graph: self.graph.clone(),
            matrix: self.matrix.clone(),
            pair: self.pair,
            index: self.index_type,
            snip: self.snip_direct,
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SnipCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CertificateRepr::deserialize(deserializer)?;
        if repr.graph.n() != repr.matrix.rows() || !repr.matrix.is_square() {
            return Err(D::Error::custom(
                "certificate matrix does not match its graph",
            ));
        }
        Ok(SnipCertificate {
            graph: repr.graph,
            matrix: repr.matrix,
            pair: repr.pair,
            index_type: repr.index,
            snip_direct: repr.snip,
            snip_cases: repr.snip,
            snip_recipe: repr.snip,
        })
    }
}
