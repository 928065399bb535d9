//! The standardized abelian Cayley graph model.
//!
//! A connected finite-degree Cayley graph on an abelian group is presented
//! here as `Cay(Z^m/H, {H±e_1, …, H±e_m})` where the relation lattice `H`
//! is the integer column span of an `m x r` matrix. This module builds such
//! matrices from group descriptions (circulants, integer distance sets,
//! cube-like groups, generic quotients), converts between matrices and
//! circulant/distance form, and applies the structural row/column
//! operations that leave the graph unchanged or replace it by an isomorph.

use crate::linalg::{
    cross_product, det, gcd_vec, hnf, kernel_mod_lattice, serde_bigint, serde_bigint_vec,
    HermiteForm, IntMatrix, LinalgError,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An integer relation matrix presenting a standardized abelian Cayley
/// graph; `rows()` is its dimension (generator count) and `cols()` its rank.
pub type HeubergerMatrix = IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators only span a subgroup of index {}", .index.as_ref().map(|i| i.to_string()).unwrap_or_else(|| "infinity".into()))]
    NotGenerating { index: Option<BigInt> },
    #[error("modulus must be positive, got {0}")]
    InvalidModulus(BigInt),
    #[error("connection {0} is 0 modulo the modulus")]
    ZeroConnection(BigInt),
    #[error("entries must be positive, got {0}")]
    NonPositive(BigInt),
    #[error("duplicate entry {0}")]
    Duplicate(String),
    #[error("entries must have gcd 1, got gcd {0}")]
    GcdNotOne(BigInt),
    #[error("need at least two distances")]
    TooFewDistances,
    #[error("cube dimension must be in 1..=63, got {0}")]
    BadCubeDimension(usize),
    #[error("cube generator {0:#b} is zero or has bits outside the dimension")]
    BadCubeGenerator(u64),
    #[error("a Heuberger matrix needs at least one row")]
    NoGenerators,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Reasons a matrix fails to convert to distance or circulant form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConversionError {
    #[error(transparent)]
    Shape(#[from] LinalgError),
    #[error("determinant is 0 (infinite quotient)")]
    ZeroDeterminant,
    #[error("cross product is the zero vector")]
    ZeroCrossProduct,
    #[error("gcd(v) = {0}")]
    CrossGcd(BigInt),
}

/// A group-with-generators description from which a Heuberger matrix can
/// be derived. Generator lists are deduplicated as `±` pairs when the
/// matrix is built, matching the symmetric-set convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Circulant {
        #[serde(with = "serde_bigint")]
        modulus: BigInt,
        #[serde(with = "serde_bigint_vec")]
        connections: Vec<BigInt>,
    },
    DistanceSet {
        #[serde(with = "serde_bigint_vec")]
        distances: Vec<BigInt>,
    },
    CubeLike {
        dim: usize,
        /// Each generator is a nonzero bitmask over `dim` coordinates.
        generators: Vec<u64>,
    },
    Quotient {
        relations: IntMatrix,
        generator_images: IntMatrix,
    },
}

impl GroupSpec {
    /// The matrices of the defining homomorphism: generator images as the
    /// columns of `images`, ambient relations as the columns of
    /// `relations`. Generators are validated and `±`-deduplicated here.
    pub fn phi_matrices(&self) -> Result<(IntMatrix, IntMatrix), SpecError> {
        match self {
            GroupSpec::Circulant { modulus, connections } => {
                if !modulus.is_positive() {
                    return Err(SpecError::InvalidModulus(modulus.clone()));
                }
                if connections.is_empty() {
                    return Err(SpecError::EmptyGenerators);
                }
                let mut kept: Vec<BigInt> = Vec::new();
                for c in connections {
                    if !c.is_positive() {
                        return Err(SpecError::NonPositive(c.clone()));
                    }
                    let r = c.mod_floor(modulus);
                    if r.is_zero() {
                        return Err(SpecError::ZeroConnection(c.clone()));
                    }
                    let neg = modulus - &r;
                    if !kept.iter().any(|k| *k == r || *k == neg) {
                        kept.push(r);
                    }
                }
                let images = IntMatrix::row_vector(kept);
                let relations = IntMatrix::row_vector(vec![modulus.clone()]);
                Ok((images, relations))
            }
            GroupSpec::DistanceSet { distances } => {
                if distances.is_empty() {
                    return Err(SpecError::EmptyGenerators);
                }
                for d in distances {
                    if !d.is_positive() {
                        return Err(SpecError::NonPositive(d.clone()));
                    }
                }
                let mut seen = distances.to_vec();
                seen.sort();
                for w in seen.windows(2) {
                    if w[0] == w[1] {
                        return Err(SpecError::Duplicate(w[0].to_string()));
                    }
                }
                let images = IntMatrix::row_vector(distances.clone());
                Ok((images, IntMatrix::zero(1, 0)))
            }
            GroupSpec::CubeLike { dim, generators } => {
                let n = *dim;
                if n == 0 || n > 63 {
                    return Err(SpecError::BadCubeDimension(n));
                }
                if generators.is_empty() {
                    return Err(SpecError::EmptyGenerators);
                }
                let full: u64 = if n == 63 { !0 >> 1 } else { (1u64 << n) - 1 };
                let mut seen = std::collections::HashSet::new();
                for &g in generators {
                    if g == 0 || g & !full != 0 {
                        return Err(SpecError::BadCubeGenerator(g));
                    }
                    if !seen.insert(g) {
                        return Err(SpecError::Duplicate(format!("{g:#b}")));
                    }
                }
                let mut images = IntMatrix::zero(n, generators.len());
                for (j, &g) in generators.iter().enumerate() {
                    for i in 0..n {
                        if g >> i & 1 == 1 {
                            images[(i, j)] = BigInt::one();
                        }
                    }
                }
                let mut relations = IntMatrix::zero(n, n);
                for i in 0..n {
                    relations[(i, i)] = BigInt::from(2);
                }
                Ok((images, relations))
            }
            GroupSpec::Quotient { relations, generator_images } => {
                if generator_images.cols() == 0 {
                    return Err(SpecError::EmptyGenerators);
                }
                if generator_images.rows() != relations.rows() {
                    return Err(LinalgError::DimensionMismatch {
                        left: generator_images.rows(),
                        right: relations.rows(),
                    }
                    .into());
                }
                let rel_form = hnf(relations);
                let mut kept_cols: Vec<Vec<BigInt>> = Vec::new();
                for j in 0..generator_images.cols() {
                    let g = generator_images.col(j);
                    let dup = kept_cols.iter().any(|k| {
                        let diff: Vec<BigInt> = g.iter().zip(k).map(|(a, b)| a - b).collect();
                        let sum: Vec<BigInt> = g.iter().zip(k).map(|(a, b)| a + b).collect();
                        rel_form.contains(&diff) || rel_form.contains(&sum)
                    });
                    if !dup {
                        kept_cols.push(g);
                    }
                }
                let mut images = IntMatrix::zero(generator_images.rows(), kept_cols.len());
                for (j, col) in kept_cols.iter().enumerate() {
                    for i in 0..col.len() {
                        images[(i, j)] = col[i].clone();
                    }
                }
                Ok((images, relations.clone()))
            }
        }
    }
}

/// A graph in standardized form: its Heuberger matrix plus the group spec
/// it came from, if any. The Hermite form of the column lattice is cached
/// so vertex canonicalization and membership tests are cheap.
#[derive(Debug, Clone)]
pub struct SACGraph {
    matrix: HeubergerMatrix,
    provenance: Option<GroupSpec>,
    hermite: HermiteForm,
}

impl SACGraph {
    pub fn from_matrix(matrix: HeubergerMatrix) -> Result<Self, SpecError> {
        if matrix.rows() == 0 {
            return Err(SpecError::NoGenerators);
        }
        let hermite = hnf(&matrix);
        Ok(SACGraph { matrix, provenance: None, hermite })
    }

    pub fn matrix(&self) -> &HeubergerMatrix {
        &self.matrix
    }

    /// Number of generators (rows of the matrix).
    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of relation columns. Columns may be dependent, so this can
    /// exceed [`SACGraph::lattice_rank`].
    pub fn rank(&self) -> usize {
        self.matrix.cols()
    }

    /// Rank of the column lattice itself.
    pub fn lattice_rank(&self) -> usize {
        self.hermite.rank()
    }

    pub fn hermite(&self) -> &HermiteForm {
        &self.hermite
    }

    pub fn canonical_basis(&self) -> IntMatrix {
        self.hermite.canonical_basis()
    }

    pub fn provenance(&self) -> Option<&GroupSpec> {
        self.provenance.as_ref()
    }

    /// True iff some `±e_i` lies in the relation lattice, i.e. the graph
    /// has a loop at every vertex and cannot be properly colored.
    pub fn has_loops(&self) -> bool {
        let m = self.dimension();
        (0..m).any(|i| {
            let mut e = vec![BigInt::zero(); m];
            e[i] = BigInt::one();
            self.hermite.contains(&e)
        })
    }

    /// The unique normal form of `v` modulo the relation lattice. Two
    /// tuples canonicalize equal exactly when they name the same vertex.
    pub fn canonicalize_vertex(&self, v: &[BigInt]) -> Result<Vec<BigInt>, SpecError> {
        if v.len() != self.dimension() {
            return Err(LinalgError::DimensionMismatch {
                left: self.dimension(),
                right: v.len(),
            }
            .into());
        }
        Ok(self.hermite.reduce(v))
    }

    /// Adjacency test on arbitrary representatives: `a ~ b` iff their
    /// difference is `±e_k` modulo the lattice for some generator `k`.
    pub fn vertices_adjacent(&self, a: &[BigInt], b: &[BigInt]) -> Result<bool, SpecError> {
        if a.len() != self.dimension() || b.len() != self.dimension() {
            return Err(LinalgError::DimensionMismatch {
                left: self.dimension(),
                right: a.len().max(b.len()),
            }
            .into());
        }
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        for k in 0..self.dimension() {
            for sign in [1i64, -1] {
                let mut probe = diff.clone();
                probe[k] -= BigInt::from(sign);
                if self.hermite.contains(&probe) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    pub fn apply_structural(&self, op: &StructuralOp) -> Result<SACGraph, StructuralOpError> {
        let target = op.apply(&self.matrix)?;
        Ok(SACGraph {
            hermite: hnf(&target),
            matrix: target,
            provenance: None,
        })
    }

    /// Splits the matrix into direct summands: connected components of the
    /// bipartite incidence between rows and columns on the nonzero pattern.
    /// Zero columns belong to no component and are dropped (each is in the
    /// span of the remaining columns); all-zero rows become `1 x 0` blocks.
    pub fn block_split(&self) -> BlockSplitResult {
        let m = self.dimension();
        let r = self.rank();
        // union-find over m row nodes followed by r column nodes
        let mut parent: Vec<usize> = (0..m + r).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..m {
            for j in 0..r {
                if !self.matrix[(i, j)].is_zero() {
                    let a = find(&mut parent, i);
                    let b = find(&mut parent, m + j);
                    parent[a] = b;
                }
            }
        }
        let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut root_of: Vec<(usize, usize)> = Vec::new(); // (root, group idx)
        let group_index = |root: usize, root_of: &mut Vec<(usize, usize)>,
                               groups: &mut Vec<(Vec<usize>, Vec<usize>)>| {
            if let Some(&(_, g)) = root_of.iter().find(|&&(rt, _)| rt == root) {
                g
            } else {
                groups.push((Vec::new(), Vec::new()));
                root_of.push((root, groups.len() - 1));
                groups.len() - 1
            }
        };
        for i in 0..m {
            let root = find(&mut parent, i);
            let g = group_index(root, &mut root_of, &mut groups);
            groups[g].0.push(i);
        }
        let mut dropped_zero_cols = Vec::new();
        for j in 0..r {
            if self.matrix.col_is_zero(j) {
                dropped_zero_cols.push(j);
                continue;
            }
            let root = find(&mut parent, m + j);
            let g = group_index(root, &mut root_of, &mut groups);
            groups[g].1.push(j);
        }
        // groups were created in row order, so they are already sorted by
        // smallest row index
        let mut blocks = Vec::new();
        let mut row_groups = Vec::new();
        let mut col_groups = Vec::new();
        for (rows, cols) in groups {
            let mut sub = IntMatrix::zero(rows.len(), cols.len());
            for (bi, &i) in rows.iter().enumerate() {
                for (bj, &j) in cols.iter().enumerate() {
                    sub[(bi, bj)] = self.matrix[(i, j)].clone();
                }
            }
            blocks.push(SACGraph::from_matrix(sub).expect("blocks keep at least one row"));
            row_groups.push(rows);
            col_groups.push(cols);
        }
        BlockSplitResult { blocks, row_groups, col_groups, dropped_zero_cols }
    }
}

#[derive(Debug, Clone)]
pub struct BlockSplitResult {
    pub blocks: Vec<SACGraph>,
    /// Original row indices of each block, ascending.
    pub row_groups: Vec<Vec<usize>>,
    /// Original column indices of each block, ascending.
    pub col_groups: Vec<Vec<usize>>,
    pub dropped_zero_cols: Vec<usize>,
}

impl BlockSplitResult {
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 && self.dropped_zero_cols.is_empty()
    }
}

/// Builds the graph of a group spec: the matrix columns span the kernel of
/// `e_i ↦ i-th generator`, and the spec is recorded as provenance.
pub fn from_group_spec(spec: &GroupSpec) -> Result<SACGraph, SpecError> {
    let (images, relations) = spec.phi_matrices()?;
    let joined = images.hstack(&relations)?;
    let joined_form = hnf(&joined);
    if joined_form.rank() < joined.rows() {
        return Err(SpecError::NotGenerating { index: None });
    }
    let index = joined_form.pivot_product();
    if !index.is_one() {
        return Err(SpecError::NotGenerating { index: Some(index) });
    }
    let matrix = kernel_mod_lattice(&images, &relations)?;
    Ok(SACGraph {
        hermite: hnf(&matrix),
        matrix,
        provenance: Some(spec.clone()),
    })
}

/// Kernel basis of `x ↦ a_1 x_1 + ⋯ + a_{r+1} x_{r+1}` on `Z`, laid out as
/// the classical `(r+1) x r` triangular matrix built from the gcd chain
/// `g_k = gcd(a_1, …, a_k)` and Bézout coefficients with
/// `a_1 u_{1k} + ⋯ + a_k u_{kk} = a_{k+1} g_k / g_{k+1}`.
pub fn distance_to_matrix(a: &[BigInt]) -> Result<HeubergerMatrix, SpecError> {
    if a.len() < 2 {
        return Err(SpecError::TooFewDistances);
    }
    for x in a {
        if !x.is_positive() {
            return Err(SpecError::NonPositive(x.clone()));
        }
    }
    let g_all = gcd_vec(a);
    if !g_all.is_one() {
        return Err(SpecError::GcdNotOne(g_all));
    }
    let r = a.len() - 1;
    if r == 1 {
        return Ok(IntMatrix::column(vec![-a[1].clone(), a[0].clone()]));
    }
    // g[k] = gcd(a[0..=k]); w[k] solves sum a[i]*w[k][i] = g[k]
    let mut g = vec![a[0].clone()];
    let mut w: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..a.len() {
        let e = g[k - 1].extended_gcd(&a[k]);
        g.push(e.gcd.clone());
        let mut next: Vec<BigInt> = w[k - 1].iter().map(|c| c * &e.x).collect();
        next.push(e.y.clone());
        w.push(next);
    }
    let mut m = IntMatrix::zero(r + 1, r);
    m[(0, 0)] = &a[1] / &g[1];
    m[(1, 0)] = -(&a[0] / &g[1]);
    for cj in 1..r {
        let k = cj + 1; // column covers a[0..k], pivot row k
        let scale = &a[k] / &g[k];
        for i in 0..k {
            m[(i, cj)] = -(&w[k - 1][i] * &scale);
        }
        m[(k, cj)] = &g[k - 1] / &g[k];
    }
    Ok(m)
}

/// The distance-graph matrix of `(a_1, …, a_r, n)` with the modulus row
/// deleted: an `r x r` matrix for `Cay(Z_n, {±a_1, …, ±a_r})`. Requires
/// `gcd(a_1, …, a_r, n) = 1` (connectedness).
pub fn circulant_to_matrix(n: &BigInt, a: &[BigInt]) -> Result<HeubergerMatrix, SpecError> {
    if !n.is_positive() {
        return Err(SpecError::InvalidModulus(n.clone()));
    }
    if a.is_empty() {
        return Err(SpecError::EmptyGenerators);
    }
    let mut extended = a.to_vec();
    extended.push(n.clone());
    let g = gcd_vec(&extended);
    if !g.is_one() {
        return Err(SpecError::GcdNotOne(g));
    }
    if extended.len() == 2 {
        // single connection: kernel of (a_1, n) is (-n, a_1); drop the modulus row
        for x in a {
            if !x.is_positive() {
                return Err(SpecError::NonPositive(x.clone()));
            }
        }
        return Ok(IntMatrix::column(vec![-n.clone()]));
    }
    let full = distance_to_matrix(&extended)?;
    Ok(full.delete_row(full.rows() - 1))
}

/// Reads a distance set off an `(r+1) x r` matrix via the generalized
/// cross product: the graph is `Cay(Z, {±v_1, …, ±v_{r+1}})` whenever the
/// cross product `v` is nonzero with coprime entries.
pub fn matrix_to_distance(m: &HeubergerMatrix) -> Result<Vec<BigInt>, ConversionError> {
    let v = cross_product(m)?;
    if v.iter().all(Zero::is_zero) {
        return Err(ConversionError::ZeroCrossProduct);
    }
    let g = gcd_vec(&v);
    if !g.is_one() {
        return Err(ConversionError::CrossGcd(g));
    }
    Ok(v.into_iter().map(|x| x.abs()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeleteColumn {
    First,
    Last,
}

/// Reads a circulant presentation off a square matrix: delete the chosen
/// column, take the cross product `v` of the rest, and the graph is
/// `Cay(Z_n, {±v_1, …, ±v_r})` with `n = |det|`, provided `det ≠ 0`,
/// `v ≠ 0`, and `gcd(v) = 1`. If `gcd(n, gcd(v)) = 1` the last condition
/// is automatic.
pub fn matrix_to_circulant(
    m: &HeubergerMatrix,
    delete: DeleteColumn,
) -> Result<(BigInt, Vec<BigInt>), ConversionError> {
    let n = det(m)?.abs();
    if n.is_zero() {
        return Err(ConversionError::ZeroDeterminant);
    }
    let dropped = match delete {
        DeleteColumn::First => m.delete_col(0),
        DeleteColumn::Last => m.delete_col(m.cols() - 1),
    };
    let v = cross_product(&dropped)?;
    if v.iter().all(Zero::is_zero) {
        return Err(ConversionError::ZeroCrossProduct);
    }
    let g = gcd_vec(&v);
    if n.gcd(&g).is_one() {
        debug_assert!(g.is_one());
    }
    if !g.is_one() {
        return Err(ConversionError::CrossGcd(g));
    }
    Ok((n, v.into_iter().map(|x| x.abs()).collect()))
}

/// A generator assignment `e_i ↦ ±e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedBasis {
    pub index: usize,
    pub negate: bool,
}

impl SignedBasis {
    pub fn pos(index: usize) -> Self {
        SignedBasis { index, negate: false }
    }

    pub fn neg(index: usize) -> Self {
        SignedBasis { index, negate: true }
    }

    pub fn identity(dim: usize) -> Vec<SignedBasis> {
        (0..dim).map(SignedBasis::pos).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralOpError {
    #[error("column index {col} out of range for rank {rank}")]
    ColumnOutOfRange { col: usize, rank: usize },
    #[error("row index {row} out of range for dimension {dim}")]
    RowOutOfRange { row: usize, dim: usize },
    #[error("not a permutation of 0..{len}")]
    BadPermutation { len: usize },
    #[error("row list must be strictly increasing and in range")]
    BadRowList,
    #[error("source and target columns must differ")]
    SameColumn,
    #[error("column {col} is not in the integer span of the other columns")]
    ColumnNotRedundant { col: usize },
    #[error("row {row} is not all zeroes")]
    RowNotZero { row: usize },
    #[error("cannot delete a row from a 1-dimensional matrix")]
    LastRow,
}

/// The matrix operations that preserve the graph or replace it by an
/// isomorph: column permutation/negation/combination and redundant-column
/// deletion leave the graph equal; row permutation/negation are
/// isomorphisms; zero-row deletion preserves the chromatic number.
///
/// Row permutations use scatter convention: source row `i` lands at row
/// `perm[i]` of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum StructuralOp {
    PermuteColumns { perm: Vec<usize> },
    NegateColumn { col: usize },
    AddColumnMultiple {
        target: usize,
        source: usize,
        #[serde(with = "serde_bigint")]
        factor: BigInt,
    },
    DeleteRedundantColumn { col: usize },
    PermuteRows { perm: Vec<usize> },
    NegateRows { rows: Vec<usize> },
    DeleteZeroRow { row: usize },
}

fn check_permutation(perm: &[usize], len: usize) -> Result<(), StructuralOpError> {
    if perm.len() != len {
        return Err(StructuralOpError::BadPermutation { len });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(StructuralOpError::BadPermutation { len });
        }
        seen[p] = true;
    }
    Ok(())
}

impl StructuralOp {
    pub fn apply(&self, m: &HeubergerMatrix) -> Result<HeubergerMatrix, StructuralOpError> {
        match self {
            StructuralOp::PermuteColumns { perm } => {
                check_permutation(perm, m.cols())?;
                let mut out = IntMatrix::zero(m.rows(), m.cols());
                for j in 0..m.cols() {
                    for i in 0..m.rows() {
                        out[(i, perm[j])] = m[(i, j)].clone();
                    }
                }
                Ok(out)
            }
            StructuralOp::NegateColumn { col } => {
                if *col >= m.cols() {
                    return Err(StructuralOpError::ColumnOutOfRange { col: *col, rank: m.cols() });
                }
                let mut out = m.clone();
                for i in 0..m.rows() {
                    let v = -out[(i, *col)].clone();
                    out[(i, *col)] = v;
                }
                Ok(out)
            }
            StructuralOp::AddColumnMultiple { target, source, factor } => {
                let rank = m.cols();
                for &c in [target, source] {
                    if c >= rank {
                        return Err(StructuralOpError::ColumnOutOfRange { col: c, rank });
                    }
                }
                if target == source {
                    return Err(StructuralOpError::SameColumn);
                }
                let mut out = m.clone();
                for i in 0..m.rows() {
                    let add = factor * &m[(i, *source)];
                    out[(i, *target)] += add;
                }
                Ok(out)
            }
            StructuralOp::DeleteRedundantColumn { col } => {
                if *col >= m.cols() {
                    return Err(StructuralOpError::ColumnOutOfRange { col: *col, rank: m.cols() });
                }
                let others = m.delete_col(*col);
                let target = m.col(*col);
                if hnf(&others).solve(&target).is_none() {
                    return Err(StructuralOpError::ColumnNotRedundant { col: *col });
                }
                Ok(others)
            }
            StructuralOp::PermuteRows { perm } => {
                check_permutation(perm, m.rows())?;
                let mut out = IntMatrix::zero(m.rows(), m.cols());
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        out[(perm[i], j)] = m[(i, j)].clone();
                    }
                }
                Ok(out)
            }
            StructuralOp::NegateRows { rows } => {
                if rows.windows(2).any(|w| w[0] >= w[1]) || rows.iter().any(|&i| i >= m.rows()) {
                    return Err(StructuralOpError::BadRowList);
                }
                let mut out = m.clone();
                for &i in rows {
                    for j in 0..m.cols() {
                        let v = -out[(i, j)].clone();
                        out[(i, j)] = v;
                    }
                }
                Ok(out)
            }
            StructuralOp::DeleteZeroRow { row } => {
                if *row >= m.rows() {
                    return Err(StructuralOpError::RowOutOfRange { row: *row, dim: m.rows() });
                }
                if m.rows() < 2 {
                    return Err(StructuralOpError::LastRow);
                }
                if !m.row_is_zero(*row) {
                    return Err(StructuralOpError::RowNotZero { row: *row });
                }
                Ok(m.delete_row(*row))
            }
        }
    }

    /// The generator assignment realizing this op as a graph homomorphism
    /// from the source graph to the target graph. Column operations fix
    /// every generator; row operations move or reflect them. Deleting a
    /// zero row sends the freed generator to `e_0` of the target, which
    /// satisfies the column condition because its matrix row was zero.
    pub fn generator_images(&self, src_dim: usize) -> Vec<SignedBasis> {
        match self {
            StructuralOp::PermuteColumns { .. }
            | StructuralOp::NegateColumn { .. }
            | StructuralOp::AddColumnMultiple { .. }
            | StructuralOp::DeleteRedundantColumn { .. } => SignedBasis::identity(src_dim),
            StructuralOp::PermuteRows { perm } => {
                perm.iter().map(|&p| SignedBasis::pos(p)).collect()
            }
            StructuralOp::NegateRows { rows } => (0..src_dim)
                .map(|i| {
                    if rows.contains(&i) {
                        SignedBasis::neg(i)
                    } else {
                        SignedBasis::pos(i)
                    }
                })
                .collect(),
            StructuralOp::DeleteZeroRow { row } => (0..src_dim)
                .map(|i| match i.cmp(row) {
                    std::cmp::Ordering::Less => SignedBasis::pos(i),
                    std::cmp::Ordering::Equal => SignedBasis::pos(0),
                    std::cmp::Ordering::Greater => SignedBasis::pos(i - 1),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::lattice_equal;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn bigs(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn heuberger_circulant_from_spec() {
        let spec = GroupSpec::Circulant { modulus: big(35), connections: bigs(&[6, 10]) };
        let g = from_group_spec(&spec).unwrap();
        let expected = IntMatrix::from_rows(&[&[5, 0], &[4, 7]]);
        assert!(lattice_equal(g.matrix(), &expected).unwrap());
        assert_eq!(g.dimension(), 2);
        assert!(!g.has_loops());
    }

    #[test]
    fn distance_set_from_spec() {
        let spec = GroupSpec::DistanceSet { distances: bigs(&[6, 10, 25]) };
        let g = from_group_spec(&spec).unwrap();
        let expected = IntMatrix::from_rows(&[&[5, 0], &[12, -5], &[-6, 2]]);
        assert!(lattice_equal(g.matrix(), &expected).unwrap());
    }

    #[test]
    fn cube_like_from_spec() {
        // generators e1, e2, e3, w3 of Z_2^3
        let spec = GroupSpec::CubeLike { dim: 3, generators: vec![0b001, 0b010, 0b100, 0b111] };
        let g = from_group_spec(&spec).unwrap();
        let w4_2i4 = {
            let mut m = IntMatrix::zero(4, 5);
            for i in 0..4 {
                m[(i, 0)] = big(1);
                m[(i, i + 1)] = big(2);
            }
            m
        };
        assert!(lattice_equal(g.matrix(), &w4_2i4).unwrap());
    }

    #[test]
    fn non_generating_specs_report_index() {
        let spec = GroupSpec::Circulant { modulus: big(35), connections: bigs(&[7, 14]) };
        match from_group_spec(&spec) {
            Err(SpecError::NotGenerating { index: Some(i) }) => assert_eq!(i, big(7)),
            other => panic!("expected NotGenerating, got {other:?}"),
        }

        let spec = GroupSpec::DistanceSet { distances: bigs(&[4, 6]) };
        match from_group_spec(&spec) {
            Err(SpecError::NotGenerating { index: Some(i) }) => assert_eq!(i, big(2)),
            other => panic!("expected NotGenerating, got {other:?}"),
        }

        // e1, e2 do not generate Z_2^3
        let spec = GroupSpec::CubeLike { dim: 3, generators: vec![0b001, 0b010] };
        match from_group_spec(&spec) {
            Err(SpecError::NotGenerating { index: Some(i) }) => assert_eq!(i, big(2)),
            other => panic!("expected NotGenerating, got {other:?}"),
        }
    }

    #[test]
    fn circulant_connections_dedup_as_plus_minus_pairs() {
        // 29 = -6 mod 35, so {6, 29, 10} has two generators
        let spec = GroupSpec::Circulant { modulus: big(35), connections: bigs(&[6, 29, 10]) };
        let g = from_group_spec(&spec).unwrap();
        assert_eq!(g.dimension(), 2);
    }

    #[test]
    fn distance_to_matrix_triple() {
        let m = distance_to_matrix(&bigs(&[6, 10, 25])).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cols(), 2);
        let kern = kernel_mod_lattice(
            &IntMatrix::from_rows(&[&[6, 10, 25]]),
            &IntMatrix::zero(1, 0),
        )
        .unwrap();
        assert!(lattice_equal(&m, &kern).unwrap());
        // columns really are relations
        for j in 0..m.cols() {
            let col = m.col(j);
            let s = &col[0] * big(6) + &col[1] * big(10) + &col[2] * big(25);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn distance_to_matrix_pairs() {
        assert_eq!(distance_to_matrix(&bigs(&[1, 2])).unwrap(), IntMatrix::from_rows(&[&[-2], &[1]]));
        assert_eq!(distance_to_matrix(&bigs(&[3, 5])).unwrap(), IntMatrix::from_rows(&[&[-5], &[3]]));
        assert!(matches!(
            distance_to_matrix(&bigs(&[4, 6])),
            Err(SpecError::GcdNotOne(g)) if g == big(2)
        ));
        assert!(matches!(
            distance_to_matrix(&bigs(&[0, 5])),
            Err(SpecError::NonPositive(_))
        ));
    }

    #[test]
    fn circulant_to_matrix_examples() {
        let m = circulant_to_matrix(&big(35), &bigs(&[6, 10])).unwrap();
        let expected = IntMatrix::from_rows(&[&[5, 0], &[4, 7]]);
        assert!(lattice_equal(&m, &expected).unwrap());
        let kern = kernel_mod_lattice(
            &IntMatrix::from_rows(&[&[6, 10]]),
            &IntMatrix::from_rows(&[&[35]]),
        )
        .unwrap();
        assert!(lattice_equal(&m, &kern).unwrap());

        let five = circulant_to_matrix(&big(5), &bigs(&[1])).unwrap();
        assert!(lattice_equal(&five, &IntMatrix::from_rows(&[&[5]])).unwrap());

        let two = circulant_to_matrix(&big(2), &bigs(&[1])).unwrap();
        assert!(lattice_equal(&two, &IntMatrix::from_rows(&[&[2]])).unwrap());

        assert!(matches!(
            circulant_to_matrix(&big(35), &bigs(&[7, 14])),
            Err(SpecError::GcdNotOne(_))
        ));
    }

    #[test]
    fn matrix_to_distance_examples() {
        let m = IntMatrix::from_rows(&[&[5, 0], &[-12, 5], &[6, -2]]);
        assert_eq!(matrix_to_distance(&m).unwrap(), bigs(&[6, 10, 25]));

        let degenerate = IntMatrix::from_rows(&[&[2, 0], &[0, 2], &[0, 0]]);
        // cross product (0, 0, -4): nonzero but gcd 4
        assert!(matches!(
            matrix_to_distance(&degenerate),
            Err(ConversionError::CrossGcd(g)) if g == big(4)
        ));
        let zero_cross = IntMatrix::from_rows(&[&[2, 4], &[1, 2], &[0, 0]]);
        assert!(matches!(
            matrix_to_distance(&zero_cross),
            Err(ConversionError::ZeroCrossProduct)
        ));

        let small = IntMatrix::from_rows(&[&[-5], &[3]]);
        assert_eq!(matrix_to_distance(&small).unwrap(), bigs(&[3, 5]));
    }

    #[test]
    fn matrix_to_circulant_examples() {
        let m = IntMatrix::from_rows(&[&[5, 0], &[4, 7]]);
        let (n, conns) = matrix_to_circulant(&m, DeleteColumn::Last).unwrap();
        assert_eq!(n, big(35));
        assert_eq!(conns, bigs(&[4, 5]));

        assert!(matches!(
            matrix_to_circulant(&m, DeleteColumn::First),
            Err(ConversionError::CrossGcd(g)) if g == big(7)
        ));

        let cycle = IntMatrix::from_rows(&[&[7]]);
        let (n, conns) = matrix_to_circulant(&cycle, DeleteColumn::First).unwrap();
        assert_eq!(n, big(7));
        assert_eq!(conns, bigs(&[1]));

        let singular = IntMatrix::from_rows(&[&[2, 4], &[1, 2]]);
        assert!(matches!(
            matrix_to_circulant(&singular, DeleteColumn::Last),
            Err(ConversionError::ZeroDeterminant)
        ));
    }

    #[test]
    fn structural_ops_preserve_lattice() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 0], &[-3, -7]])).unwrap();
        let negated = g
            .apply_structural(&StructuralOp::NegateColumn { col: 1 })
            .unwrap();
        let added = negated
            .apply_structural(&StructuralOp::AddColumnMultiple {
                target: 0,
                source: 1,
                factor: big(1),
            })
            .unwrap();
        assert_eq!(added.matrix(), &IntMatrix::from_rows(&[&[5, 0], &[4, 7]]));
        assert!(lattice_equal(g.matrix(), added.matrix()).unwrap());
    }

    #[test]
    fn delete_zero_row_example() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[3], &[0]])).unwrap();
        let out = g.apply_structural(&StructuralOp::DeleteZeroRow { row: 1 }).unwrap();
        assert_eq!(out.matrix(), &IntMatrix::from_rows(&[&[3]]));

        assert!(matches!(
            g.apply_structural(&StructuralOp::DeleteZeroRow { row: 0 }),
            Err(StructuralOpError::RowNotZero { row: 0 })
        ));
    }

    #[test]
    fn delete_redundant_column_needs_witness() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 10], &[4, 8]])).unwrap();
        let out = g
            .apply_structural(&StructuralOp::DeleteRedundantColumn { col: 1 })
            .unwrap();
        assert_eq!(out.rank(), 1);

        let h = SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 1], &[4, 0]])).unwrap();
        assert!(matches!(
            h.apply_structural(&StructuralOp::DeleteRedundantColumn { col: 1 }),
            Err(StructuralOpError::ColumnNotRedundant { col: 1 })
        ));
    }

    #[test]
    fn block_split_visible_direct_sum() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[2, 0], &[0, 3]])).unwrap();
        let split = g.block_split();
        assert_eq!(split.blocks.len(), 2);
        assert_eq!(split.blocks[0].matrix(), &IntMatrix::from_rows(&[&[2]]));
        assert_eq!(split.blocks[1].matrix(), &IntMatrix::from_rows(&[&[3]]));
    }

    #[test]
    fn block_split_zero_rows_and_cols() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[2, 0], &[0, 0]])).unwrap();
        let split = g.block_split();
        assert_eq!(split.blocks.len(), 2);
        assert_eq!(split.dropped_zero_cols, vec![1]);
        assert_eq!(split.blocks[1].matrix().rows(), 1);
        assert_eq!(split.blocks[1].matrix().cols(), 0);
    }

    #[test]
    fn loop_detection() {
        assert!(SACGraph::from_matrix(IntMatrix::from_rows(&[&[1]])).unwrap().has_loops());
        assert!(!SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 0], &[4, 7]]))
            .unwrap()
            .has_loops());
        assert!(SACGraph::from_matrix(IntMatrix::from_rows(&[&[1], &[0]])).unwrap().has_loops());
    }

    #[test]
    fn vertex_canonicalization() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 0], &[4, 7]])).unwrap();
        let a = g.canonicalize_vertex(&bigs(&[6, 0])).unwrap();
        let b = g.canonicalize_vertex(&bigs(&[1, 3])).unwrap();
        assert_eq!(a, b);
        assert_eq!(g.canonicalize_vertex(&bigs(&[0, 0])).unwrap(), bigs(&[0, 0]));
        let col0 = g.canonicalize_vertex(&bigs(&[5, 4])).unwrap();
        assert_eq!(col0, bigs(&[0, 0]));
        assert!(g.canonicalize_vertex(&bigs(&[1])).is_err());
    }

    #[test]
    fn adjacency_on_representatives() {
        let g = SACGraph::from_matrix(IntMatrix::from_rows(&[&[5, 0], &[4, 7]])).unwrap();
        assert!(g.vertices_adjacent(&bigs(&[0, 0]), &bigs(&[1, 0])).unwrap());
        // (6,0) ≡ (1,3), which differs from (1,2) by e_2
        assert!(g.vertices_adjacent(&bigs(&[6, 0]), &bigs(&[1, 2])).unwrap());
        assert!(!g.vertices_adjacent(&bigs(&[0, 0]), &bigs(&[2, 0])).unwrap());
    }

    #[test]
    fn quotient_spec_round_trip() {
        let spec = GroupSpec::Quotient {
            relations: IntMatrix::from_rows(&[&[35]]),
            generator_images: IntMatrix::from_rows(&[&[6, 10]]),
        };
        let g = from_group_spec(&spec).unwrap();
        assert!(lattice_equal(g.matrix(), &IntMatrix::from_rows(&[&[5, 0], &[4, 7]])).unwrap());

        // 29 ≡ -6 (mod 35): deduplicated as a ± pair
        let spec = GroupSpec::Quotient {
            relations: IntMatrix::from_rows(&[&[35]]),
            generator_images: IntMatrix::from_rows(&[&[6, 29, 10]]),
        };
        let g = from_group_spec(&spec).unwrap();
        assert_eq!(g.dimension(), 2);
    }
}
