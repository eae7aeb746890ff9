//! Linear algebra over GF(2^61 - 1), partition matroids and their
//! truncations, and representative families of linear matroids.

mod field;
mod matrix;

pub use field::{Fe, MODULUS};
pub use matrix::{EchelonBasis, FieldMatrix};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("family member {0} is dependent in the matroid")]
    DependentInput(usize),
    #[error("representation has {rows} rows and rank {rank}, but p + q = {expected}")]
    RankMismatch { rows: usize, rank: usize, expected: usize },
    #[error("family member {index} has {found} elements, expected {expected}")]
    SetSizeMismatch { index: usize, expected: usize, found: usize },
    #[error("element {0} is not a column of the representation")]
    UnknownElement(usize),
}

/// Subsets of a ground set, all of one size, each with its color count
/// vector and a weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoredSetFamily {
    /// Each set sorted ascending.
    pub sets: Vec<Vec<usize>>,
    pub weights: Vec<u64>,
    /// Per-set color counts, length `num_colors`.
    pub color_keys: Vec<Vec<usize>>,
}

impl ColoredSetFamily {
    /// Family with uniform weight 1; `colors` maps elements to colors.
    pub fn new(sets: Vec<Vec<usize>>, colors: &[usize], num_colors: usize) -> Self {
        let sets: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        let color_keys = sets
            .iter()
            .map(|s| {
                let mut key = vec![0; num_colors];
                for &v in s {
                    key[colors[v]] += 1;
                }
                key
            })
            .collect();
        Self {
            weights: vec![1; sets.len()],
            sets,
            color_keys,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn select(&self, keep: &[usize]) -> Self {
        Self {
            sets: keep.iter().map(|&i| self.sets[i].clone()).collect(),
            weights: keep.iter().map(|&i| self.weights[i]).collect(),
            color_keys: keep.iter().map(|&i| self.color_keys[i].clone()).collect(),
        }
    }
}

/// The `num_colors x n` matrix whose column `v` is the unit vector of
/// `colors[v]`.
pub fn block_identity(colors: &[usize], num_colors: usize) -> FieldMatrix {
    let mut m = FieldMatrix::zeros(num_colors, colors.len());
    for (v, &c) in colors.iter().enumerate() {
        m.set(c, v, Fe::ONE);
    }
    m
}

/// Represents `{X : X has at most one element per color, |X| <= rank}` by a
/// `rank x n` matrix. When `rank >= num_colors` the size bound is implied
/// and the block identity is padded with zero rows; otherwise it is
/// truncated with a random map drawn from `seed`.
pub fn build_partition_matroid(colors: &[usize], num_colors: usize, rank: usize, seed: u64) -> FieldMatrix {
    assert!(rank >= 1, "rank must be positive");
    let block = block_identity(colors, num_colors);
    if rank >= num_colors {
        let mut padded = FieldMatrix::zeros(rank, colors.len());
        for r in 0..num_colors {
            for v in 0..colors.len() {
                padded.set(r, v, block.get(r, v));
            }
        }
        padded
    } else {
        truncate(&block, rank, seed)
    }
}

/// `T * mat` for a uniformly random `rank x rows` matrix `T`. Column sets of
/// size at most `rank` keep their rank except with probability about
/// `rank / 2^61` each.
pub fn truncate(mat: &FieldMatrix, rank: usize, seed: u64) -> FieldMatrix {
    assert!(rank <= mat.rows(), "cannot truncate {} rows to {rank}", mat.rows());
    if rank == mat.rows() {
        return mat.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FieldMatrix::random(rank, mat.rows(), &mut rng).mul(mat)
}

fn binomials(n: usize) -> Vec<Vec<usize>> {
    let mut b = vec![vec![0usize; n + 2]; n + 2];
    for i in 0..=n + 1 {
        b[i][0] = 1;
        for j in 1..=i {
            b[i][j] = b[i - 1][j - 1] + if j < i { b[i - 1][j] } else { 0 };
        }
    }
    b
}

/// All `size`-subsets of `0..n` in lexicographic order.
fn subsets_lex(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] < n - size + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Computes exterior vectors of column sets of a fixed `k x n` matrix,
/// reusing the minors of a shared column prefix between calls.
pub struct ExteriorCache<'a> {
    mat: &'a FieldMatrix,
    binom: Vec<Vec<usize>>,
    /// Row subsets by size, in lexicographic order.
    subsets: Vec<Vec<Vec<usize>>>,
    prefix: Vec<usize>,
    /// `levels[j]`: minors on `prefix[..j]`, indexed by colex rank of the
    /// row subset.
    levels: Vec<Vec<Fe>>,
}

impl<'a> ExteriorCache<'a> {
    pub fn new(mat: &'a FieldMatrix) -> Self {
        Self {
            mat,
            binom: binomials(mat.rows()),
            subsets: vec![vec![Vec::new()]],
            prefix: Vec::new(),
            levels: vec![vec![Fe::ONE]],
        }
    }

    fn colex(&self, rows: &[usize]) -> usize {
        rows.iter().enumerate().map(|(i, &r)| self.binom[r][i + 1]).sum()
    }

    fn subsets(&mut self, size: usize) -> &[Vec<usize>] {
        while self.subsets.len() <= size {
            let next = subsets_lex(self.mat.rows(), self.subsets.len());
            self.subsets.push(next);
        }
        &self.subsets[size]
    }

    /// All `p x p` minors on the columns `set` (in the given order), listed
    /// by the lexicographic order of their row subsets.
    pub fn vector(&mut self, set: &[usize]) -> Vec<Fe> {
        let k = self.mat.rows();
        let p = set.len();
        assert!(p <= k, "set larger than the rank");
        let shared = self.prefix.iter().zip(set).take_while(|(a, b)| a == b).count();
        self.prefix.truncate(shared);
        self.levels.truncate(shared + 1);
        for j in shared..p {
            let col = set[j];
            let rows_next: Vec<Vec<usize>> = self.subsets(j + 1).to_vec();
            let mut level = vec![Fe::ZERO; rows_next.len()];
            for rows in &rows_next {
                let mut acc = Fe::ZERO;
                let mut rest = Vec::with_capacity(j);
                for (i, &r) in rows.iter().enumerate() {
                    let a = self.mat.get(r, col);
                    if a.is_zero() {
                        continue;
                    }
                    rest.clear();
                    rest.extend(rows.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &y)| y));
                    let term = a * self.levels[j][self.colex(&rest)];
                    if (i + j) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                let idx = self.colex(rows);
                level[idx] = acc;
            }
            self.prefix.push(col);
            self.levels.push(level);
        }
        let lex = self.subsets(p).to_vec();
        lex.iter().map(|rows| self.levels[p][self.colex(rows)]).collect()
    }
}

/// The vector of all `p x p` minors of `mat` restricted to the columns of
/// `set`; zero iff the columns are dependent.
pub fn exterior_vector(mat: &FieldMatrix, set: &[usize]) -> Vec<Fe> {
    ExteriorCache::new(mat).vector(set)
}

/// A `q`-representative subfamily of `fam` in the matroid represented by
/// `mat`, which must have `p + q` rows and full row rank.
///
/// Members whose exterior vectors extend the span of the earlier ones are
/// kept, in input order, so the output is a basis of the span and has at
/// most `C(p + q, p)` members.
pub fn representative_family(
    mat: &FieldMatrix,
    fam: &ColoredSetFamily,
    q: usize,
) -> Result<ColoredSetFamily, MatroidError> {
    if fam.is_empty() {
        return Ok(fam.clone());
    }
    let p = fam.sets[0].len();
    for (index, s) in fam.sets.iter().enumerate() {
        if s.len() != p {
            return Err(MatroidError::SetSizeMismatch {
                index,
                expected: p,
                found: s.len(),
            });
        }
        if let Some(&v) = s.iter().find(|&&v| v >= mat.cols()) {
            return Err(MatroidError::UnknownElement(v));
        }
    }
    let rank = mat.rank();
    if mat.rows() != p + q || rank != p + q {
        return Err(MatroidError::RankMismatch {
            rows: mat.rows(),
            rank,
            expected: p + q,
        });
    }
    let vectors = exterior_vectors(mat, &fam.sets);
    if let Some(i) = vectors.iter().position(|v| v.iter().all(|x| x.is_zero())) {
        return Err(MatroidError::DependentInput(i));
    }
    let mut basis = EchelonBasis::new();
    let keep: Vec<usize> = (0..fam.len()).filter(|&i| basis.insert(&vectors[i])).collect();
    Ok(fam.select(&keep))
}

/// Exterior vectors of many sets, computed in sorted order to share
/// prefixes and returned in input order.
pub fn exterior_vectors(mat: &FieldMatrix, sets: &[Vec<usize>]) -> Vec<Vec<Fe>> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&a, &b| sets[a].cmp(&sets[b]));
    let mut cache = ExteriorCache::new(mat);
    let mut out = vec![Vec::new(); sets.len()];
    for i in order {
        out[i] = cache.vector(&sets[i]);
    }
    out
}
