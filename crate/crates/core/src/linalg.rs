//! Exact rank, nullspace and subspace computations, quiver representations and their
//! homomorphism spaces, randomized invertibility search and trace-form radicals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{int, ExactMatrix, Rational};

fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; returns the rank and the final pivot product sign data.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, Vec<Vec<BigInt>>, bool) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swapped = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        if p != rank {
            a.swap(p, rank);
            swapped = !swapped;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    (rank, a, swapped)
}

pub fn rank(m: &ExactMatrix) -> usize {
    bareiss(integer_rows(m), m.cols()).0
}

pub fn determinant(m: &ExactMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let scale: BigInt = (0..n)
        .map(|r| m.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .product();
    let (rk, a, swapped) = bareiss(integer_rows(m), n);
    if rk < n {
        return Ok(Rational::zero());
    }
    let d = Rational::new(a[n - 1][n - 1].clone(), scale);
    Ok(if swapped { -d } else { d })
}

/// Reduced row echelon form together with the pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..m.cols() {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(p, lead);
        let inv = rows[lead][c].recip();
        for x in rows[lead].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != lead && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        lead += 1;
    }
    let out = if rows.is_empty() {
        ExactMatrix::zeros(0, m.cols())
    } else {
        ExactMatrix::from_rows(rows).expect("rows keep their length")
    };
    (out, pivots)
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = ExactMatrix::zeros(n, 2 * n);
    aug.place(0, 0, m);
    aug.place(0, n, &ExactMatrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.submatrix(0..n, n..2 * n))
}

/// `out[r]` is the rank of the first `r` rows of `m`, for `r = 0..=rows`.
pub fn prefix_row_ranks(m: &ExactMatrix) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut out = Vec::with_capacity(m.rows() + 1);
    out.push(0);
    for r in 0..m.rows() {
        let mut v = m.row(r).to_vec();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            basis.push((p, v));
        }
        out.push(basis.len());
    }
    out
}

/// A linearly independent family of column vectors in `K^ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    pub fn new(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::SizeMismatch { expected: ambient, found: v.len() });
        }
        let s = Self { ambient, vectors };
        if rank(&s.as_rows()) < s.vectors.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(s)
    }

    /// Independent basis of the span of `vectors`.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::SizeMismatch { expected: ambient, found: v.len() });
        }
        if vectors.is_empty() {
            return Ok(Self { ambient, vectors });
        }
        let m = ExactMatrix::from_rows(vectors).expect("checked lengths");
        let (r, pivots) = rref(&m);
        let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Self { ambient, vectors })
    }

    /// Column span of a matrix.
    pub fn column_span(m: &ExactMatrix) -> Self {
        Self::span(m.rows(), (0..m.cols()).map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).collect()).collect())
            .expect("columns have the ambient length")
    }

    /// Span of the standard basis vectors with the given 0-indexed positions.
    pub fn coordinate(ambient: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let vectors = positions
            .into_iter()
            .map(|p| (0..ambient).map(|i| if i == p { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Self::new(ambient, vectors).expect("distinct coordinate vectors")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    fn as_rows(&self) -> ExactMatrix {
        if self.vectors.is_empty() {
            ExactMatrix::zeros(0, self.ambient)
        } else {
            ExactMatrix::from_rows(self.vectors.clone()).expect("uniform lengths")
        }
    }
}

pub fn intersection_dim(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch { left: a.ambient, right: b.ambient });
    }
    let mut all = a.vectors.clone();
    all.extend(b.vectors.iter().cloned());
    if all.is_empty() {
        return Ok(0);
    }
    let joint = rank(&ExactMatrix::from_rows(all).expect("uniform lengths"));
    Ok(a.dim() + b.dim() - joint)
}

/// Representation of the linear quiver `1 -> 2 -> ... -> p` with a loop at `p`.
///
/// `maps[k]` goes from vertex `k` to vertex `k + 1`, `nil` acts on the last vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    dims: Vec<usize>,
    maps: Vec<ExactMatrix>,
    nil: ExactMatrix,
}

impl QuiverRep {
    pub fn new(dims: Vec<usize>, maps: Vec<ExactMatrix>, nil: ExactMatrix) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::DimensionMismatch("quiver needs at least one vertex".into()));
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::SizeMismatch { expected: dims.len() - 1, found: maps.len() });
        }
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != dims[k + 1] || m.cols() != dims[k] {
                return Err(Error::ShapeMismatch(format!(
                    "map {} is {}x{}, expected {}x{}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        let last = *dims.last().expect("nonempty");
        if nil.rows() != last || nil.cols() != last {
            return Err(Error::ShapeMismatch(format!("loop must be {last}x{last}")));
        }
        Ok(Self { dims, maps, nil })
    }

    /// Flag representation of `n` for the flag `K^{d_1} ⊂ ... ⊂ K^{d_p}` with natural inclusions.
    pub fn from_flag(block_sizes: &[usize], n: &ExactMatrix) -> Result<Self> {
        let mut dims = Vec::with_capacity(block_sizes.len());
        let mut acc = 0;
        for &b in block_sizes {
            acc += b;
            dims.push(acc);
        }
        let maps = dims
            .windows(2)
            .map(|w| ExactMatrix::from_fn(w[1], w[0], |r, c| if r == c { int(1) } else { int(0) }))
            .collect();
        Self::new(dims, maps, n.clone())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    pub fn nil(&self) -> &ExactMatrix {
        &self.nil
    }

    /// Direct sum, vertex by vertex.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.dims.len() != other.dims.len() {
            return Err(Error::DimensionMismatch("different quivers".into()));
        }
        Self::new(
            self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            self.maps.iter().zip(&other.maps).map(|(a, b)| ExactMatrix::block_diagonal(&[a.clone(), b.clone()])).collect(),
            ExactMatrix::block_diagonal(&[self.nil.clone(), other.nil.clone()]),
        )
    }

    pub fn zero(vertices: usize) -> Self {
        let dims = vec![0; vertices];
        let maps = vec![ExactMatrix::zeros(0, 0); vertices.saturating_sub(1)];
        Self::new(dims, maps, ExactMatrix::zeros(0, 0)).expect("zero representation")
    }
}

/// Linear system whose solutions are tuples `(f_k)` with `f_{k+1} A_k = B_k f_k` and `f_p N_A = N_B f_p`.
fn intertwiner_system(a: &QuiverRep, b: &QuiverRep) -> Result<(ExactMatrix, Vec<usize>)> {
    if a.dims.len() != b.dims.len() {
        return Err(Error::DimensionMismatch("representations of different quivers".into()));
    }
    let mut offsets = Vec::with_capacity(a.dims.len() + 1);
    let mut total = 0;
    for k in 0..a.dims.len() {
        offsets.push(total);
        total += a.dims[k] * b.dims[k];
    }
    offsets.push(total);
    let var = |k: usize, r: usize, c: usize| offsets[k] + r * a.dims[k] + c;
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    let mut push = |left: (usize, &ExactMatrix), right: (usize, &ExactMatrix), rows: usize, cols: usize| {
        // f_{lk} * left_mat - right_mat * f_{rk}
        let (lk, lm) = left;
        let (rk, rm) = right;
        for r in 0..rows {
            for c in 0..cols {
                let mut eq = vec![Rational::zero(); total];
                for t in 0..lm.rows() {
                    let x = lm.get(t, c);
                    if !x.is_zero() {
                        eq[var(lk, r, t)] += x;
                    }
                }
                for t in 0..rm.cols() {
                    let x = rm.get(r, t);
                    if !x.is_zero() {
                        eq[var(rk, t, c)] -= x;
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    eqs.push(eq);
                }
            }
        }
    };
    for k in 0..a.maps.len() {
        push((k + 1, &a.maps[k]), (k, &b.maps[k]), b.dims[k + 1], a.dims[k]);
    }
    let p = a.dims.len() - 1;
    push((p, &a.nil), (p, &b.nil), b.dims[p], a.dims[p]);
    let m = if eqs.is_empty() { ExactMatrix::zeros(0, total) } else { ExactMatrix::from_rows(eqs).expect("uniform") };
    Ok((m, offsets))
}

/// Basis of the space of representation morphisms `a -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<Vec<ExactMatrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Each basis morphism as one block-diagonal matrix over all vertices.
    pub fn as_block_diagonal(&self) -> Vec<ExactMatrix> {
        self.basis.iter().map(|fs| ExactMatrix::block_diagonal(fs)).collect()
    }
}

pub fn intertwiners(a: &QuiverRep, b: &QuiverRep) -> Result<HomSpace> {
    let (m, offsets) = intertwiner_system(a, b)?;
    let basis = nullspace(&m)
        .into_iter()
        .map(|v| {
            (0..a.dims.len())
                .map(|k| ExactMatrix::from_fn(b.dims[k], a.dims[k], |r, c| v[offsets[k] + r * a.dims[k] + c].clone()))
                .collect()
        })
        .collect();
    Ok(HomSpace { basis })
}

pub fn hom_dim(a: &QuiverRep, b: &QuiverRep) -> Result<usize> {
    let (m, _) = intertwiner_system(a, b)?;
    Ok(m.cols() - rank(&m))
}

/// Parameters of a seeded randomized search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub trials: u32,
    pub seed: u64,
    /// Coefficients are drawn uniformly from `[-range, range]`.
    pub range: i64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { trials: 20, seed: 0, range: 1_000_000 }
    }
}

impl SampleConfig {
    /// Probability bound that a space containing an invertible matrix would have been detected.
    pub fn confidence(&self, n: usize) -> f64 {
        let s = (2 * self.range + 1) as f64;
        let miss = (n as f64 / s).min(1.0);
        1.0 - miss.powi(self.trials as i32)
    }

    /// Independent configuration for the `index`-th call of a batch.
    pub fn derive(&self, index: u64) -> Self {
        let seed = self.seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        Self { seed, ..*self }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum InvertibleSearch {
    Found { certificate: ExactMatrix },
    ProbablyNone { trials: u32, seed: u64, range: i64, confidence: f64, exact: bool },
}

/// Looks for an invertible element in the span of `space` by sampling random combinations.
pub fn contains_invertible(space: &[ExactMatrix], cfg: &SampleConfig) -> Result<InvertibleSearch> {
    let n = match space.first() {
        Some(m) => m.rows(),
        None => {
            return Ok(InvertibleSearch::ProbablyNone {
                trials: 0,
                seed: cfg.seed,
                range: cfg.range,
                confidence: 1.0,
                exact: true,
            })
        }
    };
    if let Some(m) = space.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::ShapeMismatch(format!("expected {n}x{n}, found {}x{}", m.rows(), m.cols())));
    }
    if n == 0 {
        return Ok(InvertibleSearch::Found { certificate: ExactMatrix::identity(0) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let mut m = ExactMatrix::zeros(n, n);
        for b in space {
            let k = int(rng.gen_range(-cfg.range..=cfg.range));
            if !k.is_zero() {
                m = &m + &b.scale(&k);
            }
        }
        if !determinant(&m)?.is_zero() {
            return Ok(InvertibleSearch::Found { certificate: m });
        }
    }
    let exact = space.iter().all(ExactMatrix::is_zero);
    Ok(InvertibleSearch::ProbablyNone {
        trials: cfg.trials,
        seed: cfg.seed,
        range: cfg.range,
        confidence: if exact { 1.0 } else { cfg.confidence(n) },
        exact,
    })
}

fn flatten(m: &ExactMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn independent_subset(space: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let mut kept: Vec<ExactMatrix> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in space {
        rows.push(flatten(m));
        if rank(&ExactMatrix::from_rows(rows.clone()).expect("uniform")) == rows.len() {
            kept.push(m.clone());
        } else {
            rows.pop();
        }
    }
    kept
}

fn check_algebra(space: &[ExactMatrix]) -> Result<Vec<ExactMatrix>> {
    let Some(first) = space.first() else { return Ok(Vec::new()) };
    let n = first.rows();
    if let Some(m) = space.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::ShapeMismatch(format!("expected {n}x{n}, found {}x{}", m.rows(), m.cols())));
    }
    let basis = independent_subset(space);
    let base_rows: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
    for x in &basis {
        for y in &basis {
            let mut rows = base_rows.clone();
            rows.push(flatten(&(x * y)));
            if rank(&ExactMatrix::from_rows(rows).expect("uniform")) > basis.len() {
                return Err(Error::NotClosedUnderMultiplication);
            }
        }
    }
    Ok(basis)
}

fn trace_gram(basis: &[ExactMatrix]) -> ExactMatrix {
    ExactMatrix::from_fn(basis.len(), basis.len(), |i, j| (&basis[i] * &basis[j]).trace())
}

/// Codimension of the radical of a matrix algebra, as the rank of its trace form.
pub fn radical_codim(space: &[ExactMatrix]) -> Result<usize> {
    let basis = check_algebra(space)?;
    if basis.is_empty() {
        return Ok(0);
    }
    Ok(rank(&trace_gram(&basis)))
}

/// Basis of the radical of a matrix algebra: elements orthogonal to everything under the trace form.
pub fn radical_basis(space: &[ExactMatrix]) -> Result<Vec<ExactMatrix>> {
    let basis = check_algebra(space)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let n = basis[0].rows();
    Ok(nullspace(&trace_gram(&basis))
        .into_iter()
        .map(|v| {
            v.iter().zip(&basis).fold(ExactMatrix::zeros(n, n), |acc, (k, b)| &acc + &b.scale(k))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::frac;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn rank_and_determinant() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(determinant(&a).unwrap(), int(0));
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&b).unwrap(), int(-1));
        let c = ExactMatrix::from_rows(vec![vec![frac(1, 2), int(1)], vec![int(0), frac(2, 3)]]).unwrap();
        assert_eq!(determinant(&c).unwrap(), frac(1, 3));
        assert_eq!(rank(&ExactMatrix::zeros(3, 2)), 0);
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = ExactMatrix::from_rows(v.into_iter().map(|x| vec![x]).collect()).unwrap();
            assert!((&a * &col).is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[0, 1, 4], &[1, 0, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, ExactMatrix::identity(3));
        assert!(inverse(&m(&[&[1, 1], &[1, 1]])).is_none());
    }

    #[test]
    fn prefix_ranks() {
        let a = m(&[&[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
        assert_eq!(prefix_row_ranks(&a), vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn subspace_intersections() {
        let a = SubspaceBasis::coordinate(3, [0, 1]);
        let b = SubspaceBasis::coordinate(3, [1, 2]);
        assert_eq!(intersection_dim(&a, &b).unwrap(), 1);
        let c = SubspaceBasis::coordinate(2, [0]);
        assert!(matches!(intersection_dim(&a, &c), Err(Error::AmbientMismatch { .. })));
        assert_eq!(SubspaceBasis::new(2, vec![vec![int(1), int(1)], vec![int(2), int(2)]]), Err(Error::LinearlyDependent));
    }

    #[test]
    fn jordan_block_endomorphisms() {
        let j = m(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let rep = QuiverRep::new(vec![3], vec![], j).unwrap();
        let end = intertwiners(&rep, &rep).unwrap();
        assert_eq!(end.dim(), 3);
        assert_eq!(hom_dim(&rep, &rep).unwrap(), 3);
        assert_eq!(radical_codim(&end.as_block_diagonal()).unwrap(), 1);
    }

    #[test]
    fn invertible_search() {
        let cfg = SampleConfig::default();
        let space = vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])];
        assert!(matches!(contains_invertible(&space, &cfg).unwrap(), InvertibleSearch::Found { .. }));
        let strict = vec![m(&[&[0, 1], &[0, 0]])];
        match contains_invertible(&strict, &cfg).unwrap() {
            InvertibleSearch::ProbablyNone { confidence, exact, .. } => {
                assert!(!exact);
                assert!(confidence > 1.0 - 1e-6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn closure_is_checked() {
        let space = vec![m(&[&[0, 1], &[0, 0]]), m(&[&[0, 0], &[1, 0]])];
        assert_eq!(radical_codim(&space), Err(Error::NotClosedUnderMultiplication));
    }

    #[test]
    fn upper_triangular_algebra_radical() {
        let space = vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 1], &[0, 0]]), m(&[&[0, 0], &[0, 1]])];
        assert_eq!(radical_codim(&space).unwrap(), 2);
        let rad = radical_basis(&space).unwrap();
        assert_eq!(rad.len(), 1);
        assert!((&rad[0] * &rad[0]).is_zero());
    }
}
