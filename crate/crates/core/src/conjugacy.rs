//! Conjugacy under a parabolic subgroup, decided through the linear space of intertwiners
//! inside its Lie algebra.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{contains_invertible, determinant, nullspace, rank, InvertibleSearch, SampleConfig};
use crate::matrix::{ExactMatrix, Rational};
use crate::model::BlockStructure;

fn check_sizes(a: &ExactMatrix, b: &ExactMatrix, blocks: &BlockStructure) -> Result<usize> {
    let n = blocks.n();
    for m in [a, b] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::SizeMismatch { expected: n, found: if m.rows() != n { m.rows() } else { m.cols() } });
        }
    }
    Ok(n)
}

/// Coefficient matrix of `g ↦ g a - b g` on block upper triangular `g`, with the unknown positions.
fn system(a: &ExactMatrix, b: &ExactMatrix, blocks: &BlockStructure) -> Result<(ExactMatrix, Vec<(usize, usize)>)> {
    let n = check_sizes(a, b, blocks)?;
    let mut vars = Vec::new();
    let mut index = vec![usize::MAX; n * n];
    for r in 0..n {
        for c in 0..n {
            if blocks.in_parabolic(r, c) {
                index[r * n + c] = vars.len();
                vars.push((r, c));
            }
        }
    }
    let mut rows = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut eq = vec![Rational::default(); vars.len()];
            for t in 0..n {
                let k = index[r * n + t];
                if k != usize::MAX {
                    eq[k] += a.get(t, c);
                }
                let k = index[t * n + c];
                if k != usize::MAX {
                    eq[k] -= b.get(r, t);
                }
            }
            rows.push(eq);
        }
    }
    let m = if vars.is_empty() { ExactMatrix::zeros(n * n, 0) } else { ExactMatrix::from_rows(rows).expect("uniform") };
    Ok((m, vars))
}

/// Basis of `{g in Lie(P) : g a = b g}`.
pub fn conjugating_space(a: &ExactMatrix, b: &ExactMatrix, blocks: &BlockStructure) -> Result<Vec<ExactMatrix>> {
    let n = blocks.n();
    let (m, vars) = system(a, b, blocks)?;
    Ok(nullspace(&m)
        .into_iter()
        .map(|v| {
            let mut g = ExactMatrix::zeros(n, n);
            for (x, &(r, c)) in v.into_iter().zip(&vars) {
                g.set(r, c, x);
            }
            g
        })
        .collect())
}

/// Dimension of the centralizer of `n` in the Lie algebra of `P`.
pub fn centralizer_dim(n: &ExactMatrix, blocks: &BlockStructure) -> Result<usize> {
    let (m, vars) = system(n, n, blocks)?;
    Ok(vars.len() - rank(&m))
}

/// Orbit dimension `dim P - dim C_P(n)`.
pub fn orbit_dim_of(n: &ExactMatrix, blocks: &BlockStructure) -> Result<usize> {
    Ok(blocks.dim_parabolic() - centralizer_dim(n, blocks)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjugacyVerdict {
    Conjugate { certificate: ExactMatrix },
    ProbablyNotConjugate { trials: u32, seed: u64, range: i64, confidence: f64, exact: bool },
}

impl ConjugacyVerdict {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Self::Conjugate { .. })
    }
}

/// Searches for `g` in `P` with `g a = b g`. A returned certificate has been re-checked exactly.
pub fn is_p_conjugate(
    a: &ExactMatrix,
    b: &ExactMatrix,
    blocks: &BlockStructure,
    cfg: &SampleConfig,
) -> Result<ConjugacyVerdict> {
    let n = check_sizes(a, b, blocks)?;
    if a == b {
        return Ok(ConjugacyVerdict::Conjugate { certificate: ExactMatrix::identity(n) });
    }
    let space = conjugating_space(a, b, blocks)?;
    match contains_invertible(&space, cfg)? {
        InvertibleSearch::Found { certificate: g } => {
            let in_pattern = (0..n).all(|r| (0..n).all(|c| blocks.in_parabolic(r, c) || g.get(r, c).is_zero()));
            assert!(in_pattern, "certificate leaves the parabolic pattern");
            assert!(&g * a == b * &g, "certificate does not intertwine");
            assert!(!determinant(&g)?.is_zero(), "certificate is singular");
            Ok(ConjugacyVerdict::Conjugate { certificate: g })
        }
        InvertibleSearch::ProbablyNone { trials, seed, range, confidence, exact } => {
            Ok(ConjugacyVerdict::ProbablyNotConjugate { trials, seed, range, confidence, exact })
        }
    }
}
