//! Block structures, oriented link patterns and their block-level aggregates.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Rational};

/// Sizes `b_1, ..., b_p` of the diagonal blocks of a parabolic subgroup of `GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BlockStructure {
    blocks: Vec<usize>,
}

impl BlockStructure {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidBlocks("at least one block is required".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidBlocks("block sizes must be positive".into()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn p(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Partial sum `d_k = b_1 + ... + b_k`, with `d_0 = 0`.
    pub fn d(&self, k: usize) -> usize {
        self.blocks[..k].iter().sum()
    }

    /// 1-indexed block containing the 1-indexed vertex `v`.
    pub fn block_of(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n(), "vertex {v} out of range");
        let mut acc = 0;
        for (i, &b) in self.blocks.iter().enumerate() {
            acc += b;
            if v <= acc {
                return i + 1;
            }
        }
        unreachable!()
    }

    /// 1-indexed vertices of the 1-indexed block `i`.
    pub fn vertices(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.d(i - 1) + 1..=self.d(i)
    }

    /// Dimension of the parabolic subgroup: `sum_i sum_{x <= i} b_i b_x`.
    pub fn dim_parabolic(&self) -> usize {
        (0..self.p())
            .map(|i| (0..=i).map(|x| self.blocks[i] * self.blocks[x]).sum::<usize>())
            .sum()
    }

    /// Whether a 0-indexed matrix position `(r, c)` lies in the block upper triangular pattern.
    pub fn in_parabolic(&self, r: usize, c: usize) -> bool {
        self.block_of(r + 1) <= self.block_of(c + 1)
    }
}

impl TryFrom<Vec<usize>> for BlockStructure {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<BlockStructure> for Vec<usize> {
    fn from(b: BlockStructure) -> Self {
        b.blocks
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for BlockStructure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad block size {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}

/// JSON document shared by patterns and their block aggregates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PatternDoc {
    Olp { n: usize, arrows: Vec<[usize; 2]> },
    Eolp { blocks: Vec<usize>, counts: Vec<Vec<usize>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Fixed,
    Source { target: usize },
    Target { source: usize },
}

/// Vertices `1..=n` with disjoint arrows `source -> target`. Arrows are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternDoc", into = "PatternDoc")]
pub struct OrientedLinkPattern {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl OrientedLinkPattern {
    pub fn new(n: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &(s, t) in &arrows {
            if s == 0 || t == 0 || s > n || t > n {
                return Err(Error::InvalidPattern(format!("arrow {s}->{t} leaves 1..={n}")));
            }
            if s == t {
                return Err(Error::InvalidPattern(format!("arrow {s}->{t} is a loop")));
            }
            for v in [s, t] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPattern(format!("vertex {v} lies on two arrows")));
                }
            }
        }
        arrows.sort_unstable();
        Ok(Self { n, arrows })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, arrows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arrows `(source, target)` in lexicographic order.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn role(&self, v: usize) -> VertexRole {
        for &(s, t) in &self.arrows {
            if s == v {
                return VertexRole::Source { target: t };
            }
            if t == v {
                return VertexRole::Target { source: s };
            }
        }
        VertexRole::Fixed
    }

    /// The 0/1 matrix with `N e_s = e_t` for each arrow `s -> t`.
    pub fn normal_form(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for &(s, t) in &self.arrows {
            m.set(t - 1, s - 1, Rational::one());
        }
        m
    }

    /// Inverse of [`Self::normal_form`]: accepts 0/1 partial permutation matrices squaring to zero.
    pub fn from_normal_form(m: &ExactMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotNormalForm("matrix is not square".into()));
        }
        let n = m.rows();
        let mut arrows = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let x = m.get(r, c);
                if x.is_one() {
                    arrows.push((c + 1, r + 1));
                } else if !x.is_zero() {
                    return Err(Error::NotNormalForm(format!("entry ({}, {}) is {x}", r + 1, c + 1)));
                }
            }
        }
        Self::new(n, arrows).map_err(|e| Error::NotNormalForm(e.to_string()))
    }
}

impl TryFrom<PatternDoc> for OrientedLinkPattern {
    type Error = Error;
    fn try_from(d: PatternDoc) -> Result<Self> {
        match d {
            PatternDoc::Olp { n, arrows } => Self::new(n, arrows.into_iter().map(|[s, t]| (s, t)).collect()),
            PatternDoc::Eolp { .. } => Err(Error::Parse("expected kind \"olp\"".into())),
        }
    }
}

impl From<OrientedLinkPattern> for PatternDoc {
    fn from(o: OrientedLinkPattern) -> Self {
        PatternDoc::Olp { n: o.n, arrows: o.arrows.iter().map(|&(s, t)| [s, t]).collect() }
    }
}

impl fmt::Display for OrientedLinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for (s, t) in &self.arrows {
            write!(f, " ({s}->{t})")?;
        }
        Ok(())
    }
}

/// Arrow multiplicities between blocks: `counts[i][j]` arrows go from block `j + 1` to block `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternDoc", into = "PatternDoc")]
pub struct EnhancedOlp {
    blocks: BlockStructure,
    counts: Vec<Vec<usize>>,
}

impl EnhancedOlp {
    pub fn new(blocks: BlockStructure, counts: Vec<Vec<usize>>) -> Result<Self> {
        let p = blocks.p();
        if counts.len() != p {
            return Err(Error::SizeMismatch { expected: p, found: counts.len() });
        }
        if let Some(row) = counts.iter().find(|r| r.len() != p) {
            return Err(Error::SizeMismatch { expected: p, found: row.len() });
        }
        for i in 0..p {
            let used: usize = (0..p).map(|j| counts[i][j] + counts[j][i]).sum();
            if used > blocks.blocks()[i] {
                return Err(Error::ConstraintViolation { block: i + 1, used, size: blocks.blocks()[i] });
            }
        }
        Ok(Self { blocks, counts })
    }

    pub fn zero(blocks: BlockStructure) -> Self {
        let p = blocks.p();
        Self { blocks, counts: vec![vec![0; p]; p] }
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    /// `counts()[i][j]` is the number of arrows from block `j + 1` to block `i + 1`.
    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn flat_counts(&self) -> Vec<usize> {
        self.counts.iter().flatten().copied().collect()
    }

    /// Number of fixed vertices in each block.
    pub fn dots(&self) -> Vec<usize> {
        let p = self.blocks.p();
        (0..p)
            .map(|i| self.blocks.blocks()[i] - (0..p).map(|j| self.counts[i][j] + self.counts[j][i]).sum::<usize>())
            .collect()
    }

    pub fn arrow_count(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    /// Block arrows `(source, target)`, 1-indexed, repeated by multiplicity, sorted.
    pub fn block_arrows(&self) -> Vec<(usize, usize)> {
        let p = self.blocks.p();
        let mut out = Vec::new();
        for j in 0..p {
            for i in 0..p {
                out.extend(std::iter::repeat((j + 1, i + 1)).take(self.counts[i][j]));
            }
        }
        out
    }

    fn label_with(&self, arrow: &str, sep: char) -> String {
        let mut s: String = self.block_arrows().iter().map(|(j, i)| format!("({j}{arrow}{i})")).collect();
        let dots: Vec<String> = self.dots().iter().map(ToString::to_string).collect();
        s.push(sep);
        s.push_str(&dots.join(","));
        s
    }

    /// Compact label such as `(1→1)(2→1)·0,0`: block arrows, then dots per block.
    pub fn label(&self) -> String {
        self.label_with("→", '·')
    }

    /// ASCII form of [`Self::label`], e.g. `(1->1)(2->1)|0,0`.
    pub fn ascii_label(&self) -> String {
        self.label_with("->", '|')
    }
}

impl TryFrom<PatternDoc> for EnhancedOlp {
    type Error = Error;
    fn try_from(d: PatternDoc) -> Result<Self> {
        match d {
            PatternDoc::Eolp { blocks, counts } => Self::new(BlockStructure::new(blocks)?, counts),
            PatternDoc::Olp { .. } => Err(Error::Parse("expected kind \"eolp\"".into())),
        }
    }
}

impl From<EnhancedOlp> for PatternDoc {
    fn from(e: EnhancedOlp) -> Self {
        PatternDoc::Eolp { blocks: e.blocks.blocks, counts: e.counts }
    }
}

impl fmt::Display for EnhancedOlp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Oriented link pattern with a nonzero scalar on each arrow, in arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledOlp {
    pattern: OrientedLinkPattern,
    labels: Vec<Rational>,
}

impl LabelledOlp {
    pub fn new(pattern: OrientedLinkPattern, labels: Vec<Rational>) -> Result<Self> {
        if labels.len() != pattern.arrows().len() {
            return Err(Error::SizeMismatch { expected: pattern.arrows().len(), found: labels.len() });
        }
        if labels.iter().any(Zero::is_zero) {
            return Err(Error::ZeroLabel);
        }
        Ok(Self { pattern, labels })
    }

    pub fn pattern(&self) -> &OrientedLinkPattern {
        &self.pattern
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }
}

/// Hom dimensions from the indecomposables `V_k` (`a`) and `U_{k,l}` (`b[k][l]`) into a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomProfile {
    pub a: Vec<usize>,
    pub b: Vec<Vec<usize>>,
}

impl HomProfile {
    /// Componentwise comparison.
    pub fn le(&self, other: &Self) -> bool {
        self.a.iter().zip(&other.a).all(|(x, y)| x <= y)
            && self.b.iter().flatten().zip(other.b.iter().flatten()).all(|(x, y)| x <= y)
    }
}

pub fn eolp_from_counts(blocks: &BlockStructure, counts: Vec<Vec<usize>>) -> Result<EnhancedOlp> {
    EnhancedOlp::new(blocks.clone(), counts)
}

/// Aggregates arrows of a pattern by the blocks containing their endpoints.
pub fn olp_to_eolp(olp: &OrientedLinkPattern, blocks: &BlockStructure) -> Result<EnhancedOlp> {
    if olp.n() != blocks.n() {
        return Err(Error::SizeMismatch { expected: blocks.n(), found: olp.n() });
    }
    let p = blocks.p();
    let mut counts = vec![vec![0; p]; p];
    for &(s, t) in olp.arrows() {
        counts[blocks.block_of(t) - 1][blocks.block_of(s) - 1] += 1;
    }
    EnhancedOlp::new(blocks.clone(), counts)
}
