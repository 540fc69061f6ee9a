//! Orbits of a parabolic subgroup on 2-nilpotent matrices: enumeration by block arrow
//! counts, hom dimensions, the degeneration order, identification of Borel orbits and
//! the generic orbit.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{intersection_dim, prefix_row_ranks, QuiverRep, SubspaceBasis};
use crate::matrix::ExactMatrix;
use crate::model::{
    olp_to_eolp, BlockStructure, EnhancedOlp, HomProfile, LabelledOlp, OrientedLinkPattern,
};
use crate::poset::{Hasse, Poset};

/// All orbit classes for the given blocks, in lexicographic order of the flattened counts.
pub fn enumerate_orbit_classes(blocks: &BlockStructure) -> Vec<EnhancedOlp> {
    let p = blocks.p();
    let mut cap = blocks.blocks().to_vec();
    let mut counts = vec![vec![0; p]; p];
    let mut out = Vec::new();
    fill(0, p, &mut cap, &mut counts, &mut |c| {
        out.push(EnhancedOlp::new(blocks.clone(), c.to_vec()).expect("respects capacities"));
    });
    out
}

fn fill(pos: usize, p: usize, cap: &mut [usize], counts: &mut [Vec<usize>], emit: &mut impl FnMut(&[Vec<usize>])) {
    if pos == p * p {
        emit(counts);
        return;
    }
    let (i, j) = (pos / p, pos % p);
    let max = if i == j { cap[i] / 2 } else { cap[i].min(cap[j]) };
    for m in 0..=max {
        counts[i][j] = m;
        if i == j {
            cap[i] -= 2 * m;
        } else {
            cap[i] -= m;
            cap[j] -= m;
        }
        fill(pos + 1, p, cap, counts, emit);
        if i == j {
            cap[i] += 2 * m;
        } else {
            cap[i] += m;
            cap[j] += m;
        }
    }
    counts[i][j] = 0;
}

/// Indecomposable summand: `V(k)` is a fixed vertex in block `k`, `U(i, j)` an arrow from block `j` to block `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Indec {
    V(usize),
    U(usize, usize),
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indec::V(k) => write!(f, "V_{k}"),
            Indec::U(i, j) => write!(f, "U_{{{i},{j}}}"),
        }
    }
}

fn le(a: usize, b: usize) -> usize {
    usize::from(a <= b)
}

/// Dimension of the morphism space between two indecomposables.
pub fn hom_dim_indec(x: Indec, y: Indec) -> usize {
    match (x, y) {
        (Indec::V(k), Indec::V(i)) | (Indec::V(k), Indec::U(i, _)) => le(i, k),
        (Indec::U(_, l), Indec::V(i)) => le(i, l),
        (Indec::U(k, l), Indec::U(i, j)) => le(i, l) + le(j, l) * le(i, k),
    }
}

/// Indecomposable summands with their multiplicities.
pub fn summands(e: &EnhancedOlp) -> Vec<(Indec, usize)> {
    let p = e.blocks().p();
    let mut out = Vec::new();
    for i in 0..p {
        for j in 0..p {
            if e.counts()[i][j] > 0 {
                out.push((Indec::U(i + 1, j + 1), e.counts()[i][j]));
            }
        }
    }
    for (k, &d) in e.dots().iter().enumerate() {
        if d > 0 {
            out.push((Indec::V(k + 1), d));
        }
    }
    out.sort();
    out
}

pub fn hom_profile(e: &EnhancedOlp) -> HomProfile {
    let p = e.blocks().p();
    let c = e.counts();
    let dots = e.dots();
    let mut a = vec![0; p];
    for k in 0..p {
        a[k] = (0..=k).map(|i| dots[i] + c[i].iter().sum::<usize>()).sum();
    }
    let mut b = vec![vec![0; p]; p];
    for k in 0..p {
        for l in 0..p {
            let both: usize = (0..=k).map(|i| (0..=l).map(|j| c[i][j]).sum::<usize>()).sum();
            b[k][l] = a[l] + both;
        }
    }
    HomProfile { a, b }
}

/// Hom dimensions from a representation into the indecomposables, `a[i] = [M, V_i]`, `b[i][j] = [M, U_{i,j}]`.
pub fn dual_hom_profile(e: &EnhancedOlp) -> HomProfile {
    let p = e.blocks().p();
    let c = e.counts();
    let dots = e.dots();
    let sources = |j: usize| (0..p).map(|i| c[i][j]).sum::<usize>();
    let mut a = vec![0; p];
    for i in 0..p {
        a[i] = (i..p).map(|k| dots[k] + sources(k)).sum();
    }
    let mut b = vec![vec![0; p]; p];
    for i in 0..p {
        for j in 0..p {
            let both: usize = (i..p).map(|t| (j..p).map(|s| c[t][s]).sum::<usize>()).sum();
            b[i][j] = a[i] + both;
        }
    }
    HomProfile { a, b }
}

fn same_blocks(e: &EnhancedOlp, f: &EnhancedOlp) -> Result<()> {
    if e.blocks() != f.blocks() {
        return Err(Error::BlockMismatch);
    }
    Ok(())
}

/// `dim Hom(M_E, M_F)`, evaluated through both profiles.
pub fn hom_dim(e: &EnhancedOlp, f: &EnhancedOlp) -> Result<usize> {
    same_blocks(e, f)?;
    let p = e.blocks().p();
    let (pf, de) = (hom_profile(f), dual_hom_profile(e));
    let (ce, cf) = (e.counts(), f.counts());
    let (ne, nf) = (e.dots(), f.dots());
    let mut left = 0;
    let mut right = 0;
    for i in 0..p {
        left += ne[i] * pf.a[i];
        right += nf[i] * de.a[i];
        for j in 0..p {
            left += ce[i][j] * pf.b[i][j];
            right += cf[i][j] * de.b[i][j];
        }
    }
    assert_eq!(left, right, "hom profiles disagree for {e} and {f}");
    Ok(left)
}

/// Degeneration order: `F` lies in the orbit closure of `E`.
pub fn deg_leq(e: &EnhancedOlp, f: &EnhancedOlp) -> Result<bool> {
    same_blocks(e, f)?;
    Ok(hom_profile(e).le(&hom_profile(f)))
}

pub fn orbit_dim(e: &EnhancedOlp) -> usize {
    e.blocks().dim_parabolic() - hom_dim(e, e).expect("same blocks")
}

/// Classes with their degeneration order.
pub fn orbit_poset(blocks: &BlockStructure) -> (Vec<EnhancedOlp>, Poset) {
    let classes = enumerate_orbit_classes(blocks);
    let profiles: Vec<HomProfile> = classes.iter().map(hom_profile).collect();
    let n = classes.len();
    let rows: Vec<Vec<bool>> =
        (0..n).into_par_iter().map(|i| (0..n).map(|j| profiles[i].le(&profiles[j])).collect()).collect();
    let poset = Poset::from_fn(n, |i, j| rows[i][j]);
    (classes, poset)
}

/// Hasse diagram; an edge `E -> F` means `F` is a maximal degeneration of `E`.
pub fn hasse(blocks: &BlockStructure) -> Hasse<EnhancedOlp> {
    let (classes, poset) = orbit_poset(blocks);
    Hasse::from_poset(classes, &poset)
}

/// Canonical pattern for a class, the dense B-orbit inside it. Arrows are ranked by
/// source block ascending, then target block descending. In each block the sources
/// take the first vertices in rank order, fixed vertices follow, and targets take
/// the last vertices in reverse rank order.
pub fn normal_form(e: &EnhancedOlp) -> OrientedLinkPattern {
    let blocks = e.blocks();
    let mut arrows = e.block_arrows();
    arrows.sort_by_key(|&(j, i)| (j, std::cmp::Reverse(i)));
    let mut first: Vec<usize> = (1..=blocks.p()).map(|i| blocks.d(i - 1) + 1).collect();
    let mut last: Vec<usize> = (1..=blocks.p()).map(|i| blocks.d(i)).collect();
    let pairs = arrows
        .iter()
        .map(|&(j, i)| {
            let s = first[j - 1];
            first[j - 1] += 1;
            let t = last[i - 1];
            last[i - 1] -= 1;
            (s, t)
        })
        .collect();
    OrientedLinkPattern::new(blocks.n(), pairs).expect("distinct vertices")
}

/// All patterns whose block aggregate is `e`, sorted.
pub fn expand_to_b_orbits(e: &EnhancedOlp) -> Vec<OrientedLinkPattern> {
    let blocks = e.blocks();
    let n = blocks.n();
    let block: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { blocks.block_of(v) - 1 }).collect();
    let mut st = Expand {
        n,
        block,
        counts: e.counts().to_vec(),
        dots: e.dots(),
        used: vec![false; n + 1],
        arrows: Vec::new(),
        out: Vec::new(),
    };
    st.run(1);
    let mut out = st.out;
    out.sort();
    out
}

struct Expand {
    n: usize,
    block: Vec<usize>,
    counts: Vec<Vec<usize>>,
    dots: Vec<usize>,
    used: Vec<bool>,
    arrows: Vec<(usize, usize)>,
    out: Vec<OrientedLinkPattern>,
}

impl Expand {
    fn run(&mut self, from: usize) {
        let Some(v) = (from..=self.n).find(|&v| !self.used[v]) else {
            self.out.push(OrientedLinkPattern::new(self.n, self.arrows.clone()).expect("disjoint arrows"));
            return;
        };
        let bv = self.block[v];
        self.used[v] = true;
        if self.dots[bv] > 0 {
            self.dots[bv] -= 1;
            self.run(v + 1);
            self.dots[bv] += 1;
        }
        for w in v + 1..=self.n {
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            for (s, t) in [(v, w), (w, v)] {
                let (bt, bs) = (self.block[t], self.block[s]);
                if self.counts[bt][bs] > 0 {
                    self.counts[bt][bs] -= 1;
                    self.arrows.push((s, t));
                    self.run(v + 1);
                    self.arrows.pop();
                    self.counts[bt][bs] += 1;
                }
            }
            self.used[w] = false;
        }
        self.used[v] = false;
    }
}

/// Block aggregate of a pattern normal form.
pub fn block_sums(n: &ExactMatrix, blocks: &BlockStructure) -> Result<EnhancedOlp> {
    if n.rows() != blocks.n() || n.cols() != blocks.n() {
        return Err(Error::SizeMismatch { expected: blocks.n(), found: n.rows() });
    }
    olp_to_eolp(&OrientedLinkPattern::from_normal_form(n)?, blocks)
}

/// Table `s(i, j) = rank X[i..=n, 1..=j]` for `1 <= i <= n + 1`, `0 <= j <= n`: the rank of the
/// lower-left corner, i.e. the dimension of `X V_j` modulo `V_{i-1}`, where `V_k` is spanned by
/// the first `k` standard vectors. It is constant on Borel orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantTable {
    n: usize,
    s: Vec<Vec<usize>>,
}

impl InvariantTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!((1..=self.n + 1).contains(&i) && j <= self.n, "index ({i}, {j}) out of range");
        self.s[i - 1][j]
    }

    /// Second difference at `(i, j)`; equals one exactly when `j -> i` is an arrow.
    pub fn jump(&self, i: usize, j: usize) -> i64 {
        let g = |i, j| self.get(i, j) as i64;
        g(i, j) - g(i, j - 1) - g(i + 1, j) + g(i + 1, j - 1)
    }
}

fn square_zero(x: &ExactMatrix) -> Result<usize> {
    if !x.is_square() {
        return Err(Error::ShapeMismatch("matrix must be square".into()));
    }
    if !(x * x).is_zero() {
        return Err(Error::NotTwoNilpotent);
    }
    Ok(x.rows())
}

pub fn invariant_table(x: &ExactMatrix) -> Result<InvariantTable> {
    let n = square_zero(x)?;
    let reversed = ExactMatrix::from_fn(n, n, |r, c| x.get(n - 1 - r, c).clone());
    let mut s = vec![vec![0; n + 1]; n + 1];
    for j in 0..=n {
        let pr = prefix_row_ranks(&reversed.submatrix(0..n, 0..j));
        for i in 1..=n + 1 {
            s[i - 1][j] = pr[n + 1 - i];
        }
    }
    Ok(InvariantTable { n, s })
}

/// Same table computed through explicit subspace intersections.
pub fn invariant_table_direct(x: &ExactMatrix) -> Result<InvariantTable> {
    let n = square_zero(x)?;
    let mut s = vec![vec![0; n + 1]; n + 1];
    for j in 0..=n {
        let image = SubspaceBasis::column_span(&x.submatrix(0..n, 0..j));
        for i in 1..=n + 1 {
            s[i - 1][j] = image.dim() - intersection_dim(&image, &SubspaceBasis::coordinate(n, 0..i - 1))?;
        }
    }
    Ok(InvariantTable { n, s })
}

/// Pattern whose normal form lies in the Borel orbit of `x`.
pub fn identify(x: &ExactMatrix) -> Result<OrientedLinkPattern> {
    let table = invariant_table(x)?;
    let n = table.n();
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            match table.jump(i, j) {
                0 => {}
                1 => arrows.push((j, i)),
                _ => return Err(Error::ReconstructionMismatch),
            }
        }
    }
    let olp = OrientedLinkPattern::new(n, arrows).map_err(|_| Error::ReconstructionMismatch)?;
    if invariant_table(&olp.normal_form())? != table {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(olp)
}

/// Class of the generic orbit: arrows `k -> n - k + 1` and a middle fixed vertex for odd `n`.
pub fn open_orbit(blocks: &BlockStructure) -> EnhancedOlp {
    let n = blocks.n();
    let arrows = (1..=n / 2).map(|k| (k, n - k + 1)).collect();
    let olp = OrientedLinkPattern::new(n, arrows).expect("disjoint arrows");
    olp_to_eolp(&olp, blocks).expect("sizes agree")
}

/// Flag representation of the normal form of a class.
pub fn flag_rep(e: &EnhancedOlp) -> QuiverRep {
    QuiverRep::from_flag(e.blocks().blocks(), &normal_form(e).normal_form()).expect("well formed")
}

/// Matrix with entry `lambda` at `(t, s)` for each labelled arrow `s -> t`.
pub fn u_normal_form(l: &LabelledOlp) -> ExactMatrix {
    let n = l.pattern().n();
    let mut m = ExactMatrix::zeros(n, n);
    for (&(s, t), x) in l.pattern().arrows().iter().zip(l.labels()) {
        m.set(t - 1, s - 1, x.clone());
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    /// Summands shared by both sides.
    pub common: Vec<(Indec, usize)>,
    /// Remaining summands of the upper class.
    pub upper: Vec<(Indec, usize)>,
    /// Remaining summands of the degenerate class.
    pub lower: Vec<(Indec, usize)>,
    /// `[X, D] = [X, D']` and `[D, X] = [D', X]` for every shared indecomposable `X`.
    pub hom_conditions: bool,
    pub codim: usize,
}

impl CoverReport {
    pub fn passes(&self) -> bool {
        self.hom_conditions && self.codim == 1
    }
}

fn hom_sum(xs: &[(Indec, usize)], ys: &[(Indec, usize)]) -> usize {
    xs.iter().map(|&(x, a)| ys.iter().map(|&(y, b)| a * b * hom_dim_indec(x, y)).sum::<usize>()).sum()
}

/// Checks that `f` is a maximal degeneration of `e` and reports the cancellation data.
pub fn verify_cover(e: &EnhancedOlp, f: &EnhancedOlp) -> Result<CoverReport> {
    if !deg_leq(e, f)? || e == f {
        return Err(Error::NotACover(format!("{f} is not a proper degeneration of {e}")));
    }
    if let Some(mid) = enumerate_orbit_classes(e.blocks())
        .into_iter()
        .find(|m| m != e && m != f && deg_leq(e, m).unwrap_or(false) && deg_leq(m, f).unwrap_or(false))
    {
        return Err(Error::NotACover(format!("{mid} lies strictly between")));
    }
    let se = summands(e);
    let sf = summands(f);
    let mult = |s: &[(Indec, usize)], x: Indec| s.iter().find(|(y, _)| *y == x).map_or(0, |&(_, m)| m);
    let mut keys: Vec<Indec> = se.iter().chain(&sf).map(|&(x, _)| x).collect();
    keys.sort();
    keys.dedup();
    let (mut common, mut upper, mut lower) = (Vec::new(), Vec::new(), Vec::new());
    for x in keys {
        let (a, b) = (mult(&se, x), mult(&sf, x));
        let w = a.min(b);
        if w > 0 {
            common.push((x, w));
        }
        if a > w {
            upper.push((x, a - w));
        }
        if b > w {
            lower.push((x, b - w));
        }
    }
    let hom_conditions = common.iter().all(|&(x, _)| {
        let one = [(x, 1)];
        hom_sum(&one, &upper) == hom_sum(&one, &lower) && hom_sum(&upper, &one) == hom_sum(&lower, &one)
    });
    let codim = orbit_dim(e) - orbit_dim(f);
    Ok(CoverReport { common, upper, lower, hom_conditions, codim })
}
