//! 3-nilpotent matrices under a two-block parabolic: injective representations of
//! `1 -> 2` with a loop `α`, `α³ = 0`, described through a catalog of 30 indecomposables.
//!
//! The degeneration order on classes is taken to be the hom order over the catalog:
//! `A <= B` iff `[X, A] <= [X, B]` for every indecomposable `X`. For a representation-finite
//! algebra the two orders coincide.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, intertwiners, radical_codim, rank, QuiverRep};
use crate::matrix::{int, ExactMatrix};
use crate::poset::{Hasse, Poset};

struct Raw {
    sup: u8,
    i: usize,
    j: usize,
    nil: &'static [(i64, usize, usize)],
    dims: &'static str,
}

const fn raw(sup: u8, i: usize, j: usize, nil: &'static [(i64, usize, usize)], dims: &'static str) -> Raw {
    Raw { sup, i, j, nil, dims }
}

const CHAIN3: &[(i64, usize, usize)] = &[(1, 2, 1), (1, 3, 2)];

// Loops are sums of signed matrix units (sign, row, column), 1-indexed.
const RAW: [Raw; 30] = [
    raw(0, 0, 1, &[], "0 1"),
    raw(0, 0, 2, &[(1, 2, 1)], "0 1 0 1"),
    raw(0, 0, 3, CHAIN3, "0 1 0 1 0 1"),
    raw(0, 1, 0, &[], "1 0"),
    raw(0, 1, 1, &[], "1 1"),
    raw(1, 1, 2, &[(1, 2, 1)], "1 1 0 1"),
    raw(2, 1, 2, &[(1, 1, 2)], "0 1 1 1"),
    raw(1, 1, 3, CHAIN3, "1 1 0 1 0 1"),
    raw(2, 1, 3, &[(1, 3, 1), (1, 1, 2)], "0 1 1 1 0 1"),
    raw(3, 1, 3, &[(1, 1, 2), (1, 2, 3)], "0 1 0 1 1 1"),
    raw(0, 1, 4, &[(1, 2, 1), (1, 2, 3), (1, 3, 4)], "0 1 1 2 0 1"),
    raw(0, 2, 2, &[(1, 2, 1)], "1 1 1 1"),
    raw(1, 2, 3, CHAIN3, "1 1 1 1 0 1"),
    raw(2, 2, 3, &[(1, 3, 1), (1, 2, 3)], "1 1 0 1 1 1"),
    raw(3, 2, 3, &[(1, 1, 2), (1, 2, 3)], "0 1 1 1 1 1"),
    raw(1, 2, 4, &[(1, 3, 1), (1, 4, 2), (1, 4, 3)], "1 1 1 2 0 1"),
    raw(2, 2, 4, &[(1, 1, 2), (1, 1, 3), (1, 3, 4)], "0 1 1 2 1 1"),
    raw(1, 2, 5, &[(1, 3, 1), (1, 4, 2), (1, 3, 4), (1, 1, 5)], "1 2 1 2 0 1"),
    raw(2, 2, 5, &[(1, 3, 2), (1, 1, 4), (1, 2, 5), (1, 4, 5)], "0 1 1 2 1 2"),
    raw(0, 2, 6, &[(1, 1, 3), (1, 2, 1), (1, 2, 4), (-1, 4, 3), (1, 5, 1), (1, 6, 2)], "0 1 1 2 1 2 0 1"),
    raw(0, 3, 3, CHAIN3, "1 1 1 1 1 1"),
    raw(0, 3, 4, &[(1, 1, 2), (1, 1, 4), (1, 4, 3)], "1 1 1 2 1 1"),
    raw(1, 3, 5, &[(1, 4, 2), (1, 2, 3), (1, 5, 3), (1, 1, 5)], "1 2 1 2 1 1"),
    raw(2, 3, 5, &[(1, 1, 2), (1, 4, 3), (1, 1, 4), (1, 2, 5)], "1 1 1 2 1 2"),
    raw(0, 3, 6, &[(1, 1, 2), (1, 4, 2), (1, 5, 3), (1, 4, 5), (1, 2, 6), (-1, 5, 6)], "1 2 1 2 1 2"),
    raw(1, 3, 6, &[(1, 2, 1), (1, 3, 2), (1, 3, 4), (-1, 4, 1), (1, 5, 2), (1, 6, 3)], "1 1 1 2 1 2 0 1"),
    raw(2, 3, 6, &[(1, 2, 5), (1, 3, 2), (1, 3, 6), (1, 5, 4), (1, 6, 1), (-1, 6, 5)], "0 1 1 2 1 2 1 1"),
    raw(0, 3, 7, &[(1, 1, 2), (1, 4, 2), (-1, 6, 3), (-1, 1, 5), (-1, 4, 6), (-1, 5, 7)], "1 2 1 3 1 2"),
    raw(0, 4, 6, &[(1, 2, 1), (1, 3, 2), (1, 3, 5), (1, 4, 3), (-1, 5, 1), (1, 6, 2)], "1 1 1 2 1 2 1 1"),
    raw(0, 4, 7, &[(1, 5, 2), (1, 1, 3), (1, 2, 4), (1, 6, 4), (1, 3, 7), (1, 6, 7)], "1 2 2 3 1 2"),
];

/// Position of the non-injective entry `U_{1,0}` in the catalog.
pub const NON_INJECTIVE: usize = 3;

/// Indecomposable representation `K^i -> K^j` with the embedding onto the first `i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry3 {
    pub id: String,
    pub i: usize,
    pub j: usize,
    pub embed: ExactMatrix,
    pub nil: ExactMatrix,
    /// Dimension vector on the covering quiver, kept verbatim.
    pub covering_dim: &'static str,
}

impl CatalogEntry3 {
    pub fn rep(&self) -> QuiverRep {
        QuiverRep::new(vec![self.i, self.j], vec![self.embed.clone()], self.nil.clone()).expect("catalog shapes")
    }
}

fn build(r: &Raw) -> CatalogEntry3 {
    let id = if r.sup == 0 { format!("U_{{{},{}}}", r.i, r.j) } else { format!("U^{{({})}}_{{{},{}}}", r.sup, r.i, r.j) };
    let embed = ExactMatrix::from_fn(r.j, r.i, |a, b| int(i64::from(a == b)));
    let mut nil = ExactMatrix::zeros(r.j, r.j);
    for &(sign, row, col) in r.nil {
        nil.set(row - 1, col - 1, int(sign));
    }
    CatalogEntry3 { id, i: r.i, j: r.j, embed, nil, covering_dim: r.dims }
}

pub fn catalog() -> &'static [CatalogEntry3] {
    static CATALOG: OnceLock<Vec<CatalogEntry3>> = OnceLock::new();
    CATALOG.get_or_init(|| RAW.iter().map(build).collect())
}

/// Resolves ids such as `U^{(1)}_{2,4}`, `U^(1)_{2,4}` or `U_{0,1}` to a catalog position.
pub fn index_of(id: &str) -> Result<usize> {
    let unknown = || Error::UnknownId(id.to_string());
    let rest = id.trim().strip_prefix('U').ok_or_else(unknown)?;
    let nums: Vec<usize> = rest
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| unknown()))
        .collect::<Result<_>>()?;
    let (sup, i, j) = match nums[..] {
        [i, j] => (0, i, j),
        [s, i, j] if s > 0 => (s, i, j),
        _ => return Err(unknown()),
    };
    RAW.iter().position(|r| usize::from(r.sup) == sup && r.i == i && r.j == j).ok_or_else(unknown)
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry3> {
    Ok(&catalog()[index_of(id)?])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub id: String,
    pub cube_zero: bool,
    pub square_zero: bool,
    pub injective: bool,
    pub injective_expected: bool,
    pub end_dim: usize,
    pub radical_codim: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryCheck>,
    pub all_passed: bool,
}

impl CatalogReport {
    pub fn failures(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| !e.passed).map(|e| e.id.as_str()).collect()
    }
}

/// Checks `α³ = 0`, injectivity of the embedding and locality of every endomorphism algebra.
pub fn verify_catalog() -> CatalogReport {
    let entries: Vec<EntryCheck> = catalog()
        .par_iter()
        .enumerate()
        .map(|(k, e)| {
            let cube_zero = e.nil.pow(3).is_zero();
            let square_zero = e.nil.pow(2).is_zero();
            let injective = rank(&e.embed) == e.i;
            let injective_expected = k != NON_INJECTIVE;
            let end = intertwiners(&e.rep(), &e.rep()).expect("same quiver").as_block_diagonal();
            let codim = radical_codim(&end).unwrap_or(usize::MAX);
            EntryCheck {
                id: e.id.clone(),
                cube_zero,
                square_zero,
                injective,
                injective_expected,
                end_dim: end.len(),
                radical_codim: codim,
                passed: cube_zero && injective == injective_expected && codim == 1,
            }
        })
        .collect();
    let all_passed = entries.iter().all(|e| e.passed);
    CatalogReport { entries, all_passed }
}

/// `table[r][c] = dim Hom(catalog[r], catalog[c])`, computed once.
pub fn hom_table() -> &'static [Vec<usize>] {
    static TABLE: OnceLock<Vec<Vec<usize>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let cat = catalog();
        let reps: Vec<QuiverRep> = cat.iter().map(CatalogEntry3::rep).collect();
        (0..cat.len())
            .into_par_iter()
            .map(|r| (0..cat.len()).map(|c| linalg::hom_dim(&reps[r], &reps[c]).expect("same quiver")).collect())
            .collect()
    })
}

pub fn hom_dim3(left: &str, right: &str) -> Result<usize> {
    Ok(hom_table()[index_of(left)?][index_of(right)?])
}

/// Multiplicities of catalog entries in a direct sum, indexed by catalog position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition3 {
    mult: Vec<usize>,
}

impl Decomposition3 {
    pub fn zero() -> Self {
        Self { mult: vec![0; RAW.len()] }
    }

    pub fn from_multiplicities(mult: Vec<usize>) -> Result<Self> {
        if mult.len() != RAW.len() {
            return Err(Error::SizeMismatch { expected: RAW.len(), found: mult.len() });
        }
        Ok(Self { mult })
    }

    pub fn from_ids<'a>(pairs: impl IntoIterator<Item = (&'a str, usize)>) -> Result<Self> {
        let mut d = Self::zero();
        for (id, m) in pairs {
            d.mult[index_of(id)?] += m;
        }
        Ok(d)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    pub fn get(&self, id: &str) -> Result<usize> {
        Ok(self.mult[index_of(id)?])
    }

    /// Total dimension pair `(sum m i, sum m j)`.
    pub fn dims(&self) -> (usize, usize) {
        self.mult.iter().zip(&RAW).fold((0, 0), |(a, b), (m, r)| (a + m * r.i, b + m * r.j))
    }

    pub fn is_injective(&self) -> bool {
        self.mult[NON_INJECTIVE] == 0
    }

    /// Summands with multiplicities, largest catalog position first.
    pub fn summands(&self) -> Vec<(&'static str, usize)> {
        let cat = catalog();
        (0..RAW.len()).rev().filter(|&k| self.mult[k] > 0).map(|k| (cat[k].id.as_str(), self.mult[k])).collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .summands()
            .into_iter()
            .map(|(id, m)| if m == 1 { id.to_string() } else { format!("{id}^{m}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }

    fn add(&mut self, k: usize, m: usize) {
        self.mult[k] += m;
    }
}

impl fmt::Display for Decomposition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Decomposition3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let summands = self.summands();
        let mut map = s.serialize_map(Some(summands.len()))?;
        for (id, m) in summands {
            map.serialize_entry(id, &m)?;
        }
        map.end()
    }
}

impl TryFrom<BTreeMap<String, usize>> for Decomposition3 {
    type Error = Error;
    fn try_from(m: BTreeMap<String, usize>) -> Result<Self> {
        Self::from_ids(m.iter().map(|(k, v)| (k.as_str(), *v)))
    }
}

impl<'de> Deserialize<'de> for Decomposition3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = BTreeMap::<String, usize>::deserialize(d)?;
        Self::try_from(m).map_err(serde::de::Error::custom)
    }
}

/// `[A, B]` by bilinear expansion over the catalog hom table.
pub fn hom_dim_decomp(a: &Decomposition3, b: &Decomposition3) -> usize {
    let t = hom_table();
    let mut total = 0;
    for (u, &ma) in a.mult.iter().enumerate().filter(|(_, m)| **m > 0) {
        for (v, &mb) in b.mult.iter().enumerate().filter(|(_, m)| **m > 0) {
            total += ma * mb * t[u][v];
        }
    }
    total
}

/// `[X, A]` for every catalog entry `X`.
pub fn hom_vector(a: &Decomposition3) -> Vec<usize> {
    let t = hom_table();
    (0..RAW.len()).map(|x| a.mult.iter().enumerate().map(|(u, m)| m * t[x][u]).sum()).collect()
}

pub fn hom_leq3(a: &Decomposition3, b: &Decomposition3) -> Result<bool> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", a.dims(), b.dims())));
    }
    Ok(hom_vector(a).iter().zip(hom_vector(b)).all(|(x, y)| *x <= y))
}

fn check_blocks(b1: usize, b2: usize) -> Result<()> {
    if b1 == 0 || b2 == 0 {
        return Err(Error::InvalidBlocks("block sizes must be positive".into()));
    }
    Ok(())
}

pub fn orbit_dim3(a: &Decomposition3, b1: usize, b2: usize) -> Result<usize> {
    check_blocks(b1, b2)?;
    if a.dims() != (b1, b1 + b2) || !a.is_injective() {
        return Err(Error::DimensionMismatch(format!("{:?} is not a class for ({b1}, {b2})", a.dims())));
    }
    Ok(b1 * b1 + b2 * b2 + b1 * b2 - hom_dim_decomp(a, a))
}

/// All injective classes of dimension `(b1, b1 + b2)`, in depth-first catalog order.
pub fn enumerate_orbit_classes3(b1: usize, b2: usize) -> Result<Vec<Decomposition3>> {
    check_blocks(b1, b2)?;
    let mut out = Vec::new();
    let mut cur = Decomposition3::zero();
    knapsack(0, b1, b1 + b2, &mut cur, &mut out);
    Ok(out)
}

fn knapsack(k: usize, i_left: usize, j_left: usize, cur: &mut Decomposition3, out: &mut Vec<Decomposition3>) {
    if i_left == 0 && j_left == 0 {
        out.push(cur.clone());
        return;
    }
    if k == RAW.len() {
        return;
    }
    if k == NON_INJECTIVE {
        knapsack(k + 1, i_left, j_left, cur, out);
        return;
    }
    let r = &RAW[k];
    let bound = if r.i == 0 { j_left / r.j } else { (i_left / r.i).min(j_left / r.j) };
    for m in 0..=bound {
        cur.mult[k] = m;
        knapsack(k + 1, i_left - m * r.i, j_left - m * r.j, cur, out);
    }
    cur.mult[k] = 0;
}

pub fn order3(b1: usize, b2: usize) -> Result<(Vec<Decomposition3>, Poset)> {
    let classes = enumerate_orbit_classes3(b1, b2)?;
    let vecs: Vec<Vec<usize>> = classes.par_iter().map(hom_vector).collect();
    let poset = Poset::from_fn(classes.len(), |a, b| vecs[a].iter().zip(&vecs[b]).all(|(x, y)| x <= y));
    Ok((classes, poset))
}

/// Hasse diagram of the hom order; an edge `A -> B` means `B` is a maximal degeneration of `A`.
pub fn hasse3(b1: usize, b2: usize) -> Result<Hasse<Decomposition3>> {
    let (classes, poset) = order3(b1, b2)?;
    Ok(Hasse::from_poset(classes, &poset))
}

/// Class of the generic orbit for blocks `(b1, b2)`.
pub fn open_orbit3(b1: usize, b2: usize) -> Result<Decomposition3> {
    check_blocks(b1, b2)?;
    let n = b1 + b2;
    let (r, rem) = (n / 3, n % 3);
    let idx = |id: &str| index_of(id).expect("catalog id");
    let mut d = Decomposition3::zero();
    let big_tail = |d: &mut Decomposition3| {
        let tail = ["U^{(1)}_{3,6}", "U^{(1)}_{2,4}", "U^{(1)}_{1,2}"][rem];
        d.add(idx(tail), 1);
    };
    if b1 <= b2 {
        if b1 <= r {
            d.add(idx("U^{(1)}_{1,3}"), b1);
            d.add(idx("U_{0,3}"), r - b1);
            match rem {
                1 => d.add(idx("U_{0,1}"), 1),
                2 => d.add(idx("U_{0,2}"), 1),
                _ => {}
            }
        } else {
            d.add(idx("U^{(1)}_{3,6}"), b1 - r - 1);
            d.add(idx("U^{(1)}_{1,3}"), n - 2 * b1);
            big_tail(&mut d);
        }
    } else if b2 <= r {
        d.add(idx("U^{(1)}_{2,3}"), b2);
        d.add(idx("U_{3,3}"), r - b2);
        match rem {
            1 => d.add(idx("U_{1,1}"), 1),
            2 => d.add(idx("U_{2,2}"), 1),
            _ => {}
        }
    } else {
        d.add(idx("U^{(1)}_{3,6}"), b2 - r - 1);
        d.add(idx("U^{(1)}_{2,3}"), n - 2 * b2);
        big_tail(&mut d);
    }
    Ok(d)
}

/// Direct sum of the catalog representations.
pub fn assemble(d: &Decomposition3) -> QuiverRep {
    let cat = catalog();
    let mut rep = QuiverRep::zero(2);
    for (k, &m) in d.mult.iter().enumerate() {
        for _ in 0..m {
            rep = rep.direct_sum(&cat[k].rep()).expect("two vertices");
        }
    }
    rep
}

/// Matrix in the class: the assembled loop with the embedded coordinates moved to the front.
pub fn matrix_representative(d: &Decomposition3) -> ExactMatrix {
    let cat = catalog();
    let mut front = Vec::new();
    let mut back = Vec::new();
    let mut offset = 0;
    let mut blocks = Vec::new();
    for (k, &m) in d.mult.iter().enumerate() {
        for _ in 0..m {
            let e = &cat[k];
            front.extend(offset..offset + e.i.min(e.j));
            back.extend(offset + e.i.min(e.j)..offset + e.j);
            offset += e.j;
            blocks.push(e.nil.clone());
        }
    }
    let nil = ExactMatrix::block_diagonal(&blocks);
    let order: Vec<usize> = front.into_iter().chain(back).collect();
    ExactMatrix::from_fn(offset, offset, |r, c| nil.get(order[r], order[c]).clone())
}
