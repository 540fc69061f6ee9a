//! Finite versus wild orbit type, and explicit parameter families of matrices that
//! exhibit infinitely many orbits.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{int, ExactMatrix, Rational};
use crate::model::BlockStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Finite,
    Wild,
}

/// Finitely many orbits on `x`-nilpotent matrices iff `x <= 2`, or the parabolic is maximal
/// and `x = 3`, or there is a single block.
pub fn classify(blocks: &BlockStructure, x: usize) -> Result<RepType> {
    if x == 0 {
        return Err(Error::OutOfRange("nilpotency degree must be at least 1".into()));
    }
    let finite = x <= 2 || blocks.p() == 1 || (blocks.p() == 2 && x == 3);
    Ok(if finite { RepType::Finite } else { RepType::Wild })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

fn check(name: impl Into<String>, holds: bool) -> Check {
    Check { name: name.into(), holds }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub family: String,
    pub matrix: ExactMatrix,
    pub nilpotency_index: Option<u32>,
    pub checks: Vec<Check>,
}

impl WitnessReport {
    fn new(family: impl Into<String>, matrix: ExactMatrix, checks: Vec<Check>) -> Self {
        let nilpotency_index = matrix.nilpotency_index();
        Self { family: family.into(), matrix, nilpotency_index, checks }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn nonzero(x: &Rational, name: &'static str) -> Result<()> {
    if x.is_zero() {
        return Err(Error::ZeroParameter(name));
    }
    Ok(())
}

/// Both readings of the `D_x(λ)` family, each with `λ` at `(n, 1)`. `printed` has ones at
/// `(i, 1)` for `1 <= i < n` and `(n, j)` for `1 <= j < n`; `strict` keeps only `1 < i, j < n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DxWitness {
    pub printed: WitnessReport,
    pub strict: WitnessReport,
    /// Variants whose checks all hold.
    pub passing: Vec<String>,
}

pub fn witness_dx(n: usize, x: u32, lambda: &Rational) -> Result<DxWitness> {
    nonzero(lambda, "lambda")?;
    if n < 3 {
        return Err(Error::OutOfRange(format!("D_x needs n >= 3, got {n}")));
    }
    if x == 0 {
        return Err(Error::OutOfRange("nilpotency degree must be at least 1".into()));
    }
    let build = |lo: usize| {
        let mut m = ExactMatrix::zeros(n, n);
        for i in lo..n - 1 {
            m.set(i, 0, Rational::one());
        }
        for j in lo..n - 1 {
            m.set(n - 1, j, Rational::one());
        }
        m.set(n - 1, 0, lambda.clone());
        m
    };
    let printed = build(0);
    let strict = build(1);
    let printed = WitnessReport::new(
        "dx-printed",
        printed.clone(),
        vec![check("trace is zero", printed.trace().is_zero()), check(format!("D^{x} = 0"), printed.pow(x).is_zero())],
    );
    let strict = WitnessReport::new(
        "dx-strict",
        strict.clone(),
        vec![check("D^3 = 0", strict.pow(3).is_zero()), check(format!("D^{x} = 0"), strict.pow(x).is_zero())],
    );
    let passing = [&printed, &strict].iter().filter(|r| r.all_hold()).map(|r| r.family.clone()).collect();
    Ok(DxWitness { printed, strict, passing })
}

fn e_block(lambda: &Rational) -> ExactMatrix {
    let mut m = ExactMatrix::from_i64(&[[0, 0, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0]]).expect("4x4");
    m.set(3, 0, lambda.clone());
    m
}

fn f_block(lambda: &Rational) -> ExactMatrix {
    let one = Rational::one();
    let l = lambda.clone();
    ExactMatrix::from_rows(vec![
        vec![int(1), int(1), int(0), int(0)],
        vec![int(-1), int(-1), int(0), int(0)],
        vec![&l - &one, l.clone(), int(-1), int(1)],
        vec![l.clone(), &l - &one, int(-1), int(1)],
    ])
    .expect("4x4")
}

/// `E(λ)` placed on rows and columns `s+1..=s+4` of an `n x n` zero matrix.
pub fn witness_e(n: usize, s: usize, lambda: &Rational) -> Result<WitnessReport> {
    nonzero(lambda, "lambda")?;
    if n < s + 4 {
        return Err(Error::OutOfRange(format!("need n >= s + 4, got n = {n}, s = {s}")));
    }
    let mut m = ExactMatrix::zeros(n, n);
    m.place(s, s, &e_block(lambda));
    let checks = vec![check("E^4 = 0", m.pow(4).is_zero()), check("E^3 != 0", !m.pow(3).is_zero())];
    Ok(WitnessReport::new("e", m, checks))
}

/// `F(λ)` placed in the top-left corner of an `n x n` zero matrix.
pub fn witness_f(n: usize, lambda: &Rational) -> Result<WitnessReport> {
    nonzero(lambda, "lambda")?;
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let mut m = ExactMatrix::zeros(n, n);
    m.place(0, 0, &f_block(lambda));
    let checks = vec![check("F^4 = 0", m.pow(4).is_zero())];
    Ok(WitnessReport::new("f", m, checks))
}

/// Entries `(row, col, coefficient of 1, coefficient of λ, coefficient of μ)`, 1-indexed.
type Sparse = &'static [(usize, usize, i64, i64, i64)];

const WILD_343: Sparse = &[
    (2, 8, 1, 0, 0),
    (3, 2, 1, 0, 0),
    (5, 8, -1, 0, 0),
    (6, 1, 1, 0, 0),
    (7, 2, 1, 0, 0),
    (7, 5, 1, 0, 0),
    (7, 6, 0, 0, -1),
    (7, 9, 1, 0, 0),
    (9, 1, 0, 1, 0),
    (9, 4, 1, 0, 0),
    (10, 2, -1, 0, 0),
    (10, 6, 1, 0, 0),
];

const WILD_55: Sparse = &[
    (2, 1, 1, 0, 0),
    (5, 4, 1, 0, 0),
    (5, 9, 1, 0, 0),
    (7, 1, 0, 1, 0),
    (7, 6, 1, 0, 0),
    (8, 3, 1, 0, 0),
    (8, 7, 1, 0, 0),
    (9, 2, 1, 0, 0),
    (10, 4, 1, 0, -1),
    (10, 8, 1, 0, 0),
    (10, 9, 0, 0, -1),
];

fn sparse(entries: Sparse, lambda: &Rational, mu: &Rational) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(10, 10);
    for &(r, c, k, kl, km) in entries {
        m.set(r - 1, c - 1, int(k) + int(kl) * lambda + int(km) * mu);
    }
    m
}

fn wild(family: &str, entries: Sparse, lambda: &Rational, mu: &Rational) -> Result<WitnessReport> {
    nonzero(lambda, "lambda")?;
    nonzero(mu, "mu")?;
    let m = sparse(entries, lambda, mu);
    let checks = vec![check("N^3 = 0", m.pow(3).is_zero())];
    Ok(WitnessReport::new(family, m, checks))
}

/// Two-parameter family for blocks `(3, 4, 3)`.
pub fn wild_family_343(lambda: &Rational, mu: &Rational) -> Result<WitnessReport> {
    wild("wild343", WILD_343, lambda, mu)
}

/// Two-parameter family for blocks `(5, 5)`.
pub fn wild_family_55(lambda: &Rational, mu: &Rational) -> Result<WitnessReport> {
    wild("wild55", WILD_55, lambda, mu)
}
