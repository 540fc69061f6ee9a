//! Fixtures shared by the benchmarks.

use parorb::linalg::inverse;
use parorb::matrix::int;
use parorb::ExactMatrix;

/// `g x g^-1` for the unipotent upper-triangular `g` with all entries above the diagonal equal to 1.
pub fn scrambled(x: &ExactMatrix) -> ExactMatrix {
    let n = x.rows();
    let g = ExactMatrix::from_fn(n, n, |r, c| if r <= c { int(1) } else { int(0) });
    let gi = inverse(&g).expect("unipotent");
    &(&g * x) * &gi
}
