//! Exact dense linear algebra over the rationals or a prime field.

mod field;
mod fp;
mod matrix;
pub mod poly;
mod rational;
mod subspace;

pub use field::Field;
pub use fp::{Fp, Fp31, ParseResidueError};
pub use matrix::{Inconsistent, Matrix, Solution};
pub use rational::{ParseRationalError, Rational};
pub use subspace::Subspace;

/// Reduced row echelon form of `m` and its pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    m.rref()
}

/// Basis of the right null space of `m`.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}

/// One solution of `a x = b` together with a kernel basis.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Solution<F>, Inconsistent> {
    a.solve(b)
}
