use super::field::Field;
use super::matrix::Matrix;

/// Subspace of `F^n` kept as a reduced echelon basis.
///
/// Basis vector `k` has a 1 at `pivots[k]` and zeros at every other pivot,
/// so coordinates of a member are read off the pivot entries directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(ambient, &Matrix::identity(ambient).columns())
    }

    pub fn spanned_by(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let m = Matrix::from_rows(vectors.to_vec(), ambient);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::spanned_by(m.rows(), &m.columns())
    }

    /// Null space of `m`.
    pub fn kernel_of(m: &Matrix<F>) -> Self {
        Self::spanned_by(m.cols(), &m.kernel_basis())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(&self.basis, self.ambient)
    }

    /// `v` minus its component along the basis, measured at the pivots.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                o.sub_mul_assign(&c, x);
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member in the stored basis; `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::spanned_by(self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // Solve sum a_i u_i = sum b_j w_j.
        let (a, b) = (self.basis_matrix(), other.basis_matrix());
        let stacked = a.hstack(&b.scale(&F::one().negated()));
        let vs: Vec<Vec<F>> = stacked
            .kernel_basis()
            .into_iter()
            .map(|k| a.mul_vec(&k[..self.dim()]))
            .collect();
        Self::spanned_by(self.ambient, &vs)
    }

    /// Positions not used as pivots; the standard vectors there span a complement.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.ambient).filter(|&i| !used[i]).collect()
    }

    /// Projection `F^n -> F^n / self` in the coordinates of the free positions,
    /// as a `codim x ambient` matrix.
    pub fn quotient_map(&self) -> Matrix<F> {
        let free = self.free_positions();
        let mut q = Matrix::zeros(free.len(), self.ambient);
        for (r, &f) in free.iter().enumerate() {
            q.set(r, f, F::one());
        }
        // Column p (a pivot) maps to minus the free part of its basis vector.
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            for (r, &f) in free.iter().enumerate() {
                q.set(r, p, b[f].negated());
            }
        }
        q
    }

    /// Section of `quotient_map`: the standard vectors at the free positions.
    pub fn complement_lift(&self) -> Matrix<F> {
        let free = self.free_positions();
        let mut s = Matrix::zeros(self.ambient, free.len());
        for (c, &f) in free.iter().enumerate() {
            s.set(f, c, F::one());
        }
        s
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        let vs: Vec<Vec<F>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::spanned_by(m.rows(), &vs)
    }

    /// Preimage `{v : m v in self}` of the subspace under `m`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Self {
        Self::kernel_of(&self.quotient_map().mul(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn coordinates_and_membership() {
        let s = Subspace::spanned_by(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 2, 1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        let c = s.coordinates(&v(&[2, 3, 1])).unwrap();
        let back = s.basis_matrix().mul_vec(&c);
        assert_eq!(back, v(&[2, 3, 1]));
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let s = Subspace::spanned_by(3, &[v(&[1, 1, 0])]);
        let q = s.quotient_map();
        assert_eq!(q.shape(), (2, 3));
        assert!(q.mul(&s.basis_matrix()).is_zero());
        assert_eq!(q.mul(&s.complement_lift()), Matrix::identity(2));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::spanned_by(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::spanned_by(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 5, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
