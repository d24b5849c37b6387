use crate::exactlin::{Field, Matrix, Subspace};

use super::{ModuleMap, Representation};

/// A basis of `Hom(M, N)` with coordinates.
///
/// The basis is in echelon form with respect to the flattened vertex
/// matrices, so coordinates of a homomorphism are read off pivot entries.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    source: Representation<F>,
    target: Representation<F>,
    span: Subspace<F>,
    basis: Vec<ModuleMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn compute(m: &Representation<F>, n: &Representation<F>) -> Self {
        let vectors = hom_vectors(m, n);
        Self::from_vectors(m, n, &vectors)
    }

    /// Span of the given homomorphisms (assumed to lie in `Hom(M, N)`).
    pub fn spanned_by(m: &Representation<F>, n: &Representation<F>, maps: &[ModuleMap<F>]) -> Self {
        let vectors: Vec<Vec<F>> = maps.iter().map(ModuleMap::flatten).collect();
        Self::from_vectors(m, n, &vectors)
    }

    fn from_vectors(m: &Representation<F>, n: &Representation<F>, vectors: &[Vec<F>]) -> Self {
        let len = flat_len(m, n);
        let span = Subspace::spanned_by(len, vectors);
        let basis = span.basis().iter().map(|v| ModuleMap::unflatten(m, n, v)).collect();
        HomSpace { source: m.clone(), target: n.clone(), span, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[ModuleMap<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<ModuleMap<F>> {
        self.basis
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }

    pub fn target(&self) -> &Representation<F> {
        &self.target
    }

    pub fn span(&self) -> &Subspace<F> {
        &self.span
    }

    pub fn contains(&self, f: &ModuleMap<F>) -> bool {
        self.span.contains(&f.flatten())
    }

    pub fn coordinates(&self, f: &ModuleMap<F>) -> Option<Vec<F>> {
        self.span.coordinates(&f.flatten())
    }

    pub fn combination(&self, coeffs: &[F]) -> ModuleMap<F> {
        let terms: Vec<(F, &ModuleMap<F>)> = coeffs.iter().cloned().zip(&self.basis).collect();
        ModuleMap::linear_combination(&self.source, &self.target, &terms)
    }
}

fn flat_len<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum()
}

/// Flattened solutions of the intertwining equations `N_a X_s = X_t M_a`.
fn hom_vectors<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<Vec<F>> {
    let nv = m.dims().len();
    let mut offsets = Vec::with_capacity(nv);
    let mut off = 0;
    for v in 0..nv {
        offsets.push(off);
        off += m.dim_at(v) * n.dim_at(v);
    }
    let unknowns = off;
    if unknowns == 0 {
        return Vec::new();
    }
    let q = m.algebra().quiver();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ms, mt, ns, nt) = (m.dim_at(s), m.dim_at(t), n.dim_at(s), n.dim_at(t));
        if ms == 0 || nt == 0 {
            continue;
        }
        let (na, ma) = (n.arrow_map(a), m.arrow_map(a));
        // entry (i, j): sum_k N_a[i,k] X_s[k,j] - sum_k X_t[i,k] M_a[k,j]
        for i in 0..nt {
            for j in 0..ms {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..ns {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        row[offsets[s] + k * ms + j] = row[offsets[s] + k * ms + j].plus(c);
                    }
                }
                for k in 0..mt {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        row[offsets[t] + i * mt + k] = row[offsets[t] + i * mt + k].minus(c);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Matrix::<F>::identity(unknowns).columns();
    }
    Matrix::from_rows(rows, unknowns).kernel_basis()
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<ModuleMap<F>> {
    HomSpace::compute(m, n).into_basis()
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    if m.dims().iter().zip(n.dims()).all(|(a, b)| a * b == 0) {
        return 0;
    }
    let vectors = hom_vectors(m, n);
    vectors.len()
}
