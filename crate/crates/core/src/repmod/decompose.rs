use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{poly, Field, Matrix, Subspace};

use super::hom::HomSpace;
use super::submodule::{image_subspaces, submodule};
use super::{ModuleMap, Representation};

/// Random combinations tried before giving up on a splitting endomorphism.
const SPLIT_ATTEMPTS: usize = 64;

/// Random hom combinations tried before declaring two modules non-isomorphic.
/// A nonzero determinant polynomial of degree `d` vanishes at a random point
/// with probability at most `d / |S|`; see [`sample_coefficient`].
const ISO_ATTEMPTS: usize = 6;

/// `End(M)` with its Jacobson radical in the coordinates of the basis.
#[derive(Clone, Debug)]
pub struct EndomorphismRing<F: Field> {
    pub space: HomSpace<F>,
    pub radical: Subspace<F>,
}

impl<F: Field> EndomorphismRing<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `dim End / rad End`.
    pub fn top_dim(&self) -> usize {
        self.space.dim() - self.radical.dim()
    }

    /// Is the endomorphism with these coordinates in the radical?
    pub fn in_radical(&self, coords: &[F]) -> bool {
        self.radical.contains(coords)
    }
}

/// The radical is the kernel of the trace form `(x, y) -> tr(xy)`. This is
/// exact in characteristic 0 and above the module dimension; for small
/// primes the kernel is still an ideal containing the radical, and is
/// accepted only after checking that it is nilpotent.
pub fn endomorphism_ring<F: Field>(m: &Representation<F>) -> Result<EndomorphismRing<F>> {
    let space = HomSpace::compute(m, m);
    let radical = trace_form_radical(space.basis());
    let ring = EndomorphismRing { space, radical };
    let p = F::characteristic();
    if p != 0 && p as usize <= m.total_dim() && !radical_is_nilpotent(&ring) {
        return Err(Error::Invalid(format!(
            "radical of End needs characteristic above {} (got {p})",
            m.total_dim()
        )));
    }
    Ok(ring)
}

/// Kernel of the Gram matrix of the trace form on the span of `basis`.
pub fn trace_form_radical<F: Field>(basis: &[ModuleMap<F>]) -> Subspace<F> {
    let k = basis.len();
    let gram = Matrix::from_fn(k, k, |i, j| {
        let mut t = F::zero();
        for (x, y) in basis[i].vertex_maps().iter().zip(basis[j].vertex_maps()) {
            t = t.plus(&x.trace_of_product(y));
        }
        t
    });
    Subspace::kernel_of(&gram)
}

fn radical_is_nilpotent<F: Field>(ring: &EndomorphismRing<F>) -> bool {
    let basis = ring.space.basis();
    let elems: Vec<ModuleMap<F>> = ring.radical.basis().iter().map(|c| ring.space.combination(c)).collect();
    let mut power = elems.clone();
    for _ in 0..=ring.dim() {
        if power.iter().all(ModuleMap::is_zero) {
            return true;
        }
        let products: Vec<ModuleMap<F>> =
            power.iter().flat_map(|x| elems.iter().map(move |y| x.compose(y))).collect();
        let span = HomSpace::spanned_by(basis[0].source(), basis[0].target(), &products);
        power = span.into_basis();
    }
    false
}

/// `End M / rad End M` is one-dimensional.
pub fn is_local<F: Field>(m: &Representation<F>) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(endomorphism_ring(m)?.top_dim() == 1)
}

fn is_nilpotent<F: Field>(f: &ModuleMap<F>) -> bool {
    f.vertex_maps().iter().all(Matrix::is_nilpotent)
}

fn is_invertible<F: Field>(f: &ModuleMap<F>) -> bool {
    f.vertex_maps().iter().all(Matrix::is_invertible)
}

fn splits<F: Field>(f: &ModuleMap<F>) -> bool {
    !is_invertible(f) && !is_nilpotent(f)
}

/// `f - c id` for every eigenvalue `c` of a vertex block of `f` in the field.
fn eigen_shifts<F: Field>(f: &ModuleMap<F>) -> Vec<ModuleMap<F>> {
    let mut roots: Vec<F> = Vec::new();
    for m in f.vertex_maps() {
        if m.rows() == 0 {
            continue;
        }
        for r in F::polynomial_roots(&poly::char_poly(m)) {
            if !r.is_zero() && !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    let id = ModuleMap::identity(f.source());
    roots.iter().map(|c| f.add(&id.scale(&c.negated()))).collect()
}

fn sample_coefficient<F: Field>(rng: &mut ChaCha8Rng) -> F {
    if F::characteristic() == 0 {
        F::from_i64(rng.gen_range(-(1 << 16)..=(1 << 16)))
    } else {
        F::from_i64(rng.gen_range(0..i64::MAX))
    }
}

/// A singular endomorphism that is not nilpotent, if one is found.
fn splitting_endomorphism<F: Field>(ring: &EndomorphismRing<F>) -> Option<ModuleMap<F>> {
    let basis = ring.space.basis();
    if let Some(b) = basis.iter().find(|b| splits(b)) {
        return Some(b.clone());
    }
    for b in basis {
        if let Some(s) = eigen_shifts(b).into_iter().find(splits) {
            return Some(s);
        }
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            for c in [x.compose(y), y.compose(x), x.add(y)] {
                if splits(&c) {
                    return Some(c);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    for _ in 0..SPLIT_ATTEMPTS {
        let coeffs: Vec<F> = (0..basis.len()).map(|_| F::from_i64(rng.gen_range(-3..=3))).collect();
        let f = ring.space.combination(&coeffs);
        if splits(&f) {
            return Some(f);
        }
        if let Some(s) = eigen_shifts(&f).into_iter().find(splits) {
            return Some(s);
        }
    }
    None
}

/// Fitting decomposition `M = ker f^N + im f^N`.
fn fitting_split<F: Field>(m: &Representation<F>, f: &ModuleMap<F>) -> (Representation<F>, Representation<F>) {
    let n = m.dims().iter().copied().max().unwrap_or(0) as u32;
    let mats: Vec<Matrix<F>> = f.vertex_maps().iter().map(|x| x.pow(n)).collect();
    let power = ModuleMap::new_unchecked(m, m, mats);
    let ker: Vec<Subspace<F>> = power.vertex_maps().iter().map(Subspace::kernel_of).collect();
    let (k, _) = submodule(m, &ker);
    let (i, _) = submodule(m, &image_subspaces(&power));
    (k, i)
}

/// Krull-Schmidt decomposition as iso classes with multiplicities.
#[derive(Clone, Debug)]
pub struct DecompositionResult<F: Field> {
    pub summands: Vec<(Representation<F>, usize)>,
}

impl<F: Field> DecompositionResult<F> {
    /// Number of non-isomorphic indecomposable summands.
    pub fn num_classes(&self) -> usize {
        self.summands.len()
    }

    pub fn num_summands(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }

    /// One representative per class.
    pub fn indecomposables(&self) -> Vec<Representation<F>> {
        self.summands.iter().map(|(m, _)| m.clone()).collect()
    }

    /// Direct sum of one copy of each class.
    pub fn basic(&self, like: &Representation<F>) -> Representation<F> {
        Representation::direct_sum_all(like.algebra(), &self.indecomposables())
    }

    /// Sorted dimension vectors with multiplicity.
    pub fn dimvec_multiset(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .summands
            .iter()
            .flat_map(|(m, k)| std::iter::repeat_n(m.dims().to_vec(), *k))
            .collect();
        out.sort();
        out
    }
}

/// Indecomposable summands with repetition, each certified local.
pub fn indecomposable_summands<F: Field>(m: &Representation<F>) -> Result<Vec<Representation<F>>> {
    let mut stack = vec![m.clone()];
    let mut leaves = Vec::new();
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        let ring = endomorphism_ring(&x)?;
        if ring.top_dim() == 1 {
            leaves.push(x);
            continue;
        }
        let f = splitting_endomorphism(&ring).ok_or(Error::DecompositionFailed(SPLIT_ATTEMPTS))?;
        let (a, b) = fitting_split(&x, &f);
        stack.push(a);
        stack.push(b);
    }
    leaves.sort_by(|a, b| a.dims().cmp(b.dims()));
    Ok(leaves)
}

pub fn decompose<F: Field>(m: &Representation<F>) -> Result<DecompositionResult<F>> {
    let leaves = indecomposable_summands(m)?;
    let mut summands: Vec<(Representation<F>, usize)> = Vec::new();
    for x in leaves {
        match summands.iter_mut().find(|(y, _)| is_isomorphic(y, &x)) {
            Some((_, k)) => *k += 1,
            None => summands.push((x, 1)),
        }
    }
    summands.sort_by(|a, b| a.0.dims().cmp(b.0.dims()));
    Ok(DecompositionResult { summands })
}

/// Basic representative of the additive class of `m`.
pub fn basic<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    Ok(decompose(m)?.basic(m))
}

/// Number of non-isomorphic indecomposable summands.
pub fn num_classes<F: Field>(m: &Representation<F>) -> Result<usize> {
    Ok(decompose(m)?.num_classes())
}

/// An isomorphism `M -> N`, searched among random combinations of a hom basis.
pub fn find_isomorphism<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Option<ModuleMap<F>> {
    if m.algebra() != n.algebra() || m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::zero(m, n));
    }
    let space = HomSpace::compute(m, n);
    if space.is_zero() {
        return None;
    }
    if space.dim() == 1 {
        let f = space.basis()[0].clone();
        return is_invertible(&f).then_some(f);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..ISO_ATTEMPTS {
        let coeffs: Vec<F> = (0..space.dim()).map(|_| sample_coefficient(&mut rng)).collect();
        let f = space.combination(&coeffs);
        if is_invertible(&f) {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>) -> bool {
    find_isomorphism(m, n).is_some()
}

/// The right annihilator of `M` in the algebra is zero.
pub fn is_faithful<F: Field>(m: &Representation<F>) -> bool {
    let alg = m.algebra();
    let nv = alg.num_vertices();
    for s in 0..nv {
        for t in 0..nv {
            let block = alg.block(s, t);
            if block.is_empty() {
                continue;
            }
            if m.dim_at(s) * m.dim_at(t) < block.len() {
                return false;
            }
            let vecs: Vec<Vec<F>> = block.iter().map(|&b| m.basis_action(b).to_vector()).collect();
            if Subspace::spanned_by(m.dim_at(s) * m.dim_at(t), &vecs).dim() < block.len() {
                return false;
            }
        }
    }
    true
}
