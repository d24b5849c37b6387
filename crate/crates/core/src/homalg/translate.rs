use crate::exactlin::Field;
use crate::repmod::{
    cokernel, injective_envelope, projective_cover, projective_map, projective_sum, HomSpace, ModuleMap,
    Representation,
};

use super::resolution::min_proj_resolution;

/// `D M` over the opposite algebra.
pub fn dual<F: Field>(m: &Representation<F>) -> Representation<F> {
    m.dual()
}

/// Auslander-Bridger transpose, a module over the opposite algebra.
///
/// With a minimal presentation `P_1 -> P_0 -> M -> 0`, applying
/// `Hom(-, A)` turns `P(w)` into the left module `A e_w`, that is the
/// projective `P(w)` of the opposite algebra, and the component
/// `rho in e_w A e_v` of the differential into left multiplication by
/// `rho`. `Tr M` is the cokernel of the resulting map `P_0^* -> P_1^*`.
pub fn transpose<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = m.algebra().opposite();
    let res = min_proj_resolution(m, 1);
    if res.terms.len() < 2 || res.terms[1].is_zero() {
        return Representation::zero(&op);
    }
    let images = res.generator_images(1);
    let (p1, p0) = (&res.vertices[1], &res.vertices[0]);
    let source = projective_sum(&op, p0);
    let target = projective_sum(&op, p1);
    // generator j of P_0^* goes to (rho_ij)_i, sitting at vertex w_j of P_1^*
    let gens: Vec<Vec<F>> = (0..p0.len()).map(|j| images.iter().flat_map(|row| row[j].iter().cloned()).collect()).collect();
    let d = projective_map(&source, p0, &target, &gens);
    cokernel(&d).0
}

/// `tau M = D Tr M`.
pub fn tau<F: Field>(m: &Representation<F>) -> Representation<F> {
    transpose(m).dual()
}

/// `tau^- M = Tr D M`.
pub fn tau_inverse<F: Field>(m: &Representation<F>) -> Representation<F> {
    transpose(&m.dual())
}

/// `dim Hom(N, X)` modulo maps factoring through an injective module.
pub fn stable_hom_dim_injective<F: Field>(n: &Representation<F>, x: &Representation<F>) -> usize {
    let all = HomSpace::compute(n, x);
    if all.is_zero() {
        return 0;
    }
    let env = injective_envelope(n);
    let through: Vec<ModuleMap<F>> =
        HomSpace::compute(env.map.target(), x).basis().iter().map(|g| g.compose(&env.map)).collect();
    all.dim() - HomSpace::spanned_by(n, x, &through).dim()
}

/// `dim Hom(X, N)` modulo maps factoring through a projective module.
pub fn stable_hom_dim_projective<F: Field>(x: &Representation<F>, n: &Representation<F>) -> usize {
    let all = HomSpace::compute(x, n);
    if all.is_zero() {
        return 0;
    }
    let cover = projective_cover(n);
    let through: Vec<ModuleMap<F>> =
        HomSpace::compute(x, cover.map.source()).basis().iter().map(|g| cover.map.compose(g)).collect();
    all.dim() - HomSpace::spanned_by(x, n, &through).dim()
}

/// Direct sum of the indecomposable summands of `m` that are not projective.
pub fn nonprojective_part<F: Field>(m: &Representation<F>) -> crate::Result<Representation<F>> {
    let parts: Vec<Representation<F>> = crate::repmod::indecomposable_summands(m)?
        .into_iter()
        .filter(|x| !is_projective_indecomposable(x))
        .collect();
    Ok(Representation::direct_sum_all(m.algebra(), &parts))
}

/// Direct sum of the indecomposable summands of `m` that are not injective.
pub fn noninjective_part<F: Field>(m: &Representation<F>) -> crate::Result<Representation<F>> {
    Ok(nonprojective_part(&m.dual())?.dual())
}

/// For an indecomposable `x`: is it projective?
pub fn is_projective_indecomposable<F: Field>(x: &Representation<F>) -> bool {
    let cover = projective_cover(x);
    cover.vertices.len() == 1 && cover.map.source().dims() == x.dims()
}
