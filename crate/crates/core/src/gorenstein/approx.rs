use crate::error::Result;
use crate::exactlin::{Field, Subspace};
use crate::repmod::{endomorphism_ring, hom_basis, BasicModule, HomSpace, ModuleMap, Representation};

/// `add U` for a basic `U`, with bases of the radical morphisms between
/// its indecomposable summands.
#[derive(Clone, Debug)]
pub struct AddCategory<F: Field> {
    basic: BasicModule<F>,
    /// `rad[j][i]` spans `rad(U_j, U_i)`.
    rad: Vec<Vec<Vec<ModuleMap<F>>>>,
}

impl<F: Field> AddCategory<F> {
    pub fn new(basic: &BasicModule<F>) -> Result<Self> {
        let us = basic.summands();
        let mut rad = Vec::with_capacity(us.len());
        for (j, uj) in us.iter().enumerate() {
            let mut row = Vec::with_capacity(us.len());
            for (i, ui) in us.iter().enumerate() {
                if i == j {
                    let ring = endomorphism_ring(uj)?;
                    row.push(ring.radical.basis().iter().map(|c| ring.space.combination(c)).collect());
                } else {
                    // summands are pairwise non-isomorphic indecomposables
                    row.push(hom_basis(uj, ui));
                }
            }
            rad.push(row);
        }
        Ok(AddCategory { basic: basic.clone(), rad })
    }

    pub fn basic(&self) -> &BasicModule<F> {
        &self.basic
    }

    /// Minimal left `add U`-approximation of `x`.
    pub fn left_approximation(&self, x: &Representation<F>) -> Approximation<F> {
        let us = self.basic.summands();
        let homs: Vec<HomSpace<F>> = us.iter().map(|u| HomSpace::compute(x, u)).collect();
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        let mut mult = vec![0; us.len()];
        for (i, ui) in us.iter().enumerate() {
            if homs[i].is_zero() {
                continue;
            }
            // maps X -> U_i that factor through a radical map out of add U
            let mut through = Vec::new();
            for (j, hj) in homs.iter().enumerate() {
                for r in &self.rad[j][i] {
                    for h in hj.basis() {
                        through.push(r.compose(h).flatten());
                    }
                }
            }
            let mut sub = Subspace::spanned_by(homs[i].span().ambient(), &through);
            for g in homs[i].basis() {
                let v = g.flatten();
                if !sub.contains(&v) {
                    sub = sub.sum(&Subspace::spanned_by(sub.ambient(), &[v]));
                    maps.push(g.clone());
                    parts.push(ui.clone());
                    mult[i] += 1;
                }
            }
        }
        let target = Representation::direct_sum_all(x.algebra(), &parts);
        let map = ModuleMap::into_sum(x, &target, &maps);
        Approximation { map, multiplicities: mult }
    }

    /// Minimal right `add U`-approximation of `x`, dual to the left one over
    /// the opposite algebra.
    pub fn right_approximation(&self, x: &Representation<F>) -> Result<Approximation<F>> {
        let dual_parts: Vec<Representation<F>> = self.basic.summands().iter().map(Representation::dual).collect();
        let dual = BasicModule::from_indecomposables(&x.algebra().opposite(), dual_parts);
        let cat = AddCategory::new(&dual)?;
        let left = cat.left_approximation(&x.dual());
        // multiplicities are reported in the order of this category's summands
        let mut multiplicities = vec![0; self.basic.len()];
        for (k, &m) in left.multiplicities.iter().enumerate() {
            let orig = self.basic.position(&dual.summands()[k].dual()).expect("dual summand");
            multiplicities[orig] = m;
        }
        Ok(Approximation { map: left.map.dual(), multiplicities })
    }
}

/// A minimal approximation together with the multiplicity of each summand
/// of `U` in its middle term.
#[derive(Clone, Debug)]
pub struct Approximation<F: Field> {
    pub map: ModuleMap<F>,
    pub multiplicities: Vec<usize>,
}

/// Minimal left `add T`-approximation of `x`.
pub fn minimal_left_approximation<F: Field>(x: &Representation<F>, t: &BasicModule<F>) -> Result<ModuleMap<F>> {
    Ok(AddCategory::new(t)?.left_approximation(x).map)
}

/// Minimal right `add T`-approximation of `x`.
pub fn minimal_right_approximation<F: Field>(x: &Representation<F>, t: &BasicModule<F>) -> Result<ModuleMap<F>> {
    Ok(AddCategory::new(t)?.right_approximation(x)?.map)
}
