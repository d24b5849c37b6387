use serde_json::{json, Value};

use crate::exactlin::{Field, Matrix, Subspace};
use crate::repmod::{
    component_offset, generator_position, kernel, projective_cover, radical_subspaces, socle_subspaces,
    ModuleMap, Representation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution or injective coresolution, truncated.
///
/// Projective: `terms[k] = P_k`, `maps[0]: P_0 -> M` and
/// `maps[k]: P_k -> P_{k-1}`. Injective: `terms[k] = I^k`, `maps[0]: M -> I^0`
/// and `maps[k]: I^{k-1} -> I^k`. `syzygies[k]` is `Omega^k M` (or
/// `Omega^{-k} M`), with one more entry than `terms`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub kind: ResolutionKind,
    pub module: Representation<F>,
    pub terms: Vec<Representation<F>>,
    pub vertices: Vec<Vec<usize>>,
    pub maps: Vec<ModuleMap<F>>,
    pub syzygies: Vec<Representation<F>>,
}

impl<F: Field> Resolution<F> {
    /// Number of terms computed.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The resolution is exact in degrees `0..exact_through()`; every
    /// computed degree is exact by construction.
    pub fn exact_through(&self) -> usize {
        self.terms.len()
    }

    /// The last computed syzygy vanishes, so the resolution is complete.
    pub fn is_finite(&self) -> bool {
        self.syzygies.last().is_some_and(Representation::is_zero)
    }

    /// Length of the resolution when it is finite.
    pub fn length(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        Some(self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0))
    }

    /// Dimension vector of each term.
    pub fn term_dims(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.dims().to_vec()).collect()
    }

    /// Consecutive maps compose to zero.
    pub fn composites_vanish(&self) -> bool {
        self.maps.windows(2).all(|w| match self.kind {
            ResolutionKind::Projective => w[0].compose(&w[1]).is_zero(),
            ResolutionKind::Injective => w[1].compose(&w[0]).is_zero(),
        })
    }

    /// Exactness by rank counting at every term, and at the module itself.
    pub fn is_exact(&self) -> bool {
        let nv = self.module.dims().len();
        let rank_at = |k: usize, v: usize| self.maps.get(k).map_or(0, |f| f.at(v).rank());
        (0..nv).all(|v| {
            // degree 0: the augmentation is onto (or the coaugmentation is into)
            let aug_ok = match self.kind {
                ResolutionKind::Projective => rank_at(0, v) == self.module.dim_at(v),
                ResolutionKind::Injective => rank_at(0, v) == self.module.dim_at(v),
            };
            aug_ok
                && (0..self.terms.len()).all(|k| {
                    let d = self.terms[k].dim_at(v);
                    let last = k + 1 == self.terms.len();
                    // incoming and outgoing ranks at term k
                    let (into, out) = match self.kind {
                        ResolutionKind::Projective => (rank_at(k + 1, v), rank_at(k, v)),
                        ResolutionKind::Injective => (rank_at(k, v), rank_at(k + 1, v)),
                    };
                    let missing = if last { self.syzygies[k + 1].dim_at(v) } else { 0 };
                    into + out + missing == d
                })
        })
    }

    /// Projective kind: every differential lands in the radical. Injective
    /// kind: every differential kills the socle.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().skip(1).all(|f| match self.kind {
            ResolutionKind::Projective => {
                let rad = radical_subspaces(f.target());
                f.vertex_maps().iter().zip(&rad).all(|(m, r)| r.contains_space(&Subspace::column_space(m)))
            }
            ResolutionKind::Injective => {
                let soc = socle_subspaces(f.source());
                f.vertex_maps().iter().zip(&soc).all(|(m, s)| s.basis().iter().all(|x| m.mul_vec(x).iter().all(F::is_zero)))
            }
        })
    }

    /// Component vectors of the differential `P_k -> P_{k-1}` at generators:
    /// `out[i][j]` holds the coefficients, in block order, of the `j`-th
    /// component of the image of the `i`-th generator of `P_k` (`k >= 1`).
    pub fn generator_images(&self, k: usize) -> Vec<Vec<Vec<F>>> {
        assert_eq!(self.kind, ResolutionKind::Projective);
        let alg = self.module.algebra();
        let (src, tgt) = (&self.vertices[k], &self.vertices[k - 1]);
        let d = &self.maps[k];
        src.iter()
            .enumerate()
            .map(|(i, &v)| {
                let col = d.at(v).column(generator_position(alg, src, i));
                tgt.iter()
                    .enumerate()
                    .map(|(j, &w)| {
                        let off = component_offset(alg, tgt, j, v);
                        col[off..off + alg.block_dim(w, v)].to_vec()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let alg = self.module.algebra();
        let q = alg.quiver();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .zip(&self.vertices)
            .map(|(t, vs)| {
                json!({
                    "summands": vs.iter().map(|&v| q.vertex_label(v)).collect::<Vec<_>>(),
                    "dims": t.dims(),
                })
            })
            .collect();
        let maps: Vec<Value> = self.maps.iter().map(map_json).collect();
        json!({
            "kind": match self.kind {
                ResolutionKind::Projective => "projective",
                ResolutionKind::Injective => "injective",
            },
            "module": self.module.dims(),
            "terms": terms,
            "maps": maps,
            "exact_through": self.exact_through(),
            "finite": self.is_finite(),
        })
    }
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|r| m.row(r).iter().map(|x| Value::String(x.to_string())).collect()).collect())
}

fn map_json<F: Field>(f: &ModuleMap<F>) -> Value {
    Value::Array(f.vertex_maps().iter().map(matrix_json).collect())
}

/// Minimal projective resolution with `maxdeg + 1` terms, stopping early at a zero syzygy.
pub fn min_proj_resolution<F: Field>(m: &Representation<F>, maxdeg: usize) -> Resolution<F> {
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        module: m.clone(),
        terms: Vec::new(),
        vertices: Vec::new(),
        maps: Vec::new(),
        syzygies: vec![m.clone()],
    };
    // inclusion of the current syzygy into the previous term
    let mut incl: Option<ModuleMap<F>> = None;
    for _ in 0..=maxdeg {
        let omega = res.syzygies.last().unwrap().clone();
        if omega.is_zero() && !res.terms.is_empty() {
            break;
        }
        let cover = projective_cover(&omega);
        let d = match &incl {
            None => cover.map.clone(),
            Some(i) => i.compose(&cover.map),
        };
        let (next, next_incl) = kernel(&cover.map);
        res.terms.push(cover.map.source().clone());
        res.vertices.push(cover.vertices);
        res.maps.push(d);
        res.syzygies.push(next);
        incl = Some(next_incl);
    }
    res
}

/// `Omega^k M`.
pub fn syzygy<F: Field>(m: &Representation<F>, k: usize) -> Representation<F> {
    if k == 0 {
        return m.clone();
    }
    let res = min_proj_resolution(m, k - 1);
    res.syzygies.get(k).cloned().unwrap_or_else(|| Representation::zero(m.algebra()))
}

/// Minimal injective coresolution, as the dual of a projective resolution
/// of `D M` over the opposite algebra.
pub fn min_inj_coresolution<F: Field>(m: &Representation<F>, maxdeg: usize) -> Resolution<F> {
    let p = min_proj_resolution(&m.dual(), maxdeg);
    Resolution {
        kind: ResolutionKind::Injective,
        module: m.clone(),
        terms: p.terms.iter().map(Representation::dual).collect(),
        vertices: p.vertices,
        maps: p.maps.iter().map(ModuleMap::dual).collect(),
        syzygies: p.syzygies.iter().map(Representation::dual).collect(),
    }
}

/// `Omega^{-k} M`.
pub fn cosyzygy<F: Field>(m: &Representation<F>, k: usize) -> Representation<F> {
    syzygy(&m.dual(), k).dual()
}

/// A homological dimension that is either known or bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomDim {
    Exact(usize),
    AtLeast(usize),
}

impl HomDim {
    pub fn exact(self) -> Option<usize> {
        match self {
            HomDim::Exact(d) => Some(d),
            HomDim::AtLeast(_) => None,
        }
    }

    pub fn is_at_most(self, n: usize) -> bool {
        matches!(self, HomDim::Exact(d) if d <= n)
    }
}

impl std::fmt::Display for HomDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomDim::Exact(d) => write!(f, "{d}"),
            HomDim::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Projective dimension up to `bound`; the zero module gets 0.
pub fn proj_dim<F: Field>(m: &Representation<F>, bound: usize) -> HomDim {
    let res = min_proj_resolution(m, bound);
    match res.length() {
        Some(d) => HomDim::Exact(d),
        None => HomDim::AtLeast(bound + 1),
    }
}

pub fn inj_dim<F: Field>(m: &Representation<F>, bound: usize) -> HomDim {
    proj_dim(&m.dual(), bound)
}
