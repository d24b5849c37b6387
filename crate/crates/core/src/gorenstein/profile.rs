use serde_json::{json, Value};

use crate::exactlin::Field;
use crate::homalg::{min_inj_coresolution, proj_dim, HomDim};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::Representation;

/// One term `I^i(A)` of the minimal injective coresolution of the algebra.
#[derive(Clone, Debug)]
pub struct ProfileDegree {
    pub index: usize,
    /// Vertex of each indecomposable injective summand, with repetition.
    pub injectives: Vec<usize>,
    pub dims: Vec<usize>,
    pub pd: HomDim,
}

#[derive(Clone, Debug)]
pub struct GorensteinProfile {
    pub depth: usize,
    pub degrees: Vec<ProfileDegree>,
    /// Length of the coresolution when it ends within `depth` terms.
    pub injective_dimension: HomDim,
    /// Largest `n <= depth` with `pd I^i <= i` for all `i < n`.
    pub n_gorenstein_up_to: usize,
    /// Largest `n <= depth` with `pd I^i <= i + 1` for all `i < n`.
    pub quasi_up_to: usize,
    pub dominant_dimension: HomDim,
}

/// Counts leading degrees satisfying `pd I^i <= i + slack`. A lower-bound
/// marker that does not decide the inequality stops the count.
fn leading_count(degrees: &[ProfileDegree], slack: usize) -> usize {
    degrees
        .iter()
        .take_while(|d| d.pd.is_at_most(d.index + slack))
        .count()
}

pub fn gorenstein_profile<F: Field>(alg: &BoundQuiverAlgebra<F>, depth: usize, pd_bound: usize) -> GorensteinProfile {
    let lam = Representation::regular(alg);
    let res = min_inj_coresolution(&lam, depth.saturating_sub(1));
    let degrees: Vec<ProfileDegree> = (0..depth)
        .map(|i| match res.terms.get(i) {
            Some(t) => ProfileDegree {
                index: i,
                injectives: res.vertices[i].clone(),
                dims: t.dims().to_vec(),
                pd: proj_dim(t, pd_bound),
            },
            None => ProfileDegree {
                index: i,
                injectives: Vec::new(),
                dims: vec![0; alg.num_vertices()],
                pd: HomDim::Exact(0),
            },
        })
        .collect();
    let injective_dimension = match res.length() {
        Some(l) => HomDim::Exact(l),
        None => HomDim::AtLeast(depth),
    };
    let dominant = degrees.iter().take_while(|d| d.pd == HomDim::Exact(0)).count();
    let dominant_dimension = if dominant < depth { HomDim::Exact(dominant) } else { HomDim::AtLeast(depth) };
    GorensteinProfile {
        depth,
        n_gorenstein_up_to: leading_count(&degrees, 0),
        quasi_up_to: leading_count(&degrees, 1),
        degrees,
        injective_dimension,
        dominant_dimension,
    }
}

/// Dominant dimension, exact when below `depth`.
pub fn dominant_dimension<F: Field>(alg: &BoundQuiverAlgebra<F>, depth: usize) -> HomDim {
    gorenstein_profile(alg, depth, 0).dominant_dimension
}

impl GorensteinProfile {
    pub fn is_n_gorenstein(&self, n: usize) -> bool {
        n <= self.n_gorenstein_up_to
    }

    pub fn is_quasi_n_gorenstein(&self, n: usize) -> bool {
        n <= self.quasi_up_to
    }

    pub fn to_json<F: Field>(&self, alg: &BoundQuiverAlgebra<F>) -> Value {
        let q = alg.quiver();
        json!({
            "depth": self.depth,
            "degrees": self.degrees.iter().map(|d| json!({
                "index": d.index,
                "injectives": d.injectives.iter().map(|&v| format!("I({})", q.vertex_label(v))).collect::<Vec<_>>(),
                "dims": d.dims,
                "pd": d.pd.to_string(),
            })).collect::<Vec<_>>(),
            "injective_dimension": self.injective_dimension.to_string(),
            "n_gorenstein_up_to": self.n_gorenstein_up_to,
            "quasi_gorenstein_up_to": self.quasi_up_to,
            "dominant_dimension": self.dominant_dimension.to_string(),
        })
    }

    /// Plain-text table, one line per degree.
    pub fn table<F: Field>(&self, alg: &BoundQuiverAlgebra<F>) -> String {
        let q = alg.quiver();
        let mut out = String::from("i\tI^i(A)\tpd\n");
        for d in &self.degrees {
            let terms = if d.injectives.is_empty() {
                "0".to_string()
            } else {
                d.injectives.iter().map(|&v| format!("I({})", q.vertex_label(v))).collect::<Vec<_>>().join(" + ")
            };
            out.push_str(&format!("{}\t{}\t{}\n", d.index, terms, d.pd));
        }
        out.push_str(&format!(
            "id A = {}\nn-Gorenstein up to {}\nquasi n-Gorenstein up to {}\ndominant dimension {}\n",
            self.injective_dimension, self.n_gorenstein_up_to, self.quasi_up_to, self.dominant_dimension
        ));
        out
    }
}
