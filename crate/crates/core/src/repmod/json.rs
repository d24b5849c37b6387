use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::quiver_algebra::BoundQuiverAlgebra;

use super::Representation;

impl<F: Field> Representation<F> {
    /// `{"dims": {vertex: n}, "arrows": {arrow: [[entry, ...], ...]}}`, entries as strings.
    pub fn to_json(&self) -> Value {
        let q = self.algebra().quiver();
        let mut dims = Map::new();
        for (v, label) in q.vertices().iter().enumerate() {
            dims.insert(label.clone(), json!(self.dim_at(v)));
        }
        let mut arrows = Map::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let m = self.arrow_map(a);
            let rows: Vec<Value> = (0..m.rows())
                .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect()))
                .collect();
            arrows.insert(arrow.label.clone(), Value::Array(rows));
        }
        json!({ "dims": dims, "arrows": arrows })
    }

    pub fn from_json(alg: &BoundQuiverAlgebra<F>, value: &Value) -> Result<Self> {
        let q = alg.quiver();
        let bad = |msg: &str| Error::Invalid(format!("module JSON: {msg}"));
        let dims_obj = value.get("dims").and_then(Value::as_object).ok_or_else(|| bad("missing dims"))?;
        let mut dims = vec![0; q.num_vertices()];
        for (label, d) in dims_obj {
            let v = q.vertex(label)?;
            dims[v] = d.as_u64().ok_or_else(|| bad("dimension is not a count"))? as usize;
        }
        let arrows_obj = value.get("arrows").and_then(Value::as_object);
        let mut maps = Vec::with_capacity(q.num_arrows());
        for arrow in q.arrows() {
            let (r, c) = (dims[arrow.target], dims[arrow.source]);
            let m = match arrows_obj.and_then(|o| o.get(&arrow.label)) {
                None => Matrix::zeros(r, c),
                Some(rows) => {
                    let rows = rows.as_array().ok_or_else(|| bad("arrow matrix is not a list"))?;
                    let mut entries = Vec::with_capacity(r * c);
                    for row in rows {
                        for x in row.as_array().ok_or_else(|| bad("matrix row is not a list"))? {
                            let s = match x {
                                Value::String(s) => s.clone(),
                                Value::Number(n) => n.to_string(),
                                _ => return Err(bad("entry is not a scalar")),
                            };
                            entries.push(s.parse::<F>().map_err(|_| bad("unparsable scalar"))?);
                        }
                    }
                    if entries.len() != r * c || (r > 0 && rows.len() != r) {
                        return Err(bad(&format!("arrow `{}` has the wrong shape", arrow.label)));
                    }
                    Matrix::from_vec(r, c, entries)
                }
            };
            maps.push(m);
        }
        Representation::new(alg, dims, maps)
    }
}
