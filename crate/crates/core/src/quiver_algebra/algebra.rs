use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Field;

use super::quiver::{Path, Quiver, RelationExpr};

/// Default bound on the Loewy length searched by [`build_algebra`].
pub const DEFAULT_CAP: usize = 64;

/// Hard limit on the number of paths materialised while searching.
const PATH_LIMIT: usize = 2_000_000;

/// Sparse vector as sorted `(index, coefficient)` pairs.
pub type Sparse<F> = Vec<(usize, F)>;

/// `KQ/I` presented by a normal-form basis of paths.
///
/// This is a cheap handle: the data is shared, and the opposite algebra is
/// the same data read with every path reversed. Two handles are equal when
/// they point at the same data in the same orientation.
#[derive(Clone)]
pub struct BoundQuiverAlgebra<F: Field> {
    inner: Arc<AlgebraData<F>>,
    flipped: bool,
}

struct AlgebraData<F> {
    quiver: Quiver,
    op_quiver: Quiver,
    relations: Vec<RelationExpr>,
    op_relations: Vec<RelationExpr>,
    basis: Vec<Path>,
    op_basis: Vec<Path>,
    index: HashMap<Path, usize>,
    // blocks[s][t]: basis indices of paths s -> t
    blocks: Vec<Vec<Vec<usize>>>,
    loewy: usize,
    // right[a][b] = b * a, left[a][b] = a * b (empty when zero or not composable)
    right: Vec<Vec<Sparse<F>>>,
    left: Vec<Vec<Sparse<F>>>,
}

impl<F: Field> PartialEq for BoundQuiverAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) && self.flipped == other.flipped
    }
}

impl<F: Field> Eq for BoundQuiverAlgebra<F> {}

impl<F: Field> fmt::Debug for BoundQuiverAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BoundQuiverAlgebra({} vertices, dim {}{})",
            self.num_vertices(),
            self.dim(),
            if self.flipped { ", opposite" } else { "" }
        )
    }
}

/// Incrementally built echelon basis of sparse vectors.
/// The leading term of a row is its largest column, normalised to 1.
struct Echelon<F> {
    rows: HashMap<usize, Sparse<F>>,
}

fn axpy<F: Field>(v: &mut BTreeMap<usize, F>, c: &F, row: &Sparse<F>) {
    for (k, x) in row {
        let e = v.entry(*k).or_insert_with(F::zero);
        e.sub_mul_assign(c, x);
        if e.is_zero() {
            v.remove(k);
        }
    }
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon { rows: HashMap::new() }
    }

    fn insert(&mut self, v: Sparse<F>) {
        let mut v: BTreeMap<usize, F> = {
            let mut m = BTreeMap::new();
            for (k, c) in v {
                let e = m.entry(k).or_insert_with(F::zero);
                *e = e.plus(&c);
            }
            m.retain(|_, c: &mut F| !c.is_zero());
            m
        };
        while let Some((&lead, c)) = v.iter().next_back() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = c.clone();
                    axpy(&mut v, &c, row);
                }
                None => {
                    let inv = c.inverse().expect("nonzero lead");
                    let row: Sparse<F> = v.into_iter().map(|(k, x)| (k, x.times(&inv))).collect();
                    self.rows.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Fully reduces `v`: no term of the result is a leading term.
    fn reduce(&self, v: Sparse<F>) -> Sparse<F> {
        let mut v: BTreeMap<usize, F> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).next_back().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                axpy(&mut v, &c, row);
            }
            bound = k;
        }
        v.into_iter().collect()
    }
}

/// Paths grouped by length, each layer in lexicographic order of arrow lists.
struct PathTable {
    layers: Vec<Vec<Vec<usize>>>,
    ids: HashMap<Vec<usize>, usize>,
    next_id: usize,
    by_source: Vec<Vec<Vec<usize>>>,
    by_target: Vec<Vec<Vec<usize>>>,
}

impl PathTable {
    fn new(q: &Quiver) -> Self {
        let nv = q.num_vertices();
        let trivial: Vec<Vec<usize>> = vec![Vec::new()];
        PathTable {
            layers: vec![trivial],
            ids: HashMap::new(),
            next_id: 0,
            // layer 0 bookkeeping is special-cased, the vectors start empty
            by_source: vec![vec![Vec::new(); nv]],
            by_target: vec![vec![Vec::new(); nv]],
        }
    }

    fn extend(&mut self, q: &Quiver) {
        let nv = q.num_vertices();
        let k = self.layers.len();
        let mut out_arrows = vec![Vec::new(); nv];
        for (i, a) in q.arrows().iter().enumerate() {
            out_arrows[a.source].push(i);
        }
        let mut layer = Vec::new();
        if k == 1 {
            layer = (0..q.num_arrows()).map(|a| vec![a]).collect();
        } else {
            for p in &self.layers[k - 1] {
                let t = q.arrow(*p.last().unwrap()).target;
                for &a in &out_arrows[t] {
                    let mut np = p.clone();
                    np.push(a);
                    layer.push(np);
                }
            }
        }
        let mut by_source = vec![Vec::new(); nv];
        let mut by_target = vec![Vec::new(); nv];
        for (i, p) in layer.iter().enumerate() {
            by_source[q.arrow(p[0]).source].push(i);
            by_target[q.arrow(*p.last().unwrap()).target].push(i);
            self.ids.insert(p.clone(), self.next_id);
            self.next_id += 1;
        }
        self.layers.push(layer);
        self.by_source.push(by_source);
        self.by_target.push(by_target);
    }

    fn id(&self, p: &[usize]) -> usize {
        self.ids[p]
    }

    /// Paths of length `len` ending at `v`; length 0 means the trivial path.
    fn ending_at(&self, len: usize, v: usize) -> Vec<&[usize]> {
        if len == 0 {
            return vec![&[]];
        }
        self.by_target[len][v].iter().map(|&i| self.layers[len][i].as_slice()).collect()
    }

    fn starting_at(&self, len: usize, v: usize) -> Vec<&[usize]> {
        if len == 0 {
            return vec![&[]];
        }
        self.by_source[len][v].iter().map(|&i| self.layers[len][i].as_slice()).collect()
    }
}

/// Builds `KQ/I` for admissible relations.
///
/// For `d = 1, 2, ...` the span of all `u r v` (terms longer than `d`
/// dropped) is reduced; the first `d` at which every path of length `d`
/// lies in that span is the Loewy bound `L`, and the paths shorter than `L`
/// that are not leading terms form the basis. Longer or lexicographically
/// larger paths are preferred as leading terms. Admissibility (`I` contains
/// some power of the arrow ideal) is a precondition that makes the
/// truncation sound.
pub fn build_algebra<F: Field>(
    q: &Quiver,
    rels: &[RelationExpr],
    cap: usize,
) -> Result<BoundQuiverAlgebra<F>> {
    let mut ends = Vec::with_capacity(rels.len());
    for r in rels {
        ends.push(r.validate(q)?);
    }
    let mut table = PathTable::new(q);
    for d in 1..=cap {
        table.extend(q);
        if table.next_id > PATH_LIMIT {
            return Err(Error::NotAdmissible { cap: d });
        }
        let layer_d = &table.layers[d];
        let mut ech = Echelon::<F>::new();
        for (r, &(s, t)) in rels.iter().zip(&ends) {
            let m = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
            if m > d {
                continue;
            }
            for lu in 0..=d - m {
                for u in table.ending_at(lu, s) {
                    for lv in 0..=d - m - lu {
                        for v in table.starting_at(lv, t) {
                            let mut elem = Vec::new();
                            for (c, p) in &r.terms {
                                if lu + p.len() + lv > d {
                                    continue;
                                }
                                let mut path = Vec::with_capacity(lu + p.len() + lv);
                                path.extend_from_slice(u);
                                path.extend_from_slice(p);
                                path.extend_from_slice(v);
                                elem.push((table.id(&path), F::from_i64(*c)));
                            }
                            ech.insert(elem);
                        }
                    }
                }
            }
        }
        let all_in_span = layer_d.iter().all(|p| {
            let id = table.id(p);
            ech.rows.contains_key(&id) && ech.reduce(vec![(id, F::one())]).is_empty()
        });
        if all_in_span {
            return Ok(assemble(q, rels, &table, &ech, d));
        }
    }
    Err(Error::NotAdmissible { cap })
}

fn assemble<F: Field>(
    q: &Quiver,
    rels: &[RelationExpr],
    table: &PathTable,
    ech: &Echelon<F>,
    loewy: usize,
) -> BoundQuiverAlgebra<F> {
    let nv = q.num_vertices();
    let path_of = |arrows: &[usize]| -> Path {
        if arrows.is_empty() {
            unreachable!("trivial paths are handled separately")
        }
        let (source, target) = q.path_endpoints(arrows).expect("enumerated paths compose");
        Path { source, target, arrows: arrows.to_vec() }
    };
    let mut basis: Vec<Path> = (0..nv).map(Path::trivial).collect();
    for len in 1..loewy {
        for p in &table.layers[len] {
            if !ech.rows.contains_key(&table.id(p)) {
                basis.push(path_of(p));
            }
        }
    }
    basis.sort_by(|a, b| {
        (a.source, a.target, a.len(), &a.arrows).cmp(&(b.source, b.target, b.len(), &b.arrows))
    });
    let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let by_id: HashMap<usize, usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_empty())
        .map(|(i, p)| (table.id(&p.arrows), i))
        .collect();
    let mut blocks = vec![vec![Vec::new(); nv]; nv];
    for (i, p) in basis.iter().enumerate() {
        blocks[p.source][p.target].push(i);
    }

    let normal_form = |arrows: Vec<usize>| -> Sparse<F> {
        if arrows.len() >= loewy {
            return Vec::new();
        }
        let mut out: Sparse<F> = ech
            .reduce(vec![(table.id(&arrows), F::one())])
            .into_iter()
            .map(|(id, c)| (by_id[&id], c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    };
    let na = q.num_arrows();
    let mut right = vec![vec![Vec::new(); basis.len()]; na];
    let mut left = vec![vec![Vec::new(); basis.len()]; na];
    for a in 0..na {
        let arrow = q.arrow(a);
        for (b, p) in basis.iter().enumerate() {
            if p.target == arrow.source {
                let mut w = p.arrows.clone();
                w.push(a);
                right[a][b] = normal_form(w);
            }
            if arrow.target == p.source {
                let mut w = vec![a];
                w.extend_from_slice(&p.arrows);
                left[a][b] = normal_form(w);
            }
        }
    }
    let op_basis = basis.iter().map(Path::reversed).collect();
    BoundQuiverAlgebra {
        inner: Arc::new(AlgebraData {
            quiver: q.clone(),
            op_quiver: q.opposite(),
            relations: rels.to_vec(),
            op_relations: rels.iter().map(RelationExpr::reversed).collect(),
            basis,
            op_basis,
            index,
            blocks,
            loewy,
            right,
            left,
        }),
        flipped: false,
    }
}

impl<F: Field> BoundQuiverAlgebra<F> {
    /// Path algebra of `q` with no relations; it must be acyclic to be finite.
    pub fn path_algebra(q: &Quiver) -> Result<Self> {
        build_algebra(q, &[], DEFAULT_CAP)
    }

    pub fn quiver(&self) -> &Quiver {
        if self.flipped {
            &self.inner.op_quiver
        } else {
            &self.inner.quiver
        }
    }

    pub fn relations(&self) -> &[RelationExpr] {
        if self.flipped {
            &self.inner.op_relations
        } else {
            &self.inner.relations
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.inner.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.inner.quiver.num_arrows()
    }

    pub fn dim(&self) -> usize {
        self.inner.basis.len()
    }

    pub fn loewy_bound(&self) -> usize {
        self.inner.loewy
    }

    pub fn is_opposite(&self) -> bool {
        self.flipped
    }

    pub fn opposite(&self) -> Self {
        BoundQuiverAlgebra { inner: Arc::clone(&self.inner), flipped: !self.flipped }
    }

    /// Basis paths, in this algebra's orientation.
    pub fn basis(&self) -> &[Path] {
        if self.flipped {
            &self.inner.op_basis
        } else {
            &self.inner.basis
        }
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis()[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        if self.flipped {
            self.inner.index.get(&p.reversed()).copied()
        } else {
            self.inner.index.get(p).copied()
        }
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.basis_path(i).label(self.quiver())
    }

    /// Basis indices of the paths `s -> t`, i.e. a basis of `e_s A e_t`.
    pub fn block(&self, s: usize, t: usize) -> &[usize] {
        if self.flipped {
            &self.inner.blocks[t][s]
        } else {
            &self.inner.blocks[s][t]
        }
    }

    pub fn block_dim(&self, s: usize, t: usize) -> usize {
        self.block(s, t).len()
    }

    /// Position of basis element `b` inside its block.
    pub fn position_in_block(&self, b: usize) -> usize {
        let p = self.basis_path(b);
        self.block(p.source, p.target).iter().position(|&x| x == b).expect("basis element in its block")
    }

    /// Normal form of `b * a` for basis element `b` and arrow `a`.
    pub fn times_arrow(&self, b: usize, a: usize) -> &Sparse<F> {
        if self.flipped {
            &self.inner.left[a][b]
        } else {
            &self.inner.right[a][b]
        }
    }

    /// Normal form of `a * b` for arrow `a` and basis element `b`.
    pub fn arrow_times(&self, a: usize, b: usize) -> &Sparse<F> {
        if self.flipped {
            &self.inner.right[a][b]
        } else {
            &self.inner.left[a][b]
        }
    }

    /// Product of a sparse element with a path given by its arrows.
    pub fn times_path(&self, x: &Sparse<F>, arrows: &[usize]) -> Sparse<F> {
        let mut cur = x.clone();
        for &a in arrows {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (b, c) in &cur {
                for (k, v) in self.times_arrow(*b, a) {
                    let e = acc.entry(*k).or_insert_with(F::zero);
                    e.add_mul_assign(c, v);
                }
            }
            cur = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Product of two basis elements in normal form.
    pub fn multiply_basis(&self, i: usize, j: usize) -> Sparse<F> {
        let (pi, pj) = (self.basis_path(i), self.basis_path(j));
        if pi.target != pj.source {
            return Vec::new();
        }
        self.times_path(&vec![(i, F::one())], &pj.arrows)
    }

    /// Product of dense elements written in the basis.
    pub fn multiply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.times(b);
                for (k, c) in self.multiply_basis(i, j) {
                    out[k].add_mul_assign(&ab, &c);
                }
            }
        }
        out
    }

    /// Normal form of an arbitrary path of the quiver.
    pub fn path_element(&self, p: &Path) -> Sparse<F> {
        let e = self.basis_index(&Path::trivial(p.source)).expect("trivial path");
        self.times_path(&vec![(e, F::one())], &p.arrows)
    }

    pub fn idempotent(&self, v: usize) -> Vec<F> {
        let mut x = vec![F::zero(); self.dim()];
        x[self.basis_index(&Path::trivial(v)).expect("trivial path")] = F::one();
        x
    }

    pub fn one(&self) -> Vec<F> {
        let mut x = vec![F::zero(); self.dim()];
        for v in 0..self.num_vertices() {
            x[self.basis_index(&Path::trivial(v)).unwrap()] = F::one();
        }
        x
    }

    /// Vertex indices outside `removed`, in increasing order; these are the
    /// vertices of [`quotient_by_idempotent`], position for position.
    pub fn kept_vertices(&self, removed: &[usize]) -> Vec<usize> {
        (0..self.num_vertices()).filter(|v| !removed.contains(v)).collect()
    }
}

/// `A / AeA` for `e` the sum of the idempotents at `removed`.
///
/// Built from the quiver without `removed` and the images of the relations
/// (terms through removed vertices vanish), so the basis is again a set of
/// normal-form paths and the vertex order is the order of the kept vertices.
pub fn quotient_by_idempotent<F: Field>(
    alg: &BoundQuiverAlgebra<F>,
    removed: &[usize],
) -> Result<BoundQuiverAlgebra<F>> {
    let q = alg.quiver();
    if let Some(&v) = removed.iter().find(|&&v| v >= q.num_vertices()) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let kept = alg.kept_vertices(removed);
    if kept.is_empty() {
        return Err(Error::EmptyQuotient);
    }
    let sub = q.without_vertices(removed);
    let relabel = |a: usize| sub.arrow_index(&q.arrow(a).label);
    let mut rels = Vec::new();
    for r in alg.relations() {
        let terms: Vec<(i64, Vec<usize>)> = r
            .terms
            .iter()
            .filter_map(|(c, p)| {
                let np: Option<Vec<usize>> = p.iter().map(|&a| relabel(a)).collect();
                np.map(|np| (*c, np))
            })
            .collect();
        if !terms.is_empty() {
            rels.push(RelationExpr::new(terms));
        }
    }
    build_algebra(&sub, &rels, DEFAULT_CAP.max(alg.loewy_bound()))
}

/// `A^op` as a handle onto the same data.
pub fn opposite_algebra<F: Field>(alg: &BoundQuiverAlgebra<F>) -> BoundQuiverAlgebra<F> {
    alg.opposite()
}

/// Product of two elements written in the basis.
pub fn multiply<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &[F], y: &[F]) -> Vec<F> {
    alg.multiply(x, y)
}
