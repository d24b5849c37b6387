//! Mutation searches over interned indecomposables with cached Hom spaces.

use std::collections::{HashMap, VecDeque};
use std::rc::Rc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::gorenstein::verify_tilting;
use crate::homalg::{ext_dim_from, min_proj_resolution, proj_dim};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{
    cokernel, endomorphism_ring, indecomposable_summands, is_isomorphic, projective, BasicModule, HomSpace,
    ModuleMap, Representation,
};

use super::graph::{GraphKind, GraphNode, MutationEdge, MutationGraph};
use super::pairs::new_support_vertex;

/// Default node budget for the searches.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Vertex matrices of a family of homomorphisms.
type Maps<F> = Rc<Vec<Vec<Matrix<F>>>>;

/// Indecomposables up to isomorphism, with `Hom(a, b)` cached for `a != b`
/// and `rad End(a)` stored under `(a, a)`.
struct Store<F: Field> {
    alg: BoundQuiverAlgebra<F>,
    modules: Vec<Representation<F>>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    homs: HashMap<(usize, usize), Maps<F>>,
}

impl<F: Field> Store<F> {
    fn new(alg: &BoundQuiverAlgebra<F>) -> Self {
        Store { alg: alg.clone(), modules: Vec::new(), by_dims: HashMap::new(), homs: HashMap::new() }
    }

    fn intern(&mut self, x: Representation<F>) -> usize {
        let bucket = self.by_dims.entry(x.dims().to_vec()).or_default();
        if let Some(&id) = bucket.iter().find(|&&id| is_isomorphic(&self.modules[id], &x)) {
            return id;
        }
        let id = self.modules.len();
        bucket.push(id);
        self.modules.push(x);
        id
    }

    fn radical_or_hom(&mut self, a: usize, b: usize) -> Result<Maps<F>> {
        if let Some(h) = self.homs.get(&(a, b)) {
            return Ok(Rc::clone(h));
        }
        let maps: Vec<ModuleMap<F>> = if a == b {
            let ring = endomorphism_ring(&self.modules[a])?;
            ring.radical.basis().iter().map(|c| ring.space.combination(c)).collect()
        } else {
            HomSpace::compute(&self.modules[a], &self.modules[b]).into_basis()
        };
        let h: Maps<F> = Rc::new(maps.into_iter().map(|f| f.vertex_maps().to_vec()).collect());
        self.homs.insert((a, b), Rc::clone(&h));
        Ok(h)
    }

    /// Is `x` a quotient of a sum of copies of the `us`?
    fn in_fac(&mut self, x: usize, us: &[usize]) -> Result<bool> {
        let nv = self.alg.num_vertices();
        let mut spans: Vec<Vec<Vec<F>>> = vec![Vec::new(); nv];
        for &u in us {
            for f in self.radical_or_hom(u, x)?.iter() {
                for (v, m) in f.iter().enumerate() {
                    spans[v].extend(m.columns());
                }
            }
        }
        let x = &self.modules[x];
        Ok((0..nv).all(|v| Subspace::spanned_by(x.dim_at(v), &spans[v]).dim() == x.dim_at(v)))
    }

    /// Minimal left `add(us)`-approximation of `x`, where `x` is not among `us`.
    fn left_approx(&mut self, x: usize, us: &[usize]) -> Result<ModuleMap<F>> {
        let homs: Vec<Maps<F>> = us.iter().map(|&u| self.radical_or_hom(x, u)).collect::<Result<_>>()?;
        let mut targets = Vec::new();
        let mut parts = Vec::new();
        for (i, &ui) in us.iter().enumerate() {
            if homs[i].is_empty() {
                continue;
            }
            let mut through = Vec::new();
            for (j, &uj) in us.iter().enumerate() {
                if homs[j].is_empty() {
                    continue;
                }
                let rad = self.radical_or_hom(uj, ui)?;
                for r in rad.iter() {
                    for h in homs[j].iter() {
                        through.push(flatten(r.iter().zip(h).map(|(a, b)| a.mul(b))));
                    }
                }
            }
            let len = homs[i][0].iter().map(|m| m.rows() * m.cols()).sum();
            let mut sub = Subspace::spanned_by(len, &through);
            for g in homs[i].iter() {
                let v = flatten(g.iter().cloned());
                if !sub.contains(&v) {
                    sub = sub.sum(&Subspace::spanned_by(len, &[v]));
                    parts.push(g.clone());
                    targets.push(ui);
                }
            }
        }
        let xm = &self.modules[x];
        let target = Representation::direct_sum_all(&self.alg, &targets.iter().map(|&t| self.modules[t].clone()).collect::<Vec<_>>());
        let comps: Vec<ModuleMap<F>> = parts
            .into_iter()
            .zip(&targets)
            .map(|(mats, &t)| ModuleMap::new_unchecked(xm, &self.modules[t], mats))
            .collect();
        Ok(ModuleMap::into_sum(xm, &target, &comps))
    }

    /// Interns the indecomposable summands of `y`.
    fn intern_summands(&mut self, y: &Representation<F>) -> Result<Vec<usize>> {
        let mut ids: Vec<usize> = indecomposable_summands(y)?.into_iter().map(|z| self.intern(z)).collect();
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }

    fn dims_of(&self, ids: &[usize]) -> Representation<F> {
        let parts: Vec<_> = ids.iter().map(|&i| self.modules[i].clone()).collect();
        Representation::direct_sum_all(&self.alg, &parts)
    }

    fn into_graph(self, kind: GraphKind, nodes: Vec<GraphNode>, edges: Vec<MutationEdge>, complete: bool, budget: usize) -> MutationGraph<F> {
        let order = edges.iter().map(|e| (e.from, e.to)).collect();
        MutationGraph { kind, algebra: self.alg, modules: self.modules, nodes, edges, order, complete, budget }
    }
}

fn flatten<F: Field>(mats: impl Iterator<Item = Matrix<F>>) -> Vec<F> {
    mats.flat_map(|m| m.to_vector()).collect()
}

/// Work list that is either first-in first-out or drawn at random.
struct Frontier {
    queue: VecDeque<usize>,
    rng: Option<ChaCha8Rng>,
}

impl Frontier {
    fn new(seed: Option<u64>) -> Self {
        Frontier { queue: VecDeque::new(), rng: seed.map(ChaCha8Rng::seed_from_u64) }
    }

    fn push(&mut self, i: usize) {
        self.queue.push_back(i);
    }

    fn pop(&mut self) -> Option<usize> {
        match &mut self.rng {
            None => self.queue.pop_front(),
            Some(rng) if !self.queue.is_empty() => {
                let k = rng.gen_range(0..self.queue.len());
                self.queue.swap_remove_back(k)
            }
            Some(_) => None,
        }
    }

    fn positions(&mut self, len: usize) -> Vec<usize> {
        let mut ks: Vec<usize> = (0..len).collect();
        if let Some(rng) = &mut self.rng {
            ks.shuffle(rng);
        }
        ks
    }
}

/// Options for [`sttilt_enumerate_with`].
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: usize,
    /// Explore in a random order drawn from this seed instead of breadth first.
    pub seed: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, seed: None }
    }
}

/// Basic support tau-tilting pairs reachable from `(A, 0)` by left mutations.
///
/// When the poset is finite every pair is reached this way, since each
/// pair other than the maximum is a left mutation of one of its upper
/// covers. The search stops once `budget` nodes are known and flags the
/// graph incomplete.
pub fn sttilt_enumerate<F: Field>(alg: &BoundQuiverAlgebra<F>, budget: usize) -> Result<MutationGraph<F>> {
    sttilt_enumerate_with(alg, SearchOptions { budget, seed: None })
}

pub fn sttilt_enumerate_with<F: Field>(alg: &BoundQuiverAlgebra<F>, opts: SearchOptions) -> Result<MutationGraph<F>> {
    let budget = opts.budget.max(1);
    let mut store = Store::new(alg);
    let mut start: Vec<usize> = (0..alg.num_vertices()).map(|i| store.intern(projective(alg, i))).collect();
    start.sort_unstable();
    let mut nodes = vec![GraphNode { summands: start.clone(), projectives: Vec::new(), pd: None }];
    let mut index: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
    index.insert((start, Vec::new()), 0);
    let mut edges = Vec::new();
    let mut frontier = Frontier::new(opts.seed);
    frontier.push(0);
    let mut complete = true;
    'search: while let Some(i) = frontier.pop() {
        let node = nodes[i].clone();
        for k in frontier.positions(node.summands.len()) {
            let x = node.summands[k];
            let us: Vec<usize> = node.summands.iter().copied().filter(|&u| u != x).collect();
            if store.in_fac(x, &us)? {
                continue;
            }
            let f = store.left_approx(x, &us)?;
            let (y, _) = cokernel(&f);
            let (summands, projectives, added) = if y.is_zero() {
                let v = new_support_vertex(alg, &store.dims_of(&us), &node.projectives)?;
                let mut p = node.projectives.clone();
                p.push(v);
                p.sort_unstable();
                (us, p, None)
            } else {
                let new = new_summand(&mut store, &y, &us)?;
                let mut s = us;
                s.push(new);
                s.sort_unstable();
                (s, node.projectives.clone(), Some(new))
            };
            let key = (summands, projectives);
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= budget {
                        complete = false;
                        break 'search;
                    }
                    let j = nodes.len();
                    nodes.push(GraphNode { summands: key.0.clone(), projectives: key.1.clone(), pd: None });
                    index.insert(key, j);
                    frontier.push(j);
                    j
                }
            };
            edges.push(MutationEdge { from: i, to: j, removed: x, added });
        }
    }
    Ok(store.into_graph(GraphKind::SupportTauTilting, nodes, edges, complete, budget))
}

/// The single indecomposable making up `y`, which must be new among `us`.
fn new_summand<F: Field>(store: &mut Store<F>, y: &Representation<F>, us: &[usize]) -> Result<usize> {
    match store.intern_summands(y)?.as_slice() {
        [id] if !us.contains(id) => Ok(*id),
        ids => Err(Error::Invalid(format!("exchange cokernel has summand classes {ids:?}, expected one new class"))),
    }
}

/// Tilting modules of projective dimension at most `n` reachable from `A`
/// by mutations `T = X + U -> Y + U`, with `X -> U'` the minimal left
/// `add U`-approximation, injective, and `pd Y <= n`. Every node is
/// certified by [`verify_tilting`]; `order` lists all pairs `T > U`.
pub fn tiltn_enumerate<F: Field>(alg: &BoundQuiverAlgebra<F>, n: usize, budget: usize) -> Result<MutationGraph<F>> {
    let budget = budget.max(1);
    let mut store = Store::new(alg);
    let mut start: Vec<usize> = (0..alg.num_vertices()).map(|i| store.intern(projective(alg, i))).collect();
    start.sort_unstable();
    let mut nodes = vec![GraphNode { summands: start.clone(), projectives: Vec::new(), pd: Some(0) }];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(start, 0);
    let mut edges = Vec::new();
    let mut frontier = Frontier::new(None);
    frontier.push(0);
    let mut complete = true;
    'search: while let Some(i) = frontier.pop() {
        let node = nodes[i].clone();
        for &x in &node.summands {
            let us: Vec<usize> = node.summands.iter().copied().filter(|&u| u != x).collect();
            let f = store.left_approx(x, &us)?;
            if !f.is_injective() {
                continue;
            }
            let (y, _) = cokernel(&f);
            if y.is_zero() || !proj_dim(&y, n).is_at_most(n) {
                continue;
            }
            let new = new_summand(&mut store, &y, &us)?;
            let mut s = us;
            s.push(new);
            s.sort_unstable();
            let j = match index.get(&s) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= budget {
                        complete = false;
                        break 'search;
                    }
                    let t = BasicModule::from_indecomposables(alg, s.iter().map(|&k| store.modules[k].clone()).collect());
                    let cert = verify_tilting(&t, n)?;
                    let pd = match (&cert.failure, cert.pd.exact()) {
                        (None, Some(pd)) => pd,
                        _ => return Err(Error::Invalid(format!("mutation left tilt_{n}: {:?}", cert.failure))),
                    };
                    let j = nodes.len();
                    nodes.push(GraphNode { summands: s.clone(), projectives: Vec::new(), pd: Some(pd) });
                    index.insert(s, j);
                    frontier.push(j);
                    j
                }
            };
            edges.push(MutationEdge { from: i, to: j, removed: x, added: Some(new) });
        }
    }
    let order = full_tilting_order(&store, &nodes);
    let mut g = store.into_graph(GraphKind::Tilting { n }, nodes, edges, complete, budget);
    g.order = order;
    Ok(g)
}

/// All pairs `(a, b)`, `a != b`, with `Ext^k(T_a, T_b) = 0` for `k >= 1`.
fn full_tilting_order<F: Field>(store: &Store<F>, nodes: &[GraphNode]) -> Vec<(usize, usize)> {
    let mods: Vec<Representation<F>> = nodes.iter().map(|nd| store.dims_of(&nd.summands)).collect();
    let mut order = Vec::new();
    for (a, ta) in mods.iter().enumerate() {
        let pd = nodes[a].pd.unwrap_or(0);
        let res = min_proj_resolution(ta, pd);
        for (b, tb) in mods.iter().enumerate() {
            if a != b && (1..=pd).all(|k| ext_dim_from(&res, tb, k) == 0) {
                order.push((a, b));
            }
        }
    }
    order
}
