//! Finite monomial crystals: closures under the Kashiwara operators,
//! fundamental crystals `B(varpi_i, c)` and product crystals `B(lambda, R)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;

use crate::cartan::{chi, DynkinDiagram, Node, OrbitElement, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::monomial::{
    decompose, e_tilde, f_tilde, is_highest_weight_monomial, weight, Monomial, MultisetTuple,
    ParamSet,
};

/// Default bound on element insertions during generation.
pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub node: Node,
    pub target: usize,
}

/// A finite set of monomials closed under every `e_i` and `f_i`.
///
/// Elements are kept in canonical (sorted) order; edges point along `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crystal {
    diagram: DynkinDiagram,
    elements: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    edges: Vec<Edge>,
    highest: Vec<usize>,
}

impl Crystal {
    /// Builds a crystal from a set that must already be closed.
    pub fn from_closed_set<I>(d: &DynkinDiagram, elements: I) -> Result<Crystal>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let set: BTreeSet<Monomial> = elements.into_iter().collect();
        let elements: Vec<Monomial> = set.into_iter().collect();
        let index: HashMap<Monomial, usize> = elements
            .iter()
            .enumerate()
            .map(|(idx, m)| (m.clone(), idx))
            .collect();
        let mut edges = Vec::new();
        let mut highest = Vec::new();
        for (source, p) in elements.iter().enumerate() {
            for i in d.nodes() {
                if let Some(q) = f_tilde(d, p, i) {
                    let target = *index.get(&q).ok_or_else(|| {
                        Error::NotClosed(format!("f_{i}({p}) = {q} is missing"))
                    })?;
                    edges.push(Edge {
                        source,
                        node: i,
                        target,
                    });
                }
                if let Some(q) = e_tilde(d, p, i) {
                    if !index.contains_key(&q) {
                        return Err(Error::NotClosed(format!("e_{i}({p}) = {q} is missing")));
                    }
                }
            }
            if is_highest_weight_monomial(d, p) {
                highest.push(source);
            }
        }
        Ok(Crystal {
            diagram: d.clone(),
            elements,
            index,
            edges,
            highest,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices of the highest-weight elements.
    pub fn highest(&self) -> &[usize] {
        &self.highest
    }

    pub fn contains(&self, p: &Monomial) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Monomial) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn weight_of(&self, idx: usize) -> WeightVec {
        weight(&self.diagram, &self.elements[idx])
    }

    /// Element indices grouped by weight.
    pub fn weight_index(&self) -> BTreeMap<WeightVec, Vec<usize>> {
        let mut out: BTreeMap<WeightVec, Vec<usize>> = BTreeMap::new();
        for idx in 0..self.len() {
            out.entry(self.weight_of(idx)).or_default().push(idx);
        }
        out
    }
}

/// Breadth-first closure of `seeds` under all `e_i`, `f_i`.
pub fn generate_closure<I>(d: &DynkinDiagram, seeds: I, cap: usize) -> Result<Crystal>
where
    I: IntoIterator<Item = Monomial>,
{
    Crystal::from_closed_set(d, closure_set(d, seeds, cap)?)
}

fn closure_set<I>(d: &DynkinDiagram, seeds: I, cap: usize) -> Result<HashSet<Monomial>>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    if seen.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    while let Some(p) = queue.pop_front() {
        for i in d.nodes() {
            for q in [f_tilde(d, &p, i), e_tilde(d, &p, i)].into_iter().flatten() {
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    queue.push_back(q);
                }
            }
        }
    }
    Ok(seen)
}

type CacheKey = (DynkinDiagram, Node);

fn fundamental_cache() -> &'static Mutex<HashMap<CacheKey, Arc<Vec<Monomial>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Vec<Monomial>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Sorted elements of `B(varpi_i, c0)` with `c0 = parity(i)`, cached per diagram and node.
pub fn fundamental_base(d: &DynkinDiagram, node: Node) -> Result<Arc<Vec<Monomial>>> {
    d.check_node(node)?;
    let key = (d.clone(), node);
    if let Some(hit) = fundamental_cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let c0 = d.parity(node);
    let mut elements: Vec<Monomial> = closure_set(d, [Monomial::var(node, c0)], DEFAULT_CAP)?
        .into_iter()
        .collect();
    elements.sort();
    let elements = Arc::new(elements);
    fundamental_cache()
        .lock()
        .unwrap()
        .insert(key, Arc::clone(&elements));
    Ok(elements)
}

/// Elements of `B(varpi_i, c)` for any integer `c`, translated from the cached base.
///
/// When `c` has the wrong parity the result lives off the parity lattice; such
/// translated crystals are what the regularity conditions range over.
pub fn fundamental_translated(d: &DynkinDiagram, node: Node, c: i64) -> Result<Vec<Monomial>> {
    let base = fundamental_base(d, node)?;
    let shift = c - d.parity(node);
    Ok(base.iter().map(|m| m.shifted(shift)).collect())
}

/// The fundamental monomial crystal `B(varpi_i, c)`.
pub fn fundamental(d: &DynkinDiagram, node: Node, c: i64) -> Result<Crystal> {
    d.check_node(node)?;
    if !d.same_parity(node, c) {
        return Err(Error::ParityViolation { node, k: c });
    }
    Crystal::from_closed_set(d, fundamental_translated(d, node, c)?)
}

/// The set of all products with one factor from each `B(varpi_i, c)`, `c in R_i`.
pub fn product_set(d: &DynkinDiagram, r: &ParamSet, cap: usize) -> Result<BTreeSet<Monomial>> {
    let mut current: HashSet<Monomial> = HashSet::from([Monomial::one()]);
    let mut insertions = 1usize;
    for (node, c) in r.parameters() {
        let factor = fundamental_translated(d, node, c)?;
        let mut next = HashSet::with_capacity(current.len() * factor.len());
        for p in &current {
            for q in &factor {
                insertions += 1;
                if insertions > cap {
                    return Err(Error::CapExceeded { cap });
                }
                next.insert(p.mul(q));
            }
        }
        current = next;
    }
    Ok(current.into_iter().collect())
}

/// The product monomial crystal `B(lambda, R)`.
pub fn product_crystal(d: &DynkinDiagram, r: &ParamSet, cap: usize) -> Result<Crystal> {
    Crystal::from_closed_set(d, product_set(d, r, cap)?)
}

/// All elements of weight `mu`.
pub fn weight_space<'a>(c: &'a Crystal, mu: &WeightVec) -> Vec<&'a Monomial> {
    c.elements()
        .iter()
        .filter(|p| &weight(c.diagram(), p) == mu)
        .collect()
}

/// The connected component containing `p`.
pub fn connected_component(c: &Crystal, p: &Monomial) -> Result<Crystal> {
    let start = c
        .index_of(p)
        .ok_or_else(|| Error::NotAnElement(p.to_string()))?;
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); c.len()];
    for e in c.edges() {
        adjacency[e.source].push(e.target);
        adjacency[e.target].push(e.source);
    }
    let mut seen = vec![false; c.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(idx) = queue.pop_front() {
        for &next in &adjacency[idx] {
            if !seen[next] {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    let members = c
        .elements()
        .iter()
        .zip(&seen)
        .filter(|(_, &s)| s)
        .map(|(m, _)| m.clone());
    Crystal::from_closed_set(c.diagram(), members)
}

/// Result of [`classify_params`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamClass {
    pub well_spaced: bool,
    pub generic: bool,
    pub maximally_singular: bool,
    /// `|B(lambda, R)|`.
    pub product_size: usize,
    /// `prod |B(varpi_i, c)|` over all parameters.
    pub tensor_bound: u128,
    /// Size of the component of `y_R`.
    pub component_size: usize,
    /// `ceil(max_i 2 ht(varpi_i))`.
    pub gap_formula: i64,
    /// Largest `c - min k` over variables of the fundamental crystals in use.
    pub gap_span: i64,
    /// The larger of the two; parameter gaps must exceed it to be well spaced.
    pub gap_bound: i64,
}

pub fn classify_params(d: &DynkinDiagram, r: &ParamSet, cap: usize) -> Result<ParamClass> {
    let crystal = product_crystal(d, r, cap)?;
    let top = crate::monomial::y_of(r.multisets());
    let component = connected_component(&crystal, &top)?;

    let mut tensor_bound: u128 = 1;
    let mut gap_span = 0;
    let mut nodes_used = BTreeSet::new();
    for (node, _) in r.parameters() {
        let base = fundamental_base(d, node)?;
        tensor_bound *= base.len() as u128;
        nodes_used.insert(node);
    }
    for node in nodes_used {
        let c0 = d.parity(node);
        let base = fundamental_base(d, node)?;
        let lowest = base
            .iter()
            .filter_map(|m| m.k_range().map(|(lo, _)| lo))
            .min()
            .unwrap_or(c0);
        gap_span = gap_span.max(c0 - lowest);
    }
    let gap_formula = d
        .nodes()
        .map(|i| {
            let h: Ratio<i64> = d.fundamental_weight_in_roots(i).into_iter().sum();
            (h * 2).ceil().to_integer()
        })
        .max()
        .unwrap_or(0);
    let gap_bound = gap_formula.max(gap_span);
    let params = r.parameters();
    let well_spaced = params.windows(2).all(|w| w[1].1 - w[0].1 > gap_bound);

    Ok(ParamClass {
        well_spaced,
        generic: crystal.len() as u128 == tensor_bound,
        maximally_singular: crystal.len() == component.len(),
        product_size: crystal.len(),
        tensor_bound,
        component_size: component.len(),
        gap_formula,
        gap_span,
        gap_bound,
    })
}

/// `y_{gamma,c}`: the unique weight-`gamma` monomial of `B(varpi_i, c)` for minuscule `i`.
pub fn minuscule_monomial(d: &DynkinDiagram, g: &OrbitElement, c: i64) -> Monomial {
    let rank = d.rank();
    Monomial::from_exponents(d.nodes().filter_map(|j| {
        let pairing = g.gamma.coeff(j);
        if pairing == 0 {
            return None;
        }
        let image = g.apply_inverse(d, &RootVec::simple(rank, j));
        let h = crate::cartan::height(&image).abs();
        Some((j, c - h + pairing, pairing))
    }))
}

/// Both sides of `2 tau(gamma) = (c-1)(varpi_i - gamma) + chi(gamma)`, in root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSides {
    pub s: MultisetTuple,
    pub two_tau: RootVec,
    pub rhs: RootVec,
}

impl TauSides {
    pub fn holds(&self) -> bool {
        self.two_tau == self.rhs
    }
}

pub fn tau_sides(d: &DynkinDiagram, g: &OrbitElement, c: i64) -> Result<TauSides> {
    let r = MultisetTuple::from_pairs([(g.node, [c])]);
    let s = decompose(d, &r, &minuscule_monomial(d, g, c))?;
    let mut two_tau = RootVec::zero(d.rank());
    for (node, k, mult) in s.entries() {
        two_tau.0[node - 1] += k * mult as i64;
    }
    let rhs = g.depth.scale(c - 1).add(&chi(d, g));
    Ok(TauSides { s, two_tau, rhs })
}

pub fn tau_check(d: &DynkinDiagram, g: &OrbitElement, c: i64) -> Result<bool> {
    Ok(tau_sides(d, g, c)?.holds())
}
