//! The pairing `E_q(p)` and the regularity test for `(R, S)` data.
//!
//! A datum `p = y_R z_S^{-1}` is regular when `E_q(p) >= 0` for every element
//! `q = y_{i,n} z_U^{-1}` of every fundamental crystal `B(varpi_i, n)` whose base
//! index `n` has the parity opposite to node `i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{weight_to_root, DynkinDiagram, Node, RootVec, WeightVec};
use crate::crystal::fundamental_base;
use crate::error::{Error, Result};
use crate::monomial::{decompose, Monomial, MultisetTuple, ParamSet};

/// An element `q = y_{i,n} z_U^{-1}` of a translated fundamental crystal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionElement {
    pub node: Node,
    pub n: i64,
    pub q: Monomial,
    pub u: MultisetTuple,
}

impl ConditionElement {
    pub fn shifted(&self, by: i64) -> ConditionElement {
        ConditionElement {
            node: self.node,
            n: self.n + by,
            q: self.q.shifted(by),
            u: self.u.shifted(by),
        }
    }
}

/// All elements of `B(varpi_i, n)` with their `U` data, in canonical order.
///
/// `n` may have either parity; regularity uses the opposite one.
pub fn condition_elements(d: &DynkinDiagram, node: Node, n: i64) -> Result<Vec<ConditionElement>> {
    let base = fundamental_base(d, node)?;
    let shift = n - d.parity(node);
    let top = MultisetTuple::from_pairs([(node, [n])]);
    base.iter()
        .map(|m| {
            let q = m.shifted(shift);
            let u = decompose(d, &top, &q)?;
            Ok(ConditionElement { node, n, q, u })
        })
        .collect()
}

/// `E_q(p) = sum U_j(k) R_j(k+1) + sum b_{j,k} S_j(k-1)`.
pub fn e_pairing(qe: &ConditionElement, r: &MultisetTuple, s: &MultisetTuple) -> i64 {
    let from_u: i64 = qe
        .u
        .entries()
        .map(|(j, k, u)| u as i64 * r.count(j, k + 1) as i64)
        .sum();
    let from_b: i64 = qe.q.iter().map(|(j, k, b)| b * s.count(j, k - 1) as i64).sum();
    from_u + from_b
}

/// A failing condition: `E_q(p) < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub node: Node,
    pub n: i64,
    pub q: Monomial,
    pub u: MultisetTuple,
    pub value: i64,
}

/// Precomputed condition elements for one diagram, reusable across many data.
#[derive(Clone, Debug)]
pub struct RegularityChecker {
    diagram: DynkinDiagram,
    /// Per node: base elements at `n = parity(i) + 1` and the span of indices they touch.
    bases: Vec<(Node, Vec<ConditionElement>, i64, i64)>,
}

impl RegularityChecker {
    pub fn new(d: &DynkinDiagram) -> Result<Self> {
        let mut bases = Vec::new();
        for i in d.nodes() {
            let elems = condition_elements(d, i, d.parity(i) + 1)?;
            let n0 = d.parity(i) + 1;
            let mut lo = n0;
            let mut hi = n0;
            for e in &elems {
                let ks = e.q.iter().map(|(_, k, _)| k).chain(e.u.entries().map(|(_, k, _)| k));
                for k in ks {
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
            }
            bases.push((i, elems, lo - n0, hi - n0));
        }
        Ok(RegularityChecker {
            diagram: d.clone(),
            bases,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    /// Every failing condition, in scan order: ascending node, ascending `n`,
    /// canonical element order. With `first_only` the scan stops at the first.
    fn scan(&self, r: &MultisetTuple, s: &MultisetTuple, first_only: bool) -> Vec<Witness> {
        let mut out = Vec::new();
        // Both sums vanish unless q meets (supp R - 1) or (supp S + 1).
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        if let Some((a, b)) = r.value_range() {
            lo = lo.min(a - 1);
            hi = hi.max(b - 1);
        }
        if let Some((a, b)) = s.value_range() {
            lo = lo.min(a + 1);
            hi = hi.max(b + 1);
        }
        if lo > hi {
            return out;
        }
        for (node, elems, span_lo, span_hi) in &self.bases {
            let n0 = self.diagram.parity(*node) + 1;
            let mut n = lo - span_hi;
            if (n - n0).rem_euclid(2) != 0 {
                n -= 1;
            }
            while n <= hi - span_lo {
                let shift = n - n0;
                for base in elems {
                    let value = shifted_pairing(base, shift, r, s);
                    if value < 0 {
                        let e = base.shifted(shift);
                        out.push(Witness {
                            node: *node,
                            n,
                            q: e.q,
                            u: e.u,
                            value,
                        });
                        if first_only {
                            return out;
                        }
                    }
                }
                n += 2;
            }
        }
        out
    }

    /// `None` when regular, otherwise the first failing condition.
    pub fn first_violation(&self, r: &MultisetTuple, s: &MultisetTuple) -> Option<Witness> {
        self.scan(r, s, true).pop()
    }

    pub fn violations(&self, r: &MultisetTuple, s: &MultisetTuple) -> Vec<Witness> {
        self.scan(r, s, false)
    }

    pub fn is_regular(&self, r: &MultisetTuple, s: &MultisetTuple) -> bool {
        self.first_violation(r, s).is_none()
    }
}

fn shifted_pairing(base: &ConditionElement, shift: i64, r: &MultisetTuple, s: &MultisetTuple) -> i64 {
    let from_u: i64 = base
        .u
        .entries()
        .map(|(j, k, u)| u as i64 * r.count(j, k + shift + 1) as i64)
        .sum();
    let from_b: i64 = base
        .q
        .iter()
        .map(|(j, k, b)| b * s.count(j, k + shift - 1) as i64)
        .sum();
    from_u + from_b
}

/// Outcome of [`is_regular`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    NotRegular { witness: Witness },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular)
    }
}

pub fn is_regular(d: &DynkinDiagram, r: &ParamSet, s: &MultisetTuple) -> Result<Regularity> {
    let checker = RegularityChecker::new(d)?;
    Ok(match checker.first_violation(r.multisets(), s) {
        None => Regularity::Regular,
        Some(witness) => Regularity::NotRegular { witness },
    })
}

/// `m` with `lambda - mu = sum m_i alpha_i`, rejecting negative coefficients.
pub fn root_gap(d: &DynkinDiagram, lambda: &WeightVec, mu: &WeightVec) -> Result<RootVec> {
    if mu.0.len() != d.rank() {
        return Err(Error::Invalid(format!(
            "weight {mu} has {} entries, expected {}",
            mu.0.len(),
            d.rank()
        )));
    }
    let m = weight_to_root(d, &lambda.sub(mu))?;
    if let Some(pos) = m.0.iter().position(|&c| c < 0) {
        return Err(Error::NegativeRootCoefficient { node: pos + 1 });
    }
    Ok(m)
}

/// Depth-first search over all parity-valid `S` with `|S_i| = m_i` satisfying
/// the pointwise containment `S_i(k) <= R_i(k+2) + sum_{j~i} S_j(k+1)`.
///
/// That containment is itself the regularity condition for
/// `q = f_i(y_{i,k+3})`, so no regular datum is lost. Levels `k` are visited in
/// descending order, nodes ascending within a level; `accept` filters leaves.
pub fn containment_search<F>(
    d: &DynkinDiagram,
    r: &MultisetTuple,
    m: &RootVec,
    mut accept: F,
) -> Vec<MultisetTuple>
where
    F: FnMut(&MultisetTuple) -> bool,
{
    let mut out = Vec::new();
    let total: i64 = m.0.iter().sum();
    if total == 0 {
        if accept(&MultisetTuple::new()) {
            out.push(MultisetTuple::new());
        }
        return out;
    }
    let Some((r_lo, r_hi)) = r.value_range() else {
        return out;
    };
    let mut search = Search {
        d,
        r,
        r_lo,
        remaining: m.0.clone(),
        levels: BTreeMap::new(),
        current: Vec::new(),
    };
    search.level(r_hi - 1, &mut |s| {
        if accept(s) {
            out.push(s.clone());
        }
    });
    out.sort();
    out
}

struct Search<'a> {
    d: &'a DynkinDiagram,
    r: &'a MultisetTuple,
    r_lo: i64,
    remaining: Vec<i64>,
    /// `S_i(k)` values assigned so far, keyed by `(k, i)`.
    levels: BTreeMap<(i64, Node), usize>,
    current: Vec<(Node, i64, usize)>,
}

impl Search<'_> {
    fn s_at(&self, node: Node, k: i64) -> usize {
        self.levels.get(&(k, node)).copied().unwrap_or(0)
    }

    fn level(&mut self, k: i64, emit: &mut dyn FnMut(&MultisetTuple)) {
        if self.remaining.iter().all(|&x| x == 0) {
            let mut s = MultisetTuple::new();
            for &(node, k, c) in &self.current {
                s.insert_n(node, k, c);
            }
            emit(&s);
            return;
        }
        // Below R, nothing new can start once a level stays empty.
        let above_empty = self.d.nodes().all(|i| self.s_at(i, k + 1) == 0);
        if k + 2 < self.r_lo && above_empty {
            return;
        }
        let nodes: Vec<Node> = self
            .d
            .nodes()
            .filter(|&i| self.d.same_parity(i, k))
            .collect();
        self.assign(k, &nodes, 0, emit);
    }

    fn assign(&mut self, k: i64, nodes: &[Node], idx: usize, emit: &mut dyn FnMut(&MultisetTuple)) {
        if idx == nodes.len() {
            self.level(k - 1, emit);
            return;
        }
        let i = nodes[idx];
        let mut bound = self.r.count(i, k + 2);
        for &j in self.d.neighbors(i) {
            bound += self.s_at(j, k + 1);
        }
        let bound = bound.min(self.remaining[i - 1] as usize);
        for c in (0..=bound).rev() {
            if c > 0 {
                self.levels.insert((k, i), c);
                self.current.push((i, k, c));
                self.remaining[i - 1] -= c as i64;
            }
            self.assign(k, nodes, idx + 1, emit);
            if c > 0 {
                self.levels.remove(&(k, i));
                self.current.pop();
                self.remaining[i - 1] += c as i64;
            }
        }
    }
}

/// All `S` of weight `mu` for which `y_R z_S^{-1}` is regular.
pub fn enumerate_by_regularity(
    d: &DynkinDiagram,
    r: &ParamSet,
    mu: &WeightVec,
) -> Result<Vec<MultisetTuple>> {
    let m = root_gap(d, r.lambda(), mu)?;
    let checker = RegularityChecker::new(d)?;
    Ok(containment_search(d, r.multisets(), &m, |s| {
        checker.is_regular(r.multisets(), s)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{product_crystal, DEFAULT_CAP};
    use crate::monomial::{decompose, weight};

    fn diag(name: &str) -> DynkinDiagram {
        DynkinDiagram::from_name(name).unwrap()
    }

    fn tuple(s: &str) -> MultisetTuple {
        s.parse().unwrap()
    }

    fn figure_data() -> (DynkinDiagram, ParamSet, MultisetTuple) {
        let d = diag("A8").with_flipped_parity();
        let r = ParamSet::new(&d, tuple("2:4,4; 4:6; 6:4")).unwrap();
        let s = tuple("2:2,2; 3:1,1,1,3; 4:2,4; 5:1,1,3; 6:0,0,0,2,2; 7:1,1; 8:2");
        (d, r, s)
    }

    #[test]
    fn figure_pairing_is_minus_one() {
        let (d, r, s) = figure_data();
        let u = tuple("3:2; 4:3; 5:2,4; 6:1,3; 7:2");
        let top = MultisetTuple::from_pairs([(5, [6])]);
        let q = crate::monomial::monomial_from_data(&d, &top, &u);
        let qe = ConditionElement { node: 5, n: 6, q, u };
        assert!(condition_elements(&d, 5, 6).unwrap().contains(&qe));
        assert_eq!(e_pairing(&qe, r.multisets(), &s), -1);

        let checker = RegularityChecker::new(&d).unwrap();
        let all = checker.violations(r.multisets(), &s);
        assert!(all.iter().any(|w| w.q == qe.q && w.value == -1));
        assert!(!is_regular(&d, &r, &s).unwrap().is_regular());
    }

    #[test]
    fn trivial_pairings() {
        let d = diag("A2");
        let elems = condition_elements(&d, 1, 1).unwrap();
        let qe = elems.iter().find(|e| e.u.is_empty()).unwrap();
        assert_eq!(qe.q, Monomial::var(1, 1));
        let empty = MultisetTuple::new();
        assert_eq!(e_pairing(qe, &empty, &empty), 0);
        let s = tuple("1:0,0");
        assert_eq!(e_pairing(qe, &empty, &s), 2);
    }

    #[test]
    fn empty_s_is_regular() {
        let d = diag("A3");
        let r = ParamSet::new(&d, tuple("1:0; 2:1,3")).unwrap();
        assert!(is_regular(&d, &r, &MultisetTuple::new()).unwrap().is_regular());
    }

    #[test]
    fn a1_enumeration() {
        let d = diag("A1");
        let r = ParamSet::new(&d, tuple("1:0,2")).unwrap();
        let found = enumerate_by_regularity(&d, &r, &WeightVec(vec![0])).unwrap();
        assert_eq!(found, vec![tuple("1:-2"), tuple("1:0")]);
        let top = enumerate_by_regularity(&d, &r, &WeightVec(vec![2])).unwrap();
        assert_eq!(top, vec![MultisetTuple::new()]);
        assert_eq!(
            enumerate_by_regularity(&d, &r, &WeightVec(vec![4])),
            Err(Error::NegativeRootCoefficient { node: 1 })
        );
    }

    #[test]
    fn members_are_regular_a2() {
        let d = diag("A2");
        let r = ParamSet::new(&d, tuple("1:0,2; 2:1")).unwrap();
        let c = product_crystal(&d, &r, DEFAULT_CAP).unwrap();
        let checker = RegularityChecker::new(&d).unwrap();
        for p in c.elements() {
            let s = decompose(&d, r.multisets(), p).unwrap();
            assert!(checker.is_regular(r.multisets(), &s), "{p}");
        }
        for (mu, idxs) in c.weight_index() {
            let found = enumerate_by_regularity(&d, &r, &mu).unwrap();
            assert_eq!(found.len(), idxs.len(), "weight {mu}");
            for s in found {
                let p = crate::monomial::monomial_from_data(&d, r.multisets(), &s);
                assert!(c.contains(&p));
                assert_eq!(weight(&d, &p), mu);
            }
        }
    }
}
