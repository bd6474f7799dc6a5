//! Highest weights through multiset inclusions, G-polynomials and chain decompositions.
//!
//! Half-integers never appear: every root `r` of a [`HalfIntPoly`] is stored as `2r`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{DynkinDiagram, Node, OrbitElement, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::monomial::{
    eps_phi, f_tilde, is_highest_weight, t_multisets, Monomial, Multiset, MultisetTuple, ParamSet,
};
use crate::regularity::{condition_elements, containment_search, root_gap, ConditionElement};

/// A monic polynomial in `u` whose roots lie in `(1/2)Z`, kept as doubled integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfIntPoly {
    roots: Multiset,
}

impl HalfIntPoly {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_doubled_roots(roots: Multiset) -> Self {
        HalfIntPoly { roots }
    }

    /// From integer roots.
    pub fn from_roots<I: IntoIterator<Item = i64>>(roots: I) -> Self {
        HalfIntPoly {
            roots: roots.into_iter().map(|r| 2 * r).collect(),
        }
    }

    pub fn doubled_roots(&self) -> &Multiset {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn mul(&self, other: &HalfIntPoly) -> HalfIntPoly {
        HalfIntPoly {
            roots: self.roots.union(&other.roots),
        }
    }

    pub fn divides(&self, other: &HalfIntPoly) -> bool {
        self.roots.is_subset_of(&other.roots)
    }
}

impl fmt::Display for HalfIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        for (doubled, mult) in self.roots.counts().rev() {
            let mag = doubled.abs();
            let num = if mag % 2 == 0 {
                format!("{}", mag / 2)
            } else {
                format!("{mag}/2")
            };
            match doubled.signum() {
                0 => write!(f, "u")?,
                1 => write!(f, "(u-{num})")?,
                _ => write!(f, "(u+{num})")?,
            }
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

/// A highest-weight problem: parameters `R` and a target weight `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwProblem {
    pub diagram: DynkinDiagram,
    pub r: ParamSet,
    pub mu: WeightVec,
    /// `lambda - mu` in root coordinates.
    pub m: RootVec,
    /// Whether `mu` is dominant; the inclusion conditions are stated for dominant `mu`.
    pub dominant: bool,
}

impl HwProblem {
    pub fn new(d: &DynkinDiagram, r: ParamSet, mu: WeightVec) -> Result<Self> {
        let m = root_gap(d, r.lambda(), &mu)?;
        let dominant = mu.is_dominant();
        Ok(HwProblem {
            diagram: d.clone(),
            r,
            mu,
            m,
            dominant,
        })
    }
}

/// The multiset inclusion attached to `q in B(varpi_i, n)`:
/// `U_{b<0} (S_j - k)^{-b} ⊆ U (R_j - k)^{U_j(k-2)} ∪ U_{b>0} (S_j - k)^{b}`.
///
/// The inclusion is invariant under translating `q`, so any `n` may be used.
pub fn hw_condition(qe: &ConditionElement, r: &MultisetTuple, s: &MultisetTuple) -> bool {
    let mut balance: BTreeMap<i64, i64> = BTreeMap::new();
    for (j, k, u) in qe.u.entries() {
        if let Some(rj) = r.get(j) {
            for (x, c) in rj.counts() {
                *balance.entry(x - (k + 2)).or_default() += (u * c) as i64;
            }
        }
    }
    for (j, k, b) in qe.q.iter() {
        if let Some(sj) = s.get(j) {
            for (x, c) in sj.counts() {
                *balance.entry(x - k).or_default() += b * c as i64;
            }
        }
    }
    balance.values().all(|&v| v >= 0)
}

/// Every `q` used by [`enumerate_highest_weights`], one base crystal per node.
pub fn hw_conditions(d: &DynkinDiagram) -> Result<Vec<ConditionElement>> {
    let mut out = Vec::new();
    for i in d.nodes() {
        out.extend(condition_elements(d, i, d.parity(i))?);
    }
    Ok(out)
}

/// All `S` with `|S_i| = m_i` satisfying every inclusion condition.
pub fn enumerate_highest_weights(prob: &HwProblem) -> Result<Vec<MultisetTuple>> {
    let conditions = hw_conditions(&prob.diagram)?;
    let r = prob.r.multisets();
    Ok(containment_search(&prob.diagram, r, &prob.m, |s| {
        conditions.iter().all(|qe| hw_condition(qe, r, s))
    }))
}

/// `P` with `prod (u - b) / prod (u - a) = P(u+1) / P(u)`, inputs and roots doubled.
///
/// Returns `None` when sorted `A` fails to dominate sorted `B` pointwise.
pub fn chain_decompose_doubled(a: &Multiset, b: &Multiset) -> Result<Option<HalfIntPoly>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let all: Vec<i64> = a.values().into_iter().chain(b.values()).collect();
    if let Some(&first) = all.first() {
        if all.iter().any(|x| (x - first).rem_euclid(2) != 0) {
            return Err(Error::CosetMismatch);
        }
    }
    let mut av = a.values();
    let mut bv = b.values();
    av.sort_unstable_by(|x, y| y.cmp(x));
    bv.sort_unstable_by(|x, y| y.cmp(x));
    let mut roots = Multiset::new();
    for (&top, &bottom) in av.iter().zip(&bv) {
        if top < bottom {
            return Ok(None);
        }
        let mut x = bottom + 2;
        while x <= top {
            roots.insert(x);
            x += 2;
        }
    }
    Ok(Some(HalfIntPoly { roots }))
}

/// Integer version of [`chain_decompose_doubled`].
pub fn chain_decompose(a: &Multiset, b: &Multiset) -> Result<Option<HalfIntPoly>> {
    let double = |m: &Multiset| Multiset::from_counts(m.counts().map(|(x, c)| (2 * x, c)));
    chain_decompose_doubled(&double(a), &double(b))
}

/// Weakly decreasing injection `S_i -> T_i` (`phi(s) <= s`), greedily from the top.
pub fn decreasing_injection(s: &Multiset, t: &Multiset) -> Option<Vec<(i64, i64)>> {
    let mut pool = t.clone();
    let mut out = Vec::with_capacity(s.len());
    for x in s.values().into_iter().rev() {
        let target = pool.counts().rev().find(|&(v, _)| v <= x).map(|(v, _)| v)?;
        pool.remove(target);
        out.push((x, target));
    }
    Some(out)
}

/// Per-node data of a finite-dimensional quotient. Roots are doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodePolys {
    pub node: Node,
    pub p: HalfIntPoly,
    pub q: HalfIntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDim {
    pub finite: bool,
    /// Present exactly when `finite`.
    pub polys: Option<Vec<NodePolys>>,
}

/// Finite-dimensionality via weakly decreasing injections `S_i -> T_i`.
pub fn finite_dim_test(d: &DynkinDiagram, r: &ParamSet, s: &MultisetTuple) -> Result<FiniteDim> {
    let t = t_multisets(d, r.multisets(), s)?;
    let mut polys = Vec::new();
    for i in d.nodes() {
        let (si, ti) = (s.at(i), t.at(i));
        let Some(pairs) = decreasing_injection(&si, &ti) else {
            debug_assert!(!is_highest_weight(s, &t));
            return Ok(FiniteDim {
                finite: false,
                polys: None,
            });
        };
        let image: Multiset = pairs.iter().map(|&(_, b)| b).collect();
        let q_roots = ti.checked_sub(&image).expect("image lies in T");
        let p = chain_decompose_doubled(&si, &image)?.expect("injection is decreasing");
        polys.push(NodePolys {
            node: i,
            p,
            q: HalfIntPoly::from_doubled_roots(q_roots),
        });
    }
    debug_assert!(is_highest_weight(s, &t));
    Ok(FiniteDim {
        finite: true,
        polys: Some(polys),
    })
}

/// `u^{m_i} prod_a (u + k_a/2)^{s_a - 1}` along `f_{path}` from `y_{i,0}`; `None` if the walk dies.
pub fn g_poly_path(prob: &HwProblem, node: Node, path: &[Node], s: &[i64]) -> Result<Option<HalfIntPoly>> {
    g_poly_walk(&prob.diagram, node, prob.m.coeff(node), path, s)
}

/// [`g_poly_path`] with `m_i` given directly.
pub fn g_poly_walk(
    d: &DynkinDiagram,
    node: Node,
    m_i: i64,
    path: &[Node],
    s: &[i64],
) -> Result<Option<HalfIntPoly>> {
    d.check_node(node)?;
    if path.len() != s.len() {
        return Err(Error::SizeMismatch {
            left: path.len(),
            right: s.len(),
        });
    }
    if m_i < 0 {
        return Err(Error::NegativeRootCoefficient { node });
    }
    let mut roots = Multiset::new();
    roots.insert_n(0, m_i as usize);
    let mut p = Monomial::var(node, 0);
    for (&i, &sa) in path.iter().zip(s) {
        d.check_node(i)?;
        if sa < 1 {
            return Err(Error::Invalid(format!("exponent {sa} must be at least 1")));
        }
        let Some(k) = eps_phi(&p, i).k_phi else {
            return Ok(None);
        };
        p = f_tilde(d, &p, i).expect("phi is positive");
        roots.insert_n(-k, (sa - 1) as usize);
    }
    Ok(Some(HalfIntPoly { roots }))
}

/// `G_gamma` along the stored minimal word, with `s_a = mu_{i_a} + 1`.
pub fn g_gamma(prob: &HwProblem, g: &OrbitElement) -> Result<HalfIntPoly> {
    g_gamma_word(&prob.diagram, g.node, prob.m.coeff(g.node), &prob.mu, &g.word)
}

/// `G_gamma` along an explicit word (first letter applied first).
pub fn g_gamma_word(
    d: &DynkinDiagram,
    node: Node,
    m_i: i64,
    mu: &WeightVec,
    word: &[Node],
) -> Result<HalfIntPoly> {
    let s: Vec<i64> = word.iter().map(|&i| mu.coeff(i) + 1).collect();
    g_poly_walk(d, node, m_i, word, &s)?
        .ok_or_else(|| Error::Invalid(format!("word {word:?} leaves the crystal of node {node}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::minuscule_orbit;

    fn diag(name: &str) -> DynkinDiagram {
        DynkinDiagram::from_name(name).unwrap()
    }

    fn tuple(s: &str) -> MultisetTuple {
        s.parse().unwrap()
    }

    fn ms(v: &[i64]) -> Multiset {
        v.iter().copied().collect()
    }

    #[test]
    fn condition_examples() {
        let d = diag("A1");
        let r = tuple("1:0,2");
        let conds = hw_conditions(&d).unwrap();
        let top = conds.iter().find(|c| c.u.is_empty()).unwrap();
        assert!(hw_condition(top, &r, &tuple("1:5")));
        let all = |s: &str| conds.iter().all(|c| hw_condition(c, &r, &tuple(s)));
        assert!(all("1:0"));
        assert!(!all("1:2"));
    }

    #[test]
    fn enumeration_examples() {
        let d = diag("A1");
        let r = ParamSet::new(&d, tuple("1:0,2")).unwrap();
        let prob = HwProblem::new(&d, r.clone(), WeightVec(vec![0])).unwrap();
        assert_eq!(
            enumerate_highest_weights(&prob).unwrap(),
            vec![tuple("1:-2"), tuple("1:0")]
        );
        let prob = HwProblem::new(&d, r, WeightVec(vec![2])).unwrap();
        assert_eq!(
            enumerate_highest_weights(&prob).unwrap(),
            vec![MultisetTuple::new()]
        );

        let a2 = diag("A2");
        let r = ParamSet::new(&a2, tuple("1:0")).unwrap();
        let prob = HwProblem::new(&a2, r, WeightVec(vec![0, -1])).unwrap();
        assert!(!prob.dominant);
        assert_eq!(
            enumerate_highest_weights(&prob).unwrap(),
            vec![tuple("1:-2; 2:-3")]
        );
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            chain_decompose(&ms(&[1, 4]), &ms(&[4, 1])).unwrap(),
            Some(HalfIntPoly::one())
        );
        assert_eq!(
            chain_decompose(&ms(&[5]), &ms(&[2])).unwrap(),
            Some(HalfIntPoly::from_roots([3, 4, 5]))
        );
        assert_eq!(chain_decompose(&ms(&[0]), &ms(&[1])).unwrap(), None);
        assert_eq!(
            chain_decompose(&ms(&[0]), &ms(&[1, 2])),
            Err(Error::SizeMismatch { left: 1, right: 2 })
        );
        assert_eq!(
            chain_decompose_doubled(&ms(&[3]), &ms(&[0])),
            Err(Error::CosetMismatch)
        );
    }

    #[test]
    fn finite_dim_examples() {
        let d = diag("A1");
        let r = ParamSet::new(&d, tuple("1:0,2")).unwrap();
        let empty = finite_dim_test(&d, &r, &MultisetTuple::new()).unwrap();
        assert!(empty.finite);
        let polys = empty.polys.unwrap();
        assert_eq!(polys[0].q.doubled_roots(), &ms(&[0, 2]));
        assert_eq!(polys[0].p, HalfIntPoly::one());

        assert!(finite_dim_test(&d, &r, &tuple("1:0")).unwrap().finite);
        let r0 = ParamSet::new(&d, tuple("1:0")).unwrap();
        assert!(!finite_dim_test(&d, &r0, &tuple("1:-2")).unwrap().finite);
    }

    #[test]
    fn sl3_g_polynomials() {
        let d = diag("A2");
        let r = ParamSet::new(&d, tuple("1:0,0,0; 2:1,1")).unwrap();
        // mu = (1, 0): m = lambda - mu in roots.
        let prob = HwProblem::new(&d, r, WeightVec(vec![1, 0])).unwrap();
        let (m1, mu1, mu2) = (prob.m.coeff(1), 1, 0);
        let orbit = minuscule_orbit(&d, 1).unwrap();
        let g0 = g_gamma(&prob, &orbit[0]).unwrap();
        assert_eq!(g0, HalfIntPoly::from_roots(vec![0; m1 as usize]));
        let g1 = g_gamma(&prob, &orbit[1]).unwrap();
        assert_eq!(g1.degree() as i64, mu1 + m1);
        let g2 = g_gamma(&prob, &orbit[2]).unwrap();
        assert_eq!(g2.degree() as i64, mu1 + m1 + mu2);
        assert!(g1.divides(&g2));
        assert_eq!(g_poly_path(&prob, 1, &[2], &[1]).unwrap(), None);
        assert_eq!(format!("{}", HalfIntPoly::from_doubled_roots(ms(&[0, 0, 1, -3]))), "(u-1/2)u^2(u+3/2)");
    }
}
