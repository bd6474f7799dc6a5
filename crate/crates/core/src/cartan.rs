//! Simply-laced root data.
//!
//! Nodes use Bourbaki labels and are 1-based everywhere in the public API:
//!
//! | type  | edges                                              |
//! |-------|----------------------------------------------------|
//! | `A_n` | `1-2-...-n`                                        |
//! | `D_n` | `1-2-...-(n-1)`, plus `(n-2)-n`                    |
//! | `E_n` | `1-3-4-5-...-n`, plus `2-4`                        |
//!
//! Weights are written in the fundamental basis (`WeightVec`), roots in the
//! simple-root basis (`RootVec`). Because the Cartan matrix is symmetric, the
//! pairing `<gamma, alpha_p>` of a weight with a simple root is simply the
//! `p`-th weight coordinate.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Node = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramKind {
    A,
    D,
    E,
}

impl DiagramKind {
    fn letter(self) -> char {
        match self {
            DiagramKind::A => 'A',
            DiagramKind::D => 'D',
            DiagramKind::E => 'E',
        }
    }
}

/// A simply-laced Dynkin diagram together with a fixed bipartition of its nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    kind: DiagramKind,
    rank: usize,
    flipped: bool,
    neighbors: Vec<Vec<Node>>,
    parity: Vec<i64>,
}

impl DynkinDiagram {
    pub fn new(kind: DiagramKind, rank: usize) -> Result<Self> {
        let allowed = match kind {
            DiagramKind::A => (1..=12).contains(&rank),
            DiagramKind::D => (4..=8).contains(&rank),
            DiagramKind::E => (6..=8).contains(&rank),
        };
        if !allowed {
            return Err(Error::RankOutOfRange {
                kind: kind.letter(),
                rank,
            });
        }
        let mut edges = Vec::new();
        match kind {
            DiagramKind::A => edges.extend((1..rank).map(|i| (i, i + 1))),
            DiagramKind::D => {
                edges.extend((1..rank - 1).map(|i| (i, i + 1)));
                edges.push((rank - 2, rank));
            }
            DiagramKind::E => {
                edges.push((1, 3));
                edges.extend((3..rank).map(|i| (i, i + 1)));
                edges.push((2, 4));
            }
        }
        let mut neighbors = vec![Vec::new(); rank];
        for (a, b) in edges {
            neighbors[a - 1].push(b);
            neighbors[b - 1].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }

        // distance from node 1, mod 2
        let mut parity = vec![-1i64; rank];
        parity[0] = 0;
        let mut queue = VecDeque::from([1usize]);
        while let Some(i) = queue.pop_front() {
            for &j in &neighbors[i - 1] {
                if parity[j - 1] < 0 {
                    parity[j - 1] = 1 - parity[i - 1];
                    queue.push_back(j);
                }
            }
        }

        Ok(Self {
            kind,
            rank,
            flipped: false,
            neighbors,
            parity,
        })
    }

    /// Parses names such as `"A2"`, `"D4"`, `"E6"`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let kind = match chars.next() {
            Some('A') | Some('a') => DiagramKind::A,
            Some('D') | Some('d') => DiagramKind::D,
            Some('E') | Some('e') => DiagramKind::E,
            _ => return Err(Error::UnknownDiagram(name.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownDiagram(name.to_string()))?;
        Self::new(kind, rank)
    }

    /// Swaps the two parity classes. Every `k`-index shifts parity by one.
    pub fn with_flipped_parity(mut self) -> Self {
        self.flipped = !self.flipped;
        for p in &mut self.parity {
            *p = 1 - *p;
        }
        self
    }

    pub fn with_parity_flip(self, flip: bool) -> Self {
        if flip {
            self.with_flipped_parity()
        } else {
            self
        }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_flipped(&self) -> bool {
        self.flipped
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<Node> {
        1..=self.rank
    }

    pub fn check_node(&self, node: Node) -> Result<()> {
        if node == 0 || node > self.rank {
            Err(Error::InvalidNode {
                node,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn neighbors(&self, node: Node) -> &[Node] {
        &self.neighbors[node - 1]
    }

    pub fn adjacent(&self, i: Node, j: Node) -> bool {
        self.neighbors[i - 1].contains(&j)
    }

    /// Parity class (0 or 1) of a node.
    pub fn parity(&self, node: Node) -> i64 {
        self.parity[node - 1]
    }

    /// Whether `k` has the same parity as `node`.
    pub fn same_parity(&self, node: Node, k: i64) -> bool {
        k.rem_euclid(2) == self.parity(node)
    }

    pub fn cartan_entry(&self, i: Node, j: Node) -> i64 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.nodes()
            .map(|i| self.nodes().map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// The simple root `alpha_p` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, p: Node) -> WeightVec {
        WeightVec(self.nodes().map(|j| self.cartan_entry(j, p)).collect())
    }

    /// Converts root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, m: &RootVec) -> WeightVec {
        WeightVec(
            self.nodes()
                .map(|i| {
                    self.nodes()
                        .map(|j| self.cartan_entry(i, j) * m.0[j - 1])
                        .sum()
                })
                .collect(),
        )
    }

    /// `<beta, alpha_p>` for a root-coordinate vector.
    pub fn root_pairing(&self, beta: &RootVec, p: Node) -> i64 {
        self.nodes()
            .map(|j| self.cartan_entry(p, j) * beta.0[j - 1])
            .sum()
    }

    /// Whether the fundamental weight at `node` is minuscule.
    pub fn is_minuscule(&self, node: Node) -> bool {
        let n = self.rank;
        match self.kind {
            DiagramKind::A => (1..=n).contains(&node),
            DiagramKind::D => node == 1 || node == n - 1 || node == n,
            DiagramKind::E => matches!((n, node), (6, 1) | (6, 6) | (7, 7)),
        }
    }

    fn solve_rational(&self, v: &[i64]) -> Vec<Ratio<i64>> {
        let n = self.rank;
        let mut a: Vec<Vec<Ratio<i64>>> = self
            .nodes()
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = self
                    .nodes()
                    .map(|j| Ratio::from_integer(self.cartan_entry(i, j)))
                    .collect();
                row.push(Ratio::from_integer(v[i - 1]));
                row
            })
            .collect();
        // The Cartan matrix is positive definite, so no pivoting is needed.
        for col in 0..n {
            let pivot = a[col][col];
            for entry in a[col].iter_mut() {
                *entry /= pivot;
            }
            for row in 0..n {
                if row != col && a[row][col] != Ratio::from_integer(0) {
                    let factor = a[row][col];
                    for c in 0..=n {
                        let delta = factor * a[col][c];
                        a[row][c] -= delta;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n]).collect()
    }

    /// Fundamental weight `varpi_node` written in simple-root coordinates.
    pub fn fundamental_weight_in_roots(&self, node: Node) -> Vec<Ratio<i64>> {
        let mut e = vec![0; self.rank];
        e[node - 1] = 1;
        self.solve_rational(&e)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_name(s)
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn fmt_coords(coords: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (idx, c) in coords.iter().enumerate() {
        if idx > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: Node) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        WeightVec(v)
    }

    pub fn coeff(&self, node: Node) -> i64 {
        self.0[node - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.0, f)
    }
}

/// A vector in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(rank: usize) -> Self {
        RootVec(vec![0; rank])
    }

    pub fn simple(rank: usize, node: Node) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        RootVec(v)
    }

    pub fn coeff(&self, node: Node) -> i64 {
        self.0[node - 1]
    }

    pub fn add(&self, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> RootVec {
        RootVec(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> RootVec {
        self.scale(-1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.0, f)
    }
}

/// Solves `C m = v`, failing unless the solution is integral.
pub fn weight_to_root(d: &DynkinDiagram, v: &WeightVec) -> Result<RootVec> {
    if v.0.len() != d.rank() {
        return Err(Error::Invalid(format!(
            "weight {v} has {} coordinates, expected {}",
            v.0.len(),
            d.rank()
        )));
    }
    let sol = d.solve_rational(&v.0);
    let mut out = Vec::with_capacity(sol.len());
    for r in sol {
        if !r.is_integer() {
            return Err(Error::NotInRootLattice(v.to_string()));
        }
        out.push(r.to_integer());
    }
    Ok(RootVec(out))
}

/// Sum of simple-root coefficients.
pub fn height(beta: &RootVec) -> i64 {
    beta.0.iter().sum()
}

/// An element `gamma = w varpi_i` of a minuscule Weyl orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitElement {
    pub node: Node,
    pub gamma: WeightVec,
    /// Simple reflections in application order: `word[0]` is applied first.
    pub word: Vec<Node>,
    /// `varpi_i - gamma` in root coordinates.
    pub depth: RootVec,
}

impl OrbitElement {
    /// Applies `w^{-1}` to a root, where `w = s_{word[last]} ... s_{word[0]}`.
    pub fn apply_inverse(&self, d: &DynkinDiagram, beta: &RootVec) -> RootVec {
        let mut out = beta.clone();
        for &p in self.word.iter().rev() {
            reflect_root(d, &mut out, p);
        }
        out
    }
}

/// In-place simple reflection of a root-coordinate vector.
pub fn reflect_root(d: &DynkinDiagram, beta: &mut RootVec, p: Node) {
    let c = d.root_pairing(beta, p);
    beta.0[p - 1] -= c;
}

/// Breadth-first enumeration of `W varpi_i` with minimal words.
pub fn minuscule_orbit(d: &DynkinDiagram, node: Node) -> Result<Vec<OrbitElement>> {
    d.check_node(node)?;
    if !d.is_minuscule(node) {
        return Err(Error::NotMinuscule {
            diagram: d.name(),
            node,
        });
    }
    let rank = d.rank();
    let start = OrbitElement {
        node,
        gamma: WeightVec::fundamental(rank, node),
        word: Vec::new(),
        depth: RootVec::zero(rank),
    };
    let mut seen: HashSet<WeightVec> = HashSet::from([start.gamma.clone()]);
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        head += 1;
        for p in d.nodes() {
            if current.gamma.coeff(p) != 1 {
                continue;
            }
            let gamma = current.gamma.sub(&d.simple_root_weight(p));
            if seen.insert(gamma.clone()) {
                let mut word = current.word.clone();
                word.push(p);
                let mut depth = current.depth.clone();
                depth.0[p - 1] += 1;
                out.push(OrbitElement {
                    node,
                    gamma,
                    word,
                    depth,
                });
            }
        }
    }
    Ok(out)
}

/// Every minimal word reaching `target.gamma` from `varpi_i`.
pub fn all_minimal_words(d: &DynkinDiagram, target: &OrbitElement) -> Vec<Vec<Node>> {
    fn walk(
        d: &DynkinDiagram,
        gamma: &WeightVec,
        target: &WeightVec,
        remaining: i64,
        word: &mut Vec<Node>,
        out: &mut Vec<Vec<Node>>,
    ) {
        if remaining == 0 {
            if gamma == target {
                out.push(word.clone());
            }
            return;
        }
        for p in d.nodes() {
            if gamma.coeff(p) == 1 {
                let next = gamma.sub(&d.simple_root_weight(p));
                word.push(p);
                walk(d, &next, target, remaining - 1, word, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    let start = WeightVec::fundamental(d.rank(), target.node);
    walk(
        d,
        &start,
        &target.gamma,
        height(&target.depth),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `w rho - rho` in root coordinates for the minimal word of `g`.
pub fn chi(d: &DynkinDiagram, g: &OrbitElement) -> RootVec {
    let mut rho = vec![1i64; d.rank()];
    let mut diff = RootVec::zero(d.rank());
    for &p in &g.word {
        let c = rho[p - 1];
        for j in d.nodes() {
            rho[j - 1] -= c * d.cartan_entry(j, p);
        }
        diff.0[p - 1] -= c;
    }
    diff
}

/// Positive roots in root coordinates, generated by root strings.
pub fn positive_roots(d: &DynkinDiagram) -> Vec<RootVec> {
    let rank = d.rank();
    let mut roots: Vec<RootVec> = d.nodes().map(|i| RootVec::simple(rank, i)).collect();
    let mut known: HashSet<RootVec> = roots.iter().cloned().collect();
    let mut head = 0;
    while head < roots.len() {
        let beta = roots[head].clone();
        head += 1;
        for j in d.nodes() {
            let alpha = RootVec::simple(rank, j);
            if beta == alpha {
                continue;
            }
            // length of the alpha_j-string going down from beta
            let mut down = 0;
            let mut probe = beta.sub(&alpha);
            while known.contains(&probe) {
                down += 1;
                probe = probe.sub(&alpha);
            }
            let up = down - d.root_pairing(&beta, j);
            if up > 0 {
                let next = beta.add(&alpha);
                if known.insert(next.clone()) {
                    roots.push(next);
                }
            }
        }
    }
    roots.sort_by_key(|r| (height(r), r.0.clone()));
    roots
}

/// `dim V(lambda)` by the Weyl dimension formula, in exact integer arithmetic.
pub fn weyl_dimension(d: &DynkinDiagram, lambda: &WeightVec) -> Result<u128> {
    if !lambda.is_dominant() {
        return Err(Error::Invalid(format!("{lambda} is not dominant")));
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for beta in positive_roots(d) {
        let shifted: i64 = d
            .nodes()
            .map(|j| beta.coeff(j) * (lambda.coeff(j) + 1))
            .sum();
        num *= BigUint::from(shifted as u64);
        den *= BigUint::from(height(&beta) as u64);
    }
    let q = &num / &den;
    debug_assert_eq!(&q * &den, num);
    u128::try_from(q).map_err(|_| Error::Invalid("dimension overflows u128".into()))
}

/// `Delta(gamma)`: images under `w` of the positive roots involving `alpha_i` that become negative.
pub fn delta_gamma(d: &DynkinDiagram, g: &OrbitElement) -> Vec<RootVec> {
    let mut out = Vec::new();
    for beta in positive_roots(d) {
        if beta.coeff(g.node) == 0 {
            continue;
        }
        let mut image = beta.clone();
        for &p in &g.word {
            reflect_root(d, &mut image, p);
        }
        if image.0.iter().all(|&c| c <= 0) {
            out.push(image);
        }
    }
    out
}

/// Simple reflection `s_p` acting on a weight.
pub fn reflect_weight(d: &DynkinDiagram, w: &WeightVec, p: Node) -> WeightVec {
    let c = w.coeff(p);
    let alpha = d.simple_root_weight(p);
    WeightVec(w.0.iter().zip(&alpha.0).map(|(a, b)| a - c * b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(name: &str) -> DynkinDiagram {
        DynkinDiagram::from_name(name).unwrap()
    }

    #[test]
    fn build_small_diagrams() {
        let a2 = diag("A2");
        assert_eq!(a2.rank(), 2);
        assert!(a2.adjacent(1, 2));
        assert_eq!((a2.parity(1), a2.parity(2)), (0, 1));

        let d4 = diag("D4");
        assert_eq!(d4.neighbors(2), &[1, 3, 4]);

        let a1 = diag("A1");
        assert!(a1.neighbors(1).is_empty());
        assert_eq!(a1.parity(1), 0);

        let e6 = diag("E6");
        assert_eq!(e6.neighbors(4), &[2, 3, 5]);
    }

    #[test]
    fn parity_is_proper_colouring() {
        for name in ["A5", "D6", "E6", "E7", "E8"] {
            let d = diag(name);
            for i in d.nodes() {
                for &j in d.neighbors(i) {
                    assert_ne!(d.parity(i), d.parity(j));
                }
            }
            let flipped = d.clone().with_flipped_parity();
            assert_eq!(flipped.parity(1), 1);
        }
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(
            DynkinDiagram::from_name("B3"),
            Err(Error::UnknownDiagram(_))
        ));
        assert!(matches!(
            DynkinDiagram::from_name("A13"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            DynkinDiagram::from_name("D3"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            DynkinDiagram::from_name("E5"),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn weight_to_root_examples() {
        let a1 = diag("A1");
        assert_eq!(
            weight_to_root(&a1, &WeightVec(vec![2])).unwrap(),
            RootVec(vec![1])
        );
        let a2 = diag("A2");
        assert_eq!(
            weight_to_root(&a2, &WeightVec(vec![1, 1])).unwrap(),
            RootVec(vec![1, 1])
        );
        assert!(matches!(
            weight_to_root(&a2, &WeightVec(vec![1, 0])),
            Err(Error::NotInRootLattice(_))
        ));
    }

    #[test]
    fn heights() {
        assert_eq!(height(&RootVec(vec![1])), 1);
        assert_eq!(height(&RootVec(vec![1, 1])), 2);
        assert_eq!(height(&RootVec(vec![0, 0, 0])), 0);
    }

    #[test]
    fn orbit_examples() {
        let a1 = minuscule_orbit(&diag("A1"), 1).unwrap();
        assert_eq!(a1.len(), 2);
        assert_eq!(a1[1].word, vec![1]);

        let a2 = minuscule_orbit(&diag("A2"), 1).unwrap();
        assert_eq!(a2.len(), 3);
        assert_eq!(a2[2].depth, RootVec(vec![1, 1]));
        assert_eq!(a2[2].word, vec![1, 2]);

        assert_eq!(minuscule_orbit(&diag("D4"), 1).unwrap().len(), 8);
        assert_eq!(minuscule_orbit(&diag("E6"), 1).unwrap().len(), 27);
        assert_eq!(minuscule_orbit(&diag("E7"), 7).unwrap().len(), 56);
        assert!(matches!(
            minuscule_orbit(&diag("D5"), 2),
            Err(Error::NotMinuscule { .. })
        ));
        assert!(minuscule_orbit(&diag("E8"), 8).is_err());
    }

    #[test]
    fn orbit_invariants() {
        for (name, nodes) in [
            ("A4", vec![1, 2, 3, 4]),
            ("D5", vec![1, 4, 5]),
            ("E6", vec![1, 6]),
        ] {
            let d = diag(name);
            for i in nodes {
                for g in minuscule_orbit(&d, i).unwrap() {
                    assert_eq!(g.word.len() as i64, height(&g.depth));
                    assert!(g.gamma.0.iter().all(|c| (-1..=1).contains(c)));
                    let back = WeightVec::fundamental(d.rank(), i).sub(&d.root_to_weight(&g.depth));
                    assert_eq!(back, g.gamma);
                    let chi = chi(&d, &g);
                    assert!(chi.0.iter().all(|&c| c <= 0));
                    let sum = delta_gamma(&d, &g)
                        .iter()
                        .fold(RootVec::zero(d.rank()), |acc, b| acc.add(b));
                    assert_eq!(chi, sum);
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        let a1 = diag("A1");
        let orbit = minuscule_orbit(&a1, 1).unwrap();
        assert_eq!(chi(&a1, &orbit[0]), RootVec(vec![0]));
        assert_eq!(chi(&a1, &orbit[1]), RootVec(vec![-1]));

        let a2 = diag("A2");
        let orbit = minuscule_orbit(&a2, 1).unwrap();
        assert_eq!(chi(&a2, &orbit[2]), RootVec(vec![-1, -2]));
    }

    #[test]
    fn root_counts_and_dimensions() {
        for (name, count) in [("A3", 6), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120)] {
            assert_eq!(positive_roots(&diag(name)).len(), count, "{name}");
        }
        let a2 = diag("A2");
        assert_eq!(weyl_dimension(&a2, &WeightVec(vec![1, 1])).unwrap(), 8);
        assert_eq!(weyl_dimension(&a2, &WeightVec(vec![3, 0])).unwrap(), 10);
        let e8 = diag("E8");
        assert_eq!(
            weyl_dimension(&e8, &WeightVec::fundamental(8, 8)).unwrap(),
            248
        );
        let e6 = diag("E6");
        assert_eq!(
            weyl_dimension(&e6, &WeightVec::fundamental(6, 1)).unwrap(),
            27
        );
    }

    #[test]
    fn minimal_words_for_a3() {
        let d = diag("A3");
        let orbit = minuscule_orbit(&d, 2).unwrap();
        let bottom = orbit.last().unwrap();
        let words = all_minimal_words(&d, bottom);
        assert_eq!(words.len(), 2);
        assert!(words.contains(&bottom.word));
    }
}
