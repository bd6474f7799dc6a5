//! Nakajima monomials, integer multisets and the Kashiwara operators.
//!
//! A [`Monomial`] is a Laurent monomial in the variables `y(i,k)`. Monomials
//! are stored sparsely with zero exponents dropped, so structural equality is
//! equality of monomials. Parity of `(i,k)` is not enforced by the type:
//! translated fundamental crystals (used by the regularity conditions) live
//! off the parity lattice. Operations that need valid parity check it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{DynkinDiagram, Node, WeightVec};
use crate::error::{Error, Result};

/// A finite multiset of integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct Multiset {
    counts: BTreeMap<i64, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (i64, usize)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (v, c) in iter {
            out.insert_n(v, c);
        }
        out
    }

    /// Multiplicity of `k` (zero when absent).
    pub fn count(&self, k: i64) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn insert(&mut self, k: i64) {
        self.insert_n(k, 1);
    }

    pub fn insert_n(&mut self, k: i64, n: usize) {
        if n > 0 {
            *self.counts.entry(k).or_insert(0) += n;
        }
    }

    /// Removes one copy of `k`; returns false if absent.
    pub fn remove(&mut self, k: i64) -> bool {
        match self.counts.get_mut(&k) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&k);
                true
            }
            None => false,
        }
    }

    /// Distinct values with multiplicities, ascending.
    pub fn counts(&self) -> impl DoubleEndedIterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// All values with repetition, ascending.
    pub fn values(&self) -> Vec<i64> {
        self.counts
            .iter()
            .flat_map(|(&k, &c)| std::iter::repeat_n(k, c))
            .collect()
    }

    pub fn min(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    pub fn shifted(&self, by: i64) -> Multiset {
        Multiset {
            counts: self.counts.iter().map(|(&k, &c)| (k + by, c)).collect(),
        }
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Multiset) {
        for (k, c) in other.counts() {
            self.insert_n(k, c);
        }
    }

    /// `self` repeated `n` times.
    pub fn power(&self, n: usize) -> Multiset {
        Multiset {
            counts: if n == 0 {
                BTreeMap::new()
            } else {
                self.counts.iter().map(|(&k, &c)| (k, c * n)).collect()
            },
        }
    }

    pub fn is_subset_of(&self, other: &Multiset) -> bool {
        self.counts.iter().all(|(&k, &c)| other.count(k) >= c)
    }

    /// Strict multiset difference; `None` unless `other` is contained in `self`.
    pub fn checked_sub(&self, other: &Multiset) -> Option<Multiset> {
        let mut out = self.clone();
        for (k, c) in other.counts() {
            let have = out.count(k);
            if have < c {
                return None;
            }
            if have == c {
                out.counts.remove(&k);
            } else {
                out.counts.insert(k, have - c);
            }
        }
        Some(out)
    }

    /// Number of elements `<= k`.
    pub fn count_at_most(&self, k: i64) -> usize {
        self.counts.range(..=k).map(|(_, &c)| c).sum()
    }
}

impl From<Vec<i64>> for Multiset {
    fn from(values: Vec<i64>) -> Self {
        values.into_iter().collect()
    }
}

impl From<Multiset> for Vec<i64> {
    fn from(m: Multiset) -> Self {
        m.values()
    }
}

impl FromIterator<i64> for Multiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut out = Multiset::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (k, c)) in self.counts().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            if c == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{c}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A collection `(S_i)` of multisets indexed by nodes. Empty multisets are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultisetTuple {
    parts: BTreeMap<Node, Multiset>,
}

impl MultisetTuple {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I, V>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Node, V)>,
        V: IntoIterator<Item = i64>,
    {
        let mut out = Self::new();
        for (node, values) in pairs {
            for v in values {
                out.insert(node, v);
            }
        }
        out
    }

    pub fn get(&self, node: Node) -> Option<&Multiset> {
        self.parts.get(&node)
    }

    /// `S_i(k)`.
    pub fn count(&self, node: Node, k: i64) -> usize {
        self.parts.get(&node).map_or(0, |m| m.count(k))
    }

    /// `|S_i|`.
    pub fn size_at(&self, node: Node) -> usize {
        self.parts.get(&node).map_or(0, Multiset::len)
    }

    pub fn total_len(&self) -> usize {
        self.parts.values().map(Multiset::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn insert(&mut self, node: Node, k: i64) {
        self.insert_n(node, k, 1);
    }

    pub fn insert_n(&mut self, node: Node, k: i64, n: usize) {
        if n > 0 {
            self.parts.entry(node).or_default().insert_n(k, n);
        }
    }

    pub fn set(&mut self, node: Node, m: Multiset) {
        if m.is_empty() {
            self.parts.remove(&node);
        } else {
            self.parts.insert(node, m);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Node, &Multiset)> {
        self.parts.iter().map(|(&n, m)| (n, m))
    }

    /// `(node, value, multiplicity)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (Node, i64, usize)> + '_ {
        self.parts
            .iter()
            .flat_map(|(&n, m)| m.counts().map(move |(k, c)| (n, k, c)))
    }

    /// The multiset at `node`, or an empty one.
    pub fn at(&self, node: Node) -> Multiset {
        self.parts.get(&node).cloned().unwrap_or_default()
    }

    pub fn shifted(&self, by: i64) -> MultisetTuple {
        MultisetTuple {
            parts: self
                .parts
                .iter()
                .map(|(&n, m)| (n, m.shifted(by)))
                .collect(),
        }
    }

    pub fn union(&self, other: &MultisetTuple) -> MultisetTuple {
        let mut out = self.clone();
        for (n, m) in other.iter() {
            out.parts.entry(n).or_default().union_with(m);
        }
        out
    }

    /// Smallest and largest value over all nodes.
    pub fn value_range(&self) -> Option<(i64, i64)> {
        let lo = self.parts.values().filter_map(Multiset::min).min()?;
        let hi = self.parts.values().filter_map(Multiset::max).max()?;
        Some((lo, hi))
    }
}

impl fmt::Display for MultisetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (idx, (n, m)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{n}:{m}")?;
        }
        Ok(())
    }
}

/// Parses `"node:v1,v2,...;node:..."`, and also the displayed form with braces,
/// `v^m` multiplicities and `()` for the empty tuple. Whitespace is ignored; empty value lists are allowed.
impl FromStr for MultisetTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = MultisetTuple::new();
        if s.trim() == "()" {
            return Ok(out);
        }
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (node, values) = part
                .split_once(':')
                .ok_or_else(|| Error::Invalid(format!("expected `node:values` in `{part}`")))?;
            let node: Node = node
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad node `{node}`")))?;
            let values = values.trim();
            let values = values
                .strip_prefix('{')
                .and_then(|v| v.strip_suffix('}'))
                .unwrap_or(values);
            for v in values.split(',') {
                let v = v.trim();
                if v.is_empty() {
                    continue;
                }
                let bad = || Error::Invalid(format!("bad value `{v}`"));
                let (v, mult) = match v.split_once('^') {
                    Some((v, m)) => (v.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                    None => (v, 1),
                };
                out.insert_n(node, v.parse().map_err(|_| bad())?, mult);
            }
        }
        Ok(out)
    }
}

/// A parity-valid set of parameters `R` with weight `lambda_i = |R_i|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSet {
    r: MultisetTuple,
    lambda: WeightVec,
}

impl ParamSet {
    pub fn new(d: &DynkinDiagram, r: MultisetTuple) -> Result<Self> {
        for (node, k, _) in r.entries() {
            d.check_node(node)?;
            if !d.same_parity(node, k) {
                return Err(Error::ParityViolation { node, k });
            }
        }
        let lambda = WeightVec(d.nodes().map(|i| r.size_at(i) as i64).collect());
        Ok(Self { r, lambda })
    }

    pub fn from_pairs(d: &DynkinDiagram, pairs: &[(Node, &[i64])]) -> Result<Self> {
        Self::new(
            d,
            MultisetTuple::from_pairs(pairs.iter().map(|(n, v)| (*n, v.iter().copied()))),
        )
    }

    pub fn multisets(&self) -> &MultisetTuple {
        &self.r
    }

    pub fn lambda(&self) -> &WeightVec {
        &self.lambda
    }

    /// All parameters `(node, c)` with repetition, sorted by `(c, node)`.
    pub fn parameters(&self) -> Vec<(Node, i64)> {
        let mut out: Vec<(Node, i64)> = self
            .r
            .entries()
            .flat_map(|(n, k, c)| std::iter::repeat_n((n, k), c))
            .collect();
        out.sort_by_key(|&(n, k)| (k, n));
        out
    }

    pub fn total(&self) -> usize {
        self.r.total_len()
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.r.fmt(f)
    }
}

/// A Laurent monomial `prod y(i,k)^a(i,k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(Node, i64, i64)>", into = "Vec<(Node, i64, i64)>")]
pub struct Monomial {
    exps: BTreeMap<(Node, i64), i64>,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// The variable `y(i,k)`.
    pub fn var(node: Node, k: i64) -> Self {
        Self::from_exponents([(node, k, 1)])
    }

    pub fn from_exponents<I: IntoIterator<Item = (Node, i64, i64)>>(iter: I) -> Self {
        let mut out = Self::one();
        for (n, k, e) in iter {
            out.add_exponent(n, k, e);
        }
        out
    }

    fn add_exponent(&mut self, node: Node, k: i64, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exps.entry((node, k)).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&(node, k));
        }
    }

    pub fn exponent(&self, node: Node, k: i64) -> i64 {
        self.exps.get(&(node, k)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `(node, k, exponent)` triples in `(node, k)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Node, i64, i64)> + '_ {
        self.exps.iter().map(|(&(n, k), &e)| (n, k, e))
    }

    /// Exponents at one node, ascending in `k`.
    pub fn row(&self, node: Node) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.exps
            .range((node, i64::MIN)..=(node, i64::MAX))
            .map(|(&(_, k), &e)| (k, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &Monomial) {
        for (n, k, e) in other.iter() {
            self.add_exponent(n, k, e);
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(&key, &e)| (key, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(&key, &e)| (key, e * n)).collect(),
        }
    }

    /// Translates every variable `y(i,k)` to `y(i,k+by)`.
    pub fn shifted(&self, by: i64) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|(&(n, k), &e)| ((n, k + by), e))
                .collect(),
        }
    }

    pub fn is_parity_valid(&self, d: &DynkinDiagram) -> bool {
        self.iter()
            .all(|(n, k, _)| n >= 1 && n <= d.rank() && d.same_parity(n, k))
    }

    /// Smallest and largest `k` appearing.
    pub fn k_range(&self) -> Option<(i64, i64)> {
        let lo = self.exps.keys().map(|&(_, k)| k).min()?;
        let hi = self.exps.keys().map(|&(_, k)| k).max()?;
        Some((lo, hi))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }
}

impl From<Vec<(Node, i64, i64)>> for Monomial {
    fn from(v: Vec<(Node, i64, i64)>) -> Self {
        Monomial::from_exponents(v)
    }
}

impl From<Monomial> for Vec<(Node, i64, i64)> {
    fn from(m: Monomial) -> Self {
        m.iter().collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (idx, (n, k, e)) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "y({n},{k})")?;
            } else {
                write!(f, "y({n},{k})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses the text rendering produced by `Display`.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let bad = || Error::Invalid(format!("cannot parse monomial `{s}`"));
        let mut out = Monomial::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix("y(").ok_or_else(bad)?;
            let (inside, tail) = rest.split_once(')').ok_or_else(bad)?;
            let (n, k) = inside.split_once(',').ok_or_else(bad)?;
            let n: Node = n.trim().parse().map_err(|_| bad())?;
            let k: i64 = k.trim().parse().map_err(|_| bad())?;
            let e: i64 = match tail.strip_prefix('^') {
                Some(e) => e.trim().parse().map_err(|_| bad())?,
                None if tail.is_empty() => 1,
                None => return Err(bad()),
            };
            out.add_exponent(n, k, e);
        }
        Ok(out)
    }
}

/// `z(i,k) = y(i,k) y(i,k+2) / prod_{j~i} y(j,k+1)` without a parity check.
pub fn z_unchecked(d: &DynkinDiagram, node: Node, k: i64) -> Monomial {
    let mut out = Monomial::one();
    out.add_exponent(node, k, 1);
    out.add_exponent(node, k + 2, 1);
    for &j in d.neighbors(node) {
        out.add_exponent(j, k + 1, -1);
    }
    out
}

/// `z(i,k)`, requiring `k` to have the parity of `i`.
pub fn z_factor(d: &DynkinDiagram, node: Node, k: i64) -> Result<Monomial> {
    d.check_node(node)?;
    if !d.same_parity(node, k) {
        return Err(Error::ParityViolation { node, k });
    }
    Ok(z_unchecked(d, node, k))
}

/// `y_S = prod_{i, k in S_i} y(i,k)`.
pub fn y_of(s: &MultisetTuple) -> Monomial {
    Monomial::from_exponents(s.entries().map(|(n, k, c)| (n, k, c as i64)))
}

/// `z_S = prod_{i, k in S_i} z(i,k)`.
pub fn z_of(d: &DynkinDiagram, s: &MultisetTuple) -> Monomial {
    let mut out = Monomial::one();
    for (n, k, c) in s.entries() {
        out.mul_assign(&z_unchecked(d, n, k).pow(c as i64));
    }
    out
}

/// `y_R z_S^{-1}`.
pub fn monomial_from_data(d: &DynkinDiagram, r: &MultisetTuple, s: &MultisetTuple) -> Monomial {
    y_of(r).mul(&z_of(d, s).inverse())
}

/// `wt(p) = sum a(i,k) varpi_i`.
pub fn weight(d: &DynkinDiagram, p: &Monomial) -> WeightVec {
    let mut w = vec![0i64; d.rank()];
    for (n, _, e) in p.iter() {
        w[n - 1] += e;
    }
    WeightVec(w)
}

/// The string data of a monomial at one node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: i64,
    pub phi: i64,
    /// Smallest `k` with `eps^k = eps`; present when `eps > 0`.
    pub k_eps: Option<i64>,
    /// Largest `k` with `phi^k = phi`; present when `phi > 0`.
    pub k_phi: Option<i64>,
}

/// Computes `eps_i`, `phi_i` and the indices at which they are attained.
///
/// Partial sums only change at support points, so scanning the support (with the
/// empty sum 0 as the starting maximum) covers the whole `+-2` window.
pub fn eps_phi(p: &Monomial, node: Node) -> Signature {
    let mut eps = 0;
    let mut k_eps = None;
    let mut prefix = 0;
    for (k, a) in p.row(node) {
        prefix += a;
        if -prefix > eps {
            eps = -prefix;
            k_eps = Some(k);
        }
    }
    let mut phi = 0;
    let mut k_phi = None;
    let mut suffix = 0;
    for (k, a) in p.row(node).rev() {
        suffix += a;
        if suffix > phi {
            phi = suffix;
            k_phi = Some(k);
        }
    }
    Signature {
        eps,
        phi,
        k_eps,
        k_phi,
    }
}

/// Kashiwara raising operator; `None` stands for `0`.
pub fn e_tilde(d: &DynkinDiagram, p: &Monomial, node: Node) -> Option<Monomial> {
    let sig = eps_phi(p, node);
    sig.k_eps.map(|k| p.mul(&z_unchecked(d, node, k)))
}

/// Kashiwara lowering operator; `None` stands for `0`.
pub fn f_tilde(d: &DynkinDiagram, p: &Monomial, node: Node) -> Option<Monomial> {
    let sig = eps_phi(p, node);
    sig.k_phi
        .map(|k| p.mul(&z_unchecked(d, node, k - 2).inverse()))
}

/// Whether every `e_i` kills `p`.
pub fn is_highest_weight_monomial(d: &DynkinDiagram, p: &Monomial) -> bool {
    d.nodes().all(|i| eps_phi(p, i).eps == 0)
}

/// Recovers the unique `S` with `p = y_R z_S^{-1}`.
pub fn decompose(d: &DynkinDiagram, r: &MultisetTuple, p: &Monomial) -> Result<MultisetTuple> {
    for (n, _, _) in p.iter() {
        if n == 0 || n > d.rank() {
            return Err(Error::NotDecomposable(format!("node {n} outside {d}")));
        }
    }
    let target = y_of(r).mul(&p.inverse());
    let Some((lo, hi)) = target.k_range() else {
        return Ok(MultisetTuple::new());
    };
    let mut s: BTreeMap<(Node, i64), i64> = BTreeMap::new();
    let get = |s: &BTreeMap<(Node, i64), i64>, n: Node, k: i64| s.get(&(n, k)).copied().unwrap_or(0);
    for k in lo..=hi - 2 {
        for i in d.nodes() {
            let mut v = target.exponent(i, k) - get(&s, i, k - 2);
            for &j in d.neighbors(i) {
                v += get(&s, j, k - 1);
            }
            if v < 0 {
                return Err(Error::NotDecomposable(format!(
                    "{p}: S_{i}({k}) would be {v}"
                )));
            }
            if v > 0 {
                s.insert((i, k), v);
            }
        }
    }
    let mut out = MultisetTuple::new();
    for (&(n, k), &c) in &s {
        out.insert_n(n, k, c as usize);
    }
    if z_of(d, &out) != target {
        return Err(Error::NotDecomposable(format!(
            "{p}: y_R p^-1 is not a product of z factors"
        )));
    }
    Ok(out)
}

/// `T_i = (R_i ∪ ⋃_{j~i}(S_j + 1)) \ (S_i + 2)`.
pub fn t_multisets(
    d: &DynkinDiagram,
    r: &MultisetTuple,
    s: &MultisetTuple,
) -> Result<MultisetTuple> {
    let mut out = MultisetTuple::new();
    for i in d.nodes() {
        let mut pool = r.at(i);
        for &j in d.neighbors(i) {
            pool.union_with(&s.at(j).shifted(1));
        }
        let t = pool
            .checked_sub(&s.at(i).shifted(2))
            .ok_or(Error::ContainmentViolation { node: i })?;
        out.set(i, t);
    }
    Ok(out)
}

/// Counting criterion: `#{l in S_i : l <= k} <= #{l in T_i : l <= k}` for all `i, k`.
pub fn is_highest_weight(s: &MultisetTuple, t: &MultisetTuple) -> bool {
    s.iter().all(|(i, si)| {
        let ti = t.at(i);
        si.counts()
            .all(|(k, _)| si.count_at_most(k) <= ti.count_at_most(k))
    })
}
