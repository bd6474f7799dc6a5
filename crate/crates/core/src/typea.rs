//! The type A flag model `F_n(R)` of `B(N varpi_1, R)`.
//!
//! A flag `V_0 ⊆ V_1 ⊆ ... ⊆ V_n = R` is stored as a table `value -> (m_0 <= ... <= m_n)`
//! of multiplicities, with `m_0 = 0` and `m_n` the multiplicity of the value in `R`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{DynkinDiagram, Node, WeightVec};
use crate::crystal::{fundamental, product_set, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::monomial::{
    decompose, e_tilde, f_tilde, monomial_from_data, weight, Monomial, Multiset, MultisetTuple,
    ParamSet,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flag {
    n: usize,
    table: BTreeMap<i64, Vec<usize>>,
}

impl Flag {
    /// The flag `(∅, ..., ∅, R)`.
    pub fn bottom(n: usize, r: &Multiset) -> Flag {
        let table = r
            .counts()
            .map(|(c, t)| {
                let mut row = vec![0; n + 1];
                row[n] = t;
                (c, row)
            })
            .collect();
        Flag { n, table }
    }

    /// The flag `(∅, R, ..., R)`.
    pub fn top(n: usize, r: &Multiset) -> Flag {
        let table = r
            .counts()
            .map(|(c, t)| {
                let mut row = vec![t; n + 1];
                row[0] = 0;
                (c, row)
            })
            .collect();
        Flag { n, table }
    }

    /// Builds a flag from its steps `V_1, ..., V_{n-1}` (checking containments).
    pub fn from_steps(r: &Multiset, steps: &[Multiset]) -> Result<Flag> {
        let n = steps.len() + 1;
        let mut table = BTreeMap::new();
        for (c, t) in r.counts() {
            let mut row = vec![0; n + 1];
            for (idx, v) in steps.iter().enumerate() {
                row[idx + 1] = v.count(c);
            }
            row[n] = t;
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Invalid(format!("steps are not nested at value {c}")));
            }
            table.insert(c, row);
        }
        for v in steps {
            if !v.is_subset_of(r) {
                return Err(Error::Invalid(format!("step {v} is not contained in {r}")));
            }
        }
        Ok(Flag { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `V_i` as a multiset.
    pub fn step(&self, i: usize) -> Multiset {
        Multiset::from_counts(self.table.iter().map(|(&c, row)| (c, row[i])))
    }

    pub fn steps(&self) -> Vec<Multiset> {
        (0..=self.n).map(|i| self.step(i)).collect()
    }

    fn dim(&self, i: usize) -> usize {
        self.table.values().map(|row| row[i]).sum()
    }

    /// Weight in fundamental-weight coordinates of `sl_n`.
    pub fn weight(&self) -> WeightVec {
        let e: Vec<i64> = (1..=self.n)
            .map(|i| self.dim(i) as i64 - self.dim(i - 1) as i64)
            .collect();
        WeightVec((0..self.n - 1).map(|j| e[j] - e[j + 1]).collect())
    }

    /// The reduced `i`-signature as `(value, sign)` pairs, `-1` before `+1`.
    fn reduced_signature(&self, i: usize) -> Vec<(i64, i8)> {
        let mut stack: Vec<(i64, i8)> = Vec::new();
        for (&c, row) in &self.table {
            for _ in 0..row[i + 1] - row[i] {
                if matches!(stack.last(), Some(&(_, 1))) {
                    stack.pop();
                } else {
                    stack.push((c, -1));
                }
            }
            for _ in 0..row[i] - row[i - 1] {
                stack.push((c, 1));
            }
        }
        stack
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps().iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" ⊆ "))
    }
}

fn check_step(f: &Flag, i: usize) -> Result<()> {
    if i == 0 || i >= f.n {
        return Err(Error::InvalidNode {
            node: i,
            rank: f.n.saturating_sub(1),
        });
    }
    Ok(())
}

/// Raising operator: adds the value of the rightmost unmatched minus to `V_i`.
pub fn flag_e(f: &Flag, i: usize) -> Result<Option<Flag>> {
    check_step(f, i)?;
    let sig = f.reduced_signature(i);
    Ok(sig
        .iter()
        .rev()
        .find(|&&(_, s)| s == -1)
        .map(|&(c, _)| {
            let mut g = f.clone();
            g.table.get_mut(&c).unwrap()[i] += 1;
            g
        }))
}

/// Lowering operator: removes the value of the leftmost unmatched plus from `V_i`.
pub fn flag_f(f: &Flag, i: usize) -> Result<Option<Flag>> {
    check_step(f, i)?;
    let sig = f.reduced_signature(i);
    Ok(sig.iter().find(|&&(_, s)| s == 1).map(|&(c, _)| {
        let mut g = f.clone();
        g.table.get_mut(&c).unwrap()[i] -= 1;
        g
    }))
}

/// All flags of length `n` in `R`, in canonical order.
pub fn all_flags(n: usize, r: &Multiset) -> Vec<Flag> {
    fn rows(n: usize, t: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut row = vec![0; n + 1];
        row[n] = t;
        fill(&mut row, 1, n, t, &mut out);
        out
    }
    fn fill(row: &mut Vec<usize>, idx: usize, n: usize, t: usize, out: &mut Vec<Vec<usize>>) {
        if idx == n {
            out.push(row.clone());
            return;
        }
        for v in row[idx - 1]..=t {
            row[idx] = v;
            fill(row, idx + 1, n, t, out);
        }
    }
    let mut flags = vec![Flag {
        n,
        table: BTreeMap::new(),
    }];
    for (c, t) in r.counts() {
        let options = rows(n, t);
        flags = flags
            .into_iter()
            .flat_map(|f| {
                options.iter().map(move |row| {
                    let mut g = f.clone();
                    g.table.insert(c, row.clone());
                    g
                })
            })
            .collect();
    }
    flags.sort();
    flags
}

/// The diagram `A_{n-1}` whose node 1 has the parity of the values of `R`.
pub fn flag_diagram(n: usize, r: &Multiset) -> Result<DynkinDiagram> {
    if n < 2 {
        return Err(Error::Invalid(format!("flags need n >= 2, got {n}")));
    }
    let d = DynkinDiagram::from_name(&format!("A{}", n - 1))?;
    let odd = r.min().is_some_and(|c| c.rem_euclid(2) == 1);
    Ok(d.with_parity_flip(odd))
}

/// The `S` data of a flag: `S_i = (R \ V_i) - (i + 1)`.
pub fn flag_to_s(f: &Flag, r: &Multiset) -> MultisetTuple {
    let mut s = MultisetTuple::new();
    for i in 1..f.n {
        let rest = r.checked_sub(&f.step(i)).expect("V_i ⊆ R");
        s.set(i, rest.shifted(-(i as i64 + 1)));
    }
    s
}

/// `y_R z_S^{-1}` with `R` placed at node 1.
pub fn flag_to_monomial(d: &DynkinDiagram, f: &Flag, r: &Multiset) -> Monomial {
    let mut rt = MultisetTuple::new();
    rt.set(1, r.clone());
    monomial_from_data(d, &rt, &flag_to_s(f, r))
}

/// Summary of [`verify_flag_isomorphism`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagIsoReport {
    pub flags: usize,
    pub crystal_size: usize,
    /// `prod C(t + n - 1, n - 1)` over the multiplicities `t` of `R`.
    pub expected_size: u128,
    pub bijective: bool,
    pub intertwining: bool,
    pub weights_match: bool,
}

impl FlagIsoReport {
    pub fn holds(&self) -> bool {
        self.bijective
            && self.intertwining
            && self.weights_match
            && self.flags == self.crystal_size
            && self.flags as u128 == self.expected_size
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

pub fn verify_flag_isomorphism(n: usize, r: &Multiset) -> Result<FlagIsoReport> {
    let d = flag_diagram(n, r)?;
    let mut rt = MultisetTuple::new();
    rt.set(1, r.clone());
    let params = ParamSet::new(&d, rt)?;
    let crystal = product_set(&d, &params, DEFAULT_CAP)?;
    let flags = all_flags(n, r);
    let images: BTreeSet<Monomial> = flags.iter().map(|f| flag_to_monomial(&d, f, r)).collect();
    let bijective = images.len() == flags.len() && images == crystal;

    let mut intertwining = true;
    let mut weights_match = true;
    for f in &flags {
        let p = flag_to_monomial(&d, f, r);
        if weight(&d, &p) != f.weight() {
            weights_match = false;
        }
        for i in 1..n {
            let fe = flag_e(f, i)?.map(|g| flag_to_monomial(&d, &g, r));
            let ff = flag_f(f, i)?.map(|g| flag_to_monomial(&d, &g, r));
            if fe != e_tilde(&d, &p, i) || ff != f_tilde(&d, &p, i) {
                intertwining = false;
            }
        }
    }
    let expected_size = r
        .counts()
        .map(|(_, t)| binomial((t + n - 1) as u128, (n - 1) as u128))
        .product();
    Ok(FlagIsoReport {
        flags: flags.len(),
        crystal_size: crystal.len(),
        expected_size,
        bijective,
        intertwining,
        weights_match,
    })
}

/// The monomial of `v_{a_1} ∧ ... ∧ v_{a_i}` in `B(varpi_i, 0)` for `sl_n`.
pub fn column_monomial(n: usize, a: &[Node]) -> Monomial {
    let i = a.len() as i64;
    let mut out = Monomial::one();
    for (r, &ar) in a.iter().enumerate() {
        let k = -i - ar as i64 + 2 * (r as i64 + 1);
        if ar < n {
            out.mul_assign(&Monomial::var(ar, k));
        }
        if ar > 1 {
            out.mul_assign(&Monomial::var(ar - 1, k - 1).inverse());
        }
    }
    out
}

fn increasing_subsets(n: usize, i: usize) -> Vec<Vec<Node>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<Node>, out: &mut Vec<Vec<Node>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..=n {
            cur.push(a);
            go(a + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, i, &mut Vec::new(), &mut out);
    out
}

/// Checks `B(varpi_i, 0) ⊆ B(varpi_1, -i+1) ... B(varpi_1, i-1)` and the column formula.
pub fn verify_column_embedding(n: usize, i: usize) -> Result<bool> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::Invalid(format!("need 1 <= i < n, got n={n}, i={i}")));
    }
    let d = DynkinDiagram::from_name(&format!("A{}", n - 1))?.with_parity_flip(i % 2 == 0);
    let column = fundamental(&d, i, 0)?;
    let values: Multiset = (0..i as i64).map(|r| 2 * r - i as i64 + 1).collect();
    let mut rt = MultisetTuple::new();
    rt.set(1, values);
    let product = product_set(&d, &ParamSet::new(&d, rt)?, DEFAULT_CAP)?;
    if !column.elements().iter().all(|p| product.contains(p)) {
        return Ok(false);
    }
    let formula: BTreeSet<Monomial> = increasing_subsets(n, i)
        .iter()
        .map(|a| column_monomial(n, a))
        .collect();
    let generated: BTreeSet<Monomial> = column.elements().iter().cloned().collect();
    Ok(formula == generated)
}

/// Text picture of type A data: rows are indices `k` (top is largest), columns
/// are nodes; `o` marks points of `R` (with multiplicity) and numbers give `S_i(k)`.
pub fn render_diagram(d: &DynkinDiagram, r: &MultisetTuple, s: &MultisetTuple) -> String {
    let range = match (r.value_range(), s.value_range()) {
        (Some(a), Some(b)) => Some((a.0.min(b.0), a.1.max(b.1))),
        (a, b) => a.or(b),
    };
    let Some((lo, hi)) = range else {
        return String::new();
    };
    let width = 4;
    let mut out = format!("{:>4} |", "k");
    for i in d.nodes() {
        out.push_str(&format!("{i:>width$}"));
    }
    out.push('\n');
    for k in (lo..=hi).rev() {
        out.push_str(&format!("{k:>4} |"));
        for i in d.nodes() {
            let rc = r.count(i, k);
            let sc = s.count(i, k);
            let cell = match (rc, sc) {
                (0, 0) => ".".to_string(),
                (0, c) => c.to_string(),
                (1, 0) => "o".to_string(),
                (m, 0) => format!("o{m}"),
                (m, c) => format!("o{m}/{c}"),
            };
            out.push_str(&format!("{cell:>width$}"));
        }
        out.push('\n');
    }
    out
}

/// `S` data of each flag together with the monomial, for reporting.
pub fn flag_table(n: usize, r: &Multiset) -> Result<Vec<(Flag, MultisetTuple, Monomial)>> {
    let d = flag_diagram(n, r)?;
    let mut rt = MultisetTuple::new();
    rt.set(1, r.clone());
    all_flags(n, r)
        .into_iter()
        .map(|f| {
            let p = flag_to_monomial(&d, &f, r);
            let s = decompose(&d, &rt, &p)?;
            Ok((f, s, p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(v: &[i64]) -> Multiset {
        v.iter().copied().collect()
    }

    #[test]
    fn sl2_operators() {
        let r = ms(&[0, 2]);
        let bottom = Flag::bottom(2, &r);
        let up = flag_e(&bottom, 1).unwrap().unwrap();
        assert_eq!(up.step(1), ms(&[2]));
        assert_eq!(flag_f(&up, 1).unwrap(), Some(bottom.clone()));
        assert_eq!(flag_e(&Flag::top(2, &r), 1).unwrap(), None);
        assert!(flag_e(&bottom, 2).is_err());
    }

    #[test]
    fn flag_monomials() {
        let r = ms(&[0, 2]);
        let d = flag_diagram(2, &r).unwrap();
        assert_eq!(
            flag_to_monomial(&d, &Flag::top(2, &r), &r),
            Monomial::var(1, 0).mul(&Monomial::var(1, 2))
        );
        let f = Flag::from_steps(&r, &[ms(&[2])]).unwrap();
        assert_eq!(flag_to_s(&f, &r), "1:-2".parse().unwrap());
        assert!(Flag::from_steps(&r, &[ms(&[4])]).is_err());

        // V_j empty below step i = 3 and {c} from there on: S(c,i) = ({c-2}, {c-3}).
        let c = 2;
        let r = ms(&[c]);
        let d = flag_diagram(4, &r).unwrap();
        let f = Flag::from_steps(&r, &[ms(&[]), ms(&[]), ms(&[c])]).unwrap();
        let s: MultisetTuple = format!("1:{}; 2:{}", c - 2, c - 3).parse().unwrap();
        assert_eq!(flag_to_s(&f, &r), s);
        let mut rt = MultisetTuple::new();
        rt.set(1, r.clone());
        assert_eq!(flag_to_monomial(&d, &f, &r), monomial_from_data(&d, &rt, &s));
    }

    #[test]
    fn small_isomorphisms() {
        let report = verify_flag_isomorphism(2, &ms(&[0, 2])).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.flags, 4);
        let report = verify_flag_isomorphism(3, &ms(&[0, 0, 0])).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.flags, 10);
    }

    #[test]
    fn columns() {
        assert_eq!(column_monomial(4, &[1, 2]), Monomial::var(2, 0));
        assert_eq!(
            column_monomial(3, &[1, 3]),
            Monomial::var(1, -1).mul(&Monomial::var(2, -2).inverse())
        );
        for n in 2..=4 {
            for i in 1..n {
                assert!(verify_column_embedding(n, i).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn rendering() {
        let d = DynkinDiagram::from_name("A2").unwrap();
        let pic = render_diagram(&d, &"1:0".parse().unwrap(), &"1:-2; 2:-3".parse().unwrap());
        assert!(pic.contains("o"));
        assert_eq!(pic.lines().count(), 5);
    }
}
