//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the library except to convert the final answer for
//! comparison, so agreement is evidence rather than tautology.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use monomial_crystal::{DynkinDiagram, Monomial};
use num_bigint::{BigInt, BigUint};

/// Adjacency lists (1-based) written out from the Bourbaki pictures.
pub fn adjacency(name: &str) -> Vec<Vec<usize>> {
    let kind = &name[..1];
    let n: usize = name[1..].parse().unwrap();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match kind {
        "A" => edges.extend((1..n).map(|i| (i, i + 1))),
        "D" => {
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            edges.push((n - 2, n));
        }
        "E" => {
            edges.push((1, 3));
            edges.push((2, 4));
            edges.extend((3..n).map(|i| (i, i + 1)));
        }
        _ => panic!("unknown type {name}"),
    }
    let mut adj = vec![Vec::new(); n + 1];
    for (a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Parity class: distance from node 1, mod 2.
pub fn parity(adj: &[Vec<usize>], flip: bool) -> Vec<i64> {
    let mut dist = vec![-1i64; adj.len()];
    dist[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if dist[j] < 0 {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    dist.iter()
        .map(|&d| if d < 0 { 0 } else { (d + flip as i64) % 2 })
        .collect()
}

pub type Mono = BTreeMap<(usize, i64), i64>;

pub fn var(i: usize, k: i64) -> Mono {
    BTreeMap::from([((i, k), 1)])
}

pub fn mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = a.clone();
    for (&key, &e) in b {
        let v = out.entry(key).or_insert(0);
        *v += e;
        if *v == 0 {
            out.remove(&key);
        }
    }
    out
}

pub fn inv(a: &Mono) -> Mono {
    a.iter().map(|(&k, &e)| (k, -e)).collect()
}

pub fn z(adj: &[Vec<usize>], i: usize, k: i64) -> Mono {
    let mut out = mul(&var(i, k), &var(i, k + 2));
    for &j in &adj[i] {
        out = mul(&out, &inv(&var(j, k + 1)));
    }
    out
}

/// `(eps, phi, k_eps, k_phi)` straight from the partial-sum definition, scanning
/// every integer index in a padded window.
pub fn string_data(p: &Mono, i: usize) -> (i64, i64, Option<i64>, Option<i64>) {
    let ks: Vec<i64> = p.keys().filter(|(n, _)| *n == i).map(|&(_, k)| k).collect();
    let (Some(&lo), Some(&hi)) = (ks.iter().min(), ks.iter().max()) else {
        return (0, 0, None, None);
    };
    let a = |k: i64| p.get(&(i, k)).copied().unwrap_or(0);
    let mut eps = 0;
    let mut phi = 0;
    let mut k_eps = None;
    let mut k_phi = None;
    for k in lo - 2..=hi + 2 {
        let left: i64 = (lo - 2..=k).map(a).sum();
        let right: i64 = (k..=hi + 2).map(a).sum();
        if -left > eps {
            eps = -left;
        }
        if right > phi {
            phi = right;
        }
    }
    // smallest k attaining eps, largest k attaining phi
    if eps > 0 {
        k_eps = (lo - 2..=hi + 2).find(|&k| -(lo - 2..=k).map(a).sum::<i64>() == eps);
    }
    if phi > 0 {
        k_phi = (lo - 2..=hi + 2).rev().find(|&k| (k..=hi + 2).map(a).sum::<i64>() == phi);
    }
    (eps, phi, k_eps, k_phi)
}

pub fn e_op(adj: &[Vec<usize>], p: &Mono, i: usize) -> Option<Mono> {
    let (_, _, k, _) = string_data(p, i);
    k.map(|k| mul(p, &z(adj, i, k)))
}

pub fn f_op(adj: &[Vec<usize>], p: &Mono, i: usize) -> Option<Mono> {
    let (_, _, _, k) = string_data(p, i);
    k.map(|k| mul(p, &inv(&z(adj, i, k - 2))))
}

pub fn weight(rank: usize, p: &Mono) -> Vec<i64> {
    let mut w = vec![0; rank];
    for (&(i, _), &e) in p {
        w[i - 1] += e;
    }
    w
}

/// Closure under all raising and lowering operators.
pub fn closure(adj: &[Vec<usize>], seeds: &[Mono]) -> BTreeSet<Mono> {
    let rank = adj.len() - 1;
    let mut seen: BTreeSet<Mono> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Mono> = seeds.iter().cloned().collect();
    while let Some(p) = queue.pop_front() {
        for i in 1..=rank {
            for q in [e_op(adj, &p, i), f_op(adj, &p, i)].into_iter().flatten() {
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen
}

/// All products of one element from each `B(varpi_i, c)`.
pub fn product(adj: &[Vec<usize>], params: &[(usize, i64)]) -> BTreeSet<Mono> {
    let mut out: BTreeSet<Mono> = BTreeSet::from([Mono::new()]);
    for &(i, c) in params {
        let factor = closure(adj, &[var(i, c)]);
        out = out
            .iter()
            .flat_map(|p| factor.iter().map(move |q| mul(p, q)))
            .collect();
    }
    out
}

pub fn to_lib(p: &Mono) -> Monomial {
    Monomial::from_exponents(p.iter().map(|(&(i, k), &e)| (i, k, e)))
}

pub fn from_lib(p: &Monomial) -> Mono {
    p.iter().map(|(i, k, e)| ((i, k), e)).collect()
}

pub fn lib_diagram(name: &str, flip: bool) -> DynkinDiagram {
    DynkinDiagram::from_name(name).unwrap().with_parity_flip(flip)
}

/// Cartan matrix from adjacency.
pub fn cartan(adj: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let n = adj.len() - 1;
    let mut c = vec![vec![0; n]; n];
    for i in 1..=n {
        c[i - 1][i - 1] = 2;
        for &j in &adj[i] {
            c[i - 1][j - 1] = -1;
        }
    }
    c
}

/// Positive roots (root coordinates) as the Weyl-group orbit of the simple
/// roots, intersected with the positive cone.
pub fn positive_roots(adj: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let n = adj.len() - 1;
    let c = cartan(adj);
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(b) = queue.pop_front() {
        for p in 0..n {
            // s_p(b) = b - <b, alpha_p^vee> alpha_p
            let pairing: i64 = (0..n).map(|j| b[j] * c[j][p]).sum();
            let mut r = b.clone();
            r[p] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

/// `dim V(lambda) = prod_{beta > 0} (lambda + rho, beta) / (rho, beta)`.
pub fn weyl_dim(name: &str, lambda: &[i64]) -> BigUint {
    let adj = adjacency(name);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for beta in positive_roots(&adj) {
        let h: i64 = beta.iter().sum();
        let lb: i64 = beta.iter().zip(lambda).map(|(b, l)| b * l).sum();
        num *= BigUint::from((lb + h) as u64);
        den *= BigUint::from(h as u64);
    }
    assert_eq!(&num % &den, BigUint::from(0u32));
    num / den
}

/// Coefficients (lowest degree first) of `prod (u - r)`.
pub fn poly_from_roots(roots: &[i64]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::from(1)];
    for &r in roots {
        let mut next = vec![BigInt::from(0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `P(u + 1)` by Taylor shift: coefficients of `sum c_k (u+1)^k`.
pub fn poly_shift_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); p.len()];
    for (k, c) in p.iter().enumerate() {
        // binomial expansion of (u+1)^k
        let mut binom = BigInt::from(1);
        for j in 0..=k {
            out[j] += c * &binom;
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    out
}

/// All weakly increasing index tuples of length `len` over `0..n`.
pub fn multichoose(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, len, &mut Vec::new(), &mut out);
    out
}

/// Parity-valid parameter lists with `1 <= |R| <= max_total`, values in `lo..=hi`.
pub fn param_lists(name: &str, max_total: usize, lo: i64, hi: i64) -> Vec<Vec<(usize, i64)>> {
    let adj = adjacency(name);
    let par = parity(&adj, false);
    let slots: Vec<(usize, i64)> = (1..adj.len())
        .flat_map(|i| {
            let want = par[i];
            (lo..=hi).filter(move |k| k.rem_euclid(2) == want).map(move |k| (i, k))
        })
        .collect();
    let mut out = Vec::new();
    for len in 1..=max_total {
        for idx in multichoose(slots.len(), len) {
            out.push(idx.iter().map(|&s| slots[s]).collect());
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
