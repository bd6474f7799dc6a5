//! Cross-check suites. Each check compares two independent routes to the same
//! object and reports a single pass/fail line; the command line `verify`
//! subcommand runs them all.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cartan::{
    all_minimal_words, minuscule_orbit, weyl_dimension, DynkinDiagram, Node, WeightVec,
};
use crate::crystal::{
    connected_component, fundamental, fundamental_base, generate_closure, minuscule_monomial,
    product_crystal, product_set, tau_check, Crystal, DEFAULT_CAP,
};
use crate::error::Result;
use crate::hw::{
    chain_decompose, enumerate_highest_weights, finite_dim_test, g_gamma_word, g_poly_walk,
    HalfIntPoly, HwProblem,
};
use crate::monomial::{
    decompose, e_tilde, eps_phi, f_tilde, is_highest_weight, is_highest_weight_monomial,
    monomial_from_data, t_multisets, weight, Monomial, Multiset, MultisetTuple, ParamSet,
};
use crate::regularity::{containment_search, e_pairing, ConditionElement, RegularityChecker};
use crate::typea::{verify_column_embedding, verify_flag_isomorphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(name, passed, detail),
            Err(e) => Self::new(name, false, format!("error: {e}")),
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub kashiwara_cases: usize,
    pub chain_cases: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0x5eed,
            kashiwara_cases: 10_000,
            chain_cases: 1_000,
        }
    }
}

/// A diagram together with parameters, used to sweep instance families.
pub type Instance = (DynkinDiagram, ParamSet);

fn diag(name: &str) -> DynkinDiagram {
    DynkinDiagram::from_name(name).expect("built-in diagram")
}

/// All parity-valid `R` with `1 <= |R| <= max_total` and values in `lo..=hi`.
pub fn param_family(d: &DynkinDiagram, max_total: usize, lo: i64, hi: i64) -> Vec<ParamSet> {
    let slots: Vec<(Node, i64)> = d
        .nodes()
        .flat_map(|i| (lo..=hi).filter(move |&k| d.same_parity(i, k)).map(move |k| (i, k)))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn go(
        d: &DynkinDiagram,
        slots: &[(Node, i64)],
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<ParamSet>,
    ) {
        if !chosen.is_empty() {
            let mut r = MultisetTuple::new();
            for &s in chosen.iter() {
                r.insert(slots[s].0, slots[s].1);
            }
            out.push(ParamSet::new(d, r).expect("parity-valid by construction"));
        }
        if left == 0 {
            return;
        }
        for s in start..slots.len() {
            chosen.push(s);
            go(d, slots, s, left - 1, chosen, out);
            chosen.pop();
        }
    }
    go(d, &slots, 0, max_total, &mut chosen, &mut out);
    out
}

/// The sweep used by the regularity and highest-weight checks: `|R| <= 3`,
/// values in `-3..=3`, over A1, A2, A3, plus one D4 instance.
pub fn standard_family() -> Vec<Instance> {
    let mut out = Vec::new();
    for name in ["A1", "A2", "A3"] {
        let d = diag(name);
        for r in param_family(&d, 3, -3, 3) {
            out.push((d.clone(), r));
        }
    }
    let d4 = diag("D4");
    let r = ParamSet::new(&d4, "1:0; 2:1; 3:2".parse().expect("literal")).expect("literal");
    out.push((d4, r));
    out
}

fn weight_sets(d: &DynkinDiagram, r: &ParamSet, c: &Crystal) -> Result<Vec<(WeightVec, Vec<MultisetTuple>)>> {
    c.weight_index()
        .into_iter()
        .map(|(mu, idxs)| {
            let mut ss = idxs
                .iter()
                .map(|&i| decompose(d, r.multisets(), &c.elements()[i]))
                .collect::<Result<Vec<_>>>()?;
            ss.sort();
            Ok((mu, ss))
        })
        .collect()
}

pub fn check_sl3_chain() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let d = diag("A2");
        let c = fundamental(&d, 1, 0)?;
        let y = Monomial::var;
        let top = y(1, 0);
        let mid = y(2, -1).mul(&y(1, -2).inverse());
        let bottom = y(2, -3).inverse();
        let z1 = crate::monomial::z_factor(&d, 1, -2)?.inverse();
        let z2 = crate::monomial::z_factor(&d, 2, -3)?.inverse();
        let ok = c.len() == 3
            && c.edges().len() == 2
            && f_tilde(&d, &top, 1) == Some(mid.clone())
            && f_tilde(&d, &mid, 2) == Some(bottom.clone())
            && top.mul(&z1) == mid
            && mid.mul(&z2) == bottom
            && [&top, &mid, &bottom].iter().all(|p| c.contains(p));
        Ok((ok, format!("{top} -f1-> {mid} -f2-> {bottom}")))
    };
    CheckResult::from_result("sl3 fundamental chain", run())
}

/// The A8 data shown with the failing condition (node 1 odd).
pub fn figure_condition_data() -> (DynkinDiagram, ParamSet, MultisetTuple, ConditionElement) {
    let d = diag("A8").with_flipped_parity();
    let r = ParamSet::new(&d, "2:4,4; 4:6; 6:4".parse().expect("literal")).expect("literal");
    let s: MultisetTuple = "2:2,2; 3:1,1,1,3; 4:2,4; 5:1,1,3; 6:0,0,0,2,2; 7:1,1; 8:2"
        .parse()
        .expect("literal");
    let u: MultisetTuple = "3:2; 4:3; 5:2,4; 6:1,3; 7:2".parse().expect("literal");
    let q = monomial_from_data(&d, &MultisetTuple::from_pairs([(5, [6])]), &u);
    (d, r, s, ConditionElement { node: 5, n: 6, q, u })
}

pub fn check_figure() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let (d, r, s, qe) = figure_condition_data();
        let value = e_pairing(&qe, r.multisets(), &s);
        let checker = RegularityChecker::new(&d)?;
        let first = checker.first_violation(r.multisets(), &s);
        let listed = checker
            .violations(r.multisets(), &s)
            .iter()
            .any(|w| w.q == qe.q && w.value == -1);
        let detail = match &first {
            Some(w) => format!("E_q = {value}; first witness node {} n {} value {}", w.node, w.n, w.value),
            None => format!("E_q = {value}; no witness"),
        };
        Ok((value == -1 && first.is_some() && listed, detail))
    };
    CheckResult::from_result("figure condition", run())
}

pub fn check_regular_equals_member(family: &[Instance]) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut weights = 0usize;
        for (d, r) in family {
            let c = product_crystal(d, r, DEFAULT_CAP)?;
            let checker = RegularityChecker::new(d)?;
            for (mu, expected) in weight_sets(d, r, &c)? {
                let m = crate::regularity::root_gap(d, r.lambda(), &mu)?;
                let found = containment_search(d, r.multisets(), &m, |s| {
                    checker.is_regular(r.multisets(), s)
                });
                if found != expected {
                    return Ok((false, format!("{d} R={r} mu={mu}: {} vs {}", found.len(), expected.len())));
                }
                weights += 1;
            }
        }
        Ok((true, format!("{} instances, {weights} weight spaces", family.len())))
    };
    CheckResult::from_result("regular = member", run())
}

pub fn check_highest_weights(family: &[Instance]) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut weights = 0usize;
        let mut conjectural = 0usize;
        for (d, r) in family {
            let c = product_crystal(d, r, DEFAULT_CAP)?;
            for (mu, expected) in weight_sets(d, r, &c)? {
                let prob = HwProblem::new(d, r.clone(), mu.clone())?;
                if enumerate_highest_weights(&prob)? != expected {
                    return Ok((false, format!("{d} R={r} mu={mu}")));
                }
                weights += 1;
                if d.kind() != crate::cartan::DiagramKind::A {
                    conjectural += 1;
                }
            }
        }
        Ok((
            true,
            format!("{weights} weight spaces ({conjectural} outside type A)"),
        ))
    };
    CheckResult::from_result("highest weights = weight set", run())
}

pub fn check_closure(family: &[Instance]) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        for (d, r) in family {
            let set = product_set(d, r, DEFAULT_CAP)?;
            let closed = generate_closure(d, set.iter().cloned(), DEFAULT_CAP)?;
            if closed.len() != set.len() {
                return Ok((false, format!("{d} R={r}: {} -> {}", set.len(), closed.len())));
            }
        }
        Ok((true, format!("{} instances", family.len())))
    };
    CheckResult::from_result("subcrystal closure", run())
}

/// Maximally singular parameters: `0^{lambda_i}` on even nodes, `(-1)^{lambda_i}` on odd ones.
pub fn singular_params(d: &DynkinDiagram, lambda: &[usize]) -> Result<ParamSet> {
    let mut r = MultisetTuple::new();
    for i in d.nodes() {
        r.insert_n(i, d.parity(i) * -1, lambda[i - 1]);
    }
    ParamSet::new(d, r)
}

pub fn check_sandwich(family: &[Instance]) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        for (d, r) in family {
            let c = product_crystal(d, r, DEFAULT_CAP)?;
            let comp = connected_component(&c, &crate::monomial::y_of(r.multisets()))?;
            let bound: u128 = r
                .parameters()
                .iter()
                .map(|&(i, _)| fundamental_base(d, i).map(|b| b.len() as u128))
                .product::<Result<u128>>()?;
            if comp.len() as u128 != weyl_dimension(d, r.lambda())? || c.len() as u128 > bound {
                return Ok((false, format!("{d} R={r}")));
            }
        }
        let a1 = diag("A1");
        let generic = crate::crystal::classify_params(&a1, &ParamSet::new(&a1, "1:0,2".parse()?)?, DEFAULT_CAP)?;
        let singular = crate::crystal::classify_params(&a1, &ParamSet::new(&a1, "1:0,0".parse()?)?, DEFAULT_CAP)?;
        if !generic.generic || singular.generic {
            return Ok((false, "A1 genericity examples".into()));
        }
        let mut count = 0;
        for (name, rank) in [("A1", 1usize), ("A2", 2)] {
            let d = diag(name);
            let mut lambda = vec![0usize; rank];
            loop {
                if lambda.iter().any(|&x| x > 0) {
                    let r = singular_params(&d, &lambda)?;
                    let class = crate::crystal::classify_params(&d, &r, DEFAULT_CAP)?;
                    if !class.maximally_singular
                        || class.component_size as u128 != weyl_dimension(&d, r.lambda())?
                    {
                        return Ok((false, format!("{d} lambda={lambda:?} not maximally singular")));
                    }
                    count += 1;
                }
                let Some(pos) = lambda.iter().position(|&x| x < 3) else { break };
                lambda[pos] += 1;
                for x in &mut lambda[..pos] {
                    *x = 0;
                }
            }
        }
        Ok((true, format!("{} instances; {count} singular weights", family.len())))
    };
    CheckResult::from_result("sandwich and classification", run())
}

/// Minuscule orbits used by the explicit-formula checks.
pub fn minuscule_family() -> Vec<(DynkinDiagram, Node)> {
    let mut out = Vec::new();
    for name in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"] {
        let d = diag(name);
        for i in d.nodes() {
            if d.is_minuscule(i) {
                out.push((d.clone(), i));
            }
        }
    }
    out
}

pub fn check_minuscule_formula() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut total = 0;
        for (d, i) in minuscule_family() {
            for c in [d.parity(i), d.parity(i) + 2] {
                let crystal = fundamental(&d, i, c)?;
                let orbit = minuscule_orbit(&d, i)?;
                if orbit.len() != crystal.len() {
                    return Ok((false, format!("{d} node {i}: orbit size")));
                }
                for g in &orbit {
                    let p = minuscule_monomial(&d, g, c);
                    let space: Vec<_> = crystal
                        .elements()
                        .iter()
                        .filter(|q| weight(&d, q) == g.gamma)
                        .collect();
                    if space != vec![&p] {
                        return Ok((false, format!("{d} node {i} gamma {}", g.gamma)));
                    }
                    total += 1;
                }
            }
        }
        Ok((true, format!("{total} orbit elements")))
    };
    CheckResult::from_result("minuscule formula", run())
}

pub fn check_tau() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut total = 0;
        for (d, i) in minuscule_family() {
            for g in minuscule_orbit(&d, i)? {
                for c in [d.parity(i), d.parity(i) + 2] {
                    if !tau_check(&d, &g, c)? {
                        return Ok((false, format!("{d} node {i} gamma {}", g.gamma)));
                    }
                    total += 1;
                }
            }
        }
        Ok((true, format!("{total} cases")))
    };
    CheckResult::from_result("tau identity", run())
}

pub fn check_flags() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut total = 0;
        let values = [-2i64, 0, 2];
        for n in 2..=4 {
            for size in 1..=3usize {
                let mut idx = vec![0usize; size];
                loop {
                    let r: Multiset = idx.iter().map(|&j| values[j]).collect();
                    if !verify_flag_isomorphism(n, &r)?.holds() {
                        return Ok((false, format!("n={n} R={r}")));
                    }
                    total += 1;
                    // next weakly increasing index tuple
                    let Some(pos) = idx.iter().rposition(|&j| j + 1 < values.len()) else { break };
                    idx[pos] += 1;
                    let v = idx[pos];
                    for j in &mut idx[pos + 1..] {
                        *j = v;
                    }
                }
            }
        }
        for n in 2..=5 {
            for i in 1..n {
                if !verify_column_embedding(n, i)? {
                    return Ok((false, format!("column n={n} i={i}")));
                }
            }
        }
        Ok((true, format!("{total} flag crystals; columns n <= 5")))
    };
    CheckResult::from_result("flag isomorphism", run())
}

pub fn check_g_polynomials() -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let a2 = diag("A2");
        for m1 in 0..=3i64 {
            for mu1 in 0..=3i64 {
                for mu2 in 0..=3i64 {
                    let expect0 = HalfIntPoly::from_roots(vec![0; m1 as usize]);
                    let expect1 = HalfIntPoly::from_roots(vec![0; (mu1 + m1) as usize]);
                    let mut r2 = Multiset::new();
                    r2.insert_n(0, (mu1 + m1) as usize);
                    r2.insert_n(1, mu2 as usize);
                    let expect2 = HalfIntPoly::from_doubled_roots(r2);
                    let got0 = g_poly_walk(&a2, 1, m1, &[], &[])?;
                    let got1 = g_poly_walk(&a2, 1, m1, &[1], &[mu1 + 1])?;
                    let got2 = g_poly_walk(&a2, 1, m1, &[1, 2], &[mu1 + 1, mu2 + 1])?;
                    if got0 != Some(expect0) || got1 != Some(expect1) || got2 != Some(expect2) {
                        return Ok((false, format!("sl3 m1={m1} mu=({mu1},{mu2})")));
                    }
                }
            }
        }
        let a3 = diag("A3");
        let mut words = 0;
        for i in a3.nodes() {
            let orbit = minuscule_orbit(&a3, i)?;
            for mu in [[0i64, 0, 0], [1, 0, 2], [2, 1, 1], [0, 3, 1]] {
                let mu = WeightVec(mu.to_vec());
                for m_i in 0..=2 {
                    for g in &orbit {
                        let base = g_gamma_word(&a3, i, m_i, &mu, &g.word)?;
                        let expected_degree: i64 = m_i + g.word.iter().map(|&j| mu.coeff(j)).sum::<i64>();
                        if base.degree() as i64 != expected_degree {
                            return Ok((false, format!("degree at {}", g.gamma)));
                        }
                        for w in all_minimal_words(&a3, g) {
                            words += 1;
                            if g_gamma_word(&a3, i, m_i, &mu, &w)? != base {
                                return Ok((false, format!("path dependence at {}", g.gamma)));
                            }
                        }
                        for h in &orbit {
                            let covers = h.word.len() == g.word.len() + 1
                                && (1..=3).any(|p| {
                                    g.gamma.coeff(p) == 1
                                        && crate::cartan::reflect_weight(&a3, &g.gamma, p) == h.gamma
                                });
                            if covers && !base.divides(&g_gamma_word(&a3, i, m_i, &mu, &h.word)?) {
                                return Ok((false, format!("divisibility {} / {}", g.gamma, h.gamma)));
                            }
                        }
                    }
                }
            }
        }
        Ok((true, format!("sl3 values; {words} A3 words")))
    };
    CheckResult::from_result("G-polynomials", run())
}

/// Instances sampled by the randomized Kashiwara suite.
fn kashiwara_pool() -> Result<Vec<(DynkinDiagram, ParamSet, Crystal)>> {
    let mut out = Vec::new();
    let picks: [(&str, &str); 8] = [
        ("A1", "1:0,0,2"),
        ("A2", "1:0,2; 2:1"),
        ("A2", "1:0,0; 2:-1"),
        ("A3", "1:0; 2:1; 3:2"),
        ("A3", "2:1,1"),
        ("A4", "2:1; 3:0"),
        ("D4", "1:0; 2:1"),
        ("E6", "1:0"),
    ];
    for (name, text) in picks {
        let d = diag(name);
        let r = ParamSet::new(&d, text.parse()?)?;
        let c = product_crystal(&d, &r, DEFAULT_CAP)?;
        out.push((d, r, c));
    }
    Ok(out)
}

pub fn check_kashiwara(seed: u64, cases: usize) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let pool = kashiwara_pool()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for case in 0..cases {
            let (d, r, c) = pool.choose(&mut rng).expect("nonempty pool");
            let p = &c.elements()[rng.gen_range(0..c.len())];
            let i = rng.gen_range(1..=d.rank());
            let sig = eps_phi(p, i);
            let wt = weight(d, p);
            let alpha = d.simple_root_weight(i);
            let fail = |what: &str| Ok((false, format!("case {case}: {what} at {p}, node {i}, seed {seed}")));
            if sig.phi - sig.eps != wt.coeff(i) {
                return fail("phi - eps != <wt, alpha>");
            }
            if let Some(q) = f_tilde(d, p, i) {
                if e_tilde(d, &q, i).as_ref() != Some(p)
                    || weight(d, &q) != wt.sub(&alpha)
                    || !q.is_parity_valid(d)
                    || eps_phi(&q, i).eps != sig.eps + 1
                {
                    return fail("f law");
                }
            } else if sig.phi != 0 {
                return fail("f vanished with phi > 0");
            }
            if let Some(q) = e_tilde(d, p, i) {
                if f_tilde(d, &q, i).as_ref() != Some(p)
                    || weight(d, &q) != wt.add(&alpha)
                    || !q.is_parity_valid(d)
                {
                    return fail("e law");
                }
            } else if sig.eps != 0 {
                return fail("e vanished with eps > 0");
            }
            let s = decompose(d, r.multisets(), p)?;
            if monomial_from_data(d, r.multisets(), &s) != *p {
                return fail("decomposition round trip");
            }
            let t = t_multisets(d, r.multisets(), &s)?;
            let hw = is_highest_weight_monomial(d, p);
            if is_highest_weight(&s, &t) != hw || finite_dim_test(d, r, &s)?.finite != hw {
                return fail("highest weight criterion");
            }
        }
        Ok((true, format!("{cases} cases, seed {seed}")))
    };
    CheckResult::from_result("Kashiwara axioms", run())
}

fn expand(roots: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
    // coefficients of prod (u - r), lowest degree first
    let mut coeffs = vec![BigInt::from(1)];
    for r in roots {
        let mut next = vec![BigInt::from(0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `true` iff `prod (u - b) P(u) = P(u + 1) prod (u - a)` with integer roots.
pub fn chain_identity(a: &Multiset, b: &Multiset, p: &HalfIntPoly) -> bool {
    let roots: Vec<i64> = p.doubled_roots().values().iter().map(|r| r / 2).collect();
    let lhs = mul(&expand(b.values()), &expand(roots.iter().copied()));
    let rhs = mul(&expand(roots.iter().map(|r| r - 1)), &expand(a.values()));
    lhs == rhs
}

pub fn check_chain(seed: u64, cases: usize) -> CheckResult {
    let run = || -> Result<(bool, String)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc4a1);
        let mut positive = 0;
        while positive < cases {
            let len = rng.gen_range(0..=5);
            let b: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
            let mut a: Vec<i64> = b.iter().map(|x| x + rng.gen_range(0..=4)).collect();
            a.shuffle(&mut rng);
            let (am, bm): (Multiset, Multiset) = (a.into_iter().collect(), b.into_iter().collect());
            match chain_decompose(&am, &bm)? {
                Some(p) if chain_identity(&am, &bm, &p) => positive += 1,
                _ => return Ok((false, format!("dominating pair {am} / {bm}"))),
            }
        }
        let mut negative = 0;
        while negative < cases {
            let len = rng.gen_range(1..=5);
            let a: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
            let b: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
            let (am, bm): (Multiset, Multiset) = (a.into_iter().collect(), b.into_iter().collect());
            // Hall form of domination: every threshold has at least as many a's above it.
            let dominated = bm.values().iter().all(|&t| {
                am.values().iter().filter(|&&x| x >= t).count() >= bm.values().iter().filter(|&&x| x >= t).count()
            });
            if dominated {
                continue;
            }
            if chain_decompose(&am, &bm)?.is_some() {
                return Ok((false, format!("non-dominating pair {am} / {bm}")));
            }
            negative += 1;
        }
        Ok((true, format!("{cases} identities, {cases} null cases, seed {seed}")))
    };
    CheckResult::from_result("chain decomposition", run())
}

/// Runs every suite in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckResult> {
    let family = standard_family();
    vec![
        check_sl3_chain(),
        check_figure(),
        check_regular_equals_member(&family),
        check_highest_weights(&family),
        check_closure(&family),
        check_sandwich(&family),
        check_minuscule_formula(),
        check_tau(),
        check_flags(),
        check_g_polynomials(),
        check_kashiwara(opts.seed, opts.kashiwara_cases),
        check_chain(opts.seed, opts.chain_cases),
    ]
}

/// Distinct weights of a crystal, for reports.
pub fn weight_support(c: &Crystal) -> BTreeSet<WeightVec> {
    c.weight_index().into_keys().collect()
}
