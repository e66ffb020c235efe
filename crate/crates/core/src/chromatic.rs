//! Exact chromatic-polynomial computation and coloring counts.
//!
//! Three independent routes to the same numbers keep each other honest:
//! deletion-contraction (production), edge-subset inclusion-exclusion
//! (oracle), and brute-force enumeration (oracle). `blowup_eval` counts
//! colorings of uniform blow-ups at class sizes far beyond enumeration.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// A count of colorings: exact and nonnegative.
pub type BigCount = BigUint;

/// Resource guards for the exponential algorithms. All are explicit: hitting
/// one yields a resource-limit error, never a silently truncated answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Vertex cap for deletion-contraction (hard cap 64: bitmask adjacency).
    pub max_vertices: usize,
    /// Edge cap for inclusion-exclusion (2^m subsets).
    pub max_edges: usize,
    /// Cap on q^n for brute-force coloring enumeration.
    pub max_enumeration: u64,
    /// Base-graph vertex cap for blow-up evaluation.
    pub max_blowup_base: usize,
    /// Color cap for blow-up evaluation (hard cap 15: 4-bit packed counts).
    pub max_blowup_q: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_vertices: 24,
            max_edges: 20,
            max_enumeration: 1_000_000_000,
            max_blowup_base: 10,
            max_blowup_q: 12,
        }
    }
}

/// Exact chromatic polynomial under default budgets.
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial> {
    chromatic_polynomial_with_budget(g, &Budgets::default())
}

/// Exact chromatic polynomial by deletion-contraction.
///
/// Parallel edges arising from contraction collapse in the bitmask
/// representation, which leaves the polynomial unchanged. The pivot edge
/// maximizes the endpoint degree sum, driving dense graphs toward the
/// complete-graph base case.
pub fn chromatic_polynomial_with_budget(g: &Graph, budgets: &Budgets) -> Result<Polynomial> {
    if g.n() > budgets.max_vertices {
        return Err(Error::ResourceLimit(format!(
            "graph has {} vertices, over the budget of {}",
            g.n(),
            budgets.max_vertices
        )));
    }
    if g.n() > 64 {
        return Err(Error::ResourceLimit(
            "bitmask adjacency caps the vertex budget at 64".into(),
        ));
    }
    let mut adj = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(chrom_masks(adj))
}

fn chrom_masks(adj: Vec<u64>) -> Polynomial {
    let n = adj.len();
    let m = adj.iter().map(|a| a.count_ones()).sum::<u32>() as usize / 2;
    if m == 0 {
        return Polynomial::monomial(n);
    }
    if m == n * (n - 1) / 2 {
        return Polynomial::falling_factorial(n);
    }
    let comps = components_masks(&adj);
    if comps.len() > 1 {
        let mut acc = Polynomial::one();
        for c in comps {
            acc = &acc * &chrom_masks(induced(&adj, c));
        }
        return acc;
    }
    if m == n - 1 {
        // Connected with n - 1 edges: a tree, q(q-1)^{n-1}.
        let mut p = Polynomial::monomial(1);
        for _ in 0..n - 1 {
            p = p.mul_q_minus(&BigInt::one());
        }
        return p;
    }

    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut pivot = (0usize, 0usize);
    let mut best = 0;
    for u in 0..n {
        let mut bits = adj[u] >> (u + 1) << (u + 1);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let score = deg[u] + deg[v];
            if score > best {
                best = score;
                pivot = (u, v);
            }
        }
    }
    let (u, v) = pivot;

    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    let contracted = contract(&adj, u, v);
    &chrom_masks(deleted) - &chrom_masks(contracted)
}

/// Merges v into u and reindexes; the contracted edge disappears and
/// parallels collapse via the bitmask union.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let n = adj.len();
    let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    let mut map = vec![0usize; n];
    let mut next = 0;
    for w in 0..n {
        if w != v {
            map[w] = next;
            next += 1;
        }
    }
    let mut out = vec![0u64; n - 1];
    for w in 0..n {
        if w == v {
            continue;
        }
        let mut bits = if w == u { merged } else { adj[w] };
        let mut dst = 0u64;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let t = if b == v { u } else { b };
            if t != w {
                dst |= 1 << map[t];
            }
        }
        out[map[w]] = dst;
    }
    out
}

/// Connected components of a bitmask graph, one vertex mask per component.
fn components_masks(adj: &[u64]) -> Vec<u64> {
    let mut seen = 0u64;
    let mut comps = Vec::new();
    for s in 0..adj.len() {
        if seen & (1 << s) != 0 {
            continue;
        }
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grow |= adj[v] & !comp;
            }
            comp |= grow;
            frontier = grow;
        }
        seen |= comp;
        comps.push(comp);
    }
    comps
}

/// Induced subgraph on the masked vertices, reindexed densely.
fn induced(adj: &[u64], mask: u64) -> Vec<u64> {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| mask & (1 << v) != 0).collect();
    let mut map = vec![0usize; adj.len()];
    for (i, &v) in verts.iter().enumerate() {
        map[v] = i;
    }
    verts
        .iter()
        .map(|&v| {
            let mut dst = 0u64;
            let mut bits = adj[v] & mask;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dst |= 1 << map[b];
            }
            dst
        })
        .collect()
}

/// Oracle route under default budgets.
pub fn inclusion_exclusion_poly(g: &Graph) -> Result<Polynomial> {
    inclusion_exclusion_poly_with_budget(g, &Budgets::default())
}

/// Edge-subset inclusion-exclusion: sums (-1)^|E'| q^{C(E')} over all
/// subsets E' of the edge set, with C counting components of (V, E').
pub fn inclusion_exclusion_poly_with_budget(g: &Graph, budgets: &Budgets) -> Result<Polynomial> {
    let m = g.m();
    if m > budgets.max_edges {
        return Err(Error::ResourceLimit(format!(
            "graph has {m} edges, over the subset-enumeration budget of {}",
            budgets.max_edges
        )));
    }
    let n = g.n();
    let edges = g.edges();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for subset in 0u64..(1u64 << m) {
        let mut dsu: Vec<usize> = (0..n).collect();
        let mut comps = n;
        let mut bits = subset;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru != rv {
                dsu[ru] = rv;
                comps -= 1;
            }
        }
        if subset.count_ones() % 2 == 0 {
            coeffs[comps] += 1;
        } else {
            coeffs[comps] -= 1;
        }
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

fn find(dsu: &mut [usize], mut v: usize) -> usize {
    while dsu[v] != v {
        dsu[v] = dsu[dsu[v]];
        v = dsu[v];
    }
    v
}

/// Oracle route under default budgets.
pub fn count_colorings_bruteforce(g: &Graph, q: u32) -> Result<BigCount> {
    count_colorings_bruteforce_with_budget(g, q, &Budgets::default())
}

/// Counts proper q-colorings by backtracking over vertices in index order.
/// Guarded by q^n against the enumeration budget; the count itself never
/// exceeds that space, so it fits in u64 under the default budget.
pub fn count_colorings_bruteforce_with_budget(
    g: &Graph,
    q: u32,
    budgets: &Budgets,
) -> Result<BigCount> {
    let n = g.n();
    let mut space: u128 = 1;
    for _ in 0..n {
        space = space.saturating_mul(q as u128);
        if space > budgets.max_enumeration as u128 {
            return Err(Error::ResourceLimit(format!(
                "{q}^{n} colorings exceed the enumeration budget of {}",
                budgets.max_enumeration
            )));
        }
    }

    // Earlier-indexed neighbors suffice: vertices are colored in index order.
    let mut back = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        back[u.max(v)].push(u.min(v));
    }

    fn rec(back: &[Vec<usize>], q: u32, v: usize, color: &mut [u32]) -> u64 {
        if v == back.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            if back[v].iter().all(|&w| color[w] != c) {
                color[v] = c;
                total += rec(back, q, v + 1, color);
            }
        }
        total
    }
    let mut color = vec![u32::MAX; n];
    Ok(BigUint::from(rec(&back, q, 0, &mut color)))
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 1..=k {
        // Each partial product is itself a binomial, so division is exact.
        res = res * BigUint::from(n - k + i) / BigUint::from(i);
    }
    res
}

/// Surjections from an n-set onto a t-set:
/// Surj(n, t) = sum_{k=0}^{t} (-1)^k C(t, k) (t-k)^n.
pub fn surjection_count(n: u32, t: u32) -> BigUint {
    let mut acc = BigInt::zero();
    for k in 0..=t {
        let term = BigInt::from(binomial(t as u64, k as u64)) * BigInt::from(t - k).pow(n);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("surjection count is nonnegative")
}

/// Coloring counter for uniform blow-ups of one base graph at one q,
/// reusable across class sizes.
///
/// A coloring restricted to class i uses some nonempty color set T_i, and
/// adjacency of base vertices forces disjointness of the corresponding sets,
/// so the count is sum over admissible (T_1..T_b) of prod_i Surj(n, |T_i|).
/// Rather than enumerating set tuples, colors are assigned one at a time to
/// an independent set of classes (possibly none); the dynamic program tracks
/// only the per-class counts of colors assigned so far, and the final sum
/// collapses further to sorted count profiles.
pub struct BlowupEvaluator {
    q: u32,
    /// Sorted per-class color-count profile -> number of color assignments.
    profiles: Vec<(Vec<u8>, u128)>,
}

impl BlowupEvaluator {
    pub fn new(base: &Graph, q: u32) -> Result<Self> {
        Self::new_with_budget(base, q, &Budgets::default())
    }

    pub fn new_with_budget(base: &Graph, q: u32, budgets: &Budgets) -> Result<Self> {
        let b = base.n();
        if b > budgets.max_blowup_base {
            return Err(Error::ResourceLimit(format!(
                "base graph has {b} vertices, over the blow-up budget of {}",
                budgets.max_blowup_base
            )));
        }
        if q > budgets.max_blowup_q || q > 15 {
            return Err(Error::ResourceLimit(format!(
                "q = {q} is over the blow-up color budget of {}",
                budgets.max_blowup_q.min(15)
            )));
        }

        let mut adj = vec![0u16; b];
        for &(u, v) in base.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let ind_sets: Vec<u16> = (0..(1u16 << b))
            .filter(|&s| (0..b).all(|v| s & (1 << v) == 0 || adj[v] & s == 0))
            .collect();

        // One 4-bit field per class; each color bumps a field by at most one,
        // so fields stay at most q <= 15 and never carry.
        let mut states: HashMap<u64, u128> = HashMap::new();
        states.insert(0, 1);
        for _ in 0..q {
            let mut grown: HashMap<u64, u128> = HashMap::with_capacity(states.len() * 2);
            for (&st, &mult) in &states {
                for &s in &ind_sets {
                    let mut ns = st;
                    let mut bits = s;
                    while bits != 0 {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        ns += 1u64 << (4 * i);
                    }
                    *grown.entry(ns).or_insert(0) += mult;
                }
            }
            states = grown;
        }

        let mut profiles: BTreeMap<Vec<u8>, u128> = BTreeMap::new();
        for (st, mult) in states {
            let mut t: Vec<u8> = (0..b).map(|i| ((st >> (4 * i)) & 0xF) as u8).collect();
            t.sort_unstable();
            *profiles.entry(t).or_insert(0) += mult;
        }
        Ok(BlowupEvaluator {
            q,
            profiles: profiles.into_iter().collect(),
        })
    }

    /// Sorted count profiles with multiplicities; dominant growth terms of
    /// the count are visible here as the profiles with largest products.
    pub fn profiles(&self) -> &[(Vec<u8>, u128)] {
        &self.profiles
    }

    /// Exact proper-coloring count of the blow-up with uniform class size n.
    pub fn eval(&self, n: u32) -> BigCount {
        let surj: Vec<BigUint> = (0..=self.q).map(|t| surjection_count(n, t)).collect();
        let mut total = BigUint::zero();
        for (t, mult) in &self.profiles {
            if t.iter().any(|&ti| surj[ti as usize].is_zero()) {
                continue;
            }
            let mut term = BigUint::from(*mult);
            for &ti in t {
                term *= &surj[ti as usize];
            }
            total += term;
        }
        total
    }
}

/// Proper q-colorings of the uniform blow-up of `base` with classes of
/// size n, under default budgets.
pub fn blowup_eval(base: &Graph, n: u32, q: u32) -> Result<BigCount> {
    blowup_eval_with_budget(base, n, q, &Budgets::default())
}

pub fn blowup_eval_with_budget(
    base: &Graph,
    n: u32,
    q: u32,
    budgets: &Budgets,
) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "blow-up class size must be positive".into(),
        ));
    }
    Ok(BlowupEvaluator::new_with_budget(base, q, budgets)?.eval(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{seymour_base, seymour_h};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn chromatic_polynomial_examples() {
        let k3 = chromatic_polynomial(&Graph::complete(3)).unwrap();
        assert_eq!(k3, poly(&[0, 2, -3, 1]));

        let p4 = chromatic_polynomial(&Graph::path(4)).unwrap();
        assert_eq!(p4, poly(&[0, -1, 3, -3, 1]));

        let c4 = chromatic_polynomial(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4, poly(&[0, -3, 6, -4, 1]));

        assert_eq!(
            chromatic_polynomial(&Graph::empty(0)).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            chromatic_polynomial(&Graph::empty(1)).unwrap(),
            poly(&[0, 1])
        );
        assert_eq!(
            chromatic_polynomial(&Graph::complete(6)).unwrap(),
            Polynomial::falling_factorial(6)
        );
    }

    #[test]
    fn multiplicative_over_components() {
        let k3_plus_k2 = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let product = &chromatic_polynomial(&Graph::complete(3)).unwrap()
            * &chromatic_polynomial(&Graph::complete(2)).unwrap();
        assert_eq!(chromatic_polynomial(&k3_plus_k2).unwrap(), product);
    }

    #[test]
    fn vertex_budget_enforced() {
        let g = Graph::empty(25);
        assert!(matches!(
            chromatic_polynomial(&g),
            Err(Error::ResourceLimit(_))
        ));
        let budgets = Budgets {
            max_vertices: 30,
            ..Budgets::default()
        };
        assert!(chromatic_polynomial_with_budget(&g, &budgets).is_ok());
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(inclusion_exclusion_poly(&edge).unwrap(), poly(&[0, -1, 1]));

        let k3 = Graph::complete(3);
        assert_eq!(
            inclusion_exclusion_poly(&k3).unwrap(),
            chromatic_polynomial(&k3).unwrap()
        );

        assert_eq!(
            inclusion_exclusion_poly(&Graph::empty(3)).unwrap(),
            Polynomial::monomial(3)
        );

        // 21 edges is over the 2^20 subset budget.
        assert!(matches!(
            inclusion_exclusion_poly(&Graph::complete(7)),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn brute_force_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(count_colorings_bruteforce(&k3, 3).unwrap(), 6u32.into());
        assert_eq!(count_colorings_bruteforce(&k3, 2).unwrap(), 0u32.into());

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(count_colorings_bruteforce(&c4, 2).unwrap(), 2u32.into());

        assert_eq!(
            count_colorings_bruteforce(&Graph::empty(3), 2).unwrap(),
            8u32.into()
        );
        assert_eq!(
            count_colorings_bruteforce(&Graph::empty(0), 0).unwrap(),
            1u32.into()
        );
        assert_eq!(
            count_colorings_bruteforce(&Graph::empty(1), 0).unwrap(),
            0u32.into()
        );

        assert!(matches!(
            count_colorings_bruteforce(&Graph::empty(31), 2),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn three_routes_agree_on_small_graphs() {
        let graphs = [
            Graph::complete(4),
            Graph::cycle(5).unwrap(),
            Graph::path(4),
            Graph::star(5),
            Graph::random(6, 0.5, 1).unwrap(),
            Graph::random(7, 0.3, 2).unwrap(),
        ];
        for g in &graphs {
            let p = chromatic_polynomial(g).unwrap();
            let ie = inclusion_exclusion_poly(g).unwrap();
            assert_eq!(p, ie, "polynomial mismatch on {g:?}");
            for q in 0..=5u32 {
                let by_poly = p.eval(&BigInt::from(q));
                let by_count = count_colorings_bruteforce(g, q).unwrap();
                assert_eq!(by_poly, BigInt::from(by_count), "count mismatch at q={q}");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(10, 10), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(52, 5), 2_598_960u32.into());
    }

    #[test]
    fn surjection_examples() {
        assert_eq!(surjection_count(0, 0), BigUint::one());
        assert_eq!(surjection_count(3, 0), BigUint::zero());
        assert_eq!(surjection_count(5, 1), BigUint::one());
        assert_eq!(surjection_count(3, 2), 6u32.into());
        assert_eq!(surjection_count(4, 2), 14u32.into());
        assert_eq!(surjection_count(2, 3), BigUint::zero());
    }

    #[test]
    fn blowup_examples() {
        let tri = Graph::complete(3);
        assert_eq!(blowup_eval(&tri, 2, 3).unwrap(), 6u32.into());
        assert_eq!(blowup_eval(&tri, 1, 4).unwrap(), 24u32.into());

        // Blow-up count at class size 2 matches brute force on the
        // 12-vertex instance.
        let by_blowup = blowup_eval(&seymour_base(), 2, 5).unwrap();
        let by_brute = count_colorings_bruteforce(&seymour_h(2).unwrap(), 5).unwrap();
        assert_eq!(by_blowup, by_brute);
    }

    #[test]
    fn blowup_matches_chromatic_polynomial() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let tri = Graph::complete(3);
        let path3 = Graph::path(3);
        for base in [&edge, &tri, &path3] {
            for n in 1..=2u32 {
                let sizes = vec![n as usize; base.n()];
                let blown = Graph::blow_up(base, &sizes).unwrap();
                let p = chromatic_polynomial(&blown).unwrap();
                for q in 0..=5u32 {
                    assert_eq!(
                        BigInt::from(blowup_eval(base, n, q).unwrap()),
                        p.eval(&BigInt::from(q)),
                        "base {base:?}, n={n}, q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn blowup_evaluator_reuse_and_unit_size() {
        let eval5 = BlowupEvaluator::new(&seymour_base(), 5).unwrap();
        // Class size 1 reproduces the base polynomial's value.
        let base_poly = chromatic_polynomial(&seymour_base()).unwrap();
        assert_eq!(
            BigInt::from(eval5.eval(1)),
            base_poly.eval(&BigInt::from(5))
        );
        // Counts grow with class size.
        assert!(eval5.eval(3) > eval5.eval(2));
    }

    #[test]
    fn blowup_budgets_enforced() {
        let tri = Graph::complete(3);
        assert!(matches!(
            blowup_eval(&tri, 0, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            blowup_eval(&tri, 2, 13),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            blowup_eval(&Graph::empty(11), 2, 3),
            Err(Error::ResourceLimit(_))
        ));
    }
}
