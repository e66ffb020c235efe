//! Simple undirected graphs and the blow-up constructions used throughout.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// The nine adjacent class pairs (1-indexed) of Seymour's six-class family:
/// classes i and j are completely joined iff (i, j) is listed here.
pub const SEYMOUR_CLASS_PAIRS: [(usize, usize); 9] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (2, 4),
    (3, 4),
    (1, 5),
    (3, 5),
    (1, 6),
    (2, 6),
];

/// Simple undirected graph: a vertex count and a canonically ordered edge set.
///
/// Vertices are dense 0-indexed integers. Each edge is stored once with the
/// smaller endpoint first, and the edge list is sorted and deduplicated, so
/// structural equality is plain `==`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Degree statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    /// Maximum vertex degree (0 for the empty and edgeless graphs).
    pub max_degree: usize,
    /// All vertex degrees, sorted ascending.
    pub degree_multiset: Vec<usize>,
}

impl Graph {
    /// Builds a graph, normalizing and deduplicating the edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    /// Path on n vertices (n - 1 edges).
    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph { n, edges }
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Ok(Graph { n, edges })
    }

    /// Star: vertex 0 joined to vertices 1..n.
    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|v| (0, v)).collect();
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let mut degree_multiset = self.degrees();
        degree_multiset.sort_unstable();
        DegreeSummary {
            max_degree: degree_multiset.last().copied().unwrap_or(0),
            degree_multiset,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components as sorted vertex lists (isolated vertices included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Replaces vertex i of `base` by an independent class of `sizes[i]`
    /// vertices; classes are completely joined iff the base vertices are
    /// adjacent. Classes occupy consecutive vertex ranges in base-vertex order.
    pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<Self> {
        if sizes.len() != base.n {
            return Err(Error::InvalidParameter(format!(
                "blow_up needs one class size per base vertex ({} sizes for {} vertices)",
                sizes.len(),
                base.n
            )));
        }
        if let Some(&z) = sizes.iter().find(|&&s| s == 0) {
            let _ = z;
            return Err(Error::InvalidParameter(
                "blow_up class sizes must be positive".into(),
            ));
        }
        let mut offset = vec![0usize; base.n + 1];
        for i in 0..base.n {
            offset[i + 1] = offset[i] + sizes[i];
        }
        let n = offset[base.n];
        let mut edges = Vec::new();
        for &(i, j) in &base.edges {
            for u in offset[i]..offset[i + 1] {
                for v in offset[j]..offset[j + 1] {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        edges.sort_unstable();
        Ok(Graph { n, edges })
    }

    /// Adds m new vertices, each adjacent to every other vertex
    /// (the new vertices included).
    pub fn add_universal_vertices(&self, m: usize) -> Self {
        let n = self.n + m;
        let mut edges = self.edges.clone();
        for v in self.n..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        edges.sort_unstable();
        Graph { n, edges }
    }

    /// Erdos-Renyi G(n, p) sample, deterministic for a fixed seed.
    ///
    /// Pairs are visited in canonical order and kept with probability p,
    /// driven by ChaCha8 keyed on the seed, so the same (n, p, seed) always
    /// yields the same graph.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "edge probability must lie in [0, 1], got {p}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph { n, edges })
    }
}

/// The six-vertex pattern behind Seymour's family: vertex i stands for class
/// A_{i+1}, with the nine listed class pairs as edges.
pub fn seymour_base() -> Graph {
    let edges: Vec<(usize, usize)> = SEYMOUR_CLASS_PAIRS
        .iter()
        .map(|&(i, j)| (i - 1, j - 1))
        .collect();
    Graph::new(6, &edges).expect("base pattern is a valid graph")
}

/// Seymour's graph H(n): six independent classes of size n, classes joined
/// completely according to the nine-pair pattern. 6n vertices, 9n^2 edges.
pub fn seymour_h(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "seymour_h needs a positive class size".into(),
        ));
    }
    Graph::blow_up(&seymour_base(), &[n; 6])
}

/// Class label (0..=5 for A_1..A_6) of each vertex of `seymour_h(n)`.
pub fn seymour_classes(n: usize) -> Vec<usize> {
    (0..6 * n).map(|v| v / n).collect()
}

/// The modified family S(n) on n^2 vertices: H(n) plus n^2 - 6n extra
/// vertices, each adjacent to every other vertex of the graph.
pub fn modified_s(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "modified_s needs n >= 6 so the universal-vertex count n^2 - 6n is nonnegative, got {n}"
        )));
    }
    Ok(seymour_h(n)?.add_universal_vertices(n * n - 6 * n))
}

/// Class label per vertex of `modified_s(n)`: 0..=5 for A_1..A_6,
/// 6 for the universal vertices.
pub fn modified_classes(n: usize) -> Vec<usize> {
    let mut labels = seymour_classes(n);
    labels.resize(n * n, 6);
    labels
}

/// Exact chromatic number by branch and bound; intended for small graphs.
///
/// Returns 0 for the empty graph and 1 for edgeless nonempty graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n == 0 {
        return 0;
    }
    if g.m() == 0 {
        return 1;
    }
    let adj = g.adjacency();

    // Order vertices by degree, densest first; helps both bounds and search.
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));

    // Greedy coloring gives an upper bound.
    let mut color = vec![usize::MAX; g.n];
    let mut upper = 0;
    for &v in &order {
        let used: BTreeSet<usize> = adj[v]
            .iter()
            .filter(|&&w| color[w] != usize::MAX)
            .map(|&w| color[w])
            .collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        color[v] = c;
        upper = upper.max(c + 1);
    }

    // Greedy clique from the densest vertex gives a lower bound.
    let mut clique = vec![order[0]];
    for &v in &order[1..] {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lower = clique.len();

    for k in lower..upper {
        if colorable(&adj, &order, k) {
            return k;
        }
    }
    upper
}

/// Backtracking k-colorability test with first-vertex symmetry breaking.
fn colorable(adj: &[Vec<usize>], order: &[usize], k: usize) -> bool {
    fn rec(adj: &[Vec<usize>], order: &[usize], k: usize, idx: usize, color: &mut [usize]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let max_used = order[..idx].iter().map(|&u| color[u] + 1).max().unwrap_or(0);
        // Trying at most one fresh color prunes color permutations.
        for c in 0..k.min(max_used + 1) {
            if adj[v].iter().all(|&w| color[w] != c) {
                color[v] = c;
                if rec(adj, order, k, idx + 1, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    let mut color = vec![usize::MAX; adj.len()];
    rec(adj, order, k, 0, &mut color)
}

/// Parses the edge-list format: an optional header `p <n> <m>`, then one
/// `u v` pair per line. Lines starting with `#` are comments; blank lines are
/// skipped; duplicate edges collapse silently.
///
/// Without a header the vertex count is the largest endpoint plus one.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut saw_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_content && line.starts_with('p') {
            saw_content = true;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("header must be `p <n> <m>`, got {line:?}"),
                });
            }
            let n = fields[1].parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex count {:?}", fields[1]),
            })?;
            // The edge count in the header is advisory; duplicates collapse,
            // so it is not enforced.
            fields[2].parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad edge count {:?}", fields[2]),
            })?;
            declared_n = Some(n);
            continue;
        }
        saw_content = true;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v`, got {line:?}"),
            });
        }
        let u = fields[0].parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad vertex {:?}", fields[0]),
        })?;
        let v = fields[1].parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad vertex {:?}", fields[1]),
        })?;
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if let Some(n) = declared_n {
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex out of range for n = {n}"),
                });
            }
        }
        pairs.push((u, v, line_no));
    }

    let n = declared_n.unwrap_or_else(|| {
        pairs
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::new(n, &edges).map_err(|e| match e {
        Error::InvalidVertex { vertex, n } => Error::Parse {
            line: 0,
            message: format!("vertex {vertex} out of range for n = {n}"),
        },
        other => other,
    })
}

/// Serializes to the edge-list format with a `p <n> <m>` header.
/// `parse_graph(serialize_graph(g))` reproduces `g` exactly.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_normalizes_and_validates() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        assert_eq!(k3, Graph::complete(3));

        let dedup = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(dedup.m(), 1);

        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, n: 2 })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn degree_summary_examples() {
        let k3 = Graph::complete(3);
        let s = k3.degree_summary();
        assert_eq!(s.max_degree, 2);
        assert_eq!(s.degree_multiset, vec![2, 2, 2]);

        let empty = Graph::empty(4);
        assert_eq!(empty.degree_summary().max_degree, 0);

        // Classes A_1..A_3 of H(1) meet four other classes, A_4..A_6 two.
        let h1 = seymour_h(1).unwrap();
        let degs = h1.degree_summary();
        assert_eq!(degs.max_degree, 4);
        assert!(degs.degree_multiset.iter().all(|&d| d == 2 || d == 4));
        assert_eq!(degs.degree_multiset, vec![2, 2, 2, 4, 4, 4]);
    }

    #[test]
    fn seymour_family_counts() {
        for n in 1..=4 {
            let h = seymour_h(n).unwrap();
            assert_eq!(h.n(), 6 * n);
            assert_eq!(h.m(), 9 * n * n);
        }
        assert!(seymour_h(0).is_err());

        let h1 = seymour_h(1).unwrap();
        assert_eq!(h1.n(), 6);
        assert_eq!(h1.m(), 9);
        assert_eq!(chromatic_number(&h1), 3);
        assert_eq!(chromatic_number(&seymour_h(2).unwrap()), 3);
    }

    #[test]
    fn seymour_max_degree_is_4n() {
        // Direct counting of the nine-pair construction: classes A_1..A_3
        // have degree 4n, classes A_4..A_6 degree 2n.
        for n in 1..=5 {
            assert_eq!(seymour_h(n).unwrap().max_degree(), 4 * n);
        }
    }

    #[test]
    fn blow_up_identities() {
        let tri = Graph::complete(3);
        let k222 = Graph::blow_up(&tri, &[2, 2, 2]).unwrap();
        assert_eq!(k222.n(), 6);
        assert_eq!(k222.m(), 12);

        // Unit blow-up is the base itself.
        assert_eq!(Graph::blow_up(&tri, &[1, 1, 1]).unwrap(), tri);

        // Blow-up of a single vertex is edgeless.
        let v1 = Graph::empty(1);
        assert_eq!(Graph::blow_up(&v1, &[5]).unwrap(), Graph::empty(5));

        // Uniform blow-up of the base reproduces H(n).
        for n in 1..=3 {
            assert_eq!(
                Graph::blow_up(&seymour_base(), &[n; 6]).unwrap(),
                seymour_h(n).unwrap()
            );
        }

        // Max degree scales by the class size.
        for n in [1usize, 2, 3] {
            let blown = Graph::blow_up(&seymour_base(), &[n; 6]).unwrap();
            assert_eq!(
                blown.max_degree(),
                n * seymour_base().max_degree()
            );
        }

        assert!(Graph::blow_up(&tri, &[2, 2]).is_err());
        assert!(Graph::blow_up(&tri, &[2, 0, 2]).is_err());
    }

    #[test]
    fn universal_vertices() {
        let e1 = Graph::empty(1);
        assert_eq!(e1.add_universal_vertices(1), Graph::complete(2));
        assert_eq!(Graph::complete(3).add_universal_vertices(1), Graph::complete(4));

        // S(n) is H(n) plus n^2 - 6n universal vertices.
        let s7 = modified_s(7).unwrap();
        assert_eq!(s7, seymour_h(7).unwrap().add_universal_vertices(7));
        assert_eq!(s7.n(), 49);
        assert_eq!(s7.max_degree(), 48);

        // n = 6: no extra vertices at all.
        assert_eq!(modified_s(6).unwrap(), seymour_h(6).unwrap());
        assert!(modified_s(5).is_err());
    }

    #[test]
    fn class_labels() {
        assert_eq!(seymour_classes(2), vec![0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5]);
        let labels = modified_classes(7);
        assert_eq!(labels.len(), 49);
        assert_eq!(labels[41], 5);
        assert!(labels[42..].iter().all(|&c| c == 6));
    }

    #[test]
    fn random_graph_determinism() {
        assert_eq!(Graph::random(5, 0.0, 7).unwrap(), Graph::empty(5));
        assert_eq!(Graph::random(5, 1.0, 7).unwrap(), Graph::complete(5));
        let a = Graph::random(8, 0.5, 42).unwrap();
        let b = Graph::random(8, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert!(Graph::random(5, 1.5, 0).is_err());
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4)), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(4)), 1);
        assert_eq!(chromatic_number(&Graph::path(5)), 2);
    }

    #[test]
    fn parse_and_serialize() {
        let k3 = parse_graph("p 3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(k3, Graph::complete(3));

        let iso = parse_graph("p 2 0\n").unwrap();
        assert_eq!(iso, Graph::empty(2));

        match parse_graph("p 2 1\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }

        // Comments and blank lines are fine; headerless input infers n.
        let g = parse_graph("# triangle\n\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));

        let h2 = seymour_h(2).unwrap();
        assert_eq!(parse_graph(&serialize_graph(&h2)).unwrap(), h2);
        let e0 = Graph::empty(0);
        assert_eq!(parse_graph(&serialize_graph(&e0)).unwrap(), e0);
    }
}
