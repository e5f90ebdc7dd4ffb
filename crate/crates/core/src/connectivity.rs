//! Minimum degree, edge connectivity and vertex connectivity.
//!
//! Flow-based exact algorithms with witness cuts, plus exhaustive
//! subset-enumeration oracles used to cross-check them on small graphs.
//!
//! Conventions: a graph with at most one vertex, or a disconnected graph,
//! has vertex and edge connectivity 0. A complete graph on `m` vertices has
//! vertex connectivity `m - 1` (deleting `m - 1` vertices leaves `K_1`).

use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Result, ZdgError};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::zdg::ZeroDivisorGraph;

/// Default subset budget for the exhaustive oracles.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u64 = 10_000_000;

/// Minimum vertex degree; 0 for a graph with at most one vertex.
pub fn min_degree(g: &Graph) -> usize {
    g.degrees().min().unwrap_or(0)
}

/// Single-vertex graphs count as connected.
pub fn is_connected(g: &Graph) -> bool {
    g.component_count() <= 1
}

/// True if deleting the labelled vertices leaves a disconnected graph or `K_1`.
pub fn is_vertex_cut(g: &Graph, cut: &[u64]) -> bool {
    let rest = g.without_vertices(cut);
    rest.num_vertices() == 1 || rest.component_count() > 1
}

/// True if deleting the labelled edges leaves a disconnected or edgeless graph.
pub fn is_edge_cut(g: &Graph, cut: &[(u64, u64)]) -> bool {
    let rest = g.without_edges(cut);
    rest.num_edges() == 0 || rest.component_count() > 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub value: usize,
    /// Label pairs `(u, w)`, `u < w`, ascending.
    pub edges: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCut {
    pub value: usize,
    /// Labels, ascending.
    pub vertices: Vec<u64>,
}

fn min_degree_vertex(g: &Graph) -> Option<usize> {
    (0..g.num_vertices()).min_by_key(|&i| g.degree(i))
}

/// Global edge connectivity with a minimum edge cut.
///
/// Minimum over unit-capacity max-flows from vertex 0 to every other vertex;
/// every flow is capped at the best cut found so far, which starts at the
/// edges around a minimum-degree vertex.
pub fn edge_connectivity(g: &Graph) -> EdgeCut {
    let n = g.num_vertices();
    if n <= 1 || !is_connected(g) {
        return EdgeCut {
            value: 0,
            edges: Vec::new(),
        };
    }
    let root = min_degree_vertex(g).unwrap();
    let mut best = g.degree(root);
    let mut cut: Vec<(usize, usize)> = g
        .neighbors(root)
        .iter()
        .map(|&j| (root.min(j), root.max(j)))
        .collect();

    let mut net = FlowNetwork::new(n);
    for (i, j) in g.edges() {
        net.add_edge(i, j, 1);
    }
    // connected, so no cut is smaller than 1
    for sink in 1..n {
        if best <= 1 {
            break;
        }
        net.reset();
        let flow = net.max_flow(0, sink, best as u32) as usize;
        if flow < best {
            let side = net.source_side(0);
            cut = g.edges().filter(|&(i, j)| side[i] != side[j]).collect();
            debug_assert_eq!(cut.len(), flow);
            best = flow;
        }
    }
    let mut edges: Vec<(u64, u64)> = cut
        .into_iter()
        .map(|(i, j)| (g.label(i), g.label(j)))
        .collect();
    edges.sort_unstable();
    EdgeCut { value: best, edges }
}

/// Vertex-split network: vertex `i` becomes `2i -> 2i+1` with capacity 1;
/// edge `{i, j}` becomes `2i+1 -> 2j` and `2j+1 -> 2i` with capacity `|V|`.
struct SplitNetwork<'g> {
    g: &'g Graph,
    net: FlowNetwork,
}

impl<'g> SplitNetwork<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.num_vertices();
        let big = n as u32;
        let mut net = FlowNetwork::new(2 * n);
        for i in 0..n {
            net.add_arc(2 * i, 2 * i + 1, 1);
        }
        for (i, j) in g.edges() {
            net.add_arc(2 * i + 1, 2 * j, big);
            net.add_arc(2 * j + 1, 2 * i, big);
        }
        Self { g, net }
    }

    /// Local connectivity between non-adjacent `s` and `t`, capped at
    /// `limit`. Returns the separator when the value is below `limit`.
    fn local(&mut self, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
        debug_assert!(s != t && !self.g.has_edge(s, t));
        self.net.reset();
        let flow = self.net.max_flow(2 * s + 1, 2 * t, limit as u32) as usize;
        if flow >= limit {
            return (flow, None);
        }
        let side = self.net.source_side(2 * s + 1);
        let sep: Vec<usize> = (0..self.g.num_vertices())
            .filter(|&i| side[2 * i] && !side[2 * i + 1])
            .collect();
        debug_assert_eq!(sep.len(), flow);
        (flow, Some(sep))
    }
}

/// Exact vertex connectivity with a minimum vertex cut.
///
/// Takes a minimum-degree vertex `v` and minimizes the local connectivity
/// over `v` paired with each non-neighbor, and over the non-adjacent pairs
/// inside the neighborhood of `v`. Some minimum separator either avoids `v`
/// (first family) or contains it, in which case it separates two of its
/// neighbors (second family). If no non-adjacent pair exists the graph is
/// complete and the answer is `|V| - 1`.
pub fn vertex_connectivity(g: &Graph) -> VertexCut {
    let n = g.num_vertices();
    if n <= 1 || !is_connected(g) {
        return VertexCut {
            value: 0,
            vertices: Vec::new(),
        };
    }
    let root = min_degree_vertex(g).unwrap();
    let mut best = g.degree(root);
    let mut cut: Vec<usize> = g.neighbors(root).to_vec();
    let mut split = SplitNetwork::new(g);

    let mut consider = |s: usize, t: usize, best: &mut usize, cut: &mut Vec<usize>| {
        // connected, so no separator is smaller than 1
        if *best <= 1 {
            return;
        }
        if let (value, Some(sep)) = split.local(s, t, *best) {
            *best = value;
            *cut = sep;
        }
    };

    for t in 0..n {
        if t != root && !g.has_edge(root, t) {
            consider(root, t, &mut best, &mut cut);
        }
    }
    let hood = g.neighbors(root);
    for (a, &x) in hood.iter().enumerate() {
        for &y in &hood[a + 1..] {
            if !g.has_edge(x, y) {
                consider(x, y, &mut best, &mut cut);
            }
        }
    }
    let mut vertices: Vec<u64> = cut.into_iter().map(|i| g.label(i)).collect();
    vertices.sort_unstable();
    VertexCut {
        value: best,
        vertices,
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_budget(what: &str, universe: usize, max_k: usize, budget: u64) -> Result<()> {
    let total: u128 = (0..=max_k as u64)
        .map(|k| binomial(universe as u64, k))
        .fold(0u128, u128::saturating_add);
    if total > budget as u128 {
        return Err(ZdgError::ResourceLimit(format!(
            "exhaustive {what} search needs {total} subsets (budget {budget})"
        )));
    }
    Ok(())
}

/// Smallest `k` such that deleting some `k` vertices leaves a disconnected
/// graph or `K_1`, by enumerating subsets in increasing size.
pub fn exhaustive_vertex_connectivity(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.num_vertices();
    if n <= 1 {
        return Ok(0);
    }
    let delta = min_degree(g);
    check_budget("vertex", n, delta, budget)?;

    let mut removed = vec![false; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for k in 0..n {
        for subset in (0..n).combinations(k) {
            if n - k == 1 {
                return Ok(k);
            }
            removed.fill(false);
            for &i in &subset {
                removed[i] = true;
            }
            let start = (0..n).find(|&i| !removed[i]).unwrap();
            seen.copy_from_slice(&removed);
            seen[start] = true;
            queue.push_back(start);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            if reached < n - k {
                return Ok(k);
            }
        }
    }
    unreachable!("deleting all but one vertex always leaves K_1")
}

/// Smallest `k` such that deleting some `k` edges leaves a disconnected or
/// edgeless graph, by enumerating edge subsets in increasing size.
pub fn exhaustive_edge_connectivity(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.num_vertices();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if n <= 1 || m == 0 {
        return Ok(0);
    }
    check_budget("edge", m, min_degree(g), budget)?;

    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(i, j)) in edges.iter().enumerate() {
        incident[i].push((j, id));
        incident[j].push((i, id));
    }
    let mut removed = vec![false; m];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for k in 0..=m {
        for subset in (0..m).combinations(k) {
            if k == m {
                return Ok(k);
            }
            removed.fill(false);
            for &e in &subset {
                removed[e] = true;
            }
            seen.fill(false);
            seen[0] = true;
            queue.push_back(0);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for &(w, id) in &incident[u] {
                    if !removed[id] && !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            if reached < n {
                return Ok(k);
            }
        }
    }
    unreachable!("deleting every edge leaves an edgeless graph")
}

/// Computed connectivity triple for one zero divisor graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub n: u64,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub delta: usize,
    pub kappa_e: usize,
    pub kappa: usize,
    pub witness_vertex_cut: Option<Vec<u64>>,
    pub witness_edge_cut: Option<Vec<(u64, u64)>>,
}

impl ConnectivityReport {
    /// Flow-based report with witnesses.
    pub fn compute(g: &ZeroDivisorGraph) -> Self {
        let vertex = vertex_connectivity(g);
        let edge = edge_connectivity(g);
        Self {
            n: g.n(),
            num_vertices: g.num_vertices(),
            num_edges: g.num_edges(),
            delta: min_degree(g),
            kappa_e: edge.value,
            kappa: vertex.value,
            witness_vertex_cut: Some(vertex.vertices),
            witness_edge_cut: Some(edge.edges),
        }
    }

    /// Report from the exhaustive oracles; carries no witnesses.
    pub fn compute_exhaustive(g: &ZeroDivisorGraph, budget: u64) -> Result<Self> {
        Ok(Self {
            n: g.n(),
            num_vertices: g.num_vertices(),
            num_edges: g.num_edges(),
            delta: min_degree(g),
            kappa_e: exhaustive_edge_connectivity(g, budget)?,
            kappa: exhaustive_vertex_connectivity(g, budget)?,
            witness_vertex_cut: None,
            witness_edge_cut: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zdg::build_explicit;
    use proptest::prelude::*;

    fn zdg(n: u64) -> ZeroDivisorGraph {
        build_explicit(n).unwrap()
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&zdg(25)), 3);
        assert_eq!(min_degree(&zdg(12)), 1);
        assert_eq!(zdg(12).neighbor_labels(2), Some(vec![6]));
        assert_eq!(min_degree(&zdg(4)), 0);
    }

    #[test]
    fn is_connected_examples() {
        assert!(is_connected(&zdg(12)));
        assert!(is_connected(&zdg(4)));
        assert!(!is_connected(&zdg(8).without_vertices(&[4])));
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(&zdg(25)).value, 3);
        assert_eq!(edge_connectivity(&zdg(27)).value, 2);
        let cut = edge_connectivity(&zdg(8));
        assert_eq!(cut.value, 1);
        assert!(is_edge_cut(&zdg(8), &cut.edges));
        assert_eq!(exhaustive_edge_connectivity(&zdg(8), 100), Ok(1));
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(vertex_connectivity(&zdg(25)).value, 3);
        let cut = vertex_connectivity(&zdg(12));
        assert_eq!(
            cut,
            VertexCut {
                value: 1,
                vertices: vec![6]
            }
        );
        assert_eq!(exhaustive_vertex_connectivity(&zdg(12), 100), Ok(1));
        assert_eq!(vertex_connectivity(&zdg(105)).value, 2);
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(exhaustive_vertex_connectivity(&zdg(8), 100), Ok(1));
        assert_eq!(exhaustive_vertex_connectivity(&zdg(25), 100), Ok(3));
        assert_eq!(exhaustive_vertex_connectivity(&zdg(30), 1000), Ok(1));
        assert_eq!(exhaustive_edge_connectivity(&zdg(9), 100), Ok(1));
        assert_eq!(exhaustive_edge_connectivity(&zdg(25), 100), Ok(3));
        assert_eq!(exhaustive_edge_connectivity(&zdg(4), 100), Ok(0));
        assert_eq!(exhaustive_vertex_connectivity(&zdg(4), 100), Ok(0));
    }

    #[test]
    fn exhaustive_budget() {
        // K_{10,12} for n = 11 * 13: delta = 10, 120 edges
        let g = zdg(143);
        assert!(matches!(
            exhaustive_edge_connectivity(&g, DEFAULT_EXHAUSTIVE_BUDGET),
            Err(ZdgError::ResourceLimit(_))
        ));
        assert!(matches!(
            exhaustive_vertex_connectivity(&g, 10),
            Err(ZdgError::ResourceLimit(_))
        ));
    }

    #[test]
    fn degenerate_graphs() {
        let single = zdg(4);
        assert_eq!(vertex_connectivity(&single).value, 0);
        assert_eq!(edge_connectivity(&single).value, 0);
        let split = Graph::from_edges(vec![1, 2, 3, 4], [(1, 2), (3, 4)]);
        assert_eq!(vertex_connectivity(&split).value, 0);
        assert_eq!(edge_connectivity(&split).value, 0);
        assert_eq!(exhaustive_vertex_connectivity(&split, 100), Ok(0));
        assert_eq!(exhaustive_edge_connectivity(&split, 100), Ok(0));
    }

    #[test]
    fn complete_graph_convention() {
        let k2 = zdg(9);
        assert_eq!(vertex_connectivity(&k2).value, 1);
        let k6 = zdg(49);
        let cut = vertex_connectivity(&k6);
        assert_eq!(cut.value, 5);
        assert!(is_vertex_cut(&k6, &cut.vertices));
    }

    #[test]
    fn witnesses_replay() {
        for n in 4..=300u64 {
            let Ok(g) = build_explicit(n) else { continue };
            let v = vertex_connectivity(&g);
            assert_eq!(v.vertices.len(), v.value, "n={n}");
            assert!(is_vertex_cut(&g, &v.vertices), "n={n}");
            let e = edge_connectivity(&g);
            assert_eq!(e.edges.len(), e.value, "n={n}");
            assert!(is_edge_cut(&g, &e.edges), "n={n}");
        }
    }

    #[test]
    fn deletion_never_raises_edge_connectivity_beyond_degree() {
        for n in 4..=100u64 {
            let Ok(g) = build_explicit(n) else { continue };
            let base = edge_connectivity(&g).value;
            for (i, &v) in g.vertices().iter().enumerate() {
                let after = edge_connectivity(&g.without_vertices(&[v])).value;
                assert!(after <= base + g.degree(i), "n={n} v={v}");
            }
        }
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (2usize..=9).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(proptest::bool::weighted(0.55), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n as u64 {
                    for j in i + 1..n as u64 {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges((0..n as u64).collect(), edges)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn flow_agrees_with_exhaustive_on_random_graphs(g in random_graph()) {
            let v = vertex_connectivity(&g);
            let e = edge_connectivity(&g);
            prop_assert_eq!(Ok(v.value), exhaustive_vertex_connectivity(&g, u64::MAX));
            prop_assert_eq!(Ok(e.value), exhaustive_edge_connectivity(&g, u64::MAX));
            prop_assert!(v.value <= e.value && e.value <= min_degree(&g));
            prop_assert!(is_vertex_cut(&g, &v.vertices));
            prop_assert!(is_edge_cut(&g, &e.edges));
        }
    }
}
