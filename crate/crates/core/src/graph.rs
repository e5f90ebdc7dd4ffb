//! Simple undirected graph over labelled vertices.
//!
//! Vertices are stored by index `0..num_vertices()` with an ascending `u64`
//! label each; neighbor lists are sorted index lists. Every graph is
//! immutable once built; the deletion helpers return new induced graphs.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from ascending distinct labels and label-pair edges.
    ///
    /// Self-loops and duplicate edges are dropped. Panics if an edge names
    /// an unknown label or `labels` is not strictly ascending.
    pub fn from_edges(labels: Vec<u64>, edges: impl IntoIterator<Item = (u64, u64)>) -> Self {
        assert!(
            labels.windows(2).all(|w| w[0] < w[1]),
            "labels must be strictly ascending"
        );
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in edges {
            let i = labels.binary_search(&a).expect("unknown edge endpoint");
            let j = labels.binary_search(&b).expect("unknown edge endpoint");
            if i != j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        Self::from_adjacency(labels, adj)
    }

    /// Index-based constructor; sorts and dedups the lists.
    pub(crate) fn from_adjacency(labels: Vec<u64>, mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert_eq!(twice % 2, 0);
        Self {
            labels,
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u64 {
        self.labels[i]
    }

    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Neighbor labels of the vertex labelled `label`, ascending.
    pub fn neighbor_labels(&self, label: u64) -> Option<Vec<u64>> {
        let i = self.index_of(label)?;
        Some(self.adj[i].iter().map(|&j| self.labels[j]).collect())
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    /// Index pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let start = list.partition_point(|&j| j <= i);
            list[start..].iter().map(move |&j| (i, j))
        })
    }

    /// Label pairs `(u, w)` with `u < w`, lexicographic.
    pub fn edge_labels(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges().map(|(i, j)| (self.labels[i], self.labels[j]))
    }

    /// Number of connected components; 0 for the null graph.
    pub fn component_count(&self) -> usize {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut count = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            count += 1;
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Induced subgraph on the vertices whose labels are not in `removed`.
    /// Unknown labels are ignored.
    pub fn without_vertices(&self, removed: &[u64]) -> Graph {
        let mut keep = vec![true; self.num_vertices()];
        for &label in removed {
            if let Some(i) = self.index_of(label) {
                keep[i] = false;
            }
        }
        let mut new_index = vec![usize::MAX; self.num_vertices()];
        let mut labels = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                new_index[i] = labels.len();
                labels.push(self.labels[i]);
            }
        }
        let adj = (0..self.num_vertices())
            .filter(|&i| keep[i])
            .map(|i| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| keep[j])
                    .map(|&j| new_index[j])
                    .collect()
            })
            .collect();
        Graph::from_adjacency(labels, adj)
    }

    /// Same vertex set with the given label-pair edges deleted.
    pub fn without_edges(&self, removed: &[(u64, u64)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(a, b) in removed {
            if let (Some(i), Some(j)) = (self.index_of(a), self.index_of(b)) {
                adj[i].retain(|&x| x != j);
                adj[j].retain(|&x| x != i);
            }
        }
        Graph::from_adjacency(self.labels.clone(), adj)
    }
}
