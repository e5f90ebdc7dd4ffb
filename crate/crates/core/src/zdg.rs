//! Zero divisor graph of `Z_n`, explicit and compressed.
//!
//! The vertices are the nonzero residues `v` with `gcd(v, n) > 1`; `u` and `w`
//! are adjacent when `u != w` and `u * w = 0 (mod n)`. Adjacency depends only
//! on the divisor classes `gcd(u, n)` and `gcd(w, n)`, so the graph is a
//! blow-up of a small quotient on the proper divisors of `n`. The explicit
//! builder generates its edges class pair by class pair from that quotient.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Deref;

use crate::arith::{factorize, gcd, mul_mod, Factorization};
use crate::error::{Result, ZdgError};
use crate::graph::Graph;

/// Explicit construction refuses graphs with more vertices than this.
pub const MAX_EXPLICIT_VERTICES: u64 = 200_000;
/// Explicit construction refuses graphs with more edges than this.
pub const MAX_EXPLICIT_EDGES: u64 = 50_000_000;

fn zero_divisor_factorization(n: u64) -> Result<Factorization> {
    if n < 4 {
        return Err(ZdgError::NoZeroDivisors(n));
    }
    let f = factorize(n)?;
    if !f.is_composite() {
        return Err(ZdgError::NoZeroDivisors(n));
    }
    Ok(f)
}

/// One divisor class: the vertices `v` with `gcd(v, n) = divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorClass {
    pub divisor: u64,
    /// `phi(n / divisor)`
    pub size: u64,
    /// `divisor^2 = 0 (mod n)`: members are pairwise adjacent.
    pub self_saturated: bool,
}

/// Quotient of the zero divisor graph by divisor classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedZdg {
    factorization: Factorization,
    classes: Vec<DivisorClass>,
    /// Per class, indices of the *other* classes it is joined to.
    class_adj: Vec<Vec<usize>>,
}

impl CompressedZdg {
    pub fn n(&self) -> u64 {
        self.factorization.n()
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// Classes ascending by divisor.
    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn class(&self, divisor: u64) -> Option<&DivisorClass> {
        self.class_index(divisor).map(|i| &self.classes[i])
    }

    fn class_index(&self, divisor: u64) -> Option<usize> {
        self.classes
            .binary_search_by_key(&divisor, |c| c.divisor)
            .ok()
    }

    /// Joined class pairs `(d, e)` with `d < e` and `d * e = 0 (mod n)`.
    pub fn adjacency(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, list) in self.class_adj.iter().enumerate() {
            for &j in list.iter().filter(|&&j| j > i) {
                out.push((self.classes[i].divisor, self.classes[j].divisor));
            }
        }
        out
    }

    /// Other classes joined to `divisor`, ascending.
    pub fn class_neighbors(&self, divisor: u64) -> Option<Vec<u64>> {
        let i = self.class_index(divisor)?;
        Some(
            self.class_adj[i]
                .iter()
                .map(|&j| self.classes[j].divisor)
                .collect(),
        )
    }

    /// Class of a residue `v` (its gcd with `n`), if `v` is a vertex.
    pub fn class_of(&self, v: u64) -> Option<u64> {
        let n = self.n();
        if v == 0 || v >= n {
            return None;
        }
        let d = gcd(v, n);
        (d > 1).then_some(d)
    }

    /// Vertex count of the expanded graph.
    pub fn num_vertices(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }
}

pub fn build_compressed(n: u64) -> Result<CompressedZdg> {
    let f = zero_divisor_factorization(n)?;
    let classes: Vec<DivisorClass> = f
        .divisors()
        .into_iter()
        .filter(|&d| d != 1 && d != n)
        .map(|d| DivisorClass {
            divisor: d,
            size: f.quotient(d).totient(),
            self_saturated: mul_mod(d, d, n) == 0,
        })
        .collect();
    let mut class_adj = vec![Vec::new(); classes.len()];
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if mul_mod(classes[i].divisor, classes[j].divisor, n) == 0 {
                class_adj[i].push(j);
                class_adj[j].push(i);
            }
        }
    }
    for list in &mut class_adj {
        list.sort_unstable();
    }
    Ok(CompressedZdg {
        factorization: f,
        classes,
        class_adj,
    })
}

/// Degrees of the expanded graph, computed on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `(divisor, size, degree of every member)`, ascending by divisor.
    pub class_degrees: Vec<(u64, u64, u64)>,
}

impl DegreeProfile {
    pub fn min_degree(&self) -> Option<u64> {
        self.class_degrees.iter().map(|&(_, _, deg)| deg).min()
    }

    pub fn class_degree(&self, divisor: u64) -> Option<u64> {
        self.class_degrees
            .iter()
            .find(|&&(d, _, _)| d == divisor)
            .map(|&(_, _, deg)| deg)
    }

    /// Degree -> number of vertices with that degree.
    pub fn degree_counts(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &(_, size, deg) in &self.class_degrees {
            *out.entry(deg).or_insert(0) += size;
        }
        out
    }

    /// Every vertex degree, ascending. Allocates one entry per vertex.
    pub fn degree_multiset(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (deg, count) in self.degree_counts() {
            out.extend(std::iter::repeat_n(deg, count as usize));
        }
        out
    }

    pub fn edge_count(&self) -> u64 {
        let twice: u128 = self
            .class_degrees
            .iter()
            .map(|&(_, size, deg)| size as u128 * deg as u128)
            .sum();
        (twice / 2) as u64
    }
}

pub fn degree_profile(c: &CompressedZdg) -> DegreeProfile {
    let class_degrees = c
        .classes
        .iter()
        .zip(&c.class_adj)
        .map(|(class, adj)| {
            let others: u64 = adj.iter().map(|&j| c.classes[j].size).sum();
            let own = if class.self_saturated {
                class.size - 1
            } else {
                0
            };
            (class.divisor, class.size, others + own)
        })
        .collect();
    DegreeProfile { class_degrees }
}

/// Explicit zero divisor graph; derefs to the underlying [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorGraph {
    n: u64,
    graph: Graph,
}

impl ZeroDivisorGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Residues, ascending.
    pub fn vertices(&self) -> &[u64] {
        self.graph.labels()
    }

    pub fn class_of(&self, v: u64) -> u64 {
        gcd(v, self.n)
    }
}

impl Deref for ZeroDivisorGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl AsRef<Graph> for ZeroDivisorGraph {
    fn as_ref(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_explicit(n: u64) -> Result<ZeroDivisorGraph> {
    let compressed = build_compressed(n)?;
    build_explicit_from(&compressed)
}

/// Expands a quotient into the explicit graph, subject to the size guards.
pub fn build_explicit_from(c: &CompressedZdg) -> Result<ZeroDivisorGraph> {
    let n = c.n();
    let num_vertices = c.num_vertices();
    if num_vertices > MAX_EXPLICIT_VERTICES {
        return Err(ZdgError::ResourceLimit(format!(
            "Z_{n} has {num_vertices} zero divisors (limit {MAX_EXPLICIT_VERTICES})"
        )));
    }
    let num_edges = degree_profile(c).edge_count();
    if num_edges > MAX_EXPLICIT_EDGES {
        return Err(ZdgError::ResourceLimit(format!(
            "Z_{n} graph has {num_edges} edges (limit {MAX_EXPLICIT_EDGES})"
        )));
    }

    let members: Vec<Vec<u64>> = c
        .classes
        .iter()
        .map(|class| {
            let m = n / class.divisor;
            (1..m)
                .filter(|&k| gcd(k, m) == 1)
                .map(|k| k * class.divisor)
                .collect()
        })
        .collect();
    let mut labels: Vec<u64> = members.iter().flatten().copied().collect();
    labels.sort_unstable();
    let members: Vec<Vec<usize>> = members
        .iter()
        .map(|list| {
            list.iter()
                .map(|v| labels.binary_search(v).expect("member is a vertex"))
                .collect()
        })
        .collect();

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
    for (ci, class) in c.classes.iter().enumerate() {
        let mut shared: Vec<usize> = c.class_adj[ci]
            .iter()
            .flat_map(|&cj| members[cj].iter().copied())
            .collect();
        if class.self_saturated {
            shared.extend(&members[ci]);
        }
        shared.sort_unstable();
        for &v in &members[ci] {
            adj[v] = shared.iter().copied().filter(|&w| w != v).collect();
        }
    }
    Ok(ZeroDivisorGraph {
        n,
        graph: Graph::from_adjacency(labels, adj),
    })
}

/// Graphviz DOT text for the graph. Each edge is written once, smaller
/// endpoint first. With `color_by_class`, every divisor class gets its own
/// fill color.
pub fn export_dot(g: &ZeroDivisorGraph, color_by_class: bool) -> String {
    let n = g.n();
    let classes: Vec<u64> = {
        let mut ds: Vec<u64> = g.vertices().iter().map(|&v| gcd(v, n)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    };
    let mut out = String::new();
    writeln!(out, "graph \"Z_{n}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for &v in g.vertices() {
        if color_by_class {
            let d = gcd(v, n);
            let idx = classes.binary_search(&d).unwrap();
            let hue = idx as f64 / classes.len() as f64;
            writeln!(
                out,
                "  {v} [label=\"{v}\", class=\"{d}\", style=filled, fillcolor=\"{hue:.3} 0.450 0.950\"];"
            )
            .unwrap();
        } else {
            writeln!(out, "  {v} [label=\"{v}\"];").unwrap();
        }
    }
    for (u, w) in g.edge_labels() {
        writeln!(out, "  {u} -- {w};").unwrap();
    }
    out.push_str("}\n");
    out
}
