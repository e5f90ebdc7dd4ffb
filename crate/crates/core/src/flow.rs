//! Dinic max-flow on small integer capacities.
//!
//! Networks are built once and reused across many source/sink queries:
//! [`FlowNetwork::reset`] restores the original capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    original: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    /// Outgoing arc ids per node; arc `a ^ 1` is the reverse of `a`.
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

const UNREACHED: u32 = u32::MAX;

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![UNREACHED; nodes],
            cursor: vec![0; nodes],
        }
    }

    /// Arc `from -> to` with capacity `cap` and a zero-capacity reverse.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.add_pair(from, to, cap, 0);
    }

    /// Undirected edge: capacity `cap` in each direction.
    pub fn add_edge(&mut self, a: usize, b: usize, cap: u32) {
        self.add_pair(a, b, cap, cap);
    }

    fn add_pair(&mut self, from: usize, to: usize, cap: u32, back: u32) {
        let id = self.arcs.len();
        self.arcs.push(Arc {
            to,
            cap,
            original: cap,
        });
        self.arcs.push(Arc {
            to: from,
            cap: back,
            original: back,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    pub fn reset(&mut self) {
        for arc in &mut self.arcs {
            arc.cap = arc.original;
        }
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.fill(UNREACHED);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] == UNREACHED {
                    self.level[arc.to] = self.level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[sink] != UNREACHED
    }

    fn push(&mut self, u: usize, sink: usize, pushed: u32) -> u32 {
        if u == sink {
            return pushed;
        }
        while self.cursor[u] < self.out[u].len() {
            let a = self.out[u][self.cursor[u]];
            let Arc { to, cap, .. } = self.arcs[a];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.push(to, sink, pushed.min(cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    /// Max flow from `source` to `sink`, stopping early once `limit` units
    /// have been routed. Call [`reset`](Self::reset) between queries.
    pub fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(source, sink) {
            self.cursor.fill(0);
            while flow < limit {
                let got = self.push(source, sink, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
            }
        }
        flow
    }

    /// Nodes reachable from `source` in the residual network. After a
    /// complete max-flow this is the source side of a minimum cut.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}
