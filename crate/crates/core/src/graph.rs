//! Simple undirected graphs on the vertex set `1..=n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;

use crate::error::GraphError;

/// A 1-based vertex index.
pub type Vertex = usize;

/// A finite simple undirected graph with vertices `1..=n`.
///
/// Adjacency is kept as ordered neighbor sets so that every iteration order
/// (edges, neighbors) is deterministic. Graphs are immutable once built;
/// connectedness is not required.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Graph {
            adj: vec![BTreeSet::new(); n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u - 1].insert(v);
            g.adj[v - 1].insert(u);
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n()
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && u >= 1 && u <= self.n() && self.adj[u - 1].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, nbrs)| {
            let u = i + 1;
            nbrs.range(u + 1..).map(move |&v| (u, v))
        })
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        self.check_vertex(v)?;
        let mut set = self.adj[v - 1].clone();
        set.insert(v);
        Ok(set)
    }

    /// Same vertex set, edge set replaced by its complement.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (1..=n)
            .map(|u| {
                (1..=n)
                    .filter(|&v| v != u && !self.adj[u - 1].contains(&v))
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([1]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u - 1] {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|nbrs| nbrs.len() == n - 1)
    }

    /// If the graph is a complete bipartite graph `K_{a,b}` with `a, b ≥ 1`,
    /// returns the side sizes with `a ≤ b`.
    pub fn complete_bipartite_sides(&self) -> Option<(usize, usize)> {
        if self.n() < 2 || self.adj[0].is_empty() {
            return None;
        }
        // Side A must be exactly the non-neighbors of vertex 1 plus itself.
        let side_b = &self.adj[0];
        let a = self.n() - side_b.len();
        for u in self.vertices() {
            let expected = if side_b.contains(&u) { a } else { side_b.len() };
            if self.degree(u) != expected {
                return None;
            }
            let in_b = side_b.contains(&u);
            if self.adj[u - 1].iter().any(|v| side_b.contains(v) == in_b) {
                return None;
            }
        }
        let b = side_b.len();
        Some((a.min(b), a.max(b)))
    }

    /// Adjacency as bitmasks over 0-based vertices, or `None` when `n > 64`.
    pub(crate) fn bitmasks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
                .collect(),
        )
    }

    /// Erdős–Rényi `G(n, p)` sample.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// A random connected graph: a random spanning tree plus `G(n, p)` extra edges.
    pub fn random_connected<R: Rng + ?Sized>(
        n: usize,
        p: f64,
        rng: &mut R,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for v in 2..=n {
            edges.push((rng.gen_range(1..v), v));
        }
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
