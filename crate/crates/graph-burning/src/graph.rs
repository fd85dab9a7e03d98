//! Undirected, unweighted simple graphs with dense 0-based vertex ids,
//! plus the distance machinery (BFS, balls, eccentricities) that every
//! burning algorithm relies on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph. Neighbor lists are kept sorted so equal
/// graphs compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as (u, v) pairs with u < v, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff a single BFS from vertex 0 reaches everything. Graphs
    /// with n ≤ 1 count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let oracle = self.bfs(0).expect("vertex 0 exists");
        (0..self.n).all(|v| oracle.distance(v).is_some())
    }

    /// Hop distances from `source`.
    pub fn bfs(&self, source: usize) -> Result<DistanceOracle> {
        if source >= self.n {
            return Err(Error::InvalidInput(format!(
                "bfs source {source} out of range for n = {}",
                self.n
            )));
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceOracle { source, dist })
    }

    /// The ball N_r(v): all vertices within hop distance r of v, sorted.
    pub fn ball(&self, v: usize, r: usize) -> Result<Vec<usize>> {
        let oracle = self.bfs(v)?;
        Ok((0..self.n)
            .filter(|&w| matches!(oracle.distance(w), Some(d) if d <= r))
            .collect())
    }

    /// Radius, diameter, eccentricities, and minimum degree. Requires a
    /// connected graph with at least one vertex.
    pub fn metrics(&self) -> Result<MetricSummary> {
        if self.n == 0 {
            return Err(Error::InvalidInput("empty graph has no metrics".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut eccentricities = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let oracle = self.bfs(v)?;
            let ecc = (0..self.n)
                .map(|w| oracle.distance(w).expect("connected"))
                .max()
                .unwrap();
            eccentricities.push(ecc);
        }
        let radius = *eccentricities.iter().min().unwrap();
        let diameter = *eccentricities.iter().max().unwrap();
        // lowest-id vertex attaining the radius
        let center_vertex = eccentricities.iter().position(|&e| e == radius).unwrap();
        let min_degree = (0..self.n).map(|v| self.degree(v)).min().unwrap();
        Ok(MetricSummary {
            eccentricities,
            radius,
            diameter,
            min_degree,
            center_vertex,
        })
    }

    /// One shortest u–v path, deterministic: walk from u, always picking
    /// the lowest-id neighbor one step closer to v.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let to_v = self.bfs(v)?;
        if u >= self.n {
            return Err(Error::InvalidInput(format!("vertex {u} out of range")));
        }
        let Some(mut remaining) = to_v.distance(u) else {
            return Err(Error::Disconnected);
        };
        let mut path = vec![u];
        let mut cur = u;
        while remaining > 0 {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| to_v.distance(w) == Some(remaining - 1))
                .expect("some neighbor is closer to the target");
            path.push(next);
            cur = next;
            remaining -= 1;
        }
        Ok(path)
    }
}

/// Single-source hop distances. Unreachable vertices report `None`.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    source: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceOracle {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn distance(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSummary {
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub min_degree: usize,
    pub center_vertex: usize,
}
