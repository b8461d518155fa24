use std::collections::VecDeque;

use crate::{Error, Result};

/// Simple undirected graph stored as a dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.max(v) + 1,
                });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 2 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        g
    }

    /// `m x m` lattice with 4-neighbor adjacency; vertex `(r, c)` is `r * m + c`.
    pub fn grid(m: usize) -> Self {
        let mut g = Self::empty(m * m);
        for r in 0..m {
            for c in 0..m {
                let v = r * m + c;
                if c + 1 < m {
                    g.add_edge(v, v + 1);
                }
                if r + 1 < m {
                    g.add_edge(v, v + m);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Parses one edge per line as two vertex ids separated by whitespace or
    /// a comma. Blank lines and `#` comments are skipped; the vertex count is
    /// one more than the largest id.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let bad = |message: String| Error::EdgeList {
                line: lineno + 1,
                message,
            };
            if fields.len() != 2 {
                return Err(bad(format!("expected 2 vertex ids, found {}", fields.len())));
            }
            let mut ids = [0usize; 2];
            for (slot, f) in ids.iter_mut().zip(&fields) {
                *slot = f.parse().map_err(|_| bad(format!("{f:?} is not a vertex id")))?;
            }
            if ids[0] == ids[1] {
                return Err(bad(format!("self-loop at vertex {}", ids[0])));
            }
            edges.push((ids[0], ids[1]));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .enumerate()
            .filter_map(|(u, &e)| e.then_some(u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    /// Unordered edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) == 0)
    }
}

/// Largest number of other vertices within distance 2 of any vertex.
pub fn neighborhood_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut best = 0;
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for v in 0..n {
        depth[v] = 0;
        touched.push(v);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            if depth[u] == 2 {
                continue;
            }
            for w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        best = best.max(touched.len() - 1);
        for &u in &touched {
            depth[u] = usize::MAX;
        }
        touched.clear();
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_bound_is_four() {
        for n in [5, 6, 50] {
            assert_eq!(neighborhood_bound(&Graph::cycle(n)), 4);
        }
    }

    #[test]
    fn complete_graph_bound() {
        assert_eq!(neighborhood_bound(&Graph::complete(4)), 3);
    }

    #[test]
    fn edgeless_bound_is_zero() {
        assert_eq!(neighborhood_bound(&Graph::empty(5)), 0);
    }

    #[test]
    fn grid_structure() {
        let g = Graph::grid(3);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.degree(0), 2);
        // center of a 3x3 grid reaches every other vertex within 2 steps
        assert_eq!(neighborhood_bound(&g), 8);
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("# star\n0 1\n0,2\n\n0\t3  # leaf\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(0), 3);
        assert!(Graph::parse_edge_list("0 1 2\n").is_err());
        assert!(Graph::parse_edge_list("0 x\n").is_err());
        assert!(Graph::parse_edge_list("3 3\n").is_err());
    }

    #[test]
    fn edges_are_listed_once() {
        let g = Graph::cycle(4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
