//! Graphs, multigraphs and hypergraphs.
//!
//! Vertices are dense ids `0..n`. A [`Hypergraph`] keeps its edges in
//! declaration order, since several constructions refer to "edge number
//! k"; each individual edge is stored as a sorted multiset of vertex ids.
//! A [`Graph`] is a hypergraph whose edges all have two slots, where a
//! repeated id encodes a loop.

mod generate;
mod io;

pub use generate::{
    claw_free_a, claw_free_b, complete, complete_bipartite, cycle, generate, gnp, path,
    random_connected_graph, random_hypergraph, random_multigraph, random_simple_graph,
    random_uniform_hypergraph, star, Generated, GeneratorSpec,
};
pub use io::{parse_graph, parse_hypergraph, write_graph, write_hypergraph};

use crate::error::{Error, Result};

/// Vertex set `0..n` with an ordered multiset of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for e in &mut edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
        }
        Ok(Hypergraph {
            n,
            edges,
            labels: None,
        })
    }

    /// Attach display names for the vertices. Purely cosmetic.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> &[usize] {
        &self.edges[k]
    }

    /// Number of incidences at `v`, counting a repeated id in an edge
    /// once per occurrence.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| e.iter().filter(|&&w| w == v).count())
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Largest edge size `k` (0 for an edgeless hypergraph).
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn first_empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(Vec::is_empty)
    }

    /// Vertex set of edge `k` as a bitmask. Callers guarantee `n <= 64`.
    pub fn edge_mask(&self, k: usize) -> u64 {
        self.edges[k].iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn edge_masks(&self) -> Vec<u64> {
        (0..self.edges.len()).map(|k| self.edge_mask(k)).collect()
    }

    /// The dual hypergraph: vertex `i` is edge `i` of `self`, and vertex
    /// `v` of `self` becomes the edge listing every edge containing it
    /// (once per occurrence). Isolated vertices give empty edges.
    pub fn dual(&self) -> Hypergraph {
        let mut out = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                out[v].push(i);
            }
        }
        Hypergraph {
            n: self.edges.len(),
            edges: out,
            labels: None,
        }
    }

    /// Pad every edge with fresh vertices until all have the maximum edge
    /// size. Returns the padded hypergraph and the padding vertices.
    pub fn uniformize(&self) -> (Hypergraph, Vec<usize>) {
        let k = self.max_edge_size();
        let mut next = self.n;
        let mut padding = Vec::new();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                while e.len() < k {
                    e.push(next);
                    padding.push(next);
                    next += 1;
                }
                e
            })
            .collect();
        (
            Hypergraph {
                n: next,
                edges,
                labels: None,
            },
            padding,
        )
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| v + shift).collect()),
        );
        Hypergraph {
            n: self.n + other.n,
            edges,
            labels: None,
        }
    }

    /// Drop isolated vertices, renumbering the rest in order.
    pub fn without_isolated(&self) -> Hypergraph {
        let degrees = self.degrees();
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if degrees[v] > 0 {
                map[v] = next;
                next += 1;
            }
        }
        Hypergraph {
            n: next,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| map[v]).collect())
                .collect(),
            labels: None,
        }
    }
}

/// A multigraph: a hypergraph in which every edge has exactly two slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let h = Hypergraph::new(n, edges.iter().map(|&(u, v)| vec![u, v]).collect())?;
        Ok(Graph(h))
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Self> {
        if let Some(k) = h.edges.iter().position(|e| e.len() != 2) {
            return Err(Error::Invalid(format!(
                "edge {k} has {} vertices, a graph edge needs 2",
                h.edges[k].len()
            )));
        }
        Ok(Graph(h))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn num_edges(&self) -> usize {
        self.0.edges.len()
    }

    /// Endpoints `(u, v)` of edge `k` with `u <= v`.
    pub fn endpoints(&self, k: usize) -> (usize, usize) {
        let e = &self.0.edges[k];
        (e[0], e[1])
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.num_edges()).map(|k| self.endpoints(k)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.0.degrees()
    }

    pub fn max_degree(&self) -> usize {
        self.0.max_degree()
    }

    pub fn has_loops(&self) -> bool {
        self.edge_list().iter().any(|&(u, v)| u == v)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edge_list()
            .into_iter()
            .all(|(u, v)| u != v && seen.insert((u, v)))
    }

    fn require_simple(&self, what: &'static str) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::NotSimple { what })
        }
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edge_list()
            .into_iter()
            .filter_map(|(a, b)| match (a == v, b == v) {
                (true, false) => Some(b),
                (false, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges with exactly one endpoint in the vertex set `mask`.
    /// Loops are never cut; parallel edges count separately.
    pub fn cut_size(&self, mask: u64) -> usize {
        self.edge_list()
            .into_iter()
            .filter(|&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n()];
        for (u, v) in self.edge_list() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Line graph: one vertex per edge, adjacent when the edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        self.require_simple("line graph")?;
        let edges = self.edge_list();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    out.push((i, j));
                }
            }
        }
        Graph::new(edges.len(), &out)
    }

    /// One hyperedge per vertex: its closed neighbourhood `N[v]` when
    /// `closed`, otherwise the open neighbourhood `N(v)`.
    pub fn neighborhood_hypergraph(&self, closed: bool) -> Result<Hypergraph> {
        self.require_simple("neighbourhood hypergraph")?;
        let edges = (0..self.n())
            .map(|v| {
                let mut e = self.neighbors(v);
                if closed {
                    e.push(v);
                }
                e
            })
            .collect();
        Hypergraph::new(self.n(), edges)
    }

    pub fn delete_edge(&self, k: usize) -> Result<Graph> {
        let m = self.num_edges();
        if k >= m {
            return Err(Error::EdgeOutOfRange { index: k, m });
        }
        let mut edges = self.0.edges.clone();
        edges.remove(k);
        Ok(Graph(Hypergraph {
            n: self.n(),
            edges,
            labels: self.0.labels.clone(),
        }))
    }

    /// Merge the endpoints of edge `k` and drop it. The merged vertex
    /// takes the smaller id and the larger id is removed; other edges
    /// between the two endpoints become loops.
    pub fn contract_edge(&self, k: usize) -> Result<Graph> {
        let m = self.num_edges();
        if k >= m {
            return Err(Error::EdgeOutOfRange { index: k, m });
        }
        let (u, v) = self.endpoints(k);
        if u == v {
            return Err(Error::ContractLoop(k));
        }
        let relabel = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Greater => w - 1,
                std::cmp::Ordering::Less => w,
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edge_list()
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, (a, b))| (relabel(a), relabel(b)))
            .collect();
        Graph::new(self.n() - 1, &edges)
    }
}

impl From<Graph> for Hypergraph {
    fn from(g: Graph) -> Self {
        g.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn line_graph_of_small_paths_and_triangle() {
        let l = path(3).line_graph().unwrap();
        assert_eq!((l.n(), l.edge_list()), (2, vec![(0, 1)]));

        let l = complete(3).line_graph().unwrap();
        assert_eq!(l.n(), 3);
        assert_eq!(l.num_edges(), 3);

        let l = path(4).line_graph().unwrap();
        assert_eq!(l.edge_list(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn line_graph_rejects_multigraphs() {
        let g = Graph::new(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(matches!(g.line_graph(), Err(Error::NotSimple { .. })));
        let g = Graph::new(2, &[(0, 0), (0, 1)]).unwrap();
        assert!(g.line_graph().is_err());
    }

    #[test]
    fn dual_of_single_edge_and_triangle() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let d = h.dual();
        assert_eq!(d.n(), 1);
        assert_eq!(d.edges(), &[vec![0], vec![0]]);

        let k3 = complete(3).into_hypergraph();
        let d = k3.dual();
        // vertex 0 lies in edges 0 (01) and 1 (02), and so on
        assert_eq!(d.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(d.dual(), k3);
    }

    #[test]
    fn dual_keeps_isolated_vertices_as_empty_edges() {
        let h = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        let d = h.dual();
        assert_eq!(d.edges()[2], Vec::<usize>::new());
        assert_eq!(d.dual(), h);
    }

    #[test]
    fn uniformize_pads_with_fresh_vertices() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let (u, s) = h.uniformize();
        assert_eq!(u.edges(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(s, vec![3]);

        let k3 = complete(3).into_hypergraph();
        let (u, s) = k3.uniformize();
        assert_eq!(u, k3);
        assert!(s.is_empty());
    }

    #[test]
    fn neighbourhood_hypergraphs() {
        let p3 = path(3);
        let closed = p3.neighborhood_hypergraph(true).unwrap();
        assert_eq!(closed.edges(), &[vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
        let open = path(2).neighborhood_hypergraph(false).unwrap();
        assert_eq!(open.edges(), &[vec![1], vec![0]]);
    }

    #[test]
    fn contraction_and_deletion() {
        let k3 = complete(3);
        let c = k3.contract_edge(0).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_list(), vec![(0, 1), (0, 1)]);

        let d = path(3).delete_edge(0).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.edge_list(), vec![(1, 2)]);
        assert_eq!(d.as_hypergraph().isolated_vertices(), vec![0]);

        // parallel edge turns into a loop
        let g = Graph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let c = g.contract_edge(1).unwrap();
        assert_eq!(c.edge_list(), vec![(0, 0)]);
        assert_eq!(c.contract_edge(0), Err(Error::ContractLoop(0)));
    }

    #[test]
    fn cut_ignores_loops() {
        let g = Graph::new(2, &[(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.cut_size(0b01), 2);
        assert_eq!(g.cut_size(0b11), 0);
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }
}
