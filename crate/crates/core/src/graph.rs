//! Simple undirected graphs over ordered labels.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

/// A finite simple graph.
///
/// Vertices are kept sorted and deduplicated, so the position of a label in
/// [`Graph::vertices`] is its index everywhere else in the crate. Edges are
/// stored once as `(u, v)` index pairs with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph<V> {
    vertices: Vec<V>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<FixedBitSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    SelfLoop,
    /// An edge endpoint is not in the vertex set.
    UnknownEndpoint,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop => f.write_str("edge joins a vertex to itself"),
            GraphError::UnknownEndpoint => f.write_str("edge endpoint is not a vertex"),
        }
    }
}

impl core::error::Error for GraphError {}

impl<V: Ord> Graph<V> {
    /// Builds a graph from labels and label pairs. Repeated vertices and
    /// repeated (or reversed) edges collapse.
    pub fn new<I, E>(vertices: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = (V, V)>,
    {
        let mut vertices: Vec<V> = vertices.into_iter().collect();
        vertices.sort();
        vertices.dedup();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let u = vertices.binary_search(&a).map_err(|_| GraphError::UnknownEndpoint)?;
            let v = vertices.binary_search(&b).map_err(|_| GraphError::UnknownEndpoint)?;
            if u == v {
                return Err(GraphError::SelfLoop);
            }
            pairs.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_index_edges(vertices, pairs))
    }

    /// Builds a graph whose vertex set is exactly the endpoints of `edges`.
    pub fn from_edges<E>(edges: E) -> Result<Self, GraphError>
    where
        V: Clone,
        E: IntoIterator<Item = (V, V)>,
    {
        let edges: Vec<(V, V)> = edges.into_iter().collect();
        let vertices: Vec<V> = edges
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        Self::new(vertices, edges)
    }

    /// Index of a label, if present.
    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Edge index of the pair `{a, b}`, if it is an edge.
    pub fn edge_between(&self, a: &V, b: &V) -> Option<usize> {
        let u = self.index_of(a)?;
        let v = self.index_of(b)?;
        self.edge_index(u, v)
    }

    pub fn contains_edge(&self, a: &V, b: &V) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// Induced subgraph on the vertices satisfying `keep`.
    pub fn induced<F>(&self, mut keep: F) -> Graph<V>
    where
        V: Clone,
        F: FnMut(&V) -> bool,
    {
        let kept: Vec<bool> = self.vertices.iter().map(&mut keep).collect();
        let mut remap = Vec::with_capacity(self.vertices.len());
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            remap.push(vertices.len());
            if kept[i] {
                vertices.push(v.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| kept[u] && kept[v])
            .map(|&(u, v)| (remap[u], remap[v]))
            .collect();
        Graph::from_index_edges(vertices, edges)
    }

    /// Relabels every vertex. `f` must be injective on the vertex set.
    pub fn map_labels<W: Ord + Clone, F: FnMut(&V) -> W>(&self, f: F) -> Result<Graph<W>, GraphError> {
        let labels: Vec<W> = self.vertices.iter().map(f).collect();
        Graph::new(
            labels.iter().cloned(),
            self.edges
                .iter()
                .map(|&(u, v)| (labels[u].clone(), labels[v].clone())),
        )
    }
}

impl<V> Graph<V> {
    /// Builds from already-sorted unique labels and index pairs.
    pub(crate) fn from_index_edges(vertices: Vec<V>, mut edges: Vec<(usize, usize)>) -> Self {
        let n = vertices.len();
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &edges {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Graph {
            vertices,
            edges,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &V {
        &self.vertices[i]
    }

    /// Edges as sorted index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as label pairs, in index order.
    pub fn edge_labels(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.edges
            .iter()
            .map(move |&(u, v)| (&self.vertices[u], &self.vertices[v]))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].count_ones(..)
    }

    /// Whether every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }
}

impl<V: fmt::Debug> fmt::Debug for Graph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|&(u, v)| (&self.vertices[u], &self.vertices[v]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_duplicates_and_reversals() {
        let g = Graph::new([3, 1, 2, 1], [(1, 2), (2, 1), (3, 2)]).unwrap();
        assert_eq!(g.vertices(), &[1, 2, 3]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.contains_edge(&2, &1));
        assert!(!g.contains_edge(&1, &3));
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_loops_and_unknown_endpoints() {
        assert_eq!(Graph::new([1, 2], [(1, 1)]), Err(GraphError::SelfLoop));
        assert_eq!(Graph::new([1, 2], [(1, 5)]), Err(GraphError::UnknownEndpoint));
    }

    #[test]
    fn induced_subgraph_keeps_only_inner_edges() {
        let k4 = Graph::new(0..4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_complete());
        let tri = k4.induced(|&v| v != 2);
        assert_eq!(tri.vertices(), &[0, 1, 3]);
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.contains_edge(&1, &3));
    }

    #[test]
    fn empty_graph() {
        let g: Graph<u8> = Graph::new([], []).unwrap();
        assert!(g.is_empty());
        assert!(g.is_complete());
    }
}
