//! Immutable simple undirected graphs, generators and Cartesian products.
//!
//! Vertices are dense indices `0..n`. Product graphs additionally carry
//! 1-based coordinates `(i, j)` where `i` indexes the left factor and `j` the
//! right factor; vertex `(i, j)` of `G □ H` has id `(i - 1) * |V(H)| + (j - 1)`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// 1-based product coordinate `(row, column)`.
pub type Coord = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
    coords: Option<Vec<Coord>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; the edge list is stored in canonical order.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, "endpoint out of range"));
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            coords: None,
        })
    }

    /// `P_n`: vertices `0..n`, edges `(i, i + 1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// `G □ H`: `(x, y) ~ (s, t)` iff `x = s` and `y ~ t` in `H`, or `y = t`
    /// and `x ~ s` in `G`.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
        if g.n == 0 || h.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let width = h.n;
        let id = |x: usize, y: usize| x * width + y;
        let mut edges = Vec::with_capacity(g.n * h.edges.len() + h.n * g.edges.len());
        for x in 0..g.n {
            for &(a, b) in &h.edges {
                edges.push((id(x, a), id(x, b)));
            }
        }
        for y in 0..h.n {
            for &(a, b) in &g.edges {
                edges.push((id(a, y), id(b, y)));
            }
        }
        let mut product = Graph::new(g.n * h.n, &edges)?;
        product.coords = Some(
            (0..g.n)
                .flat_map(|x| (0..h.n).map(move |y| (x + 1, y + 1)))
                .collect(),
        );
        Ok(product)
    }

    /// Attaches product coordinates. The coordinates must be a bijection onto
    /// `[1..m] × [1..n]` and the edge set must follow the Cartesian product
    /// rule for the factors they induce.
    pub fn with_coords(mut self, coords: Vec<Coord>) -> Result<Graph> {
        if coords.len() != self.n {
            return Err(Error::domain(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                self.n
            )));
        }
        self.coords = Some(coords);
        if self.factors().is_none() {
            return Err(Error::domain(
                "coordinates do not describe a Cartesian product",
            ));
        }
        Ok(self)
    }

    pub fn without_coords(mut self) -> Graph {
        self.coords = None;
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn coords(&self) -> Option<&[Coord]> {
        self.coords.as_deref()
    }

    /// Dimensions `(m, n)` of the coordinate grid, if any.
    pub fn grid_dims(&self) -> Option<(usize, usize)> {
        let coords = self.coords.as_ref()?;
        let m = coords.iter().map(|c| c.0).max()?;
        let n = coords.iter().map(|c| c.1).max()?;
        Some((m, n))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced edges are in range")
    }

    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let key = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::new(self.n, &edges).expect("subset of valid edges")
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: VertexId) -> Graph {
        let keep: Vec<_> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Contracts edge `{u, v}` into `min(u, v)`; the other endpoint is removed
    /// and higher ids shift down by one.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v, "not an edge"));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |w: VertexId| {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (map(a), map(b)))
            .filter(|&(a, b)| a != b)
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    /// Renames vertex `v` to `perm[v]`. Coordinates follow their vertices.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::domain(
                "permutation length differs from vertex count",
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::domain("not a permutation"));
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        let mut g = Graph::new(self.n, &edges)?;
        if let Some(coords) = &self.coords {
            let mut moved = vec![(0, 0); self.n];
            for (v, &c) in coords.iter().enumerate() {
                moved[perm[v]] = c;
            }
            g.coords = Some(moved);
        }
        Ok(g)
    }

    /// Recovers the factors `(G, H)` from the coordinates and checks that the
    /// edge set is exactly the Cartesian product of them. Factor vertex `i - 1`
    /// corresponds to coordinate `i`.
    pub fn factors(&self) -> Option<(Graph, Graph)> {
        let coords = self.coords.as_ref()?;
        let (m, n) = self.grid_dims()?;
        if m * n != self.n || coords.iter().any(|&(i, j)| i == 0 || j == 0) {
            return None;
        }
        let mut at = vec![usize::MAX; m * n];
        for (v, &(i, j)) in coords.iter().enumerate() {
            let slot = &mut at[(i - 1) * n + (j - 1)];
            if *slot != usize::MAX {
                return None;
            }
            *slot = v;
        }
        let vertex = |i: usize, j: usize| at[i * n + j];

        let mut left = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.has_edge(vertex(a, 0), vertex(b, 0)) {
                    left.push((a, b));
                }
            }
        }
        let mut right = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.has_edge(vertex(0, a), vertex(0, b)) {
                    right.push((a, b));
                }
            }
        }
        let g = Graph::new(m, &left).ok()?;
        let h = Graph::new(n, &right).ok()?;
        if self.edge_count() != m * h.edge_count() + n * g.edge_count() {
            return None;
        }
        for &(a, b) in self.edges() {
            let (x, y) = coords[a];
            let (s, t) = coords[b];
            let ok = (x == s && h.has_edge(y - 1, t - 1)) || (y == t && g.has_edge(x - 1, s - 1));
            if !ok {
                return None;
            }
        }
        Some((g, h))
    }

    /// True iff the graph is `P_n` with vertices in path order.
    pub fn is_path_in_order(&self) -> bool {
        self.n >= 1
            && self.edges.len() == self.n - 1
            && self.edges.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n * (self.n - 1) / 2
    }
}

/// Shape of a product graph whose factors are both paths or cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Path(usize),
    Clique(usize),
    Other(usize),
}

impl Factor {
    pub fn classify(g: &Graph) -> Factor {
        let n = g.vertex_count();
        // K_1 and K_2 are both paths and cliques; prefer clique.
        if g.is_complete() {
            Factor::Clique(n)
        } else if g.is_path_in_order() {
            Factor::Path(n)
        } else {
            Factor::Other(n)
        }
    }

    pub fn order(self) -> usize {
        match self {
            Factor::Path(n) | Factor::Clique(n) | Factor::Other(n) => n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_are_merged() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let g = Graph::new(3, &[(1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn invalid_edges() {
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::InvalidEdge(0, 2, _))
        ));
        assert!(matches!(
            Graph::new(2, &[(1, 1)]),
            Err(Error::InvalidEdge(1, 1, _))
        ));
    }

    #[test]
    fn paths() {
        assert_eq!(Graph::path(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::path(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(Graph::path(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::path(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn cliques() {
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(2).unwrap().edge_count(), 1);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn product_sizes() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = Graph::cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let k3p3 = Graph::cartesian_product(&Graph::complete(3).unwrap(), &Graph::path(3).unwrap())
            .unwrap();
        assert_eq!((k3p3.vertex_count(), k3p3.edge_count()), (9, 15));

        let p3 = Graph::path(3).unwrap();
        let grid = Graph::cartesian_product(&p3, &p3).unwrap();
        assert_eq!((grid.vertex_count(), grid.edge_count()), (9, 12));
        assert!(grid.is_connected());
    }

    #[test]
    fn product_coordinates_follow_id_encoding() {
        let g = Graph::complete(3).unwrap();
        let h = Graph::path(4).unwrap();
        let p = Graph::cartesian_product(&g, &h).unwrap();
        let coords = p.coords().unwrap();
        for (v, &(i, j)) in coords.iter().enumerate() {
            assert_eq!(v, (i - 1) * 4 + (j - 1));
        }
        assert_eq!(p.grid_dims(), Some((3, 4)));
        let (fg, fh) = p.factors().unwrap();
        assert_eq!(fg, g);
        assert_eq!(fh, h);
    }

    #[test]
    fn product_of_empty_is_error() {
        let g = Graph::new(0, &[]).unwrap();
        let h = Graph::path(2).unwrap();
        assert_eq!(Graph::cartesian_product(&g, &h), Err(Error::EmptyGraph));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::new(2, &[]).unwrap().is_connected());
        assert_eq!(
            Graph::new(4, &[(0, 2)]).unwrap().components(),
            vec![vec![0, 2], vec![1], vec![3]]
        );
    }

    #[test]
    fn with_coords_rejects_non_products() {
        // A 4-cycle labelled as a 2x2 grid is fine; a path is not.
        let c4 = Graph::new(4, &[(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let coords = vec![(1, 1), (1, 2), (2, 1), (2, 2)];
        assert!(c4.clone().with_coords(coords.clone()).is_ok());
        let p4 = Graph::path(4).unwrap();
        assert!(p4.with_coords(coords).is_err());
        assert!(c4
            .with_coords(vec![(1, 1), (1, 1), (2, 1), (2, 2)])
            .is_err());
    }

    #[test]
    fn contraction_and_deletion() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k3 = c4.contract_edge(0, 1).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(c4.without_edge(3, 0).edge_count(), 3);
        let p3 = c4.without_vertex(0);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert!(c4.contract_edge(0, 2).is_err());
    }

    #[test]
    fn factor_classification() {
        assert_eq!(Factor::classify(&Graph::path(5).unwrap()), Factor::Path(5));
        assert_eq!(
            Factor::classify(&Graph::complete(2).unwrap()),
            Factor::Clique(2)
        );
        assert_eq!(
            Factor::classify(&Graph::new(3, &[(0, 2)]).unwrap()),
            Factor::Other(3)
        );
    }
}
