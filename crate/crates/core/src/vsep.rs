//! Exact vertex separation number (equal to pathwidth) by dynamic
//! programming over vertex subsets, and conversion of layouts into path
//! decompositions.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::pathdecomp::PathDecomposition;

/// Default cap on component size for the subset DP.
pub const DEFAULT_MAX_VERTICES: usize = 24;
/// The DP table is indexed by a `u32` subset mask.
pub const HARD_MAX_VERTICES: usize = 32;

/// A linear ordering of the vertices with its vertex separation cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    order: Vec<VertexId>,
    cost: usize,
}

impl Layout {
    /// Checks that `order` is a permutation of `V(g)` and computes its cost:
    /// the largest number of placed vertices with an unplaced neighbour over
    /// all prefixes.
    pub fn new(g: &Graph, order: Vec<VertexId>) -> Result<Layout> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(Error::InvalidLayout(format!(
                "{} positions for {} vertices",
                order.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::InvalidLayout(format!(
                    "vertex {v} is not in the graph"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidLayout(format!("vertex {v} appears twice")));
            }
        }
        let cost = prefix_boundaries(g, &order).into_iter().max().unwrap_or(0);
        Ok(Layout { order, cost })
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn cost(&self) -> usize {
        self.cost
    }
}

/// For each prefix length `0..=n`, the vertices of the prefix that still have
/// a neighbour outside it.
fn prefix_boundary_sets(g: &Graph, order: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // v stays on the boundary from its own position until its last neighbour
    // is placed.
    let mut leaves = vec![0usize; n];
    for &v in order {
        leaves[v] = g
            .neighbors(v)
            .iter()
            .map(|&w| position[w])
            .filter(|&p| p > position[v])
            .max()
            .unwrap_or(position[v]);
    }
    (0..=n)
        .map(|len| {
            order[..len]
                .iter()
                .copied()
                .filter(|&v| leaves[v] >= len)
                .collect()
        })
        .collect()
}

fn prefix_boundaries(g: &Graph, order: &[VertexId]) -> Vec<usize> {
    prefix_boundary_sets(g, order)
        .iter()
        .map(Vec::len)
        .collect()
}

/// Minimum vertex separation over all layouts, with an optimal layout.
/// Components are solved independently and concatenated.
pub fn vertex_separation_exact(g: &Graph) -> Result<Layout> {
    vertex_separation_exact_with_limit(g, DEFAULT_MAX_VERTICES)
}

pub fn vertex_separation_exact_with_limit(g: &Graph, max_vertices: usize) -> Result<Layout> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = max_vertices.min(HARD_MAX_VERTICES);
    let components = g.components();
    if let Some(big) = components.iter().find(|c| c.len() > limit) {
        return Err(Error::TooLarge {
            what: "component size for vertex separation",
            actual: big.len(),
            limit,
        });
    }
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in &components {
        let sub = g.induced_subgraph(comp);
        order.extend(solve_connected(&sub).into_iter().map(|v| comp[v]));
    }
    Layout::new(g, order)
}

pub fn pathwidth_exact(g: &Graph) -> Result<usize> {
    vertex_separation_exact(g).map(|l| l.cost())
}

/// Subset DP over prefixes. `rest(S)` is the best cost of a layout that
/// starts with the vertices of `S`:
/// `rest(S) = max(boundary(S), min_{v not in S} rest(S + v))`, `rest(V) = 0`.
fn solve_connected(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    debug_assert!(n <= HARD_MAX_VERTICES);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let boundary = |s: u32| -> u8 {
        let mut count = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & !s != 0 {
                count += 1;
            }
        }
        count
    };

    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut rest = vec![0u8; full as usize + 1];
    for s in (0..full).rev() {
        let mut best = u8::MAX;
        let mut free = full & !s;
        while free != 0 {
            let v = free.trailing_zeros();
            free &= free - 1;
            best = best.min(rest[(s | 1 << v) as usize]);
        }
        rest[s as usize] = best.max(boundary(s));
    }

    // Build the layout front to back, lowest id first among optimal choices.
    let target = rest[0];
    let mut order = Vec::with_capacity(n);
    let mut s = 0u32;
    while s != full {
        let mut free = full & !s;
        let next = loop {
            let v = free.trailing_zeros();
            free &= free - 1;
            if rest[(s | 1 << v) as usize] <= target {
                break v;
            }
        };
        order.push(next as usize);
        s |= 1 << next;
    }
    order
}

/// Bag `i` is the boundary of the first `i - 1` vertices plus vertex `i`.
/// The width equals the layout cost.
pub fn layout_to_decomposition(g: &Graph, l: &Layout) -> Result<PathDecomposition> {
    // Re-validate: the layout may have been built against another graph.
    let checked = Layout::new(g, l.order().to_vec())?;
    let boundaries = prefix_boundary_sets(g, checked.order());
    let bags = checked
        .order()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut bag = boundaries[i].clone();
            bag.push(v);
            bag
        })
        .collect();
    PathDecomposition::new(bags)
}
