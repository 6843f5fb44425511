//! Maximum and maximal cliques by Bron–Kerbosch with Tomita pivoting over
//! 64-bit vertex masks.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest graph the bitmask enumeration accepts.
pub const MAX_CLIQUE_VERTICES: usize = 64;

fn masks(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: MAX_CLIQUE_VERTICES,
        });
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(adj)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let adj = masks(g)?;
    let mut best = 0;
    max_clique(&adj, 0, full_mask(g.vertex_count()), &mut best);
    Ok(best)
}

fn max_clique(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let pivot = bits(cand)
        .max_by_key(|&u| (adj[u] & cand).count_ones())
        .expect("cand is non-empty");
    for v in bits(cand & !adj[pivot]) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        max_clique(adj, size + 1, cand & adj[v], best);
        cand &= !(1 << v);
    }
}

/// All maximal cliques, each sorted ascending, in discovery order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    let adj = masks(g)?;
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, full_mask(g.vertex_count()), 0, &mut out);
    Ok(out)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<Vec<VertexId>>) {
    if p == 0 {
        if x == 0 {
            out.push(bits(r).collect());
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p is non-empty");
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
