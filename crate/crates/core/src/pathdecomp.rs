//! Path decompositions: the validator, the explicit constructions for
//! products of cliques, and the closed-form pathwidth of `K_m □ K_n`.

use std::fmt;

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// An ordered sequence of non-empty bags. Bags are kept sorted and
/// deduplicated, so two decompositions with equal bag sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathDecomposition {
    bags: Vec<Vec<VertexId>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<VertexId>>) -> Result<PathDecomposition> {
        let mut bags = bags;
        for (i, bag) in bags.iter_mut().enumerate() {
            if bag.is_empty() {
                return Err(Error::InvalidBag {
                    bag: i,
                    reason: "bag is empty".into(),
                });
            }
            bag.sort_unstable();
            bag.dedup();
        }
        Ok(PathDecomposition { bags })
    }

    pub fn bags(&self) -> &[Vec<VertexId>] {
        &self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> Result<usize> {
        self.bags
            .iter()
            .map(|b| b.len() - 1)
            .max()
            .ok_or(Error::EmptyDecomposition)
    }

    /// Maps every vertex through `f`; used to transpose product coordinates.
    pub fn map_vertices(&self, f: impl Fn(VertexId) -> VertexId) -> PathDecomposition {
        PathDecomposition::new(
            self.bags
                .iter()
                .map(|b| b.iter().map(|&v| f(v)).collect())
                .collect(),
        )
        .expect("mapping keeps bags non-empty")
    }
}

/// Which condition of the definition a violation breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Vertex appears in no bag.
    UncoveredVertex(VertexId),
    /// No bag holds both endpoints.
    UncoveredEdge(VertexId, VertexId),
    /// `vertex` is in bags `before` and `after` but not in `gap` (0-based,
    /// `before < gap < after`).
    Disconnected {
        vertex: VertexId,
        before: usize,
        gap: usize,
        after: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::UncoveredVertex(v) => {
                write!(f, "cover-vertices: vertex {} is in no bag", v + 1)
            }
            Violation::UncoveredEdge(u, v) => {
                write!(f, "cover-edges: no bag contains edge {}-{}", u + 1, v + 1)
            }
            Violation::Disconnected {
                vertex,
                before,
                gap,
                after,
            } => write!(
                f,
                "connectivity: vertex {} is in bags {} and {} but not in bag {}",
                vertex + 1,
                before + 1,
                after + 1,
                gap + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks vertex cover, edge cover and that every vertex occupies a
/// contiguous run of bags. Every violation is reported, not only the first.
pub fn validate_path_decomposition(g: &Graph, d: &PathDecomposition) -> Result<ValidationReport> {
    let n = g.vertex_count();
    // occurrences[v] = sorted bag indices containing v
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags().iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::InvalidBag {
                    bag: i,
                    reason: format!("vertex {v} is not in the graph"),
                });
            }
            occurrences[v].push(i);
        }
    }

    let mut violations = Vec::new();
    for (v, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            violations.push(Violation::UncoveredVertex(v));
            continue;
        }
        if let Some(w) = occ.windows(2).find(|w| w[1] != w[0] + 1) {
            violations.push(Violation::Disconnected {
                vertex: v,
                before: w[0],
                gap: w[0] + 1,
                after: w[1],
            });
        }
    }
    for &(u, v) in g.edges() {
        let shared = occurrences[u]
            .iter()
            .any(|i| occurrences[v].binary_search(i).is_ok());
        if !shared {
            violations.push(Violation::UncoveredEdge(u, v));
        }
    }
    Ok(ValidationReport { violations })
}

/// Returns a maximal clique contained in no bag, if there is one. Every
/// valid decomposition holds each clique inside a single bag, so a witness
/// here proves `d` invalid.
pub fn check_cliques_in_bags(g: &Graph, d: &PathDecomposition) -> Result<Option<Vec<VertexId>>> {
    if g.vertex_count() == 0 {
        return Ok(None);
    }
    let cliques = maximal_cliques(g)?;
    Ok(cliques.into_iter().find(|c| {
        !d.bags()
            .iter()
            .any(|bag| c.iter().all(|v| bag.binary_search(v).is_ok()))
    }))
}

/// `pw(K_m □ K_n)` for `2 <= m <= n`: `(m/2)n + m/2 - 1` for even `m`,
/// `ceil(m/2)n - 1` for odd `m`.
pub fn pw_clique_product_formula(m: usize, n: usize) -> Result<usize> {
    if m < 2 || m > n {
        return Err(Error::domain(format!(
            "clique product formula needs 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    Ok(if m.is_multiple_of(2) {
        (m / 2) * n + m / 2 - 1
    } else {
        m.div_ceil(2) * n - 1
    })
}

/// Vertex id of `v_{i,j}` (1-based) in `K_m □ K_n` built by
/// [`Graph::cartesian_product`].
#[inline]
fn v(n: usize, i: usize, j: usize) -> VertexId {
    (i - 1) * n + (j - 1)
}

/// Rows `rows` × columns `cols` of the grid, in id order.
fn block(
    n: usize,
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> impl Iterator<Item = VertexId> {
    rows.flat_map(move |i| cols.clone().map(move |j| v(n, i, j)))
}

/// Decomposition of `K_m □ K_n` for even `m`: bag `k` (1..=n) holds the top
/// half of columns `k..=n` and the bottom half of columns `1..=k`.
pub fn build_decomposition_even(m: usize, n: usize) -> Result<PathDecomposition> {
    if !m.is_multiple_of(2) || m < 2 || m > n {
        return Err(Error::domain(format!(
            "even construction needs even m with 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    let half = m / 2;
    let bags = (1..=n)
        .map(|k| {
            block(n, 1..=half, k..=n)
                .chain(block(n, half + 1..=m, 1..=k))
                .collect()
        })
        .collect();
    PathDecomposition::new(bags)
}

/// Shared index arithmetic of the odd construction.
#[derive(Debug, Clone, Copy)]
struct OddShape {
    m: usize,
    n: usize,
    /// ceil(n/2)
    mid: usize,
    /// floor(m/2)
    lo: usize,
    /// ceil(m/2)
    hi: usize,
}

impl OddShape {
    fn new(m: usize, n: usize) -> Result<OddShape> {
        if m.is_multiple_of(2) || m < 3 || m > n {
            return Err(Error::domain(format!(
                "odd construction needs odd m with 3 <= m <= n, got m={m}, n={n}"
            )));
        }
        Ok(OddShape {
            m,
            n,
            mid: n.div_ceil(2),
            lo: m / 2,
            hi: m.div_ceil(2),
        })
    }

    fn bag_count(&self) -> usize {
        self.mid + self.hi
    }

    /// Bags `1 <= k <= ceil(n/2)`: the first floor(m/2) rows restricted to
    /// columns `k..=n`, plus rows `ceil(m/2)..=m` restricted to columns `1..=k`.
    fn opening_bag(&self, k: usize) -> Vec<VertexId> {
        debug_assert!((1..=self.mid).contains(&k));
        let OddShape { m, n, lo, hi, .. } = *self;
        block(n, 1..=lo, k..=n)
            .chain(block(n, hi..=m, 1..=k))
            .collect()
    }

    /// Bags `ceil(n/2) + 1 <= k <= ceil(n/2) + floor(m/2)`. With
    /// `a = k - ceil(n/2) + floor(m/2)`: rows `1..a` on the right-hand
    /// columns, all of row `a`, and rows `k - ceil(n/2) + ceil(m/2)..=m` on
    /// the left-hand columns.
    fn middle_bag(&self, k: usize) -> Vec<VertexId> {
        debug_assert!((self.mid + 1..=self.mid + self.lo).contains(&k));
        let OddShape { m, n, mid, lo, hi } = *self;
        let row = k - mid + lo;
        let tail_start = k - mid + hi;
        // An empty range when row == 1.
        let upper = block(n, 1..=row - 1, mid + 1..=n);
        let lower = block(n, tail_start..=m, 1..=mid);
        upper
            .chain(block(n, row..=row, 1..=n))
            .chain(lower)
            .collect()
    }

    /// Bag `k = ceil(n/2) + ceil(m/2)`: rows `1..m` on the right-hand columns
    /// plus the whole of row `m`.
    fn closing_bag(&self) -> Vec<VertexId> {
        let OddShape { m, n, mid, .. } = *self;
        block(n, 1..=m - 1, mid + 1..=n)
            .chain(block(n, m..=m, 1..=n))
            .collect()
    }
}

/// Decomposition of `K_m □ K_n` for odd `m` with `ceil(n/2) + ceil(m/2)` bags
/// in three phases; every bag has at most `ceil(m/2) n` vertices.
pub fn build_decomposition_odd(m: usize, n: usize) -> Result<PathDecomposition> {
    let shape = OddShape::new(m, n)?;
    let mut bags = Vec::with_capacity(shape.bag_count());
    bags.extend((1..=shape.mid).map(|k| shape.opening_bag(k)));
    bags.extend((shape.mid + 1..=shape.mid + shape.lo).map(|k| shape.middle_bag(k)));
    bags.push(shape.closing_bag());
    PathDecomposition::new(bags)
}

/// Decomposition of `K_rows □ K_cols` for any `2 <= rows, cols`, in the vertex
/// numbering of `cartesian_product(K_rows, K_cols)`. When `rows > cols` the
/// construction for the transposed product is relabelled.
pub fn build_clique_product_decomposition(rows: usize, cols: usize) -> Result<PathDecomposition> {
    let (m, n) = (rows.min(cols), rows.max(cols));
    let d = if m.is_multiple_of(2) {
        build_decomposition_even(m, n)?
    } else {
        build_decomposition_odd(m, n)?
    };
    if rows <= cols {
        return Ok(d);
    }
    // d is over K_cols □ K_rows; vertex (i, j) there is (j, i) here.
    Ok(d.map_vertices(|x| {
        let (i, j) = (x / rows, x % rows);
        j * cols + i
    }))
}

/// For an ordered partition of an `m`-set into at least three parts, each of
/// size below `ceil(m/2)`, returns the 1-based index `t` of the first part
/// whose prefix sum exceeds `floor(m/2)`. The parts before `t`, part `t`, and
/// the parts after `t` then each have between 1 and `floor(m/2)` elements.
pub fn split_partition(part_sizes: &[usize], m: usize) -> Result<usize> {
    if m < 3 {
        return Err(Error::domain(format!("need at least 3 elements, got {m}")));
    }
    if part_sizes.len() < 3 {
        return Err(Error::domain(format!(
            "need at least 3 parts, got {}",
            part_sizes.len()
        )));
    }
    let cap = m.div_ceil(2);
    if let Some(&bad) = part_sizes.iter().find(|&&s| s == 0 || s >= cap) {
        return Err(Error::domain(format!("part size {bad} outside 1..{cap}")));
    }
    let total: usize = part_sizes.iter().sum();
    if total != m {
        return Err(Error::domain(format!(
            "part sizes sum to {total}, expected {m}"
        )));
    }
    let half = m / 2;
    let mut prefix = 0;
    for (i, &s) in part_sizes.iter().enumerate() {
        prefix += s;
        if prefix > half {
            return Ok(i + 1);
        }
    }
    unreachable!("prefix reaches m > floor(m/2)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique_product(m: usize, n: usize) -> Graph {
        Graph::cartesian_product(&Graph::complete(m).unwrap(), &Graph::complete(n).unwrap())
            .unwrap()
    }

    fn pd(bags: &[&[usize]]) -> PathDecomposition {
        PathDecomposition::new(bags.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validator_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(validate_path_decomposition(&k3, &pd(&[&[0, 1, 2]]))
            .unwrap()
            .is_valid());

        let p3 = Graph::path(3).unwrap();
        let d = pd(&[&[0, 1], &[1, 2]]);
        assert!(validate_path_decomposition(&p3, &d).unwrap().is_valid());
        assert_eq!(d.width().unwrap(), 1);

        let d = pd(&[&[0, 1], &[2], &[1, 2]]);
        let report = validate_path_decomposition(&p3, &d).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::Disconnected {
                vertex: 1,
                before: 0,
                gap: 1,
                after: 2
            }]
        );

        let d = pd(&[&[0, 1], &[0, 2], &[1, 2]]);
        let report = validate_path_decomposition(&p3, &d).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::Disconnected {
                vertex: 1,
                before: 0,
                gap: 1,
                after: 2
            }]
        );
    }

    #[test]
    fn validator_reports_every_violation() {
        let p4 = Graph::path(4).unwrap();
        let d = pd(&[&[0], &[1, 2], &[0]]);
        let report = validate_path_decomposition(&p4, &d).unwrap();
        assert_eq!(
            report.violations,
            vec![
                Violation::Disconnected {
                    vertex: 0,
                    before: 0,
                    gap: 1,
                    after: 2
                },
                Violation::UncoveredVertex(3),
                Violation::UncoveredEdge(0, 1),
                Violation::UncoveredEdge(2, 3),
            ]
        );
    }

    #[test]
    fn validator_rejects_foreign_vertices() {
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            validate_path_decomposition(&p3, &pd(&[&[0, 7]])),
            Err(Error::InvalidBag { bag: 0, .. })
        ));
        assert!(matches!(
            PathDecomposition::new(vec![vec![0], vec![]]),
            Err(Error::InvalidBag { bag: 1, .. })
        ));
    }

    #[test]
    fn width_examples() {
        assert_eq!(pd(&[&[0, 1, 2]]).width().unwrap(), 2);
        assert_eq!(pd(&[&[0], &[0, 1]]).width().unwrap(), 1);
        assert_eq!(build_decomposition_even(4, 4).unwrap().width().unwrap(), 9);
        assert_eq!(
            PathDecomposition::new(vec![]).unwrap().width(),
            Err(Error::EmptyDecomposition)
        );
    }

    #[test]
    fn cliques_in_bags() {
        let k3k3 = clique_product(3, 3);
        let d = build_decomposition_odd(3, 3).unwrap();
        assert_eq!(check_cliques_in_bags(&k3k3, &d).unwrap(), None);

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            check_cliques_in_bags(&k2, &pd(&[&[0], &[1]])).unwrap(),
            Some(vec![0, 1])
        );

        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            check_cliques_in_bags(&p4, &pd(&[&[0, 1], &[1, 2], &[2, 3]])).unwrap(),
            None
        );
    }

    #[test]
    fn formula_values() {
        assert_eq!(pw_clique_product_formula(2, 5).unwrap(), 5);
        assert_eq!(pw_clique_product_formula(4, 4).unwrap(), 9);
        assert_eq!(pw_clique_product_formula(3, 4).unwrap(), 7);
        assert!(pw_clique_product_formula(4, 3).is_err());
        assert!(pw_clique_product_formula(1, 3).is_err());
    }

    #[test]
    fn even_construction_by_hand() {
        // B_1 = {v11, v12} ∪ {v21}, B_2 = {v12} ∪ {v21, v22}
        let d = build_decomposition_even(2, 2).unwrap();
        assert_eq!(d.bags(), &[vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(d.width().unwrap(), 2);
        assert_eq!(build_decomposition_even(2, 3).unwrap().width().unwrap(), 3);
        let d = build_decomposition_even(4, 4).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.bags().iter().all(|b| b.len() == 10));
        assert!(build_decomposition_even(3, 4).is_err());
    }

    #[test]
    fn odd_phases_transcribed_for_3x3() {
        // mid = 2, lo = 1, hi = 2; ids are 3(i-1) + (j-1).
        let s = OddShape::new(3, 3).unwrap();
        // k=1: row 1 cols 1..3, rows 2..3 col 1
        assert_eq!(s.opening_bag(1), vec![0, 1, 2, 3, 6]);
        // k=2: row 1 cols 2..3, rows 2..3 cols 1..2
        assert_eq!(s.opening_bag(2), vec![1, 2, 3, 4, 6, 7]);
        // k=3: a = 2; row 1 col 3, row 2 all, row 3 cols 1..2
        assert_eq!(s.middle_bag(3), vec![2, 3, 4, 5, 6, 7]);
        // k=4: rows 1..2 col 3, row 3 all
        assert_eq!(s.closing_bag(), vec![2, 5, 6, 7, 8]);
    }

    #[test]
    fn odd_phases_transcribed_for_5x6() {
        // mid = 3, lo = 2, hi = 3; ids are 6(i-1) + (j-1).
        let s = OddShape::new(5, 6).unwrap();
        let ids = |cells: &[(usize, usize)]| {
            let mut out: Vec<_> = cells.iter().map(|&(i, j)| v(6, i, j)).collect();
            out.sort_unstable();
            out
        };
        let sorted = |mut b: Vec<usize>| {
            b.sort_unstable();
            b
        };
        // k=2: rows 1..2 cols 2..6, rows 3..5 cols 1..2
        let mut want = Vec::new();
        for i in 1..=2 {
            for j in 2..=6 {
                want.push((i, j));
            }
        }
        for i in 3..=5 {
            for j in 1..=2 {
                want.push((i, j));
            }
        }
        assert_eq!(sorted(s.opening_bag(2)), ids(&want));
        // k=5: a = 4; rows 1..3 cols 4..6, row 4 all, rows 5..5 cols 1..3
        let mut want = Vec::new();
        for i in 1..=3 {
            for j in 4..=6 {
                want.push((i, j));
            }
        }
        for j in 1..=6 {
            want.push((4, j));
        }
        for j in 1..=3 {
            want.push((5, j));
        }
        assert_eq!(sorted(s.middle_bag(5)), ids(&want));
        // k=4: a = 3; rows 1..2 cols 4..6, row 3 all, rows 4..5 cols 1..3
        let mut want = Vec::new();
        for i in 1..=2 {
            for j in 4..=6 {
                want.push((i, j));
            }
        }
        for j in 1..=6 {
            want.push((3, j));
        }
        for i in 4..=5 {
            for j in 1..=3 {
                want.push((i, j));
            }
        }
        assert_eq!(sorted(s.middle_bag(4)), ids(&want));
        // closing: rows 1..4 cols 4..6, row 5 all
        let mut want = Vec::new();
        for i in 1..=4 {
            for j in 4..=6 {
                want.push((i, j));
            }
        }
        for j in 1..=6 {
            want.push((5, j));
        }
        assert_eq!(sorted(s.closing_bag()), ids(&want));
    }

    #[test]
    fn odd_construction_sizes() {
        for &(m, n, bags, bound) in &[(3, 3, 4, 5), (3, 4, 4, 7), (5, 5, 6, 14)] {
            let d = build_decomposition_odd(m, n).unwrap();
            assert_eq!(d.len(), bags);
            assert!(d.width().unwrap() <= bound);
            assert!(validate_path_decomposition(&clique_product(m, n), &d)
                .unwrap()
                .is_valid());
        }
        assert!(build_decomposition_odd(4, 4).is_err());
        assert!(build_decomposition_odd(5, 4).is_err());
    }

    #[test]
    fn constructions_validate_up_to_ten() {
        for m in 2..=10 {
            for n in m..=10 {
                let g = clique_product(m, n);
                let d = build_clique_product_decomposition(m, n).unwrap();
                let report = validate_path_decomposition(&g, &d).unwrap();
                assert!(report.is_valid(), "m={m} n={n}: {:?}", report.violations);
                let f = pw_clique_product_formula(m, n).unwrap();
                if m.is_multiple_of(2) {
                    assert_eq!(d.width().unwrap(), f);
                } else {
                    assert!(d.width().unwrap() <= f);
                }
            }
        }
    }

    #[test]
    fn transposed_construction() {
        let g = clique_product(5, 3);
        let d = build_clique_product_decomposition(5, 3).unwrap();
        assert!(validate_path_decomposition(&g, &d).unwrap().is_valid());
        assert_eq!(d.width().unwrap(), pw_clique_product_formula(3, 5).unwrap());
    }

    #[test]
    fn bag_order_matters() {
        let p3 = Graph::path(3).unwrap();
        let d = pd(&[&[0, 1], &[1, 2], &[2]]);
        assert!(validate_path_decomposition(&p3, &d).unwrap().is_valid());
        let shuffled = pd(&[&[1, 2], &[0, 1], &[2]]);
        assert!(!validate_path_decomposition(&p3, &shuffled)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_partition(&[1, 1, 1], 3).unwrap(), 2);
        assert_eq!(split_partition(&[2, 2, 1, 1], 6).unwrap(), 2);
        assert!(split_partition(&[1, 2], 3).is_err());
        assert!(split_partition(&[3, 1, 1, 1], 6).is_err());
        assert!(split_partition(&[1, 1, 1], 4).is_err());
    }

    #[test]
    fn split_matches_brute_force_on_example() {
        // every t that satisfies the three inequalities, by direct summation
        let parts = [2, 2, 1, 1];
        let half = 3;
        let ok: Vec<usize> = (1..=parts.len())
            .filter(|&t| {
                let pre: usize = parts[..t - 1].iter().sum();
                let suf: usize = parts[t..].iter().sum();
                (1..=half).contains(&pre)
                    && (1..=half).contains(&parts[t - 1])
                    && (1..=half).contains(&suf)
            })
            .collect();
        assert_eq!(ok, vec![2]);
        assert!(ok.contains(&split_partition(&parts, 6).unwrap()));
    }
}
