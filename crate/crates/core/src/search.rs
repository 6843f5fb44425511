//! The edge-search game.
//!
//! Searchers are placed on vertices, removed from vertices, or moved along
//! edges. A move `u -> v` clears `uv` when, just before the move, either
//! (i) at least two searchers stand on `u`, or (ii) at least one searcher
//! stands on `u` and every other edge at `u` is already clear. After every
//! action, a clear edge that shares a searcher-free endpoint with a dirty
//! edge becomes dirty again, repeated until nothing changes.
//!
//! Two solvers are provided. [`SearchMode::Monotone`] searches over sets of
//! cleared edges with a canonical guard placement (one searcher on every
//! vertex that touches both a clear and a dirty edge); [`SearchMode::Full`]
//! explores the literal state space of searcher positions and cleared sets
//! and allows recontamination. Every strategy either solver returns has been
//! replayed through [`validate_strategy`].

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::vsep::vertex_separation_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchAction {
    Place(VertexId),
    Remove(VertexId),
    /// Move one searcher from the first vertex to the second along an edge.
    Move(VertexId, VertexId),
}

impl SearchAction {
    fn kind(&self) -> &'static str {
        match self {
            SearchAction::Place(_) => "place",
            SearchAction::Remove(_) => "remove",
            SearchAction::Move(..) => "move",
        }
    }

    /// Renames the vertices the action touches.
    pub fn map(self, f: impl Fn(VertexId) -> VertexId) -> SearchAction {
        match self {
            SearchAction::Place(v) => SearchAction::Place(f(v)),
            SearchAction::Remove(v) => SearchAction::Remove(f(v)),
            SearchAction::Move(u, v) => SearchAction::Move(f(u), f(v)),
        }
    }
}

impl fmt::Display for SearchAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SearchAction::Place(v) => write!(f, "place {}", v + 1),
            SearchAction::Remove(v) => write!(f, "remove {}", v + 1),
            SearchAction::Move(u, v) => write!(f, "move {} -> {}", u + 1, v + 1),
        }
    }
}

/// Searcher positions, the unused reserve and the set of clear edges
/// (indexed as in [`Graph::edges`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchState {
    occupancy: Vec<u32>,
    reserve: u32,
    cleared: FixedBitSet,
}

impl SearchState {
    /// All `k` searchers in reserve, every edge dirty.
    pub fn new(g: &Graph, k: usize) -> SearchState {
        SearchState {
            occupancy: vec![0; g.vertex_count()],
            reserve: k as u32,
            cleared: FixedBitSet::with_capacity(g.edge_count()),
        }
    }

    /// Builds an arbitrary state; `budget` is `occupancy` plus `reserve`.
    pub fn from_parts(
        g: &Graph,
        occupancy: Vec<u32>,
        reserve: u32,
        cleared: impl IntoIterator<Item = usize>,
    ) -> Result<SearchState> {
        if occupancy.len() != g.vertex_count() {
            return Err(Error::domain("occupancy length differs from vertex count"));
        }
        let mut set = FixedBitSet::with_capacity(g.edge_count());
        for e in cleared {
            if e >= g.edge_count() {
                return Err(Error::domain(format!("edge index {e} out of range")));
            }
            set.insert(e);
        }
        Ok(SearchState {
            occupancy,
            reserve,
            cleared: set,
        })
    }

    pub fn occupancy(&self) -> &[u32] {
        &self.occupancy
    }

    pub fn reserve(&self) -> u32 {
        self.reserve
    }

    pub fn budget(&self) -> usize {
        self.reserve as usize + self.occupancy.iter().map(|&c| c as usize).sum::<usize>()
    }

    pub fn is_cleared(&self, edge: usize) -> bool {
        self.cleared.contains(edge)
    }

    pub fn cleared_count(&self) -> usize {
        self.cleared.count_ones(..)
    }

    pub fn cleared_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.cleared.ones()
    }

    pub fn all_clear(&self) -> bool {
        self.cleared.is_full()
    }
}

/// Result of one action: the new state and what happened on the way.
#[derive(Debug, Clone)]
pub struct Transition {
    pub state: SearchState,
    /// Edge index cleared by a move, if the move cleared one.
    pub cleared_edge: Option<usize>,
    /// Number of clear edges that became dirty.
    pub recontaminated: usize,
}

fn step(g: &Graph, s: &SearchState, a: SearchAction) -> std::result::Result<Transition, String> {
    let n = g.vertex_count();
    let in_range = |v: VertexId| {
        if v < n {
            Ok(())
        } else {
            Err(format!("vertex {} is not in the graph", v + 1))
        }
    };
    let mut next = s.clone();
    let mut cleared_edge = None;
    match a {
        SearchAction::Place(v) => {
            in_range(v)?;
            if next.reserve == 0 {
                return Err("no searcher left in reserve".into());
            }
            next.reserve -= 1;
            next.occupancy[v] += 1;
        }
        SearchAction::Remove(v) => {
            in_range(v)?;
            if next.occupancy[v] == 0 {
                return Err(format!("no searcher on vertex {}", v + 1));
            }
            next.occupancy[v] -= 1;
            next.reserve += 1;
        }
        SearchAction::Move(u, v) => {
            in_range(u)?;
            in_range(v)?;
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| format!("{}-{} is not an edge", u + 1, v + 1))?;
            if next.occupancy[u] == 0 {
                return Err(format!("no searcher on vertex {}", u + 1));
            }
            let doubled = next.occupancy[u] >= 2;
            let others_clear = g.neighbors(u).iter().filter(|&&w| w != v).all(|&w| {
                s.cleared
                    .contains(g.edge_index(u, w).expect("neighbour edge"))
            });
            if !s.cleared.contains(e) && (doubled || others_clear) {
                next.cleared.insert(e);
                cleared_edge = Some(e);
            }
            next.occupancy[u] -= 1;
            next.occupancy[v] += 1;
        }
    }
    let recontaminated = close(g, &mut next);
    Ok(Transition {
        state: next,
        cleared_edge,
        recontaminated,
    })
}

/// Applies one action. Moves along an edge always succeed; they clear the
/// edge only when rule (i) or (ii) holds before the move.
pub fn apply_action(g: &Graph, s: &SearchState, a: SearchAction) -> Result<SearchState> {
    step(g, s, a)
        .map(|t| t.state)
        .map_err(|reason| Error::IllegalAction {
            step: None,
            kind: a.kind().into(),
            reason,
        })
}

/// Like [`apply_action`], also reporting the cleared edge and the number of
/// recontaminated edges.
pub fn apply_action_traced(g: &Graph, s: &SearchState, a: SearchAction) -> Result<Transition> {
    step(g, s, a).map_err(|reason| Error::IllegalAction {
        step: None,
        kind: a.kind().into(),
        reason,
    })
}

/// Recontamination to a fixpoint: a clear edge with a searcher-free endpoint
/// that also touches a dirty edge becomes dirty.
pub fn recontamination_closure(g: &Graph, s: &SearchState) -> SearchState {
    let mut next = s.clone();
    close(g, &mut next);
    next
}

/// In-place closure; returns how many edges were recontaminated.
fn close(g: &Graph, s: &mut SearchState) -> usize {
    let edge_at = |u: VertexId, w: VertexId| g.edge_index(u, w).expect("neighbour edge");
    let touches_dirty = |s: &SearchState, u: VertexId| {
        g.neighbors(u)
            .iter()
            .any(|&w| !s.cleared.contains(edge_at(u, w)))
    };
    let mut queue: VecDeque<VertexId> = (0..g.vertex_count())
        .filter(|&u| s.occupancy[u] == 0)
        .collect();
    let mut lost = 0;
    while let Some(u) = queue.pop_front() {
        if s.occupancy[u] != 0 || !touches_dirty(s, u) {
            continue;
        }
        for &w in g.neighbors(u) {
            let e = edge_at(u, w);
            if s.cleared.contains(e) {
                s.cleared.set(e, false);
                lost += 1;
                if s.occupancy[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
    }
    lost
}

/// A searcher budget and a sequence of actions starting from the empty state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStrategy {
    pub k: usize,
    pub actions: Vec<SearchAction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyReport {
    /// Every edge is clear after the last action.
    pub success: bool,
    /// `Some(len)` when the actions ran out with dirty edges left.
    pub step_of_failure: Option<usize>,
    /// No action recontaminated an edge.
    pub monotone: bool,
    pub recontaminations: usize,
    /// Edges still dirty at the end.
    pub dirty_edges: Vec<(VertexId, VertexId)>,
}

/// Replays `strat` from the empty state. Illegal actions are reported as
/// [`Error::IllegalAction`] with their 0-based step index.
pub fn validate_strategy(g: &Graph, strat: &SearchStrategy) -> Result<StrategyReport> {
    let mut state = SearchState::new(g, strat.k);
    let mut recontaminations = 0;
    let mut monotone = true;
    for (i, &a) in strat.actions.iter().enumerate() {
        let t = step(g, &state, a).map_err(|reason| Error::IllegalAction {
            step: Some(i),
            kind: a.kind().into(),
            reason,
        })?;
        if t.recontaminated > 0 {
            monotone = false;
            recontaminations += t.recontaminated;
        }
        state = t.state;
    }
    let dirty_edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| !state.is_cleared(e))
        .map(|(_, &uv)| uv)
        .collect();
    let success = dirty_edges.is_empty();
    Ok(StrategyReport {
        success,
        step_of_failure: (!success).then_some(strat.actions.len()),
        monotone,
        recontaminations,
        dirty_edges,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Cleared set never shrinks.
    Monotone,
    /// Recontamination allowed.
    Full,
}

/// Size guards for the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub monotone_max_vertices: usize,
    pub full_max_vertices: usize,
    pub full_max_edges: usize,
}

/// Edge sets in the monotone solver are `u128` masks.
pub const MONOTONE_MAX_EDGES: usize = 128;

/// Environment variable that raises the vertex guards.
pub const MAX_VERTICES_ENV: &str = "SWEEPKIT_MAX_VERTICES";

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            monotone_max_vertices: 16,
            full_max_vertices: 12,
            full_max_edges: 18,
        }
    }
}

impl SearchLimits {
    /// Defaults, with the vertex guards replaced by `SWEEPKIT_MAX_VERTICES`
    /// when it is set to a number.
    pub fn from_env() -> SearchLimits {
        let mut limits = SearchLimits::default();
        if let Some(v) = std::env::var(MAX_VERTICES_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.monotone_max_vertices = v;
            limits.full_max_vertices = v;
        }
        limits
    }

    fn check(&self, g: &Graph, mode: SearchMode) -> Result<()> {
        let too_large = |what, actual, limit| {
            Err(Error::TooLarge {
                what,
                actual,
                limit,
            })
        };
        match mode {
            SearchMode::Monotone => {
                if g.vertex_count() > self.monotone_max_vertices {
                    return too_large("vertex count", g.vertex_count(), self.monotone_max_vertices);
                }
                if g.edge_count() > MONOTONE_MAX_EDGES {
                    return too_large("edge count", g.edge_count(), MONOTONE_MAX_EDGES);
                }
            }
            SearchMode::Full => {
                if g.vertex_count() > self.full_max_vertices {
                    return too_large("vertex count", g.vertex_count(), self.full_max_vertices);
                }
                if g.edge_count() > self.full_max_edges {
                    return too_large("edge count", g.edge_count(), self.full_max_edges);
                }
            }
        }
        Ok(())
    }
}

/// Decides whether `k` searchers can clear `g` under `mode`, returning a
/// validated strategy when they can.
pub fn decide_search_with_k(
    g: &Graph,
    k: usize,
    mode: SearchMode,
) -> Result<Option<SearchStrategy>> {
    SearchSolver::default().decide(g, k, mode)
}

/// Smallest `k` with a winning strategy, and the strategy.
pub fn exact_search_number(g: &Graph) -> Result<(usize, SearchStrategy)> {
    SearchSolver::default().exact(g, SearchMode::Monotone)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchSolver {
    pub limits: SearchLimits,
}

impl SearchSolver {
    pub fn new(limits: SearchLimits) -> SearchSolver {
        SearchSolver { limits }
    }

    pub fn decide(&self, g: &Graph, k: usize, mode: SearchMode) -> Result<Option<SearchStrategy>> {
        self.limits.check(g, mode)?;
        let strategy = match mode {
            SearchMode::Monotone => monotone_search(g, k),
            SearchMode::Full => literal_search(g, k, SearchMode::Full),
        };
        Ok(strategy.map(|s| certify(g, s, mode)))
    }

    /// Solves each component separately, starting at its vertex separation
    /// number and counting upward. The combined strategy clears components
    /// one after another, lifting all searchers between them.
    pub fn exact(&self, g: &Graph, mode: SearchMode) -> Result<(usize, SearchStrategy)> {
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        let mut actions = Vec::new();
        for comp in g.components() {
            let sub = g.induced_subgraph(&comp);
            if sub.edge_count() == 0 {
                continue;
            }
            self.limits.check(&sub, mode)?;
            let start = vertex_separation_exact(&sub)?.cost();
            let (k, strat) = (start..=sub.vertex_count() + 1)
                .find_map(|k| {
                    self.decide(&sub, k, mode)
                        .transpose()
                        .map(|r| r.map(|s| (k, s)))
                })
                .expect("|V| + 1 searchers always suffice")?;
            best = best.max(k);
            let mut occupancy = vec![0u32; sub.vertex_count()];
            for a in strat.actions {
                match a {
                    SearchAction::Place(v) => occupancy[v] += 1,
                    SearchAction::Remove(v) => occupancy[v] -= 1,
                    SearchAction::Move(u, v) => {
                        occupancy[u] -= 1;
                        occupancy[v] += 1;
                    }
                }
                actions.push(a.map(|v| comp[v]));
            }
            for (v, &c) in occupancy.iter().enumerate() {
                actions.extend(std::iter::repeat_n(
                    SearchAction::Remove(comp[v]),
                    c as usize,
                ));
            }
        }
        // Lifting searchers after the last component achieves nothing.
        while matches!(actions.last(), Some(SearchAction::Remove(_))) {
            actions.pop();
        }
        let strat = SearchStrategy { k: best, actions };
        Ok((best, certify(g, strat, mode)))
    }
}

/// Replays a solver-produced strategy; a failure here is a solver bug.
fn certify(g: &Graph, strat: SearchStrategy, mode: SearchMode) -> SearchStrategy {
    let report = validate_strategy(g, &strat).expect("solver produced an illegal action");
    assert!(
        report.success,
        "solver produced a failing strategy: {report:?}"
    );
    if mode == SearchMode::Monotone {
        assert!(report.monotone, "monotone solver recontaminated edges");
    }
    strat
}

/// Per-vertex incident edge masks.
fn incidence_masks(g: &Graph) -> Vec<u128> {
    let mut inc = vec![0u128; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        inc[u] |= 1 << e;
        inc[v] |= 1 << e;
    }
    inc
}

/// Vertices with both a clear and a dirty incident edge.
fn frontier(inc: &[u128], cleared: u128) -> impl Iterator<Item = VertexId> + '_ {
    inc.iter()
        .enumerate()
        .filter(move |&(_, &m)| m & cleared != 0 && m & !cleared != 0)
        .map(|(v, _)| v)
}

/// One clearing move in the monotone solver: searchers stand on `u`
/// (one or two of them), one walks to `v`.
#[derive(Debug, Clone, Copy)]
struct Clearing {
    edge: usize,
    from: VertexId,
    to: VertexId,
    needed: u32,
}

/// Searchers required on `from` to clear `edge`: one when every other edge
/// at `from` is clear, two otherwise.
fn needed_at(inc: &[u128], cleared: u128, edge: usize, from: VertexId) -> u32 {
    if inc[from] & !cleared & !(1u128 << edge) == 0 {
        1
    } else {
        2
    }
}

/// Depth-first search over closed cleared sets. In a monotone strategy every
/// frontier vertex must hold a searcher, and any other searcher can be lifted
/// and placed again later for free, so a state is determined by its cleared
/// set. Clearing `uv` from `u` needs the frontier guards (except at `u`) plus
/// one or two searchers on `u`, and never recontaminates.
fn monotone_search(g: &Graph, k: usize) -> Option<SearchStrategy> {
    let m = g.edge_count();
    if m == 0 {
        return Some(SearchStrategy {
            k,
            actions: Vec::new(),
        });
    }
    let inc = incidence_masks(g);
    let goal: u128 = if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };

    let moves = |cleared: u128| -> Vec<(u128, Clearing)> {
        let guards: Vec<VertexId> = frontier(&inc, cleared).collect();
        let mut out = Vec::new();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if cleared & (1 << e) != 0 {
                continue;
            }
            for (from, to) in [(a, b), (b, a)] {
                let needed = needed_at(&inc, cleared, e, from);
                let others = guards.iter().filter(|&&w| w != from).count();
                if others + needed as usize <= k {
                    out.push((
                        cleared | 1 << e,
                        Clearing {
                            edge: e,
                            from,
                            to,
                            needed,
                        },
                    ));
                }
            }
        }
        // popped from the back, so reverse to try low edges first
        out.reverse();
        out
    };

    // Every path to the goal has exactly m steps, so a visited state that
    // did not reach the goal never will.
    let mut visited: HashSet<u128> = HashSet::new();
    let mut path: Vec<Clearing> = Vec::new();
    let mut stack: Vec<(u128, Vec<(u128, Clearing)>)> = vec![(0, moves(0))];
    visited.insert(0);
    while let Some(top) = stack.last_mut() {
        if top.0 == goal {
            return Some(expand_clearings(g, &inc, k, &path));
        }
        match top.1.pop() {
            Some((next, c)) => {
                if visited.insert(next) {
                    path.push(c);
                    let opts = moves(next);
                    stack.push((next, opts));
                }
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    None
}

/// Turns clearing moves into place/move/remove actions, keeping exactly
/// one searcher on each frontier vertex between moves.
fn expand_clearings(g: &Graph, inc: &[u128], k: usize, path: &[Clearing]) -> SearchStrategy {
    let mut occupancy = vec![0u32; g.vertex_count()];
    let mut actions = Vec::new();
    let mut cleared = 0u128;
    for (i, c) in path.iter().enumerate() {
        while occupancy[c.from] < c.needed {
            occupancy[c.from] += 1;
            actions.push(SearchAction::Place(c.from));
        }
        occupancy[c.from] -= 1;
        occupancy[c.to] += 1;
        actions.push(SearchAction::Move(c.from, c.to));
        cleared |= 1 << c.edge;
        if i + 1 == path.len() {
            break;
        }
        let keep: HashSet<VertexId> = frontier(inc, cleared).collect();
        for (v, count) in occupancy.iter_mut().enumerate() {
            let target = u32::from(keep.contains(&v));
            while *count > target {
                *count -= 1;
                actions.push(SearchAction::Remove(v));
            }
        }
    }
    SearchStrategy { k, actions }
}

/// Breadth-first search over literal game states. Actions are tried in the
/// order place, move, remove, vertices ascending. In monotone mode actions
/// that recontaminate are skipped. Exposed as an independent reference for
/// the monotone solver; it applies no size guard of its own.
pub fn literal_search(g: &Graph, k: usize, mode: SearchMode) -> Option<SearchStrategy> {
    if g.edge_count() == 0 {
        return Some(SearchStrategy {
            k,
            actions: Vec::new(),
        });
    }
    let n = g.vertex_count();
    let start = SearchState::new(g, k);
    let mut states = vec![start.clone()];
    let mut parent: Vec<Option<(usize, SearchAction)>> = vec![None];
    let mut index: HashMap<SearchState, usize> = HashMap::from([(start, 0)]);
    let mut head = 0;
    while head < states.len() {
        let current = states[head].clone();
        let mut candidates = Vec::new();
        if current.reserve > 0 {
            candidates.extend((0..n).map(SearchAction::Place));
        }
        for u in 0..n {
            if current.occupancy[u] > 0 {
                candidates.extend(g.neighbors(u).iter().map(|&v| SearchAction::Move(u, v)));
            }
        }
        candidates.extend(
            (0..n)
                .filter(|&v| current.occupancy[v] > 0)
                .map(SearchAction::Remove),
        );
        for a in candidates {
            let t = step(g, &current, a).expect("candidate actions are legal");
            if mode == SearchMode::Monotone && t.recontaminated > 0 {
                continue;
            }
            if index.contains_key(&t.state) {
                continue;
            }
            let id = states.len();
            let done = t.state.all_clear();
            index.insert(t.state.clone(), id);
            states.push(t.state);
            parent.push(Some((head, a)));
            if done {
                let mut actions = Vec::new();
                let mut at = id;
                while let Some((p, a)) = parent[at] {
                    actions.push(a);
                    at = p;
                }
                actions.reverse();
                return Some(SearchStrategy { k, actions });
            }
        }
        head += 1;
    }
    None
}

/// The sweep of `G □ P_n`: one guard on every vertex of the first copy of
/// `G` and one free searcher. The free searcher walks every edge of the
/// current copy (each first traversal starts on a guarded vertex holding two
/// searchers), then the guards step to the next copy one at a time in vertex
/// order and the free searcher follows. Uses `|V(G)| + 1` searchers, places
/// them all first, and never recontaminates.
pub fn sweep_strategy_product_with_path(g: &Graph, n: usize) -> Result<SearchStrategy> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::domain("sweep needs a connected factor"));
    }
    if n < 3 {
        return Err(Error::domain(format!(
            "sweep needs a path of length >= 3, got {n}"
        )));
    }
    let order = g.vertex_count();
    let at = |x: VertexId, j: usize| x * n + j;
    let root = 0;

    let walk = edge_walk(g, root);
    let mut actions: Vec<SearchAction> =
        (0..order).map(|x| SearchAction::Place(at(x, 0))).collect();
    actions.push(SearchAction::Place(at(root, 0)));
    for j in 0..n {
        actions.extend(
            walk.iter()
                .map(|&(a, b)| SearchAction::Move(at(a, j), at(b, j))),
        );
        if j + 1 < n {
            actions.extend((0..order).map(|x| SearchAction::Move(at(x, j), at(x, j + 1))));
            actions.push(SearchAction::Move(at(root, j), at(root, j + 1)));
        }
    }
    Ok(SearchStrategy {
        k: order + 1,
        actions,
    })
}

/// Closed walk from `root` that traverses every edge, each edge first in the
/// direction of the depth-first search and then back.
fn edge_walk(g: &Graph, root: VertexId) -> Vec<(VertexId, VertexId)> {
    fn visit(
        g: &Graph,
        u: VertexId,
        seen: &mut [bool],
        used: &mut [bool],
        out: &mut Vec<(VertexId, VertexId)>,
    ) {
        seen[u] = true;
        for &w in g.neighbors(u) {
            let e = g.edge_index(u, w).expect("neighbour edge");
            if used[e] {
                continue;
            }
            used[e] = true;
            out.push((u, w));
            if !seen[w] {
                visit(g, w, seen, used, out);
            }
            out.push((w, u));
        }
    }
    let mut out = Vec::with_capacity(2 * g.edge_count());
    visit(
        g,
        root,
        &mut vec![false; g.vertex_count()],
        &mut vec![false; g.edge_count()],
        &mut out,
    );
    out
}

/// Product families with known search numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductFamily {
    /// `P_m □ P_n`
    PathPath(usize, usize),
    /// `K_m □ P_n`
    CliquePath(usize, usize),
}

/// `s(P_m □ P_n) = min(m, n) + 1` and `s(K_m □ P_n) = m + 1`, for
/// `m, n >= 3`.
pub fn search_number_formula(family: ProductFamily) -> Result<usize> {
    let (m, n) = match family {
        ProductFamily::PathPath(m, n) | ProductFamily::CliquePath(m, n) => (m, n),
    };
    if m < 3 || n < 3 {
        return Err(Error::domain(format!(
            "search number formula needs m, n >= 3, got m={m}, n={n}"
        )));
    }
    Ok(match family {
        ProductFamily::PathPath(..) => m.min(n) + 1,
        ProductFamily::CliquePath(..) => m + 1,
    })
}
