//! Orientations of simple graphs: acyclicity, shortcuts, semi-transitivity,
//! and search for semi-transitive orientations.
//!
//! An acyclic orientation has a shortcut when some arc `u → v` spans a
//! directed path `u = v1 → … → vk = v` whose vertex set is not transitively
//! closed. In an acyclic orientation an absent arc `a → b` with `a ⇒ b`
//! (reachability) can only be a non-adjacent pair, so a shortcut exists iff
//! there are an arc `u → v` and non-adjacent `a ≠ b` with `u ⇒ a ⇒ b ⇒ v`.
//! Concatenated reachability paths in a DAG are simple, which gives the
//! explicit witness path.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Default node-expansion budget for searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationError {
    /// An arc is not an edge of the base graph.
    NotAnEdge,
    /// Some base edge received no arc, or two arcs.
    EdgeCoverage,
    /// The query needs an acyclic orientation.
    Cyclic,
    /// Coloring gives both endpoints of an edge the same color, or misses a
    /// vertex.
    ImproperColoring,
}

impl fmt::Display for OrientationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrientationError::NotAnEdge => "arc does not correspond to an edge",
            OrientationError::EdgeCoverage => "every edge needs exactly one arc",
            OrientationError::Cyclic => "orientation has a directed cycle",
            OrientationError::ImproperColoring => "coloring is not proper on the graph",
        })
    }
}

impl core::error::Error for OrientationError {}

/// A total orientation of a simple graph: one arc per edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph<V> {
    base: Graph<V>,
    // forward[i]: edge i = (u, v), u < v, is directed u → v.
    forward: Vec<bool>,
}

/// A directed path `v1 → … → vk` with the arc `v1 → vk` present and the arc
/// `missing.0 → missing.1` absent, both of which lie on the path in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortcutWitness<V> {
    pub path: Vec<V>,
    pub missing: (V, V),
}

impl<V> ShortcutWitness<V> {
    /// The shortcut arc `v1 → vk`.
    pub fn chord(&self) -> (&V, &V) {
        (&self.path[0], &self.path[self.path.len() - 1])
    }
}

/// Index-level witness `(path, a, b)`.
type RawShortcut = (Vec<usize>, usize, usize);

impl<V: Ord + Clone> OrientedGraph<V> {
    /// Orients `base` by an explicit arc list covering every edge once.
    pub fn from_arcs<I>(base: Graph<V>, arcs: I) -> Result<Self, OrientationError>
    where
        I: IntoIterator<Item = (V, V)>,
    {
        let mut forward = alloc::vec![false; base.edge_count()];
        let mut seen = alloc::vec![false; base.edge_count()];
        for (a, b) in arcs {
            let (u, v) = match (base.index_of(&a), base.index_of(&b)) {
                (Some(u), Some(v)) => (u, v),
                _ => return Err(OrientationError::NotAnEdge),
            };
            let e = base.edge_index(u, v).ok_or(OrientationError::NotAnEdge)?;
            if core::mem::replace(&mut seen[e], true) {
                return Err(OrientationError::EdgeCoverage);
            }
            forward[e] = u < v;
        }
        if seen.iter().any(|s| !s) {
            return Err(OrientationError::EdgeCoverage);
        }
        Ok(OrientedGraph { base, forward })
    }

    pub fn has_arc(&self, a: &V, b: &V) -> bool {
        match (self.base.index_of(a), self.base.index_of(b)) {
            (Some(u), Some(v)) => self.has_index_arc(u, v),
            _ => false,
        }
    }

    pub fn find_cycle(&self) -> Option<Vec<V>> {
        let cycle = find_cycle_indices(&self.successors())?;
        Some(cycle.into_iter().map(|i| self.base.vertex(i).clone()).collect())
    }

    /// A shortcut witness, if one exists. Arcs are scanned in index order and
    /// the first pattern found is reported.
    pub fn find_shortcut(&self) -> Result<Option<ShortcutWitness<V>>, OrientationError> {
        let succ = self.successors();
        if find_cycle_indices(&succ).is_some() {
            return Err(OrientationError::Cyclic);
        }
        let reach = closure(&succ);
        let label = |i: usize| self.base.vertex(i).clone();
        Ok(shortcut_in(&self.base, &succ, &reach).map(|(path, a, b)| ShortcutWitness {
            path: path.into_iter().map(label).collect(),
            missing: (label(a), label(b)),
        }))
    }
}

impl<V> OrientedGraph<V> {
    /// Orients every edge by a predicate on its index pair `(u, v)`, `u < v`:
    /// `true` means `u → v`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(base: Graph<V>, mut forward: F) -> Self {
        let forward = base.edges().iter().map(|&(u, v)| forward(u, v)).collect();
        OrientedGraph { base, forward }
    }

    pub fn base(&self) -> &Graph<V> {
        &self.base
    }

    /// Arcs as `(tail, head)` index pairs, in edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
    }

    pub fn arc_labels(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.arcs()
            .map(move |(a, b)| (self.base.vertex(a), self.base.vertex(b)))
    }

    pub fn has_index_arc(&self, a: usize, b: usize) -> bool {
        match self.base.edge_index(a, b) {
            Some(e) => self.forward[e] == (a < b),
            None => false,
        }
    }

    pub fn successors(&self) -> Vec<FixedBitSet> {
        let n = self.base.vertex_count();
        let mut succ = alloc::vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in self.arcs() {
            succ[a].insert(b);
        }
        succ
    }

    pub fn is_acyclic(&self) -> bool {
        find_cycle_indices(&self.successors()).is_none()
    }

    pub fn is_semi_transitive(&self) -> bool {
        let succ = self.successors();
        if find_cycle_indices(&succ).is_some() {
            return false;
        }
        let reach = closure(&succ);
        shortcut_in(&self.base, &succ, &reach).is_none()
    }

    /// The same graph with every arc reversed.
    pub fn reverse_all(&self) -> Self
    where
        V: Clone,
    {
        OrientedGraph {
            base: self.base.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// Number of arcs on a longest directed path; `None` if cyclic.
    pub fn longest_path(&self) -> Option<usize> {
        let succ = self.successors();
        let order = topological_order(&succ)?;
        let mut depth = alloc::vec![0usize; succ.len()];
        for &u in order.iter().rev() {
            depth[u] = succ[u].ones().map(|s| depth[s] + 1).max().unwrap_or(0);
        }
        Some(depth.into_iter().max().unwrap_or(0))
    }
}

impl<V: fmt::Debug> fmt::Debug for OrientedGraph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.arc_labels()).finish()
    }
}

/// Directs every edge from the lower color to the higher one. With three
/// colors no directed path has more than two arcs, so the result is
/// semi-transitive.
pub fn orient_by_coloring<V, F>(g: &Graph<V>, mut color: F) -> Result<OrientedGraph<V>, OrientationError>
where
    V: Clone,
    F: FnMut(&V) -> Option<u32>,
{
    let colors: Vec<u32> = g
        .vertices()
        .iter()
        .map(&mut color)
        .collect::<Option<_>>()
        .ok_or(OrientationError::ImproperColoring)?;
    if g.edges().iter().any(|&(u, v)| colors[u] == colors[v]) {
        return Err(OrientationError::ImproperColoring);
    }
    Ok(OrientedGraph::from_fn(g.clone(), |u, v| colors[u] < colors[v]))
}

/// Kahn order; `None` when the arcs contain a cycle.
fn topological_order(succ: &[FixedBitSet]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indegree = alloc::vec![0usize; n];
    for s in succ {
        for v in s.ones() {
            indegree[v] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for v in succ[u].ones() {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                order.push(v);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A directed cycle as a vertex sequence (first vertex not repeated).
fn find_cycle_indices(succ: &[FixedBitSet]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = alloc::vec![Mark::New; n];
    let mut parent = alloc::vec![usize::MAX; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // Iterative DFS: stack of (vertex, next successor to try).
        let mut stack = alloc::vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            match succ[u].ones().find(|&v| v >= *next) {
                Some(v) => {
                    *next = v + 1;
                    match mark[v] {
                        Mark::New => {
                            mark[v] = Mark::Active;
                            parent[v] = u;
                            stack.push((v, 0));
                        }
                        Mark::Active => {
                            let mut cycle = alloc::vec![u];
                            let mut w = u;
                            while w != v {
                                w = parent[w];
                                cycle.push(w);
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        Mark::Done => {}
                    }
                }
                None => {
                    mark[u] = Mark::Done;
                    stack.pop();
                }
            }
        }
    }
    None
}

/// Reflexive transitive closure of an acyclic arc relation.
fn closure(succ: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = succ.len();
    let order = topological_order(succ).expect("closure of an acyclic relation");
    let mut reach = alloc::vec![FixedBitSet::with_capacity(n); n];
    for &u in order.iter().rev() {
        let mut r = FixedBitSet::with_capacity(n);
        r.insert(u);
        for s in succ[u].ones() {
            r.union_with(&reach[s]);
        }
        reach[u] = r;
    }
    reach
}

/// First shortcut pattern `(u → v, a, b)` over the arcs in `succ`, where `a`
/// and `b` are non-adjacent in `base`. `reach` is the reflexive closure.
fn shortcut_pattern<V>(
    base: &Graph<V>,
    succ: &[FixedBitSet],
    reach: &[FixedBitSet],
) -> Option<(usize, usize, usize, usize)> {
    shortcut_pattern_where(base, succ, reach, |_| true, |_| true)
}

/// As [`shortcut_pattern`], restricted to chords `u → v` with `tail_ok(u)`
/// and `head_ok(v)`.
fn shortcut_pattern_where<V>(
    base: &Graph<V>,
    succ: &[FixedBitSet],
    reach: &[FixedBitSet],
    tail_ok: impl Fn(usize) -> bool,
    head_ok: impl Fn(usize) -> bool,
) -> Option<(usize, usize, usize, usize)> {
    for (u, heads) in succ.iter().enumerate() {
        if !tail_ok(u) {
            continue;
        }
        for v in heads.ones() {
            if !head_ok(v) {
                continue;
            }
            for a in reach[u].ones() {
                if !reach[a].contains(v) {
                    continue;
                }
                for b in reach[a].ones() {
                    if b != a && reach[b].contains(v) && !base.adjacent(a, b) {
                        return Some((u, v, a, b));
                    }
                }
            }
        }
    }
    None
}

/// Greedy path `from ⇒ to`: always step to the least successor that still
/// reaches `to`.
fn path_between(succ: &[FixedBitSet], reach: &[FixedBitSet], from: usize, to: usize) -> Vec<usize> {
    let mut path = alloc::vec![from];
    let mut at = from;
    while at != to {
        at = succ[at]
            .ones()
            .find(|&s| reach[s].contains(to))
            .expect("target is reachable");
        path.push(at);
    }
    path
}

fn shortcut_in<V>(base: &Graph<V>, succ: &[FixedBitSet], reach: &[FixedBitSet]) -> Option<RawShortcut> {
    let (u, v, a, b) = shortcut_pattern(base, succ, reach)?;
    let mut path = path_between(succ, reach, u, a);
    path.extend(path_between(succ, reach, a, b).into_iter().skip(1));
    path.extend(path_between(succ, reach, b, v).into_iter().skip(1));
    Some((path, a, b))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Edge orientations tried.
    pub nodes: u64,
    /// Partial orientations rejected before reaching a leaf.
    pub prunes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult<V> {
    Found(OrientedGraph<V>),
    /// No orientation is semi-transitive.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<V> {
    pub result: SearchResult<V>,
    pub stats: SearchStats,
}

impl<V> SearchOutcome<V> {
    pub fn is_found(&self) -> bool {
        matches!(self.result, SearchResult::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.result, SearchResult::Exhausted)
    }
}

struct OrientationSearch<'g, V> {
    base: &'g Graph<V>,
    order: Vec<usize>,
    // Direction per edge index, once decided.
    decided: Vec<Option<bool>>,
    remaining: usize,
    budget: u64,
    stats: SearchStats,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl<V> OrientationSearch<'_, V> {
    /// Next edge to decide and the directions to try. An edge whose ends
    /// are already joined by a directed path has only one acyclic choice and
    /// goes first.
    fn next_edge(&self, reach: &[FixedBitSet]) -> (usize, &'static [bool]) {
        let mut first_open = None;
        for &e in &self.order {
            if self.decided[e].is_some() {
                continue;
            }
            let (u, v) = self.base.edges()[e];
            if reach[u].contains(v) {
                return (e, &[true]);
            }
            if reach[v].contains(u) {
                return (e, &[false]);
            }
            first_open.get_or_insert(e);
        }
        let e = first_open.expect("an undecided edge remains");
        // Reversing every arc preserves semi-transitivity, so the very first
        // decision may stay forward.
        if self.remaining == self.decided.len() {
            (e, &[true])
        } else {
            (e, &[true, false])
        }
    }

    fn run(&mut self, succ: &mut Vec<FixedBitSet>, reach: &[FixedBitSet]) -> Step {
        if self.remaining == 0 {
            return Step::Found;
        }
        let (e, directions) = self.next_edge(reach);
        let (u, v) = self.base.edges()[e];
        for &forward in directions {
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let (tail, head) = if forward { (u, v) } else { (v, u) };
            let mut next = reach.to_vec();
            for r in next.iter_mut() {
                if r.contains(tail) {
                    r.union_with(&reach[head]);
                }
            }
            succ[tail].insert(head);
            // A new pattern must run its path or its chord through the new
            // arc, so its chord starts above `tail` and ends below `head`.
            let fresh = shortcut_pattern_where(
                self.base,
                succ,
                &next,
                |x| next[x].contains(tail),
                |y| next[head].contains(y),
            );
            if fresh.is_some() {
                self.stats.prunes += 1;
                succ[tail].set(head, false);
                continue;
            }
            self.decided[e] = Some(forward);
            self.remaining -= 1;
            match self.run(succ, &next) {
                Step::Dead => {
                    self.decided[e] = None;
                    self.remaining += 1;
                    succ[tail].set(head, false);
                }
                other => return other,
            }
        }
        Step::Dead
    }
}

/// Greedy edge order: prefer edges whose endpoints are already touched, so
/// triangles close early, then larger degree sums, then lower index.
fn edge_order<V>(g: &Graph<V>) -> Vec<usize> {
    let m = g.edge_count();
    let mut touched = alloc::vec![false; g.vertex_count()];
    let mut used = alloc::vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let e = (0..m)
            .filter(|&e| !used[e])
            .max_by_key(|&e| {
                let (u, v) = g.edges()[e];
                (
                    usize::from(touched[u]) + usize::from(touched[v]),
                    g.degree(u) + g.degree(v),
                    core::cmp::Reverse(e),
                )
            })
            .expect("unused edge remains");
        let (u, v) = g.edges()[e];
        touched[u] = true;
        touched[v] = true;
        used[e] = true;
        order.push(e);
    }
    order
}

/// Backtracking search for a semi-transitive orientation of `g`.
///
/// Edges whose direction is forced by acyclicity are decided first, the
/// rest in a connected, triangle-closing order, forward (lower index →
/// higher index) before backward. A partial orientation is abandoned as
/// soon as it holds a directed cycle or a shortcut pattern whose missing
/// pair is non-adjacent; both persist under further arcs. The result is
/// deterministic.
pub fn find_semi_transitive_orientation<V: Clone>(g: &Graph<V>, budget: u64) -> SearchOutcome<V> {
    let order = edge_order(g);
    let n = g.vertex_count();
    let mut succ = alloc::vec![FixedBitSet::with_capacity(n); n];
    let reach: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut r = FixedBitSet::with_capacity(n);
            r.insert(i);
            r
        })
        .collect();
    let mut search = OrientationSearch {
        base: g,
        order,
        decided: alloc::vec![None; g.edge_count()],
        remaining: g.edge_count(),
        budget,
        stats: SearchStats::default(),
    };
    let result = match search.run(&mut succ, &reach) {
        Step::Found => {
            let forward = search.decided.iter().map(|d| d.expect("all decided")).collect();
            let d = OrientedGraph {
                base: g.clone(),
                forward,
            };
            debug_assert!(d.is_semi_transitive());
            SearchResult::Found(d)
        }
        Step::Dead => SearchResult::Exhausted,
        Step::OutOfBudget => SearchResult::BudgetExceeded,
    };
    SearchOutcome {
        result,
        stats: search.stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    // Path 1..6 plus chords 1→3, 1→5, 1→6, 2→4, 2→6, 3→5, 4→6.
    fn shortcut_example() -> OrientedGraph<u32> {
        let arcs = [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 3),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 6),
            (3, 5),
            (4, 6),
        ];
        let g = Graph::from_edges(arcs).unwrap();
        OrientedGraph::from_arcs(g, arcs).unwrap()
    }

    fn complete(n: u32) -> Graph<u32> {
        Graph::new(0..n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    /// All directed paths, checking transitivity of every path whose ends
    /// are joined by an arc.
    fn brute_force_has_shortcut<V>(d: &OrientedGraph<V>) -> bool {
        let succ = d.successors();
        fn extend<V>(d: &OrientedGraph<V>, succ: &[FixedBitSet], path: &mut Vec<usize>) -> bool {
            let first = path[0];
            let last = *path.last().unwrap();
            if path.len() >= 3 && d.has_index_arc(first, last) {
                for i in 0..path.len() {
                    for j in i + 1..path.len() {
                        if !d.has_index_arc(path[i], path[j]) {
                            return true;
                        }
                    }
                }
            }
            for next in succ[last].ones() {
                path.push(next);
                if extend(d, succ, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        (0..d.base().vertex_count()).any(|s| extend(d, &succ, &mut vec![s]))
    }

    #[test]
    fn shortcut_example_is_acyclic_with_expected_witness() {
        let d = shortcut_example();
        assert!(d.is_acyclic());
        assert!(!d.is_semi_transitive());
        let w = d.find_shortcut().unwrap().unwrap();
        assert!([(1, 5), (1, 6), (2, 6)].contains(&(*w.chord().0, *w.chord().1)));
        assert!([(1, 4), (2, 5), (3, 6)].contains(&w.missing));
        assert_eq!(w.path, vec![1, 2, 3, 4, 5]);
        assert_eq!(w.missing, (1, 4));
        for pair in w.path.windows(2) {
            assert!(d.has_arc(&pair[0], &pair[1]));
        }
    }

    #[test]
    fn reversed_shortcut_example_still_has_a_shortcut() {
        let r = shortcut_example().reverse_all();
        let w = r.find_shortcut().unwrap().unwrap();
        assert!(r.has_arc(w.chord().0, w.chord().1));
        assert!(!r.has_arc(&w.missing.0, &w.missing.1));
        assert_eq!(r.reverse_all(), shortcut_example());
    }

    #[test]
    fn transitive_tournament() {
        let d = OrientedGraph::from_fn(complete(4), |_, _| true);
        assert!(d.is_acyclic());
        assert_eq!(d.find_shortcut(), Ok(None));
        assert!(d.is_semi_transitive());
    }

    #[test]
    fn directed_triangle_has_cycle() {
        let g = complete(3);
        let d = OrientedGraph::from_arcs(g, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!d.is_acyclic());
        let cycle = d.find_cycle().unwrap();
        assert_eq!(cycle.len(), 3);
        for i in 0..3 {
            assert!(d.has_arc(&cycle[i], &cycle[(i + 1) % 3]));
        }
        assert_eq!(d.find_shortcut(), Err(OrientationError::Cyclic));
        assert!(!d.is_semi_transitive());
    }

    #[test]
    fn arc_list_validation() {
        let g = complete(3);
        assert_eq!(
            OrientedGraph::from_arcs(g.clone(), [(0, 1), (1, 2)]),
            Err(OrientationError::EdgeCoverage)
        );
        assert_eq!(
            OrientedGraph::from_arcs(g.clone(), [(0, 1), (1, 0), (1, 2), (0, 2)]),
            Err(OrientationError::EdgeCoverage)
        );
        assert_eq!(
            OrientedGraph::from_arcs(g, [(0, 7)]),
            Err(OrientationError::NotAnEdge)
        );
    }

    #[test]
    fn coloring_orientations() {
        let edge = Graph::new([0u32, 1], [(0, 1)]).unwrap();
        let d = orient_by_coloring(&edge, |&v| Some(v)).unwrap();
        assert!(d.has_arc(&0, &1));
        let k4 = orient_by_coloring(&complete(4), |&v| Some(v)).unwrap();
        assert_eq!(k4, OrientedGraph::from_fn(complete(4), |_, _| true));
        assert_eq!(
            orient_by_coloring(&complete(3), |&v| Some(v % 2)),
            Err(OrientationError::ImproperColoring)
        );
        assert_eq!(
            orient_by_coloring(&complete(3), |_| None),
            Err(OrientationError::ImproperColoring)
        );
    }

    #[test]
    fn cycle_of_four_is_found() {
        let c4 = Graph::new(0..4u32, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let out = find_semi_transitive_orientation(&c4, DEFAULT_BUDGET);
        match out.result {
            SearchResult::Found(d) => assert!(d.is_semi_transitive()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_is_reported() {
        let c4 = Graph::new(0..4u32, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let out = find_semi_transitive_orientation(&c4, 1);
        assert_eq!(out.result, SearchResult::BudgetExceeded);
    }

    // Wheel W5 (hub + 5-cycle) is the classic small non-representable graph.
    #[test]
    fn odd_wheel_is_exhausted() {
        let mut edges: Vec<(u32, u32)> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let w5 = Graph::from_edges(edges).unwrap();
        assert!(find_semi_transitive_orientation(&w5, DEFAULT_BUDGET).is_exhausted());
    }

    fn all_orientations<V: Clone>(g: &Graph<V>) -> impl Iterator<Item = OrientedGraph<V>> + '_ {
        (0u64..1 << g.edge_count()).map(move |mask| {
            let mut i = 0;
            OrientedGraph::from_fn(g.clone(), |_, _| {
                i += 1;
                mask >> (i - 1) & 1 == 1
            })
        })
    }

    #[test]
    fn complete_graphs_semi_transitive_iff_transitive() {
        for n in [4, 5] {
            for d in all_orientations(&complete(n)).filter(|d| d.is_acyclic()) {
                // An acyclic tournament is always transitive.
                assert!(d.is_semi_transitive());
            }
        }
    }

    #[test]
    fn short_longest_path_is_semi_transitive() {
        let g = Graph::new(
            0..6u32,
            [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)],
        )
        .unwrap();
        for d in all_orientations(&g) {
            if d.longest_path().is_some_and(|l| l <= 2) {
                assert!(d.is_semi_transitive());
            }
        }
    }

    fn small_graph(max_n: u32) -> impl Strategy<Value = Graph<u32>> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |edges| Graph::new(0..n, edges).unwrap())
        })
    }

    fn oriented(max_n: u32) -> impl Strategy<Value = OrientedGraph<u32>> {
        small_graph(max_n).prop_flat_map(|g| {
            let m = g.edge_count();
            proptest::collection::vec(any::<bool>(), m)
                .prop_map(move |dirs| {
                    let mut i = 0;
                    OrientedGraph::from_fn(g.clone(), |_, _| {
                        i += 1;
                        dirs[i - 1]
                    })
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn closure_test_matches_all_paths_oracle(d in oriented(7)) {
            prop_assume!(d.is_acyclic());
            let fast = d.find_shortcut().unwrap();
            prop_assert_eq!(fast.is_some(), brute_force_has_shortcut(&d));
            if let Some(w) = fast {
                prop_assert!(w.path.len() >= 4);
                prop_assert!(d.has_arc(w.chord().0, w.chord().1));
                for pair in w.path.windows(2) {
                    prop_assert!(d.has_arc(&pair[0], &pair[1]));
                }
                let i = w.path.iter().position(|x| *x == w.missing.0).unwrap();
                let j = w.path.iter().position(|x| *x == w.missing.1).unwrap();
                prop_assert!(i < j);
                prop_assert!(!d.has_arc(&w.missing.0, &w.missing.1));
            }
        }

        #[test]
        fn reversal_preserves_semi_transitivity(d in oriented(7)) {
            prop_assert_eq!(d.is_semi_transitive(), d.reverse_all().is_semi_transitive());
            prop_assert_eq!(d.reverse_all().reverse_all(), d);
        }

        #[test]
        fn tiny_acyclic_orientations_are_semi_transitive(d in oriented(3)) {
            prop_assert_eq!(d.is_semi_transitive(), d.is_acyclic());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn search_agrees_with_full_enumeration(g in small_graph(6)) {
            prop_assume!(g.edge_count() <= 13);
            let any = all_orientations(&g).any(|d| d.is_semi_transitive());
            let out = find_semi_transitive_orientation(&g, DEFAULT_BUDGET);
            match &out.result {
                SearchResult::Found(d) => {
                    prop_assert!(d.is_semi_transitive());
                    prop_assert!(any);
                }
                SearchResult::Exhausted => prop_assert!(!any),
                SearchResult::BudgetExceeded => prop_assert!(false, "budget"),
            }
        }
    }
}
