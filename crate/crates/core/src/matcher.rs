//! Induced-subgraph matching by backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchOutcome {
    /// `mapping[i]` is the host index of pattern vertex `i`.
    Found(Vec<usize>),
    Absent,
    BudgetExceeded,
}

impl MatchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, MatchOutcome::Found(_))
    }
}

/// Sorted degrees of the neighbours of `v`.
fn neighbour_degrees<V>(g: &Graph<V>, v: usize) -> Vec<usize> {
    let mut d: Vec<usize> = g.neighbors(v).ones().map(|u| g.degree(u)).collect();
    d.sort_unstable();
    d
}

/// Whether sorted `small` can be matched injectively into sorted `large`
/// with each element mapped to one at least as big.
fn dominated(small: &[usize], large: &[usize]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    // Greedy from the top: the i-th largest of `small` needs the i-th
    // largest of `large`.
    small
        .iter()
        .rev()
        .zip(large.iter().rev())
        .all(|(s, l)| s <= l)
}

struct Matcher<'a, P, H> {
    pattern: &'a Graph<P>,
    host: &'a Graph<H>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    budget: u64,
    nodes: u64,
}

impl<P, H> Matcher<'_, P, H> {
    fn consistent(&self, depth: usize, h: usize) -> bool {
        let p = self.order[depth];
        self.order[..depth].iter().all(|&q| {
            self.pattern.adjacent(p, q) == self.host.adjacent(h, self.mapping[q])
        })
    }

    fn search(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let p = self.order[depth];
        for k in 0..self.candidates[p].len() {
            let h = self.candidates[p][k];
            if self.used[h] || !self.consistent(depth, h) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.used[h] = true;
            self.mapping[p] = h;
            if self.search(depth + 1)? {
                return Some(true);
            }
            self.used[h] = false;
        }
        Some(false)
    }
}

/// Finds an injective map under which `pattern` is an induced subgraph of
/// `host`. The budget bounds the number of partial assignments tried.
/// Deterministic: candidates are tried in host index order.
pub fn find_induced_pattern<P, H>(pattern: &Graph<P>, host: &Graph<H>, budget: u64) -> MatchOutcome {
    let n = pattern.vertex_count();
    if n > host.vertex_count() {
        return MatchOutcome::Absent;
    }
    let host_nd: Vec<Vec<usize>> = (0..host.vertex_count()).map(|v| neighbour_degrees(host, v)).collect();
    let mut candidates = Vec::with_capacity(n);
    for p in 0..n {
        let nd = neighbour_degrees(pattern, p);
        let c: Vec<usize> = (0..host.vertex_count())
            .filter(|&h| host.degree(h) >= pattern.degree(p) && dominated(&nd, &host_nd[h]))
            .collect();
        if c.is_empty() {
            return MatchOutcome::Absent;
        }
        candidates.push(c);
    }
    // Place constrained vertices first, then keep the order connected.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = order.iter().filter(|&&q| pattern.adjacent(p, q)).count();
                (links, pattern.degree(p), core::cmp::Reverse(candidates[p].len()), core::cmp::Reverse(p))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut m = Matcher {
        pattern,
        host,
        order,
        candidates,
        mapping: vec![usize::MAX; n],
        used: vec![false; host.vertex_count()],
        budget,
        nodes: 0,
    };
    match m.search(0) {
        Some(true) => MatchOutcome::Found(m.mapping),
        Some(false) => MatchOutcome::Absent,
        None => MatchOutcome::BudgetExceeded,
    }
}
