//! Alternation semantics of words and bounded search for uniform
//! word-representants.
//!
//! Letters `x` and `y` alternate in a word when deleting every other letter
//! leaves `xyxy…` or `yxyx…`; a lone `xy` counts. A word represents a graph
//! when alternation is exactly adjacency.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<L> {
    letters: Vec<L>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordError {
    /// Alternation asked for a letter against itself.
    SameLetter,
    /// A queried letter does not occur in the word.
    LetterAbsent,
    /// The word's alphabet differs from the graph's vertex set.
    AlphabetMismatch,
    EmptyGraph,
    /// Uniformity must be at least 1.
    ZeroUniformity,
    ZeroBudget,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordError::SameLetter => "alternation needs two distinct letters",
            WordError::LetterAbsent => "letter does not occur in the word",
            WordError::AlphabetMismatch => "word alphabet differs from the graph's vertex set",
            WordError::EmptyGraph => "graph has no vertices",
            WordError::ZeroUniformity => "uniformity must be at least 1",
            WordError::ZeroBudget => "search budget must be positive",
        })
    }
}

impl core::error::Error for WordError {}

impl<L> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Rotation by one: the first letter moves to the end.
    pub fn cyclic_shift(&self) -> Word<L>
    where
        L: Clone,
    {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(1);
        }
        Word { letters }
    }

    pub fn reversed(&self) -> Word<L>
    where
        L: Clone,
    {
        Word {
            letters: self.letters.iter().rev().cloned().collect(),
        }
    }
}

impl<L: Ord + Clone> Word<L> {
    /// Distinct letters, sorted.
    pub fn alphabet(&self) -> Vec<L> {
        let mut a = self.letters.clone();
        a.sort();
        a.dedup();
        a
    }

    pub fn alternates(&self, x: &L, y: &L) -> Result<bool, WordError> {
        if x == y {
            return Err(WordError::SameLetter);
        }
        let mut last: Option<&L> = None;
        let mut seen = (false, false);
        let mut alternating = true;
        for l in self.letters.iter().filter(|&l| l == x || l == y) {
            if l == x {
                seen.0 = true;
            } else {
                seen.1 = true;
            }
            if last == Some(l) {
                alternating = false;
            }
            last = Some(l);
        }
        if !(seen.0 && seen.1) {
            return Err(WordError::LetterAbsent);
        }
        Ok(alternating)
    }

    /// The graph on the alphabet whose edges are the alternating pairs.
    pub fn graph(&self) -> Graph<L> {
        let alphabet = self.alphabet();
        let n = alphabet.len();
        let codes: Vec<usize> = self
            .letters
            .iter()
            .map(|l| alphabet.binary_search(l).expect("letter in alphabet"))
            .collect();
        // broken[x][y]: x repeated with no y in between (or before any y).
        let mut since_last: Vec<FixedBitSet> = alloc::vec![FixedBitSet::with_capacity(n); n];
        let mut occurred = FixedBitSet::with_capacity(n);
        let mut broken: Vec<FixedBitSet> = alloc::vec![FixedBitSet::with_capacity(n); n];
        for &x in &codes {
            if occurred.contains(x) {
                for y in 0..n {
                    if y != x && !since_last[x].contains(y) {
                        broken[x].insert(y);
                        broken[y].insert(x);
                    }
                }
            }
            occurred.insert(x);
            since_last[x].clear();
            for (z, s) in since_last.iter_mut().enumerate() {
                if z != x {
                    s.insert(x);
                }
            }
        }
        let mut edges = Vec::new();
        for (u, b) in broken.iter().enumerate() {
            for v in u + 1..n {
                if !b.contains(v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_index_edges(alphabet, edges)
    }

    /// Whether this word represents `g`. A differing alphabet is an error,
    /// not a negative answer.
    pub fn represents(&self, g: &Graph<L>) -> Result<bool, WordError> {
        if self.alphabet().as_slice() != g.vertices() {
            return Err(WordError::AlphabetMismatch);
        }
        Ok(self.graph() == *g)
    }

    /// `Some(k)` when every letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Option<usize> {
        let mut sorted = self.letters.clone();
        sorted.sort();
        let mut runs = sorted.chunk_by(|a, b| a == b).map(|r| r.len());
        let k = runs.next()?;
        runs.all(|r| r == k).then_some(k)
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSearch<L> {
    Found(Word<L>),
    /// No `k`-uniform word represents the graph.
    Exhausted,
    BudgetExceeded,
}

#[derive(Clone)]
struct Placement {
    counts: Vec<usize>,
    since_last: Vec<FixedBitSet>,
    broken: Vec<FixedBitSet>,
}

struct UniformSearch<'g, L> {
    graph: &'g Graph<L>,
    k: usize,
    budget: u64,
    nodes: u64,
    word: Vec<usize>,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl<L> UniformSearch<'_, L> {
    /// Places letter `x`; `None` when the prefix can no longer extend to a
    /// representant.
    fn place(&self, state: &Placement, x: usize) -> Option<Placement> {
        let g = self.graph;
        let n = g.vertex_count();
        let mut next = state.clone();
        if state.counts[x] > 0 {
            // Every neighbour must have appeared since the last x.
            if !g.neighbors(x).is_subset(&state.since_last[x]) {
                return None;
            }
            for y in 0..n {
                if y != x && !state.since_last[x].contains(y) {
                    next.broken[x].insert(y);
                    next.broken[y].insert(x);
                }
            }
        }
        next.counts[x] += 1;
        next.since_last[x].clear();
        for (z, s) in next.since_last.iter_mut().enumerate() {
            if z != x {
                s.insert(x);
            }
        }
        // A non-edge whose letters are both used up must already be broken.
        if next.counts[x] == self.k {
            for y in 0..n {
                if y != x && next.counts[y] == self.k && !g.adjacent(x, y) && !next.broken[x].contains(y) {
                    return None;
                }
            }
        }
        Some(next)
    }

    fn run(&mut self, state: &Placement) -> Step {
        let n = self.graph.vertex_count();
        if self.word.len() == n * self.k {
            return Step::Done;
        }
        // Rotating a uniform word keeps its graph, so it may start with vertex 0.
        let choices = if self.word.is_empty() { 0..1 } else { 0..n };
        for x in choices {
            if state.counts[x] == self.k {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let Some(next) = self.place(state, x) else {
                continue;
            };
            self.word.push(x);
            match self.run(&next) {
                Step::Dead => {
                    self.word.pop();
                }
                other => return other,
            }
        }
        Step::Dead
    }
}

/// Backtracking search for a `k`-uniform word representing `g`, expanding
/// at most `budget` nodes. Letters are tried in vertex order, so the answer
/// is deterministic.
pub fn find_k_uniform_representant<L: Ord + Clone>(
    g: &Graph<L>,
    k: usize,
    budget: u64,
) -> Result<WordSearch<L>, WordError> {
    if g.is_empty() {
        return Err(WordError::EmptyGraph);
    }
    if k == 0 {
        return Err(WordError::ZeroUniformity);
    }
    if budget == 0 {
        return Err(WordError::ZeroBudget);
    }
    let n = g.vertex_count();
    let start = Placement {
        counts: alloc::vec![0; n],
        since_last: alloc::vec![FixedBitSet::with_capacity(n); n],
        broken: alloc::vec![FixedBitSet::with_capacity(n); n],
    };
    let mut search = UniformSearch {
        graph: g,
        k,
        budget,
        nodes: 0,
        word: Vec::with_capacity(n * k),
    };
    Ok(match search.run(&start) {
        Step::Done => {
            let w = Word::new(search.word.iter().map(|&i| g.vertex(i).clone()).collect());
            debug_assert_eq!(w.represents(g), Ok(true));
            WordSearch::Found(w)
        }
        Step::Dead => WordSearch::Exhausted,
        Step::OutOfBudget => WordSearch::BudgetExceeded,
    })
}
