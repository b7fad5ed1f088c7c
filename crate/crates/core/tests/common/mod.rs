#![allow(dead_code)]

use std::collections::BTreeSet;

use trigrid_core::{CellRef, SubdividedGraph, TriGridGraph};

/// Cells sharing an edge with `c`.
pub fn neighbours(c: CellRef) -> impl Iterator<Item = CellRef> {
    c.edges()
        .into_iter()
        .flat_map(|e| e.sides())
        .map(|(d, _)| d)
        .filter(move |&d| d != c)
}

fn normalise(cells: &BTreeSet<CellRef>) -> BTreeSet<CellRef> {
    let min = cells
        .iter()
        .map(|c| (c.anchor.y, c.anchor.x))
        .min()
        .expect("non-empty");
    cells.iter().map(|c| c.translate(-min.1, -min.0)).collect()
}

/// Edge-connected cell sets of each size up to `max`, up to translation.
pub fn polyiamonds(max: usize) -> Vec<Vec<BTreeSet<CellRef>>> {
    let mut levels: Vec<Vec<BTreeSet<CellRef>>> = vec![Vec::new()];
    let seeds = [CellRef::up(0, 0), CellRef::down(0, 0)];
    levels.push(seeds.iter().map(|&c| BTreeSet::from([c])).collect());
    for _ in 2..=max {
        let mut next = BTreeSet::new();
        for shape in levels.last().unwrap() {
            for &c in shape {
                for d in neighbours(c) {
                    if !shape.contains(&d) {
                        let mut grown = shape.clone();
                        grown.insert(d);
                        next.insert(normalise(&grown));
                    }
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// Every subdivision of `g`, as subsets of its belonging cells.
pub fn all_subdivisions(g: &TriGridGraph) -> impl Iterator<Item = SubdividedGraph> + '_ {
    let cells: Vec<CellRef> = g.belonging_cells().iter().copied().collect();
    (0u64..1 << cells.len()).map(move |mask| {
        let chosen = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c);
        SubdividedGraph::new(g.clone(), chosen).expect("belonging cells")
    })
}
