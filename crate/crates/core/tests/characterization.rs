//! The interior-cell characterization against the obstruction matcher and
//! the orientation search on every subdivision of small cell sets.

mod common;

use proptest::prelude::*;
use trigrid_core::generators::{a_double_prime, named, Named};
use trigrid_core::{
    cross_validate, find_induced_pattern, find_semi_transitive_orientation, CellRef,
    find_k_uniform_representant, Consistency, MatchOutcome, SearchResult, SubdividedGraph, TriGridGraph,
    WordSearch, DEFAULT_BUDGET,
};

#[test]
fn obstruction_without_vertices_5_and_6_is_representable() {
    let ng = named(Named::ADoublePrime);
    let drop = [ng.vertex("5").unwrap(), ng.vertex("6").unwrap()];
    let g = ng.graph().induced(|v| !drop.contains(v));
    assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));
    let oriented = match find_semi_transitive_orientation(&g, DEFAULT_BUDGET).result {
        SearchResult::Found(d) => d,
        other => panic!("{other:?}"),
    };
    assert!(oriented.is_semi_transitive());
    let word = match find_k_uniform_representant(&g, 3, DEFAULT_BUDGET).unwrap() {
        WordSearch::Found(w) => w,
        other => panic!("{other:?}"),
    };
    assert_eq!(word.represents(&g), Ok(true));
}

#[test]
fn matcher_agrees_with_characterization_up_to_eight_cells() {
    let pattern = a_double_prime().graph().clone();
    let mut instances = 0;
    for shapes in common::polyiamonds(8) {
        for cells in shapes {
            let g = TriGridGraph::new(cells);
            for sg in common::all_subdivisions(&g) {
                let found = match find_induced_pattern(&pattern, sg.graph(), DEFAULT_BUDGET) {
                    MatchOutcome::Found(_) => true,
                    MatchOutcome::Absent => false,
                    MatchOutcome::BudgetExceeded => panic!("budget on {:?}", sg.subdivided_cells()),
                };
                assert_eq!(found, sg.has_interior_subdivision(), "{:?}", sg.subdivided_cells());
                instances += 1;
            }
        }
    }
    assert!(instances > 100_000);
}

fn three_way(size: usize) {
    for cells in &common::polyiamonds(size)[size] {
        let g = TriGridGraph::new(cells.clone());
        for sg in common::all_subdivisions(&g) {
            let r = cross_validate(&sg, DEFAULT_BUDGET);
            assert_eq!(r.consistency, Consistency::Consistent, "{:?}", sg.subdivided_cells());
        }
    }
}

#[test]
fn three_way_agreement_up_to_seven_cells() {
    for size in 1..=7 {
        three_way(size);
    }
}

/// About nine minutes on one core; run with `--ignored`.
#[test]
#[ignore]
fn three_way_agreement_eight_cells() {
    three_way(8);
}

/// Cell sets drawn from a small window, possibly disconnected.
fn window_subdivision() -> impl Strategy<Value = SubdividedGraph> {
    let cell = (0i64..4, 0i64..4, any::<bool>())
        .prop_map(|(x, y, up)| if up { CellRef::up(x, y) } else { CellRef::down(x, y) });
    (proptest::collection::btree_set(cell, 1..=10), any::<u64>()).prop_map(|(cells, mask)| {
        let g = TriGridGraph::new(cells);
        let chosen: Vec<CellRef> = g
            .belonging_cells()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        SubdividedGraph::new(g, chosen).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn obstruction_blocks_orientations(sg in window_subdivision()) {
        let pattern = a_double_prime().graph().clone();
        if find_induced_pattern(&pattern, sg.graph(), DEFAULT_BUDGET).is_found() {
            let out = find_semi_transitive_orientation(sg.graph(), DEFAULT_BUDGET);
            prop_assert!(!matches!(out.result, SearchResult::Found(_)));
        }
    }
}
