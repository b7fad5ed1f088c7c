//! Three independent verdicts on one subdivision, compared.

use crate::generators::a_double_prime;
use crate::matcher::{find_induced_pattern, MatchOutcome};
use crate::orientation::{find_semi_transitive_orientation, SearchOutcome, SearchResult};
use crate::subdivision::{SubdividedGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    /// Some route ran out of budget; the others agree.
    Inconclusive,
    Inconsistent,
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    /// Representable by the interior-cell characterization.
    pub characterization: bool,
    pub search: SearchOutcome<Vertex>,
    pub obstruction: MatchOutcome,
    pub consistency: Consistency,
}

impl CrossValidation {
    /// Representability according to the orientation search, if decided.
    pub fn search_verdict(&self) -> Option<bool> {
        match self.search.result {
            SearchResult::Found(_) => Some(true),
            SearchResult::Exhausted => Some(false),
            SearchResult::BudgetExceeded => None,
        }
    }

    /// Representability according to the obstruction matcher, if decided.
    pub fn obstruction_verdict(&self) -> Option<bool> {
        match self.obstruction {
            MatchOutcome::Found(_) => Some(false),
            MatchOutcome::Absent => Some(true),
            MatchOutcome::BudgetExceeded => None,
        }
    }
}

/// Runs the characterization, the orientation search and the obstruction
/// matcher. `budget` applies to each search separately.
pub fn cross_validate(sg: &SubdividedGraph, budget: u64) -> CrossValidation {
    let characterization = sg.is_word_representable();
    let search = find_semi_transitive_orientation(sg.graph(), budget);
    let obstruction = find_induced_pattern(a_double_prime().graph(), sg.graph(), budget);
    let mut report = CrossValidation {
        characterization,
        search,
        obstruction,
        consistency: Consistency::Consistent,
    };
    let verdicts = [Some(characterization), report.search_verdict(), report.obstruction_verdict()];
    report.consistency = if verdicts.iter().flatten().any(|&v| v != characterization) {
        Consistency::Inconsistent
    } else if verdicts.contains(&None) {
        Consistency::Inconclusive
    } else {
        Consistency::Consistent
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, triangle, Named, A_CENTRE};
    use alloc::vec::Vec;

    #[test]
    fn named_subdivisions() {
        let r = cross_validate(&a_double_prime(), 1_000_000);
        assert!(!r.characterization);
        assert_eq!((r.search_verdict(), r.obstruction_verdict()), (Some(false), Some(false)));
        assert_eq!(r.consistency, Consistency::Consistent);

        let ap = named(Named::APrime);
        let r = cross_validate(ap.subdivided().unwrap(), 1_000_000);
        assert!(r.characterization);
        assert_eq!(r.consistency, Consistency::Consistent);
    }

    #[test]
    fn all_subdivisions_of_a() {
        let a = triangle(3).unwrap();
        let cells: Vec<_> = a.belonging_cells().iter().copied().collect();
        let mut representable = 0;
        for mask in 0u32..16 {
            let chosen = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c);
            let sg = SubdividedGraph::new(a.clone(), chosen).unwrap();
            let r = cross_validate(&sg, 1_000_000);
            assert_eq!(r.consistency, Consistency::Consistent, "{:?}", sg.subdivided_cells());
            assert_eq!(r.characterization, !sg.subdivided_cells().contains(&A_CENTRE));
            representable += usize::from(r.characterization);
        }
        assert_eq!(representable, 8);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let r = cross_validate(&a_double_prime(), 1);
        assert_eq!(r.consistency, Consistency::Inconclusive);
    }
}
