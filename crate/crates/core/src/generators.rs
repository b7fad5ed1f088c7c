//! Named graphs and families: triangles `T_n`, their maximum subdivisions
//! `A_n`, and Sierpiński gasket graphs.
//!
//! `T_n` has `n` horizontal lines and sits at the origin with its bottom side
//! on `y = 0`, so the six-vertex triangle `A` is `T_3`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::grid::{CellRef, GridCoord, TriGridGraph};
use crate::subdivision::{SubdividedGraph, Vertex};

/// Largest gasket stage accepted; `SG(15)` already has over 14 million cells.
pub const MAX_SIERPINSKI_STAGE: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    TooFewLevels { min: u32, got: u32 },
    StageTooLarge(u32),
    UnknownName(String),
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::TooFewLevels { min, got } => {
                write!(f, "need at least {min} levels, got {got}")
            }
            GeneratorError::StageTooLarge(n) => {
                write!(f, "stage {n} exceeds the maximum {MAX_SIERPINSKI_STAGE}")
            }
            GeneratorError::UnknownName(s) => write!(
                f,
                "unknown graph name {s:?} (expected H, K, Kprime, A, Aprime or Adoubleprime)"
            ),
        }
    }
}

impl core::error::Error for GeneratorError {}

/// The triangle with `n` horizontal lines.
pub fn triangle(n: u32) -> Result<TriGridGraph, GeneratorError> {
    if n < 1 {
        return Err(GeneratorError::TooFewLevels { min: 1, got: n });
    }
    let m = i64::from(n) - 1;
    let mut cells = Vec::new();
    for y in 0..m {
        for x in 0..m - y {
            cells.push(CellRef::up(x, y));
            if x + y <= m - 2 {
                cells.push(CellRef::down(x, y));
            }
        }
    }
    if n == 1 {
        return Ok(TriGridGraph::with_isolated_vertex(GridCoord::new(0, 0)));
    }
    Ok(TriGridGraph::new(cells))
}

/// Maximum subdivision of `T_n`.
pub fn an(n: u32) -> Result<SubdividedGraph, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewLevels { min: 2, got: n });
    }
    Ok(SubdividedGraph::maximum(triangle(n)?))
}

/// Cells of the stage-`n` gasket.
pub fn sierpinski_cells(n: u32) -> Result<BTreeSet<CellRef>, GeneratorError> {
    if n > MAX_SIERPINSKI_STAGE {
        return Err(GeneratorError::StageTooLarge(n));
    }
    let mut cells = BTreeSet::from([CellRef::up(0, 0)]);
    for k in 0..n {
        let s = 1i64 << k;
        let shifted: Vec<CellRef> = cells
            .iter()
            .flat_map(|&c| [c.translate(s, 0), c.translate(0, s)])
            .collect();
        cells.extend(shifted);
    }
    Ok(cells)
}

/// The stage-`n` Sierpiński gasket graph.
pub fn sierpinski(n: u32) -> Result<TriGridGraph, GeneratorError> {
    Ok(TriGridGraph::new(sierpinski_cells(n)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Named {
    H,
    K,
    KPrime,
    A,
    APrime,
    ADoublePrime,
}

impl Named {
    pub const ALL: [Named; 6] = [
        Named::H,
        Named::K,
        Named::KPrime,
        Named::A,
        Named::APrime,
        Named::ADoublePrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::H => "H",
            Named::K => "K",
            Named::KPrime => "Kprime",
            Named::A => "A",
            Named::APrime => "Aprime",
            Named::ADoublePrime => "Adoubleprime",
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Named {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        let alias = match key {
            "K'" | "K′" => Some(Named::KPrime),
            "A'" | "A′" => Some(Named::APrime),
            "A''" | "A″" => Some(Named::ADoublePrime),
            _ => None,
        };
        alias
            .or_else(|| {
                Named::ALL
                    .into_iter()
                    .find(|n| n.name().eq_ignore_ascii_case(key))
            })
            .ok_or_else(|| GeneratorError::UnknownName(key.to_string()))
    }
}

/// A named graph with its conventional vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: Named,
    base: TriGridGraph,
    subdivided: Option<SubdividedGraph>,
    labels: Vec<(String, Vertex)>,
}

impl NamedGraph {
    pub fn base(&self) -> &TriGridGraph {
        &self.base
    }

    /// Present for the subdivided graphs `K′`, `A′` and `A″`.
    pub fn subdivided(&self) -> Option<&SubdividedGraph> {
        self.subdivided.as_ref()
    }

    /// The graph itself, over grid points and apexes.
    pub fn graph(&self) -> Graph<Vertex> {
        match &self.subdivided {
            Some(sg) => sg.graph().clone(),
            None => self
                .base
                .to_graph()
                .map_labels(|&p| Vertex::Grid(p))
                .expect("relabelling is injective"),
        }
    }

    pub fn labels(&self) -> &[(String, Vertex)] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().find(|(l, _)| l == label).map(|&(_, v)| v)
    }

    pub fn label_of(&self, v: Vertex) -> Option<&str> {
        self.labels.iter().find(|&&(_, w)| w == v).map(|(l, _)| l.as_str())
    }
}

fn grid_labels(points: &[(&str, i64, i64)]) -> Vec<(String, Vertex)> {
    points
        .iter()
        .map(|&(l, x, y)| (l.to_string(), Vertex::Grid(GridCoord::new(x, y))))
        .collect()
}

const H_POINTS: [(&str, i64, i64); 7] = [
    ("1", 1, 0),
    ("2", 2, 0),
    ("3", 2, 1),
    ("4", 1, 2),
    ("5", 0, 2),
    ("6", 0, 1),
    ("7", 1, 1),
];

const K_POINTS: [(&str, i64, i64); 9] = [
    ("1", 1, 1),
    ("2", 2, 0),
    ("3", 2, 1),
    ("4", 3, 1),
    ("5", 2, 2),
    ("6", 1, 3),
    ("7", 1, 2),
    ("8", 0, 3),
    ("9", 0, 2),
];

/// Labels 2 to 7; label 1 is the apex of `A″`.
const A_POINTS: [(&str, i64, i64); 6] = [
    ("2", 0, 1),
    ("3", 1, 1),
    ("4", 1, 0),
    ("5", 0, 2),
    ("6", 2, 0),
    ("7", 0, 0),
];

/// Cells of `K` by corner labels: 179, 123, 345, 567, 789.
pub const K_CELLS: [CellRef; 5] = [
    CellRef::down(0, 1),
    CellRef::down(1, 0),
    CellRef::up(2, 1),
    CellRef::up(1, 2),
    CellRef::up(0, 2),
];

/// Cells 123 and 567 of `K`, subdivided in `K′`.
pub const K_PRIME_SUBDIVIDED: [CellRef; 2] = [CellRef::down(1, 0), CellRef::up(1, 2)];

/// The central cell of `A`.
pub const A_CENTRE: CellRef = CellRef::down(0, 0);

/// The two Up cells of `A` subdivided in `A′`.
pub const A_PRIME_SUBDIVIDED: [CellRef; 2] = [CellRef::up(0, 0), CellRef::up(1, 0)];

pub fn named(name: Named) -> NamedGraph {
    let (base, cells, mut labels): (TriGridGraph, Vec<CellRef>, _) = match name {
        Named::H => (
            TriGridGraph::new([
                CellRef::up(1, 0),
                CellRef::down(1, 0),
                CellRef::up(1, 1),
                CellRef::down(0, 1),
                CellRef::up(0, 1),
                CellRef::down(0, 0),
            ]),
            Vec::new(),
            grid_labels(&H_POINTS),
        ),
        Named::K | Named::KPrime => (
            TriGridGraph::new(K_CELLS),
            if name == Named::KPrime {
                K_PRIME_SUBDIVIDED.to_vec()
            } else {
                Vec::new()
            },
            grid_labels(&K_POINTS),
        ),
        Named::A | Named::APrime | Named::ADoublePrime => (
            triangle(3).expect("three levels"),
            match name {
                Named::APrime => A_PRIME_SUBDIVIDED.to_vec(),
                Named::ADoublePrime => alloc::vec![A_CENTRE],
                _ => Vec::new(),
            },
            grid_labels(&A_POINTS),
        ),
    };
    let subdivided = match name {
        Named::KPrime | Named::APrime | Named::ADoublePrime => {
            for &c in &cells {
                let label = match name {
                    Named::ADoublePrime => "1".to_string(),
                    _ => {
                        let mut corners: Vec<&str> = c
                            .corners()
                            .iter()
                            .map(|&p| {
                                let v = Vertex::Grid(p);
                                let (s, _) = labels.iter().find(|&&(_, w)| w == v).expect("labelled corner");
                                s.as_str()
                            })
                            .collect();
                        corners.sort_unstable();
                        alloc::format!("P{}", corners.concat())
                    }
                };
                labels.push((label, Vertex::Apex(c)));
            }
            Some(SubdividedGraph::new(base.clone(), cells).expect("named cells belong"))
        }
        _ => None,
    };
    labels.sort_by(|a, b| a.0.cmp(&b.0));
    NamedGraph {
        name,
        base,
        subdivided,
        labels,
    }
}

/// The seven-vertex obstruction: `A` with its central cell subdivided.
pub fn a_double_prime() -> SubdividedGraph {
    SubdividedGraph::new(triangle(3).expect("three levels"), [A_CENTRE]).expect("centre belongs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{CellKind, Pointing};
    use crate::matcher::{find_induced_pattern, MatchOutcome};

    #[test]
    fn sierpinski_counts() {
        for n in 0..=6u32 {
            let g = sierpinski(n).unwrap();
            let p = 3usize.pow(n);
            assert_eq!(g.vertices().len(), 3 * (p + 1) / 2, "stage {n}");
            assert_eq!(g.edges().len(), 3 * p, "stage {n}");
            // The specified cells are all boundary; the unit holes are
            // completed by their edges and belong as interior cells.
            assert!(sierpinski_cells(n).unwrap().iter().all(|&c| g.classify_cell(c) == Ok(CellKind::Boundary)));
            let holes = if n == 0 { 0 } else { 3usize.pow(n - 1) };
            assert_eq!(g.boundary_cells().count(), p);
            assert_eq!(g.interior_cells().count(), holes);
            assert_eq!(g.belonging_cells().len(), p + holes);
        }
        assert!(sierpinski(MAX_SIERPINSKI_STAGE + 1).is_err());
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(triangle(0), Err(GeneratorError::TooFewLevels { min: 1, got: 0 }));
        let t1 = triangle(1).unwrap();
        assert_eq!((t1.vertices().len(), t1.belonging_cells().len()), (1, 0));
        for n in 2..=8u32 {
            let t = triangle(n).unwrap();
            let m = (n - 1) as usize;
            assert_eq!(t.vertices().len(), (m + 1) * (m + 2) / 2);
            assert_eq!(t.belonging_cells().len(), m * m);
            assert_eq!(t.specified_cells(), t.belonging_cells());
        }
        let t5 = triangle(5).unwrap();
        assert_eq!((t5.vertices().len(), t5.belonging_cells().len()), (15, 16));
    }

    #[test]
    fn triangle_interior_cells() {
        for n in 2..=7u32 {
            let t = triangle(n).unwrap();
            let m = i64::from(n) - 1;
            for &c in t.belonging_cells() {
                let (x, y) = (c.anchor.x, c.anchor.y);
                // An Up cell touches a side when it rests on y = 0, x = 0, or
                // the hypotenuse x + y = m - 1.
                let interior = match c.pointing {
                    Pointing::Down => true,
                    Pointing::Up => x > 0 && y > 0 && x + y < m - 1,
                };
                let expected = if interior {
                    CellKind::Interior
                } else {
                    CellKind::Boundary
                };
                assert_eq!(t.classify_cell(c), Ok(expected), "T_{n} {c}");
            }
        }
    }

    #[test]
    fn an_subdivides_up_cells_of_a() {
        assert!(an(1).is_err());
        let a3 = an(3).unwrap();
        let cells: Vec<CellRef> = a3.subdivided_cells().iter().copied().collect();
        assert_eq!(cells, [CellRef::up(0, 0), CellRef::up(0, 1), CellRef::up(1, 0)]);
        let a2 = an(2).unwrap();
        assert!(a2.graph().is_complete() && a2.graph().vertex_count() == 4);
    }

    #[test]
    fn names_parse() {
        for n in Named::ALL {
            assert_eq!(n.name().parse::<Named>(), Ok(n));
        }
        assert_eq!("A″".parse::<Named>(), Ok(Named::ADoublePrime));
        assert!("Q".parse::<Named>().is_err());
    }

    #[test]
    fn h_shape() {
        let h = named(Named::H);
        let g = h.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 12));
        assert_eq!(h.base().belonging_cells().len(), 6);
        let rim = h.base().edges().iter().filter(|&&e| h.base().boundary_type(e).is_ok()).count();
        assert_eq!(rim, 6);
    }

    #[test]
    fn k_shape() {
        let k = named(Named::K);
        assert_eq!(k.graph().vertex_count(), 9);
        assert_eq!(k.base().belonging_cells().len(), 5);
        let v = |l: &str| k.vertex(l).unwrap();
        assert!(!k.graph().contains_edge(&v("3"), &v("7")));
        let kp = named(Named::KPrime);
        let sg = kp.subdivided().unwrap();
        assert!(!sg.has_interior_subdivision());
        assert_eq!(kp.vertex("P123"), Some(Vertex::Apex(CellRef::down(1, 0))));
        assert_eq!(kp.vertex("P567"), Some(Vertex::Apex(CellRef::up(1, 2))));
    }

    #[test]
    fn a_double_prime_shape() {
        let a2 = named(Named::ADoublePrime);
        let g = a2.graph();
        assert_eq!(g, *a_double_prime().graph());
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 12));
        let v = |l: &str| a2.vertex(l).unwrap();
        for a in ["1", "2", "3", "4"] {
            for b in ["1", "2", "3", "4"] {
                assert_eq!(g.contains_edge(&v(a), &v(b)), a != b);
            }
        }
        assert!(g.contains_edge(&v("7"), &v("2")) && g.contains_edge(&v("7"), &v("4")));
        assert!(!g.contains_edge(&v("7"), &v("1")) && !g.contains_edge(&v("7"), &v("3")));
        let apexes = g.vertices().iter().filter(|v| v.is_apex()).count();
        assert_eq!(apexes, 1);
    }

    #[test]
    fn a_prime_is_boundary() {
        let ap = named(Named::APrime);
        assert!(!ap.subdivided().unwrap().has_interior_subdivision());
        assert_eq!(ap.graph().vertex_count(), 8);
    }

    #[test]
    fn t3_is_a() {
        let t3 = triangle(3).unwrap().to_graph();
        let a = named(Named::A).graph();
        assert_eq!(t3.vertex_count(), a.vertex_count());
        assert_eq!(t3.edge_count(), a.edge_count());
        assert!(matches!(find_induced_pattern(&t3, &a, 1_000_000), MatchOutcome::Found(_)));
    }
}
