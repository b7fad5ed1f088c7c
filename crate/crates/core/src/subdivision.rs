//! Subdividing cells into plane copies of `K4`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::grid::{CellKind, CellRef, GridCoord, ParseGridError, Pointing, TriGridGraph};

/// A vertex of a subdivided grid graph: a lattice point or the apex placed
/// inside a subdivided cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Grid(GridCoord),
    Apex(CellRef),
}

impl Vertex {
    /// Exact position in units of `(1/6, √3/6)`: the x component is six
    /// times the Cartesian abscissa, the y component three times the row.
    /// Apexes sit at cell centroids.
    pub fn position_units(self) -> (i64, i64) {
        match self {
            Vertex::Grid(p) => (6 * p.x + 3 * p.y, 3 * p.y),
            Vertex::Apex(c) => {
                let p = c.anchor;
                match c.pointing {
                    Pointing::Up => (6 * p.x + 3 * p.y + 3, 3 * p.y + 1),
                    Pointing::Down => (6 * p.x + 3 * p.y + 6, 3 * p.y + 2),
                }
            }
        }
    }

    /// Cartesian position, for layout only.
    pub fn cartesian(self) -> (f64, f64) {
        let (x, y) = self.position_units();
        (x as f64 / 6.0, y as f64 * 0.288_675_134_594_812_9)
    }

    pub fn as_grid(self) -> Option<GridCoord> {
        match self {
            Vertex::Grid(p) => Some(p),
            Vertex::Apex(_) => None,
        }
    }

    pub fn is_apex(self) -> bool {
        matches!(self, Vertex::Apex(_))
    }
}

impl From<GridCoord> for Vertex {
    fn from(p: GridCoord) -> Self {
        Vertex::Grid(p)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Grid(p) => p.fmt(f),
            Vertex::Apex(c) => write!(f, "P@{c}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = ParseGridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().strip_prefix("P@") {
            Some(cell) => Ok(Vertex::Apex(cell.parse()?)),
            None => Ok(Vertex::Grid(s.parse()?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdivisionError {
    CellNotInGraph(CellRef),
}

impl fmt::Display for SubdivisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubdivisionError::CellNotInGraph(c) => {
                write!(f, "cell {c} does not belong to the grid graph")
            }
        }
    }
}

impl core::error::Error for SubdivisionError {}

/// A grid graph with a set of subdivided cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdividedGraph {
    base: TriGridGraph,
    subdivided: BTreeSet<CellRef>,
    graph: Graph<Vertex>,
}

impl SubdividedGraph {
    pub fn new<I: IntoIterator<Item = CellRef>>(
        base: TriGridGraph,
        cells: I,
    ) -> Result<Self, SubdivisionError> {
        let subdivided: BTreeSet<CellRef> = cells.into_iter().collect();
        if let Some(&c) = subdivided.iter().find(|&&c| !base.belongs(c)) {
            return Err(SubdivisionError::CellNotInGraph(c));
        }
        let vertices = base
            .vertices()
            .iter()
            .map(|&p| Vertex::Grid(p))
            .chain(subdivided.iter().map(|&c| Vertex::Apex(c)));
        let grid_edges = base.edges().iter().map(|e| {
            let (a, b) = e.endpoints();
            (Vertex::Grid(a), Vertex::Grid(b))
        });
        let spokes = subdivided
            .iter()
            .flat_map(|&c| c.corners().map(|p| (Vertex::Apex(c), Vertex::Grid(p))));
        let graph = Graph::new(vertices, grid_edges.chain(spokes))
            .expect("apexes join corners of belonging cells");
        Ok(SubdividedGraph {
            base,
            subdivided,
            graph,
        })
    }

    /// Subdivision of every boundary cell.
    pub fn maximum(base: TriGridGraph) -> Self {
        let cells: Vec<CellRef> = base.boundary_cells().collect();
        SubdividedGraph::new(base, cells).expect("boundary cells belong")
    }

    pub fn base(&self) -> &TriGridGraph {
        &self.base
    }

    pub fn subdivided_cells(&self) -> &BTreeSet<CellRef> {
        &self.subdivided
    }

    pub fn graph(&self) -> &Graph<Vertex> {
        &self.graph
    }

    /// Subdivided cells that are interior in the base graph.
    pub fn interior_subdivided_cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.subdivided
            .iter()
            .copied()
            .filter(|&c| self.base.classify_cell(c) == Ok(CellKind::Interior))
    }

    pub fn has_interior_subdivision(&self) -> bool {
        self.interior_subdivided_cells().next().is_some()
    }

    /// Word-representable exactly when no interior cell is subdivided.
    pub fn is_word_representable(&self) -> bool {
        !self.has_interior_subdivision()
    }

    /// The graph with every apex deleted.
    pub fn without_apexes(&self) -> Graph<Vertex> {
        self.graph.induced(|v| !v.is_apex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::generators;

    #[test]
    fn single_cell_becomes_k4() {
        let cell = CellRef::up(0, 0);
        let sg = SubdividedGraph::new(TriGridGraph::new([cell]), [cell]).unwrap();
        assert_eq!(sg.graph().vertex_count(), 4);
        assert!(sg.graph().is_complete());
        assert_eq!(SubdividedGraph::maximum(TriGridGraph::new([cell])), sg);
    }

    #[test]
    fn rejects_foreign_cells() {
        let g = TriGridGraph::new([CellRef::up(0, 0)]);
        assert_eq!(
            SubdividedGraph::new(g, [CellRef::down(0, 0)]),
            Err(SubdivisionError::CellNotInGraph(CellRef::down(0, 0)))
        );
    }

    #[test]
    fn central_cell_of_the_triangle() {
        let a = generators::triangle(3).unwrap();
        let sg = SubdividedGraph::new(a.clone(), [CellRef::down(0, 0)]).unwrap();
        assert_eq!((sg.graph().vertex_count(), sg.graph().edge_count()), (7, 12));
        assert!(sg.has_interior_subdivision());
        assert!(!sg.is_word_representable());
        let sides = SubdividedGraph::new(a, [CellRef::up(0, 0), CellRef::up(1, 0)]).unwrap();
        assert!(!sides.has_interior_subdivision());
    }

    #[test]
    fn apex_deletion_recovers_base() {
        let t = generators::triangle(5).unwrap();
        let sg = SubdividedGraph::maximum(t.clone());
        assert!(!sg.has_interior_subdivision());
        let s = sg.subdivided_cells().len();
        assert_eq!(sg.graph().vertex_count(), t.vertices().len() + s);
        assert_eq!(sg.graph().edge_count(), t.edges().len() + 3 * s);
        assert_eq!(
            sg.without_apexes(),
            t.to_graph().map_labels(|&p| Vertex::Grid(p)).unwrap()
        );
    }

    #[test]
    fn apex_is_adjacent_to_exactly_its_corners() {
        let sg = SubdividedGraph::maximum(generators::triangle(4).unwrap());
        let g = sg.graph();
        for &c in sg.subdivided_cells() {
            let i = g.index_of(&Vertex::Apex(c)).unwrap();
            let mut nbrs: Vec<Vertex> = g.neighbors(i).ones().map(|j| *g.vertex(j)).collect();
            nbrs.sort();
            let mut corners: Vec<Vertex> = c.corners().iter().map(|&p| Vertex::Grid(p)).collect();
            corners.sort();
            assert_eq!(nbrs, corners);
        }
    }

    #[test]
    fn vertex_text_round_trip() {
        for v in [
            Vertex::Grid(GridCoord::new(-2, 3)),
            Vertex::Apex(CellRef::up(1, 0)),
            Vertex::Apex(CellRef::down(0, -4)),
        ] {
            assert_eq!(v.to_string().parse::<Vertex>(), Ok(v));
        }
        assert_eq!(Vertex::Apex(CellRef::up(1, 0)).to_string(), "P@Up(1,0)");
    }

    #[test]
    fn apex_positions_are_centroids() {
        for c in [CellRef::up(2, -1), CellRef::down(-3, 2)] {
            let (sx, sy) = c
                .corners()
                .iter()
                .map(|&p| Vertex::Grid(p).position_units())
                .fold((0, 0), |(ax, ay), (x, y)| (ax + x, ay + y));
            assert_eq!(Vertex::Apex(c).position_units(), (sx / 3, sy / 3));
            assert_eq!(sx % 3, 0);
        }
    }
}
