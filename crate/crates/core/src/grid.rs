//! Geometry of the triangular tiling and grid graphs built from cell sets.
//!
//! A lattice point `(x, y)` sits at Cartesian position `(x + y/2, y·√3/2)`.
//! The cell `Up(x, y)` has corners `(x, y)`, `(x+1, y)`, `(x, y+1)`; the
//! cell `Down(x, y)` has corners `(x+1, y)`, `(x, y+1)`, `(x+1, y+1)`.
//! All graph logic uses these integer coordinates; [`GridCoord::cartesian`]
//! is only for layout.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;

const HALF_SQRT_3: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridCoord {
    pub x: i64,
    pub y: i64,
}

impl GridCoord {
    pub const fn new(x: i64, y: i64) -> Self {
        GridCoord { x, y }
    }

    pub fn offset(self, dx: i64, dy: i64) -> Self {
        GridCoord::new(self.x + dx, self.y + dy)
    }

    /// Cartesian position in the plane, for layout and export only.
    pub fn cartesian(self) -> (f64, f64) {
        (self.x as f64 + self.y as f64 / 2.0, self.y as f64 * HALF_SQRT_3)
    }

    /// Whether the two points are joined by an edge of the tiling.
    pub fn is_adjacent(self, other: GridCoord) -> bool {
        matches!(
            (other.x - self.x, other.y - self.y),
            (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, -1) | (-1, 1)
        )
    }

    /// Proper 3-coloring of the whole tiling: `(x − y) mod 3`.
    pub fn color(self) -> u8 {
        (self.x - self.y).rem_euclid(3) as u8
    }
}

impl fmt::Display for GridCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Error for the textual forms of coordinates, cells and vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseGridError;

impl fmt::Display for ParseGridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected `(x,y)`, `Up(x,y)` or `Down(x,y)`")
    }
}

impl core::error::Error for ParseGridError {}

impl FromStr for GridCoord {
    type Err = ParseGridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(ParseGridError)?;
        let (x, y) = inner.split_once(',').ok_or(ParseGridError)?;
        Ok(GridCoord::new(
            x.trim().parse().map_err(|_| ParseGridError)?,
            y.trim().parse().map_err(|_| ParseGridError)?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pointing {
    Up,
    Down,
}

/// A triangular face of the tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellRef {
    pub anchor: GridCoord,
    pub pointing: Pointing,
}

impl CellRef {
    pub const fn up(x: i64, y: i64) -> Self {
        CellRef {
            anchor: GridCoord::new(x, y),
            pointing: Pointing::Up,
        }
    }

    pub const fn down(x: i64, y: i64) -> Self {
        CellRef {
            anchor: GridCoord::new(x, y),
            pointing: Pointing::Down,
        }
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        CellRef {
            anchor: self.anchor.offset(dx, dy),
            pointing: self.pointing,
        }
    }

    /// Corners as `[left, right, apex-side]`: for an Up cell the third
    /// corner is the top, for a Down cell it is the bottom.
    pub fn corners(self) -> [GridCoord; 3] {
        let p = self.anchor;
        match self.pointing {
            Pointing::Up => [p, p.offset(1, 0), p.offset(0, 1)],
            Pointing::Down => [p.offset(0, 1), p.offset(1, 1), p.offset(1, 0)],
        }
    }

    pub fn edges(self) -> [GridEdge; 3] {
        let [a, b, c] = self.corners();
        [
            GridEdge::between(a, b).expect("cell corners are adjacent"),
            GridEdge::between(b, c).expect("cell corners are adjacent"),
            GridEdge::between(a, c).expect("cell corners are adjacent"),
        ]
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.pointing {
            Pointing::Up => "Up",
            Pointing::Down => "Down",
        };
        write!(f, "{}({},{})", tag, self.anchor.x, self.anchor.y)
    }
}

impl FromStr for CellRef {
    type Err = ParseGridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (pointing, rest) = if let Some(rest) = s.strip_prefix("Up") {
            (Pointing::Up, rest)
        } else if let Some(rest) = s.strip_prefix("Down") {
            (Pointing::Down, rest)
        } else {
            return Err(ParseGridError);
        };
        Ok(CellRef {
            anchor: rest.parse()?,
            pointing,
        })
    }
}

/// Direction class of a tiling edge, by its Cartesian direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Parallel to `(1, 0)`.
    Horizontal,
    /// Parallel to `(1/2, √3/2)`.
    Rising,
    /// Parallel to `(−1/2, √3/2)`.
    Falling,
}

/// An edge of the tiling in canonical form: `to − from` is one of
/// `(1, 0)`, `(0, 1)` or `(−1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    from: GridCoord,
    to: GridCoord,
}

impl GridEdge {
    /// The edge joining two points, if they are adjacent in the tiling.
    pub fn between(a: GridCoord, b: GridCoord) -> Option<GridEdge> {
        let (from, to) = match (b.x - a.x, b.y - a.y) {
            (1, 0) | (0, 1) | (-1, 1) => (a, b),
            (-1, 0) | (0, -1) | (1, -1) => (b, a),
            _ => return None,
        };
        Some(GridEdge { from, to })
    }

    pub fn endpoints(self) -> (GridCoord, GridCoord) {
        (self.from, self.to)
    }

    pub fn direction(self) -> Direction {
        match (self.to.x - self.from.x, self.to.y - self.from.y) {
            (1, 0) => Direction::Horizontal,
            (0, 1) => Direction::Rising,
            _ => Direction::Falling,
        }
    }

    /// The two cells of the tiling bordering this edge, paired with the
    /// boundary type the edge would have if only that cell belonged.
    pub fn sides(self) -> [(CellRef, BoundaryType); 2] {
        let GridCoord { x, y } = self.from;
        match self.direction() {
            Direction::Horizontal => [
                (CellRef::up(x, y), BoundaryType::S),
                (CellRef::down(x, y - 1), BoundaryType::N),
            ],
            Direction::Rising => [
                (CellRef::up(x, y), BoundaryType::NW),
                (CellRef::down(x - 1, y), BoundaryType::SE),
            ],
            Direction::Falling => [
                (CellRef::up(x - 1, y), BoundaryType::NE),
                (CellRef::down(x - 1, y), BoundaryType::SW),
            ],
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.from, self.to)
    }
}

/// Type of a boundary edge, named after the side of its belonging cell the
/// edge lies on. Declaration order is the order used for defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryType {
    S,
    SE,
    NE,
    N,
    NW,
    SW,
}

impl BoundaryType {
    pub const ALL: [BoundaryType; 6] = [
        BoundaryType::S,
        BoundaryType::SE,
        BoundaryType::NE,
        BoundaryType::N,
        BoundaryType::NW,
        BoundaryType::SW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryType::S => "S",
            BoundaryType::SE => "SE",
            BoundaryType::NE => "NE",
            BoundaryType::N => "N",
            BoundaryType::NW => "NW",
            BoundaryType::SW => "SW",
        }
    }
}

impl fmt::Display for BoundaryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of boundary types, iterated in declaration order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PropertySet(u8);

impl PropertySet {
    pub const EMPTY: PropertySet = PropertySet(0);

    pub fn insert(&mut self, t: BoundaryType) {
        self.0 |= 1 << t as u8;
    }

    pub fn contains(self, t: BoundaryType) -> bool {
        self.0 & (1 << t as u8) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = BoundaryType> {
        BoundaryType::ALL.into_iter().filter(move |&t| self.contains(t))
    }

    /// Least member in declaration order.
    pub fn first(self) -> Option<BoundaryType> {
        self.iter().next()
    }
}

impl FromIterator<BoundaryType> for PropertySet {
    fn from_iter<I: IntoIterator<Item = BoundaryType>>(iter: I) -> Self {
        let mut set = PropertySet::EMPTY;
        for t in iter {
            set.insert(t);
        }
        set
    }
}

impl fmt::Display for PropertySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(t.name())?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Boundary,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellKind {
    Boundary,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridError {
    EdgeNotInGraph(GridEdge),
    CellNotInGraph(CellRef),
    InteriorEdge(GridEdge),
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::EdgeNotInGraph(e) => write!(f, "edge {e} is not in the grid graph"),
            GridError::CellNotInGraph(c) => write!(f, "cell {c} does not belong to the grid graph"),
            GridError::InteriorEdge(e) => write!(f, "edge {e} is interior and has no boundary type"),
        }
    }
}

impl core::error::Error for GridError {}

/// A triangular grid graph: all edges bounding a finite set of cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriGridGraph {
    specified: BTreeSet<CellRef>,
    vertices: BTreeSet<GridCoord>,
    edges: BTreeSet<GridEdge>,
    belonging: BTreeSet<CellRef>,
}

impl TriGridGraph {
    /// Builds the graph bounding `cells`; cells completed by those edges
    /// belong as well.
    pub fn new<I: IntoIterator<Item = CellRef>>(cells: I) -> Self {
        let specified: BTreeSet<CellRef> = cells.into_iter().collect();
        let edges: BTreeSet<GridEdge> = specified.iter().flat_map(|c| c.edges()).collect();
        let vertices = edges
            .iter()
            .flat_map(|e| {
                let (a, b) = e.endpoints();
                [a, b]
            })
            .collect();
        let belonging = edges
            .iter()
            .flat_map(|e| e.sides())
            .map(|(c, _)| c)
            .filter(|c| c.edges().iter().all(|e| edges.contains(e)))
            .collect();
        TriGridGraph {
            specified,
            vertices,
            edges,
            belonging,
        }
    }

    /// The one-vertex graph with no cells.
    pub fn with_isolated_vertex(p: GridCoord) -> Self {
        TriGridGraph {
            specified: BTreeSet::new(),
            vertices: BTreeSet::from([p]),
            edges: BTreeSet::new(),
            belonging: BTreeSet::new(),
        }
    }

    pub fn specified_cells(&self) -> &BTreeSet<CellRef> {
        &self.specified
    }

    pub fn vertices(&self) -> &BTreeSet<GridCoord> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<GridEdge> {
        &self.edges
    }

    pub fn belonging_cells(&self) -> &BTreeSet<CellRef> {
        &self.belonging
    }

    pub fn belongs(&self, c: CellRef) -> bool {
        self.belonging.contains(&c)
    }

    fn belonging_sides(&self, e: GridEdge) -> impl Iterator<Item = (CellRef, BoundaryType)> + '_ {
        e.sides().into_iter().filter(|(c, _)| self.belonging.contains(c))
    }

    pub fn classify_edge(&self, e: GridEdge) -> Result<EdgeKind, GridError> {
        if !self.edges.contains(&e) {
            return Err(GridError::EdgeNotInGraph(e));
        }
        Ok(match self.belonging_sides(e).count() {
            2 => EdgeKind::Interior,
            _ => EdgeKind::Boundary,
        })
    }

    pub fn classify_cell(&self, c: CellRef) -> Result<CellKind, GridError> {
        if !self.belongs(c) {
            return Err(GridError::CellNotInGraph(c));
        }
        let boundary = c
            .edges()
            .iter()
            .any(|&e| self.classify_edge(e) == Ok(EdgeKind::Boundary));
        Ok(if boundary {
            CellKind::Boundary
        } else {
            CellKind::Interior
        })
    }

    pub fn boundary_type(&self, e: GridEdge) -> Result<BoundaryType, GridError> {
        if self.classify_edge(e)? == EdgeKind::Interior {
            return Err(GridError::InteriorEdge(e));
        }
        let (_, t) = self
            .belonging_sides(e)
            .next()
            .expect("every edge bounds a belonging cell");
        Ok(t)
    }

    /// Boundary types of the cell's boundary edges; empty for interior cells.
    pub fn property_set(&self, c: CellRef) -> Result<PropertySet, GridError> {
        if !self.belongs(c) {
            return Err(GridError::CellNotInGraph(c));
        }
        Ok(c.edges()
            .iter()
            .filter_map(|&e| self.boundary_type(e).ok())
            .collect())
    }

    pub fn boundary_cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.belonging
            .iter()
            .copied()
            .filter(|&c| self.classify_cell(c) == Ok(CellKind::Boundary))
    }

    pub fn interior_cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.belonging
            .iter()
            .copied()
            .filter(|&c| self.classify_cell(c) == Ok(CellKind::Interior))
    }

    pub fn three_coloring(&self) -> BTreeMap<GridCoord, u8> {
        self.vertices.iter().map(|&v| (v, v.color())).collect()
    }

    /// The underlying simple graph.
    pub fn to_graph(&self) -> Graph<GridCoord> {
        let vertices: Vec<GridCoord> = self.vertices.iter().copied().collect();
        let index = |p: &GridCoord| vertices.binary_search(p).expect("edge endpoint is a vertex");
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (index(&a), index(&b))
            })
            .collect();
        Graph::from_index_edges(vertices, edges)
    }
}
