//! Smart orientations of boundary subdivisions.
//!
//! Grid edges point left to right when horizontal and downwards otherwise.
//! The three edges inside a subdivided cell follow one of six templates,
//! and a cell may only use a template matching a boundary type in its
//! property set:
//!
//! | type | template | arcs (corners `L`, `R`, top `T` / bottom `B`, apex `P`) |
//! |------|----------|----------------------------------------------------------|
//! | NW   | `A`      | `T→P`, `P→L`, `P→R`                                      |
//! | NE   | `B`      | `T→P`, `L→P`, `R→P` (apex is a sink)                     |
//! | S    | `C`      | `T→P`, `L→P`, `P→R`                                      |
//! | SE   | `a`      | `L→P`, `R→P`, `P→B`                                      |
//! | SW   | `b`      | `P→L`, `P→R`, `P→B` (apex is a source)                   |
//! | N    | `c`      | `L→P`, `P→R`, `P→B`                                      |
//!
//! Upper-case templates apply to Up cells, lower-case ones to Down cells.
//! Every template sends the vertical spoke downwards, in agreement with the
//! grid rule.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::grid::{BoundaryType, CellRef, Pointing, PropertySet};
use crate::orientation::OrientedGraph;
use crate::subdivision::{SubdividedGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellTemplate {
    A,
    B,
    C,
    LowerA,
    LowerB,
    LowerC,
}

impl CellTemplate {
    pub const ALL: [CellTemplate; 6] = [
        CellTemplate::A,
        CellTemplate::B,
        CellTemplate::C,
        CellTemplate::LowerA,
        CellTemplate::LowerB,
        CellTemplate::LowerC,
    ];

    /// The kind of cell the template applies to.
    pub fn pointing(self) -> Pointing {
        match self {
            CellTemplate::A | CellTemplate::B | CellTemplate::C => Pointing::Up,
            _ => Pointing::Down,
        }
    }

    /// For corners `[L, R, T|B]`: whether the spoke points into the apex.
    fn into_apex(self) -> [bool; 3] {
        match self {
            CellTemplate::A => [false, false, true],
            CellTemplate::B => [true, true, true],
            CellTemplate::C => [true, false, true],
            CellTemplate::LowerA => [true, true, false],
            CellTemplate::LowerB => [false, false, false],
            CellTemplate::LowerC => [true, false, false],
        }
    }

    pub fn symbol(self) -> char {
        match self {
            CellTemplate::A => 'A',
            CellTemplate::B => 'B',
            CellTemplate::C => 'C',
            CellTemplate::LowerA => 'a',
            CellTemplate::LowerB => 'b',
            CellTemplate::LowerC => 'c',
        }
    }

    pub fn from_symbol(c: char) -> Option<CellTemplate> {
        CellTemplate::ALL.into_iter().find(|t| t.symbol() == c)
    }

    /// The three spoke arcs of `cell` under this template.
    pub fn arcs(self, cell: CellRef) -> Result<[(Vertex, Vertex); 3], SmartError> {
        if cell.pointing != self.pointing() {
            return Err(SmartError::WrongPointing { cell, template: self });
        }
        let apex = Vertex::Apex(cell);
        let corners = cell.corners();
        let into = self.into_apex();
        Ok(core::array::from_fn(|i| {
            let corner = Vertex::Grid(corners[i]);
            if into[i] {
                (corner, apex)
            } else {
                (apex, corner)
            }
        }))
    }
}

impl fmt::Display for CellTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The template licensed by a boundary type.
pub fn template_for(t: BoundaryType) -> CellTemplate {
    match t {
        BoundaryType::NW => CellTemplate::A,
        BoundaryType::NE => CellTemplate::B,
        BoundaryType::S => CellTemplate::C,
        BoundaryType::SE => CellTemplate::LowerA,
        BoundaryType::SW => CellTemplate::LowerB,
        BoundaryType::N => CellTemplate::LowerC,
    }
}

/// Template of the least type in the set (order `S < SE < NE < N < NW < SW`).
pub fn default_choice(ps: PropertySet) -> Result<CellTemplate, SmartError> {
    ps.first().map(template_for).ok_or(SmartError::EmptyPropertySet)
}

/// Direction classes of arcs in a smart orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcClass {
    /// Down-left along a rising grid line.
    A1,
    /// Down-right along a falling grid line.
    A2,
    /// Horizontal, left to right.
    A3,
    /// Vertical spoke, downwards.
    A4,
    /// Low-slope spoke, down-left.
    A5,
    /// Low-slope spoke, down-right.
    A6,
    /// Low-slope spoke, up-right.
    A7,
    /// Low-slope spoke, up-left.
    A8,
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", *self as u8 + 1)
    }
}

/// Class of the arc `tail → head`, by its direction vector.
pub fn arc_class(tail: Vertex, head: Vertex) -> Result<ArcClass, SmartError> {
    let (tx, ty) = tail.position_units();
    let (hx, hy) = head.position_units();
    Ok(match (hx - tx, hy - ty) {
        (-3, -3) => ArcClass::A1,
        (3, -3) => ArcClass::A2,
        (6, 0) => ArcClass::A3,
        (0, -2) => ArcClass::A4,
        (-3, -1) => ArcClass::A5,
        (3, -1) => ArcClass::A6,
        (3, 1) => ArcClass::A7,
        (-3, 1) => ArcClass::A8,
        _ => return Err(SmartError::UnclassifiedArc(tail, head)),
    })
}

/// Direction of a grid edge or vertical spoke: horizontal edges run left to
/// right, all others from the higher endpoint to the lower one.
pub fn grid_arc_direction(a: Vertex, b: Vertex) -> Result<(Vertex, Vertex), SmartError> {
    let (ax, ay) = a.position_units();
    let (bx, by) = b.position_units();
    match (bx - ax, by - ay) {
        (dx, 0) if dx != 0 => Ok(if dx > 0 { (a, b) } else { (b, a) }),
        (0, dy) | (3 | -3, dy @ (3 | -3)) if dy != 0 => Ok(if dy < 0 { (a, b) } else { (b, a) }),
        _ => Err(SmartError::TemplateGoverned(a, b)),
    }
}

/// Template per subdivided cell.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemplateChoice(BTreeMap<CellRef, CellTemplate>);

impl TemplateChoice {
    pub fn new() -> Self {
        TemplateChoice::default()
    }

    pub fn insert(&mut self, cell: CellRef, t: CellTemplate) -> Option<CellTemplate> {
        self.0.insert(cell, t)
    }

    pub fn get(&self, cell: CellRef) -> Option<CellTemplate> {
        self.0.get(&cell).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CellRef, CellTemplate)> + '_ {
        self.0.iter().map(|(&c, &t)| (c, t))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(CellRef, CellTemplate)> for TemplateChoice {
    fn from_iter<I: IntoIterator<Item = (CellRef, CellTemplate)>>(iter: I) -> Self {
        TemplateChoice(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmartError {
    /// Smart orientations exist only for boundary subdivisions.
    InteriorSubdivided(CellRef),
    IllegalTemplate {
        cell: CellRef,
        template: CellTemplate,
        property_set: PropertySet,
    },
    /// A template was chosen for a cell that is not subdivided.
    NotSubdivided(CellRef),
    WrongPointing {
        cell: CellRef,
        template: CellTemplate,
    },
    EmptyPropertySet,
    /// A low-slope spoke has no grid direction; its template decides.
    TemplateGoverned(Vertex, Vertex),
    UnclassifiedArc(Vertex, Vertex),
}

impl fmt::Display for SmartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmartError::InteriorSubdivided(c) => write!(f, "interior cell {c} is subdivided"),
            SmartError::IllegalTemplate {
                cell,
                template,
                property_set,
            } => write!(
                f,
                "template {template} is not licensed for cell {cell} with property set {property_set}"
            ),
            SmartError::NotSubdivided(c) => write!(f, "cell {c} is not subdivided"),
            SmartError::WrongPointing { cell, template } => {
                write!(f, "template {template} does not apply to cell {cell}")
            }
            SmartError::EmptyPropertySet => f.write_str("property set is empty"),
            SmartError::TemplateGoverned(a, b) => {
                write!(f, "edge {a}-{b} is a low-slope spoke directed by its template")
            }
            SmartError::UnclassifiedArc(a, b) => write!(f, "arc {a}->{b} fits no arc class"),
        }
    }
}

impl core::error::Error for SmartError {}

/// Templates licensed for a subdivided cell, in declaration order of the
/// boundary types.
pub fn licensed_templates(sg: &SubdividedGraph, cell: CellRef) -> Result<Vec<CellTemplate>, SmartError> {
    if !sg.subdivided_cells().contains(&cell) {
        return Err(SmartError::NotSubdivided(cell));
    }
    let ps = sg
        .base()
        .property_set(cell)
        .map_err(|_| SmartError::NotSubdivided(cell))?;
    if ps.is_empty() {
        return Err(SmartError::InteriorSubdivided(cell));
    }
    Ok(ps.iter().map(template_for).collect())
}

fn check_boundary(sg: &SubdividedGraph) -> Result<(), SmartError> {
    match sg.interior_subdivided_cells().next() {
        Some(c) => Err(SmartError::InteriorSubdivided(c)),
        None => Ok(()),
    }
}

/// Completes `choices` with defaults and checks every explicit entry.
pub fn resolve_choice(sg: &SubdividedGraph, choices: Option<&TemplateChoice>) -> Result<TemplateChoice, SmartError> {
    check_boundary(sg)?;
    if let Some(choices) = choices {
        if let Some((c, _)) = choices.iter().find(|(c, _)| !sg.subdivided_cells().contains(c)) {
            return Err(SmartError::NotSubdivided(c));
        }
    }
    let mut resolved = TemplateChoice::new();
    for &cell in sg.subdivided_cells() {
        let ps = sg.base().property_set(cell).expect("subdivided cells belong");
        let t = match choices.and_then(|ch| ch.get(cell)) {
            Some(t) => {
                if !ps.iter().any(|bt| template_for(bt) == t) {
                    return Err(SmartError::IllegalTemplate {
                        cell,
                        template: t,
                        property_set: ps,
                    });
                }
                t
            }
            None => default_choice(ps)?,
        };
        resolved.insert(cell, t);
    }
    Ok(resolved)
}

/// The smart orientation of a boundary subdivision. Cells missing from
/// `choices` take [`default_choice`].
pub fn smart_orient(
    sg: &SubdividedGraph,
    choices: Option<&TemplateChoice>,
) -> Result<OrientedGraph<Vertex>, SmartError> {
    let resolved = resolve_choice(sg, choices)?;
    let mut arcs = Vec::with_capacity(sg.graph().edge_count());
    for e in sg.base().edges() {
        let (a, b) = e.endpoints();
        arcs.push(grid_arc_direction(Vertex::Grid(a), Vertex::Grid(b))?);
    }
    for (cell, t) in resolved.iter() {
        let spokes = t.arcs(cell)?;
        // The vertical spoke is the last corner's; templates and the grid
        // rule must agree on it.
        debug_assert_eq!(
            grid_arc_direction(spokes[2].0, spokes[2].1).ok(),
            Some(spokes[2])
        );
        arcs.extend(spokes);
    }
    Ok(OrientedGraph::from_arcs(sg.graph().clone(), arcs).expect("one arc per edge"))
}

/// Every licensed template assignment for a boundary subdivision, as an
/// odometer over the subdivided cells in order.
#[derive(Debug, Clone)]
pub struct Assignments {
    cells: Vec<CellRef>,
    options: Vec<Vec<CellTemplate>>,
    digits: Option<Vec<usize>>,
}

impl Assignments {
    pub fn new(sg: &SubdividedGraph) -> Result<Self, SmartError> {
        check_boundary(sg)?;
        let cells: Vec<CellRef> = sg.subdivided_cells().iter().copied().collect();
        let options = cells
            .iter()
            .map(|&c| licensed_templates(sg, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Assignments {
            digits: Some(alloc::vec![0; cells.len()]),
            cells,
            options,
        })
    }

    /// Total number of assignments.
    pub fn total(&self) -> u128 {
        self.options.iter().map(|o| o.len() as u128).product()
    }
}

impl Iterator for Assignments {
    type Item = TemplateChoice;

    fn next(&mut self) -> Option<TemplateChoice> {
        let digits = self.digits.as_mut()?;
        let choice = self
            .cells
            .iter()
            .zip(digits.iter())
            .zip(&self.options)
            .map(|((&c, &d), opts)| (c, opts[d]))
            .collect();
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.options[i].len() {
                break;
            }
            digits[i] = 0;
        }
        Some(choice)
    }
}

/// A directed path breaking one of the layering properties of smart
/// orientations. Each variant names the path's first and last vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    /// Ends strictly left of its start on the same horizontal line.
    Leftward(Vertex, Vertex),
    /// Ends on a higher horizontal line than it starts.
    Upward(Vertex, Vertex),
    /// Dips below its line and returns without passing a `c` apex.
    ReturnWithoutC(Vertex, Vertex),
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::Leftward(a, b) => write!(f, "path from {a} runs left to {b}"),
            PathViolation::Upward(a, b) => write!(f, "path from {a} climbs to {b}"),
            PathViolation::ReturnWithoutC(a, b) => {
                write!(f, "path from {a} dips and returns to {b} avoiding every c apex")
            }
        }
    }
}

/// Checks every directed path starting at a grid vertex: none moves left
/// along its line or climbs to a higher line, and any that drops below its
/// line and comes back passes the apex of a Down cell oriented by `c`.
pub fn check_path_properties(
    d: &OrientedGraph<Vertex>,
    choice: &TemplateChoice,
) -> Result<(), PathViolation> {
    let g = d.base();
    let n = g.vertex_count();
    let succ = d.successors();
    let is_c_apex: Vec<bool> = g
        .vertices()
        .iter()
        .map(|v| matches!(v, Vertex::Apex(c) if choice.get(*c) == Some(CellTemplate::LowerC)))
        .collect();
    // State: vertex, dipped below the start line, passed a c apex.
    let state = |v: usize, dipped: bool, c: bool| v * 4 + usize::from(dipped) * 2 + usize::from(c);
    for s in 0..n {
        let start = *g.vertex(s);
        if start.is_apex() {
            continue;
        }
        let (sx, sy) = start.position_units();
        let mut seen = alloc::vec![false; 4 * n];
        let mut stack = alloc::vec![(s, false, false)];
        seen[state(s, false, false)] = true;
        while let Some((v, dipped, c)) = stack.pop() {
            let here = *g.vertex(v);
            if v != s && !here.is_apex() {
                let (x, y) = here.position_units();
                if y > sy {
                    return Err(PathViolation::Upward(start, here));
                }
                if y == sy && x < sx {
                    return Err(PathViolation::Leftward(start, here));
                }
                if y == sy && dipped && !c {
                    return Err(PathViolation::ReturnWithoutC(start, here));
                }
            }
            for w in succ[v].ones() {
                let next = (
                    w,
                    dipped || g.vertex(w).position_units().1 < sy,
                    c || is_c_apex[w],
                );
                if !seen[state(next.0, next.1, next.2)] {
                    seen[state(next.0, next.1, next.2)] = true;
                    stack.push(next);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::generators::{self, Named};
    use crate::grid::{GridCoord, TriGridGraph};

    fn grid(x: i64, y: i64) -> Vertex {
        Vertex::Grid(GridCoord::new(x, y))
    }

    #[test]
    fn correspondence() {
        assert_eq!(template_for(BoundaryType::NW), CellTemplate::A);
        assert_eq!(template_for(BoundaryType::NE), CellTemplate::B);
        assert_eq!(template_for(BoundaryType::S), CellTemplate::C);
        assert_eq!(template_for(BoundaryType::SE), CellTemplate::LowerA);
        assert_eq!(template_for(BoundaryType::SW), CellTemplate::LowerB);
        assert_eq!(template_for(BoundaryType::N), CellTemplate::LowerC);
        for t in BoundaryType::ALL {
            // S, NE, NW are Up-cell types.
            let up = matches!(t, BoundaryType::S | BoundaryType::NE | BoundaryType::NW);
            assert_eq!(template_for(t).pointing() == Pointing::Up, up);
        }
    }

    #[test]
    fn defaults() {
        let ps = |ts: &[BoundaryType]| ts.iter().copied().collect::<PropertySet>();
        assert_eq!(
            default_choice(ps(&[BoundaryType::SW, BoundaryType::SE])),
            Ok(CellTemplate::LowerA)
        );
        assert_eq!(default_choice(ps(&[BoundaryType::N])), Ok(CellTemplate::LowerC));
        assert_eq!(
            default_choice(ps(&[BoundaryType::S, BoundaryType::NW, BoundaryType::NE])),
            Ok(CellTemplate::C)
        );
        assert_eq!(default_choice(PropertySet::EMPTY), Err(SmartError::EmptyPropertySet));
    }

    #[test]
    fn grid_directions() {
        assert_eq!(grid_arc_direction(grid(1, 0), grid(0, 0)), Ok((grid(0, 0), grid(1, 0))));
        assert_eq!(grid_arc_direction(grid(1, 0), grid(0, 1)), Ok((grid(0, 1), grid(1, 0))));
        assert_eq!(grid_arc_direction(grid(0, 0), grid(0, 1)), Ok((grid(0, 1), grid(0, 0))));
        let cell = CellRef::up(0, 0);
        let apex = Vertex::Apex(cell);
        assert_eq!(grid_arc_direction(apex, grid(0, 1)), Ok((grid(0, 1), apex)));
        assert_eq!(
            grid_arc_direction(apex, grid(0, 0)),
            Err(SmartError::TemplateGoverned(apex, grid(0, 0)))
        );
        let down = Vertex::Apex(CellRef::down(0, 0));
        assert_eq!(grid_arc_direction(grid(1, 0), down), Ok((down, grid(1, 0))));
    }

    #[test]
    fn vertical_spokes_point_down_in_every_template() {
        for t in CellTemplate::ALL {
            let cell = match t.pointing() {
                Pointing::Up => CellRef::up(2, -1),
                Pointing::Down => CellRef::down(2, -1),
            };
            let arcs = t.arcs(cell).unwrap();
            assert_eq!(grid_arc_direction(arcs[2].0, arcs[2].1), Ok(arcs[2]));
            assert_eq!(arc_class(arcs[2].0, arcs[2].1), Ok(ArcClass::A4));
            for (a, b) in arcs {
                assert!(arc_class(a, b).is_ok());
            }
        }
        assert!(CellTemplate::A.arcs(CellRef::down(0, 0)).is_err());
    }

    #[test]
    fn sink_and_source_templates() {
        let up = CellRef::up(0, 0);
        let apex = Vertex::Apex(up);
        assert!(CellTemplate::B.arcs(up).unwrap().iter().all(|&(_, h)| h == apex));
        let down = CellRef::down(0, 0);
        let apex = Vertex::Apex(down);
        assert!(CellTemplate::LowerB.arcs(down).unwrap().iter().all(|&(t, _)| t == apex));
    }

    #[test]
    fn arc_classes() {
        assert_eq!(arc_class(grid(0, 0), grid(1, 0)), Ok(ArcClass::A3));
        assert_eq!(arc_class(grid(0, 1), grid(0, 0)), Ok(ArcClass::A1));
        assert_eq!(arc_class(grid(0, 1), grid(1, 0)), Ok(ArcClass::A2));
        let p = Vertex::Apex(CellRef::up(0, 0));
        assert_eq!(arc_class(grid(0, 1), p), Ok(ArcClass::A4));
        // Template A: apex to bottom-left and bottom-right corners.
        assert_eq!(arc_class(p, grid(0, 0)), Ok(ArcClass::A5));
        assert_eq!(arc_class(p, grid(1, 0)), Ok(ArcClass::A6));
        assert_eq!(arc_class(grid(0, 0), p), Ok(ArcClass::A7));
        assert_eq!(arc_class(grid(1, 0), p), Ok(ArcClass::A8));
        assert_eq!(ArcClass::A8.to_string(), "a8");
        assert!(arc_class(grid(1, 0), grid(0, 0)).is_err());
    }

    #[test]
    fn refuses_interior_subdivision() {
        let named = generators::named(Named::ADoublePrime);
        let sg = named.subdivided().unwrap();
        assert_eq!(
            smart_orient(sg, None),
            Err(SmartError::InteriorSubdivided(CellRef::down(0, 0)))
        );
    }

    #[test]
    fn rejects_unlicensed_and_foreign_choices() {
        let cell = CellRef::up(0, 0);
        let t = TriGridGraph::new([cell, CellRef::up(1, 0), CellRef::up(0, 1)]);
        let sg = SubdividedGraph::new(t, [cell]).unwrap();
        // Up(0,0) in the triangle has boundary types S and NW only.
        let ps = sg.base().property_set(cell).unwrap();
        assert_eq!(ps.to_string(), "{S,NW}");
        let bad: TemplateChoice = [(cell, CellTemplate::B)].into_iter().collect();
        assert_eq!(
            smart_orient(&sg, Some(&bad)),
            Err(SmartError::IllegalTemplate {
                cell,
                template: CellTemplate::B,
                property_set: ps
            })
        );
        let foreign: TemplateChoice = [(CellRef::up(1, 0), CellTemplate::C)].into_iter().collect();
        assert_eq!(
            smart_orient(&sg, Some(&foreign)),
            Err(SmartError::NotSubdivided(CellRef::up(1, 0)))
        );
        let ok: TemplateChoice = [(cell, CellTemplate::A)].into_iter().collect();
        assert!(smart_orient(&sg, Some(&ok)).unwrap().is_semi_transitive());
    }

    #[test]
    fn path_checker_flags_broken_layering() {
        let cell = CellRef::down(0, 0);
        let sg = SubdividedGraph::new(TriGridGraph::new([cell]), [cell]).unwrap();
        let c: TemplateChoice = [(cell, CellTemplate::LowerC)].into_iter().collect();
        let d = smart_orient(&sg, Some(&c)).unwrap();
        assert_eq!(check_path_properties(&d, &c), Ok(()));
        // The same arcs, but credited to a template without the detour.
        let a: TemplateChoice = [(cell, CellTemplate::LowerA)].into_iter().collect();
        assert_eq!(
            check_path_properties(&d, &a),
            Err(PathViolation::ReturnWithoutC(grid(0, 1), grid(1, 1)))
        );
        let rev = d.reverse_all();
        assert!(matches!(
            check_path_properties(&rev, &c),
            Err(PathViolation::Upward(..) | PathViolation::Leftward(..))
        ));
    }

    #[test]
    fn assignments_enumerate_the_product() {
        let sg = SubdividedGraph::maximum(generators::triangle(3).unwrap());
        let all = Assignments::new(&sg).unwrap();
        // Each corner cell of the triangle carries two boundary types.
        assert_eq!(all.total(), 8);
        let choices: Vec<TemplateChoice> = all.collect();
        assert_eq!(choices.len(), 8);
        for ch in &choices {
            assert!(smart_orient(&sg, Some(ch)).unwrap().is_semi_transitive());
        }
        let mut dedup = choices.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }
}
