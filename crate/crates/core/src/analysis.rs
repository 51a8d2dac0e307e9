//! Intersection analysis of a row trail (`T <- y`) and a column trail
//! (`x -> T`) computed on the same tableau.
//!
//! Geometric trails are broken lines through box centres. Centres are stored
//! doubled, `(2 col + 1, 2 row + 1)`, so every vertex is an integer point and
//! a box centre is exactly a point with two odd coordinates. All segment
//! tests are exact integer arithmetic.

use std::fmt;

use thiserror::Error;

use crate::insertion::{Trail, TrailKind};
use crate::tableau::{BoxCoord, Label};

/// A point in doubled box units: `(x, y) = (2 col + 1, 2 row + 1)` for a box centre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn center_of(b: BoxCoord) -> Point {
        Point {
            x: 2 * b.col as i64 + 1,
            y: 2 * b.row as i64 + 1,
        }
    }
}

/// Broken line through the centres of a trail's boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricTrail {
    pub vertices: Vec<Point>,
}

impl GeometricTrail {
    /// Segments between consecutive vertices. A single-vertex trail yields one
    /// degenerate segment so that it still takes part in intersection tests.
    fn segments(&self) -> Vec<(Point, Point)> {
        match self.vertices.as_slice() {
            [only] => vec![(*only, *only)],
            vs => vs.windows(2).map(|w| (w[0], w[1])).collect(),
        }
    }
}

pub fn geometric_trail(trail: &Trail) -> GeometricTrail {
    GeometricTrail {
        vertices: trail.boxes().map(Point::center_of).collect(),
    }
}

/// Neighbour boxes of the shared box `S`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Adjacency {
    /// Column-trail predecessor.
    pub a: bool,
    /// Row-trail predecessor.
    pub i: bool,
    /// Row-trail successor.
    pub j: bool,
    /// Column-trail successor.
    pub b: bool,
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (on, c) in [(self.a, 'A'), (self.i, 'I'), (self.j, 'J'), (self.b, 'B')] {
            if on {
                s.push(c);
            }
        }
        if s.is_empty() {
            s.push('-');
        }
        f.write_str(&s)
    }
}

/// The five ways the neighbours of `S` can share a side with it.
#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Configuration {
    JB,
    IJB,
    AJB,
    IJ,
    AB,
}

impl Configuration {
    pub const ALL: [Configuration; 5] = [
        Configuration::JB,
        Configuration::IJB,
        Configuration::AJB,
        Configuration::IJ,
        Configuration::AB,
    ];

    pub fn from_adjacency(adj: Adjacency) -> Option<Configuration> {
        use Configuration::*;
        match (adj.a, adj.i, adj.j, adj.b) {
            (false, false, true, true) => Some(JB),
            (false, true, true, true) => Some(IJB),
            (true, false, true, true) => Some(AJB),
            (false, true, true, false) => Some(IJ),
            (true, false, false, true) => Some(AB),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Configuration::JB => "JB",
            Configuration::IJB => "IJB",
            Configuration::AJB => "AJB",
            Configuration::IJ => "IJ",
            Configuration::AB => "AB",
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Data around a box shared by both trails and labelled in `T`.
///
/// `a`/`b` are the column-trail neighbours of `s`, `i`/`j` the row-trail
/// ones. A missing predecessor defaults to the inserted value of that trail
/// (`a = x`, `i = y`); a successor that is the new empty box is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongIntersection {
    pub s_box: BoxCoord,
    pub s: Label,
    pub a: Label,
    pub a_box: Option<BoxCoord>,
    pub b: Option<Label>,
    pub b_box: BoxCoord,
    pub i: Label,
    pub i_box: Option<BoxCoord>,
    pub j: Option<Label>,
    pub j_box: BoxCoord,
    /// Index of `S` in the row trail.
    pub row_index: usize,
    /// Index of `S` in the column trail.
    pub col_index: usize,
    pub adjacency: Adjacency,
    pub configuration: Configuration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionReport {
    Disjoint,
    /// Both trails end in the same new box. `a` is the column trail's last
    /// label (or `x`), `i` the row trail's last label (or `y`).
    SharedEmptyBox {
        s_box: BoxCoord,
        a: Label,
        i: Label,
    },
    Strong(StrongIntersection),
}

/// Which of the three intersection variants a report is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Disjoint,
    SharedEmptyBox,
    Strong,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Disjoint, Variant::SharedEmptyBox, Variant::Strong];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Disjoint => "Disjoint",
            Variant::SharedEmptyBox => "SharedEmptyBox",
            Variant::Strong => "Strong",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl IntersectionReport {
    pub fn variant(&self) -> Variant {
        match self {
            IntersectionReport::Disjoint => Variant::Disjoint,
            IntersectionReport::SharedEmptyBox { .. } => Variant::SharedEmptyBox,
            IntersectionReport::Strong(_) => Variant::Strong,
        }
    }

    pub fn strong(&self) -> Option<&StrongIntersection> {
        match self {
            IntersectionReport::Strong(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for IntersectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionReport::Disjoint => write!(f, "Disjoint"),
            IntersectionReport::SharedEmptyBox { s_box, a, i } => {
                write!(f, "SharedEmptyBox at {s_box}: i={i}, a={a}")
            }
            IntersectionReport::Strong(st) => {
                let opt = |v: Option<Label>| v.map_or("∅".to_string(), |v| v.to_string());
                write!(
                    f,
                    "Strong at {}: i={}, a={}, s={}, j={}, b={}, adjacency {}, configuration {}",
                    st.s_box,
                    st.i,
                    st.a,
                    st.s,
                    opt(st.j),
                    opt(st.b),
                    st.adjacency,
                    st.configuration
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("expected a row trail and a column trail")]
    WrongTrailKinds,
    #[error("geometric trails cross away from a shared box centre (doubled coords {x_num}/{den}, {y_num}/{den})")]
    WeakIntersectionDetected { x_num: i64, y_num: i64, den: i64 },
    #[error("geometric trails overlap along a segment")]
    OverlappingSegments,
    #[error("trails share {} boxes", .0.len())]
    MultipleSharedBoxes(Vec<BoxCoord>),
    #[error("shared box {0} is the empty box of only one trail")]
    EmptyBoxMismatch(BoxCoord),
    #[error("adjacency {0} around the shared box is not one of the five configurations")]
    ForbiddenConfiguration(Adjacency),
    #[error("trails do not intersect strongly")]
    NotAStrongIntersection,
}

fn cross(o: Point, p: Point, q: Point) -> i64 {
    (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)
}

fn on_segment(p: Point, (a, b): (Point, Point)) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Meeting of two closed segments.
#[derive(Debug, PartialEq, Eq)]
enum Meet {
    None,
    /// A single point with rational coordinates `(x_num / den, y_num / den)`.
    Point {
        x_num: i64,
        y_num: i64,
        den: i64,
    },
    /// Collinear with an overlap of positive length.
    Overlap,
}

fn meet(s: (Point, Point), t: (Point, Point)) -> Meet {
    let (p, p2) = s;
    let (q, q2) = t;
    let r = Point {
        x: p2.x - p.x,
        y: p2.y - p.y,
    };
    let d = Point {
        x: q2.x - q.x,
        y: q2.y - q.y,
    };
    let denom = r.x * d.y - r.y * d.x;
    if denom != 0 {
        // p + t r = q + u d with t, u in [0, 1].
        let qp = Point {
            x: q.x - p.x,
            y: q.y - p.y,
        };
        let mut t_num = qp.x * d.y - qp.y * d.x;
        let mut u_num = qp.x * r.y - qp.y * r.x;
        let mut den = denom;
        if den < 0 {
            den = -den;
            t_num = -t_num;
            u_num = -u_num;
        }
        if t_num < 0 || t_num > den || u_num < 0 || u_num > den {
            return Meet::None;
        }
        return Meet::Point {
            x_num: p.x * den + t_num * r.x,
            y_num: p.y * den + t_num * r.y,
            den,
        };
    }
    // Parallel, possibly degenerate.
    let point = |p: Point| Meet::Point {
        x_num: p.x,
        y_num: p.y,
        den: 1,
    };
    let s_degenerate = p == p2;
    let t_degenerate = q == q2;
    match (s_degenerate, t_degenerate) {
        (true, true) => {
            if p == q {
                point(p)
            } else {
                Meet::None
            }
        }
        (true, false) => {
            if on_segment(p, t) {
                point(p)
            } else {
                Meet::None
            }
        }
        (false, true) => {
            if on_segment(q, s) {
                point(q)
            } else {
                Meet::None
            }
        }
        (false, false) => {
            if cross(p, p2, q) != 0 {
                return Meet::None;
            }
            let ends: Vec<Point> = [p, p2]
                .into_iter()
                .filter(|&e| on_segment(e, t))
                .chain([q, q2].into_iter().filter(|&e| on_segment(e, s)))
                .collect();
            match ends.as_slice() {
                [] => Meet::None,
                [first, rest @ ..] if rest.iter().all(|e| e == first) => point(*first),
                _ => Meet::Overlap,
            }
        }
    }
}

fn is_box_center(x_num: i64, y_num: i64, den: i64) -> bool {
    x_num % den == 0 && y_num % den == 0 && (x_num / den) % 2 != 0 && (y_num / den) % 2 != 0
}

/// Classifies how the trails of `x -> T` (column) and `T <- y` (row) meet.
pub fn classify_intersection(
    row_trail: &Trail,
    col_trail: &Trail,
    x: Label,
    y: Label,
) -> Result<IntersectionReport, AnalysisError> {
    if row_trail.kind() != TrailKind::Row || col_trail.kind() != TrailKind::Column {
        return Err(AnalysisError::WrongTrailKinds);
    }
    let shared: Vec<BoxCoord> = row_trail
        .boxes()
        .filter(|b| col_trail.position_of(*b).is_some())
        .collect();
    if shared.len() > 1 {
        return Err(AnalysisError::MultipleSharedBoxes(shared));
    }

    let row_geo = geometric_trail(row_trail);
    let col_geo = geometric_trail(col_trail);
    for rs in row_geo.segments() {
        for cs in col_geo.segments() {
            match meet(rs, cs) {
                Meet::None => {}
                Meet::Overlap => return Err(AnalysisError::OverlappingSegments),
                Meet::Point { x_num, y_num, den } => {
                    let at_shared_center = is_box_center(x_num, y_num, den)
                        && shared.iter().any(|&b| {
                            let c = Point::center_of(b);
                            c.x * den == x_num && c.y * den == y_num
                        });
                    if !at_shared_center {
                        return Err(AnalysisError::WeakIntersectionDetected { x_num, y_num, den });
                    }
                }
            }
        }
    }

    let Some(&s_box) = shared.first() else {
        return Ok(IntersectionReport::Disjoint);
    };
    let row_index = row_trail
        .position_of(s_box)
        .expect("shared box is on the row trail");
    let col_index = col_trail
        .position_of(s_box)
        .expect("shared box is on the column trail");
    let row_steps = row_trail.steps();
    let col_steps = col_trail.steps();
    let row_last = row_index + 1 == row_steps.len();
    let col_last = col_index + 1 == col_steps.len();

    let pred_label = |steps: &[crate::insertion::TrailStep], k: usize, default: Label| {
        if k == 0 {
            default
        } else {
            steps[k - 1].label.expect("non-final steps are labelled")
        }
    };
    let pred_box =
        |steps: &[crate::insertion::TrailStep], k: usize| k.checked_sub(1).map(|p| steps[p].at);
    let a = pred_label(col_steps, col_index, x);
    let i = pred_label(row_steps, row_index, y);

    match (row_last, col_last) {
        (true, true) => Ok(IntersectionReport::SharedEmptyBox { s_box, a, i }),
        (false, false) => {
            let s = row_steps[row_index].label.expect("labelled step");
            let a_box = pred_box(col_steps, col_index);
            let i_box = pred_box(row_steps, row_index);
            let b_step = col_steps[col_index + 1];
            let j_step = row_steps[row_index + 1];
            let near = |b: Option<BoxCoord>| b.is_some_and(|b| b.is_adjacent(s_box));
            let adjacency = Adjacency {
                a: near(a_box),
                i: near(i_box),
                j: near(Some(j_step.at)),
                b: near(Some(b_step.at)),
            };
            let configuration = Configuration::from_adjacency(adjacency)
                .ok_or(AnalysisError::ForbiddenConfiguration(adjacency))?;
            Ok(IntersectionReport::Strong(StrongIntersection {
                s_box,
                s,
                a,
                a_box,
                b: b_step.label,
                b_box: b_step.at,
                i,
                i_box,
                j: j_step.label,
                j_box: j_step.at,
                row_index,
                col_index,
                adjacency,
                configuration,
            }))
        }
        _ => Err(AnalysisError::EmptyBoxMismatch(s_box)),
    }
}

/// Relative position of two strongly intersecting trails at `s_box`.
///
/// (a) In every column holding both a row-trail box before `S` and a
/// column-trail box after `S`, the row-trail box is strictly lower.
/// (b) In every row holding both a column-trail box before `S` and a
/// row-trail box after `S`, the column-trail box is strictly further left.
pub fn check_relative_position(
    row_trail: &Trail,
    col_trail: &Trail,
    s_box: BoxCoord,
) -> Result<bool, AnalysisError> {
    let (Some(rk), Some(ck)) = (row_trail.position_of(s_box), col_trail.position_of(s_box)) else {
        return Err(AnalysisError::NotAStrongIntersection);
    };
    let row_steps = row_trail.steps();
    let col_steps = col_trail.steps();
    if rk + 1 == row_steps.len() || ck + 1 == col_steps.len() {
        return Err(AnalysisError::NotAStrongIntersection);
    }
    let row_before = &row_steps[..rk];
    let row_after = &row_steps[rk + 1..];
    let col_before = &col_steps[..ck];
    let col_after = &col_steps[ck + 1..];

    let below = row_before.iter().all(|r| {
        col_after
            .iter()
            .filter(|c| c.at.col == r.at.col)
            .all(|c| r.at.row < c.at.row)
    });
    let left = col_before.iter().all(|c| {
        row_after
            .iter()
            .filter(|r| r.at.row == c.at.row)
            .all(|r| c.at.col < r.at.col)
    });
    Ok(below && left)
}
