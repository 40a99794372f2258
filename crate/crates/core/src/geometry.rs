//! Exact integer predicates and crossing enumeration.
//!
//! Every predicate reduces to the sign of a 2x2 determinant over integer
//! coordinates. With `|x|, |y| <= COORD_BOUND` the determinant is bounded by
//! `8 * COORD_BOUND^2`, well inside `i64`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible absolute coordinate value.
pub const COORD_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= COORD_BOUND && self.y.abs() <= COORD_BOUND
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    /// +1 for counter-clockwise, -1 for clockwise, 0 for collinear.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

#[inline]
pub(crate) fn det(p: Point, q: Point, r: Point) -> i64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

#[inline]
pub(crate) fn orient_sign(p: Point, q: Point, r: Point) -> i8 {
    det(p, q, r).signum() as i8
}

/// Sign of `(q - p) x (r - p)`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match det(p, q, r).signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// True iff the open segments `(a1, a2)` and `(b1, b2)` share a point.
///
/// Segments that share an endpoint never cross.
pub fn segments_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> Result<bool> {
    if a1 == a2 || b1 == b2 {
        return Err(Error::DegenerateSegment);
    }
    if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
        return Ok(false);
    }
    let d1 = orient_sign(a1, a2, b1);
    let d2 = orient_sign(a1, a2, b2);
    let d3 = orient_sign(b1, b2, a1);
    let d4 = orient_sign(b1, b2, a2);
    if d1 == 0 && d2 == 0 {
        // All four collinear: the open intervals overlap iff they share a point.
        let key = |p: Point| if a1.x != a2.x { p.x } else { p.y };
        let (lo_a, hi_a) = minmax(key(a1), key(a2));
        let (lo_b, hi_b) = minmax(key(b1), key(b2));
        return Ok(lo_a.max(lo_b) < hi_a.min(hi_b));
    }
    Ok(d1 * d2 < 0 && d3 * d4 < 0)
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[inline]
fn cross_unchecked(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    orient_sign(a1, a2, b1) * orient_sign(a1, a2, b2) < 0
        && orient_sign(b1, b2, a1) * orient_sign(b1, b2, a2) < 0
}

/// True iff `p` lies strictly inside triangle `(a, b, c)` (either winding).
pub fn strictly_inside_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let s = orient_sign(a, b, c);
    s != 0 && orient_sign(a, b, p) == s && orient_sign(b, c, p) == s && orient_sign(c, a, p) == s
}

/// True iff the four points are in convex position.
///
/// Assumes general position. Exactly one crossing exists among the edges of a
/// convex 4-set and none otherwise.
#[inline]
pub fn convex_position(a: Point, b: Point, c: Point, d: Point) -> bool {
    let s1 = orient_sign(a, b, c);
    let s2 = orient_sign(a, b, d);
    let s3 = orient_sign(a, c, d);
    let s4 = orient_sign(b, c, d);
    let d_in_abc = s2 == s1 && s4 == s1 && s3 == -s1;
    let c_in_abd = s1 == s2 && s4 == -s2 && s3 == s2;
    let b_in_acd = s1 == -s3 && s4 == s3 && s2 == s3;
    let a_in_bcd = s1 == s4 && s3 == s4 && s2 == -s4;
    !(d_in_abc || c_in_abd || b_in_acd || a_in_bcd)
}

/// True iff all points are distinct and no three are collinear.
pub fn is_general_position(points: &[Point]) -> bool {
    first_violation(points).is_none()
}

/// First degenerate configuration in lexicographic index order, if any.
pub(crate) fn first_violation(points: &[Point]) -> Option<Error> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Some(Error::DuplicatePoint(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if det(points[i], points[j], points[k]) == 0 {
                    return Some(Error::GeneralPositionViolation([i, j, k]));
                }
            }
        }
    }
    None
}

/// True iff `p` is distinct from and not collinear with any pair of `points`.
pub fn fits_general_position(points: &[Point], p: Point) -> bool {
    let n = points.len();
    for i in 0..n {
        if points[i] == p {
            return false;
        }
        for j in i + 1..n {
            if det(points[i], points[j], p) == 0 {
                return false;
            }
        }
    }
    true
}

/// A rectilinear drawing of `K_n`: integer points in general position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Drawing {
    points: Vec<Point>,
}

impl Drawing {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| !p.in_bounds()) {
            return Err(Error::CoordinateOutOfRange { index, x: p.x, y: p.y });
        }
        if let Some(err) = first_violation(&points) {
            return Err(err);
        }
        Ok(Drawing { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Drawing::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub(crate) fn check_index(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: v, n: self.n() })
        }
    }

    /// The drawing with vertex `v` deleted.
    pub fn without(&self, v: usize) -> Result<Drawing> {
        self.check_index(v)?;
        let mut points = self.points.clone();
        points.remove(v);
        Drawing::new(points)
    }

    /// The drawing with `p` appended as vertex `n`.
    pub fn with_point(&self, p: Point) -> Result<Drawing> {
        let mut points = self.points.clone();
        points.push(p);
        Drawing::new(points)
    }

    /// Sub-drawing induced by `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Drawing> {
        for &v in vertices {
            self.check_index(v)?;
        }
        Drawing::new(vertices.iter().map(|&v| self.points[v]).collect())
    }
}

/// An edge of `K_n` as a sorted vertex pair.
pub type Edge = (usize, usize);

pub(crate) fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two vertex-disjoint edges whose interiors cross, stored canonically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    pub edge_a: Edge,
    pub edge_b: Edge,
}

impl Crossing {
    pub fn new(a: Edge, b: Edge) -> Self {
        let (a, b) = (edge(a.0, a.1), edge(b.0, b.1));
        if a <= b {
            Crossing { edge_a: a, edge_b: b }
        } else {
            Crossing { edge_a: b, edge_b: a }
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.edge_a.0, self.edge_a.1, self.edge_b.0, self.edge_b.1]
    }

    pub fn involves(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }
}

/// All crossings of one drawing in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossingSet {
    crossings: Vec<Crossing>,
}

impl CrossingSet {
    pub fn count(&self) -> usize {
        self.crossings.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Crossing> {
        self.crossings.iter()
    }

    pub fn as_slice(&self) -> &[Crossing] {
        &self.crossings
    }
}

impl<'a> IntoIterator for &'a CrossingSet {
    type Item = &'a Crossing;
    type IntoIter = std::slice::Iter<'a, Crossing>;
    fn into_iter(self) -> Self::IntoIter {
        self.crossings.iter()
    }
}

/// The crossing among the edges of the 4-set `{i, j, k, l}`, if it is convex.
fn quad_crossing(p: &[Point], i: usize, j: usize, k: usize, l: usize) -> Option<Crossing> {
    let (a, b, c, d) = (p[i], p[j], p[k], p[l]);
    if cross_unchecked(a, b, c, d) {
        Some(Crossing::new((i, j), (k, l)))
    } else if cross_unchecked(a, c, b, d) {
        Some(Crossing::new((i, k), (j, l)))
    } else if cross_unchecked(a, d, b, c) {
        Some(Crossing::new((i, l), (j, k)))
    } else {
        None
    }
}

/// Enumerates every crossing of the drawing.
pub fn count_crossings(d: &Drawing) -> CrossingSet {
    let p = d.points();
    let n = p.len();
    let mut crossings = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if let Some(c) = quad_crossing(p, i, j, k, l) {
                        crossings.push(c);
                    }
                }
            }
        }
    }
    crossings.sort_unstable();
    CrossingSet { crossings }
}

/// Number of crossings, without materialising them.
pub fn crossing_count(points: &[Point]) -> usize {
    let n = points.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    count += convex_position(points[i], points[j], points[k], points[l]) as usize;
                }
            }
        }
    }
    count
}

/// Crossings on edges incident to `v`: the number of convex 4-sets containing `v`.
pub(crate) fn vertex_load(points: &[Point], v: usize, at: Point) -> usize {
    let n = points.len();
    let mut count = 0;
    for i in 0..n {
        if i == v {
            continue;
        }
        for j in i + 1..n {
            if j == v {
                continue;
            }
            for k in j + 1..n {
                if k == v {
                    continue;
                }
                count += convex_position(at, points[i], points[j], points[k]) as usize;
            }
        }
    }
    count
}

/// Total crossings on all edges incident to vertex `v`.
pub fn responsibility(d: &Drawing, v: usize) -> Result<usize> {
    d.check_index(v)?;
    Ok(vertex_load(d.points(), v, d.point(v)))
}
