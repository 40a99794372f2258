//! Kites of nested triangle drawings and the configuration taxonomy.
//!
//! A kite is the fan of three edges from one outer vertex to the three
//! vertices of an inner triangle. Seen from the origin, the inner vertices
//! are labelled left, middle and right in clockwise order. The kite is
//! concave when the middle vertex lies inside triangle (left, origin, right)
//! and convex otherwise.

use std::fmt;

use crate::color::{Colour, ColoredDrawing};
use crate::error::{Error, Result};
use crate::geometry::{edge, orient_sign, segments_cross, strictly_inside_triangle, Edge, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KiteShape {
    Concave,
    Convex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Kite {
    pub origin: usize,
    pub left: usize,
    pub middle: usize,
    pub right: usize,
    pub shape: KiteShape,
    /// Whether the angle at the origin between left and right is acute.
    /// Recorded, never enforced.
    pub acute: bool,
}

impl Kite {
    /// Builds the kite from `origin` to the triangle `inner`. The origin must
    /// lie outside the triangle.
    pub fn toward(points: &[Point], origin: usize, inner: [usize; 3]) -> Kite {
        let o = points[origin];
        let cw_of_all = |a: usize| inner.iter().filter(|&&b| b != a).all(|&b| orient_sign(o, points[a], points[b]) < 0);
        let ccw_of_all = |a: usize| inner.iter().filter(|&&b| b != a).all(|&b| orient_sign(o, points[a], points[b]) > 0);
        let left = *inner.iter().find(|&&a| cw_of_all(a)).expect("origin outside the inner triangle");
        let right = *inner.iter().find(|&&a| ccw_of_all(a)).expect("origin outside the inner triangle");
        let middle = *inner.iter().find(|&&a| a != left && a != right).expect("three inner vertices");
        let (l, m, r) = (points[left], points[middle], points[right]);
        let shape = if strictly_inside_triangle(m, l, o, r) {
            KiteShape::Concave
        } else {
            KiteShape::Convex
        };
        let acute = (l.x - o.x) * (r.x - o.x) + (l.y - o.y) * (r.y - o.y) > 0;
        Kite { origin, left, middle, right, shape, acute }
    }

    pub fn is_concave(&self) -> bool {
        self.shape == KiteShape::Concave
    }

    /// Outer edges `(o,l)`, `(o,r)` and inner edge `(o,m)`.
    pub fn edges(&self) -> [Edge; 3] {
        [edge(self.origin, self.left), edge(self.origin, self.right), edge(self.origin, self.middle)]
    }

    pub fn same_labels(&self, other: &Kite) -> bool {
        (self.left, self.middle, self.right) == (other.left, other.middle, other.right)
    }

    /// True iff `p` lies strictly inside the convex hull of the kite.
    pub fn contains(&self, points: &[Point], p: Point) -> bool {
        let (o, l, m, r) = (points[self.origin], points[self.left], points[self.middle], points[self.right]);
        strictly_inside_triangle(p, o, l, r) || (!self.is_concave() && strictly_inside_triangle(p, l, m, r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigClass {
    Ccc,
    UnaryCcv,
    BinaryCcv,
    Cvv,
    Vvv,
}

impl ConfigClass {
    pub const ALL: [ConfigClass; 5] =
        [ConfigClass::Ccc, ConfigClass::UnaryCcv, ConfigClass::BinaryCcv, ConfigClass::Cvv, ConfigClass::Vvv];

    /// Number of convex kites, which equals the number of crossings between
    /// the inner triangle and the kite edges.
    pub fn non_concentric_count(self) -> usize {
        match self {
            ConfigClass::Ccc => 0,
            ConfigClass::UnaryCcv | ConfigClass::BinaryCcv => 1,
            ConfigClass::Cvv => 2,
            ConfigClass::Vvv => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConfigClass::Ccc => "CCC",
            ConfigClass::UnaryCcv => "unary-CCV",
            ConfigClass::BinaryCcv => "binary-CCV",
            ConfigClass::Cvv => "CVV",
            ConfigClass::Vvv => "VVV",
        }
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ConfigClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConfigClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::DomainError(format!("unknown configuration `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KiteConfiguration {
    pub kites: [Kite; 3],
    pub class: ConfigClass,
    pub distinct_concave_middles: usize,
}

impl KiteConfiguration {
    pub fn concave(&self) -> impl Iterator<Item = &Kite> {
        self.kites.iter().filter(|k| k.is_concave())
    }

    pub fn kite_at(&self, origin: usize) -> Option<&Kite> {
        self.kites.iter().find(|k| k.origin == origin)
    }

    /// All nine kite edges.
    pub fn kite_edges(&self) -> Vec<Edge> {
        self.kites.iter().flat_map(|k| k.edges()).collect()
    }
}

fn triangle(cd: &ColoredDrawing, c: Colour) -> Result<[usize; 3]> {
    let class = cd.class(c);
    <[usize; 3]>::try_from(class).map_err(|_| Error::UnsupportedShape(cd.hulls().profile()))
}

fn require_nested_k6(cd: &ColoredDrawing) -> Result<()> {
    if cd.hulls().profile() == [3, 3] && cd.class(Colour::Red).len() == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedShape(cd.hulls().profile()))
    }
}

/// The kite from `origin` towards the green triangle of a nested `K_6`.
pub fn extract_kite(cd: &ColoredDrawing, origin: usize) -> Result<Kite> {
    require_nested_k6(cd)?;
    cd.drawing().check_index(origin)?;
    if cd.colour(origin) != Colour::Red {
        return Err(Error::DomainError(format!("vertex {origin} is not on the outer triangle")));
    }
    Ok(Kite::toward(cd.drawing().points(), origin, triangle(cd, Colour::Green)?))
}

/// Configuration of the kites from the `outer` triangle to the `inner`
/// triangle, e.g. red-blue or green-blue kites of a nested `K_9`.
pub fn configuration_between(cd: &ColoredDrawing, outer: Colour, inner: Colour) -> Result<KiteConfiguration> {
    let o = triangle(cd, outer)?;
    let i = triangle(cd, inner)?;
    let pts = cd.drawing().points();
    let nested = i.iter().all(|&v| strictly_inside_triangle(pts[v], pts[o[0]], pts[o[1]], pts[o[2]]));
    if !nested {
        return Err(Error::UnsupportedShape(cd.hulls().profile()));
    }
    let kites = o.map(|origin| Kite::toward(pts, origin, i));
    let mut middles: Vec<usize> = kites.iter().filter(|k| k.is_concave()).map(|k| k.middle).collect();
    let concave = middles.len();
    middles.sort_unstable();
    middles.dedup();
    let distinct = middles.len();
    let class = match (concave, distinct) {
        (3, _) => ConfigClass::Ccc,
        (2, 1) => ConfigClass::UnaryCcv,
        (2, _) => ConfigClass::BinaryCcv,
        (1, _) => ConfigClass::Cvv,
        _ => ConfigClass::Vvv,
    };
    Ok(KiteConfiguration { kites, class, distinct_concave_middles: distinct })
}

/// Configuration of a nested triangle `K_6`.
pub fn classify_configuration(cd: &ColoredDrawing) -> Result<KiteConfiguration> {
    require_nested_k6(cd)?;
    configuration_between(cd, Colour::Red, Colour::Green)
}

/// `[o, l, o', r]` where `o'` is the outer vertex across line `(l, r)` from
/// the origin; the middle vertex lies strictly inside this quadrilateral.
pub fn containment_quadrilateral(cd: &ColoredDrawing, kite: &Kite) -> Result<[usize; 4]> {
    if !kite.is_concave() {
        return Err(Error::NotConcave(kite.origin));
    }
    let pts = cd.drawing().points();
    let (l, r) = (pts[kite.left], pts[kite.right]);
    let side = orient_sign(l, r, pts[kite.origin]);
    let far = cd
        .class(cd.colour(kite.origin))
        .into_iter()
        .find(|&v| v != kite.origin && orient_sign(l, r, pts[v]) == -side)
        .ok_or_else(|| Error::UnsupportedShape(cd.hulls().profile()))?;
    Ok([kite.origin, kite.left, far, kite.right])
}

/// True iff `p` lies strictly inside the simple polygon `poly`.
pub fn inside_polygon(p: Point, poly: &[Point]) -> bool {
    // Crossing-number test on exact integers; boundary points count as outside.
    let mut inside = false;
    let k = poly.len();
    for i in 0..k {
        let (a, b) = (poly[i], poly[(i + 1) % k]);
        if orient_sign(a, b, p) == 0
            && p.x >= a.x.min(b.x)
            && p.x <= a.x.max(b.x)
            && p.y >= a.y.min(b.y)
            && p.y <= a.y.max(b.y)
        {
            return false;
        }
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the edge at height p.y compared to p.x, exactly
            let lhs = (p.x - a.x) * (b.y - a.y);
            let rhs = (b.x - a.x) * (p.y - a.y);
            let right_of_p = if b.y > a.y { rhs > lhs } else { rhs < lhs };
            if right_of_p {
                inside = !inside;
            }
        }
    }
    inside
}

/// Strictly inside the convex cone at `apex` spanned by rays towards `a`
/// and `b`.
pub fn in_sector(apex: Point, a: Point, b: Point, p: Point) -> bool {
    let s = orient_sign(apex, a, b);
    s != 0 && orient_sign(apex, a, p) == s && orient_sign(apex, p, b) == s
}

/// Region A of the identically-labelled-kites lemma: the sector at the
/// first origin intersected with the convex sector at the middle vertex.
pub fn kite_lemma_region(points: &[Point], k: &Kite, p: Point) -> bool {
    let (o, l, m, r) = (points[k.origin], points[k.left], points[k.middle], points[k.right]);
    in_sector(o, l, r, p) && in_sector(m, l, r, p)
}

/// Region A of the CCC lemma: the intersection of all three kite sectors.
pub fn ccc_region(points: &[Point], cfg: &KiteConfiguration, p: Point) -> bool {
    cfg.kites
        .iter()
        .all(|k| in_sector(points[k.origin], points[k.left], points[k.right], p))
}

fn sees_all(points: &[Point], blocking: &[Edge], inner: [usize; 3], p: Point) -> bool {
    inner.iter().all(|&x| {
        blocking
            .iter()
            .all(|&(a, b)| !segments_cross(p, points[x], points[a], points[b]).expect("non-degenerate"))
    })
}

fn check_general_position(points: &[Point], p: Point) -> Result<()> {
    let n = points.len();
    for i in 0..n {
        if points[i] == p {
            return Err(Error::DuplicatePoint(i, n));
        }
        for j in i + 1..n {
            if orient_sign(points[i], points[j], p) == 0 {
                return Err(Error::GeneralPositionViolation([i, j, n]));
            }
        }
    }
    Ok(())
}

/// Free-zone membership for the kites from `outer` to `inner`: `p` sees all
/// three inner vertices once the inner edges of convex kites are removed.
pub fn free_zone_between(cd: &ColoredDrawing, outer: Colour, inner: Colour, p: Point) -> Result<bool> {
    let cfg = configuration_between(cd, outer, inner)?;
    let pts = cd.drawing().points();
    check_general_position(pts, p)?;
    let blocking: Vec<Edge> = cfg
        .kites
        .iter()
        .flat_map(|k| {
            let mut e = vec![edge(k.origin, k.left), edge(k.origin, k.right)];
            if k.is_concave() {
                e.push(edge(k.origin, k.middle));
            }
            e
        })
        .collect();
    Ok(sees_all(pts, &blocking, triangle(cd, inner)?, p))
}

/// Free-zone membership in a nested triangle `K_6`.
pub fn free_zone_contains(cd: &ColoredDrawing, p: Point) -> Result<bool> {
    require_nested_k6(cd)?;
    free_zone_between(cd, Colour::Red, Colour::Green, p)
}
