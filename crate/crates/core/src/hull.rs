//! Convex hull peeling.

use crate::geometry::{orient_sign, Drawing, Point};

/// Onion layers of a drawing. Layer 0 is the convex hull; each layer lists
/// vertex indices counter-clockwise starting from its lexicographically
/// least point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullDecomposition {
    layers: Vec<Vec<usize>>,
}

impl HullDecomposition {
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        &self.layers[i]
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Layer sizes from the outside in, e.g. `[3, 3, 3]`.
    pub fn profile(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v))
    }

    /// Boundary edges of layer `i` in cyclic order.
    pub fn polygon_edges(&self, i: usize) -> Vec<(usize, usize)> {
        let l = &self.layers[i];
        (0..l.len()).map(|k| (l[k], l[(k + 1) % l.len()])).collect()
    }
}

/// Convex hull of `idx` (general position assumed), counter-clockwise from the
/// lexicographically least point.
pub(crate) fn convex_hull(points: &[Point], idx: &[usize]) -> Vec<usize> {
    let mut sorted = idx.to_vec();
    sorted.sort_by_key(|&i| points[i]);
    if sorted.len() < 3 {
        return sorted;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &sorted {
        while lower.len() >= 2
            && orient_sign(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i]) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in sorted.iter().rev() {
        while upper.len() >= 2
            && orient_sign(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i]) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub(crate) fn peel_points(points: &[Point]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let hull = convex_hull(points, &remaining);
        remaining.retain(|i| !hull.contains(i));
        layers.push(hull);
    }
    layers
}

/// Layer sizes only; cheaper to compare than a full decomposition.
pub(crate) fn peel_profile(points: &[Point]) -> Vec<usize> {
    peel_points(points).iter().map(Vec::len).collect()
}

/// Iterated convex hulls until no vertex remains.
pub fn peel_hulls(d: &Drawing) -> HullDecomposition {
    HullDecomposition { layers: peel_points(d.points()) }
}

/// True iff every peel layer is a triangle.
pub fn is_nested_triangle_drawing(d: &Drawing) -> bool {
    peel_hulls(d).layers.iter().all(|l| l.len() == 3)
}

/// True iff `p` lies strictly inside the convex polygon given counter-clockwise.
pub fn strictly_inside_convex(p: Point, polygon: &[Point]) -> bool {
    let k = polygon.len();
    k >= 3 && (0..k).all(|i| orient_sign(polygon[i], polygon[(i + 1) % k], p) > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_position_is_one_layer() {
        let d = Drawing::from_coords(&[(0, 10), (9, 3), (6, -8), (-6, -8), (-9, 3), (3, 11)]).unwrap();
        let h = peel_hulls(&d);
        assert_eq!(h.profile(), vec![6]);
        // ccw from the lexicographic minimum (-9, 3)
        assert_eq!(h.layer(0), &[4, 3, 2, 1, 5, 0]);
        assert!(!is_nested_triangle_drawing(&d));
    }

    #[test]
    fn triangle_quad_point() {
        let d = Drawing::from_coords(&[
            (0, 100),
            (-100, -60),
            (100, -61),
            (-20, -10),
            (21, -11),
            (19, 22),
            (-18, 20),
            (1, 3),
        ])
        .unwrap();
        let h = peel_hulls(&d);
        assert_eq!(h.profile(), vec![3, 4, 1]);
        assert_eq!(h.layer_of(7), Some(2));
        assert_eq!(h.polygon_edges(1).len(), 4);
    }

    #[test]
    fn k6_nested() {
        let d = Drawing::from_coords(&[(0, 100), (-87, -50), (87, -50), (0, 10), (-9, -5), (9, -5)]).unwrap();
        assert_eq!(peel_hulls(&d).profile(), vec![3, 3]);
        assert!(is_nested_triangle_drawing(&d));
    }

    #[test]
    fn strict_containment() {
        let sq = [Point::new(0, 0), Point::new(4, 0), Point::new(4, 4), Point::new(0, 4)];
        assert!(strictly_inside_convex(Point::new(1, 1), &sq));
        assert!(!strictly_inside_convex(Point::new(4, 1), &sq));
        assert!(!strictly_inside_convex(Point::new(5, 1), &sq));
    }
}
