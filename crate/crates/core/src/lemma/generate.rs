//! Seeded instance generators. Outer triangles are drawn uniformly from an
//! integer box; each inner layer is drawn inside the previous one as
//! rounded convex combinations of its corners, then the whole drawing is
//! checked and rejected if it misses the requested shape.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{det, is_general_position, strictly_inside_triangle, Drawing, Point};
use crate::hull::{peel_points, peel_profile};
use crate::kite::{classify_configuration, ConfigClass};
use crate::search::{descend_within, local_search, SearchParams};

pub const GENERATOR_BOX: i64 = 10_000;
pub const GENERATION_BUDGET: u64 = 100_000;

/// Ten-vertex shapes. The white vertex, when present, has index 9.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum K10Shape {
    WhiteInGreen,
    WhiteInBlue,
    TriTriQuad,
}

/// Nine-vertex drawings with a triangular hull that are not nested
/// triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum K9Shape {
    /// Peel `[3, 6]`.
    Hull6,
    /// Peel `[3, 5, 1]`.
    Hull5,
    /// Peel `[3, 4, 2]`.
    Quad,
}

impl K9Shape {
    pub fn profile(self) -> &'static [usize] {
        match self {
            K9Shape::Hull6 => &[3, 6],
            K9Shape::Hull5 => &[3, 5, 1],
            K9Shape::Quad => &[3, 4, 2],
        }
    }
}

fn outer_triangle(rng: &mut ChaCha8Rng) -> [Point; 3] {
    loop {
        let mut p = || Point::new(rng.random_range(0..GENERATOR_BOX), rng.random_range(0..GENERATOR_BOX));
        let t = [p(), p(), p()];
        // skip slivers so that inner layers have room
        if det(t[0], t[1], t[2]).abs() >= GENERATOR_BOX * GENERATOR_BOX / 8 {
            return t;
        }
    }
}

/// A point strictly inside `t`, pulled towards the centroid by `shrink`.
fn inside(rng: &mut ChaCha8Rng, t: &[Point], shrink: i64) -> Option<Point> {
    let w: Vec<i64> = (0..3).map(|_| shrink + rng.random_range(0..=1000)).collect();
    let sum: i64 = w.iter().sum();
    if sum == 0 {
        return None;
    }
    let x = (0..3).map(|i| w[i] * t[i].x).sum::<i64>() / sum;
    let y = (0..3).map(|i| w[i] * t[i].y).sum::<i64>() / sum;
    let p = Point::new(x, y);
    strictly_inside_triangle(p, t[0], t[1], t[2]).then_some(p)
}

fn layer_inside(rng: &mut ChaCha8Rng, t: &[Point], k: usize) -> Option<Vec<Point>> {
    let shrink = rng.random_range(0..=1000);
    (0..k).map(|_| inside(rng, t, shrink)).collect()
}

fn nested_layers(rng: &mut ChaCha8Rng, layers: usize) -> Option<Vec<Point>> {
    let mut pts = outer_triangle(rng).to_vec();
    for i in 1..layers {
        let prev = pts[3 * (i - 1)..3 * i].to_vec();
        pts.extend(layer_inside(rng, &prev, 3)?);
    }
    Some(pts)
}

fn rejection<F>(seed: u64, tag: u64, mut attempt: F) -> Result<Drawing>
where
    F: FnMut(&mut ChaCha8Rng) -> Option<Vec<Point>>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    for _ in 0..GENERATION_BUDGET {
        if let Some(pts) = attempt(&mut rng).filter(|p| is_general_position(p)) {
            return Drawing::new(pts);
        }
    }
    Err(Error::GenerationBudgetExceeded { attempts: GENERATION_BUDGET })
}

/// Three nested triangles: vertices 0..3 outer, 3..6 middle, 6..9 inner.
pub fn generate_nested_k9(seed: u64) -> Result<Drawing> {
    rejection(seed, 9, |rng| nested_layers(rng, 3).filter(|p| peel_profile(p) == [3, 3, 3]))
}

/// A nested triangle `K_6` of the requested configuration class.
pub fn generate_nested_k6(seed: u64, class: ConfigClass) -> Result<Drawing> {
    rejection(seed, 6 + 100 * class as u64, |rng| {
        let pts = nested_layers(rng, 2)?;
        if peel_profile(&pts) != [3, 3] || !is_general_position(&pts) {
            return None;
        }
        let cd = crate::color::color_by_hulls(&Drawing::new(pts.clone()).ok()?).ok()?;
        (classify_configuration(&cd).ok()?.class == class).then_some(pts)
    })
}

pub fn generate_k10_shape(seed: u64, shape: K10Shape) -> Result<Drawing> {
    rejection(seed, 10 + 100 * shape as u64, |rng| match shape {
        K10Shape::TriTriQuad => {
            let mut pts = nested_layers(rng, 2)?;
            let green = pts[3..6].to_vec();
            pts.extend(layer_inside(rng, &green, 4)?);
            (peel_profile(&pts) == [3, 3, 4]).then_some(pts)
        }
        K10Shape::WhiteInBlue | K10Shape::WhiteInGreen => {
            let mut pts = nested_layers(rng, 3)?;
            let (green, blue) = (pts[3..6].to_vec(), pts[6..9].to_vec());
            let in_blue = |p: Point| strictly_inside_triangle(p, blue[0], blue[1], blue[2]);
            let w = match shape {
                K10Shape::WhiteInBlue => {
                    let shrink = rng.random_range(0..=1000);
                    inside(rng, &blue, shrink)?
                }
                _ => inside(rng, &green, 0).filter(|&p| !in_blue(p))?,
            };
            pts.push(w);
            (peel_profile(&pts[..9]) == [3, 3, 3]).then_some(pts)
        }
    })
}

/// Triangular hull with six interior vertices peeling as `shape`.
pub fn generate_k9_shape(seed: u64, shape: K9Shape) -> Result<Drawing> {
    rejection(seed, 90 + 100 * shape as u64, |rng| {
        let mut pts = outer_triangle(rng).to_vec();
        let red = pts.clone();
        pts.extend(layer_inside(rng, &red, 6)?);
        (peel_profile(&pts) == shape.profile()).then_some(pts)
    })
}

/// A 36-crossing `K_9`, found by local search from `seed`.
pub fn generate_optimal_k9(seed: u64) -> Result<Drawing> {
    let params = SearchParams::for_n(9, seed);
    let r = local_search(&params)?;
    if r.count != 36 {
        return Err(Error::GenerationBudgetExceeded { attempts: r.history.len() as u64 });
    }
    Ok(r.best)
}

/// Peel profile, plus for ten vertices the profile of the first nine and
/// how many of their triangle layers contain vertex 9.
fn shape_signature(points: &[Point]) -> (Vec<usize>, Option<(Vec<usize>, usize)>) {
    let profile = peel_profile(points);
    if points.len() != 10 {
        return (profile, None);
    }
    let rest = &points[..9];
    let layers = peel_points(rest);
    let w = points[9];
    let depth = layers
        .iter()
        .filter(|l| l.len() == 3 && strictly_inside_triangle(w, rest[l[0]], rest[l[1]], rest[l[2]]))
        .count();
    (profile, Some((layers.iter().map(Vec::len).collect(), depth)))
}

/// Lowers the crossing count by hill descent without changing the peel
/// structure (and, for ten vertices, where vertex 9 sits among the layers
/// of the others).
pub fn tighten(d: &Drawing, budget: usize, seed: u64) -> Drawing {
    let signature = shape_signature(d.points());
    descend_within(d, budget, seed, &|p| shape_signature(p) == signature)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::color_by_hulls;
    use crate::geometry::crossing_count;
    use crate::hull::peel_hulls;

    #[test]
    fn generator_examples() {
        assert_eq!(peel_hulls(&generate_nested_k9(1).unwrap()).profile(), vec![3, 3, 3]);
        let vvv = generate_nested_k6(7, ConfigClass::Vvv).unwrap();
        assert_eq!(classify_configuration(&color_by_hulls(&vvv).unwrap()).unwrap().class, ConfigClass::Vvv);
        assert_eq!(peel_hulls(&generate_k10_shape(3, K10Shape::TriTriQuad).unwrap()).profile(), vec![3, 3, 4]);
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(generate_nested_k9(5).unwrap(), generate_nested_k9(5).unwrap());
        assert_ne!(generate_nested_k9(5).unwrap(), generate_nested_k9(6).unwrap());
    }

    #[test]
    fn every_class_and_shape() {
        for class in ConfigClass::ALL {
            generate_nested_k6(11, class).unwrap();
        }
        for shape in [K9Shape::Hull6, K9Shape::Hull5, K9Shape::Quad] {
            assert_eq!(peel_profile(generate_k9_shape(2, shape).unwrap().points()), shape.profile());
        }
        for shape in [K10Shape::WhiteInBlue, K10Shape::WhiteInGreen] {
            let d = generate_k10_shape(4, shape).unwrap();
            assert_eq!(peel_profile(&d.points()[..9]), [3, 3, 3]);
        }
    }

    #[test]
    fn tighten_keeps_shape() {
        let d = generate_k10_shape(8, K10Shape::WhiteInBlue).unwrap();
        let t = tighten(&d, 3_000, 1);
        assert!(crossing_count(t.points()) <= crossing_count(d.points()));
        assert_eq!(shape_signature(t.points()), shape_signature(d.points()));
    }

    #[test]
    fn optimal_k9() {
        let d = generate_optimal_k9(3).unwrap();
        assert_eq!(crossing_count(d.points()), 36);
        assert_eq!(peel_profile(d.points()), [3, 3, 3]);
    }
}
