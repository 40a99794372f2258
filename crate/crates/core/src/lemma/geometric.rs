use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{CheckReport, RuleId};
use crate::color::{Colour, ColoredDrawing};
use crate::error::{Error, Result};
use crate::geometry::{segments_cross, strictly_inside_triangle, Edge, Point};
use crate::kite::{
    ccc_region, classify_configuration, containment_quadrilateral, inside_polygon, kite_lemma_region, ConfigClass,
    KiteConfiguration,
};

/// Extra points and vertex choices that instantiate a geometric lemma on a
/// nested triangle `K_6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// For rules that only read the drawing.
    None,
    /// `u`, `v` outside the outer triangle, `w` an inner vertex.
    Barrier { u: Point, v: Point, w: usize },
    /// Kites at outer vertices `first` (o1) and `second` (o2); `p` in region A.
    Kite { first: usize, second: usize, p: Point },
    /// `u` outside every kite, `v` in the CCC region.
    Ccc { u: Point, v: Point },
    /// An external point `v` joined to the middle of the kite at `origin`.
    Containment { origin: usize, v: Point },
}

const REGION_NOTE: &str = "region A taken as an intersection of open sectors";

fn in_general_position(pts: &[Point], extra: &[Point]) -> bool {
    let mut all = pts.to_vec();
    for &p in extra {
        if !crate::geometry::fits_general_position(&all, p) {
            return false;
        }
        all.push(p);
    }
    true
}

fn kite_edge_hits(pts: &[Point], edges: &[Edge], a: Point, b: Point) -> usize {
    edges
        .iter()
        .filter(|&&(x, y)| segments_cross(a, b, pts[x], pts[y]).expect("distinct endpoints"))
        .count()
}

fn outside_outer(cd: &ColoredDrawing, p: Point) -> bool {
    let t = cd.class_points(Colour::Red);
    !strictly_inside_triangle(p, t[0], t[1], t[2])
}

/// Checks a geometric lemma for one witness.
pub fn verify_geometric_lemma(cd: &ColoredDrawing, rule: RuleId, witness: &Witness) -> Result<CheckReport> {
    if !rule.is_geometric() {
        return Err(Error::UnknownRule(format!("{rule} is not a geometric lemma")));
    }
    let matches_rule = matches!(
        (rule, witness),
        (RuleId::Barrier, Witness::Barrier { .. })
            | (RuleId::Kite, Witness::Kite { .. })
            | (RuleId::Ccc, Witness::Ccc { .. })
            | (RuleId::Containment, Witness::Containment { .. })
            | (RuleId::SharedLabels, Witness::None)
    );
    if !matches_rule {
        return Err(Error::WitnessMismatch(rule.name()));
    }
    let na = |why: &str| Ok(CheckReport::not_applicable(rule, why));
    if cd.drawing().n() != 6 || cd.hulls().profile() != [3, 3] {
        return na("not a nested triangle K6");
    }
    let cfg = classify_configuration(cd)?;
    let pts = cd.drawing().points();
    let kite_edges = cfg.kite_edges();
    let mut r = CheckReport::new(rule);

    Ok(match *witness {
        Witness::None => {
            if cfg.class != ConfigClass::UnaryCcv {
                return na("not a unary CCV configuration");
            }
            let concave: Vec<_> = cfg.concave().collect();
            let same = concave[0].same_labels(concave[1]);
            r.observe("concave_kites", concave.len()).observe("same_labels", same as i64);
            r.decide(same)
        }
        Witness::Barrier { u, v, w } => {
            if cd.colour(w) != Colour::Green {
                return na("w is not an inner vertex");
            }
            if !in_general_position(pts, &[u, v]) {
                return na("witness points not in general position");
            }
            if !outside_outer(cd, u) || !outside_outer(cd, v) {
                return na("u or v inside the outer triangle");
            }
            let outer = cd.hulls().polygon_edges(0);
            let crossed = |p: Point| outer.iter().position(|&(a, b)| segments_cross(p, pts[w], pts[a], pts[b]).unwrap());
            match (crossed(u), crossed(v)) {
                (Some(a), Some(b)) if a != b => {}
                _ => return na("(u,w) and (v,w) do not cross two different outer edges"),
            }
            let (hu, hv) = (kite_edge_hits(pts, &kite_edges, u, pts[w]), kite_edge_hits(pts, &kite_edges, v, pts[w]));
            r.observe("u_hits", hu).observe("v_hits", hv).observe("total", hu + hv);
            r.decide(hu + hv >= 2)
        }
        Witness::Kite { first, second, p } => {
            let (Some(k1), Some(k2)) = (cfg.kite_at(first), cfg.kite_at(second)) else {
                return na("origins are not outer vertices");
            };
            if first == second || !k1.is_concave() || !k2.is_concave() || !k1.same_labels(k2) {
                return na("kites are not two identically labelled concave kites");
            }
            if k2.contains(pts, pts[first]) {
                return na("second kite contains the first origin");
            }
            if !in_general_position(pts, &[p]) || !kite_lemma_region(pts, k1, p) {
                return na("p not in region A or not in general position");
            }
            r.notes.push(REGION_NOTE.into());
            let o1 = pts[first];
            let hit_l = segments_cross(o1, p, pts[second], pts[k2.left])?;
            let hit_r = segments_cross(o1, p, pts[second], pts[k2.right])?;
            r.observe("crosses_o2_l", hit_l as i64).observe("crosses_o2_r", hit_r as i64);
            r.decide(hit_l || hit_r)
        }
        Witness::Ccc { u, v } => {
            if cfg.class != ConfigClass::Ccc {
                return na("not a CCC configuration");
            }
            if !in_general_position(pts, &[u, v]) {
                return na("witness points not in general position");
            }
            if cfg.kites.iter().any(|k| k.contains(pts, u)) || !ccc_region(pts, &cfg, v) {
                return na("u inside a kite or v outside region A");
            }
            r.notes.push(REGION_NOTE.into());
            let hits = kite_edge_hits(pts, &kite_edges, u, v);
            r.observe("hits", hits);
            r.decide(hits >= 2)
        }
        Witness::Containment { origin, v } => {
            let Some(k) = cfg.kite_at(origin) else {
                return na("origin is not an outer vertex");
            };
            if !k.is_concave() {
                return na("kite is convex");
            }
            if !in_general_position(pts, &[v]) || !outside_outer(cd, v) {
                return na("v inside the outer triangle or not in general position");
            }
            let quad = containment_quadrilateral(cd, k)?;
            let poly: Vec<Point> = quad.iter().map(|&i| pts[i]).collect();
            let m_inside = inside_polygon(pts[k.middle], &poly);
            let hits = kite_edge_hits(pts, &kite_edges, v, pts[k.middle]);
            r.observe("m_in_quadrilateral", m_inside as i64).observe("hits", hits);
            r.decide(m_inside && hits >= 1)
        }
    })
}

fn bbox(points: &[Point]) -> (Point, Point) {
    let lo = Point::new(points.iter().map(|p| p.x).min().unwrap(), points.iter().map(|p| p.y).min().unwrap());
    let hi = Point::new(points.iter().map(|p| p.x).max().unwrap(), points.iter().map(|p| p.y).max().unwrap());
    (lo, hi)
}

/// Uniform point in the bounding box of `points` grown by `grow` times its
/// size on every side.
fn around(rng: &mut ChaCha8Rng, points: &[Point], grow: i64) -> Point {
    let (lo, hi) = bbox(points);
    let (w, h) = ((hi.x - lo.x).max(1), (hi.y - lo.y).max(1));
    Point::new(
        rng.random_range(lo.x - grow * w..=hi.x + grow * w),
        rng.random_range(lo.y - grow * h..=hi.y + grow * h),
    )
}

fn concave_origins(cfg: &KiteConfiguration) -> Vec<usize> {
    cfg.concave().map(|k| k.origin).collect()
}

/// Candidate witnesses for `rule`; the hypothesis is checked by
/// [`verify_geometric_lemma`], not here.
pub fn sample_witnesses(cd: &ColoredDrawing, rule: RuleId, rng: &mut ChaCha8Rng, count: usize) -> Vec<Witness> {
    let pts = cd.drawing().points();
    let inner = cd.class_points(Colour::Green);
    let reds = cd.class(Colour::Red);
    let cfg = if cd.drawing().n() == 6 && cd.hulls().profile() == [3, 3] {
        classify_configuration(cd).ok()
    } else {
        None
    };
    let concave = cfg.as_ref().map(concave_origins).unwrap_or_default();
    let pick = |rng: &mut ChaCha8Rng, from: &[usize]| from[rng.random_range(0..from.len())];
    (0..count)
        .map(|i| match rule {
            RuleId::Barrier => {
                let greens = cd.class(Colour::Green);
                let w = if greens.is_empty() { 0 } else { pick(rng, &greens) };
                Witness::Barrier { u: around(rng, pts, 1), v: around(rng, pts, 1), w }
            }
            RuleId::Kite => {
                let (first, second) = if concave.len() >= 2 {
                    let a = rng.random_range(0..concave.len());
                    let b = (a + rng.random_range(1..concave.len())) % concave.len();
                    (concave[a], concave[b])
                } else {
                    (reds.first().copied().unwrap_or(0), reds.get(1).copied().unwrap_or(1))
                };
                // alternate between the neighbourhood of the inner triangle and the whole drawing
                let p = if i % 2 == 0 { around(rng, &inner, 1) } else { around(rng, pts, 1) };
                Witness::Kite { first, second, p }
            }
            RuleId::Ccc => Witness::Ccc { u: around(rng, pts, 1), v: around(rng, &inner, 0) },
            RuleId::Containment => {
                let origin = if concave.is_empty() { reds.first().copied().unwrap_or(0) } else { pick(rng, &concave) };
                Witness::Containment { origin, v: around(rng, pts, 1) }
            }
            _ => Witness::None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::color_by_hulls;
    use crate::geometry::Drawing;
    use crate::lemma::Outcome;

    fn k6(inner: [(i64, i64); 3]) -> ColoredDrawing {
        let mut c = vec![(0, 100), (-87, -50), (87, -50)];
        c.extend(inner);
        color_by_hulls(&Drawing::from_coords(&c).unwrap()).unwrap()
    }

    #[test]
    fn ccc_witness_in_region() {
        let cd = k6([(0, 10), (-9, -5), (9, -5)]);
        let r = verify_geometric_lemma(&cd, RuleId::Ccc, &Witness::Ccc { u: Point::new(300, 7), v: Point::new(1, 0) })
            .unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.get("hits").unwrap() >= 2);
    }

    #[test]
    fn barrier_hypothesis_not_met() {
        let cd = k6([(0, -10), (9, 5), (-9, 5)]);
        // both segments enter through the bottom edge
        let w = Witness::Barrier { u: Point::new(1, -300), v: Point::new(-3, -301), w: 3 };
        let r = verify_geometric_lemma(&cd, RuleId::Barrier, &w).unwrap();
        assert!(matches!(r.outcome, Outcome::NotApplicable(_)));
    }

    #[test]
    fn barrier_instance() {
        let cd = k6([(0, -10), (9, 5), (-9, 5)]);
        let w = Witness::Barrier { u: Point::new(1, -300), v: Point::new(301, 203), w: 3 };
        let r = verify_geometric_lemma(&cd, RuleId::Barrier, &w).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn containment_from_outside() {
        let cd = k6([(0, 10), (-9, -5), (9, -5)]);
        let r =
            verify_geometric_lemma(&cd, RuleId::Containment, &Witness::Containment { origin: 0, v: Point::new(7, 500) })
                .unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.get("m_in_quadrilateral"), Some(1));
    }

    #[test]
    fn witness_kind_must_match() {
        let cd = k6([(0, 10), (-9, -5), (9, -5)]);
        assert_eq!(
            verify_geometric_lemma(&cd, RuleId::Kite, &Witness::None),
            Err(Error::WitnessMismatch("kite"))
        );
        assert!(verify_geometric_lemma(&cd, RuleId::RbGgNine, &Witness::None).is_err());
    }
}
