//! Brute-force cross-checks of the library against naive implementations
//! written independently here.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rectcross::bounds::binomial;
use rectcross::search::grid_exhaustive;
use rectcross::{
    color_by_hulls, count_crossings, crossing_count, parse_bytes, peel_hulls, responsibility, tally_by_label,
    write_drawing, Drawing, Point,
};

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

/// Counts properly crossing pairs of vertex-disjoint edges.
fn edge_pair_oracle(p: &[(i64, i64)]) -> usize {
    let n = p.len();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut count = 0;
    for (k, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[k + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let s1 = orient(p[a], p[b], p[c]).signum() * orient(p[a], p[b], p[d]).signum();
            let s2 = orient(p[c], p[d], p[a]).signum() * orient(p[c], p[d], p[b]).signum();
            count += (s1 < 0 && s2 < 0) as usize;
        }
    }
    count
}

fn general_position(p: &[(i64, i64)]) -> bool {
    let n = p.len();
    (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| orient(p[i], p[j], p[k]) != 0)))
}

fn corpus(name: &str) -> Vec<u8> {
    std::fs::read(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn drawing_strategy(max_n: usize, coord: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-coord..=coord, -coord..=coord), 3..=max_n).prop_filter("general position", |p| general_position(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn count_matches_edge_pair_oracle(p in drawing_strategy(11, 1_000_000)) {
        let d = Drawing::from_coords(&p).unwrap();
        prop_assert_eq!(count_crossings(&d).count(), edge_pair_oracle(&p));
    }

    #[test]
    fn responsibilities_sum_to_four_times_count(p in drawing_strategy(10, 500)) {
        let d = Drawing::from_coords(&p).unwrap();
        let sum: usize = (0..d.n()).map(|v| responsibility(&d, v).unwrap()).sum();
        prop_assert_eq!(sum, 4 * crossing_count(d.points()));
    }

    #[test]
    fn invariant_under_affine_maps_and_relabeling(
        p in drawing_strategy(9, 1000),
        m in (-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5).prop_filter("invertible", |(a, b, c, d)| a * d != b * c),
        shift in (-1000i64..=1000, -1000i64..=1000),
        rot in 0usize..9,
    ) {
        let (a, b, c, dd) = m;
        let mut q: Vec<(i64, i64)> = p.iter().map(|&(x, y)| (a * x + b * y + shift.0, c * x + dd * y + shift.1)).collect();
        let r = rot % q.len();
        q.rotate_left(r);
        let before = crossing_count(Drawing::from_coords(&p).unwrap().points());
        prop_assert_eq!(crossing_count(Drawing::from_coords(&q).unwrap().points()), before);
    }

    #[test]
    fn file_round_trip(p in drawing_strategy(12, 1_000_000)) {
        let d = Drawing::from_coords(&p).unwrap();
        let text = write_drawing(&d);
        let back = parse_bytes(text.as_bytes()).unwrap();
        prop_assert_eq!(&back.drawing, &d);
        prop_assert_eq!(write_drawing(&back.drawing), text);
    }

    #[test]
    fn peel_layers_partition_and_nest(p in drawing_strategy(12, 200)) {
        let d = Drawing::from_coords(&p).unwrap();
        let h = peel_hulls(&d);
        let mut all: Vec<usize> = h.layers().iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..d.n()).collect::<Vec<_>>());
        // each layer is in convex position and every later vertex is strictly inside it
        for (i, layer) in h.layers().iter().enumerate() {
            if layer.len() < 3 {
                continue;
            }
            for k in 0..layer.len() {
                let (u, v) = (p[layer[k]], p[layer[(k + 1) % layer.len()]]);
                let side = |w: usize| orient(u, v, p[w]).signum();
                let s = side(layer[(k + 2) % layer.len()]);
                for later in h.layers()[i + 1..].iter().flatten() {
                    prop_assert_eq!(side(*later), s);
                }
            }
        }
    }
}

#[test]
fn convex_position_gives_every_quadruple() {
    for n in 4..=12 {
        // points on y = x^2 are in convex position
        let p: Vec<(i64, i64)> = (0..n).map(|i| (i, i * i)).collect();
        let d = Drawing::from_coords(&p).unwrap();
        assert_eq!(crossing_count(d.points()), usize::try_from(binomial(n as u64, 4)).unwrap());
    }
}

#[test]
fn symmetric_k9_tally_matches_oracle() {
    let d = parse_bytes(&corpus("k9_symmetric.pts")).unwrap().drawing;
    let p: Vec<(i64, i64)> = d.points().iter().map(|q| (q.x, q.y)).collect();
    assert_eq!(edge_pair_oracle(&p), 36);
    // the file lists the outer, middle and inner triangle in that order
    // digits sort in r < g < b order
    let colour = |v: usize| ['0', '1', '2'][v / 3];
    let mut oracle: BTreeMap<String, usize> = BTreeMap::new();
    for a in 0..9 {
        for b in a + 1..9 {
            for c in 0..9 {
                for e in c + 1..9 {
                    if (a, b) >= (c, e) || [a, b].iter().any(|x| *x == c || *x == e) {
                        continue;
                    }
                    let crosses = orient(p[a], p[b], p[c]).signum() * orient(p[a], p[b], p[e]).signum() < 0
                        && orient(p[c], p[e], p[a]).signum() * orient(p[c], p[e], p[b]).signum() < 0;
                    if crosses {
                        let mut x = [colour(a), colour(b)];
                        let mut y = [colour(c), colour(e)];
                        x.sort();
                        y.sort();
                        let (x, y): (String, String) = (x.iter().collect(), y.iter().collect());
                        let key = if x <= y { format!("{x}_{y}") } else { format!("{y}_{x}") };
                        let key: String = key.chars().map(|c| match c { '0' => 'r', '1' => 'g', '2' => 'b', c => c }).collect();
                        *oracle.entry(key).or_default() += 1;
                    }
                }
            }
        }
    }
    let hist = tally_by_label(&color_by_hulls(&d).unwrap());
    let expected = [("rg_rg", 3), ("rb_rb", 3), ("gb_gb", 3), ("rb_gg", 9), ("rg_rb", 9), ("rb_gb", 9)];
    for (key, count) in expected {
        assert_eq!(oracle.get(key).copied().unwrap_or(0), count, "oracle {key}");
    }
    assert_eq!(oracle.values().sum::<usize>(), 36);
    for (label, count) in [("rg_rg", 3), ("rb_rb", 3), ("gb_gb", 3), ("rb_gg", 9), ("rb_rg", 9), ("rb_gb", 9)] {
        assert_eq!(hist.of(label), count, "{label}");
    }
}

#[test]
fn corpus_files_round_trip_byte_for_byte() {
    for name in ["k9_symmetric.pts", "k6_ccc.pts", "k6_vvv.pts", "k9_36_gbbb3.pts"] {
        let bytes = corpus(name);
        let file = parse_bytes(&bytes).unwrap();
        assert_eq!(file.to_text().as_bytes(), &bytes[..], "{name}");
    }
}

/// Minimum crossing count over every general-position `n`-subset of the grid.
fn grid_oracle(n: usize, w: i64, h: i64) -> usize {
    let cells: Vec<(i64, i64)> = (0..w).flat_map(|x| (0..h).map(move |y| (x, y))).collect();
    let mut best = usize::MAX;
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let pts: Vec<(i64, i64)> = idx.iter().map(|&i| cells[i]).collect();
        if general_position(&pts) {
            best = best.min(edge_pair_oracle(&pts));
        }
        // next combination in lexicographic order
        let Some(i) = (0..n).rev().find(|&i| idx[i] < cells.len() - n + i) else { break };
        idx[i] += 1;
        for j in i + 1..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
    best
}

#[test]
fn grid_search_matches_enumeration() {
    for (n, w, h) in [(4, 4, 4), (5, 4, 4), (5, 3, 4), (6, 4, 4)] {
        let r = grid_exhaustive(n, w, h).unwrap();
        assert_eq!(r.count, grid_oracle(n, w, h), "n={n} grid {w}x{h}");
        assert_eq!(crossing_count(r.best.points()), r.count);
        assert!(r.best.points().iter().all(|p: &Point| p.x < w && p.y < h && p.x >= 0 && p.y >= 0));
    }
}
