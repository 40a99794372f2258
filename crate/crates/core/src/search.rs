//! Seeded local search for low-crossing drawings and an exhaustive grid oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::known_lower_bound;
use crate::error::{Error, Result};
use crate::geometry::{crossing_count, det, fits_general_position, vertex_load, Drawing, Point, COORD_BOUND};

/// Restarts run in batches of this size; a batch is always evaluated in
/// full, so stopping between batches does not depend on thread count.
pub const BATCH: usize = 8;

const START_ATTEMPTS: u32 = 200;
const POINT_ATTEMPTS: u32 = 2_000;
const MOVE_REDRAWS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub restarts: usize,
    pub moves_per_restart: usize,
    /// Coordinates are drawn from `[0, box_size)`.
    pub box_size: i64,
    pub master_seed: u64,
    pub perturb_radius: i64,
    /// Also accept moves that keep the count unchanged.
    pub plateau: bool,
    /// Stop after the first batch that reaches the known optimum for `n`.
    pub stop_at_known: bool,
}

impl SearchParams {
    /// Default budget used for the small-`n` witnesses.
    ///
    /// | n      | restarts | moves/restart |
    /// |--------|----------|---------------|
    /// | 3..=6  | 64       | 2 000         |
    /// | 7..=9  | 64       | 20 000        |
    /// | 10     | 256      | 40 000        |
    /// | >10    | 256      | 50 000        |
    ///
    /// Box 4096, perturbation radius 1024, strict improvement only, early
    /// stop at the known value.
    pub fn for_n(n: usize, master_seed: u64) -> Self {
        let (restarts, moves_per_restart) = match n {
            0..=6 => (64, 2_000),
            7..=9 => (64, 20_000),
            10 => (256, 40_000),
            _ => (256, 50_000),
        };
        SearchParams {
            n,
            restarts,
            moves_per_restart,
            box_size: 4096,
            master_seed,
            perturb_radius: 1024,
            plateau: false,
            stop_at_known: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParams(m.to_string()));
        if self.n < 3 {
            return bad("n must be at least 3");
        }
        if self.restarts == 0 || self.moves_per_restart == 0 {
            return bad("restarts and moves per restart must be at least 1");
        }
        if self.box_size < 2 || self.box_size > COORD_BOUND {
            return bad("box size must lie in [2, coordinate bound]");
        }
        if self.perturb_radius < 1 {
            return bad("perturbation radius must be at least 1");
        }
        Ok(())
    }
}

/// Enough to replay a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedTrace {
    pub master_seed: u64,
    /// Seed of the restart that produced the best drawing, if any.
    pub best_restart: Option<(usize, u64)>,
    pub restarts_run: usize,
}

impl fmt::Display for SeedTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "master_seed={} restarts_run={}", self.master_seed, self.restarts_run)?;
        if let Some((i, s)) = self.best_restart {
            write!(f, " best_restart={i} restart_seed={s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best: Drawing,
    pub count: usize,
    /// Best count of each restart, in restart order; `None` when no
    /// general-position start could be sampled.
    pub history: Vec<Option<usize>>,
    pub seed_trace: SeedTrace,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of restart `i`; independent of how restarts are scheduled.
pub fn restart_seed(master: u64, i: usize) -> u64 {
    splitmix64(master ^ splitmix64(i as u64))
}

fn fits_except(points: &[Point], skip: usize, p: Point) -> bool {
    let n = points.len();
    for i in 0..n {
        if i == skip {
            continue;
        }
        if points[i] == p {
            return false;
        }
        for j in i + 1..n {
            if j != skip && det(points[i], points[j], p) == 0 {
                return false;
            }
        }
    }
    true
}

fn random_start(rng: &mut ChaCha8Rng, n: usize, box_size: i64) -> Option<Vec<Point>> {
    'start: for _ in 0..START_ATTEMPTS {
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            let placed = (0..POINT_ATTEMPTS).find_map(|_| {
                let p = Point::new(rng.random_range(0..box_size), rng.random_range(0..box_size));
                fits_general_position(&pts, p).then_some(p)
            });
            match placed {
                Some(p) => pts.push(p),
                None => continue 'start,
            }
        }
        return Some(pts);
    }
    None
}

/// Radius drawn log-uniformly in integers: an octave first, then a value in it.
fn random_radius(rng: &mut ChaCha8Rng, max: i64) -> i64 {
    let octaves = 64 - (max as u64).leading_zeros();
    let k = rng.random_range(0..octaves);
    let lo = 1i64 << k;
    let hi = ((lo << 1) - 1).min(max);
    rng.random_range(lo..=hi)
}

struct Descent<'a> {
    rng: &'a mut ChaCha8Rng,
    /// Moves stay in `[lo, hi]` on both axes.
    lo: i64,
    hi: i64,
    radius: i64,
    plateau: bool,
    target: usize,
    keep: &'a dyn Fn(&[Point]) -> bool,
}

impl Descent<'_> {
    /// Draws a legal single-vertex move, re-drawing on collinearity.
    fn propose(&mut self, pts: &[Point]) -> Option<(usize, Point)> {
        let v = self.rng.random_range(0..pts.len());
        for _ in 0..MOVE_REDRAWS {
            let r = random_radius(self.rng, self.radius);
            let (dx, dy) = (self.rng.random_range(-r..=r), self.rng.random_range(-r..=r));
            let q = Point::new(pts[v].x + dx, pts[v].y + dy);
            if (dx, dy) == (0, 0) || q.x.min(q.y) < self.lo || q.x.max(q.y) > self.hi {
                continue;
            }
            if fits_except(pts, v, q) {
                return Some((v, q));
            }
        }
        None
    }

    /// Hill descent from `pts`; returns the final count. The count never
    /// increases.
    fn run(&mut self, pts: &mut [Point], mut count: usize, moves: usize) -> usize {
        for _ in 0..moves {
            if count <= self.target {
                break;
            }
            let Some((v, q)) = self.propose(pts) else { continue };
            let old = vertex_load(pts, v, pts[v]);
            let new = vertex_load(pts, v, q);
            if new < old || (self.plateau && new == old) {
                let prev = std::mem::replace(&mut pts[v], q);
                if !(self.keep)(pts) {
                    pts[v] = prev;
                    continue;
                }
                count = count - old + new;
            }
        }
        count
    }
}

fn one_restart(params: &SearchParams, seed: u64, target: usize) -> Option<(usize, Vec<Point>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = random_start(&mut rng, params.n, params.box_size)?;
    let count = crossing_count(&pts);
    let mut descent = Descent {
        rng: &mut rng,
        lo: 0,
        hi: params.box_size - 1,
        radius: params.perturb_radius,
        plateau: params.plateau,
        target,
        keep: &|_| true,
    };
    let count = descent.run(&mut pts, count, params.moves_per_restart);
    Some((count, pts))
}

/// Multi-restart hill descent. Deterministic for fixed parameters whatever
/// the rayon pool size.
pub fn local_search(params: &SearchParams) -> Result<SearchResult> {
    params.validate()?;
    let known = known_value(params.n);
    let target = if params.stop_at_known { known.unwrap_or(0) } else { 0 };

    let mut history = Vec::with_capacity(params.restarts);
    let mut best: Option<(usize, Vec<Point>, usize)> = None;
    let mut start = 0;
    while start < params.restarts {
        let end = (start + BATCH).min(params.restarts);
        let batch: Vec<Option<(usize, Vec<Point>)>> = (start..end)
            .into_par_iter()
            .map(|i| one_restart(params, restart_seed(params.master_seed, i), target))
            .collect();
        for (offset, outcome) in batch.into_iter().enumerate() {
            history.push(outcome.as_ref().map(|(c, _)| *c));
            if let Some((c, pts)) = outcome {
                let better = match &best {
                    None => true,
                    Some((bc, bp, _)) => (c, &pts) < (*bc, bp),
                };
                if better {
                    best = Some((c, pts, start + offset));
                }
            }
        }
        start = end;
        if params.stop_at_known && matches!((&best, known), (Some((c, _, _)), Some(k)) if *c <= k) {
            break;
        }
    }

    let (count, pts, idx) =
        best.ok_or(Error::GenerationBudgetExceeded { attempts: (params.restarts as u64) * START_ATTEMPTS as u64 })?;
    let best = Drawing::new(pts)?;
    debug_assert_eq!(crossing_count(best.points()), count);
    Ok(SearchResult {
        best,
        count,
        seed_trace: SeedTrace {
            master_seed: params.master_seed,
            best_restart: Some((idx, restart_seed(params.master_seed, idx))),
            restarts_run: history.len(),
        },
        history,
    })
}

fn known_value(n: usize) -> Option<usize> {
    crate::bounds::KNOWN_VALUES.iter().find(|&&(m, _)| m as usize == n).map(|&(_, v)| v as usize)
}

/// Hill descent on an existing drawing; the result never has more
/// crossings than the input.
pub fn improve_drawing(d: &Drawing, budget: usize, seed: u64) -> Drawing {
    descend_within(d, budget, seed, &|_| true)
}

/// Like [`improve_drawing`], but only accepts moves after which `keep`
/// still holds. `keep` should hold for the input.
pub fn descend_within(d: &Drawing, budget: usize, seed: u64, keep: &dyn Fn(&[Point]) -> bool) -> Drawing {
    let mut pts = d.points().to_vec();
    let (lo, hi) = pts.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p.x.min(p.y)), hi.max(p.x.max(p.y))));
    let count = crossing_count(&pts);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // moves stay inside the input's bounding square
    let mut descent = Descent { rng: &mut rng, lo, hi, radius: ((hi - lo) / 2).max(1), plateau: false, target: 0, keep };
    descent.run(&mut pts, count, budget);
    Drawing::new(pts).expect("moves preserve general position and bounds")
}

pub const GRID_SUBSET_LIMIT: u128 = 100_000_000;

/// Exact minimum over all general-position `n`-subsets of the
/// `grid_w x grid_h` grid `{0..w} x {0..h}`, by branch and bound.
pub fn grid_exhaustive(n: usize, grid_w: i64, grid_h: i64) -> Result<SearchResult> {
    if n < 3 || grid_w < 1 || grid_h < 1 {
        return Err(Error::InvalidParams("need n >= 3 and a non-empty grid".into()));
    }
    let cells: Vec<Point> = (0..grid_w).flat_map(|x| (0..grid_h).map(move |y| Point::new(x, y))).collect();
    let subsets = choose(cells.len() as u128, n as u128);
    if subsets > GRID_SUBSET_LIMIT {
        return Err(Error::BudgetExceeded { subsets, limit: GRID_SUBSET_LIMIT });
    }

    struct Dfs<'a> {
        cells: &'a [Point],
        n: usize,
        current: Vec<Point>,
        best: Option<(usize, Vec<Point>)>,
    }
    impl Dfs<'_> {
        fn go(&mut self, from: usize, count: usize) {
            if self.best.as_ref().is_some_and(|(b, _)| count >= *b) {
                return;
            }
            if self.current.len() == self.n {
                self.best = Some((count, self.current.clone()));
                return;
            }
            let need = self.n - self.current.len();
            for c in from..=self.cells.len() - need {
                let p = self.cells[c];
                if !fits_general_position(&self.current, p) {
                    continue;
                }
                self.current.push(p);
                let last = self.current.len() - 1;
                let added = vertex_load(&self.current, last, p);
                self.go(c + 1, count + added);
                self.current.pop();
            }
        }
    }

    let mut dfs = Dfs { cells: &cells, n, current: Vec::with_capacity(n), best: None };
    if cells.len() >= n {
        dfs.go(0, 0);
    }
    let (count, pts) = dfs.best.ok_or_else(|| {
        Error::DomainError(format!("no {n} points of a {grid_w}x{grid_h} grid are in general position"))
    })?;
    Ok(SearchResult {
        best: Drawing::new(pts)?,
        count,
        history: vec![Some(count)],
        seed_trace: SeedTrace { master_seed: 0, best_restart: None, restarts_run: 0 },
    })
}

fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// True iff the result is consistent with the best known lower bound.
pub fn respects_lower_bound(n: usize, count: usize) -> bool {
    num_bigint::BigInt::from(count) >= known_lower_bound(n as u64)
}
