//! Red/green/blue(/white) colouring of hull layers and colour-labelled
//! crossing tallies.
//!
//! The outer triangle is red, the second layer green and the third blue. For
//! ten-vertex drawings the extra vertex is white, or the whole inner
//! quadrilateral is blue when the profile is `[3, 3, 4]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{count_crossings, strictly_inside_triangle, CrossingSet, Drawing, Edge, Point};
use crate::hull::{peel_hulls, peel_profile, HullDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Green,
    Blue,
    White,
}

impl Colour {
    pub const ALL: [Colour; 4] = [Colour::Red, Colour::Green, Colour::Blue, Colour::White];

    pub fn letter(self) -> char {
        match self {
            Colour::Red => 'r',
            Colour::Green => 'g',
            Colour::Blue => 'b',
            Colour::White => 'w',
        }
    }

    pub fn from_letter(c: char) -> Option<Colour> {
        match c {
            'r' => Some(Colour::Red),
            'g' => Some(Colour::Green),
            'b' => Some(Colour::Blue),
            'w' => Some(Colour::White),
            _ => None,
        }
    }

    fn layer(i: usize) -> Colour {
        [Colour::Red, Colour::Green, Colour::Blue][i.min(2)]
    }
}

/// Colour pair of an edge, ordered red < green < blue < white.
pub type ColourPair = (Colour, Colour);

fn pair(a: Colour, b: Colour) -> ColourPair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Canonical colour label of a crossing, e.g. `rb×rg`.
///
/// Pairs are ordered by first colour ascending, then second colour
/// descending, so `rb×rg`, `rg×gg`, `gb×bb` and `rw×gb` are canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorLabel {
    pub pair_a: ColourPair,
    pub pair_b: ColourPair,
}

fn pair_key(p: ColourPair) -> (Colour, std::cmp::Reverse<Colour>) {
    (p.0, std::cmp::Reverse(p.1))
}

impl Ord for ColorLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (pair_key(self.pair_a), pair_key(self.pair_b)).cmp(&(pair_key(other.pair_a), pair_key(other.pair_b)))
    }
}

impl PartialOrd for ColorLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arity {
    TwoColoured,
    ThreeColoured,
    FourColoured,
}

impl ColorLabel {
    pub fn new(a: ColourPair, b: ColourPair) -> Self {
        let (a, b) = (pair(a.0, a.1), pair(b.0, b.1));
        if pair_key(a) <= pair_key(b) {
            ColorLabel { pair_a: a, pair_b: b }
        } else {
            ColorLabel { pair_a: b, pair_b: a }
        }
    }

    pub fn colours(&self) -> Vec<Colour> {
        let mut c = vec![self.pair_a.0, self.pair_a.1, self.pair_b.0, self.pair_b.1];
        c.sort();
        c.dedup();
        c
    }

    /// Number of distinct colours. A label touching a single colour
    /// (e.g. `gg×gg`) reports as two-coloured.
    pub fn arity(&self) -> Arity {
        match self.colours().len() {
            0..=2 => Arity::TwoColoured,
            3 => Arity::ThreeColoured,
            _ => Arity::FourColoured,
        }
    }

    pub fn involves(&self, c: Colour) -> bool {
        self.colours().contains(&c)
    }

    /// ASCII form used in reports, e.g. `rb_rg`.
    pub fn ascii(&self) -> String {
        format!(
            "{}{}_{}{}",
            self.pair_a.0.letter(),
            self.pair_a.1.letter(),
            self.pair_b.0.letter(),
            self.pair_b.1.letter()
        )
    }

    /// Every canonical label over `colours`.
    pub fn all_over(colours: &[Colour]) -> Vec<ColorLabel> {
        let mut pairs = Vec::new();
        for (i, &a) in colours.iter().enumerate() {
            for &b in &colours[i..] {
                pairs.push(pair(a, b));
            }
        }
        let mut labels = Vec::new();
        for (i, &a) in pairs.iter().enumerate() {
            for &b in &pairs[i..] {
                labels.push(ColorLabel::new(a, b));
            }
        }
        labels.sort();
        labels
    }
}

impl fmt::Display for ColorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}×{}{}",
            self.pair_a.0.letter(),
            self.pair_a.1.letter(),
            self.pair_b.0.letter(),
            self.pair_b.1.letter()
        )
    }
}

impl FromStr for ColorLabel {
    type Err = Error;

    /// Accepts `rb×rg`, `rbxrg` and `rb_rg`.
    fn from_str(s: &str) -> Result<Self> {
        let letters: Vec<char> = s.chars().filter(|c| !matches!(c, '×' | 'x' | '_')).collect();
        let colours: Option<Vec<Colour>> = letters.iter().map(|&c| Colour::from_letter(c)).collect();
        match colours {
            Some(c) if c.len() == 4 => Ok(ColorLabel::new((c[0], c[1]), (c[2], c[3]))),
            _ => Err(Error::DomainError(format!("not a colour label: {s}"))),
        }
    }
}

/// Shorthand for tests and rules: `label("rb_gg")`.
pub fn label(s: &str) -> ColorLabel {
    s.parse().expect("valid colour label")
}

/// A drawing together with its hull layers and vertex colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDrawing {
    drawing: Drawing,
    hulls: HullDecomposition,
    colours: Vec<Colour>,
    crossings: CrossingSet,
}

impl ColoredDrawing {
    /// Colours supplied by the caller; only the length is checked.
    pub fn with_colours(drawing: Drawing, colours: Vec<Colour>) -> Result<Self> {
        if colours.len() != drawing.n() {
            return Err(Error::DomainError(format!(
                "{} colours for {} vertices",
                colours.len(),
                drawing.n()
            )));
        }
        let hulls = peel_hulls(&drawing);
        let crossings = count_crossings(&drawing);
        Ok(ColoredDrawing { drawing, hulls, colours, crossings })
    }

    pub fn drawing(&self) -> &Drawing {
        &self.drawing
    }

    pub fn hulls(&self) -> &HullDecomposition {
        &self.hulls
    }

    pub fn crossings(&self) -> &CrossingSet {
        &self.crossings
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Vertices of colour `c`, ascending.
    pub fn class(&self, c: Colour) -> Vec<usize> {
        (0..self.colours.len()).filter(|&v| self.colours[v] == c).collect()
    }

    pub fn class_points(&self, c: Colour) -> Vec<Point> {
        self.class(c).into_iter().map(|v| self.drawing.point(v)).collect()
    }

    pub fn white(&self) -> Option<usize> {
        self.colours.iter().position(|&c| c == Colour::White)
    }

    pub fn edge_colours(&self, e: Edge) -> ColourPair {
        pair(self.colours[e.0], self.colours[e.1])
    }

    /// Peel layer whose vertex set is exactly the colour class, if any.
    pub fn layer_of_class(&self, c: Colour) -> Option<usize> {
        let class = self.class(c);
        self.hulls.layers().iter().position(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l == class
        })
    }

    pub fn total(&self) -> usize {
        self.crossings.count()
    }
}

/// Colours the drawing by its peel profile.
///
/// Supported profiles: `[3,3]`; `[3,3,3]`; the nine-vertex profiles
/// `[3,6]`, `[3,5,1]`, `[3,4,2]` (outer red, second green, rest blue);
/// and for ten vertices `[3,3,4]` (inner quadrilateral blue) or any drawing
/// containing a `[3,3,3]` sub-drawing, whose extra vertex becomes white.
pub fn color_by_hulls(d: &Drawing) -> Result<ColoredDrawing> {
    let hulls = peel_hulls(d);
    let profile = hulls.profile();
    let by_layers = |hulls: &HullDecomposition| {
        let mut colours = vec![Colour::Red; d.n()];
        for (i, layer) in hulls.layers().iter().enumerate() {
            for &v in layer {
                colours[v] = Colour::layer(i);
            }
        }
        colours
    };
    match (d.n(), profile.as_slice()) {
        (6, [3, 3]) | (9, [3, 3, 3]) | (9, [3, 6]) | (9, [3, 5, 1]) | (9, [3, 4, 2]) | (10, [3, 3, 4]) => {
            ColoredDrawing::with_colours(d.clone(), by_layers(&hulls))
        }
        (10, [3, 3, 3, 1]) => color_with_white(d, hulls.layer(3)[0]),
        (10, _) => {
            let white = (0..d.n())
                .find(|&v| {
                    let mut rest = d.points().to_vec();
                    rest.remove(v);
                    peel_profile(&rest) == [3, 3, 3]
                })
                .ok_or(Error::UnsupportedShape(profile))?;
            color_with_white(d, white)
        }
        _ => Err(Error::UnsupportedShape(profile)),
    }
}

/// Colours a ten-vertex drawing whose vertex `white` completes a nested
/// triangle `K_9`.
pub fn color_with_white(d: &Drawing, white: usize) -> Result<ColoredDrawing> {
    d.check_index(white)?;
    let rest = d.without(white)?;
    let inner = peel_hulls(&rest);
    if inner.profile() != [3, 3, 3] {
        return Err(Error::UnsupportedShape(inner.profile()));
    }
    let mut colours = vec![Colour::White; d.n()];
    for (i, layer) in inner.layers().iter().enumerate() {
        for &v in layer {
            let original = if v >= white { v + 1 } else { v };
            colours[original] = Colour::layer(i);
        }
    }
    ColoredDrawing::with_colours(d.clone(), colours)
}

/// Canonical label of a crossing.
pub fn label_crossing(c: &crate::geometry::Crossing, cd: &ColoredDrawing) -> ColorLabel {
    ColorLabel::new(cd.edge_colours(c.edge_a), cd.edge_colours(c.edge_b))
}

/// Exhaustive crossing histogram: every canonical label over the colours in
/// use (21 classes for r/g/b, 55 once white appears) is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelHistogram {
    counts: BTreeMap<ColorLabel, usize>,
}

impl LabelHistogram {
    pub fn get(&self, l: ColorLabel) -> usize {
        self.counts.get(&l).copied().unwrap_or(0)
    }

    /// Count for a label given as text, e.g. `"rb_gg"`.
    pub fn of(&self, s: &str) -> usize {
        self.get(label(s))
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn classes(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ColorLabel, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// Sum over labels using exactly the colour set `{a, b}`.
    pub fn two_coloured(&self, a: Colour, b: Colour) -> usize {
        let mut want = vec![a, b];
        want.sort();
        self.counts.iter().filter(|(l, _)| l.colours() == want).map(|(_, &c)| c).sum()
    }

    /// Sum over labels touching colour `c`.
    pub fn involving(&self, c: Colour) -> usize {
        self.counts.iter().filter(|(l, _)| l.involves(c)).map(|(_, &n)| n).sum()
    }
}

pub fn tally_by_label(cd: &ColoredDrawing) -> LabelHistogram {
    let palette: Vec<Colour> = if cd.white().is_some() {
        Colour::ALL.to_vec()
    } else {
        Colour::ALL[..3].to_vec()
    };
    let mut counts: BTreeMap<ColorLabel, usize> =
        ColorLabel::all_over(&palette).into_iter().map(|l| (l, 0)).collect();
    for c in cd.crossings() {
        *counts.entry(label_crossing(c, cd)).or_insert(0) += 1;
    }
    LabelHistogram { counts }
}

fn class_polygon_edges(cd: &ColoredDrawing, c: Colour) -> Result<Vec<Edge>> {
    let layer = cd
        .layer_of_class(c)
        .ok_or_else(|| Error::UnsupportedShape(cd.hulls().profile()))?;
    Ok(cd
        .hulls()
        .polygon_edges(layer)
        .into_iter()
        .map(|(a, b)| crate::geometry::edge(a, b))
        .collect())
}

/// True iff no edge joining the two colour classes crosses a boundary edge
/// of either class polygon.
pub fn are_concentric(cd: &ColoredDrawing, outer: Colour, inner: Colour) -> Result<bool> {
    let outer_edges = class_polygon_edges(cd, outer)?;
    let inner_edges = class_polygon_edges(cd, inner)?;
    let between = |e: Edge| cd.edge_colours(e) == pair(outer, inner) && outer != inner;
    let on_polygon = |e: Edge| outer_edges.contains(&e) || inner_edges.contains(&e);
    Ok(!cd.crossings().iter().any(|c| {
        (between(c.edge_a) && on_polygon(c.edge_b)) || (between(c.edge_b) && on_polygon(c.edge_a))
    }))
}

/// Crossings between an inner-polygon edge and an edge joining the inner and
/// outer colour classes.
pub fn non_concentric_between(cd: &ColoredDrawing, outer: Colour, inner: Colour) -> Result<usize> {
    let inner_edges = class_polygon_edges(cd, inner)?;
    class_polygon_edges(cd, outer)?;
    let between = |e: Edge| cd.edge_colours(e) == pair(outer, inner);
    Ok(cd
        .crossings()
        .iter()
        .filter(|c| {
            (between(c.edge_a) && inner_edges.contains(&c.edge_b))
                || (between(c.edge_b) && inner_edges.contains(&c.edge_a))
        })
        .count())
}

/// Non-concentric crossings of the two innermost triangle layers (red/green
/// for a nested `K_6`, green/blue for a nested `K_9`).
pub fn count_non_concentric_crossings(cd: &ColoredDrawing) -> Result<usize> {
    let profile = cd.hulls().profile();
    let k = profile.len();
    if k < 2 || profile[k - 1] != 3 || profile[k - 2] != 3 || cd.white().is_some() {
        return Err(Error::UnsupportedShape(profile));
    }
    let outer = cd.colour(cd.hulls().layer(k - 2)[0]);
    let inner = cd.colour(cd.hulls().layer(k - 1)[0]);
    non_concentric_between(cd, outer, inner)
}

/// Where the white vertex sits relative to the nested triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhiteZone {
    InsideBlue,
    InsideGreen,
    InsideRed,
    Outside,
}

pub fn white_zone(cd: &ColoredDrawing) -> Option<WhiteZone> {
    let w = cd.drawing().point(cd.white()?);
    let inside = |c: Colour| {
        let t = cd.class_points(c);
        t.len() == 3 && strictly_inside_triangle(w, t[0], t[1], t[2])
    };
    Some(if inside(Colour::Blue) {
        WhiteZone::InsideBlue
    } else if inside(Colour::Green) {
        WhiteZone::InsideGreen
    } else if inside(Colour::Red) {
        WhiteZone::InsideRed
    } else {
        WhiteZone::Outside
    })
}
