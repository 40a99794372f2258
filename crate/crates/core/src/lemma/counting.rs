use num_integer::binomial;

use super::{CheckReport, RuleId};
use crate::color::{are_concentric, count_non_concentric_crossings, tally_by_label, white_zone, Colour, ColoredDrawing, WhiteZone};
use crate::error::{Error, Result};
use crate::kite::classify_configuration;

fn profile_is(cd: &ColoredDrawing, n: usize, profile: &[usize]) -> bool {
    cd.drawing().n() == n && cd.hulls().profile() == profile && cd.white().is_none()
}

fn nested_k9(cd: &ColoredDrawing) -> bool {
    profile_is(cd, 9, &[3, 3, 3])
}

/// Checks one counting rule against a coloured drawing.
pub fn verify_counting(cd: &ColoredDrawing, rule: RuleId) -> Result<CheckReport> {
    if rule.is_geometric() {
        return Err(Error::UnknownRule(format!("{rule} is not a counting rule")));
    }
    let na = |why: &str| Ok(CheckReport::not_applicable(rule, why));
    let mut r = CheckReport::new(rule);
    let total = cd.total();
    let shape_rule = |r: &mut CheckReport, profile: &[usize], bound: usize| {
        r.observe("total", total);
        let h = tally_by_label(cd);
        r.observe("rg_gg", h.of("rg_gg"));
        total >= bound && profile_is(cd, 9, profile)
    };

    Ok(match rule {
        RuleId::K5Principle => {
            let d = cd.drawing();
            let hull = cd.hulls().layer(0);
            if hull.len() != 3 {
                return na("convex hull is not a triangle");
            }
            let colours = (0..d.n())
                .map(|v| if hull.contains(&v) { Colour::Red } else { Colour::Green })
                .collect();
            let two = ColoredDrawing::with_colours(d.clone(), colours)?;
            let rg_rg = tally_by_label(&two).of("rg_rg");
            let expected = binomial(d.n() - 3, 2);
            r.observe("rg_rg", rg_rg).observe("expected", expected);
            r.decide(rg_rg == expected)
        }
        RuleId::TwoColour => {
            if !nested_k9(cd) {
                return na("not a nested triangle K9");
            }
            let h = tally_by_label(cd);
            let (rg, rb, gb) = (
                h.two_coloured(Colour::Red, Colour::Green),
                h.two_coloured(Colour::Red, Colour::Blue),
                h.two_coloured(Colour::Green, Colour::Blue),
            );
            r.observe("rg", rg).observe("rb", rb).observe("gb", gb);
            r.decide(rg >= 3 && rb >= 3 && gb >= 3)
        }
        RuleId::NonConcentricK6 => {
            if !profile_is(cd, 6, &[3, 3]) {
                return na("not a nested triangle K6");
            }
            if are_concentric(cd, Colour::Red, Colour::Green)? {
                return na("triangles are concentric");
            }
            r.observe("total", total).observe("non_concentric", count_non_concentric_crossings(cd)?);
            r.decide(total > 3)
        }
        RuleId::ConfigurationLaw => {
            if !profile_is(cd, 6, &[3, 3]) {
                return na("not a nested triangle K6");
            }
            let cfg = classify_configuration(cd)?;
            let observed = count_non_concentric_crossings(cd)?;
            r.observe("non_concentric", observed).observe("expected", cfg.class.non_concentric_count());
            r.notes.push(format!("class {}", cfg.class));
            r.decide(observed == cfg.class.non_concentric_count())
        }
        RuleId::RbGgNine => {
            if !nested_k9(cd) {
                return na("not a nested triangle K9");
            }
            let v = tally_by_label(cd).of("rb_gg");
            r.observe("rb_gg", v);
            r.decide(v == 9)
        }
        RuleId::RbRgNine => {
            if !nested_k9(cd) {
                return na("not a nested triangle K9");
            }
            let v = tally_by_label(cd).of("rb_rg");
            r.observe("rb_rg", v);
            if v == 9 {
                r.notes.push("equality".into());
            }
            r.decide(v >= 9)
        }
        RuleId::InternalNine => {
            if !nested_k9(cd) {
                return na("not a nested triangle K9");
            }
            let h = tally_by_label(cd);
            let (rb_gb, gb_bb) = (h.of("rb_gb"), h.of("gb_bb"));
            r.observe("rb_gb", rb_gb).observe("gb_bb", gb_bb).observe("internal", rb_gb + gb_bb);
            r.decide(rb_gb + gb_bb >= 9)
        }
        RuleId::K9ConcentricOptimum | RuleId::NineMax => {
            if !nested_k9(cd) {
                return na("not a nested triangle K9");
            }
            if total != 36 {
                return na("crossing count is not 36");
            }
            let h = tally_by_label(cd);
            if rule == RuleId::K9ConcentricOptimum {
                let (rg_gg, rb_bb) = (h.of("rg_gg"), h.of("rb_bb"));
                r.observe("total", total).observe("rg_gg", rg_gg).observe("rb_bb", rb_bb);
                r.decide(rg_gg == 0 && rb_bb == 0)
            } else {
                let (rb_gb, gb_bb) = (h.of("rb_gb"), h.of("gb_bb"));
                r.observe("total", total)
                    .observe("rb_gb", rb_gb)
                    .observe("gb_bb", gb_bb)
                    .observe("internal", rb_gb + gb_bb);
                r.decide(rb_gb + gb_bb == 9 && gb_bb <= 2 && rb_gb <= 9)
            }
        }
        RuleId::WhiteInGreen | RuleId::WhiteInBlue => {
            let zone = match white_zone(cd) {
                Some(z) if cd.drawing().n() == 10 => z,
                _ => return na("no white vertex added to a nested K9"),
            };
            let h = tally_by_label(cd);
            if rule == RuleId::WhiteInGreen {
                if !matches!(zone, WhiteZone::InsideGreen | WhiteZone::InsideBlue) {
                    return na("white vertex is not inside the green triangle");
                }
                let parts = [h.of("rw_gb"), h.of("rb_bw"), h.of("gb_bw"), h.of("rg_gg")];
                r.observe("rw_gb", parts[0])
                    .observe("rb_bw", parts[1])
                    .observe("gb_bw", parts[2])
                    .observe("rg_gg", parts[3])
                    .observe("sum", parts.iter().sum::<usize>());
                r.decide(parts.iter().sum::<usize>() >= 6)
            } else {
                if zone != WhiteZone::InsideBlue {
                    return na("white vertex is not inside the blue triangle");
                }
                let (white, rg_gg) = (h.involving(Colour::White), h.of("rg_gg"));
                r.observe("total", total).observe("white", white).observe("rg_gg", rg_gg);
                r.decide(total >= 63 && white + rg_gg >= 27)
            }
        }
        RuleId::Ttq62 => {
            if !profile_is(cd, 10, &[3, 3, 4]) {
                return na("peel profile is not [3,3,4]");
            }
            r.observe("total", total);
            r.decide(total >= 62)
        }
        RuleId::GuiltyHull6 | RuleId::GuiltyHull5 | RuleId::QuadSecondHull38 => {
            let (profile, bound): (&[usize], usize) = match rule {
                RuleId::GuiltyHull6 => (&[3, 6], 42),
                RuleId::GuiltyHull5 => (&[3, 5, 1], 38),
                _ => (&[3, 4, 2], 38),
            };
            if !profile_is(cd, 9, profile) {
                return na(&format!("peel profile is not {profile:?}"));
            }
            let pass = shape_rule(&mut r, profile, bound);
            r.decide(pass)
        }
        RuleId::Barrier | RuleId::Kite | RuleId::Ccc | RuleId::Containment | RuleId::SharedLabels => {
            unreachable!("geometric rules rejected above")
        }
    })
}
