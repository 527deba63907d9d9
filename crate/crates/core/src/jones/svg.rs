//! SVG drawing of the link diagram of a tree pair.
//!
//! Leaves sit on the x axis, internal vertex `k` of either tree at
//! `x = k + 1/2` and at its height above (plus) or below (minus) the axis.
//! Gap edges are vertical and the outer edge runs around the right side.
//! Under-strands stop short of their crossing.

use std::fmt::Write as _;

use crate::jones::diagram::LinkDiagram;
use crate::jones::graph::{Child, Side, TreeShape};
use crate::trees::TreePair;

const UNIT: f64 = 40.0;
const GAP: f64 = 0.18;

type Point = (f64, f64);

struct End {
    at: Point,
    under: bool,
}

pub fn to_svg(pair: &TreePair, mirror: bool) -> String {
    let n = pair.leaf_count();
    let d = LinkDiagram::from_pair(pair, mirror);
    let mut paths: Vec<Vec<Point>> = Vec::new();
    let mut unders: Vec<(bool, bool)> = Vec::new();
    let (height, depth);
    if n == 1 {
        height = 1.0;
        depth = 1.0;
    } else {
        let plus = TreeShape::new(pair.plus());
        let minus = TreeShape::new(pair.minus());
        let id = |side: Side, k: usize| if side == Side::Plus { 2 * k } else { 2 * k + 1 };
        let under = |side: Side, k: usize, slot: usize| d.crossings()[id(side, k)].over.other().slots().contains(&slot);
        let pos = |side: Side, shape: &TreeShape, k: usize| {
            let h = shape.height[k] as f64;
            (k as f64 + 0.5, if side == Side::Plus { h } else { -h })
        };
        let parent_slot = |side: Side| if side == Side::Plus { 0 } else { 2 };
        let mut edge = |a: End, b: End| {
            paths.push(vec![a.at, b.at]);
            unders.push((a.under, b.under));
        };
        for (side, shape) in [(Side::Plus, &plus), (Side::Minus, &minus)] {
            for (k, children) in shape.children.iter().enumerate() {
                for (i, c) in children.iter().enumerate() {
                    let from = End { at: pos(side, shape, k), under: under(side, k, 1 + 2 * i) };
                    let to = match *c {
                        Child::Internal(j) => End { at: pos(side, shape, j), under: under(side, j, parent_slot(side)) },
                        Child::Leaf(j) => End { at: (j as f64, 0.0), under: false },
                    };
                    edge(from, to);
                }
            }
        }
        for k in 0..n - 1 {
            edge(
                End { at: pos(Side::Plus, &plus, k), under: under(Side::Plus, k, 2) },
                End { at: pos(Side::Minus, &minus, k), under: under(Side::Minus, k, 0) },
            );
        }
        let (pr, mr) = (plus.root.expect("n >= 2"), minus.root.expect("n >= 2"));
        let (top, bottom) = (pos(Side::Plus, &plus, pr), pos(Side::Minus, &minus, mr));
        height = top.1 + 1.0;
        depth = -bottom.1 + 1.0;
        let right = n as f64;
        paths.push(vec![top, (top.0, height), (right, height), (right, -depth), (bottom.0, -depth), bottom]);
        unders.push((under(Side::Plus, pr, 0), under(Side::Minus, mr, 2)));
    }
    let width = (n as f64 + 2.0) * UNIT;
    let total = (height + depth + 1.0) * UNIT;
    let map = |(x, y): Point| ((x + 1.0) * UNIT, (height + 0.5 - y) * UNIT);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{total:.0}" viewBox="0 0 {width:.0} {total:.0}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">"#);
    if n == 1 {
        let (cx, cy) = map((0.0, 0.0));
        let _ = writeln!(out, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}"/>"#, 0.6 * UNIT);
    }
    for (mut path, (u0, u1)) in paths.into_iter().zip(unders) {
        let last = path.len() - 1;
        if u0 {
            path[0] = shorten(path[0], path[1]);
        }
        if u1 {
            path[last] = shorten(path[last], path[last - 1]);
        }
        let pts: Vec<String> = path.into_iter().map(map).map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "));
    }
    for j in 0..n {
        let (x, y) = map((j as f64, 0.0));
        let _ = writeln!(out, r#"<circle cx="{x:.1}" cy="{y:.1}" r="2" fill="gray" stroke="none"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Moves `from` a fixed distance toward `toward`.
fn shorten(from: Point, toward: Point) -> Point {
    let (dx, dy) = (toward.0 - from.0, toward.1 - from.1);
    let len = (dx * dx + dy * dy).sqrt();
    let t = (GAP / len).min(0.45);
    (from.0 + dx * t, from.1 + dy * t)
}
