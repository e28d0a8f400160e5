//! Exact integer predicates on lattice points.
//!
//! Coordinates are `i64` bounded by [`COORD_LIMIT`]; every determinant is
//! evaluated in `i128`, so no predicate ever rounds.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Largest supported absolute coordinate value (2^40).
pub const COORD_LIMIT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Twice the signed area of `abc`: positive for a counterclockwise turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.x as i128, a.y as i128);
    (b.x as i128 - ax) * (c.y as i128 - ay) - (b.y as i128 - ay) * (c.x as i128 - ax)
}

/// Proper crossing of segments `pq` and `rs`: each segment strictly
/// separates the endpoints of the other.
pub fn segments_cross(p: Point, q: Point, r: Point, s: Point) -> bool {
    let o1 = orient(p, q, r).signum();
    let o2 = orient(p, q, s).signum();
    let o3 = orient(r, s, p).signum();
    let o4 = orient(r, s, q).signum();
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Whether `p` lies strictly inside the polygon `poly` (even-odd rule,
/// exact). Points on the boundary are reported as outside.
pub fn point_in_polygon(p: Point, poly: &[Point]) -> bool {
    let mut inside = false;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        if (a.y > p.y) != (b.y > p.y) {
            // crossing of the horizontal ray to +x; orientation decides the side
            let o = orient(a, b, p);
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                inside = !inside;
            }
        }
    }
    inside
}

fn upper_half(dx: i128, dy: i128) -> bool {
    dy > 0 || (dy == 0 && dx > 0)
}

/// Counterclockwise angular comparison of direction vectors, starting at the
/// positive x-axis.
pub fn cmp_direction(a: (i128, i128), b: (i128, i128)) -> Ordering {
    let ha = upper_half(a.0, a.1);
    let hb = upper_half(b.0, b.1);
    if ha != hb {
        return if ha { Ordering::Less } else { Ordering::Greater };
    }
    let cross = a.0 * b.1 - a.1 * b.0;
    0.cmp(&cross)
}

/// Indices of `others` sorted counterclockwise around `center`.
pub fn ccw_order(center: Point, others: &[(usize, Point)]) -> Vec<usize> {
    let mut dirs: Vec<(usize, (i128, i128))> = others
        .iter()
        .map(|&(i, p)| (i, ((p.x - center.x) as i128, (p.y - center.y) as i128)))
        .collect();
    dirs.sort_by(|a, b| cmp_direction(a.1, b.1).then(a.0.cmp(&b.0)));
    dirs.into_iter().map(|(i, _)| i).collect()
}

/// Finds two equal points or three collinear points, in `O(n^2 log n)`.
///
/// Around every point the directions to later points are folded into a
/// half-plane and sorted; collinear triples show up as parallel neighbours.
pub fn find_degeneracy(points: &[Point]) -> Option<Vec<usize>> {
    let mut sorted: Vec<(Point, usize)> = points.iter().copied().zip(0..).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            return Some(vec![w[0].1, w[1].1]);
        }
    }
    for (i, &c) in points.iter().enumerate() {
        let mut dirs: Vec<((i128, i128), usize)> = points
            .iter()
            .enumerate()
            .skip(i + 1)
            .map(|(j, p)| {
                let (dx, dy) = ((p.x - c.x) as i128, (p.y - c.y) as i128);
                if upper_half(dx, dy) {
                    ((dx, dy), j)
                } else {
                    ((-dx, -dy), j)
                }
            })
            .collect();
        dirs.sort_by(|a, b| cmp_direction(a.0, b.0));
        for w in dirs.windows(2) {
            let (a, b) = (w[0].0, w[1].0);
            if a.0 * b.1 - a.1 * b.0 == 0 {
                return Some(vec![i, w[0].1, w[1].1]);
            }
        }
    }
    None
}
