//! Drawing generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::drawing::Drawing;
use crate::edge::Vertex;
use crate::error::{Error, Result};
use crate::geometry::{find_degeneracy, orient, Point, COORD_LIMIT};

/// Side length of the box random points are drawn from.
pub const RANDOM_BOX: i64 = 1 << 20;

/// Resample budget of [`random_geometric`].
pub const RESAMPLE_BUDGET: usize = 10_000;

/// Integer points in general position; point `i - 1` is vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PointSet(Vec<Point>);

impl PointSet {
    /// Rejects coordinates beyond [`COORD_LIMIT`], coincident points and
    /// collinear triples. Indices in errors are 1-based.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewVertices(points.len()));
        }
        for p in &points {
            for c in [p.x, p.y] {
                if c.abs() > COORD_LIMIT {
                    return Err(Error::CoordinateOutOfRange(c));
                }
            }
        }
        if let Some(bad) = find_degeneracy(&points) {
            return Err(Error::DegeneratePointSet(bad.into_iter().map(|i| i + 1).collect()));
        }
        Ok(Self(points))
    }

    pub(crate) fn from_trusted(points: Vec<Point>) -> Self {
        Self(points)
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pts = Vec::<Point>::deserialize(d)?;
        PointSet::new(pts).map_err(serde::de::Error::custom)
    }
}

/// Straight-line drawing on `points`.
pub fn geometric(points: Vec<Point>) -> Result<Drawing> {
    Ok(Drawing::from_points(PointSet::new(points)?))
}

fn circle_points(n: usize, radius: f64) -> Vec<Point> {
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            Point::new((radius * t.cos()).round() as i64, (radius * t.sin()).round() as i64)
        })
        .collect()
}

fn strictly_convex(pts: &[Point]) -> bool {
    let n = pts.len();
    if (0..n).any(|i| orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) <= 0) {
        return false;
    }
    // left turns everywhere and a single winding: angles from point 0 increase
    (2..n).all(|i| orient(pts[0], pts[i - 1], pts[i]) > 0)
}

/// Points in convex position, labeled counterclockwise.
///
/// # Panics
/// If `n < 3` or `n` is too large to place on a lattice circle within the
/// coordinate limit.
pub fn convex_position(n: usize) -> Drawing {
    convex_points(n)
        .map(Drawing::from_points)
        .expect("convex position needs 3 <= n and a representable circle")
}

/// Coordinates used by [`convex_position`].
pub fn convex_points(n: usize) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let mut radius = 1e9;
    while radius <= COORD_LIMIT as f64 {
        let pts = circle_points(n, radius);
        if strictly_convex(&pts) {
            return PointSet::new(pts);
        }
        radius *= 2.0;
    }
    Err(Error::CoordinateOutOfRange(COORD_LIMIT))
}

/// Direction from vertex `i` towards `j` in the periodic spiral picture of
/// the twisted drawing (period `l`).
fn twisted_direction(i: i128, j: i128, l: i128) -> (i128, i128) {
    let dy = i * i - j * j;
    if j > i {
        (j - l - i, dy)
    } else {
        (j + l - i, dy)
    }
}

/// The twisted drawing `T_n`: `{a,b}` and `{c,d}` cross iff `a < c < d < b`
/// or `c < a < b < d`.
///
/// Rotations come from a realisation on a cylinder: vertex `i` is the point
/// `(i, -i^2)`, the horizontal coordinate is taken modulo `4n + 1` and the
/// edge `{i, j}` (`i < j`) is the straight segment to the copy of `j` one
/// period to the left.
///
/// # Panics
/// If `n < 3`.
pub fn twisted(n: usize) -> Drawing {
    assert!(n >= 3, "twisted drawing needs n >= 3");
    let l = 4 * n as i128 + 1;
    let rotations = (1..=n)
        .map(|i| {
            let mut others: Vec<(Vertex, (i128, i128))> = (1..=n)
                .filter(|&j| j != i)
                .map(|j| (j, twisted_direction(i as i128, j as i128, l)))
                .collect();
            others.sort_by(|a, b| crate::geometry::cmp_direction(a.1, b.1));
            others.into_iter().map(|(j, _)| j).collect()
        })
        .collect();
    Drawing::nested_unchecked(n, rotations)
}

/// Seeded random point set in `[0, 2^20)^2`. Each degenerate point is
/// resampled until the set is in general position.
pub fn random_points(n: usize, seed: u64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| Point::new(rng.gen_range(0..RANDOM_BOX), rng.gen_range(0..RANDOM_BOX));
    let mut pts: Vec<Point> = (0..n).map(|_| sample(&mut rng)).collect();
    for _ in 0..RESAMPLE_BUDGET {
        match find_degeneracy(&pts) {
            None => return PointSet::new(pts),
            Some(bad) => {
                let last = *bad.iter().max().expect("degeneracy lists points");
                pts[last] = sample(&mut rng);
            }
        }
    }
    Err(Error::ExhaustedRejection(RESAMPLE_BUDGET))
}

/// Geometric drawing of [`random_points`].
pub fn random_geometric(n: usize, seed: u64) -> Result<Drawing> {
    random_points(n, seed).map(Drawing::from_points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::Edge;

    #[test]
    fn convex_position_is_in_general_position() {
        for n in [3, 4, 5, 12, 100, 2000] {
            let ps = convex_points(n).unwrap();
            assert!(strictly_convex(ps.points()));
            assert_eq!(find_degeneracy(ps.points()), None, "n = {n}");
        }
    }

    #[test]
    fn convex_position_rotations_follow_the_circle() {
        let d = convex_position(6);
        assert_eq!(d.rotation(1), &[2, 3, 4, 5, 6]);
        assert_eq!(d.rotation(4), &[1, 2, 3, 5, 6]);
        // {i,j} and {k,l} cross iff they interleave on the circle
        assert!(d.crosses(Edge::new(1, 4), Edge::new(2, 5)));
        assert!(!d.crosses(Edge::new(1, 2), Edge::new(3, 6)));
    }

    #[test]
    fn twisted_crossing_count() {
        for n in 4..9 {
            let d = twisted(n);
            let c = d.crossing_pairs().len();
            let quads = n * (n - 1) * (n - 2) * (n - 3) / 24;
            assert_eq!(c, quads);
        }
    }

    #[test]
    fn twisted_rotations_are_consistent_with_crossings() {
        for n in 4..=12 {
            assert_eq!(twisted(n).k4_rotation_mismatch(), None, "n = {n}");
        }
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_points(30, 7).unwrap();
        let b = random_points(30, 7).unwrap();
        let c = random_points(30, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a
            .points()
            .iter()
            .all(|p| (0..RANDOM_BOX).contains(&p.x) && (0..RANDOM_BOX).contains(&p.y)));
    }

    #[test]
    fn point_set_validation() {
        let pts = vec![Point::new(0, 0), Point::new(1, 1), Point::new(2, 2)];
        assert!(matches!(PointSet::new(pts), Err(Error::DegeneratePointSet(_))));
        let far = vec![Point::new(0, 0), Point::new(COORD_LIMIT + 1, 0), Point::new(0, 1)];
        assert!(matches!(PointSet::new(far), Err(Error::CoordinateOutOfRange(_))));
        assert!(matches!(random_points(2, 0), Err(Error::TooFewVertices(2))));
        let json = "[[0,0],[4,0],[0,3]]";
        assert!(serde_json::from_str::<PointSet>(json).is_ok());
        assert!(serde_json::from_str::<PointSet>("[[0,0],[1,1],[2,2]]").is_err());
    }
}
