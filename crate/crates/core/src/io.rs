//! JSON exchange format for drawings.
//!
//! ```json
//! {"n": 4, "rotations": [[2,3,4],[1,3,4],[1,2,4],[1,2,3]],
//!  "crossings": [[[1,3],[2,4]]], "points": [[0,0],[4,0],[4,4],[0,4]]}
//! ```
//!
//! `crossings` may be omitted when `points` is given; `rotations` may then be
//! omitted as well. Fields that are present must agree with the points.

use serde::{Deserialize, Serialize};

use crate::drawing::Drawing;
use crate::edge::{Edge, Vertex};
use crate::error::{Error, Result};
use crate::generators::PointSet;
use crate::geometry::Point;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotations: Option<Vec<Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossings: Option<Vec<(Edge, Edge)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Point>>,
}

impl DrawingJson {
    /// Crossings are left out only if `omit_crossings` is set and the drawing
    /// has coordinates.
    pub fn from_drawing(d: &Drawing, omit_crossings: bool) -> Self {
        let points = d.points().map(|p| p.points().to_vec());
        let crossings = if omit_crossings && points.is_some() {
            None
        } else {
            Some(d.crossing_pairs())
        };
        Self {
            n: d.n(),
            rotations: Some(d.rotations().to_vec()),
            crossings,
            points,
        }
    }

    pub fn into_drawing(self) -> Result<Drawing> {
        match self.points {
            Some(points) => {
                if points.len() != self.n {
                    return Err(Error::Inconsistent(format!(
                        "n = {} but {} points",
                        self.n,
                        points.len()
                    )));
                }
                let d = Drawing::from_points(PointSet::new(points)?);
                if let Some(rot) = self.rotations {
                    if crate::drawing::normalized_rotations(self.n, rot)? != d.rotations() {
                        return Err(Error::Inconsistent("rotations do not match the points".into()));
                    }
                }
                if let Some(mut cr) = self.crossings {
                    for (e, f) in cr.iter_mut() {
                        if *f < *e {
                            std::mem::swap(e, f);
                        }
                    }
                    cr.sort_unstable();
                    cr.dedup();
                    if cr != d.crossing_pairs() {
                        return Err(Error::Inconsistent("crossings do not match the points".into()));
                    }
                }
                Ok(d)
            }
            None => {
                let rotations = self
                    .rotations
                    .ok_or_else(|| Error::Inconsistent("rotations are required without points".into()))?;
                let crossings = self
                    .crossings
                    .ok_or_else(|| Error::Inconsistent("crossings are required without points".into()))?;
                Drawing::new(self.n, rotations, crossings)
            }
        }
    }
}

pub fn to_json(d: &Drawing, omit_crossings: bool) -> String {
    serde_json::to_string(&DrawingJson::from_drawing(d, omit_crossings)).expect("drawings serialize")
}

pub fn from_json(s: &str) -> Result<Drawing> {
    serde_json::from_str::<DrawingJson>(s)?.into_drawing()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{convex_position, random_geometric, twisted};

    #[test]
    fn round_trips() {
        for d in [convex_position(6), twisted(6), random_geometric(8, 3).unwrap()] {
            let back = from_json(&to_json(&d, false)).unwrap();
            assert_eq!(back, d);
            assert_eq!(back.is_geometric(), d.is_geometric());
        }
        let d = random_geometric(8, 3).unwrap();
        let s = to_json(&d, true);
        assert!(!s.contains("crossings"));
        assert_eq!(from_json(&s).unwrap(), d);
    }

    #[test]
    fn abstract_format() {
        let s = r#"{"n":4,"rotations":[[2,3,4],[3,4,1],[4,1,2],[1,2,3]],"crossings":[[[2,4],[1,3]]]}"#;
        let d = from_json(s).unwrap();
        assert!(d.crosses(Edge::new(1, 3), Edge::new(2, 4)));
        assert_eq!(d.rotation(2), &[1, 3, 4]);
        let missing = r#"{"n":4,"rotations":[[2,3,4],[3,4,1],[4,1,2],[1,2,3]]}"#;
        assert!(matches!(from_json(missing), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn inconsistent_points_and_crossings() {
        let s = r#"{"n":4,"points":[[0,0],[4,0],[4,4],[0,4]],"crossings":[]}"#;
        assert!(matches!(from_json(s), Err(Error::Inconsistent(_))));
        let s = r#"{"n":4,"points":[[0,0],[4,0],[4,4],[0,4]],"crossings":[[[2,4],[1,3]]]}"#;
        assert!(from_json(s).is_ok());
        let s = r#"{"n":3,"points":[[0,0],[1,1],[2,2]]}"#;
        assert!(from_json(s).is_err());
    }
}
