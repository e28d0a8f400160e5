//! Combinatorial simple drawings of `K_n`.
//!
//! A [`Drawing`] stores a rotation system and a crossing predicate on pairs
//! of independent edges. The predicate is backed either by an explicit set
//! of crossing pairs or, for geometric drawings, by exact segment
//! intersection on integer coordinates, which keeps queries `O(1)` without
//! materialising the `Θ(n^4)` crossing set.
//!
//! Drawings are immutable once built.

use std::collections::{HashMap, HashSet};

use crate::edge::{all_edges, canonical_pair, Edge, Vertex};
use crate::error::{Error, Result};
use crate::generators::PointSet;
use crate::geometry::{ccw_order, segments_cross};

/// Read access to a drawing as used by the constructions and the oracle.
///
/// Implemented by [`Drawing`]; wrappers can implement it to instrument
/// crossing queries.
pub trait SimpleDrawing {
    fn n(&self) -> usize;

    /// Counterclockwise cyclic order of the other vertices around `v`.
    fn rotation(&self, v: Vertex) -> &[Vertex];

    /// Whether `e` and `f` cross. Always `false` for adjacent edges.
    fn crosses(&self, e: Edge, f: Edge) -> bool;
}

impl<T: SimpleDrawing + ?Sized> SimpleDrawing for &T {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn rotation(&self, v: Vertex) -> &[Vertex] {
        (**self).rotation(v)
    }

    fn crosses(&self, e: Edge, f: Edge) -> bool {
        (**self).crosses(e, f)
    }
}

#[derive(Clone, Debug)]
enum Backing {
    Explicit(HashSet<(Edge, Edge)>),
    Geometric(PointSet),
    /// `{a,b}` crosses `{c,d}` iff one interval strictly contains the other.
    Nested,
}

#[derive(Clone, Debug)]
pub struct Drawing {
    n: usize,
    /// `rotations[v - 1]`, each starting at its smallest vertex.
    rotations: Vec<Vec<Vertex>>,
    backing: Backing,
}

/// The two sides of a triangle, described by the vertices they contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePartition {
    pub triangle: [Vertex; 3],
    /// Side holding the smallest off-triangle vertex.
    pub side_a: Vec<Vertex>,
    /// The other side; empty if every off-triangle vertex is in `side_a`.
    pub side_b: Vec<Vertex>,
    pub convex_a: bool,
    pub convex_b: bool,
    /// An edge leaving side a through the triangle, when side a is not convex.
    pub blocker_a: Option<Edge>,
    pub blocker_b: Option<Edge>,
}

impl TrianglePartition {
    pub fn has_convex_side(&self) -> bool {
        self.convex_a || self.convex_b
    }

    pub fn has_empty_side(&self) -> bool {
        self.side_b.is_empty()
    }

    pub fn triangle_edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.triangle;
        [Edge::new(a, b), Edge::new(b, c), Edge::new(a, c)]
    }
}

fn normalize_rotation(mut rot: Vec<Vertex>) -> Vec<Vertex> {
    if let Some(pos) = rot.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
        rot.rotate_left(pos);
    }
    rot
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn validate_rotations(n: usize, rotations: &[Vec<Vertex>]) -> Result<()> {
    if rotations.len() != n {
        return Err(Error::InvalidRotation {
            vertex: rotations.len().min(n) + 1,
            reason: format!("expected {n} rotations, got {}", rotations.len()),
        });
    }
    for (i, rot) in rotations.iter().enumerate() {
        let vertex = i + 1;
        let mut seen = vec![false; n + 1];
        for &w in rot {
            if w == 0 || w > n || w == vertex || seen[w] {
                return Err(Error::InvalidRotation {
                    vertex,
                    reason: format!("entry {w} is out of range, repeated or the vertex itself"),
                });
            }
            seen[w] = true;
        }
        if rot.len() != n - 1 {
            return Err(Error::InvalidRotation {
                vertex,
                reason: format!("lists {} of the {} other vertices", rot.len(), n - 1),
            });
        }
    }
    Ok(())
}

/// Validates a rotation system and rotates every rotation to start at its
/// smallest vertex.
pub(crate) fn normalized_rotations(n: usize, rotations: Vec<Vec<Vertex>>) -> Result<Vec<Vec<Vertex>>> {
    validate_rotations(n, &rotations)?;
    Ok(rotations.into_iter().map(normalize_rotation).collect())
}

impl Drawing {
    /// Builds an abstract drawing from its rotation system and crossing pairs
    /// and validates the simple-drawing axioms that can be checked locally:
    /// well-formed rotations, no adjacent crossings, at most one crossing per
    /// `K_4`, and consistent triangle sides.
    pub fn new(
        n: usize,
        rotations: Vec<Vec<Vertex>>,
        crossing_pairs: impl IntoIterator<Item = (Edge, Edge)>,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        validate_rotations(n, &rotations)?;
        let mut set = HashSet::new();
        let mut per_quad: HashMap<[Vertex; 4], (Edge, Edge)> = HashMap::new();
        for (e, f) in crossing_pairs {
            for x in e.endpoints().into_iter().chain(f.endpoints()) {
                check_vertex(x, n)?;
            }
            if e.shares_vertex(f) {
                return Err(Error::AdjacentCrossing(e, f));
            }
            let pair = canonical_pair(e, f);
            if !set.insert(pair) {
                continue;
            }
            let mut quad = [e.u(), e.v(), f.u(), f.v()];
            quad.sort_unstable();
            if per_quad.insert(quad, pair).is_some() {
                return Err(Error::K4Violation(quad));
            }
        }
        let drawing = Self {
            n,
            rotations: rotations.into_iter().map(normalize_rotation).collect(),
            backing: Backing::Explicit(set),
        };
        drawing.check_all_triangle_sides()?;
        Ok(drawing)
    }

    /// Geometric drawing of a general-position point set: vertex `i` sits at
    /// `points[i - 1]` and edges are straight segments.
    pub fn from_points(points: PointSet) -> Self {
        let pts = points.points();
        let n = pts.len();
        let rotations = (0..n)
            .map(|i| {
                let others: Vec<(usize, _)> = (0..n).filter(|&j| j != i).map(|j| (j + 1, pts[j])).collect();
                normalize_rotation(ccw_order(pts[i], &others))
            })
            .collect();
        Self {
            n,
            rotations,
            backing: Backing::Geometric(points),
        }
    }

    /// Drawing whose independent edges cross exactly when their intervals are
    /// strictly nested.
    pub(crate) fn nested_unchecked(n: usize, rotations: Vec<Vec<Vertex>>) -> Self {
        Self {
            n,
            rotations: rotations.into_iter().map(normalize_rotation).collect(),
            backing: Backing::Nested,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v - 1]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn points(&self) -> Option<&PointSet> {
        match &self.backing {
            Backing::Geometric(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_geometric(&self) -> bool {
        matches!(self.backing, Backing::Geometric(_))
    }

    pub fn crosses(&self, e: Edge, f: Edge) -> bool {
        if e.shares_vertex(f) {
            return false;
        }
        match &self.backing {
            Backing::Explicit(set) => set.contains(&canonical_pair(e, f)),
            Backing::Geometric(ps) => {
                let p = ps.points();
                segments_cross(p[e.u() - 1], p[e.v() - 1], p[f.u() - 1], p[f.v() - 1])
            }
            Backing::Nested => (e.u() < f.u() && f.v() < e.v()) || (f.u() < e.u() && e.v() < f.v()),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> {
        all_edges(self.n)
    }

    /// All crossing pairs, each ordered and the list sorted lexicographically.
    pub fn crossing_pairs(&self) -> Vec<(Edge, Edge)> {
        let mut pairs: Vec<_> = match &self.backing {
            Backing::Explicit(set) => set.iter().copied().collect(),
            Backing::Geometric(_) | Backing::Nested => {
                let edges: Vec<Edge> = self.edges().collect();
                let mut out = Vec::new();
                for (i, &e) in edges.iter().enumerate() {
                    for &f in &edges[i + 1..] {
                        if self.crosses(e, f) {
                            out.push((e, f));
                        }
                    }
                }
                out
            }
        };
        pairs.sort_unstable();
        pairs
    }

    /// Same drawing with the crossing predicate materialised as a set.
    pub fn to_explicit(&self) -> Drawing {
        Drawing {
            n: self.n,
            rotations: self.rotations.clone(),
            backing: Backing::Explicit(self.crossing_pairs().into_iter().collect()),
        }
    }

    /// Subdrawing induced by `vertices`, relabeled to `1..=k` in increasing
    /// order of the original labels. The returned map sends new label `i` to
    /// `map[i - 1]`.
    pub fn induced_subdrawing(&self, vertices: &[Vertex]) -> Result<(Drawing, Vec<Vertex>)> {
        let mut map: Vec<Vertex> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            check_vertex(v, self.n)?;
        }
        if map.len() < 3 {
            return Err(Error::TooFewVertices(map.len()));
        }
        let mut new_label = vec![0; self.n + 1];
        for (i, &v) in map.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let rotations = map
            .iter()
            .map(|&v| {
                let rot = self.rotation(v).iter().filter(|&&w| new_label[w] != 0);
                normalize_rotation(rot.map(|&w| new_label[w]).collect())
            })
            .collect();
        let backing = match &self.backing {
            Backing::Explicit(set) => Backing::Explicit(
                set.iter()
                    .filter(|(e, f)| e.endpoints().iter().chain(&f.endpoints()).all(|&x| new_label[x] != 0))
                    .map(|&(e, f)| canonical_pair(e.map(|x| new_label[x]), f.map(|x| new_label[x])))
                    .collect(),
            ),
            Backing::Geometric(ps) => Backing::Geometric(PointSet::from_trusted(
                map.iter().map(|&v| ps.points()[v - 1]).collect(),
            )),
            Backing::Nested => Backing::Nested,
        };
        let sub = Drawing {
            n: map.len(),
            rotations,
            backing,
        };
        Ok((sub, map))
    }

    /// Renames vertex `i` to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Drawing> {
        let n = self.n;
        let mut seen = vec![false; n + 1];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::NotAPermutation(n));
        }
        let image = |v: Vertex| perm[v - 1];
        let mut rotations = vec![Vec::new(); n];
        for v in 1..=n {
            rotations[image(v) - 1] = normalize_rotation(self.rotation(v).iter().map(|&w| image(w)).collect());
        }
        let backing = match &self.backing {
            Backing::Explicit(set) => Backing::Explicit(
                set.iter()
                    .map(|&(e, f)| canonical_pair(e.map(image), f.map(image)))
                    .collect(),
            ),
            Backing::Geometric(ps) => {
                let mut pts = ps.points().to_vec();
                for v in 1..=n {
                    pts[image(v) - 1] = ps.points()[v - 1];
                }
                Backing::Geometric(PointSet::from_trusted(pts))
            }
            Backing::Nested => Backing::Explicit(
                self.crossing_pairs()
                    .into_iter()
                    .map(|(e, f)| canonical_pair(e.map(image), f.map(image)))
                    .collect(),
            ),
        };
        Ok(Drawing { n, rotations, backing })
    }

    /// Splits the off-triangle vertices into the two sides of triangle `abc`.
    ///
    /// Two vertices are on the same side iff the edge joining them crosses
    /// the triangle an even number of times. A side is convex iff no edge
    /// with both endpoints in the side (triangle vertices included) crosses
    /// the triangle.
    pub fn triangle_sides(&self, a: Vertex, b: Vertex, c: Vertex) -> Result<TrianglePartition> {
        triangle_sides(self, a, b, c)
    }

    /// Runs [`Drawing::triangle_sides`] on every triangle.
    pub fn check_all_triangle_sides(&self) -> Result<()> {
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                for c in b + 1..=self.n {
                    self.triangle_sides(a, b, c)?;
                }
            }
        }
        Ok(())
    }

    /// First 4-subset whose induced rotations disagree with its crossing pair.
    ///
    /// For four vertices, let `s_i` say whether the rotation at the `i`-th
    /// smallest lists the other three in increasing cyclic order. Realisable
    /// `K_4` drawings have `s_1 s_2 s_3 s_4 = +1`; all equal means `{1,3}`
    /// crosses `{2,4}`, `s_1 = s_2` means `{1,4}` crosses `{2,3}`, `s_1 = s_4`
    /// means `{1,2}` crosses `{3,4}` and `s_1 = s_3` means no crossing (labels
    /// by rank within the subset).
    pub fn k4_rotation_mismatch(&self) -> Option<[Vertex; 4]> {
        let n = self.n;
        // position of w in rotation of v
        let mut pos = vec![vec![usize::MAX; n + 1]; n + 1];
        for (v, row) in pos.iter_mut().enumerate().skip(1) {
            for (i, &w) in self.rotation(v).iter().enumerate() {
                row[w] = i;
            }
        }
        let sign = |v: Vertex, x: Vertex, y: Vertex, z: Vertex| {
            let (px, py, pz) = (pos[v][x], pos[v][y], pos[v][z]);
            // x,y,z increasing cyclically around v?
            (px < py && py < pz) || (py < pz && pz < px) || (pz < px && px < py)
        };
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        let s = [sign(a, b, c, d), sign(b, a, c, d), sign(c, a, b, d), sign(d, a, b, c)];
                        let parity = s.iter().filter(|&&x| !x).count() % 2 == 0;
                        let expected = if !parity {
                            None
                        } else if s[0] == s[1] && s[1] == s[2] {
                            Some(Some((Edge::new(a, c), Edge::new(b, d))))
                        } else if s[0] == s[1] {
                            Some(Some((Edge::new(a, d), Edge::new(b, c))))
                        } else if s[0] == s[3] {
                            Some(Some((Edge::new(a, b), Edge::new(c, d))))
                        } else {
                            Some(None)
                        };
                        let actual = [
                            (Edge::new(a, b), Edge::new(c, d)),
                            (Edge::new(a, c), Edge::new(b, d)),
                            (Edge::new(a, d), Edge::new(b, c)),
                        ]
                        .into_iter()
                        .find(|&(e, f)| self.crosses(e, f));
                        if expected != Some(actual) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }
}

impl SimpleDrawing for Drawing {
    fn n(&self) -> usize {
        self.n
    }

    fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v - 1]
    }

    fn crosses(&self, e: Edge, f: Edge) -> bool {
        Drawing::crosses(self, e, f)
    }
}

impl PartialEq for Drawing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rotations == other.rotations && self.crossing_pairs() == other.crossing_pairs()
    }
}

impl Eq for Drawing {}

/// [`Drawing::triangle_sides`] for any [`SimpleDrawing`].
pub fn triangle_sides<D: SimpleDrawing + ?Sized>(d: &D, a: Vertex, b: Vertex, c: Vertex) -> Result<TrianglePartition> {
    let n = d.n();
    for v in [a, b, c] {
        check_vertex(v, n)?;
    }
    if a == b || b == c || a == c {
        return Err(Error::Inconsistent(format!("triangle {a},{b},{c} repeats a vertex")));
    }
    let mut tri = [a, b, c];
    tri.sort_unstable();
    let tedges = [
        Edge::new(tri[0], tri[1]),
        Edge::new(tri[1], tri[2]),
        Edge::new(tri[0], tri[2]),
    ];
    let hits = |e: Edge| tedges.iter().filter(|&&t| d.crosses(e, t)).count();

    let off: Vec<Vertex> = (1..=n).filter(|v| !tri.contains(v)).collect();
    let mut side_of = vec![false; n + 1];
    if let Some(&first) = off.first() {
        for &w in &off[1..] {
            side_of[w] = hits(Edge::new(first, w)) % 2 == 1;
        }
        for (i, &w) in off.iter().enumerate() {
            for &x in &off[i + 1..] {
                let same = hits(Edge::new(w, x)) % 2 == 0;
                if same != (side_of[w] == side_of[x]) {
                    return Err(Error::SideInconsistency {
                        triangle: tri.to_vec(),
                        vertices: vec![first, w, x],
                    });
                }
            }
        }
    }
    let side_a: Vec<Vertex> = off.iter().copied().filter(|&w| !side_of[w]).collect();
    let side_b: Vec<Vertex> = off.iter().copied().filter(|&w| side_of[w]).collect();

    let blocker = |side: &[Vertex]| -> Option<Edge> {
        let members: Vec<Vertex> = side.iter().copied().chain(tri).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let e = Edge::new(x, y);
                if !tedges.contains(&e) && hits(e) > 0 {
                    return Some(e);
                }
            }
        }
        None
    };
    let blocker_a = blocker(&side_a);
    let blocker_b = blocker(&side_b);
    Ok(TrianglePartition {
        triangle: tri,
        convex_a: blocker_a.is_none(),
        convex_b: blocker_b.is_none(),
        side_a,
        side_b,
        blocker_a,
        blocker_b,
    })
}
