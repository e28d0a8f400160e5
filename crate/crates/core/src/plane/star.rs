//! Bad edges around a star vertex and the star-avoiding Hamiltonian cycle.
//!
//! Labels: with `N = n - 1`, the non-star vertices are numbered `1..=N` in
//! the rotation of the star vertex. Consecutive labels (with `N` followed by
//! `1`) span the candidate edges; such an edge is bad if it crosses a star
//! edge `{w, v_star}`, and `w` is then one of its witnesses.

use crate::drawing::SimpleDrawing;
use crate::edge::{Edge, Vertex};
use crate::error::{Error, Lemma, NotConvexEvidence, Result};

/// Bad edge between positions `j` and `j + 1` (cyclic) of a vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawBadEdge {
    pub pos: usize,
    /// Positions of the witnesses, increasing.
    pub witnesses: Vec<usize>,
}

/// Bad edges of the cyclic sequence `cyc` around `star`.
///
/// Uses `len * (len - 2)` crossing queries.
pub(crate) fn raw_bad_edges<D: SimpleDrawing + ?Sized>(d: &D, star: Vertex, cyc: &[Vertex]) -> Vec<RawBadEdge> {
    let len = cyc.len();
    if len < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for j in 0..len {
        let e = Edge::new(cyc[j], cyc[(j + 1) % len]);
        let witnesses: Vec<usize> = (0..len)
            .filter(|&p| p != j && p != (j + 1) % len)
            .filter(|&p| d.crosses(e, Edge::new(cyc[p], star)))
            .collect();
        if !witnesses.is_empty() {
            out.push(RawBadEdge { pos: j, witnesses });
        }
    }
    out
}

/// A bad edge `{v, v + 1}` in star-frame labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadEdge {
    pub v: usize,
    /// Witness labels, increasing.
    pub witnesses: Vec<usize>,
}

impl BadEdge {
    pub fn w_left(&self) -> usize {
        self.witnesses[0]
    }

    pub fn w_right(&self) -> usize {
        *self.witnesses.last().expect("a bad edge has a witness")
    }
}

/// Labeled view of a drawing around a star vertex.
#[derive(Clone, Debug)]
pub struct StarFrame {
    pub v_star: Vertex,
    /// `order[label - 1]` is the drawing vertex carrying `label`.
    pub order: Vec<Vertex>,
    /// Bad edges sorted by `v`.
    pub bad_edges: Vec<BadEdge>,
    /// `l_table[r]` for right-block labels `r`, `0` elsewhere. Empty unless
    /// there are at least two bad edges.
    pub l_table: Vec<usize>,
}

impl StarFrame {
    pub fn n(&self) -> usize {
        self.order.len() + 1
    }

    pub fn vertex(&self, label: usize) -> Vertex {
        self.order[label - 1]
    }

    pub fn m(&self) -> usize {
        self.bad_edges.len()
    }

    fn edge(&self, a: usize, b: usize) -> Edge {
        Edge::new(self.vertex(a), self.vertex(b))
    }

    fn star_edge(&self, a: usize) -> Edge {
        Edge::new(self.vertex(a), self.v_star)
    }

    /// `(first, last)` labels of the right block between bad edges `i` and
    /// `i + 1` (0-based).
    pub fn right_block(&self, i: usize) -> (usize, usize) {
        (self.bad_edges[i].v + 1, self.bad_edges[i + 1].v)
    }

    /// Exclusive bounds of the left block between bad edges `i` and `i + 1`.
    pub fn left_block(&self, i: usize) -> (usize, usize) {
        (self.bad_edges[i + 1].w_right(), self.bad_edges[i].w_left())
    }
}

fn evidence(lemma: Lemma, vertices: Vec<Vertex>, detail: String) -> Error {
    NotConvexEvidence::new(lemma, vertices, detail).into()
}

/// Labels the rotation of `v_star`, finds all bad edges and, with at least
/// two of them, checks the two-block, sidedness and nestedness structure and
/// fills the `l` table.
///
/// With at most one bad edge the labeling makes the bad edge `{n-1, 1}`.
/// Otherwise the last bad edge of its block becomes `{n-2, n-1}`.
pub fn build_star_frame<D: SimpleDrawing + ?Sized>(d: &D, v_star: Vertex) -> Result<StarFrame> {
    let n = d.n();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if v_star == 0 || v_star > n {
        return Err(Error::VertexOutOfRange { vertex: v_star, n });
    }
    let cyc = d.rotation(v_star).to_vec();
    let big_n = cyc.len();
    let raw = raw_bad_edges(d, v_star, &cyc);

    // position p gets label ((p - shift) mod N) + 1
    let shift = match raw.len() {
        0 => 0,
        1 => raw[0].pos + 1,
        _ => two_block_shift(&cyc, &raw)?,
    };
    let label_of = |p: usize| (p + big_n - shift) % big_n + 1;
    let mut order = vec![0; big_n];
    for (p, &v) in cyc.iter().enumerate() {
        order[label_of(p) - 1] = v;
    }
    let mut bad_edges: Vec<BadEdge> = raw
        .iter()
        .map(|b| {
            let mut witnesses: Vec<usize> = b.witnesses.iter().map(|&p| label_of(p)).collect();
            witnesses.sort_unstable();
            BadEdge {
                v: label_of(b.pos),
                witnesses,
            }
        })
        .collect();
    bad_edges.sort_by_key(|b| b.v);
    let mut frame = StarFrame {
        v_star,
        order,
        bad_edges,
        l_table: Vec::new(),
    };
    if frame.m() >= 2 {
        check_structure(&frame)?;
        frame.l_table = compute_l_table(d, &frame);
    }
    Ok(frame)
}

/// Shift that maps the end of the bad edge preceding the witness block to
/// label `N`.
fn two_block_shift(cyc: &[Vertex], raw: &[RawBadEdge]) -> Result<usize> {
    let len = cyc.len();
    let mut is_bad_vertex = vec![false; len];
    for b in raw {
        is_bad_vertex[b.pos] = true;
        is_bad_vertex[(b.pos + 1) % len] = true;
    }
    let w0 = raw[0].witnesses[0];
    if is_bad_vertex[w0] {
        return Err(evidence(
            Lemma::TwoBlocks,
            vec![cyc[w0]],
            format!("witness {} is also an endpoint of a bad edge", cyc[w0]),
        ));
    }
    // walk back from w0 to the closest bad-edge vertex
    let mut p = w0;
    while !is_bad_vertex[p] {
        p = (p + len - 1) % len;
    }
    // every witness must sit strictly between p and the next bad vertex
    let mut gap = vec![false; len];
    let mut q = (p + 1) % len;
    while !is_bad_vertex[q] {
        gap[q] = true;
        q = (q + 1) % len;
    }
    for b in raw {
        for &w in &b.witnesses {
            if !gap[w] {
                return Err(evidence(
                    Lemma::TwoBlocks,
                    vec![cyc[w], cyc[b.pos], cyc[(b.pos + 1) % len]],
                    format!(
                        "witnesses of bad edges are not contiguous around the star vertex ({} of {})",
                        cyc[w],
                        Edge::new(cyc[b.pos], cyc[(b.pos + 1) % len])
                    ),
                ));
            }
        }
    }
    // p ends a bad edge, so it takes label N: shift = p + 1
    Ok((p + 1) % len)
}

fn check_structure(f: &StarFrame) -> Result<()> {
    let n = f.n();
    let last = f.bad_edges.last().expect("at least two bad edges");
    if last.v != n - 2 {
        return Err(evidence(
            Lemma::TwoBlocks,
            vec![f.vertex(last.v), f.vertex(last.v % (n - 1) + 1)],
            "last bad edge is not {n-2, n-1} after relabeling".to_string(),
        ));
    }
    for b in &f.bad_edges {
        if b.w_right() >= b.v {
            return Err(evidence(
                Lemma::Sidedness,
                vec![f.vertex(b.w_right()), f.vertex(b.v), f.vertex(b.v + 1)],
                format!("witness label {} is not below bad edge label {}", b.w_right(), b.v),
            ));
        }
    }
    for w in f.bad_edges.windows(2) {
        if w[0].w_left() <= w[1].w_right() {
            return Err(evidence(
                Lemma::Nestedness,
                vec![
                    f.vertex(w[0].v),
                    f.vertex(w[1].v),
                    f.vertex(w[0].w_left()),
                    f.vertex(w[1].w_right()),
                ],
                format!(
                    "bad edges at labels {} < {} have witnesses {} <= {}",
                    w[0].v,
                    w[1].v,
                    w[0].w_left(),
                    w[1].w_right()
                ),
            ));
        }
    }
    Ok(())
}

/// Two-pointer computation of `l(r)` for every right block.
///
/// For `r` in `R_i`, `l(r)` is the largest `z` in `L_i` such that `{u, r}`
/// crosses `{z, v_star}` for some `u` in `L_i` below `z`, or `w_{i+1}^R`
/// if there is none. Since `l` is non-increasing along `R_i`, each block
/// tests `O(|L_i| + |R_i|)` candidate pairs with `O(|L_i|)` queries each.
fn compute_l_table<D: SimpleDrawing + ?Sized>(d: &D, f: &StarFrame) -> Vec<usize> {
    let mut table = vec![0; f.n()];
    for i in 0..f.m() - 1 {
        let (lo, hi) = f.left_block(i);
        let (r_first, r_last) = f.right_block(i);
        let mut l = hi - 1;
        let mut r = r_first;
        while r <= r_last {
            if l <= lo {
                table[r] = lo;
                r += 1;
                continue;
            }
            let star = f.star_edge(l);
            if (lo + 1..l).any(|u| d.crosses(f.edge(u, r), star)) {
                table[r] = l;
                r += 1;
            } else {
                l -= 1;
            }
        }
    }
    table
}

/// Crossing-free check of a non-star edge against all star edges.
fn check_non_star_crossing<D: SimpleDrawing + ?Sized>(
    d: &D,
    f: &StarFrame,
    a: usize,
    b: usize,
    lemma: Lemma,
) -> Result<()> {
    let e = f.edge(a, b);
    for z in 1..f.n() {
        if z != a && z != b && d.crosses(e, f.star_edge(z)) {
            return Err(evidence(
                lemma,
                vec![f.vertex(a), f.vertex(b), f.vertex(z)],
                format!("{e} crosses star edge {}", f.star_edge(z)),
            ));
        }
    }
    Ok(())
}

/// Visited labels of a growing path, checked to stay an interval.
struct Visited {
    seen: Vec<bool>,
    count: usize,
    lo: usize,
    hi: usize,
}

impl Visited {
    fn new(len: usize) -> Self {
        Self {
            seen: vec![false; len + 1],
            count: 0,
            lo: usize::MAX,
            hi: 0,
        }
    }

    fn push(&mut self, f: &StarFrame, path: &mut Vec<usize>, p: usize) -> Result<()> {
        if std::mem::replace(&mut self.seen[p], true) {
            return Err(evidence(
                Lemma::Interval,
                vec![f.vertex(p)],
                format!("label {p} visited twice"),
            ));
        }
        self.count += 1;
        self.lo = self.lo.min(p);
        self.hi = self.hi.max(p);
        path.push(p);
        Ok(())
    }

    fn check(&self, f: &StarFrame, lo: usize, hi: usize) -> Result<()> {
        if self.lo != lo || self.hi != hi || self.count != hi - lo + 1 {
            return Err(evidence(
                Lemma::Interval,
                vec![f.vertex(self.lo), f.vertex(self.hi)],
                format!("visited labels are not the interval [{lo}, {hi}]"),
            ));
        }
        Ok(())
    }
}

/// Path through all non-star vertices, in labels, none of whose edges
/// crosses a star edge. Every prefix is an interval of labels.
pub fn star_avoiding_labels<D: SimpleDrawing + ?Sized>(d: &D, f: &StarFrame) -> Result<Vec<usize>> {
    let big_n = f.n() - 1;
    if f.m() <= 1 {
        return Ok((1..=big_n).collect());
    }
    let n = f.n();
    let v1 = f.bad_edges[0].v;
    let block_of = |r: usize| {
        f.bad_edges
            .iter()
            .rposition(|b| b.v < r)
            .expect("r lies in a right block")
    };
    let mut path = Vec::with_capacity(big_n);
    let mut visited = Visited::new(big_n);
    visited.push(f, &mut path, v1)?;
    let (mut x, mut r) = (v1, v1 + 1);
    loop {
        let x2 = f.l_table[r];
        let r2 = (r + 1..=n - 2).find(|&q| f.l_table[q] != f.l_table[r]).unwrap_or(n - 1);
        let (lo, _) = f.left_block(block_of(r));
        if x2 >= x || x2 < lo {
            return Err(evidence(
                Lemma::Interval,
                vec![f.vertex(r)],
                format!("l({r}) = {x2} is not in [{lo}, {x})"),
            ));
        }
        for y in (x2 + 1..x).rev() {
            visited.push(f, &mut path, y)?;
        }
        check_non_star_crossing(d, f, x2 + 1, r, Lemma::NonStarCrossing)?;
        for y in r..r2 {
            visited.push(f, &mut path, y)?;
        }
        check_non_star_crossing(d, f, r2 - 1, x2, Lemma::NonStarCrossing)?;
        visited.push(f, &mut path, x2)?;
        visited.check(f, x2, r2 - 1)?;
        x = x2;
        r = r2;
        if r2 == n - 1 {
            break;
        }
    }
    for y in (1..x).rev() {
        visited.push(f, &mut path, y)?;
    }
    check_non_star_crossing(d, f, 1, big_n, Lemma::WrapEdge)?;
    visited.push(f, &mut path, big_n)?;
    visited.check(f, 1, big_n)?;
    Ok(path)
}

/// Star-avoiding non-star path in drawing vertices.
pub fn star_avoiding_path<D: SimpleDrawing + ?Sized>(d: &D, v_star: Vertex) -> Result<Vec<Vertex>> {
    let f = build_star_frame(d, v_star)?;
    Ok(star_avoiding_labels(d, &f)?.into_iter().map(|l| f.vertex(l)).collect())
}
