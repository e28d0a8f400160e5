//! Plane Hamiltonian structures in convex drawings.
//!
//! Every public operation builds its structure combinatorially and then
//! checks it with [`crate::oracle::verify`]. A structure the oracle rejects
//! means the input is not convex, and is reported as
//! [`NotConvexEvidence`] with [`Lemma::Certificate`]. The `*_vertices`
//! variants return the raw construction without the final check.

mod st_path;
pub mod star;
mod two_edges;

pub use star::{build_star_frame, star_avoiding_path, BadEdge, StarFrame};
pub use two_edges::{geometric_path_with_two_edges, geometric_path_with_two_edges_vertices};

use crate::certificate::{canonical_cycle, Certificate, Claims};
use crate::drawing::SimpleDrawing;
use crate::edge::{Edge, Vertex};
use crate::error::{Error, Lemma, NotConvexEvidence, Result};
use crate::oracle;

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::TooFewVertices(n))
    } else {
        Ok(())
    }
}

/// Runs the oracle on `cert` and marks it verified.
pub fn certify<D: SimpleDrawing + ?Sized>(d: &D, mut cert: Certificate) -> Result<Certificate> {
    let diagnosis = oracle::verify(d, &cert);
    if !diagnosis.ok {
        return Err(
            NotConvexEvidence::new(Lemma::Certificate, cert.vertices.clone(), diagnosis.failures.join("; ")).into(),
        );
    }
    cert.oracle_verified = true;
    Ok(cert)
}

/// Plane Hamiltonian path from `s` to `t`, unverified.
pub fn st_hamiltonian_path_vertices<D: SimpleDrawing + ?Sized>(d: &D, s: Vertex, t: Vertex) -> Result<Vec<Vertex>> {
    let n = d.n();
    check_vertex(s, n)?;
    check_vertex(t, n)?;
    if s == t {
        return Err(Error::SameVertex(s));
    }
    Ok(st_path::st_path_in(d, (1..=n).collect(), s, t))
}

/// Plane Hamiltonian path from `s` to `t`.
pub fn st_hamiltonian_path<D: SimpleDrawing + ?Sized>(d: &D, s: Vertex, t: Vertex) -> Result<Certificate> {
    let path = st_hamiltonian_path_vertices(d, s, t)?;
    let claims = Claims {
        plane: true,
        hamiltonian: true,
        endpoints: Some((s, t)),
        ..Claims::default()
    };
    certify(d, Certificate::path(path, claims))
}

/// Plane Hamiltonian cycle, unverified, starting at 1 and continuing towards
/// its smaller neighbour.
///
/// With `t = n` as star vertex: without bad edges the rotation of `t` is
/// walked and closed by two star edges; otherwise an `s`-`t` path from the
/// second vertex `s` of the chosen bad edge is closed by the star edge
/// `{t, s}`.
pub fn hamiltonian_cycle_vertices<D: SimpleDrawing + ?Sized>(d: &D) -> Result<Vec<Vertex>> {
    let n = d.n();
    check_n(n)?;
    let t = n;
    let cyc = d.rotation(t).to_vec();
    let bad = star::raw_bad_edges(d, t, &cyc);
    let cycle = match st_path::choose_bad_edge(&bad) {
        None => std::iter::once(t).chain(cyc.iter().copied()).collect(),
        Some(b) => {
            let s = cyc[(b.pos + 1) % cyc.len()];
            st_path::st_path_in(d, (1..=n).collect(), s, t)
        }
    };
    Ok(canonical_cycle(&cycle))
}

/// Plane Hamiltonian cycle.
pub fn hamiltonian_cycle<D: SimpleDrawing + ?Sized>(d: &D) -> Result<Certificate> {
    let cycle = hamiltonian_cycle_vertices(d)?;
    let claims = Claims {
        plane: true,
        hamiltonian: true,
        ..Claims::default()
    };
    certify(d, Certificate::cycle(cycle, claims))
}

/// Plane Hamiltonian cycle avoiding all edges at `v_star`, unverified. The
/// result starts at `v_star` and continues with the star-avoiding path.
pub fn star_avoiding_hamiltonian_cycle_vertices<D: SimpleDrawing + ?Sized>(
    d: &D,
    v_star: Vertex,
) -> Result<Vec<Vertex>> {
    check_n(d.n())?;
    let path = star_avoiding_path(d, v_star)?;
    Ok(std::iter::once(v_star).chain(path).collect())
}

/// Plane Hamiltonian cycle none of whose edges crosses an edge at `v_star`.
pub fn star_avoiding_hamiltonian_cycle<D: SimpleDrawing + ?Sized>(d: &D, v_star: Vertex) -> Result<Certificate> {
    let cycle = star_avoiding_hamiltonian_cycle_vertices(d, v_star)?;
    let claims = Claims {
        plane: true,
        hamiltonian: true,
        star_avoiding: Some(v_star),
        ..Claims::default()
    };
    certify(d, Certificate::cycle(cycle, claims))
}

/// Empty `k`-cycle through `v_star`, unverified: `v_star` followed by the
/// first `k - 1` vertices of the star-avoiding path.
pub fn empty_k_cycle_vertices<D: SimpleDrawing + ?Sized>(d: &D, k: usize, v_star: Vertex) -> Result<Vec<Vertex>> {
    let n = d.n();
    check_n(n)?;
    if k < 3 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let path = star_avoiding_path(d, v_star)?;
    Ok(std::iter::once(v_star).chain(path.into_iter().take(k - 1)).collect())
}

/// Plane `k`-cycle with a side containing no vertex.
pub fn empty_k_cycle<D: SimpleDrawing + ?Sized>(d: &D, k: usize, v_star: Vertex) -> Result<Certificate> {
    let cycle = empty_k_cycle_vertices(d, k, v_star)?;
    let claims = Claims {
        plane: true,
        hamiltonian: k == d.n(),
        empty_side: true,
        ..Claims::default()
    };
    certify(d, Certificate::cycle(cycle, claims))
}

/// Plane Hamiltonian path through `e`, unverified.
///
/// The star-avoiding cycle `u, x_1, ..., x_{n-1}` at `u` together with all
/// star edges at `u` is plane. If `v = x_i` the path
/// `x_{i-1}, ..., x_1, u, x_i, ..., x_{n-1}` uses only those edges.
pub fn path_containing_edge_vertices<D: SimpleDrawing + ?Sized>(d: &D, e: Edge) -> Result<Vec<Vertex>> {
    let n = d.n();
    check_n(n)?;
    check_vertex(e.v(), n)?;
    let (u, v) = (e.u(), e.v());
    let x = star_avoiding_path(d, u)?;
    let i = x.iter().position(|&w| w == v).expect("v is a non-star vertex");
    let mut path: Vec<Vertex> = x[..i].iter().rev().copied().collect();
    path.push(u);
    path.extend_from_slice(&x[i..]);
    Ok(path)
}

/// Plane Hamiltonian path containing `e`.
pub fn path_containing_edge<D: SimpleDrawing + ?Sized>(d: &D, e: Edge) -> Result<Certificate> {
    let path = path_containing_edge_vertices(d, e)?;
    let claims = Claims {
        plane: true,
        hamiltonian: true,
        contains: vec![e],
        ..Claims::default()
    };
    certify(d, Certificate::path(path, claims))
}
