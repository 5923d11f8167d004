//! Random instance generators for property checks and corpus runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex2::{ClosedWalk, Edge, Face, SignedEdge, TwoComplex};
use crate::zmod::{Modulus, SubmoduleSpan, ZModMatrix};

#[derive(Clone, Copy, Debug)]
pub struct ComplexLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_faces: usize,
    pub max_walk: usize,
}

impl Default for ComplexLimits {
    fn default() -> Self {
        ComplexLimits {
            max_vertices: 4,
            max_edges: 6,
            max_faces: 4,
            max_walk: 6,
        }
    }
}

/// A valid 2-complex within `limits`, with at least one vertex and edge.
///
/// Faces are random closed walks: a random walk that closes with a final
/// step back to its start. Faces that fail to close after a few attempts
/// are dropped.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, limits: ComplexLimits) -> TwoComplex {
    let nv = rng.gen_range(1..=limits.max_vertices.max(1));
    let ne = rng.gen_range(1..=limits.max_edges.max(1));
    let edges: Vec<Edge> = (0..ne)
        .map(|k| Edge {
            name: format!("e{k}"),
            source: rng.gen_range(0..nv),
            target: rng.gen_range(0..nv),
        })
        .collect();

    // outgoing[v] lists signed edges leaving v.
    let mut outgoing: Vec<Vec<(SignedEdge, usize)>> = vec![Vec::new(); nv];
    for (k, e) in edges.iter().enumerate() {
        outgoing[e.source].push((SignedEdge::plus(k), e.target));
        outgoing[e.target].push((SignedEdge::minus(k), e.source));
    }

    let nf = rng.gen_range(0..=limits.max_faces);
    let mut faces = Vec::new();
    for f in 0..nf {
        for _attempt in 0..50 {
            let start = rng.gen_range(0..nv);
            if outgoing[start].is_empty() {
                continue;
            }
            let len = rng.gen_range(1..=limits.max_walk.max(1));
            let mut steps = Vec::with_capacity(len);
            let mut here = start;
            let mut stuck = false;
            for _ in 0..len - 1 {
                let Some(&(step, next)) = outgoing[here].choose(rng) else {
                    stuck = true;
                    break;
                };
                steps.push(step);
                here = next;
            }
            if stuck {
                continue;
            }
            let closing: Vec<SignedEdge> = outgoing[here]
                .iter()
                .filter(|&&(_, to)| to == start)
                .map(|&(s, _)| s)
                .collect();
            if let Some(&last) = closing.choose(rng) {
                steps.push(last);
                faces.push(Face::new(format!("f{f}"), ClosedWalk::new(steps)));
                break;
            }
        }
    }

    let vertices = (0..nv).map(|k| format!("v{k}")).collect();
    TwoComplex::new(vertices, edges, faces)
}

/// A span of up to `max_generators` uniform random vectors in `Z_D^n`.
pub fn random_span<R: Rng + ?Sized>(
    rng: &mut R,
    modulus: Modulus,
    n: usize,
    max_generators: usize,
) -> SubmoduleSpan {
    let k = rng.gen_range(0..=max_generators);
    let d = modulus.get();
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(0..d)).collect())
        .collect();
    SubmoduleSpan::new(ZModMatrix::from_residue_rows(modulus, n, &rows).expect("rows have width n"))
}
