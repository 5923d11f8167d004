//! Oriented combinatorial 2-complexes and their chain complexes over `Z_D`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::zmod::{kernel_cardinality, Modulus, SubmoduleSpan, ZModMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// An edge traversed forwards (`Plus`) or backwards (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedEdge {
    pub edge: usize,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn plus(edge: usize) -> Self {
        SignedEdge {
            edge,
            sign: Sign::Plus,
        }
    }

    pub fn minus(edge: usize) -> Self {
        SignedEdge {
            edge,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Self {
        SignedEdge {
            edge: self.edge,
            sign: self.sign.flip(),
        }
    }
}

/// A cyclic sequence of signed edges, stored in its lexicographically
/// smallest rotation so that equal walks compare equal.
///
/// Incidence is a property of a walk inside a particular complex and is
/// checked by [`TwoComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedWalk {
    steps: Vec<SignedEdge>,
}

impl ClosedWalk {
    pub fn new(steps: Vec<SignedEdge>) -> Self {
        ClosedWalk {
            steps: canonical_rotation(steps),
        }
    }

    /// The walk with no steps, only meaningful for a flagged degenerate face.
    pub fn empty() -> Self {
        ClosedWalk { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[SignedEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `[e_0, .., e_{n-1}]^{-1} = [e_{n-1}^{-1}, .., e_0^{-1}]`.
    pub fn inverse(&self) -> ClosedWalk {
        ClosedWalk::new(self.steps.iter().rev().map(|s| s.inverse()).collect())
    }
}

fn canonical_rotation(steps: Vec<SignedEdge>) -> Vec<SignedEdge> {
    let n = steps.len();
    if n < 2 {
        return steps;
    }
    let best = (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|k| steps[(a + k) % n])
                .cmp((0..n).map(|k| steps[(b + k) % n]))
        })
        .unwrap_or(0);
    (0..n).map(|k| steps[(best + k) % n]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    pub walk: ClosedWalk,
    /// Marks a face whose boundary walk is empty.
    pub degenerate: bool,
}

impl Face {
    pub fn new(name: impl Into<String>, walk: ClosedWalk) -> Self {
        Face {
            name: name.into(),
            walk,
            degenerate: false,
        }
    }

    pub fn degenerate(name: impl Into<String>) -> Self {
        Face {
            name: name.into(),
            walk: ClosedWalk::empty(),
            degenerate: true,
        }
    }
}

/// A structural problem found by [`TwoComplex::validate`] or while reading a
/// complex document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DanglingVertex {
        edge: String,
        vertex: usize,
    },
    DanglingEdge {
        face: String,
        position: usize,
        edge: usize,
    },
    UnknownName {
        context: String,
        name: String,
    },
    DuplicateName {
        kind: &'static str,
        name: String,
    },
    /// `I_t(walk[position]) != I_s(walk[next])`.
    IncidenceBreak {
        face: String,
        position: usize,
        next: usize,
    },
    EmptyWalk {
        face: String,
    },
    DegenerateWithSteps {
        face: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingVertex { edge, vertex } => {
                write!(f, "edge {edge}: endpoint {vertex} is not a vertex")
            }
            Violation::DanglingEdge {
                face,
                position,
                edge,
            } => {
                write!(
                    f,
                    "face {face}: position {position} refers to missing edge {edge}"
                )
            }
            Violation::UnknownName { context, name } => {
                write!(f, "{context}: unknown name {name:?}")
            }
            Violation::DuplicateName { kind, name } => write!(f, "duplicate {kind} name {name:?}"),
            Violation::IncidenceBreak {
                face,
                position,
                next,
            } => {
                write!(
                    f,
                    "face {face}: walk breaks between positions {position}->{next}"
                )
            }
            Violation::EmptyWalk { face } => write!(f, "face {face}: empty walk"),
            Violation::DegenerateWithSteps { face } => {
                write!(f, "face {face}: flagged degenerate but walk is not empty")
            }
        }
    }
}

/// A 2-complex `(V, E, I_s, I_t, F, B)`. Indices are dense and follow the
/// order elements were supplied in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
}

impl TwoComplex {
    /// Assembles a complex without checking it; see [`TwoComplex::validate`].
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, faces: Vec<Face>) -> Self {
        TwoComplex {
            vertices,
            edges,
            faces,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let nv = self.vertices.len();
        for e in &self.edges {
            for v in [e.source, e.target] {
                if v >= nv {
                    out.push(Violation::DanglingVertex {
                        edge: e.name.clone(),
                        vertex: v,
                    });
                }
            }
        }
        for face in &self.faces {
            let steps = face.walk.steps();
            if steps.is_empty() {
                if !face.degenerate {
                    out.push(Violation::EmptyWalk {
                        face: face.name.clone(),
                    });
                }
                continue;
            }
            if face.degenerate {
                out.push(Violation::DegenerateWithSteps {
                    face: face.name.clone(),
                });
            }
            let mut dangling = false;
            for (position, s) in steps.iter().enumerate() {
                if s.edge >= self.edges.len() {
                    dangling = true;
                    out.push(Violation::DanglingEdge {
                        face: face.name.clone(),
                        position,
                        edge: s.edge,
                    });
                }
            }
            if dangling {
                continue;
            }
            for position in 0..steps.len() {
                let next = (position + 1) % steps.len();
                let here = self.endpoints(steps[position]);
                let there = self.endpoints(steps[next]);
                if here.1 != there.0 {
                    out.push(Violation::IncidenceBreak {
                        face: face.name.clone(),
                        position,
                        next,
                    });
                }
            }
        }
        out
    }

    /// `(source, target)` of a signed edge, following its direction.
    fn endpoints(&self, s: SignedEdge) -> (usize, usize) {
        let e = &self.edges[s.edge];
        match s.sign {
            Sign::Plus => (e.source, e.target),
            Sign::Minus => (e.target, e.source),
        }
    }

    fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(violations))
        }
    }

    /// `d_1(e) = I_t(e) - I_s(e)`, a `|V| x |E|` matrix.
    pub fn boundary1(&self, modulus: Modulus) -> Result<ZModMatrix> {
        self.ensure_valid()?;
        let mut m = ZModMatrix::zeros(self.vertices.len(), self.edges.len(), modulus);
        for (j, e) in self.edges.iter().enumerate() {
            m.add_to(e.target, j, 1);
            m.add_to(e.source, j, -1);
        }
        Ok(m)
    }

    /// Signed edge multiplicities of every face boundary, over the integers.
    /// Row `e`, column `f`.
    pub fn boundary2_integer(&self) -> Result<Vec<Vec<i64>>> {
        self.ensure_valid()?;
        let mut m = vec![vec![0i64; self.faces.len()]; self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for s in face.walk.steps() {
                m[s.edge][f] += s.sign.as_i64();
            }
        }
        Ok(m)
    }

    /// `d_2(f) = sum of signed edges of B(f)`, a `|E| x |F|` matrix.
    pub fn boundary2(&self, modulus: Modulus) -> Result<ZModMatrix> {
        let int = self.boundary2_integer()?;
        Ok(ZModMatrix::from_fn(
            self.edges.len(),
            self.faces.len(),
            modulus,
            |e, f| int[e][f],
        ))
    }

    pub fn chain_complex(&self, modulus: Modulus) -> Result<ChainComplexData> {
        ChainComplexData::new(self.boundary1(modulus)?, self.boundary2(modulus)?)
    }

    /// `sum_f d_2(f) = 0` in `Z_D^{|E|}`.
    pub fn is_orientable(&self, modulus: Modulus) -> Result<bool> {
        let int = self.boundary2_integer()?;
        Ok(int.iter().all(|row| modulus.reduce(row.iter().sum()) == 0))
    }

    /// `sum_f d_2(f) = 0` over the integers, which implies it for every `D`.
    pub fn is_orientable_over_integers(&self) -> Result<bool> {
        let int = self.boundary2_integer()?;
        Ok(int.iter().all(|row| row.iter().sum::<i64>() == 0))
    }

    /// The projective plane: one vertex, one loop `e`, one face glued along `[e, e]`.
    pub fn rp2() -> Self {
        TwoComplex::new(
            vec!["v".into()],
            vec![Edge {
                name: "e".into(),
                source: 0,
                target: 0,
            }],
            vec![Face::new(
                "f",
                ClosedWalk::new(vec![SignedEdge::plus(0), SignedEdge::plus(0)]),
            )],
        )
    }

    /// The torus: one vertex, two loops, one face glued along `[e1, e2, e1^-1, e2^-1]`.
    pub fn torus() -> Self {
        let lp = |name: &str| Edge {
            name: name.into(),
            source: 0,
            target: 0,
        };
        TwoComplex::new(
            vec!["v".into()],
            vec![lp("e1"), lp("e2")],
            vec![Face::new(
                "f",
                ClosedWalk::new(vec![
                    SignedEdge::plus(0),
                    SignedEdge::plus(1),
                    SignedEdge::minus(0),
                    SignedEdge::minus(1),
                ]),
            )],
        )
    }

    /// A `rows x cols` periodic square grid on the torus.
    ///
    /// Vertex `(r, c)` has index `r * cols + c`. Horizontal edges `h{r}_{c}`
    /// point to `(r, c+1)` and come first; vertical edges `u{r}_{c}` point to
    /// `(r+1, c)`. Each square face runs counterclockwise from its lower-left
    /// corner.
    pub fn torus_grid(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Schema(format!(
                "torus grid needs positive sides, got {rows}x{cols}"
            )));
        }
        let vid = |r: usize, c: usize| (r % rows) * cols + (c % cols);
        let h = |r: usize, c: usize| vid(r, c);
        let u = |r: usize, c: usize| rows * cols + vid(r, c);

        let mut vertices = Vec::with_capacity(rows * cols);
        let mut edges = Vec::with_capacity(2 * rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                vertices.push(format!("v{r}_{c}"));
            }
        }
        for r in 0..rows {
            for c in 0..cols {
                edges.push(Edge {
                    name: format!("h{r}_{c}"),
                    source: vid(r, c),
                    target: vid(r, c + 1),
                });
            }
        }
        for r in 0..rows {
            for c in 0..cols {
                edges.push(Edge {
                    name: format!("u{r}_{c}"),
                    source: vid(r, c),
                    target: vid(r + 1, c),
                });
            }
        }
        let mut faces = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let walk = ClosedWalk::new(vec![
                    SignedEdge::plus(h(r, c)),
                    SignedEdge::plus(u(r, c + 1)),
                    SignedEdge::minus(h(r + 1, c)),
                    SignedEdge::minus(u(r, c)),
                ]);
                faces.push(Face::new(format!("f{r}_{c}"), walk));
            }
        }
        Ok(TwoComplex::new(vertices, edges, faces))
    }
}

/// The chain complex `C_2 -> C_1 -> C_0` over `Z_D`. The coboundaries are the
/// transposes of the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexData {
    boundary1: ZModMatrix,
    boundary2: ZModMatrix,
}

impl ChainComplexData {
    /// Rejects shapes that do not compose and pairs with `d1 * d2 != 0`.
    pub fn new(boundary1: ZModMatrix, boundary2: ZModMatrix) -> Result<Self> {
        let d = boundary1.modulus();
        if boundary2.modulus() != d {
            return Err(Error::ModulusMismatch(d.get(), boundary2.modulus().get()));
        }
        let composite = boundary1.mul(&boundary2)?;
        if !composite.is_zero() {
            return Err(Error::InconsistentChain(d.get()));
        }
        Ok(ChainComplexData {
            boundary1,
            boundary2,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.boundary1.modulus()
    }

    pub fn boundary1(&self) -> &ZModMatrix {
        &self.boundary1
    }

    pub fn boundary2(&self) -> &ZModMatrix {
        &self.boundary2
    }

    pub fn coboundary1(&self) -> ZModMatrix {
        self.boundary1.transpose()
    }

    pub fn coboundary2(&self) -> ZModMatrix {
        self.boundary2.transpose()
    }

    pub fn num_vertices(&self) -> usize {
        self.boundary1.rows()
    }

    pub fn num_edges(&self) -> usize {
        self.boundary1.cols()
    }

    pub fn num_faces(&self) -> usize {
        self.boundary2.cols()
    }

    /// `|Z_1| = |ker d_1|`.
    pub fn cycles_cardinality(&self) -> BigUint {
        kernel_cardinality(&self.boundary1)
    }

    /// `|B_1| = |im d_2|`.
    pub fn boundaries_cardinality(&self) -> BigUint {
        SubmoduleSpan::new(self.coboundary2()).cardinality().clone()
    }

    /// `|H_1| = |Z_1| / |B_1|`.
    pub fn homology_cardinality(&self) -> BigUint {
        let (q, r) = self
            .cycles_cardinality()
            .div_rem(&self.boundaries_cardinality());
        debug_assert!(
            r == BigUint::from(0u32),
            "boundaries form a subgroup of cycles"
        );
        q
    }
}
