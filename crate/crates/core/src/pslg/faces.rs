//! Face derivation from the rotation system.
//!
//! Directed edges are partitioned into boundary walks by the face-on-the-
//! right traversal rule: after arriving at `v` along `u -> v`, the walk
//! continues to the successor of `u` in the counter-clockwise rotation at
//! `v`. Walks with negative signed area bound a face from inside (the walk
//! is clockwise); non-negative walks are hole or tree components and are
//! assigned to the face that geometrically contains them, as are isolated
//! vertices.

use num_bigint::BigInt;
use num_traits::Signed;

use super::Pslg;

/// One stop on a boundary walk: the vertex plus its walk neighbors (the
/// incoming half-edge arrives from `prev`, the outgoing one leaves to
/// `next`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub vertex: usize,
    pub prev: usize,
    pub next: usize,
}

/// A connected boundary component: either a closed walk of half-edges or a
/// single isolated vertex (a singleton sequence).
#[derive(Debug, Clone)]
pub struct Component {
    occ: Vec<Occurrence>,
    area2: BigInt,
    face: usize,
}

impl Component {
    pub fn occurrences(&self) -> &[Occurrence] {
        &self.occ
    }

    pub fn len(&self) -> usize {
        self.occ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occ.is_empty()
    }

    /// Twice the signed area of the walk; negative for walks that bound a
    /// face from inside, zero for trees, positive for walks seen from
    /// outside.
    pub fn area2(&self) -> &BigInt {
        &self.area2
    }

    pub fn face(&self) -> usize {
        self.face
    }

    pub fn is_isolated_vertex(&self) -> bool {
        self.occ.len() == 1
    }

    /// The vertex sequence of the walk.
    pub fn vertex_seq(&self) -> Vec<usize> {
        self.occ.iter().map(|o| o.vertex).collect()
    }
}

/// A face of the subdivision: the unbounded face plus one face per
/// clockwise boundary walk.
#[derive(Debug, Clone)]
pub struct Face {
    pub bounded: bool,
    /// Component ids on this face's boundary, outermost walk first for
    /// bounded faces.
    pub components: Vec<usize>,
}

/// Snapshot of the face structure of a [`Pslg`].
#[derive(Debug, Clone)]
pub struct FaceSet {
    faces: Vec<Face>,
    components: Vec<Component>,
}

impl FaceSet {
    pub(super) fn build(g: &Pslg) -> FaceSet {
        let n = g.vertex_count();
        let lat = g.points().lattice();

        // Flatten directed edges: id = dir_base[u] + position of the
        // neighbor in rot[u].
        let mut dir_base = vec![0usize; n + 1];
        for u in 0..n {
            dir_base[u + 1] = dir_base[u] + g.degree(u);
        }
        let total_dirs = dir_base[n];
        let dir_target = |u: usize, pos: usize| g.neighbors(u)[pos];

        // position of `w` in rot[v]
        let pos_of = |v: usize, w: usize| -> usize {
            g.neighbors(v)
                .iter()
                .position(|&x| x == w)
                .expect("rotation must contain the twin origin")
        };

        let mut visited = vec![false; total_dirs];
        let mut components: Vec<Component> = Vec::new();
        for u in 0..n {
            for pos in 0..g.degree(u) {
                let start = dir_base[u] + pos;
                if visited[start] {
                    continue;
                }
                // walk the orbit
                let mut occ: Vec<Occurrence> = Vec::new();
                let mut cu = u;
                let mut cpos = pos;
                loop {
                    let id = dir_base[cu] + cpos;
                    if visited[id] {
                        break;
                    }
                    visited[id] = true;
                    let cv = dir_target(cu, cpos);
                    occ.push(Occurrence {
                        vertex: cu,
                        prev: usize::MAX, // fixed after the walk
                        next: cv,
                    });
                    // continue along (cv -> ccw successor of cu at cv)
                    let back = pos_of(cv, cu);
                    let deg = g.degree(cv);
                    cpos = (back + 1) % deg;
                    cu = cv;
                }
                let m = occ.len();
                for i in 0..m {
                    occ[i].prev = occ[(i + m - 1) % m].vertex;
                }
                let verts: Vec<usize> = occ.iter().map(|o| o.vertex).collect();
                let area2 = lat.walk_area2(&verts);
                components.push(Component { occ, area2, face: usize::MAX });
            }
        }

        // isolated vertices become singleton components
        for v in 0..n {
            if g.degree(v) == 0 {
                components.push(Component {
                    occ: vec![Occurrence { vertex: v, prev: v, next: v }],
                    area2: BigInt::from(0),
                    face: usize::MAX,
                });
            }
        }

        // one bounded face per negative-area walk, plus the unbounded face 0
        let mut faces = vec![Face { bounded: false, components: Vec::new() }];
        let mut neg: Vec<usize> = Vec::new();
        for (ci, c) in components.iter().enumerate() {
            if c.area2.is_negative() {
                neg.push(ci);
            }
        }
        let mut face_of_neg = vec![0usize; components.len()];
        for &ci in &neg {
            face_of_neg[ci] = faces.len();
            faces.push(Face { bounded: true, components: vec![ci] });
        }
        for &ci in &neg {
            components[ci].face = face_of_neg[ci];
        }

        // assign every non-negative component to the smallest enclosing
        // clockwise walk, or to the unbounded face
        let neg_verts: Vec<Vec<usize>> = neg
            .iter()
            .map(|&ci| components[ci].vertex_seq())
            .collect();
        for ci in 0..components.len() {
            if components[ci].area2.is_negative() {
                continue;
            }
            let rep = components[ci].occ[0].vertex;
            let mut best: Option<(BigInt, usize)> = None;
            for (k, &nci) in neg.iter().enumerate() {
                let verts = &neg_verts[k];
                if verts.contains(&rep) {
                    continue;
                }
                if lat.strictly_inside_walk(rep, verts) {
                    let size = -components[nci].area2.clone();
                    if best.as_ref().map_or(true, |(b, _)| size < *b) {
                        best = Some((size, nci));
                    }
                }
            }
            let face = best.map_or(0, |(_, nci)| face_of_neg[nci]);
            components[ci].face = face;
            faces[face].components.push(ci);
        }

        FaceSet { faces, components }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn component(&self, c: usize) -> &Component {
        &self.components[c]
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Face signature: total occurrence count over all boundary components.
    pub fn signature(&self, f: usize) -> usize {
        self.faces[f]
            .components
            .iter()
            .map(|&c| self.components[c].occ.len())
            .sum()
    }

    /// True iff the face is a triangulated face: bounded, a single boundary
    /// walk of exactly three occurrences.
    pub fn is_triangulated_face(&self, f: usize) -> bool {
        let face = &self.faces[f];
        face.bounded
            && face.components.len() == 1
            && self.components[face.components[0]].occ.len() == 3
    }

    /// Ids of non-triangulated faces.
    pub fn nontriangulated_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| !self.is_triangulated_face(f))
            .collect()
    }
}
