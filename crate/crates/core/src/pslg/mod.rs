//! The evolving planar straight-line graph.
//!
//! Mutable state is a vertex rotation system: per vertex, the neighbor list
//! sorted counter-clockwise by exact angle. Faces, boundary walks, and
//! signatures are derived on demand from the rotation system (`faces()`),
//! which keeps insertion simple and makes every query exact.

mod boundary;
mod edge_vis;
mod faces;

pub use boundary::{
    backward_convex, backward_support, classify_occurrence, forward_convex, forward_support,
    visible, VertexClass,
};
pub use edge_vis::edge_visible_to;
pub use faces::{Component, FaceSet, Occurrence};

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::geom::PointSet;
use crate::Error;

#[derive(Debug, Clone)]
pub struct Pslg {
    points: Arc<PointSet>,
    /// Neighbors of each vertex in counter-clockwise angular order.
    rot: Vec<Vec<usize>>,
    /// Undirected edge set, keyed by ordered index pair.
    edges: BTreeSet<(usize, usize)>,
}

impl Pslg {
    pub fn new(points: Arc<PointSet>) -> Pslg {
        let n = points.len();
        Pslg {
            points,
            rot: vec![Vec::new(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn points_arc(&self) -> Arc<PointSet> {
        Arc::clone(&self.points)
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.edges.iter()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&key(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// True iff inserting segment `uv` would properly intersect an existing
    /// edge or pass through another vertex. Brute force over all edges.
    pub fn would_cross(&self, u: usize, v: usize) -> bool {
        let lat = self.points.lattice();
        for &(a, b) in &self.edges {
            if lat.segments_intersect(u, v, a, b) {
                return true;
            }
        }
        for w in 0..self.points.len() {
            if w != u && w != v && lat.on_open_segment(w, u, v) {
                return true;
            }
        }
        false
    }

    /// Insert an edge, checking planarity. Errors if the edge is present or
    /// would cross the existing subdivision.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        if self.would_cross(u, v) {
            return Err(Error::CrossingInsertion(u, v));
        }
        self.splice(u, v);
        Ok(())
    }

    /// Insert an edge whose planarity the caller has already established
    /// (e.g. via a bucketed crossing check). Presence is still rejected.
    pub(crate) fn insert_edge_prechecked(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        self.splice(u, v);
        Ok(())
    }

    fn splice(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let pos_u = self.rotation_position(u, v);
        self.rot[u].insert(pos_u, v);
        let pos_v = self.rotation_position(v, u);
        self.rot[v].insert(pos_v, u);
        self.edges.insert(key(u, v));
    }

    /// Index in `rot[center]` where `target` belongs in CCW angular order.
    fn rotation_position(&self, center: usize, target: usize) -> usize {
        let lat = self.points.lattice();
        self.rot[center]
            .partition_point(|&w| angle_lt(lat, center, w, target))
    }

    /// Derive the face structure of the current subdivision.
    pub fn faces(&self) -> FaceSet {
        FaceSet::build(self)
    }

    /// True iff the graph is connected, covers every vertex, and has at
    /// least one edge.
    pub fn is_connected_spanning(&self) -> bool {
        let n = self.points.len();
        if n == 0 || self.edges.is_empty() {
            return false;
        }
        if self.rot.iter().any(|r| r.is_empty()) {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rot[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Edge-count identity `|G| = 3n - 6 - sum_f (s(f) - 3)` over all faces
    /// of a connected subdivision without isolated vertices.
    pub fn euler_signature_check(&self) -> Result<bool, Error> {
        if !self.is_connected_spanning() {
            return Err(Error::EulerPrecondition);
        }
        let fs = self.faces();
        let n = self.points.len() as i64;
        let mut sum = 0i64;
        for f in 0..fs.face_count() {
            sum += fs.signature(f) as i64 - 3;
        }
        Ok(self.edge_count() as i64 == 3 * n - 6 - sum)
    }

    /// Full triangulation test: the edge count matches `3n - 3 - h`, every
    /// bounded face is a triangle, and the bounded faces tile the hull
    /// interior exactly (by exact area).
    pub fn is_triangulation(&self, hull_size: usize) -> bool {
        let n = self.points.len();
        if self.edge_count() != 3 * n - 3 - hull_size {
            return false;
        }
        let fs = self.faces();
        let lat = self.points.lattice();
        let mut bounded_area2 = num_bigint::BigInt::zero();
        for f in 0..fs.face_count() {
            if !fs.face(f).bounded {
                continue;
            }
            if fs.face(f).components.len() != 1 {
                return false;
            }
            let comp = fs.component(fs.face(f).components[0]);
            if comp.occurrences().len() != 3 {
                return false;
            }
            // walks with the face on the right are clockwise, area negative
            bounded_area2 -= comp.area2();
        }
        let hull = match self.points.convex_hull() {
            Ok(h) => h,
            Err(_) => return false,
        };
        if hull.len() != hull_size {
            return false;
        }
        let hull_area2 = lat.walk_area2(&hull);
        bounded_area2 == hull_area2
    }
}

pub(crate) fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Strict angular order around `center`, starting from the positive x axis
/// and sweeping counter-clockwise: is `a` strictly before `b`?
fn angle_lt(lat: &crate::geom::Lattice, center: usize, a: usize, b: usize) -> bool {
    let ha = angle_half(lat, center, a);
    let hb = angle_half(lat, center, b);
    if ha != hb {
        return ha < hb;
    }
    // same half-plane: CCW order is by cross product sign
    lat.orient(center, a, b) > 0
}

/// 0 for directions in the upper half (angle in [0, pi)), 1 otherwise.
fn angle_half(lat: &crate::geom::Lattice, center: usize, p: usize) -> u8 {
    use std::cmp::Ordering;
    match lat.cmp_y(p, center) {
        Ordering::Greater => 0,
        Ordering::Less => 1,
        Ordering::Equal => {
            if lat.cmp_xy(p, center) == Ordering::Greater {
                0
            } else {
                1
            }
        }
    }
}
