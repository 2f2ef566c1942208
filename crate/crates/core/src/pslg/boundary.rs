//! Boundary-walk classification and occurrence visibility.
//!
//! All queries are occurrence-based: a vertex may appear several times on a
//! walk (bridges), and each appearance has its own angular wedge into the
//! face, so visibility can hold at one occurrence and fail at another.

use super::faces::Component;
use super::Pslg;
use crate::geom::Lattice;
use crate::Error;

/// Turn class of a boundary occurrence: walking with the face on the right,
/// a right turn is convex, a left turn reflex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Convex,
    Reflex,
}

/// Classify occurrence `i` of a boundary walk. A degenerate turn (walking
/// out and back over a bridge) counts as reflex: the face surrounds the
/// spike, so no fan can be built there.
pub fn classify_occurrence(g: &Pslg, comp: &Component, i: usize) -> Result<VertexClass, Error> {
    let occ = comp.occurrences();
    if occ.len() < 3 {
        return Err(Error::Unclassifiable);
    }
    let o = occ[i];
    if o.prev == o.next {
        return Ok(VertexClass::Reflex);
    }
    match g.points().lattice().orient(o.prev, o.vertex, o.next) {
        s if s < 0 => Ok(VertexClass::Convex),
        s if s > 0 => Ok(VertexClass::Reflex),
        _ => unreachable!("collinear turn on distinct input points"),
    }
}

/// Occurrence classes of a whole component, or `None` when the component is
/// too short to classify.
pub fn classify_component(g: &Pslg, comp: &Component) -> Option<Vec<VertexClass>> {
    if comp.len() < 3 {
        return None;
    }
    (0..comp.len())
        .map(|i| classify_occurrence(g, comp, i).ok())
        .collect()
}

/// Smallest `k > j` (cyclically) whose occurrence is convex.
pub fn forward_convex(g: &Pslg, comp: &Component, j: usize) -> Result<usize, Error> {
    let m = comp.len();
    for off in 1..=m {
        let k = (j + off) % m;
        if classify_occurrence(g, comp, k)? == VertexClass::Convex {
            return Ok(k);
        }
    }
    Err(Error::AllReflexComponent)
}

/// The occurrence just past the forward convex vertex of `j`.
pub fn forward_support(g: &Pslg, comp: &Component, j: usize) -> Result<usize, Error> {
    let k = forward_convex(g, comp, j)?;
    Ok((k + 1) % comp.len())
}

/// Largest `k < j` (cyclically) whose occurrence is convex. Defined only
/// for reflex occurrences.
pub fn backward_convex(g: &Pslg, comp: &Component, j: usize) -> Result<usize, Error> {
    if classify_occurrence(g, comp, j)? == VertexClass::Convex {
        return Err(Error::NotReflex);
    }
    let m = comp.len();
    for off in 1..=m {
        let k = (j + m - (off % m)) % m;
        if classify_occurrence(g, comp, k)? == VertexClass::Convex {
            return Ok(k);
        }
    }
    Err(Error::AllReflexComponent)
}

/// The occurrence just before the backward convex vertex of `j`.
pub fn backward_support(g: &Pslg, comp: &Component, j: usize) -> Result<usize, Error> {
    let k = backward_convex(g, comp, j)?;
    Ok((k + comp.len() - 1) % comp.len())
}

/// Angular class of the direction `center -> target` relative to the
/// reference direction `center -> refp`, sweeping counter-clockwise:
/// 0 on the reference ray, 1 in (0, pi), 2 opposite, 3 in (pi, 2pi).
fn angular_class(lat: &Lattice, center: usize, refp: usize, target: usize) -> u8 {
    let cr = lat.orient(center, refp, target);
    if cr > 0 {
        return 1;
    }
    if cr < 0 {
        return 3;
    }
    if lat.dot_sign(center, refp, center, target) > 0 {
        0
    } else {
        2
    }
}

/// True iff the direction from this occurrence's vertex toward `target`
/// points strictly into the face wedge (the sector swept counter-clockwise
/// from the incoming edge back-direction to the outgoing edge direction).
pub(super) fn direction_in_wedge(
    lat: &Lattice,
    occ_vertex: usize,
    occ_prev: usize,
    occ_next: usize,
    target: usize,
) -> bool {
    if occ_prev == occ_next {
        // spike tip: the face wraps fully around; only the spike direction
        // itself is excluded
        return angular_class(lat, occ_vertex, occ_prev, target) != 0;
    }
    let ct = angular_class(lat, occ_vertex, occ_prev, target);
    if ct == 0 {
        return false;
    }
    let co = angular_class(lat, occ_vertex, occ_prev, occ_next);
    debug_assert!(co == 1 || co == 3, "degenerate boundary corner");
    if ct != co {
        return ct < co;
    }
    // same angular class: strictly before the outgoing direction
    lat.orient(occ_vertex, target, occ_next) > 0
}

/// Occurrence-to-occurrence visibility inside a face: the open segment
/// between the two vertices leaves each occurrence through its face wedge,
/// contains no vertex, and crosses no edge of the subdivision.
pub fn visible(g: &Pslg, comp: &Component, a: usize, b: usize) -> bool {
    if a == b {
        return false;
    }
    let occ = comp.occurrences();
    let (oa, ob) = (occ[a], occ[b]);
    if oa.vertex == ob.vertex {
        return false;
    }
    let lat = g.points().lattice();
    if !direction_in_wedge(lat, oa.vertex, oa.prev, oa.next, ob.vertex) {
        return false;
    }
    if !direction_in_wedge(lat, ob.vertex, ob.prev, ob.next, oa.vertex) {
        return false;
    }
    segment_clear(g, oa.vertex, ob.vertex)
}

/// True iff the open segment `(u, v)` crosses no edge and contains no other
/// vertex of the subdivision.
pub(super) fn segment_clear(g: &Pslg, u: usize, v: usize) -> bool {
    let lat = g.points().lattice();
    for &(e1, e2) in g.edges() {
        if lat.segments_intersect(u, v, e1, e2) {
            return false;
        }
    }
    for w in 0..g.points().len() {
        if w != u && w != v && lat.on_open_segment(w, u, v) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Point, PointSet};
    use std::sync::Arc;

    fn graph(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> Pslg {
        let pts = coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        let ps = Arc::new(PointSet::new(pts).unwrap());
        let mut g = Pslg::new(ps);
        for &(u, v) in edges {
            g.insert_edge(u, v).unwrap();
        }
        g
    }

    fn quad() -> Pslg {
        graph(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn bounded_comp(g: &Pslg) -> (super::super::FaceSet, usize) {
        let fs = g.faces();
        let f = (0..fs.face_count()).find(|&f| fs.face(f).bounded).unwrap();
        let c = fs.face(f).components[0];
        (fs, c)
    }

    fn outer_comp(g: &Pslg) -> (super::super::FaceSet, usize) {
        let fs = g.faces();
        let c = fs.face(0).components[0];
        (fs, c)
    }

    #[test]
    fn convex_quad_inner_face_all_convex() {
        let g = quad();
        let (fs, c) = bounded_comp(&g);
        let comp = fs.component(c);
        for i in 0..comp.len() {
            assert_eq!(
                classify_occurrence(&g, comp, i).unwrap(),
                VertexClass::Convex
            );
        }
    }

    #[test]
    fn convex_quad_outer_face_all_reflex() {
        let g = quad();
        let (fs, c) = outer_comp(&g);
        let comp = fs.component(c);
        for i in 0..comp.len() {
            assert_eq!(
                classify_occurrence(&g, comp, i).unwrap(),
                VertexClass::Reflex
            );
        }
    }

    #[test]
    fn bridge_tip_is_reflex() {
        // quad with a spike into the interior: the spike tip occurrence has
        // prev == next and classifies reflex
        let g = graph(
            &[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        );
        let fs = g.faces();
        let inner = (0..fs.face_count()).find(|&f| fs.face(f).bounded).unwrap();
        let comp = fs.component(fs.face(inner).components[0]);
        let tip = comp
            .occurrences()
            .iter()
            .position(|o| o.vertex == 4)
            .unwrap();
        assert_eq!(comp.occurrences()[tip].prev, comp.occurrences()[tip].next);
        assert_eq!(classify_occurrence(&g, comp, tip).unwrap(), VertexClass::Reflex);
    }

    #[test]
    fn too_short_component_unclassifiable() {
        let g = graph(&[(0, 0), (2, 0), (5, 5)], &[(0, 1)]);
        let fs = g.faces();
        let comp = fs.component(fs.face(0).components[0]);
        if comp.len() >= 3 {
            panic!("expected a two-occurrence walk");
        }
        assert!(matches!(
            classify_occurrence(&g, comp, 0),
            Err(Error::Unclassifiable)
        ));
    }

    #[test]
    fn forward_and_backward_supports() {
        let g = quad();
        let (fs, c) = bounded_comp(&g);
        let comp = fs.component(c);
        // all-convex quad: forward convex of 0 is 1, support 2
        assert_eq!(forward_convex(&g, comp, 0).unwrap(), 1);
        assert_eq!(forward_support(&g, comp, 0).unwrap(), 2);
        // backward ops error on convex occurrences
        assert!(matches!(backward_convex(&g, comp, 0), Err(Error::NotReflex)));
    }

    #[test]
    fn supports_error_on_all_reflex_component() {
        let g = quad();
        let (fs, c) = outer_comp(&g);
        let comp = fs.component(c);
        assert!(matches!(
            forward_convex(&g, comp, 0),
            Err(Error::AllReflexComponent)
        ));
        assert!(matches!(
            backward_convex(&g, comp, 0),
            Err(Error::AllReflexComponent)
        ));
    }

    #[test]
    fn backward_support_on_mixed_walk() {
        // L-shaped hexagon: one reflex corner on the inner face walk
        let g = graph(
            &[(0, 0), (4, 0), (4, 1), (1, 1), (1, 4), (0, 4)],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        );
        let (fs, c) = bounded_comp(&g);
        let comp = fs.component(c);
        let reflex_pos = (0..comp.len())
            .find(|&i| classify_occurrence(&g, comp, i).unwrap() == VertexClass::Reflex)
            .unwrap();
        assert_eq!(comp.occurrences()[reflex_pos].vertex, 3);
        let bc = backward_convex(&g, comp, reflex_pos).unwrap();
        let bs = backward_support(&g, comp, reflex_pos).unwrap();
        // the backward convex occurrence is the previous walk stop, and the
        // support the one before it
        assert_eq!((bc + 1) % comp.len(), reflex_pos);
        assert_eq!((bs + 1) % comp.len(), bc);
    }

    #[test]
    fn visibility_in_convex_quad() {
        let g = quad();
        let (fs, c) = bounded_comp(&g);
        let comp = fs.component(c);
        // diagonal occurrences see each other
        assert!(visible(&g, comp, 0, 2));
        assert!(visible(&g, comp, 2, 0));
        assert!(visible(&g, comp, 1, 3));
        // boundary neighbors do not (the segment lies on the boundary)
        assert!(!visible(&g, comp, 0, 1));
    }

    #[test]
    fn reflex_corner_blocks_visibility() {
        // L-shaped hexagon: (4,0) cannot see (0,4) past the corner (1,1)
        let g = graph(
            &[(0, 0), (4, 0), (4, 1), (1, 1), (1, 4), (0, 4)],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        );
        let (fs, c) = bounded_comp(&g);
        let comp = fs.component(c);
        let at = |v: usize| comp.occurrences().iter().position(|o| o.vertex == v).unwrap();
        assert!(!visible(&g, comp, at(1), at(5)));
        // but (4,1) sees (0,0)
        assert!(visible(&g, comp, at(2), at(0)));
    }

    #[test]
    fn repeated_vertex_occurrences_distinguished_by_wedge() {
        // quad with a bridge from corner 0 to an interior vertex 4: the
        // inner boundary walk visits 0 twice, with different wedges. The
        // far corner sees exactly one of the two occurrences.
        let g = graph(
            &[(0, 0), (12, 0), (12, 10), (0, 10), (3, 2)],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        );
        let fs = g.faces();
        let inner = (0..fs.face_count()).find(|&f| fs.face(f).bounded).unwrap();
        let comp = fs.component(fs.face(inner).components[0]);
        assert_eq!(comp.len(), 6);
        let zero_occs: Vec<usize> = (0..comp.len())
            .filter(|&i| comp.occurrences()[i].vertex == 0)
            .collect();
        assert_eq!(zero_occs.len(), 2);
        let far = (0..comp.len())
            .find(|&i| comp.occurrences()[i].vertex == 2)
            .unwrap();
        let vis: Vec<bool> = zero_occs
            .iter()
            .map(|&z| visible(&g, comp, far, z))
            .collect();
        assert_ne!(vis[0], vis[1]);
        // symmetry of the visible pair
        let seen = zero_occs[vis.iter().position(|&v| v).unwrap()];
        assert!(visible(&g, comp, seen, far));
    }
}
