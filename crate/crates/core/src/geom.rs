//! Exact primitive geometry: orientation, segment intersection, distances,
//! convex hull, closest pair.
//!
//! Every predicate is computed with exact rational arithmetic; nothing in
//! this module rounds. Point sets additionally carry an integer lattice
//! image of their coordinates (all coordinates multiplied by a common
//! denominator) so that the hot sign predicates can run on integers, with
//! an `i64` fast path when the lattice is small enough.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::Error;

/// Exact rational scalar used for all coordinates and squared lengths.
pub type Rat = BigRational;

/// Build a rational from an integer pair, `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat_int(x), rat_int(y))
    }
}

/// Turn direction of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    Left,
    Right,
    Collinear,
}

/// Sign of the cross product `(b - a) x (c - a)`: positive is a left turn,
/// negative a right turn, zero collinear. Exact.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Turn {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    match lhs.cmp(&rhs) {
        Ordering::Greater => Turn::Left,
        Ordering::Less => Turn::Right,
        Ordering::Equal => Turn::Collinear,
    }
}

/// Exact squared Euclidean distance between two points.
pub fn squared_distance(a: &Point, b: &Point) -> Rat {
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// True iff `p` lies strictly between the endpoints of segment `(a, b)`.
pub fn point_on_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orientation(a, b, p) != Turn::Collinear {
        return false;
    }
    strictly_between_1d(&a.x, &b.x, &p.x) || strictly_between_1d(&a.y, &b.y, &p.y)
}

fn strictly_between_1d(a: &Rat, b: &Rat, p: &Rat) -> bool {
    (a < p && p < b) || (b < p && p < a)
}

/// Open-segment intersection: true iff the open segments `a1a2` and `b1b2`
/// share at least one point, or an endpoint of one lies strictly inside the
/// other. Segments that only share endpoints do not intersect.
pub fn segments_properly_intersect(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> bool {
    let o1 = orientation(b1, b2, a1);
    let o2 = orientation(b1, b2, a2);
    let o3 = orientation(a1, a2, b1);
    let o4 = orientation(a1, a2, b2);

    if o1 != o2
        && o1 != Turn::Collinear
        && o2 != Turn::Collinear
        && o3 != o4
        && o3 != Turn::Collinear
        && o4 != Turn::Collinear
    {
        return true;
    }

    // Touching and collinear cases.
    if o1 == Turn::Collinear && point_on_open_segment(a1, b1, b2) {
        return true;
    }
    if o2 == Turn::Collinear && point_on_open_segment(a2, b1, b2) {
        return true;
    }
    if o3 == Turn::Collinear && point_on_open_segment(b1, a1, a2) {
        return true;
    }
    if o4 == Turn::Collinear && point_on_open_segment(b2, a1, a2) {
        return true;
    }

    // Fully collinear segments: open overlap of positive length. The
    // endpoint-inside cases above already cover partial overlaps, so the
    // remaining case is two identical (or reversed) segments.
    if o1 == Turn::Collinear && o2 == Turn::Collinear && o3 == Turn::Collinear {
        let same = (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
        if same {
            return true;
        }
    }
    false
}

/// Integer lattice image of a point set: all coordinates scaled by the
/// common denominator of the set. Sign predicates on the lattice agree with
/// the rational ones because the scale factor is positive.
#[derive(Debug, Clone)]
pub struct Lattice {
    coords: Vec<[BigInt; 2]>,
    small: Option<Vec<[i64; 2]>>,
}

const SMALL_LATTICE_LIMIT: i64 = 1 << 30;

impl Lattice {
    fn build(points: &[Point]) -> Lattice {
        let mut denom = BigInt::from(1);
        for p in points {
            denom = num_integer::lcm(denom, p.x.denom().clone());
            denom = num_integer::lcm(denom, p.y.denom().clone());
        }
        let coords: Vec<[BigInt; 2]> = points
            .iter()
            .map(|p| {
                let x = p.x.numer() * (&denom / p.x.denom());
                let y = p.y.numer() * (&denom / p.y.denom());
                [x, y]
            })
            .collect();
        let mut small = Some(Vec::with_capacity(coords.len()));
        for c in &coords {
            match (i64::try_from(&c[0]), i64::try_from(&c[1])) {
                (Ok(x), Ok(y)) if x.abs() < SMALL_LATTICE_LIMIT && y.abs() < SMALL_LATTICE_LIMIT => {
                    if let Some(v) = small.as_mut() {
                        v.push([x, y]);
                    }
                }
                _ => {
                    small = None;
                    break;
                }
            }
        }
        Lattice { coords, small }
    }

    /// Sign of `(b - a) x (c - a)` by point index: 1 left, -1 right, 0 collinear.
    pub fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        if let Some(s) = &self.small {
            let (pa, pb, pc) = (s[a], s[b], s[c]);
            let v = (pb[0] - pa[0]) as i128 * (pc[1] - pa[1]) as i128
                - (pb[1] - pa[1]) as i128 * (pc[0] - pa[0]) as i128;
            return v.signum() as i8;
        }
        let (pa, pb, pc) = (&self.coords[a], &self.coords[b], &self.coords[c]);
        let v = (&pb[0] - &pa[0]) * (&pc[1] - &pa[1]) - (&pb[1] - &pa[1]) * (&pc[0] - &pa[0]);
        sign_big(&v)
    }

    /// Sign of the cross product of the vectors `a -> b` and `c -> d`.
    pub fn cross_sign(&self, a: usize, b: usize, c: usize, d: usize) -> i8 {
        if let Some(s) = &self.small {
            let v = (s[b][0] - s[a][0]) as i128 * (s[d][1] - s[c][1]) as i128
                - (s[b][1] - s[a][1]) as i128 * (s[d][0] - s[c][0]) as i128;
            return v.signum() as i8;
        }
        let v = (&self.coords[b][0] - &self.coords[a][0]) * (&self.coords[d][1] - &self.coords[c][1])
            - (&self.coords[b][1] - &self.coords[a][1])
                * (&self.coords[d][0] - &self.coords[c][0]);
        sign_big(&v)
    }

    /// Sign of the dot product of the vectors `a -> b` and `c -> d`.
    pub fn dot_sign(&self, a: usize, b: usize, c: usize, d: usize) -> i8 {
        if let Some(s) = &self.small {
            let v = (s[b][0] - s[a][0]) as i128 * (s[d][0] - s[c][0]) as i128
                + (s[b][1] - s[a][1]) as i128 * (s[d][1] - s[c][1]) as i128;
            return v.signum() as i8;
        }
        let v = (&self.coords[b][0] - &self.coords[a][0]) * (&self.coords[d][0] - &self.coords[c][0])
            + (&self.coords[b][1] - &self.coords[a][1])
                * (&self.coords[d][1] - &self.coords[c][1]);
        sign_big(&v)
    }

    /// Lexicographic (x, then y) comparison of lattice points.
    pub fn cmp_xy(&self, a: usize, b: usize) -> Ordering {
        if let Some(s) = &self.small {
            return s[a].cmp(&s[b]);
        }
        self.coords[a].cmp(&self.coords[b])
    }

    /// Compare the y coordinates of two lattice points.
    pub fn cmp_y(&self, a: usize, b: usize) -> Ordering {
        if let Some(s) = &self.small {
            return s[a][1].cmp(&s[b][1]);
        }
        self.coords[a][1].cmp(&self.coords[b][1])
    }

    /// True iff point `p` lies strictly inside the open segment `(a, b)`.
    pub fn on_open_segment(&self, p: usize, a: usize, b: usize) -> bool {
        if self.orient(a, b, p) != 0 {
            return false;
        }
        let between = |ca: Ordering, cb: Ordering| {
            (ca == Ordering::Less && cb == Ordering::Greater)
                || (ca == Ordering::Greater && cb == Ordering::Less)
        };
        if let Some(s) = &self.small {
            return between(s[a][0].cmp(&s[p][0]), s[b][0].cmp(&s[p][0]))
                || between(s[a][1].cmp(&s[p][1]), s[b][1].cmp(&s[p][1]));
        }
        between(
            self.coords[a][0].cmp(&self.coords[p][0]),
            self.coords[b][0].cmp(&self.coords[p][0]),
        ) || between(
            self.coords[a][1].cmp(&self.coords[p][1]),
            self.coords[b][1].cmp(&self.coords[p][1]),
        )
    }

    /// Open-segment intersection by point index; see
    /// [`segments_properly_intersect`] for the semantics.
    pub fn segments_intersect(&self, a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
        let o1 = self.orient(b1, b2, a1);
        let o2 = self.orient(b1, b2, a2);
        let o3 = self.orient(a1, a2, b1);
        let o4 = self.orient(a1, a2, b2);
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return true;
        }
        if o1 == 0 && self.on_open_segment(a1, b1, b2) {
            return true;
        }
        if o2 == 0 && self.on_open_segment(a2, b1, b2) {
            return true;
        }
        if o3 == 0 && self.on_open_segment(b1, a1, a2) {
            return true;
        }
        if o4 == 0 && self.on_open_segment(b2, a1, a2) {
            return true;
        }
        if o1 == 0 && o2 == 0 && o3 == 0 {
            let same = (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
            if same {
                return true;
            }
        }
        false
    }

    /// Twice the signed area of the closed walk `verts` (shoelace sum).
    pub fn walk_area2(&self, verts: &[usize]) -> BigInt {
        if let Some(s) = &self.small {
            let mut acc: i128 = 0;
            for i in 0..verts.len() {
                let a = s[verts[i]];
                let b = s[verts[(i + 1) % verts.len()]];
                acc += a[0] as i128 * b[1] as i128 - b[0] as i128 * a[1] as i128;
            }
            return BigInt::from(acc);
        }
        let mut acc = BigInt::zero();
        for i in 0..verts.len() {
            let a = &self.coords[verts[i]];
            let b = &self.coords[verts[(i + 1) % verts.len()]];
            acc += &a[0] * &b[1] - &b[0] * &a[1];
        }
        acc
    }

    /// Parity-based strict containment of point `p` in the closed walk
    /// `verts`. Edges traversed twice (bridges) cancel out. The caller must
    /// ensure `p` does not lie on the walk itself.
    pub fn strictly_inside_walk(&self, p: usize, verts: &[usize]) -> bool {
        let mut inside = false;
        for i in 0..verts.len() {
            let a = verts[i];
            let b = verts[(i + 1) % verts.len()];
            let ya = self.cmp_y(a, p);
            let yb = self.cmp_y(b, p);
            // Half-open rule: the edge spans the horizontal line through p.
            if (ya == Ordering::Greater) != (yb == Ordering::Greater) {
                // Crossing is to the right of p iff orientation of (a, b, p)
                // matches the edge's downward/upward direction.
                let o = self.orient(a, b, p);
                if yb == Ordering::Greater {
                    // upward edge: p strictly left of (a, b)
                    if o > 0 {
                        inside = !inside;
                    }
                } else if o < 0 {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

fn sign_big(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// A validated planar point set: pairwise distinct points, no three
/// collinear. Points are identified by their index.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Point>,
    lattice: Lattice,
}

impl PointSet {
    /// Validate and build a point set. Rejects duplicate points and
    /// collinear triples (general position is assumed throughout).
    pub fn new(points: Vec<Point>) -> Result<PointSet, Error> {
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoints(i, j));
                }
            }
        }
        let ps = PointSet::new_unchecked(points);
        if let Some((i, j, k)) = ps.find_collinear_triple() {
            return Err(Error::CollinearPoints(i, j, k));
        }
        Ok(ps)
    }

    /// Build without validation. For internal use where validity is
    /// preserved by construction (e.g. translation of a validated set).
    pub(crate) fn new_unchecked(points: Vec<Point>) -> PointSet {
        let lattice = Lattice::build(&points);
        PointSet { points, lattice }
    }

    fn find_collinear_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if self.lattice.orient(i, j, k) == 0 {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Exact squared distance between points `i` and `j`.
    pub fn sq_dist(&self, i: usize, j: usize) -> Rat {
        squared_distance(&self.points[i], &self.points[j])
    }

    /// Closest pair `(i, j, squared distance)` with `i < j`; ties broken by
    /// lexicographic index pair. Plain quadratic scan.
    pub fn closest_pair(&self) -> Result<(usize, usize, Rat), Error> {
        if self.len() < 2 {
            return Err(Error::DegenerateInput("closest pair needs two points"));
        }
        let mut best: Option<(usize, usize, Rat)> = None;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let d = self.sq_dist(i, j);
                match &best {
                    Some((_, _, b)) if *b <= d => {}
                    _ => best = Some((i, j, d)),
                }
            }
        }
        Ok(best.unwrap())
    }

    /// Maximum pairwise squared distance.
    pub fn diameter_sq(&self) -> Result<Rat, Error> {
        if self.len() < 2 {
            return Err(Error::DegenerateInput("diameter needs two points"));
        }
        let mut best = Rat::zero();
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                let d = self.sq_dist(i, j);
                if d > best {
                    best = d;
                }
            }
        }
        Ok(best)
    }

    /// Counter-clockwise convex hull as point indices, starting from the
    /// lexicographically smallest point. Requires at least three points.
    pub fn convex_hull(&self) -> Result<Vec<usize>, Error> {
        let n = self.len();
        if n < 3 {
            return Err(Error::DegenerateInput("convex hull needs three points"));
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| self.lattice.cmp_xy(a, b));

        // Andrew's monotone chain; general position means no collinear
        // triples ever appear on the hull boundary.
        let mut lower: Vec<usize> = Vec::new();
        for &p in &idx {
            while lower.len() >= 2
                && self
                    .lattice
                    .orient(lower[lower.len() - 2], lower[lower.len() - 1], p)
                    <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<usize> = Vec::new();
        for &p in idx.iter().rev() {
            while upper.len() >= 2
                && self
                    .lattice
                    .orient(upper[upper.len() - 2], upper[upper.len() - 1], p)
                    <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(lower)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_basic_turns() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(1, 1)), Turn::Left);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(1, -1)), Turn::Right);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Turn::Collinear);
    }

    #[test]
    fn segment_intersection_cases() {
        // crossing at (1,1)
        assert!(segments_properly_intersect(
            &p(0, 0),
            &p(2, 2),
            &p(0, 2),
            &p(2, 0)
        ));
        // parallel disjoint
        assert!(!segments_properly_intersect(
            &p(0, 0),
            &p(1, 0),
            &p(0, 1),
            &p(1, 1)
        ));
        // shared endpoint only
        assert!(!segments_properly_intersect(
            &p(0, 0),
            &p(2, 0),
            &p(2, 0),
            &p(3, 1)
        ));
        // endpoint strictly inside the other segment
        assert!(segments_properly_intersect(
            &p(0, 0),
            &p(4, 0),
            &p(2, 0),
            &p(2, 3)
        ));
        // collinear with open overlap
        assert!(segments_properly_intersect(
            &p(0, 0),
            &p(3, 0),
            &p(1, 0),
            &p(4, 0)
        ));
        // identical segments
        assert!(segments_properly_intersect(
            &p(0, 0),
            &p(3, 0),
            &p(0, 0),
            &p(3, 0)
        ));
        // collinear but disjoint
        assert!(!segments_properly_intersect(
            &p(0, 0),
            &p(1, 0),
            &p(2, 0),
            &p(3, 0)
        ));
    }

    #[test]
    fn point_on_open_segment_cases() {
        assert!(point_on_open_segment(&p(1, 1), &p(0, 0), &p(2, 2)));
        assert!(!point_on_open_segment(&p(0, 0), &p(0, 0), &p(2, 2)));
        assert!(!point_on_open_segment(&p(1, 0), &p(0, 0), &p(2, 2)));
    }

    #[test]
    fn squared_distance_values() {
        assert_eq!(squared_distance(&p(0, 0), &p(3, 4)), rat_int(25));
        assert_eq!(squared_distance(&p(1, 1), &p(1, 1)), rat_int(0));
        let half = Point::new(rat(1, 2), rat_int(0));
        assert_eq!(squared_distance(&p(0, 0), &half), rat(1, 4));
    }

    #[test]
    fn point_set_validation() {
        assert!(PointSet::new(vec![p(0, 0), p(1, 0), p(0, 1)]).is_ok());
        let dup = PointSet::new(vec![p(0, 0), p(1, 1), p(0, 0)]);
        assert!(matches!(dup, Err(Error::DuplicatePoints(0, 2))));
        let col = PointSet::new(vec![p(0, 0), p(1, 1), p(2, 2), p(0, 5)]);
        assert!(matches!(col, Err(Error::CollinearPoints(0, 1, 2))));
    }

    #[test]
    fn hull_square_with_center() {
        let ps = PointSet::new(vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)]).unwrap();
        let hull = ps.convex_hull().unwrap();
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&4));
        // counter-clockwise: every consecutive triple turns left
        for i in 0..hull.len() {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            let c = hull[(i + 2) % hull.len()];
            assert_eq!(ps.lattice().orient(a, b, c), 1);
        }
    }

    #[test]
    fn hull_triangle_all_on_hull() {
        let ps = PointSet::new(vec![p(0, 0), p(3, 0), p(0, 3)]).unwrap();
        assert_eq!(ps.convex_hull().unwrap().len(), 3);
    }

    #[test]
    fn hull_of_seven_point_fixture_matches_extreme_point_scan() {
        // Fixture chosen with exactly 5 extreme points.
        let pts = vec![
            p(0, 0),
            p(10, 1),
            p(13, 7),
            p(6, 13),
            p(-2, 8),
            p(5, 6),
            p(8, 4),
        ];
        let ps = PointSet::new(pts).unwrap();
        let hull = ps.convex_hull().unwrap();

        // Independent oracle: a point is extreme iff it is not strictly
        // inside the hull of the others, tested by an exhaustive
        // half-plane check over all directed point pairs.
        let mut extreme = Vec::new();
        for i in 0..ps.len() {
            let mut is_extreme = false;
            for a in 0..ps.len() {
                for b in 0..ps.len() {
                    if a == b || a == i || b == i {
                        continue;
                    }
                    // all other points strictly on the left of (a,b),
                    // with i on the line or right side -> i extreme via edge
                    let mut all_left = true;
                    for k in 0..ps.len() {
                        if k == a || k == b || k == i {
                            continue;
                        }
                        if ps.lattice().orient(a, b, k) <= 0 {
                            all_left = false;
                            break;
                        }
                    }
                    if all_left && ps.lattice().orient(a, b, i) <= 0 {
                        is_extreme = true;
                    }
                }
            }
            if is_extreme {
                extreme.push(i);
            }
        }
        assert_eq!(extreme.len(), 5);
        let mut sorted_hull = hull.clone();
        sorted_hull.sort_unstable();
        assert_eq!(sorted_hull, extreme);
    }

    #[test]
    fn hull_rejects_degenerate() {
        let ps = PointSet::new(vec![p(0, 0), p(1, 0)]).unwrap();
        assert!(matches!(ps.convex_hull(), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn closest_pair_examples() {
        let ps = PointSet::new(vec![p(0, 0), p(1, 0), p(5, 5)]).unwrap();
        assert_eq!(ps.closest_pair().unwrap(), (0, 1, rat_int(1)));
        let ps = PointSet::new(vec![p(0, 0), p(0, 3), p(4, 0)]).unwrap();
        assert_eq!(ps.closest_pair().unwrap(), (0, 1, rat_int(9)));
    }

    #[test]
    fn closest_pair_and_diameter_match_exhaustive_scan() {
        let pts = vec![
            p(3, 7),
            p(-2, 4),
            p(9, 0),
            p(5, 5),
            p(1, 1),
            p(8, 7),
            p(0, 9),
            p(12, 3),
            p(6, 10),
            p(4, 2),
        ];
        let ps = PointSet::new(pts).unwrap();
        let (bi, bj, bd) = ps.closest_pair().unwrap();
        let diam = ps.diameter_sq().unwrap();
        let mut min_d: Option<Rat> = None;
        let mut max_d = Rat::zero();
        for i in 0..ps.len() {
            for j in (i + 1)..ps.len() {
                let d = ps.sq_dist(i, j);
                if min_d.as_ref().map_or(true, |m| d < *m) {
                    min_d = Some(d.clone());
                }
                if d > max_d {
                    max_d = d;
                }
            }
        }
        assert_eq!(bd, min_d.unwrap());
        assert_eq!(ps.sq_dist(bi, bj), bd);
        assert_eq!(diam, max_d);
    }

    #[test]
    fn diameter_examples() {
        let ps = PointSet::new(vec![p(0, 0), p(3, 4)]).unwrap();
        assert_eq!(ps.diameter_sq().unwrap(), rat_int(25));
        let ps = PointSet::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        assert_eq!(ps.diameter_sq().unwrap(), rat_int(2));
    }

    #[test]
    fn lattice_agrees_with_rational_predicates() {
        let pts = vec![
            Point::new(rat(1, 3), rat(2, 7)),
            Point::new(rat(-5, 2), rat(1, 2)),
            Point::new(rat(4, 1), rat(-3, 5)),
            Point::new(rat(0, 1), rat(0, 1)),
        ];
        let ps = PointSet::new(pts.clone()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let t = orientation(&pts[i], &pts[j], &pts[k]);
                    let s = ps.lattice().orient(i, j, k);
                    let expect = match t {
                        Turn::Left => 1,
                        Turn::Right => -1,
                        Turn::Collinear => 0,
                    };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
