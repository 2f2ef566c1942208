//! Independent ground truth for desk-scale ratio measurement: exhaustive
//! exact (q-)MWT, a convex-polygon interval DP used to cross-check the
//! enumeration, and the classical greedy triangulation baseline.
//!
//! Everything here is built directly on the exact geometry primitives and
//! shares no construction logic with the main grid pipeline.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::geom::{PointSet, Rat};
use crate::qnorm::{CostExponent, QWeight};
use crate::Error;

/// Hard cap on the exhaustive oracle's input size.
pub const ORACLE_CAP: usize = 10;

/// An oracle triangulation: lexicographically sorted edge list plus its
/// q-weight.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub edges: Vec<(usize, usize)>,
    pub weight: QWeight,
}

/// Candidate segments (in general position: every pair), their crossing
/// masks, and the target edge count `3n - 3 - h`.
struct Candidates {
    pairs: Vec<(usize, usize)>,
    sq: Vec<Rat>,
    sq_f64: Vec<f64>,
    /// cross[i] has bit j set iff candidates i and j properly intersect.
    cross: Vec<u128>,
    target: usize,
    hull_mask: u128,
}

fn build_candidates(ps: &PointSet) -> Result<Candidates, Error> {
    let n = ps.len();
    if n < 3 {
        return Err(Error::DegenerateInput("oracle needs three points"));
    }
    if n > ORACLE_CAP {
        return Err(Error::OracleScaleExceeded(n, ORACLE_CAP));
    }
    let hull = ps.convex_hull()?;
    let target = 3 * n - 3 - hull.len();

    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let m = pairs.len();
    assert!(m <= 128, "candidate mask width exceeded");
    let lat = ps.lattice();
    let mut cross = vec![0u128; m];
    for a in 0..m {
        for b in (a + 1)..m {
            let (u1, v1) = pairs[a];
            let (u2, v2) = pairs[b];
            if lat.segments_intersect(u1, v1, u2, v2) {
                cross[a] |= 1 << b;
                cross[b] |= 1 << a;
            }
        }
    }
    let mut hull_mask = 0u128;
    for k in 0..hull.len() {
        let e = crate::pslg::key(hull[k], hull[(k + 1) % hull.len()]);
        let idx = pairs.binary_search(&e).expect("hull edge is a candidate");
        hull_mask |= 1 << idx;
    }
    let sq: Vec<Rat> = pairs.iter().map(|&(u, v)| ps.sq_dist(u, v)).collect();
    let sq_f64 = sq.iter().map(|r| r.to_f64().unwrap_or(f64::MAX)).collect();
    Ok(Candidates { pairs, sq, sq_f64, cross, target, hull_mask })
}

fn term_f64(q: CostExponent, sq: f64) -> f64 {
    match q {
        CostExponent::Infinity => sq,
        CostExponent::Finite(qe) => sq.powf(qe as f64 / 2.0),
    }
}

/// Canonical lexicographic DFS over non-crossing edge subsets. Branches
/// are cut when the compatible suffix cannot reach the target count or
/// when the partial weight exceeds the pruning bound. The bound always
/// carries a wide relative margin so floating-point error cannot cut the
/// true optimum.
struct Dfs<'a, F: FnMut(u128, f64) -> f64> {
    c: &'a Candidates,
    suffix: Vec<u128>,
    q: CostExponent,
    /// f64 pruning bound, updated from the emit callback's return value.
    bound: f64,
    emit: F,
}

impl<'a, F: FnMut(u128, f64) -> f64> Dfs<'a, F> {
    fn run(&mut self) {
        let hull = self.c.hull_mask;
        let count = hull.count_ones() as usize;
        let mut partial = 0.0;
        let mut m = hull;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            partial = combine(self.q, partial, term_f64(self.q, self.c.sq_f64[i]));
            m &= m - 1;
        }
        self.step(0, hull, count, 0, partial);
    }

    fn step(&mut self, i: usize, chosen: u128, count: usize, conflict: u128, partial: f64) {
        if count == self.c.target {
            self.bound = (self.emit)(chosen, partial);
            return;
        }
        if i >= self.c.pairs.len() {
            return;
        }
        let usable = self.suffix[i] & !conflict & !chosen;
        if count + (usable.count_ones() as usize) < self.c.target {
            return;
        }
        if partial > self.bound {
            return;
        }
        let bit = 1u128 << i;
        if chosen & bit != 0 {
            self.step(i + 1, chosen, count, conflict, partial);
            return;
        }
        if conflict & bit == 0 {
            let p2 = combine(self.q, partial, term_f64(self.q, self.c.sq_f64[i]));
            self.step(i + 1, chosen | bit, count + 1, conflict | self.c.cross[i], p2);
        }
        self.step(i + 1, chosen, count, conflict, partial);
    }
}

fn suffix_masks(m: usize) -> Vec<u128> {
    let mut suffix = vec![0u128; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] | (1 << i);
    }
    suffix
}

fn combine(q: CostExponent, acc: f64, term: f64) -> f64 {
    match q {
        CostExponent::Infinity => acc.max(term),
        CostExponent::Finite(_) => acc + term,
    }
}

fn weight_terms(c: &Candidates, mask: u128) -> Vec<Rat> {
    let mut terms = Vec::with_capacity(c.target);
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        terms.push(c.sq[i].clone());
        m &= m - 1;
    }
    terms
}

fn edges_of_mask(c: &Candidates, mask: u128) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(c.target);
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        edges.push(c.pairs[i]);
        m &= m - 1;
    }
    edges
}

/// Compare two weights: cheap f64 separation first, certified interval
/// comparison when the estimates are too close to call.
fn compare_weights(q: CostExponent, a: &[Rat], fa: f64, b: &[Rat], fb: f64) -> Ordering {
    let scale = fa.abs().max(fb.abs()).max(1.0);
    if (fa - fb).abs() > 1e-9 * scale {
        return if fa < fb { Ordering::Less } else { Ordering::Greater };
    }
    QWeight::new(q, a.to_vec()).compare(&QWeight::new(q, b.to_vec()))
}

/// Exhaustive exact q-MWT for `n <= 10`: canonical DFS over non-crossing
/// edge subsets with count and weight pruning, returning a minimizer of
/// the q-weight (ties broken by lexicographic edge list).
pub fn exact_mwt(ps: &PointSet, q: CostExponent) -> Result<OracleResult, Error> {
    let c = build_candidates(ps)?;
    let suffix = suffix_masks(c.pairs.len());
    let mut best: Option<(u128, Vec<Rat>, f64)> = None;
    {
        let cref = &c;
        let mut dfs = Dfs {
            c: cref,
            suffix,
            q,
            bound: f64::INFINITY,
            emit: |mask: u128, f: f64| {
                let terms = weight_terms(cref, mask);
                let replace = match &best {
                    None => true,
                    Some((bmask, bterms, bf)) => {
                        match compare_weights(q, &terms, f, bterms, *bf) {
                            Ordering::Less => true,
                            Ordering::Equal => {
                                edges_of_mask(cref, mask) < edges_of_mask(cref, *bmask)
                            }
                            Ordering::Greater => false,
                        }
                    }
                };
                if replace {
                    best = Some((mask, terms, f));
                }
                // pruning bound: incumbent value with a wide safety margin
                let bf = best.as_ref().unwrap().2;
                bf + 1e-6 * bf.abs().max(1.0)
            },
        };
        dfs.run();
    }
    let (mask, terms, _) = best.expect("a general-position point set has a triangulation");
    Ok(OracleResult {
        edges: edges_of_mask(&c, mask),
        weight: QWeight::new(q, terms),
    })
}

/// Number of distinct triangulations (diagnostics and test helper).
pub fn count_triangulations(ps: &PointSet) -> Result<u64, Error> {
    let c = build_candidates(ps)?;
    let suffix = suffix_masks(c.pairs.len());
    let mut count = 0u64;
    let mut dfs = Dfs {
        c: &c,
        suffix,
        q: CostExponent::Finite(1),
        bound: f64::INFINITY,
        emit: |_, _| {
            count += 1;
            f64::INFINITY
        },
    };
    dfs.run();
    Ok(count)
}

/// All triangulations as sorted edge lists (test helper; respects the cap).
pub fn all_triangulations(ps: &PointSet) -> Result<Vec<Vec<(usize, usize)>>, Error> {
    let c = build_candidates(ps)?;
    let suffix = suffix_masks(c.pairs.len());
    let mut out = Vec::new();
    {
        let mut dfs = Dfs {
            c: &c,
            suffix,
            q: CostExponent::Finite(1),
            bound: f64::INFINITY,
            emit: |mask, _| {
                out.push(mask);
                f64::INFINITY
            },
        };
        dfs.run();
    }
    Ok(out.into_iter().map(|m| edges_of_mask(&c, m)).collect())
}

/// Classic interval DP for the optimal triangulation of a convex polygon
/// given in strictly convex counter-clockwise order. Serves as an oracle
/// for the exhaustive oracle.
pub fn convex_polygon_dp(ps: &PointSet, q: CostExponent) -> Result<OracleResult, Error> {
    let n = ps.len();
    if n < 3 {
        return Err(Error::DegenerateInput("polygon DP needs three points"));
    }
    let lat = ps.lattice();
    for i in 0..n {
        if lat.orient(i, (i + 1) % n, (i + 2) % n) <= 0 {
            return Err(Error::NonConvexInput);
        }
    }

    // dp[i][j]: minimal diagonal terms for the sub-polygon i..=j, with the
    // chosen split vertex for reconstruction. Diagonals (i,k) and (k,j)
    // contribute only when they are not polygon sides.
    let mut dp: Vec<Vec<Option<(Vec<Rat>, f64, usize)>>> = vec![vec![None; n]; n];
    for i in 0..n - 1 {
        dp[i][i + 1] = Some((Vec::new(), 0.0, usize::MAX));
    }
    for span in 2..n {
        for i in 0..(n - span) {
            let j = i + span;
            let mut best: Option<(Vec<Rat>, f64, usize)> = None;
            for k in (i + 1)..j {
                let (lt, lf, _) = dp[i][k].as_ref().unwrap();
                let (rt, rf, _) = dp[k][j].as_ref().unwrap();
                let mut terms = lt.clone();
                terms.extend(rt.iter().cloned());
                let mut f = combine(q, *lf, *rf);
                if matches!(q, CostExponent::Finite(_)) {
                    f = lf + rf;
                }
                if k > i + 1 {
                    let s = ps.sq_dist(i, k);
                    f = combine(q, f, term_f64(q, s.to_f64().unwrap_or(f64::MAX)));
                    terms.push(s);
                }
                if j > k + 1 {
                    let s = ps.sq_dist(k, j);
                    f = combine(q, f, term_f64(q, s.to_f64().unwrap_or(f64::MAX)));
                    terms.push(s);
                }
                let better = match &best {
                    None => true,
                    Some((bt, bf, _)) => compare_weights(q, &terms, f, bt, *bf) == Ordering::Less,
                };
                if better {
                    best = Some((terms, f, k));
                }
            }
            dp[i][j] = best;
        }
    }

    let mut edges: Vec<(usize, usize)> =
        (0..n).map(|i| crate::pslg::key(i, (i + 1) % n)).collect();
    let mut stack = vec![(0usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j <= i + 1 {
            continue;
        }
        let k = dp[i][j].as_ref().unwrap().2;
        if k > i + 1 {
            edges.push((i, k));
        }
        if j > k + 1 {
            edges.push((k, j));
        }
        stack.push((i, k));
        stack.push((k, j));
    }
    edges.sort_unstable();
    let terms: Vec<Rat> = edges.iter().map(|&(u, v)| ps.sq_dist(u, v)).collect();
    Ok(OracleResult { edges, weight: QWeight::new(q, terms) })
}

/// Classical greedy triangulation: insert all pairs in increasing length
/// order (ties lexicographic) whenever the segment crosses nothing chosen
/// so far.
pub fn greedy_triangulation(ps: &PointSet) -> Result<Vec<(usize, usize)>, Error> {
    let n = ps.len();
    if n < 3 {
        return Err(Error::DegenerateInput("greedy needs three points"));
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((ps.sq_dist(i, j), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| (a.1, a.2).cmp(&(b.1, b.2))));
    let lat = ps.lattice();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (_, u, v) in pairs {
        if chosen
            .iter()
            .all(|&(a, b)| !lat.segments_intersect(u, v, a, b))
        {
            chosen.push((u, v));
        }
    }
    chosen.sort_unstable();
    let hull = ps.convex_hull()?;
    debug_assert_eq!(chosen.len(), 3 * n - 3 - hull.len());
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Point};
    use crate::pslg::Pslg;
    use std::sync::Arc;

    fn pset(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn q1() -> CostExponent {
        CostExponent::Finite(1)
    }

    #[test]
    fn unit_square_weight_is_four_plus_sqrt_two() {
        let ps = pset(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let r = exact_mwt(&ps, q1()).unwrap();
        assert_eq!(r.edges.len(), 5);
        let w = r.weight.to_f64();
        assert!((w - (4.0 + 2f64.sqrt())).abs() < 1e-12, "w = {w}");
        // deterministic tie resolution: lexicographically smaller diagonal
        assert!(r.edges.contains(&(0, 2)));
    }

    #[test]
    fn triangle_with_interior_point_is_forced() {
        let ps = pset(&[(0, 0), (10, 0), (5, 9), (5, 3)]);
        let r = exact_mwt(&ps, q1()).unwrap();
        assert_eq!(r.edges.len(), 6);
        for e in [(0, 3), (1, 3), (2, 3)] {
            assert!(r.edges.contains(&e));
        }
        assert_eq!(count_triangulations(&ps).unwrap(), 1);
    }

    #[test]
    fn oracle_output_is_a_triangulation() {
        let ps = pset(&[(0, 0), (9, 1), (4, 8), (3, 3), (7, 5), (1, 6)]);
        let r = exact_mwt(&ps, q1()).unwrap();
        let arc = Arc::new(ps.clone());
        let mut g = Pslg::new(arc);
        for &(u, v) in &r.edges {
            g.insert_edge(u, v).unwrap();
        }
        let h = ps.convex_hull().unwrap().len();
        assert!(g.is_triangulation(h));
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let coords: Vec<(i64, i64)> = (0..11i64).map(|k| (k * k + 1, 3 * k + (k % 3))).collect();
        let pts: Vec<Point> = coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        if let Ok(ps) = PointSet::new(pts) {
            assert!(matches!(
                exact_mwt(&ps, q1()),
                Err(Error::OracleScaleExceeded(11, ORACLE_CAP))
            ));
        }
    }

    /// Convex-position points on a rational circle via the tangent
    /// half-angle parameterization.
    fn circle_points(ts: &[(i64, i64)]) -> PointSet {
        let pts: Vec<Point> = ts
            .iter()
            .map(|&(tn, td)| {
                let t = rat(tn, td);
                let one = rat(1, 1);
                let denom = &one + &t * &t;
                let x = (&one - &t * &t) / &denom;
                let y = (rat(2, 1) * &t) / denom;
                Point::new(x * rat(100, 1), y * rat(100, 1))
            })
            .collect();
        PointSet::new(pts).unwrap()
    }

    #[test]
    fn dp_matches_exhaustive_on_pentagon() {
        // five points on a circle in CCW order
        let ps = circle_points(&[(-3, 1), (-1, 2), (0, 1), (1, 2), (3, 1)]);
        assert_eq!(count_triangulations(&ps).unwrap(), 5);
        for q in [CostExponent::Finite(1), CostExponent::Finite(2), CostExponent::Infinity] {
            let dp = convex_polygon_dp(&ps, q).unwrap();
            let ex = exact_mwt(&ps, q).unwrap();
            assert_eq!(dp.weight.compare(&ex.weight), Ordering::Equal);
        }
    }

    #[test]
    fn dp_square_matches_exact() {
        let ps = pset(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let dp = convex_polygon_dp(&ps, q1()).unwrap();
        let ex = exact_mwt(&ps, q1()).unwrap();
        assert_eq!(dp.weight.compare(&ex.weight), Ordering::Equal);
    }

    #[test]
    fn dp_triangle_has_no_internal_edges() {
        let ps = pset(&[(0, 0), (4, 0), (1, 3)]);
        let dp = convex_polygon_dp(&ps, q1()).unwrap();
        assert_eq!(dp.edges.len(), 3);
    }

    #[test]
    fn dp_rejects_nonconvex_input() {
        let ps = pset(&[(0, 0), (4, 0), (1, 1), (0, 4)]);
        assert!(matches!(
            convex_polygon_dp(&ps, q1()),
            Err(Error::NonConvexInput)
        ));
    }

    #[test]
    fn greedy_square_picks_lexicographic_diagonal() {
        let ps = pset(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let g = greedy_triangulation(&ps).unwrap();
        assert_eq!(g.len(), 5);
        assert!(g.contains(&(0, 2)));
        assert!(!g.contains(&(1, 3)));
    }

    #[test]
    fn greedy_never_beats_exact() {
        let ps = pset(&[
            (0, 0),
            (13, 2),
            (5, 11),
            (3, 3),
            (9, 6),
            (1, 7),
            (11, 9),
            (6, 1),
            (8, 12),
        ]);
        let greedy = greedy_triangulation(&ps).unwrap();
        let gw = QWeight::new(q1(), greedy.iter().map(|&(u, v)| ps.sq_dist(u, v)).collect());
        let exact = exact_mwt(&ps, q1()).unwrap();
        assert_ne!(exact.weight.compare(&gw), Ordering::Greater);
    }

    #[test]
    fn bottleneck_optimum_minimizes_longest_edge() {
        let ps = pset(&[(0, 0), (9, 1), (4, 8), (3, 3), (7, 5)]);
        let opt = exact_mwt(&ps, CostExponent::Infinity).unwrap();
        let opt_max: Rat = opt
            .edges
            .iter()
            .map(|&(u, v)| ps.sq_dist(u, v))
            .max()
            .unwrap();
        for t in all_triangulations(&ps).unwrap() {
            let m: Rat = t.iter().map(|&(u, v)| ps.sq_dist(u, v)).max().unwrap();
            assert!(opt_max <= m);
        }
    }

    #[test]
    fn exact_mwt_is_deterministic() {
        let ps = pset(&[(0, 0), (9, 1), (4, 8), (3, 3), (7, 5), (1, 6)]);
        let a = exact_mwt(&ps, q1()).unwrap();
        let b = exact_mwt(&ps, q1()).unwrap();
        assert_eq!(a.edges, b.edges);
        // output is sorted lexicographically
        let mut sorted = a.edges.clone();
        sorted.sort_unstable();
        assert_eq!(a.edges, sorted);
    }
}
