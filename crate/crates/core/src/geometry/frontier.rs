//! Pareto frontier of a union of convex polygons.
//!
//! A point is kept iff no other point of the region weakly dominates it with
//! at least one strict coordinate; the returned region is the closure of that
//! set (finitely many boundary points may be re-added so the result stays a
//! closed region). The computation sweeps the northeast boundary chain of
//! every part and subtracts, exactly, the dominance shadows cast by all other
//! chain pieces.

use num_traits::{One, Zero};

use super::{cross, Point2, Polygon};
use crate::rational::Rat;

#[derive(Clone, Debug)]
enum Piece {
    Pt(Point2),
    /// Strictly decreasing segment; `lt` is the left-top endpoint, `rb` the
    /// right-bottom one (`lt.x < rb.x`, `lt.y > rb.y`).
    Seg { lt: Point2, rb: Point2 },
}

/// Northeast chain of one canonical convex polygon: the subset of its boundary
/// that is undominated within the polygon itself.
fn ne_chain(poly: &Polygon) -> Vec<Piece> {
    let vs = poly.vertices();
    match vs.len() {
        1 => vec![Piece::Pt(vs[0].clone())],
        2 => {
            let (a, b) = (&vs[0], &vs[1]);
            // canonical order gives a < b lexicographically
            if a.x == b.x || a.y == b.y {
                // vertical or horizontal: only the max corner survives
                let top = if a.x == b.x {
                    if a.y > b.y { a } else { b }
                } else if a.x > b.x {
                    a
                } else {
                    b
                };
                vec![Piece::Pt(top.clone())]
            } else if a.y > b.y {
                vec![Piece::Seg { lt: a.clone(), rb: b.clone() }]
            } else {
                // increasing segment: upper-right endpoint dominates the rest
                vec![Piece::Pt(b.clone())]
            }
        }
        n => {
            let right = (0..n)
                .max_by(|&i, &j| (&vs[i].x, &vs[i].y).cmp(&(&vs[j].x, &vs[j].y)))
                .unwrap();
            let top = (0..n)
                .max_by(|&i, &j| (&vs[i].y, &vs[i].x).cmp(&(&vs[j].y, &vs[j].x)))
                .unwrap();
            if right == top {
                return vec![Piece::Pt(vs[right].clone())];
            }
            let mut pieces = Vec::new();
            let mut i = right;
            while i != top {
                let j = (i + 1) % n;
                let (p, q) = (&vs[i], &vs[j]);
                debug_assert!(q.x < p.x && q.y > p.y, "northeast chain must decrease");
                pieces.push(Piece::Seg { lt: q.clone(), rb: p.clone() });
                i = j;
            }
            pieces
        }
    }
}

/// Whether `p` lies in the closed dominance shadow of `t`, i.e. some point of
/// `t` weakly dominates it.
fn in_shadow(p: &Point2, t: &Piece) -> bool {
    match t {
        Piece::Pt(q) => p.x <= q.x && p.y <= q.y,
        Piece::Seg { lt, rb } => {
            p.x <= rb.x && p.y <= lt.y && cross(lt, rb, p) <= Rat::zero()
        }
    }
}

/// Whether `p` lies on `t` as a point set.
fn on_piece(p: &Point2, t: &Piece) -> bool {
    match t {
        Piece::Pt(q) => p == q,
        Piece::Seg { lt, rb } => {
            cross(lt, rb, p).is_zero() && lt.x <= p.x && p.x <= rb.x
        }
    }
}

/// Strict-domination test against a piece: dominated iff inside the closed
/// shadow but not on the piece itself (no point of a strictly decreasing
/// piece dominates another point of the same piece).
fn dominated_by(p: &Point2, t: &Piece) -> bool {
    in_shadow(p, t) && !on_piece(p, t)
}

/// Closed interval with endpoint-openness flags, used for exact one-dimensional
/// subtraction along a segment's parameter.
#[derive(Clone, Debug)]
struct Iv {
    lo: Rat,
    lo_closed: bool,
    hi: Rat,
    hi_closed: bool,
}

impl Iv {
    fn closed(lo: Rat, hi: Rat) -> Iv {
        Iv { lo, lo_closed: true, hi, hi_closed: true }
    }

    fn valid(&self) -> bool {
        self.lo < self.hi || (self.lo == self.hi && self.lo_closed && self.hi_closed)
    }
}

fn subtract_iv(kept: Vec<Iv>, r: &Iv) -> Vec<Iv> {
    let mut out = Vec::new();
    for k in kept {
        // disjointness checks honoring openness
        let disjoint = k.hi < r.lo
            || (k.hi == r.lo && !(k.hi_closed && r.lo_closed))
            || r.hi < k.lo
            || (r.hi == k.lo && !(r.hi_closed && k.lo_closed));
        if disjoint {
            out.push(k);
            continue;
        }
        let left = Iv {
            lo: k.lo.clone(),
            lo_closed: k.lo_closed,
            hi: r.lo.clone(),
            hi_closed: !r.lo_closed,
        };
        if left.valid() {
            out.push(left);
        }
        let right = Iv {
            lo: r.hi.clone(),
            lo_closed: !r.hi_closed,
            hi: k.hi.clone(),
            hi_closed: k.hi_closed,
        };
        if right.valid() {
            out.push(right);
        }
    }
    out
}

struct SegCtx {
    p0: Point2,
    p1: Point2,
}

impl SegCtx {
    fn eval(&self, lam: &Rat) -> Point2 {
        Point2::new(
            &self.p0.x + lam * (&self.p1.x - &self.p0.x),
            &self.p0.y + lam * (&self.p1.y - &self.p0.y),
        )
    }

    /// Parameter of a point known to lie on the supporting line.
    fn param(&self, p: &Point2) -> Rat {
        (&p.x - &self.p0.x) / (&self.p1.x - &self.p0.x)
    }

    /// Clips `[lo, hi]` by the constraint `g(lambda) <= 0` where `g` is linear
    /// with `g(0) = g0`, `g(1) = g1`. Returns `None` when empty.
    fn clip_lambda(range: Option<(Rat, Rat)>, g0: Rat, g1: Rat) -> Option<(Rat, Rat)> {
        let (lo, hi) = range?;
        let zero = Rat::zero();
        if g0 <= zero && g1 <= zero {
            return Some((lo, hi));
        }
        if g0 > zero && g1 > zero {
            return None;
        }
        let lam = &g0 / (&g0 - &g1);
        let (nlo, nhi) = if g0 <= zero { (lo, hi.min(lam)) } else { (lo.max(lam), hi) };
        if nlo <= nhi {
            Some((nlo, nhi))
        } else {
            None
        }
    }

    /// Parameter interval of this segment inside the closed shadow of `t`.
    fn shadow_interval(&self, t: &Piece) -> Option<(Rat, Rat)> {
        let full = Some((Rat::zero(), Rat::one()));
        match t {
            Piece::Pt(q) => {
                let r = Self::clip_lambda(full, &self.p0.x - &q.x, &self.p1.x - &q.x)?;
                Self::clip_lambda(Some(r), &self.p0.y - &q.y, &self.p1.y - &q.y)
            }
            Piece::Seg { lt, rb } => {
                let r = Self::clip_lambda(full, &self.p0.x - &rb.x, &self.p1.x - &rb.x)?;
                let r = Self::clip_lambda(Some(r), &self.p0.y - &lt.y, &self.p1.y - &lt.y)?;
                Self::clip_lambda(Some(r), cross(lt, rb, &self.p0), cross(lt, rb, &self.p1))
            }
        }
    }

    /// Parameter interval (possibly a point) where this segment coincides with
    /// `t` as a point set.
    fn overlap_interval(&self, t: &Piece) -> Option<(Rat, Rat)> {
        let d = Point2::new(&self.p1.x - &self.p0.x, &self.p1.y - &self.p0.y);
        match t {
            Piece::Pt(q) => {
                if on_piece(q, &Piece::Seg { lt: self.p0.clone(), rb: self.p1.clone() }) {
                    let lam = self.param(q);
                    if lam >= Rat::zero() && lam <= Rat::one() {
                        return Some((lam.clone(), lam));
                    }
                }
                None
            }
            Piece::Seg { lt, rb } => {
                let col_a = cross(&self.p0, &self.p1, lt).is_zero();
                let col_b = cross(&self.p0, &self.p1, rb).is_zero();
                if col_a && col_b {
                    let (mut la, mut lb) = (self.param(lt), self.param(rb));
                    if la > lb {
                        std::mem::swap(&mut la, &mut lb);
                    }
                    let lo = la.max(Rat::zero());
                    let hi = lb.min(Rat::one());
                    if lo <= hi {
                        return Some((lo, hi));
                    }
                    return None;
                }
                // proper crossing of the two supporting lines
                let dt = Point2::new(&rb.x - &lt.x, &rb.y - &lt.y);
                let denom = &d.x * &dt.y - &d.y * &dt.x;
                if denom.is_zero() {
                    return None;
                }
                let w = Point2::new(&lt.x - &self.p0.x, &lt.y - &self.p0.y);
                let lam = (&w.x * &dt.y - &w.y * &dt.x) / &denom;
                let mu = (&w.x * &d.y - &w.y * &d.x) / &denom;
                let zero = Rat::zero();
                let one = Rat::one();
                if lam >= zero && lam <= one && mu >= zero && mu <= one {
                    return Some((lam.clone(), lam));
                }
                None
            }
        }
    }
}

/// Computes the frontier parts (closure of the strongly undominated subset).
pub fn frontier_of_parts(parts: &[Polygon]) -> Vec<Polygon> {
    let pieces: Vec<Piece> = parts.iter().flat_map(ne_chain).collect();
    let mut points: Vec<Point2> = Vec::new();
    let mut segs: Vec<(Point2, Point2)> = Vec::new();

    for (i, s) in pieces.iter().enumerate() {
        match s {
            Piece::Pt(p) => {
                let dominated =
                    pieces.iter().enumerate().any(|(j, t)| j != i && dominated_by(p, t));
                if !dominated {
                    points.push(p.clone());
                }
            }
            Piece::Seg { lt, rb } => {
                let ctx = SegCtx { p0: lt.clone(), p1: rb.clone() };
                let mut kept = vec![Iv::closed(Rat::zero(), Rat::one())];
                for (j, t) in pieces.iter().enumerate() {
                    if j == i || kept.is_empty() {
                        continue;
                    }
                    let Some((clo, chi)) = ctx.shadow_interval(t) else { continue };
                    let overlap = ctx.overlap_interval(t);
                    for r in removed_intervals(&clo, &chi, overlap.as_ref()) {
                        kept = subtract_iv(kept, &r);
                    }
                }
                for (lo, hi) in close_and_merge(kept) {
                    if lo == hi {
                        points.push(ctx.eval(&lo));
                    } else {
                        segs.push((ctx.eval(&lo), ctx.eval(&hi)));
                    }
                }
            }
        }
    }

    let segs = merge_collinear(segs);
    points.sort();
    points.dedup();
    points.retain(|p| {
        !segs
            .iter()
            .any(|(lt, rb)| on_piece(p, &Piece::Seg { lt: lt.clone(), rb: rb.clone() }))
    });

    let mut out: Vec<Polygon> = Vec::new();
    out.extend(segs.into_iter().map(|(a, b)| Polygon::segment(a, b)));
    out.extend(points.into_iter().map(Polygon::point));
    out.sort();
    out.dedup();
    out
}

/// The closed shadow interval minus the sub-interval that lies on the shadow
/// caster itself (points on the caster are not dominated by it).
fn removed_intervals(clo: &Rat, chi: &Rat, overlap: Option<&(Rat, Rat)>) -> Vec<Iv> {
    match overlap {
        None => vec![Iv::closed(clo.clone(), chi.clone())],
        Some((olo, ohi)) => {
            let olo = olo.clone().max(clo.clone());
            let ohi = ohi.clone().min(chi.clone());
            if olo > ohi {
                return vec![Iv::closed(clo.clone(), chi.clone())];
            }
            let mut out = Vec::new();
            let left = Iv {
                lo: clo.clone(),
                lo_closed: true,
                hi: olo,
                hi_closed: false,
            };
            if left.valid() {
                out.push(left);
            }
            let right = Iv {
                lo: ohi,
                lo_closed: false,
                hi: chi.clone(),
                hi_closed: true,
            };
            if right.valid() {
                out.push(right);
            }
            out
        }
    }
}

/// Takes the closure of kept intervals and merges touching ones.
fn close_and_merge(kept: Vec<Iv>) -> Vec<(Rat, Rat)> {
    let mut ivs: Vec<(Rat, Rat)> = kept.into_iter().map(|iv| (iv.lo, iv.hi)).collect();
    ivs.sort();
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    for (lo, hi) in ivs {
        if let Some(last) = out.last_mut() {
            if lo <= last.1 {
                if hi > last.1 {
                    last.1 = hi;
                }
                continue;
            }
        }
        out.push((lo, hi));
    }
    out
}

/// Merges touching or overlapping segments that share a supporting line.
fn merge_collinear(segs: Vec<(Point2, Point2)>) -> Vec<(Point2, Point2)> {
    // key: the line x + (b/a) y = c/a; a != 0 for strictly decreasing segments
    let mut keyed: Vec<((Rat, Rat), (Point2, Point2))> = segs
        .into_iter()
        .map(|(lt, rb)| {
            let a = &rb.y - &lt.y;
            let b = &lt.x - &rb.x;
            let c = &a * &lt.x + &b * &lt.y;
            ((&b / &a, &c / &a), (lt, rb))
        })
        .collect();
    keyed.sort_by(|x, y| (&x.0, &x.1 .0).cmp(&(&y.0, &y.1 .0)));
    let mut out: Vec<((Rat, Rat), (Point2, Point2))> = Vec::new();
    for (key, (lt, rb)) in keyed {
        if let Some((last_key, (_, last_rb))) = out.last_mut() {
            if *last_key == key && lt.x <= last_rb.x {
                if rb.x > last_rb.x {
                    *last_rb = rb;
                }
                continue;
            }
        }
        out.push((key, (lt, rb)));
    }
    out.into_iter().map(|(_, seg)| seg).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Region;
    use crate::rational::{rat, ratio};

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::new(rat(x), rat(y))
    }

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::from_points(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn chain_of_box_is_corner() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let f = frontier_of_parts(&[sq]);
        assert_eq!(f, vec![Polygon::point(pt(1, 1))]);
    }

    #[test]
    fn horizontal_segment_keeps_right_end() {
        let seg = Polygon::segment(pt(1, 1), pt(3, 1));
        let f = frontier_of_parts(&[seg]);
        assert_eq!(f, vec![Polygon::point(pt(3, 1))]);
    }

    #[test]
    fn decreasing_segment_survives_whole() {
        let seg = Polygon::segment(pt(1, 3), pt(3, 1));
        let f = frontier_of_parts(&[seg.clone()]);
        assert_eq!(f, vec![seg]);
    }

    #[test]
    fn point_shadow_splits_segment_but_closure_rejoins() {
        // a point strictly above the middle of a decreasing segment dominates
        // an inner sub-segment; the closure keeps the outer pieces
        let seg = Polygon::segment(pt(0, 3), pt(3, 0));
        let dot = Polygon::point(pt(2, 2));
        let f = frontier_of_parts(&[seg, dot.clone()]);
        let expect = vec![
            Polygon::segment(pt(0, 3), Point2::new(rat(1), rat(2))),
            Polygon::segment(Point2::new(rat(2), rat(1)), pt(3, 0)),
            dot,
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(f, expect);
    }

    #[test]
    fn overlapping_parts_merge_on_the_frontier() {
        let a = poly(&[(0, 0), (3, 1), (1, 3)]);
        let b = poly(&[(0, 0), (3, 1), (1, 3)]);
        let f = frontier_of_parts(&[a, b]);
        assert_eq!(f, vec![Polygon::segment(pt(3, 1), pt(1, 3))]);
    }

    #[test]
    fn two_triangles_union_frontier() {
        // triangles whose northeast edges cross; both contribute pieces
        let a = poly(&[(0, 0), (4, 0), (0, 4)]);
        let b = poly(&[(0, 0), (3, 3), (0, 1)]);
        let f = Region::from_polys(vec![a, b]).frontier().unwrap();
        // (3,3) dominates the middle of the segment x+y=4 between (1,3) and (3,1)
        let parts = f.polys().unwrap();
        assert!(parts.contains(&Polygon::point(pt(3, 3))));
        assert!(parts
            .iter()
            .any(|p| p.is_segment() && p.vertices()[0] == pt(0, 4)));
        for p in parts {
            for v in p.vertices() {
                // no frontier vertex strictly dominated in both coordinates
                let strictly_dominated = parts.iter().any(|q| {
                    q.vertices().iter().any(|w| w.x > v.x && w.y > v.y)
                });
                assert!(!strictly_dominated, "{v} strictly dominated");
            }
        }
    }

    #[test]
    fn interval_subtraction_respects_openness() {
        let kept = vec![Iv::closed(rat(0), rat(1))];
        let removed = Iv { lo: ratio(1, 4), lo_closed: true, hi: ratio(1, 2), hi_closed: false };
        let kept = subtract_iv(kept, &removed);
        let merged = close_and_merge(kept);
        assert_eq!(merged, vec![(rat(0), ratio(1, 4)), (ratio(1, 2), rat(1))]);
    }
}
