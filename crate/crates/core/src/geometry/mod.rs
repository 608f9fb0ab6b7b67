//! Exact rational 2D region arithmetic.
//!
//! A `Region` is a finite union of closed convex polygons in payoff
//! coordinates (2-player mode) or a finite set of tagged payoff points
//! (point-set mode for 3+ players). Degenerate polygons — segments and single
//! points — are first-class: meet-projection sets are segments. Every
//! operation is exact; there is no floating point anywhere in this module.
//!
//! Polygons are canonical by construction: the vertex list is the convex hull
//! of the defining points, counterclockwise, starting at the lexicographically
//! smallest vertex. Regions are canonical as sorted, deduplicated part lists
//! with parts contained in a single other part absorbed, so `==` on regions
//! decides set equality for the forms produced here.

mod frontier;

pub use frontier::frontier_of_parts;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::outcome::Outcome;
use crate::rational::{fmt_rat, Rat};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Point2 {
        Point2 { x, y }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rat(&self.x), fmt_rat(&self.y))
    }
}

/// Cross product of `a - o` and `b - o`; positive iff `o -> a -> b` turns left.
pub fn cross(o: &Point2, a: &Point2, b: &Point2) -> Rat {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Closed half-plane `{ (x, y) : a*x + b*y <= c }`.
#[derive(Clone, Debug)]
pub struct HalfPlane {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HalfPlane {
    pub fn eval(&self, p: &Point2) -> Rat {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    pub fn holds(&self, p: &Point2) -> bool {
        self.eval(p) <= Rat::zero()
    }

    /// `x <= v`
    pub fn x_at_most(v: Rat) -> HalfPlane {
        HalfPlane { a: Rat::from_integer(1.into()), b: Rat::zero(), c: v }
    }
    /// `x >= v`
    pub fn x_at_least(v: Rat) -> HalfPlane {
        HalfPlane { a: Rat::from_integer((-1).into()), b: Rat::zero(), c: -v }
    }
    /// `y <= v`
    pub fn y_at_most(v: Rat) -> HalfPlane {
        HalfPlane { a: Rat::zero(), b: Rat::from_integer(1.into()), c: v }
    }
    /// `y >= v`
    pub fn y_at_least(v: Rat) -> HalfPlane {
        HalfPlane { a: Rat::zero(), b: Rat::from_integer((-1).into()), c: -v }
    }
}

/// Convex hull, counterclockwise, starting at the lexicographically smallest
/// point. Collinear interior points are dropped; degenerate inputs yield the
/// segment extremes or a single point.
pub fn convex_hull(mut pts: Vec<Point2>) -> Vec<Point2> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rat::zero()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rat::zero()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// Canonical convex polygon; 1 vertex = point, 2 vertices = segment.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polygon {
    verts: Vec<Point2>,
}

impl Polygon {
    /// Canonicalizes arbitrary points into their convex hull. `None` on empty
    /// input.
    pub fn from_points(pts: Vec<Point2>) -> Option<Polygon> {
        let verts = convex_hull(pts);
        if verts.is_empty() {
            None
        } else {
            Some(Polygon { verts })
        }
    }

    pub fn point(p: Point2) -> Polygon {
        Polygon { verts: vec![p] }
    }

    pub fn segment(a: Point2, b: Point2) -> Polygon {
        Polygon::from_points(vec![a, b]).expect("segment endpoints")
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    pub fn is_point(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.verts.len() == 2
    }

    pub fn is_proper(&self) -> bool {
        self.verts.len() >= 3
    }

    /// Half-plane representation; the polygon equals the intersection of the
    /// returned half-planes.
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        match self.verts.len() {
            1 => {
                let p = &self.verts[0];
                vec![
                    HalfPlane::x_at_most(p.x.clone()),
                    HalfPlane::x_at_least(p.x.clone()),
                    HalfPlane::y_at_most(p.y.clone()),
                    HalfPlane::y_at_least(p.y.clone()),
                ]
            }
            2 => {
                let (a, b) = (&self.verts[0], &self.verts[1]);
                let dx = &b.x - &a.x;
                let dy = &b.y - &a.y;
                // the two sides of the supporting line, then the extent bounds
                let line1 = HalfPlane {
                    a: -dy.clone(),
                    b: dx.clone(),
                    c: -&dy * &a.x + &dx * &a.y,
                };
                let line2 = HalfPlane { a: dy.clone(), b: -dx.clone(), c: &dy * &a.x - &dx * &a.y };
                let lo = HalfPlane {
                    a: -dx.clone(),
                    b: -dy.clone(),
                    c: -(&dx * &a.x + &dy * &a.y),
                };
                let hi = HalfPlane { a: dx.clone(), b: dy.clone(), c: &dx * &b.x + &dy * &b.y };
                vec![line1, line2, lo, hi]
            }
            _ => {
                let n = self.verts.len();
                (0..n)
                    .map(|i| {
                        let p = &self.verts[i];
                        let q = &self.verts[(i + 1) % n];
                        let a = &q.y - &p.y;
                        let b = &p.x - &q.x;
                        let c = &a * &p.x + &b * &p.y;
                        HalfPlane { a, b, c }
                    })
                    .collect()
            }
        }
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.halfplanes().iter().all(|hp| hp.holds(p))
    }

    /// True iff every point of `self` lies in `other` (convex containment via
    /// vertex membership).
    pub fn subset_of(&self, other: &Polygon) -> bool {
        self.verts.iter().all(|v| other.contains(v))
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(b"(poly");
        for v in &self.verts {
            out.extend_from_slice(
                format!(" ({} {})", fmt_rat(&v.x), fmt_rat(&v.y)).as_bytes(),
            );
        }
        out.push(b')');
        out
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.verts.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Clips a vertex list (point / segment / convex polygon cycle) by one closed
/// half-plane. The result is the raw vertex set of the clipped body.
pub fn clip(verts: &[Point2], hp: &HalfPlane) -> Vec<Point2> {
    let cross_point = |a: &Point2, b: &Point2| -> Point2 {
        let fa = hp.eval(a);
        let fb = hp.eval(b);
        let t = &fa / (&fa - &fb);
        Point2::new(&a.x + &t * (&b.x - &a.x), &a.y + &t * (&b.y - &a.y))
    };
    match verts.len() {
        0 => Vec::new(),
        1 => {
            if hp.holds(&verts[0]) {
                verts.to_vec()
            } else {
                Vec::new()
            }
        }
        2 => {
            let (a, b) = (&verts[0], &verts[1]);
            match (hp.holds(a), hp.holds(b)) {
                (true, true) => verts.to_vec(),
                (false, false) => Vec::new(),
                (true, false) => vec![a.clone(), cross_point(a, b)],
                (false, true) => vec![cross_point(a, b), b.clone()],
            }
        }
        n => {
            let mut out = Vec::new();
            for i in 0..n {
                let cur = &verts[i];
                let next = &verts[(i + 1) % n];
                let cur_in = hp.holds(cur);
                let next_in = hp.holds(next);
                if cur_in {
                    out.push(cur.clone());
                    if !next_in {
                        out.push(cross_point(cur, next));
                    }
                } else if next_in {
                    out.push(cross_point(cur, next));
                }
            }
            out
        }
    }
}

/// Exact intersection of two convex polygons (degenerate forms included).
pub fn intersect_polygons(p: &Polygon, q: &Polygon) -> Option<Polygon> {
    let mut verts = p.vertices().to_vec();
    for hp in q.halfplanes() {
        verts = clip(&verts, &hp);
        if verts.is_empty() {
            return None;
        }
    }
    Polygon::from_points(verts)
}

/// Clips a polygon by a list of half-planes.
pub fn clip_polygon(p: &Polygon, planes: &[HalfPlane]) -> Option<Polygon> {
    let mut verts = p.vertices().to_vec();
    for hp in planes {
        verts = clip(&verts, hp);
        if verts.is_empty() {
            return None;
        }
    }
    Polygon::from_points(verts)
}

/// A payoff point in n-player point-set mode, optionally tagged with a
/// realizing outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TaggedPoint {
    pub coords: Vec<Rat>,
    pub tag: Option<Outcome>,
}

impl TaggedPoint {
    fn sort_key(&self) -> (Vec<Rat>, Vec<u8>) {
        (
            self.coords.clone(),
            self.tag.as_ref().map(|o| o.canonical_bytes()).unwrap_or_default(),
        )
    }
}

/// Closed set of payoff points: a finite union of convex polygons, or a
/// finite tagged point set. The empty region is representable in both modes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Region {
    Polys(Vec<Polygon>),
    Points(Vec<TaggedPoint>),
}

impl Region {
    pub fn empty() -> Region {
        Region::Polys(Vec::new())
    }

    pub fn empty_points() -> Region {
        Region::Points(Vec::new())
    }

    pub fn from_polys(parts: Vec<Polygon>) -> Region {
        Region::Polys(canonical_parts(parts))
    }

    pub fn from_tagged_points(pts: Vec<TaggedPoint>) -> Region {
        Region::Points(canonical_points(pts))
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Region::Polys(p) => p.is_empty(),
            Region::Points(p) => p.is_empty(),
        }
    }

    pub fn polys(&self) -> Result<&[Polygon]> {
        match self {
            Region::Polys(p) => Ok(p),
            Region::Points(_) => Err(Error::domain("expected polygon-mode region")),
        }
    }

    pub fn points(&self) -> Result<&[TaggedPoint]> {
        match self {
            Region::Points(p) => Ok(p),
            Region::Polys(_) => Err(Error::domain("expected point-set-mode region")),
        }
    }

    /// Exact set intersection.
    pub fn intersect(&self, other: &Region) -> Result<Region> {
        match (self, other) {
            (Region::Polys(a), Region::Polys(b)) => {
                let mut parts = Vec::new();
                for p in a {
                    for q in b {
                        if let Some(r) = intersect_polygons(p, q) {
                            parts.push(r);
                        }
                    }
                }
                Ok(Region::from_polys(parts))
            }
            (Region::Points(a), Region::Points(b)) => {
                let mut out = Vec::new();
                for p in a {
                    for q in b {
                        if p.coords == q.coords {
                            let tag = match (&p.tag, &q.tag) {
                                (Some(x), Some(y)) => Some(x.clone().min(y.clone())),
                                (Some(x), None) | (None, Some(x)) => Some(x.clone()),
                                (None, None) => None,
                            };
                            out.push(TaggedPoint { coords: p.coords.clone(), tag });
                        }
                    }
                }
                Ok(Region::from_tagged_points(out))
            }
            _ => Err(Error::domain("region mode mismatch in intersect")),
        }
    }

    /// Set union: part concatenation with canonicalization and absorption of
    /// parts contained in a single other part. No polygon merging is
    /// performed; the semantics are set union.
    pub fn union(&self, other: &Region) -> Result<Region> {
        match (self, other) {
            (Region::Polys(a), Region::Polys(b)) => {
                let mut parts = a.clone();
                parts.extend(b.iter().cloned());
                Ok(Region::from_polys(parts))
            }
            (Region::Points(a), Region::Points(b)) => {
                let mut pts = a.clone();
                pts.extend(b.iter().cloned());
                Ok(Region::from_tagged_points(pts))
            }
            _ => Err(Error::domain("region mode mismatch in union")),
        }
    }

    /// Exact membership, boundary inclusive. `coords` must be 2-dimensional in
    /// polygon mode.
    pub fn contains(&self, coords: &[Rat]) -> bool {
        match self {
            Region::Polys(parts) => {
                if coords.len() != 2 {
                    return false;
                }
                let p = Point2::new(coords[0].clone(), coords[1].clone());
                parts.iter().any(|part| part.contains(&p))
            }
            Region::Points(pts) => pts.iter().any(|tp| tp.coords == coords),
        }
    }

    /// The closure of the strongly Pareto-undominated subset of the region.
    pub fn frontier(&self) -> Result<Region> {
        if self.is_empty() {
            return Err(Error::domain("frontier of empty region"));
        }
        match self {
            Region::Polys(parts) => Ok(Region::Polys(frontier_of_parts(parts))),
            Region::Points(pts) => {
                let kept: Vec<TaggedPoint> = pts
                    .iter()
                    .filter(|p| {
                        !pts.iter().any(|q| {
                            q.coords != p.coords
                                && q.coords.iter().zip(&p.coords).all(|(a, b)| a >= b)
                        })
                    })
                    .cloned()
                    .collect();
                Ok(Region::from_tagged_points(kept))
            }
        }
    }

    /// Exact subset test: every point of `self` lies in `other`.
    pub fn subset_of(&self, other: &Region) -> Result<bool> {
        match (self, other) {
            (Region::Polys(a), Region::Polys(_)) => {
                for part in a {
                    if !part_in_union(part, other)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Region::Points(a), Region::Points(b)) => {
                Ok(a.iter().all(|p| b.iter().any(|q| q.coords == p.coords)))
            }
            _ => Err(Error::domain("region mode mismatch in subset test")),
        }
    }

    /// All part vertices (polygon mode).
    pub fn vertices(&self) -> Result<Vec<Point2>> {
        let mut out = Vec::new();
        for part in self.polys()? {
            out.extend(part.vertices().iter().cloned());
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn canonical_parts(mut parts: Vec<Polygon>) -> Vec<Polygon> {
    parts.sort();
    parts.dedup();
    let keep: Vec<bool> = (0..parts.len())
        .map(|i| {
            !parts
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && parts[i] != *q && parts[i].subset_of(q))
        })
        .collect();
    parts
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect()
}

fn canonical_points(mut pts: Vec<TaggedPoint>) -> Vec<TaggedPoint> {
    pts.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    pts.dedup_by(|a, b| a.coords == b.coords);
    pts
}

/// Whether a convex part lies inside a union of parts. Points and segments are
/// decided by membership and interval covering; proper polygons by exact
/// convex-difference decomposition against the union's proper parts.
fn part_in_union(part: &Polygon, region: &Region) -> Result<bool> {
    let parts = region.polys()?;
    match part.vertices().len() {
        1 => {
            let v = &part.vertices()[0];
            Ok(parts.iter().any(|q| q.contains(v)))
        }
        2 => {
            let a = part.vertices()[0].clone();
            let b = part.vertices()[1].clone();
            let mut intervals: Vec<(Rat, Rat)> = Vec::new();
            for q in parts {
                if let Some(piece) = intersect_polygons(part, q) {
                    let lam = |p: &Point2| segment_param(&a, &b, p);
                    let vs = piece.vertices();
                    let (lo, hi) = match vs.len() {
                        1 => (lam(&vs[0]), lam(&vs[0])),
                        2 => {
                            let (l0, l1) = (lam(&vs[0]), lam(&vs[1]));
                            if l0 <= l1 {
                                (l0, l1)
                            } else {
                                (l1, l0)
                            }
                        }
                        _ => return Err(Error::internal("segment intersection grew dimensions")),
                    };
                    intervals.push((lo, hi));
                }
            }
            intervals.sort();
            let mut covered = Rat::zero();
            let one = Rat::from_integer(1.into());
            for (lo, hi) in intervals {
                if lo > covered {
                    return Ok(false);
                }
                if hi > covered {
                    covered = hi;
                }
                if covered >= one {
                    return Ok(true);
                }
            }
            Ok(covered >= one)
        }
        _ => {
            let mut pieces = vec![part.clone()];
            for q in parts.iter().filter(|q| q.is_proper()) {
                let mut next = Vec::new();
                for piece in pieces {
                    next.extend(convex_difference(&piece, q));
                }
                pieces = next;
            }
            Ok(pieces.iter().all(|p| !p.is_proper()))
        }
    }
}

/// Parameter of `p` along segment `a -> b` (assumes `p` on the segment line).
fn segment_param(a: &Point2, b: &Point2, p: &Point2) -> Rat {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let num = (&p.x - &a.x) * &dx + (&p.y - &a.y) * &dy;
    let den = &dx * &dx + &dy * &dy;
    num / den
}

/// `piece \ q` decomposed into convex polygons (up to one per edge of `q`).
/// Degenerate slivers may appear on boundaries; callers test for proper area.
fn convex_difference(piece: &Polygon, q: &Polygon) -> Vec<Polygon> {
    let planes = q.halfplanes();
    let mut out = Vec::new();
    let mut inside_so_far: Vec<HalfPlane> = Vec::new();
    for hp in &planes {
        // region outside this edge but inside all previous edges
        let flipped = HalfPlane { a: -hp.a.clone(), b: -hp.b.clone(), c: -hp.c.clone() };
        let mut constraints = inside_so_far.clone();
        constraints.push(flipped);
        if let Some(p) = clip_polygon(piece, &constraints) {
            out.push(p);
        }
        inside_so_far.push(hp.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::new(rat(x), rat(y))
    }

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::from_points(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn hull_is_canonical_ccw() {
        let p = poly(&[(0, 0), (3, 1), (1, 3), (1, 1)]);
        assert_eq!(p.vertices(), &[pt(0, 0), pt(3, 1), pt(1, 3)]);
    }

    #[test]
    fn hull_degenerates() {
        let seg = poly(&[(1, 1), (3, 1), (2, 1)]);
        assert_eq!(seg.vertices(), &[pt(1, 1), pt(3, 1)]);
        let point = poly(&[(2, 2), (2, 2)]);
        assert!(point.is_point());
    }

    #[test]
    fn segment_intersection_meets_at_point() {
        let a = Polygon::segment(pt(1, 1), pt(3, 1));
        let b = Polygon::segment(pt(1, 1), pt(1, 3));
        let r = intersect_polygons(&a, &b).unwrap();
        assert_eq!(r, Polygon::point(pt(1, 1)));
    }

    #[test]
    fn intersect_region_examples() {
        let r1 = Region::from_polys(vec![Polygon::segment(pt(1, 1), pt(3, 1))]);
        let r2 = Region::from_polys(vec![Polygon::segment(pt(1, 1), pt(1, 3))]);
        let meet = r1.intersect(&r2).unwrap();
        assert_eq!(meet, Region::from_polys(vec![Polygon::point(pt(1, 1))]));

        assert!(r1.intersect(&Region::empty()).unwrap().is_empty());
        assert_eq!(r1.intersect(&r1).unwrap(), r1);
    }

    #[test]
    fn union_dedups_and_absorbs() {
        let p = Region::from_polys(vec![Polygon::point(pt(2, 2))]);
        assert_eq!(p.union(&p).unwrap(), p);

        let tri = Region::from_polys(vec![poly(&[(0, 0), (1, 0), (0, 1)])]);
        let two = tri.union(&p).unwrap();
        assert_eq!(two.polys().unwrap().len(), 2);

        assert_eq!(Region::empty().union(&tri).unwrap(), tri);

        // a part inside another part is absorbed
        let inner = Region::from_polys(vec![Polygon::point(pt(0, 0))]);
        assert_eq!(tri.union(&inner).unwrap(), tri);
    }

    #[test]
    fn intersect_idempotent_with_overlapping_parts() {
        let a = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let b = poly(&[(1, 1), (3, 1), (3, 3), (1, 3)]);
        let r = Region::from_polys(vec![a, b]);
        assert_eq!(r.intersect(&r).unwrap(), r);
    }

    #[test]
    fn contains_is_boundary_inclusive() {
        let seg = Region::from_polys(vec![Polygon::segment(pt(1, 1), pt(3, 1))]);
        assert!(seg.contains(&[rat(2), rat(1)]));
        assert!(!seg.contains(&[rat(2), rat(1) + crate::rational::ratio(1, 1000)]));
        assert!(!Region::empty().contains(&[rat(0), rat(0)]));
    }

    #[test]
    fn frontier_of_triangle_is_upper_right_edge() {
        let tri = Region::from_polys(vec![poly(&[(0, 0), (3, 1), (1, 3)])]);
        let f = tri.frontier().unwrap();
        assert_eq!(f, Region::from_polys(vec![Polygon::segment(pt(3, 1), pt(1, 3))]));
    }

    #[test]
    fn frontier_of_point_and_pointset() {
        let p = Region::from_polys(vec![Polygon::point(pt(2, 2))]);
        assert_eq!(p.frontier().unwrap(), p);

        let pts = Region::from_tagged_points(
            [(1, 1), (2, 0), (0, 2), (0, 0)]
                .iter()
                .map(|&(x, y)| TaggedPoint { coords: vec![rat(x), rat(y)], tag: None })
                .collect(),
        );
        let f = pts.frontier().unwrap();
        let coords: Vec<Vec<Rat>> =
            f.points().unwrap().iter().map(|p| p.coords.clone()).collect();
        assert_eq!(
            coords,
            vec![vec![rat(0), rat(2)], vec![rat(1), rat(1)], vec![rat(2), rat(0)]]
        );
    }

    #[test]
    fn frontier_of_empty_region_errors() {
        assert!(Region::empty().frontier().is_err());
    }

    #[test]
    fn subset_tests_cover_degenerate_and_proper() {
        let hull = Region::from_polys(vec![poly(&[(0, 0), (3, 1), (1, 3)])]);
        let seg = Region::from_polys(vec![Polygon::segment(pt(1, 1), pt(2, 1))]);
        assert!(seg.subset_of(&hull).unwrap());
        let out = Region::from_polys(vec![Polygon::segment(pt(1, 1), pt(4, 1))]);
        assert!(!out.subset_of(&hull).unwrap());

        // union covering needs both halves
        let left = poly(&[(0, 0), (1, 0), (1, 2), (0, 2)]);
        let right = poly(&[(1, 0), (2, 0), (2, 2), (1, 2)]);
        let big = Region::from_polys(vec![poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])]);
        let halves = Region::from_polys(vec![left.clone(), right]);
        assert!(big.subset_of(&halves).unwrap());
        let only_left = Region::from_polys(vec![left]);
        assert!(!big.subset_of(&only_left).unwrap());
    }

    #[test]
    fn mode_mismatch_is_domain_error() {
        let a = Region::empty();
        let b = Region::empty_points();
        assert!(a.intersect(&b).is_err());
        assert!(a.union(&b).is_err());
    }
}
