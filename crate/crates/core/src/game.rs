//! Base games, payoff vectors, and Pareto-meet geometry.
//!
//! The feasible set is the convex hull of the pure payoff vectors (players can
//! use correlated randomization); a pure-strategies-only mode is available for
//! the meet computations. Two-player games are handled exactly through the
//! polygon machinery; games with three or more players go through a finite
//! point-set grid at a configurable mixture-denominator resolution and are
//! documented as approximate.

use std::fmt;

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geometry::{HalfPlane, Point2, Polygon, Region, TaggedPoint};
use crate::outcome::{JointAction, Outcome};
use crate::rational::{fmt_rat, parse_rat, Rat};

/// Default mixture-denominator resolution for the n-player point grid.
pub const DEFAULT_GRID_RESOLUTION: u32 = 12;

/// Whether the feasible set is the correlated hull (default) or pure profiles
/// only.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum FeasibleMode {
    #[default]
    CorrelatedHull,
    PureOnly,
}

/// Per-player exact rational payoffs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PayoffVector(pub Vec<Rat>);

/// Dominance comparison mode.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Weak,
    Strict,
}

impl PayoffVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, player: usize) -> &Rat {
        &self.0[player]
    }

    pub fn as_point2(&self) -> Result<Point2> {
        if self.0.len() != 2 {
            return Err(Error::domain("payoff vector is not 2-dimensional"));
        }
        Ok(Point2::new(self.0[0].clone(), self.0[1].clone()))
    }
}

impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Componentwise dominance: weak requires `x_i >= y_i` everywhere, strict
/// requires `x_i > y_i` everywhere.
pub fn dominates(x: &PayoffVector, y: &PayoffVector, mode: Dominance) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::domain("payoff vector length mismatch"));
    }
    Ok(match mode {
        Dominance::Weak => x.0.iter().zip(&y.0).all(|(a, b)| a >= b),
        Dominance::Strict => x.0.iter().zip(&y.0).all(|(a, b)| a > b),
    })
}

/// Weak dominance with at least one strict coordinate.
pub fn improves(x: &PayoffVector, y: &PayoffVector) -> Result<bool> {
    Ok(dominates(x, y, Dominance::Weak)? && x != y)
}

/// Finite normal-form base game with exact rational payoffs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Game {
    action_names: Vec<Vec<String>>,
    /// Row-major over the joint action space.
    payoffs: Vec<PayoffVector>,
}

impl Game {
    pub fn new(action_names: Vec<Vec<String>>, payoffs: Vec<PayoffVector>) -> Result<Game> {
        let n = action_names.len();
        if n < 2 {
            return Err(Error::domain("a game needs at least 2 players"));
        }
        if action_names.iter().any(|a| a.is_empty()) {
            return Err(Error::domain("every player needs at least one action"));
        }
        let cells: usize = action_names.iter().map(|a| a.len()).product();
        if payoffs.len() != cells {
            return Err(Error::domain(format!(
                "payoff tensor has {} cells, expected {}",
                payoffs.len(),
                cells
            )));
        }
        if payoffs.iter().any(|p| p.len() != n) {
            return Err(Error::domain("payoff vector length must equal player count"));
        }
        Ok(Game { action_names, payoffs })
    }

    pub fn player_count(&self) -> usize {
        self.action_names.len()
    }

    pub fn action_names(&self, player: usize) -> &[String] {
        &self.action_names[player]
    }

    pub fn action_index(&self, player: usize, name: &str) -> Result<usize> {
        self.action_names[player]
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::domain(format!("unknown action label {name:?} for player {}", player + 1)))
    }

    pub fn action_counts(&self) -> Vec<usize> {
        self.action_names.iter().map(|a| a.len()).collect()
    }

    fn cell_index(&self, a: &JointAction) -> Result<usize> {
        if a.0.len() != self.player_count() {
            return Err(Error::domain("joint action arity mismatch"));
        }
        let mut idx = 0usize;
        for (player, &act) in a.0.iter().enumerate() {
            let count = self.action_names[player].len();
            if act >= count {
                return Err(Error::domain(format!(
                    "action index {act} out of range for player {}",
                    player + 1
                )));
            }
            idx = idx * count + act;
        }
        Ok(idx)
    }

    /// Payoff vector of one pure joint action.
    pub fn pure_payoff(&self, a: &JointAction) -> Result<&PayoffVector> {
        Ok(&self.payoffs[self.cell_index(a)?])
    }

    /// All pure joint actions in canonical (row-major) order.
    pub fn joint_actions(&self) -> Vec<JointAction> {
        let counts = self.action_counts();
        let mut out = Vec::with_capacity(self.payoffs.len());
        let mut cur = vec![0usize; counts.len()];
        loop {
            out.push(JointAction(cur.clone()));
            let mut k = counts.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < counts[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// Expected payoff of an outcome under the payoff tensor, exact.
    pub fn payoff(&self, outcome: &Outcome) -> Result<PayoffVector> {
        let n = self.player_count();
        let mut acc = vec![Rat::zero(); n];
        for (a, w) in outcome.support() {
            let u = self.pure_payoff(a)?;
            for i in 0..n {
                acc[i] += w * &u.0[i];
            }
        }
        Ok(PayoffVector(acc))
    }

    pub fn joint_action_from_names(&self, names: &[impl AsRef<str>]) -> Result<JointAction> {
        if names.len() != self.player_count() {
            return Err(Error::domain("joint action arity mismatch"));
        }
        let idx: Result<Vec<usize>> = names
            .iter()
            .enumerate()
            .map(|(p, n)| self.action_index(p, n.as_ref()))
            .collect();
        Ok(JointAction(idx?))
    }

    pub fn format_joint_action(&self, a: &JointAction) -> String {
        let names: Vec<&str> = a
            .0
            .iter()
            .enumerate()
            .map(|(p, &i)| self.action_names[p][i].as_str())
            .collect();
        format!("({})", names.join(", "))
    }

    pub fn format_outcome(&self, o: &Outcome) -> String {
        let parts: Vec<String> = o
            .support()
            .map(|(a, w)| {
                let cell = self.format_joint_action(a);
                if num_traits::One::is_one(w) {
                    cell
                } else {
                    format!("{}*{}", fmt_rat(w), cell)
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Feasible hull as a polygon (2-player games).
    pub fn feasible_hull(&self) -> Result<Polygon> {
        if self.player_count() != 2 {
            return Err(Error::domain("feasible hull polygon requires a 2-player game"));
        }
        let pts: Vec<Point2> = self
            .payoffs
            .iter()
            .map(|p| Point2::new(p.0[0].clone(), p.0[1].clone()))
            .collect();
        Polygon::from_points(pts).ok_or_else(|| Error::internal("empty payoff tensor"))
    }

    /// The Pareto-efficient subset of the feasible set.
    ///
    /// Two players: the northeast boundary of the feasible hull (or of the
    /// pure payoff set in pure mode), exact. Three or more players: the
    /// undominated subset of a finite mixture grid at `resolution`.
    pub fn efficient_outcomes(&self, mode: FeasibleMode, resolution: u32) -> Result<Region> {
        if self.player_count() == 2 {
            let parts: Vec<Polygon> = match mode {
                FeasibleMode::CorrelatedHull => vec![self.feasible_hull()?],
                FeasibleMode::PureOnly => self
                    .payoffs
                    .iter()
                    .map(|p| Polygon::point(Point2::new(p.0[0].clone(), p.0[1].clone())))
                    .collect(),
            };
            Region::from_polys(parts).frontier()
        } else {
            let grid = match mode {
                FeasibleMode::CorrelatedHull => self.payoff_grid(resolution)?,
                FeasibleMode::PureOnly => self.pure_tagged_points(),
            };
            Region::from_tagged_points(grid).frontier()
        }
    }

    fn pure_tagged_points(&self) -> Vec<TaggedPoint> {
        self.joint_actions()
            .into_iter()
            .map(|a| {
                let u = self.pure_payoff(&a).expect("total tensor");
                TaggedPoint { coords: u.0.clone(), tag: Some(Outcome::pure(a)) }
            })
            .collect()
    }

    /// All mixtures over pure joint actions whose weights are multiples of
    /// `1/resolution`, with their payoffs. Approximate by construction.
    pub fn payoff_grid(&self, resolution: u32) -> Result<Vec<TaggedPoint>> {
        if resolution == 0 {
            return Err(Error::domain("grid resolution must be positive"));
        }
        let actions = self.joint_actions();
        let m = actions.len();
        let denom = Rat::from_integer(resolution.into());
        let mut out = Vec::new();
        // compositions of `resolution` into m nonnegative parts
        let mut parts = vec![0u32; m];
        fn walk(
            k: usize,
            remaining: u32,
            parts: &mut Vec<u32>,
            m: usize,
            emit: &mut dyn FnMut(&[u32]),
        ) {
            if k == m - 1 {
                parts[k] = remaining;
                emit(parts);
                return;
            }
            for v in 0..=remaining {
                parts[k] = v;
                walk(k + 1, remaining - v, parts, m, emit);
            }
        }
        let mut emit = |parts: &[u32]| {
            let entries: Vec<(JointAction, Rat)> = parts
                .iter()
                .enumerate()
                .filter(|(_, &w)| w > 0)
                .map(|(i, &w)| (actions[i].clone(), Rat::from_integer(w.into()) / &denom))
                .collect();
            let outcome = Outcome::mix(entries).expect("grid weights sum to 1");
            let payoff = self.payoff(&outcome).expect("total tensor");
            out.push(TaggedPoint { coords: payoff.0, tag: Some(outcome) });
        };
        walk(0, resolution, &mut parts, m, &mut emit);
        Ok(out)
    }

    /// Pareto meet minimum: per player, the minimum payoff over the efficient
    /// set.
    pub fn pmm(&self, mode: FeasibleMode, resolution: u32) -> Result<PayoffVector> {
        let eff = self.efficient_outcomes(mode, resolution)?;
        let n = self.player_count();
        let coords: Vec<Vec<Rat>> = match &eff {
            Region::Polys(parts) => parts
                .iter()
                .flat_map(|p| p.vertices().iter().map(|v| vec![v.x.clone(), v.y.clone()]))
                .collect(),
            Region::Points(pts) => pts.iter().map(|p| p.coords.clone()).collect(),
        };
        let mut mins: Vec<Rat> = coords
            .first()
            .cloned()
            .ok_or_else(|| Error::internal("efficient set is empty"))?;
        for c in &coords {
            for i in 0..n {
                if c[i] < mins[i] {
                    mins[i] = c[i].clone();
                }
            }
        }
        Ok(PayoffVector(mins))
    }

    /// Pareto meet projection of `outcome` for `player`: feasible payoffs
    /// giving `player` at least `max(pmm_i, u_i)` while pinning every other
    /// player at exactly `max(pmm_j, u_j)`.
    pub fn pmp(
        &self,
        player: usize,
        outcome: &Outcome,
        mode: FeasibleMode,
        resolution: u32,
    ) -> Result<Region> {
        let n = self.player_count();
        if player >= n {
            return Err(Error::domain("player index out of range"));
        }
        let u = self.payoff(outcome)?;
        let g = self.pmm(mode, resolution)?;
        let target: Vec<Rat> =
            (0..n).map(|j| if g.0[j] > u.0[j] { g.0[j].clone() } else { u.0[j].clone() }).collect();
        if n == 2 {
            let planes = if player == 0 {
                vec![
                    HalfPlane::x_at_least(target[0].clone()),
                    HalfPlane::y_at_most(target[1].clone()),
                    HalfPlane::y_at_least(target[1].clone()),
                ]
            } else {
                vec![
                    HalfPlane::y_at_least(target[1].clone()),
                    HalfPlane::x_at_most(target[0].clone()),
                    HalfPlane::x_at_least(target[0].clone()),
                ]
            };
            let hull = match mode {
                FeasibleMode::CorrelatedHull => vec![self.feasible_hull()?],
                FeasibleMode::PureOnly => self
                    .payoffs
                    .iter()
                    .map(|p| Polygon::point(Point2::new(p.0[0].clone(), p.0[1].clone())))
                    .collect(),
            };
            let parts: Vec<Polygon> = hull
                .iter()
                .filter_map(|part| crate::geometry::clip_polygon(part, &planes))
                .collect();
            Ok(Region::from_polys(parts))
        } else {
            let grid = match mode {
                FeasibleMode::CorrelatedHull => self.payoff_grid(resolution)?,
                FeasibleMode::PureOnly => self.pure_tagged_points(),
            };
            let kept: Vec<TaggedPoint> = grid
                .into_iter()
                .filter(|p| {
                    p.coords[player] >= target[player]
                        && (0..n).filter(|&j| j != player).all(|j| p.coords[j] == target[j])
                })
                .collect();
            Ok(Region::from_tagged_points(kept))
        }
    }

    /// `pmm` over the correlated hull at the default grid resolution.
    pub fn pmm_hull(&self) -> Result<PayoffVector> {
        self.pmm(FeasibleMode::CorrelatedHull, DEFAULT_GRID_RESOLUTION)
    }

    /// `pmp` over the correlated hull at the default grid resolution.
    pub fn pmp_hull(&self, player: usize, outcome: &Outcome) -> Result<Region> {
        self.pmp(player, outcome, FeasibleMode::CorrelatedHull, DEFAULT_GRID_RESOLUTION)
    }

    /// `efficient_outcomes` over the correlated hull at the default grid
    /// resolution.
    pub fn efficient_hull(&self) -> Result<Region> {
        self.efficient_outcomes(FeasibleMode::CorrelatedHull, DEFAULT_GRID_RESOLUTION)
    }

    /// Best feasible payoff for one player (attained at a pure profile).
    pub fn best_feasible_payoff(&self, player: usize) -> Result<Rat> {
        if player >= self.player_count() {
            return Err(Error::domain("player index out of range"));
        }
        self.payoffs
            .iter()
            .map(|p| p.0[player].clone())
            .max()
            .ok_or_else(|| Error::internal("empty payoff tensor"))
    }

    /// Finds an outcome realizing a payoff point of the feasible hull
    /// (2-player games), deterministically: fan triangulation anchored at the
    /// first hull vertex, first containing triangle wins.
    pub fn realize_payoff(&self, target: &PayoffVector) -> Result<Outcome> {
        if self.player_count() != 2 {
            return Err(Error::domain("payoff realization requires a 2-player game"));
        }
        let p = target.as_point2()?;
        let hull = self.feasible_hull()?;
        if !hull.contains(&p) {
            return Err(Error::domain(format!("payoff {target} is not feasible")));
        }
        // deterministic representative pure profile for each payoff point:
        // the first joint action (row-major) achieving it
        let rep = |pt: &Point2| -> JointAction {
            for a in self.joint_actions() {
                let u = self.pure_payoff(&a).expect("total tensor");
                if u.0[0] == pt.x && u.0[1] == pt.y {
                    return a;
                }
            }
            unreachable!("hull vertices are pure payoffs")
        };
        let vs = hull.vertices();
        match vs.len() {
            1 => Ok(Outcome::pure(rep(&vs[0]))),
            2 => {
                let (a, b) = (&vs[0], &vs[1]);
                // p = a + t (b - a) on the segment
                let t = if a.x != b.x {
                    (&p.x - &a.x) / (&b.x - &a.x)
                } else {
                    (&p.y - &a.y) / (&b.y - &a.y)
                };
                Outcome::pure(rep(b)).blend(&Outcome::pure(rep(a)), &t)
            }
            _ => {
                let anchor = &vs[0];
                for k in 1..vs.len() - 1 {
                    let (b, c) = (&vs[k], &vs[k + 1]);
                    if let Some((wa, wb, wc)) = barycentric(anchor, b, c, &p) {
                        return Outcome::mix(vec![
                            (rep(anchor), wa),
                            (rep(b), wb),
                            (rep(c), wc),
                        ]);
                    }
                }
                Err(Error::internal(format!("no triangle contains feasible payoff {target}")))
            }
        }
    }
}

/// Barycentric weights of `p` in triangle `(a, b, c)`; `None` when outside.
fn barycentric(a: &Point2, b: &Point2, c: &Point2, p: &Point2) -> Option<(Rat, Rat, Rat)> {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&c.x - &a.x) * (&b.y - &a.y);
    if det.is_zero() {
        return None;
    }
    let wb = ((&p.x - &a.x) * (&c.y - &a.y) - (&c.x - &a.x) * (&p.y - &a.y)) / &det;
    let wc = ((&b.x - &a.x) * (&p.y - &a.y) - (&p.x - &a.x) * (&b.y - &a.y)) / &det;
    let wa = Rat::from_integer(1.into()) - &wb - &wc;
    let zero = Rat::zero();
    if wa >= zero && wb >= zero && wc >= zero {
        Some((wa, wb, wc))
    } else {
        None
    }
}

/// Loads a game from the JSON file format: `players` is a list of per-player
/// action-name lists and `payoffs` a nested array (outermost index = player 1)
/// whose innermost entries are per-player rational strings or integers.
pub fn game_from_json(v: &Value) -> Result<Game> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("game file must be a JSON object".into()))?;
    let players = obj
        .get("players")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("game file needs a `players` array".into()))?;
    let action_names: Vec<Vec<String>> = players
        .iter()
        .map(|p| {
            p.as_array()
                .map(|names| {
                    names
                        .iter()
                        .map(|n| n.as_str().map(str::to_owned))
                        .collect::<Option<Vec<_>>>()
                })
                .flatten()
                .ok_or_else(|| Error::Parse("`players` must be lists of action names".into()))
        })
        .collect::<Result<_>>()?;
    let payoff_value = obj
        .get("payoffs")
        .ok_or_else(|| Error::Parse("game file needs a `payoffs` array".into()))?;

    let counts: Vec<usize> = action_names.iter().map(|a| a.len()).collect();
    let mut payoffs = Vec::new();
    collect_payoffs(payoff_value, &counts, 0, action_names.len(), &mut payoffs)?;
    Game::new(action_names, payoffs)
}

fn collect_payoffs(
    v: &Value,
    counts: &[usize],
    depth: usize,
    players: usize,
    out: &mut Vec<PayoffVector>,
) -> Result<()> {
    if depth == counts.len() {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("payoff cell must be a list of rationals".into()))?;
        if arr.len() != players {
            return Err(Error::Parse(format!(
                "payoff cell has {} entries, expected {players}",
                arr.len()
            )));
        }
        let cell: Result<Vec<Rat>> = arr.iter().map(rat_from_value).collect();
        out.push(PayoffVector(cell?));
        return Ok(());
    }
    let arr = v.as_array().ok_or_else(|| Error::Parse("payoff tensor shape mismatch".into()))?;
    if arr.len() != counts[depth] {
        return Err(Error::Parse(format!(
            "payoff tensor has {} entries at depth {depth}, expected {}",
            arr.len(),
            counts[depth]
        )));
    }
    for item in arr {
        collect_payoffs(item, counts, depth + 1, players, out)?;
    }
    Ok(())
}

/// Accepts integers or rational strings `"p/q"`.
pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("non-integer numeric payoff {n}; use a rational string"))),
        Value::String(s) => parse_rat(s),
        _ => Err(Error::Parse(format!("expected rational, found {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    pub fn scheduling() -> Game {
        let names = vec![
            vec!["Slot1".into(), "Slot2".into(), "Slot3".into()],
            vec!["Slot1".into(), "Slot2".into(), "Slot3".into()],
        ];
        let rows: [[(i64, i64); 3]; 3] =
            [[(3, 1), (0, 0), (0, 0)], [(0, 0), (1, 3), (0, 0)], [(0, 0), (0, 0), (1, 1)]];
        let payoffs = rows
            .iter()
            .flatten()
            .map(|&(a, b)| PayoffVector(vec![rat(a), rat(b)]))
            .collect();
        Game::new(names, payoffs).unwrap()
    }

    fn ja(i: usize, j: usize) -> JointAction {
        JointAction(vec![i, j])
    }

    #[test]
    fn table_payoffs() {
        let g = scheduling();
        assert_eq!(
            g.payoff(&Outcome::pure(ja(0, 1))).unwrap(),
            PayoffVector(vec![rat(0), rat(0)])
        );
        assert_eq!(
            g.payoff(&Outcome::pure(ja(2, 2))).unwrap(),
            PayoffVector(vec![rat(1), rat(1)])
        );
        let mix = Outcome::mix(vec![(ja(0, 0), ratio(1, 2)), (ja(1, 1), ratio(1, 2))]).unwrap();
        assert_eq!(g.payoff(&mix).unwrap(), PayoffVector(vec![rat(2), rat(2)]));
    }

    #[test]
    fn dominance_modes() {
        let x = PayoffVector(vec![rat(1), rat(1)]);
        let y = PayoffVector(vec![rat(0), rat(0)]);
        let z = PayoffVector(vec![rat(3), rat(1)]);
        assert!(dominates(&x, &y, Dominance::Strict).unwrap());
        assert!(!dominates(&z, &x, Dominance::Strict).unwrap());
        assert!(dominates(&z, &x, Dominance::Weak).unwrap());
        assert!(dominates(&x, &x, Dominance::Weak).unwrap());
        let w = PayoffVector(vec![rat(1)]);
        assert!(dominates(&x, &w, Dominance::Weak).is_err());
    }

    #[test]
    fn efficient_set_and_pmm() {
        let g = scheduling();
        let eff = g.efficient_outcomes(FeasibleMode::CorrelatedHull, 1).unwrap();
        let seg = Region::from_polys(vec![Polygon::segment(
            Point2::new(rat(1), rat(3)),
            Point2::new(rat(3), rat(1)),
        )]);
        assert_eq!(eff, seg);
        assert_eq!(
            g.pmm(FeasibleMode::CorrelatedHull, 1).unwrap(),
            PayoffVector(vec![rat(1), rat(1)])
        );
    }

    #[test]
    fn one_action_game() {
        let g = Game::new(
            vec![vec!["A".into()], vec!["B".into()]],
            vec![PayoffVector(vec![rat(5), rat(5)])],
        )
        .unwrap();
        let eff = g.efficient_outcomes(FeasibleMode::CorrelatedHull, 1).unwrap();
        assert_eq!(
            eff,
            Region::from_polys(vec![Polygon::point(Point2::new(rat(5), rat(5)))])
        );
        assert_eq!(g.pmm(FeasibleMode::CorrelatedHull, 1).unwrap(), PayoffVector(vec![rat(5), rat(5)]));
        assert_eq!(g.best_feasible_payoff(0).unwrap(), rat(5));
    }

    #[test]
    fn pmm_of_transferable_frontier() {
        // pure payoffs (4,0) and (0,4), zero elsewhere: frontier is the
        // full segment and the per-player minima are 0
        let names = vec![vec!["a".into(), "b".into()], vec!["a".into(), "b".into()]];
        let payoffs = vec![
            PayoffVector(vec![rat(4), rat(0)]),
            PayoffVector(vec![rat(0), rat(0)]),
            PayoffVector(vec![rat(0), rat(0)]),
            PayoffVector(vec![rat(0), rat(4)]),
        ];
        let g = Game::new(names, payoffs).unwrap();
        assert_eq!(g.pmm(FeasibleMode::CorrelatedHull, 1).unwrap(), PayoffVector(vec![rat(0), rat(0)]));
    }

    #[test]
    fn common_payoff_frontier_is_max_point() {
        let names = vec![vec!["a".into(), "b".into()], vec!["a".into(), "b".into()]];
        let payoffs = vec![
            PayoffVector(vec![rat(0), rat(0)]),
            PayoffVector(vec![rat(0), rat(0)]),
            PayoffVector(vec![rat(0), rat(0)]),
            PayoffVector(vec![rat(2), rat(2)]),
        ];
        let g = Game::new(names, payoffs).unwrap();
        let eff = g.efficient_outcomes(FeasibleMode::CorrelatedHull, 1).unwrap();
        assert_eq!(
            eff,
            Region::from_polys(vec![Polygon::point(Point2::new(rat(2), rat(2)))])
        );
    }

    #[test]
    fn pmp_examples() {
        let g = scheduling();
        let origin = Outcome::pure(ja(0, 1));
        let p1 = g.pmp(0, &origin, FeasibleMode::CorrelatedHull, 1).unwrap();
        assert_eq!(
            p1,
            Region::from_polys(vec![Polygon::segment(
                Point2::new(rat(1), rat(1)),
                Point2::new(rat(3), rat(1)),
            )])
        );
        let p2 = g.pmp(1, &origin, FeasibleMode::CorrelatedHull, 1).unwrap();
        assert_eq!(
            p2,
            Region::from_polys(vec![Polygon::segment(
                Point2::new(rat(1), rat(1)),
                Point2::new(rat(1), rat(3)),
            )])
        );
        let mid = Outcome::mix(vec![(ja(0, 0), ratio(1, 2)), (ja(1, 1), ratio(1, 2))]).unwrap();
        let p1mid = g.pmp(0, &mid, FeasibleMode::CorrelatedHull, 1).unwrap();
        assert_eq!(
            p1mid,
            Region::from_polys(vec![Polygon::point(Point2::new(rat(2), rat(2)))])
        );
    }

    #[test]
    fn realize_payoff_roundtrips() {
        let g = scheduling();
        for target in [
            PayoffVector(vec![rat(2), rat(2)]),
            PayoffVector(vec![ratio(14, 5), ratio(6, 5)]),
            PayoffVector(vec![rat(1), rat(1)]),
            PayoffVector(vec![ratio(1, 2), ratio(1, 2)]),
        ] {
            let o = g.realize_payoff(&target).unwrap();
            assert_eq!(g.payoff(&o).unwrap(), target);
        }
        assert!(g.realize_payoff(&PayoffVector(vec![rat(3), rat(3)])).is_err());
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{
            "players": [["Slot1","Slot2","Slot3"],["Slot1","Slot2","Slot3"]],
            "payoffs": [
                [[3,1],[0,0],[0,0]],
                [[0,0],[1,3],[0,0]],
                [[0,0],[0,0],["1","1/1"]]
            ]
        }"#;
        let v: Value = serde_json::from_str(text).unwrap();
        let g = game_from_json(&v).unwrap();
        assert_eq!(g, scheduling());

        let bad: Value = serde_json::from_str(
            r#"{"players": [["a"],["b"]], "payoffs": [[["3/0","1"]]]}"#,
        )
        .unwrap();
        assert!(game_from_json(&bad).is_err());
    }

    #[test]
    fn three_player_grid_mode() {
        let names = vec![
            vec!["x".into(), "y".into()],
            vec!["x".into(), "y".into()],
            vec!["x".into(), "y".into()],
        ];
        // common-payoff cube corner game
        let payoffs: Vec<PayoffVector> = (0..8)
            .map(|i| {
                let bits = [(i >> 2) & 1, (i >> 1) & 1, i & 1];
                let all = bits.iter().all(|&b| b == 1);
                let v = if all { 2 } else { bits.iter().sum::<usize>() as i64 };
                PayoffVector(vec![rat(v), rat(v), rat(v)])
            })
            .collect();
        let g = Game::new(names, payoffs).unwrap();
        let eff = g.efficient_outcomes(FeasibleMode::CorrelatedHull, 2).unwrap();
        let pts = eff.points().unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coords, vec![rat(2), rat(2), rat(2)]);
        assert_eq!(
            g.pmm(FeasibleMode::CorrelatedHull, 2).unwrap(),
            PayoffVector(vec![rat(2), rat(2), rat(2)])
        );
    }
}
