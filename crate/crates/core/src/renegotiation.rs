//! Renegotiation rules, selection, agreement sets, and program transforms.
//!
//! Point-valued renegotiation functions map outcomes to weakly improving
//! outcomes. Set-valued renegotiation functions (SVRs) map a counterpart SVR
//! fingerprint and a default outcome to a closed region of weakly improving
//! payoffs, encoded as an ordered first-match-wins rule table so the syntactic
//! conditioning stays decidable. Selection functions choose an efficient point
//! of an agreement set; the built-in weighted sums are exact, maximize at part
//! vertices, and share one global lexicographic tie-break.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::game::{dominates, Dominance, Game, PayoffVector};
use crate::geometry::{Point2, Polygon, Region};
use crate::outcome::Outcome;
use crate::programs::{fingerprint_svr_profile, Fingerprint, Program, ProgramFamily};
use crate::rational::{fmt_rat, Rat};

/// Point-valued renegotiation rule table; identity on unmapped outcomes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RenegFunction {
    pub name: String,
    rules: BTreeMap<Outcome, Outcome>,
}

impl RenegFunction {
    pub fn new(name: impl Into<String>, rules: Vec<(Outcome, Outcome)>) -> Result<RenegFunction> {
        let mut map = BTreeMap::new();
        for (from, to) in rules {
            if map.insert(from.clone(), to).is_some() {
                return Err(Error::domain("duplicate outcome key in renegotiation function"));
            }
        }
        Ok(RenegFunction { name: name.into(), rules: map })
    }

    pub fn apply(&self, o: &Outcome) -> Outcome {
        self.rules.get(o).cloned().unwrap_or_else(|| o.clone())
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Outcome, &Outcome)> {
        self.rules.iter()
    }

    /// Canonical bytes; the name is a file-format label and not part of the
    /// identity.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(b"(reneg-fn");
        for (from, to) in &self.rules {
            out.extend_from_slice(b" (rule ");
            out.extend_from_slice(&from.canonical_bytes());
            out.push(b' ');
            out.extend_from_slice(&to.canonical_bytes());
            out.push(b')');
        }
        out.push(b')');
        out
    }
}

/// Pattern on the fingerprint of the counterpart SVR profile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CounterpartPattern {
    Any,
    Exact(Fingerprint),
}

impl CounterpartPattern {
    pub fn matches(&self, fp: &Fingerprint) -> bool {
        match self {
            CounterpartPattern::Any => true,
            CounterpartPattern::Exact(want) => want == fp,
        }
    }

    fn canonical_bytes(&self) -> Vec<u8> {
        match self {
            CounterpartPattern::Any => b"(any)".to_vec(),
            CounterpartPattern::Exact(fp) => {
                let mut out = Vec::new();
                out.extend_from_slice(b"(fp #");
                out.extend_from_slice(fp.0.len().to_string().as_bytes());
                out.push(b':');
                out.extend_from_slice(&fp.0);
                out.push(b')');
                out
            }
        }
    }
}

/// Pattern on the default outcome a rule fires at.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OutcomePattern {
    Any,
    Exact(Outcome),
}

impl OutcomePattern {
    pub fn matches(&self, o: &Outcome) -> bool {
        match self {
            OutcomePattern::Any => true,
            OutcomePattern::Exact(want) => want == o,
        }
    }

    fn canonical_bytes(&self) -> Vec<u8> {
        match self {
            OutcomePattern::Any => b"(any)".to_vec(),
            OutcomePattern::Exact(o) => o.canonical_bytes(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SvrRule {
    pub counterpart: CounterpartPattern,
    pub default_outcome: OutcomePattern,
    pub region: Region,
}

/// Set-valued renegotiation function as an ordered rule table; evaluating a
/// (counterpart fingerprint, outcome) pair returns the region of the first
/// matching rule, or the empty region when nothing matches.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SvrFunction {
    pub name: String,
    pub rules: Vec<SvrRule>,
}

impl SvrFunction {
    pub fn new(name: impl Into<String>, rules: Vec<SvrRule>) -> SvrFunction {
        SvrFunction { name: name.into(), rules }
    }

    pub fn evaluate(&self, counterpart: &Fingerprint, at: &Outcome) -> Region {
        for rule in &self.rules {
            if rule.counterpart.matches(counterpart) && rule.default_outcome.matches(at) {
                return rule.region.clone();
            }
        }
        Region::empty()
    }

    /// True when no rule conditions on the counterpart fingerprint.
    pub fn is_unconditional(&self) -> bool {
        self.rules.iter().all(|r| matches!(r.counterpart, CounterpartPattern::Any))
    }

    /// Canonical bytes; rule order is semantic (first match wins), the name is
    /// not part of the identity.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(b"(svr-fn");
        for rule in &self.rules {
            out.extend_from_slice(b" (rule ");
            out.extend_from_slice(&rule.counterpart.canonical_bytes());
            out.push(b' ');
            out.extend_from_slice(&rule.default_outcome.canonical_bytes());
            out.push(b' ');
            out.extend_from_slice(&region_bytes(&rule.region));
            out.push(b')');
        }
        out.push(b')');
        out
    }
}

pub fn region_bytes(r: &Region) -> Vec<u8> {
    let mut out = Vec::new();
    match r {
        Region::Polys(parts) => {
            out.extend_from_slice(b"(region");
            for p in parts {
                out.push(b' ');
                out.extend_from_slice(&p.canonical_bytes());
            }
            out.push(b')');
        }
        Region::Points(pts) => {
            out.extend_from_slice(b"(points");
            for p in pts {
                out.extend_from_slice(b" (pt");
                for c in &p.coords {
                    out.push(b' ');
                    out.extend_from_slice(fmt_rat(c).as_bytes());
                }
                if let Some(tag) = &p.tag {
                    out.push(b' ');
                    out.extend_from_slice(&tag.canonical_bytes());
                }
                out.push(b')');
            }
            out.push(b')');
        }
    }
    out
}

/// A selected point of a region with its realizing outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Selected {
    pub payoff: PayoffVector,
    pub outcome: Outcome,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SelectionCandidate {
    pub payoff: PayoffVector,
    pub outcome: Outcome,
}

/// Selection rule over closed regions. Weighted sums are the exact built-in;
/// external rules are vertex-evaluated and flagged approximate in reports.
#[derive(Clone)]
pub enum SelectionFunction {
    WeightedSum {
        weights: Vec<Rat>,
    },
    External {
        name: &'static str,
        pick: fn(&[SelectionCandidate]) -> Option<usize>,
        approximate: bool,
    },
}

impl PartialEq for SelectionFunction {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                SelectionFunction::WeightedSum { weights: a },
                SelectionFunction::WeightedSum { weights: b },
            ) => a == b,
            (
                SelectionFunction::External { name: a, .. },
                SelectionFunction::External { name: b, .. },
            ) => a == b,
            _ => false,
        }
    }
}
impl Eq for SelectionFunction {}

impl fmt::Debug for SelectionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionFunction::WeightedSum { weights } => {
                let w: Vec<String> = weights.iter().map(fmt_rat).collect();
                write!(f, "weighted_sum({})", w.join(","))
            }
            SelectionFunction::External { name, .. } => write!(f, "external({name})"),
        }
    }
}

impl SelectionFunction {
    pub fn weighted_sum(weights: Vec<Rat>) -> Result<SelectionFunction> {
        if weights.is_empty() || weights.iter().any(|w| *w <= Rat::zero()) {
            return Err(Error::domain("selection weights must be positive"));
        }
        Ok(SelectionFunction::WeightedSum { weights })
    }

    pub fn is_approximate(&self) -> bool {
        matches!(self, SelectionFunction::External { approximate: true, .. })
    }

    pub fn describe(&self) -> String {
        format!("{self:?}")
    }
}

/// Candidate points of a region: part vertices in polygon mode (a linear
/// objective attains its maximum at one), the tagged points otherwise.
/// Sorted by the global tie-break order (payoff lexicographic, then canonical
/// outcome).
fn candidates(region: &Region, game: &Game) -> Result<Vec<SelectionCandidate>> {
    let mut out = Vec::new();
    match region {
        Region::Polys(parts) => {
            let mut seen: Vec<Point2> = Vec::new();
            for part in parts {
                for v in part.vertices() {
                    if !seen.contains(v) {
                        seen.push(v.clone());
                    }
                }
            }
            for v in seen {
                let payoff = PayoffVector(vec![v.x.clone(), v.y.clone()]);
                let outcome = game.realize_payoff(&payoff)?;
                out.push(SelectionCandidate { payoff, outcome });
            }
        }
        Region::Points(pts) => {
            for p in pts {
                let outcome = p.tag.clone().ok_or_else(|| {
                    Error::domain("point-set region entry lacks a realizing outcome")
                })?;
                out.push(SelectionCandidate { payoff: PayoffVector(p.coords.clone()), outcome });
            }
        }
    }
    out.sort_by(|a, b| {
        (&a.payoff, a.outcome.canonical_bytes()).cmp(&(&b.payoff, b.outcome.canonical_bytes()))
    });
    Ok(out)
}

/// Chooses a Pareto-efficient point of `region`: maximizes the weighted sum
/// over candidate vertices exactly, breaking ties toward the lexicographically
/// smallest payoff vector and then the smallest canonical outcome.
pub fn select(d: &SelectionFunction, region: &Region, game: &Game) -> Result<Selected> {
    if region.is_empty() {
        return Err(Error::domain("selection from an empty region"));
    }
    let cands = candidates(region, game)?;
    match d {
        SelectionFunction::WeightedSum { weights } => {
            if weights.len() != game.player_count() {
                return Err(Error::domain("selection weight arity mismatch"));
            }
            let score = |c: &SelectionCandidate| -> Rat {
                c.payoff.0.iter().zip(weights).map(|(p, w)| p * w).sum()
            };
            let mut best: Option<(Rat, &SelectionCandidate)> = None;
            for c in &cands {
                let s = score(c);
                match &best {
                    Some((bs, _)) if *bs >= s => {}
                    _ => best = Some((s, c)),
                }
            }
            let (_, best) = best.expect("nonempty candidates");
            Ok(Selected { payoff: best.payoff.clone(), outcome: best.outcome.clone() })
        }
        SelectionFunction::External { pick, name, .. } => {
            let idx = pick(&cands).ok_or_else(|| {
                Error::internal(format!("external selection {name} picked nothing"))
            })?;
            let c = cands
                .get(idx)
                .ok_or_else(|| Error::internal(format!("external selection {name} out of range")))?;
            Ok(Selected { payoff: c.payoff.clone(), outcome: c.outcome.clone() })
        }
    }
}

/// Whether any point of `region` weakly dominates `p` with a strict
/// coordinate, computed by clipping parts to the dominance quadrant.
pub fn region_dominates_point(region: &Region, p: &PayoffVector) -> Result<bool> {
    match region {
        Region::Polys(parts) => {
            let pt = p.as_point2()?;
            let planes = [
                crate::geometry::HalfPlane::x_at_least(pt.x.clone()),
                crate::geometry::HalfPlane::y_at_least(pt.y.clone()),
            ];
            for part in parts {
                if let Some(clipped) = crate::geometry::clip_polygon(part, &planes) {
                    if clipped != Polygon::point(pt.clone()) {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        Region::Points(pts) => Ok(pts
            .iter()
            .any(|q| q.coords != p.0 && q.coords.iter().zip(&p.0).all(|(a, b)| a >= b))),
    }
}

/// Validation report for a point-valued renegotiation function.
#[derive(Clone, Debug)]
pub struct RenegValidation {
    /// Mapped pairs whose image fails to weakly dominate, with the player hurt.
    pub weak_violations: Vec<(Outcome, Outcome, usize)>,
    pub has_strict_improvement: bool,
}

impl RenegValidation {
    pub fn is_valid(&self) -> bool {
        self.weak_violations.is_empty() && self.has_strict_improvement
    }
}

/// Checks both renegotiation-function conditions over all mapped pairs.
pub fn validate_reneg(r: &RenegFunction, game: &Game) -> Result<RenegValidation> {
    let mut weak_violations = Vec::new();
    let mut has_strict = false;
    for (from, to) in r.rules() {
        let u_from = game.payoff(from)?;
        let u_to = game.payoff(to)?;
        if !dominates(&u_to, &u_from, Dominance::Weak)? {
            for i in 0..game.player_count() {
                if u_to.0[i] < u_from.0[i] {
                    weak_violations.push((from.clone(), to.clone(), i));
                }
            }
        } else if u_to != u_from {
            has_strict = true;
        }
    }
    Ok(RenegValidation { weak_violations, has_strict_improvement: has_strict })
}

/// One set-valued validation failure.
#[derive(Clone, Debug)]
pub enum SvrViolation {
    /// A region point fails to weakly dominate the outcome it renegotiates
    /// from: (counterpart name, outcome, offending payoff).
    NotImprovement(String, Outcome, PayoffVector),
    /// A rule region leaves the feasible set: (counterpart name, outcome,
    /// offending payoff).
    Infeasible(String, Outcome, PayoffVector),
}

#[derive(Clone, Debug)]
pub struct SvrValidation {
    pub violations: Vec<SvrViolation>,
    pub has_strict_improvement: bool,
    /// Names of the counterpart functions the check ranged over.
    pub universe: Vec<String>,
}

impl SvrValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.has_strict_improvement
    }
}

/// Checks the set-valued conditions for every counterpart in a declared finite
/// universe, probing every exact outcome pattern plus every pure outcome.
pub fn validate_svr(
    rn: &SvrFunction,
    game: &Game,
    counterpart_universe: &[SvrFunction],
) -> Result<SvrValidation> {
    let hull = Region::from_polys(vec![game.feasible_hull()?]);
    let mut probes: Vec<Outcome> = game.joint_actions().into_iter().map(Outcome::pure).collect();
    for rule in &rn.rules {
        if let OutcomePattern::Exact(o) = &rule.default_outcome {
            if !probes.contains(o) {
                probes.push(o.clone());
            }
        }
    }
    let mut violations = Vec::new();
    let mut has_strict = false;
    for cp in counterpart_universe {
        let fp = fingerprint_svr_profile(&[cp]);
        for at in &probes {
            let region = rn.evaluate(&fp, at);
            if region.is_empty() {
                continue;
            }
            let u_at = game.payoff(at)?;
            let verts = region_candidate_payoffs(&region)?;
            for v in &verts {
                if !dominates(v, &u_at, Dominance::Weak)? {
                    violations.push(SvrViolation::NotImprovement(
                        cp.name.clone(),
                        at.clone(),
                        v.clone(),
                    ));
                }
                if v.0.iter().zip(&u_at.0).any(|(a, b)| a > b) {
                    has_strict = true;
                }
            }
            if let Region::Polys(_) = &region {
                if !region.subset_of(&hull)? {
                    let witness = verts
                        .iter()
                        .find(|v| !hull.contains(&v.0))
                        .cloned()
                        .unwrap_or_else(|| verts[0].clone());
                    violations.push(SvrViolation::Infeasible(cp.name.clone(), at.clone(), witness));
                }
            }
        }
    }
    Ok(SvrValidation {
        violations,
        has_strict_improvement: has_strict,
        universe: counterpart_universe.iter().map(|c| c.name.clone()).collect(),
    })
}

fn region_candidate_payoffs(region: &Region) -> Result<Vec<PayoffVector>> {
    Ok(match region {
        Region::Polys(parts) => parts
            .iter()
            .flat_map(|p| {
                p.vertices().iter().map(|v| PayoffVector(vec![v.x.clone(), v.y.clone()]))
            })
            .collect(),
        Region::Points(pts) => pts.iter().map(|p| PayoffVector(p.coords.clone())).collect(),
    })
}

/// One transitivity check failure.
#[derive(Clone, Debug)]
pub enum TransitivityFailure {
    /// `D(S ∪ S')` failed to weakly dominate `D(S)`.
    Counterexample { base: PayoffVector, extended: PayoffVector },
    /// The selection returned a point outside the frontier of its input.
    DominatedSelection { chosen: PayoffVector },
}

#[derive(Clone, Debug, Default)]
pub struct TransitivityReport {
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub failures: Vec<TransitivityFailure>,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each `(S, S')` whose every point weakly dominates `u(D(S))`, asserts
/// that `u(D(S ∪ S'))` weakly dominates `u(D(S))`; also flags any selection
/// output that is dominated within its own input set. Pairs not satisfying
/// the premise are counted as skipped.
pub fn check_transitive(
    d: &SelectionFunction,
    samples: &[(Region, Region)],
    game: &Game,
) -> Result<TransitivityReport> {
    let mut report = TransitivityReport::default();
    for (s, s_prime) in samples {
        if s.is_empty() || s_prime.is_empty() {
            report.pairs_skipped += 1;
            continue;
        }
        let base = select(d, s, game)?;
        if region_dominates_point(s, &base.payoff)? {
            report
                .failures
                .push(TransitivityFailure::DominatedSelection { chosen: base.payoff.clone() });
        }
        let premise = region_candidate_payoffs(s_prime)?
            .iter()
            .map(|v| dominates(v, &base.payoff, Dominance::Weak))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        if !premise {
            report.pairs_skipped += 1;
            continue;
        }
        let union = s.union(s_prime)?;
        let extended = select(d, &union, game)?;
        if region_dominates_point(&union, &extended.payoff)? {
            report
                .failures
                .push(TransitivityFailure::DominatedSelection { chosen: extended.payoff.clone() });
        }
        if !dominates(&extended.payoff, &base.payoff, Dominance::Weak)? {
            report.failures.push(TransitivityFailure::Counterexample {
                base: base.payoff.clone(),
                extended: extended.payoff.clone(),
            });
        }
        report.pairs_checked += 1;
    }
    Ok(report)
}

/// A componentwise transform of program profiles.
#[derive(Clone, Debug)]
pub enum ProgramTransform {
    Identity,
    /// Wraps base programs into renegotiation programs sharing one function.
    RenegWrap { func: RenegFunction },
    /// Wraps base programs into one-round set-valued renegotiation programs,
    /// one function per player.
    CsrWrap { funcs: Vec<SvrFunction> },
}

impl ProgramTransform {
    pub fn apply(&self, player: usize, p: &Program) -> Result<Program> {
        match self {
            ProgramTransform::Identity => Ok(p.clone()),
            ProgramTransform::RenegWrap { func } => match p.family() {
                ProgramFamily::Base(bp) => Ok(Program::reneg(bp.clone(), func.clone())),
                _ => Err(Error::domain("renegotiation wrap expects a base program")),
            },
            ProgramTransform::CsrWrap { funcs } => {
                let func = funcs
                    .get(player)
                    .ok_or_else(|| Error::domain("transform has no function for this player"))?;
                match p.family() {
                    ProgramFamily::Base(bp) => Ok(Program::csr(bp.clone(), func.clone())),
                    _ => Err(Error::domain("set-valued wrap expects a base program")),
                }
            }
        }
    }
}

/// Builds the renegotiation-program transform for a validated function.
pub fn make_reneg_spi(r: &RenegFunction, game: &Game) -> Result<ProgramTransform> {
    let validation = validate_reneg(r, game)?;
    if !validation.is_valid() {
        return Err(Error::domain(format!(
            "renegotiation function {:?} is invalid: {} weak violations, strict improvement: {}",
            r.name,
            validation.weak_violations.len(),
            validation.has_strict_improvement
        )));
    }
    Ok(ProgramTransform::RenegWrap { func: r.clone() })
}

/// Builds the set-valued wrap transform after checking that every player's
/// function covers their meet projection of every default outcome reachable
/// from `default_space`.
pub fn make_csr_spi(
    rn_profile: &[SvrFunction],
    d: &SelectionFunction,
    game: &Game,
    default_space: &[Vec<Program>],
) -> Result<ProgramTransform> {
    let _ = d;
    let n = game.player_count();
    if rn_profile.len() != n || default_space.len() != n {
        return Err(Error::domain("profile arity mismatch"));
    }
    let mut defaults: Vec<Outcome> = Vec::new();
    for profile in crate::programs::profile_product(default_space) {
        let a = crate::programs::base_profile_outcome(&profile, game)?;
        if !defaults.contains(&a) {
            defaults.push(a);
        }
    }
    for (i, rn_i) in rn_profile.iter().enumerate() {
        let others: Vec<&SvrFunction> =
            rn_profile.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f).collect();
        let cp = fingerprint_svr_profile(&others);
        for a in &defaults {
            let pmp = game.pmp_hull(i, a)?;
            let region = rn_i.evaluate(&cp, a);
            if !pmp.subset_of(&region)? {
                return Err(Error::domain(format!(
                    "meet projection of player {} at {} is not covered by {:?}",
                    i + 1,
                    game.format_outcome(a),
                    rn_i.name
                )));
            }
        }
    }
    Ok(ProgramTransform::CsrWrap { funcs: rn_profile.to_vec() })
}

/// Replaces a set-valued profile by singleton-region functions that force the
/// same outcome under any selection function, at each listed default outcome.
pub fn translate_selection(
    rn_profile: &[SvrFunction],
    d_old: &SelectionFunction,
    game: &Game,
    defaults: &[Outcome],
) -> Result<Vec<SvrFunction>> {
    let n = rn_profile.len();
    let mut singleton_rules: Vec<(Outcome, Region)> = Vec::new();
    for a in defaults {
        let mut agreement: Option<Region> = None;
        for (i, rn_i) in rn_profile.iter().enumerate() {
            let others: Vec<&SvrFunction> =
                rn_profile.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f).collect();
            let region = rn_i.evaluate(&fingerprint_svr_profile(&others), a);
            agreement = Some(match agreement {
                None => region,
                Some(acc) => acc.intersect(&region)?,
            });
        }
        let agreement = agreement.ok_or_else(|| Error::domain("empty profile"))?;
        if agreement.is_empty() {
            return Err(Error::domain(format!(
                "agreement set is empty at default {}",
                game.format_outcome(a)
            )));
        }
        let chosen = select(d_old, &agreement, game)?;
        let region = match agreement {
            Region::Polys(_) => {
                Region::from_polys(vec![Polygon::point(chosen.payoff.as_point2()?)])
            }
            Region::Points(_) => Region::from_tagged_points(vec![crate::geometry::TaggedPoint {
                coords: chosen.payoff.0.clone(),
                tag: Some(chosen.outcome.clone()),
            }]),
        };
        singleton_rules.push((a.clone(), region));
    }
    Ok((0..n)
        .map(|i| {
            SvrFunction::new(
                format!("{}-translated", rn_profile[i].name),
                singleton_rules
                    .iter()
                    .map(|(a, region)| SvrRule {
                        counterpart: CounterpartPattern::Any,
                        default_outcome: OutcomePattern::Exact(a.clone()),
                        region: region.clone(),
                    })
                    .collect(),
            )
        })
        .collect())
}

/// Extends a one-round set-valued program so that, against every counterpart
/// in the universe, the rule fired at the default outcome also contains the
/// player's meet projection of the outcome the pair would achieve. Rules are
/// made counterpart-specific so other counterparts are untouched; a program
/// whose fired region already covers the projection is returned unchanged.
pub fn pmp_extend(
    p: &Program,
    player: usize,
    game: &Game,
    counterpart_universe: &[Program],
    selection: &SelectionFunction,
) -> Result<Program> {
    if game.player_count() != 2 {
        return Err(Error::domain("meet-projection extension is exact for 2-player games only"));
    }
    let ProgramFamily::Csr { default, func } = p.family() else {
        return Err(Error::domain(
            "meet-projection extension expects a one-round set-valued program",
        ));
    };
    let mut new_rules: Vec<SvrRule> = Vec::new();
    for q in counterpart_universe {
        let ProgramFamily::Csr { default: q_default, func: q_func } = q.family() else {
            continue;
        };
        let a_def = crate::programs::base_pair_outcome(default, q_default, player, game)?;
        let achieved = crate::programs::evaluate_pair(p, q, player, game, selection)?.outcome;
        let projection = game.pmp_hull(player, &achieved)?;
        let cp_fp = fingerprint_svr_profile(&[q_func]);
        let fired = func.evaluate(&cp_fp, &a_def);
        if projection.is_empty() || projection.subset_of(&fired)? {
            continue;
        }
        let extended = fired.union(&projection)?;
        let rule = SvrRule {
            counterpart: CounterpartPattern::Exact(cp_fp),
            default_outcome: OutcomePattern::Exact(a_def),
            region: extended,
        };
        if !new_rules.contains(&rule) {
            new_rules.push(rule);
        }
    }
    if new_rules.is_empty() {
        return Ok(p.clone());
    }
    new_rules.sort_by(|a, b| {
        (a.counterpart.canonical_bytes(), a.default_outcome.canonical_bytes())
            .cmp(&(b.counterpart.canonical_bytes(), b.default_outcome.canonical_bytes()))
    });
    new_rules.extend(func.rules.iter().cloned());
    Ok(Program::csr(default.clone(), SvrFunction::new(format!("{}-pmp", func.name), new_rules)))
}

/// The selection used by negative-control tests: maximizes player 1 only and
/// breaks ties toward the smallest player-2 payoff, which can return a
/// dominated point.
pub fn broken_selection() -> SelectionFunction {
    fn pick(cands: &[SelectionCandidate]) -> Option<usize> {
        cands
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| {
                (&a.payoff.0[0], std::cmp::Reverse(&a.payoff.0[1]))
                    .cmp(&(&b.payoff.0[0], std::cmp::Reverse(&b.payoff.0[1])))
            })
            .map(|(i, _)| i)
    }
    SelectionFunction::External { name: "max-p1-min-p2", pick, approximate: false }
}
