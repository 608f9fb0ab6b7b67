//! Strategy programs: a closed, halting-by-construction AST with canonical
//! fingerprints and the evaluator for base, renegotiation, set-valued, and
//! iterated set-valued program templates.
//!
//! Programs never invoke counterpart evaluation; base programs walk a bounded
//! match chain over the counterparts' fingerprints, and structured programs
//! run their defaults against each other before any renegotiation step, so
//! every profile evaluation terminates by structural induction.

use std::fmt;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::outcome::{JointAction, Outcome};
use crate::renegotiation::{select, RenegFunction, Selected, SelectionFunction, SvrFunction};
use crate::geometry::Region;

/// Maximum match-chain length accepted by loaders and generators.
pub const DEFAULT_MAX_MATCH_CHAIN: usize = 16;

/// Canonical, injective serialization of a program or rule function; equal
/// values have equal fingerprints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint(pub Vec<u8>);

impl Fingerprint {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Fingerprint> {
        if s.len() % 2 != 0 {
            return Err(Error::Parse("fingerprint hex has odd length".into()));
        }
        let bytes: std::result::Result<Vec<u8>, _> =
            (0..s.len()).step_by(2).map(|i| u8::from_str_radix(&s[i..i + 2], 16)).collect();
        Ok(Fingerprint(bytes.map_err(|_| Error::Parse("invalid fingerprint hex".into()))?))
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fp{:?}", String::from_utf8_lossy(&self.0))
    }
}

/// Non-renegotiating program: a constant action or a bounded match chain over
/// the counterpart profile's fingerprint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseProgram {
    Const(usize),
    MatchElse { pattern: Fingerprint, then_action: usize, else_branch: Box<BaseProgram> },
}

impl BaseProgram {
    pub fn chain_len(&self) -> usize {
        match self {
            BaseProgram::Const(_) => 1,
            BaseProgram::MatchElse { else_branch, .. } => 1 + else_branch.chain_len(),
        }
    }

    pub fn assert_bounded(&self, max: usize) -> Result<()> {
        if self.chain_len() > max {
            return Err(Error::domain(format!(
                "match chain of length {} exceeds the bound {max}",
                self.chain_len()
            )));
        }
        Ok(())
    }

    /// The action played against a counterpart profile fingerprint.
    pub fn run(&self, counterpart: &Fingerprint) -> usize {
        let mut cur = self;
        loop {
            match cur {
                BaseProgram::Const(a) => return *a,
                BaseProgram::MatchElse { pattern, then_action, else_branch } => {
                    if pattern == counterpart {
                        return *then_action;
                    }
                    cur = else_branch;
                }
            }
        }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        match self {
            BaseProgram::Const(a) => format!("(const {a})").into_bytes(),
            BaseProgram::MatchElse { pattern, then_action, else_branch } => {
                let mut out = Vec::new();
                out.extend_from_slice(b"(match #");
                out.extend_from_slice(pattern.0.len().to_string().as_bytes());
                out.push(b':');
                out.extend_from_slice(&pattern.0);
                out.extend_from_slice(format!(" {then_action} ").as_bytes());
                out.extend_from_slice(&else_branch.canonical_bytes());
                out.push(b')');
                out
            }
        }
    }
}

/// A strategy program: base, renegotiation, conditional set-valued
/// renegotiation, or its iterated form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Program {
    Base(BaseProgram),
    Reneg { default: BaseProgram, func: RenegFunction },
    Csr { default: BaseProgram, func: SvrFunction },
    Icsr { default: BaseProgram, rounds: Vec<SvrFunction> },
}

/// Template membership record: which family a program belongs to, with its
/// components.
#[derive(Clone, Debug)]
pub enum ProgramFamily<'a> {
    Base(&'a BaseProgram),
    Reneg { default: &'a BaseProgram, func: &'a RenegFunction },
    Csr { default: &'a BaseProgram, func: &'a SvrFunction },
    Icsr { default: &'a BaseProgram, rounds: &'a [SvrFunction] },
}

impl Program {
    pub fn base(bp: BaseProgram) -> Program {
        Program::Base(bp)
    }

    pub fn reneg(default: BaseProgram, func: RenegFunction) -> Program {
        Program::Reneg { default, func }
    }

    pub fn csr(default: BaseProgram, func: SvrFunction) -> Program {
        Program::Csr { default, func }
    }

    pub fn icsr(default: BaseProgram, rounds: Vec<SvrFunction>) -> Program {
        Program::Icsr { default, rounds }
    }

    /// Syntactic template classification with components.
    pub fn family(&self) -> ProgramFamily<'_> {
        match self {
            Program::Base(bp) => ProgramFamily::Base(bp),
            Program::Reneg { default, func } => ProgramFamily::Reneg { default, func },
            Program::Csr { default, func } => ProgramFamily::Csr { default, func },
            Program::Icsr { default, rounds } => ProgramFamily::Icsr { default, rounds },
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            Program::Base(_) => "base",
            Program::Reneg { .. } => "reneg",
            Program::Csr { .. } => "csr",
            Program::Icsr { .. } => "icsr",
        }
    }

    /// The fallback program: the wrapped default, or the program itself for a
    /// base program.
    pub fn default_program(&self) -> &BaseProgram {
        match self {
            Program::Base(bp) => bp,
            Program::Reneg { default, .. }
            | Program::Csr { default, .. }
            | Program::Icsr { default, .. } => default,
        }
    }

    pub fn is_renegotiating(&self) -> bool {
        !matches!(self, Program::Base(_))
    }

    /// Number of renegotiation rounds: 0 for base, 1 for point-valued and
    /// one-round set-valued programs, K for the iterated form.
    pub fn round_count(&self) -> usize {
        match self {
            Program::Base(_) => 0,
            Program::Reneg { .. } | Program::Csr { .. } => 1,
            Program::Icsr { rounds, .. } => rounds.len(),
        }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        match self {
            Program::Base(bp) => {
                out.extend_from_slice(b"(prog base ");
                out.extend_from_slice(&bp.canonical_bytes());
            }
            Program::Reneg { default, func } => {
                out.extend_from_slice(b"(prog reneg ");
                out.extend_from_slice(&default.canonical_bytes());
                out.push(b' ');
                out.extend_from_slice(&func.canonical_bytes());
            }
            Program::Csr { default, func } => {
                out.extend_from_slice(b"(prog csr ");
                out.extend_from_slice(&default.canonical_bytes());
                out.push(b' ');
                out.extend_from_slice(&func.canonical_bytes());
            }
            Program::Icsr { default, rounds } => {
                out.extend_from_slice(b"(prog icsr ");
                out.extend_from_slice(&default.canonical_bytes());
                for r in rounds {
                    out.push(b' ');
                    out.extend_from_slice(&r.canonical_bytes());
                }
            }
        }
        out.push(b')');
        out
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint(self.canonical_bytes())
    }
}

/// Fingerprint of a counterpart profile: the single program's fingerprint for
/// two-player games, a tuple form otherwise.
pub fn fingerprint_profile(programs: &[&Program]) -> Fingerprint {
    if programs.len() == 1 {
        return programs[0].fingerprint();
    }
    let mut out = Vec::new();
    out.extend_from_slice(b"(profile");
    for p in programs {
        out.push(b' ');
        out.extend_from_slice(&p.canonical_bytes());
    }
    out.push(b')');
    Fingerprint(out)
}

pub fn fingerprint_reneg(f: &RenegFunction) -> Fingerprint {
    Fingerprint(f.canonical_bytes())
}

pub fn fingerprint_svr(f: &SvrFunction) -> Fingerprint {
    Fingerprint(f.canonical_bytes())
}

/// Fingerprint of a counterpart's set-valued function profile.
pub fn fingerprint_svr_profile(funcs: &[&SvrFunction]) -> Fingerprint {
    if funcs.len() == 1 {
        return fingerprint_svr(funcs[0]);
    }
    let mut out = Vec::new();
    out.extend_from_slice(b"(svrs");
    for f in funcs {
        out.push(b' ');
        out.extend_from_slice(&f.canonical_bytes());
    }
    out.push(b')');
    Fingerprint(out)
}

/// One renegotiation round of a set-valued evaluation.
#[derive(Clone, Debug)]
pub struct RoundTrace {
    pub start: Outcome,
    pub regions: Vec<Region>,
    pub agreement: Region,
    pub selected: Option<Selected>,
    pub end: Outcome,
}

#[derive(Clone, Debug)]
pub enum EvalTrace {
    /// Base or mixed profile: fingerprint reading only.
    Plain,
    /// Point-valued renegotiation: the default outcome and the agreed image,
    /// if the functions agreed there.
    Reneg { default_outcome: Outcome, renegotiated: Option<Outcome> },
    /// Set-valued renegotiation rounds (one for the single-round template).
    Rounds(Vec<RoundTrace>),
}

#[derive(Clone, Debug)]
pub struct EvalResult {
    pub outcome: Outcome,
    pub trace: EvalTrace,
}

/// Outcome of base programs playing each other: every program reads the
/// fingerprint of the others' profile.
pub fn base_profile_outcome(profile: &[&Program], game: &Game) -> Result<Outcome> {
    for p in profile {
        if !matches!(p, Program::Base(_)) {
            return Err(Error::domain("expected a profile of base programs"));
        }
    }
    let mut actions = Vec::with_capacity(profile.len());
    for (i, p) in profile.iter().enumerate() {
        let Program::Base(bp) = p else { unreachable!() };
        let others: Vec<&Program> =
            profile.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| *q).collect();
        actions.push(bp.run(&fingerprint_profile(&others)));
    }
    let a = JointAction(actions);
    game.pure_payoff(&a)?;
    Ok(Outcome::pure(a))
}

/// Defaults-against-defaults outcome for a seated pair of base programs.
pub fn base_pair_outcome(
    mine: &BaseProgram,
    theirs: &BaseProgram,
    my_seat: usize,
    game: &Game,
) -> Result<Outcome> {
    let a = Program::Base(mine.clone());
    let b = Program::Base(theirs.clone());
    let profile: Vec<&Program> = if my_seat == 0 { vec![&a, &b] } else { vec![&b, &a] };
    base_profile_outcome(&profile, game)
}

fn defaults_outcome(profile: &[Program], game: &Game) -> Result<Outcome> {
    let wrapped: Vec<Program> =
        profile.iter().map(|p| Program::Base(p.default_program().clone())).collect();
    let refs: Vec<&Program> = wrapped.iter().collect();
    base_profile_outcome(&refs, game)
}

fn run_round(
    funcs: &[&SvrFunction],
    start: &Outcome,
    game: &Game,
    selection: &SelectionFunction,
) -> Result<(Outcome, RoundTrace)> {
    let n = funcs.len();
    let mut regions = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<&SvrFunction> =
            funcs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| *f).collect();
        regions.push(funcs[i].evaluate(&fingerprint_svr_profile(&others), start));
    }
    let mut agreement = regions[0].clone();
    for r in &regions[1..] {
        agreement = agreement.intersect(r)?;
    }
    let (end, selected) = if agreement.is_empty() {
        (start.clone(), None)
    } else {
        let sel = select(selection, &agreement, game)?;
        if !agreement.contains(&sel.payoff.0) {
            return Err(Error::internal(format!(
                "selection returned {} outside the agreement set",
                sel.payoff
            )));
        }
        (sel.outcome.clone(), Some(sel))
    };
    let trace = RoundTrace { start: start.clone(), regions, agreement, selected, end: end.clone() };
    Ok((end, trace))
}

/// Evaluates a program profile to the joint outcome played.
///
/// All-base profiles read fingerprints through their match chains. An
/// all-renegotiation profile renegotiates when every function maps the default
/// outcome to the same image, and otherwise reverts to defaults against
/// defaults. All-set-valued profiles intersect their announced regions and
/// play the selected point of a nonempty agreement set. Iterated profiles
/// with a common round count thread each round's outcome into the next. Any
/// other mix skips renegotiation: structured programs play their default
/// against the full counterpart programs.
pub fn evaluate(
    profile: &[Program],
    game: &Game,
    selection: &SelectionFunction,
) -> Result<EvalResult> {
    if profile.len() != game.player_count() {
        return Err(Error::domain("profile length must match the player count"));
    }
    for p in profile {
        p.default_program().assert_bounded(DEFAULT_MAX_MATCH_CHAIN)?;
        if let Program::Icsr { rounds, .. } = p {
            if rounds.is_empty() {
                return Err(Error::domain("iterated program needs at least one round"));
            }
        }
    }

    let all_base = profile.iter().all(|p| matches!(p, Program::Base(_)));
    if all_base {
        let refs: Vec<&Program> = profile.iter().collect();
        return Ok(EvalResult {
            outcome: base_profile_outcome(&refs, game)?,
            trace: EvalTrace::Plain,
        });
    }

    let all_reneg = profile.iter().all(|p| matches!(p, Program::Reneg { .. }));
    if all_reneg {
        let a_def = defaults_outcome(profile, game)?;
        let images: Vec<Outcome> = profile
            .iter()
            .map(|p| {
                let Program::Reneg { func, .. } = p else { unreachable!() };
                func.apply(&a_def)
            })
            .collect();
        let agreed = images.windows(2).all(|w| w[0] == w[1]);
        if agreed {
            let image = images.into_iter().next().expect("nonempty profile");
            game.payoff(&image)?;
            return Ok(EvalResult {
                outcome: image.clone(),
                trace: EvalTrace::Reneg {
                    default_outcome: a_def,
                    renegotiated: Some(image),
                },
            });
        }
        return Ok(EvalResult {
            outcome: a_def.clone(),
            trace: EvalTrace::Reneg { default_outcome: a_def, renegotiated: None },
        });
    }

    let all_csr = profile.iter().all(|p| matches!(p, Program::Csr { .. }));
    if all_csr {
        let a_def = defaults_outcome(profile, game)?;
        let funcs: Vec<&SvrFunction> = profile
            .iter()
            .map(|p| {
                let Program::Csr { func, .. } = p else { unreachable!() };
                func
            })
            .collect();
        let (outcome, trace) = run_round(&funcs, &a_def, game, selection)?;
        return Ok(EvalResult { outcome, trace: EvalTrace::Rounds(vec![trace]) });
    }

    let all_icsr = profile.iter().all(|p| matches!(p, Program::Icsr { .. }));
    if all_icsr {
        let ks: Vec<usize> = profile.iter().map(Program::round_count).collect();
        if ks.windows(2).all(|w| w[0] == w[1]) {
            let k = ks[0];
            let mut cur = defaults_outcome(profile, game)?;
            let mut traces = Vec::with_capacity(k);
            for round in 0..k {
                let funcs: Vec<&SvrFunction> = profile
                    .iter()
                    .map(|p| {
                        let Program::Icsr { rounds, .. } = p else { unreachable!() };
                        &rounds[round]
                    })
                    .collect();
                let (next, trace) = run_round(&funcs, &cur, game, selection)?;
                cur = next;
                traces.push(trace);
            }
            return Ok(EvalResult { outcome: cur, trace: EvalTrace::Rounds(traces) });
        }
    }

    // mixed templates: no renegotiation; every program falls back to
    // fingerprint reading against the full counterpart programs
    let mut actions = Vec::with_capacity(profile.len());
    for (i, p) in profile.iter().enumerate() {
        let others: Vec<&Program> =
            profile.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
        let fp = fingerprint_profile(&others);
        actions.push(p.default_program().run(&fp));
    }
    let a = JointAction(actions);
    game.pure_payoff(&a)?;
    Ok(EvalResult { outcome: Outcome::pure(a), trace: EvalTrace::Plain })
}

/// Seats `p` and `q` and evaluates the pair; `p_seat` is the seat of `p`.
pub fn evaluate_pair(
    p: &Program,
    q: &Program,
    p_seat: usize,
    game: &Game,
    selection: &SelectionFunction,
) -> Result<EvalResult> {
    if game.player_count() != 2 || p_seat > 1 {
        return Err(Error::domain("pair evaluation requires a 2-player game"));
    }
    let profile: Vec<Program> =
        if p_seat == 0 { vec![p.clone(), q.clone()] } else { vec![q.clone(), p.clone()] };
    evaluate(&profile, game, selection)
}

/// The marginal action of one seat in a pure outcome.
pub fn marginal_action(outcome: &Outcome, seat: usize) -> Result<usize> {
    outcome
        .as_pure()
        .map(|a| a.0[seat])
        .ok_or_else(|| Error::internal("marginal action of a mixed outcome"))
}

/// Cartesian product of per-player program lists.
pub fn profile_product<'a>(space: &'a [Vec<Program>]) -> Vec<Vec<&'a Program>> {
    let mut out: Vec<Vec<&Program>> = vec![Vec::new()];
    for list in space {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for p in list {
                let mut row = prefix.clone();
                row.push(p);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// The depth-0 and depth-1 base programs of one seat in a 2-player game:
/// every constant action, and every one-pattern match chain keyed on a
/// counterpart constant program.
pub fn base_space_depth1(game: &Game, seat: usize) -> Result<Vec<Program>> {
    if game.player_count() != 2 || seat > 1 {
        return Err(Error::domain("depth-1 enumeration requires a 2-player game"));
    }
    let my_actions = game.action_names(seat).len();
    let their_actions = game.action_names(1 - seat).len();
    let mut out = Vec::new();
    for a in 0..my_actions {
        out.push(Program::base(BaseProgram::Const(a)));
    }
    for b in 0..their_actions {
        let pattern = Program::base(BaseProgram::Const(b)).fingerprint();
        for then_action in 0..my_actions {
            for else_action in 0..my_actions {
                out.push(Program::base(BaseProgram::MatchElse {
                    pattern: pattern.clone(),
                    then_action,
                    else_branch: Box::new(BaseProgram::Const(else_action)),
                }));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PayoffVector;
    use crate::rational::rat;

    fn scheduling() -> Game {
        let names = vec![
            vec!["Slot1".into(), "Slot2".into(), "Slot3".into()],
            vec!["Slot1".into(), "Slot2".into(), "Slot3".into()],
        ];
        let rows: [[(i64, i64); 3]; 3] =
            [[(3, 1), (0, 0), (0, 0)], [(0, 0), (1, 3), (0, 0)], [(0, 0), (0, 0), (1, 1)]];
        let payoffs =
            rows.iter().flatten().map(|&(a, b)| PayoffVector(vec![rat(a), rat(b)])).collect();
        Game::new(names, payoffs).unwrap()
    }

    fn sum_selection() -> SelectionFunction {
        SelectionFunction::weighted_sum(vec![rat(1), rat(1)]).unwrap()
    }

    fn demanding(seat: usize) -> Program {
        // "their slot if their code is 'always their slot'; else my slot"
        let other = 1 - seat;
        Program::base(BaseProgram::MatchElse {
            pattern: Program::base(BaseProgram::Const(other)).fingerprint(),
            then_action: other,
            else_branch: Box::new(BaseProgram::Const(seat)),
        })
    }

    #[test]
    fn fingerprints_are_canonical_and_injective() {
        let a = Program::base(BaseProgram::Const(0));
        let b = Program::base(BaseProgram::Const(0));
        let c = Program::base(BaseProgram::Const(1));
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    #[test]
    fn demanding_program_yields_to_constant() {
        let g = scheduling();
        let p1 = Program::base(BaseProgram::Const(0));
        let p2 = demanding(1);
        let r = evaluate(&[p1, p2.clone()], &g, &sum_selection()).unwrap();
        let u = g.payoff(&r.outcome).unwrap();
        assert_eq!(u, PayoffVector(vec![rat(3), rat(1)]));

        // against anything else it plays its own slot
        let p1_other = Program::base(BaseProgram::Const(2));
        let r2 = evaluate(&[p1_other, p2], &g, &sum_selection()).unwrap();
        assert_eq!(g.payoff(&r2.outcome).unwrap(), PayoffVector(vec![rat(0), rat(0)]));
    }

    #[test]
    fn constant_miscoordination() {
        let g = scheduling();
        let p1 = Program::base(BaseProgram::Const(0));
        let p2 = Program::base(BaseProgram::Const(1));
        let r = evaluate(&[p1, p2], &g, &sum_selection()).unwrap();
        assert_eq!(g.payoff(&r.outcome).unwrap(), PayoffVector(vec![rat(0), rat(0)]));
    }

    #[test]
    fn classification_reports_components() {
        let d = BaseProgram::Const(2);
        let p = Program::icsr(
            d.clone(),
            vec![
                SvrFunction::new("a", vec![]),
                SvrFunction::new("b", vec![]),
                SvrFunction::new("c", vec![]),
            ],
        );
        match p.family() {
            ProgramFamily::Icsr { rounds, .. } => assert_eq!(rounds.len(), 3),
            _ => panic!("expected iterated template"),
        }
        assert_eq!(Program::base(d).kind_str(), "base");
    }

    #[test]
    fn depth1_space_size() {
        let g = scheduling();
        let space = base_space_depth1(&g, 0).unwrap();
        assert_eq!(space.len(), 3 + 3 * 3 * 3);
    }

    #[test]
    fn empty_round_list_is_domain_error() {
        let g = scheduling();
        let p = Program::icsr(BaseProgram::Const(0), vec![]);
        let q = Program::icsr(BaseProgram::Const(1), vec![]);
        assert!(evaluate(&[p, q], &g, &sum_selection()).is_err());
    }
}
