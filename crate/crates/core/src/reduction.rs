//! The three reduction steps and the coregularity classifier built on them.
//!
//! * **RI** deletes a loopless vertex `v` when the dimensions at the sources
//!   of its incoming arrows, or at the targets of its outgoing arrows, sum to
//!   at most `α_v`; every (incoming, outgoing) pair becomes a composite arrow.
//! * **RII** deletes all loops at a vertex of dimension 1, splitting off one
//!   free polynomial variable per loop.
//! * **RIII** deletes the single loop at a vertex of dimension `k ≥ 2` whose
//!   only incoming (or only outgoing) arrow connects to a dimension-1 vertex,
//!   replacing that arrow by `k` parallel copies and splitting off `k`
//!   variables.
//!
//! A setting is coregular iff every strongly connected component reduces to a
//! lone vertex, a lone vertex with one loop, or a dimension-2 vertex with two
//! loops.

use std::fmt;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::quiver::{scc_decompose, strip_zero_vertices, Arrow, QuiverSetting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StepKind {
    RI,
    RII,
    RIII,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::RI => "RI",
            StepKind::RII => "RII",
            StepKind::RIII => "RIII",
        })
    }
}

/// Which arrow of an RIII vertex connects it to the dimension-1 neighbour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Incoming,
    Outgoing,
}

/// One applied rewriting step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ReductionStep {
    /// RI at `vertex`; `created` lists the composite arrows by identifier.
    #[serde(rename = "RI")]
    RemoveVertex {
        vertex: String,
        created: Vec<(String, String)>,
    },
    /// RII at `vertex`, removing `loops` loops.
    #[serde(rename = "RII")]
    RemoveLoops { vertex: String, loops: u64 },
    /// RIII at `vertex` of dimension `dim`.
    #[serde(rename = "RIII")]
    RemoveHigherLoop {
        vertex: String,
        orientation: Orientation,
        dim: u64,
    },
}

impl ReductionStep {
    pub fn kind(&self) -> StepKind {
        match self {
            ReductionStep::RemoveVertex { .. } => StepKind::RI,
            ReductionStep::RemoveLoops { .. } => StepKind::RII,
            ReductionStep::RemoveHigherLoop { .. } => StepKind::RIII,
        }
    }

    pub fn vertex(&self) -> &str {
        match self {
            ReductionStep::RemoveVertex { vertex, .. }
            | ReductionStep::RemoveLoops { vertex, .. }
            | ReductionStep::RemoveHigherLoop { vertex, .. } => vertex,
        }
    }

    /// Number of free polynomial variables this step splits off.
    pub fn split_off(&self) -> u64 {
        match self {
            ReductionStep::RemoveVertex { .. } => 0,
            ReductionStep::RemoveLoops { loops, .. } => *loops,
            ReductionStep::RemoveHigherLoop { dim, .. } => *dim,
        }
    }

    /// Re-applies this step to `s`, checking that it is still applicable and
    /// produces the recorded detail.
    pub fn apply(&self, s: &QuiverSetting) -> Result<QuiverSetting> {
        let v = s.quiver().require_index(self.vertex())?;
        let (next, step) = match self.kind() {
            StepKind::RI => apply_ri_at(s, v)?,
            StepKind::RII => apply_rii_at(s, v)?,
            StepKind::RIII => apply_riii_at(s, v)?,
        };
        if &step != self {
            return Err(QuiverError::Precondition(format!(
                "replaying {self} produced {step}"
            )));
        }
        Ok(next)
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::RemoveVertex { vertex, created } => {
                write!(f, "RI@{vertex} created [")?;
                for (i, (s, t)) in created.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}->{t}")?;
                }
                write!(f, "]")
            }
            ReductionStep::RemoveLoops { vertex, loops } => write!(f, "RII@{vertex} k={loops}"),
            ReductionStep::RemoveHigherLoop {
                vertex,
                orientation,
                dim,
            } => {
                let side = match orientation {
                    Orientation::Incoming => "incoming",
                    Orientation::Outgoing => "outgoing",
                };
                write!(f, "RIII@{vertex} {side} k={dim}")
            }
        }
    }
}

/// Ordered record of a reduction run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Free polynomial variables split off by RII and RIII steps.
    pub polynomial_part: u64,
    #[serde(skip)]
    pub final_setting: QuiverSetting,
}

impl ReductionTrace {
    /// Applies the recorded steps to `initial`.
    pub fn replay(&self, initial: &QuiverSetting) -> Result<QuiverSetting> {
        self.steps
            .iter()
            .try_fold(initial.clone(), |s, step| step.apply(&s))
    }
}

/// Order in which applicable steps are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Each round takes the first applicable RI in vertex order, else the
    /// first RII, else the first RIII.
    Canonical,
    /// Picks uniformly among all applicable steps with a seeded generator.
    Randomized(u64),
}

/// The normal forms that certify coregularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum TerminalKind {
    /// A lone vertex of dimension `dim` without arrows.
    T1 { dim: u64 },
    /// A lone vertex of dimension `dim` with one loop.
    T2 { dim: u64 },
    /// A dimension-2 vertex with two loops.
    T3,
}

impl TerminalKind {
    /// Krull dimension of the terminal setting's invariant ring.
    pub fn contribution(&self) -> u64 {
        match self {
            TerminalKind::T1 { .. } => 0,
            TerminalKind::T2 { dim } => *dim,
            TerminalKind::T3 => 5,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TerminalKind::T1 { .. } => "T1",
            TerminalKind::T2 { .. } => "T2",
            TerminalKind::T3 => "T3",
        }
    }
}

impl fmt::Display for TerminalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TerminalKind::T1 { dim } | TerminalKind::T2 { dim } => {
                write!(f, "{}(k={dim})", self.label())
            }
            TerminalKind::T3 => f.write_str("T3"),
        }
    }
}

fn incoming_dim_sum(s: &QuiverSetting, v: usize) -> u128 {
    s.quiver()
        .arrows()
        .iter()
        .filter(|a| a.target == v)
        .map(|a| s.dim(a.source) as u128)
        .sum()
}

fn outgoing_dim_sum(s: &QuiverSetting, v: usize) -> u128 {
    s.quiver()
        .arrows()
        .iter()
        .filter(|a| a.source == v)
        .map(|a| s.dim(a.target) as u128)
        .sum()
}

pub(crate) fn ri_applicable_at(s: &QuiverSetting, v: usize) -> bool {
    if s.quiver().loops(v) > 0 {
        return false;
    }
    let dim = s.dim(v) as u128;
    incoming_dim_sum(s, v) <= dim || outgoing_dim_sum(s, v) <= dim
}

pub(crate) fn rii_applicable_at(s: &QuiverSetting, v: usize) -> bool {
    s.dim(v) == 1 && s.quiver().loops(v) > 0
}

pub(crate) fn riii_orientation_at(s: &QuiverSetting, v: usize) -> Option<Orientation> {
    if s.dim(v) < 2 || s.quiver().loops(v) != 1 {
        return None;
    }
    let arrows = s.quiver().arrows();
    let single_dim_one = |pick: &dyn Fn(&Arrow) -> Option<usize>| {
        let mut ends = arrows.iter().filter_map(pick);
        matches!((ends.next(), ends.next()), (Some(w), None) if s.dim(w) == 1)
    };
    if single_dim_one(&|a| (a.target == v && a.source != v).then_some(a.source)) {
        Some(Orientation::Incoming)
    } else if single_dim_one(&|a| (a.source == v && a.target != v).then_some(a.target)) {
        Some(Orientation::Outgoing)
    } else {
        None
    }
}

fn not_applicable(step: &'static str, s: &QuiverSetting, v: usize) -> QuiverError {
    QuiverError::NotApplicable {
        step,
        vertex: s.quiver().id(v).to_owned(),
    }
}

fn apply_ri_at(s: &QuiverSetting, v: usize) -> Result<(QuiverSetting, ReductionStep)> {
    if !ri_applicable_at(s, v) {
        return Err(not_applicable("RI", s, v));
    }
    let q = s.quiver();
    let sources: Vec<usize> = q
        .arrows()
        .iter()
        .filter(|a| a.target == v)
        .map(|a| a.source)
        .collect();
    let targets: Vec<usize> = q
        .arrows()
        .iter()
        .filter(|a| a.source == v)
        .map(|a| a.target)
        .collect();
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let mut arrows: Vec<Arrow> = q
        .arrows()
        .iter()
        .filter(|a| a.source != v && a.target != v)
        .map(|a| Arrow::new(shift(a.source), shift(a.target)))
        .collect();
    let mut created = Vec::with_capacity(sources.len() * targets.len());
    for &i in &sources {
        for &u in &targets {
            arrows.push(Arrow::new(shift(i), shift(u)));
            created.push((q.id(i).to_owned(), q.id(u).to_owned()));
        }
    }
    let mut vertices = q.vertices().to_vec();
    let removed = vertices.remove(v);
    let mut dims = s.alpha().as_slice().to_vec();
    dims.remove(v);
    let next = QuiverSetting::from_parts(vertices, dims, arrows);
    Ok((
        next,
        ReductionStep::RemoveVertex {
            vertex: removed,
            created,
        },
    ))
}

fn apply_rii_at(s: &QuiverSetting, v: usize) -> Result<(QuiverSetting, ReductionStep)> {
    if !rii_applicable_at(s, v) {
        return Err(not_applicable("RII", s, v));
    }
    let loops = s.quiver().loops(v) as u64;
    let arrows = s
        .quiver()
        .arrows()
        .iter()
        .copied()
        .filter(|a| !(a.is_loop() && a.source == v))
        .collect();
    Ok((
        s.with_arrows(arrows),
        ReductionStep::RemoveLoops {
            vertex: s.quiver().id(v).to_owned(),
            loops,
        },
    ))
}

fn apply_riii_at(s: &QuiverSetting, v: usize) -> Result<(QuiverSetting, ReductionStep)> {
    let orientation = riii_orientation_at(s, v).ok_or_else(|| not_applicable("RIII", s, v))?;
    let k = s.dim(v);
    let is_side_arrow = |a: &Arrow| match orientation {
        Orientation::Incoming => a.target == v && a.source != v,
        Orientation::Outgoing => a.source == v && a.target != v,
    };
    let mut arrows = Vec::with_capacity(s.quiver().arrow_count() + k as usize);
    for a in s.quiver().arrows() {
        if a.is_loop() && a.source == v {
            continue;
        }
        if is_side_arrow(a) {
            arrows.extend(std::iter::repeat_n(*a, k as usize));
        } else {
            arrows.push(*a);
        }
    }
    Ok((
        s.with_arrows(arrows),
        ReductionStep::RemoveHigherLoop {
            vertex: s.quiver().id(v).to_owned(),
            orientation,
            dim: k,
        },
    ))
}

/// Whether RI applies at the vertex with identifier `v`.
pub fn applicable_ri(s: &QuiverSetting, v: &str) -> Result<bool> {
    Ok(ri_applicable_at(s, s.quiver().require_index(v)?))
}

/// Applies RI at `v`; returns the new setting and the step record.
pub fn apply_ri(s: &QuiverSetting, v: &str) -> Result<(QuiverSetting, ReductionStep)> {
    apply_ri_at(s, s.quiver().require_index(v)?)
}

pub fn applicable_rii(s: &QuiverSetting, v: &str) -> Result<bool> {
    Ok(rii_applicable_at(s, s.quiver().require_index(v)?))
}

/// Removes the loops at a dimension-1 vertex; the step records their number.
pub fn apply_rii(s: &QuiverSetting, v: &str) -> Result<(QuiverSetting, ReductionStep)> {
    apply_rii_at(s, s.quiver().require_index(v)?)
}

pub fn applicable_riii(s: &QuiverSetting, v: &str) -> Result<bool> {
    Ok(riii_orientation_at(s, s.quiver().require_index(v)?).is_some())
}

/// Applies RIII at `v`, preferring the incoming orientation when both match.
pub fn apply_riii(s: &QuiverSetting, v: &str) -> Result<(QuiverSetting, ReductionStep)> {
    apply_riii_at(s, s.quiver().require_index(v)?)
}

/// All applicable steps as `(kind, vertex)` pairs, kind-major.
///
/// RI is never offered on a single-vertex setting: deleting the last vertex
/// would leave the empty setting instead of a terminal one.
pub fn applicable_steps(s: &QuiverSetting) -> Vec<(StepKind, usize)> {
    let n = s.vertex_count();
    let mut moves = Vec::new();
    if n > 1 {
        moves.extend((0..n).filter(|&v| ri_applicable_at(s, v)).map(|v| (StepKind::RI, v)));
    }
    moves.extend((0..n).filter(|&v| rii_applicable_at(s, v)).map(|v| (StepKind::RII, v)));
    moves.extend(
        (0..n)
            .filter(|&v| riii_orientation_at(s, v).is_some())
            .map(|v| (StepKind::RIII, v)),
    );
    moves
}

fn first_step(s: &QuiverSetting) -> Option<(StepKind, usize)> {
    let n = s.vertex_count();
    if n > 1 {
        if let Some(v) = (0..n).find(|&v| ri_applicable_at(s, v)) {
            return Some((StepKind::RI, v));
        }
    }
    if let Some(v) = (0..n).find(|&v| rii_applicable_at(s, v)) {
        return Some((StepKind::RII, v));
    }
    (0..n)
        .find(|&v| riii_orientation_at(s, v).is_some())
        .map(|v| (StepKind::RIII, v))
}

/// Applies reduction steps until none applies.
pub fn reduce(s: &QuiverSetting, strategy: Strategy) -> ReductionTrace {
    let mut rng = match strategy {
        Strategy::Randomized(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Canonical => None,
    };
    let mut current = s.clone();
    let mut steps = Vec::new();
    let mut polynomial_part = 0;
    loop {
        let next = match rng.as_mut() {
            None => first_step(&current),
            Some(rng) => applicable_steps(&current).choose(rng).copied(),
        };
        let Some((kind, v)) = next else { break };
        let (reduced, step) = match kind {
            StepKind::RI => apply_ri_at(&current, v),
            StepKind::RII => apply_rii_at(&current, v),
            StepKind::RIII => apply_riii_at(&current, v),
        }
        .expect("selected steps are applicable");
        polynomial_part += step.split_off();
        steps.push(step);
        current = reduced;
    }
    ReductionTrace {
        steps,
        polynomial_part,
        final_setting: current,
    }
}

/// Matches `s` against the three terminal settings.
pub fn is_terminal(s: &QuiverSetting) -> Option<TerminalKind> {
    if s.vertex_count() != 1 {
        return None;
    }
    let dim = s.dim(0);
    match (dim, s.quiver().arrow_count()) {
        (0, _) => None,
        (_, 0) => Some(TerminalKind::T1 { dim }),
        (_, 1) => Some(TerminalKind::T2 { dim }),
        (2, 2) => Some(TerminalKind::T3),
        _ => None,
    }
}

/// Outcome of reducing one strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub setting: QuiverSetting,
    pub trace: ReductionTrace,
    pub terminal: Option<TerminalKind>,
}

/// Coregularity verdict for a whole setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub coregular: bool,
    pub components: Vec<ComponentVerdict>,
}

impl Verdict {
    /// Split-off variables summed over components.
    pub fn polynomial_part(&self) -> u64 {
        self.components.iter().map(|c| c.trace.polynomial_part).sum()
    }

    /// Variables contributed by the matched terminal settings.
    pub fn terminal_contribution(&self) -> u64 {
        self.components
            .iter()
            .filter_map(|c| c.terminal.map(|t| t.contribution()))
            .sum()
    }

    /// Number of polynomial generators of the invariant ring, when coregular.
    pub fn ring_dimension(&self) -> Option<u64> {
        self.coregular
            .then(|| self.polynomial_part() + self.terminal_contribution())
    }
}

/// Decides coregularity with the canonical strategy.
pub fn classify(s: &QuiverSetting) -> Verdict {
    classify_with(s, Strategy::Canonical)
}

pub fn classify_with(s: &QuiverSetting, strategy: Strategy) -> Verdict {
    let genuine = strip_zero_vertices(s);
    let components: Vec<ComponentVerdict> = scc_decompose(&genuine)
        .into_iter()
        .map(|setting| {
            let trace = reduce(&setting, strategy);
            let terminal = is_terminal(&trace.final_setting);
            ComponentVerdict {
                setting,
                trace,
                terminal,
            }
        })
        .collect();
    Verdict {
        coregular: components.iter().all(|c| c.terminal.is_some()),
        components,
    }
}

/// Shorthand for `classify(s).coregular`.
pub fn is_coregular(s: &QuiverSetting) -> bool {
    classify(s).coregular
}
