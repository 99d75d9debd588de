//! Existence of simple representations and decompositions of a dimension
//! vector into simple dimension vectors.

use std::fmt;

use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::quiver::{is_strongly_connected, strip_zero_vertices, DimensionVector, Quiver, QuiverSetting};

/// How many isomorphism classes of simples a dimension vector carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassCount {
    Zero,
    One,
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleClassInfo {
    pub exists: bool,
    pub class_count: ClassCount,
    /// `1 − χ(α, α)`, the dimension of the quotient, when simples exist.
    pub iss_dimension: Option<u64>,
}

impl SimpleClassInfo {
    const NONE: SimpleClassInfo = SimpleClassInfo {
        exists: false,
        class_count: ClassCount::Zero,
        iss_dimension: None,
    };
}

/// The quiver shapes whose only simple dimension vector is the all-ones one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialForm {
    LoneVertex,
    LoneLoop,
    OrientedCycle,
}

pub fn special_form(q: &Quiver) -> Option<SpecialForm> {
    let n = q.vertex_count();
    match (n, q.arrow_count()) {
        (1, 0) => return Some(SpecialForm::LoneVertex),
        (1, 1) => return Some(SpecialForm::LoneLoop),
        _ => {}
    }
    if n < 2 || q.arrow_count() != n {
        return None;
    }
    let mut indegree = vec![0; n];
    let mut outdegree = vec![0; n];
    for a in q.arrows() {
        if a.is_loop() {
            return None;
        }
        outdegree[a.source] += 1;
        indegree[a.target] += 1;
    }
    let one_in_one_out = indegree.iter().chain(&outdegree).all(|&d| d == 1);
    (one_in_one_out && is_strongly_connected(q)).then_some(SpecialForm::OrientedCycle)
}

/// Decides whether simple representations of dimension `α` exist.
pub fn has_simple(s: &QuiverSetting) -> SimpleClassInfo {
    let g = strip_zero_vertices(s);
    if g.is_empty() {
        return SimpleClassInfo::NONE;
    }
    let exists = match special_form(g.quiver()) {
        Some(_) => g.alpha().is_ones(),
        None => is_strongly_connected(g.quiver()) && chi_inequalities_hold(&g),
    };
    if !exists {
        return SimpleClassInfo::NONE;
    }
    let chi = g
        .euler()
        .chi(g.alpha(), g.alpha())
        .expect("alpha matches its own quiver");
    let dim = u64::try_from(1 - chi).expect("simples force χ(α,α) ≤ 1");
    SimpleClassInfo {
        exists: true,
        class_count: if dim == 0 {
            ClassCount::One
        } else {
            ClassCount::Infinite
        },
        iss_dimension: Some(dim),
    }
}

/// `χ(α,ε_v) ≤ 0` and `χ(ε_v,α) ≤ 0` at every vertex.
pub fn chi_inequalities_hold(s: &QuiverSetting) -> bool {
    let e = s.euler();
    (0..s.vertex_count()).all(|v| {
        e.chi_into(s.alpha(), v).is_ok_and(|x| x <= 0) && e.chi_from(v, s.alpha()).is_ok_and(|x| x <= 0)
    })
}

fn vectors_up_to(bound: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    let mut current = Some(vec![0u64; bound.len()]);
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < bound[i] {
                next[i] += 1;
                current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    })
}

fn sort_by_size_then_lex(vs: &mut [DimensionVector]) {
    vs.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
}

/// Every dimension vector with entries in `0..=cap` (not all zero) whose
/// support carries simple representations, ordered by size then
/// lexicographically.
pub fn enumerate_simple_dimvectors(q: &Quiver, cap: u64) -> Result<Vec<DimensionVector>> {
    if cap == 0 {
        return Err(QuiverError::Precondition("cap must be at least 1".into()));
    }
    let bound = vec![cap; q.vertex_count()];
    let mut out: Vec<DimensionVector> = vectors_up_to(&bound)
        .map(DimensionVector::new)
        .filter(|beta| !beta.is_zero())
        .filter(|beta| {
            let s = QuiverSetting::new(q.clone(), beta.clone()).expect("lengths agree");
            has_simple(&s).exists
        })
        .collect();
    sort_by_size_then_lex(&mut out);
    Ok(out)
}

/// One simple factor `S^{⊕ multiplicity}` with `dim S = beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub beta: DimensionVector,
    pub multiplicity: u64,
}

/// A semisimple type `α = Σ multiplicity · beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
}

impl Decomposition {
    pub fn new(factors: Vec<(DimensionVector, u64)>) -> Self {
        Decomposition {
            factors: factors
                .into_iter()
                .map(|(beta, multiplicity)| Factor { beta, multiplicity })
                .collect(),
        }
    }

    /// `Σ_v α_v · ε_v`.
    pub fn all_units(alpha: &DimensionVector) -> Self {
        let n = alpha.len();
        Decomposition::new(
            (0..n)
                .filter(|&v| alpha.get(v) > 0)
                .map(|v| (DimensionVector::unit(n, v), alpha.get(v)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total(&self, n: usize) -> DimensionVector {
        self.factors
            .iter()
            .fold(DimensionVector::zeros(n), |acc, f| acc.add(&f.beta.scaled(f.multiplicity)))
    }

    /// Checks that the factors sum to `α`, are simple, have positive
    /// multiplicities, and that a dimension vector with a unique simple
    /// class is used by at most one factor.
    pub fn validate(&self, s: &QuiverSetting) -> Result<()> {
        let n = s.vertex_count();
        let invalid = |msg: String| Err(QuiverError::InvalidDecomposition(msg));
        let mut unique_used: Vec<&DimensionVector> = Vec::new();
        for f in &self.factors {
            if f.beta.len() != n {
                return invalid(format!("{} has {} entries, expected {n}", f.beta, f.beta.len()));
            }
            if f.multiplicity == 0 {
                return invalid(format!("{} has multiplicity zero", f.beta));
            }
            let info = has_simple(&QuiverSetting::new(s.quiver().clone(), f.beta.clone())?);
            if !info.exists {
                return invalid(format!("no simple representation of dimension {}", f.beta));
            }
            if info.class_count == ClassCount::One {
                if unique_used.contains(&&f.beta) {
                    return invalid(format!(
                        "{} has a single simple class but appears in several factors",
                        f.beta
                    ));
                }
                unique_used.push(&f.beta);
            }
        }
        if self.total(n) != *s.alpha() {
            return invalid(format!("factors sum to {}, not {}", self.total(n), s.alpha()));
        }
        Ok(())
    }

    /// Parses `"2x(1,0)+1x(0,1)"`; `×` and `*` are accepted for `x`, and a
    /// missing coefficient means 1.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = |msg: String| QuiverError::InvalidDecomposition(msg);
        let mut factors = Vec::new();
        for term in text.split('+').map(str::trim) {
            let open = term
                .find('(')
                .ok_or_else(|| bad(format!("term `{term}` has no `(`")))?;
            let coef = term[..open].trim().trim_end_matches(['x', '×', '*']).trim();
            let multiplicity = if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>()
                    .map_err(|_| bad(format!("bad coefficient `{coef}` in `{term}`")))?
            };
            let body = term[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| bad(format!("term `{term}` has no closing `)`")))?;
            let dims = body
                .split(',')
                .map(|d| d.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad(format!("bad dimension vector in `{term}`")))?;
            if dims.len() != n {
                return Err(bad(format!("`{term}` has {} entries, expected {n}", dims.len())));
            }
            factors.push((DimensionVector::new(dims), multiplicity));
        }
        Ok(Decomposition::new(factors))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}x{}", factor.multiplicity, factor.beta)?;
        }
        Ok(())
    }
}

/// Bounded enumeration result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decompositions {
    pub items: Vec<Decomposition>,
    pub truncated: bool,
}

pub const DEFAULT_DECOMPOSITION_LIMIT: usize = 10_000;

/// All semisimple types of `α` up to `limit` results.
///
/// Candidate factors are the simple vectors `β ≤ α` ordered by decreasing
/// size, so the trivial decomposition `1·α` comes first when `α` is simple.
pub fn enumerate_decompositions(s: &QuiverSetting, limit: usize) -> Decompositions {
    let n = s.vertex_count();
    let mut simples: Vec<(DimensionVector, ClassCount)> = vectors_up_to(s.alpha().as_slice())
        .map(DimensionVector::new)
        .filter(|beta| !beta.is_zero())
        .filter_map(|beta| {
            let info = has_simple(&QuiverSetting::new(s.quiver().clone(), beta.clone()).ok()?);
            info.exists.then_some((beta, info.class_count))
        })
        .collect();
    simples.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));

    let mut candidates: Vec<(usize, u64)> = Vec::new();
    for (i, (beta, _)) in simples.iter().enumerate() {
        let max = (0..n)
            .filter(|&v| beta.get(v) > 0)
            .map(|v| s.alpha().get(v) / beta.get(v))
            .min()
            .unwrap_or(0);
        candidates.extend((1..=max).rev().map(|a| (i, a)));
    }

    struct Search<'a> {
        simples: &'a [(DimensionVector, ClassCount)],
        candidates: &'a [(usize, u64)],
        limit: usize,
        items: Vec<Decomposition>,
        truncated: bool,
        chosen: Vec<(usize, u64)>,
    }

    impl Search<'_> {
        fn go(&mut self, start: usize, remaining: &DimensionVector) {
            if self.truncated {
                return;
            }
            if remaining.is_zero() {
                if self.items.len() == self.limit {
                    self.truncated = true;
                    return;
                }
                self.items.push(Decomposition::new(
                    self.chosen
                        .iter()
                        .map(|&(i, a)| (self.simples[i].0.clone(), a))
                        .collect(),
                ));
                return;
            }
            for c in start..self.candidates.len() {
                let (i, a) = self.candidates[c];
                let (beta, count) = &self.simples[i];
                if *count == ClassCount::One && self.chosen.iter().any(|&(j, _)| j == i) {
                    continue;
                }
                let Some(rest) = remaining.checked_sub(&beta.scaled(a)) else {
                    continue;
                };
                self.chosen.push((i, a));
                self.go(c, &rest);
                self.chosen.pop();
                if self.truncated {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        simples: &simples,
        candidates: &candidates,
        limit,
        items: Vec::new(),
        truncated: false,
        chosen: Vec::new(),
    };
    if !s.alpha().is_zero() {
        search.go(0, s.alpha());
    }
    Decompositions {
        items: search.items,
        truncated: search.truncated,
    }
}
