//! Quivers, dimension vectors, quiver settings and the Euler form.
//!
//! Vertices are identified by opaque strings and kept in lexicographic order;
//! internally every vertex is addressed by its position in that order. Arrows
//! are `(source, target)` index pairs, parallel arrows and loops are stored by
//! repetition, and the arrow list is kept sorted so that structurally equal
//! quivers compare equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{QuiverError, Result};

/// A single arrow, addressed by vertex positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(source: usize, target: usize) -> Self {
        Arrow { source, target }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite directed multigraph with loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex identifiers and arrows given by identifier.
    pub fn new<V, S>(vertices: &[V], arrows: &[(S, S)]) -> Result<Self>
    where
        V: AsRef<str>,
        S: AsRef<str>,
    {
        let ids: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        let lookup: HashMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let mut indexed = Vec::with_capacity(arrows.len());
        for (s, t) in arrows {
            let source = *lookup
                .get(s.as_ref())
                .ok_or_else(|| QuiverError::UnknownVertex(s.as_ref().to_owned()))?;
            let target = *lookup
                .get(t.as_ref())
                .ok_or_else(|| QuiverError::UnknownVertex(t.as_ref().to_owned()))?;
            indexed.push(Arrow::new(source, target));
        }
        Ok(Self::from_indexed(ids, indexed)?.0)
    }

    /// Builds a quiver from identifiers in arbitrary order and arrows indexed
    /// into that order. Returns the quiver together with the permutation
    /// `old position -> canonical position`.
    pub fn from_indexed(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<(Self, Vec<usize>)> {
        let n = vertices.len();
        if let Some(a) = arrows.iter().find(|a| a.source >= n || a.target >= n) {
            return Err(QuiverError::UnknownVertex(format!(
                "#{}",
                a.source.max(a.target)
            )));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        for w in order.windows(2) {
            if vertices[w[0]] == vertices[w[1]] {
                return Err(QuiverError::DuplicateVertex(vertices[w[0]].clone()));
            }
        }
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut slots: Vec<Option<String>> = vertices.into_iter().map(Some).collect();
        let sorted_ids = order
            .iter()
            .map(|&old| slots[old].take().expect("each vertex is moved once"))
            .collect();
        let arrows = arrows
            .into_iter()
            .map(|a| Arrow::new(position[a.source], position[a.target]))
            .collect();
        Ok((Self::from_canonical(sorted_ids, arrows), position))
    }

    /// Internal constructor: identifiers are already sorted and unique.
    pub(crate) fn from_canonical(vertices: Vec<String>, mut arrows: Vec<Arrow>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        arrows.sort_unstable();
        Quiver { vertices, arrows }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    pub(crate) fn require_index(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| QuiverError::UnknownVertex(id.to_owned()))
    }

    /// Number of loops at `v`.
    pub fn loops(&self, v: usize) -> usize {
        self.arrows_between(v, v)
    }

    /// Number of arrows `from -> to`.
    pub fn arrows_between(&self, from: usize, to: usize) -> usize {
        let key = Arrow::new(from, to);
        let lo = self.arrows.partition_point(|a| *a < key);
        let hi = self.arrows.partition_point(|a| *a <= key);
        hi - lo
    }

    /// Arrow counts as a dense matrix indexed `[source][target]`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Distinct successors of every vertex, loops excluded.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for a in &self.arrows {
            if !a.is_loop() && out[a.source].last() != Some(&a.target) {
                out[a.source].push(a.target);
            }
        }
        out
    }

    /// Arrow indices grouped by source vertex.
    pub fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (i, a) in self.arrows.iter().enumerate() {
            out[a.source].push(i);
        }
        out
    }

    /// Keeps the vertices flagged in `keep` and every arrow between them.
    pub fn induced(&self, keep: &[bool]) -> (Quiver, Vec<Option<usize>>) {
        let mut position = vec![None; self.vertex_count()];
        let mut ids = Vec::new();
        for (v, id) in self.vertices.iter().enumerate() {
            if keep[v] {
                position[v] = Some(ids.len());
                ids.push(id.clone());
            }
        }
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| Some(Arrow::new(position[a.source]?, position[a.target]?)))
            .collect();
        (Quiver::from_canonical(ids, arrows), position)
    }

    /// Human-readable label of arrow `i`, e.g. `a->b` or `a->b#1` for the
    /// second of several parallel arrows.
    pub fn arrow_label(&self, i: usize) -> String {
        let a = self.arrows[i];
        let first = self.arrows.partition_point(|b| *b < a);
        let base = format!("{}->{}", self.id(a.source), self.id(a.target));
        if self.arrows_between(a.source, a.target) > 1 {
            format!("{base}#{}", i - first)
        } else {
            base
        }
    }
}

/// Non-negative dimensions indexed by vertex position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct DimensionVector(Vec<u64>);

impl DimensionVector {
    pub fn new(dims: Vec<u64>) -> Self {
        DimensionVector(dims)
    }

    pub fn zeros(n: usize) -> Self {
        DimensionVector(vec![0; n])
    }

    /// The all-ones vector.
    pub fn ones(n: usize) -> Self {
        DimensionVector(vec![1; n])
    }

    /// Indicator vector of vertex `v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = vec![0; n];
        d[v] = 1;
        DimensionVector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    /// Total dimension `Σ_v α_v`.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn is_ones(&self) -> bool {
        self.0.iter().all(|&d| d == 1)
    }

    pub fn support(&self) -> Vec<bool> {
        self.0.iter().map(|&d| d > 0).collect()
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &DimensionVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: u64) -> DimensionVector {
        DimensionVector(self.0.iter().map(|d| d * k).collect())
    }

    pub fn checked_sub(&self, other: &DimensionVector) -> Option<DimensionVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimensionVector)
    }

    pub fn add(&self, other: &DimensionVector) -> DimensionVector {
        DimensionVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Restricts to the positions flagged in `keep`.
    pub fn restrict(&self, keep: &[bool]) -> DimensionVector {
        DimensionVector(
            self.0
                .iter()
                .zip(keep)
                .filter(|(_, k)| **k)
                .map(|(d, _)| *d)
                .collect(),
        )
    }
}

impl From<Vec<u64>> for DimensionVector {
    fn from(v: Vec<u64>) -> Self {
        DimensionVector(v)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A quiver together with a dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuiverSetting {
    quiver: Quiver,
    alpha: DimensionVector,
}

impl QuiverSetting {
    pub fn new(quiver: Quiver, alpha: DimensionVector) -> Result<Self> {
        if quiver.vertex_count() != alpha.len() {
            return Err(QuiverError::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: alpha.len(),
            });
        }
        Ok(QuiverSetting { quiver, alpha })
    }

    pub fn builder() -> SettingBuilder {
        SettingBuilder::default()
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn alpha(&self) -> &DimensionVector {
        &self.alpha
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn is_empty(&self) -> bool {
        self.quiver.vertex_count() == 0
    }

    pub fn dim(&self, v: usize) -> u64 {
        self.alpha.get(v)
    }

    pub fn dim_of(&self, id: &str) -> Option<u64> {
        self.quiver.index_of(id).map(|v| self.alpha.get(v))
    }

    /// No vertex has dimension zero.
    pub fn genuine(&self) -> bool {
        self.alpha.as_slice().iter().all(|&d| d > 0)
    }

    pub fn euler(&self) -> EulerForm {
        euler_matrix(&self.quiver)
    }

    /// Full subquiver setting on the flagged vertices.
    pub fn restrict(&self, keep: &[bool]) -> QuiverSetting {
        let (quiver, _) = self.quiver.induced(keep);
        QuiverSetting {
            quiver,
            alpha: self.alpha.restrict(keep),
        }
    }

    pub(crate) fn from_parts(vertices: Vec<String>, dims: Vec<u64>, arrows: Vec<Arrow>) -> Self {
        QuiverSetting {
            quiver: Quiver::from_canonical(vertices, arrows),
            alpha: DimensionVector(dims),
        }
    }

    /// Same vertices and dimensions with a replaced arrow list.
    pub(crate) fn with_arrows(&self, arrows: Vec<Arrow>) -> Self {
        QuiverSetting {
            quiver: Quiver::from_canonical(self.quiver.vertices.clone(), arrows),
            alpha: self.alpha.clone(),
        }
    }
}

impl fmt::Display for QuiverSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quiver;
        write!(f, "[")?;
        for v in 0..q.vertex_count() {
            if v > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}/{}", q.id(v), self.alpha.get(v))?;
        }
        if q.arrow_count() > 0 {
            write!(f, ";")?;
        }
        let adj = q.adjacency();
        for (s, row) in adj.iter().enumerate() {
            for (t, &k) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " {}->{}", q.id(s), q.id(t))?;
                    if k > 1 {
                        write!(f, "x{k}")?;
                    }
                }
            }
        }
        write!(f, "]")
    }
}

/// Incremental construction of a [`QuiverSetting`] by vertex identifier.
#[derive(Debug, Default, Clone)]
pub struct SettingBuilder {
    vertices: Vec<(String, u64)>,
    arrows: Vec<(String, String, usize)>,
}

impl SettingBuilder {
    pub fn vertex(mut self, id: impl Into<String>, dim: u64) -> Self {
        self.vertices.push((id.into(), dim));
        self
    }

    pub fn arrow(self, from: impl Into<String>, to: impl Into<String>) -> Self {
        self.arrows_n(from, to, 1)
    }

    pub fn arrows_n(mut self, from: impl Into<String>, to: impl Into<String>, count: usize) -> Self {
        self.arrows.push((from.into(), to.into(), count));
        self
    }

    pub fn loops(self, at: impl Into<String>, count: usize) -> Self {
        let at = at.into();
        self.arrows_n(at.clone(), at, count)
    }

    pub fn build(self) -> Result<QuiverSetting> {
        let lookup: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, (id, _))| (id.as_str(), i))
            .collect();
        let mut arrows = Vec::new();
        for (s, t, k) in &self.arrows {
            let source = *lookup
                .get(s.as_str())
                .ok_or_else(|| QuiverError::UnknownVertex(s.clone()))?;
            let target = *lookup
                .get(t.as_str())
                .ok_or_else(|| QuiverError::UnknownVertex(t.clone()))?;
            arrows.extend(std::iter::repeat_n(Arrow::new(source, target), *k));
        }
        let ids = self.vertices.iter().map(|(id, _)| id.clone()).collect();
        let (quiver, position) = Quiver::from_indexed(ids, arrows)?;
        let mut dims = vec![0; quiver.vertex_count()];
        for (old, (_, d)) in self.vertices.iter().enumerate() {
            dims[position[old]] = *d;
        }
        QuiverSetting::new(quiver, DimensionVector(dims))
    }
}

/// The Euler form matrix `m_ij = δ_ij − #{arrows j -> i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerForm {
    matrix: Vec<Vec<i64>>,
}

impl EulerForm {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    /// Evaluates `aᵀ M b` exactly.
    pub fn chi(&self, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
        let n = self.size();
        for v in [a, b] {
            if v.len() != n {
                return Err(QuiverError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let mut total: i128 = 0;
        for (i, row) in self.matrix.iter().enumerate() {
            let ai = a.get(i) as i128;
            if ai == 0 {
                continue;
            }
            for (j, &m) in row.iter().enumerate() {
                let term = ai
                    .checked_mul(m as i128)
                    .and_then(|x| x.checked_mul(b.get(j) as i128))
                    .ok_or(QuiverError::Overflow)?;
                total = total.checked_add(term).ok_or(QuiverError::Overflow)?;
            }
        }
        i64::try_from(total).map_err(|_| QuiverError::Overflow)
    }

    /// `χ(α, ε_v)`: α_v minus the dimensions at the targets of arrows leaving `v`.
    pub fn chi_into(&self, a: &DimensionVector, v: usize) -> Result<i64> {
        self.chi(a, &DimensionVector::unit(self.size(), v))
    }

    /// `χ(ε_v, α)`: α_v minus the dimensions at the sources of arrows entering `v`.
    pub fn chi_from(&self, v: usize, a: &DimensionVector) -> Result<i64> {
        self.chi(&DimensionVector::unit(self.size(), v), a)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// Recovers the quiver the matrix was built from.
    pub fn to_quiver(&self, vertices: &[String]) -> Result<Quiver> {
        let n = self.size();
        if vertices.len() != n {
            return Err(QuiverError::DimensionMismatch {
                expected: n,
                found: vertices.len(),
            });
        }
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let count = i64::from(i == j) - self.matrix[i][j];
                if count < 0 {
                    return Err(QuiverError::Precondition(format!(
                        "entry ({i},{j}) is not an Euler form entry"
                    )));
                }
                arrows.extend(std::iter::repeat_n(Arrow::new(j, i), count as usize));
            }
        }
        Ok(Quiver::from_indexed(vertices.to_vec(), arrows)?.0)
    }
}

pub fn euler_matrix(q: &Quiver) -> EulerForm {
    let n = q.vertex_count();
    let mut matrix: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for a in q.arrows() {
        matrix[a.target][a.source] -= 1;
    }
    EulerForm { matrix }
}

/// `χ_Q(a, b)` for the quiver of `s`.
pub fn chi(e: &EulerForm, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
    e.chi(a, b)
}

/// Vertex sets of the strongly connected components, each sorted, ordered by
/// smallest member.
pub fn strongly_connected_components(q: &Quiver) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        succ: &'a [Vec<usize>],
        index: usize,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }

    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.idx[v] = Some(self.index);
            self.low[v] = self.index;
            self.index += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for &w in &self.succ[v] {
                match self.idx[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.idx[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("v is on the stack");
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                self.comps.push(comp);
            }
        }
    }

    let succ = q.successors();
    let n = q.vertex_count();
    let mut t = Tarjan {
        succ: &succ,
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comps: Vec::new(),
    };
    for v in 0..n {
        if t.idx[v].is_none() {
            t.visit(v);
        }
    }
    t.comps.sort_unstable_by_key(|c| c[0]);
    t.comps
}

pub fn is_strongly_connected(q: &Quiver) -> bool {
    q.vertex_count() <= 1 || strongly_connected_components(q).len() == 1
}

/// Splits a setting into its strongly connected components; arrows between
/// different components are dropped.
pub fn scc_decompose(s: &QuiverSetting) -> Vec<QuiverSetting> {
    let n = s.vertex_count();
    strongly_connected_components(s.quiver())
        .into_iter()
        .map(|comp| {
            let mut keep = vec![false; n];
            for v in comp {
                keep[v] = true;
            }
            s.restrict(&keep)
        })
        .collect()
}

/// Removes every vertex of dimension zero together with its arrows.
pub fn strip_zero_vertices(s: &QuiverSetting) -> QuiverSetting {
    if s.genuine() {
        return s.clone();
    }
    s.restrict(&s.alpha().support())
}

/// Subquiver test by vertex identifier: `small`'s vertices are among `big`'s
/// and its arrows form a sub-multiset of `big`'s.
pub fn is_subquiver(small: &Quiver, big: &Quiver) -> bool {
    let mut map = Vec::with_capacity(small.vertex_count());
    for id in small.vertices() {
        match big.index_of(id) {
            Some(v) => map.push(v),
            None => return false,
        }
    }
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in small.arrows() {
        *counts.entry((map[a.source], map[a.target])).or_default() += 1;
    }
    counts
        .into_iter()
        .all(|((s, t), k)| big.arrows_between(s, t) >= k)
}

/// Whether arrow counts `i -> j` and `j -> i` agree for every pair.
pub fn is_symmetric(q: &Quiver) -> bool {
    let adj = q.adjacency();
    let n = q.vertex_count();
    (0..n).all(|i| (0..i).all(|j| adj[i][j] == adj[j][i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setting(vs: &[(&str, u64)], arrows: &[(&str, &str)]) -> QuiverSetting {
        let mut b = QuiverSetting::builder();
        for (id, d) in vs {
            b = b.vertex(*id, *d);
        }
        for (s, t) in arrows {
            b = b.arrow(*s, *t);
        }
        b.build().unwrap()
    }

    #[test]
    fn euler_matrix_examples() {
        let one_loop = setting(&[("v", 1)], &[("v", "v")]);
        assert_eq!(one_loop.euler().matrix(), &[vec![0]]);

        let arrow = setting(&[("a", 1), ("b", 1)], &[("a", "b")]);
        assert_eq!(arrow.euler().matrix(), &[vec![1, 0], vec![-1, 1]]);

        let two_cycle = setting(&[("a", 1), ("b", 1)], &[("a", "b"), ("b", "a")]);
        assert_eq!(two_cycle.euler().matrix(), &[vec![1, -1], vec![-1, 1]]);
    }

    #[test]
    fn chi_examples() {
        let two_loops = QuiverSetting::builder().vertex("v", 2).loops("v", 2).build().unwrap();
        let e = two_loops.euler();
        let a = DimensionVector::new(vec![2]);
        assert_eq!(e.chi(&a, &a).unwrap(), -4);

        let path = setting(&[("a", 3), ("b", 1), ("c", 2)], &[("a", "b"), ("b", "c")]);
        let e = path.euler();
        for v in 0..3 {
            let ev = DimensionVector::unit(3, v);
            assert_eq!(e.chi(&ev, &ev).unwrap(), 1);
        }

        let cycle = setting(
            &[("a", 1), ("b", 1), ("c", 1)],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        );
        let ones = DimensionVector::ones(3);
        assert_eq!(cycle.euler().chi(&ones, &ones).unwrap(), 0);
    }

    #[test]
    fn chi_rejects_mismatched_vectors() {
        let s = setting(&[("a", 1), ("b", 1)], &[("a", "b")]);
        let err = s
            .euler()
            .chi(&DimensionVector::ones(2), &DimensionVector::ones(3))
            .unwrap_err();
        assert_eq!(err, QuiverError::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn chi_handles_large_dimensions() {
        let s = QuiverSetting::builder()
            .vertex("a", 10_000)
            .vertex("b", 10_000)
            .arrows_n("a", "b", 500)
            .arrows_n("b", "a", 500)
            .build()
            .unwrap();
        let chi = s.euler().chi(s.alpha(), s.alpha()).unwrap();
        assert_eq!(chi, 2 * 10_000 * 10_000 - 1000 * 10_000 * 10_000);
    }

    #[test]
    fn canonical_order_makes_equal_quivers_equal() {
        let q1 = Quiver::new(&["b", "a"], &[("b", "a"), ("a", "b"), ("a", "b")]).unwrap();
        let q2 = Quiver::new(&["a", "b"], &[("a", "b"), ("b", "a"), ("a", "b")]).unwrap();
        assert_eq!(q1, q2);
        assert_eq!(q1.vertices(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Quiver::new(&["a", "a"], &[] as &[(&str, &str)]).unwrap_err(),
            QuiverError::DuplicateVertex("a".into())
        );
        assert_eq!(
            Quiver::new(&["a"], &[("a", "z")]).unwrap_err(),
            QuiverError::UnknownVertex("z".into())
        );
    }

    #[test]
    fn scc_examples() {
        let cycle = setting(
            &[("a", 1), ("b", 2), ("c", 1)],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        );
        assert_eq!(scc_decompose(&cycle), vec![cycle.clone()]);

        let arrow = setting(&[("a", 1), ("b", 2)], &[("a", "b")]);
        let comps = scc_decompose(&arrow);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.vertex_count() == 1 && c.quiver().arrow_count() == 0));

        let mixed = setting(
            &[("a", 1), ("b", 2), ("c", 3)],
            &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")],
        );
        let comps = scc_decompose(&mixed);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], setting(&[("a", 1), ("b", 2)], &[("a", "b"), ("b", "a")]));
        assert_eq!(comps[1], setting(&[("c", 3)], &[("c", "c")]));
    }

    #[test]
    fn strip_zero_examples() {
        let genuine = setting(&[("a", 1), ("b", 2)], &[("a", "b")]);
        assert_eq!(strip_zero_vertices(&genuine), genuine);

        let s = setting(&[("a", 0), ("b", 2)], &[("a", "b"), ("b", "b")]);
        assert_eq!(strip_zero_vertices(&s), setting(&[("b", 2)], &[("b", "b")]));

        let zeros = setting(&[("a", 0), ("b", 0)], &[("a", "b")]);
        assert!(strip_zero_vertices(&zeros).is_empty());
    }

    #[test]
    fn subquiver_examples() {
        let two_cycle = Quiver::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let arrow = Quiver::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(is_subquiver(&two_cycle, &two_cycle));
        assert!(!is_subquiver(&two_cycle, &arrow));
        assert!(is_subquiver(&arrow, &two_cycle));

        let one = Quiver::new(&["v"], &[("v", "v")]).unwrap();
        let two = Quiver::new(&["v"], &[("v", "v"), ("v", "v")]).unwrap();
        assert!(is_subquiver(&one, &two));
        assert!(!is_subquiver(&two, &one));
    }

    #[test]
    fn symmetry_examples() {
        let two_cycle = Quiver::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(is_symmetric(&two_cycle));
        assert!(euler_matrix(&two_cycle).is_symmetric());
        let arrow = Quiver::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(!is_symmetric(&arrow));
        let loops = Quiver::new(&["v"], &[("v", "v"), ("v", "v"), ("v", "v")]).unwrap();
        assert!(is_symmetric(&loops));
    }

    #[test]
    fn arrow_labels_distinguish_parallel_arrows() {
        let q = Quiver::new(&["a", "b"], &[("a", "b"), ("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(q.arrow_label(0), "a->b#0");
        assert_eq!(q.arrow_label(1), "a->b#1");
        assert_eq!(q.arrow_label(2), "b->a");
    }
}
