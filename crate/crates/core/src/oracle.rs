//! Numerical cross-checks on random real representations.
//!
//! The dimension of the quotient equals the generic rank of the Jacobian of
//! the generator map `W ↦ (Tr W_c)_c` over the quasi-primitive cycles. Real
//! Gaussian samples are generic for this purpose since the trace polynomials
//! have real coefficients.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::cycles::{default_max_len, quasi_primitive_cycles, Cycle};
use crate::error::{QuiverError, Result};
use crate::quiver::{strip_zero_vertices, DimensionVector, Quiver, QuiverSetting};

pub const DEFAULT_SAMPLES: usize = 8;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_CONDITION: f64 = 1e6;

fn gaussian(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| StandardNormal.sample(rng))
}

/// One matrix per arrow, of shape `α_target × α_source`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    alpha: DimensionVector,
    matrices: Vec<DMatrix<f64>>,
}

impl Representation {
    pub fn new(q: &Quiver, alpha: DimensionVector, matrices: Vec<DMatrix<f64>>) -> Result<Self> {
        let r = Representation { alpha, matrices };
        r.check(q)?;
        Ok(r)
    }

    pub fn zero(s: &QuiverSetting) -> Self {
        let matrices = s
            .quiver()
            .arrows()
            .iter()
            .map(|a| DMatrix::zeros(s.dim(a.target) as usize, s.dim(a.source) as usize))
            .collect();
        Representation {
            alpha: s.alpha().clone(),
            matrices,
        }
    }

    /// Entries i.i.d. standard normal.
    pub fn random(s: &QuiverSetting, rng: &mut ChaCha8Rng) -> Self {
        let matrices = s
            .quiver()
            .arrows()
            .iter()
            .map(|a| gaussian(s.dim(a.target) as usize, s.dim(a.source) as usize, rng))
            .collect();
        Representation {
            alpha: s.alpha().clone(),
            matrices,
        }
    }

    /// The simple `S_v` of dimension `ε_v` with every arrow zero.
    pub fn vertex_simple(q: &Quiver, v: usize) -> Self {
        let alpha = DimensionVector::unit(q.vertex_count(), v);
        let s = QuiverSetting::new(q.clone(), alpha).expect("unit vector matches");
        Self::zero(&s)
    }

    /// The `ε_v`-dimensional representation `L` with `value` on every loop
    /// at `v` and zero elsewhere.
    pub fn loop_simple(q: &Quiver, v: usize, value: f64) -> Self {
        let mut r = Self::vertex_simple(q, v);
        for (m, a) in r.matrices.iter_mut().zip(q.arrows()) {
            if a.is_loop() && a.source == v {
                m[(0, 0)] = value;
            }
        }
        r
    }

    pub fn alpha(&self) -> &DimensionVector {
        &self.alpha
    }

    pub fn matrices(&self) -> &[DMatrix<f64>] {
        &self.matrices
    }

    pub fn matrix(&self, arrow: usize) -> &DMatrix<f64> {
        &self.matrices[arrow]
    }

    /// Number of real coordinates of the representation space.
    pub fn coordinate_count(&self) -> usize {
        self.matrices.iter().map(|m| m.len()).sum()
    }

    fn check(&self, q: &Quiver) -> Result<()> {
        if self.alpha.len() != q.vertex_count() || self.matrices.len() != q.arrow_count() {
            return Err(QuiverError::Shape(format!(
                "representation has {} matrices over {} vertices, quiver has {} arrows over {} vertices",
                self.matrices.len(),
                self.alpha.len(),
                q.arrow_count(),
                q.vertex_count()
            )));
        }
        for (i, (m, a)) in self.matrices.iter().zip(q.arrows()).enumerate() {
            let expected = (self.alpha.get(a.target) as usize, self.alpha.get(a.source) as usize);
            if m.shape() != expected {
                return Err(QuiverError::Shape(format!(
                    "arrow {} has shape {:?}, expected {:?}",
                    q.arrow_label(i),
                    m.shape(),
                    expected
                )));
            }
        }
        Ok(())
    }

    fn with_entry(&self, arrow: usize, r: usize, c: usize, delta: f64) -> Self {
        let mut out = self.clone();
        out.matrices[arrow][(r, c)] += delta;
        out
    }
}

/// An element of `GL_α`: one invertible block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeElement {
    blocks: Vec<DMatrix<f64>>,
}

fn condition_number(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 1.0;
    }
    let sv = m.singular_values();
    let max = sv.max();
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

impl GaugeElement {
    /// Checks shapes against `alpha` and conditioning against `max_condition`.
    pub fn new(q: &Quiver, alpha: &DimensionVector, blocks: Vec<DMatrix<f64>>, max_condition: f64) -> Result<Self> {
        if blocks.len() != alpha.len() {
            return Err(QuiverError::Shape(format!(
                "{} gauge blocks for {} vertices",
                blocks.len(),
                alpha.len()
            )));
        }
        for (v, b) in blocks.iter().enumerate() {
            let d = alpha.get(v) as usize;
            if b.shape() != (d, d) {
                return Err(QuiverError::Shape(format!(
                    "gauge block at `{}` has shape {:?}, expected ({d}, {d})",
                    q.id(v),
                    b.shape()
                )));
            }
            if condition_number(b) > max_condition {
                return Err(QuiverError::SingularGauge(q.id(v).to_owned()));
            }
        }
        Ok(GaugeElement { blocks })
    }

    pub fn identity(alpha: &DimensionVector) -> Self {
        GaugeElement {
            blocks: alpha
                .as_slice()
                .iter()
                .map(|&d| DMatrix::identity(d as usize, d as usize))
                .collect(),
        }
    }

    /// Gaussian blocks, resampled until their condition number is below
    /// `max_condition`.
    pub fn random(alpha: &DimensionVector, rng: &mut ChaCha8Rng, max_condition: f64) -> Self {
        let blocks = alpha
            .as_slice()
            .iter()
            .map(|&d| loop {
                let b = gaussian(d as usize, d as usize, rng);
                if condition_number(&b) <= max_condition {
                    break b;
                }
            })
            .collect();
        GaugeElement { blocks }
    }

    pub fn blocks(&self) -> &[DMatrix<f64>] {
        &self.blocks
    }
}

/// `W^g = (g_{t(a)} W_a g_{s(a)}^{-1})_a`.
pub fn apply_gauge(q: &Quiver, w: &Representation, g: &GaugeElement) -> Result<Representation> {
    w.check(q)?;
    if g.blocks.len() != w.alpha.len() {
        return Err(QuiverError::Shape("gauge and representation disagree".into()));
    }
    let inverses = g
        .blocks
        .iter()
        .enumerate()
        .map(|(v, b)| {
            if b.shape() != (w.alpha.get(v) as usize, w.alpha.get(v) as usize) {
                return Err(QuiverError::Shape(format!("gauge block at `{}`", q.id(v))));
            }
            b.clone()
                .try_inverse()
                .ok_or_else(|| QuiverError::SingularGauge(q.id(v).to_owned()))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrices = w
        .matrices
        .iter()
        .zip(q.arrows())
        .map(|(m, a)| &g.blocks[a.target] * m * &inverses[a.source])
        .collect();
    Ok(Representation {
        alpha: w.alpha.clone(),
        matrices,
    })
}

/// `Tr(W_{b_p} ⋯ W_{b_1})` for the cycle `b_1 … b_p`.
pub fn eval_cycle_trace(q: &Quiver, w: &Representation, c: &Cycle) -> Result<f64> {
    w.check(q)?;
    Ok(trace_unchecked(w, c.arrows()))
}

fn trace_unchecked(w: &Representation, word: &[usize]) -> f64 {
    let mut product = w.matrices[word[0]].clone();
    for &a in &word[1..] {
        product = &w.matrices[a] * product;
    }
    product.trace()
}

/// Offsets of each arrow's block in the flattened coordinate vector; entry
/// `(r, c)` of arrow `a` sits at `offset[a] + r * cols + c`.
fn coordinate_offsets(w: &Representation) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(w.matrices.len());
    let mut total = 0;
    for m in &w.matrices {
        offsets.push(total);
        total += m.len();
    }
    offsets
}

/// Gradient of the trace of `c` with respect to every matrix entry.
///
/// For an occurrence of arrow `a` at position `i`, the derivative with
/// respect to `(W_a)_{rs}` is entry `(s, r)` of the product of the other
/// matrices taken cyclically from position `i+1` round to `i−1`.
pub fn trace_gradient(q: &Quiver, w: &Representation, c: &Cycle) -> Result<Vec<f64>> {
    w.check(q)?;
    Ok(gradient_unchecked(q, w, c.arrows()))
}

fn gradient_unchecked(q: &Quiver, w: &Representation, word: &[usize]) -> Vec<f64> {
    let offsets = coordinate_offsets(w);
    let mut grad = vec![0.0; w.coordinate_count()];
    let n = word.len();
    for i in 0..n {
        let a = word[i];
        let at = q.arrows()[a].target;
        let size = w.alpha.get(at) as usize;
        let mut rest = DMatrix::<f64>::identity(size, size);
        for step in 1..n {
            rest = &w.matrices[word[(i + step) % n]] * rest;
        }
        let m = &w.matrices[a];
        let cols = m.ncols();
        for r in 0..m.nrows() {
            for s in 0..cols {
                grad[offsets[a] + r * cols + s] += rest[(s, r)];
            }
        }
    }
    grad
}

/// Central finite-difference gradient, for checking [`trace_gradient`].
pub fn trace_gradient_fd(q: &Quiver, w: &Representation, c: &Cycle, step: f64) -> Result<Vec<f64>> {
    w.check(q)?;
    let mut grad = Vec::with_capacity(w.coordinate_count());
    for (a, m) in w.matrices.iter().enumerate() {
        for r in 0..m.nrows() {
            for s in 0..m.ncols() {
                let up = trace_unchecked(&w.with_entry(a, r, s, step), c.arrows());
                let down = trace_unchecked(&w.with_entry(a, r, s, -step), c.arrows());
                grad.push((up - down) / (2.0 * step));
            }
        }
    }
    Ok(grad)
}

/// Jacobian of the generator map at `w`, one row per cycle.
pub fn jacobian(q: &Quiver, w: &Representation, generators: &[Cycle]) -> Result<DMatrix<f64>> {
    w.check(q)?;
    let cols = w.coordinate_count();
    let rows: Vec<Vec<f64>> = generators
        .iter()
        .map(|c| gradient_unchecked(q, w, c.arrows()))
        .collect();
    Ok(DMatrix::from_fn(generators.len(), cols, |i, j| rows[i][j]))
}

/// Numerical rank: singular values above `tol` times the largest one, after
/// scaling every nonzero row to unit length.
pub fn numerical_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut scaled = m.clone();
    for mut row in scaled.row_iter_mut() {
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        }
    }
    let sv = scaled.singular_values();
    let top = sv.max();
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&x| x > tol * top).count()
}

/// Generic Jacobian rank of the given generator cycles: the maximum over
/// `samples` Gaussian points.
pub fn generic_rank(s: &QuiverSetting, generators: &[Cycle], samples: usize, tol: f64, seed: u64) -> usize {
    (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let w = Representation::random(s, &mut rng);
            let j = jacobian(s.quiver(), &w, generators).expect("shapes come from the setting");
            numerical_rank(&j, tol)
        })
        .max()
        .unwrap_or(0)
}

/// Estimates `dim iss_α Q` as the generic rank of the trace map over the
/// quasi-primitive cycles of length at most `max_len` (default `|α|²`).
pub fn estimate_iss_dimension_with(
    s: &QuiverSetting,
    max_len: Option<usize>,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<usize> {
    if samples == 0 {
        return Err(QuiverError::Precondition("samples must be at least 1".into()));
    }
    let g = strip_zero_vertices(s);
    if g.is_empty() {
        return Ok(0);
    }
    let max_len = max_len.unwrap_or_else(|| default_max_len(&g)).max(1);
    let generators = quasi_primitive_cycles(&g, max_len)?;
    if generators.is_empty() {
        let has_cycle = !crate::cycles::primitive_cycles(g.quiver()).is_empty();
        if has_cycle {
            return Err(QuiverError::EmptyGeneratorSet);
        }
        return Ok(0);
    }
    Ok(generic_rank(&g, &generators, samples, tol, seed))
}

pub fn estimate_iss_dimension(s: &QuiverSetting, samples: usize, tol: f64, seed: u64) -> Result<usize> {
    estimate_iss_dimension_with(s, None, samples, tol, seed)
}
