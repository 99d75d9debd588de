//! Exhaustive generation of small quiver settings up to isomorphism.
//!
//! Generation runs in two stages. Off-diagonal arrow-count patterns are
//! enumerated, filtered for strong connectivity and reduced to one
//! representative per isomorphism class. Per-vertex labels (loop count and
//! dimension) are then attached, keeping one labelling per orbit of the
//! pattern's automorphism group.

use std::collections::HashSet;

use crate::quiver::{is_strongly_connected, Arrow, QuiverSetting};

/// Bounds of an exhaustive sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_vertices: usize,
    pub min_dim: u64,
    pub max_dim: u64,
    /// Maximum number of arrows from one vertex to another.
    pub max_parallel: usize,
    /// Maximum number of loops at a vertex.
    pub max_loops: usize,
    /// Only patterns with equal counts in both directions.
    pub symmetric: bool,
}

impl SweepBounds {
    /// Symmetric loopless settings.
    pub fn symmetric(max_vertices: usize, max_dim: u64, max_parallel: usize) -> Self {
        SweepBounds {
            max_vertices,
            min_dim: 1,
            max_dim,
            max_parallel,
            max_loops: 0,
            symmetric: true,
        }
    }

    /// Settings with every dimension equal to one.
    pub fn alpha_one(max_vertices: usize, max_parallel: usize) -> Self {
        SweepBounds {
            max_vertices,
            min_dim: 1,
            max_dim: 1,
            max_parallel,
            max_loops: max_parallel,
            symmetric: false,
        }
    }

    /// Genuine settings with loops and parallel arrows up to `max_parallel`.
    pub fn genuine(max_vertices: usize, max_dim: u64, max_parallel: usize) -> Self {
        SweepBounds {
            max_vertices,
            min_dim: 1,
            max_dim,
            max_parallel,
            max_loops: max_parallel,
            symmetric: false,
        }
    }
}

type Matrix = Vec<Vec<usize>>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn permuted(m: &Matrix, p: &[usize]) -> Matrix {
    let n = m.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[p[i]][p[j]] = m[i][j];
        }
    }
    out
}

fn strongly_connected(m: &Matrix) -> bool {
    let n = m.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                let edge = if forward { m[v][w] } else { m[w][v] };
                if edge > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    };
    reach(true) && reach(false)
}

/// Strongly connected loopless patterns on `n` vertices, one per
/// isomorphism class, each with its automorphism group.
fn patterns(n: usize, bounds: &SweepBounds) -> Vec<(Matrix, Vec<Vec<usize>>)> {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| if bounds.symmetric { i < j } else { i != j })
        .collect();
    let base = bounds.max_parallel + 1;
    let total = base.checked_pow(pairs.len() as u32).expect("sweep bounds too large");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = vec![vec![0; n]; n];
        let mut rest = code;
        for &(i, j) in &pairs {
            m[i][j] = rest % base;
            if bounds.symmetric {
                m[j][i] = m[i][j];
            }
            rest /= base;
        }
        if !strongly_connected(&m) {
            continue;
        }
        let canonical = perms.iter().map(|p| permuted(&m, p)).min().expect("n ≥ 1");
        if !seen.insert(canonical.clone()) {
            continue;
        }
        let automorphisms = perms
            .iter()
            .filter(|p| permuted(&canonical, p) == canonical)
            .cloned()
            .collect();
        out.push((canonical, automorphisms));
    }
    out
}

fn vertex_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn build(ids: &[String], m: &Matrix, labels: &[(usize, u64)]) -> QuiverSetting {
    let mut arrows = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            let count = if i == j { labels[i].0 } else { k };
            arrows.extend(std::iter::repeat_n(Arrow::new(i, j), count));
        }
    }
    QuiverSetting::from_parts(ids.to_vec(), labels.iter().map(|l| l.1).collect(), arrows)
}

/// Calls `visit` once per isomorphism class of strongly connected setting
/// within `bounds`, in order of increasing vertex count.
pub fn for_each_setting(bounds: &SweepBounds, mut visit: impl FnMut(QuiverSetting)) {
    for n in 1..=bounds.max_vertices {
        let ids = vertex_ids(n);
        let labels: Vec<(usize, u64)> = (0..=bounds.max_loops)
            .flat_map(|l| (bounds.min_dim..=bounds.max_dim).map(move |d| (l, d)))
            .collect();
        let total = labels.len().pow(n as u32);
        for (m, automorphisms) in patterns(n, bounds) {
            for code in 0..total {
                let mut rest = code;
                let assigned: Vec<(usize, u64)> = (0..n)
                    .map(|_| {
                        let l = labels[rest % labels.len()];
                        rest /= labels.len();
                        l
                    })
                    .collect();
                let minimal = automorphisms.iter().all(|p| {
                    let mut image = assigned.clone();
                    for (v, &pv) in p.iter().enumerate() {
                        image[pv] = assigned[v];
                    }
                    assigned <= image
                });
                if minimal {
                    let s = build(&ids, &m, &assigned);
                    debug_assert!(is_strongly_connected(s.quiver()));
                    visit(s);
                }
            }
        }
    }
}

/// All settings of [`for_each_setting`] collected into a vector.
pub fn settings(bounds: &SweepBounds) -> Vec<QuiverSetting> {
    let mut out = Vec::new();
    for_each_setting(bounds, |s| out.push(s));
    out
}

/// Isomorphism-invariant key of a setting with at most a handful of
/// vertices: the least (dimensions, adjacency) over all relabellings.
pub fn canonical_form(s: &QuiverSetting) -> (Vec<u64>, Matrix) {
    let n = s.vertex_count();
    let adj = s.quiver().adjacency();
    permutations(n)
        .iter()
        .map(|p| {
            let mut dims = vec![0; n];
            for v in 0..n {
                dims[p[v]] = s.dim(v);
            }
            (dims, permuted(&adj, p))
        })
        .min()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn settings_are_pairwise_non_isomorphic() {
        let all = settings(&SweepBounds::genuine(3, 2, 1));
        let keys: HashSet<_> = all.iter().map(canonical_form).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn small_counts_by_hand() {
        // One vertex: loops 0..=1 times dims 1..=2.
        let one = SweepBounds::genuine(1, 2, 1);
        assert_eq!(settings(&one).len(), 4);
        // Two vertices, single arrows, α = 𝟙: only the 2-cycle pattern, with
        // loop vectors (0,0), (0,1), (1,1) up to swapping.
        let two = SweepBounds::alpha_one(2, 1);
        assert_eq!(settings(&two).len(), 2 + 3);
        // Symmetric loopless on ≤2 vertices, dims ≤2, ≤2 arrows per pair:
        // one vertex (2 dims) plus k ∈ {1,2} with 3 unordered dim pairs.
        assert_eq!(settings(&SweepBounds::symmetric(2, 2, 2)).len(), 2 + 2 * 3);
    }

    #[test]
    fn sweep_matches_brute_force_orbit_count() {
        let bounds = SweepBounds::genuine(3, 2, 1);
        let mut brute = HashSet::new();
        let n = 3;
        for code in 0..(1usize << 9) {
            let m: Matrix = (0..n).map(|i| (0..n).map(|j| (code >> (3 * i + j)) & 1).collect()).collect();
            if !strongly_connected(&m) {
                continue;
            }
            for dims in 0..8usize {
                let labels: Vec<(usize, u64)> = (0..n).map(|v| (m[v][v], 1 + ((dims >> v) & 1) as u64)).collect();
                let mut off = m.clone();
                (0..n).for_each(|v| off[v][v] = 0);
                brute.insert(canonical_form(&build(&vertex_ids(n), &off, &labels)));
            }
        }
        let swept = settings(&bounds).into_iter().filter(|s| s.vertex_count() == 3).count();
        assert_eq!(swept, brute.len());
    }
}
