//! Primitive and quasi-primitive cycles.
//!
//! A cycle is a closed walk `b_1 … b_p` along arrows with
//! `target(b_i) = source(b_{i+1})` and `target(b_p) = source(b_1)`; cycles
//! that are rotations of each other are identified. Its trace function
//! `Tr(W_{b_p} ⋯ W_{b_1})` is a `GL_α`-invariant, and the traces of the
//! quasi-primitive cycles of length at most `|α|²` generate the invariant ring.
//!
//! Enumeration walks the arrow multigraph depth first and only extends words
//! that can still be the least rotation of a cycle (the prenecklace test of
//! the Fredricksen–Kessler–Maiorana algorithm), so every cycle is produced
//! exactly once without a deduplication table.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{QuiverError, Result};
use crate::quiver::{is_strongly_connected, Quiver, QuiverSetting};

/// A cycle stored as its lexicographically least rotation of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    arrows: Vec<usize>,
}

fn least_rotation(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    (0..n)
        .map(|r| word[r..].iter().chain(&word[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

impl Cycle {
    /// Validates that `arrows` (indices into `q.arrows()`) close up in
    /// traversal order and canonicalizes the rotation.
    pub fn new(q: &Quiver, arrows: &[usize]) -> Result<Self> {
        let all = q.arrows();
        let closed = !arrows.is_empty()
            && arrows.iter().all(|&a| a < all.len())
            && (0..arrows.len()).all(|i| {
                all[arrows[i]].target == all[arrows[(i + 1) % arrows.len()]].source
            });
        if !closed {
            return Err(QuiverError::NotACycle(arrows.to_vec()));
        }
        Ok(Cycle {
            arrows: least_rotation(arrows),
        })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Cycle, &'a Quiver);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, &a) in self.0.arrows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    f.write_str(&self.1.arrow_label(a))?;
                }
                Ok(())
            }
        }
        Show(self, q)
    }
}

/// Streams every cycle of length `1..=max_len` in which vertex `v` is left
/// at most `visit_cap[v]` times, each as its least rotation. The callback can
/// stop the enumeration early.
pub fn for_each_cycle<F>(q: &Quiver, max_len: usize, visit_cap: &[usize], mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    struct Walk<'a, F> {
        arrows: &'a [crate::quiver::Arrow],
        outgoing: Vec<Vec<usize>>,
        successors: Vec<Vec<usize>>,
        cap: &'a [usize],
        max_len: usize,
        visits: Vec<usize>,
        word: Vec<usize>,
        seen: Vec<bool>,
        stack: Vec<usize>,
        emit: F,
    }

    impl<F: FnMut(&[usize]) -> ControlFlow<()>> Walk<'_, F> {
        /// Whether the start vertex can still be reached from `here` through
        /// vertices with visits left.
        fn can_close(&mut self, here: usize) -> bool {
            let start = self.arrows[self.word[0]].source;
            if here == start {
                return true;
            }
            self.seen.iter_mut().for_each(|x| *x = false);
            self.stack.clear();
            self.stack.push(here);
            self.seen[here] = true;
            while let Some(v) = self.stack.pop() {
                for k in 0..self.successors[v].len() {
                    let w = self.successors[v][k];
                    if w == start {
                        return true;
                    }
                    if !self.seen[w] && self.visits[w] < self.cap[w] {
                        self.seen[w] = true;
                        self.stack.push(w);
                    }
                }
            }
            false
        }

        /// `period` is the length of the longest Lyndon prefix of `word`.
        fn extend(&mut self, period: usize) -> ControlFlow<()> {
            let len = self.word.len();
            let here = self.arrows[self.word[len - 1]].target;
            if here == self.arrows[self.word[0]].source && len.is_multiple_of(period) {
                (self.emit)(&self.word)?;
            }
            if len == self.max_len || self.visits[here] >= self.cap[here] || !self.can_close(here) {
                return ControlFlow::Continue(());
            }
            let floor = self.word[len - period];
            let (from, end) = {
                let out = &self.outgoing[here];
                (out.partition_point(|&c| c < floor), out.len())
            };
            for k in from..end {
                let c = self.outgoing[here][k];
                let next_period = if c == floor { period } else { len + 1 };
                self.visits[here] += 1;
                self.word.push(c);
                let flow = self.extend(next_period);
                self.word.pop();
                self.visits[here] -= 1;
                flow?;
            }
            ControlFlow::Continue(())
        }
    }

    if max_len == 0 {
        return ControlFlow::Continue(());
    }
    let mut walk = Walk {
        arrows: q.arrows(),
        outgoing: q.outgoing(),
        successors: q.successors(),
        cap: visit_cap,
        max_len,
        visits: vec![0; q.vertex_count()],
        word: Vec::with_capacity(max_len),
        seen: vec![false; q.vertex_count()],
        stack: Vec::new(),
        emit: &mut f,
    };
    for (i, a) in q.arrows().iter().enumerate() {
        if visit_cap[a.source] == 0 {
            continue;
        }
        walk.visits[a.source] += 1;
        walk.word.push(i);
        let flow = walk.extend(1);
        walk.word.pop();
        walk.visits[a.source] -= 1;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visit caps for quasi-primitive cycles: dimension-1 vertices at most once,
/// dimension-0 vertices never.
fn quasi_primitive_caps(s: &QuiverSetting) -> Vec<usize> {
    s.alpha()
        .as_slice()
        .iter()
        .map(|&d| match d {
            0 => 0,
            1 => 1,
            _ => usize::MAX,
        })
        .collect()
}

fn collect(q: &Quiver, max_len: usize, caps: &[usize]) -> Vec<Cycle> {
    let mut out = Vec::new();
    let _ = for_each_cycle(q, max_len, caps, |w| {
        out.push(Cycle { arrows: w.to_vec() });
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Cycles visiting every vertex at most once, loops included.
pub fn primitive_cycles(q: &Quiver) -> Vec<Cycle> {
    collect(q, q.vertex_count(), &vec![1; q.vertex_count()])
}

/// The default length bound `|α|²`.
pub fn default_max_len(s: &QuiverSetting) -> usize {
    let size = s.alpha().size() as usize;
    size.saturating_mul(size)
}

/// Cycles of length at most `max_len` that revisit only vertices of
/// dimension at least 2.
pub fn quasi_primitive_cycles(s: &QuiverSetting, max_len: usize) -> Result<Vec<Cycle>> {
    if max_len == 0 {
        return Err(QuiverError::Precondition("max_len must be at least 1".into()));
    }
    Ok(collect(s.quiver(), max_len, &quasi_primitive_caps(s)))
}

/// Counts quasi-primitive cycles, giving up once the count exceeds `limit`.
pub fn count_quasi_primitive_cycles(s: &QuiverSetting, max_len: usize, limit: usize) -> Option<usize> {
    let mut count = 0usize;
    let flow = for_each_cycle(s.quiver(), max_len, &quasi_primitive_caps(s), |_| {
        count += 1;
        if count > limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    flow.is_continue().then_some(count)
}

/// For a strongly connected genuine setting with `α = 𝟙`: coregular iff the
/// number of primitive cycles equals `#A − #V + 1`.
pub fn coregular_alpha_one(s: &QuiverSetting) -> Result<bool> {
    if !s.alpha().is_ones() || s.is_empty() {
        return Err(QuiverError::Precondition("dimension vector must be all ones".into()));
    }
    if !is_strongly_connected(s.quiver()) {
        return Err(QuiverError::Precondition("quiver must be strongly connected".into()));
    }
    let q = s.quiver();
    let dimension = q.arrow_count() as i64 - q.vertex_count() as i64 + 1;
    Ok(primitive_cycles(q).len() as i64 == dimension)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> crate::quiver::SettingBuilder {
        QuiverSetting::builder()
    }

    fn cycle3() -> QuiverSetting {
        b().vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .arrow("a", "b")
            .arrow("b", "c")
            .arrow("c", "a")
            .build()
            .unwrap()
    }

    fn double_two_cycle() -> QuiverSetting {
        b().vertex("a", 1)
            .vertex("b", 1)
            .arrows_n("a", "b", 2)
            .arrows_n("b", "a", 2)
            .build()
            .unwrap()
    }

    /// Necklace count by Burnside's lemma: `(1/n) Σ_{d|n} φ(d) k^{n/d}`.
    fn necklaces(k: u64, n: u64) -> u64 {
        fn phi(mut m: u64) -> u64 {
            let mut result = m;
            let mut p = 2;
            while p * p <= m {
                if m.is_multiple_of(p) {
                    while m.is_multiple_of(p) {
                        m /= p;
                    }
                    result -= result / p;
                }
                p += 1;
            }
            if m > 1 {
                result -= result / m;
            }
            result
        }
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| phi(d) * k.pow((n / d) as u32))
            .sum::<u64>()
            / n
    }

    #[test]
    fn burnside_oracle_values() {
        let per_length: Vec<u64> = (1..=5).map(|n| necklaces(2, n)).collect();
        assert_eq!(per_length, vec![2, 3, 4, 6, 8]);
    }

    #[test]
    fn primitive_cycle_examples() {
        assert_eq!(primitive_cycles(cycle3().quiver()).len(), 1);
        assert_eq!(primitive_cycles(double_two_cycle().quiver()).len(), 4);
        let loops = b().vertex("v", 1).loops("v", 3).build().unwrap();
        assert_eq!(primitive_cycles(loops.quiver()).len(), 3);
    }

    #[test]
    fn quasi_primitive_two_loops() {
        let s = b().vertex("v", 2).loops("v", 2).build().unwrap();
        let cycles = quasi_primitive_cycles(&s, 5).unwrap();
        let expected: u64 = (1..=5).map(|n| necklaces(2, n)).sum();
        assert_eq!(cycles.len() as u64, expected);
        assert_eq!(cycles.len(), 23);
    }

    #[test]
    fn necklace_counts_match_burnside_for_three_loops() {
        let s = b().vertex("v", 3).loops("v", 3).build().unwrap();
        for len in 1..=7 {
            let mut per_len = vec![0u64; len + 1];
            for c in quasi_primitive_cycles(&s, len).unwrap() {
                per_len[c.len()] += 1;
            }
            assert_eq!(per_len[len], necklaces(3, len as u64), "length {len}");
        }
    }

    #[test]
    fn walks_cut_off_from_the_start_are_pruned() {
        // a(1) ⇄ c(1) ⇄ b(3) with two loops at b. Through c once: the
        // 2-cycle a c, plus c → b, any loop word of length ≤ L−2, b → c.
        // The rest are loop necklaces at b.
        let s = b()
            .vertex("a", 1)
            .vertex("b", 3)
            .vertex("c", 1)
            .arrow("a", "c")
            .arrow("c", "a")
            .arrow("c", "b")
            .arrow("b", "c")
            .loops("b", 2)
            .build()
            .unwrap();
        let small = quasi_primitive_cycles(&s, 12).unwrap().len() as u64;
        assert_eq!(small, 1 + (1 << 11) - 1 + (1..=12).map(|n| necklaces(2, n)).sum::<u64>());
        assert_eq!(count_quasi_primitive_cycles(&s, 40, 1000), None);
    }

    #[test]
    fn quasi_primitive_three_cycle() {
        assert_eq!(quasi_primitive_cycles(&cycle3(), 9).unwrap().len(), 1);
        assert!(quasi_primitive_cycles(&cycle3(), 0).is_err());
    }

    #[test]
    fn quasi_primitive_matches_brute_force_walks() {
        // a(2) ⇄ b(1), loop at a: count closed walks by brute force.
        let s = b()
            .vertex("a", 2)
            .vertex("b", 1)
            .arrow("a", "b")
            .arrow("b", "a")
            .loops("a", 1)
            .build()
            .unwrap();
        let q = s.quiver();
        let m = q.arrow_count();
        for max_len in 1..=6 {
            let mut brute = std::collections::BTreeSet::new();
            for len in 1..=max_len {
                for code in 0..m.pow(len as u32) {
                    let word: Vec<usize> = (0..len).map(|i| code / m.pow(i as u32) % m).collect();
                    let Ok(c) = Cycle::new(q, &word) else { continue };
                    let b_visits = word.iter().filter(|&&a| q.arrows()[a].source == 1).count();
                    if b_visits <= 1 {
                        brute.insert(c);
                    }
                }
            }
            let found: std::collections::BTreeSet<_> =
                quasi_primitive_cycles(&s, max_len).unwrap().into_iter().collect();
            assert_eq!(found, brute, "max_len {max_len}");
        }
    }

    #[test]
    fn count_respects_limit() {
        let s = b().vertex("v", 2).loops("v", 2).build().unwrap();
        assert_eq!(count_quasi_primitive_cycles(&s, 5, 100), Some(23));
        assert_eq!(count_quasi_primitive_cycles(&s, 5, 10), None);
    }

    #[test]
    fn cycle_validation_and_rotation() {
        let s = cycle3();
        let q = s.quiver();
        let c1 = Cycle::new(q, &[1, 2, 0]).unwrap();
        let c2 = Cycle::new(q, &[0, 1, 2]).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(c1.arrows(), &[0, 1, 2]);
        assert!(Cycle::new(q, &[0, 2]).is_err());
        assert!(Cycle::new(q, &[]).is_err());
        assert_eq!(c1.display(q).to_string(), "a->b b->c c->a");
    }

    #[test]
    fn alpha_one_lemma_examples() {
        assert!(coregular_alpha_one(&cycle3()).unwrap());
        assert!(!coregular_alpha_one(&double_two_cycle()).unwrap());
        let loops = b().vertex("v", 1).loops("v", 2).build().unwrap();
        assert!(coregular_alpha_one(&loops).unwrap());
        assert!(coregular_alpha_one(&b().vertex("v", 1).build().unwrap()).unwrap());
    }

    #[test]
    fn alpha_one_lemma_preconditions() {
        let arrow = b().vertex("a", 1).vertex("b", 1).arrow("a", "b").build().unwrap();
        assert!(coregular_alpha_one(&arrow).is_err());
        let big = b().vertex("v", 2).loops("v", 1).build().unwrap();
        assert!(coregular_alpha_one(&big).is_err());
    }
}
