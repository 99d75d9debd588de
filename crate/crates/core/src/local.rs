//! Local quiver settings of semisimple types.
//!
//! For a semisimple type `α = Σ a_i β_i` the local quiver has one vertex per
//! factor, dimension `a_i` at factor `i`, and `δ_ij − χ(β_i, β_j)` arrows from
//! factor `j` to factor `i`. A coregular setting has only coregular local
//! quivers, which makes them a source of non-coregularity witnesses.

use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::quiver::{Arrow, DimensionVector, QuiverSetting};
use crate::reduction::is_coregular;
use crate::simples::{enumerate_decompositions, Decomposition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalQuiverSetting {
    #[serde(skip)]
    pub setting: QuiverSetting,
    pub provenance: Decomposition,
}

fn factor_ids(k: usize) -> Vec<String> {
    let width = k.saturating_sub(1).to_string().len();
    (0..k).map(|i| format!("s{i:0width$}")).collect()
}

/// Builds the local quiver setting of decomposition `d` of `s`.
pub fn local_quiver(s: &QuiverSetting, d: &Decomposition) -> Result<LocalQuiverSetting> {
    let e = s.euler();
    let k = d.len();
    let mut arrows = Vec::new();
    for (i, fi) in d.factors.iter().enumerate() {
        for (j, fj) in d.factors.iter().enumerate() {
            let count = i64::from(i == j) - e.chi(&fi.beta, &fj.beta)?;
            if count < 0 {
                return Err(QuiverError::NegativeArrowCount { from: j, to: i, count });
            }
            arrows.extend(std::iter::repeat_n(Arrow::new(j, i), count as usize));
        }
    }
    let dims = d.factors.iter().map(|f| f.multiplicity).collect();
    let setting = QuiverSetting::new(
        crate::quiver::Quiver::from_indexed(factor_ids(k), arrows)?.0,
        DimensionVector::new(dims),
    )?;
    Ok(LocalQuiverSetting {
        setting,
        provenance: d.clone(),
    })
}

/// A non-coregular local quiver together with a small non-coregular
/// subquiver setting of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub local: LocalQuiverSetting,
    pub subquiver: QuiverSetting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub coregular: bool,
    pub decompositions_checked: usize,
    pub truncated: bool,
    /// Non-coregular local quivers of a setting classified coregular. Always
    /// empty unless the classifier is wrong.
    pub violations: Vec<LocalQuiverSetting>,
    /// For a non-coregular setting, a corroborating non-coregular local
    /// quiver, if one was found among the enumerated types.
    pub witness: Option<Witness>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shrinks a non-coregular setting by deleting arrows and vertices while it
/// stays non-coregular. The result is a subquiver setting of the input.
pub fn minimal_noncoregular_subquiver(s: &QuiverSetting) -> QuiverSetting {
    debug_assert!(!is_coregular(s));
    let mut current = s.clone();
    'shrink: loop {
        let n = current.vertex_count();
        for v in 0..n {
            let mut keep = vec![true; n];
            keep[v] = false;
            let smaller = current.restrict(&keep);
            if !is_coregular(&smaller) {
                current = smaller;
                continue 'shrink;
            }
        }
        let arrows = current.quiver().arrows();
        for i in 0..arrows.len() {
            if i > 0 && arrows[i] == arrows[i - 1] {
                continue;
            }
            let mut fewer = arrows.to_vec();
            fewer.remove(i);
            let smaller = current.with_arrows(fewer);
            if !is_coregular(&smaller) {
                current = smaller;
                continue 'shrink;
            }
        }
        return current;
    }
}

/// Checks the local quivers of up to `limit` semisimple types of `s`
/// against the verdict for `s`.
pub fn local_consistency_check(s: &QuiverSetting, limit: usize) -> ConsistencyReport {
    let coregular = is_coregular(s);
    let decompositions = enumerate_decompositions(s, limit);
    let mut violations = Vec::new();
    let mut witness = None;
    for d in &decompositions.items {
        let local = local_quiver(s, d).expect("enumerated decompositions are valid");
        if is_coregular(&local.setting) {
            continue;
        }
        if coregular {
            violations.push(local);
        } else {
            let subquiver = minimal_noncoregular_subquiver(&local.setting);
            witness = Some(Witness { local, subquiver });
            break;
        }
    }
    ConsistencyReport {
        coregular,
        decompositions_checked: decompositions.items.len(),
        truncated: decompositions.truncated,
        violations,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::is_subquiver;

    fn b() -> crate::quiver::SettingBuilder {
        QuiverSetting::builder()
    }

    fn dv(v: &[u64]) -> DimensionVector {
        DimensionVector::new(v.to_vec())
    }

    #[test]
    fn local_quiver_of_two_loops_split() {
        let s = b().vertex("v", 2).loops("v", 2).build().unwrap();
        let d = Decomposition::new(vec![(dv(&[1]), 1), (dv(&[1]), 1)]);
        let local = local_quiver(&s, &d).unwrap().setting;
        assert_eq!(local.alpha(), &dv(&[1, 1]));
        assert_eq!(local.quiver().adjacency(), vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn trivial_decomposition_gives_one_vertex() {
        let s = b().vertex("v", 2).loops("v", 2).build().unwrap();
        let d = Decomposition::new(vec![(dv(&[2]), 1)]);
        let local = local_quiver(&s, &d).unwrap().setting;
        assert_eq!(local.alpha(), &dv(&[1]));
        assert_eq!(local.quiver().loops(0), 5);
    }

    #[test]
    fn unit_decomposition_reproduces_the_quiver() {
        let s = b()
            .vertex("a", 2)
            .vertex("b", 3)
            .vertex("c", 1)
            .arrows_n("a", "b", 2)
            .arrow("b", "c")
            .arrow("c", "a")
            .build()
            .unwrap();
        let local = local_quiver(&s, &Decomposition::all_units(s.alpha())).unwrap().setting;
        assert_eq!(local.alpha(), s.alpha());
        assert_eq!(local.quiver().adjacency(), s.quiver().adjacency());
    }

    #[test]
    fn negative_counts_are_rejected() {
        // χ((1),(1)) = 1 at a loopless vertex, so two distinct ε factors
        // would need −1 arrows between them.
        let s = b().vertex("v", 2).build().unwrap();
        let d = Decomposition::new(vec![(dv(&[1]), 1), (dv(&[1]), 1)]);
        assert!(matches!(
            local_quiver(&s, &d),
            Err(QuiverError::NegativeArrowCount { count: -1, .. })
        ));
    }

    #[test]
    fn coregular_two_loops_has_coregular_locals() {
        let s = b().vertex("v", 2).loops("v", 2).build().unwrap();
        let report = local_consistency_check(&s, 100);
        assert!(report.coregular);
        assert_eq!(report.decompositions_checked, 3);
        assert!(report.is_consistent());
        assert!(report.witness.is_none());
    }

    #[test]
    fn double_two_cycle_yields_witness() {
        let s = b()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 2)
            .arrows_n("a", "b", 2)
            .arrows_n("b", "a", 2)
            .arrow("b", "c")
            .arrow("c", "a")
            .build()
            .unwrap();
        let report = local_consistency_check(&s, 500);
        assert!(!report.coregular);
        let w = report.witness.expect("a witness exists");
        assert!(is_subquiver(w.subquiver.quiver(), w.local.setting.quiver()));
        assert!(!is_coregular(&w.subquiver));
        assert_eq!(w.subquiver.vertex_count(), 2);
        assert_eq!(w.subquiver.alpha(), &dv(&[1, 1]));
        assert_eq!(w.subquiver.quiver().adjacency(), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn single_factor_matches_has_simple() {
        let s = b().vertex("a", 1).vertex("b", 1).arrow("a", "b").arrow("b", "a").build().unwrap();
        let d = Decomposition::new(vec![(dv(&[1, 1]), 1)]);
        let local = local_quiver(&s, &d).unwrap().setting;
        let dim = crate::simples::has_simple(&s).iss_dimension.unwrap();
        assert_eq!(local.quiver().loops(0) as u64, dim);
    }
}
