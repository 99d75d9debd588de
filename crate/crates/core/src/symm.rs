//! Independent classifier for symmetric, loopless, strongly connected
//! settings.
//!
//! Such a setting is coregular iff it is a connected sum, glued at
//! dimension-1 vertices, of pieces of four shapes:
//!
//! * I:   `n ⇄ m` with single arrows;
//! * II:  `1 ⇄ n` with `k ≤ n` arrows in each direction;
//! * III: `1 ⇄ n ⇄ m` with single arrows;
//! * IV:  `n ⇄ 2 ⇄ m` with single arrows.

use crate::error::{QuiverError, Result};
use crate::quiver::{is_strongly_connected, is_symmetric, QuiverSetting};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedSumDecomposition {
    pub components: Vec<QuiverSetting>,
    /// Dimension-1 cut vertices at which the pieces were separated.
    pub junction_vertices: Vec<String>,
}

/// Prime shapes of the symmetric classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetricType {
    I,
    II,
    III,
    IV,
}

fn check_preconditions(s: &QuiverSetting) -> Result<()> {
    let q = s.quiver();
    let fail = |m: &str| Err(QuiverError::Precondition(m.to_owned()));
    if s.is_empty() {
        return fail("setting is empty");
    }
    if !s.genuine() {
        return fail("setting is not genuine");
    }
    if q.arrows().iter().any(|a| a.is_loop()) {
        return fail("quiver has loops");
    }
    if !is_symmetric(q) {
        return fail("quiver is not symmetric");
    }
    if !is_strongly_connected(q) {
        return fail("quiver is not strongly connected");
    }
    Ok(())
}

/// Biconnected blocks of an undirected simple graph as vertex sets.
fn blocks(adjacent: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct Dfs<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<Option<usize>>,
        low: Vec<usize>,
        time: usize,
        edges: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.disc[v] = Some(self.time);
            self.low[v] = self.time;
            self.time += 1;
            for &w in &self.adj[v] {
                match self.disc[w] {
                    None => {
                        self.edges.push((v, w));
                        self.visit(w, Some(v));
                        self.low[v] = self.low[v].min(self.low[w]);
                        if self.low[w] >= self.disc[v].unwrap() {
                            let mut block = Vec::new();
                            while let Some((a, b)) = self.edges.pop() {
                                block.push(a);
                                block.push(b);
                                if (a, b) == (v, w) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            block.dedup();
                            self.out.push(block);
                        }
                    }
                    Some(dw) if Some(w) != parent && dw < self.disc[v].unwrap() => {
                        self.edges.push((v, w));
                        self.low[v] = self.low[v].min(dw);
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let n = adjacent.len();
    let mut dfs = Dfs {
        adj: adjacent,
        disc: vec![None; n],
        low: vec![0; n],
        time: 0,
        edges: Vec::new(),
        out: Vec::new(),
    };
    for (v, neighbours) in adjacent.iter().enumerate() {
        if dfs.disc[v].is_none() {
            dfs.visit(v, None);
            if neighbours.is_empty() {
                dfs.out.push(vec![v]);
            }
        }
    }
    dfs.out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Splits `s` at every dimension-1 cut vertex of its underlying graph.
pub fn connected_sum_decompose(s: &QuiverSetting) -> Result<ConnectedSumDecomposition> {
    check_preconditions(s)?;
    let n = s.vertex_count();
    let adj = s.quiver().adjacency();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| w != v && adj[v][w] > 0).collect())
        .collect();
    let blocks = blocks(&neighbours);

    // Blocks meeting at a vertex of dimension ≠ 1 belong to the same piece.
    let mut parent: Vec<usize> = (0..blocks.len()).collect();
    let mut junctions = Vec::new();
    for v in 0..n {
        let containing: Vec<usize> = (0..blocks.len()).filter(|&b| blocks[b].contains(&v)).collect();
        if containing.len() < 2 {
            continue;
        }
        if s.dim(v) == 1 {
            junctions.push(s.quiver().id(v).to_owned());
        } else {
            for w in containing.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
    }

    let mut pieces: Vec<Vec<bool>> = Vec::new();
    let mut root_piece: Vec<Option<usize>> = vec![None; blocks.len()];
    for (b, block) in blocks.iter().enumerate() {
        let r = find(&mut parent, b);
        let idx = *root_piece[r].get_or_insert_with(|| {
            pieces.push(vec![false; n]);
            pieces.len() - 1
        });
        for &v in block {
            pieces[idx][v] = true;
        }
    }
    pieces.sort_by_key(|keep| keep.iter().position(|&k| k));
    Ok(ConnectedSumDecomposition {
        components: pieces.iter().map(|keep| s.restrict(keep)).collect(),
        junction_vertices: junctions,
    })
}

/// Matches one connected-sum piece against the four prime shapes.
pub fn match_type(piece: &QuiverSetting) -> Option<SymmetricType> {
    let adj = piece.quiver().adjacency();
    let d = |v: usize| piece.dim(v);
    match piece.vertex_count() {
        2 => {
            let k = adj[0][1] as u64;
            if k == 1 {
                Some(SymmetricType::I)
            } else if (d(0) == 1 && k <= d(1)) || (d(1) == 1 && k <= d(0)) {
                Some(SymmetricType::II)
            } else {
                None
            }
        }
        3 => {
            let edges: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .filter(|&(a, b)| adj[a][b] > 0)
                .collect();
            if edges.len() != 2 || edges.iter().any(|&(a, b)| adj[a][b] != 1) {
                return None;
            }
            let middle = (0..3).find(|&v| edges.iter().all(|&(a, b)| a == v || b == v))?;
            let ends: Vec<usize> = (0..3).filter(|&v| v != middle).collect();
            if ends.iter().any(|&v| d(v) == 1) {
                Some(SymmetricType::III)
            } else if d(middle) == 2 {
                Some(SymmetricType::IV)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Decides coregularity of a symmetric, loopless, strongly connected
/// genuine setting by its connected-sum decomposition.
pub fn classify_symmetric(s: &QuiverSetting) -> Result<bool> {
    let decomposition = connected_sum_decompose(s)?;
    if s.vertex_count() == 1 {
        return Ok(true);
    }
    Ok(decomposition
        .components
        .iter()
        .all(|piece| match_type(piece).is_some()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> crate::quiver::SettingBuilder {
        QuiverSetting::builder()
    }

    fn pair(a: u64, bdim: u64, k: usize) -> QuiverSetting {
        b().vertex("a", a)
            .vertex("b", bdim)
            .arrows_n("a", "b", k)
            .arrows_n("b", "a", k)
            .build()
            .unwrap()
    }

    fn chain(dims: &[u64]) -> QuiverSetting {
        let ids = ["a", "b", "c", "d", "e"];
        let mut builder = b();
        for (i, &d) in dims.iter().enumerate() {
            builder = builder.vertex(ids[i], d);
        }
        for i in 1..dims.len() {
            builder = builder.arrow(ids[i - 1], ids[i]).arrow(ids[i], ids[i - 1]);
        }
        builder.build().unwrap()
    }

    #[test]
    fn chain_with_dimension_one_end_is_one_piece() {
        let d = connected_sum_decompose(&chain(&[1, 3, 4])).unwrap();
        assert_eq!(d.components.len(), 1);
        assert!(d.junction_vertices.is_empty());
    }

    #[test]
    fn split_at_dimension_one_vertex() {
        let s = chain(&[2, 1, 3]);
        let d = connected_sum_decompose(&s).unwrap();
        assert_eq!(d.junction_vertices, vec!["b".to_string()]);
        assert_eq!(d.components, vec![chain(&[2, 1]), s.restrict(&[false, true, true])]);
    }

    #[test]
    fn no_split_at_dimension_two_vertex() {
        let d = connected_sum_decompose(&chain(&[3, 2, 3])).unwrap();
        assert_eq!(d.components.len(), 1);
    }

    #[test]
    fn reassembling_components_reproduces_the_arrows() {
        let s = chain(&[2, 1, 3, 1, 2]);
        let d = connected_sum_decompose(&s).unwrap();
        assert_eq!(d.components.len(), 3);
        let total: usize = d.components.iter().map(|c| c.quiver().arrow_count()).sum();
        assert_eq!(total, s.quiver().arrow_count());
    }

    #[test]
    fn type_two_bound() {
        assert!(classify_symmetric(&pair(1, 5, 3)).unwrap());
        assert!(!classify_symmetric(&pair(1, 3, 4)).unwrap());
        assert!(!classify_symmetric(&pair(1, 1, 2)).unwrap());
        assert_eq!(match_type(&pair(4, 7, 1)), Some(SymmetricType::I));
    }

    #[test]
    fn chain_types() {
        assert!(classify_symmetric(&chain(&[3, 2, 4])).unwrap());
        assert_eq!(match_type(&chain(&[3, 2, 4])), Some(SymmetricType::IV));
        assert_eq!(match_type(&chain(&[1, 5, 4])), Some(SymmetricType::III));
        assert!(!classify_symmetric(&chain(&[3, 3, 3])).unwrap());
    }

    #[test]
    fn triangle_is_not_prime() {
        let s = b()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .arrow("a", "b")
            .arrow("b", "a")
            .arrow("b", "c")
            .arrow("c", "b")
            .arrow("a", "c")
            .arrow("c", "a")
            .build()
            .unwrap();
        assert!(!classify_symmetric(&s).unwrap());
    }

    #[test]
    fn preconditions() {
        let looped = b().vertex("v", 1).loops("v", 2).build().unwrap();
        assert!(connected_sum_decompose(&looped).is_err());
        let oriented = b().vertex("a", 1).vertex("b", 1).arrow("a", "b").build().unwrap();
        assert!(classify_symmetric(&oriented).is_err());
        assert!(classify_symmetric(&b().vertex("v", 3).build().unwrap()).unwrap());
    }
}
