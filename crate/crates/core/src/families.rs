//! Constructors for the named digraphs and families used as witnesses.

use std::collections::BTreeSet;

use crate::digraph::{full_mask, Digraph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Order and jump set of a circulant digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    m: usize,
    jumps: BTreeSet<usize>,
}

impl CirculantSpec {
    pub fn new(m: usize, jumps: impl IntoIterator<Item = usize>) -> Result<Self> {
        if m > MAX_ORDER {
            return Err(Error::OrderTooLarge { n: m, max: MAX_ORDER });
        }
        if m < 2 {
            return Err(Error::PreconditionViolated(format!(
                "circulant order must be at least 2, got {m}"
            )));
        }
        let jumps: BTreeSet<usize> = jumps.into_iter().collect();
        if jumps.is_empty() {
            return Err(Error::EmptyJumpSet);
        }
        if let Some(&jump) = jumps.iter().find(|&&j| j == 0 || j >= m) {
            return Err(Error::JumpOutOfRange { jump, m });
        }
        Ok(CirculantSpec { m, jumps })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn jumps(&self) -> impl Iterator<Item = usize> + '_ {
        self.jumps.iter().copied()
    }
}

/// Arc `(i,j)` iff `(j - i) mod m` is a jump.
pub fn circulant(spec: &CirculantSpec) -> Digraph {
    let m = spec.m;
    let rows = (0..m)
        .map(|i| spec.jumps().fold(0u64, |row, j| row | 1 << ((i + j) % m)))
        .collect();
    Digraph::from_out_rows_unchecked(rows)
}

fn circulant_of(m: usize, jumps: impl IntoIterator<Item = usize>) -> Result<Digraph> {
    Ok(circulant(&CirculantSpec::new(m, jumps)?))
}

/// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::PreconditionViolated(format!(
            "directed cycle needs at least 3 vertices, got {n}"
        )));
    }
    circulant_of(n, [1])
}

/// The directed antihole: jumps `1..=n-2`. `antihole(3)` is the directed 3-cycle.
pub fn antihole(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::PreconditionViolated(format!(
            "antihole needs at least 3 vertices, got {n}"
        )));
    }
    circulant_of(n, 1..=n - 2)
}

/// The circulant on 7 vertices with jumps 1 and 2.
pub fn c7_12() -> Digraph {
    circulant_of(7, [1, 2]).expect("valid circulant")
}

/// Arc `(i,j)` iff `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    let rows = (0..n).map(|i| full_mask(n) & !full_mask(i + 1)).collect();
    Digraph::from_out_rows(rows)
}

/// Every ordered pair of distinct vertices is an arc.
pub fn complete_digraph(n: usize) -> Result<Digraph> {
    Ok(Digraph::empty(n)?.complement())
}

/// Replaces every undirected edge with both opposite arcs.
pub fn biorient(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    let arcs: Vec<_> = edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    Digraph::from_arcs(n, &arcs)
}

/// Edges of the star `K_{1,r}` with centre 0.
pub fn star_edges(r: usize) -> Vec<(usize, usize)> {
    (1..=r).map(|leaf| (0, leaf)).collect()
}

/// Edges of the path `0 - 1 - ... - (n-1)`.
pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

/// Edges of the cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|v| (v, (v + 1) % n)).collect()
}

/// Complete biorientation of a tree, rejecting edge lists that are not a
/// tree of (undirected) diameter 3.
pub fn biorient_diameter3_tree(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    let d = biorient(n, edges)?;
    if !is_tree(&d.underlying_rows()) {
        return Err(Error::PreconditionViolated("edge list is not a tree".into()));
    }
    if undirected_diameter(&d.underlying_rows()) != Some(3) {
        return Err(Error::PreconditionViolated("tree diameter is not 3".into()));
    }
    Ok(d)
}

pub(crate) fn is_tree(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return false;
    }
    let edges: usize = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    edges + 1 == n && crate::digraph::reach(rows, 0) == full_mask(n)
}

/// Diameter of an undirected graph given by symmetric rows; `None` if disconnected.
pub(crate) fn undirected_diameter(rows: &[u64]) -> Option<u32> {
    let d = Digraph::from_out_rows_unchecked(rows.to_vec());
    d.distances().diameter()
}

/// Ordered triple of disjoint nonempty parts covering the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CyclicalPartition {
    pub parts: [VertexSet; 3],
}

impl CyclicalPartition {
    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// True when every arc `V_i -> V_{i+1}` (indices mod 3) is present in `d`.
    pub fn blocks_present_in(&self, d: &Digraph) -> bool {
        (0..3).all(|i| {
            let next = self.parts[(i + 1) % 3].bits();
            self.parts[i]
                .iter()
                .all(|v| d.out_row(v) & next == next)
        })
    }

    /// Number of arcs in the three one-way blocks.
    pub fn block_arc_count(&self) -> usize {
        (0..3)
            .map(|i| self.parts[i].len() * self.parts[(i + 1) % 3].len())
            .sum()
    }
}

/// The blow-up of the directed 3-cycle: independent parts of the given sizes
/// with complete one-way blocks `V_0 -> V_1 -> V_2 -> V_0`.
pub fn three_cycle_extension(sizes: [usize; 3]) -> Result<(Digraph, CyclicalPartition)> {
    if sizes.contains(&0) {
        return Err(Error::ZeroPartSize);
    }
    let n: usize = sizes.iter().sum();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let mut parts = [VertexSet::EMPTY; 3];
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        parts[i] = VertexSet::from_bits(full_mask(start + s) & !full_mask(start));
        start += s;
    }
    let rows = (0..n)
        .map(|v| {
            let i = parts.iter().position(|p| p.contains(v)).unwrap();
            parts[(i + 1) % 3].bits()
        })
        .collect();
    Ok((
        Digraph::from_out_rows_unchecked(rows),
        CyclicalPartition { parts },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antihole3_is_cycle3() {
        assert_eq!(antihole(3).unwrap(), directed_cycle(3).unwrap());
        assert_eq!(circulant_of(3, [1]).unwrap(), directed_cycle(3).unwrap());
    }

    #[test]
    fn antihole7_matches_jump_expansion() {
        let a7 = antihole(7).unwrap();
        assert_eq!(a7, circulant_of(7, 1..=5).unwrap());
        assert_eq!(a7.arc_count(), 7 * 5);
    }

    #[test]
    fn circulant4_12() {
        let d = circulant_of(4, [1, 2]).unwrap();
        assert_eq!(d.arc_count(), 8);
        assert_eq!(d.arc_symmetry().symmetric_pairs, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn circulant_errors() {
        assert_eq!(CirculantSpec::new(5, []), Err(Error::EmptyJumpSet));
        assert_eq!(
            CirculantSpec::new(5, [5]),
            Err(Error::JumpOutOfRange { jump: 5, m: 5 })
        );
        assert_eq!(
            CirculantSpec::new(5, [0]),
            Err(Error::JumpOutOfRange { jump: 0, m: 5 })
        );
    }

    #[test]
    fn biorient_star_and_loops() {
        let s = biorient(4, &star_edges(3)).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.arc_count(), 6);
        assert!(s.arc_symmetry().is_symmetric);
        assert_eq!(biorient(2, &[(1, 1)]), Err(Error::LoopArc(1)));
    }

    #[test]
    fn tree_validation() {
        assert!(biorient_diameter3_tree(4, &path_edges(4)).is_ok());
        assert!(biorient_diameter3_tree(4, &star_edges(3)).is_err());
        assert!(biorient_diameter3_tree(5, &cycle_edges(5)).is_err());
    }

    #[test]
    fn extension_shapes() {
        let (c3, _) = three_cycle_extension([1, 1, 1]).unwrap();
        assert_eq!(c3, directed_cycle(3).unwrap());
        let (d, p) = three_cycle_extension([2, 1, 1]).unwrap();
        assert_eq!(d.order(), 4);
        assert_eq!(d.arc_count(), 5);
        assert!(d.is_strong());
        assert_eq!(
            p.parts,
            [VertexSet::from([0, 1]), VertexSet::from([2]), VertexSet::from([3])]
        );
        assert_eq!(three_cycle_extension([0, 1, 1]), Err(Error::ZeroPartSize));
    }

    #[test]
    fn transitive_tournament_arcs() {
        let t = transitive_tournament(3).unwrap();
        assert_eq!(t.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(!transitive_tournament(4).unwrap().is_strong());
    }
}
