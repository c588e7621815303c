//! Classifier for strong 4-transitive digraphs into eight structural families.
//!
//! | index | family |
//! |---|---|
//! | 1 | complete digraph |
//! | 2 | 3-cycle extension |
//! | 3 | circumference 3, spanning 3-cycle extension, symmetric arcs only at singleton parts |
//! | 4 | circumference 3, one 2-edge-connected core of type 2 or 3 plus pendant vertices on a singleton part |
//! | 5 | complete biorientation of a 5-cycle |
//! | 6 | complete biorientation of a star `K_{1,r}`, `r >= 3` |
//! | 7 | complete biorientation of a tree of diameter 3 |
//! | 8 | any other strong digraph of order at most 4 |

use serde::Serialize;

use crate::digraph::{bits, reach, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::families::{is_tree, undirected_diameter, CyclicalPartition};
use crate::recognizers::{circumference, is_k_transitive};

/// How family 4's "structure described in 1. or 2." is read: the core must
/// be a plain 3-cycle extension (family 2) when it has no symmetric arcs,
/// and satisfy the family 3 conditions otherwise.
pub const CLAUSE4_REFERENT: &str = "core follows family 2 without symmetric arcs, family 3 with them";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyEvidence {
    None,
    Partition {
        partition: CyclicalPartition,
    },
    Pendant {
        core: VertexSet,
        partition: CyclicalPartition,
        hub: usize,
        pendants: VertexSet,
        core_family: u8,
        interpretation: &'static str,
    },
    Tree {
        edges: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyLabel {
    pub index: u8,
    pub evidence: FamilyEvidence,
}

/// Visits each partition `(V_0, V_1, V_2)` of nonempty parts whose one-way
/// blocks are all present in `d`, with vertex 0 in `V_0`. Stops early when
/// `f` returns true.
pub fn for_each_spanning_partition(
    d: &Digraph,
    f: &mut dyn FnMut(&CyclicalPartition) -> bool,
) -> bool {
    let n = d.order();
    if n < 3 {
        return false;
    }
    let mut parts = [0u64; 3];
    parts[0] = 1;
    assign(d, 1, &mut parts, f)
}

fn assign(
    d: &Digraph,
    v: usize,
    parts: &mut [u64; 3],
    f: &mut dyn FnMut(&CyclicalPartition) -> bool,
) -> bool {
    let n = d.order();
    if v == n {
        if parts.contains(&0) {
            return false;
        }
        let p = CyclicalPartition {
            parts: parts.map(VertexSet::from_bits),
        };
        return f(&p);
    }
    let missing = parts.iter().filter(|&&p| p == 0).count();
    if n - v < missing {
        return false;
    }
    for i in 0..3 {
        let next = parts[(i + 1) % 3];
        let prev = parts[(i + 2) % 3];
        if d.out_row(v) & next != next || d.in_row(v) & prev != prev {
            continue;
        }
        parts[i] |= 1 << v;
        let stop = assign(d, v + 1, parts, f);
        parts[i] &= !(1 << v);
        if stop {
            return true;
        }
    }
    false
}

/// The first spanning 3-cycle-extension partition in search order.
pub fn spanning_three_cycle_extension(d: &Digraph) -> Option<CyclicalPartition> {
    let mut found = None;
    for_each_spanning_partition(d, &mut |p| {
        found = Some(*p);
        true
    });
    found
}

/// Vertex sets of the maximal 2-edge-connected subgraphs of the underlying
/// graph, ordered by least vertex.
pub fn ug_two_edge_components(d: &Digraph) -> Vec<VertexSet> {
    let n = d.order();
    let mut g = d.underlying_rows();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits(g[u] >> u >> 1 << u << 1).map(move |v| (u, v)))
        .collect();
    let mut bridges = Vec::new();
    for &(u, v) in &edges {
        g[u] &= !(1 << v);
        g[v] &= !(1 << u);
        if reach(&g, u) >> v & 1 == 0 {
            bridges.push((u, v));
        }
        g[u] |= 1 << v;
        g[v] |= 1 << u;
    }
    for &(u, v) in &bridges {
        g[u] &= !(1 << v);
        g[v] &= !(1 << u);
    }
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 0 {
            let c = reach(&g, v);
            seen |= c;
            out.push(VertexSet::from_bits(c));
        }
    }
    out
}

fn is_complete(d: &Digraph) -> bool {
    d.arc_count() == d.order() * d.order().saturating_sub(1)
}

fn exact_extension(d: &Digraph, p: &CyclicalPartition) -> bool {
    d.arc_count() == p.block_arc_count()
}

/// Family 3 conditions for a fixed partition, circumference aside.
fn symmetric_arcs_at_singletons(d: &Digraph, p: &CyclicalPartition) -> bool {
    let sym = d.arc_symmetry().symmetric_pairs;
    !sym.is_empty()
        && sym.iter().all(|&(x, y)| {
            match (p.part_of(x), p.part_of(y)) {
                (Some(i), Some(j)) if i != j => p.parts[i].len() == 1 || p.parts[j].len() == 1,
                _ => false,
            }
        })
}

fn family2(d: &Digraph) -> Option<FamilyEvidence> {
    let mut found = None;
    for_each_spanning_partition(d, &mut |p| {
        if exact_extension(d, p) {
            found = Some(*p);
        }
        found.is_some()
    });
    found.map(|partition| FamilyEvidence::Partition { partition })
}

fn family3(d: &Digraph, circ: usize) -> Option<FamilyEvidence> {
    if circ != 3 {
        return None;
    }
    let mut found = None;
    for_each_spanning_partition(d, &mut |p| {
        if symmetric_arcs_at_singletons(d, p) {
            found = Some(*p);
        }
        found.is_some()
    });
    found.map(|partition| FamilyEvidence::Partition { partition })
}

fn family4(d: &Digraph, circ: usize) -> Option<FamilyEvidence> {
    if circ != 3 {
        return None;
    }
    let comps = ug_two_edge_components(d);
    if comps.len() < 2 {
        return None;
    }
    let big: Vec<VertexSet> = comps.iter().copied().filter(|c| c.len() > 1).collect();
    let [core] = big[..] else {
        return None;
    };
    let pendants = VertexSet::from_bits(d.vertices().bits() & !core.bits());
    let hubs: Vec<usize> = core
        .iter()
        .filter(|&h| pendants.iter().all(|u| d.has_arc(h, u) && d.has_arc(u, h)))
        .collect();
    let labels: Vec<usize> = core.iter().collect();
    let sub = d.induced_unchecked(core.bits());
    let core_has_sym = !sub.is_asymmetric();
    let lift = |p: &CyclicalPartition| CyclicalPartition {
        parts: p.parts.map(|s| s.iter().map(|i| labels[i]).collect()),
    };
    for &hub in &hubs {
        let mut found = None;
        for_each_spanning_partition(&sub, &mut |p| {
            let lifted = lift(p);
            let hub_part = lifted.part_of(hub).expect("hub lies in the core");
            let fits = lifted.parts[hub_part].len() == 1
                && if core_has_sym {
                    symmetric_arcs_at_singletons(&sub, p)
                } else {
                    exact_extension(&sub, p)
                };
            if fits {
                found = Some(lifted);
            }
            fits
        });
        if let Some(partition) = found {
            return Some(FamilyEvidence::Pendant {
                core,
                partition,
                hub,
                pendants,
                core_family: if core_has_sym { 3 } else { 2 },
                interpretation: CLAUSE4_REFERENT,
            });
        }
    }
    None
}

fn symmetric_tree_edges(d: &Digraph) -> Option<Vec<(usize, usize)>> {
    if !d.is_symmetric() || !is_tree(&d.underlying_rows()) {
        return None;
    }
    Some(d.arcs().filter(|&(u, v)| u < v).collect())
}

fn family5(d: &Digraph) -> Option<FamilyEvidence> {
    let ok = d.order() == 5
        && d.is_symmetric()
        && d.arc_count() == 10
        && (0..5).all(|v| d.out_row(v).count_ones() == 2)
        && d.is_strong();
    ok.then_some(FamilyEvidence::None)
}

fn family6(d: &Digraph) -> Option<FamilyEvidence> {
    let edges = symmetric_tree_edges(d)?;
    let n = d.order();
    let star = n >= 4 && (0..n).any(|v| d.out_row(v).count_ones() as usize == n - 1);
    star.then_some(FamilyEvidence::Tree { edges })
}

fn family7(d: &Digraph) -> Option<FamilyEvidence> {
    let edges = symmetric_tree_edges(d)?;
    (undirected_diameter(&d.underlying_rows()) == Some(3)).then_some(FamilyEvidence::Tree { edges })
}

fn clause(d: &Digraph, index: u8, circ: usize) -> Option<FamilyEvidence> {
    match index {
        1 => is_complete(d).then_some(FamilyEvidence::None),
        2 => family2(d),
        3 => family3(d, circ),
        4 => family4(d, circ),
        5 => family5(d),
        6 => family6(d),
        7 => family7(d),
        _ => None,
    }
}

fn check_preconditions(d: &Digraph) -> Result<()> {
    if !d.is_strong() {
        return Err(Error::PreconditionViolated("digraph is not strong".into()));
    }
    if !is_k_transitive(d, 4) {
        return Err(Error::PreconditionViolated("digraph is not 4-transitive".into()));
    }
    Ok(())
}

/// Indices of clauses 1 to 7 that `d` satisfies, plus 8 when none does and
/// the order is at most 4. Used to audit that the families do not overlap.
pub fn clause_matches(d: &Digraph) -> Result<Vec<u8>> {
    check_preconditions(d)?;
    let circ = circumference(d);
    let mut out: Vec<u8> = (1..=7).filter(|&i| clause(d, i, circ).is_some()).collect();
    if out.is_empty() && d.order() <= 4 {
        out.push(8);
    }
    Ok(out)
}

/// The first family, in clause order, that `d` belongs to.
pub fn classify_strong_4_transitive(d: &Digraph) -> Result<FamilyLabel> {
    check_preconditions(d)?;
    let circ = circumference(d);
    for index in 1..=7 {
        if let Some(evidence) = clause(d, index, circ) {
            return Ok(FamilyLabel { index, evidence });
        }
    }
    if d.order() <= 4 {
        return Ok(FamilyLabel {
            index: 8,
            evidence: FamilyEvidence::None,
        });
    }
    Err(Error::Unclassified(d.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn vs<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn spanning_extension_examples() {
        let (d, _) = three_cycle_extension([2, 1, 1]).unwrap();
        let p = spanning_three_cycle_extension(&d).unwrap();
        assert_eq!(p.parts, [vs([0, 1]), vs([2]), vs([3])]);
        let p = spanning_three_cycle_extension(&directed_cycle(3).unwrap()).unwrap();
        assert_eq!(p.parts, [vs([0]), vs([1]), vs([2])]);
        assert!(spanning_three_cycle_extension(&directed_cycle(5).unwrap()).is_none());
    }

    #[test]
    fn two_edge_components_examples() {
        assert_eq!(
            ug_two_edge_components(&directed_cycle(3).unwrap()),
            vec![vs([0, 1, 2])]
        );
        let p3 = biorient(3, &path_edges(3)).unwrap();
        assert_eq!(ug_two_edge_components(&p3), vec![vs([0]), vs([1]), vs([2])]);
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (0, 3)]).unwrap();
        assert_eq!(ug_two_edge_components(&d), vec![vs([0, 1, 2]), vs([3])]);
    }

    #[test]
    fn classifier_examples() {
        let label = |d: &Digraph| classify_strong_4_transitive(d).unwrap().index;
        assert_eq!(label(&complete_digraph(4).unwrap()), 1);
        assert_eq!(label(&biorient(5, &cycle_edges(5)).unwrap()), 5);
        assert_eq!(label(&antihole(4).unwrap()), 8);
        assert_eq!(label(&three_cycle_extension([2, 2, 1]).unwrap().0), 2);
        assert_eq!(label(&biorient(5, &star_edges(4)).unwrap()), 6);
        let tree = biorient(4, &path_edges(4)).unwrap();
        assert_eq!(label(&tree), 7);
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (0, 3)]).unwrap();
        let l = classify_strong_4_transitive(&d).unwrap();
        assert_eq!(l.index, 4);
        assert!(matches!(l.evidence, FamilyEvidence::Pendant { hub: 0, core_family: 2, .. }));
    }

    #[test]
    fn family3_example() {
        // blow up part 1 of C_3 and make the arc between the singletons symmetric
        let arcs = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 0), (0, 3)];
        let d = Digraph::from_arcs(4, &arcs).unwrap();
        let l = classify_strong_4_transitive(&d).unwrap();
        assert_eq!(l.index, 3);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            classify_strong_4_transitive(&transitive_tournament(3).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            classify_strong_4_transitive(&directed_cycle(6).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn complete_on_three_also_meets_family3() {
        assert_eq!(clause_matches(&complete_digraph(3).unwrap()).unwrap(), vec![1, 3]);
    }
}
