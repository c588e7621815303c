//! Family membership tests, containment, isomorphism and canonical forms.

mod canon;
mod embed;
mod local;
mod paths;
mod perfect;
mod predicate;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm, CANON_MAX_ORDER};
pub(crate) use canon::canonical_bits;
pub use embed::{contains_induced, is_free_of};
pub(crate) use local::semicomplete_on;
pub use local::{
    is_arc_locally_semicomplete, is_locally_semicomplete, is_semicomplete, NeighborhoodMode,
};
pub use paths::{
    circumference, contains_subdigraph_tt3, has_cycle_of_length, has_k_path, is_k_anti_transitive,
    is_k_quasi_transitive, is_k_transitive, k_path_targets,
};
pub use perfect::{is_underlying_perfect, PERFECT_MAX_ORDER};
pub use predicate::{named_digraph, Predicate};

use crate::digraph::Digraph;

/// Every directed 3-cycle uses at least two symmetric arcs.
pub fn three_cycles_have_two_symmetric_arcs(d: &Digraph) -> bool {
    let n = d.order();
    for a in 0..n {
        for b in crate::digraph::bits(d.out_row(a)) {
            for c in crate::digraph::bits(d.out_row(b) & d.in_row(a)) {
                if c == a {
                    continue;
                }
                let sym = [(a, b), (b, c), (c, a)]
                    .iter()
                    .filter(|&&(x, y)| d.has_arc(y, x))
                    .count();
                if sym < 2 {
                    return false;
                }
            }
        }
    }
    true
}

/// Some ordered pair sits at finite distance at least `r`.
pub fn has_geodesic_at_least(d: &Digraph, r: u32) -> bool {
    let dm = d.distances();
    (0..d.order()).any(|u| (0..d.order()).any(|v| dm.get(u, v).is_some_and(|x| x >= r)))
}
