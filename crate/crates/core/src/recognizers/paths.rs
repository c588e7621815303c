//! Predicates defined through directed paths with pairwise-distinct vertices.

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};

fn walk(rows: &[u64], v: usize, visited: u64, left: usize, acc: &mut u64) {
    if left == 0 {
        *acc |= 1 << v;
        return;
    }
    for w in bits(rows[v] & !visited) {
        walk(rows, w, visited | 1 << w, left - 1, acc);
    }
}

/// Endpoints of all `k`-paths starting at `u`.
pub fn k_path_targets(d: &Digraph, u: usize, k: usize) -> u64 {
    let mut acc = 0;
    if k < d.order() {
        walk(d.out_rows(), u, 1 << u, k, &mut acc);
    }
    acc
}

fn find_path(rows: &[u64], v: usize, target: usize, visited: u64, left: usize) -> bool {
    if left == 1 {
        return rows[v] >> target & 1 == 1;
    }
    bits(rows[v] & !visited & !(1 << target))
        .any(|w| find_path(rows, w, target, visited | 1 << w, left - 1))
}

/// True iff a directed path with exactly `k` arcs runs from `u` to `v`.
pub fn has_k_path(d: &Digraph, u: usize, v: usize, k: usize) -> Result<bool> {
    let n = d.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if k == 0 || k >= n {
        return Err(Error::LengthOutOfRange { k, n });
    }
    if u == v {
        return Err(Error::PreconditionViolated(
            "k-path endpoints must be distinct".into(),
        ));
    }
    Ok(find_path(d.out_rows(), u, v, 1 << u, k))
}

/// Every `k`-path forces an arc in some direction between its endpoints.
pub fn is_k_quasi_transitive(d: &Digraph, k: usize) -> bool {
    (0..d.order()).all(|u| k_path_targets(d, u, k) & !(d.out_row(u) | d.in_row(u)) == 0)
}

/// Every `k`-path from `u` to `v` forces the arc `(u,v)`.
pub fn is_k_transitive(d: &Digraph, k: usize) -> bool {
    (0..d.order()).all(|u| k_path_targets(d, u, k) & !d.out_row(u) == 0)
}

/// No `k`-path from `u` to `v` coexists with the arc `(u,v)`.
pub fn is_k_anti_transitive(d: &Digraph, k: usize) -> bool {
    (0..d.order()).all(|u| k_path_targets(d, u, k) & d.out_row(u) == 0)
}

/// Some `a -> b`, `b -> c`, `a -> c` with distinct `a,b,c` (not necessarily induced).
pub fn contains_subdigraph_tt3(d: &Digraph) -> bool {
    (0..d.order()).any(|a| bits(d.out_row(a)).any(|b| d.out_row(a) & d.out_row(b) != 0))
}

fn longest_cycle_from(rows: &[u64], start: usize, v: usize, allowed: u64, len: usize, best: &mut usize) {
    if rows[v] >> start & 1 == 1 && len > *best {
        *best = len;
    }
    for w in bits(rows[v] & allowed) {
        longest_cycle_from(rows, start, w, allowed & !(1 << w), len + 1, best);
    }
}

/// Length of a longest directed cycle; 0 for acyclic digraphs.
pub fn circumference(d: &Digraph) -> usize {
    let n = d.order();
    let mut best = 0;
    for s in 0..n {
        // cycles whose smallest vertex is s
        let allowed = !((1u64 << (s + 1)) - 1) & crate::digraph::full_mask(n);
        longest_cycle_from(d.out_rows(), s, s, allowed, 1, &mut best);
    }
    if best == 1 {
        0
    } else {
        best
    }
}

/// Does `d` contain a directed cycle of length exactly `len` (not necessarily induced)?
pub fn has_cycle_of_length(d: &Digraph, len: usize) -> bool {
    if len < 2 || len > d.order() {
        return false;
    }
    (0..d.order()).any(|s| {
        let allowed = crate::digraph::full_mask(d.order()) & !((1u64 << (s + 1)) - 1);
        cycle_len_from(d.out_rows(), s, s, allowed, len - 1)
    })
}

fn cycle_len_from(rows: &[u64], start: usize, v: usize, allowed: u64, left: usize) -> bool {
    if left == 0 {
        return rows[v] >> start & 1 == 1;
    }
    bits(rows[v] & allowed).any(|w| cycle_len_from(rows, start, w, allowed & !(1 << w), left - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn k_paths_on_cycle() {
        let c5 = directed_cycle(5).unwrap();
        assert!(has_k_path(&c5, 0, 4, 4).unwrap());
        assert!(!has_k_path(&c5, 0, 2, 4).unwrap());
        assert!(has_k_path(&c5, 0, 2, 2).unwrap());
        let tt3 = transitive_tournament(3).unwrap();
        assert!(has_k_path(&tt3, 0, 2, 2).unwrap());
    }

    #[test]
    fn k_path_errors() {
        let c5 = directed_cycle(5).unwrap();
        assert!(matches!(has_k_path(&c5, 0, 1, 5), Err(Error::LengthOutOfRange { .. })));
        assert!(matches!(has_k_path(&c5, 0, 1, 0), Err(Error::LengthOutOfRange { .. })));
        assert!(has_k_path(&c5, 0, 0, 2).is_err());
        assert!(has_k_path(&c5, 0, 7, 2).is_err());
    }

    #[test]
    fn quasi_transitivity_examples() {
        assert!(is_k_quasi_transitive(&directed_cycle(5).unwrap(), 4));
        assert!(!is_k_quasi_transitive(&directed_cycle(7).unwrap(), 4));
        let a6 = antihole(6).unwrap();
        for k in 2..=4 {
            assert!(is_k_quasi_transitive(&a6, k));
        }
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_k_transitive(&transitive_tournament(3).unwrap(), 2));
        assert!(!is_k_transitive(&directed_cycle(3).unwrap(), 2));
        assert!(is_k_transitive(&antihole(4).unwrap(), 4));
    }

    #[test]
    fn anti_transitivity_examples() {
        assert!(is_k_anti_transitive(&c7_12(), 3));
        assert!(!is_k_anti_transitive(&transitive_tournament(3).unwrap(), 2));
        assert!(is_k_anti_transitive(&directed_cycle(3).unwrap(), 2));
        // a symmetric pair is not a 2-path u -> v -> u
        let k2 = complete_digraph(2).unwrap();
        assert!(is_k_anti_transitive(&k2, 2));
    }

    #[test]
    fn tt3_subdigraph() {
        assert!(contains_subdigraph_tt3(&antihole(4).unwrap()));
        assert!(!contains_subdigraph_tt3(&directed_cycle(5).unwrap()));
        assert!(contains_subdigraph_tt3(&transitive_tournament(3).unwrap()));
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference(&directed_cycle(6).unwrap()), 6);
        assert_eq!(circumference(&transitive_tournament(4).unwrap()), 0);
        assert_eq!(circumference(&complete_digraph(2).unwrap()), 2);
        assert_eq!(circumference(&antihole(5).unwrap()), 5);
        assert!(has_cycle_of_length(&c7_12(), 4));
        assert!(!has_cycle_of_length(&directed_cycle(5).unwrap(), 3));
    }
}
