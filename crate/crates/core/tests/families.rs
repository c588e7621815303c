mod common;

use ckikit::families::{
    antihole, biorient, biorient_diameter3_tree, complete_digraph, cycle_edges, directed_cycle,
    star_edges, three_cycle_extension,
};
use ckikit::kernels::{is_cki, is_kernel_perfect};
use ckikit::structure4t::{classify_strong_4_transitive, clause_matches};

use common::*;

#[test]
fn antihole_complements_are_cycles() {
    for n in 4..=10 {
        let comp = matrix(&antihole(n).unwrap().complement());
        let cyc = matrix(&directed_cycle(n).unwrap());
        // i -> (n - i) mod n reverses the cycle
        let p = |i: usize| (n - i) % n;
        assert!((0..n).all(|i| (0..n).all(|j| comp[i][j] == cyc[p(i)][p(j)])), "n={n}");
        if n <= 7 {
            assert!(perm_isomorphic(&comp, &cyc));
        }
    }
}

#[test]
fn antiholes_are_cki() {
    for n in 3..=9 {
        assert!(is_cki(&antihole(n).unwrap()).unwrap(), "A_{n}");
    }
}

#[test]
fn generated_members_get_their_label() {
    let label = |d| classify_strong_4_transitive(&d).unwrap().index;
    assert_eq!(label(complete_digraph(5).unwrap()), 1);
    assert_eq!(label(three_cycle_extension([2, 2, 1]).unwrap().0), 2);
    assert_eq!(label(three_cycle_extension([1, 3, 2]).unwrap().0), 2);
    assert_eq!(label(biorient(5, &cycle_edges(5)).unwrap()), 5);
    assert_eq!(label(biorient(6, &star_edges(5)).unwrap()), 6);
    let tree = biorient_diameter3_tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
    assert_eq!(label(tree), 7);
}

#[test]
fn labels_with_kernel_perfect_families() {
    let members = [
        complete_digraph(4).unwrap(),
        biorient(5, &cycle_edges(5)).unwrap(),
        biorient(5, &star_edges(4)).unwrap(),
    ];
    for d in members {
        assert!(is_kernel_perfect(&d).unwrap());
        assert!(!clause_matches(&d).unwrap().is_empty());
    }
}

#[test]
fn diameter3_tree_validation() {
    assert!(biorient_diameter3_tree(4, &[(0, 1), (1, 2), (2, 3)]).is_ok());
    // a star has diameter 2
    assert!(biorient_diameter3_tree(4, &star_edges(3)).is_err());
    // not a tree
    assert!(biorient_diameter3_tree(4, &cycle_edges(4)).is_err());
}
