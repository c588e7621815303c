//! Induced-subdigraph containment by backtracking.

use crate::digraph::{bits, Digraph};

struct Embedder<'a> {
    host: &'a Digraph,
    pattern: &'a Digraph,
    map: Vec<usize>,
}

impl Embedder<'_> {
    fn degrees_fit(&self, i: usize, v: usize) -> bool {
        let (h, p) = (self.host, self.pattern);
        let sym = |d: &Digraph, x: usize| (d.out_row(x) & d.in_row(x)).count_ones();
        h.out_row(v).count_ones() >= p.out_row(i).count_ones()
            && h.in_row(v).count_ones() >= p.in_row(i).count_ones()
            && sym(h, v) >= sym(p, i)
    }

    fn consistent(&self, i: usize, v: usize) -> bool {
        (0..i).all(|j| {
            let w = self.map[j];
            self.pattern.has_arc(i, j) == self.host.has_arc(v, w)
                && self.pattern.has_arc(j, i) == self.host.has_arc(w, v)
        })
    }

    fn extend(&mut self, i: usize, used: u64) -> bool {
        if i == self.pattern.order() {
            return true;
        }
        let free = self.host.vertices().bits() & !used;
        for v in bits(free) {
            if self.degrees_fit(i, v) && self.consistent(i, v) {
                self.map[i] = v;
                if self.extend(i + 1, used | 1 << v) {
                    return true;
                }
            }
        }
        false
    }
}

/// An injective map `pattern vertex -> host vertex` under which arcs and
/// non-arcs are both preserved, or `None`. The first map in lexicographic
/// order is returned.
pub fn contains_induced(host: &Digraph, pattern: &Digraph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut e = Embedder {
        host,
        pattern,
        map: vec![0; pattern.order()],
    };
    e.extend(0, 0).then_some(e.map)
}

/// `host` has no induced copy of `pattern`.
pub fn is_free_of(host: &Digraph, pattern: &Digraph) -> bool {
    contains_induced(host, pattern).is_none()
}
