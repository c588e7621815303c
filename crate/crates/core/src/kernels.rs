//! Kernel existence, enumeration, kernel-perfection and CKI status.
//!
//! Kernels are searched by branching on vertices from the highest index
//! down, trying exclusion before inclusion, so candidate sets appear in
//! ascending order of their bit pattern. Including a vertex forces its
//! neighbours out; a branch dies as soon as some excluded vertex has no
//! out-neighbour left among the chosen and undecided vertices.

use crate::digraph::{bits, full_mask, Digraph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`is_kernel_perfect`] and [`is_cki`].
pub const LATTICE_MAX_ORDER: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelAnswer {
    Found(VertexSet),
    None,
}

impl KernelAnswer {
    pub fn is_found(&self) -> bool {
        matches!(self, KernelAnswer::Found(_))
    }

    pub fn witness(&self) -> Option<VertexSet> {
        match self {
            KernelAnswer::Found(s) => Some(*s),
            KernelAnswer::None => None,
        }
    }
}

/// Independent and absorbent.
pub fn is_kernel(d: &Digraph, s: VertexSet) -> Result<bool> {
    d.check_set(s)?;
    let s = s.bits();
    let independent = bits(s).all(|v| d.out_row(v) & s == 0);
    let outside = d.vertices().bits() & !s;
    Ok(independent && bits(outside).all(|v| d.out_row(v) & s != 0))
}

struct Search<'a> {
    out: &'a [u64],
    und: &'a [u64],
}

impl Search<'_> {
    fn absorbed(&self, excluded: u64, pool: u64) -> bool {
        bits(excluded).all(|x| self.out[x] & pool != 0)
    }

    /// Calls `visit` on each kernel inside the induced subdigraph on
    /// `chosen | excluded | undecided`, ascending; stops when it returns true.
    fn run(
        &self,
        chosen: u64,
        excluded: u64,
        undecided: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if undecided == 0 {
            return visit(chosen);
        }
        let v = 63 - undecided.leading_zeros() as usize;
        let rest = undecided & !(1 << v);

        let ex = excluded | 1 << v;
        if self.absorbed(ex, chosen | rest) && self.run(chosen, ex, rest, visit) {
            return true;
        }

        let ch = chosen | 1 << v;
        let forced = self.und[v] & rest;
        let left = rest & !forced;
        let ex = excluded | forced;
        self.absorbed(ex, ch | left) && self.run(ch, ex, left, visit)
    }
}

fn with_search<T>(d: &Digraph, f: impl FnOnce(&Search) -> T) -> T {
    let und = d.underlying_rows();
    f(&Search {
        out: d.out_rows(),
        und: &und,
    })
}

fn first_kernel(s: &Search, mask: u64) -> Option<u64> {
    let mut found = None;
    s.run(0, 0, mask, &mut |k| {
        found = Some(k);
        true
    });
    found
}

/// The kernel with the smallest bit pattern, if any.
pub fn find_kernel(d: &Digraph) -> KernelAnswer {
    let mask = d.vertices().bits();
    match with_search(d, |s| first_kernel(s, mask)) {
        Some(k) => KernelAnswer::Found(VertexSet::from_bits(k)),
        None => KernelAnswer::None,
    }
}

/// Every kernel, ascending by bit pattern.
pub fn all_kernels(d: &Digraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    with_search(d, |s| {
        s.run(0, 0, d.vertices().bits(), &mut |k| {
            out.push(VertexSet::from_bits(k));
            false
        })
    });
    out
}

fn check_lattice_order(d: &Digraph) -> Result<()> {
    if d.order() > LATTICE_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n: d.order(),
            max: LATTICE_MAX_ORDER,
        });
    }
    Ok(())
}

/// Every nonempty subset of `mask` (and `mask` itself when `include_top`)
/// induces a subdigraph with a kernel. Subsets are visited in ascending
/// order with early exit.
fn lattice_has_kernels(s: &Search, mask: u64, include_top: bool) -> bool {
    let mut sub = 0u64;
    loop {
        sub = sub.wrapping_sub(mask) & mask;
        if sub == 0 || (sub == mask && !include_top) {
            return true;
        }
        if first_kernel(s, sub).is_none() {
            return false;
        }
    }
}

/// Every induced subdigraph, including `d` itself, has a kernel.
pub fn is_kernel_perfect(d: &Digraph) -> Result<bool> {
    check_lattice_order(d)?;
    let mask = d.vertices().bits();
    Ok(with_search(d, |s| lattice_has_kernels(s, mask, true)))
}

/// No kernel, while every proper induced subdigraph has one.
pub fn is_cki(d: &Digraph) -> Result<bool> {
    check_lattice_order(d)?;
    let n = d.order();
    if n == 0 {
        return Ok(false);
    }
    let full = full_mask(n);
    Ok(with_search(d, |s| {
        if first_kernel(s, full).is_some() {
            return false;
        }
        if (0..n).any(|v| first_kernel(s, full & !(1 << v)).is_none()) {
            return false;
        }
        lattice_has_kernels(s, full, false)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn set<const N: usize>(vs: [usize; N]) -> VertexSet {
        VertexSet::from(vs)
    }

    #[test]
    fn is_kernel_examples() {
        assert!(is_kernel(&directed_cycle(4).unwrap(), set([0, 2])).unwrap());
        assert!(!is_kernel(&directed_cycle(3).unwrap(), set([0])).unwrap());
        assert!(is_kernel(&Digraph::empty(3).unwrap(), set([0, 1, 2])).unwrap());
        assert!(is_kernel(&Digraph::empty(0).unwrap(), VertexSet::EMPTY).unwrap());
        assert!(!is_kernel(&Digraph::empty(1).unwrap(), VertexSet::EMPTY).unwrap());
        assert!(matches!(
            is_kernel(&directed_cycle(3).unwrap(), set([5])),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn find_kernel_examples() {
        assert_eq!(find_kernel(&directed_cycle(3).unwrap()), KernelAnswer::None);
        assert_eq!(find_kernel(&antihole(4).unwrap()), KernelAnswer::None);
        assert_eq!(
            find_kernel(&directed_cycle(4).unwrap()),
            KernelAnswer::Found(set([0, 2]))
        );
        assert_eq!(
            find_kernel(&Digraph::empty(0).unwrap()),
            KernelAnswer::Found(VertexSet::EMPTY)
        );
    }

    #[test]
    fn all_kernels_examples() {
        assert_eq!(
            all_kernels(&directed_cycle(6).unwrap()),
            vec![set([0, 2, 4]), set([1, 3, 5])]
        );
        let star = biorient(4, &star_edges(3)).unwrap();
        assert_eq!(all_kernels(&star), vec![set([0]), set([1, 2, 3])]);
        assert!(all_kernels(&directed_cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn perfection_and_cki() {
        assert!(is_kernel_perfect(&directed_cycle(4).unwrap()).unwrap());
        assert!(!is_kernel_perfect(&directed_cycle(5).unwrap()).unwrap());
        assert!(is_kernel_perfect(&transitive_tournament(4).unwrap()).unwrap());
        assert!(is_cki(&c7_12()).unwrap());
        assert!(is_cki(&antihole(5).unwrap()).unwrap());
        assert!(!is_cki(&directed_cycle(6).unwrap()).unwrap());
        let empty = Digraph::empty(0).unwrap();
        assert!(is_kernel_perfect(&empty).unwrap());
        assert!(!is_cki(&empty).unwrap());
        assert!(matches!(
            is_cki(&directed_cycle(16).unwrap()),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn kernel_less_but_not_critical() {
        // C_3 plus a vertex pointing into it: no kernel, contains C_3
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0)]).unwrap();
        assert!(!find_kernel(&d).is_found());
        assert!(!is_cki(&d).unwrap());
    }
}
