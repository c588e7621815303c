//! Semicompleteness and its local and arc-local variants.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{bits, Digraph};
use crate::error::Error;

/// Which neighbourhoods must induce semicomplete digraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeighborhoodMode {
    In,
    Out,
    /// In- and out-neighbourhoods, each separately.
    Both,
    /// The union of in- and out-neighbourhoods.
    Closed,
}

impl NeighborhoodMode {
    pub fn as_str(self) -> &'static str {
        match self {
            NeighborhoodMode::In => "in",
            NeighborhoodMode::Out => "out",
            NeighborhoodMode::Both => "both",
            NeighborhoodMode::Closed => "closed",
        }
    }
}

impl fmt::Display for NeighborhoodMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NeighborhoodMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "in" => Ok(NeighborhoodMode::In),
            "out" => Ok(NeighborhoodMode::Out),
            "both" => Ok(NeighborhoodMode::Both),
            "closed" => Ok(NeighborhoodMode::Closed),
            _ => Err(Error::UnknownPredicate(format!("neighbourhood mode `{s}`"))),
        }
    }
}

/// Every pair of distinct vertices of `mask` is joined by an arc.
#[inline]
pub(crate) fn semicomplete_on(d: &Digraph, mask: u64) -> bool {
    bits(mask).all(|v| (d.out_row(v) | d.in_row(v) | 1 << v) & mask == mask)
}

pub fn is_semicomplete(d: &Digraph) -> bool {
    semicomplete_on(d, d.vertices().bits())
}

pub fn is_locally_semicomplete(d: &Digraph, mode: NeighborhoodMode) -> bool {
    (0..d.order()).all(|v| match mode {
        NeighborhoodMode::In => semicomplete_on(d, d.in_row(v)),
        NeighborhoodMode::Out => semicomplete_on(d, d.out_row(v)),
        NeighborhoodMode::Both => {
            semicomplete_on(d, d.in_row(v)) && semicomplete_on(d, d.out_row(v))
        }
        NeighborhoodMode::Closed => semicomplete_on(d, d.in_row(v) | d.out_row(v)),
    })
}

/// For every arc `(x,y)`, every in- (out-) neighbour of `x` is adjacent to,
/// or equal to, every in- (out-) neighbour of `y`. `Closed` is rejected
/// by the predicate grammar and treated as `Both` here.
pub fn is_arc_locally_semicomplete(d: &Digraph, mode: NeighborhoodMode) -> bool {
    let check_in = !matches!(mode, NeighborhoodMode::Out);
    let check_out = !matches!(mode, NeighborhoodMode::In);
    d.arcs().all(|(x, y)| {
        (!check_in || pairwise_adjacent(d, d.in_row(x), d.in_row(y)))
            && (!check_out || pairwise_adjacent(d, d.out_row(x), d.out_row(y)))
    })
}

fn pairwise_adjacent(d: &Digraph, a: u64, b: u64) -> bool {
    bits(a).all(|z| b & !(d.out_row(z) | d.in_row(z) | 1 << z) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn semicomplete_examples() {
        assert!(is_semicomplete(&antihole(5).unwrap()));
        assert!(!is_semicomplete(&directed_cycle(5).unwrap()));
        assert!(is_semicomplete(&complete_digraph(3).unwrap()));
    }

    #[test]
    fn local_modes_on_c7_12() {
        let d = c7_12();
        assert!(is_locally_semicomplete(&d, NeighborhoodMode::Both));
        assert!(is_locally_semicomplete(&d, NeighborhoodMode::In));
        assert!(is_locally_semicomplete(&d, NeighborhoodMode::Out));
        assert!(!is_locally_semicomplete(&d, NeighborhoodMode::Closed));
    }

    #[test]
    fn cycles_are_locally_semicomplete() {
        for n in 3..10 {
            assert!(is_locally_semicomplete(&directed_cycle(n).unwrap(), NeighborhoodMode::Both));
        }
    }

    #[test]
    fn arc_local_examples() {
        assert!(is_arc_locally_semicomplete(&directed_cycle(5).unwrap(), NeighborhoodMode::In));
        assert!(is_arc_locally_semicomplete(&antihole(4).unwrap(), NeighborhoodMode::Both));
        let d = Digraph::from_arcs(4, &[(0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_arc_locally_semicomplete(&d, NeighborhoodMode::In));
    }
}
