use crate::digraph::{bits, full_mask, reach, Digraph};
use crate::error::{Error, Result};

pub const PERFECT_MAX_ORDER: usize = 10;

/// Is the underlying graph free of induced odd holes and odd antiholes of
/// length at least 5? Brute force over vertex subsets.
pub fn is_underlying_perfect(d: &Digraph) -> Result<bool> {
    let n = d.order();
    if n > PERFECT_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: PERFECT_MAX_ORDER,
        });
    }
    let g = d.underlying_rows();
    for s in 1..=full_mask(n) {
        let k = s.count_ones();
        if k < 5 || k % 2 == 0 {
            continue;
        }
        if is_induced_cycle(&g, s) || is_induced_anticycle(&g, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_induced_cycle(g: &[u64], s: u64) -> bool {
    bits(s).all(|v| (g[v] & s).count_ones() == 2) && connected_within(g, s)
}

fn is_induced_anticycle(g: &[u64], s: u64) -> bool {
    let comp: Vec<u64> = (0..g.len())
        .map(|v| !g[v] & s & !(1 << v))
        .collect();
    is_induced_cycle(&comp, s)
}

fn connected_within(g: &[u64], s: u64) -> bool {
    let rows: Vec<u64> = g.iter().map(|r| r & s).collect();
    let start = s.trailing_zeros() as usize;
    reach(&rows, start) & s == s
}
