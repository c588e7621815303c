//! Canonical forms by individualization and equitable refinement.
//!
//! Vertices are coloured by cell position. Each refinement round splits a
//! cell by the count of out-only, in-only and symmetric neighbours the vertex
//! has in every current cell. When refinement stalls, every vertex of the
//! first non-singleton cell is individualized in turn and the search
//! recurses. The form is the least row-major adjacency string over all
//! leaves of that search tree, which depends only on the isomorphism class.

use std::cmp::Ordering;
use std::fmt;

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`]; `n * n` bits must fit a `u128`.
pub const CANON_MAX_ORDER: usize = 10;

/// Isomorphism-class key: order plus the canonical adjacency string, first
/// matrix entry in the most significant used bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn raw_bits(&self) -> u128 {
        self.bits
    }

    pub(crate) fn from_parts(n: usize, bits: u128) -> Self {
        CanonicalForm { n: n as u8, bits }
    }

    /// The `n*n` adjacency bits, row-major, packed most-significant-bit first.
    pub fn bytes(&self) -> Vec<u8> {
        let n = self.order();
        let len = n * n;
        let mut out = vec![0u8; len.div_ceil(8)];
        for i in 0..len {
            if self.bits >> (len - 1 - i) & 1 == 1 {
                out[i / 8] |= 0x80 >> (i % 8);
            }
        }
        out
    }

    /// Canonical out-rows.
    pub fn rows(&self) -> Vec<u64> {
        let n = self.order();
        let len = n * n;
        (0..n)
            .map(|i| {
                (0..n).fold(0u64, |row, j| {
                    row | ((self.bits >> (len - 1 - (i * n + j))) as u64 & 1) << j
                })
            })
            .collect()
    }

    /// The canonical representative of the class.
    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_out_rows_unchecked(self.rows())
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.bits).cmp(&(other.n, other.bits))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, ", self.n)?;
        for b in self.bytes() {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: CANON_MAX_ORDER,
        });
    }
    Ok(CanonicalForm::from_parts(n, canonical_bits(d.out_rows())))
}

/// Isomorphism test. Uses canonical forms up to [`CANON_MAX_ORDER`] and an
/// induced-embedding search beyond.
pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    if a.order() <= CANON_MAX_ORDER {
        return canonical_bits(a.out_rows()) == canonical_bits(b.out_rows());
    }
    super::embed::contains_induced(a, b).is_some()
}

struct Ctx {
    n: usize,
    out: [u64; CANON_MAX_ORDER],
    out_only: [u64; CANON_MAX_ORDER],
    in_only: [u64; CANON_MAX_ORDER],
    both: [u64; CANON_MAX_ORDER],
    best: Option<u128>,
}

type Colors = [u8; CANON_MAX_ORDER];

/// Canonical adjacency string of the digraph given by `rows` (order <= 10).
pub(crate) fn canonical_bits(rows: &[u64]) -> u128 {
    let n = rows.len();
    debug_assert!(n <= CANON_MAX_ORDER);
    if n <= 1 {
        return 0;
    }
    let mut ctx = Ctx {
        n,
        out: [0; CANON_MAX_ORDER],
        out_only: [0; CANON_MAX_ORDER],
        in_only: [0; CANON_MAX_ORDER],
        both: [0; CANON_MAX_ORDER],
        best: None,
    };
    let mut inr = [0u64; CANON_MAX_ORDER];
    for (u, &row) in rows.iter().enumerate() {
        ctx.out[u] = row;
        for v in bits(row) {
            inr[v] |= 1 << u;
        }
    }
    for v in 0..n {
        ctx.out_only[v] = ctx.out[v] & !inr[v];
        ctx.in_only[v] = inr[v] & !ctx.out[v];
        ctx.both[v] = ctx.out[v] & inr[v];
    }
    let colors = [0u8; CANON_MAX_ORDER];
    search(&mut ctx, colors);
    ctx.best.expect("search reaches at least one leaf")
}

fn cell_count(n: usize, colors: &Colors) -> usize {
    let mut seen = 0u32;
    for &c in &colors[..n] {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

fn refine(ctx: &Ctx, colors: &mut Colors) {
    let n = ctx.n;
    let mut cells = cell_count(n, colors);
    while cells < n {
        let mut masks = [0u64; CANON_MAX_ORDER];
        for v in 0..n {
            masks[colors[v] as usize] |= 1 << v;
        }
        let mut sig = [0u128; CANON_MAX_ORDER];
        for v in 0..n {
            let mut s = 0u128;
            for &m in masks[..n].iter().filter(|&&m| m != 0) {
                let a = (ctx.out_only[v] & m).count_ones() as u128;
                let b = (ctx.in_only[v] & m).count_ones() as u128;
                let c = (ctx.both[v] & m).count_ones() as u128;
                s = s << 12 | a << 8 | b << 4 | c;
            }
            sig[v] = s;
        }
        let mut next = *colors;
        for (start, &m) in masks[..n].iter().enumerate() {
            if m.count_ones() < 2 {
                continue;
            }
            for v in bits(m) {
                let below = bits(m).filter(|&w| sig[w] < sig[v]).count();
                next[v] = (start + below) as u8;
            }
        }
        *colors = next;
        let now = cell_count(n, colors);
        if now == cells {
            break;
        }
        cells = now;
    }
}

fn leaf_bits(ctx: &Ctx, colors: &Colors) -> u128 {
    let n = ctx.n;
    let mut vert = [0usize; CANON_MAX_ORDER];
    for v in 0..n {
        vert[colors[v] as usize] = v;
    }
    let mut key = 0u128;
    for &u in &vert[..n] {
        let row = ctx.out[u];
        for &v in &vert[..n] {
            key = key << 1 | (row >> v & 1) as u128;
        }
    }
    key
}

fn search(ctx: &mut Ctx, mut colors: Colors) {
    refine(ctx, &mut colors);
    let n = ctx.n;
    let mut masks = [0u64; CANON_MAX_ORDER];
    for v in 0..n {
        masks[colors[v] as usize] |= 1 << v;
    }
    let target = masks[..n].iter().position(|m| m.count_ones() > 1);
    match target {
        None => {
            let key = leaf_bits(ctx, &colors);
            if ctx.best.is_none_or(|b| key < b) {
                ctx.best = Some(key);
            }
        }
        Some(start) => {
            let cell = masks[start];
            for v in bits(cell) {
                let mut child = colors;
                for w in bits(cell & !(1 << v)) {
                    child[w] = start as u8 + 1;
                }
                search(ctx, child);
            }
        }
    }
}
