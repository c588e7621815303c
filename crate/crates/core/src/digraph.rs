//! Loop-free digraphs on at most 63 vertices, stored as one out-row and one
//! in-row word per vertex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported order. One adjacency row must fit in a `u64`.
pub const MAX_ORDER: usize = 63;

/// Sentinel distance for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// A set of vertices, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest vertex index plus one, or zero for the empty set.
    pub(crate) fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite loop-free digraph without multiple arcs. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Digraph {
            n,
            out_rows: vec![0; n],
            in_rows: vec![0; n],
        })
    }

    /// Builds a digraph from an arc list. Repeated arcs collapse.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut out_rows = vec![0u64; n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            out_rows[u] |= 1 << v;
        }
        Ok(Self::from_out_rows_unchecked(out_rows))
    }

    /// Builds a digraph from out-neighbour rows, validating range and loops.
    pub fn from_out_rows(out_rows: Vec<u64>) -> Result<Self> {
        let n = out_rows.len();
        check_order(n)?;
        let mask = full_mask(n);
        for (v, &row) in out_rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopArc(v));
            }
        }
        Ok(Self::from_out_rows_unchecked(out_rows))
    }

    pub(crate) fn from_out_rows_unchecked(out_rows: Vec<u64>) -> Self {
        let n = out_rows.len();
        debug_assert!(n <= MAX_ORDER);
        let mut in_rows = vec![0u64; n];
        for (u, &row) in out_rows.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0);
            for v in bits(row) {
                in_rows[v] |= 1 << u;
            }
        }
        Digraph {
            n,
            out_rows,
            in_rows,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_rows[u] >> v & 1 == 1
    }

    /// True when an arc joins `u` and `v` in at least one direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.out_rows[u] | self.in_rows[u]) >> v & 1 == 1
    }

    #[inline]
    pub fn out_row(&self, v: usize) -> u64 {
        self.out_rows[v]
    }

    #[inline]
    pub fn in_row(&self, v: usize) -> u64 {
        self.in_rows[v]
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out_rows
    }

    pub fn in_rows(&self) -> &[u64] {
        &self.in_rows
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out_rows[v])
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.in_rows[v])
    }

    /// Neighbours in the underlying graph.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out_rows[v] | self.in_rows[v])
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row).map(move |v| (u, v)))
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.bound() > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: s.bound() - 1,
                n: self.n,
            });
        }
        Ok(())
    }

    /// The subdigraph induced by `s`, relabelled `0..|s|` in ascending order of `s`.
    pub fn induced(&self, s: VertexSet) -> Result<Digraph> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s.bits()))
    }

    pub(crate) fn induced_unchecked(&self, mask: u64) -> Digraph {
        let verts: Vec<usize> = bits(mask).collect();
        let rows = verts
            .iter()
            .map(|&u| {
                let row = self.out_rows[u] & mask;
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| row >> v & 1 == 1)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Digraph::from_out_rows_unchecked(rows)
    }

    /// The digraph obtained by deleting vertex `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Digraph> {
        self.induced(self.vertices() - VertexSet::singleton(v))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange { vertex: p, n: self.n });
            }
            seen |= 1 << p;
        }
        if seen != full_mask(self.n) {
            return Err(Error::PreconditionViolated("not a permutation".into()));
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.arcs() {
            rows[perm[u]] |= 1 << perm[v];
        }
        Ok(Digraph::from_out_rows_unchecked(rows))
    }

    /// Ordered pair `(u,v)`, `u != v`, is an arc of the result iff it is not an arc of `self`.
    pub fn complement(&self) -> Digraph {
        let mask = full_mask(self.n);
        let rows = (0..self.n)
            .map(|v| !self.out_rows[v] & mask & !(1 << v))
            .collect();
        Digraph::from_out_rows_unchecked(rows)
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph::from_out_rows_unchecked(self.in_rows.clone())
    }

    /// Vertices reachable from `v` by directed paths (including `v`).
    pub fn reachable_from(&self, v: usize) -> VertexSet {
        VertexSet(reach(&self.out_rows, v))
    }

    pub fn is_strong(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = full_mask(self.n);
        reach(&self.out_rows, 0) == all && reach(&self.in_rows, 0) == all
    }

    /// All-pairs BFS distances.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![UNREACHABLE; n * n];
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            let mut seen = 1u64 << src;
            let mut frontier = seen;
            let mut level = 0u32;
            while frontier != 0 {
                for v in bits(frontier) {
                    row[v] = level;
                }
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.out_rows[v];
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        DistanceMatrix::new(n, d)
    }

    /// Splits the arc set into symmetric pairs and asymmetric arcs.
    pub fn arc_symmetry(&self) -> ArcSymmetry {
        let mut symmetric_pairs = Vec::new();
        let mut asymmetric_arcs = Vec::new();
        for (u, v) in self.arcs() {
            if self.has_arc(v, u) {
                if u < v {
                    symmetric_pairs.push((u, v));
                }
            } else {
                asymmetric_arcs.push((u, v));
            }
        }
        ArcSymmetry {
            is_asymmetric: symmetric_pairs.is_empty(),
            is_symmetric: asymmetric_arcs.is_empty(),
            symmetric_pairs,
            asymmetric_arcs,
        }
    }

    /// No arc is symmetrical (an oriented graph).
    pub fn is_asymmetric(&self) -> bool {
        (0..self.n).all(|v| self.out_rows[v] & self.in_rows[v] == 0)
    }

    /// Every arc is symmetrical.
    pub fn is_symmetric(&self) -> bool {
        self.out_rows == self.in_rows
    }

    /// Underlying simple graph as neighbour rows.
    pub fn underlying_rows(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.out_rows[v] | self.in_rows[v])
            .collect()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    Ok(())
}

pub(crate) fn reach(rows: &[u64], v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= rows[u];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("])")
    }
}

/// Partition of the arc set by symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSymmetry {
    /// Unordered pairs `{u,v}` (with `u < v`) joined in both directions.
    pub symmetric_pairs: Vec<(usize, usize)>,
    pub asymmetric_arcs: Vec<(usize, usize)>,
    pub is_asymmetric: bool,
    pub is_symmetric: bool,
}

/// All-pairs directed distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    fn new(n: usize, d: Vec<u32>) -> Self {
        let diameter = if d.contains(&UNREACHABLE) {
            UNREACHABLE
        } else {
            d.iter().copied().max().unwrap_or(0)
        };
        DistanceMatrix { n, d, diameter }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw distance, `UNREACHABLE` when there is no path.
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.raw(u, v);
        (x != UNREACHABLE).then_some(x)
    }

    /// Maximum distance, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        (self.diameter != UNREACHABLE).then_some(self.diameter)
    }

    pub fn raw_diameter(&self) -> u32 {
        self.diameter
    }

    /// `{x : d(x, v) = i}`.
    pub fn shell(&self, v: usize, i: u32) -> VertexSet {
        (0..self.n).filter(|&x| self.raw(x, v) == i).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn from_arcs_builds_cycle() {
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.arc_count(), 3);
        assert!(c3.has_arc(2, 0));
        assert!(!c3.has_arc(0, 2));
    }

    #[test]
    fn from_arcs_single_vertex() {
        let d = Digraph::from_arcs(1, &[]).unwrap();
        assert_eq!(d.order(), 1);
        assert_eq!(d.arc_count(), 0);
    }

    #[test]
    fn from_arcs_errors() {
        assert_eq!(Digraph::from_arcs(3, &[(0, 0)]), Err(Error::LoopArc(0)));
        assert_eq!(
            Digraph::from_arcs(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            Digraph::from_arcs(64, &[]),
            Err(Error::OrderTooLarge { n: 64, .. })
        ));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let d = Digraph::from_arcs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn induced_identity_and_pair() {
        let c5 = cycle(5);
        assert_eq!(c5.induced(c5.vertices()).unwrap(), c5);
        let pair = c5.induced(VertexSet::from([0, 1])).unwrap();
        assert_eq!(pair.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(c5.induced(VertexSet::from([5])).is_err());
    }

    #[test]
    fn cycle_shells() {
        let dm = cycle(5).distances();
        assert_eq!(dm.shell(0, 1), VertexSet::from([4]));
        assert_eq!(dm.shell(0, 2), VertexSet::from([3]));
        assert_eq!(dm.shell(0, 3), VertexSet::from([2]));
        assert_eq!(dm.shell(0, 4), VertexSet::from([1]));
        assert_eq!(dm.diameter(), Some(4));
    }

    #[test]
    fn non_strong_has_no_diameter() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!d.is_strong());
        assert_eq!(d.distances().diameter(), None);
        assert_eq!(d.distances().get(0, 2), Some(2));
        assert_eq!(d.distances().get(2, 0), None);
    }

    #[test]
    fn trivial_orders_are_strong() {
        assert!(Digraph::empty(0).unwrap().is_strong());
        assert!(Digraph::empty(1).unwrap().is_strong());
        assert!(!Digraph::empty(2).unwrap().is_strong());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k3 = Digraph::from_arcs(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(k3.complement().arc_count(), 0);
        assert_eq!(k3.complement().complement(), k3);
    }

    #[test]
    fn vertex_set_display() {
        assert_eq!(VertexSet::from([0, 2]).to_string(), "{0,2}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn permute_rejects_non_permutation() {
        let c3 = cycle(3);
        assert!(c3.permute(&[0, 0, 1]).is_err());
        assert_eq!(c3.permute(&[1, 2, 0]).unwrap(), c3);
    }
}
