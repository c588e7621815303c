//! Clause-by-clause checkers for structural lemmas about shells
//! `S_i = {x : d(x, v) = i}` and neighbourhoods.

use std::fmt;

use serde::Serialize;

use crate::digraph::{bits, Digraph, DistanceMatrix};
use crate::error::{Error, Result};
use crate::families::directed_cycle;
use crate::recognizers::{
    contains_subdigraph_tt3, is_free_of, is_k_anti_transitive, is_k_quasi_transitive,
    semicomplete_on,
};

/// Registered lemma identifiers. `kqtlargediam` also accepts `kqtlargediam:K`.
pub const LEMMA_IDS: &[&str] = &[
    "4qtdiam3local",
    "4qt-dia4o5",
    "4qt-dia4o5-2",
    "asym-4at-neigh",
    "2at-structure",
    "kqtlargediam",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub vertex: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause {}", self.clause)?;
        if let Some(v) = self.vertex {
            write!(f, " at v={v}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaOutcome {
    HypothesisNotMet,
    /// Empty when every clause holds.
    Checked(Vec<Violation>),
}

impl LemmaOutcome {
    pub fn hypothesis_met(&self) -> bool {
        matches!(self, LemmaOutcome::Checked(_))
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            LemmaOutcome::Checked(v) => v,
            LemmaOutcome::HypothesisNotMet => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Lemma {
    Diam3Local,
    Dia4o5,
    Dia4o5Second,
    Asym4atNeigh,
    TwoAtStructure,
    LargeDiameter(usize),
}

impl Lemma {
    pub(crate) fn parse(id: &str) -> Result<Lemma> {
        match id {
            "4qtdiam3local" => Ok(Lemma::Diam3Local),
            "4qt-dia4o5" => Ok(Lemma::Dia4o5),
            "4qt-dia4o5-2" => Ok(Lemma::Dia4o5Second),
            "asym-4at-neigh" => Ok(Lemma::Asym4atNeigh),
            "2at-structure" => Ok(Lemma::TwoAtStructure),
            "kqtlargediam" => Ok(Lemma::LargeDiameter(3)),
            _ => match id.strip_prefix("kqtlargediam:").map(str::parse) {
                Some(Ok(k)) if k >= 3 => Ok(Lemma::LargeDiameter(k)),
                _ => Err(Error::UnknownLemma(id.to_string())),
            },
        }
    }
}

pub fn check_lemma_properties(d: &Digraph, lemma_id: &str) -> Result<LemmaOutcome> {
    Ok(Lemma::parse(lemma_id)?.check(d))
}

struct Sink {
    out: Vec<Violation>,
}

impl Sink {
    fn require(&mut self, ok: bool, clause: &str, vertex: Option<usize>, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(Violation {
                clause: clause.to_string(),
                vertex,
                detail: detail(),
            });
        }
    }
}

fn c3_free(d: &Digraph) -> bool {
    is_free_of(d, &directed_cycle(3).expect("valid order"))
}

fn c5_free(d: &Digraph) -> bool {
    is_free_of(d, &directed_cycle(5).expect("valid order"))
}

fn independent(d: &Digraph, set: u64) -> bool {
    bits(set).all(|x| d.out_row(x) & set == 0)
}

/// No arc from any vertex of `from` to any vertex of `to`.
fn no_arcs(d: &Digraph, from: u64, to: u64) -> bool {
    bits(from).all(|x| d.out_row(x) & to == 0)
}

/// Every arc from `from` to `to` is present.
fn all_arcs(d: &Digraph, from: u64, to: u64) -> bool {
    bits(from).all(|x| d.out_row(x) & to == to & !(1 << x))
}

fn set_str(mask: u64) -> String {
    crate::digraph::VertexSet::from_bits(mask).to_string()
}

impl Lemma {
    fn hypothesis(self, d: &Digraph, dm: &DistanceMatrix) -> bool {
        let diam = dm.diameter();
        match self {
            Lemma::Diam3Local => {
                d.is_asymmetric() && diam == Some(3) && is_k_quasi_transitive(d, 4) && c3_free(d)
            }
            Lemma::Dia4o5 | Lemma::Dia4o5Second => {
                d.is_asymmetric()
                    && matches!(diam, Some(4) | Some(5))
                    && is_k_quasi_transitive(d, 4)
                    && c3_free(d)
                    && c5_free(d)
            }
            Lemma::Asym4atNeigh => {
                d.is_asymmetric() && diam == Some(3) && is_k_anti_transitive(d, 4) && c3_free(d)
            }
            Lemma::TwoAtStructure => is_k_anti_transitive(d, 2),
            Lemma::LargeDiameter(k) => {
                is_k_quasi_transitive(d, k) && long_pairs(dm, k as u32 + 2).next().is_some()
            }
        }
    }

    fn check(self, d: &Digraph) -> LemmaOutcome {
        let dm = d.distances();
        if !self.hypothesis(d, &dm) {
            return LemmaOutcome::HypothesisNotMet;
        }
        let mut sink = Sink { out: Vec::new() };
        match self {
            Lemma::Diam3Local => diam3_local(d, &mut sink),
            Lemma::Dia4o5 => dia4o5(d, &dm, &mut sink),
            Lemma::Dia4o5Second => dia4o5_second(d, &dm, &mut sink),
            Lemma::Asym4atNeigh => asym_4at_neigh(d, &dm, &mut sink),
            Lemma::TwoAtStructure => two_at_structure(d, &mut sink),
            Lemma::LargeDiameter(k) => large_diameter(d, &dm, k, &mut sink),
        }
        LemmaOutcome::Checked(sink.out)
    }
}

fn diam3_local(d: &Digraph, s: &mut Sink) {
    for v in 0..d.order() {
        let (out, inn) = (d.out_row(v), d.in_row(v));
        s.require(semicomplete_on(d, out), "out", Some(v), || {
            format!("N+(v)={} not semicomplete", set_str(out))
        });
        s.require(semicomplete_on(d, inn), "in", Some(v), || {
            format!("N-(v)={} not semicomplete", set_str(inn))
        });
    }
}

fn shells(dm: &DistanceMatrix, v: usize, diam: u32) -> Vec<u64> {
    (0..=diam + 1).map(|i| dm.shell(v, i).bits()).collect()
}

fn dia4o5(d: &Digraph, dm: &DistanceMatrix, s: &mut Sink) {
    let diam = dm.diameter().expect("hypothesis ensures finite diameter");
    for v in 0..d.order() {
        let sh = shells(dm, v, diam);
        let (out, inn) = (d.out_row(v), d.in_row(v));
        let vb = 1u64 << v;
        s.require(sh[1] == inn, "1", Some(v), || {
            format!("S_1={} but N-(v)={}", set_str(sh[1]), set_str(inn))
        });
        for i in 2..=diam as usize {
            s.require(no_arcs(d, sh[i], vb), "2", Some(v), || format!("arc from S_{i} to v"));
        }
        for i in 1..=diam as usize - 2 {
            for j in i + 2..=diam as usize {
                s.require(no_arcs(d, sh[j], sh[i]), "3", Some(v), || {
                    format!("arc from S_{j} to S_{i}")
                });
            }
        }
        s.require(no_arcs(d, sh[2], vb) && no_arcs(d, vb, sh[2]), "4", Some(v), || {
            "v adjacent to S_2".into()
        });
        let s5 = if diam >= 5 { sh[5] } else { 0 };
        s.require(no_arcs(d, s5, vb) && no_arcs(d, vb, s5), "5", Some(v), || {
            "v adjacent to S_5".into()
        });
        s.require(out & !(sh[3] | sh[4]) == 0, "6", Some(v), || {
            format!("N+(v)={} not inside S_3 u S_4", set_str(out))
        });
        s.require(all_arcs(d, vb, sh[4]), "6", Some(v), || {
            format!("v does not dominate S_4={}", set_str(sh[4]))
        });
    }
}

fn dia4o5_second(d: &Digraph, dm: &DistanceMatrix, s: &mut Sink) {
    let diam = dm.diameter().expect("hypothesis ensures finite diameter");
    for v in 0..d.order() {
        let sh = shells(dm, v, diam);
        let out = d.out_row(v);
        let (s3, s4) = (sh[3], sh[4]);
        let s3_in = s3 & out;
        let s3_out = s3 & !out;
        s.require(independent(d, s4), "1", Some(v), || {
            format!("S_4={} not independent", set_str(s4))
        });
        // a semicomplete asymmetric digraph is a tournament; transitive iff acyclic
        let tt = semicomplete_on(d, s3_in) && !has_cycle_within(d, s3_in);
        s.require(tt, "2", Some(v), || {
            format!("S_3 n N+(v)={} not a transitive tournament", set_str(s3_in))
        });
        s.require(independent(d, s3_out), "3", Some(v), || {
            format!("S_3 \\ N+(v)={} not independent", set_str(s3_out))
        });
        s.require(all_arcs(d, s3_in, s3_out), "4", Some(v), || {
            format!("{} does not dominate {}", set_str(s3_in), set_str(s3_out))
        });
        for x4 in bits(s4) {
            for x3 in bits(s3) {
                s.require(d.adjacent(x4, x3), "5", Some(v), || {
                    format!("{x4} in S_4 and {x3} in S_3 non-adjacent")
                });
            }
        }
        for x4 in bits(s4) {
            for x3 in bits(s3 & d.out_row(x4)) {
                for x3p in bits(s3 & d.out_row(x3)) {
                    s.require(d.has_arc(x4, x3p), "6", Some(v), || {
                        format!("{x4}->{x3}->{x3p} without {x4}->{x3p}")
                    });
                    s.require(d.has_arc(x4, x3), "6-literal", Some(v), || {
                        format!("{x4}->{x3} missing")
                    });
                }
            }
        }
        // the proof picks v with every shell up to the diameter nonempty
        if sh[1..=diam as usize].contains(&0) {
            continue;
        }
        s.require(independent(d, s3), "7", Some(v), || {
            format!("S_3={} not independent", set_str(s3))
        });
        if s3_in != 0 {
            s.require(s3.count_ones() == 1 && all_arcs(d, s4, s3), "7", Some(v), || {
                format!("S_3={} meets N+(v) but is not a singleton dominated by S_4", set_str(s3))
            });
        }
    }
}

fn has_cycle_within(d: &Digraph, mask: u64) -> bool {
    let mut left = mask;
    // repeatedly strip vertices with no out-neighbour left
    loop {
        let sink = bits(left).find(|&x| d.out_row(x) & left == 0);
        match sink {
            Some(x) => left &= !(1 << x),
            None => return left != 0,
        }
    }
}

fn asym_4at_neigh(d: &Digraph, dm: &DistanceMatrix, s: &mut Sink) {
    for v in 0..d.order() {
        for w in bits(d.out_row(v)) {
            s.require(dm.get(w, v) == Some(3), "1", Some(v), || {
                format!("d({w},v)={:?}", dm.get(w, v))
            });
        }
        s.require(independent(d, d.out_row(v)), "2", Some(v), || "N+(v) not independent".into());
        s.require(independent(d, d.in_row(v)), "3", Some(v), || "N-(v) not independent".into());
    }
}

fn two_at_structure(d: &Digraph, s: &mut Sink) {
    s.require(!contains_subdigraph_tt3(d), "1", None, || "TT_3 subdigraph".into());
    for v in 0..d.order() {
        s.require(independent(d, d.out_row(v)), "2", Some(v), || "N+(v) not independent".into());
        s.require(independent(d, d.in_row(v)), "2", Some(v), || "N-(v) not independent".into());
    }
}

fn long_pairs(dm: &DistanceMatrix, min: u32) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = dm.order();
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
        .filter(move |&(a, b)| dm.get(a, b).is_some_and(|x| x >= min))
}

fn shortest_paths(d: &Digraph, dm: &DistanceMatrix, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![a];
    extend_paths(d, dm, b, &mut path, &mut out);
    out
}

fn extend_paths(d: &Digraph, dm: &DistanceMatrix, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let cur = *path.last().expect("path is nonempty");
    if cur == b {
        out.push(path.clone());
        return;
    }
    let left = dm.raw(cur, b);
    for w in bits(d.out_row(cur)) {
        if dm.get(w, b).is_some_and(|x| x + 1 == left) {
            path.push(w);
            extend_paths(d, dm, b, path, out);
            path.pop();
        }
    }
}

fn large_diameter(d: &Digraph, dm: &DistanceMatrix, k: usize, s: &mut Sink) {
    for (a, b) in long_pairs(dm, k as u32 + 2) {
        for p in shortest_paths(d, dm, a, b) {
            let r = p.len() - 1;
            let mask = p.iter().fold(0u64, |m, &x| m | 1 << x);
            let back = |parity: bool| {
                (0..=r).all(|j| {
                    (0..j.saturating_sub(1)).all(|i| {
                        (parity && (i + j) % 2 == 0) || d.has_arc(p[j], p[i])
                    })
                })
            };
            let semi = semicomplete_on(d, mask) && back(false);
            let ok = if k % 2 == 0 {
                semi
            } else {
                let even = p.iter().step_by(2).fold(0u64, |m, &x| m | 1 << x);
                let odd = mask & !even;
                let bip = independent(d, even)
                    && independent(d, odd)
                    && bits(even).all(|x| bits(odd).all(|y| d.adjacent(x, y)))
                    && back(true);
                semi || bip
            };
            s.require(ok, if k % 2 == 0 { "1" } else { "2" }, None, || {
                format!("shortest path {p:?} of length {r}")
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn hypothesis_gates() {
        let c5 = directed_cycle(5).unwrap();
        assert_eq!(
            check_lemma_properties(&c5, "asym-4at-neigh").unwrap(),
            LemmaOutcome::HypothesisNotMet
        );
        assert_eq!(
            check_lemma_properties(&transitive_tournament(3).unwrap(), "2at-structure").unwrap(),
            LemmaOutcome::HypothesisNotMet
        );
        assert!(matches!(
            check_lemma_properties(&c5, "nope"),
            Err(Error::UnknownLemma(_))
        ));
    }

    #[test]
    fn two_anti_transitive_cycle_holds() {
        let out = check_lemma_properties(&directed_cycle(4).unwrap(), "2at-structure").unwrap();
        assert_eq!(out, LemmaOutcome::Checked(vec![]));
    }

    #[test]
    fn c7_12_is_locally_semicomplete_but_4qt_fails() {
        // diameter 3, asymmetric and C_3-free, but not 4-quasi-transitive
        assert_eq!(
            check_lemma_properties(&c7_12(), "4qtdiam3local").unwrap(),
            LemmaOutcome::HypothesisNotMet
        );
    }

    #[test]
    fn large_diameter_gate() {
        let d = directed_cycle(7).unwrap();
        assert_eq!(
            check_lemma_properties(&d, "kqtlargediam").unwrap(),
            LemmaOutcome::HypothesisNotMet
        );
        assert!(Lemma::parse("kqtlargediam:4").is_ok());
        assert!(Lemma::parse("kqtlargediam:2").is_err());
    }
}
