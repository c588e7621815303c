//! Named predicates with stable string identifiers, as used by filters and reports.
//!
//! Grammar: `name` or `name:arg`; alternatives are joined with `|`.
//!
//! | identifier | meaning |
//! |---|---|
//! | `k-quasi-transitive:K`, `k-transitive:K`, `k-anti-transitive:K` | path-closure conditions, `K >= 2` |
//! | `semicomplete` | every pair adjacent |
//! | `locally-semicomplete:in\|out\|both\|closed` | neighbourhoods semicomplete |
//! | `arc-locally-semicomplete:in\|out\|both` | arc-local condition |
//! | `tt3-free` | no `TT_3` subdigraph |
//! | `free:H` | no induced copy of `H` (a name such as `c3`, `a4`, `c7-12`, or a digraph6 string) |
//! | `underlying-perfect` | underlying graph has no odd hole or odd antihole |
//! | `asymmetric`, `symmetric` | arc symmetry |
//! | `three-cycles-2sym` | every 3-cycle has at least two symmetric arcs |
//! | `strong`, `diameter:D`, `geodesic-at-least:R` | connectivity and distances |
//! | `has-kernel`, `kernel-perfect`, `cki` | kernel status |

use std::fmt;
use std::str::FromStr;

use super::local::NeighborhoodMode;
use super::*;
use crate::digraph::Digraph;
use crate::error::Error;
use crate::{cli::codec, families, kernels};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    KQuasiTransitive(usize),
    KTransitive(usize),
    KAntiTransitive(usize),
    Semicomplete,
    LocallySemicomplete(NeighborhoodMode),
    ArcLocallySemicomplete(NeighborhoodMode),
    Tt3Free,
    /// Induced-`H`-free; the label is kept for the identifier.
    Free(String, Digraph),
    UnderlyingPerfect,
    Asymmetric,
    Symmetric,
    ThreeCyclesTwoSym,
    Strong,
    Diameter(u32),
    GeodesicAtLeast(u32),
    HasKernel,
    KernelPerfect,
    Cki,
    Any(Vec<Predicate>),
}

impl Predicate {
    pub fn eval(&self, d: &Digraph) -> bool {
        match self {
            Predicate::KQuasiTransitive(k) => is_k_quasi_transitive(d, *k),
            Predicate::KTransitive(k) => is_k_transitive(d, *k),
            Predicate::KAntiTransitive(k) => is_k_anti_transitive(d, *k),
            Predicate::Semicomplete => is_semicomplete(d),
            Predicate::LocallySemicomplete(m) => is_locally_semicomplete(d, *m),
            Predicate::ArcLocallySemicomplete(m) => is_arc_locally_semicomplete(d, *m),
            Predicate::Tt3Free => !contains_subdigraph_tt3(d),
            Predicate::Free(_, h) => is_free_of(d, h),
            Predicate::UnderlyingPerfect => is_underlying_perfect(d).unwrap_or(false),
            Predicate::Asymmetric => d.is_asymmetric(),
            Predicate::Symmetric => d.is_symmetric(),
            Predicate::ThreeCyclesTwoSym => three_cycles_have_two_symmetric_arcs(d),
            Predicate::Strong => d.is_strong(),
            Predicate::Diameter(k) => d.distances().diameter() == Some(*k),
            Predicate::GeodesicAtLeast(r) => has_geodesic_at_least(d, *r),
            Predicate::HasKernel => kernels::find_kernel(d).is_found(),
            Predicate::KernelPerfect => kernels::is_kernel_perfect(d).unwrap_or(false),
            Predicate::Cki => kernels::is_cki(d).unwrap_or(false),
            Predicate::Any(ps) => ps.iter().any(|p| p.eval(d)),
        }
    }

    /// Preserved under taking induced subdigraphs, hence safe for pruning.
    pub fn is_hereditary(&self) -> bool {
        match self {
            Predicate::KQuasiTransitive(_)
            | Predicate::KTransitive(_)
            | Predicate::KAntiTransitive(_)
            | Predicate::Semicomplete
            | Predicate::LocallySemicomplete(_)
            | Predicate::ArcLocallySemicomplete(_)
            | Predicate::Tt3Free
            | Predicate::Free(..)
            | Predicate::UnderlyingPerfect
            | Predicate::Asymmetric
            | Predicate::Symmetric
            | Predicate::ThreeCyclesTwoSym
            | Predicate::KernelPerfect => true,
            Predicate::Strong
            | Predicate::Diameter(_)
            | Predicate::GeodesicAtLeast(_)
            | Predicate::HasKernel
            | Predicate::Cki => false,
            Predicate::Any(ps) => ps.iter().all(Predicate::is_hereditary),
        }
    }

    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::KQuasiTransitive(k) => write!(f, "k-quasi-transitive:{k}"),
            Predicate::KTransitive(k) => write!(f, "k-transitive:{k}"),
            Predicate::KAntiTransitive(k) => write!(f, "k-anti-transitive:{k}"),
            Predicate::Semicomplete => f.write_str("semicomplete"),
            Predicate::LocallySemicomplete(m) => write!(f, "locally-semicomplete:{m}"),
            Predicate::ArcLocallySemicomplete(m) => write!(f, "arc-locally-semicomplete:{m}"),
            Predicate::Tt3Free => f.write_str("tt3-free"),
            Predicate::Free(label, _) => write!(f, "free:{label}"),
            Predicate::UnderlyingPerfect => f.write_str("underlying-perfect"),
            Predicate::Asymmetric => f.write_str("asymmetric"),
            Predicate::Symmetric => f.write_str("symmetric"),
            Predicate::ThreeCyclesTwoSym => f.write_str("three-cycles-2sym"),
            Predicate::Strong => f.write_str("strong"),
            Predicate::Diameter(k) => write!(f, "diameter:{k}"),
            Predicate::GeodesicAtLeast(r) => write!(f, "geodesic-at-least:{r}"),
            Predicate::HasKernel => f.write_str("has-kernel"),
            Predicate::KernelPerfect => f.write_str("kernel-perfect"),
            Predicate::Cki => f.write_str("cki"),
            Predicate::Any(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_k(arg: Option<&str>, whole: &str) -> Result<usize, Error> {
    match arg.and_then(|a| a.parse::<usize>().ok()) {
        Some(k) if k >= 2 => Ok(k),
        _ => Err(Error::UnknownPredicate(whole.to_string())),
    }
}

fn parse_u32(arg: Option<&str>, whole: &str) -> Result<u32, Error> {
    arg.and_then(|a| a.parse().ok())
        .ok_or_else(|| Error::UnknownPredicate(whole.to_string()))
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.contains('|') {
            let parts = s
                .split('|')
                .map(str::parse)
                .collect::<Result<Vec<Predicate>, _>>()?;
            return Ok(Predicate::Any(parts));
        }
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let unknown = || Error::UnknownPredicate(s.to_string());
        let no_arg = |p: Predicate| if arg.is_none() { Ok(p) } else { Err(unknown()) };
        match name {
            "k-quasi-transitive" => Ok(Predicate::KQuasiTransitive(parse_k(arg, s)?)),
            "k-transitive" => Ok(Predicate::KTransitive(parse_k(arg, s)?)),
            "k-anti-transitive" => Ok(Predicate::KAntiTransitive(parse_k(arg, s)?)),
            "locally-semicomplete" => Ok(Predicate::LocallySemicomplete(
                arg.unwrap_or("both").parse()?,
            )),
            "arc-locally-semicomplete" => {
                let mode: NeighborhoodMode = arg.unwrap_or("both").parse()?;
                if mode == NeighborhoodMode::Closed {
                    return Err(unknown());
                }
                Ok(Predicate::ArcLocallySemicomplete(mode))
            }
            "free" => {
                let label = arg.ok_or_else(unknown)?;
                let h = named_digraph(label)
                    .or_else(|| codec::decode_digraph6(label).ok())
                    .ok_or_else(unknown)?;
                Ok(Predicate::Free(label.to_string(), h))
            }
            "diameter" => Ok(Predicate::Diameter(parse_u32(arg, s)?)),
            "geodesic-at-least" => Ok(Predicate::GeodesicAtLeast(parse_u32(arg, s)?)),
            "semicomplete" => no_arg(Predicate::Semicomplete),
            "tt3-free" => no_arg(Predicate::Tt3Free),
            "underlying-perfect" => no_arg(Predicate::UnderlyingPerfect),
            "asymmetric" => no_arg(Predicate::Asymmetric),
            "symmetric" => no_arg(Predicate::Symmetric),
            "three-cycles-2sym" => no_arg(Predicate::ThreeCyclesTwoSym),
            "strong" => no_arg(Predicate::Strong),
            "has-kernel" => no_arg(Predicate::HasKernel),
            "kernel-perfect" => no_arg(Predicate::KernelPerfect),
            "cki" => no_arg(Predicate::Cki),
            _ => Err(unknown()),
        }
    }
}

/// Short names: `cN` directed cycle, `aN` antihole, `c7-12`, `ttN`
/// transitive tournament, `kN` complete digraph.
pub fn named_digraph(name: &str) -> Option<Digraph> {
    let name = name.to_ascii_lowercase();
    if name == "c7-12" || name == "c7(1,2)" {
        return Some(families::c7_12());
    }
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (prefix, num) = name.split_at(split);
    let n: usize = num.parse().ok()?;
    match prefix {
        "c" => families::directed_cycle(n).ok(),
        "a" => families::antihole(n).ok(),
        "tt" if n >= 1 => families::transitive_tournament(n).ok(),
        "k" => families::complete_digraph(n).ok(),
        _ => None,
    }
}
