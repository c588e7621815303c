//! Isomorph-free generation of small digraphs, level by level.
//!
//! Every class of order `m + 1` is obtained from some class of order `m` by
//! adding a vertex and choosing a state for each new pair. Children are
//! canonicalized and deduplicated, and each level is kept sorted by
//! canonical form, so output order never depends on the worker count.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::recognizers::{canonical_bits, CanonicalForm, Predicate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumClass {
    /// Each pair: none, one way, other way, or both.
    All,
    /// Each pair: none or one way.
    Oriented,
    /// Each pair: one way, other way, or both.
    Semicomplete,
}

impl EnumClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EnumClass::All => "all",
            EnumClass::Oriented => "oriented",
            EnumClass::Semicomplete => "semicomplete",
        }
    }

    /// Largest order this class may be enumerated at.
    pub fn max_order(self) -> usize {
        match self {
            EnumClass::All => 6,
            EnumClass::Oriented | EnumClass::Semicomplete => 7,
        }
    }

    /// `(new -> old, old -> new)` arc choices for one pair.
    fn pair_states(self) -> &'static [(bool, bool)] {
        match self {
            EnumClass::All => &[(false, false), (true, false), (false, true), (true, true)],
            EnumClass::Oriented => &[(false, false), (true, false), (false, true)],
            EnumClass::Semicomplete => &[(true, false), (false, true), (true, true)],
        }
    }
}

impl fmt::Display for EnumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EnumClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(EnumClass::All),
            "oriented" => Ok(EnumClass::Oriented),
            "semicomplete" => Ok(EnumClass::Semicomplete),
            _ => Err(Error::PreconditionViolated(format!("unknown class {s}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterEntry {
    pub predicate: Predicate,
    /// Applied to every intermediate level, not only the final one.
    pub prune: bool,
}

/// Conjunction of predicates, each optionally used for pruning.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FilterSpec {
    entries: Vec<FilterEntry>,
}

impl FilterSpec {
    pub fn none() -> Self {
        FilterSpec::default()
    }

    /// Hereditary predicates prune, the rest apply at the final order.
    pub fn new(predicates: impl IntoIterator<Item = Predicate>) -> Self {
        let entries = predicates
            .into_iter()
            .map(|p| FilterEntry {
                prune: p.is_hereditary(),
                predicate: p,
            })
            .collect();
        FilterSpec { entries }
    }

    /// Parses a comma-separated list of predicate identifiers.
    pub fn parse(list: &str) -> Result<Self> {
        let preds = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Predicate>>>()?;
        Ok(FilterSpec::new(preds))
    }

    pub fn push(&mut self, predicate: Predicate, prune: bool) -> Result<()> {
        if prune && !predicate.is_hereditary() {
            return Err(Error::NonHereditaryPruneRequested(predicate.id()));
        }
        self.entries.push(FilterEntry { predicate, prune });
        Ok(())
    }

    pub fn with(mut self, predicate: Predicate, prune: bool) -> Result<Self> {
        self.push(predicate, prune)?;
        Ok(self)
    }

    pub fn entries(&self) -> &[FilterEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn accepts(&self, d: &Digraph) -> bool {
        self.entries.iter().all(|e| e.predicate.eval(d))
    }

    fn accepts_pruning(&self, d: &Digraph) -> bool {
        self.entries
            .iter()
            .filter(|e| e.prune)
            .all(|e| e.predicate.eval(d))
    }

    fn prunes(&self) -> bool {
        self.entries.iter().any(|e| e.prune)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
    /// When false, pruning flags are ignored and every predicate is applied
    /// only at the final order.
    pub prune: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            jobs: 1,
            prune: true,
        }
    }
}

fn check_order(n: usize, cls: EnumClass) -> Result<()> {
    if n > cls.max_order() {
        return Err(Error::OrderTooLarge {
            n,
            max: cls.max_order(),
        });
    }
    Ok(())
}

fn children_into(parent: &CanonicalForm, cls: EnumClass, out: &mut HashSet<u128>) {
    let m = parent.order();
    let n = m + 1;
    let states = cls.pair_states();
    let base = states.len();
    let mut rows = [0u64; 8];
    rows[..m].copy_from_slice(&parent.rows());
    let total = base.pow(m as u32);
    let mut child = [0u64; 8];
    for code in 0..total {
        child[..m].copy_from_slice(&rows[..m]);
        child[m] = 0;
        let mut c = code;
        for i in 0..m {
            let (to_old, from_old) = states[c % base];
            c /= base;
            if to_old {
                child[m] |= 1 << i;
            }
            if from_old {
                child[i] |= 1 << m;
            }
        }
        out.insert(canonical_bits(&child[..n]));
    }
}

fn next_level(parents: &[CanonicalForm], cls: EnumClass, jobs: usize) -> Vec<CanonicalForm> {
    let n = parents.first().map_or(1, |p| p.order() + 1);
    let seen: HashSet<u128> = if jobs <= 1 {
        let mut set = HashSet::new();
        for p in parents {
            children_into(p, cls, &mut set);
        }
        set
    } else {
        let chunk = parents.len().div_ceil(jobs * 4).max(1);
        parents
            .par_chunks(chunk)
            .map(|ps| {
                let mut set = HashSet::new();
                for p in ps {
                    children_into(p, cls, &mut set);
                }
                set
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            })
    };
    let mut bits: Vec<u128> = seen.into_iter().collect();
    bits.sort_unstable();
    bits.into_iter()
        .map(|b| CanonicalForm::from_parts(n, b))
        .collect()
}

fn keep(
    forms: Vec<CanonicalForm>,
    jobs: usize,
    pred: &(dyn Fn(&Digraph) -> bool + Sync),
) -> Vec<CanonicalForm> {
    if jobs <= 1 {
        forms.into_iter().filter(|f| pred(&f.to_digraph())).collect()
    } else {
        forms
            .into_par_iter()
            .filter(|f| pred(&f.to_digraph()))
            .collect()
    }
}

fn run_in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Generates every level `0..=max_n`. `visit(m, forms)` sees the classes of
/// order `m` that passed the pruning predicates, ascending; the final
/// filter is left to the caller.
pub fn for_each_level(
    max_n: usize,
    cls: EnumClass,
    filter: &FilterSpec,
    opts: &EnumOptions,
    visit: &mut (dyn FnMut(usize, &[CanonicalForm]) + Send),
) -> Result<()> {
    check_order(max_n, cls)?;
    let jobs = opts.jobs.max(1);
    let prune = opts.prune && filter.prunes();
    run_in_pool(jobs, || {
        let mut level = vec![CanonicalForm::from_parts(0, 0)];
        visit(0, &level);
        for m in 1..=max_n {
            level = next_level(&level, cls, jobs);
            if prune {
                level = keep(level, jobs, &|d| filter.accepts_pruning(d));
            }
            visit(m, &level);
        }
    });
    Ok(())
}

/// Canonical forms of the order-`n` classes accepted by `filter`, ascending.
pub fn enumerate_forms(
    n: usize,
    cls: EnumClass,
    filter: &FilterSpec,
    opts: &EnumOptions,
) -> Result<Vec<CanonicalForm>> {
    let mut last = Vec::new();
    for_each_level(n, cls, filter, opts, &mut |m, forms| {
        if m == n {
            last = forms.to_vec();
        }
    })?;
    let jobs = opts.jobs.max(1);
    if filter.is_empty() {
        return Ok(last);
    }
    Ok(run_in_pool(jobs, || keep(last, jobs, &|d| filter.accepts(d))))
}

/// One representative per isomorphism class of order `n` in `cls`
/// satisfying `filter`, in ascending canonical order.
pub fn enumerate_classes(
    n: usize,
    cls: EnumClass,
    filter: &FilterSpec,
) -> Result<impl Iterator<Item = Digraph>> {
    enumerate_classes_with(n, cls, filter, &EnumOptions::default())
}

pub fn enumerate_classes_with(
    n: usize,
    cls: EnumClass,
    filter: &FilterSpec,
    opts: &EnumOptions,
) -> Result<impl Iterator<Item = Digraph>> {
    let forms = enumerate_forms(n, cls, filter, opts)?;
    Ok(forms.into_iter().map(|f| f.to_digraph()))
}

pub fn count_classes(n: usize, cls: EnumClass, filter: &FilterSpec) -> Result<usize> {
    Ok(enumerate_forms(n, cls, filter, &EnumOptions::default())?.len())
}
