//! Pruned enumeration of pattern avoiders.
//!
//! Permutations of `[n]` are generated in lexicographic order by prefix
//! extension. A prefix containing a forbidden pattern cannot be completed to
//! an avoider, so the whole subtree is cut as soon as the newest entry closes
//! an occurrence. Strong/powerful conditions and the order filter are applied
//! at the leaves.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PatternMatcher, Permutation};

/// Default largest `n` an enumeration may be asked for.
pub const DEFAULT_MAX_N: usize = 11;

/// Witness lists are not retained by default above this length.
pub const DEFAULT_WITNESS_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// π avoids every pattern.
    Plain,
    /// π and π² avoid every pattern.
    Strong,
    /// Every power of π avoids every pattern.
    Powerful,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Strong => "strong",
            Mode::Powerful => "powerful",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Mode::Plain),
            "strong" => Ok(Mode::Strong),
            "powerful" => Ok(Mode::Powerful),
            _ => Err(Error::parse(
                "mode",
                s,
                "expected plain, strong or powerful",
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_n: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_n: DEFAULT_MAX_N,
            threads: None,
        }
    }
}

impl EnumerationConfig {
    fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceLimit {
                what: "permutation length",
                requested: n,
                limit: self.max_n,
            });
        }
        Ok(())
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(job),
            None => job(),
        }
    }
}

/// One counting question: which `π ∈ S_n` to count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AvoidanceQuery {
    n: usize,
    patterns: Vec<Permutation>,
    mode: Mode,
    order_set: Option<BTreeSet<u64>>,
}

impl AvoidanceQuery {
    pub fn new(n: usize, patterns: Vec<Permutation>, mode: Mode) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::invalid("at least one pattern is required"));
        }
        if let Some(p) = patterns.iter().find(|p| p.len() < 2) {
            return Err(Error::invalid(format!("pattern {p:?} is shorter than 2")));
        }
        Ok(AvoidanceQuery {
            n,
            patterns,
            mode,
            order_set: None,
        })
    }

    /// Restricts to permutations whose group order lies in `orders`.
    pub fn with_orders(mut self, orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = orders.into_iter().collect();
        if set.is_empty() {
            return Err(Error::invalid("order set must be nonempty"));
        }
        if set.contains(&0) {
            return Err(Error::invalid("orders are positive integers"));
        }
        self.order_set = Some(set);
        Ok(self)
    }

    /// Shorthand used throughout tests and campaigns: patterns given as text.
    pub fn parse(n: usize, patterns: &[&str], mode: Mode) -> Result<Self> {
        let patterns = patterns
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Permutation>>>()?;
        AvoidanceQuery::new(n, patterns, mode)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order_set(&self) -> Option<&BTreeSet<u64>> {
        self.order_set.as_ref()
    }

    pub fn with_n(&self, n: usize) -> Self {
        AvoidanceQuery { n, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub query: AvoidanceQuery,
    pub count: u64,
    /// Lexicographically sorted when present.
    pub witnesses: Option<Vec<Permutation>>,
    pub elapsed_millis: u64,
}

/// Leaf test shared by every search.
#[derive(Debug, Clone)]
pub struct Filter {
    matchers: Vec<PatternMatcher>,
    mode: Mode,
    order_set: Option<BTreeSet<u64>>,
}

impl Filter {
    pub fn new(query: &AvoidanceQuery) -> Self {
        Filter {
            matchers: query.patterns.iter().map(PatternMatcher::new).collect(),
            mode: query.mode,
            order_set: query.order_set.clone(),
        }
    }

    fn avoids_all(&self, word: &[usize]) -> bool {
        self.matchers.iter().all(|m| !m.occurs_in(word))
    }

    fn prefix_closes_pattern(&self, prefix: &[usize]) -> bool {
        self.matchers
            .iter()
            .any(|m| m.occurs_ending_at_last(prefix))
    }

    /// Full membership test, including the plain avoidance of `p` itself.
    pub fn accepts(&self, p: &Permutation) -> bool {
        self.avoids_all(p.word()) && self.accepts_avoider(p)
    }

    // `p` is already known to avoid every pattern.
    fn accepts_avoider(&self, p: &Permutation) -> bool {
        let order = p.order();
        if let Some(set) = &self.order_set {
            if !set.contains(&order) {
                return false;
            }
        }
        match self.mode {
            Mode::Plain => true,
            Mode::Strong => self.avoids_all(p.power(2).word()),
            Mode::Powerful => (2..=order).all(|j| self.avoids_all(p.power(j as i64).word())),
        }
    }
}

/// `π` and `π²` avoid every pattern in `patterns`.
pub fn strongly_avoids(p: &Permutation, patterns: &[Permutation]) -> bool {
    let squared = p.power(2);
    patterns.iter().all(|t| p.avoids(t) && squared.avoids(t))
}

/// `π^j` avoids every pattern for `1 ≤ j ≤ order(π)`; powers repeat beyond that.
pub fn powerfully_avoids(p: &Permutation, patterns: &[Permutation]) -> bool {
    (1..=p.order()).all(|j| {
        let q = p.power(j as i64);
        patterns.iter().all(|t| q.avoids(t))
    })
}

struct Search<'a> {
    n: usize,
    filter: &'a Filter,
    prefix: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(n: usize, filter: &'a Filter) -> Self {
        Search {
            n,
            filter,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
        }
    }

    fn push(&mut self, v: usize) -> bool {
        self.prefix.push(v);
        self.used[v] = true;
        if self.filter.prefix_closes_pattern(&self.prefix) {
            self.pop();
            return false;
        }
        true
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v] = false;
        }
    }

    /// Depth-first in lexicographic order. `visit` returns `false` to stop.
    fn walk(&mut self, visit: &mut dyn FnMut(&Permutation) -> bool) -> bool {
        if self.prefix.len() == self.n {
            let p = Permutation::from_word_unchecked(self.prefix.clone());
            if self.filter.accepts_avoider(&p) {
                return visit(&p);
            }
            return true;
        }
        for v in 1..=self.n {
            if self.used[v] || !self.push(v) {
                continue;
            }
            let go_on = self.walk(visit);
            self.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

// Count and optional witnesses of one first-entry subtree.
fn subtree(n: usize, first: usize, filter: &Filter, keep: bool) -> (u64, Vec<Permutation>) {
    let mut search = Search::new(n, filter);
    let mut count = 0u64;
    let mut found = Vec::new();
    if search.push(first) {
        search.walk(&mut |p| {
            count += 1;
            if keep {
                found.push(p.clone());
            }
            true
        });
    }
    (count, found)
}

/// Counts the members of `S_n` selected by `query`.
pub fn enumerate(
    query: &AvoidanceQuery,
    keep_witnesses: bool,
    config: &EnumerationConfig,
) -> Result<EnumerationResult> {
    let n = query.n;
    config.check_n(n)?;
    let started = Instant::now();
    let filter = Filter::new(query);

    let (count, witnesses) = if n == 0 {
        let eps = Permutation::empty();
        let hit = filter.accepts(&eps);
        (hit as u64, if hit { vec![eps] } else { Vec::new() })
    } else {
        let parts: Vec<(u64, Vec<Permutation>)> = config.run(|| {
            (1..=n)
                .into_par_iter()
                .map(|first| subtree(n, first, &filter, keep_witnesses))
                .collect()
        });
        let count = parts.iter().map(|(c, _)| c).sum();
        let witnesses = parts.into_iter().flat_map(|(_, w)| w).collect();
        (count, witnesses)
    };

    Ok(EnumerationResult {
        query: query.clone(),
        count,
        witnesses: keep_witnesses.then_some(witnesses),
        elapsed_millis: started.elapsed().as_millis() as u64,
    })
}

/// Convenience wrapper returning only the count.
pub fn count(query: &AvoidanceQuery, config: &EnumerationConfig) -> Result<u64> {
    enumerate(query, false, config).map(|r| r.count)
}

/// Lexicographically first member of `S_n` selected by `query`, if any.
pub fn first_match(
    query: &AvoidanceQuery,
    config: &EnumerationConfig,
) -> Result<Option<Permutation>> {
    let n = query.n;
    config.check_n(n)?;
    let filter = Filter::new(query);
    if n == 0 {
        let eps = Permutation::empty();
        return Ok(filter.accepts(&eps).then_some(eps));
    }
    let mut search = Search::new(n, &filter);
    let mut found = None;
    search.walk(&mut |p| {
        found = Some(p.clone());
        false
    });
    Ok(found)
}

/// Exact number of strong `id_{k+1}` avoiders of length `k³`.
pub fn sav_exact_small(k: usize, config: &EnumerationConfig) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let n = k * k * k;
    config.check_n(n)?;
    let q = AvoidanceQuery::new(n, vec![Permutation::identity(k + 1)], Mode::Strong)?;
    count(&q, config)
}

/// Smallest-length, then lexicographically first, permutation of order exactly
/// `r` that powerfully avoids `pattern`, searching lengths `1..=n_max`.
///
/// `None` only means the bounded search came up empty.
pub fn xi_witness(
    pattern: &Permutation,
    r: u64,
    n_max: usize,
    config: &EnumerationConfig,
) -> Result<Option<Permutation>> {
    if r == 0 {
        return Err(Error::invalid("order must be positive"));
    }
    config.check_n(n_max)?;
    for n in 1..=n_max {
        let q = AvoidanceQuery::new(n, vec![pattern.clone()], Mode::Powerful)?.with_orders([r])?;
        if let Some(p) = first_match(&q, config)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutations;

    fn cfg() -> EnumerationConfig {
        EnumerationConfig::default()
    }

    fn q(n: usize, pats: &[&str], mode: Mode) -> AvoidanceQuery {
        AvoidanceQuery::parse(n, pats, mode).unwrap()
    }

    fn naive(query: &AvoidanceQuery) -> u64 {
        let pats = query.patterns();
        Permutations::new(query.n())
            .filter(|p| match query.mode() {
                Mode::Plain => pats.iter().all(|t| p.avoids(t)),
                Mode::Strong => strongly_avoids(p, pats),
                Mode::Powerful => powerfully_avoids(p, pats),
            })
            .filter(|p| query.order_set().is_none_or(|s| s.contains(&p.order())))
            .count() as u64
    }

    #[test]
    fn query_validation() {
        assert!(AvoidanceQuery::new(3, vec![], Mode::Plain).is_err());
        assert!(AvoidanceQuery::parse(3, &["1"], Mode::Plain).is_err());
        assert!(q(3, &["12"], Mode::Plain).with_orders([]).is_err());
        assert!(q(3, &["12"], Mode::Plain).with_orders([0]).is_err());
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            count(&q(5, &["132", "231"], Mode::Strong), &cfg()).unwrap(),
            5
        );
        assert_eq!(count(&q(3, &["321"], Mode::Strong), &cfg()).unwrap(), 5);
        assert_eq!(count(&q(4, &["231"], Mode::Powerful), &cfg()).unwrap(), 8);
        assert_eq!(count(&q(3, &["123"], Mode::Powerful), &cfg()).unwrap(), 0);
        let omega = q(4, &["312"], Mode::Plain).with_orders([1, 3]).unwrap();
        assert_eq!(count(&omega, &cfg()).unwrap(), 5);
    }

    #[test]
    fn bound_is_enforced() {
        let err = count(&q(12, &["123"], Mode::Plain), &cfg()).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceLimit {
                requested: 12,
                limit: 11,
                ..
            }
        ));
        assert!(sav_exact_small(3, &cfg()).is_err());
    }

    #[test]
    fn witnesses_are_sorted_and_counted() {
        let r = enumerate(&q(5, &["321"], Mode::Strong), true, &cfg()).unwrap();
        let w = r.witnesses.unwrap();
        assert_eq!(w.len() as u64, r.count);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn pruned_matches_naive() {
        let sets: &[&[&str]] = &[
            &["123"],
            &["231"],
            &["132", "3421"],
            &["321", "3412"],
            &["2413"],
        ];
        for pats in sets {
            for mode in [Mode::Plain, Mode::Strong, Mode::Powerful] {
                for n in 0..=6 {
                    let query = q(n, pats, mode);
                    assert_eq!(
                        count(&query, &cfg()).unwrap(),
                        naive(&query),
                        "{pats:?} {mode} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let query = q(8, &["321"], Mode::Strong);
        let one = EnumerationConfig {
            threads: Some(1),
            ..cfg()
        };
        let four = EnumerationConfig {
            threads: Some(4),
            ..cfg()
        };
        let a = enumerate(&query, true, &one).unwrap();
        let b = enumerate(&query, true, &four).unwrap();
        assert_eq!((a.count, a.witnesses), (b.count, b.witnesses));
    }

    #[test]
    fn empty_length() {
        assert_eq!(count(&q(0, &["12"], Mode::Powerful), &cfg()).unwrap(), 1);
    }

    #[test]
    fn xi_examples() {
        let t: Permutation = "231".parse().unwrap();
        assert_eq!(
            xi_witness(&t, 2, 4, &cfg()).unwrap(),
            Some("21".parse().unwrap())
        );
        assert_eq!(
            xi_witness(&t, 1, 4, &cfg()).unwrap(),
            Some("1".parse().unwrap())
        );
        assert_eq!(xi_witness(&t, 3, 7, &cfg()).unwrap(), None);
        let w = xi_witness(&"3412".parse().unwrap(), 5, 5, &cfg())
            .unwrap()
            .unwrap();
        assert_eq!(w.order(), 5);
        assert!(powerfully_avoids(&w, &["3412".parse().unwrap()]));
    }
}
