//! Permutations in one-line notation.
//!
//! A [`Permutation`] of length `n` is stored as its word `π(1)π(2)…π(n)` with
//! 1-based values. The empty permutation ε is a valid value of length 0.
//!
//! Composition applies the right operand first: `(s ∘ m)(i) = s(m(i))`.

mod pattern;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use pattern::PatternMatcher;

/// A bijection on `[n]`, written as its one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    word: Vec<usize>,
}

/// Orbits of a permutation. Cycles of length at least two are listed
/// starting at their minimum and sorted by that minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    /// Lengths of every orbit, fixed points included.
    pub fn orbit_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles
            .iter()
            .map(Vec::len)
            .chain(self.fixed_points.iter().map(|_| 1))
    }
}

impl Permutation {
    /// Validates that `word` is a bijection on `1..=word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::invalid(format!("entry {v} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::invalid(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    /// The empty permutation ε.
    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    /// `id_n = 12…n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// `δ_n = n…21`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::invalid(format!(
                "cannot compose permutations of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            word: other.word.iter().map(|&j| self.word[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `π^k`; negative exponents are powers of the inverse.
    ///
    /// Computed orbit by orbit, so the cost is linear in `n` regardless of `k`.
    pub fn power(&self, k: i64) -> Permutation {
        let mut word = vec![0; self.len()];
        for cycle in self.orbits() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &x) in cycle.iter().enumerate() {
                word[x - 1] = cycle[(pos + shift) % cycle.len()];
            }
        }
        Permutation { word }
    }

    /// Least `k ≥ 1` with `π^k = id`, i.e. the lcm of the orbit lengths.
    pub fn order(&self) -> u64 {
        self.orbits()
            .into_iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Rotates the plot a quarter turn counterclockwise: `rot(π) = rev(π⁻¹)`.
    pub fn rotate(&self) -> Permutation {
        self.inverse().reverse()
    }

    /// `comp(rev(π)) = δ_n ∘ π ∘ δ_n`.
    pub fn reverse_complement(&self) -> Permutation {
        self.reverse().complement()
    }

    /// `self ⊕ other`: `other` placed above and to the right.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let l = self.len();
        let word = self
            .word
            .iter()
            .copied()
            .chain(other.word.iter().map(|&v| v + l))
            .collect();
        Permutation { word }
    }

    /// `self ⊖ other`: `other` placed below and to the right.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let m = other.len();
        let word = self
            .word
            .iter()
            .map(|&v| v + m)
            .chain(other.word.iter().copied())
            .collect();
        Permutation { word }
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        PatternMatcher::new(pattern).occurs_in(&self.word)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for orbit in self.orbits() {
            if orbit.len() == 1 {
                fixed_points.push(orbit[0]);
            } else {
                cycles.push(orbit);
            }
        }
        CycleDecomposition {
            cycles,
            fixed_points,
        }
    }

    // Orbits in order of their minimum element, each starting at that minimum.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                orbit.push(x);
                x = self.word[x - 1];
            }
            out.push(orbit);
        }
        out
    }

    /// Whether `π = δ_{a1} ⊕ … ⊕ δ_{at}`. The empty permutation is the empty sum.
    pub fn is_layered(&self) -> bool {
        // Each layer is a maximal run of consecutive decreasing values that
        // occupies exactly the positions [start, start + len).
        let mut start = 0;
        while start < self.len() {
            let top = self.word[start];
            let len = top - start;
            if top <= start || start + len > self.len() {
                return false;
            }
            for offset in 0..len {
                if self.word[start + offset] != top - offset {
                    return false;
                }
            }
            start += len;
        }
        true
    }

    /// True iff no proper nonempty prefix of length `ℓ` is a permutation of `1..=ℓ`.
    pub fn is_sum_indecomposable(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid(
                "sum indecomposability is undefined for the empty permutation",
            ));
        }
        let mut running_max = 0;
        for (i, &v) in self.word[..self.len() - 1].iter().enumerate() {
            running_max = running_max.max(v);
            if running_max == i + 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Length of a longest increasing subsequence.
    pub fn lis(&self) -> usize {
        longest_increasing(self.word.iter().copied())
    }

    /// Length of a longest decreasing subsequence.
    pub fn lds(&self) -> usize {
        let n = self.len();
        longest_increasing(self.word.iter().map(|&v| n + 1 - v))
    }
}

fn longest_increasing(values: impl Iterator<Item = usize>) -> usize {
    // tails[i] = smallest possible tail of an increasing run of length i + 1
    let mut tails: Vec<usize> = Vec::new();
    for v in values {
        let at = tails.partition_point(|&t| t < v);
        if at == tails.len() {
            tails.push(v);
        } else {
            tails[at] = v;
        }
    }
    tails.len()
}

impl fmt::Display for Permutation {
    /// Digit string for `n ≤ 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `53827614` (digits, `n ≤ 9`) or `10,1,2,…` (any `n`).
    /// The empty string is ε.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::parse("permutation", s, e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse("permutation", s, format!("unexpected {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|e| Error::parse("permutation", s, e.to_string()))
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// All permutations of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lexicographic(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}
