use super::Permutation;

/// Precomputed matcher for one classical pattern.
///
/// Works on any sequence of distinct integers, not only on permutations, so
/// it can test prefixes during a search. Positions of the pattern are filled
/// left to right; the value chosen for pattern position `j` only has to be
/// compared with the nearest smaller and nearest larger pattern values among
/// positions `< j`.
#[derive(Debug, Clone)]
pub struct PatternMatcher {
    pattern: Permutation,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl PatternMatcher {
    pub fn new(pattern: &Permutation) -> Self {
        let w = pattern.word();
        let mut below = Vec::with_capacity(w.len());
        let mut above = Vec::with_capacity(w.len());
        for j in 0..w.len() {
            let earlier = 0..j;
            below.push(
                earlier
                    .clone()
                    .filter(|&l| w[l] < w[j])
                    .max_by_key(|&l| w[l]),
            );
            above.push(earlier.filter(|&l| w[l] > w[j]).min_by_key(|&l| w[l]));
        }
        PatternMatcher {
            pattern: pattern.clone(),
            below,
            above,
        }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    /// Whether `seq` contains an occurrence of the pattern.
    pub fn occurs_in(&self, seq: &[usize]) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut chosen = vec![0; self.len()];
        self.search(seq, 0, 0, false, &mut chosen)
    }

    /// Whether `seq` has an occurrence that uses its last entry.
    ///
    /// When extending a pattern-free prefix by one entry, this is the only
    /// kind of occurrence that can newly appear.
    pub fn occurs_ending_at_last(&self, seq: &[usize]) -> bool {
        if self.is_empty() {
            return true;
        }
        if seq.len() < self.len() {
            return false;
        }
        let mut chosen = vec![0; self.len()];
        self.search(seq, 0, 0, true, &mut chosen)
    }

    fn search(
        &self,
        seq: &[usize],
        j: usize,
        start: usize,
        anchored: bool,
        chosen: &mut [usize],
    ) -> bool {
        let m = self.len();
        if j == m {
            return true;
        }
        let remaining = m - j;
        let (lo, hi) = if anchored && j == m - 1 {
            (seq.len() - 1, seq.len())
        } else {
            let end = if anchored { seq.len() - 1 } else { seq.len() };
            // leave room for the positions still to be filled
            let hi = (end + 1).saturating_sub(if anchored { remaining - 1 } else { remaining });
            (start, hi.max(start))
        };
        if lo < start {
            return false;
        }
        let floor = self.below[j].map(|l| chosen[l]);
        let ceil = self.above[j].map(|l| chosen[l]);
        for i in lo..hi {
            let v = seq[i];
            if floor.is_some_and(|f| v < f) || ceil.is_some_and(|c| v > c) {
                continue;
            }
            chosen[j] = v;
            if self.search(seq, j + 1, i + 1, anchored, chosen) {
                return true;
            }
        }
        false
    }
}
