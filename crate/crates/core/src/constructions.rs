//! Explicit witness permutations and their verifiers.
//!
//! Every constructor here has a matching `verify_*` function; callers are
//! expected to run it before trusting a construction.

use crate::enumerate::{
    self, powerfully_avoids, strongly_avoids, AvoidanceQuery, EnumerationConfig, Mode,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableaux::{self, is_self_evacuating, rsk_inverse, Partition};

/// Which symmetry a block of a skew-sum witness must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSymmetry {
    /// `μ = comp(rev(μ))`
    ReverseComplement,
    /// `μ = rot(μ)`
    Rotation,
}

impl BlockSymmetry {
    fn holds(self, p: &Permutation) -> bool {
        match self {
            BlockSymmetry::ReverseComplement => p.reverse_complement() == *p,
            BlockSymmetry::Rotation => p.rotate() == *p,
        }
    }
}

/// Members of `Av_{k²}(id_{k+1}, δ_{k+1})` with the requested symmetry, sorted.
///
/// Uses the pruned search when `k²` is within the enumeration bound and falls
/// back to [`block_candidates_via_rsk`] otherwise.
pub fn self_rc_block_candidates(
    k: usize,
    symmetry: BlockSymmetry,
    config: &EnumerationConfig,
    syt_bound: usize,
) -> Result<Vec<Permutation>> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let n = k * k;
    if n > config.max_n {
        return block_candidates_via_rsk(k, symmetry, syt_bound);
    }
    let query = AvoidanceQuery::new(
        n,
        vec![Permutation::identity(k + 1), Permutation::decreasing(k + 1)],
        Mode::Plain,
    )?;
    let all = enumerate::enumerate(&query, true, config)?
        .witnesses
        .expect("witnesses requested");
    Ok(all.into_iter().filter(|p| symmetry.holds(p)).collect())
}

/// The same candidate list, built from tableau pairs of the `k × k` square.
///
/// Self reverse-complement blocks are the RSK images of pairs of
/// self-evacuating tableaux; self-rotation blocks are those with `P = Qᵀ` and
/// `Q` self-evacuating.
pub fn block_candidates_via_rsk(
    k: usize,
    symmetry: BlockSymmetry,
    syt_bound: usize,
) -> Result<Vec<Permutation>> {
    let square = Partition::rectangle(k, k);
    let fixed: Vec<_> = tableaux::enumerate_syt_bounded(&square, syt_bound)?
        .into_iter()
        .filter(is_self_evacuating)
        .collect();
    let mut out = Vec::new();
    match symmetry {
        BlockSymmetry::ReverseComplement => {
            for p in &fixed {
                for q in &fixed {
                    out.push(rsk_inverse(p, q)?);
                }
            }
        }
        BlockSymmetry::Rotation => {
            for q in &fixed {
                out.push(rsk_inverse(&q.transpose(), q)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `μ₁ ⊖ μ₂ ⊖ … ⊖ μ_k` with `μ_{k+1-i} = rot(μ_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBlockWitness {
    pub k: usize,
    pub blocks: Vec<Permutation>,
    pub assembled: Permutation,
}

impl SkewBlockWitness {
    /// Builds the witness from its first `⌈k/2⌉` blocks.
    pub fn from_leading_blocks(k: usize, leading: &[Permutation]) -> Result<Self> {
        if leading.len() != k.div_ceil(2) {
            return Err(Error::invalid(format!(
                "expected {} leading blocks for k = {k}, got {}",
                k.div_ceil(2),
                leading.len()
            )));
        }
        let mut blocks: Vec<Permutation> = leading.to_vec();
        for i in (0..k / 2).rev() {
            blocks.push(leading[i].rotate());
        }
        let assembled = blocks
            .iter()
            .fold(Permutation::empty(), |acc, b| acc.skew_sum(b));
        Ok(SkewBlockWitness {
            k,
            blocks,
            assembled,
        })
    }

    pub fn verify(&self) -> Result<()> {
        let k = self.k;
        let fail = |what: String| {
            Err(Error::Verification(format!(
                "skew-block witness (k={k}): {what}"
            )))
        };
        if self.blocks.len() != k {
            return fail(format!("{} blocks", self.blocks.len()));
        }
        let id = Permutation::identity(k + 1);
        let dec = Permutation::decreasing(k + 1);
        for (i, b) in self.blocks.iter().enumerate() {
            if b.len() != k * k {
                return fail(format!("block {i} has length {}", b.len()));
            }
            if b.contains(&id) || b.contains(&dec) {
                return fail(format!(
                    "block {b} contains a monotone pattern of length {}",
                    k + 1
                ));
            }
            if self.blocks[k - 1 - i].rotate() != *b {
                return fail(format!("block {i} is not the rotation of its mirror"));
            }
        }
        let expected = self
            .blocks
            .iter()
            .fold(Permutation::empty(), |acc, b| acc.skew_sum(b));
        if expected != self.assembled {
            return fail("assembled permutation is not the skew sum of the blocks".into());
        }
        let square = self.assembled.power(2);
        let layers = (0..k).fold(Permutation::empty(), |acc, _| {
            acc.direct_sum(&Permutation::decreasing(k * k))
        });
        if square != layers {
            return fail(format!("square {square} is not a sum of decreasing blocks"));
        }
        if !strongly_avoids(&self.assembled, std::slice::from_ref(&id)) {
            return fail("does not strongly avoid the identity pattern".into());
        }
        if self.assembled.lis() > k || square.lis() > k {
            return fail("increasing subsequence too long".into());
        }
        Ok(())
    }
}

/// Up to `limit` verified witnesses for `k`, in lexicographic order of their
/// leading blocks.
pub fn skew_block_witnesses(
    k: usize,
    limit: usize,
    config: &EnumerationConfig,
    syt_bound: usize,
) -> Result<Vec<SkewBlockWitness>> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let rc = self_rc_block_candidates(k, BlockSymmetry::ReverseComplement, config, syt_bound)?;
    let middle = if k % 2 == 1 {
        self_rc_block_candidates(k, BlockSymmetry::Rotation, config, syt_bound)?
    } else {
        Vec::new()
    };
    let mut choices: Vec<&[Permutation]> = vec![&rc; k / 2];
    if k % 2 == 1 {
        choices.push(&middle);
    }
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }

    // Odometer over the cartesian product, last slot fastest.
    let mut idx = vec![0usize; choices.len()];
    let mut out = Vec::new();
    while out.len() < limit {
        let leading: Vec<Permutation> = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let w = SkewBlockWitness::from_leading_blocks(k, &leading)?;
        w.verify()?;
        out.push(w);
        let mut slot = choices.len();
        loop {
            if slot == 0 {
                return Ok(out);
            }
            slot -= 1;
            idx[slot] += 1;
            if idx[slot] < choices[slot].len() {
                break;
            }
            idx[slot] = 0;
        }
    }
    Ok(out)
}

/// `ζ_k = ζ_{k,0} ζ_{k,1} … ζ_{k,k²-1}` with `ζ_{k,j} = (k²-j)(2k²-j)…(k³-j)`.
pub fn zeta(k: usize) -> Result<Permutation> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let sq = k * k;
    let word = (0..sq)
        .flat_map(|j| (1..=k).map(move |m| m * sq - j))
        .collect();
    Permutation::new(word)
}

/// `η_k = η_{k,k-1} … η_{k,0}` with `η_{k,j} = (k³-j)(k³-j-k)…(k³-j-(k²-1)k)`.
pub fn eta(k: usize) -> Result<Permutation> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let cube = k * k * k;
    let word = (0..k)
        .rev()
        .flat_map(|j| (0..k * k).map(move |m| cube - j - m * k))
        .collect();
    Permutation::new(word)
}

/// Checks that `ζ_k² = η_k`, `ζ_k ∘ η_k = id`, `ζ_k` has order 3 (for `k ≥ 2`)
/// and both avoid `id_{k+1}`.
pub fn verify_zeta_eta(k: usize) -> Result<()> {
    let z = zeta(k)?;
    let e = eta(k)?;
    let fail = |what: &str| Err(Error::Verification(format!("zeta/eta (k={k}): {what}")));
    if z.power(2) != e {
        return fail("zeta squared is not eta");
    }
    if !z.compose(&e)?.is_identity() {
        return fail("zeta composed with eta is not the identity");
    }
    let expected_order = if k == 1 { 1 } else { 3 };
    if z.order() != expected_order {
        return fail("unexpected order");
    }
    let id = Permutation::identity(k + 1);
    if z.contains(&id) || e.contains(&id) {
        return fail("contains the identity pattern");
    }
    Ok(())
}

/// The `r`-cycle `23…r1`.
pub fn cyclic_witness(r: usize) -> Result<Permutation> {
    if r == 0 {
        return Err(Error::invalid("r must be positive"));
    }
    Permutation::new((2..=r).chain(std::iter::once(1)).collect())
}

/// Checks that `cyclic_witness(r)` has order `r`, that every non-identity
/// power is `id_a ⊖ id_b`, and that it powerfully avoids `pattern`.
pub fn verify_cyclic(r: usize, pattern: &Permutation) -> Result<()> {
    let p = cyclic_witness(r)?;
    let fail = |what: String| {
        Err(Error::Verification(format!(
            "cyclic witness (r={r}): {what}"
        )))
    };
    if p.order() != r as u64 {
        return fail(format!("order {}", p.order()));
    }
    for j in 1..r {
        let q = p.power(j as i64);
        let split = Permutation::identity(r - j).skew_sum(&Permutation::identity(j));
        if q != split {
            return fail(format!("power {j} is {q}"));
        }
    }
    if !powerfully_avoids(&p, std::slice::from_ref(pattern)) {
        return fail(format!("some power contains {pattern}"));
    }
    Ok(())
}

/// `(m+1) 1 2 … (m-1) (m+2) (m+3) … n m` with `m = ⌊n/2⌋`.
pub fn witness_3412(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let m = n / 2;
    let word = std::iter::once(m + 1)
        .chain(1..m)
        .chain(m + 2..=n)
        .chain(std::iter::once(m))
        .collect();
    Permutation::new(word)
}

/// Order `n` and powerful avoidance of 3412.
pub fn verify_3412(n: usize) -> Result<()> {
    let p = witness_3412(n)?;
    if p.order() != n as u64 {
        return Err(Error::Verification(format!(
            "3412 witness (n={n}) has order {}",
            p.order()
        )));
    }
    if !powerfully_avoids(&p, &["3412".parse()?]) {
        return Err(Error::Verification(format!(
            "3412 witness (n={n}) has a power containing 3412"
        )));
    }
    Ok(())
}

/// `53827614`: a strong 123-avoider of order 12.
pub fn example_order12() -> Permutation {
    Permutation::from_word_unchecked(vec![5, 3, 8, 2, 7, 6, 1, 4])
}

pub fn verify_order12() -> Result<()> {
    let p = example_order12();
    if p.order() != 12 {
        return Err(Error::Verification(format!("order {}", p.order())));
    }
    if !strongly_avoids(&p, &[Permutation::identity(3)]) {
        return Err(Error::Verification(
            "53827614 does not strongly avoid 123".into(),
        ));
    }
    Ok(())
}
