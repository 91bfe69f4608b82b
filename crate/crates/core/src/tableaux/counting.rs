use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Pow};

use super::{Partition, StandardTableau};
use crate::error::{Error, Result};

/// Largest shape [`enumerate_syt`] will expand without an explicit bound.
pub const DEFAULT_SYT_BOUND: usize = 12;

/// Every standard tableau of `shape`, sorted by row reading word.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardTableau>> {
    enumerate_syt_bounded(shape, DEFAULT_SYT_BOUND)
}

pub fn enumerate_syt_bounded(shape: &Partition, max_boxes: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > max_boxes {
        return Err(Error::ResourceLimit {
            what: "tableau size",
            requested: n,
            limit: max_boxes,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.length()];
    fill(shape.parts(), &mut rows, 1, n, &mut out);
    out.sort_by_cached_key(StandardTableau::row_reading_word);
    Ok(out)
}

// Places `next` in every cell that keeps the partial filling a tableau.
fn fill(
    shape: &[usize],
    rows: &mut [Vec<usize>],
    next: usize,
    n: usize,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau::from_rows_unchecked(rows.to_vec()));
        return;
    }
    for r in 0..rows.len() {
        let c = rows[r].len();
        let fits_row = c < shape[r];
        let supported = r == 0 || rows[r - 1].len() > c;
        if fits_row && supported {
            rows[r].push(next);
            fill(shape, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `f^λ = n! / ∏ hook(c)`.
pub fn hook_length_count(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let hooks = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| {
            let conj = &conj;
            (0..row).map(move |j| (row - j) + (conj.parts()[j] - i) - 1)
        })
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(shape.size()) / hooks
}

/// Barnes G on integers: `G(n) = ∏_{j=1}^{n-2} j!` for `n ≥ 2`.
pub fn barnes_g(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(format!("Barnes G needs n >= 2, got {n}")));
    }
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for j in 1..=n - 2 {
        fact *= j;
        acc *= &fact;
    }
    Ok(acc)
}

/// `f^{λ_{p×q}} = (pq)! G(p+1) G(q+1) / G(p+q+1)`.
pub fn rect_count_via_barnes(p: usize, q: usize) -> Result<BigUint> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("rectangle sides must be positive"));
    }
    let num = factorial(p * q) * barnes_g(p + 1)? * barnes_g(q + 1)?;
    Ok(num / barnes_g(p + q + 1)?)
}

fn rect_count(p: usize, q: usize) -> BigUint {
    hook_length_count(&Partition::rectangle(p, q))
}

/// Closed form for the number of self-evacuating tableaux of the `k × k` square:
/// `C(⌊k²/2⌋, ⌊k²/4⌋) · (f^{λ_{⌊k/2⌋×⌈k/2⌉}})²`.
pub fn count_self_evacuating_rect(k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let sq = k * k;
    let choose = binomial(BigUint::from(sq / 2), BigUint::from(sq / 4));
    let f = rect_count(k / 2, k.div_ceil(2));
    Ok(choose * &f * &f)
}

/// `(lower, upper)` bounds on the number of strong `id_{k+1}`-avoiders of length `k³`:
/// lower `C(⌊k²/2⌋, ⌊k²/4⌋)^k (f^{λ_{⌊k/2⌋×⌈k/2⌉}})^{2k}`, upper `(f^{λ_{k²×k}})²`.
pub fn sav_bounds(k: usize) -> Result<(BigUint, BigUint)> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let sq = k * k;
    let choose = binomial(BigUint::from(sq / 2), BigUint::from(sq / 4));
    let f = rect_count(k / 2, k.div_ceil(2));
    let lower = Pow::pow(choose, k) * Pow::pow(f, 2 * k);
    let upper = Pow::pow(rect_count(sq, k), 2u32);
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn syt_enumeration() {
        let shape: Partition = "2,1".parse().unwrap();
        let all = enumerate_syt(&shape).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].to_string(), "1,2/3");
        assert_eq!(enumerate_syt(&Partition::rectangle(1, 7)).unwrap().len(), 1);
        assert_eq!(
            enumerate_syt(&Partition::rectangle(3, 3)).unwrap().len(),
            42
        );
        assert_eq!(enumerate_syt(&Partition::empty()).unwrap().len(), 1);
        assert!(matches!(
            enumerate_syt(&Partition::rectangle(4, 4)),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(
            enumerate_syt_bounded(&Partition::rectangle(4, 4), 16)
                .unwrap()
                .len(),
            24024
        );
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_length_count(&"2,2".parse().unwrap()), big(2));
        assert_eq!(hook_length_count(&Partition::rectangle(4, 2)), big(14));
        assert_eq!(hook_length_count(&"1".parse().unwrap()), big(1));
        assert_eq!(hook_length_count(&Partition::rectangle(3, 3)), big(42));
        assert_eq!(hook_length_count(&Partition::empty()), big(1));
    }

    #[test]
    fn barnes() {
        assert_eq!(barnes_g(2).unwrap(), big(1));
        assert_eq!(barnes_g(4).unwrap(), big(2));
        assert_eq!(barnes_g(5).unwrap(), big(12));
        assert!(barnes_g(1).is_err());
        assert_eq!(rect_count_via_barnes(2, 2).unwrap(), big(2));
        assert_eq!(rect_count_via_barnes(1, 9).unwrap(), big(1));
        assert_eq!(rect_count_via_barnes(4, 2).unwrap(), big(14));
        assert!(rect_count_via_barnes(0, 2).is_err());
    }

    #[test]
    fn self_evacuating_squares() {
        assert_eq!(count_self_evacuating_rect(1).unwrap(), big(1));
        assert_eq!(count_self_evacuating_rect(2).unwrap(), big(2));
        assert_eq!(count_self_evacuating_rect(3).unwrap(), big(6));
        assert_eq!(count_self_evacuating_rect(4).unwrap(), big(280));
    }

    #[test]
    fn bounds() {
        assert_eq!(sav_bounds(1).unwrap(), (big(1), big(1)));
        assert_eq!(sav_bounds(2).unwrap(), (big(4), big(196)));
        let (lo, hi) = sav_bounds(3).unwrap();
        assert_eq!(lo, big(216));
        // f^{9x3} = 414315330
        assert_eq!(hi, big(171_657_192_673_008_900));
        assert_eq!(hi, Pow::pow(rect_count_via_barnes(9, 3).unwrap(), 2u32));
        for k in 1..=6 {
            let (lo, _) = sav_bounds(k).unwrap();
            assert_eq!(lo, Pow::pow(count_self_evacuating_rect(k).unwrap(), k));
        }
    }
}
