use super::StandardTableau;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Row-insertion RSK: returns the insertion tableau `P` and recording tableau `Q`.
pub fn rsk(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut insertion: Vec<Vec<usize>> = Vec::new();
    let mut recording: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in p.word().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == insertion.len() {
                insertion.push(vec![x]);
                recording.push(vec![step + 1]);
                break;
            }
            let row = &mut insertion[r];
            let at = row.partition_point(|&y| y < x);
            if at == row.len() {
                row.push(x);
                recording[r].push(step + 1);
                break;
            }
            x = std::mem::replace(&mut row[at], x);
            r += 1;
        }
    }
    (
        StandardTableau::from_rows_unchecked(insertion),
        StandardTableau::from_rows_unchecked(recording),
    )
}

/// The permutation whose RSK pair is `(p_tab, q_tab)`.
pub fn rsk_inverse(p_tab: &StandardTableau, q_tab: &StandardTableau) -> Result<Permutation> {
    if p_tab.shape() != q_tab.shape() {
        return Err(Error::invalid(format!(
            "RSK pair has mismatched shapes {} and {}",
            p_tab.shape(),
            q_tab.shape()
        )));
    }
    // Both inputs are StandardTableau values, so they are already standard.
    let n = p_tab.size();
    let mut insertion: Vec<Vec<usize>> = p_tab.rows().to_vec();
    let mut recording: Vec<Vec<usize>> = q_tab.rows().to_vec();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        // The largest recording entry always sits at the end of some row.
        let r = recording
            .iter()
            .position(|row| row.last() == Some(&step))
            .ok_or_else(|| Error::invalid("recording tableau is not standard"))?;
        recording[r].pop();
        let mut x = insertion[r].pop().expect("shapes agree");
        if recording[r].is_empty() {
            recording.pop();
            insertion.pop();
        }
        for row in insertion[..r].iter_mut().rev() {
            // largest entry smaller than x
            let at = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[at], x);
        }
        word[step - 1] = x;
    }
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutations;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(rsk(&"312".parse().unwrap()), (t("1,2/3"), t("1,3/2")));
        assert_eq!(rsk(&Permutation::identity(3)), (t("1,2,3"), t("1,2,3")));
        assert_eq!(rsk(&Permutation::decreasing(3)), (t("1/2/3"), t("1/2/3")));
        assert_eq!(rsk(&Permutation::empty()).0.size(), 0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            rsk_inverse(&t("1,2/3"), &t("1,3/2")).unwrap(),
            "312".parse().unwrap()
        );
        assert_eq!(
            rsk_inverse(&t("1,2,3"), &t("1,2,3")).unwrap(),
            Permutation::identity(3)
        );
        assert!(rsk_inverse(&t("1,2/3"), &t("1,2,3")).is_err());
    }

    #[test]
    fn round_trip_s5() {
        for n in 0..=5 {
            for p in Permutations::new(n) {
                let (a, b) = rsk(&p);
                assert_eq!(rsk_inverse(&a, &b).unwrap(), p);
            }
        }
    }
}
