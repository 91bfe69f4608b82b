use super::StandardTableau;

/// Schützenberger evacuation.
///
/// Step `t` removes the entry in the top-left cell of the working tableau and
/// slides the hole outward, each time pulling in the smaller of the right and
/// lower neighbours. When the hole reaches a corner that cell leaves the
/// working tableau and receives `n + 1 - t` in the output.
pub fn evacuate(y: &StandardTableau) -> StandardTableau {
    let n = y.size();
    let mut work: Vec<Vec<usize>> = y.rows().to_vec();
    let mut out: Vec<Vec<usize>> = work.iter().map(|r| vec![0; r.len()]).collect();
    for t in 1..=n {
        let (mut r, mut c) = (0, 0);
        loop {
            let right = work[r].get(c + 1).copied();
            let below = work.get(r + 1).and_then(|row| row.get(c)).copied();
            let (nr, nc) = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) if a < b => (r, c + 1),
                (Some(_), Some(_)) => (r + 1, c),
            };
            work[r][c] = work[nr][nc];
            r = nr;
            c = nc;
        }
        work[r].pop();
        if work[r].is_empty() {
            work.pop();
        }
        out[r][c] = n + 1 - t;
    }
    StandardTableau::from_rows_unchecked(out)
}

pub fn is_self_evacuating(y: &StandardTableau) -> bool {
    evacuate(y) == *y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(evacuate(&t("1,2/3")), t("1,3/2"));
        assert_eq!(evacuate(&t("1,3/2")), t("1,2/3"));
        assert_eq!(evacuate(&t("1,2,3")), t("1,2,3"));
        assert!(is_self_evacuating(&t("1,2/3,4")));
        assert!(is_self_evacuating(&t("1,3/2,4")));
        assert!(!is_self_evacuating(&t("1,2/3")));
        assert!(is_self_evacuating(&t("1,2,3,4,5,6")));
        assert!(is_self_evacuating(&t("")));
    }
}
