use std::fmt;

use super::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// vertical unit segment
    V,
    /// horizontal unit segment
    H,
}

/// The southeast boundary of a Young diagram read from its bottom-left
/// corner to its top-right corner.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProfileWord {
    letters: Vec<Step>,
}

impl ProfileWord {
    pub fn of(shape: &Partition) -> Self {
        let parts = shape.parts();
        let mut letters = Vec::new();
        for i in (0..parts.len()).rev() {
            let above = parts[i] - parts.get(i + 1).copied().unwrap_or(0);
            letters.extend(std::iter::repeat_n(Step::H, above));
            letters.push(Step::V);
        }
        ProfileWord { letters }
    }

    pub fn from_letters(letters: Vec<Step>) -> Self {
        ProfileWord { letters }
    }

    pub fn letters(&self) -> &[Step] {
        &self.letters
    }

    /// Drops `v`s before the first `h` and `h`s after the last `v`.
    ///
    /// A word with no `h` or no `v` normalizes to the empty word.
    pub fn normalized(&self) -> ProfileWord {
        let first_h = self.letters.iter().position(|&s| s == Step::H);
        let last_v = self.letters.iter().rposition(|&s| s == Step::V);
        let letters = match (first_h, last_v) {
            (Some(a), Some(b)) if a <= b => self.letters[a..=b].to_vec(),
            _ => Vec::new(),
        };
        ProfileWord { letters }
    }

    /// Letters at 1-based odd positions (`odd = true`) or even positions.
    pub fn alternate(&self, odd: bool) -> ProfileWord {
        let skip = if odd { 0 } else { 1 };
        ProfileWord {
            letters: self.letters.iter().skip(skip).step_by(2).copied().collect(),
        }
    }

    /// The partition whose boundary is this word after normalization.
    pub fn to_partition(&self) -> Partition {
        let mut width = 0;
        let mut bottom_up = Vec::new();
        for &s in &self.normalized().letters {
            match s {
                Step::H => width += 1,
                Step::V => bottom_up.push(width),
            }
        }
        bottom_up.reverse();
        Partition::new(bottom_up).expect("normalized profile words describe partitions")
    }
}

impl fmt::Display for ProfileWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            f.write_str(match s {
                Step::V => "v",
                Step::H => "h",
            })?;
        }
        Ok(())
    }
}

/// `(λ^o, λ^e)`: the partitions read off the odd- and even-position letters of
/// the profile word of `shape`.
pub fn partition_quotient(shape: &Partition) -> (Partition, Partition) {
    let w = ProfileWord::of(shape);
    (
        w.alternate(true).to_partition(),
        w.alternate(false).to_partition(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(
            ProfileWord::of(&Partition::rectangle(4, 4)).to_string(),
            "hhhhvvvv"
        );
        assert_eq!(ProfileWord::of(&"2,1".parse().unwrap()).to_string(), "hvhv");
        assert_eq!(
            ProfileWord::of(&"3,1".parse().unwrap()).to_string(),
            "hvhhv"
        );
        let w = ProfileWord::of(&Partition::rectangle(4, 4));
        assert_eq!(w.alternate(true).to_string(), "hhvv");
        assert_eq!(w.alternate(false).to_string(), "hhvv");
        for shape in ["3,1", "4,4,2,1", "5", "1,1,1"] {
            let shape: Partition = shape.parse().unwrap();
            assert_eq!(ProfileWord::of(&shape).to_partition(), shape);
        }
    }

    #[test]
    fn square_quotients() {
        assert_eq!(
            partition_quotient(&Partition::rectangle(4, 4)),
            (Partition::rectangle(2, 2), Partition::rectangle(2, 2))
        );
        for k in 1..=6 {
            let (o, e) = partition_quotient(&Partition::rectangle(k, k));
            assert_eq!(o, Partition::rectangle(k / 2, k.div_ceil(2)), "k={k}");
            assert_eq!(e, Partition::rectangle(k.div_ceil(2), k / 2), "k={k}");
        }
    }

    #[test]
    fn single_box() {
        // "hv": odd letters "h", even letters "v"; both normalize to nothing.
        assert_eq!(
            partition_quotient(&"1".parse().unwrap()),
            (Partition::empty(), Partition::empty())
        );
    }
}
