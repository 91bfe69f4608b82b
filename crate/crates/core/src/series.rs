//! Exact rational generating functions and closed-form counting formulas.
//!
//! Everything here is integer arithmetic; coefficients are extracted by power
//! series long division.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::enumerate::{self, AvoidanceQuery, EnumerationConfig, Mode};
use crate::error::{Error, Result};

/// Dense integer polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator` with a denominator invertible as a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::invalid(
                "denominator must have a nonzero constant term",
            ));
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Coefficients of `x^0 … x^n`.
    ///
    /// Fails if a coefficient is not an integer, which can only happen when
    /// the denominator's constant term is not `±1`.
    pub fn expand(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = self.denominator.coeff(0);
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.numerator.coeff(i);
            for (j, d) in den.iter().enumerate().skip(1).take(i) {
                acc -= d * &out[i - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::invalid(format!(
                    "coefficient {i} of the expansion is not an integer"
                )));
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `(x + x³ + x⁵) / (1 − x − 3x³ − x⁵)`: 231/312-avoiders of order 1 or 3.
pub fn order3_312_gf() -> RationalGF {
    RationalGF::new(
        IntPolynomial::from_i64(&[0, 1, 0, 1, 0, 1]),
        IntPolynomial::from_i64(&[1, -1, 0, -3, 0, -1]),
    )
    .expect("constant term 1")
}

/// `x + x³(1+x)²/(1−2x³)` as a single fraction:
/// `(x − 2x⁴ + x³ + 2x⁴ + x⁵) / (1 − 2x³) = (x + x³ + x⁵) / (1 − 2x³)`.
pub fn order3_312_ending_in_one_gf() -> RationalGF {
    RationalGF::new(
        IntPolynomial::from_i64(&[0, 1, 0, 1, 0, 1]),
        IntPolynomial::from_i64(&[1, 0, 0, -2]),
    )
    .expect("constant term 1")
}

/// `b(0) … b(n)`: order-1-or-3 312-avoiders ending in 1, by length.
pub fn order3_312_ending_in_one(n: usize) -> Vec<BigInt> {
    order3_312_ending_in_one_gf().expand(n).expect("integral")
}

/// `1 / (1 − x − x² − 2x³)`: strong avoiders of 321 and 3412.
pub fn strong_321_3412_gf() -> RationalGF {
    RationalGF::new(
        IntPolynomial::from_i64(&[1]),
        IntPolynomial::from_i64(&[1, -1, -1, -2]),
    )
    .expect("constant term 1")
}

/// `2n² − 7n + 8`, strong avoiders of 132 and 3421, for `n ≥ 2`.
pub fn strong_132_3421_count(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(format!("formula holds for n >= 2, got {n}")));
    }
    Ok(BigUint::from(2 * n * n + 8 - 7 * n))
}

/// `n`, strong avoiders of 132 and 231.
pub fn strong_132_231_count(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    Ok(BigUint::from(n))
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("Fibonacci index starts at 1"));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(if n <= 2 { BigUint::one() } else { b })
}

/// Conjectured count of strong avoiders of 321 and 1342: `2F_{n+2} − n − 2`.
pub fn strong_321_1342_conjectured(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    Ok(fibonacci(n + 2)? * 2u32 - (n + 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaStatus {
    Theorem,
    Conjecture,
}

/// Closed forms with a matching enumeration oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// order 1 or 3, avoiding 312 (and 231)
    Order3Avoiding312,
    /// strong avoiders of 132, 3421
    Strong132And3421,
    /// strong avoiders of 321, 3412
    Strong321And3412,
    /// strong avoiders of 132, 231
    Strong132And231,
    /// strong avoiders of 321, 1342
    Strong321And1342,
    /// powerful 231-avoiders are the layered permutations: `2^{n-1}`
    Powerful231Layered,
}

impl FormulaId {
    pub const ALL: [FormulaId; 6] = [
        FormulaId::Order3Avoiding312,
        FormulaId::Strong132And3421,
        FormulaId::Strong321And3412,
        FormulaId::Strong132And231,
        FormulaId::Strong321And1342,
        FormulaId::Powerful231Layered,
    ];

    pub fn key(self) -> &'static str {
        match self {
            FormulaId::Order3Avoiding312 => "theorem2",
            FormulaId::Strong132And3421 => "theorem3",
            FormulaId::Strong321And3412 => "theorem4",
            FormulaId::Strong132And231 => "corollary1",
            FormulaId::Strong321And1342 => "conjecture_321_1342",
            FormulaId::Powerful231Layered => "pav231_layered",
        }
    }

    pub fn status(self) -> FormulaStatus {
        match self {
            FormulaId::Strong321And1342 => FormulaStatus::Conjecture,
            _ => FormulaStatus::Theorem,
        }
    }

    /// Smallest `n` the formula is stated for.
    pub fn first_n(self) -> usize {
        match self {
            FormulaId::Strong132And3421 => 2,
            _ => 1,
        }
    }

    /// Formula value at `n`.
    pub fn value(self, n: usize) -> Result<BigUint> {
        if n < self.first_n() {
            return Err(Error::invalid(format!(
                "{} is stated for n >= {}",
                self.key(),
                self.first_n()
            )));
        }
        let from_gf = |gf: RationalGF| -> Result<BigUint> {
            let c = gf.expand(n)?.pop().expect("n + 1 coefficients");
            c.to_biguint()
                .ok_or_else(|| Error::invalid("negative generating function coefficient"))
        };
        match self {
            FormulaId::Order3Avoiding312 => from_gf(order3_312_gf()),
            FormulaId::Strong132And3421 => strong_132_3421_count(n as u64),
            FormulaId::Strong321And3412 => from_gf(strong_321_3412_gf()),
            FormulaId::Strong132And231 => strong_132_231_count(n as u64),
            FormulaId::Strong321And1342 => strong_321_1342_conjectured(n as u64),
            FormulaId::Powerful231Layered => Ok(BigUint::one() << (n - 1)),
        }
    }

    /// The enumeration whose count the formula predicts.
    pub fn oracle_queries(self, n: usize) -> Result<Vec<AvoidanceQuery>> {
        let q = |pats: &[&str], mode| AvoidanceQuery::parse(n, pats, mode);
        Ok(match self {
            FormulaId::Order3Avoiding312 => vec![
                q(&["312"], Mode::Plain)?.with_orders([1, 3])?,
                q(&["231"], Mode::Plain)?.with_orders([1, 3])?,
            ],
            FormulaId::Strong132And3421 => vec![q(&["132", "3421"], Mode::Strong)?],
            FormulaId::Strong321And3412 => vec![q(&["321", "3412"], Mode::Strong)?],
            FormulaId::Strong132And231 => vec![q(&["132", "231"], Mode::Strong)?],
            FormulaId::Strong321And1342 => vec![q(&["321", "1342"], Mode::Strong)?],
            FormulaId::Powerful231Layered => vec![q(&["231"], Mode::Powerful)?],
        })
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| Error::invalid(format!("unknown formula {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub formula: BigUint,
    /// One count per oracle query (two for the order-1-or-3 count: 312 and 231).
    pub oracle: Vec<u64>,
    pub matches: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub formula: String,
    pub status: FormulaStatus,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    /// A mismatch only fails the campaign for theorem-status formulas.
    pub fn passed(&self) -> bool {
        self.status == FormulaStatus::Conjecture || self.all_match()
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("formula {} ({:?})\n", self.formula, self.status);
        out.push_str(&format!(
            "{:>4}  {:>12}  {:>24}  {}\n",
            "n", "formula", "oracle", "result"
        ));
        for r in &self.rows {
            let oracle: Vec<String> = r.oracle.iter().map(u64::to_string).collect();
            let verdict = match (r.matches, self.status) {
                (true, _) => "PASS",
                (false, FormulaStatus::Theorem) => "FAIL",
                (false, FormulaStatus::Conjecture) => "WARN",
            };
            out.push_str(&format!(
                "{:>4}  {:>12}  {:>24}  {}\n",
                r.n,
                r.formula.to_string(),
                oracle.join(","),
                verdict
            ));
        }
        out
    }
}

/// Runs each oracle over `range` and compares it with the formula.
///
/// For theorem-status formulas the campaign stops at the first mismatch;
/// conjecture mismatches are recorded and the campaign continues.
pub fn verify_formula(
    id: FormulaId,
    range: RangeInclusive<usize>,
    config: &EnumerationConfig,
) -> Result<VerificationReport> {
    verify_formula_with(id, range, config, enumerate::count)
}

/// As [`verify_formula`], with the oracle count supplied by the caller (e.g. a
/// cached runner).
pub fn verify_formula_with(
    id: FormulaId,
    range: RangeInclusive<usize>,
    config: &EnumerationConfig,
    mut oracle: impl FnMut(&AvoidanceQuery, &EnumerationConfig) -> Result<u64>,
) -> Result<VerificationReport> {
    if *range.start() < id.first_n() {
        return Err(Error::invalid(format!(
            "{} is stated for n >= {}",
            id.key(),
            id.first_n()
        )));
    }
    if *range.end() > config.max_n {
        return Err(Error::ResourceLimit {
            what: "permutation length",
            requested: *range.end(),
            limit: config.max_n,
        });
    }
    let mut rows = Vec::new();
    for n in range {
        let formula = id.value(n)?;
        let oracle_counts = id
            .oracle_queries(n)?
            .iter()
            .map(|q| oracle(q, config))
            .collect::<Result<Vec<u64>>>()?;
        let matches = oracle_counts.iter().all(|&c| BigUint::from(c) == formula);
        rows.push(VerificationRow {
            n,
            formula,
            oracle: oracle_counts,
            matches,
        });
        if !matches && id.status() == FormulaStatus::Theorem {
            break;
        }
    }
    Ok(VerificationReport {
        formula: id.key().to_string(),
        status: id.status(),
        rows,
    })
}
