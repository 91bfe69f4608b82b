//! Exhaustive property suites run by `permpow verify --suite`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::constructions::skew_block_witnesses;
use crate::enumerate::{self, sav_exact_small, AvoidanceQuery, EnumerationConfig, Mode};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Permutations};
use crate::tableaux::{
    enumerate_syt_bounded, evacuate, is_self_evacuating, rsk, sav_bounds, Partition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteId {
    Rsk,
    Evacuation,
    Symmetry,
    Bounds,
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rsk" => Ok(SuiteId::Rsk),
            "evacuation" => Ok(SuiteId::Evacuation),
            "symmetry" => Ok(SuiteId::Symmetry),
            "bounds" => Ok(SuiteId::Bounds),
            _ => Err(Error::invalid(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteId::Rsk => "rsk",
            SuiteId::Evacuation => "evacuation",
            SuiteId::Symmetry => "symmetry",
            SuiteId::Bounds => "bounds",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: SuiteId) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict}  {}  {}\n", c.name, c.detail));
        }
        out
    }
}

/// Parameters shared by the suites.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    /// Largest permutation length for the RSK and symmetry suites.
    pub max_n: usize,
    /// Largest tableau size for the evacuation suite.
    pub max_boxes: usize,
    /// `k` for the bounds suite.
    pub k: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_n: 6,
            max_boxes: 8,
            k: 2,
        }
    }
}

pub fn run_suite(
    suite: SuiteId,
    params: &SuiteParams,
    config: &EnumerationConfig,
    syt_bound: usize,
) -> Result<SuiteReport> {
    match suite {
        SuiteId::Rsk => Ok(rsk_suite(params.max_n)),
        SuiteId::Evacuation => evacuation_suite(params.max_boxes.min(syt_bound)),
        SuiteId::Symmetry => symmetry_suite(params.max_n, config),
        SuiteId::Bounds => bounds_suite(params.k, config, syt_bound),
    }
}

// Counts failures of `prop` over S_0..S_max_n and records one check line.
fn over_all_perms(
    report: &mut SuiteReport,
    name: &str,
    max_n: usize,
    mut prop: impl FnMut(&Permutation) -> bool,
) {
    let mut checked = 0u64;
    let mut first_bad = None;
    for n in 0..=max_n {
        for p in Permutations::new(n) {
            checked += 1;
            if !prop(&p) && first_bad.is_none() {
                first_bad = Some(p);
            }
        }
    }
    match first_bad {
        None => report.record(name, true, format!("{checked} permutations")),
        Some(p) => report.record(name, false, format!("counterexample {p}")),
    }
}

pub fn rsk_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new(SuiteId::Rsk);
    over_all_perms(&mut r, "same shape", max_n, |p| {
        let (a, b) = rsk(p);
        a.shape() == b.shape()
    });
    over_all_perms(&mut r, "first row = LIS, first column = LDS", max_n, |p| {
        let shape = rsk(p).0.shape();
        shape.parts().first().copied().unwrap_or(0) == p.lis() && shape.length() == p.lds()
    });
    over_all_perms(&mut r, "P(p^-1) = Q(p), Q(p^-1) = P(p)", max_n, |p| {
        let (a, b) = rsk(p);
        let (ai, bi) = rsk(&p.inverse());
        ai == b && bi == a
    });
    over_all_perms(&mut r, "P(rev p) = P^T, Q(rev p) = ev(Q^T)", max_n, |p| {
        let (a, b) = rsk(p);
        let (ar, br) = rsk(&p.reverse());
        ar == a.transpose() && br == evacuate(&b.transpose())
    });
    over_all_perms(&mut r, "P(rot p) = Q^T, Q(rot p) = ev(P^T)", max_n, |p| {
        let (a, b) = rsk(p);
        let (ar, br) = rsk(&p.rotate());
        ar == b.transpose() && br == evacuate(&a.transpose())
    });
    over_all_perms(
        &mut r,
        "p = rot p <=> P = Q^T and Q self-evacuating",
        max_n,
        |p| {
            let (a, b) = rsk(p);
            (p.rotate() == *p) == (a == b.transpose() && is_self_evacuating(&b))
        },
    );
    over_all_perms(&mut r, "p = rc p <=> P and Q self-evacuating", max_n, |p| {
        let (a, b) = rsk(p);
        (p.reverse_complement() == *p) == (is_self_evacuating(&a) && is_self_evacuating(&b))
    });
    r
}

pub fn evacuation_suite(max_boxes: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(SuiteId::Evacuation);
    let mut checked = 0u64;
    let mut involution_bad = None;
    let mut transpose_bad = None;
    for size in 0..=max_boxes {
        for shape in Partition::all_of_size(size) {
            for y in enumerate_syt_bounded(&shape, max_boxes)? {
                checked += 1;
                let e = evacuate(&y);
                if e.shape() != y.shape() || evacuate(&e) != y {
                    involution_bad.get_or_insert(y.clone());
                }
                if evacuate(&y.transpose()) != e.transpose() {
                    transpose_bad.get_or_insert(y);
                }
            }
        }
    }
    for (name, bad) in [
        ("ev(ev(Y)) = Y, same shape", involution_bad),
        ("ev(Y^T) = ev(Y)^T", transpose_bad),
    ] {
        match bad {
            None => r.record(name, true, format!("{checked} tableaux")),
            Some(y) => r.record(name, false, format!("counterexample {y}")),
        }
    }
    Ok(r)
}

pub fn symmetry_suite(max_n: usize, config: &EnumerationConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(SuiteId::Symmetry);
    over_all_perms(
        &mut r,
        "rev, comp involutions; rot^4 = id; rot^2 = rc",
        max_n,
        |p| {
            let rot2 = p.rotate().rotate();
            p.reverse().reverse() == *p
                && p.complement().complement() == *p
                && rot2.rotate().rotate() == *p
                && rot2 == p.reverse_complement()
        },
    );
    over_all_perms(
        &mut r,
        "rev = p∘δ, comp = δ∘p, rc = δ∘p∘δ",
        max_n,
        |p| {
            let d = Permutation::decreasing(p.len());
            p.reverse() == p.compose(&d).unwrap()
                && p.complement() == d.compose(p).unwrap()
                && p.reverse_complement() == d.compose(&p.compose(&d).unwrap()).unwrap()
        },
    );
    over_all_perms(&mut r, "rc commutes with powers", max_n, |p| {
        (0..=4).all(|k| p.power(k).reverse_complement() == p.reverse_complement().power(k))
    });
    over_all_perms(&mut r, "p^order = id", max_n, |p| {
        p.power(p.order() as i64).is_identity()
    });

    let length3: Vec<Permutation> = Permutations::new(3).collect();
    over_all_perms(
        &mut r,
        "containment invariant under rev/comp/inverse",
        max_n,
        |p| {
            length3.iter().all(|t| {
                let c = p.contains(t);
                c == p.reverse().contains(&t.reverse())
                    && c == p.complement().contains(&t.complement())
                    && c == p.inverse().contains(&t.inverse())
            })
        },
    );

    let n_counts = max_n.min(config.max_n);
    let mut mismatch = None;
    for t in &length3 {
        for mode in [Mode::Plain, Mode::Strong, Mode::Powerful] {
            for n in 1..=n_counts {
                let a = enumerate::count(&AvoidanceQuery::new(n, vec![t.clone()], mode)?, config)?;
                let b = enumerate::count(
                    &AvoidanceQuery::new(n, vec![t.reverse_complement()], mode)?,
                    config,
                )?;
                if a != b && mismatch.is_none() {
                    mismatch = Some(format!("{t} {mode} n={n}: {a} vs {b}"));
                }
            }
        }
    }
    match mismatch {
        None => r.record(
            "counts invariant under reverse-complementing patterns",
            true,
            "",
        ),
        Some(m) => r.record(
            "counts invariant under reverse-complementing patterns",
            false,
            m,
        ),
    }
    Ok(r)
}

pub fn bounds_suite(k: usize, config: &EnumerationConfig, syt_bound: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(SuiteId::Bounds);
    let (lower, upper) = sav_bounds(k)?;
    let exact = BigUint::from(sav_exact_small(k, config)?);
    r.record(
        format!("lower <= |SAv_{}(id_{})| <= upper", k * k * k, k + 1),
        lower <= exact && exact <= upper,
        format!("{lower} <= {exact} <= {upper}"),
    );

    let beyond = k * k * k + 1;
    let empty = AvoidanceQuery::new(beyond, vec![Permutation::identity(k + 1)], Mode::Strong)?;
    let c = enumerate::count(&empty, config)?;
    r.record(
        format!("|SAv_{beyond}(id_{})| = 0", k + 1),
        c == 0,
        c.to_string(),
    );

    let witnesses = skew_block_witnesses(k, usize::MAX, config, syt_bound)?;
    r.record(
        "skew-block witnesses verify",
        !witnesses.is_empty(),
        format!("{} witnesses", witnesses.len()),
    );
    Ok(r)
}
