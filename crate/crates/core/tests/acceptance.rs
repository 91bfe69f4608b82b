//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the PASS/FAIL lines are
//! always printed: `cargo test -p permpow --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use permpow::constructions::{
    cyclic_witness, eta, example_order12, skew_block_witnesses, witness_3412, zeta,
};
use permpow::enumerate::{self, powerfully_avoids, sav_exact_small, strongly_avoids, xi_witness};
use permpow::perm::Permutations;
use permpow::series::{
    order3_312_ending_in_one, order3_312_gf, strong_132_3421_count, strong_321_1342_conjectured,
    strong_321_3412_gf,
};
use permpow::tableaux::{
    count_self_evacuating_rect, enumerate_syt, evacuate, hook_length_count, is_self_evacuating,
    rect_count_via_barnes, rsk, sav_bounds, DEFAULT_SYT_BOUND,
};
use permpow::{AvoidanceQuery, EnumerationConfig, Mode, Partition, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> EnumerationConfig {
    EnumerationConfig::default()
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn count(n: usize, pats: &[&str], mode: Mode) -> u64 {
    enumerate::count(&AvoidanceQuery::parse(n, pats, mode).unwrap(), &cfg()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn c1_strong_132_231() -> Outcome {
    let t = Instant::now();
    for n in 1..=10 {
        let c = count(n, &["132", "231"], Mode::Strong);
        ensure(c == n as u64, || format!("n={n}: {c}"))?;
    }
    within(t, Duration::from_secs(120))?;
    Ok("|SAv_n(132,231)| = n for n = 1..10".into())
}

fn c2_strong_132_3421() -> Outcome {
    let counts: Vec<u64> = (0..=10)
        .map(|n| count(n, &["132", "3421"], Mode::Strong))
        .collect();
    for n in 2..=10u64 {
        let formula = strong_132_3421_count(n).unwrap();
        let got = BigUint::from(counts[n as usize]);
        ensure(formula == got, || {
            format!("n={n}: oracle {got}, formula {formula}")
        })?;
    }
    for n in 4..=10usize {
        let diff = counts[n] as i64 - counts[n - 1] as i64;
        ensure(diff == 4 * n as i64 - 9, || {
            format!("n={n}: difference {diff}")
        })?;
    }
    Ok(format!(
        "counts 2..10 = {:?}; increments 4n-9 for n = 4..10",
        &counts[2..]
    ))
}

fn c3_strong_321_3412() -> Outcome {
    let gf = strong_321_3412_gf().expand(10).unwrap();
    for (n, coeff) in gf.iter().enumerate().skip(1) {
        let c = BigInt::from(count(n, &["321", "3412"], Mode::Strong));
        ensure(&c == coeff, || {
            format!("n={n}: oracle {c}, coefficient {coeff}")
        })?;
    }
    ensure(gf[..7] == [1, 1, 2, 5, 9, 18, 37].map(BigInt::from), || {
        "leading terms".into()
    })?;
    Ok("coefficients of 1/(1-x-x^2-2x^3) for n = 1..10".into())
}

fn c4_order_1_or_3() -> Outcome {
    let gf = order3_312_gf().expand(20).unwrap();
    for (n, coeff) in gf.iter().enumerate().take(11).skip(1) {
        for pat in ["312", "231"] {
            let q = AvoidanceQuery::parse(n, &[pat], Mode::Plain)
                .unwrap()
                .with_orders([1, 3])
                .unwrap();
            let c = BigInt::from(enumerate::count(&q, &cfg()).unwrap());
            ensure(&c == coeff, || {
                format!("{pat} n={n}: oracle {c}, coefficient {coeff}")
            })?;
        }
    }
    // F = B/(1-B)  <=>  F = B + B·F, coefficientwise
    let b = order3_312_ending_in_one(20);
    for m in 0..=20 {
        let conv: BigInt = (1..m).map(|i| &b[i] * &gf[m - i]).sum();
        ensure(gf[m] == &b[m] + conv, || format!("B/(1-B) fails at x^{m}"))?;
    }
    Ok("312 and 231 match (x+x^3+x^5)/(1-x-3x^3-x^5) for n = 1..10; B/(1-B) to x^20".into())
}

fn c5_long_strong_avoiders() -> Outcome {
    let t = Instant::now();
    let (lower, upper) = sav_bounds(2).unwrap();
    ensure(
        lower == BigUint::from(4u32) && upper == BigUint::from(196u32),
        || format!("bounds ({lower}, {upper})"),
    )?;
    let exact = sav_exact_small(2, &cfg()).unwrap();
    ensure(exact == 44, || {
        format!("|SAv_8(123)| = {exact}, recorded value 44")
    })?;
    let exact = BigUint::from(exact);
    ensure(lower <= exact && exact <= upper, || "outside bounds".into())?;

    let witnesses = skew_block_witnesses(2, usize::MAX, &cfg(), DEFAULT_SYT_BOUND)
        .map_err(|e| e.to_string())?;
    ensure(witnesses.len() == 4, || {
        format!("{} witnesses", witnesses.len())
    })?;
    let id3 = Permutation::identity(3);
    for w in &witnesses {
        w.verify().map_err(|e| e.to_string())?;
        ensure(
            strongly_avoids(&w.assembled, std::slice::from_ref(&id3)),
            || format!("{} not in SAv_8(123)", w.assembled),
        )?;
    }

    // Emptiness beyond k³: pruned search and a plain scan of all of S_9.
    let pruned = count(9, &["123"], Mode::Strong);
    let scanned = Permutations::new(9)
        .filter(|q| strongly_avoids(q, std::slice::from_ref(&id3)))
        .count();
    ensure(pruned == 0 && scanned == 0, || {
        format!("|SAv_9(123)| = {pruned} / {scanned}")
    })?;
    within(t, Duration::from_secs(60))?;
    Ok(format!(
        "4 <= |SAv_8(123)| = {exact} <= 196; 4 witnesses verified; |SAv_9(123)| = 0"
    ))
}

fn c6_self_evacuating_squares() -> Outcome {
    let mut seen = Vec::new();
    for k in 1..=3 {
        let all = enumerate_syt(&Partition::rectangle(k, k)).unwrap();
        let fixed = all.iter().filter(|y| is_self_evacuating(y)).count();
        let formula = count_self_evacuating_rect(k).unwrap();
        ensure(formula == BigUint::from(fixed), || {
            format!("k={k}: brute {fixed}, formula {formula}")
        })?;
        if k == 3 {
            ensure(all.len() == 42, || {
                format!("3x3 has {} tableaux", all.len())
            })?;
        }
        seen.push(fixed);
    }
    ensure(seen == [1, 2, 6], || format!("{seen:?}"))?;
    Ok("self-evacuating k x k tableaux: 1, 2, 6".into())
}

fn c7_rsk_properties() -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    for n in 0..=6 {
        for q in Permutations::new(n) {
            checked += 1;
            let (a, b) = rsk(&q);
            let fail = |what: &str| format!("{what} fails for {q}");
            ensure(a.shape() == b.shape(), || fail("shape equality"))?;
            let shape = a.shape();
            ensure(
                shape.parts().first().copied().unwrap_or(0) == q.lis(),
                || fail("LIS"),
            )?;
            ensure(shape.length() == q.lds(), || fail("LDS"))?;
            let (ai, bi) = rsk(&q.inverse());
            ensure(ai == b && bi == a, || fail("inverse swap"))?;
            let (ar, br) = rsk(&q.reverse());
            ensure(ar == a.transpose(), || fail("P(rev)"))?;
            ensure(br == evacuate(&b.transpose()), || fail("Q(rev)"))?;
            let (ao, bo) = rsk(&q.rotate());
            ensure(ao == b.transpose(), || fail("P(rot)"))?;
            ensure(bo == evacuate(&a.transpose()), || fail("Q(rot)"))?;
            let self_rot = q.rotate() == q;
            ensure(
                self_rot == (a == b.transpose() && is_self_evacuating(&b)),
                || fail("self-rot"),
            )?;
            let self_rc = q.reverse_complement() == q;
            ensure(
                self_rc == (is_self_evacuating(&a) && is_self_evacuating(&b)),
                || fail("self-rc"),
            )?;
        }
    }
    let mut tableaux = 0;
    for size in 0..=8 {
        for shape in Partition::all_of_size(size) {
            for y in enumerate_syt(&shape).unwrap() {
                tableaux += 1;
                let e = evacuate(&y);
                ensure(evacuate(&e) == y, || format!("ev not an involution at {y}"))?;
                ensure(evacuate(&y.transpose()) == e.transpose(), || {
                    format!("ev/transpose at {y}")
                })?;
            }
        }
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("{checked} permutations, {tableaux} tableaux"))
}

fn c8_counting_cross_check() -> Outcome {
    let mut shapes = 0;
    for size in 0..=10 {
        for shape in Partition::all_of_size(size) {
            shapes += 1;
            let brute = enumerate_syt(&shape).unwrap().len();
            let hook = hook_length_count(&shape);
            ensure(hook == BigUint::from(brute), || {
                format!("{shape}: {brute} vs {hook}")
            })?;
        }
    }
    for rows in 1..=10 {
        for cols in 1..=10 / rows {
            let hook = hook_length_count(&Partition::rectangle(rows, cols));
            let barnes = rect_count_via_barnes(rows, cols).unwrap();
            ensure(hook == barnes, || {
                format!("{rows}x{cols}: {hook} vs {barnes}")
            })?;
        }
    }
    Ok(format!(
        "{shapes} shapes up to 10 boxes; rectangles agree with Barnes G"
    ))
}

fn c9_powerful_avoidance() -> Outcome {
    let t231 = p("231");
    for r in 3..=7 {
        let w = xi_witness(&t231, r, 7, &cfg()).map_err(|e| e.to_string())?;
        ensure(w.is_none(), || {
            format!("order {r}: unexpected witness {w:?}")
        })?;
    }
    let t2413 = p("2413");
    for r in 1..=8 {
        let c = cyclic_witness(r).unwrap();
        ensure(powerfully_avoids(&c, std::slice::from_ref(&t2413)), || {
            format!("cyclic r={r}")
        })?;
    }
    let t3412 = p("3412");
    for n in 2..=10 {
        let w = witness_3412(n).unwrap();
        ensure(w.order() == n as u64, || {
            format!("{w} has order {}", w.order())
        })?;
        ensure(powerfully_avoids(&w, std::slice::from_ref(&t3412)), || {
            format!("{w} fails")
        })?;
    }
    for n in 1..=10 {
        let c = count(n, &["231"], Mode::Powerful);
        ensure(c == 1 << (n - 1), || format!("|PAv_{n}(231)| = {c}"))?;
    }
    Ok("no 231 witnesses of order 3..7 up to length 7; cyclic and 3412 witnesses verified; |PAv_n(231)| = 2^(n-1)".into())
}

fn c10_order_three_constructions() -> Outcome {
    for k in 2..=4 {
        let z = zeta(k).unwrap();
        let e = eta(k).unwrap();
        let id = Permutation::identity(k + 1);
        ensure(z.order() == 3, || format!("k={k}: order {}", z.order()))?;
        ensure(z.power(2) == e, || format!("k={k}: zeta^2 != eta"))?;
        ensure(z.compose(&e).unwrap().is_identity(), || {
            format!("k={k}: zeta∘eta")
        })?;
        ensure(z.avoids(&id) && e.avoids(&id), || {
            format!("k={k}: contains id_{}", k + 1)
        })?;
        ensure(z.lis() <= k && e.lis() <= k, || {
            format!("k={k}: LIS too long")
        })?;
    }
    let q = example_order12();
    ensure(q == p("53827614"), || q.to_string())?;
    ensure(q.order() == 12, || format!("order {}", q.order()))?;
    ensure(strongly_avoids(&q, &[p("123")]), || {
        "not in SAv_8(123)".into()
    })?;
    Ok("zeta/eta for k = 2..4; 53827614 in SAv_8(123) with order 12".into())
}

// Conjecture status: a mismatch is surfaced, never a failure.
fn c11_conjecture_321_1342() -> Outcome {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for n in 1..=10u64 {
        let c = count(n as usize, &["321", "1342"], Mode::Strong);
        let f = strong_321_1342_conjectured(n).unwrap();
        if BigUint::from(c) != f {
            mismatches.push(format!("n={n}: {c} vs {f}"));
        }
        rows.push(c.to_string());
    }
    // Independently computed for n <= 9 by a separate brute force.
    let recorded = ["1", "2", "5", "10", "19", "34", "59", "100", "167"];
    if rows[..9] != recorded {
        mismatches.push(format!("recorded values differ: {rows:?}"));
    }
    if mismatches.is_empty() {
        Ok(format!(
            "conjecture holds for n = 1..10: {}",
            rows.join(",")
        ))
    } else {
        println!(
            "WARN  conjecture |SAv_n(321,1342)| = 2F(n+2)-n-2 mismatches: {}",
            mismatches.join("; ")
        );
        Ok(format!(
            "conjecture mismatches reported: {}",
            mismatches.len()
        ))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1  |SAv_n(132,231)| = n", c1_strong_132_231),
        ("2  |SAv_n(132,3421)| = 2n^2-7n+8", c2_strong_132_3421),
        (
            "3  |SAv_n(321,3412)| generating function",
            c3_strong_321_3412,
        ),
        ("4  order 1 or 3 avoiders of 312/231", c4_order_1_or_3),
        (
            "5  strong id_3 avoiders of length 8 and 9",
            c5_long_strong_avoiders,
        ),
        (
            "6  self-evacuating squares vs brute force",
            c6_self_evacuating_squares,
        ),
        ("7  RSK and evacuation identities", c7_rsk_properties),
        (
            "8  hook length = enumeration = Barnes G",
            c8_counting_cross_check,
        ),
        ("9  powerful avoidance witnesses", c9_powerful_avoidance),
        (
            "10 order-3 constructions and 53827614",
            c10_order_three_constructions,
        ),
        ("11 conjecture 321/1342 report", c11_conjecture_321_1342),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  {name}  [{:.2?}]  {detail}", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  [{:.2?}]  {why}", t.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
