use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use permpow::constructions::{
    cyclic_witness, eta, example_order12, skew_block_witnesses, verify_3412, verify_cyclic,
    verify_order12, verify_zeta_eta, witness_3412, zeta,
};
use permpow::enumerate::{self, DEFAULT_WITNESS_MAX_N};
use permpow::series::{verify_formula_with, FormulaId};
use permpow::suite::{run_suite, SuiteId, SuiteParams};
use permpow::{AvoidanceQuery, EnumerationResult, Permutation};

use crate::cache::{query_parameters, Cache};
use crate::config::Settings;
use crate::{CliError, Construction, Format, QueryArgs};

const COUNT_KIND: &str = "count";

pub struct Context {
    settings: Settings,
    cache: Cache,
}

fn build_query(n: usize, q: &QueryArgs) -> Result<AvoidanceQuery, CliError> {
    let query = AvoidanceQuery::new(n, q.patterns.clone(), q.mode)?;
    if q.orders.is_empty() {
        Ok(query)
    } else {
        Ok(query.with_orders(q.orders.iter().copied())?)
    }
}

fn emit(out: &mut dyn Write, text: impl AsRef<str>) -> Result<(), CliError> {
    out.write_all(text.as_ref().as_bytes())?;
    Ok(())
}

impl Context {
    pub fn new(settings: Settings) -> Result<Self, CliError> {
        let cache = match &settings.cache {
            Some(path) => Cache::open(path.clone())?,
            None => Cache::disabled(),
        };
        Ok(Context { settings, cache })
    }

    // Every count is recomputed; the cache only ever confirms it.
    fn run_query(
        &mut self,
        query: &AvoidanceQuery,
        keep: bool,
    ) -> Result<EnumerationResult, CliError> {
        let r = enumerate::enumerate(query, keep, &self.settings.enumeration)?;
        self.cache.record(
            COUNT_KIND,
            query_parameters(query),
            r.count.to_string(),
            r.elapsed_millis,
        )?;
        Ok(r)
    }

    fn check_listing(&self, n: usize) -> Result<(), CliError> {
        let limit = DEFAULT_WITNESS_MAX_N.min(self.settings.enumeration.max_n);
        if n > limit {
            return Err(permpow::Error::ResourceLimit {
                what: "length of listed permutations",
                requested: n,
                limit,
            }
            .into());
        }
        Ok(())
    }

    pub fn count(
        &mut self,
        out: &mut dyn Write,
        n: usize,
        q: &QueryArgs,
        witnesses: bool,
    ) -> Result<(), CliError> {
        let query = build_query(n, q)?;
        if witnesses {
            self.check_listing(n)?;
        }
        let r = self.run_query(&query, witnesses)?;
        emit(out, format!("{}\n", r.count))?;
        for w in r.witnesses.iter().flatten() {
            emit(out, format!("{w}\n"))?;
        }
        Ok(())
    }

    pub fn spectrum(
        &mut self,
        out: &mut dyn Write,
        n: usize,
        q: &QueryArgs,
    ) -> Result<(), CliError> {
        self.check_listing(n)?;
        let query = build_query(n, q)?;
        let r = self.run_query(&query, true)?;
        let mut tally = BTreeMap::new();
        for w in r.witnesses.iter().flatten() {
            *tally.entry(w.order()).or_insert(0u64) += 1;
        }
        emit(out, format!("total {}\n", r.count))?;
        for (order, c) in tally {
            emit(out, format!("order {order}: {c}\n"))?;
        }
        Ok(())
    }

    pub fn verify_formula(
        &mut self,
        out: &mut dyn Write,
        key: &str,
        min_n: Option<usize>,
        max_n: Option<usize>,
        format: Format,
    ) -> Result<(), CliError> {
        let id: FormulaId = key.parse()?;
        let max_n = max_n.ok_or_else(|| CliError::Usage("--formula needs --max-n".into()))?;
        let min_n = min_n.unwrap_or(id.first_n());
        if min_n > max_n {
            return Err(CliError::Usage(format!("empty range {min_n}..={max_n}")));
        }
        let mut computed = Vec::new();
        let report =
            verify_formula_with(id, min_n..=max_n, &self.settings.enumeration, |q, cfg| {
                let r = enumerate::enumerate(q, false, cfg)?;
                computed.push((query_parameters(q), r.count, r.elapsed_millis));
                Ok(r.count)
            })?;
        for (params, count, ms) in computed {
            self.cache
                .record(COUNT_KIND, params, count.to_string(), ms)?;
        }
        match format {
            Format::Text => {
                emit(out, report.to_table())?;
                let verdict = if !report.all_match() && report.passed() {
                    "WARN (conjecture mismatch)"
                } else if report.passed() {
                    "PASS"
                } else {
                    "FAIL"
                };
                emit(out, format!("result: {verdict}\n"))?;
            }
            Format::Json => emit(out, json(&report)?)?,
        }
        if report.passed() {
            Ok(())
        } else {
            Err(CliError::Verify(format!(
                "{key} disagrees with brute force"
            )))
        }
    }

    pub fn verify_suite(
        &mut self,
        out: &mut dyn Write,
        name: &str,
        max_n: Option<usize>,
        max_boxes: Option<usize>,
        k: Option<usize>,
        format: Format,
    ) -> Result<(), CliError> {
        let suite: SuiteId = name.parse()?;
        let d = SuiteParams::default();
        let params = SuiteParams {
            max_n: max_n.unwrap_or(d.max_n),
            max_boxes: max_boxes.unwrap_or(d.max_boxes),
            k: k.unwrap_or(d.k),
        };
        let report = run_suite(
            suite,
            &params,
            &self.settings.enumeration,
            self.settings.syt_max_boxes,
        )?;
        match format {
            Format::Text => {
                emit(out, report.to_table())?;
                emit(
                    out,
                    format!(
                        "result: {}\n",
                        if report.passed() { "PASS" } else { "FAIL" }
                    ),
                )?;
            }
            Format::Json => emit(out, json(&report)?)?,
        }
        if report.passed() {
            Ok(())
        } else {
            Err(CliError::Verify(format!("suite {name} failed")))
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn witness(
        &mut self,
        out: &mut dyn Write,
        construction: Construction,
        k: usize,
        r: Option<usize>,
        n: Option<usize>,
        pattern: &Permutation,
        limit: Option<usize>,
    ) -> Result<(), CliError> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("this construction needs --{flag}")))
        };
        let lines: Vec<Permutation> = match construction {
            Construction::Theorem1 => {
                let ws = skew_block_witnesses(
                    k,
                    limit.unwrap_or(usize::MAX),
                    &self.settings.enumeration,
                    self.settings.syt_max_boxes,
                )?;
                for w in &ws {
                    w.verify()?;
                }
                ws.into_iter().map(|w| w.assembled).collect()
            }
            Construction::Zeta => {
                verify_zeta_eta(k)?;
                vec![zeta(k)?]
            }
            Construction::Eta => {
                verify_zeta_eta(k)?;
                vec![eta(k)?]
            }
            Construction::Cyclic => {
                let r = need(r, "r")?;
                verify_cyclic(r, pattern)?;
                vec![cyclic_witness(r)?]
            }
            Construction::W3412 => {
                let n = need(n, "n")?;
                verify_3412(n)?;
                vec![witness_3412(n)?]
            }
            Construction::Order12 => {
                verify_order12()?;
                vec![example_order12()]
            }
        };
        for p in lines {
            emit(out, format!("{p}\n"))?;
        }
        Ok(())
    }

    pub fn sequence(
        &mut self,
        out: &mut dyn Write,
        formula: Option<&str>,
        query: Option<&QueryArgs>,
        min_n: Option<usize>,
        max_n: usize,
        path: &Path,
    ) -> Result<(), CliError> {
        let mut text = String::new();
        let mut terms = 0;
        match (formula, query) {
            (Some(key), _) => {
                let id: FormulaId = key.parse()?;
                for n in min_n.unwrap_or(id.first_n())..=max_n {
                    text.push_str(&format!("{n} {}\n", id.value(n)?));
                    terms += 1;
                }
            }
            (None, Some(q)) => {
                for n in min_n.unwrap_or(1)..=max_n {
                    let r = self.run_query(&build_query(n, q)?, false)?;
                    text.push_str(&format!("{n} {}\n", r.count));
                    terms += 1;
                }
            }
            (None, None) => return Err(CliError::Usage("give --formula or --patterns".into())),
        }
        std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?;
        emit(out, format!("wrote {terms} terms to {}\n", path.display()))
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
