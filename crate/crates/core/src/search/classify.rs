//! Classification of connected `r`-regular, `rho` net-regular SRSGs of a
//! given order.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_form, CanonicalForm};
use crate::feasibility::{enumerate_candidates, Order, ParamQuery, StructuralFilter};
use crate::format::write_sg;
use crate::graph::SignedGraph;
use crate::srsg::{check_srsg, classify_class, ClassLabel, SrsgParams};

use super::census::{census_file, ingest_census};
use super::constrained::{self, Target};
use super::factors::{enumerate_negative_subgraphs, sign_by_factor};
use super::{gen_regular, SearchError};

/// Negative degree of a vertex of degree `r` and net-degree `rho`.
pub fn negative_regularity(r: usize, rho: i64) -> Result<usize, SearchError> {
    let r_i = r as i64;
    if rho < 0 || rho > r_i || (r_i - rho) % 2 != 0 {
        return Err(SearchError::NetParity { r, rho });
    }
    Ok(((r_i - rho) / 2) as usize)
}

/// Node-count and wall-time limits. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn exceeded(&self, nodes: u64, start: Instant) -> bool {
        self.max_nodes.is_some_and(|m| nodes > m) || self.max_time.is_some_and(|t| start.elapsed() > t)
    }

    pub fn describe(&self, nodes: u64, start: Instant) -> String {
        format!(
            "budget exhausted after {nodes} nodes and {:.1}s",
            start.elapsed().as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generated,
    Census(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Full,
    Constrained(Target),
}

/// One SRSG found by a search, as its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub params: SrsgParams,
    pub class: ClassLabel,
    #[serde(serialize_with = "as_sg")]
    pub graph: SignedGraph,
    #[serde(skip)]
    pub form: CanonicalForm,
}

fn as_sg<S: Serializer>(g: &SignedGraph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&write_sg(g))
}

impl Survivor {
    pub fn from_form(form: CanonicalForm, params: SrsgParams) -> Self {
        Survivor {
            params,
            class: classify_class(&params),
            graph: form.to_graph(),
            form,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub rho: i64,
    pub mode: String,
    pub source: String,
    /// connected r-regular underlying graphs examined (full mode)
    pub underlying_count: usize,
    /// negative subgraphs before orbit reduction (full mode)
    pub factor_count: u64,
    /// signings checked: orbit representatives, or completed states
    pub signing_count: u64,
    /// intermediate states expanded (constrained mode)
    pub node_count: u64,
    pub survivors: Vec<Survivor>,
    /// set when the budget ran out; survivors are then partial
    pub incomplete: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    fn empty(n: usize, r: usize, rho: i64, mode: String, source: String) -> Self {
        SearchReport {
            n,
            r,
            rho,
            mode,
            source,
            underlying_count: 0,
            factor_count: 0,
            signing_count: 0,
            node_count: 0,
            survivors: Vec::new(),
            incomplete: None,
            elapsed: Duration::ZERO,
        }
    }
}

fn underlying_graphs(n: usize, r: usize, source: &Source) -> Result<Vec<SignedGraph>, SearchError> {
    match source {
        Source::Generated => gen_regular(n, r),
        Source::Census(dir) => {
            let path = census_file(dir, n, r);
            let census = ingest_census(&path, n, r).map_err(|e| SearchError::Census(e.to_string()))?;
            Ok(census.graphs)
        }
    }
}

/// Classifies the connected `r`-regular, `rho` net-regular SRSGs on `n`
/// vertices, up to sign-preserving isomorphism.
pub fn classify(
    n: usize,
    r: usize,
    rho: i64,
    source: &Source,
    mode: Mode,
    budget: &Budget,
) -> Result<SearchReport, SearchError> {
    let k = negative_regularity(r, rho)?;
    if r >= n || n * r % 2 == 1 {
        return Err(SearchError::Parity { n, r });
    }
    let start = Instant::now();
    let mut report = match mode {
        Mode::Full => classify_full(n, r, rho, k, source, budget, start)?,
        Mode::Constrained(target) => {
            let mut report = SearchReport::empty(
                n,
                r,
                rho,
                format!("constrained{}", SrsgParams::new(n, r, target.a, target.b, target.c)),
                "constructed".into(),
            );
            let out = constrained::search(n, r, k, target, budget);
            report.node_count = out.nodes;
            report.signing_count = out.checked;
            report.incomplete = out.aborted;
            report.survivors = out
                .leaves
                .into_iter()
                .map(|f| {
                    let p = check_srsg(&f.to_graph()).expect("leaves are strongly regular");
                    Survivor::from_form(f, p)
                })
                .collect();
            report
        }
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn classify_full(
    n: usize,
    r: usize,
    rho: i64,
    k: usize,
    source: &Source,
    budget: &Budget,
    start: Instant,
) -> Result<SearchReport, SearchError> {
    let source_label = match source {
        Source::Generated => "generated".to_string(),
        Source::Census(dir) => format!("census:{}", census_file(dir, n, r).display()),
    };
    let mut report = SearchReport::empty(n, r, rho, "full".into(), source_label);
    let graphs = underlying_graphs(n, r, source)?;
    report.underlying_count = graphs.len();

    let signings = AtomicU64::new(0);
    let factors = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let mut found: Vec<(CanonicalForm, SrsgParams)> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            if stop.load(Ordering::Relaxed) {
                return Vec::new();
            }
            let (reps, total) = enumerate_negative_subgraphs(g, k);
            factors.fetch_add(total as u64, Ordering::Relaxed);
            let seen = signings.fetch_add(reps.len() as u64, Ordering::Relaxed) + reps.len() as u64;
            if budget.exceeded(seen, start) {
                stop.store(true, Ordering::Relaxed);
            }
            reps.iter()
                .filter_map(|f| {
                    let h = sign_by_factor(g, f);
                    check_srsg(&h).ok().map(|p| (canonical_form(&h), p))
                })
                .collect()
        })
        .collect();
    if stop.load(Ordering::Relaxed) {
        report.incomplete = Some(budget.describe(signings.load(Ordering::Relaxed), start));
    }
    found.sort();
    found.dedup_by(|x, y| x.0 == y.0);
    report.factor_count = factors.into_inner();
    report.signing_count = signings.into_inner();
    report.survivors = found.into_iter().map(|(f, p)| Survivor::from_form(f, p)).collect();
    Ok(report)
}

/// A `c = 0` family whose orders are unbounded; a search only covers the
/// orders it visited.
#[derive(Debug, Clone, Serialize)]
pub struct StratumNote {
    pub r: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub verified_up_to: usize,
    pub note: String,
}

/// Per-order reports for `n <= n_max`, plus the free-order families.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub r: usize,
    pub rho: i64,
    pub n_max: usize,
    pub reports: Vec<SearchReport>,
    pub strata: Vec<StratumNote>,
}

impl Classification {
    pub fn survivors(&self) -> impl Iterator<Item = &Survivor> {
        self.reports.iter().flat_map(|r| r.survivors.iter())
    }

    pub fn is_complete(&self) -> bool {
        self.reports.iter().all(|r| r.incomplete.is_none())
    }
}

#[derive(Debug, Clone)]
pub struct RangeOptions {
    pub source: Source,
    /// orders above this are searched in constrained mode
    pub full_max: usize,
    pub constrained: bool,
    /// explicit `(a, b, c)` for the constrained orders; otherwise every
    /// candidate tuple at that order
    pub target: Option<Target>,
    pub structural_filters: Vec<StructuralFilter>,
    pub budget: Budget,
}

impl Default for RangeOptions {
    fn default() -> Self {
        RangeOptions {
            source: Source::Generated,
            full_max: 12,
            constrained: false,
            target: None,
            structural_filters: Vec::new(),
            budget: Budget::default(),
        }
    }
}

/// Runs [`classify`] over every admissible order `r < n <= n_max`.
pub fn classify_range(r: usize, rho: i64, n_max: usize, opts: &RangeOptions) -> Result<Classification, SearchError> {
    negative_regularity(r, rho)?;
    let mut reports = Vec::new();
    let mut strata = Vec::new();
    let mut query = ParamQuery::new(r as i64, rho, n_max as i64);
    query.structural_filters = opts.structural_filters.clone();
    let candidates = enumerate_candidates(&query).unwrap_or_default();
    for cand in &candidates {
        if let Order::Free { .. } = cand.n {
            strata.push(StratumNote {
                r: cand.r,
                a: cand.a,
                b: cand.b,
                c: 0,
                verified_up_to: n_max,
                note: format!("verified up to n = {n_max}; the family is unbounded in n"),
            });
        }
    }

    for n in r + 1..=n_max {
        if n * r % 2 == 1 {
            continue;
        }
        if n <= opts.full_max || !opts.constrained {
            reports.push(classify(n, r, rho, &opts.source, Mode::Full, &opts.budget)?);
            continue;
        }
        let targets: Vec<Target> = match opts.target {
            Some(t) => vec![t],
            None => {
                let mut ts: Vec<Target> = candidates
                    .iter()
                    .filter(|c| c.materialize().iter().any(|&(m, _)| m == n as i64))
                    .map(|c| Target {
                        a: Some(c.a),
                        b: Some(c.b),
                        c: c.materialize().into_iter().find(|&(m, _)| m == n as i64).unwrap().1,
                    })
                    .collect();
                ts.dedup();
                ts
            }
        };
        for t in targets {
            reports.push(classify(n, r, rho, &opts.source, Mode::Constrained(t), &opts.budget)?);
        }
    }
    Ok(Classification {
        r,
        rho,
        n_max,
        reports,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_degree() {
        assert_eq!(negative_regularity(5, 3), Ok(1));
        assert_eq!(negative_regularity(5, 1), Ok(2));
        assert_eq!(negative_regularity(5, 5), Ok(0));
        assert_eq!(negative_regularity(4, 4), Ok(0));
        assert!(negative_regularity(5, 2).is_err());
        assert!(negative_regularity(5, 7).is_err());
    }

    #[test]
    fn complete_order_degree_five() {
        let none = Budget::default();
        let rep = classify(6, 5, 3, &Source::Generated, Mode::Full, &none).unwrap();
        assert_eq!(rep.survivors.len(), 1);
        assert_eq!(rep.survivors[0].params, SrsgParams::new(6, 5, Some(0), Some(4), None));
        let rep = classify(6, 5, 1, &Source::Generated, Mode::Full, &none).unwrap();
        assert_eq!(rep.signing_count, 2);
        assert_eq!(rep.survivors.len(), 1);
        assert_eq!(rep.survivors[0].params, SrsgParams::new(6, 5, Some(-4), Some(4), None));
    }

    #[test]
    fn budget_marks_report_incomplete() {
        let tight = Budget {
            max_nodes: Some(1),
            max_time: None,
        };
        let rep = classify(10, 5, 3, &Source::Generated, Mode::Full, &tight).unwrap();
        assert!(rep.incomplete.is_some());
    }
}
