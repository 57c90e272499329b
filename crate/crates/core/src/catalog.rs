//! The seven connected net-regular SRSGs of degree 5.
//!
//! Five entries come from explicit constructions with fixed labellings. Two
//! (`S8_1`, `S10_1`) have no construction to transcribe; they were produced
//! once by a full classification run and frozen as `.sg` fixtures.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::feasibility::net_constraint_residual;
use crate::format::{parse_sg, write_sg, FormatError};
use crate::graph::{Sign, SignedGraph};
use crate::srsg::{
    check_srsg, classify_class, lemma2_check, matrix_identity_residual, negation_param_swap, CheckFailure, ClassLabel,
    Lemma2Precondition, ParityWitness, SrsgParams,
};

pub const NAMES: [&str; 7] = ["G1", "G2", "S8_1", "S10_1", "S10_2", "S10_3", "S12_1"];

const S8_1_SG: &str = include_str!("../fixtures/S8_1.sg");
const S10_1_SG: &str = include_str!("../fixtures/S10_1.sg");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Constructed {
        rule: &'static str,
    },
    SearchDerived {
        fixture: &'static str,
        produced_by: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: SignedGraph,
    pub expected: SrsgParams,
    pub expected_class: ClassLabel,
    pub provenance: Provenance,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("fixture for {name} not found at {path}; run `sgsr classify --r 5 --net 3 --nmax 10` and save the survivor with parameters {params}")]
    FixtureMissing {
        name: &'static str,
        path: PathBuf,
        params: SrsgParams,
    },
    #[error("fixture for {name}: {source}")]
    FixtureMalformed {
        name: &'static str,
        #[source]
        source: FormatError,
    },
    #[error("writing {path}: {source}")]
    Export {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn params(n: usize, a: i64, b: i64, c: Option<i64>) -> SrsgParams {
    SrsgParams::new(n, 5, Some(a), Some(b), c)
}

fn signed(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, negative: &[(usize, usize)]) -> SignedGraph {
    let list: Vec<(usize, usize, Sign)> = edges
        .into_iter()
        .map(|(u, v)| {
            let neg = negative.contains(&(u, v)) || negative.contains(&(v, u));
            (u, v, if neg { Sign::Neg } else { Sign::Pos })
        })
        .collect();
    SignedGraph::from_edge_list(n, &list).expect("catalog constructions are simple graphs")
}

fn clique(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

fn entry(name: &'static str, graph: SignedGraph, expected: SrsgParams, provenance: Provenance) -> CatalogEntry {
    CatalogEntry {
        name,
        graph,
        expected,
        expected_class: classify_class(&expected),
        provenance,
    }
}

/// K6 with a negative perfect matching.
pub fn g1() -> SignedGraph {
    signed(6, clique(&[0, 1, 2, 3, 4, 5]), &[(0, 1), (2, 3), (4, 5)])
}

/// K6 whose negative edges form two disjoint triangles.
pub fn g2() -> SignedGraph {
    let neg = [clique(&[0, 1, 2]), clique(&[3, 4, 5])].concat();
    signed(6, clique(&[0, 1, 2, 3, 4, 5]), &neg)
}

/// K6 whose negative edges form a hexagon. Not strongly regular.
pub fn k6_negative_hexagon() -> SignedGraph {
    signed(
        6,
        clique(&[0, 1, 2, 3, 4, 5]),
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
    )
}

/// K5,5 on {0..4} and {5..9}, with `i ~ i+5` negative.
pub fn s10_2() -> SignedGraph {
    let edges = (0..5).flat_map(|u| (5..10).map(move |v| (u, v)));
    let matching: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
    signed(10, edges, &matching)
}

/// Positive K5 on {0..4} and on {5..9}, joined by the negative matching `i ~ i+5`.
pub fn s10_3() -> SignedGraph {
    let matching: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
    let edges = [clique(&[0, 1, 2, 3, 4]), clique(&[5, 6, 7, 8, 9]), matching.clone()].concat();
    signed(10, edges, &matching)
}

/// Positive K4 on {0..3}, {4..7}, {8..11}, plus negative triangles `{i, i+4, i+8}`.
pub fn s12_1() -> SignedGraph {
    let triangles: Vec<_> = (0..4).flat_map(|i| clique(&[i, i + 4, i + 8])).collect();
    let edges = [
        clique(&[0, 1, 2, 3]),
        clique(&[4, 5, 6, 7]),
        clique(&[8, 9, 10, 11]),
        triangles.clone(),
    ]
    .concat();
    signed(12, edges, &triangles)
}

fn search_derived(name: &'static str, text: &str) -> Result<SignedGraph, CatalogError> {
    parse_sg(text).map_err(|source| CatalogError::FixtureMalformed { name, source })
}

fn assemble(s8: SignedGraph, s10: SignedGraph) -> Vec<CatalogEntry> {
    vec![
        entry(
            "G1",
            g1(),
            params(6, 0, 4, None),
            Provenance::Constructed {
                rule: "K6 with negative edges 01, 23, 45",
            },
        ),
        entry(
            "G2",
            g2(),
            params(6, -4, 4, None),
            Provenance::Constructed {
                rule: "K6 with negative triangles 012 and 345",
            },
        ),
        entry(
            "S8_1",
            s8,
            params(8, -2, 4, Some(4)),
            Provenance::SearchDerived {
                fixture: "S8_1.sg",
                produced_by: "classify --r 5 --net 3 --nmax 8, full mode",
            },
        ),
        entry(
            "S10_1",
            s10,
            params(10, -2, 4, Some(2)),
            Provenance::SearchDerived {
                fixture: "S10_1.sg",
                produced_by: "classify --r 5 --net 3 --nmax 10, full mode",
            },
        ),
        entry(
            "S10_2",
            s10_2(),
            params(10, 0, 0, Some(1)),
            Provenance::Constructed {
                rule: "K5,5 on 0-4 and 5-9, negative matching i ~ i+5",
            },
        ),
        entry(
            "S10_3",
            s10_3(),
            params(10, 3, 0, Some(-2)),
            Provenance::Constructed {
                rule: "positive K5 on 0-4 and 5-9, negative matching i ~ i+5",
            },
        ),
        entry(
            "S12_1",
            s12_1(),
            params(12, 2, 1, Some(-2)),
            Provenance::Constructed {
                rule: "positive K4 on 0-3, 4-7, 8-11, negative triangles {i, i+4, i+8}",
            },
        ),
    ]
}

/// The catalog with the search-derived fixtures compiled in.
pub fn build_catalog() -> Vec<CatalogEntry> {
    let s8 = search_derived("S8_1", S8_1_SG).expect("embedded fixture parses");
    let s10 = search_derived("S10_1", S10_1_SG).expect("embedded fixture parses");
    assemble(s8, s10)
}

/// The catalog with the search-derived fixtures read from `dir`.
pub fn build_catalog_from(dir: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let load = |name: &'static str, expected: SrsgParams| {
        let path = dir.join(format!("{name}.sg"));
        let text = fs::read_to_string(&path).map_err(|_| CatalogError::FixtureMissing {
            name,
            path: path.clone(),
            params: expected,
        })?;
        search_derived(name, &text)
    };
    let s8 = load("S8_1", params(8, -2, 4, Some(4)))?;
    let s10 = load("S10_1", params(10, -2, 4, Some(2)))?;
    Ok(assemble(s8, s10))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ParityOutcome {
    Holds,
    Violated { witness: ParityWitness },
    NotApplicable { reason: Lemma2Precondition },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: &'static str,
    pub expected: SrsgParams,
    pub found: Option<SrsgParams>,
    pub class: Option<ClassLabel>,
    pub check_failure: Option<CheckFailure>,
    pub connected: bool,
    pub parity: ParityOutcome,
    pub negation_swap: bool,
    pub net_residual: Option<i64>,
    pub matrix_residual: Option<i64>,
    /// names of other entries this one is isomorphic to
    pub isomorphic_to: Vec<&'static str>,
    pub passed: bool,
}

impl EntryReport {
    /// One-line summary of what went wrong, empty when passed.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(f) = &self.check_failure {
            out.push(format!("check_srsg failed: {:?} at {:?}", f.kind, f.witness));
        } else if self.found != Some(self.expected) {
            out.push(format!(
                "parameters {:?} differ from expected {}",
                self.found, self.expected
            ));
        }
        if !self.connected {
            out.push("disconnected".into());
        }
        if let ParityOutcome::Violated { witness } = &self.parity {
            out.push(format!("walk parity fails at {:?}", witness.pair));
        }
        if !self.negation_swap {
            out.push("negation does not swap a and b".into());
        }
        if self.net_residual.is_some_and(|r| r != 0) || self.matrix_residual.is_some_and(|r| r != 0) {
            out.push(format!(
                "nonzero residual: net {:?}, matrix {:?}",
                self.net_residual, self.matrix_residual
            ));
        }
        if !self.isomorphic_to.is_empty() {
            out.push(format!("isomorphic to {}", self.isomorphic_to.join(", ")));
        }
        out
    }
}

fn verify_entry(e: &CatalogEntry, all: &[CatalogEntry]) -> EntryReport {
    let g = &e.graph;
    let checked = check_srsg(g);
    let found = checked.ok();
    let parity = match lemma2_check(g) {
        Ok(None) => ParityOutcome::Holds,
        Ok(Some(witness)) => ParityOutcome::Violated { witness },
        Err(reason) => ParityOutcome::NotApplicable { reason },
    };
    let parity_required =
        matches!(e.expected_class, ClassLabel::C1 | ClassLabel::C4 | ClassLabel::C5) && e.expected.c.is_some();
    let net_residual = found.and_then(|p| {
        let rho = g.degrees().net_degree()?;
        Some(net_constraint_residual(
            p.n as i64,
            p.r as i64,
            rho,
            p.a.unwrap_or(0),
            p.b.unwrap_or(0),
            p.c.unwrap_or(0),
        ))
    });
    let matrix_residual = found.map(|p| matrix_identity_residual(g, &p));
    let negation_swap = negation_param_swap(g).unwrap_or(false);

    // only the search-derived entries need the distinctness check
    let form = canonical_form(g);
    let isomorphic_to = match e.provenance {
        Provenance::SearchDerived { .. } => all
            .iter()
            .filter(|o| o.name != e.name && canonical_form(&o.graph) == form)
            .map(|o| o.name)
            .collect(),
        Provenance::Constructed { .. } => Vec::new(),
    };

    let passed = found == Some(e.expected)
        && classify_class(&e.expected) == e.expected_class
        && g.is_connected()
        && (!parity_required || parity == ParityOutcome::Holds)
        && negation_swap
        && net_residual == Some(0)
        && matrix_residual == Some(0)
        && isomorphic_to.is_empty();
    EntryReport {
        name: e.name,
        expected: e.expected,
        found,
        class: found.map(|p| classify_class(&p)),
        check_failure: checked.err(),
        connected: g.is_connected(),
        parity,
        negation_swap,
        net_residual,
        matrix_residual,
        isomorphic_to,
        passed,
    }
}

/// Checks every entry against its expectations.
pub fn verify_catalog(entries: &[CatalogEntry]) -> Vec<EntryReport> {
    entries.iter().map(|e| verify_entry(e, entries)).collect()
}

#[derive(Serialize)]
struct Sidecar<'a> {
    name: &'a str,
    expected: SrsgParams,
    class: ClassLabel,
    provenance: &'a Provenance,
}

/// Writes `NAME.sg` and `NAME.json` for every entry; returns the paths written.
pub fn export_catalog(entries: &[CatalogEntry], dir: &Path) -> Result<Vec<PathBuf>, CatalogError> {
    let io = |path: &Path| {
        let path = path.to_owned();
        move |source| CatalogError::Export { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    for e in entries {
        let sg = dir.join(format!("{}.sg", e.name));
        fs::write(&sg, write_sg(&e.graph)).map_err(io(&sg))?;
        let sidecar = Sidecar {
            name: e.name,
            expected: e.expected,
            class: e.expected_class,
            provenance: &e.provenance,
        };
        let json = dir.join(format!("{}.json", e.name));
        let text = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
        fs::write(&json, text + "\n").map_err(io(&json))?;
        written.push(sg);
        written.push(json);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srsg::FailureKind;

    #[test]
    fn seven_entries_pass() {
        let cat = build_catalog();
        assert_eq!(cat.iter().map(|e| e.name).collect::<Vec<_>>(), NAMES);
        for r in verify_catalog(&cat) {
            assert!(r.passed, "{}: {:?}", r.name, r.diagnostics());
        }
    }

    #[test]
    fn expected_classes() {
        let classes: Vec<_> = build_catalog().iter().map(|e| e.expected_class).collect();
        use ClassLabel::*;
        assert_eq!(classes, [C3, C1, C5, C5, C1, C5, C5]);
    }

    #[test]
    fn hexagon_alternative_fails() {
        let err = check_srsg(&k6_negative_hexagon()).unwrap_err();
        assert_eq!(err.kind, FailureKind::PositivePairMismatch);
    }

    #[test]
    fn tampered_entry_fails_with_witness() {
        let mut cat = build_catalog();
        cat[6].graph.set_edge(0, 1, Some(Sign::Neg));
        let reports = verify_catalog(&cat);
        assert!(reports[..6].iter().all(|r| r.passed));
        let bad = &reports[6];
        assert!(!bad.passed);
        assert!(bad.check_failure.is_some_and(|f| f.witness.is_some()));
        assert!(!bad.diagnostics().is_empty());
    }

    #[test]
    fn duplicate_search_entry_is_flagged() {
        let mut cat = build_catalog();
        cat[3].graph = cat[5].graph.clone();
        cat[3].expected = cat[5].expected;
        cat[3].expected_class = cat[5].expected_class;
        let reports = verify_catalog(&cat);
        assert_eq!(reports[3].isomorphic_to, vec!["S10_3"]);
        assert!(!reports[3].passed);
    }

    #[test]
    fn missing_fixture_directory() {
        let err = build_catalog_from(Path::new("/nonexistent/fixtures")).unwrap_err();
        assert!(matches!(err, CatalogError::FixtureMissing { name: "S8_1", .. }));
        assert!(err.to_string().contains("classify"));
    }

    #[test]
    fn bipartite_entry_has_triangle_free_positive_pairs() {
        let g = s10_2();
        for (u, v, s) in g.edges() {
            if s == Sign::Pos {
                assert_eq!(g.neighbours(u) & g.neighbours(v), 0);
            }
        }
    }
}
