//! JSON certificates that bind a result to the graph it was computed for.
//!
//! Vertex ids in certificates are 1-based, matching the graph text format.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    pathwidth_bounds, product_search_bounds, search_number_bounds, BoundsReport, Provenance,
    Quantity,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::io::graph_hash;
use crate::pathdecomp::{validate_path_decomposition, PathDecomposition};
use crate::search::{validate_strategy, SearchAction, SearchStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum ActionRecord {
    Place { v: usize },
    Remove { v: usize },
    Move { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Certificate {
    PathDecomposition {
        graph_hash: String,
        bags: Vec<Vec<usize>>,
    },
    SearchStrategy {
        graph_hash: String,
        k: usize,
        actions: Vec<ActionRecord>,
    },
    Bounds {
        graph_hash: String,
        /// Present when the bounds were derived from two factor graphs.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factor_hashes: Option<[String; 2]>,
        quantity: Quantity,
        lower: usize,
        upper: usize,
        provenance: Vec<Provenance>,
    },
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// Width, searcher count, or the lower end of a bounds interval.
    pub value: usize,
    pub details: Vec<String>,
}

fn from_one_based(id: usize, n: usize) -> Result<VertexId> {
    if id == 0 || id > n {
        return Err(Error::Certificate(format!(
            "vertex {id} out of range 1..={n}"
        )));
    }
    Ok(id - 1)
}

impl ActionRecord {
    fn from_action(a: SearchAction) -> ActionRecord {
        match a {
            SearchAction::Place(v) => ActionRecord::Place { v: v + 1 },
            SearchAction::Remove(v) => ActionRecord::Remove { v: v + 1 },
            SearchAction::Move(u, v) => ActionRecord::Move { u: u + 1, v: v + 1 },
        }
    }

    fn to_action(self, n: usize) -> Result<SearchAction> {
        Ok(match self {
            ActionRecord::Place { v } => SearchAction::Place(from_one_based(v, n)?),
            ActionRecord::Remove { v } => SearchAction::Remove(from_one_based(v, n)?),
            ActionRecord::Move { u, v } => {
                SearchAction::Move(from_one_based(u, n)?, from_one_based(v, n)?)
            }
        })
    }
}

impl Certificate {
    pub fn path_decomposition(g: &Graph, d: &PathDecomposition) -> Certificate {
        Certificate::PathDecomposition {
            graph_hash: graph_hash(g),
            bags: d
                .bags()
                .iter()
                .map(|b| b.iter().map(|&v| v + 1).collect())
                .collect(),
        }
    }

    pub fn search_strategy(g: &Graph, s: &SearchStrategy) -> Certificate {
        Certificate::SearchStrategy {
            graph_hash: graph_hash(g),
            k: s.k,
            actions: s
                .actions
                .iter()
                .map(|&a| ActionRecord::from_action(a))
                .collect(),
        }
    }

    pub fn bounds(g: &Graph, report: &BoundsReport) -> Certificate {
        Certificate::Bounds {
            graph_hash: graph_hash(g),
            factor_hashes: None,
            quantity: report.quantity,
            lower: report.lower,
            upper: report.upper,
            provenance: report.provenance.clone(),
        }
    }

    /// Bounds on `s(g □ h)` computed from the two factors.
    pub fn product_bounds(g: &Graph, h: &Graph, report: &BoundsReport) -> Result<Certificate> {
        let product = Graph::cartesian_product(g, h)?;
        Ok(Certificate::Bounds {
            graph_hash: graph_hash(&product),
            factor_hashes: Some([graph_hash(g), graph_hash(h)]),
            quantity: report.quantity,
            lower: report.lower,
            upper: report.upper,
            provenance: report.provenance.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }

    pub fn graph_hash(&self) -> &str {
        match self {
            Certificate::PathDecomposition { graph_hash, .. }
            | Certificate::SearchStrategy { graph_hash, .. }
            | Certificate::Bounds { graph_hash, .. } => graph_hash,
        }
    }

    fn check_hash(&self, g: &Graph) -> Result<()> {
        let found = graph_hash(g);
        if found != self.graph_hash() {
            return Err(Error::StaleCertificate {
                expected: self.graph_hash().to_string(),
                found,
            });
        }
        Ok(())
    }

    /// Re-checks the certificate against `g`. A hash mismatch is an error;
    /// a certificate that does not hold is reported with `ok == false`.
    pub fn verify(&self, g: &Graph) -> Result<Verification> {
        self.check_hash(g)?;
        match self {
            Certificate::PathDecomposition { bags, .. } => verify_decomposition(g, bags),
            Certificate::SearchStrategy { k, actions, .. } => verify_strategy(g, *k, actions),
            Certificate::Bounds {
                factor_hashes: Some(_),
                ..
            } => Err(Error::Certificate(
                "bounds were derived from two factors; verify against both".into(),
            )),
            Certificate::Bounds { quantity, .. } => {
                let recomputed = match quantity {
                    Quantity::Pathwidth => pathwidth_bounds(g)?,
                    Quantity::SearchNumber => search_number_bounds(g)?,
                };
                Ok(compare_bounds(self, &recomputed))
            }
        }
    }

    /// Re-checks a bounds certificate emitted for the product of `g` and `h`.
    pub fn verify_product(&self, g: &Graph, h: &Graph) -> Result<Verification> {
        let Certificate::Bounds { factor_hashes, .. } = self else {
            return self.verify(&Graph::cartesian_product(g, h)?);
        };
        self.check_hash(&Graph::cartesian_product(g, h)?)?;
        let expected = [graph_hash(g), graph_hash(h)];
        match factor_hashes {
            Some(found) if *found == expected => {}
            Some(found) => {
                return Err(Error::StaleCertificate {
                    expected: found.join(","),
                    found: expected.join(","),
                })
            }
            None => {
                return Err(Error::Certificate(
                    "bounds certificate has no factor hashes".into(),
                ))
            }
        }
        Ok(compare_bounds(self, &product_search_bounds(g, h)?))
    }
}

fn verify_decomposition(g: &Graph, bags: &[Vec<usize>]) -> Result<Verification> {
    let n = g.vertex_count();
    let bags = bags
        .iter()
        .map(|b| b.iter().map(|&v| from_one_based(v, n)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    let d = PathDecomposition::new(bags)?;
    let report = validate_path_decomposition(g, &d)?;
    Ok(Verification {
        ok: report.is_valid(),
        value: d.width()?,
        details: report.violations.iter().map(|v| v.to_string()).collect(),
    })
}

fn verify_strategy(g: &Graph, k: usize, actions: &[ActionRecord]) -> Result<Verification> {
    let n = g.vertex_count();
    let actions = actions
        .iter()
        .map(|a| a.to_action(n))
        .collect::<Result<Vec<_>>>()?;
    let strat = SearchStrategy { k, actions };
    let report = match validate_strategy(g, &strat) {
        Ok(r) => r,
        Err(e @ Error::IllegalAction { .. }) => {
            return Ok(Verification {
                ok: false,
                value: k,
                details: vec![e.to_string()],
            })
        }
        Err(e) => return Err(e),
    };
    let mut details: Vec<String> = report
        .dirty_edges
        .iter()
        .map(|&(u, v)| format!("edge {}-{} is dirty after the last action", u + 1, v + 1))
        .collect();
    if report.success && !report.monotone {
        details.push(format!(
            "strategy recontaminates {} edge(s)",
            report.recontaminations
        ));
    }
    Ok(Verification {
        ok: report.success,
        value: k,
        details,
    })
}

fn compare_bounds(cert: &Certificate, recomputed: &BoundsReport) -> Verification {
    let Certificate::Bounds {
        quantity,
        lower,
        upper,
        provenance,
        ..
    } = cert
    else {
        unreachable!("only called on bounds certificates")
    };
    let mut details = Vec::new();
    let claimed = BoundsReport {
        quantity: *quantity,
        lower: *lower,
        upper: *upper,
        provenance: provenance.clone(),
    };
    if !claimed.is_consistent() {
        details.push("lower/upper do not match the provenance entries".to_string());
    }
    if claimed != *recomputed {
        details.push(format!(
            "recomputed interval [{}, {}] differs from certified [{}, {}]",
            recomputed.lower, recomputed.upper, lower, upper
        ));
    }
    Verification {
        ok: details.is_empty(),
        value: *lower,
        details,
    }
}
