//! Certified intervals for pathwidth and search number.
//!
//! Each rule that applies contributes a lower or an upper bound together
//! with its justification. The report keeps the largest lower bound and the
//! smallest upper bound; rules whose hypotheses do not hold abstain.

use serde::{Deserialize, Serialize};

use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::graph::{Factor, Graph};
use crate::pathdecomp::{build_clique_product_decomposition, pw_clique_product_formula};
use crate::search::{exact_search_number, search_number_formula, ProductFamily};
use crate::vsep::{pathwidth_exact, DEFAULT_MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Pathwidth,
    SearchNumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub value: usize,
    pub side: Side,
    /// Short rule identifier.
    pub rule: String,
    /// The inequality the rule applies.
    pub basis: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub quantity: Quantity,
    pub lower: usize,
    pub upper: usize,
    pub provenance: Vec<Provenance>,
}

impl BoundsReport {
    /// Recomputes `lower`/`upper` from the provenance entries and checks
    /// `lower <= upper`.
    pub fn from_entries(quantity: Quantity, provenance: Vec<Provenance>) -> Result<BoundsReport> {
        let lower = provenance
            .iter()
            .filter(|p| p.side == Side::Lower)
            .map(|p| p.value)
            .max()
            .ok_or_else(|| Error::domain("no lower bound applies"))?;
        let upper = provenance
            .iter()
            .filter(|p| p.side == Side::Upper)
            .map(|p| p.value)
            .min()
            .ok_or_else(|| Error::domain("no upper bound applies"))?;
        if lower > upper {
            return Err(Error::InconsistentBounds { lower, upper });
        }
        Ok(BoundsReport {
            quantity,
            lower,
            upper,
            provenance,
        })
    }

    /// True when `lower`/`upper` agree with the provenance entries.
    pub fn is_consistent(&self) -> bool {
        BoundsReport::from_entries(self.quantity, self.provenance.clone())
            .is_ok_and(|r| r.lower == self.lower && r.upper == self.upper)
    }

    pub fn contains(&self, value: usize) -> bool {
        (self.lower..=self.upper).contains(&value)
    }
}

#[derive(Default)]
struct Entries(Vec<Provenance>);

impl Entries {
    fn lower(&mut self, value: usize, rule: &str, basis: &str) {
        self.push(value, Side::Lower, rule, basis);
    }

    fn upper(&mut self, value: usize, rule: &str, basis: &str) {
        self.push(value, Side::Upper, rule, basis);
    }

    fn push(&mut self, value: usize, side: Side, rule: &str, basis: &str) {
        self.0.push(Provenance {
            value,
            side,
            rule: rule.into(),
            basis: basis.into(),
        });
    }

    fn finish(self, quantity: Quantity) -> Result<BoundsReport> {
        BoundsReport::from_entries(quantity, self.0)
    }
}

fn ordered(m: usize, n: usize) -> Result<(usize, usize)> {
    let (m, n) = (m.min(n), m.max(n));
    if m < 2 {
        return Err(Error::domain(format!(
            "clique products need both orders >= 2, got {m}"
        )));
    }
    Ok((m, n))
}

fn clique_product_entries(entries: &mut Entries, m: usize, n: usize) -> Result<()> {
    let (m, n) = ordered(m, n)?;
    let pw = pw_clique_product_formula(m, n)?;
    entries.lower(
        pw,
        "clique-product-pathwidth",
        "s(K_m □ K_n) >= pw(K_m □ K_n) = (m/2)n + m/2 - 1 (m even), ceil(m/2)n - 1 (m odd)",
    );
    entries.upper(
        pw + 2,
        "clique-product-pathwidth",
        "s(K_m □ K_n) <= pw(K_m □ K_n) + 2",
    );
    entries.upper(
        n * (m - 1) + 1,
        "clique-product-linear",
        "s(K_m □ K_n) <= n(m - 1) + 1",
    );
    if m == 2 && n >= 3 {
        entries.lower(
            n + 1,
            "clique-prism-exact",
            "s(K_n □ K_2) = n + 1 for n >= 3",
        );
        entries.upper(
            n + 1,
            "clique-prism-exact",
            "s(K_n □ K_2) = n + 1 for n >= 3",
        );
    }
    Ok(())
}

/// Search-number interval for `K_m □ K_n` (`2 <= m <= n`); the width is at
/// most two.
pub fn clique_product_search_bounds(m: usize, n: usize) -> Result<BoundsReport> {
    if m < 2 || m > n {
        return Err(Error::domain(format!(
            "clique product bounds need 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    let mut entries = Entries::default();
    clique_product_entries(&mut entries, m, n)?;
    entries.finish(Quantity::SearchNumber)
}

/// Lower bound on `s(G □ H)` driven by the clique numbers of the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub provenance: Vec<Provenance>,
}

/// Products of cliques this small are solved exactly.
const EXACT_CLIQUE_PRODUCT_VERTICES: usize = 9;

pub fn product_search_lower_bound(g: &Graph, h: &Graph) -> Result<LowerBound> {
    let wg = clique_number(g)?;
    let wh = clique_number(h)?;
    let (a, b) = (wg.min(wh), wg.max(wh));
    let mut entries = Entries::default();

    if a >= 2 {
        let pw = pw_clique_product_formula(a, b)?;
        entries.lower(
            pw,
            "clique-number-pathwidth",
            "s(G □ H) >= pw(K_ω(G) □ K_ω(H))",
        );
        if g.vertex_count().min(h.vertex_count()) >= 4 {
            entries.lower(
                pw,
                "clique-number-product",
                "|V(H)| >= |V(G)| >= 4: s(G □ H) >= (m/2)n + m/2 - 1 (m even), ceil(m/2)n - 1 (m odd), m <= n the clique numbers",
            );
        }
    }

    if a >= 2 && a * b <= EXACT_CLIQUE_PRODUCT_VERTICES {
        let core = Graph::cartesian_product(&Graph::complete(a)?, &Graph::complete(b)?)?;
        let (s, _) = exact_search_number(&core)?;
        entries.lower(
            s,
            "clique-minor-exact",
            "s(G □ H) >= s(K_ω(G) □ K_ω(H)), solved exactly",
        );
    }

    // s(G □ K_ω(H)) and s(K_ω(G) □ H) are only bounded below, by pathwidth.
    let minors = [
        (
            g,
            wh,
            "factor-clique-minor-left",
            "s(G □ H) >= s(G □ K_ω(H)) >= pw(G □ K_ω(H)), pathwidth solved exactly",
        ),
        (
            h,
            wg,
            "factor-clique-minor-right",
            "s(G □ H) >= s(K_ω(G) □ H) >= pw(K_ω(G) □ H), pathwidth solved exactly",
        ),
    ];
    for (f, w, rule, basis) in minors {
        if f.vertex_count() * w <= DEFAULT_MAX_VERTICES {
            let minor = Graph::cartesian_product(f, &Graph::complete(w)?)?;
            entries.lower(pathwidth_exact(&minor)?, rule, basis);
        }
    }

    let value = entries.0.iter().map(|p| p.value).max().unwrap_or(0);
    Ok(LowerBound {
        value,
        provenance: entries.0,
    })
}

/// `pw(G) <= s(G) <= pw(G) + 2` with the pathwidth solved exactly.
pub fn sandwich_bounds(g: &Graph) -> Result<BoundsReport> {
    let mut entries = Entries::default();
    sandwich_entries(&mut entries, g)?;
    entries.finish(Quantity::SearchNumber)
}

fn sandwich_entries(entries: &mut Entries, g: &Graph) -> Result<()> {
    let pw = pathwidth_exact(g)?;
    entries.lower(pw, "pathwidth-sandwich", "pw(G) <= s(G)");
    entries.upper(pw + 2, "pathwidth-sandwich", "s(G) <= pw(G) + 2");
    Ok(())
}

/// A graph is a path (in some vertex order) iff it is connected with
/// `n - 1` edges and no vertex of degree above two.
fn is_path_shaped(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 1 && g.edge_count() == n - 1 && g.is_connected() && (0..n).all(|v| g.degree(v) <= 2)
}

fn shape(g: &Graph) -> Factor {
    if g.is_complete() {
        Factor::Clique(g.vertex_count())
    } else if is_path_shaped(g) {
        Factor::Path(g.vertex_count())
    } else {
        Factor::Other(g.vertex_count())
    }
}

fn trivial_search_entries(entries: &mut Entries, order: usize, has_edges: bool) {
    entries.lower(
        usize::from(has_edges),
        "trivial",
        "a graph with an edge needs a searcher",
    );
    entries.upper(
        order + 1,
        "guard-every-vertex",
        "s(G) <= |V(G)| + 1: a guard on every vertex and one free searcher",
    );
}

/// Every applicable bound on `s(G □ H)`.
pub fn product_search_bounds(g: &Graph, h: &Graph) -> Result<BoundsReport> {
    let mut entries = Entries::default();
    let order = g.vertex_count() * h.vertex_count();
    let has_edges = g.edge_count() + h.edge_count() > 0 && order > 1;
    trivial_search_entries(&mut entries, order, has_edges);

    entries
        .0
        .extend(product_search_lower_bound(g, h)?.provenance);

    match (shape(g), shape(h)) {
        (Factor::Clique(m), Factor::Clique(n)) if m >= 2 && n >= 2 => {
            clique_product_entries(&mut entries, m, n)?;
        }
        (Factor::Path(m), Factor::Path(n)) if m >= 3 && n >= 3 => {
            let s = search_number_formula(ProductFamily::PathPath(m, n))?;
            entries.lower(
                s,
                "grid-search-number",
                "s(P_m □ P_n) = min(m, n) + 1 for m, n >= 3",
            );
            entries.upper(
                s,
                "grid-search-number",
                "s(P_m □ P_n) = min(m, n) + 1 for m, n >= 3",
            );
        }
        (Factor::Clique(m), Factor::Path(n)) | (Factor::Path(n), Factor::Clique(m))
            if m >= 3 && n >= 3 =>
        {
            let s = search_number_formula(ProductFamily::CliquePath(m, n))?;
            entries.lower(
                s,
                "clique-path-search-number",
                "s(K_m □ P_n) = m + 1 for m, n >= 3",
            );
            entries.upper(
                s,
                "clique-path-search-number",
                "s(K_m □ P_n) = m + 1 for m, n >= 3",
            );
        }
        _ => {}
    }

    for (f, p) in [(g, h), (h, g)] {
        if is_path_shaped(p) && p.vertex_count() >= 3 && f.is_connected() {
            entries.upper(
                f.vertex_count() + 1,
                "path-sweep",
                "s(G □ P_n) <= |V(G)| + 1 for connected G and n >= 3",
            );
        }
    }

    if order <= DEFAULT_MAX_VERTICES {
        sandwich_entries(&mut entries, &Graph::cartesian_product(g, h)?)?;
    }
    entries.finish(Quantity::SearchNumber)
}

/// Every applicable bound on `s(G)`. When `g` carries product coordinates
/// the product rules for its factors are included.
pub fn search_number_bounds(g: &Graph) -> Result<BoundsReport> {
    if let Some((left, right)) = g.factors() {
        if left.vertex_count() > 1 && right.vertex_count() > 1 {
            return product_search_bounds(&left, &right);
        }
    }
    let mut entries = Entries::default();
    trivial_search_entries(&mut entries, g.vertex_count(), g.edge_count() > 0);
    if g.components()
        .iter()
        .all(|c| c.len() <= DEFAULT_MAX_VERTICES)
    {
        sandwich_entries(&mut entries, g)?;
    }
    entries.finish(Quantity::SearchNumber)
}

/// Every applicable bound on `pw(G)`.
pub fn pathwidth_bounds(g: &Graph) -> Result<BoundsReport> {
    let mut entries = Entries::default();
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    entries.upper(n - 1, "single-bag", "pw(G) <= |V(G)| - 1");
    if let Ok(w) = clique_number(g) {
        entries.lower(
            w - 1,
            "clique-in-bag",
            "every clique lies in one bag: pw(G) >= ω(G) - 1",
        );
    }
    if let Some((left, right)) = g.factors() {
        if let (Factor::Clique(a), Factor::Clique(b)) = (shape(&left), shape(&right)) {
            if a >= 2 && b >= 2 {
                let (m, n) = ordered(a, b)?;
                let pw = pw_clique_product_formula(m, n)?;
                entries.lower(
                    pw,
                    "clique-product-pathwidth",
                    "pw(K_m □ K_n) = (m/2)n + m/2 - 1 (m even), ceil(m/2)n - 1 (m odd)",
                );
                let width = build_clique_product_decomposition(a, b)?.width()?;
                entries.upper(
                    width,
                    "clique-product-construction",
                    "width of the explicit decomposition",
                );
            }
        }
        if let (Factor::Path(a), Factor::Path(b)) = (shape(&left), shape(&right)) {
            let w = a.min(b);
            entries.lower(w, "grid-pathwidth", "pw(P_m □ P_n) = n for m >= n");
            entries.upper(w, "grid-pathwidth", "pw(P_m □ P_n) = n for m >= n");
        }
    }
    if g.components()
        .iter()
        .all(|c| c.len() <= DEFAULT_MAX_VERTICES)
    {
        let pw = pathwidth_exact(g)?;
        entries.lower(
            pw,
            "vertex-separation-exact",
            "pw(G) = vs(G), solved exactly",
        );
        entries.upper(
            pw,
            "vertex-separation-exact",
            "pw(G) = vs(G), solved exactly",
        );
    }
    entries.finish(Quantity::Pathwidth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(g: &Graph, h: &Graph) -> Graph {
        Graph::cartesian_product(g, h).unwrap()
    }

    #[test]
    fn clique_product_examples() {
        let r = clique_product_search_bounds(4, 4).unwrap();
        assert_eq!((r.lower, r.upper), (9, 11));
        let r = clique_product_search_bounds(3, 3).unwrap();
        assert_eq!((r.lower, r.upper), (5, 7));
        let r = clique_product_search_bounds(2, 9).unwrap();
        assert_eq!((r.lower, r.upper), (10, 10));
        // the pathwidth rule alone gives [9, 11]
        let cor: Vec<_> = r
            .provenance
            .iter()
            .filter(|p| p.rule == "clique-product-pathwidth")
            .map(|p| p.value)
            .collect();
        assert_eq!(cor, vec![9, 11]);
        assert!(r
            .provenance
            .iter()
            .any(|p| p.rule == "clique-product-linear" && p.value == 10));
        assert!(clique_product_search_bounds(3, 2).is_err());
    }

    #[test]
    fn clique_product_width_at_most_two() {
        for m in 2..=12 {
            for n in m..=12 {
                let r = clique_product_search_bounds(m, n).unwrap();
                assert!(r.upper - r.lower <= 2);
                assert!(r.upper <= n * (m - 1) + 1);
                assert!(r.is_consistent());
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        let g = Graph::complete(4).unwrap();
        let h = Graph::complete(5).unwrap();
        assert_eq!(product_search_lower_bound(&g, &h).unwrap().value, 11);

        let k3 = Graph::complete(3).unwrap();
        let lb = product_search_lower_bound(&k3, &k3).unwrap();
        assert!(lb
            .provenance
            .iter()
            .any(|p| p.rule == "clique-number-pathwidth" && p.value == 5));
        // |V| = 3 is below the size hypothesis
        assert!(!lb
            .provenance
            .iter()
            .any(|p| p.rule == "clique-number-product"));

        let p5 = Graph::path(5).unwrap();
        let lb = product_search_lower_bound(&p5, &p5).unwrap();
        let exact = lb
            .provenance
            .iter()
            .find(|p| p.rule == "clique-minor-exact")
            .unwrap();
        assert_eq!(exact.value, 2);
        assert!(lb.value >= 2);
    }

    #[test]
    fn sandwich_examples() {
        let k3 = Graph::complete(3).unwrap();
        let r = sandwich_bounds(&product(&k3, &k3)).unwrap();
        assert_eq!((r.lower, r.upper), (5, 7));
        let p3 = Graph::path(3).unwrap();
        let r = sandwich_bounds(&product(&p3, &p3)).unwrap();
        assert_eq!((r.lower, r.upper), (3, 5));
        let r = sandwich_bounds(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!((r.lower, r.upper), (1, 3));
    }

    #[test]
    fn product_bounds_pin_known_families() {
        let p = Graph::path(4).unwrap();
        let r = search_number_bounds(&product(&p, &p)).unwrap();
        assert_eq!((r.lower, r.upper), (5, 5));
        let k = Graph::complete(3).unwrap();
        let r = search_number_bounds(&product(&k, &p)).unwrap();
        assert_eq!((r.lower, r.upper), (4, 4));
        let r = search_number_bounds(&product(&p, &k)).unwrap();
        assert_eq!((r.lower, r.upper), (4, 4));
    }

    #[test]
    fn inconsistent_entries_are_rejected() {
        let entries = vec![
            Provenance {
                value: 5,
                side: Side::Lower,
                rule: "a".into(),
                basis: String::new(),
            },
            Provenance {
                value: 4,
                side: Side::Upper,
                rule: "b".into(),
                basis: String::new(),
            },
        ];
        assert_eq!(
            BoundsReport::from_entries(Quantity::SearchNumber, entries),
            Err(Error::InconsistentBounds { lower: 5, upper: 4 })
        );
    }

    #[test]
    fn pathwidth_bounds_for_clique_products() {
        let g = product(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap());
        let r = pathwidth_bounds(&g).unwrap();
        assert_eq!((r.lower, r.upper), (7, 7));
        let big = product(&Graph::complete(6).unwrap(), &Graph::complete(7).unwrap());
        let r = pathwidth_bounds(&big).unwrap();
        assert_eq!((r.lower, r.upper), (23, 23));
    }
}
