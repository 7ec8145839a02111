//! Certificates for the claimed properties of `H_q`.
//!
//! Every check carries a stable name so reports from different versions can
//! be diffed line by line. A failing check always carries a concrete
//! counterexample.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{make_field, prime_power};
use crate::girth::{count_mixed_4cycles_casewise, find_exemplar_5cycle, mixed_girth, Cycle, Girth};
use crate::mixed::{build_circulant_digraph, build_hq, Hq, MixedGraph, VertexDegree};
use crate::plane::{build_semiplane, LabeledGraph, PartLabel};

/// Girth searches inside [`verify_hq`] stop above this length.
pub const GIRTH_CUTOFF: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Vertex {
        index: usize,
        detail: String,
    },
    PartPair {
        points: PartLabel,
        lines: PartLabel,
        vertex: Option<usize>,
        detail: String,
    },
    Link {
        u: usize,
        v: usize,
        detail: String,
    },
    Cycle(Cycle),
    Text(String),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Vertex { index, detail } => write!(f, "vertex {index}: {detail}"),
            Counterexample::PartPair {
                points,
                lines,
                vertex,
                detail,
            } => {
                write!(f, "parts {points} / {lines}")?;
                if let Some(v) = vertex {
                    write!(f, " at vertex {v}")?;
                }
                write!(f, ": {detail}")
            }
            Counterexample::Link { u, v, detail } => write!(f, "link ({u}, {v}): {detail}"),
            Counterexample::Cycle(c) => write!(f, "cycle {c}"),
            Counterexample::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub claim: String,
    pub observed: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn pass(name: &'static str, claim: impl Into<String>, observed: impl Into<String>) -> Self {
        Check {
            name,
            claim: claim.into(),
            observed: observed.into(),
            passed: true,
            counterexample: None,
        }
    }

    fn fail(
        name: &'static str,
        claim: impl Into<String>,
        observed: impl Into<String>,
        counterexample: Counterexample,
    ) -> Self {
        Check {
            name,
            claim: claim.into(),
            observed: observed.into(),
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `CHECK <name> <PASS|FAIL> <observed>` per check, then `OVERALL`.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("CHECK {} {} {}\n", c.name, verdict, c.observed));
        }
        let verdict = if self.overall() { "PASS" } else { "FAIL" };
        out.push_str(&format!("OVERALL {verdict}\n"));
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.title);
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{verdict}] {}\n", c.name));
            out.push_str(&format!("    claim:    {}\n", c.claim));
            out.push_str(&format!("    observed: {}\n", c.observed));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("    counterexample: {ce}\n"));
            }
        }
        let verdict = if self.overall() { "PASS" } else { "FAIL" };
        out.push_str(&format!("overall: {verdict}\n"));
        out
    }
}

/// Known lower and upper bounds on `n[z, q; 5]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: u64,
    pub upper: u64,
}

/// `(q^2 + q + 4z + 1, 2q^2 - 2)`.
pub fn bounds(q: u64, z: u64) -> Result<BoundPair> {
    if q < 7 || prime_power(q).is_none() {
        return Err(Error::OutOfRange(format!(
            "bounds need a prime power q >= 7, got {q}"
        )));
    }
    if z == 0 {
        return Err(Error::OutOfRange("bounds need z >= 1".into()));
    }
    Ok(BoundPair {
        lower: q * q + q + 4 * z + 1,
        upper: 2 * q * q - 2,
    })
}

/// Every vertex has `z` in-arcs, `z` out-arcs and `r` edges.
pub fn check_total_regularity(g: &MixedGraph, z: usize, r: usize) -> Check {
    let want = VertexDegree {
        indeg: z,
        outdeg: z,
        edeg: r,
    };
    let claim = format!("every vertex has profile ({z},{z},{r})");
    let profile = g.degree_profile();
    match profile.0.iter().position(|d| *d != want) {
        None => Check::pass("total_regularity", claim, format!("({z},{z},{r})")),
        Some(v) => {
            let d = profile.0[v];
            Check::fail(
                "total_regularity",
                claim,
                format!("vertex {v} has ({},{},{})", d.indeg, d.outdeg, d.edeg),
                Counterexample::Vertex {
                    index: v,
                    detail: format!("profile ({},{},{})", d.indeg, d.outdeg, d.edeg),
                },
            )
        }
    }
}

/// Audits simplicity from the link lists alone.
pub fn check_simplicity(g: &MixedGraph) -> Check {
    let claim = "no loops, no repeated links, no edge parallel to an arc";
    let fail = |u, v, detail: &str| {
        Check::fail(
            "simplicity",
            claim,
            detail.to_string(),
            Counterexample::Link {
                u,
                v,
                detail: detail.into(),
            },
        )
    };
    for (u, v) in g.edges().chain(g.arcs()) {
        if u == v {
            return fail(u, v, "loop");
        }
    }
    for (u, v) in g.edges() {
        if g.has_arc(u, v) || g.has_arc(v, u) {
            return fail(u, v, "edge parallel to an arc");
        }
    }
    Check::pass(
        "simplicity",
        claim,
        format!("{} edges, {} arcs", g.edge_count(), g.arc_count()),
    )
}

/// Between every point part and line part the edges form a perfect
/// matching, except for the unlinked pairs `(P_y, L_y)` and
/// `(P_inf, L_inf)`, which span no edge.
pub fn check_part_matchings(lg: &LabeledGraph) -> Result<Check> {
    let partition = lg.partition().ok_or(Error::MissingPartition)?;
    let claim = "perfect matching between P_y and L_b (y != b), P_y and L_inf, P_inf and L_b; \
                 no edge between P_y and L_y or between P_inf and L_inf";
    let point_parts: Vec<_> = partition
        .parts()
        .iter()
        .filter(|(p, _)| p.is_point_part())
        .collect();
    let line_parts: Vec<_> = partition
        .parts()
        .iter()
        .filter(|(p, _)| !p.is_point_part())
        .collect();

    let (mut matched, mut empty) = (0usize, 0usize);
    for (pp, pmembers) in &point_parts {
        for (lp, lmembers) in &line_parts {
            let expect = if PartLabel::unlinked(*pp, *lp) { 0 } else { 1 };
            let sides = [(pmembers, *lp), (lmembers, *pp)];
            for (members, other) in sides {
                for &v in members.iter() {
                    let cross = lg
                        .graph
                        .edge_neighbors(v)
                        .iter()
                        .filter(|&&w| partition.part_of(w) == other)
                        .count();
                    if cross != expect {
                        return Ok(Check::fail(
                            "part_matchings",
                            claim,
                            format!("{pp} / {lp}: vertex {v} has {cross} cross edges"),
                            Counterexample::PartPair {
                                points: *pp,
                                lines: *lp,
                                vertex: Some(v),
                                detail: format!("expected {expect} cross edges, found {cross}"),
                            },
                        ));
                    }
                }
            }
            if expect == 1 {
                matched += 1;
            } else {
                empty += 1;
            }
        }
    }
    Ok(Check::pass(
        "part_matchings",
        claim,
        format!("{matched} matched pairs, {empty} empty pairs"),
    ))
}

/// Arcs stay inside parts and, in exponent coordinates, each part carries
/// exactly `C_{q-1}(1..k)` (point parts `P_y` and `L_inf`) or its reverse
/// (line parts `L_b` and `P_inf`).
pub fn check_part_circulants(hq: &Hq) -> Result<Check> {
    let lg = &hq.labeled;
    let partition = lg.partition().ok_or(Error::MissingPartition)?;
    let (q, k) = (hq.params.q, hq.params.k);
    let size = q - 1;
    let claim =
        format!("each part carries C_{size}(1..{k}) or its reverse, and no arc leaves a part");

    let mut position = vec![usize::MAX; lg.graph.n()];
    for (_, members) in partition.parts() {
        for (j, &v) in members.iter().enumerate() {
            position[v] = j;
        }
    }
    let mut per_part: HashMap<PartLabel, BTreeSet<(usize, usize)>> = HashMap::new();
    for (u, v) in lg.graph.arcs() {
        let part = partition.part_of(u);
        if partition.part_of(v) != part {
            return Ok(Check::fail(
                "part_circulants",
                claim,
                format!("arc ({u}, {v}) crosses parts"),
                Counterexample::Link {
                    u,
                    v,
                    detail: format!("{part} -> {}", partition.part_of(v)),
                },
            ));
        }
        per_part
            .entry(part)
            .or_default()
            .insert((position[u], position[v]));
    }

    let forward: Vec<usize> = (1..=k).collect();
    let backward: Vec<usize> = (1..=k).map(|i| size - i).collect();
    let expected_forward: BTreeSet<_> = build_circulant_digraph(size, &forward)?.arcs().collect();
    let expected_backward: BTreeSet<_> = build_circulant_digraph(size, &backward)?.arcs().collect();

    for (part, _) in partition.parts() {
        let expected = match part {
            PartLabel::Points(_) | PartLabel::LinesAtInfinity => &expected_forward,
            PartLabel::Lines(_) | PartLabel::PointsAtInfinity => &expected_backward,
        };
        let got = per_part.remove(part).unwrap_or_default();
        if &got != expected {
            let detail = match got.symmetric_difference(expected).next() {
                Some(&(a, b)) => format!("exponent arc {a} -> {b} differs"),
                None => "arc sets differ".into(),
            };
            return Ok(Check::fail(
                "part_circulants",
                claim,
                format!("part {part} is not the expected circulant"),
                Counterexample::Text(format!("part {part}: {detail}")),
            ));
        }
    }
    Ok(Check::pass(
        "part_circulants",
        claim,
        format!("{} parts match", partition.parts().len()),
    ))
}

/// Largest BFS eccentricity over an edge-only graph; `None` if the graph
/// is disconnected.
pub fn diameter_undirected(g: &MixedGraph) -> Result<Option<usize>> {
    if g.arc_count() > 0 {
        return Err(Error::HasArcs);
    }
    let n = g.n();
    let mut diameter = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in g.edge_neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    diameter = diameter.max(dist[w]);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Ok(None);
        }
    }
    Ok(Some(diameter))
}

/// Builds `H_q` and runs every check on it.
pub fn verify_hq(q: u64) -> Result<VerificationReport> {
    if q < 7 {
        return Err(Error::OutOfRange(format!(
            "the construction needs q >= 7, got {q}"
        )));
    }
    let field = make_field(q)?;
    let hq = build_hq(&field)?;
    let (k, r) = (hq.params.k, hq.params.r);
    let g = &hq.labeled.graph;
    let qs = q as usize;
    let mut checks = Vec::new();

    let order = 2 * qs * qs - 2;
    checks.push(if g.n() == order {
        Check::pass(
            "order",
            format!("order 2q^2-2 = {order}"),
            g.n().to_string(),
        )
    } else {
        Check::fail(
            "order",
            format!("order 2q^2-2 = {order}"),
            g.n().to_string(),
            Counterexample::Text(format!("{} vertices", g.n())),
        )
    });

    checks.push(check_simplicity(g));
    checks.push(check_total_regularity(g, k, qs));
    checks.push(check_part_circulants(&hq)?);
    checks.push(check_part_matchings(&hq.labeled)?);

    let semiplane = build_semiplane(&field)?;
    let underlying = g.underlying_edges();
    checks.push(if underlying == semiplane.graph {
        Check::pass(
            "edges_equal_semiplane",
            "the edges of H_q are exactly the semiplane incidences",
            format!("{} edges", underlying.edge_count()),
        )
    } else {
        let stray = underlying
            .edges()
            .find(|&(u, v)| !semiplane.graph.has_edge(u, v))
            .or_else(|| semiplane.graph.edges().find(|&(u, v)| !g.has_edge(u, v)))
            .unwrap_or((0, 0));
        Check::fail(
            "edges_equal_semiplane",
            "the edges of H_q are exactly the semiplane incidences",
            "edge sets differ",
            Counterexample::Link {
                u: stray.0,
                v: stray.1,
                detail: "edge in one graph only".into(),
            },
        )
    });

    let report = mixed_girth(g, Some(GIRTH_CUTOFF));
    let girth_claim = "mixed girth exactly 5 with a valid witness";
    checks.push(match (report.girth, &report.witness) {
        (Girth::Finite(5), Some(w)) if w.is_valid_in(g) && w.len() == 5 => {
            Check::pass("mixed_girth", girth_claim, "5")
        }
        (girth, Some(w)) => Check::fail(
            "mixed_girth",
            girth_claim,
            girth.to_string(),
            Counterexample::Cycle(w.clone()),
        ),
        (girth, None) => Check::fail(
            "mixed_girth",
            girth_claim,
            format!("{girth}"),
            Counterexample::Text(format!("no cycle of length <= {GIRTH_CUTOFF}")),
        ),
    });

    let census = count_mixed_4cycles_casewise(&hq)?;
    let tallies = census
        .counts
        .iter()
        .map(|c| format!("{}={}/{}", c.case.name(), c.closed, c.candidates))
        .collect::<Vec<_>>()
        .join(" ");
    let census_claim = "no mixed 4-cycle in any case of the taxonomy";
    checks.push(if census.all_zero() {
        Check::pass("four_cycle_cases", census_claim, tallies)
    } else {
        Check::fail(
            "four_cycle_cases",
            census_claim,
            tallies,
            Counterexample::Cycle(census.examples[0].clone()),
        )
    });

    let exemplar_claim = "the template (x,y),[m,b],(x/xi,y'),(x,y'),L_x closes a 5-cycle";
    checks.push(match find_exemplar_5cycle(&field, &hq) {
        Ok(ex) => Check::pass(
            "exemplar_five_cycle",
            exemplar_claim,
            format!(
                "x={} m={} b={} {} {}",
                ex.x, ex.m, ex.b, ex.orientation, ex.cycle
            ),
        ),
        Err(e) => Check::fail(
            "exemplar_five_cycle",
            exemplar_claim,
            "none",
            Counterexample::Text(e.to_string()),
        ),
    });

    let bp = bounds(q, k as u64)?;
    let bounds_claim = "q^2+q+4k+1 <= 2q^2-2 = order";
    let observed = format!("{} <= {}", bp.lower, bp.upper);
    checks.push(if bp.lower <= bp.upper && bp.upper == g.n() as u64 {
        Check::pass("bounds", bounds_claim, observed)
    } else {
        Check::fail(
            "bounds",
            bounds_claim,
            observed.clone(),
            Counterexample::Text(observed),
        )
    });

    Ok(VerificationReport {
        title: format!("H_{q}: q={q} k={k} R={r} xi={}", field.xi()),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::plane::build_pg2;

    #[test]
    fn bounds_values() {
        assert_eq!(
            bounds(7, 1).unwrap(),
            BoundPair {
                lower: 61,
                upper: 96
            }
        );
        assert_eq!(
            bounds(8, 1).unwrap(),
            BoundPair {
                lower: 77,
                upper: 126
            }
        );
        assert_eq!(
            bounds(11, 2).unwrap(),
            BoundPair {
                lower: 141,
                upper: 240
            }
        );
        assert!(bounds(6, 1).is_err());
        assert!(bounds(5, 1).is_err());
        assert!(bounds(7, 0).is_err());
    }

    #[test]
    fn regularity_of_a_directed_triangle() {
        let g = build_circulant_digraph(3, &[1]).unwrap();
        assert!(check_total_regularity(&g, 1, 0).passed);
        let bad = check_total_regularity(&g, 1, 1);
        assert!(!bad.passed);
        assert!(matches!(
            bad.counterexample,
            Some(Counterexample::Vertex { index: 0, .. })
        ));
    }

    #[test]
    fn matchings_on_semiplanes() {
        let f = make_field(7).unwrap();
        let lg = build_semiplane(&f).unwrap();
        let check = check_part_matchings(&lg).unwrap();
        assert!(check.passed, "{check:?}");
        assert_eq!(check.observed, "56 matched pairs, 8 empty pairs");
        assert_eq!(
            check_part_matchings(&build_pg2(&f)).unwrap_err(),
            Error::MissingPartition
        );
    }

    #[test]
    fn matching_mutant_is_caught() {
        let f = make_field(7).unwrap();
        let lg = build_semiplane(&f).unwrap();
        let (u, v) = lg.graph.edges().next().unwrap();
        let mut g = MixedGraph::new(lg.graph.n());
        for (a, b) in lg.graph.edges().filter(|&e| e != (u, v)) {
            g.add_edge(a, b).unwrap();
        }
        let mutant = LabeledGraph::new(g, lg.labels().to_vec())
            .with_partition(&f)
            .unwrap();
        let check = check_part_matchings(&mutant).unwrap();
        assert!(!check.passed);
        let Some(Counterexample::PartPair { points, lines, .. }) = check.counterexample else {
            panic!("expected a part pair");
        };
        let partition = lg.partition().unwrap();
        let (pu, pv) = (partition.part_of(u), partition.part_of(v));
        let pair = if pu.is_point_part() {
            (pu, pv)
        } else {
            (pv, pu)
        };
        assert_eq!((points, lines), pair);
    }

    #[test]
    fn diameters() {
        let mut e = MixedGraph::new(2);
        e.add_edge(0, 1).unwrap();
        assert_eq!(diameter_undirected(&e).unwrap(), Some(1));
        assert_eq!(diameter_undirected(&MixedGraph::new(2)).unwrap(), None);
        let mut a = MixedGraph::new(2);
        a.add_arc(0, 1).unwrap();
        assert_eq!(diameter_undirected(&a), Err(Error::HasArcs));
    }

    #[test]
    fn simplicity_audit_passes_on_digons() {
        let mut g = MixedGraph::new(2);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 0).unwrap();
        assert!(check_simplicity(&g).passed);
    }

    #[test]
    fn verify_small_cases() {
        let report = verify_hq(7).unwrap();
        assert!(report.overall(), "{}", report.render_text());
        assert!(matches!(verify_hq(6), Err(Error::OutOfRange(_))));
        assert_eq!(verify_hq(10).unwrap_err(), Error::NotAPrimePower(10));
    }
}
