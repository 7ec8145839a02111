use std::fmt;

use super::darts::DartIndex;
use super::Cycle;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTable};
use crate::mixed::{Hq, LinkKind};
use crate::plane::{LabeledGraph, PartLabel, VertexLabel};

/// Shapes a mixed 4-cycle in `H_q` could take, by the point/line pattern
/// around it and the parts involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FourCycleCase {
    /// Point, line, point, line: edges only.
    AlternatingEdges,
    /// Four vertices of one part: arcs only.
    DirectedWithinPart,
    /// One point followed by three lines of a single part.
    PointThreeLines,
    /// One line followed by three points of a single part.
    LineThreePoints,
    /// Two arc-adjacent points of some `P_y`, two arc-adjacent lines of some `L_b`.
    AffinePointsAffineLines,
    /// Two arc-adjacent points of some `P_y`, two arc-adjacent `L_x`.
    AffinePointsVerticalLines,
    /// Two arc-adjacent `P_m`, two arc-adjacent lines of some `L_b`.
    SlopePointsAffineLines,
    /// Anything the shapes above miss.
    Other,
}

impl FourCycleCase {
    pub const ALL: [FourCycleCase; 8] = [
        FourCycleCase::AlternatingEdges,
        FourCycleCase::DirectedWithinPart,
        FourCycleCase::PointThreeLines,
        FourCycleCase::LineThreePoints,
        FourCycleCase::AffinePointsAffineLines,
        FourCycleCase::AffinePointsVerticalLines,
        FourCycleCase::SlopePointsAffineLines,
        FourCycleCase::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FourCycleCase::AlternatingEdges => "alternating_edges",
            FourCycleCase::DirectedWithinPart => "directed_within_part",
            FourCycleCase::PointThreeLines => "point_three_lines",
            FourCycleCase::LineThreePoints => "line_three_points",
            FourCycleCase::AffinePointsAffineLines => "affine_points_affine_lines",
            FourCycleCase::AffinePointsVerticalLines => "affine_points_vertical_lines",
            FourCycleCase::SlopePointsAffineLines => "slope_points_affine_lines",
            FourCycleCase::Other => "other",
        }
    }
}

/// Per-case tallies. `candidates` counts simple 3-dart paths
/// `v0 -> v1 -> v2 -> v3` with `v0` the smallest vertex whose closing step
/// `v3 -> v0` the partition does not already forbid; `closed` counts the
/// distinct 4-cycles among them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseCount {
    pub case: FourCycleCase,
    pub candidates: u64,
    pub closed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCycleCensus {
    pub counts: Vec<CaseCount>,
    /// The first closed 4-cycles found, at most eight.
    pub examples: Vec<Cycle>,
}

impl FourCycleCensus {
    pub fn all_zero(&self) -> bool {
        self.counts.iter().all(|c| c.closed == 0)
    }

    pub fn total_closed(&self) -> u64 {
        self.counts.iter().map(|c| c.closed).sum()
    }
}

fn classify(lg: &LabeledGraph, parts: [PartLabel; 4], quad: [usize; 4]) -> FourCycleCase {
    let is_point = quad.map(|v| lg.label(v).is_point());
    let points = is_point.iter().filter(|&&p| p).count();
    match points {
        0 | 4 => FourCycleCase::DirectedWithinPart,
        1 => FourCycleCase::PointThreeLines,
        3 => FourCycleCase::LineThreePoints,
        _ if is_point[0] == is_point[2] => FourCycleCase::AlternatingEdges,
        _ => {
            let point_part = (0..4).find(|&i| is_point[i]).map(|i| parts[i]).unwrap();
            let line_part = (0..4).find(|&i| !is_point[i]).map(|i| parts[i]).unwrap();
            match (point_part, line_part) {
                (PartLabel::Points(_), PartLabel::Lines(_)) => {
                    FourCycleCase::AffinePointsAffineLines
                }
                (PartLabel::Points(_), PartLabel::LinesAtInfinity) => {
                    FourCycleCase::AffinePointsVerticalLines
                }
                (PartLabel::PointsAtInfinity, PartLabel::Lines(_)) => {
                    FourCycleCase::SlopePointsAffineLines
                }
                _ => FourCycleCase::Other,
            }
        }
    }
}

/// Whether a link between parts `a` and `b` is possible at all: arcs stay
/// inside a part and edges join a point part to a line part that is not one
/// of the unlinked pairs.
fn closable(a: PartLabel, b: PartLabel) -> bool {
    match (a.is_point_part(), b.is_point_part()) {
        (true, true) | (false, false) => a == b,
        (true, false) => !PartLabel::unlinked(a, b),
        (false, true) => !PartLabel::unlinked(b, a),
    }
}

/// Exhaustive census of mixed 4-cycles in `H_q`, split by shape.
pub fn count_mixed_4cycles_casewise(hq: &Hq) -> Result<FourCycleCensus> {
    let lg = &hq.labeled;
    let partition = lg.partition().ok_or(Error::MissingPartition)?;
    let darts = DartIndex::new(&lg.graph);
    let slot = |case: FourCycleCase| FourCycleCase::ALL.iter().position(|&c| c == case).unwrap();
    let mut counts: Vec<CaseCount> = FourCycleCase::ALL
        .iter()
        .map(|&case| CaseCount {
            case,
            candidates: 0,
            closed: 0,
        })
        .collect();
    let mut examples: Vec<Cycle> = Vec::new();

    for v0 in 0..lg.graph.n() {
        let p0 = partition.part_of(v0);
        for d1 in darts.out_ids(v0) {
            let v1 = darts.dart(d1).to;
            if v1 <= v0 {
                continue;
            }
            for d2 in darts.out_ids(v1) {
                let v2 = darts.dart(d2).to;
                if v2 <= v0 || v2 == v1 {
                    continue;
                }
                for d3 in darts.out_ids(v2) {
                    let v3 = darts.dart(d3).to;
                    if v3 <= v0 || v3 == v1 || v3 == v2 {
                        continue;
                    }
                    let p3 = partition.part_of(v3);
                    if !closable(p3, p0) {
                        continue;
                    }
                    let quad = [v0, v1, v2, v3];
                    let parts = quad.map(|v| partition.part_of(v));
                    let entry = &mut counts[slot(classify(lg, parts, quad))];
                    entry.candidates += 1;
                    let Some(d4) = darts.find(v3, v0) else {
                        continue;
                    };
                    let path = [d1, d2, d3, d4];
                    let kinds = path.map(|d| darts.dart(d).kind);
                    let all_edges = kinds.iter().all(|&k| k == LinkKind::Edge);
                    if all_edges && v1 > v3 {
                        continue;
                    }
                    entry.closed += 1;
                    if examples.len() < FourCycleCase::ALL.len() {
                        examples.push(Cycle {
                            vertices: quad.to_vec(),
                            kinds: kinds.to_vec(),
                        });
                    }
                }
            }
        }
    }
    Ok(FourCycleCensus { counts, examples })
}

/// Which way round the template realized a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `(x,y), [m,b], (x/xi,y'), (x,y'), L_x` in that order.
    AsWritten,
    Reversed,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::AsWritten => "as-written",
            Orientation::Reversed => "reversed",
        })
    }
}

/// A validated instance of the five-cycle template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exemplar {
    pub x: FieldElement,
    pub m: FieldElement,
    pub b: FieldElement,
    pub y: FieldElement,
    pub y_prime: FieldElement,
    pub orientation: Orientation,
    pub labels: [VertexLabel; 5],
    pub cycle: Cycle,
}

/// Orients each consecutive step of `seq` as an existing edge or forward
/// arc; `None` if some step has neither.
fn walk_kinds(lg: &LabeledGraph, seq: &[usize]) -> Option<Vec<LinkKind>> {
    let len = seq.len();
    (0..len)
        .map(|i| {
            let (u, v) = (seq[i], seq[(i + 1) % len]);
            if lg.graph.has_edge(u, v) {
                Some(LinkKind::Edge)
            } else if lg.graph.has_arc(u, v) {
                Some(LinkKind::Arc)
            } else {
                None
            }
        })
        .collect()
}

/// Instantiates the template `(x, y), [m, b], (x/xi, y'), (x, y'), L_x` with
/// `y = m x + b` and `y' = m x / xi + b`, scanning `x` and `m` over the
/// nonzero elements in exponent order and `b` in encoding order, and
/// returns the first instance whose five links exist in one of the two
/// orientations.
pub fn find_exemplar_5cycle(f: &FieldTable, hq: &Hq) -> Result<Exemplar> {
    use VertexLabel::*;
    let lg = &hq.labeled;
    for x in f.nonzero() {
        let x_over_xi = f.div(x, f.xi())?;
        for m in f.nonzero() {
            for b in f.elements() {
                let y = f.add(f.mul(m, x), b);
                let y_prime = f.add(f.mul(m, x_over_xi), b);
                let labels = [
                    AffinePoint { x, y },
                    AffineLine { m, b },
                    AffinePoint {
                        x: x_over_xi,
                        y: y_prime,
                    },
                    AffinePoint { x, y: y_prime },
                    VerticalLine(x),
                ];
                let Some(seq) = labels
                    .iter()
                    .map(|l| lg.index_of(l))
                    .collect::<Option<Vec<usize>>>()
                else {
                    continue;
                };
                for orientation in [Orientation::AsWritten, Orientation::Reversed] {
                    let mut vertices = seq.clone();
                    if orientation == Orientation::Reversed {
                        vertices.reverse();
                    }
                    let Some(kinds) = walk_kinds(lg, &vertices) else {
                        continue;
                    };
                    let cycle = Cycle { vertices, kinds };
                    if cycle.is_valid_in(&lg.graph) {
                        return Ok(Exemplar {
                            x,
                            m,
                            b,
                            y,
                            y_prime,
                            orientation,
                            labels,
                            cycle,
                        });
                    }
                }
            }
        }
    }
    Err(Error::TemplateInvalid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::mixed::build_hq;

    #[test]
    fn exemplar_for_seven() {
        let f = make_field(7).unwrap();
        let hq = build_hq(&f).unwrap();
        let ex = find_exemplar_5cycle(&f, &hq).unwrap();
        let one = FieldElement::ONE;
        let inv_xi = f.inv(f.xi()).unwrap();
        assert_eq!((ex.x, ex.m, ex.b), (one, one, FieldElement::ZERO));
        assert_eq!(
            ex.labels,
            [
                VertexLabel::AffinePoint { x: one, y: one },
                VertexLabel::AffineLine {
                    m: one,
                    b: FieldElement::ZERO
                },
                VertexLabel::AffinePoint {
                    x: inv_xi,
                    y: inv_xi
                },
                VertexLabel::AffinePoint { x: one, y: inv_xi },
                VertexLabel::VerticalLine(one),
            ]
        );
        assert_eq!(ex.orientation, Orientation::AsWritten);
        use LinkKind::*;
        assert_eq!(ex.cycle.kinds, vec![Edge, Edge, Arc, Edge, Edge]);
    }

    #[test]
    fn no_four_cycles_in_small_hq() {
        for q in [7, 8] {
            let f = make_field(q).unwrap();
            let hq = build_hq(&f).unwrap();
            let census = count_mixed_4cycles_casewise(&hq).unwrap();
            assert!(census.all_zero(), "q = {q}: {census:?}");
            assert!(census.examples.is_empty());
            let total: u64 = census.counts.iter().map(|c| c.candidates).sum();
            assert!(total > 0);
        }
    }

    #[test]
    fn census_detects_a_planted_four_cycle() {
        let f = make_field(7).unwrap();
        let mut hq = build_hq(&f).unwrap();
        let lg = &hq.labeled;
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        // (1,1) -- [1,0] -- (xi,xi) in G_7; add the edge (xi, xi) -- L_1.
        // Then (1,1) -- [1,0] -- (xi,xi) -- L_1 -- (1,1) is an edge 4-cycle.
        let a = lg
            .index_of(&VertexLabel::AffinePoint {
                x: f.xi(),
                y: f.xi(),
            })
            .unwrap();
        let b = lg.index_of(&VertexLabel::VerticalLine(one)).unwrap();
        let c = lg
            .index_of(&VertexLabel::AffineLine { m: one, b: zero })
            .unwrap();
        assert!(lg.graph.has_edge(a, c));
        hq.labeled.graph.add_edge(a, b).unwrap();
        let census = count_mixed_4cycles_casewise(&hq).unwrap();
        assert!(!census.all_zero());
        let alt = census
            .counts
            .iter()
            .find(|c| c.case == FourCycleCase::AlternatingEdges)
            .unwrap();
        assert!(alt.closed >= 1);
    }
}
