//! Incidence graphs of the Desarguesian plane PG(2, q) and of the type-L
//! elliptic semiplane obtained from it.
//!
//! Coordinates follow the affine chart: points `(x, y)`, lines `[m, b]`
//! meaning `y = m x + b`, the vertical lines `L_i` (`x = i`), the slope
//! points `P_i` where all lines of slope `i` meet, and the line and point at
//! infinity. The semiplane keeps only the elements whose first coordinate is
//! nonzero, which deletes the vertical line `x = 0` with its points and the
//! slope point `P_0` with its lines.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTable};
use crate::mixed::MixedGraph;

/// Identity of a vertex of the plane graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    AffinePoint {
        x: FieldElement,
        y: FieldElement,
    },
    AffineLine {
        m: FieldElement,
        b: FieldElement,
    },
    /// `L_i`, the line `x = i`.
    VerticalLine(FieldElement),
    /// `P_i`, the common point of the lines of slope `i`.
    SlopePoint(FieldElement),
    InfinityLine,
    InfinityPoint,
}

impl VertexLabel {
    pub fn is_point(self) -> bool {
        matches!(
            self,
            VertexLabel::AffinePoint { .. }
                | VertexLabel::SlopePoint(_)
                | VertexLabel::InfinityPoint
        )
    }

    pub fn is_line(self) -> bool {
        !self.is_point()
    }

    /// The part this vertex belongs to in the semiplane, if any.
    pub fn part(self) -> Option<PartLabel> {
        match self {
            VertexLabel::AffinePoint { y, .. } => Some(PartLabel::Points(y)),
            VertexLabel::AffineLine { b, .. } => Some(PartLabel::Lines(b)),
            VertexLabel::VerticalLine(_) => Some(PartLabel::LinesAtInfinity),
            VertexLabel::SlopePoint(_) => Some(PartLabel::PointsAtInfinity),
            VertexLabel::InfinityLine | VertexLabel::InfinityPoint => None,
        }
    }

    /// The coordinate that positions the vertex inside its part: `x` for
    /// affine points, `m` for affine lines, `i` for `L_i` and `P_i`.
    pub fn position(self) -> Option<FieldElement> {
        match self {
            VertexLabel::AffinePoint { x, .. } => Some(x),
            VertexLabel::AffineLine { m, .. } => Some(m),
            VertexLabel::VerticalLine(i) | VertexLabel::SlopePoint(i) => Some(i),
            VertexLabel::InfinityLine | VertexLabel::InfinityPoint => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::AffinePoint { x, y } => write!(f, "({x},{y})"),
            VertexLabel::AffineLine { m, b } => write!(f, "[{m},{b}]"),
            VertexLabel::VerticalLine(i) => write!(f, "L_{i}"),
            VertexLabel::SlopePoint(i) => write!(f, "P_{i}"),
            VertexLabel::InfinityLine => write!(f, "L_inf"),
            VertexLabel::InfinityPoint => write!(f, "P_inf"),
        }
    }
}

/// A part of the semiplane: `P_y`, `L_b`, `L_inf` or `P_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartLabel {
    Points(FieldElement),
    Lines(FieldElement),
    /// The vertical lines `L_i`, `i != 0`.
    LinesAtInfinity,
    /// The slope points `P_i`, `i != 0`.
    PointsAtInfinity,
}

impl PartLabel {
    pub fn is_point_part(self) -> bool {
        matches!(self, PartLabel::Points(_) | PartLabel::PointsAtInfinity)
    }

    /// Whether the incidence structure leaves this point part and line part
    /// without any edge between them. A point `(x, y)` meets the lines with
    /// intercept `b` only through slope `(y - b) / x`, which is zero when
    /// `b = y`; slope-zero lines are deleted.
    pub fn unlinked(points: PartLabel, lines: PartLabel) -> bool {
        match (points, lines) {
            (PartLabel::Points(y), PartLabel::Lines(b)) => y == b,
            (PartLabel::PointsAtInfinity, PartLabel::LinesAtInfinity) => true,
            _ => false,
        }
    }
}

impl fmt::Display for PartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartLabel::Points(y) => write!(f, "P_y={y}"),
            PartLabel::Lines(b) => write!(f, "L_b={b}"),
            PartLabel::LinesAtInfinity => write!(f, "L_inf"),
            PartLabel::PointsAtInfinity => write!(f, "P_inf"),
        }
    }
}

/// Part membership of every vertex, plus the members of each part in
/// exponent order of their position coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMap {
    part_of: Vec<PartLabel>,
    parts: Vec<(PartLabel, Vec<usize>)>,
}

impl PartitionMap {
    pub fn part_of(&self, v: usize) -> PartLabel {
        self.part_of[v]
    }

    /// Parts in canonical order with their members sorted by the exponent
    /// of the position coordinate.
    pub fn parts(&self) -> &[(PartLabel, Vec<usize>)] {
        &self.parts
    }

    pub fn members(&self, part: PartLabel) -> Option<&[usize]> {
        self.parts
            .iter()
            .find(|(p, _)| *p == part)
            .map(|(_, m)| m.as_slice())
    }
}

/// A graph together with its vertex labels and optional partition.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: MixedGraph,
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    partition: Option<PartitionMap>,
}

impl LabeledGraph {
    /// Panics if labels repeat or their count differs from the vertex count.
    pub fn new(graph: MixedGraph, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(graph.n(), labels.len(), "one label per vertex");
        let index: HashMap<_, _> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        assert_eq!(index.len(), labels.len(), "labels must be distinct");
        LabeledGraph {
            graph,
            labels,
            index,
            partition: None,
        }
    }

    /// Attaches the semiplane partition derived from the labels. Members of
    /// each part are ordered by `log_xi` of their position coordinate.
    pub fn with_partition(mut self, field: &FieldTable) -> Result<Self> {
        let mut part_of = Vec::with_capacity(self.labels.len());
        let mut parts: Vec<(PartLabel, Vec<(u32, usize)>)> = Vec::new();
        for (v, label) in self.labels.iter().enumerate() {
            let part = label.part().ok_or(Error::MissingPartition)?;
            let exponent = label
                .position()
                .and_then(|c| field.log(c))
                .ok_or(Error::MissingPartition)?;
            part_of.push(part);
            match parts.iter_mut().find(|(p, _)| *p == part) {
                Some((_, members)) => members.push((exponent, v)),
                None => parts.push((part, vec![(exponent, v)])),
            }
        }
        parts.sort_by_key(|(p, _)| *p);
        let parts = parts
            .into_iter()
            .map(|(p, mut members)| {
                members.sort_unstable();
                (p, members.into_iter().map(|(_, v)| v).collect())
            })
            .collect();
        self.partition = Some(PartitionMap { part_of, parts });
        Ok(self)
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn partition(&self) -> Option<&PartitionMap> {
        self.partition.as_ref()
    }
}

/// Incidence in PG(2, q) between a line label and a point label.
pub fn incident(f: &FieldTable, line: VertexLabel, point: VertexLabel) -> Result<bool> {
    use VertexLabel::*;
    if !line.is_line() || !point.is_point() {
        return Err(Error::KindMismatch);
    }
    Ok(match (line, point) {
        (AffineLine { m, b }, AffinePoint { x, y }) => f.add(f.mul(m, x), b) == y,
        (AffineLine { m, .. }, SlopePoint(i)) => m == i,
        (AffineLine { .. }, InfinityPoint) => false,
        (VerticalLine(i), AffinePoint { x, .. }) => x == i,
        (VerticalLine(_), SlopePoint(_)) => false,
        (VerticalLine(_), InfinityPoint) => true,
        (InfinityLine, AffinePoint { .. }) => false,
        (InfinityLine, SlopePoint(_) | InfinityPoint) => true,
        _ => unreachable!("kinds checked above"),
    })
}

/// The incidence graph of PG(2, q): order `2q^2 + 2q + 2`, `(q+1)`-regular.
///
/// Layout: affine points (outer `y`, inner `x`, both in encoding order),
/// affine lines (outer `b`, inner `m`), `L_i`, `P_i`, `L_inf`, `P_inf`.
pub fn build_pg2(f: &FieldTable) -> LabeledGraph {
    use VertexLabel::*;
    let mut labels = Vec::new();
    for y in f.elements() {
        for x in f.elements() {
            labels.push(AffinePoint { x, y });
        }
    }
    for b in f.elements() {
        for m in f.elements() {
            labels.push(AffineLine { m, b });
        }
    }
    labels.extend(f.elements().map(VerticalLine));
    labels.extend(f.elements().map(SlopePoint));
    labels.push(InfinityLine);
    labels.push(InfinityPoint);

    let mut lg = LabeledGraph::new(MixedGraph::new(labels.len()), labels);
    let mut link = |a: VertexLabel, b: VertexLabel| {
        let (u, v) = (lg.index[&a], lg.index[&b]);
        lg.graph.add_edge(u, v).expect("incidences are distinct");
    };
    for m in f.elements() {
        for b in f.elements() {
            let line = AffineLine { m, b };
            for x in f.elements() {
                link(
                    line,
                    AffinePoint {
                        x,
                        y: f.add(f.mul(m, x), b),
                    },
                );
            }
            link(line, SlopePoint(m));
        }
    }
    for i in f.elements() {
        for y in f.elements() {
            link(VerticalLine(i), AffinePoint { x: i, y });
        }
        link(VerticalLine(i), InfinityPoint);
        link(InfinityLine, SlopePoint(i));
    }
    link(InfinityLine, InfinityPoint);
    lg
}

/// Labels of the semiplane in canonical index order.
pub(crate) fn semiplane_labels(f: &FieldTable) -> Vec<VertexLabel> {
    use VertexLabel::*;
    let mut labels = Vec::with_capacity(2 * (f.order() as usize).pow(2) - 2);
    for y in f.elements() {
        labels.extend(f.nonzero().map(|x| AffinePoint { x, y }));
    }
    for b in f.elements() {
        labels.extend(f.nonzero().map(|m| AffineLine { m, b }));
    }
    labels.extend(f.nonzero().map(VerticalLine));
    labels.extend(f.nonzero().map(SlopePoint));
    labels
}

/// The type-L elliptic semiplane graph: order `2q^2 - 2`, `q`-regular,
/// girth 6, partitioned into `2(q+1)` parts of size `q - 1`.
///
/// Layout: affine points (outer `y` in encoding order, inner `x = xi^j` by
/// `j`), affine lines (outer `b`, inner `m = xi^j`), `L_{xi^j}`, `P_{xi^j}`.
pub fn build_semiplane(f: &FieldTable) -> Result<LabeledGraph> {
    use VertexLabel::*;
    if f.order() < 3 {
        return Err(Error::OutOfRange(format!(
            "the semiplane needs q >= 3, got {}",
            f.order()
        )));
    }
    let labels = semiplane_labels(f);
    let mut lg = LabeledGraph::new(MixedGraph::new(labels.len()), labels);
    for m in f.nonzero() {
        for b in f.elements() {
            let line = lg.index[&AffineLine { m, b }];
            for x in f.nonzero() {
                let point = lg.index[&AffinePoint {
                    x,
                    y: f.add(f.mul(m, x), b),
                }];
                lg.graph.add_edge(line, point)?;
            }
            let slope = lg.index[&SlopePoint(m)];
            lg.graph.add_edge(line, slope)?;
        }
    }
    for i in f.nonzero() {
        let vertical = lg.index[&VerticalLine(i)];
        for y in f.elements() {
            let point = lg.index[&AffinePoint { x: i, y }];
            lg.graph.add_edge(vertical, point)?;
        }
    }
    lg.with_partition(f)
}
