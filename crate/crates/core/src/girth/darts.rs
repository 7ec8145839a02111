use crate::mixed::{LinkKind, MixedGraph};

pub(crate) const NONE: u32 = u32::MAX;

/// One directed traversal of a link: one per arc, two per edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub from: usize,
    pub to: usize,
    /// Edges take ids `0..E` in ascending order, arcs `E..E+A`.
    pub link_id: usize,
    pub kind: LinkKind,
}

/// Darts of a graph, sorted by `(from, to)`, with per-vertex offsets.
#[derive(Debug, Clone)]
pub struct DartIndex {
    darts: Vec<Dart>,
    offsets: Vec<usize>,
    reverse: Vec<u32>,
}

impl DartIndex {
    pub fn new(g: &MixedGraph) -> Self {
        let edge_total = g.edge_count();
        let mut darts = Vec::with_capacity(2 * edge_total + g.arc_count());
        for (id, (u, v)) in g.edges().enumerate() {
            for (from, to) in [(u, v), (v, u)] {
                darts.push(Dart {
                    from,
                    to,
                    link_id: id,
                    kind: LinkKind::Edge,
                });
            }
        }
        for (id, (u, v)) in g.arcs().enumerate() {
            darts.push(Dart {
                from: u,
                to: v,
                link_id: edge_total + id,
                kind: LinkKind::Arc,
            });
        }
        darts.sort_unstable_by_key(|d| (d.from, d.to));

        let mut offsets = vec![0; g.n() + 1];
        for d in &darts {
            offsets[d.from + 1] += 1;
        }
        for v in 0..g.n() {
            offsets[v + 1] += offsets[v];
        }

        let mut index = DartIndex {
            darts,
            offsets,
            reverse: Vec::new(),
        };
        index.reverse = (0..index.darts.len())
            .map(|i| {
                let d = index.darts[i];
                match d.kind {
                    LinkKind::Edge => index.find(d.to, d.from).map_or(NONE, |r| r as u32),
                    LinkKind::Arc => NONE,
                }
            })
            .collect();
        index
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn dart(&self, id: usize) -> Dart {
        self.darts[id]
    }

    /// Dart ids leaving `v`, ascending by head.
    pub fn out_ids(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// The dart `from -> to`, if any. Simplicity makes it unique.
    pub fn find(&self, from: usize, to: usize) -> Option<usize> {
        let range = self.out_ids(from);
        let start = range.start;
        self.darts[range]
            .binary_search_by_key(&to, |d| d.to)
            .ok()
            .map(|i| start + i)
    }

    /// The opposite dart of an edge dart.
    pub fn reverse(&self, id: usize) -> Option<usize> {
        match self.reverse[id] {
            NONE => None,
            r => Some(r as usize),
        }
    }
}
