use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Kind of a link between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkKind {
    Edge,
    Arc,
}

/// A simple mixed graph on vertices `0..n`.
///
/// Simplicity: no loops, at most one edge per unordered pair, at most one arc
/// per ordered pair, and never an edge together with an arc on the same pair.
/// Two antiparallel arcs are allowed. Insertions that would break any of this
/// fail with [`Error::SimplicityViolation`].
#[derive(Debug, Clone, Default)]
pub struct MixedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    edge_nbrs: Vec<Vec<usize>>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.arcs == other.arcs
    }
}

impl Eq for MixedGraph {}

/// In-degree, out-degree and edge degree of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexDegree {
    pub indeg: usize,
    pub outdeg: usize,
    pub edeg: usize,
}

/// Per-vertex degree triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile(pub Vec<VertexDegree>);

impl DegreeProfile {
    /// The common triple if every vertex shares it.
    pub fn uniform(&self) -> Option<VertexDegree> {
        let first = *self.0.first()?;
        self.0.iter().all(|d| *d == first).then_some(first)
    }
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            edges: BTreeSet::new(),
            arcs: BTreeSet::new(),
            out_arcs: vec![Vec::new(); n],
            in_arcs: vec![Vec::new(); n],
            edge_nbrs: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Arcs as `(tail, head)`, ascending.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn edge_neighbors(&self, v: usize) -> &[usize] {
        &self.edge_nbrs[v]
    }

    fn check_endpoints(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::IndexOutOfBounds {
                    index: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SimplicityViolation {
                u,
                v,
                reason: "loop",
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_endpoints(u, v)?;
        let violation = |reason| Error::SimplicityViolation { u, v, reason };
        if self.has_edge(u, v) {
            return Err(violation("duplicate edge"));
        }
        if self.has_arc(u, v) || self.has_arc(v, u) {
            return Err(violation("edge parallel to an arc"));
        }
        self.edges.insert((u.min(v), u.max(v)));
        self.edge_nbrs[u].push(v);
        self.edge_nbrs[v].push(u);
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_endpoints(u, v)?;
        let violation = |reason| Error::SimplicityViolation { u, v, reason };
        if self.has_arc(u, v) {
            return Err(violation("duplicate arc"));
        }
        if self.has_edge(u, v) {
            return Err(violation("arc parallel to an edge"));
        }
        self.arcs.insert((u, v));
        self.out_arcs[u].push(v);
        self.in_arcs[v].push(u);
        Ok(())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile(
            (0..self.n)
                .map(|v| VertexDegree {
                    indeg: self.in_arcs[v].len(),
                    outdeg: self.out_arcs[v].len(),
                    edeg: self.edge_nbrs[v].len(),
                })
                .collect(),
        )
    }

    /// The subgraph induced by `keep`, reindexed by ascending original index.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> Result<MixedGraph> {
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::IndexOutOfBounds {
                index: bad,
                n: self.n,
            });
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut sub = MixedGraph::new(keep.len());
        for (u, v) in self.edges() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                sub.add_edge(new_index[u], new_index[v])?;
            }
        }
        for (u, v) in self.arcs() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                sub.add_arc(new_index[u], new_index[v])?;
            }
        }
        Ok(sub)
    }

    /// Copy with only the undirected edges.
    pub fn underlying_edges(&self) -> MixedGraph {
        let mut g = MixedGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edges of a simple graph");
        }
        g
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<MixedGraph> {
        let mut g = MixedGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        for (u, v) in self.arcs() {
            g.add_arc(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Copy without the given arc.
    pub fn without_arc(&self, u: usize, v: usize) -> MixedGraph {
        let mut g = MixedGraph::new(self.n);
        for (a, b) in self.edges() {
            g.add_edge(a, b).expect("edges of a simple graph");
        }
        for (a, b) in self.arcs().filter(|&arc| arc != (u, v)) {
            g.add_arc(a, b).expect("arcs of a simple graph");
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MixedGraph {
        let mut g = MixedGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        g
    }

    #[test]
    fn simplicity_is_enforced() {
        let mut g = MixedGraph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(matches!(
            g.add_edge(1, 0),
            Err(Error::SimplicityViolation { .. })
        ));
        assert!(matches!(
            g.add_arc(1, 0),
            Err(Error::SimplicityViolation { .. })
        ));
        assert!(matches!(
            g.add_arc(2, 2),
            Err(Error::SimplicityViolation { reason: "loop", .. })
        ));
        assert_eq!(
            g.add_arc(0, 3),
            Err(Error::IndexOutOfBounds { index: 3, n: 3 })
        );
        g.add_arc(1, 2).unwrap();
        g.add_arc(2, 1).unwrap();
        assert!(g.add_arc(1, 2).is_err());
        assert!(g.add_edge(2, 1).is_err());
    }

    #[test]
    fn degree_profiles() {
        let mut cyc = MixedGraph::new(3);
        for v in 0..3 {
            cyc.add_arc(v, (v + 1) % 3).unwrap();
        }
        let one = VertexDegree {
            indeg: 1,
            outdeg: 1,
            edeg: 0,
        };
        assert_eq!(cyc.degree_profile().uniform(), Some(one));

        let mut e = MixedGraph::new(2);
        e.add_edge(0, 1).unwrap();
        let edge = VertexDegree {
            indeg: 0,
            outdeg: 0,
            edeg: 1,
        };
        assert_eq!(e.degree_profile().0, vec![edge, edge]);
    }

    #[test]
    fn induced_subgraphs() {
        let t = triangle();
        let all: BTreeSet<usize> = (0..3).collect();
        assert_eq!(t.induced_subgraph(&all).unwrap(), t);

        let two: BTreeSet<usize> = [0, 2].into_iter().collect();
        let sub = t.induced_subgraph(&two).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let bad: BTreeSet<usize> = [5].into_iter().collect();
        assert!(t.induced_subgraph(&bad).is_err());
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let mut a = MixedGraph::new(3);
        a.add_edge(0, 1).unwrap();
        a.add_arc(1, 2).unwrap();
        let mut b = MixedGraph::new(3);
        b.add_arc(1, 2).unwrap();
        b.add_edge(1, 0).unwrap();
        assert_eq!(a, b);
    }
}
