//! Mixed girth: an exact breadth-first engine, a brute-force cycle
//! enumerator used as its oracle, and the checks specific to `H_q`.

mod cases;
mod darts;
mod enumerate;
mod search;

use std::collections::HashSet;
use std::fmt;

use crate::mixed::{LinkKind, MixedGraph};

pub use cases::{
    count_mixed_4cycles_casewise, find_exemplar_5cycle, CaseCount, Exemplar, FourCycleCase,
    FourCycleCensus, Orientation,
};
pub use darts::{Dart, DartIndex};
pub use enumerate::{enumerate_short_cycles, ENUMERATION_LIMIT};
pub use search::{mixed_girth, Girth, GirthReport};

/// A cycle as a vertex sequence; `kinds[i]` is the link taken from
/// `vertices[i]` to `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub kinds: Vec<LinkKind>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the cycle against the graph directly: distinct vertices, at
    /// least two steps, each step an existing edge or a forward arc of the
    /// recorded kind, and no length-2 cycle over a single edge.
    pub fn is_valid_in(&self, g: &MixedGraph) -> bool {
        let len = self.len();
        if len < 2 || self.kinds.len() != len {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: HashSet<usize> = self.vertices.iter().copied().collect();
        if distinct.len() != len {
            return false;
        }
        if len == 2 && self.kinds.iter().all(|&k| k == LinkKind::Edge) {
            return false;
        }
        (0..len).all(|i| {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % len]);
            match self.kinds[i] {
                LinkKind::Edge => g.has_edge(u, v),
                LinkKind::Arc => g.has_arc(u, v),
            }
        })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, k) in self.vertices.iter().zip(&self.kinds) {
            let sep = match k {
                LinkKind::Edge => "--",
                LinkKind::Arc => "->",
            };
            write!(f, "{v} {sep} ")?;
        }
        match self.vertices.first() {
            Some(v) => write!(f, "{v}"),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity() {
        let mut g = MixedGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_arc(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        let good = Cycle {
            vertices: vec![0, 1, 2],
            kinds: vec![LinkKind::Edge, LinkKind::Arc, LinkKind::Edge],
        };
        assert!(good.is_valid_in(&g));
        assert_eq!(good.to_string(), "0 -- 1 -> 2 -- 0");

        let backwards = Cycle {
            vertices: vec![0, 2, 1],
            kinds: vec![LinkKind::Edge, LinkKind::Arc, LinkKind::Edge],
        };
        assert!(!backwards.is_valid_in(&g));

        let bounce = Cycle {
            vertices: vec![0, 1],
            kinds: vec![LinkKind::Edge, LinkKind::Edge],
        };
        assert!(!bounce.is_valid_in(&g));
    }
}
