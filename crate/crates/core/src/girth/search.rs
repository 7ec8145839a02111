use std::collections::VecDeque;
use std::fmt;

use super::darts::{DartIndex, NONE};
use super::Cycle;
use crate::mixed::MixedGraph;

/// Outcome of a girth query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    /// No cycle at all.
    Infinite,
    /// No cycle of length at most the given cutoff.
    AboveCutoff(usize),
}

impl Girth {
    pub fn value(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
            Girth::AboveCutoff(c) => write!(f, ">{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthReport {
    pub girth: Girth,
    /// A shortest cycle, present when the girth is finite.
    pub witness: Option<Cycle>,
}

/// Exact mixed girth.
///
/// A cycle is a closed dart walk with pairwise distinct vertices and length
/// at least 2, where a length-2 cycle must use two different links. Every
/// cycle is a closed walk that never turns straight back along the edge it
/// arrived on (including across the closing step), and conversely the
/// shortest such walk is a cycle, so it suffices to search those walks.
///
/// Each start dart `u -> v` runs a breadth-first search over darts (the
/// state is the last dart taken) that never reverses an edge and only visits
/// vertices above `u`; every cycle is found from the dart leaving its
/// smallest vertex. Start darts are tried in `(from, to)` order and later
/// searches only look for strictly shorter cycles, so the witness is the
/// cycle through the lexicographically smallest start dart.
///
/// With a cutoff, only cycles of length at most `cutoff` are searched for.
pub fn mixed_girth(g: &MixedGraph, cutoff: Option<usize>) -> GirthReport {
    let darts = DartIndex::new(g);
    // Search for cycles strictly shorter than `bound`.
    let mut bound = cutoff.map_or(usize::MAX, |c| c.saturating_add(1));
    let mut best: Option<Vec<usize>> = None;

    let mut stamp = vec![0u32; darts.len()];
    let mut parent = vec![NONE; darts.len()];
    let mut queue = VecDeque::new();

    for root in 0..darts.len() {
        if bound <= 2 {
            break;
        }
        let r = darts.dart(root);
        let u = r.from;
        if r.to < u {
            continue;
        }
        let generation = root as u32 + 1;
        stamp[root] = generation;
        parent[root] = NONE;
        queue.clear();
        queue.push_back((root, 1usize));

        while let Some((s, depth)) = queue.pop_front() {
            let v = darts.dart(s).to;
            let back = darts.reverse(s);
            if let Some(c) = darts.find(v, u) {
                if Some(c) != back && darts.dart(c).link_id != r.link_id && depth + 1 < bound {
                    let mut chain = vec![c];
                    let mut cur = s;
                    while cur != NONE as usize {
                        chain.push(cur);
                        cur = parent[cur] as usize;
                    }
                    chain.reverse();
                    bound = chain.len();
                    best = Some(chain);
                    break;
                }
            }
            if depth + 2 >= bound {
                continue;
            }
            for e in darts.out_ids(v) {
                if Some(e) == back || stamp[e] == generation {
                    continue;
                }
                if darts.dart(e).to <= u {
                    continue;
                }
                stamp[e] = generation;
                parent[e] = s as u32;
                queue.push_back((e, depth + 1));
            }
        }
    }

    match best {
        Some(chain) => {
            let cycle = Cycle {
                vertices: chain.iter().map(|&d| darts.dart(d).from).collect(),
                kinds: chain.iter().map(|&d| darts.dart(d).kind).collect(),
            };
            assert!(
                cycle.is_valid_in(g),
                "girth search produced an invalid witness: {cycle}"
            );
            GirthReport {
                girth: Girth::Finite(cycle.len()),
                witness: Some(cycle),
            }
        }
        None => GirthReport {
            girth: cutoff.map_or(Girth::Infinite, Girth::AboveCutoff),
            witness: None,
        },
    }
}
