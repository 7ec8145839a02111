#![allow(dead_code)]

use mixed_cages::girth::enumerate_short_cycles;
use mixed_cages::mixed::MixedGraph;
use rand::Rng;

/// Random mixed graph: every unordered pair independently becomes nothing,
/// an edge, an arc in one direction, or a digon.
pub fn random_mixed<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            match rng.gen_range(0..7) {
                0..=2 => g.add_edge(u, v).unwrap(),
                3 | 4 => g.add_arc(u, v).unwrap(),
                5 => g.add_arc(v, u).unwrap(),
                _ => {
                    g.add_arc(u, v).unwrap();
                    g.add_arc(v, u).unwrap();
                }
            }
        }
    }
    g
}

/// Builds a graph from `(u, v, is_arc)` triples.
pub fn graph_from(n: usize, links: &[(usize, usize, bool)]) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for &(u, v, arc) in links {
        if arc {
            g.add_arc(u, v).unwrap();
        } else {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Shortest cycle length found by exhaustive enumeration.
pub fn brute_girth(g: &MixedGraph) -> Option<usize> {
    enumerate_short_cycles(g, g.n())
        .unwrap()
        .iter()
        .map(|c| c.len())
        .min()
}
