use super::darts::DartIndex;
use super::Cycle;
use crate::error::{Error, Result};
use crate::mixed::{LinkKind, MixedGraph};

/// Largest graph accepted by [`enumerate_short_cycles`].
pub const ENUMERATION_LIMIT: usize = 64;

/// Every mixed cycle of length at most `maxlen`, by depth-first search over
/// simple dart paths.
///
/// Each cycle is reported once, starting at its smallest vertex. Cycles
/// made only of edges are found in both directions and the one whose second
/// vertex is smaller than its last is kept.
pub fn enumerate_short_cycles(g: &MixedGraph, maxlen: usize) -> Result<Vec<Cycle>> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(g.n()));
    }
    let darts = DartIndex::new(g);
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();
    for start in 0..g.n() {
        on_path[start] = true;
        extend(
            &darts,
            start,
            start,
            maxlen,
            &mut on_path,
            &mut path,
            &mut out,
        );
        on_path[start] = false;
    }
    Ok(out)
}

fn extend(
    darts: &DartIndex,
    start: usize,
    v: usize,
    maxlen: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    for e in darts.out_ids(v) {
        let d = darts.dart(e);
        let len = path.len() + 1;
        if len > maxlen {
            return;
        }
        if d.to == start {
            if len < 2 {
                continue;
            }
            if len == 2 && darts.dart(path[0]).link_id == d.link_id {
                continue;
            }
            path.push(e);
            let cycle = Cycle {
                vertices: path.iter().map(|&id| darts.dart(id).from).collect(),
                kinds: path.iter().map(|&id| darts.dart(id).kind).collect(),
            };
            path.pop();
            let all_edges = cycle.kinds.iter().all(|&k| k == LinkKind::Edge);
            if !all_edges || cycle.vertices[1] < cycle.vertices[cycle.len() - 1] {
                out.push(cycle);
            }
        } else if d.to > start && !on_path[d.to] {
            on_path[d.to] = true;
            path.push(e);
            extend(darts, start, d.to, maxlen, on_path, path, out);
            path.pop();
            on_path[d.to] = false;
        }
    }
}
