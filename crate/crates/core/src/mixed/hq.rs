use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTable};
use crate::plane::{build_semiplane, LabeledGraph, VertexLabel};

/// Jump count `k` and remainder `r` with `q - 1 = 4k + r`, `1 <= r <= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumpCount {
    pub k: usize,
    pub r: usize,
}

/// Parameters of a constructed `H_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HqParams {
    pub q: usize,
    pub k: usize,
    pub r: usize,
    pub xi: FieldElement,
}

/// `H_q` together with the parameters it was built from.
#[derive(Debug, Clone)]
pub struct Hq {
    pub labeled: LabeledGraph,
    pub params: HqParams,
}

/// Solves `q - 1 = 4k + r` with `k >= 1` and `1 <= r <= 5`.
///
/// For prime powers `q >= 7` the solution is unique: odd `q` forces
/// `r in {2, 4}` and even `q` forces `r = 3`. The returned `k` is always
/// `floor((q - 2) / 4)`, so `r = 5` never comes back.
pub fn jump_count(q: usize) -> Result<JumpCount> {
    if q < 7 {
        return Err(Error::OutOfRange(format!(
            "the construction needs q >= 7, got {q}"
        )));
    }
    let k = (q - 2) / 4;
    let r = q - 1 - 4 * k;
    debug_assert!((1..=5).contains(&r) && k >= 1);
    Ok(JumpCount { k, r })
}

/// Builds `H_q`: the semiplane graph plus, for every jump `i` in `1..=k`,
/// the arcs
///
/// * `(x, y) -> (x xi^i, y)` inside each `P_y`,
/// * `L_x -> L_{x xi^i}` inside `L_inf`,
/// * `[m, b] -> [m / xi^i, b]` inside each `L_b`,
/// * `P_m -> P_{m / xi^i}` inside `P_inf`.
///
/// The result has order `2q^2 - 2` and every vertex has `k` in-arcs,
/// `k` out-arcs and `q` edges.
pub fn build_hq(f: &FieldTable) -> Result<Hq> {
    use VertexLabel::*;
    let q = f.order() as usize;
    let JumpCount { k, r } = jump_count(q)?;
    let mut labeled = build_semiplane(f)?;

    for i in 1..=k as i64 {
        let forward = f.power_of_xi(i);
        let backward = f.power_of_xi(-i);
        let mut arcs = Vec::with_capacity(2 * (q + 1) * (q - 1));
        for x in f.nonzero() {
            let shifted = f.mul(x, forward);
            for y in f.elements() {
                arcs.push((AffinePoint { x, y }, AffinePoint { x: shifted, y }));
            }
            arcs.push((VerticalLine(x), VerticalLine(shifted)));
        }
        for m in f.nonzero() {
            let shifted = f.mul(m, backward);
            for b in f.elements() {
                arcs.push((AffineLine { m, b }, AffineLine { m: shifted, b }));
            }
            arcs.push((SlopePoint(m), SlopePoint(shifted)));
        }
        for (from, to) in arcs {
            let u = labeled.index_of(&from).expect("label in semiplane");
            let v = labeled.index_of(&to).expect("label in semiplane");
            labeled.graph.add_arc(u, v)?;
        }
    }

    Ok(Hq {
        labeled,
        params: HqParams {
            q,
            k,
            r,
            xi: f.xi(),
        },
    })
}
