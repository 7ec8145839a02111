use std::collections::BTreeSet;

use super::MixedGraph;
use crate::error::{Error, Result};

/// The circulant digraph on `Z_n` with an arc `a -> a + j (mod n)` for
/// every jump `j`.
///
/// Jumps must be distinct and lie in `1..n`. A jump set containing both `j`
/// and `n - j` (or a `j` with `2j = n`) would produce antiparallel arc pairs
/// and is rejected as a simplicity violation.
pub fn build_circulant_digraph(n: usize, jumps: &[usize]) -> Result<MixedGraph> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "circulant needs at least 2 vertices, got {n}"
        )));
    }
    if jumps.is_empty() {
        return Err(Error::OutOfRange(
            "circulant needs at least one jump".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    for &j in jumps {
        if j == 0 || j >= n {
            return Err(Error::OutOfRange(format!("jump {j} outside 1..{n}")));
        }
        if !seen.insert(j) {
            return Err(Error::OutOfRange(format!("jump {j} listed twice")));
        }
    }
    for &j in jumps {
        if seen.contains(&(n - j)) {
            return Err(Error::SimplicityViolation {
                u: 0,
                v: j,
                reason: "jumps j and n - j create a digon",
            });
        }
    }
    let mut g = MixedGraph::new(n);
    for a in 0..n {
        for &j in jumps {
            g.add_arc(a, (a + j) % n)?;
        }
    }
    Ok(g)
}
