//! Mixed graphs of girth five built from elliptic semiplanes.
//!
//! A mixed graph has undirected edges and directed arcs. This crate builds,
//! for every prime power `q >= 7`, a mixed graph `H_q` of order `2q^2 - 2`
//! in which every vertex has `k` in-arcs, `k` out-arcs and `q` edges, where
//! `q - 1 = 4k + R` with `1 <= R <= 5`, and whose shortest mixed cycle has
//! length exactly 5. It also certifies those properties.
//!
//! The pieces:
//!
//! * [`gf`]: arithmetic in GF(q) with a canonical primitive element.
//! * [`plane`]: the incidence graph of PG(2, q) and the elliptic semiplane
//!   obtained by deleting a non-incident line and point.
//! * [`mixed`]: the mixed graph type, circulant digraphs and `H_q`.
//! * [`girth`]: exact mixed girth with witnesses, plus a brute-force oracle.
//! * [`verify`]: the certificate suite.
//! * [`format`] and [`cli`]: the MIXED text format and the `mixcage` binary.
//!
//! ```
//! use mixed_cages::{gf::make_field, mixed::build_hq, girth::{mixed_girth, Girth}};
//!
//! let field = make_field(8).unwrap();
//! let hq = build_hq(&field).unwrap();
//! assert_eq!(hq.labeled.graph.n(), 126);
//! assert_eq!(mixed_girth(&hq.labeled.graph, Some(6)).girth, Girth::Finite(5));
//! ```
//!
//! The guide in `book/` walks through the construction; its code listings
//! are compiled and run as doctests of this crate.

pub mod cli;
pub mod error;
pub mod format;
pub mod gf;
pub mod girth;
pub mod mixed;
pub mod plane;
pub mod verify;

pub use error::{Error, Result};

// The guide's listings run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/finite-fields.md")]
    pub mod finite_fields {}
    #[doc = include_str!("../../../book/src/projective-plane.md")]
    pub mod projective_plane {}
    #[doc = include_str!("../../../book/src/mixed-graphs.md")]
    pub mod mixed_graphs {}
    #[doc = include_str!("../../../book/src/girth.md")]
    pub mod girth {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
