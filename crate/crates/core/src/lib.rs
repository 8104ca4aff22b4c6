//! Exact computations with free Lie algebras over the integers, truncated
//! Magnus expansions of free-group words, and the Johnson filtration of
//! IA-automorphisms of free groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`intlinalg`]: arbitrary-precision integer matrices, Hermite and Smith
//!   normal forms, quotient invariants of integer spans.
//! * [`freelie`]: Lyndon bases, Witt ranks, brackets in normal form and
//!   graded spans of Lie ideals.
//! * [`magnus`]: reduced free-group words and their truncated Magnus
//!   expansions.
//! * [`autfn`]: IA-endomorphisms modulo a power of the augmentation ideal,
//!   with composition, inversion, Johnson depth and Johnson image.
//! * [`mccool`]: the basis-conjugating group, its presentations and the
//!   graded rank calculators for its subgroups.
//! * [`checks`]: the structured verification reports consumed by the CLI.
//!
//! Generator indices in the public constructors are 1-based (`x1 .. xn`),
//! matching the usual notation. Letters inside stored words and monomials
//! are 0-based `u8` codes.

pub mod autfn;
pub mod checks;
pub mod error;
pub mod freelie;
pub mod intlinalg;
pub mod magnus;
pub mod mccool;

pub use autfn::IAEndo;
pub use error::{Error, Result};
pub use freelie::{AssocPoly, LieElement, LyndonWord};
pub use intlinalg::{IntMatrix, QuotientInvariants};
pub use magnus::{Depth, TruncSeries, Word};
pub use mccool::{GenWord, SubgroupSpec};

