//! Congruences of finite commutative semirings and the varieties cut out
//! by systems of polynomial congruence equations.
//!
//! Everything is exact over finite carriers given by operation tables. The
//! natural numbers appear only through a bounded window (see
//! [`geometry::window`]).

pub mod congruence;
pub mod error;
pub mod geometry;
pub mod partition;
pub mod polynomial;
pub mod relation;
pub mod semiring;
pub mod twisted;

pub use congruence::Congruence;
pub use error::{Error, Result};
pub use partition::Partition;
pub use relation::{ElementPair, PairRelation};
pub use semiring::{Builtin, SemiringOps, SemiringTable};
