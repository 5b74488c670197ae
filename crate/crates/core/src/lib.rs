//! Exact computations with the cyclic symmetric functions `c_n(X;t)`, the
//! Hall–Littlewood functions, the Jordan Hall algebra and the Hall algebra of
//! the cyclic quiver over small prime fields.

pub mod error;
pub mod cyclic_fq;
pub mod exactalg;
pub mod hall_jordan;
pub mod lincomb;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use cyclic_fq::{CyclicIsoClass, FqModule, NumHallElem};
pub use hall_jordan::{HallElem, HallTensor};
pub use exactalg::{BigInt, BigRational, HalfPower, Poly, RatFunc, RootQ, Var};
pub use lincomb::LinComb;
pub use partitions::{Composition, Partition};
pub use symfunc::{CExpr, SymFunc, SymTensor};
