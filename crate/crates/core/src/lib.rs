pub mod casselman;
pub mod error;
pub mod hecke;
pub mod kkalg;
pub mod report;
pub mod rootdata;
pub mod scalars;
pub mod verify;

pub use casselman::{Casselman, CasselmanTables, ConjectureReport};
pub use error::{Error, Result};
pub use hecke::{CoeffTable, HeckeAlgebra, HeckeElt, TransitionTables};
pub use kkalg::{KkAlgebra, TwistedElt};
pub use report::CheckResult;
pub use rootdata::{CartanType, RootDatum, WeylElt};
pub use scalars::{LaurentPoly, Monomial, Scalar};
pub use verify::{verify, VerifyReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-data.md")]
    mod root_data {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/kk-algebra.md")]
    mod kk_algebra {}
    #[doc = include_str!("../../../book/src/casselman.md")]
    mod casselman {}
    #[doc = include_str!("../../../book/src/verify.md")]
    mod verify {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
