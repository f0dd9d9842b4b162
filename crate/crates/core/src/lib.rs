//! Exact computations in split iquantum groups of finite type.
//!
//! The crate builds, coefficient-exactly over `Q(q)`:
//!
//! - the good-word basis, by straightening words against the iSerre
//!   relations ([`straighten`]),
//! - the Lyndon basis obtained from q^-1-bracketings of good Lyndon words,
//!   PBW root vectors from the braid group operators, and the transition
//!   matrices between them ([`bases`]),
//! - the integrality report and, when it holds, the canonical basis
//!   ([`canonical`]).
//!
//! Supporting modules: [`qarith`] (Laurent polynomials and rational
//! functions in `q`), [`words`] (orders, Lyndon words, factorizations),
//! [`rootdata`] (Cartan data, roots, reduced words) and [`freealg`] (the
//! free algebra, brackets, relation generators).

pub mod bases;
pub mod canonical;
pub mod error;
pub mod freealg;
pub mod qarith;
pub mod rootdata;
pub mod straighten;
pub mod words;

pub use error::{Error, Result};
pub use freealg::{FreeElement, Nu, RelationPreset};
pub use qarith::{LaurentInt, RatFn};
pub use rootdata::{Kind, RootDatum};
pub use straighten::StraightenTable;
pub use words::Word;
