//! Exact fixed-subspace counts for finite-order isometries acting on the
//! LLV decomposition `H* = V(5) ⊕ V(2,2)` of an OG10-type hyper-Kähler manifold.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`cyclic`]: eigenvalue-multiplicity vectors of finite-order operators and
//!   their symmetric/exterior powers.
//! * [`mukai`]: the Mukai-extended character and the two LLV components.
//! * [`poly`] and [`table`]: exact interpolation of the closed-form polynomials
//!   and coefficient diffs against the printed reference data.
//! * [`weyl`]: type-D weight characters, Freudenthal multiplicities and the
//!   plethysm certificate `Sym²Λ²V = Sym²V ⊕ Λ⁴V ⊕ V(2,2)`.
//! * [`enriques`]: the Euler-characteristic feasibility scan for free quotients.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cyclic;
pub mod enriques;
mod error;
mod fraction;
pub mod mukai;
pub mod poly;
pub mod table;
pub mod weyl;

pub use cyclic::{CyclicCharacter, VirtualCyclicCharacter};

pub use enriques::{AdmissibleIndices, PaperClaim, PolynomialSource, ScanCandidate, ScanReport, SignCase};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use mukai::{ComponentInvariants, ManifoldProfile};
pub use poly::RationalPolynomial;
pub use table::{ErratumReport, Target};
pub use weyl::{DominantCharacter, Weight};
