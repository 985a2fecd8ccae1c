//! Finite quandles, good involutions and symmetric doubles, and the
//! canonical tensor product `X ⊗ X` with its involutions and quotients.
//!
//! ```
//! use qtensor::{make_dihedral, tensor_product};
//!
//! let r5 = make_dihedral(5).unwrap();
//! assert_eq!(tensor_product(&r5).len(), 3);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod dihedral;
pub mod error;
pub mod handles;
pub mod hom;
pub mod involution;
pub mod present;
pub mod qdl;
pub mod quandle;
pub mod report;
pub mod tensor;
pub mod uf;

pub use dihedral::{
    closed_form_double_tensor, closed_form_quotient, closed_form_tensor, cross_check, cross_check_sweep, distance,
    DihedralClassLabel, QuotientKind,
};
pub use error::{AxiomViolation, Error, InvolutionViolation, Result};
pub use handles::{handle_report, HandleCount, HandleReport};
pub use hom::{double_hom, validate_hom, QuandleHom};
pub use involution::{
    enumerate_good_involutions, identity_involution, symmetric_double, validate_good_involution, DoubledElement,
    GoodInvolution, DEFAULT_INVOLUTION_BOUND,
};
pub use present::{
    enumerate_homs, eval_word, handle_invariant, handle_invariant_in, parse_presentation, Assignment, HandleInvariant,
    InvariantMode, Presentation, WordExpr, DEFAULT_SEARCH_CAP,
};
pub use qdl::{parse_qdl, write_qdl, QdlDocument};
pub use quandle::{
    make_conjugation, make_dihedral, make_trivial, validate_quandle, validate_quandle_with, Element, Family, Quandle,
    Sign, Validation,
};
pub use report::{tensor_report, TensorReport};
pub use tensor::{
    induced_map, quotient, rho_map, tau_map, tensor_product, tensor_product_parallel, ClassId, ClassInvolution,
    InducedMap, InvolutionKind, Pair, QuotientSet, TensorProduct,
};
