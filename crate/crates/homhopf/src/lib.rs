//! Exact structure-constant computer algebra for monoidal Hom-Hopf algebras.
//!
//! The library represents finite-dimensional monoidal Hom-algebras,
//! Hom-coalgebras and Hom-Hopf algebras by their structure tensors over exact
//! rationals, and mechanically constructs and verifies the derived objects:
//! Yetter-Drinfeld Hom-modules and their duals, diagonal crossed products,
//! Drinfeld doubles, Hopf T-coalgebras with crossings, and the integer-graded
//! braided family with its braiding.
//!
//! Every law is checked exhaustively on basis tuples with exact equality, so a
//! passing report is a proof for the structure at hand; failing laws come back
//! as data with minimal counterexamples instead of panics.
//!
//! ```
//! use homhopf::registry::build_h4;
//! use homhopf::hopf::check_hom_hopf;
//! use homhopf::crossed::drinfeld_double;
//! use homhopf::scalar::frac;
//!
//! let h = build_h4(&frac(1, 2)).unwrap();
//! assert!(check_hom_hopf(&h).all_passed());
//!
//! let double = drinfeld_double(&h).unwrap();
//! assert_eq!(double.hopf.dim, 16);
//! assert!(double.report.all_passed());
//! ```

pub mod error;
pub mod scalar;
pub mod mat;
pub mod multilinear;
pub mod report;
pub mod hopf;
pub mod rep;
pub mod yd;
pub mod crossed;
pub mod tcoalg;
pub mod twist;
pub mod registry;

pub use error::{Error, Result};
pub use hopf::{
    check_hom_algebra, check_hom_coalgebra, check_hom_hopf, dual_hopf, find_group_likes,
    verify_automorphism, yau_twist, HomAlgebra, HomCoalgebra, HomHopfAlgebra, HopfAutomorphism,
};
pub use mat::{dualize, pair, LinMap};
pub use multilinear::{tensor_all, MultilinearMap};
pub use report::{AxiomCheck, AxiomReport, Counterexample};
pub use scalar::Scalar;
