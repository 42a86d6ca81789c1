//! Exact de Rham computations on triangulated manifolds.
//!
//! The crate computes simplicial homology and cohomology over the rationals,
//! represents differential forms as piecewise polynomials in barycentric
//! coordinates, and integrates them exactly over chains. On top of that it
//! decides, by exact linear algebra, the three classical statements relating
//! closed forms to cohomology: vanishing periods imply exactness, any periods
//! are realized by a closed form, and integration carries the wedge product
//! to the cup product.
//!
//! ```
//! use derham::complex::CanonicalComplex;
//! use derham::linalg::int;
//! use derham::theorems::{periods, realize_periods};
//!
//! let torus = CanonicalComplex::Torus.build().unwrap();
//! let omega = realize_periods(&torus, 1, &[int(3), int(-2)]).unwrap();
//! assert_eq!(periods(&torus, &omega).unwrap().periods, vec![int(3), int(-2)]);
//! ```

pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod sample;
pub mod theorems;

pub use error::{Error, Result};
