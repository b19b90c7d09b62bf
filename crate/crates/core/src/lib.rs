//! Exact sigma_k-curvature invariants of Riemannian products of a round
//! sphere and a hyperbolic space form.
//!
//! * [`exact`]: big integers, rationals, binomials.
//! * [`symfunc`]: elementary symmetric functions, Newton tensors and their
//!   polarizations over block-diagonal spectra.
//! * [`product`]: interior Schouten spectrum, sigma profile and `T_3`.
//! * [`search`]: exhaustive search for `sigma_k(A_{m,n}) = 0`.
//! * [`boundary`]: `H_4` / `S_3` as exact polynomials in `kappa`.
//! * [`jacobi`]: leading-order Jacobi index model.

pub mod boundary;
pub mod error;
pub mod exact;
pub mod jacobi;
pub mod kappa;
pub mod product;
pub mod search;
pub mod symfunc;

pub use boundary::{BoundaryGeometry, HkCoefficients};
pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use jacobi::{IndexEstimate, ModeList};
pub use kappa::KappaPoly;
pub use product::{ProductDims, SigmaProfile};
pub use search::{SearchHit, SignatureDims};
pub use symfunc::{BlockValues, ConeVerdict, PairedSpectrum, Spectrum};
