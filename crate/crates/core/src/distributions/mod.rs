//! Concrete distributions: Gaussian, Rayleigh, their Laplace scale mixture,
//! and the Arctan-GR distribution built on top of it.

mod agr;
mod gaussian;
mod laplace;
mod rayleigh;

pub use agr::{ArctanGRParams, QuantileBranchPoint, MOMENT_TOLERANCE, P_STAR};
pub use gaussian::GaussianParams;
pub use laplace::{mixture_kernel_pdf, mixture_kernel_pdf_by_integration, LaplaceParams};
pub use rayleigh::RayleighParams;
