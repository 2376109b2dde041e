//! Special functions: Gamma and Mittag-Leffler.

mod gamma;
mod laplace;
mod mittag_leffler;

pub use gamma::{cos_pi, gamma, ln_gamma, rgamma, sin_pi};
pub use laplace::lt_inversion;
pub use mittag_leffler::{mittag_leffler, mittag_leffler_prabhakar2, MittagLeffler, MlParams};
