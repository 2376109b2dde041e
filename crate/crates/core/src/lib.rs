//! Spectral method-of-steps solver for `D^a u + B u + C u(., t - tau) = f` on
//! the box `(0, pi)^N`.

pub mod assembler;
pub mod basis;
pub mod cheb;
pub mod error;
pub mod fracops;
pub mod oracle;
pub mod projection;
pub mod quadrature;
pub mod real;
pub mod specfun;
pub mod stepper;

pub use error::{Error, Result};
pub use real::Real;

/// Double-precision aliases for the generic types.
pub mod f64 {
    pub type AxisSpec = crate::basis::AxisSpec<f64>;
    pub type BoxSpec = crate::basis::BoxSpec<f64>;
    pub type CoeffSet = crate::projection::CoeffSet<f64>;
    pub type GridFn = crate::projection::GridFn<f64>;
    pub type Multiplier = crate::stepper::Multiplier<f64>;
    pub type Stepper = crate::stepper::Stepper<f64>;
    pub type ModeData = crate::stepper::ModeData<f64>;
    pub type ModeTrajectory = crate::stepper::ModeTrajectory<f64>;
    pub type ModeSolution = crate::assembler::ModeSolution<f64>;
    pub type SolutionField = crate::assembler::SolutionField<f64>;
    pub type ExistenceReport = crate::assembler::ExistenceReport<f64>;
    pub type MittagLeffler = crate::specfun::MittagLeffler<f64>;
    pub type SampledFn = crate::fracops::SampledFn<f64>;
    pub type OracleConfig = crate::oracle::OracleConfig<f64>;
}
