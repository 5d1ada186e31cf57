//! Modular-form atoms as Puiseux series.

mod eisenstein;
mod eta;
mod theta;

pub use eisenstein::{
    bernoulli, bernoulli_poly, eisenstein, expand_geometric, expand_geometric_eps, theta_bar, twisted_eisenstein,
    twisted_eisenstein_eps, TwistPair,
};
pub use eta::{dedekind_eta, eta_scaled};
pub use theta::{classical_theta, jacobi_theta, jacobi_theta_eps, jacobi_theta_product, theta_nullwert, ThetaKind};
