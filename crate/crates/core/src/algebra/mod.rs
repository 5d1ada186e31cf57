//! Exact arithmetic: rationals, cyclotomic numbers, Puiseux series and `ε`-expansions.

pub mod cyclo;
pub mod eps;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rat;
pub mod series;

pub use cyclo::CycNumber;
pub use eps::{eps_limit_ratio, EpsSeries};
pub use monomial::Monomial;
pub use poly::Poly;
pub use rat::{rat, Rat};
pub use series::PuiseuxSeries;
