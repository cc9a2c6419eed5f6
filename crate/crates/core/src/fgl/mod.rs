//! Truncated power series and one-dimensional formal group laws.

mod law;
mod multi;
mod series;
pub mod text;

pub use law::{
    coprimality_check, honda_logarithm, honda_rational, make_fgl, multiplicative_angle_polynomial,
    reduce_series, weierstrass_degree, CoprimalityCertificate, FglName, FormalGroupLaw, WeierstrassDegree,
};
pub use multi::MultiSeries;
pub use series::TruncatedSeries;

use crate::error::Result;
use crate::ring::Ring;

/// `f ∘ g`; see [`TruncatedSeries::compose`].
pub fn ps_compose<R: Ring>(f: &TruncatedSeries<R>, g: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.compose(g)
}

/// Compositional inverse; see [`TruncatedSeries::reversion`].
pub fn ps_reversion<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.reversion()
}
