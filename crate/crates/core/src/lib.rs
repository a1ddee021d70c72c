//! Financial time-series econometrics: stationarity and autocorrelation
//! tests, ARMA selection and forecasting, GARCH and eGARCH volatility models,
//! normal VaR/ES, and vector autoregressions.
//!
//! ```
//! use quantset::{series::{Series, SeriesKind}, risk::var_normal};
//!
//! let s = Series::new("r", SeriesKind::LogReturn, vec![0.01, -0.02, 0.005]).unwrap();
//! assert_eq!(s.len(), 3);
//! let v = var_normal(0.0011, 0.0125, 0.95).unwrap();
//! assert!((v - 0.0217).abs() < 1e-4);
//! ```

pub mod arma;
pub mod error;
pub mod garch;
pub mod linalg;
pub mod optim;
pub mod risk;
pub mod series;
pub mod sim;
pub mod special;
pub mod stattests;
pub mod var_system;

pub use error::{Error, Result};
pub use series::{Series, SeriesKind};

/// Book chapters, compiled and run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    pub mod series {}
    #[doc = include_str!("../../../book/src/tests.md")]
    pub mod tests {}
    #[doc = include_str!("../../../book/src/arma.md")]
    pub mod arma {}
    #[doc = include_str!("../../../book/src/garch.md")]
    pub mod garch {}
    #[doc = include_str!("../../../book/src/risk.md")]
    pub mod risk {}
    #[doc = include_str!("../../../book/src/var.md")]
    pub mod var {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
