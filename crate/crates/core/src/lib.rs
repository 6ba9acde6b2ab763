//! Local reduction data, quadratic-twist minimality and Faltings curves of
//! rational isogeny graphs, with an independent period-lattice oracle.

pub mod error;
pub mod exactnum;
pub mod families;
pub mod graphs;
pub mod localdata;
pub mod oracle;
pub mod weierstrass;

pub use error::{Error, Result};
pub use exactnum::{Rat, Val};
