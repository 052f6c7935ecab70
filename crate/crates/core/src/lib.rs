pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod golden;
pub mod json;
pub mod laurent;
pub mod mpoly;
pub mod orbitspace;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
