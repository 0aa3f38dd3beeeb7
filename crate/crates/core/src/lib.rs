//! Asymmetric Lee distance codes for DNA storage.

pub mod ald;
pub mod ball;
pub mod budget;
pub mod codes;
pub mod delsarte;
pub mod error;
pub mod hyperbound;
pub mod lp;
pub mod report;
pub mod search;
pub mod sqrt5;

pub use error::{Error, Result};
