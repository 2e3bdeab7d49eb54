pub mod circulant;
pub mod cli;
pub mod cycle_transform;
pub mod error;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod reproduce;
pub mod union;

pub use error::{Error, Result};
