pub mod bigraded;
pub mod complex;
pub mod error;
pub mod fuzz;
pub mod hochster;
pub mod homology;
pub mod koszul;
pub mod linalg;
pub mod par;
pub mod verify;

pub use bigraded::{Bidegree, BigradedModule};
pub use error::Error;
