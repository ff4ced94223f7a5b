pub mod arrangement;
pub mod cartan;
pub mod corpus;
pub mod criteria;
pub mod exactfield;
pub mod format;
pub mod linalg;
pub mod multinet;
pub mod osalgebra;
pub mod pencil;
