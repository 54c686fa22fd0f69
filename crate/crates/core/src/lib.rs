pub mod complex;
pub mod energy;
pub mod error;
pub mod facets;
pub mod families;
pub mod graph;
pub mod homotopy;
pub mod incidence;
pub mod linalg;
pub mod morse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod verify;
