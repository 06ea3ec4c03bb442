mod algebra;
mod matrix;
mod module;

pub use algebra::{Algebra, GradedAlgebra};
pub use matrix::Matrix;
pub use module::GradedModule;
mod profile;

pub use profile::{find_regular_linear_form, has_minimal_degree, is_cohen_macaulay, numerical_profile, NumericalProfile};
