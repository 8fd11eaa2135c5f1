pub mod caps;
pub mod dag;
pub mod lang;
pub mod monoid;
pub mod reductions;
pub mod solvers;

pub use caps::Caps;
