//! Dual and dual complex scalars.
//!
//! A dual number is `a + b·ε` with `ε² = 0`; a dual complex number has
//! complex standard and infinitesimal parts. Dual numbers carry a total
//! order (standard parts first, infinitesimal parts break ties), which is
//! what makes magnitudes, norms and best-approximation statements
//! meaningful downstream.

mod dual;
mod dual_complex;

pub use dual::DualNumber;
pub use dual_complex::DualComplex;
