//! Multiple polylogarithms at `1/2`, `-1` and `1`: exact algebra, certified
//! numerics, closed-form reductions and integer relation search.

pub mod algebra;
pub mod linalg;
pub mod numerics;
pub mod relation;
pub mod series;
pub mod symbolic;
