//! Scalar abstraction for the whole crate.
//!
//! All algebraic structures are generic over a [`Scalar`]: a field with exact
//! equality and by-value arithmetic, as provided by the `num-traits`
//! hierarchy. `num_rational::BigRational` is the intended instantiation (see
//! the crate-root aliases); `f64` satisfies the bounds as well but is not
//! used by anything in this workspace.

use std::fmt;

use num_traits::{FromPrimitive, NumAssign, Signed};

/// Field-like scalar with exact equality.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + NumAssign + Signed + FromPrimitive {}

impl<T> Scalar for T where T: Clone + fmt::Debug + fmt::Display + NumAssign + Signed + FromPrimitive {}

/// Embeds a machine integer.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("integer embeds into scalar")
}

/// Builds the exact ratio `num/den`.
pub fn ratio<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0, "zero denominator");
    int::<S>(num) / int::<S>(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn ratio_is_exact() {
        let x: Rat = ratio(1, 3);
        let y: Rat = ratio(2, 6);
        assert_eq!(x, y);
        assert_eq!(x.to_string(), "1/3");
        assert_eq!(int::<Rat>(-7).to_string(), "-7");
    }
}
