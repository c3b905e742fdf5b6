//! Scalar abstraction: the whole kernel is generic over the floating-point
//! type. `f64` is the precision-bearing instantiation used by the CLI and the
//! type aliases at the crate root; `f32` is supported where memory or speed
//! matter more than the tighter tolerances.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar usable by the geometry and solver kernels.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::NumCast
    + num_traits::FloatConst
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for embedding an `f64` constant into the working scalar type.
#[inline]
pub fn cst<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Two times pi.
#[inline]
pub fn two_pi<T: Real>() -> T {
    T::PI() + T::PI()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_embed_in_both_widths() {
        let a: f32 = cst(0.5);
        let b: f64 = cst(0.5);
        assert_eq!(a, 0.5f32);
        assert_eq!(b, 0.5f64);
    }
}
