//! Exact scalars: the rational base field and the quaternion division
//! algebra over it.
//!
//! Matrix, vector-space and tensor code is written against
//! [`DivisionAlgebra`], the contract a scalar type must satisfy. Only
//! what the rest of the crate actually uses is required:
//!
//! * an associative, unital ring structure (`add`, `neg`, `mul`, `zero`, `one`),
//!   not necessarily commutative;
//! * a two-sided inverse for every nonzero element;
//! * a commutative central subring (`Center`) embedded by `from_center`,
//!   in which 2 is invertible (skew-symmetric maps carry a factor ½);
//! * a finite basis of the algebra over its center (`center_basis`); each
//!   argument slot of a tensor-sum map is linear over the center, so
//!   evaluating on this basis decides map equality.

mod quaternion;
mod rational;

use std::fmt::{Debug, Display};

pub use quaternion::Quaternion;
pub use rational::Rational;

use crate::error::Result;

pub trait DivisionAlgebra: Clone + PartialEq + Debug + Display + Send + Sync {
    type Center: Clone + PartialEq + Debug;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self · rhs`, in this order.
    fn mul(&self, rhs: &Self) -> Self;
    /// Two-sided inverse; `Error::ZeroDivision` for zero.
    fn inv(&self) -> Result<Self>;

    fn from_center(c: Self::Center) -> Self;
    /// The inverse of 2 in the center.
    fn half() -> Self;
    fn center_basis() -> Vec<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl DivisionAlgebra for Quaternion {
    type Center = Rational;

    fn zero() -> Self {
        Quaternion::zero()
    }
    fn one() -> Self {
        Quaternion::one()
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Result<Self> {
        Quaternion::inv(self)
    }
    fn from_center(c: Rational) -> Self {
        Quaternion::from_rational(c)
    }
    fn half() -> Self {
        Quaternion::from_rational(Rational::new(1, 2))
    }
    fn center_basis() -> Vec<Self> {
        Quaternion::d_basis().to_vec()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
}
