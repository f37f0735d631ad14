//! Exact scalar arithmetic: rationals, multivariate polynomials over the
//! fixed parameter alphabet, rational functions, and quadratic extensions.

mod monomial;
mod poly;
mod quadext;
mod ratfunc;

pub use monomial::{Monomial, Var, NVARS};
pub use poly::Poly;
pub use quadext::QuadExt;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a small numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Field operations needed by the generic matrix code.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> crate::Result<Self>;
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> crate::Result<Self> {
        self.checked_div(o)
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::base(RatFunc::zero())
    }
    fn one() -> Self {
        QuadExt::base(RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QuadExt::mul(self, o)
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
    fn div(&self, o: &Self) -> crate::Result<Self> {
        self.checked_div(o)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> crate::Result<Self> {
        if num_traits::Zero::is_zero(o) {
            Err(crate::Error::DivisionByZero)
        } else {
            Ok(self / o)
        }
    }
}
