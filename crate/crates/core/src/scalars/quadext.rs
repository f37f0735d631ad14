use std::fmt;
use std::sync::Arc;

use super::RatFunc;
use crate::error::{Error, Result};

/// `a + b·s` with `s² = rho`, over the rational function field.
///
/// Elements with `b = 0` may omit `rho`; they combine with any extension.
/// Mixing two different `rho` values is a logic error and panics.
#[derive(Debug, Clone)]
pub struct QuadExt {
    pub a: RatFunc,
    pub b: RatFunc,
    rho: Option<Arc<RatFunc>>,
}

impl QuadExt {
    pub fn new(a: RatFunc, b: RatFunc, rho: &RatFunc) -> Self {
        QuadExt { a, b, rho: Some(Arc::new(rho.clone())) }
    }

    pub fn base(a: RatFunc) -> Self {
        QuadExt { a, b: RatFunc::zero(), rho: None }
    }

    /// The generator `s` itself.
    pub fn sqrt(rho: &RatFunc) -> Self {
        Self::new(RatFunc::zero(), RatFunc::one(), rho)
    }

    pub fn rho(&self) -> Option<&RatFunc> {
        self.rho.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Returns `a` when the element lies in the base field.
    pub fn as_base(&self) -> Option<&RatFunc> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conj(&self) -> QuadExt {
        QuadExt { a: self.a.clone(), b: -&self.b, rho: self.rho.clone() }
    }

    /// `a² − ρ·b²`.
    pub fn norm(&self) -> RatFunc {
        match &self.rho {
            Some(r) if !self.b.is_zero() => &self.a * &self.a - &**r * &(&self.b * &self.b),
            _ => &self.a * &self.a,
        }
    }

    fn joint_rho(&self, other: &QuadExt) -> Option<Arc<RatFunc>> {
        match (&self.rho, &other.rho) {
            (Some(x), Some(y)) => {
                assert!(Arc::ptr_eq(x, y) || **x == **y, "mixed quadratic extensions");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn add(&self, o: &QuadExt) -> QuadExt {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, rho: self.joint_rho(o) }
    }

    pub fn sub(&self, o: &QuadExt) -> QuadExt {
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, rho: self.joint_rho(o) }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, rho: self.rho.clone() }
    }

    pub fn mul(&self, o: &QuadExt) -> QuadExt {
        let rho = self.joint_rho(o);
        let mut a = &self.a * &o.a;
        if !self.b.is_zero() && !o.b.is_zero() {
            let r = rho.as_deref().expect("irrational part without rho");
            a = &a + &(r * &(&self.b * &o.b));
        }
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        QuadExt { a, b, rho }
    }

    pub fn inv(&self) -> Result<QuadExt> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadExt { a: c.a.checked_div(&n)?, b: c.b.checked_div(&n)?, rho: c.rho })
    }

    pub fn checked_div(&self, o: &QuadExt) -> Result<QuadExt> {
        Ok(self.mul(&o.inv()?))
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl From<RatFunc> for QuadExt {
    fn from(a: RatFunc) -> Self {
        QuadExt::base(a)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*s", self.b)
        } else {
            write!(f, "{} + ({})*s", self.a, self.b)
        }
    }
}
