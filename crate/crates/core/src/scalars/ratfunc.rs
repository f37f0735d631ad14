use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational, Var};
use crate::error::{Error, Result};

/// Element of the rational function field over the parameter alphabet.
///
/// Normalization is deliberately shallow: common monomial factors are
/// cancelled, exact polynomial quotients are taken when one side divides the
/// other, and integer content is reduced jointly. There is no multivariate
/// GCD, so two equal values may print differently; equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(n / d)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    fn normalized(mut num: Poly, mut den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let common = num.monomial_content().gcd(&den.monomial_content());
        if !common.is_one() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: Poly::one() };
        }
        if num.constant_value().is_none() {
            if let Some(q) = num.exact_div(&den) {
                return RatFunc { num: q, den: Poly::one() };
            }
            if let Some(q) = den.exact_div(&num) {
                num = Poly::one();
                den = q;
                if let Some(c) = den.constant_value() {
                    return RatFunc { num: Poly::constant(c.recip()), den: Poly::one() };
                }
            }
        }
        let (ln, _) = num.integer_content();
        let (ld, _) = den.integer_content();
        let l = num_integer::Integer::lcm(&ln, &ld);
        if !l.is_one() {
            let s = Rational::from_integer(l);
            num = num.scale(&s);
            den = den.scale(&s);
        }
        let (_, gn) = num.integer_content();
        let (_, gd) = den.integer_content();
        let mut factor = Rational::new(BigInt::one(), num_integer::Integer::gcd(&gn, &gd));
        if den.leading_is_negative() {
            factor = -factor;
        }
        if !factor.is_one() {
            num = num.scale(&factor);
            den = den.scale(&factor);
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        RatFunc {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        }
    }

    /// Cross-multiplication equality test.
    pub fn ratfunc_eq(&self, other: &RatFunc) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    /// Simultaneous substitution of bound symbols by rational functions.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let (num, num_den) = substitute_poly(&self.num, bindings);
        let (den, den_den) = substitute_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&num * &den_den, &den * &num_den)
    }

    /// Substitutes a single variable.
    pub fn subs(&self, v: Var, value: &RatFunc) -> Result<RatFunc> {
        self.substitute(&[(v, value.clone())])
    }

    /// Numeric value at a full rational point.
    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (v, x) in point {
            num = num.eval_var(*v, x);
            den = den.eval_var(*v, x);
        }
        let d = den.constant_value().ok_or_else(|| Error::UnknownSymbol(format!("unbound symbol in {self}")))?;
        let n = num.constant_value().ok_or_else(|| Error::UnknownSymbol(format!("unbound symbol in {self}")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(n / d)
    }

    /// Cancels the common power of `u` and evaluates at `u = 0`.
    pub fn limit_u0(&self) -> Result<RatFunc> {
        let vn = self.num.min_degree_in(Var::U);
        let vd = self.den.min_degree_in(Var::U);
        if self.is_zero() || vn > vd {
            return Ok(RatFunc::zero());
        }
        let common = Monomial::var_pow(Var::U, vn);
        let num = self.num.div_monomial(&common).eval_var(Var::U, &Rational::zero());
        let den = self.den.div_monomial(&common).eval_var(Var::U, &Rational::zero());
        if den.is_zero() {
            return Err(Error::PoleAtZero);
        }
        RatFunc::new(num, den)
    }
}

/// Returns `(numerator, denominator)` of `p` after substituting bindings,
/// clearing denominators with the maximal power of each binding's denominator.
fn substitute_poly(p: &Poly, bindings: &[(Var, RatFunc)]) -> (Poly, Poly) {
    let relevant: Vec<&(Var, RatFunc)> = bindings.iter().filter(|(v, _)| p.contains_var(*v)).collect();
    if relevant.is_empty() {
        return (p.clone(), Poly::one());
    }
    let maxdeg: Vec<u16> = relevant.iter().map(|(v, _)| p.degree_in(*v)).collect();
    let mut num = Poly::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut prod = Poly::one();
        for ((v, val), &top) in relevant.iter().zip(&maxdeg) {
            let e = m.exponent(*v);
            rest = rest.without(*v);
            if e > 0 {
                prod = &prod * &val.num.pow(e as u32);
            }
            if top > e && !val.den.is_one() {
                prod = &prod * &val.den.pow((top - e) as u32);
            }
        }
        num = &num + &prod.mul_monomial(&rest).scale(c);
    }
    let mut den = Poly::one();
    for ((_, val), &top) in relevant.iter().zip(&maxdeg) {
        if !val.den.is_one() {
            den = &den * &val.den.pow(top as u32);
        }
    }
    (num, den)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.ratfunc_eq(other)
    }
}

impl Eq for RatFunc {}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(r: Rational) -> Self {
        RatFunc::from_rational(r)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if !rhs.den.is_one() && rhs.den.len() <= self.den.len() {
            if let Some(k) = self.den.exact_div(&rhs.den) {
                return RatFunc::normalized(&self.num + &(&rhs.num * &k), self.den.clone());
            }
        }
        if !self.den.is_one() && self.den.len() <= rhs.den.len() {
            if let Some(k) = rhs.den.exact_div(&self.den) {
                return RatFunc::normalized(&(&self.num * &k) + &rhs.num, rhs.den.clone());
            }
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_one() || d.is_monomial() || n.is_zero() {
        return (n.clone(), d.clone());
    }
    match n.exact_div(d) {
        Some(q) => (q, Poly::one()),
        None => (n.clone(), d.clone()),
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc { num: &self.num * &rhs.num, den: Poly::one() };
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

fn needs_parens(p: &Poly) -> bool {
    p.len() > 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // a bare `v` or `v^n` binds tighter than the division; anything else is grouped
        let den_plain = self.den.is_monomial()
            && self
                .den
                .leading()
                .is_some_and(|(m, c)| c.is_one() && m.exponents().iter().filter(|&&e| e > 0).count() == 1);
        if den_plain {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}
