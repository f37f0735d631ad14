use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Commuting parameter symbols. The alphabet is closed: anything else is a
/// construction error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    K,
    P,
    Q,
    G,
    H,
    U,
    Mu,
}

pub const NVARS: usize = 7;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::K, Var::P, Var::Q, Var::G, Var::H, Var::U, Var::Mu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::K => "K",
            Var::P => "p",
            Var::Q => "q",
            Var::G => "g",
            Var::H => "h",
            Var::U => "u",
            Var::Mu => "mu",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }
}

/// Power product of parameters, stored densely by [`Var::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.exps[v.index()] = e;
        m
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= s;
        }
        Some(Monomial { exps })
    }

    /// Componentwise minimum: the largest monomial dividing both.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).min(*o);
        }
        Monomial { exps }
    }

    pub fn without(&self, v: Var) -> Monomial {
        let mut m = *self;
        m.exps[v.index()] = 0;
        m
    }
}

/// Graded lexicographic order with K > p > q > g > h > u > mu.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_orders_by_degree_first() {
        let k = Monomial::var(Var::K);
        let pq = Monomial::var(Var::P).mul(&Monomial::var(Var::Q));
        assert!(pq > k);
        assert!(k > Monomial::var(Var::P));
        assert!(Monomial::one() < Monomial::var(Var::Mu));
    }

    #[test]
    fn parses_only_registered_symbols() {
        assert_eq!("mu".parse::<Var>().unwrap(), Var::Mu);
        assert!(matches!("w".parse::<Var>(), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn renders_with_explicit_exponents() {
        let m = Monomial::var_pow(Var::K, 2).mul(&Monomial::var(Var::Q));
        assert_eq!(m.to_string(), "K^2*q");
    }
}
