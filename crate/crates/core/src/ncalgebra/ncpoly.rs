use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{RatFunc, Var};

/// Noncommuting generator. Tilde variants name the contracted generators and
/// never share a word with plain ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSymbol {
    A,
    B,
    C,
    D,
    Xi,
    Eta,
    X,
    Y,
    TildeA,
    TildeB,
    TildeC,
    TildeD,
    TildeXi,
    TildeEta,
    TildeX,
    TildeY,
}

impl GenSymbol {
    pub const GROUP: [GenSymbol; 4] = [GenSymbol::A, GenSymbol::B, GenSymbol::C, GenSymbol::D];
    pub const PLANE: [GenSymbol; 4] = [GenSymbol::Xi, GenSymbol::Eta, GenSymbol::X, GenSymbol::Y];
    pub const TILDE_GROUP: [GenSymbol; 4] =
        [GenSymbol::TildeA, GenSymbol::TildeB, GenSymbol::TildeC, GenSymbol::TildeD];
    pub const TILDE_PLANE: [GenSymbol; 4] =
        [GenSymbol::TildeXi, GenSymbol::TildeEta, GenSymbol::TildeX, GenSymbol::TildeY];

    const ALL: [GenSymbol; 16] = [
        GenSymbol::A,
        GenSymbol::B,
        GenSymbol::C,
        GenSymbol::D,
        GenSymbol::Xi,
        GenSymbol::Eta,
        GenSymbol::X,
        GenSymbol::Y,
        GenSymbol::TildeA,
        GenSymbol::TildeB,
        GenSymbol::TildeC,
        GenSymbol::TildeD,
        GenSymbol::TildeXi,
        GenSymbol::TildeEta,
        GenSymbol::TildeX,
        GenSymbol::TildeY,
    ];

    pub fn name(self) -> &'static str {
        use GenSymbol::*;
        match self {
            A => "a",
            B => "b",
            C => "c",
            D => "d",
            Xi => "xi",
            Eta => "eta",
            X => "x",
            Y => "y",
            TildeA => "a~",
            TildeB => "b~",
            TildeC => "c~",
            TildeD => "d~",
            TildeXi => "xi~",
            TildeEta => "eta~",
            TildeX => "x~",
            TildeY => "y~",
        }
    }

    pub fn is_tilde(self) -> bool {
        self >= GenSymbol::TildeA
    }

    pub fn tilde(self) -> GenSymbol {
        if self.is_tilde() {
            self
        } else {
            Self::ALL[self as usize + 8]
        }
    }

    pub fn plain(self) -> GenSymbol {
        if self.is_tilde() {
            Self::ALL[self as usize - 8]
        } else {
            self
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }
}

/// Finite sequence of generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<GenSymbol>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Positions where `pat` occurs as a contiguous subword.
    pub fn occurrences<'a>(&'a self, pat: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pat.len();
        (0..=self.len().saturating_sub(n))
            .filter(move |&i| n > 0 && i + n <= self.len() && self.0[i..i + n] == pat.0[..])
    }

    /// Replaces `len` letters at `pos` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + mid.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }
}

impl From<&[GenSymbol]> for Word {
    fn from(s: &[GenSymbol]) -> Self {
        Word(s.to_vec())
    }
}

/// Shortlex: shorter words first, then generator order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Linear combination of words with rational-function coefficients.
/// Parameters commute with every generator.
#[derive(Debug, Clone, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(Word::unit(), c)
    }

    pub fn generator(g: GenSymbol) -> Self {
        Self::term(Word(vec![g]), RatFunc::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn term(w: Word, c: RatFunc) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, RatFunc)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RatFunc)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Highest word length present (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, deg: usize) -> bool {
        self.terms.keys().all(|w| w.len() == deg)
    }

    pub fn generators(&self) -> impl Iterator<Item = GenSymbol> + '_ {
        self.terms.keys().flat_map(|w| w.0.iter().copied())
    }

    /// `Some(c)` if the polynomial is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        (0..e).fold(NCPoly::one(), |acc, _| &acc * self)
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(&RatFunc) -> Result<RatFunc>) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes parameters in every coefficient.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<NCPoly> {
        self.try_map_coeffs(|c| c.substitute(bindings))
    }
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self.terms.iter().zip(&other.terms).all(|((w1, c1), (w2, c2))| w1 == w2 && c1 == c2)
    }
}

impl Eq for NCPoly {}

impl From<GenSymbol> for NCPoly {
    fn from(g: GenSymbol) -> Self {
        NCPoly::generator(g)
    }
}

impl From<RatFunc> for NCPoly {
    fn from(c: RatFunc) -> Self {
        NCPoly::scalar(c)
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly { (&self).$m(&rhs) }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: &NCPoly) -> NCPoly { (&self).$m(rhs) }
        }
        impl $tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

/// Splits a coefficient into a sign and a printable magnitude.
fn signed_coeff(c: &RatFunc) -> (bool, String, bool) {
    let neg_c = -c;
    let negative = c.is_polynomial() && c.num().len() == 1 && c.num().leading_is_negative();
    let mag = if negative { neg_c } else { c.clone() };
    let text = mag.to_string();
    let simple = mag.is_polynomial() && mag.num().len() == 1;
    (negative, text, simple)
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (negative, text, simple) = signed_coeff(c);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = text == "1";
            if w.is_empty() {
                if simple {
                    f.write_str(&text)?;
                } else {
                    write!(f, "({text})")?;
                }
            } else {
                if !unit {
                    if simple {
                        write!(f, "{text}*")?;
                    } else {
                        write!(f, "({text})*")?;
                    }
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}
