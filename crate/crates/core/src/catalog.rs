//! The three deformation families and their R̂(K) matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ncalgebra::parse::nc;
use crate::ncalgebra::{GenSymbol, NCPoly, RewriteSystem, Word};
use crate::pmatrix::{flip21, perm_operator, Matrix, ParamMatrix, PermOperator};
use crate::scalars::{QuadExt, RatFunc, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deformation {
    /// Standard biparametric GL(2).
    Pq,
    /// Nonstandard (Jordanian) biparametric GL(2).
    Gh,
    /// Hybrid deformation of GL(1/1).
    Qh,
}

impl Deformation {
    pub const ALL: [Deformation; 3] = [Deformation::Pq, Deformation::Gh, Deformation::Qh];

    pub fn name(self) -> &'static str {
        match self {
            Deformation::Pq => "pq",
            Deformation::Gh => "gh",
            Deformation::Qh => "qh",
        }
    }

    pub fn spec(self) -> DeformationSpec {
        DeformationSpec::new(self)
    }
}

impl fmt::Display for Deformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Deformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Deformation::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::UnsupportedDeformation(s.to_string()))
    }
}

fn v(x: Var) -> RatFunc {
    RatFunc::var(x)
}

fn int(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

fn rhat_pq(k: &RatFunc) -> ParamMatrix {
    let (p, q) = (v(Var::P), v(Var::Q));
    let (z, o) = (int(0), int(1));
    Matrix::from_rows(vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), &o - k, k / &p, z.clone()],
        vec![z.clone(), k * &q, &o - &(k * &q / &p), z.clone()],
        vec![z.clone(), z.clone(), z, o],
    ])
}

fn rhat_gh(k: &RatFunc) -> ParamMatrix {
    let (g, h) = (v(Var::G), v(Var::H));
    let (z, o) = (int(0), int(1));
    Matrix::from_rows(vec![
        vec![o.clone(), -(&h * k), &h * k, &g * &h * k],
        vec![z.clone(), &o - k, k.clone(), &g * k],
        vec![z.clone(), k.clone(), &o - k, -(&g * k)],
        vec![z.clone(), z.clone(), z, o],
    ])
}

fn rhat_qh(k: &RatFunc) -> ParamMatrix {
    let (q, h) = (v(Var::Q), v(Var::H));
    let (z, o) = (int(0), int(1));
    Matrix::from_rows(vec![
        vec![o.clone(), z.clone(), z.clone(), k * &h],
        vec![z.clone(), &o - k, k * &q, z.clone()],
        vec![z.clone(), k.clone(), &o - &(k * &q), z.clone()],
        vec![z.clone(), z.clone(), z, &o - &(k * &(&q + &o))],
    ])
}

/// A deformation together with its braid values and R̂ builder.
///
/// The builder is a plain function pointer so test fixtures can substitute a
/// deliberately corrupted matrix.
#[derive(Debug, Clone)]
pub struct DeformationSpec {
    pub id: Deformation,
    pub params: Vec<Var>,
    pub k1: RatFunc,
    pub k2: RatFunc,
    pub rhat: fn(&RatFunc) -> ParamMatrix,
}

impl DeformationSpec {
    pub fn new(id: Deformation) -> Self {
        match id {
            Deformation::Pq => DeformationSpec {
                id,
                params: vec![Var::P, Var::Q],
                k1: int(1),
                k2: v(Var::P) / v(Var::Q),
                rhat: rhat_pq,
            },
            Deformation::Gh => DeformationSpec {
                id,
                params: vec![Var::G, Var::H],
                k1: int(1),
                k2: int(1),
                rhat: rhat_gh,
            },
            Deformation::Qh => DeformationSpec {
                id,
                params: vec![Var::Q, Var::H],
                k1: int(1),
                k2: int(1) / v(Var::Q),
                rhat: rhat_qh,
            },
        }
    }

    pub fn all() -> Vec<DeformationSpec> {
        Deformation::ALL.into_iter().map(Self::new).collect()
    }

    /// Symbolic `K`.
    pub fn k_symbol() -> RatFunc {
        v(Var::K)
    }

    pub fn rhat(&self, k: &RatFunc) -> ParamMatrix {
        (self.rhat)(k)
    }

    /// `R = P·R̂`.
    pub fn r(&self, k: &RatFunc) -> ParamMatrix {
        &swap_matrix() * &self.rhat(k)
    }

    /// `(K/K₁ − 1)(K/K₂ − 1)`.
    pub fn mbe_factor(&self, k: &RatFunc) -> RatFunc {
        (k / &self.k1 - int(1)) * (k / &self.k2 - int(1))
    }

    /// `X = 2 − K/K₁ − K/K₂`.
    pub fn hecke_x(&self, k: &RatFunc) -> RatFunc {
        int(2) - k / &self.k1 - k / &self.k2
    }

    /// `1 − X = K/K₁ + K/K₂ − 1`.
    pub fn one_minus_x(&self, k: &RatFunc) -> RatFunc {
        k / &self.k1 + k / &self.k2 - int(1)
    }

    /// `P₁ = (R̂ − I)/(X − 2)` and `P₂ = (R̂ − (X − 1)I)/(2 − X)`.
    pub fn projectors(&self, k: &RatFunc) -> Result<(ParamMatrix, ParamMatrix)> {
        let x = self.hecke_x(k);
        let x_minus_2 = &x - &int(2);
        if x_minus_2.is_zero() {
            return Err(Error::DegenerateX);
        }
        let rh = self.rhat(k);
        let id = ParamMatrix::identity(4);
        let p1 = (&rh - &id).scale(&x_minus_2.inv()?);
        let p2 = (&rh - &id.scale(&(&x - &int(1)))).scale(&(-&x_minus_2).inv()?);
        Ok((p1, p2))
    }

    /// Flip-inverse partner `K' = K (K/K₁ + K/K₂ − 1)⁻¹`.
    pub fn kprime(&self, k: &RatFunc) -> Result<RatFunc> {
        k.checked_div(&self.one_minus_x(k))
    }

    /// `2K₁K₂/(K₁ + K₂)`, the value where `K' = K` and `R̂² = I`.
    pub fn triangular_k(&self) -> RatFunc {
        int(2) * &self.k1 * &self.k2 / (&self.k1 + &self.k2)
    }

    /// Oriented group relations of the quantum matrix `T = (a b; c d)`.
    pub fn group_system(&self) -> RewriteSystem {
        build_group_system(self.id)
    }
}

/// The 4×4 factor swap `P`.
pub fn swap_matrix() -> ParamMatrix {
    perm_operator(&PermOperator::transposition(2, 0, 1), 2)
}

fn word(s: &str) -> Word {
    Word(
        s.chars()
            .map(|c| c.to_string().parse::<GenSymbol>().expect("group letter"))
            .collect(),
    )
}

/// Group relations as printed (each `= 0`) and the word each one is solved for.
pub fn group_relations(id: Deformation) -> Vec<(NCPoly, Word)> {
    let table: &[(&str, &str)] = match id {
        Deformation::Pq => &[
            ("a*b - q*b*a", "ba"),
            ("p*a*c - c*a", "ca"),
            ("a*d - d*a - (q - p)*b*c", "da"),
            ("p*q*b*c - c*b", "cb"),
            ("p*b*d - d*b", "db"),
            ("c*d - q*d*c", "dc"),
        ],
        Deformation::Gh => &[
            ("c*a - (a*c - g*c^2)", "ca"),
            ("c*b - (b*c - g*d*c - h*a*c + g*h*c^2)", "cb"),
            ("c*d - (d*c - h*c^2)", "dc"),
            ("d*a - (a*d - g*d*c + h*a*c)", "da"),
            ("d*b - (b*d + g*(a*d - b*c + h*a*c - d^2))", "db"),
            ("b*a - (a*b - h*(a*d - b*c + h*a*c - a^2))", "ba"),
        ],
        Deformation::Qh => &[
            ("b*a - (a*b + h*c*d)", "ba"),
            ("a*c - q*c*a", "ca"),
            ("b*c - q*c*b", "cb"),
            ("d*c + q*c*d", "dc"),
            ("a*d - d*a + (1 - q)*c*b", "da"),
            ("b*d + d*b - h*c*a", "db"),
            ("h*a^2 - (h*d^2 + (q + 1)*b^2)", "aa"),
            ("c^2", "cc"),
        ],
    };
    table.iter().map(|(rel, lhs)| (nc(rel), word(lhs))).collect()
}

/// Orients the group relations with generator order `a < b < c < d`.
pub fn build_group_system(id: Deformation) -> RewriteSystem {
    let (rels, lhs): (Vec<NCPoly>, Vec<Word>) = group_relations(id).into_iter().unzip();
    RewriteSystem::from_relations(GenSymbol::GROUP.to_vec(), &rels, &lhs)
        .expect("built-in group relations orient cleanly")
}

/// Square of the irrational entry of `M`: `ρ = 2pq/(p + q)`.
pub fn m_rho() -> RatFunc {
    let (p, q) = (v(Var::P), v(Var::Q));
    int(2) * &p * &q / (&p + &q)
}

/// Upper triangular `M` with `((21)M)⁻¹·M = R(2p/(p+q); p, q)`.
///
/// Diagonal entries are `s = √ρ` and `1/s`; the off-diagonal entry is solved
/// from the factorization itself, which fixes it to `s·R₂₃/ρ`.
pub fn build_m() -> Matrix<QuadExt> {
    let pq = DeformationSpec::new(Deformation::Pq);
    let rho = m_rho();
    let r = pq.r(&pq.triangular_k());
    let s = QuadExt::sqrt(&rho);
    let s_inv = QuadExt::new(RatFunc::zero(), rho.inv().expect("rho is nonzero"), &rho);
    // ((21)M)⁻¹M has (1,2) entry s·m, so m = R[1][2]/s = R[1][2]·s/ρ
    let m12 = QuadExt::new(RatFunc::zero(), r.get(1, 2) / &rho, &rho);
    let one = QuadExt::base(int(1));
    let zero = QuadExt::base(int(0));
    Matrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), s, m12, zero.clone()],
        vec![zero.clone(), zero.clone(), s_inv, zero.clone()],
        vec![zero.clone(), zero.clone(), zero, one],
    ])
}

/// `((21)M)⁻¹·M`.
pub fn m_factorization(m: &Matrix<QuadExt>) -> Result<Matrix<QuadExt>> {
    Ok(&flip21(m)?.inverse()? * m)
}
