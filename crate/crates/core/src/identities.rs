//! Matrix identities of the K-family: modified braid equation, braid values,
//! S-shift, affine decomposition and the Baxterization ansatz.

use crate::catalog::{Deformation, DeformationSpec};
use crate::error::{Error, Result};
use crate::pmatrix::{embed12, embed23, perm_operator, Matrix, ParamMatrix, PermOperator};
use crate::scalars::{QuadExt, RatFunc, Scalar};

#[derive(Debug, Clone)]
pub struct MbeReport {
    pub deformation: Deformation,
    pub lhs_minus_rhs: ParamMatrix,
    pub is_zero: bool,
    pub factor: RatFunc,
    /// `c` with `R̂₁₂R̂₂₃R̂₁₂ − R̂₂₃R̂₁₂R̂₂₃ = c·(R̂₂₃ − R̂₁₂)`, if such a scalar exists.
    pub measured: Option<RatFunc>,
}

/// `A₁₂A₂₃A₁₂ − A₂₃A₁₂A₂₃` for a 4×4 `A`.
pub fn braid_lhs<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let (a12, a23) = (embed12(a)?, embed23(a)?);
    Ok(&(&(&a12 * &a23) * &a12) - &(&(&a23 * &a12) * &a23))
}

/// The braid combination with the roles of the two embeddings exchanged.
pub fn braid_lhs_swapped<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let (a12, a23) = (embed12(a)?, embed23(a)?);
    Ok(&(&(&a23 * &a12) * &a23) - &(&(&a12 * &a23) * &a12))
}

/// `A₂₃ − A₁₂`.
pub fn embedding_difference<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    Ok(&embed23(a)? - &embed12(a)?)
}

fn mbe_defect<T: Scalar>(a: &Matrix<T>, factor: &T) -> Result<Matrix<T>> {
    Ok(&braid_lhs(a)? - &embedding_difference(a)?.scale(factor))
}

/// The scalar `c` with `m = c·dir`, if one exists.
pub fn proportionality(m: &ParamMatrix, dir: &ParamMatrix) -> Option<RatFunc> {
    let Some(i) = dir.entries().iter().position(|e| !e.is_zero()) else {
        return m.is_zero().then(RatFunc::zero);
    };
    let c = &m.entries()[i] / &dir.entries()[i];
    (dir.scale(&c) == *m).then_some(c)
}

/// `R̂₁₂R̂₂₃R̂₁₂ − R̂₂₃R̂₁₂R̂₂₃ − λ(R̂₂₃ − R̂₁₂)` with `λ = (K/K₁ − 1)(K/K₂ − 1)`.
pub fn mbe_residual(d: &DeformationSpec, k: &RatFunc) -> Result<MbeReport> {
    let rh = d.rhat(k);
    let factor = d.mbe_factor(k);
    let lhs = braid_lhs(&rh)?;
    let dir = embedding_difference(&rh)?;
    let lhs_minus_rhs = &lhs - &dir.scale(&factor);
    Ok(MbeReport {
        deformation: d.id,
        is_zero: lhs_minus_rhs.is_zero(),
        lhs_minus_rhs,
        factor,
        measured: proportionality(&lhs, &dir),
    })
}

/// The modified braid equation with the opposite orientation,
/// `R̂₁₂R̂₂₃R̂₁₂ − R̂₂₃R̂₁₂R̂₂₃ = λ(R̂₁₂ − R̂₂₃)`.
pub fn mbe_reversed_residual(d: &DeformationSpec, k: &RatFunc) -> Result<ParamMatrix> {
    mbe_defect(&d.rhat(k), &-d.mbe_factor(k))
}

/// Left side of the plain braid equation for `R̂(K)`.
pub fn braid_residual(d: &DeformationSpec, k: &RatFunc) -> Result<ParamMatrix> {
    braid_lhs(&d.rhat(k))
}

/// Whether every braid residual entry at symbolic `K` is a multiple of
/// `(K − K₁)(K − K₂)` (after clearing parameter denominators).
pub fn braid_divisible(d: &DeformationSpec) -> Result<bool> {
    let k = DeformationSpec::k_symbol();
    let factor = (&k - &d.k1) * (&k - &d.k2);
    let f = factor.num();
    let res = braid_residual(d, &k)?;
    Ok(res.entries().iter().all(|e| e.num().exact_div(f).is_some()))
}

/// Factor permutations `(123)` and `(213)` on three tensor factors.
pub fn cyclic_operators() -> (ParamMatrix, ParamMatrix) {
    (
        perm_operator(&PermOperator::cycle(3, &[1, 2, 3]), 2),
        perm_operator(&PermOperator::cycle(3, &[2, 1, 3]), 2),
    )
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` and `(123)R₁₂ − (213)R₂₃` with `R = P·R̂`,
/// where `R₁₃` is `R₁₂` conjugated by the swap of factors 2 and 3.
pub fn r_form_sides(d: &DeformationSpec, k: &RatFunc) -> Result<(ParamMatrix, ParamMatrix)> {
    let r = d.r(k);
    let r12 = embed12(&r)?;
    let r23 = embed23(&r)?;
    let p23: ParamMatrix = perm_operator(&PermOperator::transposition(3, 1, 2), 2);
    let r13 = &(&p23 * &r12) * &p23;
    let lhs = &(&(&r12 * &r13) * &r23) - &(&(&r23 * &r13) * &r12);
    let (c123, c213) = cyclic_operators();
    Ok((lhs, &(&c123 * &r12) - &(&c213 * &r23)))
}

pub fn mbe_r_form_residual(d: &DeformationSpec, k: &RatFunc) -> Result<ParamMatrix> {
    let (lhs, dir) = r_form_sides(d, k)?;
    Ok(&lhs - &dir.scale(&d.mbe_factor(k)))
}

/// R-form identity with factor `λ`.
pub fn mbe_r_form(d: &DeformationSpec, k: &RatFunc) -> Result<bool> {
    Ok(mbe_r_form_residual(d, k)?.is_zero())
}

/// The scalar actually multiplying `(123)R₁₂ − (213)R₂₃`.
pub fn r_form_coefficient(d: &DeformationSpec, k: &RatFunc) -> Result<Option<RatFunc>> {
    let (lhs, dir) = r_form_sides(d, k)?;
    Ok(proportionality(&lhs, &dir))
}

/// `Ŝ = R̂ − μI` against `(λ + Xμ − μ²)(Ŝ₂₃ − Ŝ₁₂)`.
pub fn s_shift_check(d: &DeformationSpec, k: &RatFunc, mu: &RatFunc) -> Result<bool> {
    s_shift_with(d, k, mu, &d.mbe_factor(k))
}

/// As [`s_shift_check`] with an explicit braid coefficient in place of `λ`.
pub fn s_shift_with(d: &DeformationSpec, k: &RatFunc, mu: &RatFunc, lambda: &RatFunc) -> Result<bool> {
    let s = &d.rhat(k) - &ParamMatrix::identity(4).scale(mu);
    let factor = lambda + &(d.hecke_x(k) * mu) - mu * mu;
    Ok(mbe_defect(&s, &factor)?.is_zero())
}

/// Shifts by the root `μ = (X + √(X² + 4c))/2` of `μ² − Xμ − c` and checks that
/// `Ŝ` then satisfies the plain braid equation over the extension.
pub fn s_shift_root_check(d: &DeformationSpec, k: &RatFunc, c: &RatFunc) -> Result<bool> {
    let x = d.hecke_x(k);
    let rho = &x * &x + RatFunc::from_int(4) * c;
    let half = RatFunc::from_rational(crate::scalars::rat(1, 2));
    let mu = QuadExt::new(&x * &half, half, &rho);
    let root_poly = mu.mul(&mu).sub(&QuadExt::base(x.clone()).mul(&mu)).sub(&QuadExt::base(c.clone()));
    if !root_poly.is_zero() {
        return Ok(false);
    }
    let rh = d.rhat(k).map(|e| QuadExt::base(e.clone()));
    let s = &rh - &Matrix::<QuadExt>::identity(4).scale(&mu);
    Ok(braid_lhs(&s)?.is_zero())
}

/// `R̂(K) = c₁R̂(K₁) + c₂R̂(K₂)` with `c₁ + c₂ = 1`, `c₁K₁ + c₂K₂ = K`.
pub fn affine_decomposition(d: &DeformationSpec, k: &RatFunc) -> Result<bool> {
    let gap = &d.k2 - &d.k1;
    if gap.is_zero() {
        return Err(Error::DegenerateValues);
    }
    let c1 = (&d.k2 - k) / &gap;
    let c2 = (k - &d.k1) / &gap;
    let combo = &d.rhat(&d.k1).scale(&c1) + &d.rhat(&d.k2).scale(&c2);
    Ok(combo == d.rhat(k))
}

/// `R̂(K) = (K/Kᵢ)·R̂(Kᵢ) − (K/Kᵢ − 1)·I` for `i ∈ {1, 2}`.
pub fn baxterization_check(d: &DeformationSpec, k: &RatFunc, i: usize) -> Result<bool> {
    let ki = match i {
        1 => &d.k1,
        2 => &d.k2,
        _ => {
            return Err(Error::DimensionMismatch { expected: "1 or 2".into(), found: i.to_string() })
        }
    };
    let ratio = k.checked_div(ki)?;
    let rhs = &d.rhat(ki).scale(&ratio) - &ParamMatrix::identity(4).scale(&(&ratio - &RatFunc::one()));
    Ok(rhs == d.rhat(k))
}

/// `R̂(K) − R̂(0)` divided by `K`, when the family is affine in `K`.
pub fn k_slope(d: &DeformationSpec) -> Result<ParamMatrix> {
    let k = DeformationSpec::k_symbol();
    let r0 = d.rhat(&RatFunc::zero());
    let slope = &d.rhat(&RatFunc::one()) - &r0;
    if &r0 + &slope.scale(&k) != d.rhat(&k) {
        return Err(Error::NotLinear("R̂ is not affine in K".into()));
    }
    Ok(slope)
}
