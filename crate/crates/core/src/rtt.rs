//! RTT relations `R·T₁T₂ = T₂T₁·R` for the 2×2 quantum matrix `T = (a b; c d)`.

use std::collections::BTreeSet;

use crate::catalog::DeformationSpec;
use crate::error::{Error, Result};
use crate::ncalgebra::{normal_order, GenSymbol, NCPoly, RewriteSystem, Word};
use crate::pmatrix::{Matrix, ParamMatrix};
use crate::scalars::RatFunc;

/// Residual grid, row-major 4×4.
pub type Residual = Vec<Vec<NCPoly>>;

fn t_entry(i: usize, j: usize) -> GenSymbol {
    GenSymbol::GROUP[2 * i + j]
}

/// Normal forms of `T₁T₂` and `T₂T₁`, indexed by composite `(ik),(jl)`.
fn ordered_products(sys: &RewriteSystem) -> Result<(Residual, Residual)> {
    let mut t12 = vec![vec![NCPoly::zero(); 4]; 4];
    let mut t21 = vec![vec![NCPoly::zero(); 4]; 4];
    for (row, (i, k)) in pairs().enumerate() {
        for (col, (j, l)) in pairs().enumerate() {
            let (tij, tkl) = (t_entry(i, j), t_entry(k, l));
            t12[row][col] = normal_order(&NCPoly::word(Word(vec![tij, tkl])), sys)?;
            t21[row][col] = normal_order(&NCPoly::word(Word(vec![tkl, tij])), sys)?;
        }
    }
    Ok((t12, t21))
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..2).flat_map(|i| (0..2).map(move |k| (i, k)))
}

fn combine(r: &ParamMatrix, t12: &Residual, t21: &Residual) -> Residual {
    let mut out = vec![vec![NCPoly::zero(); 4]; 4];
    for (row, out_row) in out.iter_mut().enumerate() {
        for (col, cell) in out_row.iter_mut().enumerate() {
            for m in 0..4 {
                let left = r.get(row, m);
                if !left.is_zero() {
                    *cell = &*cell + &t12[m][col].scale(left);
                }
                let right = r.get(m, col);
                if !right.is_zero() {
                    *cell = &*cell - &t21[row][m].scale(right);
                }
            }
        }
    }
    out
}

/// `R·T₁T₂ − T₂T₁·R` with every entry in normal form.
pub fn rtt_residual(r: &ParamMatrix, sys: &RewriteSystem) -> Result<Residual> {
    if r.rows() != 4 || r.cols() != 4 {
        return Err(Error::DimensionMismatch {
            expected: "4x4".into(),
            found: format!("{}x{}", r.rows(), r.cols()),
        });
    }
    let (t12, t21) = ordered_products(sys)?;
    Ok(combine(r, &t12, &t21))
}

pub fn residual_is_zero(res: &Residual) -> bool {
    res.iter().flatten().all(NCPoly::is_zero)
}

/// Linear constraints on the 16 entries of `R` (row-major unknowns).
#[derive(Debug, Clone)]
pub struct RttSystem {
    pub unknowns: Vec<String>,
    /// `(row, col, word)` of the residual coefficient each equation row encodes.
    pub rows: Vec<(usize, usize, Word)>,
    pub equations: ParamMatrix,
}

impl RttSystem {
    pub fn rank(&self) -> Result<usize> {
        self.equations.rank()
    }

    pub fn nullspace(&self) -> Result<Vec<Vec<RatFunc>>> {
        self.equations.nullspace()
    }
}

/// Builds the coefficient matrix by feeding each unit matrix through the residual.
pub fn assemble_with(sys: &RewriteSystem) -> Result<RttSystem> {
    let (t12, t21) = ordered_products(sys)?;
    let columns: Vec<Residual> = (0..16)
        .map(|e| {
            let mut unit = ParamMatrix::zeros(4, 4);
            unit.set(e / 4, e % 4, RatFunc::one());
            combine(&unit, &t12, &t21)
        })
        .collect();
    let mut rows = Vec::new();
    for row in 0..4 {
        for col in 0..4 {
            let words: BTreeSet<Word> = columns
                .iter()
                .flat_map(|c| c[row][col].terms().map(|(w, _)| w.clone()))
                .collect();
            rows.extend(words.into_iter().map(|w| (row, col, w)));
        }
    }
    let equations = Matrix::from_fn(rows.len(), 16, |i, e| {
        let (row, col, w) = &rows[i];
        columns[e][*row][*col].coefficient(w)
    });
    let unknowns = (0..16).map(|e| format!("R{}{}", e / 4 + 1, e % 4 + 1)).collect();
    Ok(RttSystem { unknowns, rows, equations })
}

pub fn assemble(d: &DeformationSpec) -> Result<RttSystem> {
    assemble_with(&d.group_system())
}

fn reshape(v: &[RatFunc]) -> ParamMatrix {
    Matrix::from_fn(4, 4, |i, j| v[4 * i + j].clone())
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn span_coordinates(basis: &[ParamMatrix], target: &ParamMatrix) -> Result<Vec<RatFunc>> {
    let n = basis.len();
    // columns: basis vectors then the target
    let a = Matrix::from_fn(16, n + 1, |i, j| {
        let m = if j < n { &basis[j] } else { target };
        m.get(i / 4, i % 4).clone()
    });
    let null = a.nullspace()?;
    let hit = null.iter().find(|v| !v[n].is_zero()).ok_or(Error::SpanMismatch)?;
    let scale = (-hit[n].clone()).inv()?;
    Ok(hit[..n].iter().map(|c| c * &scale).collect())
}

/// Nullspace basis of the RTT system as 4×4 matrices, checked against the catalog.
pub fn solve_family(d: &DeformationSpec) -> Result<Vec<ParamMatrix>> {
    let basis: Vec<ParamMatrix> = assemble(d)?.nullspace()?.iter().map(|v| reshape(v)).collect();
    let target = d.r(&DeformationSpec::k_symbol());
    span_coordinates(&basis, &target)?;
    Ok(basis)
}

/// Writes the catalog `R(K)` as `c₀·A + c₁·B` in the returned basis.
pub fn catalog_coordinates(d: &DeformationSpec, basis: &[ParamMatrix]) -> Result<Vec<RatFunc>> {
    span_coordinates(basis, &d.r(&DeformationSpec::k_symbol()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Deformation;
    use crate::pmatrix::flip21;
    use crate::scalars::{Rational, Var};
    use crate::testutil::{plain_rank, random_point};

    fn k() -> RatFunc {
        DeformationSpec::k_symbol()
    }

    #[test]
    fn catalog_matrices_satisfy_rtt() {
        for d in DeformationSpec::all() {
            let res = rtt_residual(&d.r(&k()), &d.group_system()).unwrap();
            assert!(residual_is_zero(&res), "{}", d.id);
        }
    }

    #[test]
    fn identity_does_not_satisfy_pq_rtt() {
        let d = Deformation::Pq.spec();
        let res = rtt_residual(&ParamMatrix::identity(4), &d.group_system()).unwrap();
        assert!(!residual_is_zero(&res));
        // R = I gives a·b − b·a at entry (xx, xy), which normal-orders to (1 − q⁻¹)·a·b
        let ab = Word(vec![GenSymbol::A, GenSymbol::B]);
        assert_eq!(res[0][1].coefficient(&ab), RatFunc::one() - RatFunc::var(Var::Q).inv().unwrap());
    }

    #[test]
    fn rhat_instead_of_r_fails() {
        let d = Deformation::Pq.spec();
        let res = rtt_residual(&d.rhat(&k()), &d.group_system()).unwrap();
        assert!(!residual_is_zero(&res));
    }

    #[test]
    fn nullspace_dimension_two() {
        for d in DeformationSpec::all() {
            let sys = assemble(&d).unwrap();
            assert_eq!(sys.equations.cols(), 16);
            assert_eq!(sys.rank().unwrap(), 14, "{}", d.id);
        }
    }

    // Independent check: specialise parameters to random rationals before
    // assembling, then eliminate with plain rational arithmetic.
    #[test]
    fn rank_oracle_at_random_points() {
        for d in DeformationSpec::all() {
            for seed in 0..3 {
                let point = random_point(&d.params, seed);
                let sys = d
                    .group_system()
                    .try_map_coeffs(|c| c.eval(&point).map(RatFunc::from_rational))
                    .unwrap();
                let eqs = assemble_with(&sys).unwrap().equations;
                let numeric: Vec<Vec<Rational>> = (0..eqs.rows())
                    .map(|i| eqs.row(i).iter().map(|c| c.constant_value().unwrap()).collect())
                    .collect();
                assert_eq!(16 - plain_rank(numeric), 2, "{} seed {seed}", d.id);
            }
        }
    }

    #[test]
    fn solutions_satisfy_rtt_and_span_catalog() {
        for d in DeformationSpec::all() {
            let sys = d.group_system();
            let basis = solve_family(&d).unwrap();
            assert_eq!(basis.len(), 2);
            for b in &basis {
                assert!(residual_is_zero(&rtt_residual(b, &sys).unwrap()));
            }
            let coords = catalog_coordinates(&d, &basis).unwrap();
            let rebuilt = &basis[0].scale(&coords[0]) + &basis[1].scale(&coords[1]);
            assert_eq!(rebuilt, d.r(&k()));
        }
    }

    #[test]
    fn family_is_affine_in_k() {
        // R(K) = R(0) + K·(R(1) − R(0)) spans the same plane as the nullspace
        for d in DeformationSpec::all() {
            let basis = solve_family(&d).unwrap();
            let r0 = d.r(&RatFunc::zero());
            let slope = &d.r(&RatFunc::one()) - &r0;
            assert!(span_coordinates(&basis, &r0).is_ok());
            assert!(span_coordinates(&basis, &slope).is_ok());
        }
    }

    #[test]
    fn span_closed_under_flip_inverse() {
        for d in DeformationSpec::all() {
            let basis = solve_family(&d).unwrap();
            let flipped = flip21(&d.r(&k())).unwrap().inverse().unwrap();
            assert!(span_coordinates(&basis, &flipped).is_ok(), "{}", d.id);
        }
    }

    #[test]
    fn non_member_is_rejected() {
        let d = Deformation::Gh.spec();
        let basis = solve_family(&d).unwrap();
        assert_eq!(
            span_coordinates(&basis, &ParamMatrix::identity(4)).unwrap_err(),
            Error::SpanMismatch
        );
    }
}
