//! Numeric shadow of the braid values: `‖braid residual‖_F` along a K grid.
//!
//! Each residual is evaluated exactly; only the final norm is rounded.

use std::io::Write;

use anyhow::{bail, Context};
use mbe_core::identities::braid_residual;
use mbe_core::{DeformationSpec, Rational, Var};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub k: Rational,
    /// Exact `Σ rᵢⱼ²`.
    pub residual_sq: Rational,
}

impl ScanRow {
    pub fn residual_fro(&self) -> f64 {
        self.residual_sq.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

/// `steps` evenly spaced points from `kmin` to `kmax` inclusive.
pub fn grid(kmin: &Rational, kmax: &Rational, steps: u32) -> Vec<Rational> {
    let span = kmax - kmin;
    let last = Rational::from_integer((steps - 1).into());
    (0..steps).map(|i| kmin + &span * Rational::from_integer(i.into()) / &last).collect()
}

pub fn run_scan(d: &DeformationSpec, bindings: &[(Var, Rational)], ks: &[Rational]) -> anyhow::Result<Vec<ScanRow>> {
    for v in &d.params {
        if !bindings.iter().any(|(b, _)| b == v) {
            bail!("deformation {} needs a value for --{}", d.id, v.name());
        }
    }
    let residual = braid_residual(d, &DeformationSpec::k_symbol())?;
    ks.par_iter()
        .map(|k| {
            let mut point = bindings.to_vec();
            point.push((Var::K, k.clone()));
            let mut sq = Rational::zero();
            for e in residual.entries() {
                let v = e.eval(&point).with_context(|| format!("evaluating at K = {k}"))?;
                sq += &v * &v;
            }
            Ok(ScanRow { k: k.clone(), residual_sq: sq })
        })
        .collect()
}

/// 17 significant digits.
fn decimal(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv(rows: &[ScanRow], out: impl Write) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["K", "residual_fro"])?;
    for r in rows {
        let k = r.k.to_f64().context("K does not fit in a double")?;
        w.write_record([decimal(k), decimal(r.residual_fro())])?;
    }
    w.flush()?;
    Ok(())
}
