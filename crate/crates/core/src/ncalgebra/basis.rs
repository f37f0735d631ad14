use std::collections::BTreeMap;

use super::{GenSymbol, NCPoly, Word};
use crate::error::{Error, Result};
use crate::pmatrix::Matrix;
use crate::scalars::RatFunc;

/// Images of generators under a linear change of generators. Letters without
/// an entry map to themselves.
pub type LinearMap = BTreeMap<GenSymbol, NCPoly>;

/// Replaces every letter by its image and expands.
pub fn change_of_basis(p: &NCPoly, map: &LinearMap) -> Result<NCPoly> {
    for (g, image) in map {
        if image.is_zero() || !image.is_homogeneous(1) {
            return Err(Error::NotLinear(g.to_string()));
        }
    }
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = NCPoly::scalar(c.clone());
        for g in w.letters() {
            let image = map.get(g).cloned().unwrap_or_else(|| NCPoly::generator(*g));
            prod = &prod * &image;
        }
        out = &out + &prod;
    }
    Ok(out)
}

/// Inverts a linear map sending each of `sources` into the span of `targets`.
/// The result sends each target to a combination of sources.
pub fn invert_linear_map(map: &LinearMap, sources: &[GenSymbol], targets: &[GenSymbol]) -> Result<LinearMap> {
    let n = sources.len();
    if targets.len() != n {
        return Err(Error::NotInvertible);
    }
    let image = |s: GenSymbol| map.get(&s).cloned().unwrap_or_else(|| NCPoly::generator(s));
    for &s in sources {
        let img = image(s);
        if !img.is_homogeneous(1) || img.is_zero() {
            return Err(Error::NotLinear(s.to_string()));
        }
        if img.generators().any(|g| !targets.contains(&g)) {
            return Err(Error::NotInvertible);
        }
    }
    // column j holds the coordinates of image(sources[j]) in the target basis
    let m: Matrix<RatFunc> = Matrix::from_fn(n, n, |i, j| image(sources[j]).coefficient(&Word(vec![targets[i]])));
    let inv = m.inverse().map_err(|_| Error::NotInvertible)?;
    let mut out = LinearMap::new();
    for (i, &t) in targets.iter().enumerate() {
        let mut img = NCPoly::zero();
        for (j, &s) in sources.iter().enumerate() {
            img = &img + &NCPoly::term(Word(vec![s]), inv.get(j, i).clone());
        }
        out.insert(t, img);
    }
    Ok(out)
}
