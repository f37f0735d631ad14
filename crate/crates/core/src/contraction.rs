//! The singular limit `(p, q) → (g, h)`.
//!
//! Everything runs along the rational curve `p = 1 − g·u`, `q = 1 + h·u`,
//! `ω = 1/u`, so `(1 − p)ω = g` and `(q − 1)ω = h` hold exactly and the limit
//! is a plain `u → 0` evaluation after cancellation.

use crate::catalog::{group_relations, Deformation, DeformationSpec};
use crate::error::Result;
use crate::ncalgebra::parse::nc;
use crate::ncalgebra::{change_of_basis, invert_linear_map, normal_order, GenSymbol, LinearMap, NCPoly, RewriteSystem, Word};
use crate::plane::{phi_for, PLANE_ORDER};
use crate::pmatrix::{kron, ParamMatrix};
use crate::scalars::{RatFunc, Var};

/// The contraction curve and the conjugating matrix `G = ((1, ω), (0, 1))`.
#[derive(Debug, Clone)]
pub struct ContractionFrame {
    pub substitutions: Vec<(Var, RatFunc)>,
    pub gmatrix: ParamMatrix,
}

/// One contracted identity: the limit of its defect, which should vanish.
#[derive(Debug, Clone)]
pub struct ContractedIdentity {
    pub name: String,
    pub limit: NCPoly,
}

impl ContractedIdentity {
    pub fn holds(&self) -> bool {
        self.limit.is_zero()
    }
}

impl Default for ContractionFrame {
    fn default() -> Self {
        Self::new()
    }
}

impl ContractionFrame {
    pub fn new() -> Self {
        let (g, h, u) = (RatFunc::var(Var::G), RatFunc::var(Var::H), RatFunc::var(Var::U));
        let one = RatFunc::one();
        let substitutions = vec![(Var::P, &one - &(&g * &u)), (Var::Q, &one + &(&h * &u))];
        let omega = Self::omega();
        let gmatrix = ParamMatrix::from_rows(vec![vec![one.clone(), omega], vec![RatFunc::zero(), one]]);
        ContractionFrame { substitutions, gmatrix }
    }

    /// `ω = 1/u`.
    pub fn omega() -> RatFunc {
        RatFunc::var(Var::U).inv().expect("u is nonzero")
    }

    /// Moves a scalar onto the curve without taking the limit.
    pub fn on_curve(&self, f: &RatFunc) -> Result<RatFunc> {
        f.substitute(&self.substitutions)
    }

    pub fn limit(&self, f: &RatFunc) -> Result<RatFunc> {
        self.on_curve(f)?.limit_u0()
    }

    fn limit_poly(&self, p: &NCPoly) -> Result<NCPoly> {
        p.try_map_coeffs(|c| self.limit(c))
    }

    /// `(G⁻¹⊗G⁻¹)·m·(G⊗G)` before any substitution.
    pub fn conjugate(&self, m: &ParamMatrix) -> Result<ParamMatrix> {
        let gg = kron(&self.gmatrix, &self.gmatrix);
        let ginv = self.gmatrix.inverse()?;
        kron(&ginv, &ginv).try_mul(m)?.try_mul(&gg)
    }

    /// Entries of `G⁻¹·T·G` for `T = ((a, b), (c, d))`, as images of the tilde letters.
    pub fn group_map(&self) -> Result<LinearMap> {
        let t = [[GenSymbol::A, GenSymbol::B], [GenSymbol::C, GenSymbol::D]];
        let ginv = self.gmatrix.inverse()?;
        let entry = |i: usize, j: usize| {
            let mut acc = NCPoly::zero();
            for (k, row) in t.iter().enumerate() {
                for (l, &sym) in row.iter().enumerate() {
                    let c = ginv.get(i, k) * self.gmatrix.get(l, j);
                    acc = &acc + &NCPoly::term(Word(vec![sym]), c);
                }
            }
            acc
        };
        Ok(LinearMap::from([
            (GenSymbol::TildeA, entry(0, 0)),
            (GenSymbol::TildeB, entry(0, 1)),
            (GenSymbol::TildeC, entry(1, 0)),
            (GenSymbol::TildeD, entry(1, 1)),
        ]))
    }

    /// `G⁻¹·(x, y)ᵀ` and `G⁻¹·(ξ, η)ᵀ` as images of the tilde letters.
    pub fn plane_map(&self) -> Result<LinearMap> {
        let ginv = self.gmatrix.inverse()?;
        let column = |top: GenSymbol, bottom: GenSymbol, i: usize| {
            &NCPoly::term(Word(vec![top]), ginv.get(i, 0).clone())
                + &NCPoly::term(Word(vec![bottom]), ginv.get(i, 1).clone())
        };
        Ok(LinearMap::from([
            (GenSymbol::TildeX, column(GenSymbol::X, GenSymbol::Y, 0)),
            (GenSymbol::TildeY, column(GenSymbol::X, GenSymbol::Y, 1)),
            (GenSymbol::TildeXi, column(GenSymbol::Xi, GenSymbol::Eta, 0)),
            (GenSymbol::TildeEta, column(GenSymbol::Xi, GenSymbol::Eta, 1)),
        ]))
    }

    /// The pq relations rewritten in tilde letters on the curve, oriented by
    /// solving for the words the `(g, h)` rules eliminate.
    fn tilde_system(&self, forward: &LinearMap, plain: &[GenSymbol], relations: &[NCPoly], lhs: &[Word]) -> Result<RewriteSystem> {
        let tildes: Vec<GenSymbol> = plain.iter().map(|g| g.tilde()).collect();
        let backward = invert_linear_map(forward, &tildes, plain)?;
        let rels = relations
            .iter()
            .map(|r| change_of_basis(r, &backward)?.substitute(&self.substitutions))
            .collect::<Result<Vec<_>>>()?;
        let lhs: Vec<Word> = lhs.iter().map(|w| Word(w.letters().iter().map(|g| g.tilde()).collect())).collect();
        let order = tildes.to_vec();
        RewriteSystem::from_relations(order, &rels, &lhs)
    }

    /// Normal-orders a tilde defect in the deformed tilde system, then takes
    /// the limit coefficientwise.
    fn contract_defect(&self, defect: &NCPoly, sys: &RewriteSystem) -> Result<NCPoly> {
        let on_curve = defect.substitute(&self.substitutions)?;
        self.limit_poly(&normal_order(&on_curve, sys)?)
    }

    /// Group relations of the pq algebra in tilde letters.
    pub fn group_tilde_system(&self) -> Result<RewriteSystem> {
        let (rels, _): (Vec<NCPoly>, Vec<Word>) = group_relations(Deformation::Pq).into_iter().unzip();
        let (_, lhs): (Vec<NCPoly>, Vec<Word>) = group_relations(Deformation::Gh).into_iter().unzip();
        self.tilde_system(&self.group_map()?, &GenSymbol::GROUP, &rels, &lhs)
    }

    /// Coordinate and differential relations of the pq plane in tilde letters.
    pub fn plane_tilde_system(&self) -> Result<RewriteSystem> {
        let rels: Vec<NCPoly> = ["y*x - p*x*y", "xi^2", "eta^2", "eta*xi + q*xi*eta"].iter().map(|t| nc(t)).collect();
        let lhs: Vec<Word> = [[GenSymbol::Y, GenSymbol::X], [GenSymbol::Xi, GenSymbol::Xi], [GenSymbol::Eta, GenSymbol::Eta], [GenSymbol::Eta, GenSymbol::Xi]]
            .iter()
            .map(|w| Word(w.to_vec()))
            .collect();
        self.tilde_system(&self.plane_map()?, &PLANE_ORDER, &rels, &lhs)
    }
}

/// Renames plain letters to their tilde counterparts.
pub fn tilde(p: &NCPoly) -> NCPoly {
    let map: LinearMap = GenSymbol::GROUP
        .iter()
        .chain(GenSymbol::PLANE.iter())
        .map(|&g| (g, NCPoly::generator(g.tilde())))
        .collect();
    change_of_basis(p, &map).expect("renaming is linear")
}

/// `lim (G⁻¹⊗G⁻¹)·R(K; p, q)·(G⊗G)` along the curve.
pub fn contract_matrix(k: &RatFunc) -> Result<ParamMatrix> {
    let frame = ContractionFrame::new();
    let conj = frame.conjugate(&Deformation::Pq.spec().r(k))?;
    conj.try_map(|e| frame.limit(e))
}

/// The conjugated matrix before substitution, in terms of `p, q, ω`.
pub fn conjugated_pq(k: &RatFunc) -> Result<ParamMatrix> {
    ContractionFrame::new().conjugate(&Deformation::Pq.spec().r(k))
}

/// Checks `contract_matrix(k) = P·R̂(K; g, h)`.
pub fn contract_matrix_matches(k: &RatFunc) -> Result<bool> {
    Ok(contract_matrix(k)? == DeformationSpec::new(Deformation::Gh).r(k))
}

/// Limits of the six `(g, h)` group relations, each written in tilde letters.
pub fn contracted_group_relations() -> Result<Vec<ContractedIdentity>> {
    let frame = ContractionFrame::new();
    let sys = frame.group_tilde_system()?;
    group_relations(Deformation::Gh)
        .into_iter()
        .map(|(rel, lhs)| {
            let limit = frame.contract_defect(&tilde(&rel), &sys)?;
            Ok(ContractedIdentity { name: format!("{}", tilde(&NCPoly::word(lhs))), limit })
        })
        .collect()
}

pub fn contract_group_relations() -> Result<bool> {
    Ok(contracted_group_relations()?.iter().all(ContractedIdentity::holds))
}

/// Limits of the `(g, h)` coordinate and differential relations and of
/// `Φ₁ − Φ₂` in tilde letters.
pub fn contracted_plane() -> Result<Vec<ContractedIdentity>> {
    let frame = ContractionFrame::new();
    let sys = frame.plane_tilde_system()?;
    let relations = [
        ("x y - y x - g y^2", "x*y - y*x - g*y^2"),
        ("ξ² - h ξη", "xi^2 - h*xi*eta"),
        ("η²", "eta^2"),
        ("ξη + ηξ", "xi*eta + eta*xi"),
    ];
    let mut out = Vec::new();
    for (name, text) in relations {
        let limit = frame.contract_defect(&tilde(&nc(text)), &sys)?;
        out.push(ContractedIdentity { name: name.to_string(), limit });
    }
    // Φ₁ needs no reordering: substitute the inverse map and compare directly.
    let forward = frame.plane_map()?;
    let tildes: Vec<GenSymbol> = PLANE_ORDER.iter().map(|g| g.tilde()).collect();
    let backward = invert_linear_map(&forward, &tildes, &PLANE_ORDER)?;
    let phi1 = change_of_basis(&phi_for(Deformation::Pq)?, &backward)?;
    let phi1 = frame.limit_poly(&phi1.substitute(&frame.substitutions)?)?;
    let phi2 = tilde(&phi_for(Deformation::Gh)?);
    out.push(ContractedIdentity { name: "Φ₁ → Φ₂".into(), limit: &phi1 - &phi2 });
    Ok(out)
}

pub fn contract_plane() -> Result<bool> {
    Ok(contracted_plane()?.iter().all(ContractedIdentity::holds))
}

/// Scalar limits `(p⁻¹ − q)ω → g − h` and `(pq − 1)ω → h − g`, plus the exact
/// identities `(1 − p)ω = g` and `(q − 1)ω = h` on the curve.
pub fn scalar_limits() -> Result<Vec<(String, bool)>> {
    let frame = ContractionFrame::new();
    let omega = ContractionFrame::omega();
    let v = RatFunc::var;
    let (p, q, g, h) = (v(Var::P), v(Var::Q), v(Var::G), v(Var::H));
    let one = RatFunc::one();
    let lim = |e: RatFunc| frame.limit(&e);
    let exact = |e: RatFunc| frame.on_curve(&e);
    Ok(vec![
        ("(1-p)ω = g".into(), exact(&(&one - &p) * &omega)? == g),
        ("(q-1)ω = h".into(), exact(&(&q - &one) * &omega)? == h),
        ("(1/p - q)ω → g - h".into(), lim(&(&p.inv()? - &q) * &omega)? == &g - &h),
        ("(pq - 1)ω → h - g".into(), lim(&(&(&p * &q) - &one) * &omega)? == &h - &g),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ncalgebra::parse::parse_scalar;

    fn k() -> RatFunc {
        DeformationSpec::k_symbol()
    }

    #[test]
    fn substitutions_are_exact_on_the_curve() {
        let checks = scalar_limits().unwrap();
        assert!(checks.iter().all(|(_, ok)| *ok), "{checks:?}");
    }

    #[test]
    fn symbolic_matrix_contracts_to_gh() {
        assert!(contract_matrix_matches(&k()).unwrap());
    }

    #[test]
    fn intermediate_matches_displayed_entries() {
        let m = conjugated_pq(&k()).unwrap();
        let s = |t: &str| parse_scalar(t).unwrap();
        let omega = ContractionFrame::omega();
        assert_eq!(*m.get(0, 1), &s("-K*(q - 1)") * &omega);
        assert_eq!(*m.get(0, 2), &s("K/p*(q - 1)") * &omega);
        assert_eq!(*m.get(0, 3), &s("-K/p*(p - 1)*(q - 1)") * &(&omega * &omega));
        assert_eq!(*m.get(1, 1), s("K*q"));
        assert_eq!(*m.get(1, 2), s("1 - K*q/p"));
        assert_eq!(*m.get(2, 1), s("1 - K"));
        assert_eq!(*m.get(1, 3), &s("K*q/p*(p - 1)") * &omega);
        assert_eq!(*m.get(3, 3), RatFunc::one());
    }

    #[test]
    fn identity_contracts_to_identity() {
        // R̂(0) = I₄, so R(0) = P and both survive conjugation unchanged
        let frame = ContractionFrame::new();
        let rhat0 = Deformation::Pq.spec().rhat(&RatFunc::zero());
        assert!(rhat0.is_identity());
        assert!(frame.conjugate(&rhat0).unwrap().is_identity());
        assert_eq!(contract_matrix(&RatFunc::zero()).unwrap(), crate::catalog::swap_matrix());
    }

    #[test]
    fn contraction_commutes_with_k_specialisation() {
        let family = contract_matrix(&k()).unwrap();
        for value in [1, 2, -3] {
            let kv = RatFunc::from_int(value);
            let special = family.try_map(|e| e.subs(Var::K, &kv)).unwrap();
            assert_eq!(special, contract_matrix(&kv).unwrap());
        }
    }

    #[test]
    fn unscaled_conjugation_diverges() {
        // without the curve, ω = 1/u multiplies entries that stay finite
        let frame = ContractionFrame::new();
        let conj = conjugated_pq(&k()).unwrap();
        assert_eq!(conj.get(0, 1).limit_u0(), Err(Error::PoleAtZero));
        assert!(frame.limit(conj.get(0, 1)).is_ok());
    }

    #[test]
    fn tilde_map_matches_generator_formulas() {
        let frame = ContractionFrame::new();
        let map = frame.group_map().unwrap();
        let omega = NCPoly::scalar(ContractionFrame::omega());
        let (a, b, c, d) = (nc("a"), nc("b"), nc("c"), nc("d"));
        let a_minus = &a - &(&omega * &c);
        assert_eq!(map[&GenSymbol::TildeA], a_minus);
        assert_eq!(map[&GenSymbol::TildeB], &(&b - &(&omega * &d)) + &(&omega * &a_minus));
        assert_eq!(map[&GenSymbol::TildeC], c);
        assert_eq!(map[&GenSymbol::TildeD], &d + &(&omega * &c));
        let plane = frame.plane_map().unwrap();
        assert_eq!(plane[&GenSymbol::TildeX], &nc("x") - &(&omega * &nc("y")));
        assert_eq!(plane[&GenSymbol::TildeXi], &nc("xi") - &(&omega * &nc("eta")));
    }

    #[test]
    fn group_relations_contract() {
        let all = contracted_group_relations().unwrap();
        assert_eq!(all.len(), 6);
        for id in &all {
            assert!(id.holds(), "{}: {}", id.name, id.limit);
        }
    }

    #[test]
    fn ca_defect_before_limit_is_order_u() {
        // c̃ã − ãc̃ + g·c̃² = (p − 1)·ãc̃ on the curve
        let frame = ContractionFrame::new();
        let sys = frame.group_tilde_system().unwrap();
        let defect = tilde(&nc("c*a - a*c + g*c^2"));
        let ordered = normal_order(&defect, &sys).unwrap();
        assert_eq!(ordered, tilde(&nc("-g*u*a*c")));
    }

    #[test]
    fn cb_relation_before_limit() {
        // c̃b̃ = pq·b̃c̃ + q(p−1)ω·d̃c̃ − p(q−1)ω·ãc̃ + (1−p)(q−1)ω²·c̃², rewritten by the dc and ca rules
        let frame = ContractionFrame::new();
        let sys = frame.group_tilde_system().unwrap();
        let lhs = normal_order(&tilde(&nc("c*b")), &sys).unwrap();
        let shown = tilde(&nc("p*q*b*c + q*(p - 1)/u*d*c - p*(q - 1)/u*a*c + (1 - p)*(q - 1)/u^2*c^2"));
        let shown = normal_order(&shown.substitute(&frame.substitutions).unwrap(), &sys).unwrap();
        assert_eq!(lhs, shown);
    }

    #[test]
    fn plane_contracts() {
        let all = contracted_plane().unwrap();
        for id in &all {
            assert!(id.holds(), "{}: {}", id.name, id.limit);
        }
    }

    #[test]
    fn reversed_differential_ordering_flips_xi_square() {
        // with ξη + q·ηξ = 0 instead, the limit gives ξ̃² = −h·ξ̃η̃
        let frame = ContractionFrame::new();
        let rels: Vec<NCPoly> = ["y*x - p*x*y", "xi^2", "eta^2", "xi*eta + q*eta*xi"].iter().map(|t| nc(t)).collect();
        let lhs: Vec<Word> = ["y x", "xi xi", "eta eta", "eta xi"]
            .iter()
            .map(|w| Word(w.split(' ').map(|g| g.parse().unwrap()).collect()))
            .collect();
        let sys = frame.tilde_system(&frame.plane_map().unwrap(), &PLANE_ORDER, &rels, &lhs).unwrap();
        let printed = frame.contract_defect(&tilde(&nc("xi^2 - h*xi*eta")), &sys).unwrap();
        let flipped = frame.contract_defect(&tilde(&nc("xi^2 + h*xi*eta")), &sys).unwrap();
        assert!(!printed.is_zero());
        assert!(flipped.is_zero());
    }

    #[test]
    fn wrong_curve_is_detected() {
        // swapping the roles of g and h breaks the ca relation
        let mut frame = ContractionFrame::new();
        let (g, h, u) = (RatFunc::var(Var::G), RatFunc::var(Var::H), RatFunc::var(Var::U));
        frame.substitutions = vec![(Var::P, &RatFunc::one() - &(&h * &u)), (Var::Q, &RatFunc::one() + &(&g * &u))];
        let sys = frame.group_tilde_system().unwrap();
        let limit = frame.contract_defect(&tilde(&nc("c*a - a*c + g*c^2")), &sys).unwrap();
        assert!(!limit.is_zero());
    }
}
