//! Registry of verification checks, each run against a catalog of R̂ families.

use mbe_core::catalog::{build_m, m_factorization};
use mbe_core::contraction::{contract_matrix_matches, contracted_group_relations, contracted_plane, scalar_limits};
use mbe_core::identities::{
    affine_decomposition, baxterization_check, braid_divisible, braid_residual, mbe_r_form_residual, mbe_residual,
    r_form_coefficient, s_shift_check, s_shift_with,
};
use mbe_core::ncalgebra::parse::parse_scalar;
use mbe_core::plane::{
    build_plane_system, phi_commutator_identities, phi_nilpotent, plane_diamond_check, projector_consistency,
    pure_sector_consistency, qh_pure_system,
};
use mbe_core::rtt::{assemble, catalog_coordinates, residual_is_zero, rtt_residual, solve_family};
use mbe_core::{flip21, Deformation, DeformationSpec, Error, ParamMatrix, QuadExt, RatFunc, Var};
use rayon::prelude::*;

use crate::args::Scope;
use crate::report::{Report, Status};

/// The three deformation families a verification run is evaluated against.
#[derive(Debug, Clone)]
pub struct Catalog {
    specs: Vec<DeformationSpec>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog { specs: DeformationSpec::all() }
    }
}

impl Catalog {
    pub fn get(&self, id: Deformation) -> &DeformationSpec {
        self.specs.iter().find(|s| s.id == id).expect("catalog holds every deformation")
    }

    /// Replaces the `R̂(K)` constructor of one family.
    pub fn with_rhat(mut self, id: Deformation, rhat: fn(&RatFunc) -> ParamMatrix) -> Self {
        for s in &mut self.specs {
            if s.id == id {
                s.rhat = rhat;
            }
        }
        self
    }
}

pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> mbe_core::Result<Verdict> {
    Ok(Verdict { passed, detail: detail.into() })
}

type Probe = fn(&DeformationSpec) -> mbe_core::Result<Verdict>;

pub struct Check {
    pub name: &'static str,
    pub scope: Scope,
    /// Families the check is run for; empty means a single run labelled `pq->gh`.
    pub targets: &'static [Deformation],
    probe: Probe,
}

const ALL: &[Deformation] = &Deformation::ALL;
const PLANES: &[Deformation] = &[Deformation::Pq, Deformation::Gh];
const PQ: &[Deformation] = &[Deformation::Pq];

fn k() -> RatFunc {
    DeformationSpec::k_symbol()
}

fn failures<'a>(items: impl IntoIterator<Item = (&'a str, bool)>) -> String {
    let bad: Vec<&str> = items.into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    if bad.is_empty() {
        "all hold".into()
    } else {
        format!("failing: {}", bad.join(", "))
    }
}

fn hecke(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let (r, x) = (d.rhat(&k()), d.hecke_x(&k()));
    let rhs = &r.scale(&x) + &ParamMatrix::identity(4).scale(&(&RatFunc::one() - &x));
    verdict(r.try_mul(&r)? == rhs, format!("X = {x}"))
}

fn projectors(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let (p1, p2) = d.projectors(&k())?;
    let id = ParamMatrix::identity(4);
    let x = d.hecke_x(&k());
    let spectral = &p1.scale(&(&x - &RatFunc::one())) + &p2;
    let items = [
        ("P1^2 = P1", p1.try_mul(&p1)? == p1),
        ("P2^2 = P2", p2.try_mul(&p2)? == p2),
        ("P1 P2 = 0", p1.try_mul(&p2)?.is_zero()),
        ("P1 + P2 = I", &p1 + &p2 == id),
        ("R = (X-1)P1 + P2", spectral == d.rhat(&k())),
    ];
    verdict(items.iter().all(|(_, ok)| *ok), failures(items))
}

fn flip_inverse(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let kp = d.kprime(&k())?;
    let prod = flip21(&d.r(&k()))?.try_mul(&d.r(&kp))?;
    verdict(prod.is_identity(), format!("K' = {kp}"))
}

fn kprime_involution(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let twice = d.kprime(&d.kprime(&k())?)?;
    verdict(twice == k(), format!("K'' = {twice}"))
}

fn triangular(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let kt = d.triangular_k();
    let r = d.rhat(&kt);
    verdict(r.try_mul(&r)?.is_identity(), format!("R^2 = I at K = {kt}"))
}

fn m_factor(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let target = d.r(&d.triangular_k()).map(|x| QuadExt::base(x.clone()));
    verdict(m_factorization(&build_m())? == target, "((21)M)^-1 M = R(2p/(p+q))")
}

fn displayed_factor(id: Deformation) -> RatFunc {
    let text = match id {
        Deformation::Pq => "(K - 1)*(K*q/p - 1)",
        Deformation::Gh => "(K - 1)^2",
        Deformation::Qh => "(K - 1)*(K*q - 1)",
    };
    parse_scalar(text).expect("built-in factor")
}

fn mbe(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let rep = mbe_residual(d, &k())?;
    let measured = rep.measured.map_or("none".to_string(), |c| c.to_string());
    verdict(rep.is_zero, format!("factor {}; measured coefficient {measured}", rep.factor))
}

fn mbe_factor(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let f = d.mbe_factor(&k());
    verdict(f == displayed_factor(d.id), format!("(K/K1 - 1)(K/K2 - 1) = {f}"))
}

fn r_form(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let ok = mbe_r_form_residual(d, &k())?.is_zero();
    let c = r_form_coefficient(d, &k())?.map_or("none".to_string(), |c| c.to_string());
    verdict(ok, format!("measured coefficient {c}"))
}

fn braid_values(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let ok = braid_residual(d, &d.k1)?.is_zero() && braid_residual(d, &d.k2)?.is_zero();
    verdict(ok, format!("K1 = {}, K2 = {}", d.k1, d.k2))
}

fn braid_divides(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    verdict(braid_divisible(d)?, "every entry divisible by (K - K1)(K - K2)")
}

fn affine(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    match affine_decomposition(d, &k()) {
        Ok(ok) => verdict(ok, "R(K) = c1 R(K1) + c2 R(K2)"),
        Err(Error::DegenerateValues) if d.id == Deformation::Gh => verdict(true, "K1 = K2: reported DegenerateValues"),
        Err(e) => Err(e),
    }
}

fn s_shift(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let mu = RatFunc::var(Var::Mu);
    let printed = s_shift_check(d, &k(), &mu)?;
    let flipped = s_shift_with(d, &k(), &mu, &-d.mbe_factor(&k()))?;
    verdict(printed, format!("with the coefficient negated: {}", if flipped { "holds" } else { "fails" }))
}

fn baxterization(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let items = [("K1", baxterization_check(d, &k(), 1)?), ("K2", baxterization_check(d, &k(), 2)?)];
    verdict(items.iter().all(|(_, ok)| *ok), failures(items))
}

fn rtt_zero(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let res = rtt_residual(&d.r(&k()), &d.group_system())?;
    verdict(residual_is_zero(&res), "R T1 T2 - T2 T1 R normal-orders to zero")
}

fn rtt_nullity(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let sys = assemble(d)?;
    let (rank, null) = (sys.rank()?, sys.nullspace()?.len());
    verdict(null == 2, format!("rank {rank}, nullspace dimension {null}"))
}

fn rtt_span(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let basis = solve_family(d)?;
    match catalog_coordinates(d, &basis) {
        Ok(c) => {
            let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            verdict(true, format!("coordinates [{}]", coords.join(", ")))
        }
        Err(Error::SpanMismatch) => verdict(false, "catalog R is outside the solution span"),
        Err(e) => Err(e),
    }
}

fn plane_projectors(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    if d.id == Deformation::Qh {
        return verdict(pure_sector_consistency(d, &k(), &qh_pure_system())?, "pure sectors only");
    }
    verdict(projector_consistency(&build_plane_system(d, &k())?)?, "P1 and P2 annihilate the quadratic words")
}

fn plane_phi_square(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    verdict(phi_nilpotent(&build_plane_system(d, &k())?)?, "Phi^2 normal-orders to zero")
}

fn plane_commutators(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let ps = build_plane_system(d, &k())?;
    let results = phi_commutator_identities(&ps)
        .into_iter()
        .map(|id| Ok((id.name, id.holds(&ps.rules)?)))
        .collect::<mbe_core::Result<Vec<_>>>()?;
    verdict(results.iter().all(|(_, ok)| *ok), failures(results))
}

fn plane_diamond(d: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let bad = plane_diamond_check(&build_plane_system(d, &k())?, 4)?;
    let shown: Vec<String> = bad.iter().take(4).map(|w| w.to_string()).collect();
    let detail = if bad.is_empty() {
        "confluent up to degree 4".to_string()
    } else {
        format!("{} unresolved overlaps, e.g. {}", bad.len(), shown.join(", "))
    };
    verdict(bad.is_empty(), detail)
}

fn contraction_matrix(_: &DeformationSpec) -> mbe_core::Result<Verdict> {
    verdict(contract_matrix_matches(&k())?, "limit equals P R(K; g, h)")
}

fn contraction_group(_: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let all = contracted_group_relations()?;
    verdict(all.iter().all(|i| i.holds()), failures(all.iter().map(|i| (i.name.as_str(), i.holds()))))
}

fn contraction_plane(_: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let all = contracted_plane()?;
    verdict(all.iter().all(|i| i.holds()), failures(all.iter().map(|i| (i.name.as_str(), i.holds()))))
}

fn contraction_scalars(_: &DeformationSpec) -> mbe_core::Result<Verdict> {
    let all = scalar_limits()?;
    verdict(all.iter().all(|(_, ok)| *ok), failures(all.iter().map(|(n, ok)| (n.as_str(), *ok))))
}

pub fn registry() -> Vec<Check> {
    let c = |name, scope, targets, probe| Check { name, scope, targets, probe };
    vec![
        c("hecke", Scope::Catalog, ALL, hecke as Probe),
        c("projectors", Scope::Catalog, ALL, projectors),
        c("flip_inverse", Scope::Catalog, ALL, flip_inverse),
        c("kprime_involution", Scope::Catalog, ALL, kprime_involution),
        c("triangular_point", Scope::Catalog, ALL, triangular),
        c("m_factorization", Scope::Catalog, PQ, m_factor),
        c("mbe", Scope::Identities, ALL, mbe),
        c("mbe_factor", Scope::Identities, ALL, mbe_factor),
        c("mbe_r_form", Scope::Identities, ALL, r_form),
        c("braid_values", Scope::Identities, ALL, braid_values),
        c("braid_divisible", Scope::Identities, ALL, braid_divides),
        c("affine_decomposition", Scope::Identities, ALL, affine),
        c("s_shift", Scope::Identities, ALL, s_shift),
        c("baxterization", Scope::Identities, ALL, baxterization),
        c("rtt_residual", Scope::Rtt, ALL, rtt_zero),
        c("rtt_nullity", Scope::Rtt, ALL, rtt_nullity),
        c("rtt_span", Scope::Rtt, ALL, rtt_span),
        c("projector_consistency", Scope::Plane, ALL, plane_projectors),
        c("phi_nilpotent", Scope::Plane, PLANES, plane_phi_square),
        c("phi_commutators", Scope::Plane, PLANES, plane_commutators),
        c("diamond", Scope::Plane, PLANES, plane_diamond),
        c("contract_matrix", Scope::Contraction, &[], contraction_matrix),
        c("contract_group", Scope::Contraction, &[], contraction_group),
        c("contract_plane", Scope::Contraction, &[], contraction_plane),
        c("contract_scalars", Scope::Contraction, &[], contraction_scalars),
    ]
}

/// Runs every registered check within `scope`, in registry order.
pub fn run_verify(catalog: &Catalog, scope: Scope) -> Vec<Report> {
    let jobs: Vec<(&'static str, Scope, Option<Deformation>, Probe)> = registry()
        .into_iter()
        .filter(|c| scope == Scope::All || c.scope == scope)
        .flat_map(|c| {
            let targets: Vec<Option<Deformation>> =
                if c.targets.is_empty() { vec![None] } else { c.targets.iter().copied().map(Some).collect() };
            targets.into_iter().map(move |t| (c.name, c.scope, t, c.probe))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(name, scope, target, probe)| {
            let spec = catalog.get(target.unwrap_or(Deformation::Pq));
            let (status, detail) = match probe(spec) {
                Ok(v) => (if v.passed { Status::Pass } else { Status::Fail }, v.detail),
                Err(e) => (Status::Error, e.to_string()),
            };
            Report {
                check: format!("{}/{}", scope.name(), name),
                deformation: Some(target.map_or("pq->gh".to_string(), |d| d.name().to_string())),
                status,
                detail,
            }
        })
        .collect()
}
