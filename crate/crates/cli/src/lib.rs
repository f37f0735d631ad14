//! Library side of the `mbe` command: argument types, the check registry,
//! the K scan and the command dispatcher.

pub mod args;
pub mod checks;
pub mod report;
pub mod scan;

use std::fs::File;
use std::io::{BufWriter, Write};

use anyhow::{bail, Context};
use mbe_core::contraction::{contract_matrix_matches, contracted_group_relations, contracted_plane, scalar_limits};
use mbe_core::ncalgebra::{normal_order, parse_expression, GenSymbol, NCPoly, RewriteSystem};
use mbe_core::plane::{build_plane_system, qh_pure_system};
use mbe_core::rtt::{assemble, catalog_coordinates, solve_family};
use mbe_core::{Deformation, DeformationSpec, RatFunc};
use serde_json::json;

use args::{Bindings, Cli, Command, ScanArgs};
use checks::{run_verify, Catalog};
use report::{emit, Report, Status};

/// Executes one invocation, writing to `out`; returns the process exit code.
/// Errors are input problems and map to exit code 2 in the binary.
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Verify { scope, json } => emit(&run_verify(&Catalog::default(), scope), json, out),
        Command::SolveRtt { deformation, json } => solve_rtt(deformation, json, out),
        Command::Scan(args) => scan_command(&args, out),
        Command::Plane { deformation, k, bindings, expr, json } => {
            let k = k.map_or_else(DeformationSpec::k_symbol, RatFunc::from_rational);
            plane_command(deformation, &k, &bindings, &expr, json, out)
        }
        Command::Contract { json } => emit(&contract_reports()?, json, out),
    }
}

fn solve_rtt(id: Deformation, json: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let d = id.spec();
    let sys = assemble(&d)?;
    let rank = sys.rank()?;
    let basis = solve_family(&d)?;
    let coords = catalog_coordinates(&d, &basis)?;
    if json {
        let mats: Vec<Vec<Vec<String>>> = basis
            .iter()
            .map(|m| (0..4).map(|i| m.row(i).iter().map(|e| e.to_string()).collect()).collect())
            .collect();
        let doc = json!({
            "deformation": id.name(),
            "unknowns": sys.unknowns.len(),
            "equations": sys.rows.len(),
            "rank": rank,
            "nullity": basis.len(),
            "basis": mats,
            "catalog_coordinates": coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)?;
    } else {
        writeln!(out, "deformation {id}: {} unknowns, {} equations", sys.unknowns.len(), sys.rows.len())?;
        writeln!(out, "rank {rank}, nullspace dimension {}", basis.len())?;
        for (i, m) in basis.iter().enumerate() {
            writeln!(out, "basis[{i}] =\n{m}")?;
        }
        let shown: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        writeln!(out, "catalog R(K) = [{}] . basis", shown.join(", "))?;
    }
    Ok(0)
}

fn scan_command(args: &ScanArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ks = scan::grid(&args.kmin, &args.kmax, args.steps);
    let rows = scan::run_scan(&args.deformation.spec(), &args.bindings.pairs(), &ks)?;
    match &args.csv {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            scan::write_csv(&rows, BufWriter::new(file))?;
        }
        None => scan::write_csv(&rows, &mut *out)?,
    }
    Ok(0)
}

/// Picks the group or plane rewrite system from the letters of `p`.
fn system_for(id: Deformation, k: &RatFunc, p: &NCPoly) -> anyhow::Result<RewriteSystem> {
    let letters: Vec<GenSymbol> = p.generators().collect();
    let group = letters.iter().all(|g| GenSymbol::GROUP.contains(g));
    let plane = letters.iter().all(|g| GenSymbol::PLANE.contains(g));
    let d = id.spec();
    if group {
        return Ok(d.group_system());
    }
    if !plane {
        bail!("expression mixes group letters (a, b, c, d) with plane letters (x, y, xi, eta)");
    }
    Ok(match id {
        Deformation::Qh => qh_pure_system(),
        _ => build_plane_system(&d, k)?.rules,
    })
}

fn plane_command(
    id: Deformation,
    k: &RatFunc,
    bindings: &Bindings,
    expr: &str,
    json: bool,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let p = parse_expression(expr)?;
    let sys = system_for(id, k, &p)?;
    let subs: Vec<_> = bindings.pairs().into_iter().map(|(v, x)| (v, RatFunc::from_rational(x))).collect();
    let nf = normal_order(&p, &sys)?.substitute(&subs)?;
    if json {
        let doc = json!({ "deformation": id.name(), "input": expr, "normal_form": nf.to_string() });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{nf}")?;
    }
    Ok(0)
}

/// One report per contracted identity.
pub fn contract_reports() -> anyhow::Result<Vec<Report>> {
    let report = |check: String, ok: bool, detail: String| Report {
        check,
        deformation: Some("pq->gh".into()),
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    };
    let mut out = vec![report(
        "contract_matrix".into(),
        contract_matrix_matches(&DeformationSpec::k_symbol())?,
        "(G^-1 x G^-1) R(K;p,q) (G x G) -> P R(K;g,h)".into(),
    )];
    for id in contracted_group_relations()? {
        out.push(report(format!("group {}", id.name), id.holds(), format!("limit of defect: {}", id.limit)));
    }
    for id in contracted_plane()? {
        out.push(report(format!("plane {}", id.name), id.holds(), format!("limit of defect: {}", id.limit)));
    }
    for (name, ok) in scalar_limits()? {
        out.push(report(format!("scalar {name}"), ok, String::new()));
    }
    Ok(out)
}
