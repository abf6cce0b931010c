//! Subcommand implementations.

use serde_json::{json, Value};

use ringel_core::count::{grassmannian_count, hall_number, iso_classes_filtered, p_number, ClassFilter};
use ringel_core::hallpoly::{classical_hall_poly_with, universal_hall_poly, Partition};
use ringel_core::segre::{
    a_sigma_poly, decomp_hall_poly, fixed_r_poly, fixed_s_poly, n_alpha_poly, n_sigma_poly, segre_hall_poly_with,
    segre_sum_check, SegreSymbol,
};
use ringel_core::verify::{example_reproduce, kronecker_intro_check, torsion_split_check, CheckReport, Sweep};
use ringel_core::{field_of_order, DimVec, Field, Quiver, RatPoly, Rep};

use crate::json::*;
use crate::{Cli, CliError, Command, Global};

type Result<T> = std::result::Result<T, CliError>;

fn emit(v: &Value) {
    println!("{v}");
}

fn field(g: &Global, q: u32) -> Result<Field> {
    Ok(field_of_order(q, g.budget())?)
}

fn rep_arg(g: &Global, arg: &str) -> Result<Rep> {
    rep_from_json(&read_arg(arg)?, g.budget())
}

fn quiver_arg(arg: &str) -> Result<Quiver> {
    quiver_from_json(&read_arg(arg)?)
}

fn dims_arg(arg: &str) -> Result<DimVec> {
    dims_from_json(&read_arg(arg)?)
}

/// Prints one JSON line per report, then fails if any report failed.
fn emit_reports(g: &Global, reports: &[CheckReport]) -> Result<()> {
    for r in reports {
        emit(&report_to_json(r));
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    g.log(format!("{} instances, {failed} failed", reports.len()));
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} of {} instances failed", reports.len())));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify { quiver, dims, q, nilpotent } => {
            let quiver = quiver_arg(quiver)?;
            let dims = dims_arg(dims)?;
            let f = field(g, *q)?;
            let filter = if *nilpotent { ClassFilter::Nilpotent } else { ClassFilter::All };
            g.log(format!("classifying dimension {dims} over F_{q}"));
            let table = iso_classes_filtered(&quiver, &dims, &f, filter)?;
            table.check_invariants()?;
            emit(&table_to_json(&table));
        }
        Command::Hall { m, n, x } => {
            let (m, n, x) = (rep_arg(g, m)?, rep_arg(g, n)?, rep_arg(g, x)?);
            let f = hall_number(&m, &n, &x)?;
            let p = p_number(&m, &n, &x)?;
            emit(&json!({"F": f.to_string(), "P": p.to_string()}));
        }
        Command::Grassmannian { x, dims } => {
            let x = rep_arg(g, x)?;
            let e = dims_arg(dims)?;
            let c = grassmannian_count(&x, &e)?;
            emit(&json!({"dims": dims_to_json(&e), "count": c.to_string()}));
        }
        Command::Hallpoly { classical, discrete } => match (classical, discrete) {
            (Some(c), None) => {
                let ps: Vec<Partition> = c.iter().map(|a| partition_from_json(&read_arg(a)?)).collect::<Result<_>>()?;
                let p = classical_hall_poly_with(&ps[0], &ps[1], &ps[2], &g.budget())?;
                emit(&json!({
                    "lambda": partition_to_json(&ps[0]),
                    "mu": partition_to_json(&ps[1]),
                    "nu": partition_to_json(&ps[2]),
                    "F": poly_to_json(&p),
                }));
            }
            (None, Some(d)) => {
                let cs = d.iter().map(|a| discrete_from_json(&read_arg(a)?)).collect::<Result<Vec<_>>>()?;
                g.log("sampling discrete classes over several fields");
                let p = universal_hall_poly(&cs[0], &cs[1], &cs[2], &g.budget())?;
                emit(&json!({
                    "mu": discrete_to_json(&cs[0]),
                    "nu": discrete_to_json(&cs[1]),
                    "xi": discrete_to_json(&cs[2]),
                    "F": poly_to_json(&p),
                    "integer": p.is_integer_poly(),
                }));
            }
            _ => return Err(CliError::Input("give exactly one of --classical or --discrete".into())),
        },
        Command::Segre { rho, sigma, tau, check_q } => {
            let syms: Vec<SegreSymbol> = [rho, sigma, tau].iter().map(|a| segre_from_json(&read_arg(a)?)).collect::<Result<_>>()?;
            let (r, s, t) = (&syms[0], &syms[1], &syms[2]);
            let b = g.budget();
            let poly = segre_hall_poly_with(r, s, t, &b)?;
            let counts = |p: fn(&SegreSymbol) -> RatPoly| json!([poly_to_json(&p(r)), poly_to_json(&p(s)), poly_to_json(&p(t))]);
            emit(&json!({
                "rho": segre_to_json(r),
                "sigma": segre_to_json(s),
                "tau": segre_to_json(t),
                "F": poly_to_json(&poly),
                "fixed_r": poly_to_json(&fixed_r_poly(r, s, t)?),
                "fixed_s": poly_to_json(&fixed_s_poly(r, s, t)?),
                "n": counts(n_sigma_poly),
                "a": counts(a_sigma_poly),
            }));
            if let Some(q) = check_q {
                let f = field(g, *q)?;
                g.log(format!("brute-force sums over F_{q}"));
                emit_reports(g, &segre_sum_check(r, s, t, &f)?)?;
            }
        }
        Command::Decomp { alpha, beta, gamma } => {
            let syms = [alpha, beta, gamma].iter().map(|a| decomp_from_json(&read_arg(a)?)).collect::<Result<Vec<_>>>()?;
            g.log("sampling decomposition classes over several fields");
            let p = decomp_hall_poly(&syms[0], &syms[1], &syms[2], &g.budget())?;
            emit(&json!({
                "alpha": decomp_to_json(&syms[0]),
                "beta": decomp_to_json(&syms[1]),
                "gamma": decomp_to_json(&syms[2]),
                "F": poly_to_json(&p),
                "integer": p.is_integer_poly(),
                "n": syms.iter().map(|a| poly_to_json(&n_alpha_poly(a))).collect::<Vec<_>>(),
            }));
        }
        Command::Verify { identity, quiver, q, max_dim, dims, n } => {
            let f = field(g, *q)?;
            let reports = match identity.as_str() {
                "green" | "assoc" | "riedtmann" | "tables" => {
                    let quiver = quiver_arg(quiver)?;
                    let bound = match (dims, max_dim) {
                        (Some(d), _) => dims_arg(d)?,
                        (None, Some(m)) => DimVec(vec![*m; quiver.n_vertices()]),
                        (None, None) => return Err(CliError::Input("give --max-dim or --dims".into())),
                    };
                    g.log(format!("building class tables below {bound} over F_{q}"));
                    let sweep = Sweep::build(&quiver, &f, &bound)?;
                    match identity.as_str() {
                        "green" => sweep.green_check()?,
                        "assoc" => sweep.assoc_check(),
                        "riedtmann" => sweep.riedtmann_check()?,
                        _ => sweep.table_check()?,
                    }
                }
                "torsion" => torsion_split_check(&f)?,
                "kronecker" => kronecker_intro_check(&f, *n)?,
                "example" => example_reproduce(&f)?,
                other => return Err(CliError::Input(format!("unknown identity {other:?}"))),
            };
            emit_reports(g, &reports)?;
        }
        Command::Example { q } => {
            let f = field(g, *q)?;
            g.log(format!("reproducing the example over F_{q}"));
            let reports = example_reproduce(&f)?;
            let first = |id: &str| reports.iter().find(|r| r.identity == id).map(|r| rational_to_string(&r.lhs));
            let count = |id: &str| reports.iter().filter(|r| r.identity == id).count();
            let failures: Vec<Value> = reports.iter().filter(|r| !r.pass).map(report_to_json).collect();
            let nonzero = |want: u64| {
                reports
                    .iter()
                    .filter(|r| r.identity == "example_f" && r.lhs == ringel_core::Rational::from_integer(want.into()))
                    .count()
            };
            let qq = *q as u64;
            emit(&json!({
                "q": q,
                "modules": {"R": count("example_sum_st"), "S": count("example_sum_rt"), "T": count("example_sum_rs")},
                "hall_numbers": {
                    "total": count("example_f"),
                    "q^2+q+1": nonzero(qq * qq + qq + 1),
                    "q^2+q": nonzero(qq * qq + qq),
                },
                "sum_over_RS": first("example_sum_rs"),
                "sum_over_ST": first("example_sum_st"),
                "sum_over_RT": first("example_sum_rt"),
                "checks": reports.len(),
                "failures": failures,
            }));
            if !failures.is_empty() {
                return Err(CliError::Failed(format!("{} of {} checks failed", failures.len(), reports.len())));
            }
        }
    }
    Ok(())
}
