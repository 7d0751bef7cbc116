//! Command-line front end: exact, reproducible runs of every pipeline.
//!
//! Exit codes: 0 on success, 1 when the input is mathematically rejected
//! (Jacobi failure, non-coisotropic subalgebra, failed Manin triple), 2 on
//! malformed input. Diagnostics go to stderr as one JSON object per
//! failure; results go to stdout.

mod schema;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use manin::bialg;
use manin::cohom;
use manin::exactlin::Subspace;
use manin::fiber;
use manin::flag;
use manin::liealg::JacobiReport;
use manin::matched;
use manin::roots::{self, RootSystem};
use manin::{Error, Rat};

use schema::{
    format_rat, parse_algebra_json, parse_matrix, rows_to_vecs, AlgebraJson, CohomologyJson,
    ManinJson, MatchedJson, ParsedInput, PointDataJson, Q, RelativeJson,
};

#[derive(Parser)]
#[command(name = "manin", version, about = "Exact Lie bialgebra and Poisson cohomology toolkit")]
struct Cli {
    /// Emit JSON instead of text tables
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the Jacobi identity (and, for bialgebras, compatibility)
    Validate { input: PathBuf },
    /// Build the double Lie algebra g ⋈ g* of a bialgebra
    Double { input: PathBuf },
    /// Check a Manin triple (two subspaces inside the double)
    Manin { input: PathBuf },
    /// Chevalley-Eilenberg cohomology dimensions
    Cohomology { input: PathBuf },
    /// Relative Lie algebra cohomology dimensions
    Relative { input: PathBuf },
    /// Anchor-kernel fiber data at a point
    Fiber { input: PathBuf },
    /// Split an algebra into a matched pair along two subalgebras
    Matched { input: PathBuf },
    /// Invariant Poisson cohomology of the flag manifold K/T
    Flag {
        #[command(flatten)]
        target: RootTarget,
    },
    /// Symplectic leaf census of the Bruhat Poisson structure
    Leaves {
        #[command(flatten)]
        target: RootTarget,
    },
    /// Nilradical cohomology check against the Weyl group
    Kostant {
        #[command(flatten)]
        target: RootTarget,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RootTarget {
    /// Built-in type name: A1, A2, A3, B2, B3, C3, G2
    #[arg(long = "type", value_name = "NAME")]
    type_name: Option<String>,
    /// JSON file holding a Cartan matrix, e.g. [[2,-1],[-1,2]]
    #[arg(long, value_name = "FILE")]
    cartan: Option<PathBuf>,
}

enum Failure {
    /// mathematically false input: exit 1
    Math(String),
    /// malformed input: exit 2
    Input(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (kind, detail, code) = match self {
            Failure::Math(d) => ("mathematical", d, 1),
            Failure::Input(d) => ("malformed", d, 2),
        };
        eprintln!(
            "{}",
            serde_json::json!({ "error": { "kind": kind, "detail": detail } })
        );
        ExitCode::from(code)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Math(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ParsedInput, Failure> {
    parse_algebra_json(&read_input(path)?).map_err(Failure::Input)
}

fn parse_typed<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, Failure> {
    serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::Input(format!("{what} schema: {e}")))
}

fn resolve_root_system(target: &RootTarget) -> Result<(RootSystem, String), Failure> {
    if let Some(name) = &target.type_name {
        let rs = RootSystem::by_name(name).map_err(Failure::from)?;
        return Ok((rs, name.clone()));
    }
    let path = target.cartan.as_ref().expect("clap enforces the group");
    let rows: Vec<Vec<i64>> = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::Input(format!("Cartan matrix schema: {e}")))?;
    let rs = roots::build_root_system(rows).map_err(Failure::from)?;
    Ok((rs, "custom".to_string()))
}

fn witness_json(report: &JacobiReport<Rat>) -> serde_json::Value {
    serde_json::json!(report
        .witnesses
        .iter()
        .map(|(i, j, k, res)| {
            serde_json::json!({
                "triple": [i, j, k],
                "residual": res.iter().map(format_rat).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

fn emit<T: Serialize>(
    json_mode: bool,
    value: &T,
    table: impl FnOnce() -> String,
) -> Result<(), Failure> {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string(value).expect("serializable output")
        );
    } else {
        println!("{}", table());
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { input } => run_validate(cli.json, input),
        Command::Double { input } => run_double(cli.json, input),
        Command::Manin { input } => run_manin(cli.json, input),
        Command::Cohomology { input } => run_cohomology(cli.json, input),
        Command::Relative { input } => run_relative(cli.json, input),
        Command::Fiber { input } => run_fiber(cli.json, input),
        Command::Matched { input } => run_matched(cli.json, input),
        Command::Flag { target } => run_flag(cli.json, target),
        Command::Leaves { target } => run_leaves(cli.json, target),
        Command::Kostant { target } => run_kostant(cli.json, target),
    }
}

fn run_validate(json: bool, input: &Path) -> Result<(), Failure> {
    match load(input)? {
        ParsedInput::Algebra(g) => {
            let report = g.validate_jacobi();
            if !report.ok() {
                eprintln!(
                    "{}",
                    serde_json::json!({
                        "error": {
                            "kind": "mathematical",
                            "detail": "Jacobi identity fails",
                            "witnesses": witness_json(&report),
                        }
                    })
                );
                return Err(Failure::Math(format!(
                    "Jacobi identity fails on {} basis triple(s)",
                    report.witnesses.len()
                )));
            }
            emit(json, &serde_json::json!({ "jacobi": "ok" }), || {
                "jacobi: ok".to_string()
            })
        }
        ParsedInput::Bialgebra(b) => {
            let jacobi = b.algebra().validate_jacobi();
            let compat = bialg::check_compatibility(&b);
            if !jacobi.ok() || !compat.ok() {
                let which = if jacobi.ok() { &compat } else { &jacobi };
                eprintln!(
                    "{}",
                    serde_json::json!({
                        "error": {
                            "kind": "mathematical",
                            "detail": if jacobi.ok() {
                                "cocommutator incompatible with the bracket"
                            } else {
                                "Jacobi identity fails"
                            },
                            "witnesses": witness_json(which),
                        }
                    })
                );
                return Err(Failure::Math("bialgebra validation failed".to_string()));
            }
            emit(
                json,
                &serde_json::json!({ "jacobi": "ok", "compatibility": "ok" }),
                || "jacobi: ok\ncompatibility: ok".to_string(),
            )
        }
        ParsedInput::PointData(_) => emit(json, &serde_json::json!({ "point_data": "ok" }), || {
            "point data: ok".to_string()
        }),
    }
}

fn run_double(json: bool, input: &Path) -> Result<(), Failure> {
    let ParsedInput::Bialgebra(b) = load(input)? else {
        return Err(Failure::Input(
            "the double command expects a bialgebra document (with a delta block)".into(),
        ));
    };
    match bialg::build_double(&b) {
        Ok(double) => emit(json, &AlgebraJson::from_algebra(double.algebra()), || {
            double.algebra().to_string()
        }),
        Err(Error::IncompatibleCocommutator { i, j, k }) => {
            eprintln!(
                "{}",
                serde_json::json!({
                    "error": {
                        "kind": "mathematical",
                        "detail": "double fails the Jacobi identity",
                        "witness_triple": [i, j, k],
                    }
                })
            );
            Err(Failure::Math(
                "cocommutator is incompatible with the bracket".into(),
            ))
        }
        Err(e) => Err(Failure::from(e)),
    }
}

fn run_manin(json: bool, input: &Path) -> Result<(), Failure> {
    let doc: ManinJson = parse_typed(input, "manin")?;
    let b = doc.bialgebra.to_bialgebra().map_err(Failure::Input)?;
    let double = bialg::build_double(&b).map_err(Failure::from)?;
    let dim = double.algebra().dim();
    let a = Subspace::from_rows(dim, rows_to_vecs(&doc.a, dim, "a").map_err(Failure::Input)?);
    let c = Subspace::from_rows(dim, rows_to_vecs(&doc.b, dim, "b").map_err(Failure::Input)?);
    let verdict = bialg::check_manin_triple(&double, &a, &c).map_err(Failure::from)?;
    emit(json, &serde_json::json!({ "manin_triple": verdict }), || {
        format!("manin triple: {verdict}")
    })?;
    if verdict {
        Ok(())
    } else {
        Err(Failure::Math("not a Manin triple".into()))
    }
}

fn dims_table(dims: &[usize]) -> String {
    let mut out = String::from("degree  dim");
    for (k, d) in dims.iter().enumerate() {
        out.push_str(&format!("\n{k:<7} {d}"));
    }
    out
}

fn run_cohomology(json: bool, input: &Path) -> Result<(), Failure> {
    let doc: CohomologyJson = parse_typed(input, "cohomology")?;
    let algebra = AlgebraJson {
        dim: doc.dim,
        basis: doc.basis.clone(),
        brackets: doc.brackets.clone(),
    }
    .to_algebra()
    .map_err(Failure::Input)?;
    let rep = match &doc.representation {
        None => None,
        Some(matrices) => {
            if matrices.len() != doc.dim {
                return Err(Failure::Input(format!(
                    "representation: expected {} matrices, found {}",
                    doc.dim,
                    matrices.len()
                )));
            }
            let space_dim = matrices.first().map_or(0, Vec::len);
            let mats = matrices
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    parse_matrix(m, space_dim, space_dim, &format!("representation[{i}]"))
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::Input)?;
            Some(cohom::Representation::new(algebra.clone(), mats).map_err(Failure::from)?)
        }
    };
    let complex = cohom::ce_complex(&algebra, rep.as_ref()).map_err(Failure::from)?;
    let dims = cohom::cohomology_dims(&complex);
    emit(json, &serde_json::json!({ "dims": dims }), || {
        dims_table(&dims)
    })
}

fn run_relative(json: bool, input: &Path) -> Result<(), Failure> {
    let doc: RelativeJson = parse_typed(input, "relative")?;
    let algebra = doc.algebra.to_algebra().map_err(Failure::Input)?;
    let h = Subspace::from_rows(
        algebra.dim(),
        rows_to_vecs(&doc.h, algebra.dim(), "h").map_err(Failure::Input)?,
    );
    let dims = cohom::relative_cohomology(&algebra, &h).map_err(Failure::from)?;
    emit(json, &serde_json::json!({ "dims": dims }), || {
        dims_table(&dims)
    })
}

fn run_fiber(json: bool, input: &Path) -> Result<(), Failure> {
    let doc: PointDataJson = parse_typed(input, "fiber")?;
    let data = doc.to_point_data().map_err(Failure::Input)?;
    let result = fiber::anchor_kernel(&data);
    let isotropic = fiber::isotropy_check(&data, &result.lp);
    let image = fiber::phi_embed(&data, &result.lp);
    let rows = |s: &Subspace<Rat>| -> Vec<Vec<Q>> {
        s.basis_rows()
            .map(|r| r.iter().map(|x| Q(x.clone())).collect())
            .collect()
    };
    let payload = serde_json::json!({
        "dim_lp": result.lp.dim(),
        "dim_gp": result.dim_gp,
        "dim_tp": result.dim_tp,
        "dim_overlap": result.dim_overlap,
        "isotropic": isotropic,
        "lp_basis": rows(&result.lp),
        "phi_image": rows(&image),
    });
    emit(json, &payload, || {
        format!(
            "dim l_p = {} (g_p {}, t_p {}, overlap {})\nisotropic: {isotropic}\nphi image dim: {}",
            result.lp.dim(),
            result.dim_gp,
            result.dim_tp,
            result.dim_overlap,
            image.dim()
        )
    })
}

fn run_matched(json: bool, input: &Path) -> Result<(), Failure> {
    let doc: MatchedJson = parse_typed(input, "matched")?;
    let algebra = doc.algebra.to_algebra().map_err(Failure::Input)?;
    let dim = algebra.dim();
    let h = Subspace::from_rows(dim, rows_to_vecs(&doc.h, dim, "h").map_err(Failure::Input)?);
    let n = Subspace::from_rows(dim, rows_to_vecs(&doc.n, dim, "n").map_err(Failure::Input)?);
    let pair = matched::split_matched_pair(&algebra, &h, &n).map_err(Failure::from)?;
    let matrices = |mats: &[manin::exactlin::Mat<Rat>]| -> Vec<Vec<Vec<Q>>> {
        mats.iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| Q(m[(i, j)].clone())).collect())
                    .collect()
            })
            .collect()
    };
    let payload = serde_json::json!({
        "dim_h": pair.h().dim(),
        "dim_n": pair.n().dim(),
        "act_h_on_n": matrices(pair.act_h_on_n()),
        "act_n_on_h": matrices(pair.act_n_on_h()),
    });
    emit(json, &payload, || {
        format!(
            "matched pair: dim h = {}, dim n = {}\n(actions available via --json)",
            pair.h().dim(),
            pair.n().dim()
        )
    })
}

#[derive(Serialize)]
struct FlagOut<'a> {
    #[serde(rename = "type")]
    type_name: &'a str,
    dims: &'a [usize],
    total: usize,
}

fn run_flag(json: bool, target: &RootTarget) -> Result<(), Failure> {
    let (rs, name) = resolve_root_system(target)?;
    let table = flag::flag_cohomology::<Rat>(&rs, &name).map_err(Failure::from)?;
    emit(
        json,
        &FlagOut {
            type_name: &table.type_name,
            dims: &table.dims,
            total: table.total,
        },
        || {
            let mut out = format!("type: {}", table.type_name);
            out.push('\n');
            out.push_str(&dims_table(&table.dims));
            out.push_str(&format!("\ntotal   {}", table.total));
            out
        },
    )
}

fn run_leaves(json: bool, target: &RootTarget) -> Result<(), Failure> {
    let (rs, name) = resolve_root_system(target)?;
    let leaves = flag::bruhat_leaves(&rs).map_err(Failure::from)?;
    let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, d) in &leaves {
        *by_dim.entry(*d).or_insert(0) += 1;
    }
    let payload = serde_json::json!({
        "type": name,
        "count": leaves.len(),
        "top_dim": 2 * rs.num_positive(),
        "leaves": by_dim
            .iter()
            .map(|(dim, count)| serde_json::json!({ "leaf_dim": dim, "count": count }))
            .collect::<Vec<_>>(),
    });
    emit(json, &payload, || {
        let mut out = format!("type: {name}\nleaves: {}\nleaf_dim  count", leaves.len());
        for (dim, count) in &by_dim {
            out.push_str(&format!("\n{dim:<9} {count}"));
        }
        out
    })
}

fn run_kostant(json: bool, target: &RootTarget) -> Result<(), Failure> {
    let (rs, name) = resolve_root_system(target)?;
    let report = flag::kostant_check::<Rat>(&rs).map_err(Failure::from)?;
    let payload = serde_json::json!({
        "type": name,
        "dims": report.dims,
        "histogram": report.histogram,
        "classes": report
            .class_weights
            .iter()
            .map(|(len, weight, mult)| serde_json::json!({
                "length": len,
                "weight": weight,
                "multiplicity": mult,
            }))
            .collect::<Vec<_>>(),
        "ok": report.ok,
    });
    emit(json, &payload, || {
        format!(
            "type: {name}\nH(n) dims:  {:?}\nW lengths:  {:?}\nweights distinct, one class per element: {}",
            report.dims, report.histogram, report.ok
        )
    })?;
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Math(
            "nilradical cohomology does not match the Weyl group".into(),
        ))
    }
}
