use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ybmaps::json::{mat_from_json, point_from_json, point_to_json, scalar_from_json, JsonScalar};
use ybmaps::leaf::{catalog_b, normal_form_catalog, CATALOG_B_NAMES};
use ybmaps::verify::{
    find_map, registry, run_suite, suite_catalog, Field, MapKind, RegisteredMap, SuiteConfig,
};
use ybmaps::{ComplexFloat, Error, GaussianRational, Mat2, Result};

#[derive(Parser)]
#[command(
    name = "ybmaps",
    version,
    about = "Yang-Baxter maps from matrix refactorization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    GaussianRational,
    Complex64,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::GaussianRational => Field::GaussianRational,
            FieldArg::Complex64 => Field::Complex64,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`) and write a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "gaussian-rational")]
        field: FieldArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Trials per suite; defaults to each suite's own count.
        #[arg(long)]
        trials: Option<u64>,
        /// Comparison tolerance on the float backend.
        #[arg(long, default_value_t = ybmaps::scalar::DEFAULT_TOL)]
        tol: f64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate a registered map.
    Map {
        #[command(subcommand)]
        action: MapAction,
    },
    /// List charts, maps and suites.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum MapAction {
    /// Evaluate `(u, v) = R(x, y)` from a JSON input file.
    ///
    /// Input: {"x": {"coords": [..], "params": [..]}, "y": .., "epsilon"?: .., "b"?: ..}.
    /// `b` (a catalog name or a matrix) selects the leading term of `general`;
    /// `epsilon` overrides the default of the two families.
    Eval {
        #[arg(long)]
        map: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "gaussian-rational")]
        field: FieldArg,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            suite,
            field,
            seed,
            trials,
            tol,
            report,
        } => verify(&suite, field.into(), seed, trials, tol, report),
        Command::Map {
            action: MapAction::Eval { map, input, field },
        } => map_eval(&map, &input, field.into()),
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            println!(
                "{}",
                serde_json::to_string_pretty(&catalog()).expect("catalog serializes")
            );
            Ok(true)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn verify(
    suite: &str,
    field: Field,
    seed: u64,
    trials: Option<u64>,
    tol: f64,
    report: Option<PathBuf>,
) -> Result<bool> {
    let config = SuiteConfig {
        seed,
        trials,
        tol,
        field,
    };
    let r = run_suite(suite, &config)?;
    let text = r.to_json_pretty();
    match report {
        Some(path) => fs::write(&path, text + "\n")
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    let failures: usize = if r.suites.is_empty() {
        r.failures.len()
    } else {
        r.suites.iter().map(|s| s.failures.len()).sum()
    };
    eprintln!(
        "{}: attempted {}, accepted {}, rejected {}, failures {}",
        r.suite, r.trials.attempted, r.trials.accepted, r.trials.rejected, failures
    );
    Ok(r.passed())
}

fn map_eval(name: &str, input: &PathBuf, field: Field) -> Result<bool> {
    let text = fs::read_to_string(input)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", input.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let out = match field {
        Field::GaussianRational => eval_on::<GaussianRational>(name, &v)?,
        Field::Complex64 => eval_on::<ComplexFloat>(name, &v)?,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("output serializes")
    );
    Ok(true)
}

fn eval_on<S: JsonScalar>(name: &str, v: &Value) -> Result<Value> {
    let map = resolve_map::<S>(name, v)?;
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| Error::Parse(format!("input is missing {k}")))
    };
    let x = point_from_json::<S>(get("x")?)?;
    let y = point_from_json::<S>(get("y")?)?;
    let (u, w) = map.apply(&x, &y)?;
    Ok(json!({"map": map.name, "u": point_to_json(&u), "v": point_to_json(&w)}))
}

fn resolve_map<S: JsonScalar>(name: &str, v: &Value) -> Result<RegisteredMap<S>> {
    if name == "general" {
        let b: Mat2<S> = match v.get("b") {
            None => Mat2::identity(),
            Some(Value::String(s)) => catalog_b(s)
                .ok_or_else(|| Error::InvalidInput(format!("unknown leading term {s}")))?,
            Some(m) => mat_from_json(m)?,
        };
        return Ok(RegisteredMap::new("general", MapKind::General { b }));
    }
    let mut map = find_map::<S>(name)?;
    if let Some(e) = v.get("epsilon") {
        let e: S = scalar_from_json(e)?;
        match &mut map.kind {
            MapKind::AyFamily { eps } | MapKind::KdvFamily { eps } => *eps = e,
            _ => return Err(Error::InvalidInput(format!("{name} takes no epsilon"))),
        }
    }
    Ok(map)
}

fn catalog() -> Value {
    let charts: Vec<Value> = normal_form_catalog::<GaussianRational>()
        .iter()
        .map(|c| {
            json!({
                "name": c.name(),
                "b": ybmaps::json::mat_to_json(c.b()),
                "two_casimir": c.is_two_casimir(),
                "coord_indices": c.coord_indices(),
                "param_dim": c.param_dim(),
            })
        })
        .collect();
    let maps: Vec<Value> = registry::<GaussianRational>()
        .iter()
        .map(|m| {
            json!({
                "name": m.name,
                "coord_dim": m.coord_dim(),
                "param_dim": m.param_dim(),
                "exact": m.supports_exact(),
                "float": m.supports_float(),
                "suites": m.suites,
            })
        })
        .collect();
    let suites: Vec<Value> = suite_catalog()
        .iter()
        .map(|s| json!({"name": s.name, "default_trials": s.default_trials, "float_only": s.float_only}))
        .collect();
    json!({"leading_terms": CATALOG_B_NAMES, "charts": charts, "maps": maps, "suites": suites})
}
