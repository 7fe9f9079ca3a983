use std::collections::hash_map::RandomState;
use std::hash::{BuildHasher, Hasher};
use std::path::Path;

use hypermix_core::counting::{burn_in_steps, exact_count_with_cap, fpras_count, FprasConfig};
use hypermix_core::dynamics::{
    coupling_report, parse_stream, sample_update_stream, serialize_stream, DiscreteGlauber,
    UpdateStream,
};
use hypermix_core::experiments::{
    default_horizon, mixing_scaling, percolation_sweep, tv_distance_exact, MixingScalingParams,
    PercolationSweepParams,
};
use hypermix_core::hypergraph::{generate_random_regular_with, validate_text, GenerateOptions};
use hypermix_core::percolation::{
    classify_sites, find_bad_path, lsrw_expected_visits, minimize_path, pc_value, r_star, LsrwMode,
    LsrwStart, PercolationVariant, SiteAdjacency, SiteMap,
};
use hypermix_core::rng::child_rng;
use hypermix_core::{parse_hypergraph, serialize_hypergraph, Hypergraph};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::*;
use crate::output::{read_input, write_file, CliError, CliResult, Output};

/// Resolved configuration of one run, logged into the output header.
pub struct Context {
    seed: Option<u64>,
    pub config: Map<String, Value>,
}

impl Context {
    pub fn new(global: &Global, args: &impl Serialize) -> CliResult<Self> {
        let mut config = Map::new();
        config.insert("threads".into(), json!(rayon::current_num_threads()));
        if let Value::Object(fields) = serde_json::to_value(args)? {
            config.extend(fields);
        }
        Ok(Context {
            seed: global.seed,
            config,
        })
    }

    /// The run's seed; drawn from OS entropy and reported when not given.
    fn seed(&mut self) -> u64 {
        let seed = *self.seed.get_or_insert_with(|| {
            let s = RandomState::new().build_hasher().finish();
            eprintln!("hypermix: no --seed given, using --seed {s}");
            s
        });
        self.config.insert("seed".into(), json!(seed));
        seed
    }

    fn set(&mut self, key: &str, value: impl Serialize) -> CliResult<()> {
        self.config.insert(key.into(), serde_json::to_value(value)?);
        Ok(())
    }
}

fn load(input: &InputArgs) -> CliResult<Hypergraph> {
    Ok(parse_hypergraph(&read_input(&input.input)?)?)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let values = rows
        .iter()
        .map(serde_json::to_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render_table(&values))
}

/// Flat JSON objects as CSV: header from the first row's keys.
fn render_table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = keys
        .iter()
        .map(|k| k.as_str())
        .collect::<Vec<_>>()
        .join(",")
        + "\n";
    for row in rows {
        let cells: Vec<String> = keys
            .iter()
            .map(|k| match &row[k.as_str()] {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                v => v.to_string(),
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Experiment records: rows as CSV, summary as JSON (optionally also
/// written next to the CSV).
fn record_output(
    csv: String,
    summary_json: String,
    summary_path: Option<&Path>,
) -> CliResult<Output> {
    if let Some(path) = summary_path {
        write_file(path, &summary_json)?;
    }
    Ok(Output {
        json: serde_json::from_str(&summary_json)?,
        csv,
        default_format: Format::Csv,
    })
}

fn stream_for(
    g: &Hypergraph,
    args: &StreamArgs,
    horizon: f64,
    ctx: &mut Context,
) -> CliResult<UpdateStream> {
    let stream = match &args.stream {
        Some(path) => {
            let s = parse_stream(&read_input(path)?)?;
            if s.n() != g.n() {
                return Err(hypermix_core::Error::InvalidArgument(format!(
                    "stream has {} vertices, hypergraph has {}",
                    s.n(),
                    g.n()
                ))
                .into());
            }
            s
        }
        None => sample_update_stream(g.n(), horizon, ctx.seed()),
    };
    ctx.set("horizon", stream.horizon())?;
    if let Some(path) = &args.stream_out {
        write_file(path, &serialize_stream(&stream))?;
    }
    Ok(stream)
}

pub fn gen(a: &GenArgs, ctx: &mut Context) -> CliResult<Output> {
    let opts = GenerateOptions {
        max_attempts: a.max_attempts,
    };
    let g = generate_random_regular_with(a.n, a.d, a.k, ctx.seed(), opts)?;
    let edges: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .map(|e| e.iter().map(|v| v + 1).collect())
        .collect();
    Ok(Output {
        json: json!({"n": g.n(), "k": g.k(), "edges": edges}),
        csv: serialize_hypergraph(&g),
        default_format: Format::Csv,
    })
}

pub fn validate(a: &InputArgs, _ctx: &mut Context) -> CliResult<(Output, bool)> {
    let report = validate_text(&read_input(&a.input)?)?;
    let clean = report.is_clean();
    let mut rows = vec![
        ("n", report.n.to_string()),
        ("k", report.k.to_string()),
        ("declared_edges", report.declared_edges.to_string()),
        ("found_edges", report.found_edges.to_string()),
        ("is_k_uniform", report.is_k_uniform.to_string()),
        ("clean", clean.to_string()),
    ];
    for (d, count) in &report.observed_degrees {
        rows.push(("degree", format!("{d}:{count}")));
    }
    for (line, first) in &report.duplicate_edges {
        rows.push((
            "duplicate_edge",
            format!("line {line} repeats line {first}"),
        ));
    }
    for (line, id) in &report.out_of_range_vertices {
        rows.push(("out_of_range_vertex", format!("line {line}: {id}")));
    }
    for (line, id) in &report.repeated_vertices {
        rows.push(("repeated_vertex", format!("line {line}: {id}")));
    }
    let csv = std::iter::once("field,value\n".to_string())
        .chain(rows.iter().map(|(k, v)| format!("{k},{v}\n")))
        .collect();
    let mut json = serde_json::to_value(&report)?;
    json["clean"] = json!(clean);
    Ok((
        Output {
            json: json!({ "report": json }),
            csv,
            default_format: Format::Json,
        },
        clean,
    ))
}

pub fn count_exact(a: &CountExactArgs, _ctx: &mut Context) -> CliResult<Output> {
    let g = load(&a.input)?;
    let z = exact_count_with_cap(&g, a.cap)?.value;
    Ok(Output {
        json: json!({ "count": z }),
        csv: format!("{z}\n"),
        default_format: Format::Csv,
    })
}

pub fn count_fpras(a: &CountFprasArgs, ctx: &mut Context) -> CliResult<Output> {
    let g = load(&a.input)?;
    let cfg = FprasConfig {
        burn_in_constant: a.burn_in_constant,
    };
    let est = fpras_count(&g, a.eps, ctx.seed(), &cfg)?;
    ctx.set("burn_in_multiplier", est.burn_in_multiplier)?;
    ctx.set("n_samples", est.n_samples)?;
    ctx.set("burn_in_steps", est.burn_in_steps)?;
    let mut csv = format!("# value={}\nvertex,p_zero\n", est.value);
    for (v, p) in est.per_vertex_marginals.iter().enumerate() {
        csv.push_str(&format!("{},{p}\n", v + 1));
    }
    Ok(Output {
        json: serde_json::to_value(&est)?,
        csv,
        default_format: Format::Json,
    })
}

pub fn sample(a: &SampleArgs, ctx: &mut Context) -> CliResult<Output> {
    let g = load(&a.input)?;
    let steps = a
        .steps
        .unwrap_or_else(|| burn_in_steps(g.n(), 1, &FprasConfig::default()));
    ctx.set("steps", steps)?;
    let seed = ctx.seed();
    let mut chain = DiscreteGlauber::new(&g);
    let samples: Vec<String> = (0..a.samples)
        .map(|i| {
            chain.reset();
            chain.run(steps, &mut child_rng(seed, i));
            chain.config().to_string()
        })
        .collect();
    let rows: Vec<Value> = samples
        .iter()
        .enumerate()
        .map(|(i, s)| json!({"sample": i, "config": s}))
        .collect();
    Ok(Output {
        csv: render_table(&rows),
        json: json!({ "samples": samples }),
        default_format: Format::Csv,
    })
}

pub fn couple(a: &CoupleArgs, ctx: &mut Context) -> CliResult<Output> {
    let g = load(&a.input)?;
    let horizon = a.horizon.unwrap_or_else(|| default_horizon(g.n()));
    let stream = stream_for(&g, &a.stream, horizon, ctx)?;
    let report = coupling_report(&g, &stream, a.exhaustive_cap)?;
    let row = json!({
        "horizon": report.horizon,
        "events": stream.len(),
        "certified_time": report.certified.time(),
        "certified_events": report.certified.events(),
        "exhaustive_time": report.exhaustive.and_then(|c| c.time()),
        "exhaustive_events": report.exhaustive.and_then(|c| c.events()),
    });
    Ok(Output {
        csv: render_table(&[row]),
        json: serde_json::to_value(&report)?,
        default_format: Format::Json,
    })
}

fn site_rows(map: &SiteMap) -> Vec<Value> {
    let mut rows = Vec::new();
    for a in 0..map.edge_count() {
        for i in 0..=map.blocks() {
            rows.push(json!({
                "edge_id": a + 1,
                "block": i,
                "active": map.active((a, i)),
                "susceptible": map.susceptible((a, i)),
                "bad": map.bad((a, i)),
            }));
        }
    }
    rows
}

fn classify(a: &PercArgs, ctx: &mut Context) -> CliResult<(Hypergraph, SiteMap)> {
    let g = load(&a.input)?;
    let horizon = ((a.blocks + 1) * g.k()) as f64;
    let stream = stream_for(&g, &a.stream, horizon, ctx)?;
    let map = classify_sites(&g, &stream, a.blocks)?;
    Ok((g, map))
}

pub fn perc_classify(a: &PercArgs, ctx: &mut Context) -> CliResult<Output> {
    let (_, map) = classify(a, ctx)?;
    Ok(Output {
        csv: map.to_csv()?,
        json: json!({ "sites": site_rows(&map) }),
        default_format: Format::Csv,
    })
}

pub fn perc_path(a: &PercPathArgs, ctx: &mut Context) -> CliResult<Output> {
    let (g, map) = classify(&a.perc, ctx)?;
    let variant = match a.variant {
        Variant::General => PercolationVariant::General,
        Variant::Linear => PercolationVariant::Linear,
    };
    let adj = SiteAdjacency::new(&g, variant, a.perc.blocks);
    let mut path = find_bad_path(&map, &adj);
    if a.minimize {
        path = path.map(|p| minimize_path(&p, &adj)).transpose()?;
    }
    let steps: Vec<Value> = path
        .iter()
        .flat_map(|p| p.sites.iter())
        .enumerate()
        .map(|(step, &(e, i))| json!({"step": step, "edge_id": e + 1, "block": i}))
        .collect();
    let csv = if steps.is_empty() {
        "step,edge_id,block\n".to_string()
    } else {
        render_table(&steps)
    };
    Ok(Output {
        json: json!({
            "found": path.is_some(),
            "path": path.as_ref().map(|p| p.to_string()),
            "minimal": path.as_ref().map(|p| p.is_minimal(&adj)),
            "sites": steps,
        }),
        csv,
        default_format: Format::Json,
    })
}

pub fn perc_sweep(a: &PercSweepArgs, ctx: &mut Context) -> CliResult<Output> {
    let params = PercolationSweepParams {
        k_range: a.k.clone(),
        degree_range: a.degrees.clone(),
        trials: a.trials,
        seed: ctx.seed(),
        block: a.block,
    };
    let rec = percolation_sweep(&params)?;
    record_output(rec.to_csv()?, rec.summary_json()?, a.summary.as_deref())
}

pub fn lsrw(a: &LsrwArgs, ctx: &mut Context) -> CliResult<Output> {
    let start = match a.start {
        Start::AllOnes => LsrwStart::AllOnes,
        Start::OneZero => LsrwStart::OneZero,
    };
    let mode = match a.trials {
        Some(trials) => LsrwMode::MonteCarlo {
            trials,
            seed: ctx.seed(),
        },
        None => LsrwMode::Exact,
    };
    let est = lsrw_expected_visits(a.m, start, mode)?;
    let row = json!({
        "m": a.m,
        "mode": if a.trials.is_some() { "monte-carlo" } else { "exact" },
        "mean": est.mean,
        "stderr": est.stderr,
        "samples": est.samples,
        "bound": if matches!(start, LsrwStart::AllOnes) { 2.0 + 6.0 / f64::from(a.m) } else { 6.0 / f64::from(a.m) },
    });
    Ok(Output {
        csv: render_table(std::slice::from_ref(&row)),
        json: row,
        default_format: Format::Json,
    })
}

pub fn pc(a: &PcArgs, ctx: &mut Context) -> CliResult<Output> {
    let rs = r_star(a.max_degree, a.k);
    let r = a.r.unwrap_or(rs);
    ctx.set("r", r)?;
    let value = pc_value(r, a.max_degree, a.k)?;
    let row = json!({
        "r": r,
        "r_star": rs,
        "pc": value,
        "two_e_minus_k": 2.0 * (-(a.k as f64)).exp(),
    });
    Ok(Output {
        csv: render_table(std::slice::from_ref(&row)),
        json: row,
        default_format: Format::Json,
    })
}

pub fn mix_scaling(a: &MixScalingArgs, ctx: &mut Context) -> CliResult<Output> {
    let params = MixingScalingParams {
        k: a.k,
        max_degree: a.max_degree,
        n_grid: a.n_grid.clone(),
        replicas: a.replicas,
        seed: ctx.seed(),
        horizon: a.horizon,
        exhaustive_cap: a.exhaustive_cap,
    };
    let rec = mixing_scaling(&params)?;
    record_output(rec.to_csv()?, rec.summary_json()?, a.summary.as_deref())
}

pub fn tv_exact(a: &TvExactArgs, _ctx: &mut Context) -> CliResult<Output> {
    let g = load(&a.input)?;
    let curve = tv_distance_exact(&g, &a.t_grid)?;
    Ok(Output {
        csv: csv_rows(&curve)?,
        json: json!({ "curve": curve }),
        default_format: Format::Csv,
    })
}

pub fn defects_error() -> CliError {
    CliError::Defects("hypergraph file has defects".into())
}
