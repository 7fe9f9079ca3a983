mod common;

use hypermix_core::counting::FprasConfig;
use hypermix_core::experiments::{
    fpras_accuracy, mixing_scaling, percolation_sweep, tv_distance_exact, FprasAccuracyRecord,
    MixingScalingParams, MixingScalingRecord, PercolationSweepParams, PercolationSweepRecord,
    Summarize, SCHEMA_VERSION,
};
use hypermix_core::{Error, Hypergraph};

fn small_mixing(n_grid: Vec<usize>) -> MixingScalingParams {
    MixingScalingParams {
        k: 3,
        max_degree: 2,
        n_grid,
        replicas: 30,
        seed: 9,
        horizon: None,
        exhaustive_cap: Some(1 << 12),
    }
}

#[test]
fn single_grid_point_is_flagged() {
    let rec = mixing_scaling(&small_mixing(vec![12])).unwrap();
    assert!(rec.summary.fit.is_none());
    assert!(rec.summary.flags.iter().any(|f| f == "insufficient grid"));
}

#[test]
fn mixing_record_is_reproducible_and_recomputable() {
    let params = small_mixing(vec![9, 12, 15]);
    let rec = mixing_scaling(&params).unwrap();
    assert_eq!(rec, mixing_scaling(&params).unwrap());
    assert_eq!(rec.replicas.len(), 90);
    assert_eq!(
        rec.summary,
        MixingScalingRecord::summarize(&params, &rec.replicas)
    );
    for r in &rec.replicas {
        if let (Some(c), Some(e)) = (r.certified_time, r.exhaustive_time) {
            assert!(e <= c);
        }
    }
    let csv = rec.to_csv().unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        format!("# schema_version={SCHEMA_VERSION} experiment=mix-scaling")
    );
    assert!(lines.next().unwrap().starts_with("n,replica,graph_seed"));
    assert_eq!(lines.count(), 90);
    let json: serde_json::Value = serde_json::from_str(&rec.summary_json().unwrap()).unwrap();
    assert_eq!(json["schema_version"], SCHEMA_VERSION);
    assert_eq!(json["replica_count"], 90);
}

#[test]
fn mixing_reports_generation_failures() {
    let mut params = small_mixing(vec![11]);
    params.k = 4;
    assert!(matches!(
        mixing_scaling(&params),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn tv_curve_examples() {
    let g = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    let curve = tv_distance_exact(&g, &[0, 1, 2, 5, 10, 40, 160]).unwrap();
    assert!((curve[0].tv - (1.0 - 1.0 / 25.0)).abs() < 1e-12);
    assert!(curve.windows(2).all(|w| w[1].tv <= w[0].tv + 1e-12));
    assert!(curve.last().unwrap().tv < 0.01);
    assert!(tv_distance_exact(&g, &[3, 1]).is_err());
    let big = Hypergraph::empty(9, 2).unwrap();
    assert!(matches!(
        tv_distance_exact(&big, &[0]),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn percolation_sweep_cells() {
    let params = PercolationSweepParams {
        k_range: vec![5, 6],
        degree_range: vec![2],
        trials: 2000,
        seed: 3,
        block: 1,
    };
    let rec = percolation_sweep(&params).unwrap();
    assert_eq!(rec, percolation_sweep(&params).unwrap());
    assert_eq!(
        rec.summary,
        PercolationSweepRecord::summarize(&params, &rec.replicas)
    );
    assert_eq!(rec.replicas.len(), 2);
    assert!((rec.replicas[1].active_bound - 0.5930).abs() < 5e-5);
    assert!(rec.summary.all_pass);
}

#[test]
fn fpras_accuracy_on_trivial_suite() {
    let suite = vec![
        ("empty-8".to_string(), Hypergraph::empty(8, 2).unwrap()),
        (
            "single-edge".to_string(),
            Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap(),
        ),
    ];
    let cfg = FprasConfig::default();
    let rec = fpras_accuracy(&suite, 0.2, 4, 12, &cfg).unwrap();
    assert_eq!(rec, fpras_accuracy(&suite, 0.2, 4, 12, &cfg).unwrap());
    assert_eq!(
        rec.summary,
        FprasAccuracyRecord::summarize(&rec.parameters, &rec.replicas)
    );
    assert_eq!(rec.summary.instances[0].exact, 256.0);
    assert_eq!(rec.summary.instances[0].fraction_within, 1.0);
    assert_eq!(rec.summary.instances[1].exact, 7.0);
    assert_eq!(rec.to_csv().unwrap().lines().count(), 2 + 8);

    let too_big = vec![("empty-41".to_string(), Hypergraph::empty(41, 2).unwrap())];
    assert!(matches!(
        fpras_accuracy(&too_big, 0.2, 1, 0, &cfg),
        Err(Error::CapExceeded { .. })
    ));
}
