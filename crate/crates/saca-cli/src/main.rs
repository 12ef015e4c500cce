use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use saca::{
    dbscan, filter_outlier_mins, metrics, nearest_neighbor_distances, pairwise_distances, synth,
    Dataset, SacaConfig,
};
use saca_cli::io::{self, LoadOptions};
use saca_cli::record::{BenchmarkColumn, BenchmarkRecord, RunRecord};
use saca_cli::svg;

#[derive(Parser)]
#[command(name = "saca", version, about = "Density-based clustering with selective attention")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cluster one dataset; write labels and optional metrics/plot files
    Cluster(ClusterArgs),
    /// Compare SACA against grid-searched DBSCAN on labelled data
    Benchmark(BenchmarkArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Delimited input file (comma or whitespace separated)
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    input: Option<PathBuf>,
    /// Built-in dataset: noisy-circles, rings, noisy-spiral, moons-stars,
    /// 3compound, unbalanced
    #[arg(long)]
    preset: Option<String>,
    /// Zero-based column of the input file holding ground-truth labels
    #[arg(long)]
    truth_col: Option<usize>,
    /// Seed for preset generation
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl InputArgs {
    fn load(&self) -> Result<(String, Dataset)> {
        if let Some(path) = &self.input {
            let options = LoadOptions {
                label_column: self.truth_col,
                ..LoadOptions::default()
            };
            let data = io::load_delimited(path, &options)?;
            Ok((path.display().to_string(), data))
        } else {
            let name = self.preset.as_deref().unwrap();
            let data = synth::generate_preset(name, self.seed)?;
            Ok((format!("preset:{name}"), data))
        }
    }
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Algo {
    Saca,
    Dbscan,
}

#[derive(Args)]
struct ClusterArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Attention Selectivity Coefficient
    #[arg(short, default_value_t = 1)]
    c: u64,
    /// Reassign pruned points to the nearest cluster centroid instead of
    /// the nearest core point
    #[arg(long)]
    use_center: bool,
    /// Keep outlier-flagged points out of the final clusters (label -1)
    #[arg(long)]
    exclude_outliers: bool,
    /// Modified Z-score rejection threshold
    #[arg(long, default_value_t = 10.0)]
    z_threshold: f64,
    /// Write labels here instead of stdout
    #[arg(long)]
    labels_out: Option<PathBuf>,
    /// Write a JSON run record here
    #[arg(long)]
    metrics: Option<PathBuf>,
    /// Write an SVG scatter plot here
    #[arg(long)]
    plot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algo::Saca)]
    algo: Algo,
    /// DBSCAN neighbourhood radius
    #[arg(long, requires = "min_pts")]
    eps: Option<f64>,
    /// DBSCAN density threshold
    #[arg(long, requires = "eps")]
    min_pts: Option<usize>,
}

#[derive(Args)]
struct BenchmarkArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Write the comparison as JSON here
    #[arg(long)]
    metrics: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Cluster(args) => cmd_cluster(&args),
        Cmd::Benchmark(args) => cmd_benchmark(&args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        let code = match err.downcast_ref::<saca::Error>() {
            Some(saca::Error::DecreaseC) => 3,
            _ => 2,
        };
        std::process::exit(code);
    }
}

fn cmd_cluster(args: &ClusterArgs) -> Result<()> {
    let (input_name, data) = args.input.load()?;
    let start = Instant::now();
    let mut record = RunRecord {
        input: input_name,
        algo: String::new(),
        config: None,
        eps: None,
        min_pts: None,
        threshold: None,
        outliers: None,
        clusters: 0,
        wall_ms: 0.0,
        metrics: None,
    };

    let labels = match args.algo {
        Algo::Saca => {
            let config = SacaConfig {
                c: args.c,
                use_center: args.use_center,
                z_threshold: args.z_threshold,
                exclude_outliers: args.exclude_outliers,
                seed: None,
            };
            let dist = pairwise_distances(&data);
            let mins = nearest_neighbor_distances(&dist)?;
            let (_, outlier_report) = filter_outlier_mins(&mins, config.z_threshold)?;
            let (assignment, stats) =
                saca::saca_cluster_with_distances(&data, &dist, &config)?;
            record.algo = "saca".into();
            record.config = Some(config);
            record.threshold = Some(stats);
            record.outliers = Some(outlier_report.outlier_indices.len());
            record.clusters = assignment.num_clusters;
            assignment.labels
        }
        Algo::Dbscan => {
            let eps = args
                .eps
                .ok_or_else(|| anyhow!("--algo dbscan requires --eps and --min-pts"))?;
            let min_pts = args.min_pts.unwrap();
            let labels = dbscan::dbscan(&data, eps, min_pts)?;
            record.algo = "dbscan".into();
            record.eps = Some(eps);
            record.min_pts = Some(min_pts);
            record.clusters = count_clusters(&labels);
            labels
        }
    };
    record.wall_ms = start.elapsed().as_secs_f64() * 1e3;

    if let Some(path) = &args.metrics {
        record.metrics = Some(metrics::evaluate(&data, &labels)?);
        let json = serde_json::to_string_pretty(&record)?;
        std::fs::write(path, json + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if let Some(path) = &args.plot {
        let image = svg::render_scatter(&data, &labels)?;
        std::fs::write(path, image)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    let formatted = io::format_labels(&labels);
    match &args.labels_out {
        Some(path) => std::fs::write(path, formatted)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{formatted}"),
    }
    eprintln!(
        "{} points -> {} clusters in {:.1} ms",
        data.len(),
        record.clusters,
        record.wall_ms
    );
    Ok(())
}

const BENCH_C_SWEEP: std::ops::RangeInclusive<u64> = 1..=10;
const BENCH_EPS_CELLS: usize = 20;
const BENCH_MIN_PTS: [usize; 5] = [2, 3, 5, 10, 20];

fn cmd_benchmark(args: &BenchmarkArgs) -> Result<()> {
    let (input_name, data) = args.input.load()?;
    let truth = data
        .truth_labels()
        .ok_or_else(|| anyhow!("benchmark needs ground truth; pass --truth-col or a preset"))?
        .to_vec();

    let mut best_saca: Option<(f64, u64, Vec<i32>)> = None;
    for c in BENCH_C_SWEEP {
        let config = SacaConfig {
            c,
            ..SacaConfig::default()
        };
        let assignment = match saca::saca_cluster(&data, &config) {
            Ok(a) => a,
            Err(saca::Error::DecreaseC) => break,
            Err(e) => return Err(e.into()),
        };
        let ari = metrics::adjusted_rand_index(&truth, &assignment.labels)?;
        if best_saca.as_ref().map_or(true, |(b, _, _)| ari > *b) {
            best_saca = Some((ari, c, assignment.labels));
        }
    }
    let (_, best_c, saca_labels) =
        best_saca.ok_or_else(|| anyhow!("SACA produced no clustering for any C"))?;

    let eps_grid = dbscan::eps_grid_from_data(&data, BENCH_EPS_CELLS);
    let (best_eps, best_min_pts, _) =
        dbscan::dbscan_grid_search(&data, &truth, &eps_grid, &BENCH_MIN_PTS)?;
    let dbscan_labels = dbscan::dbscan(&data, best_eps, best_min_pts)?;

    let record = BenchmarkRecord {
        input: input_name,
        saca: BenchmarkColumn {
            params: format!("C={best_c}"),
            clusters: count_clusters(&saca_labels),
            metrics: metrics::evaluate(&data, &saca_labels)?,
        },
        dbscan: BenchmarkColumn {
            params: format!("eps={best_eps:.4} min_pts={best_min_pts}"),
            clusters: count_clusters(&dbscan_labels),
            metrics: metrics::evaluate(&data, &dbscan_labels)?,
        },
    };
    print!("{}", record.table());
    if let Some(path) = &args.metrics {
        let json = serde_json::to_string_pretty(&record)?;
        std::fs::write(path, json + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn count_clusters(labels: &[i32]) -> usize {
    let mut seen: Vec<i32> = labels.iter().copied().filter(|&l| l >= 0).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cluster_count_ignores_noise() {
        assert_eq!(count_clusters(&[1, 1, 2, -1, 3]), 3);
        assert_eq!(count_clusters(&[-1, -1]), 0);
    }
}
