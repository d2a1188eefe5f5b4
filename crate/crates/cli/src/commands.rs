use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use hierarchyrank::metrics::{
    gini, ks_two_sample, lorenz, relative_rank_change, upward_fraction, write_lorenz_csv,
    write_rank_change_csv, RankChangeSample,
};
use hierarchyrank::mvr::{
    brute_force_mvr, load_ranking_csv, load_sampler_config, sample_mvr, write_ranking_csv,
    SamplerConfig,
};
use hierarchyrank::network::{
    build_network, load_edge_list, load_records, load_whitelist, write_edge_list, HiringNetwork,
    HiringRecord, NetworkFilter, YearRange,
};
use hierarchyrank::nullmodel::{
    bootstrap_rho, empirical_p_value, null_rho_distribution, replicate_seed, significance,
    write_distribution_csv, RhoDistribution,
};
use hierarchyrank::synth::{generate_planted, write_truth_csv, PlantedConfig};
use hierarchyrank::Error;
use serde::Serialize;

use crate::args::{
    FilterArgs, InputArgs, MetricKind, MetricsArgs, NullArgs, OracleArgs, RankArgs, SamplerArgs,
    SynthArgs,
};
use crate::error::CliError;
use crate::manifest::{FilterEcho, RunManifest, MANIFEST_FILE};

type CliResult<T> = Result<T, CliError>;

fn open_input(path: &Path) -> CliResult<File> {
    File::open(path).map_err(|e| CliError::usage(format!("cannot open {}: {e}", path.display())))
}

/// Attaches the file name to parse errors.
fn in_file(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| match CliError::from(e) {
        CliError::Usage(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
        other => other,
    }
}

/// Collects output files written into one directory. Names are recorded
/// relative to it.
struct OutDir {
    dir: PathBuf,
    written: Vec<String>,
}

impl OutDir {
    fn create(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::Compute(format!("cannot create {}: {e}", dir.display())))?;
        Ok(OutDir {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        })
    }

    fn write<F>(&mut self, name: &str, fill: F) -> CliResult<()>
    where
        F: FnOnce(&mut BufWriter<File>) -> Result<(), Error>,
    {
        let path = self.dir.join(name);
        let file = File::create(&path)
            .map_err(|e| CliError::Compute(format!("cannot write {}: {e}", path.display())))?;
        let mut sink = BufWriter::new(file);
        fill(&mut sink)?;
        std::io::Write::flush(&mut sink)?;
        self.written.push(name.to_string());
        Ok(())
    }

    fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> CliResult<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, |w| Ok(std::io::Write::write_all(w, text.as_bytes())?))
    }

    fn finish(mut self, mut manifest: RunManifest) -> CliResult<()> {
        self.written.push(MANIFEST_FILE.to_string());
        manifest.outputs = self.written.clone();
        self.write_json(MANIFEST_FILE, &manifest)
    }
}

fn build_filter(args: &FilterArgs) -> CliResult<NetworkFilter> {
    let whitelist = match &args.whitelist {
        Some(path) => Some(load_whitelist(open_input(path)?).map_err(in_file(path))?),
        None => None,
    };
    Ok(NetworkFilter {
        year_range: args.years,
        disciplines: (!args.disciplines.is_empty())
            .then(|| args.disciplines.iter().cloned().collect()),
        whitelist,
    })
}

fn read_records(path: &Path) -> CliResult<Vec<HiringRecord>> {
    load_records(open_input(path)?).map_err(in_file(path))
}

fn load_network(input: &InputArgs, filter: &FilterArgs) -> CliResult<(HiringNetwork, PathBuf)> {
    match (&input.records, &input.edges) {
        (Some(path), _) => {
            let records = read_records(path)?;
            let net = build_network(&records, &build_filter(filter)?)?;
            Ok((net, path.clone()))
        }
        (None, Some(path)) => {
            if !filter.is_empty() {
                return Err(CliError::usage(
                    "--years, --discipline and --whitelist need --records input",
                ));
            }
            let net = load_edge_list(open_input(path)?).map_err(in_file(path))?;
            Ok((net, path.clone()))
        }
        (None, None) => Err(CliError::usage("one of --records or --edges is required")),
    }
}

fn sampler_config(args: &SamplerArgs, seed: u64) -> CliResult<SamplerConfig> {
    let mut cfg = match &args.sampler_config {
        Some(path) => load_sampler_config(open_input(path)?, SamplerConfig::default())
            .map_err(in_file(path))?,
        None => SamplerConfig::default(),
    };
    if let Some(v) = args.iters {
        cfg.total_iterations = v;
    }
    if let Some(v) = args.burnin {
        cfg.burn_in = v;
    }
    if let Some(v) = args.interval {
        cfg.sample_interval = v;
    }
    if let Some(v) = args.restarts {
        cfg.restarts = v;
    }
    cfg.seed = seed;
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    Ok(cfg)
}

#[derive(Serialize)]
struct RankReport {
    n_nodes: usize,
    n_edges: usize,
    total_weight: u64,
    self_loop_weight: u64,
    best_rho: f64,
    best_score: i64,
    n_samples: usize,
}

pub fn rank(args: &RankArgs, argv: &[String]) -> CliResult<()> {
    let (net, input) = load_network(&args.input, &args.filter)?;
    let sampler = sampler_config(&args.sampler, args.seed)?;
    let result = sample_mvr(&net, &sampler)?;

    let mut out = OutDir::create(&args.out)?;
    out.write("ranking.csv", |w| {
        write_ranking_csv(net.registry(), &result, w)
    })?;
    out.write_json(
        "report.json",
        &RankReport {
            n_nodes: net.n_nodes(),
            n_edges: net.n_edges(),
            total_weight: net.total_weight(),
            self_loop_weight: net.self_loop_weight(),
            best_rho: result.best_rho,
            best_score: result.best_score,
            n_samples: result.samples.len(),
        },
    )?;
    let mut manifest = RunManifest::new("rank", argv).input(&input);
    manifest.filter = Some(FilterEcho::from(&args.filter));
    manifest.sampler = Some(sampler);
    manifest.seed = Some(args.seed);
    out.finish(manifest)?;

    println!(
        "{} institutions, {} placements, best rho {:.4}",
        net.n_nodes(),
        net.total_weight(),
        result.best_rho
    );
    let shown = args.top.unwrap_or(usize::MAX);
    for (pos, &node) in result.consensus.order().iter().take(shown).enumerate() {
        let (lo, hi) = result.ci95[node];
        println!(
            "{:>4}  {}  {:.4} [{lo:.4}, {hi:.4}]",
            pos + 1,
            net.registry().name(node),
            result.prestige_score[node]
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct DistributionSummary {
    mean: f64,
    std: f64,
    n: usize,
}

impl From<&RhoDistribution> for DistributionSummary {
    fn from(d: &RhoDistribution) -> Self {
        DistributionSummary {
            mean: d.mean,
            std: d.std,
            n: d.n,
        }
    }
}

#[derive(Serialize)]
struct SignificanceJson {
    degenerate: bool,
    /// Absent when the test is degenerate or the statistic is infinite.
    t_statistic: Option<f64>,
    degrees_of_freedom: Option<f64>,
    p_value_t: Option<f64>,
    p_value_empirical: f64,
    empirical_mean: f64,
    null_mean: f64,
    empirical: DistributionSummary,
    null: DistributionSummary,
}

fn significance_json(emp: &RhoDistribution, null: &RhoDistribution) -> CliResult<SignificanceJson> {
    let finite = |x: f64| x.is_finite().then_some(x);
    let (degenerate, t, df, p) = match significance(emp, null) {
        Ok(r) => (
            false,
            finite(r.t_statistic),
            finite(r.degrees_of_freedom),
            Some(r.p_value_t),
        ),
        Err(Error::DegenerateTest) => (true, None, None, None),
        Err(e) => return Err(e.into()),
    };
    Ok(SignificanceJson {
        degenerate,
        t_statistic: t,
        degrees_of_freedom: df,
        p_value_t: p,
        p_value_empirical: empirical_p_value(emp, null),
        empirical_mean: emp.mean,
        null_mean: null.mean,
        empirical: emp.into(),
        null: null.into(),
    })
}

pub fn null(args: &NullArgs, argv: &[String]) -> CliResult<()> {
    let (net, input) = load_network(&args.input, &args.filter)?;
    let sampler = sampler_config(&args.sampler, args.seed)?;
    let b = args.replicates as usize;
    let emp = bootstrap_rho(&net, b, &sampler, replicate_seed(args.seed, 0))?;
    let null = null_rho_distribution(&net, b, &sampler, replicate_seed(args.seed, 1))?;
    let report = significance_json(&emp, &null)?;

    let mut out = OutDir::create(&args.out)?;
    out.write("rho_empirical.csv", |w| write_distribution_csv(&emp, w))?;
    out.write("rho_null.csv", |w| write_distribution_csv(&null, w))?;
    out.write_json("significance.json", &report)?;
    let mut manifest = RunManifest::new("null", argv).input(&input);
    manifest.filter = Some(FilterEcho::from(&args.filter));
    manifest.sampler = Some(sampler);
    manifest.seed = Some(args.seed);
    out.finish(manifest)?;

    println!(
        "empirical rho {:.4} ± {:.4}, null rho {:.4} ± {:.4}, empirical p {:.4}{}",
        emp.mean,
        emp.std,
        null.mean,
        null.std,
        report.p_value_empirical,
        if report.degenerate {
            " (t-test degenerate)".to_string()
        } else {
            format!(", t-test p {:.3e}", report.p_value_t.unwrap_or(f64::NAN))
        }
    );
    Ok(())
}

#[derive(Serialize, Default)]
struct MetricsSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    gini: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_institutions: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upward_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mean_rank_change: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_total: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_up: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_dropped: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(rename = "ks_D")]
    ks_d: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ks_p: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    cohorts: Vec<CohortSummary>,
}

#[derive(Serialize)]
struct CohortSummary {
    years: String,
    n_total: usize,
    n_up: usize,
    n_dropped: usize,
    upward_fraction: f64,
    mean_rank_change: f64,
}

impl CohortSummary {
    fn new(years: YearRange, s: &RankChangeSample) -> CliResult<Self> {
        Ok(CohortSummary {
            years: years.to_string(),
            n_total: s.n_total,
            n_up: s.n_up,
            n_dropped: s.n_dropped,
            upward_fraction: upward_fraction(s)?,
            mean_rank_change: s.mean(),
        })
    }
}

pub fn metrics(args: &MetricsArgs, argv: &[String]) -> CliResult<()> {
    let records = build_filter(&args.filter)?.apply(&read_records(&args.records)?);
    let mut manifest = RunManifest::new("metrics", argv).input(&args.records);
    manifest.filter = Some(FilterEcho::from(&args.filter));

    let ranking = match (args.metric, &args.ranking) {
        (MetricKind::Rankchange | MetricKind::Ks, None) => {
            return Err(CliError::usage(
                "--ranking is required for rankchange and ks",
            ))
        }
        (_, Some(path)) => {
            manifest = manifest.input(path);
            Some(load_ranking_csv(open_input(path)?).map_err(in_file(path))?)
        }
        (_, None) => None,
    };
    if args.metric == MetricKind::Ks && args.cohorts.len() != 2 {
        return Err(CliError::usage("ks needs exactly two --cohort A:B ranges"));
    }
    if args.metric != MetricKind::Ks && !args.cohorts.is_empty() {
        return Err(CliError::usage("--cohort only applies to ks"));
    }

    let mut out = OutDir::create(&args.out)?;
    let mut summary = MetricsSummary::default();
    match args.metric {
        MetricKind::Gini | MetricKind::Lorenz => {
            let net = build_network(&records, &NetworkFilter::default())?;
            let production: Vec<f64> = net.out_degree().iter().map(|&d| d as f64).collect();
            summary.gini = Some(gini(&production)?);
            summary.n_institutions = Some(net.n_nodes());
            if args.metric == MetricKind::Lorenz {
                let curve = lorenz(&production)?;
                out.write("lorenz.csv", |w| write_lorenz_csv(&curve, w))?;
            }
        }
        MetricKind::Rankchange => {
            let (registry, ranking) = ranking.as_ref().expect("checked above");
            let sample = relative_rank_change(&records, registry, ranking)?;
            out.write("rank_change.csv", |w| write_rank_change_csv(&sample, w))?;
            summary.upward_fraction = Some(upward_fraction(&sample)?);
            summary.mean_rank_change = Some(sample.mean());
            summary.n_total = Some(sample.n_total);
            summary.n_up = Some(sample.n_up);
            summary.n_dropped = Some(sample.n_dropped);
        }
        MetricKind::Ks => {
            let (registry, ranking) = ranking.as_ref().expect("checked above");
            let mut samples = Vec::with_capacity(2);
            for (cohort, name) in args.cohorts.iter().zip(["a", "b"]) {
                let filter = NetworkFilter {
                    year_range: Some(*cohort),
                    ..Default::default()
                };
                let sample = relative_rank_change(&filter.apply(&records), registry, ranking)
                    .map_err(|e| CliError::Compute(format!("cohort {cohort}: {e}")))?;
                out.write(&format!("rank_change_{name}.csv"), |w| {
                    write_rank_change_csv(&sample, w)
                })?;
                summary.cohorts.push(CohortSummary::new(*cohort, &sample)?);
                samples.push(sample);
            }
            let ks = ks_two_sample(&samples[0].values, &samples[1].values)?;
            summary.ks_d = Some(ks.statistic);
            summary.ks_p = Some(ks.p_value);
            summary.n_dropped = Some(samples.iter().map(|s| s.n_dropped).sum());
        }
    }
    out.write_json("summary.json", &summary)?;
    let text = serde_json::to_string_pretty(&summary)?;
    out.finish(manifest)?;
    println!("{text}");
    Ok(())
}

pub fn synth(args: &SynthArgs, argv: &[String]) -> CliResult<()> {
    let cfg = PlantedConfig {
        n_nodes: args.nodes as usize,
        n_edges: args.edges,
        p_down: args.pdown,
        producer_skew: args.skew,
        seed: args.seed,
    };
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    let (net, truth) = generate_planted(&cfg)?;

    let mut out = OutDir::create(&args.out)?;
    out.write("edges.csv", |w| write_edge_list(&net, w))?;
    out.write("truth.csv", |w| write_truth_csv(net.registry(), &truth, w))?;
    let mut manifest = RunManifest::new("synth", argv);
    manifest.seed = Some(args.seed);
    out.finish(manifest)?;

    let rho = hierarchyrank::mvr::rho(&net, &truth)?;
    println!(
        "{} institutions, {} placements, planted rho {rho:.4}",
        net.n_nodes(),
        net.total_weight()
    );
    Ok(())
}

#[derive(Serialize)]
struct OracleJson {
    optimal_score: i64,
    optimal_rho: f64,
    n_optima: usize,
    /// Institutions best first, one list per optimal ranking.
    optima: Vec<Vec<String>>,
}

pub fn oracle(args: &OracleArgs, argv: &[String]) -> CliResult<()> {
    let net = load_edge_list(open_input(&args.edges)?).map_err(in_file(&args.edges))?;
    let exact = brute_force_mvr(&net)?;
    let reg = net.registry();
    let report = OracleJson {
        optimal_score: exact.optimal_score,
        optimal_rho: exact.optimal_rho,
        n_optima: exact.optima.len(),
        optima: exact
            .optima
            .iter()
            .map(|r| r.order().iter().map(|&n| reg.name(n).to_string()).collect())
            .collect(),
    };
    let mut out = OutDir::create(&args.out)?;
    out.write_json("oracle.json", &report)?;
    out.finish(RunManifest::new("oracle", argv).input(&args.edges))?;
    println!(
        "optimal score {}, rho {:.4}, {} optimal rankings",
        report.optimal_score, report.optimal_rho, report.n_optima
    );
    Ok(())
}
