//! Thin command-line front end over the `uavcov` library.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on evaluation failures.
//! The only environment variable honored is `UAVCOV_OUT_DIR`, which
//! overrides the output directory for figure reproduction.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use uavcov::config::{self, CoverageMode, OverrideValue, ScenarioConfig};
use uavcov::coverage::coverage_total;
use uavcov::link::{los_probability, path_loss, path_loss_db, LinkKind};
use uavcov::montecarlo::{simulate_coverage, simulate_service, NearestSampler, SimConfig};
use uavcov::propulsion::{hover_power, trip_energy, trip_power};
use uavcov::rectenna::{fit_rectenna, read_efficiency_csv};
use uavcov::service::ServiceAnalytics;
use uavcov::sweep::{load_calibration, reproduce_figure, run_sweep, FigureId, SweepSpec};
use uavcov::units::{linear_to_db, watts_to_dbm};

#[derive(Parser)]
#[command(name = "uavcov", version, about = "UAV-powered sensor coverage analysis")]
struct Cli {
    /// Treat radiated-power violations as errors instead of warnings.
    #[arg(long, global = true)]
    strict_fcc: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one analytic quantity.
    #[command(subcommand)]
    Eval(EvalCommand),
    /// Seeded Monte Carlo estimates of service and coverage.
    Simulate(SimulateArgs),
    /// Run a parameter sweep from a spec file.
    Sweep(SweepArgs),
    /// Fit a rectenna efficiency polynomial from a measurement CSV.
    FitRectenna(FitArgs),
    /// Reproduce a shipped figure's data grid and summary checks.
    Reproduce(ReproduceArgs),
}

#[derive(Subcommand)]
enum EvalCommand {
    /// Trip power, hover power, and round-trip energy.
    Propulsion(PropulsionArgs),
    /// Path loss, LoS probability, and intercepted power at unit fade.
    Link(LinkArgs),
    /// Service analytics and the unconditional service probability.
    Service(ServiceArgs),
    /// Full coverage probability.
    Coverage(CoverageArgs),
}

#[derive(Args)]
struct PropulsionArgs {
    /// Trip velocity, m/s.
    #[arg(long)]
    v: f64,
    /// One-way ground distance for the energy report, m.
    #[arg(long, default_value_t = 0.0)]
    r_delta: f64,
    /// Descent distance, m.
    #[arg(long, default_value_t = 0.0)]
    h_l: f64,
    /// Optional config supplying the propulsion coefficients.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct LinkArgs {
    #[arg(long)]
    config: PathBuf,
    /// UAV-sensor distance, m.
    #[arg(long)]
    d: f64,
    /// Link state: los | nlos.
    #[arg(long)]
    link: String,
}

#[derive(Args)]
struct ServiceArgs {
    #[arg(long)]
    config: PathBuf,
    /// Emit a CSV row instead of text.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CoverageArgs {
    #[arg(long)]
    config: PathBuf,
    /// Coverage mode override: paper | nonlinear.
    #[arg(long)]
    mode: Option<String>,
    /// Emit a CSV row instead of text.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// Coverage mode override: paper | nonlinear.
    #[arg(long)]
    mode: Option<String>,
    /// Nearest-station sampler: disc | rayleigh.
    #[arg(long, default_value = "disc")]
    sampler: String,
    /// Simulation window radius override, m (disc sampler).
    #[arg(long)]
    window: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep specification file.
    #[arg(long)]
    spec: PathBuf,
    /// Base config; overrides the spec's base_config.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Suppress the timestamped banner line for byte-reproducible output.
    #[arg(long)]
    no_banner: bool,
}

#[derive(Args)]
struct FitArgs {
    /// Two-column CSV: power_dbm,efficiency (header row required).
    #[arg(long)]
    csv: PathBuf,
    /// Number of polynomial coefficients.
    #[arg(long)]
    degree: usize,
}

#[derive(Args)]
struct ReproduceArgs {
    /// One of fig3a, fig3b, fig3c, fig4a, fig4b, fig5.
    #[arg(long)]
    figure: String,
    /// Calibration document (default: calibration.paper-figs, then
    /// configs/calibration.paper-figs).
    #[arg(long)]
    calibration: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with successful exit
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_checked(path: &PathBuf, strict_fcc: bool) -> uavcov::Result<ScenarioConfig> {
    let cfg = config::load_config(path)?;
    let report = config::check_eirp_compliance(cfg.p_t, cfg.g_t)?;
    if !report.ok() {
        let msg = format!(
            "radiated power out of bounds: EIRP {:.3} W ({:.2} dBm), conducted {:.3} W",
            report.eirp_watts, report.eirp_dbm, cfg.p_t
        );
        if strict_fcc {
            return Err(uavcov::Error::Domain(msg));
        }
        eprintln!("warning: {msg}");
    }
    Ok(cfg)
}

fn apply_mode(cfg: ScenarioConfig, mode: &Option<String>) -> uavcov::Result<ScenarioConfig> {
    match mode {
        None => Ok(cfg),
        Some(m) => {
            CoverageMode::parse(m)?;
            cfg.with_override("coverage_mode", &OverrideValue::Text(m.clone()))
        }
    }
}

fn run(cli: &Cli) -> uavcov::Result<()> {
    match &cli.command {
        Command::Eval(EvalCommand::Propulsion(args)) => {
            let model = match &args.config {
                Some(path) => load_checked(path, cli.strict_fcc)?.propulsion,
                None => Default::default(),
            };
            let p_j = trip_power(&model, args.v)?;
            let p_h = hover_power(&model);
            let e_j = trip_energy(&model, args.r_delta, args.h_l, args.v)?;
            println!("p_j_w,{p_j}");
            println!("p_h_w,{p_h}");
            println!("e_j_j,{e_j}");
        }
        Command::Eval(EvalCommand::Link(args)) => {
            let cfg = load_checked(&args.config, cli.strict_fcc)?;
            let kind = match args.link.as_str() {
                "los" => LinkKind::LoS,
                "nlos" => LinkKind::NLoS,
                other => {
                    return Err(uavcov::Error::Domain(format!(
                        "unknown link state `{other}` (expected los|nlos)"
                    )))
                }
            };
            let pl_db = path_loss_db(cfg.f_c, args.d, kind, cfg.eta_los_db, cfg.eta_nlos_db)?;
            let pl = path_loss(cfg.f_c, args.d, kind, cfg.eta_los_db, cfg.eta_nlos_db)?;
            let p_los = los_probability(cfg.theta_b_deg, cfg.env_gamma, cfg.env_delta)?;
            let p_i = uavcov::link::intercepted_power(cfg.eirp(), cfg.g_r, 1.0, pl)?;
            println!("pl_db,{pl_db}");
            println!("p_los,{p_los}");
            println!("p_i_w,{p_i}");
            println!("p_i_dbm,{}", watts_to_dbm(p_i));
        }
        Command::Eval(EvalCommand::Service(args)) => {
            let cfg = load_checked(&args.config, cli.strict_fcc)?;
            let analytics = ServiceAnalytics::from_config(&cfg)?;
            let p_e = analytics.service_probability()?;
            if args.csv {
                println!("zeta,r_max,x0,x_max,p_e");
                println!(
                    "{},{},{},{},{}",
                    analytics.zeta, analytics.r_max, analytics.x0, analytics.x_max, p_e
                );
            } else {
                println!("zeta    = {} m*W", analytics.zeta);
                println!("r_max   = {} m", analytics.r_max);
                println!("x0      = {}", analytics.x0);
                println!("x_max   = {}", analytics.x_max);
                println!("p_e     = {p_e}");
            }
        }
        Command::Eval(EvalCommand::Coverage(args)) => {
            let cfg = apply_mode(load_checked(&args.config, cli.strict_fcc)?, &args.mode)?;
            let result = coverage_total(&cfg)?;
            if let Some(note) = &result.sensor.note {
                eprintln!("note: {note}");
            }
            if args.csv {
                println!("lambda_ch,t_ch,b_max_wh,v,p_e,p_los,p_cov_s,p_cov");
                println!(
                    "{},{},{},{},{},{},{},{}",
                    cfg.lambda_ch,
                    cfg.t_ch,
                    cfg.b_max / 3600.0,
                    cfg.v,
                    result.p_e,
                    result.sensor.p_los,
                    result.sensor.p_cov_s,
                    result.p_cov
                );
            } else {
                println!("mode    = {}", cfg.coverage_mode.as_str());
                println!("p_e     = {}", result.p_e);
                println!("p_los   = {}", result.sensor.p_los);
                println!("cov_los = {}", result.sensor.los.coverage);
                println!("cov_nlos= {}", result.sensor.nlos.coverage);
                println!("p_cov_s = {}", result.sensor.p_cov_s);
                println!("p_cov   = {}", result.p_cov);
            }
        }
        Command::Simulate(args) => {
            let cfg = apply_mode(load_checked(&args.config, cli.strict_fcc)?, &args.mode)?;
            let sampler = match args.sampler.as_str() {
                "disc" => NearestSampler::DiscUniform,
                "rayleigh" => NearestSampler::RayleighInverse,
                other => {
                    return Err(uavcov::Error::Domain(format!(
                        "unknown sampler `{other}` (expected disc|rayleigh)"
                    )))
                }
            };
            let mut sim = SimConfig::new(args.trials, args.seed).with_sampler(sampler);
            if let Some(w) = args.window {
                sim = sim.with_window(w);
            }
            let service = simulate_service(&cfg, &sim)?;
            let coverage = simulate_coverage(&cfg, &sim)?;
            println!("estimator,mean,std_error,trials,seed");
            println!(
                "p_e,{},{},{},{}",
                service.mean, service.std_error, service.trials, args.seed
            );
            println!(
                "p_cov,{},{},{},{}",
                coverage.mean, coverage.std_error, coverage.trials, args.seed
            );
        }
        Command::Sweep(args) => {
            let spec = SweepSpec::from_path(&args.spec)?;
            let base_path = match (&args.config, &spec.base_config) {
                (Some(p), _) => p.clone(),
                (None, Some(rel)) => args
                    .spec
                    .parent()
                    .unwrap_or_else(|| std::path::Path::new("."))
                    .join(rel),
                (None, None) => {
                    return Err(uavcov::Error::Sweep(
                        "no base config: pass --config or set base_config in the spec".into(),
                    ))
                }
            };
            let base = config::RawConfig::from_path(&base_path)?;
            if cli.strict_fcc {
                let cfg = base.validate()?;
                let report = config::check_eirp_compliance(cfg.p_t, cfg.g_t)?;
                if !report.ok() {
                    return Err(uavcov::Error::Domain(
                        "radiated power out of bounds in base config".into(),
                    ));
                }
            }
            let table = run_sweep(&base, &spec)?;
            print!("{}", table.to_csv(!args.no_banner));
        }
        Command::FitRectenna(args) => {
            let samples = read_efficiency_csv(&args.csv)?;
            let model = fit_rectenna(&samples, args.degree)?;
            let worst = samples
                .iter()
                .map(|&(p, e)| (model.psi(p) - e).abs())
                .fold(0.0f64, f64::max);
            eprintln!(
                "fitted {} coefficients over [{:.2} dBm, {:.2} dBm], max residual {worst:.4}",
                model.coeffs.len(),
                watts_to_dbm(model.p_th),
                watts_to_dbm(model.p_sat),
            );
            eprintln!("peak efficiency {:.4} = {:.2} dB below unity", model.psi(model.p_sat),
                -linear_to_db(model.psi(model.p_sat)));
            print!("{}", model.to_config_block());
        }
        Command::Reproduce(args) => {
            let figure = FigureId::parse(&args.figure)?;
            let calib = load_calibration(args.calibration.as_deref())?;
            let report = reproduce_figure(figure, &calib)?;
            let out_dir = std::env::var("UAVCOV_OUT_DIR").unwrap_or_else(|_| ".".into());
            let out_path = std::path::Path::new(&out_dir).join(format!("{}.csv", figure.as_str()));
            std::fs::write(&out_path, &report.csv).map_err(|e| uavcov::Error::Io {
                path: out_path.display().to_string(),
                source: e,
            })?;
            println!("wrote {}", out_path.display());
            for check in &report.summary {
                let mark = if check.pass { "PASS" } else { "FAIL" };
                if check.detail.is_empty() {
                    println!("[{mark}] {}", check.name);
                } else {
                    println!("[{mark}] {}: {}", check.name, check.detail);
                }
            }
        }
    }
    Ok(())
}
