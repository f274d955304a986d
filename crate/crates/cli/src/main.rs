//! Batch front door: build groups, run verification suites, convolve and
//! involve functions from files, and drive the sphere backend. Exit status
//! is 0 when every check passes, 1 when a check fails, 2 on usage or
//! validation errors.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use homspace::algebra::quotient_convolve;
use homspace::group::{build_group, FiniteGroup, GroupSpec, Subgroup};
use homspace::involution::{a1_involution, lr_involution};
use homspace::scalar::format_rat;
use homspace::sphere::{SphereFunction, SphereFunctionJson};
use homspace::suites::{
    canonical_json, probe_value, run_suites, sphere_suite, CheckRecord, CheckStatus, PairContext,
    RunReport, SuiteKind,
};
use homspace::transfer::{FunctionJson, QuotientFunction};

#[derive(Parser)]
#[command(name = "homspace", version, about = "Convolution and involution on coset spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Materialize a group family as a multiplication-table JSON file.
    Group {
        /// Family string, e.g. "cyclic:4", "symmetric:3",
        /// "product:cyclic:2,cyclic:3".
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites on a (group, subgroup) pair.
    Verify {
        spec: String,
        /// Comma-separated subgroup members, by label or element id.
        #[arg(long)]
        subgroup: String,
        /// One of: all, weil, algebra, involution-I, involution-II, probe.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// "text" or "json".
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Convolve two quotient functions read from files.
    Convolve {
        spec: String,
        #[arg(long)]
        subgroup: String,
        phi: PathBuf,
        psi: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply an involution to a quotient function read from a file.
    Involve {
        spec: String,
        #[arg(long)]
        subgroup: String,
        /// "a1" (invariant-subalgebra involution) or "lr" (cross-side map).
        #[arg(long, default_value = "a1")]
        kind: String,
        phi: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report normality, subspace dimensions and the kernel-stability
    /// witness for a pair.
    Probe {
        spec: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadrature backend on the rotation group and the sphere.
    Sphere {
        #[command(subcommand)]
        action: SphereCmd,
    },
}

#[derive(Subcommand)]
enum SphereCmd {
    /// Run the tolerance-based sphere suite.
    Verify {
        #[arg(long = "L", default_value_t = 8)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Convolve two sphere functions read from files.
    Convolve {
        phi: PathBuf,
        psi: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Group { spec, out } => {
            let group = parse_group(&spec)?;
            let text = canonical_json(&serde_json::to_value(group.to_json())?);
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Verify {
            spec,
            subgroup,
            suite,
            seed,
            out,
            format,
        } => {
            let ctx = parse_pair(&spec, &subgroup)?;
            let kinds = SuiteKind::parse(&suite)?;
            let start = Instant::now();
            let checks = run_suites(&ctx, &kinds, seed)?;
            let mut report =
                RunReport::new(&format!("{spec}|{subgroup}|{suite}|{seed}"), seed, checks);
            report.timing_ms = Some(start.elapsed().as_millis());
            finish_report(&report, out.as_deref(), &format)
        }
        Cmd::Convolve {
            spec,
            subgroup,
            phi,
            psi,
            out,
        } => {
            let ctx = parse_pair(&spec, &subgroup)?;
            let phi = read_quotient(&ctx, &phi)?;
            let psi = read_quotient(&ctx, &psi)?;
            let conv = quotient_convolve(&phi, &psi)?;
            for (name, f) in [("phi", &phi), ("psi", &psi), ("phi*psi", &conv)] {
                println!("|{name}|_1 = {}", l1_text(f));
            }
            let text = canonical_json(&serde_json::to_value(conv.to_json())?);
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Involve {
            spec,
            subgroup,
            kind,
            phi,
            out,
        } => {
            let ctx = parse_pair(&spec, &subgroup)?;
            let phi = read_quotient(&ctx, &phi)?;
            let star = match kind.as_str() {
                "a1" => a1_involution(&phi)?,
                "lr" => lr_involution(&phi, &ctx.right)?,
                other => return Err(anyhow!("unknown involution kind {other:?}")),
            };
            let text = canonical_json(&serde_json::to_value(star.to_json())?);
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Probe {
            spec,
            subgroup,
            out,
        } => {
            let ctx = parse_pair(&spec, &subgroup)?;
            let text = canonical_json(&probe_value(&ctx)?);
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Cmd::Sphere { action } => match action {
            SphereCmd::Verify {
                l,
                seed,
                out,
                format,
            } => {
                let start = Instant::now();
                let checks = sphere_suite(l, seed)?;
                let mut report = RunReport::new(&format!("sphere|{l}|{seed}"), seed, checks);
                report.timing_ms = Some(start.elapsed().as_millis());
                finish_report(&report, out.as_deref(), &format)
            }
            SphereCmd::Convolve { phi, psi, out } => {
                let phi = read_sphere(&phi)?;
                let psi = read_sphere(&psi)?;
                let conv = homspace::sphere::sphere_convolve(&phi, &psi)?;
                // numeric values stay plain JSON numbers so outputs can be
                // fed back in
                let text = serde_json::to_string(&conv.to_json())?;
                emit(out.as_deref(), &text)?;
                Ok(true)
            }
        },
    }
}

fn parse_group(spec: &str) -> Result<Arc<FiniteGroup>> {
    Ok(build_group(&GroupSpec::parse(spec)?)?)
}

fn parse_pair(spec: &str, subgroup: &str) -> Result<PairContext> {
    let group = parse_group(spec)?;
    let members: Vec<usize> = subgroup
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            group
                .element_by_name(tok)
                .ok_or_else(|| anyhow!("unknown element {tok:?} in {spec}"))
        })
        .collect::<Result<_>>()?;
    let h = Subgroup::new(&group, &members)?;
    Ok(PairContext::new(&group, &h))
}

fn read_quotient(ctx: &PairContext, path: &Path) -> Result<QuotientFunction> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let j: FunctionJson = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(QuotientFunction::from_json(&ctx.left, &j)?)
}

fn read_sphere(path: &Path) -> Result<SphereFunction> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let j: SphereFunctionJson = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(SphereFunction::from_json(&j)?)
}

fn l1_text(f: &QuotientFunction) -> String {
    match f.l1_exact() {
        Some(r) => format_rat(&r),
        None => format!("{:.16e}", f.lp_norm(1.0).expect("p = 1 is valid")),
    }
}

fn finish_report(report: &RunReport, out: Option<&Path>, format: &str) -> Result<bool> {
    match format {
        "json" => emit(out, &report.to_canonical_json())?,
        "text" => {
            let mut lines = String::new();
            for c in &report.checks {
                lines.push_str(&format!(
                    "{} {} ({})\n",
                    c.status.as_str().to_uppercase(),
                    c.name,
                    c.details
                ));
            }
            lines.push_str(&summary_line(&report.checks));
            if let Some(ms) = report.timing_ms {
                lines.push_str(&format!(" in {ms} ms"));
            }
            emit(out, &lines)?;
        }
        other => return Err(anyhow!("unknown format {other:?}")),
    }
    Ok(report.all_pass())
}

fn summary_line(checks: &[CheckRecord]) -> String {
    let pass = checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
    let fail = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    let skip = checks.iter().filter(|c| c.status == CheckStatus::Skipped).count();
    format!("{pass} passed, {fail} failed, {skip} skipped")
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{text}"),
    }
    Ok(())
}
