//! Command line front end for the graded coherence machinery.
//!
//! One request per process: parse, load, compute, assemble one JSON report,
//! render it (text output is derived from the same JSON), write it to stdout
//! and optionally to `--out`. Exit 0 means the computation finished with an
//! affirmative verdict, exit 1 a computed negative or inconclusive verdict,
//! exit 2 an input or validation error.

mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use grcoh_core::algebra::AlgebraRef;
use grcoh_core::artheory::{build_theta, eta_stabilization, preprojective_truncation};
use grcoh_core::derived::{ext_dim, tor};
use grcoh_core::graded::{
    coherence_check, graded_kernel, graded_resolution, CoherenceCertificate, CoherenceOptions,
    Verdict,
};
use grcoh_core::purity::{purity_power, purity_stabilization, rhom_purity_2dim, PurityStage};
use grcoh_core::resolution::{global_dimension, minimal_resolution, GlobalDimension};
use grcoh_core::tower::tower;
use grcoh_core::{seeded_rng, Error, ExecMode, FieldSpec};

use input::{build_map, load_algebra, load_map_header, module_from_spec, sigma_from_spec, InputError};
use report::{envelope, generators_json, matrix_json, negative, positive, Format, Report};

#[derive(Parser)]
#[command(
    name = "grcoh",
    version,
    about = "Graded coherence certificates for truncated tensor algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Coefficient field for quiver inputs: Q or F<p>
    #[arg(long, default_value = "Q")]
    field: String,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the rendered report to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Module files or specs to check over the input algebra
    #[arg(long)]
    module: Vec<String>,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct ResolveArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Module to resolve: regular, dual, simple:<c>, projective:<c>, or a file
    #[arg(long, default_value = "regular")]
    module: String,
    /// Resolution length bound
    #[arg(long, default_value_t = 8)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct TorArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Right module argument
    #[arg(long, default_value = "regular")]
    module: String,
    /// Bimodule argument: free:<r>, bar, top, theta[:n], or a file
    #[arg(long)]
    sigma: String,
    /// Largest homological index to compute
    #[arg(long, default_value_t = 2)]
    max_power: usize,
    /// Resolution search depth for derived constructions
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct ExtArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Source module
    #[arg(long, default_value = "dual")]
    source: String,
    /// Target module
    #[arg(long, default_value = "regular")]
    target: String,
    /// Largest homological index to compute
    #[arg(long, default_value_t = 2)]
    max_power: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct PurityArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Bimodule whose tensor powers are checked
    #[arg(long)]
    sigma: String,
    /// Largest tensor power to check
    #[arg(long, default_value_t = 3)]
    max_power: usize,
    /// Resolution search depth for the Tor bound
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct StabilizeArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Module whose σ-tower is scanned
    #[arg(long, default_value = "regular")]
    module: String,
    /// Bimodule generating the tower
    #[arg(long)]
    sigma: String,
    /// Largest stage m₀ to try
    #[arg(long, default_value_t = 6)]
    max_s: usize,
    /// Width of the pure window required above m₀
    #[arg(long, default_value_t = 3)]
    max_power: usize,
    /// Resolution search depth for the Tor bound
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct GradedKernelArgs {
    /// Graded map file with an embedded tower description
    input: PathBuf,
    /// Raise the tower cap and kernel window to this degree
    #[arg(long)]
    cap: Option<usize>,
    /// Resolution search depth for the purity gate
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct CoherenceArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Bimodule generating the truncated tensor algebra
    #[arg(long)]
    sigma: String,
    /// Truncation cap
    #[arg(long, default_value_t = 4)]
    cap: usize,
    /// Number of seeded maps to test
    #[arg(long, default_value_t = 5)]
    count: usize,
    /// RNG seed for the sampled maps
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Resolution search depth for flatness and purity checks
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct GradedResolveArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Module inducing the graded module M ⊗ T
    #[arg(long, default_value = "regular")]
    module: String,
    /// Bimodule generating the tower
    #[arg(long)]
    sigma: String,
    /// Truncation cap and top degree of the window
    #[arg(long, default_value_t = 4)]
    cap: usize,
    /// Resolution length bound
    #[arg(long, default_value_t = 6)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct ThetaArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Degree in which Ext(D(A), A) must concentrate
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Resolution search depth for the global dimension
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct PreprojectiveArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Degree in which Ext(D(A), A) must concentrate
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Truncation cap
    #[arg(long, default_value_t = 3)]
    cap: usize,
    /// Resolution search depth for the global dimension
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct EtaArgs {
    /// Algebra or quiver file
    input: PathBuf,
    /// Module whose unit ladder is computed
    #[arg(long, default_value = "regular")]
    module: String,
    /// Degree in which Ext(D(A), A) must concentrate
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Number of ladder stages to compute
    #[arg(long, default_value_t = 8)]
    max_s: usize,
    /// Resolution search depth for the global dimension
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Lemma34Args {
    /// Algebra or quiver file
    input: PathBuf,
    /// Bimodule satisfying the vanishing hypothesis
    #[arg(long)]
    sigma: String,
    /// Number of seeded test modules
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// Largest dimension of a sampled module
    #[arg(long, default_value_t = 6)]
    max_dim: usize,
    /// RNG seed for the sampled modules
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Resolution search depth for the global dimension
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Check input files against their structural invariants
    Validate(ValidateArgs),
    /// Minimal projective resolution of a module
    Resolve(ResolveArgs),
    /// Dimensions of Tor against a bimodule
    Tor(TorArgs),
    /// Dimensions of Ext between two modules
    Ext(ExtArgs),
    /// Purity of the tensor powers of a bimodule
    Purity(PurityArgs),
    /// Least stage from which a module's σ-tower is pure
    Stabilize(StabilizeArgs),
    /// Degreewise kernel of a graded map, with generators
    #[command(name = "graded-kernel")]
    GradedKernel(GradedKernelArgs),
    /// Coherence certificate for a truncated tensor algebra
    Coherence(CoherenceArgs),
    /// Minimal graded resolution of an induced graded module
    #[command(name = "graded-resolve")]
    GradedResolve(GradedResolveArgs),
    /// Translate bimodule Ext^n(D(A), A) with its concentration record
    Theta(ThetaArgs),
    /// Dimension table of the preprojective truncation
    Preprojective(PreprojectiveArgs),
    /// Unit ladder of the translate adjunction and its stabilization
    Eta(EtaArgs),
    /// Purity of RHom(σ, M⊗σ) for seeded modules M
    #[command(name = "lemma34")]
    Lemma34(Lemma34Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, opts): (&str, &Opts) = match &cli.command {
        Command::Validate(a) => ("validate", &a.opts),
        Command::Resolve(a) => ("resolve", &a.opts),
        Command::Tor(a) => ("tor", &a.opts),
        Command::Ext(a) => ("ext", &a.opts),
        Command::Purity(a) => ("purity", &a.opts),
        Command::Stabilize(a) => ("stabilize", &a.opts),
        Command::GradedKernel(a) => ("graded-kernel", &a.opts),
        Command::Coherence(a) => ("coherence", &a.opts),
        Command::GradedResolve(a) => ("graded-resolve", &a.opts),
        Command::Theta(a) => ("theta", &a.opts),
        Command::Preprojective(a) => ("preprojective", &a.opts),
        Command::Eta(a) => ("eta", &a.opts),
        Command::Lemma34(a) => ("lemma34", &a.opts),
    };
    match dispatch(&cli.command) {
        Ok((field, rep)) => {
            let rendered = report::render(&envelope(name, field, &rep), opts.format);
            if let Err(e) = report::emit(&rendered, opts.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(rep.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: &Command) -> Result<(FieldSpec, Report), InputError> {
    match cmd {
        Command::Validate(a) => cmd_validate(a),
        Command::Resolve(a) => cmd_resolve(a),
        Command::Tor(a) => cmd_tor(a),
        Command::Ext(a) => cmd_ext(a),
        Command::Purity(a) => cmd_purity(a),
        Command::Stabilize(a) => cmd_stabilize(a),
        Command::GradedKernel(a) => cmd_graded_kernel(a),
        Command::Coherence(a) => cmd_coherence(a),
        Command::GradedResolve(a) => cmd_graded_resolve(a),
        Command::Theta(a) => cmd_theta(a),
        Command::Preprojective(a) => cmd_preprojective(a),
        Command::Eta(a) => cmd_eta(a),
        Command::Lemma34(a) => cmd_lemma34(a),
    }
}

fn load(input: &Path, opts: &Opts) -> Result<AlgebraRef, InputError> {
    load_algebra(input, input::parse_field(&opts.field)?)
}

fn spec_dir() -> &'static Path {
    Path::new("")
}

/// Bound for Tor and Ext searches: the settled global dimension when it is
/// finite, otherwise the requested depth.
fn effective_gldim_bound(a: &AlgebraRef, length: usize) -> Result<usize, InputError> {
    Ok(match global_dimension(a, length)? {
        GlobalDimension::Exact(d) => d.max(1),
        GlobalDimension::AtLeast(_) => length.max(1),
    })
}

/// Computed negative outcomes become exit-1 reports; anything else stays an
/// input error.
fn negative_from_error(e: Error, bounds: Value) -> Result<Report, InputError> {
    match e {
        Error::PurityFailure { stage, index, dim } => Ok(negative(
            "purity-failure",
            bounds,
            json!({
                "witness": {"stage": stage, "index": index, "dim": dim},
                "detail": format!(
                    "purity fails at tensor power {stage}: Tor_{index} has dimension {dim}"
                ),
            }),
        )),
        Error::ThetaNotConcentrated { index, dim, n } => Ok(negative(
            "not-concentrated",
            bounds,
            json!({
                "witness": {"index": index, "dim": dim, "expected_degree": n},
                "detail": format!(
                    "Ext^{index}(D(A), A) has dimension {dim}, so the translate is not concentrated in degree {n}"
                ),
            }),
        )),
        Error::UndeterminedBeyondBound { needed, computed } => Ok(negative(
            "undetermined-within-bound",
            bounds,
            json!({"detail": format!("needed degree {needed}, computed up to {computed}")}),
        )),
        Error::Validation(msg) if msg.contains("global dimension not settled") => Ok(negative(
            "undetermined-within-bound",
            bounds,
            json!({"detail": msg}),
        )),
        other => Err(other.into()),
    }
}

fn purity_stage_json(st: &PurityStage) -> Value {
    json!({
        "stage": st.stage,
        "dim": st.dim,
        "pure": st.pure,
        "witness": st.witness.as_ref().map(|w| json!({
            "stage": w.stage, "index": w.index, "dim": w.dim,
        })),
    })
}

fn cmd_validate(a: &ValidateArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let mut modules = Vec::new();
    for spec in &a.module {
        let m = module_from_spec(spec, &alg, spec_dir())?;
        m.validate()?;
        modules.push(json!({
            "spec": spec,
            "dim": m.dim,
            "bimodule": m.is_bimodule(),
        }));
    }
    let payload = json!({
        "algebra": {
            "dim": alg.dim,
            "basis": alg.basis_names,
            "idempotents": alg.idempotents.len(),
        },
        "modules": modules,
    });
    Ok((alg.field, positive("valid", json!({}), payload)))
}

fn cmd_resolve(a: &ResolveArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let m = module_from_spec(&a.module, &alg, spec_dir())?;
    let res = minimal_resolution(&m, a.length)?;
    let bounds = json!({"length": a.length});
    let payload = json!({
        "module_dim": m.dim,
        "complete": res.complete,
        "projective_dimension": res.projective_dimension(),
        "terms": res.terms.iter().map(|t| t.summands.clone()).collect::<Vec<_>>(),
        "term_dims": res.terms.iter().map(|t| t.module.dim).collect::<Vec<_>>(),
    });
    Ok((
        alg.field,
        if res.complete {
            positive("complete", bounds, payload)
        } else {
            negative("length-exceeded", bounds, payload)
        },
    ))
}

fn cmd_tor(a: &TorArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let m = module_from_spec(&a.module, &alg, spec_dir())?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let mut dims = Vec::new();
    for i in 0..=a.max_power {
        dims.push(tor(&m, &s, i)?.dim);
    }
    let bounds = json!({"max_power": a.max_power, "length": a.length});
    let payload = json!({
        "module_dim": m.dim,
        "sigma_dim": s.dim,
        "dims": dims,
    });
    Ok((alg.field, positive("computed", bounds, payload)))
}

fn cmd_ext(a: &ExtArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let x = module_from_spec(&a.source, &alg, spec_dir())?;
    let y = module_from_spec(&a.target, &alg, spec_dir())?;
    let mut dims = Vec::new();
    for i in 0..=a.max_power {
        dims.push(ext_dim(&x, &y, i)?);
    }
    let bounds = json!({"max_power": a.max_power});
    let payload = json!({
        "source_dim": x.dim,
        "target_dim": y.dim,
        "dims": dims,
    });
    Ok((alg.field, positive("computed", bounds, payload)))
}

fn cmd_purity(a: &PurityArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let bound = effective_gldim_bound(&alg, a.length)?;
    let stages = purity_power(&s, a.max_power, bound)?;
    let bounds = json!({"max_power": a.max_power, "length": a.length, "gldim_bound": bound});
    let first_bad = stages.iter().find(|st| !st.pure);
    let payload = json!({
        "sigma_dim": s.dim,
        "stages": stages.iter().map(purity_stage_json).collect::<Vec<_>>(),
    });
    Ok((
        alg.field,
        match first_bad {
            None => positive("pure", bounds, payload),
            Some(_) => negative("purity-failure", bounds, payload),
        },
    ))
}

fn cmd_stabilize(a: &StabilizeArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let m = module_from_spec(&a.module, &alg, spec_dir())?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let bound = effective_gldim_bound(&alg, a.length)?;
    let rep = purity_stabilization(&m, &s, a.max_s, a.max_power, bound)?;
    let bounds = json!({
        "max_s": rep.m_max,
        "max_power": rep.n_max,
        "length": a.length,
        "gldim_bound": rep.gldim_bound,
    });
    let payload = json!({
        "module_dim": m.dim,
        "sigma_dim": s.dim,
        "powers_all_pure": rep.powers_all_pure,
        "power_stages": rep.power_stages.iter().map(purity_stage_json).collect::<Vec<_>>(),
        "tower_checks": rep.tower_checks.iter().map(|c| json!({
            "stage": c.stage,
            "dim": c.dim,
            "pure": c.pure,
            "witness": c.witness.as_ref().map(|w| json!({
                "stage": w.stage, "index": w.index, "dim": w.dim,
            })),
        })).collect::<Vec<_>>(),
        "m0": rep.m0,
    });
    Ok((
        alg.field,
        match rep.m0 {
            Some(_) => positive("stabilized", bounds, payload),
            None => negative("not-stabilized-within-bound", bounds, payload),
        },
    ))
}

fn cmd_graded_kernel(a: &GradedKernelArgs) -> Result<(FieldSpec, Report), InputError> {
    let field = input::parse_field(&a.opts.field)?;
    let h = load_map_header(&a.input, field, a.cap, a.length)?;
    let f = h.algebra.field;
    let gbound = effective_gldim_bound(&h.algebra, a.length)?;
    let bounds = json!({"cap": h.cap, "length": a.length, "gldim_bound": gbound});
    let t = match tower(&h.algebra, &h.sigma, h.cap, gbound, false) {
        Ok(t) => Arc::new(t),
        Err(e) => return Ok((f, negative_from_error(e, bounds)?)),
    };
    let map = build_map(&h, &t)?;
    let data = graded_kernel(&map, h.cap as i64, ExecMode::default())?;
    let payload = json!({
        "source_degrees": map.source.degrees,
        "target_degrees": map.target.degrees,
        "q": map.q(),
        "window": [data.min_degree, data.max_degree],
        "kernel_dims": data.kernel_dims,
        "cokernel_dims": data.cokernel_dims,
        "generator_degrees": data.generator_degrees(),
        "generators": generators_json(f, &data.generators),
        "stabilization": data.stabilization,
    });
    Ok((f, positive("computed", bounds, payload)))
}

fn certificate_json(cert: &CoherenceCertificate) -> Value {
    json!({
        "cap": cert.cap,
        "gldim_bound": cert.gldim_bound,
        "verdict": match &cert.verdict {
            Verdict::HypothesisFailure(w) => json!({
                "label": cert.verdict.label(),
                "witness": {"stage": w.stage, "index": w.index, "dim": w.dim},
            }),
            _ => json!({"label": cert.verdict.label()}),
        },
        "purity": cert.purity.iter().map(purity_stage_json).collect::<Vec<_>>(),
        "flat_evidence": cert.flat_evidence.as_ref().map(|ev| ev.iter().map(|c| json!({
            "idempotent": c.idempotent, "index": c.index, "dim": c.dim,
        })).collect::<Vec<_>>()),
        "seed": cert.seed,
        "maps": cert.maps.iter().map(|m| json!({
            "index": m.index,
            "source_degrees": m.source_degrees,
            "target_degrees": m.target_degrees,
            "q": m.q,
            "kernel_dims": m.kernel_dims,
            "generator_degrees": m.generator_degrees,
            "stabilization": m.stabilization,
            "tor_power": m.tor_power,
            "tor_checks": m.tor_checks.iter().map(|t| json!({
                "n": t.n, "power": t.power, "index": t.index, "dim": t.dim,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_coherence(a: &CoherenceArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let bound = effective_gldim_bound(&alg, a.length)?;
    let mut opts = CoherenceOptions::new(a.cap, bound, a.count, a.seed);
    opts.mode = ExecMode::default();
    let cert = coherence_check(&alg, &s, &opts)?;
    let bounds = json!({
        "cap": a.cap,
        "count": a.count,
        "seed": a.seed,
        "length": a.length,
        "gldim_bound": bound,
    });
    let label = cert.verdict.label();
    let payload = json!({"sigma_dim": s.dim, "certificate": certificate_json(&cert)});
    Ok((
        alg.field,
        match cert.verdict {
            Verdict::HypothesisFailure(_) => negative(label, bounds, payload),
            _ => positive(label, bounds, payload),
        },
    ))
}

fn cmd_graded_resolve(a: &GradedResolveArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let m = module_from_spec(&a.module, &alg, spec_dir())?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let gbound = effective_gldim_bound(&alg, a.length)?;
    let bounds = json!({"cap": a.cap, "length": a.length, "gldim_bound": gbound});
    let t = match tower(&alg, &s, a.cap, gbound, false) {
        Ok(t) => Arc::new(t),
        Err(e) => return Ok((alg.field, negative_from_error(e, bounds)?)),
    };
    let (_, rep) = graded_resolution(&m, &t, a.cap, a.length)?;
    let payload = json!({
        "module_dims": rep.module_dims,
        "window": [rep.min_degree, rep.max_degree],
        "complete": rep.complete,
        "length_exceeded": rep.length_exceeded,
        "length": rep.length(),
        "terms": rep.terms.iter().map(|t| json!({
            "gens": t.gens,
            "slice_dims": t.slice_dims,
        })).collect::<Vec<_>>(),
    });
    Ok((
        alg.field,
        if rep.complete {
            positive("complete", bounds, payload)
        } else {
            negative("length-exceeded", bounds, payload)
        },
    ))
}

fn cmd_theta(a: &ThetaArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let bounds = json!({"n": a.n, "length": a.length});
    let t = match build_theta(&alg, a.n, a.length) {
        Ok(t) => t,
        Err(e) => return Ok((alg.field, negative_from_error(e, bounds)?)),
    };
    let payload = json!({
        "n": t.n,
        "gldim": t.gldim,
        "validation": t.validation,
        "dim": t.theta.dim,
        "slice_dims": t.theta.slice_dims(),
        "left_slice_dims": t.theta.left_slice_dims(),
        "theta": t.theta.to_json(&a.input.display().to_string()),
    });
    Ok((alg.field, positive("concentrated", bounds, payload)))
}

fn cmd_preprojective(a: &PreprojectiveArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let bounds = json!({"n": a.n, "cap": a.cap, "length": a.length});
    let run = || -> Result<_, Error> {
        let t = build_theta(&alg, a.n, a.length)?;
        let tr = preprojective_truncation(&t, a.cap)?;
        Ok((t, tr))
    };
    let (t, tr) = match run() {
        Ok(pair) => pair,
        Err(e) => return Ok((alg.field, negative_from_error(e, bounds)?)),
    };
    let payload = json!({
        "n": t.n,
        "theta_dim": t.theta.dim,
        "dims": tr.dims,
        "purity": tr.tower.purity.iter().map(purity_stage_json).collect::<Vec<_>>(),
    });
    Ok((alg.field, positive("computed", bounds, payload)))
}

fn cmd_eta(a: &EtaArgs) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let m = module_from_spec(&a.module, &alg, spec_dir())?;
    let bounds = json!({"n": a.n, "max_s": a.max_s, "length": a.length});
    let run = || -> Result<_, Error> {
        let t = build_theta(&alg, a.n, a.length)?;
        let tr = preprojective_truncation(&t, a.max_s + 1)?;
        eta_stabilization(&tr, &m, a.max_s)
    };
    let rep = match run() {
        Ok(rep) => rep,
        Err(e) => return Ok((alg.field, negative_from_error(e, bounds)?)),
    };
    let payload = json!({
        "module_dim": rep.module_dim,
        "s_max": rep.s_max,
        "hom_dims": rep.hom_dims,
        "stages": rep.stages.iter().map(|st| json!({
            "s": st.s,
            "source_dim": st.source_dim,
            "target_dim": st.target_dim,
            "rank": st.rank,
            "iso": st.iso,
            "map": matrix_json(&st.map),
        })).collect::<Vec<_>>(),
        "stabilized": rep.stabilized,
        "translate_name": rep.translate_name,
        "translate_formula": rep.translate_formula,
    });
    Ok((
        alg.field,
        match rep.stabilized {
            Some(_) => positive("stabilized", bounds, payload),
            None => negative("not-stabilized-within-bound", bounds, payload),
        },
    ))
}

fn cmd_lemma34(a: &Lemma34Args) -> Result<(FieldSpec, Report), InputError> {
    let alg = load(&a.input, &a.opts)?;
    let s = sigma_from_spec(&a.sigma, &alg, spec_dir(), a.length)?;
    let bound = effective_gldim_bound(&alg, a.length)?;
    let bounds = json!({
        "count": a.count,
        "max_dim": a.max_dim,
        "seed": a.seed,
        "length": a.length,
        "gldim_bound": bound,
    });
    let mut rng = seeded_rng(a.seed);
    let mut checks = Vec::new();
    let mut failures = 0usize;
    let mut hypothesis = None;
    for index in 0..a.count {
        let m = grcoh_core::module::random_module(&alg, &mut rng, 1, a.max_dim);
        let rep = match rhom_purity_2dim(&s, &m, bound) {
            Ok(rep) => rep,
            Err(Error::HypothesisNotSatisfied(msg)) => {
                return Ok((
                    alg.field,
                    negative("hypothesis-failure", bounds, json!({"detail": msg})),
                ));
            }
            Err(e) => return Err(e.into()),
        };
        if !rep.pure {
            failures += 1;
        }
        hypothesis.get_or_insert((rep.gldim.to_string(), rep.self_ext_dims));
        checks.push(json!({
            "index": index,
            "module_dim": m.dim,
            "ext_dims": rep.ext_dims,
            "pure": rep.pure,
        }));
    }
    let (gldim, self_ext) = hypothesis.unwrap_or(("0".into(), [0, 0]));
    let payload = json!({
        "sigma_dim": s.dim,
        "gldim": gldim,
        "self_ext_dims": self_ext,
        "checks": checks,
        "failures": failures,
    });
    Ok((
        alg.field,
        if failures == 0 {
            positive("pure", bounds, payload)
        } else {
            negative("purity-failure", bounds, payload)
        },
    ))
}
