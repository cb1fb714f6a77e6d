//! Command-line driver: subcommand parsing, configuration loading, report
//! emission, and the `reproduce` verification suites.
//!
//! Exit codes: 0 success, 2 usage error, 3 numeric/tolerance failure,
//! 4 data-format failure.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chebotarev::{explicit_formula_rhs, psi_eta, psi_unweighted, FrobeniusOracle};
use crate::conductors;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::groups::classfn::{fourier_coeff, lambda_norm, s_t};
use crate::groups::io::{group_from_header, parse_classfn, parse_table, write_table};
use crate::groups::{character_table, CharacterTable, ClassFunction, Element, FiniteGroup};
use crate::moments::{
    s2l_bruteforce, s2l_lower_bound, GammaMultiset, MomentEstimator, MomentRequest, OmegaInput,
};
use crate::sieve::PrimeTable;
use crate::weights::{builtin_eta, builtin_phi};
use crate::zeros::{find_dirichlet_zeros, ingest_zeros, write_zeroset, CharZeroData, DensityParams};

#[derive(Parser)]
#[command(name = "chebmoments", version, about = "Moments of the Chebotarev error term: character norms, Artin conductors, L-function zeros, weighted prime sums")]
struct Cli {
    /// TOML configuration file (CHEBM_* environment variables override)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the character table of a built-in group (e.g. dihedral:5)
    GroupTable {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// S_t, argmax class, and lambda norms of a class function
    ClassAnalyze {
        spec: String,
        #[arg(long)]
        t: String,
    },
    /// Artin conductor exponents from a ramification filtration file
    Conductor {
        #[arg(long)]
        filtration: PathBuf,
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = 1)]
        deg_k: u64,
        #[arg(long, default_value_t = 0.0)]
        log_dk: f64,
    },
    /// Locate and certify zeros of a Dirichlet L-function
    ZerosFind {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 0.25)]
        step: f64,
        #[arg(long, default_value_t = 1e-9)]
        precision: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a zero file and report its contents
    ZerosImport { file: PathBuf },
    /// The weighted prime sum psi_eta (or classical psi with --unweighted)
    Psi {
        #[arg(long)]
        ext: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "gaussian")]
        eta: String,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        unweighted: bool,
    },
    /// Variance nu and w4 over certified zeros of the cyclotomic extension
    Variance {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "gaussian")]
        eta: String,
        #[arg(long, default_value_t = 60.0)]
        tmax: f64,
    },
    /// Central moments M_tilde_1..n of one extension
    Moments {
        #[arg(long)]
        ext: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "gaussian")]
        eta: String,
        #[arg(long, default_value = "triangle")]
        phi: String,
        #[arg(long = "U")]
        u_big: f64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0.0)]
        z: f64,
    },
    /// Brute-force the combinatorial S_2l inequality on random instances
    VerifyS2l {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// The oscillation lower-bound report for a cyclotomic instance
    OmegaReport {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: String,
    },
    /// Run a verification suite: prop21|prop23|lambda|jsum|s2l|explicit
    Reproduce { suite: String },
}

/// Entry point for the binary: parse `std::env::args`, run, map errors to
/// exit codes.
pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(args)
}

/// Parse and execute; returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own help/version with success status
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match load_config(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    // results are bit-stable for a fixed configuration: parallel scans
    // merge in a fixed order regardless of the thread count
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.run.threads)
        .build_global();
    match dispatch(cli.cmd, &cfg) {
        Ok(report) => {
            println!("{report}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn load_config(path: Option<&std::path::Path>) -> Result<Config> {
    match path {
        Some(p) => Config::from_toml(&std::fs::read_to_string(p)?),
        None => Config::from_env(),
    }
}

fn dispatch(cmd: Cmd, cfg: &Config) -> Result<String> {
    match cmd {
        Cmd::GroupTable { spec, out } => {
            let group = parse_group_spec(&spec)?;
            let table = character_table(&group)?;
            let text = write_table(&table);
            if let Some(path) = out {
                std::fs::write(path, &text)?;
            }
            Ok(text)
        }
        Cmd::ClassAnalyze { spec, t } => {
            let group = parse_group_spec(&spec)?;
            let table = character_table(&group)?;
            let tf = parse_t_spec(&t, &table)?;
            let s = s_t(&tf, None)?;
            let mut out = String::new();
            out.push_str(&format!("group: {}\n", group.kind_string()));
            out.push_str(&format!("classes: {}\n", group.class_count()));
            out.push_str(&format!("s_t: {:.15e}\n", s.value));
            out.push_str(&format!("argmax_class: {}\n", s.argmax_class));
            out.push_str(&format!("lambda_1_1: {:.15e}\n", lambda_norm(&tf, 1, 1, None)));
            out.push_str(&format!("lambda_1_2: {:.15e}\n", lambda_norm(&tf, 1, 2, None)));
            out.push_str(&format!("lambda_1_4: {:.15e}", lambda_norm(&tf, 1, 4, None)));
            Ok(out)
        }
        Cmd::Conductor { filtration, table, deg_k, log_dk } => {
            let table = parse_table(&std::fs::read_to_string(table)?)?;
            let filts = conductors::parse_filtrations(&std::fs::read_to_string(filtration)?)?;
            let data =
                conductors::ConductorData::from_filtrations(&table, deg_k, log_dk, filts, None)?;
            let mut out = String::new();
            out.push_str(&format!("log_rd_l: {:.15e}\n", data.log_rd_l));
            for (i, f) in data.primes.iter().enumerate() {
                out.push_str(&format!(
                    "disc_exponent {}: {}\n",
                    f.label,
                    data.discriminant_exponent(i)
                ));
            }
            for chi in 0..table.n_chars() {
                out.push_str(&format!(
                    "chi {}: exponents {:?} log_a {:.15e}\n",
                    chi,
                    data.exponents[chi],
                    data.log_a(chi)
                ));
            }
            Ok(out.trim_end().to_string())
        }
        Cmd::ZerosFind { q, index, tmax, step, precision, out } => {
            let zs = find_dirichlet_zeros(q, index, tmax, step, precision)?;
            let text = write_zeroset(&zs);
            if let Some(path) = out {
                std::fs::write(path, &text)?;
            }
            Ok(text)
        }
        Cmd::ZerosImport { file } => {
            let (zs, warnings) = ingest_zeros(&std::fs::read_to_string(file)?)?;
            let mut out = format!(
                "label: {}\nordinates: {}\nheight_max: {}\nself_dual: {}",
                zs.label,
                zs.ordinates.len(),
                zs.height_max,
                zs.self_dual
            );
            for w in warnings {
                out.push_str(&format!("\nwarning: {w}"));
            }
            Ok(out)
        }
        Cmd::Psi { ext, t, eta, x, unweighted } => {
            let oracle = parse_oracle_spec(&ext)?;
            let table = character_table(&oracle.group)?;
            let tf = parse_t_spec(&t, &table)?;
            let eta = builtin_eta(&eta)?;
            let needed = if unweighted {
                x
            } else {
                x * eta.support_radius(cfg.quadrature.support_tol).exp()
            };
            let limit = (needed.ceil() as u64).max(2);
            if limit > cfg.sieve.ceiling {
                return Err(Error::SieveCeiling { needed: limit, ceiling: cfg.sieve.ceiling });
            }
            let primes = PrimeTable::new(limit);
            let psi = if unweighted {
                psi_unweighted(x, &oracle, &tf, &primes)?
            } else {
                psi_eta(x, &oracle, &tf, &eta, cfg.quadrature.support_tol, &primes)?
            };
            Ok(format!(
                "value: {:.15e} + {:.15e}i\nbar: {:.6e}",
                psi.value.re, psi.value.im, psi.bar
            ))
        }
        Cmd::Variance { q, t, eta, tmax } => {
            let (nu, bar, w4v, _) = cyclotomic_variance(q, &t, &eta, tmax)?;
            Ok(format!("nu: {nu:.15e}\nbar: {bar:.6e}\nw4: {w4v:.15e}"))
        }
        Cmd::Moments { ext, t, eta, phi, u_big, n, z } => {
            let oracle = parse_oracle_spec(&ext)?;
            let table = character_table(&oracle.group)?;
            let tf = parse_t_spec(&t, &table)?;
            let eta = builtin_eta(&eta)?;
            let phi = builtin_phi(&phi)?;
            let needed = (u_big * phi.support_radius(1e-12)
                + eta.support_radius(cfg.quadrature.support_tol))
            .exp()
            .ceil() as u64;
            if needed > cfg.sieve.ceiling {
                return Err(Error::SieveCeiling { needed, ceiling: cfg.sieve.ceiling });
            }
            let primes = PrimeTable::new(needed.max(100));
            let req = MomentRequest {
                u_big,
                eta: &eta,
                phi: &phi,
                oracle: &oracle,
                t: &tf,
                z,
                quad_tol: cfg.quadrature.tol,
                support_tol: cfg.quadrature.support_tol,
            };
            let est = MomentEstimator::new(req, &primes)?;
            let mut out = String::new();
            for order in 1..=n {
                let m = est.mtilde(order)?;
                out.push_str(&format!(
                    "mtilde_{order}: {:.15e} bar {:.6e}\n",
                    m.value, m.bar
                ));
            }
            Ok(out.trim_end().to_string())
        }
        Cmd::VerifyS2l { trials, seed } => verify_s2l(trials, seed),
        Cmd::OmegaReport { q, t } => {
            let (data, _dg) = conductors::cyclotomic(q)?;
            let tf = parse_t_spec(&t, &data.table)?;
            let s = s_t(&tf, None)?;
            let inp = OmegaInput {
                lambda11: lambda_norm(&tf, 1, 1, None),
                lambda12: lambda_norm(&tf, 1, 2, None),
                s_t_plus: s.value,
                rd_l: data.log_rd_l.exp(),
                deg_f: 1.0,
                kappa_prime: cfg.constants.kappa_prime,
            };
            Ok(crate::moments::omega_report(&inp).to_string())
        }
        Cmd::Reproduce { suite } => reproduce(&suite, cfg),
    }
}

/// Parse `kind:params` group specs, e.g. `dihedral:5`, `abelian:2,4`.
pub fn parse_group_spec(spec: &str) -> Result<Arc<FiniteGroup>> {
    let mut words: Vec<&str> = spec.split(':').collect();
    if words.len() == 2 && words[0] == "abelian" {
        let factors: Vec<&str> = words[1].split(',').collect();
        words = std::iter::once("abelian").chain(factors).collect();
    }
    group_from_header(&words)
}

/// Parse a class-function spec: `one`, `delta_e_scaled`, `centered_e`
/// (= |G|·1_e − 1), `class:<i>`, `irr:<i>`, or a path to a class-function
/// file.
pub fn parse_t_spec(spec: &str, table: &Arc<CharacterTable>) -> Result<ClassFunction> {
    let e_class = table.group.class_of(&table.group.identity());
    match spec {
        "one" => Ok(ClassFunction::one(table)),
        "delta_e_scaled" => Ok(ClassFunction::delta_e_scaled(table)),
        "centered_e" => {
            let d = ClassFunction::delta_e_scaled(table);
            let one = ClassFunction::one(table);
            Ok(d.linear_comb(Complex64::new(1.0, 0.0), &one, Complex64::new(-1.0, 0.0)))
        }
        _ => {
            if let Some(i) = spec.strip_prefix("class:") {
                let i: usize =
                    i.parse().map_err(|_| Error::Parse(format!("bad class index '{i}'")))?;
                if i >= table.group.class_count() {
                    return Err(Error::Parse(format!("class index {i} out of range")));
                }
                return Ok(ClassFunction::class_indicator(table, i));
            }
            if let Some(i) = spec.strip_prefix("irr:") {
                let i: usize =
                    i.parse().map_err(|_| Error::Parse(format!("bad character index '{i}'")))?;
                if i >= table.n_chars() {
                    return Err(Error::Parse(format!("character index {i} out of range")));
                }
                return Ok(ClassFunction::irreducible(table, i));
            }
            if spec == "e_indicator" {
                return Ok(ClassFunction::class_indicator(table, e_class));
            }
            let (tf, _) = parse_classfn(&std::fs::read_to_string(spec)?)?;
            if tf.table.group.order() != table.group.order()
                || tf.table.group.class_count() != table.group.class_count()
            {
                return Err(Error::GroupMismatch);
            }
            Ok(tf)
        }
    }
}

/// Parse an extension spec for Frobenius oracles: `trivial`,
/// `cyclotomic:q`, `quadratic:d`, `kummer:a:p`, `cyclo8_over_gaussian`, or
/// `file:path`.
pub fn parse_oracle_spec(spec: &str) -> Result<FrobeniusOracle> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["trivial"] => FrobeniusOracle::trivial(),
        ["cyclotomic", q] => FrobeniusOracle::cyclotomic(
            q.parse().map_err(|_| Error::Parse(format!("bad modulus '{q}'")))?,
        ),
        ["quadratic", d] => FrobeniusOracle::quadratic(
            d.parse().map_err(|_| Error::Parse(format!("bad discriminant '{d}'")))?,
        ),
        ["kummer", a, p] => FrobeniusOracle::kummer(
            a.parse().map_err(|_| Error::Parse(format!("bad base '{a}'")))?,
            p.parse().map_err(|_| Error::Parse(format!("bad prime '{p}'")))?,
        ),
        ["cyclo8_over_gaussian"] => FrobeniusOracle::cyclo8_over_gaussian(),
        ["file", path] => FrobeniusOracle::from_file(&std::fs::read_to_string(path)?),
        _ => Err(Error::Parse(format!("unsupported extension spec '{spec}'"))),
    }
}

/// Variance data for a cyclotomic extension: certify zeros per character
/// with nonzero coefficient and assemble ν, its bar, and w₄.
pub fn cyclotomic_variance(
    q: u64,
    t_spec: &str,
    eta_name: &str,
    tmax: f64,
) -> Result<(f64, f64, f64, f64)> {
    let (data, _dg) = conductors::cyclotomic(q)?;
    let tf = parse_t_spec(t_spec, &data.table)?;
    let eta = builtin_eta(eta_name)?;
    let n = data.table.n_chars();
    let mut zerosets = Vec::new();
    for chi in 0..n {
        let coeff = fourier_coeff(&tf, chi);
        if coeff.norm() < 1e-14 {
            zerosets.push(None);
            continue;
        }
        zerosets.push(Some(find_dirichlet_zeros(q, chi, tmax, 0.25, 1e-9)?));
    }
    let mut char_data = Vec::new();
    for chi in 0..n {
        if let Some(zs) = &zerosets[chi] {
            char_data.push(CharZeroData {
                coeff: fourier_coeff(&tf, chi),
                zeros: zs,
                density: DensityParams { log_a: data.log_a(chi), chi1_degk: 1.0 },
            });
        }
    }
    let (nu, bar) = crate::zeros::variance_nu(&char_data, &eta)?;
    let w4v = crate::zeros::w4(&char_data, &eta)?;
    Ok((nu, bar, w4v, data.log_rd_l))
}

fn verify_s2l(trials: u64, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0u64;
    for trial in 0..trials {
        let size = rng.gen_range(1..=5usize);
        let ell = rng.gen_range(1..=3u32);
        let mut entries = Vec::with_capacity(size);
        for i in 0..size {
            let mult = rng.gen_range(1..=3u32);
            let modulus: f64 = rng.gen_range(0.0..=2.0);
            let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let a = Complex64::from_polar(modulus, phase);
            // distinct ordinates by construction
            let gamma = (i + 1) as f64 + rng.gen_range(0.0..0.5);
            entries.push((gamma, mult, a));
        }
        let g = GammaMultiset::new(entries)?;
        let s = s2l_bruteforce(&g, ell)?;
        let bound = s2l_lower_bound(&g, ell);
        if s.im.abs() >= 1e-12 {
            return Err(Error::CheckFailed(format!(
                "trial {trial}: Im(S_2l) = {:e} exceeds 1e-12",
                s.im
            )));
        }
        if s.re < bound - 1e-9 * (1.0 + bound.abs()) {
            return Err(Error::CheckFailed(format!(
                "trial {trial}: S_2l = {} below bound {}",
                s.re, bound
            )));
        }
        checked += 1;
    }
    Ok(format!("trials: {trials}\npassed: {checked}\nseed: {seed}"))
}

/// Run one verification suite and return its report; numeric failures
/// surface as `Error::CheckFailed` (exit code 3).
pub fn reproduce(suite: &str, cfg: &Config) -> Result<String> {
    match suite {
        "prop21" => reproduce_prop21(),
        "prop23" => reproduce_prop23(),
        "lambda" => reproduce_lambda(),
        "jsum" => reproduce_jsum(),
        "s2l" => verify_s2l(1000, 42),
        "explicit" => reproduce_explicit(cfg),
        _ => Err(Error::Parse(format!(
            "unknown suite '{suite}'; expected prop21|prop23|lambda|jsum|s2l|explicit"
        ))),
    }
}

fn check(label: &str, got: f64, want: f64, tol: f64) -> Result<()> {
    if (got - want).abs() > tol {
        return Err(Error::CheckFailed(format!(
            "{label}: got {got:.15e}, want {want:.15e} (tol {tol:e})"
        )));
    }
    Ok(())
}

/// Dihedral S_t closed forms for odd n in 3..=51.
fn reproduce_prop21() -> Result<String> {
    let mut lines = Vec::new();
    for n in (3..=51u64).step_by(2) {
        let g = FiniteGroup::dihedral(n)?;
        let ct = character_table(&g)?;
        let nf = n as f64;

        let t1 = ClassFunction::delta_e_scaled(&ct);
        let s1 = s_t(&t1, None)?.value;
        check(&format!("S_t(|D_{n}|1_e)"), s1, 1.0 / (2.0 * nf - 1.0), 1e-12)?;

        let sigma_class = g.class_of(&Element::Dihedral { flip: false, rot: 1 });
        let t2 = ClassFunction::class_indicator(&ct, sigma_class);
        let s2 = s_t(&t2, None)?.value;
        check(
            &format!("S_t(1_sigma, D_{n})"),
            s2,
            (1.0 - 2.0 / nf) / (2.0 * (1.0 - 1.0 / nf)),
            1e-12,
        )?;

        if n >= 5 {
            let e_class = g.class_of(&g.identity());
            let te = ClassFunction::class_indicator(&ct, e_class);
            let t3 =
                te.linear_comb(Complex64::new(2.0, 0.0), &t2, Complex64::new(1.0, 0.0));
            let s3 = s_t(&t3, None)?.value;
            if s3 >= 2.0 / 3.0 {
                return Err(Error::CheckFailed(format!(
                    "S_t(2*1_e + 1_sigma, D_{n}) = {s3} not below 2/3"
                )));
            }
            check(
                &format!("S_t(2*1_e + 1_sigma, D_{n})"),
                s3,
                (2.0 * nf - 4.0) / (3.0 * nf - 4.0),
                1e-12,
            )?;
        }
        lines.push(format!("n={n}: ok"));
    }
    lines.push("prop21: all dihedral closed forms match".into());
    Ok(lines.join("\n"))
}

/// Affine-group S_t closed forms for p in {3,5,7,11,13}.
fn reproduce_prop23() -> Result<String> {
    let mut lines = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        let g = FiniteGroup::affine(p)?;
        let ct = character_table(&g)?;
        let pf = p as f64;

        let t1 = ClassFunction::delta_e_scaled(&ct);
        let s1 = s_t(&t1, None)?.value;
        // (p-2)/(p^2-2p+2): the argmax class is the translation class,
        // where the p-1 linear characters contribute p-1 and theta
        // contributes -(p-1)^2; consistent with the dihedral value 1/5
        // at p = 3 (Aff(3) is D_3)
        check(
            &format!("S_t(|G|1_e, Aff({p}))"),
            s1,
            (pf - 2.0) / (pf * pf - 2.0 * pf + 2.0),
            1e-12,
        )?;

        let theta = (0..ct.n_chars())
            .find(|&chi| ct.degrees[chi] as u64 == p - 1)
            .ok_or_else(|| Error::CheckFailed(format!("no degree-(p-1) character for p={p}")))?;
        let t2 = ClassFunction::irreducible(&ct, theta);
        let s2 = s_t(&t2, None)?.value;
        check(&format!("S_t(theta, Aff({p}))"), s2, 1.0 / (pf - 1.0), 1e-12)?;
        lines.push(format!("p={p}: ok"));
    }
    lines.push("prop23: all affine closed forms match".into());
    Ok(lines.join("\n"))
}

/// The affine-group lambda norm identities.
fn reproduce_lambda() -> Result<String> {
    let mut lines = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        let g = FiniteGroup::affine(p)?;
        let ct = character_table(&g)?;
        let pf = p as f64;

        let t1 = ClassFunction::delta_e_scaled(&ct);
        check(&format!("lambda_11(|G|1_e, p={p})"), lambda_norm(&t1, 1, 1, None), pf * (pf - 1.0), 1e-9)?;
        check(
            &format!("lambda_12(|G|1_e, p={p})"),
            lambda_norm(&t1, 1, 2, None),
            (pf - 1.0) * (1.0 + (pf - 1.0).powi(2)),
            1e-9,
        )?;
        check(
            &format!("lambda_14(|G|1_e, p={p})"),
            lambda_norm(&t1, 1, 4, None),
            (pf - 1.0) * (1.0 + (pf - 1.0).powi(4)),
            1e-9,
        )?;

        let theta = (0..ct.n_chars())
            .find(|&chi| ct.degrees[chi] as u64 == p - 1)
            .ok_or_else(|| Error::CheckFailed(format!("no degree-(p-1) character for p={p}")))?;
        let t2 = ClassFunction::irreducible(&ct, theta);
        check(&format!("lambda_12(theta, p={p})"), lambda_norm(&t2, 1, 2, None), pf - 1.0, 1e-9)?;
        check(&format!("lambda_14(theta, p={p})"), lambda_norm(&t2, 1, 4, None), pf - 1.0, 1e-9)?;
        lines.push(format!("p={p}: ok"));
    }
    lines.push("lambda: all norm identities match".into());
    Ok(lines.join("\n"))
}

/// Σ_{h=1}^{(n−1)/2} cos(2πhj/n) = −1/2 for odd n and n ∤ j.
fn reproduce_jsum() -> Result<String> {
    let mut worst = 0.0f64;
    for n in (3..=101u64).step_by(2) {
        for j in 1..n {
            let mut sum = 0.0;
            for h in 1..=(n - 1) / 2 {
                sum += (2.0 * std::f64::consts::PI * (h * j % n) as f64 / n as f64).cos();
            }
            worst = worst.max((sum + 0.5).abs());
        }
    }
    if worst > 1e-12 {
        return Err(Error::CheckFailed(format!("jsum max error {worst:e} exceeds 1e-12")));
    }
    Ok(format!("jsum: max error {worst:.3e} over odd n <= 101"))
}

/// Explicit-formula two-path agreement for ζ, the odd character mod 4,
/// and all characters mod 5, at x in {1e2, 1e3, 1e4}.
fn reproduce_explicit(cfg: &Config) -> Result<String> {
    let eta = builtin_eta("gaussian")?;
    let r = eta.support_radius(cfg.quadrature.support_tol);
    let needed = (1e4 * r.exp()).ceil() as u64;
    if needed > cfg.sieve.ceiling {
        return Err(Error::SieveCeiling { needed, ceiling: cfg.sieve.ceiling });
    }
    let primes = PrimeTable::new(needed);
    let mut lines = Vec::new();
    // (q, chi) instances; chars mod 5: indices 1..4 cover the quadratic
    // character and the complex conjugate pair, 0 reduces to zeta
    let cases: Vec<(u64, usize)> =
        vec![(1, 0), (4, 1), (5, 0), (5, 1), (5, 2), (5, 3)];
    for (q, chi) in cases {
        let (line, ok) = explicit_two_path_case(q, chi, &eta, &primes, cfg)?;
        if !ok {
            return Err(Error::CheckFailed(line));
        }
        lines.push(line);
    }
    lines.push("explicit: two-path agreement holds within declared bars".into());
    Ok(lines.join("\n"))
}

/// One (q, chi) instance of the two-path comparison; returns a report
/// line and whether every x passed.
pub fn explicit_two_path_case(
    q: u64,
    chi: usize,
    eta: &crate::weights::WeightEta,
    primes: &PrimeTable,
    cfg: &Config,
) -> Result<(String, bool)> {
    let oracle = if q == 1 {
        FrobeniusOracle::trivial()?
    } else {
        FrobeniusOracle::cyclotomic(q)?
    };
    let ct = character_table(&oracle.group)?;
    let dg = crate::dirichlet::DirichletGroup::new(q.max(1))?;
    let t = if q == 1 {
        ClassFunction::one(&ct)
    } else {
        ClassFunction::irreducible(&ct, chi)
    };
    let self_dual = q == 1 || dg.conjugate(chi) == chi;
    let trivial = q == 1 || dg.is_trivial(chi);
    let f = if q == 1 { 1 } else { dg.conductor(chi) };
    let log_a = (f as f64).ln();
    let parity = if q == 1 || dg.is_even(chi) { 0 } else { 1 };
    let zs = find_dirichlet_zeros(q.max(1), chi, 60.0, 0.25, 1e-9)?;
    let zs_conj = if self_dual {
        None
    } else {
        Some(find_dirichlet_zeros(q, dg.conjugate(chi), 60.0, 0.25, 1e-9)?)
    };
    let t_conj = if self_dual {
        t.clone()
    } else {
        ClassFunction::irreducible(&ct, dg.conjugate(chi))
    };
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut worst_budget = 0.0f64;
    for &x in &[1e2, 1e3, 1e4] {
        let lhs = psi_eta(x, &oracle, &t, eta, cfg.quadrature.support_tol, primes)?;
        let lhs_inv =
            psi_eta(1.0 / x, &oracle, &t_conj, eta, cfg.quadrature.support_tol, primes)?;
        let rhs = explicit_formula_rhs(x, &zs, zs_conj.as_ref(), eta, log_a, trivial, parity)?;
        let diff = (lhs.value + lhs_inv.value - rhs.value).norm();
        let budget = lhs.bar + lhs_inv.bar + rhs.bar + 1e-6;
        if diff > budget || budget - 1e-6 >= 0.5 {
            ok = false;
        }
        if diff > worst {
            worst = diff;
            worst_budget = budget;
        }
    }
    Ok((
        format!(
            "q={q} chi={chi}: worst diff {worst:.3e} within budget {worst_budget:.3e}: {}",
            if ok { "ok" } else { "FAIL" }
        ),
        ok,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_spec_parsing() {
        assert_eq!(parse_group_spec("dihedral:5").unwrap().order(), 10);
        assert_eq!(parse_group_spec("abelian:2,4").unwrap().order(), 8);
        assert!(parse_group_spec("frobnicate:3").is_err());
    }

    #[test]
    fn t_spec_parsing() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let ct = character_table(&g).unwrap();
        let one = parse_t_spec("one", &ct).unwrap();
        assert_eq!(one.values.len(), 3);
        let t = parse_t_spec("centered_e", &ct).unwrap();
        assert_eq!(t.values[g.class_of(&g.identity())].re, 5.0);
        assert!(parse_t_spec("class:99", &ct).is_err());
        assert!(parse_t_spec("irr:1", &ct).is_ok());
    }

    #[test]
    fn oracle_spec_parsing() {
        assert_eq!(parse_oracle_spec("cyclotomic:8").unwrap().group.order(), 4);
        assert_eq!(parse_oracle_spec("kummer:2:3").unwrap().group.order(), 6);
        assert!(parse_oracle_spec("nonsense").is_err());
    }

    #[test]
    fn usage_error_is_exit_2() {
        assert_eq!(run(["chebmoments", "no-such-command"]), 2);
        assert_eq!(run(["chebmoments"]), 2);
    }

    #[test]
    fn group_table_runs() {
        assert_eq!(run(["chebmoments", "group-table", "dihedral:5"]), 0);
        assert_eq!(
            run(["chebmoments", "class-analyze", "dihedral:3", "--t", "delta_e_scaled"]),
            0
        );
    }

    #[test]
    fn reproduce_fast_suites() {
        let cfg = Config::default();
        assert!(reproduce("prop21", &cfg).is_ok());
        assert!(reproduce("prop23", &cfg).is_ok());
        assert!(reproduce("lambda", &cfg).is_ok());
        assert!(reproduce("jsum", &cfg).is_ok());
        assert!(reproduce("bogus", &cfg).is_err());
    }

    #[test]
    fn verify_s2l_small() {
        let report = verify_s2l(25, 1).unwrap();
        assert!(report.contains("passed: 25"));
    }
}
