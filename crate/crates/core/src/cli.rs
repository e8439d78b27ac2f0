//! The `superschur` command line.
//!
//! Exit codes: 0 success, 1 a mathematical check failed (witness printed) or the
//! input is not invertible, 2 usage or parse error, 3 size cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::commutant::{double_centralizer_report, rho_theta_equality_report, DEFAULT_CAP};
use crate::error::Error;
use crate::grassmann::GrassmannElement;
use crate::json::{grassmann_to_json, supermatrix_from_json, supermatrix_to_wire, SuperMatrixWire};
use crate::random;
use crate::scalar::{Parity, Scalar};
use crate::supermatrix::{one_param_e, one_param_h, word_product, GlElement, SuperDim, SuperMatrix};
use crate::tableaux::{dimension_table, enumerate_ssyt, weighted_total};
use crate::tensor::{
    rho_group, tau_closed_form, tau_permutation, tau_permutation_via, tensor_dim, theta_at_point, theta_derivation,
    Decomposition, Permutation, TensorOperator,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "superschur", version, about = "Exact checks of super Schur-Weyl duality for GL(m|n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Superbracket antisymmetry, super Jacobi, supertrace and the even rules.
    Bracket,
    /// τ well-defined, θ a homomorphism, τ and θ commute, ρ multiplicative.
    Actions,
    /// Double centralizer theorem and dimension counts.
    Schurweyl,
    /// Berezinian, LDU factorization, generators and ⟨ρ⟩ = ⟨θ⟩.
    Group,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    #[arg(short = 'm', default_value_t = 1)]
    pub m: usize,
    #[arg(short = 'n', default_value_t = 1)]
    pub n: usize,
    #[arg(short = 'r', default_value_t = 2)]
    pub r: usize,
    #[arg(long = "grassmann-n", default_value_t = 4)]
    pub grassmann_n: usize,
    #[arg(long, env = "SUPERSCHUR_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension table of semistandard super-tableaux for every shape of size r.
    Tableaux {
        #[command(flatten)]
        config: Config,
        /// Print every filling.
        #[arg(long)]
        list: bool,
    },
    /// Run an invariant suite; one JSON line per check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        config: Config,
    },
    /// Berezinian and supertrace of a supermatrix JSON file.
    Berezinian {
        file: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Block LDU factors of a supermatrix JSON file.
    Factor {
        file: std::path::PathBuf,
    },
    /// Emit a seeded random point of GL(m|n)(Λ_N) as supermatrix JSON.
    Sample {
        #[command(flatten)]
        config: Config,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout, stderr: stderr.into() }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Parse(_) | Error::Dimension(_) | Error::Index(_) => EXIT_USAGE,
        Error::NotInvertible(_) | Error::Parity(_) | Error::Permutation(_) => EXIT_FAILURE,
    }
}

fn from_error(e: Error) -> Outcome {
    Outcome::fail(error_code(&e), String::new(), format!("error: {e}\n"))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, String::new(), text) };
        }
    };
    match cli.command {
        Command::Tableaux { config, list } => cmd_tableaux(&config, list),
        Command::Verify { suite, config } => cmd_verify(suite, &config),
        Command::Berezinian { file, format } => cmd_berezinian(&file, format),
        Command::Factor { file } => cmd_factor(&file),
        Command::Sample { config } => cmd_sample(&config),
    }
}

fn dim_of(config: &Config) -> Result<SuperDim, Outcome> {
    SuperDim::new(config.m, config.n).map_err(from_error)
}

#[derive(Serialize)]
struct TableRowOut {
    shape: Vec<usize>,
    syt: u64,
    ssyt: u64,
    admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    fillings: Option<Vec<Vec<String>>>,
}

pub fn cmd_tableaux(config: &Config, list: bool) -> Outcome {
    if let Err(o) = dim_of(config) {
        return o;
    }
    let table = match dimension_table(config.m, config.n, config.r) {
        Ok(t) => t,
        Err(e) => return from_error(e),
    };
    let fillings = |row: &crate::tableaux::ShapeRow| -> Vec<Vec<String>> {
        enumerate_ssyt(&row.shape, config.m, config.n)
            .iter()
            .map(|f| f.rows().iter().map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")).collect())
            .collect()
    };
    let mut out = String::new();
    match config.format {
        Format::Json => {
            let rows: Vec<TableRowOut> = table
                .iter()
                .map(|row| TableRowOut {
                    shape: row.shape.parts().to_vec(),
                    syt: row.syt,
                    ssyt: row.ssyt,
                    admissible: row.admissible,
                    fillings: list.then(|| fillings(row)),
                })
                .collect();
            out.push_str(&serde_json::to_string(&rows).expect("serializable"));
            out.push('\n');
        }
        Format::Table => {
            let _ = writeln!(out, "gl({}|{}), r = {}", config.m, config.n, config.r);
            let _ = writeln!(out, "{:<16} {:>8} {:>8} {:>11}", "shape", "syt", "ssyt", "admissible");
            for row in &table {
                let _ = writeln!(
                    out,
                    "{:<16} {:>8} {:>8} {:>11}",
                    row.shape.to_string(),
                    row.syt,
                    row.ssyt,
                    if row.admissible { "yes" } else { "no" }
                );
                if list {
                    for f in fillings(row) {
                        for line in f {
                            let _ = writeln!(out, "    {line}");
                        }
                        out.push_str("    --\n");
                    }
                }
            }
            let total = weighted_total(&table);
            let _ = writeln!(
                out,
                "sum syt*ssyt = {total}, (m+n)^r = {}",
                (config.m + config.n).pow(config.r as u32)
            );
        }
    }
    Outcome::ok(out)
}

/// One line of a verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub suite: &'static str,
    pub check: String,
    pub pass: bool,
    pub detail: serde_json::Value,
}

struct Recorder {
    suite: &'static str,
    lines: Vec<CheckLine>,
}

impl Recorder {
    fn push(&mut self, check: &str, pass: bool, detail: serde_json::Value) {
        self.lines.push(CheckLine { suite: self.suite, check: check.to_string(), pass, detail });
    }
}

pub fn cmd_verify(suite: Suite, config: &Config) -> Outcome {
    let dim = match dim_of(config) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let needs_tensor = matches!(suite, Suite::Actions | Suite::Schurweyl | Suite::Group);
    if needs_tensor {
        if config.r == 0 {
            return Outcome::fail(EXIT_USAGE, String::new(), "error: -r must be at least 1\n");
        }
        match tensor_dim(dim, config.r) {
            Ok(size) if size > config.cap => {
                return from_error(Error::CapExceeded { size, cap: config.cap });
            }
            Err(e) => return from_error(e),
            _ => {}
        }
    }
    let name = match suite {
        Suite::Bracket => "bracket",
        Suite::Actions => "actions",
        Suite::Schurweyl => "schurweyl",
        Suite::Group => "group",
    };
    let mut rec = Recorder { suite: name, lines: Vec::new() };
    let result = match suite {
        Suite::Bracket => suite_bracket(dim, config, &mut rec),
        Suite::Actions => suite_actions(dim, config, &mut rec),
        Suite::Schurweyl => suite_schurweyl(config, &mut rec),
        Suite::Group => suite_group(dim, config, &mut rec),
    };
    if let Err(e) = result {
        return from_error(e);
    }
    let mut out = String::new();
    for line in &rec.lines {
        match config.format {
            Format::Json => {
                out.push_str(&serde_json::to_string(line).expect("serializable"));
                out.push('\n');
            }
            Format::Table => {
                let _ = writeln!(out, "{} {:<32} {}", if line.pass { "PASS" } else { "FAIL" }, line.check, line.detail);
            }
        }
    }
    if rec.lines.iter().all(|l| l.pass) {
        Outcome::ok(out)
    } else {
        let failed: Vec<&str> = rec.lines.iter().filter(|l| !l.pass).map(|l| l.check.as_str()).collect();
        Outcome::fail(EXIT_FAILURE, out, format!("failed checks: {}\n", failed.join(", ")))
    }
}

type SuiteResult = Result<(), Error>;

fn suite_bracket(dim: SuperDim, config: &Config, rec: &mut Recorder) -> SuiteResult {
    let basis = GlElement::elementary_basis(dim);
    let mut witness = None;
    for x in &basis {
        for y in &basis {
            let xy = x.bracket(y)?;
            let yx = y.bracket(x)?;
            let expected = if x.parity().koszul(y.parity()) {
                yx.matrix().clone()
            } else {
                SuperMatrix::new(dim, yx.matrix().matrix().neg())?
            };
            if xy.matrix() != &expected && witness.is_none() {
                witness = Some(format!("{x:?} {y:?}"));
            }
        }
    }
    rec.push("antisymmetry", witness.is_none(), json!({"pairs": basis.len().pow(2), "witness": witness}));

    let mut witness = None;
    let mut count = 0;
    for x in &basis {
        for y in &basis {
            for z in &basis {
                count += 1;
                let (px, py, pz) = (x.parity().bit(), y.parity().bit(), z.parity().bit());
                let t1 = x.bracket(&y.bracket(z)?)?;
                let t2 = y.bracket(&z.bracket(x)?)?.scaled(&sign(px * py + px * pz));
                let t3 = z.bracket(&x.bracket(y)?)?.scaled(&sign(px * pz + py * pz));
                let sum = t1.matrix().add(t2.matrix())?.add(t3.matrix())?;
                if !sum.matrix().is_zero() && witness.is_none() {
                    witness = Some(format!("e{:?} e{:?} e{:?}", x.matrix(), y.matrix(), z.matrix()));
                }
            }
        }
    }
    rec.push("super_jacobi", witness.is_none(), json!({"triples": count, "witness": witness}));

    let vanishes = basis
        .iter()
        .flat_map(|x| basis.iter().map(move |y| (x, y)))
        .all(|(x, y)| x.bracket(y).map(|b| num_traits::Zero::is_zero(&b.matrix().supertrace())).unwrap_or(false));
    rec.push("supertrace_vanishes_on_brackets", vanishes, json!({"pairs": basis.len().pow(2)}));

    let big_n = config.grassmann_n.max(2);
    let (ok, total) = even_rules_check(dim, big_n)?;
    rec.push("even_rules", ok == total, json!({"grassmann_n": big_n, "identities": total, "holding": ok}));
    Ok(())
}

fn sign(exponent: usize) -> crate::scalar::Rational {
    crate::scalar::q(if exponent.is_multiple_of(2) { 1 } else { -1 })
}

/// Parameters of each parity used for the even-rules identity.
fn sample_parameters(big_n: usize, parity: Parity) -> Result<Vec<GrassmannElement>, Error> {
    Ok(match parity {
        Parity::Even => vec![GrassmannElement::one(big_n), GrassmannElement::monomial(big_n, &[1, 2], crate::scalar::q(1))?],
        Parity::Odd => vec![GrassmannElement::generator(big_n, 1)?, GrassmannElement::generator(big_n, 2)?],
    })
}

/// `[a⊗v, b⊗w] = (−1)^{p(b)p(v)} ab ⊗ {v, w}` for elementary `v, w`.
pub fn even_rules_check(dim: SuperDim, big_n: usize) -> Result<(usize, usize), Error> {
    let basis = GlElement::elementary_basis(dim);
    let mut ok = 0;
    let mut total = 0;
    for v in &basis {
        for w in &basis {
            let vw = v.bracket(w)?;
            for a in sample_parameters(big_n, v.parity())? {
                for b in sample_parameters(big_n, w.parity())? {
                    total += 1;
                    let av = v.tensor_point(&a)?;
                    let bw = w.tensor_point(&b)?;
                    let lhs = av.mul(&bw)?.sub(&bw.mul(&av)?)?;
                    let ab = a.try_mul(&b)?;
                    let rhs = vw.tensor_point(&ab)?;
                    let rhs = if w.parity().koszul(v.parity()) {
                        SuperMatrix::new(dim, rhs.matrix().neg())?
                    } else {
                        rhs
                    };
                    if lhs == rhs {
                        ok += 1;
                    }
                }
            }
        }
    }
    Ok((ok, total))
}

fn suite_actions(dim: SuperDim, config: &Config, rec: &mut Recorder) -> SuiteResult {
    let r = config.r;
    let perms = Permutation::all(r);
    let mut agree = true;
    for sigma in &perms {
        let a = tau_permutation_via(dim, sigma, Decomposition::Adjacent)?;
        let b = tau_permutation_via(dim, sigma, Decomposition::Cycles)?;
        let c = tau_closed_form(dim, sigma)?;
        agree &= a == b && a == c;
    }
    rec.push("tau_well_defined", agree, json!({"permutations": perms.len()}));

    let taus: Vec<TensorOperator<_>> = perms.iter().map(|s| tau_permutation(dim, s)).collect::<Result<_, _>>()?;
    let mut right_action = true;
    for (i, s) in perms.iter().enumerate() {
        for (j, p) in perms.iter().enumerate() {
            let sp = tau_permutation(dim, &s.compose(p)?)?;
            right_action &= sp == taus[j].mul(&taus[i])?;
        }
    }
    rec.push("tau_right_action", right_action, json!({"pairs": perms.len().pow(2)}));

    let basis = GlElement::elementary_basis(dim);
    let thetas: Vec<_> = basis.iter().map(|x| theta_derivation(x, r)).collect::<Result<_, _>>()?;
    let mut hom = true;
    for (x, tx) in basis.iter().zip(&thetas) {
        for (y, ty) in basis.iter().zip(&thetas) {
            let lhs = theta_derivation(&x.bracket(y)?, r)?;
            hom &= lhs == tx.supercommutator(ty, x.parity(), y.parity())?;
        }
    }
    rec.push("theta_homomorphism", hom, json!({"pairs": basis.len().pow(2)}));

    let commute = taus.iter().all(|t| thetas.iter().all(|th| t.mul(th).ok() == th.mul(t).ok()));
    rec.push("tau_theta_commute", commute, json!({"permutations": perms.len(), "elementary": basis.len()}));

    let big_n = config.grassmann_n;
    let mut rng = random::rng(config.seed);
    let trials = 5;
    let mut mult = true;
    for _ in 0..trials {
        let g = random::gl_point(&mut rng, dim, big_n);
        let h = random::gl_point(&mut rng, dim, big_n);
        mult &= rho_group(&g.mul(&h)?, r)? == rho_group(&g, r)?.mul(&rho_group(&h, r)?)?;
    }
    rec.push("rho_homomorphism", mult, json!({"seed": config.seed, "pairs": trials, "grassmann_n": big_n}));

    let mut link = true;
    let mut count = 0;
    let id = TensorOperator::<GrassmannElement>::identity(dim, r, big_n)?;
    for x in basis.iter().filter(|x| x.parity() == Parity::Odd) {
        let (i, j) = elementary_position(x);
        for k in 1..=big_n {
            let alpha = GrassmannElement::generator(big_n, k)?;
            count += 1;
            link &= rho_group(&one_param_e(dim, i, j, alpha.clone())?, r)? == id.add(&theta_at_point(x, &alpha, r)?)?;
        }
    }
    rec.push("rho_theta_linkage", link, json!({"identities": count}));
    Ok(())
}

fn elementary_position(x: &GlElement) -> (usize, usize) {
    let size = x.dim().size();
    (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .find(|&(i, j)| !num_traits::Zero::is_zero(x.matrix().get(i, j)))
        .expect("nonzero elementary matrix")
}

fn suite_schurweyl(config: &Config, rec: &mut Recorder) -> SuiteResult {
    let report = double_centralizer_report(config.m, config.n, config.r, config.cap)?;
    let pass = report.passed();
    rec.push("double_centralizer", pass, serde_json::to_value(&report).expect("serializable"));
    Ok(())
}

fn suite_group(dim: SuperDim, config: &Config, rec: &mut Recorder) -> SuiteResult {
    let big_n = config.grassmann_n;
    let mut rng = random::rng(config.seed);
    let trials = 50;

    let mut mult = true;
    for _ in 0..trials {
        let g = random::gl_point(&mut rng, dim, big_n);
        let h = random::gl_point(&mut rng, dim, big_n);
        mult &= g.mul(&h)?.berezinian()? == g.berezinian()?.mul(&h.berezinian()?);
    }
    rec.push("berezinian_multiplicative", mult, json!({"seed": config.seed, "pairs": trials}));

    let size = dim.size();
    let mut gens_ok = true;
    for i in 0..size {
        for j in 0..size {
            if i == j {
                let x = random::invertible_grassmann(&mut rng, big_n).parity_parts().0;
                let x = if num_traits::Zero::is_zero(&x.body()) { GrassmannElement::one(big_n) } else { x };
                let expected = if dim.parity(i) == Parity::Even { x.clone() } else { x.try_inverse()? };
                gens_ok &= one_param_h(dim, i, x)?.berezinian()? == expected;
            } else {
                let x = random::grassmann(&mut rng, big_n, Some(dim.entry_parity(i, j)));
                gens_ok &= one_param_e(dim, i, j, x)?.berezinian()?.equals_one();
            }
        }
    }
    rec.push("berezinian_on_generators", gens_ok, json!({"size": size}));

    let mut ldu = true;
    let mut words = true;
    for k in 0..trials {
        let g = random::gl_point(&mut rng, dim, big_n);
        ldu &= g.ldu_factor()?.product()? == g;
        if k < 10 {
            words &= word_product(dim, big_n, &g.generator_word()?)? == g;
        }
    }
    rec.push("ldu_reconstruction", ldu, json!({"points": trials}));
    rec.push("generator_word_reconstruction", words, json!({"points": 10}));

    let report = rho_theta_equality_report(config.m, config.n, config.r, big_n.max(2), config.cap)?;
    rec.push("rho_theta_subalgebras", report.all_pass, serde_json::to_value(&report).expect("serializable"));
    Ok(())
}

fn read_matrix(path: &std::path::Path) -> Result<SuperMatrix<GrassmannElement>, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, String::new(), format!("error: cannot read {}: {e}\n", path.display())))?;
    supermatrix_from_json(&text).map(|m| m.into_grassmann()).map_err(from_error)
}

pub fn cmd_berezinian(path: &std::path::Path, format: Format) -> Outcome {
    let g = match read_matrix(path) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let ber = match g.berezinian() {
        Ok(b) => b,
        Err(e) => return from_error(e),
    };
    let str_ = g.supertrace();
    let out = match format {
        Format::Json => format!(
            "{{\"berezinian\":{},\"supertrace\":{}}}\n",
            grassmann_to_json(&ber),
            grassmann_to_json(&str_)
        ),
        Format::Table => format!("Ber = {ber}\nstr = {str_}\n"),
    };
    Outcome::ok(out)
}

#[derive(Serialize)]
struct FactorOut {
    upper: SuperMatrixWire,
    blockdiag: SuperMatrixWire,
    lower: SuperMatrixWire,
    verified: bool,
}

pub fn cmd_factor(path: &std::path::Path) -> Outcome {
    let g = match read_matrix(path) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let f = match g.ldu_factor() {
        Ok(f) => f,
        Err(e) => return from_error(e),
    };
    let verified = f.product().map(|p| p == g).unwrap_or(false);
    let out = FactorOut {
        upper: supermatrix_to_wire(&f.upper),
        blockdiag: supermatrix_to_wire(&f.blockdiag),
        lower: supermatrix_to_wire(&f.lower),
        verified,
    };
    let text = serde_json::to_string(&out).expect("serializable") + "\n";
    if verified {
        Outcome::ok(text)
    } else {
        Outcome::fail(EXIT_FAILURE, text, "reconstruction failed\n")
    }
}

pub fn cmd_sample(config: &Config) -> Outcome {
    let dim = match dim_of(config) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let g = random::gl_point(&mut random::rng(config.seed), dim, config.grassmann_n);
    Outcome::ok(serde_json::to_string(&supermatrix_to_wire(&g)).expect("serializable") + "\n")
}
