//! The `qknot` command line: computations, verification suites and tables.
//!
//! Exit codes are `0` on success, `1` when a check fails and `2` on a usage
//! error. `QKNOT_PMAX` bounds the `p`-range of the suites.

use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::acurve::{
    a_candidate, clasp_factor_check, degree_check, heuristic_annihilators, hs_recursion_check,
    round_trip, specialization_chain,
};
use crate::cpoly::{
    alexander_specialization, appendix_table, backward_form, backward_form_closed,
    backward_recursion_holds, check_appendix, cpoly_closed, cpoly_recursive, nc_cpoly,
    q1_consistency, summand_recursion_holds, CoeffMatrix, APPENDIX_RANGE,
};
use crate::cyclotomic::{
    colored_jones_twist, cyclotomic_sequence, cyclotomic_twist, eval_q1, genfun_check,
};
use crate::exact::{LaurentPoly, PolyJson, Rational, RationalFunction};
use crate::names::{E, L, M, Q, SMALL_Q};
use crate::telescope::{
    celine_solve, explicit_apparatus, minimal_certificate, telescoping_check, twist_window, HGTerm,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "qknot",
    version,
    about = "Twist knots, C-polynomials and A-polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Annihilation,
    Recursion,
    Alexander,
    Phi,
    Certificates,
    Appendix,
    Q1,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Celine,
    Certificate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The cyclotomic function Ĵ_p(n).
    Cyclotomic {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// The colored Jones polynomial J_p(n).
    Jones {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// C_p(E,Q), or C_p(E,Q,q) with --nc.
    Cpoly {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        nc: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The A-polynomial candidate φ(C_p^op) over its monomial-type factor.
    Apoly {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        json: bool,
    },
    /// Creative telescoping for `twist:P`, `qbinomial` or `json:FILE`.
    Telescope {
        #[arg(long)]
        term: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// k-shift bound (celine) or K-window half width (certificate).
        #[arg(long, default_value_t = 2)]
        kdeg: usize,
        #[arg(long, value_enum, default_value_t = Mode::Celine)]
        mode: Mode,
        /// Check the explicit certificates of the twist knots instead of solving.
        #[arg(long)]
        verify_only: bool,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Prints tables.
    Table {
        /// The coefficient tables of C_p(E,Q,q) for |p| ≤ 3, in LaTeX.
        #[arg(long)]
        appendix: bool,
    },
}

/// Ratio pair accepted by `telescope --term json:FILE`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermSpec {
    pub ratio_n: RationalFunction,
    pub ratio_k: RationalFunction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    #[serde(serialize_with = "as_secs")]
    pub duration: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{status}  {}", c.id)?;
            if let Some(w) = &c.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let unit = if self.suite == "appendix" {
            "knots"
        } else {
            "identities"
        };
        write!(
            f,
            "{}: {verdict}, {} {unit} checked",
            self.suite,
            self.checks.len()
        )?;
        if !self.passed() {
            write!(f, ", {} failed", self.failed())?;
        }
        write!(f, " ({:.2}s)", self.duration.as_secs_f64())
    }
}

type CheckFn = Box<dyn Fn() -> Result<Option<String>> + Send + Sync>;

struct Check {
    id: String,
    run: CheckFn,
}

fn check(
    id: impl Into<String>,
    f: impl Fn() -> Result<Option<String>> + Send + Sync + 'static,
) -> Check {
    Check {
        id: id.into(),
        run: Box::new(f),
    }
}

fn ok_if(cond: bool, witness: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(witness())
    }
}

/// `QKNOT_PMAX`, or `default` when unset or malformed.
pub fn pmax(default: i64) -> i64 {
    std::env::var("QKNOT_PMAX")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn nonzero(bound: i64) -> impl Iterator<Item = i64> {
    (-bound..=bound).filter(|&p| p != 0)
}

fn annihilation_checks() -> Vec<Check> {
    nonzero(pmax(4))
        .map(|p| {
            check(format!("annihilation p={p} n=0..12"), move || {
                let op = nc_cpoly(p).op;
                let seq = cyclotomic_sequence(p);
                for n in 0..=12 {
                    if !op.apply(&seq, n)?.is_zero() {
                        return Ok(Some(format!("C_{p} Ĵ_{p} ≠ 0 at n={n}")));
                    }
                }
                Ok(None)
            })
        })
        .collect()
}

fn recursion_checks() -> Vec<Check> {
    let b = pmax(10);
    let mut v = Vec::new();
    for p in -b..=b {
        v.push(check(format!("closed form = recursion p={p}"), move || {
            let (a, r) = (cpoly_closed(p), cpoly_recursive(p));
            Ok(ok_if(a == r, || format!("{} ≠ {}", a.poly, r.poly)))
        }));
        v.push(check(
            format!("backward three-term recursion p={p}"),
            move || {
                Ok(ok_if(backward_recursion_holds(p), || {
                    "D_p ≠ X·D_{p−1} − Q²D_{p−2}".into()
                }))
            },
        ));
        v.push(check(format!("backward closed form p={p}"), move || {
            Ok(ok_if(backward_form(p) == backward_form_closed(p), || {
                "C_p^op differs from Σ b′ E^i".into()
            }))
        }));
    }
    for p in 2..=b.min(5) {
        v.push(check(format!("summand recursion p={p}"), move || {
            Ok(ok_if(summand_recursion_holds(p), || {
                "s-recursion fails".into()
            }))
        }));
    }
    v
}

fn alexander_checks() -> Vec<Check> {
    let b = pmax(10);
    let mut v = Vec::new();
    for p in -b..=b {
        v.push(check(
            format!("C_p^op(M−2+M⁻¹,1) = Δ_p p={p}"),
            move || {
                Ok(ok_if(alexander_specialization(p), || {
                    "specialization differs from Δ_p".into()
                }))
            },
        ));
    }
    for p in -b.min(6)..=b.min(6) {
        v.push(check(format!("φ|_(L=1) chain p={p}"), move || {
            Ok(ok_if(specialization_chain(p)?, || "chain breaks".into()))
        }));
    }
    for p in -b.min(5)..=b.min(5) {
        v.push(check(
            format!("Ĵ_p(n)|_(q=1) = (−p)^n p={p} n≤10"),
            move || {
                for n in 0..=10 {
                    let want = Rational::from_integer(num_bigint::BigInt::from(-p).pow(n as u32));
                    let got = eval_q1(p, n)?;
                    if got != want {
                        return Ok(Some(format!("n={n}: {got} ≠ {want}")));
                    }
                }
                Ok(None)
            },
        ));
        v.push(check(format!("generating function p={p} N=8"), move || {
            Ok(ok_if(genfun_check(p, 8)?, || "Δ_p Σ I_p(n) zⁿ ≢ 1".into()))
        }));
    }
    v
}

fn phi_checks() -> Vec<Check> {
    let b = pmax(10);
    let mut v = Vec::new();
    for p in nonzero(b.min(6)) {
        v.push(check(format!("Â_p is a polynomial p={p}"), move || {
            a_candidate(p)?;
            Ok(None)
        }));
    }
    let hb = b.min(6);
    v.push(check(
        format!("Hoste–Shanahan recursion 1..{hb}"),
        move || {
            Ok(ok_if(hs_recursion_check(1, hb)?, || {
                "recursion fails".into()
            }))
        },
    ));
    v.push(check(
        format!("Hoste–Shanahan recursion −{hb}..−1"),
        move || {
            Ok(ok_if(hs_recursion_check(-hb, -1)?, || {
                "recursion fails".into()
            }))
        },
    ));
    v.push(check("Â_1 = L + M³", || {
        let a = a_candidate(1)?.poly;
        let want = LaurentPoly::var(L) + LaurentPoly::var(M).pow(3);
        Ok(ok_if(a == want, || format!("Â_1 = {a}")))
    }));
    for p in nonzero(b.min(3)) {
        v.push(check(format!("inversion round trip p={p}"), move || {
            Ok(ok_if(round_trip(p)?, || {
                "invert_phi(Â_p) ≢′ rad(C_p^op)".into()
            }))
        }));
    }
    for p in nonzero(b) {
        v.push(check(
            format!("clasp factors and degree 3|p|−2 p={p}"),
            move || {
                Ok(ok_if(clasp_factor_check(p) && degree_check(p), || {
                    "structure check fails".into()
                }))
            },
        ));
    }
    v.push(check("colored Jones weight relations n,k ≤ 8", || {
        Ok(ok_if(heuristic_annihilators(8, 8)?, || {
            "ratio identity fails".into()
        }))
    }));
    v
}

fn certificate_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for p in [1i64, 2, -1, -2] {
        v.push(check(
            format!("explicit certificate apparatus p={p}"),
            move || {
                let rep = explicit_apparatus(p)?;
                Ok(ok_if(rep.passed(), || {
                    rep.failures()
                        .map(|c| c.name.clone())
                        .collect::<Vec<_>>()
                        .join("; ")
                }))
            },
        ));
    }
    for p in [1i64, 2, -1, -2] {
        v.push(check(
            format!("certificate solver recovers C_p p={p}"),
            move || {
                let t = HGTerm::twist(p);
                let (lo, hi) = twist_window(p);
                let Some((order, sol)) =
                    minimal_certificate(&t, p.unsigned_abs() as usize, lo, hi)?
                else {
                    return Ok(Some("no certificate up to order |p|".into()));
                };
                let op = sol.forward(&t)?.operator();
                Ok(ok_if(
                    order == p.unsigned_abs() as usize && op.is_left_associate(&nc_cpoly(p).op),
                    || format!("order {order}, operator {op:?}"),
                ))
            },
        ));
    }
    for (p, order) in [(1i64, 3usize), (-1, 3), (2, 5)] {
        v.push(check(
            format!("k-free ansatz p={p} (I,J)=({order},2)"),
            move || {
                let t = HGTerm::twist(p);
                let Some(sol) = celine_solve(&t, order, 2)? else {
                    return Ok(Some("no solution".into()));
                };
                let op = sol.operator();
                let (_, rem) = op.right_divide(&nc_cpoly(p).op)?;
                let tele = telescoping_check(&t, &op, 10)?;
                Ok(ok_if(rem.is_zero() && tele, || {
                    format!("remainder zero: {}, telescopes: {tele}", rem.is_zero())
                }))
            },
        ));
    }
    v
}

fn appendix_checks() -> Vec<Check> {
    APPENDIX_RANGE
        .iter()
        .map(|&p| {
            check(format!("table C_{p}"), move || {
                Ok(check_appendix(p).err().map(|e| e.to_string()))
            })
        })
        .collect()
}

fn q1_checks() -> Vec<Check> {
    let b = pmax(10).min(6);
    (-b..=b)
        .map(|p| {
            check(format!("C_p(E,Q,1) = C_p(E,Q) p={p}"), move || {
                Ok(ok_if(q1_consistency(p)?, || {
                    "specialization differs".into()
                }))
            })
        })
        .collect()
}

fn suite_checks(s: Suite) -> Vec<Check> {
    match s {
        Suite::Annihilation => annihilation_checks(),
        Suite::Recursion => recursion_checks(),
        Suite::Alexander => alexander_checks(),
        Suite::Phi => phi_checks(),
        Suite::Certificates => certificate_checks(),
        Suite::Appendix => appendix_checks(),
        Suite::Q1 => q1_checks(),
        Suite::All => [
            Suite::Appendix,
            Suite::Annihilation,
            Suite::Recursion,
            Suite::Q1,
            Suite::Alexander,
            Suite::Phi,
            Suite::Certificates,
        ]
        .into_iter()
        .flat_map(suite_checks)
        .collect(),
    }
}

/// Runs a suite; checks run in parallel, the report keeps their order.
pub fn run_suite(s: Suite) -> SuiteReport {
    let start = Instant::now();
    let checks = suite_checks(s)
        .par_iter()
        .map(|c| match (c.run)() {
            Ok(w) => CheckResult {
                id: c.id.clone(),
                passed: w.is_none(),
                witness: w,
            },
            Err(e) => CheckResult {
                id: c.id.clone(),
                passed: false,
                witness: Some(format!("error: {e}")),
            },
        })
        .collect();
    let suite = format!("{s:?}").to_lowercase();
    SuiteReport {
        suite,
        checks,
        duration: start.elapsed(),
    }
}

fn json_line(p: &LaurentPoly, vars: &[&str]) -> Result<String> {
    Ok(serde_json::to_string(&PolyJson::from_poly_over(p, vars)?)?)
}

/// All tables in LaTeX, separated by blank lines.
pub fn appendix_latex() -> String {
    APPENDIX_RANGE
        .iter()
        .map(|&p| appendix_table(p).to_latex())
        .collect::<Vec<_>>()
        .join("\n\n")
}

fn parse_term(spec: &str) -> Result<HGTerm> {
    if let Some(p) = spec.strip_prefix("twist:") {
        let p: i64 = p
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad twist parameter {p:?}")))?;
        return Ok(HGTerm::twist(p));
    }
    if spec == "qbinomial" {
        return Ok(HGTerm::q_binomial_theorem());
    }
    if let Some(path) = spec.strip_prefix("json:") {
        let text = std::fs::read_to_string(path)?;
        let t: TermSpec = serde_json::from_str(&text)?;
        return Ok(HGTerm::from_ratios(path, t.ratio_n, t.ratio_k));
    }
    Err(Error::InvalidArgument(format!(
        "unknown term {spec:?}; use twist:P, qbinomial or json:FILE"
    )))
}

fn telescope(
    out: &mut String,
    term: &str,
    order: usize,
    kdeg: usize,
    mode: Mode,
    verify_only: bool,
) -> Result<bool> {
    let t = parse_term(term)?;
    let twist_p = term
        .strip_prefix("twist:")
        .and_then(|s| s.parse::<i64>().ok());
    let compatible = t.is_compatible();
    writeln!(
        out,
        "term {}: shift compatibility {}",
        t.name,
        if compatible { "holds" } else { "FAILS" }
    )
    .unwrap();
    if verify_only {
        let Some(p) = twist_p else {
            return Ok(compatible);
        };
        let rep = explicit_apparatus(p)?;
        for c in &rep.checks {
            writeln!(
                out,
                "{}  [{}] {}",
                if c.passed { "pass" } else { "FAIL" },
                c.class,
                c.name
            )
            .unwrap();
        }
        return Ok(compatible && rep.passed());
    }
    let op = match mode {
        Mode::Celine => {
            let Some(sol) = celine_solve(&t, order, kdeg)? else {
                writeln!(out, "no k-free relation with I={order}, J={kdeg}").unwrap();
                return Ok(false);
            };
            writeln!(out, "k-free relation found, order {}", sol.order()).unwrap();
            sol.operator()
        }
        Mode::Certificate => {
            let w = kdeg as i32;
            let Some(sol) = crate::telescope::certificate_solve(&t, order, -w, w)? else {
                writeln!(out, "no certificate with I={order}, K-window ±{w}").unwrap();
                return Ok(false);
            };
            let cert = sol.forward(&t)?;
            writeln!(out, "certificate: {}", cert.cert).unwrap();
            cert.operator()
        }
    };
    let monic = op.monic()?;
    writeln!(out, "operator (monic):").unwrap();
    for (i, c) in monic.coeffs() {
        writeln!(out, "  E^{i}: {c}").unwrap();
    }
    let mut ok = true;
    if t.values.is_some() {
        let tele = telescoping_check(&t, &op, 10)?;
        writeln!(out, "annihilates the summed sequence for n ≤ 10: {tele}").unwrap();
        ok &= tele;
    }
    if let Some(p) = twist_p {
        let c = nc_cpoly(p).op;
        let (_, rem) = op.right_divide(&c)?;
        let assoc = op.is_left_associate(&c);
        writeln!(
            out,
            "left multiple of C_{p}: {}, equal up to a left unit: {assoc}",
            rem.is_zero()
        )
        .unwrap();
        ok &= rem.is_zero();
    }
    Ok(ok)
}

fn execute(cmd: Command, out: &mut String) -> Result<bool> {
    match cmd {
        Command::Cyclotomic { p, n, json } => {
            let v = cyclotomic_twist(p, n)?;
            if json {
                writeln!(out, "{}", json_line(&v.value, &[SMALL_Q])?).unwrap();
            } else {
                writeln!(out, "{}", v.value).unwrap();
            }
        }
        Command::Jones { p, n, json } => {
            let v = colored_jones_twist(p, n)?;
            if json {
                writeln!(out, "{}", json_line(&v, &[SMALL_Q])?).unwrap();
            } else {
                writeln!(out, "{v}").unwrap();
            }
        }
        Command::Cpoly { p, nc, format } => {
            let (poly, vars): (LaurentPoly, &[&str]) = if nc {
                (nc_cpoly(p).poly(), &[E, Q, SMALL_Q])
            } else {
                (cpoly_closed(p).poly, &[E, Q])
            };
            match format {
                Format::Text => writeln!(out, "{poly}").unwrap(),
                Format::Json => writeln!(out, "{}", json_line(&poly, vars)?).unwrap(),
                Format::Latex => {
                    writeln!(out, "{}", CoeffMatrix::from_poly(p, &poly).to_latex()).unwrap()
                }
                Format::Matrix => write!(out, "{}", CoeffMatrix::from_poly(p, &poly)).unwrap(),
            }
        }
        Command::Apoly { p, json } => {
            let a = a_candidate(p)?;
            if json {
                writeln!(out, "{}", json_line(&a.poly, &[L, M])?).unwrap();
            } else {
                writeln!(out, "{}", a.poly).unwrap();
            }
        }
        Command::Telescope {
            term,
            order,
            kdeg,
            mode,
            verify_only,
        } => {
            return telescope(out, &term, order, kdeg, mode, verify_only);
        }
        Command::Verify { suite, json } => {
            let rep = run_suite(suite);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rep)?).unwrap();
            } else {
                writeln!(out, "{rep}").unwrap();
            }
            return Ok(rep.passed());
        }
        Command::Table { appendix } => {
            if !appendix {
                return Err(Error::InvalidArgument(
                    "table: only --appendix is available".into(),
                ));
            }
            writeln!(out, "{}", appendix_latex()).unwrap();
        }
    }
    Ok(true)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf = String::new();
    let result = execute(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ Error::InvalidArgument(_)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
