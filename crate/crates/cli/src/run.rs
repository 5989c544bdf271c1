use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use rihahn::biorth::{
    check_bridge, christoffel_chain_check, christoffel_chain_glued, gram_matrix, hahn_gram,
    WeightVector,
};
use rihahn::bispectral::{
    verify_askey_recurrence, verify_difference_equation, verify_parameter_shift,
    verify_recurrence_monic, verify_recurrence_nonmonic, verify_y_action,
};
use rihahn::families::{askey_limit_deltas, converges_under_doubling, Family, FamilyTable};
use rihahn::gevp::{
    adjoint_eigen_residual, adjoint_gevp_residual, bidiagonal_gevp_eigenvalues, gevp_residual,
    solve_p_coefficients, solve_v_coefficients,
};
use rihahn::grid::{adjoint_check, make_adjoint_l, make_adjoint_m, make_l, make_m};
use rihahn::kernel::{Radical, RadicalQ};
use rihahn::qlimit::{q_gram_einf, q_to_1_limit_check, u_tilde, QParameterSet};
use rihahn::report::{GramReport, IdentityReport};
use rihahn::sampling::random_rational;
use rihahn::{int, rat, Error, HahnParameterSet, ParameterSet, Rational, Result};

use crate::args::{Command, LimitTarget, Opts, TabulateTarget, VerifyTarget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    fn new(location: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            location: location.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Everything a run produces; rendered as JSON or CSV by the caller.
#[derive(Debug)]
pub struct Outcome {
    pub command: String,
    pub params: Value,
    pub identity: String,
    pub violations: Vec<Violation>,
    pub payload: Value,
    /// Records for CSV output; violations are written instead when absent.
    pub table: Option<Vec<Vec<String>>>,
}

impl Outcome {
    fn new(command: &Command, identity: &str, params: Value) -> Self {
        Self {
            command: command_name(command),
            params,
            identity: identity.to_string(),
            violations: Vec::new(),
            payload: json!({}),
            table: None,
        }
    }

    fn absorb(&mut self, r: &IdentityReport) {
        for f in &r.failures {
            self.violations.push(Violation::new(
                format!("{}: {}", r.identity_name, f.location),
                &f.lhs,
                &f.rhs,
            ));
        }
    }

    fn absorb_gram(&mut self, g: &GramReport) {
        for v in &g.violations {
            self.violations.push(Violation::new(
                format!("({}, {})", v.row, v.col),
                &v.actual,
                &v.expected,
            ));
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn command_name(c: &Command) -> String {
    let sub = match c {
        Command::Tabulate { target } => format!("{target:?}"),
        Command::Verify { target } => format!("{target:?}"),
        Command::Limit { target } => format!("{target:?}"),
    };
    let head = match c {
        Command::Tabulate { .. } => "tabulate",
        Command::Verify { .. } => "verify",
        Command::Limit { .. } => "limit",
    };
    format!("{head} {}", sub.to_lowercase())
}

fn required<'a, T>(v: &'a Option<T>, flag: &str) -> Result<&'a T> {
    v.as_ref()
        .ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required")))
}

fn biorthogonal(o: &Opts) -> Result<ParameterSet> {
    ParameterSet::new(
        required(&o.alpha, "alpha")?.clone(),
        required(&o.beta, "beta")?.clone(),
        *required(&o.big_n, "N")?,
    )
}

fn hahn(o: &Opts) -> Result<HahnParameterSet> {
    HahnParameterSet::new(
        required(&o.xi, "xi")?.clone(),
        required(&o.eta, "eta")?.clone(),
        *required(&o.big_n, "N")?,
    )
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn run(command: &Command, o: &Opts) -> Result<Outcome> {
    match command {
        Command::Tabulate { target } => tabulate(command, *target, o),
        Command::Verify { target } => verify(command, *target, o),
        Command::Limit {
            target: LimitTarget::Askey,
        } => limit_askey(command, o),
        Command::Limit {
            target: LimitTarget::Q,
        } => limit_q(command, o),
    }
}

fn tabulate(command: &Command, target: TabulateTarget, o: &Opts) -> Result<Outcome> {
    if target == TabulateTarget::Hahn {
        let hp = hahn(o)?;
        let t = FamilyTable::build_hahn(&hp)?;
        let mut out = Outcome::new(command, "table", to_value(&hp));
        out.table = Some(t.csv_records());
        out.payload = json!({ "table": to_value(&t) });
        return Ok(out);
    }
    let p = biorthogonal(o)?;
    let mut out = Outcome::new(command, "table", to_value(&p));
    if target == TabulateTarget::Weights {
        let w = WeightVector::new(&p);
        let mut rows = vec![vec!["x".to_string(), "w".to_string()]];
        rows.extend(
            w.values
                .iter()
                .enumerate()
                .map(|(x, v)| vec![x.to_string(), v.to_string()]),
        );
        out.table = Some(rows);
        out.payload = json!({ "weights": strings(&w.values), "total": w.total().to_string() });
        return Ok(out);
    }
    let family = match target {
        TabulateTarget::P => Family::P,
        TabulateTarget::V => Family::V,
        _ => Family::Monic,
    };
    let t = FamilyTable::build(family, &p)?;
    out.table = Some(t.csv_records());
    out.payload = json!({ "table": to_value(&t) });
    Ok(out)
}

fn verify(command: &Command, target: VerifyTarget, o: &Opts) -> Result<Outcome> {
    if target == VerifyTarget::Hahn {
        let hp = hahn(o)?;
        let g = hahn_gram(&hp)?;
        let mut out = Outcome::new(command, "hahn-orthogonality", to_value(&hp));
        out.absorb_gram(&g);
        out.payload = json!({ "report": to_value(&g) });
        return Ok(out);
    }
    if target == VerifyTarget::Christoffel && o.xi.is_some() {
        let hp = hahn(o)?;
        let mut out = Outcome::new(command, "christoffel-chain", to_value(&hp));
        for n in 0..hp.big_n().min(hp.max_degree() + 1) {
            chain_step(&mut out, n, christoffel_chain_check(n, &hp))?;
        }
        return Ok(out);
    }
    let p = biorthogonal(o)?;
    let params = to_value(&p);
    let mut out;
    match target {
        VerifyTarget::Gevp => {
            out = Outcome::new(command, "gevp", params);
            let eig = bidiagonal_gevp_eigenvalues(&p);
            for (n, lambda) in eig.iter().enumerate() {
                if *lambda != int(n as i64) {
                    out.violations
                        .push(Violation::new(format!("eigenvalue {n}"), lambda, n));
                }
            }
            let mut coeffs = Vec::new();
            for n in 0..=p.big_n() {
                for (x, r) in gevp_residual(n, &p)?.values().iter().enumerate() {
                    if !r.is_zero() {
                        out.violations.push(Violation::new(
                            format!("(M - n L) P_n, n={n} x={x}"),
                            r,
                            0,
                        ));
                    }
                }
                coeffs.push(json!({
                    "n": n,
                    "phi": strings(&solve_p_coefficients(n, &p)?.coefficients),
                    "rho": strings(&solve_v_coefficients(n, &p)?.coefficients),
                }));
            }
            out.payload = json!({ "eigenvalues": strings(&eig), "coefficients": coeffs });
        }
        VerifyTarget::Adjoint => {
            out = Outcome::new(command, "adjointness", params);
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            let pairs = [
                ("L", make_l(&p)?, make_adjoint_l(&p)?),
                ("M", make_m(&p)?, make_adjoint_m(&p)?),
            ];
            for (name, op, star) in pairs {
                if !adjoint_check(&op, &star, &p, o.trials, &mut rng)? {
                    out.violations
                        .push(Violation::new(name, "(f, X g)", "(X* f, g)"));
                }
            }
            for n in 0..=p.big_n() {
                for (k, r) in adjoint_gevp_residual(n, &p)?.iter().enumerate() {
                    if !r.is_zero() {
                        out.violations.push(Violation::new(
                            format!("(M* - n L*) u, n={n} k={k}"),
                            r,
                            0,
                        ));
                    }
                }
                for (k, r) in adjoint_eigen_residual(n, &p)?.iter().enumerate() {
                    if !r.is_zero() {
                        out.violations.push(Violation::new(
                            format!("Z* V_n - n V_n, n={n} k={k}"),
                            r,
                            0,
                        ));
                    }
                }
            }
            out.payload = json!({ "seed": o.seed, "trials": o.trials });
        }
        VerifyTarget::Biorth => {
            out = Outcome::new(command, "biorthogonality", params);
            let g = gram_matrix(&p)?;
            out.absorb_gram(&g);
            let diag: Vec<Rational> = (0..g.gram.len()).map(|n| g.gram[n][n].clone()).collect();
            out.payload = json!({ "diag": strings(&diag), "report": to_value(&g) });
        }
        VerifyTarget::Bridge => {
            out = Outcome::new(command, "bridge", params);
            let r = check_bridge(&p)?;
            out.absorb(&r);
            out.payload = json!({ "checks": r.checks });
        }
        VerifyTarget::Christoffel => {
            out = Outcome::new(command, "christoffel-chain", params);
            for n in 0..p.big_n() {
                chain_step(&mut out, n, christoffel_chain_glued(n, &p))?;
            }
        }
        VerifyTarget::Recurrence => {
            out = Outcome::new(command, "recurrence", params);
            let mut checks = 0;
            for r in [
                verify_recurrence_nonmonic(&p)?,
                verify_recurrence_monic(&p)?,
                verify_y_action(&p)?,
            ] {
                out.absorb(&r);
                checks += r.checks;
            }
            out.payload = json!({ "checks": checks });
        }
        VerifyTarget::Difference => {
            out = Outcome::new(command, "difference-equation", params);
            let r = verify_difference_equation(&p)?;
            out.absorb(&r);
            out.payload = json!({ "checks": r.checks });
        }
        VerifyTarget::Shift => {
            out = Outcome::new(command, "parameter-shift", params);
            let r = verify_parameter_shift(&p)?;
            out.absorb(&r);
            out.payload = json!({ "checks": r.checks });
        }
        VerifyTarget::Hahn => unreachable!("handled above"),
    }
    Ok(out)
}

// A vanishing divisor makes that step of the chain undefined; it is listed
// rather than aborting the remaining degrees.
fn chain_step(out: &mut Outcome, n: u64, r: Result<IdentityReport>) -> Result<()> {
    match r {
        Ok(r) => out.absorb(&r),
        Err(Error::ZeroDivisor(msg)) => {
            out.violations
                .push(Violation::new(format!("n={n}"), msg, "nonzero divisor"))
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

const ASKEY_SIZES: [u64; 4] = [8, 16, 32, 64];

fn limit_askey(command: &Command, o: &Opts) -> Result<Outcome> {
    let alpha = required(&o.alpha, "alpha")?.clone();
    let beta = required(&o.beta, "beta")?.clone();
    let n_max = o.n_max.unwrap_or(4);
    let mut out = Outcome::new(
        command,
        "askey-limit",
        json!({ "alpha": alpha.to_string(), "beta": beta.to_string(), "n_max": n_max }),
    );
    let mut rows = vec![vec!["n".into(), "x".into(), "N".into(), "delta".into()]];
    for n in 0..=n_max {
        for x in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let deltas = askey_limit_deltas(n, &x, &alpha, &beta, &ASKEY_SIZES)?;
            for (size, d) in ASKEY_SIZES.iter().zip(&deltas) {
                rows.push(vec![
                    n.to_string(),
                    x.to_string(),
                    size.to_string(),
                    d.to_string(),
                ]);
            }
            if !converges_under_doubling(&deltas) {
                out.violations.push(Violation::new(
                    format!("n={n} x={x}"),
                    strings(&deltas).join(" "),
                    "strictly decreasing, ratios in [1/4, 3/4]",
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let samples: Vec<Rational> = (0..10).map(|_| random_rational(&mut rng)).collect();
    let r = verify_askey_recurrence(&alpha, &beta, n_max, &samples)?;
    out.absorb(&r);
    out.payload =
        json!({ "seed": o.seed, "samples": strings(&samples), "deltas": rows[1..].to_vec() });
    out.table = Some(rows);
    Ok(out)
}

fn limit_q(command: &Command, o: &Opts) -> Result<Outcome> {
    let p = biorthogonal(o)?;
    let qp = QParameterSet::from_biorthogonal(&p)?;
    let mut out = Outcome::new(command, "q-limit", to_value(&p));
    let ks: Vec<u32> = (3..=10).collect();
    let report = q_to_1_limit_check(&p, &ks)?;
    let names = ["delta_U", "delta_V", "delta_w", "delta_h"];
    for (j, name) in names.iter().enumerate() {
        if !report.decreasing[j] {
            out.violations.push(Violation::new(
                format!("{name} over k"),
                "not strictly decreasing",
                "strictly decreasing",
            ));
        }
        if !report.contracted[j] {
            out.violations.push(Violation::new(
                format!("{name} first/last"),
                "< 16",
                ">= 16",
            ));
        }
    }
    out.absorb(&report.targets);
    let mut rows = vec![["k", "q"]
        .iter()
        .chain(names.iter())
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    for r in &report.rows {
        let mut rec = vec![r.k.to_string(), r.q.to_string()];
        rec.extend(r.columns().iter().map(|v| v.to_string()));
        rows.push(rec);
    }
    let mut payload = json!({ "q_params": to_value(&qp), "limit": to_value(&report) });
    if let Some(q) = &o.q {
        let ctx = RadicalQ::new(q.clone(), qp.exponent_denominator())?;
        let g = q_gram_einf(&ctx, &qp, &q.to_string())?;
        for (n, m) in &g.violations {
            out.violations.push(Violation::new(
                format!("q-gram ({n}, {m})"),
                &g.gram[*n][*m],
                if n == m { &g.expected_diag[*n] } else { "0" },
            ));
        }
        payload["q_gram"] = to_value(&g);
        if let Some(e) = &o.e {
            let mut table = Vec::new();
            for n in 0..=p.big_n() {
                let row = (0..=p.big_n())
                    .map(|x| u_tilde(&ctx, n, x, &qp, e).map(|v: Radical| v.to_string()))
                    .collect::<Result<Vec<_>>>()?;
                table.push(row);
            }
            payload["finite_e"] = json!({ "e": e.to_string(), "generator": format!("t = q^(1/{})", qp.exponent_denominator()), "u": table });
        }
    } else if o.e.is_some() {
        return Err(Error::InvalidParameters("--e needs --q".into()));
    }
    out.payload = payload;
    out.table = Some(rows);
    Ok(out)
}
