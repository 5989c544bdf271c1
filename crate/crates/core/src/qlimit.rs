//! Basic hypergeometric partners of the biorthogonal family and their limits.
//!
//! The functions `U~_n`, `V~_m` with weight `w~` and norm `h~` live at a
//! parameter `e`; as `e -> infinity` they reduce to `3phi2` forms that are
//! still biorthogonal, and as `q -> 1` with `a = beta - N`, `d = -alpha - N`
//! they reduce to `V_n` and `P_m` up to normalisation.
//!
//! Powers `q^c` with rational `c` are taken in a [`QContext`]: [`RadicalQ`]
//! for exact work at a rational `q`, [`RootedQ`] when every value must itself
//! be rational (e.g. to measure distances).
//!
//! [`RadicalQ`]: crate::kernel::RadicalQ

use num::integer::lcm;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{p_value, v_value};
use crate::kernel::basic::{
    basic_hyp_terminating, q_pochhammer_ratio, QContext, QField, QMonomial, RootedQ,
};
use crate::kernel::hypergeometric::hyp_terminating;
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{as_integer, factorial, int, rat, serde_str, Rational};
use crate::kernel::ParameterSet;
use crate::report::IdentityReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QParameterSet {
    #[serde(with = "serde_str")]
    a: Rational,
    #[serde(with = "serde_str")]
    d: Rational,
    #[serde(rename = "N")]
    big_n: u64,
}

/// `c + i` for some `i` in `0..len` is zero, i.e. `(q^c; q)_len` vanishes for every `q`.
fn hits_zero(c: &Rational, len: u64) -> bool {
    matches!(as_integer(c), Some(v) if v <= 0 && (-v as u64) < len)
}

impl QParameterSet {
    /// Rejects `(a, d)` for which one of the q-Pochhammer denominators of the
    /// `e -> infinity` forms vanishes identically in `q`.
    pub fn new(a: Rational, d: Rational, big_n: u64) -> Result<Self> {
        let n = int(big_n as i64);
        let checks = [
            (&a + int(1) - &d, "(q^(a+1-d); q)_n"),
            (d.clone(), "(q^d; q)_N"),
            (-&n - &a + &d, "(q^(-N-a+d); q)_x"),
        ];
        for (c, what) in checks {
            if hits_zero(&c, big_n) {
                return Err(Error::InvalidParameters(format!(
                    "{what} vanishes for a = {a}, d = {d}"
                )));
            }
        }
        Ok(Self { a, d, big_n })
    }

    /// `a = beta - N`, `d = -alpha - N`.
    pub fn from_biorthogonal(p: &ParameterSet) -> Result<Self> {
        let n = int(p.big_n() as i64);
        Self::new(p.beta() - &n, -p.alpha() - &n, p.big_n())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    /// Least common denominator of `a` and `d`; every exponent used is a
    /// multiple of its reciprocal.
    pub fn exponent_denominator(&self) -> u64 {
        let da: u64 = self.a.denom().try_into().expect("small denominator");
        let dd: u64 = self.d.denom().try_into().expect("small denominator");
        lcm(da, dd)
    }

    fn check_index(&self, k: u64) -> Result<()> {
        if k > self.big_n {
            Err(Error::IndexOutOfRange {
                index: k as usize,
                max: self.big_n as usize,
            })
        } else {
            Ok(())
        }
    }
}

fn pw(c: Rational) -> QMonomial {
    QMonomial::power(c)
}

fn elems<C: QContext>(ctx: &C, ms: &[QMonomial]) -> Result<Vec<C::Elem>> {
    ms.iter().map(|m| ctx.monomial(m)).collect()
}

fn poch_ratio<C: QContext>(
    ctx: &C,
    num: &[QMonomial],
    den: &[QMonomial],
    n: u64,
) -> Result<C::Elem> {
    q_pochhammer_ratio(ctx, &elems(ctx, num)?, &elems(ctx, den)?, n)
}

/// `U~_n(x)` at finite `e`:
/// `(q^{a+1}, q^{a+1-d}/e; q)_n / (q^{a+1-d}, q^{a+1}/e; q)_n`
/// times `4phi3(q^{-n}, q^{-x}, q^d, e; q^{-N}, q^{N-x+a+1}, q^{d-n-a} e; q, q)`.
pub fn u_tilde<C: QContext>(
    ctx: &C,
    n: u64,
    x: u64,
    qp: &QParameterSet,
    e: &Rational,
) -> Result<C::Elem> {
    qp.check_index(n)?;
    qp.check_index(x)?;
    if e.is_zero() {
        return Err(Error::InvalidParameters("e must be nonzero".into()));
    }
    let (a, d) = (qp.a(), qp.d());
    let (ni, xi, big) = (int(n as i64), int(x as i64), int(qp.big_n() as i64));
    let inv_e = e.recip();
    let pre = poch_ratio(
        ctx,
        &[
            pw(a + int(1)),
            QMonomial::scaled(inv_e.clone(), a + int(1) - d),
        ],
        &[pw(a + int(1) - d), QMonomial::scaled(inv_e, a + int(1))],
        n,
    )?;
    let series = basic_hyp_terminating(
        ctx,
        &[
            pw(-&ni),
            pw(-&xi),
            pw(d.clone()),
            QMonomial::scaled(e.clone(), Rational::zero()),
        ],
        &[
            pw(-&big),
            pw(&big - &xi + a + int(1)),
            QMonomial::scaled(e.clone(), d - &ni - a),
        ],
        &pw(int(1)),
    )?;
    Ok(pre * series)
}

/// `lim_{e->inf} U~_n(x) = (q^{a+1}; q)_n / (q^{a+1-d}; q)_n
///  3phi2(q^{-n}, q^{-x}, q^d; q^{-N}, q^{N-x+a+1}; q, q^{1+n+a-d})`.
pub fn u_tilde_einf<C: QContext>(ctx: &C, n: u64, x: u64, qp: &QParameterSet) -> Result<C::Elem> {
    qp.check_index(n)?;
    qp.check_index(x)?;
    let (a, d) = (qp.a(), qp.d());
    let (ni, xi, big) = (int(n as i64), int(x as i64), int(qp.big_n() as i64));
    let pre = poch_ratio(ctx, &[pw(a + int(1))], &[pw(a + int(1) - d)], n)?;
    let series = basic_hyp_terminating(
        ctx,
        &[pw(-&ni), pw(-&xi), pw(d.clone())],
        &[pw(-&big), pw(&big - &xi + a + int(1))],
        &pw(int(1) + &ni + a - d),
    )?;
    Ok(pre * series)
}

/// `lim_{e->inf} V~_m(x) = (q^{a+N}; q)_m / (q^{a+1-d}; q)_m
///  3phi2(q^{-m}, q^{-x}, q^{-N+1-d}; q^{-N}, q^{-N-m+1-a}; q, q)`.
pub fn v_tilde_einf<C: QContext>(ctx: &C, m: u64, x: u64, qp: &QParameterSet) -> Result<C::Elem> {
    qp.check_index(m)?;
    qp.check_index(x)?;
    let (a, d) = (qp.a(), qp.d());
    let (mi, xi, big) = (int(m as i64), int(x as i64), int(qp.big_n() as i64));
    let pre = poch_ratio(ctx, &[pw(a + &big)], &[pw(a + int(1) - d)], m)?;
    let series = basic_hyp_terminating(
        ctx,
        &[pw(-&mi), pw(-&xi), pw(-&big + int(1) - d)],
        &[pw(-&big), pw(-&big - &mi + int(1) - a)],
        &pw(int(1)),
    )?;
    Ok(pre * series)
}

/// `lim_{e->inf} w~_x = (q^{a+1-d}, q^{-N}; q)_N / (q^d, q; q)_N
///  (q^{-N-a}, q^{-N}; q)_x / (q^{-N-a+d}, q; q)_x  q^{N(d-a) + x(N+d)}`.
pub fn w_einf<C: QContext>(ctx: &C, x: u64, qp: &QParameterSet) -> Result<C::Elem> {
    qp.check_index(x)?;
    let (a, d) = (qp.a(), qp.d());
    let (xi, big) = (int(x as i64), int(qp.big_n() as i64));
    let c = poch_ratio(
        ctx,
        &[pw(a + int(1) - d), pw(-&big)],
        &[pw(d.clone()), pw(int(1))],
        qp.big_n(),
    )?;
    let v = poch_ratio(
        ctx,
        &[pw(-&big - a), pw(-&big)],
        &[pw(-&big - a + d), pw(int(1))],
        x,
    )?;
    let power = ctx.q_power(&(&big * (d - a) + &xi * (&big + d)))?;
    Ok(c * v * power)
}

/// `lim_{e->inf} h~_n = q^{-n} (q, q^{a+1}; q)_n / (q^{-N}, q^{a+1-d}; q)_n`.
pub fn h_einf<C: QContext>(ctx: &C, n: u64, qp: &QParameterSet) -> Result<C::Elem> {
    qp.check_index(n)?;
    let (a, d) = (qp.a(), qp.d());
    let big = int(qp.big_n() as i64);
    let r = poch_ratio(
        ctx,
        &[pw(int(1)), pw(a + int(1))],
        &[pw(-big), pw(a + int(1) - d)],
        n,
    )?;
    Ok(r * ctx.q_power(&-int(n as i64))?)
}

/// Exact q-Gram matrix; entries are rendered in the context's field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QGramReport {
    pub params: QParameterSet,
    pub q: String,
    pub gram: Vec<Vec<String>>,
    pub expected_diag: Vec<String>,
    /// `(n, m)` positions where the entry differs from `h~_n delta_{nm}`.
    pub violations: Vec<(usize, usize)>,
}

impl QGramReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `sum_x w~_x U~_n(x) V~_m(x)` against `h~_n delta_{nm}` in the `e -> infinity` limit.
pub fn q_gram_einf<C: QContext>(ctx: &C, qp: &QParameterSet, q_label: &str) -> Result<QGramReport>
where
    C::Elem: std::fmt::Display,
{
    let size = qp.big_n() as usize + 1;
    let w = (0..=qp.big_n())
        .map(|x| w_einf(ctx, x, qp))
        .collect::<Result<Vec<_>>>()?;
    let grid = |f: &dyn Fn(u64, u64) -> Result<C::Elem>| -> Result<Vec<Vec<C::Elem>>> {
        (0..=qp.big_n())
            .map(|n| (0..=qp.big_n()).map(|x| f(n, x)).collect())
            .collect()
    };
    let us = grid(&|n, x| u_tilde_einf(ctx, n, x, qp))?;
    let vs = grid(&|m, x| v_tilde_einf(ctx, m, x, qp))?;
    let mut gram = Vec::with_capacity(size);
    let mut expected = Vec::with_capacity(size);
    let mut violations = Vec::new();
    for (n, un) in us.iter().enumerate() {
        let h = h_einf(ctx, n as u64, qp)?;
        let mut row = Vec::with_capacity(size);
        for (m, vm) in vs.iter().enumerate() {
            let mut acc = ctx.zero();
            for x in 0..size {
                acc = acc + w[x].clone() * un[x].clone() * vm[x].clone();
            }
            let target = if n == m { h.clone() } else { ctx.zero() };
            if !(acc.clone() - target).is_zero_elem() {
                violations.push((n, m));
            }
            row.push(acc.to_string());
        }
        gram.push(row);
        expected.push(h.to_string());
    }
    Ok(QGramReport {
        params: qp.clone(),
        q: q_label.to_string(),
        gram,
        expected_diag: expected,
        violations,
    })
}

/// `(a+1)_n / (a+1-d)_n 3F2(-n, -x, d; -N, N-x+a+1; 1)`.
pub fn u_target(n: u64, x: u64, qp: &QParameterSet) -> Result<Rational> {
    let (a, d) = (qp.a(), qp.d());
    let (ni, xi, big) = (int(n as i64), int(x as i64), int(qp.big_n() as i64));
    let pre = pochhammer(&(a + int(1)), n) / pochhammer(&(a + int(1) - d), n);
    let f = hyp_terminating(
        &[-&ni, -&xi, d.clone()],
        &[-&big, &big - &xi + a + int(1)],
        &int(1),
    )?;
    Ok(pre * f)
}

/// `(a+N)_m / (a+1-d)_m 3F2(-m, -x, -N+1-d; -N, -N-m+1-a; 1)`.
pub fn v_target(m: u64, x: u64, qp: &QParameterSet) -> Result<Rational> {
    let (a, d) = (qp.a(), qp.d());
    let (mi, xi, big) = (int(m as i64), int(x as i64), int(qp.big_n() as i64));
    let pre = pochhammer(&(a + &big), m) / pochhammer(&(a + int(1) - d), m);
    let f = hyp_terminating(
        &[-&mi, -&xi, -&big + int(1) - d],
        &[-&big, -&big - &mi + int(1) - a],
        &int(1),
    )?;
    Ok(pre * f)
}

/// `(a+1-d)_N (-N)_N / (N! (d)_N) (-N-a)_x (-N)_x / (x! (-N-a+d)_x)`.
pub fn w_target(x: u64, qp: &QParameterSet) -> Rational {
    let (a, d) = (qp.a(), qp.d());
    let big_n = qp.big_n();
    let big = int(big_n as i64);
    let c = pochhammer(&(a + int(1) - d), big_n) * pochhammer(&-&big, big_n)
        / (factorial(big_n) * pochhammer(d, big_n));
    c * pochhammer(&(-&big - a), x) * pochhammer(&-&big, x)
        / (factorial(x) * pochhammer(&(-&big - a + d), x))
}

/// `n! (a+1)_n / ((-N)_n (a+1-d)_n)`.
pub fn h_target(n: u64, qp: &QParameterSet) -> Rational {
    let (a, d) = (qp.a(), qp.d());
    factorial(n) * pochhammer(&(a + int(1)), n)
        / (pochhammer(&int(-(qp.big_n() as i64)), n) * pochhammer(&(a + int(1) - d), n))
}

/// The `q -> 1` targets against the biorthogonal family:
/// `u_target(n) = (beta-N+1)_n/(alpha+beta+1)_n V_n`,
/// `v_target(m) = (beta)_m/(alpha+beta+1)_m P_m`, `w_target = w_x`, and
/// `h_target(n)` equal to `h_n` times both normalisations.
pub fn check_limit_targets(p: &ParameterSet) -> Result<IdentityReport> {
    let qp = QParameterSet::from_biorthogonal(p)?;
    let mut r = IdentityReport::new("q-limit-targets", p.into());
    let big = int(p.big_n() as i64);
    let s = p.alpha() + p.beta() + int(1);
    for n in 0..=p.big_n() {
        let u_norm = pochhammer(&(p.beta() - &big + int(1)), n) / pochhammer(&s, n);
        let v_norm = pochhammer(p.beta(), n) / pochhammer(&s, n);
        for x in 0..=p.big_n() {
            let xr = int(x as i64);
            r.compare(
                || format!("U n={n} x={x}"),
                u_target(n, x, &qp)?,
                &u_norm * v_value(n, &xr, p)?,
            );
            r.compare(
                || format!("V n={n} x={x}"),
                v_target(n, x, &qp)?,
                &v_norm * p_value(n, &xr, p)?,
            );
        }
        let h = crate::biorth::normalization_h(n, p)?;
        r.compare(
            || format!("h n={n}"),
            h_target(n, &qp),
            h * &u_norm * &v_norm,
        );
    }
    for x in 0..=p.big_n() {
        r.compare(
            || format!("w x={x}"),
            w_target(x, &qp),
            crate::biorth::weight(x, p)?,
        );
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub k: u32,
    #[serde(with = "serde_str")]
    pub q: Rational,
    #[serde(with = "serde_str")]
    pub delta_u: Rational,
    #[serde(with = "serde_str")]
    pub delta_v: Rational,
    #[serde(with = "serde_str")]
    pub delta_w: Rational,
    #[serde(with = "serde_str")]
    pub delta_h: Rational,
}

impl DeltaRow {
    pub fn columns(&self) -> [&Rational; 4] {
        [&self.delta_u, &self.delta_v, &self.delta_w, &self.delta_h]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QLimitReport {
    pub params: ParameterSet,
    /// Denominator `L` of the exponents; `q = s^L` with `s = 1 - 2^-k / L`.
    pub exponent_denominator: u64,
    pub rows: Vec<DeltaRow>,
    /// Per column (U, V, w, h): strictly decreasing, or identically zero.
    pub decreasing: [bool; 4],
    /// Per column: first delta at least 16 times the last, or identically zero.
    pub contracted: [bool; 4],
    pub targets: IdentityReport,
}

impl QLimitReport {
    pub fn passed(&self) -> bool {
        self.decreasing.iter().all(|b| *b)
            && self.contracted.iter().all(|b| *b)
            && self.targets.passed()
    }
}

fn max_abs(values: impl Iterator<Item = Rational>) -> Rational {
    values
        .map(|v| v.abs())
        .fold(Rational::zero(), |m, v| if v > m { v } else { m })
}

/// Distances of the four `e -> infinity` objects from their `q -> 1` targets
/// at one rational-valued context.
pub fn limit_deltas(ctx: &RootedQ, qp: &QParameterSet) -> Result<[Rational; 4]> {
    let big_n = qp.big_n();
    let mut du = Vec::new();
    let mut dv = Vec::new();
    for n in 0..=big_n {
        for x in 0..=big_n {
            du.push(u_tilde_einf(ctx, n, x, qp)? - u_target(n, x, qp)?);
            dv.push(v_tilde_einf(ctx, n, x, qp)? - v_target(n, x, qp)?);
        }
    }
    let dw = (0..=big_n)
        .map(|x| Ok(w_einf(ctx, x, qp)? - w_target(x, qp)))
        .collect::<Result<Vec<_>>>()?;
    let dh = (0..=big_n)
        .map(|n| Ok(h_einf(ctx, n, qp)? - h_target(n, qp)))
        .collect::<Result<Vec<_>>>()?;
    Ok([
        max_abs(du.into_iter()),
        max_abs(dv.into_iter()),
        max_abs(dw.into_iter()),
        max_abs(dh.into_iter()),
    ])
}

/// The context `q = s^L` with `s = 1 - 2^-k / L`, so `q = 1 - 2^-k + O(4^-k)`
/// and every exponent `c` in `(1/L) Z` gives a rational `q^c = s^{cL}`.
pub fn approach_context(k: u32, exponent_denominator: u64) -> Result<RootedQ> {
    let l = exponent_denominator as i64;
    let two_k = 1i64
        .checked_shl(k)
        .filter(|v| *v > 0)
        .ok_or_else(|| Error::InvalidParameters(format!("k = {k} too large")))?;
    RootedQ::new(int(1) - rat(1, two_k * l), exponent_denominator)
}

fn strictly_decreasing_or_zero(col: &[&Rational]) -> bool {
    col.iter().all(|v| v.is_zero()) || col.windows(2).all(|w| w[1] < w[0])
}

/// Delta table along `ks`, with monotonicity and contraction verdicts.
pub fn q_to_1_limit_check(p: &ParameterSet, ks: &[u32]) -> Result<QLimitReport> {
    let qp = QParameterSet::from_biorthogonal(p)?;
    let l = qp.exponent_denominator();
    let mut rows = Vec::with_capacity(ks.len());
    for &k in ks {
        let ctx = approach_context(k, l)?;
        let [du, dv, dw, dh] = limit_deltas(&ctx, &qp)?;
        rows.push(DeltaRow {
            k,
            q: ctx.q_value(),
            delta_u: du,
            delta_v: dv,
            delta_w: dw,
            delta_h: dh,
        });
    }
    let mut decreasing = [true; 4];
    let mut contracted = [true; 4];
    for j in 0..4 {
        let col: Vec<&Rational> = rows.iter().map(|r| r.columns()[j]).collect();
        decreasing[j] = strictly_decreasing_or_zero(&col);
        if let (Some(first), Some(last)) = (col.first(), col.last()) {
            contracted[j] = col.iter().all(|v| v.is_zero()) || **first >= int(16) * *last;
        }
    }
    Ok(QLimitReport {
        params: p.clone(),
        exponent_denominator: l,
        rows,
        decreasing,
        contracted,
        targets: check_limit_targets(p)?,
    })
}

/// `max_{n,x} |U~_n(x; e) - lim_{e->inf} U~_n(x)|` for each `e`. A value of
/// `e` that hits a pole gives an error in its slot rather than aborting.
pub fn finite_e_deltas(
    ctx: &RootedQ,
    qp: &QParameterSet,
    es: &[Rational],
) -> Result<Vec<Result<Rational>>> {
    let big_n = qp.big_n();
    let mut limit = Vec::new();
    for n in 0..=big_n {
        for x in 0..=big_n {
            limit.push(((n, x), u_tilde_einf(ctx, n, x, qp)?));
        }
    }
    Ok(es
        .iter()
        .map(|e| {
            let mut diffs = Vec::with_capacity(limit.len());
            for ((n, x), lim) in &limit {
                diffs.push(u_tilde(ctx, *n, *x, qp, e)? - lim);
            }
            Ok(max_abs(diffs.into_iter()))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::basic::RadicalQ;
    use crate::kernel::radical::Radical;

    fn p2() -> ParameterSet {
        ParameterSet::new(int(1), rat(1, 2), 2).unwrap()
    }

    #[test]
    fn parameter_map_and_validation() {
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        assert_eq!((qp.a().clone(), qp.d().clone()), (rat(-3, 2), int(-3)));
        assert_eq!(qp.exponent_denominator(), 2);
        assert!(QParameterSet::new(rat(1, 2), int(1), 2).is_ok());
        assert!(QParameterSet::new(int(0), int(1), 2).is_err());
        assert!(QParameterSet::new(int(0), int(-1), 3).is_err());
    }

    #[test]
    fn finite_e_example_matches_independent_evaluation() {
        // evaluated separately with q^(1/2) kept symbolic: -4/31 - (63/31) q^(1/2)
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        let ctx = RadicalQ::new(rat(1, 2), 2).unwrap();
        let v: Radical = u_tilde(&ctx, 1, 1, &qp, &int(4)).unwrap();
        assert_eq!(v.coeffs(), &[rat(-4, 31), rat(-63, 31)]);
    }

    #[test]
    fn trivial_rows() {
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        let ctx = RadicalQ::new(rat(1, 2), 2).unwrap();
        let one = ctx.one();
        for x in 0..=2 {
            assert_eq!(u_tilde_einf(&ctx, 0, x, &qp).unwrap(), one);
            assert_eq!(v_tilde_einf(&ctx, 0, x, &qp).unwrap(), one);
            assert_eq!(u_tilde(&ctx, 0, x, &qp, &int(4)).unwrap(), one);
        }
        assert_eq!(h_einf(&ctx, 0, &qp).unwrap(), one);
        // x = 0 leaves only the prefactor
        let pre = poch_ratio(
            &ctx,
            &[pw(rat(-1, 2)), QMonomial::scaled(rat(1, 4), rat(5, 2))],
            &[pw(rat(5, 2)), QMonomial::scaled(rat(1, 4), rat(-1, 2))],
            2,
        )
        .unwrap();
        assert_eq!(u_tilde(&ctx, 2, 0, &qp, &int(4)).unwrap(), pre);
    }

    #[test]
    fn e_infinity_biorthogonality() {
        for (a, b, n) in [(int(1), rat(1, 2), 2), (rat(1, 3), rat(2, 5), 3)] {
            let p = ParameterSet::new(a, b, n).unwrap();
            let qp = QParameterSet::from_biorthogonal(&p).unwrap();
            for q in [rat(1, 2), rat(3, 4)] {
                let ctx = RadicalQ::new(q.clone(), qp.exponent_denominator()).unwrap();
                let r = q_gram_einf(&ctx, &qp, &q.to_string()).unwrap();
                assert!(r.passed(), "{:?}", r.violations);
            }
        }
    }

    #[test]
    fn rooted_context_agrees_with_radical() {
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        let rooted = RootedQ::new(rat(1, 2), 2).unwrap();
        let radical = RadicalQ::new(rat(1, 4), 2).unwrap();
        for n in 0..=2 {
            for x in 0..=2 {
                let a = u_tilde_einf(&rooted, n, x, &qp).unwrap();
                let b = u_tilde_einf(&radical, n, x, &qp).unwrap();
                // the generator q^(1/2) stands for 1/2 here
                let at_half: Rational = b
                    .coeffs()
                    .iter()
                    .rev()
                    .fold(Rational::zero(), |acc, c| acc * rat(1, 2) + c);
                assert_eq!(at_half, a);
            }
        }
    }

    #[test]
    fn limit_targets_match_family() {
        let r = check_limit_targets(&p2()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        // v target is (beta)_m/(alpha+beta+1)_m P_m: P_1 = (1, 3, 5), prefactor 1/5
        let row: Vec<_> = (0..=2).map(|x| v_target(1, x, &qp).unwrap()).collect();
        assert_eq!(row, vec![rat(1, 5), rat(3, 5), int(1)]);
    }

    #[test]
    fn q_to_one_deltas_shrink() {
        let ks: Vec<u32> = (3..=10).collect();
        let r = q_to_1_limit_check(&p2(), &ks).unwrap();
        assert!(r.passed(), "{:?} {:?}", r.decreasing, r.contracted);
        assert_eq!(r.rows.len(), 8);
    }

    #[test]
    fn finite_e_converges() {
        let qp = QParameterSet::from_biorthogonal(&p2()).unwrap();
        let ctx = RootedQ::new(rat(1, 2), 2).unwrap();
        let es: Vec<Rational> = (1..=8).map(|m| int(3i64.pow(m))).collect();
        let d: Vec<Rational> = finite_e_deltas(&ctx, &qp, &es)
            .unwrap()
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
    }
}
