//! Parameter sweeps over `(θ, η)` and their tabular output.
//!
//! Records are computed in parallel and emitted in row-major order
//! (`θ` outer, `η` inner). Every number is written with 12 significant
//! digits, so identical configurations give byte-identical files.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::{
    closed_form_invariants, correlation_radius, spectral_invariants, FamilyParams,
};
use crate::phase_space::NCParams;
use crate::separability::{ClassificationResult, Verdict};
use crate::tolerance::relative_gap;

/// Significant digits used for every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

pub const CSV_HEADER: &str = "theta,eta,m,n,r,nu_minus,nu_minus_prime,verdict";

/// Inclusive, evenly spaced axis `min..=max` with `steps` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl AxisRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) || min > max || steps == 0 {
            return Err(Error::InvalidRange(format!("{min}:{max}:{steps}")));
        }
        Ok(Self { min, max, steps })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| {
                if k + 1 == self.steps {
                    self.max
                } else {
                    self.min + (self.max - self.min) * k as f64 / last
                }
            })
            .collect()
    }
}

impl FromStr for AxisRange {
    type Err = String;

    /// Parses `MIN:MAX:STEPS`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected MIN:MAX:STEPS, got {s:?}"));
        }
        let min: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|e| format!("bad MIN {:?}: {e}", parts[0]))?;
        let max: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|e| format!("bad MAX {:?}: {e}", parts[1]))?;
        let steps: usize = parts[2]
            .trim()
            .parse()
            .map_err(|e| format!("bad STEPS {:?}: {e}", parts[2]))?;
        AxisRange::new(min, max, steps).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Where output goes; `-` means standard output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputTarget {
    Stdout,
    File(std::path::PathBuf),
}

impl From<&str> for OutputTarget {
    fn from(s: &str) -> Self {
        if s == "-" {
            OutputTarget::Stdout
        } else {
            OutputTarget::File(s.into())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub theta_range: AxisRange,
    pub eta_range: AxisRange,
    pub m: f64,
    pub n: f64,
    pub output_format: OutputFormat,
    pub output_path: OutputTarget,
}

/// One grid point. Invariants are absent for invalid-domain points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub theta: f64,
    pub eta: f64,
    pub m: f64,
    pub n: f64,
    pub r: f64,
    pub nu_minus: Option<f64>,
    pub nu_minus_prime: Option<f64>,
    pub verdict: Verdict,
}

impl ScanRecord {
    pub fn classification(&self) -> ClassificationResult {
        ClassificationResult {
            verdict: self.verdict,
            nu_minus: self.nu_minus,
            nu_minus_prime: self.nu_minus_prime,
        }
    }

    /// Copy with every number rounded to the emitted precision.
    pub fn rounded(&self) -> ScanRecord {
        ScanRecord {
            theta: round_sig(self.theta),
            eta: round_sig(self.eta),
            m: round_sig(self.m),
            n: round_sig(self.n),
            r: round_sig(self.r),
            nu_minus: self.nu_minus.map(round_sig),
            nu_minus_prime: self.nu_minus_prime.map(round_sig),
            verdict: self.verdict,
        }
    }
}

/// Which computation produced a record's invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Spectral,
    None,
}

/// A record plus the route detail used by verbose reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct PointEvaluation {
    pub record: ScanRecord,
    pub route: Route,
    /// `(ν₋, ν₋′)` from the eigensolver route, when requested.
    pub spectral: Option<(f64, f64)>,
}

impl PointEvaluation {
    /// Largest relative gap between the two routes, when both ran.
    pub fn route_gap(&self) -> Option<f64> {
        let (a, b) = self.spectral?;
        if self.route != Route::ClosedForm {
            return Some(0.0);
        }
        let (x, y) = (self.record.nu_minus?, self.record.nu_minus_prime?);
        Some(relative_gap(a, x).max(relative_gap(b, y)))
    }
}

fn check_deformation_inputs(theta: f64, eta: f64) -> Result<()> {
    if !(theta.is_finite() && eta.is_finite() && theta >= 0.0 && eta >= 0.0) {
        return Err(Error::InvalidDeformation { theta, eta });
    }
    Ok(())
}

/// Evaluates one point; `θη ≥ 1` yields an `invalid` record, `R ≥ 1` an error.
///
/// Invariants come from the closed form, falling back to the eigensolver
/// when the closed form does not apply. `cross_check` also runs the
/// eigensolver route.
pub fn evaluate_point(
    theta: f64,
    eta: f64,
    m: f64,
    n: f64,
    cross_check: bool,
) -> Result<PointEvaluation> {
    check_deformation_inputs(theta, eta)?;
    let r = correlation_radius(m, n);
    if !(r.is_finite() && r < 1.0) {
        return Err(Error::InvalidFamily(r));
    }
    let base = ScanRecord {
        theta,
        eta,
        m,
        n,
        r,
        nu_minus: None,
        nu_minus_prime: None,
        verdict: Verdict::InvalidDomain,
    };
    if !NCParams::in_domain(theta, eta) {
        return Ok(PointEvaluation {
            record: base,
            route: Route::None,
            spectral: None,
        });
    }
    let params = FamilyParams::new(m, n, NCParams::new(theta, eta)?)?;
    let spectral_pair = || -> Result<(f64, f64)> {
        let (plain, primed) = spectral_invariants(&params)?;
        Ok((plain.smallest(), primed.smallest()))
    };
    let (route, nu, nu_prime, spectral) = match closed_form_invariants(&params) {
        Ok(c) => {
            let spectral = if cross_check {
                Some(spectral_pair()?)
            } else {
                None
            };
            (Route::ClosedForm, c.nu_minus, c.nu_minus_prime, spectral)
        }
        Err(Error::FormulaDomain(_)) => {
            let (a, b) = spectral_pair()?;
            (
                Route::Spectral,
                a,
                b,
                if cross_check { Some((a, b)) } else { None },
            )
        }
        Err(e) => return Err(e),
    };
    let class = ClassificationResult::from_invariants(nu, nu_prime);
    Ok(PointEvaluation {
        record: ScanRecord {
            nu_minus: class.nu_minus,
            nu_minus_prime: class.nu_minus_prime,
            verdict: class.verdict,
            ..base
        },
        route,
        spectral,
    })
}

pub fn eval_point(theta: f64, eta: f64, m: f64, n: f64) -> Result<ScanRecord> {
    Ok(evaluate_point(theta, eta, m, n, false)?.record)
}

fn grid(theta_range: &AxisRange, eta_range: &AxisRange) -> Vec<(f64, f64)> {
    let etas = eta_range.values();
    theta_range
        .values()
        .into_iter()
        .flat_map(|t| etas.iter().map(move |&e| (t, e)))
        .collect()
}

fn check_family(m: f64, n: f64) -> Result<()> {
    let r = correlation_radius(m, n);
    if !(r.is_finite() && r < 1.0) {
        return Err(Error::InvalidFamily(r));
    }
    Ok(())
}

fn check_axes(theta_range: &AxisRange, eta_range: &AxisRange) -> Result<()> {
    check_deformation_inputs(theta_range.min, eta_range.min)
}

/// One record per grid point, `θ` outer and `η` inner.
pub fn scan_grid(config: &ScanConfig) -> Result<Vec<ScanRecord>> {
    scan_points(&config.theta_range, &config.eta_range, config.m, config.n)
}

fn scan_points(
    theta_range: &AxisRange,
    eta_range: &AxisRange,
    m: f64,
    n: f64,
) -> Result<Vec<ScanRecord>> {
    check_family(m, n)?;
    check_axes(theta_range, eta_range)?;
    grid(theta_range, eta_range)
        .into_par_iter()
        .map(|(t, e)| eval_point(t, e, m, n))
        .collect()
}

/// `(m, n)` for a nominal `R`: `n = R/3, m = √2 R/3`, or swapped.
pub fn fig2_correlations(r: f64, swap: bool) -> Result<(f64, f64)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidFamily(r));
    }
    let (short, long) = (r / 3.0, 2f64.sqrt() * r / 3.0);
    Ok(if swap { (short, long) } else { (long, short) })
}

/// Region-map dataset for nominal `R`.
pub fn emit_fig2_data(
    r: f64,
    swap: bool,
    theta_range: &AxisRange,
    eta_range: &AxisRange,
) -> Result<Vec<ScanRecord>> {
    let (m, n) = fig2_correlations(r, swap)?;
    scan_points(theta_range, eta_range, m, n)
}

pub const FIG1_DEFAULT_THETAS: [f64; 3] = [0.0, 0.25, 0.5];

/// Full spectra of `(Σ, Ω)` and `(Σ, Ω′)` at one `(θ, η)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub theta: f64,
    pub eta: f64,
    pub m: f64,
    pub n: f64,
    pub r: f64,
    /// Absent when `θη ≥ 1`.
    pub nu: Option<[f64; 4]>,
    pub nup: Option<[f64; 4]>,
}

impl SpectrumRow {
    pub fn rounded(&self) -> SpectrumRow {
        SpectrumRow {
            theta: round_sig(self.theta),
            eta: round_sig(self.eta),
            m: round_sig(self.m),
            n: round_sig(self.n),
            r: round_sig(self.r),
            nu: self.nu.map(|v| v.map(round_sig)),
            nup: self.nup.map(|v| v.map(round_sig)),
        }
    }
}

fn four(values: &[f64]) -> [f64; 4] {
    let mut out = [0.0; 4];
    out.copy_from_slice(&values[..4]);
    out
}

/// Spectra along `η` for each listed `θ`.
pub fn emit_fig1_data(
    theta_values: &[f64],
    eta_range: &AxisRange,
    m: f64,
    n: f64,
) -> Result<Vec<SpectrumRow>> {
    check_family(m, n)?;
    for &t in theta_values {
        check_deformation_inputs(t, eta_range.min)?;
    }
    let r = correlation_radius(m, n);
    let etas = eta_range.values();
    let points: Vec<(f64, f64)> = theta_values
        .iter()
        .flat_map(|&t| etas.iter().map(move |&e| (t, e)))
        .collect();
    points
        .into_par_iter()
        .map(|(theta, eta)| {
            let mut row = SpectrumRow {
                theta,
                eta,
                m,
                n,
                r,
                nu: None,
                nup: None,
            };
            if NCParams::in_domain(theta, eta) {
                let params = FamilyParams::new(m, n, NCParams::new(theta, eta)?)?;
                let (plain, primed) = spectral_invariants(&params)?;
                row.nu = Some(four(plain.invariants()));
                row.nup = Some(four(primed.invariants()));
            }
            Ok(row)
        })
        .collect()
}

/// Locates `η` in `[lo, hi]` where the closed-form `ν₋′` at fixed `θ`
/// crosses 1, by bisection to width `tol`. `None` without a sign change.
pub fn separability_crossing(
    theta: f64,
    m: f64,
    n: f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Option<f64>> {
    let gap = |eta: f64| -> Result<f64> {
        let params = FamilyParams::new(m, n, NCParams::new(theta, eta)?)?;
        Ok(closed_form_invariants(&params)?.nu_minus_prime - 1.0)
    };
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (gap(a)?, gap(b)?);
    if fa.signum() == fb.signum() {
        return Ok(None);
    }
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if gap(mid)?.signum() == fa.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(Some(0.5 * (a + b)))
}

/// `%.12g`-style rendering.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= SIGNIFICANT_DIGITS as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to the emitted precision.
pub fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

pub fn write_records<W: Write>(
    records: &[ScanRecord],
    format: OutputFormat,
    mut out: W,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    format_sig(r.theta),
                    format_sig(r.eta),
                    format_sig(r.m),
                    format_sig(r.n),
                    format_sig(r.r),
                    opt(r.nu_minus),
                    opt(r.nu_minus_prime),
                    r.verdict
                )?;
            }
        }
        OutputFormat::Json => {
            let rounded: Vec<ScanRecord> = records.iter().map(ScanRecord::rounded).collect();
            serde_json::to_writer_pretty(&mut out, &rounded)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn fig1_csv_header() -> String {
    let mut cols: Vec<String> = ["theta", "eta", "m", "n", "r"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    cols.extend((1..=4).map(|k| format!("nu_{k}")));
    cols.extend((1..=4).map(|k| format!("nup_{k}")));
    cols.join(",")
}

pub fn write_spectrum_rows<W: Write>(
    rows: &[SpectrumRow],
    format: OutputFormat,
    mut out: W,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{}", fig1_csv_header())?;
            for row in rows {
                let mut fields: Vec<String> = [row.theta, row.eta, row.m, row.n, row.r]
                    .iter()
                    .map(|&x| format_sig(x))
                    .collect();
                for spectrum in [row.nu, row.nup] {
                    match spectrum {
                        Some(v) => fields.extend(v.iter().map(|&x| format_sig(x))),
                        None => fields.extend(std::iter::repeat_n(String::new(), 4)),
                    }
                }
                writeln!(out, "{}", fields.join(","))?;
            }
        }
        OutputFormat::Json => {
            let flat: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| spectrum_row_json(&r.rounded()))
                .collect();
            serde_json::to_writer_pretty(&mut out, &flat)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn spectrum_row_json(row: &SpectrumRow) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    for (key, value) in [
        ("theta", row.theta),
        ("eta", row.eta),
        ("m", row.m),
        ("n", row.n),
        ("r", row.r),
    ] {
        obj.insert(key.into(), value.into());
    }
    for (prefix, spectrum) in [("nu", row.nu), ("nup", row.nup)] {
        for k in 0..4 {
            let value = spectrum.map_or(serde_json::Value::Null, |v| v[k].into());
            obj.insert(format!("{prefix}_{}", k + 1), value);
        }
    }
    serde_json::Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_parsing_and_values() {
        let a: AxisRange = "0:2:5".parse().unwrap();
        assert_eq!(a.values(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
        let single: AxisRange = "0.3:0.3:1".parse().unwrap();
        assert_eq!(single.values(), vec![0.3]);
        assert!("0:2".parse::<AxisRange>().is_err());
        assert!("2:0:5".parse::<AxisRange>().is_err());
        assert!("0:2:0".parse::<AxisRange>().is_err());
        assert!("a:2:3".parse::<AxisRange>().is_err());
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(1.5), "1.5");
        assert_eq!(format_sig(2.598076211353316), "2.59807621135");
        assert_eq!(format_sig(-0.1), "-0.1");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(1.234e-7), "1.234e-7");
        assert_eq!(format_sig(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_sig(100.0), "100");
        assert_eq!(round_sig(2.598076211353316), 2.59807621135);
    }

    #[test]
    fn invalid_point_has_no_invariants() {
        let r = eval_point(0.5, 2.0, 0.1, 0.1).unwrap();
        assert_eq!(r.verdict, Verdict::InvalidDomain);
        assert!(r.nu_minus.is_none() && r.nu_minus_prime.is_none());
    }

    #[test]
    fn eval_point_errors() {
        assert_eq!(
            eval_point(0.0, 0.0, 1.0, 0.0),
            Err(Error::InvalidFamily(1.0))
        );
        assert!(matches!(
            eval_point(-0.1, 0.0, 0.1, 0.1),
            Err(Error::InvalidDeformation { .. })
        ));
    }

    #[test]
    fn negative_correlations_use_spectral_route() {
        let e = evaluate_point(0.2, 0.3, -0.2, 0.1, true).unwrap();
        assert_eq!(e.route, Route::Spectral);
        assert_eq!(e.route_gap(), Some(0.0));
        assert!(e.record.classification().is_consistent());
    }

    #[test]
    fn cross_check_agrees() {
        let e = evaluate_point(0.25, 0.5, 2f64.sqrt() / 6.0, 1.0 / 6.0, true).unwrap();
        assert_eq!(e.route, Route::ClosedForm);
        assert!(e.route_gap().unwrap() < 1e-10);
    }

    #[test]
    fn small_grid_count_and_order() {
        let config = ScanConfig {
            theta_range: AxisRange::new(0.0, 0.1, 2).unwrap(),
            eta_range: AxisRange::new(0.0, 0.1, 2).unwrap(),
            m: 0.1,
            n: 0.1,
            output_format: OutputFormat::Csv,
            output_path: OutputTarget::Stdout,
        };
        let records = scan_grid(&config).unwrap();
        let order: Vec<(f64, f64)> = records.iter().map(|r| (r.theta, r.eta)).collect();
        assert_eq!(order, vec![(0.0, 0.0), (0.0, 0.1), (0.1, 0.0), (0.1, 0.1)]);
        assert!(records.iter().all(|r| r.nu_minus.unwrap().is_finite()));
    }

    #[test]
    fn grid_through_sqrt_two_marks_invalid() {
        let s = 2f64.sqrt();
        let axis = AxisRange::new(0.0, s, 2).unwrap();
        let records = scan_points(&axis, &axis, 0.1, 0.1).unwrap();
        let corner = records.last().unwrap();
        assert_eq!((corner.theta, corner.eta), (s, s));
        assert_eq!(corner.verdict, Verdict::InvalidDomain);
    }

    #[test]
    fn fig2_parameterisation() {
        let (m, n) = fig2_correlations(0.1, false).unwrap();
        assert!((m - 2f64.sqrt() / 30.0).abs() < 1e-16);
        assert!((n - 1.0 / 30.0).abs() < 1e-16);
        let (m, n) = fig2_correlations(0.5, true).unwrap();
        assert!((n - 2f64.sqrt() / 6.0).abs() < 1e-16);
        assert!((m - 1.0 / 6.0).abs() < 1e-16);
        assert!(fig2_correlations(1.0, false).is_err());
        assert!(fig2_correlations(0.0, false).is_err());
    }

    #[test]
    fn csv_layout() {
        let records = vec![
            eval_point(0.0, 0.0, 0.3, 0.4).unwrap(),
            eval_point(0.5, 2.0, 0.3, 0.4).unwrap(),
        ];
        let mut buf = Vec::new();
        write_records(&records, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "0,0,0.3,0.4,0.5,2.59807621135,1.5,separable");
        assert_eq!(lines[2], "0.5,2,0.3,0.4,0.5,,,invalid");
    }

    #[test]
    fn json_layout() {
        let records = vec![eval_point(0.5, 2.0, 0.3, 0.4).unwrap()];
        let mut buf = Vec::new();
        write_records(&records, OutputFormat::Json, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["verdict"], "invalid");
        assert!(v[0]["nu_minus"].is_null());
        assert_eq!(v[0]["r"], 0.5);
    }

    #[test]
    fn fig1_rows_sorted_and_invalid_blank() {
        let axis = AxisRange::new(0.0, 2.0, 5).unwrap();
        let rows = emit_fig1_data(&FIG1_DEFAULT_THETAS, &axis, 0.3, 0.4).unwrap();
        assert_eq!(rows.len(), 15);
        for row in &rows {
            match (row.nu, row.nup) {
                (Some(nu), Some(nup)) => {
                    assert!(nu.windows(2).all(|w| w[0] <= w[1]));
                    assert!(nup.windows(2).all(|w| w[0] <= w[1]));
                }
                _ => assert!(row.theta * row.eta >= 1.0),
            }
        }
        let mut buf = Vec::new();
        write_spectrum_rows(&rows, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("theta,eta,m,n,r,nu_1,nu_2,nu_3,nu_4,nup_1,nup_2,nup_3,nup_4\n"));
        assert!(text.lines().last().unwrap().ends_with(",,,,,,,"));
    }
}
