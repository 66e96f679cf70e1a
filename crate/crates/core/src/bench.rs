//! Instrumented comparison of the two certificates: the Terracini
//! pipeline versus the Kruskal-rank baseline, with counted
//! multiplications, wall time, and log-log slope fits over r.

use std::time::Instant;

use crate::error::Result;
use crate::gen::{gen_instance, Position};
use crate::kruskal::baseline_check;
use crate::pipeline::identify;

/// One measured run of one method on one generated instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub r: usize,
    pub trial: usize,
    pub method: Method,
    pub mults: u64,
    pub wall_ms: f64,
    pub verdict: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Terracini,
    Kruskal,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Terracini => "terracini",
            Method::Kruskal => "kruskal",
        }
    }
}

/// Per-(n, method) mean counts by r and the fitted log-log slope.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    pub n: usize,
    pub method: Method,
    /// (r, mean multiplications over trials)
    pub means: Vec<(usize, f64)>,
    /// Least-squares slope of ln(mean mults) against ln(r); None with
    /// fewer than two distinct r values.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchOutput {
    pub records: Vec<BenchRecord>,
    pub fits: Vec<SlopeFit>,
}

/// SplitMix64 step; decorrelates per-trial seeds from the master seed.
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn trial_seed(seed: u64, n: usize, r: usize, trial: usize) -> u64 {
    let mut s = mix(seed);
    s = mix(s ^ (n as u64));
    s = mix(s ^ (r as u64));
    mix(s ^ (trial as u64))
}

/// Runs both methods on freshly generated general instances for every
/// (n, r, trial) combination. Record order is deterministic; wall times
/// are the only nondeterministic columns.
pub fn bench(n_values: &[usize], r_values: &[usize], trials: usize, seed: u64) -> Result<BenchOutput> {
    let mut records = Vec::new();
    for &n in n_values {
        for &r in r_values {
            for trial in 0..trials {
                let inst = gen_instance(
                    n,
                    r,
                    Position::General,
                    trial_seed(seed, n, r, trial),
                    false,
                )?;

                let start = Instant::now();
                let verdict = identify(&inst)?;
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                records.push(BenchRecord {
                    n,
                    r,
                    trial,
                    method: Method::Terracini,
                    mults: verdict.ops.multiplications,
                    wall_ms,
                    verdict: verdict.kind.as_str().to_string(),
                });

                let start = Instant::now();
                let baseline = baseline_check(&inst)?;
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                records.push(BenchRecord {
                    n,
                    r,
                    trial,
                    method: Method::Kruskal,
                    mults: baseline.ops.multiplications,
                    wall_ms,
                    verdict: if baseline.identifiable {
                        "identifiable".to_string()
                    } else {
                        "inconclusive".to_string()
                    },
                });
            }
        }
    }
    let fits = slope_fits(&records, n_values, r_values);
    Ok(BenchOutput { records, fits })
}

fn slope_fits(records: &[BenchRecord], n_values: &[usize], r_values: &[usize]) -> Vec<SlopeFit> {
    let mut fits = Vec::new();
    for &n in n_values {
        for method in [Method::Terracini, Method::Kruskal] {
            let means: Vec<(usize, f64)> = r_values
                .iter()
                .map(|&r| {
                    let counts: Vec<f64> = records
                        .iter()
                        .filter(|rec| rec.n == n && rec.r == r && rec.method == method)
                        .map(|rec| rec.mults as f64)
                        .collect();
                    let mean = counts.iter().sum::<f64>() / counts.len().max(1) as f64;
                    (r, mean)
                })
                .collect();
            fits.push(SlopeFit {
                n,
                method,
                slope: log_log_slope(&means),
                means,
            });
        }
    }
    fits
}

/// Least-squares slope of ln(y) against ln(x).
pub fn log_log_slope(points: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, y)| *y > 0.0)
        .map(|&(x, y)| ((x as f64).ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = m * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((m * sxy - sx * sy) / denom)
}

/// CSV with the exact column order n, r, trial, method, mults, wall_ms,
/// verdict.
pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,r,trial,method,mults,wall_ms,verdict\n");
    for rec in records {
        out.push_str(&format!(
            "{},{},{},{},{},{:.3},{}\n",
            rec.n,
            rec.r,
            rec.trial,
            rec.method.as_str(),
            rec.mults,
            rec.wall_ms,
            rec.verdict
        ));
    }
    out
}

/// Human-readable summary of the slope fits.
pub fn summary_table(output: &BenchOutput) -> String {
    let mut out = String::new();
    for fit in &output.fits {
        let slope = fit
            .slope
            .map(|s| format!("{s:.2}"))
            .unwrap_or_else(|| "n/a".to_string());
        let means = fit
            .means
            .iter()
            .map(|(r, m)| format!("r={r}: {m:.0}"))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!(
            "n={} method={:<9} slope={}  mean mults [{}]\n",
            fit.n,
            fit.method.as_str(),
            slope,
            means
        ));
    }
    out
}
