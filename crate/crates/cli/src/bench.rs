//! Scaling benchmark over the β_k family.

use std::time::Instant;

use bkl4::circuits::DEFAULT_SC_CAP;
use bkl4::families::beta_normal_form;
use bkl4::simple::ATOMS;
use bkl4::{compute_sc, solve_conjugacy, BraidWord, Letter};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub k: u32,
    pub length: usize,
    pub sc_size: usize,
    pub sc_seconds: f64,
    pub solve_seconds: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = logs.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    cov / var
}

fn random_conjugator(rng: &mut ChaCha8Rng, len: usize) -> BraidWord {
    (0..len)
        .map(|_| Letter::new(*ATOMS.choose(rng).unwrap(), rng.gen_bool(0.5)).unwrap())
        .collect()
}

pub fn run(kmax: u32, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (1..=kmax)
        .map(|k| {
            let x = beta_normal_form(k);
            let t = Instant::now();
            let g = compute_sc(&x, DEFAULT_SC_CAP).expect("β_k circuits are small");
            let sc_seconds = t.elapsed().as_secs_f64();
            let y = x.conjugate(&random_conjugator(&mut rng, 10).normalize());
            let t = Instant::now();
            let d = solve_conjugacy(&x, &y, false);
            let solve_seconds = t.elapsed().as_secs_f64();
            assert!(d.is_conjugate(), "β_{k} and its conjugate");
            BenchRow {
                k,
                length: x.canonical_length(),
                sc_size: g.len(),
                sc_seconds,
                solve_seconds,
            }
        })
        .collect()
}

pub fn csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("k,len,sc_size,sc_seconds,solve_seconds\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{:.6},{:.6}\n",
            r.k, r.length, r.sc_size, r.sc_seconds, r.solve_seconds
        ));
    }
    let sc: Vec<(f64, f64)> = rows.iter().map(|r| (r.length as f64, r.sc_seconds)).collect();
    let solve: Vec<(f64, f64)> = rows.iter().map(|r| (r.length as f64, r.solve_seconds)).collect();
    s.push_str(&format!(
        "# log-log slope vs len: compute_sc {:.2}, solve_conjugacy {:.2}\n",
        log_log_slope(&sc),
        log_log_slope(&solve)
    ));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let pts: Vec<(f64, f64)> = (1..6).map(|x| (x as f64, 2.0 * (x as f64).powi(3))).collect();
        assert!((log_log_slope(&pts) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn rows_follow_the_size_formula() {
        for r in run(3, 1) {
            assert_eq!(r.sc_size, 4 * (r.length - 3) * r.length);
        }
    }
}
