//! Monte Carlo runs of a decoder against random unit-step errors.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::thread;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rescodes_core::decode::{DecodeStatus, Decoder};
use rescodes_core::{FieldElement, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub code: String,
    pub trials: u64,
    pub injected_weight: u32,
    pub decoder: String,
    pub success: u64,
    pub miscorrection: u64,
    pub detected: u64,
    pub seed: u64,
    /// Trials per actual error weight; stacked steps can cancel.
    pub actual_weights: BTreeMap<u32, u64>,
}

impl SimulationReport {
    fn absorb(&mut self, other: SimulationReport) {
        self.success += other.success;
        self.miscorrection += other.miscorrection;
        self.detected += other.detected;
        for (w, c) in other.actual_weights {
            *self.actual_weights.entry(w).or_default() += c;
        }
    }

    pub fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        let pct = |x: u64| if self.trials == 0 { 0.0 } else { 100.0 * x as f64 / self.trials as f64 };
        writeln!(out, "{} | decoder {} | t = {} | seed {}", self.code, self.decoder, self.injected_weight, self.seed)?;
        writeln!(out, "{:<14} {:>10} {:>8}", "outcome", "count", "%")?;
        for (name, x) in [("success", self.success), ("miscorrection", self.miscorrection), ("detected", self.detected)]
        {
            writeln!(out, "{name:<14} {x:>10} {:>7.2}%", pct(x))?;
        }
        writeln!(out, "{:<14} {:>10}", "trials", self.trials)?;
        for (w, c) in &self.actual_weights {
            writeln!(out, "  weight {w:<5} {c:>10}")?;
        }
        Ok(())
    }
}

/// One trial: a uniform codeword plus `t` unit steps at uniform positions,
/// drawn from the stream `(seed, trial)`.
fn run_trial(decoder: &Decoder, t: u32, seed: u64, trial: u64, report: &mut SimulationReport) -> Result<()> {
    let code = decoder.code();
    let f = *code.field();
    let p = f.p();
    let units = code.metric().subgroup().elements();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);

    let message: Vec<FieldElement> = (0..code.dimension()).map(|_| f.from_residue(rng.gen_range(0..p))).collect();
    let c = code.encode(&message)?;
    let mut received = c.clone();
    let mut error = vec![f.zero(); code.len()];
    for _ in 0..t {
        let pos = rng.gen_range(0..code.len());
        error[pos] += units[rng.gen_range(0..units.len())];
    }
    for (r, e) in received.iter_mut().zip(&error) {
        *r += *e;
    }
    let weight = code.metric().vector_weight(&error) as u32;
    *report.actual_weights.entry(weight).or_default() += 1;

    let out = decoder.decode(&received)?;
    match (out.status, out.codeword) {
        (DecodeStatus::DetectedUncorrectable, _) => report.detected += 1,
        (_, Some(w)) if w == c => report.success += 1,
        _ => report.miscorrection += 1,
    }
    Ok(())
}

/// Runs `trials` trials split over `jobs` threads; the report depends only
/// on the seed and parameters.
pub fn simulate(decoder: &Decoder, t: u32, trials: u64, seed: u64, jobs: usize) -> Result<SimulationReport> {
    let mut report = SimulationReport {
        code: decoder.code().id(),
        trials,
        injected_weight: t,
        decoder: decoder.name().to_string(),
        seed,
        ..Default::default()
    };
    let jobs = (jobs.max(1) as u64).min(trials.max(1));
    let chunk = trials.div_ceil(jobs);
    let parts: Vec<Result<SimulationReport>> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|k| {
                s.spawn(move || {
                    let mut part = SimulationReport::default();
                    for trial in (k * chunk)..((k + 1) * chunk).min(trials) {
                        run_trial(decoder, t, seed, trial, &mut part)?;
                    }
                    Ok(part)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rescodes_core::code::construct_gauss2;
    use rescodes_core::decode::DecoderKind;

    #[test]
    fn empty_run() {
        let code = construct_gauss2(13, None).unwrap();
        let d = Decoder::new(&code, DecoderKind::Algebraic).unwrap();
        let r = simulate(&d, 2, 0, 7, 3).unwrap();
        assert_eq!((r.success, r.miscorrection, r.detected), (0, 0, 0));
        assert!(r.actual_weights.is_empty());
    }

    #[test]
    fn thread_count_does_not_matter() {
        let code = construct_gauss2(13, None).unwrap();
        let d = Decoder::new(&code, DecoderKind::Algebraic).unwrap();
        let a = simulate(&d, 3, 500, 11, 1).unwrap();
        let b = simulate(&d, 3, 500, 11, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.success + a.miscorrection + a.detected, 500);
        assert!(a.success < 500);
    }
}
