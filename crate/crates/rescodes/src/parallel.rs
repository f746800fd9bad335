//! Multi-threaded, timed front ends to the verification engines.

use std::thread;
use std::time::Instant;

use rescodes_core::verify::{
    bounded_report_from, choose_method, full_report_from, min_distance_bounded_partition, min_distance_full_partition,
    DistanceReport, Method, Partial,
};
use rescodes_core::{LinearCode, Result};

/// Runs `search(part, jobs)` for every part on its own thread.
fn fan_out<F>(jobs: usize, search: F) -> Result<Vec<Partial>>
where
    F: Fn(usize, usize) -> Result<Partial> + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 {
        return Ok(vec![search(0, 1)?]);
    }
    let search = &search;
    thread::scope(|s| {
        let handles: Vec<_> = (0..jobs).map(|k| s.spawn(move || search(k, jobs))).collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    })
}

/// Exact distance by codeword enumeration; the report's bound is the
/// code's guaranteed distance unless `bound` is given.
pub fn min_distance_full(code: &LinearCode, bound: Option<u32>, jobs: usize) -> Result<DistanceReport> {
    let start = Instant::now();
    let partials = fan_out(jobs, |k, n| min_distance_full_partition(code, k, n))?;
    let mut report = full_report_from(code, partials);
    if let Some(b) = bound {
        report.bound_checked = b;
    }
    report.elapsed = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Certifies `d >= bound` or returns a lightest codeword.
pub fn min_distance_bounded(code: &LinearCode, bound: u32, jobs: usize) -> Result<DistanceReport> {
    let start = Instant::now();
    let partials = fan_out(jobs, |k, n| min_distance_bounded_partition(code, bound, k, n))?;
    let mut report = bounded_report_from(code, bound, partials);
    report.elapsed = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Dispatches on `method`; `None` picks the cheaper search.
pub fn verify(code: &LinearCode, method: Option<Method>, bound: Option<u32>, jobs: usize) -> Result<DistanceReport> {
    let target = bound.unwrap_or(code.guaranteed_distance());
    let method = match method {
        Some(m) => m,
        None => choose_method(code, target)?,
    };
    match method {
        Method::BoundedWeight => min_distance_bounded(code, target, jobs),
        _ => min_distance_full(code, bound, jobs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rescodes_core::code::{construct_eisen_alg, construct_gauss2};

    #[test]
    fn threads_do_not_change_the_answer() {
        let code = construct_gauss2(13, None).unwrap();
        let one = min_distance_full(&code, None, 1).unwrap();
        let three = min_distance_full(&code, None, 3).unwrap();
        assert_eq!((one.result, &one.witness), (three.result, &three.witness));
        let code = construct_eisen_alg(37).unwrap();
        let one = min_distance_bounded(&code, 6, 1).unwrap();
        let four = min_distance_bounded(&code, 6, 4).unwrap();
        assert_eq!((one.result, &one.witness), (four.result, &four.witness));
    }

    #[test]
    fn auto_dispatch() {
        let code = construct_gauss2(13, None).unwrap();
        let r = verify(&code, None, None, 2).unwrap();
        assert!(r.certified());
        assert!(r.elapsed >= 0.0);
    }
}
