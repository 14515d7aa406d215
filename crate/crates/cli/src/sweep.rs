//! The verification sweep: every orbit label of a classical family up to a
//! rank cutoff, fanned out over worker threads, results merged in label
//! order.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use orbit_core::catalog::{classical_orbits, AlgebraType, ClassicalFamily, OrbitKey};
use orbit_core::oracle::{verify_label, OracleError, VerifyReport};
use orbit_core::partitions::Partition;

/// Default rank cutoffs, matching the acceptance sweeps: `sl_n` up to n = 7,
/// `sp_2n` up to 2n = 8, `so_n` up to n = 8.
pub fn default_max_rank(family: ClassicalFamily) -> usize {
    match family {
        ClassicalFamily::A => 6,
        ClassicalFamily::B => 3,
        ClassicalFamily::C => 4,
        ClassicalFamily::D => 4,
    }
}

pub struct SweepOutcome {
    /// Completed reports, in deterministic label order.
    pub reports: Vec<VerifyReport>,
    /// Labels skipped because the deadline hit.
    pub skipped: usize,
}

fn sweep_jobs(family: ClassicalFamily, max_rank: usize) -> Vec<Partition> {
    let mut jobs = Vec::new();
    for rank in family.min_rank()..=max_rank {
        let algebra = AlgebraType::Classical(family, rank);
        for label in classical_orbits(algebra).expect("classical") {
            let OrbitKey::Partition(d) = label.key else { unreachable!() };
            jobs.push(d);
        }
    }
    jobs
}

/// Worker-thread cap: `ORBIT_H2_THREADS` when set, available parallelism
/// otherwise.
pub fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("ORBIT_H2_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
        eprintln!("ignoring invalid ORBIT_H2_THREADS value `{v}`");
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn run_sweep(
    family: ClassicalFamily,
    max_rank: usize,
    deadline: Option<Instant>,
) -> Result<SweepOutcome, OracleError> {
    let jobs = sweep_jobs(family, max_rank);
    let threads = thread_cap().min(jobs.len().max(1));
    let results: Mutex<Vec<Option<Result<VerifyReport, OracleError>>>> =
        Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let timed_out = AtomicBool::new(false);

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::SeqCst);
                if idx >= jobs.len() {
                    break;
                }
                if let Some(dl) = deadline {
                    if Instant::now() >= dl {
                        timed_out.store(true, Ordering::SeqCst);
                        break;
                    }
                }
                let report = verify_label(family, &jobs[idx]);
                results.lock().unwrap()[idx] = Some(report);
            });
        }
    });

    let slots = results.into_inner().unwrap();
    let mut reports = Vec::with_capacity(slots.len());
    let mut skipped = 0;
    for slot in slots {
        match slot {
            Some(Ok(report)) => reports.push(report),
            Some(Err(e)) => return Err(e),
            None => skipped += 1,
        }
    }
    if skipped > 0 {
        debug_assert!(timed_out.load(Ordering::SeqCst));
    }
    Ok(SweepOutcome { reports, skipped })
}
