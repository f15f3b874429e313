//! Exhaustive conjecture sweeps over every connector set up to a given
//! half-order, with JSONL output.
//!
//! Records are produced in (p, connector-bitmask) order no matter how many
//! worker threads run: the instance list is chunked contiguously, each
//! worker keeps its chunk in order, and the chunks are concatenated back in
//! position. Everything in a record except the elapsed-time field is a
//! pure function of the instance and the mode.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::automorphism::automorphisms;
use crate::distinguishing::{check_conjecture, CheckMode};
use crate::error::Error;
use crate::tournament::{ConnectorSet, CyclicTournament};

/// Sweeps beyond this half-order refuse to run without `force` (the space
/// doubles per step and the group searches grow with it).
pub const DEFAULT_SWEEP_LIMIT: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub p_min: usize,
    pub p_max: usize,
    pub mode: CheckMode,
    /// Keep one representative per converse pair (a set and its
    /// complement give converse tournaments).
    pub dedup: bool,
    pub workers: usize,
    pub force: bool,
}

impl SweepConfig {
    pub fn new(p_min: usize, p_max: usize) -> Self {
        SweepConfig {
            p_min,
            p_max,
            mode: CheckMode::Certified,
            dedup: false,
            workers: 1,
            force: false,
        }
    }
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub p: usize,
    pub neg: Vec<usize>,
    pub holds: bool,
    pub method: String,
    pub aut_order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    pub ms: u64,
}

/// Every connector set for half-order `p`, bitmask ascending. With
/// `dedup`, only sets whose mask is at most their complement's survive.
pub fn enumerate_connector_sets(p: usize, dedup: bool) -> Vec<ConnectorSet> {
    let mut out = Vec::new();
    for mask in 0..1u64 << p {
        let set = ConnectorSet::from_mask(p, mask).expect("mask within range");
        if !dedup || mask <= set.complement().mask() {
            out.push(set);
        }
    }
    out
}

/// Runs the sweep and returns records sorted by (p, connector bitmask).
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>, Error> {
    if cfg.p_min > cfg.p_max {
        return Err(Error::BadSweepRange(cfg.p_min, cfg.p_max));
    }
    if cfg.p_min == 0 {
        return Err(Error::ZeroHalfOrder);
    }
    if cfg.p_max > DEFAULT_SWEEP_LIMIT && !cfg.force {
        return Err(Error::SweepTooLarge(cfg.p_max, DEFAULT_SWEEP_LIMIT));
    }

    let mut instances = Vec::new();
    for p in cfg.p_min..=cfg.p_max {
        instances.extend(enumerate_connector_sets(p, cfg.dedup));
    }

    let workers = cfg.workers.max(1).min(instances.len().max(1));
    let mode = cfg.mode;
    if workers == 1 {
        // no point paying for a scope, and single-threaded targets never
        // have to touch std::thread at all
        return instances
            .into_iter()
            .map(|neg| check_instance(neg, mode))
            .collect();
    }
    let chunk = instances.len().div_ceil(workers);
    let mut records = Vec::with_capacity(instances.len());
    std::thread::scope(|scope| -> Result<(), Error> {
        let mut handles = Vec::new();
        for shard in instances.chunks(chunk.max(1)) {
            handles.push(scope.spawn(move || {
                shard
                    .iter()
                    .map(|&neg| check_instance(neg, mode))
                    .collect::<Result<Vec<_>, Error>>()
            }));
        }
        for handle in handles {
            records.extend(handle.join().expect("sweep worker panicked")?);
        }
        Ok(())
    })?;
    Ok(records)
}

fn check_instance(neg: ConnectorSet, mode: CheckMode) -> Result<SweepRecord, Error> {
    let start = Instant::now();
    let t = CyclicTournament::new(neg)?;
    let aut_order = automorphisms(t.tournament()).order();
    let res = check_conjecture(&t, mode);
    Ok(SweepRecord {
        p: neg.p(),
        neg: neg.members(),
        holds: res.holds,
        method: res.method.name().to_string(),
        aut_order,
        witness: res.witness.map(|w| w.image().to_vec()),
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Writes one JSON object per line.
pub fn write_jsonl<W: Write>(mut out: W, records: &[SweepRecord]) -> io::Result<()> {
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Per-method tallies; derived data, the JSONL records stay the source of
/// truth.
pub fn method_counts(records: &[SweepRecord]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for rec in records {
        *counts.entry(rec.method.clone()).or_default() += 1;
    }
    counts
}

/// CSV summary of the per-method tallies.
pub fn csv_summary(records: &[SweepRecord]) -> String {
    let mut s = String::from("method,count\n");
    for (method, count) in method_counts(records) {
        s.push_str(&format!("{method},{count}\n"));
    }
    s.push_str(&format!("total,{}\n", records.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_and_dedup() {
        let all = enumerate_connector_sets(2, false);
        assert_eq!(all.len(), 4);
        let members: Vec<Vec<usize>> = all.iter().map(|s| s.members()).collect();
        assert_eq!(members, vec![vec![], vec![1], vec![2], vec![1, 2]]);

        // {} pairs with {1,2}, {1} pairs with {2}
        let deduped = enumerate_connector_sets(2, true);
        let members: Vec<Vec<usize>> = deduped.iter().map(|s| s.members()).collect();
        assert_eq!(members, vec![vec![], vec![1]]);

        for p in 1..=6 {
            let full = enumerate_connector_sets(p, false).len();
            assert_eq!(full, 1 << p);
            let kept = enumerate_connector_sets(p, true);
            for set in &kept {
                assert!(set.mask() <= set.complement().mask());
            }
            // every set is represented by itself or its complement
            assert!(kept.len() * 2 >= full);
        }
    }

    #[test]
    fn small_brute_sweep_all_hold() {
        let mut cfg = SweepConfig::new(1, 3);
        cfg.mode = CheckMode::Brute;
        let records = run_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 2 + 4 + 8);
        assert!(records.iter().all(|r| r.holds && r.method == "brute"));
        assert!(records.iter().all(|r| r.witness.is_none()));
        assert!(records.iter().all(|r| r.aut_order % 2 == 1));
    }

    #[test]
    fn tiny_half_orders_are_fully_certified() {
        // every connector set with p <= 3 has at most 2 or at least p-1
        // members, so the cheapest rule covers everything
        let records = run_sweep(&SweepConfig::new(1, 3)).unwrap();
        assert!(records.iter().all(|r| r.method == "FewConnectors"));
    }

    #[test]
    fn worker_count_never_changes_content() {
        let mut base = SweepConfig::new(1, 4);
        base.dedup = true;
        let reference = run_sweep(&base).unwrap();
        for workers in [2, 3, 8, 64] {
            let mut cfg = base.clone();
            cfg.workers = workers;
            let got = run_sweep(&cfg).unwrap();
            assert_eq!(strip_ms(&got), strip_ms(&reference), "workers={workers}");
        }
    }

    #[test]
    fn records_sorted_and_deterministic() {
        let cfg = SweepConfig::new(1, 4);
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(strip_ms(&a), strip_ms(&b));
        let keys: Vec<(usize, u64)> = a
            .iter()
            .map(|r| {
                let mask = r.neg.iter().fold(0u64, |m, &s| m | 1 << (s - 1));
                (r.p, mask)
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn jsonl_round_trip_and_field_order() {
        let records = run_sweep(&SweepConfig::new(2, 2)).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        let first = text.lines().next().unwrap();
        assert!(first.starts_with("{\"p\":2,\"neg\":[],\"holds\":true,\"method\":"));
        for (line, rec) in text.lines().zip(&records) {
            let back: SweepRecord = serde_json::from_str(line).unwrap();
            assert_eq!(&back, rec);
        }
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            run_sweep(&SweepConfig::new(3, 2)),
            Err(Error::BadSweepRange(3, 2))
        ));
        assert!(matches!(
            run_sweep(&SweepConfig::new(0, 2)),
            Err(Error::ZeroHalfOrder)
        ));
        assert!(matches!(
            run_sweep(&SweepConfig::new(1, 10)),
            Err(Error::SweepTooLarge(10, _))
        ));
    }

    #[test]
    fn csv_is_derived_from_records() {
        let records = run_sweep(&SweepConfig::new(1, 3)).unwrap();
        let csv = csv_summary(&records);
        assert!(csv.starts_with("method,count\n"));
        assert!(csv.contains("FewConnectors,14"));
        assert!(csv.ends_with("total,14\n"));
    }

    fn strip_ms(records: &[SweepRecord]) -> Vec<SweepRecord> {
        records
            .iter()
            .cloned()
            .map(|mut r| {
                r.ms = 0;
                r
            })
            .collect()
    }
}
