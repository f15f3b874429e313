//! Browser bindings for the tournaments crate. Every export takes plain
//! numbers and strings and returns a JSON string, so the page needs no
//! generated TypeScript and the same functions stay testable natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use tournaments::automorphism::{automorphisms, is_rigid};
use tournaments::distinguishing::{check_conjecture, CheckMode};
use tournaments::indegree::profile;
use tournaments::sweep::enumerate_connector_sets;
use tournaments::tournament::{ConnectorSet, CyclicTournament, PseudoCyclicTournament};
use tournaments::Error;

// Group enumeration on 2p+1 vertices has to stay snappy inside a click
// handler; the CLI is the place for anything bigger.
const EXPLORE_LIMIT: usize = 15;
const OVERVIEW_LIMIT: usize = 8;

fn envelope(result: Result<Value, Error>) -> String {
    match result {
        Ok(value) => value.to_string(),
        Err(err) => json!({ "error": err.to_string() }).to_string(),
    }
}

fn explore_impl(p: usize, neg: &str) -> Result<Value, Error> {
    if p > EXPLORE_LIMIT {
        return Err(Error::SearchTooLarge {
            n: 2 * p + 1,
            bound: 2 * EXPLORE_LIMIT + 1,
        });
    }
    let t = CyclicTournament::new(ConnectorSet::parse(p, neg)?)?;
    let n = t.order();
    let g = automorphisms(t.tournament());
    let res = check_conjecture(&t, CheckMode::Certified);
    let arcs: Vec<[usize; 2]> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| {
            if t.tournament().has_arc(u, v) {
                [u, v]
            } else {
                [v, u]
            }
        })
        .collect();
    Ok(json!({
        "p": p,
        "order": n,
        "neg": t.neg().members(),
        "arc_differences": t.arc_difference_set(),
        "aut_order": g.order(),
        "holds": res.holds,
        "method": res.method.name(),
        "lower_rigid": is_rigid(&t.lower_half()),
        "upper_rigid": is_rigid(&t.upper_half()),
        "arcs": arcs,
    }))
}

fn degree_profile_impl(p: usize, neg: &str) -> Result<Value, Error> {
    let pt = PseudoCyclicTournament::new(ConnectorSet::parse(p, neg)?)?;
    let pr = profile(&pt);
    let kinds: String = pr.kinds().iter().map(|k| k.letter()).collect();
    let spans: Vec<Value> = pr
        .spans()
        .iter()
        .map(|s| json!({ "start": s.start, "len": s.len }))
        .collect();
    Ok(json!({
        "p": p,
        "neg": pt.neg().members(),
        "values": pr.values(),
        "kinds": kinds,
        "ascents": pr.ascents(),
        "descents": pr.descents(),
        "plateaus": pr.plateaus(),
        "flat": pr.is_flat(),
        "spans": spans,
    }))
}

fn sweep_overview_impl(p: usize) -> Result<Value, Error> {
    if p == 0 {
        return Err(Error::ZeroHalfOrder);
    }
    if p > OVERVIEW_LIMIT {
        return Err(Error::SweepTooLarge(p, OVERVIEW_LIMIT));
    }
    let mut rows = Vec::new();
    let mut methods = serde_json::Map::new();
    for neg in enumerate_connector_sets(p, true) {
        let t = CyclicTournament::new(neg)?;
        let res = check_conjecture(&t, CheckMode::Certified);
        let name = res.method.name();
        *methods.entry(name).or_insert(json!(0)) =
            json!(methods.get(name).and_then(Value::as_u64).unwrap_or(0) + 1);
        rows.push(json!({
            "neg": neg.members(),
            "holds": res.holds,
            "method": name,
            "aut_order": automorphisms(t.tournament()).order(),
        }));
    }
    Ok(json!({
        "p": p,
        "dedup": true,
        "total": rows.len(),
        "rows": rows,
        "methods": methods,
    }))
}

/// Facts and the full arc list for one cyclic tournament.
#[wasm_bindgen]
pub fn explore(p: u32, neg: &str) -> String {
    envelope(explore_impl(p as usize, neg))
}

/// Indegree sequence of `P(p; N)` with its step classification.
#[wasm_bindgen]
pub fn degree_profile(p: u32, neg: &str) -> String {
    envelope(degree_profile_impl(p as usize, neg))
}

/// Certified verdicts for every connector set of one half-order, one
/// representative per converse pair.
#[wasm_bindgen]
pub fn sweep_overview(p: u32) -> String {
    envelope(sweep_overview_impl(p as usize))
}
