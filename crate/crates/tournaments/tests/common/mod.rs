//! Oracles and generators shared by the integration suites. Oracles
//! recompute answers by the most naive route available, so the library
//! is never graded against its own fast paths.

#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use tournaments::perm::Permutation;
use tournaments::tournament::{ConnectorSet, Tournament};

/// The automorphism group by filtering all n! permutations.
pub fn naive_automorphisms(t: &Tournament) -> Vec<Permutation> {
    let n = t.n();
    (0..n)
        .permutations(n)
        .filter(|img| {
            (0..n).all(|u| (u + 1..n).all(|v| t.has_arc(u, v) == t.has_arc(img[u], img[v])))
        })
        .map(|img| Permutation::new(img).unwrap())
        .collect()
}

/// Uniformly random orientation of every pair.
pub fn random_tournament<R: Rng>(n: usize, rng: &mut R) -> Tournament {
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<bool>() {
                rows[u] |= 1 << v;
            } else {
                rows[v] |= 1 << u;
            }
        }
    }
    Tournament::from_out_rows(rows).unwrap()
}

pub fn random_connector_set<R: Rng>(p: usize, rng: &mut R) -> ConnectorSet {
    ConnectorSet::from_mask(p, rng.random_range(0..1u64 << p)).unwrap()
}

/// Number of orbits of `phi` (fixed points included) lying entirely
/// inside `lo..=hi`.
pub fn orbits_within(phi: &Permutation, lo: usize, hi: usize) -> usize {
    phi.cycles()
        .iter()
        .filter(|c| c.iter().all(|&u| lo <= u && u <= hi))
        .count()
}
