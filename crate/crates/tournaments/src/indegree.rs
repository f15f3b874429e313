//! Indegree sequences of pseudo-cyclic tournaments.
//!
//! The whole sequence comes from a closed form, never from counting arcs:
//! for `i <= floor(p/2)` the indegree of `i` is `i` plus the number of
//! connectors in `i+1..=p-i`, and the top half mirrors the bottom through
//! `d(i) + d(p-i) = p`. Counting in-arcs directly is reserved for test
//! oracles.

use std::collections::BTreeMap;

use crate::tournament::{PseudoCyclicTournament, Tournament};

/// How the indegree sequence moves from vertex `i` to `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VertexKind {
    /// Step `+1`: neither `i+1` nor `p-i` is a connector.
    Ascent,
    /// Step `-1`: both are connectors (once each when they coincide).
    Descent,
    /// Step `0`: exactly one of the two is a connector.
    Plateau,
}

impl VertexKind {
    pub fn letter(self) -> char {
        match self {
            VertexKind::Ascent => 'A',
            VertexKind::Descent => 'D',
            VertexKind::Plateau => 'P',
        }
    }
}

/// A maximal run of `len >= 2` vertices sharing one indegree. The run
/// `start..start+len` contains `len - 1` plateau-kind vertices; the two
/// counts are easy to conflate, so spans always store the vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlateauSpan {
    pub start: usize,
    pub len: usize,
}

impl PlateauSpan {
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// The indegree sequence of a pseudo-cyclic tournament together with the
/// per-vertex step classification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndegreeProfile {
    p: usize,
    values: Vec<usize>,
    kinds: Vec<VertexKind>,
}

/// Computes the profile of `P(p; N)` by the closed form.
pub fn profile(pt: &PseudoCyclicTournament) -> IndegreeProfile {
    let p = pt.p();
    let neg = pt.neg();
    let mut values = vec![0usize; p + 1];
    for i in 0..=p / 2 {
        let inner = (i + 1..=p - i).filter(|&s| neg.contains(s)).count();
        values[i] = i + inner;
        values[p - i] = p - values[i];
    }
    let kinds = (0..p)
        .map(|i| {
            // i+1 and p-i are counted separately even when they coincide
            // (the middle step of odd p moves by +-1, never 0).
            let hits = neg.contains(i + 1) as usize + neg.contains(p - i) as usize;
            match hits {
                0 => VertexKind::Ascent,
                1 => VertexKind::Plateau,
                _ => VertexKind::Descent,
            }
        })
        .collect();
    IndegreeProfile { p, values, kinds }
}

impl IndegreeProfile {
    pub fn p(&self) -> usize {
        self.p
    }

    /// Indegrees of `0..=p` in vertex order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Step kinds for vertices `0..p` (the last vertex has no step).
    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn ascents(&self) -> usize {
        self.count(VertexKind::Ascent)
    }

    pub fn descents(&self) -> usize {
        self.count(VertexKind::Descent)
    }

    pub fn plateaus(&self) -> usize {
        self.count(VertexKind::Plateau)
    }

    fn count(&self, k: VertexKind) -> usize {
        self.kinds.iter().filter(|&&x| x == k).count()
    }

    /// All vertices share one indegree exactly when every step is a
    /// plateau; such a `P(p; N)` is itself rotational.
    pub fn is_flat(&self) -> bool {
        self.kinds.iter().all(|&k| k == VertexKind::Plateau)
    }

    /// Maximal equal-indegree runs of at least two vertices.
    pub fn spans(&self) -> Vec<PlateauSpan> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.kinds.len() {
            if self.kinds[i] == VertexKind::Plateau {
                let start = i;
                while i < self.kinds.len() && self.kinds[i] == VertexKind::Plateau {
                    i += 1;
                }
                // i - start plateau steps cover i - start + 1 vertices
                out.push(PlateauSpan {
                    start,
                    len: i - start + 1,
                });
            } else {
                i += 1;
            }
        }
        out
    }
}

/// Vertices of any tournament grouped by indegree, degrees ascending.
pub fn indegree_classes(t: &Tournament) -> BTreeMap<usize, Vec<usize>> {
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for u in 0..t.n() {
        classes.entry(t.indegree(u)).or_default().push(u);
    }
    classes
}

/// Plots the indegree sequence as a column per vertex, one row per degree
/// value, highest degree on top.
pub fn render_path(profile: &IndegreeProfile) -> String {
    let values = profile.values();
    let max = *values.iter().max().unwrap();
    let min = *values.iter().min().unwrap();
    let mut out = String::new();
    for level in (min..=max).rev() {
        out.push_str(&format!("{level:>2} |"));
        for &v in values {
            out.push_str(if v == level { " *" } else { "  " });
        }
        out.push('\n');
    }
    out.push_str("    ");
    for i in 0..values.len() {
        out.push_str(&format!(" {}", i % 10));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::ConnectorSet;
    use proptest::prelude::*;
    use VertexKind::{Ascent as A, Descent as D, Plateau as P};

    fn prof(p: usize, members: &[usize]) -> IndegreeProfile {
        profile(&PseudoCyclicTournament::new(ConnectorSet::new(p, members).unwrap()).unwrap())
    }

    #[test]
    fn worked_profiles() {
        let pr = prof(8, &[2, 4, 5]);
        assert_eq!(pr.values(), &[3, 4, 4, 5, 4, 3, 4, 4, 5]);
        assert_eq!(pr.kinds(), &[A, P, A, D, D, A, P, A]);
        assert_eq!((pr.ascents(), pr.descents(), pr.plateaus()), (4, 2, 2));

        let pr = prof(5, &[2, 5]);
        assert_eq!(pr.values(), &[2, 2, 2, 3, 3, 3]);
        assert_eq!(pr.kinds(), &[P, P, A, P, P]);
        assert_eq!((pr.ascents(), pr.descents(), pr.plateaus()), (1, 0, 4));

        let pr = prof(8, &[2, 3, 5]);
        assert_eq!(pr.values(), &[3, 4, 4, 4, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn endpoint_values() {
        for (p, members) in [(8usize, vec![2, 4, 5]), (6, vec![2, 5, 6]), (5, vec![])] {
            let pr = prof(p, &members);
            assert_eq!(pr.values()[0], members.len());
            assert_eq!(pr.values()[p], p - members.len());
        }
    }

    #[test]
    fn transitive_profile_is_the_identity_ramp() {
        let pr = prof(7, &[]);
        assert_eq!(pr.values(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(pr.plateaus(), 0);
        assert_eq!(pr.ascents(), 7);
    }

    #[test]
    fn flat_profiles_are_exactly_the_rotational_halves() {
        assert!(prof(2, &[2]).is_flat());
        assert!(!prof(8, &[2, 4, 5]).is_flat());
        assert!(!prof(5, &[2, 5]).is_flat());
        // p even, |N| = p/2, and N hits exactly one of {i, p+1-i} per pair
        for p in [2usize, 4, 6] {
            for mask in 0..1u64 << p {
                let neg = ConnectorSet::from_mask(p, mask).unwrap();
                let pt = PseudoCyclicTournament::new(neg).unwrap();
                let flat = profile(&pt).is_flat();
                let balanced = p % 2 == 0
                    && neg.len() == p / 2
                    && (1..=p).all(|i| neg.contains(i) != neg.contains(p + 1 - i));
                assert_eq!(flat, balanced, "p={p} mask={mask:b}");
            }
        }
    }

    #[test]
    fn spans_report_vertex_counts() {
        let pr = prof(5, &[2, 5]);
        assert_eq!(
            pr.spans(),
            vec![PlateauSpan { start: 0, len: 3 }, PlateauSpan { start: 3, len: 3 }]
        );
        let pr = prof(8, &[2, 3, 5]);
        assert_eq!(pr.spans(), vec![PlateauSpan { start: 1, len: 7 }]);
        assert_eq!(pr.spans()[0].end(), 7);
        assert!(prof(7, &[]).spans().is_empty());
    }

    #[test]
    fn classes_group_by_indegree() {
        let classes = indegree_classes(
            PseudoCyclicTournament::new(ConnectorSet::new(5, &[2, 4]).unwrap())
                .unwrap()
                .tournament(),
        );
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[&2], vec![0, 2, 4]);
        assert_eq!(classes[&3], vec![1, 3, 5]);

        let classes = indegree_classes(
            PseudoCyclicTournament::new(ConnectorSet::new(5, &[3, 4]).unwrap())
                .unwrap()
                .tournament(),
        );
        assert_eq!(classes[&2], vec![0, 3, 4]);
        assert_eq!(classes[&3], vec![1, 2, 5]);
    }

    #[test]
    fn path_rendering_marks_every_vertex_once() {
        let pr = prof(8, &[2, 4, 5]);
        let art = render_path(&pr);
        assert_eq!(art.matches('*').count(), 9);
        let first = art.lines().next().unwrap();
        assert!(first.starts_with(" 5 |"));
    }

    proptest! {
        // The closed form against the one thing it must agree with: the
        // arc counts of the constructed tournament.
        #[test]
        fn closed_form_matches_direct_count(p in 1usize..=20, raw in 0u64..1 << 20) {
            let neg = ConnectorSet::from_mask(p, raw & ((1 << p) - 1)).unwrap();
            let pt = PseudoCyclicTournament::new(neg).unwrap();
            let pr = profile(&pt);
            for i in 0..=p {
                prop_assert_eq!(pr.values()[i], pt.tournament().indegree(i));
            }
        }

        #[test]
        fn kinds_match_value_steps(p in 1usize..=20, raw in 0u64..1 << 20) {
            let neg = ConnectorSet::from_mask(p, raw & ((1 << p) - 1)).unwrap();
            let pr = profile(&PseudoCyclicTournament::new(neg).unwrap());
            for i in 0..p {
                let step = pr.values()[i + 1] as isize - pr.values()[i] as isize;
                let expect = match pr.kinds()[i] {
                    VertexKind::Ascent => 1,
                    VertexKind::Plateau => 0,
                    VertexKind::Descent => -1,
                };
                prop_assert_eq!(step, expect);
            }
        }
    }
}
