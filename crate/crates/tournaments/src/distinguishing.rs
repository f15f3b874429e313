//! Symmetry-breaking labelings, the canonical half/half labeling of a
//! cyclic tournament, and determining sets.
//!
//! A labeling is distinguishing when no automorphism except the identity
//! preserves it. For a 2-labeling this is the same as saying the class of
//! label 1 is fixed setwise by no nontrivial automorphism, which is how
//! most of the searches below are phrased internally.

use crate::automorphism::{automorphisms, is_rigid, AutomorphismGroup};
use crate::certificates::{certify, CertificateVerdict, Rule};
use crate::error::Error;
use crate::perm::Permutation;
use crate::tournament::{CyclicTournament, Tournament};

/// Subset-style searches refuse to run beyond this many vertices unless a
/// caller passes an explicit bound.
pub const DEFAULT_SEARCH_BOUND: usize = 31;

/// Vertex labels `1..=r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Labeling {
    labels: Vec<u8>,
    r: u8,
}

impl Labeling {
    pub fn new(labels: Vec<u8>, r: u8) -> Result<Self, Error> {
        if labels.iter().any(|&l| l < 1 || l > r) {
            return Err(Error::LabelOutOfRange { r });
        }
        Ok(Labeling { labels, r })
    }

    /// The 2-labeling whose label-1 class is the given bitmask.
    pub fn from_class_mask(n: usize, mask: u64) -> Self {
        let labels = (0..n)
            .map(|u| if mask >> u & 1 != 0 { 1 } else { 2 })
            .collect();
        Labeling { labels, r: 2 }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn label(&self, u: usize) -> u8 {
        self.labels[u]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Bitmask of the vertices carrying `label`.
    pub fn class_mask(&self, label: u8) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == label)
            .fold(0, |m, (u, _)| m | 1 << u)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        (1..=self.r)
            .map(|l| self.labels.iter().filter(|&&x| x == l).count())
            .collect()
    }
}

/// Label 1 on the lower half `{0..p}`, label 2 on the upper half.
pub fn canonical_labeling(t: &CyclicTournament) -> Labeling {
    let p = t.p();
    Labeling::from_class_mask(t.order(), (1u64 << (p + 1)) - 1)
}

/// `phi` preserves `lab` iff every vertex keeps its label.
pub fn preserves_labeling(phi: &Permutation, lab: &Labeling) -> bool {
    debug_assert_eq!(phi.n(), lab.n());
    (0..lab.n()).all(|u| lab.label(phi.apply(u)) == lab.label(u))
}

/// `phi` maps the vertex set `mask` onto itself.
pub fn stabilizes_set(phi: &Permutation, mask: u64) -> bool {
    phi.apply_mask(mask) == mask
}

/// Panics if the labeling size disagrees with the tournament.
pub fn is_distinguishing(t: &Tournament, lab: &Labeling) -> bool {
    assert_eq!(lab.n(), t.n(), "labeling size mismatch");
    let g = automorphisms(t);
    g.nontrivial().iter().all(|phi| !preserves_labeling(phi, lab))
}

/// Least `r` admitting a distinguishing `r`-labeling: 1 exactly for rigid
/// tournaments, and 2 for every other tournament here (odd automorphism
/// groups always admit a regular set).
pub fn distinguishing_number(t: &Tournament) -> Result<usize, Error> {
    distinguishing_number_bounded(t, DEFAULT_SEARCH_BOUND)
}

pub fn distinguishing_number_bounded(t: &Tournament, bound: usize) -> Result<usize, Error> {
    let n = t.n();
    if n > bound {
        return Err(Error::SearchTooLarge { n, bound });
    }
    if is_rigid(t) {
        return Ok(1);
    }
    let g = automorphisms(t);
    for r in 2..=n.max(2) {
        if exists_distinguishing(&g, r as u8, n) {
            return Ok(r);
        }
    }
    unreachable!("an all-distinct labeling is always distinguishing")
}

/// Colexicographic scan over `{1..r}^n`: position 0 varies fastest, so a
/// labeling is compared against its group images by the highest differing
/// vertex. Skips labelings that are not the least in their orbit.
fn exists_distinguishing(g: &AutomorphismGroup, r: u8, n: usize) -> bool {
    let inverses: Vec<Permutation> = g.nontrivial().iter().map(|phi| phi.inverse()).collect();
    let mut lab = vec![1u8; n];
    loop {
        if is_orbit_least(&inverses, &lab) {
            let preserved = g
                .nontrivial()
                .iter()
                .any(|phi| (0..n).all(|u| lab[phi.apply(u)] == lab[u]));
            if !preserved {
                return true;
            }
        }
        // odometer step
        let mut i = 0;
        while i < n && lab[i] == r {
            lab[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        lab[i] += 1;
    }
}

fn is_orbit_least(inverses: &[Permutation], lab: &[u8]) -> bool {
    for inv in inverses {
        // the image labeling assigns lab[u] to phi(u), i.e. reads lab
        // through the inverse
        for u in (0..lab.len()).rev() {
            let moved = lab[inv.apply(u)];
            if moved != lab[u] {
                if moved < lab[u] {
                    return false;
                }
                break;
            }
        }
    }
    true
}

/// How a conjecture check reached its answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckMode {
    /// Enumerate the group and filter.
    Brute,
    /// Try certificates first, fall back to enumeration.
    Certified,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Method {
    Brute,
    Certificate(Rule),
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Certificate(rule) => rule.name(),
        }
    }
}

/// Outcome of checking whether the canonical labeling distinguishes `T`.
/// `witness` is the first nontrivial label-preserving automorphism in
/// lexicographic order when the answer is no.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureResult {
    pub holds: bool,
    pub witness: Option<Permutation>,
    pub method: Method,
}

/// Checks that the canonical half/half labeling is distinguishing.
pub fn check_conjecture(t: &CyclicTournament, mode: CheckMode) -> ConjectureResult {
    if mode == CheckMode::Certified {
        if let CertificateVerdict::Proved { rule, .. } = certify(t) {
            return ConjectureResult {
                holds: true,
                witness: None,
                method: Method::Certificate(rule),
            };
        }
    }
    let lam = canonical_labeling(t);
    let g = automorphisms(t.tournament());
    let witness = g
        .nontrivial()
        .iter()
        .find(|phi| preserves_labeling(phi, &lam))
        .cloned();
    ConjectureResult {
        holds: witness.is_none(),
        witness,
        method: Method::Brute,
    }
}

/// Smallest label-class size over all distinguishing 2-labelings: the
/// least `k` such that some `k`-subset is fixed setwise by no nontrivial
/// automorphism. Undefined (an error) on rigid tournaments.
pub fn distinguishing_cost(t: &Tournament) -> Result<usize, Error> {
    distinguishing_cost_bounded(t, DEFAULT_SEARCH_BOUND)
}

pub fn distinguishing_cost_bounded(t: &Tournament, bound: usize) -> Result<usize, Error> {
    let n = t.n();
    if n > bound {
        return Err(Error::SearchTooLarge { n, bound });
    }
    if is_rigid(t) {
        return Err(Error::CostOfRigid);
    }
    let g = automorphisms(t);
    for k in 1..=n / 2 {
        if let Some(_mask) = least_regular_set(&g, n, k) {
            return Ok(k);
        }
    }
    // a regular set of size <= n/2 always exists for an odd-order group
    unreachable!("no regular set found for a nontrivial odd-order group")
}

/// First `k`-subset (as a bitmask, ascending numeric = colex order) whose
/// setwise stabilizer in `g` is trivial.
fn least_regular_set(g: &AutomorphismGroup, n: usize, k: usize) -> Option<u64> {
    subsets_of_size(n, k).find(|&mask| {
        g.nontrivial()
            .iter()
            .all(|phi| phi.apply_mask(mask) != mask)
    })
}

/// Gosper's hack: all `k`-subsets of `0..n` in ascending mask order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let end = 1u64 << n;
    let mut mask = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut exhausted = k > n;
    std::iter::from_fn(move || {
        if exhausted || mask >= end {
            return None;
        }
        let cur = mask;
        if k == 0 || mask == 0 {
            exhausted = true;
            return Some(cur);
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        Some(cur)
    })
}

/// No two distinct automorphisms agree on all of `xs`; equivalently only
/// the identity fixes `xs` pointwise.
pub fn is_determining_set(t: &Tournament, xs: &[usize]) -> bool {
    let g = automorphisms(t);
    is_determining_with(&g, xs)
}

fn is_determining_with(g: &AutomorphismGroup, xs: &[usize]) -> bool {
    g.nontrivial()
        .iter()
        .all(|phi| xs.iter().any(|&x| phi.apply(x) != x))
}

/// A determining set whose induced sub-tournament is also rigid. Knowing
/// an automorphism on such a set pins it down everywhere, and the set
/// itself carries no internal symmetry.
pub fn is_rigid_determining_set(t: &Tournament, xs: &[usize]) -> bool {
    is_determining_set(t, xs) && is_rigid(&t.induced(xs))
}

/// Smallest rigid determining set of size at most `max_size`, searching
/// sizes ascending and, within a size, masks ascending. `Ok(None)` when no
/// set within the size bound works.
pub fn min_rigid_determining_set(
    t: &Tournament,
    max_size: usize,
) -> Result<Option<Vec<usize>>, Error> {
    let n = t.n();
    if n > DEFAULT_SEARCH_BOUND {
        return Err(Error::SearchTooLarge {
            n,
            bound: DEFAULT_SEARCH_BOUND,
        });
    }
    let g = automorphisms(t);
    for k in 0..=max_size.min(n) {
        for mask in subsets_of_size(n, k) {
            let xs: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 != 0).collect();
            if is_determining_with(&g, &xs) && is_rigid(&t.induced(&xs)) {
                return Ok(Some(xs));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paley::paley_tournament;
    use crate::tournament::ConnectorSet;

    fn cyclic(p: usize, members: &[usize]) -> CyclicTournament {
        CyclicTournament::new(ConnectorSet::new(p, members).unwrap()).unwrap()
    }

    #[test]
    fn canonical_labeling_splits_the_halves() {
        let t = cyclic(6, &[2, 5, 6]);
        let lam = canonical_labeling(&t);
        assert_eq!(lam.class_sizes(), vec![7, 6]);
        assert!((0..=6).all(|u| lam.label(u) == 1));
        assert!((7..=12).all(|u| lam.label(u) == 2));
    }

    #[test]
    fn three_cycle_labelings() {
        let t = cyclic(1, &[]);
        let lam = Labeling::new(vec![1, 1, 2], 2).unwrap();
        assert!(is_distinguishing(t.tournament(), &lam));
        let flat = Labeling::new(vec![1, 1, 1], 2).unwrap();
        assert!(!is_distinguishing(t.tournament(), &flat));
    }

    #[test]
    fn preserving_equals_stabilizing_the_class() {
        for (p, members) in [(3usize, vec![3]), (6, vec![2, 5, 6]), (5, vec![1, 4])] {
            let t = CyclicTournament::new(ConnectorSet::new(p, &members).unwrap()).unwrap();
            let lam = canonical_labeling(&t);
            let lower = lam.class_mask(1);
            for phi in automorphisms(t.tournament()).elements() {
                assert_eq!(
                    preserves_labeling(phi, &lam),
                    stabilizes_set(phi, lower)
                );
            }
        }
    }

    #[test]
    fn distinguishing_numbers() {
        assert_eq!(
            distinguishing_number(&Tournament::transitive(7).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            distinguishing_number(cyclic(1, &[]).tournament()).unwrap(),
            2
        );
        assert_eq!(
            distinguishing_number(paley_tournament(7).unwrap().tournament()).unwrap(),
            2
        );
        let too_big = Tournament::transitive(40).unwrap();
        assert!(matches!(
            distinguishing_number(&too_big),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn conjecture_on_worked_examples() {
        let res = check_conjecture(&cyclic(6, &[2, 5, 6]), CheckMode::Brute);
        assert!(res.holds && res.witness.is_none());
        assert_eq!(res.method, Method::Brute);

        let res = check_conjecture(&cyclic(6, &[2, 5, 6]), CheckMode::Certified);
        assert!(res.holds);
        assert_eq!(res.method, Method::Certificate(Rule::RotationGroup));

        let res = check_conjecture(&cyclic(3, &[3]), CheckMode::Certified);
        assert_eq!(res.method, Method::Certificate(Rule::FewConnectors));
    }

    #[test]
    fn costs() {
        assert_eq!(
            distinguishing_cost(cyclic(1, &[]).tournament()).unwrap(),
            1
        );
        assert_eq!(
            distinguishing_cost(paley_tournament(7).unwrap().tournament()).unwrap(),
            2
        );
        assert_eq!(
            distinguishing_cost(&Tournament::transitive(5).unwrap()),
            Err(Error::CostOfRigid)
        );
    }

    #[test]
    fn cost_matches_brute_force_over_all_two_labelings() {
        // oracle: scan every 2-labeling, keep the best distinguishing one
        for (p, members) in [(1usize, vec![]), (2, vec![2]), (3, vec![3])] {
            let t = CyclicTournament::new(ConnectorSet::new(p, &members).unwrap()).unwrap();
            let base = t.tournament();
            let n = base.n();
            let g = automorphisms(base);
            let mut best = None;
            for mask in 0..1u64 << n {
                let lab = Labeling::from_class_mask(n, mask);
                let ok = g
                    .nontrivial()
                    .iter()
                    .all(|phi| !preserves_labeling(phi, &lab));
                if ok {
                    let small = (mask.count_ones() as usize).min(n - mask.count_ones() as usize);
                    best = Some(best.map_or(small, |b: usize| b.min(small)));
                }
            }
            assert_eq!(distinguishing_cost(base).ok(), best);
        }
    }

    #[test]
    fn determining_sets() {
        let three = cyclic(1, &[]);
        assert!(!is_determining_set(three.tournament(), &[]));
        assert!(is_determining_set(three.tournament(), &[0]));
        let tt5 = Tournament::transitive(5).unwrap();
        assert!(is_determining_set(&tt5, &[]));
        assert!(is_rigid_determining_set(&tt5, &[]));
        assert_eq!(min_rigid_determining_set(&tt5, 5).unwrap(), Some(vec![]));
    }

    #[test]
    fn rigid_determining_sets_on_paley_seven() {
        let t = paley_tournament(7).unwrap();
        let base = t.tournament();
        for u in 0..7 {
            for v in u + 1..7 {
                assert!(is_rigid_determining_set(base, &[u, v]), "pair ({u},{v})");
            }
        }
        // single vertices are not enough: the point stabilizer is Z_3
        assert!(!is_determining_set(base, &[0]));
        let min = min_rigid_determining_set(base, 7).unwrap().unwrap();
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn rigid_half_gives_a_small_rigid_determining_set() {
        // lower half rigid: {0..p} determines everything and is rigid
        let t = cyclic(4, &[4]);
        let base = t.tournament();
        let p = t.p();
        let lower: Vec<usize> = (0..=p).collect();
        assert!(is_rigid_determining_set(base, &lower));
        let min = min_rigid_determining_set(base, p + 1).unwrap().unwrap();
        assert!(min.len() <= p + 1);
    }

    #[test]
    fn determining_bridge_to_labelings() {
        // a rigid determining set, used as a label class, distinguishes
        let t = paley_tournament(7).unwrap();
        let base = t.tournament();
        for mask in subsets_of_size(7, 2) {
            let xs: Vec<usize> = (0..7).filter(|&u| mask >> u & 1 != 0).collect();
            if is_rigid_determining_set(base, &xs) {
                assert!(is_distinguishing(base, &Labeling::from_class_mask(7, mask)));
            }
        }
    }

    #[test]
    fn subset_enumeration_is_colex_and_complete() {
        let all: Vec<u64> = subsets_of_size(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], 0b00011);
        assert_eq!(*all.last().unwrap(), 0b11000);
        assert_eq!(subsets_of_size(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(4, 4).collect::<Vec<_>>(), vec![0b1111]);
    }

    #[test]
    #[should_panic(expected = "labeling size mismatch")]
    fn mismatched_labeling_panics() {
        let t = cyclic(1, &[]);
        let lam = Labeling::new(vec![1, 2], 2).unwrap();
        is_distinguishing(t.tournament(), &lam);
    }
}
