//! Automorphism groups of tournaments.
//!
//! The search assigns images vertex by vertex, restricted to indegree
//! classes and pruned by arc consistency against everything already
//! assigned. Candidates are tried in ascending order, so elements come out
//! in lexicographic image order and the identity is always element 0.
//!
//! Tournament groups are odd: a hypothetical involution would have to fix
//! the arc between some swapped pair in both directions.

use crate::error::Error;
use crate::perm::Permutation;
use crate::tournament::{PseudoCyclicTournament, Tournament};

/// The full automorphism group of one tournament, elements in
/// lexicographic image order with the identity first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomorphismGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Everything except the identity.
    pub fn nontrivial(&self) -> &[Permutation] {
        &self.elements[1..]
    }

    pub fn contains(&self, phi: &Permutation) -> bool {
        self.elements.binary_search(phi).is_ok()
    }

    /// Vertices fixed by every element of the group.
    pub fn fixed_by_all(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.elements.iter().all(|phi| phi.apply(u) == u))
            .collect()
    }
}

/// Enumerates the automorphism group. Exhaustive and exact; meant for the
/// few dozen vertices this crate works at.
pub fn automorphisms(t: &Tournament) -> AutomorphismGroup {
    let elements = search(t, None);
    debug_assert!(elements[0].is_identity());
    AutomorphismGroup { n: t.n(), elements }
}

/// True when the identity is the only automorphism. Stops searching as
/// soon as a second element shows up.
pub fn is_rigid(t: &Tournament) -> bool {
    search(t, Some(2)).len() < 2
}

/// Arc-preservation check for an arbitrary permutation.
pub fn is_automorphism(t: &Tournament, phi: &Permutation) -> bool {
    if phi.n() != t.n() {
        return false;
    }
    for u in 0..t.n() {
        for v in u + 1..t.n() {
            if t.has_arc(u, v) != t.has_arc(phi.apply(u), phi.apply(v)) {
                return false;
            }
        }
    }
    true
}

/// The reflected automorphism of a pseudo-cyclic tournament:
/// `phi*(i) = p - phi(p - i)`. Always another automorphism, and an
/// involution of the group. Rejects `phi` outside `Aut(P)`.
pub fn mirror(pt: &PseudoCyclicTournament, phi: &Permutation) -> Result<Permutation, Error> {
    if phi.n() != pt.n() || !is_automorphism(pt.tournament(), phi) {
        return Err(Error::NotAutomorphism);
    }
    let p = pt.p();
    let image = (0..=p).map(|i| p - phi.apply(p - i)).collect();
    let reflected = Permutation::new(image).expect("reflection of a bijection");
    debug_assert!(is_automorphism(pt.tournament(), &reflected));
    Ok(reflected)
}

fn search(t: &Tournament, stop_at: Option<usize>) -> Vec<Permutation> {
    let n = t.n();
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    // Image candidates per vertex: anything with the same indegree.
    let degs: Vec<usize> = (0..n).map(|u| t.indegree(u)).collect();
    let cand: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| degs[v] == degs[u])
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    let mut state = Search {
        t,
        cand: &cand,
        image: vec![0; n],
        used: 0,
        found: Vec::new(),
        stop_at,
    };
    state.assign(0);
    state.found
}

struct Search<'a> {
    t: &'a Tournament,
    cand: &'a [u64],
    image: Vec<usize>,
    used: u64,
    found: Vec<Permutation>,
    stop_at: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.stop_at.is_some_and(|k| self.found.len() >= k)
    }

    fn assign(&mut self, u: usize) {
        if u == self.t.n() {
            self.found
                .push(Permutation::from_image_unchecked(self.image.clone()));
            return;
        }
        let mut avail = self.cand[u] & !self.used;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            if (0..u).all(|w| {
                self.t.has_arc(w, u) == self.t.has_arc(self.image[w], v)
            }) {
                self.image[u] = v;
                self.used |= 1 << v;
                self.assign(u + 1);
                self.used &= !(1 << v);
                if self.done() {
                    return;
                }
            }
        }
    }
}
