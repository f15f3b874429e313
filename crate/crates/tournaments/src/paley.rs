//! Quadratic-residue tournaments.
//!
//! For a prime `n = 3 (mod 4)`, exactly one of `d`, `n - d` is a nonzero
//! square mod `n`, so "arc `u -> v` iff `v - u` is a square" orients every
//! pair. The backward connectors are the non-squares in `1..=p`.

use crate::error::Error;
use crate::tournament::{ConnectorSet, CyclicTournament};

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The nonzero quadratic residues mod `n`, ascending.
pub fn quadratic_residues(n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    for k in 1..n {
        seen[k * k % n] = true;
    }
    (1..n).filter(|&r| seen[r]).collect()
}

/// Builds the quadratic-residue tournament on `n` vertices. `n` must be a
/// prime congruent to 3 mod 4 (otherwise residues come in `d, n-d` pairs
/// and do not orient the pairs).
pub fn paley_tournament(n: usize) -> Result<CyclicTournament, Error> {
    if !is_prime(n) || n % 4 != 3 {
        return Err(Error::NotPaleyModulus(n));
    }
    let p = n / 2;
    let squares = quadratic_residues(n);
    let neg: Vec<usize> = (1..=p).filter(|d| !squares.contains(d)).collect();
    CyclicTournament::new(ConnectorSet::new(p, &neg)?)
}

/// Decomposes `phi` as the affine map `i -> a*i + b (mod n)` if it is one,
/// returning `(a, b)`.
pub fn as_affine(phi: &crate::perm::Permutation, n: usize) -> Option<(usize, usize)> {
    if phi.n() != n || n == 0 {
        return None;
    }
    let b = phi.apply(0);
    let a = (phi.apply(1) + n - b) % n;
    for i in 0..n {
        if phi.apply(i) != (a * i + b) % n {
            return None;
        }
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn residues_mod_seven_and_eleven() {
        assert_eq!(quadratic_residues(7), vec![1, 2, 4]);
        assert_eq!(quadratic_residues(11), vec![1, 3, 4, 5, 9]);
    }

    #[test]
    fn paley_connector_sets() {
        assert_eq!(paley_tournament(7).unwrap().neg().members(), vec![3]);
        assert_eq!(paley_tournament(11).unwrap().neg().members(), vec![2]);
        assert_eq!(paley_tournament(19).unwrap().neg().members(), vec![2, 3, 8]);
        assert_eq!(paley_tournament(23).unwrap().neg().members(), vec![5, 7, 10, 11]);
    }

    #[test]
    fn paley_arcs_are_square_differences() {
        let t = paley_tournament(11).unwrap();
        let squares = quadratic_residues(11);
        for u in 0..11 {
            for v in 0..11 {
                if u != v {
                    let d = (v + 11 - u) % 11;
                    assert_eq!(t.tournament().has_arc(u, v), squares.contains(&d));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        for n in [1usize, 2, 4, 5, 9, 13, 15, 21] {
            assert!(paley_tournament(n).is_err(), "n={n} should be rejected");
        }
    }

    #[test]
    fn affine_recognition() {
        let n = 7;
        let double_shift = crate::perm::Permutation::new(
            (0..n).map(|i| (2 * i + 3) % n).collect(),
        )
        .unwrap();
        assert_eq!(as_affine(&double_shift, n), Some((2, 3)));
        let swap = crate::perm::Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        assert_eq!(as_affine(&swap, n), None);
    }
}
