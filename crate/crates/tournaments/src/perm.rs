//! Permutations of `0..n` with the composition convention
//! `(a * b)(u) = a(b(u))`: the right factor acts first.

use std::fmt;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates that `image` is a bijection of `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::NotABijection);
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from disjoint cycles over `0..n`; entries absent from every
    /// cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &u) in cycle.iter().enumerate() {
                if u >= n || touched[u] {
                    return Err(Error::NotABijection);
                }
                touched[u] = true;
                image[u] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, u: usize) -> usize {
        self.image[u]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(u, &v)| u == v)
    }

    /// `(self ∘ other)(u) = self(other(u))`. Panics on size mismatch.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "mismatched permutation sizes");
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (u, &v) in self.image.iter().enumerate() {
            image[v] = u;
        }
        Permutation { image }
    }

    /// Cycle decomposition: every cycle starts at its smallest element,
    /// cycles sorted by that element, fixed points included as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut u = self.image[start];
            while u != start {
                seen[u] = true;
                cycle.push(u);
                u = self.image[u];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.image[u] == u).collect()
    }

    /// Image of a vertex set given as a bitmask.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.image[u];
        }
        out
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, u) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{u}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}
