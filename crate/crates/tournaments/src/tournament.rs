//! Bit-packed tournaments and the two rotational constructions.
//!
//! A tournament on `n` vertices keeps one `u64` row per vertex, bit `v` of
//! row `u` set iff the arc `u -> v` is present. Everything downstream
//! (automorphism search, certificates, labelings) works on vertex sets as
//! single machine words, which is why `n` is capped at [`MAX_VERTICES`].
//!
//! The two constructions:
//!
//! * [`CyclicTournament`]: vertices `0..=2p`, arcs decided by which
//!   differences in `1..=p` are "backward" connectors. Rotation `i -> i+1`
//!   (mod `2p+1`) is always an automorphism.
//! * [`PseudoCyclicTournament`]: vertices `0..=p`, arc `i -> j` for `i > j`
//!   iff `i - j` is a backward connector, otherwise `j -> i`. These are
//!   exactly the sub-tournaments induced by a cyclic tournament on its two
//!   halves `{0..p}` and `{p+1..2p}`.

use std::fmt;

use crate::error::Error;

/// Vertex-count cap so a vertex set always fits in one `u64`.
pub const MAX_VERTICES: usize = 63;

fn low_bits(k: usize) -> u64 {
    debug_assert!(k <= 64);
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

// ======================================================================
// Tournament
// ======================================================================

/// An orientation of the complete graph, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    rows: Vec<u64>,
}

impl Tournament {
    /// Builds from out-neighbor rows, validating that every vertex pair
    /// carries exactly one arc and no vertex carries a loop.
    pub fn from_out_rows(rows: Vec<u64>) -> Result<Self, Error> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (u, &row) in rows.iter().enumerate() {
            if row & !low_bits(n) != 0 {
                return Err(Error::NotATournament(format!(
                    "row {u} refers to vertices outside 0..{n}"
                )));
            }
            if row >> u & 1 != 0 {
                return Err(Error::NotATournament(format!("vertex {u} has a loop")));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if (rows[u] >> v ^ rows[v] >> u) & 1 != 1 {
                    return Err(Error::NotATournament(format!(
                        "pair {{{u},{v}}} does not carry exactly one arc"
                    )));
                }
            }
        }
        Ok(Tournament { n, rows })
    }

    /// The transitive tournament: arc `u -> v` iff `u < v`.
    pub fn transitive(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let rows = (0..n).map(|u| low_bits(n) & !low_bits(u + 1)).collect();
        Ok(Tournament { n, rows })
    }

    /// The transitive tournament with its spanning arc `0 -> n-1` reversed.
    pub fn almost_transitive(n: usize) -> Result<Self, Error> {
        let mut t = Self::transitive(n)?;
        if n >= 2 {
            t.rows[0] &= !(1 << (n - 1));
            t.rows[n - 1] |= 1;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Panics if `u` or `v` is out of range. `has_arc(u, u)` is false.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u] >> v & 1 != 0
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> u64 {
        assert!(u < self.n, "vertex out of range");
        self.rows[u]
    }

    pub fn in_neighbors(&self, u: usize) -> u64 {
        assert!(u < self.n, "vertex out of range");
        let mut mask = 0;
        for v in 0..self.n {
            mask |= (self.rows[v] >> u & 1) << v;
        }
        mask
    }

    pub fn outdegree(&self, u: usize) -> usize {
        self.out_neighbors(u).count_ones() as usize
    }

    pub fn indegree(&self, u: usize) -> usize {
        self.in_neighbors(u).count_ones() as usize
    }

    /// `(indegree, outdegree)`; the two always sum to `n - 1`.
    pub fn degrees(&self, u: usize) -> (usize, usize) {
        (self.indegree(u), self.outdegree(u))
    }

    /// The tournament with every arc reversed.
    pub fn converse(&self) -> Tournament {
        let rows = (0..self.n).map(|u| self.in_neighbors(u)).collect();
        Tournament { n: self.n, rows }
    }

    /// Sub-tournament induced by `verts`, relabeled `0..verts.len()` in the
    /// order given. Panics on duplicates or out-of-range vertices.
    pub fn induced(&self, verts: &[usize]) -> Tournament {
        let k = verts.len();
        let mut seen = 0u64;
        for &v in verts {
            assert!(v < self.n, "vertex out of range");
            assert!(seen >> v & 1 == 0, "duplicate vertex {v}");
            seen |= 1 << v;
        }
        let mut rows = vec![0u64; k];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if a != b && self.rows[u] >> v & 1 != 0 {
                    rows[a] |= 1 << b;
                }
            }
        }
        Tournament { n: k, rows }
    }

    /// Serializes to the line-oriented literal: first line the vertex
    /// count, then one line of ascending out-neighbors per vertex.
    pub fn to_literal(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for u in 0..self.n {
            let outs: Vec<String> = (0..self.n)
                .filter(|&v| self.rows[u] >> v & 1 != 0)
                .map(|v| v.to_string())
                .collect();
            s.push_str(&outs.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the format written by [`Tournament::to_literal`]. Missing
    /// trailing lines are read as empty out-neighbor lists; the tournament
    /// validation catches any genuinely absent arcs.
    pub fn parse_literal(input: &str) -> Result<Self, Error> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::BadLiteral("empty input".into()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::BadLiteral(format!("bad vertex count `{}`", header.trim())))?;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for (u, row) in rows.iter_mut().enumerate() {
            let line = lines.next().unwrap_or("");
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::BadLiteral(format!("bad vertex `{tok}` on line {}", u + 2)))?;
                if v >= n {
                    return Err(Error::BadLiteral(format!(
                        "vertex {v} out of range on line {}",
                        u + 2
                    )));
                }
                *row |= 1 << v;
            }
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::BadLiteral(format!("trailing content `{extra}`")));
        }
        Self::from_out_rows(rows)
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, rows={:x?})", self.n, self.rows)
    }
}

// ======================================================================
// ConnectorSet
// ======================================================================

/// A set of backward connectors: a subset of `{1, ..., p}` stored as a
/// bitmask (bit `s-1` set iff `s` is a member).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectorSet {
    p: usize,
    mask: u64,
}

impl ConnectorSet {
    pub fn new(p: usize, members: &[usize]) -> Result<Self, Error> {
        let mut set = Self::empty(p)?;
        for &s in members {
            if s < 1 || s > p {
                return Err(Error::ConnectorOutOfRange { connector: s, p });
            }
            set.mask |= 1 << (s - 1);
        }
        Ok(set)
    }

    pub fn empty(p: usize) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::ZeroHalfOrder);
        }
        if p > MAX_VERTICES {
            return Err(Error::TooManyVertices(p));
        }
        Ok(ConnectorSet { p, mask: 0 })
    }

    /// Builds from a membership bitmask (bit `s-1` is connector `s`).
    pub fn from_mask(p: usize, mask: u64) -> Result<Self, Error> {
        let mut set = Self::empty(p)?;
        if mask & !low_bits(p) != 0 {
            return Err(Error::ConnectorOutOfRange {
                connector: 64 - mask.leading_zeros() as usize,
                p,
            });
        }
        set.mask = mask;
        Ok(set)
    }

    /// Parses a comma-separated list like `2,5,6`. An empty or
    /// whitespace-only string is the empty set.
    pub fn parse(p: usize, list: &str) -> Result<Self, Error> {
        let trimmed = list.trim();
        if trimmed.is_empty() {
            return Self::empty(p);
        }
        let mut members = Vec::new();
        for tok in trimmed.split(',') {
            let s: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::BadConnectorList(list.to_string()))?;
            members.push(s);
        }
        Self::new(p, &members)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Membership test; false for anything outside `1..=p`.
    #[inline]
    pub fn contains(&self, s: usize) -> bool {
        s >= 1 && s <= self.p && self.mask >> (s - 1) & 1 != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=self.p).filter(|&s| self.contains(s)).collect()
    }

    pub fn smallest(&self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize + 1)
        }
    }

    pub fn largest(&self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(64 - self.mask.leading_zeros() as usize)
        }
    }

    /// Complement within `{1, ..., p}`.
    pub fn complement(&self) -> ConnectorSet {
        ConnectorSet {
            p: self.p,
            mask: !self.mask & low_bits(self.p),
        }
    }

    /// `Some((lo, hi))` if the members are exactly the run `lo..=hi`.
    pub fn as_interval(&self) -> Option<(usize, usize)> {
        let (lo, hi) = (self.smallest()?, self.largest()?);
        if hi - lo + 1 == self.len() {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Removes `p` from the set, shrinking the range to `{1, ..., p-1}`.
    /// Returns `None` when `p == 1` (the shrunken range would be empty).
    pub fn shrink(&self) -> Option<ConnectorSet> {
        if self.p == 1 {
            None
        } else {
            Some(ConnectorSet {
                p: self.p - 1,
                mask: self.mask & low_bits(self.p - 1),
            })
        }
    }
}

impl fmt::Display for ConnectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.members().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ConnectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectorSet(p={}, {})", self.p, self)
    }
}

// ======================================================================
// CyclicTournament
// ======================================================================

/// The rotational tournament on `0..=2p` determined by a backward-connector
/// set. For `i < j` the arc runs `i -> j` iff either `j - i <= p` and
/// `j - i` is not a connector, or `j - i > p` and `2p + 1 - (j - i)` is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicTournament {
    neg: ConnectorSet,
    base: Tournament,
}

impl CyclicTournament {
    pub fn new(neg: ConnectorSet) -> Result<Self, Error> {
        let p = neg.p();
        let n = 2 * p + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                let d = j - i;
                let forward = if d <= p {
                    !neg.contains(d)
                } else {
                    neg.contains(n - d)
                };
                if forward {
                    rows[i] |= 1 << j;
                } else {
                    rows[j] |= 1 << i;
                }
            }
        }
        Ok(CyclicTournament {
            neg,
            base: Tournament { n, rows },
        })
    }

    pub fn p(&self) -> usize {
        self.neg.p()
    }

    /// Vertex count `2p + 1`.
    pub fn order(&self) -> usize {
        2 * self.neg.p() + 1
    }

    pub fn neg(&self) -> ConnectorSet {
        self.neg
    }

    pub fn tournament(&self) -> &Tournament {
        &self.base
    }

    /// The forward difference set: arc `u -> v` iff `(v - u) mod (2p+1)` is
    /// in this set. Union of the non-connectors in `1..=p` and the wrapped
    /// images `2p+1-s` of the connectors.
    pub fn arc_difference_set(&self) -> Vec<usize> {
        let p = self.p();
        let n = self.order();
        let mut out: Vec<usize> = (1..=p).filter(|&d| !self.neg.contains(d)).collect();
        out.extend(self.neg.members().iter().map(|&s| n - s));
        out.sort_unstable();
        out
    }

    /// Sub-tournament on `lo..=hi`, relabeled from 0.
    pub fn induced_interval(&self, lo: usize, hi: usize) -> Result<Tournament, Error> {
        if lo >= hi || hi >= self.order() {
            return Err(Error::BadInterval {
                lo,
                hi,
                n: self.order(),
            });
        }
        let verts: Vec<usize> = (lo..=hi).collect();
        Ok(self.base.induced(&verts))
    }

    /// Sub-tournament on `{0, ..., p}`.
    pub fn lower_half(&self) -> Tournament {
        self.induced_interval(0, self.p()).unwrap()
    }

    /// Sub-tournament on `{p+1, ..., 2p}`; a single vertex when `p == 1`.
    pub fn upper_half(&self) -> Tournament {
        let p = self.p();
        let verts: Vec<usize> = (p + 1..=2 * p).collect();
        self.base.induced(&verts)
    }

    /// The lower half as a pseudo-cyclic tournament: it equals
    /// `P(p; neg)` arc for arc.
    pub fn lower_pseudo(&self) -> PseudoCyclicTournament {
        PseudoCyclicTournament::new(self.neg).expect("p fits because 2p+1 already did")
    }

    /// The upper half as a pseudo-cyclic tournament on `p - 1`:
    /// `P(p-1; neg \ {p})`. `None` when `p == 1` and the half is a point.
    pub fn upper_pseudo(&self) -> Option<PseudoCyclicTournament> {
        let shrunk = self.neg.shrink()?;
        Some(PseudoCyclicTournament::new(shrunk).expect("p-1 fits because 2p+1 already did"))
    }
}

impl fmt::Display for CyclicTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({};{})", self.order(), self.neg)
    }
}

// ======================================================================
// PseudoCyclicTournament
// ======================================================================

/// The tournament on `0..=p` whose backward arcs are exactly the connector
/// differences: for `i > j`, arc `i -> j` iff `i - j` is a connector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PseudoCyclicTournament {
    neg: ConnectorSet,
    base: Tournament,
}

impl PseudoCyclicTournament {
    pub fn new(neg: ConnectorSet) -> Result<Self, Error> {
        let p = neg.p();
        let n = p + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for j in 0..n {
            for i in j + 1..n {
                if neg.contains(i - j) {
                    rows[i] |= 1 << j;
                } else {
                    rows[j] |= 1 << i;
                }
            }
        }
        Ok(PseudoCyclicTournament {
            neg,
            base: Tournament { n, rows },
        })
    }

    pub fn p(&self) -> usize {
        self.neg.p()
    }

    /// Vertex count `p + 1`.
    pub fn n(&self) -> usize {
        self.neg.p() + 1
    }

    pub fn neg(&self) -> ConnectorSet {
        self.neg
    }

    pub fn tournament(&self) -> &Tournament {
        &self.base
    }

    /// The converse is again pseudo-cyclic, on the complementary
    /// connector set.
    pub fn converse(&self) -> PseudoCyclicTournament {
        PseudoCyclicTournament::new(self.neg.complement()).expect("same p")
    }
}

impl fmt::Display for PseudoCyclicTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({};{})", self.p(), self.neg)
    }
}

// ======================================================================
// Tests
// ======================================================================
