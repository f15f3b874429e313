//! Rotational tournaments, their automorphism groups, and
//! symmetry-breaking labelings.
//!
//! A cyclic tournament on `2p + 1` vertices is built from a set of
//! "backward" connectors in `1..=p`; rotating the vertex circle is always
//! an automorphism. The canonical way to break that symmetry labels the
//! lower half `{0..p}` with 1 and the upper half with 2, and the central
//! question this crate works on is whether that labeling is always
//! distinguishing, i.e. preserved by no automorphism except the identity
//! (the Albertson-Collins conjecture for this family).
//!
//! The crate provides:
//!
//! * [`tournament`]: bit-packed tournaments, the cyclic and pseudo-cyclic
//!   constructions, converses, induced intervals, text literals.
//! * [`indegree`]: closed-form indegree sequences of pseudo-cyclic
//!   tournaments, ascent/descent/plateau structure, indegree classes.
//! * [`perm`] and [`automorphism`]: exact automorphism-group enumeration,
//!   rigidity, the reflection operator on half groups.
//! * [`distinguishing`]: distinguishing labelings and numbers, the
//!   conjecture check, label cost, determining sets.
//! * [`certificates`]: sufficient conditions that prove the conjecture for
//!   an instance without filtering the full group, plus independent
//!   witness re-verification.
//! * [`sweep`]: exhaustive sweeps over all connector sets per half-order,
//!   JSONL records, converse deduplication, worker sharding.
//!
//! ```
//! use tournaments::prelude::*;
//!
//! let neg = ConnectorSet::new(6, &[2, 5, 6]).unwrap();
//! let t = CyclicTournament::new(neg).unwrap();
//! assert_eq!(automorphisms(t.tournament()).order(), 13);
//! let res = check_conjecture(&t, CheckMode::Certified);
//! assert!(res.holds);
//! ```

pub mod automorphism;
pub mod certificates;
pub mod distinguishing;
pub mod error;
pub mod indegree;
pub mod paley;
pub mod perm;
pub mod sweep;
pub mod tournament;

pub use error::Error;

pub mod prelude {
    pub use crate::automorphism::{automorphisms, is_automorphism, is_rigid, mirror};
    pub use crate::certificates::{certify, verify_witness, CertificateVerdict, Rule};
    pub use crate::distinguishing::{
        canonical_labeling, check_conjecture, distinguishing_cost, distinguishing_number,
        is_distinguishing, CheckMode, Labeling,
    };
    pub use crate::error::Error;
    pub use crate::indegree::{indegree_classes, profile, VertexKind};
    pub use crate::paley::paley_tournament;
    pub use crate::perm::Permutation;
    pub use crate::sweep::{run_sweep, SweepConfig, SweepRecord};
    pub use crate::tournament::{
        ConnectorSet, CyclicTournament, PseudoCyclicTournament, Tournament,
    };
}
