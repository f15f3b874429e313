//! Sufficient conditions under which the canonical half/half labeling of a
//! cyclic tournament is provably distinguishing, without enumerating the
//! label-preserving automorphisms of the full tournament.
//!
//! Each rule returns [`CertificateVerdict::Proved`] with a witness, or
//! [`CertificateVerdict::Inapplicable`]; rules never report failure of the
//! conjecture. [`certify`] dispatches them cheapest first. Every witness
//! can be re-checked after the fact with [`verify_witness`], which leans on
//! plain group enumeration and set arithmetic rather than on the rule's own
//! reasoning.

use std::fmt;

use crate::automorphism::{automorphisms, is_rigid};
use crate::indegree::{indegree_classes, profile};
use crate::paley::{is_prime, quadratic_residues};
use crate::tournament::{CyclicTournament, PseudoCyclicTournament, Tournament};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Rule {
    FewConnectors,
    MinConnector,
    Interval,
    IntervalComplement,
    Paley,
    AscentPlateau,
    RigidHalf,
    IndegreeClassesRigid,
    RotationGroup,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::FewConnectors => "FewConnectors",
            Rule::MinConnector => "MinConnector",
            Rule::Interval => "Interval",
            Rule::IntervalComplement => "IntervalComplement",
            Rule::Paley => "Paley",
            Rule::AscentPlateau => "AscentPlateau",
            Rule::RigidHalf => "RigidHalf",
            Rule::IndegreeClassesRigid => "IndegreeClassesRigid",
            Rule::RotationGroup => "RotationGroup",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which half of `{0..2p}` a half-specific certificate talks about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Half {
    /// `{0, ..., p}`
    Lower,
    /// `{p+1, ..., 2p}`
    Upper,
}

/// Rule-specific evidence attached to a proved verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// The named half has a trivial automorphism group.
    RigidHalf { half: Half },
    /// `case` 1: all of `Aut(T)` is the rotation group. Cases 2 and 3: the
    /// connector pattern plus the order of the named half's group force
    /// label-preserving maps to fix a half pointwise.
    RotationGroup { case: u8, group_order: usize },
    /// Every indegree class of the named half induces a rigid
    /// sub-tournament.
    IndegreeClassesRigid { half: Half },
    /// The smallest connector outweighs twice the connector count.
    MinConnector { smallest: usize, count: usize },
    /// `dense` distinguishes the at-least-`p-1` side from the at-most-2
    /// side.
    FewConnectors { count: usize, dense: bool },
    /// Connectors form exactly the run `lo..=hi`.
    Interval { lo: usize, hi: usize },
    /// Connectors are `{1..=head_end}` plus `{tail_start..=p}`.
    IntervalComplement { head_end: usize, tail_start: usize },
    /// Arc differences are exactly the nonzero squares mod `modulus`.
    Paley { modulus: usize, residues: Vec<usize> },
    /// The steps of the indegree sequence satisfy the rigidity shape
    /// conditions; `half` is `None` when a pseudo-cyclic tournament was
    /// checked directly rather than as a half of a cyclic one.
    AscentPlateau {
        half: Option<Half>,
        ascents: usize,
        descents: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertificateVerdict {
    Proved { rule: Rule, witness: Witness },
    Inapplicable,
}

impl CertificateVerdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, CertificateVerdict::Proved { .. })
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            CertificateVerdict::Proved { rule, .. } => Some(*rule),
            CertificateVerdict::Inapplicable => None,
        }
    }
}

fn half_tournament(t: &CyclicTournament, half: Half) -> Tournament {
    match half {
        Half::Lower => t.lower_half(),
        Half::Upper => t.upper_half(),
    }
}

// ======================================================================
// Individual rules
// ======================================================================

/// A label-preserving automorphism restricts to each half; if either half
/// is rigid, both restrictions are forced to the identity.
pub fn cert_rigid_half(t: &CyclicTournament) -> CertificateVerdict {
    for half in [Half::Lower, Half::Upper] {
        if is_rigid(&half_tournament(t, half)) {
            return CertificateVerdict::Proved {
                rule: Rule::RigidHalf,
                witness: Witness::RigidHalf { half },
            };
        }
    }
    CertificateVerdict::Inapplicable
}

/// Case 1: the whole group is the rotation group of order `2p+1`, and no
/// nontrivial rotation preserves the halves. Cases 2 and 3: with a
/// balanced, reflection-free connector pattern, one half's group consists
/// of rotations only, which a label-preserving automorphism cannot use.
pub fn cert_rotation_group(t: &CyclicTournament) -> CertificateVerdict {
    let p = t.p();
    let neg = t.neg();
    let n = t.order();

    if automorphisms(t.tournament()).order() == n {
        return CertificateVerdict::Proved {
            rule: Rule::RotationGroup,
            witness: Witness::RotationGroup {
                case: 1,
                group_order: n,
            },
        };
    }

    if p % 2 == 0
        && neg.len() == p / 2
        && neg.members().iter().all(|&s| !neg.contains(p + 1 - s))
    {
        let order = automorphisms(&t.lower_half()).order();
        if order == p + 1 {
            return CertificateVerdict::Proved {
                rule: Rule::RotationGroup,
                witness: Witness::RotationGroup {
                    case: 2,
                    group_order: order,
                },
            };
        }
    }

    if p % 2 == 1
        && neg.len() - usize::from(neg.contains(p)) == (p - 1) / 2
        && neg.members().iter().all(|&s| s == p || !neg.contains(p - s))
    {
        let order = automorphisms(&t.upper_half()).order();
        if order == p {
            return CertificateVerdict::Proved {
                rule: Rule::RotationGroup,
                witness: Witness::RotationGroup {
                    case: 3,
                    group_order: order,
                },
            };
        }
    }

    CertificateVerdict::Inapplicable
}

/// A label-preserving automorphism permutes each indegree class of each
/// half; rigid classes leave it nowhere to move.
pub fn cert_indegree_classes(t: &CyclicTournament) -> CertificateVerdict {
    for half in [Half::Lower, Half::Upper] {
        let sub = half_tournament(t, half);
        let all_rigid = indegree_classes(&sub)
            .values()
            .all(|class| is_rigid(&sub.induced(class)));
        if all_rigid {
            return CertificateVerdict::Proved {
                rule: Rule::IndegreeClassesRigid,
                witness: Witness::IndegreeClassesRigid { half },
            };
        }
    }
    CertificateVerdict::Inapplicable
}

/// Pure arithmetic: `min(neg) > 2 |neg|` forces rigidity of the lower
/// half.
pub fn cert_min_connector(t: &CyclicTournament) -> CertificateVerdict {
    let neg = t.neg();
    match neg.smallest() {
        Some(smallest) if smallest > 2 * neg.len() => CertificateVerdict::Proved {
            rule: Rule::MinConnector,
            witness: Witness::MinConnector {
                smallest,
                count: neg.len(),
            },
        },
        _ => CertificateVerdict::Inapplicable,
    }
}

/// At most two connectors, or (through the converse) at least `p - 1`.
pub fn cert_few_connectors(t: &CyclicTournament) -> CertificateVerdict {
    let count = t.neg().len();
    let p = t.p();
    if count <= 2 {
        CertificateVerdict::Proved {
            rule: Rule::FewConnectors,
            witness: Witness::FewConnectors {
                count,
                dense: false,
            },
        }
    } else if count >= p - 1 {
        CertificateVerdict::Proved {
            rule: Rule::FewConnectors,
            witness: Witness::FewConnectors { count, dense: true },
        }
    } else {
        CertificateVerdict::Inapplicable
    }
}

/// Connector sets that form one run `lo..=hi`, or whose complement does
/// while they touch both ends of `1..=p` (the converse picture). The empty
/// set is left to [`cert_few_connectors`].
pub fn cert_interval(t: &CyclicTournament) -> CertificateVerdict {
    let neg = t.neg();
    let p = t.p();
    if neg.is_empty() {
        return CertificateVerdict::Inapplicable;
    }
    if let Some((lo, hi)) = neg.as_interval() {
        return CertificateVerdict::Proved {
            rule: Rule::Interval,
            witness: Witness::Interval { lo, hi },
        };
    }
    if let Some((lo, hi)) = neg.complement().as_interval() {
        if lo >= 2 && hi <= p - 1 {
            return CertificateVerdict::Proved {
                rule: Rule::IntervalComplement,
                witness: Witness::IntervalComplement {
                    head_end: lo - 1,
                    tail_start: hi + 1,
                },
            };
        }
    }
    CertificateVerdict::Inapplicable
}

/// Arc differences equal to the nonzero squares modulo a prime that is
/// 3 mod 4: the group is then the odd half of the affine maps and the
/// canonical labeling breaks all of it.
pub fn cert_paley(t: &CyclicTournament) -> CertificateVerdict {
    let n = t.order();
    if !is_prime(n) || n % 4 != 3 {
        return CertificateVerdict::Inapplicable;
    }
    let residues = quadratic_residues(n);
    if t.arc_difference_set() == residues {
        CertificateVerdict::Proved {
            rule: Rule::Paley,
            witness: Witness::Paley {
                modulus: n,
                residues,
            },
        }
    } else {
        CertificateVerdict::Inapplicable
    }
}

/// Shape-only rigidity test for a pseudo-cyclic tournament, no group
/// enumeration. Proved requires:
///
/// 1. at least one non-plateau step,
/// 2. no ascent/descent mix,
/// 3. every equal-indegree run of `k >= 3` vertices ending strictly below
///    `p/2` has all of `i+1..=i+k-1` or all of `p-i-k+2..=p-i` among the
///    connectors,
/// 4. every run centered on `p/2` (even `p`) has all of `p/2-q+1..=p/2` or
///    all of `p/2+1..=p/2+q` among them.
///
/// Runs of two vertices below the middle are exempt from (3); runs in the
/// upper half are reflections of lower ones and carry no extra condition.
pub fn pseudo_rigidity_by_shape(pt: &PseudoCyclicTournament) -> CertificateVerdict {
    let p = pt.p();
    let neg = pt.neg();
    let prof = profile(pt);
    let (ascents, descents) = (prof.ascents(), prof.descents());
    if ascents + descents == 0 || (ascents > 0 && descents > 0) {
        return CertificateVerdict::Inapplicable;
    }
    for span in prof.spans() {
        let (i, end) = (span.start, span.end());
        if 2 * end < p {
            if span.len >= 3 {
                let left = (i + 1..=end).all(|s| neg.contains(s));
                let right = (p - end + 1..=p - i).all(|s| neg.contains(s));
                if !left && !right {
                    return CertificateVerdict::Inapplicable;
                }
            }
        } else if 2 * i < p {
            // A run that touches the middle is centered on it: the values
            // mirror through d(i) + d(p-i) = p, so it cannot stop short on
            // one side.
            debug_assert!(i + end == p && p % 2 == 0);
            let mid = p / 2;
            let left = (i + 1..=mid).all(|s| neg.contains(s));
            let right = (mid + 1..=end).all(|s| neg.contains(s));
            if !left && !right {
                return CertificateVerdict::Inapplicable;
            }
        }
        // runs entirely above the middle: covered by their mirror image
    }
    CertificateVerdict::Proved {
        rule: Rule::AscentPlateau,
        witness: Witness::AscentPlateau {
            half: None,
            ascents,
            descents,
        },
    }
}

/// Applies the shape test to each half of a cyclic tournament.
pub fn cert_ascent_plateau(t: &CyclicTournament) -> CertificateVerdict {
    let lower = pseudo_rigidity_by_shape(&t.lower_pseudo());
    if let CertificateVerdict::Proved {
        witness: Witness::AscentPlateau {
            ascents, descents, ..
        },
        ..
    } = lower
    {
        return CertificateVerdict::Proved {
            rule: Rule::AscentPlateau,
            witness: Witness::AscentPlateau {
                half: Some(Half::Lower),
                ascents,
                descents,
            },
        };
    }
    if let Some(up) = t.upper_pseudo() {
        if let CertificateVerdict::Proved {
            witness: Witness::AscentPlateau {
                ascents, descents, ..
            },
            ..
        } = pseudo_rigidity_by_shape(&up)
        {
            return CertificateVerdict::Proved {
                rule: Rule::AscentPlateau,
                witness: Witness::AscentPlateau {
                    half: Some(Half::Upper),
                    ascents,
                    descents,
                },
            };
        }
    }
    CertificateVerdict::Inapplicable
}

// ======================================================================
// Dispatch and re-verification
// ======================================================================

/// Tries every rule, cheapest first; arithmetic before shape analysis
/// before anything that enumerates a group.
pub fn certify(t: &CyclicTournament) -> CertificateVerdict {
    let rules: [fn(&CyclicTournament) -> CertificateVerdict; 8] = [
        cert_few_connectors,
        cert_min_connector,
        cert_interval,
        cert_paley,
        cert_ascent_plateau,
        cert_rigid_half,
        cert_indegree_classes,
        cert_rotation_group,
    ];
    for rule in rules {
        let verdict = rule(t);
        if verdict.is_proved() {
            debug_assert!(verify_witness(t, &verdict));
            return verdict;
        }
    }
    CertificateVerdict::Inapplicable
}

/// Independently re-checks the evidence behind a proved verdict. For the
/// arithmetic rules this re-derives the set facts; for the structural ones
/// it enumerates the relevant group from scratch. `Inapplicable` verifies
/// trivially (it claims nothing); an `AscentPlateau` witness without a half
/// does not speak about a cyclic tournament and fails.
pub fn verify_witness(t: &CyclicTournament, verdict: &CertificateVerdict) -> bool {
    let CertificateVerdict::Proved { rule, witness } = verdict else {
        return true;
    };
    let p = t.p();
    let neg = t.neg();
    match (rule, witness) {
        (Rule::RigidHalf, Witness::RigidHalf { half }) => is_rigid(&half_tournament(t, *half)),
        (Rule::RotationGroup, Witness::RotationGroup { case, group_order }) => match case {
            1 => *group_order == t.order() && automorphisms(t.tournament()).order() == t.order(),
            2 => {
                p % 2 == 0
                    && neg.len() == p / 2
                    && neg.members().iter().all(|&s| !neg.contains(p + 1 - s))
                    && *group_order == p + 1
                    && automorphisms(&t.lower_half()).order() == p + 1
            }
            3 => {
                p % 2 == 1
                    && neg.len() - usize::from(neg.contains(p)) == (p - 1) / 2
                    && neg.members().iter().all(|&s| s == p || !neg.contains(p - s))
                    && *group_order == p
                    && automorphisms(&t.upper_half()).order() == p
            }
            _ => false,
        },
        (Rule::IndegreeClassesRigid, Witness::IndegreeClassesRigid { half }) => {
            let sub = half_tournament(t, *half);
            indegree_classes(&sub)
                .values()
                .all(|class| is_rigid(&sub.induced(class)))
        }
        (Rule::MinConnector, Witness::MinConnector { smallest, count }) => {
            neg.smallest() == Some(*smallest) && neg.len() == *count && *smallest > 2 * count
        }
        (Rule::FewConnectors, Witness::FewConnectors { count, dense }) => {
            neg.len() == *count && if *dense { *count >= p - 1 } else { *count <= 2 }
        }
        (Rule::Interval, Witness::Interval { lo, hi }) => neg.as_interval() == Some((*lo, *hi)),
        (Rule::IntervalComplement, Witness::IntervalComplement { head_end, tail_start }) => {
            *head_end >= 1
                && *tail_start <= p
                && head_end + 1 < *tail_start
                && neg.members().len() == head_end + (p - tail_start + 1)
                && (1..=*head_end).all(|s| neg.contains(s))
                && (*tail_start..=p).all(|s| neg.contains(s))
        }
        (Rule::Paley, Witness::Paley { modulus, residues }) => {
            *modulus == t.order()
                && is_prime(*modulus)
                && *modulus % 4 == 3
                && *residues == quadratic_residues(*modulus)
                && t.arc_difference_set() == *residues
        }
        (Rule::AscentPlateau, Witness::AscentPlateau { half, .. }) => match half {
            // independent route: actually enumerate the half's group
            Some(h) => is_rigid(&half_tournament(t, *h)),
            None => false,
        },
        _ => false,
    }
}
