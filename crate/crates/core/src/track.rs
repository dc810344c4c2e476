//! Language-feature tags and the track classification rule.
//!
//! Benchmark encodings are tagged with the language features they use, and
//! problems are routed into one of four tracks of increasing expressiveness:
//! basic decision, advanced decision, optimization, and unrestricted.

use alloc::vec::Vec;
use core::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A language feature used by a benchmark encoding.
///
/// `ChoiceBounded` marks choice rules with non-trivial cardinality bounds and
/// only appears together with `Choice`. `NonHcfDisj` marks disjunction that is
/// not head-cycle-free and only appears together with `Disj`; it is supplied
/// by the benchmark author, never inferred from program text.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FeatureTag {
    Basic,
    Aggr,
    Choice,
    ChoiceBounded,
    Disj,
    NonHcfDisj,
    Nontight,
    Level,
}

impl FeatureTag {
    const ALL: [FeatureTag; 8] = [
        FeatureTag::Basic,
        FeatureTag::Aggr,
        FeatureTag::Choice,
        FeatureTag::ChoiceBounded,
        FeatureTag::Disj,
        FeatureTag::NonHcfDisj,
        FeatureTag::Nontight,
        FeatureTag::Level,
    ];

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// The tag name as it appears in configuration files.
    pub fn name(self) -> &'static str {
        match self {
            FeatureTag::Basic => "basic",
            FeatureTag::Aggr => "aggr",
            FeatureTag::Choice => "choice",
            FeatureTag::ChoiceBounded => "choiceBounded",
            FeatureTag::Disj => "disj",
            FeatureTag::NonHcfDisj => "nonHcfDisj",
            FeatureTag::Nontight => "nontight",
            FeatureTag::Level => "level",
        }
    }
}

impl fmt::Display for FeatureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A violation of the feature-set invariants.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FeatureSetError {
    /// `choiceBounded` requires `choice`.
    ChoiceBoundedWithoutChoice,
    /// `nonHcfDisj` requires `disj`.
    NonHcfDisjWithoutDisj,
}

impl fmt::Display for FeatureSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureSetError::ChoiceBoundedWithoutChoice => {
                f.write_str("feature choiceBounded requires choice")
            }
            FeatureSetError::NonHcfDisjWithoutDisj => {
                f.write_str("feature nonHcfDisj requires disj")
            }
        }
    }
}

impl core::error::Error for FeatureSetError {}

/// A validated set of feature tags.
///
/// Serializes as a list of tag names. Construction through [`FeatureSet::new`]
/// or deserialization enforces the refinement invariants.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FeatureSet(u8);

impl FeatureSet {
    pub const EMPTY: FeatureSet = FeatureSet(0);

    /// Builds a set from tags, rejecting refinement-tag violations.
    pub fn new(tags: &[FeatureTag]) -> Result<Self, FeatureSetError> {
        let mut set = FeatureSet::EMPTY;
        for &tag in tags {
            set.0 |= tag.bit();
        }
        set.validate()?;
        Ok(set)
    }

    fn validate(self) -> Result<(), FeatureSetError> {
        if self.contains(FeatureTag::ChoiceBounded) && !self.contains(FeatureTag::Choice) {
            return Err(FeatureSetError::ChoiceBoundedWithoutChoice);
        }
        if self.contains(FeatureTag::NonHcfDisj) && !self.contains(FeatureTag::Disj) {
            return Err(FeatureSetError::NonHcfDisjWithoutDisj);
        }
        Ok(())
    }

    pub fn contains(self, tag: FeatureTag) -> bool {
        self.0 & tag.bit() != 0
    }

    pub fn is_subset_of(self, other: FeatureSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = FeatureTag> {
        FeatureTag::ALL.into_iter().filter(move |t| self.contains(*t))
    }
}

impl fmt::Display for FeatureSet {
    /// Renders as `{basic, nontight}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, tag) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{tag}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FeatureSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let tags: Vec<FeatureTag> = self.iter().collect();
        let mut seq = serializer.serialize_seq(Some(tags.len()))?;
        for tag in tags {
            seq.serialize_element(&tag)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for FeatureSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TagSeq;
        impl<'de> Visitor<'de> for TagSeq {
            type Value = FeatureSet;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of feature tag names")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<FeatureSet, A::Error> {
                let mut tags = Vec::new();
                while let Some(tag) = seq.next_element::<FeatureTag>()? {
                    tags.push(tag);
                }
                FeatureSet::new(&tags).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(TagSeq)
    }
}

/// What a benchmark problem asks of a solver.
///
/// Query problems score exactly like decision problems.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Decision,
    Query,
    Optimization,
}

/// Competition tracks, ordered by permitted language expressiveness.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum TrackId {
    /// Track #1: normal programs, simple arithmetic and comparisons.
    T1,
    /// Track #2: full language with queries, minus optimization statements
    /// and non-HCF disjunction.
    T2,
    /// Track #3: full language with optimization statements, minus non-HCF
    /// disjunction.
    T3,
    /// Track #4: full language.
    T4,
}

impl TrackId {
    pub const ALL: [TrackId; 4] = [TrackId::T1, TrackId::T2, TrackId::T3, TrackId::T4];

    pub fn name(self) -> &'static str {
        match self {
            TrackId::T1 => "T1",
            TrackId::T2 => "T2",
            TrackId::T3 => "T3",
            TrackId::T4 => "T4",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TrackId::T1 => "Basic Decision",
            TrackId::T2 => "Advanced Decision",
            TrackId::T3 => "Optimization",
            TrackId::T4 => "Unrestricted",
        }
    }
}

impl fmt::Display for TrackId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Routes a problem into its track from the encoding's feature tags and the
/// problem kind.
///
/// Non-HCF disjunction always forces the unrestricted track, optimization
/// statements force the optimization track, and only plain decision problems
/// using at most `basic`/`nontight` features stay in the basic track.
/// Everything else, including all query problems without non-HCF disjunction,
/// is advanced decision.
pub fn classify_track(features: FeatureSet, kind: ProblemKind) -> TrackId {
    let basic_only = FeatureSet::new(&[FeatureTag::Basic, FeatureTag::Nontight])
        .expect("basic/nontight is a valid feature set");
    if features.contains(FeatureTag::NonHcfDisj) {
        TrackId::T4
    } else if kind == ProblemKind::Optimization {
        TrackId::T3
    } else if kind == ProblemKind::Decision && features.is_subset_of(basic_only) {
        TrackId::T1
    } else {
        TrackId::T2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(tags: &[FeatureTag]) -> FeatureSet {
        FeatureSet::new(tags).unwrap()
    }

    #[test]
    fn basic_decision_is_t1() {
        assert_eq!(
            classify_track(set(&[FeatureTag::Basic]), ProblemKind::Decision),
            TrackId::T1
        );
        assert_eq!(
            classify_track(
                set(&[FeatureTag::Basic, FeatureTag::Nontight]),
                ProblemKind::Decision
            ),
            TrackId::T1
        );
    }

    #[test]
    fn non_hcf_query_is_t4() {
        let features = set(&[FeatureTag::Disj, FeatureTag::NonHcfDisj, FeatureTag::Nontight]);
        assert_eq!(classify_track(features, ProblemKind::Query), TrackId::T4);
    }

    #[test]
    fn optimization_without_non_hcf_is_t3() {
        let features = set(&[
            FeatureTag::Aggr,
            FeatureTag::Choice,
            FeatureTag::ChoiceBounded,
            FeatureTag::Nontight,
        ]);
        assert_eq!(classify_track(features, ProblemKind::Optimization), TrackId::T3);
    }

    #[test]
    fn optimization_with_non_hcf_is_t4() {
        let features = set(&[FeatureTag::Disj, FeatureTag::NonHcfDisj]);
        assert_eq!(classify_track(features, ProblemKind::Optimization), TrackId::T4);
    }

    #[test]
    fn query_without_non_hcf_is_t2() {
        assert_eq!(
            classify_track(set(&[FeatureTag::Nontight]), ProblemKind::Query),
            TrackId::T2
        );
    }

    #[test]
    fn plain_hcf_disjunction_is_t2() {
        assert_eq!(
            classify_track(set(&[FeatureTag::Disj]), ProblemKind::Decision),
            TrackId::T2
        );
    }

    #[test]
    fn refinement_tags_require_their_base() {
        assert_eq!(
            FeatureSet::new(&[FeatureTag::ChoiceBounded]),
            Err(FeatureSetError::ChoiceBoundedWithoutChoice)
        );
        assert_eq!(
            FeatureSet::new(&[FeatureTag::NonHcfDisj]),
            Err(FeatureSetError::NonHcfDisjWithoutDisj)
        );
        assert!(FeatureSet::new(&[FeatureTag::Choice, FeatureTag::ChoiceBounded]).is_ok());
    }

    #[test]
    fn tracks_are_ordered_by_expressiveness() {
        assert!(TrackId::T1 < TrackId::T2);
        assert!(TrackId::T2 < TrackId::T3);
        assert!(TrackId::T3 < TrackId::T4);
    }
}
