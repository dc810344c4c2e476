//! Rules engine for benchmark competitions of declarative solving systems.
//!
//! This crate holds everything about a competition that is pure computation:
//! track classification from language-feature tags, deterministic seeded
//! instance selection, the line-oriented solver output grammar, adjudication
//! of claims against checker verdicts (unsat cross-checks, imperfect optima,
//! optimum-claim validation, disqualifications), and the scoring and ranking
//! rules. Process execution, checker invocation, and file formats live in the
//! companion harness crate.
//!
//! The crate is `no_std` (with `alloc`) so the rules can be embedded anywhere
//! and give bit-identical answers on every platform.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adjudicate;
pub mod claim;
pub mod outcome;
pub mod score;
pub mod selection;
pub mod track;
pub mod verdict;

pub use claim::{parse_solver_output, Claim, CostTuple, ProtocolError};
pub use outcome::{InstanceRef, ProblemKey, RunOutcome, RunStatus};
pub use score::{
    global_ranking, score_decision, score_opt_instance, score_opt_problem, strictly_better,
    Points, RankingRow, Rankings, ScoreRecord, SolutionQuality,
};
pub use track::{classify_track, FeatureSet, FeatureSetError, FeatureTag, ProblemKind, TrackId};
pub use verdict::{
    CheckerVerdict, Disqualification, DisqualificationReason, EffectiveClaim, VerifiedResult,
};
