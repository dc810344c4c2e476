//! Solver claims and the line-oriented output grammar.
//!
//! Solvers speak a small stdout protocol: `ANSWER` followed by one line of
//! atoms, `COST` lines attaching a cost tuple to the preceding answer,
//! `OPTIMUM FOUND` marking the preceding answer as claimed-optimal,
//! `INCONSISTENT` for unsatisfiability, and `UNKNOWN` for giving up.
//! Optimization solvers are anytime: they may print a stream of improving
//! answers, and the last complete one wins.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// An optimization cost tuple, most significant level first.
///
/// Comparison is lexicographic, so `[1, 9] < [2, 0]`; smaller is better.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CostTuple(pub Vec<i64>);

impl CostTuple {
    pub fn levels(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for CostTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl From<Vec<i64>> for CostTuple {
    fn from(levels: Vec<i64>) -> Self {
        CostTuple(levels)
    }
}

/// What a solver asserted about an instance, as parsed from its output.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Claim {
    /// A witness solution for a decision or query instance.
    Witness { atoms: String },
    /// The instance was reported unsatisfiable.
    Unsat,
    /// A witness with a cost tuple; `optimum_claimed` is set when the solver
    /// asserted the witness is optimal.
    #[serde(rename = "optwitness")]
    OptWitness {
        atoms: String,
        cost: CostTuple,
        optimum_claimed: bool,
    },
    /// Nothing was claimed.
    #[serde(rename = "noclaim")]
    NoClaim,
}

impl Claim {
    /// The witness text, if this claim carries one.
    pub fn atoms(&self) -> Option<&str> {
        match self {
            Claim::Witness { atoms } | Claim::OptWitness { atoms, .. } => Some(atoms),
            Claim::Unsat | Claim::NoClaim => None,
        }
    }
}

/// A violation of the solver output protocol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProtocolError {
    /// A `COST` line carried a field that is not a 64-bit integer.
    CostNotInteger { field: String },
    /// A `COST` line carried no fields at all.
    EmptyCost,
    /// A `COST` line appeared before any answer.
    CostWithoutAnswer,
    /// `OPTIMUM FOUND` appeared before any answer.
    OptimumWithoutAnswer,
    /// `OPTIMUM FOUND` claimed an answer that never carried a cost.
    OptimumWithoutCost,
    /// The output mixed `INCONSISTENT` with answers.
    ConflictingClaims,
}

impl fmt::Display for ProtocolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProtocolError::CostNotInteger { field } => {
                write!(f, "COST field is not an integer: {field:?}")
            }
            ProtocolError::EmptyCost => f.write_str("COST line carries no values"),
            ProtocolError::CostWithoutAnswer => f.write_str("COST line with no preceding answer"),
            ProtocolError::OptimumWithoutAnswer => {
                f.write_str("OPTIMUM FOUND with no preceding answer")
            }
            ProtocolError::OptimumWithoutCost => {
                f.write_str("OPTIMUM FOUND on an answer without a cost")
            }
            ProtocolError::ConflictingClaims => {
                f.write_str("output mixes INCONSISTENT with answers")
            }
        }
    }
}

impl core::error::Error for ProtocolError {}

#[derive(Debug)]
struct Answer {
    atoms: String,
    cost: Option<CostTuple>,
    optimum_claimed: bool,
}

/// Parses a solver's stdout into its final claim.
///
/// The stream is decoded as UTF-8 (lossily — witness atoms are opaque text).
/// Unrecognized lines are ignored, so solvers may interleave log output. A
/// trailing `ANSWER` whose atom line never arrived (the process was killed
/// mid-write) is dropped and the previous complete answer stands.
pub fn parse_solver_output(raw: &[u8]) -> Result<Claim, ProtocolError> {
    let text = String::from_utf8_lossy(raw);
    let mut answers: Vec<Answer> = Vec::new();
    let mut saw_unsat = false;

    let mut lines = text.lines();
    while let Some(line) = lines.next() {
        let trimmed = line.trim();
        match trimmed {
            "ANSWER" => {
                if let Some(atoms) = lines.next() {
                    answers.push(Answer {
                        atoms: atoms.trim().to_string(),
                        cost: None,
                        optimum_claimed: false,
                    });
                }
            }
            "INCONSISTENT" => saw_unsat = true,
            "OPTIMUM FOUND" => {
                let answer = answers.last_mut().ok_or(ProtocolError::OptimumWithoutAnswer)?;
                answer.optimum_claimed = true;
            }
            "UNKNOWN" => {}
            _ => {
                let mut fields = trimmed.split_whitespace();
                if fields.next() == Some("COST") {
                    let cost = parse_cost_fields(fields)?;
                    let answer = answers.last_mut().ok_or(ProtocolError::CostWithoutAnswer)?;
                    answer.cost = Some(cost);
                }
            }
        }
    }

    if saw_unsat {
        if !answers.is_empty() {
            return Err(ProtocolError::ConflictingClaims);
        }
        return Ok(Claim::Unsat);
    }
    match answers.pop() {
        Some(Answer { cost: Some(cost), atoms, optimum_claimed }) => Ok(Claim::OptWitness {
            atoms,
            cost,
            optimum_claimed,
        }),
        Some(Answer { optimum_claimed: true, cost: None, .. }) => {
            Err(ProtocolError::OptimumWithoutCost)
        }
        Some(Answer { atoms, .. }) => Ok(Claim::Witness { atoms }),
        None => Ok(Claim::NoClaim),
    }
}

fn parse_cost_fields<'a>(
    fields: impl Iterator<Item = &'a str>,
) -> Result<CostTuple, ProtocolError> {
    let mut levels = Vec::new();
    for field in fields {
        let value: i64 = field.parse().map_err(|_| ProtocolError::CostNotInteger {
            field: field.to_string(),
        })?;
        levels.push(value);
    }
    if levels.is_empty() {
        return Err(ProtocolError::EmptyCost);
    }
    Ok(CostTuple(levels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn unknown_is_no_claim() {
        assert_eq!(parse_solver_output(b"UNKNOWN\n"), Ok(Claim::NoClaim));
        assert_eq!(parse_solver_output(b""), Ok(Claim::NoClaim));
    }

    #[test]
    fn inconsistent_is_unsat() {
        assert_eq!(parse_solver_output(b"INCONSISTENT\n"), Ok(Claim::Unsat));
    }

    #[test]
    fn plain_answer_is_witness() {
        assert_eq!(
            parse_solver_output(b"ANSWER\na b c\n"),
            Ok(Claim::Witness { atoms: "a b c".into() })
        );
    }

    #[test]
    fn last_answer_wins_with_costs_and_optimum() {
        // Hand-traced: two answers, the second carries cost [5] and the
        // optimum claim.
        let raw = b"ANSWER\na b c\nCOST 7\nANSWER\na b\nCOST 5\nOPTIMUM FOUND\n";
        assert_eq!(
            parse_solver_output(raw),
            Ok(Claim::OptWitness {
                atoms: "a b".into(),
                cost: CostTuple(vec![5]),
                optimum_claimed: true,
            })
        );
    }

    #[test]
    fn multi_level_cost_keeps_wire_order() {
        let raw = b"ANSWER\nx\nCOST 3 1 9\n";
        assert_eq!(
            parse_solver_output(raw),
            Ok(Claim::OptWitness {
                atoms: "x".into(),
                cost: CostTuple(vec![3, 1, 9]),
                optimum_claimed: false,
            })
        );
    }

    #[test]
    fn dangling_answer_is_dropped() {
        let raw = b"ANSWER\na b\nCOST 12\nANSWER";
        assert_eq!(
            parse_solver_output(raw),
            Ok(Claim::OptWitness {
                atoms: "a b".into(),
                cost: CostTuple(vec![12]),
                optimum_claimed: false,
            })
        );
    }

    #[test]
    fn empty_atom_line_is_a_witness() {
        assert_eq!(
            parse_solver_output(b"ANSWER\n\n"),
            Ok(Claim::Witness { atoms: "".into() })
        );
    }

    #[test]
    fn cost_errors() {
        assert_eq!(
            parse_solver_output(b"ANSWER\na\nCOST x\n"),
            Err(ProtocolError::CostNotInteger { field: "x".into() })
        );
        assert_eq!(parse_solver_output(b"ANSWER\na\nCOST\n"), Err(ProtocolError::EmptyCost));
        assert_eq!(parse_solver_output(b"COST 3\n"), Err(ProtocolError::CostWithoutAnswer));
    }

    #[test]
    fn optimum_errors() {
        assert_eq!(
            parse_solver_output(b"OPTIMUM FOUND\n"),
            Err(ProtocolError::OptimumWithoutAnswer)
        );
        assert_eq!(
            parse_solver_output(b"ANSWER\na\nOPTIMUM FOUND\n"),
            Err(ProtocolError::OptimumWithoutCost)
        );
    }

    #[test]
    fn mixed_unsat_and_answer_is_a_violation() {
        assert_eq!(
            parse_solver_output(b"ANSWER\na\nINCONSISTENT\n"),
            Err(ProtocolError::ConflictingClaims)
        );
    }

    #[test]
    fn noise_lines_are_ignored() {
        let raw = b"c this is a comment\nANSWER\na b\ntiming: 1.23s\n";
        assert_eq!(parse_solver_output(raw), Ok(Claim::Witness { atoms: "a b".into() }));
    }

    #[test]
    fn cost_tuples_compare_lexicographically() {
        assert!(CostTuple(vec![1, 9]) < CostTuple(vec![2, 0]));
        assert!(CostTuple(vec![10]) < CostTuple(vec![12]));
        assert_eq!(CostTuple(vec![10]), CostTuple(vec![10]));
    }

    #[test]
    fn optimum_after_cost_on_earlier_answer_is_superseded() {
        // A later answer without the optimum claim supersedes the earlier one.
        let raw = b"ANSWER\na\nCOST 9\nOPTIMUM FOUND\nANSWER\nb\nCOST 8\n";
        assert_eq!(
            parse_solver_output(raw),
            Ok(Claim::OptWitness {
                atoms: "b".into(),
                cost: CostTuple(vec![8]),
                optimum_claimed: false,
            })
        );
    }
}
