//! Exact combinatorics of q-ary `t`-insertion `s`-deletion `p`-substitution balls.
//!
//! The crate enumerates the balls `B_{t,s,p}(x)` exhaustively, provides the
//! closed-form sizes and the minimum-size bound with its equality condition,
//! and executes the constructive maps (bijections, injections, witnesses) that
//! certify those results. Everything is cross-checked by the [`verify`]
//! harness against brute force.

pub mod balls;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod seqcore;
pub mod verify;

pub use balls::{
    ball, ball_size, ball_size_capped, deletion_ball, insertion_ball, member_definitional,
    substitution_ball, BallParams, BallSet, MembershipOracle, DEFAULT_WORD_CAP,
};
pub use constructions::{
    bijection_insertion, bijection_insertion_inverse, injection_idp, witness_deletion_pair,
    witness_nonsurjective, witness_swap_flip, DeletionPairWitness, InjectionTrace,
    NonSurjectionCase, NonSurjectionVerdict, NonSurjectionWitness, SwapFlipWitness,
};
pub use error::{Error, Result};
pub use formulas::{
    binomial, levenshtein_intersection_max, min_ball_bound, minimality_predicate,
    size_insertion_ball, size_substitution_ball, size_zero_ball, BoundReport, MinimalityCondition,
};
pub use seqcore::{
    hamming, is_subsequence, matching_set, overline, project, run_count, sym_add, sym_sub,
    Alphabet, IndexSet, Sequence, Symbol,
};
