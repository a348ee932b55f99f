//! Closed-form ball sizes and the minimum-size bound, in exact integer arithmetic.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::balls::BallParams;
use crate::error::{Error, Result};
use crate::seqcore::{run_count, Alphabet, Sequence};

/// `C(n, k)`, taken to be 0 whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n-k+i-1, i-1) here, so the division is exact.
        acc = acc * BigUint::from((n - k + i) as u64) / BigUint::from(i as u64);
    }
    acc
}

/// `Σ_{i=0}^{upto} C(m, i) (q-1)^i`, the common shape of every size formula here.
fn weighted_binomial_sum(m: usize, q: Alphabet, upto: usize) -> BigUint {
    let base = BigUint::from(q.size() - 1);
    let mut power = BigUint::one();
    let mut sum = BigUint::zero();
    for i in 0..=upto.min(m) {
        sum += binomial(m as i64, i as i64) * &power;
        power *= &base;
    }
    sum
}

/// `|B_{0,0,p}(x)|` for any `x` of length `n`.
pub fn size_substitution_ball(n: usize, q: Alphabet, p: usize) -> BigUint {
    weighted_binomial_sum(n, q, p)
}

/// `|I_t(x)|` for any `x` of length `n`.
pub fn size_insertion_ball(n: usize, q: Alphabet, t: usize) -> BigUint {
    weighted_binomial_sum(n + t, q, t)
}

/// `|B_{t,s,p}(0^n)|`.
pub fn size_zero_ball(n: usize, q: Alphabet, params: BallParams) -> Result<BigUint> {
    params.check_length(n)?;
    Ok(weighted_binomial_sum(
        params.output_len(n),
        q,
        params.t + params.p,
    ))
}

/// The lower bound `Σ_{i=0}^{t+p} C(n+t-s, i)(q-1)^i` on `|B_{t,s,p}(x)|` over all `x ∈ A_q^n`.
pub fn min_ball_bound(n: usize, q: Alphabet, params: BallParams) -> Result<BigUint> {
    params.check_length(n)?;
    Ok(weighted_binomial_sum(
        params.output_len(n),
        q,
        params.t + params.p,
    ))
}

/// One disjunct of the equality condition for the minimum bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinimalityCondition {
    /// `t = s = 0`
    #[serde(rename = "t=s=0")]
    NoIndels,
    /// `s = p = 0`
    #[serde(rename = "s=p=0")]
    InsertionsOnly,
    /// `s + p >= n`
    #[serde(rename = "s+p>=n")]
    BudgetCoversLength,
    /// `r(x) = 1`
    #[serde(rename = "r(x)=1")]
    SingleRun,
}

impl fmt::Display for MinimalityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinimalityCondition::NoIndels => "t=s=0",
            MinimalityCondition::InsertionsOnly => "s=p=0",
            MinimalityCondition::BudgetCoversLength => "s+p>=n",
            MinimalityCondition::SingleRun => "r(x)=1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub bound: BigUint,
    pub minimal_predicted: bool,
    /// Every disjunct that holds, in declaration order.
    pub conditions: Vec<MinimalityCondition>,
}

/// Evaluates the bound and which equality conditions hold for `x`.
pub fn minimality_predicate(x: &Sequence, params: BallParams) -> Result<BoundReport> {
    let n = x.len();
    let bound = min_ball_bound(n, x.alphabet(), params)?;
    let BallParams { t, s, p } = params;
    let conditions: Vec<MinimalityCondition> = [
        (t == 0 && s == 0, MinimalityCondition::NoIndels),
        (s == 0 && p == 0, MinimalityCondition::InsertionsOnly),
        (s + p >= n, MinimalityCondition::BudgetCoversLength),
        (run_count(x) == 1, MinimalityCondition::SingleRun),
    ]
    .into_iter()
    .filter_map(|(holds, c)| holds.then_some(c))
    .collect();
    Ok(BoundReport {
        bound,
        minimal_predicted: !conditions.is_empty(),
        conditions,
    })
}

/// `max_{x≠y} |B_{0,0,p}(x) ∩ B_{0,0,p}(y)| = q Σ_{i=0}^{p-1} C(n-1, i)(q-1)^i`.
///
/// Requires `n >= 1` and `q >= 2`; otherwise no distinct pair exists.
pub fn levenshtein_intersection_max(n: usize, q: Alphabet, p: usize) -> Result<BigUint> {
    if q.size() < 2 || n < 1 {
        return Err(Error::Precondition(format!(
            "no pair of distinct words exists in A_{q}^{n}"
        )));
    }
    if p == 0 {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(q.size()) * weighted_binomial_sum(n - 1, q, p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
        let mut table: Vec<Vec<BigUint>> = vec![vec![big(1)]];
        for n in 1..=rows {
            let prev = &table[n - 1];
            let mut row = vec![big(1); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            table.push(row);
        }
        table
    }

    #[test]
    fn binomial_matches_pascal() {
        let table = pascal(60);
        for (n, row) in table.iter().enumerate() {
            for (k, value) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64), value, "C({n},{k})");
            }
        }
        assert_eq!(binomial(8, 4), big(70));
        assert_eq!(binomial(17, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn substitution_sizes() {
        assert_eq!(size_substitution_ball(4, q(2), 2), big(11));
        assert_eq!(size_substitution_ball(7, q(1), 3), big(1));
        assert_eq!(size_substitution_ball(7, q(5), 0), big(1));
        assert_eq!(size_substitution_ball(3, q(3), 9), big(27));
    }

    #[test]
    fn insertion_sizes() {
        assert_eq!(size_insertion_ball(4, q(3), 4), big(1697));
        assert_eq!(size_insertion_ball(6, q(4), 0), big(1));
        assert_eq!(size_insertion_ball(1, q(2), 1), big(3));
    }

    #[test]
    fn zero_ball_sizes() {
        assert_eq!(
            size_zero_ball(4, q(2), BallParams::new(1, 1, 1)).unwrap(),
            big(11)
        );
        assert_eq!(
            size_zero_ball(4, q(3), BallParams::new(4, 0, 2)).unwrap(),
            big(5281)
        );
        assert_eq!(
            size_zero_ball(5, q(3), BallParams::new(0, 0, 0)).unwrap(),
            big(1)
        );
        assert!(size_zero_ball(2, q(2), BallParams::new(0, 3, 0)).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(
            min_ball_bound(4, q(2), BallParams::new(1, 1, 1)).unwrap(),
            big(11)
        );
        assert_eq!(
            min_ball_bound(2, q(2), BallParams::new(1, 1, 0)).unwrap(),
            big(3)
        );
        assert_eq!(
            min_ball_bound(6, q(1), BallParams::new(2, 1, 2)).unwrap(),
            big(1)
        );
        assert!(matches!(
            min_ball_bound(1, q(2), BallParams::new(0, 2, 0)),
            Err(Error::TooManyDeletions { .. })
        ));
    }

    #[test]
    fn predicate_examples() {
        let zeros = Sequence::parse("0000", q(2)).unwrap();
        let r = minimality_predicate(&zeros, BallParams::new(1, 1, 1)).unwrap();
        assert!(r.minimal_predicted);
        assert_eq!(r.conditions, [MinimalityCondition::SingleRun]);
        assert_eq!(r.bound, big(11));

        let x = Sequence::parse("01", q(2)).unwrap();
        let r = minimality_predicate(&x, BallParams::new(1, 1, 0)).unwrap();
        assert!(!r.minimal_predicted);
        assert!(r.conditions.is_empty());
        assert_eq!(r.bound, big(3));

        let r = minimality_predicate(&x, BallParams::new(3, 0, 0)).unwrap();
        assert_eq!(r.conditions, [MinimalityCondition::InsertionsOnly]);

        // Several disjuncts can fire together.
        let r = minimality_predicate(&zeros, BallParams::new(0, 0, 4)).unwrap();
        assert_eq!(
            r.conditions,
            [
                MinimalityCondition::NoIndels,
                MinimalityCondition::BudgetCoversLength,
                MinimalityCondition::SingleRun
            ]
        );

        let empty = Sequence::empty(q(2));
        let r = minimality_predicate(&empty, BallParams::new(1, 0, 1)).unwrap();
        assert_eq!(r.conditions, [MinimalityCondition::BudgetCoversLength]);
    }

    #[test]
    fn intersection_max_values() {
        assert_eq!(levenshtein_intersection_max(2, q(2), 1).unwrap(), big(2));
        assert_eq!(levenshtein_intersection_max(3, q(2), 2).unwrap(), big(6));
        assert_eq!(levenshtein_intersection_max(5, q(3), 0).unwrap(), big(0));
        assert!(levenshtein_intersection_max(3, q(1), 1).is_err());
        assert!(levenshtein_intersection_max(0, q(2), 1).is_err());
    }

    #[test]
    fn intersection_bound_is_strictly_below_ball_size() {
        for size in 2..=5 {
            for m in 1..=12usize {
                for p in 1..m {
                    let intersection = levenshtein_intersection_max(m, q(size), p).unwrap();
                    let ball = size_substitution_ball(m, q(size), p);
                    assert!(intersection < ball, "m={m} p={p} q={size}");
                }
            }
        }
    }
}
