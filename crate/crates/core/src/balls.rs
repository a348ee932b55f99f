//! Exhaustive enumeration of `B_{t,s,p}(x)` and the index-set membership test.
//!
//! [`ball`] builds the set operationally (deletions, then substitutions, then
//! insertions). [`MembershipOracle`] decides membership straight from the
//! definition: `z` is in the ball iff some `S1 ⊆ [n]` and `S2 ⊆ [n+t-s]`, both
//! of size `n-s`, give `H(x_{S1}, z_{S2}) <= p`.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{Alphabet, Sequence, Symbol};

/// Largest `q^{n+t-s}` that [`ball_size`] will enumerate.
pub const DEFAULT_WORD_CAP: u64 = 10_000_000;

/// Insertion, deletion and substitution budgets `(t, s, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BallParams {
    pub t: usize,
    pub s: usize,
    pub p: usize,
}

impl BallParams {
    pub const fn new(t: usize, s: usize, p: usize) -> Self {
        BallParams { t, s, p }
    }

    /// Checks the standing assumption `n >= s`.
    pub fn check_length(&self, n: usize) -> Result<()> {
        if self.s > n {
            Err(Error::TooManyDeletions { s: self.s, n })
        } else {
            Ok(())
        }
    }

    /// Length `n + t - s` of every ball member. Assumes `n >= s`.
    pub fn output_len(&self, n: usize) -> usize {
        n + self.t - self.s
    }
}

/// A deduplicated, lexicographically sorted set of words of one length over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSet {
    q: Alphabet,
    word_length: usize,
    members: Vec<Sequence>,
}

impl BallSet {
    /// Sorts and deduplicates `words`. Fails if a word has the wrong length or alphabet.
    pub fn from_words<I>(q: Alphabet, word_length: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Sequence>,
    {
        let mut members = Vec::new();
        for w in words {
            if w.alphabet() != q {
                return Err(Error::AlphabetMismatch {
                    left: q.size(),
                    right: w.q(),
                });
            }
            if w.len() != word_length {
                return Err(Error::LengthMismatch {
                    expected: word_length,
                    found: w.len(),
                });
            }
            members.push(w);
        }
        members.sort_unstable();
        members.dedup();
        Ok(BallSet {
            q,
            word_length,
            members,
        })
    }

    fn from_raw(q: Alphabet, word_length: usize, raw: HashSet<Vec<Symbol>>) -> Self {
        let mut members: Vec<Sequence> =
            raw.into_iter().map(|s| Sequence::from_raw(q, s)).collect();
        members.sort_unstable();
        BallSet {
            q,
            word_length,
            members,
        }
    }

    /// All of `A_q^len`.
    pub fn full(q: Alphabet, word_length: usize) -> Self {
        BallSet {
            q,
            word_length,
            members: Sequence::all(q, word_length).collect(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.q
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Sequence] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Sequence> {
        self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sequence> {
        self.members.iter()
    }

    pub fn contains(&self, z: &Sequence) -> bool {
        self.members.binary_search(z).is_ok()
    }

    pub fn is_subset(&self, other: &BallSet) -> bool {
        self.len() <= other.len() && self.members.iter().all(|z| other.contains(z))
    }

    /// Members of `self` that are not in `other`.
    pub fn difference<'a>(&'a self, other: &'a BallSet) -> impl Iterator<Item = &'a Sequence> {
        self.members.iter().filter(move |z| !other.contains(z))
    }

    /// `|self ∩ other|` by a merge of the two sorted member lists.
    pub fn intersection_len(&self, other: &BallSet) -> usize {
        let (mut a, mut b) = (
            self.members.iter().peekable(),
            other.members.iter().peekable(),
        );
        let mut count = 0;
        while let (Some(x), Some(y)) = (a.peek(), b.peek()) {
            match x.cmp(y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    count += 1;
                    a.next();
                    b.next();
                }
            }
        }
        count
    }
}

impl<'a> IntoIterator for &'a BallSet {
    type Item = &'a Sequence;
    type IntoIter = std::slice::Iter<'a, Sequence>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Definition-level membership test for one centre `x` and budget triple.
///
/// Precomputes the distinct projections `x_{S1}` and the candidate `S2` sets
/// once per centre.
pub struct MembershipOracle {
    q: Alphabet,
    params: BallParams,
    word_length: usize,
    left: Vec<Vec<Symbol>>,
    right: Vec<Vec<usize>>,
}

impl MembershipOracle {
    pub fn new(x: &Sequence, params: BallParams) -> Result<Self> {
        let n = x.len();
        params.check_length(n)?;
        let kept = n - params.s;
        let word_length = params.output_len(n);
        let left: Vec<Vec<Symbol>> = (0..n)
            .combinations(kept)
            .map(|s1| s1.iter().map(|&i| x.symbols()[i]).collect::<Vec<_>>())
            .unique()
            .collect();
        let right = (0..word_length).combinations(kept).collect();
        Ok(MembershipOracle {
            q: x.alphabet(),
            params,
            word_length,
            left,
            right,
        })
    }

    pub fn contains(&self, z: &Sequence) -> Result<bool> {
        if z.alphabet() != self.q {
            return Err(Error::AlphabetMismatch {
                left: self.q.size(),
                right: z.q(),
            });
        }
        if z.len() != self.word_length {
            return Err(Error::LengthMismatch {
                expected: self.word_length,
                found: z.len(),
            });
        }
        let z = z.symbols();
        let p = self.params.p;
        Ok(self.right.iter().any(|s2| {
            self.left.iter().any(|xs| {
                let mut mismatches = 0;
                for (a, &j) in xs.iter().zip(s2) {
                    if *a != z[j] {
                        mismatches += 1;
                        if mismatches > p {
                            return false;
                        }
                    }
                }
                true
            })
        }))
    }
}

/// Whether `z ∈ B_{t,s,p}(x)`, decided by search over index-set pairs.
pub fn member_definitional(z: &Sequence, x: &Sequence, params: BallParams) -> Result<bool> {
    MembershipOracle::new(x, params)?.contains(z)
}

fn delete_layer(words: &HashSet<Vec<Symbol>>) -> HashSet<Vec<Symbol>> {
    let mut out = HashSet::new();
    for w in words {
        for i in 0..w.len() {
            // Deleting inside a run gives the same word wherever in the run.
            if i > 0 && w[i - 1] == w[i] {
                continue;
            }
            let mut v = Vec::with_capacity(w.len() - 1);
            v.extend_from_slice(&w[..i]);
            v.extend_from_slice(&w[i + 1..]);
            out.insert(v);
        }
    }
    out
}

fn insert_layer(words: &HashSet<Vec<Symbol>>, q: Alphabet) -> HashSet<Vec<Symbol>> {
    let mut out = HashSet::new();
    for w in words {
        for i in 0..=w.len() {
            for a in 0..q.size() as Symbol {
                // Inserting `a` right after an `a` equals inserting it right before.
                if i > 0 && w[i - 1] == a {
                    continue;
                }
                let mut v = Vec::with_capacity(w.len() + 1);
                v.extend_from_slice(&w[..i]);
                v.push(a);
                v.extend_from_slice(&w[i..]);
                out.insert(v);
            }
        }
    }
    out
}

fn substitute_into(
    w: &mut Vec<Symbol>,
    from: usize,
    budget: usize,
    q: Alphabet,
    out: &mut HashSet<Vec<Symbol>>,
) {
    out.insert(w.clone());
    if budget == 0 {
        return;
    }
    for i in from..w.len() {
        let original = w[i];
        for a in 0..q.size() as Symbol {
            if a != original {
                w[i] = a;
                substitute_into(w, i + 1, budget - 1, q, out);
            }
        }
        w[i] = original;
    }
}

fn substitute_layer(words: &HashSet<Vec<Symbol>>, p: usize, q: Alphabet) -> HashSet<Vec<Symbol>> {
    let mut out = HashSet::new();
    for w in words {
        substitute_into(&mut w.clone(), 0, p, q, &mut out);
    }
    out
}

fn singleton(x: &Sequence) -> HashSet<Vec<Symbol>> {
    HashSet::from([x.symbols().to_vec()])
}

/// `D_s(x)`, built by `s` rounds of single-symbol deletion.
pub fn deletion_ball(x: &Sequence, s: usize) -> Result<BallSet> {
    BallParams::new(0, s, 0).check_length(x.len())?;
    let mut words = singleton(x);
    for _ in 0..s {
        words = delete_layer(&words);
    }
    Ok(BallSet::from_raw(x.alphabet(), x.len() - s, words))
}

/// `I_t(x)`, built by `t` rounds of single-symbol insertion.
pub fn insertion_ball(x: &Sequence, t: usize) -> BallSet {
    let mut words = singleton(x);
    for _ in 0..t {
        words = insert_layer(&words, x.alphabet());
    }
    BallSet::from_raw(x.alphabet(), x.len() + t, words)
}

/// `B_{0,0,p}(x)`: all words within Hamming distance `p` of `x`.
pub fn substitution_ball(x: &Sequence, p: usize) -> BallSet {
    BallSet::from_raw(
        x.alphabet(),
        x.len(),
        substitute_layer(&singleton(x), p, x.alphabet()),
    )
}

/// `B_{t,s,p}(x)` as the union over `u ∈ D_s(x)` and `v ∈ B_{0,0,p}(u)` of `I_t(v)`.
pub fn ball(x: &Sequence, params: BallParams) -> Result<BallSet> {
    params.check_length(x.len())?;
    let q = x.alphabet();
    let mut words = singleton(x);
    for _ in 0..params.s {
        words = delete_layer(&words);
    }
    if params.p > 0 {
        words = substitute_layer(&words, params.p, q);
    }
    for _ in 0..params.t {
        words = insert_layer(&words, q);
    }
    Ok(BallSet::from_raw(q, params.output_len(x.len()), words))
}

/// `q^len` as an exact integer.
pub fn word_count(q: Alphabet, len: usize) -> BigUint {
    BigUint::from(q.size()).pow(len as u32)
}

/// Fails with [`Error::WordCapExceeded`] when `q^len > cap`.
pub fn check_word_cap(q: Alphabet, len: usize, cap: u64) -> Result<()> {
    let words = word_count(q, len);
    if words.to_u64().is_none_or(|w| w > cap) {
        return Err(Error::WordCapExceeded {
            words: words.to_string(),
            cap,
        });
    }
    Ok(())
}

/// `|B_{t,s,p}(x)|` by enumeration, refusing balls in spaces above [`DEFAULT_WORD_CAP`].
pub fn ball_size(x: &Sequence, params: BallParams) -> Result<BigUint> {
    ball_size_capped(x, params, DEFAULT_WORD_CAP)
}

pub fn ball_size_capped(x: &Sequence, params: BallParams, cap: u64) -> Result<BigUint> {
    params.check_length(x.len())?;
    check_word_cap(x.alphabet(), params.output_len(x.len()), cap)?;
    Ok(BigUint::from(ball(x, params)?.len()))
}
