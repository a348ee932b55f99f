//! Words over `A_q = {0, ..., q-1}` and the symbol-level primitives on them.
//!
//! Positions are 1-based throughout: an [`IndexSet`] over a word of length `n`
//! holds elements of `[n] = {1, ..., n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Symbol = u16;

/// Alphabet size `q`, restricted to `1..=65536` so every symbol fits a [`Symbol`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Alphabet(u32);

impl Alphabet {
    pub const MAX: u32 = 1 << 16;

    pub fn new(q: u32) -> Result<Self> {
        if (1..=Self::MAX).contains(&q) {
            Ok(Alphabet(q))
        } else {
            Err(Error::InvalidAlphabet(q))
        }
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, symbol: Symbol) -> bool {
        u32::from(symbol) < self.0
    }

    fn check(self, symbol: Symbol) -> Result<()> {
        if self.contains(symbol) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange {
                symbol: symbol.into(),
                q: self.0,
            })
        }
    }
}

impl TryFrom<u32> for Alphabet {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        Alphabet::new(q)
    }
}

impl From<Alphabet> for u32 {
    fn from(q: Alphabet) -> u32 {
        q.0
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `a ⊕ b`, addition modulo `q`.
pub fn sym_add(a: Symbol, b: Symbol, q: Alphabet) -> Result<Symbol> {
    q.check(a)?;
    q.check(b)?;
    Ok(((u32::from(a) + u32::from(b)) % q.0) as Symbol)
}

/// `a ⊖ b`, subtraction modulo `q`.
pub fn sym_sub(a: Symbol, b: Symbol, q: Alphabet) -> Result<Symbol> {
    q.check(a)?;
    q.check(b)?;
    Ok(((u32::from(a) + q.0 - u32::from(b)) % q.0) as Symbol)
}

/// `a ⊕ 1`. Differs from `a` whenever `q >= 2`.
pub fn overline(a: Symbol, q: Alphabet) -> Result<Symbol> {
    q.check(a)?;
    Ok(((u32::from(a) + 1) % q.0) as Symbol)
}

// Infallible variants for symbols already validated by a `Sequence`.
pub(crate) fn add_mod(a: Symbol, b: Symbol, q: Alphabet) -> Symbol {
    ((u32::from(a) + u32::from(b)) % q.0) as Symbol
}

pub(crate) fn sub_mod(a: Symbol, b: Symbol, q: Alphabet) -> Symbol {
    ((u32::from(a) + q.0 - u32::from(b)) % q.0) as Symbol
}

pub(crate) fn bar(a: Symbol, q: Alphabet) -> Symbol {
    add_mod(a, 1, q)
}

/// A word over `A_q`, carrying its alphabet.
///
/// Ordering is lexicographic on the symbol list (after the alphabet), so a
/// sorted collection of equal-length words over one alphabet is in
/// dictionary order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    q: Alphabet,
    symbols: Vec<Symbol>,
}

impl Sequence {
    pub fn new(q: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        for &symbol in &symbols {
            q.check(symbol)?;
        }
        Ok(Sequence { q, symbols })
    }

    pub(crate) fn from_raw(q: Alphabet, symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|&a| q.contains(a)));
        Sequence { q, symbols }
    }

    pub fn empty(q: Alphabet) -> Self {
        Sequence {
            q,
            symbols: Vec::new(),
        }
    }

    /// `0^n`.
    pub fn zeros(q: Alphabet, n: usize) -> Self {
        Sequence {
            q,
            symbols: vec![0; n],
        }
    }

    /// Parses the text form: a digit string when `q <= 10`, otherwise
    /// comma-separated decimal symbols. The empty string is the empty word.
    pub fn parse(text: &str, q: Alphabet) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        let symbols = if text.is_empty() {
            Vec::new()
        } else if q.size() <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Symbol)
                        .ok_or_else(|| err(format!("{c:?} is not a decimal digit")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Symbol>()
                        .map_err(|e| err(format!("{part:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Sequence::new(q, symbols).map_err(|e| err(e.to_string()))
    }

    /// Every word of `A_q^n` in lexicographic order.
    pub fn all(q: Alphabet, n: usize) -> AllWords {
        AllWords {
            q,
            next: Some(vec![0; n]),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.q
    }

    pub fn q(&self) -> u32 {
        self.q.size()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// The symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// `x_{[l,m]}` with 1-based inclusive bounds; empty when `l > m`.
    pub fn segment(&self, l: usize, m: usize) -> Sequence {
        let symbols = if l > m || l == 0 {
            Vec::new()
        } else {
            self.symbols[l - 1..m.min(self.len())].to_vec()
        };
        Sequence { q: self.q, symbols }
    }

    pub fn count_nonzero(&self) -> usize {
        self.symbols.iter().filter(|&&a| a != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.size() <= 10 {
            for &a in &self.symbols {
                write!(f, "{a}")?;
            }
        } else {
            for (k, &a) in self.symbols.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence(\"{self}\", q={})", self.q)
    }
}

/// Iterator returned by [`Sequence::all`].
pub struct AllWords {
    q: Alphabet,
    next: Option<Vec<Symbol>>,
}

impl Iterator for AllWords {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let top = (self.q.size() - 1) as Symbol;
        let mut carry = true;
        for a in succ.iter_mut().rev() {
            if *a < top {
                *a += 1;
                carry = false;
                break;
            }
            *a = 0;
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(Sequence {
            q: self.q,
            symbols: current,
        })
    }
}

/// Strictly ascending 1-based positions into a word of a stated length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    positions: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    pub fn new(positions: Vec<usize>, ambient: usize) -> Result<Self> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAscending);
        }
        if let Some(&bad) = positions.iter().find(|&&i| i == 0 || i > ambient) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: ambient,
            });
        }
        Ok(IndexSet { positions, ambient })
    }

    /// `[n]`.
    pub fn full(n: usize) -> Self {
        IndexSet {
            positions: (1..=n).collect(),
            ambient: n,
        }
    }

    pub fn empty(ambient: usize) -> Self {
        IndexSet {
            positions: Vec::new(),
            ambient,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    /// Largest element, or 0 for the empty set (the `i_0 = 0` convention).
    pub fn last_or_zero(&self) -> usize {
        self.positions.last().copied().unwrap_or(0)
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut positions: Vec<usize> = self.iter().chain(other.iter()).collect();
        positions.sort_unstable();
        positions.dedup();
        IndexSet {
            positions,
            ambient: self.ambient.max(other.ambient),
        }
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.iter().all(|i| !other.contains(i))
    }

    /// The `k` smallest elements of `[ambient] \ self`, or `None` if fewer exist.
    pub fn smallest_outside(&self, k: usize) -> Option<IndexSet> {
        let positions: Vec<usize> = (1..=self.ambient)
            .filter(|&i| !self.contains(i))
            .take(k)
            .collect();
        (positions.len() == k).then_some(IndexSet {
            positions,
            ambient: self.ambient,
        })
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.positions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Number of maximal blocks of equal adjacent symbols; 0 for the empty word.
pub fn run_count(x: &Sequence) -> usize {
    if x.is_empty() {
        return 0;
    }
    1 + x.symbols.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_compatible(x: &Sequence, y: &Sequence) -> Result<()> {
    if x.q != y.q {
        return Err(Error::AlphabetMismatch {
            left: x.q(),
            right: y.q(),
        });
    }
    Ok(())
}

pub fn hamming(x: &Sequence, y: &Sequence) -> Result<usize> {
    check_compatible(x, y)?;
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(x.symbols
        .iter()
        .zip(&y.symbols)
        .filter(|(a, b)| a != b)
        .count())
}

/// `x_T`.
pub fn project(x: &Sequence, positions: &IndexSet) -> Result<Sequence> {
    if let Some(bad) = positions.iter().find(|&i| i > x.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            len: x.len(),
        });
    }
    Ok(Sequence {
        q: x.q,
        symbols: positions.iter().map(|i| x.at(i)).collect(),
    })
}

/// Whether `u` embeds into `v` as a (not necessarily contiguous) subsequence.
pub fn is_subsequence(u: &Sequence, v: &Sequence) -> bool {
    if u.len() > v.len() {
        return false;
    }
    let mut rest = v.symbols.iter();
    u.symbols.iter().all(|a| rest.any(|b| b == a))
}

/// The greedy leftmost embedding `M(z, x)` of `z` into `x`.
pub fn matching_set(z: &Sequence, x: &Sequence) -> Result<IndexSet> {
    check_compatible(z, x)?;
    let mut positions = Vec::with_capacity(z.len());
    let mut e = 0;
    for &a in &z.symbols {
        match x.symbols[e..].iter().position(|&b| b == a) {
            Some(offset) => {
                e += offset + 1;
                positions.push(e);
            }
            None => {
                return Err(Error::NotASubsequence {
                    sub: z.to_string(),
                    sup: x.to_string(),
                })
            }
        }
    }
    Ok(IndexSet {
        positions,
        ambient: x.len(),
    })
}
