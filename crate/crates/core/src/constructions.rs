//! Explicit maps between balls and the witness words that certify strict bounds.
//!
//! Where several valid choices exist (a position `m` with `x_m != x_{m+1}`, a
//! set `E` of flips) the least one is taken, so every output is reproducible.
//! Each constructor checks its own postconditions and returns
//! [`Error::Postcondition`] rather than an unchecked word.

use serde::{Deserialize, Serialize};

use crate::balls::{member_definitional, BallParams};
use crate::error::{Error, Result};
use crate::seqcore::{
    add_mod, bar, hamming, is_subsequence, matching_set, project, run_count, sub_mod, Alphabet,
    IndexSet, Sequence, Symbol,
};

/// Intermediate sets of a blockwise shift map, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionTrace {
    pub input: Sequence,
    /// `I`, the greedy matching set of the zero anchors in the input.
    pub matched: IndexSet,
    /// `J`, the positions filled in to complete `I` (injection only).
    pub fill: Option<IndexSet>,
    /// `K = I ∪ J` (injection only).
    pub anchors: Option<IndexSet>,
    pub output: Sequence,
}

fn same_alphabet(a: &Sequence, b: &Sequence) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: a.q(),
            right: b.q(),
        });
    }
    Ok(())
}

/// Combines `y_e` with `x_l` on each block `[k_{l-1}+1, k_l]` of `anchors`;
/// positions after the last anchor are copied.
fn shift_blocks(
    y: &Sequence,
    anchors: &IndexSet,
    x: &Sequence,
    op: fn(Symbol, Symbol, Alphabet) -> Symbol,
) -> Sequence {
    debug_assert_eq!(anchors.len(), x.len());
    let q = y.alphabet();
    let mut out = Vec::with_capacity(y.len());
    let mut block = 0;
    for (e, &a) in (1..).zip(y.symbols()) {
        while block < anchors.len() && anchors.positions()[block] < e {
            block += 1;
        }
        out.push(if block < anchors.len() {
            op(a, x.symbols()[block], q)
        } else {
            a
        });
    }
    Sequence::from_raw(q, out)
}

/// The bijection `I_t(0^n) → I_t(x)`: `z_e = y_e ⊕ x_l` on the blocks of `I = M(0^n, y)`.
pub fn bijection_insertion(y: &Sequence, x: &Sequence, t: usize) -> Result<InjectionTrace> {
    same_alphabet(y, x)?;
    let n = x.len();
    if y.len() != n + t {
        return Err(Error::LengthMismatch {
            expected: n + t,
            found: y.len(),
        });
    }
    let zeros = Sequence::zeros(x.alphabet(), n);
    let matched = matching_set(&zeros, y)
        .map_err(|_| Error::OutsideDomain(format!("{y} is not in I_{t}(0^{n})")))?;
    let output = shift_blocks(y, &matched, x, add_mod);
    if project(&output, &matched)? != *x {
        return Err(Error::Postcondition(format!("z_I != x for y={y}, x={x}")));
    }
    Ok(InjectionTrace {
        input: y.clone(),
        matched,
        fill: None,
        anchors: None,
        output,
    })
}

/// Inverse of [`bijection_insertion`]: `y_e = z_e ⊖ x_l` on the blocks of `M(x, z)`.
pub fn bijection_insertion_inverse(z: &Sequence, x: &Sequence, t: usize) -> Result<Sequence> {
    same_alphabet(z, x)?;
    let n = x.len();
    if z.len() != n + t {
        return Err(Error::LengthMismatch {
            expected: n + t,
            found: z.len(),
        });
    }
    let embedding = matching_set(x, z)
        .map_err(|_| Error::OutsideDomain(format!("{z} is not in I_{t}({x})")))?;
    let y = shift_blocks(z, &embedding, x, sub_mod);
    if matching_set(&Sequence::zeros(x.alphabet(), n), &y)? != embedding {
        return Err(Error::Postcondition(format!(
            "M(0^n, y) != M(x, z) for z={z}, x={x}"
        )));
    }
    Ok(y)
}

/// The injection `B_{t,0,p}(0^n) → B_{t,0,p}(x)`.
///
/// With `I = M(0^{n-p}, y)`, `J` the `p` smallest positions outside `I`, and
/// `K = I ∪ J`, the output is the blockwise shift of `y` over `K`. A budget
/// `p >= n` is treated as `p = n`, where `I` is empty and `K = [n]`.
pub fn injection_idp(y: &Sequence, x: &Sequence, t: usize, p: usize) -> Result<InjectionTrace> {
    same_alphabet(y, x)?;
    let n = x.len();
    if y.len() != n + t {
        return Err(Error::LengthMismatch {
            expected: n + t,
            found: y.len(),
        });
    }
    let p_eff = p.min(n);
    let zeros = Sequence::zeros(x.alphabet(), n - p_eff);
    let matched = matching_set(&zeros, y)
        .map_err(|_| Error::OutsideDomain(format!("{y} is not in B_{{{t},0,{p}}}(0^{n})")))?;
    let fill = matched
        .smallest_outside(p_eff)
        .expect("[n+t] \\ I has t+p elements, at least p");
    let anchors = matched.union(&fill);
    let output = shift_blocks(y, &anchors, x, add_mod);
    if hamming(&project(&output, &anchors)?, x)? > p {
        return Err(Error::Postcondition(format!(
            "H(z_K, x) > p for y={y}, x={x}"
        )));
    }
    Ok(InjectionTrace {
        input: y.clone(),
        matched,
        fill: Some(fill),
        anchors: Some(anchors),
        output,
    })
}

/// Which run structure of `x` the non-surjectivity witness exploits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonSurjectionCase {
    /// `x_{[p]}` has more than one run: some `i ∈ [p-1]` has `x_i != x_{i+1}`.
    Prefix,
    /// `x_{[p,n]}` has more than one run: some `i ∈ [p, n-1]` has `x_i != x_{i+1}`.
    Suffix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSurjectionWitness {
    /// `w = x̄_1 · x_1 ⋯ x_{n-1} · (x̄_n)^t`.
    pub intermediate: Sequence,
    pub case: NonSurjectionCase,
    /// The position `i` with `x_i != x_{i+1}` selecting the case.
    pub pivot: usize,
    pub word: Sequence,
}

/// Checks the word against the three requirements a non-image witness must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSurjectionVerdict {
    /// `z ∈ B_{t,0,p}(x)`.
    pub member: bool,
    /// `z_i != x_i` for every `i ∈ [p]`.
    pub prefix_differs: bool,
    /// `x_{[p+1,n]}` is not a subsequence of `z_{[p+1,n+t]}`.
    pub tail_not_embedded: bool,
}

impl NonSurjectionVerdict {
    pub fn evaluate(z: &Sequence, x: &Sequence, t: usize, p: usize) -> Result<Self> {
        let n = x.len();
        Ok(NonSurjectionVerdict {
            member: member_definitional(z, x, BallParams::new(t, 0, p))?,
            prefix_differs: (1..=p.min(n)).all(|i| z.at(i) != x.at(i)),
            tail_not_embedded: !is_subsequence(&x.segment(p + 1, n), &z.segment(p + 1, n + t)),
        })
    }

    pub fn passed(&self) -> bool {
        self.member && self.prefix_differs && self.tail_not_embedded
    }
}

/// A word of `B_{t,0,p}(x)` outside the image of [`injection_idp`].
///
/// Requires `t >= 1`, `1 <= p < n` and `r(x) > 1`.
pub fn witness_nonsurjective(x: &Sequence, t: usize, p: usize) -> Result<NonSurjectionWitness> {
    let n = x.len();
    if t < 1 || p < 1 || p >= n || run_count(x) < 2 {
        return Err(Error::Precondition(format!(
            "need t >= 1, 1 <= p < n and r(x) > 1 (t={t}, p={p}, n={n}, r(x)={})",
            run_count(x)
        )));
    }
    let q = x.alphabet();
    let mut w = Vec::with_capacity(n + t);
    w.push(bar(x.at(1), q));
    w.extend_from_slice(&x.symbols()[..n - 1]);
    w.extend(std::iter::repeat_n(bar(x.at(n), q), t));
    let intermediate = Sequence::from_raw(q, w.clone());

    let differs = |i: &usize| x.at(*i) != x.at(*i + 1);
    let (case, pivot, positions): (_, _, Vec<usize>) = if let Some(i) = (1..p).find(differs) {
        let positions = (2..=p).chain([n]).filter(|&e| e != i + 1).collect();
        (NonSurjectionCase::Prefix, i, positions)
    } else {
        let i = (p..n)
            .find(differs)
            .expect("r(x) > 1 leaves a run boundary");
        (NonSurjectionCase::Suffix, i, (2..=p).collect())
    };
    for e in positions {
        w[e - 1] = bar(x.at(e), q);
    }
    let word = Sequence::from_raw(q, w);

    if hamming(&word, &intermediate)? > p - 1 {
        return Err(Error::Postcondition(format!(
            "{word} is not in B_{{0,0,p-1}}(w)"
        )));
    }
    let verdict = NonSurjectionVerdict::evaluate(&word, x, t, p)?;
    if !verdict.passed() {
        return Err(Error::Postcondition(format!(
            "witness {word} for x={x}, t={t}, p={p} fails: {verdict:?}"
        )));
    }
    Ok(NonSurjectionWitness {
        intermediate,
        case,
        pivot,
        word,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapFlipWitness {
    /// Least `m` with `x_m != x_{m+1}`; positions `m` and `m+1` are swapped.
    pub pivot: usize,
    /// `E`, the `t+p-1` smallest positions outside `{m, m+1}`, each flipped to `x̄_e`.
    pub flips: IndexSet,
    pub word: Sequence,
}

/// A word in `B_{t,t,p}(x) \ B_{0,0,t+p}(x)`.
///
/// Requires `t >= 1`, `t + p < n` and `r(x) > 1`.
pub fn witness_swap_flip(x: &Sequence, t: usize, p: usize) -> Result<SwapFlipWitness> {
    let n = x.len();
    if t < 1 || t + p >= n || run_count(x) < 2 {
        return Err(Error::Precondition(format!(
            "need t >= 1, t + p < n and r(x) > 1 (t={t}, p={p}, n={n}, r(x)={})",
            run_count(x)
        )));
    }
    let q = x.alphabet();
    let m = (1..n).find(|&i| x.at(i) != x.at(i + 1)).expect("r(x) > 1");
    let flips = IndexSet::new(vec![m, m + 1], n)?
        .smallest_outside(t + p - 1)
        .expect("n - 2 >= t + p - 1");
    let mut z = x.symbols().to_vec();
    z.swap(m - 1, m);
    for e in flips.iter() {
        z[e - 1] = bar(x.at(e), q);
    }
    let word = Sequence::from_raw(q, z);

    let distance = hamming(&word, x)?;
    if distance != t + p + 1 {
        return Err(Error::Postcondition(format!(
            "H({word}, {x}) = {distance}, not t+p+1"
        )));
    }
    if !member_definitional(&word, x, BallParams::new(t, t, p))? {
        return Err(Error::Postcondition(format!(
            "{word} is not in B_{{{t},{t},{p}}}({x})"
        )));
    }
    Ok(SwapFlipWitness {
        pivot: m,
        flips,
        word,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionPairWitness {
    /// Least `m` with `x_m != x_{m+1}`.
    pub pivot: usize,
    /// `E`, the `n-s-1` smallest positions outside `{m, m+1}`.
    pub kept: IndexSet,
    /// `x_{E ∪ {m}}`.
    pub first: Sequence,
    /// `x_{E ∪ {m+1}}`.
    pub second: Sequence,
}

/// Two distinct members of `D_s(x)`. Requires `1 <= s <= n-1` and `r(x) > 1`.
pub fn witness_deletion_pair(x: &Sequence, s: usize) -> Result<DeletionPairWitness> {
    let n = x.len();
    if s < 1 || s + 1 > n || run_count(x) < 2 {
        return Err(Error::Precondition(format!(
            "need 1 <= s <= n-1 and r(x) > 1 (s={s}, n={n}, r(x)={})",
            run_count(x)
        )));
    }
    let m = (1..n).find(|&i| x.at(i) != x.at(i + 1)).expect("r(x) > 1");
    let kept = IndexSet::new(vec![m, m + 1], n)?
        .smallest_outside(n - s - 1)
        .expect("n - 2 >= n - s - 1");
    let first = project(x, &kept.union(&IndexSet::new(vec![m], n)?))?;
    let second = project(x, &kept.union(&IndexSet::new(vec![m + 1], n)?))?;

    if first == second {
        return Err(Error::Postcondition(format!("u = v = {first}")));
    }
    for w in [&first, &second] {
        if w.len() != n - s || !is_subsequence(w, x) {
            return Err(Error::Postcondition(format!("{w} is not in D_{s}({x})")));
        }
    }
    Ok(DeletionPairWitness {
        pivot: m,
        kept,
        first,
        second,
    })
}
