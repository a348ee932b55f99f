//! Closed forms against enumeration, budgets up to 3, word length up to 8.

use idsball::{
    ball, insertion_ball, size_insertion_ball, size_substitution_ball, size_zero_ball,
    substitution_ball, Alphabet, BallParams, Sequence,
};
use num_bigint::BigUint;

fn alphabets() -> impl Iterator<Item = Alphabet> {
    [1, 2, 3].into_iter().map(|q| Alphabet::new(q).unwrap())
}

#[test]
fn substitution_ball_sizes() {
    for q in alphabets() {
        for n in 0..=5 {
            for p in 0..=3 {
                let formula = size_substitution_ball(n, q, p);
                for x in Sequence::all(q, n) {
                    assert_eq!(
                        BigUint::from(substitution_ball(&x, p).len()),
                        formula,
                        "x={x} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn insertion_ball_sizes_are_uniform() {
    for q in alphabets() {
        for n in 0..=5 {
            for t in 0..=3 {
                let formula = size_insertion_ball(n, q, t);
                for x in Sequence::all(q, n) {
                    assert_eq!(
                        BigUint::from(insertion_ball(&x, t).len()),
                        formula,
                        "x={x} t={t}"
                    );
                }
            }
        }
    }
}

#[test]
fn zero_ball_sizes() {
    for q in alphabets() {
        for n in 0..=5 {
            for (t, s, p) in itertools::iproduct!(0..=3, 0..=3usize.min(n), 0..=3) {
                let params = BallParams::new(t, s, p);
                if params.output_len(n) > 8 {
                    continue;
                }
                let enumerated = ball(&Sequence::zeros(q, n), params).unwrap().len();
                assert_eq!(
                    BigUint::from(enumerated),
                    size_zero_ball(n, q, params).unwrap()
                );
            }
        }
    }
}

#[test]
fn showcase_values_by_enumeration() {
    let q3 = Alphabet::new(3).unwrap();
    let x = Sequence::parse("1001", q3).unwrap();
    assert_eq!(insertion_ball(&x, 4).len(), 1697);
    let zeros = Sequence::zeros(q3, 4);
    assert_eq!(ball(&zeros, BallParams::new(4, 0, 2)).unwrap().len(), 5281);
}
