//! The operational enumerator against the index-set definition, exhaustively.

use idsball::{ball, Alphabet, BallParams, BallSet, MembershipOracle, Sequence};
use rayon::prelude::*;

fn definitional_ball(x: &Sequence, params: BallParams) -> BallSet {
    let oracle = MembershipOracle::new(x, params).unwrap();
    let len = params.output_len(x.len());
    BallSet::from_words(
        x.alphabet(),
        len,
        Sequence::all(x.alphabet(), len).filter(|z| oracle.contains(z).unwrap()),
    )
    .unwrap()
}

#[test]
fn compositional_ball_equals_definition() {
    for q in [2, 3] {
        let q = Alphabet::new(q).unwrap();
        for n in 0..=5 {
            let words: Vec<Sequence> = Sequence::all(q, n).collect();
            for t in 0..=2 {
                for s in 0..=2usize.min(n) {
                    for p in 0..=2 {
                        let params = BallParams::new(t, s, p);
                        words.par_iter().for_each(|x| {
                            assert_eq!(
                                ball(x, params).unwrap(),
                                definitional_ball(x, params),
                                "x={x} q={q} {params:?}"
                            );
                        });
                    }
                }
            }
        }
    }
}
