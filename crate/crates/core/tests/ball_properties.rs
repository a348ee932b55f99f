use idsball::{
    ball, member_definitional, Alphabet, BallParams, BallSet, MembershipOracle, Sequence,
};
use proptest::prelude::*;

fn q(n: u32) -> Alphabet {
    Alphabet::new(n).unwrap()
}

fn centre() -> impl Strategy<Value = Sequence> {
    (2u32..=3, 0usize..=5).prop_flat_map(|(size, n)| {
        prop::collection::vec(0..size as u16, n)
            .prop_map(move |s| Sequence::new(q(size), s).unwrap())
    })
}

fn budgets(n: usize) -> impl Strategy<Value = BallParams> {
    (0usize..=2, 0..=2usize.min(n), 0usize..=2).prop_map(|(t, s, p)| BallParams::new(t, s, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_budget_is_monotone(
        (x, params) in centre().prop_flat_map(|x| { let n = x.len(); (Just(x), budgets(n)) })
    ) {
        let smaller = ball(&x, params).unwrap();
        let larger = ball(&x, BallParams { p: params.p + 1, ..params }).unwrap();
        prop_assert!(smaller.is_subset(&larger));
    }

    #[test]
    fn substitution_is_an_insertion_and_a_deletion(
        (x, params) in centre().prop_flat_map(|x| { let n = x.len(); (Just(x), budgets(n)) })
    ) {
        let BallParams { t, p, .. } = params;
        prop_assume!(t <= x.len());
        let outer = ball(&x, BallParams::new(t, t, p)).unwrap();
        let inner = ball(&x, BallParams::new(0, 0, t + p)).unwrap();
        prop_assert!(inner.is_subset(&outer));
    }

    #[test]
    fn members_are_canonical(
        (x, params) in centre().prop_flat_map(|x| { let n = x.len(); (Just(x), budgets(n)) })
    ) {
        let set = ball(&x, params).unwrap();
        let len = params.output_len(x.len());
        prop_assert!(set.members().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(set.iter().all(|z| z.len() == len && z.alphabet() == x.alphabet()));
        prop_assert!(set.len() as u64 <= u64::from(x.q()).pow(len as u32));
    }
}

#[test]
fn zero_ball_is_everything_once_substitutions_cover_it() {
    for size in [2, 3] {
        for n in 0..=4 {
            for (t, s) in itertools::iproduct!(0..=2, 0..=2usize.min(n)) {
                let p = n - s;
                let params = BallParams::new(t, s, p);
                let zeros = Sequence::zeros(q(size), n);
                let len = params.output_len(n);
                assert_eq!(ball(&zeros, params).unwrap(), BallSet::full(q(size), len));
                let oracle = MembershipOracle::new(&zeros, params).unwrap();
                assert!(Sequence::all(q(size), len).all(|z| oracle.contains(&z).unwrap()));
            }
        }
    }
}

#[test]
fn zero_ball_counts_nonzero_symbols() {
    for size in [2, 3] {
        for n in 1..=5 {
            for (t, s, p) in itertools::iproduct!(0..=2, 0..=2usize.min(n), 0..=2) {
                if p >= n - s {
                    continue;
                }
                let params = BallParams::new(t, s, p);
                let zeros = Sequence::zeros(q(size), n);
                let len = params.output_len(n);
                for y in Sequence::all(q(size), len) {
                    assert_eq!(
                        member_definitional(&y, &zeros, params).unwrap(),
                        y.count_nonzero() <= t + p,
                        "y={y} n={n} {params:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn reductions_hold_as_inclusions_on_examples() {
    let x = Sequence::parse("0101", q(2)).unwrap();
    let pairs = [
        (BallParams::new(2, 2, 0), BallParams::new(0, 0, 2)),
        (BallParams::new(1, 2, 1), BallParams::new(0, 1, 2)),
        (BallParams::new(2, 1, 1), BallParams::new(1, 0, 2)),
    ];
    for (outer, inner) in pairs {
        assert!(ball(&x, inner)
            .unwrap()
            .is_subset(&ball(&x, outer).unwrap()));
    }
}
