use std::collections::HashSet;

use idsball::{
    ball, bijection_insertion, bijection_insertion_inverse, injection_idp, insertion_ball,
    matching_set, project, run_count, witness_nonsurjective, Alphabet, BallParams, BallSet,
    Sequence,
};

fn alphabets() -> impl Iterator<Item = Alphabet> {
    [2, 3].into_iter().map(|q| Alphabet::new(q).unwrap())
}

#[test]
fn insertion_map_is_a_bijection() {
    for q in alphabets() {
        for n in 0..=4 {
            for t in 0..=3 {
                let zeros = Sequence::zeros(q, n);
                let domain = insertion_ball(&zeros, t);
                for x in Sequence::all(q, n) {
                    let mut image = Vec::new();
                    for y in &domain {
                        let trace = bijection_insertion(y, &x, t).unwrap();
                        assert_eq!(trace.matched, matching_set(&zeros, y).unwrap());
                        assert_eq!(project(&trace.output, &trace.matched).unwrap(), x);
                        assert_eq!(
                            bijection_insertion_inverse(&trace.output, &x, t).unwrap(),
                            *y
                        );
                        image.push(trace.output);
                    }
                    let image = BallSet::from_words(q, n + t, image).unwrap();
                    assert_eq!(image.len(), domain.len());
                    assert_eq!(image, insertion_ball(&x, t), "x={x} t={t}");
                }
            }
        }
    }
}

#[test]
fn idp_map_is_injective_and_strict_exactly_when_expected() {
    for q in alphabets() {
        for n in 0..=4 {
            for (t, p) in itertools::iproduct!(0..=2, 0..=2) {
                let params = BallParams::new(t, 0, p);
                let domain = ball(&Sequence::zeros(q, n), params).unwrap();
                for x in Sequence::all(q, n) {
                    let target = ball(&x, params).unwrap();
                    let mut image = HashSet::new();
                    for y in &domain {
                        let trace = injection_idp(y, &x, t, p).unwrap();
                        let (i, j, k) =
                            (&trace.matched, trace.fill.unwrap(), trace.anchors.unwrap());
                        assert!(i.is_disjoint(&j));
                        assert_eq!(k, i.union(&j));
                        assert_eq!(k.len(), n);
                        assert!(target.contains(&trace.output));
                        assert!(
                            image.insert(trace.output),
                            "collision for x={x} t={t} p={p}"
                        );
                    }
                    let strict = t >= 1 && p >= 1 && p < n && run_count(&x) > 1;
                    assert_eq!(image.len() < target.len(), strict, "x={x} t={t} p={p}");
                    if strict {
                        let witness = witness_nonsurjective(&x, t, p).unwrap().word;
                        assert!(target.contains(&witness));
                        assert!(
                            !image.contains(&witness),
                            "witness {witness} has a preimage"
                        );
                    }
                }
            }
        }
    }
}
