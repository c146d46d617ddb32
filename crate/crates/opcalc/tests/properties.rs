use num_complex::Complex64;
use opcalc::{OpWord, TestFunction};
use proptest::prelude::*;

fn cx() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn word() -> impl Strategy<Value = OpWord> {
    prop::collection::vec((cx(), cx(), cx(), cx(), cx()), 1..4).prop_map(|terms| {
        terms.into_iter().fold(OpWord::zero(2), |acc, (k, a0, a1, s0, s1)| {
            let t = OpWord::scalar(k, 2)
                .compose(&OpWord::mult(0, a0, 2))
                .compose(&OpWord::mult(1, a1, 2))
                .compose(&OpWord::shift(0, s0, 2))
                .compose(&OpWord::shift(1, s1, 2));
            acc.add(&t)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in word(), b in word(), c in word()) {
        let l = a.compose(&b).compose(&c);
        let r = a.compose(&b.compose(&c));
        prop_assert!(l.sub(&r).coeff_norm() < 1e-12 * l.coeff_norm().max(1.0));
    }

    #[test]
    fn composition_matches_successive_action(a in word(), b in word(), c0 in cx(), c1 in cx(), x0 in cx(), x1 in cx()) {
        let f = TestFunction::gaussian(vec![c0, c1]);
        let x = [x0, x1];
        let direct = a.compose(&b).apply(&f, &x);
        let mut twice = Complex64::new(0.0, 0.0);
        for t in b.terms() {
            twice += a.apply(&f.transformed(t.coeff, &t.mult, &t.shift), &x);
        }
        prop_assert!((direct - twice).norm() < 1e-10 * direct.norm().max(1.0));
    }

    #[test]
    fn single_term_action_in_family(k in cx(), a in cx(), s in cx(), c0 in cx(), x in cx()) {
        prop_assume!(k.norm() > 1e-3);
        let f = TestFunction::gaussian(vec![c0]);
        let w = OpWord::scalar(k, 1).compose(&OpWord::mult(0, a, 1)).compose(&OpWord::shift(0, s, 1));
        let g = f.transformed(k, &[a], &[s]);
        let (u, v) = (w.apply(&f, &[x]), g.eval(&[x]));
        prop_assert!((u - v).norm() < 1e-12 * u.norm().max(1.0));
    }
}
