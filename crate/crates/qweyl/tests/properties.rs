use proptest::prelude::*;
use qweyl::*;
use std::sync::Arc;

type Q = Rational;

fn algebra(th: &[i32; 6]) -> Arc<WeylAlgebra<Q>> {
    let mut theta = vec![vec![0; 4]; 4];
    let mut n = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            theta[i][j] = th[n];
            theta[j][i] = -th[n];
            n += 1;
        }
    }
    WeylAlgebra::new(theta, vec![1; 4], default_q(), 40).unwrap()
}

/// Normal form by random adjacent transpositions, merging equal neighbours.
fn bubble(alg: &WeylAlgebra<Q>, word: &[(usize, i32)], picks: &[usize]) -> (Vec<i32>, i64) {
    let mut w: Vec<(usize, i32)> = word.to_vec();
    let mut phase = 0i64;
    let mut pick = picks.iter().cycle();
    loop {
        w.retain(|&(_, p)| p != 0);
        let mut merged: Vec<(usize, i32)> = Vec::new();
        for &(g, p) in &w {
            match merged.last_mut() {
                Some((h, r)) if *h == g => *r += p,
                _ => merged.push((g, p)),
            }
        }
        w = merged;
        let bad: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&k| w[k].0 > w[k + 1].0).collect();
        if bad.is_empty() {
            break;
        }
        let k = bad[pick.next().unwrap() % bad.len()];
        let ((i, a), (j, b)) = (w[k], w[k + 1]);
        phase += 2 * alg.theta(i, j) as i64 * a as i64 * b as i64;
        w.swap(k, k + 1);
    }
    let mut e = vec![0; alg.rank()];
    for (g, p) in w {
        e[g] += p;
    }
    (e, phase)
}

fn word() -> impl Strategy<Value = Vec<(usize, i32)>> {
    prop::collection::vec((0usize..4, -2i32..=3), 0..9)
}

fn series(alg: &Arc<WeylAlgebra<Q>>, terms: &[(Vec<i32>, i64)]) -> WeylSeries<Q> {
    terms.iter().fold(WeylSeries::zero(alg), |acc, (e, c)| {
        acc + WeylSeries::monomial(alg, e.clone(), rat(*c, 1)).unwrap()
    })
}

fn terms(min_deg: i32) -> impl Strategy<Value = Vec<(Vec<i32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0i32..3, 2), -3i64..=3), 1..6).prop_map(move |v| {
        v.into_iter()
            .filter(|(e, _)| e.iter().sum::<i32>() >= min_deg)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_order_confluent(th in prop::array::uniform6(-2i32..=2), w in word(), picks in prop::collection::vec(0usize..64, 1..32)) {
        let alg = algebra(&th);
        let s = normal_order(&alg, &w).unwrap();
        let (e, phase) = bubble(&alg, &w, &picks);
        prop_assert_eq!(s.terms().len(), 1);
        prop_assert_eq!(s.coeff(&e), alg.qpow(phase));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn truncation_is_consistent(a in terms(0), b in terms(0), theta in -2i32..=2) {
        let k = 3;
        let big = WeylAlgebra::pair(theta, default_q(), 8).unwrap();
        let (sa, sb) = (series(&big, &a), series(&big, &b));
        let full = (&sa * &sb).truncate(k);
        let cut = (sa.truncate(k) * sb.truncate(k)).truncate(k);
        prop_assert_eq!(full.terms(), cut.terms());
    }

    #[test]
    fn qexp_inverts_compact_s(a in terms(1), theta in -2i32..=2) {
        let alg = WeylAlgebra::pair(theta, default_q(), 5).unwrap();
        let x = series(&alg, &a);
        let one = WeylSeries::one(&alg);
        prop_assert_eq!(qexp(&x, 5).unwrap() * compact_s(&x, 5).unwrap(), one.clone());
        prop_assert_eq!(compact_s(&x, 5).unwrap() * qexp(&x, 5).unwrap(), one);
    }

    #[test]
    fn associativity(a in terms(0), b in terms(0), c in terms(0), theta in -2i32..=2) {
        let alg = WeylAlgebra::pair(theta, default_q(), 6).unwrap();
        let (x, y, z) = (series(&alg, &a), series(&alg, &b), series(&alg, &c));
        prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
    }
}
