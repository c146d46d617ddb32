use kernels::*;
use num_complex::Complex64;
use opcalc::{ModelKind, Side};
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -0.28f64..0.28).prop_map(|(a, b)| Complex64::new(a, b))
}

fn kind() -> impl Strategy<Value = ModelKind> {
    prop::sample::select(ModelKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_translation_invariant(k in kind(), x in prop::collection::vec(pt(), 2), y in prop::collection::vec(pt(), 2), l in pt(), r in -4.0f64..4.0) {
        let kernel = Kernel::new(KernelParams::default_for(k)).unwrap();
        let a = kernel.q(l, &x, &y).unwrap();
        let xs: Vec<_> = x.iter().map(|v| v + r).collect();
        let ys: Vec<_> = y.iter().map(|v| v + r).collect();
        let b = kernel.q(l, &xs, &ys).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn shift_identity_holds(k in kind(), x in pt(), y in pt(), yp in pt(), l in pt()) {
        let kernel = Kernel::new(KernelParams::default_for(k)).unwrap();
        prop_assert!(kernel.shift_identity_residual(l, x, y, yp).unwrap() < 1e-10);
    }

    #[test]
    fn baxter_two_sites(k in kind(), x in prop::collection::vec(pt(), 2), y in prop::collection::vec(pt(), 2), l in pt()) {
        let kernel = Kernel::new(KernelParams::default_for(k)).unwrap();
        prop_assert!(baxter_residual(&x, &y, l, &kernel, Side::Direct).unwrap() < 1e-8);
    }
}
