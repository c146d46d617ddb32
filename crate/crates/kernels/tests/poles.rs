use kernels::*;
use num_complex::Complex64;
use opcalc::ModelKind;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn blow_up_matches_printed_families() {
    let u = [c(0.31, 0.0), c(0.0, 0.0)];
    let w = [c(-0.17, 0.0), c(0.42, 0.0)];
    let lambda = c(0.23, 0.04);
    for kind in ModelKind::ALL {
        let kernel = Kernel::new(KernelParams::default_for(kind)).unwrap();
        for fam in PoleFamily::ALL {
            for m in -2..=2 {
                for n in -2..=2 {
                    for site in 0..2 {
                        let b = detect_blow_up(fam, site, m, n, lambda, &u, &w, &kernel).unwrap();
                        let predicted = fam.predicts_pole(&kernel, m, n);
                        assert_eq!(
                            b.kind == Singularity::Pole,
                            predicted,
                            "{kind:?} {fam:?} site {site} (m,n)=({m},{n}) exponent {}",
                            b.exponent
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn simple_poles_have_unit_exponent() {
    let u = [c(0.31, 0.0), c(0.0, 0.0)];
    let w = [c(-0.17, 0.0), c(0.42, 0.0)];
    let kernel = Kernel::new(KernelParams::default_for(ModelKind::Generic)).unwrap();
    let b = detect_blow_up(PoleFamily::XVT, 0, 0, 0, c(0.23, 0.04), &u, &w, &kernel).unwrap();
    assert!((b.exponent - 1.0).abs() < 1e-2, "{}", b.exponent);
}
