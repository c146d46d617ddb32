//! CSV dumps of kernel values on a grid, for plotting.

use crate::error::Result;
use num_complex::Complex64;
use std::fmt::Write;

/// One row per grid point: `re_x, im_x, ..., re_val, im_val`.
/// Points where `f` fails are skipped.
pub fn grid_csv<F>(points: &[Vec<Complex64>], f: F) -> Result<String>
where
    F: Fn(&[Complex64]) -> Result<Complex64>,
{
    let mut out = String::new();
    for pt in points {
        let Ok(v) = f(pt) else { continue };
        for z in pt {
            write!(out, "{:.15e},{:.15e},", z.re, z.im).unwrap();
        }
        writeln!(out, "{:.15e},{:.15e}", v.re, v.im).unwrap();
    }
    Ok(out)
}

/// Regular grid on the rectangle [re0, re1] × [im0, im1] with `n` points per side.
pub fn rectangle(re: (f64, f64), im: (f64, f64), n: usize) -> Vec<Complex64> {
    let n = n.max(2);
    let step = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (n - 1) as f64;
    (0..n)
        .flat_map(|i| (0..n).map(move |j| Complex64::new(step(re.0, re.1, j), step(im.0, im.1, i))))
        .collect()
}
