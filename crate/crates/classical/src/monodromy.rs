use crate::lax::lax_l;
use crate::Mat2;
use num_complex::Complex64;

/// tr L(λ|x̂_N,X̂_N) ⋯ L(λ|x̂_1,X̂_1).
pub fn monodromy_trace(lambda: Complex64, x: &[f64], big_x: &[f64], d1: f64, d2: f64) -> Complex64 {
    let mut m = Mat2::identity();
    for (xi, bi) in x.iter().zip(big_x) {
        m = lax_l(lambda, *xi, *bi, d1, d2) * m;
    }
    m.trace()
}

type Poly = Vec<f64>;

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut r = vec![0.0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        r[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        r[i] += v;
    }
    r
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut r = vec![0.0; a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        for (j, v) in b.iter().enumerate() {
            r[i + j] += u * v;
        }
    }
    r
}

/// Coefficients of the trace as a polynomial in λ, lowest degree first.
pub fn trace_coefficients(x: &[f64], big_x: &[f64], d1: f64, d2: f64) -> Vec<f64> {
    let mut m: [[Poly; 2]; 2] = [[vec![1.0], vec![0.0]], [vec![0.0], vec![1.0]]];
    for (xi, bi) in x.iter().zip(big_x) {
        let l: [[Poly; 2]; 2] = [
            [vec![-bi, 1.0], vec![0.0, (d2 + d1 * bi) * xi]],
            [vec![-1.0 / xi], vec![-d2]],
        ];
        let mut r: [[Poly; 2]; 2] = Default::default();
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = padd(&pmul(&l[i][0], &m[0][j]), &pmul(&l[i][1], &m[1][j]));
            }
        }
        m = r;
    }
    let mut c = padd(&m[0][0], &m[1][1]);
    c.resize(x.len() + 1, 0.0);
    c
}
