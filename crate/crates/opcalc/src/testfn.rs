use num_complex::Complex64;

/// ∏_j exp(γ_j x_j² + c_j x_j + s_j) with Re γ_j < 0.
#[derive(Clone, Debug, PartialEq)]
pub struct TestFunction {
    pub gamma: Vec<Complex64>,
    pub c: Vec<Complex64>,
    pub s: Vec<Complex64>,
}

impl TestFunction {
    pub fn new(gamma: Vec<Complex64>, c: Vec<Complex64>, s: Vec<Complex64>) -> Self {
        assert!(gamma.len() == c.len() && c.len() == s.len());
        assert!(gamma.iter().all(|g| g.re < 0.0), "Re γ must be negative");
        Self { gamma, c, s }
    }

    /// γ = -1 and s = 0 at every site.
    pub fn gaussian(c: Vec<Complex64>) -> Self {
        let n = c.len();
        Self::new(vec![Complex64::new(-1.0, 0.0); n], c, vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn sites(&self) -> usize {
        self.c.len()
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        let e: Complex64 = (0..self.sites())
            .map(|j| self.gamma[j] * x[j] * x[j] + self.c[j] * x[j] + self.s[j])
            .sum();
        e.exp()
    }

    /// x ↦ k e^{a·x} f(x+σ), which stays in the family.
    pub fn transformed(&self, k: Complex64, a: &[Complex64], sigma: &[Complex64]) -> Self {
        let n = self.sites();
        let mut out = self.clone();
        for j in 0..n {
            let (g, c, s) = (self.gamma[j], self.c[j], self.s[j]);
            out.c[j] = c + 2.0 * g * sigma[j] + a[j];
            out.s[j] = s + g * sigma[j] * sigma[j] + c * sigma[j];
        }
        out.s[0] += k.ln();
        out
    }
}
