//! Compensated (Kahan) summation for reproducible accumulation of the
//! oscillatory zero sums and long prime sums.

use num_complex::Complex64;

/// Kahan-compensated accumulator for `f64`.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

/// Kahan-compensated accumulator for complex values (componentwise).
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_beats_naive_on_ill_conditioned_sum() {
        // 1 + N tiny values that naive summation drops entirely.
        let tiny = 1e-16;
        let n = 100_000;
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..n {
            k.add(tiny);
        }
        let exact = 1.0 + n as f64 * tiny;
        assert!((k.value() - exact).abs() < 1e-15);
    }

    #[test]
    fn complex_accumulator_matches_componentwise() {
        let vals = [
            Complex64::new(1.0, -2.0),
            Complex64::new(0.25, 0.5),
            Complex64::new(-0.75, 1.5),
        ];
        let mut acc = KahanComplex::new();
        for v in vals {
            acc.add(v);
        }
        assert_eq!(acc.value(), Complex64::new(0.5, 0.0));
    }
}
