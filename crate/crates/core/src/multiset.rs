//! Generating functions for multisets drawn from a weighted class.
//!
//! If `A(x)` counts objects by size, [`h2`] counts unordered pairs of them and
//! [`h_all`] counts multisets of any cardinality. `h_all` is the Euler
//! transform, computed with integer arithmetic only: writing
//! `c_m = sum_{d | m} d a_d`, the multiset series `g` satisfies
//! `n g_n = sum_{m=1}^{n} c_m g_{n-m}` and every division by `n` is exact.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::PowerSeries;

/// `h_2[A] = (A(x)^2 + A(x^2)) / 2`.
pub fn h2<C: Scalar>(a: &PowerSeries<C>) -> PowerSeries<C> {
    let doubled = &(a * a) + &a.scale_exponents(2).expect("scale 2 is valid");
    doubled
        .div_exact(2)
        .expect("A^2 + A(x^2) has even coefficients for any integer series")
}

/// `h[A] = exp(sum_k A(x^k)/k)`, the generating function of all multisets.
pub fn h_all<C: Scalar>(a: &PowerSeries<C>) -> Result<PowerSeries<C>> {
    if !a.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut euler = EulerTransform::new();
    for n in 1..=a.order() {
        euler.push(a.coeff(n))?;
    }
    Ok(euler.into_series())
}

/// Incremental Euler transform.
///
/// Feeding `a_1, a_2, ...` one at a time yields `g_n` as soon as `a_n` is
/// known, which is what the tree solvers need: their next unknown coefficient
/// is a function of the multiset series at the previous degree.
#[derive(Debug, Clone)]
pub struct EulerTransform<C> {
    input: Vec<C>,
    weights: Vec<C>,
    output: Vec<C>,
}

impl<C: Scalar> Default for EulerTransform<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Scalar> EulerTransform<C> {
    pub fn new() -> Self {
        Self {
            input: vec![C::zero()],
            weights: vec![C::zero()],
            output: vec![C::one()],
        }
    }

    /// Number of input coefficients consumed so far.
    pub fn len(&self) -> usize {
        self.input.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Supply `a_n` for the next `n` and return `g_n`.
    pub fn push(&mut self, a_n: C) -> Result<&C> {
        let n = self.input.len();
        self.input.push(a_n);

        let mut weight = C::zero();
        let mut d = 1;
        while d * d <= n {
            if n.is_multiple_of(d) {
                self.add_divisor_term(&mut weight, d);
                let e = n / d;
                if e != d {
                    self.add_divisor_term(&mut weight, e);
                }
            }
            d += 1;
        }
        self.weights.push(weight);

        let mut acc = C::zero();
        for m in 1..=n {
            if self.weights[m].is_zero() {
                continue;
            }
            let mut t = self.weights[m].clone();
            t *= &self.output[n - m];
            acc += &t;
        }
        let divisor = C::from_count(n);
        let g_n = acc
            .exact_div(&divisor)
            .ok_or_else(|| Error::InexactDivision {
                exponent: n,
                divisor: divisor.to_string(),
            })?;
        self.output.push(g_n);
        Ok(&self.output[n])
    }

    fn add_divisor_term(&self, weight: &mut C, d: usize) {
        if self.input[d].is_zero() {
            return;
        }
        let mut t = C::from_count(d);
        t *= &self.input[d];
        *weight += &t;
    }

    pub fn into_series(self) -> PowerSeries<C> {
        PowerSeries::from_coeffs(self.output).expect("output always holds g_0")
    }
}
