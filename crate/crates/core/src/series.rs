//! Truncated formal power series with exact coefficients.
//!
//! A [`PowerSeries`] stores `c_0, ..., c_N` where `N` is the truncation order,
//! the highest exponent the value is known to. Binary operations return a
//! series truncated to the smaller of the two operand orders, so a result
//! never claims more precision than its inputs had.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> PowerSeries<C> {
    /// Build a series from `c_0..=c_N`. The order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Build a series from small integers; handy in tests and examples.
    pub fn from_i64s(order: usize, values: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (n, v) in values.iter().enumerate().take(order + 1) {
            s.coeffs[n] = C::from_i64(*v).expect("value does not fit the coefficient type");
        }
        s
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^exponent`, which is the zero series when `exponent > order`.
    pub fn monomial(c: C, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `x/(1+x) = x - x^2 + x^3 - ...`
    pub fn x_over_one_plus_x(order: usize) -> Self {
        let mut s = Self::zero(order);
        for n in 1..=order {
            s.coeffs[n] = if n % 2 == 1 { C::one() } else { -C::one() };
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [C] {
        &mut self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop every term above `order`. Truncating to a higher order is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut c = self.coeffs[n].clone();
                c += &other.coeffs[n];
                c
            })
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut c = self.coeffs[n].clone();
                c -= &other.coeffs[n];
                c
            })
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let mut t = a.clone();
                t *= b;
                out.coeffs[i + j] += &t;
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let mut t = a.clone();
                    t *= c;
                    t
                })
                .collect(),
        }
    }

    /// Multiply by `x^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for n in k..=self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// `A(x^k)`: the coefficient of `x^m` moves to `x^(k m)`.
    pub fn scale_exponents(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for m in 0..=order / k {
            out.coeffs[k * m] = self.coeffs[m].clone();
        }
        Ok(out)
    }

    /// `e^f` for `f(0) = 0`, via `(n+1) g_{n+1} = sum_{k=0}^{n} (k+1) f_{k+1} g_{n-k}`.
    ///
    /// Over an integer ring the division by `n+1` must come out exact, which
    /// holds whenever the true exponential has integer coefficients; otherwise
    /// [`Error::InexactDivision`] names the first exponent where it fails.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        // (k+1) f_{k+1}, i.e. the coefficients of f'
        let deriv: Vec<C> = (0..order)
            .map(|k| {
                let mut t = C::from_count(k + 1);
                t *= &self.coeffs[k + 1];
                t
            })
            .collect();
        let mut g = Self::zero(order);
        g.coeffs[0] = C::one();
        for n in 0..order {
            let mut acc = C::zero();
            for (k, d) in deriv.iter().enumerate().take(n + 1) {
                if d.is_zero() {
                    continue;
                }
                let mut t = d.clone();
                t *= &g.coeffs[n - k];
                acc += &t;
            }
            let divisor = C::from_count(n + 1);
            g.coeffs[n + 1] = acc
                .exact_div(&divisor)
                .ok_or_else(|| Error::InexactDivision {
                    exponent: n + 1,
                    divisor: divisor.to_string(),
                })?;
        }
        Ok(g)
    }

    /// Composition `self(inner(x))`, evaluated by Horner's rule with truncation at every step.
    pub fn substitute(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for n in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[n];
        }
        Ok(acc)
    }

    /// Divide every coefficient by `m`, failing at the first one that leaves a remainder.
    pub fn div_exact(&self, m: u64) -> Result<Self> {
        let divisor = C::from_u64(m).expect("divisor does not fit the coefficient type");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                c.exact_div(&divisor).ok_or_else(|| Error::InexactDivision {
                    exponent: n,
                    divisor: m.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    /// Map each coefficient into another ring.
    pub fn map<D: Scalar>(&self, f: impl FnMut(&C) -> D) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: Scalar> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::mul(self, rhs)
    }
}

impl<C: Scalar> Neg for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        PowerSeries::neg(self)
    }
}

impl<C: Scalar> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude == "1";
            match n {
                0 => f.write_str(&magnitude)?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{magnitude}x")?,
                _ if unit => write!(f, "x^{n}")?,
                _ => write!(f, "{magnitude}x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
