use std::fmt;

use super::QqFun;

/// Power series in `x` with `QqFun` coefficients, truncated after `x^K`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<QqFun>,
}

impl TruncSeries {
    /// Series from coefficients of `x^0 .. x^K`; missing ones are zero.
    pub fn new(mut coeffs: Vec<QqFun>, order: usize) -> Self {
        coeffs.resize(order + 1, QqFun::zero());
        TruncSeries { coeffs }
    }

    pub fn constant(c: QqFun, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c x`.
    pub fn x(c: QqFun, order: usize) -> Self {
        Self::new(vec![QqFun::zero(), c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &QqFun {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QqFun] {
        &self.coeffs
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.order(), o.order(), "series truncation orders differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect();
        TruncSeries { coeffs: c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect();
        TruncSeries { coeffs: c }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let k = self.order();
        let mut c = vec![QqFun::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(k + 1 - i) {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries { coeffs: c }
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inv(&self) -> Option<Self> {
        let c0 = self.coeffs[0].inv()?;
        let k = self.order();
        let mut out = vec![QqFun::zero(); k + 1];
        out[0] = c0.clone();
        for m in 1..=k {
            let mut s = QqFun::zero();
            for j in 1..=m {
                s = s.add(&self.coeffs[j].mul(&out[m - j]));
            }
            out[m] = s.mul(&c0).neg();
        }
        Some(TruncSeries { coeffs: out })
    }

    /// `s(c x)`.
    pub fn substitute_scaled(&self, c: &QqFun) -> Self {
        let mut p = QqFun::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&p));
            p = p.mul(c);
        }
        TruncSeries { coeffs: out }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})x^{k}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }?;
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qq::*;

    #[test]
    fn one_plus_x_times_one_minus_x() {
        let a = TruncSeries::new(vec![int(1), int(1)], 3);
        let b = TruncSeries::new(vec![int(1), int(-1)], 3);
        assert_eq!(a.mul(&b), TruncSeries::new(vec![int(1), int(0), int(-1)], 3));
    }

    #[test]
    fn geometric_inverse() {
        let s = TruncSeries::new(vec![int(1), q().neg()], 2);
        let inv = s.inv().unwrap();
        assert_eq!(inv, TruncSeries::new(vec![int(1), q(), qpow(2)], 2));
        assert!(TruncSeries::x(int(1), 2).inv().is_none());
    }

    #[test]
    fn scaled_substitution() {
        let s = TruncSeries::new(vec![int(1), int(1)], 4);
        assert_eq!(s.substitute_scaled(&qpow(2)), TruncSeries::new(vec![int(1), qpow(2)], 4));
        assert_eq!(s.substitute_scaled(&int(1)), s);
    }
}
