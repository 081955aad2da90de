use std::collections::BTreeMap;
use std::fmt;

use super::{qq, MRatFun, QqFun, Ring, StarDual, STAR_PAIRS};

/// Normal-ordered monomial `x^α k^β`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TMono {
    pub x: [i8; STAR_PAIRS],
    pub k: [i8; STAR_PAIRS],
}

impl TMono {
    pub const ONE: TMono = TMono {
        x: [0; STAR_PAIRS],
        k: [0; STAR_PAIRS],
    };

    /// `q`-exponent picked up when moving `k^β` past `x^γ`.
    fn twist(beta: &[i8; STAR_PAIRS], gamma: &[i8; STAR_PAIRS]) -> i32 {
        beta.iter().zip(gamma).map(|(&b, &g)| b as i32 * g as i32).sum()
    }

    fn mul(&self, o: &TMono) -> (TMono, i32) {
        let mut m = *self;
        for a in 0..STAR_PAIRS {
            m.x[a] += o.x[a];
            m.k[a] += o.k[a];
        }
        (m, Self::twist(&self.k, &o.x))
    }
}

/// Quantum torus `k_a x_b = q^{δ_ab} x_b k_a` over rational functions of `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QTorus {
    terms: BTreeMap<TMono, QqFun>,
}

impl QTorus {
    pub fn zero() -> Self {
        QTorus { terms: BTreeMap::new() }
    }

    pub fn scalar(c: QqFun) -> Self {
        Self::term(TMono::ONE, c)
    }

    pub fn term(m: TMono, c: QqFun) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QTorus { terms }
    }

    pub fn x(a: usize, e: i8) -> Self {
        let mut m = TMono::ONE;
        m.x[a] = e;
        Self::term(m, QqFun::one())
    }

    pub fn k(a: usize, e: i8) -> Self {
        let mut m = TMono::ONE;
        m.k[a] = e;
        Self::term(m, QqFun::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TMono, &QqFun)> {
        self.terms.iter()
    }

    fn accumulate(terms: &mut BTreeMap<TMono, QqFun>, m: TMono, c: QqFun) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    terms.remove(&m);
                }
            }
            None => {
                terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &QqFun) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTorus {
            terms: self.terms.iter().map(|(m, v)| (*m, v.mul(c))).collect(),
        }
    }

    /// First-order symbol at `q = 1 + h`; `None` when a coefficient depends
    /// on more than `q`.
    pub fn to_star(&self) -> Option<StarDual> {
        let mut c0 = MRatFun::zero();
        let mut c1 = MRatFun::zero();
        for (m, c) in &self.terms {
            let d = qq::h_expand(c)?;
            let mono = mono_fun(m);
            c0 = c0.add(&mono.scale(&d.a));
            c1 = c1.add(&mono.scale(&d.b));
        }
        Some(StarDual::new(c0, c1))
    }
}

fn mono_fun(m: &TMono) -> MRatFun {
    let mut f = MRatFun::one();
    for a in 0..STAR_PAIRS {
        if m.x[a] != 0 {
            f = f.mul(&MRatFun::var_pow(StarDual::x_var(a), m.x[a] as i32));
        }
        if m.k[a] != 0 {
            f = f.mul(&MRatFun::var_pow(StarDual::k_var(a), m.k[a] as i32));
        }
    }
    f
}

impl fmt::Display for QTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for a in 0..STAR_PAIRS {
                if m.x[a] != 0 {
                    write!(f, "·x{a}^{}", m.x[a])?;
                }
            }
            for a in 0..STAR_PAIRS {
                if m.k[a] != 0 {
                    write!(f, "·k{a}^{}", m.k[a])?;
                }
            }
        }
        Ok(())
    }
}

impl Ring for QTorus {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::scalar(QqFun::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            Self::accumulate(&mut terms, *m, c.clone());
        }
        QTorus { terms }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let (m, e) = m1.mul(m2);
                let c = c1.mul(c2);
                let c = if e == 0 { c } else { c.mul(&qq::qpow(e)) };
                Self::accumulate(&mut terms, m, c);
            }
        }
        QTorus { terms }
    }
    fn neg(&self) -> Self {
        QTorus {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
    /// Only monomials are invertible here.
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let mut inv = TMono::ONE;
        for a in 0..STAR_PAIRS {
            inv.x[a] = -m.x[a];
            inv.k[a] = -m.k[a];
        }
        let e = TMono::twist(&m.k, &m.x);
        Some(Self::term(inv, c.inv()?.mul(&qq::qpow(e))))
    }
    fn int_like(&self, k: i64) -> Self {
        Self::scalar(QqFun::from_int(k))
    }
    fn size_hint(&self) -> usize {
        self.terms.values().map(|c| c.weight()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_and_inverse() {
        let (x, k) = (QTorus::x(0, 1), QTorus::k(0, 1));
        assert_eq!(k.mul(&x), x.mul(&k).scale(&qq::q()));
        let y = QTorus::x(1, 1);
        assert_eq!(k.mul(&y), y.mul(&k));
        let m = x.mul(&k).mul(&k);
        let mi = m.try_inv().unwrap();
        assert!(m.mul(&mi).is_one() && mi.mul(&m).is_one());
    }

    #[test]
    fn symbol_of_product_is_star_product() {
        let (x, k) = (QTorus::x(0, 1), QTorus::k(0, 2));
        let a = k.add(&x);
        let b = x.mul(&k).sub(&QTorus::k(0, -1));
        let lhs = a.mul(&b).to_star().unwrap();
        let rhs = a.to_star().unwrap().mul(&b.to_star().unwrap());
        assert_eq!(lhs, rhs);
    }
}
