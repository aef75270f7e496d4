//! Dense univariate polynomials over one finite field, ascending
//! coefficients, normalized with no trailing zeros. Just enough machinery
//! for Cantor arithmetic: division with remainder, extended gcd, derivative
//! and evaluation.

use std::sync::Arc;

use crate::ff::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Arc<FieldSpec>,
    coeffs: Vec<FieldElement>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let idx: Vec<u64> = self.coeffs.iter().map(|c| c.index()).collect();
        write!(f, "Poly{idx:?}")
    }
}

impl Poly {
    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<FieldSpec>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![FieldElement::one(field)],
        }
    }

    pub fn x(field: &Arc<FieldSpec>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![FieldElement::zero(field), FieldElement::one(field)],
        }
    }

    pub fn from_coeffs(field: &Arc<FieldSpec>, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    /// x - a
    pub fn linear(a: &FieldElement) -> Self {
        Poly::from_coeffs(a.field(), vec![a.neg(), FieldElement::one(a.field())])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = FieldElement::zero(&self.field);
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                a.add(b).unwrap()
            })
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let zero = FieldElement::zero(&self.field);
        let mut coeffs = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b).unwrap()).unwrap();
            }
        }
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Poly::from_coeffs(
            &self.field,
            self.coeffs.iter().map(|c| c.mul(s).unwrap()).collect(),
        )
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let zero = FieldElement::zero(&self.field);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero.clone(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lead_inv).unwrap();
            if !factor.is_zero() {
                quot[shift] = factor.clone();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = factor.mul(dc).unwrap();
                    rem[shift + i] = rem[shift + i].sub(&t).unwrap();
                }
            }
            rem.pop();
        }
        (
            Poly::from_coeffs(&self.field, quot),
            Poly::from_coeffs(&self.field, rem),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact division, panicking on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// g = gcd(self, other) monic, with g = s * self + t * other.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(&self.field);
        let mut s1 = Poly::zero(&self.field);
        let mut t0 = Poly::zero(&self.field);
        let mut t1 = Poly::one(&self.field);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let p = self.field.characteristic;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let k = FieldElement::from_prime(&self.field, (i as u64) % p);
                c.mul(&k).unwrap()
            })
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).unwrap().add(c).unwrap();
        }
        acc
    }

    /// Applies a coefficient-wise field map, e.g. Frobenius.
    pub fn map_coeffs(&self, f: impl Fn(&FieldElement) -> FieldElement) -> Self {
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;

    fn f11() -> Arc<FieldSpec> {
        FieldSpec::new(11, 1, vec![0, 1]).unwrap()
    }

    fn poly(field: &Arc<FieldSpec>, cs: &[u64]) -> Poly {
        Poly::from_coeffs(
            field,
            cs.iter().map(|&c| FieldElement::from_prime(field, c)).collect(),
        )
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = f11();
        let a = poly(&f, &[3, 0, 7, 2, 1]);
        let b = poly(&f, &[5, 1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn ext_gcd_is_bezout() {
        let f = f11();
        let a = poly(&f, &[0, 1]).mul(&poly(&f, &[1, 1])); // x(x+1)
        let b = poly(&f, &[1, 1]).mul(&poly(&f, &[2, 1])); // (x+1)(x+2)
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(&f, &[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        // gcd with zero
        let (g2, s2, _) = a.ext_gcd(&Poly::zero(&f));
        assert_eq!(g2, a.monic());
        assert_eq!(s2.mul(&a), g2);
    }

    #[test]
    fn derivative_and_eval() {
        let f = f11();
        let p = poly(&f, &[1, 0, 3, 5]); // 1 + 3x^2 + 5x^3
        assert_eq!(p.derivative(), poly(&f, &[0, 6, 4])); // 6x + 15x^2 = 6x+4x^2
        let two = FieldElement::from_prime(&f, 2);
        // p(2) = 1 + 12 + 40 = 53 = 9 mod 11
        assert_eq!(p.eval(&two), FieldElement::from_prime(&f, 9));
    }
}
