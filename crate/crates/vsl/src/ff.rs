//! Arithmetic in small finite fields F_{p^m} in polynomial basis, and dense
//! matrix algebra over them, including the entrywise Frobenius twist used by
//! the trace tests.
//!
//! Fields here are tiny (at most a few thousand elements); everything is kept
//! simple and allocation-heavy on purpose. Elements carry their field spec and
//! cross-field operations are hard errors, never coercions.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible: divisible by a degree-{0} factor")]
    ReducibleModulus(usize),
    #[error("modulus degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("multiplicative order of zero is undefined")]
    ZeroElement,
    #[error("operation requires characteristic 2")]
    OddCharacteristic,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("modulus is not monic")]
    NotMonic,
}

/// A finite field F_{p^m} presented as F_p[x]/(modulus).
///
/// `modulus` is stored with ascending-degree coefficients (constant term
/// first), length `degree + 1`, and is verified irreducible at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub degree: usize,
    pub modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `m`, both ascending, coefficients mod p.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + (p - lead % p) * mc) % p;
            }
        }
        a.pop();
    }
    a
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

impl FieldSpec {
    /// Validates and interns a field description. The modulus must be monic of
    /// the stated degree and irreducible over F_p; irreducibility is checked by
    /// exhaustive trial division (degrees up to 16 are supported).
    pub fn new(characteristic: u64, degree: usize, modulus: Vec<u64>) -> Result<Arc<Self>, FfError> {
        if !is_prime(characteristic) {
            return Err(FfError::NonPrimeCharacteristic(characteristic));
        }
        if degree == 0 || modulus.len() != degree + 1 {
            return Err(FfError::DegreeMismatch {
                expected: degree,
                got: modulus.len().saturating_sub(1),
            });
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % characteristic).collect();
        if *modulus.last().unwrap() != 1 {
            return Err(FfError::NotMonic);
        }
        assert!(degree <= 16, "irreducibility search is exhaustive; degree must be <= 16");
        // Trial division by every monic polynomial of degree 1..=degree/2.
        let p = characteristic;
        for d in 1..=degree / 2 {
            // Enumerate the p^d monic candidates by counting in base p.
            let count = (p as u128).pow(d as u32);
            for idx in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    cand.push((k % p as u128) as u64);
                    k /= p as u128;
                }
                cand.push(1);
                if poly_is_zero(&poly_rem(modulus.clone(), &cand, p)) {
                    return Err(FfError::ReducibleModulus(d));
                }
            }
        }
        Ok(Arc::new(FieldSpec {
            characteristic,
            degree,
            modulus,
        }))
    }

    /// F₂ itself.
    pub fn f2() -> Arc<Self> {
        FieldSpec::new(2, 1, vec![0, 1]).unwrap()
    }

    /// The canonical F_{2^m} used throughout: low-weight irreducible moduli,
    /// e.g. F₈ = F₂[x]/(x³+x+1) and F₃₂ = F₂[x]/(x⁵+x²+1).
    pub fn binary_default(m: usize) -> Result<Arc<Self>, FfError> {
        let modulus: Vec<u64> = match m {
            1 => vec![0, 1],
            2 => vec![1, 1, 1],
            3 => vec![1, 1, 0, 1],
            4 => vec![1, 1, 0, 0, 1],
            5 => vec![1, 0, 1, 0, 0, 1],
            6 => vec![1, 1, 0, 0, 0, 0, 1],
            7 => vec![1, 1, 0, 0, 0, 0, 0, 1],
            8 => vec![1, 1, 0, 1, 1, 0, 0, 0, 1],
            _ => return Err(FfError::DegreeMismatch { expected: 8, got: m }),
        };
        FieldSpec::new(2, m, modulus)
    }

    pub fn size(&self) -> u64 {
        self.characteristic.pow(self.degree as u32)
    }
}

/// A field element in polynomial-basis coordinates (length = degree,
/// ascending, reduced mod p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe{:?}", self.coeffs)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        FieldElement {
            field: field.clone(),
            coeffs: vec![0; field.degree],
        }
    }

    pub fn one(field: &Arc<FieldSpec>) -> Self {
        let mut coeffs = vec![0; field.degree];
        coeffs[0] = 1;
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(field: &Arc<FieldSpec>, coeffs: &[u64]) -> Self {
        let mut c = vec![0; field.degree];
        for (i, &v) in coeffs.iter().enumerate().take(field.degree) {
            c[i] = v % field.characteristic;
        }
        FieldElement {
            field: field.clone(),
            coeffs: c,
        }
    }

    /// The element with index `k` in the canonical enumeration: coordinates
    /// are the base-p digits of k, least significant digit = constant term.
    pub fn from_index(field: &Arc<FieldSpec>, mut k: u64) -> Self {
        let mut coeffs = vec![0; field.degree];
        for c in coeffs.iter_mut() {
            *c = k % field.characteristic;
            k /= field.characteristic;
        }
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    /// Inverse of `from_index`.
    pub fn index(&self) -> u64 {
        let mut k = 0u64;
        for &c in self.coeffs.iter().rev() {
            k = k * self.field.characteristic + c;
        }
        k
    }

    /// An element of the prime subfield.
    pub fn from_prime(field: &Arc<FieldSpec>, v: u64) -> Self {
        let mut coeffs = vec![0; field.degree];
        coeffs[0] = v % field.characteristic;
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// True when the element lies in the prime subfield F_p.
    pub fn in_prime_field(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) -> Result<(), FfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FfError::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FfError> {
        self.check_same(other)?;
        let p = self.field.characteristic;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        let p = self.field.characteristic;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FfError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FfError> {
        self.check_same(other)?;
        let p = self.field.characteristic;
        let m = self.field.degree;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let mut red = poly_rem(prod, &self.field.modulus, p);
        red.resize(m, 0);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: red,
        })
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, FfError> {
        if self.is_zero() {
            return Err(FfError::InverseOfZero);
        }
        let q = self.field.size();
        Ok(self.pow((q - 2) as u128))
    }

    /// Smallest k >= 1 with self^k = 1.
    pub fn multiplicative_order(&self) -> Result<u64, FfError> {
        if self.is_zero() {
            return Err(FfError::ZeroElement);
        }
        let one = FieldElement::one(&self.field);
        let mut acc = self.clone();
        let mut k = 1u64;
        while acc != one {
            acc = acc.mul(self).unwrap();
            k += 1;
        }
        Ok(k)
    }

    /// A primitive element generates the full multiplicative group.
    pub fn is_primitive(&self) -> Result<bool, FfError> {
        Ok(self.multiplicative_order()? == self.field.size() - 1)
    }

    /// Entrywise Frobenius x -> x^(2^i); characteristic 2 only.
    pub fn frobenius(&self, i: u32) -> Result<Self, FfError> {
        if self.field.characteristic != 2 {
            return Err(FfError::OddCharacteristic);
        }
        Ok(self.pow(1u128 << i))
    }
}

/// Iterator over every element of the field in index order.
pub fn field_elements(field: &Arc<FieldSpec>) -> impl Iterator<Item = FieldElement> + '_ {
    (0..field.size()).map(move |k| FieldElement::from_index(field, k))
}

/// The canonical primitive element: x when primitive, else the element of
/// smallest index that is primitive.
pub fn canonical_primitive(field: &Arc<FieldSpec>) -> FieldElement {
    if field.degree > 1 {
        let x = FieldElement::from_coeffs(field, &[0, 1]);
        if x.is_primitive().unwrap() {
            return x;
        }
    }
    for e in field_elements(field) {
        if !e.is_zero() && e.is_primitive().unwrap() {
            return e;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// A dense row-major matrix over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<_> = (0..self.cols).map(|c| self.at(r, c).coeffs.clone()).collect();
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

impl FieldMatrix {
    pub fn new(field: &Arc<FieldSpec>, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self, FfError> {
        if entries.len() != rows * cols {
            return Err(FfError::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field != *field {
                return Err(FfError::MixedFields);
            }
        }
        Ok(FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(field: &Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![FieldElement::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<FieldSpec>, n: usize) -> Self {
        let mut m = FieldMatrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = FieldElement::one(field);
        }
        m
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == FieldMatrix::identity(&self.field, self.rows)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FfError> {
        if self.field != other.field {
            return Err(FfError::MixedFields);
        }
        if self.cols != other.rows {
            return Err(FfError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FieldMatrix::zero(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(other.at(k, j))?;
                    *out.at_mut(i, j) = out.at(i, j).add(&t)?;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<FieldElement, FfError> {
        if self.rows != self.cols {
            return Err(FfError::ShapeMismatch("trace of non-square matrix".into()));
        }
        let mut t = FieldElement::zero(&self.field);
        for i in 0..self.rows {
            t = t.add(self.at(i, i))?;
        }
        Ok(t)
    }

    /// Determinant by fraction-free Gaussian elimination with row swaps.
    pub fn det(&self) -> Result<FieldElement, FfError> {
        if self.rows != self.cols {
            return Err(FfError::ShapeMismatch("det of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = FieldElement::one(&self.field);
        let mut neg = false;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot else {
                return Ok(FieldElement::zero(&self.field));
            };
            if pr != col {
                for c in 0..n {
                    let hi = m.at(pr, c).clone();
                    let lo = m.at(col, c).clone();
                    *m.at_mut(pr, c) = lo;
                    *m.at_mut(col, c) = hi;
                }
                neg = !neg;
            }
            let piv = m.at(col, col).clone();
            det = det.mul(&piv)?;
            let piv_inv = piv.inv()?;
            for r in col + 1..n {
                let factor = m.at(r, col).mul(&piv_inv)?;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let t = factor.mul(m.at(col, c))?;
                    *m.at_mut(r, c) = m.at(r, c).sub(&t)?;
                }
            }
        }
        if neg {
            det = det.neg();
        }
        Ok(det)
    }

    /// Kronecker product with the row-major index convention
    /// (block row i1 of A, inner row i2 of B) -> i1 * rows(B) + i2.
    pub fn kron(&self, other: &Self) -> Result<Self, FfError> {
        if self.field != other.field {
            return Err(FfError::MixedFields);
        }
        let mut out = FieldMatrix::zero(&self.field, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let v = a.mul(other.at(i2, j2))?;
                        *out.at_mut(i1 * other.rows + i2, j1 * other.cols + j2) = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise 2^i-th power; a ring homomorphism in characteristic 2.
    pub fn frobenius_twist(&self, i: u32) -> Result<Self, FfError> {
        if self.field.characteristic != 2 {
            return Err(FfError::OddCharacteristic);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| e.frobenius(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FieldMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> Arc<FieldSpec> {
        FieldSpec::binary_default(3).unwrap()
    }

    #[test]
    fn field_create_validates() {
        assert!(FieldSpec::new(2, 3, vec![1, 1, 0, 1]).is_ok());
        assert!(FieldSpec::new(2, 1, vec![0, 1]).is_ok());
        // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert_eq!(
            FieldSpec::new(2, 3, vec![1, 0, 0, 1]).unwrap_err(),
            FfError::ReducibleModulus(1)
        );
        assert_eq!(
            FieldSpec::new(4, 1, vec![0, 1]).unwrap_err(),
            FfError::NonPrimeCharacteristic(4)
        );
        assert!(matches!(
            FieldSpec::new(2, 3, vec![1, 1, 1]).unwrap_err(),
            FfError::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn f8_products_reduce_by_modulus() {
        let f = f8();
        let x = FieldElement::from_coeffs(&f, &[0, 1]);
        let x2 = FieldElement::from_coeffs(&f, &[0, 0, 1]);
        // x * x^2 = x^3 = x + 1 mod x^3+x+1
        assert_eq!(x.mul(&x2).unwrap(), FieldElement::from_coeffs(&f, &[1, 1]));
        let a = FieldElement::from_index(&f, 5);
        assert_eq!(a.mul(&FieldElement::one(&f)).unwrap(), a);
    }

    #[test]
    fn f8_inverse_matches_exhaustive_search() {
        let f = f8();
        let x = FieldElement::from_coeffs(&f, &[0, 1]);
        let inv = x.inv().unwrap();
        // exhaustive oracle
        let oracle = field_elements(&f)
            .find(|y| x.mul(y).unwrap().is_one())
            .unwrap();
        assert_eq!(inv, oracle);
        assert_eq!(inv, FieldElement::from_coeffs(&f, &[1, 0, 1]));
        assert_eq!(FieldElement::zero(&f).inv().unwrap_err(), FfError::InverseOfZero);
    }

    #[test]
    fn multiplicative_orders_in_f8() {
        let f = f8();
        let x = FieldElement::from_coeffs(&f, &[0, 1]);
        assert_eq!(x.multiplicative_order().unwrap(), 7);
        assert!(x.is_primitive().unwrap());
        assert_eq!(FieldElement::one(&f).multiplicative_order().unwrap(), 1);
        // 7 is prime, so every nonzero element has order 1 or 7
        for e in field_elements(&f).filter(|e| !e.is_zero()) {
            let k = e.multiplicative_order().unwrap();
            assert!(k == 1 || k == 7, "order {k}");
        }
    }

    #[test]
    fn fermat_holds_for_small_fields() {
        for m in 1..=6 {
            let f = FieldSpec::binary_default(m).unwrap();
            let q = f.size();
            for e in field_elements(&f).filter(|e| !e.is_zero()) {
                assert!(e.pow((q - 1) as u128).is_one());
            }
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = f8();
        let g = FieldSpec::binary_default(2).unwrap();
        let a = FieldElement::one(&f);
        let b = FieldElement::one(&g);
        assert_eq!(a.add(&b).unwrap_err(), FfError::MixedFields);
    }

    #[test]
    fn frobenius_twist_is_homomorphism() {
        let f = f8();
        // deterministic "random" matrices from an index mix
        let mk = |seed: u64| {
            let entries: Vec<_> = (0..4)
                .map(|i| FieldElement::from_index(&f, (seed.wrapping_mul(37 + i) + i) % 8))
                .collect();
            FieldMatrix::new(&f, 2, 2, entries).unwrap()
        };
        for s in 0..20u64 {
            let a = mk(s);
            let b = mk(s + 101);
            for i in 0..3 {
                let lhs = a.mul(&b).unwrap().frobenius_twist(i).unwrap();
                let rhs = a.frobenius_twist(i).unwrap().mul(&b.frobenius_twist(i).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                // trace(M^(i)) = trace(M)^(2^i)
                assert_eq!(
                    a.frobenius_twist(i).unwrap().trace().unwrap(),
                    a.trace().unwrap().pow(1 << i)
                );
            }
            // Frobenius of order m is the identity on F_8
            assert_eq!(a.frobenius_twist(3).unwrap(), a);
        }
        let id = FieldMatrix::identity(&f, 3);
        assert_eq!(id.frobenius_twist(2).unwrap(), id);
    }

    #[test]
    fn kron_trace_and_associativity() {
        let f = f8();
        let mk = |seed: u64| {
            let entries: Vec<_> = (0..4)
                .map(|i| FieldElement::from_index(&f, (seed * 13 + 5 * i) % 8))
                .collect();
            FieldMatrix::new(&f, 2, 2, entries).unwrap()
        };
        for s in 0..10 {
            let a = mk(s);
            let b = mk(s + 3);
            let c = mk(s + 9);
            let tk = a.kron(&b).unwrap().trace().unwrap();
            assert_eq!(tk, a.trace().unwrap().mul(&b.trace().unwrap()).unwrap());
            let left = a.kron(&b).unwrap().kron(&c).unwrap();
            let right = a.kron(&b.kron(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn det_via_elimination() {
        let f = f8();
        let id = FieldMatrix::identity(&f, 4);
        assert!(id.det().unwrap().is_one());
        let zero = FieldMatrix::zero(&f, 3, 3);
        assert!(zero.det().unwrap().is_zero());
    }

    #[test]
    fn field_spec_serde_shape() {
        let f = f8();
        let json = serde_json::to_string(&*f).unwrap();
        assert_eq!(json, r#"{"char":2,"degree":3,"modulus":[1,1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, *f);
    }
}
