//! Two-torsion of hyperelliptic jacobians over finite fields of odd
//! characteristic, computationally: curves y² = f(x) with their splitting
//! fields, reduced Mumford divisors under Cantor arithmetic, the 2-torsion
//! classes attached to even subsets of roots, and the verification that the
//! subset -> class map is a Frobenius-equivariant isomorphism onto J[2]
//! obeying the symmetric-difference group law.
//!
//! Even-degree models are handled through the standard change of model that
//! sends a chosen root r₀ to infinity: with c = f'(r₀), the substitution
//! X = c/(x - r₀), Y = c^(g+1) y/(x - r₀)^(g+1) turns y² = f(x) into a monic
//! odd-degree model Y² = F(X) whose roots are c/(α - r₀). Weierstrass points
//! map bijectively ((r₀, 0) to the place at infinity), the divisor class of
//! e_T pulls along, and Cantor arithmetic runs on the odd model. Classes of
//! arbitrary even subsets are computed by splitting the subset into pairs,
//! which is exact at the divisor level, so no identity under test is assumed
//! by the construction.

pub mod poly;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{field_elements, FfError, FieldElement, FieldSpec};
use poly::Poly;

#[derive(Debug, Error)]
pub enum JacError {
    #[error("hyperelliptic 2-torsion needs odd characteristic, got 2")]
    EvenCharacteristic,
    #[error("f must have degree >= 5, got {0}")]
    DegreeTooSmall(usize),
    #[error("f is not squarefree")]
    NotSquarefree,
    #[error("base field must be a prime field")]
    GroundFieldNotPrime,
    #[error("no splitting field of degree <= {0} found")]
    SplittingDegreeTooLarge(usize),
    #[error("subset has odd cardinality")]
    OddCardinality,
    #[error("root index {0} out of range")]
    RootIndexOutOfRange(usize),
    #[error("divisor fails the Mumford condition u | v^2 - f")]
    InvalidMumford,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Field(#[from] FfError),
}

/// A reduced Mumford divisor (u, v): u monic of degree <= genus, v reduced
/// mod u, u | v² - f. The class of the zero divisor is (1, 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mumford {
    pub u: Poly,
    pub v: Poly,
}

impl std::fmt::Debug for Mumford {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mumford(u={:?}, v={:?})", self.u, self.v)
    }
}

impl Mumford {
    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        Mumford {
            u: Poly::one(field),
            v: Poly::zero(field),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    fn check_valid(&self, f: &Poly) -> Result<(), JacError> {
        let vv = self.v.mul(&self.v);
        if !vv.sub(f).rem(&self.u).is_zero() {
            return Err(JacError::InvalidMumford);
        }
        Ok(())
    }
}

/// The odd-degree working model used for Cantor arithmetic.
struct OddModel {
    /// monic squarefree polynomial of odd degree n-1 (even input) or n (odd)
    f: Poly,
    genus: usize,
    /// image of each original root, None for the root sent to infinity
    beta: Vec<Option<FieldElement>>,
    /// index of the root sent to infinity, if any
    r0: Option<usize>,
}

/// A hyperelliptic curve y² = f(x) over a prime field, with all roots of f
/// computed in a splitting extension.
pub struct Curve {
    pub base: Arc<FieldSpec>,
    pub work: Arc<FieldSpec>,
    /// f embedded into the working field
    pub f: Poly,
    /// the n distinct roots, in working-field enumeration order
    pub roots: Vec<FieldElement>,
    pub n: usize,
    pub genus: usize,
    model: OddModel,
}

/// Finds the lexicographically first monic irreducible polynomial of the
/// given degree over F_p and builds the extension field.
fn extension_field(p: u64, k: usize) -> Result<Arc<FieldSpec>, JacError> {
    if k == 1 {
        return Ok(FieldSpec::new(p, 1, vec![0, 1])?);
    }
    let count = (p as u128).pow(k as u32);
    for idx in 0..count {
        let mut modulus = Vec::with_capacity(k + 1);
        let mut t = idx;
        for _ in 0..k {
            modulus.push((t % p as u128) as u64);
            t /= p as u128;
        }
        modulus.push(1);
        match FieldSpec::new(p, k, modulus) {
            Ok(f) => return Ok(f),
            Err(FfError::ReducibleModulus(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Embeds a prime-field polynomial into an extension of the same
/// characteristic.
fn embed_poly(f: &Poly, target: &Arc<FieldSpec>) -> Poly {
    Poly::from_coeffs(
        target,
        f.coeffs()
            .iter()
            .map(|c| FieldElement::from_prime(target, c.coeffs()[0]))
            .collect(),
    )
}

impl Curve {
    /// Builds the curve, locating the splitting field by scanning extension
    /// degrees 1..=12 and collecting roots by exhaustive evaluation.
    pub fn new(base: &Arc<FieldSpec>, f_coeffs: &[u64]) -> Result<Self, JacError> {
        const MAX_SPLITTING_DEGREE: usize = 12;
        if base.characteristic == 2 {
            return Err(JacError::EvenCharacteristic);
        }
        if base.degree != 1 {
            return Err(JacError::GroundFieldNotPrime);
        }
        let f_base = Poly::from_coeffs(
            base,
            f_coeffs.iter().map(|&c| FieldElement::from_prime(base, c)).collect(),
        );
        let n = match f_base.degree() {
            Some(d) if d >= 5 => d,
            other => return Err(JacError::DegreeTooSmall(other.unwrap_or(0))),
        };
        if !f_base.gcd(&f_base.derivative()).is_one() {
            return Err(JacError::NotSquarefree);
        }
        let genus = (n - 1) / 2;

        let mut split: Option<(Arc<FieldSpec>, Poly, Vec<FieldElement>)> = None;
        for k in 1..=MAX_SPLITTING_DEGREE {
            let work = extension_field(base.characteristic, k)?;
            let f = embed_poly(&f_base, &work);
            let mut roots = Vec::new();
            for x in field_elements(&work) {
                if f.eval(&x).is_zero() {
                    roots.push(x);
                    if roots.len() == n {
                        break;
                    }
                }
            }
            if roots.len() == n {
                split = Some((work, f, roots));
                break;
            }
        }
        let Some((work, f, roots)) = split else {
            return Err(JacError::SplittingDegreeTooLarge(MAX_SPLITTING_DEGREE));
        };

        let model = if n % 2 == 1 {
            OddModel {
                f: f.monic(),
                genus,
                beta: roots.iter().map(|r| Some(r.clone())).collect(),
                r0: None,
            }
        } else {
            // send roots[0] to infinity: beta_i = c / (root_i - r0), c = f'(r0)
            let r0 = roots[0].clone();
            let c = embed_poly(&f_base.derivative(), &work).eval(&r0);
            assert!(!c.is_zero(), "squarefree f has nonzero derivative at each root");
            let beta: Vec<Option<FieldElement>> = roots
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    if i == 0 {
                        None
                    } else {
                        Some(c.mul(&r.sub(&r0).unwrap().inv().unwrap()).unwrap())
                    }
                })
                .collect();
            let mut f_hat = Poly::one(&work);
            for b in beta.iter().flatten() {
                f_hat = f_hat.mul(&Poly::linear(b));
            }
            OddModel {
                f: f_hat,
                genus,
                beta,
                r0: Some(0),
            }
        };

        // the working model must itself be squarefree of the right degree
        debug_assert!(model.f.gcd(&model.f.derivative()).is_one());
        debug_assert_eq!(model.f.degree(), Some(2 * genus + 1));

        Ok(Curve {
            base: base.clone(),
            work,
            f,
            roots,
            n,
            genus,
            model,
        })
    }

    /// Extension degree of the splitting field over the prime field.
    pub fn splitting_degree(&self) -> usize {
        self.work.degree
    }

    /// Cantor addition of reduced divisors on the working odd model.
    pub fn add(&self, d1: &Mumford, d2: &Mumford) -> Result<Mumford, JacError> {
        d1.check_valid(&self.model.f)?;
        d2.check_valid(&self.model.f)?;
        Ok(self.reduce(self.compose(d1, d2)))
    }

    pub fn double(&self, d: &Mumford) -> Result<Mumford, JacError> {
        self.add(d, d)
    }

    pub fn negate(&self, d: &Mumford) -> Mumford {
        Mumford {
            u: d.u.clone(),
            v: d.v.neg().rem(&d.u),
        }
    }

    /// Cantor composition (no reduction).
    fn compose(&self, d1: &Mumford, d2: &Mumford) -> Mumford {
        let f = &self.model.f;
        let (g1, e1, e2) = d1.u.ext_gcd(&d2.u);
        let vsum = d1.v.add(&d2.v);
        let (d, c1, c2) = g1.ext_gcd(&vsum);
        // d = c1 g1 + c2 (v1 + v2), g1 = e1 u1 + e2 u2
        let h1 = c1.mul(&e1);
        let h2 = c1.mul(&e2);
        let h3 = c2;
        let u = d1.u.mul(&d2.u).div_exact(&d.mul(&d));
        let mut v = h1.mul(&d1.u).mul(&d2.v);
        v = v.add(&h2.mul(&d2.u).mul(&d1.v));
        v = v.add(&h3.mul(&d1.v.mul(&d2.v).add(f)));
        let v = v.div_exact(&d).rem(&u);
        Mumford { u, v }
    }

    /// Cantor reduction to deg(u) <= genus, with monic u.
    fn reduce(&self, mut d: Mumford) -> Mumford {
        let f = &self.model.f;
        let g = self.model.genus;
        while d.u.degree().unwrap_or(0) > g {
            let u_next = f.sub(&d.v.mul(&d.v)).div_exact(&d.u);
            let v_next = d.v.neg().rem(&u_next);
            d = Mumford { u: u_next, v: v_next };
        }
        d.u = d.u.monic();
        d.v = d.v.rem(&d.u);
        Mumford { u: d.u, v: d.v }
    }

    /// The normalized representative of an even subset: for odd n the subset
    /// itself; for even n, whichever of the subset and its complement avoids
    /// the root sent to infinity.
    pub fn normalize_subset(&self, t: &[usize]) -> Result<Vec<usize>, JacError> {
        let mut s: Vec<usize> = t.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != t.len() {
            return Err(JacError::VerificationFailed("repeated root index".into()));
        }
        if s.len() % 2 != 0 {
            return Err(JacError::OddCardinality);
        }
        if let Some(&max) = s.last() {
            if max >= self.n {
                return Err(JacError::RootIndexOutOfRange(max));
            }
        }
        if let Some(r0) = self.model.r0 {
            if s.contains(&r0) {
                s = (0..self.n).filter(|i| !s.contains(i)).collect();
            }
        }
        Ok(s)
    }

    /// The 2-torsion divisor class of an even subset of roots: the class of
    /// sum of (P_i) minus (#T/2) times the degree-2 infinity divisor. On the
    /// odd working model the subset is split into pairs, each pair becomes
    /// an explicit Mumford divisor, and the pairs are Cantor-summed; the
    /// splitting is exact at the divisor level.
    pub fn two_torsion_class(&self, t: &[usize]) -> Result<Mumford, JacError> {
        let mut s: Vec<usize> = t.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != t.len() {
            return Err(JacError::VerificationFailed("repeated root index".into()));
        }
        if s.len() % 2 != 0 {
            return Err(JacError::OddCardinality);
        }
        if let Some(&max) = s.last() {
            if max >= self.n {
                return Err(JacError::RootIndexOutOfRange(max));
            }
        }
        let field = &self.work;
        let mut acc = Mumford::zero(field);
        for pair in s.chunks(2) {
            let d = match (&self.model.beta[pair[0]], &self.model.beta[pair[1]]) {
                (Some(b0), Some(b1)) => Mumford {
                    u: Poly::linear(b0).mul(&Poly::linear(b1)),
                    v: Poly::zero(field),
                },
                // a pair containing the infinite root contributes (P) - (inf)
                (None, Some(b)) | (Some(b), None) => Mumford {
                    u: Poly::linear(b),
                    v: Poly::zero(field),
                },
                (None, None) => unreachable!("r0 appears once"),
            };
            acc = self.add(&acc, &d)?;
        }
        Ok(acc)
    }

    /// Applies the p-power Frobenius to a divisor coefficientwise. Only
    /// valid when the working model is defined over the prime field, which
    /// holds for odd n always and for even n when the root sent to infinity
    /// is rational.
    pub fn frobenius_divisor(&self, d: &Mumford) -> Mumford {
        let p = self.base.characteristic;
        Mumford {
            u: d.u.map_coeffs(|c| c.pow(p as u128)),
            v: d.v.map_coeffs(|c| c.pow(p as u128)),
        }
    }

    /// The permutation of root indices induced by the p-power Frobenius.
    pub fn frobenius_root_permutation(&self) -> crate::permgrp::Permutation {
        let p = self.base.characteristic;
        let lookup: HashMap<u64, usize> = self
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.index(), i))
            .collect();
        let images: Vec<usize> = self
            .roots
            .iter()
            .map(|r| lookup[&r.pow(p as u128).index()])
            .collect();
        crate::permgrp::Permutation::from_images(images).expect("Frobenius permutes the roots")
    }

    fn frobenius_fixes_model(&self) -> bool {
        match self.model.r0 {
            None => true,
            Some(r0) => {
                let p = self.base.characteristic;
                self.roots[r0].pow(p as u128) == self.roots[r0]
            }
        }
    }
}

fn even_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << n)).filter_map(move |bits| {
        if bits.count_ones() % 2 != 0 {
            return None;
        }
        Some((0..n).filter(|i| (bits >> i) & 1 == 1).collect())
    })
}

/// Outcome of the full two-torsion verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoTorsionReport {
    pub p: u64,
    pub f_coeffs: Vec<u64>,
    pub n: usize,
    pub genus: usize,
    pub splitting_degree: usize,
    pub subsets_enumerated: usize,
    pub class_count: usize,
    pub expected_class_count: u64,
    pub symdiff_pairs_checked: usize,
    pub symdiff_law_holds: bool,
    pub all_classes_two_torsion: bool,
    pub distinct_up_to_complement: bool,
    pub class_count_matches: bool,
    /// even n only: the class of the full root set is zero
    pub full_set_class_is_zero: Option<bool>,
    pub frobenius_equivariant: Option<bool>,
    pub capped: bool,
}

impl TwoTorsionReport {
    pub fn all_pass(&self) -> bool {
        self.symdiff_law_holds
            && self.all_classes_two_torsion
            && self.distinct_up_to_complement
            && self.class_count_matches
            && self.full_set_class_is_zero.unwrap_or(true)
            && self.frobenius_equivariant.unwrap_or(true)
    }
}

fn mumford_key(d: &Mumford) -> (Vec<u64>, Vec<u64>) {
    (
        d.u.coeffs().iter().map(|c| c.index()).collect(),
        d.v.coeffs().iter().map(|c| c.index()).collect(),
    )
}

/// Verifies over all even subsets (or a deterministic truncation above
/// `pair_cap` subsets for the quadratic pairwise law): the symmetric
/// difference law, 2-torsionness, distinctness up to complement, the class
/// count 2^(2g), the vanishing of the full-set class (even n), and
/// Frobenius equivariance.
pub fn verify_two_torsion(curve: &Curve, pair_cap: usize) -> Result<TwoTorsionReport, JacError> {
    let n = curve.n;
    let subsets: Vec<Vec<usize>> = even_subsets(n).collect();
    let classes: Vec<Mumford> = subsets
        .iter()
        .map(|t| curve.two_torsion_class(t))
        .collect::<Result<_, _>>()?;

    // (b) 2-torsion: doubling gives the zero class
    let mut all_two_torsion = true;
    for c in &classes {
        if !curve.double(c)?.is_zero() {
            all_two_torsion = false;
        }
    }

    // (c)+(d) distinctness up to complement and count 2^(2g)
    let mut by_key: HashMap<(Vec<u64>, Vec<u64>), Vec<usize>> = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        by_key.entry(mumford_key(c)).or_default().push(i);
    }
    let mut distinct = true;
    for idxs in by_key.values() {
        for &i in idxs {
            for &j in idxs {
                if i == j {
                    continue;
                }
                let complement: Vec<usize> =
                    (0..n).filter(|x| !subsets[i].contains(x)).collect();
                if subsets[j] != complement {
                    distinct = false;
                }
            }
        }
    }
    // and conversely complements must collide for even n
    if n % 2 == 0 {
        for (i, t) in subsets.iter().enumerate() {
            let complement: Vec<usize> = (0..n).filter(|x| !t.contains(x)).collect();
            if let Some(j) = subsets.iter().position(|s| *s == complement) {
                if mumford_key(&classes[i]) != mumford_key(&classes[j]) {
                    distinct = false;
                }
            }
        }
    }
    let class_count = by_key.len();
    let expected = 1u64 << (2 * curve.genus);

    // (a) symmetric difference law on pairs, capped deterministically
    let limit = subsets.len().min(pair_cap);
    let capped = limit < subsets.len();
    let mut law = true;
    let mut pairs_checked = 0;
    for i in 0..limit {
        for j in 0..limit {
            let symdiff: Vec<usize> = (0..n)
                .filter(|x| subsets[i].contains(x) != subsets[j].contains(x))
                .collect();
            let sum = curve.add(&classes[i], &classes[j])?;
            let direct = curve.two_torsion_class(&symdiff)?;
            pairs_checked += 1;
            if sum != direct {
                law = false;
            }
        }
    }

    // (e) even n: the full root set maps to zero
    let full_zero = if n % 2 == 0 {
        let full: Vec<usize> = (0..n).collect();
        Some(curve.two_torsion_class(&full)?.is_zero())
    } else {
        None
    };

    // Frobenius equivariance, when the model is Frobenius-stable
    let frob = if curve.frobenius_fixes_model() {
        let perm = curve.frobenius_root_permutation();
        let mut ok = true;
        for (t, c) in subsets.iter().zip(&classes) {
            let image: Vec<usize> = t.iter().map(|&i| perm.image(i)).collect();
            let lhs = curve.frobenius_divisor(c);
            let rhs = curve.two_torsion_class(&image)?;
            if lhs != rhs {
                ok = false;
            }
        }
        Some(ok)
    } else {
        None
    };

    Ok(TwoTorsionReport {
        p: curve.base.characteristic,
        f_coeffs: curve.f.coeffs().iter().map(|c| c.coeffs()[0]).collect(),
        n,
        genus: curve.genus,
        splitting_degree: curve.splitting_degree(),
        subsets_enumerated: subsets.len(),
        class_count,
        expected_class_count: expected,
        symdiff_pairs_checked: pairs_checked,
        symdiff_law_holds: law,
        all_classes_two_torsion: all_two_torsion,
        distinct_up_to_complement: distinct,
        class_count_matches: class_count as u64 == expected,
        full_set_class_is_zero: full_zero,
        frobenius_equivariant: frob,
        capped,
    })
}

/// Checks that the Frobenius action on 2-torsion classes matches the heart
/// module matrix of the root permutation: for every even subset T, the
/// coordinates of the permuted subset equal the matrix image of the
/// coordinates of T, and the Mumford-level Frobenius of cl(e_T) equals
/// cl(e_(perm T)).
pub fn frobenius_matches_heart_matrix(curve: &Curve) -> Result<bool, JacError> {
    if !curve.frobenius_fixes_model() {
        return Ok(false);
    }
    let n = curve.n;
    let perm = curve.frobenius_root_permutation();
    let basis = crate::permmod::BasisMap::new(n)
        .map_err(|e| JacError::VerificationFailed(e.to_string()))?;
    let mat = basis.matrix_of(&perm);
    for t in even_subsets(n) {
        let image: Vec<usize> = {
            let mut v: Vec<usize> = t.iter().map(|&i| perm.image(i)).collect();
            v.sort_unstable();
            v
        };
        // module-level: matrix action matches subset permutation
        let vec_t = basis
            .subset_to_vector(&t)
            .map_err(|e| JacError::VerificationFailed(e.to_string()))?;
        let vec_img = basis
            .subset_to_vector(&image)
            .map_err(|e| JacError::VerificationFailed(e.to_string()))?;
        let mut acc = vec![0u64; vec_t.len()];
        for col in 0..basis.dim {
            if (vec_t[col / 64] >> (col % 64)) & 1 == 0 {
                continue;
            }
            for r in 0..basis.dim {
                if mat.get(r, col) {
                    acc[r / 64] ^= 1 << (r % 64);
                }
            }
        }
        if acc != vec_img {
            return Ok(false);
        }
        // divisor-level: Frobenius of the class is the class of the image
        let lhs = curve.frobenius_divisor(&curve.two_torsion_class(&t)?);
        let rhs = curve.two_torsion_class(&image)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f11() -> Arc<FieldSpec> {
        FieldSpec::new(11, 1, vec![0, 1]).unwrap()
    }

    fn f5() -> Arc<FieldSpec> {
        FieldSpec::new(5, 1, vec![0, 1]).unwrap()
    }

    fn product_of_linear_factors(field: &Arc<FieldSpec>, roots: &[u64]) -> Vec<u64> {
        let mut p = Poly::one(field);
        for &a in roots {
            p = p.mul(&Poly::linear(&FieldElement::from_prime(field, a)));
        }
        p.coeffs().iter().map(|c| c.coeffs()[0]).collect()
    }

    /// x(x-1)(x-2)(x-3)(x-4) over F11
    fn split_quintic() -> Curve {
        let f = f11();
        Curve::new(&f, &product_of_linear_factors(&f, &[0, 1, 2, 3, 4])).unwrap()
    }

    #[test]
    fn split_quintic_has_five_rational_roots() {
        let c = split_quintic();
        assert_eq!(c.n, 5);
        assert_eq!(c.genus, 2);
        assert_eq!(c.splitting_degree(), 1);
        let mut roots: Vec<u64> = c.roots.iter().map(|r| r.index()).collect();
        roots.sort_unstable();
        assert_eq!(roots, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_curves() {
        assert!(matches!(
            Curve::new(&f11(), &[0, 0, 0, 0, 0, 1]),
            Err(JacError::NotSquarefree)
        ));
        assert!(matches!(
            Curve::new(&f11(), &[1, 1, 1]),
            Err(JacError::DegreeTooSmall(2))
        ));
        let f2 = FieldSpec::f2();
        assert!(matches!(
            Curve::new(&f2, &[1, 1, 0, 0, 0, 1]),
            Err(JacError::EvenCharacteristic)
        ));
    }

    #[test]
    fn x5_plus_2_over_f11_splits_in_degree_5() {
        let c = Curve::new(&f11(), &[2, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(c.splitting_degree(), 5);
        assert_eq!(c.roots.len(), 5);
        // oracle: every root evaluates to zero
        for r in &c.roots {
            assert!(c.f.eval(r).is_zero());
        }
    }

    #[test]
    fn cantor_group_axioms_on_two_torsion() {
        let c = split_quintic();
        let zero = Mumford::zero(&c.work);
        let d = c.two_torsion_class(&[0, 1]).unwrap();
        assert_eq!(c.add(&d, &zero).unwrap(), d);
        assert_eq!(c.add(&d, &c.negate(&d)).unwrap(), zero);
        // coprime pair composition is the product
        let d2 = c.two_torsion_class(&[2, 3]).unwrap();
        let sum = c.add(&d, &d2).unwrap();
        let direct = c.two_torsion_class(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sum, direct);
        // associativity on a few triples
        let d3 = c.two_torsion_class(&[1, 4]).unwrap();
        let left = c.add(&c.add(&d, &d2).unwrap(), &d3).unwrap();
        let right = c.add(&d, &c.add(&d2, &d3).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn two_torsion_classes_square_to_zero() {
        let c = split_quintic();
        for t in [vec![], vec![0, 1], vec![0, 4], vec![0, 1, 2, 3]] {
            let d = c.two_torsion_class(&t).unwrap();
            assert!(c.double(&d).unwrap().is_zero(), "2 cl(e_T) = 0 for {t:?}");
        }
        assert!(matches!(
            c.two_torsion_class(&[0]),
            Err(JacError::OddCardinality)
        ));
        assert!(matches!(
            c.two_torsion_class(&[0, 9]),
            Err(JacError::RootIndexOutOfRange(9))
        ));
    }

    #[test]
    fn split_quintic_full_verification() {
        let c = split_quintic();
        let report = verify_two_torsion(&c, 64).unwrap();
        assert_eq!(report.class_count, 16);
        assert_eq!(report.symdiff_pairs_checked, 256);
        assert!(!report.capped);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.frobenius_equivariant, Some(true));
    }

    #[test]
    fn irreducible_quintic_over_f5_frobenius() {
        // x^5 - x + 2 is irreducible over F5 (Artin-Schreier)
        let c = Curve::new(&f5(), &[2, 4, 0, 0, 0, 1]).unwrap();
        assert_eq!(c.splitting_degree(), 5);
        let perm = c.frobenius_root_permutation();
        assert_eq!(perm.order(), 5); // a 5-cycle on the roots
        let report = verify_two_torsion(&c, 64).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert!(frobenius_matches_heart_matrix(&c).unwrap());
    }

    #[test]
    fn even_degree_model() {
        // x(x-1)(x-2)(x-3)(x-4)(x-5) over F11
        let f = f11();
        let c = Curve::new(&f, &product_of_linear_factors(&f, &[0, 1, 2, 3, 4, 5])).unwrap();
        assert_eq!(c.n, 6);
        assert_eq!(c.genus, 2);
        let report = verify_two_torsion(&c, 64).unwrap();
        assert_eq!(report.subsets_enumerated, 32);
        assert_eq!(report.class_count, 16);
        assert_eq!(report.full_set_class_is_zero, Some(true));
        assert!(report.all_pass(), "{report:?}");
    }
}
