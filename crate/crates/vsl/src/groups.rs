//! Constructors for the specific groups under study, as permutation groups
//! with canonical, bit-reproducible point orderings: SL₂(F_q) = L₂(q) on the
//! projective line (q even), the Suzuki groups on their ovoids via the
//! explicit 4x4 generator matrices, the Mathieu groups and L₂(11) from
//! embedded validated generator data, and the symmetric, alternating, cyclic
//! and dihedral series.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::ff::{canonical_primitive, FfError, FieldElement, FieldMatrix, FieldSpec};
use crate::permgrp::{is_perfect, transitivity, Bsgs, PermError, PermGroup, Permutation, Transitivity};

#[derive(Debug, Error)]
pub enum GroupsError {
    #[error("construction needs characteristic 2, got {0}")]
    OddCharacteristic(u64),
    #[error("field with {0} elements is too small here")]
    FieldTooSmall(u64),
    #[error("Suzuki groups need q = 2^(2k+1) with k >= 1, got 2^{0}")]
    BadExponent(usize),
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("degree {0} is too small for this family")]
    DegreeTooSmall(usize),
    #[error("validation failed for {key}: {reason}")]
    ValidationFailed { key: String, reason: String },
    #[error(transparent)]
    Field(#[from] FfError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Matrix data underlying a Lie-type construction, kept so the trace tests
/// can run on the same generators that produced the permutation action.
#[derive(Clone)]
pub struct SteinbergData {
    pub field: Arc<FieldSpec>,
    /// natural matrix dimension: 2 for SL2, 4 for Suzuki
    pub dim: usize,
    pub matrix_gens: Vec<FieldMatrix>,
}

/// A constructed group: permutation generators, its BSGS, and optional
/// matrix-level data for the Lie-type families.
pub struct BuiltGroup {
    pub key: String,
    pub label: String,
    pub group: PermGroup,
    pub bsgs: Bsgs,
    pub steinberg: Option<SteinbergData>,
}

/// P¹(F_q) point order: index 0 is the point at infinity, then the affine
/// points in field-index order.
fn p1_degree(q: u64) -> usize {
    q as usize + 1
}

/// The permutation of P¹(F_q) induced by an invertible 2x2 matrix acting by
/// fractional-linear maps on column vectors.
fn fractional_linear_perm(m: &FieldMatrix) -> Result<Permutation, GroupsError> {
    let field = m.field();
    let q = field.size();
    let a = m.at(0, 0);
    let b = m.at(0, 1);
    let c = m.at(1, 0);
    let d = m.at(1, 1);
    let mut images = Vec::with_capacity(p1_degree(q));
    // infinity = [1 : 0]
    if c.is_zero() {
        images.push(0);
    } else {
        images.push(1 + a.mul(&c.inv()?)?.index() as usize);
    }
    for zi in 0..q {
        let z = FieldElement::from_index(field, zi);
        let num = a.mul(&z)?.add(b)?;
        let den = c.mul(&z)?.add(d)?;
        if den.is_zero() {
            images.push(0);
        } else {
            images.push(1 + num.mul(&den.inv()?)?.index() as usize);
        }
    }
    Ok(Permutation::from_images(images)?)
}

/// SL₂(F_q) = PSL₂(F_q) for even q, acting on the q+1 points of the
/// projective line. Generated by the unipotent translations z -> z + β for β
/// running over the polynomial basis together with the inversion z -> 1/z;
/// the expected order (q+1)q(q-1) is recomputed and checked.
pub fn build_sl2(field: &Arc<FieldSpec>) -> Result<BuiltGroup, GroupsError> {
    if field.characteristic != 2 {
        return Err(GroupsError::OddCharacteristic(field.characteristic));
    }
    let q = field.size();
    if q < 4 {
        return Err(GroupsError::FieldTooSmall(q));
    }
    let one = FieldElement::one(field);
    let zero = FieldElement::zero(field);
    let mut matrix_gens = Vec::new();
    for i in 0..field.degree {
        let mut coeffs = vec![0u64; field.degree];
        coeffs[i] = 1;
        let beta = FieldElement::from_coeffs(field, &coeffs);
        matrix_gens.push(FieldMatrix::new(
            field,
            2,
            2,
            vec![one.clone(), beta, zero.clone(), one.clone()],
        )?);
    }
    matrix_gens.push(FieldMatrix::new(
        field,
        2,
        2,
        vec![zero.clone(), one.clone(), one.clone(), zero.clone()],
    )?);

    let perms = matrix_gens
        .iter()
        .map(fractional_linear_perm)
        .collect::<Result<Vec<_>, _>>()?;
    let group = PermGroup::new(p1_degree(q), perms)?;
    let bsgs = Bsgs::build(&group);
    let expected = (q + 1) * q * (q - 1);
    if bsgs.order() != expected {
        return Err(GroupsError::ValidationFailed {
            key: format!("sl2_q{q}"),
            reason: format!("order {} != (q+1)q(q-1) = {expected}", bsgs.order()),
        });
    }
    Ok(BuiltGroup {
        key: format!("sl2_q{q}"),
        label: format!("L2({q}) on P1(F{q})"),
        group,
        bsgs,
        steinberg: Some(SteinbergData {
            field: field.clone(),
            dim: 2,
            matrix_gens,
        }),
    })
}

/// k with q = 2^(2k+1), rejecting even or too-small exponents.
fn suzuki_k(field: &Arc<FieldSpec>) -> Result<u32, GroupsError> {
    if field.characteristic != 2 {
        return Err(GroupsError::OddCharacteristic(field.characteristic));
    }
    let m = field.degree;
    if m < 3 || m % 2 == 0 {
        return Err(GroupsError::BadExponent(m));
    }
    Ok(((m - 1) / 2) as u32)
}

/// The lower unitriangular Suzuki generator S(a, b).
pub fn suzuki_s(field: &Arc<FieldSpec>, a: &FieldElement, b: &FieldElement) -> Result<FieldMatrix, GroupsError> {
    let k = suzuki_k(field)?;
    let theta = 1u128 << (k + 1); // the twisting power 2^(k+1)
    let one = FieldElement::one(field);
    let zero = FieldElement::zero(field);
    let a_th = a.pow(theta);
    let b_th = b.pow(theta);
    let e41 = a.pow(theta + 2).add(&a.mul(b)?)?.add(&b_th)?;
    let e42 = a.pow(theta + 1).add(b)?;
    Ok(FieldMatrix::new(
        field,
        4,
        4,
        vec![
            one.clone(), zero.clone(), zero.clone(), zero.clone(),
            a.clone(), one.clone(), zero.clone(), zero.clone(),
            b.clone(), a_th, one.clone(), zero.clone(),
            e41, e42, a.clone(), one.clone(),
        ],
    )?)
}

/// The torus generator M(λ) = diag(λ^(1+2^k), λ^(2^k), λ^(-2^k), λ^(-(1+2^k))).
///
/// The last exponent is the negative of the first so that the determinant is
/// 1; with λ^(1+2^k) in both corner slots the determinant would be
/// λ^(2(1+2^k)) ≠ 1 for primitive λ.
pub fn suzuki_m(field: &Arc<FieldSpec>, lambda: &FieldElement) -> Result<FieldMatrix, GroupsError> {
    let k = suzuki_k(field)?;
    if lambda.is_zero() {
        return Err(GroupsError::ZeroLambda);
    }
    let zero = FieldElement::zero(field);
    let l1 = lambda.pow(1 + (1u128 << k));
    let l2 = lambda.pow(1u128 << k);
    let l2i = l2.inv()?;
    let l1i = l1.inv()?;
    Ok(FieldMatrix::new(
        field,
        4,
        4,
        vec![
            l1, zero.clone(), zero.clone(), zero.clone(),
            zero.clone(), l2, zero.clone(), zero.clone(),
            zero.clone(), zero.clone(), l2i, zero.clone(),
            zero.clone(), zero.clone(), zero.clone(), l1i,
        ],
    )?)
}

/// The anti-diagonal involution T.
pub fn suzuki_t(field: &Arc<FieldSpec>) -> Result<FieldMatrix, GroupsError> {
    suzuki_k(field)?;
    let mut t = FieldMatrix::zero(field, 4, 4);
    for i in 0..4 {
        *t.at_mut(i, 3 - i) = FieldElement::one(field);
    }
    Ok(t)
}

/// The matrix generator set {S(1,0), S(0,1), M(λ₀), T} with λ₀ the canonical
/// primitive element.
pub fn suzuki_generators(field: &Arc<FieldSpec>) -> Result<Vec<FieldMatrix>, GroupsError> {
    let one = FieldElement::one(field);
    let zero = FieldElement::zero(field);
    let lambda0 = canonical_primitive(field);
    Ok(vec![
        suzuki_s(field, &one, &zero)?,
        suzuki_s(field, &zero, &one)?,
        suzuki_m(field, &lambda0)?,
        suzuki_t(field)?,
    ])
}

/// Scales a projective coordinate vector so its first nonzero entry is 1.
fn normalize_projective(v: &mut [FieldElement]) -> Result<(), GroupsError> {
    let lead = v.iter().position(|e| !e.is_zero()).expect("zero vector is not projective");
    let scale = v[lead].inv()?;
    for e in v.iter_mut() {
        *e = e.mul(&scale)?;
    }
    Ok(())
}

fn point_key(v: &[FieldElement]) -> Vec<u64> {
    v.iter().map(|e| e.index()).collect()
}

fn apply_projective(g: &FieldMatrix, p: &[FieldElement]) -> Result<Vec<FieldElement>, GroupsError> {
    let field = g.field();
    let mut img: Vec<FieldElement> = (0..4)
        .map(|r| {
            let mut acc = FieldElement::zero(field);
            for (c, pc) in p.iter().enumerate() {
                acc = acc.add(&g.at(r, c).mul(pc).unwrap()).unwrap();
            }
            acc
        })
        .collect();
    normalize_projective(&mut img)?;
    Ok(img)
}

/// Sz(q) acting on its ovoid: the BFS orbit of (1:0:0:0) under the matrix
/// generators, with points indexed in discovery order. Validates the orbit
/// size q²+1 and the group order (q²+1)q²(q-1).
pub fn build_suzuki(field: &Arc<FieldSpec>) -> Result<BuiltGroup, GroupsError> {
    let q = field.size();
    let matrix_gens = suzuki_generators(field)?;
    let mut seed: Vec<FieldElement> = vec![
        FieldElement::one(field),
        FieldElement::zero(field),
        FieldElement::zero(field),
        FieldElement::zero(field),
    ];
    normalize_projective(&mut seed)?;

    let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut points: Vec<Vec<FieldElement>> = Vec::new();
    index.insert(point_key(&seed), 0);
    points.push(seed);
    let mut head = 0;
    while head < points.len() {
        let p = points[head].clone();
        head += 1;
        for g in &matrix_gens {
            let img = apply_projective(g, &p)?;
            let key = point_key(&img);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                e.insert(points.len());
                points.push(img);
            }
        }
    }
    let degree = points.len();
    let expected_degree = (q * q + 1) as usize;
    if degree != expected_degree {
        return Err(GroupsError::ValidationFailed {
            key: format!("sz_q{q}"),
            reason: format!("ovoid orbit has {degree} points, expected q^2+1 = {expected_degree}"),
        });
    }

    let perms = matrix_gens
        .iter()
        .map(|g| {
            let mut images = vec![0usize; degree];
            for (pi, p) in points.iter().enumerate() {
                let img = apply_projective(g, p)?;
                images[pi] = index[&point_key(&img)];
            }
            Ok(Permutation::from_images(images)?)
        })
        .collect::<Result<Vec<_>, GroupsError>>()?;

    let group = PermGroup::new(degree, perms)?;
    let bsgs = Bsgs::build(&group);
    let expected = (q * q + 1) * q * q * (q - 1);
    if bsgs.order() != expected {
        return Err(GroupsError::ValidationFailed {
            key: format!("sz_q{q}"),
            reason: format!("order {} != (q^2+1)q^2(q-1) = {expected}", bsgs.order()),
        });
    }
    Ok(BuiltGroup {
        key: format!("sz_q{q}"),
        label: format!("Sz({q}) on its ovoid"),
        group,
        bsgs,
        steinberg: Some(SteinbergData {
            field: field.clone(),
            dim: 4,
            matrix_gens,
        }),
    })
}

#[derive(Debug, Deserialize)]
struct EmbeddedGroups {
    #[allow(dead_code)]
    version: u32,
    group: Vec<EmbeddedGroup>,
}

#[derive(Debug, Deserialize)]
struct EmbeddedGroup {
    key: String,
    label: String,
    degree: usize,
    expected_order: u64,
    two_transitive: bool,
    perfect: bool,
    provenance: String,
    generators: Vec<Vec<usize>>,
}

const GROUPS_TOML: &str = include_str!("../data/groups.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MathieuName {
    M11Deg11,
    M11Deg12,
    M12,
    L2_11,
}

impl MathieuName {
    fn key(self) -> &'static str {
        match self {
            MathieuName::M11Deg11 => "m11_deg11",
            MathieuName::M11Deg12 => "m11_deg12",
            MathieuName::M12 => "m12",
            MathieuName::L2_11 => "l2_11",
        }
    }
}

fn embedded_group(name: MathieuName) -> EmbeddedGroup {
    let data: EmbeddedGroups = toml::from_str(GROUPS_TOML).expect("embedded groups.toml parses");
    data.group
        .into_iter()
        .find(|g| g.key == name.key())
        .expect("embedded group present")
}

/// Provenance string of an embedded group, for reports.
pub fn embedded_provenance(name: MathieuName) -> String {
    embedded_group(name).provenance
}

/// Builds one of the embedded groups, running its validation battery:
/// recomputed order, transitivity grade, perfectness. A corrupt entry fails
/// loudly rather than producing a wrong group.
pub fn build_mathieu(name: MathieuName) -> Result<BuiltGroup, GroupsError> {
    let spec = embedded_group(name);
    let gens = spec
        .generators
        .iter()
        .map(|im| Permutation::from_images(im.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    for g in &gens {
        if g.degree() != spec.degree {
            return Err(GroupsError::ValidationFailed {
                key: spec.key.clone(),
                reason: "generator degree mismatch".into(),
            });
        }
    }
    let group = PermGroup::new(spec.degree, gens)?;
    let bsgs = Bsgs::build(&group);
    if bsgs.order() != spec.expected_order {
        return Err(GroupsError::ValidationFailed {
            key: spec.key.clone(),
            reason: format!("order {} != expected {}", bsgs.order(), spec.expected_order),
        });
    }
    let trans = transitivity(&group)?;
    if spec.two_transitive && trans != Transitivity::TwoTransitive {
        return Err(GroupsError::ValidationFailed {
            key: spec.key.clone(),
            reason: format!("expected 2-transitivity, got {trans:?}"),
        });
    }
    if spec.perfect && !is_perfect(&group, &bsgs) {
        return Err(GroupsError::ValidationFailed {
            key: spec.key.clone(),
            reason: "expected a perfect group".into(),
        });
    }
    Ok(BuiltGroup {
        key: spec.key,
        label: spec.label,
        group,
        bsgs,
        steinberg: None,
    })
}

pub fn build_symmetric(n: usize) -> Result<BuiltGroup, GroupsError> {
    if n < 2 {
        return Err(GroupsError::DegreeTooSmall(n));
    }
    let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1]])?];
    if n > 2 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
    }
    let group = PermGroup::new(n, gens)?;
    let bsgs = Bsgs::build(&group);
    Ok(BuiltGroup {
        key: format!("sym_{n}"),
        label: format!("S{n} natural action"),
        group,
        bsgs,
        steinberg: None,
    })
}

pub fn build_alternating(n: usize) -> Result<BuiltGroup, GroupsError> {
    if n < 3 {
        return Err(GroupsError::DegreeTooSmall(n));
    }
    let three = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    let big = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()])?
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()])?
    };
    let group = PermGroup::new(n, vec![three, big])?;
    let bsgs = Bsgs::build(&group);
    Ok(BuiltGroup {
        key: format!("alt_{n}"),
        label: format!("A{n} natural action"),
        group,
        bsgs,
        steinberg: None,
    })
}

pub fn build_cyclic(n: usize) -> Result<BuiltGroup, GroupsError> {
    if n < 2 {
        return Err(GroupsError::DegreeTooSmall(n));
    }
    let group = PermGroup::new(n, vec![Permutation::from_cycles(n, &[(0..n).collect()])?])?;
    let bsgs = Bsgs::build(&group);
    Ok(BuiltGroup {
        key: format!("cyclic_{n}"),
        label: format!("C{n} rotation action"),
        group,
        bsgs,
        steinberg: None,
    })
}

pub fn build_dihedral(n: usize) -> Result<BuiltGroup, GroupsError> {
    if n < 3 {
        return Err(GroupsError::DegreeTooSmall(n));
    }
    let rot = Permutation::from_cycles(n, &[(0..n).collect()])?;
    let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    let group = PermGroup::new(n, vec![rot, refl])?;
    let bsgs = Bsgs::build(&group);
    Ok(BuiltGroup {
        key: format!("dihedral_{n}"),
        label: format!("D{n} action on {n} vertices"),
        group,
        bsgs,
        steinberg: None,
    })
}
