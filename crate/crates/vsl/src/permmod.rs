//! The F₂ permutation module machinery: the even-weight subspace of F₂^B,
//! its quotient by the constant line when #B is even (together, the heart of
//! the permutation module), subsets-as-vectors coordinates, Brauer character
//! values from fixed-point counts, and the restriction isomorphism between
//! the heart on an even set and the heart of a point stabilizer on the
//! punctured set.
//!
//! Basis convention: with base point b₀ = 0, the even-weight subspace is
//! spanned by w_i = χ_{b₀} + χ_{b_i} for i = 1..n-1. For even n the extra
//! relation Σ_i w_i = 1_B holds in the quotient, so coordinates keep only
//! i = 1..n-2 and w_{n-1} expands to the sum of all the others.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{BitMatrix, BitMatrixJson};
use crate::permgrp::{stabilizer_generators, Bsgs, PermError, PermGroup, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermmodError {
    #[error("the heart module needs at least 3 points, got {0}")]
    DegreeTooSmall(usize),
    #[error("subset has odd cardinality")]
    OddCardinality,
    #[error("element of order {0} is not 2-regular")]
    NotTwoRegular(u64),
    #[error("restriction is defined for even degree only, got {0}")]
    OddDegree(usize),
    #[error("intertwiner check failed for a stabilizer generator")]
    IntertwinerCheckFailed,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

/// Coordinate bookkeeping for the heart of F₂^B.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMap {
    pub n: usize,
    pub parity: Parity,
    /// module dimension: n-1 for odd n, n-2 for even n
    pub dim: usize,
}

impl BasisMap {
    pub fn new(n: usize) -> Result<Self, PermmodError> {
        if n < 3 {
            return Err(PermmodError::DegreeTooSmall(n));
        }
        let (parity, dim) = if n % 2 == 1 {
            (Parity::Odd, n - 1)
        } else {
            (Parity::Even, n - 2)
        };
        Ok(BasisMap { n, parity, dim })
    }

    /// Coordinates of an even-cardinality subset: the indicator of the subset
    /// on points 1..n-1 (membership of the base point is implied by parity),
    /// with the even-n reduction expanding coordinate n-1.
    pub fn subset_to_vector(&self, subset: &[usize]) -> Result<Vec<u64>, PermmodError> {
        if subset.len() % 2 != 0 {
            return Err(PermmodError::OddCardinality);
        }
        let words = self.dim.div_ceil(64);
        let mut v = vec![0u64; words];
        let mut wrap = false; // whether point n-1 is in the subset (even n)
        for &p in subset {
            assert!(p < self.n, "subset point out of range");
            if p == 0 {
                continue;
            }
            let idx = p - 1;
            if idx < self.dim {
                v[idx / 64] ^= 1 << (idx % 64);
            } else {
                wrap = !wrap;
            }
        }
        if wrap {
            // w_{n-1} = sum of all basis vectors in the quotient
            for idx in 0..self.dim {
                v[idx / 64] ^= 1 << (idx % 64);
            }
        }
        Ok(v)
    }

    /// The subset represented by a coordinate vector. For odd n this inverts
    /// `subset_to_vector` exactly; for even n it returns the member of the
    /// complement pair that avoids the base point.
    pub fn vector_to_subset(&self, v: &[u64]) -> Vec<usize> {
        let mut subset: Vec<usize> = Vec::new();
        for idx in 0..self.dim {
            if (v[idx / 64] >> (idx % 64)) & 1 == 1 {
                subset.push(idx + 1);
            }
        }
        match self.parity {
            Parity::Odd => {
                if subset.len() % 2 == 1 {
                    subset.insert(0, 0);
                }
            }
            Parity::Even => {
                if subset.len() % 2 == 1 {
                    // completing with the base point would include b0; take
                    // the complement representative instead, which avoids it
                    let inside: std::collections::HashSet<usize> = subset.iter().copied().collect();
                    subset = (1..self.n).filter(|p| !inside.contains(p)).collect();
                    debug_assert!(subset.len() % 2 == 0);
                }
            }
        }
        subset
    }

    /// The module matrix of an arbitrary permutation of B in this basis:
    /// column i holds the coordinates of the image of w_i.
    pub fn matrix_of(&self, g: &Permutation) -> BitMatrix {
        assert_eq!(g.degree(), self.n);
        let mut m = BitMatrix::zero(self.dim, self.dim);
        for i in 1..=self.dim {
            // w_i maps to chi_{g(0)} + chi_{g(i)} = w_{g(0)} + w_{g(i)}
            let col = self.subset_to_vector(&pair(g.image(0), g.image(i))).unwrap();
            for r in 0..self.dim {
                if (col[r / 64] >> (r % 64)) & 1 == 1 {
                    m.set(r, i - 1, true);
                }
            }
        }
        m
    }
}

fn pair(a: usize, b: usize) -> Vec<usize> {
    if a == b {
        vec![]
    } else {
        vec![a, b]
    }
}

/// How a module represents arbitrary group elements, beyond its stored
/// generator matrices.
#[derive(Debug, Clone)]
pub enum ModuleKind {
    /// the heart of the permutation module, in the `BasisMap` convention
    Heart(BasisMap),
    /// diagonal tensor square of a heart module
    TensorSquareOfHeart(BasisMap),
}

/// A finite-dimensional F₂ representation of a permutation group, as one
/// bit-packed matrix per group generator.
pub struct F2Module {
    pub label: String,
    pub dim: usize,
    pub gen_matrices: Vec<BitMatrix>,
    pub kind: ModuleKind,
}

impl F2Module {
    /// The representing matrix of an arbitrary permutation.
    pub fn rep_matrix(&self, g: &Permutation) -> BitMatrix {
        match &self.kind {
            ModuleKind::Heart(b) => b.matrix_of(g),
            ModuleKind::TensorSquareOfHeart(b) => {
                let m = b.matrix_of(g);
                m.kron(&m)
            }
        }
    }

    pub fn basis_map(&self) -> &BasisMap {
        match &self.kind {
            ModuleKind::Heart(b) | ModuleKind::TensorSquareOfHeart(b) => b,
        }
    }
}

/// Builds the heart module of the group action: one invertible matrix per
/// generator in the `BasisMap` convention.
pub fn heart_module(group: &PermGroup, label: &str) -> Result<F2Module, PermmodError> {
    let basis = BasisMap::new(group.degree())?;
    let gen_matrices: Vec<BitMatrix> = group.generators().iter().map(|g| basis.matrix_of(g)).collect();
    for m in &gen_matrices {
        // permutation action is invertible, so every matrix must be too
        assert!(m.inverse().is_some(), "heart matrix of a generator is singular");
    }
    Ok(F2Module {
        label: label.to_string(),
        dim: basis.dim,
        gen_matrices,
        kind: ModuleKind::Heart(basis),
    })
}

/// The diagonal tensor square V ⊗ V with g acting as M(g) ⊗ M(g).
pub fn tensor_square(module: &F2Module, label: &str) -> F2Module {
    let basis = module.basis_map().clone();
    let gen_matrices = module
        .gen_matrices
        .iter()
        .map(|m| m.kron(m))
        .collect::<Vec<_>>();
    F2Module {
        label: label.to_string(),
        dim: module.dim * module.dim,
        gen_matrices,
        kind: ModuleKind::TensorSquareOfHeart(basis),
    }
}

/// Brauer character value of the heart module at a 2-regular element:
/// fix(g) - 1 for odd n, fix(g) - 2 for even n.
pub fn brauer_character(basis: &BasisMap, g: &Permutation) -> Result<i64, PermmodError> {
    let ord = g.order();
    if ord % 2 == 0 {
        return Err(PermmodError::NotTwoRegular(ord));
    }
    let fix = g.fixed_points() as i64;
    Ok(match basis.parity {
        Parity::Odd => fix - 1,
        Parity::Even => fix - 2,
    })
}

/// The restriction isomorphism for even n: an invertible matrix A from the
/// heart of the stabilizer of `b` acting on B minus b (odd degree n-1) to
/// the heart quotient on B, intertwining every Schreier generator of the
/// stabilizer. Returns the intertwiner, the punctured-set module, and the
/// Schreier generators that were checked.
pub struct RestrictionIso {
    pub intertwiner: BitMatrix,
    pub punctured: F2Module,
    pub stabilizer_gens: Vec<Permutation>,
}

pub fn restriction_isomorphism(
    group: &PermGroup,
    _bsgs: &Bsgs,
    b: usize,
    big_basis: &BasisMap,
) -> Result<RestrictionIso, PermmodError> {
    let n = group.degree();
    if n % 2 != 0 {
        return Err(PermmodError::OddDegree(n));
    }
    // relabeling of B minus {b}: old point p -> p (p < b) or p - 1 (p > b)
    let relabel = |p: usize| -> usize {
        assert_ne!(p, b);
        if p < b {
            p
        } else {
            p - 1
        }
    };
    let unlabel = |i: usize| -> usize {
        if i < b {
            i
        } else {
            i + 1
        }
    };
    let stab_gens = stabilizer_generators(group, b)?;
    let restricted: Vec<Permutation> = stab_gens
        .iter()
        .map(|g| {
            let images: Vec<usize> = (0..n - 1).map(|i| relabel(g.image(unlabel(i)))).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let small_basis = BasisMap::new(n - 1)?;
    // intertwiner column i: the basis subset {b0', bi'} of B', viewed as a
    // subset of B and expressed in the quotient coordinates
    let mut a = BitMatrix::zero(big_basis.dim, small_basis.dim);
    for i in 1..=small_basis.dim {
        let subset_in_big = pair(unlabel(0), unlabel(i));
        let col = big_basis.subset_to_vector(&subset_in_big).unwrap();
        for r in 0..big_basis.dim {
            if (col[r / 64] >> (r % 64)) & 1 == 1 {
                a.set(r, i - 1, true);
            }
        }
    }
    if a.inverse().is_none() {
        return Err(PermmodError::IntertwinerCheckFailed);
    }
    // A intertwines: M_B(h) * A = A * M_B'(h|B') for every stabilizer gen
    for (h, h_small) in stab_gens.iter().zip(&restricted) {
        let lhs = big_basis.matrix_of(h).mul(&a).unwrap();
        let rhs = a.mul(&small_basis.matrix_of(h_small)).unwrap();
        if lhs != rhs {
            return Err(PermmodError::IntertwinerCheckFailed);
        }
    }
    let punctured = if restricted.is_empty() {
        // trivial stabilizer: represent it by the identity permutation
        let id_group = PermGroup::new(n - 1, vec![Permutation::identity(n - 1)])?;
        heart_module(&id_group, "punctured heart")?
    } else {
        let stab_group = PermGroup::new(n - 1, restricted.clone())?;
        heart_module(&stab_group, "punctured heart")?
    };
    Ok(RestrictionIso {
        intertwiner: a,
        punctured,
        stabilizer_gens: stab_gens,
    })
}

/// Serialized module: label, dimension, generator matrices in hex rows, and
/// the basis convention tag.
#[derive(Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub label: String,
    pub dim: usize,
    pub generators: Vec<BitMatrixJson>,
    pub basis_convention: String,
}

impl From<&F2Module> for ModuleJson {
    fn from(m: &F2Module) -> Self {
        let convention = match (&m.kind, m.basis_map().parity) {
            (ModuleKind::Heart(_), Parity::Odd) => "heart_odd_base0",
            (ModuleKind::Heart(_), Parity::Even) => "heart_even_base0",
            (ModuleKind::TensorSquareOfHeart(_), Parity::Odd) => "tensor_square_heart_odd_base0",
            (ModuleKind::TensorSquareOfHeart(_), Parity::Even) => "tensor_square_heart_even_base0",
        };
        ModuleJson {
            label: m.label.clone(),
            dim: m.dim,
            generators: m.gen_matrices.iter().map(BitMatrixJson::from).collect(),
            basis_convention: convention.to_string(),
        }
    }
}
