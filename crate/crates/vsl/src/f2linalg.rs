//! Bit-packed linear algebra over F₂: matrices with 64-bit word rows, an
//! incremental reduced-echelon span, commutant dimensions and conjugation-
//! closed algebra closures. This is the computational substrate for every
//! representation check; the Suzuki case needs ranks of 4096-bit rows, so row
//! operations are word-wise XOR throughout.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum F2Error {
    #[error("bit-matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("row length {got} does not match ambient dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("conjugator is singular")]
    SingularConjugator,
    #[error("invalid hex row: {0}")]
    BadHex(String),
}

const WORD_BITS: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD_BITS)
}

/// Dense matrix over F₂. Rows are packed little-endian: column c lives in
/// word c / 64, bit c % 64. Padding bits past `cols` are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let mut s = String::with_capacity(self.cols);
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            writeln!(f, "  {s}")?;
        }
        write!(f, "]")
    }
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.wpr + c / WORD_BITS];
        if v {
            *w |= 1 << (c % WORD_BITS);
        } else {
            *w &= !(1 << (c % WORD_BITS));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(F2Error::ShapeMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    /// Word-parallel product: for every set bit of a row of `self`, XOR the
    /// matching row of `other` into the accumulator.
    pub fn mul(&self, other: &Self) -> Result<Self, F2Error> {
        if self.cols != other.rows {
            return Err(F2Error::ShapeMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zero(self.rows, other.cols);
        let owpr = other.wpr;
        for i in 0..self.rows {
            let arow = self.row(i);
            let orow_base = i * out.wpr;
            for (wi, &word) in arow.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    let k = wi * WORD_BITS + bit;
                    let brow = &other.data[k * owpr..(k + 1) * owpr];
                    for (d, &s) in out.data[orow_base..orow_base + owpr].iter_mut().zip(brow) {
                        *d ^= s;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = BitMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            for (wi, &word) in row.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    out.set(wi * WORD_BITS + bit, r, true);
                }
            }
        }
        out
    }

    /// Kronecker product with row-major block convention:
    /// entry ((i1, i2), (j1, j2)) lands at (i1 * rows(B) + i2, j1 * cols(B) + j2).
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = BitMatrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                if !self.get(i1, j1) {
                    continue;
                }
                for i2 in 0..other.rows {
                    let row = other.row(i2);
                    for (wi, &word) in row.iter().enumerate() {
                        let mut w = word;
                        while w != 0 {
                            let bit = w.trailing_zeros() as usize;
                            w &= w - 1;
                            let j2 = wi * WORD_BITS + bit;
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, true);
                        }
                    }
                }
            }
        }
        out
    }

    /// Flattens a square matrix into a single row vector of length rows*cols,
    /// entry (r, c) at position r * cols + c.
    pub fn flatten(&self) -> Vec<u64> {
        let n = self.rows * self.cols;
        let mut out = vec![0u64; words_for(n)];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    let pos = r * self.cols + c;
                    out[pos / WORD_BITS] |= 1 << (pos % WORD_BITS);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut span = SpanBasis::new(self.cols);
        for r in 0..self.rows {
            span.insert(self.row(r)).unwrap();
        }
        span.rank()
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| work.get(r, col))?;
            if pivot != col {
                work.data.swap_chunks(pivot, col, work.wpr);
                inv.data.swap_chunks(pivot, col, inv.wpr);
            }
            for r in 0..n {
                if r != col && work.get(r, col) {
                    let (wr, wc) = split_rows(&mut work.data, r, col, work.wpr);
                    xor_into(wr, wc);
                    let (ir, ic) = split_rows(&mut inv.data, r, col, inv.wpr);
                    xor_into(ir, ic);
                }
            }
        }
        Some(inv)
    }

    /// Hex serialization: row bytes little-endian (bit 0 = column 0), two hex
    /// digits per byte, byte 0 first.
    pub fn to_hex_rows(&self) -> Vec<String> {
        let bytes_per_row = self.cols.div_ceil(8);
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut s = String::with_capacity(2 * bytes_per_row);
                for b in 0..bytes_per_row {
                    let byte = (row[b / 8] >> (8 * (b % 8))) & 0xff;
                    s.push_str(&format!("{byte:02x}"));
                }
                s
            })
            .collect()
    }

    pub fn from_hex_rows(rows: usize, cols: usize, hex_rows: &[String]) -> Result<Self, F2Error> {
        if hex_rows.len() != rows {
            return Err(F2Error::ShapeMismatch(format!(
                "expected {rows} hex rows, got {}",
                hex_rows.len()
            )));
        }
        let bytes_per_row = cols.div_ceil(8);
        let mut out = BitMatrix::zero(rows, cols);
        for (r, hs) in hex_rows.iter().enumerate() {
            if hs.len() != 2 * bytes_per_row {
                return Err(F2Error::BadHex(format!("row {r} has length {}", hs.len())));
            }
            for b in 0..bytes_per_row {
                let byte = u64::from_str_radix(&hs[2 * b..2 * b + 2], 16)
                    .map_err(|e| F2Error::BadHex(e.to_string()))?;
                out.row_mut(r)[b / 8] |= byte << (8 * (b % 8));
            }
            // reject set padding bits
            let last = out.row(r)[out.wpr - 1];
            let used = cols - (out.wpr - 1) * WORD_BITS;
            if used < WORD_BITS && (last >> used) != 0 {
                return Err(F2Error::BadHex(format!("row {r} sets bits past column {cols}")));
            }
        }
        Ok(out)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (first, second) = self.split_at_mut(hi * width);
        first[lo * width..(lo + 1) * width].swap_with_slice(&mut second[..width]);
    }
}

fn split_rows(data: &mut [u64], dst: usize, src: usize, width: usize) -> (&mut [u64], &[u64]) {
    debug_assert_ne!(dst, src);
    if dst < src {
        let (a, b) = data.split_at_mut(src * width);
        (&mut a[dst * width..(dst + 1) * width], &b[..width])
    } else {
        let (a, b) = data.split_at_mut(dst * width);
        (&mut b[..width], &a[src * width..(src + 1) * width])
    }
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Serialized form of a bit matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BitMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub hex_rows: Vec<String>,
}

impl From<&BitMatrix> for BitMatrixJson {
    fn from(m: &BitMatrix) -> Self {
        BitMatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            hex_rows: m.to_hex_rows(),
        }
    }
}

impl TryFrom<&BitMatrixJson> for BitMatrix {
    type Error = F2Error;
    fn try_from(j: &BitMatrixJson) -> Result<Self, F2Error> {
        BitMatrix::from_hex_rows(j.rows, j.cols, &j.hex_rows)
    }
}

/// An incrementally built subspace of F₂^n kept in reduced row-echelon form.
/// Rows are stored in insertion order; `pivot_row[c]` locates the row whose
/// pivot is column c.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ambient: usize,
    wpr: usize,
    rows: Vec<u64>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<u32>>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis {
            ambient,
            wpr: words_for(ambient),
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ambient],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Sorted pivot columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.wpr..(i + 1) * self.wpr]
    }

    fn first_set_bit(v: &[u64]) -> Option<usize> {
        for (wi, &w) in v.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Reduces `v` against the basis in place: clears every bit sitting on a
    /// pivot column. The remainder is zero exactly when v was in the span.
    fn reduce_fully(&self, v: &mut [u64]) {
        // Clear every bit that sits on a pivot column, low to high.
        let mut c = 0;
        while c < self.ambient {
            let w = v[c / WORD_BITS] >> (c % WORD_BITS);
            if w == 0 {
                c = (c / WORD_BITS + 1) * WORD_BITS;
                continue;
            }
            let c2 = c + (w.trailing_zeros() as usize);
            if c2 >= self.ambient {
                return;
            }
            if let Some(r) = self.pivot_row[c2] {
                let start = r as usize * self.wpr;
                for (vi, row) in v.iter_mut().zip(&self.rows[start..start + self.wpr]) {
                    *vi ^= row;
                }
                c = c2; // the bit at c2 is now clear; rescan from here
            } else {
                c = c2 + 1;
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool, F2Error> {
        self.check_len(v)?;
        let mut tmp = v.to_vec();
        self.reduce_fully(&mut tmp);
        Ok(tmp.iter().all(|&w| w == 0))
    }

    fn check_len(&self, v: &[u64]) -> Result<(), F2Error> {
        if v.len() != self.wpr {
            return Err(F2Error::LengthMismatch {
                expected: self.wpr,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Inserts a vector, returning true when the span grew. Idempotent on
    /// repeats; maintains reduced echelon form.
    pub fn insert(&mut self, v: &[u64]) -> Result<bool, F2Error> {
        self.check_len(v)?;
        let mut tmp = v.to_vec();
        self.reduce_fully(&mut tmp);
        let Some(pivot) = Self::first_set_bit(&tmp) else {
            return Ok(false);
        };
        debug_assert!(pivot < self.ambient, "padding bits must be zero");
        // Back-substitute the new pivot out of every existing row.
        let idx = self.pivots.len() as u32;
        let (wi, bit) = (pivot / WORD_BITS, pivot % WORD_BITS);
        for r in 0..self.pivots.len() {
            if (self.rows[r * self.wpr + wi] >> bit) & 1 == 1 {
                let start = r * self.wpr;
                for (row, ti) in self.rows[start..start + self.wpr].iter_mut().zip(&tmp) {
                    *row ^= ti;
                }
            }
        }
        self.rows.extend_from_slice(&tmp);
        self.pivots.push(pivot);
        self.pivot_row[pivot] = Some(idx);
        Ok(true)
    }

    /// A basis of the right nullspace of the row space, i.e. all v with
    /// M v = 0 for every inserted row M. One vector per free column, in
    /// ascending free-column order.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for c in 0..self.ambient {
            if self.pivot_row[c].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.wpr];
            v[c / WORD_BITS] |= 1 << (c % WORD_BITS);
            for (r, &p) in self.pivots.iter().enumerate() {
                if (self.rows[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1 {
                    v[p / WORD_BITS] ^= 1 << (p % WORD_BITS);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Dimension over F₂ of the joint commutant {X : G X = X G for all G in gens},
/// computed as the nullity of the stacked Sylvester systems. The constraint
/// rows are accumulated generator by generator into one echelon basis.
pub fn commutant_dim(gens: &[BitMatrix]) -> Result<usize, F2Error> {
    let span = commutant_constraints(gens, true)?;
    let n = gens.first().map_or(0, |g| g.rows());
    Ok(n * n - span.rank())
}

/// A basis of the commutant itself, as n x n matrices.
pub fn commutant_basis(gens: &[BitMatrix]) -> Result<Vec<BitMatrix>, F2Error> {
    let span = commutant_constraints(gens, false)?;
    let n = gens.first().map_or(0, |g| g.rows());
    let out = span
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = BitMatrix::zero(n, n);
            for r in 0..n {
                for c in 0..n {
                    let pos = r * n + c;
                    if (v[pos / WORD_BITS] >> (pos % WORD_BITS)) & 1 == 1 {
                        m.set(r, c, true);
                    }
                }
            }
            m
        })
        .collect();
    Ok(out)
}

fn commutant_constraints(gens: &[BitMatrix], early_exit: bool) -> Result<SpanBasis, F2Error> {
    let Some(first) = gens.first() else {
        return Ok(SpanBasis::new(0));
    };
    let n = first.rows();
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(F2Error::ShapeMismatch("commutant generators must be square and same size".into()));
        }
    }
    let nn = n * n;
    let wpr = words_for(nn);
    let mut span = SpanBasis::new(nn);
    let mut row = vec![0u64; wpr];
    // The commutant always contains the identity, so rank never exceeds nn - 1.
    let max_rank = nn - 1;
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                row.iter_mut().for_each(|w| *w = 0);
                // (g X)_{ij}: coefficient of X_{kj} is g_{ik}
                for k in 0..n {
                    if g.get(i, k) {
                        let pos = k * n + j;
                        row[pos / WORD_BITS] ^= 1 << (pos % WORD_BITS);
                    }
                }
                // (X g)_{ij}: coefficient of X_{il} is g_{lj}
                for l in 0..n {
                    if g.get(l, j) {
                        let pos = i * n + l;
                        row[pos / WORD_BITS] ^= 1 << (pos % WORD_BITS);
                    }
                }
                span.insert(&row)?;
            }
        }
        if early_exit && span.rank() == max_rank {
            return Ok(span);
        }
    }
    Ok(span)
}

/// The smallest unital subalgebra of End(F₂^n) that contains `seed` and is
/// stable under conjugation by every conjugator. Returns the span (flattened
/// n²-bit vectors) together with the spanning matrices it accumulated.
pub struct AlgebraClosure {
    pub span: SpanBasis,
    pub mats: Vec<BitMatrix>,
}

pub fn algebra_closure(seed: &[BitMatrix], conjugators: &[BitMatrix]) -> Result<AlgebraClosure, F2Error> {
    let n = seed
        .first()
        .map(|m| m.rows())
        .or_else(|| conjugators.first().map(|m| m.rows()))
        .unwrap_or(0);
    let pairs: Vec<(BitMatrix, BitMatrix)> = conjugators
        .iter()
        .map(|g| {
            let inv = g.inverse().ok_or(F2Error::SingularConjugator)?;
            Ok((g.clone(), inv))
        })
        .collect::<Result<_, F2Error>>()?;

    let mut span = SpanBasis::new(n * n);
    let mut mats: Vec<BitMatrix> = Vec::new();
    let mut work: Vec<usize> = Vec::new();

    let full = n * n;
    let push = |m: BitMatrix, span: &mut SpanBasis, mats: &mut Vec<BitMatrix>, work: &mut Vec<usize>| -> Result<bool, F2Error> {
        if span.insert(&m.flatten())? {
            mats.push(m);
            work.push(mats.len() - 1);
        }
        // a full span cannot grow further, so the closure is decided
        Ok(span.rank() == full)
    };

    if push(BitMatrix::identity(n), &mut span, &mut mats, &mut work)? {
        return Ok(AlgebraClosure { span, mats });
    }
    for s in seed {
        if s.rows() != n || s.cols() != n {
            return Err(F2Error::ShapeMismatch("closure seed must be square of matching size".into()));
        }
        if push(s.clone(), &mut span, &mut mats, &mut work)? {
            return Ok(AlgebraClosure { span, mats });
        }
    }

    while let Some(idx) = work.pop() {
        let x = mats[idx].clone();
        for (g, ginv) in &pairs {
            let conj = g.mul(&x)?.mul(ginv)?;
            if push(conj, &mut span, &mut mats, &mut work)? {
                return Ok(AlgebraClosure { span, mats });
            }
        }
        let mut k = 0;
        while k < mats.len() {
            let m = mats[k].clone();
            if push(x.mul(&m)?, &mut span, &mut mats, &mut work)?
                || push(m.mul(&x)?, &mut span, &mut mats, &mut work)?
            {
                return Ok(AlgebraClosure { span, mats });
            }
            k += 1;
        }
    }
    Ok(AlgebraClosure { span, mats })
}

impl AlgebraClosure {
    /// Post-hoc stability verification: products of basis matrices and their
    /// conjugates all stay inside the span.
    pub fn verify_closed(&self, conjugators: &[BitMatrix]) -> Result<bool, F2Error> {
        for x in &self.mats {
            for g in conjugators {
                let ginv = g.inverse().ok_or(F2Error::SingularConjugator)?;
                if !self.span.contains(&g.mul(x)?.mul(&ginv)?.flatten())? {
                    return Ok(false);
                }
            }
            for y in &self.mats {
                if !self.span.contains(&x.mul(y)?.flatten())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
