//! Dense arbitrary-precision integer matrices and the exact kernels the
//! identities are checked with: fraction-free determinant and inverse,
//! exact inertia, permanents and brute-force permutation expansions.
//!
//! Elimination runs in checked `i128` first and falls back to `BigInt` when
//! an intermediate value overflows, so results never depend on the width.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    /// Inertia of a block-diagonal matrix.
    pub fn plus(self, other: Inertia) -> Inertia {
        Inertia {
            positive: self.positive + other.positive,
            negative: self.negative + other.negative,
            zero: self.zero + other.zero,
        }
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            entries.extend(row.as_ref().iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("addition of different shapes".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sum_entries(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// `P M P^T` where row `i` of the result is row `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<IntMatrix> {
        let n = self.require_square()?;
        if perm.len() != n {
            return Err(Error::ShapeMismatch("permutation length".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| self.get(perm[i], perm[j]).clone()))
    }

    /// The minor matrix with row `r` and column `c` deleted.
    pub fn delete_row_col(&self, r: usize, c: usize) -> IntMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Text form: `rows cols` on the first line, then one line per row of
    /// space-separated integers.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<IntMatrix> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(ln, line)| line.split_whitespace().map(move |t| (ln + 1, t)));
        let mut dim = |what: &str| -> Result<usize> {
            let (ln, t) = tokens.next().ok_or(Error::Parse {
                line: 1,
                msg: format!("missing {what}"),
            })?;
            t.parse().map_err(|_| Error::Parse {
                line: ln,
                msg: format!("bad {what} `{t}`"),
            })
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        let mut entries = Vec::with_capacity(rows * cols);
        for (ln, t) in tokens {
            entries.push(BigInt::from_str(t).map_err(|_| Error::Parse {
                line: ln,
                msg: format!("bad integer `{t}`"),
            })?);
        }
        IntMatrix::new(rows, cols, entries)
    }

    fn to_small(&self) -> Option<Vec<i128>> {
        self.entries.iter().map(ToPrimitive::to_i128).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Integer arithmetic with overflow reported as `None`.
trait Exact: Clone + PartialEq {
    fn x_zero() -> Self;
    fn x_one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn x_is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// `None` on overflow or when the division leaves a remainder.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn x_zero() -> Self {
        0
    }
    fn x_one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn x_is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if *o == 0 || self.checked_rem(*o)? != 0 {
            return None;
        }
        self.checked_div(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn x_zero() -> Self {
        Zero::zero()
    }
    fn x_one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn x_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// `(a*b - c*d) / e`, exact.
fn cross<T: Exact>(a: &T, b: &T, c: &T, d: &T, e: &T) -> Option<T> {
    a.mul(b)?.sub(&c.mul(d)?)?.div_exact(e)
}

/// Runs `f` on an `i128` copy of the matrix, then on `BigInt` if that
/// overflowed.
fn with_width<R>(
    m: &IntMatrix,
    small: impl FnOnce(Vec<i128>) -> Option<R>,
    big: impl FnOnce(Vec<BigInt>) -> Option<R>,
) -> Option<R> {
    if let Some(r) = m.to_small().and_then(small) {
        return Some(r);
    }
    big(m.entries.clone())
}

fn bareiss_det<T: Exact>(mut a: Vec<T>, n: usize) -> Option<T> {
    if n == 0 {
        return Some(T::x_one());
    }
    let mut negate = false;
    let mut prev = T::x_one();
    for k in 0..n - 1 {
        if a[k * n + k].x_is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].x_is_zero()) else {
                return Some(T::x_zero());
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = cross(&a[i * n + j], &a[k * n + k], &a[i * n + k], &a[k * n + j], &prev)?;
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Leading principal minors via Bareiss without pivoting. `Ok(None)` when a
/// minor vanishes before the last one.
fn bareiss_leading_minors<T: Exact>(mut a: Vec<T>, n: usize) -> Option<Option<Vec<T>>> {
    let mut minors = Vec::with_capacity(n);
    let mut prev = T::x_one();
    for k in 0..n {
        let pivot = a[k * n + k].clone();
        minors.push(pivot.clone());
        if k + 1 == n {
            break;
        }
        if pivot.x_is_zero() {
            return Some(None);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = cross(&a[i * n + j], &pivot, &a[i * n + k], &a[k * n + j], &prev)?;
            }
        }
        prev = pivot;
    }
    Some(Some(minors))
}

enum InverseOutcome<T> {
    Inverse(Vec<T>),
    /// Determinant of a matrix whose inverse is not integral.
    Fractional(T),
    Singular,
}

/// Fraction-free Gauss-Jordan on `[A | I]`. The left block ends as `d * I`
/// with `d = +-det A`, and the right block as `d * A^-1`.
fn gauss_jordan_inverse<T: Exact>(a: Vec<T>, n: usize) -> Option<InverseOutcome<T>> {
    let w = 2 * n;
    let mut m: Vec<T> = Vec::with_capacity(n * w);
    for i in 0..n {
        m.extend_from_slice(&a[i * n..(i + 1) * n]);
        m.extend((0..n).map(|j| if i == j { T::x_one() } else { T::x_zero() }));
    }
    let mut prev = T::x_one();
    for k in 0..n {
        if m[k * w + k].x_is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i * w + k].x_is_zero()) else {
                return Some(InverseOutcome::Singular);
            };
            for j in 0..w {
                m.swap(k * w + j, p * w + j);
            }
        }
        let pivot = m[k * w + k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let factor = m[i * w + k].clone();
            for j in (0..w).filter(|&j| j != k) {
                m[i * w + j] = cross(&m[i * w + j], &pivot, &factor, &m[k * w + j], &prev)?;
            }
            m[i * w + k] = T::x_zero();
        }
        prev = pivot;
    }
    let mut inv = Vec::with_capacity(n * n);
    for i in 0..n {
        let d = &m[i * w + i];
        for j in 0..n {
            match m[i * w + n + j].div_exact(d) {
                Some(v) => inv.push(v),
                None if T::x_one().div_exact(d).is_none() => {
                    return Some(InverseOutcome::Fractional(d.clone()));
                }
                None => return None,
            }
        }
    }
    Some(InverseOutcome::Inverse(inv))
}

/// Faddeev-LeVerrier: coefficients of `det(t I - A)`, lowest degree first.
fn faddeev_leverrier<T: Exact>(a: Vec<T>, n: usize) -> Option<Vec<T>> {
    let mut coeffs = vec![T::x_zero(); n + 1];
    coeffs[n] = T::x_one();
    let mut m = vec![T::x_zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![T::x_zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let x = &a[i * n + l];
                if x.x_is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &m[l * n + j];
                    if !y.x_is_zero() {
                        next[i * n + j] = next[i * n + j].add(&x.mul(y)?)?;
                    }
                }
            }
        }
        for i in 0..n {
            next[i * n + i] = next[i * n + i].add(&coeffs[n - k + 1])?;
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = T::x_zero();
        for i in 0..n {
            for l in 0..n {
                tr = tr.add(&a[i * n + l].mul(&next[l * n + i])?)?;
            }
        }
        coeffs[n - k] = tr.neg()?.div_exact(&T::from_i64(k as i64))?;
        m = next;
    }
    Some(coeffs)
}

fn to_big_vec<T: Exact>(v: Vec<T>) -> Vec<BigInt> {
    v.into_iter().map(Exact::into_big).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    with_width(
        m,
        |a| bareiss_det(a, n).map(BigInt::from),
        |a| bareiss_det(a, n),
    )
    .ok_or_else(|| Error::Internal("inexact division in Bareiss elimination".into()))
}

/// Leading principal minors `D_1, ..., D_n`, or `None` if one of
/// `D_1, ..., D_{n-1}` vanishes.
pub fn leading_principal_minors(m: &IntMatrix) -> Result<Option<Vec<BigInt>>> {
    let n = m.require_square()?;
    with_width(
        m,
        |a| bareiss_leading_minors(a, n).map(|r| r.map(to_big_vec)),
        |a| bareiss_leading_minors(a, n),
    )
    .ok_or_else(|| Error::Internal("inexact division in Bareiss elimination".into()))
}

/// Exact integer inverse of a matrix with determinant `+-1`. The product
/// with the input is checked against the identity before returning.
pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.require_square()?;
    let outcome = with_width(
        m,
        |a| {
            gauss_jordan_inverse(a, n).map(|o| match o {
                InverseOutcome::Inverse(v) => InverseOutcome::Inverse(to_big_vec(v)),
                InverseOutcome::Fractional(d) => InverseOutcome::Fractional(BigInt::from(d)),
                InverseOutcome::Singular => InverseOutcome::Singular,
            })
        },
        |a| gauss_jordan_inverse(a, n),
    )
    .ok_or_else(|| Error::Internal("inexact division in Gauss-Jordan elimination".into()))?;
    let g = match outcome {
        InverseOutcome::Inverse(v) => IntMatrix::new(n, n, v)?,
        InverseOutcome::Fractional(d) => return Err(Error::NotUnimodular(d.abs().to_string())),
        InverseOutcome::Singular => return Err(Error::NotUnimodular("0".into())),
    };
    if m.mul(&g)? != IntMatrix::identity(n) || g.mul(m)? != IntMatrix::identity(n) {
        return Err(Error::Internal("inverse check m*g = 1 failed".into()));
    }
    Ok(g)
}

/// Characteristic polynomial `det(t I - A)` by Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.require_square()?;
    let coeffs = with_width(
        m,
        |a| faddeev_leverrier(a, n).map(to_big_vec),
        |a| faddeev_leverrier(a, n),
    )
    .ok_or_else(|| Error::Internal("inexact division in Faddeev-LeVerrier".into()))?;
    Ok(IntPoly::new(coeffs))
}

fn check_symmetric(m: &IntMatrix) -> Result<usize> {
    let n = m.require_square()?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(n)
}

/// Exact inertia of a nonsingular symmetric matrix.
///
/// When every leading principal minor is nonzero the negative count is the
/// number of sign changes in `1, D_1, ..., D_n` (Jacobi). Otherwise the
/// characteristic polynomial is used: its roots are all real, so Descartes'
/// rule counts the positive ones exactly.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    let n = check_symmetric(m)?;
    match leading_principal_minors(m)? {
        Some(minors) if minors.last().is_none_or(|d| !d.is_zero()) => {
            let mut negative = 0;
            let mut prev_neg = false;
            for d in &minors {
                let neg = d.is_negative();
                if neg != prev_neg {
                    negative += 1;
                }
                prev_neg = neg;
            }
            Ok(Inertia {
                positive: n - negative,
                negative,
                zero: 0,
            })
        }
        Some(_) => Err(Error::Singular),
        None => inertia_by_characteristic_polynomial(m),
    }
}

/// Inertia from Descartes' sign rule on the characteristic polynomial.
pub fn inertia_by_characteristic_polynomial(m: &IntMatrix) -> Result<Inertia> {
    let n = check_symmetric(m)?;
    let p = characteristic_polynomial(m)?;
    let zero = p.zero_root_multiplicity();
    if zero > 0 {
        return Err(Error::Singular);
    }
    let positive = p.sign_changes();
    Ok(Inertia {
        positive,
        negative: n - positive - zero,
        zero,
    })
}

/// Kronecker product; row `(i, k)` sits at `i * b.rows + k`.
pub fn tensor_product(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (r, c) = (a.rows * b.rows, a.cols * b.cols);
    IntMatrix::from_fn(r, c, |i, j| {
        let x = a.get(i / b.rows, j / b.cols);
        if x.is_zero() {
            BigInt::zero()
        } else {
            x * b.get(i % b.rows, j % b.cols)
        }
    })
}

/// Block-diagonal `a (+) b`.
pub fn direct_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
        match (i < a.rows, j < a.cols) {
            (true, true) => a.get(i, j).clone(),
            (false, false) => b.get(i - a.rows, j - a.cols).clone(),
            _ => BigInt::zero(),
        }
    })
}

pub const PERMANENT_MAX_DIM: usize = 14;
pub const PERMUTATION_ORACLE_MAX_DIM: usize = 9;

/// Permanent by Ryser's inclusion-exclusion formula, walking column subsets
/// in Gray-code order.
pub fn permanent(m: &IntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    if n > PERMANENT_MAX_DIM {
        return Err(Error::TooLarge {
            what: "permanent",
            dim: n,
            max: PERMANENT_MAX_DIM,
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray = 0u32;
    for step in 1u32..(1 << n) {
        let next = step ^ (step >> 1);
        let col = (gray ^ next).trailing_zeros() as usize;
        let adding = next & (1 << col) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += m.get(i, col);
            } else {
                *s -= m.get(i, col);
            }
        }
        gray = next;
        let prod: BigInt = row_sums.iter().product();
        if next.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

/// Visits every permutation of `0..n` (Heap's algorithm) with its sign.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize], i64)) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1;
    visit(&p, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            sign = -sign;
            visit(&p, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Determinant as the literal Leibniz sum over all permutations.
pub fn permutation_expansion_determinant(m: &IntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    if n > PERMUTATION_ORACLE_MAX_DIM {
        return Err(Error::TooLarge {
            what: "permutation expansion",
            dim: n,
            max: PERMUTATION_ORACLE_MAX_DIM,
        });
    }
    let small: Vec<i64> = m
        .entries
        .iter()
        .map(|v| v.to_i64())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Unsupported("permutation expansion needs 64-bit entries".into()))?;
    let mut total = BigInt::zero();
    for_each_permutation(n, |p, sign| {
        let mut prod = BigInt::from(sign);
        for (i, &j) in p.iter().enumerate() {
            let v = small[i * n + j];
            if v == 0 {
                return;
            }
            prod *= v;
        }
        total += prod;
    });
    Ok(total)
}

/// Sum over all permutations `pi` of `sign(pi) * prod (1 + A)[i, pi(i)]` for
/// a 0/1 symmetric adjacency matrix: each surviving permutation is a
/// collection of oriented cyclic paths in the graph, and the sum equals the
/// Fredholm determinant `det(1 + A)`.
pub fn fredholm_path_oracle(adjacency: &IntMatrix) -> Result<BigInt> {
    let n = check_symmetric(adjacency)?;
    if adjacency.entries.iter().any(|v| !(v.is_zero() || v.is_one())) {
        return Err(Error::Unsupported("adjacency matrix must be 0/1".into()));
    }
    if (0..n).any(|i| !adjacency.get(i, i).is_zero()) {
        return Err(Error::Unsupported("adjacency matrix must have a zero diagonal".into()));
    }
    permutation_expansion_determinant(&IntMatrix::identity(n).add(adjacency)?)
}

/// Eigenvalues of a symmetric matrix in ascending order, computed in `f64`
/// with a standard symmetric eigensolver.
pub fn numeric_spectrum(m: &IntMatrix) -> Result<Vec<f64>> {
    let n = check_symmetric(m)?;
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j).to_f64().unwrap_or(f64::NAN));
    let mut ev: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}
