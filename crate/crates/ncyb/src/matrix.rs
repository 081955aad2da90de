//! Matrices over arbitrary rings with label-preserving submatrices.

use std::fmt;

use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown label {0}")]
    Label(String),
    #[error("matrix is singular")]
    Singular,
}

/// Row or column label. Barred labels index the first block of the
/// `2n × 2n` block matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Label {
    pub bar: bool,
    pub idx: u32,
}

impl Label {
    pub fn plain(i: usize) -> Self {
        Label {
            bar: false,
            idx: i as u32,
        }
    }

    pub fn bar(i: usize) -> Self {
        Label {
            bar: true,
            idx: i as u32,
        }
    }

    pub fn index(&self) -> usize {
        self.idx as usize
    }
}

impl From<usize> for Label {
    fn from(i: usize) -> Self {
        Label::plain(i)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "{}\u{0304}", self.idx)
        } else {
            write!(f, "{}", self.idx)
        }
    }
}

/// Labels `1..=n`.
pub fn labels(n: usize) -> Vec<Label> {
    (1..=n).map(Label::plain).collect()
}

/// Labels for an inclusive range `a..=b` (empty when `a > b`).
pub fn range(a: usize, b: usize) -> Vec<Label> {
    (a..=b).map(Label::plain).collect()
}

/// Row-major matrix carrying the original row and column labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledMat<T> {
    rows: Vec<Label>,
    cols: Vec<Label>,
    data: Vec<T>,
}

impl<T: Clone> LabeledMat<T> {
    pub fn with_labels(rows: Vec<Label>, cols: Vec<Label>, data: Vec<T>) -> Self {
        assert_eq!(rows.len() * cols.len(), data.len(), "entry grid does not match labels");
        debug_assert!(distinct(&rows) && distinct(&cols), "labels must be distinct");
        LabeledMat { rows, cols, data }
    }

    pub fn from_fn(r: usize, c: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                data.push(f(i, j));
            }
        }
        LabeledMat {
            rows: labels(r),
            cols: labels(c),
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<T> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        LabeledMat {
            rows: labels(r),
            cols: labels(c),
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols.len() + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        let nc = self.cols.len();
        &mut self.data[r * nc + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        *self.at_mut(r, c) = v;
    }

    pub fn row_pos(&self, l: Label) -> Result<usize, MatrixError> {
        self.rows
            .iter()
            .position(|&x| x == l)
            .ok_or_else(|| MatrixError::Label(format!("row {l}")))
    }

    pub fn col_pos(&self, l: Label) -> Result<usize, MatrixError> {
        self.cols
            .iter()
            .position(|&x| x == l)
            .ok_or_else(|| MatrixError::Label(format!("column {l}")))
    }

    /// Entry addressed by original labels.
    pub fn get(&self, r: Label, c: Label) -> Result<&T, MatrixError> {
        Ok(self.at(self.row_pos(r)?, self.col_pos(c)?))
    }

    /// Entry at 1-based plain labels `(i, j)`.
    pub fn ij(&self, i: usize, j: usize) -> &T {
        self.get(Label::plain(i), Label::plain(j)).expect("label present")
    }

    pub fn relabel(mut self, rows: Vec<Label>, cols: Vec<Label>) -> Self {
        assert_eq!(rows.len(), self.rows.len());
        assert_eq!(cols.len(), self.cols.len());
        self.rows = rows;
        self.cols = cols;
        self
    }

    /// Submatrix selected by labels, in the requested order.
    pub fn submatrix(&self, rows: &[Label], cols: &[Label]) -> Result<Self, MatrixError> {
        let rp: Vec<usize> = rows.iter().map(|&l| self.row_pos(l)).collect::<Result<_, _>>()?;
        let cp: Vec<usize> = cols.iter().map(|&l| self.col_pos(l)).collect::<Result<_, _>>()?;
        let mut data = Vec::with_capacity(rp.len() * cp.len());
        for &r in &rp {
            for &c in &cp {
                data.push(self.at(r, c).clone());
            }
        }
        Ok(LabeledMat {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            data,
        })
    }

    /// `A^{ij}`: row `i` and column `j` removed.
    pub fn without(&self, i: Label, j: Label) -> Result<Self, MatrixError> {
        self.row_pos(i)?;
        self.col_pos(j)?;
        let rows: Vec<Label> = self.rows.iter().copied().filter(|&l| l != i).collect();
        let cols: Vec<Label> = self.cols.iter().copied().filter(|&l| l != j).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.nrows(), self.ncols());
        let mut data = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                data.push(self.at(i, j).clone());
            }
        }
        LabeledMat {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            data,
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> LabeledMat<U> {
        LabeledMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<LabeledMat<U>, E> {
        Ok(LabeledMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let nc = self.ncols();
        for c in 0..nc {
            self.data.swap(a * nc + c, b * nc + c);
        }
        self.rows.swap(a, b);
    }
}

fn distinct(l: &[Label]) -> bool {
    let mut v = l.to_vec();
    v.sort();
    v.windows(2).all(|w| w[0] != w[1])
}

impl<T: Ring> LabeledMat<T> {
    pub fn zeros_like(r: usize, c: usize, template: &T) -> Self {
        let z = template.zero_like();
        Self::from_fn(r, c, |_, _| z.clone())
    }

    pub fn identity_like(n: usize, template: &T) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Self::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    /// Any entry, used as a template for zero and one.
    pub fn template(&self) -> &T {
        &self.data[0]
    }

    pub fn mat_mul(&self, o: &Self) -> Result<Self, MatrixError> {
        if self.ncols() != o.nrows() {
            return Err(MatrixError::Shape(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                o.nrows(),
                o.ncols()
            )));
        }
        let (r, k, c) = (self.nrows(), self.ncols(), o.ncols());
        let zero = self.template().zero_like();
        let mut data = vec![zero; r * c];
        for i in 0..r {
            for m in 0..k {
                let a = self.at(i, m);
                if a.is_zero() {
                    continue;
                }
                for j in 0..c {
                    let b = o.at(m, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = &mut data[i * c + j];
                    *t = t.add(&a.mul(b));
                }
            }
        }
        Ok(LabeledMat {
            rows: self.rows.clone(),
            cols: o.cols.clone(),
            data,
        })
    }

    pub fn add_mat(&self, o: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols()), (o.nrows(), o.ncols()), "shape mismatch");
        LabeledMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub_mat(&self, o: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols()), (o.nrows(), o.ncols()), "shape mismatch");
        LabeledMat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Left multiplication of every entry by `s`.
    pub fn scale_left(&self, s: &T) -> Self {
        self.map(|x| s.mul(x))
    }

    /// Kronecker product, left factor most significant.
    pub fn kron(&self, o: &Self) -> Self {
        let (r1, c1, r2, c2) = (self.nrows(), self.ncols(), o.nrows(), o.ncols());
        let zero = self.template().zero_like();
        let mut out = Self::from_fn(r1 * r2, c1 * c2, |_, _| zero.clone());
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = o.at(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols()).all(|j| {
                    let x = self.at(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// First differing entry as `(row, col)`.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        if (self.nrows(), self.ncols()) != (o.nrows(), o.ncols()) {
            return Some((usize::MAX, usize::MAX));
        }
        (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| self.at(i, j) != o.at(i, j))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity_like(self.nrows(), self.template());
        for _ in 0..e {
            acc = acc.mat_mul(self).expect("square");
        }
        acc
    }
}

/// Swap operator `V1 ⊗ V2 → V2 ⊗ V1` for dimensions `d1`, `d2`.
pub fn swap_matrix<T: Ring>(d1: usize, d2: usize, template: &T) -> LabeledMat<T> {
    let mut m = LabeledMat::zeros_like(d1 * d2, d1 * d2, template);
    for a in 0..d1 {
        for b in 0..d2 {
            m.set(b * d1 + a, a * d2 + b, template.one_like());
        }
    }
    m
}

/// `P = Σ E_ij ⊗ E_ji` on `Vⁿ ⊗ Vⁿ`.
pub fn permutation_matrix<T: Ring>(n: usize, template: &T) -> LabeledMat<T> {
    swap_matrix(n, n, template)
}

/// Lifts `op`, acting on the tensor factors `positions` (in that order), to
/// the full tensor product with factor dimensions `dims`.
pub fn embed<T: Ring>(op: &LabeledMat<T>, dims: &[usize], positions: &[usize]) -> LabeledMat<T> {
    let total: usize = dims.iter().product();
    let sub: Vec<usize> = positions.iter().map(|&p| dims[p]).collect();
    assert_eq!(op.nrows(), sub.iter().product::<usize>(), "operator dimension");
    let mut out = LabeledMat::zeros_like(total, total, op.template());
    let digits = |mut f: usize| {
        let mut d = vec![0; dims.len()];
        for p in (0..dims.len()).rev() {
            d[p] = f % dims[p];
            f /= dims[p];
        }
        d
    };
    let local = |d: &[usize]| positions.iter().fold(0, |acc, &p| acc * dims[p] + d[p]);
    for col in 0..total {
        let dc = digits(col);
        let lc = local(&dc);
        for lr in 0..op.nrows() {
            let x = op.at(lr, lc);
            if x.is_zero() {
                continue;
            }
            let mut dr = dc.clone();
            let mut rem = lr;
            for (k, &p) in positions.iter().enumerate().rev() {
                dr[p] = rem % sub[k];
                rem /= sub[k];
            }
            let row = dr.iter().zip(dims).fold(0, |acc, (&d, &n)| acc * n + d);
            out.set(row, col, x.clone());
        }
    }
    out
}

/// Flattens a matrix of square operator blocks into one scalar matrix.
pub fn flatten<T: Ring>(m: &LabeledMat<LabeledMat<T>>) -> LabeledMat<T> {
    let d = m.template().nrows();
    let (r, c) = (m.nrows(), m.ncols());
    let t = m.template().template().clone();
    let mut out = LabeledMat::zeros_like(r * d, c * d, &t);
    for i in 0..r {
        for j in 0..c {
            let b = m.at(i, j);
            for k in 0..d {
                for l in 0..d {
                    let x = b.at(k, l);
                    if !x.is_zero() {
                        out.set(i * d + k, j * d + l, x.clone());
                    }
                }
            }
        }
    }
    out
}

/// Inverse of [`flatten`] with block size `d` and the given labels.
pub fn unflatten<T: Ring>(
    m: &LabeledMat<T>,
    d: usize,
    rows: Vec<Label>,
    cols: Vec<Label>,
) -> LabeledMat<LabeledMat<T>> {
    let (r, c) = (m.nrows() / d, m.ncols() / d);
    let mut data = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            data.push(LabeledMat::from_fn(d, d, |k, l| m.at(i * d + k, j * d + l).clone()));
        }
    }
    LabeledMat::with_labels(rows, cols, data)
}

/// Gauss–Jordan inversion with unit pivots and left row operations, valid
/// over noncommutative rings whose non-units in a column signal singularity.
pub fn gauss_jordan<T: Ring>(m: &LabeledMat<T>) -> Option<LabeledMat<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.nrows();
    if n == 0 {
        return Some(m.clone());
    }
    let t = m.template().clone();
    let mut a = m.clone();
    let mut b = LabeledMat::identity_like(n, &t);
    for col in 0..n {
        let mut best: Option<(usize, T, usize)> = None;
        for r in col..n {
            let x = a.at(r, col);
            if x.is_zero() {
                continue;
            }
            let w = x.size_hint();
            if best.as_ref().is_none_or(|(_, _, bw)| w < *bw) {
                if let Some(inv) = x.try_inv() {
                    best = Some((r, inv, w));
                }
            }
        }
        let (p, inv, _) = best?;
        a.swap_rows(p, col);
        b.swap_rows(p, col);
        for j in 0..n {
            let x = inv.mul(a.at(col, j));
            a.set(col, j, x);
            let y = inv.mul(b.at(col, j));
            b.set(col, j, y);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a.at(r, col).clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let pa = a.at(col, j);
                if !pa.is_zero() {
                    let x = a.at(r, j).sub(&f.mul(pa));
                    a.set(r, j, x);
                }
                let pb = b.at(col, j);
                if !pb.is_zero() {
                    let y = b.at(r, j).sub(&f.mul(pb));
                    b.set(r, j, y);
                }
            }
        }
    }
    Some(LabeledMat {
        rows: m.cols.clone(),
        cols: m.rows.clone(),
        data: b.data,
    })
}

/// Inverse of a square matrix, labels transposed.
pub fn field_inverse<T: Ring>(m: &LabeledMat<T>) -> Result<LabeledMat<T>, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::Shape("inverse of a non-square matrix".into()));
    }
    T::invert_matrix(m).ok_or(MatrixError::Singular)
}

/// Determinant over a commutative field.
pub fn det<T: Ring>(m: &LabeledMat<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    let t = if n == 0 {
        panic!("determinant of an empty matrix needs a template")
    } else {
        m.template().clone()
    };
    let mut a = m.clone();
    let mut acc = t.one_like();
    for col in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for r in col..n {
            let x = a.at(r, col);
            if !x.is_zero() {
                let w = x.size_hint();
                if best.is_none_or(|(_, bw)| w < bw) {
                    best = Some((r, w));
                }
            }
        }
        let Some((p, _)) = best else {
            return t.zero_like();
        };
        if p != col {
            a.swap_rows(p, col);
            acc = acc.neg();
        }
        let piv = a.at(col, col).clone();
        acc = acc.mul(&piv);
        let inv = piv.try_inv().expect("nonzero pivot over a field");
        for r in col + 1..n {
            let f = a.at(r, col).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for j in col + 1..n {
                let pa = a.at(col, j);
                if !pa.is_zero() {
                    let x = a.at(r, j).sub(&f.mul(pa));
                    a.set(r, j, x);
                }
            }
        }
    }
    acc
}

impl<T: Ring> fmt::Display for LabeledMat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.nrows() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.ncols() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<T: Ring> Ring for LabeledMat<T> {
    fn zero_like(&self) -> Self {
        Self::zeros_like(self.nrows(), self.ncols(), self.template())
    }
    fn one_like(&self) -> Self {
        Self::identity_like(self.nrows(), self.template())
    }
    fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }
    fn add(&self, o: &Self) -> Self {
        self.add_mat(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_mat(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mat_mul(o).expect("operator shapes agree")
    }
    fn neg(&self) -> Self {
        self.map(Ring::neg)
    }
    fn try_inv(&self) -> Option<Self> {
        T::invert_matrix(self)
    }
    fn is_one(&self) -> bool {
        self.is_identity()
    }
    fn int_like(&self, k: i64) -> Self {
        let t = self.template();
        let (z, c) = (t.zero_like(), t.int_like(k));
        Self::from_fn(self.nrows(), self.ncols(), |i, j| if i == j { c.clone() } else { z.clone() })
    }
    fn size_hint(&self) -> usize {
        self.data.iter().map(Ring::size_hint).sum()
    }
    fn invert_matrix(m: &LabeledMat<Self>) -> Option<LabeledMat<Self>> {
        let d = m.template().nrows();
        let inv = T::invert_matrix(&flatten(m))?;
        Some(unflatten(&inv, d, m.cols.clone(), m.rows.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qq::*;
    use crate::ring::{qrat, QRat, QqFun};

    fn unit(n: usize, i: usize, j: usize) -> LabeledMat<QRat> {
        LabeledMat::from_fn(n, n, |a, b| qrat((a == i && b == j) as i64, 1))
    }

    #[test]
    fn matrix_units_respect_order() {
        let (e12, e21) = (unit(2, 0, 1), unit(2, 1, 0));
        assert_eq!(e12.mat_mul(&e21).unwrap(), unit(2, 0, 0));
        assert_eq!(e21.mat_mul(&e12).unwrap(), unit(2, 1, 1));
    }

    #[test]
    fn kron_of_units() {
        let k = unit(2, 0, 0).kron(&unit(2, 1, 1));
        assert_eq!(k, unit(4, 1, 1));
        let i2 = LabeledMat::identity_like(2, &qrat(1, 1));
        assert!(i2.kron(&i2).is_identity());
    }

    #[test]
    fn permutation_swaps_middle_basis() {
        let p = permutation_matrix(2, &qrat(1, 1));
        let expect = LabeledMat::from_rows(vec![
            vec![qrat(1, 1), qrat(0, 1), qrat(0, 1), qrat(0, 1)],
            vec![qrat(0, 1), qrat(0, 1), qrat(1, 1), qrat(0, 1)],
            vec![qrat(0, 1), qrat(1, 1), qrat(0, 1), qrat(0, 1)],
            vec![qrat(0, 1), qrat(0, 1), qrat(0, 1), qrat(1, 1)],
        ]);
        assert_eq!(p, expect);
        let p3 = permutation_matrix(3, &qrat(1, 1));
        assert!(p3.mat_mul(&p3).unwrap().is_identity());
    }

    #[test]
    fn small_field_inverse() {
        let m = LabeledMat::from_rows(vec![vec![q(), int(1)], vec![int(0), int(1)]]);
        let inv = field_inverse(&m).unwrap();
        let expect = LabeledMat::from_rows(vec![
            vec![qpow(-1), qpow(-1).neg()],
            vec![QqFun::zero(), int(1)],
        ]);
        assert_eq!(inv, expect);
    }

    #[test]
    fn submatrix_keeps_labels() {
        let a = LabeledMat::from_fn(3, 3, |i, j| qrat((10 * (i + 1) + j + 1) as i64, 1));
        let s = a.submatrix(&range(2, 3), &range(2, 3)).unwrap();
        assert_eq!(s.row_labels(), &range(2, 3)[..]);
        assert_eq!(*s.ij(2, 2), qrat(22, 1));
        let m = a.without(Label::plain(1), Label::plain(2)).unwrap();
        assert_eq!(m.col_labels(), &[Label::plain(1), Label::plain(3)][..]);
        assert!(a.submatrix(&[Label::plain(4)], &range(1, 1)).is_err());
    }

    #[test]
    fn embedding_matches_kron() {
        let a = LabeledMat::from_fn(2, 2, |i, j| qrat((i * 2 + j + 1) as i64, 1));
        let i2 = LabeledMat::identity_like(2, &qrat(1, 1));
        assert_eq!(embed(&a, &[2, 2], &[0]), a.kron(&i2));
        assert_eq!(embed(&a, &[2, 2], &[1]), i2.kron(&a));
        let ab = a.kron(&a.transpose());
        let p = permutation_matrix(2, &qrat(1, 1));
        let swapped = p.mat_mul(&ab).unwrap().mat_mul(&p).unwrap();
        assert_eq!(embed(&ab, &[2, 2], &[1, 0]), swapped);
    }

    #[test]
    fn determinant_small() {
        let m = LabeledMat::from_rows(vec![
            vec![qrat(2, 1), qrat(1, 1)],
            vec![qrat(7, 1), qrat(4, 1)],
        ]);
        assert_eq!(det(&m), qrat(1, 1));
    }
}
