//! Quasi-determinants, quasi-Plücker coordinates and Gauss decompositions
//! over arbitrary (noncommutative) rings.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::matrix::{Label, LabeledMat, MatrixError};
use crate::report::Check;
use crate::ring::Ring;

/// A minor (with optional frame position) whose inversion failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    pub frame: Option<(Label, Label)>,
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |l: &[Label]| l.iter().map(Label::to_string).collect::<Vec<_>>().join(",");
        write!(f, "rows {{{}}} cols {{{}}}", join(&self.rows), join(&self.cols))?;
        if let Some((i, j)) = self.frame {
            write!(f, " at ({i},{j})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QdError {
    #[error("singular quasi-determinant: {0}")]
    SingularQuasiDet(Minor),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Strategy {
    /// Expansion through quasi-determinants of the complementary minor.
    Recursive,
    /// One inversion of the complementary minor.
    #[default]
    ViaInverse,
}

type Key = (u64, u64, usize, usize);

/// Memoized quasi-determinants of minors of one fixed matrix.
pub struct QdSession<'a, T: Ring> {
    a: &'a LabeledMat<T>,
    strategy: Strategy,
    memo: HashMap<Key, Result<T, QdError>>,
}

impl<'a, T: Ring> QdSession<'a, T> {
    pub fn new(a: &'a LabeledMat<T>, strategy: Strategy) -> Self {
        assert!(a.nrows() <= 64 && a.ncols() <= 64, "quasi-determinant sessions support up to 64 labels");
        QdSession {
            a,
            strategy,
            memo: HashMap::new(),
        }
    }

    pub fn matrix(&self) -> &LabeledMat<T> {
        self.a
    }

    fn masks(&self, rows: &[Label], cols: &[Label]) -> Result<(u64, u64), QdError> {
        let mut rm = 0u64;
        for &r in rows {
            rm |= 1 << self.a.row_pos(r)?;
        }
        let mut cm = 0u64;
        for &c in cols {
            cm |= 1 << self.a.col_pos(c)?;
        }
        if rm.count_ones() as usize != rows.len() || cm.count_ones() as usize != cols.len() {
            return Err(MatrixError::Label("repeated label".into()).into());
        }
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(MatrixError::Shape(format!(
                "quasi-determinant of a {}x{} minor",
                rows.len(),
                cols.len()
            ))
            .into());
        }
        Ok((rm, cm))
    }

    /// `|A|_{ij}` of the whole matrix.
    pub fn full(&mut self, i: Label, j: Label) -> Result<T, QdError> {
        let rows = self.a.row_labels().to_vec();
        let cols = self.a.col_labels().to_vec();
        self.minor(&rows, &cols, i, j)
    }

    /// `|A^{rows}_{cols}|_{ij}`.
    pub fn minor(&mut self, rows: &[Label], cols: &[Label], i: Label, j: Label) -> Result<T, QdError> {
        let (rm, cm) = self.masks(rows, cols)?;
        let (ip, jp) = (self.a.row_pos(i)?, self.a.col_pos(j)?);
        if rm & (1 << ip) == 0 || cm & (1 << jp) == 0 {
            return Err(MatrixError::Label(format!("frame ({i},{j}) outside the minor")).into());
        }
        self.compute(rm, cm, ip, jp)
    }

    /// `|A^{kj}|_{..}`-style helper: minor with one row and one column removed.
    pub fn without(&mut self, drop_r: Label, drop_c: Label, i: Label, j: Label) -> Result<T, QdError> {
        let rows: Vec<Label> = self.a.row_labels().iter().copied().filter(|&l| l != drop_r).collect();
        let cols: Vec<Label> = self.a.col_labels().iter().copied().filter(|&l| l != drop_c).collect();
        self.minor(&rows, &cols, i, j)
    }

    fn labels_of(&self, rm: u64, cm: u64) -> (Vec<Label>, Vec<Label>) {
        let rows = (0..self.a.nrows()).filter(|p| rm & (1 << p) != 0).map(|p| self.a.row_labels()[p]).collect();
        let cols = (0..self.a.ncols()).filter(|p| cm & (1 << p) != 0).map(|p| self.a.col_labels()[p]).collect();
        (rows, cols)
    }

    fn compute(&mut self, rm: u64, cm: u64, ip: usize, jp: usize) -> Result<T, QdError> {
        let key = (rm, cm, ip, jp);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = self.compute_uncached(rm, cm, ip, jp);
        self.memo.insert(key, v.clone());
        v
    }

    fn compute_uncached(&mut self, rm: u64, cm: u64, ip: usize, jp: usize) -> Result<T, QdError> {
        let a = self.a;
        let aij = a.at(ip, jp).clone();
        if rm.count_ones() == 1 {
            return Ok(aij);
        }
        let (rm2, cm2) = (rm & !(1 << ip), cm & !(1 << jp));
        let rps: Vec<usize> = (0..a.nrows()).filter(|p| rm2 & (1 << p) != 0).collect();
        let cps: Vec<usize> = (0..a.ncols()).filter(|p| cm2 & (1 << p) != 0).collect();
        let mut acc = aij;
        match self.strategy {
            Strategy::Recursive => {
                for &k in &cps {
                    let aik = a.at(ip, k);
                    if aik.is_zero() {
                        continue;
                    }
                    for &l in &rps {
                        let alj = a.at(l, jp);
                        if alj.is_zero() {
                            continue;
                        }
                        let inner = self.compute(rm2, cm2, l, k)?;
                        let inv = inner.try_inv().ok_or_else(|| {
                            let (rows, cols) = self.labels_of(rm2, cm2);
                            QdError::SingularQuasiDet(Minor {
                                rows,
                                cols,
                                frame: Some((a.row_labels()[l], a.col_labels()[k])),
                            })
                        })?;
                        acc = acc.sub(&aik.mul(&inv).mul(alj));
                    }
                }
            }
            Strategy::ViaInverse => {
                let (rows, cols) = self.labels_of(rm2, cm2);
                let sub = a.submatrix(&rows, &cols)?;
                let inv = T::invert_matrix(&sub).ok_or_else(|| {
                    QdError::SingularQuasiDet(Minor {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        frame: None,
                    })
                })?;
                // inv is indexed (column label of A, row label of A)
                for (ki, &k) in cps.iter().enumerate() {
                    let aik = a.at(ip, k);
                    if aik.is_zero() {
                        continue;
                    }
                    for (li, &l) in rps.iter().enumerate() {
                        let alj = a.at(l, jp);
                        let x = inv.at(ki, li);
                        if alj.is_zero() || x.is_zero() {
                            continue;
                        }
                        acc = acc.sub(&aik.mul(x).mul(alj));
                    }
                }
            }
        }
        Ok(acc)
    }
}

/// `|A|_{ij}` with a fresh session.
pub fn quasi_det<T: Ring>(a: &LabeledMat<T>, i: Label, j: Label, strategy: Strategy) -> Result<T, QdError> {
    QdSession::new(a, strategy).full(i, j)
}

fn invert<T: Ring>(x: T, minor: impl FnOnce() -> Minor) -> Result<T, QdError> {
    x.try_inv().ok_or_else(|| QdError::SingularQuasiDet(minor()))
}

/// `A⁻¹` with entries `(A⁻¹)_{ij} = |A|_{ji}⁻¹`.
pub fn inverse_via_quasidet<T: Ring>(a: &LabeledMat<T>, strategy: Strategy) -> Result<LabeledMat<T>, QdError> {
    if !a.is_square() {
        return Err(MatrixError::Shape("inverse of a non-square matrix".into()).into());
    }
    let mut s = QdSession::new(a, strategy);
    let (rows, cols) = (a.row_labels().to_vec(), a.col_labels().to_vec());
    let mut data = Vec::with_capacity(rows.len() * cols.len());
    for &c in &cols {
        for &r in &rows {
            let v = s.full(r, c)?;
            data.push(invert(v, || Minor {
                rows: rows.clone(),
                cols: cols.clone(),
                frame: Some((r, c)),
            })?);
        }
    }
    Ok(LabeledMat::with_labels(cols, rows, data))
}

/// Left quasi-Plücker coordinate of a wide matrix, evaluated through row `s`:
/// `(|A_{i,J}|_{s i})⁻¹ |A_{j,J}|_{s j}` over all rows.
pub fn left_qplucker<T: Ring>(
    a: &LabeledMat<T>,
    i: Label,
    j: Label,
    others: &[Label],
    s: Label,
) -> Result<T, QdError> {
    if others.contains(&i) {
        return Err(MatrixError::Label(format!("{i} repeated in the column set")).into());
    }
    if i == j {
        return Ok(a.template().one_like());
    }
    let rows = a.row_labels().to_vec();
    let mut sess = QdSession::new(a, Strategy::default());
    let ci: Vec<Label> = std::iter::once(i).chain(others.iter().copied()).collect();
    let cj: Vec<Label> = std::iter::once(j).chain(others.iter().copied()).collect();
    let den = sess.minor(&rows, &ci, s, i)?;
    let num = sess.minor(&rows, &cj, s, j)?;
    Ok(invert(den, || Minor {
        rows: rows.clone(),
        cols: ci.clone(),
        frame: Some((s, i)),
    })?
    .mul(&num))
}

/// Right quasi-Plücker coordinate of a tall matrix, evaluated through column
/// `t`: `|A^{i,I}|_{i t} (|A^{j,I}|_{j t})⁻¹` over all columns.
pub fn right_qplucker<T: Ring>(
    a: &LabeledMat<T>,
    i: Label,
    j: Label,
    others: &[Label],
    t: Label,
) -> Result<T, QdError> {
    if others.contains(&j) {
        return Err(MatrixError::Label(format!("{j} repeated in the row set")).into());
    }
    if i == j {
        return Ok(a.template().one_like());
    }
    let cols = a.col_labels().to_vec();
    let mut sess = QdSession::new(a, Strategy::default());
    let ri: Vec<Label> = std::iter::once(i).chain(others.iter().copied()).collect();
    let rj: Vec<Label> = std::iter::once(j).chain(others.iter().copied()).collect();
    let num = sess.minor(&ri, &cols, i, t)?;
    let den = sess.minor(&rj, &cols, j, t)?;
    Ok(num.mul(&invert(den, || Minor {
        rows: rj.clone(),
        cols: cols.clone(),
        frame: Some((j, t)),
    })?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GaussVariant {
    /// `A = E H F`, `H_k = |A^{k..N}_{k..N}|_{kk}`.
    Senior,
    /// `A = F H E`, `H_k = |A^{1..k}_{1..k}|_{kk}`.
    Junior,
}

/// Unitriangular and diagonal Gauss factors.
#[derive(Clone, PartialEq, Debug)]
pub struct GaussFactors<T> {
    /// Upper unitriangular.
    pub e: LabeledMat<T>,
    pub h: LabeledMat<T>,
    /// Lower unitriangular.
    pub f: LabeledMat<T>,
    pub variant: GaussVariant,
}

impl<T: Ring> GaussFactors<T> {
    pub fn reconstruct(&self) -> LabeledMat<T> {
        let m = match self.variant {
            GaussVariant::Senior => self.e.mat_mul(&self.h).and_then(|x| x.mat_mul(&self.f)),
            GaussVariant::Junior => self.f.mat_mul(&self.h).and_then(|x| x.mat_mul(&self.e)),
        };
        m.expect("square factors")
    }
}

/// Gauss decomposition with factors given by quasi-Plücker coordinates.
/// Positions, not label values, define the ordering `1..N`.
pub fn gauss_decompose<T: Ring>(a: &LabeledMat<T>, variant: GaussVariant) -> Result<GaussFactors<T>, QdError> {
    if !a.is_square() {
        return Err(MatrixError::Shape("Gauss decomposition of a non-square matrix".into()).into());
    }
    let n = a.nrows();
    let (rl, cl) = (a.row_labels().to_vec(), a.col_labels().to_vec());
    let t = a.template().clone();
    let mut e = LabeledMat::identity_like(n, &t).relabel(rl.clone(), cl.clone());
    let mut f = e.clone();
    let mut h = LabeledMat::zeros_like(n, n, &t).relabel(rl.clone(), cl.clone());
    let mut sess = QdSession::new(a, Strategy::default());
    let pivot = |sess: &mut QdSession<T>, rows: &[Label], cols: &[Label], k: usize| -> Result<(T, T), QdError> {
        let hk = sess.minor(rows, cols, rl[k], cl[k])?;
        let inv = invert(hk.clone(), || Minor {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            frame: Some((rl[k], cl[k])),
        })?;
        Ok((hk, inv))
    };
    match variant {
        GaussVariant::Senior => {
            let mut hinv = Vec::with_capacity(n);
            for k in 0..n {
                let (hk, inv) = pivot(&mut sess, &rl[k..], &cl[k..], k)?;
                h.set(k, k, hk);
                hinv.push(inv);
            }
            for j in 0..n {
                for i in 0..j {
                    // E_ij = |A^{i, j+1..N}_{j..N}|_{i j} H_j⁻¹
                    let rows: Vec<Label> = std::iter::once(rl[i]).chain(rl[j + 1..].iter().copied()).collect();
                    let num = sess.minor(&rows, &cl[j..], rl[i], cl[j])?;
                    e.set(i, j, num.mul(&hinv[j]));
                    // F_ji = H_j⁻¹ |A^{j..N}_{i, j+1..N}|_{j i}
                    let cols: Vec<Label> = std::iter::once(cl[i]).chain(cl[j + 1..].iter().copied()).collect();
                    let num = sess.minor(&rl[j..], &cols, rl[j], cl[i])?;
                    f.set(j, i, hinv[j].mul(&num));
                }
            }
        }
        GaussVariant::Junior => {
            let mut hinv = Vec::with_capacity(n);
            for k in 0..n {
                let (hk, inv) = pivot(&mut sess, &rl[..=k], &cl[..=k], k)?;
                h.set(k, k, hk);
                hinv.push(inv);
            }
            for i in 0..n {
                for j in i + 1..n {
                    // Ẽ_ij = H̃_i⁻¹ |A^{1..i}_{1..i-1, j}|_{i j}
                    let cols: Vec<Label> = cl[..i].iter().copied().chain(std::iter::once(cl[j])).collect();
                    let num = sess.minor(&rl[..=i], &cols, rl[i], cl[j])?;
                    e.set(i, j, hinv[i].mul(&num));
                    // F̃_ji = |A^{1..i-1, j}_{1..i}|_{j i} H̃_i⁻¹
                    let rows: Vec<Label> = rl[..i].iter().copied().chain(std::iter::once(rl[j])).collect();
                    let num = sess.minor(&rows, &cl[..=i], rl[j], cl[i])?;
                    f.set(j, i, num.mul(&hinv[i]));
                }
            }
        }
    }
    Ok(GaussFactors { e, h, f, variant })
}

/// Families of quasi-determinant identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Identity {
    Homological,
    Laplace,
    Inversion,
}

const ANCHOR_HOM: &str = "quasi-determinant homological relations";
const ANCHOR_LAP: &str = "quasi-determinant Laplace expansions";
const ANCHOR_INV: &str = "quasi-determinant inversion identity";

fn record<T: Ring + crate::report::Compare>(
    name: String,
    anchor: &str,
    sides: Result<(T, T), QdError>,
) -> Check {
    match sides {
        Ok((l, r)) => Check::equal(name, anchor, &l, &r),
        Err(QdError::SingularQuasiDet(m)) => Check::singular(name, anchor, m),
        Err(e) => Check::fail(name, anchor, serde_json::json!({ "error": e.to_string() })),
    }
}

fn inv_of<T: Ring>(x: T, rows: &[Label], cols: &[Label], fr: (Label, Label)) -> Result<T, QdError> {
    invert(x, || Minor {
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        frame: Some(fr),
    })
}

fn minus(l: &[Label], x: Label) -> Vec<Label> {
    l.iter().copied().filter(|&y| y != x).collect()
}

/// Evaluates every instance of one identity family on `a` (square).
pub fn verify_qd_identities<T: Ring + crate::report::Compare>(a: &LabeledMat<T>, which: Identity) -> Vec<Check> {
    let rl = a.row_labels().to_vec();
    let cl = a.col_labels().to_vec();
    let mut s = QdSession::new(a, Strategy::default());
    let mut out = Vec::new();
    match which {
        Identity::Homological => {
            for &i in &rl {
                for &j in &cl {
                    for &l in cl.iter().filter(|&&l| l != j) {
                        for &sr in rl.iter().filter(|&&x| x != i) {
                            // -|A|_ij |A^{il}|_{sj}⁻¹ = |A|_il |A^{ij}|_{sl}⁻¹
                            let sides = (|| {
                                let aij = s.full(i, j)?;
                                let ail = s.full(i, l)?;
                                let x = s.without(i, l, sr, j)?;
                                let y = s.without(i, j, sr, l)?;
                                let xi = inv_of(x, &minus(&rl, i), &minus(&cl, l), (sr, j))?;
                                let yi = inv_of(y, &minus(&rl, i), &minus(&cl, j), (sr, l))?;
                                Ok((aij.mul(&xi).neg(), ail.mul(&yi)))
                            })();
                            out.push(record(format!("row homological i={i} j={j} l={l} s={sr}"), ANCHOR_HOM, sides));
                        }
                    }
                }
            }
            for &i in &rl {
                for &j in &cl {
                    for &k in rl.iter().filter(|&&k| k != i) {
                        for &t in cl.iter().filter(|&&x| x != j) {
                            // -|A^{kj}|_{it}⁻¹ |A|_ij = |A^{ij}|_{kt}⁻¹ |A|_kj
                            let sides = (|| {
                                let aij = s.full(i, j)?;
                                let akj = s.full(k, j)?;
                                let x = s.without(k, j, i, t)?;
                                let y = s.without(i, j, k, t)?;
                                let xi = inv_of(x, &minus(&rl, k), &minus(&cl, j), (i, t))?;
                                let yi = inv_of(y, &minus(&rl, i), &minus(&cl, j), (k, t))?;
                                Ok((xi.mul(&aij).neg(), yi.mul(&akj)))
                            })();
                            out.push(record(format!("column homological i={i} j={j} k={k} t={t}"), ANCHOR_HOM, sides));
                        }
                    }
                }
            }
        }
        Identity::Laplace => {
            for &i in &rl {
                for &j in &cl {
                    for &sr in rl.iter().filter(|&&x| x != i) {
                        // |A|_ij = a_ij - Σ_{k≠j} a_ik |A^{ij}|_{sk}⁻¹ |A^{ik}|_{sj}
                        let sides = (|| {
                            let lhs = s.full(i, j)?;
                            let mut rhs = a.get(i, j)?.clone();
                            for &k in cl.iter().filter(|&&k| k != j) {
                                let x = s.without(i, j, sr, k)?;
                                let xi = inv_of(x, &minus(&rl, i), &minus(&cl, j), (sr, k))?;
                                let y = s.without(i, k, sr, j)?;
                                rhs = rhs.sub(&a.get(i, k)?.mul(&xi).mul(&y));
                            }
                            Ok((lhs, rhs))
                        })();
                        out.push(record(format!("row Laplace i={i} j={j} s={sr}"), ANCHOR_LAP, sides));
                    }
                    for &sc in cl.iter().filter(|&&x| x != j) {
                        // |A|_ij = a_ij - Σ_{k≠i} |A^{kj}|_{is} |A^{ij}|_{ks}⁻¹ a_kj
                        let sides = (|| {
                            let lhs = s.full(i, j)?;
                            let mut rhs = a.get(i, j)?.clone();
                            for &k in rl.iter().filter(|&&k| k != i) {
                                let x = s.without(k, j, i, sc)?;
                                let y = s.without(i, j, k, sc)?;
                                let yi = inv_of(y, &minus(&rl, i), &minus(&cl, j), (k, sc))?;
                                rhs = rhs.sub(&x.mul(&yi).mul(a.get(k, j)?));
                            }
                            Ok((lhs, rhs))
                        })();
                        out.push(record(format!("column Laplace i={i} j={j} s={sc}"), ANCHOR_LAP, sides));
                    }
                }
            }
        }
        Identity::Inversion => {
            let b = match T::invert_matrix(a) {
                Some(b) => b,
                None => {
                    out.push(Check::singular(
                        "inversion identity",
                        ANCHOR_INV,
                        Minor {
                            rows: rl.clone(),
                            cols: cl.clone(),
                            frame: None,
                        },
                    ));
                    return out;
                }
            };
            let mut sb = QdSession::new(&b, Strategy::default());
            let n = rl.len();
            let one = a.template().one_like();
            for size in 0..n {
                for pm in subsets(n, size) {
                    for qm in subsets(n, size) {
                        let p: Vec<Label> = pos_labels(&rl, pm);
                        let q: Vec<Label> = pos_labels(&cl, qm);
                        let not_p: Vec<Label> = pos_labels(&rl, !pm & ((1 << n) - 1));
                        let not_q: Vec<Label> = pos_labels(&cl, !qm & ((1 << n) - 1));
                        for &k in &not_p {
                            for &l in &not_q {
                                // |A^{P∪k}_{Q∪l}|_{kl} |B^{I∖Q}_{I∖P}|_{lk} = 1
                                let sides = (|| {
                                    let rows: Vec<Label> = p.iter().copied().chain([k]).collect();
                                    let cols: Vec<Label> = q.iter().copied().chain([l]).collect();
                                    let x = s.minor(&rows, &cols, k, l)?;
                                    let y = sb.minor(&not_q, &not_p, l, k)?;
                                    Ok((x.mul(&y), one.clone()))
                                })();
                                let name = format!(
                                    "inversion P={{{}}} Q={{{}}} k={k} l={l}",
                                    join(&p),
                                    join(&q)
                                );
                                out.push(record(name, ANCHOR_INV, sides));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Collapses many checks of one family into a single record.
fn family(name: String, anchor: &str, checks: Vec<Check>) -> Check {
    use crate::report::Status;
    let total = checks.len();
    if let Some(bad) = checks.iter().find(|c| c.status == Status::Fail) {
        let detail = serde_json::json!({ "instances": total, "first_failure": bad.name, "detail": bad.detail });
        return Check::fail(name, anchor, detail);
    }
    if let Some(sk) = checks.iter().find(|c| c.status == Status::SkippedSingular) {
        let mut c = sk.clone();
        c.name = name;
        c.anchor = anchor.to_string();
        return c;
    }
    let mut c = Check::pass(name, anchor);
    c.detail = Some(serde_json::json!({ "instances": total }));
    c
}

const ANCHOR_DEF: &str = "quasi-determinant definition";
const ANCHOR_COMM: &str = "commutative reduction of quasi-determinants";
const ANCHOR_GAUSS: &str = "Gauss decompositions by quasi-determinants";

fn matrix_checks<T: Ring + crate::report::Compare>(a: &LabeledMat<T>, tag: &str) -> Vec<Check> {
    let rl = a.row_labels().to_vec();
    let cl = a.col_labels().to_vec();
    let mut rec = QdSession::new(a, Strategy::Recursive);
    let mut via = QdSession::new(a, Strategy::ViaInverse);
    let mut agree = Vec::new();
    for &i in &rl {
        for &j in &cl {
            let sides = (|| Ok((rec.full(i, j)?, via.full(i, j)?)))();
            agree.push(record(format!("|A|_{i}{j}"), ANCHOR_DEF, sides));
        }
    }
    let mut out = vec![family(format!("{tag}: recursive and inverse strategies agree"), ANCHOR_DEF, agree)];
    let inverse = (|| {
        let got = inverse_via_quasidet(a, Strategy::default())?;
        let want = T::invert_matrix(a).ok_or_else(|| {
            QdError::SingularQuasiDet(Minor {
                rows: rl.clone(),
                cols: cl.clone(),
                frame: None,
            })
        })?;
        Ok((got, want))
    })();
    out.push(record(format!("{tag}: inverse from quasi-determinants = elimination inverse"), ANCHOR_INV, inverse));
    for (w, anchor) in [
        (Identity::Homological, ANCHOR_HOM),
        (Identity::Laplace, ANCHOR_LAP),
        (Identity::Inversion, ANCHOR_INV),
    ] {
        out.push(family(format!("{tag}: {w:?} identities"), anchor, verify_qd_identities(a, w)));
    }
    for v in [GaussVariant::Senior, GaussVariant::Junior] {
        let sides = gauss_decompose(a, v).map(|g| (g.reconstruct(), a.clone()));
        out.push(record(format!("{tag}: {v:?} Gauss reconstruction"), ANCHOR_GAUSS, sides));
    }
    out
}

/// `|A|_{ij} = (−1)^{i+j} det A / det A^{ij}` against cofactors.
fn commutative_reduction(a: &LabeledMat<crate::ring::QRat>, tag: &str) -> Check {
    let d = crate::matrix::det(a);
    let mut cs = Vec::new();
    for (pi, &i) in a.row_labels().iter().enumerate() {
        for (pj, &j) in a.col_labels().iter().enumerate() {
            let sides = (|| {
                let minor = a.without(i, j)?;
                let cof = crate::matrix::det(&minor);
                let cof_inv = inv_of(cof, &minus(a.row_labels(), i), &minus(a.col_labels(), j), (i, j))?;
                let sign = if (pi + pj) % 2 == 0 { d.clone() } else { -d.clone() };
                Ok((quasi_det(a, i, j, Strategy::Recursive)?, sign * cof_inv))
            })();
            cs.push(record(format!("|A|_{i}{j}"), ANCHOR_COMM, sides));
        }
    }
    family(format!("{tag}: commutative reduction"), ANCHOR_COMM, cs)
}

/// Seeded random matrices of sizes 2 to `max_size`, alternating rational
/// and 2×2-operator entries. Matrices with a singular minor are redrawn; the
/// redraw count is reported.
pub fn verify_random(max_size: usize, seed: u64, samples: usize) -> Vec<Check> {
    use rayon::prelude::*;
    let parts: Vec<(Vec<Check>, usize)> = (0..samples).into_par_iter().map(|k| random_sample(max_size, seed, k)).collect();
    let redraws: usize = parts.iter().map(|p| p.1).sum();
    let mut out: Vec<Check> = parts.into_iter().flat_map(|p| p.0).collect();
    let mut summary = Check::pass(format!("{samples} random matrices"), ANCHOR_DEF);
    summary.detail = Some(serde_json::json!({ "samples": samples, "singular_redraws": redraws }));
    out.push(summary);
    out
}

fn random_sample(max_size: usize, seed: u64, k: usize) -> (Vec<Check>, usize) {
    use crate::report::Status;
    use crate::sample::Sampler;
    let sizes = max_size.max(2) - 1;
    let n = 2 + k % sizes;
    let operator = (k / sizes) % 2 == 1;
    let mut s = Sampler::split(seed, k as u64);
    let kind = if operator { "operator" } else { "rational" };
    let tag = format!("sample {k} ({n}×{n} {kind})");
    let mut redraws = 0;
    loop {
        let checks = if operator {
            matrix_checks(&s.op_mat(n, n, 2), &tag)
        } else {
            let a = s.rat_mat(n, n);
            let mut c = matrix_checks(&a, &tag);
            c.push(commutative_reduction(&a, &tag));
            c
        };
        if checks.iter().any(|c| c.status == Status::SkippedSingular) && redraws < 7 {
            redraws += 1;
            continue;
        }
        return (checks, redraws);
    }
}

fn join(l: &[Label]) -> String {
    l.iter().map(Label::to_string).collect::<Vec<_>>().join(",")
}

fn subsets(n: usize, size: usize) -> impl Iterator<Item = u64> {
    (0u64..(1 << n)).filter(move |m| m.count_ones() as usize == size)
}

fn pos_labels(l: &[Label], mask: u64) -> Vec<Label> {
    (0..l.len()).filter(|p| mask & (1 << p) != 0).map(|p| l[p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{det, labels};
    use crate::ring::{qrat, QRat};
    use crate::sample::Sampler;

    fn l(i: usize) -> Label {
        Label::plain(i)
    }

    #[test]
    fn one_by_one_is_entry() {
        let a = LabeledMat::from_rows(vec![vec![qrat(5, 3)]]);
        assert_eq!(quasi_det(&a, l(1), l(1), Strategy::Recursive).unwrap(), qrat(5, 3));
    }

    #[test]
    fn two_by_two_lower_left() {
        let mut s = Sampler::new(1);
        let a = s.op_mat(2, 2, 2);
        let got = quasi_det(&a, l(2), l(1), Strategy::Recursive).unwrap();
        let (a11, a12, a21, a22) = (a.ij(1, 1), a.ij(1, 2), a.ij(2, 1), a.ij(2, 2));
        let expect = a21.sub(&a22.mul(&a12.try_inv().unwrap()).mul(a11));
        assert_eq!(got, expect);
        assert_eq!(quasi_det(&a, l(2), l(1), Strategy::ViaInverse).unwrap(), expect);
    }

    #[test]
    fn commutative_reduction() {
        let mut s = Sampler::new(2);
        let a = s.rat_mat(3, 3);
        let d = det(&a);
        for i in 1..=3 {
            for j in 1..=3 {
                let minor = a.without(l(i), l(j)).unwrap();
                let sign = if (i + j) % 2 == 0 { qrat(1, 1) } else { qrat(-1, 1) };
                let expect = sign * &d / det(&minor);
                assert_eq!(quasi_det(&a, l(i), l(j), Strategy::Recursive).unwrap(), expect);
            }
        }
    }

    #[test]
    fn singular_minor_is_reported() {
        let a = LabeledMat::from_rows(vec![
            vec![qrat(1, 1), qrat(2, 1), qrat(0, 1)],
            vec![qrat(2, 1), qrat(4, 1), qrat(0, 1)],
            vec![qrat(0, 1), qrat(0, 1), qrat(1, 1)],
        ]);
        let err = quasi_det(&a, l(3), l(3), Strategy::ViaInverse).unwrap_err();
        let QdError::SingularQuasiDet(m) = err else { panic!() };
        assert_eq!(m.rows, labels(2));
    }

    #[test]
    fn plucker_is_one_on_diagonal_and_independent_of_s() {
        let mut s = Sampler::new(5);
        let a = s.op_mat(2, 3, 2);
        assert!(left_qplucker(&a, l(1), l(1), &[l(3)], l(1)).unwrap().is_one());
        let x = left_qplucker(&a, l(1), l(2), &[l(3)], l(1)).unwrap();
        let y = left_qplucker(&a, l(1), l(2), &[l(3)], l(2)).unwrap();
        assert_eq!(x, y);
        let b = s.op_mat(3, 2, 2);
        let x = right_qplucker(&b, l(1), l(2), &[l(3)], l(1)).unwrap();
        let y = right_qplucker(&b, l(1), l(2), &[l(3)], l(2)).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn plucker_commutative_ratio() {
        let mut s = Sampler::new(6);
        let a = s.rat_mat(2, 4);
        let x = left_qplucker(&a, l(1), l(3), &[l(4)], l(2)).unwrap();
        let num = det(&a.submatrix(&labels(2), &[l(3), l(4)]).unwrap());
        let den = det(&a.submatrix(&labels(2), &[l(1), l(4)]).unwrap());
        assert_eq!(x, num / den);
    }

    #[test]
    fn diagonal_gauss_is_trivial() {
        let a = LabeledMat::from_fn(3, 3, |i, j| if i == j { qrat(i as i64 + 2, 1) } else { QRat::from_integer(0.into()) });
        let g = gauss_decompose(&a, GaussVariant::Senior).unwrap();
        assert!(g.e.is_identity() && g.f.is_identity());
        assert_eq!(g.h, a);
    }

    #[test]
    fn gauss_reconstructs_noncommutative() {
        let mut s = Sampler::new(9);
        let a = s.op_mat(3, 3, 2);
        for v in [GaussVariant::Senior, GaussVariant::Junior] {
            let g = gauss_decompose(&a, v).unwrap();
            assert_eq!(g.reconstruct(), a, "{v:?}");
        }
    }

    #[test]
    fn identities_hold_on_operator_matrix() {
        let mut s = Sampler::new(4);
        let a = s.op_mat(3, 3, 2);
        for w in [Identity::Homological, Identity::Laplace, Identity::Inversion] {
            let checks = verify_qd_identities(&a, w);
            assert!(!checks.is_empty());
            assert!(checks.iter().all(Check::is_pass), "{w:?}: {:?}", checks.iter().find(|c| !c.is_pass()));
        }
    }
}
