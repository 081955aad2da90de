//! `U_q(gl(n))` in finite-dimensional representations.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::matrix::{embed, flatten, permutation_matrix, swap_matrix, unflatten, LabeledMat};
use crate::report::Check;
use crate::ring::qq::{int, lambda, mu, qdiff, qfactorial, qpow};
use crate::ring::{QTorus, QqFun, Ring};

/// Operators over the quantum scalar field.
pub type Mat = LabeledMat<QqFun>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqError {
    #[error("operator is not nilpotent within {0} powers")]
    NotNilpotent(usize),
    #[error("representation has no integer Cartan weights")]
    WeightError,
}

/// An associative algebra of operators containing the scalars `QqFun`.
pub trait OpAlg: Ring {
    fn scalar_like(&self, c: &QqFun) -> Self;

    fn scale_by(&self, c: &QqFun) -> Self {
        self.scalar_like(c).mul(self)
    }
}

impl OpAlg for Mat {
    fn scalar_like(&self, c: &QqFun) -> Self {
        let z = QqFun::zero();
        LabeledMat::from_fn(self.nrows(), self.ncols(), |i, j| if i == j { c.clone() } else { z.clone() })
    }
    fn scale_by(&self, c: &QqFun) -> Self {
        self.map(|x| c.mul(x))
    }
}

impl OpAlg for QTorus {
    fn scalar_like(&self, c: &QqFun) -> Self {
        QTorus::scalar(c.clone())
    }
    fn scale_by(&self, c: &QqFun) -> Self {
        self.scale(c)
    }
}

/// Generator labels; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GenId {
    E(usize, usize),
    /// `q^{E_kk}`.
    Kplus(usize),
    /// `q^{-E_kk}`.
    Kminus(usize),
}

/// Images of the generators in one representation.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep<Op> {
    n: usize,
    e: BTreeMap<(usize, usize), Op>,
    kp: Vec<Op>,
    km: Vec<Op>,
    weights: Option<Vec<Vec<i32>>>,
}

/// `(q - q^{-1})^{-1}`.
fn inv_qdiff() -> QqFun {
    qdiff().inv().expect("q - 1/q is nonzero")
}

impl<Op: OpAlg> Rep<Op> {
    /// Builds a representation from simple root vectors and Cartan images;
    /// composite root vectors follow from the nested commutator recursion.
    pub fn from_simple(
        n: usize,
        simple: BTreeMap<(usize, usize), Op>,
        kp: Vec<Op>,
        km: Vec<Op>,
        weights: Option<Vec<Vec<i32>>>,
    ) -> Self {
        assert!(n >= 2, "rank parameter must be at least 2");
        assert_eq!(kp.len(), n);
        assert_eq!(km.len(), n);
        let mut r = Rep {
            n,
            e: simple,
            kp,
            km,
            weights,
        };
        for gap in 2..n {
            for i in 1..=n - gap {
                let j = i + gap;
                let up = r.root_vector_via(i, j, i + 1);
                let down = r.root_vector_via(j, i, i + 1);
                r.e.insert((i, j), up);
                r.e.insert((j, i), down);
            }
        }
        r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> Option<&[Vec<i32>]> {
        self.weights.as_deref()
    }

    pub fn e(&self, i: usize, j: usize) -> &Op {
        &self.e[&(i, j)]
    }

    pub fn kp(&self, k: usize) -> &Op {
        &self.kp[k - 1]
    }

    pub fn km(&self, k: usize) -> &Op {
        &self.km[k - 1]
    }

    pub fn gen(&self, g: GenId) -> &Op {
        match g {
            GenId::E(i, j) => self.e(i, j),
            GenId::Kplus(k) => self.kp(k),
            GenId::Kminus(k) => self.km(k),
        }
    }

    /// All generator labels: root vectors then Cartan elements.
    pub fn generators(&self) -> Vec<GenId> {
        let mut g: Vec<GenId> = self.e.keys().map(|&(i, j)| GenId::E(i, j)).collect();
        g.extend((1..=self.n).map(GenId::Kplus));
        g.extend((1..=self.n).map(GenId::Kminus));
        g
    }

    pub fn one(&self) -> Op {
        self.kp[0].one_like()
    }

    pub fn zero(&self) -> Op {
        self.kp[0].zero_like()
    }

    /// `H_i = q^{E_ii - E_{i+1,i+1}}`.
    pub fn h(&self, i: usize) -> Op {
        self.kp(i).mul(self.km(i + 1))
    }

    pub fn h_inv(&self, i: usize) -> Op {
        self.km(i).mul(self.kp(i + 1))
    }

    /// `q^{p ω_k}` with `ω_k = E_11 + ... + E_kk`.
    pub fn q_omega(&self, k: usize, p: i32) -> Op {
        let mut acc = self.one();
        for m in 1..=k {
            let f = if p >= 0 { self.kp(m) } else { self.km(m) };
            for _ in 0..p.unsigned_abs() {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Composite root vector through the intermediate index `k`, using the
    /// stored images of the two shorter root vectors.
    pub fn root_vector_via(&self, a: usize, b: usize, k: usize) -> Op {
        let c = inv_qdiff();
        if a < b {
            let (x, y) = (self.e(a, k), self.e(k, b));
            x.mul(y).sub(&y.mul(x).scale_by(&qpow(1))).scale_by(&c)
        } else {
            // E_ji with j = a > i = b
            let (x, y) = (self.e(a, k), self.e(k, b));
            x.mul(y).sub(&y.mul(x).scale_by(&qpow(-1))).scale_by(&c)
        }
    }

    /// Antipode images, extended anti-multiplicatively to composite root vectors.
    pub fn antipode_images(&self) -> BTreeMap<GenId, Op> {
        let n = self.n;
        let mut s: BTreeMap<GenId, Op> = BTreeMap::new();
        for k in 1..=n {
            s.insert(GenId::Kplus(k), self.km(k).clone());
            s.insert(GenId::Kminus(k), self.kp(k).clone());
        }
        for i in 1..n {
            s.insert(GenId::E(i, i + 1), self.e(i, i + 1).mul(&self.h_inv(i)).neg());
            s.insert(GenId::E(i + 1, i), self.h(i).mul(self.e(i + 1, i)).neg());
        }
        let c = inv_qdiff();
        for gap in 2..n {
            for i in 1..=n - gap {
                let (j, k) = (i + gap, i + 1);
                // S(E_ik E_kj - q E_kj E_ik) = S(E_kj)S(E_ik) - q S(E_ik)S(E_kj)
                let (sik, skj) = (&s[&GenId::E(i, k)], &s[&GenId::E(k, j)]);
                let up = skj.mul(sik).sub(&sik.mul(skj).scale_by(&qpow(1))).scale_by(&c);
                let (sjk, ski) = (&s[&GenId::E(j, k)], &s[&GenId::E(k, i)]);
                let down = ski.mul(sjk).sub(&sjk.mul(ski).scale_by(&qpow(-1))).scale_by(&c);
                s.insert(GenId::E(i, j), up);
                s.insert(GenId::E(j, i), down);
            }
        }
        s
    }
}

/// Counit value of a generator.
pub fn counit(g: GenId) -> QqFun {
    match g {
        GenId::E(..) => QqFun::zero(),
        GenId::Kplus(_) | GenId::Kminus(_) => QqFun::one(),
    }
}

/// `Σ_{k<m} X^k / (k)_p!`, requiring `X^m = 0` for some `m ≤ max_pow`.
pub fn q_exponential<Op: OpAlg>(x: &Op, base: &QqFun, max_pow: usize) -> Result<Op, UqError> {
    let mut acc = x.one_like();
    let mut term = x.one_like();
    for k in 1..=max_pow {
        term = term.mul(x);
        if term.is_zero() {
            return Ok(acc);
        }
        let f = qfactorial(k as u32, base).inv().expect("generic q");
        acc = acc.add(&term.scale_by(&f));
    }
    Err(UqError::NotNilpotent(max_pow))
}

/// Pairs `i < j` in the order of the left-to-right ordered product.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    v
}

// ---------------------------------------------------------------------------
// matrix representations

pub fn identity(d: usize) -> Mat {
    LabeledMat::identity_like(d, &QqFun::one())
}

/// Matrix unit `E_ij` (1-based) of size `n`.
pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    LabeledMat::from_fn(n, n, |a, b| {
        if a + 1 == i && b + 1 == j {
            QqFun::one()
        } else {
            QqFun::zero()
        }
    })
}

/// Diagonal matrix `diag(q^{e_1}, ..., q^{e_d})`.
pub fn diag_q(exps: &[i32]) -> Mat {
    let d = exps.len();
    LabeledMat::from_fn(d, d, |a, b| if a == b { qpow(exps[a]) } else { QqFun::zero() })
}

/// Transposes tensor factor `which` of an operator on `⊗ dims`.
pub fn partial_transpose(m: &Mat, dims: &[usize], which: usize) -> Mat {
    let total: usize = dims.iter().product();
    let digits = |mut f: usize| {
        let mut d = vec![0; dims.len()];
        for p in (0..dims.len()).rev() {
            d[p] = f % dims[p];
            f /= dims[p];
        }
        d
    };
    let undigits = |d: &[usize]| d.iter().zip(dims).fold(0, |acc, (&x, &n)| acc * n + x);
    LabeledMat::from_fn(total, total, |r, c| {
        let (mut dr, mut dc) = (digits(r), digits(c));
        std::mem::swap(&mut dr[which], &mut dc[which]);
        m.at(undigits(&dr), undigits(&dc)).clone()
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coproduct {
    Delta,
    DeltaOp,
    DeltaF,
}

impl Rep<Mat> {
    pub fn dim(&self) -> usize {
        self.kp[0].nrows()
    }

    /// `π(E_kk) = E_kk`, `π(E_ij) = (q - q^{-1}) E_ij`.
    pub fn fundamental(n: usize) -> Self {
        let mut simple = BTreeMap::new();
        for i in 1..n {
            simple.insert((i, i + 1), unit(n, i, i + 1).scale_by(&qdiff()));
            simple.insert((i + 1, i), unit(n, i + 1, i).scale_by(&qdiff()));
        }
        let w = |k: usize| -> Vec<i32> { (1..=n).map(|b| (b == k) as i32).collect() };
        let kp = (1..=n).map(|k| diag_q(&w(k))).collect();
        let km = (1..=n).map(|k| diag_q(&w(k).iter().map(|x| -x).collect::<Vec<_>>())).collect();
        let weights = (1..=n).map(w).collect();
        Rep::from_simple(n, simple, kp, km, Some(weights))
    }

    /// The counit as a one-dimensional representation.
    pub fn trivial(n: usize) -> Self {
        let mut simple = BTreeMap::new();
        for i in 1..n {
            simple.insert((i, i + 1), LabeledMat::from_rows(vec![vec![QqFun::zero()]]));
            simple.insert((i + 1, i), LabeledMat::from_rows(vec![vec![QqFun::zero()]]));
        }
        let one = identity(1);
        Rep::from_simple(n, simple, vec![one.clone(); n], vec![one; n], Some(vec![vec![0; n]]))
    }

    /// Tensor product through one of the coproducts.
    pub fn coproduct(r1: &Self, r2: &Self, variant: Coproduct) -> Self {
        let (i1, i2) = (identity(r1.dim()), identity(r2.dim()));
        let mut r = coproduct_with(r1, r2, variant, |a, b| a.kron(b), &i1, &i2);
        r.weights = match (&r1.weights, &r2.weights) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect()))
                    .collect(),
            ),
            _ => None,
        };
        r
    }

    /// `ρ(x) = π(S(x))ᵀ`.
    pub fn dual(&self) -> Self {
        let s = self.antipode_images();
        let n = self.n;
        let mut simple = BTreeMap::new();
        for i in 1..n {
            simple.insert((i, i + 1), s[&GenId::E(i, i + 1)].transpose());
            simple.insert((i + 1, i), s[&GenId::E(i + 1, i)].transpose());
        }
        let kp = (1..=n).map(|k| s[&GenId::Kplus(k)].transpose()).collect();
        let km = (1..=n).map(|k| s[&GenId::Kminus(k)].transpose()).collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| w.iter().map(|v| v.iter().map(|x| -x).collect()).collect());
        Rep::from_simple(n, simple, kp, km, weights)
    }
}

/// Coproduct images built from a tensor operation `x ⊗ y` and the units of
/// both factors. Weights are left unset.
pub fn coproduct_with<Op: OpAlg>(
    r1: &Rep<Op>,
    r2: &Rep<Op>,
    variant: Coproduct,
    tensor: impl Fn(&Op, &Op) -> Op,
    one1: &Op,
    one2: &Op,
) -> Rep<Op> {
    assert_eq!(r1.n, r2.n, "rank mismatch");
    let n = r1.n;
    let mut simple = BTreeMap::new();
    for i in 1..n {
        let (e1, e2) = (r1.e(i, i + 1), r2.e(i, i + 1));
        let (f1, f2) = (r1.e(i + 1, i), r2.e(i + 1, i));
        let (up, down) = match variant {
            Coproduct::Delta => (
                tensor(e1, &r2.h(i)).add(&tensor(one1, e2)),
                tensor(f1, one2).add(&tensor(&r1.h_inv(i), f2)),
            ),
            Coproduct::DeltaOp => (
                tensor(&r1.h(i), e2).add(&tensor(e1, one2)),
                tensor(one1, f2).add(&tensor(f1, &r2.h_inv(i))),
            ),
            Coproduct::DeltaF => (
                tensor(e1, r2.kp(i)).add(&tensor(r1.km(i), e2)),
                tensor(f1, r2.km(i + 1)).add(&tensor(r1.kp(i + 1), f2)),
            ),
        };
        simple.insert((i, i + 1), up);
        simple.insert((i + 1, i), down);
    }
    let kp = (1..=n).map(|k| tensor(r1.kp(k), r2.kp(k))).collect();
    let km = (1..=n).map(|k| tensor(r1.km(k), r2.km(k))).collect();
    Rep::from_simple(n, simple, kp, km, None)
}

/// Realization in the quantum torus on pairs `offset .. offset + n`.
pub fn torus_rep(n: usize, offset: usize) -> Rep<QTorus> {
    let x = |a: usize, e: i8| QTorus::x(offset + a - 1, e);
    let k = |a: usize, e: i8| QTorus::k(offset + a - 1, e);
    let mut simple = BTreeMap::new();
    for i in 1..n {
        let up = x(i, 1).mul(&x(i + 1, -1)).mul(&k(i + 1, 1).sub(&k(i + 1, -1)));
        let down = x(i + 1, 1).mul(&x(i, -1)).mul(&k(i, 1).sub(&k(i, -1)));
        simple.insert((i, i + 1), up);
        simple.insert((i + 1, i), down);
    }
    let kp = (1..=n).map(|a| k(a, 1)).collect();
    let km = (1..=n).map(|a| k(a, -1)).collect();
    Rep::from_simple(n, simple, kp, km, None)
}

/// Variants of the universal R-matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RKind {
    R,
    RStar,
    RTwisted,
    RStarTwisted,
}

impl RKind {
    pub fn is_twisted(self) -> bool {
        matches!(self, RKind::RTwisted | RKind::RStarTwisted)
    }
    pub fn is_star(self) -> bool {
        matches!(self, RKind::RStar | RKind::RStarTwisted)
    }
}

/// Diagonal operator on `V1 ⊗ V2` with entries `q^{f(w1, w2)}`.
fn cartan_pair(w1: &[Vec<i32>], w2: &[Vec<i32>], f: impl Fn(&[i32], &[i32]) -> i32) -> Mat {
    let exps: Vec<i32> = w1.iter().flat_map(|a| w2.iter().map(|b| f(a, b)).collect::<Vec<_>>()).collect();
    diag_q(&exps)
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Σ_i a_i (b_1 + ... + b_{i - shift})`: exponent of `q^{Σ E_ii ⊗ ω_{i-shift}}`.
fn omega_pairing(a: &[i32], b: &[i32], shift: usize) -> i32 {
    let mut acc = 0;
    let mut partial = 0;
    for i in 0..a.len() {
        if i + 1 > shift {
            partial += b[i - shift];
        }
        acc += a[i] * partial;
    }
    acc
}

/// `F = q^{Σ ω_{i-1} ⊗ E_ii}` on `V1 ⊗ V2`.
pub fn twist_image(r1: &Rep<Mat>, r2: &Rep<Mat>) -> Result<Mat, UqError> {
    let (w1, w2) = (r1.weights().ok_or(UqError::WeightError)?, r2.weights().ok_or(UqError::WeightError)?);
    Ok(cartan_pair(w1, w2, |a, b| omega_pairing(b, a, 1)))
}

/// `q^{c ⊗ c}` on `V1 ⊗ V2`.
pub fn central_image(r1: &Rep<Mat>, r2: &Rep<Mat>) -> Result<Mat, UqError> {
    let (w1, w2) = (r1.weights().ok_or(UqError::WeightError)?, r2.weights().ok_or(UqError::WeightError)?);
    Ok(cartan_pair(w1, w2, |a, b| a.iter().sum::<i32>() * b.iter().sum::<i32>()))
}

/// Image of a universal R-matrix on `V1 ⊗ V2` by its ordered-product formula.
pub fn universal_r(r1: &Rep<Mat>, r2: &Rep<Mat>, kind: RKind) -> Result<Mat, UqError> {
    let (w1, w2) = (r1.weights().ok_or(UqError::WeightError)?, r2.weights().ok_or(UqError::WeightError)?);
    let n = r1.n();
    let max_pow = r1.dim() * r2.dim() + 1;
    let c = inv_qdiff();
    let mut pairs = ordered_pairs(n);
    if kind.is_star() {
        pairs.reverse();
    }
    let mut prod = identity(r1.dim() * r2.dim());
    for (i, j) in pairs {
        let f = if kind.is_star() {
            let x = r1.e(j, i).kron(r2.e(i, j)).scale_by(&c.neg());
            q_exponential(&x, &qpow(2), max_pow)?
        } else {
            let x = r1.e(i, j).kron(r2.e(j, i)).scale_by(&c);
            q_exponential(&x, &qpow(-2), max_pow)?
        };
        prod = prod.mul(&f);
    }
    Ok(match kind {
        RKind::R => cartan_pair(w1, w2, dot).mul(&prod),
        RKind::RStar => prod.mul(&cartan_pair(w1, w2, |a, b| -dot(a, b))),
        RKind::RTwisted => {
            let c = cartan_pair(w1, w2, |a, b| omega_pairing(a, b, 0));
            c.mul(&prod).mul(&c)
        }
        RKind::RStarTwisted => {
            let c = cartan_pair(w1, w2, |a, b| omega_pairing(a, b, 1));
            c.mul(&prod).mul(&c)
        }
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gauge {
    Plain,
    Twisted,
}

/// Lower (`minus`) and upper (`plus`) L-operators with operator entries.
#[derive(Clone, Debug, PartialEq)]
pub struct LPair<Op> {
    pub minus: LabeledMat<Op>,
    pub plus: LabeledMat<Op>,
    pub gauge: Gauge,
}

/// L-operators with entries in the representation `rep`.
pub fn build_l<Op: OpAlg>(rep: &Rep<Op>, gauge: Gauge) -> LPair<Op> {
    let n = rep.n();
    let z = rep.zero();
    let mut minus = LabeledMat::from_fn(n, n, |_, _| z.clone());
    let mut plus = minus.clone();
    for k in 1..=n {
        match gauge {
            Gauge::Plain => {
                minus.set(k - 1, k - 1, rep.km(k).clone());
                plus.set(k - 1, k - 1, rep.kp(k).clone());
            }
            Gauge::Twisted => {
                minus.set(k - 1, k - 1, rep.q_omega(k - 1, 2));
                plus.set(k - 1, k - 1, rep.q_omega(k, 2));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            match gauge {
                Gauge::Plain => {
                    minus.set(j - 1, i - 1, rep.e(i, j).mul(rep.km(i)).neg());
                    plus.set(i - 1, j - 1, rep.kp(i).mul(rep.e(j, i)));
                }
                Gauge::Twisted => {
                    let cm = rep.q_omega(i - 1, 1).mul(&rep.q_omega(j - 1, 1));
                    minus.set(j - 1, i - 1, cm.mul(rep.e(i, j)).neg());
                    let cp = rep.q_omega(i, 1).mul(&rep.q_omega(j, 1));
                    plus.set(i - 1, j - 1, cp.mul(rep.e(j, i)));
                }
            }
        }
    }
    LPair { minus, plus, gauge }
}

/// L-operator read off from the universal R-matrix with the fundamental
/// representation in the first factor.
pub fn l_from_universal(rep: &Rep<Mat>, kind: RKind) -> Result<LabeledMat<Mat>, UqError> {
    let n = rep.n();
    let r = universal_r(&Rep::fundamental(n), rep, kind)?;
    let d = rep.dim();
    Ok(unflatten(&r, d, crate::matrix::labels(n), crate::matrix::labels(n)))
}

/// Closed-form R-matrices on `Vⁿ ⊗ Vⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericR {
    pub plus: Mat,
    pub minus: Mat,
    pub gauge: Gauge,
}

impl NumericR {
    pub fn new(n: usize, gauge: Gauge) -> Self {
        let dim = n * n;
        let mut plus = LabeledMat::zeros_like(dim, dim, &QqFun::one());
        let mut minus = plus.clone();
        let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
        let off = match gauge {
            Gauge::Plain => qdiff(),
            Gauge::Twisted => qpow(2).sub(&int(1)),
        };
        for i in 1..=n {
            for j in 1..=n {
                let (ep, em) = match gauge {
                    Gauge::Plain => ((i == j) as i32, -((i == j) as i32)),
                    Gauge::Twisted => (2 * (i >= j) as i32, 2 * (i > j) as i32),
                };
                plus.set(idx(i, j), idx(i, j), qpow(ep));
                minus.set(idx(i, j), idx(i, j), qpow(em));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                // E_ij ⊗ E_ji maps e_j ⊗ e_i to e_i ⊗ e_j
                plus.set(idx(i, j), idx(j, i), off.clone());
                minus.set(idx(j, i), idx(i, j), off.neg());
            }
        }
        NumericR { plus, minus, gauge }
    }

    pub fn n(&self) -> usize {
        (self.plus.nrows() as f64).sqrt().round() as usize
    }

    /// `x R⁺ - x⁻¹ R⁻`.
    pub fn spectral(&self, x: &QqFun) -> Mat {
        let xi = x.inv().expect("nonzero spectral parameter");
        self.plus.scale_by(x).sub(&self.minus.scale_by(&xi))
    }

    pub fn check_plus(&self) -> Mat {
        permutation_matrix(self.n(), &QqFun::one()).mul(&self.plus)
    }

    pub fn check_minus(&self) -> Mat {
        permutation_matrix(self.n(), &QqFun::one()).mul(&self.minus)
    }

    pub fn check_spectral(&self, x: &QqFun) -> Mat {
        permutation_matrix(self.n(), &QqFun::one()).mul(&self.spectral(x))
    }

    /// `q - q^{-1}` or `q² - 1`.
    pub fn gap(&self) -> QqFun {
        match self.gauge {
            Gauge::Plain => qdiff(),
            Gauge::Twisted => qpow(2).sub(&int(1)),
        }
    }
}

// ---------------------------------------------------------------------------
// verification

pub mod anchors {
    pub const DEFINING: &str = "defining relations";
    pub const SERRE: &str = "Serre relations";
    pub const COMPOSITE: &str = "composite root vectors";
    pub const HOPF: &str = "Hopf structure";
    pub const UR_AXIOMS: &str = "universal R-matrix axioms";
    pub const UR_RELATIONS: &str = "counit and antipode on the universal R-matrix";
    pub const UR_PRODUCT: &str = "ordered product formula";
    pub const R_STAR: &str = "inverse universal R-matrix";
    pub const TWIST: &str = "twist and gauge transformed coproduct";
    pub const QEXP: &str = "q-exponential";
    pub const R_MATRICES: &str = "R-matrices in the fundamental representation";
    pub const YBE: &str = "Yang-Baxter equations";
    pub const FRT: &str = "R-matrix form of the defining relations";
    pub const YBE_SP: &str = "spectral Yang-Baxter equation";
    pub const COPRO_L: &str = "coproduct of L-operators";
    pub const L_OPS: &str = "L-operators";
}

use anchors as A;

/// Defining, Serre and composite-root-vector relations of a representation.
pub fn verify_rep_relations<Op: OpAlg + crate::report::Compare>(rep: &Rep<Op>, label: &str) -> Vec<Check> {
    let n = rep.n();
    let mut out = Vec::new();
    let comm = |a: &Op, b: &Op| a.mul(b).sub(&b.mul(a));
    for k in 1..=n {
        out.push(Check::equal(
            format!("{label}: q^E{k}{k} q^-E{k}{k} = 1"),
            A::DEFINING,
            &rep.kp(k).mul(rep.km(k)),
            &rep.one(),
        ));
        for l in k + 1..=n {
            out.push(Check::equal(
                format!("{label}: Cartan elements {k},{l} commute"),
                A::DEFINING,
                &rep.kp(k).mul(rep.kp(l)),
                &rep.kp(l).mul(rep.kp(k)),
            ));
        }
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let e = (i == k) as i32 - (j == k) as i32;
                out.push(Check::equal(
                    format!("{label}: q^E{k}{k} E{i}{j} q^-E{k}{k}"),
                    A::DEFINING,
                    &rep.kp(k).mul(rep.e(i, j)).mul(rep.km(k)),
                    &rep.e(i, j).scale_by(&qpow(e)),
                ));
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            let lhs = comm(rep.e(i, i + 1), rep.e(j + 1, j));
            let rhs = if i == j {
                rep.h(i).sub(&rep.h_inv(i)).scale_by(&qdiff())
            } else {
                rep.zero()
            };
            out.push(Check::equal(format!("{label}: [E{i},{}, E{},{j}]", i + 1, j + 1), A::DEFINING, &lhs, &rhs));
            if i + 2 <= j {
                out.push(Check::equal(
                    format!("{label}: [E{i},{}, E{j},{}] = 0", i + 1, j + 1),
                    A::DEFINING,
                    &comm(rep.e(i, i + 1), rep.e(j, j + 1)),
                    &rep.zero(),
                ));
                out.push(Check::equal(
                    format!("{label}: [E{},{i}, E{},{j}] = 0", i + 1, j + 1),
                    A::DEFINING,
                    &comm(rep.e(i + 1, i), rep.e(j + 1, j)),
                    &rep.zero(),
                ));
            }
        }
    }
    let qq = qpow(1).add(&qpow(-1));
    let serre = |a: &Op, b: &Op| a.mul(a).mul(b).sub(&a.mul(b).mul(a).scale_by(&qq)).add(&b.mul(a).mul(a));
    for i in 1..n.saturating_sub(1) + 1 {
        if i + 2 > n {
            break;
        }
        let (x, y) = (rep.e(i, i + 1), rep.e(i + 1, i + 2));
        let (u, v) = (rep.e(i + 1, i), rep.e(i + 2, i + 1));
        for (name, a, b) in [("x²y", x, y), ("y²x", y, x), ("u²v", u, v), ("v²u", v, u)] {
            out.push(Check::equal(format!("{label}: Serre {name} at {i}"), A::SERRE, &serre(a, b), &rep.zero()));
        }
    }
    for i in 1..=n {
        for j in i + 2..=n {
            for k in i + 1..j {
                out.push(Check::equal(
                    format!("{label}: E{i}{j} via {k}"),
                    A::COMPOSITE,
                    &rep.root_vector_via(i, j, k),
                    rep.e(i, j),
                ));
                out.push(Check::equal(
                    format!("{label}: E{j}{i} via {k}"),
                    A::COMPOSITE,
                    &rep.root_vector_via(j, i, k),
                    rep.e(j, i),
                ));
            }
        }
    }
    out
}

fn embed3(m: &Mat, d: [usize; 3], pos: [usize; 2]) -> Mat {
    embed(m, &d, &pos)
}

/// Swapped operator `X_21` on `V1 ⊗ V2` from `X` on `V2 ⊗ V1`.
fn swap_legs(x: &Mat, d2: usize, d1: usize) -> Mat {
    let s = swap_matrix(d2, d1, &QqFun::one());
    let t = swap_matrix(d1, d2, &QqFun::one());
    s.mul(x).mul(&t)
}

fn try_checks(name: &str, anchor: &str, f: impl FnOnce() -> Result<Vec<Check>, UqError>) -> Vec<Check> {
    f().unwrap_or_else(|e| vec![Check::fail(name, anchor, serde_json::json!({ "error": e.to_string() }))])
}

/// Universal R-matrix axioms, counit/antipode relations and the twist, on
/// fundamental-built representations.
pub fn verify_ur_axioms(n: usize) -> Vec<Check> {
    let pi = Rep::fundamental(n);
    let d = pi.dim();
    let mut out = Vec::new();
    let kinds = [RKind::R, RKind::RStar, RKind::RTwisted, RKind::RStarTwisted];
    for kind in kinds {
        let cop = if kind.is_twisted() { Coproduct::DeltaF } else { Coproduct::Delta };
        out.extend(try_checks(&format!("n={n} {kind:?} axioms"), A::UR_AXIOMS, || {
            let mut out = Vec::new();
            let r = universal_r(&pi, &pi, kind)?;
            let pair = Rep::coproduct(&pi, &pi, cop);
            let p = permutation_matrix(n, &QqFun::one());
            for g in pair.generators() {
                let delta = pair.gen(g);
                let opp = p.mul(delta).mul(&p);
                out.push(Check::equal(
                    format!("n={n} {kind:?}: opposite coproduct intertwining for {g:?}"),
                    A::UR_AXIOMS,
                    &opp.mul(&r),
                    &r.mul(delta),
                ));
            }
            let dims = [d, d, d];
            let lhs = universal_r(&pair, &pi, kind)?;
            let rhs = embed3(&r, dims, [0, 2]).mul(&embed3(&r, dims, [1, 2]));
            out.push(Check::equal(format!("n={n} {kind:?}: (Δ⊗1)R = R13 R23"), A::UR_AXIOMS, &lhs, &rhs));
            let lhs = universal_r(&pi, &pair, kind)?;
            let rhs = embed3(&r, dims, [0, 2]).mul(&embed3(&r, dims, [0, 1]));
            out.push(Check::equal(format!("n={n} {kind:?}: (1⊗Δ)R = R13 R12"), A::UR_AXIOMS, &lhs, &rhs));
            let triv = Rep::trivial(n);
            out.push(Check::equal(
                format!("n={n} {kind:?}: (ε⊗1)R = 1"),
                A::UR_RELATIONS,
                &universal_r(&triv, &pi, kind)?,
                &identity(d),
            ));
            out.push(Check::equal(
                format!("n={n} {kind:?}: (1⊗ε)R = 1"),
                A::UR_RELATIONS,
                &universal_r(&pi, &triv, kind)?,
                &identity(d),
            ));
            Ok(out)
        }));
    }
    out.extend(try_checks(&format!("n={n} antipode relations"), A::UR_RELATIONS, || {
        let mut out = Vec::new();
        let rho = pi.dual();
        for kind in [RKind::R, RKind::RStar] {
            let r = universal_r(&pi, &pi, kind)?;
            let rinv = crate::matrix::field_inverse(&r).map_err(|_| UqError::WeightError)?;
            let s1 = partial_transpose(&universal_r(&rho, &pi, kind)?, &[d, d], 0);
            out.push(Check::equal(format!("n={n} {kind:?}: (S⊗1)R = R⁻¹"), A::UR_RELATIONS, &s1, &rinv));
            let ss = universal_r(&rho, &rho, kind)?.transpose();
            out.push(Check::equal(format!("n={n} {kind:?}: (S⊗S)R = R"), A::UR_RELATIONS, &ss, &r));
        }
        Ok(out)
    }));
    out.extend(try_checks(&format!("n={n} inverse R"), A::R_STAR, || {
        let mut out = Vec::new();
        let r = universal_r(&pi, &pi, RKind::R)?;
        let rstar = universal_r(&pi, &pi, RKind::RStar)?;
        let r21 = swap_legs(&r, d, d);
        let r21inv = crate::matrix::field_inverse(&r21).map_err(|_| UqError::WeightError)?;
        out.push(Check::equal(format!("n={n}: R*12 = R21⁻¹"), A::R_STAR, &rstar, &r21inv));
        let rt = universal_r(&pi, &pi, RKind::RTwisted)?;
        let rst = universal_r(&pi, &pi, RKind::RStarTwisted)?;
        let cc = central_image(&pi, &pi)?;
        out.push(Check::equal(
            format!("n={n}: twisted R* R21 = q^(2c⊗c)"),
            A::R_STAR,
            &rst.mul(&swap_legs(&rt, d, d)),
            &cc.mul(&cc),
        ));
        Ok(out)
    }));
    out.extend(verify_twist(n));
    out.extend(verify_hopf(n));
    out
}

/// The twisted universal R-matrices agree with the twist conjugation of the
/// plain ones, and `Δ^F = F Δ F⁻¹` on generators.
pub fn verify_twist(n: usize) -> Vec<Check> {
    try_checks(&format!("n={n} twist"), A::TWIST, || {
        let pi = Rep::fundamental(n);
        let pair = Rep::coproduct(&pi, &pi, Coproduct::Delta);
        let mut out = Vec::new();
        for (r1, r2, what) in [(&pi, &pi, "V⊗V"), (&pi, &pair, "V⊗(V⊗V)"), (&pair, &pi, "(V⊗V)⊗V")] {
            let (d1, d2) = (r1.dim(), r2.dim());
            let f12 = twist_image(r1, r2)?;
            let f21 = swap_legs(&twist_image(r2, r1)?, d2, d1);
            let f12inv = crate::matrix::field_inverse(&f12).map_err(|_| UqError::WeightError)?;
            let cc = central_image(r1, r2)?;
            for (plain, twisted) in [(RKind::R, RKind::RTwisted), (RKind::RStar, RKind::RStarTwisted)] {
                let conj = f21.mul(&universal_r(r1, r2, plain)?).mul(&f12inv).mul(&cc);
                out.push(Check::equal(
                    format!("n={n} {what}: {twisted:?} = F21 {plain:?} F12⁻¹ q^(c⊗c)"),
                    A::TWIST,
                    &universal_r(r1, r2, twisted)?,
                    &conj,
                ));
            }
        }
        let f = twist_image(&pi, &pi)?;
        let finv = crate::matrix::field_inverse(&f).map_err(|_| UqError::WeightError)?;
        let pf = Rep::coproduct(&pi, &pi, Coproduct::DeltaF);
        for g in pair.generators() {
            out.push(Check::equal(
                format!("n={n}: Δ^F = F Δ F⁻¹ on {g:?}"),
                A::TWIST,
                pf.gen(g),
                &f.mul(pair.gen(g)).mul(&finv),
            ));
        }
        let d = pi.dim();
        let dims = [d, d, d];
        let triple_lhs = embed3(&f, dims, [0, 1]).mul(&embed3(&f, dims, [0, 2])).mul(&embed3(&f, dims, [1, 2]));
        let triple_rhs = embed3(&f, dims, [1, 2]).mul(&embed3(&f, dims, [0, 2])).mul(&embed3(&f, dims, [0, 1]));
        out.push(Check::equal(format!("n={n}: F12 F13 F23 = F23 F13 F12"), A::TWIST, &triple_lhs, &triple_rhs));
        out.push(Check::equal(
            format!("n={n}: (Δ⊗1)F = F13 F23"),
            A::TWIST,
            &twist_image(&pair, &pi)?,
            &embed3(&f, dims, [0, 2]).mul(&embed3(&f, dims, [1, 2])),
        ));
        out.push(Check::equal(
            format!("n={n}: (1⊗Δ)F = F13 F12"),
            A::TWIST,
            &twist_image(&pi, &pair)?,
            &embed3(&f, dims, [0, 2]).mul(&embed3(&f, dims, [0, 1])),
        ));
        Ok(out)
    })
}

/// Antipode and counit compatibilities on generator images.
pub fn verify_hopf(n: usize) -> Vec<Check> {
    let pi = Rep::fundamental(n);
    let mut out = Vec::new();
    let s = pi.antipode_images();
    let pair = Rep::coproduct(&pi, &pi, Coproduct::Delta);
    let opp = Rep::coproduct(&pi, &pi, Coproduct::DeltaOp);
    let p = permutation_matrix(n, &QqFun::one());
    for g in pair.generators() {
        out.push(Check::equal(
            format!("n={n}: Δ' = σ∘Δ on {g:?}"),
            A::HOPF,
            opp.gen(g),
            &p.mul(pair.gen(g)).mul(&p),
        ));
    }
    let k = |a: &Mat, b: &Mat| a.kron(b);
    let i = identity(pi.dim());
    for a in 1..n {
        let (e, f) = (pi.e(a, a + 1), pi.e(a + 1, a));
        let (h, hi) = (pi.h(a), pi.h_inv(a));
        let (se, sf) = (&s[&GenId::E(a, a + 1)], &s[&GenId::E(a + 1, a)]);
        // (S⊗S)Δ(E) and Δ'(S(E))
        let lhs = k(se, &hi).add(&k(&i, se));
        let rhs = k(&h, e).add(&k(e, &i)).mul(&k(&hi, &hi)).neg();
        out.push(Check::equal(format!("n={n}: (S⊗S)Δ = Δ'S on E{a},{}", a + 1), A::HOPF, &lhs, &rhs));
        let lhs = k(sf, &i).add(&k(&h, sf));
        let rhs = k(&h, &h).mul(&k(&i, f).add(&k(f, &hi))).neg();
        out.push(Check::equal(format!("n={n}: (S⊗S)Δ = Δ'S on E{},{a}", a + 1), A::HOPF, &lhs, &rhs));
        out.push(Check::equal(format!("n={n}: Δ(H{a}) = H{a}⊗H{a}"), A::HOPF, &pair.h(a), &k(&h, &h)));
        out.push(Check::equal(format!("n={n}: S(H{a}) = H{a}⁻¹"), A::HOPF, &s[&GenId::Kplus(a)].mul(&s[&GenId::Kminus(a + 1)]), &hi));
        let eh = counit(GenId::Kplus(a)).mul(&counit(GenId::Kminus(a + 1)));
        out.push(Check::equal(format!("n={n}: ε(H{a}) = 1"), A::HOPF, &eh, &QqFun::one()));
    }
    for kk in 1..=n {
        out.push(Check::equal(format!("n={n}: S(q^E{kk}{kk}) = q^-E{kk}{kk}"), A::HOPF, &s[&GenId::Kplus(kk)], pi.km(kk)));
    }
    // the antipode is an anti-homomorphism: the dual representation satisfies the relations
    out.extend(verify_rep_relations(&pi.dual(), &format!("n={n} dual")));
    out
}

/// Ordered-product images against the closed-form R-matrices.
pub fn verify_r_matrices(n: usize) -> Vec<Check> {
    let pi = Rep::fundamental(n);
    let mut out = Vec::new();
    let plain = NumericR::new(n, Gauge::Plain);
    let block = NumericR::new(n, Gauge::Twisted);
    for (kind, expect) in [
        (RKind::R, &plain.plus),
        (RKind::RStar, &plain.minus),
        (RKind::RTwisted, &block.plus),
        (RKind::RStarTwisted, &block.minus),
    ] {
        out.extend(try_checks(&format!("n={n} {kind:?} image"), A::R_MATRICES, || {
            Ok(vec![Check::equal(
                format!("n={n}: (π⊗π) {kind:?} closed form"),
                A::R_MATRICES,
                &universal_r(&pi, &pi, kind)?,
                expect,
            )])
        }));
    }
    let p = permutation_matrix(n, &QqFun::one());
    for nr in [&plain, &block] {
        let g = nr.gap();
        out.push(Check::equal(
            format!("n={n} {:?}: R(1) = gap·P", nr.gauge),
            A::R_MATRICES,
            &nr.spectral(&QqFun::one()),
            &p.scale_by(&g),
        ));
        out.push(Check::equal(
            format!("n={n} {:?}: Ř⁺ - Ř⁻ = gap·1", nr.gauge),
            A::R_MATRICES,
            &nr.check_plus().sub(&nr.check_minus()),
            &identity(n * n).scale_by(&g),
        ));
    }
    for gauge in [Gauge::Plain, Gauge::Twisted] {
        let (kp, km) = match gauge {
            Gauge::Plain => (RKind::R, RKind::RStar),
            Gauge::Twisted => (RKind::RTwisted, RKind::RStarTwisted),
        };
        let l = build_l(&pi, gauge);
        out.extend(try_checks(&format!("n={n} {gauge:?} L from R"), A::L_OPS, || {
            Ok(vec![
                Check::equal(format!("n={n} {gauge:?}: L⁺ = (π⊗1)R"), A::L_OPS, &l.plus, &l_from_universal(&pi, kp)?),
                Check::equal(format!("n={n} {gauge:?}: L⁻ = (π⊗1)R*"), A::L_OPS, &l.minus, &l_from_universal(&pi, km)?),
            ])
        }));
    }
    out
}

/// The universal and mixed Yang-Baxter equations on `V⊗V⊗V`.
pub fn verify_ybe(n: usize, gauge: Gauge) -> Vec<Check> {
    try_checks(&format!("n={n} {gauge:?} YBE"), A::YBE, || {
        let pi = Rep::fundamental(n);
        let d = pi.dim();
        let dims = [d, d, d];
        let (kr, ks) = match gauge {
            Gauge::Plain => (RKind::R, RKind::RStar),
            Gauge::Twisted => (RKind::RTwisted, RKind::RStarTwisted),
        };
        let r = universal_r(&pi, &pi, kr)?;
        let s = universal_r(&pi, &pi, ks)?;
        let at = |m: &Mat, p: [usize; 2]| embed3(m, dims, p);
        let eqs: [(&str, &Mat, &Mat, &Mat); 6] = [
            ("R R R", &r, &r, &r),
            ("R R R*", &r, &r, &s),
            ("R* R R", &s, &r, &r),
            ("R* R* R", &s, &s, &r),
            ("R R* R*", &r, &s, &s),
            ("R* R* R*", &s, &s, &s),
        ];
        let mut out = Vec::new();
        for (name, a, b, c) in eqs {
            let (a12, b13, c23) = (at(a, [0, 1]), at(b, [0, 2]), at(c, [1, 2]));
            out.push(Check::equal(
                format!("n={n} {gauge:?}: {name} (12,13,23)"),
                A::YBE,
                &a12.mul(&b13).mul(&c23),
                &c23.mul(&b13).mul(&a12),
            ));
        }
        Ok(out)
    })
}

fn l_full(l: &LabeledMat<Mat>) -> Mat {
    flatten(l)
}

/// FRT relations, the spectral Yang-Baxter equation and the coproduct of
/// L-operators with quantum space `quantum`.
pub fn verify_frt(quantum: &Rep<Mat>, gauge: Gauge) -> Vec<Check> {
    let n = quantum.n();
    let d = quantum.dim();
    let dims = [n, n, d];
    let nr = NumericR::new(n, gauge);
    let l = build_l(quantum, gauge);
    let (lm, lp) = (l_full(&l.minus), l_full(&l.plus));
    let at = |m: &Mat, p: [usize; 2]| embed3(m, dims, p);
    let (rcp, rcm) = (at(&nr.check_plus(), [0, 1]), at(&nr.check_minus(), [0, 1]));
    let (m13, m23, p13, p23) = (at(&lm, [0, 2]), at(&lm, [1, 2]), at(&lp, [0, 2]), at(&lp, [1, 2]));
    let tag = format!("n={n} d={d} {gauge:?}");
    let mut out = Vec::new();
    let mut eq = |name: &str, lhs: Mat, rhs: Mat| out.push(Check::equal(format!("{tag}: {name}"), A::FRT, &lhs, &rhs));
    for (s, r) in [("+", &rcp), ("-", &rcm)] {
        eq(&format!("Ř{s} L⁻ L⁻"), r.mul(&m13).mul(&m23), m13.mul(&m23).mul(r));
        eq(&format!("Ř{s} L⁺ L⁺"), r.mul(&p13).mul(&p23), p13.mul(&p23).mul(r));
    }
    eq("Ř⁻ L⁻ L⁺", rcm.mul(&m13).mul(&p23), p13.mul(&m23).mul(&rcm));
    eq("Ř⁺ L⁺ L⁻", rcp.mul(&p13).mul(&m23), m13.mul(&p23).mul(&rcp));
    // spectral form
    let (la, mu_) = (lambda(), mu());
    let lsp = |x: &QqFun| lp.scale_by(x).sub(&lm.scale_by(&x.inv().expect("nonzero")));
    let ratio = la.div(&mu_).expect("nonzero");
    let rc = at(&nr.check_spectral(&ratio), [0, 1]);
    let (ll, lmu) = (lsp(&la), lsp(&mu_));
    let lhs = rc.mul(&at(&ll, [0, 2])).mul(&at(&lmu, [1, 2]));
    let rhs = at(&lmu, [0, 2]).mul(&at(&ll, [1, 2])).mul(&rc);
    out.push(Check::equal(format!("{tag}: Ř(λ/μ) L13(λ) L23(μ) = L13(μ) L23(λ) Ř(λ/μ)"), A::YBE_SP, &lhs, &rhs));
    // coproduct of L
    let cop = match gauge {
        Gauge::Plain => Coproduct::Delta,
        Gauge::Twisted => Coproduct::DeltaF,
    };
    let pair = Rep::coproduct(quantum, quantum, cop);
    let lpair = build_l(&pair, gauge);
    let cd = [n, d, d];
    for (name, whole, part) in [("L⁺", &lpair.plus, &lp), ("L⁻", &lpair.minus, &lm)] {
        let rhs = embed(part, &cd, &[0, 2]).mul(&embed(part, &cd, &[0, 1]));
        out.push(Check::equal(format!("{tag}: (1⊗Δ){name} = {name}13 {name}12"), A::COPRO_L, &l_full(whole), &rhs));
    }
    out
}

/// q-exponential inverse relation on nilpotent fundamental images.
pub fn verify_qexp(n: usize) -> Vec<Check> {
    let pi = Rep::fundamental(n);
    let mut out = Vec::new();
    for (i, j) in ordered_pairs(n) {
        let x = pi.e(i, j).kron(pi.e(j, i));
        let res = q_exponential(&x, &qpow(-2), 8).and_then(|a| Ok((a, q_exponential(&x.neg(), &qpow(2), 8)?)));
        match res {
            Ok((a, b)) => out.push(Check::equal(
                format!("n={n}: exp_(q^-2)(X) exp_(q^2)(-X) = 1 for E{i}{j}⊗E{j}{i}"),
                A::QEXP,
                &a.mul(&b),
                &identity(x.nrows()),
            )),
            Err(e) => out.push(Check::fail(format!("n={n}: q-exponential E{i}{j}"), A::QEXP, serde_json::json!({"error": e.to_string()}))),
        }
    }
    out
}

/// Every uq-rep check for rank `n`.
pub fn verify_all(n: usize) -> Vec<Check> {
    let pi = Rep::fundamental(n);
    let mut out = verify_rep_relations(&pi, &format!("n={n} fundamental"));
    out.extend(verify_rep_relations(
        &Rep::coproduct(&pi, &pi, Coproduct::Delta),
        &format!("n={n} Δ(V⊗V)"),
    ));
    out.extend(verify_rep_relations(
        &Rep::coproduct(&pi, &pi, Coproduct::DeltaF),
        &format!("n={n} Δ^F(V⊗V)"),
    ));
    out.extend(verify_qexp(n));
    out.extend(verify_hopf(n));
    out.extend(verify_twist(n));
    out.extend(verify_r_matrices(n));
    out.extend(verify_ur_axioms(n));
    for g in [Gauge::Plain, Gauge::Twisted] {
        out.extend(verify_ybe(n, g));
        out.extend(verify_frt(&pi, g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_composite_is_scaled_unit() {
        let pi = Rep::fundamental(3);
        assert_eq!(pi.e(1, 3), &unit(3, 1, 3).scale_by(&qdiff()));
        assert_eq!(pi.e(3, 1), &unit(3, 3, 1).scale_by(&qdiff()));
    }

    #[test]
    fn order_of_pairs() {
        assert_eq!(ordered_pairs(3), vec![(2, 3), (1, 3), (1, 2)]);
    }

    #[test]
    fn qexp_nilpotency() {
        let x = unit(2, 1, 2);
        assert_eq!(q_exponential(&x, &qpow(2), 4).unwrap(), identity(2).add(&x));
        assert_eq!(q_exponential(&identity(2), &qpow(2), 4), Err(UqError::NotNilpotent(4)));
    }

    #[test]
    fn plain_r_matches_closed_form_n2() {
        let pi = Rep::fundamental(2);
        let r = universal_r(&pi, &pi, RKind::R).unwrap();
        let z = QqFun::zero();
        let expect = LabeledMat::from_rows(vec![
            vec![qpow(1), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), int(1), qdiff(), z.clone()],
            vec![z.clone(), z.clone(), int(1), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), qpow(1)],
        ]);
        assert_eq!(r, expect);
    }

    #[test]
    fn rep_relations_hold() {
        for n in [2, 3, 4] {
            let checks = verify_rep_relations(&Rep::fundamental(n), "fund");
            assert!(checks.iter().all(Check::is_pass), "{:?}", checks.iter().find(|c| !c.is_pass()));
        }
    }

    #[test]
    fn torus_relations_hold() {
        let t = crate::uqrep::torus_rep(3, 0);
        let checks = verify_rep_relations(&t, "torus");
        assert!(checks.iter().all(Check::is_pass), "{:?}", checks.iter().find(|c| !c.is_pass()));
    }

    #[test]
    fn ur_axioms_n2() {
        let checks = verify_ur_axioms(2);
        assert!(checks.iter().all(Check::is_pass), "{:?}", checks.iter().find(|c| !c.is_pass()));
    }

    #[test]
    fn r_matrices_and_frt_n2() {
        let mut checks = verify_r_matrices(2);
        checks.extend(verify_frt(&Rep::fundamental(2), Gauge::Plain));
        checks.extend(verify_frt(&Rep::fundamental(2), Gauge::Twisted));
        checks.extend(verify_ybe(2, Gauge::Twisted));
        assert!(checks.iter().all(Check::is_pass), "{:?}", checks.iter().find(|c| !c.is_pass()));
    }
}
