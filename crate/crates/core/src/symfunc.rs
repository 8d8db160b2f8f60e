//! Exact evaluation of Schur, skew Schur and supersymmetric Schur functions
//! at rational points, plus the closed-form `gl(k)` dimensions and
//! `gl(m|n)` superdimensions.
//!
//! Evaluation goes through the Jacobi–Trudi determinant in complete
//! homogeneous symmetric functions, which is valid at any point including
//! repeated coordinates. When every `h_r` value is an integer (all-ones and
//! all-minus-ones points in particular) the determinant is taken over the
//! integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::Partition;

pub type Rational = BigRational;

/// A point `x = (x_1, ..., x_k)` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    /// `count` copies of `value`.
    pub fn uniform(value: i64, count: usize) -> Self {
        RationalPoint(vec![Rational::from_integer(value.into()); count])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        RationalPoint(self.0.iter().map(|x| x * c).collect())
    }

    pub fn extended(&self, c: Rational) -> Self {
        let mut v = self.0.clone();
        v.push(c);
        RationalPoint(v)
    }
}

/// `dim V^λ_{gl(k)}` by the hook-content formula; zero when `ℓ(λ) > k`.
pub fn gl_dim(lambda: &Partition, k: usize) -> BigInt {
    if lambda.length() > k {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= BigInt::from(k as i64 + j as i64 - i as i64);
        den *= BigInt::from(lambda.hook_length(&conj, i, j));
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Superdimension of the covariant `gl(m|n)` module labelled by `λ`.
///
/// `m = n`: 1 for the zero partition, 0 otherwise. `m = n + k`:
/// `dim V^λ_{gl(k)}`. `n = m + k`: `(-1)^{|λ|} dim V^{λ'}_{gl(k)}`.
pub fn gl_superdim(lambda: &Partition, m: usize, n: usize) -> BigInt {
    use std::cmp::Ordering::*;
    match m.cmp(&n) {
        Equal => {
            if lambda.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Greater => gl_dim(lambda, m - n),
        Less => {
            let d = gl_dim(&lambda.conjugate(), n - m);
            if lambda.weight() % 2 == 1 {
                -d
            } else {
                d
            }
        }
    }
}

/// Dimension of the covariant `gl(m|n)` module; zero outside the hook.
pub fn gl_mn_dim(lambda: &Partition, m: usize, n: usize) -> BigInt {
    let v = super_schur_eval(lambda, &RationalPoint::uniform(1, m), &RationalPoint::uniform(1, n));
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// `h_0, ..., h_upto` evaluated at `x`.
pub fn complete_homogeneous(x: &RationalPoint, upto: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); upto + 1];
    h[0] = Rational::one();
    if let Some(first) = x.0.first() {
        if x.0.iter().all(|c| c == first) {
            // h_r(c, ..., c) = c^r * binom(k + r - 1, r)
            let k = x.len() as u64;
            let mut binom = BigInt::one();
            let mut power = Rational::one();
            for (r, slot) in h.iter_mut().enumerate().skip(1) {
                let r = r as u64;
                binom = binom * BigInt::from(k + r - 1) / BigInt::from(r);
                power *= first;
                *slot = &power * Rational::from_integer(binom.clone());
            }
            return h;
        }
    }
    for xi in &x.0 {
        for r in 1..=upto {
            let add = &h[r - 1] * xi;
            h[r] += add;
        }
    }
    h
}

fn h_at(h: &[Rational], r: i64) -> Rational {
    if r < 0 {
        Rational::zero()
    } else {
        h[r as usize].clone()
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Exact over any integral domain, so it serves both `BigInt` and
/// `BigRational` entries.
pub(crate) fn bareiss_det<T>(mut a: Vec<Vec<T>>) -> T
where
    T: Clone + Zero + One + PartialEq + std::ops::Neg<Output = T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>
        + std::ops::Sub<&'x T, Output = T>
        + std::ops::Div<&'x T, Output = T>,
{
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `det[h_{λ_i - μ_j - i + j}]` over the rows of `λ`.
fn jacobi_trudi(h: &[Rational], lambda: &Partition, mu: &Partition) -> Rational {
    let l = lambda.length();
    let entry = |i: usize, j: usize| -> Rational {
        h_at(
            h,
            lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64,
        )
    };
    let matrix: Vec<Vec<Rational>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    if matrix.iter().flatten().all(|v| v.is_integer()) {
        let ints = matrix
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.to_integer()).collect())
            .collect();
        Rational::from_integer(bareiss_det::<BigInt>(ints))
    } else {
        bareiss_det(matrix)
    }
}

/// `s_λ(x)`.
pub fn schur_eval(lambda: &Partition, x: &RationalPoint) -> Rational {
    if lambda.length() > x.len() {
        return Rational::zero();
    }
    let h = complete_homogeneous(x, lambda.largest_part() as usize + lambda.length());
    jacobi_trudi(&h, lambda, &Partition::empty())
}

/// `s_{λ/μ}(x)`; zero unless `μ ⊆ λ`.
pub fn skew_schur_eval(lambda: &Partition, mu: &Partition, x: &RationalPoint) -> Rational {
    if !lambda.contains(mu) {
        return Rational::zero();
    }
    let h = complete_homogeneous(x, lambda.largest_part() as usize + lambda.length());
    jacobi_trudi(&h, lambda, mu)
}

/// Supersymmetric Schur function `s_λ(x|y) = Σ_{μ ⊆ λ} s_μ(x) s_{λ'/μ'}(y)`.
///
/// With this convention `s_(1)(x|y) = Σx + Σy`, the value is unchanged when
/// `x` is extended by `c` and `y` by `-c`, and `s_λ(1^m | (-1)^n)` is the
/// `gl(m|n)` superdimension.
pub fn super_schur_eval(lambda: &Partition, x: &RationalPoint, y: &RationalPoint) -> Rational {
    if !lambda.in_hook(x.len(), y.len() as u32) {
        return Rational::zero();
    }
    let conj = lambda.conjugate();
    let span = lambda.largest_part() as usize + lambda.length();
    let hx = complete_homogeneous(x, span);
    let hy = complete_homogeneous(y, span);
    let mut total = Rational::zero();
    for mu in sub_partitions(lambda) {
        if mu.length() > x.len() {
            continue;
        }
        let sx = jacobi_trudi(&hx, &mu, &Partition::empty());
        if sx.is_zero() {
            continue;
        }
        let sy = jacobi_trudi(&hy, &conj, &mu.conjugate());
        total += sx * sy;
    }
    total
}

/// All `μ ⊆ λ`.
pub fn sub_partitions(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_unsorted(cur.clone()));
        if row >= lambda.length() {
            return;
        }
        for v in 1..=cap.min(lambda.part(row)) {
            cur.push(v);
            go(lambda, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, lambda.largest_part(), &mut Vec::new(), &mut out);
    out
}

/// Bialternant `det(x_i^{λ_j + k - j}) / det(x_i^{k - j})`; `None` when the
/// coordinates are not pairwise distinct.
pub fn schur_eval_bialternant(lambda: &Partition, x: &RationalPoint) -> Option<Rational> {
    let k = x.len();
    if lambda.length() > k {
        return Some(Rational::zero());
    }
    let alt = |exps: &[u32]| -> Rational {
        let m = x
            .0
            .iter()
            .map(|xi| exps.iter().map(|&e| num_traits::pow(xi.clone(), e as usize)).collect())
            .collect();
        bareiss_det(m)
    };
    let delta: Vec<u32> = (0..k).map(|j| (k - 1 - j) as u32).collect();
    let shifted: Vec<u32> = (0..k).map(|j| lambda.part(j) + delta[j]).collect();
    let den = alt(&delta);
    if den.is_zero() {
        return None;
    }
    Some(alt(&shifted) / den)
}
