use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::freudenthal::WeightMultiplicityTable;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exponent vector → coefficient.
pub type MonomialMap = BTreeMap<Vec<u32>, BigInt>;

/// Monomial expansion of `s_λ(x_1, …, x_k)`: the coefficient of `x^e` is the
/// number of semistandard tableaux of shape `λ` and content `e`.
pub fn schur_monomials(lambda: &Partition, k: usize) -> MonomialMap {
    let mut memo = HashMap::new();
    monomials_rec(lambda, k, &mut memo)
}

// peel off the cells holding the largest entry k: a horizontal strip
fn monomials_rec(
    lambda: &Partition,
    k: usize,
    memo: &mut HashMap<(Partition, usize), MonomialMap>,
) -> MonomialMap {
    if let Some(m) = memo.get(&(lambda.clone(), k)) {
        return m.clone();
    }
    let mut out = MonomialMap::new();
    if k == 0 {
        if lambda.is_empty() {
            out.insert(Vec::new(), BigInt::from(1));
        }
    } else if lambda.length() <= k {
        for inner in strips_below(lambda) {
            if inner.length() > k - 1 {
                continue;
            }
            let strip = lambda.weight() - inner.weight();
            for (mut e, c) in monomials_rec(&inner, k - 1, memo) {
                e.push(strip);
                *out.entry(e).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    memo.insert((lambda.clone(), k), out.clone());
    out
}

/// All `μ` with `λ / μ` a horizontal strip: `λ_{i+1} <= μ_i <= λ_i`.
fn strips_below(lambda: &Partition) -> Vec<Partition> {
    let l = lambda.length();
    let mut out = vec![Vec::with_capacity(l)];
    for i in 0..l {
        let (lo, hi) = (lambda.part(i + 1), lambda.part(i));
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Partition::from_unsorted).collect()
}

/// Distinct permutations of `v`.
fn permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    while let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) {
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Shifts every weight by `shift` in each coordinate and expands the
/// resulting symmetric polynomial in `k` variables in the Schur basis.
///
/// The dominance-maximal remaining exponent vector is always the lex-largest
/// key, so peeling `coeff · s_λ` off repeatedly terminates.
pub fn schur_expand(
    table: &WeightMultiplicityTable,
    shift: &BigRational,
    k: usize,
) -> Result<Vec<(Partition, BigInt)>> {
    let doubled_shift = shift * BigRational::from_integer(BigInt::from(2));
    if !doubled_shift.is_integer() {
        return Err(Error::NonIntegralShift(shift.to_string()));
    }
    let s = i64::try_from(doubled_shift.to_integer()).map_err(|_| Error::NonIntegralShift(shift.to_string()))?;

    let mut poly = MonomialMap::new();
    for (w, &m) in &table.multiplicities {
        if w.rank() != k {
            return Err(Error::InvalidRank(format!("table rank {} but k = {k}", w.rank())));
        }
        let mut e = Vec::with_capacity(k);
        for &d in &w.0 {
            let v = d + s;
            if v % 2 != 0 {
                return Err(Error::NonIntegralShift(shift.to_string()));
            }
            if v < 0 {
                return Err(Error::NegativeExponent(w.to_string()));
            }
            e.push((v / 2) as u32);
        }
        *poly.entry(e).or_insert_with(BigInt::zero) += m;
    }

    for (e, c) in &poly {
        for perm in permutations(e) {
            if poly.get(&perm) != Some(c) {
                return Err(Error::NonSymmetric(format!("{e:?} vs {perm:?}")));
            }
        }
    }

    let mut result = Vec::new();
    while let Some((top, c)) = poly.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let lambda = Partition::new(top.clone()).expect("lex-max key of a symmetric polynomial is a partition");
        for (e, m) in schur_monomials(&lambda, k) {
            let entry = poly.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * m;
            if entry.is_zero() {
                poly.remove(&e);
            }
        }
        result.push((lambda, c));
    }
    result.sort_by(|a, b| crate::character::graded_cmp(&a.0, &b.0));
    Ok(result)
}
