//! Independent `so(2k)` / `so(2k+1)` character data.
//!
//! Weight multiplicities come from the Freudenthal recursion, and the
//! shifted character polynomial is expanded in the Schur basis by
//! triangular elimination. Nothing here reads the label rules of
//! [`crate::character`]; they are only compared against at the end.

mod expand;
mod freudenthal;
mod roots;

pub use expand::{schur_expand, schur_monomials, MonomialMap};
pub use freudenthal::{freudenthal_table, weyl_dim, WeightMultiplicityTable};
pub use roots::{RootSystemData, Series, Weight};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::character::{char_osp_even, char_so_even_fork, char_so_odd, first_label_mismatch, Algebra, DynkinLabels};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::report::{Params, VerificationReport};

/// Highest weight in ε-coordinates for a rectangle label `[0,…,0,p]` of
/// `B_k` or a fork label `[0,…,0,r,p−r]` of `D_k`.
pub fn dynkin_to_epsilon(labels: &DynkinLabels) -> Result<(Series, Weight)> {
    let k = labels.rank();
    match labels.algebra {
        Algebra::B => {
            let p = labels.rectangle_p().unwrap_or(0) as i64;
            Ok((Series::B, Weight(vec![p; k])))
        }
        Algebra::D => {
            let (r, p) = labels.fork_params().expect("D labels carry fork parameters");
            let mut doubled = vec![p as i64; k];
            doubled[k - 1] = p as i64 - 2 * r as i64;
            Ok((Series::D, Weight(doubled)))
        }
        other => Err(Error::InvalidLabels(format!("{other:?} has no classical oracle"))),
    }
}

/// Freudenthal table of the module, then its Schur expansion after the
/// shift `p/2`.
pub fn oracle_expansion(labels: &DynkinLabels, p: u32) -> Result<Vec<(Partition, BigInt)>> {
    let (series, hw) = dynkin_to_epsilon(labels)?;
    let k = labels.rank();
    let table = freudenthal_table(series, k, &hw)?;
    schur_expand(&table, &BigRational::new(BigInt::from(p), BigInt::from(2)), k)
}

fn compare(
    identity: &str,
    params: Params,
    oracle: Vec<(Partition, BigInt)>,
    expected: impl Iterator<Item = Partition>,
) -> VerificationReport {
    let lhs: BTreeMap<Partition, BigInt> = oracle.into_iter().collect();
    let rhs: BTreeMap<Partition, BigInt> = expected.map(|l| (l, BigInt::from(1))).collect();
    VerificationReport::new(identity, params, first_label_mismatch(&lhs, &rhs))
}

/// Checks the `B_r` / `B_{p−r}` label rule for the `so(2k)` fork module
/// `[0,…,0,r,p−r]` against the oracle expansion; every coefficient must be
/// exactly 1.
pub fn verify_theorem1(k: usize, r: u32, p: u32) -> Result<VerificationReport> {
    let labels = DynkinLabels::fork(Algebra::D, k, r, p)?;
    let oracle = oracle_expansion(&labels, p)?;
    let expected = char_so_even_fork(k, r, p)?;
    Ok(compare(
        "theorem1",
        Params::new().with("k", k as i64).with("r", r).with("p", p),
        oracle,
        expected.label_vec().into_iter(),
    ))
}

/// `so(2k+1)[0,…,0,p]` against the `k × p` rectangle; `so(2k)[0,…,0,p]`
/// (k even) or `so(2k)[0,…,p,0]` (k odd) against the class-`B` labels of
/// `osp(2k|0)`.
pub fn verify_rectangle_characters(series: Series, k: usize, p: u32) -> Result<VerificationReport> {
    let params = Params::new().with("k", k as i64).with("p", p);
    match series {
        Series::B => {
            let labels = DynkinLabels::rectangle(Algebra::B, k, p)?;
            Ok(compare(
                "rectangle-B",
                params,
                oracle_expansion(&labels, p)?,
                char_so_odd(k, p)?.label_vec().into_iter(),
            ))
        }
        Series::D => {
            let r = if k % 2 == 1 { p } else { 0 };
            let labels = DynkinLabels::fork(Algebra::D, k, r, p)?;
            Ok(compare(
                "rectangle-D",
                params,
                oracle_expansion(&labels, p)?,
                char_osp_even(k, 0, p, k as u32 * p)?.label_vec().into_iter(),
            ))
        }
    }
}
