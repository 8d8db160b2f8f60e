//! `t`-dimension, `t`-superdimension and `q`-dimension of character
//! expansions, and the superdimension identities relating `osp` families to
//! `so` and `osp(1|2k)` families.
//!
//! Specializations read labels through `|λ|` only and drop the prefactor,
//! so the coefficient of `t^d` is `Σ_{|λ| = d} coeff(λ) · dim(λ)`.

mod series;

pub use series::TruncatedSeries;

use std::str::FromStr;

use num_bigint::BigInt;

use crate::character::{
    char_osp1, char_osp_even, char_osp_even_fork_conj, char_osp_odd, char_so_even_fork, char_so_odd,
    CharExpansion, Ranks,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::report::{first_coefficient_mismatch, Params, VerificationReport};
use crate::symfunc::{gl_dim, gl_mn_dim, gl_superdim};

/// Exponent of `q` given to each simple root in the principal
/// specialization. With 1, `dim_q` of `so(2n+1)` equals the coroot product
/// `Π_{α>0} (1 − q^{(Λ+ρ, α^∨)}) / (1 − q^{(ρ, α^∨)})`, which is the same
/// series as the normalized-form product after `q → q²`.
pub const Q_PER_SIMPLE_ROOT: u32 = 1;

/// Default truncation: `max(12, k·p)`.
pub fn default_degree(k: usize, p: u32) -> u32 {
    12.max(k as u32 * p)
}

fn weighted_sum(e: &CharExpansion, degree: u32, weight: impl Fn(&Partition) -> BigInt) -> Result<TruncatedSeries> {
    if !e.covers_degree(degree) {
        return Err(Error::Cutoff {
            cutoff: e.cutoff,
            degree,
        });
    }
    let mut s = TruncatedSeries::zero('t', degree);
    for (lam, c) in &e.terms {
        if lam.weight() <= degree {
            s.add_to(lam.weight(), &(c * weight(lam)));
        }
    }
    Ok(s)
}

/// `dim_t`: `gl(k)` dimensions for the `so` and `osp(1|2n)` families,
/// covariant `gl(m|n)` dimensions for the other `osp` families.
pub fn t_dimension(e: &CharExpansion, degree: u32) -> Result<TruncatedSeries> {
    match e.ranks {
        Ranks::Single(k) => weighted_sum(e, degree, |lam| gl_dim(lam, k)),
        Ranks::Super { m, n } => weighted_sum(e, degree, |lam| gl_mn_dim(lam, m, n)),
    }
}

/// `sdim_t`: every `x` variable goes to `t`, every `y` variable to `−t`.
pub fn t_superdimension(e: &CharExpansion, degree: u32) -> Result<TruncatedSeries> {
    match e.ranks {
        Ranks::Super { m, n } if e.family.is_osp() => weighted_sum(e, degree, |lam| gl_superdim(lam, m, n)),
        _ => Err(Error::Family(e.family.to_string())),
    }
}

/// `dim_q` of `so(2n+1)` with labels `[0,…,0,p]` along the principal
/// gradation, truncated at `degree`.
///
/// `e^{−Λ} ch` sends each label `s_λ(x)` to `s_λ(q, q², …, q^n)` (the label
/// set is closed under complement in the `n × p` rectangle), and the
/// principal value is `q^{|λ| + n(λ)} Π (1 − q^{n+c}) / (1 − q^h)`.
pub fn qdim_so_odd(n: usize, p: u32, degree: u32) -> Result<TruncatedSeries> {
    let e = char_so_odd(n, p)?;
    let mut total = TruncatedSeries::zero('q', degree);
    for lam in e.labels() {
        let conj = lam.conjugate();
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (i, j) in lam.cells() {
            num.push((n as i64 + j as i64 - i as i64) as u32);
            den.push(lam.hook_length(&conj, i, j));
        }
        let shift = lam.weight() as u64 + lam.n_statistic();
        if shift > degree as u64 {
            continue;
        }
        let term = TruncatedSeries::from_product('q', &num, &den, degree)?
            .mul(&TruncatedSeries::monomial('q', shift as u32, degree));
        total = total.add(&term);
    }
    Ok(total.stretch(Q_PER_SIMPLE_ROOT))
}

/// Full degree of `qdim_so_odd(n, p, ·)`: the height of `2Λ`.
pub fn qdim_so_odd_degree(n: usize, p: u32) -> u32 {
    p * (n * (n + 1) / 2) as u32 * Q_PER_SIMPLE_ROOT
}

/// Checks `qdim_so_odd(3, p)` against the closed product for `so(7)`,
/// `Π (1 − q^{p+a}) / Π (1 − q^a)` over `a ∈ {5, 4, 3, 3, 2, 1}`, through
/// the full polynomial degree.
pub fn verify_qdim_so7(p: u32) -> Result<VerificationReport> {
    let degree = qdim_so_odd_degree(3, p);
    let lhs = qdim_so_odd(3, p, degree)?;
    let base = [5u32, 4, 3, 3, 2, 1];
    let shifted: Vec<u32> = base.iter().map(|a| a + p).collect();
    let rhs = TruncatedSeries::from_product('q', &shifted, &base, degree)?;
    Ok(VerificationReport::new(
        "qdim-so7",
        Params::new().with("p", p).with("D", degree),
        first_coefficient_mismatch(lhs.coeffs(), rhs.coeffs()),
    ))
}

/// Superdimension identities between `osp` and `so` / `osp(1|2k)`
/// families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperdimIdentity {
    /// `sdim_t osp(2n+1|2n)[0,…,0,p] = 1`.
    BCase1,
    /// `sdim_t osp(2n+2k+1|2n)[0,…,0,p] = dim_t so(2k+1)[0,…,0,p]`.
    BCase2,
    /// `sdim_t osp(2m+1|2m+2k)[0,…,0,p](t) = dim_t osp(1|2k)[0,…,0,−p](−t)`.
    BCase3,
    /// `sdim_t osp(2n+2k|2n)[0,…,0,p] = dim_t so(2k)[0,…,0,p]`, k even.
    DEven,
    /// `sdim_t osp(2n+2k|2n)[0,…,0,p] = dim_t so(2k)[0,…,p,0]`, k odd.
    DOdd,
    /// `sdim_t` of the conjectured `osp(2n+2k|2n)` fork character equals
    /// `dim_t so(2k)[0,…,r,p−r]`.
    DForkConj,
}

impl SuperdimIdentity {
    pub const ALL: [SuperdimIdentity; 6] = [
        SuperdimIdentity::BCase1,
        SuperdimIdentity::BCase2,
        SuperdimIdentity::BCase3,
        SuperdimIdentity::DEven,
        SuperdimIdentity::DOdd,
        SuperdimIdentity::DForkConj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuperdimIdentity::BCase1 => "B-case1",
            SuperdimIdentity::BCase2 => "B-case2",
            SuperdimIdentity::BCase3 => "B-case3",
            SuperdimIdentity::DEven => "D-even",
            SuperdimIdentity::DOdd => "D-odd",
            SuperdimIdentity::DForkConj => "D-fork-conj",
        }
    }
}

impl FromStr for SuperdimIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuperdimIdentity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// `osp(2m+1|2n)` / `osp(2m|2n)` ranks plus fork labels. `r` is ignored by
/// the rectangle identities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IdentityParams {
    pub m: usize,
    pub n: usize,
    pub r: u32,
    pub p: u32,
}

fn rank_error(id: SuperdimIdentity, why: &str) -> Error {
    Error::InvalidRank(format!("{}: {why}", id.name()))
}

/// Compares the `t`-superdimension of the `osp` side with the `t`-dimension
/// of the matching `so` or `osp(1|2k)` side through degree `degree`.
pub fn verify_superdim_identity(
    id: SuperdimIdentity,
    params: IdentityParams,
    degree: u32,
) -> Result<VerificationReport> {
    let IdentityParams { m, n, r, p } = params;
    let (lhs, rhs) = match id {
        SuperdimIdentity::BCase1 => {
            if m != n {
                return Err(rank_error(id, "needs m = n"));
            }
            (
                t_superdimension(&char_osp_odd(m, n, p, degree)?, degree)?,
                TruncatedSeries::one('t', degree),
            )
        }
        SuperdimIdentity::BCase2 => {
            if m <= n {
                return Err(rank_error(id, "needs m > n"));
            }
            (
                t_superdimension(&char_osp_odd(m, n, p, degree)?, degree)?,
                t_dimension(&char_so_odd(m - n, p)?, degree)?,
            )
        }
        SuperdimIdentity::BCase3 => {
            if n <= m {
                return Err(rank_error(id, "needs n > m"));
            }
            (
                t_superdimension(&char_osp_odd(m, n, p, degree)?, degree)?,
                t_dimension(&char_osp1(n - m, p, degree)?, degree)?.negate_variable(),
            )
        }
        SuperdimIdentity::DEven | SuperdimIdentity::DOdd => {
            if m < n + 2 {
                return Err(rank_error(id, "needs m - n >= 2"));
            }
            let k = m - n;
            let odd = k % 2 == 1;
            if odd != (id == SuperdimIdentity::DOdd) {
                return Err(rank_error(id, "parity of m - n does not match"));
            }
            // [0,…,0,p] is the fork with r = 0, [0,…,p,0] the one with r = p
            let fork_r = if odd { p } else { 0 };
            (
                t_superdimension(&char_osp_even(m, n, p, degree)?, degree)?,
                t_dimension(&char_so_even_fork(k, fork_r, p)?, degree)?,
            )
        }
        SuperdimIdentity::DForkConj => {
            if m < n + 2 {
                return Err(rank_error(id, "needs m - n >= 2"));
            }
            (
                t_superdimension(&char_osp_even_fork_conj(m, n, r, p, degree)?, degree)?,
                t_dimension(&char_so_even_fork(m - n, r, p)?, degree)?,
            )
        }
    };
    let mut ps = Params::new().with("m", m as i64).with("n", n as i64);
    if id == SuperdimIdentity::DForkConj {
        ps = ps.with("r", r);
    }
    ps = ps.with("p", p).with("D", degree);
    Ok(VerificationReport::new(
        id.name(),
        ps,
        first_coefficient_mismatch(lhs.coeffs(), rhs.coeffs()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn t_dimension_examples() {
        assert_eq!(
            ints(&t_dimension(&char_so_odd(3, 2).unwrap(), 6).unwrap()),
            vec![1, 3, 9, 9, 9, 3, 1]
        );
        assert_eq!(
            ints(&t_dimension(&char_osp1(3, 2, 4).unwrap(), 4).unwrap()),
            vec![1, 3, 9, 18, 36]
        );
        assert_eq!(ints(&t_dimension(&char_so_odd(3, 0).unwrap(), 3).unwrap()), vec![1, 0, 0, 0]);
    }

    #[test]
    fn cutoff_error_for_truncated_families() {
        let e = char_osp1(3, 2, 4).unwrap();
        assert_eq!(
            t_dimension(&e, 6).unwrap_err(),
            Error::Cutoff { cutoff: 4, degree: 6 }
        );
    }

    #[test]
    fn t_superdimension_examples() {
        for p in 0..=3 {
            assert_eq!(
                ints(&t_superdimension(&char_osp_odd(2, 2, p, 6).unwrap(), 6).unwrap()),
                vec![1, 0, 0, 0, 0, 0, 0]
            );
        }
        assert_eq!(
            ints(&t_superdimension(&char_osp_odd(2, 1, 2, 2).unwrap(), 2).unwrap()),
            vec![1, 1, 1]
        );
        assert_eq!(
            ints(&t_superdimension(&char_osp_even(3, 1, 1, 2).unwrap(), 2).unwrap()),
            vec![1, 0, 1]
        );
        assert!(matches!(
            t_superdimension(&char_so_odd(2, 1).unwrap(), 2),
            Err(Error::Family(_))
        ));
    }

    #[test]
    fn osp_t_dimension_uses_covariant_dims() {
        // osp(3|2) [0,1]: labels (1^j), gl(1|1) dims 1, 2, 2, 2, ...
        let e = char_osp_odd(1, 1, 1, 4).unwrap();
        assert_eq!(ints(&t_dimension(&e, 4).unwrap()), vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn qdim_examples() {
        let q1 = qdim_so_odd(3, 1, 6).unwrap();
        let product =
            TruncatedSeries::from_product('q', &[6, 5, 4, 4, 3, 2], &[5, 4, 3, 3, 2, 1], 6).unwrap();
        assert_eq!(q1, product);
        assert_eq!(ints(&q1), vec![1, 1, 1, 2, 1, 1, 1]);
        assert_eq!(qdim_so_odd(3, 1, 6).unwrap().sum(), BigInt::from(8));
        assert_eq!(qdim_so_odd(3, 2, 12).unwrap().sum(), BigInt::from(35));
        assert_eq!(ints(&qdim_so_odd(4, 0, 3).unwrap()), vec![1, 0, 0, 0]);
        assert_eq!(qdim_so_odd_degree(3, 2), 12);
    }

    #[test]
    fn identity_examples() {
        let b2 = verify_superdim_identity(
            SuperdimIdentity::BCase2,
            IdentityParams { m: 2, n: 1, r: 0, p: 2 },
            4,
        )
        .unwrap();
        assert!(b2.passed(), "{b2}");
        let b3 = verify_superdim_identity(
            SuperdimIdentity::BCase3,
            IdentityParams { m: 1, n: 2, r: 0, p: 1 },
            6,
        )
        .unwrap();
        assert!(b3.passed(), "{b3}");
        let lhs = t_superdimension(&char_osp_odd(1, 2, 1, 6).unwrap(), 6).unwrap();
        assert_eq!(ints(&lhs), vec![1, -1, 1, -1, 1, -1, 1]);
        let conj = verify_superdim_identity(
            SuperdimIdentity::DForkConj,
            IdentityParams { m: 3, n: 1, r: 1, p: 2 },
            8,
        )
        .unwrap();
        assert!(conj.passed(), "{conj}");
    }

    #[test]
    fn identity_rank_checks() {
        let bad = |id, m, n| verify_superdim_identity(id, IdentityParams { m, n, r: 0, p: 1 }, 4);
        assert!(matches!(bad(SuperdimIdentity::BCase1, 2, 1), Err(Error::InvalidRank(_))));
        assert!(matches!(bad(SuperdimIdentity::BCase2, 1, 1), Err(Error::InvalidRank(_))));
        assert!(matches!(bad(SuperdimIdentity::BCase3, 2, 1), Err(Error::InvalidRank(_))));
        assert!(matches!(bad(SuperdimIdentity::DEven, 4, 1), Err(Error::InvalidRank(_))));
        assert!(matches!(bad(SuperdimIdentity::DOdd, 4, 2), Err(Error::InvalidRank(_))));
        assert_eq!(
            "nope".parse::<SuperdimIdentity>().unwrap_err(),
            Error::UnknownIdentity("nope".into())
        );
        assert_eq!("D-fork-conj".parse::<SuperdimIdentity>().unwrap(), SuperdimIdentity::DForkConj);
    }
}
