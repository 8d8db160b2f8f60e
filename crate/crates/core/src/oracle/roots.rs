use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    /// `so(2k+1)`
    B,
    /// `so(2k)`
    D,
}

/// A weight in ε-coordinates, stored doubled so half-integers are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight(doubled)
    }

    /// Fails unless every coordinate lies in `½ℤ`.
    pub fn from_rationals(coords: &[BigRational]) -> Result<Self> {
        coords
            .iter()
            .map(|c| {
                let d = c * BigRational::from_integer(BigInt::from(2));
                if d.is_integer() {
                    i64::try_from(d.to_integer()).map_err(|_| Error::NondominantWeight(c.to_string()))
                } else {
                    Err(Error::NondominantWeight(format!("{c} is not in ½ℤ")))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|&d| BigRational::new(BigInt::from(d), BigInt::from(2)))
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_rationals().iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Root data for `B_k` / `D_k` with the standard dot product on
/// ε-coordinates.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub series: Series,
    pub rank: usize,
    /// Positive roots, integer ε-coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Simple roots `ε_1 − ε_2, …, ε_{k−1} − ε_k` followed by `ε_k` (B) or
    /// `ε_{k−1} + ε_k` (D).
    pub simple_roots: Vec<Vec<i64>>,
    pub rho: Weight,
}

impl RootSystemData {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let min = match series {
            Series::B => 1,
            Series::D => 2,
        };
        if rank < min {
            return Err(Error::InvalidRank(format!("{series:?}_{rank}")));
        }
        let unit = |i: usize| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        };
        let combine = |i: usize, j: usize, s: i64| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v[j] = s;
            v
        };
        let mut positive_roots = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                positive_roots.push(combine(i, j, -1));
                positive_roots.push(combine(i, j, 1));
            }
            if series == Series::B {
                positive_roots.push(unit(i));
            }
        }
        let mut simple_roots: Vec<Vec<i64>> = (0..rank - 1).map(|i| combine(i, i + 1, -1)).collect();
        simple_roots.push(match series {
            Series::B => unit(rank - 1),
            Series::D => combine(rank - 2, rank - 1, 1),
        });
        // doubled ρ: B has ρ_i = k − i + ½, D has ρ_i = k − i (1-based i)
        let rho = (0..rank as i64)
            .map(|i| match series {
                Series::B => 2 * (rank as i64 - i) - 1,
                Series::D => 2 * (rank as i64 - i - 1),
            })
            .collect();
        Ok(RootSystemData {
            series,
            rank,
            positive_roots,
            simple_roots,
            rho: Weight(rho),
        })
    }

    /// All coordinates integral or all in `ℤ + ½`.
    pub fn is_integral(&self, w: &Weight) -> bool {
        w.rank() == self.rank && w.0.iter().all(|d| (d - w.0[0]).rem_euclid(2) == 0)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        let v = &w.0;
        let chain = v.windows(2).take(self.rank.saturating_sub(2)).all(|p| p[0] >= p[1]);
        let k = self.rank;
        match self.series {
            Series::B => chain && (k < 2 || v[k - 2] >= v[k - 1]) && v[k - 1] >= 0,
            Series::D => chain && v[k - 2] >= v[k - 1].abs(),
        }
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut v: Vec<i64> = w.0.iter().map(|c| c.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        if self.series == Series::D {
            let negatives = w.0.iter().filter(|&&c| c < 0).count();
            if negatives % 2 == 1 && w.0.iter().all(|&c| c != 0) {
                let last = v.len() - 1;
                v[last] = -v[last];
            }
        }
        Weight(v)
    }

    /// Coefficients of a (doubled) root-lattice vector in the simple roots,
    /// or `None` when they are not all integers.
    pub fn simple_root_coefficients(&self, doubled: &[i64]) -> Option<Vec<i64>> {
        let k = self.rank;
        let mut partial = Vec::with_capacity(k);
        let mut s = 0;
        for &d in doubled {
            s += d;
            partial.push(s);
        }
        // doubled coefficients first
        let mut twice: Vec<i64> = partial.clone();
        if self.series == Series::D {
            twice[k - 2] = (partial[k - 2] - doubled[k - 1]) / 2;
            twice[k - 1] = partial[k - 1] / 2;
            if (partial[k - 2] - doubled[k - 1]) % 2 != 0 || partial[k - 1] % 2 != 0 {
                return None;
            }
        }
        twice
            .into_iter()
            .map(|c| (c % 2 == 0).then_some(c / 2))
            .collect()
    }

    /// `a ≥ b` in dominance order: `a − b` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominates(&self, a: &Weight, b: &Weight) -> bool {
        let diff: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect();
        self.simple_root_coefficients(&diff)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Height of `a − b` in simple roots.
    pub fn level(&self, a: &Weight, b: &Weight) -> Option<i64> {
        let diff: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect();
        self.simple_root_coefficients(&diff).map(|c| c.iter().sum())
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
