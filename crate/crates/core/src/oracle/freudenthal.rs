use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::roots::{dot, RootSystemData, Series, Weight};
use crate::error::{Error, Result};

/// Weight multiplicities of the irreducible module with a given highest
/// weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    pub series: Series,
    pub highest: Weight,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightMultiplicityTable {
    pub fn total(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.multiplicities.get(w).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.highest.rank()
    }
}

fn check_highest(rs: &RootSystemData, hw: &Weight) -> Result<()> {
    if !rs.is_integral(hw) || !rs.is_dominant(hw) {
        return Err(Error::NondominantWeight(hw.to_string()));
    }
    Ok(())
}

/// Freudenthal recursion over dominant weights, processed by increasing
/// depth below the highest weight, then spread over Weyl orbits.
pub fn freudenthal_table(series: Series, k: usize, hw: &Weight) -> Result<WeightMultiplicityTable> {
    let rs = RootSystemData::new(series, k)?;
    check_highest(&rs, hw)?;

    // every weight of the module, by simple-root descent from the top
    let mut seen: HashSet<Weight> = HashSet::from([hw.clone()]);
    let mut queue = VecDeque::from([hw.clone()]);
    while let Some(w) = queue.pop_front() {
        for a in &rs.simple_roots {
            let next = Weight(w.0.iter().zip(a).map(|(x, y)| x - 2 * y).collect());
            if seen.contains(&next) {
                continue;
            }
            if rs.dominates(hw, &rs.dominant_conjugate(&next)) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    let mut dominant: Vec<Weight> = seen.iter().filter(|w| rs.is_dominant(w)).cloned().collect();
    dominant.sort_by_key(|w| (rs.level(hw, w).expect("weights lie in hw − Q"), w.clone()));

    // doubled coordinates: ((L+R)² − (M+R)²) m(M) = 4 Σ_α Σ_j (M + 2jα, α) m(M + 2jα)
    let shifted_norm = |w: &Weight| {
        let v: Vec<i64> = w.0.iter().zip(&rs.rho.0).map(|(x, r)| x + r).collect();
        dot(&v, &v) as i128
    };
    let top_norm = shifted_norm(hw);
    let mut dominant_mult: HashMap<Weight, u64> = HashMap::new();
    for mu in &dominant {
        if mu == hw {
            dominant_mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc: i128 = 0;
        for a in &rs.positive_roots {
            let mut j = 1;
            loop {
                let up = Weight(mu.0.iter().zip(a).map(|(x, y)| x + 2 * j * y).collect());
                let rep = rs.dominant_conjugate(&up);
                let Some(&m) = dominant_mult.get(&rep) else {
                    if !seen.contains(&up) {
                        break;
                    }
                    unreachable!("dominant weights are processed top-down");
                };
                acc += dot(&up.0, a) as i128 * m as i128;
                j += 1;
            }
        }
        let denom = top_norm - shifted_norm(mu);
        let num = 4 * acc;
        assert!(denom > 0 && num % denom == 0, "Freudenthal step not integral at {mu}");
        dominant_mult.insert(mu.clone(), (num / denom) as u64);
    }

    let multiplicities = seen
        .into_iter()
        .map(|w| {
            let m = dominant_mult[&rs.dominant_conjugate(&w)];
            (w, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect();
    Ok(WeightMultiplicityTable {
        series,
        highest: hw.clone(),
        multiplicities,
    })
}

/// Weyl dimension formula `Π_{α>0} (Λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(series: Series, k: usize, hw: &Weight) -> Result<BigInt> {
    let rs = RootSystemData::new(series, k)?;
    check_highest(&rs, hw)?;
    let lr: Vec<i64> = hw.0.iter().zip(&rs.rho.0).map(|(x, r)| x + r).collect();
    let mut value = BigRational::one();
    for a in &rs.positive_roots {
        value *= BigRational::new(BigInt::from(dot(&lr, a)), BigInt::from(dot(&rs.rho.0, a)));
    }
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(doubled: &[i64]) -> Weight {
        Weight(doubled.to_vec())
    }

    #[test]
    fn spinor_of_so8() {
        let t = freudenthal_table(Series::D, 4, &w(&[1, 1, 1, 1])).unwrap();
        assert_eq!(t.multiplicities.len(), 8);
        assert_eq!(t.total(), 8);
        for (wt, m) in &t.multiplicities {
            assert_eq!(*m, 1);
            assert!(wt.0.iter().all(|c| c.abs() == 1));
            assert_eq!(wt.0.iter().filter(|&&c| c < 0).count() % 2, 0);
        }
    }

    #[test]
    fn so7_examples() {
        let t = freudenthal_table(Series::B, 3, &w(&[2, 2, 2])).unwrap();
        assert_eq!(t.total(), 35);
        assert_eq!(weyl_dim(Series::B, 3, &w(&[2, 2, 2])).unwrap(), BigInt::from(35));
        assert_eq!(weyl_dim(Series::B, 3, &w(&[1, 1, 1])).unwrap(), BigInt::from(8));
        // adjoint of so(7): zero weight has multiplicity 3
        let adj = freudenthal_table(Series::B, 3, &w(&[2, 2, 0])).unwrap();
        assert_eq!(adj.total(), 21);
        assert_eq!(adj.get(&w(&[0, 0, 0])), 3);
    }

    #[test]
    fn so8_symmetric_square_of_spinor() {
        assert_eq!(weyl_dim(Series::D, 4, &w(&[2, 2, 2, 2])).unwrap(), BigInt::from(35));
        let t = freudenthal_table(Series::D, 4, &w(&[2, 2, 2, 2])).unwrap();
        assert_eq!(t.total(), 35);
    }

    #[test]
    fn trivial_module() {
        for (s, k) in [(Series::B, 2), (Series::D, 3)] {
            let t = freudenthal_table(s, k, &Weight(vec![0; k])).unwrap();
            assert_eq!(t.multiplicities.len(), 1);
            assert_eq!(t.get(&Weight(vec![0; k])), 1);
            assert_eq!(weyl_dim(s, k, &Weight(vec![0; k])).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn rejects_nondominant() {
        assert!(matches!(
            freudenthal_table(Series::B, 2, &w(&[0, 2])),
            Err(Error::NondominantWeight(_))
        ));
        assert!(matches!(
            freudenthal_table(Series::D, 3, &w(&[2, 1, 1])),
            Err(Error::NondominantWeight(_))
        ));
        assert!(weyl_dim(Series::B, 2, &w(&[1, 3])).is_err());
    }
}
