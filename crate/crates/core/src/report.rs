use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

fn big_str<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// First point at which two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    Coefficient {
        degree: u32,
        #[serde(serialize_with = "big_str")]
        lhs: BigInt,
        #[serde(serialize_with = "big_str")]
        rhs: BigInt,
    },
    Label {
        partition: Partition,
        #[serde(serialize_with = "big_str")]
        lhs: BigInt,
        #[serde(serialize_with = "big_str")]
        rhs: BigInt,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Coefficient { degree, lhs, rhs } => {
                write!(f, "degree {degree}: lhs {lhs} != rhs {rhs}")
            }
            Mismatch::Label { partition, lhs, rhs } => {
                write!(f, "label {partition}: lhs {lhs} != rhs {rhs}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    /// Parameter names and values, in a fixed order.
    pub params: Params,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, params: Params, first_mismatch: Option<Mismatch>) -> Self {
        let status = if first_mismatch.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        VerificationReport {
            identity: identity.into(),
            params,
            status,
            first_mismatch,
            warnings: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_warning(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} {}", self.identity, self.params)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " [{m}]")?;
        }
        for w in &self.warnings {
            write!(f, " (warning: {w})")?;
        }
        Ok(())
    }
}

/// Ordered `name = value` pairs. Serializes as a JSON object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(String, i64)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, value: impl Into<i64>) -> Self {
        self.0.push((name.to_string(), value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Compares two coefficient lists position by position.
pub fn first_coefficient_mismatch(lhs: &[BigInt], rhs: &[BigInt]) -> Option<Mismatch> {
    let zero = BigInt::from(0);
    let len = lhs.len().max(rhs.len());
    (0..len).find_map(|d| {
        let a = lhs.get(d).unwrap_or(&zero);
        let b = rhs.get(d).unwrap_or(&zero);
        (a != b).then(|| Mismatch::Coefficient {
            degree: d as u32,
            lhs: a.clone(),
            rhs: b.clone(),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = VerificationReport::new(
            "B-case2",
            Params::new().with("m", 2).with("n", 1).with("p", 2),
            Some(Mismatch::Coefficient {
                degree: 3,
                lhs: BigInt::from(4),
                rhs: BigInt::from(-1),
            }),
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"identity":"B-case2","params":{"m":2,"n":1,"p":2},"status":"fail","first_mismatch":{"kind":"coefficient","degree":3,"lhs":"4","rhs":"-1"}}"#
        );
        assert!(!r.passed());
    }

    #[test]
    fn coefficient_lists_pad_with_zero() {
        let a = vec![BigInt::from(1), BigInt::from(0)];
        let b = vec![BigInt::from(1)];
        assert_eq!(first_coefficient_mismatch(&a, &b), None);
        let c = vec![BigInt::from(1), BigInt::from(2)];
        assert!(matches!(
            first_coefficient_mismatch(&c, &b),
            Some(Mismatch::Coefficient { degree: 1, .. })
        ));
    }
}
