use std::fmt;

use serde_json::{json, Map, Value};

use crate::symfunc::Partition;

/// A parameter value attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Param {
    Int(i64),
    Partition(Vec<u32>),
    Text(String),
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<&Partition> for Param {
    fn from(l: &Partition) -> Self {
        Param::Partition(l.parts().to_vec())
    }
}

impl From<&str> for Param {
    fn from(t: &str) -> Self {
        Param::Text(t.to_string())
    }
}

impl Param {
    fn to_json(&self) -> Value {
        match self {
            Param::Int(v) => json!(v),
            Param::Partition(parts) => json!(parts),
            Param::Text(t) => json!(t),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Partition(parts) => {
                let parts: Vec<String> = parts.iter().map(u32::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Param::Text(t) => f.write_str(t),
        }
    }
}

/// Outcome of checking one instance of an exact identity.
///
/// `lhs` and `rhs` are rendered exactly (rationals as `a/b`); `holds` is set
/// from an exact comparison of the underlying values at construction, so it
/// agrees with `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdentityReport {
    identity: String,
    params: Vec<(String, Param)>,
    lhs: String,
    rhs: String,
    holds: bool,
}

impl IdentityReport {
    pub fn new<T: PartialEq + fmt::Display>(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        lhs: &T,
        rhs: &T,
    ) -> Self {
        IdentityReport {
            identity: identity.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), Param::Int(*v))).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds: lhs == rhs,
        }
    }

    /// Appends a parameter after those given at construction.
    pub fn with_param(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn params(&self) -> &[(String, Param)] {
        &self.params
    }

    pub fn lhs(&self) -> &str {
        &self.lhs
    }

    pub fn rhs(&self) -> &str {
        &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        json!({
            "identity": self.identity,
            "params": params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.identity)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        let rel = if self.holds { "=" } else { "!=" };
        write!(f, ": {} {rel} {}", self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn json_shape() {
        let r = IdentityReport::new("demo", &[("n", 2)], &frac(5, 2), &frac(5, 2));
        assert!(r.holds());
        assert_eq!(
            r.to_json(),
            json!({"identity": "demo", "params": {"n": 2}, "lhs": "5/2", "rhs": "5/2", "holds": true})
        );
        assert_eq!(r.to_string(), "PASS demo n=2: 5/2 = 5/2");
        let labelled = r.with_param("lambda", &Partition::new(vec![2, 1]).unwrap()).with_param("mode", "flat");
        assert_eq!(labelled.to_json()["params"], json!({"n": 2, "lambda": [2, 1], "mode": "flat"}));
        assert_eq!(labelled.to_string(), "PASS demo n=2 lambda=[2,1] mode=flat: 5/2 = 5/2");
    }

    #[test]
    fn failing_report() {
        let r = IdentityReport::new("demo", &[], &frac(1, 2), &frac(1, 3));
        assert!(!r.holds());
        assert_eq!(r.to_string(), "FAIL demo: 1/2 != 1/3");
    }
}
