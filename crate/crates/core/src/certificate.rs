use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Which procedure produced a deletion set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dp,
    Brute,
    Peel,
    Girth5,
    Theorem2,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Method::Dp => "dp",
            Method::Brute => "brute",
            Method::Peel => "peel",
            Method::Girth5 => "girth5",
            Method::Theorem2 => "theorem2",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("G - X has {order} vertices but only {count} of maximum degree {degree} (k = {k})")]
    TooFewWitnesses { order: usize, count: usize, degree: usize, k: usize },
    #[error("recorded evidence does not match G - X: {0}")]
    Mismatch(String),
}

/// A deletion set `X` (original vertex ids) with the evidence that `G - X`
/// has `k` vertices of maximum degree, or fewer than `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalCertificate {
    pub removed: Vec<usize>,
    pub residual_max_degree: Option<usize>,
    /// Every vertex of `G - X` attaining `residual_max_degree`, ascending.
    pub witnesses: Vec<usize>,
    pub order_below_k: bool,
    pub method: Method,
}

impl RemovalCertificate {
    /// Builds and checks a certificate for deleting `removed` from `g`.
    pub fn build(
        g: &Graph,
        removed: impl IntoIterator<Item = usize>,
        k: usize,
        method: Method,
    ) -> Result<Self, CertificateError> {
        let mut removed: Vec<usize> = removed.into_iter().collect();
        removed.sort_unstable();
        removed.dedup();
        let degrees = g.residual_degrees(&removed)?;
        let order = degrees.iter().flatten().count();
        if order < k {
            return Ok(RemovalCertificate {
                removed,
                residual_max_degree: None,
                witnesses: Vec::new(),
                order_below_k: true,
                method,
            });
        }
        let top = degrees.iter().flatten().copied().max().unwrap_or(0);
        let witnesses: Vec<usize> = (0..g.order()).filter(|&v| degrees[v] == Some(top)).collect();
        if witnesses.len() < k {
            return Err(CertificateError::TooFewWitnesses {
                order,
                count: witnesses.len(),
                degree: top,
                k,
            });
        }
        Ok(RemovalCertificate {
            removed,
            residual_max_degree: Some(top),
            witnesses,
            order_below_k: false,
            method,
        })
    }

    pub fn size(&self) -> usize {
        self.removed.len()
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &Graph, k: usize) -> Result<(), CertificateError> {
        let fresh = RemovalCertificate::build(g, self.removed.iter().copied(), k, self.method)?;
        if fresh.removed.len() != self.removed.len() {
            return Err(CertificateError::Mismatch("deletion set has repeated vertices".into()));
        }
        if fresh != *self {
            return Err(CertificateError::Mismatch(format!(
                "expected degree {:?} with witnesses {:?}, recorded {:?} with {:?}",
                fresh.residual_max_degree,
                fresh.witnesses,
                self.residual_max_degree,
                self.witnesses
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_validates() {
        let g = Graph::star(3);
        let c = RemovalCertificate::build(&g, [0], 3, Method::Brute).unwrap();
        assert_eq!(c.residual_max_degree, Some(0));
        assert_eq!(c.witnesses, vec![1, 2, 3]);
        assert!(c.validate(&g, 3).is_ok());
        assert!(matches!(
            RemovalCertificate::build(&g, [], 2, Method::Brute),
            Err(CertificateError::TooFewWitnesses { .. })
        ));
    }

    #[test]
    fn order_below_k() {
        let g = Graph::path(4);
        let c = RemovalCertificate::build(&g, [3, 2], 3, Method::Dp).unwrap();
        assert!(c.order_below_k);
        assert_eq!(c.removed, vec![2, 3]);
        assert_eq!(c.residual_max_degree, None);
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = Graph::star(3);
        let mut c = RemovalCertificate::build(&g, [0], 3, Method::Brute).unwrap();
        c.witnesses.pop();
        assert!(c.validate(&g, 3).is_err());
        let mut c = RemovalCertificate::build(&g, [0], 3, Method::Brute).unwrap();
        c.removed.clear();
        assert!(c.validate(&g, 3).is_err());
    }
}
